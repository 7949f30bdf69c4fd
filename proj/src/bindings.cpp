#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "lindel/report.hpp"

namespace py = pybind11;
using namespace lindel;

namespace {

CommandOptions options(uint64_t seed, const std::string& field) {
  CommandOptions opt;
  opt.seed = seed;
  opt.field_override = field;
  return opt;
}

std::string dump(const CommandResult& r) { return r.report.dump(); }

}  // namespace

PYBIND11_MODULE(_lindel, m) {
  m.doc() = "exact computer algebra for linearity defect, Koszulness, and stretched rings";
  m.attr("__version__") = "0.1.0";

  m.def("parse_ring", [](const std::string& text) {
    return parse_ring(text).str();
  }, py::arg("text"), "parse and normalize a ring presentation");

  m.def("analyze", [](const std::string& ring, uint64_t seed, const std::string& field) {
    return dump(cmd_analyze(ring, options(seed, field)));
  }, py::arg("ring"), py::arg("seed") = 0, py::arg("field") = "");

  m.def("koszul", [](const std::string& ring, int bound, uint64_t seed,
                     const std::string& field) {
    return dump(cmd_koszul(ring, bound, options(seed, field)));
  }, py::arg("ring"), py::arg("bound") = 5, py::arg("seed") = 0, py::arg("field") = "");

  m.def("lind", [](const std::string& ring, const std::string& module, int bound,
                   uint64_t seed, const std::string& field) {
    return dump(cmd_lind(ring, module, bound, options(seed, field)));
  }, py::arg("ring"), py::arg("module") = "k", py::arg("bound") = 5, py::arg("seed") = 0,
     py::arg("field") = "");

  m.def("golod", [](const std::string& ring, int bound, int dbound, uint64_t seed,
                    const std::string& field) {
    return dump(cmd_golod(ring, bound, dbound, options(seed, field)));
  }, py::arg("ring"), py::arg("bound") = 5, py::arg("dbound") = 8, py::arg("seed") = 0,
     py::arg("field") = "");

  m.def("betti", [](const std::string& ring, int bound, int dbound, uint64_t seed,
                    const std::string& field) {
    return dump(cmd_betti(ring, bound, dbound, options(seed, field)));
  }, py::arg("ring"), py::arg("bound") = 5, py::arg("dbound") = 8, py::arg("seed") = 0,
     py::arg("field") = "");

  m.def("filtration_verify", [](const std::string& ring, const std::string& filtration,
                                bool strong, int sbound, uint64_t seed,
                                const std::string& field) {
    return dump(cmd_filtration_verify(ring, filtration, strong, sbound, options(seed, field)));
  }, py::arg("ring"), py::arg("filtration"), py::arg("strong") = false, py::arg("sbound") = 0,
     py::arg("seed") = 0, py::arg("field") = "");

  m.def("filtration_lift", [](const std::string& ring, const std::string& element,
                              const std::string& filtration, uint64_t seed,
                              const std::string& field) {
    return dump(cmd_filtration_lift(ring, element, filtration, options(seed, field)));
  }, py::arg("ring"), py::arg("element"), py::arg("filtration"), py::arg("seed") = 0,
     py::arg("field") = "");

  m.def("stretched_classify", [](const std::string& ring, uint64_t seed,
                                 const std::string& field) {
    return dump(cmd_classify(ring, options(seed, field)));
  }, py::arg("ring"), py::arg("seed") = 0, py::arg("field") = "");

  m.def("stretched_qn", [](const std::string& ring, uint64_t seed, const std::string& field) {
    return dump(cmd_qn(ring, options(seed, field)));
  }, py::arg("ring"), py::arg("seed") = 0, py::arg("field") = "");

  m.def("stretched_ev", [](int h, int tau, int s, uint64_t seed, const std::string& field) {
    return dump(cmd_ev(h, tau, s, options(seed, field)));
  }, py::arg("h"), py::arg("tau"), py::arg("s"), py::arg("seed") = 0, py::arg("field") = "");

  m.def("semigroup", [](const std::vector<int>& gens, uint64_t seed,
                        const std::string& field) {
    return dump(cmd_semigroup(gens, options(seed, field)));
  }, py::arg("generators"), py::arg("seed") = 0, py::arg("field") = "");

  m.def("sweep_ev", [](int hmax, int smax, int bound, uint64_t seed,
                       const std::string& field) {
    return dump(cmd_sweep_ev(hmax, smax, bound, options(seed, field)));
  }, py::arg("hmax") = 4, py::arg("smax") = 3, py::arg("bound") = 4, py::arg("seed") = 0,
     py::arg("field") = "");

  m.def("repro", [](uint64_t seed) {
    CommandResult r = cmd_repro(options(seed, ""));
    return dump(r);
  }, py::arg("seed") = 0);

  py::register_exception<BudgetError>(m, "BudgetError");
  py::register_exception<UnsupportedError>(m, "UnsupportedError");
  py::register_exception<PreconditionError>(m, "PreconditionError");
}
