#include <CLI11.hpp>
#include <functional>
#include <chrono>
#include <fstream>
#include <iostream>

#include "lindel/report.hpp"

using namespace lindel;

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open file: " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

int emit(CommandResult r, bool timing, std::chrono::steady_clock::time_point t0) {
  if (timing) {
    auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                  std::chrono::steady_clock::now() - t0)
                  .count();
    r.report["timing_ms"] = (long)ms;
  }
  std::cout << r.report.dump(2) << "\n";
  return r.exit_code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact computer algebra for linearity defect, Koszulness, and stretched rings"};
  app.require_subcommand(1);

  CommandOptions opt;
  bool timing = false;
  app.add_option("--seed", opt.seed, "seed for randomized searches");
  app.add_option("--field", opt.field_override, "coefficient field override: Q or F<p>");
  app.add_option("--budget-degree", opt.budget.max_degree, "degree budget for basis computations");
  app.add_option("--budget-basis", opt.budget.max_basis, "basis size budget");
  app.add_option("--budget-pairs", opt.budget.max_pairs, "pair budget");
  app.add_flag("--timing", timing, "include timing_ms in the report");

  std::string ring_file, filt_file, element, module = "k";
  int bound = 5, dbound = 8, sbound = 0, h = 2, tau = 1, s = 2, hmax = 4, smax = 3;
  bool strong = false;
  std::vector<int> semigroup_gens;

  auto* c_analyze = app.add_subcommand("analyze", "numerical invariants of a ring");
  c_analyze->add_option("ring", ring_file, "ring file")->required();

  auto* c_koszul = app.add_subcommand("koszul", "bounded Koszulness check");
  c_koszul->add_option("ring", ring_file)->required();
  c_koszul->add_option("--bound", bound, "homological bound");

  auto* c_lind = app.add_subcommand("lind", "bounded linearity defect");
  c_lind->add_option("ring", ring_file)->required();
  c_lind->add_option("--module", module, "module: k or m");
  c_lind->add_option("--bound", bound, "homological bound");

  auto* c_golod = app.add_subcommand("golod", "Golod test against the Serre bound");
  c_golod->add_option("ring", ring_file)->required();
  c_golod->add_option("--bound", bound, "series comparison bound");
  c_golod->add_option("--dbound", dbound, "internal degree bound for Koszul homology");

  auto* c_betti = app.add_subcommand("betti", "Betti table of the residue field");
  c_betti->add_option("ring", ring_file)->required();
  c_betti->add_option("--bound", bound, "homological bound");
  c_betti->add_option("--dbound", dbound, "internal degree bound");

  auto* c_filt = app.add_subcommand("filtration", "Koszul filtration verification");
  auto* c_verify = c_filt->add_subcommand("verify", "verify a (weak) Koszul filtration");
  c_verify->add_option("ring", ring_file)->required();
  c_verify->add_option("filtration", filt_file, "filtration file")->required();
  c_verify->add_flag("--strong", strong, "verify the strong (all s) condition");
  c_verify->add_option("--sbound", sbound, "s range for the strong check (graded case)");
  auto* c_lift = c_filt->add_subcommand("lift", "lift a filtration of R/(y) to R");
  c_lift->add_option("ring", ring_file)->required();
  c_lift->add_option("--element", element, "the element y")->required();
  c_lift->add_option("filtration", filt_file, "filtration of R/(y)")->required();

  auto* c_str = app.add_subcommand("stretched", "g-stretched classification and structure");
  auto* c_classify = c_str->add_subcommand("classify", "numerical Koszulness prediction");
  c_classify->add_option("ring", ring_file)->required();
  auto* c_qn = c_str->add_subcommand("qn", "I = Q*n structure decomposition");
  c_qn->add_option("ring", ring_file)->required();
  auto* c_ev = c_str->add_subcommand("ev", "Elias-Valla normal form");
  c_ev->set_help_flag("--help", "print help");
  c_ev->add_option("--h", h, "embedding dimension")->required();
  c_ev->add_option("--tau", tau, "type")->required();
  c_ev->add_option("--s", s, "socle degree")->required();

  auto* c_semi = app.add_subcommand("semigroup", "numerical semigroup ring pipeline");
  c_semi->add_option("generators", semigroup_gens, "semigroup generators")->required();

  auto* c_sweep = app.add_subcommand("sweep", "parameter sweeps");
  auto* c_sweep_ev = c_sweep->add_subcommand("ev", "classifier vs direct check on EV rings");
  c_sweep_ev->add_option("--hmax", hmax, "max embedding dimension");
  c_sweep_ev->add_option("--smax", smax, "max socle degree");
  c_sweep_ev->add_option("--bound", bound, "homological bound for the direct check");

  auto* c_repro = app.add_subcommand("repro", "re-run the full example suite");
  (void)c_repro;

  // allow the global flags (--seed, --field, budgets, --timing) after subcommands
  std::function<void(CLI::App*)> enable_fallthrough = [&](CLI::App* a) {
    for (CLI::App* sub : a->get_subcommands({})) {
      sub->fallthrough(true);
      enable_fallthrough(sub);
    }
  };
  enable_fallthrough(&app);

  CLI11_PARSE(app, argc, argv);
  auto t0 = std::chrono::steady_clock::now();

  try {
    if (app.got_subcommand(c_analyze))
      return emit(cmd_analyze(slurp(ring_file), opt), timing, t0);
    if (app.got_subcommand(c_koszul))
      return emit(cmd_koszul(slurp(ring_file), bound, opt), timing, t0);
    if (app.got_subcommand(c_lind))
      return emit(cmd_lind(slurp(ring_file), module, bound, opt), timing, t0);
    if (app.got_subcommand(c_golod))
      return emit(cmd_golod(slurp(ring_file), bound, dbound, opt), timing, t0);
    if (app.got_subcommand(c_betti))
      return emit(cmd_betti(slurp(ring_file), bound, dbound, opt), timing, t0);
    if (app.got_subcommand(c_filt)) {
      if (c_filt->got_subcommand(c_verify))
        return emit(cmd_filtration_verify(slurp(ring_file), slurp(filt_file), strong, sbound, opt),
                    timing, t0);
      if (c_filt->got_subcommand(c_lift))
        return emit(cmd_filtration_lift(slurp(ring_file), element, slurp(filt_file), opt),
                    timing, t0);
    }
    if (app.got_subcommand(c_str)) {
      if (c_str->got_subcommand(c_classify))
        return emit(cmd_classify(slurp(ring_file), opt), timing, t0);
      if (c_str->got_subcommand(c_qn)) return emit(cmd_qn(slurp(ring_file), opt), timing, t0);
      if (c_str->got_subcommand(c_ev)) return emit(cmd_ev(h, tau, s, opt), timing, t0);
    }
    if (app.got_subcommand(c_semi))
      return emit(cmd_semigroup(semigroup_gens, opt), timing, t0);
    if (app.got_subcommand(c_sweep) && c_sweep->got_subcommand(c_sweep_ev))
      return emit(cmd_sweep_ev(hmax, smax, bound, opt), timing, t0);
    if (app.got_subcommand(c_repro)) return emit(cmd_repro(opt), timing, t0);
    std::cerr << "no subcommand selected\n";
    return 2;
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const BudgetError& e) {
    std::cerr << "budget error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
