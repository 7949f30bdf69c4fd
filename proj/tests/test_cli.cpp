#define DOCTEST_CONFIG_IMPLEMENT
#include <doctest.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

namespace {

std::string g_cli;
std::string g_golden_dir;

struct RunResult {
  int exit_code;
  std::string out;
};

RunResult run(const std::string& args) {
  std::string cmd = g_cli + " " + args + " 2>/dev/null";
  std::array<char, 4096> buf{};
  std::string out;
  FILE* p = popen(cmd.c_str(), "r");
  REQUIRE(p != nullptr);
  size_t got;
  while ((got = fread(buf.data(), 1, buf.size(), p)) > 0) out.append(buf.data(), got);
  int status = pclose(p);
  int code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return RunResult{code, out};
}

std::string write_temp(const std::string& name, const std::string& content) {
  std::string path = std::string("/tmp/lindel_cli_") + name;
  std::ofstream f(path);
  f << content;
  return path;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  REQUIRE(in.good());
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

}  // namespace

TEST_CASE("exit codes separate yes / mathematical no / errors") {
  std::string koszul_ring = write_temp("xy.ring", "ring Q[x,y]; ideal I = x*y;");
  std::string bad_ring = write_temp("bad.ring", "ring Q[x,y]; ideal I = x*y +;");
  std::string notk_ring = write_temp("notk.ring", "ring Q[x,y]; ideal I = x*y, y^2, x^4;");
  std::string stretched_ring = write_temp("s.ring", "ring Q[x,y]; ideal I = x^3, x*y, y^2;");

  CHECK(run("koszul " + koszul_ring + " --bound 5").exit_code == 0);
  CHECK(run("koszul " + notk_ring + " --bound 5").exit_code == 1);
  CHECK(run("koszul " + bad_ring).exit_code == 2);
  CHECK(run("stretched classify " + stretched_ring).exit_code == 1);
  CHECK(run("repro").exit_code == 0);
}

TEST_CASE("reports are byte-identical for identical inputs and seeds") {
  std::string ring = write_temp("det.ring", "ring Q[x,y,z]; ideal I = x*z, y*z, y^4, z^2;");
  RunResult a = run("koszul " + ring + " --bound 5 --seed 7");
  RunResult b = run("koszul " + ring + " --bound 5 --seed 7");
  CHECK(a.out == b.out);
  CHECK(!a.out.empty());
  RunResult c = run("semigroup 4 5 11");
  RunResult d = run("semigroup 4 5 11");
  CHECK(c.out == d.out);
}

TEST_CASE("golden files") {
  std::string ring = write_temp("golden1.ring", "ring Q[x,y,z]; ideal I = x*z, y*z, y^4, z^2;");
  RunResult a = run("koszul " + ring + " --bound 5");
  CHECK(a.out == slurp(g_golden_dir + "/koszul_section3.json"));
  std::string ring2 = write_temp("golden2.ring", "ring Q[x,y]; ideal I = x^2, y^2;");
  RunResult b = run("analyze " + ring2);
  CHECK(b.out == slurp(g_golden_dir + "/analyze_x2y2.json"));
}

TEST_CASE("filtration verify via files") {
  std::string ring = write_temp("filt.ring", "ring Q[x,y] local; ideal I = x*y, x^3 - y^2;");
  std::string filt = write_temp("filt.txt",
                                "zero =\n"
                                "X = x\n"
                                "Y = y\n"
                                "max = x, y\n");
  RunResult weak = run("filtration verify " + ring + " " + filt);
  CHECK(weak.exit_code == 0);
  CHECK(weak.out.find("\"weak_ok\": true") != std::string::npos);
  RunResult strong = run("filtration verify " + ring + " " + filt + " --strong");
  CHECK(strong.exit_code == 1);  // the strong condition fails: mathematical no
}

TEST_CASE("filtration lift via files") {
  std::string ring = write_temp("lift.ring", "ring Q[x,y]; ideal I = x*y, y^2;");
  std::string filt = write_temp("lift.txt", "zero =\nXbar = x\n");
  RunResult r = run("filtration lift " + ring + " --element y " + filt);
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("\"case\": \"b\"") != std::string::npos);
  CHECK(r.out.find("\"weak_ok\": true") != std::string::npos);
}

TEST_CASE("large semigroup degrades to an explicit budget verdict") {
  RunResult r = run("semigroup 6 7 8 9 10");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("\"status\": \"budget_exceeded\"") != std::string::npos);
  CHECK(r.out.find("\"toric_ideal\"") != std::string::npos);
}

TEST_CASE("timing only appears with --timing") {
  std::string ring = write_temp("t.ring", "ring Q[x,y]; ideal I = x*y;");
  RunResult a = run("koszul " + ring);
  CHECK(a.out.find("timing_ms") == std::string::npos);
  RunResult b = run("koszul " + ring + " --timing");
  CHECK(b.out.find("timing_ms") != std::string::npos);
}

int main(int argc, char** argv) {
  if (argc < 2) {
    std::fprintf(stderr, "usage: test_cli <path-to-lindel> [golden-dir]\n");
    return 2;
  }
  g_cli = argv[1];
  g_golden_dir = argc >= 3 ? argv[2] : "golden";
  doctest::Context ctx;
  return ctx.run();
}
