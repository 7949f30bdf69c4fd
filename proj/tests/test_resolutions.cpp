#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "lindel/resolutions.hpp"

using namespace lindel;

namespace {

std::vector<long> betti_totals_graded(const std::string& ring, int N) {
  RingPresentation P = parse_ring(ring);
  GradedResolution F = resolve_cyclic_graded(P, maximal_ideal_gens(P.ring), N);
  certify(F);
  return betti_of(F).total;
}

std::vector<long> betti_totals_artinian(const std::string& ring, int N) {
  FiniteAlgebra A = build_finite_algebra(parse_ring(ring));
  LocalResolution F = resolve_cyclic_artinian(A, maximal_ideal_gens(A.pres.ring), N);
  certify(F);
  return betti_of(F).total;
}

}  // namespace

TEST_CASE("k over k[x,y]: Koszul complex (1,2,1)") {
  RingPresentation P = parse_ring("ring Q[x,y];");
  GradedResolution F = resolve_cyclic_graded(P, maximal_ideal_gens(P.ring), 3);
  certify(F);
  BettiTable B = betti_of(F);
  CHECK(B.total == std::vector<long>{1, 2, 1, 0});
  // d_2 generates the Koszul syzygy (y, -x) against the actual d_1 images
  REQUIRE(F.diff[2].size() == 1);
  const auto& col = F.diff[2][0];
  Poly g0 = F.diff[1][0][0], g1 = F.diff[1][1][0];
  Poly combo = add(P.ring, mul(P.ring, col[0], g0), mul(P.ring, col[1], g1));
  CHECK(combo.is_zero());
  CHECK_FALSE(col[0].is_zero());
  CHECK_FALSE(col[1].is_zero());
}

TEST_CASE("k over k[x,y]/(x^2,xy,y^2): beta_i = 2^i, both engines") {
  std::vector<long> expect = {1, 2, 4, 8, 16};
  CHECK(betti_totals_artinian("ring Q[x,y]; ideal I = x^2, x*y, y^2;", 4) == expect);
  CHECK(betti_totals_graded("ring Q[x,y]; ideal I = x^2, x*y, y^2;", 4) == expect);
}

TEST_CASE("k over k[x,y]/(x^2,y^2): beta_i = i+1 (complete intersection)") {
  std::vector<long> expect = {1, 2, 3, 4, 5};
  CHECK(betti_totals_artinian("ring Q[x,y]; ideal I = x^2, y^2;", 4) == expect);
  CHECK(betti_totals_graded("ring Q[x,y]; ideal I = x^2, y^2;", 4) == expect);
}

TEST_CASE("k over k[x]: (1,1,0,...)") {
  CHECK(betti_totals_graded("ring Q[x];", 3) == std::vector<long>{1, 1, 0, 0});
}

TEST_CASE("graded Betti numbers: beta_{2,4} over k[x,y]/(xy, y^2, x^4)") {
  RingPresentation P = parse_ring("ring Q[x,y]; ideal I = x*y, y^2, x^4;");
  GradedResolution F = resolve_cyclic_graded(P, maximal_ideal_gens(P.ring), 2);
  certify(F);
  BettiTable B = betti_of(F);
  CHECK(B.graded[{2, 4}] >= 1);
  CHECK(B.graded[{1, 1}] == 2);
  CHECK(B.graded[{2, 2}] == 3);
}

TEST_CASE("polynomial ring: beta_{i,i} = C(n,i)") {
  RingPresentation P = parse_ring("ring Q[x,y,z];");
  GradedResolution F = resolve_cyclic_graded(P, maximal_ideal_gens(P.ring), 4);
  BettiTable B = betti_of(F);
  CHECK(B.graded[{0, 0}] == 1);
  CHECK(B.graded[{1, 1}] == 3);
  CHECK(B.graded[{2, 2}] == 3);
  CHECK(B.graded[{3, 3}] == 1);
  CHECK(B.total[4] == 0);
  for (auto& [ij, c] : B.graded)
    if (ij.first != ij.second) CHECK(c == 0);
}

TEST_CASE("R/(x) over k[x,y]: principal resolution") {
  RingPresentation P = parse_ring("ring Q[x,y];");
  // I = (x^2) to satisfy the n^2 constraint on presentations is not needed here:
  // resolve the cyclic module R/(x) with x a variable (module input, not ring input)
  Poly x = poly_var(P.ring, 0);
  GradedResolution F = resolve_cyclic_graded(P, {x}, 3);
  certify(F);
  BettiTable B = betti_of(F);
  CHECK(B.total == std::vector<long>{1, 1, 0, 0});
  CHECK(B.graded[{1, 1}] == 1);
}

TEST_CASE("graded and artinian engines agree on graded Betti tables") {
  const char* rings[] = {
      "ring Q[x,y]; ideal I = x^2, x*y, y^2;",
      "ring Q[x,y]; ideal I = x^2, y^2;",
      "ring Q[x,y]; ideal I = x*y, y^2, x^4;",
      "ring F32003[x,y,z]; ideal I = x*z, y*z, y^4, z^2, x^4;",
  };
  for (const char* s : rings) {
    RingPresentation P = parse_ring(s);
    GradedResolution FG = resolve_cyclic_graded(P, maximal_ideal_gens(P.ring), 4);
    FiniteAlgebra A = build_finite_algebra(P);
    LocalResolution FL = resolve_cyclic_artinian(A, maximal_ideal_gens(P.ring), 4);
    certify(FG);
    certify(FL);
    BettiTable BG = betti_of(FG), BL = betti_of(FL);
    CHECK(BG.total == BL.total);
    CHECK(BG.graded == BL.graded);
  }
}

TEST_CASE("artinian resolution of a non-graded local ring") {
  FiniteAlgebra A = build_finite_algebra(parse_ring("ring Q[x,y] local; ideal I = x*y, x^3 - y^2;"));
  LocalResolution F = resolve_cyclic_artinian(A, maximal_ideal_gens(A.pres.ring), 3);
  certify(F);
  BettiTable B = betti_of(F);
  CHECK(B.total[0] == 1);
  CHECK(B.total[1] == 2);
  CHECK_FALSE(B.has_graded);
}

TEST_CASE("tor: identity k -> k is not Tor-vanishing at 0; m*R -> R is") {
  RingPresentation P = parse_ring("ring Q[x,y]; ideal I = x^2, x*y, y^2;");
  FiniteAlgebra A = build_finite_algebra(P);
  // identity on k = R/m realized as multiplication by 1: R/(m:1) -> R/m
  auto mg = maximal_ideal_gens(P.ring);
  auto v0 = tor_map_is_zero_artinian(A, mg, mg, poly_const(P.ring, Scalar::one(P.ring.field)), 2);
  CHECK_FALSE(v0[0]);
  // R/(0:x) --x--> R: image x*R lies in m*R with R free
  auto v1 = tor_map_is_zero_artinian(A, mg /* (0:x) = m here */, {}, poly_var(P.ring, 0), 3);
  for (bool b : v1) CHECK(b);
}

TEST_CASE("tor-vanishing of R/(J:x) -> R/J on the h=2 Gorenstein example (graded engine)") {
  // R = k[x,y]/(xy, y^2 - x^2) is the s=2 stretched Gorenstein ring; (0):x = (y)
  RingPresentation P = parse_ring("ring Q[x,y]; ideal I = x*y, y^2 - x^2;");
  Poly x = poly_var(P.ring, 0), y = poly_var(P.ring, 1);
  auto v = tor_map_is_zero_graded(P, {y} /* (0):x */, {} /* J = 0 */, x, 3);
  for (bool b : v) CHECK(b);
}

TEST_CASE("Koszul algebras: Poincare series is the inverse Hilbert series at -t") {
  // for a graded Koszul algebra, P_k(t) * H_R(-t) = 1; with H = 1 + h t + t^2
  // the Betti numbers satisfy b_i = h*b_{i-1} - b_{i-2}
  for (int h = 2; h <= 4; ++h) {
    RingPresentation P;
    P.ring.field = Field::Q();
    for (int i = 1; i <= h; ++i) P.ring.vars.push_back("y" + std::to_string(i));
    P.ring.order = OrderSpec{OrderSpec::Kind::degrevlex, 0};
    // EV form with tau = 1, s = 2: a Koszul stretched Gorenstein ring
    const Ring& R = P.ring;
    for (int i = 0; i < h; ++i)
      for (int j = i + 1; j < h; ++j)
        P.gens.push_back(mul(R, poly_var(R, i), poly_var(R, j)));
    for (int i = 1; i < h; ++i)
      P.gens.push_back(sub(R, mul(R, poly_var(R, i), poly_var(R, i)),
                           mul(R, poly_var(R, 0), poly_var(R, 0))));
    P.homogeneous = true;
    FiniteAlgebra A = build_finite_algebra(P);
    BettiTable B = betti_of(resolve_cyclic_artinian(A, maximal_ideal_gens(R), 5));
    std::vector<long> expect = {1, h};
    for (int i = 2; i <= 5; ++i)
      expect.push_back(h * expect[i - 1] - expect[i - 2]);
    CHECK(B.total == expect);
    // and the resolution is linear: beta_{i,j} = 0 for j != i
    for (auto& [ij, c] : B.graded)
      if (c > 0) CHECK(ij.first == ij.second);
  }
}

TEST_CASE("budget exhaustion yields an explicit truncation marker") {
  RingPresentation P = parse_ring("ring Q[x,y,z]; ideal I = x*z, y*z, y^4, z^2;");
  Budget tiny;
  tiny.max_pairs = 40;  // enough for the quotient GB, not for deep syzygies
  GradedResolution F = resolve_cyclic_graded(P, maximal_ideal_gens(P.ring), 6, tiny);
  CHECK(F.truncated);
  CHECK(F.truncated_at >= 0);
  BettiTable B = betti_of(F);
  CHECK(B.truncated_at == F.truncated_at);
}

TEST_CASE("syzygies of module presentations") {
  RingPresentation P = parse_ring("ring Q[x,y];");
  Poly x = poly_var(P.ring, 0), y = poly_var(P.ring, 1);
  ModulePresentation M;
  M.rank = 1;
  M.cols = {{x}, {y}};
  ModulePresentation S = syzygies_of(P, M);
  CHECK(S.rank == 2);
  REQUIRE(S.cols.size() == 1);
  // the Koszul syzygy (y, -x) up to scale
  CHECK_FALSE(S.cols[0][0].is_zero());
  CHECK_FALSE(S.cols[0][1].is_zero());
}
