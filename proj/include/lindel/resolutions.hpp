#pragma once

#include <map>

#include "lindel/finite_algebra.hpp"
#include "lindel/groebner.hpp"

namespace lindel {

struct BettiTable {
  int N = 0;  // homological degree reached
  std::map<std::pair<int, int>, long> graded;  // (i,j) -> count (graded case only)
  std::vector<long> total;                     // beta_0..beta_N
  bool has_graded = false;
  int truncated_at = -1;  // -1 when complete up to N
};

// presentation of a module over R = S/I: cokernel-style columns in R^rank
struct ModulePresentation {
  size_t rank = 1;
  std::vector<std::vector<Poly>> cols;  // each column has length rank
  std::vector<Poly> quotient;           // generators of the defining ideal of R
};

// ---------------------------------------------------------------------------
// graded engine: minimal free resolutions over R = S/J, all data homogeneous
// ---------------------------------------------------------------------------

struct GradedResolution {
  RingPresentation P;
  std::vector<Poly> quot_gb;
  std::vector<std::vector<int>> degs;  // degs[i] = generator degrees of F_i
  // diff[i] for i >= 1: columns of d_i : F_i -> F_{i-1}
  std::vector<std::vector<std::vector<Poly>>> diff;
  bool truncated = false;
  int truncated_at = -1;
  int levels() const { return (int)degs.size() - 1; }
};

// minimal free resolution of R/(Igens) to homological degree N
GradedResolution resolve_cyclic_graded(const RingPresentation& P, const std::vector<Poly>& Igens,
                                       int N, const Budget& bud = {});
// minimal free resolution of the submodule of R^rank generated by cols
GradedResolution resolve_submodule_graded(const RingPresentation& P, size_t rank,
                                          const std::vector<int>& target_degs,
                                          const std::vector<std::vector<Poly>>& cols, int N,
                                          const Budget& bud = {});
// d^2 = 0 and no unit entries; throws StructuralError on violation
void certify(const GradedResolution& F);

// ---------------------------------------------------------------------------
// artinian engine: resolutions by exact linear algebra over a FiniteAlgebra
// ---------------------------------------------------------------------------

struct LocalResolution {
  const FiniteAlgebra* A = nullptr;
  std::vector<std::vector<int>> degs;    // graded: degrees; local: generator orders
  std::vector<std::vector<Row>> diff;    // diff[i]: columns, each of length rank(F_{i-1})*dim
  bool graded = false;
  bool truncated = false;
  int truncated_at = -1;
  int levels() const { return (int)degs.size() - 1; }
};

LocalResolution resolve_cyclic_artinian(const FiniteAlgebra& A, const std::vector<Poly>& Igens,
                                        int N);
LocalResolution resolve_submodule_artinian(const FiniteAlgebra& A, size_t rank,
                                           const std::vector<int>& target_degs,
                                           const std::vector<Row>& cols, int N);
void certify(const LocalResolution& F);

BettiTable betti_of(const GradedResolution& F, int D = -1);
BettiTable betti_of(const LocalResolution& F, int D = -1);
std::vector<long> poincare_coefficients(const BettiTable& B);

// ---------------------------------------------------------------------------
// Tor-vanishing of the multiplication map R/(J:x) --x--> R/J
// (per-degree verdicts for i = 0..N; true = Tor_i(k, phi) = 0)
//
// Decided by lifting phi to a chain map phi_i between the minimal resolutions
// and testing whether every entry of phi_i lies in m. This is well-defined:
// Tor_i(k, phi) is phi_i tensor k, and any two lifts differ by a homotopy
// h d + d h whose value lands in m * F (both resolutions are minimal, so all
// differential entries lie in m); hence the mod-m class of phi_i, and with it
// the verdict, is independent of the chosen lift.
// ---------------------------------------------------------------------------

std::vector<bool> tor_map_is_zero_graded(const RingPresentation& P, const std::vector<Poly>& Jx,
                                         const std::vector<Poly>& J, const Poly& x, int N,
                                         const Budget& bud = {});
std::vector<bool> tor_map_is_zero_artinian(const FiniteAlgebra& A, const std::vector<Poly>& Jx,
                                           const std::vector<Poly>& J, const Poly& x, int N);

// syzygies of a module presentation (Schreyer-style via the tagged block order);
// result columns multiply the presentation to zero, which is re-verified.
ModulePresentation syzygies_of(const RingPresentation& P, const ModulePresentation& M,
                               const Budget& bud = {});

// minimal homogeneous generators (with degrees) of the submodule generated by
// gens inside R^rank with generator degrees `shifts` (graded engine)
std::vector<std::pair<std::vector<Poly>, int>> min_gens_module_graded(
    const Ring& R, const std::vector<Poly>& quot_gb, size_t rank,
    const std::vector<int>& shifts, const std::vector<std::vector<Poly>>& gens);

// helpers shared with the linearity module
namespace fa_modules {
std::vector<Row> module_kernel(const FiniteAlgebra& A, size_t rank,
                               const std::vector<Row>& cols);
Row module_apply(const FiniteAlgebra& A, size_t rank, const std::vector<Row>& cols,
                 const Row& coeffs);
Row module_mul_elt(const FiniteAlgebra& A, size_t rank, const Row& v, size_t basis_idx);
bool module_solve(const FiniteAlgebra& A, size_t rank, const std::vector<Row>& cols,
                  const Row& target, Row& coeffs);
// minimal module generators from a k-spanning set of an A-submodule of A^rank
std::vector<Row> module_min_gens(const FiniteAlgebra& A, size_t rank,
                                 const std::vector<int>& shifts,
                                 const std::vector<Row>& span_rows, bool graded);
// homogeneous degree of a module element; -2 when inhomogeneous, -1 when zero
int module_degree_graded(const FiniteAlgebra& A, const std::vector<int>& shifts, const Row& v);
int module_column_order(const FiniteAlgebra& A, const std::vector<int>& shifts, const Row& v);
}  // namespace fa_modules

}  // namespace lindel
