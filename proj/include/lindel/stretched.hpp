#pragma once

#include <optional>

#include "lindel/filtration.hpp"
#include "lindel/linearity.hpp"

namespace lindel {

struct InvariantReport {
  std::string engine;  // graded | artinian | tangent-cone
  int dim = 0;
  int depth = 0;
  int embdim = 0;
  int codim = 0;
  long multiplicity = 0;
  std::optional<long> type;  // socle rank (artinian) / last Betti number (CM graded)
  long mu_m2 = 0;
  std::optional<int> socle_degree;
  std::optional<long> length;
  std::vector<long> hilbert;
  bool cohen_macaulay = false;
  std::string multiplicity_tag;  // "", "minimal multiplicity", "almost minimal multiplicity"
};

InvariantReport invariants(const RingPresentation& P, const Budget& bud = {});

struct GStretchedVerdict {
  bool g_stretched = false;
  long mu_m2 = 0;
  int dim = 0;
  bool dim_le_1 = true;
};
GStretchedVerdict is_g_stretched(const RingPresentation& P, const Budget& bud = {});

struct ClassifyVerdict {
  bool predict_koszul = false;
  int dim = 0;
  bool m2_zero = false;
  bool m3_zero = false;
  long type = 0;
  int codim = 0;
  std::string reason;
};
// Theorem: Koszul <=> dim R = 1, or R artinian with m^3 = 0 and
// (m^2 = 0 or type <= codim - 1)
ClassifyVerdict classify_g_stretched(const RingPresentation& P, const Budget& bud = {});

struct QnResult {
  bool decomposed = false;
  std::vector<Poly> q_gens;
  std::string failure;
};
// candidate Q := (I : n); verifies I = Q*n and that Q is generated by a regular
// sequence of d-1 elements of n \ n^2
QnResult qn_decompose(const RingPresentation& P, const Budget& bud = {});

struct EVParameters {
  int h = 1;
  int tau = 1;
  int s = 2;
  std::vector<long> units;  // one per i in [tau+1, h]; defaults to 1
};
RingPresentation elias_valla_presentation(const EVParameters& p, const Field& F = Field::Q());

struct SemigroupResult {
  std::vector<int> generators;
  Ring toric_ring;
  std::vector<Poly> toric_ideal;
  RingPresentation tangent_cone_pres;
  std::vector<long> semigroup_hilbert;  // independent adic Hilbert count, degrees 0..D
  bool minimal_generating = true;
};
SemigroupResult semigroup_ring(const std::vector<int>& a, int D = 8, const Budget& bud = {});

// initial forms of a Mora standard basis (local presentations)
RingPresentation tangent_cone(const RingPresentation& P, const Budget& bud = {});

struct FilterRegularResult {
  bool found = false;
  Poly element;
  RingPresentation quotient;  // R/(l) with one variable eliminated
  std::vector<std::pair<int, long>> kernel_evidence;  // (degree, kernel dim) of a failed trial
  int trials_used = 0;
};
FilterRegularResult filter_regular_reduction(const RingPresentation& P, int trials,
                                             uint64_t seed, int D = 8, const Budget& bud = {});

// substitute a linear form: solve l for one variable and eliminate it
RingPresentation quotient_by_linear(const RingPresentation& P, const Poly& l);

}  // namespace lindel
