#pragma once

#include "lindel/resolutions.hpp"

namespace lindel {

// The linear part of a minimal free resolution: a complex over gr_m(R) whose
// level-i generators sit in degree i and whose differential entries are the
// classes in m/m^2 of the original entries.
struct LinearPartComplex {
  RingPresentation gr;
  std::vector<size_t> ranks;                          // rank of lin F_i
  std::vector<std::vector<std::vector<Poly>>> diff;   // diff[i]: linear columns over gr
};

// graded input: keeps exactly the degree-1 entries (gr = R)
LinearPartComplex linear_part(const RingPresentation& P, const GradedResolution& F);
// artinian local input: entries replaced by their classes in m/m^2
LinearPartComplex linear_part(const FiniteAlgebra& A, const LocalResolution& F);

struct LindVerdict {
  int N = 0;
  std::vector<bool> h_nonzero;  // indices 0..N: H_i(lin F) != 0 (exact per i)
  int value() const {
    int v = 0;
    for (int i = 1; i <= N && i < (int)h_nonzero.size(); ++i)
      if (h_nonzero[i]) v = i;
    return v;
  }
  bool saturated() const {
    return N < (int)h_nonzero.size() && h_nonzero[N];
  }
};

struct ModuleSpec {
  enum class Kind { residue_field, cyclic, maximal_ideal };
  Kind kind = Kind::residue_field;
  std::vector<Poly> ideal_gens;  // cyclic: M = R/(ideal_gens)

  static ModuleSpec k() { return ModuleSpec{}; }
  static ModuleSpec cyclic_mod(std::vector<Poly> gens) {
    return ModuleSpec{Kind::cyclic, std::move(gens)};
  }
  static ModuleSpec m() { return ModuleSpec{Kind::maximal_ideal, {}}; }
};

// Exact per-homological-degree verdicts for H_i(lin F), i <= N; requires the
// resolution to N+1. Routes to the artinian engine when the quotient is
// artinian, otherwise to the graded syzygy/membership path.
LindVerdict lind_bounded(const RingPresentation& P, const ModuleSpec& M, int N,
                         const Budget& bud = {});

struct KoszulVerdict {
  int N = 0;
  bool koszul_up_to = true;
  int wit_i = -1, wit_j = -1;  // a beta_{i,j}(k) != 0 with j > i when not Koszul
};

KoszulVerdict koszul_check(const RingPresentation& P, int N, const Budget& bud = {});
// max{j - i : beta_{i,j}(k) != 0, i <= N}
int reg_k_bounded(const RingPresentation& P, int N, const Budget& bud = {});

struct GolodVerdict {
  enum class Status { golod_up_to, not_golod, inconclusive };
  Status status = Status::inconclusive;
  int N = 5;
  std::vector<long> actual;          // beta_i(k) for i <= N
  std::vector<long> predicted;       // Golod series coefficients through t^N
  int first_discrepancy = -1;
  std::vector<long> koszul_homology; // dim_k H_j(K^R), j = 1..codepth
  int embdim = 0;
  int depth = 0;
  bool stabilized = true;  // degreewise Koszul homology stabilized (graded case)
};

GolodVerdict golod_check(const RingPresentation& P, int N = 5, int D = 8,
                         const Budget& bud = {});

// dim_k H_j(K^R) for j = 0..e over an artinian quotient (exact)
std::vector<long> koszul_homology_artinian(const FiniteAlgebra& A);

}  // namespace lindel
