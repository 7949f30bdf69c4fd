#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "lindel/poly.hpp"

namespace lindel {

struct Budget {
  size_t max_basis = 1000;
  uint32_t max_degree = 30;
  size_t max_pairs = 1000000;
};

// cumulative usage counters for the current thread (reported by the CLI)
struct BudgetUsage {
  size_t pairs = 0;      // S-pairs and Mora reduction steps
  size_t basis = 0;      // largest basis reached
  uint32_t degree = 0;   // largest lcm degree handled
};
BudgetUsage budget_usage();
void reset_budget_usage();

struct BudgetError : std::runtime_error {
  std::string stage;
  size_t basis_size;
  uint32_t degree;
  size_t pairs;
  BudgetError(const std::string& st, size_t b, uint32_t d, size_t p)
      : std::runtime_error("budget exceeded in " + st + " (basis=" + std::to_string(b) +
                           ", degree=" + std::to_string(d) + ", pairs=" + std::to_string(p) + ")"),
        stage(st), basis_size(b), degree(d), pairs(p) {}
};

struct GroebnerBasis {
  std::vector<Poly> els;
  OrderSpec order;
  bool reduced = false;
};

// Reduced Groebner basis (global orders, Buchberger) or minimal standard basis
// (negdegrevlex, Mora with ecart selection).
GroebnerBasis groebner_basis(const Ring& R, std::vector<Poly> gens, const Budget& bud = {});

// Full normal form for global orders: no term of the result is divisible by any
// basis leading monomial.
Poly normal_form(const Ring& R, Poly f, const std::vector<Poly>& basis);
inline Poly normal_form(const Ring& R, Poly f, const GroebnerBasis& gb) {
  return normal_form(R, std::move(f), gb.els);
}

// Mora weak normal form (local orders): u*f = h mod (basis) for some unit u;
// the leading monomial of h is not divisible by any basis leading monomial.
Poly mora_weak_nf(const Ring& R, Poly f, const std::vector<Poly>& basis, const Budget& bud = {});

bool in_ideal(const Ring& R, const Poly& f, const GroebnerBasis& gb, const Budget& bud = {});

// ---------------------------------------------------------------------------
// Free-module layer (global orders only)
// ---------------------------------------------------------------------------

struct VTerm {
  Monomial m;
  uint32_t comp;
  Scalar c;
};

class Vec {
 public:
  Vec() = default;
  bool is_zero() const { return ts_.empty(); }
  const std::vector<VTerm>& terms() const { return ts_; }
  const VTerm& lt() const { return ts_.front(); }
  static Vec raw(std::vector<VTerm> ts) {
    Vec v;
    v.ts_ = std::move(ts);
    return v;
  }

 private:
  std::vector<VTerm> ts_;
};

struct ModOrder {
  OrderSpec ring_order;
  std::vector<int> weights;        // one per component
  uint32_t split = 0xffffffffu;    // components < split dominate (block order)
};

int vterm_cmp(const VTerm& a, const VTerm& b, const ModOrder& o);
Vec vec_make(const ModOrder& o, std::vector<VTerm> ts);
Vec vec_add(const ModOrder& o, const Vec& a, const Vec& b);
Vec vec_mul_term(const Vec& a, const Monomial& m, const Scalar& c);
Vec vec_from_cols(const ModOrder& o, const std::vector<Poly>& comps);
std::vector<Poly> vec_to_cols(const Vec& v, size_t ncomps, const Ring& R);

// Kernel / lifting context for the map R^p -> (R/quot)^r sending e_i to cols[i].
// cols[i] has length r. Uses a tagged block module order.
class ModuleCtx {
 public:
  ModuleCtx(const Ring& R, std::vector<std::vector<Poly>> cols, size_t target_rank,
            std::vector<int> target_weights, std::vector<Poly> quot_gb, const Budget& bud = {});

  // generators of the kernel submodule of R^p, entries in normal form mod quot
  const std::vector<std::vector<Poly>>& kernel_gens() const { return kernel_; }
  // f (length r): if f is in the image mod quot, fills coeffs (length p) and returns true
  bool lift(const std::vector<Poly>& f, std::vector<Poly>& coeffs) const;
  bool contains(const std::vector<Poly>& f) const;

 private:
  Ring R_;
  size_t r_, p_;
  ModOrder ord_;
  std::vector<Vec> gb_;
  std::vector<Poly> quot_gb_;
  std::vector<std::vector<Poly>> kernel_;
  Budget bud_;
};

// ---------------------------------------------------------------------------
// Ideal arithmetic in polynomial rings (global orders); callers lift
// quotient-ring ideals by adding the quotient generators.
// ---------------------------------------------------------------------------

bool is_monomial_set(const std::vector<Poly>& gens);

std::vector<Poly> ideal_intersect_S(const Ring& R, const std::vector<Poly>& A,
                                    const std::vector<Poly>& B, const Budget& bud = {});
std::vector<Poly> ideal_colon_poly_S(const Ring& R, const std::vector<Poly>& I, const Poly& f,
                                     const Budget& bud = {});
std::vector<Poly> ideal_colon_ideal_S(const Ring& R, const std::vector<Poly>& I,
                                      const std::vector<Poly>& J, const Budget& bud = {});
// I ∩ k[vars with elim[v] == false]; the output lives in out_ring (degrevlex on kept vars)
std::vector<Poly> eliminate_vars(const Ring& R, const std::vector<Poly>& gens,
                                 const std::vector<bool>& elim, Ring& out_ring,
                                 const Budget& bud = {});
std::vector<Poly> ideal_product(const Ring& R, const std::vector<Poly>& A,
                                const std::vector<Poly>& B);
std::vector<Poly> ideal_power(const Ring& R, const std::vector<Poly>& A, int s);
std::vector<Poly> maximal_ideal_gens(const Ring& R);

// minimal homogeneous generating subset of (gens) modulo (quot); greedy by degree
std::vector<Poly> minimal_gens_graded(const Ring& R, std::vector<Poly> gens,
                                      const std::vector<Poly>& quot_gb, const Budget& bud = {});

}  // namespace lindel
