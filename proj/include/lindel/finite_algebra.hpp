#pragma once

#include <vector>

#include "lindel/groebner.hpp"
#include "lindel/linalg.hpp"

namespace lindel {

// Exact model of an artinian quotient: standard-monomial basis, multiplication
// table, and the m-adic filtration. Built from a Groebner basis (homogeneous,
// global order) or a Mora standard basis (local order).
struct FiniteAlgebra {
  RingPresentation pres;
  GroebnerBasis basis_ideal;           // GB / standard basis of the defining ideal
  std::vector<Monomial> basis;         // standard monomials; basis[0] = 1
  std::vector<std::vector<Row>> mult;  // mult[i][j] = coordinates of basis[i]*basis[j]
  std::vector<int> adic_order;         // largest i with the basis element in m^i
  std::vector<Mat> m_pow;              // echelon bases of m^0, m^1, ..., m^nilpotency (last empty)
  int nilpotency = 1;                  // least N with m^N = 0
  bool graded = false;

  size_t dim() const { return basis.size(); }
  const Field& field() const { return pres.ring.field; }
  size_t nvars() const { return pres.ring.nvars(); }
  int socle_degree() const { return nilpotency - 1; }
};

// Detects whether the quotient is artinian: the leading-term ideal contains a
// pure power of every variable.
bool is_artinian_quotient(const RingPresentation& P, const Budget& bud = {});

// Throws UnsupportedError on non-artinian input, StructuralError for a
// non-homogeneous presentation under a global order.
FiniteAlgebra build_finite_algebra(const RingPresentation& P, const Budget& bud = {});

Row fa_zero(const FiniteAlgebra& A);
Row fa_one(const FiniteAlgebra& A);
Row fa_var(const FiniteAlgebra& A, size_t v);
Row fa_from_poly(const FiniteAlgebra& A, const Poly& f);
Poly fa_to_poly(const FiniteAlgebra& A, const Row& a);
Row fa_add(const FiniteAlgebra& A, const Row& a, const Row& b);
Row fa_scale(const FiniteAlgebra& A, const Row& a, const Scalar& c);
Row fa_mul(const FiniteAlgebra& A, const Row& a, const Row& b);
bool fa_is_zero(const Row& a);
// largest i with a in m^i (nilpotency for the zero element)
int fa_adic_order_of(const FiniteAlgebra& A, const Row& a);

// socle (0 : m) as an echelon basis; its dimension is the type for artinian rings
Mat fa_socle(const FiniteAlgebra& A);
// h_i = dim m^i/m^{i+1} for 0 <= i < nilpotency
std::vector<int> fa_adic_hilbert(const FiniteAlgebra& A);
// homogeneous presentation of gr_m(R); same variable names, degrevlex
RingPresentation fa_assoc_graded(const FiniteAlgebra& A, const Budget& bud = {});

// Ideal arithmetic by exact linear algebra. With a nonzero modulus ideal, all
// operations are interpreted in A/(modulus): every ideal contains the modulus.
struct FAIdeal {
  Mat rows;                // echelon basis of the subspace of A
  std::vector<Poly> gens;  // defining generators (reporting / witnesses)
};

class FAOps {
 public:
  explicit FAOps(const FiniteAlgebra& A, std::vector<Poly> modulus = {});

  const FiniteAlgebra& algebra() const { return A_; }
  const std::vector<Poly>& modulus_gens() const { return mod_gens_; }

  FAIdeal make(const std::vector<Poly>& gens) const;
  FAIdeal zero_ideal() const;
  FAIdeal maximal_ideal() const;
  bool is_proper(const FAIdeal& I) const;
  bool is_zero_ideal(const FAIdeal& I) const;
  bool equal(const FAIdeal& a, const FAIdeal& b) const;
  bool subset(const FAIdeal& a, const FAIdeal& b) const;  // a subseteq b
  bool contains_poly(const FAIdeal& I, const Poly& f) const;
  FAIdeal sum_poly(const FAIdeal& I, const Poly& x) const;
  FAIdeal intersect(const FAIdeal& a, const FAIdeal& b) const;
  FAIdeal product(const FAIdeal& a, const FAIdeal& b) const;
  FAIdeal colon_poly(const FAIdeal& I, const Poly& x) const;
  FAIdeal colon_ideal(const FAIdeal& I, const FAIdeal& J) const;
  FAIdeal mpow(int s) const;  // m^s (plus modulus)
  std::vector<Poly> min_gens(const FAIdeal& I) const;
  // dimension of I/(mI + modulus), i.e. minimal number of generators mod modulus
  size_t mu(const FAIdeal& I) const;

 private:
  const FiniteAlgebra& A_;
  Mat mod_rows_;
  std::vector<Poly> mod_gens_;

  FAIdeal close_span(std::vector<Row> seed, std::vector<Poly> gens) const;
};

}  // namespace lindel
