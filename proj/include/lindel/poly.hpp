#pragma once

#include <string>
#include <vector>

#include "lindel/field.hpp"
#include "lindel/monomial.hpp"

namespace lindel {

struct Ring {
  Field field;
  std::vector<std::string> vars;
  OrderSpec order;

  size_t nvars() const { return vars.size(); }
  bool operator==(const Ring& o) const {
    return field == o.field && vars.size() == o.vars.size() && order == o.order;
  }
};

struct Term {
  Monomial m;
  Scalar c;
};

// Terms sorted strictly descending in the ring's active order; no zero coefficients.
class Poly {
 public:
  Poly() = default;

  bool is_zero() const { return ts_.empty(); }
  size_t nterms() const { return ts_.size(); }
  const std::vector<Term>& terms() const { return ts_; }
  const Term& lt() const { return ts_.front(); }
  const Monomial& lm() const { return ts_.front().m; }
  const Scalar& lc() const { return ts_.front().c; }

  uint32_t max_degree() const {
    uint32_t d = 0;
    for (auto& t : ts_) d = std::max(d, t.m.degree());
    return d;
  }
  uint32_t min_degree() const {
    uint32_t d = ts_.empty() ? 0 : ~0u;
    for (auto& t : ts_) d = std::min(d, t.m.degree());
    return d;
  }
  bool homogeneous() const {
    if (ts_.empty()) return true;
    uint32_t d = ts_[0].m.degree();
    for (auto& t : ts_) if (t.m.degree() != d) return false;
    return true;
  }
  bool operator==(const Poly& o) const {
    if (ts_.size() != o.ts_.size()) return false;
    for (size_t i = 0; i < ts_.size(); ++i)
      if (ts_[i].m != o.ts_[i].m || ts_[i].c != o.ts_[i].c) return false;
    return true;
  }
  bool operator!=(const Poly& o) const { return !(*this == o); }

  // internal: assumes sorted, nonzero coefficients
  static Poly raw(std::vector<Term> ts) {
    Poly p;
    p.ts_ = std::move(ts);
    return p;
  }

 private:
  std::vector<Term> ts_;
};

Poly poly_zero();
Poly poly_const(const Ring& R, const Scalar& c);
Poly poly_term(const Ring& R, const Monomial& m, const Scalar& c);
Poly poly_var(const Ring& R, size_t i);
// builds (sorts + combines) from arbitrary term list
Poly poly_make(const Ring& R, std::vector<Term> ts);
// re-sorts a polynomial created under a different monomial order
inline Poly resort(const Ring& R, const Poly& p) { return poly_make(R, p.terms()); }

Poly add(const Ring& R, const Poly& a, const Poly& b);
Poly sub(const Ring& R, const Poly& a, const Poly& b);
Poly mul(const Ring& R, const Poly& a, const Poly& b);
Poly neg(const Poly& a);
Poly scale(const Poly& a, const Scalar& c);
Poly mul_term(const Ring& R, const Poly& a, const Monomial& m, const Scalar& c);
// exact division by a polynomial known to divide (domain case); throws if not exact
Poly exact_div(const Ring& R, const Poly& a, const Poly& b);
// homogeneous part of given total degree
Poly homog_part(const Ring& R, const Poly& a, uint32_t d);
// part of lowest total degree (initial form for local orders)
Poly initial_form(const Ring& R, const Poly& a);

// over Q: scale so coefficients are coprime integers with positive leading coeff;
// over Fp: make monic. Identity for zero.
Poly normalize_content(const Ring& R, const Poly& a);
Poly make_monic(const Poly& a);

std::string poly_str(const Ring& R, const Poly& a);

// A finitely presented quotient ring k[vars]/(gens).
struct RingPresentation {
  Ring ring;
  std::vector<Poly> gens;
  bool homogeneous = true;  // all generators homogeneous
  bool local = false;       // negdegrevlex semantics requested

  std::string str() const;
};

// Ring DSL:
//   ring Q[x,y,z] order degrevlex; ideal I = x*z, y*z, y^4, z^2;
//   ring Q[x,y] local; ideal I = x*y, x^3 - y^2;
//   ring F32003[x,y]; ideal I = 0;
struct ParseError : std::runtime_error {
  int line, col;
  ParseError(const std::string& m, int l, int c)
      : std::runtime_error(m + " at line " + std::to_string(l) + ", col " + std::to_string(c)),
        line(l), col(c) {}
};

RingPresentation parse_ring(const std::string& text);
// parses a polynomial in an existing ring (used for CLI arguments / filtration files)
Poly parse_poly(const Ring& R, const std::string& text);
std::string print_presentation(const RingPresentation& P);

}  // namespace lindel
