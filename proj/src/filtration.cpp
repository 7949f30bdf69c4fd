#include "lindel/filtration.hpp"

#include <algorithm>
#include <sstream>

namespace lindel {

namespace {

class ArtinFiltrationEngine : public FiltrationEngine {
 public:
  ArtinFiltrationEngine(const RingPresentation& P, const std::vector<Poly>& modulus,
                        const Budget& bud)
      : A_(build_finite_algebra(P, bud)), ops_(A_, modulus) {}

  size_t make(const std::vector<Poly>& gens) override {
    ideals_.push_back(ops_.make(gens));
    return ideals_.size() - 1;
  }
  bool is_proper(size_t i) override { return ops_.is_proper(ideals_[i]); }
  bool is_zero(size_t i) override { return ops_.is_zero_ideal(ideals_[i]); }
  bool equal(size_t a, size_t b) override { return ops_.equal(ideals_[a], ideals_[b]); }
  bool contains_poly(size_t i, const Poly& f) override {
    return ops_.contains_poly(ideals_[i], f);
  }
  size_t colon_elt(size_t i, const Poly& x) override {
    ideals_.push_back(ops_.colon_poly(ideals_[i], x));
    return ideals_.size() - 1;
  }
  size_t sum_elt(size_t i, const Poly& x) override {
    ideals_.push_back(ops_.sum_poly(ideals_[i], x));
    return ideals_.size() - 1;
  }
  bool wf2_holds(size_t i) override { return strong2_holds(i, 1); }
  bool strong2_holds(size_t i, int s) override {
    FAIdeal lhs = ops_.intersect(ideals_[i], ops_.mpow(s + 1));
    FAIdeal rhs = ops_.product(ops_.mpow(s), ideals_[i]);
    return ops_.equal(lhs, rhs);
  }
  std::vector<Poly> min_gens(size_t i) override { return ops_.min_gens(ideals_[i]); }
  int default_sbound() override { return A_.nilpotency; }
  bool sbound_complete() override { return true; }
  std::string name() override { return "artinian"; }

  const FiniteAlgebra& algebra() const { return A_; }

 private:
  FiniteAlgebra A_;
  FAOps ops_;
  std::vector<FAIdeal> ideals_;
};

class GradedFiltrationEngine : public FiltrationEngine {
 public:
  GradedFiltrationEngine(const RingPresentation& P, const std::vector<Poly>& modulus,
                         const Budget& bud)
      : R_(P.ring), bud_(bud) {
    quot_ = P.gens;
    for (auto& m : modulus) quot_.push_back(m);
    quot_gb_ = groebner_basis(R_, quot_, bud_).els;
    int maxdeg = 2;
    for (auto& g : P.gens) maxdeg = std::max(maxdeg, (int)g.max_degree());
    default_sbound_ = 2 * maxdeg;
  }

  size_t make(const std::vector<Poly>& gens) override {
    Id id;
    id.gens = gens;
    std::vector<Poly> lift = gens;
    for (auto& q : quot_) lift.push_back(q);
    id.gb = groebner_basis(R_, lift, bud_).els;
    ideals_.push_back(std::move(id));
    return ideals_.size() - 1;
  }
  bool is_proper(size_t i) override {
    Poly one = poly_const(R_, Scalar::one(R_.field));
    return !normal_form(R_, one, ideals_[i].gb).is_zero();
  }
  bool is_zero(size_t i) override {
    for (auto& g : ideals_[i].gens)
      if (!normal_form(R_, g, quot_gb_).is_zero()) return false;
    return true;
  }
  bool equal(size_t a, size_t b) override {
    return subset(ideals_[a], ideals_[b]) && subset(ideals_[b], ideals_[a]);
  }
  bool contains_poly(size_t i, const Poly& f) override {
    return normal_form(R_, f, ideals_[i].gb).is_zero();
  }
  size_t colon_elt(size_t i, const Poly& x) override {
    Id id;
    id.gens = ideal_colon_poly_S(R_, ideals_[i].gb, x, bud_);
    std::vector<Poly> lift = id.gens;
    for (auto& q : quot_) lift.push_back(q);
    id.gb = groebner_basis(R_, lift, bud_).els;
    ideals_.push_back(std::move(id));
    return ideals_.size() - 1;
  }
  size_t sum_elt(size_t i, const Poly& x) override {
    std::vector<Poly> gens = ideals_[i].gens;
    gens.push_back(x);
    return make(gens);
  }
  bool wf2_holds(size_t i) override { return strong2_holds(i, 1); }
  bool strong2_holds(size_t i, int s) override {
    std::vector<Poly> mpow_s1 = ideal_power(R_, maximal_ideal_gens(R_), s + 1);
    // lhs: I ∩ m^{s+1} computed with the quotient folded in on both sides
    std::vector<Poly> m_lift = mpow_s1;
    for (auto& q : quot_) m_lift.push_back(q);
    std::vector<Poly> lhs = ideal_intersect_S(R_, ideals_[i].gb, m_lift, bud_);
    std::vector<Poly> rhs = ideal_product(R_, ideal_power(R_, maximal_ideal_gens(R_), s),
                                          ideals_[i].gens);
    for (auto& q : quot_) rhs.push_back(q);
    GroebnerBasis rhs_gb = groebner_basis(R_, rhs, bud_);
    for (auto& f : lhs)
      if (!in_ideal(R_, f, rhs_gb, bud_)) return false;
    // rhs ⊆ lhs always (m^s I ⊆ I and ⊆ m^{s+1} since I ⊆ m); re-check anyway
    GroebnerBasis lhs_gb = groebner_basis(R_, lhs, bud_);
    for (auto& f : rhs)
      if (!in_ideal(R_, f, lhs_gb, bud_)) return false;
    return true;
  }
  std::vector<Poly> min_gens(size_t i) override {
    return minimal_gens_graded(R_, ideals_[i].gens, quot_gb_, bud_);
  }
  int default_sbound() override { return default_sbound_; }
  bool sbound_complete() override { return false; }
  std::string name() override { return "graded"; }

 private:
  struct Id {
    std::vector<Poly> gens;
    std::vector<Poly> gb;  // reduced GB of the lifted ideal (gens + quot)
  };
  bool subset(const Id& a, const Id& b) {
    for (auto& g : a.gens)
      if (!normal_form(R_, g, b.gb).is_zero()) return false;
    return true;
  }
  Ring R_;
  Budget bud_;
  std::vector<Poly> quot_;
  std::vector<Poly> quot_gb_;
  std::vector<Id> ideals_;
  int default_sbound_ = 4;
};

}  // namespace

std::unique_ptr<FiltrationEngine> make_filtration_engine(const RingPresentation& P,
                                                         const std::vector<Poly>& modulus,
                                                         const Budget& bud) {
  bool base_artinian = false;
  try {
    base_artinian = is_artinian_quotient(P, bud);
  } catch (const BudgetError&) {
    base_artinian = false;
  }
  if (base_artinian && (P.homogeneous || !P.ring.order.global()))
    return std::make_unique<ArtinFiltrationEngine>(P, modulus, bud);
  // graded path (possibly with a linear modulus folded into the quotient)
  if (P.ring.order.global() && P.homogeneous) {
    bool mod_homog = true;
    for (auto& m : modulus) mod_homog &= m.homogeneous();
    if (mod_homog) return std::make_unique<GradedFiltrationEngine>(P, modulus, bud);
  }
  throw UnsupportedError("filtration verification: unsupported ring "
                         "(need an artinian quotient or a graded presentation)");
}

namespace {

FiltrationCertificate verify_core(const RingPresentation& P,
                                  const std::vector<std::vector<Poly>>& ideals,
                                  const std::vector<Poly>& modulus, bool strong, int sbound,
                                  const Budget& bud) {
  FiltrationCertificate C;
  C.ideal_gens = ideals;
  std::unique_ptr<FiltrationEngine> E = make_filtration_engine(P, modulus, bud);
  C.engine = E->name();
  std::vector<size_t> H;
  for (auto& gens : ideals) H.push_back(E->make(gens));
  const size_t n = H.size();

  // WF1: all proper, and both (0) and m present
  size_t zero_at = n, max_at = n;
  size_t mI = E->make(maximal_ideal_gens(P.ring));
  for (size_t i = 0; i < n; ++i) {
    if (!E->is_proper(H[i])) {
      C.wf1_reason = "family contains the unit ideal";
      break;
    }
    if (zero_at == n && E->is_zero(H[i])) zero_at = i;
    if (max_at == n && E->equal(H[i], mI)) max_at = i;
  }
  if (C.wf1_reason.empty()) {
    if (zero_at == n) C.wf1_reason = "the zero ideal is missing from the family";
    else if (max_at == n) C.wf1_reason = "the maximal ideal is missing from the family";
  }
  C.wf1 = C.wf1_reason.empty();

  // WF2 per ideal
  for (size_t i = 0; i < n; ++i) C.wf2.push_back(E->wf2_holds(H[i]));

  // WF3 with witness search over (J in F, x in minimal generators of I not in J)
  C.witnesses.assign(n, WitnessEntry{});
  for (size_t i = 0; i < n; ++i) {
    if (E->is_zero(H[i])) {
      C.wf3.push_back(true);
      continue;
    }
    bool found = false;
    std::vector<Poly> mg = E->min_gens(H[i]);
    for (size_t j = 0; j < n && !found; ++j) {
      for (const Poly& x : mg) {
        if (E->contains_poly(H[j], x)) continue;
        size_t sum = E->sum_elt(H[j], x);
        if (!E->equal(sum, H[i])) continue;
        size_t col = E->colon_elt(H[j], x);
        for (size_t c = 0; c < n; ++c) {
          if (E->equal(col, H[c])) {
            WitnessEntry w;
            w.ideal_index = (int)i;
            w.j_index = (int)j;
            w.x = x;
            w.colon_index = (int)c;
            C.witnesses[i] = w;
            found = true;
            break;
          }
        }
        if (found) break;
      }
    }
    C.wf3.push_back(found);
  }
  C.weak_ok = C.wf1;
  for (bool b : C.wf2) C.weak_ok &= b;
  for (bool b : C.wf3) C.weak_ok &= b;

  if (strong) {
    C.strong_checked = true;
    C.sbound = sbound > 0 ? sbound : E->default_sbound();
    C.sbound_complete = E->sbound_complete();
    C.strong_ok = C.weak_ok;
    for (size_t i = 0; i < n; ++i) {
      std::vector<int> fails;
      for (int s = 1; s <= C.sbound; ++s)
        if (!E->strong2_holds(H[i], s)) fails.push_back(s);
      if (!fails.empty()) C.strong_ok = false;
      C.strong_failures.push_back(std::move(fails));
    }
  }
  return C;
}

}  // namespace

FiltrationCertificate verify_weak_koszul_filtration(const RingPresentation& P,
                                                    const std::vector<std::vector<Poly>>& ideals,
                                                    const std::vector<Poly>& modulus,
                                                    const Budget& bud) {
  return verify_core(P, ideals, modulus, false, 0, bud);
}

FiltrationCertificate verify_koszul_filtration(const RingPresentation& P,
                                               const std::vector<std::vector<Poly>>& ideals,
                                               int sbound, const std::vector<Poly>& modulus,
                                               const Budget& bud) {
  return verify_core(P, ideals, modulus, true, sbound, bud);
}

std::vector<Poly> extract_generator_chain(const RingPresentation& P,
                                          const FiltrationCertificate& C, int ideal_index,
                                          const Budget& bud) {
  std::unique_ptr<FiltrationEngine> E = make_filtration_engine(P, {}, bud);
  std::vector<size_t> H;
  for (auto& gens : C.ideal_gens) H.push_back(E->make(gens));
  size_t msq = E->make(ideal_product(P.ring, maximal_ideal_gens(P.ring),
                                     maximal_ideal_gens(P.ring)));
  std::vector<Poly> chain;
  int cur = ideal_index;
  std::vector<bool> seen(C.ideal_gens.size(), false);
  while (cur >= 0 && !E->is_zero(H[cur])) {
    if (seen[cur]) throw StructuralError("generator chain: witness cycle (corrupt certificate)");
    seen[cur] = true;
    const WitnessEntry& w = C.witnesses[cur];
    if (w.ideal_index != cur)
      throw StructuralError("generator chain: missing witness (corrupt certificate)");
    // re-check the stored witness
    size_t sum = E->sum_elt(H[w.j_index], w.x);
    if (!E->equal(sum, H[cur]))
      throw StructuralError("generator chain: stored witness does not recover the ideal");
    size_t col = E->colon_elt(H[w.j_index], w.x);
    if (!E->equal(col, H[w.colon_index]))
      throw StructuralError("generator chain: stored colon witness mismatch");
    if (E->contains_poly(msq, w.x))
      throw StructuralError("generator chain: witness element lies in m^2");
    chain.push_back(w.x);
    cur = w.j_index;
  }
  std::reverse(chain.begin(), chain.end());
  return chain;
}

LiftResult lift_filtration(const RingPresentation& P, const Poly& y,
                           const std::vector<std::vector<Poly>>& fbar, const Budget& bud) {
  LiftResult out;
  std::unique_ptr<FiltrationEngine> E = make_filtration_engine(P, {}, bud);
  // y in m \ m^2
  size_t msq = E->make(ideal_product(P.ring, maximal_ideal_gens(P.ring),
                                     maximal_ideal_gens(P.ring)));
  size_t mI = E->make(maximal_ideal_gens(P.ring));
  if (!E->contains_poly(mI, y) || E->contains_poly(msq, y))
    throw PreconditionError("lift_filtration: the element must lie in m but not in m^2");
  size_t zero = E->make({});
  size_t ann = E->colon_elt(zero, y);
  bool case_a = E->is_zero(ann);
  bool case_b = false;
  if (!case_a) {
    // (b): y^2 = 0 (y in Ann(y)) and Ann(y)/(y) in F_bar
    if (E->contains_poly(ann, y)) {
      for (auto& gens : fbar) {
        std::vector<Poly> lift = gens;
        lift.push_back(y);
        size_t cand = E->make(lift);
        if (E->equal(cand, ann)) { case_b = true; break; }
      }
      if (!case_b)
        throw PreconditionError(
            "lift_filtration: y^2 = 0 but Ann(y)/(y) does not belong to the filtration");
    } else {
      throw PreconditionError(
          "lift_filtration: neither hypothesis holds (y is a zerodivisor with y^2 != 0)");
    }
  }
  out.case_used = case_a ? 'a' : 'b';
  // the lifted family {I : (y) ⊆ I, I/(y) ∈ F_bar} ∪ {(0)}
  out.lifted.push_back({});
  for (auto& gens : fbar) {
    std::vector<Poly> lift;
    lift.push_back(y);
    for (auto& g : gens) lift.push_back(g);
    out.lifted.push_back(lift);
  }
  out.reverification = verify_weak_koszul_filtration(P, out.lifted, {}, bud);
  return out;
}

CanonicalKind canonical_kind_of(const std::string& name) {
  if (name == "regular") return CanonicalKind::regular;
  if (name == "dim1-canonical") return CanonicalKind::dim1_canonical;
  if (name == "stretched-gorenstein") return CanonicalKind::stretched_gorenstein;
  if (name == "dim1-gorenstein") return CanonicalKind::dim1_gorenstein;
  throw StructuralError("unknown canonical filtration kind: " + name);
}

namespace {

RingPresentation drop_variable(const RingPresentation& P, size_t v) {
  RingPresentation out;
  out.ring.field = P.ring.field;
  for (size_t i = 0; i < P.ring.nvars(); ++i)
    if (i != v) out.ring.vars.push_back(P.ring.vars[i]);
  out.ring.order = P.ring.order;
  out.local = P.local;
  for (auto& g : P.gens) {
    std::vector<Term> ts;
    for (auto& t : g.terms()) {
      if (t.m[v] > 0) continue;  // substitute the variable by zero
      std::vector<uint16_t> e;
      for (size_t i = 0; i < P.ring.nvars(); ++i)
        if (i != v) e.push_back(t.m[i]);
      ts.push_back(Term{Monomial(std::move(e)), t.c});
    }
    Poly q = poly_make(out.ring, std::move(ts));
    if (!q.is_zero()) out.gens.push_back(q);
  }
  out.homogeneous = true;
  for (auto& g : out.gens)
    if (!g.homogeneous()) out.homogeneous = false;
  return out;
}

}  // namespace

std::vector<std::vector<Poly>> canonical_filtration(const RingPresentation& P,
                                                    CanonicalKind kind, const Budget& bud) {
  const Ring& R = P.ring;
  const size_t n = R.nvars();
  std::vector<std::vector<Poly>> F;
  switch (kind) {
    case CanonicalKind::regular: {
      if (!P.gens.empty())
        throw PreconditionError("canonical filtration 'regular' requires a polynomial ring");
      F.push_back({});
      std::vector<Poly> acc;
      for (size_t v = 0; v < n; ++v) {
        acc.push_back(poly_var(R, v));
        F.push_back(acc);
      }
      return F;
    }
    case CanonicalKind::dim1_canonical: {
      // R = S/(Q n) with Q = (first d-1 variables): verify I = Q*n
      if (n < 1) throw PreconditionError("dim1-canonical: need at least one variable");
      std::vector<Poly> Q;
      for (size_t v = 0; v + 1 < n; ++v) Q.push_back(poly_var(R, v));
      std::vector<Poly> Qn = ideal_product(R, Q, maximal_ideal_gens(R));
      GroebnerBasis gi = groebner_basis(R, P.gens, bud);
      GroebnerBasis gq = groebner_basis(R, Qn, bud);
      for (auto& f : P.gens)
        if (!in_ideal(R, f, gq, bud))
          throw PreconditionError("dim1-canonical: the ideal is not Q*n for Q = (leading variables)");
      for (auto& f : Qn)
        if (!in_ideal(R, f, gi, bud))
          throw PreconditionError("dim1-canonical: the ideal is not Q*n for Q = (leading variables)");
      F.push_back({});
      std::vector<Poly> acc;
      for (size_t v = 0; v + 1 < n; ++v) {
        acc.push_back(poly_var(R, v));
        F.push_back(acc);
      }
      F.push_back(maximal_ideal_gens(R));
      return F;
    }
    case CanonicalKind::stretched_gorenstein: {
      if (n < 2) throw PreconditionError("stretched-gorenstein: need h >= 2");
      FiniteAlgebra A = build_finite_algebra(P, bud);
      std::vector<int> h = fa_adic_hilbert(A);
      if (h.size() > 2 && h[2] > 1)
        throw PreconditionError("stretched-gorenstein: the ring is not g-stretched");
      if (fa_socle(A).size() != 1)
        throw PreconditionError("stretched-gorenstein: the ring is not Gorenstein");
      F.push_back({});
      F.push_back(maximal_ideal_gens(R));
      std::vector<Poly> acc;
      for (size_t i = 0; i + 1 < n; ++i) {  // (y_1..y_i), 1 <= i <= h-1
        acc.push_back(poly_var(R, i));
        F.push_back(acc);
      }
      for (size_t j = 1; j < n; ++j) {  // (y_j..y_h), 2 <= j <= h
        std::vector<Poly> tail;
        for (size_t v = j; v < n; ++v) tail.push_back(poly_var(R, v));
        F.push_back(tail);
      }
      return F;
    }
    case CanonicalKind::dim1_gorenstein: {
      // first variable x regular, R/(x) artinian stretched Gorenstein
      if (n < 3)
        throw PreconditionError("dim1-gorenstein: need the regular element and h >= 2 variables");
      Poly x = poly_var(R, 0);
      {
        auto E = make_filtration_engine(P, {}, bud);
        size_t zero = E->make({});
        size_t ann = E->colon_elt(zero, x);
        if (!E->is_zero(ann))
          throw PreconditionError("dim1-gorenstein: the first variable is not regular");
      }
      RingPresentation Pbar = drop_variable(P, 0);
      FiniteAlgebra Abar = build_finite_algebra(Pbar, bud);
      std::vector<int> h = fa_adic_hilbert(Abar);
      if (h.size() > 2 && h[2] > 1)
        throw PreconditionError("dim1-gorenstein: the artinian reduction is not stretched");
      if (fa_socle(Abar).size() != 1)
        throw PreconditionError("dim1-gorenstein: the artinian reduction is not Gorenstein");
      F.push_back({});
      F.push_back({x});
      F.push_back(maximal_ideal_gens(R));
      std::vector<Poly> acc = {x};
      for (size_t i = 1; i + 1 < n; ++i) {  // (y_1..y_i, x)
        acc.push_back(poly_var(R, i));
        F.push_back(acc);
      }
      for (size_t j = 2; j < n; ++j) {  // (y_j..y_h, x)
        std::vector<Poly> tail = {x};
        for (size_t v = j; v < n; ++v) tail.push_back(poly_var(R, v));
        F.push_back(tail);
      }
      return F;
    }
  }
  throw StructuralError("unreachable");
}

std::vector<std::pair<std::string, std::vector<Poly>>> parse_filtration_file(
    const Ring& R, const std::string& text) {
  std::vector<std::pair<std::string, std::vector<Poly>>> out;
  std::istringstream is(text);
  std::string line;
  int lineno = 0;
  while (std::getline(is, line)) {
    ++lineno;
    std::string stripped;
    for (char c : line) {
      if (c == '#') break;
      stripped.push_back(c);
    }
    bool blank = true;
    for (char c : stripped)
      if (!std::isspace((unsigned char)c)) blank = false;
    if (blank) continue;
    auto eq = stripped.find('=');
    if (eq == std::string::npos)
      throw ParseError("filtration file: expected 'name = gens'", lineno, 1);
    std::string name;
    for (char c : stripped.substr(0, eq))
      if (!std::isspace((unsigned char)c)) name.push_back(c);
    if (name.empty()) throw ParseError("filtration file: empty ideal name", lineno, 1);
    std::string rhs = stripped.substr(eq + 1);
    std::vector<Poly> gens;
    std::string item;
    auto flush = [&]() {
      bool b = true;
      for (char c : item)
        if (!std::isspace((unsigned char)c)) b = false;
      if (!b) {
        Poly p = parse_poly(R, item);
        if (!p.is_zero()) gens.push_back(p);
      }
      item.clear();
    };
    for (char c : rhs) {
      if (c == ',') flush();
      else item.push_back(c);
    }
    flush();
    out.push_back({name, gens});
  }
  return out;
}

}  // namespace lindel
