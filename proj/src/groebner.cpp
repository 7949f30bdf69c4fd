#include "lindel/groebner.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace lindel {

namespace {
thread_local BudgetUsage g_usage;
}  // namespace

BudgetUsage budget_usage() { return g_usage; }
void reset_budget_usage() { g_usage = BudgetUsage{}; }

namespace {

void note_usage(size_t pairs_inc, size_t basis, uint32_t degree) {
  g_usage.pairs += pairs_inc;
  g_usage.basis = std::max(g_usage.basis, basis);
  g_usage.degree = std::max(g_usage.degree, degree);
}

Poly spoly(const Ring& R, const Poly& f, const Poly& g) {
  Monomial l = Monomial::lcm(f.lm(), g.lm());
  Poly a = mul_term(R, f, l / f.lm(), f.lc().inv());
  Poly b = mul_term(R, g, l / g.lm(), g.lc().inv());
  return sub(R, a, b);
}

struct Pair {
  size_t i, j;
  uint32_t deg;  // lcm degree
  bool operator<(const Pair& o) const {
    if (deg != o.deg) return deg < o.deg;
    if (i != o.i) return i < o.i;
    return j < o.j;
  }
};

}  // namespace

Poly normal_form(const Ring& R, Poly f, const std::vector<Poly>& basis) {
  std::vector<Term> out;
  while (!f.is_zero()) {
    bool reduced = false;
    for (const Poly& g : basis) {
      if (g.is_zero()) continue;
      if (g.lm().divides(f.lm())) {
        f = sub(R, f, mul_term(R, g, f.lm() / g.lm(), f.lc() / g.lc()));
        reduced = true;
        break;
      }
    }
    if (!reduced) {
      out.push_back(f.lt());
      f = Poly::raw(std::vector<Term>(f.terms().begin() + 1, f.terms().end()));
    }
  }
  return Poly::raw(std::move(out));
}

static uint32_t ecart(const Poly& f) { return f.max_degree() - f.lm().degree(); }

Poly mora_weak_nf(const Ring& R, Poly f, const std::vector<Poly>& basis, const Budget& bud) {
  std::vector<Poly> L = basis;
  size_t steps = 0;
  Poly h = std::move(f);
  while (!h.is_zero()) {
    int best = -1;
    uint32_t best_ecart = 0;
    for (size_t k = 0; k < L.size(); ++k) {
      if (L[k].is_zero() || !L[k].lm().divides(h.lm())) continue;
      uint32_t e = ecart(L[k]);
      if (best < 0 || e < best_ecart) { best = (int)k; best_ecart = e; }
    }
    if (best < 0) break;
    if (best_ecart > ecart(h)) L.push_back(h);
    h = sub(R, h, mul_term(R, L[best], h.lm() / L[best].lm(), h.lc() / L[best].lc()));
    h = normalize_content(R, h);
    note_usage(1, L.size(), h.is_zero() ? 0 : h.lm().degree());
    if (++steps > bud.max_pairs)
      throw BudgetError("mora normal form", L.size(), h.is_zero() ? 0 : h.max_degree(), steps);
  }
  return h;
}

namespace {

// Buchberger chain criterion in the lcm-based form: pair (i,j) is redundant if
// some other leading monomial divides lcm(i,j) and neither sub-lcm equals it.
bool chain_redundant(const std::vector<Poly>& basis, size_t i, size_t j, const Monomial& lcm_ij) {
  for (size_t k = 0; k < basis.size(); ++k) {
    if (k == i || k == j || basis[k].is_zero()) continue;
    if (!basis[k].lm().divides(lcm_ij)) continue;
    if (Monomial::lcm(basis[i].lm(), basis[k].lm()) == lcm_ij) continue;
    if (Monomial::lcm(basis[j].lm(), basis[k].lm()) == lcm_ij) continue;
    return true;
  }
  return false;
}

std::vector<Poly> core_loop(const Ring& R, std::vector<Poly> basis, const Budget& bud, bool local) {
  std::set<Pair> pairs;
  auto push_pairs = [&](size_t j) {
    for (size_t i = 0; i < j; ++i) {
      if (basis[i].is_zero()) continue;
      pairs.insert(Pair{i, j, Monomial::lcm(basis[i].lm(), basis[j].lm()).degree()});
    }
  };
  for (size_t j = 0; j < basis.size(); ++j) push_pairs(j);
  size_t processed = 0;
  while (!pairs.empty()) {
    Pair p = *pairs.begin();
    pairs.erase(pairs.begin());
    note_usage(1, basis.size(), p.deg);
    if (++processed > bud.max_pairs)
      throw BudgetError("groebner", basis.size(), p.deg, processed);
    if (p.deg > bud.max_degree)
      throw BudgetError("groebner", basis.size(), p.deg, processed);
    const Poly &f = basis[p.i], &g = basis[p.j];
    if (Monomial::coprime(f.lm(), g.lm())) continue;  // product criterion
    Monomial l = Monomial::lcm(f.lm(), g.lm());
    if (chain_redundant(basis, p.i, p.j, l)) continue;
    Poly s = spoly(R, f, g);
    Poly h = local ? mora_weak_nf(R, std::move(s), basis, bud)
                   : normal_form(R, std::move(s), basis);
    if (h.is_zero()) continue;
    h = normalize_content(R, h);
    basis.push_back(std::move(h));
    if (basis.size() > bud.max_basis)
      throw BudgetError("groebner", basis.size(), p.deg, processed);
    push_pairs(basis.size() - 1);
  }
  return basis;
}

std::vector<Poly> minimalize(const std::vector<Poly>& basis) {
  std::vector<Poly> out;
  for (size_t i = 0; i < basis.size(); ++i) {
    if (basis[i].is_zero()) continue;
    bool keep = true;
    for (size_t j = 0; j < basis.size(); ++j) {
      if (i == j || basis[j].is_zero()) continue;
      if (basis[j].lm().divides(basis[i].lm()) && basis[j].lm() != basis[i].lm()) { keep = false; break; }
      if (basis[j].lm() == basis[i].lm() && j < i) { keep = false; break; }
    }
    if (keep) out.push_back(basis[i]);
  }
  return out;
}

}  // namespace

GroebnerBasis groebner_basis(const Ring& R, std::vector<Poly> gens, const Budget& bud) {
  std::vector<Poly> basis;
  for (auto& g : gens)
    if (!g.is_zero()) basis.push_back(normalize_content(R, g));
  GroebnerBasis out;
  out.order = R.order;
  if (basis.empty()) {
    out.reduced = true;
    return out;
  }
  const bool local = !R.order.global();
  basis = core_loop(R, std::move(basis), bud, local);
  basis = minimalize(basis);
  if (!local) {
    // tail-reduce each element against the others
    for (size_t i = 0; i < basis.size(); ++i) {
      std::vector<Poly> others;
      for (size_t j = 0; j < basis.size(); ++j)
        if (j != i) others.push_back(basis[j]);
      basis[i] = normal_form(R, basis[i], others);
    }
  }
  for (auto& g : basis) g = normalize_content(R, g);
  // deterministic presentation: ascending leading monomials (by degree for local orders)
  const OrderSpec sort_order = local ? OrderSpec{OrderSpec::Kind::degrevlex, 0} : R.order;
  std::sort(basis.begin(), basis.end(), [&](const Poly& a, const Poly& b) {
    return mono_cmp(a.lm(), b.lm(), sort_order) < 0;
  });
  out.els = std::move(basis);
  out.reduced = !local;
  return out;
}

bool in_ideal(const Ring& R, const Poly& f, const GroebnerBasis& gb, const Budget& bud) {
  if (f.is_zero()) return true;
  if (R.order.global()) return normal_form(R, f, gb.els).is_zero();
  return mora_weak_nf(R, f, gb.els, bud).is_zero();
}

// ---------------------------------------------------------------------------
// module layer
// ---------------------------------------------------------------------------

int vterm_cmp(const VTerm& a, const VTerm& b, const ModOrder& o) {
  const int ba = a.comp < o.split ? 0 : 1;
  const int bb = b.comp < o.split ? 0 : 1;
  if (ba != bb) return ba < bb ? 1 : -1;
  const long wa = (long)a.m.degree() + o.weights[a.comp];
  const long wb = (long)b.m.degree() + o.weights[b.comp];
  if (wa != wb) return wa < wb ? -1 : 1;
  int c = mono_cmp(a.m, b.m, o.ring_order);
  if (c) return c;
  if (a.comp != b.comp) return a.comp < b.comp ? 1 : -1;
  return 0;
}

Vec vec_make(const ModOrder& o, std::vector<VTerm> ts) {
  std::sort(ts.begin(), ts.end(),
            [&](const VTerm& a, const VTerm& b) { return vterm_cmp(a, b, o) > 0; });
  std::vector<VTerm> out;
  for (auto& t : ts) {
    if (t.c.is_zero()) continue;
    if (!out.empty() && out.back().m == t.m && out.back().comp == t.comp) {
      out.back().c = out.back().c + t.c;
      if (out.back().c.is_zero()) out.pop_back();
    } else {
      out.push_back(t);
    }
  }
  return Vec::raw(std::move(out));
}

Vec vec_add(const ModOrder& o, const Vec& a, const Vec& b) {
  std::vector<VTerm> out;
  out.reserve(a.terms().size() + b.terms().size());
  size_t i = 0, j = 0;
  const auto& ta = a.terms();
  const auto& tb = b.terms();
  while (i < ta.size() && j < tb.size()) {
    int c = vterm_cmp(ta[i], tb[j], o);
    if (c > 0) out.push_back(ta[i++]);
    else if (c < 0) out.push_back(tb[j++]);
    else {
      Scalar s = ta[i].c + tb[j].c;
      if (!s.is_zero()) out.push_back(VTerm{ta[i].m, ta[i].comp, s});
      ++i; ++j;
    }
  }
  while (i < ta.size()) out.push_back(ta[i++]);
  while (j < tb.size()) out.push_back(tb[j++]);
  return Vec::raw(std::move(out));
}

Vec vec_mul_term(const Vec& a, const Monomial& m, const Scalar& c) {
  if (c.is_zero()) return Vec();
  std::vector<VTerm> out = a.terms();
  for (auto& t : out) {
    t.m = t.m * m;
    t.c = t.c * c;
  }
  return Vec::raw(std::move(out));
}

Vec vec_from_cols(const ModOrder& o, const std::vector<Poly>& comps) {
  std::vector<VTerm> ts;
  for (size_t c = 0; c < comps.size(); ++c)
    for (auto& t : comps[c].terms()) ts.push_back(VTerm{t.m, (uint32_t)c, t.c});
  return vec_make(o, std::move(ts));
}

std::vector<Poly> vec_to_cols(const Vec& v, size_t ncomps, const Ring& R) {
  std::vector<std::vector<Term>> parts(ncomps);
  for (auto& t : v.terms()) parts[t.comp].push_back(Term{t.m, t.c});
  std::vector<Poly> out;
  out.reserve(ncomps);
  for (auto& p : parts) out.push_back(poly_make(R, std::move(p)));
  return out;
}

namespace {

Vec vec_normalize(const Ring& R, const Vec& v) {
  if (v.is_zero()) return v;
  if (R.field.kind == Field::Kind::prime) {
    return vec_mul_term(v, Monomial(R.nvars()), v.lt().c.inv());
  }
  Integer den(1), num(0);
  for (auto& t : v.terms()) {
    const Rational& q = t.c.rat();
    den = den * q.den() / Integer::gcd(den, q.den());
    num = Integer::gcd(num, q.num());
  }
  Scalar f = Scalar::of_rational(R.field, Rational(den, num));
  Vec r = vec_mul_term(v, Monomial(R.nvars()), f);
  if (r.lt().c.rat().num().sign() < 0)
    r = vec_mul_term(r, Monomial(R.nvars()), Scalar::of_ll(R.field, -1));
  return r;
}

Vec vec_nf(const Ring& R, const ModOrder& o, Vec f, const std::vector<Vec>& basis) {
  std::vector<VTerm> out;
  while (!f.is_zero()) {
    bool red = false;
    for (const Vec& g : basis) {
      if (g.is_zero()) continue;
      const VTerm& gl = g.lt();
      const VTerm& fl = f.lt();
      if (gl.comp == fl.comp && gl.m.divides(fl.m)) {
        f = vec_add(o, f, vec_mul_term(g, fl.m / gl.m, -(fl.c / gl.c)));
        red = true;
        break;
      }
    }
    if (!red) {
      out.push_back(f.lt());
      f = Vec::raw(std::vector<VTerm>(f.terms().begin() + 1, f.terms().end()));
    }
  }
  return Vec::raw(std::move(out));
}

std::vector<Vec> module_buchberger(const Ring& R, const ModOrder& o, std::vector<Vec> basis,
                                   const Budget& bud) {
  struct MPair {
    size_t i, j;
    uint32_t deg;
    bool operator<(const MPair& p) const {
      if (deg != p.deg) return deg < p.deg;
      if (i != p.i) return i < p.i;
      return j < p.j;
    }
  };
  std::set<MPair> pairs;
  auto push_pairs = [&](size_t j) {
    for (size_t i = 0; i < j; ++i) {
      if (basis[i].is_zero() || basis[j].is_zero()) continue;
      if (basis[i].lt().comp != basis[j].lt().comp) continue;
      uint32_t d = Monomial::lcm(basis[i].lt().m, basis[j].lt().m).degree();
      pairs.insert(MPair{i, j, d});
    }
  };
  for (size_t j = 0; j < basis.size(); ++j) push_pairs(j);
  size_t processed = 0;
  while (!pairs.empty()) {
    MPair p = *pairs.begin();
    pairs.erase(pairs.begin());
    note_usage(1, basis.size(), p.deg);
    if (++processed > bud.max_pairs)
      throw BudgetError("module groebner", basis.size(), p.deg, processed);
    if (p.deg > bud.max_degree)
      throw BudgetError("module groebner", basis.size(), p.deg, processed);
    const Vec &f = basis[p.i], &g = basis[p.j];
    const Monomial l = Monomial::lcm(f.lt().m, g.lt().m);
    // chain criterion (same leading component)
    bool redundant = false;
    for (size_t k = 0; k < basis.size() && !redundant; ++k) {
      if (k == p.i || k == p.j || basis[k].is_zero()) continue;
      if (basis[k].lt().comp != f.lt().comp) continue;
      if (!basis[k].lt().m.divides(l)) continue;
      if (Monomial::lcm(f.lt().m, basis[k].lt().m) == l) continue;
      if (Monomial::lcm(g.lt().m, basis[k].lt().m) == l) continue;
      redundant = true;
    }
    if (redundant) continue;
    Vec a = vec_mul_term(f, l / f.lt().m, f.lt().c.inv());
    Vec b = vec_mul_term(g, l / g.lt().m, -(g.lt().c.inv()));
    Vec h = vec_nf(R, o, vec_add(o, a, b), basis);
    if (h.is_zero()) continue;
    basis.push_back(vec_normalize(R, h));
    if (basis.size() > bud.max_basis)
      throw BudgetError("module groebner", basis.size(), p.deg, processed);
    push_pairs(basis.size() - 1);
  }
  // minimalize leading terms
  std::vector<Vec> out;
  for (size_t i = 0; i < basis.size(); ++i) {
    if (basis[i].is_zero()) continue;
    bool keep = true;
    for (size_t j = 0; j < basis.size() && keep; ++j) {
      if (i == j || basis[j].is_zero()) continue;
      if (basis[j].lt().comp != basis[i].lt().comp) continue;
      const Monomial &mi = basis[i].lt().m, &mj = basis[j].lt().m;
      if (mj.divides(mi) && mj != mi) keep = false;
      if (mj == mi && j < i) keep = false;
    }
    if (keep) out.push_back(basis[i]);
  }
  return out;
}

}  // namespace

ModuleCtx::ModuleCtx(const Ring& R, std::vector<std::vector<Poly>> cols, size_t target_rank,
                     std::vector<int> target_weights, std::vector<Poly> quot_gb, const Budget& bud)
    : R_(R), r_(target_rank), p_(cols.size()), quot_gb_(std::move(quot_gb)), bud_(bud) {
  if (!R.order.global())
    throw UnsupportedError("module computations require a global order");
  if (target_weights.empty()) target_weights.assign(r_, 0);
  ord_.ring_order = R.order;
  ord_.split = (uint32_t)r_;
  ord_.weights = target_weights;
  ord_.weights.resize(r_ + p_, 0);
  // tag weights: degree of the column when consistent
  for (size_t i = 0; i < p_; ++i) {
    int w = 0;
    for (size_t j = 0; j < r_; ++j)
      if (!cols[i][j].is_zero())
        w = std::max(w, (int)cols[i][j].max_degree() + target_weights[j]);
    ord_.weights[r_ + i] = w;
  }
  std::vector<Vec> gens;
  const Scalar one = Scalar::one(R.field);
  for (size_t i = 0; i < p_; ++i) {
    std::vector<VTerm> ts;
    for (size_t j = 0; j < r_; ++j)
      for (auto& t : cols[i][j].terms()) ts.push_back(VTerm{t.m, (uint32_t)j, t.c});
    ts.push_back(VTerm{Monomial(R.nvars()), (uint32_t)(r_ + i), one});
    gens.push_back(vec_make(ord_, std::move(ts)));
  }
  for (const Poly& g : quot_gb_) {
    for (size_t j = 0; j < r_; ++j) {
      std::vector<VTerm> ts;
      for (auto& t : g.terms()) ts.push_back(VTerm{t.m, (uint32_t)j, t.c});
      gens.push_back(vec_make(ord_, std::move(ts)));
    }
  }
  gb_ = module_buchberger(R_, ord_, std::move(gens), bud_);
  for (const Vec& v : gb_) {
    if (v.is_zero() || v.lt().comp < r_) continue;
    std::vector<Poly> syz(p_);
    {
      std::vector<std::vector<Term>> parts(p_);
      for (auto& t : v.terms()) parts[t.comp - r_].push_back(Term{t.m, t.c});
      for (size_t i = 0; i < p_; ++i) syz[i] = poly_make(R_, std::move(parts[i]));
    }
    for (auto& c : syz) c = normal_form(R_, c, quot_gb_);
    bool all_zero = true;
    for (auto& c : syz) all_zero &= c.is_zero();
    if (!all_zero) kernel_.push_back(std::move(syz));
  }
}

bool ModuleCtx::lift(const std::vector<Poly>& f, std::vector<Poly>& coeffs) const {
  std::vector<VTerm> ts;
  for (size_t j = 0; j < r_; ++j)
    for (auto& t : f[j].terms()) ts.push_back(VTerm{t.m, (uint32_t)j, t.c});
  Vec v = vec_make(ord_, std::move(ts));
  v = vec_nf(R_, ord_, std::move(v), gb_);
  for (auto& t : v.terms())
    if (t.comp < r_) return false;
  coeffs.assign(p_, Poly());
  std::vector<std::vector<Term>> parts(p_);
  for (auto& t : v.terms()) parts[t.comp - r_].push_back(Term{t.m, -t.c});
  for (size_t i = 0; i < p_; ++i)
    coeffs[i] = normal_form(R_, poly_make(R_, std::move(parts[i])), quot_gb_);
  return true;
}

bool ModuleCtx::contains(const std::vector<Poly>& f) const {
  std::vector<Poly> tmp;
  return lift(f, tmp);
}

// ---------------------------------------------------------------------------
// ideal arithmetic
// ---------------------------------------------------------------------------

bool is_monomial_set(const std::vector<Poly>& gens) {
  for (auto& g : gens)
    if (g.nterms() > 1) return false;
  return true;
}

namespace {

std::vector<Poly> minimalize_monomial(const Ring& R, const std::vector<Poly>& gens) {
  std::vector<Poly> out;
  for (size_t i = 0; i < gens.size(); ++i) {
    if (gens[i].is_zero()) continue;
    bool keep = true;
    for (size_t j = 0; j < gens.size() && keep; ++j) {
      if (i == j || gens[j].is_zero()) continue;
      const Monomial &mi = gens[i].lm(), &mj = gens[j].lm();
      if (mj.divides(mi) && mj != mi) keep = false;
      if (mj == mi && j < i) keep = false;
    }
    if (keep) out.push_back(make_monic(gens[i]));
  }
  std::sort(out.begin(), out.end(),
            [&](const Poly& a, const Poly& b) { return mono_cmp(a.lm(), b.lm(), R.order) < 0; });
  return out;
}

}  // namespace

std::vector<Poly> ideal_intersect_S(const Ring& R, const std::vector<Poly>& A,
                                    const std::vector<Poly>& B, const Budget& bud) {
  if (is_monomial_set(A) && is_monomial_set(B)) {
    std::vector<Poly> out;
    for (auto& a : A)
      for (auto& b : B) {
        if (a.is_zero() || b.is_zero()) continue;
        out.push_back(poly_term(R, Monomial::lcm(a.lm(), b.lm()), Scalar::one(R.field)));
      }
    return minimalize_monomial(R, out);
  }
  // tag variable t: eliminate t from t*A + (1-t)*B
  Ring Rt;
  Rt.field = R.field;
  Rt.vars.push_back("@t");
  for (auto& v : R.vars) Rt.vars.push_back(v);
  Rt.order = OrderSpec{OrderSpec::Kind::block_elim, 1};
  auto lift_shift = [&](const Poly& f, uint16_t tdeg) {
    std::vector<Term> ts;
    for (auto& t : f.terms()) {
      std::vector<uint16_t> e;
      e.push_back(tdeg);
      for (auto x : t.m.exps()) e.push_back(x);
      ts.push_back(Term{Monomial(std::move(e)), t.c});
    }
    return poly_make(Rt, std::move(ts));
  };
  std::vector<Poly> gens;
  for (auto& a : A) gens.push_back(lift_shift(a, 1));
  for (auto& b : B) gens.push_back(sub(Rt, lift_shift(b, 0), lift_shift(b, 1)));
  GroebnerBasis gb = groebner_basis(Rt, gens, bud);
  std::vector<Poly> out;
  for (auto& g : gb.els) {
    bool has_t = false;
    for (auto& t : g.terms())
      if (t.m[0] > 0) { has_t = true; break; }
    if (has_t) continue;
    std::vector<Term> ts;
    for (auto& t : g.terms()) {
      std::vector<uint16_t> e(t.m.exps().begin() + 1, t.m.exps().end());
      ts.push_back(Term{Monomial(std::move(e)), t.c});
    }
    out.push_back(poly_make(R, std::move(ts)));
  }
  return out;
}

std::vector<Poly> ideal_colon_poly_S(const Ring& R, const std::vector<Poly>& I, const Poly& f,
                                     const Budget& bud) {
  if (f.is_zero()) throw StructuralError("colon by zero element");
  if (is_monomial_set(I) && f.nterms() == 1) {
    std::vector<Poly> out;
    for (auto& g : I) {
      if (g.is_zero()) continue;
      Monomial gg = g.lm();
      Monomial d = f.lm();
      std::vector<uint16_t> e(gg.nvars());
      for (size_t v = 0; v < gg.nvars(); ++v)
        e[v] = gg[v] > d[v] ? (uint16_t)(gg[v] - d[v]) : 0;
      out.push_back(poly_term(R, Monomial(std::move(e)), Scalar::one(R.field)));
    }
    return minimalize_monomial(R, out);
  }
  std::vector<Poly> inter = ideal_intersect_S(R, I, {f}, bud);
  std::vector<Poly> out;
  for (auto& g : inter) out.push_back(exact_div(R, g, f));
  return out;
}

std::vector<Poly> ideal_colon_ideal_S(const Ring& R, const std::vector<Poly>& I,
                                      const std::vector<Poly>& J, const Budget& bud) {
  std::vector<Poly> acc;
  bool first = true;
  for (auto& f : J) {
    if (f.is_zero()) continue;
    std::vector<Poly> c = ideal_colon_poly_S(R, I, f, bud);
    if (first) {
      acc = c;
      first = false;
    } else {
      acc = ideal_intersect_S(R, acc, c, bud);
    }
  }
  if (first) throw StructuralError("colon by zero ideal");
  return acc;
}

std::vector<Poly> eliminate_vars(const Ring& R, const std::vector<Poly>& gens,
                                 const std::vector<bool>& elim, Ring& out_ring,
                                 const Budget& bud) {
  const size_t n = R.nvars();
  std::vector<size_t> front, back;
  for (size_t v = 0; v < n; ++v) (elim[v] ? front : back).push_back(v);
  Ring Rp;
  Rp.field = R.field;
  for (size_t v : front) Rp.vars.push_back(R.vars[v]);
  for (size_t v : back) Rp.vars.push_back(R.vars[v]);
  Rp.order = OrderSpec{OrderSpec::Kind::block_elim, front.size()};
  std::vector<size_t> pos(n);
  for (size_t k = 0; k < front.size(); ++k) pos[front[k]] = k;
  for (size_t k = 0; k < back.size(); ++k) pos[back[k]] = front.size() + k;
  auto permute = [&](const Poly& f) {
    std::vector<Term> ts;
    for (auto& t : f.terms()) {
      std::vector<uint16_t> e(n, 0);
      for (size_t v = 0; v < n; ++v) e[pos[v]] = t.m[v];
      ts.push_back(Term{Monomial(std::move(e)), t.c});
    }
    return poly_make(Rp, std::move(ts));
  };
  std::vector<Poly> lifted;
  for (auto& g : gens) lifted.push_back(permute(g));
  GroebnerBasis gb = groebner_basis(Rp, lifted, bud);
  out_ring.field = R.field;
  out_ring.vars.clear();
  for (size_t v : back) out_ring.vars.push_back(R.vars[v]);
  out_ring.order = OrderSpec{OrderSpec::Kind::degrevlex, 0};
  std::vector<Poly> out;
  for (auto& g : gb.els) {
    bool uses_front = false;
    for (auto& t : g.terms())
      for (size_t k = 0; k < front.size() && !uses_front; ++k)
        if (t.m[k] > 0) uses_front = true;
    if (uses_front) continue;
    std::vector<Term> ts;
    for (auto& t : g.terms()) {
      std::vector<uint16_t> e(back.size());
      for (size_t k = 0; k < back.size(); ++k) e[k] = t.m[front.size() + k];
      ts.push_back(Term{Monomial(std::move(e)), t.c});
    }
    out.push_back(poly_make(out_ring, std::move(ts)));
  }
  return out;
}

std::vector<Poly> ideal_product(const Ring& R, const std::vector<Poly>& A,
                                const std::vector<Poly>& B) {
  std::vector<Poly> out;
  for (auto& a : A)
    for (auto& b : B) {
      Poly p = mul(R, a, b);
      if (!p.is_zero()) out.push_back(p);
    }
  return out;
}

std::vector<Poly> ideal_power(const Ring& R, const std::vector<Poly>& A, int s) {
  if (s <= 0) return {poly_const(R, Scalar::one(R.field))};
  std::vector<Poly> acc = A;
  for (int i = 1; i < s; ++i) acc = ideal_product(R, acc, A);
  return acc;
}

std::vector<Poly> maximal_ideal_gens(const Ring& R) {
  std::vector<Poly> out;
  for (size_t v = 0; v < R.nvars(); ++v) out.push_back(poly_var(R, v));
  return out;
}

std::vector<Poly> minimal_gens_graded(const Ring& R, std::vector<Poly> gens,
                                      const std::vector<Poly>& quot_gb, const Budget& bud) {
  std::vector<Poly> cands;
  for (auto& g : gens) {
    Poly h = normal_form(R, g, quot_gb);
    if (!h.is_zero()) cands.push_back(normalize_content(R, h));
  }
  std::sort(cands.begin(), cands.end(), [&](const Poly& a, const Poly& b) {
    if (a.max_degree() != b.max_degree()) return a.max_degree() < b.max_degree();
    return mono_cmp(a.lm(), b.lm(), R.order) < 0;
  });
  std::vector<Poly> kept;
  for (auto& g : cands) {
    std::vector<Poly> test = kept;
    for (auto& q : quot_gb) test.push_back(q);
    GroebnerBasis gb = groebner_basis(R, test, bud);
    if (!in_ideal(R, g, gb, bud)) kept.push_back(g);
  }
  return kept;
}

}  // namespace lindel
