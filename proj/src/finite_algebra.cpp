#include "lindel/finite_algebra.hpp"

#include <algorithm>
#include <unordered_map>

namespace lindel {

namespace {

struct MonoHash {
  size_t operator()(const Monomial& m) const { return m.hash(); }
};

// all monomials of the given total degree
void monomials_of_degree(size_t n, uint32_t d, std::vector<Monomial>& out) {
  if (n == 0) {
    if (d == 0) out.push_back(Monomial(size_t(0)));
    return;
  }
  std::vector<uint16_t> e(n, 0);
  auto rec = [&](auto&& self, size_t v, uint32_t left) -> void {
    if (v + 1 == n) {
      e[v] = (uint16_t)left;
      out.push_back(Monomial(e));
      return;
    }
    for (uint32_t k = 0; k <= left; ++k) {
      e[v] = (uint16_t)k;
      self(self, v + 1, left - k);
    }
  };
  rec(rec, 0, d);
}

// Total reduction to the standard-monomial basis. Under a local order the
// tail of a reducer has strictly smaller order (same degree but revlex-smaller,
// or higher degree), so the recursion is well-founded once monomials above the
// top standard degree are cut off; those lie in I + m^M for every M, hence in I
// by the Krull intersection theorem, so mapping them to zero is exact.
struct NFContext {
  const Ring& R;
  const std::vector<Poly>& gb;
  const std::vector<Monomial>& basis;
  std::unordered_map<Monomial, size_t, MonoHash> index;
  uint32_t cap = 0;  // monomials of degree > cap vanish in the quotient
  std::unordered_map<Monomial, Row, MonoHash> memo;

  Row nf(const Monomial& w) {
    auto it = memo.find(w);
    if (it != memo.end()) return it->second;
    Row out(basis.size(), Scalar::zero(R.field));
    auto bi = index.find(w);
    if (bi != index.end()) {
      out[bi->second] = Scalar::one(R.field);
      memo.emplace(w, out);
      return out;
    }
    if (w.degree() > cap) {
      memo.emplace(w, out);
      return out;
    }
    const Poly* red = nullptr;
    for (const Poly& g : gb)
      if (g.lm().divides(w)) { red = &g; break; }
    if (!red) throw StructuralError("finite algebra: monomial neither standard nor reducible");
    Monomial q = w / red->lm();
    const Scalar lc = red->lc();
    for (size_t k = 1; k < red->terms().size(); ++k) {
      const Term& t = red->terms()[k];
      Monomial u = q * t.m;
      if (u.degree() > cap) continue;
      Row r = nf(u);
      Scalar c = -(t.c / lc);
      for (size_t i = 0; i < out.size(); ++i)
        if (!r[i].is_zero()) out[i] = out[i] + c * r[i];
    }
    memo[w] = out;
    return out;
  }
};

NFContext make_nf_context(const FiniteAlgebra& A) {
  NFContext ctx{A.pres.ring, A.basis_ideal.els, A.basis, {}, 0, {}};
  for (size_t i = 0; i < A.basis.size(); ++i) ctx.index.emplace(A.basis[i], i);
  uint32_t cap = 0;
  for (auto& m : A.basis) cap = std::max(cap, m.degree());
  ctx.cap = cap;
  return ctx;
}

}  // namespace

bool is_artinian_quotient(const RingPresentation& P, const Budget& bud) {
  GroebnerBasis gb = groebner_basis(P.ring, P.gens, bud);
  const size_t n = P.ring.nvars();
  for (size_t v = 0; v < n; ++v) {
    bool found = false;
    for (const Poly& g : gb.els) {
      const Monomial& m = g.lm();
      bool pure = m[v] > 0;
      for (size_t u = 0; u < n && pure; ++u)
        if (u != v && m[u] > 0) pure = false;
      if (pure) { found = true; break; }
    }
    if (!found) return false;
  }
  return true;
}

FiniteAlgebra build_finite_algebra(const RingPresentation& P, const Budget& bud) {
  FiniteAlgebra A;
  A.pres = P;
  if (P.ring.order.global() && !P.homogeneous)
    throw StructuralError("finite algebra: non-homogeneous presentation requires the local order");
  A.basis_ideal = groebner_basis(P.ring, P.gens, bud);
  const size_t n = P.ring.nvars();
  for (size_t v = 0; v < n; ++v) {
    bool found = false;
    for (const Poly& g : A.basis_ideal.els) {
      const Monomial& m = g.lm();
      bool pure = m[v] > 0;
      for (size_t u = 0; u < n && pure; ++u)
        if (u != v && m[u] > 0) pure = false;
      if (pure) { found = true; break; }
    }
    if (!found)
      throw UnsupportedError("dimension >= 1: use graded engine or tangent cone");
  }
  for (uint32_t d = 0;; ++d) {
    std::vector<Monomial> layer;
    monomials_of_degree(n, d, layer);
    size_t added = 0;
    for (auto& m : layer) {
      bool in_lt = false;
      for (const Poly& g : A.basis_ideal.els)
        if (g.lm().divides(m)) { in_lt = true; break; }
      if (!in_lt) {
        A.basis.push_back(m);
        ++added;
      }
    }
    if (added == 0 && d > 0) break;
    if (d > 4096) throw StructuralError("finite algebra: runaway basis enumeration");
  }
  std::sort(A.basis.begin(), A.basis.end(), [&](const Monomial& a, const Monomial& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    return mono_cmp(a, b, OrderSpec{OrderSpec::Kind::degrevlex, 0}) < 0;
  });
  const size_t D = A.basis.size();
  const Field& F = P.ring.field;

  NFContext ctx = make_nf_context(A);
  A.mult.assign(D, std::vector<Row>(D));
  for (size_t i = 0; i < D; ++i)
    for (size_t j = i; j < D; ++j) {
      Row r = ctx.nf(A.basis[i] * A.basis[j]);
      A.mult[i][j] = r;
      if (j != i) A.mult[j][i] = r;
    }

  A.graded = P.homogeneous && P.ring.order.global();

  A.m_pow.clear();
  {
    Mat full;
    for (size_t i = 0; i < D; ++i) {
      Row r(D, Scalar::zero(F));
      r[i] = Scalar::one(F);
      full.push_back(r);
    }
    A.m_pow.push_back(full);
  }
  std::vector<Row> vars;
  for (size_t v = 0; v < n; ++v) vars.push_back(ctx.nf(Monomial::var(n, v)));
  for (;;) {
    const Mat& prev = A.m_pow.back();
    Echelon e(F, D);
    for (const Row& w : prev)
      for (const Row& xv : vars) {
        Row acc(D, Scalar::zero(F));
        for (size_t i = 0; i < D; ++i) {
          if (xv[i].is_zero()) continue;
          for (size_t j = 0; j < D; ++j) {
            if (w[j].is_zero()) continue;
            const Row& ij = A.mult[i][j];
            Scalar c = xv[i] * w[j];
            for (size_t k = 0; k < D; ++k)
              if (!ij[k].is_zero()) acc[k] = acc[k] + c * ij[k];
          }
        }
        e.add(std::move(acc));
      }
    A.m_pow.push_back(e.rows());
    if (e.dim() == 0) break;
    if (A.m_pow.size() > D + 2)
      throw StructuralError("finite algebra: maximal ideal is not nilpotent");
  }
  A.nilpotency = (int)A.m_pow.size() - 1;

  A.adic_order.assign(D, 0);
  for (size_t i = 0; i < D; ++i) {
    Row r(D, Scalar::zero(F));
    r[i] = Scalar::one(F);
    A.adic_order[i] = fa_adic_order_of(A, r);
  }
  return A;
}

Row fa_zero(const FiniteAlgebra& A) { return Row(A.dim(), Scalar::zero(A.field())); }

Row fa_one(const FiniteAlgebra& A) {
  Row r = fa_zero(A);
  r[0] = Scalar::one(A.field());
  return r;
}

Row fa_var(const FiniteAlgebra& A, size_t v) {
  return fa_from_poly(A, poly_var(A.pres.ring, v));
}

Row fa_from_poly(const FiniteAlgebra& A, const Poly& f) {
  NFContext ctx = make_nf_context(A);
  Row out = fa_zero(A);
  for (auto& t : f.terms()) {
    Row r = ctx.nf(t.m);
    for (size_t i = 0; i < out.size(); ++i)
      if (!r[i].is_zero()) out[i] = out[i] + t.c * r[i];
  }
  return out;
}

Poly fa_to_poly(const FiniteAlgebra& A, const Row& a) {
  std::vector<Term> ts;
  for (size_t i = 0; i < a.size(); ++i)
    if (!a[i].is_zero()) ts.push_back(Term{A.basis[i], a[i]});
  return poly_make(A.pres.ring, std::move(ts));
}

Row fa_add(const FiniteAlgebra& A, const Row& a, const Row& b) {
  (void)A;
  Row r = a;
  for (size_t i = 0; i < r.size(); ++i) r[i] = r[i] + b[i];
  return r;
}

Row fa_scale(const FiniteAlgebra& A, const Row& a, const Scalar& c) {
  (void)A;
  Row r = a;
  for (auto& x : r) x = x * c;
  return r;
}

Row fa_mul(const FiniteAlgebra& A, const Row& a, const Row& b) {
  Row acc = fa_zero(A);
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i].is_zero()) continue;
    for (size_t j = 0; j < b.size(); ++j) {
      if (b[j].is_zero()) continue;
      const Row& ij = A.mult[i][j];
      Scalar c = a[i] * b[j];
      for (size_t k = 0; k < acc.size(); ++k)
        if (!ij[k].is_zero()) acc[k] = acc[k] + c * ij[k];
    }
  }
  return acc;
}

bool fa_is_zero(const Row& a) {
  for (auto& x : a)
    if (!x.is_zero()) return false;
  return true;
}

int fa_adic_order_of(const FiniteAlgebra& A, const Row& a) {
  if (fa_is_zero(a)) return A.nilpotency;
  int o = 0;
  for (int j = 1; j <= A.nilpotency; ++j) {
    Echelon e(A.field(), A.dim());
    for (auto& row : A.m_pow[j]) e.add(row);
    if (e.contains(a)) o = j;
    else break;
  }
  return o;
}

Mat fa_socle(const FiniteAlgebra& A) {
  const size_t D = A.dim();
  const size_t n = A.nvars();
  const Field& F = A.field();
  if (n == 0) {
    Mat full;
    full.push_back(fa_one(A));
    return full;
  }
  Mat M(n * D, Row(D, Scalar::zero(F)));
  for (size_t v = 0; v < n; ++v) {
    Row xv = fa_var(A, v);
    for (size_t j = 0; j < D; ++j) {
      Row img = fa_zero(A);
      for (size_t i = 0; i < D; ++i) {
        if (xv[i].is_zero()) continue;
        const Row& ij = A.mult[i][j];
        for (size_t k = 0; k < D; ++k)
          if (!ij[k].is_zero()) img[k] = img[k] + xv[i] * ij[k];
      }
      for (size_t k = 0; k < D; ++k) M[v * D + k][j] = img[k];
    }
  }
  Mat K = kernel_basis(F, M);
  Echelon e(F, D);
  for (auto& r : K) e.add(std::move(r));
  return e.rows();
}

std::vector<int> fa_adic_hilbert(const FiniteAlgebra& A) {
  std::vector<int> h;
  for (int i = 0; i < A.nilpotency; ++i)
    h.push_back((int)A.m_pow[i].size() - (int)A.m_pow[i + 1].size());
  return h;
}

RingPresentation fa_assoc_graded(const FiniteAlgebra& A, const Budget& bud) {
  (void)bud;
  const Field& F = A.field();
  const size_t n = A.nvars();
  RingPresentation out;
  out.ring.field = F;
  out.ring.vars = A.pres.ring.vars;
  out.ring.order = OrderSpec{OrderSpec::Kind::degrevlex, 0};
  out.local = false;
  out.homogeneous = true;
  if (A.graded) {
    out.gens = A.pres.gens;
    return out;
  }
  std::vector<Poly> rels;
  const size_t D = A.dim();
  for (int d = 2; d <= A.nilpotency; ++d) {
    std::vector<Monomial> monos;
    monomials_of_degree(n, (uint32_t)d, monos);
    Echelon next(F, D);
    if (d + 1 <= A.nilpotency)
      for (auto& r : A.m_pow[d + 1]) next.add(r);
    Mat M(D, Row(monos.size(), Scalar::zero(F)));
    for (size_t c = 0; c < monos.size(); ++c) {
      Row img = fa_from_poly(A, poly_term(A.pres.ring, monos[c], Scalar::one(F)));
      img = next.reduce(std::move(img));
      for (size_t k = 0; k < D; ++k) M[k][c] = img[k];
    }
    Mat K = kernel_basis(F, M);
    Echelon known(F, monos.size());
    std::unordered_map<Monomial, size_t, MonoHash> mono_index;
    for (size_t c = 0; c < monos.size(); ++c) mono_index.emplace(monos[c], c);
    for (const Poly& r : rels) {
      uint32_t dr = r.max_degree();
      if (dr > (uint32_t)d) continue;
      std::vector<Monomial> mults;
      monomials_of_degree(n, (uint32_t)d - dr, mults);
      for (auto& u : mults) {
        Poly p = mul_term(out.ring, r, u, Scalar::one(F));
        Row v(monos.size(), Scalar::zero(F));
        for (auto& t : p.terms()) v[mono_index.at(t.m)] = t.c;
        known.add(std::move(v));
      }
    }
    for (auto& kv : K) {
      if (!known.contains(kv)) {
        std::vector<Term> ts;
        for (size_t c = 0; c < monos.size(); ++c)
          if (!kv[c].is_zero()) ts.push_back(Term{monos[c], kv[c]});
        Poly r = normalize_content(out.ring, poly_make(out.ring, ts));
        rels.push_back(r);
        Row v(monos.size(), Scalar::zero(F));
        for (auto& t : r.terms()) v[mono_index.at(t.m)] = t.c;
        known.add(std::move(v));
      }
    }
  }
  out.gens = rels;
  return out;
}

// ---------------------------------------------------------------------------
// FAOps
// ---------------------------------------------------------------------------

FAOps::FAOps(const FiniteAlgebra& A, std::vector<Poly> modulus) : A_(A), mod_gens_(modulus) {
  if (!modulus.empty()) {
    std::vector<Row> seed;
    for (auto& g : modulus) seed.push_back(fa_from_poly(A_, g));
    FAIdeal m0 = close_span(std::move(seed), modulus);
    mod_rows_ = m0.rows;
  }
}

FAIdeal FAOps::close_span(std::vector<Row> seed, std::vector<Poly> gens) const {
  Echelon e(A_.field(), A_.dim());
  for (auto& r : mod_rows_) e.add(r);
  for (const Row& g : seed)
    for (size_t j = 0; j < A_.dim(); ++j) {
      Row img = fa_zero(A_);
      for (size_t i = 0; i < g.size(); ++i) {
        if (g[i].is_zero()) continue;
        const Row& ij = A_.mult[i][j];
        for (size_t k = 0; k < img.size(); ++k)
          if (!ij[k].is_zero()) img[k] = img[k] + g[i] * ij[k];
      }
      e.add(std::move(img));
    }
  return FAIdeal{e.rows(), std::move(gens)};
}

FAIdeal FAOps::make(const std::vector<Poly>& gens) const {
  std::vector<Row> seed;
  for (auto& g : gens) seed.push_back(fa_from_poly(A_, g));
  return close_span(std::move(seed), gens);
}

FAIdeal FAOps::zero_ideal() const { return FAIdeal{mod_rows_, {}}; }

FAIdeal FAOps::maximal_ideal() const { return make(maximal_ideal_gens(A_.pres.ring)); }

bool FAOps::is_proper(const FAIdeal& I) const {
  Echelon e(A_.field(), A_.dim());
  for (auto& r : I.rows) e.add(r);
  return !e.contains(fa_one(A_));
}

bool FAOps::is_zero_ideal(const FAIdeal& I) const { return I.rows.size() == mod_rows_.size(); }

bool FAOps::subset(const FAIdeal& a, const FAIdeal& b) const {
  Echelon e(A_.field(), A_.dim());
  for (auto& r : b.rows) e.add(r);
  for (auto& r : a.rows)
    if (!e.contains(r)) return false;
  return true;
}

bool FAOps::equal(const FAIdeal& a, const FAIdeal& b) const {
  return a.rows.size() == b.rows.size() && subset(a, b);
}

bool FAOps::contains_poly(const FAIdeal& I, const Poly& f) const {
  Echelon e(A_.field(), A_.dim());
  for (auto& r : I.rows) e.add(r);
  return e.contains(fa_from_poly(A_, f));
}

FAIdeal FAOps::sum_poly(const FAIdeal& I, const Poly& x) const {
  FAIdeal X = make({x});
  Echelon e(A_.field(), A_.dim());
  for (auto& r : I.rows) e.add(r);
  for (auto& r : X.rows) e.add(r);
  std::vector<Poly> gens = I.gens;
  gens.push_back(x);
  return FAIdeal{e.rows(), std::move(gens)};
}

FAIdeal FAOps::intersect(const FAIdeal& a, const FAIdeal& b) const {
  Mat inter = subspace_intersect(A_.field(), a.rows, b.rows);
  Echelon e(A_.field(), A_.dim());
  for (auto& r : inter) e.add(r);
  return FAIdeal{e.rows(), {}};
}

FAIdeal FAOps::product(const FAIdeal& a, const FAIdeal& b) const {
  Echelon e(A_.field(), A_.dim());
  for (auto& r : mod_rows_) e.add(r);
  for (auto& u : a.rows)
    for (auto& v : b.rows) e.add(fa_mul(A_, u, v));
  return FAIdeal{e.rows(), {}};
}

FAIdeal FAOps::colon_poly(const FAIdeal& I, const Poly& x) const {
  const size_t D = A_.dim();
  const Field& F = A_.field();
  Row xr = fa_from_poly(A_, x);
  Echelon iq(F, D);
  for (auto& r : I.rows) iq.add(r);
  Mat M(D, Row(D, Scalar::zero(F)));
  for (size_t j = 0; j < D; ++j) {
    Row ej(D, Scalar::zero(F));
    ej[j] = Scalar::one(F);
    Row img = fa_mul(A_, ej, xr);
    img = iq.reduce(std::move(img));
    for (size_t k = 0; k < D; ++k) M[k][j] = img[k];
  }
  Mat K = kernel_basis(F, M);
  Echelon e(F, D);
  for (auto& r : mod_rows_) e.add(r);
  for (auto& r : K) e.add(std::move(r));
  return FAIdeal{e.rows(), {}};
}

FAIdeal FAOps::colon_ideal(const FAIdeal& I, const FAIdeal& J) const {
  bool first = true;
  FAIdeal acc;
  for (auto& g : J.rows) {
    FAIdeal c = colon_poly(I, fa_to_poly(A_, g));
    if (first) { acc = c; first = false; }
    else acc = intersect(acc, c);
  }
  if (first) throw StructuralError("colon by zero ideal");
  return acc;
}

FAIdeal FAOps::mpow(int s) const {
  Echelon e(A_.field(), A_.dim());
  for (auto& r : mod_rows_) e.add(r);
  int idx = std::min<int>(std::max(s, 0), A_.nilpotency);
  for (auto& r : A_.m_pow[idx]) e.add(r);
  return FAIdeal{e.rows(), {}};
}

std::vector<Poly> FAOps::min_gens(const FAIdeal& I) const {
  FAIdeal mI = product(maximal_ideal(), I);
  Echelon e(A_.field(), A_.dim());
  for (auto& r : mI.rows) e.add(r);
  std::vector<Poly> out;
  std::vector<Row> cands;
  for (auto& g : I.gens) cands.push_back(fa_from_poly(A_, g));
  for (auto& r : I.rows) cands.push_back(r);
  for (auto& c : cands) {
    if (e.add(c)) out.push_back(fa_to_poly(A_, c));
  }
  return out;
}

size_t FAOps::mu(const FAIdeal& I) const {
  FAIdeal mI = product(maximal_ideal(), I);
  return I.rows.size() - mI.rows.size();
}

}  // namespace lindel
