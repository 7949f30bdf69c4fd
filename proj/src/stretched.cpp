#include "lindel/stretched.hpp"

#include <algorithm>
#include <numeric>
#include <random>

namespace lindel {

namespace {

std::vector<Monomial> monos_of_degree(size_t n, uint32_t d) {
  std::vector<Monomial> out;
  if (n == 0) {
    if (d == 0) out.push_back(Monomial(size_t(0)));
    return out;
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
  return out;
}

std::vector<Monomial> lt_monomials(const std::vector<Poly>& gb) {
  std::vector<Monomial> out;
  for (auto& g : gb)
    if (!g.is_zero()) out.push_back(g.lm());
  return out;
}

bool in_lt(const std::vector<Monomial>& lts, const Monomial& m) {
  for (auto& l : lts)
    if (l.divides(m)) return true;
  return false;
}

// Krull dimension of S/(monomial ideal): largest independent variable subset
int monomial_dim(size_t n, const std::vector<Monomial>& lts) {
  int best = 0;
  for (size_t mask = 0; mask < (size_t(1) << n); ++mask) {
    bool ok = true;
    for (auto& m : lts) {
      bool inside = true;
      for (size_t v = 0; v < n && inside; ++v)
        if (m[v] > 0 && !(mask & (size_t(1) << v))) inside = false;
      if (inside) { ok = false; break; }
    }
    if (ok) best = std::max(best, __builtin_popcountll((unsigned long long)mask));
  }
  return best;
}

// Hilbert series numerator of S/(monomial ideal) over (1-t)^n
std::vector<long> hilbert_numerator(size_t n, std::vector<Monomial> gens) {
  // minimalize
  std::vector<Monomial> min;
  for (size_t i = 0; i < gens.size(); ++i) {
    bool keep = true;
    for (size_t j = 0; j < gens.size() && keep; ++j) {
      if (i == j) continue;
      if (gens[j].divides(gens[i]) && gens[j] != gens[i]) keep = false;
      if (gens[j] == gens[i] && j < i) keep = false;
    }
    if (keep) min.push_back(gens[i]);
  }
  if (min.empty()) return {1};
  Monomial u = min.back();
  std::vector<Monomial> rest(min.begin(), min.end() - 1);
  std::vector<long> a = hilbert_numerator(n, rest);
  // colon (rest : u)
  std::vector<Monomial> colon;
  for (auto& g : rest) {
    std::vector<uint16_t> e(n);
    for (size_t v = 0; v < n; ++v) e[v] = g[v] > u[v] ? (uint16_t)(g[v] - u[v]) : 0;
    colon.push_back(Monomial(std::move(e)));
  }
  std::vector<long> b = hilbert_numerator(n, colon);
  std::vector<long> out = a;
  size_t du = u.degree();
  if (out.size() < b.size() + du) out.resize(b.size() + du, 0);
  for (size_t i = 0; i < b.size(); ++i) out[i + du] -= b[i];
  while (out.size() > 1 && out.back() == 0) out.pop_back();
  return out;
}

// exact division by (1-t)^k; throws on nonzero remainder
std::vector<long> divide_one_minus_t(std::vector<long> p, int k) {
  for (int rep = 0; rep < k; ++rep) {
    // p(t) = (1-t) q(t) requires p(1) = 0; q_i = sum_{j<=i} p_j
    long acc = 0;
    std::vector<long> q;
    for (size_t i = 0; i < p.size(); ++i) {
      acc += p[i];
      q.push_back(acc);
    }
    if (acc != 0) throw StructuralError("hilbert series: inexact division by (1-t)");
    q.pop_back();
    if (q.empty()) q.push_back(0);
    p = q;
  }
  return p;
}

long eval_at_one(const std::vector<long>& p) {
  long acc = 0;
  for (long c : p) acc += c;
  return acc;
}

}  // namespace

InvariantReport invariants(const RingPresentation& P, const Budget& bud) {
  InvariantReport R;
  const size_t n = P.ring.nvars();
  bool artinian = false;
  try {
    artinian = is_artinian_quotient(P, bud);
  } catch (const BudgetError&) {
    artinian = false;
  }
  if (!P.ring.order.global() && !artinian) {
    // local non-artinian: pass to the tangent cone
    RingPresentation gr = tangent_cone(P, bud);
    InvariantReport S = invariants(gr, bud);
    S.engine = "tangent-cone";
    return S;
  }
  if (artinian) {
    FiniteAlgebra A = build_finite_algebra(P, bud);
    R.engine = "artinian";
    R.dim = 0;
    R.depth = 0;
    std::vector<int> h = fa_adic_hilbert(A);
    R.embdim = h.size() > 1 ? h[1] : 0;
    R.codim = R.embdim;
    R.length = (long)A.dim();
    R.multiplicity = (long)A.dim();
    R.type = (long)fa_socle(A).size();
    R.mu_m2 = h.size() > 2 ? h[2] : 0;
    R.socle_degree = A.socle_degree();
    for (int x : h) R.hilbert.push_back(x);
    R.cohen_macaulay = true;
    if (R.multiplicity == R.codim + 1) R.multiplicity_tag = "minimal multiplicity";
    else if (R.multiplicity == R.codim + 2) R.multiplicity_tag = "almost minimal multiplicity";
    return R;
  }
  if (!P.homogeneous)
    throw UnsupportedError("invariants: non-homogeneous non-artinian global presentation");
  R.engine = "graded";
  const Ring& S = P.ring;
  GroebnerBasis gb = groebner_basis(S, P.gens, bud);
  std::vector<Monomial> lts = lt_monomials(gb.els);
  // embedding dimension: variables minus linear leading terms (internal quotients)
  int linear = 0;
  for (auto& g : gb.els)
    if (g.lm().degree() == 1) ++linear;
  R.embdim = (int)n - linear;
  R.dim = monomial_dim(n, lts);
  R.codim = R.embdim - R.dim;
  std::vector<long> num = hilbert_numerator(n, lts);
  std::vector<long> q = divide_one_minus_t(num, (int)n - R.dim);
  R.multiplicity = eval_at_one(q);
  // depth via Auslander-Buchsbaum over the polynomial ring
  RingPresentation Spoly;
  Spoly.ring = S;
  Spoly.homogeneous = true;
  GradedResolution FS = resolve_cyclic_graded(Spoly, P.gens, (int)n + 1, bud);
  BettiTable BS = betti_of(FS);
  int pd = 0;
  for (int i = 0; i <= BS.N; ++i)
    if (BS.total[i] > 0) pd = i;
  R.depth = (int)n - pd;
  R.cohen_macaulay = R.depth == R.dim;
  if (R.cohen_macaulay) R.type = BS.total[pd];
  // Hilbert function values
  for (uint32_t d = 0; d <= 8; ++d) {
    long cnt = 0;
    for (auto& m : monos_of_degree(n, d))
      if (!in_lt(lts, m)) ++cnt;
    R.hilbert.push_back(cnt);
  }
  R.mu_m2 = R.hilbert.size() > 2 ? R.hilbert[2] : 0;
  if (R.cohen_macaulay || R.dim == 0) {
    if (R.multiplicity == R.codim + 1) R.multiplicity_tag = "minimal multiplicity";
    else if (R.multiplicity == R.codim + 2) R.multiplicity_tag = "almost minimal multiplicity";
  } else {
    if (R.multiplicity == R.codim + 2) R.multiplicity_tag = "almost minimal multiplicity";
    else if (R.multiplicity == R.codim + 1) R.multiplicity_tag = "minimal multiplicity";
  }
  return R;
}

GStretchedVerdict is_g_stretched(const RingPresentation& P, const Budget& bud) {
  InvariantReport R = invariants(P, bud);
  GStretchedVerdict V;
  V.mu_m2 = R.mu_m2;
  V.g_stretched = R.mu_m2 <= 1;
  V.dim = R.dim;
  V.dim_le_1 = R.dim <= 1;
  return V;
}

ClassifyVerdict classify_g_stretched(const RingPresentation& P, const Budget& bud) {
  InvariantReport R = invariants(P, bud);
  if (R.mu_m2 > 1)
    throw PreconditionError("classify: the ring is not g-stretched (mu(m^2) = " +
                            std::to_string(R.mu_m2) + ")");
  ClassifyVerdict V;
  V.dim = R.dim;
  V.codim = R.codim;
  V.type = R.type.value_or(0);
  if (R.dim == 1) {
    V.predict_koszul = true;
    V.m2_zero = R.hilbert.size() > 2 ? R.hilbert[2] == 0 : true;
    V.m3_zero = R.hilbert.size() > 3 ? R.hilbert[3] == 0 : true;
    V.reason = "dim R = 1";
    return V;
  }
  // artinian case
  V.m2_zero = R.hilbert.size() <= 2 || R.hilbert[2] == 0;
  V.m3_zero = R.hilbert.size() <= 3 || R.hilbert[3] == 0;
  if (V.m2_zero) {
    V.predict_koszul = true;
    V.reason = "m^2 = 0";
  } else if (!V.m3_zero) {
    V.predict_koszul = false;
    V.reason = "m^3 != 0";
  } else if (V.type <= (long)V.codim - 1) {
    V.predict_koszul = true;
    V.reason = "m^3 = 0 and type <= codim - 1";
  } else {
    V.predict_koszul = false;
    V.reason = "type = " + std::to_string(V.type) + " > codim - 1 = " +
               std::to_string(V.codim - 1);
  }
  return V;
}

QnResult qn_decompose(const RingPresentation& P, const Budget& bud) {
  const Ring& S = P.ring;
  const size_t n = S.nvars();
  QnResult out;
  GroebnerBasis gb = groebner_basis(S, P.gens, bud);
  std::vector<Monomial> lts = lt_monomials(gb.els);
  int dim = monomial_dim(n, lts);
  if (dim != 1)
    throw PreconditionError("qn_decompose: quotient has dimension " + std::to_string(dim) +
                            ", expected 1");
  long mu2 = 0;
  for (auto& m : monos_of_degree(n, 2))
    if (!in_lt(lts, m)) ++mu2;
  if (mu2 > 1)
    throw PreconditionError("qn_decompose: quotient is not g-stretched (mu(m^2) = " +
                            std::to_string(mu2) + ")");
  std::vector<Poly> nvarsg = maximal_ideal_gens(S);
  std::vector<Poly> Q = ideal_colon_ideal_S(S, gb.els, nvarsg, bud);
  std::vector<Poly> Qn = ideal_product(S, Q, nvarsg);
  // two-way membership I = Q*n
  GroebnerBasis gQn = groebner_basis(S, Qn, bud);
  for (auto& f : P.gens)
    if (!in_ideal(S, f, gQn, bud)) {
      out.failure = "I is strictly smaller than (I : n) * n";
      return out;
    }
  for (auto& f : Qn)
    if (!in_ideal(S, f, gb, bud)) {
      out.failure = "(I : n) * n is not contained in I";
      return out;
    }
  std::vector<Poly> qmin = minimal_gens_graded(S, Q, {}, bud);
  if (qmin.size() != n - 1) {
    out.failure = "Q is not generated by d-1 elements";
    return out;
  }
  for (auto& g : qmin)
    if (g.max_degree() != 1 || g.min_degree() != 1) {
      out.failure = "Q has a non-linear minimal generator";
      return out;
    }
  // regular sequence check: d-1 independent linear forms => codim d-1, dim S/Q = 1
  {
    Mat M;
    for (auto& g : qmin) {
      Row r(n, Scalar::zero(S.field));
      for (auto& t : g.terms())
        for (size_t v = 0; v < n; ++v)
          if (t.m[v] == 1) r[v] = t.c;
      M.push_back(r);
    }
    if (rank_of(S.field, M) != n - 1) {
      out.failure = "the linear generators of Q are dependent";
      return out;
    }
  }
  out.decomposed = true;
  out.q_gens = qmin;
  return out;
}

RingPresentation elias_valla_presentation(const EVParameters& p, const Field& F) {
  if (p.h < 1) throw PreconditionError("elias-valla: h >= 1 required");
  if (p.tau < 1 || p.tau > p.h) throw PreconditionError("elias-valla: 1 <= tau <= h required");
  if (p.s < 2) throw PreconditionError("elias-valla: socle degree s >= 2 required");
  if (p.h == 1 && p.tau != 1) throw PreconditionError("elias-valla: h = 1 forces tau = 1");
  RingPresentation P;
  P.ring.field = F;
  for (int i = 1; i <= p.h; ++i) P.ring.vars.push_back("y" + std::to_string(i));
  P.ring.order = OrderSpec{OrderSpec::Kind::degrevlex, 0};
  P.local = false;
  const Ring& R = P.ring;
  auto y = [&](int i) { return poly_var(R, (size_t)(i - 1)); };
  auto pow = [&](const Poly& f, int k) {
    Poly acc = poly_const(R, Scalar::one(F));
    for (int i = 0; i < k; ++i) acc = mul(R, acc, f);
    return acc;
  };
  std::vector<long> units = p.units;
  if (p.h == 1) {
    P.gens.push_back(pow(y(1), p.s + 1));
  } else if (p.tau == p.h) {
    for (int j = 2; j <= p.h; ++j) P.gens.push_back(mul(R, y(1), y(j)));
    for (int i = 2; i <= p.h; ++i)
      for (int j = i; j <= p.h; ++j) P.gens.push_back(mul(R, y(i), y(j)));
    P.gens.push_back(pow(y(1), p.s + 1));
  } else {
    units.resize((size_t)(p.h - p.tau), 1);
    for (size_t k = 0; k < units.size(); ++k)
      if (units[k] == 0) throw PreconditionError("elias-valla: units must be nonzero");
    for (int i = 1; i <= p.h; ++i)
      for (int j = i + 1; j <= p.h; ++j) P.gens.push_back(mul(R, y(i), y(j)));
    for (int j = 2; j <= p.tau; ++j) P.gens.push_back(mul(R, y(j), y(j)));
    for (int i = p.tau + 1; i <= p.h; ++i) {
      Scalar u = Scalar::of_ll(F, units[(size_t)(i - p.tau - 1)]);
      P.gens.push_back(sub(R, mul(R, y(i), y(i)), scale(pow(y(1), p.s), u)));
    }
  }
  P.homogeneous = true;
  for (auto& g : P.gens)
    if (!g.homogeneous()) P.homogeneous = false;
  if (!P.homogeneous) {
    // non-homogeneous normal forms (s >= 3 with tau < h) present the local ring
    P.ring.order = OrderSpec{OrderSpec::Kind::negdegrevlex, 0};
    P.local = true;
    for (auto& g : P.gens) g = resort(P.ring, g);
  }
  // post-verification: artinian, stretched, type tau, socle degree s, m^i = (y1^i)
  FiniteAlgebra A = build_finite_algebra(P);
  std::vector<int> h = fa_adic_hilbert(A);
  if (h.size() > 2 && h[2] > 1)
    throw StructuralError("elias-valla: constructed ring is not stretched");
  if ((long)fa_socle(A).size() != p.tau)
    throw StructuralError("elias-valla: constructed ring has the wrong type");
  if (A.socle_degree() != p.s)
    throw StructuralError("elias-valla: constructed ring has the wrong socle degree");
  FAOps ops(A);
  for (int i = 2; i <= p.s; ++i) {
    FAIdeal lhs = ops.mpow(i);
    FAIdeal rhs = ops.make({pow(y(1), i)});
    if (!ops.equal(lhs, rhs))
      throw StructuralError("elias-valla: m^i = (y1^i) fails at i = " + std::to_string(i));
  }
  return P;
}

RingPresentation tangent_cone(const RingPresentation& P, const Budget& bud) {
  if (P.ring.order.global() && P.homogeneous) {
    RingPresentation out = P;
    return out;  // graded rings are their own tangent cone
  }
  if (P.ring.order.global())
    throw UnsupportedError("tangent cone requires a local presentation");
  RingPresentation loc = P;
  GroebnerBasis sb = groebner_basis(loc.ring, loc.gens, bud);
  RingPresentation out;
  out.ring.field = P.ring.field;
  out.ring.vars = P.ring.vars;
  out.ring.order = OrderSpec{OrderSpec::Kind::degrevlex, 0};
  out.local = false;
  out.homogeneous = true;
  std::vector<Poly> inits;
  for (auto& g : sb.els) {
    Poly in = resort(out.ring, initial_form(out.ring, g));
    if (!in.is_zero()) inits.push_back(in);
  }
  out.gens = minimal_gens_graded(out.ring, inits, {}, bud);
  return out;
}

SemigroupResult semigroup_ring(const std::vector<int>& a, int D, const Budget& bud) {
  SemigroupResult out;
  out.generators = a;
  if (a.empty()) throw PreconditionError("semigroup: need at least one generator");
  int g = 0;
  for (int x : a) {
    if (x <= 0) throw PreconditionError("semigroup: generators must be positive");
    g = std::gcd(g, x);
  }
  if (g != 1) throw PreconditionError("semigroup: gcd of the generators must be 1");
  const size_t n = a.size();
  // minimal generating check: no a_i in the semigroup of the others
  for (size_t i = 0; i < n && out.minimal_generating; ++i) {
    std::vector<char> reach((size_t)a[i] + 1, 0);
    reach[0] = 1;
    for (int v = 1; v <= a[i]; ++v)
      for (size_t j = 0; j < n; ++j) {
        if (j == i || a[j] > v) continue;
        if (reach[(size_t)(v - a[j])]) reach[(size_t)v] = 1;
      }
    if (reach[(size_t)a[i]]) out.minimal_generating = false;
  }
  // toric ideal: eliminate t from (x_i - t^{a_i})
  Ring Rt;
  Rt.field = Field::Q();
  Rt.vars.push_back("t");
  std::vector<std::string> names;
  if (n <= 3) {
    const char* nm[3] = {"x", "y", "z"};
    for (size_t i = 0; i < n; ++i) names.push_back(nm[i]);
  } else {
    for (size_t i = 0; i < n; ++i) names.push_back("x" + std::to_string(i + 1));
  }
  for (auto& s : names) Rt.vars.push_back(s);
  Rt.order = OrderSpec{OrderSpec::Kind::block_elim, 1};
  std::vector<Poly> gens;
  for (size_t i = 0; i < n; ++i) {
    std::vector<uint16_t> et(n + 1, 0), ex(n + 1, 0);
    et[0] = (uint16_t)a[i];
    ex[i + 1] = 1;
    gens.push_back(sub(Rt, poly_term(Rt, Monomial(ex), Scalar::one(Rt.field)),
                       poly_term(Rt, Monomial(et), Scalar::one(Rt.field))));
  }
  std::vector<bool> elim(n + 1, false);
  elim[0] = true;
  Ring out_ring;
  out.toric_ideal = eliminate_vars(Rt, gens, elim, out_ring, bud);
  out_ring.vars = names;
  out.toric_ring = out_ring;
  // tangent cone via the Mora standard basis of the toric ideal
  RingPresentation loc;
  loc.ring = out_ring;
  loc.ring.order = OrderSpec{OrderSpec::Kind::negdegrevlex, 0};
  loc.local = true;
  for (auto& f : out.toric_ideal) loc.gens.push_back(resort(loc.ring, f));
  loc.homogeneous = true;
  for (auto& f : loc.gens)
    if (!f.homogeneous()) loc.homogeneous = false;
  if (loc.gens.empty()) {
    out.tangent_cone_pres.ring = out_ring;
    out.tangent_cone_pres.homogeneous = true;
    out.tangent_cone_pres.local = false;
  } else {
    out.tangent_cone_pres = tangent_cone(loc, bud);
  }
  // independent adic Hilbert function from semigroup element orders:
  // ord(v) = max number of generators in a representation of v
  {
    int amax = *std::max_element(a.begin(), a.end());
    int V = (D + 1) * amax + 1;
    std::vector<int> ord((size_t)V + 1, -1);
    ord[0] = 0;
    for (int v = 1; v <= V; ++v)
      for (size_t j = 0; j < n; ++j) {
        if (a[j] > v || ord[(size_t)(v - a[j])] < 0) continue;
        ord[(size_t)v] = std::max(ord[(size_t)v], ord[(size_t)(v - a[j])] + 1);
      }
    out.semigroup_hilbert.assign((size_t)D + 1, 0);
    for (int v = 0; v <= V; ++v) {
      if (ord[(size_t)v] >= 0 && ord[(size_t)v] <= D) out.semigroup_hilbert[(size_t)ord[(size_t)v]]++;
    }
  }
  return out;
}

RingPresentation quotient_by_linear(const RingPresentation& P, const Poly& l) {
  if (l.is_zero() || l.max_degree() != 1 || l.min_degree() != 1)
    throw PreconditionError("quotient_by_linear: need a linear form");
  const Ring& R = P.ring;
  const size_t n = R.nvars();
  // solve for the order-largest variable appearing in l
  size_t v = n;
  Scalar cv = Scalar::zero(R.field);
  for (auto& t : l.terms())
    for (size_t w = 0; w < n; ++w)
      if (t.m[w] == 1 && v == n) { v = w; cv = t.c; }
  // substitution x_v = -(1/cv) * (l - cv x_v)
  Poly rest = sub(R, l, poly_term(R, Monomial::var(n, v), cv));
  Poly repl = scale(rest, -(cv.inv()));
  RingPresentation out;
  out.ring.field = R.field;
  for (size_t w = 0; w < n; ++w)
    if (w != v) out.ring.vars.push_back(R.vars[w]);
  out.ring.order = R.order;
  out.local = P.local;
  auto project = [&](const Poly& f) {
    // substitute then drop variable v
    Poly acc;
    for (auto& t : f.terms()) {
      Poly term = poly_const(R, t.c);
      for (size_t w = 0; w < n; ++w) {
        for (int k = 0; k < t.m[w]; ++k)
          term = mul(R, term, w == v ? repl : poly_var(R, w));
      }
      acc = add(R, acc, term);
    }
    std::vector<Term> ts;
    for (auto& t : acc.terms()) {
      std::vector<uint16_t> e;
      for (size_t w = 0; w < n; ++w)
        if (w != v) e.push_back(t.m[w]);
      ts.push_back(Term{Monomial(std::move(e)), t.c});
    }
    return poly_make(out.ring, std::move(ts));
  };
  for (auto& f : P.gens) {
    Poly q = project(f);
    if (!q.is_zero()) out.gens.push_back(q);
  }
  out.homogeneous = true;
  for (auto& f : out.gens)
    if (!f.homogeneous()) out.homogeneous = false;
  return out;
}

FilterRegularResult filter_regular_reduction(const RingPresentation& P, int trials,
                                             uint64_t seed, int D, const Budget& bud) {
  if (!P.homogeneous || !P.ring.order.global())
    throw UnsupportedError("filter_regular_reduction requires a graded presentation");
  const Ring& R = P.ring;
  const size_t n = R.nvars();
  FilterRegularResult out;
  GroebnerBasis gb = groebner_basis(R, P.gens, bud);
  std::vector<Monomial> lts = lt_monomials(gb.els);
  std::mt19937_64 rng(seed);
  auto std_monos_d = [&](uint32_t d) {
    std::vector<Monomial> res;
    for (auto& m : monos_of_degree(n, d))
      if (!in_lt(lts, m)) res.push_back(m);
    return res;
  };
  for (int trial = 0; trial < trials; ++trial) {
    out.trials_used = trial + 1;
    // random linear form
    std::vector<Term> ts;
    for (size_t v = 0; v < n; ++v) {
      long c;
      if (R.field.kind == Field::Kind::rationals) c = 1 + (long)(rng() % 100);
      else c = (long)(rng() % R.field.p);
      if (c != 0) ts.push_back(Term{Monomial::var(n, v), Scalar::of_ll(R.field, c)});
    }
    Poly l = poly_make(R, ts);
    if (l.is_zero()) continue;
    // regularity on gr = R: multiplication by l injective in every degree <= D
    bool regular = true;
    std::vector<std::pair<int, long>> evidence;
    for (int d = 0; d <= D && regular; ++d) {
      std::vector<Monomial> src = std_monos_d((uint32_t)d);
      std::vector<Monomial> tgt = std_monos_d((uint32_t)d + 1);
      if (src.empty()) continue;
      Mat M(tgt.size(), Row(src.size(), Scalar::zero(R.field)));
      for (size_t c = 0; c < src.size(); ++c) {
        Poly img = normal_form(R, mul_term(R, l, src[c], Scalar::one(R.field)), gb.els);
        for (auto& t : img.terms()) {
          size_t pos = tgt.size();
          for (size_t k = 0; k < tgt.size(); ++k)
            if (tgt[k] == t.m) { pos = k; break; }
          if (pos == tgt.size()) throw StructuralError("filter-regular: coordinate mismatch");
          M[pos][c] = t.c;
        }
      }
      long ker = (long)src.size() - (long)rank_of(R.field, M);
      if (ker > 0) {
        regular = false;
        evidence.push_back({d, ker});
      }
    }
    if (regular) {
      out.found = true;
      out.element = l;
      out.quotient = quotient_by_linear(P, l);
      return out;
    }
    if (out.kernel_evidence.empty()) out.kernel_evidence = evidence;
  }
  return out;
}

}  // namespace lindel
