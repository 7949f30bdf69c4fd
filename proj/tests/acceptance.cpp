// Acceptance suite: one pass/fail line per criterion.
#include <chrono>
#include <iostream>
#include <random>
#include <set>

#include "lindel/report.hpp"
#include "oracles.hpp"

using namespace lindel;

namespace {

int failures = 0;
std::vector<std::string> current_notes;

void note(const std::string& s) { current_notes.push_back(s); }

void criterion(int n, const std::string& name, bool ok) {
  std::cout << "ACCEPT " << n << (ok ? " PASS " : " FAIL ") << name << "\n";
  for (auto& s : current_notes) std::cout << "         - " << s << "\n";
  current_notes.clear();
  if (!ok) ++failures;
}

bool same_ideal(const Ring& R, const std::vector<Poly>& A, const std::vector<Poly>& B) {
  GroebnerBasis ga = groebner_basis(R, A), gb = groebner_basis(R, B);
  for (auto& f : A)
    if (!in_ideal(R, f, gb)) return false;
  for (auto& f : B)
    if (!in_ideal(R, f, ga)) return false;
  return true;
}

// ---------------------------------------------------------------------------
// test-only iterated-syzygy oracle: resolves k over an artinian graded quotient
// with plain polynomial normal forms, independent of both engine code paths
// ---------------------------------------------------------------------------
std::vector<long> syzygy_oracle_betti(const RingPresentation& P, int N) {
  const Ring& R = P.ring;
  GroebnerBasis gb = groebner_basis(R, P.gens);
  // standard monomials
  std::vector<Monomial> basis;
  for (uint32_t d = 0;; ++d) {
    auto layer = lindel::testing::monomials_of_degree(R.nvars(), d);
    size_t added = 0;
    for (auto& m : layer) {
      bool lt = false;
      for (auto& g : gb.els)
        if (g.lm().divides(m)) lt = true;
      if (!lt) {
        basis.push_back(m);
        ++added;
      }
    }
    if (added == 0 && d > 0) break;
  }
  const size_t D = basis.size();
  auto coords = [&](const Poly& f, Row& out, size_t off) {
    for (auto& t : f.terms()) {
      size_t pos = D;
      for (size_t i = 0; i < D; ++i)
        if (basis[i] == t.m) pos = i;
      if (pos == D) throw StructuralError("oracle: non-standard monomial");
      out[off + pos] = t.c;
    }
  };
  // generators of the current kernel as vectors of normal-form polynomials
  std::vector<std::vector<Poly>> gens;
  for (size_t v = 0; v < R.nvars(); ++v) gens.push_back({poly_var(R, v)});
  std::vector<long> betti = {1, (long)gens.size()};
  size_t rank = 1;
  for (int i = 2; i <= N; ++i) {
    // kernel of the map R^{p} -> R^{rank} sending e_j to gens[j]
    const size_t p = gens.size();
    Mat M(rank * D, Row(p * D, Scalar::zero(R.field)));
    for (size_t j = 0; j < p; ++j)
      for (size_t b = 0; b < D; ++b)
        for (size_t c = 0; c < rank; ++c) {
          Poly img = normal_form(
              R, mul_term(R, gens[j][c], basis[b], Scalar::one(R.field)), gb.els);
          Row tmp(D, Scalar::zero(R.field));
          coords(img, tmp, 0);
          for (size_t k = 0; k < D; ++k) M[c * D + k][j * D + b] = tmp[k];
        }
    Mat K = kernel_basis(R.field, M);
    // interpret kernel vectors as vectors of polynomials, take minimal generators
    auto to_polyvec = [&](const Row& v) {
      std::vector<Poly> pv(p);
      for (size_t j = 0; j < p; ++j) {
        std::vector<Term> ts;
        for (size_t b = 0; b < D; ++b)
          if (!v[j * D + b].is_zero()) ts.push_back(Term{basis[b], v[j * D + b]});
        pv[j] = poly_make(R, std::move(ts));
      }
      return pv;
    };
    Echelon mw(R.field, p * D);
    for (auto& v : K)
      for (size_t w = 0; w < R.nvars(); ++w) {
        std::vector<Poly> pv = to_polyvec(v);
        Row r(p * D, Scalar::zero(R.field));
        for (size_t j = 0; j < p; ++j) {
          Poly q = normal_form(R, mul(R, pv[j], poly_var(R, w)), gb.els);
          coords(q, r, j * D);
        }
        mw.add(std::move(r));
      }
    std::vector<std::vector<Poly>> next;
    for (auto& v : K)
      if (mw.add(v)) next.push_back(to_polyvec(v));
    betti.push_back((long)next.size());
    rank = p;
    gens = next;
    if (gens.empty()) {
      while ((int)betti.size() <= N) betti.push_back(0);
      break;
    }
  }
  return betti;
}

struct BoundedLind {
  int value;
  bool saturated;
};

BoundedLind blind(const RingPresentation& P, const ModuleSpec& M, int N) {
  LindVerdict V = lind_bounded(P, M, N);
  return BoundedLind{V.value(), V.saturated()};
}

// sound bounded check of  a <= max(b + db, c + dc): refutable only if the
// right-hand side is exactly known (no saturated inputs)
bool bounded_leq(const BoundedLind& a, const BoundedLind& b, int db, const BoundedLind& c,
                 int dc) {
  if (b.saturated || c.saturated) return true;
  long rhs = std::max((long)b.value + db, (long)c.value + dc);
  return (long)a.value <= rhs;
}

}  // namespace

// ---------------------------------------------------------------------------

static void criterion1() {
  auto t0 = std::chrono::steady_clock::now();
  bool ok = true;
  SemigroupResult S = semigroup_ring({4, 5, 11});
  const Ring& R = S.toric_ring;
  std::vector<Poly> expect = {parse_poly(R, "y^3 - x*z"), parse_poly(R, "x^4 - y*z"),
                              parse_poly(R, "x^3*y^2 - z^2")};
  ok &= same_ideal(R, S.toric_ideal, expect);
  const Ring& G = S.tangent_cone_pres.ring;
  std::vector<Poly> tc = {parse_poly(G, "x*z"), parse_poly(G, "y*z"), parse_poly(G, "y^4"),
                          parse_poly(G, "z^2")};
  ok &= same_ideal(G, S.tangent_cone_pres.gens, tc);
  InvariantReport inv = invariants(S.tangent_cone_pres);
  ok &= inv.multiplicity == 4 && inv.codim == 2 && inv.dim == 1 && inv.depth == 0;
  ok &= inv.multiplicity_tag == "almost minimal multiplicity";
  KoszulVerdict K = koszul_check(S.tangent_cone_pres, 5);
  ok &= !K.koszul_up_to;
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  note("runtime " + std::to_string(secs) + " s (< 10 required)");
  ok &= secs < 10.0;
  criterion(1, "semigroup pipeline (4,5,11): toric ideal, tangent cone, invariants, not Koszul",
            ok);
}

static void criterion2() {
  bool ok = true;
  RingPresentation P = parse_ring("ring Q[x,y] local; ideal I = x*y, x^3 - y^2;");
  FiniteAlgebra A = build_finite_algebra(P);
  FAOps ops(A);
  Poly x = parse_poly(P.ring, "x"), y = parse_poly(P.ring, "y");
  ok &= ops.equal(ops.colon_poly(ops.zero_ideal(), x), ops.make({y}));
  ok &= ops.equal(ops.colon_poly(ops.zero_ideal(), y), ops.make({x}));
  ok &= ops.equal(ops.colon_poly(ops.make({x}), y), ops.maximal_ideal());
  ok &= ops.equal(ops.mpow(2), ops.make({parse_poly(P.ring, "x^2")}));
  auto F = verify_weak_koszul_filtration(P, {{}, {x}, {y}, {x, y}});
  ok &= F.weak_ok;
  auto Sg = verify_koszul_filtration(P, {{}, {x}, {y}, {x, y}});
  bool fails_ge2 = false;
  for (auto& f : Sg.strong_failures)
    for (int s : f)
      if (s >= 2) fails_ge2 = true;
  ok &= !Sg.strong_ok && fails_ge2;
  RingPresentation gr = fa_assoc_graded(A);
  KoszulVerdict K = koszul_check(gr, 5);
  ok &= !K.koszul_up_to && K.wit_j == 4;
  note("weak filtration passes; strong condition fails at s >= 2; gr witness degree 4");
  criterion(2, "weak-vs-Koszul filtration separation on k[[x,y]]/(xy, x^3-y^2)", ok);
}

static void criterion3() {
  bool ok = true;
  int checked = 0;
  for (int h = 1; h <= 4; ++h)
    for (int tau = 1; tau <= h; ++tau)
      for (int s = 2; s <= 3; ++s) {
        RingPresentation P = elias_valla_presentation(EVParameters{h, tau, s, {}});
        ClassifyVerdict C = classify_g_stretched(P);
        RingPresentation G = P;
        if (!P.homogeneous) {
          FiniteAlgebra A = build_finite_algebra(P);
          G = fa_assoc_graded(A);
        }
        KoszulVerdict K = koszul_check(G, 4);
        if (C.predict_koszul != K.koszul_up_to) {
          ok = false;
          note("disagreement at h=" + std::to_string(h) + " tau=" + std::to_string(tau) +
               " s=" + std::to_string(s));
        }
        // Lemma: m^3 != 0 forces NotKoszul for these artinian stretched rings
        if (s == 3 && K.koszul_up_to) {
          ok = false;
          note("m^3 != 0 instance certified Koszul");
        }
        ++checked;
      }
  note(std::to_string(checked) + " instances, zero disagreements required");
  criterion(3, "classifier vs direct Koszul check on all EV rings (h<=4, s in {2,3})", ok);
}

static void criterion4() {
  bool ok = true;
  int instances = 0, qn_ok = 0;
  for (int n = 1; n <= 3; ++n) {
    Ring R;
    R.field = Field::Q();
    for (int v = 0; v < n; ++v) R.vars.push_back(std::string(1, (char)('x' + v)));
    R.order = OrderSpec{OrderSpec::Kind::degrevlex, 0};
    std::vector<Monomial> deg2 = lindel::testing::monomials_of_degree(n, 2);
    std::vector<Monomial> deg3 = lindel::testing::monomials_of_degree(n, 3);
    std::vector<Monomial> all = deg2;
    for (auto& m : deg3) all.push_back(m);
    std::set<std::string> seen;
    const size_t total = size_t(1) << all.size();
    for (size_t mask = 0; mask < total; ++mask) {
      std::vector<Monomial> gens;
      for (size_t b = 0; b < all.size(); ++b)
        if (mask & (size_t(1) << b)) gens.push_back(all[b]);
      // quick filters: at most one standard degree-2 monomial, dimension 1
      int deg2_std = 0;
      for (auto& m : deg2) {
        bool in = false;
        for (auto& g : gens)
          if (g.divides(m)) in = true;
        if (!in) ++deg2_std;
      }
      if (deg2_std > 1) continue;
      // dimension via independent variable subsets
      int dim = 0;
      for (size_t vs = 0; vs < (size_t(1) << n); ++vs) {
        bool indep = true;
        for (auto& g : gens) {
          bool inside = true;
          for (int v = 0; v < n && inside; ++v)
            if (g[(size_t)v] > 0 && !(vs & (size_t(1) << v))) inside = false;
          if (inside) { indep = false; break; }
        }
        if (indep) dim = std::max(dim, __builtin_popcountll((unsigned long long)vs));
      }
      if (dim != 1) continue;
      // dedupe by minimal generating set
      std::vector<Monomial> min;
      for (size_t i = 0; i < gens.size(); ++i) {
        bool keep = true;
        for (size_t j = 0; j < gens.size(); ++j) {
          if (i == j) continue;
          if (gens[j].divides(gens[i]) && gens[j] != gens[i]) keep = false;
          if (gens[j] == gens[i] && j < i) keep = false;
        }
        if (keep) min.push_back(gens[i]);
      }
      std::string key = std::to_string(n) + ":";
      {
        std::vector<std::string> parts;
        for (auto& m : min) {
          std::string s;
          for (size_t v = 0; v < (size_t)n; ++v) s += std::to_string(m[v]) + ".";
          parts.push_back(s);
        }
        std::sort(parts.begin(), parts.end());
        for (auto& s : parts) key += s + "|";
      }
      if (!seen.insert(key).second) continue;
      ++instances;
      RingPresentation P;
      P.ring = R;
      for (auto& m : min) P.gens.push_back(poly_term(R, m, Scalar::one(R.field)));
      P.homogeneous = true;
      QnResult q = qn_decompose(P);
      bool this_ok = q.decomposed && (int)q.q_gens.size() == n - 1;
      for (auto& g : q.q_gens)
        this_ok &= g.nterms() == 1 && g.max_degree() == 1;
      if (this_ok) ++qn_ok;
      else {
        ok = false;
        note("qn failed on an instance with " + std::to_string(n) + " variables: " + q.failure);
      }
      // Prop 5.1 side check: positive depth forces embedding dimension 1
      InvariantReport inv = invariants(P);
      if (inv.depth == 1 && inv.embdim != 1) {
        ok = false;
        note("CM dim-1 g-stretched instance with embdim != 1");
      }
    }
  }
  note(std::to_string(qn_ok) + "/" + std::to_string(instances) +
       " distinct dim-1 g-stretched monomial quotients decomposed");
  ok &= instances > 0 && qn_ok == instances;
  criterion(4, "I = Q*n decomposition succeeds on the exhaustive monomial family", ok);
}

static void criterion5() {
  bool ok = true;
  for (int h = 2; h <= 3; ++h)
    for (int s = 2; s <= 3; ++s) {
      RingPresentation P = elias_valla_presentation(EVParameters{h, 1, s, {}});
      auto F = canonical_filtration(P, CanonicalKind::stretched_gorenstein);
      FiltrationCertificate C = verify_weak_koszul_filtration(P, F);
      if (!C.weak_ok) {
        ok = false;
        note("canonical family failed weak verification at h=" + std::to_string(h) +
             " s=" + std::to_string(s));
        continue;
      }
      FiniteAlgebra A = build_finite_algebra(P);
      FAOps ops(A);
      for (size_t i = 0; i < F.size(); ++i) {
        const WitnessEntry& w = C.witnesses[i];
        if (w.ideal_index < 0) continue;
        FAIdeal J = ops.make(F[(size_t)w.j_index]);
        FAIdeal Jx = ops.colon_poly(J, w.x);
        auto verdict = tor_map_is_zero_artinian(A, ops.min_gens(Jx), F[(size_t)w.j_index],
                                                w.x, 4);
        for (bool b : verdict)
          if (!b) {
            ok = false;
            note("witness map not Tor-vanishing at h=" + std::to_string(h) +
                 " s=" + std::to_string(s));
          }
        // Lemma 4.8(1): Tor_i(R/m^2, R/I) -> Tor_i(k, R/I) is zero for i >= 1
        {
          LocalResolution FR = resolve_cyclic_artinian(A, F[i], 5);
          const size_t D = A.dim();
          Echelon m2(A.field(), D);
          for (auto& r : A.m_pow[2]) m2.add(r);
          Echelon m1(A.field(), D);
          for (auto& r : A.m_pow[1]) m1.add(r);
          for (int lev = 1; lev <= 4; ++lev) {
            if (lev > FR.levels() || FR.degs[lev].empty()) break;
            size_t bi = FR.degs[lev].size();
            size_t bprev = FR.degs[lev - 1].size();
            // differential of F tensor R/m^2
            size_t q2 = D - A.m_pow[2].size();  // dim R/m^2
            (void)q2;
            // build matrix of d_i on coordinates mod m^2
            // coordinates: per component, residues mod m^2 expressed in ambient D coords
            // cycles: kernel of the reduced differential
            Mat M;  // rows: target coords (bprev * D), cols: source basis (bi * D mod m^2 rep)
            // represent source coordinates by ambient coordinates and reduce images mod m^2
            Mat Mfull(bprev * D, Row(bi * D, Scalar::zero(A.field())));
            for (size_t c = 0; c < bi; ++c)
              for (size_t b = 0; b < D; ++b) {
                Row img = fa_modules::module_mul_elt(A, bprev, FR.diff[lev][c], b);
                // reduce each component mod m^2
                for (size_t comp = 0; comp < bprev; ++comp) {
                  Row ent(img.begin() + comp * D, img.begin() + (comp + 1) * D);
                  ent = m2.reduce(std::move(ent));
                  for (size_t k = 0; k < D; ++k) Mfull[comp * D + k][c * D + b] = ent[k];
                }
              }
            // source vectors with support in m^2 are zero in F tensor R/m^2: quotient them
            // kernel over the ambient coordinates, then check reduction mod m of cycles
            Mat K = kernel_basis(A.field(), Mfull);
            for (auto& z : K) {
              // z in (R/m^2)^{bi} lifted ambiently; its class mod m must be a boundary in
              // F tensor k, i.e. zero (minimal resolution): check components reduce into m
              bool zero_mod_m = true;
              for (size_t comp = 0; comp < bi; ++comp) {
                Row ent(z.begin() + comp * D, z.begin() + (comp + 1) * D);
                // subtract the m^2 ambiguity first: kernel vectors are defined mod m^2
                ent = m2.reduce(std::move(ent));
                if (!m1.contains(ent)) zero_mod_m = false;
              }
              if (!zero_mod_m) {
                ok = false;
                note("Tor_i(R/m^2, R/I) -> Tor_i(k, R/I) has nonzero image at level " +
                     std::to_string(lev));
                break;
              }
            }
          }
        }
      }
      // lifts: (b) trivial extension x with x^2 = x*y_i = 0, every (h,s)
      {
        RingPresentation PX;
        PX.ring.field = Field::Q();
        PX.ring.vars.push_back("x");
        for (auto& v : P.ring.vars) PX.ring.vars.push_back(v);
        PX.ring.order = P.ring.order;
        PX.local = P.local;
        auto lift_poly = [&](const Poly& f) {
          std::vector<Term> ts;
          for (auto& t : f.terms()) {
            std::vector<uint16_t> e;
            e.push_back(0);
            for (auto v : t.m.exps()) e.push_back(v);
            ts.push_back(Term{Monomial(std::move(e)), t.c});
          }
          return poly_make(PX.ring, std::move(ts));
        };
        for (auto& g : P.gens) PX.gens.push_back(lift_poly(g));
        Poly xv = poly_var(PX.ring, 0);
        PX.gens.push_back(mul(PX.ring, xv, xv));
        for (size_t v = 1; v < PX.ring.nvars(); ++v)
          PX.gens.push_back(mul(PX.ring, xv, poly_var(PX.ring, v)));
        PX.homogeneous = true;
        for (auto& g : PX.gens)
          if (!g.homogeneous()) PX.homogeneous = false;
        std::vector<std::vector<Poly>> fbar;
        for (auto& gens : F) {
          std::vector<Poly> lifted;
          for (auto& g : gens) lifted.push_back(lift_poly(g));
          fbar.push_back(lifted);
        }
        LiftResult L = lift_filtration(PX, xv, fbar);
        if (L.case_used != 'b' || !L.reverification.weak_ok) {
          ok = false;
          note("trivial-extension lift failed at h=" + std::to_string(h) +
               " s=" + std::to_string(s));
        }
      }
      // lift (a): graded dim-1 ring R = k[x, y..]/(EV gens), x regular (s = 2 only)
      if (s == 2) {
        RingPresentation PX;
        PX.ring.field = Field::Q();
        PX.ring.vars.push_back("x");
        for (auto& v : P.ring.vars) PX.ring.vars.push_back(v);
        PX.ring.order = OrderSpec{OrderSpec::Kind::degrevlex, 0};
        auto lift_poly = [&](const Poly& f) {
          std::vector<Term> ts;
          for (auto& t : f.terms()) {
            std::vector<uint16_t> e;
            e.push_back(0);
            for (auto v : t.m.exps()) e.push_back(v);
            ts.push_back(Term{Monomial(std::move(e)), t.c});
          }
          return poly_make(PX.ring, std::move(ts));
        };
        for (auto& g : P.gens) PX.gens.push_back(lift_poly(g));
        PX.homogeneous = true;
        std::vector<std::vector<Poly>> fbar;
        for (auto& gens : F) {
          std::vector<Poly> lifted;
          for (auto& g : gens) lifted.push_back(lift_poly(g));
          fbar.push_back(lifted);
        }
        Poly xv = poly_var(PX.ring, 0);
        LiftResult L = lift_filtration(PX, xv, fbar);
        if (L.case_used != 'a' || !L.reverification.weak_ok) {
          ok = false;
          note("regular-element lift failed at h=" + std::to_string(h));
        }
      }
    }
  criterion(5, "Lemma 4.8 Tor-vanishing witnesses and canonical lifts re-verify", ok);
}

static void criterion6() {
  bool ok = true;
  for (int s = 2; s <= 3; ++s) {
    RingPresentation P = elias_valla_presentation(EVParameters{2, 1, s, {}});
    Poly y1 = poly_var(P.ring, 0), y2 = poly_var(P.ring, 1);
    // sequences from the h=2 Gorenstein filtration:
    //   0 -> R/(y2) -> R       -> R/(y1) -> 0   (free middle)
    //   0 -> R/(y1) -> R       -> R/(y2) -> 0   (free middle)
    //   0 -> R/m    -> R/(y1)  -> R/m    -> 0
    BoundedLind Lk = blind(P, ModuleSpec::k(), 4);
    BoundedLind L1 = blind(P, ModuleSpec::cyclic_mod({y1}), 4);
    BoundedLind L2 = blind(P, ModuleSpec::cyclic_mod({y2}), 4);
    BoundedLind LR{0, false};
    // Prop 2.2(2) per-degree equivalence on the free-middle sequences
    LindVerdict V1 = lind_bounded(P, ModuleSpec::cyclic_mod({y1}), 4);
    LindVerdict V2 = lind_bounded(P, ModuleSpec::cyclic_mod({y2}), 4);
    for (int i = 2; i <= 4; ++i) {
      if (V2.h_nonzero[i - 1] != V1.h_nonzero[i]) {
        ok = false;
        note("2.2(2) equivalence fails for 0 -> R/(y2) -> R -> R/(y1) at i=" +
             std::to_string(i) + " (s=" + std::to_string(s) + ")");
      }
      if (V1.h_nonzero[i - 1] != V2.h_nonzero[i]) {
        ok = false;
        note("2.2(2) equivalence fails for 0 -> R/(y1) -> R -> R/(y2) at i=" +
             std::to_string(i) + " (s=" + std::to_string(s) + ")");
      }
    }
    // Prop 2.2(3) inequalities for the Tor-vanishing sequences
    struct Seq {
      BoundedLind M, Pm, N;
      const char* name;
    };
    std::vector<Seq> seqs = {
        {L2, LR, L1, "0 -> R/(y2) -> R -> R/(y1)"},
        {L1, LR, L2, "0 -> R/(y1) -> R -> R/(y2)"},
        {Lk, L1, Lk, "0 -> k -> R/(y1) -> k"},
    };
    for (auto& q : seqs) {
      bool i1 = bounded_leq(q.M, q.Pm, 0, q.N, -1);   // lind M <= max(lind P, lind N - 1)
      bool i2 = bounded_leq(q.Pm, q.M, 0, q.N, 0);    // lind P <= max(lind M, lind N)
      bool i3 = bounded_leq(q.N, q.M, 1, q.Pm, 0);    // lind N <= max(lind M + 1, lind P)
      if (!(i1 && i2 && i3)) {
        ok = false;
        note(std::string("2.2(3) inequality refuted for ") + q.name +
             " (s=" + std::to_string(s) + ")");
      }
    }
  }
  criterion(6, "linearity-defect exact-sequence laws at bound 4 (h=2 Gorenstein family)", ok);
}

static void criterion7() {
  bool ok = true;
  GolodVerdict G1 = golod_check(parse_ring("ring Q[x,y]; ideal I = x^2, x*y;"), 5, 8);
  ok &= G1.status == GolodVerdict::Status::golod_up_to;
  GolodVerdict G2 = golod_check(parse_ring("ring Q[x,y]; ideal I = x^2, y^2;"), 5, 8);
  ok &= G2.status == GolodVerdict::Status::not_golod;
  ok &= G2.first_discrepancy == 3 && G2.actual[3] == 4;
  note("Golod series at t^3 is " + std::to_string(G2.predicted[3]) +
       " (paper formula; the criterion's parenthetical value 10 is a spec typo)");
  // cross-check the actual beta_3 with the independent iterated-syzygy oracle
  std::vector<long> oracle =
      syzygy_oracle_betti(parse_ring("ring Q[x,y]; ideal I = x^2, y^2;"), 5);
  ok &= oracle.size() > 3 && oracle[3] == 4;
  for (size_t i = 0; i < G2.actual.size() && i < oracle.size(); ++i)
    ok &= G2.actual[i] == oracle[i];
  // Serre's coefficientwise bound on every artinian test ring
  const char* artinian_rings[] = {
      "ring Q[x,y]; ideal I = x^2, x*y, y^2;",
      "ring Q[x,y]; ideal I = x^2, y^2;",
      "ring Q[x,y]; ideal I = x^3, x*y, y^2;",
      "ring Q[x,y]; ideal I = x*y, y^2, x^4;",
      "ring Q[x,y] local; ideal I = x*y, x^3 - y^2;",
      "ring Q[x]; ideal I = x^4;",
  };
  for (const char* s : artinian_rings) {
    GolodVerdict V = golod_check(parse_ring(s), 5, 8);
    for (size_t i = 0; i < V.actual.size() && i < V.predicted.size(); ++i)
      if (V.actual[i] > V.predicted[i]) {
        ok = false;
        note(std::string("Serre bound violated on ") + s);
      }
  }
  for (int h = 1; h <= 4; ++h)
    for (int tau = 1; tau <= h; ++tau)
      for (int s = 2; s <= 3; ++s) {
        RingPresentation P = elias_valla_presentation(EVParameters{h, tau, s, {}});
        GolodVerdict V = golod_check(P, 5, 8);
        for (size_t i = 0; i < V.actual.size() && i < V.predicted.size(); ++i)
          if (V.actual[i] > V.predicted[i]) {
            ok = false;
            note("Serre bound violated on an EV ring");
          }
      }
  criterion(7, "Golod checks and Serre's coefficientwise bound through t^5", ok);
}

static void criterion8() {
  bool ok = true;
  {
    RingPresentation P = parse_ring("ring Q[x,y]; ideal I = x^3, x*y, y^2;");
    FiniteAlgebra A = build_finite_algebra(P);
    ok &= fa_socle(A).size() == 2;
    InvariantReport inv = invariants(P);
    ok &= inv.embdim == 2;
    ClassifyVerdict C = classify_g_stretched(P);
    ok &= !C.predict_koszul;
  }
  {
    RingPresentation P = parse_ring("ring Q[x,y]; ideal I = x^2, y^2;");
    InvariantReport inv = invariants(P);
    ok &= inv.type.value_or(0) == 1;
    ClassifyVerdict C = classify_g_stretched(P);
    ok &= C.predict_koszul;
    KoszulVerdict K = koszul_check(P, 5);
    ok &= K.koszul_up_to;
  }
  criterion(8, "socle/type regressions on the two reference rings", ok);
}

static void criterion9() {
  bool ok = true;
  std::mt19937_64 rng(32003);
  Field Fp = Field::Fp(kDefaultPrime);
  int done = 0;
  while (done < 50) {
    size_t n = 2 + rng() % 2;
    Ring R;
    R.field = Fp;
    for (size_t v = 0; v < n; ++v) R.vars.push_back(std::string(1, (char)('x' + v)));
    R.order = OrderSpec{OrderSpec::Kind::degrevlex, 0};
    // artinian homogeneous ideal: pure powers plus random forms
    std::vector<Poly> gens;
    for (size_t v = 0; v < n; ++v) {
      uint16_t e = (uint16_t)(2 + rng() % 2);
      gens.push_back(poly_term(R, Monomial::var(n, v, e), Scalar::one(Fp)));
    }
    for (int extra = 0; extra < 2; ++extra) {
      uint32_t d = 2 + rng() % 2;
      std::vector<Term> ts;
      for (auto& m : lindel::testing::monomials_of_degree(n, d))
        if (rng() % 2) ts.push_back(Term{m, Scalar::of_ll(Fp, (long long)(rng() % 5))});
      Poly f = poly_make(R, ts);
      if (!f.is_zero()) gens.push_back(f);
    }
    RingPresentation P;
    P.ring = R;
    P.gens = gens;
    P.homogeneous = true;
    ++done;
    // graded Betti tables from both engines
    FiniteAlgebra A = build_finite_algebra(P);
    BettiTable BL = betti_of(resolve_cyclic_artinian(A, maximal_ideal_gens(R), 3));
    BettiTable BG = betti_of(resolve_cyclic_graded(P, maximal_ideal_gens(R), 3));
    if (BL.graded != BG.graded || BL.total != BG.total) {
      ok = false;
      note("Betti tables disagree at instance " + std::to_string(done));
      continue;
    }
    // colon and intersection agree between the engines (two-way membership)
    FAOps ops(A);
    GroebnerBasis quot = groebner_basis(R, P.gens);
    Poly f = poly_var(R, rng() % n);
    std::vector<Poly> other = {poly_term(R, Monomial::var(n, (rng() % n), 1), Scalar::one(Fp)),
                               gens[rng() % gens.size()]};
    // colon (I0 : f) with I0 generated by a random generator subset
    std::vector<Poly> I0;
    for (auto& g : gens)
      if (rng() % 2) I0.push_back(g);
    FAIdeal ia = ops.make(I0);
    FAIdeal ca = ops.colon_poly(ia, f);
    std::vector<Poly> lift = I0;
    for (auto& q : P.gens) lift.push_back(q);
    std::vector<Poly> cg = ideal_colon_poly_S(R, groebner_basis(R, lift).els, f);
    // two-way membership between engine outputs
    {
      GroebnerBasis cglift = groebner_basis(R, [&] {
        std::vector<Poly> t = cg;
        for (auto& q : P.gens) t.push_back(q);
        return t;
      }());
      for (auto& g : ops.min_gens(ca))
        if (!in_ideal(R, g, cglift)) {
          ok = false;
          note("colon mismatch (artinian gen missing from graded result)");
        }
      for (auto& g : cg)
        if (!ops.contains_poly(ca, g)) {
          ok = false;
          note("colon mismatch (graded gen missing from artinian result)");
        }
    }
    // intersection
    FAIdeal ib = ops.make(other);
    FAIdeal inter_a = ops.intersect(ia, ib);
    std::vector<Poly> lift2 = other;
    for (auto& q : P.gens) lift2.push_back(q);
    std::vector<Poly> ig =
        ideal_intersect_S(R, groebner_basis(R, lift).els, groebner_basis(R, lift2).els);
    {
      GroebnerBasis iglift = groebner_basis(R, [&] {
        std::vector<Poly> t = ig;
        for (auto& q : P.gens) t.push_back(q);
        return t;
      }());
      for (auto& g : ops.min_gens(inter_a))
        if (!in_ideal(R, g, iglift)) {
          ok = false;
          note("intersection mismatch (artinian gen missing)");
        }
      for (auto& g : ig)
        if (!ops.contains_poly(inter_a, g)) {
          ok = false;
          note("intersection mismatch (graded gen missing)");
        }
    }
  }
  note("50 random homogeneous artinian ideals over F_32003");
  criterion(9, "graded and artinian engines agree on Betti tables, colons, intersections", ok);
}

static void criterion10() {
  bool ok = true;
  CommandOptions opt;
  std::vector<Json> reports;
  reports.push_back(cmd_koszul("ring Q[x,y]; ideal I = x*y;", 5, opt).report);
  reports.push_back(cmd_koszul("ring Q[x,y]; ideal I = x*y, y^2, x^4;", 4, opt).report);
  reports.push_back(cmd_lind("ring Q[x,y]; ideal I = x^2, x*y, y^2;", "k", 4, opt).report);
  reports.push_back(cmd_golod("ring Q[x,y]; ideal I = x^2, x*y;", 5, 8, opt).report);
  reports.push_back(cmd_golod("ring Q[x,y]; ideal I = x^2, y^2;", 5, 8, opt).report);
  reports.push_back(cmd_semigroup({4, 5, 11}, opt).report);
  reports.push_back(cmd_sweep_ev(2, 3, 4, opt).report);
  reports.push_back(cmd_betti("ring Q[x,y]; ideal I = x^2, y^2;", 4, 8, opt).report);
  // every koszul/golod/lind verdict object carries an explicit bound
  std::function<void(const Json&)> walk = [&](const Json& j) {
    if (j.is_object()) {
      if (j.contains("status")) {
        std::string st = j["status"].get<std::string>();
        if (st.find("koszul") != std::string::npos || st.find("golod") != std::string::npos) {
          if (!j.contains("bound") || !j["bound"].is_number()) {
            ok = false;
            note("verdict without bound: " + st);
          }
          if (st == "koszul" || st == "golod") {
            ok = false;
            note("unbounded affirmative status: " + st);
          }
        }
      }
      if (j.contains("nonzero_h") && !j.contains("bound")) {
        ok = false;
        note("lind verdict without bound");
      }
      for (auto& [k, v] : j.items()) walk(v);
    } else if (j.is_array()) {
      for (auto& v : j) walk(v);
    }
  };
  for (auto& r : reports) {
    walk(r);
    std::string text = r.dump();
    if (text.find("\"koszul\": true") != std::string::npos ||
        text.find("\"golod\": true") != std::string::npos) {
      ok = false;
      note("report contains an unbounded boolean claim");
    }
  }
  criterion(10, "every Koszul/lind/Golod verdict in emitted reports carries its bound", ok);
}

int main() {
  auto t0 = std::chrono::steady_clock::now();
  criterion1();
  criterion2();
  criterion3();
  criterion4();
  criterion5();
  criterion6();
  criterion7();
  criterion8();
  criterion9();
  criterion10();
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  std::cout << "ACCEPTANCE " << (failures == 0 ? "PASS" : "FAIL") << " (" << failures
            << " failing criteria, " << secs << " s)\n";
  return failures == 0 ? 0 : 1;
}
