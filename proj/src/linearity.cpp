#include "lindel/linearity.hpp"

#include <algorithm>

namespace lindel {

namespace {

// class in m/m^2 of an artinian-algebra element, as a linear form
Poly linear_class(const FiniteAlgebra& A, const Ring& gr_ring, const Row& entry) {
  std::vector<Term> ts;
  for (size_t b = 0; b < A.dim(); ++b) {
    if (entry[b].is_zero()) continue;
    if (A.basis[b].degree() == 1) ts.push_back(Term{A.basis[b], entry[b]});
  }
  return poly_make(gr_ring, std::move(ts));
}

Mat module_matrix_over(const FiniteAlgebra& GA, size_t rank, const std::vector<Row>& cols) {
  const size_t D = GA.dim();
  Mat M(rank * D, Row(cols.size() * D, Scalar::zero(GA.field())));
  for (size_t i = 0; i < cols.size(); ++i)
    for (size_t b = 0; b < D; ++b) {
      Row img = fa_modules::module_mul_elt(GA, rank, cols[i], b);
      for (size_t k = 0; k < rank * D; ++k) M[k][i * D + b] = img[k];
    }
  return M;
}

}  // namespace

LinearPartComplex linear_part(const RingPresentation& P, const GradedResolution& F) {
  LinearPartComplex L;
  L.gr = P;
  const Ring& R = P.ring;
  L.ranks.push_back(F.degs[0].size());
  L.diff.push_back({});
  for (int i = 1; i <= F.levels(); ++i) {
    std::vector<std::vector<Poly>> cols;
    for (size_t c = 0; c < F.diff[i].size(); ++c) {
      std::vector<Poly> col;
      for (size_t s = 0; s < F.degs[i - 1].size(); ++s) {
        const Poly& e = F.diff[i][c][s];
        if (!e.is_zero() && e.min_degree() < 1)
          throw StructuralError("linear part: non-minimal input slice");
        int deg = F.degs[i][c] - F.degs[i - 1][s];
        col.push_back(deg == 1 ? e : Poly());
      }
      cols.push_back(col);
    }
    L.ranks.push_back(F.degs[i].size());
    L.diff.push_back(cols);
  }
  for (size_t i = 2; i < L.diff.size(); ++i) {
    for (auto& col : L.diff[i]) {
      for (size_t t = 0; t < L.ranks[i - 2]; ++t) {
        Poly acc;
        for (size_t s = 0; s < L.ranks[i - 1]; ++s) {
          if (col[s].is_zero() || L.diff[i - 1][s][t].is_zero()) continue;
          acc = add(R, acc, mul(R, col[s], L.diff[i - 1][s][t]));
        }
        if (!normal_form(R, acc, F.quot_gb).is_zero())
          throw StructuralError("linear part: differentials do not compose to zero");
      }
    }
  }
  return L;
}

LinearPartComplex linear_part(const FiniteAlgebra& A, const LocalResolution& F) {
  LinearPartComplex L;
  L.gr = fa_assoc_graded(A);
  const size_t D = A.dim();
  L.ranks.push_back(F.degs[0].size());
  L.diff.push_back({});
  for (int i = 1; i <= F.levels(); ++i) {
    size_t prev_rank = F.degs[i - 1].size();
    std::vector<std::vector<Poly>> cols;
    for (auto& colrow : F.diff[i]) {
      std::vector<Poly> col;
      for (size_t s = 0; s < prev_rank; ++s) {
        Row entry(colrow.begin() + s * D, colrow.begin() + (s + 1) * D);
        if (!fa_is_zero(entry) && !entry[0].is_zero())
          throw StructuralError("linear part: non-minimal input slice");
        col.push_back(linear_class(A, L.gr.ring, entry));
      }
      cols.push_back(col);
    }
    L.ranks.push_back(F.diff[i].size());
    L.diff.push_back(cols);
  }
  FiniteAlgebra GA = build_finite_algebra(L.gr);
  for (size_t i = 2; i < L.diff.size(); ++i) {
    for (auto& col : L.diff[i]) {
      for (size_t t = 0; t < L.ranks[i - 2]; ++t) {
        Poly acc;
        for (size_t s = 0; s < L.ranks[i - 1]; ++s) {
          if (col[s].is_zero() || L.diff[i - 1][s][t].is_zero()) continue;
          acc = add(L.gr.ring, acc, mul(L.gr.ring, col[s], L.diff[i - 1][s][t]));
        }
        if (!fa_is_zero(fa_from_poly(GA, acc)))
          throw StructuralError("linear part: differentials do not compose to zero");
      }
    }
  }
  return L;
}

namespace {

// artinian path: gr is artinian, total dimension counts are exact
LindVerdict lind_from_linear_part_artinian(const LinearPartComplex& L, int N) {
  FiniteAlgebra GA = build_finite_algebra(L.gr);
  const size_t D = GA.dim();
  LindVerdict V;
  V.N = N;
  V.h_nonzero.assign(N + 1, false);
  V.h_nonzero[0] = !L.ranks.empty() && L.ranks[0] > 0;
  std::vector<size_t> rank_of_lin(std::max<size_t>(L.diff.size(), N + 2), 0);
  for (size_t i = 1; i < L.diff.size(); ++i) {
    size_t prev = L.ranks[i - 1];
    std::vector<Row> ga_cols;
    for (auto& col : L.diff[i]) {
      Row r(prev * D, Scalar::zero(GA.field()));
      for (size_t s = 0; s < prev; ++s) {
        Row e = fa_from_poly(GA, col[s]);
        for (size_t k = 0; k < D; ++k) r[s * D + k] = e[k];
      }
      ga_cols.push_back(std::move(r));
    }
    rank_of_lin[i] = rank_of(GA.field(), module_matrix_over(GA, prev, ga_cols));
  }
  for (int i = 1; i <= N; ++i) {
    size_t gi = (size_t)i < L.ranks.size() ? L.ranks[i] : 0;
    size_t ri = rank_of_lin[i];
    size_t ri1 = rank_of_lin[i + 1];
    V.h_nonzero[i] = gi * D - ri > ri1;
  }
  return V;
}

// graded path: kernel via module syzygies, image membership over gr (= R)
LindVerdict lind_from_linear_part_graded(const LinearPartComplex& L, int N, const Budget& bud) {
  const Ring& R = L.gr.ring;
  std::vector<Poly> quot_gb = groebner_basis(R, L.gr.gens, bud).els;
  LindVerdict V;
  V.N = N;
  V.h_nonzero.assign(N + 1, false);
  V.h_nonzero[0] = !L.ranks.empty() && L.ranks[0] > 0;
  for (int i = 1; i <= N; ++i) {
    size_t gi = (size_t)i < L.ranks.size() ? L.ranks[i] : 0;
    if (gi == 0) continue;
    size_t prev = L.ranks[i - 1];
    std::vector<int> shifts_prev(prev, 0);
    ModuleCtx ker_ctx(R, L.diff[i], prev, shifts_prev, quot_gb, bud);
    auto kernel = ker_ctx.kernel_gens();
    std::vector<std::vector<Poly>> img_cols =
        (size_t)(i + 1) < L.diff.size() ? L.diff[i + 1] : std::vector<std::vector<Poly>>{};
    std::vector<int> shifts_i(gi, 0);
    ModuleCtx img_ctx(R, img_cols, gi, shifts_i, quot_gb, bud);
    bool nonzero = false;
    for (auto& kgen : kernel)
      if (!img_ctx.contains(kgen)) { nonzero = true; break; }
    V.h_nonzero[i] = nonzero;
  }
  return V;
}

bool route_artinian(const RingPresentation& P, const Budget& bud) {
  if (!P.ring.order.global()) return true;  // local order inputs go to the artinian engine
  return is_artinian_quotient(P, bud);
}

}  // namespace

LindVerdict lind_bounded(const RingPresentation& P, const ModuleSpec& M, int N,
                         const Budget& bud) {
  if (route_artinian(P, bud)) {
    FiniteAlgebra A = build_finite_algebra(P, bud);
    LocalResolution F;
    if (M.kind == ModuleSpec::Kind::maximal_ideal) {
      std::vector<Row> cols;
      for (size_t v = 0; v < A.nvars(); ++v) cols.push_back(fa_var(A, v));
      LocalResolution S = resolve_submodule_artinian(A, 1, {0}, cols, N + 2);
      // drop the ambient level: the stored complex is A <- F_0 <- F_1 <- ...
      F.A = S.A;
      F.graded = S.graded;
      for (size_t i = 1; i < S.degs.size(); ++i) F.degs.push_back(S.degs[i]);
      F.diff.push_back({});
      for (size_t i = 2; i < S.diff.size(); ++i) F.diff.push_back(S.diff[i]);
    } else {
      std::vector<Poly> gens = M.kind == ModuleSpec::Kind::residue_field
                                   ? maximal_ideal_gens(P.ring)
                                   : M.ideal_gens;
      F = resolve_cyclic_artinian(A, gens, N + 1);
    }
    certify(F);
    LinearPartComplex L = linear_part(A, F);
    return lind_from_linear_part_artinian(L, N);
  }
  if (!P.homogeneous)
    throw UnsupportedError("lind: non-homogeneous non-artinian input is unsupported");
  GradedResolution F;
  if (M.kind == ModuleSpec::Kind::maximal_ideal) {
    std::vector<std::vector<Poly>> cols;
    for (size_t v = 0; v < P.ring.nvars(); ++v) cols.push_back({poly_var(P.ring, v)});
    GradedResolution S = resolve_submodule_graded(P, 1, {0}, cols, N + 2, bud);
    F.P = S.P;
    F.quot_gb = S.quot_gb;
    for (size_t i = 1; i < S.degs.size(); ++i) F.degs.push_back(S.degs[i]);
    F.diff.push_back({});
    for (size_t i = 2; i < S.diff.size(); ++i) F.diff.push_back(S.diff[i]);
    F.truncated = S.truncated;
    F.truncated_at = S.truncated_at;
  } else {
    std::vector<Poly> gens = M.kind == ModuleSpec::Kind::residue_field
                                 ? maximal_ideal_gens(P.ring)
                                 : M.ideal_gens;
    F = resolve_cyclic_graded(P, gens, N + 1, bud);
  }
  if (F.truncated) throw BudgetError("lind resolution", 0, 0, 0);
  certify(F);
  LinearPartComplex L = linear_part(P, F);
  return lind_from_linear_part_graded(L, N, bud);
}

KoszulVerdict koszul_check(const RingPresentation& P, int N, const Budget& bud) {
  if (!P.homogeneous || !P.ring.order.global())
    throw UnsupportedError("koszul_check requires a graded presentation (apply the "
                           "tangent cone first for local rings)");
  KoszulVerdict V;
  V.N = N;
  if (P.ring.nvars() == 0) return V;
  auto note_witness = [&](int i, const std::vector<int>& degs) {
    int best = -1;
    for (int d : degs)
      if (d > i && (best < 0 || d < best)) best = d;
    if (best >= 0) {
      V.koszul_up_to = false;
      V.wit_i = i;
      V.wit_j = best;
    }
    return best >= 0;
  };
  if (route_artinian(P, bud)) {
    FiniteAlgebra A = build_finite_algebra(P, bud);
    std::vector<Row> cols;
    for (size_t v = 0; v < A.nvars(); ++v) cols.push_back(fa_var(A, v));
    size_t prev_rank = 1;
    std::vector<int> degs(cols.size(), 1);
    for (int i = 1; i <= N; ++i) {
      if (note_witness(i, degs)) return V;
      if (i == N || cols.empty()) break;
      std::vector<Row> ker = fa_modules::module_kernel(A, prev_rank, cols);
      std::vector<Row> gens = fa_modules::module_min_gens(A, cols.size(), degs, ker, true);
      prev_rank = cols.size();
      std::vector<int> degs_next;
      for (auto& g : gens)
        degs_next.push_back(fa_modules::module_degree_graded(A, degs, g));
      degs = degs_next;
      cols = gens;
    }
    return V;
  }
  const Ring& R = P.ring;
  std::vector<Poly> quot_gb = groebner_basis(R, P.gens, bud).els;
  std::vector<std::vector<Poly>> cols;
  for (auto& g : minimal_gens_graded(R, maximal_ideal_gens(R), quot_gb, bud))
    cols.push_back({g});
  std::vector<int> shifts = {0};
  std::vector<int> degs;
  for (auto& c : cols) degs.push_back((int)c[0].max_degree());
  for (int i = 1; i <= N; ++i) {
    if (note_witness(i, degs)) return V;
    if (i == N || cols.empty()) break;
    ModuleCtx ctx(R, cols, shifts.size(), shifts, quot_gb, bud);
    auto mins = min_gens_module_graded(R, quot_gb, cols.size(), degs, ctx.kernel_gens());
    std::vector<std::vector<Poly>> next_cols;
    std::vector<int> next_degs;
    for (auto& [v, d] : mins) {
      next_cols.push_back(v);
      next_degs.push_back(d);
    }
    shifts = degs;
    degs = next_degs;
    cols = next_cols;
  }
  return V;
}

int reg_k_bounded(const RingPresentation& P, int N, const Budget& bud) {
  if (!P.homogeneous || !P.ring.order.global())
    throw UnsupportedError("reg_k requires a graded presentation");
  BettiTable B;
  if (route_artinian(P, bud)) {
    FiniteAlgebra A = build_finite_algebra(P, bud);
    B = betti_of(resolve_cyclic_artinian(A, maximal_ideal_gens(P.ring), N));
  } else {
    B = betti_of(resolve_cyclic_graded(P, maximal_ideal_gens(P.ring), N, bud));
  }
  int reg = 0;
  for (auto& [ij, c] : B.graded)
    if (c > 0) reg = std::max(reg, ij.second - ij.first);
  return reg;
}

std::vector<long> koszul_homology_artinian(const FiniteAlgebra& A) {
  const size_t e = A.nvars();
  const size_t D = A.dim();
  const Field& F = A.field();
  if (e > 6) throw UnsupportedError("golod: Koszul complex limited to at most 6 generators");
  std::vector<std::vector<std::vector<int>>> subsets(e + 1);
  std::vector<int> cur;
  auto rec = [&](auto&& self, size_t start) -> void {
    subsets[cur.size()].push_back(cur);
    for (size_t v = start; v < e; ++v) {
      cur.push_back((int)v);
      self(self, v + 1);
      cur.pop_back();
    }
  };
  rec(rec, 0);
  std::vector<Row> vars;
  for (size_t v = 0; v < e; ++v) vars.push_back(fa_var(A, v));
  auto dmat = [&](size_t j) {
    const auto& src = subsets[j];
    const auto& tgt = subsets[j - 1];
    auto index_of = [&](const std::vector<int>& s) {
      for (size_t t = 0; t < tgt.size(); ++t)
        if (tgt[t] == s) return t;
      throw StructuralError("koszul complex: subset index");
    };
    Mat M(tgt.size() * D, Row(src.size() * D, Scalar::zero(F)));
    for (size_t c = 0; c < src.size(); ++c) {
      for (size_t k = 0; k < src[c].size(); ++k) {
        std::vector<int> rest = src[c];
        rest.erase(rest.begin() + (long)k);
        size_t t = index_of(rest);
        Scalar sign = Scalar::of_ll(F, (k % 2 == 0) ? 1 : -1);
        const Row& xv = vars[src[c][k]];
        for (size_t b = 0; b < D; ++b) {
          Row img = fa_zero(A);
          for (size_t i2 = 0; i2 < D; ++i2) {
            if (xv[i2].is_zero()) continue;
            const Row& prod = A.mult[i2][b];
            for (size_t kk = 0; kk < D; ++kk)
              if (!prod[kk].is_zero()) img[kk] = img[kk] + xv[i2] * prod[kk];
          }
          for (size_t kk = 0; kk < D; ++kk)
            M[t * D + kk][c * D + b] = M[t * D + kk][c * D + b] + sign * img[kk];
        }
      }
    }
    return M;
  };
  std::vector<size_t> ranks(e + 2, 0);
  for (size_t j = 1; j <= e; ++j) ranks[j] = rank_of(F, dmat(j));
  std::vector<long> h(e + 1, 0);
  for (size_t j = 0; j <= e; ++j) {
    size_t dim_kj = subsets[j].size() * D;
    size_t ker = dim_kj - (j >= 1 ? ranks[j] : 0);
    h[j] = (long)(ker - (j + 1 <= e ? ranks[j + 1] : 0));
  }
  return h;
}

namespace {

std::vector<long> golod_series(int e, const std::vector<long>& h, int N) {
  // (1+t)^e / (1 - sum_j h[j] t^{j+1}) through t^N
  std::vector<long> tail(N + 1, 0);
  for (size_t j = 1; j < h.size(); ++j)
    if ((int)j + 1 <= N) tail[j + 1] = h[j];
  std::vector<long> inv(N + 1, 0);
  inv[0] = 1;
  for (int d = 1; d <= N; ++d) {
    long acc = 0;
    for (int k = 1; k <= d; ++k) acc += tail[k] * inv[d - k];
    inv[d] = acc;
  }
  std::vector<long> binom(N + 1, 0);
  for (int i = 0; i <= N && i <= e; ++i) {
    long b = 1;
    for (int k = 0; k < i; ++k) b = b * (e - k) / (k + 1);
    binom[i] = b;
  }
  std::vector<long> out(N + 1, 0);
  for (int d = 0; d <= N; ++d) {
    long acc = 0;
    for (int k = 0; k <= d; ++k) acc += binom[k] * inv[d - k];
    out[d] = acc;
  }
  return out;
}

}  // namespace

GolodVerdict golod_check(const RingPresentation& P, int N, int D, const Budget& bud) {
  GolodVerdict V;
  V.N = N;
  const size_t e = P.ring.nvars();
  V.embdim = (int)e;
  if (e > 6) throw UnsupportedError("golod: Koszul complex limited to at most 6 generators");
  if (route_artinian(P, bud)) {
    FiniteAlgebra A = build_finite_algebra(P, bud);
    V.depth = 0;
    std::vector<long> h = koszul_homology_artinian(A);
    for (size_t j = 1; j < h.size(); ++j) V.koszul_homology.push_back(h[j]);
    LocalResolution F = resolve_cyclic_artinian(A, maximal_ideal_gens(P.ring), N);
    V.actual = betti_of(F).total;
    V.predicted = golod_series((int)e, h, N);
    V.stabilized = true;
  } else {
    if (!P.homogeneous)
      throw UnsupportedError("golod: non-homogeneous non-artinian input is unsupported");
    const Ring& R = P.ring;
    std::vector<Poly> quot_gb = groebner_basis(R, P.gens, bud).els;
    // depth via Auslander-Buchsbaum over the polynomial ring
    RingPresentation Spoly;
    Spoly.ring = R;
    Spoly.homogeneous = true;
    GradedResolution FS = resolve_cyclic_graded(Spoly, P.gens, (int)e + 1, bud);
    int pd = 0;
    BettiTable BS = betti_of(FS);
    for (int i = 0; i <= BS.N; ++i)
      if (BS.total[i] > 0) pd = i;
    V.depth = (int)e - pd;
    int codepth = (int)e - V.depth;
    std::vector<std::vector<std::vector<int>>> subsets(e + 1);
    std::vector<int> cur;
    auto rec2 = [&](auto&& self, size_t start) -> void {
      subsets[cur.size()].push_back(cur);
      for (size_t v = start; v < e; ++v) {
        cur.push_back((int)v);
        self(self, v + 1);
        cur.pop_back();
      }
    };
    rec2(rec2, 0);
    const Field& F = R.field;
    auto std_monos_d = [&](int d) {
      std::vector<Monomial> all, out;
      if (d < 0) return out;
      std::vector<uint16_t> ee(e, 0);
      auto rec = [&](auto&& self, size_t v, int left) -> void {
        if (v + 1 == e) {
          ee[v] = (uint16_t)left;
          all.push_back(Monomial(ee));
          return;
        }
        for (int k = 0; k <= left; ++k) {
          ee[v] = (uint16_t)k;
          self(self, v + 1, left - k);
        }
      };
      if (e == 0) {
        if (d == 0) all.push_back(Monomial(size_t(0)));
      } else {
        rec(rec, 0, d);
      }
      for (auto& m : all) {
        bool in_lt = false;
        for (auto& g : quot_gb)
          if (g.lm().divides(m)) { in_lt = true; break; }
        if (!in_lt) out.push_back(m);
      }
      return out;
    };
    // slice matrix of d_j in internal degree t; returns (matrix, source dimension)
    auto slice = [&](size_t j, int t) {
      const auto& src = subsets[j];
      const auto& tgt = subsets[j - 1];
      std::vector<Monomial> src_m = std_monos_d(t - (int)j);
      std::vector<Monomial> tgt_m = std_monos_d(t - (int)j + 1);
      std::vector<std::pair<size_t, Monomial>> tgt_coords;
      for (size_t c = 0; c < tgt.size(); ++c)
        for (auto& m : tgt_m) tgt_coords.push_back({c, m});
      auto tgt_index = [&](size_t comp, const Monomial& m) -> long {
        for (size_t i2 = 0; i2 < tgt_coords.size(); ++i2)
          if (tgt_coords[i2].first == comp && tgt_coords[i2].second == m) return (long)i2;
        return -1;
      };
      auto subset_index = [&](const std::vector<int>& s) -> size_t {
        for (size_t i2 = 0; i2 < tgt.size(); ++i2)
          if (tgt[i2] == s) return i2;
        throw StructuralError("koszul slice: subset index");
      };
      Mat M(tgt_coords.size(), Row(src.size() * src_m.size(), Scalar::zero(F)));
      for (size_t c = 0; c < src.size(); ++c) {
        for (size_t mi = 0; mi < src_m.size(); ++mi) {
          size_t colidx = c * src_m.size() + mi;
          for (size_t k = 0; k < src[c].size(); ++k) {
            std::vector<int> rest = src[c];
            rest.erase(rest.begin() + (long)k);
            size_t tcomp = subset_index(rest);
            Scalar sign = Scalar::of_ll(F, (k % 2 == 0) ? 1 : -1);
            Poly img = normal_form(
                R, mul_term(R, poly_var(R, (size_t)src[c][k]), src_m[mi], Scalar::one(F)),
                quot_gb);
            for (auto& term : img.terms()) {
              long pos = tgt_index(tcomp, term.m);
              if (pos < 0) throw StructuralError("koszul slice: missing coordinate");
              M[(size_t)pos][colidx] = M[(size_t)pos][colidx] + sign * term.c;
            }
          }
        }
      }
      return std::make_pair(M, src.size() * src_m.size());
    };
    std::vector<std::vector<long>> hjt(e + 2, std::vector<long>(D + 1, 0));
    for (size_t j = 1; j <= (size_t)codepth; ++j) {
      for (int t = (int)j; t <= D; ++t) {
        auto [Mj, dim_j] = slice(j, t);
        size_t rank_j = rank_of(F, Mj);
        size_t rank_j1 = 0;
        if (j + 1 <= e) {
          auto [Mj1, dim_j1] = slice(j + 1, t);
          (void)dim_j1;
          rank_j1 = rank_of(F, Mj1);
        }
        hjt[j][t] = (long)dim_j - (long)rank_j - (long)rank_j1;
      }
    }
    std::vector<long> h(e + 1, 0);
    bool stable = true;
    for (size_t j = 1; j <= (size_t)codepth; ++j) {
      for (int t = 0; t <= D; ++t) h[j] += hjt[j][t];
      if (D >= 1 && (hjt[j][D] != 0 || hjt[j][D - 1] != 0)) stable = false;
    }
    V.stabilized = stable;
    for (size_t j = 1; j <= (size_t)codepth; ++j) V.koszul_homology.push_back(h[j]);
    GradedResolution Fk = resolve_cyclic_graded(P, maximal_ideal_gens(R), N, bud);
    V.actual = betti_of(Fk).total;
    V.predicted = golod_series((int)e, h, N);
    if (!stable) {
      V.status = GolodVerdict::Status::inconclusive;
      return V;
    }
  }
  V.first_discrepancy = -1;
  for (int i = 0; i <= N && i < (int)V.actual.size() && i < (int)V.predicted.size(); ++i) {
    if (V.actual[i] != V.predicted[i]) {
      V.first_discrepancy = i;
      break;
    }
  }
  V.status = V.first_discrepancy < 0 ? GolodVerdict::Status::golod_up_to
                                     : GolodVerdict::Status::not_golod;
  return V;
}

}  // namespace lindel
