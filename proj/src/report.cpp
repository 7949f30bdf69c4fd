#include "lindel/report.hpp"

#include <algorithm>

namespace lindel {

namespace {

Json budget_json(const Budget& b) {
  Json j;
  j["max_basis"] = b.max_basis;
  j["max_degree"] = b.max_degree;
  j["max_pairs"] = b.max_pairs;
  return j;
}

Json base_report(const std::string& command, const RingPresentation* P,
                 const CommandOptions& opt) {
  reset_budget_usage();
  Json j;
  j["schema"] = 1;
  j["command"] = command;
  if (P) j["ring"] = P->str();
  j["seed"] = opt.seed;
  j["budget"] = budget_json(opt.budget);
  return j;
}

void attach_usage(Json& report) {
  BudgetUsage u = budget_usage();
  Json j;
  j["pairs"] = u.pairs;
  j["basis"] = u.basis;
  j["degree"] = u.degree;
  report["budget_usage"] = j;
}

RingPresentation convert_field(const RingPresentation& P, const Field& F) {
  if (P.ring.field == F) return P;
  if (P.ring.field.kind != Field::Kind::rationals)
    throw UnsupportedError("--field: only Q presentations can be re-read in another field");
  RingPresentation out = P;
  out.ring.field = F;
  out.gens.clear();
  for (auto& g : P.gens) {
    std::vector<Term> ts;
    for (auto& t : g.terms())
      ts.push_back(Term{t.m, Scalar::of_rational(F, t.c.rat())});
    Poly q = poly_make(out.ring, std::move(ts));
    if (!q.is_zero()) out.gens.push_back(q);
  }
  return out;
}

std::string engine_name(const RingPresentation& P, const Budget& bud) {
  try {
    if (is_artinian_quotient(P, bud)) return "artinian";
  } catch (...) {
  }
  if (P.ring.order.global() && P.homogeneous) return "graded";
  return "tangent-cone";
}

// a graded presentation suitable for koszul/lind/golod: tangent cone for local input
RingPresentation graded_view(const RingPresentation& P, const Budget& bud, bool* via_cone) {
  *via_cone = false;
  if (P.ring.order.global() && P.homogeneous) return P;
  if (!P.ring.order.global()) {
    bool artin = false;
    try {
      artin = is_artinian_quotient(P, bud);
    } catch (...) {
    }
    if (artin) {
      FiniteAlgebra A = build_finite_algebra(P, bud);
      *via_cone = true;
      return fa_assoc_graded(A, bud);
    }
    *via_cone = true;
    return tangent_cone(P, bud);
  }
  throw UnsupportedError("non-homogeneous global presentations are not supported here");
}

}  // namespace

RingPresentation load_presentation(const std::string& text, const CommandOptions& opt) {
  RingPresentation P = parse_ring(text);
  if (!opt.field_override.empty()) {
    Field F;
    if (opt.field_override == "Q") F = Field::Q();
    else if (opt.field_override.size() > 1 && opt.field_override[0] == 'F')
      F = Field::Fp((uint32_t)std::stoul(opt.field_override.substr(1)));
    else
      throw StructuralError("--field: expected Q or F<p>");
    P = convert_field(P, F);
  }
  return P;
}

Json json_betti(const BettiTable& B) {
  Json j;
  Json arr = Json::array();
  for (auto& [ij, c] : B.graded) {
    if (c == 0) continue;
    arr.push_back(Json::array({ij.first, ij.second, c}));
  }
  j["betti"] = arr;
  j["total"] = B.total;
  j["truncated_at"] = B.truncated_at >= 0 ? Json(B.truncated_at) : Json(nullptr);
  j["bound"] = B.N;
  return j;
}

Json json_koszul(const KoszulVerdict& V) {
  Json j;
  j["status"] = V.koszul_up_to ? "koszul_up_to" : "not_koszul";
  j["bound"] = V.N;
  if (V.koszul_up_to) j["witness"] = nullptr;
  else j["witness"] = Json::array({V.wit_i, V.wit_j});
  return j;
}

Json json_lind(const LindVerdict& V) {
  Json j;
  j["N"] = V.N;
  j["bound"] = V.N;
  Json nz = Json::array();
  for (int i = 0; i < (int)V.h_nonzero.size(); ++i)
    if (V.h_nonzero[i]) nz.push_back(i);
  j["nonzero_h"] = nz;
  j["value"] = V.value();
  j["saturated"] = V.saturated();
  return j;
}

Json json_golod(const GolodVerdict& V) {
  Json j;
  switch (V.status) {
    case GolodVerdict::Status::golod_up_to: j["status"] = "golod_up_to"; break;
    case GolodVerdict::Status::not_golod: j["status"] = "not_golod"; break;
    case GolodVerdict::Status::inconclusive: j["status"] = "inconclusive"; break;
  }
  j["bound"] = V.N;
  j["actual"] = V.actual;
  j["predicted"] = V.predicted;
  j["first_discrepancy"] =
      V.first_discrepancy >= 0 ? Json(V.first_discrepancy) : Json(nullptr);
  j["koszul_homology"] = V.koszul_homology;
  j["embdim"] = V.embdim;
  j["depth"] = V.depth;
  j["stabilized"] = V.stabilized;
  return j;
}

Json json_invariants(const InvariantReport& R) {
  Json j;
  j["engine"] = R.engine;
  j["dim"] = R.dim;
  j["depth"] = R.depth;
  j["embdim"] = R.embdim;
  j["codim"] = R.codim;
  j["multiplicity"] = R.multiplicity;
  j["type"] = R.type ? Json(*R.type) : Json(nullptr);
  j["mu_m2"] = R.mu_m2;
  j["socle_degree"] = R.socle_degree ? Json(*R.socle_degree) : Json(nullptr);
  j["length"] = R.length ? Json(*R.length) : Json(nullptr);
  j["hilbert"] = R.hilbert;
  j["cohen_macaulay"] = R.cohen_macaulay;
  j["tag"] = R.multiplicity_tag;
  return j;
}

Json json_certificate(const Ring& R, const FiltrationCertificate& C) {
  Json j;
  Json ideals = Json::array();
  for (size_t i = 0; i < C.ideal_gens.size(); ++i) {
    Json entry;
    entry["name"] = i < C.names.size() ? C.names[i] : ("I" + std::to_string(i));
    Json gens = Json::array();
    for (auto& g : C.ideal_gens[i]) gens.push_back(poly_str(R, g));
    entry["gens"] = gens;
    entry["wf2"] = i < C.wf2.size() ? Json(C.wf2[i]) : Json(nullptr);
    entry["wf3"] = i < C.wf3.size() ? Json(C.wf3[i]) : Json(nullptr);
    const WitnessEntry& w = C.witnesses[i];
    if (w.ideal_index == (int)i) {
      Json wit;
      wit["j_index"] = w.j_index;
      wit["x"] = poly_str(R, w.x);
      wit["colon_index"] = w.colon_index;
      entry["witness"] = wit;
    } else {
      entry["witness"] = nullptr;
    }
    ideals.push_back(entry);
  }
  j["engine"] = C.engine;
  j["wf1"] = C.wf1;
  if (!C.wf1) j["wf1_reason"] = C.wf1_reason;
  j["ideals"] = ideals;
  j["weak_ok"] = C.weak_ok;
  if (C.strong_checked) {
    Json s;
    s["sbound"] = C.sbound;
    s["complete"] = C.sbound_complete;
    Json fails = Json::array();
    for (size_t i = 0; i < C.strong_failures.size(); ++i) {
      if (C.strong_failures[i].empty()) continue;
      Json f;
      f["ideal"] = i;
      f["failing_s"] = C.strong_failures[i];
      fails.push_back(f);
    }
    s["failures"] = fails;
    s["ok"] = C.strong_ok;
    j["strong"] = s;
  }
  return j;
}

CommandResult cmd_analyze(const std::string& ring_text, const CommandOptions& opt) {
  RingPresentation P = load_presentation(ring_text, opt);
  CommandResult R;
  R.report = base_report("analyze", &P, opt);
  InvariantReport inv = invariants(P, opt.budget);
  R.report["engine"] = inv.engine;
  R.report["invariants"] = json_invariants(inv);
  GStretchedVerdict g = is_g_stretched(P, opt.budget);
  Json gs;
  gs["g_stretched"] = g.g_stretched;
  gs["mu_m2"] = g.mu_m2;
  gs["dim_le_1"] = g.dim_le_1;
  R.report["g_stretched"] = gs;
  attach_usage(R.report);
  R.exit_code = 0;
  return R;
}

CommandResult cmd_koszul(const std::string& ring_text, int bound, const CommandOptions& opt) {
  RingPresentation P = load_presentation(ring_text, opt);
  CommandResult R;
  R.report = base_report("koszul", &P, opt);
  bool via_cone = false;
  RingPresentation G = graded_view(P, opt.budget, &via_cone);
  R.report["engine"] = engine_name(G, opt.budget);
  if (via_cone) R.report["graded_model"] = G.str();
  KoszulVerdict V = koszul_check(G, bound, opt.budget);
  R.report["koszul"] = json_koszul(V);
  attach_usage(R.report);
  R.exit_code = V.koszul_up_to ? 0 : 1;
  return R;
}

CommandResult cmd_lind(const std::string& ring_text, const std::string& module, int bound,
                       const CommandOptions& opt) {
  RingPresentation P = load_presentation(ring_text, opt);
  CommandResult R;
  R.report = base_report("lind", &P, opt);
  ModuleSpec M = ModuleSpec::k();
  if (module == "m") M = ModuleSpec::m();
  else if (module != "k") throw StructuralError("lind: --module must be k or m");
  R.report["module"] = module;
  R.report["engine"] = engine_name(P, opt.budget);
  LindVerdict V = lind_bounded(P, M, bound, opt.budget);
  R.report["lind_bounded"] = json_lind(V);
  attach_usage(R.report);
  R.exit_code = V.value() == 0 ? 0 : 1;
  return R;
}

CommandResult cmd_golod(const std::string& ring_text, int bound, int dbound,
                        const CommandOptions& opt) {
  RingPresentation P = load_presentation(ring_text, opt);
  CommandResult R;
  R.report = base_report("golod", &P, opt);
  R.report["engine"] = engine_name(P, opt.budget);
  GolodVerdict V = golod_check(P, bound, dbound, opt.budget);
  R.report["golod"] = json_golod(V);
  attach_usage(R.report);
  R.exit_code = V.status == GolodVerdict::Status::not_golod ? 1 : 0;
  return R;
}

CommandResult cmd_betti(const std::string& ring_text, int bound, int dbound,
                        const CommandOptions& opt) {
  RingPresentation P = load_presentation(ring_text, opt);
  if (dbound <= 0) {
    int maxdeg = 0;
    for (auto& g : P.gens) maxdeg = std::max(maxdeg, (int)g.max_degree());
    dbound = bound + maxdeg + 1;
  }
  CommandResult R;
  R.report = base_report("betti", &P, opt);
  std::string engine = engine_name(P, opt.budget);
  R.report["engine"] = engine;
  BettiTable B;
  if (engine == "artinian") {
    FiniteAlgebra A = build_finite_algebra(P, opt.budget);
    B = betti_of(resolve_cyclic_artinian(A, maximal_ideal_gens(P.ring), bound), dbound);
  } else if (engine == "graded") {
    B = betti_of(resolve_cyclic_graded(P, maximal_ideal_gens(P.ring), bound, opt.budget),
                 dbound);
  } else {
    throw UnsupportedError("betti: unsupported input");
  }
  R.report["betti_table"] = json_betti(B);
  attach_usage(R.report);
  R.exit_code = 0;
  return R;
}

CommandResult cmd_filtration_verify(const std::string& ring_text, const std::string& filt_text,
                                    bool strong, int sbound, const CommandOptions& opt) {
  RingPresentation P = load_presentation(ring_text, opt);
  CommandResult R;
  R.report = base_report("filtration verify", &P, opt);
  auto named = parse_filtration_file(P.ring, filt_text);
  std::vector<std::vector<Poly>> ideals;
  std::vector<std::string> names;
  for (auto& [n, g] : named) {
    names.push_back(n);
    ideals.push_back(g);
  }
  FiltrationCertificate C = strong
                                ? verify_koszul_filtration(P, ideals, sbound, {}, opt.budget)
                                : verify_weak_koszul_filtration(P, ideals, {}, opt.budget);
  C.names = names;
  R.report["engine"] = C.engine;
  R.report["certificate"] = json_certificate(P.ring, C);
  bool ok = strong ? C.strong_ok : C.weak_ok;
  R.report["verdict"] = ok ? "passes" : "fails";
  attach_usage(R.report);
  R.exit_code = ok ? 0 : 1;
  return R;
}

CommandResult cmd_filtration_lift(const std::string& ring_text, const std::string& element,
                                  const std::string& filt_text, const CommandOptions& opt) {
  RingPresentation P = load_presentation(ring_text, opt);
  CommandResult R;
  R.report = base_report("filtration lift", &P, opt);
  Poly y = parse_poly(P.ring, element);
  auto named = parse_filtration_file(P.ring, filt_text);
  std::vector<std::vector<Poly>> fbar;
  for (auto& [n, g] : named) fbar.push_back(g);
  LiftResult L = lift_filtration(P, y, fbar, opt.budget);
  R.report["element"] = poly_str(P.ring, y);
  R.report["case"] = std::string(1, L.case_used);
  Json lifted = Json::array();
  for (auto& gens : L.lifted) {
    Json g = Json::array();
    for (auto& f : gens) g.push_back(poly_str(P.ring, f));
    lifted.push_back(g);
  }
  R.report["lifted"] = lifted;
  R.report["reverification"] = json_certificate(P.ring, L.reverification);
  attach_usage(R.report);
  R.exit_code = L.reverification.weak_ok ? 0 : 1;
  return R;
}

CommandResult cmd_classify(const std::string& ring_text, const CommandOptions& opt) {
  RingPresentation P = load_presentation(ring_text, opt);
  CommandResult R;
  R.report = base_report("stretched classify", &P, opt);
  R.report["engine"] = engine_name(P, opt.budget);
  ClassifyVerdict V = classify_g_stretched(P, opt.budget);
  Json j;
  j["prediction"] = V.predict_koszul ? "PredictKoszul" : "PredictNotKoszul";
  j["dim"] = V.dim;
  j["m2_zero"] = V.m2_zero;
  j["m3_zero"] = V.m3_zero;
  j["type"] = V.type;
  j["codim"] = V.codim;
  j["reason"] = V.reason;
  R.report["classification"] = j;
  attach_usage(R.report);
  R.exit_code = V.predict_koszul ? 0 : 1;
  return R;
}

CommandResult cmd_qn(const std::string& ring_text, const CommandOptions& opt) {
  RingPresentation P = load_presentation(ring_text, opt);
  CommandResult R;
  R.report = base_report("stretched qn", &P, opt);
  QnResult V = qn_decompose(P, opt.budget);
  Json j;
  j["decomposed"] = V.decomposed;
  if (V.decomposed) {
    Json q = Json::array();
    for (auto& g : V.q_gens) q.push_back(poly_str(P.ring, g));
    j["q_gens"] = q;
  } else {
    j["failure"] = V.failure;
  }
  R.report["qn"] = j;
  attach_usage(R.report);
  R.exit_code = V.decomposed ? 0 : 1;
  return R;
}

CommandResult cmd_ev(int h, int tau, int s, const CommandOptions& opt) {
  CommandResult R;
  Field F = Field::Q();
  if (!opt.field_override.empty() && opt.field_override != "Q")
    F = Field::Fp((uint32_t)std::stoul(opt.field_override.substr(1)));
  RingPresentation P = elias_valla_presentation(EVParameters{h, tau, s, {}}, F);
  R.report = base_report("stretched ev", &P, opt);
  R.report["parameters"] = Json{{"h", h}, {"tau", tau}, {"s", s}};
  R.report["presentation"] = P.str();
  InvariantReport inv = invariants(P, opt.budget);
  R.report["invariants"] = json_invariants(inv);
  attach_usage(R.report);
  R.exit_code = 0;
  return R;
}

CommandResult cmd_semigroup(const std::vector<int>& a, const CommandOptions& opt) {
  CommandResult R;
  SemigroupResult S = semigroup_ring(a, 8, opt.budget);
  R.report = base_report("semigroup", nullptr, opt);
  R.report["generators"] = S.generators;
  R.report["minimal_generating"] = S.minimal_generating;
  Json toric = Json::array();
  for (auto& f : S.toric_ideal) toric.push_back(poly_str(S.toric_ring, f));
  R.report["toric_ideal"] = toric;
  R.report["tangent_cone"] = S.tangent_cone_pres.str();
  R.report["semigroup_hilbert"] = S.semigroup_hilbert;
  InvariantReport inv = invariants(S.tangent_cone_pres, opt.budget);
  R.report["invariants"] = json_invariants(inv);
  // the Koszul side-check can exhaust the budget on larger semigroups; report
  // that outcome in place instead of dropping the pipeline output
  try {
    KoszulVerdict K = koszul_check(S.tangent_cone_pres, 5, opt.budget);
    R.report["koszul"] = json_koszul(K);
  } catch (const BudgetError& e) {
    Json j;
    j["status"] = "budget_exceeded";
    j["bound"] = 5;
    j["error"] = e.what();
    R.report["koszul"] = j;
  }
  attach_usage(R.report);
  R.exit_code = 0;
  return R;
}

CommandResult cmd_sweep_ev(int hmax, int smax, int bound, const CommandOptions& opt) {
  CommandResult R;
  R.report = base_report("sweep ev", nullptr, opt);
  Field F = Field::Q();
  bool experimental = false;
  if (!opt.field_override.empty() && opt.field_override != "Q") {
    F = Field::Fp((uint32_t)std::stoul(opt.field_override.substr(1)));
    experimental = true;
  }
  Json arr = Json::array();
  bool all_agree = true;
  for (int h = 1; h <= hmax; ++h)
    for (int tau = 1; tau <= h; ++tau)
      for (int s = 2; s <= smax; ++s) {
        if (h == 1 && tau != 1) continue;
        RingPresentation P = elias_valla_presentation(EVParameters{h, tau, s, {}}, F);
        ClassifyVerdict C = classify_g_stretched(P, opt.budget);
        bool via_cone = false;
        RingPresentation G = graded_view(P, opt.budget, &via_cone);
        KoszulVerdict K = koszul_check(G, bound, opt.budget);
        bool agree = C.predict_koszul == K.koszul_up_to;
        all_agree &= agree;
        Json item;
        item["parameters"] = Json{{"h", h}, {"tau", tau}, {"s", s}};
        item["predicted"] = C.predict_koszul ? "PredictKoszul" : "PredictNotKoszul";
        item["direct_check"] = json_koszul(K);
        item["agree"] = agree;
        arr.push_back(item);
      }
  R.report["bound"] = bound;
  if (experimental) R.report["note"] = "experimental evidence only (prime field)";
  R.report["sweep"] = arr;
  R.report["all_agree"] = all_agree;
  attach_usage(R.report);
  R.exit_code = all_agree ? 0 : 1;
  return R;
}

// ---------------------------------------------------------------------------
// repro: every [PAPER]-anchored example, checked loudly
// ---------------------------------------------------------------------------

namespace {

struct ReproItem {
  std::string name;
  bool ok;
  std::string detail;
};

bool same_ideal_gb(const Ring& R, const std::vector<Poly>& A, const std::vector<Poly>& B,
                   const Budget& bud) {
  GroebnerBasis ga = groebner_basis(R, A, bud), gb = groebner_basis(R, B, bud);
  for (auto& f : A)
    if (!in_ideal(R, f, gb, bud)) return false;
  for (auto& f : B)
    if (!in_ideal(R, f, ga, bud)) return false;
  return true;
}

}  // namespace

CommandResult cmd_repro(const CommandOptions& opt) {
  const Budget& bud = opt.budget;
  std::vector<ReproItem> items;
  auto check = [&](const std::string& name, bool ok, const std::string& detail = "") {
    items.push_back(ReproItem{name, ok, detail});
  };

  // the running local example R = k[[x,y]]/(xy, x^3-y^2)
  RingPresentation Pxy = parse_ring("ring Q[x,y] local; ideal I = x*y, x^3 - y^2;");
  {
    FiniteAlgebra A = build_finite_algebra(Pxy, bud);
    FAOps ops(A);
    Poly x = parse_poly(Pxy.ring, "x"), y = parse_poly(Pxy.ring, "y");
    FAIdeal xi = ops.make({x});
    check("colon (x):y = m in k[[x,y]]/(xy,x^3-y^2)",
          ops.equal(ops.colon_poly(xi, y), ops.maximal_ideal()));
    check("colon (0):x = (y)", ops.equal(ops.colon_poly(ops.zero_ideal(), x), ops.make({y})));
    check("colon (0):y = (x)", ops.equal(ops.colon_poly(ops.zero_ideal(), y), ops.make({x})));
    check("m^2 = (x^2)", ops.equal(ops.mpow(2), ops.make({parse_poly(Pxy.ring, "x^2")})));
    RingPresentation gr = fa_assoc_graded(A, bud);
    RingPresentation expect = parse_ring("ring Q[x,y]; ideal I = x*y, y^2, x^4;");
    check("assoc graded is k[x,y]/(xy, y^2, x^4)",
          same_ideal_gb(gr.ring, gr.gens, expect.gens, bud));
    auto F = verify_weak_koszul_filtration(Pxy, {{}, {x}, {y}, {x, y}}, {}, bud);
    check("weak Koszul filtration {0,(x),(y),m} verifies", F.weak_ok);
    auto S = verify_koszul_filtration(Pxy, {{}, {x}, {y}, {x, y}}, 0, {}, bud);
    bool fails_ge2 = false;
    for (auto& f : S.strong_failures)
      for (int s : f)
        if (s >= 2) fails_ge2 = true;
    check("strong condition fails at some s >= 2", !S.strong_ok && fails_ge2);
  }
  {
    Ring R = parse_ring("ring Q[x,y];").ring;
    Poly x = poly_var(R, 0), y = poly_var(R, 1);
    check("(x) ∩ (y) = (xy) in k[x,y]",
          same_ideal_gb(R, ideal_intersect_S(R, {x}, {y}, bud), {mul(R, x, y)}, bud));
    auto m3 = ideal_power(R, {x, y}, 3);
    auto rhs = ideal_product(R, {x}, ideal_power(R, {x, y}, 2));
    check("(x) ∩ (x,y)^3 = x(x,y)^2",
          same_ideal_gb(R, ideal_intersect_S(R, {x}, m3, bud), rhs, bud));
  }
  {
    SemigroupResult S = semigroup_ring({4, 5, 11}, 8, bud);
    const Ring& R = S.toric_ring;
    std::vector<Poly> expect = {parse_poly(R, "y^3 - x*z"), parse_poly(R, "x^4 - y*z"),
                                parse_poly(R, "x^3*y^2 - z^2")};
    check("toric ideal of (4,5,11)", same_ideal_gb(R, S.toric_ideal, expect, bud));
    const Ring& G = S.tangent_cone_pres.ring;
    std::vector<Poly> tc = {parse_poly(G, "x*z"), parse_poly(G, "y*z"), parse_poly(G, "y^4"),
                            parse_poly(G, "z^2")};
    check("tangent cone of (4,5,11)", same_ideal_gb(G, S.tangent_cone_pres.gens, tc, bud));
    InvariantReport inv = invariants(S.tangent_cone_pres, bud);
    check("invariants: e=4, codim 2, dim 1, depth 0, almost minimal multiplicity",
          inv.multiplicity == 4 && inv.codim == 2 && inv.dim == 1 && inv.depth == 0 &&
              inv.multiplicity_tag == "almost minimal multiplicity");
    KoszulVerdict K = koszul_check(S.tangent_cone_pres, 5, bud);
    check("the (4,5,11) tangent cone is not Koszul", !K.koszul_up_to);
    FilterRegularResult fr = filter_regular_reduction(S.tangent_cone_pres, 20, opt.seed, 8, bud);
    check("no regular linear form exists (depth gr = 0)", !fr.found);
  }
  {
    RingPresentation P = parse_ring("ring Q[x,y]; ideal I = x^3, x*y, y^2;");
    FiniteAlgebra A = build_finite_algebra(P, bud);
    check("socle of k[x,y]/(x^3,xy,y^2) has rank 2", fa_socle(A).size() == 2);
    ClassifyVerdict C = classify_g_stretched(P, bud);
    check("classifier predicts NotKoszul for k[x,y]/(x^3,xy,y^2)",
          !C.predict_koszul && C.type == 2);
  }
  {
    ClassifyVerdict C = classify_g_stretched(parse_ring("ring Q[x,y]; ideal I = x^2, x*y;"), bud);
    check("dim-1 canonical form predicts Koszul", C.predict_koszul && C.dim == 1);
    QnResult q = qn_decompose(parse_ring("ring Q[x,y]; ideal I = x^2, x*y;"), bud);
    check("qn decomposition of (x^2, xy) gives Q = (x)",
          q.decomposed && q.q_gens.size() == 1);
  }
  {
    // Theorem 2.3 shape: R/(0:x) --x--> R with image in m*R
    RingPresentation P = parse_ring("ring Q[x,y]; ideal I = x^2, x*y, y^2;");
    FiniteAlgebra A = build_finite_algebra(P, bud);
    auto v = tor_map_is_zero_artinian(A, maximal_ideal_gens(P.ring), {},
                                      poly_var(P.ring, 0), 4);
    bool all = true;
    for (bool b : v) all &= b;
    check("inclusion into m*R (R free) is Tor-vanishing", all);
  }
  {
    // Lemma 4.8(2) on the stretched Gorenstein h=2 example, J = (y1), x = y2
    RingPresentation P = elias_valla_presentation(EVParameters{2, 1, 2, {}});
    FiniteAlgebra A = build_finite_algebra(P, bud);
    FAOps ops(A);
    Poly y1 = poly_var(P.ring, 0), y2 = poly_var(P.ring, 1);
    FAIdeal J = ops.make({y1});
    FAIdeal Jx = ops.colon_poly(J, y2);
    auto v = tor_map_is_zero_artinian(A, ops.min_gens(Jx), {y1}, y2, 4);
    bool all = true;
    for (bool b : v) all &= b;
    check("R/(J:x) -> R/J is Tor-vanishing (h=2 Gorenstein witness)", all);
  }
  {
    GolodVerdict V = golod_check(parse_ring("ring Q[x,y]; ideal I = x^2, x*y;"), 5, 8, bud);
    check("k[x,y]/(x^2,xy) is Golod up to 5",
          V.status == GolodVerdict::Status::golod_up_to);
  }
  {
    RingPresentation P = parse_ring("ring Q[x,y];");
    Poly x = poly_var(P.ring, 0), y = poly_var(P.ring, 1);
    auto C = verify_weak_koszul_filtration(P, {{}, {x}, {x, y}}, {}, bud);
    check("regular-ring filtration verifies (weak)", C.weak_ok);
    auto S = verify_koszul_filtration(P, {{}, {x}, {x, y}}, 3, {}, bud);
    check("regular-ring filtration verifies for all s <= 3", S.strong_ok);
  }
  {
    RingPresentation P = parse_ring("ring Q[x,y]; ideal I = x^2, x*y;");
    auto F = canonical_filtration(P, CanonicalKind::dim1_canonical, bud);
    auto S = verify_koszul_filtration(P, F, 0, {}, bud);
    check("dim-1 canonical Koszul filtration verifies", S.strong_ok);
  }
  {
    RingPresentation G3 = elias_valla_presentation(EVParameters{3, 1, 2, {}});
    auto F = canonical_filtration(G3, CanonicalKind::stretched_gorenstein, bud);
    check("stretched Gorenstein h=3 family has the six ideals of the theorem", F.size() == 6);
    auto C = verify_weak_koszul_filtration(G3, F, {}, bud);
    check("stretched Gorenstein h=3 family verifies", C.weak_ok);
    // generator chain for m has length h = 3
    int m_index = -1;
    for (size_t i = 0; i < F.size(); ++i)
      if (F[i].size() == 3) m_index = (int)i;
    auto chain = extract_generator_chain(G3, C, m_index, bud);
    check("generator chain of m has length 3", chain.size() == 3);
    RingPresentation G2 = elias_valla_presentation(EVParameters{2, 1, 2, {}});
    auto F2 = canonical_filtration(G2, CanonicalKind::stretched_gorenstein, bud);
    check("h=2 family is {0, m, (y1), (y2)}", F2.size() == 4);
  }
  {
    // Prop 7.2: h=2, tau=1, s=3 reproduces the running example up to renaming
    RingPresentation P = elias_valla_presentation(EVParameters{2, 1, 3, {}});
    FiniteAlgebra A = build_finite_algebra(P, bud);
    FiniteAlgebra B = build_finite_algebra(Pxy, bud);
    check("EV(2,1,3) matches k[[x,y]]/(xy, x^3-y^2)",
          A.dim() == B.dim() && fa_adic_hilbert(A) == fa_adic_hilbert(B) &&
              fa_socle(A).size() == fa_socle(B).size());
  }

  CommandResult R;
  R.report = base_report("repro", nullptr, opt);
  Json arr = Json::array();
  bool all_ok = true;
  for (auto& it : items) {
    Json j;
    j["name"] = it.name;
    j["ok"] = it.ok;
    if (!it.detail.empty()) j["detail"] = it.detail;
    arr.push_back(j);
    all_ok &= it.ok;
  }
  R.report["checks"] = arr;
  R.report["all_ok"] = all_ok;
  attach_usage(R.report);
  R.exit_code = all_ok ? 0 : 2;
  return R;
}

}  // namespace lindel
