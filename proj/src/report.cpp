#include "derham/report.hpp"

#include <random>
#include <set>
#include <sstream>
#include <stdexcept>

#include "derham/cech.hpp"
#include "derham/cohomology.hpp"

namespace derham::driver {
namespace {

using nlohmann::ordered_json;

std::string fmt_values(const std::vector<long>& v) {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? ", " : "") << v[i];
  os << ']';
  return os.str();
}

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out += sep;
    out += parts[i];
  }
  return out;
}

// Accumulates named checks plus their human-readable one-liners; a run passes
// when every check has status "pass".
struct CheckList {
  ordered_json checks = ordered_json::array();
  std::vector<std::string> lines;
  bool pass = true;
  long passed = 0;

  void add(const std::string& name, bool ok, const std::string& status, const std::string& detail,
           ordered_json data = {}) {
    ordered_json c;
    c["name"] = name;
    c["status"] = status;
    c["detail"] = detail;
    if (!data.is_null()) c["data"] = std::move(data);
    checks.push_back(std::move(c));
    pass = pass && ok;
    passed += ok ? 1 : 0;
    lines.push_back(std::string(ok ? "[PASS] " : "[FAIL] ") + name + ": " + detail);
  }
  void add(const std::string& name, bool ok, const std::string& detail, ordered_json data = {}) {
    add(name, ok, ok ? "pass" : "fail", detail, std::move(data));
  }
};

ordered_json betti_json(const cohomology::BettiReport& r) {
  ordered_json j;
  j["side"] = side_name(r.side);
  j["D_min"] = r.D_min;
  j["D_max"] = r.D_max;
  j["window"] = r.window;
  ordered_json table = ordered_json::array();
  for (const auto& [D, h] : r.table) table.push_back(ordered_json{{"D", D}, {"h", h}});
  j["table"] = table;
  ordered_json degs = ordered_json::array();
  for (std::size_t q = 0; q < r.degrees.size(); ++q) {
    const auto& d = r.degrees[q];
    degs.push_back(ordered_json{
        {"q", q}, {"stabilized", d.stabilized}, {"value", d.value}, {"D0", d.D0}});
  }
  j["degrees"] = degs;
  j["all_stabilized"] = r.all_stabilized;
  return j;
}

cohomology::BettiReport check_betti_side(Workspace& ws, Side side, const Options& o, int d_min,
                                         CheckList& out) {
  auto r = cohomology::stabilized_betti(ws, side, 0, o.q_max, d_min, o.D_max, o.window);
  std::string name = "betti-" + side_name(side);
  if (r.all_stabilized) {
    out.add(name, true, "pass",
            "h = " + fmt_values(r.values()) + ", stable from D = " + std::to_string(r.D0()),
            betti_json(r));
  } else {
    out.add(name, false, "not-stabilized",
            "not constant over " + std::to_string(o.window) + " truncations ending at D = " +
                std::to_string(o.D_max),
            betti_json(r));
  }
  return r;
}

void check_simplicial(Workspace& ws, const Options& o, CheckList& out, std::vector<long>& hs) {
  hs = simplicial::simplicial_betti(ws.complex(), o.q_max);
  out.add("betti-simplicial", true, "h = " + fmt_values(hs) + " (ordered cochain reference)",
          ordered_json{{"h", hs}});
}

void check_agreement(const cohomology::BettiReport& ro, const cohomology::BettiReport& ra,
                     const std::vector<long>& hs, CheckList& out) {
  bool ok = ro.all_stabilized && ra.all_stabilized && ro.values() == hs && ra.values() == hs;
  out.add("betti-agreement", ok,
          ok ? "omega, sullivan and simplicial values all agree"
             : "stabilized values disagree (or a side did not stabilize)");
}

void cmd_betti(Workspace& ws, const Options& o, int d_min, CheckList& out) {
  cohomology::BettiReport ro, ra;
  std::vector<long> hs;
  if (o.side == "omega" || o.side == "all") ro = check_betti_side(ws, Side::omega, o, d_min, out);
  if (o.side == "sullivan" || o.side == "all")
    ra = check_betti_side(ws, Side::sullivan, o, d_min, out);
  if (o.side == "simplicial" || o.side == "all") check_simplicial(ws, o, out, hs);
  if (o.side == "all") check_agreement(ro, ra, hs, out);
}

void cmd_verify_quasi_iso(Workspace& ws, const Options& o, int d_min, CheckList& out) {
  auto ro = check_betti_side(ws, Side::omega, o, d_min, out);
  auto ra = check_betti_side(ws, Side::sullivan, o, d_min, out);
  std::vector<long> hs;
  check_simplicial(ws, o, out, hs);
  check_agreement(ro, ra, hs, out);

  auto rep = cohomology::induced_P_on_H(ws, o.q_max, o.D_max);
  out.add("P-chain-map", rep.chain_map,
          "d P = P d on truncations at D = " + std::to_string(o.D_max));
  out.add("P-unit", rep.unit_compatible, "P maps the unit to the unit");
  {
    bool ok = rep.chain_map;
    std::ostringstream det;
    ordered_json data = ordered_json::array();
    for (int q = 0; q <= o.q_max; ++q) {
      const auto& dg = rep.degrees[static_cast<std::size_t>(q)];
      bool dq = dg.well_defined && dg.cocycles_preserved && dg.rank == dg.h_omega &&
                dg.rank == dg.h_sullivan && dg.rank == hs[static_cast<std::size_t>(q)];
      ok = ok && dq;
      if (q) det << "; ";
      det << "q=" << q << ": rank " << dg.rank << " (h_omega " << dg.h_omega << ", h_sullivan "
          << dg.h_sullivan << ")";
      data.push_back(ordered_json{{"q", q},
                                  {"h_omega", dg.h_omega},
                                  {"h_sullivan", dg.h_sullivan},
                                  {"rank", dg.rank},
                                  {"well_defined", dg.well_defined},
                                  {"cocycles_preserved", dg.cocycles_preserved}});
    }
    out.add("P-induced-iso", ok, det.str(), data);
  }
  {
    auto st = cohomology::star_acyclicity(ws, o.q_max, d_min, o.D_max, o.window,
                                          std::min(o.p_max, 2));
    long stars = 0, empty = 0;
    for (const auto& e : st.entries) (e.empty_star ? empty : stars) += 1;
    std::ostringstream det;
    det << stars << " closed stars (p <= " << std::min(o.p_max, 2) << ", " << empty
        << " empty tuples skipped)";
    det << (st.pass ? ": all acyclic on both sides" : ": acyclicity failed");
    out.add("star-acyclicity", st.pass, det.str());
  }
  int d_cert = std::min(o.D_max, 3);
  int p_cert = std::min(o.p_max, 2);
  int q_cert = std::min(o.q_max, 2);
  for (Side side : {Side::omega, Side::sullivan}) {
    long ids = 0;
    bool ok = true;
    std::vector<std::string> fails;
    for (int q = 0; q <= q_cert; ++q) {
      auto rx = cech::certify_row_exactness(ws, side, q, d_cert, p_cert);
      ids += rx.identities;
      ok = ok && rx.pass;
      fails.insert(fails.end(), rx.failures.begin(), rx.failures.end());
    }
    std::string det = ok ? "delta K + K delta = inclusion for q <= " + std::to_string(q_cert) +
                               ", p <= " + std::to_string(p_cert) + ", D = " +
                               std::to_string(d_cert) + " (" + std::to_string(ids) +
                               " matrix identities)"
                         : join(fails, "; ");
    out.add("homotopy-" + side_name(side), ok, det);
  }
}

struct LemmaTarget {
  std::string label;
  simplicial::Subcomplex sub;
};

// The verification family: the whole complex, every closed vertex star, and
// every closed edge.
std::vector<LemmaTarget> lemma_targets(const simplicial::SimplicialComplex& x) {
  std::vector<LemmaTarget> out;
  simplicial::VertexTuple empty;
  out.push_back({"X", simplicial::star(x, empty)});
  for (int v = 0; v < x.vertex_count(); ++v) {
    simplicial::VertexTuple u;
    u.entries = {v};
    out.push_back({"St(" + x.label(v) + ")", simplicial::star(x, u)});
  }
  for (simplicial::VertexSet e : x.simplices_of_dimension(1)) {
    auto vs = simplicial::vertex_list(e);
    std::set<simplicial::VertexSet> closure{e, simplicial::VertexSet{1} << vs[0],
                                            simplicial::VertexSet{1} << vs[1]};
    out.push_back(
        {"E(" + x.label(vs[0]) + "," + x.label(vs[1]) + ")", simplicial::Subcomplex(&x, closure)});
  }
  return out;
}

void cmd_verify_lemmas(Workspace& ws, const Options& o, CheckList& out) {
  std::mt19937_64 rng(o.seed);
  const auto& x = ws.complex();
  int d_lemma = std::min(o.D_max, 3);

  {
    bool ok = true;
    std::string detail;
    try {
      const auto& pou = ws.pou();
      detail = "rho_v = p_v t_v^2 with sum rho_v = 1, N = " + std::to_string(pou.N);
    } catch (const std::exception& e) {
      ok = false;
      detail = e.what();
    }
    out.add("partition-of-unity", ok, detail);
  }
  {
    auto res = sullivan::verify_presentation_deg0(ws.pres(0), std::min(o.D_max, 6));
    out.add("deg0-presentation", res.pass, res.detail);
  }

  auto targets = lemma_targets(x);
  for (int q = 0; q <= 1; ++q) {
    long total = 0;
    long configs = 0;
    bool ok = true;
    std::vector<std::string> fails;
    for (const auto& tgt : targets) {
      int y_id = ws.sub_id(tgt.sub);
      if (ws.sub_empty(y_id)) continue;
      std::vector<int> star_ids(static_cast<std::size_t>(x.vertex_count()));
      for (int v = 0; v < x.vertex_count(); ++v) {
        simplicial::VertexTuple u;
        u.entries = {v};
        star_ids[static_cast<std::size_t>(v)] = ws.sub_id(simplicial::star_in(tgt.sub, u));
      }
      const auto& ypres = ws.pres(y_id);
      for (int v = 0; v < x.vertex_count(); ++v) {
        int v_in_y = -1;
        for (int i = 0; i < ypres.nvars(); ++i)
          if (ypres.complex().label(i) == x.label(v)) v_in_y = i;
        auto res = omega::verify_tv_annihilation(
            ypres, ws.pres(star_ids[static_cast<std::size_t>(v)]), v_in_y, q, d_lemma,
            static_cast<int>(o.trials_annihilation), rng);
        total += res.trials;
        configs += 1;
        if (!res.pass) {
          ok = false;
          fails.push_back(tgt.label + ", v = " + x.label(v) + ": " + res.detail);
        }
      }
    }
    std::string det = ok ? "t_v^2 kills ker(res to St v) in " + std::to_string(configs) +
                               " configurations, " + std::to_string(total) + " trials"
                         : join(fails, "; ");
    out.add("tv-annihilation-q" + std::to_string(q), ok, det);
  }

  for (int q = 0; q <= 1; ++q) {
    long total = 0;
    long configs = 0;
    bool ok = true;
    std::vector<std::string> fails;
    for (const auto& tgt : targets) {
      int y_id = ws.sub_id(tgt.sub);
      if (ws.sub_empty(y_id)) continue;
      std::vector<int> star_ids(static_cast<std::size_t>(x.vertex_count()), -1);
      for (int v = 0; v < x.vertex_count(); ++v) {
        simplicial::VertexTuple u;
        u.entries = {v};
        auto s = simplicial::star_in(tgt.sub, u);
        if (!s.empty()) star_ids[static_cast<std::size_t>(v)] = ws.sub_id(s);
      }
      std::vector<const omega::OmegaPresentation*> stars(
          static_cast<std::size_t>(x.vertex_count()), nullptr);
      for (int v = 0; v < x.vertex_count(); ++v)
        if (star_ids[static_cast<std::size_t>(v)] >= 0)
          stars[static_cast<std::size_t>(v)] = &ws.pres(star_ids[static_cast<std::size_t>(v)]);
      auto res = omega::verify_extres(ws.pres(0), ws.pres(y_id), stars, ws.pou(), q, d_lemma,
                                      static_cast<int>(o.trials_extres), rng);
      total += res.trials;
      configs += 1;
      if (!res.pass) {
        ok = false;
        fails.push_back(tgt.label + ": " + res.detail);
      }
    }
    std::string det = ok ? "sum_v rho_v ext(res_St omega) = omega in " + std::to_string(configs) +
                               " configurations, " + std::to_string(total) + " trials"
                         : join(fails, "; ");
    out.add("ext-res-q" + std::to_string(q), ok, det);
  }
}

// The worked triangle-boundary identities: products with the non-face
// monomial vanish, t1^2 t2^2 dt3 is zero although its coefficient is not,
// and the direct per-edge evaluation of that form is zero as well.
void cmd_gomez(Workspace& ws, CheckList& out) {
  const auto& pres = ws.pres(0);
  const int n = 3;
  auto t = [&](int v) { return poly::PolyForm::variable(n, v); };
  auto dt = [&](int v) { return poly::PolyForm::differential(n, v); };
  auto nf = [&](const poly::PolyForm& f) { return pres.normal_form(f); };

  poly::PolyForm m = t(0) * t(1) * t(2);
  out.add("nonface-monomial", nf(m).is_zero(), "t1 t2 t3 = 0 in the presented ring");
  out.add("nonface-differential", nf(m.d()).is_zero(),
          "t2 t3 dt1 + t1 t3 dt2 + t1 t2 dt3 = 0 in degree 1");
  out.add("socle-products",
          nf(t(0) * m).is_zero() && nf(t(1) * m).is_zero() && nf(t(2) * m).is_zero(),
          "t_v * t1 t2 t3 = 0 for every vertex");
  poly::PolyForm f = t(0).pow(2) * t(1).pow(2) * dt(2);
  out.add("hidden-zero", nf(f).is_zero(), "t1^2 t2^2 dt3 = 0 in degree 1");
  out.add("coefficient-nonzero", !nf(t(0).pow(2) * t(1).pow(2)).is_zero(),
          "its coefficient t1^2 t2^2 is nonzero in the ring");

  bool eval_zero = true;
  for (simplicial::VertexSet a : ws.complex().simplices_of_dimension(1)) {
    auto vs = simplicial::vertex_list(a);
    poly::Substitution s;
    s.target_nvars = 1;
    s.t_img.assign(n, poly::PolyForm(1));
    s.t_img[static_cast<std::size_t>(vs[0])] = poly::PolyForm::variable(1, 0);
    s.t_img[static_cast<std::size_t>(vs[1])] =
        poly::PolyForm::one(1) - poly::PolyForm::variable(1, 0);
    s.dt_img.resize(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v)
      s.dt_img[static_cast<std::size_t>(v)] = s.t_img[static_cast<std::size_t>(v)].d();
    eval_zero = eval_zero && poly::substitute(f, s).is_zero();
  }
  out.add("evaluation-zero", eval_zero,
          "direct evaluation of t1^2 t2^2 dt3 on every edge is zero");
}

}  // namespace

RunResult run(const Options& opt) {
  Options o = opt;
  if (o.command != "betti" && o.command != "verify-quasi-iso" && o.command != "verify-lemmas" &&
      o.command != "gomez")
    throw std::invalid_argument("unknown command: " + o.command);
  if (o.side != "omega" && o.side != "sullivan" && o.side != "simplicial" && o.side != "all")
    throw std::invalid_argument("unknown side: " + o.side);
  if (o.q_max < 0 || o.D_max < 0 || o.window < 1 || o.p_max < 0)
    throw std::invalid_argument("q_max, D_max and p_max must be >= 0 and window >= 1");
  if (o.command == "gomez") o.input = "boundary-triangle";
  int d_min = o.D_min < 0 ? o.q_max + 2 : o.D_min;
  if (d_min < o.q_max) throw std::invalid_argument("D_min must be at least q_max");
  if (d_min > o.D_max) throw std::invalid_argument("D_min must not exceed D_max");

  NamedComplex named = load_complex(o.input);
  Workspace ws(named.complex);

  CheckList cl;
  if (o.command == "betti")
    cmd_betti(ws, o, d_min, cl);
  else if (o.command == "verify-quasi-iso")
    cmd_verify_quasi_iso(ws, o, d_min, cl);
  else if (o.command == "verify-lemmas")
    cmd_verify_lemmas(ws, o, cl);
  else
    cmd_gomez(ws, cl);

  ordered_json rep;
  rep["schema"] = kReportSchema;
  rep["engine"] = kEngineVersion;
  rep["command"] = o.command;
  ordered_json cfg;
  cfg["input"] = named.name;
  cfg["q_max"] = o.q_max;
  cfg["D_min"] = d_min;
  cfg["D_max"] = o.D_max;
  cfg["p_max"] = o.p_max;
  cfg["window"] = o.window;
  cfg["seed"] = o.seed;
  cfg["side"] = o.side;
  if (o.command == "verify-lemmas") {
    cfg["trials_annihilation"] = o.trials_annihilation;
    cfg["trials_extres"] = o.trials_extres;
  }
  rep["config"] = cfg;
  rep["complex"] = complex_to_json(named);
  rep["checks"] = cl.checks;
  long n = static_cast<long>(cl.checks.size());
  rep["summary"] = ordered_json{
      {"checks", n}, {"passed", cl.passed}, {"failed", n - cl.passed}, {"pass", cl.pass}};

  RunResult res;
  res.report = std::move(rep);
  res.pass = cl.pass;
  res.summary = std::move(cl.lines);
  return res;
}

}  // namespace derham::driver
