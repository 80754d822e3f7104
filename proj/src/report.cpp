#include "bcov/report.hpp"

namespace bcov {

Json rat_json(const Rat& r) { return rat_str(r); }

Rat rat_from_json(const Json& j, const std::string& field) {
  if (!j.is_string()) throw InputError("field '" + field + "' must be a rational string");
  try {
    return rat_parse(j.get<std::string>());
  } catch (const InputError& e) {
    throw InputError("field '" + field + "': " + e.what());
  }
}

Json interval_json(const QInterval& iv) { return Json::array({rat_json(iv.lo), rat_json(iv.hi)}); }

QInterval interval_from_json(const Json& j, const std::string& field) {
  if (!j.is_array() || j.size() != 2) throw InputError("field '" + field + "' must be [lo, hi]");
  return QInterval{rat_from_json(j[0], field + ".lo"), rat_from_json(j[1], field + ".hi")};
}

PLCovering plcov_from_json(const Json& j) {
  PLCovering cov;
  if (!j.contains("base") || !j["base"].is_array())
    throw InputError("field 'base' missing or not an array");
  const Json& base = j["base"];
  /* accept both one interval ["a","b"] and a list of intervals */
  auto push_base = [&](const Json& b, const std::string& field) {
    if (!b.is_array() || b.size() != 2) throw InputError("field '" + field + "' must be [lo, hi]");
    cov.base.push_back({rat_from_json(b[0], field + ".lo"), rat_from_json(b[1], field + ".hi")});
  };
  if (base.size() == 2 && base[0].is_string())
    push_base(base, "base");
  else
    for (std::size_t i = 0; i < base.size(); ++i)
      push_base(base[i], "base[" + std::to_string(i) + "]");
  if (!j.contains("segments") || !j["segments"].is_array())
    throw InputError("field 'segments' missing or not an array");
  for (std::size_t i = 0; i < j["segments"].size(); ++i) {
    const Json& s = j["segments"][i];
    std::string f = "segments[" + std::to_string(i) + "]";
    if (!s.contains("x") || !s["x"].is_array() || s["x"].size() != 2)
      throw InputError("field '" + f + ".x' must be [lo, hi]");
    cov.segments.push_back({rat_from_json(s["x"][0], f + ".x.lo"),
                            rat_from_json(s["x"][1], f + ".x.hi"),
                            rat_from_json(s.value("slope", Json()), f + ".slope"),
                            rat_from_json(s.value("intercept", Json()), f + ".intercept")});
  }
  return cov;
}

Json plcov_to_json(const PLCovering& cov) {
  Json j;
  j["base"] = Json::array();
  for (const auto& b : cov.base) j["base"].push_back(Json::array({rat_json(b.lo), rat_json(b.hi)}));
  j["segments"] = Json::array();
  for (const auto& s : cov.segments) {
    Json e;
    e["x"] = Json::array({rat_json(s.x_lo), rat_json(s.x_hi)});
    e["slope"] = rat_json(s.slope);
    e["intercept"] = rat_json(s.intercept);
    j["segments"].push_back(e);
  }
  return j;
}

static Json point_json(const PLPoint& p) { return Json::array({rat_json(p.x), rat_json(p.y)}); }

static PLPoint point_from_json(const Json& j, const std::string& field) {
  if (!j.is_array() || j.size() != 2) throw InputError("field '" + field + "' must be [x, y]");
  return {rat_from_json(j[0], field + ".x"), rat_from_json(j[1], field + ".y")};
}

static Json witness_json(const std::optional<BranchWitness>& w) {
  if (!w) return nullptr;
  Json j;
  j["p"] = point_json(w->p);
  j["left"] = w->left;
  j["right"] = w->right;
  j["reason"] = w->reason;
  return j;
}

static std::optional<BranchWitness> witness_from_json(const Json& j, const std::string& field) {
  if (j.is_null()) return std::nullopt;
  BranchWitness w;
  w.p = point_from_json(j.at("p"), field + ".p");
  w.left = j.at("left").get<int>();
  w.right = j.at("right").get<int>();
  w.reason = j.at("reason").get<std::string>();
  return w;
}

Json branch_report_to_json(const BranchReport& rep) {
  Json j;
  j["is_quasi"] = rep.is_quasi;
  j["quasi_witness"] = witness_json(rep.quasi_witness);
  j["is_branched"] = rep.is_branched;
  j["branch_witness"] = witness_json(rep.branch_witness);
  j["d_profile"] = Json::array();
  for (const auto& s : rep.d_profile)
    j["d_profile"].push_back(
        Json{{"lo", rat_json(s.lo)}, {"hi", rat_json(s.hi)}, {"count", s.count}});
  j["B"] = Json::array();
  for (const auto& p : rep.B) j["B"].push_back(point_json(p));
  j["R"] = Json::array();
  for (const auto& x : rep.R) j["R"].push_back(rat_json(x));
  j["C"] = Json::array();
  for (const auto& p : rep.C) j["C"].push_back(point_json(p));
  j["collapse_intervals"] = Json::array();
  for (const auto& iv : rep.collapse_intervals)
    j["collapse_intervals"].push_back(Json::array({rat_json(iv.lo), rat_json(iv.hi)}));
  j["b"] = Json::array();
  for (const auto& ip : rep.b)
    j["b"].push_back(Json{{"p", point_json(ip.p)}, {"index", ip.index}});
  j["component_d"] = Json::array();
  for (const auto& [iv, d] : rep.component_d)
    j["component_d"].push_back(Json{{"lo", rat_json(iv.lo)}, {"hi", rat_json(iv.hi)}, {"d", d}});
  return j;
}

BranchReport branch_report_from_json(const Json& j) {
  BranchReport rep;
  rep.is_quasi = j.at("is_quasi").get<bool>();
  rep.quasi_witness = witness_from_json(j.at("quasi_witness"), "quasi_witness");
  rep.is_branched = j.at("is_branched").get<bool>();
  rep.branch_witness = witness_from_json(j.at("branch_witness"), "branch_witness");
  for (const auto& s : j.at("d_profile"))
    rep.d_profile.push_back({rat_from_json(s.at("lo"), "d_profile.lo"),
                             rat_from_json(s.at("hi"), "d_profile.hi"),
                             s.at("count").get<int>()});
  for (std::size_t i = 0; i < j.at("B").size(); ++i)
    rep.B.push_back(point_from_json(j.at("B")[i], "B"));
  for (const auto& x : j.at("R")) rep.R.push_back(rat_from_json(x, "R"));
  for (std::size_t i = 0; i < j.at("C").size(); ++i)
    rep.C.push_back(point_from_json(j.at("C")[i], "C"));
  for (const auto& iv : j.at("collapse_intervals"))
    rep.collapse_intervals.push_back({rat_from_json(iv[0], "collapse_intervals.lo"),
                                      rat_from_json(iv[1], "collapse_intervals.hi")});
  for (const auto& ip : j.at("b"))
    rep.b.push_back({point_from_json(ip.at("p"), "b.p"), ip.at("index").get<int>()});
  for (const auto& cd : j.at("component_d"))
    rep.component_d.emplace_back(
        BaseInterval{rat_from_json(cd.at("lo"), "component_d.lo"),
                     rat_from_json(cd.at("hi"), "component_d.hi")},
        cd.at("d").get<int>());
  return rep;
}

BezoutAnalysis analyze_point(const SigmaPoint& a, int refine_steps) {
  BezoutAnalysis out;
  auto cert = is_hyperbolic(a);
  if (!cert) return out;
  out.hyperbolic = true;
  out.profile = cert->profile;
  BezFiber fib = fiber(a);
  out.d = fib.d();
  out.index = fib.index();
  out.sheet_total = fib.sheet_total();
  out.collapse = (fib.distinct_roots().size() == 1);
  out.branch = (fib.index() > 1);
  if (fib.all_rational()) {
    out.exact = true;
    for (int i = 0; i < fib.d(); ++i) out.fiber_exact.push_back(fib.point_rational(i));
  } else {
    fib.refine(refine_steps);
    for (int i = 0; i < fib.d(); ++i) out.fiber_iv.push_back(fib.point_intervals(i));
  }
  return out;
}

Json bezout_to_json(const BezoutAnalysis& a) {
  Json j;
  j["hyperbolic"] = a.hyperbolic;
  if (!a.hyperbolic) return j;
  j["profile"] = a.profile;
  j["d"] = a.d;
  j["index"] = a.index;
  j["sheet_total"] = a.sheet_total;
  j["collapse"] = a.collapse;
  j["branch"] = a.branch;
  j["fiber_mode"] = a.exact ? "exact" : "interval";
  j["fiber"] = Json::array();
  if (a.exact)
    for (const auto& pt : a.fiber_exact) {
      Json row = Json::array();
      for (const Rat& v : pt) row.push_back(rat_json(v));
      j["fiber"].push_back(row);
    }
  else
    for (const auto& pt : a.fiber_iv) {
      Json row = Json::array();
      for (const QInterval& v : pt) row.push_back(interval_json(v));
      j["fiber"].push_back(row);
    }
  return j;
}

BezoutAnalysis bezout_from_json(const Json& j) {
  BezoutAnalysis a;
  a.hyperbolic = j.at("hyperbolic").get<bool>();
  if (!a.hyperbolic) return a;
  a.profile = j.at("profile").get<std::vector<int>>();
  a.d = j.at("d").get<int>();
  a.index = j.at("index").get<long>();
  a.sheet_total = j.at("sheet_total").get<long>();
  a.collapse = j.at("collapse").get<bool>();
  a.branch = j.at("branch").get<bool>();
  a.exact = (j.at("fiber_mode").get<std::string>() == "exact");
  for (const auto& row : j.at("fiber")) {
    if (a.exact) {
      std::vector<Rat> pt;
      for (const auto& v : row) pt.push_back(rat_from_json(v, "fiber"));
      a.fiber_exact.push_back(std::move(pt));
    } else {
      std::vector<QInterval> pt;
      for (const auto& v : row) pt.push_back(interval_from_json(v, "fiber"));
      a.fiber_iv.push_back(std::move(pt));
    }
  }
  return a;
}

static FinSpace space_from_matrix(const Json& j, const std::string& field) {
  if (!j.is_array() || j.empty()) throw InputError("field '" + field + "' must be a matrix");
  FinSpace s;
  s.n = static_cast<int>(j.size());
  if (s.n > 31) throw InputError("field '" + field + "': too many points");
  s.up.assign(static_cast<std::size_t>(s.n), 0);
  for (int i = 0; i < s.n; ++i) {
    const Json& row = j[static_cast<std::size_t>(i)];
    if (!row.is_array() || static_cast<int>(row.size()) != s.n)
      throw InputError("field '" + field + "': matrix not square");
    for (int k = 0; k < s.n; ++k)
      if (row[static_cast<std::size_t>(k)].get<int>()) s.up[static_cast<std::size_t>(i)] |= Mask(1) << k;
  }
  if (!s.valid()) throw InputError("field '" + field + "': relation not reflexive-transitive");
  return s;
}

FinMap finmap_from_json(const Json& j) {
  FinMap m;
  m.X = space_from_matrix(j.value("domain", Json()), "domain");
  m.Y = space_from_matrix(j.value("codomain", Json()), "codomain");
  if (!j.contains("map") || !j["map"].is_array() ||
      static_cast<int>(j["map"].size()) != m.X.n)
    throw InputError("field 'map' must list one codomain index per domain point");
  for (const auto& v : j["map"]) {
    int y = v.get<int>();
    if (y < 0 || y >= m.Y.n) throw InputError("field 'map': index out of range");
    m.f.push_back(y);
  }
  return m;
}

Json finmap_to_json(const FinMap& m) {
  Json j;
  auto matrix = [](const FinSpace& s) {
    Json rows = Json::array();
    for (int i = 0; i < s.n; ++i) {
      Json row = Json::array();
      for (int k = 0; k < s.n; ++k) row.push_back(s.leq(i, k) ? 1 : 0);
      rows.push_back(row);
    }
    return rows;
  };
  j["domain"] = matrix(m.X);
  j["codomain"] = matrix(m.Y);
  j["map"] = m.f;
  return j;
}

Json lemma_verdict_to_json(const LemmaVerdict& v) {
  Json j;
  j["lemma"] = v.lemma;
  j["qualifying"] = v.qualifying;
  j["holds"] = v.holds;
  j["counterexample"] = v.counterexample;
  return j;
}

Json fuzz_summary_to_json(const FuzzSummary& s) {
  Json j;
  j["trials"] = s.trials;
  j["continuous"] = s.continuous;
  j["quasi"] = s.quasi;
  j["lemmas"] = Json::object();
  for (const auto& [id, qh] : s.lemma_counts)
    j["lemmas"][id] = Json{{"qualifying", qh.first}, {"holding", qh.second}};
  j["failures"] = s.failures;
  return j;
}

FuzzSummary fuzz_summary_from_json(const Json& j) {
  FuzzSummary s;
  s.trials = j.at("trials").get<long>();
  s.continuous = j.at("continuous").get<long>();
  s.quasi = j.at("quasi").get<long>();
  for (const auto& [id, qh] : j.at("lemmas").items())
    s.lemma_counts[id] = {qh.at("qualifying").get<long>(), qh.at("holding").get<long>()};
  s.failures = j.at("failures").get<std::vector<std::string>>();
  return s;
}

Json make_envelope(const std::string& command, std::optional<std::uint64_t> seed,
                   double elapsed_ms, Json payload) {
  Json j;
  j["tool"] = "bcov";
  j["version"] = "0.1.0";
  j["schema"] = 1;
  j["command"] = command;
  if (seed) j["seed"] = *seed;
  j["elapsed_ms"] = elapsed_ms;
  j["payload"] = std::move(payload);
  return j;
}

}  // namespace bcov
