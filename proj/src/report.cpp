#include "bakerforge/report.hpp"

#include <sstream>
#include <stdexcept>

namespace bakerforge {

Format parse_format(const std::string& name) {
  if (name == "json") return Format::Json;
  if (name == "csv") return Format::Csv;
  if (name == "text") return Format::Text;
  throw std::invalid_argument("unknown format: " + name);
}

Json to_json(const Interval& x, int digits) {
  return Json::array({x.lo_string(digits), x.hi_string(digits)});
}

Json to_json(const ComplexInterval& z, int digits) {
  return Json{{"mid_re", z.mid_re().lo_string(digits)},
              {"mid_im", z.mid_im().lo_string(digits)},
              {"rad", z.radius().hi_string(6)}};
}

Json to_json(Check c) { return check_name(c); }
Json to_json(const QuadInt& z) { return to_string(z); }
Json to_json(const FieldElem& z) { return to_string(z); }

namespace {

template <class T>
Json list(const std::vector<T>& v) {
  Json a = Json::array();
  for (const auto& x : v) a.push_back(to_json(x));
  return a;
}

Json longs(const std::vector<long>& v) { return Json(v); }

Json components(const std::vector<Component>& cs) {
  Json o = Json::object();
  for (const auto& c : cs) o[c.name] = to_json(c.value);
  return o;
}

Json poly_json(const Poly& p) {
  Json a = Json::array();
  for (const auto& c : p.coeffs()) a.push_back(to_string(c));
  return a;
}

}  // namespace

Json to_json(const GTuple& g) {
  return Json{{"g1", g.g1.get_str()},
              {"g2", to_json(g.g2)},
              {"g2_exact", g.g2_exact.to_string()},
              {"g3", to_json(g.g3)},
              {"g3_exact", g.g3_exact.to_string()},
              {"g4", to_json(g.g4)},
              {"g4_exact", g.g4_exact.to_string()},
              {"chain", to_json(g.chain)},
              {"failures", g.failures}};
}

Json to_json(const AlphaReport& rep) {
  return Json{
      {"alpha", rep.alpha.to_string()},
      {"field", rep.alpha.field.to_string()},
      {"m", rep.alpha.m()},
      {"g", to_json(rep.g)},
      {"base", {{"b0", to_json(rep.base.b0)}, {"e0", to_json(rep.base.e0)},
                {"b1", to_json(rep.base.b1)}, {"e1", to_json(rep.base.e1)}}},
      {"theorem_constants", {{"A", to_json(rep.thm.A)}, {"B", to_json(rep.thm.B)},
                             {"C", to_json(rep.thm.C)}, {"D", to_json(rep.thm.D)},
                             {"E", to_json(rep.thm.E)}}},
      {"log_gamma", to_json(rep.gh.log_gamma)},
      {"log_H0", to_json(rep.gh.log_H0)},
      {"loglog_H0", to_json(log(rep.gh.log_H0))},
      {"siegel_branch", rep.gh.siegel_branch},
      {"checks", {{"e1_inequality", to_json(rep.e1_check)}, {"base_bounds", to_json(rep.base_check)}}}};
}

Json to_json(const S2Result& s) {
  return Json{{"log_S2", to_json(s.log_S2)},
              {"f_at_S2", to_json(s.f_at_S2)},
              {"f_at_double_S2", to_json(s.f_at_double_S2)},
              {"gamma_dominates", to_json(s.gamma_dominates)},
              {"bracketed", s.bracketed},
              {"iterations", s.iterations}};
}

Json to_json(const ZResult& z) {
  return Json{{"z", to_json(z.z)}, {"converged", z.converged}, {"iterations", z.iterations}};
}

Json to_json(const EpsilonChain& c) {
  Json j{{"z", to_json(c.z)},
         {"z2", to_json(c.z2)},
         {"weak", to_json(c.weak)},
         {"z_below_z2", to_json(c.z_below_z2)},
         {"z2_below_middle", to_json(c.z2_below_middle)},
         {"middle_below_weak", to_json(c.middle_below_weak)},
         {"z2_below_weak", to_json(c.z2_below_weak)},
         {"hypothesis_met", c.hypothesis_met}};
  if (c.middle) j["middle"] = to_json(*c.middle);
  return j;
}

Json to_json(const SiegelSolution& s) {
  return Json{{"z", list(s.z)},
              {"max_norm", s.max_norm.get_str()},
              {"max_modulus", to_json(s.max_modulus)},
              {"bound", to_json(s.bound)},
              {"bound_met", s.bound_met},
              {"optimal", s.optimal},
              {"nodes", s.nodes},
              {"strategy", strategy_name(s.strategy_used)}};
}

Json to_json(const NuChoice& c) {
  return Json{{"nu", longs(c.nu)},
              {"clamped", c.clamped},
              {"theta", to_json(c.theta)},
              {"window", to_json(c.lmml)},
              {"ratio", to_json(c.frac_mlm)},
              {"quadratic_ratio", to_json(c.frac_m2lm)}};
}

Json to_json(const PadeSystem& sys) {
  Json A0 = Json::array();
  for (const auto& p : sys.A0) A0.push_back(poly_json(p));
  return Json{{"alpha", sys.alpha.to_string()},
              {"field", sys.alpha.field.to_string()},
              {"l", longs(sys.params.l)},
              {"nu", longs(sys.params.nu)},
              {"L", sys.L()},
              {"M", sys.M()},
              {"c", list(sys.c)},
              {"A0", A0},
              {"solution", to_json(sys.solution)},
              {"coeff_bound", to_json(sys.coeff_bound)},
              {"bound_met", sys.bound_met},
              {"order", longs(sys.order)},
              {"checks", {{"order", to_json(sys.order_ok)},
                          {"integral", to_json(sys.integral_ok)},
                          {"nonzero", to_json(sys.nonzero_ok)},
                          {"truncation", to_json(sys.truncation_ok)}}}};
}

Json to_json(const DerivedFamily& fam) {
  Json values = Json::array();
  for (const auto& row : fam.values) values.push_back(list(row));
  return Json{{"k_max", fam.k_max},
              {"values_at_1", values},
              {"selected", fam.selected},
              {"b", fam.b},
              {"degree_order_bookkeeping", to_json(fam.ineq_ok)},
              {"failures", fam.failures}};
}

Json to_json(const DeterminantCheck& d) {
  return Json{{"order", d.order},
              {"degree", d.degree},
              {"order_floor", d.order_floor},
              {"degree_cap", d.h_degree_cap},
              {"factorization", to_json(d.factor_ok)},
              {"predicted_leading", to_string(d.predicted_leading)},
              {"leading", to_json(d.leading_ok)}};
}

Json to_json(const NumericalForms& f) {
  Json B = Json::array();
  for (const auto& row : f.B_exact) B.push_back(list(row));
  Json Ld = Json::array(), Ls = Json::array();
  for (const auto& row : f.L_direct) Ld.push_back(list(row));
  for (const auto& row : f.L_series) Ls.push_back(list(row));
  Json nonint = Json::array();
  for (const auto& [k, j] : f.nonintegral) nonint.push_back({k, j});
  return Json{{"precision", f.precision},
              {"selected", f.selected},
              {"B", B},
              {"integral", to_json(f.integral)},
              {"nonintegral", nonint},
              {"det_B", to_string(f.det_B)},
              {"det_nonzero", to_json(f.det_nonzero)},
              {"L_direct", Ld},
              {"L_series", Ls},
              {"routes_agree", to_json(f.routes_agree)}};
}

Json to_json(const RawBoundReport& r) {
  Json rows = Json::array();
  for (const auto& row : r.rows) {
    rows.push_back({{"k", row.k},
                    {"s", row.s},
                    {"B0_abs", to_json(row.B0_abs, 10)},
                    {"B0_cap", to_json(row.B0_cap, 10)},
                    {"L_abs", list(row.L_abs)},
                    {"L_cap", list(row.L_cap)},
                    {"V", longs(row.V)},
                    {"V_clamped", row.V_clamped},
                    {"ok", to_json(row.ok)}});
  }
  return Json{{"rows", rows},
              {"index_cap", r.index_cap},
              {"index_ok", to_json(r.index_ok)},
              {"max_c", to_json(r.max_c)},
              {"coeff_bound", to_json(r.coeff_bound)},
              {"all", to_json(r.all)}};
}

Json to_json(const QRReport& r) {
  Json Lw = Json::array();
  for (const auto& row : r.L_within) Lw.push_back(list(row));
  return Json{{"q", to_json(r.q)},
              {"minus_r", list(r.minus_r)},
              {"B_within", list(r.B_within)},
              {"L_within", Lw},
              {"hypothesis_met", r.hypothesis_met}};
}

Json to_json(const ConvergenceReport& r) {
  Json res = Json::array();
  for (const auto& x : r.residuals) res.push_back(x.hi_string(6));
  return Json{{"precisions", r.precisions}, {"residuals", res}, {"halves", to_json(r.halves)}};
}

Json to_json(const BoundReport& b) {
  return Json{{"log_lower_bound", to_json(b.log_lower_bound)},
              {"epsilon", to_json(b.epsilon)},
              {"log_H", to_json(b.log_H)},
              {"log_H0", to_json(b.log_H0)},
              {"hypothesis_met", b.hypothesis_met},
              {"components", components(b.components)},
              {"provenance", b.provenance},
              {"identity", to_json(b.identity)},
              {"weaker", to_json(b.weaker)}};
}

Json to_json(const Cor23Report& r) {
  Json j{{"case", ahat_case_name(r.which)},
         {"Ahat", to_json(r.Ahat)},
         {"Ahat_chain", to_json(r.Ahat_chain)},
         {"log_H0", to_json(r.log_H0)},
         {"log_Hhat0", to_json(r.log_Hhat0)},
         {"loglog_Hhat0", to_json(r.loglog_Hhat0)},
         {"side_premise", to_json(r.side_premise)},
         {"side_condition", to_json(r.side_condition)},
         {"provenance",
          {"Ahat <= 1 + (3.036 + 7.084m) sqrt(log g2) + 0.633 sqrt(m) + 0.580 sqrt(m) sqrt(log(1+g3)) "
           "when g1 <= g2 g4",
           "Ahat <= 1 + (3.036 + 7.084m) sqrt(log g2) + 0.633 sqrt(m) + (0.290 + 0.410 sqrt(m)) "
           "sqrt(log(g1(1+g3))) when g1 > g2 g4",
           "Hhat0 = (2m)^-m H0"}}};
  if (r.direct_computed) j["Ahat_direct"] = to_json(r.Ahat_direct);
  return j;
}

Json to_json(const Cor24Report& r) {
  Json j{{"gamma", list(r.gamma)},
         {"eta", r.eta.to_string()},
         {"Ahat_eta", to_json(r.ahat_eta)},
         {"g1", r.g1_gamma.get_str()},
         {"g3", r.g3_gamma.get_str()},
         {"X", to_json(r.X)},
         {"Bhat", to_json(r.Bhat)},
         {"c_m", r.c_m},
         {"cap", to_json(r.cap)},
         {"cap_ok", to_json(r.cap_ok)},
         {"loglog_M0", to_json(r.loglog_M0)},
         {"loglog_M0_cap", to_json(r.loglog_M0_cap)},
         {"threshold_ok", to_json(r.threshold_ok)},
         {"eta_bounds", to_json(r.eta_bounds)},
         {"mean_value", to_json(r.mean_value)},
         {"provenance",
          {"Bhat(gamma) = 1 + m Ahat(gamma - gamma_0)", "Bhat <= c_m m^2 sqrt(log(g1(1+g3))), c_2 = 13, c_m = 12",
           "log M0 = 96 m^2 X exp(192 m^2 X), X = log(g1(1+g3))"}}};
  if (r.m2_case) j["m2_case"] = r.m2_case;
  return j;
}

namespace {

Json term(const PriorTerm& t) {
  return Json{{"value", to_json(t.value)}, {"loglog_threshold", to_json(t.loglog_threshold)}};
}

}  // namespace

Json to_json(const ComparisonReport& c) {
  return Json{{"new", {{"Ahat", term(c.ours_A)}, {"Ahat_simplified", term(c.ours_A_simple)},
                       {"Bhat", term(c.ours_B)}}},
              {"sankilampi", {{"Ahat", term(c.sankilampi_A)}}},
              {"mahler", {{"Bhat", term(c.mahler_B)}}},
              {"Y", to_json(c.Y)},
              {"dominance", {{"simplified_le_sankilampi", to_json(c.simple_le_sankilampi)},
                             {"case_le_sankilampi", to_json(c.case_le_sankilampi)},
                             {"case_le_simplified", to_json(c.case_le_simple)},
                             {"Bhat_le_mahler", to_json(c.B_le_mahler)},
                             {"threshold_le_mahler", to_json(c.B_threshold_le_mahler)}}},
              {"provenance",
               {"Sankilampi: Ahat = 16m^2 + m log(2m) + 39m + 12 + (8 + 4/m + 1/(3m^2)) log(2 g1 g3~)",
                "Sankilampi: log Hhat0 = exp((16m^2 + 36m + m log(2m) + 8 log(2 g1 g3~))^2)",
                "Mahler: Bhat = 12 (m+1)^3 sqrt(log(g1(1+g3))), log M0 = 16(m+1)^4 X exp(16(m+1)^4 X)",
                "simplified: Ahat <= sqrt(m) + (4 + sqrt(m) + 8m) sqrt(log(2 g1 g3~)), "
                "log Hhat0 = 56 m^2 Y exp(111 m^2 Y)"}}};
}

Json to_json(const PresetReport& p) {
  Json heads = Json::array();
  for (const auto& h : p.headlines) {
    heads.push_back({{"name", h.name},
                     {"computed", to_json(h.computed, 10)},
                     {"relation", h.relation},
                     {"target", h.target},
                     {"tolerance", h.tolerance},
                     {"relative", h.relative},
                     {"ok", to_json(h.ok)}});
  }
  Json checks = Json::object();
  for (const auto& [name, c] : p.checks) checks[name] = to_json(c);
  Json j{{"preset", preset_name(p.preset)},
         {"m", p.m},
         {"alpha", p.alpha.to_string()},
         {"field", p.alpha.field.to_string()},
         {"constants", to_json(p.cor23.base)},
         {"corollary_Ahat", to_json(p.cor23)},
         {"formulas", components(p.formulas)},
         {"headlines", heads},
         {"checks", checks},
         {"all", to_json(p.all)}};
  if (p.cor24) j["corollary_Bhat"] = to_json(*p.cor24);
  if (p.prior) j["comparison"] = to_json(*p.prior);
  if (p.preset == Preset::GaussianDisk) {
    j["r_squared"] = p.r_squared.get_str();
    j["count"] = p.count;
  }
  if (p.preset == Preset::Harmonic) j["lcm"] = p.lcm.get_str();
  return j;
}

Json to_json(const EmpiricalTable& t) {
  Json rows = Json::array();
  for (const auto& r : t.rows) {
    Json row{{"beta", list(r.beta)},
             {"value", to_json(r.value, 12)},
             {"abs", to_json(r.abs_value, 12)},
             {"precision", r.precision},
             {"nonzero", r.nonzero},
             {"hypothesis_met", r.hypothesis_met},
             {"violation", r.violation}};
    if (r.log_bound) row["log_bound"] = to_json(*r.log_bound, 12);
    rows.push_back(std::move(row));
  }
  Json j{{"alpha", t.alpha.to_string()},
         {"field", t.alpha.field.to_string()},
         {"box", t.box},
         {"candidates", t.candidates},
         {"flagged", t.flagged},
         {"violations", t.violations},
         {"all_nonzero", to_json(t.all_nonzero)},
         {"rows", rows}};
  if (t.min_row) j["min_row"] = *t.min_row;
  return j;
}

Json envelope(const std::string& command, Precision prec, bool ok, Json result) {
  return Json{{"schema", kSchema},
              {"command", command},
              {"precision", prec},
              {"ok", ok},
              {"result", std::move(result)}};
}

namespace {

void flatten(const Json& j, const std::string& path, std::vector<std::pair<std::string, std::string>>& out) {
  if (j.is_object()) {
    for (auto it = j.begin(); it != j.end(); ++it) {
      flatten(it.value(), path.empty() ? it.key() : path + "." + it.key(), out);
    }
  } else if (j.is_array()) {
    // an interval pair stays on one line
    auto numeric = [](const Json& x) {
      if (!x.is_string()) return false;
      const auto& t = x.get_ref<const std::string&>();
      return !t.empty() && t.find(' ') == std::string::npos &&
             std::string("+-0123456789").find(t[0]) != std::string::npos;
    };
    if (j.size() == 2 && numeric(j[0]) && numeric(j[1])) {
      out.emplace_back(path, "[" + j[0].get<std::string>() + ", " + j[1].get<std::string>() + "]");
      return;
    }
    for (std::size_t i = 0; i < j.size(); ++i) flatten(j[i], path + "." + std::to_string(i), out);
  } else if (j.is_string()) {
    out.emplace_back(path, j.get<std::string>());
  } else {
    out.emplace_back(path, j.dump());
  }
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char c : s) {
    if (c == '"') q += '"';
    q += c;
  }
  return q + "\"";
}

}  // namespace

std::string to_csv(const Json& j) {
  std::vector<std::pair<std::string, std::string>> rows;
  flatten(j, "", rows);
  std::ostringstream os;
  os << "key,value\n";
  for (const auto& [k, v] : rows) os << csv_field(k) << ',' << csv_field(v) << '\n';
  return os.str();
}

std::string to_text(const Json& j) {
  std::vector<std::pair<std::string, std::string>> rows;
  flatten(j, "", rows);
  std::ostringstream os;
  for (const auto& [k, v] : rows) os << k << ": " << v << '\n';
  return os.str();
}

std::string render(const Json& j, Format f) {
  switch (f) {
    case Format::Json: return j.dump(2) + "\n";
    case Format::Csv: return to_csv(j);
    case Format::Text: return to_text(j);
  }
  return {};
}

}  // namespace bakerforge
