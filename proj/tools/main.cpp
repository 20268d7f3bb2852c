// bakerforge command-line tool.
//
// Exit codes: 0 success with every asserted check passing, 1 a check failed,
// 2 usage or input error.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "bakerforge/report.hpp"
#include "selftest.hpp"

using namespace bakerforge;

namespace {

struct RunConfig {
  Precision precision = kDefaultPrecision;
  std::string format = "json";
  std::string out;
  std::string strategy = "exhaustive";
  std::uint64_t seed = 1;
};

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> parts;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, sep)) {
    if (!item.empty()) parts.push_back(item);
  }
  return parts;
}

std::vector<long> parse_longs(const std::string& text) {
  std::vector<long> v;
  for (const auto& s : split(text, ',')) v.push_back(std::stol(s));
  return v;
}

std::vector<FieldElem> parse_values(const std::string& text, FieldSpec f) {
  std::vector<FieldElem> v;
  for (const auto& s : split(text, ',')) v.push_back(parse_field_element(s, f));
  return v;
}

LinearSystem parse_rows(const std::string& text, FieldSpec f) {
  std::vector<std::vector<QuadInt>> rows;
  for (const auto& row : split(text, ';')) {
    std::vector<QuadInt> r;
    for (const auto& e : parse_values(row, f)) {
      if (!is_integral(e)) throw std::invalid_argument("coefficients must be ring integers");
      r.push_back(to_integer(e));
    }
    rows.push_back(std::move(r));
  }
  return LinearSystem::make(f, std::move(rows));
}

// "sqrt(2)", "3/2" or a decimal; returns r^2 exactly.
mpq_class parse_r_squared(const std::string& text) {
  if (text.rfind("sqrt(", 0) == 0 && text.back() == ')') {
    return mpq_class(text.substr(5, text.size() - 6));
  }
  mpq_class r;
  const auto dot = text.find('.');
  if (dot == std::string::npos) {
    r = mpq_class(text);
  } else {
    std::string digits = text.substr(0, dot) + text.substr(dot + 1);
    mpz_class den = 1;
    for (std::size_t i = dot + 1; i < text.size(); ++i) den *= 10;
    r = mpq_class(mpz_class(digits), den);
  }
  r.canonicalize();
  return r * r;
}

bool no_fail(std::initializer_list<Check> cs) {
  for (Check c : cs)
    if (c == Check::Fails) return false;
  return true;
}

void emit(const RunConfig& cfg, const Json& j) {
  const std::string text = render(j, parse_format(cfg.format));
  if (cfg.out.empty()) {
    std::cout << text;
  } else {
    std::ofstream os(cfg.out);
    if (!os) throw std::runtime_error("cannot write " + cfg.out);
    os << text;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Explicit lower bounds for linear forms in exponentials"};
  app.require_subcommand(1);
  app.fallthrough();

  RunConfig cfg;
  app.add_option("--precision", cfg.precision, "working precision in bits")
      ->check(CLI::Range(32, static_cast<int>(kPrecisionCap)));
  app.add_option("--format", cfg.format, "json, csv or text")
      ->check(CLI::IsMember({"json", "csv", "text"}));
  app.add_option("--out", cfg.out, "output file (default: standard output)");
  app.add_option("--seed", cfg.seed, "seed for corpus commands");
  app.add_option("--strategy", cfg.strategy, "siegel strategy: exhaustive or kernel")
      ->check(CLI::IsMember({"exhaustive", "kernel"}));

  std::string alpha_text, field_text = "Q", rows_text, l_text, nu_text, H_text, log_H_text,
              loglog_H_text, y_text, gamma_text, r_text = "sqrt(2)", precs_text = "64,128,256";
  long m_preset = 2, box = 3;
  double tol = 1e-15;

  auto add_alpha = [&](CLI::App* c, bool required = true) {
    auto* o = c->add_option("--alpha", alpha_text, "comma-separated points, alpha_0 = 0 first");
    if (required) o->required();
    c->add_option("--field", field_text, "Q, Q(i), Q(sqrt(-3)), D=7, ...");
  };

  auto* constants = app.add_subcommand("constants", "g-tuple, theorem constants and thresholds");
  add_alpha(constants);

  auto* zof = app.add_subcommand("z-of", "inverse of y = z log z");
  zof->add_option("--y", y_text, "y >= e")->required();
  zof->add_option("--tol", tol, "relative bracket width");

  auto* siegel = app.add_subcommand("siegel", "small solutions of linear systems");
  siegel->require_subcommand(1);
  auto* siegel_solve = siegel->add_subcommand("solve", "solve one system");
  siegel_solve->add_option("--rows", rows_text, "rows separated by ';', entries by ','")->required();
  siegel_solve->add_option("--field", field_text, "coefficient field");

  auto* pade = app.add_subcommand("pade", "Hermite-Pade approximations");
  pade->require_subcommand(1);
  auto* pade_build = pade->add_subcommand("build", "construct A_{0,j} and the derived family");
  add_alpha(pade_build);
  pade_build->add_option("--l", l_text, "l_1..l_m")->required();
  pade_build->add_option("--nu", nu_text, "nu_1..nu_m (default: chosen from g2 and L)");

  auto* forms = app.add_subcommand("forms", "numerical linear forms");
  forms->require_subcommand(1);
  auto* forms_eval = forms->add_subcommand("eval", "enclose the forms by two routes");
  add_alpha(forms_eval);
  forms_eval->add_option("--l", l_text, "l_1..l_m")->required();
  forms_eval->add_option("--nu", nu_text, "nu_1..nu_m");
  forms_eval->add_option("--precisions", precs_text, "precision ladder for the residual");

  auto* bound = app.add_subcommand("bound", "lower bounds and their constants");
  bound->require_subcommand(1);
  auto add_H = [&](CLI::App* c) {
    auto* g = c->add_option_group("height");
    g->add_option("--H", H_text, "H_1..H_m");
    g->add_option("--log-H", log_H_text, "log H directly");
    g->add_option("--loglog-H", loglog_H_text, "log log H directly");
    g->require_option(1);
  };
  auto* bound_thm = bound->add_subcommand("thm", "full bound with eps(H) = xi(z, H)");
  add_alpha(bound_thm);
  add_H(bound_thm);
  auto* bound_cor22 = bound->add_subcommand("cor22", "closed form with rho = 1.024");
  add_alpha(bound_cor22);
  add_H(bound_cor22);
  auto* bound_cor23 = bound->add_subcommand("cor23", "A-hat and H-hat_0");
  add_alpha(bound_cor23);
  auto* bound_cor24 = bound->add_subcommand("cor24", "B-hat and M0 for rationals gamma_0..gamma_m");
  bound_cor24->add_option("--gamma,--alpha", gamma_text, "distinct rationals")->required();

  auto* compare = app.add_subcommand("compare", "comparison with older explicit results (over Q)");
  compare->add_option("--alpha,--gamma", gamma_text, "distinct rationals")->required();

  auto* example = app.add_subcommand("example", "worked example families");
  example->require_subcommand(1);
  auto* ex_int = example->add_subcommand("integers", "alpha_j = j");
  ex_int->add_option("--m", m_preset)->check(CLI::Range(2, 64));
  auto* ex_harm = example->add_subcommand("harmonic", "alpha_j = 1/j");
  ex_harm->add_option("--m", m_preset)->check(CLI::Range(2, 400));
  auto* ex_disk = example->add_subcommand("gaussian_disk", "Gaussian integers with |alpha| <= r");
  ex_disk->add_option("--r", r_text, "radius: sqrt(N), a rational or a decimal");

  auto* check = app.add_subcommand("check", "observed |sum beta_j e^alpha_j| over a box of beta");
  add_alpha(check);
  check->add_option("--box", box, "max |beta_j|")->check(CLI::PositiveNumber);

  auto* selftest = app.add_subcommand("selftest", "property suite on a seeded corpus");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  const Precision prec = cfg.precision;
  const FieldSpec field = [&] {
    try {
      return FieldSpec::parse(field_text);
    } catch (const std::exception& e) {
      std::cerr << "error: " << e.what() << "\n";
      std::exit(2);
    }
  }();

  auto height = [&](std::size_t m) {
    if (!H_text.empty()) {
      std::vector<Interval> H;
      for (const auto& s : split(H_text, ',')) H.push_back(Interval::from_string(s, prec));
      return HSpec::theorem(H, m);
    }
    if (!log_H_text.empty()) return HSpec::from_log(HMode::Theorem, Interval::from_string(log_H_text, prec));
    return HSpec::from_log(HMode::Theorem, exp(Interval::from_string(loglog_H_text, prec)));
  };

  try {
    Json out;
    bool ok = true;
    std::string name;

    if (*constants) {
      name = "constants";
      const AlphaVector a = AlphaVector::parse(alpha_text, field);
      const AlphaReport rep = analyze_alpha(a, prec);
      const S2Result s2 = solve_S2(rep.base, a.m());
      out = to_json(rep);
      out["S2"] = to_json(s2);
      ok = no_fail({rep.g.chain, rep.e1_check, rep.base_check, s2.gamma_dominates});
    } else if (*zof) {
      name = "z-of";
      ZQuery q;
      q.y = Interval::from_string(y_text, prec);
      q.tol = tol;
      q.validate();
      const ZResult z = z_inverse(q);
      out = to_json(z);
      out["y"] = to_json(q.y);
      out["z_log_z"] = to_json(z.z * log(z.z));
      Json it = Json::array();
      for (const auto& v : z_iterates(q.y, 4)) it.push_back(to_json(v));
      out["iterates"] = it;
      out["z2"] = to_json(z_two(q.y));
      ok = z.converged;
    } else if (*siegel_solve) {
      name = "siegel solve";
      const LinearSystem sys = parse_rows(rows_text, field);
      const SiegelConstants k = SiegelConstants::for_field(field, prec);
      const SiegelSolution s = solve_small_system(sys, k, parse_strategy(cfg.strategy), prec);
      out = to_json(s);
      out["verified"] = verify_solution(sys, s.z);
      out["constants"] = {{"s", to_json(k.s)}, {"t", to_json(k.t)}, {"note", k.note}};
      ok = out["verified"].get<bool>() && s.bound_met;
    } else if (*pade_build || *forms_eval) {
      const AlphaVector a = AlphaVector::parse(alpha_text, field);
      const std::vector<long> l = parse_longs(l_text);
      PadeParams params;
      std::optional<NuChoice> choice;
      if (nu_text.empty()) {
        DefaultParams d = default_params(a, l, prec);
        params = d.params;
        choice = d.choice;
      } else {
        params = PadeParams::make(l, parse_longs(nu_text));
      }
      const PadeSystem sys = construct_pade(a, params, parse_strategy(cfg.strategy), prec);
      const DerivedFamily fam = derive_family(sys);
      if (*pade_build) {
        name = "pade build";
        const DeterminantCheck det = family_determinant(sys, fam);
        out = to_json(sys);
        out["family"] = to_json(fam);
        out["determinant"] = to_json(det);
        if (choice) out["nu_choice"] = to_json(*choice);
        ok = sys.bound_met && no_fail({sys.order_ok, sys.integral_ok, sys.nonzero_ok, sys.truncation_ok,
                                       fam.ineq_ok, det.factor_ok, det.leading_ok});
      } else {
        name = "forms eval";
        std::vector<Precision> ladder;
        for (long p : parse_longs(precs_text)) ladder.push_back(p);
        const NumericalForms f = evaluate_forms(sys, fam, prec);
        const RawBoundReport raw = check_raw_bounds(sys, fam, f);
        const AlphaReport rep = analyze_alpha(a, prec);
        const QRReport qr = check_qr_bounds(sys, f, rep.base, rep.gh.log_gamma);
        const ConvergenceReport conv = residual_convergence(sys, fam, ladder);
        out = to_json(f);
        out["raw_bounds"] = to_json(raw);
        out["qr"] = to_json(qr);
        out["convergence"] = to_json(conv);
        ok = no_fail({f.integral, f.det_nonzero, f.routes_agree, raw.all, raw.index_ok, conv.halves});
      }
    } else if (*bound_thm || *bound_cor22) {
      const AlphaVector a = AlphaVector::parse(alpha_text, field);
      const HSpec h = height(a.m());
      if (*bound_thm) {
        name = "bound thm";
        const BoundReport b = theorem_bound(a, h, prec);
        out = to_json(b);
        ok = no_fail({b.identity});
      } else {
        name = "bound cor22";
        const BoundReport b = corollary22_bound(a, h, prec);
        out = to_json(b);
        ok = no_fail({b.identity, b.weaker});
      }
    } else if (*bound_cor23) {
      name = "bound cor23";
      const Cor23Report r = corollary23_Ahat(AlphaVector::parse(alpha_text, field), prec);
      out = to_json(r);
      out["constants"] = to_json(r.base);
      ok = no_fail({r.side_condition});
    } else if (*bound_cor24) {
      name = "bound cor24";
      const Cor24Report r = corollary24_Bhat(parse_values(gamma_text, FieldSpec::rationals()), prec);
      out = to_json(r);
      ok = no_fail({r.cap_ok, r.threshold_ok, r.eta_bounds, r.mean_value});
    } else if (*compare) {
      name = "compare";
      const ComparisonReport c = compare_prior(parse_values(gamma_text, FieldSpec::rationals()), prec);
      out = to_json(c);
      ok = no_fail({c.simple_le_sankilampi});
    } else if (*ex_int || *ex_harm || *ex_disk) {
      const Preset p = *ex_int ? Preset::Integers : *ex_harm ? Preset::Harmonic : Preset::GaussianDisk;
      name = std::string("example ") + preset_name(p);
      const PresetReport r = example_preset(p, m_preset, parse_r_squared(r_text), prec);
      out = to_json(r);
      ok = r.all != Check::Fails;
    } else if (*check) {
      name = "check";
      const AlphaVector a = AlphaVector::parse(alpha_text, field, 1);
      const EmpiricalTable t = empirical_check(a, box, prec);
      out = to_json(t);
      ok = t.violations == 0 && t.flagged == 0;
    } else if (*selftest) {
      name = "selftest";
      out = run_selftest(cfg.seed, prec);
      ok = out["ok"].get<bool>();
    }

    emit(cfg, envelope(name, prec, ok, std::move(out)));
    return ok ? 0 : 1;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
