// Python entry points. Every call returns the same document the command-line
// tool prints under "result", converted to plain dicts and lists.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "bakerforge/report.hpp"

namespace py = pybind11;
using namespace bakerforge;

namespace {

py::object to_python(const Json& j) {
  return py::module_::import("json").attr("loads")(j.dump());
}

std::vector<FieldElem> parse_values(const std::vector<std::string>& text, FieldSpec f) {
  std::vector<FieldElem> v;
  for (const auto& s : text) v.push_back(parse_field_element(s, f));
  return v;
}

std::string join(const std::vector<std::string>& parts) {
  std::string s;
  for (const auto& p : parts) s += (s.empty() ? "" : ",") + p;
  return s;
}

py::object constants(const std::vector<std::string>& alpha, const std::string& field, Precision prec) {
  const AlphaVector a = AlphaVector::parse(join(alpha), FieldSpec::parse(field));
  const AlphaReport rep = analyze_alpha(a, prec);
  Json out = to_json(rep);
  out["S2"] = to_json(solve_S2(rep.base, a.m()));
  return to_python(out);
}

py::object z_of(const std::string& y, double tol, Precision prec) {
  ZQuery q;
  q.y = Interval::from_string(y, prec);
  q.tol = tol;
  q.validate();
  const ZResult z = z_inverse(q);
  Json out = to_json(z);
  out["z2"] = to_json(z_two(q.y));
  return to_python(out);
}

py::object siegel_solve(const std::vector<std::vector<std::string>>& rows, const std::string& field,
                        const std::string& strategy, Precision prec) {
  const FieldSpec f = FieldSpec::parse(field);
  std::vector<std::vector<QuadInt>> coeffs;
  for (const auto& row : rows) {
    std::vector<QuadInt> r;
    for (const auto& e : parse_values(row, f)) {
      if (!is_integral(e)) throw std::invalid_argument("coefficients must be ring integers");
      r.push_back(to_integer(e));
    }
    coeffs.push_back(std::move(r));
  }
  const LinearSystem sys = LinearSystem::make(f, std::move(coeffs));
  const SiegelSolution s =
      solve_small_system(sys, SiegelConstants::for_field(f, prec), parse_strategy(strategy), prec);
  Json out = to_json(s);
  out["verified"] = verify_solution(sys, s.z);
  return to_python(out);
}

py::object pade_build(const std::vector<std::string>& alpha, const std::vector<long>& l,
                      const std::string& field, std::optional<std::vector<long>> nu, Precision prec) {
  const AlphaVector a = AlphaVector::parse(join(alpha), FieldSpec::parse(field));
  const PadeParams params = nu ? PadeParams::make(l, *nu) : default_params(a, l, prec).params;
  const PadeSystem sys = construct_pade(a, params, SolveStrategy::Exhaustive, prec);
  const DerivedFamily fam = derive_family(sys);
  Json out = to_json(sys);
  out["family"] = to_json(fam);
  out["determinant"] = to_json(family_determinant(sys, fam));
  const NumericalForms forms = evaluate_forms(sys, fam, prec);
  out["forms"] = to_json(forms);
  out["raw_bounds"] = to_json(check_raw_bounds(sys, fam, forms));
  return to_python(out);
}

py::object bound(const std::vector<std::string>& alpha, const std::string& log_H, const std::string& field,
                 bool closed_form, Precision prec) {
  const AlphaVector a = AlphaVector::parse(join(alpha), FieldSpec::parse(field));
  const HSpec h = HSpec::from_log(HMode::Theorem, Interval::from_string(log_H, prec));
  return to_python(to_json(closed_form ? corollary22_bound(a, h, prec) : theorem_bound(a, h, prec)));
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Explicit lower bounds for linear forms in exponentials";
  m.attr("SCHEMA") = kSchema;
  m.attr("DEFAULT_PRECISION") = kDefaultPrecision;

  m.def("constants", &constants, py::arg("alpha"), py::arg("field") = "Q",
        py::arg("precision") = kDefaultPrecision);
  m.def("z_of", &z_of, py::arg("y"), py::arg("tol") = 1e-15, py::arg("precision") = kDefaultPrecision);
  m.def("siegel_solve", &siegel_solve, py::arg("rows"), py::arg("field") = "Q",
        py::arg("strategy") = "exhaustive", py::arg("precision") = kDefaultPrecision);
  m.def("pade_build", &pade_build, py::arg("alpha"), py::arg("l"), py::arg("field") = "Q",
        py::arg("nu") = py::none(), py::arg("precision") = kDefaultPrecision);
  m.def("bound", &bound, py::arg("alpha"), py::arg("log_H"), py::arg("field") = "Q",
        py::arg("closed_form") = false, py::arg("precision") = kDefaultPrecision);
  m.def(
      "a_hat",
      [](const std::vector<std::string>& alpha, const std::string& field, Precision prec) {
        return to_python(to_json(corollary23_Ahat(AlphaVector::parse(join(alpha), FieldSpec::parse(field)), prec)));
      },
      py::arg("alpha"), py::arg("field") = "Q", py::arg("precision") = kDefaultPrecision);
  m.def(
      "b_hat",
      [](const std::vector<std::string>& gamma, Precision prec) {
        return to_python(to_json(corollary24_Bhat(parse_values(gamma, FieldSpec::rationals()), prec)));
      },
      py::arg("gamma"), py::arg("precision") = kDefaultPrecision);
  m.def(
      "compare_prior",
      [](const std::vector<std::string>& gamma, Precision prec) {
        return to_python(to_json(compare_prior(parse_values(gamma, FieldSpec::rationals()), prec)));
      },
      py::arg("gamma"), py::arg("precision") = kDefaultPrecision);
  m.def(
      "example",
      [](const std::string& name, long m, const std::string& r_squared, Precision prec) {
        const Preset p = name == "integers" ? Preset::Integers
                         : name == "harmonic" ? Preset::Harmonic
                         : name == "gaussian_disk"
                             ? Preset::GaussianDisk
                             : throw std::invalid_argument("unknown example: " + name);
        return to_python(to_json(example_preset(p, m, mpq_class(r_squared), prec)));
      },
      py::arg("name"), py::arg("m") = 2, py::arg("r_squared") = "2", py::arg("precision") = kDefaultPrecision);
  m.def(
      "check",
      [](const std::vector<std::string>& alpha, long box, const std::string& field, Precision prec) {
        const AlphaVector a = AlphaVector::parse(join(alpha), FieldSpec::parse(field), 1);
        return to_python(to_json(empirical_check(a, box, prec)));
      },
      py::arg("alpha"), py::arg("box") = 3, py::arg("field") = "Q", py::arg("precision") = kDefaultPrecision);

  py::register_exception<FieldError>(m, "FieldError", PyExc_ValueError);
  py::register_exception<DomainError>(m, "DomainError", PyExc_ArithmeticError);
}
