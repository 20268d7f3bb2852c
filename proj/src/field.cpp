#include "bakerforge/field.hpp"

#include <algorithm>
#include <cctype>
#include <regex>

namespace bakerforge {

namespace {

bool squarefree(long n) {
  for (long p = 2; p * p <= n; ++p) {
    if (n % (p * p) == 0) return false;
  }
  return true;
}

std::string strip_spaces_lower(const std::string& text) {
  std::string out;
  for (char ch : text) {
    if (!std::isspace(static_cast<unsigned char>(ch))) {
      out.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(ch))));
    }
  }
  return out;
}

std::string coeff_prefix(const mpq_class& c, bool first) {
  std::string s;
  if (c < 0) {
    s = "-";
  } else if (!first) {
    s = "+";
  }
  mpq_class mag = abs(c);
  if (mag != 1) s += mag.get_str();
  return s;
}

template <class T>
std::string quad_to_string(const Quad<T>& z) {
  if (z.b == 0) return mpq_class(z.a).get_str();
  std::string sym;
  if (z.field.basis() == Basis::HalfInteger) {
    sym = "w";
  } else {
    sym = z.field.D == 1 ? "i" : "s";
  }
  std::string out;
  if (z.a != 0) out = mpq_class(z.a).get_str();
  out += coeff_prefix(mpq_class(z.b), z.a == 0) + sym;
  return out;
}

}  // namespace

FieldSpec FieldSpec::imaginary_quadratic(long D) {
  if (D <= 0) throw FieldError("D must be positive, got " + std::to_string(D));
  if (!squarefree(D)) throw FieldError("D must be squarefree, got " + std::to_string(D));
  FieldSpec f;
  f.kind = FieldKind::ImaginaryQuadratic;
  f.D = D;
  return f;
}

FieldSpec FieldSpec::parse(const std::string& text) {
  const std::string s = strip_spaces_lower(text);
  if (s == "q" || s == "qq" || s == "rationals" || s == "rational") return rationals();
  if (s == "q(i)" || s == "gaussian" || s == "z[i]") return imaginary_quadratic(1);

  static const std::regex number(R"([+-]?\d+)");
  std::smatch m;
  if (!std::regex_search(s, m, number)) throw FieldError("cannot parse field: " + text);
  long n = std::stol(m.str());
  const bool has_sqrt = s.find("sqrt") != std::string::npos;
  if (n < 0) return imaginary_quadratic(-n);
  if (has_sqrt) throw FieldError("real quadratic fields are not supported: " + text);
  return imaginary_quadratic(n);
}

std::string FieldSpec::to_string() const {
  if (is_rational()) return "Q";
  return "Q(sqrt(-" + std::to_string(D) + "))";
}

std::string FieldSpec::basis_name() const {
  return basis() == Basis::HalfInteger ? "half_integer" : "1_and_sqrt";
}

QuadInt qi_arith(const QuadInt& lhs, const QuadInt& rhs, ArithOp op) {
  if (lhs.field.basis() != rhs.field.basis() || lhs.field != rhs.field) {
    throw FieldError("basis mismatch");
  }
  switch (op) {
    case ArithOp::Add: return lhs + rhs;
    case ArithOp::Sub: return lhs - rhs;
    case ArithOp::Mul: return lhs * rhs;
  }
  throw FieldError("unknown operation");
}

Interval qi_abs(const QuadInt& z, Precision prec) {
  return sqrt(Interval(z.norm(), prec));
}

Interval fe_abs(const FieldElem& z, Precision prec) {
  return sqrt(Interval(z.norm(), prec));
}

FieldElem to_field(const QuadInt& z) {
  return FieldElem(mpq_class(z.a), mpq_class(z.b), z.field);
}

FieldElem inverse(const FieldElem& z) {
  if (z.is_zero()) throw DomainError("inverse of zero");
  const mpq_class n = z.norm();
  FieldElem c = z.conj();
  c.a /= n;
  c.b /= n;
  return c;
}

FieldElem operator/(const FieldElem& x, const FieldElem& y) { return x * inverse(y); }

bool is_integral(const FieldElem& z) {
  return z.a.get_den() == 1 && z.b.get_den() == 1;
}

QuadInt to_integer(const FieldElem& z) {
  if (!is_integral(z)) throw FieldError("not an algebraic integer: " + to_string(z));
  return QuadInt(z.a.get_num(), z.b.get_num(), z.field);
}

mpz_class denominator(const FieldElem& z) {
  mpz_class d;
  mpz_lcm(d.get_mpz_t(), z.a.get_den_mpz_t(), z.b.get_den_mpz_t());
  return d;
}

FieldElem from_sqrt_coords(const mpq_class& p, const mpq_class& q, FieldSpec f) {
  if (f.is_rational()) {
    if (q != 0) throw FieldError("sqrt(-D) term over Q");
    return FieldElem(p, mpq_class(0), f);
  }
  if (f.basis() == Basis::HalfInteger) {
    // sqrt(-D) = 2w - 1
    return FieldElem(mpq_class(p - q), mpq_class(2 * q), f);
  }
  return FieldElem(p, q, f);
}

Interval real_enclosure(const FieldElem& z, Precision prec) {
  return Interval(z.real_part(), prec);
}

Interval imag_enclosure(const FieldElem& z, Precision prec) {
  if (z.field.is_rational()) return Interval(0L, prec);
  return Interval(z.imag_sqrt_coeff(), prec) * sqrt(Interval(z.field.D, prec));
}

std::string to_string(const QuadInt& z) { return quad_to_string(z); }
std::string to_string(const FieldElem& z) { return quad_to_string(z); }

FieldElem AlphaPoint::value() const {
  FieldElem v = to_field(x);
  v.a /= mpq_class(y);
  v.b /= mpq_class(y);
  return v;
}

AlphaPoint alpha_normalize(const QuadInt& num, const mpz_class& den) {
  if (den <= 0) throw FieldError("denominator must be positive");
  mpz_class g;
  mpz_gcd(g.get_mpz_t(), num.a.get_mpz_t(), num.b.get_mpz_t());
  mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), den.get_mpz_t());
  AlphaPoint p;
  p.x = QuadInt(mpz_class(num.a / g), mpz_class(num.b / g), num.field);
  p.y = den / g;
  return p;
}

AlphaPoint alpha_from_value(const FieldElem& value) {
  const mpz_class d = denominator(value);
  FieldElem scaled = mpq_class(d) * value;
  return alpha_normalize(to_integer(scaled), d);
}

namespace {

// Parses a signed sum of terms "[int][symbol]" into sqrt(-D) coordinates.
FieldElem parse_sum(const std::string& s, FieldSpec field, const std::string& original) {
  if (s.empty()) throw FieldError("empty number in: " + original);
  FieldElem total = FieldElem::zero(field);
  size_t pos = 0;
  while (pos < s.size()) {
    int sign = 1;
    if (s[pos] == '+' || s[pos] == '-') {
      sign = s[pos] == '-' ? -1 : 1;
      ++pos;
    } else if (pos != 0) {
      throw FieldError("unexpected character in: " + original);
    }
    size_t start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    mpz_class coeff = 1;
    const bool has_digits = pos > start;
    if (has_digits) coeff = mpz_class(s.substr(start, pos - start));
    if (pos < s.size() && s[pos] == '*') ++pos;
    FieldElem term = FieldElem::zero(field);
    if (pos < s.size() && (s[pos] == 'i' || s[pos] == 's')) {
      if (field.is_rational()) throw FieldError("sqrt(-D) term over Q in: " + original);
      term = from_sqrt_coords(0, mpq_class(coeff), field);
      ++pos;
    } else if (pos < s.size() && s[pos] == 'w') {
      if (field.is_rational()) throw FieldError("w term over Q in: " + original);
      term = FieldElem(0, mpq_class(coeff), field);
      ++pos;
    } else {
      if (!has_digits) throw FieldError("missing digits in: " + original);
      term = FieldElem(mpq_class(coeff), 0, field);
    }
    if (sign < 0) term = -term;
    total += term;
  }
  return total;
}

}  // namespace

FieldElem parse_field_element(const std::string& text, FieldSpec field) {
  std::string s = strip_spaces_lower(text);
  if (s.empty()) throw FieldError("empty element");
  mpz_class den = 1;
  const size_t slash = s.rfind('/');
  const size_t close = s.rfind(')');
  if (slash != std::string::npos && (close == std::string::npos || slash > close)) {
    const std::string den_text = s.substr(slash + 1);
    if (den_text.empty() ||
        !std::all_of(den_text.begin(), den_text.end(),
                     [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) {
      throw FieldError("bad denominator in: " + text);
    }
    den = mpz_class(den_text);
    if (den == 0) throw FieldError("zero denominator in: " + text);
    s = s.substr(0, slash);
  }
  if (s.size() >= 2 && s.front() == '(' && s.back() == ')') s = s.substr(1, s.size() - 2);
  FieldElem num = parse_sum(s, field, text);
  num.a /= mpq_class(den);
  num.b /= mpq_class(den);
  return num;
}

std::vector<AlphaPoint> parse_alpha_list(const std::string& text, FieldSpec field) {
  std::vector<AlphaPoint> out;
  size_t start = 0;
  while (start <= text.size()) {
    size_t comma = text.find(',', start);
    if (comma == std::string::npos) comma = text.size();
    out.push_back(alpha_from_value(parse_field_element(text.substr(start, comma - start), field)));
    start = comma + 1;
  }
  return out;
}

}  // namespace bakerforge
