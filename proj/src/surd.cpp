#include "bakerforge/surd.hpp"

namespace bakerforge {

namespace {


// Sign of b*sqrt(p) + c*sqrt(q).
int sign_two_roots(const mpq_class& b, const mpz_class& p,
                   const mpq_class& c, const mpz_class& q) {
  const int sb = p == 0 ? 0 : sgn(b);
  const int sc = q == 0 ? 0 : sgn(c);
  if (sb == 0) return sc;
  if (sc == 0 || sb == sc) return sb;
  const mpq_class lhs = b * b * mpq_class(p);
  const mpq_class rhs = c * c * mpq_class(q);
  if (lhs == rhs) return 0;
  return lhs > rhs ? sb : sc;
}

}  // namespace

int sign_of(const mpq_class& a, const mpq_class& b, const mpz_class& p,
            const mpq_class& c, const mpz_class& q) {
  const int sx = sgn(a);
  const int sy = sign_two_roots(b, p, c, q);
  if (sy == 0) return sx;
  if (sx == 0 || sx == sy) return sy;
  // a and Y have opposite signs: compare a^2 with Y^2 = b^2 p + c^2 q + 2bc sqrt(pq).
  const mpq_class rest = a * a - b * b * mpq_class(p) - c * c * mpq_class(q);
  const int diff = sign_two_roots(rest, mpz_class(1), mpq_class(-2 * b * c), mpz_class(p * q));
  // sign(a + Y) = sign(a) * sign(a^2 - Y^2)
  return sx * diff;
}

Surd Surd::sqrt_of(const mpq_class& q) {
  if (q < 0) throw DomainError("sqrt of a negative rational");
  Surd out;
  out.s = mpq_class(1, q.get_den());
  out.n = q.get_num() * q.get_den();
  out.s.canonicalize();
  return out;
}

int compare(const Surd& x, const Surd& y) {
  return sign_of(x.r - y.r, x.s, x.n, -y.s, y.n);
}

const Surd& max(const Surd& x, const Surd& y) { return compare(x, y) >= 0 ? x : y; }

Interval Surd::enclose(Precision prec) const {
  Interval out(r, prec);
  if (s != 0 && n != 0) out += Interval(s, prec) * sqrt(Interval(n, prec));
  return out;
}

std::string Surd::to_string() const {
  if (s == 0 || n == 0) return r.get_str();
  if (mpz_perfect_square_p(n.get_mpz_t())) {
    mpz_class q;
    mpz_sqrt(q.get_mpz_t(), n.get_mpz_t());
    const mpq_class v = r + s * q;
    return v.get_str();
  }
  const std::string root = (s == 1 ? "" : s.get_str() + "*") + "sqrt(" + n.get_str() + ")";
  if (r == 0) return root;
  return r.get_str() + (s < 0 ? "" : "+") + root;
}

}  // namespace bakerforge
