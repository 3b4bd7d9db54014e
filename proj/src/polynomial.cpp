#include "indpoly/polynomial.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace indpoly {

IntPolynomial::IntPolynomial(std::initializer_list<long long> coeffs) {
  for (long long c : coeffs) coeffs_.emplace_back(c);
  trim();
}

IntPolynomial::IntPolynomial(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

IntPolynomial IntPolynomial::constant(BigInt c) { return IntPolynomial(std::vector<BigInt>{std::move(c)}); }

IntPolynomial IntPolynomial::monomial(BigInt c, int k) {
  std::vector<BigInt> cs(static_cast<std::size_t>(k) + 1);
  cs.back() = std::move(c);
  return IntPolynomial(std::move(cs));
}

IntPolynomial IntPolynomial::one_plus_z_pow(int n) {
  std::vector<BigInt> cs(static_cast<std::size_t>(n) + 1);
  BigInt binom = 1;
  for (int k = 0; k <= n; ++k) {
    cs[static_cast<std::size_t>(k)] = binom;
    binom = binom * (n - k) / (k + 1);
  }
  return IntPolynomial(std::move(cs));
}

void IntPolynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

BigInt IntPolynomial::coefficient(int k) const {
  if (k < 0 || k > degree()) return 0;
  return coeffs_[static_cast<std::size_t>(k)];
}

IntPolynomial& IntPolynomial::operator+=(const IntPolynomial& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] += o.coeffs_[k];
  trim();
  return *this;
}

IntPolynomial& IntPolynomial::operator-=(const IntPolynomial& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] -= o.coeffs_[k];
  trim();
  return *this;
}

IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<BigInt> out(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return IntPolynomial(std::move(out));
}

IntPolynomial operator-(IntPolynomial a) {
  for (auto& c : a.coeffs_) c = -c;
  return a;
}

IntPolynomial& IntPolynomial::operator*=(const IntPolynomial& o) { return *this = *this * o; }

IntPolynomial& IntPolynomial::operator*=(const BigInt& c) {
  for (auto& x : coeffs_) x *= c;
  trim();
  return *this;
}

IntPolynomial IntPolynomial::shifted(int k) const {
  if (is_zero() || k == 0) return *this;
  std::vector<BigInt> cs(static_cast<std::size_t>(k));
  cs.insert(cs.end(), coeffs_.begin(), coeffs_.end());
  return IntPolynomial(std::move(cs));
}

IntPolynomial IntPolynomial::pow(int e) const {
  IntPolynomial result = constant(1);
  IntPolynomial base = *this;
  while (e > 0) {
    if (e & 1) result *= base;
    e >>= 1;
    if (e) base *= base;
  }
  return result;
}

IntPolynomial IntPolynomial::derivative() const {
  if (coeffs_.size() <= 1) return {};
  std::vector<BigInt> cs(coeffs_.size() - 1);
  for (std::size_t k = 1; k < coeffs_.size(); ++k) cs[k - 1] = coeffs_[k] * k;
  return IntPolynomial(std::move(cs));
}

std::string IntPolynomial::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    const BigInt& c = coeffs_[k];
    if (c == 0) continue;
    const BigInt mag = abs(c);
    if (first) {
      if (c < 0) out << '-';
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (k == 0 || mag != 1) out << mag;
    if (k >= 1) out << 'z';
    if (k >= 2) out << '^' << k;
  }
  return out.str();
}

BigInt content(const IntPolynomial& p) {
  BigInt g = 0;
  for (const auto& c : p.coefficients()) g = boost::multiprecision::gcd(g, c);
  if (!p.is_zero() && p.coefficients().back() < 0) g = -g;
  return g;
}

IntPolynomial primitive_part(const IntPolynomial& p) {
  if (p.is_zero()) return p;
  const BigInt c = content(p);
  std::vector<BigInt> cs(p.coefficients().begin(), p.coefficients().end());
  for (auto& x : cs) x /= c;
  return IntPolynomial(std::move(cs));
}

namespace {

// Pseudo-remainder of a by b: lc(b)^(deg a - deg b + 1) * a mod b.
IntPolynomial pseudo_remainder(const IntPolynomial& a, const IntPolynomial& b) {
  std::vector<BigInt> r(a.coefficients().begin(), a.coefficients().end());
  const auto bc = b.coefficients();
  const std::size_t db = bc.size() - 1;
  const BigInt& lb = bc.back();
  while (r.size() > db && !r.empty()) {
    const BigInt lr = r.back();
    const std::size_t shift = r.size() - 1 - db;
    for (auto& x : r) x *= lb;
    for (std::size_t i = 0; i <= db; ++i) r[shift + i] -= lr * bc[i];
    while (!r.empty() && r.back() == 0) r.pop_back();
  }
  return IntPolynomial(std::move(r));
}

}  // namespace

IntPolynomial gcd(const IntPolynomial& a, const IntPolynomial& b) {
  IntPolynomial x = primitive_part(a);
  IntPolynomial y = primitive_part(b);
  if (x.degree() < y.degree()) std::swap(x, y);
  while (!y.is_zero()) {
    IntPolynomial r = primitive_part(pseudo_remainder(x, y));
    x = std::move(y);
    y = std::move(r);
  }
  return primitive_part(x);
}

IntPolynomial exact_quotient(const IntPolynomial& a, const IntPolynomial& b) {
  if (b.is_zero()) throw std::domain_error("exact_quotient: division by zero polynomial");
  if (a.degree() < b.degree()) {
    if (a.is_zero()) return {};
    throw std::domain_error("exact_quotient: divisor does not divide dividend");
  }
  std::vector<BigInt> r(a.coefficients().begin(), a.coefficients().end());
  const auto bc = b.coefficients();
  const std::size_t db = bc.size() - 1;
  std::vector<BigInt> q(r.size() - db);
  for (std::size_t k = q.size(); k-- > 0;) {
    const BigInt& top = r[k + db];
    if (top % bc.back() != 0) throw std::domain_error("exact_quotient: non-integral quotient");
    q[k] = top / bc.back();
    for (std::size_t i = 0; i <= db; ++i) r[k + i] -= q[k] * bc[i];
  }
  if (std::any_of(r.begin(), r.end(), [](const BigInt& x) { return x != 0; })) {
    throw std::domain_error("exact_quotient: nonzero remainder");
  }
  return IntPolynomial(std::move(q));
}

std::complex<double> evaluate(const IntPolynomial& p, std::complex<double> z) {
  std::complex<double> acc = 0.0;
  const auto cs = p.coefficients();
  for (std::size_t k = cs.size(); k-- > 0;) acc = acc * z + cs[k].convert_to<double>();
  return acc;
}

std::complex<long double> evaluate(const IntPolynomial& p, std::complex<long double> z) {
  std::complex<long double> acc = 0.0L;
  const auto cs = p.coefficients();
  for (std::size_t k = cs.size(); k-- > 0;) acc = acc * z + cs[k].convert_to<long double>();
  return acc;
}

Rational evaluate(const IntPolynomial& p, const Rational& z) {
  Rational acc = 0;
  const auto cs = p.coefficients();
  for (std::size_t k = cs.size(); k-- > 0;) acc = acc * z + Rational(cs[k]);
  return acc;
}

BigInt evaluate(const IntPolynomial& p, const BigInt& z) {
  BigInt acc = 0;
  const auto cs = p.coefficients();
  for (std::size_t k = cs.size(); k-- > 0;) acc = acc * z + cs[k];
  return acc;
}

}  // namespace indpoly
