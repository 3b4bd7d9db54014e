#include "indpoly/roots.hpp"

#include <algorithm>
#include <array>
#include <tuple>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

#include <boost/multiprecision/mpfr.hpp>

#include "indpoly/errors.hpp"

namespace indpoly {

namespace {

using cld = std::complex<long double>;

// ---- squarefree test modulo a prime ---------------------------------------

constexpr std::uint64_t kPrime = 2305843009213693951ull;  // 2^61 - 1

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % kPrime);
}

std::uint64_t pow_mod(std::uint64_t b, std::uint64_t e) {
  std::uint64_t r = 1;
  while (e) {
    if (e & 1) r = mul_mod(r, b);
    b = mul_mod(b, b);
    e >>= 1;
  }
  return r;
}

std::vector<std::uint64_t> reduce(const IntPolynomial& p) {
  std::vector<std::uint64_t> out;
  for (const auto& c : p.coefficients()) {
    BigInt r = c % kPrime;
    if (r < 0) r += kPrime;
    out.push_back(r.convert_to<std::uint64_t>());
  }
  while (!out.empty() && out.back() == 0) out.pop_back();
  return out;
}

// Degree of gcd(a, b) over GF(p), by the Euclidean algorithm.
int gcd_degree_mod(std::vector<std::uint64_t> a, std::vector<std::uint64_t> b) {
  while (!b.empty()) {
    const std::uint64_t inv = pow_mod(b.back(), kPrime - 2);
    while (a.size() >= b.size()) {
      const std::uint64_t f = mul_mod(a.back(), inv);
      const std::size_t shift = a.size() - b.size();
      for (std::size_t i = 0; i < b.size(); ++i) {
        a[shift + i] = (a[shift + i] + kPrime - mul_mod(f, b[i])) % kPrime;
      }
      while (!a.empty() && a.back() == 0) a.pop_back();
    }
    std::swap(a, b);
  }
  return static_cast<int>(a.size()) - 1;
}

// True when p is certainly squarefree; false means "unknown".
bool certainly_squarefree(const IntPolynomial& p) {
  const auto a = reduce(p);
  const auto b = reduce(p.derivative());
  if (static_cast<int>(a.size()) - 1 != p.degree()) return false;
  if (static_cast<int>(b.size()) - 1 != p.degree() - 1) return false;
  return gcd_degree_mod(a, b) == 0;
}

// ---- numerical root finding -----------------------------------------------

// Minimal complex arithmetic over any real type, including MPFR numbers.
template <class T>
struct Cx {
  T re{0};
  T im{0};

  friend Cx operator+(const Cx& a, const Cx& b) { return {a.re + b.re, a.im + b.im}; }
  friend Cx operator-(const Cx& a, const Cx& b) { return {a.re - b.re, a.im - b.im}; }
  friend Cx operator*(const Cx& a, const Cx& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  friend Cx operator*(const T& s, const Cx& b) { return {s * b.re, s * b.im}; }
  friend Cx operator/(const Cx& a, const Cx& b) {
    // Smith's algorithm.
    using std::abs;
    if (abs(b.re) >= abs(b.im)) {
      const T r = b.im / b.re;
      const T den = b.re + b.im * r;
      return {(a.re + a.im * r) / den, (a.im - a.re * r) / den};
    }
    const T r = b.re / b.im;
    const T den = b.re * r + b.im;
    return {(a.re * r + a.im) / den, (a.im * r - a.re) / den};
  }
  bool is_zero() const { return re == 0 && im == 0; }
};

template <class T>
T modulus(const Cx<T>& z) {
  using std::abs;
  using std::sqrt;
  const T a = abs(z.re);
  const T b = abs(z.im);
  if (a == 0) return b;
  if (b == 0) return a;
  if (a >= b) {
    const T r = b / a;
    return a * sqrt(T(1) + r * r);
  }
  const T r = a / b;
  return b * sqrt(T(1) + r * r);
}

template <class T>
struct Evaluation {
  Cx<T> ratio;     // p(z) / p'(z)
  T value_abs;     // |p(z)|, or |p(z)| / |z|^d when reversed
  T bound;         // sum |a_k| |z|^k with the same scaling
  bool reversed;
};

// Newton ratio evaluated on p or, for |z| > 1, on the reversed polynomial.
template <class T>
Evaluation<T> evaluate_at(const std::vector<T>& a, const Cx<T>& z) {
  const std::size_t d = a.size() - 1;
  const T az = modulus(z);
  const bool reversed = az > 1;
  const Cx<T> x = reversed ? Cx<T>{T(1), T(0)} / z : z;
  const T ax = reversed ? T(1) / az : az;
  Cx<T> p;
  Cx<T> dp;
  T bound = 0;
  for (std::size_t i = 0; i <= d; ++i) {
    using std::abs;
    const T& c = reversed ? a[i] : a[d - i];
    dp = dp * x + p;
    p = p * x + Cx<T>{c, T(0)};
    bound = bound * ax + abs(c);
  }
  Evaluation<T> e;
  e.value_abs = modulus(p);
  e.bound = bound;
  e.reversed = reversed;
  if (!reversed) {
    e.ratio = dp.is_zero() ? Cx<T>{} : p / dp;
  } else {
    const Cx<T> denom = Cx<T>{T(static_cast<long>(d)), T(0)} * p - x * dp;
    e.ratio = denom.is_zero() ? Cx<T>{} : z * p / denom;
  }
  return e;
}

// Same quantities as evaluate_at, with p and p' obtained by dividing by the
// real quadratic (X - z)(X - conj z); about half the multiplications of
// complex Horner. Used inside the iteration only.
template <class T>
Evaluation<T> evaluate_fast(const std::vector<T>& a, const Cx<T>& z) {
  using std::abs;
  const std::size_t d = a.size() - 1;
  const T az = modulus(z);
  const bool reversed = az > 1;
  const Cx<T> x = reversed ? Cx<T>{T(1), T(0)} / z : z;
  const T ax = reversed ? T(1) / az : az;
  auto coef = [&](std::size_t k) -> const T& { return reversed ? a[d - k] : a[k]; };
  Evaluation<T> e;
  e.reversed = reversed;
  T bound = 0;
  for (std::size_t i = 0; i <= d; ++i) bound = bound * ax + abs(coef(d - i));
  e.bound = bound;
  if (d == 1) return evaluate_at(a, z);
  const T s = 2 * x.re;
  const T t = x.re * x.re + x.im * x.im;
  // p = (X^2 - sX + t) Q + (u X + v); Q is reduced the same way on the fly.
  T u = coef(d);
  T v = coef(d - 1);
  T qu = 0;
  T qv = 0;
  std::size_t qlen = 0;
  auto push_q = [&](const T& c) {
    if (qlen == 0) {
      qu = c;
    } else if (qlen == 1) {
      qv = c;
    } else {
      const T nu = qv + s * qu;
      qv = c - t * qu;
      qu = nu;
    }
    ++qlen;
  };
  for (std::size_t k = d - 1; k-- > 0;) {
    push_q(u);
    const T nu = v + s * u;
    v = coef(k) - t * u;
    u = nu;
  }
  const Cx<T> p = Cx<T>{u, T(0)} * x + Cx<T>{v, T(0)};
  const Cx<T> qz = qlen == 1 ? Cx<T>{qu, T(0)} : Cx<T>{qu, T(0)} * x + Cx<T>{qv, T(0)};
  const Cx<T> dp = Cx<T>{T(0), 2 * x.im} * qz + Cx<T>{u, T(0)};
  e.value_abs = modulus(p);
  if (!reversed) {
    e.ratio = dp.is_zero() ? Cx<T>{} : p / dp;
  } else {
    const Cx<T> denom = Cx<T>{T(static_cast<long>(d)), T(0)} * p - x * dp;
    e.ratio = denom.is_zero() ? Cx<T>{} : z * p / denom;
  }
  return e;
}

// Initial points on circles whose radii come from the upper convex hull of
// (k, log|a_k|).
std::vector<Cx<long double>> initial_points(const std::vector<long double>& a) {
  const int d = static_cast<int>(a.size()) - 1;
  std::vector<long double> lg(a.size(), -std::numeric_limits<long double>::infinity());
  for (std::size_t k = 0; k < a.size(); ++k) {
    if (a[k] != 0) lg[k] = std::log(std::abs(a[k]));
  }
  std::vector<int> hull;
  for (int k = 0; k <= d; ++k) {
    const auto uk = static_cast<std::size_t>(k);
    if (!std::isfinite(lg[uk])) continue;
    while (hull.size() >= 2) {
      const auto i = static_cast<std::size_t>(hull[hull.size() - 2]);
      const auto j = static_cast<std::size_t>(hull.back());
      const long double cross = (lg[j] - lg[i]) * static_cast<long double>(uk - i) -
                                (lg[uk] - lg[i]) * static_cast<long double>(j - i);
      if (cross > 0) break;
      hull.pop_back();
    }
    hull.push_back(k);
  }
  std::vector<Cx<long double>> pts;
  constexpr long double kTwoPi = 2.0L * std::numbers::pi_v<long double>;
  for (std::size_t h = 0; h + 1 < hull.size(); ++h) {
    const int i = hull[h];
    const int j = hull[h + 1];
    const int m = j - i;
    const long double radius =
        std::exp((lg[static_cast<std::size_t>(i)] - lg[static_cast<std::size_t>(j)]) / m);
    for (int k = 0; k < m; ++k) {
      const long double angle = kTwoPi * k / m + kTwoPi * i / d + 0.7L;
      pts.push_back({radius * std::cos(angle), radius * std::sin(angle)});
    }
  }
  return pts;
}

// Aberth-Ehrlich iteration (Gauss-Seidel order) from the given starting
// points; entries flagged in `frozen` are held fixed. Returns false if some
// root fails to converge.
template <class T>
bool aberth(const std::vector<T>& a, std::vector<Cx<T>>& z, const std::vector<char>& frozen,
            int max_iterations) {
  const T eps = std::numeric_limits<T>::epsilon();
  const std::size_t n = z.size();
  std::vector<char> done = frozen;
  std::size_t remaining = static_cast<std::size_t>(std::count(done.begin(), done.end(), 0));
  for (int it = 0; it < max_iterations && remaining > 0; ++it) {
    for (std::size_t i = 0; i < n; ++i) {
      if (done[i]) continue;
      const Evaluation<T> e = evaluate_fast(a, z[i]);
      if (e.value_abs <= 4 * eps * e.bound) {
        done[i] = 1;
        --remaining;
        continue;
      }
      // The correction sum only needs a few correct digits.
      std::complex<long double> sum = 0;
      for (std::size_t j = 0; j < n; ++j) {
        if (j == i) continue;
        const Cx<T> diff = z[i] - z[j];
        sum += 1.0L / std::complex<long double>(static_cast<long double>(diff.re),
                                                 static_cast<long double>(diff.im));
      }
      const Cx<T> w =
          e.ratio / (Cx<T>{T(1), T(0)} - e.ratio * Cx<T>{T(sum.real()), T(sum.imag())});
      z[i] = z[i] - w;
      if (modulus(w) <= eps * modulus(z[i])) {
        done[i] = 1;
        --remaining;
      }
    }
  }
  return remaining == 0;
}

// Radius of a disc around z[i] guaranteed to contain a root of p:
//   d * |p(z_i)| / (|a_d| * prod_{j != i} |z_i - z_j|),
// with |p(z_i)| inflated by its rounding-error bound.
template <class T>
std::vector<T> inclusion_radii(const std::vector<T>& a, const std::vector<Cx<T>>& z) {
  using std::abs;
  const T eps = std::numeric_limits<T>::epsilon();
  const std::size_t n = z.size();
  const auto d = static_cast<long>(a.size() - 1);
  std::vector<T> radii(n);
  for (std::size_t i = 0; i < n; ++i) {
    const Evaluation<T> e = evaluate_at(a, z[i]);
    T num = e.value_abs + T(4 * d + 4) * eps * e.bound;
    // The reversed evaluation divided p by z^d; undo that against the product.
    const T az = modulus(z[i]);
    T den = abs(a.back());
    for (std::size_t j = 0; j < n; ++j) {
      if (j == i) continue;
      T diff = modulus(z[i] - z[j]);
      if (e.reversed) diff /= az;
      den *= diff;
    }
    if (e.reversed) {
      den /= az;  // d - 1 factors of 1/|z| above, p was scaled by |z|^-d
    }
    radii[i] = den == 0 ? T(std::numeric_limits<double>::infinity()) : T(d) * num / den;
  }
  return radii;
}

template <class T>
struct Certified {
  std::vector<Cx<T>> roots;
  std::vector<char> certified;
  bool ok = false;
};

// Runs Aberth at precision T from `start`, leaving roots already certified at
// a lower precision in place, then checks every inclusion radius.
template <class T, class From>
Certified<T> refine(const IntPolynomial& q, const std::vector<Cx<From>>& start,
                    const std::vector<char>& frozen, int max_iterations) {
  std::vector<T> a;
  for (const auto& c : q.coefficients()) a.push_back(T(c));
  Certified<T> out;
  for (const auto& s : start) out.roots.push_back({T(s.re), T(s.im)});
  out.certified = frozen.empty() ? std::vector<char>(start.size(), 0) : frozen;
  if (!aberth(a, out.roots, out.certified, max_iterations)) return out;
  const std::vector<T> radii = inclusion_radii(a, out.roots);
  out.ok = true;
  for (std::size_t i = 0; i < radii.size(); ++i) {
    // Good to double resolution relative to the root, with a tiny absolute floor.
    out.certified[i] = radii[i] <= T(1e-17) * modulus(out.roots[i]) + T(1e-250);
    if (!out.certified[i]) out.ok = false;
  }
  return out;
}

template <class T>
std::vector<std::complex<double>> to_double(const std::vector<Cx<T>>& z) {
  std::vector<std::complex<double>> out;
  for (const auto& r : z) {
    out.emplace_back(static_cast<double>(r.re), static_cast<double>(r.im));
  }
  return out;
}

namespace mp = boost::multiprecision;
template <unsigned Digits>
using MpReal = mp::number<mp::mpfr_float_backend<Digits, mp::allocate_stack>, mp::et_off>;

using PrecisionLadder =
    std::tuple<long double, MpReal<50>, MpReal<100>, MpReal<200>, MpReal<400>, MpReal<1000>>;
constexpr std::array<int, 6> kLadderDigits{18, 50, 100, 200, 400, 1000};

template <std::size_t Level, class From>
std::vector<std::complex<double>> climb(const IntPolynomial& q, const std::vector<Cx<From>>& start,
                                        const std::vector<char>& frozen, int max_iterations) {
  using T = std::tuple_element_t<Level, PrecisionLadder>;
  const Certified<T> res = refine<T>(q, start, frozen, max_iterations);
  if (res.ok) return to_double(res.roots);
  if constexpr (Level + 1 < std::tuple_size_v<PrecisionLadder>) {
    return climb<Level + 1>(q, res.roots, res.certified, max_iterations);
  } else {
    throw NumericError("roots could not be certified at " + std::to_string(kLadderDigits.back()) +
                       " significant digits (degree " + std::to_string(q.degree()) + ")");
  }
}

std::vector<std::complex<double>> certified_roots(const IntPolynomial& q, int max_iterations) {
  std::vector<long double> a;
  for (const auto& c : q.coefficients()) a.push_back(c.convert_to<long double>());
  const auto start = initial_points(a);
  return climb<0>(q, start, {}, max_iterations);
}

std::vector<std::complex<double>> simple_roots(const IntPolynomial& q, const RootOptions& opts) {
  std::vector<std::complex<double>> z;
  if (q.degree() == 1) {
    const Rational r(-q.coefficient(0), q.coefficient(1));
    z.emplace_back(r.convert_to<double>(), 0.0);
    return z;
  }
  z = certified_roots(q, opts.max_iterations);
  for (auto& r : z) {
    if (std::abs(r.imag()) < opts.real_snap * (1.0 + std::abs(r.real()))) r.imag(0.0);
  }
  return z;
}

// |p(x)| / (sum_k |c_k| * max(1,|x|)^deg)
long double scaled_residual(const IntPolynomial& p, cld x) {
  const auto cs = p.coefficients();
  const std::size_t d = cs.size() - 1;
  const bool reversed = std::abs(x) > 1.0L;
  const cld y = reversed ? 1.0L / x : x;
  cld acc = 0;
  long double norm = 0;
  for (std::size_t i = 0; i <= d; ++i) {
    const long double c = (reversed ? cs[i] : cs[d - i]).convert_to<long double>();
    acc = acc * y + c;
    norm += std::abs(c);
  }
  return std::abs(acc) / norm;
}

bool root_less(const Root& a, const Root& b) {
  const double ma = std::abs(a.value);
  const double mb = std::abs(b.value);
  if (ma != mb) return ma < mb;
  if (std::abs(a.value.imag()) != std::abs(b.value.imag())) {
    return std::abs(a.value.imag()) < std::abs(b.value.imag());
  }
  if (a.value.real() != b.value.real()) return a.value.real() < b.value.real();
  return a.value.imag() > b.value.imag();
}

}  // namespace

int RootSet::root_count() const {
  int c = 0;
  for (const auto& r : roots) c += r.multiplicity;
  return c;
}

std::vector<std::pair<IntPolynomial, int>> squarefree_factorization(const IntPolynomial& p) {
  if (p.degree() < 1) return {};
  const IntPolynomial pp = primitive_part(p);
  if (certainly_squarefree(pp)) return {{pp, 1}};

  std::vector<std::pair<IntPolynomial, int>> out;
  const IntPolynomial dp = pp.derivative();
  const IntPolynomial a0 = gcd(pp, dp);
  IntPolynomial b = exact_quotient(pp, a0);
  IntPolynomial c = exact_quotient(dp, a0);
  IntPolynomial d = c - b.derivative();
  for (int i = 1; b.degree() > 0; ++i) {
    const IntPolynomial a = gcd(b, d);
    b = exact_quotient(b, a);
    c = exact_quotient(d, a);
    d = c - b.derivative();
    if (a.degree() > 0) out.emplace_back(a, i);
  }
  return out;
}

RootSet all_roots(const IntPolynomial& p, const RootOptions& opts) {
  if (p.degree() < 1) throw std::invalid_argument("all_roots: polynomial must have degree >= 1");

  RootSet out;
  int zeros = 0;
  while (p.coefficient(zeros) == 0) ++zeros;
  if (zeros > 0) out.roots.push_back({{0.0, 0.0}, zeros});
  const IntPolynomial rest = zeros > 0 ? exact_quotient(p, IntPolynomial::monomial(1, zeros)) : p;

  long double worst = 0;
  for (const auto& [factor, mult] : squarefree_factorization(rest)) {
    for (const auto& r : simple_roots(factor, opts)) {
      worst = std::max(worst, scaled_residual(p, cld(r.real(), r.imag())));
      out.roots.push_back({r, mult});
    }
  }
  out.residual = static_cast<double>(worst);
  if (!(out.residual <= opts.residual_tol)) {
    throw NumericError("root residual " + std::to_string(out.residual) + " exceeds tolerance " +
                       std::to_string(opts.residual_tol));
  }
  if (out.root_count() != p.degree()) {
    throw NumericError("root finder returned " + std::to_string(out.root_count()) +
                       " roots for a degree " + std::to_string(p.degree()) + " polynomial");
  }
  std::sort(out.roots.begin(), out.roots.end(), root_less);

  // Smallest modulus; among ties the real one, then the most negative.
  const double rmin = std::abs(out.roots.front().value);
  const Root* pick = &out.roots.front();
  for (const auto& r : out.roots) {
    if (std::abs(r.value) > rmin * (1.0 + 1e-9) + 1e-300) break;
    const double ia = std::abs(r.value.imag());
    const double ib = std::abs(pick->value.imag());
    if (ia < ib || (ia == ib && r.value.real() < pick->value.real())) pick = &r;
  }
  out.lambda1.value = pick->value;
  out.lambda1.real = pick->value.imag() == 0.0;
  out.lambda1.conjugate_pair = !out.lambda1.real;
  if (out.lambda1.conjugate_pair) out.lambda1.value.imag(std::abs(pick->value.imag()));
  return out;
}

Lambda1 lambda1(const Graph& g, const RootOptions& opts, const RecursionGuard& guard) {
  if (g.order() == 0) throw std::invalid_argument("lambda1: empty graph");
  return all_roots(independence_polynomial(g, guard), opts).lambda1;
}

bool is_real_rooted(const IntPolynomial& p, double tol) {
  RootOptions opts;
  opts.real_snap = std::min(opts.real_snap, tol);
  const RootSet rs = all_roots(p, opts);
  return std::all_of(rs.roots.begin(), rs.roots.end(),
                     [&](const Root& r) { return std::abs(r.value.imag()) < tol; });
}

}  // namespace indpoly
