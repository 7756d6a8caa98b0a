#include "qslab/cyclotomic.hpp"

#include <map>
#include <mutex>
#include <numeric>
#include <stdexcept>

namespace qslab {

namespace {

using Poly = std::vector<Rational>;

std::vector<std::int64_t> compute_cyclotomic(unsigned n) {
  // x^n - 1 divided by Phi_d for every proper divisor d of n.
  std::vector<std::int64_t> num(n + 1, 0);
  num[0] = -1;
  num[n] = 1;
  for (unsigned d = 1; d < n; ++d) {
    if (n % d != 0) continue;
    const auto& den = cyclotomic_polynomial(d);
    const std::size_t dd = den.size() - 1;
    std::vector<std::int64_t> quot(num.size() - dd, 0);
    for (std::size_t i = num.size(); i-- > dd;) {
      const auto c = num[i];  // den is monic
      quot[i - dd] = c;
      for (std::size_t j = 0; j <= dd; ++j) num[i - dd + j] -= c * den[j];
    }
    num = std::move(quot);
  }
  return num;
}

void reduce(Poly& p, unsigned conductor) {
  const auto& phi = cyclotomic_polynomial(conductor);
  const std::size_t d = phi.size() - 1;
  for (std::size_t i = p.size(); i-- > d;) {
    if (p[i] == 0) continue;
    const Rational c = p[i];
    for (std::size_t j = 0; j < d; ++j) p[i - d + j] -= c * phi[j];
    p[i] = 0;
  }
  p.resize(d, Rational(0));
}

}  // namespace

const std::vector<std::int64_t>& cyclotomic_polynomial(unsigned n) {
  if (n == 0) throw std::invalid_argument("cyclotomic polynomial of order 0");
  static std::mutex mutex;
  static std::map<unsigned, std::vector<std::int64_t>> memo;
  {
    std::lock_guard lock(mutex);
    if (auto it = memo.find(n); it != memo.end()) return it->second;
  }
  std::vector<std::int64_t> poly =
      n == 1 ? std::vector<std::int64_t>{-1, 1} : compute_cyclotomic(n);
  std::lock_guard lock(mutex);
  // std::map never invalidates references on insert.
  return memo.emplace(n, std::move(poly)).first->second;
}

unsigned totient(unsigned n) {
  unsigned count = 0;
  for (unsigned k = 1; k <= n; ++k)
    if (std::gcd(k, n) == 1) ++count;
  return count;
}

Cyclotomic::Cyclotomic(Rational v) : conductor_(1), coeffs_{std::move(v)} {}

Cyclotomic::Cyclotomic(unsigned conductor, std::vector<Rational> coeffs)
    : conductor_(conductor), coeffs_(std::move(coeffs)) {
  normalize();
}

Cyclotomic Cyclotomic::root_of_unity(unsigned conductor, std::uint64_t power) {
  std::vector<Rational> c(conductor, Rational(0));
  c[power % conductor] = 1;
  return Cyclotomic(conductor, std::move(c));
}

Cyclotomic Cyclotomic::from_powers(unsigned conductor, std::vector<Rational> coefficients) {
  if (conductor == 0) throw std::invalid_argument("conductor must be positive");
  // Fold exponents modulo the conductor before reducing.
  std::vector<Rational> c(conductor, Rational(0));
  for (std::size_t i = 0; i < coefficients.size(); ++i) c[i % conductor] += coefficients[i];
  return Cyclotomic(conductor, std::move(c));
}

void Cyclotomic::normalize() {
  if (conductor_ <= 2) {
    // zeta_2 = -1.
    Rational v = 0;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) v += (i % 2 == 0 || conductor_ == 1) ? coeffs_[i] : -coeffs_[i];
    conductor_ = 1;
    coeffs_ = {v};
    return;
  }
  reduce(coeffs_, conductor_);
  for (std::size_t i = 1; i < coeffs_.size(); ++i)
    if (coeffs_[i] != 0) return;
  Rational v = coeffs_.empty() ? Rational(0) : coeffs_[0];
  conductor_ = 1;
  coeffs_ = {v};
}

bool Cyclotomic::is_zero() const { return is_rational() && coeffs_[0] == 0; }

bool Cyclotomic::is_integer() const {
  return is_rational() && denominator(coeffs_[0]) == 1;
}

Rational Cyclotomic::to_rational() const {
  if (!is_rational()) throw std::domain_error("value " + to_string() + " is not rational");
  return coeffs_[0];
}

std::int64_t Cyclotomic::to_integer() const {
  if (!is_integer()) throw std::domain_error("value " + to_string() + " is not an integer");
  return numerator(coeffs_[0]).convert_to<std::int64_t>();
}

Cyclotomic Cyclotomic::lifted(unsigned target) const {
  if (target % conductor_ != 0)
    throw std::invalid_argument("cannot lift to a non-multiple conductor");
  if (target == conductor_) return *this;
  const unsigned step = target / conductor_;
  std::vector<Rational> c(target, Rational(0));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) c[(i * step) % target] += coeffs_[i];
  Cyclotomic out;
  out.conductor_ = target;
  out.coeffs_ = std::move(c);
  reduce(out.coeffs_, target);
  // Deliberately not normalised: callers compare coefficient vectors.
  return out;
}

Cyclotomic Cyclotomic::conj() const {
  if (is_rational()) return *this;
  std::vector<Rational> c(conductor_, Rational(0));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) c[(conductor_ - i) % conductor_] += coeffs_[i];
  return Cyclotomic(conductor_, std::move(c));
}

Cyclotomic& Cyclotomic::operator+=(const Cyclotomic& rhs) {
  const unsigned e = std::lcm(conductor_, rhs.conductor_);
  auto a = lifted(e);
  const auto b = rhs.lifted(e);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) a.coeffs_[i] += b.coeffs_[i];
  a.normalize();
  return *this = std::move(a);
}

Cyclotomic& Cyclotomic::operator-=(const Cyclotomic& rhs) { return *this += -rhs; }

Cyclotomic& Cyclotomic::operator*=(const Cyclotomic& rhs) {
  if (rhs.is_rational()) {
    for (auto& c : coeffs_) c *= rhs.coeffs_[0];
    normalize();
    return *this;
  }
  const unsigned e = std::lcm(conductor_, rhs.conductor_);
  const auto a = lifted(e);
  const auto b = rhs.lifted(e);
  std::vector<Rational> prod(a.coeffs_.size() + b.coeffs_.size(), Rational(0));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) prod[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return *this = Cyclotomic(e, std::move(prod));
}

Cyclotomic& Cyclotomic::operator/=(const Rational& rhs) {
  if (rhs == 0) throw std::domain_error("division by zero");
  for (auto& c : coeffs_) c /= rhs;
  return *this;
}

Cyclotomic Cyclotomic::operator-() const {
  Cyclotomic out = *this;
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

bool operator==(const Cyclotomic& a, const Cyclotomic& b) {
  if (a.conductor_ == b.conductor_) return a.coeffs_ == b.coeffs_;
  if (a.is_rational() != b.is_rational()) return false;
  const unsigned e = std::lcm(a.conductor_, b.conductor_);
  return a.lifted(e).coeffs_ == b.lifted(e).coeffs_;
}

std::strong_ordering operator<=>(const Cyclotomic& a, const Cyclotomic& b) {
  const unsigned e = std::lcm(a.conductor_, b.conductor_);
  const auto x = a.lifted(e);
  const auto y = b.lifted(e);
  for (std::size_t i = 0; i < x.coeffs_.size(); ++i) {
    if (x.coeffs_[i] < y.coeffs_[i]) return std::strong_ordering::less;
    if (x.coeffs_[i] > y.coeffs_[i]) return std::strong_ordering::greater;
  }
  return std::strong_ordering::equal;
}

std::string Cyclotomic::to_string() const {
  if (is_rational()) return coeffs_[0].str();
  std::string out;
  const std::string root = "E(" + std::to_string(conductor_) + ")";
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    const auto& c = coeffs_[i];
    if (c == 0) continue;
    std::string term;
    if (i == 0) {
      term = c.str();
    } else {
      const std::string power = i == 1 ? root : root + "^" + std::to_string(i);
      if (c == 1)
        term = power;
      else if (c == -1)
        term = "-" + power;
      else
        term = c.str() + "*" + power;
    }
    if (!out.empty() && term.front() != '-') out += "+";
    out += term;
  }
  return out;
}

}  // namespace qslab
