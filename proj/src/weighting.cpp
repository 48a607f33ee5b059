#include "clockfree/weighting.hpp"

#include <numeric>
#include <stdexcept>

#include "clockfree/errors.hpp"

namespace clockfree {

Rational parse_rational(const std::string& text) {
  auto slash = text.find('/');
  try {
    std::size_t used = 0;
    if (slash == std::string::npos) {
      long long v = std::stoll(text, &used);
      if (used != text.size()) throw std::invalid_argument("trailing");
      return Rational(v);
    }
    std::string a = text.substr(0, slash), b = text.substr(slash + 1);
    long long p = std::stoll(a, &used);
    if (used != a.size()) throw std::invalid_argument("trailing");
    long long q = std::stoll(b, &used);
    if (used != b.size()) throw std::invalid_argument("trailing");
    if (q == 0) throw std::invalid_argument("zero denominator");
    return Rational(p, q);
  } catch (const std::logic_error&) {
    throw std::invalid_argument("bad rational '" + text + "'");
  }
}

std::string format_rational(const Rational& r) {
  if (r.denominator() == 1) return std::to_string(r.numerator());
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

Weighting Weighting::uniform(int n) { return uniform_on(n, VertexSet::range(n)); }

Weighting Weighting::uniform_on(int n, const VertexSet& S) {
  if (S.empty()) throw std::invalid_argument("uniform weighting on an empty set");
  Weighting w;
  w.num_.assign(n, 0);
  for (int v : S) w.num_[v] = 1;
  w.den_ = S.size();
  return w;
}

Weighting Weighting::from_numerators(std::vector<std::int64_t> numerators, std::int64_t denominator) {
  if (denominator <= 0) throw std::invalid_argument("weighting denominator must be positive");
  std::int64_t total = 0;
  for (auto x : numerators) {
    if (x < 0) throw std::invalid_argument("negative weight");
    total += x;
  }
  if (total != denominator) throw std::invalid_argument("weights do not sum to 1");
  std::int64_t g = denominator;
  for (auto x : numerators) g = std::gcd(g, x);
  Weighting w;
  w.num_ = std::move(numerators);
  for (auto& x : w.num_) x /= g;
  w.den_ = denominator / g;
  return w;
}

Weighting Weighting::from_rationals(const std::vector<Rational>& values) {
  std::int64_t den = 1;
  for (auto& r : values) {
    if (r < 0) throw std::invalid_argument("negative weight");
    std::int64_t l = std::lcm(den, r.denominator());
    if (l <= 0 || l > (std::int64_t{1} << 40)) throw ScaleError("weight denominators too large");
    den = l;
  }
  std::vector<std::int64_t> num;
  for (auto& r : values) num.push_back(r.numerator() * (den / r.denominator()));
  return from_numerators(std::move(num), den);
}

std::int64_t Weighting::sum(const VertexSet& X) const {
  std::int64_t s = 0;
  for (int v : X)
    if (v < order()) s += num_[v];
  return s;
}

bool Weighting::exceeds(const VertexSet& X, const Rational& c) const {
  __int128 lhs = static_cast<__int128>(sum(X)) * c.denominator();
  __int128 rhs = static_cast<__int128>(c.numerator()) * den_;
  return lhs > rhs;
}

Weighting Weighting::restrict(const std::vector<int>& to_parent) const {
  std::vector<std::int64_t> num;
  for (int v : to_parent) num.push_back(num_[v]);
  return from_numerators(std::move(num), den_);
}

}  // namespace clockfree
