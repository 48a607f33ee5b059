#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <boost/rational.hpp>

#include "clockfree/graph.hpp"

namespace clockfree {

using Rational = boost::rational<std::int64_t>;

Rational parse_rational(const std::string& text);
std::string format_rational(const Rational& r);

// Non-negative exact weights summing to 1, stored as integer numerators over
// one common denominator so set sums and threshold tests are integer math.
class Weighting {
 public:
  Weighting() = default;
  static Weighting uniform(int n);
  // Uniform on S, zero elsewhere.
  static Weighting uniform_on(int n, const VertexSet& S);
  // Numerators over a common denominator; the numerators must sum to it.
  static Weighting from_numerators(std::vector<std::int64_t> numerators, std::int64_t denominator);
  static Weighting from_rationals(const std::vector<Rational>& values);

  int order() const { return static_cast<int>(num_.size()); }
  std::int64_t denominator() const { return den_; }
  std::int64_t numerator(int v) const { return num_[v]; }
  Rational at(int v) const { return Rational(num_[v], den_); }
  Rational of(const VertexSet& X) const { return Rational(sum(X), den_); }
  std::int64_t sum(const VertexSet& X) const;
  // w(X) > c, exactly.
  bool exceeds(const VertexSet& X, const Rational& c) const;

  // Weighting on the induced subgraph given by to_parent; all mass must be inside.
  Weighting restrict(const std::vector<int>& to_parent) const;

  friend bool operator==(const Weighting&, const Weighting&) = default;

 private:
  std::vector<std::int64_t> num_;
  std::int64_t den_ = 1;
};

}  // namespace clockfree
