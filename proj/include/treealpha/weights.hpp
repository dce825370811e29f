#pragma once

#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "treealpha/graph.hpp"

namespace ta {

using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

// "3/7", "2", "0.125", "1e-3". Decimal forms are converted exactly.
Rational parse_rational(std::string_view text);
std::string to_string(const Rational& r);
double to_double(const Rational& r);

enum class WeightMode { exact, floating };

inline constexpr double kFloatTolerance = 1e-9;

// Nonnegative vertex weights with total at most 1.
// Floating mode stores the exact binary value of each double and compares with tolerance.
class WeightFn {
 public:
  WeightFn() = default;
  explicit WeightFn(std::vector<Rational> values, WeightMode mode = WeightMode::exact);

  static WeightFn zero(int n);
  static WeightFn uniform(int n);
  static WeightFn uniform_on(int n, const VertexSet& support);
  static WeightFn from_doubles(const std::vector<double>& values);

  int order() const { return static_cast<int>(values_.size()); }
  const Rational& operator[](Vertex v) const { return values_[v]; }
  const std::vector<Rational>& values() const { return values_; }
  WeightMode mode() const { return mode_; }

  Rational of(const VertexSet& s) const;
  Rational total() const;
  bool normal() const;

  // a <= b, with tolerance in floating mode.
  bool leq(const Rational& a, const Rational& b) const;
  bool gt(const Rational& a, const Rational& b) const { return !leq(a, b); }

  // Weights on the local ids of a subgraph, without renormalisation.
  WeightFn restricted(const InducedSubgraph& sub) const;
  // factor * w on the local ids of a subgraph; the result must still total at most 1.
  WeightFn scaled(const InducedSubgraph& sub, const Rational& factor) const;

 private:
  std::vector<Rational> values_;
  WeightMode mode_ = WeightMode::exact;
};

}  // namespace ta
