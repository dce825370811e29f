#include "treealpha/weights.hpp"

#include <cctype>
#include <cmath>

#include "treealpha/errors.hpp"

namespace ta {

namespace {

BigInt parse_int(std::string_view s) {
  if (s.empty()) throw FormatError("empty number");
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) throw FormatError("bad number: " + std::string(s));
  for (std::size_t j = i; j < s.size(); ++j)
    if (!std::isdigit(static_cast<unsigned char>(s[j]))) throw FormatError("bad number: " + std::string(s));
  // Boost reads a leading 0 as an octal prefix.
  std::string digits(s.substr(i));
  digits.erase(0, std::min(digits.find_first_not_of('0'), digits.size() - 1));
  BigInt r(digits);
  return s[0] == '-' ? BigInt(-r) : r;
}

BigInt pow10(long long e) {
  BigInt r = 1;
  for (long long i = 0; i < e; ++i) r *= 10;
  return r;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    BigInt num = parse_int(text.substr(0, slash));
    BigInt den = parse_int(text.substr(slash + 1));
    if (den == 0) throw FormatError("zero denominator: " + std::string(text));
    return Rational(num, den);
  }
  long long exponent = 0;
  std::string_view mant = text;
  if (auto e = text.find_first_of("eE"); e != std::string_view::npos) {
    mant = text.substr(0, e);
    exponent = std::stoll(std::string(text.substr(e + 1)));
  }
  std::string digits;
  long long frac = 0;
  bool seen_dot = false;
  for (char c : mant) {
    if (c == '.') {
      if (seen_dot) throw FormatError("bad number: " + std::string(text));
      seen_dot = true;
    } else {
      digits.push_back(c);
      if (seen_dot) ++frac;
    }
  }
  BigInt num = parse_int(digits);
  long long shift = exponent - frac;
  if (shift >= 0) return Rational(num * pow10(shift));
  return Rational(num, pow10(-shift));
}

std::string to_string(const Rational& r) {
  auto num = boost::multiprecision::numerator(r);
  auto den = boost::multiprecision::denominator(r);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

double to_double(const Rational& r) { return r.convert_to<double>(); }

WeightFn::WeightFn(std::vector<Rational> values, WeightMode mode) : values_(std::move(values)), mode_(mode) {
  for (std::size_t v = 0; v < values_.size(); ++v) {
    if (values_[v] < 0) throw FormatError("negative weight at vertex " + std::to_string(v));
    if (!leq(values_[v], Rational(1))) throw FormatError("weight above 1 at vertex " + std::to_string(v));
  }
  if (!leq(total(), Rational(1))) throw FormatError("weights total " + to_string(total()) + " exceeds 1");
}

WeightFn WeightFn::zero(int n) { return WeightFn(std::vector<Rational>(static_cast<std::size_t>(n), Rational(0))); }

WeightFn WeightFn::uniform(int n) {
  if (n == 0) return WeightFn();
  return WeightFn(std::vector<Rational>(static_cast<std::size_t>(n), Rational(1, n)));
}

WeightFn WeightFn::uniform_on(int n, const VertexSet& support) {
  std::vector<Rational> v(static_cast<std::size_t>(n), Rational(0));
  for (auto x : support) v[x] = Rational(1, static_cast<long long>(support.size()));
  return WeightFn(std::move(v));
}

WeightFn WeightFn::from_doubles(const std::vector<double>& values) {
  std::vector<Rational> v;
  v.reserve(values.size());
  for (double d : values) {
    if (!std::isfinite(d)) throw FormatError("non-finite weight");
    v.emplace_back(d);
  }
  return WeightFn(std::move(v), WeightMode::floating);
}

Rational WeightFn::of(const VertexSet& s) const {
  Rational r = 0;
  for (auto v : s) r += values_[v];
  return r;
}

Rational WeightFn::total() const {
  Rational r = 0;
  for (const auto& x : values_) r += x;
  return r;
}

bool WeightFn::normal() const {
  if (mode_ == WeightMode::exact) return total() == 1;
  return std::abs(to_double(total() - 1)) <= kFloatTolerance;
}

bool WeightFn::leq(const Rational& a, const Rational& b) const {
  if (mode_ == WeightMode::exact) return a <= b;
  return to_double(a - b) <= kFloatTolerance;
}

WeightFn WeightFn::restricted(const InducedSubgraph& sub) const {
  std::vector<Rational> v;
  v.reserve(sub.origin.size());
  for (auto p : sub.origin) v.push_back(values_[p]);
  return WeightFn(std::move(v), mode_);
}

WeightFn WeightFn::scaled(const InducedSubgraph& sub, const Rational& factor) const {
  std::vector<Rational> v;
  v.reserve(sub.origin.size());
  for (auto p : sub.origin) v.push_back(values_[p] * factor);
  return WeightFn(std::move(v), mode_);
}

}  // namespace ta
