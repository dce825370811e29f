#include "treealpha/bounds.hpp"

#include <cmath>

#include "treealpha/errors.hpp"

namespace ta {

namespace {

double big_log2(const BigInt& v) {
  if (v <= 0) return v == 0 ? -INFINITY : NAN;
  const auto bits = boost::multiprecision::msb(v);
  if (bits < 52) return std::log2(v.convert_to<double>());
  BigInt top = v >> (bits - 52);
  return static_cast<double>(bits - 52) + std::log2(top.convert_to<double>());
}

std::string wrap(const std::string& s) { return s.find_first_of("^*+") == std::string::npos ? s : "(" + s + ")"; }

}  // namespace

BigValue::BigValue(BigInt v) : exact_(std::move(v)) {
  text_ = exact_->str();
  log2_ = big_log2(*exact_);
}

BigValue BigValue::symbolic(std::string text, double log2) {
  BigValue b;
  b.exact_.reset();
  b.text_ = std::move(text);
  b.log2_ = log2;
  return b;
}

const BigInt& BigValue::exact() const {
  if (!exact_) throw PreconditionError("value " + text_ + " is too large to materialise");
  return *exact_;
}

std::string BigValue::str() const { return text_; }

BigValue operator+(const BigValue& a, const BigValue& b) {
  if (a.is_exact() && b.is_exact()) return BigValue(a.exact() + b.exact());
  return BigValue::symbolic(a.text_ + "+" + b.text_, std::max(a.log2_, b.log2_) + 1);
}

BigValue operator*(const BigValue& a, const BigValue& b) {
  if (a.is_exact() && b.is_exact()) return BigValue(a.exact() * b.exact());
  return BigValue::symbolic(wrap(a.text_) + "*" + wrap(b.text_), a.log2_ + b.log2_);
}

BigValue pow(const BigValue& base, const BigValue& exponent) {
  if (exponent.is_exact() && exponent.exact() == 0) return BigValue(BigInt(1));
  if (base.is_exact() && (base.exact() == 0 || base.exact() == 1)) return base;
  const double est = exponent.is_exact() ? exponent.exact().convert_to<double>() * base.log2_
                                         : std::exp2(std::min(exponent.log2_, 1000.0)) * base.log2_;
  if (base.is_exact() && exponent.is_exact() && est <= BigValue::kSymbolicBits)
    return BigValue(boost::multiprecision::pow(base.exact(), exponent.exact().convert_to<unsigned>()));
  return BigValue::symbolic(wrap(base.text_) + "^" + wrap(exponent.text_), est);
}

int ceil_log2(long long n) {
  int r = 0;
  while ((1LL << r) < n) ++r;
  return r;
}

BigValue d_of_t(int t, int c1, int c2) {
  BigValue lg(BigInt(ceil_log2(t)));
  return BigValue(BigInt(3 * c1)) * pow(BigValue(BigInt(t)), BigValue(BigInt(9))) * pow(lg, BigValue(BigInt(c2))) +
         BigValue(BigInt(22) * t);
}

BigValue d_alg(int k, int lambda) {
  return BigValue(BigInt(k)) * pow(BigValue(BigInt(2)), BigValue(BigInt(lambda) * k));
}

BigValue layered_constant(int k, int gamma, int t, int lambda) {
  return pow(BigValue(BigInt(512)) * d_alg(k, lambda), pow(BigValue(BigInt(gamma)), BigValue(BigInt(2 * t))));
}

BigValue boosting_eta(int k, int t) { return layered_constant(16 * (k - 1), 3 * t + 1, t, 6 * t); }

BoundsTable bounds(const BoundsInputs& in) {
  if (in.t < 1 || in.k < 1 || in.lambda < 1 || in.s < 1 || in.c1 < 1 || in.c2 < 1)
    throw PreconditionError("bounds: inputs must be positive");
  if (in.gamma < 2 || in.big_c < 2) throw PreconditionError("bounds: gamma and C must be at least 2");
  BoundsTable b;
  b.in = in;
  const BigValue big_c(BigInt(in.big_c));
  const BigValue gamma(BigInt(in.gamma));
  const BigValue eight(BigInt(8));
  b.d_t = d_of_t(in.t, in.c1, in.c2);
  for (int i = 0; i <= in.s; ++i) {
    BigValue e(BigInt(in.s - i));
    b.c_seq.push_back(pow(pow(eight, e) * big_c, pow(gamma, e)));
  }
  const BigValue base = big_c * pow(eight, BigValue(BigInt(in.s)));
  const BigValue gamma_s = pow(gamma, BigValue(BigInt(in.s)));
  for (int i = 0; i <= in.s; ++i)
    b.f_seq.push_back(BigValue(BigInt(in.t)) * pow(base, BigValue(BigInt(2 * i)) * gamma_s));
  const BigValue gamma_2t = pow(gamma, BigValue(BigInt(2 * in.t)));
  b.alpha_bound = pow(BigValue(BigInt(512)) * big_c, gamma_2t);
  b.d_alg = d_alg(in.k, in.lambda);
  b.big_t = pow(BigValue(BigInt(512)) * b.d_alg, gamma_2t);
  b.eta = layered_constant(in.k, in.gamma, in.t, in.lambda);
  return b;
}

}  // namespace ta
