#pragma once

#include <optional>
#include <string>
#include <vector>

#include "treealpha/weights.hpp"

namespace ta {

// An exact integer, or a symbolic power once the exact value would pass kSymbolicBits.
class BigValue {
 public:
  static constexpr double kSymbolicBits = 4'000'000;

  BigValue() : BigValue(BigInt(0)) {}
  BigValue(BigInt v);  // NOLINT(google-explicit-constructor)
  static BigValue symbolic(std::string text, double log2);

  bool is_exact() const { return exact_.has_value(); }
  const BigInt& exact() const;  // throws for symbolic values
  double log2() const { return log2_; }
  std::string str() const;

  friend BigValue operator+(const BigValue& a, const BigValue& b);
  friend BigValue operator*(const BigValue& a, const BigValue& b);
  friend BigValue pow(const BigValue& base, const BigValue& exponent);

  // Symbolic values exceed every integer that fits in memory.
  friend bool operator<=(const BigInt& a, const BigValue& b) { return !b.is_exact() || a <= b.exact(); }

 private:
  std::optional<BigInt> exact_;
  std::string text_;
  double log2_ = 0;
};

struct BoundsInputs {
  int t = 1;
  int k = 2;
  int gamma = 2;
  int lambda = 1;
  int big_c = 2;  // divisor C in the neighbourhood bound
  int s = 1;
  int c1 = 1;
  int c2 = 1;
};

struct BoundsTable {
  BoundsInputs in;
  BigValue d_t;                 // 3 c1 t^9 ceil(log2 t)^c2 + 22 t
  std::vector<BigValue> c_seq;  // c_i = (8^{s-i} C)^{gamma^{s-i}}, i = 0..s
  std::vector<BigValue> f_seq;  // f(i) = t (C 8^s)^{2 i gamma^s}, i = 0..s
  BigValue alpha_bound;         // (512 C)^{gamma^{2t}}
  BigValue d_alg;               // k 2^{lambda k}
  BigValue big_t;               // (512 d_alg)^{gamma^{2t}}
  BigValue eta;                 // layered constant c(k, gamma, t, lambda) = (512 k 2^{lambda k})^{gamma^{2t}}
};

// Requires every input >= 1 and gamma, C >= 2.
BoundsTable bounds(const BoundsInputs& in);

BigValue d_of_t(int t, int c1 = 1, int c2 = 1);
BigValue d_alg(int k, int lambda);
BigValue layered_constant(int k, int gamma, int t, int lambda);
// eta = c(16(k-1), 3t+1, t, 6t), the constant behind the boosting threshold 4 eta log^2 n.
BigValue boosting_eta(int k, int t);

int ceil_log2(long long n);  // 0 for n <= 1

}  // namespace ta
