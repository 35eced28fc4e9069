#pragma once

#include <cstdint>
#include <cstdlib>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace ppcd {

/// Small dense integer matrix, row major. All design arithmetic is exact.
using IntMatrix = std::vector<std::vector<int>>;

IntMatrix transpose(const IntMatrix& a);
IntMatrix multiply(const IntMatrix& a, const IntMatrix& b);
IntMatrix kronecker(const IntMatrix& a, const IntMatrix& b);
IntMatrix scaled_identity(int n, int c);
IntMatrix block_diagonal(const std::vector<IntMatrix>& blocks);

/// Exact fraction, reduced with positive denominator.
struct Rational {
  long long num = 0;
  long long den = 1;

  Rational() = default;
  Rational(long long n, long long d = 1) : num(n), den(d) {
    if (den == 0) throw std::invalid_argument("Rational: zero denominator");
    if (den < 0) { num = -num; den = -den; }
    long long g = std::gcd(num < 0 ? -num : num, den);
    if (g > 1) { num /= g; den /= g; }
  }

  // sums and products reduce by gcd up front so that denominators stay at
  // the lcm instead of the full product (designs with many factors push
  // denominators near 2^n and the naive forms overflow)
  friend Rational operator+(const Rational& a, const Rational& b) {
    long long g = std::gcd(a.den, b.den);
    return Rational(a.num * (b.den / g) + b.num * (a.den / g), (a.den / g) * b.den);
  }
  friend Rational operator-(const Rational& a, const Rational& b) {
    long long g = std::gcd(a.den, b.den);
    return Rational(a.num * (b.den / g) - b.num * (a.den / g), (a.den / g) * b.den);
  }
  friend Rational operator*(const Rational& a, const Rational& b) {
    long long g1 = std::gcd(a.num < 0 ? -a.num : a.num, b.den);
    long long g2 = std::gcd(b.num < 0 ? -b.num : b.num, a.den);
    return Rational((a.num / g1) * (b.num / g2), (a.den / g2) * (b.den / g1));
  }
  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num == b.num && a.den == b.den;
  }
  friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }

  double value() const { return static_cast<double>(num) / static_cast<double>(den); }
  std::string str() const {
    return den == 1 ? std::to_string(num) : std::to_string(num) + "/" + std::to_string(den);
  }
};

}  // namespace ppcd
