#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace cat0 {

/// Exact dyadic rational k / 2^e. Canonical form has odd numerator or e == 0.
/// All diagram-calculus arithmetic runs on these; no floating point.
class Dyadic {
 public:
  Dyadic() : num_(0), exp_(0) {}
  Dyadic(std::int64_t k) : num_(k), exp_(0) {}
  Dyadic(std::int64_t numerator, int exponent) : num_(numerator), exp_(exponent) {
    if (exponent < 0) throw std::invalid_argument("dyadic exponent must be >= 0");
    normalize();
  }

  std::int64_t numerator() const { return num_; }
  int exponent() const { return exp_; }

  bool is_integer() const { return exp_ == 0; }
  bool is_zero() const { return num_ == 0; }

  double to_double() const;

  /// Multiply by 2^p (p may be negative); result must stay dyadic.
  Dyadic scale_pow2(int p) const;

  friend Dyadic operator+(const Dyadic& a, const Dyadic& b);
  friend Dyadic operator-(const Dyadic& a, const Dyadic& b);
  friend Dyadic operator-(const Dyadic& a);
  friend Dyadic operator*(const Dyadic& a, const Dyadic& b);

  friend bool operator==(const Dyadic& a, const Dyadic& b) {
    return a.num_ == b.num_ && a.exp_ == b.exp_;
  }
  friend bool operator!=(const Dyadic& a, const Dyadic& b) { return !(a == b); }
  friend bool operator<(const Dyadic& a, const Dyadic& b);
  friend bool operator<=(const Dyadic& a, const Dyadic& b) { return a < b || a == b; }
  friend bool operator>(const Dyadic& a, const Dyadic& b) { return b < a; }
  friend bool operator>=(const Dyadic& a, const Dyadic& b) { return b <= a; }

  /// "k/2^e", or plain integer when e == 0.
  std::string str() const;
  /// Accepts "k", "k/2^e", "k/m" with m a power of two, and decimals like "0.75".
  static Dyadic parse(const std::string& text);

 private:
  void normalize();
  std::int64_t num_;
  int exp_;
};

}  // namespace cat0
