#include "cat0/dyadic.hpp"

#include <cmath>
#include <cstdlib>

namespace cat0 {

namespace {

std::int64_t checked(__int128 v, const char* what) {
  if (v > INT64_MAX || v < INT64_MIN) throw std::overflow_error(std::string("dyadic overflow in ") + what);
  return static_cast<std::int64_t>(v);
}

}  // namespace

void Dyadic::normalize() {
  while (exp_ > 0 && num_ % 2 == 0) {
    num_ /= 2;
    --exp_;
  }
  if (num_ == 0) exp_ = 0;
}

double Dyadic::to_double() const { return std::ldexp(static_cast<double>(num_), -exp_); }

Dyadic Dyadic::scale_pow2(int p) const {
  Dyadic r;
  if (p >= 0) {
    if (p > 62) throw std::overflow_error("dyadic scale_pow2");
    r.num_ = checked(static_cast<__int128>(num_) << p, "scale_pow2");
    r.exp_ = exp_;
  } else {
    r.num_ = num_;
    r.exp_ = exp_ - p;
    if (r.exp_ > 200) throw std::overflow_error("dyadic exponent too large");
  }
  r.normalize();
  return r;
}

Dyadic operator+(const Dyadic& a, const Dyadic& b) {
  int e = std::max(a.exp_, b.exp_);
  if (e > 126) throw std::overflow_error("dyadic add exponent");
  __int128 an = static_cast<__int128>(a.num_) << (e - a.exp_);
  __int128 bn = static_cast<__int128>(b.num_) << (e - b.exp_);
  Dyadic r;
  r.num_ = checked(an + bn, "add");
  r.exp_ = e;
  r.normalize();
  return r;
}

Dyadic operator-(const Dyadic& a, const Dyadic& b) { return a + (-b); }

Dyadic operator-(const Dyadic& a) {
  Dyadic r;
  r.num_ = -a.num_;
  r.exp_ = a.exp_;
  return r;
}

Dyadic operator*(const Dyadic& a, const Dyadic& b) {
  Dyadic r;
  r.num_ = checked(static_cast<__int128>(a.num_) * b.num_, "mul");
  r.exp_ = a.exp_ + b.exp_;
  if (r.exp_ > 200) throw std::overflow_error("dyadic mul exponent");
  r.normalize();
  return r;
}

bool operator<(const Dyadic& a, const Dyadic& b) {
  int e = std::max(a.exp_, b.exp_);
  __int128 an = static_cast<__int128>(a.num_) << (e - a.exp_);
  __int128 bn = static_cast<__int128>(b.num_) << (e - b.exp_);
  return an < bn;
}

std::string Dyadic::str() const {
  if (exp_ == 0) return std::to_string(num_);
  return std::to_string(num_) + "/2^" + std::to_string(exp_);
}

Dyadic Dyadic::parse(const std::string& text) {
  if (text.empty()) throw std::invalid_argument("empty dyadic literal");
  auto slash = text.find('/');
  if (slash != std::string::npos) {
    std::int64_t k = std::stoll(text.substr(0, slash));
    std::string den = text.substr(slash + 1);
    int e = 0;
    if (den.rfind("2^", 0) == 0) {
      e = std::stoi(den.substr(2));
    } else {
      std::int64_t m = std::stoll(den);
      if (m <= 0) throw std::invalid_argument("dyadic denominator must be positive");
      while (m % 2 == 0) {
        m /= 2;
        ++e;
      }
      if (m != 1) throw std::invalid_argument("denominator is not a power of two: " + text);
    }
    return Dyadic(k, e);
  }
  auto dot = text.find('.');
  if (dot != std::string::npos) {
    // Decimal literal; must be exactly representable as a dyadic.
    std::string frac = text.substr(dot + 1);
    std::int64_t whole = dot == 0 ? 0 : std::stoll(text.substr(0, dot));
    bool neg = text[0] == '-';
    std::int64_t fnum = frac.empty() ? 0 : std::stoll(frac);
    std::int64_t fden = 1;
    for (size_t i = 0; i < frac.size(); ++i) fden *= 10;
    // value = whole + fnum/fden; 10^k = 2^k * 5^k
    int e = 0;
    std::int64_t d = fden;
    while (d % 2 == 0) {
      d /= 2;
      ++e;
    }
    if (fnum % d != 0) throw std::invalid_argument("decimal is not dyadic: " + text);
    std::int64_t k = fnum / d;
    Dyadic f(neg ? -k : k, e);
    return Dyadic(whole) + f;
  }
  return Dyadic(std::stoll(text));
}

}  // namespace cat0
