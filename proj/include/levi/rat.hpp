#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace levi {

// Exact rational on int64. Coordinates in this project are tiny (half-integers
// up to ~20), so overflow is not a practical concern outside weyl_dim, which
// uses a big-integer type instead.
struct Rat {
  long long num = 0;
  long long den = 1;

  Rat() = default;
  Rat(long long n) : num(n), den(1) {}
  Rat(long long n, long long d) : num(n), den(d) { normalize(); }

  void normalize() {
    if (den == 0) throw std::invalid_argument("Rat: zero denominator");
    if (den < 0) {
      num = -num;
      den = -den;
    }
    long long g = std::gcd(num < 0 ? -num : num, den);
    if (g > 1) {
      num /= g;
      den /= g;
    }
  }

  bool is_integer() const { return den == 1; }
  bool is_zero() const { return num == 0; }

  friend Rat operator+(const Rat& a, const Rat& b) {
    return Rat(a.num * b.den + b.num * a.den, a.den * b.den);
  }
  friend Rat operator-(const Rat& a, const Rat& b) {
    return Rat(a.num * b.den - b.num * a.den, a.den * b.den);
  }
  friend Rat operator*(const Rat& a, const Rat& b) {
    return Rat(a.num * b.num, a.den * b.den);
  }
  friend Rat operator/(const Rat& a, const Rat& b) {
    if (b.num == 0) throw std::domain_error("Rat: division by zero");
    return Rat(a.num * b.den, a.den * b.num);
  }
  Rat operator-() const {
    Rat r;
    r.num = -num;
    r.den = den;
    return r;
  }
  Rat& operator+=(const Rat& o) { return *this = *this + o; }
  Rat& operator-=(const Rat& o) { return *this = *this - o; }
  Rat& operator*=(const Rat& o) { return *this = *this * o; }
  Rat& operator/=(const Rat& o) { return *this = *this / o; }

  friend bool operator==(const Rat& a, const Rat& b) {
    return a.num == b.num && a.den == b.den;
  }
  friend bool operator!=(const Rat& a, const Rat& b) { return !(a == b); }
  friend bool operator<(const Rat& a, const Rat& b) {
    return a.num * b.den < b.num * a.den;
  }
  friend bool operator>(const Rat& a, const Rat& b) { return b < a; }
  friend bool operator<=(const Rat& a, const Rat& b) { return !(b < a); }
  friend bool operator>=(const Rat& a, const Rat& b) { return !(a < b); }

  int sgn() const { return num > 0 ? 1 : (num < 0 ? -1 : 0); }

  std::string str() const {
    if (den == 1) return std::to_string(num);
    return std::to_string(num) + "/" + std::to_string(den);
  }

  static Rat parse(const std::string& s) {
    auto slash = s.find('/');
    if (slash == std::string::npos) return Rat(std::stoll(s));
    return Rat(std::stoll(s.substr(0, slash)), std::stoll(s.substr(slash + 1)));
  }
};

using Weight = std::vector<Rat>;

inline Rat dot(const Weight& a, const Weight& b) {
  if (a.size() != b.size()) throw std::invalid_argument("dot: length mismatch");
  Rat s;
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

// <w, alpha^vee> = 2<w,alpha>/<alpha,alpha>
inline Rat coroot_pair(const Weight& w, const Weight& alpha) {
  return Rat(2) * dot(w, alpha) / dot(alpha, alpha);
}

inline Weight operator+(const Weight& a, const Weight& b) {
  Weight r(a);
  for (size_t i = 0; i < a.size(); ++i) r[i] += b[i];
  return r;
}
inline Weight operator-(const Weight& a, const Weight& b) {
  Weight r(a);
  for (size_t i = 0; i < a.size(); ++i) r[i] -= b[i];
  return r;
}
inline Weight operator*(const Rat& c, const Weight& a) {
  Weight r(a);
  for (auto& x : r) x *= c;
  return r;
}
inline Weight negate(const Weight& a) { return Rat(-1) * a; }

inline bool is_zero(const Weight& a) {
  for (const auto& x : a)
    if (!x.is_zero()) return false;
  return true;
}

inline std::string weight_str(const Weight& w) {
  std::string s;
  for (size_t i = 0; i < w.size(); ++i) {
    if (i) s += ",";
    s += w[i].str();
  }
  return s;
}

inline Weight parse_weight(const std::string& s) {
  Weight w;
  size_t pos = 0;
  while (pos <= s.size()) {
    auto comma = s.find(',', pos);
    std::string tok = s.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
    if (!tok.empty()) w.push_back(Rat::parse(tok));
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return w;
}

}  // namespace levi
