#pragma once

#include <mclift/framework.hpp>
#include <mclift/rational.hpp>

#include <string>

namespace mclift {

/// (x, y) -> a*x + b*y + c.
struct AffineFunction {
  Rational a = 0;
  Rational b = 0;
  Rational c = 0;

  Rational operator()(const Rational& x, const Rational& y) const { return a * x + b * y + c; }
  Rational operator()(const Point& p) const { return (*this)(p.x, p.y); }

  bool is_zero() const { return a == 0 && b == 0 && c == 0; }
  bool is_constant() const { return a == 0 && b == 0; }

  AffineFunction& operator+=(const AffineFunction& o) {
    a += o.a;
    b += o.b;
    c += o.c;
    return *this;
  }
  AffineFunction& operator-=(const AffineFunction& o) {
    a -= o.a;
    b -= o.b;
    c -= o.c;
    return *this;
  }
  friend AffineFunction operator+(AffineFunction l, const AffineFunction& r) { return l += r; }
  friend AffineFunction operator-(AffineFunction l, const AffineFunction& r) { return l -= r; }
  friend AffineFunction operator-(const AffineFunction& f) { return {-f.a, -f.b, -f.c}; }
  friend AffineFunction operator*(const Rational& s, const AffineFunction& f) {
    return {s * f.a, s * f.b, s * f.c};
  }
  friend bool operator==(const AffineFunction& l, const AffineFunction& r) {
    return l.a == r.a && l.b == r.b && l.c == r.c;
  }
};

/// x -> det(p - q, p - x), the unit-weight fold across the directed segment p->q.
inline AffineFunction fold_function(const Point& p, const Point& q) {
  const Point u = p - q;
  return {u.y, -u.x, det(u, p)};
}

inline std::string to_string(const AffineFunction& f) {
  return to_string(f.a) + " " + to_string(f.b) + " " + to_string(f.c);
}

}  // namespace mclift
