#pragma once

#include <gmpxx.h>

#include <cctype>
#include <optional>
#include <string>
#include <string_view>

namespace mclift {

// mpq_class keeps numerator/denominator canonical (lowest terms, positive
// denominator) after every arithmetic operation.
using Rational = mpq_class;
using Integer = mpz_class;

inline std::string to_string(const Rational& q) { return q.get_str(); }

/// num/den in lowest terms; mpq_class's two-argument constructor does not reduce.
inline Rational make_rational(long num, long den = 1) {
  Rational q{Integer(num), Integer(den)};
  q.canonicalize();
  return q;
}

namespace detail {

inline bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

}  // namespace detail

/// Accepts `[-]digits` or `[-]digits/digits` with a positive denominator.
/// Non-canonical input such as `2/4` is accepted and reduced.
inline std::optional<Rational> parse_rational(std::string_view text) {
  bool negative = false;
  if (!text.empty() && text.front() == '-') {
    negative = true;
    text.remove_prefix(1);
  }
  std::string_view num = text;
  std::string_view den;
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    num = text.substr(0, slash);
    den = text.substr(slash + 1);
    if (!detail::all_digits(den)) return std::nullopt;
  }
  if (!detail::all_digits(num)) return std::nullopt;

  Rational q;
  q.get_num() = Integer(std::string(num), 10);
  q.get_den() = den.empty() ? Integer(1) : Integer(std::string(den), 10);
  if (q.get_den() == 0) return std::nullopt;
  q.canonicalize();
  if (negative) q = -q;
  return q;
}

/// Twice the signed area spanned by (ux,uy) and (vx,vy).
inline Rational det2(const Rational& ux, const Rational& uy, const Rational& vx,
                     const Rational& vy) {
  return ux * vy - uy * vx;
}

}  // namespace mclift
