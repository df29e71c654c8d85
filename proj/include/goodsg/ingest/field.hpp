#pragma once

/**
 * @file field.hpp
 * @brief Exact coefficient fields: the rationals (GMP) and prime fields Z/p.
 *
 * Both expose the same small interface so the linear algebra in
 * value_space.hpp is written once as templates.
 */

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace goodsg::ingest {

using Rational = mpq_class;

struct FieldMismatch : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Parses "n", "-n" or "n/d" into a canonical rational.
inline Rational parse_rational(const std::string& text) {
  Rational q;
  if (q.set_str(text, 10) != 0) throw std::invalid_argument("bad rational coefficient: '" + text + "'");
  if (q.get_den() == 0) throw std::invalid_argument("zero denominator: '" + text + "'");
  q.canonicalize();
  return q;
}

struct RationalField {
  using Element = Rational;

  Element zero() const { return 0; }
  Element one() const { return 1; }
  Element from_rational(const Rational& q) const { return q; }
  bool is_zero(const Element& a) const { return sgn(a) == 0; }
  Element add(const Element& a, const Element& b) const { return a + b; }
  Element sub(const Element& a, const Element& b) const { return a - b; }
  Element mul(const Element& a, const Element& b) const { return a * b; }
  Element inv(const Element& a) const {
    if (is_zero(a)) throw std::domain_error("inverse of zero");
    return 1 / a;
  }
  /// a -= b * c
  void sub_mul(Element& a, const Element& b, const Element& c) const { a -= b * c; }

  /// Fields with infinitely many elements: a finite union of proper subspaces never covers.
  bool infinite() const { return true; }
  std::uint64_t characteristic() const { return 0; }
  std::string name() const { return "Q"; }
};

class PrimeField {
 public:
  using Element = std::uint64_t;

  explicit PrimeField(std::uint64_t p) : p_(p) {
    if (p < 2 || p >= (std::uint64_t{1} << 32)) throw std::invalid_argument("prime must lie in [2, 2^32)");
    for (std::uint64_t d = 2; d * d <= p; ++d)
      if (p % d == 0) throw std::invalid_argument(std::to_string(p) + " is not prime");
  }

  Element zero() const { return 0; }
  Element one() const { return 1; }
  bool is_zero(Element a) const { return a == 0; }
  Element add(Element a, Element b) const {
    Element r = a + b;
    return r >= p_ ? r - p_ : r;
  }
  Element sub(Element a, Element b) const { return a >= b ? a - b : a + p_ - b; }
  Element mul(Element a, Element b) const {
    return static_cast<Element>(static_cast<unsigned __int128>(a) * b % p_);
  }
  Element pow(Element a, std::uint64_t e) const {
    Element r = 1;
    while (e) {
      if (e & 1) r = mul(r, a);
      a = mul(a, a);
      e >>= 1;
    }
    return r;
  }
  Element inv(Element a) const {
    if (a == 0) throw std::domain_error("inverse of zero");
    return pow(a, p_ - 2);
  }
  void sub_mul(Element& a, Element b, Element c) const { a = sub(a, mul(b, c)); }

  Element from_integer(const mpz_class& z) const {
    mpz_class r = z % mpz_class(std::to_string(p_));
    if (r < 0) r += mpz_class(std::to_string(p_));
    return static_cast<Element>(std::stoull(r.get_str()));
  }
  Element from_rational(const Rational& q) const {
    Element den = from_integer(q.get_den());
    if (den == 0) throw FieldMismatch("denominator " + q.get_den().get_str() + " vanishes mod " + std::to_string(p_));
    return mul(from_integer(q.get_num()), inv(den));
  }

  bool infinite() const { return false; }
  std::uint64_t characteristic() const { return p_; }
  std::string name() const { return "F_" + std::to_string(p_); }

 private:
  std::uint64_t p_;
};

}  // namespace goodsg::ingest
