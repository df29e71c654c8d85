#pragma once

/**
 * @file presentation.hpp
 * @brief Curve singularities given by branch parametrizations.
 *
 * A presentation lists ring generators; each generator is seen on every
 * branch as a power series in that branch's local parameter t_i. The local
 * ring is the complete algebra the generators span together with 1.
 */

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "../lattice.hpp"
#include "field.hpp"

namespace goodsg::ingest {

/// A power series known up to t^truncation; higher terms are dropped by every operation.
template <class Field>
class BranchSeries {
 public:
  using Element = typename Field::Element;

  BranchSeries(const Field& f, Int truncation) : field_(f), coeffs_(static_cast<std::size_t>(truncation) + 1, f.zero()) {
    if (truncation < 0) throw std::invalid_argument("negative truncation");
  }

  Int truncation() const noexcept { return static_cast<Int>(coeffs_.size()) - 1; }
  const Element& operator[](Int e) const { return coeffs_.at(static_cast<std::size_t>(e)); }
  Element& operator[](Int e) { return coeffs_.at(static_cast<std::size_t>(e)); }
  const std::vector<Element>& coefficients() const noexcept { return coeffs_; }

  /// Least exponent with a nonzero coefficient; nullopt when the series vanishes up to the truncation.
  std::optional<Int> order() const {
    for (std::size_t e = 0; e < coeffs_.size(); ++e)
      if (!field_.is_zero(coeffs_[e])) return static_cast<Int>(e);
    return std::nullopt;
  }

  BranchSeries& operator+=(const BranchSeries& o) {
    check(o);
    for (std::size_t e = 0; e < coeffs_.size(); ++e) coeffs_[e] = field_.add(coeffs_[e], o.coeffs_[e]);
    return *this;
  }

  friend BranchSeries operator*(const BranchSeries& a, const BranchSeries& b) {
    a.check(b);
    BranchSeries r(a.field_, a.truncation());
    const std::size_t n = a.coeffs_.size();
    for (std::size_t i = 0; i < n; ++i) {
      if (a.field_.is_zero(a.coeffs_[i])) continue;
      for (std::size_t j = 0; i + j < n; ++j) {
        if (a.field_.is_zero(b.coeffs_[j])) continue;
        r.coeffs_[i + j] = a.field_.add(r.coeffs_[i + j], a.field_.mul(a.coeffs_[i], b.coeffs_[j]));
      }
    }
    return r;
  }

 private:
  void check(const BranchSeries& o) const {
    if (o.coeffs_.size() != coeffs_.size()) throw std::invalid_argument("series truncations differ");
  }

  Field field_;
  std::vector<Element> coeffs_;
};

/// Coefficient field of a presentation: the rationals, or Z/p.
struct FieldSpec {
  std::optional<std::uint64_t> prime;
  bool rational() const noexcept { return !prime.has_value(); }
};

/// Sparse series as read from input: exponent -> exact rational coefficient.
using SparseSeries = std::map<Int, Rational>;

struct CurvePresentation {
  std::size_t branches = 0;
  FieldSpec field;
  /// generators[g][i] is generator g restricted to branch i.
  std::vector<std::vector<SparseSeries>> generators;
  std::string name;
};

/**
 * Checks shape and locality, and removes a common constant term from each
 * generator (1 is in the ring anyway). Throws std::invalid_argument on a
 * malformed presentation.
 */
inline CurvePresentation normalized(CurvePresentation c) {
  if (c.branches == 0) throw std::invalid_argument("presentation needs at least one branch");
  if (c.generators.empty()) throw std::invalid_argument("presentation has no generators");
  bool nonzerodivisor = false;
  for (std::size_t g = 0; g < c.generators.size(); ++g) {
    auto& gen = c.generators[g];
    if (gen.size() != c.branches)
      throw std::invalid_argument("generator " + std::to_string(g) + " has " + std::to_string(gen.size()) +
                                  " branch series, expected " + std::to_string(c.branches));
    std::optional<Rational> constant;
    bool all_nonzero = true;
    for (auto& series : gen) {
      for (auto it = series.begin(); it != series.end();) {
        if (it->first < 0) throw std::invalid_argument("negative exponent in generator " + std::to_string(g));
        it = sgn(it->second) == 0 ? series.erase(it) : std::next(it);
      }
      Rational c0 = series.count(0) ? series.at(0) : Rational(0);
      if (constant && *constant != c0)
        throw std::invalid_argument("generator " + std::to_string(g) + " takes different values at the branch centres");
      constant = c0;
      if (series.empty()) all_nonzero = false;
    }
    if (constant && sgn(*constant) != 0)
      for (auto& series : gen) series.erase(0);
    bool nonzero_everywhere = true;
    for (auto& series : gen)
      if (series.empty()) nonzero_everywhere = false;
    nonzerodivisor = nonzerodivisor || (all_nonzero && nonzero_everywhere);
  }
  if (!nonzerodivisor) throw std::invalid_argument("no generator is nonzero on every branch");
  return c;
}

/// Calls fn with the concrete field object of the presentation.
template <class Fn>
decltype(auto) with_field(const CurvePresentation& c, Fn&& fn) {
  if (c.field.rational()) return fn(RationalField{});
  return fn(PrimeField(*c.field.prime));
}

}  // namespace goodsg::ingest
