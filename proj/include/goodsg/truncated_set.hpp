#pragma once

/**
 * @file truncated_set.hpp
 * @brief Finite representation of good semigroups and good relative ideals.
 *
 * A good set E with minimum m and conductor c (c + N^s inside E) is fully
 * determined by its "small" elements E ∩ [m, c], through the truncation law
 *
 *     a ∈ E  <=>  a >= m  and  min(a, c) ∈ small.
 *
 * The helpers here are shared by GoodSemigroup and RelativeIdeal, including
 * the structural checks of validation.
 */

#include <algorithm>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "lattice.hpp"

namespace goodsg {

struct Violation {
  std::string rule;
  std::vector<ValueVector> witnesses;
  std::string detail;
};

struct ValidationReport {
  std::vector<Violation> violations;

  bool ok() const noexcept { return violations.empty(); }
  bool has(std::string_view rule) const {
    return std::any_of(violations.begin(), violations.end(),
                       [&](const Violation& v) { return v.rule == rule; });
  }
  void add(std::string rule, std::vector<ValueVector> witnesses, std::string detail = {}) {
    violations.push_back({std::move(rule), std::move(witnesses), std::move(detail)});
  }
};

/// Constraint on one coordinate of a searched element.
struct CoordConstraint {
  enum class Kind { exact, at_least } kind;
  Int value;

  static CoordConstraint exact(Int v) { return {Kind::exact, v}; }
  static CoordConstraint at_least(Int v) { return {Kind::at_least, v}; }
};

class TruncatedSet {
 public:
  TruncatedSet() = default;
  TruncatedSet(ValueVector min_elt, ValueVector conductor, std::vector<ValueVector> small)
      : min_(std::move(min_elt)), conductor_(std::move(conductor)), small_(std::move(small)) {
    min_.check_same(conductor_);
    for (const auto& v : small_) v.check_same(conductor_);
    std::sort(small_.begin(), small_.end());
    small_.erase(std::unique(small_.begin(), small_.end()), small_.end());
  }

  std::size_t branches() const noexcept { return conductor_.size(); }
  const ValueVector& min_elt() const noexcept { return min_; }
  const ValueVector& conductor() const noexcept { return conductor_; }
  const std::vector<ValueVector>& small() const noexcept { return small_; }

  bool contains_small(const ValueVector& t) const {
    return std::binary_search(small_.begin(), small_.end(), t);
  }

  bool contains(const ValueVector& a) const {
    a.check_same(conductor_);
    if (!leq(min_, a)) return false;
    return contains_small(min_vec(a, conductor_));
  }

  /**
   * Finds an element e of the (infinite) set satisfying one constraint per
   * coordinate, or nothing. Scans the small elements in lexicographic order
   * and lifts the first compatible one; coordinates at the conductor are
   * free to move up, the others are pinned.
   */
  std::optional<ValueVector> find(const std::vector<CoordConstraint>& cons) const {
    const std::size_t s = branches();
    for (const auto& t : small_) {
      ValueVector e(s);
      bool ok = true;
      for (std::size_t j = 0; j < s && ok; ++j) {
        const Int c = conductor_[j];
        const Int v = cons[j].value;
        if (cons[j].kind == CoordConstraint::Kind::exact) {
          ok = t[j] == std::min(v, c) && v >= min_[j];
          e[j] = v;
        } else {
          ok = t[j] == c || t[j] >= v;
          e[j] = t[j] < c ? t[j] : std::max(v, c);
        }
      }
      if (ok) return e;
    }
    return std::nullopt;
  }

  friend bool operator==(const TruncatedSet&, const TruncatedSet&) = default;

 private:
  ValueVector min_;
  ValueVector conductor_;
  std::vector<ValueVector> small_;
};

namespace detail {

inline void check_box_and_endpoints(const TruncatedSet& e, ValidationReport& rep) {
  if (!leq(e.min_elt(), e.conductor())) rep.add("box", {e.min_elt(), e.conductor()}, "minimum exceeds conductor");
  if (!e.contains_small(e.min_elt())) rep.add("min-missing", {e.min_elt()});
  if (!e.contains_small(e.conductor())) rep.add("conductor-missing", {e.conductor()});
  for (const auto& t : e.small())
    if (!leq(e.min_elt(), t) || !leq(t, e.conductor())) rep.add("box", {t}, "small element outside [min, conductor]");
}

// property (i)
inline void check_min_closure(const TruncatedSet& e, ValidationReport& rep) {
  const auto& sm = e.small();
  for (std::size_t x = 0; x < sm.size(); ++x)
    for (std::size_t y = x + 1; y < sm.size(); ++y)
      if (!e.contains_small(min_vec(sm[x], sm[y]))) {
        rep.add("min-closure", {sm[x], sm[y]}, "min(a,b) missing");
        return;
      }
}

// property (ii)
inline void check_exchange(const TruncatedSet& e, ValidationReport& rep) {
  const auto& sm = e.small();
  const std::size_t s = e.branches();
  for (std::size_t x = 0; x < sm.size(); ++x)
    for (std::size_t y = x + 1; y < sm.size(); ++y) {
      const auto& a = sm[x];
      const auto& b = sm[y];
      for (std::size_t i = 0; i < s; ++i) {
        if (a[i] != b[i]) continue;
        std::vector<CoordConstraint> cons;
        cons.reserve(s);
        for (std::size_t j = 0; j < s; ++j) {
          if (j == i)
            cons.push_back(CoordConstraint::at_least(a[i] + 1));
          else if (a[j] != b[j])
            cons.push_back(CoordConstraint::exact(std::min(a[j], b[j])));
          else
            cons.push_back(CoordConstraint::at_least(a[j]));
        }
        if (!e.find(cons)) {
          rep.add("exchange", {a, b}, "no epsilon for coordinate " + std::to_string(i));
          return;
        }
      }
    }
}

// No c - e_j (j with room below) still has c - e_j + N^s inside the set.
inline void check_conductor_minimal(const TruncatedSet& e, ValidationReport& rep) {
  const auto& c = e.conductor();
  for (std::size_t j = 0; j < c.size(); ++j) {
    if (c[j] <= e.min_elt()[j]) continue;
    ValueVector lower = c - ValueVector::unit(c.size(), j);
    bool whole = true;
    for (const auto& p : Box(lower, c))
      if (!e.contains(p)) {
        whole = false;
        break;
      }
    if (whole) rep.add("conductor-minimality", {lower}, "a smaller conductor works");
  }
}

}  // namespace detail

}  // namespace goodsg
