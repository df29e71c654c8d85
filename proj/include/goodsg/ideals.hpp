#pragma once

/**
 * @file ideals.hpp
 * @brief Good relative ideals, Δ-sets, the canonical ideal and the
 * distance-based classification invariants.
 */

#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "lattice.hpp"
#include "semigroup.hpp"
#include "truncated_set.hpp"

namespace goodsg {

/// A relative ideal E of a good semigroup S, stored like S itself: min, conductor, small part.
class RelativeIdeal {
 public:
  RelativeIdeal(std::shared_ptr<const GoodSemigroup> parent, ValueVector min_elt, ValueVector conductor,
                std::vector<ValueVector> small)
      : parent_(std::move(parent)), set_(std::move(min_elt), std::move(conductor), std::move(small)) {
    if (!parent_) throw std::invalid_argument("relative ideal needs a parent semigroup");
    set_.conductor().check_same(parent_->conductor());
  }

  const GoodSemigroup& parent() const noexcept { return *parent_; }
  const std::shared_ptr<const GoodSemigroup>& parent_ptr() const noexcept { return parent_; }
  const ValueVector& min_elt() const noexcept { return set_.min_elt(); }
  const ValueVector& conductor() const noexcept { return set_.conductor(); }
  const std::vector<ValueVector>& small() const noexcept { return set_.small(); }
  const TruncatedSet& elements() const noexcept { return set_; }
  std::size_t branches() const noexcept { return set_.branches(); }

  bool contains(const ValueVector& a) const { return set_.contains(a); }

 private:
  std::shared_ptr<const GoodSemigroup> parent_;
  TruncatedSet set_;
};

/// S viewed as an ideal over itself.
inline RelativeIdeal semigroup_ideal(std::shared_ptr<const GoodSemigroup> S) {
  ValueVector zero(S->branches());
  auto c = S->conductor();
  auto small = S->small();
  return RelativeIdeal(std::move(S), zero, c, std::move(small));
}

/// N^s, the value set of the normalization.
inline RelativeIdeal natural_ideal(std::shared_ptr<const GoodSemigroup> S) {
  ValueVector zero(S->branches());
  return RelativeIdeal(std::move(S), zero, zero, {zero});
}

inline ValidationReport validate(const RelativeIdeal& E) {
  ValidationReport rep;
  const auto& e = E.elements();
  detail::check_box_and_endpoints(e, rep);
  if (rep.has("box")) return rep;
  detail::check_min_closure(e, rep);
  detail::check_exchange(e, rep);

  [&] {
    for (const auto& s : E.parent().small())
      for (const auto& x : E.small())
        if (!e.contains(s + x)) {
          rep.add("stability", {s, x}, "S + E not inside E");
          return;
        }
  }();
  detail::check_conductor_minimal(e, rep);
  return rep;
}

struct DeltaResult {
  bool empty = true;
  std::optional<ValueVector> witness;
};

/**
 * Decides whether Δ^E(a) = { b ∈ E : b_i = a_i for some i, b_j > a_j for j != i }
 * is empty. For each pinned coordinate i the search reduces to the small
 * elements of E: the unpinned coordinates only matter below the conductor.
 */
inline DeltaResult delta_empty(const TruncatedSet& E, const ValueVector& a) {
  a.check_same(E.conductor());
  const std::size_t s = a.size();
  std::vector<CoordConstraint> cons(s, CoordConstraint::exact(0));
  for (std::size_t i = 0; i < s; ++i) {
    for (std::size_t j = 0; j < s; ++j)
      cons[j] = j == i ? CoordConstraint::exact(a[j]) : CoordConstraint::at_least(a[j] + 1);
    if (auto b = E.find(cons)) return {false, std::move(b)};
  }
  return {};
}

inline DeltaResult delta_empty(const RelativeIdeal& E, const ValueVector& a) { return delta_empty(E.elements(), a); }
inline DeltaResult delta_empty(const GoodSemigroup& S, const ValueVector& a) { return delta_empty(S.elements(), a); }

/// Membership in K = { a : Δ^S(γ - a) = ∅ } straight from the definition.
inline bool in_canonical_ideal(const GoodSemigroup& S, const ValueVector& a) {
  return delta_empty(S, frobenius(S) - a).empty;
}

/**
 * The canonical ideal K of S. Its small part is computed on [0, β]; the
 * facts that K ⊆ N^s, β + N^s ⊆ K and the truncation law for K are checked
 * on a margin of one around that box rather than assumed.
 */
inline RelativeIdeal canonical_ideal(const GoodSemigroup& S) {
  const std::size_t s = S.branches();
  const ValueVector& beta = S.conductor();
  const ValueVector zero(s);
  const ValueVector one = ValueVector::ones(s);

  std::vector<ValueVector> small;
  for (const auto& a : Box(zero, beta))
    if (in_canonical_ideal(S, a)) small.push_back(a);

  for (const auto& a : Box(zero - one, beta + one)) {
    const bool in = in_canonical_ideal(S, a);
    const bool negative = !leq(zero, a);
    if (negative && in) throw std::logic_error("canonical ideal leaves N^s at " + to_string(a));
    if (leq(beta, a) && !in) throw std::logic_error("canonical ideal misses " + to_string(a) + " above the conductor");
    if (!negative && in != in_canonical_ideal(S, min_vec(a, beta)))
      throw std::logic_error("truncation law fails for K at " + to_string(a));
  }
  return RelativeIdeal(std::make_shared<const GoodSemigroup>(S), zero, beta, std::move(small));
}

/// K° = { a ∈ K : a < β } in the chosen order.
inline std::vector<ValueVector> k_small(const RelativeIdeal& K, Order mode = Order::lt_neq) {
  const auto& beta = K.parent().conductor();
  std::vector<ValueVector> out;
  for (const auto& a : K.small())
    if (compare(a, beta, mode)) out.push_back(a);
  return out;
}

inline std::vector<ValueVector> k_small(const GoodSemigroup& S, Order mode = Order::lt_neq) {
  return k_small(canonical_ideal(S), mode);
}

namespace detail {

inline bool colex_less(const ValueVector& a, const ValueVector& b) {
  for (std::size_t i = a.size(); i > 0; --i)
    if (a[i - 1] != b[i - 1]) return a[i - 1] < b[i - 1];
  return false;
}

/// Length of a saturated chain in E from its minimum up to top, picking covers greedily.
inline Int saturated_chain_length(const TruncatedSet& E, const ValueVector& top, bool colex) {
  ValueVector p = E.min_elt();
  Int steps = 0;
  while (p != top) {
    std::optional<ValueVector> next;
    for (const auto& q : Box(p, top)) {
      if (q == p || !E.contains(q)) continue;
      if (!colex) {
        next = q;  // lexicographically least member above p is minimal
        break;
      }
      if (!next || colex_less(q, *next)) next = q;
    }
    if (!next) throw std::runtime_error("no element of the ideal between " + to_string(p) + " and " + to_string(top));
    p = *next;
    ++steps;
  }
  return steps;
}

/// d(E) measured up to top, checked against a second independently built chain.
inline Int chain_length(const TruncatedSet& E, const ValueVector& top) {
  const Int a = saturated_chain_length(E, top, false);
  const Int b = saturated_chain_length(E, top, true);
  if (a != b)
    throw std::runtime_error("inconsistent saturated chain lengths " + std::to_string(a) + " and " +
                             std::to_string(b) + ": invalid ideal data");
  return a;
}

}  // namespace detail

/**
 * d(E \ F) for F ⊆ E: the difference of saturated chain lengths from each
 * minimum to a common point above both conductors.
 */
inline Int distance(const RelativeIdeal& E, const RelativeIdeal& F) {
  if (!E.parent().same_elements(F.parent())) throw std::invalid_argument("ideals have different parents");
  const ValueVector top = max_vec(max_vec(E.conductor(), F.conductor()), max_vec(E.min_elt(), F.min_elt()));
  for (const auto& p : Box(F.min_elt(), top))
    if (F.contains(p) && !E.contains(p))
      throw std::invalid_argument("distance: F is not contained in E, witness " + to_string(p));
  return detail::chain_length(E.elements(), top) - detail::chain_length(F.elements(), top);
}

/// Semigroup-level shadows of the colengths η = dim(V/O), μ = dim(Ō/V), δ = dim(Ō/O).
struct ClassificationReport {
  bool gorenstein = false;
  Int eta = 0;
  Int mu = 0;
  bool kunz = false;
  bool nearly_gorenstein_point = false;
  Int delta_invariant = 0;
};

inline ClassificationReport classify(const GoodSemigroup& S) {
  auto sp = std::make_shared<const GoodSemigroup>(S);
  const RelativeIdeal K = canonical_ideal(S);
  const RelativeIdeal SI = semigroup_ideal(sp);
  const RelativeIdeal N = natural_ideal(sp);

  ClassificationReport rep;
  rep.eta = distance(K, SI);
  rep.mu = distance(N, K);
  rep.delta_invariant = distance(N, SI);
  rep.gorenstein = K.small() == S.small() && K.conductor() == S.conductor();
  if (rep.gorenstein != (rep.eta == 0)) throw std::logic_error("eta = 0 disagrees with K = S");
  rep.kunz = rep.eta == 1;
  rep.nearly_gorenstein_point = rep.mu == 1;
  return rep;
}

}  // namespace goodsg
