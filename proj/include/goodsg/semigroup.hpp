#pragma once

/**
 * @file semigroup.hpp
 * @brief Good local semigroups of N^s, stored by conductor and small elements.
 */

#include <numeric>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "lattice.hpp"
#include "truncated_set.hpp"

namespace goodsg {

/**
 * A candidate good semigroup S ⊆ N^s: conductor β plus S ∩ [0, β].
 *
 * Construction only normalizes the data (sorts, dedups, checks dimensions);
 * whether the data really is a good local semigroup is answered by
 * validate(). Every other operation assumes a valid semigroup.
 */
class GoodSemigroup {
 public:
  GoodSemigroup() = default;
  GoodSemigroup(ValueVector conductor, std::vector<ValueVector> small, std::string name = {})
      : set_(ValueVector(conductor.size()), conductor, std::move(small)), name_(std::move(name)) {
    if (conductor.size() == 0) throw std::invalid_argument("semigroup needs at least one branch");
  }

  /// Numerical semigroup generated by positive integers with gcd 1.
  static GoodSemigroup from_generators(const std::vector<Int>& gens, std::string name = {});

  std::size_t branches() const noexcept { return set_.branches(); }
  const ValueVector& conductor() const noexcept { return set_.conductor(); }
  const std::vector<ValueVector>& small() const noexcept { return set_.small(); }
  const TruncatedSet& elements() const noexcept { return set_; }
  const std::string& name() const noexcept { return name_; }
  void set_name(std::string n) { name_ = std::move(n); }

  bool contains(const ValueVector& a) const { return set_.contains(a); }

  /// Same elements; the name is ignored.
  bool same_elements(const GoodSemigroup& o) const { return set_ == o.set_; }

 private:
  TruncatedSet set_;
  std::string name_;
};

inline GoodSemigroup GoodSemigroup::from_generators(const std::vector<Int>& gens, std::string name) {
  if (gens.empty()) throw std::invalid_argument("no generators");
  Int g = 0;
  Int lo = gens.front(), hi = gens.front();
  for (Int x : gens) {
    if (x <= 0) throw std::invalid_argument("generators must be positive");
    g = std::gcd(g, x);
    lo = std::min(lo, x);
    hi = std::max(hi, x);
  }
  if (g != 1) throw std::invalid_argument("generators must have gcd 1");
  if (hi > 100000) throw std::invalid_argument("generator too large");

  // Frobenius number is below lo*hi, so a window of lo*hi + lo settles everything.
  const Int bound = lo * hi + lo;
  std::vector<char> in(static_cast<std::size_t>(bound) + 1, 0);
  in[0] = 1;
  for (Int x = 1; x <= bound; ++x)
    for (Int gen : gens)
      if (gen <= x && in[static_cast<std::size_t>(x - gen)]) {
        in[static_cast<std::size_t>(x)] = 1;
        break;
      }
  Int conductor = bound;
  while (conductor > 0 && in[static_cast<std::size_t>(conductor - 1)]) --conductor;

  std::vector<ValueVector> small;
  for (Int x = 0; x <= conductor; ++x)
    if (in[static_cast<std::size_t>(x)]) small.push_back(ValueVector{x});
  return GoodSemigroup(ValueVector{conductor}, std::move(small), std::move(name));
}

inline bool membership(const GoodSemigroup& S, const ValueVector& a) { return S.contains(a); }

/// S = N (s = 1, β = 0) is the only regular local case.
inline bool is_regular(const GoodSemigroup& S) { return S.conductor().is_zero(); }

/**
 * α = min(S \ {0}). For the regular case the small set is just {0} and the
 * answer is β + (1, ..., 1).
 */
inline ValueVector multiplicity(const GoodSemigroup& S) {
  std::optional<ValueVector> alpha;
  for (const auto& t : S.small()) {
    if (t.is_zero()) continue;
    alpha = alpha ? min_vec(*alpha, t) : t;
  }
  if (!alpha) return S.conductor() + ValueVector::ones(S.branches());
  return *alpha;
}

inline ValueVector frobenius(const GoodSemigroup& S) { return S.conductor() - ValueVector::ones(S.branches()); }

/// α^i = min(iα, β).
inline ValueVector alpha_power(const GoodSemigroup& S, Int i) { return min_vec(i * multiplicity(S), S.conductor()); }

struct SemigroupIndices {
  ValueVector alpha;
  ValueVector gamma;
  Int m = 0;
  Int r = 0;
  std::optional<Int> n;
  std::optional<ValueVector> d;
  Order order = Order::lt_neq;
  bool regular = false;
};

/// R_i ∩ S, lexicographically ordered.
inline std::vector<ValueVector> region_points(const GoodSemigroup& S, Int i, Order mode) {
  const ValueVector alpha = multiplicity(S);
  const ValueVector lo = (i - 1) * alpha;
  const ValueVector hi = i * alpha;
  std::vector<ValueVector> out;
  for (const auto& a : Box(lo, hi))
    if (compare(lo, a, mode) && compare(a, hi, mode) && S.contains(a)) out.push_back(a);
  return out;
}

inline SemigroupIndices indices(const GoodSemigroup& S, Order mode = Order::lt_neq) {
  SemigroupIndices ix;
  ix.order = mode;
  ix.alpha = multiplicity(S);
  ix.gamma = frobenius(S);
  ix.regular = is_regular(S);
  const ValueVector& beta = S.conductor();
  if (ix.regular) return ix;

  while (leq((ix.m + 2) * ix.alpha, beta)) ++ix.m;
  while (!lt_neq(beta, (ix.r + 2) * ix.alpha)) ++ix.r;

  // d < β is needed downstream, which caps the search at m + 1.
  for (Int i = 1; i <= ix.m + 1; ++i) {
    auto pts = region_points(S, i, mode);
    if (!pts.empty()) {
      ix.n = i;
      ix.d = pts.front();
      break;
    }
  }
  return ix;
}

/// Lists every violated good-local-semigroup axiom with a witness.
inline ValidationReport validate(const GoodSemigroup& S) {
  ValidationReport rep;
  const auto& e = S.elements();
  const std::size_t s = S.branches();
  const ValueVector zero(s);
  for (std::size_t j = 0; j < s; ++j)
    if (S.conductor()[j] < 0) rep.add("box", {S.conductor()}, "negative conductor");
  if (!rep.ok()) return rep;

  detail::check_box_and_endpoints(e, rep);
  if (rep.has("box")) return rep;

  for (const auto& t : S.small()) {
    if (t.is_zero()) continue;
    if (std::any_of(t.begin(), t.end(), [](Int c) { return c == 0; }))
      rep.add("locality", {t}, "nonzero element with a vanishing component");
  }
  if (s >= 2 && S.conductor().is_zero())
    rep.add("locality", {ValueVector::unit(s, 0)}, "N^s is not local for s >= 2");

  detail::check_min_closure(e, rep);
  detail::check_exchange(e, rep);

  const auto& sm = S.small();
  for (std::size_t x = 0; x < sm.size(); ++x)
    for (std::size_t y = x; y < sm.size(); ++y)
      if (!e.contains_small(min_vec(sm[x] + sm[y], S.conductor()))) {
        rep.add("additive-closure", {sm[x], sm[y]}, "a + b not in S");
        x = sm.size();
        break;
      }

  detail::check_conductor_minimal(e, rep);
  return rep;
}

}  // namespace goodsg
