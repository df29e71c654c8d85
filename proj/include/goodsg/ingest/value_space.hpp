#pragma once

/**
 * @file value_space.hpp
 * @brief The local ring of a parametrized curve as a truncated vector space,
 * and the value semigroup read off from it.
 *
 * Elements of the product of branch power series rings are stored densely,
 * truncated at t_i^{N_i + 1} on branch i. Columns are enumerated branch-major,
 * then by exponent; the basis of a ValueSpace is kept in reduced row echelon
 * form with respect to that enumeration, so everything is reproducible.
 */

#include <algorithm>
#include <cstdint>
#include <optional>
#include <random>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "../lattice.hpp"
#include "../semigroup.hpp"
#include "field.hpp"
#include "presentation.hpp"

namespace goodsg::ingest {

/// A value query reached past the truncation; the caller must enlarge the bound.
struct TruncationExceeded : std::out_of_range {
  using std::out_of_range::out_of_range;
};

/// The stabilization loop hit its depth or truncation ceiling.
struct NonStabilization : std::runtime_error {
  using std::runtime_error::runtime_error;
};

template <class Field>
class ValueSpace {
 public:
  using Element = typename Field::Element;
  using Row = std::vector<Element>;

  ValueSpace(Field f, ValueVector truncation) : field_(std::move(f)), trunc_(std::move(truncation)) {
    std::size_t off = 0;
    for (std::size_t i = 0; i < trunc_.size(); ++i) {
      if (trunc_[i] < 0) throw std::invalid_argument("negative truncation");
      offsets_.push_back(off);
      off += static_cast<std::size_t>(trunc_[i]) + 1;
    }
    ambient_ = off;
  }

  const Field& field() const noexcept { return field_; }
  const ValueVector& truncation() const noexcept { return trunc_; }
  std::size_t branches() const noexcept { return trunc_.size(); }
  std::size_t ambient_dimension() const noexcept { return ambient_; }
  std::size_t dimension() const noexcept { return rows_.size(); }
  const std::vector<Row>& basis() const noexcept { return rows_; }
  const std::vector<std::size_t>& pivots() const noexcept { return pivots_; }
  Int depth() const noexcept { return depth_; }
  bool closed() const noexcept { return closed_; }

  std::size_t column(std::size_t branch, Int exponent) const {
    return offsets_.at(branch) + static_cast<std::size_t>(exponent);
  }

  Row zero_row() const { return Row(ambient_, field_.zero()); }

  Row one() const {
    Row r = zero_row();
    for (std::size_t i = 0; i < branches(); ++i) r[column(i, 0)] = field_.one();
    return r;
  }

  Row from_series(const std::vector<SparseSeries>& per_branch) const {
    Row r = zero_row();
    for (std::size_t i = 0; i < branches(); ++i)
      for (const auto& [e, q] : per_branch.at(i))
        if (e <= trunc_[i]) r[column(i, e)] = field_.from_rational(q);
    return r;
  }

  Row multiply(const Row& a, const Row& b) const {
    Row r = zero_row();
    for (std::size_t i = 0; i < branches(); ++i) {
      const std::size_t o = offsets_[i];
      const std::size_t n = static_cast<std::size_t>(trunc_[i]) + 1;
      for (std::size_t x = 0; x < n; ++x) {
        if (field_.is_zero(a[o + x])) continue;
        for (std::size_t y = 0; x + y < n; ++y) {
          if (field_.is_zero(b[o + y])) continue;
          r[o + x + y] = field_.add(r[o + x + y], field_.mul(a[o + x], b[o + y]));
        }
      }
    }
    return r;
  }

  /// Order of a row on one branch; nullopt when it vanishes up to the truncation.
  std::optional<Int> order(const Row& v, std::size_t branch) const {
    for (Int e = 0; e <= trunc_[branch]; ++e)
      if (!field_.is_zero(v[column(branch, e)])) return e;
    return std::nullopt;
  }

  /// Adds v to the span. Returns the reduced new vector when the dimension grew.
  std::optional<Row> insert(Row v) {
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      const std::size_t p = pivots_[r];
      if (field_.is_zero(v[p])) continue;
      const Element f = v[p];
      for (std::size_t k = p; k < ambient_; ++k)
        if (!field_.is_zero(rows_[r][k])) field_.sub_mul(v[k], f, rows_[r][k]);
    }
    std::size_t q = 0;
    while (q < ambient_ && field_.is_zero(v[q])) ++q;
    if (q == ambient_) return std::nullopt;
    const Element inv = field_.inv(v[q]);
    for (std::size_t k = q; k < ambient_; ++k) v[k] = field_.mul(v[k], inv);
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      if (field_.is_zero(rows_[r][q])) continue;
      const Element f = rows_[r][q];
      for (std::size_t k = q; k < ambient_; ++k)
        if (!field_.is_zero(v[k])) field_.sub_mul(rows_[r][k], f, v[k]);
    }
    auto at = std::lower_bound(pivots_.begin(), pivots_.end(), q);
    const auto idx = at - pivots_.begin();
    pivots_.insert(at, q);
    rows_.insert(rows_.begin() + idx, v);
    return v;
  }

  void set_progress(Int depth, bool closed) {
    depth_ = depth;
    closed_ = closed;
  }

 private:
  Field field_;
  ValueVector trunc_;
  std::vector<std::size_t> offsets_;
  std::size_t ambient_ = 0;
  std::vector<Row> rows_;
  std::vector<std::size_t> pivots_;
  Int depth_ = 0;
  bool closed_ = false;
};

/**
 * Span of all monomials of total degree <= depth in the generators
 * (including 1), truncated at trunc. Each round multiplies only the vectors
 * that entered in the previous round; the space is marked closed once a
 * round adds nothing, after which more depth cannot change it.
 */
template <class Field>
ValueSpace<Field> subalgebra_closure(const Field& field, const CurvePresentation& raw, Int depth,
                                     const ValueVector& trunc) {
  const CurvePresentation c = normalized(raw);
  if (depth < 1) throw std::invalid_argument("depth must be at least 1");
  if (trunc.size() != c.branches) throw DimensionMismatch(c.branches, trunc.size());
  ValueSpace<Field> V(field, trunc);
  std::vector<typename ValueSpace<Field>::Row> gens;
  for (const auto& g : c.generators) gens.push_back(V.from_series(g));

  std::vector<typename ValueSpace<Field>::Row> frontier;
  if (auto one = V.insert(V.one())) frontier.push_back(*one);
  Int rounds = 0;
  while (rounds < depth && !frontier.empty()) {
    std::vector<typename ValueSpace<Field>::Row> next;
    for (const auto& f : frontier)
      for (const auto& g : gens)
        if (auto added = V.insert(V.multiply(f, g))) next.push_back(std::move(*added));
    ++rounds;
    frontier = std::move(next);
  }
  V.set_progress(rounds, frontier.empty());
  return V;
}

namespace detail {

/// Row echelon form of rows restricted to the columns listed in perm (in that order); returns pivot positions.
template <class Field>
std::vector<std::size_t> echelon_pivots(const Field& F, const std::vector<typename Field::Element>* rows_begin,
                                        std::size_t nrows, const std::vector<std::size_t>& perm,
                                        std::vector<std::vector<typename Field::Element>>* reduced = nullptr) {
  using Element = typename Field::Element;
  const std::size_t ncols = perm.size();
  std::vector<std::vector<Element>> M(nrows, std::vector<Element>(ncols, F.zero()));
  for (std::size_t r = 0; r < nrows; ++r)
    for (std::size_t k = 0; k < ncols; ++k) M[r][k] = rows_begin[r][perm[k]];

  std::vector<std::size_t> pivots;
  std::size_t rank = 0;
  for (std::size_t k = 0; k < ncols && rank < nrows; ++k) {
    std::size_t sel = rank;
    while (sel < nrows && F.is_zero(M[sel][k])) ++sel;
    if (sel == nrows) continue;
    std::swap(M[rank], M[sel]);
    const Element inv = F.inv(M[rank][k]);
    for (std::size_t c = k; c < ncols; ++c) M[rank][c] = F.mul(M[rank][c], inv);
    for (std::size_t r = rank + 1; r < nrows; ++r) {
      if (F.is_zero(M[r][k])) continue;
      const Element f = M[r][k];
      for (std::size_t c = k; c < ncols; ++c)
        if (!F.is_zero(M[rank][c])) F.sub_mul(M[r][c], f, M[rank][c]);
    }
    pivots.push_back(k);
    ++rank;
  }
  if (reduced) {
    M.resize(rank);
    *reduced = std::move(M);
  }
  return pivots;
}

/// Columns (i, e) with e < a_i, i.e. the coordinates an element of order >= a must kill.
template <class Field>
std::vector<std::size_t> forbidden_columns(const ValueSpace<Field>& V, const ValueVector& a) {
  std::vector<std::size_t> cols;
  for (std::size_t i = 0; i < V.branches(); ++i)
    for (Int e = 0; e < std::min(a[i], V.truncation()[i] + 1); ++e) cols.push_back(V.column(i, e));
  return cols;
}

template <class Field>
std::size_t projection_rank(const ValueSpace<Field>& V, const ValueVector& a) {
  const auto cols = forbidden_columns(V, a);
  return echelon_pivots(V.field(), V.basis().data(), V.dimension(), cols).size();
}

}  // namespace detail

/// dim of { v ∈ V : ord_i(v) >= a_i for all i }.
template <class Field>
std::size_t dim_order_at_least(const ValueSpace<Field>& V, const ValueVector& a) {
  return V.dimension() - detail::projection_rank(V, a);
}

struct MembershipDetail {
  bool member = false;
  bool exact = true;        ///< false only when a randomized search answered "no"
  std::uint64_t trials = 0; ///< elements sampled by the finite-field fallback
};

/**
 * Is a the value of some element of V (exact order a_i on every branch)?
 *
 * Rank criterion: with W_a the elements of order >= a, a is a value iff no
 * W_{a+e_i} exhausts W_a and the union of those s hyperplane-like subspaces
 * does not cover W_a. The second part is automatic when the field has more
 * than s - 1 elements; over a smaller prime field the subspace is searched,
 * exhaustively when it has at most 2^16 elements, otherwise by sampling.
 */
template <class Field>
MembershipDetail value_membership_detail(const ValueSpace<Field>& V, const ValueVector& a) {
  if (a.size() != V.branches()) throw DimensionMismatch(V.branches(), a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] < 0) return {};
    if (a[i] > V.truncation()[i])
      throw TruncationExceeded("value query " + to_string(a) + " beyond truncation " + to_string(V.truncation()) +
                               ": increase bound");
  }
  const std::size_t base = detail::projection_rank(V, a);
  for (std::size_t i = 0; i < a.size(); ++i)
    if (detail::projection_rank(V, a + ValueVector::unit(a.size(), i)) <= base) return {};

  const Field& F = V.field();
  if (F.infinite() || a.size() <= F.characteristic()) return {true, true, 0};

  // Basis of W_a: eliminate with the forbidden columns first.
  auto perm = detail::forbidden_columns(V, a);
  const std::size_t nforb = perm.size();
  {
    std::vector<char> used(V.ambient_dimension(), 0);
    for (auto c : perm) used[c] = 1;
    for (std::size_t c = 0; c < V.ambient_dimension(); ++c)
      if (!used[c]) perm.push_back(c);
  }
  std::vector<typename ValueSpace<Field>::Row> red;
  const auto piv = detail::echelon_pivots(F, V.basis().data(), V.dimension(), perm, &red);
  std::vector<std::vector<typename Field::Element>> W;
  for (std::size_t r = 0; r < piv.size(); ++r)
    if (piv[r] >= nforb) W.push_back(red[r]);

  std::vector<std::size_t> probe;  // positions of (i, a_i) inside perm
  for (std::size_t i = 0; i < a.size(); ++i) {
    const std::size_t col = V.column(i, a[i]);
    probe.push_back(static_cast<std::size_t>(std::find(perm.begin(), perm.end(), col) - perm.begin()));
  }
  const std::uint64_t p = F.characteristic();
  auto good = [&](const std::vector<std::uint64_t>& coeff) {
    for (std::size_t i = 0; i < probe.size(); ++i) {
      typename Field::Element acc = F.zero();
      for (std::size_t w = 0; w < W.size(); ++w) acc = F.add(acc, F.mul(F.from_rational(Rational(coeff[w])), W[w][probe[i]]));
      if (F.is_zero(acc)) return false;
    }
    return true;
  };

  MembershipDetail out;
  std::vector<std::uint64_t> coeff(W.size(), 0);
  std::uint64_t space = 1;
  for (std::size_t w = 0; w < W.size() && space <= 65536; ++w) space = p > 65536 ? 65537 : space * p;
  if (space <= 65536) {
    while (true) {
      ++out.trials;
      if (good(coeff)) {
        out.member = true;
        return out;
      }
      std::size_t w = 0;
      while (w < coeff.size() && ++coeff[w] == p) coeff[w++] = 0;
      if (w == coeff.size()) break;
    }
    return out;
  }
  std::mt19937_64 rng(0x9e3779b97f4a7c15ULL ^ static_cast<std::uint64_t>(weight(a)));
  std::uniform_int_distribution<std::uint64_t> pick(0, p - 1);
  out.exact = false;
  for (int t = 0; t < 4096; ++t) {
    for (auto& x : coeff) x = pick(rng);
    ++out.trials;
    if (good(coeff)) {
      out.member = true;
      out.exact = true;
      return out;
    }
  }
  return out;
}

template <class Field>
bool value_membership(const ValueSpace<Field>& V, const ValueVector& a) {
  return value_membership_detail(V, a).member;
}

/**
 * dim W_a for every a in the box [0, N + 1], flattened lexicographically.
 *
 * One elimination per choice of (a_2, ..., a_s): with the columns those
 * coordinates forbid placed first and branch 1 next, the pivot profile
 * gives dim W_a for every a_1 at once.
 */
template <class Field>
std::vector<std::size_t> order_filtration_dimensions(const ValueSpace<Field>& V) {
  const std::size_t s = V.branches();
  const ValueVector& N = V.truncation();
  const ValueVector hi = N + ValueVector::ones(s);
  const Box box(ValueVector(s), hi);
  std::vector<std::size_t> dims(box.count(), 0);

  std::vector<std::size_t> stride(s, 1);
  for (std::size_t i = s - 1; i > 0; --i) stride[i - 1] = stride[i] * static_cast<std::size_t>(hi[i] + 1);

  ValueVector rest_hi(s - 1 == 0 ? 1 : s - 1);
  for (std::size_t i = 1; i < s; ++i) rest_hi[i - 1] = hi[i];
  const Box rest_box(ValueVector(rest_hi.size()), s == 1 ? ValueVector(1) : rest_hi);

  for (const auto& rest : rest_box) {
    std::vector<std::size_t> perm;
    std::vector<char> used(V.ambient_dimension(), 0);
    for (std::size_t i = 1; i < s; ++i)
      for (Int e = 0; e < std::min(rest[i - 1], N[i] + 1); ++e) {
        perm.push_back(V.column(i, e));
        used[V.column(i, e)] = 1;
      }
    const std::size_t nforb = perm.size();
    for (Int e = 0; e <= N[0]; ++e) {
      perm.push_back(V.column(0, e));
      used[V.column(0, e)] = 1;
    }
    for (std::size_t c = 0; c < V.ambient_dimension(); ++c)
      if (!used[c]) perm.push_back(c);

    const auto piv = detail::echelon_pivots(V.field(), V.basis().data(), V.dimension(), perm);
    std::size_t flat_rest = 0;
    for (std::size_t i = 1; i < s; ++i) flat_rest += static_cast<std::size_t>(rest[i - 1]) * stride[i];
    for (Int a0 = 0; a0 <= hi[0]; ++a0) {
      const std::size_t pos = nforb + static_cast<std::size_t>(a0);
      const auto cnt = static_cast<std::size_t>(piv.end() - std::lower_bound(piv.begin(), piv.end(), pos));
      dims[static_cast<std::size_t>(a0) * stride[0] + flat_rest] = cnt;
    }
  }
  return dims;
}

/// All values a ∈ [0, N] of elements of V, in lexicographic order.
template <class Field>
std::vector<ValueVector> values_in_box(const ValueSpace<Field>& V) {
  const std::size_t s = V.branches();
  const ValueVector& N = V.truncation();
  const ValueVector hi = N + ValueVector::ones(s);
  const auto dims = order_filtration_dimensions(V);
  std::vector<std::size_t> stride(s, 1);
  for (std::size_t i = s - 1; i > 0; --i) stride[i - 1] = stride[i] * static_cast<std::size_t>(hi[i] + 1);
  auto flat = [&](const ValueVector& a) {
    std::size_t f = 0;
    for (std::size_t i = 0; i < s; ++i) f += static_cast<std::size_t>(a[i]) * stride[i];
    return f;
  };
  const bool needs_search = !V.field().infinite() && s > V.field().characteristic();

  std::vector<ValueVector> out;
  for (const auto& a : Box(ValueVector(s), N)) {
    const std::size_t here = dims[flat(a)];
    bool ok = here > 0;
    for (std::size_t i = 0; i < s && ok; ++i) ok = dims[flat(a + ValueVector::unit(s, i))] < here;
    if (ok && needs_search) ok = value_membership(V, a);
    if (ok) out.push_back(a);
  }
  return out;
}

struct IngestOptions {
  Int max_depth = 10000;
  Int max_truncation = 200;
  std::optional<ValueVector> initial_truncation;
};

struct IngestResult {
  GoodSemigroup semigroup;
  ValueVector truncation;  ///< truncation of the final round
  Int depth = 0;           ///< closure depth of the final round
  Int rounds = 0;
};

namespace detail {

inline ValueVector initial_truncation(const CurvePresentation& c) {
  ValueVector N(c.branches);
  for (std::size_t i = 0; i < c.branches; ++i) {
    Int least = 0;
    for (const auto& g : c.generators)
      if (!g[i].empty()) {
        const Int o = g[i].begin()->first;
        least = least == 0 ? o : std::min(least, o);
      }
    N[i] = 2 * std::max<Int>(least, 1) + 2;
  }
  return N;
}

inline ValueVector grow(const ValueVector& N) {
  ValueVector out = N;
  for (std::size_t i = 0; i < N.size(); ++i) out[i] = N[i] + std::max<Int>(2, N[i] / 2);
  return out;
}

/// Least c with [c, N] inside the detected values, or nothing when N itself is missing.
inline std::optional<ValueVector> conductor_candidate(const std::set<ValueVector>& vals, const ValueVector& N) {
  if (!vals.count(N)) return std::nullopt;
  ValueVector c = N;
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t j = 0; j < c.size(); ++j) {
      if (c[j] == 0) continue;
      ValueVector lower = c - ValueVector::unit(c.size(), j);
      bool full = true;
      for (const auto& p : Box(lower, N))
        if (p[j] == lower[j] && !vals.count(p)) {
          full = false;
          break;
        }
      if (full) {
        c = lower;
        changed = true;
      }
    }
  }
  return c;
}

}  // namespace detail

/**
 * The value semigroup of the curve. Grows the truncation until the detected
 * values contain [β, β + 2α], the candidate passes validate(), and two
 * consecutive rounds agree.
 */
template <class Field>
IngestResult compute_value_semigroup(const Field& field, const CurvePresentation& raw, const IngestOptions& opt = {}) {
  const CurvePresentation c = normalized(raw);
  ValueVector N = opt.initial_truncation ? *opt.initial_truncation : detail::initial_truncation(c);
  if (N.size() != c.branches) throw DimensionMismatch(c.branches, N.size());
  std::optional<GoodSemigroup> prev;

  for (Int round = 1;; ++round) {
    for (std::size_t i = 0; i < N.size(); ++i)
      if (N[i] > opt.max_truncation)
        throw NonStabilization("no stable value semigroup below truncation " + std::to_string(opt.max_truncation) +
                               " for '" + c.name + "'");
    const auto V = subalgebra_closure(field, c, opt.max_depth, N);
    if (!V.closed())
      throw NonStabilization("subalgebra not closed within depth " + std::to_string(opt.max_depth));

    const auto list = values_in_box(V);
    const std::set<ValueVector> vals(list.begin(), list.end());
    const auto beta = detail::conductor_candidate(vals, N);
    std::optional<ValueVector> alpha;
    for (const auto& v : list)
      if (!v.is_zero()) alpha = alpha ? min_vec(*alpha, v) : v;
    if (!beta || !alpha) {
      prev.reset();
      N = detail::grow(N);
      continue;
    }
    const ValueVector need = *beta + 2 * *alpha;
    if (!leq(need, N)) {
      prev.reset();
      N = max_vec(detail::grow(N), need);
      continue;
    }
    std::vector<ValueVector> small;
    for (const auto& v : list)
      if (leq(v, *beta)) small.push_back(v);
    GoodSemigroup S(*beta, std::move(small), c.name);
    if (!validate(S).ok()) {
      prev.reset();
      N = detail::grow(N);
      continue;
    }
    if (prev && prev->same_elements(S)) return {std::move(S), N, V.depth(), round};
    prev = std::move(S);
    N = detail::grow(N);
  }
}

inline IngestResult compute_value_semigroup(const CurvePresentation& c, const IngestOptions& opt = {}) {
  return with_field(c, [&](const auto& F) { return compute_value_semigroup(F, c, opt); });
}

/**
 * δ = dim(Ō/O) as the codimension of the truncated ring inside the truncated
 * normalization. Exact once the truncation reaches β - 1; confirmed by a
 * second window one step larger, growing until the two agree.
 */
template <class Field>
Int ring_colengths(const Field& field, const CurvePresentation& raw, const GoodSemigroup& S, Int max_truncation = 200) {
  const CurvePresentation c = normalized(raw);
  const ValueVector one = ValueVector::ones(c.branches);
  ValueVector N = S.conductor() + one;
  auto codim = [&](const ValueVector& T) {
    const auto V = subalgebra_closure(field, c, 100000, T);
    return static_cast<Int>(V.ambient_dimension() - V.dimension());
  };
  for (;;) {
    for (std::size_t i = 0; i < N.size(); ++i)
      if (N[i] > max_truncation) throw NonStabilization("colength window exceeds truncation ceiling");
    const Int d1 = codim(N);
    const Int d2 = codim(N + one);
    if (d1 == d2) return d1;
    N += one;
  }
}

inline Int ring_colengths(const CurvePresentation& c, const GoodSemigroup& S, Int max_truncation = 200) {
  return with_field(c, [&](const auto& F) { return ring_colengths(F, c, S, max_truncation); });
}

}  // namespace goodsg::ingest
