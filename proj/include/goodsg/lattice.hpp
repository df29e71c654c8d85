#pragma once

/**
 * @file lattice.hpp
 * @brief Exact integer-lattice primitives over Z^s.
 *
 * A ValueVector holds one coordinate per branch of a curve singularity.
 * All arithmetic is exact; overflow of the 64-bit coordinates throws.
 */

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <iterator>
#include <numeric>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace goodsg {

using Int = std::int64_t;

struct DimensionMismatch : std::invalid_argument {
  DimensionMismatch(std::size_t lhs, std::size_t rhs)
      : std::invalid_argument("dimension mismatch: " + std::to_string(lhs) +
                              " vs " + std::to_string(rhs)) {}
};

namespace detail {

inline Int checked_add(Int a, Int b) {
  Int r;
  if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("lattice coordinate overflow");
  return r;
}

inline Int checked_sub(Int a, Int b) {
  Int r;
  if (__builtin_sub_overflow(a, b, &r)) throw std::overflow_error("lattice coordinate overflow");
  return r;
}

inline Int checked_mul(Int a, Int b) {
  Int r;
  if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("lattice coordinate overflow");
  return r;
}

}  // namespace detail

/**
 * A point of Z^s.
 *
 * The defaulted three-way comparison is the lexicographic total order; it
 * exists so vectors can live in sorted containers and give deterministic
 * output. The lattice (partial) orders are exposed separately through
 * compare(), leq() and friends.
 */
class ValueVector {
 public:
  ValueVector() = default;
  explicit ValueVector(std::size_t s, Int fill = 0) : coords_(s, fill) {}
  ValueVector(std::initializer_list<Int> init) : coords_(init) {}
  explicit ValueVector(std::vector<Int> coords) : coords_(std::move(coords)) {}

  static ValueVector unit(std::size_t s, std::size_t j) {
    ValueVector e(s);
    e.coords_.at(j) = 1;
    return e;
  }
  static ValueVector ones(std::size_t s) { return ValueVector(s, 1); }

  std::size_t size() const noexcept { return coords_.size(); }
  Int operator[](std::size_t i) const { return coords_[i]; }
  Int& operator[](std::size_t i) { return coords_[i]; }
  const std::vector<Int>& coords() const noexcept { return coords_; }

  auto begin() const noexcept { return coords_.begin(); }
  auto end() const noexcept { return coords_.end(); }

  bool is_zero() const noexcept {
    return std::all_of(coords_.begin(), coords_.end(), [](Int c) { return c == 0; });
  }

  ValueVector& operator+=(const ValueVector& o) {
    check_same(o);
    for (std::size_t i = 0; i < size(); ++i) coords_[i] = detail::checked_add(coords_[i], o.coords_[i]);
    return *this;
  }
  ValueVector& operator-=(const ValueVector& o) {
    check_same(o);
    for (std::size_t i = 0; i < size(); ++i) coords_[i] = detail::checked_sub(coords_[i], o.coords_[i]);
    return *this;
  }
  ValueVector& operator*=(Int k) {
    for (auto& c : coords_) c = detail::checked_mul(c, k);
    return *this;
  }

  friend ValueVector operator+(ValueVector a, const ValueVector& b) { return a += b; }
  friend ValueVector operator-(ValueVector a, const ValueVector& b) { return a -= b; }
  friend ValueVector operator*(Int k, ValueVector a) { return a *= k; }
  friend ValueVector operator*(ValueVector a, Int k) { return a *= k; }

  friend bool operator==(const ValueVector&, const ValueVector&) = default;
  friend auto operator<=>(const ValueVector&, const ValueVector&) = default;

  void check_same(const ValueVector& o) const {
    if (o.size() != size()) throw DimensionMismatch(size(), o.size());
  }

 private:
  std::vector<Int> coords_;
};

inline std::ostream& operator<<(std::ostream& os, const ValueVector& v) {
  os << '(';
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  return os << ')';
}

inline std::string to_string(const ValueVector& v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(v[i]);
  }
  return out + ')';
}

/// The lattice relations. LT_NEQ is "<= and !=", LT_ALL is strict in every coordinate.
enum class Order { leq, lt_neq, lt_all };

inline std::string_view to_string(Order o) {
  switch (o) {
    case Order::leq: return "leq";
    case Order::lt_neq: return "lt-neq";
    case Order::lt_all: return "lt-all";
  }
  return "?";
}

inline Order parse_order(std::string_view s) {
  if (s == "lt-neq") return Order::lt_neq;
  if (s == "lt-all") return Order::lt_all;
  if (s == "leq") return Order::leq;
  throw std::invalid_argument("unknown order mode: " + std::string(s));
}

inline ValueVector min_vec(const ValueVector& a, const ValueVector& b) {
  a.check_same(b);
  ValueVector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = std::min(a[i], b[i]);
  return r;
}

inline ValueVector max_vec(const ValueVector& a, const ValueVector& b) {
  a.check_same(b);
  ValueVector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = std::max(a[i], b[i]);
  return r;
}

inline Int weight(const ValueVector& a) {
  Int w = 0;
  for (Int c : a) w = detail::checked_add(w, c);
  return w;
}

inline bool leq(const ValueVector& a, const ValueVector& b) {
  a.check_same(b);
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

inline bool lt_neq(const ValueVector& a, const ValueVector& b) { return leq(a, b) && a != b; }

inline bool lt_all(const ValueVector& a, const ValueVector& b) {
  a.check_same(b);
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] >= b[i]) return false;
  return true;
}

inline bool compare(const ValueVector& a, const ValueVector& b, Order mode) {
  switch (mode) {
    case Order::leq: return leq(a, b);
    case Order::lt_neq: return lt_neq(a, b);
    case Order::lt_all: return lt_all(a, b);
  }
  return false;
}

/// If a and b differ by exactly one standard basis vector (b = a + e_j), returns j.
inline std::ptrdiff_t unit_step(const ValueVector& a, const ValueVector& b) {
  a.check_same(b);
  std::ptrdiff_t found = -1;
  for (std::size_t i = 0; i < a.size(); ++i) {
    Int d = b[i] - a[i];
    if (d == 0) continue;
    if (d != 1 || found >= 0) return -1;
    found = static_cast<std::ptrdiff_t>(i);
  }
  return found;
}

/**
 * The lattice box [lo, hi]. Iteration is lexicographic: the last coordinate
 * varies fastest, so points come out sorted by ValueVector's operator<.
 * An empty box (some lo_i > hi_i) yields nothing.
 */
class Box {
 public:
  Box(ValueVector lo, ValueVector hi) : lo_(std::move(lo)), hi_(std::move(hi)) { lo_.check_same(hi_); }

  const ValueVector& lo() const noexcept { return lo_; }
  const ValueVector& hi() const noexcept { return hi_; }

  bool empty() const noexcept {
    for (std::size_t i = 0; i < lo_.size(); ++i)
      if (lo_[i] > hi_[i]) return true;
    return false;
  }

  bool contains(const ValueVector& p) const { return leq(lo_, p) && leq(p, hi_); }

  std::uint64_t count() const {
    if (empty()) return 0;
    std::uint64_t n = 1;
    for (std::size_t i = 0; i < lo_.size(); ++i) n *= static_cast<std::uint64_t>(hi_[i] - lo_[i] + 1);
    return n;
  }

  class iterator {
   public:
    using iterator_category = std::forward_iterator_tag;
    using value_type = ValueVector;
    using difference_type = std::ptrdiff_t;
    using pointer = const ValueVector*;
    using reference = const ValueVector&;

    iterator() = default;
    iterator(const Box* box, bool at_end) : box_(box), done_(at_end || box->empty()) {
      if (!done_) cur_ = box->lo_;
    }

    reference operator*() const { return cur_; }
    pointer operator->() const { return &cur_; }

    iterator& operator++() {
      std::size_t i = cur_.size();
      while (i > 0) {
        --i;
        if (cur_[i] < box_->hi_[i]) {
          ++cur_[i];
          return *this;
        }
        cur_[i] = box_->lo_[i];
      }
      done_ = true;
      return *this;
    }
    iterator operator++(int) {
      auto t = *this;
      ++*this;
      return t;
    }

    friend bool operator==(const iterator& a, const iterator& b) {
      if (a.done_ || b.done_) return a.done_ == b.done_;
      return a.cur_ == b.cur_;
    }

   private:
    const Box* box_ = nullptr;
    bool done_ = true;
    ValueVector cur_;
  };

  iterator begin() const { return iterator(this, false); }
  iterator end() const { return iterator(this, true); }

 private:
  ValueVector lo_, hi_;
};

}  // namespace goodsg
