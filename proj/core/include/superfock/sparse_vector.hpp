#pragma once

#include <map>
#include <utility>

#include "superfock/scalar.hpp"

namespace superfock {

/// Finitely supported formal linear combination of basis keys over Q(i, √2).
/// Zero coefficients are never stored, so equality is structural.
template <class Key>
class SparseVector {
 public:
  using Terms = std::map<Key, Scalar>;
  using const_iterator = typename Terms::const_iterator;

  SparseVector() = default;
  explicit SparseVector(const Key& k, const Scalar& c = 1) { add(k, c); }

  void add(const Key& k, const Scalar& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(k, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  /// this += c * other
  void add_scaled(const SparseVector& other, const Scalar& c) {
    if (c.is_zero()) return;
    for (const auto& [k, v] : other.terms_) add(k, v * c);
  }

  Scalar coefficient(const Key& k) const {
    auto it = terms_.find(k);
    return it == terms_.end() ? Scalar() : it->second;
  }

  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  const Terms& terms() const { return terms_; }
  const_iterator begin() const { return terms_.begin(); }
  const_iterator end() const { return terms_.end(); }

  SparseVector& operator+=(const SparseVector& o) {
    add_scaled(o, 1);
    return *this;
  }
  SparseVector& operator-=(const SparseVector& o) {
    add_scaled(o, -1);
    return *this;
  }
  SparseVector& operator*=(const Scalar& s) {
    if (s.is_zero()) {
      terms_.clear();
    } else {
      for (auto& [k, v] : terms_) v *= s;
    }
    return *this;
  }
  friend SparseVector operator+(SparseVector x, const SparseVector& y) { return x += y; }
  friend SparseVector operator-(SparseVector x, const SparseVector& y) { return x -= y; }
  friend SparseVector operator*(const Scalar& s, SparseVector x) { return x *= s; }
  friend bool operator==(const SparseVector& x, const SparseVector& y) { return x.terms_ == y.terms_; }
  friend bool operator!=(const SparseVector& x, const SparseVector& y) { return !(x == y); }
  friend bool operator<(const SparseVector& x, const SparseVector& y) { return x.terms_ < y.terms_; }

 private:
  Terms terms_;
};

/// Applies a basis-level linear map f: Key -> SparseVector<Out> to a vector.
template <class Key, class Fn>
auto apply_linear(const SparseVector<Key>& v, Fn&& f) {
  using Out = decltype(f(std::declval<const Key&>()));
  Out out;
  for (const auto& [k, c] : v) out.add_scaled(f(k), c);
  return out;
}

}  // namespace superfock
