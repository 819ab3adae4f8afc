#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

#include "weylkit/rational.hpp"

namespace weylkit {

/// Integer coordinates in the simple-root basis {a_0, ..., a_n}.
class RootVec {
 public:
  RootVec() = default;
  explicit RootVec(std::size_t size) : coords_(size, 0) {}
  explicit RootVec(std::vector<std::int64_t> coords) : coords_(std::move(coords)) {}
  RootVec(std::initializer_list<std::int64_t> coords) : coords_(coords) {}

  static RootVec basis(std::size_t size, std::size_t i) {
    RootVec v(size);
    v.coords_.at(i) = 1;
    return v;
  }

  std::size_t size() const noexcept { return coords_.size(); }
  std::int64_t operator[](std::size_t i) const { return coords_[i]; }
  std::int64_t& operator[](std::size_t i) { return coords_[i]; }
  std::span<const std::int64_t> coords() const noexcept { return coords_; }
  const std::vector<std::int64_t>& vec() const noexcept { return coords_; }

  bool is_zero() const;

  RootVec& operator+=(const RootVec& o);
  RootVec& operator-=(const RootVec& o);
  RootVec& operator*=(std::int64_t k);

  friend RootVec operator+(RootVec a, const RootVec& b) { return a += b; }
  friend RootVec operator-(RootVec a, const RootVec& b) { return a -= b; }
  friend RootVec operator*(std::int64_t k, RootVec a) { return a *= k; }
  friend RootVec operator-(RootVec a) { return a *= -1; }

  friend bool operator==(const RootVec&, const RootVec&) = default;
  friend auto operator<=>(const RootVec& a, const RootVec& b) { return a.coords_ <=> b.coords_; }

 private:
  std::vector<std::int64_t> coords_;
};

struct RootVecHash {
  std::size_t operator()(const RootVec& v) const noexcept;
};

/// Exact coordinates in the dual basis {h_1, ..., h_n, h_delta}. Storage
/// follows that order, so index n holds the h_delta coefficient.
class CoweightVec {
 public:
  CoweightVec() = default;
  explicit CoweightVec(std::size_t size) : coords_(size, Rational(0)) {}
  explicit CoweightVec(std::vector<Rational> coords) : coords_(std::move(coords)) {}

  /// Level-zero coweight sum_i weights[i-1] h_i.
  static CoweightVec from_weights(std::span<const std::int64_t> weights);
  /// Fundamental weight h_i (1 <= i <= n) in an (n+1)-dimensional dual.
  static CoweightVec fundamental(std::size_t size, std::size_t i);
  static CoweightVec h_delta_vector(std::size_t size);

  std::size_t size() const noexcept { return coords_.size(); }
  std::size_t rank() const noexcept { return coords_.size() - 1; }

  /// Coefficient of h_i, 1 <= i <= n.
  const Rational& h(std::size_t i) const { return coords_.at(i - 1); }
  Rational& h(std::size_t i) { return coords_.at(i - 1); }
  const Rational& h_delta() const { return coords_.back(); }
  Rational& h_delta() { return coords_.back(); }

  std::span<const Rational> coords() const noexcept { return coords_; }
  const Rational& operator[](std::size_t i) const { return coords_[i]; }
  Rational& operator[](std::size_t i) { return coords_[i]; }

  bool is_zero() const;
  bool is_integral() const;

  CoweightVec& operator+=(const CoweightVec& o);
  CoweightVec& operator-=(const CoweightVec& o);
  CoweightVec& operator*=(const Rational& k);

  friend CoweightVec operator+(CoweightVec a, const CoweightVec& b) { return a += b; }
  friend CoweightVec operator-(CoweightVec a, const CoweightVec& b) { return a -= b; }
  friend CoweightVec operator*(const Rational& k, CoweightVec a) { return a *= k; }
  friend CoweightVec operator-(CoweightVec a) { return a *= Rational(-1); }

  friend bool operator==(const CoweightVec&, const CoweightVec&) = default;

 private:
  std::vector<Rational> coords_;
};

}  // namespace weylkit
