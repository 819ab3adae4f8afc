#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_set>
#include <utility>
#include <vector>

#include "weylkit/cartan.hpp"
#include "weylkit/matrix.hpp"
#include "weylkit/vectors.hpp"

namespace weylkit {

using Permutation = std::vector<int>;

/// delta = sum_i c_i a_i.
RootVec null_root(const CartanData& data);

RootVec simple_root(const CartanData& data, int i);

/// <v, f> with <a_i, h_j> = [i == j], <a_i, h_delta> = 0 (i >= 1),
/// <delta, h_j> = 0 and <delta, h_delta> = 1. Hence <a_0, h_j> = -c_j.
Rational pair(const RootVec& v, const CoweightVec& f, const CartanData& data);

/// coroot_i = sum_{j>=1} A(j, i) h_j; for simply-laced data this gives
/// coroot_0 = -sum c_i coroot_i.
CoweightVec simple_coroot(int i, const CartanData& data);

/// The finite root system (node 0 dropped), closed under s_1..s_n.
/// Throws NonTerminating past `cap` roots.
std::vector<RootVec> enumerate_finite_roots(const CartanData& data,
                                            std::size_t cap = 1'000'000);

struct FinitePart {
  RootVec finite;  // zero a_0 coordinate
  std::int64_t k = 0;
};

/// v = finite + k * delta.
FinitePart finite_part(const RootVec& v, const CartanData& data);

/// An affine root system with its Gram matrix, finite roots and named
/// diagram automorphisms cached. Immutable once built (registration of
/// automorphisms happens before the object is shared).
class RootSystem {
 public:
  explicit RootSystem(CartanData data, std::size_t root_cap = 1'000'000);

  const CartanData& cartan() const noexcept { return data_; }
  /// n + 1.
  int size() const noexcept { return data_.size(); }
  /// n.
  int rank() const noexcept { return data_.size() - 1; }

  const RationalMatrix& gram() const noexcept { return gram_; }
  const std::vector<RootVec>& finite_roots() const noexcept { return roots_; }
  const RootVec& delta() const noexcept { return delta_; }
  RootVec simple(int i) const { return simple_root(data_, i); }

  Rational bilinear(const RootVec& u, const RootVec& v) const;
  bool is_finite_root(const RootVec& v) const { return root_set_.contains(v); }
  /// finite_part(v) is a root of the finite system.
  bool is_real_root(const RootVec& v) const;
  /// Positive w.r.t. the ambient simple system: nonzero with every coordinate >= 0.
  static bool is_positive(const RootVec& v);

  /// Coroot of a real root: sum_i a_i ((a_i,a_i)/(v,v)) coroot_i.
  CoweightVec coroot(const RootVec& v) const;

  void register_automorphism(std::string name, Permutation image);
  const std::map<std::string, Permutation>& automorphisms() const noexcept { return auts_; }
  const Permutation* find_automorphism(const std::string& name) const;

  /// Named roots available to the expression parser (e.g. "gamma0").
  void register_root_name(std::string name, RootVec root);
  const std::map<std::string, RootVec>& root_names() const noexcept { return root_names_; }

 private:
  CartanData data_;
  RationalMatrix gram_;
  RootVec delta_;
  std::vector<RootVec> roots_;
  std::unordered_set<RootVec, RootVecHash> root_set_;
  std::map<std::string, Permutation> auts_;
  std::map<std::string, RootVec> root_names_;
};

/// Standard automorphisms for the builtin families: sigma1/sigma2/sigma12/
/// sigma21 for D_n^(1) (n >= 5 odd or even), pi for A_1^(1), p1/p2/p12/p21 for
/// A_3^(1), rot for A_n^(1).
void register_standard_automorphisms(RootSystem& rs);

RootSystem make_root_system(const TypeLabel& label);

// ---- notation -------------------------------------------------------------

/// Compressed form "a0123" (repeated digits for multiplicities, optional
/// leading "-"), when every coordinate has the same sign and the ambient has
/// at most 10 nodes.
std::optional<std::string> compressed(const RootVec& v);

/// compressed() when available, else "[1,0,-2,...]".
std::string format_root(const RootVec& v);

/// A registered name or compact form plus a multiple of delta, e.g.
/// "eta0 + d", "-a345", "a1 - 2d".
std::string describe_root(const RootVec& v, const RootSystem& rs);

/// Sum of terms joined by + or -: "a0123", "d" (delta), "2d", "[1,0,2,2,1,1]",
/// or a registered name. Example: "a0123 - d".
RootVec parse_root_expr(std::string_view text, const RootSystem& rs);

/// "h1 - h2", "1/2 h3", "hd" (h_delta).
CoweightVec parse_coweight_expr(std::string_view text, int size);
std::string format_coweight(const CoweightVec& f);

}  // namespace weylkit
