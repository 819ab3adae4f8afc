#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "weylkit/matrix.hpp"
#include "weylkit/rational.hpp"
#include "weylkit/vectors.hpp"

namespace weylkit {

enum class Family { A, D };

/// A_n or D_n, optionally affine ("D5~").
struct TypeLabel {
  Family family = Family::A;
  int rank = 1;
  bool affine = false;

  /// "A3", "D5~".
  std::string to_string() const;
  /// Accepts "D5~", "D5^(1)", "A1" (case-insensitive family letter).
  static TypeLabel parse(std::string_view text);

  friend bool operator==(const TypeLabel&, const TypeLabel&) = default;
};

/// Generalized Cartan matrix with A(i, j) = <a_i, coroot_j>, so that
/// s_i a_j = a_j - A(j, i) a_i. For affine data node 0 is the affine node and
/// `marks` holds the null-root coefficients c_0..c_n with c_0 = 1; finite data
/// uses nodes 0..r-1 and leaves `marks` empty.
///
/// Construct through load_builtin() or make_cartan(); the raw aggregate is
/// exposed so that validate() can report on arbitrary input.
struct CartanData {
  IntMatrix matrix;
  std::vector<std::int64_t> marks;
  bool affine = true;
  std::optional<TypeLabel> label;

  int size() const noexcept { return static_cast<int>(matrix.rows()); }
  std::int64_t operator()(int i, int j) const { return matrix(i, j); }
};

struct ValidationReport {
  std::vector<std::string> issues;
  bool ok() const noexcept { return issues.empty(); }
};

ValidationReport validate(const CartanData& data);

/// Validates and, for affine input without marks, computes them. Throws
/// Error(InvalidCartan) carrying the joined report.
CartanData make_cartan(IntMatrix matrix, std::optional<std::vector<std::int64_t>> marks,
                       bool affine);

CartanData load_builtin(const TypeLabel& label);

/// Unique positive primitive vector c with sum_i c_i A(i, j) = 0 and c_0 = 1.
std::vector<std::int64_t> compute_marks(const IntMatrix& matrix);

/// m_ij in {2, 3, 4, 6}; 0 stands for an infinite bond (A_1^(1)).
int bond_order(const CartanData& data, int i, int j);

/// Squared lengths (a_i, a_i), long roots normalized to 2 per connected
/// component. Throws NotSymmetrizable.
std::vector<Rational> root_lengths(const CartanData& data);

/// G(i, j) = (a_i, a_j) = A(j, i) (a_i, a_i) / 2.
RationalMatrix bilinear_gram(const CartanData& data);

struct DiagramComponent {
  TypeLabel type;
  /// Canonical node order: path order for A, Bourbaki order for D (long arm
  /// first, branch node at rank-2, the two short legs last).
  std::vector<RootVec> simple_roots;
};

/// Splits a set of roots into connected components of their Gram graph and
/// identifies each as A_m or D_m. `gram` is the ambient bilinear form.
std::vector<DiagramComponent> classify_components(std::span<const RootVec> roots,
                                                  const RationalMatrix& gram);
std::vector<DiagramComponent> classify_components(std::span<const RootVec> roots,
                                                  const CartanData& ambient);

}  // namespace weylkit
