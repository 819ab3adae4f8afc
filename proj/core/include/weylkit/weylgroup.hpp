#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "weylkit/cartan.hpp"
#include "weylkit/lattice.hpp"
#include "weylkit/matrix.hpp"
#include "weylkit/vectors.hpp"

namespace weylkit {

/// Display tokens of the word an element was built from, leftmost first.
using Word = std::vector<std::string>;

struct GeneratorToken {
  enum class Kind { Reflection, Automorphism, RootReflection };

  Kind kind = Kind::Reflection;
  /// Node index for Reflection.
  int index = -1;
  /// Registered name ("sigma12") or "aut:[...]" for Automorphism.
  std::string name;
  /// a_i -> a_{image[i]} for Automorphism.
  Permutation image;
  /// Root for RootReflection.
  RootVec root;
  bool inverted = false;

  std::string text() const;
};

/// An element of the extended affine Weyl group, stored as the integer
/// matrix of its action on root coordinates (column convention: the image of
/// a_j is column j). g * h applies h first. Equality and hashing look at the
/// matrix only; the word is provenance.
class GroupElement {
 public:
  GroupElement() = default;
  GroupElement(IntMatrix matrix, IntMatrix inverse, std::optional<Word> word);

  static GroupElement identity(int size);
  /// Computes the inverse; throws InvalidArgument unless unimodular.
  static GroupElement from_matrix(IntMatrix matrix, std::optional<Word> word = std::nullopt);

  int size() const noexcept { return static_cast<int>(matrix_.rows()); }
  const IntMatrix& matrix() const noexcept { return matrix_; }
  const IntMatrix& inverse_matrix() const noexcept { return inverse_; }
  const std::optional<Word>& word() const noexcept { return word_; }
  std::string word_text() const;

  GroupElement with_word(Word word) const;
  GroupElement without_word() const { return GroupElement(matrix_, inverse_, std::nullopt); }

  GroupElement inverse() const;
  GroupElement pow(long long exponent) const;
  bool is_identity() const { return matrix_.is_identity(); }
  bool commutes_with(const GroupElement& other) const;

  RootVec operator()(const RootVec& v) const;

  friend GroupElement operator*(const GroupElement& a, const GroupElement& b);
  friend bool operator==(const GroupElement& a, const GroupElement& b) {
    return a.matrix_ == b.matrix_;
  }

 private:
  IntMatrix matrix_;
  IntMatrix inverse_;
  std::optional<Word> word_;
};

struct GroupElementHash {
  std::size_t operator()(const GroupElement& g) const noexcept {
    return IntMatrixHash{}(g.matrix());
  }
};

/// s_i a_j = a_j - A(j, i) a_i.
GroupElement simple_reflection(int i, const CartanData& data);

/// a_i -> a_{image[i]}; throws NotDiagramSymmetry unless the permutation
/// preserves the Cartan matrix.
GroupElement diagram_automorphism(const Permutation& image, const CartanData& data,
                                  std::string name = {});

/// Tokens: "s3", compressed "s0145" (ambients with at most 10 nodes),
/// registered automorphism names ("sigma12"), "aut:[5,4,3,2,0,1]",
/// "r:<root-expr>" (reflection through a root); any token may carry "^-1".
std::vector<GeneratorToken> parse_word(std::string_view text, const RootSystem& rs);

GroupElement evaluate_token(const GeneratorToken& token, const RootSystem& rs);

/// Product of the tokens with the rightmost applied first.
GroupElement evaluate_word(std::span<const GeneratorToken> tokens, const RootSystem& rs);
GroupElement evaluate_word(std::string_view text, const RootSystem& rs);

/// Contragredient action on V*, <g v, g f> = <v, f>.
CoweightVec act_on_coweight(const GroupElement& g, const CoweightVec& f, const CartanData& data);

/// Matrix of g on V* in the basis (h_1, ..., h_n, h_delta), column convention.
IntMatrix coweight_matrix(const GroupElement& g, const CartanData& data);

/// Matrix of g on V in the basis (a_1, ..., a_n, delta), column convention.
IntMatrix delta_basis_matrix(const GroupElement& g, const CartanData& data);

/// s_a(v) = v - 2 (a, v) / (a, a) a. Throws NotARealRoot.
GroupElement reflection_through(const RootVec& root, const RootSystem& rs);

/// Least k <= cap with g^k = 1, or nullopt.
std::optional<int> element_order(const GroupElement& g, int cap);

}  // namespace weylkit
