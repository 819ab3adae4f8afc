#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "weylkit/cartan.hpp"
#include "weylkit/lattice.hpp"
#include "weylkit/translations.hpp"
#include "weylkit/weylgroup.hpp"

namespace weylkit {

/// A named simple system inside the ambient root system. Affine subsystems
/// keep the affine node delta - highest_root at index 0, matching the usual
/// labelling where node 0 is the extending node.
struct Subsystem {
  std::string name;
  std::vector<RootVec> simple_roots;
  CartanData sub_cartan;
  TypeLabel type;
  /// Highest root of the finite part, in ambient coordinates.
  RootVec highest_root;
  std::optional<RootVec> affine_node;

  bool affine() const noexcept { return affine_node.has_value(); }
  std::span<const RootVec> finite_simple_roots() const;
  /// Index of `root` among simple_roots, or -1.
  int index_of(const RootVec& root) const;
};

/// Finite parts of every root of the subsystem, sorted; two subsystems with
/// equal sets generate the same reflection group up to delta shifts.
std::vector<RootVec> finite_root_set(std::span<const RootVec> simple_roots, const RootSystem& rs);

/// Builds a finite-type subsystem from its simple roots (one connected A or D
/// component). The order given is kept.
Subsystem make_subsystem(std::string name, std::vector<RootVec> simple_roots,
                         const RootSystem& rs);

/// Appends delta - highest_root as node 0.
Subsystem affine_extension(const Subsystem& sub, const RootSystem& rs);

/// Finite roots orthogonal to every seed, reduced to their canonical simple
/// system (positive roots that are not sums of two positive roots of the
/// set) and split into A/D components. Components are named "C1", "C2", ...
std::vector<Subsystem> orthogonal_subsystem(std::span<const RootVec> seeds,
                                            const RootSystem& rs);

struct SearchOptions {
  int max_len = 8;
  std::size_t cap = 5'000'000;
};

/// One representative per induced permutation of the target list.
struct StabilizerHit {
  GroupElement element;
  /// Generator indices: 0..n are s_0..s_n, n+1.. are the automorphisms in
  /// the order they were passed.
  std::vector<int> letters;
  Word word;
  /// element(targets[i]) == targets[permutation[i]].
  Permutation permutation;
};

/// Breadth-first search over words in s_0 < ... < s_n < automorphisms,
/// deduplicated by matrix. Returns, for every permutation of `targets`
/// realized by some word of length <= max_len, the ShortLex-least such word.
/// Hits are ordered by ShortLex of their words. Throws SearchBudgetExceeded.
std::vector<StabilizerHit> stabilizer_search(std::span<const RootVec> targets,
                                             std::span<const GeneratorToken> automorphisms,
                                             const RootSystem& rs, SearchOptions options = {});

bool shortlex_less(std::span<const int> a, std::span<const int> b);

/// Closure of `generators` under multiplication; throws SearchBudgetExceeded
/// past `cap` elements.
std::vector<GroupElement> generate_group(std::span<const GroupElement> generators, int size,
                                         std::size_t cap = 100'000);

struct ActionTable {
  struct Row {
    std::string label;
    std::vector<InducedMap> maps;
    std::vector<std::string> cells;
  };

  std::vector<std::string> subsystem_names;
  std::vector<Row> rows;

  std::string to_markdown() const;
};

/// Human-readable cell: "-" when trivial, "pi_<name>" for the swap of an
/// A_1^(1) system, a ShortLex word in p1, p2 for A_3^(1) systems, otherwise
/// the image list. Nonzero delta shifts are appended.
std::string describe_induced_map(const InducedMap& map, const Subsystem& sub);

ActionTable action_table(std::span<const std::pair<std::string, GroupElement>> elements,
                         std::span<const Subsystem> subsystems, const RootSystem& rs);

struct NormalizerBlock {
  Subsystem component;
  std::vector<GroupElement> reflections;
  /// Diagram-group elements acting trivially on every other centralizer
  /// component; a minimal generating set, ShortLex-least first.
  std::vector<StabilizerHit> diagram_generators;
};

struct CommutationCheck {
  std::size_t first = 0;
  std::size_t second = 0;
  bool commute = false;
};

/// N(W_J') = N_J' x| W_J' with N_J' = C x| D, where C is the centralizer of
/// the subsystem and D the group of elements stabilizing both J' and the
/// centralizer's simple system.
struct NormalizerPresentation {
  Subsystem subsystem;
  std::vector<GroupElement> subgroup_generators;
  std::vector<Subsystem> centralizer;
  std::vector<StabilizerHit> diagram_group;
  std::vector<NormalizerBlock> blocks;
  /// D elements trivial on the whole centralizer (act on J' alone).
  std::vector<StabilizerHit> subsystem_only_generators;
  /// Generators of D modulo the block parts: elements exchanging centralizer
  /// components with one another.
  std::vector<StabilizerHit> exchange_generators;
  std::vector<CommutationCheck> commutation;
  std::vector<std::string> verification;

  bool blocks_commute() const;
};

/// `known` subsystems, when one has the same root set as a centralizer
/// component, replace that component (keeping their names and order).
NormalizerPresentation assemble_normalizer(const Subsystem& sub_affine,
                                           std::span<const GeneratorToken> automorphisms,
                                           const RootSystem& rs, SearchOptions options = {},
                                           std::span<const Subsystem> known = {});

}  // namespace weylkit
