#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "weylkit/lattice.hpp"
#include "weylkit/weylgroup.hpp"

namespace weylkit {

struct Subsystem;

/// A level-zero coweight mu = sum_{i>=1} mu_i h_i; mu_0 is derived from
/// sum_i c_i mu_i = 0 and never stored.
struct TranslationVector {
  CoweightVec mu;

  /// <a_i, mu> for 0 <= i <= n.
  Rational component(int i, const CartanData& data) const;
  Rational mu0(const CartanData& data) const { return component(0, data); }

  friend bool operator==(const TranslationVector&, const TranslationVector&) = default;
};

/// g a_r = a_{image[r]} + shift[r] delta on a subsystem's ordered simple roots.
struct InducedMap {
  bool stabilized = false;
  Permutation image;
  std::vector<std::int64_t> shift;

  bool is_trivial() const;
  bool permutes_exactly() const;  // stabilized with every shift zero
  int permutation_order() const;
};

/// Images of the subsystem's simple roots under g; "not stabilized" when
/// some image is not another simple root of the same subsystem plus an
/// integer multiple of delta.
InducedMap induced_map(const GroupElement& g, std::span<const RootVec> simple_roots,
                       const RootVec& delta);

struct QuasiTranslationReport {
  int base_order = 1;
  TranslationVector vector;
  std::vector<std::string> subsystem_names;
  std::vector<InducedMap> induced_maps;
};

/// t_mu: a_i -> a_i - <a_i, mu> delta. Throws NotALatticeTranslation if mu
/// has a nonzero h_delta part or a non-integral pairing.
GroupElement translation_element(const CoweightVec& mu, const CartanData& data);

/// Succeeds iff g a_i - a_i = -mu_i delta for every node.
std::optional<TranslationVector> as_translation(const GroupElement& g, const CartanData& data);

/// Minimal k <= k_max with g^k a translation, and g's induced maps on the
/// given subsystems. Throws NotQuasiWithinCap.
QuasiTranslationReport quasi_translation_analysis(const GroupElement& g,
                                                  std::span<const Subsystem> subsystems,
                                                  const RootSystem& rs, int k_max = 24);

/// w t_mu w^-1 == t_{w mu}.
bool conjugation_check(const GroupElement& w, const CoweightVec& mu, const CartanData& data);

}  // namespace weylkit
