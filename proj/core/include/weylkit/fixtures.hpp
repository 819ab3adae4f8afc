#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "weylkit/lattice.hpp"
#include "weylkit/normalizer.hpp"
#include "weylkit/translations.hpp"
#include "weylkit/weylgroup.hpp"

namespace weylkit {

struct NamedElement {
  std::string name;
  std::string description;
  GroupElement element;
};

/// The (A_3 x A_1 x A_1)^(1) configuration inside D_5^(1): the conjugate by
/// w = s1 s3 s2 of the standard centralizer of a_0.
struct GammaEtaBetaSystem {
  struct ReflectionWord {
    std::string root_name;
    std::string word;
  };

  RootSystem rs;
  Subsystem gamma;  // [gamma0, gamma1]
  Subsystem eta;    // [eta0, eta1]
  Subsystem beta;   // [beta0, beta1, beta2, beta3]
  GroupElement conjugator;
  /// Reflection words in the simple reflections, stored verbatim and checked
  /// against reflection_through on construction.
  std::vector<ReflectionWord> reflection_words;

  std::vector<Subsystem> subsystems() const { return {gamma, eta, beta}; }
  /// "gamma0", "eta1", "beta3", ...
  RootVec root(std::string_view name) const;
  GroupElement reflection(std::string_view name) const;
  GroupElement word(std::string_view text) const { return evaluate_word(text, rs); }
  /// The cyclic automorphism group <sigma1 sigma2>, as search generators.
  std::vector<GeneratorToken> cyclic_automorphisms() const;
};

/// Throws FixtureVerificationFailed naming the first identity that fails.
GammaEtaBetaSystem build_geb_system();
/// Built once and shared.
const GammaEtaBetaSystem& geb_system();

/// g' = s0 s1 s4 s5 and sigma1 sigma2 with the elements built from them:
/// takenawa.t_eta1, takenawa.t_beta1 and the four conjugates
/// takenawa.T1..T4 = (sigma1 sigma2)^(i-1) t_beta1 (sigma1 sigma2)^(1-i).
std::vector<NamedElement> takenawa_elements(const GammaEtaBetaSystem& geb);

/// secondvar.t_eta1 = g' sigma1 sigma2 s2 s3 s2 and
/// secondvar.t_gamma1 = sigma1 sigma2 s_gamma1.
std::vector<NamedElement> second_variation_elements(const GammaEtaBetaSystem& geb);

struct OSDirection {
  std::string name;
  std::string definition;
  GroupElement element;
  TranslationVector vector;
  /// Displayed weight for the direction, when one is stated.
  std::optional<CoweightVec> displayed;
  /// Displayed images of a_0..a_5.
  std::vector<RootVec> displayed_images;
};

/// T1 = (t_gamma1 t_eta1)^-1, T2 = (sigma1 sigma2 s_b2 s_b1 s_b0)^-2,
/// T3 = s_gamma1 (sigma1 sigma2 s_b3 s_b2 s_b1)^-1, T4 = t_beta1 t_(hb3-hb2).
/// Each must be a translation.
std::vector<OSDirection> os_directions(const GammaEtaBetaSystem& geb);

/// Fundamental weights of a finite or affine A/D subsystem: the solution of
/// coroot_j = sum_k A(k, j) h_k over the finite nodes.
std::vector<CoweightVec> subsystem_fundamental_weights(const Subsystem& sub,
                                                      const RootSystem& rs);

const NamedElement& find_named(const std::vector<NamedElement>& elements, std::string_view name);

/// Standalone A_1^(1): t_h1 = pi s1.
struct ExampleA1 {
  RootSystem rs;
  GroupElement t_h1;
};
ExampleA1 example_a1();

/// Standalone A_3^(1) with nodes beta0..beta3 and automorphisms p1, p2.
struct ExampleA3 {
  RootSystem rs;
  GroupElement rotation;  // p1 p2
  GroupElement t_h1;      // p1 p2 s3 s2 s1
  /// t_i = (p1 p2)^(i-1) t_h1 (p1 p2)^(1-i), i = 1..4.
  std::vector<GroupElement> t;
};
ExampleA3 example_a3();

}  // namespace weylkit
