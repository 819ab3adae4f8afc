#include "weylkit/translations.hpp"

#include <numeric>

#include "weylkit/error.hpp"
#include "weylkit/normalizer.hpp"

namespace weylkit {

Rational TranslationVector::component(int i, const CartanData& data) const {
  return pair(simple_root(data, i), mu, data);
}

bool InducedMap::is_trivial() const {
  if (!stabilized) return false;
  for (std::size_t i = 0; i < image.size(); ++i)
    if (image[i] != static_cast<int>(i) || shift[i] != 0) return false;
  return true;
}

bool InducedMap::permutes_exactly() const {
  if (!stabilized) return false;
  for (auto k : shift)
    if (k != 0) return false;
  return true;
}

int InducedMap::permutation_order() const {
  if (!stabilized) return 0;
  std::vector<bool> seen(image.size(), false);
  int order = 1;
  for (std::size_t i = 0; i < image.size(); ++i) {
    if (seen[i]) continue;
    int len = 0;
    for (std::size_t j = i; !seen[j]; j = image[j]) {
      seen[j] = true;
      ++len;
    }
    order = std::lcm(order, len);
  }
  return order;
}

InducedMap induced_map(const GroupElement& g, std::span<const RootVec> simple_roots,
                       const RootVec& delta) {
  InducedMap map;
  map.stabilized = true;
  for (const auto& root : simple_roots) {
    const RootVec img = g(root);
    int found = -1;
    std::int64_t shift = 0;
    for (std::size_t s = 0; s < simple_roots.size(); ++s) {
      const RootVec diff = img - simple_roots[s];
      const std::int64_t k = diff[0] / delta[0];
      if (diff == k * delta) {
        found = static_cast<int>(s);
        shift = k;
        break;
      }
    }
    if (found < 0) {
      map.stabilized = false;
      map.image.clear();
      map.shift.clear();
      return map;
    }
    map.image.push_back(found);
    map.shift.push_back(shift);
  }
  return map;
}

GroupElement translation_element(const CoweightVec& mu, const CartanData& data) {
  if (mu.size() != static_cast<std::size_t>(data.size()))
    throw Error(ErrorKind::DimensionMismatch, "coweight size does not match the ambient");
  if (mu.h_delta() != 0)
    throw Error(ErrorKind::NotALatticeTranslation, "translation vector has an h_delta component");
  const int n = data.size();
  const RootVec delta = null_root(data);
  IntMatrix m = IntMatrix::identity(n);
  IntMatrix inv = IntMatrix::identity(n);
  for (int i = 0; i < n; ++i) {
    const Rational p = pair(simple_root(data, i), mu, data);
    if (!is_integer(p))
      throw Error(ErrorKind::NotALatticeTranslation,
                  "<a_" + std::to_string(i) + ", mu> = " + to_string(p) + " is not an integer");
    for (int r = 0; r < n; ++r) {
      m(r, i) -= p.numerator() * delta[r];
      inv(r, i) += p.numerator() * delta[r];
    }
  }
  return GroupElement(std::move(m), std::move(inv), std::nullopt);
}

std::optional<TranslationVector> as_translation(const GroupElement& g, const CartanData& data) {
  const int n = data.size();
  const RootVec delta = null_root(data);
  std::vector<std::int64_t> mu(n);
  for (int i = 0; i < n; ++i) {
    const RootVec diff = g(simple_root(data, i)) - simple_root(data, i);
    const std::int64_t k = diff[0];
    if (diff != k * delta) return std::nullopt;
    mu[i] = -k;
  }
  std::int64_t constraint = 0;
  for (int i = 0; i < n; ++i) constraint += data.marks[i] * mu[i];
  if (constraint != 0) return std::nullopt;
  TranslationVector t{CoweightVec(n)};
  for (int i = 1; i < n; ++i) t.mu.h(i) = mu[i];
  return t;
}

QuasiTranslationReport quasi_translation_analysis(const GroupElement& g,
                                                  std::span<const Subsystem> subsystems,
                                                  const RootSystem& rs, int k_max) {
  if (k_max < 1) throw Error(ErrorKind::InvalidArgument, "k_max must be at least 1");
  QuasiTranslationReport report;
  for (const auto& sub : subsystems) {
    report.subsystem_names.push_back(sub.name);
    report.induced_maps.push_back(induced_map(g, sub.simple_roots, rs.delta()));
  }
  const GroupElement base = g.without_word();
  GroupElement power = base;
  for (int k = 1; k <= k_max; ++k) {
    if (auto t = as_translation(power, rs.cartan())) {
      report.base_order = k;
      report.vector = *t;
      return report;
    }
    power = power * base;
  }
  throw Error(ErrorKind::NotQuasiWithinCap,
              "no power up to " + std::to_string(k_max) + " is a translation");
}

bool conjugation_check(const GroupElement& w, const CoweightVec& mu, const CartanData& data) {
  const GroupElement lhs = w * translation_element(mu, data) * w.inverse();
  return lhs == translation_element(act_on_coweight(w, mu, data), data);
}

}  // namespace weylkit
