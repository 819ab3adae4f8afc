#pragma once

#include <string>

#include <nlohmann/json.hpp>

#include "weylkit/cartan.hpp"
#include "weylkit/lattice.hpp"
#include "weylkit/normalizer.hpp"
#include "weylkit/repro.hpp"
#include "weylkit/translations.hpp"
#include "weylkit/weylgroup.hpp"

namespace weylkit::io {

using nlohmann::json;

/// {"size": n+1, "matrix": [[...]], "marks": [...]}.
json to_json(const CartanData& data);
/// Marks are optional on input and computed when absent. An optional "type"
/// ("D5~") must match the builtin matrix and enables the named automorphisms.
CartanData cartan_from_json(const json& j);

/// {"coords": [...], "text": "a0123"}; "text" only for 0/1-style vectors.
/// {"coords": [...], "text": "a0123"}, "text" only when compressed() applies.
json to_json(const RootVec& v);
json to_json(const CoweightVec& f);
json to_json(const Rational& q);

/// {"matrix": [[...]], "word": [...]}.
json to_json(const GroupElement& g);
GroupElement element_from_json(const json& j);

json to_json(const InducedMap& map, const Subsystem& sub);
json to_json(const Subsystem& sub);
json to_json(const QuasiTranslationReport& report, const RootSystem& rs,
             std::span<const Subsystem> subsystems);
json to_json(const StabilizerHit& hit);
json to_json(const ActionTable& table);
json to_json(const NormalizerPresentation& presentation);
json to_json(const ReproReport& report);

}  // namespace weylkit::io
