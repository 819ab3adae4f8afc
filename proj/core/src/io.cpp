#include "weylkit/io.hpp"

#include "weylkit/error.hpp"

namespace weylkit::io {

json to_json(const CartanData& data) {
  json j{{"size", data.size()}, {"matrix", data.matrix.to_rows()}, {"affine", data.affine}};
  if (!data.marks.empty()) j["marks"] = data.marks;
  if (data.label) j["type"] = data.label->to_string();
  return j;
}

CartanData cartan_from_json(const json& j) {
  try {
    const auto rows = j.at("matrix").get<std::vector<std::vector<std::int64_t>>>();
    if (rows.empty()) throw Error(ErrorKind::InvalidCartan, "empty matrix");
    for (const auto& r : rows)
      if (r.size() != rows.size()) throw Error(ErrorKind::InvalidCartan, "matrix is not square");
    if (j.contains("size") && j.at("size").get<std::size_t>() != rows.size())
      throw Error(ErrorKind::InvalidCartan, "size does not match the matrix");
    std::optional<std::vector<std::int64_t>> marks;
    if (j.contains("marks")) marks = j.at("marks").get<std::vector<std::int64_t>>();
    const bool affine = j.value("affine", true);
    CartanData data = make_cartan(IntMatrix::from_rows(rows), std::move(marks), affine);
    if (j.contains("type")) {
      const TypeLabel label = TypeLabel::parse(j.at("type").get<std::string>());
      if (label.affine != affine || load_builtin(label).matrix != data.matrix)
        throw Error(ErrorKind::InvalidCartan, "matrix does not match type " + label.to_string());
      data.label = label;
    }
    return data;
  } catch (const json::exception& e) {
    throw Error(ErrorKind::InvalidCartan, std::string("malformed Cartan JSON: ") + e.what());
  }
}

json to_json(const RootVec& v) {
  json j{{"coords", v.vec()}};
  if (auto c = compressed(v)) j["text"] = *c;
  return j;
}

json to_json(const Rational& q) {
  if (is_integer(q)) return q.numerator();
  return to_string(q);
}

json to_json(const CoweightVec& f) {
  json h = json::array();
  for (std::size_t i = 1; i <= f.rank(); ++i) h.push_back(to_json(f.h(i)));
  return json{{"h", h}, {"hd", to_json(f.h_delta())}, {"text", format_coweight(f)}};
}

json to_json(const GroupElement& g) {
  json j{{"matrix", g.matrix().to_rows()}};
  if (g.word()) j["word"] = *g.word();
  return j;
}

GroupElement element_from_json(const json& j) {
  try {
    const auto rows = j.at("matrix").get<std::vector<std::vector<std::int64_t>>>();
    std::optional<Word> word;
    if (j.contains("word")) word = j.at("word").get<Word>();
    return GroupElement::from_matrix(IntMatrix::from_rows(rows), std::move(word));
  } catch (const json::exception& e) {
    throw Error(ErrorKind::InvalidArgument, std::string("malformed element JSON: ") + e.what());
  }
}

json to_json(const InducedMap& map, const Subsystem& sub) {
  json j{{"subsystem", sub.name}, {"stabilized", map.stabilized}, {"text", describe_induced_map(map, sub)}};
  if (map.stabilized) {
    j["image"] = map.image;
    j["shift"] = map.shift;
    j["permutation_order"] = map.permutation_order();
  }
  return j;
}

json to_json(const Subsystem& sub) {
  json roots = json::array();
  for (const auto& r : sub.simple_roots) roots.push_back(format_root(r));
  return json{{"name", sub.name}, {"type", sub.type.to_string()}, {"simple_roots", roots},
              {"highest_root", format_root(sub.highest_root)}, {"affine", sub.affine()}};
}

json to_json(const QuasiTranslationReport& report, const RootSystem& rs, std::span<const Subsystem> subsystems) {
  json maps = json::array();
  for (std::size_t i = 0; i < report.induced_maps.size() && i < subsystems.size(); ++i)
    maps.push_back(to_json(report.induced_maps[i], subsystems[i]));
  json comps = json::array();
  for (int i = 0; i < rs.size(); ++i) comps.push_back(to_json(report.vector.component(i, rs.cartan())));
  return json{{"k", report.base_order},
              {"vector", to_json(report.vector.mu)},
              {"components", comps},
              {"induced_maps", maps}};
}

json to_json(const StabilizerHit& hit) {
  return json{{"word", hit.word}, {"length", hit.letters.size()}, {"permutation", hit.permutation},
              {"matrix", hit.element.matrix().to_rows()}};
}

json to_json(const ActionTable& table) {
  json rows = json::array();
  for (const auto& r : table.rows) rows.push_back(json{{"element", r.label}, {"cells", r.cells}});
  return json{{"subsystems", table.subsystem_names}, {"rows", rows}};
}

json to_json(const NormalizerPresentation& p) {
  auto hits = [](const std::vector<StabilizerHit>& v) {
    json a = json::array();
    for (const auto& h : v) a.push_back(to_json(h));
    return a;
  };
  json centralizer = json::array();
  for (const auto& c : p.centralizer) centralizer.push_back(to_json(c));
  json blocks = json::array();
  for (const auto& b : p.blocks)
    blocks.push_back(json{{"component", to_json(b.component)},
                          {"reflections", b.reflections.size()},
                          {"diagram_generators", hits(b.diagram_generators)}});
  json commutation = json::array();
  for (const auto& c : p.commutation)
    commutation.push_back(json{{"first", c.first}, {"second", c.second}, {"commute", c.commute}});
  return json{{"subsystem", to_json(p.subsystem)},
              {"centralizer", centralizer},
              {"diagram_group_order", p.diagram_group.size()},
              {"diagram_group", hits(p.diagram_group)},
              {"blocks", blocks},
              {"subsystem_only_generators", hits(p.subsystem_only_generators)},
              {"exchange_generators", hits(p.exchange_generators)},
              {"blocks_commute", p.blocks_commute()},
              {"commutation", commutation},
              {"verification", p.verification}};
}

json to_json(const ReproReport& report) {
  json cases = json::array();
  for (const auto& c : report.cases)
    cases.push_back(json{{"id", c.id},
                         {"reference", c.reference},
                         {"status", std::string(to_string(c.status))},
                         {"computed", c.computed},
                         {"expected", c.expected},
                         {"notes", c.notes}});
  return json{{"cases", cases},
              {"summary",
               {{"pass", report.count(CaseStatus::Pass)},
                {"fail", report.count(CaseStatus::Fail)},
                {"discrepancy", report.count(CaseStatus::Discrepancy)}}}};
}

}  // namespace weylkit::io
