#include "weylkit_cli/cli.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <functional>
#include <memory>
#include <ostream>
#include <sstream>

#include "weylkit/error.hpp"
#include "weylkit/fixtures.hpp"
#include "weylkit/io.hpp"
#include "weylkit/normalizer.hpp"
#include "weylkit/repro.hpp"
#include "weylkit/translations.hpp"

namespace weylkit::cli {

namespace {

using io::json;

constexpr int kOrderCap = 64;

struct Globals {
  std::string type = "D5~";
  std::string cartan_file;
  std::string format = "md";

  bool json_output() const { return format == "json"; }
};

bool is_geb_ambient(const Globals& g) {
  return g.cartan_file.empty() && TypeLabel::parse(g.type) == TypeLabel{Family::D, 5, true};
}

// The default D5~ ambient carries the gamma/eta/beta root names.
RootSystem load_ambient(const Globals& g) {
  if (!g.cartan_file.empty()) {
    std::ifstream in(g.cartan_file);
    if (!in) throw Error(ErrorKind::InvalidArgument, "cannot open '" + g.cartan_file + "'");
    json j;
    try {
      in >> j;
    } catch (const json::exception& e) {
      throw Error(ErrorKind::ParseError, g.cartan_file + ": " + e.what());
    }
    RootSystem rs(io::cartan_from_json(j));
    register_standard_automorphisms(rs);
    return rs;
  }
  if (is_geb_ambient(g)) return geb_system().rs;
  return make_root_system(TypeLabel::parse(g.type));
}

SearchOptions search_options(int max_len) {
  SearchOptions o;
  o.max_len = max_len;
  if (const char* cap = std::getenv("WEYLKIT_SEARCH_CAP")) {
    try {
      std::size_t used = 0;
      const unsigned long long v = std::stoull(cap, &used);
      if (used != std::string(cap).size() || v == 0) throw std::invalid_argument(cap);
      o.cap = static_cast<std::size_t>(v);
    } catch (const std::exception&) {
      throw Error(ErrorKind::InvalidArgument, std::string("WEYLKIT_SEARCH_CAP must be a positive integer, got '") +
                                                  cap + "'");
    }
  }
  return o;
}

std::vector<GeneratorToken> automorphism_tokens(const std::string& spec, const RootSystem& rs) {
  if (spec == "none" || spec.empty()) return {};
  if (spec == "cyc4") {
    if (!rs.find_automorphism("sigma12"))
      throw Error(ErrorKind::InvalidArgument, "cyc4 needs a D_n^(1) ambient");
    return parse_word("sigma12", rs);
  }
  std::string words = spec;
  std::replace(words.begin(), words.end(), ',', ' ');
  return parse_word(words, rs);
}

std::vector<RootVec> parse_roots(const std::vector<std::string>& exprs, const RootSystem& rs) {
  std::vector<RootVec> out;
  for (const auto& e : exprs) out.push_back(parse_root_expr(e, rs));
  return out;
}

std::string perm_text(const Permutation& p) {
  std::string s = "[";
  for (std::size_t i = 0; i < p.size(); ++i) s += (i ? "," : "") + std::to_string(p[i]);
  return s + "]";
}

std::string root_list(std::span<const RootVec> roots, const RootSystem& rs) {
  std::string s;
  for (const auto& r : roots) s += (s.empty() ? "" : ", ") + describe_root(r, rs);
  return "{" + s + "}";
}

json element_json(const GroupElement& g, const RootSystem& rs) {
  json j = io::to_json(g);
  const auto order = element_order(g, kOrderCap);
  j["order"] = order ? json(*order) : json(nullptr);
  j["identity"] = g.is_identity();
  const auto t = as_translation(g, rs.cartan());
  j["translation"] = t ? io::to_json(t->mu) : json(nullptr);
  json images = json::array();
  for (int i = 0; i < rs.size(); ++i) images.push_back(describe_root(g(rs.simple(i)), rs));
  j["simple_images"] = images;
  return j;
}

void element_md(std::ostream& out, const GroupElement& g, const RootSystem& rs) {
  out << "word: " << (g.word() ? g.word_text() : "(none)") << "\n";
  out << "matrix: " << to_string(g.matrix()) << "\n";
  const auto order = element_order(g, kOrderCap);
  out << "order: " << (order ? std::to_string(*order) : "> " + std::to_string(kOrderCap)) << "\n";
  if (g.is_identity()) out << "identity\n";
  const auto t = as_translation(g, rs.cartan());
  out << "translation: " << (t ? format_coweight(t->mu) : "no") << "\n";
  out << "| root | image |\n|---|---|\n";
  for (int i = 0; i < rs.size(); ++i)
    out << "| a" << i << " | " << describe_root(g(rs.simple(i)), rs) << " |\n";
}

// ---- commands ----------------------------------------------------------------

struct RootsArgs {
  bool positive = false;
};

int cmd_roots(const Globals& g, const RootsArgs& a, std::ostream& out) {
  const RootSystem rs = load_ambient(g);
  std::vector<RootVec> roots;
  for (const auto& r : rs.finite_roots())
    if (!a.positive || RootSystem::is_positive(r)) roots.push_back(r);
  std::sort(roots.begin(), roots.end(), [](const RootVec& x, const RootVec& y) {
    std::int64_t hx = 0, hy = 0;
    for (auto c : x.coords()) hx += c;
    for (auto c : y.coords()) hy += c;
    return hx != hy ? hx > hy : x > y;
  });
  if (g.json_output()) {
    json list = json::array();
    for (const auto& r : roots) list.push_back(io::to_json(r));
    out << json{{"cartan", io::to_json(rs.cartan())},
                {"delta", io::to_json(rs.delta())},
                {"count", roots.size()},
                {"roots", list}}
               .dump(2)
        << "\n";
  } else {
    out << roots.size() << " roots, delta = " << format_root(rs.delta()) << "\n";
    for (const auto& r : roots) out << format_root(r) << "\n";
  }
  return 0;
}

struct EvalArgs {
  std::string word;
  std::string act_on;
};

int cmd_eval(const Globals& g, const EvalArgs& a, std::ostream& out) {
  const RootSystem rs = load_ambient(g);
  const GroupElement e = evaluate_word(a.word, rs);
  json image;
  std::string image_text;
  if (!a.act_on.empty()) {
    if (a.act_on.find('h') != std::string::npos) {
      const CoweightVec f = act_on_coweight(e, parse_coweight_expr(a.act_on, rs.size()), rs.cartan());
      image = io::to_json(f);
      image_text = format_coweight(f);
    } else {
      const RootVec v = e(parse_root_expr(a.act_on, rs));
      image = io::to_json(v);
      image["described"] = describe_root(v, rs);
      image_text = format_root(v);
      if (describe_root(v, rs) != image_text) image_text += " (" + describe_root(v, rs) + ")";
    }
  }
  if (g.json_output()) {
    json j = element_json(e, rs);
    if (!a.act_on.empty()) j["image"] = image;
    out << j.dump(2) << "\n";
  } else if (!a.act_on.empty()) {
    out << image_text << "\n";
  } else {
    element_md(out, e, rs);
  }
  return 0;
}

struct AnalyzeArgs {
  std::string word;
  std::string subsystems = "geb";
  int kmax = 24;
};

int cmd_analyze(const Globals& g, const AnalyzeArgs& a, std::ostream& out) {
  const RootSystem rs = load_ambient(g);
  std::vector<Subsystem> subs;
  if (a.subsystems == "geb") {
    if (!is_geb_ambient(g)) throw Error(ErrorKind::InvalidArgument, "--subsystems geb needs the D5~ ambient");
    subs = geb_system().subsystems();
  } else if (a.subsystems != "none") {
    throw Error(ErrorKind::InvalidArgument, "--subsystems must be geb or none");
  }
  const GroupElement e = evaluate_word(a.word, rs);
  const auto report = quasi_translation_analysis(e, subs, rs, a.kmax);
  if (g.json_output()) {
    json j = io::to_json(report, rs, subs);
    j["element"] = io::to_json(e);
    json images = json::object();
    for (const auto& s : subs)
      for (const auto& r : s.simple_roots) images[describe_root(r, rs)] = describe_root(e(r), rs);
    j["images"] = images;
    out << j.dump(2) << "\n";
    return 0;
  }
  out << "k = " << report.base_order << ", g^k = t(" << format_coweight(report.vector.mu) << ")\n";
  if (subs.empty()) return 0;
  out << "| root | image |\n|---|---|\n";
  for (const auto& s : subs)
    for (const auto& r : s.simple_roots) out << "| " << describe_root(r, rs) << " | " << describe_root(e(r), rs) << " |\n";
  out << "\n| subsystem | induced map |\n|---|---|\n";
  for (std::size_t i = 0; i < subs.size(); ++i)
    out << "| " << subs[i].name << " | " << describe_induced_map(report.induced_maps[i], subs[i]) << " |\n";
  return 0;
}

struct CentralizerArgs {
  std::vector<std::string> seeds;
};

int cmd_centralizer(const Globals& g, const CentralizerArgs& a, std::ostream& out) {
  const RootSystem rs = load_ambient(g);
  const auto seeds = parse_roots(a.seeds, rs);
  const auto comps = orthogonal_subsystem(seeds, rs);
  if (g.json_output()) {
    json list = json::array();
    for (const auto& c : comps) list.push_back(io::to_json(c));
    out << json{{"components", list}}.dump(2) << "\n";
    return 0;
  }
  if (comps.empty()) out << "trivial\n";
  for (const auto& c : comps) out << c.name << ": " << c.type.to_string() << " " << root_list(c.simple_roots, rs) << "\n";
  return 0;
}

struct StabilizeArgs {
  std::vector<std::string> targets;
  std::string auts = "none";
  int max_len = 8;
};

int cmd_stabilize(const Globals& g, const StabilizeArgs& a, std::ostream& out) {
  const RootSystem rs = load_ambient(g);
  const auto targets = parse_roots(a.targets, rs);
  const auto tokens = automorphism_tokens(a.auts, rs);
  const auto hits = stabilizer_search(targets, tokens, rs, search_options(a.max_len));
  if (g.json_output()) {
    json list = json::array();
    for (const auto& h : hits) list.push_back(io::to_json(h));
    out << json{{"hits", list}}.dump(2) << "\n";
    return 0;
  }
  out << "| word | length | permutation |\n|---|---|---|\n";
  for (const auto& h : hits)
    out << "| " << h.element.word_text() << " | " << h.letters.size() << " | " << perm_text(h.permutation) << " |\n";
  return 0;
}

struct NormalizerArgs {
  std::vector<std::string> subsystem;
  std::string auts;
  int max_len = 8;
};

int cmd_normalizer(const Globals& g, const NormalizerArgs& a, std::ostream& out) {
  const RootSystem rs = load_ambient(g);
  const bool geb = is_geb_ambient(g);
  Subsystem sub;
  std::vector<Subsystem> known;
  if (geb) known = geb_system().subsystems();
  if (a.subsystem.size() == 1 && geb &&
      std::any_of(known.begin(), known.end(), [&](const Subsystem& s) { return s.name == a.subsystem[0]; })) {
    sub = *std::find_if(known.begin(), known.end(), [&](const Subsystem& s) { return s.name == a.subsystem[0]; });
  } else {
    sub = affine_extension(make_subsystem("J", parse_roots(a.subsystem, rs), rs), rs);
  }
  const std::string auts = a.auts.empty() ? (rs.find_automorphism("sigma12") ? "cyc4" : "none") : a.auts;
  const auto tokens = automorphism_tokens(auts, rs);
  const auto p = assemble_normalizer(sub, tokens, rs, search_options(a.max_len), known);

  std::vector<std::pair<std::string, GroupElement>> rows;
  for (const auto& b : p.blocks)
    for (const auto& h : b.diagram_generators) rows.emplace_back(h.element.word_text(), h.element);
  for (const auto& h : p.subsystem_only_generators) rows.emplace_back(h.element.word_text(), h.element);
  for (const auto& h : p.exchange_generators) rows.emplace_back(h.element.word_text(), h.element);
  std::vector<Subsystem> columns = p.centralizer;
  columns.push_back(p.subsystem);
  const auto table = action_table(rows, columns, rs);

  if (g.json_output()) {
    json j = io::to_json(p);
    j["action_table"] = io::to_json(table);
    out << j.dump(2) << "\n";
    return 0;
  }
  out << "subsystem " << p.subsystem.name << ": " << p.subsystem.type.to_string() << " "
      << root_list(p.subsystem.simple_roots, rs) << "\n";
  for (const auto& c : p.centralizer)
    out << "centralizer " << c.name << ": " << c.type.to_string() << " " << root_list(c.simple_roots, rs) << "\n";
  out << "diagram group order: " << p.diagram_group.size() << "\n";
  for (const auto& b : p.blocks) {
    out << "block " << b.component.name << ":";
    for (const auto& h : b.diagram_generators) out << " <" << h.element.word_text() << ">";
    out << "\n";
  }
  for (const auto& h : p.exchange_generators) out << "exchange: " << h.element.word_text() << "\n";
  out << "blocks commute: " << (p.blocks_commute() ? "yes" : "no") << "\n\n" << table.to_markdown();
  return 0;
}

// ---- fixtures -------------------------------------------------------------------

struct CatalogEntry {
  std::string name;
  std::string description;
  GroupElement element;
  const RootSystem* rs;
};

std::vector<CatalogEntry> catalog() {
  static const ExampleA1 a1 = example_a1();
  static const ExampleA3 a3 = example_a3();
  const auto& geb = geb_system();
  std::vector<CatalogEntry> out;
  for (const auto& e : takenawa_elements(geb)) out.push_back({e.name, e.description, e.element, &geb.rs});
  for (const auto& e : second_variation_elements(geb)) out.push_back({e.name, e.description, e.element, &geb.rs});
  for (const auto& d : os_directions(geb)) out.push_back({"os." + d.name, d.definition, d.element, &geb.rs});
  for (const auto& rw : geb.reflection_words)
    out.push_back({"geb.s_" + rw.root_name, "reflection through " + rw.root_name + " = " + rw.word,
                   geb.reflection(rw.root_name), &geb.rs});
  out.push_back({"geb.w", "s1 s3 s2", geb.conjugator, &geb.rs});
  out.push_back({"a1.t_h1", "pi s1 in A1~", a1.t_h1, &a1.rs});
  out.push_back({"a3.rotation", "p1 p2 in A3~", a3.rotation, &a3.rs});
  for (std::size_t i = 0; i < a3.t.size(); ++i)
    out.push_back({"a3.t" + std::to_string(i + 1), "(p1 p2)^" + std::to_string(i) + " t_h1 (p1 p2)^-" + std::to_string(i),
                   a3.t[i], &a3.rs});
  return out;
}

int cmd_fixtures_list(const Globals& g, std::ostream& out) {
  const auto entries = catalog();
  if (g.json_output()) {
    json list = json::array();
    for (const auto& e : entries) list.push_back(json{{"name", e.name}, {"description", e.description}});
    out << list.dump(2) << "\n";
    return 0;
  }
  for (const auto& e : entries) out << e.name << "  " << e.description << "\n";
  return 0;
}

int cmd_fixtures_show(const Globals& g, const std::string& name, std::ostream& out) {
  const auto entries = catalog();
  const auto it = std::find_if(entries.begin(), entries.end(), [&](const CatalogEntry& e) { return e.name == name; });
  if (it == entries.end()) throw Error(ErrorKind::InvalidArgument, "no fixture named '" + name + "'");
  const RootSystem& rs = *it->rs;
  const bool on_geb = &rs == &geb_system().rs;
  if (g.json_output()) {
    json j = element_json(it->element, rs);
    j["name"] = it->name;
    j["description"] = it->description;
    if (on_geb) {
      json images = json::object();
      for (const auto& s : geb_system().subsystems())
        for (const auto& r : s.simple_roots) images[describe_root(r, rs)] = describe_root(it->element(r), rs);
      j["geb_images"] = images;
    }
    out << j.dump(2) << "\n";
    return 0;
  }
  out << it->name << ": " << it->description << "\n";
  element_md(out, it->element, rs);
  if (on_geb) {
    out << "\n| root | image |\n|---|---|\n";
    for (const auto& s : geb_system().subsystems())
      for (const auto& r : s.simple_roots)
        out << "| " << describe_root(r, rs) << " | " << describe_root(it->element(r), rs) << " |\n";
  }
  return 0;
}

// ---- reproduce ---------------------------------------------------------------------

std::string md_cell(std::string s) {
  std::string out;
  for (char c : s) out += c == '|' ? std::string("\\|") : std::string(1, c);
  return out;
}

int cmd_reproduce(const Globals& g, const std::string& suite, std::ostream& out) {
  const ReproReport report = reproduce(suite);
  if (g.json_output()) {
    out << io::to_json(report).dump(2) << "\n";
  } else {
    out << "| id | status | computed | expected | notes |\n|---|---|---|---|---|\n";
    for (const auto& c : report.cases)
      out << "| " << c.id << " | " << to_string(c.status) << " | " << md_cell(c.computed) << " | "
          << md_cell(c.expected) << " | " << md_cell(c.notes) << " |\n";
    out << "\n" << report.count(CaseStatus::Pass) << " pass, " << report.count(CaseStatus::Fail) << " fail, "
        << report.count(CaseStatus::Discrepancy) << " discrepancy\n";
  }
  return report.ok() ? 0 : 1;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact computations in extended affine Weyl groups", "weylkit"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals g;
  app.add_option("--type", g.type, "Builtin ambient type, e.g. D5~, A3~")->capture_default_str();
  app.add_option("--cartan-file", g.cartan_file, "JSON Cartan data {\"matrix\": ..., \"marks\": ...}");
  app.add_option("--format", g.format, "Output format")->check(CLI::IsMember({"md", "json"}))->capture_default_str();

  std::function<int()> action;

  RootsArgs roots;
  auto* c_roots = app.add_subcommand("roots", "List the finite roots of the ambient");
  c_roots->add_flag("--positive", roots.positive, "Positive roots only");
  c_roots->callback([&] { action = [&] { return cmd_roots(g, roots, out); }; });

  EvalArgs eval;
  auto* c_eval = app.add_subcommand("eval", "Evaluate a word");
  c_eval->add_option("word", eval.word, "Word, rightmost letter applied first")->required();
  c_eval->add_option("--act-on", eval.act_on, "Root or coweight expression");
  c_eval->callback([&] { action = [&] { return cmd_eval(g, eval, out); }; });

  AnalyzeArgs analyze;
  auto* c_analyze = app.add_subcommand("analyze", "Quasi-translation analysis of a word");
  c_analyze->add_option("word", analyze.word)->required();
  c_analyze->add_option("--subsystems", analyze.subsystems, "geb or none")->capture_default_str();
  c_analyze->add_option("--kmax", analyze.kmax)->check(CLI::Range(1, 10000))->capture_default_str();
  c_analyze->callback([&] { action = [&] { return cmd_analyze(g, analyze, out); }; });

  CentralizerArgs centralizer;
  auto* c_cent = app.add_subcommand("centralizer", "Roots orthogonal to the seeds");
  c_cent->add_option("--seeds", centralizer.seeds, "Root expressions")->required()->expected(1, -1);
  c_cent->callback([&] { action = [&] { return cmd_centralizer(g, centralizer, out); }; });

  StabilizeArgs stabilize;
  auto* c_stab = app.add_subcommand("stabilize", "ShortLex search for elements permuting the targets");
  c_stab->add_option("--targets", stabilize.targets, "Root expressions")->required()->expected(1, -1);
  c_stab->add_option("--auts", stabilize.auts, "cyc4, none, or comma-separated automorphism names")
      ->capture_default_str();
  c_stab->add_option("--maxlen", stabilize.max_len)->check(CLI::Range(0, 64))->capture_default_str();
  c_stab->callback([&] { action = [&] { return cmd_stabilize(g, stabilize, out); }; });

  NormalizerArgs normalizer;
  auto* c_norm = app.add_subcommand("normalizer", "Normalizer of an affine parabolic subgroup");
  c_norm->add_option("--subsystem", normalizer.subsystem, "gamma, eta, beta, or finite simple roots")
      ->required()
      ->expected(1, -1);
  c_norm->add_option("--auts", normalizer.auts, "cyc4, none, or automorphism names (default cyc4 on D_n~)");
  c_norm->add_option("--maxlen", normalizer.max_len)->check(CLI::Range(0, 64))->capture_default_str();
  c_norm->callback([&] { action = [&] { return cmd_normalizer(g, normalizer, out); }; });

  std::string fixture_name;
  auto* c_fix = app.add_subcommand("fixtures", "Named elements");
  c_fix->require_subcommand(1);
  auto* c_list = c_fix->add_subcommand("list", "List fixtures");
  c_list->callback([&] { action = [&] { return cmd_fixtures_list(g, out); }; });
  auto* c_show = c_fix->add_subcommand("show", "Show one fixture");
  c_show->add_option("name", fixture_name)->required();
  c_show->callback([&] { action = [&] { return cmd_fixtures_show(g, fixture_name, out); }; });

  std::string suite = "all";
  auto* c_repro = app.add_subcommand("reproduce", "Run the reproduction report");
  c_repro->add_option("--suite", suite)
      ->check(CLI::IsMember({"all", "geb", "takenawa", "os", "secondvar", "examples"}))
      ->capture_default_str();
  c_repro->callback([&] { action = [&] { return cmd_reproduce(g, suite, out); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? 0 : 2;
  }
  try {
    return action ? action() : 2;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  std::vector<const char*> argv{"weylkit"};
  for (const auto& a : args) argv.push_back(a.c_str());
  return run(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace weylkit::cli
