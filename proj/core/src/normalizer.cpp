#include "weylkit/normalizer.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

#include "weylkit/error.hpp"

namespace weylkit {

std::span<const RootVec> Subsystem::finite_simple_roots() const {
  std::span<const RootVec> all(simple_roots);
  return affine() ? all.subspan(1) : all;
}

int Subsystem::index_of(const RootVec& root) const {
  for (std::size_t i = 0; i < simple_roots.size(); ++i)
    if (simple_roots[i] == root) return static_cast<int>(i);
  return -1;
}

namespace {

IntMatrix sub_cartan_matrix(std::span<const RootVec> roots, const RootSystem& rs) {
  const std::size_t m = roots.size();
  IntMatrix a(m, m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      const Rational v = 2 * rs.bilinear(roots[i], roots[j]) / rs.bilinear(roots[j], roots[j]);
      if (!is_integer(v)) throw Error(ErrorKind::InvalidArgument, "non-integral sub-Cartan entry");
      a(i, j) = v.numerator();
    }
  return a;
}

}  // namespace

std::vector<RootVec> finite_root_set(std::span<const RootVec> roots, const RootSystem& rs) {
  std::vector<RootVec> gens;
  for (const auto& r : roots) gens.push_back(finite_part(r, rs.cartan()).finite);
  std::set<RootVec> seen;
  std::vector<RootVec> stack;
  for (const auto& g : gens)
    for (const auto& v : {g, -g})
      if (seen.insert(v).second) stack.push_back(v);
  while (!stack.empty()) {
    const RootVec v = stack.back();
    stack.pop_back();
    for (const auto& g : gens) {
      const Rational c = 2 * rs.bilinear(g, v) / rs.bilinear(g, g);
      if (c == 0) continue;
      RootVec w = v - c.numerator() * g;
      if (seen.insert(w).second) stack.push_back(std::move(w));
    }
  }
  return {seen.begin(), seen.end()};
}

Subsystem make_subsystem(std::string name, std::vector<RootVec> simple_roots, const RootSystem& rs) {
  if (simple_roots.empty()) throw Error(ErrorKind::InvalidArgument, "subsystem '" + name + "' is empty");
  for (const auto& r : simple_roots)
    if (!rs.is_real_root(r)) throw Error(ErrorKind::NotARealRoot, format_root(r) + " in '" + name + "'");
  const auto comps = classify_components(simple_roots, rs.gram());
  if (comps.size() != 1)
    throw Error(ErrorKind::InvalidArgument, "subsystem '" + name + "' is not connected");
  Subsystem sub;
  sub.name = std::move(name);
  sub.type = comps.front().type;
  sub.sub_cartan = make_cartan(sub_cartan_matrix(simple_roots, rs), std::nullopt, false);
  sub.sub_cartan.label = sub.type;

  // Highest root: largest height in the subsystem's own basis.
  const auto local = enumerate_finite_roots(sub.sub_cartan);
  const std::vector<std::int64_t>* best = nullptr;
  std::int64_t best_height = 0;
  for (const auto& v : local) {
    std::int64_t h = 0;
    for (auto x : v.coords()) h += x;
    if (h > best_height) {
      best_height = h;
      best = &v.vec();
    }
  }
  sub.highest_root = RootVec(rs.size());
  for (std::size_t i = 0; i < simple_roots.size(); ++i)
    sub.highest_root += (*best)[i] * simple_roots[i];
  sub.simple_roots = std::move(simple_roots);
  return sub;
}

Subsystem affine_extension(const Subsystem& sub, const RootSystem& rs) {
  if (sub.affine()) return sub;
  Subsystem out = sub;
  const RootVec node = rs.delta() - sub.highest_root;
  out.simple_roots.insert(out.simple_roots.begin(), node);
  out.affine_node = node;
  out.type.affine = true;
  out.sub_cartan = make_cartan(sub_cartan_matrix(out.simple_roots, rs), std::nullopt, true);
  out.sub_cartan.label = out.type;
  return out;
}

std::vector<Subsystem> orthogonal_subsystem(std::span<const RootVec> seeds, const RootSystem& rs) {
  std::vector<RootVec> positive;
  for (const auto& r : rs.finite_roots()) {
    if (!RootSystem::is_positive(r)) continue;
    bool orth = true;
    for (const auto& s : seeds)
      if (rs.bilinear(r, s) != 0) {
        orth = false;
        break;
      }
    if (orth) positive.push_back(r);
  }
  std::unordered_set<RootVec, RootVecHash> pos_set(positive.begin(), positive.end());
  std::vector<RootVec> simple;
  for (const auto& r : positive) {
    bool decomposable = false;
    for (const auto& a : positive)
      if (a != r && pos_set.contains(r - a)) {
        decomposable = true;
        break;
      }
    if (!decomposable) simple.push_back(r);
  }
  std::vector<Subsystem> out;
  if (simple.empty()) return out;
  int k = 0;
  for (auto& comp : classify_components(simple, rs.gram()))
    out.push_back(make_subsystem("C" + std::to_string(++k), std::move(comp.simple_roots), rs));
  return out;
}

bool shortlex_less(std::span<const int> a, std::span<const int> b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

std::vector<StabilizerHit> stabilizer_search(std::span<const RootVec> targets,
                                             std::span<const GeneratorToken> automorphisms,
                                             const RootSystem& rs, SearchOptions options) {
  const int size = rs.size();
  std::vector<GroupElement> gens;
  std::vector<std::string> names;
  for (int i = 0; i < size; ++i) {
    gens.push_back(simple_reflection(i, rs.cartan()));
    names.push_back("s" + std::to_string(i));
  }
  for (const auto& t : automorphisms) {
    if (t.kind == GeneratorToken::Kind::Reflection)
      throw Error(ErrorKind::InvalidArgument, "automorphism list contains a reflection");
    gens.push_back(evaluate_token(t, rs));
    names.push_back(t.text());
  }

  struct Node {
    IntMatrix matrix;
    std::int32_t parent;
    std::int32_t letter;
  };
  std::vector<Node> nodes;
  std::unordered_set<IntMatrix, IntMatrixHash> seen;
  nodes.push_back({IntMatrix::identity(size), -1, -1});
  seen.insert(nodes.front().matrix);

  std::vector<StabilizerHit> hits;
  std::set<Permutation> found;

  auto letters_of = [&](std::size_t idx) {
    std::vector<int> letters;
    for (auto i = static_cast<std::int32_t>(idx); nodes[i].parent >= 0; i = nodes[i].parent)
      letters.push_back(nodes[i].letter);
    std::reverse(letters.begin(), letters.end());
    return letters;
  };

  auto inspect = [&](std::size_t idx) {
    const IntMatrix& m = nodes[idx].matrix;
    Permutation perm;
    for (const auto& t : targets) {
      const RootVec img(m * t.coords());
      int hit = -1;
      for (std::size_t j = 0; j < targets.size(); ++j)
        if (targets[j] == img) {
          hit = static_cast<int>(j);
          break;
        }
      if (hit < 0) return;
      perm.push_back(hit);
    }
    if (!found.insert(perm).second) return;
    StabilizerHit h;
    h.letters = letters_of(idx);
    for (int l : h.letters) h.word.push_back(names[l]);
    GroupElement e = GroupElement::identity(size);
    for (int l : h.letters) e = e * gens[l];
    h.element = e.with_word(h.word);
    h.permutation = std::move(perm);
    hits.push_back(std::move(h));
  };

  inspect(0);
  std::size_t layer_begin = 0, layer_end = 1;
  for (int len = 1; len <= options.max_len; ++len) {
    for (std::size_t idx = layer_begin; idx < layer_end; ++idx) {
      for (std::size_t g = 0; g < gens.size(); ++g) {
        IntMatrix child = nodes[idx].matrix * gens[g].matrix();
        if (!seen.insert(child).second) continue;
        if (seen.size() > options.cap)
          throw Error(ErrorKind::SearchBudgetExceeded,
                      "more than " + std::to_string(options.cap) + " elements at length " + std::to_string(len));
        nodes.push_back({std::move(child), static_cast<std::int32_t>(idx), static_cast<std::int32_t>(g)});
        inspect(nodes.size() - 1);
      }
    }
    layer_begin = layer_end;
    layer_end = nodes.size();
    if (layer_begin == layer_end) break;
  }
  return hits;
}

std::vector<GroupElement> generate_group(std::span<const GroupElement> generators, int size,
                                         std::size_t cap) {
  std::vector<GroupElement> out{GroupElement::identity(size)};
  std::unordered_set<IntMatrix, IntMatrixHash> seen{out.front().matrix()};
  for (std::size_t i = 0; i < out.size(); ++i) {
    for (const auto& g : generators) {
      GroupElement next = out[i] * g;
      if (!seen.insert(next.matrix()).second) continue;
      if (seen.size() > cap)
        throw Error(ErrorKind::SearchBudgetExceeded, "group exceeds " + std::to_string(cap) + " elements");
      out.push_back(std::move(next));
    }
  }
  return out;
}

// ---- action tables ----------------------------------------------------------

namespace {

std::string list_text(const std::vector<int>& v) {
  std::string s = "[";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s + "]";
}

// ShortLex word in p1 = [0,3,2,1], p2 = [3,2,1,0] realizing `image`.
std::optional<std::string> a3_word(const Permutation& image) {
  const Permutation p[2] = {{0, 3, 2, 1}, {3, 2, 1, 0}};
  struct Item {
    Permutation perm;
    std::string word;
  };
  std::vector<Item> layer{{{0, 1, 2, 3}, ""}};
  std::set<Permutation> seen{{0, 1, 2, 3}};
  for (int len = 0; len <= 8; ++len) {
    for (const auto& it : layer)
      if (it.perm == image) return it.word.empty() ? "-" : it.word;
    std::vector<Item> next;
    for (const auto& it : layer)
      for (int k = 0; k < 2; ++k) {
        // word x1..xk acts as x1 o ... o xk
        Permutation q(4);
        for (int i = 0; i < 4; ++i) q[i] = it.perm[p[k][i]];
        if (seen.insert(q).second) next.push_back({q, it.word + (k == 0 ? "p1" : "p2")});
      }
    layer = std::move(next);
  }
  return std::nullopt;
}

}  // namespace

std::string describe_induced_map(const InducedMap& map, const Subsystem& sub) {
  if (!map.stabilized) return "not stabilized";
  if (map.is_trivial()) return "-";
  bool identity_perm = true;
  for (std::size_t i = 0; i < map.image.size(); ++i)
    if (map.image[i] != static_cast<int>(i)) identity_perm = false;
  std::string perm;
  if (identity_perm) {
    perm = "id";
  } else if (sub.affine() && sub.type.family == Family::A && sub.type.rank == 1) {
    perm = "pi_" + sub.name;
  } else if (sub.affine() && sub.type.family == Family::A && sub.type.rank == 3) {
    perm = a3_word(map.image).value_or(list_text(map.image));
  } else {
    perm = list_text(map.image);
  }
  if (map.permutes_exactly()) return perm;
  std::string shifts = "(";
  for (std::size_t i = 0; i < map.shift.size(); ++i) {
    const auto k = map.shift[i];
    shifts += (i ? "," : "");
    shifts += k > 0 ? "+" + std::to_string(k) + "d" : k < 0 ? std::to_string(k) + "d" : "0";
  }
  return perm + " " + shifts + ")";
}

ActionTable action_table(std::span<const std::pair<std::string, GroupElement>> elements,
                         std::span<const Subsystem> subsystems, const RootSystem& rs) {
  ActionTable table;
  for (const auto& s : subsystems) table.subsystem_names.push_back(s.name);
  for (const auto& [label, g] : elements) {
    ActionTable::Row row;
    row.label = label;
    for (const auto& s : subsystems) {
      row.maps.push_back(induced_map(g, s.simple_roots, rs.delta()));
      row.cells.push_back(describe_induced_map(row.maps.back(), s));
    }
    table.rows.push_back(std::move(row));
  }
  return table;
}

std::string ActionTable::to_markdown() const {
  std::ostringstream os;
  os << "| element |";
  for (const auto& n : subsystem_names) os << ' ' << n << " |";
  os << "\n|---|";
  for (std::size_t i = 0; i < subsystem_names.size(); ++i) os << "---|";
  os << '\n';
  for (const auto& row : rows) {
    os << "| " << row.label << " |";
    for (const auto& c : row.cells) os << ' ' << c << " |";
    os << '\n';
  }
  return os.str();
}

// ---- normalizer -------------------------------------------------------------

bool NormalizerPresentation::blocks_commute() const {
  return std::all_of(commutation.begin(), commutation.end(),
                     [](const CommutationCheck& c) { return c.commute; });
}

namespace {

bool contains(const std::vector<GroupElement>& group, const GroupElement& g) {
  return std::find(group.begin(), group.end(), g) != group.end();
}

std::vector<GroupElement> elements_of(const std::vector<StabilizerHit>& hits) {
  std::vector<GroupElement> out;
  for (const auto& h : hits) out.push_back(h.element);
  return out;
}

// Greedy ShortLex generating set of the group spanned by `candidates`
// (already in ShortLex order) on top of `base`, followed by pruning of
// redundant generators.
std::vector<StabilizerHit> generating_set(const std::vector<StabilizerHit>& candidates,
                                          const std::vector<GroupElement>& base, int size) {
  std::vector<StabilizerHit> chosen;
  auto span_of = [&](const std::vector<StabilizerHit>& gens) {
    std::vector<GroupElement> all = base;
    for (const auto& h : gens) all.push_back(h.element);
    return generate_group(all, size);
  };
  std::vector<GroupElement> group = span_of(chosen);
  for (const auto& c : candidates) {
    if (contains(group, c.element)) continue;
    chosen.push_back(c);
    group = span_of(chosen);
  }
  for (std::size_t i = chosen.size(); i-- > 0;) {
    auto reduced = chosen;
    reduced.erase(reduced.begin() + static_cast<std::ptrdiff_t>(i));
    if (span_of(reduced).size() == group.size()) chosen = std::move(reduced);
  }
  return chosen;
}

}  // namespace

NormalizerPresentation assemble_normalizer(const Subsystem& sub_affine,
                                           std::span<const GeneratorToken> automorphisms,
                                           const RootSystem& rs, SearchOptions options,
                                           std::span<const Subsystem> known) {
  NormalizerPresentation p;
  p.subsystem = sub_affine;
  const int size = rs.size();
  for (const auto& r : sub_affine.simple_roots) p.subgroup_generators.push_back(reflection_through(r, rs));

  for (const auto& comp : orthogonal_subsystem(sub_affine.simple_roots, rs)) {
    Subsystem ext = affine_extension(comp, rs);
    const auto roots = finite_root_set(ext.simple_roots, rs);
    for (const auto& k : known)
      if (finite_root_set(k.simple_roots, rs) == roots) {
        ext = k;
        break;
      }
    p.centralizer.push_back(std::move(ext));
  }
  p.verification.push_back("centralizer: " + std::to_string(p.centralizer.size()) + " component(s)");

  // Targets: J' first, then each centralizer component.
  std::vector<RootVec> targets(sub_affine.simple_roots);
  for (const auto& c : p.centralizer)
    targets.insert(targets.end(), c.simple_roots.begin(), c.simple_roots.end());
  const std::size_t nj = sub_affine.simple_roots.size();
  for (auto& hit : stabilizer_search(targets, automorphisms, rs, options)) {
    bool keeps = true;
    for (std::size_t i = 0; i < nj; ++i)
      if (static_cast<std::size_t>(hit.permutation[i]) >= nj) keeps = false;
    if (keeps) p.diagram_group.push_back(std::move(hit));
  }
  const auto d_elems = elements_of(p.diagram_group);
  const auto closure = generate_group(d_elems, size);
  p.verification.push_back("diagram group: " + std::to_string(p.diagram_group.size()) +
                           " element(s), closure " + std::to_string(closure.size()));
  if (closure.size() != p.diagram_group.size())
    throw Error(ErrorKind::IncompleteVerification,
                "diagram group is not closed within max_len " + std::to_string(options.max_len));

  auto trivial_on = [&](const StabilizerHit& h, std::size_t k) {
    return induced_map(h.element, p.centralizer[k].simple_roots, rs.delta()).is_trivial();
  };

  std::vector<GroupElement> block_span;
  for (std::size_t k = 0; k < p.centralizer.size(); ++k) {
    NormalizerBlock block;
    block.component = p.centralizer[k];
    for (const auto& r : block.component.simple_roots) block.reflections.push_back(reflection_through(r, rs));
    std::vector<StabilizerHit> local;
    for (const auto& h : p.diagram_group) {
      if (h.element.is_identity()) continue;
      const auto self = induced_map(h.element, block.component.simple_roots, rs.delta());
      if (!self.permutes_exactly()) continue;
      bool others = true;
      for (std::size_t j = 0; j < p.centralizer.size(); ++j)
        if (j != k && !trivial_on(h, j)) others = false;
      if (others) local.push_back(h);
    }
    block.diagram_generators = generating_set(local, {}, size);
    for (const auto& g : block.diagram_generators) block_span.push_back(g.element);
    p.blocks.push_back(std::move(block));
  }

  std::vector<StabilizerHit> only;
  for (const auto& h : p.diagram_group) {
    if (h.element.is_identity()) continue;
    bool all = true;
    for (std::size_t k = 0; k < p.centralizer.size(); ++k)
      if (!trivial_on(h, k)) all = false;
    if (all) only.push_back(h);
  }
  p.subsystem_only_generators = generating_set(only, {}, size);
  for (const auto& g : p.subsystem_only_generators) block_span.push_back(g.element);

  p.exchange_generators = generating_set(p.diagram_group, block_span, size);
  p.verification.push_back("exchange generators: " + std::to_string(p.exchange_generators.size()));

  // Conjugation closure over every complement generator.
  std::vector<std::pair<std::string, GroupElement>> complement;
  for (const auto& b : p.blocks) {
    for (const auto& r : b.reflections) complement.emplace_back(r.word_text(), r);
    for (const auto& g : b.diagram_generators) complement.emplace_back(g.element.word_text(), g.element);
  }
  for (const auto& g : p.subsystem_only_generators) complement.emplace_back(g.element.word_text(), g.element);
  for (const auto& g : p.exchange_generators) complement.emplace_back(g.element.word_text(), g.element);
  for (const auto& [label, g] : complement) {
    for (std::size_t i = 0; i < nj; ++i) {
      const RootVec& beta = sub_affine.simple_roots[i];
      const RootVec image = g(beta);
      const int j = sub_affine.index_of(image);
      const bool ok = j >= 0 && g * p.subgroup_generators[i] * g.inverse() == reflection_through(image, rs);
      if (!ok)
        throw Error(ErrorKind::IncompleteVerification,
                    label + " conjugates s_" + format_root(beta) + " outside the subgroup");
    }
  }
  p.verification.push_back("conjugation closure: " + std::to_string(complement.size()) +
                           " generator(s) x " + std::to_string(nj) + " root(s) ok");

  for (std::size_t a = 0; a < p.blocks.size(); ++a)
    for (std::size_t b = a + 1; b < p.blocks.size(); ++b) {
      auto gens = [](const NormalizerBlock& blk) {
        std::vector<GroupElement> g = blk.reflections;
        for (const auto& h : blk.diagram_generators) g.push_back(h.element);
        return g;
      };
      bool commute = true;
      for (const auto& x : gens(p.blocks[a]))
        for (const auto& y : gens(p.blocks[b]))
          if (!x.commutes_with(y)) commute = false;
      p.commutation.push_back({a, b, commute});
    }
  return p;
}

}  // namespace weylkit
