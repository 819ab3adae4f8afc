#include <doctest.h>

#include <functional>
#include <map>
#include <random>

#include "test_support.hpp"
#include "weylkit/fixtures.hpp"
#include "weylkit/normalizer.hpp"

using namespace weylkit;
using weylkit::testing::error_kind;

namespace {

// Naive oracle: every word over s_0..s_n of length <= max_len, no dedup;
// shortest length realizing each permutation of the targets.
std::map<Permutation, int> naive_min_lengths(const std::vector<RootVec>& targets, const RootSystem& rs, int max_len) {
  std::map<Permutation, int> best;
  std::function<void(const GroupElement&, int)> walk = [&](const GroupElement& g, int len) {
    Permutation p;
    for (const auto& t : targets) {
      const RootVec img = g(t);
      int found = -1;
      for (std::size_t j = 0; j < targets.size(); ++j)
        if (targets[j] == img) found = static_cast<int>(j);
      if (found < 0) {
        p.clear();
        break;
      }
      p.push_back(found);
    }
    if (!p.empty() && (!best.contains(p) || best[p] > len)) best[p] = len;
    if (len == max_len) return;
    for (int i = 0; i < rs.size(); ++i) walk(g * simple_reflection(i, rs.cartan()).without_word(), len + 1);
  };
  walk(GroupElement::identity(rs.size()).without_word(), 0);
  return best;
}

}  // namespace

TEST_CASE("subsystems and their affine extensions") {
  const auto& geb = geb_system();
  const auto& rs = geb.rs;
  const Subsystem a3 = make_subsystem("b", {geb.root("beta1"), geb.root("beta2"), geb.root("beta3")}, rs);
  CHECK(a3.type == TypeLabel{Family::A, 3, false});
  CHECK(a3.highest_root == geb.root("beta1") + geb.root("beta2") + geb.root("beta3"));
  CHECK_FALSE(a3.affine());
  const Subsystem aff = affine_extension(a3, rs);
  CHECK(aff.affine());
  CHECK(aff.type == TypeLabel{Family::A, 3, true});
  CHECK(aff.simple_roots.front() == geb.root("beta0"));
  CHECK(aff.index_of(geb.root("beta2")) == 2);
  CHECK(aff.index_of(rs.simple(0)) == -1);
  CHECK(aff.finite_simple_roots().size() == 3);
  CHECK(finite_root_set(a3.simple_roots, rs).size() == 12);
  CHECK(finite_root_set(aff.simple_roots, rs) == finite_root_set(a3.simple_roots, rs));
  CHECK(error_kind([&] { make_subsystem("x", {rs.simple(1), rs.simple(3)}, rs); }) == ErrorKind::InvalidArgument);
  CHECK(error_kind([&] { make_subsystem("x", {}, rs); }) == ErrorKind::InvalidArgument);
  CHECK(error_kind([&] { make_subsystem("x", {rs.delta()}, rs); }) == ErrorKind::NotARealRoot);
}

TEST_CASE("orthogonal subsystems") {
  const auto& rs = geb_system().rs;
  const RootVec a0 = rs.simple(0);
  const auto comps = orthogonal_subsystem(std::span(&a0, 1), rs);
  REQUIRE(comps.size() == 2);
  CHECK(comps[0].name == "C1");
  CHECK(comps[0].type == TypeLabel{Family::A, 1, false});
  CHECK(comps[1].type == TypeLabel{Family::A, 3, false});
  const std::vector<RootVec> all{rs.simple(1), rs.simple(2), rs.simple(3), rs.simple(4), rs.simple(5)};
  CHECK(orthogonal_subsystem(all, rs).empty());
}

TEST_CASE("ShortLex comparison") {
  CHECK(shortlex_less(std::vector<int>{5}, std::vector<int>{0, 0}));
  CHECK(shortlex_less(std::vector<int>{0, 1}, std::vector<int>{0, 2}));
  CHECK_FALSE(shortlex_less(std::vector<int>{0, 2}, std::vector<int>{0, 2}));
}

TEST_CASE("stabilizer search matches the naive enumeration") {
  const auto& geb = geb_system();
  const std::vector<RootVec> targets{geb.root("gamma0"), geb.root("gamma1")};
  const auto oracle = naive_min_lengths(targets, geb.rs, 5);
  const auto hits = stabilizer_search(targets, {}, geb.rs, SearchOptions{5, 1'000'000});
  REQUIRE(hits.size() == oracle.size());
  for (const auto& h : hits) {
    REQUIRE(oracle.contains(h.permutation));
    CHECK(static_cast<int>(h.letters.size()) == oracle.at(h.permutation));
    for (std::size_t i = 0; i < targets.size(); ++i)
      CHECK(h.element(targets[i]) == targets[static_cast<std::size_t>(h.permutation[i])]);
  }
  CHECK(hits.front().letters.empty());
  CHECK(hits.back().element == geb.word("s0 s1 s4 s5"));
  for (std::size_t i = 1; i < hits.size(); ++i) CHECK(shortlex_less(hits[i - 1].letters, hits[i].letters));
}

TEST_CASE("stabilizer search budget") {
  const auto& geb = geb_system();
  const std::vector<RootVec> targets{geb.root("gamma0"), geb.root("gamma1")};
  CHECK(error_kind([&] { stabilizer_search(targets, {}, geb.rs, SearchOptions{8, 50}); }) ==
        ErrorKind::SearchBudgetExceeded);
  const auto reflection_as_aut = parse_word("s1", geb.rs);
  CHECK(error_kind([&] { stabilizer_search(targets, reflection_as_aut, geb.rs); }) == ErrorKind::InvalidArgument);
}

TEST_CASE("group closure") {
  const auto& rs = geb_system().rs;
  CHECK(generate_group(std::vector{evaluate_word("sigma12", rs)}, 6).size() == 4);
  CHECK(generate_group(std::vector{simple_reflection(2, rs.cartan()), simple_reflection(3, rs.cartan())}, 6).size() == 6);
  CHECK(generate_group(std::vector<GroupElement>{}, 6).size() == 1);
  CHECK(error_kind([&] {
          std::vector<GroupElement> gens;
          for (int i = 0; i < 6; ++i) gens.push_back(simple_reflection(i, rs.cartan()));
          generate_group(gens, 6, 1000);
        }) == ErrorKind::SearchBudgetExceeded);
}

TEST_CASE("induced map descriptions") {
  const auto& geb = geb_system();
  CHECK(describe_induced_map(induced_map(geb.word("sigma12"), geb.beta.simple_roots, geb.rs.delta()), geb.beta) ==
        "p1p2");
  CHECK(describe_induced_map(induced_map(geb.word("sigma21"), geb.beta.simple_roots, geb.rs.delta()), geb.beta) ==
        "p2p1");
  CHECK(describe_induced_map(induced_map(geb.word("sigma12"), geb.gamma.simple_roots, geb.rs.delta()), geb.gamma) ==
        "pi_gamma");
  CHECK(describe_induced_map(induced_map(geb.word("s1"), geb.beta.simple_roots, geb.rs.delta()), geb.beta) ==
        "not stabilized");
  CHECK(describe_induced_map(induced_map(geb.word("s0 s1 s4 s5 sigma12 sigma12 s2 s3 s2"), geb.eta.simple_roots,
                                         geb.rs.delta()),
                             geb.eta) == "id (+1d,-1d)");
}

TEST_CASE("action table markdown") {
  const auto& geb = geb_system();
  const std::vector<std::pair<std::string, GroupElement>> rows{{"g'", geb.word("s0 s1 s4 s5")}};
  const std::vector<Subsystem> subs{geb.eta, geb.gamma, geb.beta};
  const auto table = action_table(rows, subs, geb.rs);
  CHECK(table.rows[0].cells == std::vector<std::string>{"pi_eta", "pi_gamma", "p1p2p1p2"});
  const std::string md = table.to_markdown();
  CHECK(md.find("| element | eta | gamma | beta |") != std::string::npos);
  CHECK(md.find("| g' | pi_eta | pi_gamma | p1p2p1p2 |") != std::string::npos);
}

TEST_CASE("normalizer of the gamma system") {
  const auto& geb = geb_system();
  const auto auts = geb.cyclic_automorphisms();
  const auto known = geb.subsystems();
  const auto p = assemble_normalizer(geb.gamma, auts, geb.rs, SearchOptions{8, 5'000'000}, known);
  CHECK(p.diagram_group.size() == 8);
  REQUIRE(p.centralizer.size() == 2);
  CHECK(p.blocks.size() == 2);
  CHECK(p.blocks_commute());
  CHECK(p.exchange_generators.empty());
  CHECK(p.subgroup_generators.size() == 2);
  for (const auto& h : p.diagram_group) {
    CHECK(induced_map(h.element, geb.gamma.simple_roots, geb.rs.delta()).permutes_exactly());
    for (const auto& c : p.centralizer) CHECK(induced_map(h.element, c.simple_roots, geb.rs.delta()).permutes_exactly());
  }
  CHECK_FALSE(p.verification.empty());
}

TEST_CASE("normalizer of the beta system finds the eta/gamma exchange") {
  const auto& geb = geb_system();
  const auto auts = geb.cyclic_automorphisms();
  const auto known = geb.subsystems();
  const auto p = assemble_normalizer(geb.beta, auts, geb.rs, SearchOptions{8, 5'000'000}, known);
  CHECK(p.diagram_group.size() == 16);
  REQUIRE(p.exchange_generators.size() == 1);
  const GroupElement& x = p.exchange_generators[0].element;
  const auto to_eta = induced_map(x, std::vector{geb.root("gamma0"), geb.root("gamma1"), geb.root("eta0"),
                                                 geb.root("eta1")},
                                  geb.rs.delta());
  REQUIRE(to_eta.stabilized);
  CHECK(to_eta.image[0] >= 2);
  CHECK(to_eta.image[2] < 2);
  CHECK(p.blocks_commute());
}

TEST_CASE("property: random stabilizer hits really permute their targets") {
  const auto& rs = geb_system().rs;
  std::mt19937_64 rng(weylkit::testing::kSeed + 20);
  const auto auts = geb_system().cyclic_automorphisms();
  int checked = 0;
  for (int t = 0; t < 40; ++t) {
    const RootVec r = weylkit::testing::random_real_root(rng, rs, 1);
    const std::vector<RootVec> targets{r, rs.delta() - r};
    for (const auto& h : stabilizer_search(targets, auts, rs, SearchOptions{4, 1'000'000})) {
      for (std::size_t i = 0; i < 2; ++i) CHECK(h.element(targets[i]) == targets[static_cast<std::size_t>(h.permutation[i])]);
      ++checked;
    }
  }
  CHECK(checked >= 40);
}
