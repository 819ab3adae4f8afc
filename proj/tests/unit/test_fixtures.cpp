#include <doctest.h>

#include "test_support.hpp"
#include "weylkit/fixtures.hpp"

using namespace weylkit;
using weylkit::testing::error_kind;

TEST_CASE("gamma-eta-beta configuration") {
  const auto& geb = geb_system();
  const auto& rs = geb.rs;
  CHECK(geb.root("gamma0") == parse_root_expr("a0123", rs));
  CHECK(geb.root("beta3") == parse_root_expr("a02", rs));
  CHECK(geb.gamma.simple_roots == std::vector<RootVec>{geb.root("gamma0"), geb.root("gamma1")});
  CHECK(geb.eta.simple_roots == std::vector<RootVec>{geb.root("eta0"), geb.root("eta1")});
  CHECK(geb.beta.type == TypeLabel{Family::A, 3, true});
  CHECK(geb.gamma.type == TypeLabel{Family::A, 1, true});
  // Each affine subsystem's simple roots sum (with marks 1) to delta.
  for (const auto& s : geb.subsystems()) {
    RootVec sum(6);
    for (const auto& r : s.simple_roots) sum += r;
    CHECK(sum == rs.delta());
  }
  CHECK(geb.conjugator == evaluate_word("s1 s3 s2", rs));
  CHECK(geb.reflection_words.size() == 8);
  CHECK(error_kind([&] { geb.root("zeta"); }) == ErrorKind::InvalidArgument);
  CHECK(geb.cyclic_automorphisms().size() == 1);
}

TEST_CASE("first-variation elements") {
  const auto& geb = geb_system();
  const auto e = takenawa_elements(geb);
  for (const char* n : {"gprime", "sigma12", "takenawa.t_eta1", "takenawa.t_beta1", "takenawa.T1", "takenawa.T4"})
    CHECK_NOTHROW(find_named(e, n));
  CHECK(error_kind([&] { find_named(e, "secondvar.t_eta1"); }) == ErrorKind::InvalidArgument);
  const GroupElement& t = find_named(e, "takenawa.t_eta1").element;
  CHECK(t == geb.word("s0 s1 s4 s5") * geb.word("sigma12 sigma12") * geb.reflection("eta1"));
  CHECK_FALSE(as_translation(t, geb.rs.cartan()));
  CHECK(as_translation(t.pow(2), geb.rs.cartan()));
  CHECK(find_named(e, "takenawa.T1").element == find_named(e, "takenawa.t_beta1").element);
}

TEST_CASE("second-variation elements are distinct fixtures") {
  const auto& geb = geb_system();
  const auto first = takenawa_elements(geb);
  const auto second = second_variation_elements(geb);
  CHECK(find_named(first, "takenawa.t_eta1").element != find_named(second, "secondvar.t_eta1").element);
  CHECK(find_named(second, "secondvar.t_gamma1").element == geb.word("sigma12") * geb.reflection("gamma1"));
}

TEST_CASE("beta fundamental weights satisfy the A3 Cartan relation") {
  const auto& geb = geb_system();
  const auto h = subsystem_fundamental_weights(geb.beta, geb.rs);
  REQUIRE(h.size() == 3);
  const IntMatrix a3{IntMatrix::from_rows({{2, -1, 0}, {-1, 2, -1}, {0, -1, 2}})};
  for (std::size_t j = 0; j < 3; ++j) {
    CoweightVec lhs(6);
    for (std::size_t k = 0; k < 3; ++k) lhs += Rational(a3(k, j)) * h[k];
    CHECK(lhs == geb.rs.coroot(geb.beta.simple_roots[j + 1]));
  }
  // 2 h_beta3 = (coroot b1 + 2 coroot b2 + 3 coroot b3) / 2.
  const auto& rs = geb.rs;
  const CoweightVec rhs = Rational(1, 2) * (rs.coroot(geb.root("beta1")) + Rational(2) * rs.coroot(geb.root("beta2")) +
                                            Rational(3) * rs.coroot(geb.root("beta3")));
  CHECK(Rational(2) * h[2] == rhs);
  const auto g = subsystem_fundamental_weights(geb.gamma, geb.rs);
  REQUIRE(g.size() == 1);
  CHECK(Rational(2) * g[0] == rs.coroot(geb.root("gamma1")));
}

TEST_CASE("translation directions T1..T4") {
  const auto dirs = os_directions(geb_system());
  REQUIRE(dirs.size() == 4);
  CHECK(dirs[0].name == "T1");
  CHECK(dirs[0].vector.mu == parse_coweight_expr("h1 - h2", 6));
  CHECK(dirs[2].vector.mu == parse_coweight_expr("-h2 + h3 - h4", 6));
  CHECK(dirs[3].vector.mu == parse_coweight_expr("h2 - h3", 6));
  REQUIRE(dirs[1].displayed);
  CHECK(dirs[1].vector.mu != *dirs[1].displayed);
  CHECK(dirs[1].vector.mu == parse_coweight_expr("-h1 + h2 - h3 + h4 - h5", 6));
  for (const auto& d : dirs) CHECK(d.displayed_images.size() == 6);
}

TEST_CASE("standalone examples") {
  const auto a1 = example_a1();
  CHECK(a1.t_h1(a1.rs.simple(1)) == a1.rs.simple(1) - a1.rs.delta());
  const auto a3 = example_a3();
  REQUIRE(a3.t.size() == 4);
  CHECK((a3.t[0] * a3.t[1] * a3.t[2] * a3.t[3]).is_identity());
  CHECK(a3.t[0] == a3.t_h1);
  CHECK(element_order(a3.rotation, 10) == 4);
}
