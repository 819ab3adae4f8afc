#include <doctest.h>

#include <random>

#include "test_support.hpp"
#include "weylkit/fixtures.hpp"
#include "weylkit/translations.hpp"

using namespace weylkit;
using weylkit::testing::error_kind;

namespace {

const RootSystem& d5() {
  static const RootSystem rs = make_root_system(TypeLabel::parse("D5~"));
  return rs;
}

}  // namespace

TEST_CASE("t_mu moves each simple root by -<a_i, mu> delta") {
  const auto& rs = d5();
  const CoweightVec mu = parse_coweight_expr("h1 - h2 + 2 h4", 6);
  const GroupElement t = translation_element(mu, rs.cartan());
  // <a_0, mu> = -(c1 - c2 + 2 c4) = -(1 - 2 + 2) = -1.
  const std::vector<std::int64_t> pairing{-1, 1, -1, 0, 2, 0};
  for (int i = 0; i < 6; ++i)
    CHECK(t(rs.simple(i)) == rs.simple(i) - pairing[static_cast<std::size_t>(i)] * rs.delta());
  const auto back = as_translation(t, rs.cartan());
  REQUIRE(back);
  CHECK(back->mu == mu);
  CHECK(back->mu0(rs.cartan()) == Rational(-1));
}

TEST_CASE("A1~: t_h1 = pi s1") {
  const RootSystem rs = make_root_system(TypeLabel::parse("A1~"));
  CHECK(translation_element(CoweightVec::fundamental(2, 1), rs.cartan()) == evaluate_word("pi s1", rs));
}

TEST_CASE("translation_element rejects non-lattice input") {
  const auto& rs = d5();
  CoweightVec with_delta(6);
  with_delta.h_delta() = 1;
  CHECK(error_kind([&] { translation_element(with_delta, rs.cartan()); }) == ErrorKind::NotALatticeTranslation);
  CHECK(error_kind([&] { translation_element(parse_coweight_expr("1/2 h1", 6), rs.cartan()); }) ==
        ErrorKind::NotALatticeTranslation);
  CHECK(error_kind([&] { translation_element(CoweightVec(3), rs.cartan()); }) == ErrorKind::DimensionMismatch);
}

TEST_CASE("non-translations are recognized") {
  const auto& rs = d5();
  CHECK_FALSE(as_translation(simple_reflection(1, rs.cartan()), rs.cartan()));
  CHECK_FALSE(as_translation(evaluate_word("sigma12", rs), rs.cartan()));
  CHECK(as_translation(GroupElement::identity(6), rs.cartan())->mu == CoweightVec(6));
}

TEST_CASE("induced maps") {
  const auto& geb = geb_system();
  const GroupElement t = geb.word("s0 s1 s4 s5 sigma12 sigma12 s2 s3 s2");
  const auto on_gamma = induced_map(t, geb.gamma.simple_roots, geb.rs.delta());
  CHECK(on_gamma.permutes_exactly());
  CHECK(on_gamma.image == Permutation{1, 0});
  CHECK(on_gamma.permutation_order() == 2);
  const auto on_eta = induced_map(t, geb.eta.simple_roots, geb.rs.delta());
  CHECK(on_eta.stabilized);
  CHECK_FALSE(on_eta.permutes_exactly());
  CHECK(on_eta.shift == std::vector<std::int64_t>{1, -1});
  CHECK(induced_map(t, geb.beta.simple_roots, geb.rs.delta()).is_trivial());
  const auto moved = induced_map(simple_reflection(1, geb.rs.cartan()), geb.beta.simple_roots, geb.rs.delta());
  CHECK_FALSE(moved.stabilized);
  CHECK(moved.permutation_order() == 0);
}

TEST_CASE("quasi-translation analysis") {
  const auto& geb = geb_system();
  const GroupElement t = geb.word("s0 s1 s4 s5 sigma12 sigma12 s2 s3 s2");
  const auto subs = geb.subsystems();
  const auto r = quasi_translation_analysis(t, subs, geb.rs);
  CHECK(r.base_order == 2);
  CHECK(r.vector.mu == parse_coweight_expr("-h1 + h2 + h3 - h4 - h5", 6));
  CHECK(r.subsystem_names == std::vector<std::string>{"gamma", "eta", "beta"});
  CHECK(error_kind([&] { quasi_translation_analysis(t, subs, geb.rs, 1); }) == ErrorKind::NotQuasiWithinCap);
  CHECK(error_kind([&] { quasi_translation_analysis(t, subs, geb.rs, 0); }) == ErrorKind::InvalidArgument);
  const auto plain = quasi_translation_analysis(translation_element(CoweightVec::fundamental(6, 2), geb.rs.cartan()),
                                                {}, geb.rs);
  CHECK(plain.base_order == 1);
}

TEST_CASE("property: translations add and round-trip") {
  const auto& rs = d5();
  std::mt19937_64 rng(weylkit::testing::kSeed + 10);
  for (int t = 0; t < weylkit::testing::kPropertyCases; ++t) {
    const CoweightVec mu = weylkit::testing::random_level_zero(rng, 6);
    const CoweightVec nu = weylkit::testing::random_level_zero(rng, 6);
    const GroupElement tm = translation_element(mu, rs.cartan());
    const GroupElement tn = translation_element(nu, rs.cartan());
    CHECK(tm * tn == translation_element(mu + nu, rs.cartan()));
    CHECK(tm * tn == tn * tm);
    CHECK(tm.inverse() == translation_element(-mu, rs.cartan()));
    const auto back = as_translation(tm, rs.cartan());
    REQUIRE(back);
    CHECK(back->mu == mu);
  }
}

TEST_CASE("property: w t_mu w^-1 = t_(w mu)") {
  const auto& rs = d5();
  std::mt19937_64 rng(weylkit::testing::kSeed + 11);
  for (int t = 0; t < weylkit::testing::kPropertyCases; ++t) {
    const GroupElement w = weylkit::testing::random_element(rng, rs, 12);
    const CoweightVec mu = weylkit::testing::random_level_zero(rng, 6);
    CHECK(conjugation_check(w, mu, rs.cartan()));
    // The conjugate is again a translation, by a vector of the same level.
    const auto c = as_translation(w * translation_element(mu, rs.cartan()) * w.inverse(), rs.cartan());
    REQUIRE(c);
    CHECK(c->mu.h_delta() == Rational(0));
  }
}

TEST_CASE("property: powers of random elements become translations") {
  const auto& rs = d5();
  std::mt19937_64 rng(weylkit::testing::kSeed + 12);
  for (int t = 0; t < weylkit::testing::kPropertyCases; ++t) {
    const GroupElement g = weylkit::testing::random_element(rng, rs, 10);
    const auto r = quasi_translation_analysis(g, {}, rs, 120);
    CHECK(as_translation(g.pow(r.base_order), rs.cartan()).has_value());
    for (int k = 1; k < r.base_order; ++k) CHECK_FALSE(as_translation(g.pow(k), rs.cartan()).has_value());
  }
}
