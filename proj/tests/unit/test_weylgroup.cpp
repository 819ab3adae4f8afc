#include <doctest.h>

#include <random>

#include "test_support.hpp"
#include "weylkit/weylgroup.hpp"

using namespace weylkit;
using weylkit::testing::error_kind;

namespace {

const RootSystem& d5() {
  static const RootSystem rs = make_root_system(TypeLabel::parse("D5~"));
  return rs;
}

// s_a v = v - (v, a) a for norm-2 roots, read off the Gram matrix.
RootVec reflect_by_gram(const RootVec& v, int i, const RootSystem& rs) {
  Rational c = 0;
  for (int j = 0; j < rs.size(); ++j) c += Rational(v[static_cast<std::size_t>(j)]) * rs.gram()(j, i);
  REQUIRE(is_integer(c));
  return v - c.numerator() * rs.simple(i);
}

CoweightVec times(const IntMatrix& m, const CoweightVec& f) {
  CoweightVec out(f.size());
  for (std::size_t r = 0; r < f.size(); ++r)
    for (std::size_t c = 0; c < f.size(); ++c) out[r] += Rational(m(r, c)) * f[c];
  return out;
}

}  // namespace

TEST_CASE("simple reflections agree with the Gram-matrix formula") {
  const auto& rs = d5();
  for (int i = 0; i < 6; ++i) {
    const GroupElement s = simple_reflection(i, rs.cartan());
    for (int j = 0; j < 6; ++j) CHECK(s(rs.simple(j)) == reflect_by_gram(rs.simple(j), i, rs));
    CHECK((s * s).is_identity());
    CHECK(s(rs.delta()) == rs.delta());
  }
}

TEST_CASE("Coxeter relations with exact orders") {
  const auto& rs = d5();
  for (int i = 0; i < 6; ++i)
    for (int j = i + 1; j < 6; ++j) {
      const int m = bond_order(rs.cartan(), i, j);
      const GroupElement p = simple_reflection(i, rs.cartan()) * simple_reflection(j, rs.cartan());
      CHECK(p.pow(m).is_identity());
      CHECK(element_order(p, 12) == m);
    }
  const RootSystem a1 = make_root_system(TypeLabel::parse("A1~"));
  const GroupElement p = simple_reflection(0, a1.cartan()) * simple_reflection(1, a1.cartan());
  CHECK_FALSE(element_order(p, 50).has_value());
}

TEST_CASE("diagram automorphisms") {
  const auto& rs = d5();
  CHECK(element_order(evaluate_word("sigma12", rs), 10) == 4);
  CHECK(element_order(evaluate_word("sigma1", rs), 10) == 2);
  CHECK(evaluate_word("sigma12", rs) == evaluate_word("sigma1 sigma2", rs));
  CHECK(evaluate_word("sigma21", rs) == evaluate_word("sigma2 sigma1", rs));
  CHECK(evaluate_word("aut:[5,4,3,2,0,1]", rs) == evaluate_word("sigma12", rs));
  CHECK(evaluate_word("sigma12", rs)(rs.simple(0)) == rs.simple(5));
  CHECK(error_kind([&] { diagram_automorphism({1, 0, 2, 4, 3, 5}, rs.cartan()); }) ==
        ErrorKind::NotDiagramSymmetry);
  CHECK(error_kind([&] { diagram_automorphism({0, 0, 2, 3, 4, 5}, rs.cartan()); }) ==
        ErrorKind::NotDiagramSymmetry);
  // sigma conjugates s_i to s_sigma(i).
  const GroupElement sig = evaluate_word("sigma12", rs);
  const Permutation img = *rs.find_automorphism("sigma12");
  for (int i = 0; i < 6; ++i)
    CHECK(sig * simple_reflection(i, rs.cartan()) * sig.inverse() == simple_reflection(img[static_cast<std::size_t>(i)], rs.cartan()));
}

TEST_CASE("word syntax") {
  const auto& rs = d5();
  CHECK(evaluate_word("s0145", rs) == evaluate_word("s0 s1 s4 s5", rs));
  CHECK(evaluate_word("s_3", rs) == simple_reflection(3, rs.cartan()));
  CHECK(evaluate_word("s0145^-1", rs) == evaluate_word("s5 s4 s1 s0", rs));
  CHECK(evaluate_word("sigma12^-1", rs) == evaluate_word("sigma12", rs).inverse());
  CHECK(evaluate_word("", rs).is_identity());
  CHECK(evaluate_word("1", rs).is_identity());
  CHECK(evaluate_word("r:a23", rs) == evaluate_word("s232", rs));
  CHECK(evaluate_word("s1 s3 s2", rs)(rs.simple(0)) == parse_root_expr("a0123", rs));
  CHECK(evaluate_word("s2534352", rs).word_text() == "s2 s5 s3 s4 s3 s5 s2");
  CHECK(evaluate_word("", rs).word_text() == "1");
  CHECK(error_kind([&] { parse_word("s1 x", rs); }) == ErrorKind::ParseError);
  CHECK(error_kind([&] { parse_word("s6", rs); }) == ErrorKind::ParseError);
  CHECK(error_kind([&] { parse_word("aut:[1,0", rs); }) == ErrorKind::ParseError);
  CHECK(error_kind([&] { parse_word("aut:[1,0,2,4,3,5]", rs); }) == std::nullopt);
  CHECK(error_kind([&] { evaluate_word("aut:[1,0,2,4,3,5]", rs); }) == ErrorKind::NotDiagramSymmetry);
  try {
    parse_word("s1 s2 bogus", rs);
    FAIL("expected a parse error");
  } catch (const Error& e) {
    CHECK(std::string(e.what()).find("column 7") != std::string::npos);
  }
}

TEST_CASE("element algebra") {
  const auto& rs = d5();
  const GroupElement g = evaluate_word("s0 s1 s4 s5 sigma12 s2 s3 s2", rs);
  CHECK((g * g.inverse()).is_identity());
  CHECK(g.pow(-2) == g.inverse() * g.inverse());
  CHECK(g.pow(0).is_identity());
  CHECK(g.pow(5) == g * g * g * g * g);
  CHECK(g == g.without_word());
  CHECK(g.inverse().word_text() == "s2 s3 s2 sigma12^-1 s5 s4 s1 s0");
  CHECK(error_kind([] { GroupElement::from_matrix(IntMatrix::from_rows({{2, 0}, {0, 1}})); }) ==
        ErrorKind::InvalidArgument);
  CHECK(GroupElement::from_matrix(g.matrix()) == g);
}

TEST_CASE("A1~ translation matrices in both bases") {
  const RootSystem rs = make_root_system(TypeLabel::parse("A1~"));
  const GroupElement t = evaluate_word("pi s1", rs);
  CHECK(coweight_matrix(t, rs.cartan()) == IntMatrix::from_rows({{1, 1}, {0, 1}}));
  CHECK(delta_basis_matrix(t, rs.cartan()) == IntMatrix::from_rows({{1, 0}, {-1, 1}}));
}

TEST_CASE("reflections through real roots") {
  const auto& rs = d5();
  CHECK(reflection_through(rs.simple(2), rs) == simple_reflection(2, rs.cartan()));
  CHECK(reflection_through(rs.delta() - parse_root_expr("a1223345", rs), rs) == simple_reflection(0, rs.cartan()));
  CHECK(error_kind([&] { reflection_through(rs.delta(), rs); }) == ErrorKind::NotARealRoot);
  CHECK(error_kind([&] { reflection_through(rs.simple(1) + rs.simple(0), rs); }) == ErrorKind::NotARealRoot);
}

TEST_CASE("property: w s_a w^-1 = s_(w a)") {
  const auto& rs = d5();
  std::mt19937_64 rng(weylkit::testing::kSeed);
  for (int t = 0; t < weylkit::testing::kPropertyCases; ++t) {
    const GroupElement w = weylkit::testing::random_element(rng, rs, 12);
    const RootVec a = weylkit::testing::random_real_root(rng, rs);
    CHECK(w * reflection_through(a, rs) * w.inverse() == reflection_through(w(a), rs));
  }
}

TEST_CASE("property: pairing is invariant under the contragredient action") {
  const auto& rs = d5();
  std::mt19937_64 rng(weylkit::testing::kSeed + 2);
  std::uniform_int_distribution<int> c(-5, 5);
  for (int t = 0; t < weylkit::testing::kPropertyCases; ++t) {
    const GroupElement g = weylkit::testing::random_element(rng, rs, 12);
    RootVec v(6);
    CoweightVec f(6);
    for (std::size_t i = 0; i < 6; ++i) {
      v[i] = c(rng);
      f[i] = Rational(c(rng));
    }
    const CoweightVec gf = act_on_coweight(g, f, rs.cartan());
    CHECK(pair(g(v), gf, rs.cartan()) == pair(v, f, rs.cartan()));
    CHECK(times(coweight_matrix(g, rs.cartan()), f) == gf);
    CHECK(g(rs.delta()) == rs.delta());
  }
}

TEST_CASE("property: matrix representations are homomorphisms") {
  const auto& rs = d5();
  std::mt19937_64 rng(weylkit::testing::kSeed + 3);
  for (int t = 0; t < weylkit::testing::kPropertyCases; ++t) {
    const GroupElement g = weylkit::testing::random_element(rng, rs, 8);
    const GroupElement h = weylkit::testing::random_element(rng, rs, 8);
    CHECK(coweight_matrix(g * h, rs.cartan()) == coweight_matrix(g, rs.cartan()) * coweight_matrix(h, rs.cartan()));
    CHECK(delta_basis_matrix(g * h, rs.cartan()) ==
          delta_basis_matrix(g, rs.cartan()) * delta_basis_matrix(h, rs.cartan()));
    CHECK((g * h).matrix() == g.matrix() * h.matrix());
  }
}
