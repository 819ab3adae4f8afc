#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "test_support.hpp"
#include "weylkit/lattice.hpp"

using namespace weylkit;
using weylkit::testing::error_kind;

namespace {

// D5 roots +-e_i +-e_j written in simple-root coordinates (index 0 unused),
// from e_k = a_k + ... + a_3 + (a4 + a5)/2 (k <= 3), e4 = (a4 + a5)/2,
// e5 = (a5 - a4)/2. Work with doubled coefficients.
std::set<RootVec> d5_roots_oracle() {
  auto e = [](int k) {
    std::vector<std::int64_t> c(6, 0);
    if (k <= 3) {
      for (int j = k; j <= 3; ++j) c[static_cast<std::size_t>(j)] = 2;
      c[4] = c[5] = 1;
    } else if (k == 4) {
      c[4] = c[5] = 1;
    } else {
      c[4] = -1;
      c[5] = 1;
    }
    return c;
  };
  std::set<RootVec> out;
  for (int i = 1; i <= 5; ++i)
    for (int j = i + 1; j <= 5; ++j)
      for (int si : {1, -1})
        for (int sj : {1, -1}) {
          const auto a = e(i), b = e(j);
          std::vector<std::int64_t> c(6);
          for (std::size_t k = 0; k < 6; ++k) {
            const std::int64_t doubled = si * a[k] + sj * b[k];
            REQUIRE(doubled % 2 == 0);
            c[k] = doubled / 2;
          }
          out.insert(RootVec(c));
        }
  return out;
}

// A_n~ finite roots e_i - e_j = +-(a_i + ... + a_{j-1}).
std::set<RootVec> a_roots_oracle(int n) {
  std::set<RootVec> out;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n + 1; ++j) {
      RootVec v(static_cast<std::size_t>(n + 1));
      for (int k = i; k < j; ++k) v[static_cast<std::size_t>(k)] = 1;
      out.insert(v);
      out.insert(-v);
    }
  return out;
}

const RootSystem& d5() {
  static const RootSystem rs = make_root_system(TypeLabel::parse("D5~"));
  return rs;
}

}  // namespace

TEST_CASE("null root and pairings") {
  const auto& rs = d5();
  CHECK(rs.delta() == RootVec{1, 1, 2, 2, 1, 1});
  const auto& data = rs.cartan();
  for (int j = 1; j < 6; ++j) {
    const CoweightVec h = CoweightVec::fundamental(6, static_cast<std::size_t>(j));
    CHECK(pair(rs.simple(0), h, data) == Rational(-data.marks[static_cast<std::size_t>(j)]));
    CHECK(pair(rs.delta(), h, data) == Rational(0));
    for (int i = 1; i < 6; ++i) CHECK(pair(rs.simple(i), h, data) == Rational(i == j ? 1 : 0));
  }
  CoweightVec hd(6);
  hd.h_delta() = 1;
  CHECK(pair(rs.delta(), hd, data) == Rational(1));
  CHECK(pair(rs.simple(0), hd, data) == Rational(1));
}

TEST_CASE("simple coroots pair with simple roots through the Cartan matrix") {
  const auto& rs = d5();
  CHECK(simple_coroot(0, rs.cartan()) == parse_coweight_expr("-h2", 6));
  for (int i = 0; i < 6; ++i)
    for (int j = 0; j < 6; ++j)
      CHECK(pair(rs.simple(j), simple_coroot(i, rs.cartan()), rs.cartan()) == Rational(rs.cartan()(j, i)));
}

TEST_CASE("finite roots of D5 agree with the +-e_i +-e_j oracle") {
  const auto& rs = d5();
  const std::set<RootVec> got(rs.finite_roots().begin(), rs.finite_roots().end());
  CHECK(rs.finite_roots().size() == 40);
  CHECK(got == d5_roots_oracle());
}

TEST_CASE("finite roots of A_n agree with the e_i - e_j oracle") {
  for (int n = 1; n <= 6; ++n) {
    const RootSystem rs = make_root_system(TypeLabel{Family::A, n, true});
    const std::set<RootVec> got(rs.finite_roots().begin(), rs.finite_roots().end());
    CHECK(got.size() == static_cast<std::size_t>(n * (n + 1)));
    CHECK(got == a_roots_oracle(n));
  }
}

TEST_CASE("root counts of D_n follow 2n(n-1)") {
  for (int n = 4; n <= 8; ++n) {
    const auto roots = enumerate_finite_roots(load_builtin(TypeLabel{Family::D, n, true}));
    CHECK(roots.size() == static_cast<std::size_t>(2 * n * (n - 1)));
    const auto finite = enumerate_finite_roots(load_builtin(TypeLabel{Family::D, n, false}));
    CHECK(finite.size() == roots.size());
  }
  CHECK(error_kind([] { enumerate_finite_roots(load_builtin(TypeLabel{Family::D, 6, true}), 10); }) ==
        ErrorKind::NonTerminating);
}

TEST_CASE("real roots, bilinear form and coroots") {
  const auto& rs = d5();
  CHECK(rs.is_real_root(rs.simple(0) + 3 * rs.delta()));
  CHECK_FALSE(rs.is_real_root(rs.delta()));
  CHECK_FALSE(rs.is_real_root(2 * rs.simple(1)));
  for (const auto& r : rs.finite_roots()) {
    CHECK(rs.bilinear(rs.delta(), r) == Rational(0));
    CHECK(rs.bilinear(r, r) == Rational(2));
  }
  // eta1 = a2 + a3.
  CHECK(rs.coroot(parse_root_expr("a23", rs)) == parse_coweight_expr("-h1 + h2 + h3 - h4 - h5", 6));
  CHECK(rs.coroot(rs.simple(0)) == simple_coroot(0, rs.cartan()));
}

TEST_CASE("finite part splits off delta") {
  const auto& rs = d5();
  const auto fp = finite_part(rs.simple(0) + 2 * rs.delta(), rs.cartan());
  CHECK(fp.k == 3);
  CHECK(fp.finite[0] == 0);
  CHECK(fp.finite + fp.k * rs.delta() == rs.simple(0) + 2 * rs.delta());
}

TEST_CASE("automorphism registry") {
  RootSystem rs = make_root_system(TypeLabel::parse("D5~"));
  REQUIRE(rs.find_automorphism("sigma12"));
  CHECK(*rs.find_automorphism("sigma12") == Permutation{5, 4, 3, 2, 0, 1});
  CHECK(*rs.find_automorphism("sigma21") == Permutation{4, 5, 3, 2, 1, 0});
  CHECK(rs.find_automorphism("nope") == nullptr);
  CHECK(error_kind([&] { rs.register_automorphism("bad", {1, 0, 3, 2, 4, 5}); }) == ErrorKind::NotDiagramSymmetry);
  CHECK(error_kind([&] { rs.register_automorphism("short", {1, 0}); }) == ErrorKind::DimensionMismatch);
  const RootSystem a3 = make_root_system(TypeLabel::parse("A3~"));
  CHECK(*a3.find_automorphism("p12") == Permutation{1, 2, 3, 0});
  CHECK(*a3.find_automorphism("p21") == Permutation{3, 0, 1, 2});
}

TEST_CASE("compressed notation") {
  RootSystem rs = make_root_system(TypeLabel::parse("D5~"));
  rs.register_root_name("eta0", parse_root_expr("a012345", rs));
  CHECK(parse_root_expr("a0123", rs) == RootVec{1, 1, 1, 1, 0, 0});
  CHECK(parse_root_expr("a1223345", rs) == RootVec{0, 1, 2, 2, 1, 1});
  CHECK(parse_root_expr("a0123 - d", rs) == RootVec{0, 0, -1, -1, -1, -1});
  CHECK(parse_root_expr("2d", rs) == 2 * rs.delta());
  CHECK(parse_root_expr("-a345 + delta", rs) == RootVec{1, 1, 2, 1, 0, 0});
  CHECK(parse_root_expr("[1,0,2,2,1,1]", rs) == RootVec{1, 0, 2, 2, 1, 1});
  CHECK(parse_root_expr("eta0 + d", rs) == RootVec{2, 2, 3, 3, 2, 2});
  CHECK(compressed(RootVec{1, 1, 1, 1, 0, 0}) == "a0123");
  CHECK(compressed(RootVec{0, 0, -1, -1, -1, 0}) == "-a234");
  CHECK_FALSE(compressed(RootVec{1, -1, 0, 0, 0, 0}));
  CHECK(format_root(RootVec{1, -1, 0, 0, 0, 0}) == "[1,-1,0,0,0,0]");
  CHECK(describe_root(parse_root_expr("eta0 + d", rs), rs) == "eta0 + d");
  CHECK(describe_root(rs.delta(), rs) == "d");
  for (const char* bad : {"", "a9", "a0 +", "q1", "[1,2", "1/2 a0", "a0 3"})
    CHECK(error_kind([&] { parse_root_expr(bad, rs); }) == ErrorKind::ParseError);
}

TEST_CASE("coweight notation round-trips") {
  CHECK(parse_coweight_expr("1/2 h3 - h1 + hd", 6) ==
        CoweightVec({Rational(-1), 0, Rational(1, 2), 0, 0, Rational(1)}));
  CHECK(format_coweight(CoweightVec(6)) == "0");
  CHECK(error_kind([] { parse_coweight_expr("h7", 6); }) == ErrorKind::ParseError);
  CHECK(error_kind([] { parse_coweight_expr("1/0 h1", 6); }) == ErrorKind::ParseError);
  std::mt19937_64 rng(weylkit::testing::kSeed);
  std::uniform_int_distribution<int> num(-6, 6), den(1, 4);
  for (int t = 0; t < weylkit::testing::kPropertyCases; ++t) {
    CoweightVec f(6);
    for (std::size_t i = 0; i < 6; ++i) f[i] = Rational(num(rng), den(rng));
    CHECK(parse_coweight_expr(format_coweight(f), 6) == f);
  }
}

TEST_CASE("root notation round-trips on random real roots") {
  const auto& rs = d5();
  std::mt19937_64 rng(weylkit::testing::kSeed + 1);
  for (int t = 0; t < weylkit::testing::kPropertyCases; ++t) {
    const RootVec r = weylkit::testing::random_real_root(rng, rs);
    CHECK(parse_root_expr(format_root(r), rs) == r);
    CHECK(parse_root_expr(describe_root(r, rs), rs) == r);
  }
}
