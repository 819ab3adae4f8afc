#include <doctest.h>

#include <random>

#include "test_support.hpp"
#include "weylkit/cartan.hpp"
#include "weylkit/error.hpp"

using namespace weylkit;
using weylkit::testing::error_kind;

namespace {

IntMatrix d5_affine_by_hand() {
  // 0 - 2, 1 - 2, 2 - 3, 3 - 4, 3 - 5
  return IntMatrix::from_rows({{2, 0, -1, 0, 0, 0},
                               {0, 2, -1, 0, 0, 0},
                               {-1, -1, 2, -1, 0, 0},
                               {0, 0, -1, 2, -1, -1},
                               {0, 0, 0, -1, 2, 0},
                               {0, 0, 0, -1, 0, 2}});
}

}  // namespace

TEST_CASE("type labels parse in the accepted spellings") {
  for (const char* text : {"D5~", "D5^(1)", "d5^1", "D5(1)"}) {
    const TypeLabel t = TypeLabel::parse(text);
    CHECK(t == TypeLabel{Family::D, 5, true});
    CHECK(t.to_string() == "D5~");
  }
  CHECK(TypeLabel::parse("A3") == TypeLabel{Family::A, 3, false});
  CHECK(error_kind([] { TypeLabel::parse("E8"); }) == ErrorKind::UnsupportedType);
  CHECK(error_kind([] { TypeLabel::parse("D3~"); }) == ErrorKind::UnsupportedType);
  CHECK(error_kind([] { TypeLabel::parse("A"); }) == ErrorKind::ParseError);
  CHECK(error_kind([] { TypeLabel::parse("A3x"); }) == ErrorKind::ParseError);
  CHECK(error_kind([] { TypeLabel::parse(""); }) == ErrorKind::ParseError);
}

TEST_CASE("builtin D5~ matches the hand-drawn diagram") {
  const CartanData d = load_builtin(TypeLabel::parse("D5~"));
  CHECK(d.matrix == d5_affine_by_hand());
  CHECK(d.marks == std::vector<std::int64_t>{1, 1, 2, 2, 1, 1});
  CHECK(compute_marks(d.matrix) == d.marks);
  CHECK(validate(d).ok());
  CHECK(bond_order(d, 2, 3) == 3);
  CHECK(bond_order(d, 0, 1) == 2);
  CHECK(bond_order(d, 3, 4) == 3);
  for (const auto& l : root_lengths(d)) CHECK(l == Rational(2));
}

TEST_CASE("A1~ and A3~") {
  const CartanData a1 = load_builtin(TypeLabel::parse("A1~"));
  CHECK(a1.matrix == IntMatrix::from_rows({{2, -2}, {-2, 2}}));
  CHECK(a1.marks == std::vector<std::int64_t>{1, 1});
  CHECK(bond_order(a1, 0, 1) == 0);
  const CartanData a3 = load_builtin(TypeLabel::parse("A3~"));
  CHECK(a3.matrix ==
        IntMatrix::from_rows({{2, -1, 0, -1}, {-1, 2, -1, 0}, {0, -1, 2, -1}, {-1, 0, -1, 2}}));
  CHECK(a3.marks == std::vector<std::int64_t>{1, 1, 1, 1});
}

TEST_CASE("finite builtins carry no marks") {
  const CartanData d4 = load_builtin(TypeLabel::parse("D4"));
  CHECK_FALSE(d4.affine);
  CHECK(d4.marks.empty());
  CHECK(validate(d4).ok());
  CHECK(d4.size() == 4);
}

TEST_CASE("validation reports every defect") {
  CartanData bad{IntMatrix::from_rows({{3, -1}, {-1, 2}}), {1, 1}, true, std::nullopt};
  CHECK_FALSE(validate(bad).ok());
  bad.matrix = IntMatrix::from_rows({{2, 1}, {-1, 2}});
  CHECK_FALSE(validate(bad).ok());
  bad.matrix = IntMatrix::from_rows({{2, 0}, {-1, 2}});
  CHECK_FALSE(validate(bad).ok());
  CartanData wrong_marks = load_builtin(TypeLabel::parse("D5~"));
  wrong_marks.marks = {1, 1, 1, 1, 1, 1};
  CHECK_FALSE(validate(wrong_marks).ok());
  wrong_marks.marks = {2, 2, 4, 4, 2, 2};
  CHECK_FALSE(validate(wrong_marks).ok());
  CHECK(error_kind([] { make_cartan(IntMatrix::from_rows({{2, -1}, {0, 2}}), std::nullopt, true); }) ==
        ErrorKind::InvalidCartan);
  // A triangle with a -2 entry admits no symmetrization.
  CHECK(error_kind([] {
          make_cartan(IntMatrix::from_rows({{2, -1, -1}, {-2, 2, -1}, {-1, -1, 2}}), std::nullopt, true);
        }) == ErrorKind::InvalidCartan);
}

TEST_CASE("make_cartan computes marks when absent") {
  const CartanData d = make_cartan(d5_affine_by_hand(), std::nullopt, true);
  CHECK(d.marks == std::vector<std::int64_t>{1, 1, 2, 2, 1, 1});
}

TEST_CASE("marks of the builtin families") {
  // A_n~: all ones; D_n~: 1,1,2,...,2,1,1.
  for (int n = 1; n <= 9; ++n) {
    const CartanData a = load_builtin(TypeLabel{Family::A, n, true});
    CHECK(compute_marks(a.matrix) == std::vector<std::int64_t>(static_cast<std::size_t>(n + 1), 1));
  }
  for (int n = 4; n <= 9; ++n) {
    const CartanData d = load_builtin(TypeLabel{Family::D, n, true});
    std::vector<std::int64_t> want(static_cast<std::size_t>(n + 1), 2);
    want[0] = want[1] = want[static_cast<std::size_t>(n - 1)] = want[static_cast<std::size_t>(n)] = 1;
    CHECK(compute_marks(d.matrix) == want);
    CHECK(validate(d).ok());
  }
}

TEST_CASE("Gram matrix is symmetric with A(j, i) (a_i, a_i) / 2") {
  const CartanData d = load_builtin(TypeLabel::parse("D5~"));
  const RationalMatrix g = bilinear_gram(d);
  for (int i = 0; i < 6; ++i)
    for (int j = 0; j < 6; ++j) {
      CHECK(g(i, j) == g(j, i));
      CHECK(g(i, j) == Rational(d(j, i)));
    }
}

TEST_CASE("classification of root subsets") {
  const CartanData d = load_builtin(TypeLabel::parse("D5~"));
  auto e = [](int i) { return RootVec::basis(6, static_cast<std::size_t>(i)); };
  const std::vector<RootVec> roots{e(1), e(3), e(4), e(5)};
  const auto comps = classify_components(roots, d);
  REQUIRE(comps.size() == 2);
  CHECK(comps[0].type == TypeLabel{Family::A, 1, false});
  CHECK(comps[0].simple_roots == std::vector<RootVec>{e(1)});
  CHECK(comps[1].type == TypeLabel{Family::A, 3, false});
  CHECK(comps[1].simple_roots[1] == e(3));

  const std::vector<RootVec> path{e(1), e(2), e(3), e(4)};
  const auto a4 = classify_components(path, d);
  REQUIRE(a4.size() == 1);
  CHECK(a4[0].type == TypeLabel{Family::A, 4, false});
  CHECK(a4[0].simple_roots.front() == e(1));

  const std::vector<RootVec> d4{e(0), e(1), e(2), e(3)};
  const auto fork = classify_components(d4, d);
  REQUIRE(fork.size() == 1);
  CHECK(fork[0].type == TypeLabel{Family::D, 4, false});
  CHECK(fork[0].simple_roots[1] == e(2));

  const std::vector<RootVec> d5{e(1), e(2), e(3), e(4), e(5)};
  const auto big = classify_components(d5, d);
  REQUIRE(big.size() == 1);
  CHECK(big[0].type == TypeLabel{Family::D, 5, false});
  CHECK(big[0].simple_roots[0] == e(1));
  CHECK(big[0].simple_roots[2] == e(3));

  const std::vector<RootVec> cyc{e(0), e(1), e(2), e(3), e(4), e(5)};
  CHECK(error_kind([&] { classify_components(cyc, d); }) == ErrorKind::UnrecognizedDiagram);
  const std::vector<RootVec> dup{e(1), e(1)};
  CHECK(error_kind([&] { classify_components(dup, d); }) == ErrorKind::InvalidArgument);
}

TEST_CASE("random Cartan perturbations never validate") {
  std::mt19937_64 rng(weylkit::testing::kSeed);
  const CartanData base = load_builtin(TypeLabel::parse("D5~"));
  std::uniform_int_distribution<int> node(0, 5);
  std::uniform_int_distribution<int> delta(1, 3);
  for (int t = 0; t < weylkit::testing::kPropertyCases; ++t) {
    CartanData d = base;
    const int i = node(rng), j = node(rng);
    d.matrix(i, j) += delta(rng);
    CHECK_FALSE(validate(d).ok());
  }
}
