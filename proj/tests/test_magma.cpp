#include <doctest.h>

#include <algorithm>
#include <stdexcept>

#include "hiso/corpus.hpp"
#include "hiso/magma.hpp"
#include "test_support.hpp"

using namespace hiso;

TEST_CASE("permutation composition applies the right factor first") {
  Permutation f{{2, 3, 1}};
  Permutation g{{1, 3, 2}};
  Permutation fg = compose(f, g);
  for (int x = 1; x <= 3; ++x) CHECK(fg(x) == f(g(x)));
  CHECK(fg.images() == std::vector<int>{2, 1, 3});
}

TEST_CASE("permutation inverse and identity") {
  Permutation p{{3, 1, 4, 2}};
  CHECK(compose(p, p.inverse()).is_identity());
  CHECK(compose(p.inverse(), p).is_identity());
  CHECK(Permutation::identity(4).is_identity());
  CHECK_FALSE(p.is_identity());
}

TEST_CASE("parse_permutation accepts image lists") {
  Permutation p = parse_permutation("3 1 2", 3);
  CHECK(p.images() == std::vector<int>{3, 1, 2});
  CHECK(parse_permutation("1, 2, 3", 3).is_identity());
}

TEST_CASE("parse_permutation accepts cycle form with fixed points omitted") {
  Permutation p = parse_permutation("(3 5 7)(4 6 8)", 8);
  CHECK(p.images() == std::vector<int>{1, 2, 5, 6, 7, 8, 3, 4});
  CHECK(parse_permutation("(1 2)", 4).images() == std::vector<int>{2, 1, 3, 4});
}

TEST_CASE("parse_permutation rejects malformed input") {
  CHECK_THROWS_AS(parse_permutation("1 1 2", 3), std::invalid_argument);
  CHECK_THROWS_AS(parse_permutation("1 2 5", 3), std::invalid_argument);
  CHECK_THROWS_AS(parse_permutation("1 2", 3), std::invalid_argument);
  CHECK_THROWS_AS(parse_permutation("(1 2)(2 3)", 3), std::invalid_argument);
  CHECK_THROWS_AS(parse_permutation("(1 9)", 3), std::invalid_argument);
  CHECK_THROWS_AS(parse_permutation("nope", 3), std::invalid_argument);
  CHECK_THROWS_AS(parse_permutation("", 3), std::invalid_argument);
}

TEST_CASE("to_string of a permutation round-trips") {
  Permutation p{{4, 2, 1, 3}};
  CHECK(to_string(p) == "4 2 1 3");
  CHECK(parse_permutation(to_string(p), 4) == p);
}

TEST_CASE("classify recognizes the corpus tables") {
  AlgebraClass c6 = classify(builtin("ex1-c6"));
  CHECK(c6.kind == AlgebraKind::Loop);
  CHECK(c6.identity == 1);

  AlgebraClass l = classify(builtin("ex1-L"));
  CHECK(l.kind == AlgebraKind::Loop);
  CHECK(l.identity == 1);

  CHECK(classify(builtin("ex41-star")).kind == AlgebraKind::Quasigroup);
  CHECK_FALSE(classify(builtin("ex41-star")).identity.has_value());
  CHECK(classify(builtin("ex41-dot")).kind == AlgebraKind::Quasigroup);
  CHECK(classify(builtin("ex61-bol")).kind == AlgebraKind::Loop);
  CHECK(classify(builtin("ex61-d8")).kind == AlgebraKind::Loop);
}

TEST_CASE("classify flags a non-Latin table as a groupoid") {
  // constant row breaks the Latin property
  CayleyTable t(2, {1, 1, 2, 1});
  CHECK(classify(t).kind == AlgebraKind::Groupoid);
}

TEST_CASE("generator families have the expected structure") {
  for (int n = 1; n <= 8; ++n) {
    CayleyTable c = cyclic_table(n);
    CHECK(c.order() == n);
    CHECK(is_associative(c));
    CHECK(is_commutative(c));
    CHECK(classify(c).identity == 1);
  }
  CayleyTable s3 = symmetric_table(3);
  CHECK(s3.order() == 6);
  CHECK(is_associative(s3));
  CHECK_FALSE(is_commutative(s3));
  CHECK(classify(s3).identity == 1);

  CayleyTable a4 = alternating_table(4);
  CHECK(a4.order() == 12);
  CHECK(is_associative(a4));
  CHECK_FALSE(is_commutative(a4));

  for (int m : {4, 6, 8}) {
    CayleyTable d = dihedral_table(m);
    CHECK(d.order() == m);
    CHECK(is_associative(d));
    CHECK(is_commutative(d) == (m == 4));
    CHECK(classify(d).identity == 1);
  }
  CHECK_THROWS_AS(symmetric_table(6), std::invalid_argument);
  CHECK_THROWS_AS(dihedral_table(7), std::invalid_argument);
}

TEST_CASE("the ex1 pair pins its key products") {
  CayleyTable c6 = builtin("ex1-c6");
  CayleyTable l = builtin("ex1-L");
  CHECK(c6.at(3, 5) == 1);
  CHECK(l.at(3, 5) == 4);
  CHECK(l.at(5, 3) == 1);
  // identity is a half-iso: each * product lands in the two-sided dot set
  for (int x = 1; x <= 6; ++x)
    for (int y = 1; y <= 6; ++y) {
      const int p = c6.at(x, y);
      CHECK((p == l.at(x, y) || p == l.at(y, x)));
    }
  // but the product sets differ at (3,5), which is what blocks specialness
  CHECK(std::minmax({c6.at(3, 5), c6.at(5, 3)}) != std::minmax({l.at(3, 5), l.at(5, 3)}));
}

TEST_CASE("transpose is an involution and flips products") {
  CayleyTable t = builtin("ex41-star");
  CayleyTable tt = transpose(t);
  CHECK(transpose(tt).entries() == t.entries());
  for (int x = 1; x <= t.order(); ++x)
    for (int y = 1; y <= t.order(); ++y) CHECK(tt.at(x, y) == t.at(y, x));
}

TEST_CASE("apply_iso relabels so the permutation becomes an isomorphism") {
  CayleyTable t = symmetric_table(3);
  Permutation f = parse_permutation("(1 4)(2 5)", 6);
  CayleyTable u = apply_iso(t, f);
  // f maps u to t by construction
  for (int x = 1; x <= 6; ++x)
    for (int y = 1; y <= 6; ++y) CHECK(f(u.at(x, y)) == t.at(f(x), f(y)));
}

TEST_CASE("solve_right and solve_left divide in a quasigroup") {
  CayleyTable t = builtin("ex41-star");
  for (int a = 1; a <= 8; ++a)
    for (int b = 1; b <= 8; ++b) {
      auto x = solve_right(t, a, b);  // a * x = b
      auto y = solve_left(t, a, b);   // y * a = b
      REQUIRE(x.has_value());
      REQUIRE(y.has_value());
      CHECK(t.at(a, *x) == b);
      CHECK(t.at(*y, a) == b);
    }
  CayleyTable g(2, {1, 1, 2, 1});
  CHECK_FALSE(solve_right(g, 1, 2).has_value());
}

TEST_CASE("quaternion oracle table is the order-8 group it should be") {
  CayleyTable q8 = hiso::testing::quaternion_table();
  CHECK(is_associative(q8));
  CHECK_FALSE(is_commutative(q8));
  CHECK(classify(q8).kind == AlgebraKind::Loop);
  CHECK(classify(q8).identity == 1);
  // every element squares into the center {1, -1}
  for (int x = 1; x <= 8; ++x) CHECK(q8.at(x, x) <= 2);
  CHECK(q8.at(3, 5) == 7);  // i*j = k
  CHECK(q8.at(5, 3) == 8);  // j*i = -k
}
