#include <doctest.h>

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

#include "hiso/corpus.hpp"
#include "hiso/halfiso.hpp"
#include "hiso/principal.hpp"
#include "test_support.hpp"

using namespace hiso;
using namespace hiso::testing;

TEST_CASE("pair partition marks commuting pairs and pairs up swaps") {
  CayleyTable t = builtin("ex41-star");
  PairPartition p = pair_partition(t);
  CHECK(p.r() == 6);
  CommutingSet k = commuting_set(t);
  for (int x = 1; x <= 8; ++x)
    for (int y = 1; y <= 8; ++y) {
      if (k.contains(x, y)) {
        CHECK(p.class_of(x, y) == -1);
      } else {
        CHECK(p.class_of(x, y) >= 0);
        CHECK(p.class_of(x, y) < p.r());
        CHECK(p.class_of(x, y) == p.class_of(y, x));
      }
    }
  CHECK(std::is_sorted(p.reps.begin(), p.reps.end()));
  // each representative is the least pair of its class
  for (int c = 0; c < p.r(); ++c) {
    std::pair<int, int> least{9, 9};
    for (int x = 1; x <= 8; ++x)
      for (int y = 1; y <= 8; ++y)
        if (p.class_of(x, y) == c) least = std::min(least, {x, y});
    CHECK(p.reps[static_cast<size_t>(c)] == least);
  }
}

TEST_CASE("fused product constraints force pairs into one class") {
  // if x*y or y*x collides with x*y' or y'*x, (x,y) and (x,y') must fuse
  CayleyTable t = builtin("ex41-star");
  PairPartition p = pair_partition(t);
  for (int x = 1; x <= 8; ++x)
    for (int y = 1; y <= 8; ++y)
      for (int y2 = y + 1; y2 <= 8; ++y2) {
        if (p.class_of(x, y) < 0 || p.class_of(x, y2) < 0) continue;
        std::set<int> s1{t.at(x, y), t.at(y, x)};
        if (s1.count(t.at(x, y2)) || s1.count(t.at(y2, x)))
          CHECK(p.class_of(x, y) == p.class_of(x, y2));
      }
}

TEST_CASE("swap-family counts for the named tables") {
  PrincipalCount l = principal_count(builtin("ex1-L"));
  CHECK(l.log2_M == 4);
  CHECK(l.r == 1);
  CHECK(l.log2_N == 1);

  PrincipalCount star = principal_count(builtin("ex41-star"));
  CHECK(star.log2_M == 24);
  CHECK(star.r == 6);
  CHECK(star.log2_N == 6);

  PrincipalCount d8 = principal_count(builtin("ex61-d8"));
  CHECK(d8.log2_M == 12);
  CHECK(d8.r == 3);

  PrincipalCount a5 = principal_count(alternating_table(5));
  CHECK(a5.log2_M == 1650);
  CHECK(a5.r == 91);

  CHECK_THROWS_AS(principal_count(builtin("ex1-c6")), std::invalid_argument);
}

TEST_CASE("sigma vector zero reproduces the table, all ones its transpose") {
  CayleyTable t = builtin("ex41-star");
  PairPartition p = pair_partition(t);
  SigmaVector zeros(static_cast<size_t>(p.r()), 0);
  SigmaVector ones(static_cast<size_t>(p.r()), 1);
  CHECK(sigma_table(t, p, zeros).entries() == t.entries());
  CHECK(sigma_table(t, p, ones).entries() == transpose(t).entries());
}

TEST_CASE("principal relation holds between a table and its swaps") {
  CayleyTable t = builtin("ex1-L");
  CHECK(is_principal_h_groupoid(t, t));
  CHECK(is_principal_h_groupoid(t, transpose(t)));
  CHECK_FALSE(is_principal_h_groupoid(builtin("ex1-c6"), t));
  CHECK_THROWS_AS(is_principal_h_groupoid(t, builtin("ex41-star")),
                  std::invalid_argument);
}

TEST_CASE("order-6 twist has exactly itself and its transpose as swaps") {
  CayleyTable t = builtin("ex1-L");
  auto tables = enumerate_principal_quasigroups(t);
  REQUIRE(tables.size() == 2);
  CHECK(tables[0].entries() == t.entries());
  CHECK(tables[1].entries() == transpose(t).entries());
}

TEST_CASE("order-8 quasigroup has 64 Latin swaps, all distinct") {
  CayleyTable t = builtin("ex41-star");
  auto tables = enumerate_principal_quasigroups(t);
  REQUIRE(tables.size() == 64);
  CHECK(tables.front().entries() == t.entries());
  std::set<std::vector<int>> seen;
  for (const CayleyTable& q : tables) {
    CHECK(latin_oracle(q));
    CHECK(is_principal_h_groupoid(t, q));
    seen.insert(q.entries());
  }
  CHECK(seen.size() == 64);
  auto prefix = enumerate_principal_quasigroups(t, 3);
  REQUIRE(prefix.size() == 3);
  for (int i = 0; i < 3; ++i)
    CHECK(prefix[static_cast<size_t>(i)].entries() ==
          tables[static_cast<size_t>(i)].entries());
}

TEST_CASE("the dot table is one coordinate swap away from the star table") {
  CayleyTable star = builtin("ex41-star"), dot = builtin("ex41-dot");
  PairPartition p = pair_partition(star);
  int hits = 0;
  SigmaVector located;
  for (int k = 0; k < 64; ++k) {
    SigmaVector s(6);
    for (int i = 0; i < 6; ++i) s[static_cast<size_t>(i)] = (k >> (5 - i)) & 1;
    if (sigma_table(star, p, s).entries() == dot.entries()) {
      ++hits;
      located = s;
    }
  }
  REQUIRE(hits == 1);
  CHECK(std::count(located.begin(), located.end(), 1) == 1);
  // the swapped class covers eight ordered pairs
  const int cls = static_cast<int>(std::find(located.begin(), located.end(), 1) -
                                   located.begin());
  int size = 0;
  for (int x = 1; x <= 8; ++x)
    for (int y = 1; y <= 8; ++y)
      if (p.class_of(x, y) == cls) ++size;
  CHECK(size == 8);
}

TEST_CASE("swap enumeration without a limit refuses a huge class count") {
  CayleyTable a5 = alternating_table(5);
  CHECK_THROWS_AS(enumerate_principal_quasigroups(a5), cap_exceeded_error);
  auto two = enumerate_principal_quasigroups(a5, 2);
  REQUIRE(two.size() == 2);
  CHECK(two[0].entries() == a5.entries());
  CHECK(latin_oracle(two[1]));
  CHECK(two[1].entries() != a5.entries());
}

TEST_CASE("swap enumeration requires a Latin square") {
  CayleyTable g(2, {1, 1, 2, 1});
  CHECK_THROWS_AS(enumerate_principal_quasigroups(g), std::invalid_argument);
}

TEST_CASE("isomorphic family members and the coset partition") {
  CayleyTable t = builtin("ex41-star");
  auto family = enumerate_isomorphic_family(t);
  REQUIRE(family.size() == 12);
  std::set<std::vector<int>> swaps;
  for (const CayleyTable& q : enumerate_principal_quasigroups(t))
    swaps.insert(q.entries());
  for (const CayleyTable& m : family) {
    CHECK(find_isomorphism(m, t).has_value());
    CHECK(swaps.count(m.entries()) == 1);  // family sits inside the swap list
  }
  // each member is hit by exactly |Aut| special mappings
  auto specials = search_half_isomorphisms(t, t, SearchMode::SpecialOnly);
  REQUIRE(specials.size() == 48);
  std::map<std::vector<int>, int> hits;
  for (const Permutation& f : specials) ++hits[apply_iso(t, f).entries()];
  CHECK(hits.size() == 12);
  for (const auto& [entries, count] : hits) CHECK(count == 4);
}

TEST_CASE("groups contribute only the table and its transpose") {
  for (const CayleyTable& t : {symmetric_table(3), dihedral_table(8)}) {
    auto family = enumerate_isomorphic_family(t);
    REQUIRE(family.size() == 2);
    std::set<std::vector<int>> got{family[0].entries(), family[1].entries()};
    CHECK(got.count(t.entries()) == 1);
    CHECK(got.count(transpose(t).entries()) == 1);
  }
}

TEST_CASE("special mapping finder agrees with the direct search") {
  CayleyTable star = builtin("ex41-star"), dot = builtin("ex41-dot");
  auto f = find_special_half_isomorphism(star, dot);
  REQUIRE(f.has_value());
  CHECK(specialness(star, dot, *f).is_special);
  CHECK(raw_special(star, dot, f->images()));

  CHECK_FALSE(find_special_half_isomorphism(builtin("ex1-c6"), builtin("ex1-L"))
                  .has_value());
  CHECK_FALSE(find_special_half_isomorphism(builtin("ex61-bol"),
                                            builtin("ex61-d8"))
                  .has_value());

  CayleyTable d8 = dihedral_table(8);
  auto g = find_special_half_isomorphism(d8, transpose(d8));
  REQUIRE(g.has_value());
  CHECK(raw_special(d8, transpose(d8), g->images()));

  auto h = find_special_half_isomorphism(builtin("ex1-c6"), builtin("ex1-c6"));
  REQUIRE(h.has_value());
  CHECK(raw_special(builtin("ex1-c6"), builtin("ex1-c6"), h->images()));
}

TEST_CASE("isomorphism search is sound, complete on relabelings, and capped") {
  CayleyTable a5 = alternating_table(5);
  std::mt19937_64 rng(7);
  Permutation p{random_images(60, rng)};
  CayleyTable shuffled = apply_iso(a5, p);
  auto f = find_isomorphism(shuffled, a5);
  REQUIRE(f.has_value());
  CHECK(raw_iso(shuffled, a5, f->images()));

  CHECK_FALSE(find_isomorphism(dihedral_table(8), quaternion_table()).has_value());
  CHECK_FALSE(find_isomorphism(builtin("ex1-c6"), builtin("ex1-L")).has_value());
  CHECK_THROWS_AS(find_isomorphism(a5, a5, 10), cap_exceeded_error);
  CHECK_THROWS_AS(find_isomorphism(builtin("ex1-c6"), builtin("ex41-star")),
                  std::invalid_argument);
}
