#include <doctest.h>

#include "legkh/front.hpp"
#include "legkh/khovanov.hpp"
#include "oracles.hpp"
#include "test_util.hpp"

using namespace legkh;

namespace {

HomologyGroup free_group(int rank) { return {rank, {}}; }

LaurentPoly poly(std::initializer_list<std::pair<int, std::int64_t>> terms) {
  LaurentPoly p;
  for (auto [e, c] : terms) p.add(e, c);
  return p;
}

}  // namespace

TEST_CASE("unknot") {
  const BigradedTable t = khovanov_homology(LinkDiagram::unknot());
  BigradedTable expected;
  expected.set(0, -1, free_group(1));
  expected.set(0, 1, free_group(1));
  CHECK(t == expected);
  CHECK(min_delta(t) == -1);
  CHECK(kauffman_jones(LinkDiagram::unknot()) == poly({{-1, 1}, {1, 1}}));

  // A kinked unknot has the same homology.
  CHECK(khovanov_homology(desingularize(parse_front("L1 X1 R1"))) == expected);
  CHECK(khovanov_homology(desingularize(parse_front("L1 L2 R1 R1"))) == expected);
}

TEST_CASE("right trefoil") {
  const LinkDiagram d = desingularize(oracle::corpus_front("trefoil_right"));
  const BigradedTable t = khovanov_homology(d);
  BigradedTable expected;
  expected.set(0, 1, free_group(1));
  expected.set(0, 3, free_group(1));
  expected.set(2, 5, free_group(1));
  expected.set(3, 9, free_group(1));
  expected.set(3, 7, {0, {2}});
  CHECK(t == expected);
  CHECK(min_delta(t) == 1);
  const LaurentPoly jones = poly({{1, 1}, {3, 1}, {5, 1}, {9, -1}});
  CHECK(kauffman_jones(d) == jones);
  CHECK(graded_euler_characteristic(t) == jones);
}

TEST_CASE("left trefoil from a front and from PD agree") {
  const BigradedTable front = khovanov_homology(desingularize(oracle::corpus_front("trefoil_left")));
  const BigradedTable pd = khovanov_homology(parse_pd("X[1,4,2,5] X[3,6,4,1] X[5,2,6,3]"));
  CHECK(front == pd);
  CHECK(pd.at(-3, -9) == free_group(1));
  CHECK(pd.at(-2, -5) == free_group(1));
  CHECK(pd.at(-2, -7) == HomologyGroup{0, {2}});
  CHECK(min_delta(pd) == -6);
}

TEST_CASE("figure-eight") {
  const LinkDiagram d = desingularize(oracle::corpus_front("figure_eight"));
  const BigradedTable t = khovanov_homology(d);
  CHECK(min_delta(t) == -3);
  CHECK(t == khovanov_homology(parse_pd("X[4,2,5,1] X[8,6,1,5] X[6,3,7,4] X[2,7,3,8]")));
  // Amphichiral, so the Jones polynomial is symmetric.
  CHECK(graded_euler_characteristic(t) == graded_euler_characteristic(t).mirrored());
}

TEST_CASE("Hopf link") {
  const LinkDiagram d = desingularize(oracle::corpus_front("hopf"));
  const BigradedTable t = khovanov_homology(d);
  CHECK(graded_euler_characteristic(t) == kauffman_jones(d));
  int total = 0;
  for (const auto& [ij, g] : t.entries) total += g.free_rank;
  CHECK(total == 4);
}

TEST_CASE("torus knots against the closed Jones formula") {
  CHECK(kauffman_jones(desingularize(oracle::corpus_front("trefoil_right"))) == oracle::torus_knot_jones(2, 3));
  const LinkDiagram t34 = desingularize(oracle::corpus_front("torus_3_4"));
  CHECK(kauffman_jones(t34) == oracle::torus_knot_jones(3, 4));
  CHECK(kauffman_jones(t34.mirror()) == oracle::torus_knot_jones(3, 4).mirrored());
  const BigradedTable h = khovanov_homology(t34);
  CHECK(graded_euler_characteristic(h) == oracle::torus_knot_jones(3, 4));
  // T(3,4) is the first knot with a Z/2 that is not on the main diagonals.
  CHECK(h.at(3, 11) == HomologyGroup{0, {2}});
}

TEST_CASE("corpus: Euler characteristic, bracket oracle and d^2 = 0") {
  for (const auto& entry : oracle::load_corpus()) {
    CAPTURE(entry.name);
    const LinkDiagram d = desingularize(entry.front);
    if (d.crossing_count() > 10) continue;
    const LaurentPoly jones = kauffman_jones(d);
    CHECK(jones == oracle::pd_bracket_jones(d.pd_code(), d.writhe()));
    CHECK(graded_euler_characteristic(khovanov_homology(d)) == jones);
    CHECK(cube_differential_squares_to_zero(d));

    // Chain groups have the homology's Euler characteristic too.
    LaurentPoly chain;
    for (const auto& [ij, g] : chain_group_ranks(d).entries)
      chain.add(ij.second, (ij.first % 2 == 0 ? 1 : -1) * g.free_rank);
    CHECK(chain == jones);
  }
}

TEST_CASE("size limits and empty tables") {
  const LinkDiagram d = desingularize(oracle::corpus_front("torus_3_4"));
  KhovanovOptions small;
  small.max_crossings = 7;
  CHECK(error_kind([&] { khovanov_homology(d, small); }) == ErrorKind::TooLarge);
  CHECK(error_kind([&] { kauffman_jones(d, 7); }) == ErrorKind::TooLarge);
  CHECK(error_kind([] { min_delta(BigradedTable{}); }) == ErrorKind::EmptyTable);
  CHECK(BigradedTable{}.at(0, 0).is_zero());
}

TEST_CASE("thread count does not change the result") {
  const LinkDiagram d = desingularize(oracle::corpus_front("knot_6_2"));
  KhovanovOptions one;
  one.threads = 1;
  KhovanovOptions many;
  many.threads = 4;
  CHECK(khovanov_homology(d, one) == khovanov_homology(d, many));
}
