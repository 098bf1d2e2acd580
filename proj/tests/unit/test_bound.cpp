#include <doctest.h>

#include "legkh/bound.hpp"
#include "oracles.hpp"
#include "test_util.hpp"

using namespace legkh;

namespace {

BoundOptions with_oracle(ColoringChoice coloring = ColoringChoice::Both) {
  BoundOptions o;
  o.with_oracle = true;
  o.coloring = coloring;
  return o;
}

}  // namespace

TEST_CASE("unknot") {
  const FrontDiagram f = parse_front("L1 R1");
  CHECK(good_bad_census(f) == Census{{0, {1, 0}}});
  const BoundReport r = sharpness_report(f, with_oracle());
  CHECK(r.tb == -1);
  CHECK(r.tree_count == 1);
  CHECK(r.verdict == Verdict::SharpCertified);
  REQUIRE(r.oracle.has_value());
  CHECK(r.oracle->min_delta == -1);
  CHECK(r.oracle->sharp);
  CHECK(r.bound_holds);
}

TEST_CASE("max-tb right trefoil") {
  const FrontDiagram f = oracle::corpus_front("trefoil_right");
  CHECK(good_bad_census(f, true) == Census{{2, {1, 0}}});
  CHECK(good_bad_census(f, false) == Census{{2, {1, 0}}});
  const BoundReport r = sharpness_report(f, with_oracle());
  CHECK(r.tb == 1);
  CHECK(r.writhe == 3);
  CHECK(r.min_u == -1);
  CHECK(r.min_generator_delta == r.min_u + r.writhe - 1);
  CHECK(r.verdict == Verdict::SharpCertified);
  REQUIRE(r.oracle.has_value());
  CHECK(r.oracle->min_delta == 1);
  CHECK(r.oracle->sharp);
}

TEST_CASE("stabilized and kinked unknots are certified not sharp") {
  for (const char* word : {"L1 L2 R1 R1", "L1 X1 R1"}) {
    CAPTURE(word);
    const BoundReport r = sharpness_report(parse_front(word), with_oracle());
    CHECK(r.tb == -2);
    CHECK(r.verdict == Verdict::NotSharpCertified);
    REQUIRE(r.oracle.has_value());
    CHECK(r.oracle->min_delta == -1);
    CHECK(r.oracle->bound_holds);
    CHECK_FALSE(r.oracle->sharp);
  }
  const Census stab = good_bad_census(parse_front("L1 L2 R1 R1"));
  CHECK(stab == Census{{0, {0, 1}}});
}

TEST_CASE("a front with both good and bad trees at the same v is inconclusive") {
  const BoundReport r = sharpness_report(oracle::corpus_front("unknot_inconclusive"), with_oracle());
  CHECK(r.verdict == Verdict::Inconclusive);
  CHECK(r.bound_holds);
}

TEST_CASE("ng_bound without the oracle") {
  const BoundReport r = ng_bound(oracle::corpus_front("figure_eight"));
  CHECK(r.tb == -3);
  CHECK_FALSE(r.oracle.has_value());
  CHECK(r.min_u >= 1 - r.cusp_pairs);
  CHECK(r.tb <= r.min_generator_delta);
}

TEST_CASE("orientation of the Hopf link") {
  const FrontDiagram f = oracle::corpus_front("hopf");
  BoundOptions o = with_oracle();
  CHECK(sharpness_report(f, o).tb == -4);
  o.orientation = {false, true};
  const BoundReport r = sharpness_report(f, o);
  CHECK(r.tb == 0);
  CHECK(r.writhe == 2);
  REQUIRE(r.oracle.has_value());
  CHECK(r.tb <= r.oracle->min_delta);
}

TEST_CASE("tree reports for the trefoil") {
  BoundOptions o;
  o.coloring = ColoringChoice::Reversed;
  const std::vector<TreeReport> trees = tree_reports(oracle::corpus_front("trefoil_right"), o);
  REQUIRE(trees.size() == 3);
  for (const TreeReport& t : trees) {
    CHECK(t.unknot_writhe == -t.record.u);
    CHECK(t.spliced_tb == t.unknot_writhe - t.spliced_cusp_pairs);
    CHECK(t.spliced_tb <= -1 - t.b_splices);
  }
  CHECK(trees[2].record.tree == EdgeSet{1, 2});
  CHECK(trees[2].spliced_tb == -1);
  CHECK(trees[2].generators.khovanov[0] == Bigrading{0, 1});
}

TEST_CASE("convention tripwires raise ConventionError") {
  // The triangle is not its own dual, so the dual-tree check must refuse it.
  std::vector<TaitEdge> edges{{0, 1, +1, 0, 0}, {1, 2, +1, 1, 1}, {2, 0, +1, 2, 2}};
  const TaitGraph tri(3, edges, {{0, 5}, {1, 2}, {3, 4}});
  CHECK(error_kind([&] { dual_tree(tri, tri, {0, 1}); }) == ErrorKind::ConventionError);
}

TEST_CASE("corpus: verdicts agree with the oracle under both colorings") {
  for (const auto& entry : oracle::load_corpus()) {
    CAPTURE(entry.name);
    const BoundReport r = sharpness_report(entry.front, with_oracle());
    REQUIRE(r.oracle.has_value());
    CHECK(r.tb <= r.oracle->min_delta);
    if (r.verdict == Verdict::SharpCertified) CHECK(r.tb == r.oracle->min_delta);
    if (r.verdict == Verdict::NotSharpCertified) CHECK(r.tb < r.oracle->min_delta);
    CHECK(good_bad_census(entry.front, false) == good_bad_census(entry.front, true));
  }
}
