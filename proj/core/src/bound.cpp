#include "legkh/bound.hpp"

#include <algorithm>
#include <future>
#include <limits>

#include "legkh/error.hpp"

namespace legkh {
namespace {

void tripwire(bool ok, const std::string& what) {
  if (!ok) throw Error(ErrorKind::ConventionError, what);
}

std::vector<int> multiset_of(const std::vector<SpanningTreeRecord>& records, bool want_u) {
  std::vector<int> out;
  for (const auto& r : records) out.push_back(want_u ? r.u : r.v);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<SpanningTreeRecord> all_records(const TaitGraph& g) {
  std::vector<SpanningTreeRecord> out;
  for_each_spanning_tree(g, [&](const EdgeSet& t) { out.push_back(classify_activities(g, t)); });
  return out;
}

Census census_of(const std::vector<SpanningTreeRecord>& records, int cusp_pairs) {
  Census census;
  for (const auto& rec : records) {
    switch (classify_against_front(rec.u, cusp_pairs)) {
      case TreeClass::Good: ++census[rec.v].good; break;
      case TreeClass::Bad: ++census[rec.v].bad; break;
      case TreeClass::Neither: break;
    }
  }
  return census;
}

}  // namespace

std::string_view to_string(Verdict verdict) noexcept {
  switch (verdict) {
    case Verdict::SharpCertified: return "sharp_certified";
    case Verdict::NotSharpCertified: return "not_sharp_certified";
    case Verdict::Inconclusive: return "inconclusive";
  }
  return "?";
}

TaitGraph front_tait_graph(const FrontDiagram& front, bool reversed, const Orientation& orientation) {
  const LinkDiagram d = desingularize(front, orientation);
  const auto [canonical, flipped] = checkerboard(d);
  TaitGraph g = tait_graph(d, reversed ? flipped : canonical);
  for (const TaitEdge& e : g.edges()) {
    const bool horizontal = front.region_odd(front.quadrant_regions(e.crossing)[1]) != reversed;
    tripwire(horizontal == (e.sign > 0), "crossing " + std::to_string(e.crossing + 1) + " is " +
                                             (horizontal ? "horizontal" : "vertical") + " but its Tait edge is " +
                                             (e.sign > 0 ? "positive" : "negative"));
  }
  return g;
}

Census good_bad_census(const FrontDiagram& front, bool reversed, const Orientation& orientation) {
  return census_of(all_records(front_tait_graph(front, reversed, orientation)), front.cusp_pairs());
}

BoundReport ng_bound(const FrontDiagram& front, const BoundOptions& options) {
  const LinkDiagram d = desingularize(front, options.orientation);
  std::future<BigradedTable> homology;
  if (options.with_oracle) {
    KhovanovOptions kh;
    kh.max_crossings = options.max_crossings;
    kh.threads = options.threads;
    homology = std::async(std::launch::async, [&d, kh] { return khovanov_homology(d, kh); });
  }

  BoundReport report;
  report.word = front.word();
  report.writhe = d.writhe();
  report.crossings = d.crossing_count();
  report.cusp_pairs = front.cusp_pairs();
  report.components = front.component_count();
  report.tb = report.writhe - report.cusp_pairs;
  report.coloring_reversed = options.coloring == ColoringChoice::Reversed;
  tripwire(report.tb == thurston_bennequin(front, options.orientation), "tb disagrees with the front's own count");

  const TaitGraph g = front_tait_graph(front, report.coloring_reversed, options.orientation);
  const auto records = all_records(g);
  if (options.coloring == ColoringChoice::Both) {
    const auto other = all_records(front_tait_graph(front, true, options.orientation));
    tripwire(multiset_of(records, true) == multiset_of(other, true), "u gradings change with the coloring");
    tripwire(multiset_of(records, false) == multiset_of(other, false), "v gradings change with the coloring");
  }

  report.tree_count = static_cast<int>(records.size());
  report.min_u = std::numeric_limits<int>::max();
  report.min_generator_delta = std::numeric_limits<int>::max();
  for (const auto& rec : records) {
    report.min_u = std::min(report.min_u, rec.u);
    for (const Bigrading& b : to_khovanov_bigrading(rec.u, rec.v, report.crossings, report.writhe).khovanov) {
      report.min_generator_delta = std::min(report.min_generator_delta, b.j - b.i);
    }
  }
  tripwire(report.min_generator_delta == report.min_u + report.writhe - 1,
           "least generator delta is not min u + w - 1");
  tripwire(report.min_u >= 1 - report.cusp_pairs, "a spanning tree has u < 1 - C");
  report.census = census_of(records, report.cusp_pairs);

  if (options.with_oracle) {
    OracleReport oracle;
    oracle.homology = homology.get();
    oracle.min_delta = min_delta(oracle.homology);
    oracle.bound_holds = report.tb <= oracle.min_delta;
    oracle.sharp = report.tb == oracle.min_delta;
    tripwire(oracle.bound_holds, "tb exceeds the least delta grading of Khovanov homology");
    report.oracle = std::move(oracle);
  }
  report.bound_holds = report.tb <= report.min_generator_delta && (!report.oracle || report.oracle->bound_holds);
  return report;
}

BoundReport sharpness_report(const FrontDiagram& front, const BoundOptions& options) {
  BoundReport report = ng_bound(front, options);
  if (options.coloring == ColoringChoice::Both) {
    tripwire(good_bad_census(front, true, options.orientation) == report.census,
             "good/bad census changes with the coloring");
  }
  bool any_good = false;
  bool certified = false;
  for (const auto& [v, count] : report.census) {
    any_good = any_good || count.good > 0;
    auto up = report.census.find(v + 2);
    if (count.good > (up == report.census.end() ? 0 : up->second.bad)) certified = true;
  }
  report.verdict = certified ? Verdict::SharpCertified : any_good ? Verdict::Inconclusive : Verdict::NotSharpCertified;
  if (report.oracle) {
    if (report.verdict == Verdict::SharpCertified) {
      tripwire(report.oracle->sharp, "census certifies sharpness but tb < min delta");
    }
    if (report.verdict == Verdict::NotSharpCertified) {
      tripwire(!report.oracle->sharp, "no good spanning tree but tb = min delta");
    }
  }
  return report;
}

std::vector<TreeReport> tree_reports(const FrontDiagram& front, const BoundOptions& options) {
  const bool reversed = options.coloring == ColoringChoice::Reversed;
  const LinkDiagram d = desingularize(front, options.orientation);
  const TaitGraph g = front_tait_graph(front, reversed, options.orientation);
  std::vector<TreeReport> out;
  for_each_spanning_tree(g, [&](const EdgeSet& tree) {
    TreeReport rep;
    rep.record = classify_activities(g, tree);
    rep.record.tree_class = classify_against_front(rep.record.u, front.cusp_pairs());
    rep.generators = to_khovanov_bigrading(rep.record.u, rep.record.v, d.crossing_count(), d.writhe());
    rep.unknot_writhe = splice_unknot(d, g, rep.record).writhe;
    const SplicedFront spliced = splice_front(front, g, rep.record);
    rep.spliced_word = spliced.front.word();
    rep.spliced_tb = spliced.tb;
    rep.spliced_cusp_pairs = spliced.cusp_pairs;
    rep.b_splices = rep.record.count(EdgeLabel::ExternalInactivePositive) +
                    rep.record.count(EdgeLabel::InternalInactiveNegative);
    using enum EdgeLabel;
    const int table_writhe = rep.record.count(ExternalActivePositive) + rep.record.count(InternalActiveNegative) -
                             rep.record.count(InternalActivePositive) - rep.record.count(ExternalActiveNegative);
    tripwire(rep.unknot_writhe == -rep.record.u && rep.unknot_writhe == table_writhe,
             "twisted unknot writhe is not -u");
    tripwire(spliced.cusp_pairs == front.cusp_pairs() + rep.b_splices, "B-splices do not add one cusp pair each");
    tripwire(spliced.tb == rep.unknot_writhe - spliced.cusp_pairs, "spliced front and twisted unknot disagree");
    tripwire(spliced.tb <= -1 - rep.b_splices, "tb(F_T) > -1 - (#d + #Dbar)");
    out.push_back(std::move(rep));
  });
  return out;
}

}  // namespace legkh
