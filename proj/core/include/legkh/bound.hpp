#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "legkh/front.hpp"
#include "legkh/khovanov.hpp"
#include "legkh/spanning.hpp"
#include "legkh/tait.hpp"

namespace legkh {

enum class ColoringChoice { Canonical, Reversed, Both };

struct BoundOptions {
  bool with_oracle = false;
  // Both: results come from the canonical coloring and the reversed one is
  // recomputed and required to agree.
  ColoringChoice coloring = ColoringChoice::Canonical;
  Orientation orientation;
  int max_crossings = 14;
  int threads = 0;
};

struct CensusCount {
  int good = 0;
  int bad = 0;

  friend bool operator==(const CensusCount&, const CensusCount&) = default;
};

// v -> (good, bad)
using Census = std::map<int, CensusCount>;

enum class Verdict { SharpCertified, NotSharpCertified, Inconclusive };

std::string_view to_string(Verdict verdict) noexcept;

struct OracleReport {
  int min_delta = 0;
  bool bound_holds = true;  // tb <= min_delta
  bool sharp = false;       // tb == min_delta
  BigradedTable homology;
};

struct BoundReport {
  std::string word;
  int tb = 0;
  int writhe = 0;
  int crossings = 0;
  int cusp_pairs = 0;
  int components = 0;
  bool coloring_reversed = false;
  int tree_count = 0;
  int min_u = 0;
  // Least j - i over the spanning-tree generators; equals min_u + w - 1.
  int min_generator_delta = 0;
  bool bound_holds = true;
  Census census;
  Verdict verdict = Verdict::Inconclusive;
  std::optional<OracleReport> oracle;
};

struct TreeReport {
  SpanningTreeRecord record;
  GeneratorPair generators;
  int unknot_writhe = 0;   // w(U_T)
  std::string spliced_word;
  int spliced_tb = 0;      // tb(F_T), from the spliced event word
  int spliced_cusp_pairs = 0;
  int b_splices = 0;       // #d + #Dbar
};

// The Tait graph of the front under the chosen coloring (Both means
// canonical). Also checks every edge sign against the front's own region
// depths: an edge is positive exactly when its crossing is horizontal.
TaitGraph front_tait_graph(const FrontDiagram& front, bool reversed, const Orientation& orientation = {});

Census good_bad_census(const FrontDiagram& front, bool reversed = false, const Orientation& orientation = {});

// tb, the spanning-tree lower bound on j - i and, with the oracle, the least
// delta grading of Khovanov homology. Throws Error(ConventionError) if any of
// tb <= min_delta, min u >= 1 - C, or the grading identity fails.
BoundReport ng_bound(const FrontDiagram& front, const BoundOptions& options = {});

// ng_bound plus the good/bad census and its verdict. With the oracle, a
// certificate that disagrees with the homology throws Error(ConventionError).
BoundReport sharpness_report(const FrontDiagram& front, const BoundOptions& options = {});

// One entry per spanning tree, each spliced both as a link diagram and as a
// front. Throws Error(ConventionError) when the two splicings disagree or
// tb(F_T) > -1 - (#d + #Dbar).
std::vector<TreeReport> tree_reports(const FrontDiagram& front, const BoundOptions& options = {});

}  // namespace legkh
