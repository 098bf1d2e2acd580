// legkh: Thurston-Bennequin bounds and spanning-tree certificates for
// Legendrian fronts, with a Khovanov homology oracle.

#include <CLI11.hpp>

#include <algorithm>
#include <atomic>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <mutex>
#include <sstream>
#include <thread>

#include "legkh/bound.hpp"
#include "legkh/error.hpp"
#include "legkh/front.hpp"
#include "legkh/json_io.hpp"
#include "legkh/khovanov.hpp"

namespace fs = std::filesystem;
using namespace legkh;

namespace {

constexpr int kExitUsage = 64;
constexpr int kExitInvalid = 65;
constexpr int kExitConvention = 2;

struct RunConfig {
  std::string input;
  bool oracle = false;
  std::string coloring = "canonical";
  std::string orient;
  bool json = false;
  int max_crossings = 14;
  std::string out;
  bool pd = false;
  bool graph = false;
  int jobs = 0;
};

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string strip_comments(std::istream& in) {
  std::string text, line;
  while (std::getline(in, line)) {
    text += line.substr(0, line.find('#'));
    text += '\n';
  }
  return text;
}

// A path to an existing file, or the word itself.
std::string read_input(const std::string& arg) {
  std::error_code ec;
  if (!fs::is_regular_file(arg, ec)) return arg;
  std::ifstream in(arg);
  if (!in) throw UsageError("cannot read " + arg);
  return strip_comments(in);
}

ColoringChoice coloring_choice(const std::string& name) {
  if (name == "canonical") return ColoringChoice::Canonical;
  if (name == "reversed") return ColoringChoice::Reversed;
  return ColoringChoice::Both;
}

// "+-+" flips the second component; empty means canonical.
Orientation parse_orientation(const std::string& text, const FrontDiagram& front) {
  if (text.empty()) return {};
  if (static_cast<int>(text.size()) != front.component_count() ||
      text.find_first_not_of("+-") != std::string::npos) {
    throw Error(ErrorKind::MalformedToken, "--orient needs one of + or - per component (" +
                                               std::to_string(front.component_count()) + " here)");
  }
  Orientation o;
  for (char c : text) o.push_back(c == '-');
  return o;
}

BoundOptions bound_options(const RunConfig& cfg, const FrontDiagram& front) {
  BoundOptions opt;
  opt.with_oracle = cfg.oracle;
  opt.coloring = coloring_choice(cfg.coloring);
  opt.orientation = parse_orientation(cfg.orient, front);
  opt.max_crossings = cfg.max_crossings;
  return opt;
}

LinkDiagram diagram_for(const RunConfig& cfg) {
  const std::string text = read_input(cfg.input);
  if (cfg.pd) return parse_pd(text);
  const FrontDiagram front = parse_front(text);
  return desingularize(front, parse_orientation(cfg.orient, front));
}

void emit(const RunConfig& cfg, const std::string& body) {
  if (cfg.out.empty()) {
    std::cout << body;
    return;
  }
  const fs::path target(cfg.out);
  const fs::path tmp = target.string() + ".tmp";
  {
    std::ofstream f(tmp);
    if (!f) throw UsageError("cannot write " + tmp.string());
    f << body;
  }
  fs::rename(tmp, target);
}

int run_analyze(const RunConfig& cfg, bool verdict_only) {
  const FrontDiagram front = parse_front(read_input(cfg.input));
  const BoundReport report = sharpness_report(front, bound_options(cfg, front));
  if (verdict_only && !cfg.json) {
    emit(cfg, std::string(to_string(report.verdict)) + "\n");
  } else {
    emit(cfg, cfg.json ? to_json(report) : to_text(report));
  }
  return 0;
}

int run_trees(const RunConfig& cfg) {
  const FrontDiagram front = parse_front(read_input(cfg.input));
  const BoundOptions opt = bound_options(cfg, front);
  if (cfg.graph) {
    const TaitGraph g = front_tait_graph(front, opt.coloring == ColoringChoice::Reversed, opt.orientation);
    emit(cfg, to_json(g));
    return 0;
  }
  const auto trees = tree_reports(front, opt);
  emit(cfg, cfg.json ? to_json(trees) : to_text(trees));
  return 0;
}

int run_homology(const RunConfig& cfg) {
  KhovanovOptions opt;
  opt.max_crossings = cfg.max_crossings;
  const BigradedTable table = khovanov_homology(diagram_for(cfg), opt);
  emit(cfg, cfg.json ? to_json(table) : to_text(table));
  return 0;
}

int run_jones(const RunConfig& cfg) {
  const LaurentPoly jones = kauffman_jones(diagram_for(cfg), cfg.max_crossings);
  emit(cfg, cfg.json ? to_json(jones) : jones.to_string() + "\n");
  return 0;
}

struct CorpusRow {
  std::string name;
  std::optional<BoundReport> report;
  std::string error;
  bool convention = false;
};

int run_corpus(const RunConfig& cfg) {
  std::error_code ec;
  if (!fs::is_directory(cfg.input, ec)) throw UsageError(cfg.input + " is not a directory");
  std::vector<fs::path> files;
  for (const auto& entry : fs::directory_iterator(cfg.input)) {
    if (entry.is_regular_file() && entry.path().extension() == ".front") files.push_back(entry.path());
  }
  std::sort(files.begin(), files.end());
  if (!cfg.out.empty()) fs::create_directories(cfg.out);

  std::vector<CorpusRow> rows(files.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t k; (k = next++) < files.size();) {
      CorpusRow& row = rows[k];
      row.name = files[k].stem().string();
      try {
        std::ifstream in(files[k]);
        const FrontDiagram front = parse_front(strip_comments(in));
        BoundOptions opt = bound_options(cfg, front);
        opt.threads = 1;
        row.report = sharpness_report(front, opt);
        if (!cfg.out.empty()) {
          const fs::path target = fs::path(cfg.out) / (row.name + (cfg.json ? ".json" : ".txt"));
          const fs::path tmp = target.string() + ".tmp";
          std::ofstream(tmp) << (cfg.json ? to_json(*row.report) : to_text(*row.report));
          fs::rename(tmp, target);
        }
      } catch (const Error& e) {
        row.error = e.what();
        row.convention = e.kind() == ErrorKind::ConventionError;
      }
    }
  };
  int threads = cfg.jobs > 0 ? cfg.jobs : static_cast<int>(std::max(1U, std::thread::hardware_concurrency()));
  std::vector<std::thread> pool;
  for (int t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();

  int violations = 0;
  int failures = 0;
  std::ostringstream out;
  out << std::left;
  out.width(24);
  out << "front" << " crossings    tb  min_delta  verdict\n";
  for (const auto& row : rows) {
    out.width(24);
    out << row.name << ' ';
    if (!row.report) {
      out << (row.convention ? "VIOLATION " : "ERROR ") << row.error << '\n';
      (row.convention ? violations : failures) += 1;
      continue;
    }
    const BoundReport& r = *row.report;
    out << std::right;
    out.width(9);
    out << r.crossings << ' ';
    out.width(5);
    out << r.tb << ' ';
    out.width(10);
    out << (r.oracle ? std::to_string(r.oracle->min_delta) : "-") << "  " << std::left << to_string(r.verdict) << '\n';
  }
  out << rows.size() << " fronts, " << violations << " violations, " << failures << " errors\n";
  std::cout << out.str();
  if (violations > 0) return kExitConvention;
  return failures > 0 ? kExitInvalid : 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Thurston-Bennequin bounds from Khovanov homology for Legendrian fronts"};
  app.require_subcommand(1);
  RunConfig cfg;

  auto add_common = [&](CLI::App* sub, bool front_only) {
    sub->add_option("input", cfg.input, "front word, or a file holding one ('#' starts a comment)")->required();
    sub->add_flag("--json,!--text", cfg.json, "JSON output (default: text)");
    sub->add_option("--max-crossings", cfg.max_crossings, "crossing bound for the Khovanov oracle")
        ->check(CLI::NonNegativeNumber);
    sub->add_option("--out", cfg.out, "write the report here instead of stdout");
    sub->add_option("--orient", cfg.orient, "per-component orientation, e.g. +- flips the second component");
    if (front_only) {
      sub->add_flag("--oracle", cfg.oracle, "also compute Khovanov homology and check the bound against it");
      sub->add_option("--coloring", cfg.coloring, "checkerboard coloring")
          ->check(CLI::IsMember({"canonical", "reversed", "both"}));
    } else {
      sub->add_flag("--pd", cfg.pd, "input is a planar-diagram code instead of a front word");
    }
  };

  auto* analyze = app.add_subcommand("analyze", "tb, census, verdict and (with --oracle) the homology check");
  auto* trees = app.add_subcommand("trees", "spanning trees with activity labels and gradings");
  auto* homology = app.add_subcommand("homology", "Khovanov homology over Z");
  auto* jones = app.add_subcommand("jones", "unreduced Jones polynomial");
  auto* certify = app.add_subcommand("certify", "sharpness verdict only");
  auto* corpus = app.add_subcommand("corpus", "run analyze over every *.front file in a directory");
  add_common(analyze, true);
  add_common(trees, true);
  trees->add_flag("--graph", cfg.graph, "print the Tait graph as JSON instead");
  add_common(homology, false);
  add_common(jones, false);
  add_common(certify, true);
  corpus->add_option("input", cfg.input, "directory of .front files")->required();
  corpus->add_flag("--oracle", cfg.oracle, "also compute Khovanov homology");
  corpus->add_flag("--json,!--text", cfg.json, "per-front reports as JSON");
  corpus->add_option("--coloring", cfg.coloring)->check(CLI::IsMember({"canonical", "reversed", "both"}));
  corpus->add_option("--max-crossings", cfg.max_crossings)->check(CLI::NonNegativeNumber);
  corpus->add_option("--out", cfg.out, "directory for per-front reports");
  corpus->add_option("-j,--jobs", cfg.jobs, "worker threads (default: all cores)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*analyze) return run_analyze(cfg, false);
    if (*certify) return run_analyze(cfg, true);
    if (*trees) return run_trees(cfg);
    if (*homology) return run_homology(cfg);
    if (*jones) return run_jones(cfg);
    if (*corpus) return run_corpus(cfg);
  } catch (const UsageError& e) {
    std::cerr << "legkh: " << e.what() << '\n';
    return kExitUsage;
  } catch (const Error& e) {
    std::cerr << "legkh: " << e.what() << '\n';
    return e.kind() == ErrorKind::ConventionError ? kExitConvention : kExitInvalid;
  } catch (const fs::filesystem_error& e) {
    std::cerr << "legkh: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
