#include "legkh/json_io.hpp"

#include "json.hpp"

#include <sstream>

namespace legkh {
namespace {

using Json = nlohmann::ordered_json;

Json document(const char* kind) {
  Json j;
  j["schema"] = 1;
  j["kind"] = kind;
  return j;
}

Json table_json(const BigradedTable& table) {
  Json groups = Json::array();
  for (const auto& [ij, g] : table.entries) {
    groups.push_back({{"i", ij.first}, {"j", ij.second}, {"free_rank", g.free_rank}, {"torsion", g.torsion}});
  }
  return groups;
}

Json poly_json(const LaurentPoly& p) {
  Json terms = Json::array();
  for (const auto& [e, c] : p.terms()) terms.push_back({{"exponent", e}, {"coefficient", c}});
  return terms;
}

Json tree_json(const TreeReport& t) {
  Json labels = Json::array();
  for (EdgeLabel l : t.record.labels) labels.push_back(std::string(symbol(l)));
  Json gens = Json::array();
  for (const Bigrading& b : t.generators.khovanov) gens.push_back({{"i", b.i}, {"j", b.j}});
  return {{"tree", t.record.tree},
          {"labels", labels},
          {"u", t.record.u},
          {"v", t.record.v},
          {"class", std::string(to_string(t.record.tree_class))},
          {"generators", gens},
          {"unknot_writhe", t.unknot_writhe},
          {"spliced_front", t.spliced_word},
          {"spliced_tb", t.spliced_tb},
          {"b_splices", t.b_splices}};
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace

std::string to_json(const TaitGraph& graph) {
  Json j = document("tait_graph");
  j["vertices"] = graph.vertex_count();
  Json edges = Json::array();
  for (const TaitEdge& e : graph.edges()) {
    edges.push_back({{"endpoints", {e.tail, e.head}}, {"sign", e.sign}, {"order", e.order}, {"crossing", e.crossing}});
  }
  j["edges"] = edges;
  Json rotation = Json::array();
  for (int v = 0; v < graph.vertex_count(); ++v) rotation.push_back(graph.rotation(v));
  j["rotation"] = rotation;
  return dump(j);
}

std::string to_json(const BigradedTable& table) {
  Json j = document("khovanov_homology");
  j["groups"] = table_json(table);
  return dump(j);
}

std::string to_json(const LaurentPoly& poly) {
  Json j = document("jones");
  j["text"] = poly.to_string();
  j["terms"] = poly_json(poly);
  return dump(j);
}

std::string to_json(const BoundReport& r) {
  Json j = document("bound_report");
  j["front"] = r.word;
  j["tb"] = r.tb;
  j["writhe"] = r.writhe;
  j["crossings"] = r.crossings;
  j["C"] = r.cusp_pairs;
  j["components"] = r.components;
  j["coloring"] = r.coloring_reversed ? "reversed" : "canonical";
  j["trees"] = r.tree_count;
  j["min_u"] = r.min_u;
  j["min_generator_delta"] = r.min_generator_delta;
  j["bound_holds"] = r.bound_holds;
  Json census = Json::array();
  for (const auto& [v, c] : r.census) census.push_back({{"v", v}, {"good", c.good}, {"bad", c.bad}});
  j["census"] = census;
  j["verdict"] = std::string(to_string(r.verdict));
  if (r.oracle) {
    j["oracle"] = {{"min_delta", r.oracle->min_delta},
                   {"bound_holds", r.oracle->bound_holds},
                   {"sharp", r.oracle->sharp},
                   {"homology", table_json(r.oracle->homology)}};
  } else {
    j["oracle"] = nullptr;
  }
  return dump(j);
}

std::string to_json(const std::vector<TreeReport>& trees) {
  Json j = document("spanning_trees");
  Json list = Json::array();
  for (const auto& t : trees) list.push_back(tree_json(t));
  j["trees"] = list;
  return dump(j);
}

std::string to_text(const BigradedTable& table) {
  std::ostringstream out;
  out << "   i    j  group\n";
  for (const auto& [ij, g] : table.entries) {
    out.width(4);
    out << ij.first << ' ';
    out.width(4);
    out << ij.second << "  ";
    std::string group;
    if (g.free_rank > 0) group = g.free_rank == 1 ? "Z" : "Z^" + std::to_string(g.free_rank);
    for (auto t : g.torsion) group += (group.empty() ? "" : " + ") + ("Z/" + std::to_string(t));
    out << group << '\n';
  }
  return out.str();
}

std::string to_text(const BoundReport& r) {
  std::ostringstream out;
  out << "front        " << r.word << '\n'
      << "crossings    " << r.crossings << "   components " << r.components << "   C " << r.cusp_pairs << '\n'
      << "writhe       " << r.writhe << '\n'
      << "tb           " << r.tb << '\n'
      << "coloring     " << (r.coloring_reversed ? "reversed" : "canonical") << '\n'
      << "trees        " << r.tree_count << "   min u " << r.min_u << "   min j-i over generators "
      << r.min_generator_delta << '\n';
  out << "census       ";
  if (r.census.empty()) out << "(no good or bad trees)";
  const char* sep = "";
  for (const auto& [v, c] : r.census) {
    out << sep << "v=" << v << ": " << c.good << " good, " << c.bad << " bad";
    sep = "   ";
  }
  out << '\n' << "verdict      " << to_string(r.verdict) << '\n';
  if (r.oracle) {
    out << "min delta    " << r.oracle->min_delta << "   (" << (r.oracle->sharp ? "tb = min delta" : "tb < min delta")
        << ")\n\n"
        << to_text(r.oracle->homology);
  }
  return out.str();
}

std::string to_text(const std::vector<TreeReport>& trees) {
  std::ostringstream out;
  for (const auto& t : trees) {
    out << '{';
    for (std::size_t k = 0; k < t.record.tree.size(); ++k) out << (k ? "," : "") << 'e' << t.record.tree[k] + 1;
    out << "}  ";
    for (std::size_t e = 0; e < t.record.labels.size(); ++e) {
      out << 'e' << e + 1 << ':' << symbol(t.record.labels[e]) << ' ';
    }
    out << " u=" << t.record.u << " v=" << t.record.v << ' ' << to_string(t.record.tree_class) << "  (i,j)=("
        << t.generators.khovanov[0].i << ',' << t.generators.khovanov[0].j << "),(" << t.generators.khovanov[1].i
        << ',' << t.generators.khovanov[1].j << ")  tb(F_T)=" << t.spliced_tb << '\n';
  }
  return out.str();
}

}  // namespace legkh
