#include <doctest.h>

#include "json.hpp"
#include "legkh/bound.hpp"
#include "legkh/json_io.hpp"
#include "oracles.hpp"

using namespace legkh;
using nlohmann::json;

TEST_CASE("every document has schema 1 and a kind") {
  const FrontDiagram f = oracle::corpus_front("trefoil_right");
  BoundOptions o;
  o.with_oracle = true;
  const BoundReport r = sharpness_report(f, o);
  const LinkDiagram d = desingularize(f);

  const std::vector<std::string> docs{
      to_json(front_tait_graph(f, false)), to_json(r.oracle->homology), to_json(r),
      to_json(tree_reports(f)), to_json(kauffman_jones(d))};
  for (const std::string& text : docs) {
    const json j = json::parse(text);
    CHECK(j.at("schema") == 1);
    CHECK(j.at("kind").is_string());
  }
}

TEST_CASE("bound report fields") {
  BoundOptions o;
  o.with_oracle = true;
  const json j = json::parse(to_json(sharpness_report(oracle::corpus_front("trefoil_right"), o)));
  CHECK(j.at("tb") == 1);
  CHECK(j.at("verdict") == "sharp_certified");
  CHECK(j.at("bound_holds") == true);
  CHECK(j.at("oracle").at("min_delta") == 1);
  CHECK(j.dump().find("census") != std::string::npos);
}

TEST_CASE("homology table round trip") {
  const BigradedTable t = khovanov_homology(desingularize(oracle::corpus_front("trefoil_right")));
  const json j = json::parse(to_json(t));
  BigradedTable back;
  for (const json& e : j.at("groups")) {
    HomologyGroup g;
    g.free_rank = e.at("free_rank").get<int>();
    g.torsion = e.at("torsion").get<std::vector<std::int64_t>>();
    back.set(e.at("i").get<int>(), e.at("j").get<int>(), g);
  }
  CHECK(back == t);
}

TEST_CASE("text reports") {
  const FrontDiagram f = oracle::corpus_front("trefoil_right");
  CHECK(to_text(sharpness_report(f)).find("sharp_certified") != std::string::npos);
  BoundOptions o;
  o.coloring = ColoringChoice::Reversed;
  CHECK(to_text(tree_reports(f, o)).find("{e2,e3}  e1:l e2:D e3:D  u=-1 v=2") != std::string::npos);
}
