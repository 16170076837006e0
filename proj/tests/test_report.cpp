#include <doctest.h>

#include "normargue/report.hpp"
#include "support.hpp"

using namespace normargue;
using normargue::testing::fixture;

TEST_CASE("abortion report") {
  auto r = run_pipeline(load_theory_file(fixture("abortion.naf")), {"O_{d,p} [d] K_p(ill)"});
  auto j = to_json(r);
  CHECK(j["schema"] == 1);
  CHECK(j["arguments"].size() == 10);
  REQUIRE(j["extensions"].size() == 1);
  CHECK(j["extensions"][0].size() == 6);
  CHECK(j["queries"][0]["skeptical"] == true);
  CHECK(j["truncated"] == false);
  CHECK(j["theory"]["premises"] == 6);
}

TEST_CASE("json export round trips to the same framework") {
  for (const char* name : {"abortion.naf", "doctor.naf", "knife.naf"}) {
    CAPTURE(name);
    auto r = run_pipeline(load_theory_file(fixture(name)));
    auto text = graph_to_json(r.arguments, r.framework).dump();
    CHECK(af_from_json(nlohmann::json::parse(text)) == r.framework);
  }
}

TEST_CASE("output is reproducible") {
  auto a = run_pipeline(load_theory_file(fixture("knife.naf")), {"P_c(K_c(customer) & handle)"});
  auto b = run_pipeline(load_theory_file(fixture("knife.naf")), {"P_c(K_c(customer) & handle)"});
  CHECK(to_json(a).dump() == to_json(b).dump());
  CHECK(to_text(a, false) == to_text(b, false));
  CHECK(to_dot(a) == to_dot(b));
}

TEST_CASE("text and dot rendering") {
  auto empty = run_pipeline(load_theory(""));
  CHECK(to_dot(empty) == "digraph arguments {\n  node [shape=box];\n}\n");
  CHECK(to_text(empty, false).find("stable extension 1: {}") != std::string::npos);

  auto cycle = run_pipeline(load_theory(
      "PREMISE axiom s: s\nRULE defeasible a: s |~ p\nRULE defeasible b: s |~ q\n"
      "RULE defeasible c: s |~ r\nCONTRARY: p ~ @b\nCONTRARY: q ~ @c\nCONTRARY: r ~ @a\n"),
                            {"p"});
  CHECK(cycle.extensions.empty());
  auto text = to_text(cycle, false);
  CHECK(text.find("no stable extension") != std::string::npos);
  CHECK(text.find("skeptical=false") != std::string::npos);
  CHECK(text.find("\033[") == std::string::npos);
  CHECK(to_text(cycle, true).find("\033[31mfalse") != std::string::npos);

  auto abortion = run_pipeline(load_theory_file(fixture("abortion.naf")));
  auto dot = to_dot(abortion);
  CHECK(dot.find("label=\"0: A1*\\n") != std::string::npos);
  CHECK(dot.find("style=solid, label=\"rebut") != std::string::npos);
  CHECK(dot.find("style=dashed, label=\"undermine A2\"") != std::string::npos);
  CHECK(dot.find("style=dotted, label=\"undercut C2\"") != std::string::npos);
}

TEST_CASE("grounded semantics") {
  auto r = run_pipeline(load_theory_file(fixture("abortion.naf")), {}, Semantics::Grounded);
  REQUIRE(r.extensions.size() == 1);
  CHECK(r.extensions[0] == grounded_extension(r.framework));
}
