#include <doctest.h>

#include "coalg/graph_coalgebra.hpp"
#include "coalg/json_io.hpp"
#include "coalg/realization.hpp"

using namespace coalg;

namespace {

Digraph two_cycle() { return Digraph::make({"a", "b"}, {{"a", "b"}, {"b", "a"}}); }

}  // namespace

TEST_SUITE("json") {

TEST_CASE("dump is canonical") {
  json j;
  j["zeta"] = 1;
  j["alpha"] = 2;
  std::string text = dump_json(j);
  CHECK(text == "{\n  \"alpha\": 2,\n  \"zeta\": 1\n}\n");
  CHECK(dump_json(j) == text);
  CHECK(text.find("alpha") < text.find("zeta"));
}

TEST_CASE("field elements as coefficient arrays") {
  Field f4 = Field::make(2, 2);
  FieldElem t = f4.gen();
  json j = field_elem_to_json(t);
  CHECK(j == json::array({0, 1}));
  CHECK(field_elem_from_json(f4, j) == t);

  Field f5 = Field::make(5, 1);
  CHECK(field_elem_from_json(f5, json(3)) == f5.from_int(3));  // bare int, prime field
  CHECK(field_elem_from_json(f5, json::array({3})) == f5.from_int(3));
  CHECK(field_elem_from_json(f4, json(3)) == f4.one());  // bare int lands in the constant slot
  CHECK_THROWS_AS(field_elem_from_json(f4, json::array({1, 0, 1})), Error);
  CHECK_THROWS_AS(field_elem_from_json(f5, json("x")), Error);
}

TEST_CASE("digraph round trip") {
  Digraph g = two_cycle();
  json j = digraph_to_json(g);
  CHECK(j["vertices"] == json::array({"a", "b"}));
  CHECK(j["edges"].size() == 2);
  CHECK(digraph_from_json(j) == g);
  CHECK(dump_json(digraph_to_json(digraph_from_json(j))) == dump_json(j));
}

TEST_CASE("digraph parse failures") {
  CHECK_THROWS_AS(digraph_from_json(json{{"vertices", {"a"}}}), Error);  // missing edges
  CHECK_THROWS_AS(digraph_from_json(json::parse(R"({"vertices":["a"],"edges":[["a","z"]]})")),
                  Error);
  CHECK_THROWS_AS(digraph_from_json(json::parse(R"({"vertices":["a","a"],"edges":[]})")), Error);
  CHECK_THROWS_AS(digraph_from_json(json::parse(R"({"vertices":["a"],"edges":[["a"]]})")), Error);
  CHECK_THROWS_AS(digraph_from_json(json::parse(R"({"vertices":["a"],"edges":"no"})")), Error);
}

TEST_CASE("labeled system round trip") {
  BinarySystem s({"p", "q"}, {"red", "blue"});
  s.add_pair(0, 0, 1);
  s.add_pair(1, 1, 1);
  json j = system_to_json(s);
  CHECK(j["relations"]["red"] == json::array({json::array({"p", "q"})}));
  CHECK(system_from_json(j) == s);
  CHECK_THROWS_AS(system_from_json(json::parse(
                      R"({"vertices":["p"],"labels":["l"],"relations":{"hue":[]}})")),
                  Error);
}

TEST_CASE("simple graph round trip normalizes order") {
  SimpleGraph g = SimpleGraph::make({"x", "y", "z"}, {{"z", "x"}, {"x", "y"}});
  json j = simple_to_json(g);
  CHECK(simple_from_json(j) == g);
  for (const auto& e : j["edges"]) CHECK(e[0].get<std::string>() < e[1].get<std::string>());
}

TEST_CASE("coalgebra round trip over an extension field") {
  Field f = Field::make(2, 2);
  GraphCoalgebra gc = build_path_coalgebra(two_cycle(), f);
  json j = coalgebra_to_json(gc.coalgebra);
  CHECK(j["field"] == "2^2");
  CHECK(j["basis"].size() == 4);
  Coalgebra back = coalgebra_from_json(j);
  CHECK(back == gc.coalgebra);
  CHECK(dump_json(coalgebra_to_json(back)) == dump_json(j));
}

TEST_CASE("coalgebra parse failures") {
  json good = coalgebra_to_json(build_path_coalgebra(two_cycle(), Field::make(3, 1)).coalgebra);
  json bad = good;
  bad.erase("counit");
  CHECK_THROWS_AS(coalgebra_from_json(bad), Error);
  bad = good;
  bad["comult"]["a"] = json::array({json::array({"a", "nope", json::array({1})})});
  CHECK_THROWS_AS(coalgebra_from_json(bad), Error);
  bad = good;
  bad["basis"] = json::array({"a", "a", "x", "y"});
  CHECK_THROWS_AS(coalgebra_from_json(bad), Error);
  bad = good;
  bad["field"] = "six";
  CHECK_THROWS_AS(coalgebra_from_json(bad), Error);
}

TEST_CASE("group and representation round trips") {
  FiniteGroup g = FiniteGroup::close(3, {make_perm({1, 0, 2}), make_perm({1, 2, 0})});
  json jg = group_to_json(g);
  CHECK(jg["degree"] == 3);
  FiniteGroup g2 = group_from_json(jg);
  CHECK(g2.order() == 6);
  CHECK(g2.elements() == g.elements());

  PermRep rep = PermRep::make(2, {make_perm({1, 0})}, 2, {make_perm({1, 0})});
  json jr = permrep_to_json(rep);
  CHECK(jr["v_size"] == 2);
  PermRep rep2 = permrep_from_json(jr);
  CHECK(rep2.rho == rep.rho);
  CHECK(rep2.group.elements() == rep.group.elements());

  json broken = jr;
  broken["gen_images"] = json::array({json::array({0, 0})});
  CHECK_THROWS_AS(permrep_from_json(broken), Error);
}

TEST_CASE("structured triple round trip") {
  Field f = Field::make(3, 1);
  GraphCoalgebra gc = build_path_coalgebra(two_cycle(), f);
  StructuredAut a = structured_identity(gc);
  a.sigma = make_perm({1, 0});
  a.lambda[0] = f.from_int(2);
  a.mu[1] = f.from_int(2);
  json j = structured_to_json(gc, a);
  CHECK(j["sigma"] == json::array({1, 0}));
  CHECK(j["lambda"].contains("a->b"));
  CHECK(structured_from_json(gc, j) == a);

  json bad = j;
  bad["mu"]["a->b"] = json::array({0});
  CHECK_THROWS_AS(structured_from_json(gc, bad), Error);
  bad = j;
  bad["lambda"].erase("a->b");
  CHECK_THROWS_AS(structured_from_json(gc, bad), Error);
}

TEST_CASE("report serialization") {
  Report r;
  r.add("first", true, "fine");
  r.skip("second", "out of reach");
  json j = report_to_json(r);
  CHECK(j["ok"] == true);
  CHECK(j["checks"][0]["name"] == "first");
  CHECK(j["checks"][1]["status"] == "skipped");
  r.add("third", false);
  CHECK(report_to_json(r)["ok"] == false);
}

TEST_CASE("a stored coalgebra recovers its digraph") {
  Digraph g = two_cycle();
  GraphCoalgebra gc = build_path_coalgebra(g, Field::make(2, 1));
  CHECK(digraph_from_coalgebra(gc.coalgebra) == g);

  Coalgebra tampered = gc.coalgebra;
  tampered.comult[2].pop_back();  // edge loses one comultiplication term
  CHECK_THROWS_AS(digraph_from_coalgebra(tampered), Error);

  Coalgebra relabeled = gc.coalgebra;
  relabeled.basis[2] = "weird";
  CHECK_THROWS_AS(digraph_from_coalgebra(relabeled), Error);
}

}  // TEST_SUITE
