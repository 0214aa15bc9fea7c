// End-to-end tests that drive the coalgraph binary through a shell, the way
// a user would. CLI_BIN is injected by the build.

#include <sys/wait.h>
#include <unistd.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

namespace fs = std::filesystem;

namespace {

int failures = 0;
fs::path work;

void expect(bool cond, const std::string& what) {
  if (cond) {
    std::cout << "ok: " << what << "\n";
  } else {
    ++failures;
    std::cout << "FAIL: " << what << "\n";
  }
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void put(const fs::path& p, const std::string& content) {
  std::ofstream out(p, std::ios::binary);
  out << content;
}

struct RunResult {
  int code = -1;
  std::string out;
  std::string err;

  bool out_has(const std::string& needle) const { return out.find(needle) != std::string::npos; }
  bool err_has(const std::string& needle) const { return err.find(needle) != std::string::npos; }
};

RunResult run(const std::string& args) {
  static int counter = 0;
  fs::path out = work / ("stdout." + std::to_string(counter));
  fs::path err = work / ("stderr." + std::to_string(counter));
  ++counter;
  std::string cmd = std::string(CLI_BIN) + " " + args + " > " + out.string() + " 2> " +
                    err.string();
  int status = std::system(cmd.c_str());
  RunResult r;
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  r.out = slurp(out);
  r.err = slurp(err);
  return r;
}

std::string path_of(const char* name) { return (work / name).string(); }

void write_fixtures() {
  put(work / "edge.json", R"({"vertices":["v1","v2"],"edges":[["v1","v2"]]})");
  put(work / "twocycle.json", R"({"vertices":["a","b"],"edges":[["a","b"],["b","a"]]})");
  put(work / "triangle.json",
      R"({"vertices":["a","b","c"],"edges":[["a","b"],["b","c"],["c","a"]]})");
  put(work / "badvertex.json", R"({"vertices":["a"],"edges":[["a","z"]]})");
  put(work / "broken_axioms.json",
      R"({"basis":["g"],"comult":{"g":[["g","g",[1]]]},"counit":{"g":[0]},"field":"2^1"})");
  put(work / "swaprep.json",
      R"({"group":{"degree":2,"generators":[[1,0]]},"v_size":2,"gen_images":[[1,0]]})");
  put(work / "illrep.json",
      R"({"group":{"degree":2,"generators":[[1,0]]},"v_size":3,"gen_images":[[1,2,0]]})");
  put(work / "s3group.json", R"({"degree":3,"generators":[[1,0,2],[1,2,0]]})");
  put(work / "z2group.json", R"({"degree":2,"generators":[[1,0]]})");
}

void test_build() {
  RunResult r = run("coalg build " + path_of("edge.json") + " --field 2^1 --out " +
                    path_of("built.json"));
  expect(r.code == 0, "build exits 0");
  expect(r.err_has("dim 3 = 2 vertices + 1 edges"), "build reports the dimension split");
  expect(fs::exists(work / "built.json"), "build writes the output file");

  run("coalg build " + path_of("edge.json") + " --field 2^1 --out " + path_of("built2.json"));
  expect(slurp(work / "built.json") == slurp(work / "built2.json"),
         "two builds of one input are byte-identical");
  expect(!slurp(work / "built.json").empty(), "built file is nonempty");

  RunResult text = run("coalg build " + path_of("edge.json") + " --field 3^1 --format text");
  expect(text.code == 0, "text build exits 0");
  expect(text.out_has("v1->v2: eps=0 delta=v1(x)v1->v2 + v1->v2(x)v2"),
         "text build prints the edge comultiplication");

  RunResult dot = run("coalg build " + path_of("edge.json") + " --field 2^1 --format dot");
  expect(dot.out_has("digraph"), "dot build emits dot syntax");

  expect(run("coalg build " + path_of("badvertex.json") + " --field 2^1").code == 2,
         "unknown vertex exits 2");
  expect(run("coalg build " + path_of("edge.json")).code == 2, "missing --field exits 2");
  expect(run("coalg build " + path_of("edge.json") + " --field 4^1").code == 2,
         "composite characteristic exits 2");
}

void test_verify() {
  RunResult good = run("coalg verify " + path_of("built.json"));
  expect(good.code == 0, "verify accepts a built coalgebra");
  expect(good.out_has("\"ok\": true"), "verify reports ok");

  RunResult bad = run("coalg verify " + path_of("broken_axioms.json"));
  expect(bad.code == 4, "broken counit exits 4");
  expect(bad.out_has("\"counit\": false"), "verify names the broken axiom");
  expect(bad.out_has("\"coassoc\": true"), "verify keeps the intact axiom");
}

void test_grouplikes() {
  RunResult r = run("coalg grouplikes " + path_of("built.json"));
  expect(r.code == 0, "grouplikes exits 0");
  expect(r.out_has("\"count\": 2"), "one grouplike per vertex");

  RunResult text = run("coalg grouplikes " + path_of("edge.json") + " --field 2^1 --format text");
  expect(text.out_has("2 grouplikes"), "text grouplikes prints the count");

  expect(run("coalg grouplikes " + path_of("built.json") + " --cap-grouplike-enum 4").code == 3,
         "grouplike scan over cap exits 3");
  expect(run("coalg grouplikes " + path_of("built.json") + " --field 3^1").code == 2,
         "conflicting --field on a coalgebra file exits 2");
}

void test_coalg_aut() {
  RunResult r = run("coalg aut " + path_of("edge.json") + " --field 2^1");
  expect(r.code == 0, "aut both-mode exits 0");
  expect(r.out_has("\"count\": 2"), "structured count for the single edge over GF(2)");
  expect(r.out_has("\"brute_count\": 2"), "brute count matches");
  expect(r.out_has("\"agree\": true"), "both oracles agree");

  RunResult tri = run("coalg aut " + path_of("edge.json") + " --field 3^1 --mode structured");
  expect(tri.code == 0, "structured mode exits 0");
  expect(tri.out_has("\"count\": 6"), "six structured automorphisms over GF(3)");
  expect(tri.out_has("\"triples\""), "small groups come with explicit triples");

  RunResult text = run("coalg aut " + path_of("twocycle.json") + " --field 2^1 --format text");
  expect(text.code == 0, "text aut exits 0");
  expect(text.out_has("total: 8"), "two-cycle over GF(2) has eight automorphisms");
  expect(text.out_has("sets agree"), "text aut confirms oracle agreement");

  expect(run("coalg aut " + path_of("twocycle.json") + " --field 3^1 --mode brute").code == 3,
         "brute scan over cap exits 3");
}

void test_graph_aut() {
  RunResult r = run("graph aut " + path_of("triangle.json"));
  expect(r.code == 0, "graph aut exits 0");
  expect(r.out_has("\"count\": 3"), "directed triangle has three rotations");

  RunResult text = run("graph aut " + path_of("triangle.json") + " --format text");
  expect(text.out_has("3 automorphisms"), "text graph aut prints the count");
  expect(text.out_has("(0 1 2)"), "text graph aut prints cycles");

  RunResult undirected = run("graph aut " + path_of("edge.json") + " --undirected");
  expect(undirected.out_has("\"count\": 2"), "undirected edge gains the swap");

  RunResult dot = run("graph aut " + path_of("triangle.json") + " --format dot");
  expect(dot.out_has("digraph"), "graph aut dot output");
}

void test_realize() {
  std::string bundle = path_of("bundle");
  RunResult r = run("realize " + path_of("swaprep.json") + " --field 2^1 --out " + bundle);
  expect(r.code == 0, "realize exits 0");
  expect(r.out_has("\"ok\": true"), "realization report is clean");
  expect(r.err_has("some checks were skipped"), "skipped scans are surfaced on stderr");
  for (const char* name :
       {"system.json", "simple.json", "simple.dot", "coalgebra.json", "report.json"})
    expect(fs::exists(fs::path(bundle) / name), std::string("bundle contains ") + name);
  expect(slurp(fs::path(bundle) / "report.json").find("\"status\": \"fail\"") ==
             std::string::npos,
         "no failed check in the bundle report");
  expect(slurp(fs::path(bundle) / "simple.json").find("\"provenance\"") != std::string::npos,
         "simple.json carries gadget provenance");

  std::string bundle2 = path_of("bundle2");
  run("realize " + path_of("swaprep.json") + " --field 2^1 --out " + bundle2);
  for (const char* name : {"system.json", "simple.json", "coalgebra.json", "report.json"})
    expect(slurp(fs::path(bundle) / name) == slurp(fs::path(bundle2) / name),
           std::string("rerun reproduces ") + name);

  expect(run("realize " + path_of("illrep.json") + " --field 2^1 --out " + path_of("nope"))
                 .code == 2,
         "ill-defined action exits 2");
  expect(run("realize " + path_of("swaprep.json") + " --out " + path_of("nope2")).code == 2,
         "realize without --field exits 2");
}

void test_group_class() {
  RunResult s3 = run("group class " + path_of("s3group.json") + " --p 2");
  expect(s3.code == 0, "class query exits 0");
  expect(s3.out_has("\"in_class\": true"), "the symmetric group on three points is admissible");
  expect(s3.out_has("\"witness\": null"), "no witness on a member");

  RunResult z2 = run("group class " + path_of("z2group.json") + " --p 2");
  expect(z2.code == 0, "class query exits 0 on a non-member too");
  expect(z2.out_has("\"in_class\": false"), "the two-element group is rejected over GF(2)");
  expect(z2.out_has("\"order\": 2"), "witness subgroup order is reported");

  RunResult text = run("group class " + path_of("z2group.json") + " --p 2 --format text");
  expect(text.out_has("NOT-IN (witness: normal subgroup of order 2, exponent 2)"),
         "text verdict explains the witness");
  RunResult text_in = run("group class " + path_of("s3group.json") + " --p 2 --format text");
  expect(text_in.out_has("IN"), "text verdict for a member");

  expect(run("group class " + path_of("s3group.json")).code == 2, "missing --p exits 2");
}

void test_sequence_check() {
  RunResult r = run("sequence check " + path_of("twocycle.json") + " --field 2^1");
  expect(r.code == 0, "sequence check exits 0");
  expect(r.out_has("\"ok\": true"), "sequence report is clean");
  expect(!r.err_has("skipped"), "small instance runs every check");

  RunResult skipped = run("sequence check " + path_of("triangle.json") + " --field 3^1");
  expect(skipped.code == 0, "out-of-reach brute oracle still exits 0");
  expect(skipped.err_has("some checks were skipped"), "the skip is surfaced on stderr");

  RunResult text =
      run("sequence check " + path_of("twocycle.json") + " --field 2^1 --format text");
  expect(text.out_has("kernel-size: PASS"), "text report lists named checks");
}

void test_cli_surface() {
  expect(run("--help").code == 0, "--help exits 0");
  expect(run("coalg --help").code == 0, "subcommand help exits 0");
  expect(run("bogus").code == 2, "unknown command exits 2");
  expect(run("").code == 2, "missing subcommand exits 2");
  expect(run("coalg verify " + path_of("missing.json")).code == 2, "missing input file exits 2");
  put(work / "notjson.json", "not json at all");
  expect(run("coalg verify " + path_of("notjson.json")).code == 2, "invalid JSON exits 2");
}

}  // namespace

int main() {
  work = fs::temp_directory_path() / ("coalgraph-cli-" + std::to_string(getpid()));
  fs::create_directories(work);
  write_fixtures();

  test_build();
  test_verify();
  test_grouplikes();
  test_coalg_aut();
  test_graph_aut();
  test_realize();
  test_group_class();
  test_sequence_check();
  test_cli_surface();

  fs::remove_all(work);
  if (failures) {
    std::cout << failures << " cli checks failed\n";
    return 1;
  }
  std::cout << "all cli checks passed\n";
  return 0;
}
