#include <doctest.h>

#include <sstream>

#include <json.hpp>

#include "thompson/cli.hpp"

namespace {

struct Result {
  int status;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int status = thompson::cli::run(args, out, err);
  return {status, out.str(), err.str()};
}

bool has(const std::string& text, const std::string& piece) { return text.find(piece) != std::string::npos; }

}  // namespace

TEST_CASE("element verbs") {
  Result r = run({"element", "mul", "x0", "x0^-1"});
  CHECK(r.status == 0);
  CHECK(has(r.out, "word identity"));
  CHECK(has(r.out, "source 0"));
  CHECK(run({"element", "word", "x0^-1 x1 x0"}).out == "x2\n");
  CHECK(run({"element", "inv", "x0"}).out == "source 10100\ntarget 11000\nleaves 3\nword x0^-1\n");
  CHECK(has(run({"element", "reduce", R"({"source":"1100100","target":"1010100"})"}).out, "leaves 3"));
  CHECK(has(run({"element", "parse", R"({"source":"1100100","target":"1010100"})"}).out, "leaves 4"));
  Result j = run({"--format", "json", "element", "parse", "x0"});
  auto doc = nlohmann::json::parse(j.out);
  CHECK(doc["schema_version"] == 1);
  CHECK(doc["source"] == "11000");
  CHECK(doc["word"] == "x0");
  CHECK(has(run({"--format", "svg", "element", "reduce", "x1"}).out, "<svg"));
}

TEST_CASE("errors and exit codes") {
  Result bad = run({"element", "reduce", "y1"});
  CHECK(bad.status == 1);
  CHECK(has(bad.err, "parse error"));
  Result index = run({"element", "reduce", R"({"source":"100","target":"0"})"});
  CHECK(index.status == 1);
  CHECK(has(index.err, "invalid diagram"));
  Result bound = run({"bracket", "x0 x1 x2 x3 x4 x5 x6 x7 x8 x9 x10 x11"});
  CHECK(bound.status == 1);
  CHECK(has(bound.err, "crossing bound exceeded"));
  CHECK(run({"frobnicate"}).status == 2);
  CHECK(run({}).status == 2);
  CHECK(run({"element", "explode", "x0"}).status == 2);
  CHECK(run({"--format", "svg", "bracket", "x0"}).status == 2);
  CHECK(run({"--format", "pd", "element", "reduce", "x0"}).status == 2);
  CHECK(run({"--format", "yaml", "element", "reduce", "x0"}).status == 2);
  CHECK(run({"link", "x0", "--route", "sideways"}).status == 2);
  CHECK(run({"element", "inv", "x0", "x1"}).status == 2);
  CHECK(run({"--help"}).status == 0);
}

TEST_CASE("link and bracket verbs") {
  Result pd = run({"link", "x0", "--route", "tait"});
  CHECK(pd.status == 0);
  CHECK(has(pd.out, "X("));
  CHECK(has(pd.out, "O 0"));
  CHECK(run({"link", "x0", "--route", "tait", "--simplify"}).out == "O 1\n");
  CHECK(run({"bracket", "x0"}).out == "1*A^0\n");
  auto doc = nlohmann::json::parse(run({"--format", "json", "link", "x1", "--simplify"}).out);
  CHECK(doc["schema_version"] == 1);
  CHECK(doc["route"] == "direct");
  CHECK(doc.contains("simplification"));
  CHECK(has(run({"--format", "svg", "link", "x1"}).out, "<path"));
  CHECK(run({"bracket", "--pd", "/nonexistent/file"}).status == 1);
}

TEST_CASE("conjugacy verb") {
  Result r = run({"conjugate", "x0", "x1"});
  CHECK(r.status == 0);
  CHECK(r.out == "not conjugate\n");
  CHECK(run({"conjugate", "x1", "x0^-1 x1 x0"}).out == "conjugate\n");
}

TEST_CASE("experiments") {
  Result t2 = run({"experiment", "thm2", "--gen", "x0", "--n", "3"});
  CHECK(t2.status == 0);
  CHECK(has(t2.out, "n=3"));
  CHECK(has(t2.out, "n=3  g_n x0 g_n^-1  leaves 9  conjugate to x0  link matches C(1,1,1,1,1,1)"));
  Result t2x1 = run({"experiment", "thm2", "--gen", "x1", "--n", "2"});
  CHECK(has(t2x1.out, "matches C(1,1,1,1) + unknot"));
  Result t1 = run({"--format", "json", "experiment", "thm1", "--n", "3"});
  CHECK(t1.status == 0);
  auto doc = nlohmann::json::parse(t1.out);
  CHECK(doc["schema_version"] == 1);
  CHECK(doc["rows"].size() == 3);
  for (const auto& row : doc["rows"]) {
    CHECK(row["bracket_matches_h1"] == true);
    CHECK(row["new_conjugacy_class"] == true);
  }
  CHECK(doc["rows"][2]["annular_components"] == 4);
  CHECK(run({"experiment", "thm1", "--n", "2", "--seed", "x1"}).status == 0);
  CHECK(run({"experiment", "thm1"}).status == 2);
}

TEST_CASE("oracle verb") {
  Result r = run({"oracle", "two-bridge", "1,1,1,1"});
  CHECK(r.status == 0);
  CHECK(has(r.out, "C(1,1,1,1)  p/q 5/3  components 1"));
  CHECK(has(run({"--format", "pd", "oracle", "two-bridge", "1,1"}).out, "O 0"));
  CHECK(run({"oracle", "two-bridge", "1,0"}).status == 1);
}

TEST_CASE("output is deterministic") {
  for (auto args : std::vector<std::vector<std::string>>{{"experiment", "thm1", "--n", "3"},
                                                          {"--format", "json", "experiment", "thm2", "--n", "2"},
                                                          {"link", "x0 x1^-1 x3"}}) {
    CHECK(run(args).out == run(args).out);
  }
}
