#include <cstring>
#include <string>

#include <doctest.h>

#include "lngraph/c_api.h"

namespace {

struct Graph {
  ln_graph* g = nullptr;
  explicit Graph(int n, int cap = 0) { ln_graph_create(n, cap, &g); }
  ~Graph() { ln_graph_destroy(g); }
};

struct Str {
  char* s = nullptr;
  ~Str() { ln_string_free(s); }
  std::string view() const { return s ? std::string(s) : std::string(); }
};

}  // namespace

TEST_CASE("create, query, destroy") {
  Graph graph(6);
  REQUIRE(graph.g != nullptr);
  CHECK(ln_graph_n(graph.g) == 6);
  CHECK(ln_graph_order(graph.g) == 30);
  CHECK(ln_graph_size(graph.g) == 75);
  CHECK(ln_graph_degree(graph.g, 1, 2) == 5);
  CHECK(ln_graph_degree(graph.g, 1, 1) == -1);
  CHECK(ln_graph_adjacent(graph.g, 1, 2, 2, 1) == 1);
  CHECK(ln_graph_adjacent(graph.g, 1, 2, 2, 3) == 0);
  CHECK(ln_graph_adjacent(graph.g, 1, 2, 7, 3) == -1);
}

TEST_CASE("create rejects out-of-range orders with a message") {
  ln_graph* g = nullptr;
  CHECK(ln_graph_create(2, 0, &g) == LN_ERR_UNSUPPORTED_ORDER);
  CHECK(g == nullptr);
  CHECK(std::strlen(ln_last_error()) > 0);

  CHECK(ln_graph_create(60, 0, &g) == LN_ERR_UNSUPPORTED_ORDER);
  CHECK(ln_graph_create(60, 80, &g) == LN_OK);
  ln_graph_destroy(g);
}

TEST_CASE("exports") {
  Graph graph(3);
  Str edgelist;
  REQUIRE(ln_graph_export(graph.g, "edgelist", &edgelist.s) == LN_OK);
  CHECK(edgelist.view().rfind("1,2 1,3\n", 0) == 0);

  Str dot;
  REQUIRE(ln_graph_export(graph.g, "dot", &dot.s) == LN_OK);
  CHECK(dot.view().find("graph L3 {") == 0);

  Str bad;
  CHECK(ln_graph_export(graph.g, "csv", &bad.s) == LN_ERR_INVALID_ARGUMENT);

  Str bn;
  REQUIRE(ln_bn_export(3, 0, "edgelist", &bn.s) == LN_OK);
  CHECK(bn.view().find("1 1,2\n") == 0);
}

TEST_CASE("metrics JSON") {
  Graph graph(4);
  Str text;
  REQUIRE(ln_graph_metrics_json(graph.g, &text.s) == LN_OK);
  const std::string json = text.view();
  CHECK(json.find("\"order\":12") != std::string::npos);
  CHECK(json.find("\"girth\":3") != std::string::npos);
  CHECK(json.find("\"diameter\":3") != std::string::npos);
  CHECK(json.find("\"connected\":true") != std::string::npos);
}

TEST_CASE("cycle and hamilton certificates round-trip through verify") {
  Graph graph(6);
  Str cycle;
  REQUIRE(ln_cycle_through(graph.g, 1, 2, 30, &cycle.s) == LN_OK);
  Str report;
  CHECK(ln_verify_certificate(graph.g, cycle.s, &report.s) == LN_OK);

  Str path;
  REQUIRE(ln_hamilton_path(graph.g, 1, 2, 1, 3, &path.s) == LN_OK);
  Str path_report;
  CHECK(ln_verify_certificate(graph.g, path.s, &path_report.s) == LN_OK);
}

TEST_CASE("builder preconditions surface as status codes") {
  Graph g5(5);
  Str out;
  CHECK(ln_cycle_through(g5.g, 1, 2, 5, &out.s) == LN_ERR_UNSUPPORTED_ORDER);

  Graph g6(6);
  CHECK(ln_cycle_through(g6.g, 1, 2, 2, &out.s) == LN_ERR_INVALID_ARGUMENT);
  CHECK(ln_cycle_through(g6.g, 1, 1, 5, &out.s) == LN_ERR_INVALID_ARGUMENT);
  CHECK(ln_hamilton_path(g6.g, 1, 2, 1, 2, &out.s) == LN_ERR_INVALID_ARGUMENT);
}

TEST_CASE("verification failures carry a violation report") {
  Graph graph(6);
  const char* tampered =
      R"({"n":6,"kind":"path","vertices":[[1,2],[3,4]]})";
  Str report;
  CHECK(ln_verify_certificate(graph.g, tampered, &report.s) ==
        LN_ERR_VERIFY_FAILED);
  CHECK(report.view().find("not-adjacent") != std::string::npos);
  CHECK(std::string(ln_last_error()).find("not-adjacent at index 0") !=
        std::string::npos);

  Str report2;
  CHECK(ln_verify_certificate(graph.g, "{nope", &report2.s) == LN_ERR_PARSE);
}

TEST_CASE("certificate order extraction") {
  int n = 0;
  CHECK(ln_certificate_order(R"({"n":7,"kind":"cycle","vertices":[]})", &n) ==
        LN_OK);
  CHECK(n == 7);
  CHECK(ln_certificate_order("oops", &n) == LN_ERR_PARSE);
}

TEST_CASE("surveys through the C API") {
  Graph g6(6);
  Str text;
  REQUIRE(ln_survey(g6.g, "spectrum", 0, 0, 0, "text", &text.s) == LN_OK);
  CHECK(text.view().find("spectrum survey n=6: 1/1 pass") !=
        std::string::npos);

  Str json;
  REQUIRE(ln_survey(g6.g, "negatives", 0, 0, 0, "json", &json.s) == LN_OK);
  CHECK(json.view().find("\"failed\":0") != std::string::npos);

  Str bad;
  CHECK(ln_survey(g6.g, "everything", 0, 0, 0, "text", &bad.s) ==
        LN_ERR_INVALID_ARGUMENT);

  Graph g8(8);
  Str sampled;
  REQUIRE(ln_survey(g8.g, "hamilton", 50, 0, 0, "json", &sampled.s) == LN_OK);
  CHECK(sampled.view().find("\"total\":50") != std::string::npos);
}

TEST_CASE("cross validation") {
  int same = 0;
  REQUIRE(ln_cross_validate(5, &same) == LN_OK);
  CHECK(same == 1);
  CHECK(ln_cross_validate(2, &same) == LN_ERR_UNSUPPORTED_ORDER);
}

TEST_CASE("status names") {
  CHECK(std::string(ln_status_name(LN_OK)) == "ok");
  CHECK(std::string(ln_status_name(LN_ERR_PARSE)) == "parse-error");
}
