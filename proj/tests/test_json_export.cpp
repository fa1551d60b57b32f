#include <random>
#include <variant>

#include <doctest.h>

#include "lngraph/cycles.hpp"
#include "lngraph/errors.hpp"
#include "lngraph/hamilton.hpp"
#include "lngraph/json_io.hpp"
#include "lngraph/verify.hpp"

#include "support/mutation_suite.hpp"

using namespace lngraph;

TEST_CASE("certificate JSON shape") {
  const CycleCertificate cert{6, {1, 2}, {{1, 2}, {1, 3}, {1, 4}}};
  const std::string text = to_json(cert);
  CHECK(text ==
        R"({"anchor":[1,2],"kind":"cycle","n":6,"vertices":[[1,2],[1,3],[1,4]]})");

  const PathCertificate path{6, {{1, 2}, {2, 1}}, {{1, 2}, {2, 1}}};
  const std::string path_text = to_json(path);
  CHECK(path_text ==
        R"({"endpoints":[[1,2],[2,1]],"kind":"path","n":6,"vertices":[[1,2],[2,1]]})");
}

TEST_CASE("round trips preserve certificates") {
  const LnGraph g = build_ln(6);
  std::mt19937_64 rng(7);

  for (int i = 0; i < 40; ++i) {
    const Vertex v = g.vertex_at(static_cast<int>(rng() % g.order()));
    const int m = 3 + static_cast<int>(rng() % (g.order() - 2));
    const CycleCertificate cert = cycle_through(g, v, m);
    const AnyCertificate parsed = parse_certificate(to_json(cert));
    const auto& back = std::get<CycleCertificate>(parsed);
    CHECK(back.n == cert.n);
    CHECK(back.anchor == cert.anchor);
    CHECK(back.vertices == cert.vertices);
    CHECK(verify_cycle(g, back).ok);
  }

  for (int i = 0; i < 10; ++i) {
    const Vertex u = g.vertex_at(static_cast<int>(rng() % g.order()));
    Vertex v = g.vertex_at(static_cast<int>(rng() % g.order()));
    if (v == u) v = g.vertex_at((g.rank_of(u) + 1) % g.order());
    const PathCertificate cert = hamilton_path(g, u, v).cert;
    const AnyCertificate parsed = parse_certificate(to_json(cert));
    const auto& back = std::get<PathCertificate>(parsed);
    CHECK(back.endpoints == cert.endpoints);
    CHECK(back.vertices == cert.vertices);
    CHECK(verify_path(g, back).ok);
  }
}

TEST_CASE("parsing defaults and errors") {
  SUBCASE("endpoints default to the sequence ends") {
    const auto parsed = parse_certificate(
        R"({"n":6,"kind":"path","vertices":[[1,2],[2,1],[2,3]]})");
    const auto& cert = std::get<PathCertificate>(parsed);
    CHECK(cert.endpoints.first == Vertex{1, 2});
    CHECK(cert.endpoints.second == Vertex{2, 3});
  }
  SUBCASE("anchor defaults to the first vertex") {
    const auto parsed = parse_certificate(
        R"({"n":6,"kind":"cycle","vertices":[[1,2],[1,3],[1,4]]})");
    CHECK(std::get<CycleCertificate>(parsed).anchor == Vertex{1, 2});
  }
  SUBCASE("malformed text") {
    CHECK_THROWS_AS(parse_certificate("{"), CertificateParseError);
    CHECK_THROWS_AS(parse_certificate("[]"), CertificateParseError);
    CHECK_THROWS_AS(parse_certificate(R"({"n":6,"vertices":[]})"),
                    CertificateParseError);
    CHECK_THROWS_AS(
        parse_certificate(R"({"n":6,"kind":"walk","vertices":[]})"),
        CertificateParseError);
    CHECK_THROWS_AS(
        parse_certificate(R"({"n":6,"kind":"path","vertices":[[1]]})"),
        CertificateParseError);
    CHECK_THROWS_AS(
        parse_certificate(R"({"n":"six","kind":"path","vertices":[]})"),
        CertificateParseError);
  }
  SUBCASE("out-of-range vertices parse and fail verification instead") {
    const auto parsed = parse_certificate(
        R"({"n":6,"kind":"path","vertices":[[1,2],[9,9]]})");
    const auto& cert = std::get<PathCertificate>(parsed);
    const LnGraph g = build_ln(6);
    const VerificationResult r = verify_path(g, cert);
    CHECK_FALSE(r.ok);
  }
}

TEST_CASE("survey report JSON carries counters and notes") {
  SurveyReport report;
  report.kind = "negatives";
  report.n = 4;
  report.total = 2;
  report.passed = 1;
  report.failed = 1;
  report.notes.emplace_back("claim", "refuted");
  report.record_failure("something");
  const std::string text = to_json(report);
  CHECK(text.find("\"kind\":\"negatives\"") != std::string::npos);
  CHECK(text.find("\"failed\":1") != std::string::npos);
  CHECK(text.find("\"claim\":\"refuted\"") != std::string::npos);
}

TEST_CASE("mutated certificates are rejected with localized violations") {
  const auto result = mutation_suite::run_rejection_suite(30);
  CHECK(result.attempted == 30);
  CHECK(result.rejected_correctly == 30);
  for (const auto& mismatch : result.mismatches) {
    FAIL_CHECK(mismatch);
  }
}
