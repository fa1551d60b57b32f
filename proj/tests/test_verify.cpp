#include <vector>

#include <doctest.h>

#include "lngraph/chain.hpp"
#include "lngraph/errors.hpp"
#include "lngraph/verify.hpp"

using namespace lngraph;

namespace {

bool has_violation(const VerificationResult& r, int index,
                   ViolationReason reason) {
  for (const Violation& v : r.violations) {
    if (v.index == index && v.reason == reason) return true;
  }
  return false;
}

}  // namespace

TEST_CASE("verify_path") {
  const LnGraph g = build_ln(6);

  SUBCASE("accepts the length-5 chain path") {
    const CliqueChainPath p = chain_path(g, {1, 2}, {1, 3}, 2);
    CHECK(verify_path(g, p.to_certificate(6)).ok);
  }

  SUBCASE("repeated vertex") {
    const PathCertificate cert{
        6, {{1, 2}, {1, 3}}, {{1, 2}, {2, 1}, {1, 2}, {1, 3}}};
    const VerificationResult r = verify_path(g, cert);
    CHECK_FALSE(r.ok);
    CHECK(has_violation(r, 2, ViolationReason::DuplicateVertex));
  }

  SUBCASE("non-adjacent pair") {
    const PathCertificate cert{6, {{1, 2}, {3, 4}}, {{1, 2}, {3, 4}}};
    const VerificationResult r = verify_path(g, cert);
    CHECK_FALSE(r.ok);
    CHECK(has_violation(r, 0, ViolationReason::NotAdjacent));
  }

  SUBCASE("wrong declared endpoints") {
    const PathCertificate cert{6, {{1, 2}, {1, 5}}, {{1, 2}, {1, 3}}};
    const VerificationResult r = verify_path(g, cert);
    CHECK_FALSE(r.ok);
    CHECK(has_violation(r, 1, ViolationReason::WrongEndpoint));
  }

  SUBCASE("out-of-range vertex") {
    const PathCertificate cert{6, {{1, 2}, {1, 7}}, {{1, 2}, {1, 7}}};
    const VerificationResult r = verify_path(g, cert);
    CHECK_FALSE(r.ok);
    CHECK(has_violation(r, 1, ViolationReason::UnknownVertex));
  }

  SUBCASE("single vertex is not a path") {
    const PathCertificate cert{6, {{1, 2}, {1, 2}}, {{1, 2}}};
    const VerificationResult r = verify_path(g, cert);
    CHECK_FALSE(r.ok);
    CHECK(has_violation(r, 0, ViolationReason::WrongLength));
  }

  SUBCASE("mismatched n throws") {
    const PathCertificate cert{5, {{1, 2}, {1, 3}}, {{1, 2}, {1, 3}}};
    CHECK_THROWS_AS(verify_path(g, cert), ParameterError);
  }
}

TEST_CASE("verify_cycle") {
  const LnGraph g = build_ln(6);

  SUBCASE("accepts a clique triangle") {
    const CycleCertificate cert{6, {1, 2}, {{1, 2}, {1, 3}, {1, 4}}};
    CHECK(verify_cycle(g, cert).ok);
  }

  SUBCASE("open path submitted as a cycle") {
    const CycleCertificate cert{6, {1, 2}, {{1, 2}, {2, 1}, {2, 3}}};
    const VerificationResult r = verify_cycle(g, cert);
    CHECK_FALSE(r.ok);
    CHECK(has_violation(r, 2, ViolationReason::NotClosed));
  }

  SUBCASE("two vertices are not a cycle") {
    const CycleCertificate cert{6, {1, 2}, {{1, 2}, {2, 1}}};
    const VerificationResult r = verify_cycle(g, cert);
    CHECK_FALSE(r.ok);
    CHECK(has_violation(r, 0, ViolationReason::WrongLength));
  }

  SUBCASE("anchor must sit at index 0") {
    const CycleCertificate cert{6, {1, 3}, {{1, 2}, {1, 3}, {1, 4}}};
    const VerificationResult r = verify_cycle(g, cert);
    CHECK_FALSE(r.ok);
    CHECK(has_violation(r, 0, ViolationReason::WrongEndpoint));
  }
}

TEST_CASE("violation reasons render for reports") {
  CHECK(std::string(to_string(ViolationReason::NotAdjacent)) == "not-adjacent");
  CHECK(std::string(to_string(ViolationReason::UnknownVertex)) ==
        "unknown-vertex");
  VerificationResult r;
  r.violations.push_back({3, ViolationReason::NotAdjacent});
  CHECK(r.summary() == "not-adjacent at index 3\n");
}
