#include "lngraph/json_io.hpp"

#include <json.hpp>

#include "lngraph/errors.hpp"

namespace lngraph {

namespace {

using nlohmann::json;

json vertex_to_json(Vertex v) { return json::array({v.head, v.tail}); }

Vertex vertex_from_json(const json& j) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number_integer() ||
      !j[1].is_number_integer()) {
    throw CertificateParseError("vertex must be an integer pair [head,tail]");
  }
  return Vertex{j[0].get<int>(), j[1].get<int>()};
}

std::vector<Vertex> vertices_from_json(const json& j) {
  if (!j.is_array()) {
    throw CertificateParseError("\"vertices\" must be an array");
  }
  std::vector<Vertex> out;
  out.reserve(j.size());
  for (const auto& item : j) out.push_back(vertex_from_json(item));
  return out;
}

}  // namespace

std::string to_json(const PathCertificate& cert) {
  json j;
  j["n"] = cert.n;
  j["kind"] = "path";
  j["endpoints"] = json::array({vertex_to_json(cert.endpoints.first),
                                vertex_to_json(cert.endpoints.second)});
  j["vertices"] = json::array();
  for (const Vertex v : cert.vertices) j["vertices"].push_back(vertex_to_json(v));
  return j.dump();
}

std::string to_json(const CycleCertificate& cert) {
  json j;
  j["n"] = cert.n;
  j["kind"] = "cycle";
  j["anchor"] = vertex_to_json(cert.anchor);
  j["vertices"] = json::array();
  for (const Vertex v : cert.vertices) j["vertices"].push_back(vertex_to_json(v));
  return j.dump();
}

AnyCertificate parse_certificate(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw CertificateParseError(std::string("invalid JSON: ") + e.what());
  }
  if (!j.is_object()) throw CertificateParseError("certificate must be an object");
  if (!j.contains("n") || !j["n"].is_number_integer()) {
    throw CertificateParseError("missing integer field \"n\"");
  }
  if (!j.contains("kind") || !j["kind"].is_string()) {
    throw CertificateParseError("missing string field \"kind\"");
  }
  if (!j.contains("vertices")) {
    throw CertificateParseError("missing field \"vertices\"");
  }

  const int n = j["n"].get<int>();
  const std::string kind = j["kind"].get<std::string>();
  std::vector<Vertex> vertices = vertices_from_json(j["vertices"]);

  if (kind == "path") {
    PathCertificate cert;
    cert.n = n;
    cert.vertices = std::move(vertices);
    if (j.contains("endpoints")) {
      const auto& e = j["endpoints"];
      if (!e.is_array() || e.size() != 2) {
        throw CertificateParseError("\"endpoints\" must hold two vertices");
      }
      cert.endpoints = {vertex_from_json(e[0]), vertex_from_json(e[1])};
    } else if (!cert.vertices.empty()) {
      cert.endpoints = {cert.vertices.front(), cert.vertices.back()};
    }
    return cert;
  }
  if (kind == "cycle") {
    CycleCertificate cert;
    cert.n = n;
    cert.vertices = std::move(vertices);
    if (j.contains("anchor")) {
      cert.anchor = vertex_from_json(j["anchor"]);
    } else if (!cert.vertices.empty()) {
      cert.anchor = cert.vertices.front();
    }
    return cert;
  }
  throw CertificateParseError("\"kind\" must be \"path\" or \"cycle\"");
}

std::string to_json(const VerificationResult& result) {
  json j;
  j["ok"] = result.ok;
  j["violations"] = json::array();
  for (const Violation& v : result.violations) {
    j["violations"].push_back(
        {{"index", v.index}, {"reason", to_string(v.reason)}});
  }
  return j.dump();
}

std::string to_json(const SurveyReport& report) {
  json j;
  j["kind"] = report.kind;
  j["n"] = report.n;
  j["total"] = report.total;
  j["passed"] = report.passed;
  j["failed"] = report.failed;
  j["unknown"] = report.unknown;
  j["elapsed_ms"] = report.elapsed_ms;
  j["failures"] = report.failures;
  j["notes"] = json::object();
  for (const auto& [key, value] : report.notes) j["notes"][key] = value;
  return j.dump();
}

}  // namespace lngraph
