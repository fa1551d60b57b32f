#include "lngraph/c_api.h"

#include <cstdlib>
#include <cstring>
#include <exception>
#include <optional>
#include <string>

#include <json.hpp>

#include "lngraph/cycles.hpp"
#include "lngraph/errors.hpp"
#include "lngraph/export.hpp"
#include "lngraph/hamilton.hpp"
#include "lngraph/json_io.hpp"
#include "lngraph/ln_graph.hpp"
#include "lngraph/metrics.hpp"
#include "lngraph/oracle.hpp"
#include "lngraph/spectrum.hpp"
#include "lngraph/verify.hpp"

struct ln_graph {
  lngraph::LnGraph rep;
};

namespace {

thread_local std::string g_last_error;

char* copy_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

// Runs `body`, translating exceptions into status codes and the
// thread-local error message.
template <typename Fn>
ln_status guarded(Fn&& body) {
  g_last_error.clear();
  try {
    return body();
  } catch (const lngraph::UnsupportedOrderError& e) {
    g_last_error = e.what();
    return LN_ERR_UNSUPPORTED_ORDER;
  } catch (const lngraph::ParameterError& e) {
    g_last_error = e.what();
    return LN_ERR_INVALID_ARGUMENT;
  } catch (const lngraph::CertificateParseError& e) {
    g_last_error = e.what();
    return LN_ERR_PARSE;
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return LN_ERR_INTERNAL;
  }
}

ln_status fail(ln_status status, const std::string& message) {
  g_last_error = message;
  return status;
}

}  // namespace

extern "C" {

const char* ln_status_name(ln_status status) {
  switch (status) {
    case LN_OK: return "ok";
    case LN_ERR_INVALID_ARGUMENT: return "invalid-argument";
    case LN_ERR_UNSUPPORTED_ORDER: return "unsupported-order";
    case LN_ERR_VERIFY_FAILED: return "verify-failed";
    case LN_ERR_PARSE: return "parse-error";
    case LN_ERR_CLAIM_VIOLATED: return "claim-violated";
    case LN_ERR_INTERNAL: return "internal-error";
  }
  return "?";
}

const char* ln_last_error(void) { return g_last_error.c_str(); }

void ln_string_free(char* s) { std::free(s); }

ln_status ln_graph_create(int n, int order_cap, ln_graph** out) {
  if (out == nullptr) return fail(LN_ERR_INVALID_ARGUMENT, "null argument");
  *out = nullptr;
  return guarded([&]() -> ln_status {
    const int cap = order_cap > 0 ? order_cap : lngraph::kDefaultOrderCap;
    *out = new ln_graph{lngraph::build_ln(n, cap)};
    return LN_OK;
  });
}

void ln_graph_destroy(ln_graph* g) { delete g; }

int ln_graph_n(const ln_graph* g) { return g ? g->rep.n() : 0; }

int ln_graph_order(const ln_graph* g) { return g ? g->rep.order() : 0; }

long long ln_graph_size(const ln_graph* g) { return g ? g->rep.size() : 0; }

int ln_graph_degree(const ln_graph* g, int head, int tail) {
  if (g == nullptr) return -1;
  const lngraph::Vertex v{head, tail};
  if (!g->rep.contains(v)) return -1;
  return g->rep.degree(v);
}

int ln_graph_adjacent(const ln_graph* g, int head_a, int tail_a, int head_b,
                      int tail_b) {
  if (g == nullptr) return -1;
  const lngraph::Vertex a{head_a, tail_a};
  const lngraph::Vertex b{head_b, tail_b};
  if (!g->rep.contains(a) || !g->rep.contains(b)) return -1;
  return g->rep.adjacent(a, b) ? 1 : 0;
}

ln_status ln_graph_export(const ln_graph* g, const char* format, char** out) {
  if (g == nullptr || format == nullptr || out == nullptr) {
    return fail(LN_ERR_INVALID_ARGUMENT, "null argument");
  }
  *out = nullptr;
  return guarded([&]() -> ln_status {
    const std::string fmt(format);
    if (fmt == "edgelist") {
      *out = copy_string(lngraph::to_edge_list(g->rep));
    } else if (fmt == "dot") {
      *out = copy_string(lngraph::to_dot(g->rep));
    } else {
      return fail(LN_ERR_INVALID_ARGUMENT, "unknown format \"" + fmt + "\"");
    }
    return LN_OK;
  });
}

ln_status ln_bn_export(int n, int order_cap, const char* format, char** out) {
  if (format == nullptr || out == nullptr) {
    return fail(LN_ERR_INVALID_ARGUMENT, "null argument");
  }
  *out = nullptr;
  return guarded([&]() -> ln_status {
    const int cap = order_cap > 0 ? order_cap : lngraph::kDefaultOrderCap;
    const lngraph::BnGraph bn = lngraph::build_bn(n, cap);
    const std::string fmt(format);
    if (fmt == "edgelist") {
      *out = copy_string(lngraph::to_edge_list(bn));
    } else if (fmt == "dot") {
      *out = copy_string(lngraph::to_dot(bn));
    } else {
      return fail(LN_ERR_INVALID_ARGUMENT, "unknown format \"" + fmt + "\"");
    }
    return LN_OK;
  });
}

ln_status ln_graph_metrics_json(const ln_graph* g, char** out) {
  if (g == nullptr || out == nullptr) {
    return fail(LN_ERR_INVALID_ARGUMENT, "null argument");
  }
  *out = nullptr;
  return guarded([&]() -> ln_status {
    const lngraph::GraphMetrics m = lngraph::metrics(g->rep);
    nlohmann::json j;
    j["n"] = g->rep.n();
    j["order"] = m.order;
    j["size"] = m.size;
    j["min_degree"] = m.min_degree;
    j["max_degree"] = m.max_degree;
    j["girth"] = m.girth;
    j["diameter"] = m.diameter;
    j["connected"] = m.connected;
    *out = copy_string(j.dump());
    return LN_OK;
  });
}

ln_status ln_cycle_through(const ln_graph* g, int head, int tail, int m,
                           char** out_certificate) {
  if (g == nullptr || out_certificate == nullptr) {
    return fail(LN_ERR_INVALID_ARGUMENT, "null argument");
  }
  *out_certificate = nullptr;
  return guarded([&]() -> ln_status {
    const lngraph::CycleCertificate cert =
        lngraph::cycle_through(g->rep, lngraph::Vertex{head, tail}, m);
    const lngraph::VerificationResult check = lngraph::verify_cycle(g->rep, cert);
    if (!check.ok) {
      return fail(LN_ERR_VERIFY_FAILED,
                  "built cycle failed verification:\n" + check.summary());
    }
    *out_certificate = copy_string(lngraph::to_json(cert));
    return LN_OK;
  });
}

ln_status ln_hamilton_path(const ln_graph* g, int from_head, int from_tail,
                           int to_head, int to_tail, char** out_certificate) {
  if (g == nullptr || out_certificate == nullptr) {
    return fail(LN_ERR_INVALID_ARGUMENT, "null argument");
  }
  *out_certificate = nullptr;
  return guarded([&]() -> ln_status {
    const lngraph::HamiltonPathResult result = lngraph::hamilton_path(
        g->rep, lngraph::Vertex{from_head, from_tail},
        lngraph::Vertex{to_head, to_tail});
    const lngraph::VerificationResult check =
        lngraph::verify_path(g->rep, result.cert);
    if (!check.ok || !result.cert.hamiltonian()) {
      return fail(LN_ERR_VERIFY_FAILED,
                  "built path failed verification:\n" + check.summary());
    }
    *out_certificate = copy_string(lngraph::to_json(result.cert));
    return LN_OK;
  });
}

ln_status ln_certificate_order(const char* certificate, int* out_n) {
  if (certificate == nullptr || out_n == nullptr) {
    return fail(LN_ERR_INVALID_ARGUMENT, "null argument");
  }
  *out_n = 0;
  return guarded([&]() -> ln_status {
    const lngraph::AnyCertificate cert =
        lngraph::parse_certificate(certificate);
    if (const auto* path = std::get_if<lngraph::PathCertificate>(&cert)) {
      *out_n = path->n;
    } else {
      *out_n = std::get<lngraph::CycleCertificate>(cert).n;
    }
    return LN_OK;
  });
}

ln_status ln_verify_certificate(const ln_graph* g, const char* certificate,
                                char** out_report) {
  if (g == nullptr || certificate == nullptr || out_report == nullptr) {
    return fail(LN_ERR_INVALID_ARGUMENT, "null argument");
  }
  *out_report = nullptr;
  return guarded([&]() -> ln_status {
    const lngraph::AnyCertificate cert =
        lngraph::parse_certificate(certificate);
    lngraph::VerificationResult result;
    if (const auto* path = std::get_if<lngraph::PathCertificate>(&cert)) {
      result = lngraph::verify_path(g->rep, *path);
    } else {
      result =
          lngraph::verify_cycle(g->rep, std::get<lngraph::CycleCertificate>(cert));
    }
    *out_report = copy_string(lngraph::to_json(result));
    if (!result.ok) {
      g_last_error = result.summary();
      return LN_ERR_VERIFY_FAILED;
    }
    return LN_OK;
  });
}

ln_status ln_survey(const ln_graph* g, const char* kind,
                    long long sample_pairs, unsigned long long seed,
                    long long node_budget, const char* format, char** out) {
  if (g == nullptr || kind == nullptr || format == nullptr || out == nullptr) {
    return fail(LN_ERR_INVALID_ARGUMENT, "null argument");
  }
  *out = nullptr;
  return guarded([&]() -> ln_status {
    const std::string which(kind);
    lngraph::SurveyReport report;
    if (which == "pancyclic") {
      report = lngraph::pancyclicity_survey(g->rep);
    } else if (which == "hamilton") {
      std::optional<long long> sample;
      if (sample_pairs > 0) sample = sample_pairs;
      const std::uint64_t effective_seed =
          seed != 0 ? seed : lngraph::kDefaultSampleSeed;
      report = lngraph::hamilton_survey(g->rep, sample, effective_seed);
    } else if (which == "negatives") {
      lngraph::SearchBudget budget;
      if (node_budget > 0) budget.node_expansions = node_budget;
      report = lngraph::negatives_survey(g->rep, budget);
    } else if (which == "spectrum") {
      report = lngraph::spectrum_survey(g->rep);
    } else {
      return fail(LN_ERR_INVALID_ARGUMENT,
                  "unknown survey kind \"" + which + "\"");
    }

    const std::string fmt(format);
    if (fmt == "json") {
      *out = copy_string(lngraph::to_json(report));
    } else if (fmt == "text") {
      *out = copy_string(lngraph::to_text(report));
    } else {
      return fail(LN_ERR_INVALID_ARGUMENT, "unknown format \"" + fmt + "\"");
    }
    if (!report.all_passed()) {
      g_last_error = std::to_string(report.failed + report.unknown) +
                     " expectation(s) not confirmed";
      return LN_ERR_CLAIM_VIOLATED;
    }
    return LN_OK;
  });
}

ln_status ln_cross_validate(int n, int* out_identical) {
  if (out_identical == nullptr) {
    return fail(LN_ERR_INVALID_ARGUMENT, "null argument");
  }
  *out_identical = 0;
  return guarded([&]() -> ln_status {
    *out_identical = lngraph::cross_validate_line_graph(n) ? 1 : 0;
    return LN_OK;
  });
}

}  // extern "C"
