// lngraph command-line tool. Talks to the library exclusively through
// the C API in lngraph/c_api.h.
//
// Exit codes: 0 success, 1 verified failure or violated claim,
// 2 precondition/usage error, 3 I/O or parse error.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "lngraph/c_api.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitClaimFailed = 1;
constexpr int kExitPrecondition = 2;
constexpr int kExitIo = 3;

struct GraphHandle {
  ln_graph* g = nullptr;
  ~GraphHandle() { ln_graph_destroy(g); }
};

struct OwnedString {
  char* s = nullptr;
  ~OwnedString() { ln_string_free(s); }
};

int exit_code_for(ln_status status) {
  switch (status) {
    case LN_OK: return kExitOk;
    case LN_ERR_VERIFY_FAILED:
    case LN_ERR_CLAIM_VIOLATED: return kExitClaimFailed;
    case LN_ERR_PARSE: return kExitIo;
    case LN_ERR_INVALID_ARGUMENT:
    case LN_ERR_UNSUPPORTED_ORDER: return kExitPrecondition;
    case LN_ERR_INTERNAL: return kExitClaimFailed;
  }
  return kExitClaimFailed;
}

int report_error(ln_status status) {
  std::cerr << "error (" << ln_status_name(status) << "): " << ln_last_error()
            << "\n";
  return exit_code_for(status);
}

// Parses "head,tail". Rejected before any graph is built.
bool parse_vertex(const std::string& text, int n, int& head, int& tail) {
  const auto comma = text.find(',');
  if (comma == std::string::npos) return false;
  try {
    size_t used = 0;
    head = std::stoi(text.substr(0, comma), &used);
    if (used != comma) return false;
    const std::string rest = text.substr(comma + 1);
    tail = std::stoi(rest, &used);
    if (used != rest.size()) return false;
  } catch (const std::exception&) {
    return false;
  }
  return head >= 1 && head <= n && tail >= 1 && tail <= n && head != tail;
}

int write_output(const std::string& text, const std::string& path) {
  if (path.empty()) {
    std::cout << text;
    if (text.empty() || text.back() != '\n') std::cout << "\n";
    return kExitOk;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    std::cerr << "error: cannot open " << path << " for writing\n";
    return kExitIo;
  }
  out << text;
  if (text.empty() || text.back() != '\n') out << "\n";
  if (!out.good()) {
    std::cerr << "error: write to " << path << " failed\n";
    return kExitIo;
  }
  return kExitOk;
}

int make_graph(int n, int cap, GraphHandle& handle) {
  const ln_status status = ln_graph_create(n, cap, &handle.g);
  if (status != LN_OK) return report_error(status);
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Builder, prover and verifier for the line graphs L(n) of "
               "the subset-inclusion graphs B(n)"};
  app.require_subcommand(1);

  int n = 0;
  int cap = 0;
  std::string out_path;
  std::string format;
  std::string which_graph = "ln";
  std::string vertex_text;
  std::string u_text;
  std::string v_text;
  std::string kind;
  std::string file_path;
  int m = 0;
  long long sample = 0;
  unsigned long long seed = 0;
  long long budget = 0;

  auto* gen = app.add_subcommand("gen", "Write a graph as an edge list or DOT");
  gen->add_option("--n", n, "Order parameter")->required();
  gen->add_option("--format", format, "edgelist (default) or dot");
  gen->add_option("--graph", which_graph, "ln (default) or bn");
  gen->add_option("--out", out_path, "Output file (default stdout)");
  gen->add_option("--cap", cap, "Override the order cap");

  auto* cycle = app.add_subcommand(
      "cycle", "Emit a verified cycle certificate of a given length");
  cycle->add_option("--n", n, "Order parameter")->required();
  cycle->add_option("--vertex", vertex_text, "Anchor vertex head,tail")
      ->required();
  cycle->add_option("--m", m, "Cycle length")->required();
  cycle->add_option("--out", out_path, "Output file (default stdout)");
  cycle->add_option("--cap", cap, "Override the order cap");

  auto* hampath = app.add_subcommand(
      "hampath", "Emit a verified Hamiltonian path certificate");
  hampath->add_option("--n", n, "Order parameter")->required();
  hampath->add_option("--u", u_text, "First endpoint head,tail")->required();
  hampath->add_option("--v", v_text, "Second endpoint head,tail")->required();
  hampath->add_option("--out", out_path, "Output file (default stdout)");
  hampath->add_option("--cap", cap, "Override the order cap");

  auto* verify = app.add_subcommand(
      "verify", "Check a certificate file; violations print one per line");
  verify->add_option("file", file_path, "Certificate JSON file")->required();
  verify->add_option("--cap", cap, "Override the order cap");

  auto* survey = app.add_subcommand(
      "survey", "Run a full sweep and report pass/fail");
  survey->add_option("--n", n, "Order parameter")->required();
  survey
      ->add_option("--kind", kind,
                   "pancyclic, hamilton, negatives or spectrum")
      ->required();
  survey->add_option("--sample", sample,
                     "Sample this many vertex pairs (hamilton only)");
  survey->add_option("--seed", seed, "Sample seed (default 1)");
  survey->add_option("--budget", budget,
                     "Search node budget (default 100000000)");
  survey->add_option("--format", format, "text (default) or json");
  survey->add_option("--out", out_path, "Output file (default stdout)");
  survey->add_option("--cap", cap, "Override the order cap");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitPrecondition;
  }

  if (gen->parsed()) {
    if (format.empty()) format = "edgelist";
    OwnedString text;
    ln_status status = LN_OK;
    if (which_graph == "bn") {
      status = ln_bn_export(n, cap, format.c_str(), &text.s);
    } else if (which_graph == "ln") {
      GraphHandle graph;
      const int rc = make_graph(n, cap, graph);
      if (rc != kExitOk) return rc;
      status = ln_graph_export(graph.g, format.c_str(), &text.s);
    } else {
      std::cerr << "error: --graph must be ln or bn\n";
      return kExitPrecondition;
    }
    if (status != LN_OK) return report_error(status);
    return write_output(text.s, out_path);
  }

  if (cycle->parsed()) {
    int head = 0, tail = 0;
    if (n < 3) {
      std::cerr << "error: n must be >= 3\n";
      return kExitPrecondition;
    }
    if (!parse_vertex(vertex_text, n, head, tail)) {
      std::cerr << "error: --vertex must be head,tail with distinct entries "
                   "in 1.." << n << "\n";
      return kExitPrecondition;
    }
    GraphHandle graph;
    const int rc = make_graph(n, cap, graph);
    if (rc != kExitOk) return rc;
    OwnedString cert;
    const ln_status status = ln_cycle_through(graph.g, head, tail, m, &cert.s);
    if (status != LN_OK) return report_error(status);
    return write_output(cert.s, out_path);
  }

  if (hampath->parsed()) {
    int uh = 0, ut = 0, vh = 0, vt = 0;
    if (n < 3) {
      std::cerr << "error: n must be >= 3\n";
      return kExitPrecondition;
    }
    if (!parse_vertex(u_text, n, uh, ut) || !parse_vertex(v_text, n, vh, vt)) {
      std::cerr << "error: --u and --v must be head,tail with distinct "
                   "entries in 1.." << n << "\n";
      return kExitPrecondition;
    }
    if (uh == vh && ut == vt) {
      std::cerr << "error: endpoints must be distinct vertices\n";
      return kExitPrecondition;
    }
    GraphHandle graph;
    const int rc = make_graph(n, cap, graph);
    if (rc != kExitOk) return rc;
    OwnedString cert;
    const ln_status status =
        ln_hamilton_path(graph.g, uh, ut, vh, vt, &cert.s);
    if (status != LN_OK) return report_error(status);
    return write_output(cert.s, out_path);
  }

  if (verify->parsed()) {
    std::ifstream in(file_path, std::ios::binary);
    if (!in) {
      std::cerr << "error: cannot read " << file_path << "\n";
      return kExitIo;
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    const std::string text = buffer.str();

    // The graph order comes from the certificate itself.
    int cert_n = 0;
    const ln_status parse_status = ln_certificate_order(text.c_str(), &cert_n);
    if (parse_status != LN_OK) return report_error(parse_status);
    GraphHandle graph;
    const int rc = make_graph(cert_n, cap, graph);
    if (rc != kExitOk) return rc;
    OwnedString report;
    const ln_status status =
        ln_verify_certificate(graph.g, text.c_str(), &report.s);
    if (status == LN_OK) {
      std::cout << "ok\n";
      return kExitOk;
    }
    if (status == LN_ERR_VERIFY_FAILED) {
      std::cout << ln_last_error();
      return kExitClaimFailed;
    }
    return report_error(status);
  }

  if (survey->parsed()) {
    if (format.empty()) format = "text";
    GraphHandle graph;
    const int rc = make_graph(n, cap, graph);
    if (rc != kExitOk) return rc;
    OwnedString report;
    const ln_status status = ln_survey(graph.g, kind.c_str(), sample, seed,
                                       budget, format.c_str(), &report.s);
    if (status == LN_OK || status == LN_ERR_CLAIM_VIOLATED) {
      const int wrc = write_output(report.s, out_path);
      if (wrc != kExitOk) return wrc;
      return status == LN_OK ? kExitOk : kExitClaimFailed;
    }
    return report_error(status);
  }

  return kExitPrecondition;
}
