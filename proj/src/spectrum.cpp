#include "lngraph/spectrum.hpp"

#include <chrono>
#include <numeric>
#include <string>

#include "lngraph/errors.hpp"

namespace lngraph {

namespace {

// Entries of any partial product of the five shifted factors are bounded
// by prod of their row-sum norms, (n+1)n(n-1)(2n-3)(2n-2) < 4(n+1)^5,
// which stays below 2^63 for every n up to ~1800; the order cap keeps n
// far below that, so int64 arithmetic is exact here.
constexpr int kSpectrumMaxN = 1800;

}  // namespace

bool IntMatrix::is_zero() const {
  for (const std::int64_t x : data) {
    if (x != 0) return false;
  }
  return true;
}

std::int64_t IntMatrix::trace() const {
  std::int64_t sum = 0;
  for (int i = 0; i < rows; ++i) sum += at(i, i);
  return sum;
}

IntMatrix IntMatrix::identity(int n) {
  IntMatrix m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

IntMatrix multiply(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols != b.rows) throw ParameterError("multiply: shape mismatch");
  IntMatrix c(a.rows, b.cols);
  for (int i = 0; i < a.rows; ++i) {
    for (int k = 0; k < a.cols; ++k) {
      const std::int64_t aik = a.at(i, k);
      if (aik == 0) continue;
      for (int j = 0; j < b.cols; ++j) {
        c.at(i, j) += aik * b.at(k, j);
      }
    }
  }
  return c;
}

IntMatrix shifted(const IntMatrix& a, std::int64_t c) {
  if (a.rows != a.cols) throw ParameterError("shifted: square matrix required");
  IntMatrix m = a;
  for (int i = 0; i < m.rows; ++i) m.at(i, i) += c;
  return m;
}

IntMatrix adjacency_matrix(const LnGraph& g) {
  const int order = g.order();
  IntMatrix a(order, order);
  for (const Vertex v : g.vertices()) {
    const int r = g.rank_of(v);
    for (const Vertex nb : g.neighbors(v)) {
      a.at(r, g.rank_of(nb)) = 1;
    }
  }
  return a;
}

std::array<std::int64_t, 5> claimed_eigenvalues(int n) {
  return {-2, -1, 0, static_cast<std::int64_t>(n) - 2,
          static_cast<std::int64_t>(n) - 1};
}

bool check_spectrum(const LnGraph& g) {
  if (g.n() > kSpectrumMaxN) {
    throw UnsupportedOrderError("spectrum check: n too large for exact int64");
  }
  const IntMatrix a = adjacency_matrix(g);
  IntMatrix product = IntMatrix::identity(a.rows);
  for (const std::int64_t lambda : claimed_eigenvalues(g.n())) {
    product = multiply(product, shifted(a, -lambda));
  }
  return product.is_zero();
}

std::array<std::int64_t, 5> spectrum_multiplicities(const LnGraph& g) {
  if (g.n() > kSpectrumMaxN) {
    throw UnsupportedOrderError("spectrum check: n too large for exact int64");
  }
  const IntMatrix a = adjacency_matrix(g);
  const auto lambdas = claimed_eigenvalues(g.n());

  // With the annihilator zero, A is diagonalizable over the claimed set
  // and tr(prod_{j != k}(A - l_j I)) = m_k * prod_{j != k}(l_k - l_j);
  // the division is exact.
  std::array<std::int64_t, 5> result{};
  for (size_t k = 0; k < lambdas.size(); ++k) {
    IntMatrix projector = IntMatrix::identity(a.rows);
    std::int64_t denominator = 1;
    for (size_t j = 0; j < lambdas.size(); ++j) {
      if (j == k) continue;
      projector = multiply(projector, shifted(a, -lambdas[j]));
      denominator *= lambdas[k] - lambdas[j];
    }
    const std::int64_t numerator = projector.trace();
    if (denominator == 0 || numerator % denominator != 0) {
      throw std::runtime_error(
          "spectrum multiplicities undefined: annihilator does not vanish");
    }
    result[k] = numerator / denominator;
  }

  const std::int64_t total =
      std::accumulate(result.begin(), result.end(), std::int64_t{0});
  if (total != g.order()) {
    throw std::runtime_error(
        "spectrum multiplicities inconsistent with graph order");
  }
  return result;
}

SurveyReport spectrum_survey(const LnGraph& g) {
  SurveyReport report;
  report.kind = "spectrum";
  report.n = g.n();
  const auto started = std::chrono::steady_clock::now();

  report.total = 1;
  const bool annihilated = check_spectrum(g);
  const auto lambdas = claimed_eigenvalues(g.n());

  std::string claimed = "{";
  for (size_t k = 0; k < lambdas.size(); ++k) {
    claimed += (k ? "," : "") + std::to_string(lambdas[k]);
  }
  claimed += "}";
  report.notes.emplace_back("claimed", claimed);

  if (annihilated) {
    ++report.passed;
    report.notes.emplace_back("annihilator", "zero");
    const auto mult = spectrum_multiplicities(g);
    std::string attained = "{";
    std::string multiplicities = "{";
    bool first = true;
    for (size_t k = 0; k < lambdas.size(); ++k) {
      multiplicities += (k ? "," : "") + std::to_string(mult[k]);
      if (mult[k] > 0) {
        attained += (first ? "" : ",") + std::to_string(lambdas[k]);
        first = false;
      }
    }
    report.notes.emplace_back("attained", attained + "}");
    report.notes.emplace_back("multiplicities", multiplicities + "}");
  } else {
    ++report.failed;
    report.notes.emplace_back("annihilator", "nonzero");
    report.record_failure("annihilating product is not the zero matrix");
  }

  report.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                          std::chrono::steady_clock::now() - started)
                          .count();
  return report;
}

}  // namespace lngraph
