#ifndef LNGRAPH_SPECTRUM_HPP
#define LNGRAPH_SPECTRUM_HPP

#include <array>
#include <cstdint>
#include <vector>

#include "lngraph/ln_graph.hpp"
#include "lngraph/survey.hpp"

namespace lngraph {

/// Minimal dense integer matrix used by the exact spectral checks.
struct IntMatrix {
  int rows = 0;
  int cols = 0;
  std::vector<std::int64_t> data;  // row-major

  IntMatrix() = default;
  IntMatrix(int r, int c) : rows(r), cols(c), data(static_cast<size_t>(r) * c) {}

  std::int64_t& at(int i, int j) { return data[static_cast<size_t>(i) * cols + j]; }
  std::int64_t at(int i, int j) const { return data[static_cast<size_t>(i) * cols + j]; }

  bool is_zero() const;
  std::int64_t trace() const;

  static IntMatrix identity(int n);
};

IntMatrix multiply(const IntMatrix& a, const IntMatrix& b);

/// a + c*I.
IntMatrix shifted(const IntMatrix& a, std::int64_t c);

/// Adjacency matrix of g in the lexicographic vertex order.
IntMatrix adjacency_matrix(const LnGraph& g);

/// The claimed eigenvalue set of L(n): {-2, -1, 0, n-2, n-1}.
std::array<std::int64_t, 5> claimed_eigenvalues(int n);

/// True iff (A+2I)(A+I)A(A-(n-2)I)(A-(n-1)I) is the zero matrix, which
/// holds exactly when every eigenvalue of A lies in the claimed set.
/// Pure 64-bit integer arithmetic; entries of every partial product are
/// bounded by (n+1)n(n-1)(2n-3)(2n-2) < 2^63 for all supported n, so no
/// overflow is possible.
bool check_spectrum(const LnGraph& g);

/// Eigenvalue multiplicities for the claimed set, in claimed order.
/// Valid only when check_spectrum(g) holds (A is then diagonalizable
/// over the claimed values): m_k = tr(prod_{j != k}(A - l_j I)) /
/// prod_{j != k}(l_k - l_j), an exact integer division. The attained
/// spectrum is the set of values with positive multiplicity.
std::array<std::int64_t, 5> spectrum_multiplicities(const LnGraph& g);

/// Runs check_spectrum and, on success, records the attained eigenvalue
/// set next to the claimed one. The claim asserts containment only, so a
/// strictly smaller attained set (n = 3) still passes.
SurveyReport spectrum_survey(const LnGraph& g);

}  // namespace lngraph

#endif
