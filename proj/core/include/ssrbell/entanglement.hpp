#pragma once

/**
 * @file entanglement.hpp
 * @brief A|B entanglement diagnostics: Schmidt decomposition, partial transpose, negativity.
 */

#include "ssrbell/operators.hpp"

#include <vector>

namespace ssrbell {

/// Eigenvalues of the partial transpose below -floor count as negative.
inline constexpr double kNegativityFloor = 1e-10;

struct SchmidtDecomposition {
  /// Non-increasing, length min(dim A, dim B).
  std::vector<double> coefficients;
  std::vector<Vector> left;   ///< orthonormal vectors on A
  std::vector<Vector> right;  ///< orthonormal vectors on B

  /// sum_i c_i |left_i>|right_i> in the global basis.
  [[nodiscard]] Vector reconstruct() const;
  /// Number of coefficients above `threshold`.
  [[nodiscard]] std::size_t rank(double threshold = 1e-10) const;
};

[[nodiscard]] SchmidtDecomposition schmidt_decompose(const StateVector& psi);
/// Rejects states with purity below 1 - 1e-10.
[[nodiscard]] SchmidtDecomposition schmidt_decompose(const DensityMatrix& rho);

/// Transpose on the B factor of the canonical product basis.
[[nodiscard]] Operator partial_transpose(const DensityMatrix& rho);
[[nodiscard]] Matrix partial_transpose(const Matrix& m, const FockSpace& space);

/// Sum of |lambda| over eigenvalues lambda < -floor of the partial transpose.
[[nodiscard]] double negativity(const DensityMatrix& rho, double floor = kNegativityFloor);

[[nodiscard]] double min_partial_transpose_eigenvalue(const DensityMatrix& rho);

[[nodiscard]] bool is_ppt(const DensityMatrix& rho, double tolerance = kNegativityFloor);

}  // namespace ssrbell
