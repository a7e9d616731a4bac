#pragma once

/**
 * @file bell.hpp
 * @brief CHSH evaluation and see-saw maximization over local dichotomic observables.
 *
 * The CHSH functional is
 *   <A0 B0> + <A0 B1> + <A1 B0> - <A1 B1>
 *     = tr[F0 A0] + tr[F1 A1],   F0 = Tr_B[rho (B0 + B1)],  F1 = Tr_B[rho (B0 - B1)],
 * so with one side fixed the other side is solved exactly by the sign
 * function of the effective operators. Under the superselection rule the
 * observables are restricted to be block-diagonal over local particle-number
 * sectors; the sign function is then taken block by block.
 */

#include "ssrbell/operators.hpp"

#include <array>
#include <cstdint>
#include <random>
#include <utility>

namespace ssrbell {

inline constexpr double kTsirelsonBound = 2.8284271247461903;  // 2 sqrt(2)
inline constexpr double kLocalBound = 2.0;

/// Local observable with eigenvalues +1 / -1 (any multiplicities).
class DichotomicObservable {
 public:
  /// Throws std::invalid_argument unless op is Hermitian and op^2 = 1 within 1e-10.
  explicit DichotomicObservable(LocalOperator op);

  [[nodiscard]] Region region() const noexcept { return op_.region(); }
  [[nodiscard]] const LocalOperator& op() const noexcept { return op_; }
  [[nodiscard]] const Matrix& matrix() const noexcept { return op_.matrix(); }

 private:
  LocalOperator op_;
};

struct ChshSettings {
  DichotomicObservable a0;
  DichotomicObservable a1;
  DichotomicObservable b0;
  DichotomicObservable b1;
};

struct ChshResult {
  double value = 0.0;
  ChshSettings settings;
  std::size_t iterations = 0;  ///< sweeps of the best run
  std::size_t restarts_used = 0;
  bool converged = false;
};

struct SeeSawOptions {
  bool ssr = false;
  std::size_t restarts = 32;
  std::uint64_t seed = 0;
  std::size_t max_sweeps = 500;
  double tolerance = 1e-10;
};

/// Throws std::invalid_argument on region or space mismatches.
[[nodiscard]] double chsh_value(const DensityMatrix& rho, const ChshSettings& settings);

/// Observable sign(effective) with zero eigenvalues mapped to +1. With `ssr`
/// the operator is first projected onto the sector blocks and the sign is
/// taken within each block.
[[nodiscard]] DichotomicObservable sign_observable(const LocalOperator& effective, bool ssr);

/// Best response of the region opposite to the fixed pair: returns
/// (sign F0, sign F1) for F0 = Tr[rho (X0 + X1)], F1 = Tr[rho (X0 - X1)],
/// where (X0, X1) are the fixed observables and the trace runs over their
/// region. For a fixed B pair this yields (A0, A1); for a fixed A pair (B0, B1).
[[nodiscard]] std::pair<DichotomicObservable, DichotomicObservable> optimal_response(
    const DensityMatrix& rho, const DichotomicObservable& fixed0,
    const DichotomicObservable& fixed1, bool ssr);

/// Random dichotomic observable: sign of a Ginibre-Hermitian matrix (blockwise under ssr).
[[nodiscard]] DichotomicObservable random_dichotomic(const SpaceHandle& space, Region region,
                                                     bool ssr, std::mt19937_64& rng);

[[nodiscard]] ChshResult maximize_chsh(const DensityMatrix& rho, const SeeSawOptions& options);
[[nodiscard]] ChshResult maximize_chsh(const DensityMatrix& rho, bool ssr, std::size_t restarts,
                                       std::uint64_t seed);

/// Local basis indices spanning a qubit on each side: a[0] ~ |0>, a[1] ~ |1>.
struct QubitBlock {
  std::array<std::size_t, 2> a{0, 1};
  std::array<std::size_t, 2> b{0, 1};
};

/// 2 sqrt(m1 + m2) for the two largest eigenvalues of T^T T, where
/// T_mn = tr[rho sigma_m (x) sigma_n]: the largest CHSH value reachable with
/// traceless qubit observables.
[[nodiscard]] double horodecki_two_qubit(const Eigen::Matrix4cd& rho);
/// Restricts rho to the block first; rejects states with more than 1e-10
/// weight outside it.
[[nodiscard]] double horodecki_two_qubit(const DensityMatrix& rho, const QubitBlock& block);

}  // namespace ssrbell
