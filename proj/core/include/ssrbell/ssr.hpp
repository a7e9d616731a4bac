#pragma once

/**
 * @file ssr.hpp
 * @brief Particle-number superselection: sector dephasing and allowed operations.
 *
 * A superselection sector is the set of basis states sharing the same
 * particle count of every species in region A and in region B. Local
 * operations may not create or detect coherence between different sectors,
 * so the state they effectively act on is the sector-block-diagonal part of
 * rho.
 */

#include "ssrbell/states.hpp"

#include <cstdint>
#include <utility>
#include <vector>

namespace ssrbell {

inline constexpr double kBlockTolerance = 1e-12;

/// rho -> sum_k P_k rho P_k over joint (A sector, B sector) blocks.
class DephasingMap {
 public:
  explicit DephasingMap(SpaceHandle space);

  [[nodiscard]] const FockSpace& space() const noexcept { return *space_; }
  /// Disjoint basis-index blocks covering the basis.
  [[nodiscard]] const std::vector<std::vector<std::size_t>>& blocks() const noexcept {
    return blocks_;
  }

  [[nodiscard]] Matrix apply(const Matrix& m) const;
  [[nodiscard]] DensityMatrix apply(const DensityMatrix& rho) const;

 private:
  SpaceHandle space_;
  std::vector<std::size_t> block_of_;
  std::vector<std::vector<std::size_t>> blocks_;
};

[[nodiscard]] DensityMatrix ssr_dephase(const DensityMatrix& rho);

/// True iff the Hermitian local operator is block-diagonal over the local
/// sectors. Throws std::invalid_argument for non-Hermitian input.
[[nodiscard]] bool is_ssr_allowed(const LocalOperator& op);

/// Orthogonal (Frobenius) projection onto sector-block-diagonal operators.
[[nodiscard]] LocalOperator project_block_diagonal(const LocalOperator& op);

/// Dephased state of distinguishable particles assembled directly from the
/// region assignments kappa in {A,B}^N with weights prod_i |amp_i(kappa_i)|^2.
/// Rejects N > 12.
[[nodiscard]] DensityMatrix appendix_effective_state(const SeparableSpec& spec, SpaceHandle space);

/// sum_c w_c sum_n |C_n|^2 |n><n|_A (x) |N-n><N-n|_B with
/// |C_n|^2 = binom(N, n) |alpha|^{2n} |beta|^{2(N-n)}.
[[nodiscard]] DensityMatrix bosonic_effective_state(const SeparableSpec& spec, SpaceHandle space);

/// Average of U(theta) rho U(theta)^+ over uniformly random phases
/// theta_{region,species}, U = exp(i sum theta N_{region,species}).
[[nodiscard]] DensityMatrix phase_twirl_sample(const DensityMatrix& rho, std::size_t samples,
                                               std::uint64_t seed);

/// Population of every joint sector with non-zero weight, in sector order.
[[nodiscard]] std::vector<std::pair<SectorLabel, double>> sector_populations(
    const DensityMatrix& rho, double threshold = 1e-15);

}  // namespace ssrbell
