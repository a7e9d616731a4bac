#pragma once

/**
 * @file operators.hpp
 * @brief Kets, operators and density matrices over a FockSpace basis.
 *
 * All matrices are dense and stored in the canonical basis order of the
 * space they reference. Local operators act on one region's local basis and
 * are lifted to the global space with embed_local().
 */

#include "ssrbell/fock_space.hpp"

namespace ssrbell {

inline constexpr double kHermitianTolerance = 1e-12;
inline constexpr double kTraceTolerance = 1e-12;
inline constexpr double kPsdTolerance = 1e-10;

/// Amplitude vector over the global basis. Not necessarily normalized.
class StateVector {
 public:
  StateVector(SpaceHandle space, Vector amplitudes);

  [[nodiscard]] static StateVector vacuum(SpaceHandle space);

  [[nodiscard]] const FockSpace& space() const noexcept { return *space_; }
  [[nodiscard]] const SpaceHandle& handle() const noexcept { return space_; }
  [[nodiscard]] const Vector& amplitudes() const noexcept { return amplitudes_; }
  [[nodiscard]] Complex amplitude(const OccupationState& state) const;
  [[nodiscard]] double norm() const { return amplitudes_.norm(); }
  [[nodiscard]] StateVector normalized() const;

 private:
  SpaceHandle space_;
  Vector amplitudes_;
};

/// Bosonic creation operator on one mode (index into space.modes()).
/// Throws std::out_of_range if the result leaves the truncated basis.
[[nodiscard]] StateVector apply_creation(const StateVector& ket, std::size_t mode);

class Operator {
 public:
  Operator(SpaceHandle space, Matrix matrix);

  [[nodiscard]] const FockSpace& space() const noexcept { return *space_; }
  [[nodiscard]] const SpaceHandle& handle() const noexcept { return space_; }
  [[nodiscard]] const Matrix& matrix() const noexcept { return matrix_; }

 private:
  SpaceHandle space_;
  Matrix matrix_;
};

/// Operator on the local space of one region.
class LocalOperator {
 public:
  /// Throws std::invalid_argument on a dimension mismatch with the local space.
  LocalOperator(SpaceHandle space, Region region, Matrix matrix);

  [[nodiscard]] static LocalOperator identity(SpaceHandle space, Region region);

  [[nodiscard]] const FockSpace& space() const noexcept { return *space_; }
  [[nodiscard]] const SpaceHandle& handle() const noexcept { return space_; }
  [[nodiscard]] Region region() const noexcept { return region_; }
  [[nodiscard]] const LocalSpace& local() const noexcept { return space_->local(region_); }
  [[nodiscard]] const Matrix& matrix() const noexcept { return matrix_; }

 private:
  SpaceHandle space_;
  Region region_;
  Matrix matrix_;
};

/// A validated state: Hermitian, positive semidefinite and unit trace.
class DensityMatrix {
 public:
  /// Throws std::invalid_argument if any density-matrix invariant fails.
  DensityMatrix(SpaceHandle space, Matrix matrix);

  /// |psi><psi| of a ket normalized to 1e-12.
  [[nodiscard]] static DensityMatrix pure(const StateVector& ket);

  [[nodiscard]] const FockSpace& space() const noexcept { return *space_; }
  [[nodiscard]] const SpaceHandle& handle() const noexcept { return space_; }
  [[nodiscard]] const Matrix& matrix() const noexcept { return matrix_; }
  [[nodiscard]] double purity() const;

 private:
  SpaceHandle space_;
  Matrix matrix_;
};

[[nodiscard]] Matrix kron(const Matrix& left, const Matrix& right);
[[nodiscard]] Matrix hermitian_part(const Matrix& m);
[[nodiscard]] bool is_hermitian(const Matrix& m, double tolerance);

/// op (x) 1 or 1 (x) op in the global basis.
[[nodiscard]] Operator embed_local(const LocalOperator& op);

/// Reduced state of the kept region.
[[nodiscard]] LocalOperator partial_trace(const DensityMatrix& rho, Region keep);

/// Tr_R[rho (op on R)], an operator on the region opposite to R = op.region().
[[nodiscard]] LocalOperator contract_local(const Matrix& rho, const LocalOperator& op);

/// tr[rho (a (x) b)] for local operators on opposite regions.
[[nodiscard]] Complex product_expectation(const Matrix& rho, const LocalOperator& a,
                                          const LocalOperator& b);

}  // namespace ssrbell
