#include "ssrbell/operators.hpp"

#include <Eigen/Eigenvalues>

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace ssrbell {

namespace {

void require_dimension(std::size_t expected, Eigen::Index rows, Eigen::Index cols,
                       const char* what) {
  if (rows != cols || static_cast<std::size_t>(rows) != expected) {
    std::ostringstream os;
    os << what << ": expected " << expected << "x" << expected << ", got " << rows << "x" << cols;
    throw std::invalid_argument(os.str());
  }
}

}  // namespace

StateVector::StateVector(SpaceHandle space, Vector amplitudes)
    : space_(std::move(space)), amplitudes_(std::move(amplitudes)) {
  if (!space_) throw std::invalid_argument("state vector without a space");
  if (static_cast<std::size_t>(amplitudes_.size()) != space_->dimension()) {
    throw std::invalid_argument("state vector length does not match the space dimension");
  }
}

StateVector StateVector::vacuum(SpaceHandle space) {
  Vector v = Vector::Zero(static_cast<Eigen::Index>(space->dimension()));
  v(0) = 1.0;  // the all-zero occupation vector is first in lexicographic order
  return StateVector(std::move(space), std::move(v));
}

Complex StateVector::amplitude(const OccupationState& state) const {
  return amplitudes_(static_cast<Eigen::Index>(space_->index_of(state)));
}

StateVector StateVector::normalized() const {
  const double n = norm();
  if (n == 0.0) throw std::invalid_argument("cannot normalize the zero vector");
  return StateVector(space_, amplitudes_ / n);
}

StateVector apply_creation(const StateVector& ket, std::size_t mode) {
  const FockSpace& space = ket.space();
  if (mode >= space.modes().size()) throw std::out_of_range("mode index out of range");
  Vector out = Vector::Zero(ket.amplitudes().size());
  for (std::size_t k = 0; k < space.dimension(); ++k) {
    const Complex c = ket.amplitudes()(static_cast<Eigen::Index>(k));
    if (c == Complex{}) continue;
    OccupationState raised = space.state(k);
    const int n = raised.occupations[mode]++;
    const auto target = space.find(raised);
    if (!target) throw std::out_of_range("creation operator leaves the truncated basis");
    out(static_cast<Eigen::Index>(*target)) += std::sqrt(static_cast<double>(n + 1)) * c;
  }
  return StateVector(ket.handle(), std::move(out));
}

Operator::Operator(SpaceHandle space, Matrix matrix)
    : space_(std::move(space)), matrix_(std::move(matrix)) {
  if (!space_) throw std::invalid_argument("operator without a space");
  require_dimension(space_->dimension(), matrix_.rows(), matrix_.cols(), "operator");
}

LocalOperator::LocalOperator(SpaceHandle space, Region region, Matrix matrix)
    : space_(std::move(space)), region_(region), matrix_(std::move(matrix)) {
  if (!space_) throw std::invalid_argument("local operator without a space");
  require_dimension(space_->local(region_).dimension(), matrix_.rows(), matrix_.cols(),
                    "local operator");
}

LocalOperator LocalOperator::identity(SpaceHandle space, Region region) {
  const auto d = static_cast<Eigen::Index>(space->local(region).dimension());
  return LocalOperator(std::move(space), region, Matrix::Identity(d, d));
}

DensityMatrix::DensityMatrix(SpaceHandle space, Matrix matrix)
    : space_(std::move(space)), matrix_(std::move(matrix)) {
  if (!space_) throw std::invalid_argument("density matrix without a space");
  require_dimension(space_->dimension(), matrix_.rows(), matrix_.cols(), "density matrix");
  if (!is_hermitian(matrix_, kHermitianTolerance)) {
    throw std::invalid_argument("density matrix is not Hermitian");
  }
  const double trace_error = std::abs(matrix_.trace() - Complex{1.0});
  if (trace_error > kTraceTolerance) {
    throw std::invalid_argument("density matrix trace differs from 1 by " +
                                std::to_string(trace_error));
  }
  Eigen::SelfAdjointEigenSolver<Matrix> solver(hermitian_part(matrix_), Eigen::EigenvaluesOnly);
  if (solver.eigenvalues().minCoeff() < -kPsdTolerance) {
    throw std::invalid_argument("density matrix has a negative eigenvalue " +
                                std::to_string(solver.eigenvalues().minCoeff()));
  }
}

DensityMatrix DensityMatrix::pure(const StateVector& ket) {
  if (std::abs(ket.norm() - 1.0) > kTraceTolerance) {
    throw std::invalid_argument("pure state is not normalized");
  }
  const Vector& v = ket.amplitudes();
  return DensityMatrix(ket.handle(), v * v.adjoint());
}

double DensityMatrix::purity() const { return (matrix_ * matrix_).trace().real(); }

Matrix kron(const Matrix& left, const Matrix& right) {
  Matrix out(left.rows() * right.rows(), left.cols() * right.cols());
  for (Eigen::Index i = 0; i < left.rows(); ++i) {
    for (Eigen::Index j = 0; j < left.cols(); ++j) {
      out.block(i * right.rows(), j * right.cols(), right.rows(), right.cols()) = left(i, j) * right;
    }
  }
  return out;
}

Matrix hermitian_part(const Matrix& m) { return 0.5 * (m + m.adjoint()); }

bool is_hermitian(const Matrix& m, double tolerance) {
  if (m.rows() != m.cols()) return false;
  return (m - m.adjoint()).cwiseAbs().maxCoeff() <= tolerance;
}

Operator embed_local(const LocalOperator& op) {
  const FockSpace& space = op.space();
  const auto other_dim = static_cast<Eigen::Index>(space.local(other(op.region())).dimension());
  const Matrix id = Matrix::Identity(other_dim, other_dim);
  Matrix global = op.region() == Region::A ? kron(op.matrix(), id) : kron(id, op.matrix());
  return Operator(op.handle(), std::move(global));
}

LocalOperator partial_trace(const DensityMatrix& rho, Region keep) {
  const FockSpace& space = rho.space();
  const std::size_t dim_a = space.local(Region::A).dimension();
  const std::size_t dim_b = space.local(Region::B).dimension();
  const Matrix& m = rho.matrix();
  const std::size_t dim_keep = keep == Region::A ? dim_a : dim_b;
  Matrix reduced = Matrix::Zero(static_cast<Eigen::Index>(dim_keep),
                                static_cast<Eigen::Index>(dim_keep));
  for (std::size_t i = 0; i < dim_keep; ++i) {
    for (std::size_t j = 0; j < dim_keep; ++j) {
      Complex sum{};
      if (keep == Region::A) {
        for (std::size_t b = 0; b < dim_b; ++b) {
          sum += m(static_cast<Eigen::Index>(space.global_index(i, b)),
                   static_cast<Eigen::Index>(space.global_index(j, b)));
        }
      } else {
        for (std::size_t a = 0; a < dim_a; ++a) {
          sum += m(static_cast<Eigen::Index>(space.global_index(a, i)),
                   static_cast<Eigen::Index>(space.global_index(a, j)));
        }
      }
      reduced(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = sum;
    }
  }
  return LocalOperator(rho.handle(), keep, std::move(reduced));
}

LocalOperator contract_local(const Matrix& rho, const LocalOperator& op) {
  const FockSpace& space = op.space();
  const auto dim_a = static_cast<Eigen::Index>(space.local(Region::A).dimension());
  const auto dim_b = static_cast<Eigen::Index>(space.local(Region::B).dimension());
  const Matrix& x = op.matrix();
  if (op.region() == Region::B) {
    // F(a, a') = sum_{b, b'} rho(a b, a' b') x(b', b)
    Matrix f = Matrix::Zero(dim_a, dim_a);
    for (Eigen::Index a = 0; a < dim_a; ++a) {
      for (Eigen::Index ap = 0; ap < dim_a; ++ap) {
        f(a, ap) = (rho.block(a * dim_b, ap * dim_b, dim_b, dim_b).cwiseProduct(x.transpose())).sum();
      }
    }
    return LocalOperator(op.handle(), Region::A, std::move(f));
  }
  // G(b, b') = sum_{a, a'} rho(a b, a' b') x(a', a)
  Matrix g = Matrix::Zero(dim_b, dim_b);
  for (Eigen::Index a = 0; a < dim_a; ++a) {
    for (Eigen::Index ap = 0; ap < dim_a; ++ap) {
      const Complex w = x(ap, a);
      if (w == Complex{}) continue;
      g += w * rho.block(a * dim_b, ap * dim_b, dim_b, dim_b);
    }
  }
  return LocalOperator(op.handle(), Region::B, std::move(g));
}

Complex product_expectation(const Matrix& rho, const LocalOperator& a, const LocalOperator& b) {
  if (a.region() == b.region()) {
    throw std::invalid_argument("product expectation needs operators on opposite regions");
  }
  const LocalOperator& on_b = a.region() == Region::B ? a : b;
  const LocalOperator& on_a = a.region() == Region::A ? a : b;
  const LocalOperator f = contract_local(rho, on_b);
  return (f.matrix() * on_a.matrix()).trace();
}

}  // namespace ssrbell
