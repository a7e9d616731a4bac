#include "ssrbell/entanglement.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

#include <stdexcept>

namespace ssrbell {

Vector SchmidtDecomposition::reconstruct() const {
  if (coefficients.empty()) return {};
  const Eigen::Index dim_b = right.front().size();
  Vector out = Vector::Zero(left.front().size() * dim_b);
  for (std::size_t i = 0; i < coefficients.size(); ++i) {
    for (Eigen::Index a = 0; a < left[i].size(); ++a) {
      out.segment(a * dim_b, dim_b) += coefficients[i] * left[i](a) * right[i];
    }
  }
  return out;
}

std::size_t SchmidtDecomposition::rank(double threshold) const {
  std::size_t n = 0;
  for (double c : coefficients) n += c > threshold ? 1 : 0;
  return n;
}

SchmidtDecomposition schmidt_decompose(const StateVector& psi) {
  const FockSpace& space = psi.space();
  const auto dim_a = static_cast<Eigen::Index>(space.local(Region::A).dimension());
  const auto dim_b = static_cast<Eigen::Index>(space.local(Region::B).dimension());
  // Row a holds the amplitudes of |a>|b> over b.
  Matrix amplitudes(dim_a, dim_b);
  for (Eigen::Index a = 0; a < dim_a; ++a) {
    amplitudes.row(a) = psi.amplitudes().segment(a * dim_b, dim_b).transpose();
  }
  Eigen::JacobiSVD<Matrix> svd(amplitudes, Eigen::ComputeFullU | Eigen::ComputeFullV);
  SchmidtDecomposition out;
  const auto& values = svd.singularValues();
  for (Eigen::Index i = 0; i < values.size(); ++i) {
    out.coefficients.push_back(values(i));
    out.left.push_back(svd.matrixU().col(i));
    out.right.push_back(svd.matrixV().col(i).conjugate());
  }
  return out;
}

SchmidtDecomposition schmidt_decompose(const DensityMatrix& rho) {
  if (rho.purity() < 1.0 - 1e-10) {
    throw std::invalid_argument("Schmidt decomposition needs a pure state");
  }
  Eigen::SelfAdjointEigenSolver<Matrix> solver(hermitian_part(rho.matrix()));
  const Eigen::Index top = solver.eigenvalues().size() - 1;
  return schmidt_decompose(StateVector(rho.handle(), solver.eigenvectors().col(top)));
}

Matrix partial_transpose(const Matrix& m, const FockSpace& space) {
  const auto dim_a = static_cast<Eigen::Index>(space.local(Region::A).dimension());
  const auto dim_b = static_cast<Eigen::Index>(space.local(Region::B).dimension());
  Matrix out(m.rows(), m.cols());
  for (Eigen::Index a = 0; a < dim_a; ++a) {
    for (Eigen::Index ap = 0; ap < dim_a; ++ap) {
      out.block(a * dim_b, ap * dim_b, dim_b, dim_b) =
          m.block(a * dim_b, ap * dim_b, dim_b, dim_b).transpose();
    }
  }
  return out;
}

Operator partial_transpose(const DensityMatrix& rho) {
  return Operator(rho.handle(), partial_transpose(rho.matrix(), rho.space()));
}

namespace {

Eigen::VectorXd partial_transpose_spectrum(const DensityMatrix& rho) {
  Eigen::SelfAdjointEigenSolver<Matrix> solver(
      hermitian_part(partial_transpose(rho.matrix(), rho.space())), Eigen::EigenvaluesOnly);
  return solver.eigenvalues();
}

}  // namespace

double negativity(const DensityMatrix& rho, double floor) {
  double total = 0.0;
  for (double lambda : partial_transpose_spectrum(rho)) {
    if (lambda < -floor) total -= lambda;
  }
  return total;
}

double min_partial_transpose_eigenvalue(const DensityMatrix& rho) {
  return partial_transpose_spectrum(rho).minCoeff();
}

bool is_ppt(const DensityMatrix& rho, double tolerance) {
  return min_partial_transpose_eigenvalue(rho) >= -tolerance;
}

}  // namespace ssrbell
