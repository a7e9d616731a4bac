#include "ssrbell/bell.hpp"

#include "ssrbell/seeding.hpp"
#include "ssrbell/ssr.hpp"

#include <Eigen/Eigenvalues>

#include <cmath>
#include <numeric>
#include <optional>
#include <stdexcept>

namespace ssrbell {

namespace {

constexpr double kObservableTolerance = 1e-10;
constexpr double kSignTie = 1e-13;

const std::array<Eigen::Matrix2cd, 3>& pauli() {
  static const std::array<Eigen::Matrix2cd, 3> sigma = [] {
    const Complex i{0.0, 1.0};
    Eigen::Matrix2cd x, y, z;
    x << 0, 1, 1, 0;
    y << 0, -i, i, 0;
    z << 1, 0, 0, -1;
    return std::array<Eigen::Matrix2cd, 3>{x, y, z};
  }();
  return sigma;
}

void require_same_space(const DensityMatrix& rho, const DichotomicObservable& obs,
                        Region expected) {
  if (obs.region() != expected) {
    throw std::invalid_argument(std::string("observable expected on region ") + to_string(expected));
  }
  if (obs.op().local().dimension() != rho.space().local(expected).dimension()) {
    throw std::invalid_argument("observable dimension does not match the state's local space");
  }
}

}  // namespace

DichotomicObservable::DichotomicObservable(LocalOperator op) : op_(std::move(op)) {
  const Matrix& m = op_.matrix();
  if (!is_hermitian(m, kObservableTolerance)) {
    throw std::invalid_argument("dichotomic observable is not Hermitian");
  }
  const Matrix residual = m * m - Matrix::Identity(m.rows(), m.cols());
  if (residual.cwiseAbs().maxCoeff() > kObservableTolerance) {
    throw std::invalid_argument("dichotomic observable does not square to the identity");
  }
}

double chsh_value(const DensityMatrix& rho, const ChshSettings& s) {
  require_same_space(rho, s.a0, Region::A);
  require_same_space(rho, s.a1, Region::A);
  require_same_space(rho, s.b0, Region::B);
  require_same_space(rho, s.b1, Region::B);
  const LocalOperator sum(s.b0.op().handle(), Region::B, s.b0.matrix() + s.b1.matrix());
  const LocalOperator diff(s.b0.op().handle(), Region::B, s.b0.matrix() - s.b1.matrix());
  const Complex value = (contract_local(rho.matrix(), sum).matrix() * s.a0.matrix()).trace() +
                        (contract_local(rho.matrix(), diff).matrix() * s.a1.matrix()).trace();
  if (std::abs(value.imag()) > 1e-10) {
    throw std::logic_error("CHSH expectation has an imaginary part");
  }
  return value.real();
}

DichotomicObservable sign_observable(const LocalOperator& effective, bool ssr) {
  const Matrix m = hermitian_part(effective.matrix());
  const LocalSpace& local = effective.local();
  std::vector<std::vector<std::size_t>> blocks;
  if (ssr) {
    blocks = local.sector_blocks();
  } else {
    blocks.emplace_back(local.dimension());
    std::iota(blocks.front().begin(), blocks.front().end(), std::size_t{0});
  }
  Matrix out = Matrix::Zero(m.rows(), m.cols());
  for (const auto& block : blocks) {
    const auto n = static_cast<Eigen::Index>(block.size());
    Matrix sub(n, n);
    for (Eigen::Index i = 0; i < n; ++i) {
      for (Eigen::Index j = 0; j < n; ++j) {
        sub(i, j) = m(static_cast<Eigen::Index>(block[i]), static_cast<Eigen::Index>(block[j]));
      }
    }
    Eigen::SelfAdjointEigenSolver<Matrix> solver(sub);
    Eigen::VectorXd signs(n);
    for (Eigen::Index i = 0; i < n; ++i) signs(i) = solver.eigenvalues()(i) < -kSignTie ? -1.0 : 1.0;
    const Matrix& v = solver.eigenvectors();
    const Matrix s = hermitian_part(v * signs.asDiagonal() * v.adjoint());
    for (Eigen::Index i = 0; i < n; ++i) {
      for (Eigen::Index j = 0; j < n; ++j) {
        out(static_cast<Eigen::Index>(block[i]), static_cast<Eigen::Index>(block[j])) = s(i, j);
      }
    }
  }
  return DichotomicObservable(LocalOperator(effective.handle(), effective.region(), std::move(out)));
}

std::pair<DichotomicObservable, DichotomicObservable> optimal_response(
    const DensityMatrix& rho, const DichotomicObservable& fixed0,
    const DichotomicObservable& fixed1, bool ssr) {
  if (fixed0.region() != fixed1.region()) {
    throw std::invalid_argument("fixed observables must act on the same region");
  }
  require_same_space(rho, fixed0, fixed0.region());
  require_same_space(rho, fixed1, fixed1.region());
  const LocalOperator sum(fixed0.op().handle(), fixed0.region(), fixed0.matrix() + fixed1.matrix());
  const LocalOperator diff(fixed0.op().handle(), fixed0.region(), fixed0.matrix() - fixed1.matrix());
  const LocalOperator f0 = contract_local(rho.matrix(), sum);
  const LocalOperator f1 = contract_local(rho.matrix(), diff);
  // Build on the state's space handle so later checks see one space.
  const LocalOperator e0(rho.handle(), f0.region(), f0.matrix());
  const LocalOperator e1(rho.handle(), f1.region(), f1.matrix());
  return {sign_observable(e0, ssr), sign_observable(e1, ssr)};
}

DichotomicObservable random_dichotomic(const SpaceHandle& space, Region region, bool ssr,
                                       std::mt19937_64& rng) {
  std::normal_distribution<double> normal(0.0, 1.0);
  const auto d = static_cast<Eigen::Index>(space->local(region).dimension());
  Matrix g(d, d);
  for (Eigen::Index i = 0; i < d; ++i) {
    for (Eigen::Index j = 0; j < d; ++j) g(i, j) = Complex{normal(rng), normal(rng)};
  }
  return sign_observable(LocalOperator(space, region, hermitian_part(g)), ssr);
}

ChshResult maximize_chsh(const DensityMatrix& rho, const SeeSawOptions& options) {
  if (options.restarts < 1) throw std::invalid_argument("see-saw needs at least one restart");
  const SpaceHandle& space = rho.handle();
  std::optional<ChshResult> best;
  for (std::size_t r = 0; r < options.restarts; ++r) {
    std::mt19937_64 rng(derive_seed(options.seed, r));
    ChshSettings s{random_dichotomic(space, Region::A, options.ssr, rng),
                   random_dichotomic(space, Region::A, options.ssr, rng),
                   random_dichotomic(space, Region::B, options.ssr, rng),
                   random_dichotomic(space, Region::B, options.ssr, rng)};
    double value = chsh_value(rho, s);
    bool converged = false;
    std::size_t sweeps = 0;
    while (sweeps < options.max_sweeps) {
      ++sweeps;
      auto [a0, a1] = optimal_response(rho, s.b0, s.b1, options.ssr);
      s.a0 = std::move(a0);
      s.a1 = std::move(a1);
      auto [b0, b1] = optimal_response(rho, s.a0, s.a1, options.ssr);
      s.b0 = std::move(b0);
      s.b1 = std::move(b1);
      const double next = chsh_value(rho, s);
      const double gain = next - value;
      value = next;
      if (gain < options.tolerance) {
        converged = true;
        break;
      }
    }
    if (!best || value > best->value) {
      best = ChshResult{value, s, sweeps, 0, converged};
    }
  }
  best->restarts_used = options.restarts;
  return *best;
}

ChshResult maximize_chsh(const DensityMatrix& rho, bool ssr, std::size_t restarts,
                         std::uint64_t seed) {
  SeeSawOptions options;
  options.ssr = ssr;
  options.restarts = restarts;
  options.seed = seed;
  return maximize_chsh(rho, options);
}

double horodecki_two_qubit(const Eigen::Matrix4cd& rho) {
  const auto& sigma = pauli();
  Eigen::Matrix3d t;
  for (int m = 0; m < 3; ++m) {
    for (int n = 0; n < 3; ++n) {
      const Matrix op = kron(sigma[static_cast<std::size_t>(m)], sigma[static_cast<std::size_t>(n)]);
      t(m, n) = (rho * op).trace().real();
    }
  }
  Eigen::SelfAdjointEigenSolver<Eigen::Matrix3d> solver(t.transpose() * t, Eigen::EigenvaluesOnly);
  const auto& ev = solver.eigenvalues();  // ascending
  return 2.0 * std::sqrt(std::max(0.0, ev(1) + ev(2)));
}

double horodecki_two_qubit(const DensityMatrix& rho, const QubitBlock& block) {
  const FockSpace& space = rho.space();
  for (std::size_t k : block.a) {
    if (k >= space.local(Region::A).dimension()) throw std::invalid_argument("qubit block index out of range");
  }
  for (std::size_t k : block.b) {
    if (k >= space.local(Region::B).dimension()) throw std::invalid_argument("qubit block index out of range");
  }
  std::array<Eigen::Index, 4> index{};
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      index[static_cast<std::size_t>(2 * i + j)] = static_cast<Eigen::Index>(
          space.global_index(block.a[static_cast<std::size_t>(i)], block.b[static_cast<std::size_t>(j)]));
    }
  }
  Eigen::Matrix4cd sub;
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) sub(i, j) = rho.matrix()(index[static_cast<std::size_t>(i)], index[static_cast<std::size_t>(j)]);
  }
  const double leak = 1.0 - sub.trace().real();
  if (leak > 1e-10) {
    throw std::invalid_argument("state has weight " + std::to_string(leak) + " outside the qubit block");
  }
  return horodecki_two_qubit(sub);
}

}  // namespace ssrbell
