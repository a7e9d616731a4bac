#include "ssrbell/ssr.hpp"

#include <cmath>
#include <map>
#include <numbers>
#include <random>
#include <stdexcept>

namespace ssrbell {

DephasingMap::DephasingMap(SpaceHandle space) : space_(std::move(space)) {
  std::map<std::size_t, std::size_t> block_index;
  block_of_.resize(space_->dimension());
  for (std::size_t k = 0; k < space_->dimension(); ++k) {
    auto [it, inserted] = block_index.try_emplace(space_->joint_sector_id(k), blocks_.size());
    if (inserted) blocks_.emplace_back();
    blocks_[it->second].push_back(k);
    block_of_[k] = it->second;
  }
}

Matrix DephasingMap::apply(const Matrix& m) const {
  if (static_cast<std::size_t>(m.rows()) != space_->dimension() || m.rows() != m.cols()) {
    throw std::invalid_argument("dephasing input does not match the space dimension");
  }
  Matrix out = Matrix::Zero(m.rows(), m.cols());
  for (const auto& block : blocks_) {
    for (std::size_t i : block) {
      for (std::size_t j : block) {
        out(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) =
            m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j));
      }
    }
  }
  return out;
}

DensityMatrix DephasingMap::apply(const DensityMatrix& rho) const {
  if (rho.space().dimension() != space_->dimension()) {
    throw std::invalid_argument("density matrix belongs to a different space");
  }
  return DensityMatrix(rho.handle(), apply(rho.matrix()));
}

DensityMatrix ssr_dephase(const DensityMatrix& rho) { return DephasingMap(rho.handle()).apply(rho); }

bool is_ssr_allowed(const LocalOperator& op) {
  if (!is_hermitian(op.matrix(), kHermitianTolerance)) {
    throw std::invalid_argument("SSR check needs a Hermitian operator");
  }
  const LocalSpace& local = op.local();
  const auto d = static_cast<Eigen::Index>(local.dimension());
  for (Eigen::Index i = 0; i < d; ++i) {
    for (Eigen::Index j = 0; j < d; ++j) {
      if (local.sector_id(static_cast<std::size_t>(i)) != local.sector_id(static_cast<std::size_t>(j)) &&
          std::abs(op.matrix()(i, j)) >= kBlockTolerance) {
        return false;
      }
    }
  }
  return true;
}

LocalOperator project_block_diagonal(const LocalOperator& op) {
  const LocalSpace& local = op.local();
  Matrix m = op.matrix();
  const auto d = static_cast<Eigen::Index>(local.dimension());
  for (Eigen::Index i = 0; i < d; ++i) {
    for (Eigen::Index j = 0; j < d; ++j) {
      if (local.sector_id(static_cast<std::size_t>(i)) != local.sector_id(static_cast<std::size_t>(j))) {
        m(i, j) = 0.0;
      }
    }
  }
  return LocalOperator(op.handle(), op.region(), std::move(m));
}

DensityMatrix appendix_effective_state(const SeparableSpec& spec, SpaceHandle space) {
  validate(spec);
  if (spec.kind != SeparableKind::Distinguishable) {
    throw std::invalid_argument("the region-assignment construction needs distinguishable particles");
  }
  const int n = spec.particle_count();
  if (n > 12) throw std::invalid_argument("region-assignment enumeration is capped at N = 12");

  std::vector<std::size_t> mode_a, mode_b;
  for (int i = 0; i < n; ++i) {
    mode_a.push_back(space->mode_index({Region::A, i, i}));
    mode_b.push_back(space->mode_index({Region::B, i, i}));
  }

  const auto dim = static_cast<Eigen::Index>(space->dimension());
  Matrix rho = Matrix::Zero(dim, dim);
  const std::uint32_t assignments = 1u << n;
  for (std::uint32_t kappa = 0; kappa < assignments; ++kappa) {
    // bit i set: particle i sits in region B
    std::vector<int> occupations(space->modes().size(), 0);
    for (int i = 0; i < n; ++i) {
      const bool in_b = (kappa >> i) & 1u;
      occupations[in_b ? mode_b[i] : mode_a[i]] = 1;
    }
    double weight = 0.0;
    for (const auto& component : spec.components) {
      double p = component.weight;
      for (int i = 0; i < n; ++i) {
        const auto& amp = component.amplitudes[static_cast<std::size_t>(i)];
        p *= ((kappa >> i) & 1u) ? std::norm(amp.beta) : std::norm(amp.alpha);
      }
      weight += p;
    }
    const auto k = static_cast<Eigen::Index>(space->index_of(OccupationState{occupations}));
    rho(k, k) += weight;
  }
  return DensityMatrix(std::move(space), std::move(rho));
}

DensityMatrix bosonic_effective_state(const SeparableSpec& spec, SpaceHandle space) {
  validate(spec);
  if (spec.kind != SeparableKind::Bosonic) {
    throw std::invalid_argument("binomial occupation mixture needs a bosonic spec");
  }
  if (space->local(Region::A).modes().size() != 1 || space->local(Region::B).modes().size() != 1) {
    throw std::invalid_argument("bosonic space needs exactly one mode per region");
  }
  const auto dim = static_cast<Eigen::Index>(space->dimension());
  Matrix rho = Matrix::Zero(dim, dim);
  for (const auto& component : spec.components) {
    const int big_n = component.particles;
    const double pa = std::norm(component.amplitudes.front().alpha);
    const double pb = std::norm(component.amplitudes.front().beta);
    double binomial = 1.0;
    for (int n = 0; n <= big_n; ++n) {
      if (n > 0) binomial = binomial * (big_n - n + 1) / n;
      const double weight = binomial * std::pow(pa, n) * std::pow(pb, big_n - n);
      // canonical order: the A mode precedes the B mode
      const auto k = static_cast<Eigen::Index>(space->index_of(OccupationState{{n, big_n - n}}));
      rho(k, k) += component.weight * weight;
    }
  }
  return DensityMatrix(std::move(space), std::move(rho));
}

DensityMatrix phase_twirl_sample(const DensityMatrix& rho, std::size_t samples, std::uint64_t seed) {
  if (samples < 1) throw std::invalid_argument("phase twirl needs at least one sample");
  const FockSpace& space = rho.space();
  const std::size_t sectors = space.joint_sector_count();

  // Number vector (N_{A,s}..., N_{B,s}...) of each joint sector.
  std::vector<std::vector<int>> numbers(sectors);
  std::vector<bool> present(sectors, false);
  for (std::size_t k = 0; k < space.dimension(); ++k) {
    const std::size_t id = space.joint_sector_id(k);
    if (present[id]) continue;
    present[id] = true;
    const SectorLabel label = sector_of(space.state(k), space);
    for (int s : space.species()) numbers[id].push_back(label.count(Region::A, s));
    for (int s : space.species()) numbers[id].push_back(label.count(Region::B, s));
  }

  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> angle(0.0, 2.0 * std::numbers::pi);
  const std::size_t n_phases = 2 * space.species().size();
  std::vector<double> theta(n_phases);
  std::vector<double> phase(sectors);
  std::vector<Complex> mean(sectors * sectors, Complex{});
  for (std::size_t t = 0; t < samples; ++t) {
    for (double& th : theta) th = angle(rng);
    for (std::size_t s = 0; s < sectors; ++s) {
      if (!present[s]) continue;
      double ph = 0.0;
      for (std::size_t p = 0; p < n_phases; ++p) ph += theta[p] * numbers[s][p];
      phase[s] = ph;
    }
    for (std::size_t s = 0; s < sectors; ++s) {
      if (!present[s]) continue;
      for (std::size_t u = 0; u < sectors; ++u) {
        if (!present[u] || u == s) continue;
        mean[s * sectors + u] += std::polar(1.0, phase[s] - phase[u]);
      }
    }
  }
  for (auto& m : mean) m /= static_cast<double>(samples);
  // Same-sector phases cancel identically.
  for (std::size_t s = 0; s < sectors; ++s) mean[s * sectors + s] = 1.0;

  Matrix out = rho.matrix();
  for (std::size_t i = 0; i < space.dimension(); ++i) {
    for (std::size_t j = 0; j < space.dimension(); ++j) {
      out(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) *=
          mean[space.joint_sector_id(i) * sectors + space.joint_sector_id(j)];
    }
  }
  return DensityMatrix(rho.handle(), std::move(out));
}

std::vector<std::pair<SectorLabel, double>> sector_populations(const DensityMatrix& rho,
                                                               double threshold) {
  const FockSpace& space = rho.space();
  std::map<SectorLabel, double> totals;
  for (std::size_t k = 0; k < space.dimension(); ++k) {
    totals[sector_of(space.state(k), space)] +=
        rho.matrix()(static_cast<Eigen::Index>(k), static_cast<Eigen::Index>(k)).real();
  }
  std::vector<std::pair<SectorLabel, double>> out;
  for (auto& [label, weight] : totals) {
    if (weight > threshold) out.emplace_back(label, weight);
  }
  return out;
}

}  // namespace ssrbell
