#include "ssrbell/states.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <stdexcept>

namespace ssrbell {

namespace {

StateVector from_terms(const SpaceHandle& space,
                       std::initializer_list<std::pair<std::vector<int>, Complex>> terms) {
  Vector v = Vector::Zero(static_cast<Eigen::Index>(space->dimension()));
  for (const auto& [occupations, amplitude] : terms) {
    v(static_cast<Eigen::Index>(space->index_of(OccupationState{occupations}))) += amplitude;
  }
  return StateVector(space, std::move(v));
}

StateVector split_particle(const StateVector& ket, const SplitAmplitude& amp, std::size_t mode_a,
                           std::size_t mode_b) {
  Vector v = amp.alpha * apply_creation(ket, mode_a).amplitudes() +
             amp.beta * apply_creation(ket, mode_b).amplitudes();
  return StateVector(ket.handle(), std::move(v));
}

}  // namespace

void validate(const SplitAmplitude& amp) {
  const double norm = std::norm(amp.alpha) + std::norm(amp.beta);
  if (std::abs(norm - 1.0) > kNormalizationTolerance) {
    throw std::invalid_argument("split amplitude has |alpha|^2 + |beta|^2 = " +
                                std::to_string(norm));
  }
}

int SeparableSpec::particle_count() const {
  int n = 0;
  for (const auto& c : components) {
    n = std::max(n, kind == SeparableKind::Bosonic ? c.particles
                                                   : static_cast<int>(c.amplitudes.size()));
  }
  return n;
}

void validate(const SeparableSpec& spec) {
  if (spec.components.empty()) throw std::invalid_argument("separable spec has no components");
  double total = 0.0;
  for (const auto& c : spec.components) {
    if (!(c.weight >= 0.0)) throw std::invalid_argument("separable spec has a negative weight");
    total += c.weight;
    for (const auto& amp : c.amplitudes) validate(amp);
    if (spec.kind == SeparableKind::Bosonic) {
      if (c.amplitudes.size() != 1) {
        throw std::invalid_argument("bosonic component needs exactly one split amplitude");
      }
      if (c.particles < 1) throw std::invalid_argument("bosonic component needs N >= 1");
    } else if (c.amplitudes.size() != spec.components.front().amplitudes.size() ||
               c.amplitudes.empty()) {
      throw std::invalid_argument(
          "distinguishable components must all describe the same non-zero number of particles");
    }
  }
  if (std::abs(total - 1.0) > kNormalizationTolerance) {
    throw std::invalid_argument("separable spec weights sum to " + std::to_string(total));
  }
}

SeparableSpec mix(const SeparableSpec& first, const SeparableSpec& second, double w) {
  if (first.kind != second.kind) throw std::invalid_argument("cannot mix specs of different kinds");
  if (w < 0.0 || w > 1.0) throw std::invalid_argument("mixing weight outside [0, 1]");
  SeparableSpec out{first.kind, {}};
  for (auto c : first.components) {
    c.weight *= w;
    out.components.push_back(std::move(c));
  }
  for (auto c : second.components) {
    c.weight *= 1.0 - w;
    out.components.push_back(std::move(c));
  }
  return out;
}

SpaceHandle single_particle_space() {
  return build_fock_space({{Region::A, 0, 0}, {Region::B, 0, 0}}, {{0, 1}});
}

SpaceHandle distinguishable_space(int particles) {
  if (particles < 1) throw std::invalid_argument("need at least one particle");
  std::vector<Mode> modes;
  std::map<int, int> caps;
  for (int i = 0; i < particles; ++i) {
    modes.push_back({Region::A, i, i});
    modes.push_back({Region::B, i, i});
    caps[i] = 1;
  }
  return build_fock_space(std::move(modes), std::move(caps));
}

SpaceHandle bosonic_space(int particles) {
  if (particles < 1) throw std::invalid_argument("need at least one particle");
  return build_fock_space({{Region::A, 0, 0}, {Region::B, 0, 0}}, {{0, particles}});
}

SpaceHandle ensemble_space(const SeparableSpec& spec) {
  return spec.kind == SeparableKind::Bosonic ? bosonic_space(spec.particle_count())
                                             : distinguishable_space(spec.particle_count());
}

StateVector single_particle_split(const SplitAmplitude& amp) {
  validate(amp);
  return from_terms(single_particle_space(), {{{1, 0}, amp.alpha}, {{0, 1}, amp.beta}});
}

StateVector spin_coherent_state(const SplitAmplitude& amp, int particles) {
  return spin_coherent_state(amp, particles, bosonic_space(std::max(particles, 1)));
}

StateVector spin_coherent_state(const SplitAmplitude& amp, int particles, SpaceHandle space) {
  validate(amp);
  if (particles < 1) throw std::invalid_argument("spin coherent state needs N >= 1");
  if (space->species().size() != 1 || space->local(Region::A).modes().size() != 1 ||
      space->local(Region::B).modes().size() != 1) {
    throw std::invalid_argument("spin coherent state needs one species and one mode per region");
  }
  const int species = space->species().front();
  if (space->max_per_species().at(species) < particles) {
    throw std::invalid_argument("particle number exceeds the space cap");
  }
  const std::size_t mode_a = space->mode_index(space->local(Region::A).modes().front());
  const std::size_t mode_b = space->mode_index(space->local(Region::B).modes().front());
  StateVector ket = StateVector::vacuum(space);
  for (int k = 0; k < particles; ++k) ket = split_particle(ket, amp, mode_a, mode_b);
  const double factorial = std::tgamma(static_cast<double>(particles) + 1.0);
  return StateVector(std::move(space), ket.amplitudes() / std::sqrt(factorial));
}

DensityMatrix ensemble_state(const SeparableSpec& spec, SpaceHandle space) {
  validate(spec);
  const auto dim = static_cast<Eigen::Index>(space->dimension());
  Matrix rho = Matrix::Zero(dim, dim);
  for (const auto& component : spec.components) {
    StateVector ket = StateVector::vacuum(space);
    if (spec.kind == SeparableKind::Bosonic) {
      ket = spin_coherent_state(component.amplitudes.front(), component.particles, space);
    } else {
      for (std::size_t i = 0; i < component.amplitudes.size(); ++i) {
        const int label = static_cast<int>(i);
        const auto mode_a = space->find_mode({Region::A, label, label});
        const auto mode_b = space->find_mode({Region::B, label, label});
        if (!mode_a || !mode_b) {
          throw std::invalid_argument("space lacks the A/B modes of particle " +
                                      std::to_string(i));
        }
        ket = split_particle(ket, component.amplitudes[i], *mode_a, *mode_b);
      }
    }
    rho += component.weight * (ket.amplitudes() * ket.amplitudes().adjoint());
  }
  return DensityMatrix(std::move(space), std::move(rho));
}

DensityMatrix ensemble_state(const SeparableSpec& spec) {
  validate(spec);
  return ensemble_state(spec, ensemble_space(spec));
}

StateVector ep_spin_pair() {
  using namespace labels;
  auto space = build_fock_space({{Region::A, kSpinUp, kElectron},
                                 {Region::A, kSpinDown, kElectron},
                                 {Region::B, kSpinUp, kProton},
                                 {Region::B, kSpinDown, kProton}},
                                {{kElectron, 1}, {kProton, 1}});
  const double h = std::numbers::sqrt2 / 2.0;
  return from_terms(space, {{{1, 0, 1, 0}, h}, {{0, 1, 0, 1}, h}});
}

StateVector pair_vacuum_superposition() {
  using namespace labels;
  std::vector<Mode> modes;
  for (Region r : {Region::A, Region::B}) {
    for (int species : {kElectron, kProton}) {
      modes.push_back({r, kSpinUp, species});
      modes.push_back({r, kSpinDown, species});
    }
  }
  auto space = build_fock_space(std::move(modes), {{kElectron, 1}, {kProton, 1}});
  const double h = std::numbers::sqrt2 / 2.0;
  // Mode order per region: e-up, e-down, p-up, p-down.
  return from_terms(space, {{{1, 0, 1, 0, 0, 0, 0, 0}, h}, {{0, 0, 0, 0, 0, 1, 0, 1}, h}});
}

StateVector yurke_state(bool identical) {
  const int species_i = 0;
  const int species_j = identical ? 0 : 1;
  std::map<int, int> caps =
      identical ? std::map<int, int>{{0, 2}} : std::map<int, int>{{0, 1}, {1, 1}};
  auto space = build_fock_space({{Region::A, 0, species_i},
                                 {Region::A, 1, species_j},
                                 {Region::B, 0, species_i},
                                 {Region::B, 1, species_j}},
                                std::move(caps));
  return from_terms(space, {{{1, 0, 0, 1}, 0.5},
                            {{0, 1, 1, 0}, 0.5},
                            {{1, 1, 0, 0}, 0.5},
                            {{0, 0, 1, 1}, 0.5}});
}

StateVector schmidt_pure_state(std::span<const double> coefficients) {
  if (coefficients.empty()) throw std::invalid_argument("no Schmidt coefficients given");
  const double norm = std::inner_product(coefficients.begin(), coefficients.end(),
                                         coefficients.begin(), 0.0);
  if (std::abs(norm - 1.0) > kNormalizationTolerance) {
    throw std::invalid_argument("Schmidt coefficients are not normalized");
  }
  const int d = static_cast<int>(coefficients.size());
  std::vector<Mode> modes;
  for (int k = 0; k < d; ++k) modes.push_back({Region::A, k, 0});
  for (int k = 0; k < d; ++k) modes.push_back({Region::B, k, 0});
  auto space = build_fock_space(std::move(modes), {{0, 1}});
  Vector v = Vector::Zero(static_cast<Eigen::Index>(space->dimension()));
  for (int k = 0; k < d; ++k) {
    std::vector<int> occ(static_cast<std::size_t>(2 * d), 0);
    occ[static_cast<std::size_t>(k)] = 1;
    occ[static_cast<std::size_t>(d + k)] = 1;
    v(static_cast<Eigen::Index>(space->index_of(OccupationState{occ}))) = coefficients[k];
  }
  return StateVector(std::move(space), std::move(v));
}

SplitAmplitude random_split_amplitude(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::uniform_real_distribution<double> phase(0.0, 2.0 * std::numbers::pi);
  const double p = unit(rng);
  SplitAmplitude amp{std::polar(std::sqrt(p), phase(rng)), std::polar(std::sqrt(1.0 - p), phase(rng))};
  // absorb rounding from sqrt/polar
  const double n = std::sqrt(std::norm(amp.alpha) + std::norm(amp.beta));
  amp.alpha /= n;
  amp.beta /= n;
  return amp;
}

SeparableSpec random_separable_spec(SeparableKind kind, int particles, int components,
                                    std::mt19937_64& rng) {
  if (particles < 1 || components < 1) {
    throw std::invalid_argument("random spec needs particles >= 1 and components >= 1");
  }
  std::exponential_distribution<double> exponential(1.0);
  SeparableSpec spec{kind, {}};
  double total = 0.0;
  for (int c = 0; c < components; ++c) {
    SeparableComponent component;
    component.weight = exponential(rng);
    total += component.weight;
    const int amplitudes = kind == SeparableKind::Bosonic ? 1 : particles;
    for (int i = 0; i < amplitudes; ++i) component.amplitudes.push_back(random_split_amplitude(rng));
    component.particles = kind == SeparableKind::Bosonic ? particles : 0;
    spec.components.push_back(std::move(component));
  }
  for (auto& c : spec.components) c.weight /= total;
  return spec;
}

}  // namespace ssrbell
