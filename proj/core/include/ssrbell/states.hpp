#pragma once

/**
 * @file states.hpp
 * @brief Constructors for the two-region states studied by the library.
 *
 * Particle-separable ensembles are represented as finite mixtures
 * (SeparableSpec): each component carries a statistical weight and the
 * splitting amplitudes of every particle between the regions.
 */

#include "ssrbell/operators.hpp"

#include <cstdint>
#include <random>
#include <span>
#include <vector>

namespace ssrbell {

inline constexpr double kNormalizationTolerance = 1e-12;

/// Single-particle amplitudes toward region A (alpha) and region B (beta).
struct SplitAmplitude {
  Complex alpha{1.0, 0.0};
  Complex beta{0.0, 0.0};
};

/// Throws std::invalid_argument unless |alpha|^2 + |beta|^2 = 1 within 1e-12.
void validate(const SplitAmplitude& amp);

enum class SeparableKind { Distinguishable, Bosonic };

struct SeparableComponent {
  double weight = 1.0;
  /// Distinguishable: one entry per particle. Bosonic: exactly one entry.
  std::vector<SplitAmplitude> amplitudes;
  /// Bosonic particle count; ignored for distinguishable particles.
  int particles = 0;
};

struct SeparableSpec {
  SeparableKind kind = SeparableKind::Distinguishable;
  std::vector<SeparableComponent> components;

  /// Largest particle number over the components.
  [[nodiscard]] int particle_count() const;
};

/// Throws std::invalid_argument on negative weights, weights not summing to
/// one, unnormalized amplitudes or inconsistent particle numbers.
void validate(const SeparableSpec& spec);

/// w * first (+) (1 - w) * second as a single mixture.
[[nodiscard]] SeparableSpec mix(const SeparableSpec& first, const SeparableSpec& second, double w);

// Canonical spaces -----------------------------------------------------------

/// One mode per region, one species, at most one particle per region.
[[nodiscard]] SpaceHandle single_particle_space();
/// Particle i is species i travelling through port i; modes (A,i,i), (B,i,i).
[[nodiscard]] SpaceHandle distinguishable_space(int particles);
/// One mode per region of species 0, capped at `particles`.
[[nodiscard]] SpaceHandle bosonic_space(int particles);
[[nodiscard]] SpaceHandle ensemble_space(const SeparableSpec& spec);

// States ---------------------------------------------------------------------

/// alpha |1>_A|0>_B + beta |0>_A|1>_B.
[[nodiscard]] StateVector single_particle_split(const SplitAmplitude& amp);

/// (alpha a_A^+ + beta a_B^+)^N |0> / sqrt(N!), built by repeated creation.
[[nodiscard]] StateVector spin_coherent_state(const SplitAmplitude& amp, int particles);
[[nodiscard]] StateVector spin_coherent_state(const SplitAmplitude& amp, int particles,
                                              SpaceHandle space);

[[nodiscard]] DensityMatrix ensemble_state(const SeparableSpec& spec, SpaceHandle space);
[[nodiscard]] DensityMatrix ensemble_state(const SeparableSpec& spec);

namespace labels {
inline constexpr int kElectron = 0;
inline constexpr int kProton = 1;
inline constexpr int kSpinUp = 0;
inline constexpr int kSpinDown = 1;
}  // namespace labels

/// (|up_e>_A |up_p>_B + |down_e>_A |down_p>_B) / sqrt(2). Spin is the port
/// label, so both spin states of a particle share one superselection sector.
[[nodiscard]] StateVector ep_spin_pair();

/// (|up_e, up_p>_A |0>_B + |0>_A |down_e, down_p>_B) / sqrt(2).
[[nodiscard]] StateVector pair_vacuum_superposition();

/// Two particles entering ports 0 and 1, each split evenly between A and B.
/// With identical = true both ports carry the same species.
[[nodiscard]] StateVector yurke_state(bool identical);

/// sum_k c_k |k>_A |k>_B where |k> places one particle in port k.
[[nodiscard]] StateVector schmidt_pure_state(std::span<const double> coefficients);

// Random ensembles -----------------------------------------------------------

/// Weights uniform on the simplex; |alpha|^2 uniform on [0, 1] with
/// independent uniform phases on alpha and beta.
[[nodiscard]] SeparableSpec random_separable_spec(SeparableKind kind, int particles,
                                                  int components, std::mt19937_64& rng);
[[nodiscard]] SplitAmplitude random_split_amplitude(std::mt19937_64& rng);

}  // namespace ssrbell
