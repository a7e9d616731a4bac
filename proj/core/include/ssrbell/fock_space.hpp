#pragma once

/**
 * @file fock_space.hpp
 * @brief Truncated two-region bosonic Fock spaces in the occupation basis.
 *
 * A space is defined by a list of modes, each labelled by (region, port,
 * species), and a per-species cap. The cap bounds the number of particles of
 * that species held by each region, so the global space is the full tensor
 * product of the two local spaces.
 *
 * Canonical ordering: region-A modes come first (in input order), then the
 * region-B modes. Local bases are lexicographic over occupation vectors with
 * the first mode most significant, and the global index of |a>|b> is
 * a * dim(B) + b, which is again lexicographic over the concatenated
 * occupation vector.
 */

#include <Eigen/Dense>

#include <compare>
#include <complex>
#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace ssrbell {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

enum class Region { A, B };

[[nodiscard]] const char* to_string(Region region) noexcept;
[[nodiscard]] constexpr Region other(Region region) noexcept {
  return region == Region::A ? Region::B : Region::A;
}

struct Mode {
  Region region = Region::A;
  int port = 0;
  int species = 0;

  auto operator<=>(const Mode&) const = default;
};

struct OccupationState {
  std::vector<int> occupations;

  auto operator<=>(const OccupationState&) const = default;
};

/// Particle counts per species in each region, summed over ports.
struct SectorLabel {
  std::map<int, int> region_a;
  std::map<int, int> region_b;

  [[nodiscard]] int count(Region region, int species) const;
  [[nodiscard]] std::string to_string() const;

  auto operator<=>(const SectorLabel&) const = default;
};

struct FockSpaceLimits {
  std::size_t max_dimension = 4096;
};

/// Fock space of the modes held by one region.
class LocalSpace {
 public:
  LocalSpace() = default;
  /// Enumerates the local basis. `species` lists every species of the
  /// enclosing space; caps bound the per-species total held by this region.
  LocalSpace(Region region, std::vector<Mode> modes, const std::map<int, int>& caps,
             const std::vector<int>& species, std::size_t max_dimension);

  [[nodiscard]] Region region() const noexcept { return region_; }
  [[nodiscard]] std::span<const Mode> modes() const noexcept { return modes_; }
  [[nodiscard]] std::size_t dimension() const noexcept { return basis_.size(); }
  [[nodiscard]] const OccupationState& state(std::size_t k) const { return basis_.at(k); }
  [[nodiscard]] std::optional<std::size_t> find(const OccupationState& state) const;

  /// species -> count for basis state k. Every species of the enclosing
  /// space is present, including those with no modes in this region.
  [[nodiscard]] const std::map<int, int>& sector(std::size_t k) const {
    return sectors_.at(sector_ids_.at(k));
  }
  [[nodiscard]] std::size_t sector_id(std::size_t k) const { return sector_ids_.at(k); }
  [[nodiscard]] std::size_t sector_count() const noexcept { return sectors_.size(); }

  /// Basis indices grouped by local sector, in increasing index order.
  [[nodiscard]] const std::vector<std::vector<std::size_t>>& sector_blocks() const noexcept {
    return blocks_;
  }

 private:
  Region region_ = Region::A;
  std::vector<Mode> modes_;
  std::vector<OccupationState> basis_;
  std::map<OccupationState, std::size_t> index_;
  std::vector<std::map<int, int>> sectors_;
  std::vector<std::size_t> sector_ids_;
  std::vector<std::vector<std::size_t>> blocks_;
};

class FockSpace {
 public:
  [[nodiscard]] std::span<const Mode> modes() const noexcept { return modes_; }
  [[nodiscard]] const std::map<int, int>& max_per_species() const noexcept { return caps_; }
  [[nodiscard]] const std::vector<int>& species() const noexcept { return species_; }
  [[nodiscard]] const LocalSpace& local(Region region) const noexcept {
    return region == Region::A ? local_a_ : local_b_;
  }

  [[nodiscard]] std::size_t dimension() const noexcept { return basis_.size(); }
  [[nodiscard]] std::span<const OccupationState> basis() const noexcept { return basis_; }
  [[nodiscard]] const OccupationState& state(std::size_t k) const { return basis_.at(k); }
  [[nodiscard]] std::optional<std::size_t> find(const OccupationState& state) const;
  /// Throws std::invalid_argument if the state is not a basis state.
  [[nodiscard]] std::size_t index_of(const OccupationState& state) const;

  [[nodiscard]] std::size_t global_index(std::size_t index_a, std::size_t index_b) const noexcept {
    return index_a * local_b_.dimension() + index_b;
  }
  [[nodiscard]] std::pair<std::size_t, std::size_t> split_index(std::size_t k) const noexcept {
    return {k / local_b_.dimension(), k % local_b_.dimension()};
  }

  [[nodiscard]] std::optional<std::size_t> find_mode(const Mode& mode) const;
  [[nodiscard]] std::size_t mode_index(const Mode& mode) const;

  /// Identifier of the (A sector, B sector) pair of basis state k.
  [[nodiscard]] std::size_t joint_sector_id(std::size_t k) const noexcept {
    const auto [a, b] = split_index(k);
    return local_a_.sector_id(a) * local_b_.sector_count() + local_b_.sector_id(b);
  }
  [[nodiscard]] std::size_t joint_sector_count() const noexcept {
    return local_a_.sector_count() * local_b_.sector_count();
  }

  static std::shared_ptr<const FockSpace> create(std::vector<Mode> modes,
                                                 std::map<int, int> max_per_species,
                                                 const FockSpaceLimits& limits);

 private:
  FockSpace() = default;

  std::vector<Mode> modes_;
  std::map<int, int> caps_;
  std::vector<int> species_;
  LocalSpace local_a_;
  LocalSpace local_b_;
  std::vector<OccupationState> basis_;
  std::map<OccupationState, std::size_t> index_;
};

using SpaceHandle = std::shared_ptr<const FockSpace>;

/// Builds the product of the truncated local Fock spaces.
///
/// Rejects (std::invalid_argument) an empty mode list, duplicate modes,
/// missing or negative caps; rejects (std::length_error) spaces whose
/// dimension exceeds `limits.max_dimension`.
[[nodiscard]] SpaceHandle build_fock_space(std::vector<Mode> modes,
                                           std::map<int, int> max_per_species,
                                           const FockSpaceLimits& limits = {});

/// Per-region, per-species particle counts of an occupation vector laid out
/// in the space's canonical mode order.
[[nodiscard]] SectorLabel sector_of(const OccupationState& state, const FockSpace& space);

}  // namespace ssrbell
