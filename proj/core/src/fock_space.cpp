#include "ssrbell/fock_space.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace ssrbell {

namespace {

// Depth-first over modes with occupations ascending, which yields the basis in
// lexicographic order (first mode most significant).
void enumerate_occupations(std::span<const Mode> modes, const std::map<int, int>& caps,
                           std::size_t pos, std::vector<int>& current, std::map<int, int>& used,
                           std::vector<OccupationState>& out, std::size_t limit) {
  if (pos == modes.size()) {
    if (out.size() >= limit) {
      throw std::length_error("local Fock space exceeds the dimension limit of " +
                              std::to_string(limit));
    }
    out.push_back(OccupationState{current});
    return;
  }
  const int species = modes[pos].species;
  const int remaining = caps.at(species) - used[species];
  for (int n = 0; n <= remaining; ++n) {
    current[pos] = n;
    used[species] += n;
    enumerate_occupations(modes, caps, pos + 1, current, used, out, limit);
    used[species] -= n;
  }
  current[pos] = 0;
}

}  // namespace

const char* to_string(Region region) noexcept { return region == Region::A ? "A" : "B"; }

int SectorLabel::count(Region region, int species) const {
  const auto& counts = region == Region::A ? region_a : region_b;
  const auto it = counts.find(species);
  return it == counts.end() ? 0 : it->second;
}

std::string SectorLabel::to_string() const {
  std::ostringstream os;
  const auto render = [&os](const std::map<int, int>& counts) {
    os << '{';
    bool first = true;
    for (const auto& [species, n] : counts) {
      if (!first) os << ',';
      os << species << ':' << n;
      first = false;
    }
    os << '}';
  };
  os << "A";
  render(region_a);
  os << " B";
  render(region_b);
  return os.str();
}

LocalSpace::LocalSpace(Region region, std::vector<Mode> modes, const std::map<int, int>& caps,
                       const std::vector<int>& species, std::size_t max_dimension)
    : region_(region), modes_(std::move(modes)) {
  std::vector<int> current(modes_.size(), 0);
  std::map<int, int> used;
  enumerate_occupations(modes_, caps, 0, current, used, basis_, max_dimension);

  std::map<std::map<int, int>, std::size_t> sector_lookup;
  sector_ids_.reserve(basis_.size());
  for (std::size_t k = 0; k < basis_.size(); ++k) {
    index_.emplace(basis_[k], k);
    std::map<int, int> counts;
    for (int s : species) counts[s] = 0;
    for (std::size_t m = 0; m < modes_.size(); ++m) counts[modes_[m].species] += basis_[k].occupations[m];
    auto [it, inserted] = sector_lookup.try_emplace(counts, sectors_.size());
    if (inserted) {
      sectors_.push_back(counts);
      blocks_.emplace_back();
    }
    sector_ids_.push_back(it->second);
    blocks_[it->second].push_back(k);
  }
}

std::optional<std::size_t> LocalSpace::find(const OccupationState& state) const {
  const auto it = index_.find(state);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::shared_ptr<const FockSpace> FockSpace::create(std::vector<Mode> modes,
                                                   std::map<int, int> max_per_species,
                                                   const FockSpaceLimits& limits) {
  if (modes.empty()) throw std::invalid_argument("a Fock space needs at least one mode");
  std::set<Mode> seen;
  std::set<int> species;
  for (const Mode& mode : modes) {
    if (!seen.insert(mode).second) {
      std::ostringstream os;
      os << "duplicate mode (" << to_string(mode.region) << ", port " << mode.port << ", species "
         << mode.species << ")";
      throw std::invalid_argument(os.str());
    }
    species.insert(mode.species);
  }
  for (int s : species) {
    const auto it = max_per_species.find(s);
    if (it == max_per_species.end()) {
      throw std::invalid_argument("no particle cap given for species " + std::to_string(s));
    }
  }
  for (const auto& [s, cap] : max_per_species) {
    if (cap < 0) throw std::invalid_argument("negative particle cap for species " + std::to_string(s));
  }

  std::stable_partition(modes.begin(), modes.end(),
                        [](const Mode& m) { return m.region == Region::A; });

  std::shared_ptr<FockSpace> space(new FockSpace());
  space->modes_ = modes;
  space->caps_ = std::move(max_per_species);
  space->species_.assign(species.begin(), species.end());

  std::vector<Mode> modes_a, modes_b;
  for (const Mode& m : modes) (m.region == Region::A ? modes_a : modes_b).push_back(m);
  space->local_a_ = LocalSpace(Region::A, std::move(modes_a), space->caps_, space->species_,
                               limits.max_dimension);
  space->local_b_ = LocalSpace(Region::B, std::move(modes_b), space->caps_, space->species_,
                               limits.max_dimension);

  const std::size_t dim_a = space->local_a_.dimension();
  const std::size_t dim_b = space->local_b_.dimension();
  if (dim_a * dim_b > limits.max_dimension) {
    throw std::length_error("Fock space dimension " + std::to_string(dim_a * dim_b) +
                            " exceeds the limit of " + std::to_string(limits.max_dimension));
  }

  space->basis_.reserve(dim_a * dim_b);
  for (std::size_t a = 0; a < dim_a; ++a) {
    for (std::size_t b = 0; b < dim_b; ++b) {
      std::vector<int> occ = space->local_a_.state(a).occupations;
      const auto& occ_b = space->local_b_.state(b).occupations;
      occ.insert(occ.end(), occ_b.begin(), occ_b.end());
      space->index_.emplace(OccupationState{occ}, space->basis_.size());
      space->basis_.push_back(OccupationState{std::move(occ)});
    }
  }
  return space;
}

std::optional<std::size_t> FockSpace::find(const OccupationState& state) const {
  const auto it = index_.find(state);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::size_t FockSpace::index_of(const OccupationState& state) const {
  if (auto k = find(state)) return *k;
  throw std::invalid_argument("occupation state is not in the truncated basis");
}

std::optional<std::size_t> FockSpace::find_mode(const Mode& mode) const {
  const auto it = std::find(modes_.begin(), modes_.end(), mode);
  if (it == modes_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - modes_.begin());
}

std::size_t FockSpace::mode_index(const Mode& mode) const {
  if (auto m = find_mode(mode)) return *m;
  throw std::invalid_argument("mode not present in the Fock space");
}

SpaceHandle build_fock_space(std::vector<Mode> modes, std::map<int, int> max_per_species,
                             const FockSpaceLimits& limits) {
  return FockSpace::create(std::move(modes), std::move(max_per_species), limits);
}

SectorLabel sector_of(const OccupationState& state, const FockSpace& space) {
  const auto modes = space.modes();
  if (state.occupations.size() != modes.size()) {
    throw std::invalid_argument("occupation vector has " +
                                std::to_string(state.occupations.size()) + " entries, space has " +
                                std::to_string(modes.size()) + " modes");
  }
  SectorLabel label;
  for (int s : space.species()) {
    label.region_a[s] = 0;
    label.region_b[s] = 0;
  }
  for (std::size_t m = 0; m < modes.size(); ++m) {
    auto& counts = modes[m].region == Region::A ? label.region_a : label.region_b;
    counts[modes[m].species] += state.occupations[m];
  }
  return label;
}

}  // namespace ssrbell
