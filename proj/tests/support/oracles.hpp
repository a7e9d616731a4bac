#pragma once

// Independent reference computations. These work directly on occupation
// vectors and explicit index loops, never through the library routines they
// are used to check.

#include "ssrbell/fock_space.hpp"
#include "ssrbell/operators.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <numbers>
#include <vector>

namespace ssrbell::testing {

/// Splits a global occupation vector into its region-A and region-B parts.
inline std::pair<std::vector<int>, std::vector<int>> split_occupations(const FockSpace& space,
                                                                       const OccupationState& s) {
  std::vector<int> a, b;
  const auto modes = space.modes();
  for (std::size_t m = 0; m < modes.size(); ++m) {
    (modes[m].region == Region::A ? a : b).push_back(s.occupations[m]);
  }
  return {a, b};
}

inline std::size_t join_index(const FockSpace& space, const std::vector<int>& a,
                              const std::vector<int>& b) {
  std::vector<int> occ;
  std::size_t ia = 0, ib = 0;
  for (const Mode& m : space.modes()) occ.push_back(m.region == Region::A ? a[ia++] : b[ib++]);
  return space.index_of(OccupationState{occ});
}

/// rho^{T_B}[(a b), (a' b')] = rho[(a b'), (a' b)] by occupation lookup.
inline Matrix brute_partial_transpose(const Matrix& rho, const FockSpace& space) {
  const auto d = static_cast<Eigen::Index>(space.dimension());
  Matrix out(d, d);
  for (Eigen::Index k = 0; k < d; ++k) {
    const auto [a, b] = split_occupations(space, space.state(static_cast<std::size_t>(k)));
    for (Eigen::Index l = 0; l < d; ++l) {
      const auto [ap, bp] = split_occupations(space, space.state(static_cast<std::size_t>(l)));
      out(k, l) = rho(static_cast<Eigen::Index>(join_index(space, a, bp)),
                      static_cast<Eigen::Index>(join_index(space, ap, b)));
    }
  }
  return out;
}

inline double brute_negativity(const Matrix& rho, const FockSpace& space) {
  const Matrix pt = brute_partial_transpose(rho, space);
  Eigen::SelfAdjointEigenSolver<Matrix> solver(0.5 * (pt + pt.adjoint()), Eigen::EigenvaluesOnly);
  double total = 0.0;
  for (double lambda : solver.eigenvalues()) total += lambda < 0.0 ? -lambda : 0.0;
  return total;
}

/// Sparse ket keyed by occupation vector, for an operator-application oracle.
using SparseKet = std::map<std::vector<int>, Complex>;

inline SparseKet create(const SparseKet& ket, std::size_t mode) {
  SparseKet out;
  for (const auto& [occ, amp] : ket) {
    std::vector<int> raised = occ;
    const double factor = std::sqrt(static_cast<double>(raised[mode] + 1));
    raised[mode] += 1;
    out[raised] += factor * amp;
  }
  return out;
}

inline SparseKet add(SparseKet x, const SparseKet& y, Complex wx = 1.0, Complex wy = 1.0) {
  for (auto& [occ, amp] : x) amp *= wx;
  for (const auto& [occ, amp] : y) x[occ] += wy * amp;
  return x;
}

/// Brute-force CHSH search over finite candidate sets.
///
/// `a_candidates` are full local observables on A. B observables are taken as
/// direct sums over the local B sectors listed in `b_sector_candidates`
/// (each entry a full-size matrix supported on one sector), so for a fixed A
/// pair the best B is found sector by sector.
inline double brute_force_chsh(const Matrix& rho, const FockSpace& space,
                               const std::vector<Matrix>& a_candidates,
                               const std::vector<std::vector<Matrix>>& b_sector_candidates) {
  const std::size_t dim_b = space.local(Region::B).dimension();
  const auto d = static_cast<Eigen::Index>(space.dimension());
  // reduced[a](b, b') = sum_{x, x'} rho(x b, x' b') A(x', x), via occupation lookup
  std::vector<std::size_t> part_a(static_cast<std::size_t>(d)), part_b(static_cast<std::size_t>(d));
  for (Eigen::Index k = 0; k < d; ++k) {
    const auto [a, b] = split_occupations(space, space.state(static_cast<std::size_t>(k)));
    part_a[static_cast<std::size_t>(k)] = *space.local(Region::A).find(OccupationState{a});
    part_b[static_cast<std::size_t>(k)] = *space.local(Region::B).find(OccupationState{b});
  }
  const std::size_t n_a = a_candidates.size();
  std::vector<std::vector<std::vector<double>>> table(b_sector_candidates.size());
  for (std::size_t s = 0; s < b_sector_candidates.size(); ++s) {
    table[s].assign(n_a, std::vector<double>(b_sector_candidates[s].size()));
  }
  for (std::size_t i = 0; i < n_a; ++i) {
    Matrix reduced = Matrix::Zero(static_cast<Eigen::Index>(dim_b), static_cast<Eigen::Index>(dim_b));
    for (Eigen::Index k = 0; k < d; ++k) {
      for (Eigen::Index l = 0; l < d; ++l) {
        const Complex w = a_candidates[i](static_cast<Eigen::Index>(part_a[static_cast<std::size_t>(l)]),
                                          static_cast<Eigen::Index>(part_a[static_cast<std::size_t>(k)]));
        if (w == Complex{}) continue;
        reduced(static_cast<Eigen::Index>(part_b[static_cast<std::size_t>(k)]),
                static_cast<Eigen::Index>(part_b[static_cast<std::size_t>(l)])) += rho(k, l) * w;
      }
    }
    for (std::size_t s = 0; s < b_sector_candidates.size(); ++s) {
      for (std::size_t c = 0; c < b_sector_candidates[s].size(); ++c) {
        // tr[rho (A (x) B)] = sum_{b,b'} reduced(b, b') B(b', b)
        table[s][i][c] = (reduced * b_sector_candidates[s][c]).trace().real();
      }
    }
  }
  double best = -std::numeric_limits<double>::infinity();
  for (std::size_t i0 = 0; i0 < n_a; ++i0) {
    for (std::size_t i1 = 0; i1 < n_a; ++i1) {
      double value = 0.0;
      for (std::size_t s = 0; s < table.size(); ++s) {
        double plus = -std::numeric_limits<double>::infinity();
        double minus = -std::numeric_limits<double>::infinity();
        const auto& t0 = table[s][i0];
        const auto& t1 = table[s][i1];
        for (std::size_t c = 0; c < t0.size(); ++c) {
          plus = std::max(plus, t0[c] + t1[c]);
          minus = std::max(minus, t0[c] - t1[c]);
        }
        value += plus + minus;
      }
      best = std::max(best, value);
    }
  }
  return best;
}

/// Embeds a small matrix on the listed local indices of a d-dim space.
inline Matrix place(const Matrix& sub, const std::vector<std::size_t>& indices, Eigen::Index d) {
  Matrix out = Matrix::Zero(d, d);
  for (std::size_t i = 0; i < indices.size(); ++i) {
    for (std::size_t j = 0; j < indices.size(); ++j) {
      out(static_cast<Eigen::Index>(indices[i]), static_cast<Eigen::Index>(indices[j])) =
          sub(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j));
    }
  }
  return out;
}

/// Dichotomic observables cos(t) Z + sin(t) X on a qubit, t on a uniform grid
/// over [0, 2 pi), plus +1 and -1.
inline std::vector<Matrix> real_plane_qubit_observables(int steps) {
  std::vector<Matrix> out;
  for (int k = 0; k < steps; ++k) {
    const double t = 2.0 * std::numbers::pi * k / steps;
    Matrix m(2, 2);
    m << std::cos(t), std::sin(t), std::sin(t), -std::cos(t);
    out.push_back(m);
  }
  out.push_back(Matrix::Identity(2, 2));
  out.push_back(-Matrix::Identity(2, 2));
  return out;
}

/// +-1 and +-(1 - 2|e_k><e_k|) on an n-dim block.
inline std::vector<Matrix> reflection_observables(Eigen::Index n) {
  std::vector<Matrix> out{Matrix::Identity(n, n), -Matrix::Identity(n, n)};
  if (n > 1) {
    for (Eigen::Index k = 0; k < n; ++k) {
      Matrix r = Matrix::Identity(n, n);
      r(k, k) = -1.0;
      out.push_back(r);
      out.push_back(-r);
    }
  }
  return out;
}

}  // namespace ssrbell::testing
