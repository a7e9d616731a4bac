#include "doctest.h"

#include "ssrbell/entanglement.hpp"
#include "ssrbell/ssr.hpp"
#include "support/random_states.hpp"

#include <cmath>
#include <numbers>

using namespace ssrbell;
using namespace ssrbell::testing;

namespace {
const double kHalfRoot2 = std::numbers::sqrt2 / 2.0;

std::vector<SpaceHandle> test_spaces() {
  return {single_particle_space(),      ep_spin_pair().handle(),  yurke_state(false).handle(),
          yurke_state(true).handle(),   distinguishable_space(2), bosonic_space(3),
          schmidt_pure_state(std::vector<double>{1.0, 0.0, 0.0}).handle()};
}
}  // namespace

TEST_CASE("dephasing the split single particle leaves the incoherent mixture") {
  const DensityMatrix rho = DensityMatrix::pure(single_particle_split({kHalfRoot2, kHalfRoot2}));
  const DensityMatrix eff = ssr_dephase(rho);
  Matrix expected = Matrix::Zero(4, 4);
  expected(1, 1) = 0.5;
  expected(2, 2) = 0.5;
  CHECK(max_abs(eff.matrix() - expected) < 1e-15);
}

TEST_CASE("sector-diagonal states are fixed points") {
  std::mt19937_64 rng(4);
  for (const auto& space : test_spaces()) {
    const DephasingMap map(space);
    const DensityMatrix rho = map.apply(random_density(space, rng));
    CHECK(max_abs(map.apply(rho).matrix() - rho.matrix()) == 0.0);
  }
}

TEST_CASE("identical-particle Yurke state keeps the cross-branch coherence") {
  const StateVector ket = yurke_state(true);
  const FockSpace& space = ket.space();
  const DensityMatrix eff = ssr_dephase(DensityMatrix::pure(ket));
  const auto k = [&](std::vector<int> occ) {
    return static_cast<Eigen::Index>(space.index_of(OccupationState{std::move(occ)}));
  };
  const Matrix& m = eff.matrix();
  CHECK(std::abs(m(k({1, 0, 0, 1}), k({0, 1, 1, 0})) - 0.25) < 1e-15);
  CHECK(std::abs(m(k({1, 0, 0, 1}), k({1, 1, 0, 0}))) == 0.0);
  CHECK(std::abs(m(k({1, 0, 0, 1}), k({0, 0, 1, 1}))) == 0.0);
  CHECK(std::abs(m(k({1, 1, 0, 0}), k({0, 0, 1, 1}))) == 0.0);
  CHECK(std::abs(m(k({1, 1, 0, 0}), k({1, 1, 0, 0})) - 0.25) < 1e-15);
}

TEST_CASE("dephasing blocks partition the basis") {
  for (const auto& space : test_spaces()) {
    const DephasingMap map(space);
    std::vector<int> seen(space->dimension(), 0);
    for (const auto& block : map.blocks())
      for (std::size_t k : block) ++seen[k];
    for (int s : seen) CHECK(s == 1);
  }
}

TEST_CASE("SSR allowed local operators") {
  SUBCASE("number operator") {
    const auto space = yurke_state(true).handle();
    const LocalSpace& local = space->local(Region::A);
    Matrix n = Matrix::Zero(6, 6);
    for (std::size_t k = 0; k < 6; ++k) {
      n(static_cast<Eigen::Index>(k), static_cast<Eigen::Index>(k)) = local.sector(k).at(0);
    }
    CHECK(is_ssr_allowed(LocalOperator(space, Region::A, n)));
  }
  SUBCASE("vacuum to one-particle coupling") {
    const auto space = single_particle_space();
    Matrix x(2, 2);
    x << 0, 1, 1, 0;
    CHECK_FALSE(is_ssr_allowed(LocalOperator(space, Region::A, x)));
  }
  SUBCASE("electron spin flip") {
    const auto space = ep_spin_pair().handle();
    const LocalSpace& local = space->local(Region::A);
    const auto up = static_cast<Eigen::Index>(*local.find(OccupationState{{1, 0}}));
    const auto down = static_cast<Eigen::Index>(*local.find(OccupationState{{0, 1}}));
    Matrix flip = Matrix::Identity(3, 3);
    flip(up, up) = flip(down, down) = 0.0;
    flip(up, down) = flip(down, up) = 1.0;
    CHECK(is_ssr_allowed(LocalOperator(space, Region::A, flip)));
  }
  SUBCASE("non-Hermitian input is rejected") {
    const auto space = single_particle_space();
    Matrix m(2, 2);
    m << 0, 1, 0, 0;
    CHECK_THROWS_AS((void)is_ssr_allowed(LocalOperator(space, Region::A, m)), std::invalid_argument);
  }
}

TEST_CASE("block-diagonal projection") {
  std::mt19937_64 rng(8);
  SUBCASE("allowed operators are unchanged") {
    const auto space = yurke_state(true).handle();
    const LocalOperator op = random_allowed_hermitian(space, Region::B, rng);
    CHECK(max_abs(project_block_diagonal(op).matrix() - op.matrix()) == 0.0);
  }
  SUBCASE("vacuum-particle flip projects to zero") {
    const auto space = single_particle_space();
    Matrix x(2, 2);
    x << 0, 1, 1, 0;
    CHECK(max_abs(project_block_diagonal(LocalOperator(space, Region::A, x)).matrix()) == 0.0);
  }
  SUBCASE("idempotent orthogonal projection") {
    for (const auto& space : test_spaces()) {
      for (Region r : {Region::A, Region::B}) {
        const auto d = static_cast<Eigen::Index>(space->local(r).dimension());
        const LocalOperator op(space, r, random_hermitian(d, rng));
        const LocalOperator p = project_block_diagonal(op);
        CHECK(is_ssr_allowed(p));
        CHECK(max_abs(project_block_diagonal(p).matrix() - p.matrix()) == 0.0);
        const LocalOperator x = random_allowed_hermitian(space, r, rng);
        CHECK(std::abs((op.matrix() * x.matrix()).trace() - (p.matrix() * x.matrix()).trace()) <
              1e-12);
      }
    }
  }
}

TEST_CASE("region-assignment construction") {
  SUBCASE("one particle") {
    const SplitAmplitude amp{Complex{0.6, 0.0}, Complex{0.0, 0.8}};
    const SeparableSpec spec{SeparableKind::Distinguishable, {{1.0, {amp}, 0}}};
    const DensityMatrix eff = appendix_effective_state(spec, distinguishable_space(1));
    Matrix expected = Matrix::Zero(4, 4);
    expected(2, 2) = 0.36;  // |1>_A |0>_B
    expected(1, 1) = 0.64;  // |0>_A |1>_B
    CHECK(max_abs(eff.matrix() - expected) < 1e-15);
  }
  SUBCASE("agrees with dephasing the ensemble") {
    std::mt19937_64 rng(12);
    for (int trial = 0; trial < 30; ++trial) {
      const SeparableSpec spec =
          random_separable_spec(SeparableKind::Distinguishable, 1 + trial % 3, 1 + trial % 4, rng);
      const auto space = ensemble_space(spec);
      const Matrix lhs = appendix_effective_state(spec, space).matrix();
      const Matrix rhs = ssr_dephase(ensemble_state(spec, space)).matrix();
      CHECK(max_abs(lhs - rhs) < 1e-12);
    }
  }
  SUBCASE("all particles in A gives a pure product") {
    const SeparableSpec spec{SeparableKind::Distinguishable,
                             {{1.0, {{1.0, 0.0}, {1.0, 0.0}, {1.0, 0.0}}, 0}}};
    const DensityMatrix eff = appendix_effective_state(spec, distinguishable_space(3));
    CHECK(eff.purity() == doctest::Approx(1.0).epsilon(1e-15));
    const auto k = static_cast<Eigen::Index>(
        eff.space().index_of(OccupationState{{1, 1, 1, 0, 0, 0}}));
    CHECK(eff.matrix()(k, k) == Complex{1.0});
  }
  SUBCASE("N above 12 is rejected") {
    SeparableSpec spec{SeparableKind::Distinguishable, {{1.0, {}, 0}}};
    spec.components[0].amplitudes.assign(13, SplitAmplitude{1.0, 0.0});
    CHECK_THROWS_AS((void)appendix_effective_state(spec, single_particle_space()),
                    std::invalid_argument);
  }
}

TEST_CASE("bosonic binomial mixture agrees with dephasing") {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 30; ++trial) {
    const SeparableSpec spec =
        random_separable_spec(SeparableKind::Bosonic, 1 + trial % 4, 1 + trial % 3, rng);
    const auto space = ensemble_space(spec);
    const Matrix lhs = bosonic_effective_state(spec, space).matrix();
    const Matrix rhs = ssr_dephase(ensemble_state(spec, space)).matrix();
    CHECK(max_abs(lhs - rhs) < 1e-12);
  }
}

TEST_CASE("dephasing invariants on random states") {
  std::mt19937_64 rng(21);
  for (const auto& space : test_spaces()) {
    const DephasingMap map(space);
    for (int trial = 0; trial < 10; ++trial) {
      const DensityMatrix rho = random_density(space, rng, 1 + trial % 3);
      const DensityMatrix eff = map.apply(rho);
      CHECK(max_abs(map.apply(eff).matrix() - eff.matrix()) == 0.0);
      CHECK(std::abs(eff.matrix().trace() - Complex{1.0}) < 1e-12);
      Eigen::SelfAdjointEigenSolver<Matrix> solver(eff.matrix(), Eigen::EigenvaluesOnly);
      CHECK(solver.eigenvalues().minCoeff() > -1e-10);

      const LocalOperator ua = random_allowed_unitary(space, Region::A, rng);
      const LocalOperator ub = random_allowed_unitary(space, Region::B, rng);
      const Matrix u = kron(ua.matrix(), ub.matrix());
      const Matrix rotated = hermitian_part(u * rho.matrix() * u.adjoint());
      CHECK(max_abs(map.apply(rotated) - u * eff.matrix() * u.adjoint()) < 1e-12);

      const LocalOperator oa = random_allowed_hermitian(space, Region::A, rng);
      const LocalOperator ob = random_allowed_hermitian(space, Region::B, rng);
      CHECK(std::abs(product_expectation(rho.matrix(), oa, ob) -
                     product_expectation(eff.matrix(), oa, ob)) < 1e-12);
    }
  }
}

TEST_CASE("phase twirl") {
  SUBCASE("sector-diagonal state is reproduced exactly") {
    std::mt19937_64 rng(30);
    const auto space = yurke_state(true).handle();
    const DensityMatrix rho = ssr_dephase(random_density(space, rng));
    for (std::size_t samples : {1u, 7u, 100u}) {
      CHECK(max_abs(phase_twirl_sample(rho, samples, 5).matrix() - rho.matrix()) == 0.0);
    }
  }
  SUBCASE("split single particle off-diagonals fall within the Monte Carlo error") {
    const DensityMatrix rho = DensityMatrix::pure(single_particle_split({kHalfRoot2, kHalfRoot2}));
    const std::size_t samples = 10000;
    const DensityMatrix twirled = phase_twirl_sample(rho, samples, 17);
    CHECK(std::abs(twirled.matrix()(1, 2)) < 3.0 / std::sqrt(static_cast<double>(samples)));
    CHECK(twirled.matrix()(1, 1) == rho.matrix()(1, 1));
  }
  SUBCASE("fixed seed is bit-reproducible") {
    const DensityMatrix rho = DensityMatrix::pure(yurke_state(true));
    const Matrix x = phase_twirl_sample(rho, 500, 99).matrix();
    const Matrix y = phase_twirl_sample(rho, 500, 99).matrix();
    CHECK((x.array() == y.array()).all());
  }
  SUBCASE("zero samples are rejected") {
    const DensityMatrix rho = DensityMatrix::pure(yurke_state(true));
    CHECK_THROWS_AS((void)phase_twirl_sample(rho, 0, 1), std::invalid_argument);
  }
}

TEST_CASE("sector populations sum to one") {
  const DensityMatrix rho = DensityMatrix::pure(yurke_state(true));
  const auto table = sector_populations(rho);
  REQUIRE(table.size() == 3);
  double total = 0.0;
  for (const auto& [label, weight] : table) total += weight;
  CHECK(total == doctest::Approx(1.0).epsilon(1e-15));
}
