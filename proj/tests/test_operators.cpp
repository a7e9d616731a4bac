#include "doctest.h"

#include "ssrbell/operators.hpp"
#include "ssrbell/states.hpp"
#include "support/random_states.hpp"

#include <numbers>

using namespace ssrbell;
using namespace ssrbell::testing;

TEST_CASE("embedding the local identity gives the global identity") {
  const auto space = yurke_state(true).handle();
  for (Region r : {Region::A, Region::B}) {
    const Operator id = embed_local(LocalOperator::identity(space, r));
    CHECK(max_abs(id.matrix() - Matrix::Identity(36, 36)) == 0.0);
  }
}

TEST_CASE("local Pauli-Z on the occupation qubit is diagonal in the A occupation") {
  const auto space = single_particle_space();
  Matrix z(2, 2);
  z << 1, 0, 0, -1;
  const Operator global = embed_local(LocalOperator(space, Region::A, z));
  for (std::size_t k = 0; k < space->dimension(); ++k) {
    const int n_a = space->state(k).occupations[0];
    CHECK(global.matrix()(static_cast<Eigen::Index>(k), static_cast<Eigen::Index>(k)).real() ==
          (n_a == 0 ? 1.0 : -1.0));
  }
  CHECK(max_abs(global.matrix() - Matrix(global.matrix().diagonal().asDiagonal())) == 0.0);
}

TEST_CASE("operators on opposite regions commute") {
  std::mt19937_64 rng(11);
  const auto space = yurke_state(true).handle();
  for (int t = 0; t < 10; ++t) {
    const Operator x = embed_local(LocalOperator(space, Region::A, ginibre(6, 6, rng)));
    const Operator y = embed_local(LocalOperator(space, Region::B, ginibre(6, 6, rng)));
    CHECK(max_abs(x.matrix() * y.matrix() - y.matrix() * x.matrix()) < 1e-13);
  }
}

TEST_CASE("local operator dimension mismatch is rejected") {
  const auto space = single_particle_space();
  CHECK_THROWS_AS(LocalOperator(space, Region::A, Matrix::Identity(3, 3)), std::invalid_argument);
}

TEST_CASE("partial trace") {
  std::mt19937_64 rng(3);
  const auto space = yurke_state(false).handle();

  SUBCASE("product state returns its factor") {
    Matrix pa = ginibre(4, 4, rng);
    pa = pa * pa.adjoint();
    pa /= pa.trace();
    Matrix pb = ginibre(4, 4, rng);
    pb = pb * pb.adjoint();
    pb /= pb.trace();
    const DensityMatrix rho(space, hermitian_part(kron(pa, pb)));
    CHECK(max_abs(partial_trace(rho, Region::A).matrix() - pa) < 1e-14);
    CHECK(max_abs(partial_trace(rho, Region::B).matrix() - pb) < 1e-14);
  }

  SUBCASE("split single particle has a maximally mixed reduced state") {
    const double h = std::numbers::sqrt2 / 2.0;
    const auto rho = DensityMatrix::pure(single_particle_split({h, h}));
    const Matrix reduced = partial_trace(rho, Region::A).matrix();
    CHECK(max_abs(reduced - 0.5 * Matrix::Identity(2, 2)) < 1e-15);
  }

  SUBCASE("trace is preserved and local operators pull out") {
    for (int t = 0; t < 20; ++t) {
      const DensityMatrix rho = random_density(space, rng);
      for (Region keep : {Region::A, Region::B}) {
        CHECK(std::abs(partial_trace(rho, keep).matrix().trace() - Complex{1.0}) < 1e-12);
      }
      const LocalOperator o(space, Region::A, ginibre(4, 4, rng));
      const Matrix lhs = embed_local(o).matrix() * rho.matrix();
      // Tr_B[(O_A (x) 1) rho] = O_A Tr_B[rho]
      Matrix reduced_lhs = Matrix::Zero(4, 4);
      for (std::size_t a = 0; a < 4; ++a)
        for (std::size_t ap = 0; ap < 4; ++ap)
          for (std::size_t b = 0; b < 4; ++b)
            reduced_lhs(static_cast<Eigen::Index>(a), static_cast<Eigen::Index>(ap)) +=
                lhs(static_cast<Eigen::Index>(space->global_index(a, b)),
                    static_cast<Eigen::Index>(space->global_index(ap, b)));
      CHECK(max_abs(reduced_lhs - o.matrix() * partial_trace(rho, Region::A).matrix()) < 1e-12);
    }
  }
}

TEST_CASE("contract_local reproduces the product expectation") {
  std::mt19937_64 rng(5);
  const auto space = yurke_state(true).handle();
  for (int t = 0; t < 10; ++t) {
    const DensityMatrix rho = random_density(space, rng);
    const LocalOperator a(space, Region::A, random_hermitian(6, rng));
    const LocalOperator b(space, Region::B, random_hermitian(6, rng));
    const Complex direct = (rho.matrix() * kron(a.matrix(), b.matrix())).trace();
    CHECK(std::abs(product_expectation(rho.matrix(), a, b) - direct) < 1e-12);
    CHECK(std::abs(product_expectation(rho.matrix(), b, a) - direct) < 1e-12);
  }
}

TEST_CASE("density matrix validation") {
  const auto space = single_particle_space();
  CHECK_THROWS_AS(DensityMatrix(space, Matrix::Identity(4, 4)), std::invalid_argument);
  Matrix negative = Matrix::Zero(4, 4);
  negative(0, 0) = 1.5;
  negative(1, 1) = -0.5;
  CHECK_THROWS_AS(DensityMatrix(space, negative), std::invalid_argument);
  Matrix skew = 0.25 * Matrix::Identity(4, 4);
  skew(0, 1) = 0.1;
  CHECK_THROWS_AS(DensityMatrix(space, skew), std::invalid_argument);
  CHECK_NOTHROW(DensityMatrix(space, 0.25 * Matrix::Identity(4, 4)));
}

TEST_CASE("creation operator carries the bosonic sqrt(n + 1) factor") {
  const auto space = bosonic_space(3);
  StateVector ket = StateVector::vacuum(space);
  ket = apply_creation(ket, 0);
  ket = apply_creation(ket, 0);
  CHECK(std::abs(ket.amplitude(OccupationState{{2, 0}}) - Complex{std::sqrt(2.0)}) < 1e-15);
  ket = apply_creation(ket, 0);
  CHECK(std::abs(ket.amplitude(OccupationState{{3, 0}}) - Complex{std::sqrt(6.0)}) < 1e-14);
  CHECK_THROWS_AS((void)apply_creation(ket, 0), std::out_of_range);
}
