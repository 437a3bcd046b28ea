#include <doctest.h>

#include "test_support.hpp"
#include "zinbiel/linear_system.hpp"

using namespace zinbiel;

namespace {

LinearSystem system_of(const MatrixQ& m) {
  LinearSystem sys(m.cols());
  for (int r = 0; r < m.rows(); ++r) sys.add_dense_row(m.row(r));
  return sys;
}

}  // namespace

TEST_CASE("kernel of small fixed systems") {
  MatrixQ m(1, 2);
  m.at(0, 0) = 1;
  m.at(0, 1) = 2;
  auto result = system_of(m).solve_kernel();
  CHECK(result.rank == 1);
  CHECK(result.kernel.dim() == 1);
  // canonical basis of the kernel: leading entry 1
  CHECK(result.kernel.basis().at(0, 0) == 1);
  CHECK(result.kernel.basis().at(0, 1) == rational_of(-1, 2));
}

TEST_CASE("no equations means the full space") {
  LinearSystem sys(5);
  auto result = sys.solve_kernel();
  CHECK(result.rank == 0);
  CHECK(result.kernel.dim() == 5);
}

TEST_CASE("duplicate and rescaled equations are deduplicated") {
  LinearSystem sys(3);
  sys.add_row({{0, rational_of(1)}, {2, rational_of(-1)}});
  sys.add_row({{0, rational_of(2)}, {2, rational_of(-2)}});
  sys.add_row({{0, rational_of(-1, 3)}, {2, rational_of(1, 3)}});
  CHECK(sys.stored_rows() == 1);
  CHECK(sys.solve_kernel().kernel.dim() == 2);
}

TEST_CASE("engine agrees with the textbook nullspace on random matrices") {
  std::mt19937 rng(20240902);
  for (int trial = 0; trial < 40; ++trial) {
    std::uniform_int_distribution<int> rows(1, 24);
    std::uniform_int_distribution<int> cols(1, 16);
    const MatrixQ m = testing::random_matrix(rng, rows(rng), cols(rng));
    const Subspace expected = nullspace(m);
    const auto got = system_of(m).solve_kernel();
    CHECK(got.kernel == expected);
    CHECK(got.rank == m.cols() - expected.dim());
  }
}

TEST_CASE("engine agrees with the textbook nullspace beyond the exact-path cutoff") {
  std::mt19937 rng(555);
  for (int trial = 0; trial < 4; ++trial) {
    const MatrixQ m = testing::random_matrix(rng, 40, 110, 60);
    const Subspace expected = nullspace(m);
    const auto got = system_of(m).solve_kernel();
    CHECK(got.kernel == expected);
  }
  // and a wide system with a large kernel
  const MatrixQ wide = testing::random_matrix(rng, 11, 150, 50);
  CHECK(system_of(wide).solve_kernel().kernel == nullspace(wide));
}

TEST_CASE("kernel basis is canonical and exact for structured rows") {
  // Rows engineered so several equations vanish modulo small primes yet
  // matter exactly; the certificate must promote them.
  LinearSystem sys(4);
  const long p = 33554393;  // the engine's first sieve prime
  sys.add_row({{0, rational_of(1)}, {1, rational_of(1)}});
  sys.add_row({{0, rational_of(1)}, {1, rational_of(1 + p)}, {2, rational_of(p)}});
  auto result = sys.solve_kernel();
  CHECK(result.rank == 2);
  for (int i = 0; i < result.kernel.dim(); ++i) {
    const auto v = result.kernel.basis_vector(i);
    CHECK(v[0] + v[1] == 0);
    CHECK(v[0] + (1 + p) * v[1] + p * v[2] == 0);
  }
}

TEST_CASE("column bounds are enforced") {
  LinearSystem sys(3);
  CHECK_THROWS_AS(sys.add_row({{3, rational_of(1)}}), std::invalid_argument);
  CHECK_THROWS_AS(LinearSystem(0), std::invalid_argument);
}
