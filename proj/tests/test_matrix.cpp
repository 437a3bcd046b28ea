#include <doctest.h>

#include "test_support.hpp"
#include "zinbiel/matrix.hpp"

using namespace zinbiel;

namespace {

MatrixQ from_ints(std::vector<std::vector<long>> rows) {
  MatrixQ m(static_cast<int>(rows.size()), static_cast<int>(rows[0].size()));
  for (int r = 0; r < m.rows(); ++r)
    for (int c = 0; c < m.cols(); ++c) m.at(r, c) = rational_of(rows[r][c]);
  return m;
}

}  // namespace

TEST_CASE("rref of proportional rows") {
  const RrefResult red = rref(from_ints({{2, 4}, {1, 2}}));
  CHECK(red.rank == 1);
  CHECK(red.matrix == from_ints({{1, 2}, {0, 0}}));
}

TEST_CASE("rref fixed points") {
  CHECK(rref(MatrixQ::identity(3)).rank == 3);
  CHECK(rref(MatrixQ::identity(3)).matrix == MatrixQ::identity(3));
  const RrefResult zero = rref(from_ints({{0, 0}, {0, 0}}));
  CHECK(zero.rank == 0);
  CHECK(zero.matrix.is_zero());
}

TEST_CASE("rref is idempotent and respects rank-nullity on random matrices") {
  std::mt19937 rng(12345);
  for (int trial = 0; trial < 40; ++trial) {
    std::uniform_int_distribution<int> size(1, 20);
    const MatrixQ m = testing::random_matrix(rng, size(rng), size(rng));
    const RrefResult once = rref(m);
    const RrefResult twice = rref(once.matrix);
    CHECK(once.matrix == twice.matrix);
    CHECK(once.rank == twice.rank);
    CHECK(static_cast<int>(once.pivot_cols.size()) == once.rank);
  }
}

TEST_CASE("canonical form detector") {
  CHECK(is_canonical_rref(MatrixQ::identity(4)));
  CHECK(is_canonical_rref(from_ints({{1, 2, 0}, {0, 0, 1}})));
  CHECK(!is_canonical_rref(from_ints({{2, 0}, {0, 1}})));   // pivot not 1
  CHECK(!is_canonical_rref(from_ints({{1, 0}, {0, 0}})));   // zero row
  CHECK(!is_canonical_rref(from_ints({{0, 1}, {1, 0}})));   // pivots not increasing
  CHECK(!is_canonical_rref(from_ints({{1, 1}, {0, 1}})));   // nonzero above pivot
}

TEST_CASE("operator vectorization is column-major and invertible") {
  MatrixQ m(2, 2);
  m.at(0, 0) = 1;
  m.at(1, 0) = 2;
  m.at(0, 1) = 3;
  m.at(1, 1) = 4;
  const std::vector<Rational> v = vectorize_operator(m);
  CHECK(v[0] == 1);
  CHECK(v[1] == 2);
  CHECK(v[2] == 3);
  CHECK(v[3] == 4);
  CHECK(operator_from_vector(v, 2) == m);
}

TEST_CASE("commutator of commuting matrices vanishes") {
  const MatrixQ a = from_ints({{1, 0}, {0, 2}});
  const MatrixQ b = from_ints({{3, 0}, {0, 5}});
  CHECK(commutator(a, b).is_zero());
  CHECK(!commutator(a, from_ints({{0, 1}, {0, 0}})).is_zero());
}
