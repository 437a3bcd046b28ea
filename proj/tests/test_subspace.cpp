#include <doctest.h>

#include "test_support.hpp"
#include "zinbiel/subspace.hpp"

using namespace zinbiel;

namespace {

std::vector<Rational> vec(std::vector<long> entries) {
  std::vector<Rational> v;
  for (long e : entries) v.push_back(rational_of(e));
  return v;
}

}  // namespace

TEST_CASE("nullspace basics") {
  MatrixQ m(1, 2);
  m.at(0, 0) = 1;
  m.at(0, 1) = -1;
  const Subspace s = nullspace(m);
  CHECK(s.dim() == 1);
  CHECK(s.contains(vec({1, 1})));

  CHECK(nullspace(MatrixQ::identity(4)).dim() == 0);
  CHECK(nullspace(MatrixQ(2, 3)).dim() == 3);
}

TEST_CASE("nullspace vectors solve the system exactly, rank-nullity holds") {
  std::mt19937 rng(777);
  for (int trial = 0; trial < 30; ++trial) {
    std::uniform_int_distribution<int> size(1, 14);
    const MatrixQ m = testing::random_matrix(rng, size(rng), size(rng));
    const Subspace ker = nullspace(m);
    CHECK(rref(m).rank + ker.dim() == m.cols());
    for (int i = 0; i < ker.dim(); ++i) {
      const auto image = m.apply(ker.basis_vector(i));
      for (const Rational& x : image) CHECK(x == 0);
    }
    CHECK(is_canonical_rref(ker.basis()) || ker.dim() == 0);
  }
}

TEST_CASE("canonicity: same subspace from different spanning sets") {
  const Subspace a = Subspace::from_spanning(3, {vec({1, 1, 0}), vec({0, 0, 1})});
  const Subspace b = Subspace::from_spanning(3, {vec({2, 2, 2}), vec({0, 0, 5}), vec({1, 1, 3})});
  CHECK(a == b);
  CHECK(a.basis() == b.basis());
}

TEST_CASE("sum and intersection on the spec examples") {
  const Subspace ex = Subspace::from_spanning(2, {vec({1, 0})});
  const Subspace ey = Subspace::from_spanning(2, {vec({0, 1})});
  CHECK(Subspace::sum(ex, ey).dim() == 2);
  CHECK(Subspace::intersection(ex, ey).dim() == 0);

  CHECK(Subspace::sum(ex, ex) == ex);
  CHECK(Subspace::intersection(ex, ex) == ex);

  const Subspace plane = Subspace::full(2);
  const Subspace diag = Subspace::from_spanning(2, {vec({1, 1})});
  CHECK(Subspace::intersection(plane, diag) == diag);
  CHECK(Subspace::sum(plane, diag) == plane);
  CHECK(Subspace::sum(plane, diag).dim() + Subspace::intersection(plane, diag).dim() == 3);
}

TEST_CASE("Grassmann dimension formula on random subspaces") {
  std::mt19937 rng(4242);
  for (int trial = 0; trial < 25; ++trial) {
    const int ambient = 6;
    std::uniform_int_distribution<int> rows(0, 5);
    std::vector<std::vector<Rational>> sa, sb;
    for (int i = rows(rng); i > 0; --i) sa.push_back(testing::random_matrix(rng, 1, ambient).row(0));
    for (int i = rows(rng); i > 0; --i) sb.push_back(testing::random_matrix(rng, 1, ambient).row(0));
    const Subspace a = Subspace::from_spanning(ambient, sa);
    const Subspace b = Subspace::from_spanning(ambient, sb);
    const Subspace sum = Subspace::sum(a, b);
    const Subspace meet = Subspace::intersection(a, b);
    CHECK(sum.dim() + meet.dim() == a.dim() + b.dim());
    CHECK(sum.contains(a));
    CHECK(sum.contains(b));
    CHECK(a.contains(meet));
    CHECK(b.contains(meet));
  }
}

TEST_CASE("ambient mismatch is rejected") {
  const Subspace a = Subspace::full(2);
  const Subspace b = Subspace::full(3);
  CHECK_THROWS_AS(Subspace::sum(a, b), std::invalid_argument);
  CHECK_THROWS_AS(Subspace::intersection(a, b), std::invalid_argument);
  CHECK_THROWS_AS((void)a.contains(vec({1, 2, 3})), std::invalid_argument);
}
