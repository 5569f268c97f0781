#include "doctest.h"
#include "oracles.hpp"

using namespace twisted;

namespace {

IntegerMatrix mat(std::initializer_list<std::initializer_list<int>> rows) {
  IntegerMatrix m(Index(rows.size()), Index(rows.begin()->size()));
  Index i = 0;
  for (const auto& row : rows) {
    Index j = 0;
    for (int v : row) m(i, j++) = v;
    ++i;
  }
  return m;
}

bool is_diagonal_chain(const IntegerMatrix& d) {
  Integer previous = 1;
  bool ended = false;
  for (Index i = 0; i < d.rows(); ++i) {
    for (Index j = 0; j < d.cols(); ++j) {
      if (i != j && d(i, j) != 0) return false;
    }
    if (i >= d.cols()) continue;
    const Integer x = d(i, i);
    if (x < 0) return false;
    if (x == 0) {
      ended = true;
    } else {
      if (ended || x % previous != 0) return false;
      previous = x;
    }
  }
  return true;
}

void check_smith(const IntegerMatrix& m) {
  const SmithForm s = smith_normal_form(m);
  CHECK(IntegerMatrix(s.U * m * s.V) == s.D);
  CHECK(oracle::abs_int(determinant(s.U)) == 1);
  CHECK(oracle::abs_int(determinant(s.V)) == 1);
  CHECK(is_diagonal_chain(s.D));
  CHECK(s.invariant_factors() == oracle::determinantal_invariant_factors(m));
}

}  // namespace

TEST_SUITE("smith") {

TEST_CASE("examples") {
  CHECK(smith_normal_form(mat({{0, 1}, {0, 0}})).D == mat({{1, 0}, {0, 0}}));
  CHECK(smith_normal_form(IntegerMatrix::Identity(4, 4)).D == IntegerMatrix::Identity(4, 4));
  CHECK(smith_normal_form(mat({{2, 0}, {0, 3}})).D == mat({{1, 0}, {0, 6}}));
  check_smith(mat({{0, 1}, {0, 0}}));
  check_smith(mat({{2, 0}, {0, 3}}));
  check_smith(mat({{2, 4, 4}, {-6, 6, 12}, {10, -4, -16}}));
}

TEST_CASE("empty and zero matrices") {
  CHECK(smith_normal_form(IntegerMatrix(0, 3)).rank() == 0);
  CHECK(smith_normal_form(IntegerMatrix::Zero(2, 3)).rank() == 0);
  check_smith(IntegerMatrix::Zero(3, 2));
}

TEST_CASE("random matrices against determinantal divisors") {
  oracle::Rng rng(7);
  for (int i = 0; i < 200; ++i) check_smith(oracle::random_integer_matrix(rng));
}

TEST_CASE("determinant and cokernel") {
  CHECK(determinant(mat({{2, 1}, {1, 1}})) == 1);
  CHECK(determinant(mat({{0, 1}, {1, 0}})) == -1);
  const auto g = cokernel(mat({{2, 0}, {0, 0}, {0, 0}}));
  CHECK(g.free_rank == 2);
  CHECK(g.torsion == std::vector<Integer>{2});
  CHECK(to_string(g) == "Z^2 + Z/2");
  CHECK(to_string(cokernel(IntegerMatrix::Identity(2, 2))) == "0");
}

}  // TEST_SUITE
