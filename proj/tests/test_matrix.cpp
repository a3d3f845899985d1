#include <random>

#include "doctest.h"
#include "monoquiv/matrix.hpp"
#include "monoquiv/report.hpp"

using namespace monoquiv;

namespace {

Matrix random_matrix(std::mt19937_64& rng, std::size_t r, std::size_t c) {
  std::uniform_int_distribution<int> e(-2, 2);
  Matrix m(r, c);
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = 0; j < c; ++j) m(i, j) = e(rng);
  }
  return m;
}

}  // namespace

TEST_SUITE("matrix") {

TEST_CASE("rank and null space") {
  Matrix m(2, 3);
  m(0, 0) = 1; m(0, 1) = 2; m(0, 2) = 3;
  m(1, 0) = 2; m(1, 1) = 4; m(1, 2) = 6;
  CHECK(m.rank() == 1);
  Matrix n = null_space(m);
  CHECK(n.cols() == 2);
  CHECK((m * n).is_zero());
}

TEST_CASE("rank-nullity, quotients and solving on random matrices") {
  for (std::uint64_t t = 0; t < 200; ++t) {
    auto rng = trial_rng(51, t);
    std::uniform_int_distribution<int> sz(0, 4);
    Matrix m = random_matrix(rng, sz(rng), sz(rng));
    Matrix n = null_space(m);
    CHECK(n.rank() == n.cols());
    CHECK(m.rank() + n.cols() == m.cols());
    CHECK((m * n).is_zero());

    Quotient q = quotient_by_span(m, m.rows());
    CHECK(q.projection.rows() == m.rows() - m.rank());
    CHECK((q.projection * m).is_zero());
    CHECK(q.projection * q.section == Matrix::identity(q.projection.rows()));

    if (n.cols() > 0) {
      Matrix x = random_matrix(rng, n.cols(), 2);
      CHECK(solve_in_span(n, n * x) == x);
    }
  }
}

TEST_CASE("solve outside the span throws") {
  Matrix b(2, 1);
  b(0, 0) = 1;
  Matrix v(2, 1);
  v(1, 0) = 1;
  CHECK_THROWS_AS(solve_in_span(b, v), std::invalid_argument);
}

TEST_CASE("shape mismatch throws") {
  CHECK_THROWS_AS(Matrix(2, 3) * Matrix(2, 3), std::invalid_argument);
  CHECK_THROWS_AS(Matrix(2, 3) + Matrix(3, 2), std::invalid_argument);
}

TEST_CASE("rationals") {
  CHECK(rational_string(mpq_class(6, 4)) == "3/2");
  CHECK(rational_string(mpq_class(-2)) == "-2");
  CHECK(parse_rational("-6/4") == mpq_class(-3, 2));
  CHECK_THROWS(parse_rational("1/0"));
  CHECK_THROWS(parse_rational("abc"));
}

}  // TEST_SUITE
