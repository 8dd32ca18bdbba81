#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "hocolim/linsys.hpp"
#include "hocolim/zmat.hpp"

using namespace hocolim::zmat;

namespace {

Int det(const IntMatrix& m) {
  REQUIRE(m.rows() == m.cols());
  if (m.rows() == 0) return 1;
  // Laplace expansion; only used on tiny matrices in tests.
  if (m.rows() == 1) return m.at(0, 0);
  Int out = 0;
  for (long i = 0; i < m.rows(); ++i) {
    IntMatrix minor(m.rows() - 1, m.cols() - 1);
    for (long r = 0, rr = 0; r < m.rows(); ++r) {
      if (r == i) continue;
      for (long c = 1; c < m.cols(); ++c) minor.at(rr, c - 1) = m.at(r, c);
      ++rr;
    }
    const Int term = m.at(i, 0) * det(minor);
    out += (i % 2 == 0) ? term : -term;
  }
  return out;
}

IntMatrix random_matrix(std::mt19937_64& rng, long rows, long cols, long bound) {
  IntMatrix m(rows, cols);
  std::uniform_int_distribution<long> dist(-bound, bound);
  for (long i = 0; i < rows; ++i)
    for (long j = 0; j < cols; ++j) m.at(i, j) = dist(rng);
  return m;
}

}  // namespace

TEST_CASE("smith normal form on the 2x2 reference matrix") {
  const IntMatrix a{{2, 4}, {6, 8}};
  const auto snf = smith_normal_form(a);
  REQUIRE(snf.d.size() == 2);
  CHECK(snf.d[0] == 2);
  CHECK(snf.d[1] == 4);
  // cross-checks independent of the reduction: |det| and entry gcd
  CHECK(abs(det(a)) == snf.d[0] * snf.d[1]);
  CHECK(gcd(gcd(Int(2), Int(4)), gcd(Int(6), Int(8))) == snf.d[0]);
  CHECK(snf.U * a * snf.V == IntMatrix{{2, 0}, {0, 4}});
}

TEST_CASE("smith normal form edge cases") {
  const auto empty = smith_normal_form(IntMatrix(0, 0));
  CHECK(empty.d.empty());

  const auto id3 = smith_normal_form(IntMatrix::identity(3));
  REQUIRE(id3.d.size() == 3);
  for (const auto& d : id3.d) CHECK(d == 1);

  const auto zero = smith_normal_form(IntMatrix(2, 3));
  for (const auto& d : zero.d) CHECK(d == 0);
}

TEST_CASE("solve_integer reference cases") {
  SUBCASE("scalar divisible") {
    const auto x = solve_integer(IntMatrix{{2}}, IntMatrix{{4}});
    REQUIRE(x.has_value());
    CHECK(x->at(0, 0) == 2);
  }
  SUBCASE("scalar parity obstruction") {
    CHECK_FALSE(solve_integer(IntMatrix{{2}}, IntMatrix{{3}}).has_value());
  }
  SUBCASE("upper triangular back-substitution") {
    const auto x = solve_integer(IntMatrix{{1, 1}, {0, 2}}, IntMatrix{{3}, {4}});
    REQUIRE(x.has_value());
    CHECK(x->at(0, 0) == 1);
    CHECK(x->at(1, 0) == 2);
  }
}

TEST_CASE("kernel and image reference cases") {
  SUBCASE("injective scalar") {
    const auto ki = kernel_and_image(IntMatrix{{2}});
    CHECK(ki.kernel.cols() == 0);
    REQUIRE(ki.image.cols() == 1);
    CHECK(abs(ki.image.at(0, 0)) == 2);
  }
  SUBCASE("zero 2x2") {
    const auto ki = kernel_and_image(IntMatrix(2, 2));
    CHECK(ki.kernel.cols() == 2);
    CHECK(ki.image.cols() == 0);
  }
  SUBCASE("rank one with saturated kernel") {
    const auto ki = kernel_and_image(IntMatrix{{1, 2}, {2, 4}});
    REQUIRE(ki.kernel.cols() == 1);
    // kernel generated by (2, -1) up to sign
    CHECK(abs(ki.kernel.at(0, 0)) == 2);
    CHECK(abs(ki.kernel.at(1, 0)) == 1);
    CHECK(ki.image.cols() == 1);
  }
}

TEST_CASE("randomized snf properties") {
  std::mt19937_64 rng(20240817);
  std::uniform_int_distribution<long> dim(0, 6);
  for (int trial = 0; trial < 120; ++trial) {
    const long r = dim(rng), c = dim(rng);
    const auto a = random_matrix(rng, r, c, 5);
    const auto snf = smith_normal_form(a);

    IntMatrix diag(r, c);
    for (size_t i = 0; i < snf.d.size(); ++i) diag.at(i, i) = snf.d[i];
    CHECK(snf.U * a * snf.V == diag);
    CHECK(snf.U * snf.Uinv == IntMatrix::identity(r));
    CHECK(snf.V * snf.Vinv == IntMatrix::identity(c));
    CHECK(abs(det(snf.U)) == 1);
    CHECK(abs(det(snf.V)) == 1);
    for (size_t i = 0; i + 1 < snf.d.size(); ++i) {
      CHECK(snf.d[i] >= 0);
      if (snf.d[i] != 0) CHECK(snf.d[i + 1] % snf.d[i] == 0);
      if (snf.d[i] == 0) CHECK(snf.d[i + 1] == 0);
    }
  }
}

TEST_CASE("randomized solve and kernel properties") {
  std::mt19937_64 rng(77);
  std::uniform_int_distribution<long> dim(1, 5);
  for (int trial = 0; trial < 80; ++trial) {
    const long r = dim(rng), c = dim(rng);
    const auto a = random_matrix(rng, r, c, 4);

    // a known-solvable system: b = A * x0
    const auto x0 = random_matrix(rng, c, 1, 3);
    const auto sol = solve_integer(a, a * x0);
    REQUIRE(sol.has_value());
    CHECK(a * *sol == a * x0);

    const auto ki = kernel_and_image(a);
    if (ki.kernel.cols() > 0) CHECK((a * ki.kernel).is_zero());
    // every image basis vector is hit
    for (long j = 0; j < ki.image.cols(); ++j)
      CHECK(solve_integer(a, ki.image.col(j)).has_value());
    // saturation: v/k in the kernel lattice whenever k*v is and v maps to 0
    for (long j = 0; j < ki.kernel.cols(); ++j)
      CHECK(in_lattice(ki.kernel, ki.kernel.col_matrix(j)));
  }
}

TEST_CASE("kernel saturation witness") {
  // A = [[2, 0]]: kernel lattice is generated by (0,1); (0,2) lies inside and
  // its half must too.
  const auto ki = kernel_and_image(IntMatrix{{2, 0}});
  REQUIRE(ki.kernel.cols() == 1);
  IntMatrix v(2, 1);
  v.at(1, 0) = 1;
  CHECK(in_lattice(ki.kernel, v));
}

TEST_CASE("linear system solver on matrix unknowns") {
  // Find X with A X = B where a solution clearly exists.
  LinearSystem sys;
  const int x = sys.add_unknown(2, 2);
  const IntMatrix a{{1, 2}, {0, 1}};
  const IntMatrix b{{3, 4}, {1, 0}};
  sys.add_constraint({{x, a, IntMatrix::identity(2)}}, b);
  const auto sol = sys.solve();
  REQUIRE(sol.has_value());
  CHECK(a * (*sol)[x] == b);
}

TEST_CASE("linear system detects unsolvable constraints") {
  LinearSystem sys;
  const int x = sys.add_unknown(1, 1);
  sys.add_constraint({{x, IntMatrix{{2}}, IntMatrix::identity(1)}}, IntMatrix{{3}});
  CHECK_FALSE(sys.solve().has_value());
}

TEST_CASE("randomized solutions stay solutions") {
  std::mt19937_64 rng(5);
  LinearSystem sys;
  const int x = sys.add_unknown(2, 3);
  const IntMatrix a{{1, 0}, {0, 2}};
  const IntMatrix rhs(2, 3);
  sys.add_constraint({{x, a, IntMatrix::identity(3)}}, rhs);
  for (int trial = 0; trial < 10; ++trial) {
    const auto sol = sys.solve_random(rng, 4);
    REQUIRE(sol.has_value());
    CHECK(a * (*sol)[x] == rhs);
  }
}
