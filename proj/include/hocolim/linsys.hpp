#pragma once

#include <optional>
#include <random>
#include <vector>

#include "hocolim/zmat.hpp"

namespace hocolim::zmat {

/// Linear system over Z in matrix unknowns. Each constraint has the shape
///   sum_i  L_i * X_{v_i} * R_i = rhs
/// which vectorizes to (R^T kron L) on column-major vec(X). Used for
/// splittings, lifts, chain-map solving and randomized map generation.
class LinearSystem {
 public:
  struct Term {
    int var;
    IntMatrix left, right;
  };

  int add_unknown(long rows, long cols);
  void add_constraint(std::vector<Term> terms, const IntMatrix& rhs);

  /// One solution, or nullopt when the system is unsolvable over Z.
  std::optional<std::vector<IntMatrix>> solve() const;

  /// Particular solution plus a random element of the homogeneous kernel
  /// with coefficients in [-bound, bound].
  std::optional<std::vector<IntMatrix>> solve_random(std::mt19937_64& rng,
                                                     long bound) const;

 private:
  struct Shape {
    long rows, cols, offset;
  };
  struct Constraint {
    std::vector<Term> terms;
    IntMatrix rhs;
  };

  std::vector<IntMatrix> unpack(const std::vector<Int>& x) const;
  void assemble(IntMatrix& a, std::vector<Int>& b) const;

  std::vector<Shape> vars_;
  std::vector<Constraint> constraints_;
  long total_ = 0;
};

}  // namespace hocolim::zmat
