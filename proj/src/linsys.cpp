#include "hocolim/linsys.hpp"

#include <stdexcept>

namespace hocolim::zmat {

int LinearSystem::add_unknown(long rows, long cols) {
  vars_.push_back({rows, cols, total_});
  total_ += rows * cols;
  return (int)vars_.size() - 1;
}

void LinearSystem::add_constraint(std::vector<Term> terms,
                                  const IntMatrix& rhs) {
  for (const auto& t : terms) {
    const Shape& s = vars_.at((size_t)t.var);
    if (t.left.cols() != s.rows || t.right.rows() != s.cols ||
        t.left.rows() != rhs.rows() || t.right.cols() != rhs.cols())
      throw std::invalid_argument("LinearSystem: term shape mismatch");
  }
  constraints_.push_back({std::move(terms), rhs});
}

void LinearSystem::assemble(IntMatrix& a, std::vector<Int>& b) const {
  long eqs = 0;
  for (const auto& c : constraints_) eqs += c.rhs.rows() * c.rhs.cols();
  a = IntMatrix(eqs, total_);
  b.assign((size_t)eqs, Int(0));
  long row0 = 0;
  for (const auto& c : constraints_) {
    long r = c.rhs.rows(), m = c.rhs.cols();
    // column-major vec of rhs
    for (long j = 0; j < m; ++j)
      for (long i = 0; i < r; ++i) b[(size_t)(row0 + j * r + i)] = c.rhs.at(i, j);
    for (const auto& t : c.terms) {
      const Shape& s = vars_[(size_t)t.var];
      // vec(L X R) = (R^T kron L) vec(X), column-major
      IntMatrix block = kronecker(t.right.transpose(), t.left);
      for (long i = 0; i < block.rows(); ++i)
        for (long j = 0; j < block.cols(); ++j)
          if (block.at(i, j) != 0)
            a.at(row0 + i, s.offset + j) += block.at(i, j);
    }
    row0 += r * m;
  }
}

std::vector<IntMatrix> LinearSystem::unpack(const std::vector<Int>& x) const {
  std::vector<IntMatrix> out;
  out.reserve(vars_.size());
  for (const auto& s : vars_) {
    IntMatrix m(s.rows, s.cols);
    for (long j = 0; j < s.cols; ++j)
      for (long i = 0; i < s.rows; ++i)
        m.at(i, j) = x[(size_t)(s.offset + j * s.rows + i)];
    out.push_back(std::move(m));
  }
  return out;
}

std::optional<std::vector<IntMatrix>> LinearSystem::solve() const {
  IntMatrix a;
  std::vector<Int> b;
  assemble(a, b);
  auto x = solve_integer(a, b);
  if (!x) return std::nullopt;
  return unpack(*x);
}

std::optional<std::vector<IntMatrix>> LinearSystem::solve_random(
    std::mt19937_64& rng, long bound) const {
  IntMatrix a;
  std::vector<Int> b;
  assemble(a, b);
  auto x = solve_integer(a, b);
  if (!x) return std::nullopt;
  IntMatrix ker = kernel_and_image(a).kernel;
  std::uniform_int_distribution<long> coeff(-bound, bound);
  for (long c = 0; c < ker.cols(); ++c) {
    Int k(coeff(rng));
    if (k == 0) continue;
    for (long i = 0; i < ker.rows(); ++i) (*x)[(size_t)i] += k * ker.at(i, c);
  }
  return unpack(*x);
}

}  // namespace hocolim::zmat
