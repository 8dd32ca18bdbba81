#pragma once

#include <gmpxx.h>

#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

namespace hocolim::zmat {

using Int = mpz_class;

/// Dense matrix over Z with arbitrary-precision entries. The 0xn and nx0
/// matrices are valid and represent zero maps.
class IntMatrix {
 public:
  IntMatrix() : rows_(0), cols_(0) {}
  IntMatrix(long rows, long cols);
  IntMatrix(std::initializer_list<std::initializer_list<long>> rows);

  static IntMatrix identity(long n);
  static IntMatrix zero(long rows, long cols) { return IntMatrix(rows, cols); }

  long rows() const { return rows_; }
  long cols() const { return cols_; }

  Int& at(long r, long c);
  const Int& at(long r, long c) const;

  bool is_zero() const;
  bool is_identity() const;
  bool operator==(const IntMatrix& o) const;
  bool operator!=(const IntMatrix& o) const { return !(*this == o); }

  IntMatrix operator*(const IntMatrix& o) const;
  IntMatrix operator+(const IntMatrix& o) const;
  IntMatrix operator-(const IntMatrix& o) const;
  IntMatrix operator-() const;
  IntMatrix operator*(const Int& k) const;

  IntMatrix transpose() const;
  std::vector<Int> col(long c) const;
  IntMatrix col_matrix(long c) const;  // single column as an n x 1 matrix
  std::vector<Int> row(long r) const;
  void set_col(long c, const std::vector<Int>& v);

  /// Columns [c0, c1) as a new matrix.
  IntMatrix cols_slice(long c0, long c1) const;

  std::vector<Int> apply(const std::vector<Int>& v) const;  // matrix * vector

  std::string to_string() const;

 private:
  long rows_, cols_;
  std::vector<Int> e_;  // row-major
};

inline IntMatrix operator*(const Int& k, const IntMatrix& m) { return m * k; }

IntMatrix hstack(const IntMatrix& a, const IntMatrix& b);
IntMatrix vstack(const IntMatrix& a, const IntMatrix& b);
IntMatrix hstack(const std::vector<IntMatrix>& blocks);
IntMatrix block_diag(const IntMatrix& a, const IntMatrix& b);
IntMatrix kronecker(const IntMatrix& a, const IntMatrix& b);

/// U * A * V = diag(d), with d[i] >= 0, d[i] | d[i+1] and zeros trailing.
/// U, V are unimodular; Uinv, Vinv are their exact inverses.
struct SnfResult {
  std::vector<Int> d;
  IntMatrix U, V, Uinv, Vinv;
  /// Diagonal entry, 0 beyond the stored list.
  Int diag(long i) const { return i < (long)d.size() ? d[i] : Int(0); }
  long rank() const;
};

SnfResult smith_normal_form(const IntMatrix& a);

/// Solves A x = b over Z; nullopt when unsolvable.
std::optional<std::vector<Int>> solve_integer(const IntMatrix& a,
                                              const std::vector<Int>& b);

/// Columnwise solve A X = B; nullopt when any column is unsolvable.
std::optional<IntMatrix> solve_integer(const IntMatrix& a, const IntMatrix& b);

struct KernelImage {
  IntMatrix kernel;  // columns: a basis of ker(A), a saturated lattice
  IntMatrix image;   // columns: a basis of the column lattice of A
};

KernelImage kernel_and_image(const IntMatrix& a);

/// True when every column of m lies in the column lattice of basis.
bool in_lattice(const IntMatrix& basis, const IntMatrix& m);

}  // namespace hocolim::zmat
