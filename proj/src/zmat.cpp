#include "hocolim/zmat.hpp"

#include <sstream>
#include <stdexcept>

namespace hocolim::zmat {

IntMatrix::IntMatrix(long rows, long cols) : rows_(rows), cols_(cols) {
  if (rows < 0 || cols < 0) throw std::invalid_argument("negative dimension");
  e_.assign((size_t)rows * cols, Int(0));
}

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> rows) {
  rows_ = (long)rows.size();
  cols_ = rows_ ? (long)rows.begin()->size() : 0;
  e_.reserve((size_t)rows_ * cols_);
  for (const auto& r : rows) {
    if ((long)r.size() != cols_) throw std::invalid_argument("ragged rows");
    for (long v : r) e_.emplace_back(v);
  }
}

IntMatrix IntMatrix::identity(long n) {
  IntMatrix m(n, n);
  for (long i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

Int& IntMatrix::at(long r, long c) {
  if (r < 0 || r >= rows_ || c < 0 || c >= cols_)
    throw std::out_of_range("IntMatrix::at");
  return e_[(size_t)r * cols_ + c];
}

const Int& IntMatrix::at(long r, long c) const {
  if (r < 0 || r >= rows_ || c < 0 || c >= cols_)
    throw std::out_of_range("IntMatrix::at");
  return e_[(size_t)r * cols_ + c];
}

bool IntMatrix::is_zero() const {
  for (const auto& v : e_)
    if (v != 0) return false;
  return true;
}

bool IntMatrix::is_identity() const {
  if (rows_ != cols_) return false;
  for (long i = 0; i < rows_; ++i)
    for (long j = 0; j < cols_; ++j)
      if (at(i, j) != (i == j ? 1 : 0)) return false;
  return true;
}

bool IntMatrix::operator==(const IntMatrix& o) const {
  return rows_ == o.rows_ && cols_ == o.cols_ && e_ == o.e_;
}

IntMatrix IntMatrix::operator*(const IntMatrix& o) const {
  if (cols_ != o.rows_) throw std::invalid_argument("matmul shape mismatch");
  IntMatrix r(rows_, o.cols_);
  for (long i = 0; i < rows_; ++i)
    for (long k = 0; k < cols_; ++k) {
      const Int& a = at(i, k);
      if (a == 0) continue;
      for (long j = 0; j < o.cols_; ++j) r.at(i, j) += a * o.at(k, j);
    }
  return r;
}

IntMatrix IntMatrix::operator+(const IntMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_)
    throw std::invalid_argument("add shape mismatch");
  IntMatrix r = *this;
  for (size_t i = 0; i < e_.size(); ++i) r.e_[i] += o.e_[i];
  return r;
}

IntMatrix IntMatrix::operator-(const IntMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_)
    throw std::invalid_argument("sub shape mismatch");
  IntMatrix r = *this;
  for (size_t i = 0; i < e_.size(); ++i) r.e_[i] -= o.e_[i];
  return r;
}

IntMatrix IntMatrix::operator-() const {
  IntMatrix r = *this;
  for (auto& v : r.e_) v = -v;
  return r;
}

IntMatrix IntMatrix::operator*(const Int& k) const {
  IntMatrix r = *this;
  for (auto& v : r.e_) v *= k;
  return r;
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix r(cols_, rows_);
  for (long i = 0; i < rows_; ++i)
    for (long j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
  return r;
}

std::vector<Int> IntMatrix::col(long c) const {
  std::vector<Int> v((size_t)rows_);
  for (long i = 0; i < rows_; ++i) v[i] = at(i, c);
  return v;
}

IntMatrix IntMatrix::col_matrix(long c) const {
  IntMatrix m(rows_, 1);
  for (long i = 0; i < rows_; ++i) m.at(i, 0) = at(i, c);
  return m;
}

std::vector<Int> IntMatrix::row(long r) const {
  std::vector<Int> v((size_t)cols_);
  for (long j = 0; j < cols_; ++j) v[j] = at(r, j);
  return v;
}

void IntMatrix::set_col(long c, const std::vector<Int>& v) {
  if ((long)v.size() != rows_) throw std::invalid_argument("set_col size");
  for (long i = 0; i < rows_; ++i) at(i, c) = v[i];
}

IntMatrix IntMatrix::cols_slice(long c0, long c1) const {
  if (c0 < 0 || c1 < c0 || c1 > cols_) throw std::out_of_range("cols_slice");
  IntMatrix r(rows_, c1 - c0);
  for (long i = 0; i < rows_; ++i)
    for (long j = c0; j < c1; ++j) r.at(i, j - c0) = at(i, j);
  return r;
}

std::vector<Int> IntMatrix::apply(const std::vector<Int>& v) const {
  if ((long)v.size() != cols_) throw std::invalid_argument("apply size");
  std::vector<Int> r((size_t)rows_, Int(0));
  for (long i = 0; i < rows_; ++i)
    for (long j = 0; j < cols_; ++j)
      if (at(i, j) != 0) r[i] += at(i, j) * v[j];
  return r;
}

std::string IntMatrix::to_string() const {
  std::ostringstream os;
  os << "[";
  for (long i = 0; i < rows_; ++i) {
    os << (i ? ", [" : "[");
    for (long j = 0; j < cols_; ++j) os << (j ? "," : "") << at(i, j).get_str();
    os << "]";
  }
  os << "]";
  return os.str();
}

IntMatrix hstack(const IntMatrix& a, const IntMatrix& b) {
  if (a.rows() != b.rows()) throw std::invalid_argument("hstack rows");
  IntMatrix r(a.rows(), a.cols() + b.cols());
  for (long i = 0; i < a.rows(); ++i) {
    for (long j = 0; j < a.cols(); ++j) r.at(i, j) = a.at(i, j);
    for (long j = 0; j < b.cols(); ++j) r.at(i, a.cols() + j) = b.at(i, j);
  }
  return r;
}

IntMatrix hstack(const std::vector<IntMatrix>& blocks) {
  if (blocks.empty()) return IntMatrix();
  IntMatrix r = blocks[0];
  for (size_t i = 1; i < blocks.size(); ++i) r = hstack(r, blocks[i]);
  return r;
}

IntMatrix vstack(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols() != b.cols()) throw std::invalid_argument("vstack cols");
  IntMatrix r(a.rows() + b.rows(), a.cols());
  for (long j = 0; j < a.cols(); ++j) {
    for (long i = 0; i < a.rows(); ++i) r.at(i, j) = a.at(i, j);
    for (long i = 0; i < b.rows(); ++i) r.at(a.rows() + i, j) = b.at(i, j);
  }
  return r;
}

IntMatrix block_diag(const IntMatrix& a, const IntMatrix& b) {
  IntMatrix r(a.rows() + b.rows(), a.cols() + b.cols());
  for (long i = 0; i < a.rows(); ++i)
    for (long j = 0; j < a.cols(); ++j) r.at(i, j) = a.at(i, j);
  for (long i = 0; i < b.rows(); ++i)
    for (long j = 0; j < b.cols(); ++j)
      r.at(a.rows() + i, a.cols() + j) = b.at(i, j);
  return r;
}

IntMatrix kronecker(const IntMatrix& a, const IntMatrix& b) {
  IntMatrix r(a.rows() * b.rows(), a.cols() * b.cols());
  for (long i = 0; i < a.rows(); ++i)
    for (long j = 0; j < a.cols(); ++j) {
      if (a.at(i, j) == 0) continue;
      for (long p = 0; p < b.rows(); ++p)
        for (long q = 0; q < b.cols(); ++q)
          r.at(i * b.rows() + p, j * b.cols() + q) = a.at(i, j) * b.at(p, q);
    }
  return r;
}

long SnfResult::rank() const {
  long r = 0;
  for (const auto& v : d)
    if (v != 0) ++r;
  return r;
}

namespace {

struct SnfState {
  IntMatrix m, u, uinv, v, vinv;

  explicit SnfState(const IntMatrix& a)
      : m(a),
        u(IntMatrix::identity(a.rows())),
        uinv(IntMatrix::identity(a.rows())),
        v(IntMatrix::identity(a.cols())),
        vinv(IntMatrix::identity(a.cols())) {}

  // row_i -= q * row_t on m and u; inverse column op on uinv
  void row_sub(long i, long t, const Int& q) {
    if (q == 0) return;
    for (long j = 0; j < m.cols(); ++j) m.at(i, j) -= q * m.at(t, j);
    for (long j = 0; j < u.cols(); ++j) u.at(i, j) -= q * u.at(t, j);
    for (long r = 0; r < uinv.rows(); ++r) uinv.at(r, t) += q * uinv.at(r, i);
  }
  void col_sub(long j, long t, const Int& q) {
    if (q == 0) return;
    for (long i = 0; i < m.rows(); ++i) m.at(i, j) -= q * m.at(i, t);
    for (long i = 0; i < v.rows(); ++i) v.at(i, j) -= q * v.at(i, t);
    for (long c = 0; c < vinv.cols(); ++c) vinv.at(t, c) += q * vinv.at(j, c);
  }
  void row_swap(long i, long t) {
    if (i == t) return;
    for (long j = 0; j < m.cols(); ++j) std::swap(m.at(i, j), m.at(t, j));
    for (long j = 0; j < u.cols(); ++j) std::swap(u.at(i, j), u.at(t, j));
    for (long r = 0; r < uinv.rows(); ++r)
      std::swap(uinv.at(r, i), uinv.at(r, t));
  }
  void col_swap(long j, long t) {
    if (j == t) return;
    for (long i = 0; i < m.rows(); ++i) std::swap(m.at(i, j), m.at(i, t));
    for (long i = 0; i < v.rows(); ++i) std::swap(v.at(i, j), v.at(i, t));
    for (long c = 0; c < vinv.cols(); ++c)
      std::swap(vinv.at(j, c), vinv.at(t, c));
  }
  void row_negate(long i) {
    for (long j = 0; j < m.cols(); ++j) m.at(i, j) = -m.at(i, j);
    for (long j = 0; j < u.cols(); ++j) u.at(i, j) = -u.at(i, j);
    for (long r = 0; r < uinv.rows(); ++r) uinv.at(r, i) = -uinv.at(r, i);
  }

  // Smallest |entry| != 0, ties by (row, col), in the submatrix from (t, t).
  bool find_pivot(long t, long& pr, long& pc) const {
    bool found = false;
    Int best;
    for (long i = t; i < m.rows(); ++i)
      for (long j = t; j < m.cols(); ++j) {
        const Int& x = m.at(i, j);
        if (x == 0) continue;
        Int a = abs(x);
        if (!found || a < best) {
          found = true;
          best = a;
          pr = i;
          pc = j;
        }
      }
    return found;
  }
};

}  // namespace

SnfResult smith_normal_form(const IntMatrix& a) {
  SnfState s(a);
  long n = std::min(a.rows(), a.cols());
  long t = 0;
  for (; t < n; ++t) {
    long pr, pc;
    if (!s.find_pivot(t, pr, pc)) break;
    s.row_swap(pr, t);
    s.col_swap(pc, t);
    // Clear row and column t. The pivot may move as remainders shrink.
    for (;;) {
      bool dirty = false;
      for (long i = t + 1; i < a.rows(); ++i) {
        if (s.m.at(i, t) == 0) continue;
        Int q, r;
        mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), s.m.at(i, t).get_mpz_t(),
                    s.m.at(t, t).get_mpz_t());
        s.row_sub(i, t, q);
        if (r != 0) dirty = true;
      }
      for (long j = t + 1; j < a.cols(); ++j) {
        if (s.m.at(t, j) == 0) continue;
        Int q, r;
        mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), s.m.at(t, j).get_mpz_t(),
                    s.m.at(t, t).get_mpz_t());
        s.col_sub(j, t, q);
        if (r != 0) dirty = true;
      }
      if (dirty) {
        long qr, qc;
        s.find_pivot(t, qr, qc);
        s.row_swap(qr, t);
        s.col_swap(qc, t);
        continue;
      }
      // Row and column t are clear; enforce divisibility of the rest.
      bool fixed = false;
      for (long i = t + 1; i < a.rows() && !fixed; ++i)
        for (long j = t + 1; j < a.cols() && !fixed; ++j)
          if (s.m.at(i, j) % s.m.at(t, t) != 0) {
            s.row_sub(t, i, Int(-1));  // row_t += row_i
            fixed = true;
          }
      if (!fixed) break;
    }
    if (s.m.at(t, t) < 0) s.row_negate(t);
  }
  SnfResult out;
  out.d.resize((size_t)n);
  for (long i = 0; i < n; ++i) out.d[(size_t)i] = s.m.at(i, i);
  out.U = std::move(s.u);
  out.Uinv = std::move(s.uinv);
  out.V = std::move(s.v);
  out.Vinv = std::move(s.vinv);
  return out;
}

std::optional<std::vector<Int>> solve_integer(const IntMatrix& a,
                                              const std::vector<Int>& b) {
  if ((long)b.size() != a.rows())
    throw std::invalid_argument("solve_integer dimension mismatch");
  SnfResult snf = smith_normal_form(a);
  std::vector<Int> c = snf.U.apply(b);
  std::vector<Int> y((size_t)a.cols(), Int(0));
  for (long i = 0; i < a.rows(); ++i) {
    Int di = (i < (long)snf.d.size()) ? snf.d[(size_t)i] : Int(0);
    if (di == 0) {
      if (c[(size_t)i] != 0) return std::nullopt;
    } else {
      if (c[(size_t)i] % di != 0) return std::nullopt;
      if (i < a.cols()) y[(size_t)i] = c[(size_t)i] / di;
    }
  }
  return snf.V.apply(y);
}

std::optional<IntMatrix> solve_integer(const IntMatrix& a, const IntMatrix& b) {
  if (a.rows() != b.rows())
    throw std::invalid_argument("solve_integer dimension mismatch");
  SnfResult snf = smith_normal_form(a);
  IntMatrix x(a.cols(), b.cols());
  for (long c = 0; c < b.cols(); ++c) {
    std::vector<Int> rhs = snf.U.apply(b.col(c));
    std::vector<Int> y((size_t)a.cols(), Int(0));
    for (long i = 0; i < a.rows(); ++i) {
      Int di = (i < (long)snf.d.size()) ? snf.d[(size_t)i] : Int(0);
      if (di == 0) {
        if (rhs[(size_t)i] != 0) return std::nullopt;
      } else {
        if (rhs[(size_t)i] % di != 0) return std::nullopt;
        if (i < a.cols()) y[(size_t)i] = rhs[(size_t)i] / di;
      }
    }
    x.set_col(c, snf.V.apply(y));
  }
  return x;
}

KernelImage kernel_and_image(const IntMatrix& a) {
  SnfResult snf = smith_normal_form(a);
  std::vector<long> kercols, imcols;
  for (long j = 0; j < a.cols(); ++j)
    if (snf.diag(j) == 0) kercols.push_back(j);
  for (long i = 0; i < std::min(a.rows(), a.cols()); ++i)
    if (snf.diag(i) != 0) imcols.push_back(i);

  KernelImage out{IntMatrix(a.cols(), (long)kercols.size()),
                  IntMatrix(a.rows(), (long)imcols.size())};
  for (size_t k = 0; k < kercols.size(); ++k)
    out.kernel.set_col((long)k, snf.V.col(kercols[k]));
  for (size_t k = 0; k < imcols.size(); ++k) {
    std::vector<Int> v = snf.Uinv.col(imcols[k]);
    for (auto& x : v) x *= snf.diag(imcols[k]);
    out.image.set_col((long)k, v);
  }
  // normalize basis columns: leading nonzero entry positive, for reproducible
  // presentations downstream
  for (auto* m : {&out.kernel, &out.image})
    for (long j = 0; j < m->cols(); ++j)
      for (long i = 0; i < m->rows(); ++i) {
        if (m->at(i, j) == 0) continue;
        if (m->at(i, j) < 0)
          for (long r = i; r < m->rows(); ++r) m->at(r, j) = -m->at(r, j);
        break;
      }
  return out;
}

bool in_lattice(const IntMatrix& basis, const IntMatrix& m) {
  if (basis.rows() != m.rows()) throw std::invalid_argument("in_lattice rows");
  if (m.is_zero()) return true;
  return solve_integer(basis, m).has_value();
}

}  // namespace hocolim::zmat
