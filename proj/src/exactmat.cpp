#include "toric/exactmat.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>

namespace toric {

Int gcd(const Int& a, const Int& b) {
  Int g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

Int lcm(const Int& a, const Int& b) {
  Int l;
  mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return l;
}

namespace {

// floor division, matching mpz_fdiv_q
Int fdiv(const Int& a, const Int& b) {
  Int q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

}  // namespace

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), entries_(rows * cols) {}

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  entries_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw InputError("IntMatrix: ragged initializer");
    for (long v : r) entries_.emplace_back(v);
  }
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<std::vector<Int>>& rows,
                               std::size_t cols_if_empty) {
  if (rows.empty()) return IntMatrix(0, cols_if_empty);
  IntMatrix m(rows.size(), rows.front().size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != m.cols_) throw InputError("IntMatrix: ragged rows");
    for (std::size_t j = 0; j < m.cols_; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

IntMatrix IntMatrix::transposed() const {
  IntMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

IntMatrix IntMatrix::operator*(const IntMatrix& rhs) const {
  if (cols_ != rhs.rows_) throw InputError("IntMatrix: size mismatch in product");
  IntMatrix out(rows_, rhs.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Int& a = (*this)(i, k);
      if (a == 0) continue;
      for (std::size_t j = 0; j < rhs.cols_; ++j) out(i, j) += a * rhs(k, j);
    }
  return out;
}

std::vector<Int> IntMatrix::row(std::size_t i) const {
  std::vector<Int> r(cols_);
  for (std::size_t j = 0; j < cols_; ++j) r[j] = (*this)(i, j);
  return r;
}

IntMatrix IntMatrix::select_rows(std::span<const std::size_t> indices) const {
  IntMatrix out(indices.size(), cols_);
  for (std::size_t i = 0; i < indices.size(); ++i) {
    if (indices[i] >= rows_) throw InputError("IntMatrix: row index out of range");
    for (std::size_t j = 0; j < cols_; ++j) out(i, j) = (*this)(indices[i], j);
  }
  return out;
}

void IntMatrix::swap_rows(std::size_t i, std::size_t j) {
  if (i == j) return;
  for (std::size_t k = 0; k < cols_; ++k)
    std::swap(entries_[i * cols_ + k], entries_[j * cols_ + k]);
}

void IntMatrix::swap_cols(std::size_t i, std::size_t j) {
  if (i == j) return;
  for (std::size_t k = 0; k < rows_; ++k)
    std::swap(entries_[k * cols_ + i], entries_[k * cols_ + j]);
}

void IntMatrix::add_row_multiple(std::size_t dst, std::size_t src, const Int& c) {
  if (c == 0) return;
  for (std::size_t k = 0; k < cols_; ++k) (*this)(dst, k) += c * (*this)(src, k);
}

void IntMatrix::add_col_multiple(std::size_t dst, std::size_t src, const Int& c) {
  if (c == 0) return;
  for (std::size_t k = 0; k < rows_; ++k) (*this)(k, dst) += c * (*this)(k, src);
}

void IntMatrix::negate_row(std::size_t i) {
  for (std::size_t k = 0; k < cols_; ++k) (*this)(i, k) = -(*this)(i, k);
}

bool IntMatrix::is_zero_row(std::size_t i) const {
  for (std::size_t k = 0; k < cols_; ++k)
    if ((*this)(i, k) != 0) return false;
  return true;
}

std::string IntMatrix::str() const {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < rows_; ++i) {
    if (i) os << "; ";
    for (std::size_t j = 0; j < cols_; ++j) {
      if (j) os << " ";
      os << (*this)(i, j).get_str();
    }
  }
  os << "]";
  return os.str();
}

std::vector<Int> mat_vec(const IntMatrix& a, std::span<const Int> x) {
  if (x.size() != a.cols()) throw InputError("mat_vec: size mismatch");
  std::vector<Int> out(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out[i] += a(i, j) * x[j];
  return out;
}

std::vector<Int> vec_mat(std::span<const Int> x, const IntMatrix& a) {
  if (x.size() != a.rows()) throw InputError("vec_mat: size mismatch");
  std::vector<Int> out(a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    if (x[i] == 0) continue;
    for (std::size_t j = 0; j < a.cols(); ++j) out[j] += x[i] * a(i, j);
  }
  return out;
}

Int dot(std::span<const Int> a, std::span<const Int> b) {
  if (a.size() != b.size()) throw InputError("dot: size mismatch");
  Int s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

std::size_t SmithForm::rank() const {
  std::size_t r = 0;
  for (const Int& d : invariant_factors)
    if (d != 0) ++r;
  return r;
}

std::vector<Int> SmithForm::torsion() const {
  std::vector<Int> t;
  for (const Int& d : invariant_factors)
    if (d > 1) t.push_back(d);
  return t;
}

IntMatrix SmithForm::diagonal_matrix(std::size_t rows, std::size_t cols) const {
  IntMatrix d(rows, cols);
  for (std::size_t i = 0; i < invariant_factors.size(); ++i)
    d(i, i) = invariant_factors[i];
  return d;
}

SmithForm smith_normal_form(const IntMatrix& a) {
  if (a.empty()) throw InputError("smith_normal_form: empty matrix");
  const std::size_t m = a.rows(), n = a.cols();
  IntMatrix d = a;
  IntMatrix left = IntMatrix::identity(m);
  IntMatrix right = IntMatrix::identity(n);

  const std::size_t steps = std::min(m, n);
  for (std::size_t t = 0; t < steps; ++t) {
    bool have_pivot = true;
    for (;;) {
      // smallest nonzero |entry| in the trailing block; row-major tie break
      std::size_t pi = t, pj = t;
      bool found = false;
      Int best;
      for (std::size_t i = t; i < m; ++i) {
        for (std::size_t j = t; j < n; ++j) {
          if (d(i, j) == 0) continue;
          Int v = abs(d(i, j));
          if (!found || v < best) {
            found = true;
            best = v;
            pi = i;
            pj = j;
          }
        }
      }
      if (!found) {
        have_pivot = false;
        break;
      }
      d.swap_rows(t, pi);
      left.swap_rows(t, pi);
      d.swap_cols(t, pj);
      right.swap_cols(t, pj);

      bool clean = true;
      for (std::size_t i = t + 1; i < m; ++i) {
        if (d(i, t) == 0) continue;
        Int q = fdiv(d(i, t), d(t, t));
        if (q != 0) {
          d.add_row_multiple(i, t, -q);
          left.add_row_multiple(i, t, -q);
        }
        if (d(i, t) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < n; ++j) {
        if (d(t, j) == 0) continue;
        Int q = fdiv(d(t, j), d(t, t));
        if (q != 0) {
          d.add_col_multiple(j, t, -q);
          right.add_col_multiple(j, t, -q);
        }
        if (d(t, j) != 0) clean = false;
      }
      if (!clean) continue;

      // divisibility chain: pull a non-divisible entry into row t
      bool fixed = false;
      for (std::size_t i = t + 1; i < m && !fixed; ++i) {
        for (std::size_t j = t + 1; j < n; ++j) {
          if (d(i, j) % d(t, t) != 0) {
            d.add_row_multiple(t, i, 1);
            left.add_row_multiple(t, i, 1);
            fixed = true;
            break;
          }
        }
      }
      if (!fixed) break;
    }
    if (!have_pivot) break;
    if (d(t, t) < 0) {
      d.negate_row(t);
      left.negate_row(t);
    }
  }

  SmithForm out;
  out.invariant_factors.resize(steps);
  for (std::size_t i = 0; i < steps; ++i) out.invariant_factors[i] = d(i, i);
  out.left = std::move(left);
  out.right = std::move(right);
  return out;
}

HermiteForm hermite_normal_form(const IntMatrix& a) {
  if (a.empty()) throw InputError("hermite_normal_form: empty matrix");
  const std::size_t m = a.rows(), n = a.cols();
  IntMatrix h = a;
  IntMatrix u = IntMatrix::identity(m);

  std::size_t pr = 0;  // next pivot row
  for (std::size_t j = 0; j < n && pr < m; ++j) {
    for (;;) {
      std::size_t imin = pr;
      bool found = false;
      Int best;
      for (std::size_t i = pr; i < m; ++i) {
        if (h(i, j) == 0) continue;
        Int v = abs(h(i, j));
        if (!found || v < best) {
          found = true;
          best = v;
          imin = i;
        }
      }
      if (!found) break;
      h.swap_rows(pr, imin);
      u.swap_rows(pr, imin);
      bool all_zero = true;
      for (std::size_t i = pr + 1; i < m; ++i) {
        if (h(i, j) == 0) continue;
        Int q = fdiv(h(i, j), h(pr, j));
        if (q != 0) {
          h.add_row_multiple(i, pr, -q);
          u.add_row_multiple(i, pr, -q);
        }
        if (h(i, j) != 0) all_zero = false;
      }
      if (all_zero) break;
    }
    if (h(pr, j) == 0) continue;
    if (h(pr, j) < 0) {
      h.negate_row(pr);
      u.negate_row(pr);
    }
    for (std::size_t i = 0; i < pr; ++i) {
      Int q = fdiv(h(i, j), h(pr, j));
      if (q != 0) {
        h.add_row_multiple(i, pr, -q);
        u.add_row_multiple(i, pr, -q);
      }
    }
    ++pr;
  }
  return HermiteForm{std::move(h), std::move(u)};
}

IntMatrix kernel_basis(const IntMatrix& a) {
  HermiteForm hf = hermite_normal_form(a);
  std::vector<std::vector<Int>> rows;
  for (std::size_t i = 0; i < a.rows(); ++i)
    if (hf.h.is_zero_row(i)) rows.push_back(hf.transform.row(i));
  if (rows.empty()) return IntMatrix(0, a.rows());
  IntMatrix k = IntMatrix::from_rows(rows);
  return hermite_normal_form(k).h;
}

CokernelInvariants cokernel_invariants(const IntMatrix& a) {
  SmithForm s = smith_normal_form(a);
  CokernelInvariants out;
  out.free_rank = a.rows() - s.rank();
  out.torsion = s.torsion();
  return out;
}

std::vector<Int> primitive(std::span<const Int> v) {
  Int g = 0;
  for (const Int& x : v) g = gcd(g, x);
  if (g == 0) throw InputError("primitive: zero vector has no direction");
  std::vector<Int> out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = v[i] / g;
  return out;
}

bool is_primitive(std::span<const Int> v) {
  Int g = 0;
  for (const Int& x : v) g = gcd(g, x);
  return g == 1;
}

std::size_t rank(const IntMatrix& a) {
  if (a.empty()) return 0;
  HermiteForm hf = hermite_normal_form(a);
  std::size_t r = 0;
  for (std::size_t i = 0; i < a.rows(); ++i)
    if (!hf.h.is_zero_row(i)) ++r;
  return r;
}

Int determinant(const IntMatrix& a) {
  if (a.rows() != a.cols()) throw InputError("determinant: matrix not square");
  const std::size_t n = a.rows();
  if (n == 0) return 1;
  IntMatrix m = a;
  int sign = 1;
  Int prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m(k, k) == 0) {
      std::size_t swap_i = k;
      for (std::size_t i = k + 1; i < n; ++i)
        if (m(i, k) != 0) {
          swap_i = i;
          break;
        }
      if (swap_i == k) return 0;
      m.swap_rows(k, swap_i);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Int num = m(i, j) * m(k, k) - m(i, k) * m(k, j);
        mpz_divexact(m(i, j).get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
      }
      m(i, k) = 0;
    }
    prev = m(k, k);
  }
  return sign < 0 ? Int(-m(n - 1, n - 1)) : m(n - 1, n - 1);
}

bool rows_extend_to_basis(const IntMatrix& rows) {
  if (rows.rows() == 0) return true;
  if (rows.rows() > rows.cols()) return false;
  SmithForm s = smith_normal_form(rows);
  if (s.rank() != rows.rows()) return false;
  return s.torsion().empty();
}

RatMatrix::RatMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), entries_(rows * cols) {}

RatMatrix RatMatrix::from_int(const IntMatrix& a) {
  RatMatrix out(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = Rat(a(i, j));
  return out;
}

std::vector<Rat> mat_vec(const RatMatrix& a, std::span<const Int> x) {
  if (x.size() != a.cols()) throw InputError("mat_vec: size mismatch");
  std::vector<Rat> out(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out[i] += a(i, j) * Rat(x[j]);
  return out;
}

std::vector<Rat> mat_vec(const RatMatrix& a, std::span<const Rat> x) {
  if (x.size() != a.cols()) throw InputError("mat_vec: size mismatch");
  std::vector<Rat> out(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out[i] += a(i, j) * x[j];
  return out;
}

namespace {

// Gauss-Jordan on [a | rhs]; rhs has any number of columns.
// First nonzero pivot per column keeps the elimination deterministic.
std::optional<RatMatrix> gauss_solve(const IntMatrix& a, RatMatrix rhs) {
  const std::size_t n = a.rows();
  if (a.cols() != n) throw InputError("gauss_solve: matrix not square");
  RatMatrix m = RatMatrix::from_int(a);
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t piv = n;
    for (std::size_t i = k; i < n; ++i)
      if (m(i, k) != 0) {
        piv = i;
        break;
      }
    if (piv == n) return std::nullopt;
    if (piv != k) {
      for (std::size_t j = 0; j < n; ++j) std::swap(m(piv, j), m(k, j));
      for (std::size_t j = 0; j < rhs.cols(); ++j) std::swap(rhs(piv, j), rhs(k, j));
    }
    Rat inv_p = 1 / m(k, k);
    for (std::size_t j = 0; j < n; ++j) m(k, j) *= inv_p;
    for (std::size_t j = 0; j < rhs.cols(); ++j) rhs(k, j) *= inv_p;
    for (std::size_t i = 0; i < n; ++i) {
      if (i == k || m(i, k) == 0) continue;
      Rat f = m(i, k);
      for (std::size_t j = 0; j < n; ++j) m(i, j) -= f * m(k, j);
      for (std::size_t j = 0; j < rhs.cols(); ++j) rhs(i, j) -= f * rhs(k, j);
    }
  }
  return rhs;
}

}  // namespace

std::optional<RatMatrix> inverse(const IntMatrix& a) {
  RatMatrix id(a.rows(), a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i) id(i, i) = 1;
  return gauss_solve(a, std::move(id));
}

std::optional<std::vector<Rat>> solve(const IntMatrix& a, std::span<const Rat> rhs) {
  if (rhs.size() != a.rows()) throw InputError("solve: size mismatch");
  RatMatrix b(a.rows(), 1);
  for (std::size_t i = 0; i < rhs.size(); ++i) b(i, 0) = rhs[i];
  auto r = gauss_solve(a, std::move(b));
  if (!r) return std::nullopt;
  std::vector<Rat> x(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i) x[i] = (*r)(i, 0);
  return x;
}

std::optional<std::vector<Rat>> solve(const IntMatrix& a, std::span<const Int> rhs) {
  std::vector<Rat> q(rhs.size());
  for (std::size_t i = 0; i < rhs.size(); ++i) q[i] = Rat(rhs[i]);
  return solve(a, std::span<const Rat>(q));
}

std::optional<Adjugate> adjugate(const IntMatrix& a) {
  Int det = determinant(a);
  if (det == 0) return std::nullopt;
  auto inv = inverse(a);
  Adjugate out;
  out.det = det;
  out.adj = IntMatrix(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      Rat e = (*inv)(i, j) * Rat(det);
      if (e.get_den() != 1)
        throw Error("adjugate: non-integral entry, inconsistent determinant");
      out.adj(i, j) = e.get_num();
    }
  return out;
}

}  // namespace toric
