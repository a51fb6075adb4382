#include "occ/lattice.hpp"

#include <utility>

#include "occ/error.hpp"

namespace occ {

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::from_columns(const std::vector<IntVec>& cols) {
  std::size_t r = cols.empty() ? 0 : cols[0].size();
  IntMatrix m(r, cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j)
    for (std::size_t i = 0; i < r; ++i) m(i, j) = cols[j][i];
  return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<IntVec>& rows) {
  std::size_t c = rows.empty() ? 0 : rows[0].size();
  IntMatrix m(rows.size(), c);
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < c; ++j) m(i, j) = rows[i][j];
  return m;
}

IntVec IntMatrix::row(std::size_t i) const {
  IntVec v(cols_);
  for (std::size_t j = 0; j < cols_; ++j) v[j] = (*this)(i, j);
  return v;
}

IntVec IntMatrix::col(std::size_t j) const {
  IntVec v(rows_);
  for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
  return v;
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

IntMatrix IntMatrix::operator*(const IntMatrix& o) const {
  IntMatrix r(rows_, o.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      if ((*this)(i, k) == 0) continue;
      for (std::size_t j = 0; j < o.cols_; ++j) r(i, j) += (*this)(i, k) * o(k, j);
    }
  return r;
}

IntVec IntMatrix::operator*(const IntVec& v) const {
  IntVec r(rows_, Int(0));
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) r[i] += (*this)(i, j) * v[j];
  return r;
}

bool IntMatrix::operator==(const IntMatrix& o) const {
  return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
}

Int determinant(const IntMatrix& m) {
  std::size_t n = m.rows();
  std::vector<std::vector<Rat>> a(n, std::vector<Rat>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a[i][j] = Rat(m(i, j));
  Rat det(1);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && a[p][c] == 0) ++p;
    if (p == n) return Int(0);
    if (p != c) {
      std::swap(a[p], a[c]);
      det = -det;
    }
    det *= a[c][c];
    for (std::size_t r = c + 1; r < n; ++r) {
      if (a[r][c] == 0) continue;
      Rat k = a[r][c] / a[c][c];
      for (std::size_t j = c; j < n; ++j) a[r][j] -= k * a[c][j];
    }
  }
  return det.get_num();
}

namespace {

// g = x*a + y*b with g = gcd(a, b) >= 0
void ext_gcd(const Int& a, const Int& b, Int& g, Int& x, Int& y) {
  mpz_gcdext(g.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
}

Int floor_div(const Int& a, const Int& b) {
  Int q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

// Column echelon form H = m*U with U unimodular. Returns the number of pivot
// columns; pivot_row[k] is the row of the k-th pivot.
std::size_t column_echelon(const IntMatrix& m, IntMatrix& h, IntMatrix& u, std::vector<std::size_t>& pivot_row) {
  h = m;
  u = IntMatrix::identity(m.cols());
  std::size_t n = m.cols(), p = 0;
  pivot_row.clear();
  auto col_combine = [&](IntMatrix& x, std::size_t cp, std::size_t cj, const Int& a11, const Int& a12,
                         const Int& a21, const Int& a22) {
    // new cp = a11*cp + a12*cj, new cj = a21*cp + a22*cj
    for (std::size_t i = 0; i < x.rows(); ++i) {
      Int vp = x(i, cp), vj = x(i, cj);
      x(i, cp) = a11 * vp + a12 * vj;
      x(i, cj) = a21 * vp + a22 * vj;
    }
  };
  for (std::size_t i = 0; i < m.rows() && p < n; ++i) {
    for (std::size_t j = p + 1; j < n; ++j) {
      if (h(i, j) == 0) continue;
      Int a = h(i, p), b = h(i, j), g, x, y;
      ext_gcd(a, b, g, x, y);
      Int ag = a / g, bg = b / g;
      col_combine(h, p, j, x, y, -bg, ag);
      col_combine(u, p, j, x, y, -bg, ag);
    }
    if (h(i, p) == 0) continue;
    if (h(i, p) < 0) {
      for (std::size_t r = 0; r < h.rows(); ++r) h(r, p) = -h(r, p);
      for (std::size_t r = 0; r < u.rows(); ++r) u(r, p) = -u(r, p);
    }
    pivot_row.push_back(i);
    ++p;
  }
  return p;
}

}  // namespace

IntMatrix row_hnf(const IntMatrix& m) {
  std::vector<IntVec> a;
  for (std::size_t i = 0; i < m.rows(); ++i) a.push_back(m.row(i));
  std::size_t k = a.size(), n = m.cols(), r = 0;
  for (std::size_t c = 0; c < n && r < k; ++c) {
    for (std::size_t i = r + 1; i < k; ++i) {
      if (a[i][c] == 0) continue;
      Int x0 = a[r][c], x1 = a[i][c], g, x, y;
      ext_gcd(x0, x1, g, x, y);
      Int q0 = x0 / g, q1 = x1 / g;
      for (std::size_t j = 0; j < n; ++j) {
        Int vr = a[r][j], vi = a[i][j];
        a[r][j] = x * vr + y * vi;
        a[i][j] = -q1 * vr + q0 * vi;
      }
    }
    if (a[r][c] == 0) continue;
    if (a[r][c] < 0)
      for (auto& v : a[r]) v = -v;
    for (std::size_t i = 0; i < r; ++i) {
      Int q = floor_div(a[i][c], a[r][c]);
      if (q == 0) continue;
      for (std::size_t j = 0; j < n; ++j) a[i][j] -= q * a[r][j];
    }
    ++r;
  }
  a.resize(r);
  IntMatrix out(r, n);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < n; ++j) out(i, j) = a[i][j];
  return out;
}

std::vector<IntVec> kernel_basis(const IntMatrix& m) {
  IntMatrix h, u;
  std::vector<std::size_t> piv;
  std::size_t p = column_echelon(m, h, u, piv);
  if (p == m.cols()) return {};
  std::vector<IntVec> raw;
  for (std::size_t j = p; j < m.cols(); ++j) raw.push_back(u.col(j));
  IntMatrix red = row_hnf(IntMatrix::from_rows(raw));
  std::vector<IntVec> out;
  for (std::size_t i = 0; i < red.rows(); ++i) out.push_back(red.row(i));
  return out;
}

IntMatrix unimodular_change(const std::vector<IntVec>& basis) {
  IntMatrix b = IntMatrix::from_columns(basis);
  if (b.rows() != b.cols()) throw Error(ErrorKind::NotUnimodular, "basis is not square");
  Int det = determinant(b);
  if (det != 1 && det != -1) throw Error(ErrorKind::NotUnimodular, "determinant " + det.get_str());
  std::size_t n = b.rows();
  // Gauss-Jordan over Q; the result is integral because det = +-1.
  std::vector<std::vector<Rat>> a(n, std::vector<Rat>(2 * n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) a[i][j] = Rat(b(i, j));
    a[i][n + i] = 1;
  }
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (a[p][c] == 0) ++p;
    std::swap(a[p], a[c]);
    Rat piv = a[c][c];
    for (auto& v : a[c]) v /= piv;
    for (std::size_t r = 0; r < n; ++r) {
      if (r == c || a[r][c] == 0) continue;
      Rat k = a[r][c];
      for (std::size_t j = 0; j < 2 * n; ++j) a[r][j] -= k * a[c][j];
    }
  }
  IntMatrix inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = a[i][n + j].get_num();
  return inv;
}

std::optional<IntVec> solve_in_lattice(const IntMatrix& m, const IntVec& target) {
  IntMatrix h, u;
  std::vector<std::size_t> piv;
  std::size_t p = column_echelon(m, h, u, piv);
  IntVec y(m.cols(), Int(0));
  std::size_t k = 0;  // next pivot column
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Int rest = target[i];
    for (std::size_t j = 0; j < k; ++j) rest -= h(i, j) * y[j];
    if (k < p && piv[k] == i) {
      if (!mpz_divisible_p(rest.get_mpz_t(), h(i, k).get_mpz_t())) return std::nullopt;
      y[k] = rest / h(i, k);
      ++k;
    } else if (rest != 0) {
      return std::nullopt;
    }
  }
  return u * y;
}

}  // namespace occ
