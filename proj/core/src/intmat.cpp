#include "tsurf/intmat.hpp"
#include "tsurf/rational.hpp"

#include <cstdlib>
#include <sstream>
#include <stdexcept>

namespace tsurf {

IntMat IntMat::identity(std::size_t n)
{
  IntMat m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    m(i, i) = 1;
  return m;
}

IntMat IntMat::from_rows(const std::vector<IntVec> &rows, std::size_t cols)
{
  IntMat m(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < cols; ++j)
      m(i, j) = rows[i].at(j);
  return m;
}

IntMat IntMat::from_columns(const std::vector<IntVec> &cols, std::size_t rows)
{
  IntMat m(rows, cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j)
    for (std::size_t i = 0; i < rows; ++i)
      m(i, j) = cols[j].at(i);
  return m;
}

IntVec IntMat::row(std::size_t i) const
{
  return IntVec(a_.begin() + i * cols_, a_.begin() + (i + 1) * cols_);
}

IntVec IntMat::column(std::size_t j) const
{
  IntVec v(rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    v[i] = (*this)(i, j);
  return v;
}

IntMat IntMat::transpose() const
{
  IntMat t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      t(j, i) = (*this)(i, j);
  return t;
}

std::int64_t IntMat::max_abs() const
{
  std::int64_t m = 0;
  for (auto x : a_)
    m = std::max(m, x < 0 ? -x : x);
  return m;
}

std::int64_t checked_add(std::int64_t a, std::int64_t b)
{
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r))
    throw std::overflow_error("integer overflow in addition");
  return r;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b)
{
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r))
    throw std::overflow_error("integer overflow in multiplication");
  return r;
}

IntMat operator*(const IntMat &a, const IntMat &b)
{
  if (a.cols() != b.rows())
    throw std::invalid_argument("matrix shape mismatch");
  IntMat c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      auto x = a(i, k);
      if (x == 0)
        continue;
      for (std::size_t j = 0; j < b.cols(); ++j)
        c(i, j) = checked_add(c(i, j), checked_mul(x, b(k, j)));
    }
  return c;
}

IntVec operator*(const IntMat &a, const IntVec &x)
{
  if (a.cols() != x.size())
    throw std::invalid_argument("matrix/vector shape mismatch");
  IntVec y(a.rows(), 0);
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      y[i] = checked_add(y[i], checked_mul(a(i, j), x[j]));
  return y;
}

std::int64_t dot(const IntVec &a, const IntVec &b)
{
  if (a.size() != b.size())
    throw std::invalid_argument("vector length mismatch");
  std::int64_t s = 0;
  for (std::size_t i = 0; i < a.size(); ++i)
    s = checked_add(s, checked_mul(a[i], b[i]));
  return s;
}

IntVec add_scaled(const IntVec &a, std::int64_t s, const IntVec &b)
{
  IntVec r = a;
  for (std::size_t i = 0; i < r.size(); ++i)
    r[i] = checked_add(r[i], checked_mul(s, b[i]));
  return r;
}

bool is_zero(const IntVec &v)
{
  for (auto x : v)
    if (x != 0)
      return false;
  return true;
}

std::int64_t pair(const IntVec &x, const IntMat &m, const IntVec &y)
{
  return dot(x, m * y);
}

namespace {

using QMat = std::vector<std::vector<Rational>>;

QMat to_q(const IntMat &m)
{
  QMat q(m.rows(), std::vector<Rational>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      q[i][j] = Rational(static_cast<long>(m(i, j)));
  return q;
}

// Reduced row echelon form in place; returns pivot columns.
std::vector<std::size_t> rref(QMat &a, std::size_t ncols)
{
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < ncols && r < a.size(); ++c) {
    std::size_t p = r;
    while (p < a.size() && a[p][c] == 0)
      ++p;
    if (p == a.size())
      continue;
    std::swap(a[p], a[r]);
    Rational inv = 1 / a[r][c];
    for (auto &x : a[r])
      x *= inv;
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (i == r || a[i][c] == 0)
        continue;
      Rational f = a[i][c];
      for (std::size_t j = 0; j < a[i].size(); ++j)
        a[i][j] -= f * a[r][j];
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

std::int64_t trunc_div(std::int64_t a, std::int64_t b)
{
  return a / b;
}

void swap_columns(IntMat &m, std::size_t a, std::size_t b)
{
  for (std::size_t i = 0; i < m.rows(); ++i)
    std::swap(m(i, a), m(i, b));
}

// col_dst -= q * col_src
void sub_column(IntMat &m, std::size_t dst, std::size_t src, std::int64_t q)
{
  for (std::size_t i = 0; i < m.rows(); ++i)
    m(i, dst) = checked_add(m(i, dst), checked_mul(-q, m(i, src)));
}

struct ColumnEchelon {
  IntMat h;                         // a * u
  IntMat u;                         // unimodular
  std::vector<std::size_t> pivot_rows; // pivot row of column t, t < rank
};

ColumnEchelon column_echelon(const IntMat &a)
{
  ColumnEchelon e{a, IntMat::identity(a.cols()), {}};
  std::size_t k = 0;
  for (std::size_t i = 0; i < a.rows() && k < a.cols(); ++i) {
    while (true) {
      std::size_t best = a.cols();
      for (std::size_t j = k; j < a.cols(); ++j)
        if (e.h(i, j) != 0 && (best == a.cols() || std::llabs(e.h(i, j)) < std::llabs(e.h(i, best))))
          best = j;
      if (best == a.cols())
        break;
      swap_columns(e.h, k, best);
      swap_columns(e.u, k, best);
      bool done = true;
      for (std::size_t j = k + 1; j < a.cols(); ++j) {
        if (e.h(i, j) == 0)
          continue;
        auto q = trunc_div(e.h(i, j), e.h(i, k));
        sub_column(e.h, j, k, q);
        sub_column(e.u, j, k, q);
        if (e.h(i, j) != 0)
          done = false;
      }
      if (done) {
        e.pivot_rows.push_back(i);
        ++k;
        break;
      }
    }
  }
  return e;
}

} // namespace

std::size_t rank(const IntMat &m)
{
  QMat q = to_q(m);
  return rref(q, m.cols()).size();
}

std::optional<IntMat> inverse_unimodular(const IntMat &m)
{
  if (m.rows() != m.cols())
    return std::nullopt;
  std::size_t n = m.rows();
  QMat q(n, std::vector<Rational>(2 * n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j)
      q[i][j] = Rational(static_cast<long>(m(i, j)));
    q[i][n + i] = 1;
  }
  auto piv = rref(q, n);
  if (piv.size() != n)
    return std::nullopt;
  IntMat inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const Rational &x = q[i][n + j];
      if (!is_integer(x))
        return std::nullopt;
      inv(i, j) = to_int64(x);
    }
  return inv;
}

std::int64_t determinant(const IntMat &m)
{
  if (m.rows() != m.cols())
    throw std::invalid_argument("determinant of non-square matrix");
  std::size_t n = m.rows();
  QMat a = to_q(m);
  Rational det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && a[p][c] == 0)
      ++p;
    if (p == n)
      return 0;
    if (p != c) {
      std::swap(a[p], a[c]);
      det = -det;
    }
    det *= a[c][c];
    for (std::size_t i = c + 1; i < n; ++i) {
      if (a[i][c] == 0)
        continue;
      Rational f = a[i][c] / a[c][c];
      for (std::size_t j = c; j < n; ++j)
        a[i][j] -= f * a[c][j];
    }
  }
  return to_int64(det);
}

std::vector<IntVec> integer_kernel(const IntMat &m)
{
  auto e = column_echelon(m);
  std::vector<IntVec> basis;
  for (std::size_t t = e.pivot_rows.size(); t < m.cols(); ++t)
    basis.push_back(e.u.column(t));
  return basis;
}

std::optional<IntVec> solve_integer(const IntMat &m, const IntVec &b)
{
  if (b.size() != m.rows())
    throw std::invalid_argument("rhs length mismatch");
  auto e = column_echelon(m);
  IntVec y(m.cols(), 0);
  for (std::size_t t = 0; t < e.pivot_rows.size(); ++t) {
    auto r = e.pivot_rows[t];
    std::int64_t s = b[r];
    for (std::size_t p = 0; p < t; ++p)
      s = checked_add(s, checked_mul(-e.h(r, p), y[p]));
    if (s % e.h(r, t) != 0)
      return std::nullopt;
    y[t] = s / e.h(r, t);
  }
  IntVec x = e.u * y;
  if (m * x != b)
    return std::nullopt;
  return x;
}

std::vector<IntVec> lattice_basis(const std::vector<IntVec> &gens)
{
  if (gens.empty())
    return {};
  std::size_t n = gens.front().size();
  std::vector<IntVec> rows = gens;
  std::size_t k = 0;
  for (std::size_t c = 0; c < n && k < rows.size(); ++c) {
    while (true) {
      std::size_t best = rows.size();
      for (std::size_t i = k; i < rows.size(); ++i)
        if (rows[i][c] != 0 && (best == rows.size() || std::llabs(rows[i][c]) < std::llabs(rows[best][c])))
          best = i;
      if (best == rows.size())
        break;
      std::swap(rows[k], rows[best]);
      bool done = true;
      for (std::size_t i = k + 1; i < rows.size(); ++i) {
        if (rows[i][c] == 0)
          continue;
        rows[i] = add_scaled(rows[i], -trunc_div(rows[i][c], rows[k][c]), rows[k]);
        if (rows[i][c] != 0)
          done = false;
      }
      if (done) {
        if (rows[k][c] < 0)
          for (auto &x : rows[k])
            x = -x;
        ++k;
        break;
      }
    }
  }
  rows.resize(k);
  return rows;
}

SymplecticReduction symplectic_reduce(const std::vector<IntVec> &gens, const IntMat &omega)
{
  SymplecticReduction out;
  std::vector<IntVec> vs = lattice_basis(gens);
  while (true) {
    // minimal nonzero pairing among remaining vectors
    std::size_t bi = 0, bj = 0;
    std::int64_t best = 0;
    for (std::size_t i = 0; i < vs.size(); ++i)
      for (std::size_t j = i + 1; j < vs.size(); ++j) {
        auto p = pair(vs[i], omega, vs[j]);
        if (p != 0 && (best == 0 || std::llabs(p) < std::llabs(best))) {
          best = p;
          bi = i;
          bj = j;
        }
      }
    if (best == 0)
      break;
    IntVec e = vs[bi], f = vs[bj];
    if (best < 0) {
      for (auto &x : f)
        x = -x;
      best = -best;
    }
    bool restart = false;
    std::vector<IntVec> rest;
    for (std::size_t k = 0; k < vs.size(); ++k) {
      if (k == bi || k == bj)
        continue;
      IntVec x = vs[k];
      auto xe = pair(x, omega, e), xf = pair(x, omega, f);
      if (xe % best != 0 || xf % best != 0) {
        // a smaller pairing is reachable: x - q*e or x + q*f
        if (xf % best != 0)
          x = add_scaled(x, -trunc_div(xf, best), e);
        else
          x = add_scaled(x, trunc_div(xe, best), f);
        vs[k] = x;
        restart = true;
        break;
      }
      x = add_scaled(x, -(xf / best), e);
      x = add_scaled(x, xe / best, f);
      rest.push_back(x);
    }
    if (restart)
      continue;
    out.pairs.emplace_back(e, f);
    out.divisors.push_back(best);
    vs = rest;
  }
  out.radical = vs;
  return out;
}

std::string to_string(const IntVec &v)
{
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < v.size(); ++i)
    os << (i ? ", " : "") << v[i];
  os << ']';
  return os.str();
}

std::string to_string(const IntMat &m)
{
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < m.rows(); ++i)
    os << (i ? ", " : "") << to_string(m.row(i));
  os << ']';
  return os.str();
}

} // namespace tsurf
