#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace tsurf {

using IntVec = std::vector<std::int64_t>;

// Dense row-major integer matrix. All arithmetic is overflow-checked.
class IntMat {
public:
  IntMat() = default;
  IntMat(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols, 0) {}
  static IntMat identity(std::size_t n);
  static IntMat from_rows(const std::vector<IntVec> &rows, std::size_t cols);
  static IntMat from_columns(const std::vector<IntVec> &cols, std::size_t rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::int64_t &operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  std::int64_t operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

  IntVec row(std::size_t i) const;
  IntVec column(std::size_t j) const;
  IntMat transpose() const;
  std::int64_t max_abs() const;

  bool operator==(const IntMat &o) const = default;
  auto operator<=>(const IntMat &o) const = default;

private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<std::int64_t> a_;
};

std::int64_t checked_add(std::int64_t a, std::int64_t b);
std::int64_t checked_mul(std::int64_t a, std::int64_t b);

IntMat operator*(const IntMat &a, const IntMat &b);
IntVec operator*(const IntMat &a, const IntVec &x);
std::int64_t dot(const IntVec &a, const IntVec &b);
IntVec add_scaled(const IntVec &a, std::int64_t s, const IntVec &b); // a + s*b
bool is_zero(const IntVec &v);

// Bilinear pairing x^T M y.
std::int64_t pair(const IntVec &x, const IntMat &m, const IntVec &y);

std::size_t rank(const IntMat &m);
// Exact inverse of a unimodular matrix; nullopt if the matrix is not invertible over Z.
std::optional<IntMat> inverse_unimodular(const IntMat &m);
std::int64_t determinant(const IntMat &m);

// Z-basis (as columns) of {x : m x = 0}.
std::vector<IntVec> integer_kernel(const IntMat &m);
// Some integer x with m x = b, if one exists.
std::optional<IntVec> solve_integer(const IntMat &m, const IntVec &b);
// Z-basis of the lattice spanned by the given vectors.
std::vector<IntVec> lattice_basis(const std::vector<IntVec> &gens);

struct SymplecticReduction {
  std::vector<std::pair<IntVec, IntVec>> pairs; // (e, f) with <e,f> = divisor
  std::vector<std::int64_t> divisors;
  std::vector<IntVec> radical;
};
// Reduce the lattice spanned by gens under the alternating form omega to a
// sum of hyperbolic planes and a radical (alternating Smith form).
SymplecticReduction symplectic_reduce(const std::vector<IntVec> &gens, const IntMat &omega);

std::string to_string(const IntVec &v);
std::string to_string(const IntMat &m);

} // namespace tsurf
