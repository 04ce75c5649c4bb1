/**
 * @file linalg.hpp
 * @brief Sparse exact linear algebra over Scalar.
 *
 * Vectors are sorted (index, value) lists without explicit zeros; matrices
 * are stored column-wise because almost every matrix in the library is a
 * linear map given by the images of basis vectors.  Elimination keeps a
 * fully reduced row echelon form so that reducing a vector is one pass.
 */
#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "gsym/scalars.hpp"

namespace gsym {

/** @brief One nonzero coordinate. */
struct Entry {
  uint32_t i;
  Scalar v;
  friend bool operator==(const Entry& a, const Entry& b) { return a.i == b.i && a.v == b.v; }
};

/** @brief Sparse vector: entries sorted by index, no zeros. */
using SVec = std::vector<Entry>;

/** @brief Coordinate @p i of @p v (zero when absent). */
Scalar svec_get(const SVec& v, uint32_t i);
/** @brief a + c*b. */
SVec svec_axpy(const SVec& a, const Scalar& c, const SVec& b);
SVec svec_scale(const SVec& a, const Scalar& c);
SVec svec_unit(uint32_t i);
/** @brief Shifts every index by @p off. */
SVec svec_shift(const SVec& a, uint32_t off);

/** @brief Dense scratch accumulator that emits sorted sparse vectors. */
class Accum {
 public:
  explicit Accum(uint32_t n = 0);
  void resize(uint32_t n);
  void add(uint32_t i, const Scalar& s);
  void add_mul(uint32_t i, const Scalar& a, const Scalar& b);
  /** @brief acc += c * v. */
  void axpy(const Scalar& c, const SVec& v);
  /** @brief Extracts the sorted nonzero entries and clears the accumulator. */
  SVec take();

 private:
  std::vector<Scalar> val_;
  std::vector<uint32_t> touched_;
  std::vector<char> mark_;
};

/** @brief Column-stored sparse matrix. */
class Mat {
 public:
  Mat() = default;
  Mat(uint32_t rows, uint32_t cols) : rows_(rows), cols_(cols), col_(cols) {}

  static Mat identity(uint32_t n);
  static Mat scalar(uint32_t n, const Scalar& s);
  /** @brief Builds from a dense row-major table. */
  static Mat from_rows(const std::vector<std::vector<Scalar>>& rows, uint32_t ncols);

  uint32_t rows() const { return rows_; }
  uint32_t cols() const { return cols_; }
  const SVec& col(uint32_t j) const { return col_[j]; }
  SVec& col(uint32_t j) { return col_[j]; }
  void set_col(uint32_t j, SVec v) { col_[j] = std::move(v); }
  Scalar at(uint32_t i, uint32_t j) const { return svec_get(col_[j], i); }
  size_t nnz() const;
  bool is_zero() const;
  Scalar trace() const;

  Mat transpose() const;
  /** @brief Applies the matrix to a sparse vector. */
  SVec apply(const SVec& v) const;
  SVec apply(const SVec& v, Accum& acc) const;

  friend Mat operator*(const Mat& a, const Mat& b);
  friend Mat operator+(const Mat& a, const Mat& b);
  friend Mat operator-(const Mat& a, const Mat& b);
  friend Mat operator*(const Scalar& s, const Mat& a);
  Mat& operator+=(const Mat& b);
  friend bool operator==(const Mat& a, const Mat& b);
  friend bool operator!=(const Mat& a, const Mat& b) { return !(a == b); }

  /** @brief Copies @p b into the block starting at (@p r0, @p c0). */
  void put_block(uint32_t r0, uint32_t c0, const Mat& b);
  /** @brief Extracts rows [r0, r0+nr) and columns [c0, c0+nc). */
  Mat block(uint32_t r0, uint32_t nr, uint32_t c0, uint32_t nc) const;

  std::string str() const;

 private:
  uint32_t rows_ = 0;
  uint32_t cols_ = 0;
  std::vector<SVec> col_;
};

/** @brief Kronecker product (basis order: first index major). */
Mat kron(const Mat& a, const Mat& b);

/**
 * @brief Incrementally maintained fully reduced row echelon form.
 *
 * Pivots are the smallest indices of the inserted rows (deterministic).
 * Optionally tracks, for each row, the combination of inserted vectors that
 * produced it, so that coordinates with respect to the inserted family can
 * be recovered.
 */
class Echelon {
 public:
  explicit Echelon(uint32_t n = 0, bool track = false);

  uint32_t dim() const { return n_; }
  uint32_t rank() const { return static_cast<uint32_t>(rows_.size()); }
  /** @brief Inserts a vector; returns true when it enlarged the span. */
  bool insert(const SVec& v);
  /** @brief Remainder of @p v modulo the span (unique normal form). */
  SVec reduce(const SVec& v) const;
  bool contains(const SVec& v) const { return reduce(v).empty(); }
  /**
   * @brief Coordinates of @p v in the family of inserted vectors (in
   * insertion order, counting also dependent insertions as zero columns).
   * @return false when @p v is outside the span.
   */
  bool coords(const SVec& v, SVec& out) const;
  /** @brief Pivot column of each row. */
  const std::vector<uint32_t>& pivots() const { return piv_; }
  const std::vector<SVec>& rows() const { return rows_; }
  /** @brief Non-pivot coordinates, ascending. */
  std::vector<uint32_t> free_columns() const;
  /** @brief Basis of the solution space of {x : row.x = 0 for all rows}. */
  std::vector<SVec> nullspace() const;
  /** @brief Number of vectors offered to insert() so far. */
  uint32_t inserted() const { return count_; }

 private:
  uint32_t n_;
  bool track_;
  uint32_t count_ = 0;
  std::vector<SVec> rows_;
  std::vector<SVec> tags_;
  std::vector<uint32_t> piv_;
  std::vector<int32_t> row_of_col_;
};

/** @brief Rank of a matrix. */
uint32_t rank(const Mat& a);
/** @brief Basis of the kernel of @p a (as column vectors). */
std::vector<SVec> kernel(const Mat& a);
/** @brief Inverse of a square matrix; throws "internal-error" if singular. */
Mat inverse(const Mat& a);
/** @brief True when @p a is square and invertible. */
bool invertible(const Mat& a);

}  // namespace gsym
