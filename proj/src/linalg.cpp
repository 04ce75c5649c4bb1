/**
 * @file linalg.cpp
 * @brief Sparse exact vectors, matrices and elimination.
 */
#include "gsym/linalg.hpp"

#include <algorithm>
#include <sstream>

#include "gsym/error.hpp"

namespace gsym {

Scalar svec_get(const SVec& v, uint32_t i) {
  auto it = std::lower_bound(v.begin(), v.end(), i, [](const Entry& e, uint32_t k) { return e.i < k; });
  if (it != v.end() && it->i == i) return it->v;
  return Scalar();
}

SVec svec_axpy(const SVec& a, const Scalar& c, const SVec& b) {
  if (c.is_zero()) return a;
  SVec out;
  out.reserve(a.size() + b.size());
  size_t p = 0, q = 0;
  while (p < a.size() || q < b.size()) {
    if (q == b.size() || (p < a.size() && a[p].i < b[q].i)) {
      out.push_back(a[p++]);
    } else if (p == a.size() || b[q].i < a[p].i) {
      out.push_back({b[q].i, c * b[q].v});
      ++q;
    } else {
      Scalar s = a[p].v;
      s.add_mul(c, b[q].v);
      if (!s.is_zero()) out.push_back({a[p].i, std::move(s)});
      ++p;
      ++q;
    }
  }
  return out;
}

SVec svec_scale(const SVec& a, const Scalar& c) {
  if (c.is_zero()) return {};
  SVec out;
  out.reserve(a.size());
  for (const auto& e : a) out.push_back({e.i, c * e.v});
  return out;
}

SVec svec_unit(uint32_t i) { return SVec{{i, Scalar(1)}}; }

SVec svec_shift(const SVec& a, uint32_t off) {
  SVec out(a);
  for (auto& e : out) e.i += off;
  return out;
}

// ---------------------------------------------------------------- Accum

Accum::Accum(uint32_t n) { resize(n); }

void Accum::resize(uint32_t n) {
  if (val_.size() < n) {
    val_.resize(n);
    mark_.resize(n, 0);
  }
}

void Accum::add(uint32_t i, const Scalar& s) {
  if (s.is_zero()) return;
  if (!mark_[i]) {
    mark_[i] = 1;
    touched_.push_back(i);
    val_[i] = s;
  } else {
    val_[i] += s;
  }
}

void Accum::add_mul(uint32_t i, const Scalar& a, const Scalar& b) {
  if (a.is_zero() || b.is_zero()) return;
  if (!mark_[i]) {
    mark_[i] = 1;
    touched_.push_back(i);
    val_[i] = a * b;
  } else {
    val_[i].add_mul(a, b);
  }
}

void Accum::axpy(const Scalar& c, const SVec& v) {
  if (c.is_zero()) return;
  if (c.is_one()) {
    for (const auto& e : v) add(e.i, e.v);
  } else {
    for (const auto& e : v) add_mul(e.i, c, e.v);
  }
}

SVec Accum::take() {
  std::sort(touched_.begin(), touched_.end());
  SVec out;
  out.reserve(touched_.size());
  for (uint32_t i : touched_) {
    if (!val_[i].is_zero()) out.push_back({i, std::move(val_[i])});
    val_[i] = Scalar();
    mark_[i] = 0;
  }
  touched_.clear();
  return out;
}

// ---------------------------------------------------------------- Mat

Mat Mat::identity(uint32_t n) { return scalar(n, Scalar(1)); }

Mat Mat::scalar(uint32_t n, const Scalar& s) {
  Mat m(n, n);
  if (!s.is_zero()) {
    for (uint32_t i = 0; i < n; ++i) m.col_[i] = SVec{{i, s}};
  }
  return m;
}

Mat Mat::from_rows(const std::vector<std::vector<Scalar>>& rows, uint32_t ncols) {
  Mat m(static_cast<uint32_t>(rows.size()), ncols);
  for (uint32_t j = 0; j < ncols; ++j) {
    for (uint32_t i = 0; i < rows.size(); ++i) {
      if (!rows[i][j].is_zero()) m.col_[j].push_back({i, rows[i][j]});
    }
  }
  return m;
}

size_t Mat::nnz() const {
  size_t n = 0;
  for (const auto& c : col_) n += c.size();
  return n;
}

bool Mat::is_zero() const {
  for (const auto& c : col_) {
    if (!c.empty()) return false;
  }
  return true;
}

Scalar Mat::trace() const {
  Scalar t;
  for (uint32_t j = 0; j < std::min(rows_, cols_); ++j) t += svec_get(col_[j], j);
  return t;
}

Mat Mat::transpose() const {
  Mat t(cols_, rows_);
  for (uint32_t j = 0; j < cols_; ++j) {
    for (const auto& e : col_[j]) t.col_[e.i].push_back({j, e.v});
  }
  return t;
}

SVec Mat::apply(const SVec& v) const {
  Accum acc(rows_);
  return apply(v, acc);
}

SVec Mat::apply(const SVec& v, Accum& acc) const {
  acc.resize(rows_);
  for (const auto& e : v) acc.axpy(e.v, col_[e.i]);
  return acc.take();
}

Mat operator*(const Mat& a, const Mat& b) {
  require(a.cols_ == b.rows_, "internal-error",
          "matrix product shape mismatch " + std::to_string(a.rows_) + "x" + std::to_string(a.cols_) + " * " +
              std::to_string(b.rows_) + "x" + std::to_string(b.cols_));
  Mat c(a.rows_, b.cols_);
  Accum acc(a.rows_);
  for (uint32_t j = 0; j < b.cols_; ++j) {
    if (b.col_[j].empty()) continue;
    c.col_[j] = a.apply(b.col_[j], acc);
  }
  return c;
}

Mat operator+(const Mat& a, const Mat& b) {
  Mat c(a);
  c += b;
  return c;
}

Mat& Mat::operator+=(const Mat& b) {
  require(rows_ == b.rows_ && cols_ == b.cols_, "internal-error", "matrix sum shape mismatch");
  for (uint32_t j = 0; j < cols_; ++j) {
    if (b.col_[j].empty()) continue;
    col_[j] = svec_axpy(col_[j], Scalar(1), b.col_[j]);
  }
  return *this;
}

Mat operator-(const Mat& a, const Mat& b) {
  require(a.rows_ == b.rows_ && a.cols_ == b.cols_, "internal-error", "matrix difference shape mismatch");
  Mat c(a);
  for (uint32_t j = 0; j < a.cols_; ++j) {
    if (b.col_[j].empty()) continue;
    c.col_[j] = svec_axpy(c.col_[j], Scalar(-1), b.col_[j]);
  }
  return c;
}

Mat operator*(const Scalar& s, const Mat& a) {
  Mat c(a.rows_, a.cols_);
  if (s.is_zero()) return c;
  for (uint32_t j = 0; j < a.cols_; ++j) c.col_[j] = svec_scale(a.col_[j], s);
  return c;
}

bool operator==(const Mat& a, const Mat& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) return false;
  for (uint32_t j = 0; j < a.cols_; ++j) {
    const SVec& x = a.col_[j];
    const SVec& y = b.col_[j];
    if (x.size() != y.size()) return false;
    for (size_t k = 0; k < x.size(); ++k) {
      if (x[k].i != y[k].i || x[k].v != y[k].v) return false;
    }
  }
  return true;
}

void Mat::put_block(uint32_t r0, uint32_t c0, const Mat& b) {
  require(r0 + b.rows_ <= rows_ && c0 + b.cols_ <= cols_, "internal-error", "block outside matrix");
  for (uint32_t j = 0; j < b.cols_; ++j) {
    if (b.col_[j].empty()) continue;
    SVec& dst = col_[c0 + j];
    // Merge keeping order; entries outside [r0, r0+rows) are preserved.
    SVec merged;
    merged.reserve(dst.size() + b.col_[j].size());
    size_t p = 0;
    while (p < dst.size() && dst[p].i < r0) merged.push_back(dst[p++]);
    while (p < dst.size() && dst[p].i < r0 + b.rows_) ++p;
    for (const auto& e : b.col_[j]) merged.push_back({e.i + r0, e.v});
    while (p < dst.size()) merged.push_back(dst[p++]);
    dst = std::move(merged);
  }
}

Mat Mat::block(uint32_t r0, uint32_t nr, uint32_t c0, uint32_t nc) const {
  Mat out(nr, nc);
  for (uint32_t j = 0; j < nc; ++j) {
    for (const auto& e : col_[c0 + j]) {
      if (e.i >= r0 && e.i < r0 + nr) out.col_[j].push_back({e.i - r0, e.v});
    }
  }
  return out;
}

std::string Mat::str() const {
  std::ostringstream os;
  for (uint32_t i = 0; i < rows_; ++i) {
    os << "[";
    for (uint32_t j = 0; j < cols_; ++j) os << (j ? " " : "") << at(i, j).str();
    os << "]\n";
  }
  return os.str();
}

Mat kron(const Mat& a, const Mat& b) {
  Mat k(a.rows() * b.rows(), a.cols() * b.cols());
  for (uint32_t ja = 0; ja < a.cols(); ++ja) {
    for (uint32_t jb = 0; jb < b.cols(); ++jb) {
      SVec col;
      for (const auto& ea : a.col(ja)) {
        for (const auto& eb : b.col(jb)) col.push_back({ea.i * b.rows() + eb.i, ea.v * eb.v});
      }
      k.set_col(ja * b.cols() + jb, std::move(col));
    }
  }
  return k;
}

// ---------------------------------------------------------------- Echelon

Echelon::Echelon(uint32_t n, bool track) : n_(n), track_(track), row_of_col_(n, -1) {}

SVec Echelon::reduce(const SVec& v) const {
  // Rows are fully reduced, so one pass over the pivot entries of v suffices.
  SVec r = v;
  for (const auto& e : v) {
    int32_t k = row_of_col_[e.i];
    if (k >= 0) r = svec_axpy(r, -e.v, rows_[k]);
  }
  return r;
}

bool Echelon::insert(const SVec& v) {
  const uint32_t idx = count_++;
  SVec r = v;
  SVec tag;
  if (track_) tag = svec_unit(idx);
  for (const auto& e : v) {
    int32_t k = row_of_col_[e.i];
    if (k >= 0) {
      r = svec_axpy(r, -e.v, rows_[k]);
      if (track_) tag = svec_axpy(tag, -e.v, tags_[k]);
    }
  }
  if (r.empty()) return false;
  const uint32_t p = r.front().i;
  Scalar iv = r.front().v.inv();
  if (!iv.is_one()) {
    r = svec_scale(r, iv);
    if (track_) tag = svec_scale(tag, iv);
  }
  // Clear the new pivot column from the existing rows.
  for (size_t k = 0; k < rows_.size(); ++k) {
    Scalar c = svec_get(rows_[k], p);
    if (c.is_zero()) continue;
    rows_[k] = svec_axpy(rows_[k], -c, r);
    if (track_) tags_[k] = svec_axpy(tags_[k], -c, tag);
  }
  row_of_col_[p] = static_cast<int32_t>(rows_.size());
  rows_.push_back(std::move(r));
  piv_.push_back(p);
  if (track_) tags_.push_back(std::move(tag));
  return true;
}

bool Echelon::coords(const SVec& v, SVec& out) const {
  require(track_, "internal-error", "coordinates requested from an untracked echelon form");
  SVec r = v;
  SVec c;
  for (const auto& e : v) {
    int32_t k = row_of_col_[e.i];
    if (k >= 0) {
      r = svec_axpy(r, -e.v, rows_[k]);
      c = svec_axpy(c, e.v, tags_[k]);
    }
  }
  if (!r.empty()) return false;
  out = std::move(c);
  return true;
}

std::vector<uint32_t> Echelon::free_columns() const {
  std::vector<uint32_t> f;
  for (uint32_t j = 0; j < n_; ++j) {
    if (row_of_col_[j] < 0) f.push_back(j);
  }
  return f;
}

std::vector<SVec> Echelon::nullspace() const {
  // Column f of the free variables: x_f = 1, x_p = -row_p[f].
  std::vector<std::vector<Entry>> by_free(n_);
  for (size_t k = 0; k < rows_.size(); ++k) {
    for (const auto& e : rows_[k]) {
      if (e.i != piv_[k]) by_free[e.i].push_back({piv_[k], -e.v});
    }
  }
  std::vector<SVec> out;
  for (uint32_t f : free_columns()) {
    SVec x = by_free[f];
    x.push_back({f, Scalar(1)});
    std::sort(x.begin(), x.end(), [](const Entry& a, const Entry& b) { return a.i < b.i; });
    out.push_back(std::move(x));
  }
  return out;
}

uint32_t rank(const Mat& a) {
  Echelon ech(a.rows());
  for (uint32_t j = 0; j < a.cols(); ++j) ech.insert(a.col(j));
  return ech.rank();
}

std::vector<SVec> kernel(const Mat& a) {
  Mat t = a.transpose();
  Echelon ech(a.cols());
  for (uint32_t j = 0; j < t.cols(); ++j) ech.insert(t.col(j));
  return ech.nullspace();
}

Mat inverse(const Mat& a) {
  require(a.rows() == a.cols(), "internal-error", "inverse of a non-square matrix");
  const uint32_t n = a.rows();
  Echelon ech(n, true);
  for (uint32_t j = 0; j < n; ++j) ech.insert(a.col(j));
  require(ech.rank() == n, "internal-error", "inverse of a singular matrix");
  Mat inv(n, n);
  for (uint32_t i = 0; i < n; ++i) {
    SVec c;
    ech.coords(svec_unit(i), c);
    inv.set_col(i, std::move(c));
  }
  return inv;
}

bool invertible(const Mat& a) { return a.rows() == a.cols() && rank(a) == a.rows(); }

}  // namespace gsym
