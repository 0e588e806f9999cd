#pragma once

#include "tropic/errors.hpp"
#include "tropic/scalar.hpp"

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <ostream>
#include <vector>

namespace tropic {

/// Dense rectangular matrix over Q ∪ {+inf}, row-major.
class TropMatrix {
public:
  TropMatrix() = default;
  TropMatrix(std::size_t rows, std::size_t cols, TropicalScalar fill = TropicalScalar(0))
      : rows_(rows), cols_(cols), entries_(rows * cols, fill) {}

  TropMatrix(std::initializer_list<std::initializer_list<TropicalScalar>> init) {
    rows_ = init.size();
    cols_ = rows_ ? init.begin()->size() : 0;
    entries_.reserve(rows_ * cols_);
    for (const auto& row : init) {
      if (row.size() != cols_) throw PreconditionError("TropMatrix: ragged initializer");
      entries_.insert(entries_.end(), row.begin(), row.end());
    }
  }

  static TropMatrix from_rows(const std::vector<std::vector<TropicalScalar>>& rows) {
    TropMatrix m(rows.size(), rows.empty() ? 0 : rows.front().size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != m.cols_) throw PreconditionError("TropMatrix: ragged rows");
      std::copy(rows[i].begin(), rows[i].end(), m.entries_.begin() + static_cast<std::ptrdiff_t>(i * m.cols_));
    }
    return m;
  }

  [[nodiscard]] std::size_t rows() const { return rows_; }
  [[nodiscard]] std::size_t cols() const { return cols_; }
  [[nodiscard]] bool is_square() const { return rows_ == cols_; }

  [[nodiscard]] const TropicalScalar& operator()(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }
  TropicalScalar& operator()(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }

  [[nodiscard]] bool all_finite() const {
    return std::all_of(entries_.begin(), entries_.end(), [](const auto& e) { return e.is_finite(); });
  }

  /// Submatrix on the given (sorted or not) column indices, all rows.
  [[nodiscard]] TropMatrix columns(const std::vector<std::size_t>& keep) const {
    TropMatrix m(rows_, keep.size());
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t c = 0; c < keep.size(); ++c) m(i, c) = (*this)(i, keep[c]);
    return m;
  }

  [[nodiscard]] TropMatrix without_columns(const std::vector<std::size_t>& drop) const {
    std::vector<std::size_t> keep;
    for (std::size_t j = 0; j < cols_; ++j)
      if (std::find(drop.begin(), drop.end(), j) == drop.end()) keep.push_back(j);
    return columns(keep);
  }

  [[nodiscard]] TropMatrix transposed() const {
    TropMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  friend bool operator==(const TropMatrix&, const TropMatrix&) = default;

  friend std::ostream& operator<<(std::ostream& os, const TropMatrix& m) {
    os << "[";
    for (std::size_t i = 0; i < m.rows_; ++i) {
      os << (i ? ",[" : "[");
      for (std::size_t j = 0; j < m.cols_; ++j) os << (j ? "," : "") << m(i, j);
      os << "]";
    }
    return os << "]";
  }

private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<TropicalScalar> entries_;
};

}  // namespace tropic
