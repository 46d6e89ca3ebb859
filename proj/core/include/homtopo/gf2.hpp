#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

namespace homtopo {

/// A GF(2) column: sorted, duplicate-free row indices of the nonzero entries.
using Gf2Column = std::vector<std::uint32_t>;

/// Adds `src` into `dst` over GF(2) (symmetric difference of supports).
void gf2_add(Gf2Column& dst, const Gf2Column& src);

/// Normalizes an arbitrary list of row indices into a Gf2Column, cancelling
/// indices that occur an even number of times.
Gf2Column gf2_from_multiset(std::vector<std::uint32_t> rows);

/// Column-major sparse matrix over GF(2).
class Gf2Matrix {
 public:
  Gf2Matrix() = default;
  Gf2Matrix(std::size_t rows, std::vector<Gf2Column> columns);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return columns_.size(); }
  const Gf2Column& column(std::size_t j) const { return columns_[j]; }
  const std::vector<Gf2Column>& columns() const noexcept { return columns_; }
  std::size_t nonzeros() const;

  /// this * other over GF(2).
  Gf2Matrix multiply(const Gf2Matrix& other) const;
  bool is_zero() const;
  Gf2Matrix transpose() const;

 private:
  std::size_t rows_ = 0;
  std::vector<Gf2Column> columns_;
};

/// Result of the standard pivot-on-lowest-row column reduction.
class Gf2Reduction {
 public:
  /// Reduces every column of `m` except those listed in `skip` (they are known
  /// to reduce to zero, e.g. by clearing).
  explicit Gf2Reduction(const Gf2Matrix& m, const std::vector<bool>* skip = nullptr);

  std::size_t rank() const noexcept { return rank_; }
  /// Row index of the lowest nonzero of each reduced column, if any.
  const std::vector<std::optional<std::uint32_t>>& pivots() const noexcept { return low_; }
  /// True iff `v` lies in the column space of the reduced matrix.
  bool in_column_space(Gf2Column v) const;

 private:
  std::size_t rank_ = 0;
  std::vector<Gf2Column> reduced_;
  std::vector<std::optional<std::uint32_t>> low_;
  // pivot row -> reduced column holding it
  std::vector<std::int64_t> owner_;
};

}  // namespace homtopo
