#include "homtopo/gf2.hpp"

#include <algorithm>
#include <iterator>

#include "homtopo/errors.hpp"

namespace homtopo {

void gf2_add(Gf2Column& dst, const Gf2Column& src) {
  Gf2Column out;
  out.reserve(dst.size() + src.size());
  std::set_symmetric_difference(dst.begin(), dst.end(), src.begin(), src.end(),
                                std::back_inserter(out));
  dst.swap(out);
}

Gf2Column gf2_from_multiset(std::vector<std::uint32_t> rows) {
  std::sort(rows.begin(), rows.end());
  Gf2Column out;
  for (std::size_t i = 0; i < rows.size();) {
    std::size_t j = i;
    while (j < rows.size() && rows[j] == rows[i]) ++j;
    if ((j - i) % 2 == 1) out.push_back(rows[i]);
    i = j;
  }
  return out;
}

Gf2Matrix::Gf2Matrix(std::size_t rows, std::vector<Gf2Column> columns)
    : rows_(rows), columns_(std::move(columns)) {
  for (const auto& c : columns_) {
    if (!std::is_sorted(c.begin(), c.end()) || std::adjacent_find(c.begin(), c.end()) != c.end()) {
      throw InternalError("Gf2Matrix column is not sorted and duplicate-free");
    }
    if (!c.empty() && c.back() >= rows_) throw InternalError("Gf2Matrix row index out of range");
  }
}

std::size_t Gf2Matrix::nonzeros() const {
  std::size_t n = 0;
  for (const auto& c : columns_) n += c.size();
  return n;
}

Gf2Matrix Gf2Matrix::multiply(const Gf2Matrix& other) const {
  if (other.rows() != cols()) throw InternalError("Gf2Matrix::multiply dimension mismatch");
  std::vector<Gf2Column> out;
  out.reserve(other.cols());
  for (const auto& col : other.columns()) {
    std::vector<std::uint32_t> rows;
    for (std::uint32_t k : col) rows.insert(rows.end(), columns_[k].begin(), columns_[k].end());
    out.push_back(gf2_from_multiset(std::move(rows)));
  }
  return Gf2Matrix(rows_, std::move(out));
}

bool Gf2Matrix::is_zero() const {
  return std::all_of(columns_.begin(), columns_.end(), [](const Gf2Column& c) { return c.empty(); });
}

Gf2Matrix Gf2Matrix::transpose() const {
  std::vector<Gf2Column> out(rows_);
  for (std::size_t j = 0; j < columns_.size(); ++j)
    for (std::uint32_t i : columns_[j]) out[i].push_back(static_cast<std::uint32_t>(j));
  return Gf2Matrix(cols(), std::move(out));
}

Gf2Reduction::Gf2Reduction(const Gf2Matrix& m, const std::vector<bool>* skip)
    : reduced_(m.cols()), low_(m.cols()), owner_(m.rows(), -1) {
  for (std::size_t j = 0; j < m.cols(); ++j) {
    if (skip != nullptr && (*skip)[j]) continue;
    Gf2Column col = m.column(j);
    while (!col.empty()) {
      const std::int64_t other = owner_[col.back()];
      if (other < 0) break;
      gf2_add(col, reduced_[static_cast<std::size_t>(other)]);
    }
    if (!col.empty()) {
      low_[j] = col.back();
      owner_[col.back()] = static_cast<std::int64_t>(j);
      ++rank_;
    }
    reduced_[j] = std::move(col);
  }
}

bool Gf2Reduction::in_column_space(Gf2Column v) const {
  while (!v.empty()) {
    if (v.back() >= owner_.size()) return false;
    const std::int64_t other = owner_[v.back()];
    if (other < 0) return false;
    gf2_add(v, reduced_[static_cast<std::size_t>(other)]);
  }
  return true;
}

}  // namespace homtopo
