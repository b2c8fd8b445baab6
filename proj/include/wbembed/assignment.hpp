#pragma once

#include <cstddef>
#include <vector>

namespace wbembed {

/// Dense square cost matrix, row-major.
class CostMatrix {
 public:
  CostMatrix() = default;
  explicit CostMatrix(std::size_t size, double fill = 0.0)
      : size_(size), data_(size * size, fill) {}
  /// Throws Error unless `rows` is square.
  static CostMatrix from_rows(const std::vector<std::vector<double>>& rows);

  [[nodiscard]] std::size_t size() const { return size_; }
  double& operator()(std::size_t i, std::size_t j) { return data_[i * size_ + j]; }
  double operator()(std::size_t i, std::size_t j) const { return data_[i * size_ + j]; }

 private:
  std::size_t size_ = 0;
  std::vector<double> data_;
};

struct Assignment {
  /// row_to_col[i] is the column matched to row i.
  std::vector<std::size_t> row_to_col;
  double cost = 0.0;
};

/// Minimum-cost perfect matching by the Hungarian method, O(size^3).
/// Entries must be finite and non-negative. Output is a deterministic
/// function of the matrix: columns are scanned in increasing order and the
/// first strict improvement wins.
Assignment assignment_solve(const CostMatrix& costs);

}  // namespace wbembed
