#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace legkh {

// Row-major sparse integer matrix; each row keeps its entries sorted by column
// with no explicit zeros.
class SparseMatrix {
 public:
  using Row = std::vector<std::pair<int, std::int64_t>>;

  SparseMatrix() = default;
  SparseMatrix(int rows, int cols) : cols_(cols), rows_(rows) {}

  int rows() const { return static_cast<int>(rows_.size()); }
  int cols() const { return cols_; }
  const Row& row(int r) const { return rows_[r]; }

  // Adds `value` to entry (r, c).
  void add(int r, int c, std::int64_t value);
  std::int64_t at(int r, int c) const;
  std::size_t nonzeros() const;

  // this * other
  SparseMatrix multiply(const SparseMatrix& other) const;
  bool is_zero() const;

  std::vector<std::vector<std::int64_t>> dense() const;

 private:
  int cols_ = 0;
  std::vector<Row> rows_;
};

struct SmithResult {
  int rank = 0;
  // Invariant factors greater than one, each dividing the next.
  std::vector<std::int64_t> torsion;

  friend bool operator==(const SmithResult&, const SmithResult&) = default;
};

// Sparse elimination on unit pivots, then arbitrary-precision dense Smith form
// on whatever is left. Throws Error(TooLarge) if an invariant factor does not
// fit in 64 bits.
SmithResult smith_normal_form(const SparseMatrix& matrix);

// Straight dense Smith form with arbitrary-precision arithmetic.
SmithResult dense_smith_normal_form(const std::vector<std::vector<std::int64_t>>& matrix);

}  // namespace legkh
