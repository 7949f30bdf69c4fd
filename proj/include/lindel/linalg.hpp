#pragma once

#include <vector>

#include "lindel/field.hpp"

namespace lindel {

using Row = std::vector<Scalar>;
using Mat = std::vector<Row>;  // row-major

// over Q: scale row to coprime integer entries (controls coefficient growth)
void normalize_row(const Field& F, Row& r);

// Incremental row-echelon container over an exact field.
class Echelon {
 public:
  Echelon(const Field& f, size_t width) : field_(f), width_(width) {}

  // Reduces v against the current rows; inserts if nonzero. Returns true if dim grew.
  bool add(Row v);
  // membership in the row space
  bool contains(Row v) const;
  // reduce v against rows (returns residual)
  Row reduce(Row v) const;
  size_t dim() const { return rows_.size(); }
  size_t width() const { return width_; }
  const Mat& rows() const { return rows_; }
  const std::vector<size_t>& pivots() const { return pivots_; }
  const Field& field() const { return field_; }

 private:
  Field field_;
  size_t width_;
  Mat rows_;                    // pivot columns strictly increasing
  std::vector<size_t> pivots_;
};

size_t rank_of(const Field& F, Mat A);
// kernel of the linear map x -> A x (A: m rows, n cols); basis of solutions (each length n)
Mat kernel_basis(const Field& F, const Mat& A);
// solves A x = b; returns true and writes x on success
bool solve_linear(const Field& F, const Mat& A, const Row& b, Row& x);
// basis of the intersection of two row spaces (vectors of common width)
Mat subspace_intersect(const Field& F, const Mat& U, const Mat& V);

}  // namespace lindel
