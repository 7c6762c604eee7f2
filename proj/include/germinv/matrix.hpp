#pragma once

#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include "germinv/polynomial.hpp"

namespace germinv {

/// Rectangular row-major matrix of polynomials over one ring.
class PolyMatrix {
 public:
  PolyMatrix(RingPtr ring, std::size_t rows, std::size_t cols);
  static PolyMatrix identity(RingPtr ring, std::size_t n);
  /// All rows must have the same length and all entries one ring.
  static PolyMatrix from_rows(std::vector<std::vector<Polynomial>> rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const RingPtr& ring() const { return ring_; }
  bool is_square() const { return rows_ == cols_; }

  const Polynomial& at(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }
  void set(std::size_t i, std::size_t j, Polynomial p);

  PolyMatrix transpose() const;
  PolyMatrix map_entries(const std::function<Polynomial(const Polynomial&)>& fn) const;
  std::string to_string() const;

  friend bool operator==(const PolyMatrix& a, const PolyMatrix& b);

 private:
  RingPtr ring_;
  std::size_t rows_, cols_;
  std::vector<Polynomial> entries_;
};

/// Fraction-free (Bareiss) determinant; throws ShapeMismatch-coded
/// InvalidArgument on non-square input.
Polynomial determinant(const PolyMatrix& m);

/// All size-s minors, enumerated by Laplace expansion with memoized
/// sub-minors. Zero minors are dropped; duplicates up to sign are kept once.
/// Throws ResourceCapExceeded when more than `max_entries` sub-minors would be
/// memoized.
std::vector<Polynomial> minors(const PolyMatrix& m, std::size_t s, std::size_t max_entries = 2'000'000);

/// Repeatedly deletes row i and column j for an entry (i, j) that is a
/// nonzero constant, after clearing column j with it. With rows as relations
/// and columns as generators this drops one generator per step and preserves
/// every Fitting ideal; `removed` is incremented per step.
PolyMatrix prune_constant_pivots(const PolyMatrix& m, std::size_t* removed = nullptr);

}  // namespace germinv
