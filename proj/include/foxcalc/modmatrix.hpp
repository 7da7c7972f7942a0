#pragma once

#include <vector>

#include "foxcalc/groupring.hpp"

namespace foxcalc {

// Row space of a set of vectors over Z/d (over Z when d = 0), held in a
// canonical echelon form so that equal row spaces compare equal and
// membership is a single divisibility-driven reduction pass.
//
// For d > 0 plain Gaussian elimination is unsound at composite d (zero
// divisors), so the form computed is the Howell form: pivot entries divide
// d, entries above a pivot are reduced below it, and for every row of the
// span whose leading entry sits in column j the form holds a row with pivot
// in column j (annihilator rows (d/pivot)*row are folded in to guarantee
// this).  For d = 0 the same elimination yields the Hermite normal form.
class ModMatrix {
public:
  ModMatrix(int modulus, int cols, const std::vector<std::vector<Int>>& gens = {});

  int modulus() const { return modulus_; }
  int cols() const { return cols_; }

  // canonical form rows, sorted by pivot column
  const std::vector<std::vector<Int>>& rows() const { return rows_; }
  const std::vector<int>& pivot_cols() const { return pivot_cols_; }

  // exact row-space membership
  bool contains(const std::vector<Int>& v) const;

  // same modulus and identical canonical form = same row space
  bool operator==(const ModMatrix& o) const {
    return modulus_ == o.modulus_ && cols_ == o.cols_ && rows_ == o.rows_;
  }

private:
  void insert(std::vector<Int> row);
  void normalize_canonical();

  int modulus_;
  int cols_;
  std::vector<std::vector<Int>> rows_;
  std::vector<int> pivot_cols_;
};

}  // namespace foxcalc
