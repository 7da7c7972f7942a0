#include "foxcalc/modmatrix.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <utility>

#include <boost/multiprecision/cpp_int.hpp>

namespace foxcalc {

namespace {

Int floordiv(const Int& a, const Int& b) {
  Int q = a / b;                 // truncates toward zero
  if ((a % b) != 0 && ((a < 0) != (b < 0))) --q;
  return q;
}

// returns (g, x, y) with x*a + y*b = g = gcd(a, b) >= 0
struct XGcd { Int g, x, y; };
XGcd xgcd(Int a, Int b) {
  Int x0 = 1, y0 = 0, x1 = 0, y1 = 1;
  while (b != 0) {
    Int q = a / b;
    a -= q * b; std::swap(a, b);
    x0 -= q * x1; std::swap(x0, x1);
    y0 -= q * y1; std::swap(y0, y1);
  }
  if (a < 0) { a = -a; x0 = -x0; y0 = -y0; }
  return {a, x0, y0};
}

// unit u mod d with u*a == gcd(a, d) (mod d); a in (0, d)
Int lifting_unit(const Int& a, const Int& d) {
  Int g = boost::multiprecision::gcd(a, d);
  Int ap = a / g, dp = d / g;
  Int u0 = xgcd(ap, dp).x % dp;     // inverse of a/g modulo d/g
  if (u0 < 0) u0 += dp;
  if (u0 == 0) u0 = dp;             // dp = 1: any unit will do, scan from dp
  // u0 + t*dp keeps u*a == g (mod d); some t <= g makes it coprime to d
  for (Int u = u0;; u += dp)
    if (boost::multiprecision::gcd(u, d) == 1) return u;
}

}  // namespace

ModMatrix::ModMatrix(int modulus, int cols,
                     const std::vector<std::vector<Int>>& gens)
    : modulus_(modulus), cols_(cols) {
  if (modulus_ < 0 || modulus_ == 1)
    throw std::invalid_argument("modulus must be 0 or at least 2");
  if (cols_ < 0) throw std::invalid_argument("negative column count");
  for (const auto& r : gens) {
    if (r.size() != static_cast<std::size_t>(cols_))
      throw std::invalid_argument("row length does not match column count");
    insert(r);
  }
  normalize_canonical();
}

void ModMatrix::insert(std::vector<Int> first) {
  // rows_ holds one row per pivot column while building; worklist rows are
  // folded in until each either vanishes or settles as a pivot
  std::map<int, std::vector<Int>> pivots;
  for (std::size_t i = 0; i < rows_.size(); ++i)
    pivots[pivot_cols_[i]] = std::move(rows_[i]);

  auto reduce_entry = [&](Int& c) {
    if (modulus_ == 0) return;
    c %= modulus_;
    if (c < 0) c += modulus_;
  };
  auto leading = [&](const std::vector<Int>& r) {
    for (int j = 0; j < cols_; ++j)
      if (r[j] != 0) return j;
    return -1;
  };

  std::vector<std::vector<Int>> work;
  work.push_back(std::move(first));
  while (!work.empty()) {
    std::vector<Int> row = std::move(work.back());
    work.pop_back();
    for (Int& c : row) reduce_entry(c);
    int j = leading(row);
    while (j >= 0) {
      auto it = pivots.find(j);
      if (it == pivots.end()) {
        // new pivot: normalize the leading entry, then record the
        // annihilator so the span keeps every leading position it owns
        if (modulus_ == 0) {
          if (row[j] < 0)
            for (Int& c : row) c = -c;
        } else {
          Int u = lifting_unit(row[j], modulus_);
          for (Int& c : row) { c *= u; reduce_entry(c); }
          Int g = row[j];
          if (g != modulus_) {
            std::vector<Int> ann(row);
            Int f = modulus_ / g;
            for (Int& c : ann) { c *= f; reduce_entry(c); }
            if (leading(ann) >= 0) work.push_back(std::move(ann));
          }
        }
        pivots.emplace(j, std::move(row));
        break;
      }
      std::vector<Int>& p = it->second;
      const Int b = p[j], a = row[j];
      if (a % b == 0) {
        // plain elimination step; the leading column strictly advances
        Int q = a / b;
        for (int c = j; c < cols_; ++c) {
          row[c] -= q * p[c];
          reduce_entry(row[c]);
        }
        j = leading(row);
        continue;
      }
      // gcd-combine: the new pivot entry g properly divides b, and both
      // old rows lose their leading entry and re-enter the worklist
      XGcd e = xgcd(b, a);
      std::vector<Int> comb(cols_, Int(0));
      for (int c = j; c < cols_; ++c) {
        comb[c] = e.x * p[c] + e.y * row[c];
        reduce_entry(comb[c]);
      }
      std::vector<Int> prem(cols_, Int(0)), rrem(cols_, Int(0));
      Int pq = b / e.g, rq = a / e.g;
      for (int c = j; c < cols_; ++c) {
        prem[c] = p[c] - pq * comb[c];
        rrem[c] = row[c] - rq * comb[c];
        reduce_entry(prem[c]);
        reduce_entry(rrem[c]);
      }
      if (modulus_ != 0 && e.g != modulus_) {
        std::vector<Int> ann(comb);
        Int f = modulus_ / e.g;
        for (Int& c : ann) { c *= f; reduce_entry(c); }
        if (leading(ann) >= 0) work.push_back(std::move(ann));
      }
      p = std::move(comb);
      if (leading(prem) >= 0) work.push_back(std::move(prem));
      row = std::move(rrem);
      j = leading(row);
    }
  }

  rows_.clear();
  pivot_cols_.clear();
  for (auto& [col, row] : pivots) {
    pivot_cols_.push_back(col);
    rows_.push_back(std::move(row));
  }
}

void ModMatrix::normalize_canonical() {
  // clear the space above each pivot down to canonical residues mod the
  // pivot entry; sweeping target columns left to right keeps earlier
  // normalizations intact (each pivot row is zero before its pivot)
  for (std::size_t i = 0; i < rows_.size(); ++i)
    for (std::size_t j = i + 1; j < rows_.size(); ++j) {
      int cj = pivot_cols_[j];
      Int q = floordiv(rows_[i][cj], rows_[j][cj]);
      if (q == 0) continue;
      for (int c = cj; c < cols_; ++c) {
        rows_[i][c] -= q * rows_[j][c];
        if (modulus_ != 0) {
          rows_[i][c] %= modulus_;
          if (rows_[i][c] < 0) rows_[i][c] += modulus_;
        }
      }
    }
}

bool ModMatrix::contains(const std::vector<Int>& v) const {
  if (v.size() != static_cast<std::size_t>(cols_))
    throw std::invalid_argument("vector length does not match column count");
  std::vector<Int> r = v;
  if (modulus_ != 0)
    for (Int& c : r) {
      c %= modulus_;
      if (c < 0) c += modulus_;
    }
  std::size_t i = 0;
  for (int j = 0; j < cols_; ++j) {
    if (r[j] == 0) continue;
    while (i < rows_.size() && pivot_cols_[i] < j) ++i;
    if (i == rows_.size() || pivot_cols_[i] != j) return false;
    if (r[j] % rows_[i][j] != 0) return false;
    Int q = r[j] / rows_[i][j];
    for (int c = j; c < cols_; ++c) {
      r[c] -= q * rows_[i][c];
      if (modulus_ != 0) {
        r[c] %= modulus_;
        if (r[c] < 0) r[c] += modulus_;
      }
    }
  }
  for (const Int& c : r)
    if (c != 0) return false;
  return true;
}

}  // namespace foxcalc
