#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

namespace foxcalc {

// A finite group as an explicit multiplication table.  Element 0 is the
// identity; the table is validated on construction (identity row/column,
// Latin square, associativity), which keeps every downstream computation on
// honest data.  Orders stay small, so full validation is cheap.
class FiniteGroup {
public:
  FiniteGroup(std::string name, int order, std::vector<int> table,
              int pgroup_prime = 0);

  const std::string& name() const { return name_; }
  int order() const { return order_; }
  int mul(int a, int b) const { return table_[a * order_ + b]; }
  int inv(int a) const { return inv_[a]; }
  int pow(int a, std::int64_t e) const;
  int element_order(int a) const;

  // 0 when the group carries no p-group tag
  int pgroup_prime() const { return pgroup_prime_; }
  // the trivial group is a p-group for every p
  bool is_pgroup(int p) const { return order_ == 1 || pgroup_prime_ == p; }

  const std::vector<int>& table() const { return table_; }

private:
  std::string name_;
  int order_;
  std::vector<int> table_;
  std::vector<int> inv_;
  int pgroup_prime_;
};

using GroupPtr = std::shared_ptr<const FiniteGroup>;

// Table exchange format:
//   order N
//   N rows of N space-separated element indices
//   name STRING      (optional)
//   pgroup P         (optional)
FiniteGroup load_group(const std::string& text);
std::string save_group(const FiniteGroup& g);

// Fixed library of small groups used for quotient searches, ascending order.
const std::vector<GroupPtr>& builtin_catalog();
GroupPtr find_group(std::string_view name);   // nullptr when absent

}  // namespace foxcalc
