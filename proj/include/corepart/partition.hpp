#pragma once

#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "corepart/exact.hpp"

namespace corepart {

/// Thrown when an enumeration would exceed its configured budget.
class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A partition: weakly decreasing sequence of positive integers.
/// The empty partition is the empty sequence.
class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<long long> parts);

  const std::vector<long long>& parts() const { return parts_; }
  std::size_t num_parts() const { return parts_.size(); }
  long long size() const;
  bool empty() const { return parts_.empty(); }

  auto operator<=>(const Partition& o) const = default;

 private:
  std::vector<long long> parts_;
};

/// Finite set of distinct positive integers; 0 never appears.
using BetaSet = std::set<long long>;

/// Hook lengths of every box, row by row.
std::vector<std::vector<long long>> hook_lengths(const Partition& p);

/// beta(lambda) = { lambda_i + l - i }, the first-column hook lengths.
BetaSet beta_set(const Partition& p);

/// Inverse of beta_set. Throws std::invalid_argument when the set contains
/// a non-positive element (the reconstruction would need a zero part).
Partition partition_from_beta(const BetaSet& b);

/// Size of the partition with beta-set b: sum(b) - C(|b|, 2).
long long size_from_beta(const BetaSet& b);

bool has_distinct_parts(const Partition& p);
/// The beta-set criterion: no two elements differ by exactly 1.
/// Always agrees with has_distinct_parts.
bool has_distinct_parts_beta(const Partition& p);

/// Abacus condition: every beta element x >= t has x - t in the beta-set.
bool is_t_core(const Partition& p, long long t);
/// Direct criterion: no hook length divisible by t.
bool is_t_core_hooks(const Partition& p, long long t);

/// All (t1,t2)-core partitions, optionally restricted to distinct parts.
/// Complete and duplicate-free; output is sorted by decreasing size, then
/// lexicographically by parts. Enumerates beta-sets as down-closed subsets
/// of the gaps of the numerical semigroup <t1,t2>.
/// Throws std::invalid_argument for non-coprime (t1,t2) and BudgetExceeded
/// when more than `budget` partitions would be produced.
std::vector<Partition> enumerate_core(long long t1, long long t2, bool distinct,
                                      std::size_t budget = 1000000);

/// The literal size-bounded oracle: enumerates every partition of every size
/// up to (t1^2-1)(t2^2-1)/24 and filters by the hook-length criterion.
/// Exponential; only usable for tiny t1*t2. Kept as an independent
/// cross-check for enumerate_core.
std::vector<Partition> enumerate_core_by_size(long long t1, long long t2, bool distinct,
                                              std::size_t budget = 2000000);

}  // namespace corepart
