#pragma once

#include <utility>
#include <vector>

#include "corepart/partition.hpp"

namespace corepart {

/// Cell (row i, column j) of the grid A_{d,n}, 1-based.
using GridCell = std::pair<long long, long long>;

/// A nice subset of A_{d,n}: columns are filled from row 1 downward and no
/// two consecutive columns are both occupied. Stored as per-column heights
/// h_j in 0..d; cells are materialized on demand.
class NiceSubset {
 public:
  NiceSubset(long long d, long long n, std::vector<long long> heights);

  long long ambient_d() const { return d_; }
  long long ambient_n() const { return n_; }
  const std::vector<long long>& heights() const { return h_; }

  long long cardinality() const;
  std::vector<GridCell> cells() const;
  bool contains(long long i, long long j) const;

  /// sigma_m(I) = sum over cells of (i-1)m + j.
  BigInt sigma(long long m) const;

  /// Equality ignores the ambient d (a nice subset of A_{d,n} is the same
  /// set of cells inside any larger grid).
  bool operator==(const NiceSubset& o) const { return n_ == o.n_ && h_ == o.h_; }
  bool operator<(const NiceSubset& o) const {
    return n_ != o.n_ ? n_ < o.n_ : h_ < o.h_;
  }

 private:
  long long d_, n_;
  std::vector<long long> h_;
};

/// Checks the two nice conditions for an explicit cell set.
/// Throws std::invalid_argument if a cell is outside A_{d,n}.
bool is_nice(const std::vector<GridCell>& cells, long long d, long long n);

/// All nice subsets of A_{d,n}, columns scanned left to right, heights
/// ascending. |result| satisfies G(n) = G(n-1) + d G(n-2).
std::vector<NiceSubset> enumerate_nice_plus(long long d, long long n);

/// Nice subsets with (d,n) not in I; |result| = N_d(n+1).
std::vector<NiceSubset> enumerate_nice_minus(long long d, long long n);

/// psi_n: maps each beta element (i-1)n + j (1 <= j <= n-1) to cell (i,j).
/// Throws std::invalid_argument if some beta element is divisible by n.
NiceSubset psi(const Partition& p, long long n);

/// Inverse of psi: beta-set { (i-1)n + j : (i,j) in I } as a partition.
Partition psi_inverse(const NiceSubset& I, long long n);

}  // namespace corepart
