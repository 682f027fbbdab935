#include "corepart/nice.hpp"

#include <algorithm>
#include <set>

namespace corepart {

NiceSubset::NiceSubset(long long d, long long n, std::vector<long long> heights)
    : d_(d), n_(n), h_(std::move(heights)) {
  if (d_ < 0 || n_ < 0) throw std::invalid_argument("NiceSubset: negative grid dimensions");
  if (static_cast<long long>(h_.size()) != n_)
    throw std::invalid_argument("NiceSubset: need one height per column");
  for (std::size_t j = 0; j < h_.size(); ++j) {
    if (h_[j] < 0 || h_[j] > d_)
      throw std::invalid_argument("NiceSubset: column height out of range");
    if (j > 0 && h_[j] >= 1 && h_[j - 1] >= 1)
      throw std::invalid_argument("NiceSubset: adjacent occupied columns");
  }
}

long long NiceSubset::cardinality() const {
  long long total = 0;
  for (long long h : h_) total += h;
  return total;
}

std::vector<GridCell> NiceSubset::cells() const {
  std::vector<GridCell> out;
  for (long long j = 1; j <= n_; ++j)
    for (long long i = 1; i <= h_[static_cast<std::size_t>(j - 1)]; ++i) out.emplace_back(i, j);
  return out;
}

bool NiceSubset::contains(long long i, long long j) const {
  return j >= 1 && j <= n_ && i >= 1 && i <= h_[static_cast<std::size_t>(j - 1)];
}

BigInt NiceSubset::sigma(long long m) const {
  BigInt total = 0;
  for (long long j = 1; j <= n_; ++j) {
    long long h = h_[static_cast<std::size_t>(j - 1)];
    // sum over i = 1..h of (i-1)m + j
    total += BigInt(h) * (h - 1) / 2 * m + BigInt(h) * j;
  }
  return total;
}

bool is_nice(const std::vector<GridCell>& cells, long long d, long long n) {
  std::set<GridCell> s(cells.begin(), cells.end());
  for (const auto& [i, j] : s) {
    if (i < 1 || i > d || j < 1 || j > n)
      throw std::invalid_argument("is_nice: cell outside the grid");
    if (i > 1 && !s.count({i - 1, j})) return false;
    if (i == 1 && j <= n - 1 && s.count({1, j + 1})) return false;
  }
  return true;
}

namespace {

void enumerate_heights(long long d, long long n, std::vector<long long>& heights,
                       std::vector<NiceSubset>& out) {
  if (static_cast<long long>(heights.size()) == n) {
    out.emplace_back(d, n, heights);
    return;
  }
  bool prev_occupied = !heights.empty() && heights.back() >= 1;
  long long max_h = prev_occupied ? 0 : d;
  for (long long h = 0; h <= max_h; ++h) {
    heights.push_back(h);
    enumerate_heights(d, n, heights, out);
    heights.pop_back();
  }
}

}  // namespace

std::vector<NiceSubset> enumerate_nice_plus(long long d, long long n) {
  if (d < 1 || n < 0) throw std::invalid_argument("enumerate_nice_plus: need d >= 1, n >= 0");
  std::vector<NiceSubset> out;
  std::vector<long long> heights;
  enumerate_heights(d, n, heights, out);
  return out;
}

std::vector<NiceSubset> enumerate_nice_minus(long long d, long long n) {
  if (d < 1 || n < 1) throw std::invalid_argument("enumerate_nice_minus: need d >= 1, n >= 1");
  std::vector<NiceSubset> out;
  for (auto& I : enumerate_nice_plus(d, n))
    if (!I.contains(d, n)) out.push_back(std::move(I));
  return out;
}

NiceSubset psi(const Partition& p, long long n) {
  if (n < 1) throw std::invalid_argument("psi: n must be positive");
  BetaSet b = beta_set(p);
  long long max_row = 1;
  for (long long x : b) {
    if (x % n == 0) throw std::invalid_argument("not an n-core beta-set");
    max_row = std::max(max_row, (x - 1) / n + 1);
  }
  std::vector<long long> heights(static_cast<std::size_t>(n - 1), 0);
  for (long long x : b) {
    long long i = (x - 1) / n + 1;       // row
    long long j = x - (i - 1) * n;       // column, 1..n-1
    if (j > n - 1) throw std::invalid_argument("not an n-core beta-set");
    heights[static_cast<std::size_t>(j - 1)] =
        std::max(heights[static_cast<std::size_t>(j - 1)], i);
  }
  // Downward closure must hold for an n-core: column j occupied at row i
  // forces all rows above. Verify by recounting.
  for (long long j = 1; j <= n - 1; ++j) {
    long long expected = heights[static_cast<std::size_t>(j - 1)];
    long long count = 0;
    for (long long i = 1; i <= expected; ++i)
      if (b.count((i - 1) * n + j)) ++count;
    if (count != expected) throw std::invalid_argument("not an n-core beta-set");
  }
  return NiceSubset(max_row, n - 1, std::move(heights));
}

Partition psi_inverse(const NiceSubset& I, long long n) {
  if (n < 1) throw std::invalid_argument("psi_inverse: n must be positive");
  if (I.ambient_n() > n - 1)
    throw std::invalid_argument("psi_inverse: grid has more than n-1 columns");
  BetaSet b;
  for (const auto& [i, j] : I.cells()) b.insert((i - 1) * n + j);
  return b.empty() ? Partition() : partition_from_beta(b);
}

}  // namespace corepart
