#include "corepart/partition.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <unordered_map>

namespace corepart {

Partition::Partition(std::vector<long long> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] < 1) throw std::invalid_argument("Partition: parts must be positive");
    if (i > 0 && parts_[i] > parts_[i - 1])
      throw std::invalid_argument("Partition: parts must be weakly decreasing");
  }
}

long long Partition::size() const {
  return std::accumulate(parts_.begin(), parts_.end(), 0LL);
}

std::vector<std::vector<long long>> hook_lengths(const Partition& p) {
  const auto& parts = p.parts();
  const std::size_t rows = parts.size();
  // conjugate[j] = number of rows with a box in column j
  std::vector<long long> conjugate(rows == 0 ? 0 : static_cast<std::size_t>(parts[0]), 0);
  for (std::size_t i = 0; i < rows; ++i)
    for (long long j = 0; j < parts[i]; ++j) ++conjugate[static_cast<std::size_t>(j)];

  std::vector<std::vector<long long>> hooks(rows);
  for (std::size_t i = 0; i < rows; ++i) {
    hooks[i].resize(static_cast<std::size_t>(parts[i]));
    for (long long j = 0; j < parts[i]; ++j) {
      long long arm = parts[i] - j - 1;
      long long leg = conjugate[static_cast<std::size_t>(j)] - static_cast<long long>(i) - 1;
      hooks[i][static_cast<std::size_t>(j)] = arm + leg + 1;
    }
  }
  return hooks;
}

BetaSet beta_set(const Partition& p) {
  const auto& parts = p.parts();
  const long long l = static_cast<long long>(parts.size());
  BetaSet b;
  for (long long i = 1; i <= l; ++i) b.insert(parts[static_cast<std::size_t>(i - 1)] + l - i);
  return b;
}

Partition partition_from_beta(const BetaSet& b) {
  std::vector<long long> sorted(b.rbegin(), b.rend());  // descending
  const long long l = static_cast<long long>(sorted.size());
  std::vector<long long> parts;
  parts.reserve(sorted.size());
  for (long long i = 1; i <= l; ++i) {
    long long part = sorted[static_cast<std::size_t>(i - 1)] - (l - i);
    if (part < 1)
      throw std::invalid_argument("not a valid beta-set (would require zero part)");
    parts.push_back(part);
  }
  return Partition(std::move(parts));
}

long long size_from_beta(const BetaSet& b) {
  long long sum = std::accumulate(b.begin(), b.end(), 0LL);
  long long l = static_cast<long long>(b.size());
  return sum - l * (l - 1) / 2;
}

bool has_distinct_parts(const Partition& p) {
  const auto& parts = p.parts();
  for (std::size_t i = 1; i < parts.size(); ++i)
    if (parts[i] == parts[i - 1]) return false;
  return true;
}

bool has_distinct_parts_beta(const Partition& p) {
  BetaSet b = beta_set(p);
  for (long long x : b)
    if (b.count(x + 1)) return false;
  return true;
}

bool is_t_core(const Partition& p, long long t) {
  if (t < 1) throw std::invalid_argument("is_t_core: t must be positive");
  BetaSet b = beta_set(p);
  // Beta-sets never contain 0, so x == t fails the lookup and correctly
  // flags a hook length equal to t.
  for (long long x : b)
    if (x >= t && !b.count(x - t)) return false;
  return true;
}

bool is_t_core_hooks(const Partition& p, long long t) {
  if (t < 1) throw std::invalid_argument("is_t_core_hooks: t must be positive");
  for (const auto& row : hook_lengths(p))
    for (long long h : row)
      if (h % t == 0) return false;
  return true;
}

namespace {

void sort_canonical(std::vector<Partition>& out) {
  std::sort(out.begin(), out.end(), [](const Partition& a, const Partition& b) {
    long long sa = a.size(), sb = b.size();
    if (sa != sb) return sa > sb;
    return a.parts() < b.parts();
  });
}

}  // namespace

std::vector<Partition> enumerate_core(long long t1, long long t2, bool distinct,
                                      std::size_t budget) {
  if (t1 < 1 || t2 < 1) throw std::invalid_argument("enumerate_core: t1, t2 must be positive");
  if (std::gcd(t1, t2) != 1)
    throw std::invalid_argument("infinite family: gcd(t1, t2) must be 1");

  // Gaps of the numerical semigroup <t1, t2>: positive integers not of the
  // form a*t1 + b*t2. Every (t1,t2)-core beta-set is a subset of the gaps
  // that is closed under subtracting t1 and t2 (abacus condition), and
  // every such subset is a valid beta-set.
  const long long limit = t1 * t2;
  std::vector<char> representable(static_cast<std::size_t>(limit) + 1, 0);
  representable[0] = 1;
  for (long long x = 1; x <= limit; ++x) {
    if ((x >= t1 && representable[static_cast<std::size_t>(x - t1)]) ||
        (x >= t2 && representable[static_cast<std::size_t>(x - t2)]))
      representable[static_cast<std::size_t>(x)] = 1;
  }
  std::vector<long long> gaps;
  for (long long x = 1; x <= limit; ++x)
    if (!representable[static_cast<std::size_t>(x)]) gaps.push_back(x);

  std::unordered_map<long long, std::size_t> index;
  for (std::size_t i = 0; i < gaps.size(); ++i) index[gaps[i]] = i;

  std::vector<Partition> out;
  std::vector<char> chosen(gaps.size(), 0);
  std::vector<long long> current;

  auto emit = [&]() {
    BetaSet b(current.begin(), current.end());
    Partition p = current.empty() ? Partition() : partition_from_beta(b);
    if (!distinct || has_distinct_parts(p)) {
      if (out.size() >= budget) throw BudgetExceeded("oracle budget exceeded");
      out.push_back(std::move(p));
    }
  };

  // Gaps are processed in increasing order, so both predecessors of gaps[i]
  // have already been decided when we reach it.
  auto rec = [&](auto&& self, std::size_t i) -> void {
    if (i == gaps.size()) {
      emit();
      return;
    }
    self(self, i + 1);  // exclude gaps[i]
    const long long g = gaps[i];
    bool ok1 = g < t1 || chosen[index.at(g - t1)];
    bool ok2 = g < t2 || chosen[index.at(g - t2)];
    if (ok1 && ok2) {
      chosen[i] = 1;
      current.push_back(g);
      self(self, i + 1);
      current.pop_back();
      chosen[i] = 0;
    }
  };
  rec(rec, 0);

  sort_canonical(out);
  return out;
}

namespace {

void gen_partitions(long long remaining, long long max_part, std::vector<long long>& stack,
                    std::size_t& generated, std::size_t budget,
                    const std::function<void(const std::vector<long long>&)>& sink) {
  if (remaining == 0) {
    if (++generated > budget) throw BudgetExceeded("oracle budget exceeded");
    sink(stack);
    return;
  }
  for (long long part = std::min(remaining, max_part); part >= 1; --part) {
    stack.push_back(part);
    gen_partitions(remaining - part, part, stack, generated, budget, sink);
    stack.pop_back();
  }
}

}  // namespace

std::vector<Partition> enumerate_core_by_size(long long t1, long long t2, bool distinct,
                                              std::size_t budget) {
  if (std::gcd(t1, t2) != 1)
    throw std::invalid_argument("infinite family: gcd(t1, t2) must be 1");
  const long long bound = (t1 * t1 - 1) * (t2 * t2 - 1) / 24;  // Olsson-Stanton
  std::vector<Partition> out;
  std::size_t generated = 0;
  std::vector<long long> stack;
  for (long long n = 0; n <= bound; ++n) {
    gen_partitions(n, n == 0 ? 1 : n, stack, generated, budget,
                   [&](const std::vector<long long>& parts) {
                     Partition p(parts);
                     if (!is_t_core_hooks(p, t1) || !is_t_core_hooks(p, t2)) return;
                     if (distinct && !has_distinct_parts(p)) return;
                     out.push_back(std::move(p));
                   });
  }
  sort_canonical(out);
  return out;
}

}  // namespace corepart
