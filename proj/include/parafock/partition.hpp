#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace parafock {

/// Multiplicity pattern of an index multiset: weakly decreasing positive
/// parts. The empty partition is the N = 0 vacuum sector.
struct Partition {
  std::vector<int> parts;

  Partition() = default;
  explicit Partition(std::vector<int> p) : parts(std::move(p)) {
    for (std::size_t k = 0; k < parts.size(); ++k) {
      if (parts[k] < 1) throw std::invalid_argument("Partition: parts must be positive");
      if (k > 0 && parts[k] > parts[k - 1])
        throw std::invalid_argument("Partition: parts must be weakly decreasing");
    }
  }

  int weight() const {
    int n = 0;
    for (int p : parts) n += p;
    return n;
  }
  int width() const { return static_cast<int>(parts.size()); }

  std::string str() const {
    std::string s = "(";
    for (std::size_t k = 0; k < parts.size(); ++k) {
      if (k) s += ',';
      s += std::to_string(parts[k]);
    }
    s += ')';
    return s;
  }

  friend bool operator==(const Partition& a, const Partition& b) {
    return a.parts == b.parts;
  }
  friend bool operator!=(const Partition& a, const Partition& b) { return !(a == b); }
};

namespace detail {

inline void partitions_rec(int remaining, int max_part, int slots,
                           std::vector<int>& prefix, std::vector<Partition>& out) {
  if (remaining == 0) {
    out.emplace_back(prefix);
    return;
  }
  if (slots == 0) return;
  for (int first = std::min(remaining, max_part); first >= 1; --first) {
    // Feasibility: the rest must fit into the remaining slots.
    if (remaining - first > (slots - 1) * first) continue;
    prefix.push_back(first);
    partitions_rec(remaining - first, first, slots - 1, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace detail

/// Partitions of n with at most max_parts parts, in reverse-lexicographic
/// order: (n) first, (1,...,1) last. n = 0 yields the empty partition.
inline std::vector<Partition> partitions_of(int n, int max_parts) {
  if (n < 0) throw std::invalid_argument("partitions_of: negative n");
  std::vector<Partition> out;
  std::vector<int> prefix;
  detail::partitions_rec(n, n, max_parts, prefix, out);
  return out;
}

inline long long factorial_ll(int n) {
  long long f = 1;
  for (int k = 2; k <= n; ++k) f *= k;
  return f;
}

/// Number of distinct mode multisets over 1..M with multiplicity pattern
/// lambda: choose which of the M modes carries each part, modes carrying equal
/// parts interchangeable. M! / ((M-k)! * prod_j c_j!) with c_j the counts of
/// repeated part values.
inline long long assignment_count(const Partition& lambda, int modes) {
  const int k = lambda.width();
  if (k > modes) return 0;
  long long count = 1;
  for (int j = 0; j < k; ++j) count *= modes - j;
  std::map<int, int> repeats;
  for (int p : lambda.parts) ++repeats[p];
  for (const auto& [part, c] : repeats) {
    (void)part;
    count /= factorial_ll(c);
  }
  return count;
}

}  // namespace parafock
