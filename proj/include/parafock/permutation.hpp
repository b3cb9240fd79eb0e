#pragma once

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace parafock {

/// One-line notation with 1-based images: perm[r-1] = pi(r).
using Perm = std::vector<int>;

inline long long factorial(int n) {
  long long f = 1;
  for (int k = 2; k <= n; ++k) f *= k;
  return f;
}

/// All of S_n in lexicographic one-line order; the canonical row/column order
/// of every generic matrix and c(pi) table.
inline std::vector<Perm> all_permutations(int n) {
  Perm p(static_cast<std::size_t>(n));
  std::iota(p.begin(), p.end(), 1);
  std::vector<Perm> out;
  out.reserve(static_cast<std::size_t>(factorial(n)));
  do {
    out.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

/// (f ∘ g)(r) = f(g(r)).
inline Perm compose(const Perm& f, const Perm& g) {
  if (f.size() != g.size()) throw std::invalid_argument("compose: size mismatch");
  Perm out(f.size());
  for (std::size_t r = 0; r < g.size(); ++r)
    out[r] = f[static_cast<std::size_t>(g[r]) - 1];
  return out;
}

inline Perm inverse(const Perm& p) {
  Perm out(p.size());
  for (std::size_t r = 0; r < p.size(); ++r)
    out[static_cast<std::size_t>(p[r]) - 1] = static_cast<int>(r) + 1;
  return out;
}

/// "2,1,3" — the serialized key for c(pi) tables.
inline std::string perm_key(const Perm& p) {
  std::string s;
  for (std::size_t r = 0; r < p.size(); ++r) {
    if (r) s += ',';
    s += std::to_string(p[r]);
  }
  return s;
}

/// Index lookup for a lex-ordered permutation list.
class PermIndex {
 public:
  explicit PermIndex(const std::vector<Perm>& perms) {
    for (std::size_t k = 0; k < perms.size(); ++k) index_[perms[k]] = static_cast<int>(k);
  }
  int at(const Perm& p) const {
    auto it = index_.find(p);
    if (it == index_.end()) throw std::invalid_argument("PermIndex: unknown permutation");
    return it->second;
  }

 private:
  std::map<Perm, int> index_;
};

}  // namespace parafock
