#pragma once

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "parafock/gram.hpp"
#include "parafock/partition.hpp"

namespace parafock {

/// Dense-Gram fallback guard: at most this many rational entries.
inline constexpr long long kGramEntryGuard = 1'000'000;

/// All distinct orderings (lex) of the multiset that assigns the given modes
/// to the parts of lambda: modes[0] appears lambda_1 times, and so on.
inline MonomialBasis multiset_basis(const Partition& lambda, const std::vector<int>& modes) {
  if (static_cast<int>(modes.size()) != lambda.width())
    throw std::invalid_argument("multiset_basis: one mode per part required");
  Monomial sorted;
  for (int k = 0; k < lambda.width(); ++k)
    sorted.insert(sorted.end(), static_cast<std::size_t>(lambda.parts[static_cast<std::size_t>(k)]),
                  modes[static_cast<std::size_t>(k)]);
  std::sort(sorted.begin(), sorted.end());
  MonomialBasis basis;
  do {
    basis.push_back(sorted);
  } while (std::next_permutation(sorted.begin(), sorted.end()));
  return basis;
}

/// d_lambda with an explicit injective assignment of modes to parts; the
/// default assignment is modes 1..k. Rank of the multiset Gram block.
inline int d_lambda_assigned(const AlgebraSpec& spec, const Partition& lambda,
                             const std::vector<int>& modes) {
  if (lambda.weight() == 0) return 1;  // the vacuum block
  if (lambda.width() > spec.modes)
    throw std::invalid_argument("d_lambda: partition wider than the mode count");
  if (lambda.weight() > spec.max_n) throw GuardExceeded("d_lambda: |lambda| exceeds max_n");
  for (int m : modes) spec.check_mode(m);
  if (std::set<int>(modes.begin(), modes.end()).size() != modes.size())
    throw std::invalid_argument("d_lambda: mode assignment must be injective");
  return rank(gram_matrix(spec, multiset_basis(lambda, modes)));
}

inline int d_lambda(const AlgebraSpec& spec, const Partition& lambda) {
  std::vector<int> modes(static_cast<std::size_t>(lambda.width()));
  std::iota(modes.begin(), modes.end(), 1);
  return d_lambda_assigned(spec, lambda, modes);
}

/// D(M,N): when length-N multiset orthogonality holds, sum over partitions of
/// m_lambda(M) * d_lambda; otherwise the rank of the full M^N-word Gram,
/// guarded by the dense entry limit.
inline long long fock_dimension(const AlgebraSpec& spec, int n) {
  if (n < 0) throw std::invalid_argument("fock_dimension: negative N");
  if (n == 0) return 1;
  if (n > spec.max_n) throw GuardExceeded("fock_dimension: N exceeds max_n");
  if (multiset_orthogonality_check(spec, n)) {
    long long total = 0;
    for (const Partition& lambda : partitions_of(n, spec.modes))
      total += assignment_count(lambda, spec.modes) *
               static_cast<long long>(d_lambda(spec, lambda));
    return total;
  }
  long long words = 1;
  for (int k = 0; k < n; ++k) {
    words *= spec.modes;
    if (words * words > kGramEntryGuard)
      throw GuardExceeded("fock_dimension: full-basis Gram exceeds the entry guard");
  }
  return rank(gram_matrix(spec, full_basis(spec.modes, n)));
}

/// Kernel of the lambda block mapped back to state combinations: each returned
/// state has zero norm and zero overlap with the whole block.
inline std::vector<FockState> null_states(const AlgebraSpec& spec, const Partition& lambda) {
  std::vector<int> modes(static_cast<std::size_t>(lambda.width()));
  std::iota(modes.begin(), modes.end(), 1);
  if (lambda.width() > spec.modes)
    throw std::invalid_argument("null_states: partition wider than the mode count");
  if (lambda.weight() > spec.max_n) throw GuardExceeded("null_states: |lambda| exceeds max_n");
  if (lambda.weight() == 0) return {};
  const MonomialBasis basis = multiset_basis(lambda, modes);
  std::vector<FockState> out;
  for (const auto& v : null_basis(gram_matrix(spec, basis))) {
    FockState s;
    for (std::size_t k = 0; k < basis.size(); ++k) s.add(basis[k], v[k]);
    out.push_back(std::move(s));
  }
  return out;
}

/// d_n against an explicit reference word w: rank of the M x M Gram of
/// {a†_k w |0>}. The default reference word is one particle in each of modes
/// 1..n-1; invariance under other choices is a checked property.
inline int available_dim_ref(const AlgebraSpec& spec, const Monomial& reference) {
  if (static_cast<int>(reference.size()) + 1 > spec.max_n)
    throw GuardExceeded("available_dim: n exceeds max_n");
  MonomialBasis basis;
  basis.reserve(static_cast<std::size_t>(spec.modes));
  for (int k = 1; k <= spec.modes; ++k) {
    Monomial w;
    w.reserve(reference.size() + 1);
    w.push_back(k);
    w.insert(w.end(), reference.begin(), reference.end());
    basis.push_back(std::move(w));
  }
  return rank(gram_matrix(spec, basis));
}

/// Available one-particle Fock-subspace dimension after fixing n-1 particles.
inline int available_dim(const AlgebraSpec& spec, int n) {
  if (n < 1) throw std::invalid_argument("available_dim: n must be >= 1");
  if (n - 1 > spec.modes)
    throw std::invalid_argument("available_dim: no distinct reference word of length n-1");
  Monomial reference(static_cast<std::size_t>(n) - 1);
  std::iota(reference.begin(), reference.end(), 1);
  return available_dim_ref(spec, reference);
}

/// Extended exclusion-statistics parameter g_{n -> n+k} = (d_n - d_{n+k}) / k.
struct HaldaneRecord {
  int n = 0;
  int k = 0;
  int d_n = 0;
  int d_nk = 0;
  Rational g;
};

inline HaldaneRecord haldane_g(const AlgebraSpec& spec, int n, int k) {
  if (n < 1 || k < 1) throw std::invalid_argument("haldane_g: n and k must be >= 1");
  HaldaneRecord rec;
  rec.n = n;
  rec.k = k;
  rec.d_n = available_dim(spec, n);
  rec.d_nk = available_dim(spec, n + k);
  rec.g = Rational(rec.d_n - rec.d_nk) / Rational(k);
  return rec;
}

}  // namespace parafock
