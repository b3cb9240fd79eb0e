#pragma once

#include <algorithm>
#include <set>
#include <utility>
#include <vector>

#include "parafock/errors.hpp"
#include "parafock/fock.hpp"
#include "parafock/linalg.hpp"
#include "parafock/matrix.hpp"
#include "parafock/permutation.hpp"

namespace parafock {

/// Ordered monomial family; canonical bases are lexicographically sorted and
/// duplicate-free.
using MonomialBasis = std::vector<Monomial>;

/// All length-n words over modes 1..M in lexicographic order.
inline MonomialBasis full_basis(int modes, int n) {
  MonomialBasis out;
  Monomial w(static_cast<std::size_t>(n), 1);
  if (n == 0) {
    out.push_back({});
    return out;
  }
  while (true) {
    out.push_back(w);
    int pos = n - 1;
    while (pos >= 0 && w[static_cast<std::size_t>(pos)] == modes) {
      w[static_cast<std::size_t>(pos)] = 1;
      --pos;
    }
    if (pos < 0) break;
    ++w[static_cast<std::size_t>(pos)];
  }
  return out;
}

/// Per-mode multiplicity vector of a word.
inline std::vector<int> multiplicity_vector(const Monomial& m, int modes) {
  std::vector<int> counts(static_cast<std::size_t>(modes), 0);
  for (int letter : m) ++counts[static_cast<std::size_t>(letter) - 1];
  return counts;
}

/// Matrix of scalar products over a basis. All n^2 entries are computed
/// independently and the result is checked for exact symmetry; a mismatch
/// throws SymmetryViolation with the offending pair.
inline RationalMatrix gram_matrix(const AlgebraSpec& spec, const MonomialBasis& basis) {
  const int n = static_cast<int>(basis.size());
  RationalMatrix g(n, n);
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c)
      g.at(r, c) = inner_product(spec, basis[static_cast<std::size_t>(r)],
                                 basis[static_cast<std::size_t>(c)]);
  for (int r = 0; r < n; ++r)
    for (int c = r + 1; c < n; ++c)
      if (g.at(r, c) != g.at(c, r))
        throw SymmetryViolation(r, c, g.at(r, c), g.at(c, r));
  return g;
}

/// Words a†_{i_pi(1)} ... a†_{i_pi(N)} |0> for all pi in lex one-line order.
inline MonomialBasis permutation_basis(const std::vector<int>& indices) {
  const int n = static_cast<int>(indices.size());
  MonomialBasis basis;
  for (const Perm& pi : all_permutations(n)) {
    Monomial w(static_cast<std::size_t>(n));
    for (int r = 0; r < n; ++r)
      w[static_cast<std::size_t>(r)] =
          indices[static_cast<std::size_t>(pi[static_cast<std::size_t>(r)]) - 1];
    basis.push_back(std::move(w));
  }
  return basis;
}

/// Generic N!xN! matrix over all permutations of N distinct indices.
inline RationalMatrix gram_generic(const AlgebraSpec& spec, const std::vector<int>& indices) {
  for (int i : indices) spec.check_mode(i);
  if (std::set<int>(indices.begin(), indices.end()).size() != indices.size())
    throw std::invalid_argument("gram_generic: duplicate indices");
  if (static_cast<int>(indices.size()) > spec.max_n)
    throw GuardExceeded("gram_generic: N exceeds max_n");
  return gram_matrix(spec, permutation_basis(indices));
}

/// <pi mu | pi nu> = <mu | nu> for the adjacent transpositions pi (hence all
/// of S_N), with rows/columns in the canonical permutation order.
inline bool left_invariance_check(const RationalMatrix& a, int n) {
  if (a.rows() != factorial(n) || a.cols() != factorial(n))
    throw std::invalid_argument("left_invariance_check: dimension is not N!");
  const auto perms = all_permutations(n);
  const PermIndex index(perms);
  for (int k = 1; k < n; ++k) {
    Perm t(static_cast<std::size_t>(n));
    std::iota(t.begin(), t.end(), 1);
    std::swap(t[static_cast<std::size_t>(k) - 1], t[static_cast<std::size_t>(k)]);
    for (std::size_t mu = 0; mu < perms.size(); ++mu) {
      const int tmu = index.at(compose(t, perms[mu]));
      for (std::size_t nu = 0; nu < perms.size(); ++nu) {
        const int tnu = index.at(compose(t, perms[nu]));
        if (a.at(tmu, tnu) != a.at(static_cast<int>(mu), static_cast<int>(nu)))
          return false;
      }
    }
  }
  return true;
}

/// c(pi) read off the identity row, plus whether sum_pi c(pi) R(pi) (right
/// regular representation) reconstructs the matrix exactly.
struct RegularDecomposition {
  std::vector<std::pair<Perm, Rational>> coefficients;  // lex permutation order
  bool residual = false;
};

inline RegularDecomposition regular_decompose(const RationalMatrix& a, int n) {
  if (a.rows() != factorial(n) || a.cols() != factorial(n))
    throw std::invalid_argument("regular_decompose: dimension is not N!");
  const auto perms = all_permutations(n);
  const PermIndex index(perms);
  RegularDecomposition out;
  out.coefficients.reserve(perms.size());
  for (std::size_t k = 0; k < perms.size(); ++k)
    out.coefficients.emplace_back(perms[k], a.at(0, static_cast<int>(k)));
  // Invariance makes A[mu,nu] = c(mu^{-1} nu); check the reconstruction.
  for (std::size_t mu = 0; mu < perms.size() && !out.residual; ++mu) {
    const Perm mu_inv = inverse(perms[mu]);
    for (std::size_t nu = 0; nu < perms.size(); ++nu) {
      const int key = index.at(compose(mu_inv, perms[nu]));
      if (a.at(static_cast<int>(mu), static_cast<int>(nu)) !=
          out.coefficients[static_cast<std::size_t>(key)].second) {
        out.residual = true;
        break;
      }
    }
  }
  return out;
}

/// A state is null when it has zero overlap with every word of its length:
/// it is quotiented away in the physical representation. Mixed-length states
/// are never null here.
inline bool is_null_state(const AlgebraSpec& spec, const FockState& s) {
  if (s.is_zero()) return true;
  const int n = particle_number(s);
  if (n < 0) return false;
  for (const Monomial& u : full_basis(spec.modes, n)) {
    Rational overlap(0);
    for (const auto& [m, c] : s.terms()) overlap += c * inner_product(spec, u, m);
    if (!overlap.is_zero()) return false;
  }
  return true;
}

/// True iff every pair of length-N words with different per-mode multiplicity
/// vectors has exactly zero scalar product. Exhaustive over the full M^N word
/// list; z = 0 algebras conserve mode numbers and pass by construction, the
/// peculiar z != 0 ones are expected to fail.
inline bool multiset_orthogonality_check(const AlgebraSpec& spec, int n) {
  if (n > spec.max_n) throw GuardExceeded("multiset_orthogonality_check: N exceeds max_n");
  const MonomialBasis words = full_basis(spec.modes, n);
  std::vector<std::vector<int>> mult;
  mult.reserve(words.size());
  for (const auto& w : words) mult.push_back(multiplicity_vector(w, spec.modes));
  for (std::size_t r = 0; r < words.size(); ++r) {
    for (std::size_t c = r + 1; c < words.size(); ++c) {
      if (mult[r] == mult[c]) continue;
      if (!inner_product(spec, words[r], words[c]).is_zero()) return false;
    }
  }
  return true;
}

}  // namespace parafock
