#pragma once

// Test-only brute-force realization of para-operators of order p as sums of p
// ordinary Bose/Fermi copies on an explicit multi-copy Fock space:
//
//   A_i = (1/sqrt p) sum_alpha b_{i,alpha}
//
// with canonical (anti)commutators inside a copy and the opposite relative
// statistics between copies (para-Bose: copies anticommute; para-Fermi: copies
// commute). Scalar products are evaluated by direct Wick-style contraction of
// the copy operators, with no use of the engine's rewrite recursion, so Gram
// matrices computed here are an independent oracle for the green presets.

#include <utility>
#include <vector>

#include "parafock/gram.hpp"
#include "parafock/matrix.hpp"
#include "parafock/rational.hpp"

namespace green_oracle {

using parafock::BigInt;
using parafock::Monomial;
using parafock::Rational;
using parafock::RationalMatrix;

enum class Statistics { ParaBose, ParaFermi };

using CopyOp = std::pair<int, int>;  // (mode, copy)

/// Exchange sign when moving b_x through b†_y (or b through b, b† through b†)
/// for distinct operators: same copy follows the base statistics, different
/// copies the opposite one.
inline int exchange_sign(Statistics kind, const CopyOp& x, const CopyOp& y) {
  const bool same_copy = x.second == y.second;
  if (kind == Statistics::ParaBose) return same_copy ? 1 : -1;
  return same_copy ? -1 : 1;
}

/// <0| b_{ann[0]} ... b_{ann.back()} b†_{cre[0]} ... b†_{cre.back()} |0> by
/// contracting the innermost annihilator against the creation word.
inline BigInt contract(Statistics kind, std::vector<CopyOp> ann, std::vector<CopyOp> cre) {
  if (ann.empty()) return cre.empty() ? BigInt(1) : BigInt(0);
  const CopyOp a = ann.back();
  ann.pop_back();
  BigInt total = 0;
  int sign = 1;
  for (std::size_t k = 0; k < cre.size(); ++k) {
    if (cre[k] == a) {
      std::vector<CopyOp> rest = cre;
      rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(k));
      total += BigInt(sign) * contract(kind, ann, rest);
    }
    sign *= exchange_sign(kind, a, cre[k]);
  }
  return total;
}

/// <u|v> for the normalized para-operators: sum over copy assignments of both
/// words, scaled by p^{-N}.
inline Rational scalar_product(Statistics kind, int p, const Monomial& u, const Monomial& v) {
  if (u.size() != v.size()) {
    // different particle numbers never overlap on the explicit space
    return Rational(0);
  }
  const int n = static_cast<int>(u.size());
  BigInt total = 0;
  std::vector<int> assign_u(static_cast<std::size_t>(n), 1);
  std::vector<int> assign_v(static_cast<std::size_t>(n), 1);
  auto for_each_assignment = [&](std::vector<int>& assign, auto&& body) {
    while (true) {
      body();
      int pos = n - 1;
      while (pos >= 0 && assign[static_cast<std::size_t>(pos)] == p) {
        assign[static_cast<std::size_t>(pos)] = 1;
        --pos;
      }
      if (pos < 0) break;
      ++assign[static_cast<std::size_t>(pos)];
    }
  };
  if (n == 0) return Rational(1);
  for_each_assignment(assign_u, [&] {
    for_each_assignment(assign_v, [&] {
      // bra word (a†_{u_1}..a†_{u_N}|0>)† = <0| b_{u_N} .. b_{u_1}
      std::vector<CopyOp> ann;
      for (int k = n - 1; k >= 0; --k)
        ann.emplace_back(u[static_cast<std::size_t>(k)], assign_u[static_cast<std::size_t>(k)]);
      std::vector<CopyOp> cre;
      for (int k = 0; k < n; ++k)
        cre.emplace_back(v[static_cast<std::size_t>(k)], assign_v[static_cast<std::size_t>(k)]);
      total += contract(kind, std::move(ann), std::move(cre));
    });
  });
  BigInt scale = 1;
  for (int k = 0; k < n; ++k) scale *= p;
  return Rational(total, scale);
}

inline RationalMatrix gram(Statistics kind, int p, const parafock::MonomialBasis& basis) {
  const int n = static_cast<int>(basis.size());
  RationalMatrix g(n, n);
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c)
      g.at(r, c) = scalar_product(kind, p, basis[static_cast<std::size_t>(r)],
                                  basis[static_cast<std::size_t>(c)]);
  return g;
}

}  // namespace green_oracle
