#pragma once

#include <stdexcept>
#include <vector>

#include "parafock/fock.hpp"
#include "parafock/gram.hpp"
#include "parafock/presets.hpp"

namespace parafock {

/// One normal-ordered term: coeff * a†_{c_1}..a†_{c_k} a_{a_1}..a_{a_l}.
/// Annihilators act first, rightmost letter first.
struct OperatorTerm {
  Monomial creators;
  Monomial annihilators;
  Rational coeff;
};

/// Sum of normal-ordered terms over concrete mode indices (dummy sums already
/// expanded for the target M).
struct NormalOrderedOperator {
  std::vector<OperatorTerm> terms;
};

inline FockState apply_operator(const AlgebraSpec& spec, const NormalOrderedOperator& op,
                                const FockState& state) {
  FockState out;
  for (const OperatorTerm& term : op.terms) {
    if (term.coeff.is_zero()) continue;
    FockState s = state;
    for (auto it = term.annihilators.rbegin(); it != term.annihilators.rend() && !s.is_zero(); ++it)
      s = annihilate(spec, *it, s);
    if (s.is_zero()) continue;
    for (auto it = term.creators.rbegin(); it != term.creators.rend(); ++it)
      s = apply_creation(spec, s, *it);
    out += term.coeff * s;
  }
  return out;
}

namespace detail {

/// Second-order bilinear sum_l [Y_jl]† [Y_il] with Y_il = a_i a_l - c a_l a_i,
/// multiplied out into four normal-ordered terms per l and scaled by alpha.
inline void append_bilinear_order(NormalOrderedOperator& op, int modes, int i, int j,
                                  const Rational& c, const Rational& alpha) {
  for (int l = 1; l <= modes; ++l) {
    // [Y_jl]† = a†_l a†_j - c a†_j a†_l
    op.terms.push_back({{l, j}, {i, l}, alpha});
    op.terms.push_back({{l, j}, {l, i}, alpha * -c});
    op.terms.push_back({{j, l}, {i, l}, alpha * -c});
    op.terms.push_back({{j, l}, {l, i}, alpha * c * c});
  }
}

}  // namespace detail

/// The published normal-ordered expansion of the transition operator N_ij for
/// the given family, through second order (third where the family has one),
/// with dummy sums expanded to 1..M. Throws on parameter poles.
inline NormalOrderedOperator instantiate_expansion(const PresetId& kind,
                                                   const AlgebraSpec& spec, int i, int j) {
  using Kind = PresetId::Kind;
  spec.check_mode(i);
  spec.check_mode(j);
  NormalOrderedOperator op;
  op.terms.push_back({{j}, {i}, Rational(1)});
  const int modes = spec.modes;
  const Rational p(kind.p);

  switch (kind.kind) {
    case Kind::GreenParabose:
    case Kind::GreenParafermi: {
      if (kind.p == 1)
        throw std::invalid_argument("expansion: green coefficient has a pole at p=1");
      const Rational q(kind.kind == Kind::GreenParabose ? -1 : 1);
      const Rational alpha = p * p / (Rational(4) * (p - Rational(1)));
      const Rational c = q * (Rational(2) / p - Rational(1));
      detail::append_bilinear_order(op, modes, i, j, c, alpha);
      break;
    }
    case Kind::Govorkov: {
      const Rational lam(kind.sign);
      const Rational denom = p * p - lam * lam;
      if (denom.is_zero())
        throw std::invalid_argument("expansion: govorkov coefficient has a pole at p=1");
      const Rational alpha = p * p / denom;
      // Y_il = a_i a_l + (lambda/p) a_l a_i
      detail::append_bilinear_order(op, modes, i, j, -(lam / p), alpha);
      break;
    }
    case Kind::Quon: {
      const Rational q = kind.q_param;
      const Rational denom = Rational(1) - q * q;
      if (denom.is_zero())
        throw std::invalid_argument("expansion: quon coefficient has a pole at |q|=1");
      detail::append_bilinear_order(op, modes, i, j, q, Rational(1) / denom);
      break;
    }
    case Kind::PalevFermi:
    case Kind::PalevBose:
    case Kind::PalevFermiF:
    case Kind::PalevBoseF:
    case Kind::PalevSuper: {
      if (kind.p == 1)
        throw std::invalid_argument("expansion: palev coefficient has a pole at p=1");
      if ((kind.kind == Kind::PalevFermiF || kind.kind == Kind::PalevBoseF) &&
          kind.variant == PresetId::Variant::Step)
        throw std::invalid_argument("expansion: the step-function form has no published expansion");
      const bool graded = kind.kind == Kind::PalevSuper;
      const int sig_ij = graded ? (spec.grade(i) + spec.grade(j)) % 2 : 0;
      const Rational second = Rational(1) / (p - Rational(1));
      for (int l = 1; l <= modes; ++l) {
        Rational s = second;
        if (sig_ij == 1 && spec.grade(l) == 1) s = -s;
        op.terms.push_back({{l, j}, {i, l}, s});
      }
      if (kind.p > 2) {
        // For p = 2 the third-order term carries (p-2) in the denominator and
        // is absent from the algebra altogether.
        const Rational third = Rational(2) / ((p - Rational(1)) * (p - Rational(2)));
        for (int l1 = 1; l1 <= modes; ++l1) {
          for (int l2 = 1; l2 <= modes; ++l2) {
            Rational s = third;
            if (sig_ij == 1 && (spec.grade(l1) + spec.grade(l2)) % 2 == 1) s = -s;
            op.terms.push_back({{l2, l1, j}, {i, l1, l2}, s});
          }
        }
      }
      break;
    }
    case Kind::KleinMarshalek:
    case Kind::Okubo:
      throw std::invalid_argument("expansion: no published expansion for this preset");
  }
  return op;
}

/// True iff the expansion reproduces the transition action on every word of
/// length <= n_max over the spec's modes, as maps on the representation space:
/// the two actions may differ by a null state (they do for the Palev families,
/// where e.g. (a†_i)^2 |0> is null). The published expansions drop terms with
/// three or more annihilators, so they are exact only on these lengths.
inline bool verify_transition(const AlgebraSpec& spec, const NormalOrderedOperator& op,
                              int i, int j, int n_max) {
  if (n_max > 2)
    throw std::invalid_argument("verify_transition: published expansions are exact only for N <= 2");
  for (int n = 0; n <= n_max; ++n) {
    for (const Monomial& w : full_basis(spec.modes, n)) {
      const FockState state = FockState::of(w);
      FockState diff = apply_operator(spec, op, state);
      diff -= transition_apply(spec, i, j, state);
      if (diff.is_zero()) continue;
      if (!is_null_state(spec, diff)) return false;
    }
  }
  return true;
}

/// True iff [[a_i, a†_j]_q, a†_k] = x d_ij a†_k + y d_ik a†_j + z d_jk a†_i
/// holds as a state map on every word of length <= n_max and every index
/// triple. Requires the affine family f(n) = 1 + x n, h = 1 so that the
/// quadruple (x,y,z,q) is meaningful.
inline bool verify_triple_relation(const AlgebraSpec& spec, const Rational& x,
                                   const Rational& y, const Rational& z,
                                   const Rational& q, int n_max) {
  if (spec.f.kind() != LevelFn::Kind::Affine || spec.f.affine_a() != Rational(1) ||
      spec.f.affine_b() != x || spec.h != LevelFn::one())
    throw std::invalid_argument("verify_triple_relation: spec outside the affine f = 1 + x N family");
  if (n_max + 2 > spec.max_n)
    throw std::invalid_argument("verify_triple_relation: need n_max <= max_n - 2");

  auto q_bracket = [&](int i, int j, const FockState& s) {
    // [a_i, a†_j]_q = a_i a†_j - q a†_j a_i
    FockState lhs = annihilate(spec, i, apply_creation(spec, s, j));
    lhs -= q * apply_creation(spec, annihilate(spec, i, s), j);
    return lhs;
  };

  for (int n = 0; n <= n_max; ++n) {
    for (const Monomial& w : full_basis(spec.modes, n)) {
      const FockState state = FockState::of(w);
      for (int i = 1; i <= spec.modes; ++i) {
        for (int j = 1; j <= spec.modes; ++j) {
          for (int k = 1; k <= spec.modes; ++k) {
            FockState lhs = q_bracket(i, j, apply_creation(spec, state, k));
            lhs -= apply_creation(spec, q_bracket(i, j, state), k);
            FockState rhs;
            if (i == j) rhs += x * apply_creation(spec, state, k);
            if (i == k) rhs += y * apply_creation(spec, state, j);
            if (j == k) rhs += z * apply_creation(spec, state, i);
            if (lhs != rhs) return false;
          }
        }
      }
    }
  }
  return true;
}

}  // namespace parafock
