#pragma once

#include <map>
#include <string>
#include <vector>

#include "parafock/algebra_spec.hpp"
#include "parafock/errors.hpp"
#include "parafock/rational.hpp"

namespace parafock {

/// Creation-operator word: word[0] is the leftmost operator, i.e. the one
/// applied last. The empty word is the vacuum.
using Monomial = std::vector<int>;

inline std::string monomial_str(const Monomial& m) {
  if (m.empty()) return "|0>";
  std::string s;
  for (int i : m) {
    s += "a+";
    s += std::to_string(i);
    s += ' ';
  }
  s += "|0>";
  return s;
}

/// Finite rational-linear combination of monomials. Terms are kept in
/// lexicographic monomial order and zero coefficients are never stored, so
/// equal states compare equal structurally.
class FockState {
 public:
  FockState() = default;

  static FockState vacuum() { return of(Monomial{}); }

  static FockState of(Monomial m, Rational c = Rational(1)) {
    FockState s;
    s.add(std::move(m), std::move(c));
    return s;
  }

  void add(Monomial m, Rational c) {
    if (c.is_zero()) return;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
      terms_.emplace(std::move(m), std::move(c));
    } else {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  const std::map<Monomial, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  Rational coeff(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Rational(0) : it->second;
  }

  FockState& operator+=(const FockState& o) {
    for (const auto& [m, c] : o.terms_) add(m, c);
    return *this;
  }
  FockState& operator-=(const FockState& o) {
    for (const auto& [m, c] : o.terms_) add(m, -c);
    return *this;
  }
  FockState& operator*=(const Rational& r) {
    if (r.is_zero()) {
      terms_.clear();
      return *this;
    }
    for (auto& [m, c] : terms_) c *= r;
    return *this;
  }

  friend FockState operator+(FockState a, const FockState& b) { return a += b; }
  friend FockState operator-(FockState a, const FockState& b) { return a -= b; }
  friend FockState operator*(const Rational& r, FockState s) { return s *= r; }

  friend bool operator==(const FockState& a, const FockState& b) {
    return a.terms_ == b.terms_;
  }
  friend bool operator!=(const FockState& a, const FockState& b) { return !(a == b); }

 private:
  std::map<Monomial, Rational> terms_;
};

/// a†_i: prepend i to every word.
inline FockState apply_creation(const AlgebraSpec& spec, const FockState& state, int i) {
  spec.check_mode(i);
  FockState out;
  for (const auto& [m, c] : state.terms()) {
    Monomial w;
    w.reserve(m.size() + 1);
    w.push_back(i);
    w.insert(w.end(), m.begin(), m.end());
    out.add(std::move(w), c);
  }
  return out;
}

/// Transition number operator N_ij: on a word, replace each letter equal to i
/// by j in turn. Passing position r contributes the grade sign
/// (-1)^{(sigma_i+sigma_j) * sigma_{k_r}}; ungraded algebras never see a sign.
inline FockState transition_apply(const AlgebraSpec& spec, int i, int j,
                                  const FockState& state) {
  spec.check_mode(i);
  spec.check_mode(j);
  const bool odd_pair = ((spec.grade(i) + spec.grade(j)) % 2) != 0;
  FockState out;
  for (const auto& [m, c] : state.terms()) {
    Rational sign(1);
    for (std::size_t pos = 0; pos < m.size(); ++pos) {
      if (m[pos] == i) {
        Monomial w = m;
        w[pos] = j;
        out.add(std::move(w), sign * c);
      }
      if (odd_pair && spec.grade(m[pos]) == 1) sign = -sign;
    }
  }
  return out;
}

namespace detail {

inline FockState annihilate_word(const AlgebraSpec& spec, int i, const Monomial& word) {
  if (word.empty()) return FockState();  // a_i |0> = 0
  const int head = word.front();
  const Monomial rest(word.begin() + 1, word.end());
  const int n = static_cast<int>(rest.size());
  FockState out;
  if (head == i) {
    out.add(rest, spec.f(n));
  }
  const Rational& qc = spec.q_at(i, head);
  if (!qc.is_zero()) {
    const Rational scale = qc * spec.h(n);
    if (!scale.is_zero()) {
      FockState inner = annihilate_word(spec, i, rest);
      out += scale * apply_creation(spec, inner, head);
    }
  }
  const Rational& yc = spec.y_at(i, head);
  if (!yc.is_zero()) {
    out += yc * transition_apply(spec, i, head, FockState::of(rest));
  }
  const Rational& zc = spec.z_at(i, head);
  if (!zc.is_zero()) {
    out += zc * transition_apply(spec, head, i, FockState::of(rest));
  }
  return out;
}

}  // namespace detail

/// a_i, by the recursive normal-ordered rewrite. Each term loses exactly one
/// particle; the recursion consumes the leading creation operator.
inline FockState annihilate(const AlgebraSpec& spec, int i, const FockState& state) {
  spec.check_mode(i);
  FockState out;
  for (const auto& [m, c] : state.terms()) {
    if (static_cast<int>(m.size()) > spec.max_n) {
      throw GuardExceeded("annihilate: word length " + std::to_string(m.size()) +
                          " exceeds max_n " + std::to_string(spec.max_n));
    }
    out += c * detail::annihilate_word(spec, i, m);
  }
  return out;
}

/// <0| a_{u_N} ... a_{u_1} a†_{v_1} ... a†_{v_M'} |0>: apply u's letters as
/// annihilators onto |v> starting from u's leftmost letter (the innermost
/// annihilator), then read off the vacuum coefficient.
inline Rational inner_product(const AlgebraSpec& spec, const Monomial& u, const Monomial& v) {
  if (static_cast<int>(u.size()) > spec.max_n || static_cast<int>(v.size()) > spec.max_n) {
    throw GuardExceeded("inner_product: word length exceeds max_n " +
                        std::to_string(spec.max_n));
  }
  FockState state = FockState::of(v);
  for (int letter : u) {
    if (state.is_zero()) return Rational(0);
    state = annihilate(spec, letter, state);
  }
  return state.coeff(Monomial{});
}

/// Particle number of a state whose terms all share one length; -1 when mixed
/// or empty.
inline int particle_number(const FockState& s) {
  int n = -1;
  for (const auto& [m, c] : s.terms()) {
    (void)c;
    if (n < 0) {
      n = static_cast<int>(m.size());
    } else if (n != static_cast<int>(m.size())) {
      return -1;
    }
  }
  return n;
}

}  // namespace parafock
