#pragma once

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <vector>

#include "parafock/matrix.hpp"
#include "parafock/rational.hpp"

namespace parafock {

namespace detail {

inline BigInt int_gcd(BigInt a, BigInt b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    BigInt t = a % b;
    a = b;
    b = t;
  }
  return a;
}

inline BigInt int_lcm(const BigInt& a, const BigInt& b) {
  if (a == 0 || b == 0) return 0;
  BigInt g = int_gcd(a, b);
  BigInt l = (a / g) * b;
  return l < 0 ? -l : l;
}

/// Scale each row to integers by its denominator lcm; rank is unchanged.
inline std::vector<std::vector<BigInt>> clear_row_denominators(const RationalMatrix& a) {
  std::vector<std::vector<BigInt>> m(static_cast<std::size_t>(a.rows()));
  for (int r = 0; r < a.rows(); ++r) {
    BigInt lcm = 1;
    for (int c = 0; c < a.cols(); ++c) lcm = int_lcm(lcm, a.at(r, c).denominator());
    auto& row = m[static_cast<std::size_t>(r)];
    row.resize(static_cast<std::size_t>(a.cols()));
    for (int c = 0; c < a.cols(); ++c) {
      const Rational& e = a.at(r, c);
      row[static_cast<std::size_t>(c)] = e.numerator() * (lcm / e.denominator());
    }
  }
  return m;
}

}  // namespace detail

/// Exact rank via fraction-free (Bareiss) elimination on the integer matrix
/// obtained by clearing row denominators. Pivot: first nonzero entry of the
/// current column, rows scanned top-down, so runs are reproducible.
inline int rank(const RationalMatrix& a) {
  if (a.rows() == 0 || a.cols() == 0) return 0;
  auto m = detail::clear_row_denominators(a);
  const int rows = a.rows();
  const int cols = a.cols();
  int r = 0;
  BigInt prev = 1;
  for (int c = 0; c < cols && r < rows; ++c) {
    int pr = -1;
    for (int k = r; k < rows; ++k) {
      if (m[k][c] != 0) {
        pr = k;
        break;
      }
    }
    if (pr < 0) continue;
    std::swap(m[r], m[pr]);
    for (int k = r + 1; k < rows; ++k) {
      for (int j = c + 1; j < cols; ++j) {
        BigInt num = m[r][c] * m[k][j] - m[k][c] * m[r][j];
        BigInt q, rem;
        boost::multiprecision::divide_qr(num, prev, q, rem);
        if (rem != 0) throw std::logic_error("Bareiss: inexact division");
        m[k][j] = q;
      }
      m[k][c] = 0;
    }
    prev = m[r][c];
    ++r;
  }
  return r;
}

/// Outcome of the positive-semidefiniteness check. INDEFINITE always carries a
/// witness w with w^T A w < 0 exactly; the witness is a primitive integer
/// vector with positive leading entry.
struct PsdVerdict {
  enum class Tag { PSD, INDEFINITE };

  Tag tag = Tag::PSD;
  std::optional<std::vector<Rational>> witness;
  Rational witness_value;  // w^T A w for the returned witness

  bool is_psd() const { return tag == Tag::PSD; }
};

namespace detail {

inline Rational quadratic_form(const RationalMatrix& a, const std::vector<Rational>& w) {
  Rational total(0);
  for (int r = 0; r < a.rows(); ++r) {
    if (w[static_cast<std::size_t>(r)].is_zero()) continue;
    Rational row(0);
    for (int c = 0; c < a.cols(); ++c)
      row += a.at(r, c) * w[static_cast<std::size_t>(c)];
    total += w[static_cast<std::size_t>(r)] * row;
  }
  return total;
}

/// Scale to a primitive integer vector whose first nonzero entry is positive.
inline void canonicalize_vector(std::vector<Rational>& w) {
  BigInt lcm = 1;
  for (const auto& e : w) lcm = int_lcm(lcm, e.denominator());
  BigInt gcd = 0;
  for (auto& e : w) {
    e *= Rational(lcm);
    gcd = int_gcd(gcd, e.numerator());
  }
  if (gcd == 0) return;
  int lead = 0;
  for (const auto& e : w) {
    if (!e.is_zero()) {
      lead = e.sign();
      break;
    }
  }
  if (lead < 0) gcd = -gcd;
  for (auto& e : w) e /= Rational(gcd);
}

struct Elimination {
  int pivot;                                  // original index
  Rational value;                             // pivot value at elimination time
  std::vector<std::pair<int, Rational>> row;  // remaining active entries of the pivot row
};

}  // namespace detail

/// LDL^T positivity check with symmetric pivoting on the largest remaining
/// diagonal entry (ties broken by smallest index). Elimination proceeds only
/// while that diagonal dominates every remaining off-diagonal, which is always
/// the case for PSD matrices; a violation certifies indefiniteness:
///   - a negative remaining diagonal d at r gives the witness e_r,
///   - an off-diagonal b at (r,c) with |b| > max diagonal gives t e_r + e_c,
///     sign(t) = -sign(b), covering the zero-diagonal block [[0,b],[b,d]].
/// Witnesses found inside the Schur complement are lifted back through the
/// eliminations and re-verified against the input before being returned.
inline PsdVerdict psd_check(const RationalMatrix& a) {
  if (!a.is_square()) throw std::invalid_argument("psd_check: non-square input");
  const int n = a.rows();

  RationalMatrix w = a;
  std::vector<int> active(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) active[static_cast<std::size_t>(i)] = i;
  std::vector<detail::Elimination> elims;

  auto finish_indefinite = [&](std::vector<Rational> wit) {
    // Lift through eliminations in reverse: completing the square, the pivot
    // coordinate is chosen to cancel its cross terms, leaving the remainder's
    // quadratic value unchanged.
    for (auto it = elims.rbegin(); it != elims.rend(); ++it) {
      Rational s(0);
      for (const auto& [j, v] : it->row) s += v * wit[static_cast<std::size_t>(j)];
      wit[static_cast<std::size_t>(it->pivot)] = -(s / it->value);
    }
    detail::canonicalize_vector(wit);
    PsdVerdict verdict;
    verdict.tag = PsdVerdict::Tag::INDEFINITE;
    verdict.witness_value = detail::quadratic_form(a, wit);
    verdict.witness = std::move(wit);
    if (verdict.witness_value.sign() >= 0)
      throw std::logic_error("psd_check: unsound witness");
    return verdict;
  };

  while (!active.empty()) {
    // Largest remaining diagonal and its holder; smallest remaining diagonal;
    // largest remaining off-diagonal magnitude.
    int best = active.front();
    int worst = active.front();
    for (int i : active) {
      if (w.at(i, i) > w.at(best, best)) best = i;
      if (w.at(i, i) < w.at(worst, worst)) worst = i;
    }
    if (w.at(worst, worst).sign() < 0) {
      std::vector<Rational> wit(static_cast<std::size_t>(n), Rational(0));
      wit[static_cast<std::size_t>(worst)] = Rational(1);
      return finish_indefinite(std::move(wit));
    }
    const Rational& dmax = w.at(best, best);
    int or_ = -1, oc = -1;
    Rational omax(0);
    for (std::size_t x = 0; x < active.size(); ++x) {
      for (std::size_t yx = x + 1; yx < active.size(); ++yx) {
        Rational mag = abs(w.at(active[x], active[yx]));
        if (mag > omax) {
          omax = mag;
          or_ = active[x];
          oc = active[yx];
        }
      }
    }
    if (or_ >= 0 && omax > dmax) {
      const Rational& b = w.at(or_, oc);
      std::vector<Rational> wit(static_cast<std::size_t>(n), Rational(0));
      wit[static_cast<std::size_t>(or_)] = Rational(b.sign() > 0 ? -1 : 1);
      wit[static_cast<std::size_t>(oc)] = Rational(1);
      return finish_indefinite(std::move(wit));
    }
    if (dmax.is_zero()) break;  // remainder is all zero: PSD with zero pivots

    detail::Elimination e;
    e.pivot = best;
    e.value = dmax;
    std::vector<int> next;
    next.reserve(active.size() - 1);
    for (int i : active) {
      if (i == best) continue;
      next.push_back(i);
      e.row.emplace_back(i, w.at(best, i));
    }
    for (std::size_t x = 0; x < next.size(); ++x) {
      for (std::size_t yx = x; yx < next.size(); ++yx) {
        const int i = next[x];
        const int j = next[yx];
        Rational upd = w.at(i, j) - w.at(best, i) * w.at(best, j) / e.value;
        w.at(i, j) = upd;
        if (i != j) w.at(j, i) = upd;
      }
    }
    elims.push_back(std::move(e));
    active = std::move(next);
  }

  return PsdVerdict{};
}

/// Basis of the exact kernel of A, from the reduced row echelon form; one
/// vector per free column, in column order. Every vector satisfies A v = 0.
inline std::vector<std::vector<Rational>> null_basis(const RationalMatrix& a) {
  const int rows = a.rows();
  const int cols = a.cols();
  RationalMatrix m = a;
  std::vector<int> pivot_col;
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int pr = -1;
    for (int k = r; k < rows; ++k) {
      if (!m.at(k, c).is_zero()) {
        pr = k;
        break;
      }
    }
    if (pr < 0) continue;
    for (int j = 0; j < cols; ++j) std::swap(m.at(r, j), m.at(pr, j));
    const Rational inv = Rational(1) / m.at(r, c);
    for (int j = c; j < cols; ++j) m.at(r, j) *= inv;
    for (int k = 0; k < rows; ++k) {
      if (k == r || m.at(k, c).is_zero()) continue;
      const Rational factor = m.at(k, c);
      for (int j = c; j < cols; ++j) m.at(k, j) -= factor * m.at(r, j);
    }
    pivot_col.push_back(c);
    ++r;
  }
  std::vector<std::vector<Rational>> basis;
  std::size_t next_pivot = 0;
  for (int c = 0; c < cols; ++c) {
    if (next_pivot < pivot_col.size() && pivot_col[next_pivot] == c) {
      ++next_pivot;
      continue;
    }
    std::vector<Rational> v(static_cast<std::size_t>(cols), Rational(0));
    v[static_cast<std::size_t>(c)] = Rational(1);
    for (std::size_t k = 0; k < pivot_col.size(); ++k) {
      v[static_cast<std::size_t>(pivot_col[k])] = -m.at(static_cast<int>(k), c);
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace parafock
