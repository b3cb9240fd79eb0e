#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "parafock/level_fn.hpp"
#include "parafock/matrix.hpp"
#include "parafock/rational.hpp"

namespace parafock {

/// A parameterized oscillator algebra given as the normal-ordered rewrite rule
///
///   a_i a†_j = f(N) δ_ij + q_ij h(N) a†_j a_i + y_ij N_ij + z_ij N_ji
///
/// acting on Fock states over `modes` modes, with an optional Z2 grade per
/// mode. Together with a_i|0> = 0 and <0|0> = 1 this fixes every scalar
/// product in the representation.
struct AlgebraSpec {
  int modes = 0;
  std::vector<int> grades;  // 0 (bosonic) or 1 (fermionic) per mode
  LevelFn f = LevelFn::one();  // diagonal coefficient
  LevelFn h = LevelFn::one();  // scale of the exchange term
  RationalMatrix q;
  RationalMatrix y;
  RationalMatrix z;
  int max_n = 6;  // particle-number guard; generic Gram is N!xN!

  bool graded() const {
    for (int g : grades)
      if (g != 0) return true;
    return false;
  }

  bool z_is_zero() const {
    for (int r = 0; r < modes; ++r)
      for (int c = 0; c < modes; ++c)
        if (!z.at(r, c).is_zero()) return false;
    return true;
  }

  void check_mode(int i) const {
    if (i < 1 || i > modes)
      throw std::invalid_argument("mode index " + std::to_string(i) +
                                  " out of range 1.." + std::to_string(modes));
  }

  int grade(int i) const {
    check_mode(i);
    return grades[static_cast<std::size_t>(i) - 1];
  }

  // Coefficient accessors with 1-based mode indices.
  const Rational& q_at(int i, int j) const { return q.at(i - 1, j - 1); }
  const Rational& y_at(int i, int j) const { return y.at(i - 1, j - 1); }
  const Rational& z_at(int i, int j) const { return z.at(i - 1, j - 1); }

  void validate() const {
    if (modes < 1) throw std::invalid_argument("AlgebraSpec: modes must be >= 1");
    if (max_n < 1) throw std::invalid_argument("AlgebraSpec: max_n must be >= 1");
    if (static_cast<int>(grades.size()) != modes)
      throw std::invalid_argument("AlgebraSpec: grades size != modes");
    for (int g : grades)
      if (g != 0 && g != 1) throw std::invalid_argument("AlgebraSpec: grades must be 0 or 1");
    for (const RationalMatrix* m : {&q, &y, &z})
      if (m->rows() != modes || m->cols() != modes)
        throw std::invalid_argument("AlgebraSpec: coefficient matrices must be modes x modes");
    for (int n = 0; n <= max_n; ++n) {
      (void)f(n);
      (void)h(n);
    }
  }
};

}  // namespace parafock
