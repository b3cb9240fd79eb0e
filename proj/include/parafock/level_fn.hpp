#pragma once

#include <stdexcept>
#include <vector>

#include "parafock/rational.hpp"

namespace parafock {

/// Level function: a total map from the particle number n (a nonnegative
/// integer) to a rational coefficient. Three shapes cover every algebra in
/// scope: affine n -> a + b*n, the cutoff step n -> [n < p], and products.
class LevelFn {
 public:
  enum class Kind { Affine, Step, Product };

  static LevelFn affine(Rational a, Rational b) {
    LevelFn f;
    f.kind_ = Kind::Affine;
    f.a_ = std::move(a);
    f.b_ = std::move(b);
    return f;
  }

  static LevelFn one() { return affine(Rational(1), Rational(0)); }

  /// Theta(p - n): 1 while n < p, 0 from n = p on.
  static LevelFn step(int p) {
    if (p < 1) throw std::invalid_argument("LevelFn::step: p must be positive");
    LevelFn f;
    f.kind_ = Kind::Step;
    f.p_ = p;
    return f;
  }

  static LevelFn product(std::vector<LevelFn> factors) {
    LevelFn f;
    f.kind_ = Kind::Product;
    f.factors_ = std::move(factors);
    return f;
  }

  Kind kind() const { return kind_; }
  const Rational& affine_a() const { return a_; }
  const Rational& affine_b() const { return b_; }
  int step_p() const { return p_; }
  const std::vector<LevelFn>& factors() const { return factors_; }

  Rational operator()(int n) const {
    if (n < 0) throw std::invalid_argument("LevelFn: negative level");
    switch (kind_) {
      case Kind::Affine:
        return a_ + b_ * Rational(n);
      case Kind::Step:
        return Rational(n < p_ ? 1 : 0);
      case Kind::Product: {
        Rational r(1);
        for (const auto& f : factors_) r *= f(n);
        return r;
      }
    }
    throw std::logic_error("LevelFn: bad kind");
  }

  friend bool operator==(const LevelFn& x, const LevelFn& y) {
    if (x.kind_ != y.kind_) return false;
    switch (x.kind_) {
      case Kind::Affine:
        return x.a_ == y.a_ && x.b_ == y.b_;
      case Kind::Step:
        return x.p_ == y.p_;
      case Kind::Product:
        return x.factors_ == y.factors_;
    }
    return false;
  }
  friend bool operator!=(const LevelFn& x, const LevelFn& y) { return !(x == y); }

 private:
  LevelFn() = default;

  Kind kind_ = Kind::Affine;
  Rational a_;
  Rational b_;
  int p_ = 0;
  std::vector<LevelFn> factors_;
};

}  // namespace parafock
