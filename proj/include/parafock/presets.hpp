#pragma once

#include <optional>
#include <stdexcept>
#include <string>

#include "parafock/algebra_spec.hpp"

namespace parafock {

/// Stable identifier for one of the shipped algebra families, plus its
/// parameters. Names double as the CLI vocabulary.
struct PresetId {
  enum class Kind {
    GreenParabose,   // f=1, q=-1, y=+2/p
    GreenParafermi,  // f=1, q=+1, y=-2/p
    Govorkov,        // f=1, q=0,  y=-lambda/p
    Quon,            // f=1, arbitrary rational q, y=z=0
    PalevFermi,      // f=1-N/p, q=-1, y=+1/p
    PalevBose,       // f=1-N/p, q=+1, y=-1/p
    PalevFermiF,     // f=h in {1-N/p, Theta(p-N)}, q=-1, y=z=0
    PalevBoseF,      // same with q=+1
    KleinMarshalek,  // f=1-N, no exchange
    PalevSuper,      // graded: q_IJ=(-1)^{s_I s_J}, y_IJ=-q_IJ/p
    Okubo,           // f=1-2N/p, q=-1, y=+2/p, z=-2/p
  };

  enum class Variant { Affine, Step };

  Kind kind = Kind::Quon;
  int p = 1;                           // order parameter of the para families
  Rational q_param;                    // quon deformation
  int sign = +1;                       // govorkov lambda
  Variant variant = Variant::Affine;   // level-function shape of the _f families
  int modes_bose = 0;                  // palev_super sector sizes
  int modes_fermi = 0;

  static PresetId green_parabose(int p) { return with_p(Kind::GreenParabose, p); }
  static PresetId green_parafermi(int p) { return with_p(Kind::GreenParafermi, p); }
  static PresetId govorkov(int p, int lambda_sign) {
    if (lambda_sign != 1 && lambda_sign != -1)
      throw std::invalid_argument("govorkov: sign must be +1 or -1");
    PresetId id = with_p(Kind::Govorkov, p);
    id.sign = lambda_sign;
    return id;
  }
  static PresetId quon(Rational q) {
    PresetId id;
    id.kind = Kind::Quon;
    id.q_param = std::move(q);
    return id;
  }
  static PresetId palev_fermi(int p) { return with_p(Kind::PalevFermi, p); }
  static PresetId palev_bose(int p) { return with_p(Kind::PalevBose, p); }
  static PresetId palev_fermi_f(int p, Variant v) {
    PresetId id = with_p(Kind::PalevFermiF, p);
    id.variant = v;
    return id;
  }
  static PresetId palev_bose_f(int p, Variant v) {
    PresetId id = with_p(Kind::PalevBoseF, p);
    id.variant = v;
    return id;
  }
  static PresetId klein_marshalek() {
    PresetId id;
    id.kind = Kind::KleinMarshalek;
    return id;
  }
  static PresetId palev_super(int modes_bose, int modes_fermi, int p) {
    if (modes_bose < 0 || modes_fermi < 0 || modes_bose + modes_fermi < 1)
      throw std::invalid_argument("palev_super: need at least one mode");
    PresetId id = with_p(Kind::PalevSuper, p);
    id.modes_bose = modes_bose;
    id.modes_fermi = modes_fermi;
    return id;
  }
  static PresetId okubo(int p) { return with_p(Kind::Okubo, p); }

  std::string name() const {
    switch (kind) {
      case Kind::GreenParabose: return "green-parabose(p=" + std::to_string(p) + ")";
      case Kind::GreenParafermi: return "green-parafermi(p=" + std::to_string(p) + ")";
      case Kind::Govorkov:
        return "govorkov(p=" + std::to_string(p) + ",sign=" + (sign > 0 ? "+1" : "-1") + ")";
      case Kind::Quon: return "quon(q=" + q_param.str() + ")";
      case Kind::PalevFermi: return "palev-fermi(p=" + std::to_string(p) + ")";
      case Kind::PalevBose: return "palev-bose(p=" + std::to_string(p) + ")";
      case Kind::PalevFermiF:
        return "palev-fermi-f(p=" + std::to_string(p) + "," + variant_name() + ")";
      case Kind::PalevBoseF:
        return "palev-bose-f(p=" + std::to_string(p) + "," + variant_name() + ")";
      case Kind::KleinMarshalek: return "klein-marshalek";
      case Kind::PalevSuper:
        return "palev-super(mb=" + std::to_string(modes_bose) +
               ",mf=" + std::to_string(modes_fermi) + ",p=" + std::to_string(p) + ")";
      case Kind::Okubo: return "okubo(p=" + std::to_string(p) + ")";
    }
    return "?";
  }

  std::string variant_name() const {
    return variant == Variant::Affine ? "affine" : "step";
  }

 private:
  static PresetId with_p(Kind kind, int p) {
    if (p < 1) throw std::invalid_argument("preset: p must be a positive integer");
    PresetId id;
    id.kind = kind;
    id.p = p;
    return id;
  }
};

/// The (x, y, z, q) constants of the triple relation
/// [[a_i,a†_j]_q, a†_k] = x d_ij a†_k + y d_ik a†_j + z d_jk a†_i
/// satisfied by a preset, when it lies in the scalar affine family.
struct TripleParams {
  Rational x;
  Rational y;
  Rational z;
  Rational q;
};

inline std::optional<TripleParams> triple_params(const PresetId& id) {
  using Kind = PresetId::Kind;
  const Rational inv_p(1, id.p);
  switch (id.kind) {
    case Kind::GreenParabose:
      return TripleParams{Rational(0), Rational(2) * inv_p, Rational(0), Rational(-1)};
    case Kind::GreenParafermi:
      return TripleParams{Rational(0), Rational(-2) * inv_p, Rational(0), Rational(1)};
    case Kind::Govorkov:
      return TripleParams{Rational(0), Rational(-id.sign) * inv_p, Rational(0), Rational(0)};
    case Kind::Quon:
      return TripleParams{Rational(0), Rational(0), Rational(0), id.q_param};
    case Kind::PalevFermi:
      return TripleParams{-inv_p, inv_p, Rational(0), Rational(-1)};
    case Kind::PalevBose:
      return TripleParams{-inv_p, -inv_p, Rational(0), Rational(1)};
    case Kind::KleinMarshalek:
      return TripleParams{Rational(-1), Rational(0), Rational(0), Rational(0)};
    case Kind::Okubo:
      return TripleParams{Rational(-2) * inv_p, Rational(2) * inv_p, Rational(-2) * inv_p,
                          Rational(-1)};
    case Kind::PalevFermiF:
    case Kind::PalevBoseF:
    case Kind::PalevSuper:
      return std::nullopt;  // f(N)-scaled exchange or graded: no scalar quadruple
  }
  return std::nullopt;
}

/// Whether instantiate_expansion has a published normal-ordered N_ij form for
/// this preset at its parameters.
inline bool has_published_expansion(const PresetId& id) {
  using Kind = PresetId::Kind;
  switch (id.kind) {
    case Kind::Quon:
      return abs(id.q_param) != Rational(1);
    case Kind::GreenParabose:
    case Kind::GreenParafermi:
    case Kind::Govorkov:
    case Kind::PalevFermi:
    case Kind::PalevBose:
    case Kind::PalevSuper:
      return id.p > 1;
    case Kind::PalevFermiF:
    case Kind::PalevBoseF:
      return id.p > 1 && id.variant == PresetId::Variant::Affine;
    case Kind::KleinMarshalek:
    case Kind::Okubo:
      return false;
  }
  return false;
}

/// Instantiate the algebra for M modes. Palev families are stored after the
/// (a, a†) -> (sqrt(p) a, sqrt(p) a†) rescaling, so a_i a†_j |0> = delta_ij |0>
/// holds for every preset.
inline AlgebraSpec build(const PresetId& id, int modes, int max_n = 6) {
  using Kind = PresetId::Kind;
  if (modes < 1) throw std::invalid_argument("build: modes must be >= 1");
  if (id.kind == Kind::PalevSuper && modes != id.modes_bose + id.modes_fermi)
    throw std::invalid_argument("build: palev_super needs modes == mb + mf");

  AlgebraSpec spec;
  spec.modes = modes;
  spec.grades.assign(static_cast<std::size_t>(modes), 0);
  spec.max_n = max_n;
  spec.q = RationalMatrix(modes, modes);
  spec.y = RationalMatrix(modes, modes);
  spec.z = RationalMatrix(modes, modes);

  const Rational inv_p(1, id.p);
  auto fill = [&](RationalMatrix& m, const Rational& v) {
    m = RationalMatrix::constant(modes, modes, v);
  };

  switch (id.kind) {
    case Kind::GreenParabose:
      fill(spec.q, Rational(-1));
      fill(spec.y, Rational(2) * inv_p);
      break;
    case Kind::GreenParafermi:
      fill(spec.q, Rational(1));
      fill(spec.y, Rational(-2) * inv_p);
      break;
    case Kind::Govorkov:
      fill(spec.y, Rational(-id.sign) * inv_p);
      break;
    case Kind::Quon:
      fill(spec.q, id.q_param);
      break;
    case Kind::PalevFermi:
      spec.f = LevelFn::affine(Rational(1), -inv_p);
      fill(spec.q, Rational(-1));
      fill(spec.y, inv_p);
      break;
    case Kind::PalevBose:
      spec.f = LevelFn::affine(Rational(1), -inv_p);
      fill(spec.q, Rational(1));
      fill(spec.y, -inv_p);
      break;
    case Kind::PalevFermiF:
    case Kind::PalevBoseF:
      spec.f = id.variant == PresetId::Variant::Affine
                   ? LevelFn::affine(Rational(1), -inv_p)
                   : LevelFn::step(id.p);
      spec.h = spec.f;
      fill(spec.q, Rational(id.kind == Kind::PalevFermiF ? -1 : 1));
      break;
    case Kind::KleinMarshalek:
      spec.f = LevelFn::affine(Rational(1), Rational(-1));
      break;
    case Kind::PalevSuper: {
      spec.f = LevelFn::affine(Rational(1), -inv_p);
      for (int i = id.modes_bose; i < modes; ++i) spec.grades[static_cast<std::size_t>(i)] = 1;
      for (int r = 0; r < modes; ++r) {
        for (int c = 0; c < modes; ++c) {
          const int ss = spec.grades[static_cast<std::size_t>(r)] *
                         spec.grades[static_cast<std::size_t>(c)];
          const Rational qs(ss % 2 == 0 ? 1 : -1);
          spec.q.at(r, c) = qs;
          spec.y.at(r, c) = -qs * inv_p;
        }
      }
      break;
    }
    case Kind::Okubo:
      spec.f = LevelFn::affine(Rational(1), Rational(-2) * inv_p);
      fill(spec.q, Rational(-1));
      fill(spec.y, Rational(2) * inv_p);
      fill(spec.z, Rational(-2) * inv_p);
      break;
  }
  spec.validate();
  return spec;
}

}  // namespace parafock
