#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <functional>

#include "parafock/presets.hpp"
#include "parafock/statistics.hpp"

using namespace parafock;

namespace {

long long binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  long long r = 1;
  for (int t = 0; t < k; ++t) r = r * (n - t) / (t + 1);
  return r;
}

}  // namespace

TEST_CASE("d_lambda_examples") {
  for (const auto& id : {PresetId::palev_fermi(2), PresetId::quon(Rational(1, 2)),
                         PresetId::green_parabose(2), PresetId::okubo(2)}) {
    CHECK(d_lambda(build(id, 3), Partition({1})) == 1);
  }
  CHECK(d_lambda(build(PresetId::palev_fermi(2), 3), Partition({2})) == 0);
  CHECK(d_lambda(build(PresetId::palev_fermi(3), 3), Partition({2})) == 0);
  CHECK(d_lambda(build(PresetId::quon(Rational(1, 2)), 3), Partition({1, 1})) == 2);
  CHECK(d_lambda(build(PresetId::quon(Rational(1, 2)), 3), Partition{}) == 1);

  CHECK_THROWS_AS(d_lambda(build(PresetId::quon(Rational(0)), 2), Partition({1, 1, 1})),
                  std::invalid_argument);
  CHECK_THROWS_AS(d_lambda(build(PresetId::quon(Rational(0)), 2, 2), Partition({2, 1})),
                  GuardExceeded);
}

TEST_CASE("d_lambda_index_assignment_independence") {
  // Consequence (i): ranks depend on the multiplicity pattern only
  const std::vector<PresetId> ids = {
      PresetId::green_parabose(2), PresetId::green_parafermi(2), PresetId::govorkov(2, +1),
      PresetId::quon(Rational(1, 2)), PresetId::palev_fermi(2), PresetId::palev_bose(2),
      PresetId::klein_marshalek(), PresetId::okubo(2)};
  for (const auto& id : ids) {
    const auto spec = build(id, 4);
    for (int n = 1; n <= 4; ++n) {
      for (const Partition& lambda : partitions_of(n, 4)) {
        const int k = lambda.width();
        std::vector<int> forward(static_cast<std::size_t>(k));
        std::iota(forward.begin(), forward.end(), 1);
        std::vector<int> shifted(static_cast<std::size_t>(k));
        for (int t = 0; t < k; ++t) shifted[static_cast<std::size_t>(t)] = 4 - t;
        INFO(id.name() << " lambda=" << lambda.str());
        CHECK(d_lambda_assigned(spec, lambda, forward) ==
              d_lambda_assigned(spec, lambda, shifted));
      }
    }
  }
}

TEST_CASE("fock_dimension_paper_tables") {
  // palev_fermi(p=2), M=4: binomial counting cut off at p
  const auto pf = build(PresetId::palev_fermi(2), 4);
  CHECK(fock_dimension(pf, 0) == 1);
  CHECK(fock_dimension(pf, 1) == 4);
  CHECK(fock_dimension(pf, 2) == 6);
  CHECK(fock_dimension(pf, 3) == 0);
  CHECK(fock_dimension(pf, 4) == 0);

  // palev_bose(p=2), M=3
  const auto pb = build(PresetId::palev_bose(2), 3);
  CHECK(fock_dimension(pb, 1) == 3);
  CHECK(fock_dimension(pb, 2) == 6);
  CHECK(fock_dimension(pb, 3) == 0);

  // klein_marshalek, M=5: only one-particle states
  const auto km = build(PresetId::klein_marshalek(), 5);
  CHECK(fock_dimension(km, 1) == 5);
  CHECK(fock_dimension(km, 2) == 0);

  // quon(0): all words independent
  const auto q0 = build(PresetId::quon(Rational(0)), 2);
  for (int n = 1; n <= 3; ++n) CHECK(fock_dimension(q0, n) == 1LL << n);
}

TEST_CASE("fock_dimension_full_basis_fallback_for_okubo") {
  const auto ok = build(PresetId::okubo(2), 2);
  CHECK_FALSE(multiset_orthogonality_check(ok, 2));
  const long long d2 = fock_dimension(ok, 2);
  CHECK(d2 == rank(gram_matrix(ok, full_basis(2, 2))));
  CHECK(d2 >= 0);
}

TEST_CASE("fermi_bose_limits_large_p") {
  const auto pf = build(PresetId::palev_fermi(4), 4);
  for (int n = 0; n <= 4; ++n) CHECK(fock_dimension(pf, n) == binomial(4, n));
  const auto pb = build(PresetId::palev_bose(4), 3);
  for (int n = 0; n <= 4; ++n) CHECK(fock_dimension(pb, n) == binomial(3 + n - 1, n));
}

TEST_CASE("green_p1_collapse_to_bose_fermi") {
  const auto bose = build(PresetId::green_parabose(1), 3);
  for (int n = 0; n <= 4; ++n) CHECK(fock_dimension(bose, n) == binomial(3 + n - 1, n));
  const auto fermi = build(PresetId::green_parafermi(1), 3);
  for (int n = 0; n <= 4; ++n) CHECK(fock_dimension(fermi, n) == binomial(3, n));
}

TEST_CASE("palev_variants_same_statistics_different_grams") {
  using V = PresetId::Variant;
  const auto base = build(PresetId::palev_fermi(2), 4);
  const auto affine = build(PresetId::palev_fermi_f(2, V::Affine), 4);
  const auto step = build(PresetId::palev_fermi_f(2, V::Step), 4);
  for (int n = 1; n <= 4; ++n) {
    for (const Partition& lambda : partitions_of(n, 4)) {
      INFO("lambda=" << lambda.str());
      const int d = d_lambda(base, lambda);
      CHECK(d == d_lambda(affine, lambda));
      CHECK(d == d_lambda(step, lambda));
    }
  }
  // entrywise the generic matrices differ (step diagonal is 1, base is 1/2)
  const auto gb = gram_generic(base, {1, 2});
  const auto gs = gram_generic(step, {1, 2});
  CHECK(gb != gs);
}

TEST_CASE("monotone_null_boundary_for_palev") {
  for (const auto& id : {PresetId::palev_fermi(2), PresetId::palev_bose(2),
                         PresetId::palev_fermi_f(2, PresetId::Variant::Step)}) {
    const auto spec = build(id, 3);
    for (int n = 1; n <= 4; ++n) {
      for (const Partition& lambda : partitions_of(n, 3)) {
        const int d = d_lambda(spec, lambda);
        INFO(id.name() << " lambda=" << lambda.str());
        if (d > 0) CHECK(lambda.weight() <= 2);
        if (lambda.weight() == 3) CHECK(d == 0);
      }
    }
  }
}

TEST_CASE("null_states_examples") {
  CHECK(null_states(build(PresetId::quon(Rational(1, 2)), 2), Partition({1, 1})).empty());

  const auto pf = build(PresetId::palev_fermi(2), 2);
  const auto nulls = null_states(pf, Partition({1, 1}));
  REQUIRE(nulls.size() == 1);
  // proportional to a†_1 a†_2 |0> + a†_2 a†_1 |0>
  CHECK(nulls[0].coeff({1, 2}) == nulls[0].coeff({2, 1}));
  CHECK_FALSE(nulls[0].coeff({1, 2}).is_zero());
  CHECK(is_null_state(pf, nulls[0]));

  // klein_marshalek: the whole 2-particle block is null
  const auto km = build(PresetId::palev_bose(1), 2);
  CHECK(null_states(km, Partition({1, 1})).size() == 2);

  // palev_fermi(p=2): the entire 3-particle generic block is null
  const auto pf3 = build(PresetId::palev_fermi(2), 3);
  CHECK(null_states(pf3, Partition({1, 1, 1})).size() == 6);
  CHECK(rank(gram_matrix(pf3, multiset_basis(Partition({1, 1, 1}), {1, 2, 3}))) == 0);

  // every returned state has zero overlap with its block
  const auto pb = build(PresetId::palev_bose(2), 3);
  for (const auto& s : null_states(pb, Partition({2, 1}))) CHECK(is_null_state(pb, s));
}

TEST_CASE("available_dim_and_haldane") {
  // n=1: the one-particle Gram is the identity
  for (const auto& id : {PresetId::quon(Rational(1, 2)), PresetId::okubo(2)})
    CHECK(available_dim(build(id, 3), 1) == 3);

  const auto pf = build(PresetId::palev_fermi(3), 5);
  CHECK(available_dim(pf, 2) == 4);  // M - n + 1
  const auto pb = build(PresetId::palev_bose(2), 4);
  CHECK(available_dim(pb, 2) == 4);  // M

  const auto rec = haldane_g(pf, 2, 2);
  CHECK(rec.d_n == 4);
  CHECK(rec.d_nk == 0);
  CHECK(rec.g == Rational(2));

  CHECK_THROWS_AS(available_dim(build(PresetId::quon(Rational(0)), 2), 4),
                  std::invalid_argument);  // no distinct reference word
  CHECK_THROWS_AS(haldane_g(pf, 0, 1), std::invalid_argument);
}

TEST_CASE("available_dim_reference_word_independence") {
  // permutation-invariant presets: any distinct reference modes give the same rank
  const std::vector<PresetId> ids = {PresetId::green_parabose(2), PresetId::palev_fermi(2),
                                     PresetId::palev_bose(2), PresetId::quon(Rational(1, 2))};
  for (const auto& id : ids) {
    const auto spec = build(id, 4);
    for (int n = 2; n <= 3; ++n) {
      const int expected = available_dim(spec, n);
      // all ordered choices of n-1 distinct modes out of 4
      std::vector<int> modes = {1, 2, 3, 4};
      std::vector<int> pick(static_cast<std::size_t>(n) - 1);
      std::function<void(int)> rec = [&](int pos) {
        if (pos == n - 1) {
          Monomial ref(pick.begin(), pick.end());
          INFO(id.name() << " n=" << n);
          CHECK(available_dim_ref(spec, ref) == expected);
          return;
        }
        for (int m : modes) {
          if (std::find(pick.begin(), pick.begin() + pos, m) != pick.begin() + pos) continue;
          pick[static_cast<std::size_t>(pos)] = m;
          rec(pos + 1);
        }
      };
      rec(0);
    }
  }
}
