// Copyright 2026 The Coopet Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "coopet/axioms.hpp"
#include "test_support.hpp"

using namespace coopet;
using coopet_test::glove_game;
using R = Rational;

namespace {

GroupIndex<R> su() { return uniform_shapley_index<R>(); }
GroupIndex<R> so() { return shapley_owen_index<R>(); }
GroupIndex<R> phi_sh() { return counterexample_index<R>(CounterexampleKind::inpcu); }

bool cell_holds(const IndependenceSuiteResult& result, const std::string& index,
                AxiomId axiom) {
  for (const auto& row : result.rows) {
    if (row.index_name != index) continue;
    for (const auto& cell : row.cells)
      if (cell.axiom == axiom) return cell.holds;
  }
  throw std::runtime_error("no such suite cell");
}

}  // namespace

TEST_CASE("group indices return zero on the empty coalition") {
  const Game<R> g = coopet_test::majority3<R>();
  for (const auto& index :
       {su(), so(), phi_sh(), counterexample_index<R>(CounterexampleKind::sb),
        counterexample_index<R>(CounterexampleKind::l_uniform),
        counterexample_index<R>(CounterexampleKind::l_permutation),
        counterexample_index<R>(CounterexampleKind::enpn_uniform),
        counterexample_index<R>(CounterexampleKind::enpn_permutation)}) {
    CHECK(index(g, Coalition::empty_set()) == R(0));
  }
}

TEST_CASE("SB check") {
  CHECK(check_sb(su(), PlayerSet::numbered(5)).holds);
  CHECK(check_sb(so(), PlayerSet::numbered(5)).holds);
  CHECK(check_sb(phi_sh(), PlayerSet::numbered(4)).holds);

  // Frozen value: n = 2, S = N gives 1/(2-2+1) = 1.
  const PlayerSet ps2 = PlayerSet::numbered(2);
  CHECK(su()(unanimity_game<R>(ps2, ps2.full()), ps2.full()) == R(1));

  const auto zero_verdict = check_sb(counterexample_index<R>(CounterexampleKind::sb),
                                     PlayerSet::numbered(3));
  CHECK(!zero_verdict.holds);
  CHECK(!zero_verdict.witness.empty());
}

TEST_CASE("EN check") {
  // u_C plus a dummy player: removing the dummy is neutral for the indices.
  const PlayerSet ps3 = PlayerSet::numbered(3);
  const Game<R> with_dummy =
      append_null_player(unanimity_game<R>(ps3, Coalition::of({0, 1})), "4");
  CHECK(check_en(su(), with_dummy, 3).holds);
  CHECK(check_en(su(), with_dummy, 2).holds);
  CHECK(check_en(so(), with_dummy, 3).holds);

  // Phi_Sh renormalizes exactly under null removal.
  Rng rng(404);
  for (int n = 3; n <= 5; ++n) {
    const Game<R> g = append_null_player(
        random_monotone_game<R>(PlayerSet::numbered(n - 1), rng.raw()), std::to_string(n));
    CHECK(check_en(phi_sh(), g, n - 1).holds);
    CHECK(check_en(su(), g, n - 1).holds);
    CHECK(check_en(so(), g, n - 1).holds);
    CHECK(check_en(banzhaf_index<R>(), g, n - 1).holds);
  }

  // The ENPN index is built to break EN: frozen witness at n = 4.
  const PlayerSet ps4 = PlayerSet::numbered(4);
  const Game<R> u12_4 = unanimity_game<R>(ps4, Coalition::of({0, 1}));
  const auto enpn = counterexample_index<R>(CounterexampleKind::enpn_uniform);
  CHECK(enpn(u12_4, Coalition::of({0, 1, 2})) == R(1, 3));
  const auto verdict = check_en(enpn, u12_4, 3);
  CHECK(!verdict.holds);

  CHECK_THROWS_AS(check_en(su(), unanimity_game<R>(ps3, ps3.full()), 0), input_error);
}

TEST_CASE("ICU check") {
  Rng rng(808);
  // Factor 2/3 at s = 3: C_SU contracts exactly.
  const Game<R> g = append_null_player(
      random_monotone_game<R>(PlayerSet::numbered(3), rng.raw()), "4");
  const Coalition S = Coalition::of({0, 1, 3});
  CHECK(check_icu(su(), g, S, 3).holds);

  // s = 2: the factor is zero, so the index itself must vanish there.
  const Coalition pair = Coalition::of({0, 3});
  CHECK(check_icu(su(), g, pair, 3).holds);
  CHECK(su()(g, pair) == R(0));

  // Phi_Sh does not contract: concrete witness on u_{12} + dummy.
  const PlayerSet ps3 = PlayerSet::numbered(3);
  const Game<R> u12 = unanimity_game<R>(ps3, Coalition::of({0, 1}));
  const auto verdict = check_icu(phi_sh(), u12, ps3.full(), 2);
  CHECK(!verdict.holds);

  CHECK_THROWS_AS(check_icu(su(), u12, Coalition::of({0, 1}), 0), input_error);
  CHECK_THROWS_AS(check_icu(su(), u12, Coalition::of({2}), 2), input_error);
}

TEST_CASE("ICP check") {
  Rng rng(909);
  const Game<R> g = append_null_player(
      random_monotone_game<R>(PlayerSet::numbered(3), rng.raw()), "4");
  CHECK(check_icp(so(), g, Coalition::of({0, 1, 3}), 3).holds);
  CHECK(check_icp(so(), g, Coalition::of({0, 3}), 3).holds);

  // C_SU fails ICP once the factors diverge (s = 4: 6/7 vs 5/6). Build a
  // game where the contracted value is non-zero: u_{123} plus a null 4th.
  const Game<R> u123 =
      append_null_player(unanimity_game<R>(PlayerSet::numbered(3), Coalition::full(3)), "4");
  const auto verdict = check_icp(su(), u123, Coalition::full(4), 3);
  CHECK(!verdict.holds);
  CHECK(check_icu(su(), u123, Coalition::full(4), 3).holds);
  // ... and symmetrically C_SO fails ICU there.
  CHECK(!check_icu(so(), u123, Coalition::full(4), 3).holds);
  CHECK(check_icp(so(), u123, Coalition::full(4), 3).holds);
}

TEST_CASE("linearity check") {
  for (int n = 2; n <= 4; ++n) {
    const PlayerSet ps = PlayerSet::numbered(n);
    CHECK(check_linearity(su(), ps, 24, 11 + n).holds);
    CHECK(check_linearity(so(), ps, 24, 22 + n).holds);
    CHECK(check_linearity(phi_sh(), ps, 24, 33 + n).holds);
    CHECK(check_linearity(counterexample_index<R>(CounterexampleKind::sb), ps, 12, 44).holds);
    CHECK(check_linearity(counterexample_index<R>(CounterexampleKind::enpn_uniform),
                          ps, 24, 55 + n)
              .holds);

    const auto broken =
        check_linearity(counterexample_index<R>(CounterexampleKind::l_uniform), ps, 24, 66);
    CHECK(!broken.holds);
    CHECK(!broken.witness.empty());
    CHECK(broken.seed == 66);
  }
}

TEST_CASE("xi^L values") {
  const auto xi_u = counterexample_index<R>(CounterexampleKind::l_uniform);
  const auto xi_p = counterexample_index<R>(CounterexampleKind::l_permutation);

  // n = 1 corner, as stated: every non-empty S scores 1, empty scores 0.
  const PlayerSet ps1 = PlayerSet::numbered(1);
  const Game<R> null1(ps1, {R(0), R(0)});
  const Game<R> unit1(ps1, {R(0), R(5)});
  CHECK(xi_u(null1, Coalition::of({0})) == R(1));
  CHECK(xi_u(unit1, Coalition::of({0})) == R(1));
  CHECK(xi_u(unit1, Coalition::empty_set()) == R(0));

  // No null players: the bargaining values.
  const Game<R> maj = coopet_test::majority3<R>();
  CHECK(xi_u(maj, Coalition::of({0})) == R(1, 3));
  CHECK(xi_u(maj, Coalition::of({0, 1})) == R(1, 2));
  CHECK(xi_p(maj, ps1.full()) == R(1, 3));

  // One null player (m = 1): z = 1, s = 2 collapses to zero.
  const Game<R> with_null = append_null_player(
      unanimity_game<R>(PlayerSet::numbered(2), Coalition::full(2)), "3");
  CHECK(xi_u(with_null, Coalition::of({0, 2})) == R(0));
  CHECK(xi_p(with_null, Coalition::of({0, 2})) == R(0));
  // z = 0, s = 2: 1/((n-m)-s+1) = 1/(2-2+1) = 1.
  CHECK(xi_u(with_null, Coalition::of({0, 1})) == R(1));
  // Null singleton scores 0, non-null singleton 1/(n-m).
  CHECK(xi_u(with_null, Coalition::of({2})) == R(0));
  CHECK(xi_u(with_null, Coalition::of({0})) == R(1, 2));
}

TEST_CASE("xi^ENPN values") {
  const auto enpn_u = counterexample_index<R>(CounterexampleKind::enpn_uniform);
  const auto enpn_p = counterexample_index<R>(CounterexampleKind::enpn_permutation);

  const PlayerSet ps4 = PlayerSet::numbered(4);
  const Game<R> u12 = unanimity_game<R>(ps4, Coalition::of({0, 1}));
  // r < s: the straddling formula.
  CHECK(enpn_u(u12, Coalition::of({0, 1, 2})) == R(1, 2) * R(2, 3));
  CHECK(enpn_p(u12, Coalition::of({0, 1, 2})) == R(1, 2) * R(2, 3));
  // S n C empty: zero.
  CHECK(enpn_u(u12, Coalition::of({2, 3})) == R(0));
  // S inside C: the bargaining value over the full player set.
  CHECK(enpn_u(u12, Coalition::of({0, 1})) == R(1, 3));
  // The grand-coalition clause.
  const Game<R> uN = unanimity_game<R>(ps4, ps4.full());
  CHECK(enpn_u(uN, Coalition::of({0, 2})) == R(1, 3));

  // Linear extension through the dividends: evaluate on a combination.
  const Game<R> combo = linear_combination(
      R(2), u12, R(-3), unanimity_game<R>(ps4, Coalition::of({0, 2, 3})));
  CHECK(enpn_u(combo, Coalition::of({0, 1, 2})) ==
        R(2) * enpn_u(u12, Coalition::of({0, 1, 2})) -
            R(3) * enpn_u(unanimity_game<R>(ps4, Coalition::of({0, 2, 3})),
                          Coalition::of({0, 1, 2})));
}

TEST_CASE("xi^ENPN passes the contraction axioms even with extra nulls") {
  // The regression the boundary convention exists for: removing one null
  // member while another null player stays outside S.
  const PlayerSet ps5 = PlayerSet::numbered(5);
  const Game<R> u123 = unanimity_game<R>(ps5, Coalition::of({0, 1, 2}));
  const auto enpn_u = counterexample_index<R>(CounterexampleKind::enpn_uniform);
  const Coalition S = Coalition::of({0, 1, 3});
  CHECK(enpn_u(u123, S) == R(2, 9));
  CHECK(check_icu(enpn_u, u123, S, 3).holds);

  const auto enpn_p = counterexample_index<R>(CounterexampleKind::enpn_permutation);
  CHECK(check_icp(enpn_p, u123, S, 3).holds);
}

TEST_CASE("xi^L passes ICU/EN on all-null coalitions") {
  // Two null players: S = {4, 5} is entirely null; the separation
  // probability reading gives 0, which is what ICU's zero factor needs.
  const PlayerSet ps3 = PlayerSet::numbered(3);
  Game<R> g = append_null_player(
      append_null_player(unanimity_game<R>(ps3, Coalition::full(3)), "4"), "5");
  const auto xi_u = counterexample_index<R>(CounterexampleKind::l_uniform);
  const auto xi_p = counterexample_index<R>(CounterexampleKind::l_permutation);
  const Coalition nulls = Coalition::of({3, 4});
  CHECK(xi_u(g, nulls) == R(0));
  CHECK(xi_p(g, nulls) == R(0));
  CHECK(check_icu(xi_u, g, nulls, 3).holds);
  CHECK(check_icu(xi_u, g, nulls, 4).holds);
  CHECK(check_icp(xi_p, g, nulls, 4).holds);
  CHECK(check_en(xi_u, g, 4).holds);
  CHECK(check_en(xi_p, g, 4).holds);
}

TEST_CASE("independence suite reproduces both theorems (reduced battery)") {
  IndependenceSuiteOptions opt;
  opt.max_n = 4;
  opt.randoms_per_n = 6;
  opt.linearity_trials = 18;
  opt.seed = 1234;

  const auto uniform = independence_suite<R>(SuiteVariant::uniform, opt);
  CHECK(uniform.pattern_ok);
  CHECK(cell_holds(uniform, "su", AxiomId::L));
  CHECK(cell_holds(uniform, "su", AxiomId::SB));
  CHECK(cell_holds(uniform, "su", AxiomId::EN));
  CHECK(cell_holds(uniform, "su", AxiomId::ICU));
  CHECK(!cell_holds(uniform, "xi-L-uniform", AxiomId::L));
  CHECK(cell_holds(uniform, "xi-L-uniform", AxiomId::ICU));
  CHECK(!cell_holds(uniform, "xi-SB-zero", AxiomId::SB));
  CHECK(!cell_holds(uniform, "phi-shapley", AxiomId::ICU));
  CHECK(cell_holds(uniform, "phi-shapley", AxiomId::EN));
  CHECK(!cell_holds(uniform, "xi-ENPN-uniform", AxiomId::EN));
  CHECK(cell_holds(uniform, "xi-ENPN-uniform", AxiomId::ICU));

  const auto perm = independence_suite<R>(SuiteVariant::permutation, opt);
  CHECK(perm.pattern_ok);
  CHECK(cell_holds(perm, "so", AxiomId::ICP));
  CHECK(!cell_holds(perm, "xi-L-perm", AxiomId::L));
  CHECK(cell_holds(perm, "xi-L-perm", AxiomId::ICP));
  CHECK(!cell_holds(perm, "phi-shapley", AxiomId::ICP));
  CHECK(!cell_holds(perm, "xi-ENPN-perm", AxiomId::EN));
}

TEST_CASE("uniqueness witness: the indices match their closed forms on the basis") {
  using K = UnanimityIndexKind;
  for (int n = 2; n <= 5; ++n) {
    const PlayerSet ps = PlayerSet::numbered(n);
    for (Mask c = 1; c < (Mask{1} << n); ++c) {
      const Game<R> u = unanimity_game<R>(ps, Coalition(c));
      for (Mask s = 1; s < (Mask{1} << n); ++s) {
        CHECK(su()(u, Coalition(s)) ==
              closed_form_unanimity<R>(K::uniform_shapley, n, Coalition(c), Coalition(s)));
        CHECK(so()(u, Coalition(s)) ==
              closed_form_unanimity<R>(K::shapley_owen, n, Coalition(c), Coalition(s)));
      }
    }
  }
}
