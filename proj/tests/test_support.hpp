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
//
// Test-side oracles. These stay independent of the implementation paths they
// check: the attitude oracle evaluates the centred three-term definition
// (marginal minus p-expected block marginals), not the rearranged form the
// engine uses, and the coopetition oracle re-queries every weight per term.

#ifndef COOPET_TESTS_TEST_SUPPORT_HPP
#define COOPET_TESTS_TEST_SUPPORT_HPP

#include <vector>

#include "coopet/distributions.hpp"
#include "coopet/game.hpp"

namespace coopet_test {

using coopet::Coalition;
using coopet::ExternalFamily;
using coopet::Game;
using coopet::InternalFamily;
using coopet::PlayerSet;
using coopet::Rational;

/// Glove market oracle: v(S) = min(#left gloves in S, #right gloves in S).
template <class Num>
Game<Num> glove_game(const PlayerSet& ps, Coalition left) {
  const Coalition right = ps.full() - left;
  return coopet::make_game<Num>(
      ps,
      [&](Coalition S) {
        const int l = (S & left).size();
        const int r = (S & right).size();
        return coopet::num_traits<Num>::from_int(l < r ? l : r);
      },
      true);
}

/// The standard 3-player majority game: quota 2, unit weights.
template <class Num>
Game<Num> majority3() {
  const PlayerSet ps = PlayerSet::numbered(3);
  const Num one = coopet::num_traits<Num>::from_int(1);
  return coopet::weighted_majority_game<Num>(
      ps, coopet::num_traits<Num>::from_int(2), {one, one, one});
}

/// Attitude by the defining formula:
///   v'_S(T) - sum_pi p(pi) (v(S1 u T) + v(S2 u T) - 2 v(T)).
template <class Num>
Num oracle_attitude(const Game<Num>& g, Coalition S, Coalition T,
                    const InternalFamily<Num>& p) {
  Num acc = g.worth(S | T) - g.worth(T);
  coopet::for_each_two_partition(S, [&](const coopet::TwoPartition& pi) {
    acc -= p.weight(g.players(), S, pi) *
           (g.worth(pi.first | T) + g.worth(pi.second | T) -
            coopet::num_traits<Num>::from_int(2) * g.worth(T));
  });
  return acc;
}

/// Coopetition by brute force over opponents, one weight query per term.
template <class Num>
Num oracle_coopetition(const Game<Num>& g, Coalition S,
                       const InternalFamily<Num>& p, const ExternalFamily<Num>& q) {
  Num acc = coopet::num_traits<Num>::from_int(0);
  coopet::for_each_subset(g.players().full() - S, [&](Coalition T) {
    acc += q.weight(g.players(), S, T) * oracle_attitude(g, S, T, p);
  });
  return acc;
}

/// Generalized value by brute force.
template <class Num>
Num oracle_generalized_value(const Game<Num>& g, Coalition S,
                             const ExternalFamily<Num>& q) {
  Num acc = coopet::num_traits<Num>::from_int(0);
  coopet::for_each_subset(g.players().full() - S, [&](Coalition T) {
    acc += q.weight(g.players(), S, T) * (g.worth(S | T) - g.worth(T));
  });
  return acc;
}

inline std::vector<std::pair<const char*, const char*>> preset_pairs() {
  return {{"uniform", "uniform"}, {"uniform", "perm"}, {"perm", "perm"}, {"perm", "uniform"}};
}

template <class Num>
InternalFamily<Num> internal_by_name(const char* name) {
  return std::string(name) == "uniform" ? InternalFamily<Num>::uniform()
                                        : InternalFamily<Num>::permutation();
}

template <class Num>
ExternalFamily<Num> external_by_name(const char* name) {
  return std::string(name) == "uniform" ? ExternalFamily<Num>::uniform()
                                        : ExternalFamily<Num>::permutation();
}

}  // namespace coopet_test

#endif  // COOPET_TESTS_TEST_SUPPORT_HPP
