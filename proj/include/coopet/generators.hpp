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

#ifndef COOPET_GENERATORS_HPP
#define COOPET_GENERATORS_HPP

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "coopet/game.hpp"

namespace coopet {

/// Seeded generator with its own bounded draw, so output does not depend on
/// the standard library's distribution implementations.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  /// Uniform-ish integer in [lo, hi] (modulo bias is irrelevant here).
  long below(long lo, long hi) {
    return lo + static_cast<long>(eng_() % static_cast<std::uint64_t>(hi - lo + 1));
  }

  std::uint64_t raw() { return eng_(); }

  template <class T>
  void shuffle(std::vector<T>& v) {
    for (std::size_t i = v.size(); i > 1; --i)
      std::swap(v[i - 1], v[static_cast<std::size_t>(eng_() % i)]);
  }

 private:
  std::mt19937_64 eng_;
};

/// Monotone game sampler: draw i.i.d. non-negative integer increments along a
/// uniformly random maximal chain, then take the monotone closure via max
/// over one-player-removed subsets. Deterministic per seed.
template <class Num>
Game<Num> random_monotone_game(const PlayerSet& players, std::uint64_t seed,
                               int max_increment = 4) {
  Rng rng(seed);
  const int n = players.n();
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  rng.shuffle(order);

  std::vector<Num> table(std::size_t{1} << n, num_traits<Num>::from_int(0));
  Mask chain = 0;
  Num running = num_traits<Num>::from_int(0);
  for (int k = 0; k < n; ++k) {
    chain |= Mask{1} << order[k];
    running += num_traits<Num>::from_int(rng.below(0, max_increment));
    table[chain] = running;
  }
  for (Mask s = 1; s < table.size(); ++s) {
    Num best = table[s];
    for (Mask m = s; m != 0; m &= m - 1) {
      const Mask sub = s & ~(m & (~m + 1));
      if (best < table[sub]) best = table[sub];
    }
    table[s] = best;
  }
  return Game<Num>(players, std::move(table), true);
}

/// Unconstrained game with small rational worths (v(empty) = 0). The natural
/// sample space for linearity trials.
template <class Num>
Game<Num> random_game(const PlayerSet& players, std::uint64_t seed,
                      long max_abs_num = 6, long max_den = 4) {
  Rng rng(seed);
  std::vector<Num> table(std::size_t{1} << players.n());
  table[0] = num_traits<Num>::from_int(0);
  for (Mask s = 1; s < table.size(); ++s)
    table[s] = num_traits<Num>::ratio(rng.below(-max_abs_num, max_abs_num),
                                      rng.below(1, max_den));
  return Game<Num>(players, std::move(table));
}

/// Small rational coefficient for linearity trials; never returns 0.
template <class Num>
Num random_coefficient(Rng& rng) {
  long num = 0;
  while (num == 0) num = rng.below(-4, 4);
  return num_traits<Num>::ratio(num, rng.below(1, 3));
}

/// Extends the game with one player (appended at the end) whose presence
/// never changes any worth.
template <class Num>
Game<Num> append_null_player(const Game<Num>& g, const std::string& label) {
  std::vector<std::string> labels = g.players().labels();
  labels.push_back(label);
  const PlayerSet extended(std::move(labels));
  const Mask new_bit = Mask{1} << g.n();
  std::vector<Num> table(std::size_t{1} << extended.n());
  for (Mask s = 0; s < table.size(); ++s)
    table[s] = g.worth_table()[s & ~new_bit];
  return Game<Num>(extended, std::move(table), g.monotone_hint());
}

/// Rewrites the game so that player i becomes null: every coalition takes the
/// worth of itself minus i. Used to inject nulls into random games.
template <class Num>
Game<Num> nullify_player(const Game<Num>& g, int i) {
  if (i < 0 || i >= g.n()) throw input_error("player index out of range");
  const Mask bit = Mask{1} << i;
  std::vector<Num> table = g.worth_table();
  for (Mask s = 0; s < table.size(); ++s)
    if (s & bit) table[s] = table[s & ~bit];
  return Game<Num>(g.players(), std::move(table), g.monotone_hint());
}

}  // namespace coopet

#endif  // COOPET_GENERATORS_HPP
