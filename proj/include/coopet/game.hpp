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

#ifndef COOPET_GAME_HPP
#define COOPET_GAME_HPP

#include <optional>
#include <utility>
#include <vector>

#include "coopet/coalition.hpp"
#include "coopet/numeric.hpp"

namespace coopet {

/// A TU-game: a player set plus a dense worth table over all 2^n coalitions,
/// indexed by coalition bits. Immutable after construction; every member is a
/// pure function, so games are safe to share across threads.
template <class Num>
class Game {
 public:
  Game(PlayerSet players, std::vector<Num> worth,
       std::optional<bool> monotone_hint = std::nullopt)
      : players_(std::move(players)),
        worth_(std::move(worth)),
        monotone_hint_(monotone_hint) {
    if (worth_.size() != (std::size_t{1} << players_.n()))
      throw input_error("worth table must have exactly 2^n entries");
    if (!(worth_[0] == num_traits<Num>::from_int(0)))
      throw input_error("the empty coalition must have worth 0");
  }

  const PlayerSet& players() const { return players_; }
  int n() const { return players_.n(); }

  const Num& worth(Coalition S) const {
    if (!players_.valid(S))
      throw input_error("coalition bits out of range for this game");
    return worth_[S.bits()];
  }

  const std::vector<Num>& worth_table() const { return worth_; }

  /// v'_S(T) = v(S u T) - v(T), for disjoint S, T.
  Num marginal(Coalition S, Coalition T) const {
    if (!S.disjoint_with(T))
      throw input_error("marginal contribution requires disjoint coalitions");
    return worth(S | T) - worth(T);
  }

  bool is_null_player(int i) const {
    if (i < 0 || i >= n()) throw input_error("player index out of range");
    const Coalition others = players_.full().without(i);
    bool null = true;
    for_each_subset(others, [&](Coalition T) {
      if (null && !(worth_[(T.with(i)).bits()] == worth_[T.bits()])) null = false;
    });
    return null;
  }

  Coalition null_players() const {
    Mask m = 0;
    for (int i = 0; i < n(); ++i)
      if (is_null_player(i)) m |= Mask{1} << i;
    return Coalition(m);
  }

  /// Weak monotonicity under set inclusion; n * 2^(n-1) adjacent comparisons.
  bool is_monotone() const {
    if (monotone_hint_) return *monotone_hint_;
    for (Mask s = 0; s < worth_.size(); ++s) {
      for (int i = 0; i < n(); ++i) {
        if ((s >> i) & 1) continue;
        if (worth_[s | (Mask{1} << i)] < worth_[s]) return false;
      }
    }
    return true;
  }

  std::optional<bool> monotone_hint() const { return monotone_hint_; }

  Game with_monotone_hint(bool monotone) const {
    return Game(players_, worth_, monotone);
  }

  /// v^{-A}: the restriction to N \ A, with surviving players relabelled to
  /// compact indices (labels preserved).
  Game restricted(Coalition A) const {
    if (!players_.valid(A)) throw input_error("restriction set out of range");
    if (A.empty()) return *this;
    if (A == players_.full())
      throw input_error("cannot restrict away every player");
    return restricted_in_presence(A, Coalition::empty_set());
  }

  /// v^{-A}_{u B}: v without A in the presence of B <= A; worths are
  /// v(S u B) - v(B) over N \ A.
  Game restricted_in_presence(Coalition A, Coalition B) const {
    if (!players_.valid(A)) throw input_error("restriction set out of range");
    if (!B.subset_of(A))
      throw input_error("presence coalition must be contained in the removed set");
    if (A == players_.full())
      throw input_error("cannot restrict away every player");
    const PlayerSet survivors = players_.without(A);
    const std::vector<int> kept = (players_.full() - A).members();
    const Num base = worth(B);
    std::vector<Num> table(std::size_t{1} << survivors.n());
    for (Mask sub = 0; sub < table.size(); ++sub) {
      Mask old_bits = B.bits();
      for (int j = 0; j < survivors.n(); ++j)
        if ((sub >> j) & 1) old_bits |= Mask{1} << kept[j];
      table[sub] = worth_[old_bits] - base;
    }
    // Restriction (with or without presence shift) preserves monotonicity.
    std::optional<bool> hint;
    if (monotone_hint_ && *monotone_hint_) hint = true;
    return Game(survivors, std::move(table), hint);
  }

  /// Harsanyi dividends d(C) with v = sum_C d(C) * u_C, by the standard
  /// in-place Moebius transform over the subset lattice.
  std::vector<Num> mobius_dividends() const {
    std::vector<Num> d = worth_;
    for (int i = 0; i < n(); ++i) {
      const Mask bit = Mask{1} << i;
      for (Mask s = 0; s < d.size(); ++s)
        if (s & bit) d[s] -= d[s ^ bit];
    }
    return d;
  }

  friend bool operator==(const Game& a, const Game& b) {
    return a.players_ == b.players_ && a.worth_ == b.worth_;
  }

 private:
  PlayerSet players_;
  std::vector<Num> worth_;
  std::optional<bool> monotone_hint_;
};

/// Builds a game by evaluating `fn` on every coalition (fn(empty) must be 0).
template <class Num, class F>
Game<Num> make_game(const PlayerSet& players, F&& fn,
                    std::optional<bool> monotone_hint = std::nullopt) {
  std::vector<Num> table(std::size_t{1} << players.n());
  for (Mask s = 0; s < table.size(); ++s) table[s] = fn(Coalition(s));
  return Game<Num>(players, std::move(table), monotone_hint);
}

/// Inverse of the Moebius transform: worth(S) = sum_{C <= S} d(C).
template <class Num>
std::vector<Num> zeta_reconstruct(std::vector<Num> dividends, int n) {
  for (int i = 0; i < n; ++i) {
    const Mask bit = Mask{1} << i;
    for (Mask s = 0; s < dividends.size(); ++s)
      if (s & bit) dividends[s] += dividends[s ^ bit];
  }
  return dividends;
}

/// u_C: worth 1 exactly on supersets of C.
template <class Num>
Game<Num> unanimity_game(const PlayerSet& players, Coalition C) {
  if (C.empty()) throw input_error("unanimity game needs a non-empty basis coalition");
  if (!players.valid(C)) throw input_error("basis coalition out of range");
  return make_game<Num>(
      players,
      [&](Coalition S) {
        return num_traits<Num>::from_int(C.subset_of(S) ? 1 : 0);
      },
      true);
}

/// Simple game v(S) = 1 iff the members' weights reach the quota.
template <class Num>
Game<Num> weighted_majority_game(const PlayerSet& players, const Num& quota,
                                 const std::vector<Num>& weights) {
  if (static_cast<int>(weights.size()) != players.n())
    throw input_error("weighted majority game needs one weight per player");
  if (!(num_traits<Num>::from_int(0) < quota))
    throw input_error("quota must be positive");
  Num total = num_traits<Num>::from_int(0);
  for (const Num& w : weights) {
    if (w < num_traits<Num>::from_int(0))
      throw input_error("weights must be non-negative");
    total += w;
  }
  if (total < quota)
    throw input_error("quota is unsatisfiable: total weight below quota");
  return make_game<Num>(
      players,
      [&](Coalition S) {
        Num sum = num_traits<Num>::from_int(0);
        for (int i : S.members()) sum += weights[i];
        return num_traits<Num>::from_int(quota <= sum ? 1 : 0);
      },
      true);
}

/// alpha*v + beta*w over a shared player set.
template <class Num>
Game<Num> linear_combination(const Num& alpha, const Game<Num>& v,
                             const Num& beta, const Game<Num>& w) {
  if (!(v.players() == w.players()))
    throw input_error("linear combination requires identical player sets");
  std::vector<Num> table(v.worth_table().size());
  for (std::size_t s = 0; s < table.size(); ++s)
    table[s] = alpha * v.worth_table()[s] + beta * w.worth_table()[s];
  return Game<Num>(v.players(), std::move(table));
}

}  // namespace coopet

#endif  // COOPET_GAME_HPP
