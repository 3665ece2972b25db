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

#ifndef COOPET_AXIOMS_HPP
#define COOPET_AXIOMS_HPP

#include <functional>
#include <map>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "coopet/generators.hpp"
#include "coopet/indices.hpp"

namespace coopet {

// ---------------------------------------------------------------------------
// Group indices.
// ---------------------------------------------------------------------------

/// A group index: a named mapping (S; N, v) -> scalar with xi(empty) = 0.
/// The empty coalition is short-circuited here so every index honours the
/// definition regardless of how its evaluator behaves.
template <class Num>
struct GroupIndex {
  std::string name;
  std::function<Num(const Game<Num>&, Coalition)> eval;

  Num operator()(const Game<Num>& g, Coalition S) const {
    if (S.empty()) return num_traits<Num>::from_int(0);
    if (!g.players().valid(S))
      throw input_error("coalition bits out of range for this game");
    return eval(g, S);
  }
};

template <class Num>
GroupIndex<Num> uniform_shapley_index() {
  return {"su", [](const Game<Num>& g, Coalition S) {
            return uniform_shapley_coopetition(g, S);
          }};
}

template <class Num>
GroupIndex<Num> shapley_owen_index() {
  return {"so", [](const Game<Num>& g, Coalition S) {
            return shapley_owen_coopetition(g, S);
          }};
}

template <class Num>
GroupIndex<Num> banzhaf_index() {
  return {"banzhaf", [](const Game<Num>& g, Coalition S) {
            return banzhaf_coopetition(g, S);
          }};
}

// ---------------------------------------------------------------------------
// Axioms.
// ---------------------------------------------------------------------------

enum class AxiomId { L, SB, EN, ICU, ICP };

inline const char* to_string(AxiomId a) {
  switch (a) {
    case AxiomId::L: return "L";
    case AxiomId::SB: return "SB";
    case AxiomId::EN: return "EN";
    case AxiomId::ICU: return "ICU";
    default: return "ICP";
  }
}

struct AxiomVerdict {
  explicit AxiomVerdict(AxiomId a) : axiom(a) {}

  AxiomId axiom;
  bool holds = true;
  std::string witness;        // first violating instance when holds == false
  std::uint64_t seed = 0;     // linearity only: replay metadata
  int trials = 0;             // linearity only
};

namespace detail {

inline std::string coalition_text(const PlayerSet& ps, Coalition c) {
  return "{" + label_key(ps, c) + "}";
}

template <class Num>
std::string value_pair_text(const Num& lhs, const Num& rhs) {
  return num_traits<Num>::render(lhs) + " vs " + num_traits<Num>::render(rhs);
}

}  // namespace detail

/// Linearity: xi(S; alpha v + beta w) = alpha xi(S; v) + beta xi(S; w), checked
/// on seeded random pairs. Trials rotate through plain random pairs, pairs
/// sharing an injected null player, and pure scaling pairs, so indices that
/// privilege null players or normalization are caught deterministically.
template <class Num>
AxiomVerdict check_linearity(const GroupIndex<Num>& index, const PlayerSet& ps,
                             int trials, std::uint64_t seed) {
  AxiomVerdict verdict{AxiomId::L};
  verdict.seed = seed;
  verdict.trials = trials;
  Rng rng(seed);
  for (int k = 0; k < trials && verdict.holds; ++k) {
    Game<Num> v = random_game<Num>(ps, rng.raw());
    Game<Num> w = random_game<Num>(ps, rng.raw());
    Num alpha = random_coefficient<Num>(rng);
    Num beta = random_coefficient<Num>(rng);
    if (k % 3 == 1 && ps.n() >= 2) {
      const int idx = static_cast<int>(rng.below(0, ps.n() - 1));
      v = nullify_player(v, idx);
      w = nullify_player(w, idx);
    } else if (k % 3 == 2) {
      w = v;
      alpha = num_traits<Num>::from_int(2);
      beta = num_traits<Num>::from_int(0);
    }
    const Game<Num> combo = linear_combination(alpha, v, beta, w);
    for_each_subset(ps.full(), [&](Coalition S) {
      if (!verdict.holds) return;
      const Num lhs = index(combo, S);
      const Num rhs = alpha * index(v, S) + beta * index(w, S);
      if (!num_traits<Num>::near(lhs, rhs, kClassificationTolerance)) {
        verdict.holds = false;
        std::ostringstream os;
        os << "trial " << k << ", S=" << detail::coalition_text(ps, S)
           << ", alpha=" << num_traits<Num>::render(alpha)
           << ", beta=" << num_traits<Num>::render(beta) << ": "
           << detail::value_pair_text(lhs, rhs);
        verdict.witness = os.str();
      }
    });
  }
  return verdict;
}

/// Symmetry over the pure bargaining game: xi(S; u_N) = 1/(n-s+1) for every
/// non-empty S.
template <class Num>
AxiomVerdict check_sb(const GroupIndex<Num>& index, const PlayerSet& ps) {
  AxiomVerdict verdict{AxiomId::SB};
  const Game<Num> bargaining = unanimity_game<Num>(ps, ps.full());
  for_each_subset(ps.full(), [&](Coalition S) {
    if (!verdict.holds || S.empty()) return;
    const Num lhs = index(bargaining, S);
    const Num rhs = num_traits<Num>::ratio(1, ps.n() - S.size() + 1);
    if (!num_traits<Num>::near(lhs, rhs, kClassificationTolerance)) {
      verdict.holds = false;
      verdict.witness = "u_N with n=" + std::to_string(ps.n()) + ", S=" +
                        detail::coalition_text(ps, S) + ": " +
                        detail::value_pair_text(lhs, rhs);
    }
  });
  return verdict;
}

/// External null player neutrality: removing a null player outside S does not
/// change the index. Checked for every S avoiding the removed player.
template <class Num>
AxiomVerdict check_en(const GroupIndex<Num>& index, const Game<Num>& g, int null_i) {
  if (!g.is_null_player(null_i))
    throw input_error("EN check requires a null player");
  AxiomVerdict verdict{AxiomId::EN};
  const Coalition removed = Coalition::single(null_i);
  const Game<Num> reduced = g.restricted(removed);
  for_each_subset(g.players().full() - removed, [&](Coalition S) {
    if (!verdict.holds) return;
    const Num lhs = index(g, S);
    const Num rhs = index(reduced, compact_remap(S, removed));
    if (!num_traits<Num>::near(lhs, rhs, kClassificationTolerance)) {
      verdict.holds = false;
      verdict.witness = "null " + g.players().label(null_i) + " removed, S=" +
                        detail::coalition_text(g.players(), S) + ": " +
                        detail::value_pair_text(lhs, rhs);
    }
  });
  return verdict;
}

namespace detail {

template <class Num>
AxiomVerdict check_contraction(AxiomId axiom, const GroupIndex<Num>& index,
                               const Game<Num>& g, Coalition S, int null_i) {
  if (!S.contains(null_i))
    throw input_error("contraction check requires the null player inside S");
  if (S.size() < 2) throw input_error("contraction check requires |S| >= 2");
  if (!g.is_null_player(null_i))
    throw input_error("contraction check requires a null player");
  AxiomVerdict verdict{axiom};
  const int s = S.size();
  const Num factor = axiom == AxiomId::ICU
                         ? (pow2_of<Num>(s - 1) - num_traits<Num>::from_int(2)) /
                               (pow2_of<Num>(s - 1) - num_traits<Num>::from_int(1))
                         : num_traits<Num>::ratio(static_cast<long>(s + 1) * (s - 2),
                                                  static_cast<long>(s) * (s - 1));
  const Coalition removed = Coalition::single(null_i);
  const Num lhs = index(g, S);
  const Num rhs =
      factor * index(g.restricted(removed), compact_remap(S - removed, removed));
  if (!num_traits<Num>::near(lhs, rhs, kClassificationTolerance)) {
    verdict.holds = false;
    verdict.witness = "null " + g.players().label(null_i) + " in S=" +
                      detail::coalition_text(g.players(), S) + ": " +
                      detail::value_pair_text(lhs, rhs);
  }
  return verdict;
}

}  // namespace detail

/// Internal null player contraction, uniform attitude: the index contracts by
/// (2^{s-1} - 2)/(2^{s-1} - 1) when a null member is removed from S.
template <class Num>
AxiomVerdict check_icu(const GroupIndex<Num>& index, const Game<Num>& g,
                       Coalition S, int null_i) {
  return detail::check_contraction(AxiomId::ICU, index, g, S, null_i);
}

/// Internal null player contraction, permutation attitude: factor
/// (s+1)(s-2) / (s(s-1)).
template <class Num>
AxiomVerdict check_icp(const GroupIndex<Num>& index, const Game<Num>& g,
                       Coalition S, int null_i) {
  return detail::check_contraction(AxiomId::ICP, index, g, S, null_i);
}

// ---------------------------------------------------------------------------
// The counterexample indices from the independence arguments.
// ---------------------------------------------------------------------------

enum class CounterexampleKind {
  l_uniform,
  l_permutation,
  sb,
  inpcu,
  inpcp,
  enpn_uniform,
  enpn_permutation,
};

namespace detail {

// xi^ENPN on the unanimity basis element u_C. The grand-coalition case is the
// bargaining value; otherwise the index scales the bargaining value by the
// probability that a 2-partition of S separates S n C (zero when S misses C).
template <class Num>
Num enpn_unanimity_value(bool uniform_variant, int n, Coalition C, Coalition S) {
  if (S.empty()) return num_traits<Num>::from_int(0);
  const Num bargaining = num_traits<Num>::ratio(1, n - S.size() + 1);
  if (C == Coalition::full(n)) return bargaining;
  const int r = (S & C).size();
  if (r == 0) return num_traits<Num>::from_int(0);
  const Num split = uniform_variant
                        ? split_probability_uniform<Num>(S.size(), r)
                        : split_probability_permutation<Num>(S.size(), r);
  return bargaining * split;
}

template <class Num>
Num l_index_value(bool uniform_variant, const Game<Num>& g, Coalition S) {
  const int n = g.n();
  if (n == 1) {
    // As stated for one player: 1 whenever the game is not null or S is
    // non-empty; the disjunction makes every non-empty S score 1.
    return num_traits<Num>::from_int(1);
  }
  const Coalition nulls = g.null_players();
  const int m = nulls.size();
  const int s = S.size();
  if (m == 0) return num_traits<Num>::ratio(1, n - s + 1);
  const int z = (S & nulls).size();
  const Num split = uniform_variant
                        ? split_probability_uniform<Num>(s, s - z)
                        : split_probability_permutation<Num>(s, s - z);
  return num_traits<Num>::ratio(1, (n - m) - (s - z) + 1) * split;
}

}  // namespace detail

/// Builds the named index exactly as it appears in the independence
/// arguments. The ENPN variants are defined on the unanimity basis and
/// extended by linearity through the Harsanyi dividends.
template <class Num>
GroupIndex<Num> counterexample_index(CounterexampleKind kind) {
  switch (kind) {
    case CounterexampleKind::l_uniform:
      return {"xi-L-uniform", [](const Game<Num>& g, Coalition S) {
                return detail::l_index_value<Num>(true, g, S);
              }};
    case CounterexampleKind::l_permutation:
      return {"xi-L-perm", [](const Game<Num>& g, Coalition S) {
                return detail::l_index_value<Num>(false, g, S);
              }};
    case CounterexampleKind::sb:
      return {"xi-SB-zero", [](const Game<Num>&, Coalition) {
                return num_traits<Num>::from_int(0);
              }};
    case CounterexampleKind::inpcu:
    case CounterexampleKind::inpcp:
      return {"phi-shapley", [](const Game<Num>& g, Coalition S) {
                return shapley_generalized_value(g, S);
              }};
    case CounterexampleKind::enpn_uniform:
    case CounterexampleKind::enpn_permutation: {
      const bool uniform_variant = kind == CounterexampleKind::enpn_uniform;
      const std::string name =
          uniform_variant ? "xi-ENPN-uniform" : "xi-ENPN-perm";
      return {name, [uniform_variant](const Game<Num>& g, Coalition S) {
                const std::vector<Num> d = g.mobius_dividends();
                Num acc = num_traits<Num>::from_int(0);
                for (Mask c = 1; c < d.size(); ++c) {
                  if (d[c] == num_traits<Num>::from_int(0)) continue;
                  acc += d[c] * detail::enpn_unanimity_value<Num>(
                                    uniform_variant, g.n(), Coalition(c), S);
                }
                return acc;
              }};
    }
  }
  throw error("unreachable");
}

// ---------------------------------------------------------------------------
// Independence suite.
// ---------------------------------------------------------------------------

enum class SuiteVariant { uniform, permutation };

inline const char* to_string(SuiteVariant v) {
  return v == SuiteVariant::uniform ? "uniform" : "permutation";
}

struct SuiteCell {
  AxiomId axiom;
  bool expected = true;
  bool holds = true;
  std::string witness;
};

struct SuiteRow {
  std::string index_name;
  std::vector<SuiteCell> cells;
  bool matches_expectation() const {
    for (const auto& c : cells)
      if (c.holds != c.expected) return false;
    return true;
  }
};

struct IndependenceSuiteOptions {
  int max_n = 5;            // battery covers player counts 2..max_n
  int randoms_per_n = 25;   // random monotone games with one appended null
  int linearity_trials = 50;
  std::uint64_t seed = 20260808;
};

struct IndependenceSuiteResult {
  SuiteVariant variant;
  std::vector<SuiteRow> rows;
  bool pattern_ok = true;
};

namespace detail {

template <class Num>
std::vector<Game<Num>> axiom_battery(const IndependenceSuiteOptions& opt) {
  std::vector<Game<Num>> battery;
  for (int n = 2; n <= opt.max_n; ++n) {
    const PlayerSet ps = PlayerSet::numbered(n);
    for (Mask c = 1; c < (Mask{1} << n); ++c)
      battery.push_back(unanimity_game<Num>(ps, Coalition(c)));
  }
  Rng rng(opt.seed);
  for (int n = 3; n <= std::min(5, opt.max_n); ++n) {
    const PlayerSet base = PlayerSet::numbered(n - 1);
    for (int k = 0; k < opt.randoms_per_n; ++k) {
      const Game<Num> g = random_monotone_game<Num>(base, rng.raw());
      battery.push_back(append_null_player(g, std::to_string(n)));
    }
  }
  return battery;
}

// Conjunction of per-instance checks over the whole battery; keeps the first
// witness.
inline void merge(AxiomVerdict& total, const AxiomVerdict& part,
                  const std::string& context) {
  if (total.holds && !part.holds) {
    total.holds = false;
    total.witness = context + ": " + part.witness;
  }
}

template <class Num>
SuiteRow run_row(const GroupIndex<Num>& index, AxiomId contraction_axiom,
                 AxiomId fails, const std::vector<Game<Num>>& battery,
                 const IndependenceSuiteOptions& opt) {
  AxiomVerdict l{AxiomId::L};
  AxiomVerdict sb{AxiomId::SB};
  AxiomVerdict en{AxiomId::EN};
  AxiomVerdict ic{contraction_axiom};

  for (int n = 2; n <= opt.max_n; ++n) {
    const PlayerSet ps = PlayerSet::numbered(n);
    merge(l, check_linearity(index, ps, opt.linearity_trials, opt.seed + n),
          "n=" + std::to_string(n));
    merge(sb, check_sb(index, ps), "n=" + std::to_string(n));
  }

  int game_no = 0;
  for (const Game<Num>& g : battery) {
    ++game_no;
    const std::string context = "battery game #" + std::to_string(game_no);
    const Coalition nulls = g.null_players();
    for (int i : nulls.members()) {
      merge(en, check_en(index, g, i), context);
      for_each_subset(g.players().full() - Coalition::single(i), [&](Coalition rest) {
        if (!ic.holds) return;
        const Coalition S = rest.with(i);
        if (S.size() < 2) return;
        merge(ic,
              contraction_axiom == AxiomId::ICU ? check_icu(index, g, S, i)
                                                : check_icp(index, g, S, i),
              context);
      });
    }
  }

  SuiteRow row;
  row.index_name = index.name;
  for (AxiomVerdict* v : {&l, &sb, &en, &ic}) {
    SuiteCell cell;
    cell.axiom = v->axiom;
    cell.expected = v->axiom != fails;
    cell.holds = v->holds;
    cell.witness = v->witness;
    row.cells.push_back(cell);
  }
  return row;
}

}  // namespace detail

/// Runs the four-axiom battery for the chosen variant: the coopetition index
/// itself must pass everything, and each counterexample index must fail
/// exactly its designated axiom.
template <class Num>
IndependenceSuiteResult independence_suite(SuiteVariant variant,
                                           IndependenceSuiteOptions opt = {}) {
  if (opt.max_n < 2 || opt.max_n > 5)
    throw input_error("the independence battery is defined for 2 <= n <= 5");
  IndependenceSuiteResult result;
  result.variant = variant;
  const std::vector<Game<Num>> battery = detail::axiom_battery<Num>(opt);
  const bool uniform = variant == SuiteVariant::uniform;
  const AxiomId contraction = uniform ? AxiomId::ICU : AxiomId::ICP;

  struct Entry {
    GroupIndex<Num> index;
    AxiomId fails;  // AxiomId::L is never "none": the pass-all row is below
    bool pass_all;
  };
  std::vector<Entry> entries;
  entries.push_back({uniform ? uniform_shapley_index<Num>() : shapley_owen_index<Num>(),
                     AxiomId::L, true});
  entries.push_back({counterexample_index<Num>(uniform ? CounterexampleKind::l_uniform
                                                        : CounterexampleKind::l_permutation),
                     AxiomId::L, false});
  entries.push_back({counterexample_index<Num>(CounterexampleKind::sb), AxiomId::SB, false});
  entries.push_back({counterexample_index<Num>(uniform ? CounterexampleKind::inpcu
                                                        : CounterexampleKind::inpcp),
                     contraction, false});
  entries.push_back({counterexample_index<Num>(uniform ? CounterexampleKind::enpn_uniform
                                                        : CounterexampleKind::enpn_permutation),
                     AxiomId::EN, false});

  for (const Entry& e : entries) {
    SuiteRow row = detail::run_row(e.index, contraction, e.fails, battery, opt);
    if (e.pass_all)
      for (auto& cell : row.cells) cell.expected = true;
    result.rows.push_back(std::move(row));
  }
  for (const auto& row : result.rows)
    if (!row.matches_expectation()) result.pattern_ok = false;
  return result;
}

}  // namespace coopet

#endif  // COOPET_AXIOMS_HPP
