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

#ifndef COOPET_INDICES_HPP
#define COOPET_INDICES_HPP

#include <optional>
#include <string>
#include <vector>

#include "coopet/distributions.hpp"
#include "coopet/game.hpp"

namespace coopet {

inline constexpr double kClassificationTolerance = 1e-9;

namespace detail {

template <class Num>
bool close(const Num& a, const Num& b) {
  return num_traits<Num>::near(a, b, kClassificationTolerance);
}

// Expected block-worth sum under the internal family:
//   sum_{pi = {S1,S2}} p_S(pi) * (v(S1 u T) + v(S2 u T)).
template <class Num>
Num expected_block_sum(const Game<Num>& g, Coalition S, Coalition T,
                       const InternalFamily<Num>& internal) {
  const auto by_size = internal.weights_by_block_size(S.size());
  Num acc = num_traits<Num>::from_int(0);
  for_each_two_partition(S, [&](const TwoPartition& pi) {
    const Num w = by_size ? (*by_size)[pi.first.size()]
                          : internal.weight(g.players(), S, pi);
    acc += w * (g.worth(pi.first | T) + g.worth(pi.second | T));
  });
  return acc;
}

template <class Num>
void require_attitude_domain(const Game<Num>& g, Coalition S, Coalition T) {
  if (S.empty()) throw input_error("attitude is undefined for the empty coalition");
  if (!g.players().valid(S) || !g.players().valid(T))
    throw input_error("coalition bits out of range for this game");
  if (!S.disjoint_with(T))
    throw input_error("opponent coalition must be disjoint from the coalition");
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Attitude, generalized value, coopetition.
// ---------------------------------------------------------------------------

/// Attitude of S towards T under the internal family:
///   |S| = 1:  v(S u T) - v(T)                   (family-independent)
///   |S| >= 2: v(S u T) + v(T) - sum_pi p_S(pi) (v(S1 u T) + v(S2 u T)).
template <class Num>
Num attitude(const Game<Num>& g, Coalition S, Coalition T,
             const InternalFamily<Num>& internal) {
  detail::require_attitude_domain(g, S, T);
  if (S.size() == 1) return g.worth(S | T) - g.worth(T);
  return g.worth(S | T) + g.worth(T) - detail::expected_block_sum(g, S, T, internal);
}

/// Probabilistic generalized value Phi_q(S) = sum_T q_S(T) v'_S(T).
template <class Num>
Num generalized_value(const Game<Num>& g, Coalition S,
                      const ExternalFamily<Num>& external) {
  if (S.empty())
    throw input_error("generalized value is undefined for the empty coalition");
  if (!g.players().valid(S))
    throw input_error("coalition bits out of range for this game");
  const auto by_size = external.weights_by_size(g.players(), S.size());
  Num acc = num_traits<Num>::from_int(0);
  for_each_subset(g.players().full() - S, [&](Coalition T) {
    const Num w = by_size ? (*by_size)[T.size()] : external.weight(g.players(), S, T);
    acc += w * (g.worth(S | T) - g.worth(T));
  });
  return acc;
}

/// Coopetition index C_{p,q}(S) = sum_T q_S(T) * attitude_p(S, T).
/// Coincides with the generalized value for singletons.
template <class Num>
Num coopetition(const Game<Num>& g, Coalition S,
                const InternalFamily<Num>& internal,
                const ExternalFamily<Num>& external) {
  if (S.empty())
    throw input_error("coopetition index is undefined for the empty coalition");
  if (!g.players().valid(S))
    throw input_error("coalition bits out of range for this game");
  const auto q_by_size = external.weights_by_size(g.players(), S.size());
  const bool singleton = S.size() == 1;
  const auto p_by_size =
      singleton ? std::nullopt : internal.weights_by_block_size(S.size());
  Num acc = num_traits<Num>::from_int(0);
  for_each_subset(g.players().full() - S, [&](Coalition T) {
    const Num qw = q_by_size ? (*q_by_size)[T.size()] : external.weight(g.players(), S, T);
    Num att;
    if (singleton) {
      att = g.worth(S | T) - g.worth(T);
    } else {
      Num blocks = num_traits<Num>::from_int(0);
      for_each_two_partition(S, [&](const TwoPartition& pi) {
        const Num pw = p_by_size ? (*p_by_size)[pi.first.size()]
                                 : internal.weight(g.players(), S, pi);
        blocks += pw * (g.worth(pi.first | T) + g.worth(pi.second | T));
      });
      att = g.worth(S | T) + g.worth(T) - blocks;
    }
    acc += qw * att;
  });
  return acc;
}

/// Absolute coopetition index: C / Phi when Phi != 0, exactly 0 otherwise.
/// The [-1, 1] range interpretation assumes a monotone game.
template <class Num>
Num absolute_coopetition(const Game<Num>& g, Coalition S,
                         const InternalFamily<Num>& internal,
                         const ExternalFamily<Num>& external) {
  const Num phi = generalized_value(g, S, external);
  if (phi == num_traits<Num>::from_int(0)) return num_traits<Num>::from_int(0);
  return coopetition(g, S, internal, external) / phi;
}

// The three named presets.

template <class Num>
Num banzhaf_coopetition(const Game<Num>& g, Coalition S) {
  return coopetition(g, S, InternalFamily<Num>::uniform(), ExternalFamily<Num>::uniform());
}

template <class Num>
Num shapley_owen_coopetition(const Game<Num>& g, Coalition S) {
  return coopetition(g, S, InternalFamily<Num>::permutation(),
                     ExternalFamily<Num>::permutation());
}

template <class Num>
Num uniform_shapley_coopetition(const Game<Num>& g, Coalition S) {
  return coopetition(g, S, InternalFamily<Num>::uniform(),
                     ExternalFamily<Num>::permutation());
}

/// The Shapley generalized value Phi_Sh: the generalized value under the
/// permutation-induced external family.
template <class Num>
Num shapley_generalized_value(const Game<Num>& g, Coalition S) {
  return generalized_value(g, S, ExternalFamily<Num>::permutation());
}

// ---------------------------------------------------------------------------
// Decomposition identities.
// ---------------------------------------------------------------------------

/// Uniform Shapley index via group values:
///   C_SU(S) = Phi_Sh(S) - 1/(2^{s-1}-1) * sum_{0 != R < S} Phi_Sh^{-(S\R)}(R).
/// Only defined for |S| >= 2; must agree exactly with the direct evaluation.
template <class Num>
Num uniform_shapley_via_decomposition(const Game<Num>& g, Coalition S) {
  if (S.size() < 2)
    throw input_error("the decomposition identity requires |S| >= 2");
  Num sum = num_traits<Num>::from_int(0);
  for_each_subset(S, [&](Coalition R) {
    if (R.empty() || R == S) return;
    const Coalition removed = S - R;
    const Game<Num> rest = g.restricted(removed);
    sum += shapley_generalized_value(rest, compact_remap(R, removed));
  });
  return shapley_generalized_value(g, S) - p_uniform_weight<Num>(S.size()) * sum;
}

/// Generic group-value decomposition, valid when the external family is
/// restriction-consistent:
///   C(S) = Phi(S) - sum_pi p_S(pi) (Phi^{-S2}(S1) + Phi^{-S1}(S2)).
template <class Num>
Num coopetition_via_group_values(const Game<Num>& g, Coalition S,
                                 const InternalFamily<Num>& internal,
                                 const ExternalFamily<Num>& external,
                                 bool verify_charac = true) {
  if (S.size() < 2)
    throw input_error("the decomposition identity requires |S| >= 2");
  const bool builtin = external.kind() == ExternalKind::uniform ||
                       external.kind() == ExternalKind::permutation;
  if (verify_charac && !builtin && !has_charac_property(external, g.players()))
    throw input_error(
        "external family is not restriction-consistent; the decomposition "
        "identity does not apply");
  Num sum = num_traits<Num>::from_int(0);
  for_each_two_partition(S, [&](const TwoPartition& pi) {
    const Num w = internal.weight(g.players(), S, pi);
    Num blocks = num_traits<Num>::from_int(0);
    for (int side = 0; side < 2; ++side) {
      const Coalition kept = side == 0 ? pi.first : pi.second;
      const Coalition removed = side == 0 ? pi.second : pi.first;
      blocks += generalized_value(g.restricted(removed),
                                  compact_remap(kept, removed), external);
    }
    sum += w * blocks;
  });
  return generalized_value(g, S, external) - sum;
}

// ---------------------------------------------------------------------------
// Contribution classification and boundary attainment.
// ---------------------------------------------------------------------------

enum class Contribution { not_contributing, essential, fully_complementary, mixed };

inline const char* to_string(Contribution c) {
  switch (c) {
    case Contribution::not_contributing: return "not-contributing";
    case Contribution::essential: return "essential";
    case Contribution::fully_complementary: return "fully-complementary";
    default: return "mixed";
  }
}

/// Classifies S against a fixed opponent T. "Contributing" means a strictly
/// positive marginal contribution; the subcoalition tests use exact equality
/// in exact mode and the classification tolerance in float mode.
template <class Num>
Contribution classify_contributing(const Game<Num>& g, Coalition S, Coalition T) {
  detail::require_attitude_domain(g, S, T);
  const Num vt = g.worth(T);
  const Num vst = g.worth(S | T);
  if (!(num_traits<Num>::from_int(0) < vst - vt)) return Contribution::not_contributing;
  bool essential = true;
  bool complementary = true;
  for_each_subset(S, [&](Coalition P) {
    if (P == S) return;
    const Num w = g.worth(P | T);
    if (!detail::close(w, vt)) essential = false;     // proper P < S
    if (!P.empty() && !detail::close(w, vst)) complementary = false;
  });
  if (essential) return Contribution::essential;
  if (complementary) return Contribution::fully_complementary;
  return Contribution::mixed;
}

struct ContributionSummary {
  int essential = 0;
  int fully_complementary = 0;
  int mixed = 0;
  int not_contributing = 0;

  bool contributes_somewhere() const {
    return essential + fully_complementary + mixed > 0;
  }
  std::string overall() const {
    if (!contributes_somewhere()) return "never-contributing";
    if (fully_complementary + mixed == 0) return "essential-everywhere";
    if (essential + mixed == 0) return "fully-complementary-everywhere";
    return "mixed";
  }
};

template <class Num>
ContributionSummary summarize_contribution(const Game<Num>& g, Coalition S) {
  ContributionSummary out;
  for_each_subset(g.players().full() - S, [&](Coalition T) {
    switch (classify_contributing(g, S, T)) {
      case Contribution::essential: ++out.essential; break;
      case Contribution::fully_complementary: ++out.fully_complementary; break;
      case Contribution::mixed: ++out.mixed; break;
      case Contribution::not_contributing: ++out.not_contributing; break;
    }
  });
  return out;
}

/// Boundary attainment: if S is essential (resp. fully complementary)
/// everywhere it contributes, the coopetition index must sit on the upper
/// (resp. lower) bound +-Phi. Assumes a full-support internal family for the
/// equality claims.
template <class Num>
struct AttainmentReport {
  ContributionSummary summary;
  Num phi;
  Num coop;
  bool boundary_asserted = false;  // one of the two everywhere-cases applied
  bool boundary_holds = false;     // and the corresponding equality held
};

template <class Num>
AttainmentReport<Num> check_attainment(const Game<Num>& g, Coalition S,
                                       const InternalFamily<Num>& internal,
                                       const ExternalFamily<Num>& external) {
  AttainmentReport<Num> out;
  out.summary = summarize_contribution(g, S);
  out.phi = generalized_value(g, S, external);
  out.coop = coopetition(g, S, internal, external);
  if (!out.summary.contributes_somewhere()) return out;
  const std::string overall = out.summary.overall();
  if (overall == "essential-everywhere") {
    out.boundary_asserted = true;
    out.boundary_holds = detail::close(out.coop, out.phi);
  } else if (overall == "fully-complementary-everywhere") {
    out.boundary_asserted = true;
    out.boundary_holds = detail::close(out.coop, -out.phi);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Null-player laws.
// ---------------------------------------------------------------------------

/// Coopetition of a pair containing a null player is identically zero, for
/// any family pair. Verifies and returns the value.
template <class Num>
Num null_pair_index(const Game<Num>& g, int null_i, int j,
                    const InternalFamily<Num>& internal,
                    const ExternalFamily<Num>& external) {
  if (null_i == j) throw input_error("the pair needs two distinct players");
  if (!g.is_null_player(null_i))
    throw input_error("null_pair_index requires a null player");
  const Num value =
      coopetition(g, Coalition::single(null_i) | Coalition::single(j), internal, external);
  if (!detail::close(value, num_traits<Num>::from_int(0)))
    throw error("null-pair coopetition did not vanish: " + num_traits<Num>::render(value));
  return value;
}

/// Outcome of verifying the null-player scaling law on (S, i):
/// both family ratios must be constant, and then
/// C(S u i) = K_p * K_q * C(S) exactly.
template <class Num>
struct NullScalingReport {
  bool ratios_constant = false;
  Num k_p;
  Num k_q;
  Num lhs;  // C(S u i)
  Num rhs;  // K_p * K_q * C(S)
  bool holds = false;
};

namespace detail {

// Checks that num_k / den_k is the same for all k (den = 0 forces num = 0)
// and extracts the common ratio.
template <class Num>
std::optional<Num> constant_ratio(const std::vector<std::pair<Num, Num>>& pairs) {
  const Num zero = num_traits<Num>::from_int(0);
  std::optional<Num> ratio;
  for (const auto& [num, den] : pairs) {
    if (den == zero) {
      if (!(num == zero)) return std::nullopt;
      continue;
    }
    const Num r = num / den;
    if (!ratio) {
      ratio = r;
    } else if (!close(*ratio, r)) {
      return std::nullopt;
    }
  }
  return ratio;  // nullopt when no denominator was non-zero
}

}  // namespace detail

template <class Num>
NullScalingReport<Num> null_scaling_check(const Game<Num>& g, Coalition S, int null_i,
                                          const InternalFamily<Num>& internal,
                                          const ExternalFamily<Num>& external) {
  if (S.size() < 2) throw input_error("null scaling requires |S| >= 2");
  if (S.contains(null_i)) throw input_error("the null player must lie outside S");
  if (!g.is_null_player(null_i))
    throw input_error("null_scaling_check requires a null player");
  const PlayerSet& ps = g.players();
  const Coalition Si = S.with(null_i);

  std::vector<std::pair<Num, Num>> p_ratios;
  for_each_two_partition(S, [&](const TwoPartition& pi) {
    const Num num =
        internal.weight(ps, Si, TwoPartition::canonical(pi.first.with(null_i), pi.second)) +
        internal.weight(ps, Si, TwoPartition::canonical(pi.first, pi.second.with(null_i)));
    p_ratios.emplace_back(num, internal.weight(ps, S, pi));
  });

  std::vector<std::pair<Num, Num>> q_ratios;
  for_each_subset(ps.full() - Si, [&](Coalition T) {
    const Num num = external.weight(ps, Si, T);
    const Num den = external.weight(ps, S, T) + external.weight(ps, S, T.with(null_i));
    q_ratios.emplace_back(num, den);
  });

  NullScalingReport<Num> out;
  const auto k_p = detail::constant_ratio(p_ratios);
  const auto k_q = detail::constant_ratio(q_ratios);
  if (!k_p || !k_q) return out;  // conditions violated; no scaling law asserted
  out.ratios_constant = true;
  out.k_p = *k_p;
  out.k_q = *k_q;
  out.lhs = coopetition(g, Si, internal, external);
  out.rhs = out.k_p * out.k_q * coopetition(g, S, internal, external);
  out.holds = detail::close(out.lhs, out.rhs);
  return out;
}

// ---------------------------------------------------------------------------
// Closed forms on unanimity games and the combinatorial lemma.
// ---------------------------------------------------------------------------

/// Probability that a uniform random 2-partition of an s-set separates r
/// distinguished members into both blocks: (2^{s-1} - 2^{s-r}) / (2^{s-1} - 1)
/// for 1 <= r < s, with the boundary values 0 at r = 0 and 1 at r = s.
template <class Num>
Num split_probability_uniform(int s, int r) {
  if (r < 0 || r > s) throw input_error("block size out of range");
  if (r == 0) return num_traits<Num>::from_int(0);
  if (r == s) return num_traits<Num>::from_int(1);
  return (pow2_of<Num>(s - 1) - pow2_of<Num>(s - r)) /
         (pow2_of<Num>(s - 1) - num_traits<Num>::from_int(1));
}

/// Same separation probability under the permutation-based family:
/// (s+1)(r-1) / ((s-1)(r+1)) for 1 <= r < s, boundaries as above.
template <class Num>
Num split_probability_permutation(int s, int r) {
  if (r < 0 || r > s) throw input_error("block size out of range");
  if (r == 0) return num_traits<Num>::from_int(0);
  if (r == s) return num_traits<Num>::from_int(1);
  return num_traits<Num>::ratio(static_cast<long>(s + 1) * (r - 1),
                                static_cast<long>(s - 1) * (r + 1));
}

enum class UnanimityIndexKind { uniform_shapley, shapley_owen };

/// Closed form of the Uniform Shapley / Shapley-Owen coopetition index on the
/// unanimity game u_C. Three cases: 0 outside C; 1/(c-s+1) inside C;
/// split-probability over (c-r+1) when S straddles the boundary.
template <class Num>
Num closed_form_unanimity(UnanimityIndexKind kind, int n, Coalition C, Coalition S) {
  if (C.empty() || S.empty())
    throw input_error("closed form needs non-empty coalitions");
  if (!C.subset_of(Coalition::full(n)) || !S.subset_of(Coalition::full(n)))
    throw input_error("coalition bits out of range");
  const int s = S.size();
  const int c = C.size();
  const int r = (S & C).size();
  if (r == 0) return num_traits<Num>::from_int(0);
  if (S.subset_of(C)) return num_traits<Num>::ratio(1, c - s + 1);
  const Num split = kind == UnanimityIndexKind::uniform_shapley
                        ? split_probability_uniform<Num>(s, r)
                        : split_probability_permutation<Num>(s, r);
  return split * num_traits<Num>::ratio(1, c - r + 1);
}

/// Left side of the combinatorial lemma, by direct summation:
///   1 - 2 r!(s-r)!/(s!(s-1))
///     - sum_{t=1}^{s-r-1} C(s-r,t) (t!(s-t)! + (t+r)!(s-t-r)!) / (s!(s-1)).
template <class Num>
Num lemma_combinatorial_lhs(int s, int r) {
  if (!(1 <= r && r < s)) throw input_error("lemma requires 1 <= r < s");
  const Num denom = factorial_of<Num>(s) * num_traits<Num>::from_int(s - 1);
  Num acc = num_traits<Num>::from_int(1) -
            num_traits<Num>::from_int(2) * factorial_of<Num>(r) * factorial_of<Num>(s - r) / denom;
  for (int t = 1; t <= s - r - 1; ++t) {
    const Num inner = factorial_of<Num>(t) * factorial_of<Num>(s - t) +
                      factorial_of<Num>(t + r) * factorial_of<Num>(s - t - r);
    acc -= binomial_of<Num>(s - r, t) * inner / denom;
  }
  return acc;
}

/// Right side of the lemma: (s+1)(r-1) / ((s-1)(r+1)).
template <class Num>
Num lemma_combinatorial_rhs(int s, int r) {
  if (!(1 <= r && r < s)) throw input_error("lemma requires 1 <= r < s");
  return num_traits<Num>::ratio(static_cast<long>(s + 1) * (r - 1),
                                static_cast<long>(s - 1) * (r + 1));
}

/// Evaluates the lemma's summation and checks it against the closed form.
template <class Num>
Num lemma_E(int s, int r) {
  const Num lhs = lemma_combinatorial_lhs<Num>(s, r);
  if (!detail::close(lhs, lemma_combinatorial_rhs<Num>(s, r)))
    throw error("combinatorial lemma mismatch at s=" + std::to_string(s) +
                ", r=" + std::to_string(r));
  return lhs;
}

// ---------------------------------------------------------------------------
// Attitude coincidence for small coalitions.
// ---------------------------------------------------------------------------

/// For |S| <= 3 the uniform and permutation-based attitudes agree for every
/// opponent; the claim does not extend to larger coalitions, so |S| > 3 is
/// out of scope here.
template <class Num>
bool attitude_family_coincidence(const Game<Num>& g, Coalition S) {
  if (S.empty()) throw input_error("attitude is undefined for the empty coalition");
  if (S.size() > 3)
    throw input_error("attitude coincidence is only claimed for |S| <= 3");
  const auto pu = InternalFamily<Num>::uniform();
  const auto pr = InternalFamily<Num>::permutation();
  bool agree = true;
  for_each_subset(g.players().full() - S, [&](Coalition T) {
    if (agree && !detail::close(attitude(g, S, T, pu), attitude(g, S, T, pr)))
      agree = false;
  });
  return agree;
}

// ---------------------------------------------------------------------------
// Per-coalition report.
// ---------------------------------------------------------------------------

template <class Num>
struct IndexReport {
  Coalition coalition;
  Num phi;
  Num coop;
  Num absolute;
  ContributionSummary classification;
  // False when the result can only be read through the monotone lens and the
  // game (or the value) falls outside it.
  bool within_monotone_range = true;
};

template <class Num>
IndexReport<Num> index_report(const Game<Num>& g, Coalition S,
                              const InternalFamily<Num>& internal,
                              const ExternalFamily<Num>& external,
                              bool game_is_monotone) {
  IndexReport<Num> out;
  out.coalition = S;
  out.phi = generalized_value(g, S, external);
  out.coop = coopetition(g, S, internal, external);
  out.absolute = out.phi == num_traits<Num>::from_int(0)
                     ? num_traits<Num>::from_int(0)
                     : out.coop / out.phi;
  out.classification = summarize_contribution(g, S);
  const Num one = num_traits<Num>::from_int(1);
  out.within_monotone_range =
      game_is_monotone && !(one < out.absolute) && !(out.absolute < -one);
  return out;
}

}  // namespace coopet

#endif  // COOPET_INDICES_HPP
