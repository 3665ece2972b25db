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

#ifndef COOPET_DISTRIBUTIONS_HPP
#define COOPET_DISTRIBUTIONS_HPP

#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "coopet/coalition.hpp"
#include "coopet/numeric.hpp"

namespace coopet {

inline constexpr double kFamilyTolerance = 1e-12;

// ---------------------------------------------------------------------------
// Weight primitives.
//
// Internal families distribute over the non-trivial 2-partitions Pi_2(S);
// external families distribute over the subsets of N \ S.
// ---------------------------------------------------------------------------

/// Uniform internal weight 1/(2^{s-1} - 1); the family is vacuous for s <= 1.
template <class Num>
Num p_uniform_weight(int s) {
  if (s < 2) throw input_error("internal family is vacuous for coalitions of size <= 1");
  return num_traits<Num>::from_int(1) / (pow2_of<Num>(s - 1) - num_traits<Num>::from_int(1));
}

/// Permutation-based internal weight 2 r! (s-r)! / ((s-1) s!) for a block of
/// size r (symmetric in the two blocks).
template <class Num>
Num p_permutation_weight(int s, int r) {
  if (s < 2) throw input_error("internal family is vacuous for coalitions of size <= 1");
  if (r < 1 || r > s - 1) throw input_error("partition block size out of range");
  return (num_traits<Num>::from_int(2) * factorial_of<Num>(r) * factorial_of<Num>(s - r)) /
         (num_traits<Num>::from_int(s - 1) * factorial_of<Num>(s));
}

/// Uniform external weight 1/2^{n-s}, independent of T.
template <class Num>
Num q_uniform_weight(int n, int s) {
  if (s < 0 || s > n) throw input_error("coalition size out of range");
  return num_traits<Num>::from_int(1) / pow2_of<Num>(n - s);
}

/// Permutation-induced external weight t! (n-s-t)! / (n-s+1)!.
template <class Num>
Num q_permutation_weight(int n, int s, int t) {
  if (s < 0 || s > n) throw input_error("coalition size out of range");
  if (t < 0 || t > n - s) throw input_error("opponent size out of range");
  return (factorial_of<Num>(t) * factorial_of<Num>(n - s - t)) / factorial_of<Num>(n - s + 1);
}

// ---------------------------------------------------------------------------
// Label-keyed tables for custom families.
//
// Custom families are defined over labels, optionally for several active
// player sets (the base set and restrictions of it). A query on a player set
// that has no table is rejected; built-in families instead re-derive their
// weights from the restricted player count.
// ---------------------------------------------------------------------------

namespace detail {

inline std::string label_key(const PlayerSet& ps, Coalition c) {
  std::string key;
  bool first = true;
  for (int i : c.members()) {
    if (!first) key += ',';
    key += ps.label(i);
    first = false;
  }
  return key;
}

inline std::string partition_key(const PlayerSet& ps, const TwoPartition& pi) {
  return label_key(ps, pi.first) + "|" + label_key(ps, pi.second);
}

inline std::string active_key(const PlayerSet& ps) {
  return label_key(ps, ps.full());
}

}  // namespace detail

// keys: active player set -> coalition S -> (partition or opponent T) -> weight
template <class Num>
using CustomTables = std::map<std::string, std::map<std::string, std::map<std::string, Num>>>;

enum class InternalKind { uniform, permutation, custom };
enum class ExternalKind { uniform, permutation, semivalue, custom };

inline const char* to_string(InternalKind k) {
  switch (k) {
    case InternalKind::uniform: return "uniform";
    case InternalKind::permutation: return "permutation";
    default: return "custom";
  }
}

inline const char* to_string(ExternalKind k) {
  switch (k) {
    case ExternalKind::uniform: return "uniform";
    case ExternalKind::permutation: return "permutation";
    case ExternalKind::semivalue: return "semivalue";
    default: return "custom";
  }
}

/// Rule assigning to each coalition S (|S| >= 2) a probability distribution
/// over Pi_2(S). Immutable value object; weight lookups are pure.
template <class Num>
class InternalFamily {
 public:
  static InternalFamily uniform() { return InternalFamily(InternalKind::uniform); }
  static InternalFamily permutation() { return InternalFamily(InternalKind::permutation); }
  static InternalFamily custom(CustomTables<Num> tables) {
    InternalFamily fam(InternalKind::custom);
    fam.tables_ = std::move(tables);
    return fam;
  }

  InternalKind kind() const { return kind_; }
  const char* name() const { return to_string(kind_); }

  Num weight(const PlayerSet& ps, Coalition S, const TwoPartition& pi) const {
    if (S.size() < 2)
      throw input_error("internal family is vacuous for coalitions of size <= 1");
    const TwoPartition canon = TwoPartition::canonical(pi.first, pi.second);
    if (!(canon.whole() == S) || !ps.valid(S))
      throw input_error("not a 2-partition of the queried coalition");
    switch (kind_) {
      case InternalKind::uniform:
        return p_uniform_weight<Num>(S.size());
      case InternalKind::permutation:
        return p_permutation_weight<Num>(S.size(), canon.first.size());
      case InternalKind::custom:
        return lookup(ps, S, canon);
    }
    throw error("unreachable");
  }

  /// For built-in kinds: weights indexed by the first block's size. Custom
  /// families return nullopt and must be queried per partition.
  std::optional<std::vector<Num>> weights_by_block_size(int s) const {
    if (kind_ == InternalKind::custom) return std::nullopt;
    std::vector<Num> w(s);  // index r in 1..s-1
    for (int r = 1; r <= s - 1; ++r)
      w[r] = kind_ == InternalKind::uniform ? p_uniform_weight<Num>(s)
                                            : p_permutation_weight<Num>(s, r);
    return w;
  }

  const CustomTables<Num>& tables() const { return tables_; }

 private:
  explicit InternalFamily(InternalKind kind) : kind_(kind) {}

  Num lookup(const PlayerSet& ps, Coalition S, const TwoPartition& pi) const {
    const auto active = tables_.find(detail::active_key(ps));
    if (active == tables_.end())
      throw input_error("custom internal family has no table for player set {" +
                        detail::active_key(ps) + "}");
    const auto per_s = active->second.find(detail::label_key(ps, S));
    if (per_s == active->second.end())
      throw input_error("custom internal family has no distribution for coalition {" +
                        detail::label_key(ps, S) + "}");
    const auto w = per_s->second.find(detail::partition_key(ps, pi));
    if (w == per_s->second.end())
      throw input_error("custom internal family has no weight for partition " +
                        detail::partition_key(ps, pi));
    return w->second;
  }

  InternalKind kind_;
  CustomTables<Num> tables_;
};

/// Rule assigning to each coalition S a probability distribution over the
/// subsets of N \ S (probabilistic generalized value weights).
template <class Num>
class ExternalFamily {
 public:
  static ExternalFamily uniform() { return ExternalFamily(ExternalKind::uniform); }
  static ExternalFamily permutation() { return ExternalFamily(ExternalKind::permutation); }
  static ExternalFamily custom(CustomTables<Num> tables) {
    ExternalFamily fam(ExternalKind::custom);
    fam.tables_ = std::move(tables);
    return fam;
  }
  /// Cardinality table q_s^n(t), rows s = 0..n, row s has entries t = 0..n-s.
  static ExternalFamily semivalue(int n, std::vector<std::vector<Num>> rows) {
    if (static_cast<int>(rows.size()) != n + 1)
      throw input_error("semivalue table needs one row per coalition size 0..n");
    for (int s = 0; s <= n; ++s)
      if (static_cast<int>(rows[s].size()) != n - s + 1)
        throw input_error("semivalue row " + std::to_string(s) +
                          " needs entries for t = 0.." + std::to_string(n - s));
    ExternalFamily fam(ExternalKind::semivalue);
    fam.semivalue_n_ = n;
    fam.semivalue_rows_ = std::move(rows);
    return fam;
  }

  ExternalKind kind() const { return kind_; }
  const char* name() const { return to_string(kind_); }

  Num weight(const PlayerSet& ps, Coalition S, Coalition T) const {
    if (!ps.valid(S) || !ps.valid(T) || !S.disjoint_with(T))
      throw input_error("external family queried outside its domain (T must avoid S)");
    const int n = ps.n();
    switch (kind_) {
      case ExternalKind::uniform:
        return q_uniform_weight<Num>(n, S.size());
      case ExternalKind::permutation:
        return q_permutation_weight<Num>(n, S.size(), T.size());
      case ExternalKind::semivalue:
        if (n != semivalue_n_)
          throw input_error(
              "custom semivalue weights are defined for n = " +
              std::to_string(semivalue_n_) + ", not for a player set of size " +
              std::to_string(n));
        return semivalue_rows_[S.size()][T.size()];
      case ExternalKind::custom:
        return lookup(ps, S, T);
    }
    throw error("unreachable");
  }

  /// For size-determined kinds: weights indexed by |T|. Custom families
  /// return nullopt.
  std::optional<std::vector<Num>> weights_by_size(const PlayerSet& ps, int s) const {
    const int n = ps.n();
    if (kind_ == ExternalKind::custom) return std::nullopt;
    std::vector<Num> w;
    w.reserve(n - s + 1);
    for (int t = 0; t <= n - s; ++t) {
      switch (kind_) {
        case ExternalKind::uniform: w.push_back(q_uniform_weight<Num>(n, s)); break;
        case ExternalKind::permutation: w.push_back(q_permutation_weight<Num>(n, s, t)); break;
        default:
          if (n != semivalue_n_)
            throw input_error("custom semivalue weights are not defined for restrictions");
          w.push_back(semivalue_rows_[s][t]);
      }
    }
    return w;
  }

  const CustomTables<Num>& tables() const { return tables_; }

 private:
  explicit ExternalFamily(ExternalKind kind) : kind_(kind) {}

  Num lookup(const PlayerSet& ps, Coalition S, Coalition T) const {
    const auto active = tables_.find(detail::active_key(ps));
    if (active == tables_.end())
      throw input_error("custom external family has no table for player set {" +
                        detail::active_key(ps) + "}");
    const auto per_s = active->second.find(detail::label_key(ps, S));
    if (per_s == active->second.end())
      throw input_error("custom external family has no distribution for coalition {" +
                        detail::label_key(ps, S) + "}");
    const auto w = per_s->second.find(detail::label_key(ps, T));
    if (w == per_s->second.end())
      throw input_error("custom external family has no weight for opponents {" +
                        detail::label_key(ps, T) + "}");
    return w->second;
  }

  ExternalKind kind_;
  CustomTables<Num> tables_;
  int semivalue_n_ = 0;
  std::vector<std::vector<Num>> semivalue_rows_;
};

// ---------------------------------------------------------------------------
// Validation.
// ---------------------------------------------------------------------------

struct FamilyValidation {
  bool ok = true;
  std::string message;  // first violation, empty when ok
};

namespace detail {

template <class Num>
bool sums_to_one(const Num& sum) {
  return num_traits<Num>::near(sum, num_traits<Num>::from_int(1), kFamilyTolerance);
}

template <class Num>
std::string sum_deviation(const Num& sum) {
  std::ostringstream os;
  const Num deficit = num_traits<Num>::from_int(1) - sum;
  os << "sums to " << num_traits<Num>::render(sum) << " (deviation from 1: "
     << num_traits<Num>::render(deficit) << ")";
  return os.str();
}

}  // namespace detail

namespace detail {

inline Coalition canonical_of_size(int s) { return Coalition::full(s); }

template <class Num>
Num binom_count(int n, int k) {
  return binomial_of<Num>(n, k);
}

}  // namespace detail

/// Checks every per-coalition distribution of the internal family on `ps`:
/// non-negative weights summing to 1 over Pi_2(S), for all |S| >= 2. Weights
/// of the built-in families depend only on the block sizes, so their check
/// collapses to one cardinality sum per coalition size.
template <class Num>
FamilyValidation validate_family(const InternalFamily<Num>& fam, const PlayerSet& ps) {
  FamilyValidation report;
  if (fam.kind() != InternalKind::custom) {
    for (int s = 2; s <= ps.n() && report.ok; ++s) {
      const auto w = *fam.weights_by_block_size(s);
      Num sum = num_traits<Num>::from_int(0);
      bool negative = false;
      // Canonical partitions with a first block of size r: C(s-1, r-1).
      for (int r = 1; r <= s - 1; ++r) {
        if (w[r] < num_traits<Num>::from_int(0)) negative = true;
        sum += detail::binom_count<Num>(s - 1, r - 1) * w[r];
      }
      if (negative || !detail::sums_to_one(sum)) {
        report.ok = false;
        report.message =
            "internal distribution for coalition {" +
            detail::label_key(ps, detail::canonical_of_size(s)) + "} " +
            (negative ? std::string("has a negative weight") : detail::sum_deviation(sum));
      }
    }
    return report;
  }
  for_each_subset(ps.full(), [&](Coalition S) {
    if (!report.ok || S.size() < 2) return;
    Num sum = num_traits<Num>::from_int(0);
    bool negative = false;
    for_each_two_partition(S, [&](const TwoPartition& pi) {
      const Num w = fam.weight(ps, S, pi);
      if (w < num_traits<Num>::from_int(0)) negative = true;
      sum += w;
    });
    if (negative) {
      report.ok = false;
      report.message = "internal distribution for coalition {" +
                       detail::label_key(ps, S) + "} has a negative weight";
    } else if (!detail::sums_to_one(sum)) {
      report.ok = false;
      report.message = "internal distribution for coalition {" +
                       detail::label_key(ps, S) + "} " + detail::sum_deviation(sum);
    }
  });
  return report;
}

/// Checks every per-coalition distribution of the external family on `ps`:
/// non-negative weights over the subsets of N \ S summing to 1, for all S.
/// Size-determined kinds are checked through the cardinality normalization
/// sum_t C(n-s, t) q_s^n(t) = 1 for each s.
template <class Num>
FamilyValidation validate_family(const ExternalFamily<Num>& fam, const PlayerSet& ps) {
  FamilyValidation report;
  if (fam.kind() == ExternalKind::semivalue) {
    // A cardinality table for the wrong player count is a validation
    // failure, not an exception.
    try {
      (void)fam.weight(ps, Coalition::empty_set(), Coalition::empty_set());
    } catch (const input_error& e) {
      report.ok = false;
      report.message = e.what();
      return report;
    }
  }
  if (fam.kind() != ExternalKind::custom) {
    const int n = ps.n();
    for (int s = 0; s <= n && report.ok; ++s) {
      const auto w = *fam.weights_by_size(ps, s);
      Num sum = num_traits<Num>::from_int(0);
      bool negative = false;
      for (int t = 0; t <= n - s; ++t) {
        if (w[t] < num_traits<Num>::from_int(0)) negative = true;
        sum += detail::binom_count<Num>(n - s, t) * w[t];
      }
      if (negative || !detail::sums_to_one(sum)) {
        report.ok = false;
        report.message =
            "external distribution for coalition {" +
            detail::label_key(ps, detail::canonical_of_size(s)) + "} " +
            (negative ? std::string("has a negative weight") : detail::sum_deviation(sum));
      }
    }
    return report;
  }
  for_each_subset(ps.full(), [&](Coalition S) {
    if (!report.ok) return;
    Num sum = num_traits<Num>::from_int(0);
    bool negative = false;
    for_each_subset(ps.full() - S, [&](Coalition T) {
      const Num w = fam.weight(ps, S, T);
      if (w < num_traits<Num>::from_int(0)) negative = true;
      sum += w;
    });
    if (negative) {
      report.ok = false;
      report.message = "external distribution for coalition {" +
                       detail::label_key(ps, S) + "} has a negative weight";
    } else if (!detail::sums_to_one(sum)) {
      report.ok = false;
      report.message = "external distribution for coalition {" +
                       detail::label_key(ps, S) + "} " + detail::sum_deviation(sum);
    }
  });
  return report;
}

/// Restriction-consistency of an external family: q^N_S(T) must equal
/// q^{N\S2}_{S1}(T) for every S, every 2-partition {S1, S2} of S and every
/// T <= N \ S. Verified exhaustively for the given player set.
template <class Num>
bool has_charac_property(const ExternalFamily<Num>& fam, const PlayerSet& ps) {
  bool holds = true;
  for_each_subset(ps.full(), [&](Coalition S) {
    if (!holds || S.size() < 2) return;
    for_each_two_partition(S, [&](const TwoPartition& pi) {
      if (!holds) return;
      for (int side = 0; side < 2; ++side) {
        const Coalition kept = side == 0 ? pi.first : pi.second;
        const Coalition removed = side == 0 ? pi.second : pi.first;
        const PlayerSet sub = ps.without(removed);
        const Coalition kept_small = compact_remap(kept, removed);
        for_each_subset(ps.full() - S, [&](Coalition T) {
          if (!holds) return;
          const Num lhs = fam.weight(ps, S, T);
          const Num rhs = fam.weight(sub, kept_small, compact_remap(T, removed));
          if (!num_traits<Num>::near(lhs, rhs, kFamilyTolerance)) holds = false;
        });
      }
    });
  });
  return holds;
}

}  // namespace coopet

#endif  // COOPET_DISTRIBUTIONS_HPP
