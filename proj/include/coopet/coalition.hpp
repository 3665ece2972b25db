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

#ifndef COOPET_COALITION_HPP
#define COOPET_COALITION_HPP

#include <bit>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "coopet/errors.hpp"

namespace coopet {

using Mask = std::uint32_t;

/// Hard cap on the player count: worth tables are dense (2^n entries).
inline constexpr int kMaxPlayers = 24;

/// A coalition over player indices 0..n-1, encoded as a bit pattern
/// (bit i set <=> player i is a member).
class Coalition {
 public:
  constexpr Coalition() = default;
  explicit constexpr Coalition(Mask bits) : bits_(bits) {}

  static constexpr Coalition empty_set() { return Coalition(0); }
  static constexpr Coalition single(int i) { return Coalition(Mask{1} << i); }
  static constexpr Coalition full(int n) {
    return Coalition(n >= 32 ? ~Mask{0} : (Mask{1} << n) - 1);
  }
  static Coalition of(std::initializer_list<int> players) {
    Mask m = 0;
    for (int i : players) m |= Mask{1} << i;
    return Coalition(m);
  }

  constexpr Mask bits() const { return bits_; }
  int size() const { return std::popcount(bits_); }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr bool contains(int i) const { return (bits_ >> i) & 1; }
  constexpr bool subset_of(Coalition o) const { return (bits_ & ~o.bits_) == 0; }
  constexpr bool disjoint_with(Coalition o) const { return (bits_ & o.bits_) == 0; }
  int lowest() const { return std::countr_zero(bits_); }

  constexpr Coalition with(int i) const { return Coalition(bits_ | (Mask{1} << i)); }
  constexpr Coalition without(int i) const { return Coalition(bits_ & ~(Mask{1} << i)); }

  friend constexpr Coalition operator|(Coalition a, Coalition b) {
    return Coalition(a.bits_ | b.bits_);
  }
  friend constexpr Coalition operator&(Coalition a, Coalition b) {
    return Coalition(a.bits_ & b.bits_);
  }
  /// Set difference.
  friend constexpr Coalition operator-(Coalition a, Coalition b) {
    return Coalition(a.bits_ & ~b.bits_);
  }

  std::vector<int> members() const {
    std::vector<int> out;
    out.reserve(size());
    for (Mask m = bits_; m != 0; m &= m - 1) out.push_back(std::countr_zero(m));
    return out;
  }

  friend constexpr auto operator<=>(const Coalition&, const Coalition&) = default;

 private:
  Mask bits_ = 0;
};

/// Unordered non-trivial 2-partition {first, second} of first|second.
/// Canonical form: first holds the lowest-indexed member.
struct TwoPartition {
  Coalition first;
  Coalition second;

  static TwoPartition canonical(Coalition a, Coalition b) {
    if (a.empty() || b.empty()) throw input_error("2-partition blocks must be non-empty");
    if (!a.disjoint_with(b)) throw input_error("2-partition blocks must be disjoint");
    if ((a | b).lowest() == a.lowest()) return {a, b};
    return {b, a};
  }
  Coalition whole() const { return first | second; }
  friend bool operator==(const TwoPartition&, const TwoPartition&) = default;
};

/// The player universe: a count and distinct display labels, index i <-> labels[i].
class PlayerSet {
 public:
  explicit PlayerSet(std::vector<std::string> labels) : labels_(std::move(labels)) {
    if (labels_.empty()) throw input_error("player set must contain at least one player");
    if (static_cast<int>(labels_.size()) > kMaxPlayers)
      throw input_error("player count " + std::to_string(labels_.size()) +
                        " exceeds the cap of " + std::to_string(kMaxPlayers));
    std::set<std::string> seen;
    for (const auto& l : labels_) {
      if (!seen.insert(l).second) throw input_error("duplicate player label '" + l + "'");
    }
  }

  /// Numbered players "1".."n".
  static PlayerSet numbered(int n) {
    std::vector<std::string> labels;
    labels.reserve(n);
    for (int i = 1; i <= n; ++i) labels.push_back(std::to_string(i));
    return PlayerSet(std::move(labels));
  }

  int n() const { return static_cast<int>(labels_.size()); }
  Coalition full() const { return Coalition::full(n()); }
  const std::string& label(int i) const { return labels_[i]; }
  const std::vector<std::string>& labels() const { return labels_; }

  std::optional<int> index_of(const std::string& label) const {
    for (int i = 0; i < n(); ++i)
      if (labels_[i] == label) return i;
    return std::nullopt;
  }

  bool valid(Coalition c) const { return c.subset_of(full()); }

  /// Labels of the members of c, in player order.
  std::vector<std::string> labels_of(Coalition c) const {
    std::vector<std::string> out;
    for (int i : c.members()) out.push_back(labels_[i]);
    return out;
  }

  /// Player set remaining after deleting `removed`; survivors keep their
  /// relative order and labels, indices are compacted.
  PlayerSet without(Coalition removed) const {
    std::vector<std::string> kept;
    for (int i = 0; i < n(); ++i)
      if (!removed.contains(i)) kept.push_back(labels_[i]);
    return PlayerSet(std::move(kept));
  }

  friend bool operator==(const PlayerSet&, const PlayerSet&) = default;

 private:
  std::vector<std::string> labels_;
};

/// Calls f(sub) for every subset of `universe`, in increasing bit-counter
/// order starting with the empty set. The canonical enumeration order.
template <class F>
void for_each_subset(Coalition universe, F&& f) {
  const Mask m = universe.bits();
  Mask sub = 0;
  while (true) {
    f(Coalition(sub));
    sub = (sub - m) & m;
    if (sub == 0) break;
  }
}

/// Calls f(pi) for every non-trivial unordered 2-partition of S, in canonical
/// order (ascending first-block bits). No calls when |S| <= 1.
template <class F>
void for_each_two_partition(Coalition S, F&& f) {
  if (S.size() < 2) return;
  const Coalition low = Coalition::single(S.lowest());
  const Coalition rest = S - low;
  for_each_subset(rest, [&](Coalition u) {
    const Coalition first = low | u;
    if (first == S) return;  // second block would be empty
    f(TwoPartition{first, S - first});
  });
}

inline std::vector<TwoPartition> enumerate_two_partitions(Coalition S) {
  std::vector<TwoPartition> out;
  for_each_two_partition(S, [&](const TwoPartition& pi) { out.push_back(pi); });
  return out;
}

/// Reindexes x (defined over the original player set) into the compacted
/// index space that remains after deleting `removed`. Requires x, removed
/// disjoint.
inline Coalition compact_remap(Coalition x, Coalition removed) {
  if (!x.disjoint_with(removed))
    throw input_error("cannot remap a coalition that overlaps the removed players");
  Mask out = 0;
  for (int b : x.members()) {
    const int shifted = b - std::popcount(removed.bits() & ((Mask{1} << b) - 1));
    out |= Mask{1} << shifted;
  }
  return Coalition(out);
}

}  // namespace coopet

#endif  // COOPET_COALITION_HPP
