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

#ifndef COOPET_IO_HPP
#define COOPET_IO_HPP

#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "coopet/distributions.hpp"
#include "coopet/game.hpp"

namespace coopet {

inline constexpr const char* kGameFormatTag = "coopet/1";
inline constexpr const char* kFamilyFormatTag = "coopet-family/1";

namespace detail {

using nlohmann::json;

inline json parse_json(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw parse_error(std::string("document is not valid JSON: ") + e.what());
  }
}

/// Numeric document values: JSON strings ("p" / "p/q") always work; plain
/// JSON numbers must be integers in exact mode (floats would corrupt), any
/// number in float mode.
template <class Num>
Num parse_value(const json& v, const std::string& where) {
  if (v.is_string()) return num_traits<Num>::parse(v.get<std::string>());
  if (v.is_number_integer())
    return num_traits<Num>::from_int(v.get<long>());
  if (v.is_number()) {
    if constexpr (num_traits<Num>::exact) {
      throw parse_error(where +
                        ": non-integer literals are not exact; use a \"num/den\" "
                        "string or float mode");
    } else {
      return v.get<double>();
    }
  }
  throw parse_error(where + ": expected a number or a \"num/den\" string");
}

template <class Num>
json render_value(const Num& v) {
  if constexpr (num_traits<Num>::exact) {
    return num_traits<Num>::render(v);
  } else {
    return v;
  }
}

inline std::vector<std::string> split_key(const std::string& key) {
  std::vector<std::string> out;
  if (key.empty()) return out;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = key.find(',', start);
    if (comma == std::string::npos) {
      out.push_back(key.substr(start));
      return out;
    }
    out.push_back(key.substr(start, comma - start));
    start = comma + 1;
  }
}

inline PlayerSet parse_players(const json& doc) {
  if (!doc.contains("players") || !doc["players"].is_array())
    throw parse_error("document needs a \"players\" array of labels");
  std::vector<std::string> labels;
  for (const auto& p : doc["players"]) {
    if (!p.is_string()) throw parse_error("player labels must be strings");
    labels.push_back(p.get<std::string>());
  }
  return PlayerSet(std::move(labels));
}

inline Coalition coalition_from_labels(const PlayerSet& ps,
                                       const std::vector<std::string>& labels,
                                       const std::string& where) {
  Coalition c;
  for (const auto& l : labels) {
    const auto idx = ps.index_of(l);
    if (!idx) throw parse_error(where + ": unknown player label '" + l + "'");
    if (c.contains(*idx))
      throw parse_error(where + ": repeated player label '" + l + "'");
    c = c.with(*idx);
  }
  return c;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Game documents ("coopet/1").
// ---------------------------------------------------------------------------

/// Parses a "coopet/1" game document. The worth table comes either as
/// "dense" (2^n values in bitmask-counter order) or "sparse" (entries with a
/// coalition label list and a value; omitted coalitions default to 0).
/// In strict mode a sparse document must cover every non-empty coalition.
/// Monotonicity is computed and attached to the returned game.
template <class Num>
Game<Num> parse_game_document(const std::string& text, bool strict = false) {
  const auto doc = detail::parse_json(text);
  if (!doc.is_object() || doc.value("format", "") != kGameFormatTag)
    throw parse_error(std::string("game document must carry \"format\": \"") +
                      kGameFormatTag + "\"");
  const PlayerSet ps = detail::parse_players(doc);
  const std::size_t table_size = std::size_t{1} << ps.n();

  const bool has_dense = doc.contains("dense");
  const bool has_sparse = doc.contains("sparse");
  if (has_dense == has_sparse)
    throw parse_error("game document needs exactly one of \"dense\" or \"sparse\"");

  std::vector<Num> worth(table_size, num_traits<Num>::from_int(0));
  if (has_dense) {
    const auto& arr = doc["dense"];
    if (!arr.is_array() || arr.size() != table_size)
      throw parse_error("\"dense\" must list exactly 2^n = " +
                        std::to_string(table_size) + " values");
    for (std::size_t i = 0; i < table_size; ++i)
      worth[i] = detail::parse_value<Num>(arr[i], "dense[" + std::to_string(i) + "]");
    if (!(worth[0] == num_traits<Num>::from_int(0)))
      throw parse_error("the empty coalition (dense[0]) must have worth 0");
  } else {
    const auto& arr = doc["sparse"];
    if (!arr.is_array()) throw parse_error("\"sparse\" must be an array of entries");
    std::set<Mask> seen;
    for (const auto& entry : arr) {
      if (!entry.is_object() || !entry.contains("coalition") || !entry.contains("value"))
        throw parse_error("sparse entries need \"coalition\" and \"value\"");
      std::vector<std::string> labels;
      for (const auto& l : entry["coalition"]) {
        if (!l.is_string()) throw parse_error("coalition labels must be strings");
        labels.push_back(l.get<std::string>());
      }
      const Coalition c = detail::coalition_from_labels(ps, labels, "sparse entry");
      if (!seen.insert(c.bits()).second)
        throw parse_error("duplicate sparse entry for a coalition");
      const Num value = detail::parse_value<Num>(entry["value"], "sparse value");
      if (c.empty() && !(value == num_traits<Num>::from_int(0)))
        throw parse_error("the empty coalition must have worth 0");
      worth[c.bits()] = value;
    }
    const std::size_t listed_nonempty = seen.size() - seen.count(0);
    if (strict && listed_nonempty < table_size - 1)
      throw parse_error("strict mode: sparse document must list every non-empty coalition");
  }

  Game<Num> g(ps, std::move(worth));
  return g.with_monotone_hint(g.is_monotone());
}

template <class Num>
nlohmann::json game_document_json(const Game<Num>& g, bool dense = true) {
  nlohmann::json doc;
  doc["format"] = kGameFormatTag;
  doc["players"] = g.players().labels();
  if (dense) {
    nlohmann::json table = nlohmann::json::array();
    for (const Num& v : g.worth_table()) table.push_back(detail::render_value(v));
    doc["dense"] = std::move(table);
  } else {
    nlohmann::json entries = nlohmann::json::array();
    for (Mask s = 1; s < (Mask{1} << g.n()); ++s) {
      const Coalition S(s);
      if (g.worth(S) == num_traits<Num>::from_int(0)) continue;
      entries.push_back({{"coalition", g.players().labels_of(S)},
                         {"value", detail::render_value(g.worth(S))}});
    }
    doc["sparse"] = std::move(entries);
  }
  return doc;
}

template <class Num>
std::string serialize_game_document(const Game<Num>& g, bool dense = true,
                                    int indent = 2) {
  return game_document_json(g, dense).dump(indent);
}

// ---------------------------------------------------------------------------
// Family files ("coopet-family/1").
// ---------------------------------------------------------------------------

namespace detail {

// Shared loader for the label-keyed custom tables. Keys:
//   active player set -> "a,b,c"; coalition -> "a,b" ("" is empty);
//   internal partitions -> "a|b,c".
template <class Num>
CustomTables<Num> parse_custom_tables(const json& doc, const PlayerSet& base,
                                      bool internal) {
  if (!doc.contains("tables") || !doc["tables"].is_object())
    throw parse_error("custom family file needs a \"tables\" object");
  CustomTables<Num> tables;
  for (const auto& [active_key, per_s] : doc["tables"].items()) {
    const Coalition active =
        coalition_from_labels(base, split_key(active_key), "active set '" + active_key + "'");
    const PlayerSet active_ps = base.without(base.full() - active);
    if (label_key(active_ps, active_ps.full()) != active_key)
      throw parse_error("active set '" + active_key +
                        "' must list labels in base player order");
    if (!per_s.is_object())
      throw parse_error("table for active set '" + active_key + "' must be an object");
    for (const auto& [s_key, weights] : per_s.items()) {
      const Coalition S = coalition_from_labels(active_ps, split_key(s_key),
                                                "coalition '" + s_key + "'");
      if (label_key(active_ps, S) != s_key)
        throw parse_error("coalition key '" + s_key + "' must follow player order");
      if (!weights.is_object())
        throw parse_error("weights for coalition '" + s_key + "' must be an object");
      for (const auto& [w_key, value] : weights.items()) {
        const std::string where = "weight '" + w_key + "' of coalition '" + s_key + "'";
        if (internal) {
          const auto bar = w_key.find('|');
          if (bar == std::string::npos)
            throw parse_error(where + ": internal keys look like \"block|block\"");
          const Coalition a = coalition_from_labels(
              active_ps, split_key(w_key.substr(0, bar)), where);
          const Coalition b = coalition_from_labels(
              active_ps, split_key(w_key.substr(bar + 1)), where);
          const TwoPartition pi = TwoPartition::canonical(a, b);
          if (!(pi.whole() == S))
            throw parse_error(where + ": blocks must partition the coalition");
          tables[active_key][s_key][partition_key(active_ps, pi)] =
              parse_value<Num>(value, where);
        } else {
          const Coalition T =
              coalition_from_labels(active_ps, split_key(w_key), where);
          if (!T.disjoint_with(S))
            throw parse_error(where + ": opponents must avoid the coalition");
          tables[active_key][s_key][label_key(active_ps, T)] =
              parse_value<Num>(value, where);
        }
      }
    }
  }
  return tables;
}

}  // namespace detail

/// Parses a "coopet-family/1" file with kind "internal".
template <class Num>
InternalFamily<Num> parse_internal_family(const std::string& text) {
  const auto doc = detail::parse_json(text);
  if (!doc.is_object() || doc.value("format", "") != kFamilyFormatTag)
    throw parse_error(std::string("family file must carry \"format\": \"") +
                      kFamilyFormatTag + "\"");
  if (doc.value("kind", "") != "internal")
    throw parse_error("expected a family file with \"kind\": \"internal\"");
  const PlayerSet base = detail::parse_players(doc);
  return InternalFamily<Num>::custom(detail::parse_custom_tables<Num>(doc, base, true));
}

/// Parses a "coopet-family/1" file with kind "external" (label-keyed tables)
/// or "semivalue" (a cardinality table q_s^n(t)).
template <class Num>
ExternalFamily<Num> parse_external_family(const std::string& text) {
  const auto doc = detail::parse_json(text);
  if (!doc.is_object() || doc.value("format", "") != kFamilyFormatTag)
    throw parse_error(std::string("family file must carry \"format\": \"") +
                      kFamilyFormatTag + "\"");
  const std::string kind = doc.value("kind", "");
  if (kind == "external") {
    const PlayerSet base = detail::parse_players(doc);
    return ExternalFamily<Num>::custom(detail::parse_custom_tables<Num>(doc, base, false));
  }
  if (kind == "semivalue") {
    if (!doc.contains("n") || !doc["n"].is_number_integer())
      throw parse_error("semivalue family needs the player count \"n\"");
    const int n = doc["n"].get<int>();
    if (n < 1 || n > kMaxPlayers) throw parse_error("semivalue \"n\" out of range");
    if (!doc.contains("rows") || !doc["rows"].is_array())
      throw parse_error("semivalue family needs \"rows\": one row per coalition size");
    std::vector<std::vector<Num>> rows;
    for (const auto& row : doc["rows"]) {
      if (!row.is_array()) throw parse_error("semivalue rows must be arrays");
      std::vector<Num> parsed;
      for (const auto& v : row)
        parsed.push_back(detail::parse_value<Num>(v, "semivalue row entry"));
      rows.push_back(std::move(parsed));
    }
    return ExternalFamily<Num>::semivalue(n, std::move(rows));
  }
  throw parse_error("expected \"kind\": \"external\" or \"semivalue\"");
}

}  // namespace coopet

#endif  // COOPET_IO_HPP
