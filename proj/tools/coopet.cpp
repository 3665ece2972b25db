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
// coopet: coopetition-index engine for TU games.
//
// Exit codes: 0 success, 1 computation/axiom failure, 2 input error.

#include <atomic>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "coopet/axioms.hpp"
#include "coopet/generators.hpp"
#include "coopet/indices.hpp"
#include "coopet/io.hpp"

namespace {

using nlohmann::json;
using namespace coopet;

constexpr int kDefaultTableCap = 16;

struct Options {
  std::string command;
  std::string game_file;
  std::string coalition;
  std::string opponent;
  bool all = false;
  int size_sel = -1;
  std::string internal_spec;
  std::string external_spec;
  std::string preset;
  std::string mode = "exact";
  std::string format = "pretty";
  bool strict = false;
  int jobs = 1;
  std::uint64_t seed = 20260808;
  int max_n = 0;  // 0: use env or default cap
  // check-axioms
  std::string variant = "uniform";
  int axiom_n = 5;
  int randoms = 25;
  int trials = 50;
  // generate
  std::string kind;
  int gen_n = 3;
  std::string members;
  std::string quota;
  std::string weights;
};

// ---------------------------------------------------------------------------
// Small presentation helpers.
// ---------------------------------------------------------------------------

struct TextTable {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
};

std::string csv_quote(const std::string& field) {
  if (field.find_first_of(",\"\n") == std::string::npos) return field;
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

void write_csv(const TextTable& t, std::ostream& os) {
  for (std::size_t i = 0; i < t.header.size(); ++i)
    os << (i ? "," : "") << csv_quote(t.header[i]);
  os << "\n";
  for (const auto& row : t.rows) {
    for (std::size_t i = 0; i < row.size(); ++i)
      os << (i ? "," : "") << csv_quote(row[i]);
    os << "\n";
  }
}

void write_pretty(const TextTable& t, std::ostream& os) {
  std::vector<std::size_t> width(t.header.size());
  for (std::size_t i = 0; i < t.header.size(); ++i) width[i] = t.header[i].size();
  for (const auto& row : t.rows)
    for (std::size_t i = 0; i < row.size(); ++i)
      width[i] = std::max(width[i], row[i].size());
  auto line = [&](const std::vector<std::string>& row) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      os << row[i] << std::string(width[i] - row[i].size(), ' ');
      os << (i + 1 < row.size() ? "  " : "");
    }
    os << "\n";
  };
  line(t.header);
  std::string rule;
  for (std::size_t i = 0; i < width.size(); ++i)
    rule += std::string(width[i], '-') + (i + 1 < width.size() ? "  " : "");
  os << rule << "\n";
  for (const auto& row : t.rows) line(row);
}

void emit(const Options& opt, const json& report, const TextTable& table) {
  if (opt.format == "json") {
    std::cout << report.dump(2) << "\n";
  } else if (opt.format == "csv") {
    write_csv(table, std::cout);
  } else {
    write_pretty(table, std::cout);
  }
}

std::string join_labels(const std::vector<std::string>& labels) {
  std::string out;
  for (std::size_t i = 0; i < labels.size(); ++i) out += (i ? "," : "") + labels[i];
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw input_error("cannot open file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::vector<std::string> split_commas(const std::string& text) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : text) {
    if (c == ',') {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  if (!cur.empty() || !text.empty()) out.push_back(cur);
  return out;
}

int table_cap(const Options& opt) {
  if (opt.max_n > 0) return opt.max_n;
  if (const char* env = std::getenv("COOPET_MAX_N")) {
    try {
      return std::stoi(env);
    } catch (const std::exception&) {
      throw input_error("COOPET_MAX_N is not a number");
    }
  }
  return kDefaultTableCap;
}

// ---------------------------------------------------------------------------
// Mode-templated command bodies.
// ---------------------------------------------------------------------------

template <class Num>
struct Families {
  InternalFamily<Num> internal = InternalFamily<Num>::uniform();
  ExternalFamily<Num> external = ExternalFamily<Num>::uniform();
  std::string internal_desc = "uniform";
  std::string external_desc = "uniform";
};

template <class Num>
Families<Num> resolve_families(const Options& opt, const PlayerSet& ps) {
  Families<Num> fams;
  std::string internal_spec = opt.internal_spec;
  std::string external_spec = opt.external_spec;
  if (!opt.preset.empty()) {
    if (opt.preset == "banzhaf") {
      internal_spec = internal_spec.empty() ? "uniform" : internal_spec;
      external_spec = external_spec.empty() ? "uniform" : external_spec;
    } else if (opt.preset == "so") {
      internal_spec = internal_spec.empty() ? "perm" : internal_spec;
      external_spec = external_spec.empty() ? "perm" : external_spec;
    } else if (opt.preset == "su") {
      internal_spec = internal_spec.empty() ? "uniform" : internal_spec;
      external_spec = external_spec.empty() ? "perm" : external_spec;
    } else {
      throw input_error("unknown preset '" + opt.preset + "' (banzhaf, so, su)");
    }
  }
  if (internal_spec.empty()) internal_spec = "uniform";
  if (external_spec.empty()) external_spec = "uniform";

  auto custom_path = [](const std::string& spec) {
    return spec.rfind("custom:", 0) == 0 ? spec.substr(7) : std::string();
  };

  if (internal_spec == "uniform") {
    fams.internal = InternalFamily<Num>::uniform();
  } else if (internal_spec == "perm" || internal_spec == "permutation") {
    fams.internal = InternalFamily<Num>::permutation();
  } else if (!custom_path(internal_spec).empty()) {
    fams.internal = parse_internal_family<Num>(read_file(custom_path(internal_spec)));
  } else {
    throw input_error("unknown internal family '" + internal_spec +
                      "' (uniform, perm, custom:FILE)");
  }
  fams.internal_desc = internal_spec;

  if (external_spec == "uniform") {
    fams.external = ExternalFamily<Num>::uniform();
  } else if (external_spec == "perm" || external_spec == "permutation") {
    fams.external = ExternalFamily<Num>::permutation();
  } else if (!custom_path(external_spec).empty()) {
    fams.external = parse_external_family<Num>(read_file(custom_path(external_spec)));
  } else {
    throw input_error("unknown external family '" + external_spec +
                      "' (uniform, perm, custom:FILE)");
  }
  fams.external_desc = external_spec;

  // Families must validate before any computation. Size-determined kinds
  // collapse to a per-size check; only label-keyed customs need the full
  // per-coalition scan, and those are small by construction.
  {
    const auto r = validate_family(fams.internal, ps);
    if (!r.ok) throw input_error("internal family invalid: " + r.message);
  }
  {
    const auto r = validate_family(fams.external, ps);
    if (!r.ok) throw input_error("external family invalid: " + r.message);
  }
  return fams;
}

template <class Num>
Game<Num> load_game(const Options& opt) {
  if (opt.game_file.empty()) throw input_error("this command needs --game FILE");
  return parse_game_document<Num>(read_file(opt.game_file), opt.strict);
}

template <class Num>
std::vector<Coalition> select_coalitions(const Options& opt, const Game<Num>& g) {
  std::vector<Coalition> out;
  if (opt.all) {
    for_each_subset(g.players().full(), [&](Coalition S) {
      if (!S.empty()) out.push_back(S);
    });
    return out;
  }
  if (opt.size_sel >= 0) {
    if (opt.size_sel < 1 || opt.size_sel > g.n())
      throw input_error("--size must be between 1 and n");
    for_each_subset(g.players().full(), [&](Coalition S) {
      if (S.size() == opt.size_sel) out.push_back(S);
    });
    return out;
  }
  if (opt.coalition.empty())
    throw input_error("select coalitions with --coalition LABELS, --all or --size K");
  Coalition c;
  for (const auto& label : split_commas(opt.coalition)) {
    const auto idx = g.players().index_of(label);
    if (!idx) throw input_error("unknown player label '" + label + "'");
    c = c.with(*idx);
  }
  if (c.empty()) throw input_error("the selected coalition is empty");
  out.push_back(c);
  return out;
}

template <class Num>
Coalition parse_opponent(const Options& opt, const Game<Num>& g, Coalition S) {
  Coalition T;
  for (const auto& label : split_commas(opt.opponent)) {
    const auto idx = g.players().index_of(label);
    if (!idx) throw input_error("unknown player label '" + label + "'");
    T = T.with(*idx);
  }
  if (!T.disjoint_with(S))
    throw input_error("the opponent coalition must avoid the selected coalition");
  return T;
}

template <class Num>
json row_json(const Game<Num>& g, const IndexReport<Num>& r) {
  json row;
  row["coalition"] = g.players().labels_of(r.coalition);
  row["size"] = r.coalition.size();
  row["phi"] = coopet::detail::render_value(r.phi);
  row["coop"] = coopet::detail::render_value(r.coop);
  row["absolute"] = coopet::detail::render_value(r.absolute);
  row["classification"] = r.classification.overall();
  row["classification_counts"] = {
      {"essential", r.classification.essential},
      {"fully_complementary", r.classification.fully_complementary},
      {"mixed", r.classification.mixed},
      {"not_contributing", r.classification.not_contributing}};
  if (!r.within_monotone_range)
    row["range_note"] = "outside the monotone interpretation";
  return row;
}

template <class Num>
json report_header(const Options& opt, const Game<Num>& g, const Families<Num>& fams) {
  json doc;
  doc["format"] = "coopet-report/1";
  doc["command"] = opt.command;
  doc["mode"] = num_traits<Num>::mode_name();
  doc["internal"] = fams.internal_desc;
  doc["external"] = fams.external_desc;
  doc["players"] = g.players().labels();
  doc["monotone"] = g.is_monotone();
  return doc;
}

template <class Num>
int cmd_compute_or_table(const Options& opt) {
  const Game<Num> g = load_game<Num>(opt);
  if (opt.command == "table") {
    const int cap = table_cap(opt);
    if (g.n() > cap)
      throw input_error("table refused: n = " + std::to_string(g.n()) +
                        " exceeds the cap of " + std::to_string(cap) +
                        " (raise with --max-n or COOPET_MAX_N)");
  }
  const Families<Num> fams = resolve_families<Num>(opt, g.players());
  std::vector<Coalition> targets;
  if (opt.command == "table") {
    Options all = opt;
    all.all = true;
    targets = select_coalitions(all, g);
  } else {
    targets = select_coalitions(opt, g);
  }
  const bool monotone = g.is_monotone();

  std::vector<IndexReport<Num>> results(targets.size());
  const int jobs = std::max(1, opt.jobs);
  if (jobs == 1 || targets.size() < 2) {
    for (std::size_t i = 0; i < targets.size(); ++i)
      results[i] = index_report(g, targets[i], fams.internal, fams.external, monotone);
  } else {
    // Fan out per coalition; rows are assembled by index, so the output is
    // identical for any worker count.
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> workers;
    std::vector<std::exception_ptr> errors(jobs);
    for (int w = 0; w < jobs; ++w) {
      workers.emplace_back([&, w] {
        try {
          while (true) {
            const std::size_t i = next.fetch_add(1);
            if (i >= targets.size()) break;
            results[i] = index_report(g, targets[i], fams.internal, fams.external, monotone);
          }
        } catch (...) {
          errors[w] = std::current_exception();
        }
      });
    }
    for (auto& t : workers) t.join();
    for (const auto& e : errors)
      if (e) std::rethrow_exception(e);
  }

  json doc = report_header(opt, g, fams);
  doc["rows"] = json::array();
  TextTable table;
  table.header = {"coalition", "size", "phi", "coop", "absolute", "classification"};
  for (std::size_t i = 0; i < targets.size(); ++i) {
    doc["rows"].push_back(row_json(g, results[i]));
    table.rows.push_back({join_labels(g.players().labels_of(results[i].coalition)),
                          std::to_string(results[i].coalition.size()),
                          num_traits<Num>::render(results[i].phi),
                          num_traits<Num>::render(results[i].coop),
                          num_traits<Num>::render(results[i].absolute),
                          results[i].classification.overall()});
  }
  emit(opt, doc, table);
  return 0;
}

template <class Num>
int cmd_attitude(const Options& opt) {
  const Game<Num> g = load_game<Num>(opt);
  const Families<Num> fams = resolve_families<Num>(opt, g.players());
  const auto targets = select_coalitions(opt, g);
  if (targets.size() != 1)
    throw input_error("attitude needs a single coalition (--coalition LABELS)");
  const Coalition S = targets[0];

  json doc = report_header(opt, g, fams);
  doc["coalition"] = g.players().labels_of(S);
  doc["rows"] = json::array();
  TextTable table;
  table.header = {"opponent", "attitude", "classification"};
  auto add_row = [&](Coalition T) {
    const Num a = attitude(g, S, T, fams.internal);
    const auto cls = classify_contributing(g, S, T);
    json row;
    row["opponent"] = g.players().labels_of(T);
    row["attitude"] = coopet::detail::render_value(a);
    row["classification"] = to_string(cls);
    doc["rows"].push_back(row);
    table.rows.push_back({join_labels(g.players().labels_of(T)),
                          num_traits<Num>::render(a), to_string(cls)});
  };
  if (!opt.opponent.empty()) {
    add_row(parse_opponent(opt, g, S));
  } else {
    for_each_subset(g.players().full() - S, add_row);
  }
  emit(opt, doc, table);
  return 0;
}

template <class Num>
int cmd_classify(const Options& opt) {
  const Game<Num> g = load_game<Num>(opt);
  const auto targets = select_coalitions(opt, g);
  if (targets.size() != 1)
    throw input_error("classify needs a single coalition (--coalition LABELS)");
  const Coalition S = targets[0];

  json doc;
  doc["format"] = "coopet-report/1";
  doc["command"] = "classify";
  doc["mode"] = num_traits<Num>::mode_name();
  doc["players"] = g.players().labels();
  doc["monotone"] = g.is_monotone();
  doc["coalition"] = g.players().labels_of(S);
  doc["rows"] = json::array();
  TextTable table;
  table.header = {"opponent", "marginal", "classification"};
  for_each_subset(g.players().full() - S, [&](Coalition T) {
    const Num m = g.marginal(S, T);
    const auto cls = classify_contributing(g, S, T);
    json row;
    row["opponent"] = g.players().labels_of(T);
    row["marginal"] = coopet::detail::render_value(m);
    row["classification"] = to_string(cls);
    doc["rows"].push_back(row);
    table.rows.push_back({join_labels(g.players().labels_of(T)),
                          num_traits<Num>::render(m), to_string(cls)});
  });
  const auto summary = summarize_contribution(g, S);
  doc["summary"] = summary.overall();
  emit(opt, doc, table);
  return 0;
}

template <class Num>
int cmd_mobius(const Options& opt) {
  const Game<Num> g = load_game<Num>(opt);
  const std::vector<Num> d = g.mobius_dividends();
  const std::vector<Num> back = zeta_reconstruct(d, g.n());
  const bool ok = back == g.worth_table();

  json doc;
  doc["format"] = "coopet-report/1";
  doc["command"] = "mobius";
  doc["mode"] = num_traits<Num>::mode_name();
  doc["players"] = g.players().labels();
  doc["reconstruction_ok"] = ok;
  doc["dividends"] = json::array();
  TextTable table;
  table.header = {"coalition", "dividend"};
  for (Mask c = 1; c < d.size(); ++c) {
    if (d[c] == num_traits<Num>::from_int(0)) continue;
    json row;
    row["coalition"] = g.players().labels_of(Coalition(c));
    row["value"] = coopet::detail::render_value(d[c]);
    doc["dividends"].push_back(row);
    table.rows.push_back({join_labels(g.players().labels_of(Coalition(c))),
                          num_traits<Num>::render(d[c])});
  }
  emit(opt, doc, table);
  return ok ? 0 : 1;
}

template <class Num>
int cmd_check_axioms(const Options& opt) {
  SuiteVariant variant;
  if (opt.variant == "uniform") {
    variant = SuiteVariant::uniform;
  } else if (opt.variant == "permutation" || opt.variant == "perm") {
    variant = SuiteVariant::permutation;
  } else {
    throw input_error("unknown variant '" + opt.variant + "' (uniform, permutation)");
  }
  IndependenceSuiteOptions suite_opt;
  suite_opt.max_n = opt.axiom_n;
  suite_opt.randoms_per_n = opt.randoms;
  suite_opt.linearity_trials = opt.trials;
  suite_opt.seed = opt.seed;
  const auto result = independence_suite<Num>(variant, suite_opt);

  json doc;
  doc["format"] = "coopet-report/1";
  doc["command"] = "check-axioms";
  doc["variant"] = to_string(result.variant);
  doc["seed"] = suite_opt.seed;
  doc["pattern_ok"] = result.pattern_ok;
  doc["rows"] = json::array();
  TextTable table;
  table.header = {"index", "axiom", "expected", "holds", "witness"};
  for (const auto& row : result.rows) {
    json jrow;
    jrow["index"] = row.index_name;
    jrow["axioms"] = json::array();
    for (const auto& cell : row.cells) {
      json jcell;
      jcell["axiom"] = to_string(cell.axiom);
      jcell["expected"] = cell.expected;
      jcell["holds"] = cell.holds;
      if (!cell.holds) jcell["witness"] = cell.witness;
      jrow["axioms"].push_back(jcell);
      table.rows.push_back({row.index_name, to_string(cell.axiom),
                            cell.expected ? "pass" : "fail",
                            cell.holds ? "pass" : "fail",
                            cell.holds ? "" : cell.witness});
    }
    doc["rows"].push_back(jrow);
  }
  emit(opt, doc, table);
  return result.pattern_ok ? 0 : 1;
}

template <class Num>
int cmd_generate(const Options& opt) {
  Game<Num> g = [&] {
    if (opt.kind == "unanimity") {
      const PlayerSet ps = PlayerSet::numbered(opt.gen_n);
      Coalition C = ps.full();
      if (!opt.members.empty()) {
        C = Coalition();
        for (const auto& label : split_commas(opt.members)) {
          const auto idx = ps.index_of(label);
          if (!idx) throw input_error("unknown player label '" + label + "'");
          C = C.with(*idx);
        }
      }
      return unanimity_game<Num>(ps, C);
    }
    if (opt.kind == "weighted-majority") {
      if (opt.weights.empty())
        throw input_error("weighted-majority needs --weights w1,w2,...");
      std::vector<Num> ws;
      for (const auto& w : split_commas(opt.weights))
        ws.push_back(num_traits<Num>::parse(w));
      if (opt.quota.empty()) throw input_error("weighted-majority needs --quota Q");
      const PlayerSet ps = PlayerSet::numbered(static_cast<int>(ws.size()));
      return weighted_majority_game<Num>(ps, num_traits<Num>::parse(opt.quota), ws);
    }
    if (opt.kind == "random-monotone") {
      return random_monotone_game<Num>(PlayerSet::numbered(opt.gen_n), opt.seed);
    }
    throw input_error("unknown kind '" + opt.kind +
                      "' (unanimity, weighted-majority, random-monotone)");
  }();
  std::cout << serialize_game_document(g) << "\n";
  return 0;
}

template <class Num>
int cmd_validate(const Options& opt) {
  json doc;
  doc["format"] = "coopet-report/1";
  doc["command"] = "validate";
  doc["mode"] = num_traits<Num>::mode_name();
  TextTable table;
  table.header = {"subject", "ok", "detail"};
  bool all_ok = true;

  if (opt.game_file.empty()) throw input_error("validate needs --game FILE");
  const Game<Num> g = load_game<Num>(opt);
  doc["game"] = {{"players", g.players().labels()},
                 {"monotone", g.is_monotone()},
                 {"ok", true}};
  table.rows.push_back({"game", "yes", g.is_monotone() ? "monotone" : "not monotone"});

  Families<Num> fams;
  try {
    // Resolution validates custom families; report instead of aborting.
    fams = resolve_families<Num>(opt, g.players());
  } catch (const input_error& e) {
    doc["families"] = {{"ok", false}, {"message", e.what()}};
    doc["ok"] = false;
    table.rows.push_back({"families", "no", e.what()});
    emit(opt, doc, table);
    return 2;
  }
  const auto internal_report = validate_family(fams.internal, g.players());
  const auto external_report = validate_family(fams.external, g.players());
  doc["internal"] = {{"kind", fams.internal_desc},
                     {"ok", internal_report.ok},
                     {"message", internal_report.message}};
  doc["external"] = {{"kind", fams.external_desc},
                     {"ok", external_report.ok},
                     {"message", external_report.message}};
  table.rows.push_back({"internal (" + fams.internal_desc + ")",
                        internal_report.ok ? "yes" : "no", internal_report.message});
  table.rows.push_back({"external (" + fams.external_desc + ")",
                        external_report.ok ? "yes" : "no", external_report.message});
  all_ok = all_ok && internal_report.ok && external_report.ok;
  doc["ok"] = all_ok;
  emit(opt, doc, table);
  return all_ok ? 0 : 2;
}

template <class Num>
int dispatch(const Options& opt) {
  if (opt.command == "compute" || opt.command == "table")
    return cmd_compute_or_table<Num>(opt);
  if (opt.command == "attitude") return cmd_attitude<Num>(opt);
  if (opt.command == "classify") return cmd_classify<Num>(opt);
  if (opt.command == "mobius") return cmd_mobius<Num>(opt);
  if (opt.command == "check-axioms") return cmd_check_axioms<Num>(opt);
  if (opt.command == "generate") return cmd_generate<Num>(opt);
  if (opt.command == "validate") return cmd_validate<Num>(opt);
  throw input_error("unknown command");
}

}  // namespace

int main(int argc, char** argv) {
  Options opt;
  CLI::App app{"coopet: exact coopetition-index engine for TU games"};
  app.require_subcommand(1);

  auto add_common = [&](CLI::App* cmd, bool with_families) {
    cmd->add_option("--mode", opt.mode, "numeric mode: exact (default) or float")
        ->check(CLI::IsMember({"exact", "float"}));
    cmd->add_option("--format", opt.format, "output format: pretty, json, csv")
        ->check(CLI::IsMember({"pretty", "json", "csv"}));
    if (with_families) {
      cmd->add_option("--internal", opt.internal_spec,
                      "internal family: uniform, perm, custom:FILE");
      cmd->add_option("--external", opt.external_spec,
                      "external family: uniform, perm, custom:FILE");
      cmd->add_option("--preset", opt.preset,
                      "family pair preset: banzhaf (pu,qu), so (pr,qr), su (pu,qr)")
          ->check(CLI::IsMember({"banzhaf", "so", "su"}));
    }
  };
  auto add_game = [&](CLI::App* cmd) {
    cmd->add_option("--game", opt.game_file, "game document (coopet/1 JSON)");
    cmd->add_flag("--strict", opt.strict, "sparse documents must list every coalition");
  };
  auto add_selector = [&](CLI::App* cmd) {
    cmd->add_option("--coalition", opt.coalition, "coalition as comma-separated labels");
    cmd->add_flag("--all", opt.all, "every non-empty coalition");
    cmd->add_option("--size", opt.size_sel, "every coalition of this size");
  };

  CLI::App* compute = app.add_subcommand("compute", "indices for selected coalitions");
  add_game(compute);
  add_selector(compute);
  add_common(compute, true);

  CLI::App* table = app.add_subcommand("table", "indices for every coalition");
  add_game(table);
  add_common(table, true);
  table->add_option("--jobs", opt.jobs, "worker threads (output is order-stable)");
  table->add_option("--max-n", opt.max_n, "override the table player-count cap");

  CLI::App* attitude_cmd = app.add_subcommand("attitude", "attitude of S towards opponents");
  add_game(attitude_cmd);
  add_selector(attitude_cmd);
  add_common(attitude_cmd, true);
  attitude_cmd->add_option("--opponent", opt.opponent,
                           "single opponent coalition (default: all)");

  CLI::App* classify = app.add_subcommand("classify", "contribution classification of S");
  add_game(classify);
  add_selector(classify);
  add_common(classify, false);

  CLI::App* mobius = app.add_subcommand("mobius", "Harsanyi dividends of the game");
  add_game(mobius);
  add_common(mobius, false);

  CLI::App* axioms = app.add_subcommand("check-axioms", "axiom/independence suite");
  add_common(axioms, false);
  axioms->add_option("--variant", opt.variant, "uniform or permutation")->required();
  axioms->add_option("--n", opt.axiom_n, "battery covers 2..n players (n <= 5)");
  axioms->add_option("--randoms", opt.randoms, "random games per player count");
  axioms->add_option("--trials", opt.trials, "linearity trials per player count");
  axioms->add_option("--seed", opt.seed, "seed for the random battery");

  CLI::App* generate = app.add_subcommand("generate", "emit a game document");
  add_common(generate, false);
  generate->add_option("--kind", opt.kind,
                       "unanimity, weighted-majority or random-monotone")
      ->required();
  generate->add_option("--n", opt.gen_n, "player count");
  generate->add_option("--members", opt.members, "unanimity coalition labels");
  generate->add_option("--quota", opt.quota, "weighted-majority quota");
  generate->add_option("--weights", opt.weights, "weighted-majority weights w1,w2,...");
  generate->add_option("--seed", opt.seed, "seed for random-monotone");

  CLI::App* validate = app.add_subcommand("validate", "validate a game and families");
  add_game(validate);
  add_common(validate, true);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);  // prints the message; flag problems are input errors
    return 2;
  }
  opt.command = app.get_subcommands().front()->get_name();

  try {
    if (opt.mode == "float") return dispatch<double>(opt);
    return dispatch<Rational>(opt);
  } catch (const input_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "failure: " << e.what() << "\n";
    return 1;
  }
}
