// Copyright 2026 The cerny-lab Authors
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

#include "cernylab/cli.hpp"

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "cernylab/bounds.hpp"
#include "cernylab/families.hpp"
#include "cernylab/gamesim.hpp"
#include "cernylab/spf.hpp"

namespace cernylab::cli {

namespace {

using json = nlohmann::ordered_json;

constexpr const char* kSchema = "cerny-lab/1";

struct CliFailure {
  int code;
  std::string message;
};

std::string read_all(std::istream& in) {
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

Automaton load_automaton(const std::string& spec, std::istream& in) {
  if (spec == "-") return parse_automaton(read_all(in));
  if (auto builtin = parse_builtin(spec)) return *builtin;
  std::ifstream file(spec);
  if (!file) throw CliFailure{2, "cannot open input \"" + spec + "\""};
  std::ostringstream buffer;
  buffer << file.rdbuf();
  return parse_automaton(buffer.str());
}

std::string format_double(double x) {
  char buffer[64];
  std::snprintf(buffer, sizeof(buffer), "%.12g", x);
  return buffer;
}

json rational_json(const Rational& r) {
  return json{{"num", r.numerator().get_str()},
              {"den", r.denominator().get_str()},
              {"display", r.to_string()}};
}

Rational rational_from_string(const std::string& text) {
  auto slash = text.find('/');
  try {
    BigInt num(slash == std::string::npos ? text : text.substr(0, slash));
    BigInt den(slash == std::string::npos ? std::string("1") : text.substr(slash + 1));
    return Rational(num, den);
  } catch (const std::invalid_argument&) {
    throw CliFailure{2, "bad rational \"" + text + "\" (expected num or num/den)"};
  }
}

std::string join_states(const std::vector<int>& states) {
  std::string out;
  for (std::size_t i = 0; i < states.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(states[i]);
  }
  return out;
}

// What CERNY_LAB_THREADS caps; evaluation is currently sequential, which
// satisfies any positive cap.
int thread_cap() {
  const char* env = std::getenv("CERNY_LAB_THREADS");
  if (!env) return 1;
  int value = std::atoi(env);
  if (value < 1) throw CliFailure{2, "CERNY_LAB_THREADS must be a positive integer"};
  return value;
}

struct CommonOptions {
  std::string input;
  bool as_json = false;
};

void emit(std::ostream& out, const json& payload) { out << payload.dump(2) << "\n"; }

int run_validate(const CommonOptions& opt, std::istream& in, std::ostream& out) {
  Automaton a = load_automaton(opt.input, in);
  if (opt.as_json) {
    json names = json::array();
    for (int l = 1; l <= a.letter_count(); ++l) names.push_back(a.letter_name(l));
    emit(out, json{{"schema", kSchema},
                   {"command", "validate"},
                   {"valid", true},
                   {"n", a.state_count()},
                   {"m", a.letter_count()},
                   {"letters", names}});
  } else {
    out << "valid automaton: n=" << a.state_count() << " m=" << a.letter_count() << "\n";
  }
  return 0;
}

int run_gen(const std::string& kind, int n, int m, std::uint64_t seed, std::ostream& out) {
  Automaton a = kind == "cerny"    ? cerny(n)
                : kind == "tr"     ? tr(n)
                : kind == "random" ? random_automaton(n, m, seed)
                                   : throw CliFailure{2, "unknown family \"" + kind + "\""};
  out << format_automaton(a);
  return 0;
}

int run_reset_word(const CommonOptions& opt, std::int64_t cap_flag, bool cubic_cap,
                   std::istream& in, std::ostream& out) {
  Automaton a = load_automaton(opt.input, in);
  std::int64_t cap = cap_flag >= 0      ? cap_flag
                     : cubic_cap        ? pin_frankl_bound(a.state_count())
                                        : default_reset_cap(a.state_count());
  auto word = shortest_reset_word(a, cap);
  if (opt.as_json) {
    json payload{{"schema", kSchema},
                 {"command", "reset-word"},
                 {"n", a.state_count()},
                 {"cap", cap},
                 {"found", word.has_value()}};
    if (word) {
      payload["length"] = word->length();
      payload["word"] = a.word_string(*word);
    }
    emit(out, payload);
  } else if (word) {
    out << "length=" << word->length() << " word=" << a.word_string(*word) << "\n";
  } else {
    out << "no reset word within cap=" << cap << "\n";
  }
  return word ? 0 : 1;
}

json trt_json(const Automaton& a, const char* command, const TrtSearch& search) {
  json payload{{"schema", kSchema},
               {"command", command},
               {"n", a.state_count()},
               {"cap", search.cap},
               {"found", search.result.has_value()}};
  if (search.result) {
    payload["t"] = search.result->t3;
    payload["witness"] = a.word_string(search.result->witness);
    payload["merged"] = search.result->merged.states();
    payload["target"] = search.result->target;
  } else {
    payload["reason"] =
        search.miss == SearchMiss::kSaturated ? "saturated" : "cap-reached";
  }
  return payload;
}

int run_trt(const CommonOptions& opt, int cap_flag, std::istream& in, std::ostream& out) {
  Automaton a = load_automaton(opt.input, in);
  int cap = cap_flag >= 1 ? cap_flag : default_t3_cap(a.state_count());
  TrtSearch search = triple_rendezvous_time(a, cap);
  if (opt.as_json) {
    emit(out, trt_json(a, "trt", search));
  } else if (search.result) {
    out << "t3=" << search.result->t3 << " witness=" << a.word_string(search.result->witness)
        << " merged=" << join_states(search.result->merged.states())
        << " target=" << search.result->target << "\n";
  } else {
    out << "t3: not found ("
        << (search.miss == SearchMiss::kSaturated ? "saturated; no such column exists"
                                                  : "cap " + std::to_string(cap) + " reached")
        << ")\n";
  }
  return search.result ? 0 : 1;
}

int run_t_ell(const CommonOptions& opt, int ell, std::int64_t cap_flag, std::istream& in,
              std::ostream& out) {
  Automaton a = load_automaton(opt.input, in);
  std::int64_t cap = cap_flag >= 1 ? cap_flag : default_tl_cap(a.state_count());
  cap = std::max<std::int64_t>(1, cap);
  if (cap > std::numeric_limits<int>::max())
    throw CliFailure{2, "cap too large"};
  TrtSearch search = t_ell(a, ell, static_cast<int>(cap));
  if (opt.as_json) {
    json payload = trt_json(a, "t-ell", search);
    payload["l"] = ell;
    emit(out, payload);
  } else if (search.result) {
    out << "t=" << search.result->t3 << " l=" << ell
        << " witness=" << a.word_string(search.result->witness)
        << " merged=" << join_states(search.result->merged.states())
        << " target=" << search.result->target << "\n";
  } else {
    out << "t_" << ell << ": not found ("
        << (search.miss == SearchMiss::kSaturated ? "saturated" : "cap reached") << ")\n";
  }
  return search.result ? 0 : 1;
}

int run_columns(const CommonOptions& opt, int t, const std::string& format, std::istream& in,
                std::ostream& out) {
  Automaton a = load_automaton(opt.input, in);
  ColumnTable table = columns_at(a, t);
  const char* sep = format == "csv" ? "," : " ";
  for (int state = 1; state <= a.state_count(); ++state) {
    for (int j = 0; j < table.column_count(); ++j) {
      if (j) out << sep;
      out << (table.column(j).contains(state) ? '1' : '0');
    }
    out << "\n";
  }
  return 0;
}

int run_spf(const CommonOptions& opt, int t_max, const std::string& csv_path, bool dims,
            std::istream& in, std::ostream& out) {
  Automaton a = load_automaton(opt.input, in);
  auto curve = spf_curve(a, t_max, dims);

  if (!csv_path.empty()) {
    std::ostringstream csv;
    csv << "t,k_num,k_den,k_float,m_t";
    if (dims) csv << ",dim_P,dim_Q";
    csv << "\n";
    for (const CurvePoint& pt : curve) {
      csv << pt.t << "," << pt.k.numerator().get_str() << "," << pt.k.denominator().get_str()
          << "," << format_double(pt.k.to_double()) << "," << pt.m;
      if (dims) csv << "," << *pt.dim_p << "," << *pt.dim_q;
      csv << "\n";
    }
    if (csv_path == "-") {
      out << csv.str();
    } else {
      std::ofstream file(csv_path);
      if (!file) throw CliFailure{2, "cannot write \"" + csv_path + "\""};
      file << csv.str();
    }
    return 0;
  }

  if (opt.as_json) {
    json points = json::array();
    for (const CurvePoint& pt : curve) {
      json entry{{"t", pt.t}, {"k", rational_json(pt.k)}, {"m", pt.m}};
      if (dims) {
        entry["dim_p"] = *pt.dim_p;
        entry["dim_q"] = *pt.dim_q;
      }
      points.push_back(std::move(entry));
    }
    emit(out, json{{"schema", kSchema},
                   {"command", "spf"},
                   {"n", a.state_count()},
                   {"t_max", t_max},
                   {"points", points}});
    return 0;
  }

  for (const CurvePoint& pt : curve) {
    out << "t=" << pt.t << " k=" << pt.k.to_string() << " ("
        << format_double(pt.k.to_double()) << ") m=" << pt.m;
    if (dims) out << " dimP=" << *pt.dim_p << " dimQ=" << *pt.dim_q;
    out << "\n";
  }
  return 0;
}

int run_strategies(const CommonOptions& opt, int t, std::istream& in, std::ostream& out) {
  Automaton a = load_automaton(opt.input, in);
  ColumnTable table = columns_at(a, t);
  GameSolution sol = spf_at(a, table);
  auto critical = critical_columns(a, table, sol.k);

  json columns = json::array();
  for (int j = 0; j < table.column_count(); ++j)
    columns.push_back(json{{"index", j},
                           {"states", table.column(j).states()},
                           {"first_time", table.meta(j).first_time},
                           {"word", a.word_string(table.witness_word(j))}});

  json payload{{"schema", kSchema}, {"command", "strategies"},
               {"n", a.state_count()}, {"t", t},
               {"k", rational_json(sol.k)}};
  json p = json::array(), q = json::array();
  for (const Rational& v : sol.p) p.push_back(rational_json(v));
  for (const Rational& v : sol.q) q.push_back(rational_json(v));
  payload["p"] = p;
  payload["q"] = q;
  payload["critical_columns"] = critical;
  payload["columns"] = columns;

  try {
    CanonicalStrategy canon = canonicalize_support(a, table, sol);
    json canonical{{"n1", canon.support.decomposition.singletons.size()},
                   {"pair_count", canon.support.decomposition.pairs.size()},
                   {"cycle_count", canon.support.decomposition.odd_cycles.size()}};
    json singles = json::array();
    for (std::size_t i = 0; i < canon.support.decomposition.singletons.size(); ++i)
      singles.push_back(json{{"state", canon.support.decomposition.singletons[i]},
                             {"column", canon.support.singleton_columns[i]}});
    json pairs = json::array();
    for (std::size_t i = 0; i < canon.support.decomposition.pairs.size(); ++i)
      pairs.push_back(
          json{{"states", json::array({canon.support.decomposition.pairs[i].first,
                                       canon.support.decomposition.pairs[i].second})},
               {"column", canon.support.pair_columns[i]}});
    json cycles = json::array();
    for (std::size_t i = 0; i < canon.support.decomposition.odd_cycles.size(); ++i)
      cycles.push_back(json{{"states", canon.support.decomposition.odd_cycles[i]},
                            {"columns", canon.support.cycle_columns[i]}});
    canonical["singletons"] = singles;
    canonical["pairs"] = pairs;
    canonical["odd_cycles"] = cycles;
    json canonical_q = json::array();
    for (const Rational& v : canon.q) canonical_q.push_back(rational_json(v));
    canonical["q"] = canonical_q;
    payload["canonical_support"] = canonical;
  } catch (const WeightTooHighError& e) {
    payload["canonical_support"] = nullptr;
    payload["canonical_support_error"] = e.what();
  }

  if (opt.as_json) {
    emit(out, payload);
  } else {
    out << "t=" << t << " k=" << sol.k.to_string() << " m=" << table.column_count()
        << " critical=" << join_states(critical) << "\n";
  }
  return 0;
}

json t3_conjecture_json(const std::optional<T3ConjectureCheck>& check) {
  if (!check) return json{{"checked", false}};
  return json{{"checked", true}, {"holds", check->holds}, {"t3", check->t3},
              {"limit", check->limit}};
}

json spf_conjecture_json(bool checked, const std::optional<SpfConjectureViolation>& v) {
  if (!checked) return json{{"checked", false}};
  json payload{{"checked", true}, {"holds", !v.has_value()}};
  if (v)
    payload["violation"] = json{{"j", v->j},
                                {"t", v->t},
                                {"k", rational_json(v->k)},
                                {"threshold", rational_json(v->threshold)}};
  return payload;
}

int run_bounds(const CommonOptions& opt, bool measure, std::istream& in, std::ostream& out) {
  Automaton a = load_automaton(opt.input, in);
  BoundReport report = bound_report(a, measure);
  if (opt.as_json) {
    json payload{{"schema", kSchema},
                 {"command", "bounds"},
                 {"n", report.n},
                 {"pin_frankl", report.pin_frankl},
                 {"t3_naive", report.t3_naive},
                 {"t3_quarter", report.t3_quarter},
                 {"t3_sqrt", report.t3_sqrt ? json(*report.t3_sqrt) : json(nullptr)},
                 {"strongly_connected", report.strongly_connected}};
    if (measure) {
      json measured{
          {"reset_threshold",
           report.reset_threshold ? json(*report.reset_threshold) : json(nullptr)},
          {"t3", report.t3 ? json(*report.t3) : json(nullptr)},
          {"t3_conjecture", t3_conjecture_json(report.t3_conjecture)},
          {"spf_conjecture",
           spf_conjecture_json(report.spf_conjecture_checked,
                               report.spf_conjecture_violation)}};
      payload["measured"] = measured;
    }
    emit(out, payload);
    return 0;
  }

  out << "n                  " << report.n << "\n";
  out << "pin_frankl         " << report.pin_frankl << "\n";
  out << "t3_naive           " << report.t3_naive << "\n";
  out << "t3_quarter         " << report.t3_quarter << "\n";
  if (report.t3_sqrt)
    out << "t3_sqrt            " << *report.t3_sqrt
        << "  (floor convention; needs strong connectivity)\n";
  out << "strongly_connected " << (report.strongly_connected ? "yes" : "no") << "\n";
  if (measure) {
    if (report.reset_threshold)
      out << "reset_threshold    " << *report.reset_threshold << "\n";
    else
      out << "reset_threshold    not found (not synchronizing?)\n";
    if (report.t3) out << "t3                 " << *report.t3 << "\n";
    else out << "t3                 not found\n";
    if (report.t3_conjecture)
      out << "t3 <= n+2          "
          << (report.t3_conjecture->holds ? "holds" : "VIOLATED") << " (" << report.t3_conjecture->t3
          << " vs " << report.t3_conjecture->limit << ")\n";
    if (report.spf_conjecture_checked)
      out << "spf growth         "
          << (report.spf_conjecture_violation ? "VIOLATED" : "holds") << "\n";
  }
  return 0;
}

int run_check_conjectures(const CommonOptions& opt, int t_max_flag, std::istream& in,
                          std::ostream& out) {
  Automaton a = load_automaton(opt.input, in);
  const int n = a.state_count();

  TrtSearch search = triple_rendezvous_time(a, default_t3_cap(n));
  std::optional<T3ConjectureCheck> t3_check;
  if (search.result) t3_check = check_conjecture_t3(a, *search.result);

  int t_max = t_max_flag;
  if (t_max < 0) {
    auto reset = shortest_reset_word(a, default_reset_cap(n));
    t_max = reset ? reset->length() : default_t3_cap(n);
  }
  auto curve = spf_curve(a, t_max);
  auto violation = check_conjecture_spf(a, curve);

  bool any_violated = (t3_check && !t3_check->holds) || violation.has_value();
  if (opt.as_json) {
    emit(out, json{{"schema", kSchema},
                   {"command", "check-conjectures"},
                   {"n", n},
                   {"t_max", t_max},
                   {"t3_conjecture", t3_conjecture_json(t3_check)},
                   {"spf_conjecture", spf_conjecture_json(true, violation)},
                   {"any_violated", any_violated}});
  } else {
    if (t3_check)
      out << "t3 <= n+2: " << (t3_check->holds ? "holds" : "VIOLATED") << " (t3="
          << t3_check->t3 << ", limit=" << t3_check->limit << ")\n";
    else
      out << "t3 <= n+2: not checkable (no triple rendezvous found)\n";
    if (violation)
      out << "spf growth: VIOLATED at j=" << violation->j << ", t=" << violation->t
          << ": k=" << violation->k.to_string() << " < " << violation->threshold.to_string()
          << "\n";
    else
      out << "spf growth: holds up to t=" << t_max << "\n";
  }
  return any_violated ? 1 : 0;
}

int run_game_sim(const CommonOptions& opt, int t, long rounds, std::uint64_t seed,
                 const std::string& strategy, std::istream& in, std::ostream& out) {
  Automaton a = load_automaton(opt.input, in);
  ColumnTable table = columns_at(a, t);

  GameConfig cfg;
  cfg.t = t;
  cfg.rounds = rounds;
  cfg.seed = seed;
  std::string source = strategy;
  if (strategy == "optimal") {
    GameSolution sol = spf_at(a, table);
    cfg.p = sol.p;
    cfg.q = sol.q;
  } else if (strategy == "uniform") {
    cfg.p.assign(a.state_count(), Rational(1, a.state_count()));
    cfg.q.assign(table.column_count(), Rational(1, table.column_count()));
  } else {
    std::ifstream file(strategy);
    if (!file) throw CliFailure{2, "cannot open strategy file \"" + strategy + "\""};
    json doc = json::parse(file, nullptr, /*allow_exceptions=*/false);
    if (doc.is_discarded() || !doc.contains("p") || !doc.contains("q"))
      throw CliFailure{2, "strategy file must be JSON with \"p\" and \"q\" arrays"};
    for (const auto& v : doc["p"]) cfg.p.push_back(rational_from_string(v.get<std::string>()));
    for (const auto& v : doc["q"]) cfg.q.push_back(rational_from_string(v.get<std::string>()));
    if (static_cast<int>(cfg.p.size()) != a.state_count() ||
        static_cast<int>(cfg.q.size()) != table.column_count())
      throw CliFailure{2, "strategy dimensions must be n=" + std::to_string(a.state_count()) +
                              " and m(t)=" + std::to_string(table.column_count())};
    source = "file";
  }

  Rational expected = expected_win(a, table, cfg.p, cfg.q);
  SimulationResult result = simulate(a, table, cfg);
  if (opt.as_json) {
    emit(out, json{{"schema", kSchema},
                   {"command", "game-sim"},
                   {"n", a.state_count()},
                   {"t", t},
                   {"rounds", result.rounds},
                   {"seed", seed},
                   {"strategy", source},
                   {"wins", result.wins},
                   {"frequency", format_double(result.frequency)},
                   {"expected", rational_json(expected)},
                   {"expected_float", format_double(expected.to_double())},
                   {"stderr", format_double(result.stderr_estimate)}});
  } else {
    out << "rounds=" << result.rounds << " wins=" << result.wins
        << " frequency=" << format_double(result.frequency)
        << " expected=" << expected.to_string() << " ("
        << format_double(expected.to_double())
        << ") stderr=" << format_double(result.stderr_estimate) << "\n";
  }
  return 0;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"exact game-theoretic analysis of synchronizing automata"};
  app.name("cerny-lab");
  app.require_subcommand(1);

  // validate
  CommonOptions validate_opt;
  CLI::App* validate = app.add_subcommand("validate", "parse and validate an automaton");
  validate->add_option("input", validate_opt.input, "file, builtin spec, or -")->required();
  validate->add_flag("--json", validate_opt.as_json, "JSON output");

  // gen
  std::string gen_kind;
  int gen_n = 0, gen_m = 2;
  std::uint64_t gen_seed = 0;
  CLI::App* gen = app.add_subcommand("gen", "emit a builtin family member");
  gen->add_option("kind", gen_kind, "cerny | tr | random")->required();
  gen->add_option("n", gen_n, "state count")->required();
  gen->add_option("m", gen_m, "letter count (random only)");
  gen->add_option("--seed", gen_seed, "RNG seed (random only)");

  // reset-word
  CommonOptions reset_opt;
  std::int64_t reset_cap = -1;
  bool reset_cubic_cap = false;
  CLI::App* reset = app.add_subcommand("reset-word", "shortest synchronizing word");
  reset->add_option("input", reset_opt.input)->required();
  reset->add_option("--cap", reset_cap, "maximum length (default (n-1)^2 + n)");
  reset->add_flag("--cubic-cap", reset_cubic_cap, "cap at (n^3-n)/6 instead");
  reset->add_flag("--json", reset_opt.as_json);

  // trt
  CommonOptions trt_opt;
  int trt_cap = -1;
  CLI::App* trt = app.add_subcommand("trt", "triple rendezvous time");
  trt->add_option("input", trt_opt.input)->required();
  trt->add_option("--cap", trt_cap, "maximum t (default n(n+4)/4 + 1)");
  trt->add_flag("--json", trt_opt.as_json);

  // t-ell
  CommonOptions tell_opt;
  int tell_l = 0;
  std::int64_t tell_cap = -1;
  CLI::App* tell = app.add_subcommand("t-ell", "first time l states merge");
  tell->add_option("input", tell_opt.input)->required();
  tell->add_option("--l", tell_l, "number of states to merge")->required();
  tell->add_option("--cap", tell_cap, "maximum t (default (n^3-n)/6)");
  tell->add_flag("--json", tell_opt.as_json);

  // columns
  CommonOptions columns_opt;
  int columns_t = 0;
  std::string columns_format = "matrix";
  CLI::App* columns = app.add_subcommand("columns", "reachable-column matrix at t");
  columns->add_option("input", columns_opt.input)->required();
  columns->add_option("--t", columns_t, "horizon")->required();
  columns->add_option("--format", columns_format, "matrix | csv")
      ->check(CLI::IsMember({"matrix", "csv"}));

  // spf
  CommonOptions spf_opt;
  int spf_t_max = 0;
  std::string spf_csv;
  bool spf_dims = false;
  CLI::App* spf = app.add_subcommand("spf", "synchronizing probability function");
  spf->add_option("input", spf_opt.input)->required();
  spf->add_option("--t-max", spf_t_max, "largest horizon")->required();
  spf->add_option("--csv", spf_csv, "write CSV to file ('-' for stdout)");
  spf->add_flag("--dims", spf_dims, "also compute dim P_t and dim Q_t");
  spf->add_flag("--json", spf_opt.as_json);

  // strategies
  CommonOptions strat_opt;
  int strat_t = 0;
  CLI::App* strategies = app.add_subcommand("strategies", "optimal strategies at t");
  strategies->add_option("input", strat_opt.input)->required();
  strategies->add_option("--t", strat_t, "horizon")->required();
  strategies->add_flag("--json", strat_opt.as_json);

  // bounds
  CommonOptions bounds_opt;
  bool bounds_measure = false;
  CLI::App* bounds = app.add_subcommand("bounds", "closed-form bound report");
  bounds->add_option("input", bounds_opt.input)->required();
  bounds->add_flag("--measure", bounds_measure, "also measure reset threshold and t3");
  bounds->add_flag("--json", bounds_opt.as_json);

  // check-conjectures
  CommonOptions conj_opt;
  int conj_t_max = -1;
  CLI::App* conjectures = app.add_subcommand("check-conjectures", "growth conjecture checks");
  conjectures->add_option("input", conj_opt.input)->required();
  conjectures->add_option("--t-max", conj_t_max, "curve horizon (default: reset threshold)");
  conjectures->add_flag("--json", conj_opt.as_json);

  // game-sim
  CommonOptions sim_opt;
  int sim_t = 0;
  long sim_rounds = 10000;
  std::uint64_t sim_seed = 0;
  std::string sim_strategy = "optimal";
  CLI::App* sim = app.add_subcommand("game-sim", "simulate the guessing game");
  sim->add_option("input", sim_opt.input)->required();
  sim->add_option("--t", sim_t, "horizon")->required();
  sim->add_option("--rounds", sim_rounds, "number of rounds");
  sim->add_option("--seed", sim_seed, "RNG seed");
  sim->add_option("--strategy", sim_strategy, "optimal | uniform | strategy file");
  sim->add_flag("--json", sim_opt.as_json);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }

  try {
    thread_cap();
    if (app.got_subcommand(validate)) return run_validate(validate_opt, in, out);
    if (app.got_subcommand(gen)) return run_gen(gen_kind, gen_n, gen_m, gen_seed, out);
    if (app.got_subcommand(reset))
      return run_reset_word(reset_opt, reset_cap, reset_cubic_cap, in, out);
    if (app.got_subcommand(trt)) return run_trt(trt_opt, trt_cap, in, out);
    if (app.got_subcommand(tell)) return run_t_ell(tell_opt, tell_l, tell_cap, in, out);
    if (app.got_subcommand(columns))
      return run_columns(columns_opt, columns_t, columns_format, in, out);
    if (app.got_subcommand(spf)) return run_spf(spf_opt, spf_t_max, spf_csv, spf_dims, in, out);
    if (app.got_subcommand(strategies)) return run_strategies(strat_opt, strat_t, in, out);
    if (app.got_subcommand(bounds)) return run_bounds(bounds_opt, bounds_measure, in, out);
    if (app.got_subcommand(conjectures))
      return run_check_conjectures(conj_opt, conj_t_max, in, out);
    if (app.got_subcommand(sim))
      return run_game_sim(sim_opt, sim_t, sim_rounds, sim_seed, sim_strategy, in, out);
    err << "error: no subcommand\n";
    return 2;
  } catch (const CliFailure& failure) {
    err << "error: " << failure.message << "\n";
    return failure.code;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace cernylab::cli
