// Copyright 2026 The Hardy Bases Authors
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

#include "hardy/cli.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <functional>
#include <map>
#include <numbers>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "hardy/error.hpp"
#include "hardy/lhv.hpp"
#include "hardy/reality.hpp"
#include "hardy/stats.hpp"

namespace hardy::cli {

namespace {

class ConfigError : public Error {
 public:
  using Error::Error;
};

double clean(double x) { return x == 0.0 ? 0.0 : x; }

// Rows of (section, key, value) rendered as an aligned table or as CSV.
class Rows {
 public:
  void add(std::string section, std::string key, std::string value) {
    rows_.push_back({std::move(section), std::move(key), std::move(value)});
  }
  void add(std::string section, std::string key, double value) {
    add(std::move(section), std::move(key), format_number(value));
  }
  void add(std::string section, std::string key, bool value) {
    add(std::move(section), std::move(key), std::string(value ? "true" : "false"));
  }

  std::string table(const std::string& title) const {
    std::size_t width = 0;
    for (const auto& r : rows_) width = std::max(width, r[1].size());
    std::ostringstream os;
    os << title << '\n';
    std::string section;
    for (const auto& r : rows_) {
      if (r[0] != section) {
        section = r[0];
        os << '\n' << "[" << section << "]\n";
      }
      os << "  " << r[1] << std::string(width - r[1].size() + 2, ' ') << r[2] << '\n';
    }
    return os.str();
  }

  std::string csv() const;

 private:
  std::vector<std::array<std::string, 3>> rows_;
};

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string Rows::csv() const {
  std::string out = "section,key,value\n";
  for (const auto& r : rows_) out += csv_field(r[0]) + "," + csv_field(r[1]) + "," + csv_field(r[2]) + "\n";
  return out;
}

std::string sign_text(Sign s) { return value(s) > 0 ? "+1" : "-1"; }

std::string map_text(const std::array<Sign, 2>& m) {
  return std::string("(+1->") + sign_text(m[0]) + ", -1->" + sign_text(m[1]) + ")";
}

Json map_json(const std::array<Sign, 2>& m) { return Json::array({value(m[0]), value(m[1])}); }

std::string scenario_title(const RunConfig& c, std::string_view what) {
  std::ostringstream os;
  os << what << " | state " << c.state << ", mode " << protocol::name(c.mode) << ", choice_prob "
     << format_number(c.choice_prob);
  if (c.samples) {
    os << ", empirical from " << *c.samples << " samples (seed " << c.seed << ")";
  } else {
    os << ", exact";
  }
  return os.str();
}

Distribution exact_distribution(const RunConfig& c) {
  return protocol::outcome_distribution(protocol::build_final_density(c.scenario()));
}

// The distribution a command analyses: exact, or the empirical frequencies of
// a seeded sample when --samples is given.
Distribution analysis_distribution(const RunConfig& c) {
  const Distribution exact = exact_distribution(c);
  if (!c.samples) return exact;
  return stats::empirical(stats::sample(exact, *c.samples, c.seed, c.threads));
}

Json source_json(const RunConfig& c) {
  Json j;
  j["kind"] = c.samples ? "empirical" : "exact";
  if (c.samples) {
    j["samples"] = *c.samples;
    j["seed"] = c.seed;
  }
  return j;
}

std::string conditional_label(const stats::EventPredicate& target, const stats::EventPredicate& given) {
  auto strip = [](std::string s) { return s.substr(1, s.size() - 2); };
  return "P(" + strip(target.to_string()) + " | " + strip(given.to_string()) + ")";
}

Json table_json(const lhv::ConditionalTable& t) {
  Json rows = Json::array();
  for (std::size_t in = 0; in < 4; ++in) {
    Json row;
    row["q1"] = value(lhv::first_of(in));
    row["q2"] = value(lhv::second_of(in));
    Json probs = Json::array();
    for (std::size_t out = 0; out < 4; ++out) probs.push_back(clean(t(in, out)));
    row["p_q3q4"] = probs;
    rows.push_back(row);
  }
  return rows;
}

void add_table_rows(Rows& rows, const lhv::ConditionalTable& t) {
  for (std::size_t in = 0; in < 4; ++in) {
    for (std::size_t out = 0; out < 4; ++out) {
      std::string key = "P(q3=" + sign_text(lhv::first_of(out)) + ", q4=" + sign_text(lhv::second_of(out)) +
                        " | q1=" + sign_text(lhv::first_of(in)) + ", q2=" + sign_text(lhv::second_of(in)) + ")";
      rows.add("table", key, t(in, out));
    }
  }
}

std::string combination_label(const lhv::ChshCombination& c) {
  static constexpr std::array<const char*, 4> kTerms{"E(+1,+1)", "E(+1,-1)", "E(-1,+1)", "E(-1,-1)"};
  std::string s = c.sign > 0 ? "+[" : "-[";
  for (std::size_t k = 0; k < 4; ++k) {
    if (k == 0) {
      s += c.negated == 0 ? "-" : "";
    } else {
      s += k == c.negated ? " - " : " + ";
    }
    s += kTerms[k];
  }
  return s + "]";
}

Json combination_json(const lhv::ChshCombination& c) {
  Json j;
  j["sign"] = c.sign;
  j["negated_term"] = c.negated;
  j["label"] = combination_label(c);
  j["value"] = clean(c.value);
  return j;
}

}  // namespace

std::string_view name(Format f) {
  switch (f) {
    case Format::Table: return "table";
    case Format::Json: return "json";
    case Format::Csv: return "csv";
  }
  return "?";
}

std::string format_number(double x) {
  x = clean(x);
  std::array<char, 64> buf{};
  const auto res = std::to_chars(buf.data(), buf.data() + buf.size(), x);
  return std::string(buf.data(), res.ptr);
}

protocol::Scenario RunConfig::scenario() const {
  protocol::Scenario s;
  s.initial_state = state;
  s.alice_mode = mode;
  s.bob_mode = mode;
  s.choice_prob = choice_prob;
  return s;
}

Json RunConfig::to_json() const {
  Json j;
  j["state"] = state;
  j["mode"] = protocol::name(mode);
  j["choice_prob"] = clean(choice_prob);
  j["seed"] = seed;
  j["samples"] = samples ? Json(*samples) : Json(nullptr);
  j["epsilon"] = clean(epsilon);
  j["tol"] = clean(tol);
  j["format"] = name(format);
  j["diagonal"] = diagonal;
  j["angles"] = Json::array({clean(angles[0]), clean(angles[1]), clean(angles[2]), clean(angles[3])});
  return j;
}

// ---------------------------------------------------------------------------

CommandOutput cmd_rho(const RunConfig& c) {
  const auto rho = protocol::build_final_density(c.scenario());
  const auto diag = qcore::measurement_probs(rho);

  // Largest coherence between different (q3, q4) choice sectors.
  double cross = 0.0;
  for (std::size_t r = 0; r < 16; ++r) {
    for (std::size_t col = 0; col < 16; ++col) {
      if ((r & 3U) != (col & 3U)) cross = std::max(cross, std::abs(rho(r, col)));
    }
  }

  CommandOutput out;
  Json diagonal = Json::array();
  std::ostringstream table;
  table << scenario_title(c, "final density matrix rho (Q1 Q2 Q3 Q4)") << "\n\n";
  std::string csv;
  if (c.diagonal) {
    csv = "outcome,index,q1,q2,q3,q4,probability\n";
    table << "outcome  ket     probability\n";
  }
  for (std::size_t i = 0; i < 16; ++i) {
    const auto o = OutcomeQuadruple::from_index(i);
    Json e;
    e["outcome"] = o.label();
    e["index"] = i;
    e["probability"] = clean(diag[i]);
    diagonal.push_back(e);
    if (c.diagonal) {
      std::string ket = "|";
      for (std::size_t k = 0; k < 4; ++k) ket += bit(o.values[k]) ? '1' : '0';
      ket += ">";
      table << o.label() << "     " << ket << "  " << format_number(diag[i]) << '\n';
      csv += o.label() + "," + std::to_string(i);
      for (Sign s : o.values) csv += "," + std::to_string(value(s));
      csv += "," + format_number(diag[i]) + "\n";
    }
  }
  out.results["n_qubits"] = rho.n_qubits();
  out.results["trace"] = clean(rho.trace().real());
  out.results["max_cross_sector_coherence"] = clean(cross);
  out.results["diagonal"] = diagonal;

  if (!c.diagonal) {
    Json re = Json::array();
    Json im = Json::array();
    csv = "row,col,re,im\n";
    std::ostringstream re_text;
    std::ostringstream im_text;
    for (std::size_t r = 0; r < 16; ++r) {
      Json re_row = Json::array();
      Json im_row = Json::array();
      for (std::size_t col = 0; col < 16; ++col) {
        const auto z = rho(r, col);
        re_row.push_back(clean(z.real()));
        im_row.push_back(clean(z.imag()));
        re_text << (col ? " " : "") << format_number(z.real());
        im_text << (col ? " " : "") << format_number(z.imag());
        csv += std::to_string(r) + "," + std::to_string(col) + "," + format_number(z.real()) + "," +
               format_number(z.imag()) + "\n";
      }
      re.push_back(re_row);
      im.push_back(im_row);
      re_text << '\n';
      im_text << '\n';
    }
    out.results["real"] = re;
    out.results["imag"] = im;
    table << "real part:\n" << re_text.str() << "\nimaginary part:\n" << im_text.str();
  }
  table << "\ntrace: " << format_number(rho.trace().real()) << '\n';
  table << "max cross-sector coherence: " << format_number(cross) << '\n';
  out.table = table.str();
  out.csv = csv;
  return out;
}

CommandOutput cmd_hardy(const RunConfig& c) {
  const Distribution d = analysis_distribution(c);
  const auto report = reality::hardy_chain_check(d, c.epsilon);

  CommandOutput out;
  Rows rows;
  Json definitions = Json::array();
  Json established = Json::array();
  for (std::size_t k = 0; k < 4; ++k) {
    const auto [target, given] = reality::hardy_fact_events(k);
    const std::string fname = "f" + std::to_string(k);
    const std::string label = conditional_label(target, given);
    out.results[fname] = clean(report.facts[k]);
    established.push_back(report.established[k]);
    definitions.push_back(fname + " = " + label);
    rows.add("facts", fname + "  " + label, report.facts[k]);
  }
  out.results["established"] = established;
  out.results["definitions"] = definitions;
  out.results["epsilon"] = clean(report.epsilon);
  out.results["contradiction"] = report.contradiction;
  out.results["verdict"] = report.verdict();
  out.results["source"] = source_json(c);

  for (std::size_t k = 0; k < 4; ++k) rows.add("established", "f" + std::to_string(k), report.established[k]);
  rows.add("verdict", "epsilon", report.epsilon);
  rows.add("verdict", "contradiction", report.contradiction);
  rows.add("verdict", "verdict", std::string(report.verdict()));
  out.table = rows.table(scenario_title(c, "hardy chain"));
  out.csv = rows.csv();
  return out;
}

CommandOutput cmd_nosignal(const RunConfig& c) {
  const auto table = lhv::conditional_table(analysis_distribution(c));
  const auto report = lhv::no_signaling_check(table, c.tol);
  const std::string verdict = report.signaling ? "SIGNALING" : "NO_SIGNALING";
  const std::string measure =
      "max marginal discrepancy: delta_q3 = max_q1 |P(q3=+1|q1,q2=+1) - P(q3=+1|q1,q2=-1)|, delta_q4 symmetric";

  CommandOutput out;
  out.results["table"] = table_json(table);
  out.results["delta_q3"] = clean(report.delta_q3);
  out.results["delta_q4"] = clean(report.delta_q4);
  out.results["tol"] = clean(report.tol);
  out.results["signaling"] = report.signaling;
  out.results["verdict"] = verdict;
  out.results["measure"] = measure;
  out.results["source"] = source_json(c);

  Rows rows;
  add_table_rows(rows, table);
  rows.add("signaling", "delta_q3", report.delta_q3);
  rows.add("signaling", "delta_q4", report.delta_q4);
  rows.add("signaling", "tol", report.tol);
  rows.add("signaling", "signaling", report.signaling);
  rows.add("signaling", "verdict", verdict);
  rows.add("signaling", "measure", measure);
  out.table = rows.table(scenario_title(c, "no-signaling check, inputs (q1,q2), outputs (q3,q4)"));
  out.csv = rows.csv();
  return out;
}

CommandOutput cmd_chsh(const RunConfig& c) {
  const auto state = protocol::initial_state(c.state);
  const stats::ChshSettings s{c.angles[0], c.angles[1], c.angles[2], c.angles[3]};
  const double value = stats::chsh_value(state, s);
  const double tsirelson = 2.0 * std::numbers::sqrt2;

  const std::array<std::pair<std::string, double>, 4> correlators{{
      {"E(a0,b0)", stats::correlator(state, s.a0, s.b0)},
      {"E(a0,b1)", stats::correlator(state, s.a0, s.b1)},
      {"E(a1,b0)", stats::correlator(state, s.a1, s.b0)},
      {"E(a1,b1)", stats::correlator(state, s.a1, s.b1)},
  }};

  CommandOutput out;
  Rows rows;
  Json settings;
  const std::array<std::pair<const char*, double>, 4> angle_fields{
      {{"a0", s.a0}, {"a1", s.a1}, {"b0", s.b0}, {"b1", s.b1}}};
  for (const auto& [k, v] : angle_fields) {
    settings[k] = clean(v);
    rows.add("settings", k, v);
  }
  Json corr;
  for (const auto& [k, v] : correlators) {
    corr[k] = clean(v);
    rows.add("correlators", k, v);
  }
  out.results["state"] = c.state;
  out.results["settings"] = settings;
  out.results["correlators"] = corr;
  out.results["chsh"] = clean(value);
  out.results["classical_bound"] = 2.0;
  out.results["tsirelson_bound"] = tsirelson;
  out.results["exceeds_classical_bound"] = std::abs(value) > 2.0 + c.tol;

  rows.add("chsh", "S", value);
  rows.add("chsh", "classical_bound", 2.0);
  rows.add("chsh", "tsirelson_bound", tsirelson);
  rows.add("chsh", "exceeds_classical_bound", std::abs(value) > 2.0 + c.tol);
  std::ostringstream title;
  title << "CHSH S = E(a0,b0) + E(a0,b1) + E(a1,b0) - E(a1,b1), M(t) = cos(t) Z + sin(t) X, state " << c.state;
  out.table = rows.table(title.str());
  out.csv = rows.csv();
  return out;
}

CommandOutput cmd_lhv(const RunConfig& c) {
  const auto strategies = lhv::enumerate_strategies();
  const auto table = lhv::conditional_table(analysis_distribution(c));
  const auto poly = lhv::local_polytope_check(table, c.tol);

  CommandOutput out;
  Rows rows;
  Json strat = Json::array();
  int max_chsh = strategies.front().chsh;
  int min_chsh = strategies.front().chsh;
  for (const auto& sv : strategies) {
    Json j;
    j["f"] = map_json(sv.strategy.f);
    j["g"] = map_json(sv.strategy.g);
    j["chsh"] = sv.chsh;
    strat.push_back(j);
    max_chsh = std::max(max_chsh, sv.chsh);
    min_chsh = std::min(min_chsh, sv.chsh);
    rows.add("strategies", "f=" + map_text(sv.strategy.f) + " g=" + map_text(sv.strategy.g),
             std::to_string(sv.chsh));
  }
  rows.add("strategies", "max_chsh", std::to_string(max_chsh));
  rows.add("strategies", "min_chsh", std::to_string(min_chsh));

  Json combos = Json::array();
  for (const auto& cb : poly.combinations) {
    combos.push_back(combination_json(cb));
    rows.add("polytope", combination_label(cb), cb.value);
  }
  rows.add("polytope", "delta_q3", poly.signaling.delta_q3);
  rows.add("polytope", "delta_q4", poly.signaling.delta_q4);
  rows.add("polytope", "witness", combination_label(poly.witness));
  rows.add("polytope", "witness_value", poly.witness.value);
  rows.add("polytope", "tol", c.tol);
  rows.add("polytope", "verdict", std::string(lhv::name(poly.verdict)));

  Json p;
  p["verdict"] = lhv::name(poly.verdict);
  p["delta_q3"] = clean(poly.signaling.delta_q3);
  p["delta_q4"] = clean(poly.signaling.delta_q4);
  p["combinations"] = combos;
  p["witness"] = combination_json(poly.witness);
  p["tol"] = clean(c.tol);
  p["table"] = table_json(table);

  out.results["strategies"] = strat;
  out.results["max_chsh"] = max_chsh;
  out.results["min_chsh"] = min_chsh;
  out.results["polytope"] = p;
  out.results["source"] = source_json(c);
  out.table = rows.table(scenario_title(c, "deterministic strategies and local-polytope check"));
  out.csv = rows.csv();
  return out;
}

CommandOutput cmd_sample(const RunConfig& c) {
  const Distribution exact = exact_distribution(c);
  const auto report = stats::sample(exact, c.samples.value_or(kDefaultSampleCount), c.seed, c.threads);

  CommandOutput out;
  Json counts;
  Json freqs;
  Json expected;
  std::ostringstream table;
  table << scenario_title(c, "sample") << "\n\n";
  table << "outcome  count     frequency  expected\n";
  std::string csv = "outcome,count,frequency,expected\n";
  for (std::size_t i = 0; i < kOutcomes; ++i) {
    const std::string label = OutcomeQuadruple::from_index(i).label();
    const double f = static_cast<double>(report.counts[i]) / static_cast<double>(report.n);
    counts[label] = report.counts[i];
    freqs[label] = clean(f);
    expected[label] = clean(exact[i]);
    std::string cnt = std::to_string(report.counts[i]);
    cnt.resize(std::max<std::size_t>(cnt.size(), 8), ' ');
    std::string fq = format_number(f);
    fq.resize(std::max<std::size_t>(fq.size(), 9), ' ');
    table << label << "     " << cnt << "  " << fq << "  " << format_number(exact[i]) << '\n';
    csv += label + "," + std::to_string(report.counts[i]) + "," + format_number(f) + "," + format_number(exact[i]) + "\n";
  }
  table << "\nn: " << report.n << "\nseed: " << report.seed << "\ntv_distance: " << format_number(report.tv_distance)
        << '\n';
  out.results["n"] = report.n;
  out.results["seed"] = report.seed;
  out.results["counts"] = counts;
  out.results["frequencies"] = freqs;
  out.results["expected"] = expected;
  out.results["tv_distance"] = clean(report.tv_distance);
  out.results["generator"] = "mt19937_64, block seeds splitmix64(seed ^ splitmix64(block)), 65536 draws per block";
  out.table = table.str();
  out.csv = csv;
  return out;
}

CommandOutput cmd_predict(const RunConfig& c) {
  const Distribution d = analysis_distribution(c);
  const auto predictions = reality::certainty_predictions(d, c.epsilon);
  const auto survivors = reality::response_model_refutation(d);

  CommandOutput out;
  Rows rows;
  Json preds = Json::array();
  for (const auto& p : predictions) {
    Json j;
    j["given"] = p.given.to_string();
    j["predicted_variable"] = name(p.predicted_variable);
    j["predicted_value"] = value(p.predicted_value);
    j["confidence"] = clean(p.confidence);
    preds.push_back(j);
    rows.add("predictions", p.given.to_string() + " => " + std::string(name(p.predicted_variable)) + "=" +
                                sign_text(p.predicted_value),
             p.confidence);
  }
  Json surv = Json::array();
  for (const auto& [f, g] : survivors) {
    Json j;
    j["f"] = map_json(f.map);
    j["g"] = map_json(g.map);
    surv.push_back(j);
    rows.add("response_survivors", "q3=f(q1) " + map_text(f.map), "q4=g(q2) " + map_text(g.map));
  }
  rows.add("summary", "epsilon", c.epsilon);
  rows.add("summary", "predictions", std::to_string(predictions.size()));
  rows.add("summary", "response_survivors", std::to_string(survivors.size()));

  out.results["epsilon"] = clean(c.epsilon);
  out.results["predictions"] = preds;
  out.results["response_survivors"] = surv;
  out.results["source"] = source_json(c);
  out.table = rows.table(scenario_title(c, "certainty predictions and deterministic response models"));
  out.csv = rows.csv();
  return out;
}

// ---------------------------------------------------------------------------

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Basis-choice register simulator: density matrix, Hardy chain, no-signaling and CHSH analyses"};
  app.require_subcommand(1, 1);

  std::string mode = "coherent";
  std::string format = "table";
  std::string state{protocol::kDefaultState};
  double choice_prob = 0.5;
  std::uint64_t seed = 42;
  std::int64_t samples = 0;
  double epsilon = 1e-9;
  double tol = 1e-9;
  bool diagonal = false;
  unsigned threads = 0;
  const auto opt = stats::optimal_chsh_settings();
  std::vector<double> angles{opt.a0, opt.a1, opt.b0, opt.b1};

  app.set_config("--config", "", "Scenario file with key=value lines; flags override file values");
  app.allow_config_extras(CLI::config_extras_mode::error);
  app.add_option("--mode", mode, "How both parties choose their basis: coherent or coin")->capture_default_str();
  app.add_option("--choice-prob", choice_prob, "Probability of choosing Z")->capture_default_str();
  app.add_option("--state", state, "Initial pair state")->capture_default_str();
  app.add_option("--seed", seed, "Sampling seed")->capture_default_str();
  auto* samples_opt = app.add_option("--samples", samples, "Analyse an empirical distribution of N samples");
  auto* epsilon_opt =
      app.add_option("--epsilon", epsilon, "Certainty tolerance (0.01 by default with --samples)")->capture_default_str();
  auto* tol_opt =
      app.add_option("--tol", tol, "Signaling / CHSH tolerance (0.01 by default with --samples)")->capture_default_str();
  app.add_option("--format", format, "Output format: table, json or csv")->capture_default_str();
  app.add_flag("--diagonal", diagonal, "rho: print only the 16 diagonal entries");
  auto* angles_opt = app.add_option("--angles", angles, "chsh: a0,a1,b0,b1 in radians")->delimiter(',');
  app.add_option("--threads", threads, "Sampling threads (0 = all cores); results do not depend on it");

  const std::vector<std::pair<std::string, std::string>> commands{
      {"rho", "Print the final four-qubit density matrix"},
      {"hardy", "Evaluate the Hardy-style chain F0..F3 and its verdict"},
      {"nosignal", "No-signaling check of P(q3,q4|q1,q2)"},
      {"chsh", "CHSH value of the initial pair at the given angles"},
      {"lhv", "Deterministic strategies and local-polytope membership"},
      {"sample", "Seeded Monte Carlo sample of the outcome distribution"},
      {"predict", "EPR certainty predictions and surviving deterministic response models"},
  };
  for (const auto& [cmd, help] : commands) app.add_subcommand(cmd, help)->fallthrough();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    std::ostringstream o;
    std::ostringstream er;
    const int code = app.exit(e, o, er);
    out << o.str();
    err << er.str();
    return code == 0 ? kExitOk : kExitConfig;
  }

  RunConfig c;
  c.command = app.get_subcommands().front()->get_name();
  try {
    c.mode = protocol::parse_choice_mode(mode);
    if (format == "table") {
      c.format = Format::Table;
    } else if (format == "json") {
      c.format = Format::Json;
    } else if (format == "csv") {
      c.format = Format::Csv;
    } else {
      throw ConfigError("unknown format '" + format + "' (expected table, json or csv)");
    }
    c.state = state;
    c.choice_prob = choice_prob;
    c.seed = seed;
    if (samples_opt->count() > 0) {
      if (samples < 1) throw ConfigError("--samples must be at least 1");
      c.samples = static_cast<std::uint64_t>(samples);
    }
    if (c.command == "sample" && !c.samples) c.samples = kDefaultSampleCount;
    c.epsilon = (c.samples && epsilon_opt->count() == 0 && c.command != "sample") ? kEmpiricalEpsilon : epsilon;
    c.tol = (c.samples && tol_opt->count() == 0 && c.command != "sample") ? kEmpiricalTol : tol;
    if (!(c.epsilon >= 0.0 && c.epsilon < 0.5)) throw ConfigError("--epsilon must lie in [0, 0.5)");
    if (!(c.tol >= 0.0) || !std::isfinite(c.tol)) throw ConfigError("--tol must be a nonnegative number");
    c.diagonal = diagonal;
    if (angles.size() != 4 || (angles_opt->count() > 0 && angles_opt->count() != 4)) {
      throw ConfigError("--angles takes exactly four comma-separated values");
    }
    for (std::size_t k = 0; k < 4; ++k) {
      if (!std::isfinite(angles[k])) throw ConfigError("--angles must be finite");
      c.angles[k] = angles[k];
    }
    c.threads = threads;
    c.scenario().validate();
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitConfig;
  }

  static const std::map<std::string, std::function<CommandOutput(const RunConfig&)>> kHandlers{
      {"rho", cmd_rho},     {"hardy", cmd_hardy},   {"nosignal", cmd_nosignal}, {"chsh", cmd_chsh},
      {"lhv", cmd_lhv},     {"sample", cmd_sample}, {"predict", cmd_predict},
  };

  CommandOutput result;
  try {
    result = kHandlers.at(c.command)(c);
  } catch (const MissingSupport& e) {
    err << "error: " << e.what() << '\n';
    return kExitMissingSupport;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitConfig;
  }

  switch (c.format) {
    case Format::Table:
      out << result.table;
      break;
    case Format::Csv:
      out << result.csv;
      break;
    case Format::Json: {
      Json doc;
      doc["command"] = c.command;
      doc["config"] = c.to_json();
      doc["results"] = result.results;
      out << doc.dump(2) << '\n';
      break;
    }
  }
  return kExitOk;
}

}  // namespace hardy::cli
