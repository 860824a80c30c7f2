#include "hecke/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <optional>
#include <ostream>
#include <sstream>

#include "hecke/permutation.hpp"
#include "hecke/repr.hpp"
#include "hecke/schubert.hpp"
#include "hecke/verify.hpp"

namespace hecke {

namespace {

using Json = nlohmann::ordered_json;

constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct RunConfig {
  int n = 3;
  std::string q = "symbolic";
  int degree_bound = 4;
  std::string output;
  std::uint64_t seed = 1;
  int jobs = 1;
};

std::optional<Rational> q_value(const RunConfig& config) {
  if (config.q == "symbolic") return std::nullopt;
  try {
    return parse_rational(config.q);
  } catch (const std::exception&) {
    throw UsageError("--q expects a rational number or 'symbolic', got '" + config.q + "'");
  }
}

/// QPoly text, or its value at q = r.
std::string render(const QPoly& p, const std::optional<Rational>& q) {
  return q ? rational_to_string(p.evaluate(*q)) : p.to_string();
}

std::string csv_field(const std::string& text) {
  if (text.find_first_of(",\"\n") == std::string::npos) return text;
  std::string out = "\"";
  for (char ch : text) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + "\"";
}

void check_n(int n, int lo, int hi, const std::string& command) {
  if (n >= lo && n <= hi) return;
  std::string message = command + " needs " + std::to_string(lo) + " <= n <= " + std::to_string(hi);
  if (n > hi) {
    Integer count = 1;
    for (int j = 2; j <= n; ++j) count *= j;
    message += "; n=" + std::to_string(n) + " would mean " + count.str() + " permutations and Schubert polynomials";
  }
  throw UsageError(message);
}

std::string cost_table() {
  std::ostringstream out;
  out << "\nCost by n (permutations, largest R^k):\n";
  for (int n = 2; n <= 8; ++n) {
    QPoly mahonian(1);
    for (int j = 1; j <= n; ++j) mahonian *= QPoly(std::vector<Integer>(static_cast<std::size_t>(j), 1));
    Integer largest = 0, count = 1;
    for (const auto& c : mahonian.coeffs()) largest = std::max(largest, c);
    for (int j = 2; j <= n; ++j) count *= j;
    out << "  n=" << n << ": " << count << ", " << largest << "\n";
  }
  out << "schubert, char and matrix accept n <= 8; verify accepts n <= 6.\n";
  return out.str();
}

int cmd_schubert(const RunConfig& config, std::ostream& out) {
  check_n(config.n, 1, Monomial::kMaxVars, "schubert");
  auto table = schubert_table(config.n);
  const std::string format = config.output.empty() ? "json" : config.output;
  if (format == "json") {
    Json j = Json::object();
    for (const auto& [w, poly] : table->polys()) j[w.to_string()] = poly.to_string();
    out << j.dump() << "\n";
  } else if (format == "csv") {
    out << "w,schubert\n";
    for (const auto& [w, poly] : table->polys()) out << csv_field(w.to_string()) << "," << poly.to_string() << "\n";
  } else {
    for (const auto& [w, poly] : table->polys()) out << w.to_string() << ": " << poly.to_string() << "\n";
  }
  return 0;
}

struct CharCell {
  std::map<std::string, std::string> values;
  bool agree = true;
};

int cmd_char(const RunConfig& config, const std::string& action, std::ostream& out) {
  check_n(config.n, 2, Monomial::kMaxVars, "char");
  const auto q = q_value(config);
  std::vector<std::string> sources;
  if (action == "all")
    sources = {"rho1", "rho2", "weights"};
  else
    sources = {action};

  auto table = schubert_table(config.n);
  std::optional<HeckeRepresentation> rho1, rho2;
  if (std::ranges::count(sources, "rho1")) rho1.emplace(Action::Rho1, table, config.jobs);
  if (std::ranges::count(sources, "rho2")) rho2.emplace(Action::Rho2, table, config.jobs);

  const auto mus = partitions_of(config.n);
  std::vector<std::vector<CharCell>> cells(static_cast<std::size_t>(table->max_length()) + 1);
  bool all_agree = true;
  for (int k = 0; k <= table->max_length(); ++k)
    for (const auto& mu : mus) {
      CharCell cell;
      for (const auto& source : sources) {
        QPoly value;
        if (source == "rho1")
          value = graded_character(*rho1, mu, k).value;
        else if (source == "rho2")
          value = graded_character(*rho2, mu, k).value;
        else
          value = weight_character(mu, k).value;
        cell.values[source] = render(value, q);
      }
      for (const auto& [name, text] : cell.values) cell.agree = cell.agree && text == cell.values.begin()->second;
      all_agree = all_agree && cell.agree;
      cells[static_cast<std::size_t>(k)].push_back(std::move(cell));
    }

  const bool verdicts = sources.size() > 1;
  auto cell_text = [&](const CharCell& cell) {
    if (!verdicts) return cell.values.begin()->second;
    if (cell.agree) return cell.values.begin()->second + " AGREE";
    std::string text = "DISAGREE";
    for (const auto& source : sources) text += " " + source + "=" + cell.values.at(source);
    return text;
  };

  const std::string format = config.output.empty() ? "csv" : config.output;
  if (format == "json") {
    Json j;
    j["n"] = config.n;
    j["q"] = config.q;
    j["sources"] = sources;
    j["rows"] = Json::array();
    for (std::size_t k = 0; k < cells.size(); ++k)
      for (std::size_t m = 0; m < mus.size(); ++m) {
        Json row;
        row["k"] = k;
        row["mu"] = mus[m].to_string();
        for (const auto& source : sources) row[source] = cells[k][m].values.at(source);
        if (verdicts) row["agree"] = cells[k][m].agree;
        j["rows"].push_back(std::move(row));
      }
    out << j.dump() << "\n";
  } else {
    const std::string sep = format == "csv" ? "," : "\t";
    out << "k";
    for (const auto& mu : mus) out << sep << (format == "csv" ? csv_field(mu.to_string()) : mu.to_string());
    out << "\n";
    for (std::size_t k = 0; k < cells.size(); ++k) {
      out << k;
      for (const auto& cell : cells[k]) out << sep << (format == "csv" ? csv_field(cell_text(cell)) : cell_text(cell));
      out << "\n";
    }
  }
  return verdicts && !all_agree ? kExitFailure : 0;
}

int cmd_matrix(const RunConfig& config, const std::string& action_name_text, int k, std::optional<int> i,
               const std::string& word_text, std::ostream& out) {
  check_n(config.n, 2, Monomial::kMaxVars, "matrix");
  const auto q = q_value(config);
  Action action;
  try {
    action = parse_action(action_name_text);
  } catch (const std::exception& e) {
    throw UsageError(e.what());
  }
  auto table = schubert_table(config.n);
  if (k < 0 || k > table->max_length())
    throw UsageError("--k must lie in [0, " + std::to_string(table->max_length()) + "]");
  Word word;
  try {
    word = i ? Word{*i} : parse_word(word_text);
  } catch (const std::exception& e) {
    throw UsageError(e.what());
  }
  for (int letter : word)
    if (letter < 1 || letter >= config.n) throw UsageError("generator index " + std::to_string(letter) + " out of range");
  const RepMatrix m = word_matrix(action, word, k, *table);

  const std::string format = config.output.empty() ? "json" : config.output;
  if (format == "json") {
    Json j;
    j["action"] = action_name(action);
    j["n"] = config.n;
    j["k"] = k;
    j["word"] = word_to_string(word);
    j["q"] = config.q;
    j["basis"] = Json::array();
    for (const auto& w : m.basis) j["basis"].push_back(w.to_string());
    j["entries"] = Json::array();
    for (std::size_t r = 0; r < m.basis.size(); ++r) {
      Json row = Json::array();
      for (std::size_t c = 0; c < m.basis.size(); ++c) row.push_back(render(m.entries(r, c), q));
      j["entries"].push_back(std::move(row));
    }
    out << j.dump() << "\n";
  } else {
    const bool csv = format == "csv";
    const std::string sep = csv ? "," : "\t";
    out << "z\\w";
    for (const auto& w : m.basis) out << sep << (csv ? csv_field(w.to_string()) : w.to_string());
    out << "\n";
    for (std::size_t r = 0; r < m.basis.size(); ++r) {
      out << (csv ? csv_field(m.basis[r].to_string()) : m.basis[r].to_string());
      for (std::size_t c = 0; c < m.basis.size(); ++c) out << sep << render(m.entries(r, c), q);
      out << "\n";
    }
  }
  return 0;
}

int cmd_verify(const RunConfig& config, const std::string& suite, std::ostream& out) {
  check_n(config.n, 2, 6, "verify");
  VerifyOptions options;
  options.n = config.n;
  options.degree_bound = config.degree_bound;
  options.seed = config.seed;
  options.jobs = config.jobs;
  options.q_value = q_value(config);
  if (suite != "all" && !std::ranges::count(suite_names(), suite)) throw UsageError("unknown suite '" + suite + "'");

  const auto reports = run_suites(suite, options);
  const bool passed = std::ranges::all_of(reports, [](const CheckReport& r) { return r.passed(); });
  const std::string format = config.output.empty() ? "text" : config.output;
  constexpr std::size_t kShown = 10;
  if (format == "json") {
    Json j;
    j["n"] = config.n;
    j["seed"] = config.seed;
    j["passed"] = passed;
    j["suites"] = Json::array();
    for (const auto& r : reports)
      j["suites"].push_back({{"name", r.name},
                             {"passed", r.passed()},
                             {"checks", r.checks},
                             {"failures", r.failures},
                             {"notes", r.notes}});
    out << j.dump() << "\n";
  } else if (format == "csv") {
    out << "suite,checks,failures,verdict\n";
    for (const auto& r : reports)
      out << r.name << "," << r.checks << "," << r.failures.size() << "," << (r.passed() ? "PASS" : "FAIL") << "\n";
  } else {
    for (const auto& r : reports) {
      out << (r.passed() ? "PASS " : "FAIL ") << r.name << " (" << r.checks << " checks";
      if (!r.passed()) out << ", " << r.failures.size() << " failed";
      out << ")\n";
      for (std::size_t j = 0; j < std::min(kShown, r.failures.size()); ++j) out << "  " << r.failures[j] << "\n";
      if (r.failures.size() > kShown) out << "  ... " << r.failures.size() - kShown << " more\n";
      for (const auto& note : r.notes) out << "  note: " << note << "\n";
    }
    out << (passed ? "PASS" : "FAIL") << "\n";
  }
  return passed ? 0 : kExitFailure;
}

int cmd_scan_b(const RunConfig& config, std::ostream& out) {
  check_n(config.n, 2, 6, "scan-b");
  HeckeRepresentation rho2(Action::Rho2, schubert_table(config.n), config.jobs);
  const BScanResult scan = scan_b(rho2);

  std::string observed;
  for (const auto& [b, count] : scan.b_histogram) observed += (observed.empty() ? "" : ", ") + b.str();
  std::string violations = std::to_string(scan.conjecture_violations.size());
  for (const auto& e : scan.conjecture_violations)
    violations += " (i=" + std::to_string(e.i) + " w=" + e.w.to_string() + " z=" + e.z.to_string() + " b=" + e.b.str() + ")";

  const std::string format = config.output.empty() ? "csv" : config.output;
  if (format == "json") {
    Json j;
    j["n"] = config.n;
    j["descent_pairs"] = scan.descent_pairs;
    j["entries"] = Json::array();
    for (const auto& e : scan.entries)
      j["entries"].push_back(
          {{"i", e.i}, {"w", e.w.to_string()}, {"z", e.z.to_string()}, {"b", e.b.str()}, {"c", e.c.str()}});
    j["b_histogram"] = Json::object();
    for (const auto& [b, count] : scan.b_histogram) j["b_histogram"][b.str()] = count;
    j["conjecture_violations"] = scan.conjecture_violations.size();
    j["structural_violations"] = scan.structural_violations;
    out << j.dump() << "\n";
  } else {
    const bool csv = format == "csv";
    if (csv) out << "i,w,z,b,c\n";
    for (const auto& e : scan.entries) {
      if (csv)
        out << e.i << "," << csv_field(e.w.to_string()) << "," << csv_field(e.z.to_string()) << "," << e.b << ","
            << e.c << "\n";
      else
        out << "i=" << e.i << " w=" << e.w.to_string() << " z=" << e.z.to_string() << " b=" << e.b << " c=" << e.c
            << "\n";
    }
    for (const auto& v : scan.structural_violations) out << "structural violation: " << v << "\n";
    out << "b-values observed: {" << observed << "}; conjecture violations: " << violations << "\n";
  }
  return scan.structural_violations.empty() ? 0 : kExitFailure;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Hecke algebra actions on the coinvariant algebra", "hecke-coinv"};
  app.require_subcommand(1);
  app.footer(cost_table());

  RunConfig config;
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--n", config.n, "Size of the symmetric group");
    sub->add_option("--q", config.q, "A rational value for q, or 'symbolic'");
    sub->add_option("--degree-bound", config.degree_bound, "Largest monomial degree in operator checks")
        ->check(CLI::NonNegativeNumber);
    sub->add_option("--output", config.output, "Output format")->check(CLI::IsMember({"json", "csv", "text"}));
    sub->add_option("--seed", config.seed, "Seed for randomized checks");
    sub->add_option("--jobs", config.jobs, "Worker threads")->check(CLI::PositiveNumber);
  };

  auto* schubert = app.add_subcommand("schubert", "Print every Schubert polynomial of S_n");
  add_common(schubert);

  std::string char_action = "all";
  auto* chr = app.add_subcommand("char", "Graded character table: rows k, columns mu");
  add_common(chr);
  chr->add_option("--action", char_action, "rho1, rho2, weights or all")
      ->check(CLI::IsMember({"rho1", "rho2", "weights", "all"}));

  std::string matrix_action = "rho1", matrix_word;
  int matrix_k = 1;
  std::optional<int> matrix_i;
  auto* matrix = app.add_subcommand("matrix", "Matrix of T_i or of a word T_{i1}...T_{im} on R^k");
  add_common(matrix);
  matrix->add_option("--action", matrix_action, "rho1, rho2 or symq1")->check(CLI::IsMember({"rho1", "rho2", "symq1"}));
  matrix->add_option("--k", matrix_k, "Degree");
  auto* i_opt = matrix->add_option("--i", matrix_i, "Generator index");
  matrix->add_option("--word", matrix_word, "Generator word such as 1.2.1")->excludes(i_opt);

  std::string suite = "all";
  auto* verify = app.add_subcommand("verify", "Run verification suites");
  add_common(verify);
  std::vector<std::string> suite_choices = suite_names();
  suite_choices.push_back("all");
  verify->add_option("--suite", suite, "Suite name or all")->check(CLI::IsMember(suite_choices));

  auto* scan = app.add_subcommand("scan-b", "Decompose every descent column of the rho2 generators");
  add_common(scan);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::Success& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitUsage;
  }

  try {
    if (config.jobs < 1) throw UsageError("--jobs must be at least 1");
    if (*schubert) return cmd_schubert(config, out);
    if (*chr) return cmd_char(config, char_action, out);
    if (*matrix) return cmd_matrix(config, matrix_action, matrix_k, matrix_i, matrix_word, out);
    if (*verify) return cmd_verify(config, suite, out);
    if (*scan) return cmd_scan_b(config, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace hecke
