#include "pke/cli.hpp"

#include <algorithm>
#include <cctype>
#include <chrono>
#include <fstream>
#include <functional>
#include <istream>
#include <iterator>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "pke/catalog.hpp"
#include "pke/errors.hpp"
#include "pke/geometry.hpp"
#include "pke/json_io.hpp"
#include "pke/ma_engine.hpp"
#include "pke/rational.hpp"

namespace pke::cli {
namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Outcome {
  int code = kSuccess;
  Json verdict = Json::object();
  std::string text;
};

class PhaseTimer {
 public:
  void mark(const std::string& phase) {
    const auto now = std::chrono::steady_clock::now();
    phases_[phase] = std::chrono::duration<double, std::milli>(now - last_).count();
    last_ = now;
  }
  const Json& phases() const { return phases_; }

 private:
  std::chrono::steady_clock::time_point last_ = std::chrono::steady_clock::now();
  Json phases_ = Json::object();
};

Json read_json(const std::string& source, std::istream& in) {
  if (source.empty()) throw UsageError("missing input file");
  try {
    if (source == "-") return Json::parse(in);
    std::ifstream file(source);
    if (!file) throw UsageError("cannot open " + source);
    return Json::parse(file);
  } catch (const Json::parse_error& e) {
    throw UsageError("malformed JSON in " + (source == "-" ? std::string("standard input") : source) + ": " + e.what());
  }
}

template <typename T>
std::vector<T> split_list(const std::string& text, const std::function<T(const std::string&)>& parse) {
  std::vector<T> out;
  std::stringstream stream(text);
  std::string item;
  while (std::getline(stream, item, ',')) {
    item.erase(std::remove_if(item.begin(), item.end(), ::isspace), item.end());
    if (item.empty()) continue;
    out.push_back(parse(item));
  }
  return out;
}

std::vector<Rational> parse_grid(const std::string& text) {
  auto grid = split_list<Rational>(text, [](const std::string& s) { return parse_rational(s); });
  for (const auto& r : grid) {
    if (r == 0) throw UsageError("r grid must not contain 0");
  }
  return grid;
}

std::vector<unsigned> parse_partition(const std::string& text) {
  auto parts = split_list<unsigned>(text, [](const std::string& s) {
    std::size_t used = 0;
    const long v = std::stol(s, &used);
    if (used != s.size() || v <= 0) throw UsageError("partition blocks must be positive integers: " + s);
    return static_cast<unsigned>(v);
  });
  if (parts.empty()) throw UsageError("empty partition");
  return parts;
}

Json grid_json(const std::vector<Rational>& grid) {
  Json out = Json::array();
  for (const auto& r : grid) out.push_back(rational_to_json(r));
  return out;
}

std::string sign_text(int sign) { return sign > 0 ? "+" : (sign < 0 ? "-" : "none"); }

std::string join_rationals(const std::vector<Rational>& values) {
  std::string out;
  for (const auto& v : values) out += (out.empty() ? "" : ", ") + to_string(v);
  return out;
}

Json solutions_json(const std::vector<MultiPoly>& solutions, std::string& text) {
  Json list = Json::array();
  for (const auto& p : solutions) {
    const MAResult check = verify_ma_star(p);
    list.push_back(Json{{"P", poly_to_json(p)}, {"sign", sign_text(check.sign)}});
    text += "  [" + sign_text(check.sign) + "] " + to_string(p) + "\n";
  }
  return list;
}

// ---------------------------------------------------------------- commands

Outcome cmd_verify(const MultiPoly& p) {
  const MAResult result = verify_ma_star(p);
  Outcome o;
  o.verdict = ma_result_to_json(result);
  o.code = result.is_solution ? kSuccess : kRefuted;
  o.text = "P   = " + to_string(p) + "\nLHS = " + to_string(result.witness) + "\n";
  o.text += result.is_solution ? "verdict: solution, sign " + sign_text(result.sign) + "\n"
                               : "verdict: not a solution\n";
  return o;
}

Outcome cmd_classify_flat(const MultiPoly& d0) {
  const FlatClassification flat = classify_flat(d0);
  Outcome o;
  o.verdict = flat_classification_to_json(flat);
  o.code = flat.linear() ? kSuccess : kRefuted;
  o.text = "D0  = " + to_string(d0) + "\nLHS = " + to_string(flat.lhs) + "\n";
  o.text += flat.linear() ? "verdict: linear, coefficients " + join_rationals(flat.coefficients) + " (product " +
                                to_string(flat.product) + ")\n"
                          : "verdict: not a solution\n";
  return o;
}

Outcome cmd_axis(const MultiPoly& p, std::size_t axis) {
  Outcome o;
  try {
    const AxisProfile profile = axis_profile_check(p, axis);
    o.verdict = axis_profile_to_json(profile);
    o.verdict["consistent"] = true;
    o.text = "axis " + std::to_string(axis + 1) + ": eps = " + std::to_string(profile.epsilon) +
             ", r = " + to_string(profile.r) + ", k = " + std::to_string(profile.k) +
             ", companion sign " + sign_text(profile.q_sign) + "\n";
  } catch (const ProfileMismatch& e) {
    o.code = kRefuted;
    o.verdict = Json{{"axis", axis + 1}, {"consistent", false}, {"reason", e.what()}};
    o.text = "axis " + std::to_string(axis + 1) + ": profile mismatch: " + e.what() + "\n";
  }
  return o;
}

Outcome cmd_continue(const CauchyData& cd, unsigned bound) {
  Outcome o;
  try {
    const Continuation c = taylor_continue_n2(cd, bound);
    o.verdict = continuation_to_json(c);
    o.verdict["consistent"] = true;
    o.text = "P = " + to_string(c.polynomial) + "\n";
    for (std::size_t h = 0; h < c.coefficients.size(); ++h) {
      o.text += "  P" + std::to_string(h) + "(x1) = " + to_string(c.coefficients[h]) + "\n";
    }
    o.text += "verdict: solution, sign " + sign_text(c.sign) + "\n";
  } catch (const Inconsistent& e) {
    o.code = kRefuted;
    o.verdict = Json{{"consistent", false}, {"reason", e.what()}};
    o.text = std::string("verdict: inconsistent: ") + e.what() + "\n";
  }
  return o;
}

Outcome cmd_scan_k(unsigned k_max, const std::vector<Rational>& grid) {
  const std::set<unsigned> feasible = feasible_k_scan_n2(k_max, grid);
  Outcome o;
  o.verdict = Json{{"feasible_k", std::vector<unsigned>(feasible.begin(), feasible.end())}};
  o.text = "feasible k:";
  for (unsigned k : feasible) o.text += " " + std::to_string(k);
  if (feasible.empty()) o.text += " none";
  o.text += "\n";
  return o;
}

Outcome cmd_classify_n1(unsigned k_max, const std::vector<Rational>& grid) {
  Outcome o;
  const auto solutions = classify_n1(k_max, grid);
  o.text = std::to_string(solutions.size()) + " solution(s)\n";
  o.verdict = Json{{"count", solutions.size()}, {"solutions", solutions_json(solutions, o.text)}};
  return o;
}

Outcome cmd_search_n2(const std::vector<Rational>& grid, unsigned bound) {
  Outcome o;
  const auto solutions = search_n2(grid, bound);
  const auto classes = canonical_classes(solutions);
  o.text = std::to_string(solutions.size()) + " solution(s)\n";
  Json list = solutions_json(solutions, o.text);
  Json canon = Json::array();
  o.text += std::to_string(classes.size()) + " canonical class(es)\n";
  for (const auto& p : classes) {
    canon.push_back(poly_to_json(p));
    o.text += "  " + to_string(p) + "\n";
  }
  o.verdict = Json{{"count", solutions.size()}, {"solutions", std::move(list)}, {"canonical_classes", std::move(canon)}};
  return o;
}

Outcome catalog_outcome(const std::vector<SolutionRecord>& records, const std::string& out_path) {
  Outcome o;
  Json array = Json::array();
  for (const auto& rec : records) {
    array.push_back(record_to_json(rec));
    const MAResult check = verify_ma_star(rec.P);
    o.text += rec.name + "  " + rec.manifold_label + "  n=" + std::to_string(rec.n) + " h=" + std::to_string(rec.h) +
              " K=" + std::to_string(rec.K) + " N>=" + std::to_string(rec.min_embedding_dim) + "  verified " +
              sign_text(check.sign) + "\n  P = " + to_string(rec.P) + "\n";
  }
  if (!out_path.empty()) {
    std::ofstream file(out_path);
    if (!file) throw UsageError("cannot write " + out_path);
    file << array.dump(2) << "\n";
    o.text += "wrote " + std::to_string(records.size()) + " record(s) to " + out_path + "\n";
  }
  o.verdict = Json{{"count", records.size()}, {"records", std::move(array)}};
  return o;
}

Outcome cmd_einstein(const ToricPotential& potential, std::size_t count, double step, double tol, std::uint64_t seed,
                     double radius) {
  const auto points = sample_points(potential.nvars(), count, seed, radius);
  const EinsteinFit fit = einstein_fit(potential, points, step);
  const bool einstein = fit.max_residual < tol;
  Outcome o;
  o.code = einstein ? kSuccess : kRefuted;
  o.verdict = Json{{"lambda", fit.lambda}, {"max_residual", fit.max_residual}, {"tolerance", tol}, {"einstein", einstein}};
  std::ostringstream text;
  text.precision(12);
  text << "lambda = " << fit.lambda << "\nmax residual = " << fit.max_residual << " (tolerance " << tol << ")\n"
       << "verdict: " << (einstein ? "Einstein" : "not Einstein") << "\n";
  o.text = text.str();
  return o;
}

bool looks_like_poly(const Json& j) {
  return j.is_object() && j.size() == 2 && j.contains("nvars") && j.contains("terms");
}

// Rewrites every embedded polynomial in canonical form.
Json canonical_report(const Json& j) {
  if (looks_like_poly(j)) return poly_to_json(poly_from_json(j));
  if (j.is_object()) {
    Json out = Json::object();
    for (const auto& [key, value] : j.items()) out[key] = canonical_report(value);
    return out;
  }
  if (j.is_array()) {
    Json out = Json::array();
    for (const auto& value : j) out.push_back(canonical_report(value));
    return out;
  }
  return j;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact verifier and classifier for toric para-Kaehler-Einstein Monge-Ampere equations", "pke-ma"};
  app.require_subcommand(1);
  app.fallthrough();

  bool json = false;
  bool timings = false;
  app.add_flag("--json", json, "Emit the canonical JSON report");
  app.add_flag("--timings", timings, "Include per-phase timings in the report");

  std::string poly_src;
  std::optional<unsigned> n_opt;
  auto* verify = app.add_subcommand("verify", "Check LHS(P) == +-P^n exactly");
  verify->add_option("--poly", poly_src, "Polynomial JSON file, or - for standard input")->required();
  verify->add_option("--n", n_opt, "Expected dimension (must match the polynomial)");

  auto* flat = app.add_subcommand("classify-flat", "Classify a flat potential D0");
  flat->add_option("--poly", poly_src, "Polynomial JSON file, or - for standard input")->required();
  flat->add_option("--n", n_opt, "Expected dimension (must match the polynomial)");

  std::size_t axis_index = 1;
  auto* axis = app.add_subcommand("axis", "Axis restriction and companion check");
  axis->add_option("--poly", poly_src, "Polynomial JSON file, or - for standard input")->required();
  axis->add_option("--axis", axis_index, "Axis (1-based)")->required()->check(CLI::PositiveNumber);
  axis->add_option("--n", n_opt, "Expected dimension (must match the polynomial)");

  int epsilon = 1;
  int sigma = 1;
  std::string r_text;
  unsigned k = 2;
  unsigned bound = 8;
  auto* cont = app.add_subcommand("continue", "Continue two-variable Cauchy data order by order");
  cont->add_option("--epsilon", epsilon, "Sign of P on the axis (+1 or -1)")->check(CLI::IsMember({1, -1}));
  cont->add_option("--sigma", sigma, "Sign of the x2-derivative data (+1 or -1)")->check(CLI::IsMember({1, -1}));
  cont->add_option("--r", r_text, "Axis parameter r (rational, e.g. 3 or -1/2)")->required();
  cont->add_option("--k", k, "Axis power k")->required()->check(CLI::PositiveNumber);
  cont->add_option("--bound", bound, "Maximal x2-degree")->capture_default_str();

  unsigned k_max = 6;
  std::string grid_text = "1,-1,2,-2,3,-3";
  auto* scan = app.add_subcommand("scan-k", "Feasible axis powers k for n = 2");
  scan->add_option("--k-max", k_max, "Largest k scanned")->capture_default_str();
  scan->add_option("--r-grid", grid_text, "Comma-separated non-zero rationals")->capture_default_str();

  auto* n1 = app.add_subcommand("classify-n1", "All one-variable solutions eps(1+x/r)^k over the grid");
  n1->add_option("--k-max", k_max, "Largest k scanned")->capture_default_str();
  n1->add_option("--r-grid", grid_text, "Comma-separated non-zero rationals (default 1,-1,2,-2,3,-3,1/2,-1/2,3/2,-3/2)");

  auto* n2 = app.add_subcommand("search-n2", "All two-variable solutions reachable over the grid");
  n2->add_option("--r-grid", grid_text, "Comma-separated non-zero rationals (default 1,2,3,4,9)");
  n2->add_option("--bound", bound, "Maximal x2-degree of the continuation")->capture_default_str();

  unsigned K = 1;
  unsigned max_n = 3;
  std::string partition_text;
  std::string out_path;
  auto* catalog = app.add_subcommand("catalog", "Product-of-projective-spaces solutions");
  catalog->require_subcommand(1);
  auto* cat_list = catalog->add_subcommand("list", "Every partition of every n <= max-n");
  cat_list->add_option("--max-n", max_n, "Largest total dimension")->capture_default_str()->check(CLI::PositiveNumber);
  cat_list->add_option("--K", K, "Power parameter K")->capture_default_str()->check(CLI::PositiveNumber);
  cat_list->add_option("--out", out_path, "Write the records as a JSON array to this file");
  auto* cat_gen = catalog->add_subcommand("gen", "One record for a partition");
  cat_gen->add_option("--partition", partition_text, "Block sizes, e.g. 1,2")->required();
  cat_gen->add_option("--K", K, "Power parameter K")->capture_default_str()->check(CLI::PositiveNumber);
  cat_gen->add_option("--out", out_path, "Write the records as a JSON array to this file");

  std::string potential_src;
  std::size_t points = 5;
  double step = kDefaultStep;
  double tol = 1e-6;
  std::uint64_t seed = 1;
  double radius = 0.1;
  auto* einstein = app.add_subcommand("einstein-check", "Numeric fit of Ric = lambda g");
  einstein->add_option("--potential", potential_src, "Potential JSON file, or - for standard input")->required();
  einstein->add_option("--points", points, "Number of sample points")->capture_default_str();
  einstein->add_option("--step", step, "Finite-difference step")->capture_default_str();
  einstein->add_option("--tol", tol, "Residual tolerance")->capture_default_str();
  einstein->add_option("--seed", seed, "Sample seed")->capture_default_str();
  einstein->add_option("--radius", radius, "Sample coordinates lie in [-radius, radius]")->capture_default_str();

  std::string report_src;
  auto* report = app.add_subcommand("report", "Re-parse a JSON report and re-emit it canonically");
  report->add_option("--input", report_src, "Report JSON file, or - for standard input")->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kUsage;
  }

  PhaseTimer timer;
  std::string command;
  Json inputs = Json::object();
  Outcome outcome;

  auto load_poly = [&]() {
    MultiPoly p = poly_from_json(read_json(poly_src, in));
    if (n_opt && *n_opt != p.nvars()) {
      throw UsageError("--n " + std::to_string(*n_opt) + " does not match the polynomial's " +
                       std::to_string(p.nvars()) + " variables");
    }
    inputs["poly"] = poly_to_json(p);
    inputs["n"] = p.nvars();
    return p;
  };

  try {
    if (verify->parsed()) {
      command = "verify";
      const MultiPoly p = load_poly();
      timer.mark("parse");
      outcome = cmd_verify(p);
    } else if (flat->parsed()) {
      command = "classify-flat";
      const MultiPoly p = load_poly();
      timer.mark("parse");
      outcome = cmd_classify_flat(p);
    } else if (axis->parsed()) {
      command = "axis";
      const MultiPoly p = load_poly();
      if (axis_index > p.nvars()) throw UsageError("--axis exceeds the number of variables");
      inputs["axis"] = axis_index;
      timer.mark("parse");
      outcome = cmd_axis(p, axis_index - 1);
    } else if (cont->parsed()) {
      command = "continue";
      const Rational r = parse_rational(r_text);
      if (r == 0) throw UsageError("--r must be non-zero");
      inputs = Json{{"epsilon", epsilon}, {"sigma", sigma}, {"r", rational_to_json(r)}, {"k", k}, {"bound", bound}};
      const CauchyData cd = CauchyData::family(epsilon, sigma, r, k);
      timer.mark("parse");
      outcome = cmd_continue(cd, bound);
    } else if (scan->parsed()) {
      command = "scan-k";
      const auto grid = parse_grid(grid_text);
      inputs = Json{{"k_max", k_max}, {"r_grid", grid_json(grid)}};
      timer.mark("parse");
      outcome = cmd_scan_k(k_max, grid);
    } else if (n1->parsed()) {
      command = "classify-n1";
      if (n1->count("--r-grid") == 0) grid_text = "1,-1,2,-2,3,-3,1/2,-1/2,3/2,-3/2";
      const auto grid = parse_grid(grid_text);
      inputs = Json{{"k_max", k_max}, {"r_grid", grid_json(grid)}};
      timer.mark("parse");
      outcome = cmd_classify_n1(k_max, grid);
    } else if (n2->parsed()) {
      command = "search-n2";
      if (n2->count("--r-grid") == 0) grid_text = "1,2,3,4,9";
      const auto grid = parse_grid(grid_text);
      inputs = Json{{"r_grid", grid_json(grid)}, {"bound", bound}};
      timer.mark("parse");
      outcome = cmd_search_n2(grid, bound);
    } else if (cat_list->parsed()) {
      command = "catalog list";
      inputs = Json{{"max_n", max_n}, {"K", K}};
      timer.mark("parse");
      outcome = catalog_outcome(catalog_list(max_n, K), out_path);
    } else if (cat_gen->parsed()) {
      command = "catalog gen";
      const auto partition = parse_partition(partition_text);
      inputs = Json{{"partition", partition}, {"K", K}};
      timer.mark("parse");
      outcome = catalog_outcome({make_record(partition, K)}, out_path);
    } else if (einstein->parsed()) {
      command = "einstein-check";
      const ToricPotential potential = potential_from_json(read_json(potential_src, in));
      if (points < 3) throw UsageError("--points must be at least 3");
      if (!(step > 0.0) || !(radius > 0.0) || !(tol > 0.0)) throw UsageError("--step, --radius and --tol must be positive");
      inputs = Json{{"potential", potential_to_json(potential)}, {"points", points}, {"step", step},
                    {"tol", tol},        {"seed", seed},     {"radius", radius}};
      timer.mark("parse");
      outcome = cmd_einstein(potential, points, step, tol, seed, radius);
    } else if (report->parsed()) {
      const Json raw = read_json(report_src, in);
      if (!raw.is_object() || !raw.contains("command") || !raw.contains("verdict")) {
        throw UsageError("not a report: expected an object with \"command\" and \"verdict\"");
      }
      out << canonical_report(raw).dump(2) << "\n";
      return kSuccess;
    }
    timer.mark("compute");
  } catch (const UsageError& e) {
    err << "pke-ma: " << e.what() << "\n";
    return kUsage;
  } catch (const std::invalid_argument& e) {
    err << "pke-ma: invalid input: " << e.what() << "\n";
    return kUsage;
  } catch (const Json::exception& e) {
    err << "pke-ma: malformed input: " << e.what() << "\n";
    return kUsage;
  } catch (const DomainError& e) {
    err << "pke-ma: domain error: " << e.what() << "\n";
    return kDomain;
  } catch (const std::exception& e) {
    err << "pke-ma: internal error: " << e.what() << "\n";
    return kDomain;
  }

  if (json) {
    Json doc{{"command", command}, {"inputs", inputs}, {"verdict", outcome.verdict}, {"exit_code", outcome.code}};
    if (timings) doc["timings"] = timer.phases();
    out << doc.dump(2) << "\n";
  } else {
    out << outcome.text;
    if (timings) {
      out << "timings:";
      for (const auto& [phase, ms] : timer.phases().items()) out << " " << phase << " " << ms.get<double>() << " ms";
      out << "\n";
    }
  }
  return outcome.code;
}

}  // namespace pke::cli
