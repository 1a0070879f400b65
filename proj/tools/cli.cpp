#include "cli.hpp"

#include "su11/algebra.hpp"
#include "su11/errors.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <map>
#include <regex>
#include <sstream>

namespace su11::cli {

namespace {

using ordered_json = nlohmann::ordered_json;

constexpr const char* kVersion = "0.1.0";
constexpr int kSchemaVersion = 1;

const std::map<std::string, Command> kCommands{
    {"check", Command::check}, {"casimir", Command::casimir}, {"transfo", Command::transfo},
    {"reduce", Command::reduce}};

const std::map<std::string, Rep> kReps{
    {"mp", Rep::mp},       {"hp", Rep::hp},       {"villain", Rep::villain},
    {"saf", Rep::saf},     {"perelomov", Rep::perelomov}, {"bose1", Rep::bose1},
    {"bose2", Rep::bose2}, {"two_mode", Rep::two_mode},   {"all", Rep::all}};

const std::map<std::string, Format> kFormats{
    {"text", Format::text}, {"json", Format::json}, {"csv", Format::csv}};

const std::map<std::string, FidelitySel> kFidelities{
    {"as_printed", FidelitySel::as_printed}, {"corrected", FidelitySel::corrected},
    {"both", FidelitySel::both}};

// Every flag the parser knows; --config files use the same names.
const std::vector<std::string> kValueFlags{"rep",   "k",      "spin",   "p0",    "lambda", "dim",
                                           "dim-b", "p-min",  "margin", "tol",   "beta",   "power",
                                           "epsilon", "phi1", "phi2",   "pairs", "format", "fidelity"};

template <typename Map>
std::string key_of(const Map& map, typename Map::mapped_type value) {
  for (const auto& [k, v] : map)
    if (v == value) return k;
  return "?";
}

std::string num(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("--config: cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// Turns a flat JSON object into "--key value" tokens.
std::vector<std::string> config_tokens(const std::string& path) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(read_file(path));
  } catch (const nlohmann::json::parse_error& e) {
    throw UsageError("--config: '" + path + "' is not valid JSON: " + e.what());
  }
  if (!doc.is_object()) throw UsageError("--config: top-level value must be an object");
  std::vector<std::string> tokens;
  for (const auto& [key, value] : doc.items()) {
    if (std::find(kValueFlags.begin(), kValueFlags.end(), key) == kValueFlags.end()) {
      throw UsageError("--config: unknown field '" + key + "'");
    }
    std::string text;
    if (value.is_string()) {
      text = value.get<std::string>();
    } else if (value.is_number_integer()) {
      text = std::to_string(value.get<long long>());
    } else if (value.is_number()) {
      text = num(value.get<double>());
    } else {
      throw UsageError("--config: field '" + key + "' must be a string or number");
    }
    tokens.push_back("--" + key);
    tokens.push_back(text);
  }
  return tokens;
}

void require(bool ok, const std::string& message) {
  if (!ok) throw UsageError(message);
}

void validate(const RunConfig& c) {
  require(c.k > 0.0 && std::isfinite(c.k), "--k: Bargmann index must be positive");
  try {
    (void)Spin::from_double(c.spin);
  } catch (const DomainError&) {
    throw UsageError("--spin: must be a positive half-integer (0.5, 1, 1.5, ...)");
  }
  require(c.lambda > 0.0 && std::isfinite(c.lambda), "--lambda: must be positive");
  require(std::isfinite(c.p0.real()) && std::isfinite(c.p0.imag()), "--p0: must be finite");
  if (c.dim) {
    const std::size_t min_dim =
        c.rep == Rep::bose1 || c.rep == Rep::bose2 ? kMinBoseFormDim : kMinFockDim;
    require(*c.dim >= min_dim, "--dim: must be at least " + std::to_string(min_dim));
  }
  if (c.dim_b) require(*c.dim_b >= kMinFockDim, "--dim-b: must be at least 4");
  if (c.tolerance) require(*c.tolerance > 0.0, "--tol: must be positive");
  if (c.p_min) require(std::isfinite(*c.p_min), "--p-min: must be finite");
  require(c.beta >= 1, "--beta: must be a positive integer");
  require(c.power >= 1 && c.power <= 3, "--power: must be 1, 2 or 3");
  require(c.pairs >= 2, "--pairs: must be at least 2");
  if (c.command == Command::reduce) {
    try {
      ModelParams(c.epsilon, c.phi1, c.phi2).require_nonsingular();
    } catch (const DomainError& e) {
      throw UsageError(std::string("--epsilon/--phi1/--phi2: ") + e.what());
    }
  }
}

// ---------------------------------------------------------------------------
// Execution

struct Discrepancy {
  std::string name;
  std::string description;
  double observed;
  std::string expected;
  bool reproduced;
};

struct Outcome {
  CheckReport report;
  std::vector<Discrepancy> discrepancies;
  std::optional<ReductionResult> reduction;
  std::optional<FreeParticle> free;
};

std::size_t default_dim(Rep rep) {
  switch (rep) {
    case Rep::two_mode: return 24;
    case Rep::bose1:
    case Rep::bose2: return kBoseFormDim;
    default: return 64;
  }
}

std::size_t margin_for(const RunConfig& c, Rep rep, std::size_t dim) {
  if (c.margin) return *c.margin;
  if (rep == Rep::hp) return 0;  // exact on its (2S+1)-dimensional space
  if (rep == Rep::bose1 || rep == Rep::bose2) return dim / 4;
  return 2;
}

double tolerance_for(const RunConfig& c, Rep rep) {
  if (c.tolerance) return *c.tolerance;
  if (rep == Rep::bose1 || rep == Rep::bose2) return kBoseFormResidualBound;
  return 1e-10;
}

BasisSpec circle_for(const RunConfig& c, std::size_t count, double spin_offset = 0.0) {
  const double p_min = c.p_min.value_or(-static_cast<double>(count / 2) + spin_offset);
  return BasisSpec::circle(p_min, count);
}

double half_offset(Spin s) { return s.twice() % 2 ? 0.5 : 0.0; }

struct Built {
  std::string label;
  Rep rep;
  AlgebraTriple triple;
};

std::vector<Fidelity> fidelities(FidelitySel sel) {
  switch (sel) {
    case FidelitySel::as_printed: return {Fidelity::as_printed};
    case FidelitySel::corrected: return {Fidelity::corrected};
    case FidelitySel::both: return {Fidelity::as_printed, Fidelity::corrected};
  }
  return {};
}

std::vector<Built> build(const RunConfig& c, Rep rep, FidelitySel sel) {
  const std::size_t dim = c.dim.value_or(default_dim(rep));
  const auto spin = Spin::from_double(c.spin);
  const std::string name = to_string(rep);
  std::vector<Built> out;
  switch (rep) {
    case Rep::mp: out.push_back({name, rep, mp_realization(c.k, dim)}); break;
    case Rep::hp:
      for (auto f : fidelities(sel)) out.push_back({name + "[" + to_string(f) + "]", rep, hp_spin(spin, f)});
      break;
    case Rep::villain:
      for (auto f : fidelities(sel)) {
        out.push_back({name + "[" + to_string(f) + "]", rep,
                       villain_spin(spin, circle_for(c, dim, half_offset(spin)), f)});
      }
      break;
    case Rep::saf: out.push_back({name, rep, saf_realization(c.p0, circle_for(c, dim))}); break;
    case Rep::perelomov:
      out.push_back({name, rep, perelomov_realization(c.lambda, circle_for(c, dim))});
      break;
    case Rep::bose1: out.push_back({name, rep, saf_bose_form(c.p0, dim, BoseForm::form1)}); break;
    case Rep::bose2: out.push_back({name, rep, saf_bose_form(c.p0, dim, BoseForm::form2)}); break;
    case Rep::two_mode: out.push_back({name, rep, two_mode(dim, c.dim_b.value_or(dim))}); break;
    case Rep::all: break;
  }
  return out;
}

CheckSpec spec_for(const RunConfig& c, const Built& b, const std::string& label) {
  return {margin_for(c, b.rep, c.dim.value_or(default_dim(b.rep))), tolerance_for(c, b.rep), label};
}

std::vector<Discrepancy> discrepancy_ledger(const RunConfig& c) {
  const auto spin = Spin::from_double(c.spin);
  std::vector<Discrepancy> out;

  const auto hp = hp_spin(spin, Fidelity::as_printed);
  const double adj = maxabs_norm(hp.kplus() - hp.kminus().adjoint());
  out.push_back({"hp_spin_adjointness",
                 "as printed, S+ = a^dag (2S + a^dag a)^(1/2) is not the adjoint of S- = (2S - a^dag a)^(1/2) a",
                 adj, "> 0", adj > 1e-10});

  const std::size_t count = c.dim.value_or(64);
  const auto villain = villain_spin(spin, circle_for(c, count, half_offset(spin)), Fidelity::as_printed);
  const auto v = check_commutators(villain, {2, 1e-10, ""}).at("[S+,S-]-2Sz");
  out.push_back({"villain_spin_ladder_bracket",
                 "as printed, f(P)^2 = (S+1/2)^2 - (P-1/2)^2 gives [S+,S-] - 2Sz = -2 on unclamped interior states",
                 v.residual, "2", std::abs(v.residual - 2.0) <= 1e-10});

  const auto per = perelomov_realization(c.lambda, circle_for(c, count));
  const auto cas = check_casimir(per, {2, 1e-10, ""}).checks().front();
  const bool alt_bad = cas.metadata.at("alternative_consistent") == "false";
  out.push_back({"perelomov_casimir",
                 "the closed form -1/4 - lambda^2/4 disagrees with the matrices, which give -1/4 - lambda^2 "
                 "(the value implied by P0 = 1/2 + i lambda)",
                 std::stod(cas.metadata.at("alternative_residual")), "> 0", alt_bad && cas.passed});
  return out;
}

Outcome run_all(const RunConfig& c) {
  Outcome out;
  const Rep reps[] = {Rep::mp,        Rep::hp,    Rep::villain, Rep::saf,
                      Rep::perelomov, Rep::bose1, Rep::bose2,   Rep::two_mode};
  RunConfig defaults = c;
  defaults.dim.reset();
  defaults.margin.reset();
  defaults.p_min.reset();
  for (Rep rep : reps) {
    for (const auto& b : build(defaults, rep, FidelitySel::corrected)) {
      const auto spec = spec_for(defaults, b, "");
      out.report.append(check_commutators(b.triple, spec), b.label);
      out.report.append(check_casimir(b.triple, spec), b.label);
    }
  }

  const auto basis = circle_for(defaults, 64);
  out.report.append(compare_triples(perelomov_realization(c.lambda, basis),
                                    saf_realization({0.5, c.lambda}, basis), {0, 1e-12, ""}),
                    "perelomov=saf(1/2+i*lambda)");

  const auto spin = Spin::from_double(c.spin);
  const auto range = BasisSpec::circle(-spin.value(), spin.multiplicity());
  out.report.append(compare_triples(hp_spin(spin, Fidelity::corrected).with_basis(range),
                                    villain_spin(spin, range, Fidelity::corrected), {0, 1e-12, ""}),
                    "hp=villain");

  out.discrepancies = discrepancy_ledger(defaults);
  return out;
}

Outcome execute(const RunConfig& c) {
  Outcome out;
  switch (c.command) {
    case Command::check:
    case Command::casimir: {
      if (c.rep == Rep::all) return run_all(c);
      const auto built = build(c, c.rep, c.fidelity);
      for (const auto& b : built) {
        const auto spec = spec_for(c, b, built.size() > 1 ? b.label : "");
        out.report.append(c.command == Command::check ? check_commutators(b.triple, spec)
                                                      : check_casimir(b.triple, spec));
      }
      break;
    }
    case Command::transfo: {
      const std::size_t count = c.dim.value_or(64);
      CheckSpec spec{c.margin.value_or(2), c.tolerance.value_or(1e-10), ""};
      out.report.append(check_transfo(circle_for(c, count), c.beta, c.power, spec));
      break;
    }
    case Command::reduce: {
      const ModelParams params(c.epsilon, c.phi1, c.phi2);
      const double tol = c.tolerance.value_or(1e-9);
      out.reduction = verify_reduction(params, c.pairs, tol, c.dim);
      out.free = free_params(params);
      out.report.add("spectral_max_deviation", out.reduction->max_deviation, tol,
                     {{"pairs", std::to_string(c.pairs)}});
      break;
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Serialization

ordered_json params_json(const RunConfig& c) {
  ordered_json p;
  auto complex_json = [](Complex z) { return ordered_json{{"re", z.real()}, {"im", z.imag()}}; };
  if (c.command == Command::reduce) {
    p["epsilon"] = c.epsilon;
    p["phi1"] = c.phi1;
    p["phi2"] = c.phi2;
    p["pairs"] = c.pairs;
  } else if (c.command == Command::transfo) {
    p["beta"] = c.beta;
    p["power"] = c.power;
  } else {
    p["rep"] = to_string(c.rep);
    switch (c.rep) {
      case Rep::mp: p["k"] = c.k; break;
      case Rep::hp:
      case Rep::villain:
        p["spin"] = c.spin;
        p["fidelity"] = key_of(kFidelities, c.fidelity);
        break;
      case Rep::saf:
      case Rep::bose1:
      case Rep::bose2: p["p0"] = complex_json(c.p0); break;
      case Rep::perelomov: p["lambda"] = c.lambda; break;
      case Rep::two_mode: break;
      case Rep::all:
        p["k"] = c.k;
        p["spin"] = c.spin;
        p["p0"] = complex_json(c.p0);
        p["lambda"] = c.lambda;
        break;
    }
  }
  if (c.dim) p["dim"] = *c.dim;
  if (c.dim_b) p["dim_b"] = *c.dim_b;
  if (c.p_min) p["p_min"] = *c.p_min;
  if (c.margin) p["margin"] = *c.margin;
  if (c.tolerance) p["tolerance"] = *c.tolerance;
  return p;
}

bool outcome_passed(const Outcome& o) { return o.report.overall_passed(); }

std::string to_json(const RunConfig& c, const Outcome& o) {
  ordered_json doc;
  doc["version"] = kSchemaVersion;
  doc["command"] = to_string(c.command);
  doc["params"] = params_json(c);
  ordered_json checks = ordered_json::array();
  for (const auto& ch : o.report.checks()) {
    ordered_json j{{"name", ch.name}, {"residual", ch.residual}, {"tolerance", ch.tolerance},
                   {"passed", ch.passed}};
    if (!ch.metadata.empty()) j["metadata"] = ch.metadata;
    checks.push_back(std::move(j));
  }
  doc["checks"] = std::move(checks);
  if (!o.discrepancies.empty()) {
    ordered_json d = ordered_json::array();
    for (const auto& x : o.discrepancies) {
      d.push_back({{"name", x.name}, {"description", x.description}, {"observed", x.observed},
                   {"expected", x.expected}, {"reproduced", x.reproduced}});
    }
    doc["discrepancies"] = std::move(d);
  }
  if (o.reduction) {
    const auto& r = *o.reduction;
    doc["p0"] = r.p0;
    doc["h0"] = r.h0;
    doc["mass"] = r.mass;
    doc["condensate"] = o.free->condensate;
    doc["spectra"] = {{"direct", r.direct_spectrum}, {"predicted", r.predicted_spectrum}};
    doc["max_deviation"] = r.max_deviation;
  }
  doc["overall_passed"] = outcome_passed(o);
  return doc.dump(2) + "\n";
}

std::string csv_field(const std::string& s) {
  std::string out = "\"";
  for (char ch : s) out += ch == '"' ? std::string("\"\"") : std::string(1, ch);
  return out + "\"";
}

std::string to_csv(const Outcome& o) {
  std::ostringstream out;
  out << "name,residual,tolerance,passed\n";
  for (const auto& ch : o.report.checks()) {
    out << csv_field(ch.name) << ',' << num(ch.residual) << ',' << num(ch.tolerance) << ','
        << (ch.passed ? "true" : "false") << '\n';
  }
  return out.str();
}

std::string to_text(const RunConfig& c, const Outcome& o) {
  std::ostringstream out;
  out << "su11check " << kVersion << "  command: " << to_string(c.command) << "\n";
  for (const auto& ch : o.report.checks()) {
    out << (ch.passed ? "PASS  " : "FAIL  ") << ch.name << "  residual=" << num(ch.residual)
        << "  tolerance=" << num(ch.tolerance) << "\n";
  }
  if (!o.discrepancies.empty()) {
    out << "\ndiscrepancy ledger (typeset forms that do not close):\n";
    for (const auto& d : o.discrepancies) {
      out << (d.reproduced ? "  REPRODUCED      " : "  NOT REPRODUCED  ") << d.name
          << "  observed=" << num(d.observed) << " (expected " << d.expected << ")\n"
          << "      " << d.description << "\n";
    }
  }
  if (o.reduction) {
    const auto& r = *o.reduction;
    out << "\np0=" << num(r.p0) << "  h0=" << num(r.h0) << "  mass=" << num(r.mass)
        << (o.free->condensate ? "  ground state (condensate)" : "  no condensate (2*phi1+phi2 < 0)")
        << "\n  n  direct  predicted\n";
    for (std::size_t n = 0; n < r.direct_spectrum.size(); ++n) {
      out << "  " << n << "  " << num(r.direct_spectrum[n]) << "  " << num(r.predicted_spectrum[n]) << "\n";
    }
    out << "max_deviation=" << num(r.max_deviation) << "\n";
  }
  out << "overall: " << (outcome_passed(o) ? "PASS" : "FAIL") << "\n";
  return out.str();
}

}  // namespace

std::string to_string(Command command) { return key_of(kCommands, command); }
std::string to_string(Rep rep) { return key_of(kReps, rep); }

Complex parse_complex(const std::string& text) {
  static const std::regex re(
      R"(^\s*([+-]?(?:\d+\.?\d*|\.\d+)(?:[eE][+-]?\d+)?)(?:([+-])((?:\d+\.?\d*|\.\d+)(?:[eE][+-]?\d+)?)?i)?\s*$)");
  std::smatch m;
  if (!std::regex_match(text, m, re)) {
    throw UsageError("--p0: cannot parse complex number '" + text + "' (expected a, a+bi or a-bi)");
  }
  const double re_part = std::stod(m[1].str());
  double im_part = 0.0;
  if (m[2].matched) {
    im_part = m[3].matched ? std::stod(m[3].str()) : 1.0;
    if (m[2].str() == "-") im_part = -im_part;
  }
  return {re_part, im_part};
}

std::string format_complex(Complex z) {
  return num(z.real()) + (std::signbit(z.imag()) ? "-" : "+") + num(std::abs(z.imag())) + "i";
}

RunConfig parse_args(const std::vector<std::string>& args) {
  if (args.empty()) throw UsageError("missing command (one of: check, casimir, transfo, reduce)");

  // Splice config-file values in right after the command so explicit flags,
  // which come later, win under the take-last policy.
  std::vector<std::string> tokens;
  std::vector<std::string> rest;
  for (std::size_t i = 0; i < args.size(); ++i) {
    if (args[i] == "--config") {
      if (i + 1 >= args.size()) throw UsageError("--config: missing path");
      auto t = config_tokens(args[++i]);
      tokens.insert(tokens.end(), t.begin(), t.end());
    } else if (args[i].rfind("--config=", 0) == 0) {
      auto t = config_tokens(args[i].substr(9));
      tokens.insert(tokens.end(), t.begin(), t.end());
    } else {
      rest.push_back(args[i]);
    }
  }
  if (!rest.empty() && rest.front().rfind("-", 0) != 0) {
    tokens.insert(tokens.begin(), rest.front());
    rest.erase(rest.begin());
  }
  tokens.insert(tokens.end(), rest.begin(), rest.end());

  RunConfig c;
  std::string command;
  std::string rep = "all";
  std::string p0_text = format_complex(c.p0);
  std::string format = "text";
  std::string fidelity = "corrected";
  std::size_t dim = 0, dim_b = 0, margin = 0;
  double p_min = 0.0, tol = 0.0;

  CLI::App app{"Matrix checks for SU(1,1) and spin realizations on truncated bases", "su11check"};
  app.option_defaults()->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);
  app.add_option("command", command, "check | casimir | transfo | reduce")
      ->required()
      ->check(CLI::IsMember({"check", "casimir", "transfo", "reduce"}));
  app.add_option("--rep", rep, "mp | hp | villain | saf | perelomov | bose1 | bose2 | two_mode | all")
      ->check(CLI::IsMember({"mp", "hp", "villain", "saf", "perelomov", "bose1", "bose2", "two_mode", "all"}));
  app.add_option("--k", c.k, "Bargmann index (mp)");
  app.add_option("--spin", c.spin, "spin S, a positive half-integer (hp, villain)");
  app.add_option("--p0", p0_text, "complex P0 as a, a+bi or a-bi (saf, bose1, bose2)");
  app.add_option("--lambda", c.lambda, "lambda > 0 (perelomov)");
  auto* dim_opt = app.add_option("--dim", dim, "Fock dimension per mode or circle basis size");
  auto* dim_b_opt = app.add_option("--dim-b", dim_b, "second-mode dimension (two_mode)");
  auto* p_min_opt = app.add_option("--p-min", p_min, "lowest circle momentum");
  auto* margin_opt = app.add_option("--margin", margin, "interior margin for residuals");
  auto* tol_opt = app.add_option("--tol", tol, "pass/fail tolerance");
  app.add_option("--beta", c.beta, "shift power (transfo)");
  app.add_option("--power", c.power, "momentum power n in {1,2,3} (transfo)");
  app.add_option("--epsilon", c.epsilon, "oscillator energy (reduce)");
  app.add_option("--phi1", c.phi1, "self-interaction (reduce)");
  app.add_option("--phi2", c.phi2, "cross-interaction (reduce)");
  app.add_option("--pairs", c.pairs, "number of pair levels (reduce)");
  app.add_option("--format", format, "text | json | csv")->check(CLI::IsMember({"text", "json", "csv"}));
  app.add_option("--fidelity", fidelity, "as_printed | corrected | both")
      ->check(CLI::IsMember({"as_printed", "corrected", "both"}));
  app.add_option("--config", "JSON file with the same field names as the flags");

  std::vector<std::string> reversed(tokens.rbegin(), tokens.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    throw HelpRequested(app.help());
  } catch (const CLI::ParseError& e) {
    throw UsageError(e.what());
  }

  c.command = kCommands.at(command);
  c.rep = kReps.at(rep);
  c.p0 = parse_complex(p0_text);
  c.format = kFormats.at(format);
  c.fidelity = kFidelities.at(fidelity);
  if (dim_opt->count()) c.dim = dim;
  if (dim_b_opt->count()) c.dim_b = dim_b;
  if (p_min_opt->count()) c.p_min = p_min;
  if (margin_opt->count()) c.margin = margin;
  if (tol_opt->count()) c.tolerance = tol;

  validate(c);
  return c;
}

RunOutput run(const RunConfig& config) {
  RunOutput out;
  Outcome outcome;
  try {
    outcome = execute(config);
  } catch (const std::exception& e) {
    out.diagnostics = std::string("error: ") + e.what() + "\n";
    out.exit_code = kExitUsage;
    return out;
  }
  switch (config.format) {
    case Format::json: out.report = to_json(config, outcome); break;
    case Format::csv: out.report = to_csv(outcome); break;
    case Format::text: out.report = to_text(config, outcome); break;
  }
  out.exit_code = outcome_passed(outcome) ? kExitPass : kExitCheckFailed;
  return out;
}

}  // namespace su11::cli
