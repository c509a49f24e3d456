#include "eulerfrac/cli.hpp"

#include "eulerfrac/csummation.hpp"
#include "eulerfrac/error.hpp"
#include "eulerfrac/families.hpp"
#include "eulerfrac/identities.hpp"
#include "eulerfrac/oracle.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cstdlib>
#include <optional>
#include <sstream>

namespace eulerfrac::cli {

namespace {

using json = nlohmann::ordered_json;

constexpr const char* kVersion = "1.0.0";
constexpr int kDiagDigits = 6;

struct Command {
  std::string verb;
  std::string family;
  std::string params;
  int precision = 30;
  std::size_t terms = 1000;
  std::string tol = "1e-10";
  bool tol_given = false;
  std::string format = "text";
  bool no_metadata = false;
  std::string suite = "all";
  std::optional<long> n;
  std::string c = "1";
};

/// A usage problem detected after parsing.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::map<std::string, std::string> parse_params(const std::string& text) {
  std::map<std::string, std::string> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    const auto eq = item.find('=');
    if (eq == std::string::npos || eq == 0 || eq + 1 == item.size())
      throw UsageError("malformed parameter '" + item + "', expected key=value");
    const std::string key = item.substr(0, eq);
    if (out.count(key)) throw UsageError("parameter '" + key + "' given twice");
    out[key] = item.substr(eq + 1);
  }
  return out;
}

std::string real_str(const Real& x, int digits) { return x.to_string(digits); }
std::string diag_str(const Real& x) { return x.to_string(kDiagDigits); }

std::string number_str(const Number& x, int digits) {
  return x.is_exact() ? to_string(x.exact()) : x.approx().to_string(digits);
}

json params_json(const std::map<std::string, std::string>& params) {
  json j = json::object();
  for (const auto& [k, v] : params) j[k] = v;
  return j;
}

Family family_of(const Command& cmd) {
  if (cmd.family.empty()) throw UsageError("--family is required for '" + cmd.verb + "'");
  return make_family(parse_family_kind(cmd.family), parse_params(cmd.params));
}

long index_of(const Command& cmd, const Family& family) {
  const long n = cmd.n.value_or(family.n0());
  if (n < family.n0())
    throw UsageError("--n must be >= " + std::to_string(family.n0()) + " for family " + family.name());
  return n;
}

Real tol_of(const Command& cmd) {
  try {
    const Real t = Real::parse(cmd.tol, cmd.precision + 10);
    if (!(t.sign() > 0)) throw UsageError("--tol must be positive");
    return t;
  } catch (const Error&) {
    throw UsageError("--tol is not a number: " + cmd.tol);
  }
}

/// Named constant recovered from r_{n0}; nullopt when the relation is singular.
std::optional<std::pair<std::string, Real>> constant_from_ratio(const Family& family, const Real& r, int digits) {
  const Real one(1L, digits);
  try {
    switch (family.kind) {
      case FamilyKind::log:
        return std::pair{std::string("log(1+1/k)"), one / (family.k.to_real(digits) + r)};
      case FamilyKind::zeta:
        return std::pair{std::string("zeta(s)"), one / (one - r)};
      case FamilyKind::polylog: {
        const Real z = family.z.to_real(digits);
        return std::pair{std::string("Li_s(z)"), z / (one - z * r)};
      }
      case FamilyKind::gamma:
        return std::pair{std::string("euler_gamma"), Real(Rational(1, 2), digits) + one / ((one + r) * 12)};
      case FamilyKind::factorial:
        return std::pair{std::string("I_0"), one / (one + r)};
    }
  } catch (const Error&) {
  }
  return std::nullopt;
}

// ---------------------------------------------------------------- verbs

struct Outcome {
  json payload;
  int status = kOk;
  /// Key of the array rendered as rows in csv mode (empty: flatten scalars).
  std::string rows_key;
  std::vector<std::string> columns;
};

Outcome do_constants(const Command& cmd) {
  const Family family = family_of(cmd);
  const long n = index_of(cmd, family);
  const int digits = cmd.precision;
  const RatioFraction rf = build_ratio_cf(family.rec, n);
  const EvalReport report = evaluate(rf.cf, tol_of(cmd), cmd.terms, {digits});
  const bool converged = report.status == EvalStatus::converged;

  json j;
  j["verb"] = "constants";
  j["family"] = family.name();
  j["params"] = params_json(family.params);
  j["n"] = n;
  j["precision"] = digits;
  j["tol"] = cmd.tol;
  j["ratio"] = real_str(report.value, digits);
  j["status"] = to_string(report.status);
  j["terms_used"] = report.terms_used;
  j["skipped"] = report.skipped;
  j["residual"] = diag_str(report.final_residual);
  j["target"] = family.target_description;
  const auto constant = n == family.n0() ? constant_from_ratio(family, report.value, digits) : std::nullopt;
  j["constant_name"] = constant ? json(constant->first) : json(nullptr);
  j["constant"] = constant && converged ? json(real_str(constant->second, digits)) : json(nullptr);
  try {
    const Real ref = I_value(family, n + 1, digits) / I_value(family, n, digits);
    j["reference_ratio"] = real_str(ref, digits);
    j["reference_error"] = diag_str(abs(ref - report.value));
  } catch (const Error&) {
    j["reference_ratio"] = nullptr;
    j["reference_error"] = nullptr;
  }
  return {j, converged ? kOk : kNumerical, "", {}};
}

json convergent_rows(const GeneralizedCF& cf, std::size_t terms, int digits, const std::optional<Real>& fixed) {
  json rows = json::array();
  const auto values = convergents(cf, terms == 0 ? 0 : terms - 1, digits);
  std::optional<Real> previous;
  for (std::size_t i = 0; i < values.size(); ++i) {
    json row;
    row["N"] = i;
    if (values[i]) {
      const Real v = values[i]->to_real(digits);
      row["value"] = real_str(v, digits);
      row["delta"] = previous ? json(diag_str(abs(v - *previous))) : json(nullptr);
      row["status"] = "ok";
      if (fixed) row["fixed_point_distance"] = diag_str(abs(v - *fixed));
      previous = v;
    } else {
      row["value"] = nullptr;
      row["delta"] = nullptr;
      row["status"] = "undefined";
      if (fixed) row["fixed_point_distance"] = nullptr;
    }
    rows.push_back(row);
  }
  return rows;
}

Outcome do_convergents(const Command& cmd, bool trace) {
  const Family family = family_of(cmd);
  const long n = index_of(cmd, family);
  const int digits = cmd.precision;
  if (cmd.terms == 0) throw UsageError("--terms must be positive");
  const GeneralizedCF cf = build_ratio_cf(family.rec, n).cf.without_tail();
  const Real fp = cf.fixed_point()->to_real(digits);

  json j;
  j["verb"] = trace ? "trace" : "convergents";
  j["family"] = family.name();
  j["params"] = params_json(family.params);
  j["n"] = n;
  j["precision"] = digits;
  j["fixed_point"] = number_str(*cf.fixed_point(), digits);
  if (trace) {
    try {
      j["reference_ratio"] = real_str(I_value(family, n + 1, digits) / I_value(family, n, digits), digits);
    } catch (const Error&) {
      j["reference_ratio"] = nullptr;
    }
    const std::size_t window = std::min<std::size_t>(10, cmd.terms);
    try {
      j["fixed_point_detected"] =
          window >= 3 && detect_fixed_point(cf, *cf.fixed_point(), tol_of(cmd), window, cmd.terms - 1, digits);
    } catch (const Error&) {
      j["fixed_point_detected"] = nullptr;
    }
  }
  j["rows"] = convergent_rows(cf, cmd.terms, digits, trace ? std::optional<Real>(fp) : std::nullopt);
  std::vector<std::string> cols{"N", "value", "delta", "status"};
  if (trace) cols.push_back("fixed_point_distance");
  return {j, kOk, "rows", cols};
}

json report_json(const IdentityReport& r, bool expected) {
  json j;
  j["check"] = "identity";
  j["name"] = r.name;
  j["params"] = params_json(r.parameters);
  j["lhs"] = real_str(r.lhs, r.lhs.digits());
  j["rhs"] = real_str(r.rhs, r.rhs.digits());
  j["residual"] = diag_str(r.residual);
  j["tolerance"] = diag_str(r.tolerance);
  j["pass"] = r.pass;
  j["expected"] = expected;
  return j;
}

Outcome do_verify(const Command& cmd) {
  if (cmd.suite != "all" && cmd.suite != "identities" && cmd.suite != "residuals")
    throw UsageError("--suite must be one of all, identities, residuals");
  const int digits = cmd.precision;
  json reports = json::array();
  bool ok = true;
  auto add = [&](json row) {
    ok = ok && row["pass"] == row["expected"];
    reports.push_back(std::move(row));
  };

  if (cmd.suite != "residuals") {
    const Real tol = cmd.tol_given ? tol_of(cmd) : pow(Real(10L, digits), 5 - digits);
    for (const auto& r : verify_identity_grid(tol, digits)) add(report_json(r, true));
    for (const auto& r : literal_sanity_reports(tol, digits)) add(report_json(r, false));
  }
  if (cmd.suite != "identities") {
    const Real tol = pow(Real(10L, digits), 10 - digits);
    const std::vector<Family> families{log_family(1), zeta_family(Number(2)),
                                       polylog_family(Number(2), Number(Rational(1, 2))), gamma_family(),
                                       factorial_family(Number(0))};
    for (const Family& f : families) {
      const IOracle oracle = oracle_for(f);
      for (long m = f.n0(); m <= 10; ++m) {
        const Real res = residual(f.rec, oracle, m, digits);
        json row;
        row["check"] = "recurrence_residual";
        row["name"] = f.name();
        json p = params_json(f.params);
        p["n"] = std::to_string(m);
        row["params"] = p;
        row["lhs"] = nullptr;
        row["rhs"] = nullptr;
        row["residual"] = diag_str(res);
        row["tolerance"] = diag_str(tol);
        row["pass"] = res <= tol;
        row["expected"] = true;
        add(row);
      }
    }
  }

  json j;
  j["verb"] = "verify";
  j["suite"] = cmd.suite;
  j["precision"] = digits;
  j["total"] = reports.size();
  j["all_as_expected"] = ok;
  j["reports"] = reports;
  return {j, ok ? kOk : kNumerical, "reports",
          {"check", "name", "params", "lhs", "rhs", "residual", "tolerance", "pass", "expected"}};
}

json admissibility_json(const AdmissibilityReport& a) {
  json j;
  j["verdict"] = a.verdict;
  j["note"] = a.note;
  json tail = json::array();
  for (const Real& t : a.tail) tail.push_back(diag_str(t));
  j["tail"] = tail;
  return j;
}

Outcome do_csum(const Command& cmd) {
  const Family family = family_of(cmd);
  const long n = index_of(cmd, family);
  const int digits = cmd.precision;
  const CSumProblem problem = make_csum_problem(family, n);

  json j;
  j["verb"] = "csum";
  j["family"] = family.name();
  j["params"] = params_json(family.params);
  j["n"] = n;
  j["precision"] = digits;
  j["value"] = real_str(csum_value(problem, digits), digits);

  json terms = json::array();
  json sums = json::array();
  Number sum = 0;
  for (long k = 0; k < 8; ++k) {
    const Number t = problem.series_term(k, digits);
    sum = sum + t;
    terms.push_back(number_str(t, digits));
    sums.push_back(number_str(sum, digits));
  }
  j["series_terms"] = terms;
  j["partial_sums"] = sums;
  j["admissibility"] = admissibility_json(admissibility_check(problem, 12, digits));

  const StabilityReport st = stability_check(problem, digits);
  j["stability"] = {{"lhs", real_str(st.lhs, digits)}, {"rhs", real_str(st.rhs, digits)},
                    {"residual", diag_str(st.residual)}};

  json reg;
  try {
    const RegularityReport r = regularity_check(problem, 40, tol_of(cmd), digits);
    reg["applies"] = true;
    reg["test"] = r.test;
    reg["classical"] = real_str(r.classical, digits);
    reg["residual"] = diag_str(r.residual);
    reg["tolerance"] = diag_str(r.tolerance);
    reg["pass"] = r.pass;
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::precondition) throw;
    reg["applies"] = false;
    reg["message"] = e.what();
  }
  j["regularity"] = reg;

  Rational c;
  try {
    c = parse_rational(cmd.c);
  } catch (const Error&) {
    throw UsageError("--c must be a rational number");
  }
  if (c == 0) throw UsageError("--c must be nonzero");
  const AmbiguityReport amb = ambiguity_demo(problem, c, 12, digits);
  j["ambiguity"] = {{"c", to_string(amb.c)},
                    {"recurrence_residual", diag_str(amb.recurrence_residual)},
                    {"original_verdict", amb.original.verdict},
                    {"perturbed_verdict", amb.perturbed.verdict},
                    {"distinguished", amb.distinguished}};

  if (family.kind == FamilyKind::gamma && n == 1) {
    const GammaPartialSums g = gamma_divergent_partial_sums(10, digits);
    json ps = json::array();
    json zt = json::array();
    for (const auto& s : g.partial_sums) ps.push_back(to_string(s));
    for (const auto& t : g.zeta_terms) zt.push_back(to_string(t));
    j["gamma_series"] = {{"reference", real_str(g.reference, digits)},
                         {"partial_sums", ps},
                         {"zeta_terms", zt},
                         {"optimal_k", g.optimal_k},
                         {"optimal_error", diag_str(g.optimal_error)},
                         {"consistency_residual", diag_str(gamma_series_consistency(problem, digits))}};
  }
  return {j, kOk, "", {}};
}

// ---------------------------------------------------------------- rendering

std::string scalar_text(const json& v) {
  if (v.is_null()) return "-";
  if (v.is_string()) return v.get<std::string>();
  if (v.is_object()) {
    std::string s;
    for (const auto& [k, x] : v.items()) s += (s.empty() ? "" : ";") + k + "=" + scalar_text(x);
    return s;
  }
  if (v.is_array()) {
    std::string s;
    for (const auto& x : v) s += (s.empty() ? "" : ", ") + scalar_text(x);
    return s;
  }
  return v.dump();
}

void render_text(const json& j, std::ostream& out, const std::string& indent = "") {
  for (const auto& [key, value] : j.items()) {
    if (value.is_array() && !value.empty() && value.front().is_object()) {
      out << indent << key << ":\n";
      std::vector<std::string> cols;
      for (const auto& [k, v] : value.front().items()) cols.push_back(k);
      std::vector<std::size_t> width;
      for (const auto& c : cols) width.push_back(c.size());
      for (const auto& row : value)
        for (std::size_t i = 0; i < cols.size(); ++i)
          width[i] = std::max(width[i], scalar_text(row.value(cols[i], json())).size());
      auto line = [&](const std::vector<std::string>& cells) {
        std::string s = indent + "  ";
        for (std::size_t i = 0; i < cells.size(); ++i) {
          s += cells[i];
          if (i + 1 < cells.size()) s += std::string(width[i] - cells[i].size() + 2, ' ');
        }
        out << s << "\n";
      };
      line(cols);
      for (const auto& row : value) {
        std::vector<std::string> cells;
        for (const auto& c : cols) cells.push_back(scalar_text(row.value(c, json())));
        line(cells);
      }
    } else if (value.is_object() && key != "params") {
      out << indent << key << ":\n";
      render_text(value, out, indent + "  ");
    } else {
      out << indent << key << ": " << scalar_text(value) << "\n";
    }
  }
}

std::string csv_cell(const json& v) {
  std::string s = v.is_null() ? "" : scalar_text(v);
  if (s.find_first_of(",\"\n") != std::string::npos) {
    std::string q = "\"";
    for (char ch : s) q += ch == '"' ? std::string("\"\"") : std::string(1, ch);
    return q + "\"";
  }
  return s;
}

void render_csv(const Outcome& o, std::ostream& out) {
  if (!o.rows_key.empty()) {
    for (std::size_t i = 0; i < o.columns.size(); ++i) out << (i ? "," : "") << o.columns[i];
    out << "\n";
    for (const auto& row : o.payload[o.rows_key]) {
      for (std::size_t i = 0; i < o.columns.size(); ++i) out << (i ? "," : "") << csv_cell(row.value(o.columns[i], json()));
      out << "\n";
    }
    return;
  }
  std::vector<std::string> keys;
  std::vector<std::string> cells;
  for (const auto& [k, v] : o.payload.items()) {
    if (v.is_object() && k != "params") {
      for (const auto& [k2, v2] : v.items()) {
        keys.push_back(k + "." + k2);
        cells.push_back(csv_cell(v2));
      }
    } else {
      keys.push_back(k);
      cells.push_back(csv_cell(v));
    }
  }
  for (std::size_t i = 0; i < keys.size(); ++i) out << (i ? "," : "") << keys[i];
  out << "\n";
  for (std::size_t i = 0; i < cells.size(); ++i) out << (i ? "," : "") << cells[i];
  out << "\n";
}

std::string command_line(const std::vector<std::string>& args) {
  std::string s = "eulerfrac";
  for (const auto& a : args) s += " " + a;
  return s;
}

void emit(const Command& cmd, const std::vector<std::string>& args, const Outcome& o, std::ostream& out) {
  if (cmd.format == "json") {
    json j;
    if (!cmd.no_metadata) j["metadata"] = {{"tool", "eulerfrac"}, {"version", kVersion}, {"command", command_line(args)}};
    for (const auto& [k, v] : o.payload.items()) j[k] = v;
    out << j.dump(2) << "\n";
    return;
  }
  if (!cmd.no_metadata) out << "# eulerfrac " << kVersion << ": " << command_line(args) << "\n";
  if (cmd.format == "csv")
    render_csv(o, out);
  else
    render_text(o.payload, out);
}

int fail(const Command& cmd, int code, const std::string& kind, const std::string& message, std::ostream& out,
         std::ostream& err) {
  if (cmd.format == "json") {
    json j;
    j["error"] = {{"kind", kind}, {"message", message}, {"exit_status", code}};
    out << j.dump(2) << "\n";
  } else {
    err << "eulerfrac: " << kind << ": " << message << "\n";
  }
  return code;
}

int exit_code_for(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::parameter:
    case ErrorKind::domain:
    case ErrorKind::capability:
      return kUsage;
    default:
      return kNumerical;
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Command cmd;
  CLI::App app{"Continued fractions generated from integral recurrences", "eulerfrac"};
  app.add_option("verb", cmd.verb, "constants | convergents | verify | csum | trace")
      ->required()
      ->check(CLI::IsMember({"constants", "convergents", "verify", "csum", "trace"}));
  app.add_option("--family", cmd.family, "log | zeta | polylog | gamma | factorial");
  app.add_option("--params", cmd.params, "Family parameters, e.g. k=1 or s=2,z=1/2");
  app.add_option("--precision", cmd.precision, "Significant decimal digits")->capture_default_str();
  app.add_option("--terms", cmd.terms, "Maximum number of fraction terms")->capture_default_str();
  auto* tol = app.add_option("--tol", cmd.tol, "Convergence / verification tolerance")->capture_default_str();
  app.add_option("--format", cmd.format, "Output format")
      ->check(CLI::IsMember({"text", "json", "csv"}))
      ->capture_default_str();
  app.add_flag("--no-metadata", cmd.no_metadata, "Omit the metadata header");
  app.add_option("--suite", cmd.suite, "verify: all | identities | residuals")->capture_default_str();
  app.add_option("--n", cmd.n, "Start index (default: the family's first index)");
  app.add_option("--c", cmd.c, "csum: perturbation constant for the ambiguity demo")->capture_default_str();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    return fail(cmd, kUsage, "usage", e.what(), out, err);
  }
  cmd.tol_given = tol->count() > 0;

  if (const char* cap = std::getenv("EULERFRAC_MAX_PRECISION")) {
    char* end = nullptr;
    const long v = std::strtol(cap, &end, 10);
    if (end == cap || *end != '\0' || v < 1) return fail(cmd, kUsage, "usage", "EULERFRAC_MAX_PRECISION must be a positive integer", out, err);
    set_max_precision(static_cast<int>(v));
  }
  if (cmd.precision < 5) return fail(cmd, kUsage, "usage", "--precision must be at least 5", out, err);
  if (cmd.precision > max_precision())
    return fail(cmd, kUsage, "capability",
                "--precision " + std::to_string(cmd.precision) + " exceeds the maximum " +
                    std::to_string(max_precision()),
                out, err);

  try {
    Outcome o;
    if (cmd.verb == "constants")
      o = do_constants(cmd);
    else if (cmd.verb == "convergents")
      o = do_convergents(cmd, false);
    else if (cmd.verb == "trace")
      o = do_convergents(cmd, true);
    else if (cmd.verb == "verify")
      o = do_verify(cmd);
    else
      o = do_csum(cmd);
    emit(cmd, args, o, out);
    return o.status;
  } catch (const UsageError& e) {
    return fail(cmd, kUsage, "usage", e.what(), out, err);
  } catch (const Error& e) {
    return fail(cmd, exit_code_for(e.kind()), to_string(e.kind()), e.what(), out, err);
  }
}

}  // namespace eulerfrac::cli
