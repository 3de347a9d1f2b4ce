#include "rzero/report.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <istream>
#include <map>
#include <ostream>
#include <random>
#include <regex>
#include <sstream>

#include <json.hpp>

#include "rzero/argument.hpp"
#include "rzero/special_functions.hpp"
#include "rzero/zeros.hpp"

namespace rzero {
namespace {

using ordered_json = nlohmann::ordered_json;

constexpr const char* kMagic = "rzero v1";

const std::map<std::string, std::vector<Column>>& schemas() {
  static const std::map<std::string, std::vector<Column>> all = {
      {"eval",
       {{"sigma", CellType::real},
        {"t", CellType::real},
        {"re", CellType::real},
        {"im", CellType::real},
        {"abs", CellType::real},
        {"method", CellType::text},
        {"error_estimate", CellType::real}}},
      {"count",
       {{"T", CellType::real},
        {"N", CellType::integer},
        {"base_count", CellType::integer},
        {"smooth_part", CellType::real},
        {"sqrt_term", CellType::real},
        {"main_value", CellType::real},
        {"residual", CellType::real},
        {"box_left", CellType::real},
        {"raw_winding", CellType::real},
        {"certificates", CellType::text},
        {"certified", CellType::integer}}},
      {"zeros",
       {{"beta", CellType::real},
        {"gamma", CellType::real},
        {"enclosure_radius", CellType::real},
        {"residual_modulus", CellType::real}}},
      {"validate",
       {{"suite", CellType::text},
        {"samples", CellType::integer},
        {"worst", CellType::real},
        {"threshold", CellType::real},
        {"passed", CellType::integer}}},
      {"table",
       {{"T", CellType::real},
        {"N", CellType::integer},
        {"smooth_part", CellType::real},
        {"sqrt_term", CellType::real},
        {"r_smooth", CellType::real},
        {"r_full", CellType::real},
        {"residual", CellType::real},
        {"log2_T", CellType::real},
        {"bound", CellType::real}}},
  };
  return all;
}

std::string quote_csv(const std::string& s) {
  if (s.find_first_of(",\"\n\r") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::vector<std::string> split_csv(const std::string& line) {
  std::vector<std::string> fields;
  std::string cur;
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    const char c = line[i];
    if (quoted) {
      if (c == '"' && i + 1 < line.size() && line[i + 1] == '"') {
        cur += '"';
        ++i;
      } else if (c == '"') {
        quoted = false;
      } else {
        cur += c;
      }
    } else if (c == '"') {
      quoted = true;
    } else if (c == ',') {
      fields.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  fields.push_back(cur);
  return fields;
}

double parse_real(const std::string& s) {
  char* end = nullptr;
  const double x = std::strtod(s.c_str(), &end);
  if (s.empty() || end != s.c_str() + s.size()) {
    throw Error(ErrorKind::parse, "not a real number: '" + s + "'");
  }
  return x;
}

std::int64_t parse_integer(const std::string& s) {
  std::size_t used = 0;
  std::int64_t v = 0;
  try {
    v = std::stoll(s, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (s.empty() || used != s.size()) {
    throw Error(ErrorKind::parse, "not an integer: '" + s + "'");
  }
  return v;
}

std::string cell_text(const Cell& cell) {
  if (const double* x = std::get_if<double>(&cell)) return format_real(*x);
  if (const std::int64_t* n = std::get_if<std::int64_t>(&cell)) return std::to_string(*n);
  return quote_csv(std::get<std::string>(cell));
}

Cell parse_cell(const std::string& s, CellType type) {
  switch (type) {
    case CellType::real:
      return parse_real(s);
    case CellType::integer:
      return parse_integer(s);
    case CellType::text:
      return s;
  }
  return s;
}

ordered_json cell_json(const Cell& cell) {
  if (const double* x = std::get_if<double>(&cell)) return *x;
  if (const std::int64_t* n = std::get_if<std::int64_t>(&cell)) return *n;
  return std::get<std::string>(cell);
}

Cell json_cell(const ordered_json& j, CellType type) {
  switch (type) {
    case CellType::real:
      if (j.is_null()) return std::nan("");
      return j.get<double>();
    case CellType::integer:
      return j.get<std::int64_t>();
    case CellType::text:
      return j.get<std::string>();
  }
  return std::string();
}

std::vector<double> heights(const RunConfig& config) {
  std::vector<double> ts;
  if (config.t_step > 0.0) {
    for (int k = 0;; ++k) {
      const double t = config.t_min + k * config.t_step;
      if (t > config.t_max + 1e-9 * config.t_step) break;
      ts.push_back(t);
    }
  } else {
    ts.push_back(config.t_max);
  }
  return ts;
}

int count_exit_code(const Error& e) {
  switch (e.kind()) {
    case ErrorKind::contour_zero_persistent:
      return kExitContourZero;
    default:
      return kExitWinding;
  }
}

std::string certificate_summary(const CountResult& r, bool& all_ok) {
  std::string out;
  all_ok = true;
  for (const Certificate& c : r.certificates) {
    if (!out.empty()) out += ';';
    out += c.segment + (c.ok ? ":ok" : ":fail");
    all_ok = all_ok && c.ok;
  }
  return out;
}

// ---------------------------------------------------------------------------
// validate suites

struct Suite {
  std::string name;
  std::int64_t samples = 0;
  double worst = 0.0;
  double threshold = 0.0;
};

Suite identity_suite() {
  Suite s{"identity", 0, 0.0, 1e-8};
  for (double sigma : {-1.0, 0.0, 0.5, 1.0, 2.0}) {
    for (int k = 1; k <= 20; ++k) {
      const ComplexPoint p(sigma, 5.0 * k);
      const cplx ref = zeta_reference(p);
      s.worst = std::max(s.worst, std::abs(zeta_from_r(p) - ref) / std::abs(ref));
      ++s.samples;
    }
  }
  return s;
}

Suite branch_suite(std::mt19937_64& rng, int samples) {
  Suite s{"branch", samples, 0.0, 1e-12};
  std::uniform_real_distribution<double> sigma(-10.0, 10.0);
  std::uniform_real_distribution<double> log_t(std::log(0.1), std::log(1e5));
  for (int k = 0; k < samples; ++k) {
    const ComplexPoint p(sigma(rng), std::exp(log_t(rng)));
    const EtaValue e = eta(p);
    double dev = std::abs(e.value * e.value - e.square) / std::max(1.0, std::abs(e.square));
    if (!(e.value.real() + e.value.imag() > 0.0)) dev = INFINITY;
    const double gauss = std::imag(cplx(0.0, -kPi) * e.value * e.value);
    dev = std::max(dev, std::abs(gauss + 0.5 * p.t) / (0.5 * p.t));
    s.worst = std::max(s.worst, dev);
  }
  return s;
}

Suite functional_suite(std::mt19937_64& rng, int samples) {
  Suite s{"functional", samples, 0.0, 1e-10};
  std::uniform_real_distribution<double> sigma(-3.0, 4.0);
  std::uniform_real_distribution<double> t(1.0, 100.0);
  for (int k = 0; k < samples; ++k) {
    const ComplexPoint p(sigma(rng), t(rng));
    const ComplexPoint q(1.0 - p.sigma, -p.t);
    s.worst = std::max(s.worst, std::abs(chi(p) * chi(q) - 1.0));
  }
  return s;
}

cplx poly_eval(const std::vector<cplx>& roots, cplx z) {
  cplx v = 1.0;
  for (const cplx& r : roots) v *= z - r;
  return v;
}

double segment_distance(cplx a, cplx b, cplx z) {
  const cplx d = b - a;
  const double tau = std::clamp(std::real((z - a) * std::conj(d)) / std::norm(d), 0.0, 1.0);
  return std::abs(z - (a + tau * d));
}

/// Worst ratio of the realised variation to the Backlund bound.
Suite backlund_suite(std::mt19937_64& rng, int samples) {
  Suite s{"backlund", samples, 0.0, 1.0};
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::uniform_int_distribution<int> degree(1, 12);
  for (int k = 0; k < samples; ++k) {
    const cplx a(4.0 * unit(rng) - 2.0, 4.0 * unit(rng) - 2.0);
    const double radius = 1.0 + 2.0 * unit(rng);
    const double reach = radius * (0.1 + 0.8 * unit(rng));
    const cplx b = a + std::polar(reach, kTwoPi * unit(rng));
    std::vector<cplx> roots;
    const int d = degree(rng);
    while (static_cast<int>(roots.size()) < d) {
      const cplx z = a + std::polar(2.0 * radius * std::sqrt(unit(rng)), kTwoPi * unit(rng));
      if (segment_distance(a, b, z) >= 1e-2) roots.push_back(z);
    }
    double big_m = 0.0;
    for (int j = 0; j < 2048; ++j) {
      big_m = std::max(big_m, std::abs(poly_eval(roots, a + std::polar(radius, kTwoPi * j / 2048.0))));
    }
    const BacklundInput input =
        BacklundInput::from_values(1.01 * big_m, std::abs(poly_eval(roots, a)), radius, reach);
    const ComplexFunction f = [&roots](ComplexPoint z) { return poly_eval(roots, z.value()); };
    const ArgTrace trace =
        arg_variation(f, PathSegment::straight(ComplexPoint(a), ComplexPoint(b)));
    const double realised = std::abs(trace.total_variation) / kTwoPi;
    const double bound = backlund_bound(input);
    s.worst = std::max(s.worst, bound > 0.0 ? realised / bound : (realised > 0.0 ? INFINITY : 0.0));
  }
  return s;
}

Suite surrogate_suite(int samples) {
  const int n = std::max(1, std::min(samples, 50));
  Suite s{"surrogate", n, 0.0, 1.0};
  for (int k = 0; k < n; ++k) {
    const double t = n == 1 ? 50.0 : 50.0 + (2000.0 - 50.0) * k / (n - 1);
    const ComplexPoint p(left_curve_sigma(t, 1.0), t);
    s.worst = std::max(s.worst, r_asymptotic(p).u_proxy);
  }
  return s;
}

}  // namespace

const char* to_string(Command c) {
  switch (c) {
    case Command::eval:
      return "eval";
    case Command::count:
      return "count";
    case Command::zeros:
      return "zeros";
    case Command::validate:
      return "validate";
    case Command::table:
      return "table";
  }
  return "?";
}

Command parse_command(const std::string& text) {
  for (Command c : {Command::eval, Command::count, Command::zeros, Command::validate,
                    Command::table}) {
    if (text == to_string(c)) return c;
  }
  throw Error(ErrorKind::parse, "unknown command '" + text + "'");
}

void RunConfig::validate() const {
  for (double x : {t_min, t_max, t_step, box_left, t0, spacing, tolerance}) {
    if (!std::isfinite(x)) {
      throw Error(ErrorKind::domain, "RunConfig: non-finite parameter");
    }
  }
  if (!(t_min <= t_max)) {
    throw Error(ErrorKind::domain, "RunConfig: t range must be ordered");
  }
  if (t_step < 0.0 || grid < 1 || samples < 1 || !(spacing > 0.0)) {
    throw Error(ErrorKind::domain, "RunConfig: step, grid, spacing and samples must be positive");
  }
}

ComplexPoint parse_complex(const std::string& text) {
  static const std::regex number(R"(\s*([+-]?(?:\d+\.?\d*|\.\d+)(?:[eE][+-]?\d+)?)\s*)");
  static const std::regex full(
      R"(\s*([+-]?(?:\d+\.?\d*|\.\d+)(?:[eE][+-]?\d+)?)\s*([+-])\s*((?:\d+\.?\d*|\.\d+)(?:[eE][+-]?\d+)?)?\s*[ij]\s*)");
  static const std::regex imag(R"(\s*([+-]?)((?:\d+\.?\d*|\.\d+)(?:[eE][+-]?\d+)?)?\s*[ij]\s*)");
  std::smatch m;
  if (std::regex_match(text, m, number)) {
    return {std::stod(m[1]), 0.0};
  }
  if (std::regex_match(text, m, full)) {
    const double im = m[3].matched ? std::stod(m[3]) : 1.0;
    return {std::stod(m[1]), m[2] == "-" ? -im : im};
  }
  if (std::regex_match(text, m, imag)) {
    const double im = m[2].matched ? std::stod(m[2]) : 1.0;
    return {0.0, m[1] == "-" ? -im : im};
  }
  throw Error(ErrorKind::parse, "malformed complex literal '" + text + "'");
}

std::string format_real(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

const std::vector<Column>& schema(const std::string& kind) {
  const auto it = schemas().find(kind);
  if (it == schemas().end()) {
    throw Error(ErrorKind::parse, "unknown table kind '" + kind + "'");
  }
  return it->second;
}

Table make_table(const std::string& kind) {
  Table t;
  t.kind = kind;
  t.columns = schema(kind);
  return t;
}

void write_csv(std::ostream& os, const Table& table) {
  os << "# " << kMagic << ' ' << table.kind << '\n';
  for (std::size_t c = 0; c < table.columns.size(); ++c) {
    os << (c ? "," : "") << table.columns[c].name;
  }
  os << '\n';
  for (const auto& row : table.rows) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      os << (c ? "," : "") << cell_text(row[c]);
    }
    os << '\n';
  }
  for (const auto& [key, value] : table.summary) {
    os << "# summary," << key << ',' << format_real(value) << '\n';
  }
}

Table read_csv(std::istream& is) {
  std::string line;
  if (!std::getline(is, line) || line.rfind(std::string("# ") + kMagic + ' ', 0) != 0) {
    throw Error(ErrorKind::parse, "read_csv: missing '# rzero v1' header");
  }
  Table table = make_table(line.substr(std::string("# ").size() + std::string(kMagic).size() + 1));
  if (!std::getline(is, line)) {
    throw Error(ErrorKind::parse, "read_csv: missing column header");
  }
  const std::vector<std::string> names = split_csv(line);
  if (names.size() != table.columns.size()) {
    throw Error(ErrorKind::parse, "read_csv: column count mismatch");
  }
  for (std::size_t c = 0; c < names.size(); ++c) {
    if (names[c] != table.columns[c].name) {
      throw Error(ErrorKind::parse, "read_csv: unexpected column '" + names[c] + "'");
    }
  }
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    if (line.rfind("# summary,", 0) == 0) {
      const std::vector<std::string> parts = split_csv(line.substr(2));
      if (parts.size() != 3) throw Error(ErrorKind::parse, "read_csv: bad summary line");
      table.summary.emplace_back(parts[1], parse_real(parts[2]));
      continue;
    }
    const std::vector<std::string> fields = split_csv(line);
    if (fields.size() != table.columns.size()) {
      throw Error(ErrorKind::parse, "read_csv: row has " + std::to_string(fields.size()) +
                                        " fields");
    }
    std::vector<Cell> row;
    row.reserve(fields.size());
    for (std::size_t c = 0; c < fields.size(); ++c) {
      row.push_back(parse_cell(fields[c], table.columns[c].type));
    }
    table.rows.push_back(std::move(row));
  }
  return table;
}

void write_json(std::ostream& os, const Table& table) {
  ordered_json j;
  j["format"] = kMagic;
  j["kind"] = table.kind;
  ordered_json columns = ordered_json::array();
  for (const Column& c : table.columns) columns.push_back(c.name);
  j["columns"] = columns;
  ordered_json rows = ordered_json::array();
  for (const auto& row : table.rows) {
    ordered_json r = ordered_json::object();
    for (std::size_t c = 0; c < row.size(); ++c) r[table.columns[c].name] = cell_json(row[c]);
    rows.push_back(r);
  }
  j["rows"] = rows;
  ordered_json summary = ordered_json::object();
  for (const auto& [key, value] : table.summary) summary[key] = value;
  j["summary"] = summary;
  os << j.dump(2) << '\n';
}

Table read_json(std::istream& is) {
  ordered_json j;
  try {
    j = ordered_json::parse(is);
  } catch (const std::exception& e) {
    throw Error(ErrorKind::parse, std::string("read_json: ") + e.what());
  }
  if (j.value("format", "") != kMagic) {
    throw Error(ErrorKind::parse, "read_json: missing 'rzero v1' format tag");
  }
  Table table = make_table(j.at("kind").get<std::string>());
  try {
    for (const auto& r : j.at("rows")) {
      std::vector<Cell> row;
      for (const Column& c : table.columns) row.push_back(json_cell(r.at(c.name), c.type));
      table.rows.push_back(std::move(row));
    }
    for (const auto& [key, value] : j.at("summary").items()) {
      table.summary.emplace_back(key, value.get<double>());
    }
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::parse, std::string("read_json: ") + e.what());
  }
  return table;
}

void write_table(std::ostream& os, const Table& table, OutputFormat format) {
  if (format == OutputFormat::csv) {
    write_csv(os, table);
  } else {
    write_json(os, table);
  }
}

Table read_table(std::istream& is, OutputFormat format) {
  return format == OutputFormat::csv ? read_csv(is) : read_json(is);
}

// ---------------------------------------------------------------------------

int cmd_eval(const RunConfig& config, Table& table, std::ostream& err) {
  table = make_table("eval");
  if (config.points.empty()) {
    err << "eval: no point given\n";
    return kExitEvalFailed;
  }
  EvalOptions options;
  options.precision = config.precision;
  for (const std::string& literal : config.points) {
    ComplexPoint centre;
    try {
      centre = parse_complex(literal);
    } catch (const Error& e) {
      err << "eval: parse error: " << e.what() << '\n';
      return kExitEvalFailed;
    }
    const double half = 0.5 * (config.grid - 1);
    for (int i = 0; i < config.grid; ++i) {
      for (int k = 0; k < config.grid; ++k) {
        const ComplexPoint p(centre.sigma + (k - half) * config.spacing,
                             centre.t + (i - half) * config.spacing);
        try {
          const EvaluationResult r = r_eval(p, options);
          table.rows.push_back({p.sigma, p.t, r.value.real(), r.value.imag(),
                                std::abs(r.value), std::string(to_string(r.method)),
                                r.error_estimate});
        } catch (const Error& e) {
          err << "eval: failed at " << format_point(p) << ": " << e.what() << '\n';
          return kExitEvalFailed;
        }
      }
    }
  }
  return kExitOk;
}

int cmd_count(const RunConfig& config, Table& table, std::ostream& err) {
  table = make_table("count");
  const std::vector<double> ts = heights(config);
  std::vector<ResidualRow> rows;
  try {
    rows = residual_table(ts, config.t0, config.box_left);
  } catch (const Error& e) {
    err << "count: " << to_string(e.kind()) << ": " << e.what() << '\n';
    return count_exit_code(e);
  }
  bool all_ok = true;
  for (const ResidualRow& row : rows) {
    const CountResult& r = row.result;
    bool ok = true;
    const std::string certs = certificate_summary(r, ok);
    all_ok = all_ok && ok;
    table.rows.push_back({r.big_t, std::int64_t{r.count}, std::int64_t{r.base_count},
                          r.smooth_part, r.sqrt_term, r.main_value, r.residual, r.box_left,
                          r.raw_winding, certs, std::int64_t{ok}});
  }
  if (!rows.empty()) {
    table.summary.emplace_back("base_count", rows.front().result.base_count);
  }
  if (!all_ok) {
    err << "count: a certificate failed\n";
    return kExitCertificate;
  }
  return kExitOk;
}

int cmd_zeros(const RunConfig& config, Table& table, std::ostream& err) {
  table = make_table("zeros");
  LocateResult located;
  try {
    located = locate_r_zeros({config.box_left, 2.0, config.t_min, config.t_max});
  } catch (const Error& e) {
    err << "zeros: " << to_string(e.kind()) << ": " << e.what() << '\n';
    return count_exit_code(e);
  }
  for (const Zero& z : located.zeros) {
    table.rows.push_back({z.beta, z.gamma, z.enclosure_radius, z.residual_modulus});
  }
  table.summary.emplace_back("count", static_cast<double>(located.zeros.size()));
  table.summary.emplace_back("box_winding", located.box_winding);
  table.summary.emplace_back("clusters", static_cast<double>(located.clusters.size()));
  if (!located.zeros.empty()) {
    const ZeroStatistics st = zero_statistics(located.zeros);
    table.summary.emplace_back("fraction_right", st.fraction_right);
    table.summary.emplace_back("min_beta", st.min_beta);
    table.summary.emplace_back("max_beta", st.max_beta);
    table.summary.emplace_back("mean_gap", st.mean_gap);
  }
  if (!located.clusters.empty()) {
    err << "zeros: " << located.clusters.size() << " unresolved cluster(s)\n";
    if (config.strict) return kExitClusters;
  }
  return kExitOk;
}

int cmd_validate(const RunConfig& config, Table& table, std::ostream& err) {
  table = make_table("validate");
  std::mt19937_64 rng(config.seed);
  std::vector<Suite> suites;
  suites.push_back(identity_suite());
  suites.push_back(branch_suite(rng, config.samples));
  suites.push_back(functional_suite(rng, config.samples));
  suites.push_back(backlund_suite(rng, std::max(1, config.samples / 10)));
  suites.push_back(surrogate_suite(config.samples));
  std::string failed;
  for (Suite& s : suites) {
    if (config.tolerance > 0.0) s.threshold = config.tolerance;
    const bool ok = s.worst <= s.threshold;
    if (!ok) failed += (failed.empty() ? "" : ", ") + s.name;
    table.rows.push_back({s.name, s.samples, s.worst, s.threshold, std::int64_t{ok}});
  }
  if (!failed.empty()) {
    err << "validate: failed suites: " << failed << '\n';
    return kExitCheckFailed;
  }
  return kExitOk;
}

int cmd_table(const RunConfig& config, Table& table, std::ostream& err) {
  table = make_table("table");
  std::vector<ResidualRow> rows;
  try {
    rows = residual_table(heights(config), config.t0, config.box_left);
  } catch (const Error& e) {
    err << "table: " << to_string(e.kind()) << ": " << e.what() << '\n';
    return count_exit_code(e);
  }
  for (const ResidualRow& row : rows) {
    const CountResult& r = row.result;
    const double log_t = std::log(r.big_t);
    table.rows.push_back({r.big_t, std::int64_t{r.count}, r.smooth_part, r.sqrt_term,
                          row.r_smooth, row.r_full, r.residual, log_t * log_t,
                          5.0 * std::pow(r.big_t, 0.4)});
  }
  table.summary.emplace_back("c", fit_sqrt_coefficient(rows));
  if (rows.size() >= 2) {
    const auto [c, d] = fit_sqrt_with_offset(rows);
    table.summary.emplace_back("c_with_offset", c);
    table.summary.emplace_back("offset", d);
  }
  return kExitOk;
}

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  try {
    config.validate();
  } catch (const Error& e) {
    err << e.what() << '\n';
    return kExitUsage;
  }
  Table table;
  int code = kExitOk;
  switch (config.command) {
    case Command::eval:
      code = cmd_eval(config, table, err);
      break;
    case Command::count:
      code = cmd_count(config, table, err);
      break;
    case Command::zeros:
      code = cmd_zeros(config, table, err);
      break;
    case Command::validate:
      code = cmd_validate(config, table, err);
      break;
    case Command::table:
      code = cmd_table(config, table, err);
      break;
  }
  if (config.out.empty()) {
    write_table(out, table, config.format);
  } else {
    std::ofstream file(config.out);
    if (!file) {
      err << "cannot open " << config.out << '\n';
      return kExitUsage;
    }
    write_table(file, table, config.format);
  }
  return code;
}

}  // namespace rzero
