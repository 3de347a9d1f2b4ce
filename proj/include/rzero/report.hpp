#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "rzero/auxiliary.hpp"

namespace rzero {

enum class Command { eval, count, zeros, validate, table };
enum class OutputFormat { csv, json };

const char* to_string(Command c);
Command parse_command(const std::string& text);

struct RunConfig {
  Command command = Command::eval;
  double t_min = 10.0;
  double t_max = 100.0;
  double t_step = 0.0;  // 0: a single height t_max
  double box_left = -6.0;
  double t0 = 10.0;     // lower edge of the counting strip
  PrecisionMode precision = PrecisionMode::standard;
  OutputFormat format = OutputFormat::csv;
  std::string out;      // empty: stdout
  std::uint64_t seed = 1;
  bool strict = false;
  std::vector<std::string> points;  // complex literals for eval
  int grid = 1;          // grid x grid points around each eval point
  double spacing = 0.1;  // grid spacing
  double tolerance = -1.0;  // > 0 overrides every validate threshold
  int samples = 1000;

  /// Throws Error(domain) on unordered ranges or non-finite parameters.
  void validate() const;
};

/// Parses "a", "bi", "a+bi", "a-bi" (also with j). Throws Error(parse).
ComplexPoint parse_complex(const std::string& text);

using Cell = std::variant<double, std::int64_t, std::string>;

enum class CellType { real, integer, text };

struct Column {
  std::string name;
  CellType type;

  bool operator==(const Column&) const = default;
};

/// A versioned table; the schema is fixed per kind.
struct Table {
  std::string kind;
  std::vector<Column> columns;
  std::vector<std::vector<Cell>> rows;
  std::vector<std::pair<std::string, double>> summary;

  bool operator==(const Table&) const = default;
};

/// Columns for "eval", "count", "zeros", "validate" and "table".
const std::vector<Column>& schema(const std::string& kind);
Table make_table(const std::string& kind);

void write_csv(std::ostream& os, const Table& table);
void write_json(std::ostream& os, const Table& table);
Table read_csv(std::istream& is);
Table read_json(std::istream& is);

void write_table(std::ostream& os, const Table& table, OutputFormat format);
Table read_table(std::istream& is, OutputFormat format);

/// "%.17g"
std::string format_real(double x);

// Exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitEvalFailed = 2;
inline constexpr int kExitContourZero = 3;
inline constexpr int kExitWinding = 4;
inline constexpr int kExitClusters = 5;
inline constexpr int kExitCertificate = 6;
inline constexpr int kExitUsage = 64;

/// Each command fills `table` and returns an exit code. Diagnostics go to
/// `err`.
int cmd_eval(const RunConfig& config, Table& table, std::ostream& err);
int cmd_count(const RunConfig& config, Table& table, std::ostream& err);
int cmd_zeros(const RunConfig& config, Table& table, std::ostream& err);
int cmd_validate(const RunConfig& config, Table& table, std::ostream& err);
int cmd_table(const RunConfig& config, Table& table, std::ostream& err);

/// Dispatches on config.command and writes the table to config.out or `out`.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

}  // namespace rzero
