#pragma once

#include "fatbetti/betti_table.hpp"
#include "fatbetti/fat_point_config.hpp"
#include "fatbetti/monomial_ideal.hpp"

#include <json.hpp>

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

namespace fatbetti::cli {

/// Exit statuses of the command-line tool.
enum Status : int { kOk = 0, kCheckFailed = 1, kUsage = 2, kComputation = 3 };

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class Command { betti, cwl, mult, split, mapcone };
enum class Method { formula, oracle, both };
enum class Format { diagram, json };

/// Ideal as read from flags or an input file. Fat points carry n and the
/// multiplicities; monomial input carries the generators.
using IdealSource = std::variant<FatPointConfig, MonomialIdeal>;

struct JobSpec {
  Command command = Command::betti;
  std::optional<IdealSource> source;
  std::optional<Method> method;               // default: both when a formula exists
  std::optional<std::uint32_t> characteristic;  // default: 32003, or 0 for explicit points and mult
  std::optional<int> cap;
  Format format = Format::diagram;
  std::uint64_t seed = 1;
  std::string order = "standard";  // mapcone: standard | descending | greedy
};

struct RunResult {
  int status = kOk;
  std::string output;
};

/// Executes a job. Throws UsageError, std::invalid_argument and library
/// computation errors; main_entry maps them to statuses.
RunResult run(const JobSpec& spec);

/// Parses argv (argv[0] is the program name), runs the job and writes the
/// report to `out` and diagnostics to `err`. Returns the exit status.
int main_entry(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Betti diagram with a `total:` line and rows `d:` from 0 to the last
/// nonzero row; zeros print as `.`.
std::string render_diagram(const BettiTable& table);

/// Inverse of render_diagram. Throws std::invalid_argument on grammar errors
/// or a totals line that disagrees with the rows.
BettiTable parse_diagram(const std::string& text, int num_vars);

nlohmann::json table_to_json(const BettiTable& table);
BettiTable table_from_json(const nlohmann::json& entries, int num_vars);

/// Reads {vars, char, monomials | fat_points_coordinate | fat_points_explicit}.
/// Returns the source and the characteristic if the file sets one.
std::pair<IdealSource, std::optional<std::uint32_t>> parse_input(const nlohmann::json& doc);
std::pair<IdealSource, std::optional<std::uint32_t>> read_input_file(const std::string& path);

}  // namespace fatbetti::cli
