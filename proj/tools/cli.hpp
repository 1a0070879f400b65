#pragma once

// Command-line front end for the su11 checks.
//
//   su11check check   --rep saf --p0 0.5+1i --dim 64
//   su11check casimir --rep perelomov --lambda 1
//   su11check transfo --beta 2 --power 3
//   su11check reduce  --epsilon 1 --phi1 0.1 --phi2 0.3 --pairs 16
//
// Exit codes: 0 all checks pass, 1 a check failed, 2 usage or domain error.

#include "su11/reduction.hpp"
#include "su11/reps.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace su11::cli {

enum class Command { check, casimir, transfo, reduce };
enum class Rep { mp, hp, villain, saf, perelomov, bose1, bose2, two_mode, all };
enum class Format { text, json, csv };
enum class FidelitySel { as_printed, corrected, both };

inline constexpr int kExitPass = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitUsage = 2;

/// Bose-form truncation bound, frozen after a dim sweep over {32, 64, 128, 256}:
/// the largest bracket residual on margin dim/4 was 1.2, 6.8e-4, 4.9e-13 and
/// 1.7e-12 (rounding floor) respectively.
inline constexpr std::size_t kBoseFormDim = 128;
inline constexpr double kBoseFormResidualBound = 1e-10;

struct RunConfig {
  Command command = Command::check;
  Rep rep = Rep::all;

  double k = 1.0;
  double spin = 1.0;
  Complex p0{0.5, 1.0};
  double lambda = 1.0;

  // Unset values take per-representation defaults at run time.
  std::optional<std::size_t> dim;
  std::optional<std::size_t> dim_b;
  std::optional<double> p_min;
  std::optional<std::size_t> margin;
  std::optional<double> tolerance;

  int beta = 1;
  int power = 1;

  double epsilon = 1.0;
  double phi1 = 0.1;
  double phi2 = 0.3;
  std::size_t pairs = 16;

  Format format = Format::text;
  FidelitySel fidelity = FidelitySel::corrected;
};

/// Malformed or invalid arguments. The message names the offending flag.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// --help was requested; what() carries the help text.
class HelpRequested : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct RunOutput {
  std::string report;       // standard output
  std::string diagnostics;  // error stream
  int exit_code = kExitPass;
};

/// Accepts "a", "a+bi", "a-bi" (also "a+i"). Throws UsageError.
Complex parse_complex(const std::string& text);
std::string format_complex(Complex z);

/// argv without the program name. Honors --config <path> (a JSON object
/// keyed by flag names); explicit flags override the file.
RunConfig parse_args(const std::vector<std::string>& args);

RunOutput run(const RunConfig& config);

std::string to_string(Command command);
std::string to_string(Rep rep);

}  // namespace su11::cli
