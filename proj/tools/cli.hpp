#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>

#include "multilap/multicomplex.hpp"
#include "multilap/spectra.hpp"

namespace multilap::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitMismatch = 1;
inline constexpr int kExitInvalid = 2;

enum class Method { Eig, Formula, Both };
enum class OutputMode { Text, Json };

struct RunConfig {
  std::string command;
  std::string input;  // multicomplex file, "-" for stdin
  std::size_t bound = 0;  // N for `dirichlet`
  std::optional<Degree> degree;
  int k = 2;  // dirichlet chain degree
  Method method = Method::Both;
  double tol = kCompareTolerance;
  OutputMode output = OutputMode::Text;
  bool symbolic = false;
  bool reverseOrder = false;
  std::optional<std::uint64_t> relabelSeed;
  bool force = false;
  bool matrices = false;
};

int runCheck(const RunConfig& config, std::ostream& out, std::ostream& err);
int runMatrix(const RunConfig& config, std::ostream& out, std::ostream& err);
int runSpectrum(const RunConfig& config, std::ostream& out, std::ostream& err);
int runDecompose(const RunConfig& config, std::ostream& out, std::ostream& err);
int runBetti(const RunConfig& config, std::ostream& out, std::ostream& err);
int runDirichlet(const RunConfig& config, std::ostream& out, std::ostream& err);

// Dispatch on config.command.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

// Parse argv (argv[0] is the program name) and run.
int main(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace multilap::cli
