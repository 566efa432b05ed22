#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace chowring::app {

enum class OutputFormat { kText, kJson, kLatex };

struct RunConfig {
  std::string command;
  int n = 0;
  int k = 0;
  int r = 0;
  std::optional<int> max_degree;
  OutputFormat format = OutputFormat::kText;
  std::optional<std::string> out_path;
  bool force = false;
  bool timings = false;
};

/// Environment variable holding the default output format.
inline constexpr const char* kFormatEnv = "CHOWRING_FORMAT";

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitVerificationFailure = 2;

std::string usage();

/// `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace chowring::app
