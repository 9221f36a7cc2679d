#ifndef REVSPEC_TOOLS_CLI_COMMON_HPP
#define REVSPEC_TOOLS_CLI_COMMON_HPP

#include <cstdint>
#include <cstdlib>
#include <exception>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "revspec/error.hpp"
#include "revspec/sexpr.hpp"

namespace cli {

enum Exit : int { kOk = 0, kNotEquivalent = 1, kUsage = 2, kRuntime = 3 };

inline std::string read_input(const std::string& path) {
  std::ostringstream ss;
  if (path == "-") {
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw revspec::Error(revspec::ErrorKind::Usage, "cannot open " + path);
  ss << in.rdbuf();
  return ss.str();
}

/// An s-expression given on the command line; malformed text is a usage error.
inline revspec::Value parse_argument(const std::string& text, const std::string& what) {
  try {
    return revspec::parse_sexpr(text);
  } catch (const revspec::Error& e) {
    throw revspec::Error(revspec::ErrorKind::Usage, what + ": " + e.what());
  }
}

inline std::uint64_t step_limit(const char* var, std::uint64_t fallback) {
  const char* v = std::getenv(var);
  if (!v || !*v) return fallback;
  char* end = nullptr;
  const unsigned long long n = std::strtoull(v, &end, 10);
  if (*end != '\0' || n == 0)
    throw revspec::Error(revspec::ErrorKind::Usage, std::string(var) + " must be a positive integer");
  return n;
}

/// Parses the command line and runs the selected subcommand callback,
/// translating failures into exit codes.
template <typename Run>
int main_wrapper(CLI::App& app, int argc, char** argv, Run&& run) {
  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }
  try {
    return run();
  } catch (const revspec::Error& e) {
    std::cerr << app.get_name() << ": " << e.what() << "\n";
    return e.kind() == revspec::ErrorKind::Usage ? kUsage : kRuntime;
  } catch (const std::exception& e) {
    std::cerr << app.get_name() << ": " << e.what() << "\n";
    return kRuntime;
  }
}

}  // namespace cli

#endif
