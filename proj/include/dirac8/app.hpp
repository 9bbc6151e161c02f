#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

namespace dirac8::app {

inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitConfig = 2;
inline constexpr int kExitIo = 3;

enum class Command { verify_algebra, spin_check, evolve, zitter, boost_demo, compare_oracle };

const char* to_string(Command c);
std::optional<Command> parse_command(std::string_view name);
const std::vector<Command>& all_commands();

/// One entry of summary.json. A missing deviation (the run aborted before it could be measured)
/// serialises as null and never passes.
struct Check {
  std::string name;
  std::string anchor;
  std::optional<double> deviation;
  double tolerance = 0.0;
  bool pass = false;
};

struct Invocation {
  Command command = Command::verify_algebra;
  std::filesystem::path config;
  std::filesystem::path out = ".";
  std::size_t threads = 1;
};

/// 64-bit FNV-1a.
std::uint64_t fnv1a(std::string_view bytes);

/// Runs the command, writes its artifacts and summary.json under inv.out, and returns the exit
/// status: 0 all checks pass, 1 a check failed, 2 bad config, 3 I/O failure. Diagnostics go to log.
int run(const Invocation& inv, std::ostream& log);

void to_json(nlohmann::json& j, const Check& c);

}  // namespace dirac8::app
