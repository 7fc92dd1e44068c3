#pragma once

// Subcommands of the bquant tool, runnable in-process so tests can drive them
// without spawning a shell.

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

namespace bquant::cli {

namespace exit_code {
inline constexpr int ok = 0;
inline constexpr int check_failure = 1;
inline constexpr int usage = 2;
}  // namespace exit_code

struct CommandOutcome {
  int exit_code = exit_code::ok;
  std::string out;
  std::string err;
  /// Set when a machine-readable payload was written with --output.
  std::optional<std::filesystem::path> payload;
};

/// `args` excludes the program name.
CommandOutcome run(const std::vector<std::string>& args);

CommandOutcome cmd_check(const std::filesystem::path& file);
CommandOutcome cmd_quantize(const std::filesystem::path& file, const std::string& format, bool verify,
                            unsigned threads = 1);
CommandOutcome cmd_reduce(const std::filesystem::path& file, const std::string& weight_csv);
CommandOutcome cmd_verify_qr(const std::filesystem::path& file_m, const std::filesystem::path& file_n,
                             const std::optional<std::filesystem::path>& cache = std::nullopt);
CommandOutcome cmd_cancel(const std::filesystem::path& file, long hypersurface);

}  // namespace bquant::cli
