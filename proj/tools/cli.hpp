#pragma once

#include <cstddef>
#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

namespace liecontract::cli {

/// Exit codes of the command-line tool.
inline constexpr int kExitOk = 0;
inline constexpr int kExitVerificationFailed = 1;
inline constexpr int kExitUsage = 2;

/// Runs one invocation. `args` excludes the program name. Results go to
/// `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Worker count for sweeps: LIECONTRACT_THREADS when set to a positive
/// integer, otherwise the hardware concurrency (at least 1).
std::size_t thread_budget();

/// Calls task(i) for i in [0, count) on up to `threads` workers. Tasks must
/// write only to their own output slot.
void parallel_for(std::size_t count, std::size_t threads,
                  const std::function<void(std::size_t)>& task);

/// Parses "3,6" into {3, 6}; empty text gives an empty list.
std::vector<int> parse_int_list(const std::string& text);

}  // namespace liecontract::cli
