#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "mcd/family.hpp"

namespace mcd::cli {

enum ExitCode : int {
    kSuccess = 0,
    kUsageError = 1,
    kCheckFailed = 2,
    kCapExceeded = 3,
};

/// A parsed and validated invocation. Validation happens before any work.
struct CommandPlan {
    std::string subcommand;
    std::optional<std::int64_t> r;
    std::vector<std::int64_t> rs;  // `bound --r` may repeat
    std::optional<std::int64_t> n;
    std::optional<std::string> gadget;
    std::optional<std::string> input;
    std::optional<std::string> output;
    std::int64_t cap = 0;
};

struct GadgetRef {
    Family family;
    std::int64_t index;
};

/// Parses "FAMILY:I", e.g. "C:0" or "BIG:58".
GadgetRef parse_gadget_ref(const std::string& text);

/// Runs one invocation; `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Verifies `set`, prints the summary to `out` and, when `certificate_path` is
/// set, writes the JSON certificate there. Returns kSuccess or kCheckFailed.
int verify_and_report(const GadgetSet& set, const FamilyParams& params,
                      const std::optional<std::string>& certificate_path, std::ostream& out);

}  // namespace mcd::cli
