#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "submultiset/counting.hpp"
#include "submultiset/multiset_spec.hpp"
#include "submultiset/natural.hpp"
#include "submultiset/oracles.hpp"

namespace submultiset::cli {

enum ExitCode : int {
    kOk = 0,
    kInternal = 1,
    kUsage = 2,
    kCapacity = 3,
    kDisagree = 4,
};

enum class Subcommand { Count, Table, Enumerate, Check, Bench };
enum class OutputFormat { Text, Json, Csv };

struct CliRequest {
    Subcommand subcommand = Subcommand::Count;
    MultisetSpec multiplicities;
    std::optional<std::uint64_t> n;
    CountMethod method = CountMethod::DynamicProgramming;
    OutputFormat format = OutputFormat::Text;
    std::optional<Natural> limit;
    Natural start_rank;
    Budget budget;
    /// Colour AGREE/DISAGREE in text mode. The tool sets this only for a
    /// terminal with NO_COLOR unset.
    bool color = false;
};

/// Thrown by parse_request on malformed input.
class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Result of parsing argv: either a request, or an exit code when parsing
/// already produced the full response (--help, usage errors).
struct ParseOutcome {
    std::optional<CliRequest> request;
    int exit_code = kOk;
};

/// `args` excludes the program name.
ParseOutcome parse_request(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Executes a parsed request. Results go to `out`, diagnostics to `err`.
int run(const CliRequest& request, std::ostream& out, std::ostream& err);

/// parse_request followed by run.
int main_entry(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, bool color = false);

/// Strict non-negative decimal, no sign or whitespace, fits 64 bits.
std::uint64_t parse_u64(const std::string& text, const std::string& what);

} // namespace submultiset::cli
