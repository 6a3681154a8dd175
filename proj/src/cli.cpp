#include "submultiset/cli.hpp"

#include <algorithm>
#include <charconv>
#include <chrono>
#include <ostream>

#include <CLI11.hpp>
#include <json.hpp>

#include "submultiset/enumeration.hpp"
#include "submultiset/errors.hpp"

namespace submultiset::cli {

namespace {

using nlohmann::json;

constexpr const char* kGreen = "\x1b[32m";
constexpr const char* kRed = "\x1b[31m";
constexpr const char* kReset = "\x1b[0m";

const CountMethod kAllMethods[] = {CountMethod::InclusionExclusion, CountMethod::DynamicProgramming,
                                   CountMethod::BruteForce};

struct RawOptions {
    std::string multiplicities;
    std::optional<std::string> n;
    std::string method = "dp";
    std::string format = "text";
    std::optional<std::string> limit;
    std::optional<std::string> start_rank;
    std::optional<std::string> budget;
};

void add_common_options(CLI::App& sub, RawOptions& raw) {
    sub.add_option("-m,--multiplicities", raw.multiplicities, "comma-separated multiplicities, e.g. 5,9,14")
        ->required();
    sub.add_option("-n,--n", raw.n, "sub-multiset cardinality");
    sub.add_option("--method", raw.method, "incexc | dp | brute (default dp)");
    sub.add_option("--format", raw.format, "text | json | csv (default text)");
    sub.add_option("--limit", raw.limit, "enumerate: emit at most this many compositions");
    sub.add_option("--start-rank", raw.start_rank, "enumerate: first rank to emit (0-based)");
    sub.add_option("--budget", raw.budget, "brute force: maximum compositions visited (default 10000000)");
}

CliRequest build_request(Subcommand subcommand, const RawOptions& raw) {
    CliRequest req;
    req.subcommand = subcommand;
    try {
        req.multiplicities = MultisetSpec::parse(raw.multiplicities);
    } catch (const InvalidArgument& e) {
        throw UsageError(e.what());
    }
    if (raw.n) {
        req.n = parse_u64(*raw.n, "n");
    }
    const bool needs_n = subcommand != Subcommand::Table;
    if (needs_n && !req.n) {
        throw UsageError("--n is required for this subcommand");
    }
    if (!needs_n && req.n) {
        throw UsageError("--n is not accepted by table");
    }
    const auto method = parse_count_method(raw.method);
    if (!method) {
        throw UsageError("unknown method '" + raw.method + "' (expected incexc, dp or brute)");
    }
    req.method = *method;
    if (raw.format == "text") {
        req.format = OutputFormat::Text;
    } else if (raw.format == "json") {
        req.format = OutputFormat::Json;
    } else if (raw.format == "csv") {
        req.format = OutputFormat::Csv;
    } else {
        throw UsageError("unknown format '" + raw.format + "' (expected text, json or csv)");
    }
    if (raw.limit) {
        req.limit = Natural{parse_u64(*raw.limit, "limit")};
    }
    if (raw.start_rank) {
        try {
            req.start_rank = Natural::from_decimal(*raw.start_rank);
        } catch (const InvalidArgument&) {
            throw UsageError("start-rank: expected a non-negative integer, got '" + *raw.start_rank + "'");
        }
    }
    if (raw.budget) {
        const std::uint64_t b = parse_u64(*raw.budget, "budget");
        if (b == 0) {
            throw UsageError("budget must be at least 1");
        }
        req.budget = Budget(Natural{b});
    }
    return req;
}

void print_verdict(bool agree, bool color, std::ostream& out) {
    const char* word = agree ? "AGREE" : "DISAGREE";
    if (color) {
        out << (agree ? kGreen : kRed) << word << kReset << '\n';
    } else {
        out << word << '\n';
    }
}

int run_count(const CliRequest& req, std::ostream& out) {
    const Natural value = count(req.multiplicities, *req.n, req.method, req.budget);
    if (req.format == OutputFormat::Json) {
        out << json{{"count", value.to_decimal()}}.dump() << '\n';
    } else {
        out << value << '\n';
    }
    return kOk;
}

int run_table(const CliRequest& req, std::ostream& out) {
    std::vector<Natural> counts;
    if (req.method == CountMethod::DynamicProgramming) {
        counts = full_table(req.multiplicities).counts;
    } else {
        for (std::uint64_t n = 0; n <= req.multiplicities.cardinality(); ++n) {
            counts.push_back(count(req.multiplicities, n, req.method, req.budget));
        }
    }
    if (req.format == OutputFormat::Json) {
        json arr = json::array();
        for (const auto& c : counts) {
            arr.push_back(c.to_decimal());
        }
        out << arr.dump() << '\n';
        return kOk;
    }
    for (std::size_t n = 0; n < counts.size(); ++n) {
        out << n << ',' << counts[n] << '\n';
    }
    return kOk;
}

int run_enumerate(const CliRequest& req, std::ostream& out) {
    auto cursor = CompositionCursor::at_rank(req.multiplicities, *req.n, req.start_rank);
    const bool as_json = req.format == OutputFormat::Json;
    json arr = json::array();
    Natural emitted;
    while (!req.limit || emitted < *req.limit) {
        auto x = cursor.next();
        if (!x) {
            break;
        }
        if (as_json) {
            arr.push_back(std::vector<std::uint64_t>(x->values().begin(), x->values().end()));
        } else {
            out << x->to_csv() << '\n';
        }
        emitted += Natural{1};
    }
    if (as_json) {
        out << arr.dump() << '\n';
    }
    return kOk;
}

int run_check(const CliRequest& req, std::ostream& out) {
    const AgreementReport report = cross_check(req.multiplicities, *req.n, req.budget);
    switch (req.format) {
    case OutputFormat::Json: {
        json methods = json::array();
        for (const auto& o : report.outcomes) {
            json entry{{"method", std::string(to_string(o.method))}};
            if (o.ran()) {
                entry["count"] = o.value->to_decimal();
            } else {
                entry["skipped"] = o.skipped_reason;
            }
            methods.push_back(std::move(entry));
        }
        out << json{{"methods", methods}, {"agree", report.agree}}.dump() << '\n';
        break;
    }
    case OutputFormat::Csv:
        for (const auto& o : report.outcomes) {
            out << to_string(o.method) << ',' << (o.ran() ? o.value->to_decimal() : std::string("skipped")) << '\n';
        }
        out << "result," << (report.agree ? "AGREE" : "DISAGREE") << '\n';
        break;
    case OutputFormat::Text:
        for (const auto& o : report.outcomes) {
            out << to_string(o.method) << ": ";
            if (o.ran()) {
                out << *o.value << '\n';
            } else {
                out << "skipped (" << o.skipped_reason << ")\n";
            }
        }
        print_verdict(report.agree, req.color, out);
        break;
    }
    return report.agree ? kOk : kDisagree;
}

int run_bench(const CliRequest& req, std::ostream& out) {
    json rows = json::array();
    for (CountMethod method : kAllMethods) {
        const auto start = std::chrono::steady_clock::now();
        std::optional<Natural> value;
        std::string skipped;
        try {
            value = count(req.multiplicities, *req.n, method, req.budget);
        } catch (const CapacityError& e) {
            skipped = e.what();
        }
        const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        const std::string name(to_string(method));
        switch (req.format) {
        case OutputFormat::Json: {
            json row{{"method", name}};
            if (value) {
                row["count"] = value->to_decimal();
                row["seconds"] = seconds;
            } else {
                row["skipped"] = skipped;
            }
            rows.push_back(std::move(row));
            break;
        }
        case OutputFormat::Csv:
            out << name << ',' << (value ? std::to_string(seconds) : std::string("skipped")) << '\n';
            break;
        case OutputFormat::Text:
            if (value) {
                out << name << ": " << seconds << " s (count " << *value << ")\n";
            } else {
                out << name << ": skipped (" << skipped << ")\n";
            }
            break;
        }
    }
    if (req.format == OutputFormat::Json) {
        out << rows.dump() << '\n';
    }
    return kOk;
}

} // namespace

std::uint64_t parse_u64(const std::string& text, const std::string& what) {
    const bool digits = !text.empty() && std::all_of(text.begin(), text.end(), [](char c) { return c >= '0' && c <= '9'; });
    std::uint64_t v = 0;
    if (digits) {
        const auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
        if (ec == std::errc{} && end == text.data() + text.size()) {
            return v;
        }
    }
    throw UsageError(what + ": expected a non-negative integer, got '" + text + "'");
}

ParseOutcome parse_request(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Count and enumerate the sub-multisets of a given cardinality", "submultiset"};
    app.require_subcommand(1);

    RawOptions raw;
    struct Entry {
        Subcommand subcommand;
        CLI::App* app;
    };
    const std::vector<Entry> subs = {
        {Subcommand::Count, app.add_subcommand("count", "number of sub-multisets of cardinality n")},
        {Subcommand::Table, app.add_subcommand("table", "counts for every cardinality 0..N")},
        {Subcommand::Enumerate, app.add_subcommand("enumerate", "list sub-multisets of cardinality n")},
        {Subcommand::Check, app.add_subcommand("check", "compare all counting methods")},
        {Subcommand::Bench, app.add_subcommand("bench", "time each counting method")},
    };
    for (const auto& s : subs) {
        add_common_options(*s.app, raw);
    }

    // CLI11 wants argv order reversed.
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return {std::nullopt, code == 0 ? kOk : kUsage};
    }

    try {
        for (const auto& s : subs) {
            if (s.app->parsed()) {
                return {build_request(s.subcommand, raw), kOk};
            }
        }
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return {std::nullopt, kUsage};
    }
    err << "error: no subcommand\n";
    return {std::nullopt, kUsage};
}

int run(const CliRequest& request, std::ostream& out, std::ostream& err) {
    try {
        switch (request.subcommand) {
        case Subcommand::Count:
            return run_count(request, out);
        case Subcommand::Table:
            return run_table(request, out);
        case Subcommand::Enumerate:
            return run_enumerate(request, out);
        case Subcommand::Check:
            return run_check(request, out);
        case Subcommand::Bench:
            return run_bench(request, out);
        }
    } catch (const CapacityError& e) {
        err << "error: " << e.what() << '\n';
        return kCapacity;
    } catch (const InvalidArgument& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const OutOfRange& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << '\n';
        return kInternal;
    }
    return kInternal;
}

int main_entry(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, bool color) {
    ParseOutcome parsed = parse_request(args, out, err);
    if (!parsed.request) {
        return parsed.exit_code;
    }
    parsed.request->color = color;
    return run(*parsed.request, out, err);
}

} // namespace submultiset::cli
