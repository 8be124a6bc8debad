#ifndef PARAFOCK_CLI_HPP
#define PARAFOCK_CLI_HPP

#include "parafock/report.hpp"

#include <json.hpp>

#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace parafock::cli {

/// Invalid parameters; maps to exit code 2.
class UsageError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

enum class Format { text, json };

struct RunConfig {
    std::string subcommand;
    // verify
    std::string suite = "all";
    int R = 4;
    int p = 1;
    std::optional<int> n_max;
    std::optional<int> depth;
    std::string triples = "all";
    unsigned threads = 1;
    std::string table_path;
    // tableaux
    int n = 3;
    // state
    std::string kind = "vacuum";
    int K = 3;
    int K_prime = 3;
    std::string epsilon = "1/1";
    std::optional<int> boundary_width;
    // cosmo
    std::string constants_path;
    // output
    Format format = Format::text;
    std::string output_path;
    bool timing = false;
};

/// Result of one subcommand. `pass` holds iff every record passes.
struct SuiteReport {
    std::string suite;
    std::vector<CheckRecord> records;
    /// Human-readable body printed before the check lines.
    std::string text;
    /// Machine-readable body under "data".
    nlohmann::json data = nlohmann::json::object();
    std::optional<double> seconds;

    bool pass() const;
};

SuiteReport cmd_verify(const RunConfig& config);
SuiteReport cmd_tableaux(const RunConfig& config);
SuiteReport cmd_state(const RunConfig& config);
SuiteReport cmd_cosmo(const RunConfig& config);

std::string render_text(const SuiteReport& report);
/// {"schema": 1, "suite", "pass", "checks": [{id, status, detail}], "data", "timing_seconds"?}
std::string render_json(const SuiteReport& report);

/// Full command line entry point. Returns 0 on pass, 1 on a failed check and
/// 2 on a usage or configuration error.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace parafock::cli

#endif
