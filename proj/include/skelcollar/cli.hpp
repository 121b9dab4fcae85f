#pragma once

#include <json.hpp>

#include <array>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace skelcollar::cli {

enum ExitCode : int {
    kOk = 0,
    kComputationError = 1,
    kUsage = 2,
    kVerificationFailed = 3,
};

struct RunConfig {
    std::string subcommand;
    /// pic or iso for the collar subcommand.
    std::string mode;
    int n = 0;
    int a = 1;
    int b = 0;
    int j = 0;
    int j1 = 0;
    int j2 = 0;
    int s = 1;
    int rank = 1;
    std::vector<int> weights;
    std::string kappa = "2";
    int samples = 100;
    std::uint64_t seed = 1;
    std::optional<int> cutoff;
    std::optional<int> bound;
    std::vector<std::string> taus;
    std::vector<std::string> coeffs;
    std::string matrix_path;
    std::string format = "text";
    std::string output;
};

/// Parses argv-style arguments (without the program name) and runs the command.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Routes a validated configuration to its module and writes the report.
int dispatch(const RunConfig& config, std::ostream& out);

/// SVG drawing of a two-dimensional cone with optional interior rays.
std::string fan_svg(const std::vector<std::vector<std::array<long, 2>>>& cones,
                    const std::vector<std::vector<std::array<long, 2>>>& interior_rays,
                    const std::vector<std::string>& titles, const std::string& header);

}  // namespace skelcollar::cli
