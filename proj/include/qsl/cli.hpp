#pragma once

#include "qsl/bounds.hpp"
#include "qsl/dynamics.hpp"

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace qsl::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitVerifyFailed = 1;
inline constexpr int kExitConfig = 2;
inline constexpr int kExitNumerical = 3;

struct RunConfig {
    std::string model;  // catalog name or path to a model JSON document
    double gamma = 1.0;
    double omega = 1.0;
    std::string init;  // empty: the model's default initial state
    std::vector<double> taus;
    std::size_t steps = 4000;
    double atol_attainable = kDefaultAttainabilityTol;
    std::vector<double> epsilons;
    std::string out;  // empty: standard output
};

// Thrown for invalid configurations; maps to exit code 2.
class ConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Documented column lists.
const std::vector<std::string>& report_columns();
const std::vector<std::string>& sweep_columns();

LindbladModel resolve_model(const RunConfig& config);
DensityMatrix resolve_initial_state(const RunConfig& config, const LindbladModel& model);

// Applies a --config JSON document onto a config; keys mirror the long flags
// with underscores (tau_list, eps_list, atol_attainable).
void apply_config_json(const std::string& text, RunConfig& config);

std::string format_real(double v);
std::string csv_field(const std::string& text);

// Produce the CSV text; throw ConfigError or qsl::Error.
std::string run_csv(const RunConfig& config);
std::string epsilon_sweep_csv(const RunConfig& config);
std::string divergence_scan_csv(const RunConfig& config);
std::string models_text();

// Full command-line entry point.
int main(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace qsl::cli
