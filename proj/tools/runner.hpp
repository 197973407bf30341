#pragma once

// Experiment orchestration: composes the library modules per the configured
// experiment, writes CSV + JSON reports and maps outcomes onto exit codes
// (0 = all gates pass, 1 = a gate failed with files written, 2 = input or
// module error).

#include <cstdint>
#include <optional>
#include <string>

namespace segray::cli {

struct RunRequest {
  std::string experiment;
  std::string config_path;
  std::string out_dir = ".";
  std::optional<std::uint64_t> seed_override;
};

inline constexpr const char* kExperiments[] = {
    "check-identities", "probe-boundary", "solve-heat", "solve-eigen",
    "compute-m",        "verify-elliptic", "verify-parabolic",
    "kernel-spot-check"};

int run(const RunRequest& req);

} // namespace segray::cli
