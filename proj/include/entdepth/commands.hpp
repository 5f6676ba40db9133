#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>

namespace entdepth::cli {

/// Exit codes shared by all subcommands.
inline constexpr int kOk = 0;
inline constexpr int kViolation = 1;
inline constexpr int kUsage = 2;
inline constexpr int kIo = 3;

struct RunConfig {
    int n = 0;
    std::string genfun;   // generator spec string
    std::string input;    // input path
    std::string output;   // output path ("" or "-" = stdout)
    std::string format;   // csv | json | dot
    std::optional<std::uint64_t> seed;
    int n_max_bruteforce = 30;
    int n_max_mixed = 8;
};

int cmd_partitions(const RunConfig& cfg, std::ostream& diag);
int cmd_hasse(const RunConfig& cfg, const std::string& order,
              std::ostream& diag);
int cmd_genfun_table(const RunConfig& cfg, std::ostream& diag);
int cmd_bounds(const RunConfig& cfg, std::ostream& diag);
int cmd_usefulness(const RunConfig& cfg, std::ostream& diag);
int cmd_classify(const RunConfig& cfg, std::ostream& diag);
int cmd_witness(const RunConfig& cfg, std::ostream& diag);
int cmd_verify(const RunConfig& cfg, const std::string& suite, int n_max,
               bool include_counterexamples, std::ostream& diag);

}  // namespace entdepth::cli
