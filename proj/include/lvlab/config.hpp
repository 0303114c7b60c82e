#pragma once

#include <cstdint>
#include <map>
#include <string>

namespace lvlab {

inline constexpr const char* kToolName = "dirichlet-lv-lab";
inline constexpr const char* kToolVersion = "0.1.0";

// Run configuration; file format is line-oriented `key = value`, flags
// override file values, defaults compiled in.
struct RunConfig {
    double eps = 0.1;                          // truncation exponent
    std::uint64_t work_budget = 1000000000ULL; // op count scale
    std::uint64_t memory_budget = 2000000000ULL;
    std::uint64_t seed = 1;
    std::string output_path; // empty = stdout
    std::map<std::string, double> tolerances;

    void load_file(const std::string& path);
    void set_kv(const std::string& key, const std::string& value);
    double tolerance(const std::string& name, double fallback) const;
    void validate() const; // eps in (0, 1/2]

    // provenance header: tool version, config echo, seed; '#'-prefixed
    std::string provenance(const std::string& command) const;
};

} // namespace lvlab
