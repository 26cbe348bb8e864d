#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace cospec {
namespace repro {

struct Check {
    std::string label;
    bool pass = false;
    std::string detail;
    double ms = 0.0;
};

struct Report {
    std::string scenario;
    std::vector<Check> checks;
    bool pass = false;
    double total_ms = 0.0;
};

struct Options {
    uint64_t seed = 0;
    int workers = 1;
    /// Path to an externally generated file of all connected 9-vertex graphs
    /// (newline-delimited graph6); enables the census9 scenario.
    std::string nine_vertex_file;
};

std::vector<std::string> scenario_names();

/// Re-derives and re-verifies one bundled scenario
/// (fig1..fig8, census7, census9). Throws Error on unknown names.
Report run(const std::string& name, const Options& opts = {});

std::string report_to_json(const Report& report);

}  // namespace repro
}  // namespace cospec
