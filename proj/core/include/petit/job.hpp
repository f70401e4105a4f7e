#ifndef PETIT_JOB_HPP
#define PETIT_JOB_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"
#include "petit/autgroup.hpp"

namespace petit {

struct config_parse_error : error {
    using error::error;
};
struct table_too_large_error : error {
    using error::error;
};

/// A parsed ring-tower + analysis job.  The same structure backs every CLI
/// subcommand and the library-level runner.
struct JobConfig {
    int p = 2;
    std::string kind = "prime-field";  // prime-field | extension-field | split-ring | matrix-ring
    std::vector<int> modulus;
    int copies = 0;
    int matrix_size = 0;
    struct Sigma {
        std::string kind = "identity";  // identity | frobenius | cyclic-shift | matrix-entrywise
        int power = 1;
        std::string conjugator;  // coordinate tuple, matrix rings only
    } sigma;
    int m = 2;
    std::string d = "(1)";  // coordinate tuple in D
    std::vector<std::string> generators;  // polynomial text; defaults chosen per ring kind
    std::vector<std::string> analyses;    // empty means all
    std::uint64_t enum_bound = kDefaultEnumBound;
    std::uint64_t budget = 1u << 20;
    int print_bound = 64;
};

extern const std::vector<std::string> kKnownAnalyses;

JobConfig parse_job_config_text(const std::string& text);
JobConfig parse_job_config_file(const std::string& path);

/// The configured objects, ready for analysis.
struct BuiltJob {
    Ring::Ptr D;
    RingAut sigma;
    SkewPolyRing::Ptr S;
    PetitAlgebra::Ptr A;
    GaloisData galois;
    std::vector<AlgebraElement> generators;
};

BuiltJob build_job(const JobConfig& cfg);

/// Runs the requested analyses and assembles the deterministic report.  The
/// timing block is the single nondeterministic section and is kept under its
/// own top-level key.
nlohmann::ordered_json run_job(const JobConfig& cfg);

/// True when every verdict in the report passed and no check errored.
bool report_all_pass(const nlohmann::ordered_json& report);

/// The report with the timing block removed, serialized; two runs of the
/// same config agree byte for byte on this.
std::string report_without_timing(const nlohmann::ordered_json& report);

std::string mul_table_text(const BuiltJob& job, int print_bound);

nlohmann::ordered_json json_of_subspace(const Subspace& s);
nlohmann::ordered_json json_of_matrix(const Mat& m);

}  // namespace petit

#endif
