#pragma once

#include "diamlab/io.hpp"
#include "diamlab/littlewood.hpp"
#include "diamlab/measures.hpp"
#include "diamlab/optimizer.hpp"
#include "diamlab/oracle.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace diamlab {

/// One line of the verification suite. `relation` says how computed is
/// compared with expected: "=" within tolerance, "<=" or ">" with the
/// tolerance as slack or margin.
struct Check {
    std::string name;
    double expected = 0.0;
    std::string provenance;
    double computed = 0.0;
    double abs_error = 0.0;
    double tolerance = 0.0;
    std::string relation = "=";
    bool pass = false;
};

struct VerificationReport {
    std::vector<Check> checks;
    bool overall = true;  ///< all checks pass

    void add(Check c);
};

struct VerifyOptions {
    /// Tolerance of the checks that go through arc discretization.
    double area_tol = 1e-6;
    std::uint64_t oracle_samples = 1'000'000;
    std::uint64_t oracle_seed = 2024;
};

/// Runs the identity suite. Never throws for a failing identity; failures
/// are report entries.
VerificationReport verify(const VerifyOptions& opt = {});

json to_json(const Check& c);
json to_json(const VerificationReport& r);
json to_json(const MuReport& r);
json to_json(const McEstimate& e);
json to_json(const LittlewoodBound& b);
json to_json(const LittlewoodCheck& c);
json to_json(const OptTrace& t);
json to_json(const PerturbationReport& r);

/// Fixed-width table, one row per check, and a closing verdict line.
std::string format_table(const VerificationReport& r);

}  // namespace diamlab
