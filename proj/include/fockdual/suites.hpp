#pragma once

// Verification suites run by the command-line tool and the acceptance test.

#include <cstdint>
#include <string>
#include <vector>

#include "fockdual/bimodule.hpp"
#include "fockdual/report.hpp"

namespace fockdual {

struct SuiteConfig {
    /// Numerical rank and kernel threshold (tensor quotients, fullness, faithfulness).
    double tol = 1e-9;
    int radius = 3;
    /// Quadrature points; 0 means 4N + 2.
    int quadrature = 0;
    std::uint64_t seed = 20240917;

    int quadrature_points() const { return quadrature > 0 ? quadrature : 4 * radius + 2; }
};

/// axioms, creation-identities, covariance, pi-representation, compact-generation,
/// sigma, fourier, a-alpha-picture
const std::vector<std::string>& suite_names();

/// Every check a suite can emit, with the identity it certifies.
struct AnchorRow {
    std::string suite;
    std::string check_id;
    std::string anchor;
};
const std::vector<AnchorRow>& anchor_table();
/// Throws std::out_of_range for a check missing from the table.
const std::string& anchor_for(const std::string& suite, const std::string& check_id);

/// Runs one suite. Each suite draws from its own generator seeded by (seed, suite),
/// so results do not depend on which other suites run.
/// Throws std::invalid_argument for an unknown suite and lets IllConditionedError through.
Report run_suite(const std::string& name, const Bimodule& x, const SuiteConfig& cfg);

}  // namespace fockdual
