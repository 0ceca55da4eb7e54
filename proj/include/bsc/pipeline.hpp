#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "bsc/graphs.hpp"
#include "bsc/verify.hpp"

namespace bsc {

/// Concentrator from an expanding set: X = C(G, L, {1}, (S u {1}) L) together
/// with the coset graph D = X(G, L; (S u {1})(S u {1})^-1) used to bound it.
struct PipelineReport {
    std::vector<std::size_t> s_prime;  // (S u {1}) L as element indices
    BipartiteGraph concentrator;
    Graph quotient;                    // D

    ConcentrationReport magnifier;     // of the Cayley graph X(G, S)
    double laplacian_gap = 0;          // of D with loops removed
    double gap_bound = 0;              // eps^2 / (4 + 2 eps^2) at the magnifier constant
    bool gap_check = false;

    double lambda1 = 0;                // top two eigenvalues of A A^T
    double lambda2 = 0;
    bool spectral_gap = false;         // lambda1 > lambda2

    double alpha = 0;                  // m / n
    double tanner = 0;                 // tanner_bound at alpha
    bool tanner_checked = false;       // exhaustive bsc check run (n <= 24)
    ConcentrationReport tanner_report; // at min(alpha, 1) with c = tanner_bound there

    bool s_generates = false;
    std::size_t concentrator_components = 0;
    std::size_t quotient_components = 0;
    std::vector<std::string> warnings;

    bool pass() const { return gap_check && spectral_gap && (!tanner_checked || tanner_report.verdict); }
};

PipelineReport pipeline63(const FiniteGroup& group, const FiniteGroup& left, std::span<const std::size_t> connection,
                          const SampleOptions& sample = {});

}  // namespace bsc
