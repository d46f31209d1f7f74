#pragma once

#include <string>
#include <vector>

#include "groth/quiver.hpp"

namespace groth {

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail;  // counterexample payload on failure
};

struct VerifyReport {
    std::vector<CheckResult> checks;
    bool all_pass() const {
        for (const auto& c : checks)
            if (!c.pass) return false;
        return true;
    }
};

// Insert/reverse and recording-pair round-trips on random data.
VerifyReport verify_roundtrip(int size, unsigned seed = 20060119);

// Monomial oracle identity and the expansion symmetries, exhaustively over S_4.
VerifyReport verify_oracles(int workers = 0);

// Structural checks of the quiver pipeline on the given rank conditions; the
// bundled example additionally checks its known figures.
VerifyReport verify_quiver(const RankConditions& rc, int workers = 0);

VerifyReport verify_all(int size, int workers = 0);

// The running example: bundle ranks (1,4,3,3) with one fully worked expansion.
RankConditions example_rank_conditions();
QuiverExpansion example_quiver_expansion();
std::vector<FactorSequence> example_factor_sequences();
Permutation example_zelevinsky();

}  // namespace groth
