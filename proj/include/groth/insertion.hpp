#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "groth/tableau.hpp"

namespace groth {

struct Corner {
    int row = 0;  // 1-based
    int col = 0;
    friend bool operator==(const Corner&, const Corner&) = default;
};

// Complete output of one Hecke insertion: the new tableau, the corner where
// the algorithm terminated, and alpha = 1 iff that corner lies outside the
// input shape.
struct InsertionResult {
    IncreasingTableau tableau;
    Corner corner;
    int alpha = 0;
    friend bool operator==(const InsertionResult&, const InsertionResult&) = default;
};

InsertionResult hecke_insert(int x, const IncreasingTableau& y);
std::pair<IncreasingTableau, int> reverse_hecke_insert(const InsertionResult& r);

// Pair of equal-length words (a, i): i weakly increasing and a strictly
// decreasing within constant-i runs.
struct CompatiblePair {
    Word a;
    Word i;
    friend bool operator==(const CompatiblePair&, const CompatiblePair&) = default;
};

bool is_compatible_pair(const Word& a, const Word& i);

struct RecordingPair {
    IncreasingTableau t;
    SetValuedTableau u;
    friend bool operator==(const RecordingPair&, const RecordingPair&) = default;
};

struct InsertionStep {
    int letter = 0;
    int index = 0;
    int alpha = 0;
    Corner corner;
    IncreasingTableau t;
    SetValuedTableau u;
};

RecordingPair insert_compatible_pair(const CompatiblePair& p,
                                     std::vector<InsertionStep>* trace = nullptr);
CompatiblePair recover_compatible_pair(const RecordingPair& rp);

IncreasingTableau product_increasing(const IncreasingTableau& t1, const IncreasingTableau& t2);
DecreasingTableau product_decreasing(const DecreasingTableau& t1, const DecreasingTableau& t2);

}  // namespace groth
