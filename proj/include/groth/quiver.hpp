#pragma once

#include <map>
#include <vector>

#include "groth/expansion.hpp"
#include "groth/partition.hpp"
#include "groth/permutation.hpp"
#include "groth/tableau.hpp"

namespace groth {

// Upper-triangular rank conditions r_{ij}, 0 <= i <= j <= n, with e_i = r_{ii}.
// Beyond the stored triangle the ranks follow the extension convention
// r_{ij} = e_j + ... + e_i for j < i, and vanish out of range.
class RankConditions {
public:
    RankConditions(int n, std::vector<std::vector<int>> rows);

    int n() const { return n_; }
    int e(int i) const;            // r_{ii}
    int N() const;                 // e_0 + ... + e_n
    int rank(int i, int j) const;  // extended
    const std::vector<std::vector<int>>& rows() const { return rows_; }

    RankConditions bar() const;  // rbar_{ij} = r_{i,j+1}, one bundle shorter

    friend bool operator==(const RankConditions&, const RankConditions&) = default;

private:
    int n_;
    std::vector<std::vector<int>> rows_;  // rows_[i][j-i] = r_{ij}
    void validate() const;
};

// Strand multiplicities of the lace diagram underlying r; all must be >= 0
// for the rank conditions to occur.
int strand_multiplicity(const RankConditions& rc, int i, int j);

int expected_codim(const RankConditions& rc);

DecreasingTableau build_u_tableau(const RankConditions& rc, int i, int j);
Permutation w_ij(const RankConditions& rc, int i, int j);

struct ZelevinskyData {
    Permutation z;
    std::vector<Permutation> delta;  // delta_1 .. delta_{n-1}
};

ZelevinskyData zelevinsky(const RankConditions& rc);

using KmsFactorization = std::vector<Permutation>;
using FactorSequence = std::vector<DecreasingTableau>;

std::vector<KmsFactorization> kms_factorizations(const RankConditions& rc);
std::vector<FactorSequence> factor_sequences(const RankConditions& rc, int workers = 0);

bool satisfies_kms_identity(const RankConditions& rc, const KmsFactorization& f);

struct QuiverExpansion {
    using Key = std::vector<Partition>;
    std::map<Key, long long> terms;
    std::vector<int> e;
};

QuiverExpansion quiver_coefficients(const RankConditions& rc, int workers = 0);

Partition lambda_of_mu(const std::vector<Partition>& mu, const std::vector<int>& e);

struct QuivstabEntry {
    std::vector<Partition> mu;
    Partition lambda;
    long long quiver_side = 0;
    long long stable_side = 0;
    bool match = false;
};

struct QuivstabReport {
    std::vector<QuivstabEntry> entries;
    long long tableau_total = 0;   // decreasing tableaux for z(r) at the lambda(mu) shapes
    long long sequence_total = 0;  // factor sequences
    bool counts_match = false;
    bool all_match = false;
};

// Checks c_mu(r) = c_{z(r),lambda(mu)} for every mu in the quiver expansion,
// both sides computed by independent enumerations.
QuivstabReport verify_quivstab(const RankConditions& rc, int workers = 0);

}  // namespace groth
