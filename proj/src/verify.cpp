#include "groth/verify.hpp"

#include <random>
#include <set>
#include <sstream>

#include "groth/check.hpp"
#include "groth/insertion.hpp"
#include "groth/json_io.hpp"

namespace groth {

namespace {

IncreasingTableau random_tableau(std::mt19937& rng, int max_boxes, int max_letter) {
    std::uniform_int_distribution<int> nd(0, max_boxes);
    std::uniform_int_distribution<int> ld(1, max_letter);
    IncreasingTableau t;
    int k = nd(rng);
    for (int i = 0; i < k; ++i) t = hecke_insert(ld(rng), t).tableau;
    return t;
}

CompatiblePair random_compatible_pair(std::mt19937& rng, int max_len, int max_letter,
                                      int max_index) {
    std::uniform_int_distribution<int> nd(0, max_len);
    int len = nd(rng);
    Word a, i;
    int last_a = 0, last_i = 0;
    for (int j = 0; j < len; ++j) {
        std::uniform_int_distribution<int> id(std::max(last_i, 1), max_index);
        int ij = id(rng);
        int lo = 1, hi = max_letter;
        if (j > 0 && ij == last_i) hi = last_a - 1;  // strict drop within a run
        if (hi < lo) {
            if (last_i >= max_index) break;
            ij = std::uniform_int_distribution<int>(last_i + 1, max_index)(rng);
            hi = max_letter;
        }
        int aj = std::uniform_int_distribution<int>(lo, hi)(rng);
        a.push_back(aj);
        i.push_back(ij);
        last_a = aj;
        last_i = ij;
    }
    GROTH_CHECK(is_compatible_pair(a, i));
    return {a, i};
}

std::string describe(const IncreasingTableau& t) { return to_json(t).dump(); }

}  // namespace

VerifyReport verify_roundtrip(int size, unsigned seed) {
    VerifyReport rep;
    std::mt19937 rng(seed);
    std::uniform_int_distribution<int> ld(1, 8);

    int fail = 0;
    std::string detail;
    for (int it = 0; it < size; ++it) {
        IncreasingTableau y = random_tableau(rng, 12, 8);
        int x = ld(rng);
        InsertionResult r = hecke_insert(x, y);
        auto [y2, x2] = reverse_hecke_insert(r);
        if (!(y2 == y && x2 == x)) {
            ++fail;
            if (detail.empty()) detail = "Y=" + describe(y) + " x=" + std::to_string(x);
        }
    }
    rep.checks.push_back({"insert_reverse_roundtrip", fail == 0, detail});

    fail = 0;
    detail.clear();
    for (int it = 0; it < size; ++it) {
        IncreasingTableau z = random_tableau(rng, 12, 8);
        if (z.empty()) continue;
        std::vector<Corner> corners;
        for (int r = 1; r <= z.num_rows(); ++r)
            if (z.is_corner(r, z.row_length(r))) corners.push_back({r, z.row_length(r)});
        Corner c = corners[std::uniform_int_distribution<size_t>(0, corners.size() - 1)(rng)];
        int alpha = std::uniform_int_distribution<int>(0, 1)(rng);
        InsertionResult triple{z, c, alpha};
        auto [y, x] = reverse_hecke_insert(triple);
        InsertionResult again = hecke_insert(x, y);
        if (!(again == triple)) {
            ++fail;
            if (detail.empty())
                detail = "Z=" + describe(z) + " corner=(" + std::to_string(c.row) + "," +
                         std::to_string(c.col) + ") alpha=" + std::to_string(alpha);
        }
    }
    rep.checks.push_back({"reverse_insert_roundtrip", fail == 0, detail});

    fail = 0;
    detail.clear();
    for (int it = 0; it < size; ++it) {
        CompatiblePair p = random_compatible_pair(rng, 10, 8, 5);
        RecordingPair rp = insert_compatible_pair(p);
        CompatiblePair back = recover_compatible_pair(rp);
        if (!(back == p)) {
            ++fail;
            if (detail.empty()) detail = "a=" + json(p.a).dump() + " i=" + json(p.i).dump();
        }
    }
    rep.checks.push_back({"recording_pair_roundtrip", fail == 0, detail});
    return rep;
}

VerifyReport verify_oracles(int workers) {
    VerifyReport rep;
    bool oracle_ok = true, agree_ok = true, conj_ok = true;
    std::string oracle_detail, agree_detail, conj_detail;
    for (const auto& p : symmetric_group(4)) {
        int ell = length(p);
        SparsePolynomial lhs = monomials_compatible(p, 3, ell + 2);
        SparsePolynomial rhs(3, ell + 2);
        StableExpansion st = stable_coefficients(p, ell + 2, workers);
        for (const auto& [shape, c] : st.expansion.terms())
            rhs += monomials_setvalued(shape, 3, ell + 2) * Coeff(c);
        if (!(lhs == rhs)) {
            oracle_ok = false;
            if (oracle_detail.empty()) oracle_detail = "pi=" + to_json(p).dump();
        }
        StableExpansion dec = stable_coefficients_decreasing(p, ell + 3, workers);
        StableExpansion inc = stable_coefficients(p, ell + 3, workers);
        if (!(dec.expansion == inc.expansion)) {
            agree_ok = false;
            if (agree_detail.empty()) agree_detail = "pi=" + to_json(p).dump();
        }
        Permutation conj = conjugate_by_longest(inverse(p), 4);
        StableExpansion st2 = stable_coefficients(conj, ell + 3, workers);
        if (!(st2.expansion == inc.expansion)) {
            conj_ok = false;
            if (conj_detail.empty()) conj_detail = "pi=" + to_json(p).dump();
        }
    }
    rep.checks.push_back({"monomial_oracle_identity_S4", oracle_ok, oracle_detail});
    rep.checks.push_back({"decreasing_increasing_agreement_S4", agree_ok, agree_detail});
    rep.checks.push_back({"conjugation_symmetry_S4", conj_ok, conj_detail});
    return rep;
}

namespace {

bool contains_upper_left(const DecreasingTableau& t, const DecreasingTableau& u) {
    for (int r = 0; r < u.num_rows(); ++r) {
        if (r >= t.num_rows()) return false;
        const auto& urow = u.rows()[r];
        const auto& trow = t.rows()[r];
        if (urow.size() > trow.size()) return false;
        for (size_t c = 0; c < urow.size(); ++c)
            if (urow[c] != trow[c]) return false;
    }
    return true;
}

}  // namespace

VerifyReport verify_quiver(const RankConditions& rc, int workers) {
    VerifyReport rep;
    int n = rc.n();

    ZelevinskyData zd = zelevinsky(rc);  // asserts reducedness and descent containments
    rep.checks.push_back({"zelevinsky_structure", true, ""});

    auto kms = kms_factorizations(rc);  // asserts the defining identity per element
    rep.checks.push_back({"kms_identity", true, ""});

    auto seqs = factor_sequences(rc, workers);

    std::set<KmsFactorization> kms_set(kms.begin(), kms.end());
    std::set<KmsFactorization> hit;
    bool forward = true, contain = true, floor = true;
    std::string fw_detail, ct_detail, fl_detail;
    int d = expected_codim(rc);
    for (const auto& seq : seqs) {
        KmsFactorization f;
        int total = 0;
        for (const auto& t : seq) {
            f.push_back(decreasing_permutation(t));
            total += t.boxes();
        }
        if (!kms_set.count(f)) {
            forward = false;
            if (fw_detail.empty()) fw_detail = to_json(seq).dump();
        }
        hit.insert(f);
        for (int i = 1; i <= n; ++i)
            if (!contains_upper_left(seq[i - 1], build_u_tableau(rc, i - 1, i))) {
                contain = false;
                if (ct_detail.empty()) ct_detail = to_json(seq).dump();
            }
        if (total < d) {
            floor = false;
            if (fl_detail.empty()) fl_detail = to_json(seq).dump();
        }
    }
    bool backward = hit.size() == kms_set.size();
    rep.checks.push_back({"factor_sequences_give_kms", forward, fw_detail});
    rep.checks.push_back({"every_kms_realized", backward,
                          backward ? "" : std::to_string(hit.size()) + " of " +
                                              std::to_string(kms_set.size()) + " realized"});
    rep.checks.push_back({"upper_left_rectangle_containment", contain, ct_detail});
    rep.checks.push_back({"degree_floor", floor, fl_detail});

    QuivstabReport qs = verify_quivstab(rc, workers);
    std::string qs_detail;
    if (!qs.all_match) {
        for (const auto& e : qs.entries)
            if (!e.match) {
                qs_detail = "lambda=" + to_json(e.lambda).dump() + " quiver=" +
                            std::to_string(e.quiver_side) + " stable=" +
                            std::to_string(e.stable_side);
                break;
            }
        if (qs_detail.empty())
            qs_detail = "tableaux=" + std::to_string(qs.tableau_total) + " sequences=" +
                        std::to_string(qs.sequence_total);
    }
    rep.checks.push_back({"quivstab_identity", qs.all_match, qs_detail});

    if (rc == example_rank_conditions()) {
        rep.checks.push_back({"example_codim", expected_codim(rc) == 5,
                              "d(r)=" + std::to_string(expected_codim(rc))});
        rep.checks.push_back(
            {"example_zelevinsky", zd.z == example_zelevinsky(), to_json(zd.z).dump()});
        rep.checks.push_back({"example_kms_count", kms.size() == 13,
                              "count=" + std::to_string(kms.size())});
        auto expected_seqs = example_factor_sequences();
        std::set<FactorSequence> want(expected_seqs.begin(), expected_seqs.end());
        std::set<FactorSequence> got(seqs.begin(), seqs.end());
        rep.checks.push_back({"example_factor_sequences", want == got,
                              "count=" + std::to_string(got.size())});
        QuiverExpansion qe = quiver_coefficients(rc, workers);
        rep.checks.push_back(
            {"example_expansion", qe.terms == example_quiver_expansion().terms,
             "terms=" + std::to_string(qe.terms.size())});
    }
    return rep;
}

VerifyReport verify_all(int size, int workers) {
    VerifyReport rep = verify_roundtrip(size);
    for (auto& c : verify_oracles(workers).checks) rep.checks.push_back(std::move(c));
    for (auto& c : verify_quiver(example_rank_conditions(), workers).checks)
        rep.checks.push_back(std::move(c));
    return rep;
}

RankConditions example_rank_conditions() {
    return RankConditions(3, {{1, 1, 1, 0}, {4, 2, 1}, {3, 2}, {3}});
}

Permutation example_zelevinsky() { return Permutation({2, 6, 9, 1, 10, 11, 3, 4, 7, 8, 5}); }

namespace {

DecreasingTableau dt(Grid g) { return DecreasingTableau(std::move(g)); }

}  // namespace

std::vector<FactorSequence> example_factor_sequences() {
    DecreasingTableau none;
    DecreasingTableau one = dt({{1}});
    return {
        {one, dt({{4, 3, 2}}), dt({{3}})},
        {one, dt({{4, 3}}), dt({{3}, {2}})},
        {none, dt({{4, 3, 2}, {1}}), dt({{3}})},
        {none, dt({{4, 3}, {1}}), dt({{3}, {2}})},
        {none, dt({{4, 3, 1}}), dt({{3}, {2}})},
        {none, dt({{4, 3}}), dt({{3}, {2}, {1}})},
        {one, dt({{4, 3, 2}, {1}}), dt({{3}})},
        {one, dt({{4, 3}, {1}}), dt({{3}, {2}})},
        {one, dt({{4, 3, 2}}), dt({{3}, {2}})},
        {one, dt({{4, 3, 1}}), dt({{3}, {2}})},
        {none, dt({{4, 3, 2}, {1}}), dt({{3}, {2}})},
        {none, dt({{4, 3, 1}, {1}}), dt({{3}, {2}})},
        {none, dt({{4, 3, 1}}), dt({{3}, {2}, {1}})},
        {one, dt({{4, 3}}), dt({{3}, {2}, {1}})},
        {none, dt({{4, 3}, {1}}), dt({{3}, {2}, {1}})},
        {one, dt({{4, 3, 2}, {1}}), dt({{3}, {2}})},
        {one, dt({{4, 3, 1}, {1}}), dt({{3}, {2}})},
        {one, dt({{4, 3, 1}}), dt({{3}, {2}, {1}})},
        {none, dt({{4, 3, 1}, {1}}), dt({{3}, {2}, {1}})},
        {one, dt({{4, 3}, {1}}), dt({{3}, {2}, {1}})},
        {one, dt({{4, 3, 1}, {1}}), dt({{3}, {2}, {1}})},
    };
}

QuiverExpansion example_quiver_expansion() {
    QuiverExpansion e;
    e.e = {1, 4, 3, 3};
    auto P = [](std::vector<int> parts) { return Partition(std::move(parts)); };
    Partition empty, p1 = P({1}), p2 = P({2}), p3 = P({3});
    Partition p11 = P({1, 1}), p21 = P({2, 1}), p31 = P({3, 1});
    Partition p111 = P({1, 1, 1});
    auto add = [&](Partition a, Partition b, Partition c, long long v) {
        e.terms[{a, b, c}] = v;
    };
    add(p1, p3, p1, 1);
    add(p1, p2, p11, 1);
    add(empty, p31, p1, 1);
    add(empty, p21, p11, 1);
    add(empty, p3, p11, 1);
    add(empty, p2, p111, 1);
    add(p1, p31, p1, -1);
    add(p1, p21, p11, -1);
    add(p1, p3, p11, -2);
    add(empty, p31, p11, -2);
    add(empty, p3, p111, -1);
    add(p1, p2, p111, -1);
    add(empty, p21, p111, -1);
    add(p1, p31, p11, 2);
    add(p1, p3, p111, 1);
    add(empty, p31, p111, 1);
    add(p1, p21, p111, 1);
    add(p1, p31, p111, -1);
    return e;
}

}  // namespace groth
