#include "groth/json_io.hpp"

#include <algorithm>

#include "groth/check.hpp"

namespace groth {

namespace {

json coeff_to_json(const Coeff& c) {
    // Numbers outside the 64-bit range are emitted as strings.
    if (c >= std::numeric_limits<long long>::min() && c <= std::numeric_limits<long long>::max())
        return static_cast<long long>(c);
    return c.str();
}

std::vector<int> int_vector(const json& j) {
    if (!j.is_array()) domain_error("expected a JSON array of integers");
    std::vector<int> v;
    for (const auto& x : j) {
        if (!x.is_number_integer()) domain_error("expected a JSON array of integers");
        v.push_back(x.get<int>());
    }
    return v;
}

}  // namespace

json to_json(const Permutation& p) { return json(p.oneline()); }

json to_json(const Partition& p) { return json(p.parts()); }

json to_json(const IncreasingTableau& t) { return json(t.rows()); }

json to_json(const DecreasingTableau& t) { return json(t.rows()); }

json to_json(const SetValuedTableau& t) {
    json j;
    j["outer"] = t.shape().outer.parts();
    j["inner"] = t.shape().inner.parts();
    j["cells"] = t.cells();
    return j;
}

json to_json(const ColumnDiagram& d) { return json(d); }

json to_json(const Expansion& e) {
    json arr = json::array();
    for (const auto& [shape, c] : e.terms()) {
        json term;
        term["shape"] = shape.parts();
        term["coeff"] = c;
        arr.push_back(std::move(term));
    }
    return arr;
}

json to_json(const SparsePolynomial& p) {
    json arr = json::array();
    for (const auto& [e, c] : p.terms()) {
        json term;
        term["exps"] = e;
        term["coeff"] = coeff_to_json(c);
        arr.push_back(std::move(term));
    }
    return arr;
}

namespace {

// Degree first, then lexicographic on the shape sequences.
bool key_before(const std::vector<Partition>& a, const std::vector<Partition>& b) {
    int da = 0, db = 0;
    for (const auto& p : a) da += p.size();
    for (const auto& p : b) db += p.size();
    if (da != db) return da < db;
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end(),
                                        [](const Partition& x, const Partition& y) {
                                            return PartitionOrder{}(x, y);
                                        });
}

template <typename Terms>
json shape_sequence_terms(const Terms& terms) {
    std::vector<std::pair<std::vector<Partition>, long long>> sorted(terms.begin(), terms.end());
    std::sort(sorted.begin(), sorted.end(),
              [](const auto& a, const auto& b) { return key_before(a.first, b.first); });
    json arr = json::array();
    for (const auto& [key, c] : sorted) {
        json term;
        term["shapes"] = json::array();
        for (const auto& p : key) term["shapes"].push_back(p.parts());
        term["coeff"] = c;
        arr.push_back(std::move(term));
    }
    return arr;
}

}  // namespace

json to_json(const QuiverExpansion& e) { return shape_sequence_terms(e.terms); }

json to_json(const UniversalExpansion& e) { return shape_sequence_terms(e.terms); }

json to_json(const InsertionResult& r) {
    json j;
    j["tableau"] = r.tableau.rows();
    j["corner"] = {r.corner.row, r.corner.col};
    j["alpha"] = r.alpha;
    return j;
}

json to_json(const std::vector<InsertionStep>& steps) {
    json arr = json::array();
    for (const auto& s : steps) {
        json j;
        j["letter"] = s.letter;
        if (s.index > 0) j["index"] = s.index;
        j["alpha"] = s.alpha;
        j["corner"] = {s.corner.row, s.corner.col};
        j["T"] = s.t.rows();
        if (s.index > 0) j["U"] = s.u.cells();
        arr.push_back(std::move(j));
    }
    return arr;
}

json to_json(const KmsFactorization& f) {
    json arr = json::array();
    for (const auto& p : f) arr.push_back(p.oneline());
    return arr;
}

json to_json(const FactorSequence& f) {
    json arr = json::array();
    for (const auto& t : f) arr.push_back(t.rows());
    return arr;
}

json to_json(const QuivstabReport& r) {
    json j;
    j["entries"] = json::array();
    for (const auto& e : r.entries) {
        json entry;
        entry["mu"] = json::array();
        for (const auto& p : e.mu) entry["mu"].push_back(p.parts());
        entry["lambda"] = e.lambda.parts();
        entry["quiver"] = e.quiver_side;
        entry["stable"] = e.stable_side;
        entry["match"] = e.match;
        j["entries"].push_back(std::move(entry));
    }
    j["tableau_total"] = r.tableau_total;
    j["sequence_total"] = r.sequence_total;
    j["counts_match"] = r.counts_match;
    j["all_match"] = r.all_match;
    return j;
}

Permutation permutation_from_json(const json& j) { return Permutation(int_vector(j)); }

Partition partition_from_json(const json& j) { return Partition(int_vector(j)); }

IncreasingTableau increasing_from_json(const json& j) {
    if (!j.is_array()) domain_error("expected rows of integers");
    Grid g;
    for (const auto& row : j) g.push_back(int_vector(row));
    return IncreasingTableau(std::move(g));
}

DecreasingTableau decreasing_from_json(const json& j) {
    if (!j.is_array()) domain_error("expected rows of integers");
    Grid g;
    for (const auto& row : j) g.push_back(int_vector(row));
    return DecreasingTableau(std::move(g));
}

SetValuedTableau setvalued_from_json(const json& j) {
    if (!j.is_object()) domain_error("expected an object with outer/inner/cells");
    Partition outer = partition_from_json(j.at("outer"));
    Partition inner = j.contains("inner") ? partition_from_json(j.at("inner")) : Partition();
    SetValuedTableau::Cells cells;
    for (const auto& row : j.at("cells")) {
        cells.push_back({});
        for (const auto& box : row) cells.back().push_back(int_vector(box));
    }
    return SetValuedTableau(Shape(outer, inner), cells);
}

RankConditions ranks_from_json(const json& j) {
    if (!j.is_object() || !j.contains("n") || !j.contains("rows"))
        domain_error("expected {\"n\":..., \"rows\":[[...],...]}");
    int n = j.at("n").get<int>();
    std::vector<std::vector<int>> rows;
    for (const auto& row : j.at("rows")) rows.push_back(int_vector(row));
    return RankConditions(n, std::move(rows));
}

}  // namespace groth
