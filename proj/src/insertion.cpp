#include "groth/insertion.hpp"

#include <algorithm>

#include "groth/check.hpp"

namespace groth {

namespace {

using Cols = std::vector<std::vector<int>>;

// Legality of writing `v` at (pos, j) of `cols`, examining the tableau in
// place: the columns left of j are already final, those to the right are
// untouched.  `pos` may be one past the end of column j (adjoining).
bool write_legal(const Cols& cols, int j, int pos, int v) {
    const auto& C = cols[j];
    if (pos > 0 && C[pos - 1] >= v) return false;
    if (pos + 1 < static_cast<int>(C.size()) && C[pos + 1] <= v) return false;
    if (j > 0) {
        if (static_cast<int>(cols[j - 1].size()) <= pos) return false;  // no box to the left
        if (cols[j - 1][pos] >= v) return false;
    }
    if (j + 1 < static_cast<int>(cols.size()) && pos < static_cast<int>(cols[j + 1].size()) &&
        cols[j + 1][pos] <= v)
        return false;
    return true;
}

}  // namespace

InsertionResult hecke_insert(int x, const IncreasingTableau& y) {
    if (x <= 0) domain_error("inserted value must be positive");
    Cols cols = columns_of(y.rows());
    int cur = x;
    for (int j = 0;; ++j) {
        if (j == static_cast<int>(cols.size())) cols.push_back({});
        auto& C = cols[j];
        if (C.empty() || cur >= C.back()) {
            // The insertion terminates in this column.
            int t = static_cast<int>(C.size());
            bool can_add = (C.empty() || cur > C.back()) && write_legal(cols, j, t, cur);
            InsertionResult res;
            if (can_add) {
                C.push_back(cur);
                res.corner = {t + 1, j + 1};
                res.alpha = 1;
            } else {
                GROTH_CHECK(!C.empty());
                int brow = static_cast<int>(C.size()) - 1;
                int cc = j;
                while (cc + 1 < static_cast<int>(cols.size()) &&
                       static_cast<int>(cols[cc + 1].size()) > brow)
                    ++cc;
                res.corner = {brow + 1, cc + 1};
                res.alpha = 0;
            }
            while (!cols.empty() && cols.back().empty()) cols.pop_back();
            res.tableau = tableau_from_columns(cols);
            GROTH_CHECK(res.tableau.is_corner(res.corner.row, res.corner.col));
            return res;
        }
        // Bump the smallest entry strictly larger than cur, replacing it when legal.
        auto it = std::upper_bound(C.begin(), C.end(), cur);
        int pos = static_cast<int>(it - C.begin());
        int out = *it;
        if (write_legal(cols, j, pos, cur)) C[pos] = cur;
        cur = out;
    }
}

std::pair<IncreasingTableau, int> reverse_hecke_insert(const InsertionResult& r) {
    const IncreasingTableau& z = r.tableau;
    if (!z.is_corner(r.corner.row, r.corner.col)) domain_error("not a corner cell");
    if (r.alpha != 0 && r.alpha != 1) domain_error("alpha must be 0 or 1");
    Cols cols = columns_of(z.rows());
    int col = r.corner.col - 1;
    int v = cols[col][r.corner.row - 1];
    if (r.alpha == 1) {
        GROTH_CHECK(r.corner.row == static_cast<int>(cols[col].size()));
        cols[col].pop_back();
        while (!cols.empty() && cols.back().empty()) cols.pop_back();
    }
    for (int j = col - 1; j >= 0; --j) {
        auto& C = cols[j];
        auto it = std::lower_bound(C.begin(), C.end(), v);
        GROTH_CHECK(it != C.begin());  // some entry below v must exist
        int pos = static_cast<int>(it - C.begin()) - 1;
        int out = C[pos];
        C[pos] = v;
        if (!write_legal(cols, j, pos, v)) C[pos] = out;
        v = out;
    }
    return {tableau_from_columns(cols), v};
}

bool is_compatible_pair(const Word& a, const Word& i) {
    if (a.size() != i.size()) return false;
    for (size_t j = 0; j < a.size(); ++j) {
        if (a[j] < 1 || i[j] < 1) return false;
        if (j + 1 < a.size()) {
            if (i[j] > i[j + 1]) return false;
            if (i[j] == i[j + 1] && a[j] <= a[j + 1]) return false;
        }
    }
    return true;
}

RecordingPair insert_compatible_pair(const CompatiblePair& p, std::vector<InsertionStep>* trace) {
    if (!is_compatible_pair(p.a, p.i)) domain_error("not a compatible pair");
    IncreasingTableau t;
    SetValuedTableau::Cells cells;
    for (size_t j = 0; j < p.a.size(); ++j) {
        InsertionResult r = hecke_insert(p.a[j], t);
        t = r.tableau;
        int row = r.corner.row, colc = r.corner.col;
        if (r.alpha == 1) {
            if (row > static_cast<int>(cells.size())) {
                GROTH_CHECK(colc == 1 && row == static_cast<int>(cells.size()) + 1);
                cells.push_back({});
            }
            GROTH_CHECK(colc == static_cast<int>(cells[row - 1].size()) + 1);
            cells[row - 1].push_back({p.i[j]});
        } else {
            auto& box = cells[row - 1][colc - 1];
            GROTH_CHECK(box.back() < p.i[j]);
            box.push_back(p.i[j]);
        }
        if (trace) {
            SetValuedTableau u(Shape(Partition(t.shape()), Partition()), cells);
            trace->push_back({p.a[j], p.i[j], r.alpha, r.corner, t, u});
        }
    }
    Shape sh(t.shape(), Partition());
    return {t, SetValuedTableau(sh, cells)};
}

CompatiblePair recover_compatible_pair(const RecordingPair& rp) {
    if (rp.t.shape() != rp.u.shape().outer || !rp.u.shape().is_straight())
        domain_error("recording pair shapes differ");
    IncreasingTableau t = rp.t;
    SetValuedTableau::Cells cells = rp.u.cells();
    Word a, i;
    while (!cells.empty()) {
        int maxval = 0;
        for (const auto& row : cells)
            for (const auto& box : row) maxval = std::max(maxval, box.back());
        // Rightmost corner whose box contains the maximum.
        int br = -1, bc = -1;
        for (int r = 0; r < static_cast<int>(cells.size()); ++r) {
            int len = static_cast<int>(cells[r].size());
            bool corner = (r + 1 == static_cast<int>(cells.size())) ||
                          (static_cast<int>(cells[r + 1].size()) < len);
            if (!corner) continue;
            const auto& box = cells[r][len - 1];
            if (std::find(box.begin(), box.end(), maxval) != box.end() && len - 1 > bc) {
                br = r;
                bc = len - 1;
            }
        }
        GROTH_CHECK(br >= 0);
        int alpha;
        if (cells[br][bc].size() == 1) {
            alpha = 1;
            cells[br].pop_back();
            if (cells[br].empty()) cells.pop_back();
        } else {
            alpha = 0;
            cells[br][bc].pop_back();
        }
        auto [prev, letter] = reverse_hecke_insert({t, {br + 1, bc + 1}, alpha});
        t = prev;
        a.push_back(letter);
        i.push_back(maxval);
    }
    GROTH_CHECK(t.empty());
    std::reverse(a.begin(), a.end());
    std::reverse(i.begin(), i.end());
    return {a, i};
}

IncreasingTableau product_increasing(const IncreasingTableau& t1, const IncreasingTableau& t2) {
    Word w = column_word(t1);
    IncreasingTableau acc = t2;
    for (auto it = w.rbegin(); it != w.rend(); ++it) acc = hecke_insert(*it, acc).tableau;
    return acc;
}

DecreasingTableau product_decreasing(const DecreasingTableau& t1, const DecreasingTableau& t2) {
    int m = std::max(t1.max_entry(), t2.max_entry()) + 1;
    IncreasingTableau res = product_increasing(flip_to_increasing(t1, m), flip_to_increasing(t2, m));
    return flip_to_decreasing(res, m);
}

}  // namespace groth
