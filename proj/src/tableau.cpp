#include "groth/tableau.hpp"

#include <algorithm>
#include <functional>
#include <map>

#include "groth/check.hpp"

namespace groth {

namespace {

bool shape_of_grid(const Grid& rows, std::vector<int>* lens) {
    lens->clear();
    for (const auto& r : rows) {
        if (r.empty()) return false;
        lens->push_back(static_cast<int>(r.size()));
    }
    for (size_t i = 0; i + 1 < lens->size(); ++i)
        if ((*lens)[i] < (*lens)[i + 1]) return false;
    return true;
}

bool grid_monotone(const Grid& rows, bool increasing) {
    std::vector<int> lens;
    if (!shape_of_grid(rows, &lens)) return false;
    for (size_t r = 0; r < rows.size(); ++r) {
        for (size_t c = 0; c < rows[r].size(); ++c) {
            if (rows[r][c] < 1) return false;
            if (c + 1 < rows[r].size()) {
                bool ok = increasing ? rows[r][c] < rows[r][c + 1] : rows[r][c] > rows[r][c + 1];
                if (!ok) return false;
            }
            if (r + 1 < rows.size() && c < rows[r + 1].size()) {
                bool ok = increasing ? rows[r][c] < rows[r + 1][c] : rows[r][c] > rows[r + 1][c];
                if (!ok) return false;
            }
        }
    }
    return true;
}

int grid_max_entry(const Grid& rows) {
    int m = 0;
    for (const auto& r : rows)
        for (int x : r) m = std::max(m, x);
    return m;
}

}  // namespace

Shape::Shape(Partition o, Partition i) : outer(std::move(o)), inner(std::move(i)) {
    if (!outer.contains(inner)) domain_error("inner shape not contained in outer");
}

IncreasingTableau::IncreasingTableau(Grid rows) : rows_(std::move(rows)) {
    if (!valid(rows_)) domain_error("not an increasing tableau");
}

bool IncreasingTableau::valid(const Grid& rows) { return grid_monotone(rows, true); }

int IncreasingTableau::row_length(int r) const {
    GROTH_CHECK(r >= 1);
    return r <= num_rows() ? static_cast<int>(rows_[r - 1].size()) : 0;
}

int IncreasingTableau::at(int r, int c) const {
    GROTH_CHECK(r >= 1 && c >= 1 && r <= num_rows() && c <= row_length(r));
    return rows_[r - 1][c - 1];
}

Partition IncreasingTableau::shape() const {
    std::vector<int> lens;
    for (const auto& r : rows_) lens.push_back(static_cast<int>(r.size()));
    return Partition(std::move(lens));
}

int IncreasingTableau::boxes() const {
    int b = 0;
    for (const auto& r : rows_) b += static_cast<int>(r.size());
    return b;
}

bool IncreasingTableau::is_corner(int r, int c) const {
    if (r < 1 || c < 1 || r > num_rows() || c != row_length(r)) return false;
    return r == num_rows() || row_length(r + 1) < c;
}

int IncreasingTableau::max_entry() const { return grid_max_entry(rows_); }

DecreasingTableau::DecreasingTableau(Grid rows) : rows_(std::move(rows)) {
    if (!valid(rows_)) domain_error("not a decreasing tableau");
}

bool DecreasingTableau::valid(const Grid& rows) { return grid_monotone(rows, false); }

Partition DecreasingTableau::shape() const {
    std::vector<int> lens;
    for (const auto& r : rows_) lens.push_back(static_cast<int>(r.size()));
    return Partition(std::move(lens));
}

int DecreasingTableau::boxes() const {
    int b = 0;
    for (const auto& r : rows_) b += static_cast<int>(r.size());
    return b;
}

int DecreasingTableau::max_entry() const { return grid_max_entry(rows_); }

IncreasingTableau flip_to_increasing(const DecreasingTableau& t, int m) {
    GROTH_CHECK(t.max_entry() < m);
    Grid g = t.rows();
    for (auto& r : g)
        for (int& x : r) x = m - x;
    return IncreasingTableau(std::move(g));
}

DecreasingTableau flip_to_decreasing(const IncreasingTableau& t, int m) {
    GROTH_CHECK(t.max_entry() < m);
    Grid g = t.rows();
    for (auto& r : g)
        for (int& x : r) x = m - x;
    return DecreasingTableau(std::move(g));
}

SetValuedTableau::SetValuedTableau(Shape shape, Cells cells)
    : shape_(std::move(shape)), cells_(std::move(cells)) {
    if (!valid(shape_, cells_)) domain_error("not a set-valued tableau");
}

bool SetValuedTableau::valid(const Shape& shape, const Cells& cells) {
    int nrows = shape.outer.num_parts();
    if (static_cast<int>(cells.size()) != nrows) return false;
    for (int r = 1; r <= nrows; ++r) {
        int lo = shape.inner.part(r), hi = shape.outer.part(r);
        if (static_cast<int>(cells[r - 1].size()) != hi - lo) return false;
        for (const auto& box : cells[r - 1]) {
            if (box.empty()) return false;
            for (size_t i = 0; i < box.size(); ++i) {
                if (box[i] < 1) return false;
                if (i + 1 < box.size() && box[i] >= box[i + 1]) return false;  // sorted, no dups
            }
        }
    }
    auto box_at = [&](int r, int c) -> const std::vector<int>* {
        if (r < 1 || r > nrows) return nullptr;
        int lo = shape.inner.part(r), hi = shape.outer.part(r);
        if (c <= lo || c > hi) return nullptr;
        return &cells[r - 1][c - lo - 1];
    };
    for (int r = 1; r <= nrows; ++r) {
        for (int c = shape.inner.part(r) + 1; c <= shape.outer.part(r); ++c) {
            const auto* cur = box_at(r, c);
            const auto* right = box_at(r, c + 1);
            const auto* below = box_at(r + 1, c);
            if (right && cur->back() > right->front()) return false;
            if (below && cur->back() >= below->front()) return false;
        }
    }
    return true;
}

const std::vector<int>& SetValuedTableau::box(int r, int c) const {
    int lo = shape_.inner.part(r);
    GROTH_CHECK(r >= 1 && r <= static_cast<int>(cells_.size()));
    GROTH_CHECK(c > lo && c <= shape_.outer.part(r));
    return cells_[r - 1][c - lo - 1];
}

int SetValuedTableau::total_entries() const {
    int n = 0;
    for (const auto& row : cells_)
        for (const auto& box : row) n += static_cast<int>(box.size());
    return n;
}

std::vector<std::vector<int>> columns_of(const Grid& rows) {
    std::vector<std::vector<int>> cols;
    if (rows.empty()) return cols;
    cols.resize(rows[0].size());
    for (const auto& r : rows)
        for (size_t c = 0; c < r.size(); ++c) cols[c].push_back(r[c]);
    return cols;
}

Grid rows_from_columns(const std::vector<std::vector<int>>& cols) {
    Grid rows;
    if (cols.empty()) return rows;
    rows.resize(cols[0].size());
    for (const auto& col : cols)
        for (size_t r = 0; r < col.size(); ++r) rows[r].push_back(col[r]);
    return rows;
}

IncreasingTableau tableau_from_columns(const std::vector<std::vector<int>>& cols) {
    return IncreasingTableau(rows_from_columns(cols));
}

namespace {

Word column_word_of_grid(const Grid& rows) {
    Word w;
    for (const auto& col : columns_of(rows))
        for (auto it = col.rbegin(); it != col.rend(); ++it) w.push_back(*it);
    return w;
}

}  // namespace

Word column_word(const IncreasingTableau& t) { return column_word_of_grid(t.rows()); }

Word column_word(const DecreasingTableau& t) { return column_word_of_grid(t.rows()); }

Word column_word(const SetValuedTableau& t) {
    // Boxes bottom to top within each column, left to right across columns;
    // the entries of a box are read in increasing order.
    Word w;
    const Shape& sh = t.shape();
    int nrows = sh.outer.num_parts();
    for (int c = 1; c <= sh.outer.part(1); ++c) {
        for (int r = nrows; r >= 1; --r) {
            if (c <= sh.inner.part(r) || c > sh.outer.part(r)) continue;
            for (int x : t.box(r, c)) w.push_back(x);
        }
    }
    return w;
}

Permutation tableau_permutation(const IncreasingTableau& t) { return reduce_word(column_word(t)); }

Permutation decreasing_permutation(const DecreasingTableau& t) {
    return reduce_word(column_word(t));
}

bool is_reverse_lattice(const Word& a) {
    // Every occurrence of i > 1 must be followed by strictly more (i-1)s than is,
    // counting only positions after the occurrence.
    for (size_t j = 0; j < a.size(); ++j) {
        int i = a[j];
        if (i <= 1) continue;
        int lower = 0, same = 0;
        for (size_t k = j + 1; k < a.size(); ++k) {
            if (a[k] == i - 1) ++lower;
            if (a[k] == i) ++same;
        }
        if (lower <= same) return false;
    }
    return true;
}

std::vector<int> content(const Word& a) {
    std::vector<int> nu;
    for (int x : a) {
        GROTH_CHECK(x >= 1);
        if (x > static_cast<int>(nu.size())) nu.resize(x, 0);
        ++nu[x - 1];
    }
    return nu;
}

ColumnDiagram setvalued_to_diagram(const SetValuedTableau& s, int n, int k) {
    const Shape& sh = s.shape();
    int nrows = sh.outer.num_parts();
    int maxval = 0;
    for (int r = 1; r <= nrows; ++r)
        for (int c = sh.inner.part(r) + 1; c <= sh.outer.part(r); ++c) {
            if (n - k + r - c <= 0) domain_error("diagonal numbers must be positive");
            maxval = std::max(maxval, s.box(r, c).back());
        }
    ColumnDiagram d(maxval);
    for (int r = 1; r <= nrows; ++r)
        for (int c = sh.inner.part(r) + 1; c <= sh.outer.part(r); ++c)
            for (int p : s.box(r, c)) d[p - 1].push_back(n - k + r - c);
    for (auto& col : d) {
        std::sort(col.begin(), col.end());
        for (size_t i = 0; i + 1 < col.size(); ++i) GROTH_CHECK(col[i] != col[i + 1]);
    }
    return d;
}

bool diagram_is_increasing(const ColumnDiagram& d) {
    // The nonempty columns must already be contiguous on the left (a diagram
    // with an interior empty column is not a tableau), weakly decreasing in
    // length, and strictly increasing along rows.
    size_t last = d.size();
    while (last > 0 && d[last - 1].empty()) --last;
    std::vector<std::vector<int>> cols(d.begin(), d.begin() + last);
    for (const auto& col : cols)
        if (col.empty()) return false;
    for (size_t c = 0; c + 1 < cols.size(); ++c)
        if (cols[c].size() < cols[c + 1].size()) return false;
    for (const auto& col : cols)
        for (size_t r = 0; r + 1 < col.size(); ++r)
            if (col[r] >= col[r + 1]) return false;
    for (size_t c = 0; c + 1 < cols.size(); ++c)
        for (size_t r = 0; r < cols[c + 1].size(); ++r)
            if (cols[c][r] >= cols[c + 1][r]) return false;
    return true;
}

IncreasingTableau diagram_to_tableau(const ColumnDiagram& d) {
    GROTH_CHECK(diagram_is_increasing(d));
    size_t last = d.size();
    while (last > 0 && d[last - 1].empty()) --last;
    return tableau_from_columns({d.begin(), d.begin() + last});
}

SetValuedTableau diagram_to_setvalued(const ColumnDiagram& d, const Shape& shape, int n, int k) {
    // Values whose diagram column contains diagonal number delta must sit in a
    // box on that diagonal.  Along a diagonal the box contents strictly
    // increase to the southeast, so each diagonal's values split into
    // consecutive nonempty groups; search over the splits.
    int nrows = shape.outer.num_parts();
    std::map<int, std::vector<std::pair<int, int>>> diag_boxes;  // delta -> boxes NW..SE
    for (int r = 1; r <= nrows; ++r)
        for (int c = shape.inner.part(r) + 1; c <= shape.outer.part(r); ++c) {
            int delta = n - k + r - c;
            if (delta <= 0) domain_error("diagonal numbers must be positive");
            diag_boxes[delta].push_back({r, c});
        }
    std::map<int, std::vector<int>> diag_values;  // delta -> sorted values
    for (size_t p = 0; p < d.size(); ++p)
        for (int delta : d[p]) {
            if (!diag_boxes.count(delta)) domain_error("diagram uses a diagonal outside the shape");
            diag_values[delta].push_back(static_cast<int>(p) + 1);
        }
    for (auto& [delta, vals] : diag_values) std::sort(vals.begin(), vals.end());

    std::vector<int> deltas;
    for (auto& [delta, boxes] : diag_boxes) deltas.push_back(delta);

    SetValuedTableau::Cells cells(nrows);
    for (int r = 1; r <= nrows; ++r)
        cells[r - 1].resize(shape.outer.part(r) - shape.inner.part(r));
    auto cell_ref = [&](int r, int c) -> std::vector<int>& {
        return cells[r - 1][c - shape.inner.part(r) - 1];
    };

    SetValuedTableau result;
    bool found = false;
    std::function<void(size_t)> rec = [&](size_t di) {
        if (found) return;
        if (di == deltas.size()) {
            if (SetValuedTableau::valid(shape, cells)) {
                result = SetValuedTableau(shape, cells);
                found = true;
            }
            return;
        }
        int delta = deltas[di];
        const auto& boxes = diag_boxes[delta];
        const auto& vals = diag_values[delta];
        int nb = static_cast<int>(boxes.size());
        int nv = static_cast<int>(vals.size());
        if (nv < nb) return;  // every box needs at least one value
        // Choose split points 0 < s_1 < ... < s_{nb-1} < nv.
        std::vector<int> cut(nb + 1);
        cut[0] = 0;
        cut[nb] = nv;
        std::function<void(int, int)> choose = [&](int b, int lo) {
            if (found) return;
            if (b == nb) {
                for (int i = 0; i < nb; ++i) {
                    auto& cell = cell_ref(boxes[i].first, boxes[i].second);
                    cell.assign(vals.begin() + cut[i], vals.begin() + cut[i + 1]);
                }
                rec(di + 1);
                return;
            }
            for (int s = lo + 1; s <= nv - (nb - b); ++s) {
                cut[b] = s;
                choose(b + 1, s);
            }
        };
        choose(1, 0);
    };
    for (auto& [delta, boxes] : diag_boxes)
        if (!diag_values.count(delta)) domain_error("a box of the shape receives no value");
    rec(0);
    if (!found) domain_error("no set-valued filling matches the diagram");
    return result;
}

}  // namespace groth
