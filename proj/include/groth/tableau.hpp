#pragma once

#include <vector>

#include "groth/partition.hpp"
#include "groth/permutation.hpp"

namespace groth {

using Grid = std::vector<std::vector<int>>;  // rows of entries

// Skew or straight shape; inner is empty for straight shapes.
struct Shape {
    Partition outer;
    Partition inner;

    Shape() = default;
    Shape(Partition o, Partition i);
    bool is_straight() const { return inner.empty(); }
    int boxes() const { return outer.size() - inner.size(); }
    friend bool operator==(const Shape&, const Shape&) = default;
};

// Young tableau with strictly increasing rows and columns on a straight shape.
class IncreasingTableau {
public:
    IncreasingTableau() = default;
    explicit IncreasingTableau(Grid rows);

    static bool valid(const Grid& rows);

    const Grid& rows() const { return rows_; }
    bool empty() const { return rows_.empty(); }
    int num_rows() const { return static_cast<int>(rows_.size()); }
    int row_length(int r) const;  // 1-based, 0 beyond
    int at(int r, int c) const;   // 1-based
    Partition shape() const;
    int boxes() const;
    bool is_corner(int r, int c) const;
    int max_entry() const;

    friend bool operator==(const IncreasingTableau&, const IncreasingTableau&) = default;
    friend std::strong_ordering operator<=>(const IncreasingTableau& a,
                                            const IncreasingTableau& b) {
        return a.rows_ <=> b.rows_;
    }

private:
    Grid rows_;
};

// Strictly decreasing rows and columns.
class DecreasingTableau {
public:
    DecreasingTableau() = default;
    explicit DecreasingTableau(Grid rows);

    static bool valid(const Grid& rows);

    const Grid& rows() const { return rows_; }
    bool empty() const { return rows_.empty(); }
    int num_rows() const { return static_cast<int>(rows_.size()); }
    Partition shape() const;
    int boxes() const;
    int max_entry() const;

    friend bool operator==(const DecreasingTableau&, const DecreasingTableau&) = default;
    friend std::strong_ordering operator<=>(const DecreasingTableau& a,
                                            const DecreasingTableau& b) {
        return a.rows_ <=> b.rows_;
    }

private:
    Grid rows_;
};

// Entrywise x -> m - x; maps decreasing tableaux with entries < m to
// increasing ones and back.
IncreasingTableau flip_to_increasing(const DecreasingTableau& t, int m);
DecreasingTableau flip_to_decreasing(const IncreasingTableau& t, int m);

// Skew (or straight) shape whose boxes hold nonempty finite integer sets,
// weakly increasing along rows and strictly increasing down columns.
class SetValuedTableau {
public:
    using Cells = std::vector<std::vector<std::vector<int>>>;  // per row, per box, sorted set

    SetValuedTableau() = default;
    SetValuedTableau(Shape shape, Cells cells);

    static bool valid(const Shape& shape, const Cells& cells);

    const Shape& shape() const { return shape_; }
    const Cells& cells() const { return cells_; }
    bool empty() const { return shape_.boxes() == 0; }
    // Box (r, c) in 1-based shape coordinates; c must lie in the skew row.
    const std::vector<int>& box(int r, int c) const;
    int total_entries() const;  // |S|

    friend bool operator==(const SetValuedTableau&, const SetValuedTableau&) = default;

private:
    Shape shape_;
    Cells cells_;
};

// Columns of boxes with strictly increasing entries; empty columns allowed anywhere.
using ColumnDiagram = std::vector<std::vector<int>>;

Word column_word(const IncreasingTableau& t);
Word column_word(const DecreasingTableau& t);
Word column_word(const SetValuedTableau& t);

Permutation tableau_permutation(const IncreasingTableau& t);
Permutation decreasing_permutation(const DecreasingTableau& t);

bool is_reverse_lattice(const Word& a);
std::vector<int> content(const Word& a);

ColumnDiagram setvalued_to_diagram(const SetValuedTableau& s, int n, int k);
bool diagram_is_increasing(const ColumnDiagram& d);
IncreasingTableau diagram_to_tableau(const ColumnDiagram& d);  // requires diagram_is_increasing

// Inverse of setvalued_to_diagram on a known shape; throws if no filling fits.
SetValuedTableau diagram_to_setvalued(const ColumnDiagram& d, const Shape& shape, int n, int k);

IncreasingTableau tableau_from_columns(const std::vector<std::vector<int>>& cols);
std::vector<std::vector<int>> columns_of(const Grid& rows);
Grid rows_from_columns(const std::vector<std::vector<int>>& cols);

}  // namespace groth
