#include "groth/render.hpp"

#include <algorithm>
#include <sstream>

namespace groth {

namespace {

std::string render_grid(const Grid& rows) {
    if (rows.empty()) return "(empty)\n";
    size_t width = 1;
    for (const auto& r : rows)
        for (int x : r) width = std::max(width, std::to_string(x).size());
    std::ostringstream out;
    for (const auto& r : rows) {
        for (size_t c = 0; c < r.size(); ++c) {
            std::string s = std::to_string(r[c]);
            out << (c ? " " : "") << std::string(width - s.size(), ' ') << s;
        }
        out << "\n";
    }
    return out.str();
}

std::string set_string(const std::vector<int>& box) {
    std::string s = "{";
    for (size_t i = 0; i < box.size(); ++i) s += (i ? "," : "") + std::to_string(box[i]);
    return s + "}";
}

}  // namespace

std::string render(const IncreasingTableau& t) { return render_grid(t.rows()); }

std::string render(const DecreasingTableau& t) { return render_grid(t.rows()); }

std::string render(const SetValuedTableau& t) {
    if (t.shape().boxes() == 0) return "(empty)\n";
    const Shape& sh = t.shape();
    size_t width = 1;
    for (int r = 1; r <= sh.outer.num_parts(); ++r)
        for (int c = sh.inner.part(r) + 1; c <= sh.outer.part(r); ++c)
            width = std::max(width, set_string(t.box(r, c)).size());
    std::ostringstream out;
    for (int r = 1; r <= sh.outer.num_parts(); ++r) {
        for (int c = 1; c <= sh.outer.part(r); ++c) {
            std::string s = c <= sh.inner.part(r) ? std::string() : set_string(t.box(r, c));
            out << (c > 1 ? " " : "") << s << std::string(width - s.size(), ' ');
        }
        out << "\n";
    }
    return out.str();
}

std::string render_shape_text(const Partition& p) {
    std::string s = "(";
    for (int i = 0; i < p.num_parts(); ++i) s += (i ? "," : "") + std::to_string(p.parts()[i]);
    return s + ")";
}

std::string render(const Expansion& e) {
    std::ostringstream out;
    for (const auto& [shape, c] : e.terms())
        out << (c >= 0 ? "+" : "") << c << " G" << render_shape_text(shape) << "\n";
    return out.str();
}

std::string render(const SparsePolynomial& p) {
    if (p.is_zero()) return "0\n";
    std::ostringstream out;
    bool first = true;
    for (const auto& [e, c] : p.terms()) {
        out << (first ? "" : " ") << (c >= 0 ? "+" : "") << c.str();
        for (size_t v = 0; v < e.size(); ++v) {
            if (e[v] == 0) continue;
            out << " x" << v + 1;
            if (e[v] > 1) out << "^" << e[v];
        }
        first = false;
    }
    out << "\n";
    return out.str();
}

std::string render(const QuiverExpansion& e) {
    std::ostringstream out;
    std::vector<std::pair<std::vector<Partition>, long long>> sorted(e.terms.begin(),
                                                                     e.terms.end());
    std::sort(sorted.begin(), sorted.end(), [](const auto& a, const auto& b) {
        int da = 0, db = 0;
        for (const auto& p : a.first) da += p.size();
        for (const auto& p : b.first) db += p.size();
        if (da != db) return da < db;
        return std::lexicographical_compare(
            a.first.begin(), a.first.end(), b.first.begin(), b.first.end(),
            [](const Partition& x, const Partition& y) { return PartitionOrder{}(x, y); });
    });
    for (const auto& [key, c] : sorted) {
        out << (c >= 0 ? "+" : "") << c << " ";
        for (size_t i = 0; i < key.size(); ++i)
            out << (i ? " (x) " : "") << "G" << render_shape_text(key[i]);
        out << "\n";
    }
    return out.str();
}

}  // namespace groth
