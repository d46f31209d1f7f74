#include "groth/expansion.hpp"

#include <algorithm>
#include <functional>

#include "groth/check.hpp"
#include "groth/parallel.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace groth {

long long Expansion::coeff(const Partition& p) const {
    auto it = terms_.find(p);
    return it == terms_.end() ? 0 : it->second;
}

void Expansion::add(const Partition& p, long long c) {
    if (c == 0) return;
    auto it = terms_.find(p);
    if (it == terms_.end()) {
        terms_.emplace(p, c);
    } else {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

namespace {

struct ColumnSplit {
    std::vector<int> column;  // entries top to bottom
    Permutation rest;
};

int first_non_fixed(const Permutation& p) {
    for (int i = 1; i <= p.size(); ++i)
        if (p(i) > i) return i;
    return 0;
}

bool column_attaches(const std::vector<int>* left, const std::vector<int>& col) {
    if (!left) return true;
    if (col.size() > left->size()) return false;
    for (size_t r = 0; r < col.size(); ++r)
        if ((*left)[r] >= col[r]) return false;
    return true;
}

// Pairs (C, sigma) with p = w(C) . sigma in the 0-Hecke monoid.  The column
// word of C peels off p from the left, largest letter first; each peeled
// letter must be a left descent of the remainder and either stays (the letter
// was repeated) or is consumed.  Only pairs where sigma fixes the first
// non-fixed point of p are kept.
std::vector<ColumnSplit> column_splits(const Permutation& p, int max_height,
                                       const std::vector<int>* left_col) {
    std::vector<ColumnSplit> out;
    int istar = first_non_fixed(p);
    if (istar == 0 || max_height == 0) return out;
    std::vector<int> picked;
    std::function<void(const Permutation&, int)> rec = [&](const Permutation& x, int last) {
        if (!picked.empty() && x(istar) == istar) {
            std::vector<int> col(picked.rbegin(), picked.rend());
            if (column_attaches(left_col, col)) out.push_back({std::move(col), x});
        }
        if (static_cast<int>(picked.size()) == max_height) return;
        int hi = std::min(last - 1, x.size() - 1);
        for (int c = hi; c >= 1; --c) {
            if (!is_left_descent(x, c)) continue;
            picked.push_back(c);
            rec(x, c);
            rec(left_transposition_mult(c, x), c);
            picked.pop_back();
        }
    };
    rec(p, p.size() + 1);
    return out;
}

bool max_tableau_attaches(const Permutation& sigma, const std::vector<int>& col) {
    if (sigma.is_identity()) return true;
    IncreasingTableau m = max_tableau(sigma);
    if (m.num_rows() > static_cast<int>(col.size())) return false;
    for (int r = 0; r < m.num_rows(); ++r)
        if (col[r] >= m.rows()[r][0]) return false;
    return true;
}

struct EnumCtx {
    bool prune = true;
    int max_cols = -1;
    const std::vector<std::vector<int>>* profiles = nullptr;
};

// profiles_left: indices of ctx.profiles whose height prefix matches the
// accumulated columns (meaningful only when profiles are given).
void enumerate_rec(const Permutation& sigma, const std::vector<int>* left, int depth, int budget,
                   const EnumCtx& ctx, const std::vector<int>& profiles_left,
                   std::vector<std::vector<int>>& colstack, std::vector<IncreasingTableau>& out) {
    if (sigma.is_identity()) {
        if (ctx.profiles) {
            bool exact = false;
            for (int id : profiles_left)
                if (static_cast<int>((*ctx.profiles)[id].size()) == depth) exact = true;
            if (!exact) return;
        }
        out.push_back(tableau_from_columns(colstack));
        return;
    }
    if (length(sigma) > budget) return;
    if (ctx.max_cols >= 0 && depth >= ctx.max_cols) return;
    int max_height = left ? static_cast<int>(left->size()) : budget;
    for (auto& split : column_splits(sigma, std::min(max_height, budget), left)) {
        int h = static_cast<int>(split.column.size());
        std::vector<int> next_profiles;
        if (ctx.profiles) {
            for (int id : profiles_left) {
                const auto& prof = (*ctx.profiles)[id];
                if (depth < static_cast<int>(prof.size()) && prof[depth] == h)
                    next_profiles.push_back(id);
            }
            if (next_profiles.empty()) continue;
        }
        if (ctx.prune && !max_tableau_attaches(split.rest, split.column)) continue;
        colstack.push_back(split.column);
        enumerate_rec(split.rest, &split.column, depth + 1, budget - h, ctx, next_profiles,
                      colstack, out);
        colstack.pop_back();
    }
}

}  // namespace

std::vector<IncreasingTableau> increasing_tableaux_for(const Permutation& p,
                                                       const EnumOptions& opt) {
    std::vector<IncreasingTableau> out;
    EnumCtx ctx{opt.prune_max_tableau, opt.max_cols, opt.height_profiles};
    std::vector<int> all_profiles;
    if (ctx.profiles)
        for (size_t i = 0; i < ctx.profiles->size(); ++i)
            all_profiles.push_back(static_cast<int>(i));
    if (p.is_identity()) {
        bool ok = true;
        if (ctx.profiles) {
            ok = false;
            for (int id : all_profiles)
                if ((*ctx.profiles)[id].empty()) ok = true;
        }
        if (ok) out.push_back(IncreasingTableau());
        return out;
    }
    if (opt.max_boxes == 0) domain_error("max_boxes = 0 with a nonidentity permutation");
    if (length(p) > opt.max_boxes) return out;

    int root_height = opt.max_rows >= 0 ? std::min(opt.max_rows, opt.max_boxes) : opt.max_boxes;
    std::vector<int> left_copy;
    const std::vector<int>* left = opt.left_column;
    if (left) {
        left_copy = *left;
        root_height = std::min(root_height, static_cast<int>(left_copy.size()));
        left = &left_copy;
    }
    if (ctx.max_cols == 0) return out;

    auto roots = column_splits(p, root_height, left);
    struct RootJob {
        ColumnSplit split;
        std::vector<int> profiles;
    };
    std::vector<RootJob> jobs;
    for (auto& split : roots) {
        int h = static_cast<int>(split.column.size());
        std::vector<int> next_profiles;
        if (ctx.profiles) {
            for (int id : all_profiles) {
                const auto& prof = (*ctx.profiles)[id];
                if (!prof.empty() && prof[0] == h) next_profiles.push_back(id);
            }
            if (next_profiles.empty()) continue;
        }
        if (ctx.prune && !max_tableau_attaches(split.rest, split.column)) continue;
        jobs.push_back({std::move(split), std::move(next_profiles)});
    }

    int workers = resolve_workers(opt.workers);
    std::vector<std::vector<IncreasingTableau>> partial(jobs.size());
#ifdef _OPENMP
    if (workers > 1 && jobs.size() > 1) {
#pragma omp parallel for schedule(dynamic, 1) num_threads(workers)
        for (int i = 0; i < static_cast<int>(jobs.size()); ++i) {
            const auto& job = jobs[i];
            std::vector<std::vector<int>> colstack{job.split.column};
            enumerate_rec(job.split.rest, &job.split.column, 1,
                          opt.max_boxes - static_cast<int>(job.split.column.size()), ctx,
                          job.profiles, colstack, partial[i]);
        }
    } else
#endif
    {
        (void)workers;
        for (size_t i = 0; i < jobs.size(); ++i) {
            const auto& job = jobs[i];
            std::vector<std::vector<int>> colstack{job.split.column};
            enumerate_rec(job.split.rest, &job.split.column, 1,
                          opt.max_boxes - static_cast<int>(job.split.column.size()), ctx,
                          job.profiles, colstack, partial[i]);
        }
    }
    for (auto& part : partial)
        for (auto& t : part) out.push_back(std::move(t));
    return out;
}

std::vector<IncreasingTableau> increasing_tableaux_for(const Permutation& p, int max_boxes) {
    EnumOptions opt;
    opt.max_boxes = max_boxes;
    return increasing_tableaux_for(p, opt);
}

std::vector<DecreasingTableau> decreasing_tableaux_for(const Permutation& p,
                                                       const EnumOptions& opt) {
    std::vector<DecreasingTableau> out;
    if (p.is_identity()) {
        bool ok = true;
        if (opt.height_profiles) {
            ok = false;
            for (const auto& prof : *opt.height_profiles)
                if (prof.empty()) ok = true;
        }
        if (ok) out.push_back(DecreasingTableau());
        return out;
    }
    int m = p.size();
    Permutation phat = conjugate_by_longest(p, m);
    for (const auto& t : increasing_tableaux_for(phat, opt))
        out.push_back(flip_to_decreasing(t, m));
    return out;
}

IncreasingTableau max_tableau(const Permutation& p) {
    Grid rows;
    Permutation sigma = p;
    while (!sigma.is_identity()) {
        std::vector<int> row;
        int bound = sigma.size() + 1;
        while (true) {
            int d = 0;
            for (int i = std::min(bound - 1, sigma.size() - 1); i >= 1; --i)
                if (is_descent(sigma, i)) {
                    d = i;
                    break;
                }
            if (d == 0) break;
            row.push_back(d);
            sigma = right_transposition_mult(sigma, d);
            bound = d;
        }
        GROTH_CHECK(!row.empty());
        std::reverse(row.begin(), row.end());
        rows.push_back(std::move(row));
    }
    IncreasingTableau m(std::move(rows));
    GROTH_CHECK(tableau_permutation(m) == p);
    return m;
}

namespace {

StableExpansion expansion_from_tableaux(const std::vector<IncreasingTableau>& ts, int ell,
                                        int max_degree) {
    StableExpansion res;
    bool top = false, second = false;
    for (const auto& t : ts) {
        int b = t.boxes();
        long long sign = ((b - ell) % 2 == 0) ? 1 : -1;
        res.expansion.add(t.shape(), sign);
        if (b == max_degree) top = true;
        if (b == max_degree - 1) second = true;
    }
    res.complete = !top && !second;
    res.truncated = !res.complete;
    return res;
}

}  // namespace

StableExpansion stable_coefficients(const Permutation& p, int max_degree, int workers) {
    int ell = length(p);
    if (max_degree < ell) domain_error("max_degree below the length of the permutation");
    EnumOptions opt;
    opt.max_boxes = max_degree;
    opt.workers = workers;
    auto ts = increasing_tableaux_for(inverse(p), opt);
    return expansion_from_tableaux(ts, ell, max_degree);
}

StableExpansion stable_coefficients_decreasing(const Permutation& p, int max_degree, int workers) {
    int ell = length(p);
    if (max_degree < ell) domain_error("max_degree below the length of the permutation");
    if (p.is_identity()) {
        StableExpansion res;
        res.expansion.add(Partition(), 1);
        res.complete = max_degree >= 2;
        res.truncated = !res.complete;
        return res;
    }
    EnumOptions opt;
    opt.max_boxes = max_degree;
    opt.workers = workers;
    Permutation phat = conjugate_by_longest(p, p.size());
    auto ts = increasing_tableaux_for(phat, opt);
    return expansion_from_tableaux(ts, ell, max_degree);
}

Expansion stable_coefficients_decreasing_at(const Permutation& p,
                                            const std::vector<Partition>& shapes, int workers) {
    int ell = length(p);
    std::vector<std::vector<int>> profiles;
    int max_boxes = 0;
    for (const auto& s : shapes) {
        profiles.push_back(s.conjugate().parts());
        max_boxes = std::max(max_boxes, s.size());
    }
    EnumOptions opt;
    opt.max_boxes = std::max(max_boxes, 1);
    opt.workers = workers;
    opt.height_profiles = &profiles;
    Expansion e;
    if (p.is_identity()) {
        for (const auto& s : shapes)
            if (s.empty()) e.add(s, 1);
        return e;
    }
    Permutation phat = conjugate_by_longest(p, p.size());
    for (const auto& t : increasing_tableaux_for(phat, opt)) {
        int b = t.boxes();
        e.add(t.shape(), ((b - ell) % 2 == 0) ? 1 : -1);
    }
    return e;
}

SparsePolynomial monomials_compatible(const Permutation& p, int num_vars, int max_degree) {
    GROTH_CHECK(num_vars >= 1 && max_degree >= 0);
    SparsePolynomial poly(num_vars, max_degree);
    int ell = length(p);
    Exps exps(num_vars, 0);
    // Builds compatible pairs (a, i) position by position; the remaining
    // target is the permutation the unread suffix of a must reduce to.
    std::function<void(const Permutation&, int, int, int)> rec = [&](const Permutation& sigma,
                                                                     int pos, int last_index,
                                                                     int last_letter) {
        if (sigma.is_identity()) {
            poly.add_term(exps, ((pos - ell) % 2 == 0) ? 1 : -1);
            return;
        }
        if (pos == max_degree || length(sigma) > max_degree - pos) return;
        for (int c = 1; c < sigma.size(); ++c) {
            if (!is_left_descent(sigma, c)) continue;
            Permutation consumed = left_transposition_mult(c, sigma);
            for (int v = last_index; v <= num_vars; ++v) {
                if (v == last_index && c >= last_letter) continue;
                ++exps[v - 1];
                rec(sigma, pos + 1, v, c);
                rec(consumed, pos + 1, v, c);
                --exps[v - 1];
            }
        }
    };
    rec(p, 0, 1, 1 << 30);
    return poly;
}

SparsePolynomial monomials_setvalued(const Shape& shape, int num_vars, int max_degree) {
    GROTH_CHECK(num_vars >= 1 && max_degree >= 0);
    SparsePolynomial poly(num_vars, max_degree);
    int nrows = shape.outer.num_parts();
    std::vector<std::pair<int, int>> boxes;  // row-major, 1-based
    for (int r = 1; r <= nrows; ++r)
        for (int c = shape.inner.part(r) + 1; c <= shape.outer.part(r); ++c) boxes.push_back({r, c});
    int nboxes = static_cast<int>(boxes.size());
    if (nboxes == 0) return SparsePolynomial::constant(num_vars, 1, max_degree);

    std::map<std::pair<int, int>, int> index_of;
    for (int b = 0; b < nboxes; ++b) index_of[boxes[b]] = b;
    std::vector<int> box_max(nboxes, 0);
    Exps exps(num_vars, 0);

    std::function<void(int, int)> rec = [&](int b, int used) {
        if (b == nboxes) {
            poly.add_term(exps, ((used - nboxes) % 2 == 0) ? 1 : -1);
            return;
        }
        auto [r, c] = boxes[b];
        int lo = 1;
        if (auto it = index_of.find({r, c - 1}); it != index_of.end())
            lo = std::max(lo, box_max[it->second]);
        if (auto it = index_of.find({r - 1, c}); it != index_of.end())
            lo = std::max(lo, box_max[it->second] + 1);
        int budget = max_degree - used - (nboxes - 1 - b);  // later boxes need one entry each
        if (budget < 1) return;
        // Nonempty subsets of {lo..num_vars}, smallest element first.
        std::function<void(int, int)> grow = [&](int from, int count) {
            for (int v = from; v <= num_vars; ++v) {
                ++exps[v - 1];
                box_max[b] = v;
                rec(b + 1, used + count + 1);
                if (count + 1 < budget) grow(v + 1, count + 1);
                --exps[v - 1];
            }
        };
        grow(lo, 0);
        box_max[b] = 0;
    };
    rec(0, 0);
    return poly;
}

SparsePolynomial monomials_setvalued(const Partition& lambda, int num_vars, int max_degree) {
    return monomials_setvalued(Shape(lambda, Partition()), num_vars, max_degree);
}

SparsePolynomial grothendieck_recursion(const Permutation& p, int n) {
    if (n < 1) domain_error("n must be positive");
    if (p.size() > n) domain_error("permutation not in S_n");
    Permutation longest = Permutation::longest(n);
    if (p == longest) {
        Exps e(n, 0);
        for (int i = 1; i < n; ++i) e[i - 1] = n - i;
        SparsePolynomial poly(n, -1);
        poly.add_term(e, 1);
        return poly;
    }
    int i = 0;
    for (int k = 1; k < n; ++k)
        if (p(k) < p(k + 1)) {
            i = k;
            break;
        }
    GROTH_CHECK(i > 0);
    SparsePolynomial gq = grothendieck_recursion(right_transposition_mult(p, i), n);
    SparsePolynomial swapped = gq.swap_vars(i, i + 1);
    SparsePolynomial num = (gq - gq.times_var(i + 1)) - (swapped - swapped.times_var(i));
    return divide_by_var_difference(num, i);
}

Expansion skew_lr_coefficients(const Partition& outer, const Partition& inner, int max_degree) {
    if (!outer.contains(inner)) domain_error("inner shape not contained in outer");
    Shape shape(outer, inner);
    int nboxes = shape.boxes();
    Expansion result;
    if (nboxes == 0) {
        result.add(Partition(), 1);
        return result;
    }
    if (max_degree < nboxes) domain_error("max_degree below the number of boxes");

    // Boxes in reverse column-word order (rightmost column first, top to
    // bottom, entries within a box descending).  Every letter placed this way
    // sees its final suffix, so the reverse-lattice condition is checked the
    // moment a letter is written: placing i > 1 requires that the suffix
    // already holds strictly more (i-1)s than is.
    int nrows = shape.outer.num_parts();
    std::vector<std::pair<int, int>> boxes;
    for (int c = shape.outer.part(1); c >= 1; --c)
        for (int r = 1; r <= nrows; ++r)
            if (c > shape.inner.part(r) && c <= shape.outer.part(r)) boxes.push_back({r, c});
    std::map<std::pair<int, int>, int> index_of;
    for (size_t b = 0; b < boxes.size(); ++b) index_of[boxes[b]] = static_cast<int>(b);

    std::vector<int> box_min(boxes.size()), box_max(boxes.size());
    std::vector<int> nu(max_degree + 2, 0);
    int max_letter_used = 0;

    auto emit = [&](int used) {
        std::vector<int> parts(nu.begin(), nu.begin() + max_letter_used);
        Partition content_partition(std::move(parts));  // ctor certifies weak decrease
        result.add(content_partition, ((used - nboxes) % 2 == 0) ? 1 : -1);
    };

    std::function<void(size_t, int)> rec = [&](size_t b, int used) {
        if (b == boxes.size()) {
            emit(used);
            return;
        }
        auto [r, c] = boxes[b];
        int above_max = 0;
        if (auto it = index_of.find({r - 1, c}); it != index_of.end())
            above_max = box_max[it->second];
        int first_cap = max_degree;
        if (auto it = index_of.find({r, c + 1}); it != index_of.end())
            first_cap = std::min(first_cap, box_min[it->second]);
        int budget = max_degree - used - (static_cast<int>(boxes.size()) - 1 - static_cast<int>(b));
        if (budget < 1) return;
        std::function<void(int, int)> grow = [&](int prev, int count) {
            int hi = count == 0 ? first_cap : prev - 1;
            for (int v = hi; v > above_max; --v) {
                if (v >= 2 && nu[v - 2] <= nu[v - 1]) continue;  // suffix lacks (v-1)s
                ++nu[v - 1];
                if (count == 0) box_max[b] = v;
                box_min[b] = v;
                int prev_max_letter = max_letter_used;
                max_letter_used = std::max(max_letter_used, v);
                rec(b + 1, used + count + 1);
                if (count + 1 < budget) grow(v, count + 1);
                max_letter_used = prev_max_letter;
                --nu[v - 1];
            }
        };
        grow(0, 0);
    };
    rec(0, 0);
    return result;
}

std::vector<IncreasingTableau> tableaux_with_entries_at_most(int bound, int max_boxes) {
    std::vector<IncreasingTableau> out;
    Grid rows;
    int boxes = 0;
    std::function<void()> emit_and_extend = [&]() {
        out.push_back(IncreasingTableau(rows));
        int max_len = rows.empty() ? (bound > 0 ? bound : 0) : static_cast<int>(rows.back().size());
        if (max_len == 0 || boxes >= max_boxes) return;
        // Extend with one more row of each admissible content.
        std::vector<int> row;
        std::function<void(int, int)> grow = [&](int col, int from) {
            if (!row.empty()) {
                rows.push_back(row);
                boxes += static_cast<int>(row.size());
                if (boxes <= max_boxes) emit_and_extend();
                boxes -= static_cast<int>(row.size());
                rows.pop_back();
            }
            if (col >= max_len || boxes + static_cast<int>(row.size()) >= max_boxes) return;
            int lo = from;
            if (!rows.empty()) lo = std::max(lo, rows.back()[col] + 1);
            for (int v = lo; v <= bound; ++v) {
                row.push_back(v);
                grow(col + 1, v + 1);
                row.pop_back();
            }
        };
        grow(0, 1);
    };
    emit_and_extend();
    return out;
}

UniversalExpansion universal_coefficients(const Permutation& p, int n, int max_degree) {
    if (n < 1) domain_error("n must be positive");
    if (p.size() > n + 1) domain_error("permutation not in S_{n+1}");
    GROTH_CHECK(max_degree >= 0);
    UniversalExpansion result;
    result.n = n;
    int positions = 2 * n - 1;
    int ell = length(p);
    Permutation target = inverse(p);

    std::vector<std::vector<IncreasingTableau>> choice(positions + 1);
    std::vector<std::vector<Permutation>> choice_w(positions + 1);
    for (int i = 1; i <= positions; ++i) {
        int b = std::min(i, 2 * n - i);
        choice[i] = tableaux_with_entries_at_most(b, max_degree);
        for (const auto& t : choice[i]) choice_w[i].push_back(tableau_permutation(t));
    }

    std::vector<Partition> shapes(positions);
    // Positions are consumed from 2n-1 downward, matching the product order.
    std::function<void(int, const Permutation&, int)> rec = [&](int i, const Permutation& prefix,
                                                                int used) {
        if (i == 0) {
            if (prefix == target) {
                int total = used;
                long long sign = ((total - ell) % 2 == 0) ? 1 : -1;
                result.terms[shapes] += sign;
                if (result.terms[shapes] == 0) result.terms.erase(shapes);
            }
            return;
        }
        for (size_t k = 0; k < choice[i].size(); ++k) {
            const auto& t = choice[i][k];
            int b = t.boxes();
            if (used + b > max_degree) continue;
            Permutation next = hecke_product(prefix, choice_w[i][k]);
            if (length(target) - length(next) > max_degree - used - b) continue;
            if (!bruhat_leq(next, target)) continue;
            shapes[i - 1] = t.shape();
            rec(i - 1, next, used + b);
        }
    };
    rec(positions, Permutation(), 0);
    return result;
}

}  // namespace groth
