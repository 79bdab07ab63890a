#include "knotforge/alexander.hpp"

#include "knotforge/invariants.hpp"
#include "knotforge/util.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace knotforge {

WirtingerData wirtinger(const Diagram& d) {
    if (!d.valid()) throw InvalidInput("wirtinger: invalid diagram");
    if (d.components().count != 1)
        throw InvalidInput("wirtinger: links are rejected, a knot is required");
    if (d.crossing_count() < 1) throw InvalidInput("wirtinger: need at least one crossing");

    WirtingerData w;
    w.arc_of_edge.assign(static_cast<std::size_t>(d.edge_count()) + 1, -1);

    // Arcs: maximal runs of edges between consecutive underpasses. Start the
    // trace just after an underpass so arcs are contiguous in the walk.
    EdgeId start = 1;
    {
        EdgeId e = 1;
        do {
            if (d.head(e).slot == 0) { start = d.strand_next(e); break; }
            e = d.strand_next(e);
        } while (e != 1);
    }
    int arc = -1;
    EdgeId e = start;
    bool new_arc = true;
    do {
        if (new_arc) { ++arc; new_arc = false; }
        w.arc_of_edge[static_cast<std::size_t>(e)] = arc;
        if (d.head(e).slot == 0) new_arc = true;  // arc ends under this crossing
        e = d.strand_next(e);
    } while (e != start);
    w.arc_count = arc + 1;

    for (int c = 0; c < d.crossing_count(); ++c) {
        const Crossing& x = d.crossing(c);
        WirtingerData::Relation r;
        r.sign = x.sign;
        r.in = w.arc_of_edge[static_cast<std::size_t>(x.e[0])];
        r.out = w.arc_of_edge[static_cast<std::size_t>(x.e[2])];
        r.over = w.arc_of_edge[static_cast<std::size_t>(x.e[static_cast<std::size_t>(x.over_in)])];
        w.relations.push_back(r);
    }
    if (w.arc_count != d.crossing_count())
        throw IntegrityError("wirtinger: arc count must equal crossing count for a knot");
    return w;
}

namespace {

// Sparse exact determinant over the Laurent ring. Rows are eliminated with
// unit-monomial pivots (no division needed); whatever is left goes through
// dense fraction-free elimination.
LaurentPoly sparse_laurent_determinant(std::vector<std::map<int, LaurentPoly>> rows, int ncols) {
    const int n = static_cast<int>(rows.size());
    if (n != ncols) throw InvalidInput("sparse determinant: matrix not square");
    if (n == 0) return LaurentPoly(1);

    std::vector<char> row_live(static_cast<std::size_t>(n), 1);
    std::vector<char> col_live(static_cast<std::size_t>(n), 1);
    std::vector<int> col_count(static_cast<std::size_t>(n), 0);
    for (const auto& row : rows)
        for (const auto& [j, p] : row)
            if (!p.is_zero()) ++col_count[static_cast<std::size_t>(j)];

    int live = n;
    while (live > 0) {
        // Best unit pivot by Markowitz fill score.
        int best_i = -1, best_j = -1;
        long best_score = -1;
        for (int i = 0; i < n; ++i) {
            if (!row_live[static_cast<std::size_t>(i)]) continue;
            long rnnz = static_cast<long>(rows[static_cast<std::size_t>(i)].size());
            for (const auto& [j, p] : rows[static_cast<std::size_t>(i)]) {
                if (!col_live[static_cast<std::size_t>(j)] || !p.is_unit_monomial()) continue;
                long score = (rnnz - 1) *
                             (static_cast<long>(col_count[static_cast<std::size_t>(j)]) - 1);
                if (best_score < 0 || score < best_score) {
                    best_score = score;
                    best_i = i;
                    best_j = j;
                }
            }
        }
        if (best_i < 0) break;

        const LaurentPoly pivot = rows[static_cast<std::size_t>(best_i)][best_j];
        // factor for row r: entry / pivot; pivot is +-t^k so this is exact.
        const Integer pc = pivot.coeff(pivot.lo());
        for (int r = 0; r < n; ++r) {
            if (r == best_i || !row_live[static_cast<std::size_t>(r)]) continue;
            auto& row = rows[static_cast<std::size_t>(r)];
            auto it = row.find(best_j);
            if (it == row.end() || it->second.is_zero()) continue;
            LaurentPoly factor = it->second.shifted_scaled(pc, -pivot.lo());  // entry / pivot
            for (const auto& [j, p] : rows[static_cast<std::size_t>(best_i)]) {
                if (j == best_j || !col_live[static_cast<std::size_t>(j)]) continue;
                LaurentPoly& cell = row[j];
                bool was_zero = cell.is_zero();
                cell -= factor * p;
                if (was_zero && !cell.is_zero()) ++col_count[static_cast<std::size_t>(j)];
                else if (!was_zero && cell.is_zero()) --col_count[static_cast<std::size_t>(j)];
            }
            for (const auto& [j, p] : row)
                if (p.is_zero()) { /* lazily cleaned below */ }
            // erase the pivot-column entry and any zeros created
            for (auto itc = row.begin(); itc != row.end();) {
                if (itc->first == best_j || itc->second.is_zero()) itc = row.erase(itc);
                else ++itc;
            }
        }
        for (const auto& [j, p] : rows[static_cast<std::size_t>(best_i)])
            if (!p.is_zero()) --col_count[static_cast<std::size_t>(j)];
        row_live[static_cast<std::size_t>(best_i)] = 0;
        col_live[static_cast<std::size_t>(best_j)] = 0;
        --live;
    }

    if (live == 0) return LaurentPoly(1);  // determinant up to a unit: fixed by normalization

    // Dense fraction-free cleanup of the remaining block.
    std::vector<int> ri, ci;
    for (int i = 0; i < n; ++i) if (row_live[static_cast<std::size_t>(i)]) ri.push_back(i);
    for (int j = 0; j < n; ++j) if (col_live[static_cast<std::size_t>(j)]) ci.push_back(j);
    std::vector<std::vector<LaurentPoly>> m(ri.size(), std::vector<LaurentPoly>(ci.size()));
    for (std::size_t a = 0; a < ri.size(); ++a)
        for (std::size_t b = 0; b < ci.size(); ++b) {
            auto& row = rows[static_cast<std::size_t>(ri[a])];
            auto it = row.find(ci[b]);
            if (it != row.end()) m[a][b] = it->second;
        }
    return laurent_determinant(std::move(m));
}

} // namespace

LaurentPoly alexander_poly(const Diagram& d) {
    WirtingerData w = wirtinger(d);
    const int n = w.arc_count;
    if (n == 1) return LaurentPoly(1);  // single-arc kink diagram of the unknot

    // Fox derivative rows of x_out = x_ov^s x_in x_ov^{-s}:
    //   s = +1: over += 1 - t, in += t,  out += -1
    //   s = -1: over += t - 1, in += 1,  out += -t   (row scaled by t)
    const LaurentPoly t = LaurentPoly::t();
    const LaurentPoly one(1);
    std::vector<std::map<int, LaurentPoly>> rows;
    for (const auto& r : w.relations) {
        std::map<int, LaurentPoly> row;
        auto add = [&](int col, const LaurentPoly& v) {
            LaurentPoly& cell = row[col];
            cell += v;
            if (cell.is_zero()) row.erase(col);
        };
        if (r.sign > 0) {
            add(r.over, one - t);
            add(r.in, t);
            add(r.out, -one);
        } else {
            add(r.over, t - one);
            add(r.in, one);
            add(r.out, -t);
        }
        rows.push_back(std::move(row));
    }

    // Delete the last relation and the last generator column.
    rows.pop_back();
    for (auto& row : rows) row.erase(n - 1);

    // Re-index columns 0..n-2 and compute the exact determinant.
    LaurentPoly det = sparse_laurent_determinant(std::move(rows), n - 1);
    if (det.is_zero())
        throw IntegrityError("alexander: vanishing determinant on a knot diagram");
    LaurentPoly delta = det.normalized();
    Integer at1 = delta.eval(1);
    if (at1 != 1 && at1 != -1)
        throw IntegrityError("alexander: Delta(1) = " + at1.get_str() + ", expected +-1");
    return delta;
}

namespace {

struct Checkerboard {
    FaceSet fs;
    std::vector<int> color;  // 0/1 per face; outer face has color 0
    int outer = 0;
};

Checkerboard checkerboard(const Diagram& d) {
    Checkerboard cb;
    cb.fs = d.faces();
    cb.color.assign(static_cast<std::size_t>(cb.fs.count()), -1);
    // Deterministic outer face: the face left of edge 1 traversed forward.
    cb.outer = cb.fs.side_face[1][0];
    cb.color[static_cast<std::size_t>(cb.outer)] = 0;
    // Faces across an edge get opposite colors; BFS over edges.
    std::vector<int> stack = {cb.outer};
    while (!stack.empty()) {
        int f = stack.back();
        stack.pop_back();
        for (EdgeId e = 1; e <= d.edge_count(); ++e) {
            int a = cb.fs.side_face[static_cast<std::size_t>(e)][0];
            int b = cb.fs.side_face[static_cast<std::size_t>(e)][1];
            if (a != f && b != f) continue;
            int g = (a == f) ? b : a;
            int want = 1 - cb.color[static_cast<std::size_t>(f)];
            if (cb.color[static_cast<std::size_t>(g)] == -1) {
                cb.color[static_cast<std::size_t>(g)] = want;
                stack.push_back(g);
            } else if (cb.color[static_cast<std::size_t>(g)] != want) {
                throw IntegrityError("goeritz: faces are not checkerboard colorable");
            }
        }
    }
    for (int c : cb.color)
        if (c == -1) throw IntegrityError("goeritz: face coloring did not cover the map");
    return cb;
}

} // namespace

Integer goeritz_determinant(const Diagram& d) {
    if (!d.valid()) throw InvalidInput("goeritz: invalid diagram");
    Checkerboard cb = checkerboard(d);

    // Shaded class = the one not containing the outer face.
    std::vector<int> shaded_index(static_cast<std::size_t>(cb.fs.count()), -1);
    int m = 0;
    for (int f = 0; f < cb.fs.count(); ++f)
        if (cb.color[static_cast<std::size_t>(f)] == 1) shaded_index[static_cast<std::size_t>(f)] = m++;
    if (m <= 1) return Integer(1);

    std::vector<std::vector<Integer>> g(static_cast<std::size_t>(m),
                                        std::vector<Integer>(static_cast<std::size_t>(m), Integer(0)));
    for (int c = 0; c < d.crossing_count(); ++c) {
        const auto& cf = cb.fs.corner_face[static_cast<std::size_t>(c)];
        // Colors alternate around the crossing; the shaded corners are an
        // opposite pair. eta distinguishes which pair relative to slot 0.
        bool pair02 = cb.color[static_cast<std::size_t>(cf[0])] == 1;
        int u = pair02 ? cf[0] : cf[1];
        int v = pair02 ? cf[2] : cf[3];
        int eta = pair02 ? -1 : +1;
        int iu = shaded_index[static_cast<std::size_t>(u)];
        int iv = shaded_index[static_cast<std::size_t>(v)];
        if (iu < 0 || iv < 0) throw IntegrityError("goeritz: shaded corner is not shaded");
        if (iu == iv) continue;  // same region on both corners contributes nothing
        g[static_cast<std::size_t>(iu)][static_cast<std::size_t>(iv)] -= eta;
        g[static_cast<std::size_t>(iv)][static_cast<std::size_t>(iu)] -= eta;
        g[static_cast<std::size_t>(iu)][static_cast<std::size_t>(iu)] += eta;
        g[static_cast<std::size_t>(iv)][static_cast<std::size_t>(iv)] += eta;
    }

    // Principal minor: drop the last shaded region.
    std::vector<std::vector<Integer>> minor(static_cast<std::size_t>(m - 1),
                                            std::vector<Integer>(static_cast<std::size_t>(m - 1)));
    for (int i = 0; i + 1 < m; ++i)
        for (int j = 0; j + 1 < m; ++j)
            minor[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
                g[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
    Integer det = integer_determinant(std::move(minor));
    return abs(det);
}

Integer determinant(const Diagram& d) {
    LaurentPoly delta = alexander_poly(d);
    Integer via_alex = abs(delta.eval(-1));
    Integer via_goeritz = goeritz_determinant(d);
    if (via_alex != via_goeritz)
        throw IntegrityError("determinant: |Delta(-1)| = " + via_alex.get_str() +
                             " but Goeritz gives " + via_goeritz.get_str());
    return via_alex;
}

} // namespace knotforge
