#include "knotforge/diagram.hpp"

#include "knotforge/util.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace knotforge {

std::string ValidationReport::summary() const {
    if (ok()) return "pass";
    std::ostringstream os;
    for (std::size_t i = 0; i < issues.size(); ++i) {
        if (i) os << "; ";
        os << issues[i].code;
        if (!issues[i].detail.empty()) os << " (" << issues[i].detail << ")";
    }
    return os.str();
}

Diagram Diagram::from_crossings(const std::vector<std::array<EdgeId, 4>>& tuples,
                                const std::vector<int>& orientation) {
    Diagram d;
    d.tuples_ = tuples;
    d.orientation_ = orientation;
    d.analyze();
    return d;
}

void Diagram::analyze() {
    auto fail = [&](const std::string& code, const std::string& detail) {
        report_.issues.push_back({code, detail});
    };

    const int nc = static_cast<int>(tuples_.size());
    if (nc == 0) {
        fail("empty diagram unsupported", "0-crossing diagrams are rejected");
        return;
    }
    n_edges_ = 2 * nc;

    // Occurrences of each edge id, in crossing-scan order.
    std::map<EdgeId, std::vector<EndRef>> occ;
    for (int c = 0; c < nc; ++c)
        for (int s = 0; s < 4; ++s) {
            EdgeId e = tuples_[static_cast<std::size_t>(c)][static_cast<std::size_t>(s)];
            if (e < 1 || e > n_edges_) {
                fail("bad edge id", "edge " + std::to_string(e) + " outside 1.." +
                                        std::to_string(n_edges_));
                return;
            }
            occ[e].push_back({c, s});
        }
    for (EdgeId e = 1; e <= n_edges_; ++e) {
        auto it = occ.find(e);
        std::size_t k = (it == occ.end()) ? 0 : it->second.size();
        if (k != 2) {
            fail("edge multiplicity",
                 "edge " + std::to_string(e) + " appears " + std::to_string(k) + " times");
        }
    }
    if (!report_.ok()) return;

    if (orientation_.size() != static_cast<std::size_t>(n_edges_)) {
        fail("orientation size", "expected " + std::to_string(n_edges_) + " entries");
        return;
    }
    for (int v : orientation_)
        if (v != 1 && v != -1) {
            fail("orientation value", "entries must be +1 or -1");
            return;
        }

    tail_.assign(static_cast<std::size_t>(n_edges_) + 1, EndRef{});
    head_.assign(static_cast<std::size_t>(n_edges_) + 1, EndRef{});
    for (EdgeId e = 1; e <= n_edges_; ++e) {
        const auto& ends = occ[e];
        bool fwd = orientation_[static_cast<std::size_t>(e - 1)] == 1;
        tail_[static_cast<std::size_t>(e)] = fwd ? ends[0] : ends[1];
        head_[static_cast<std::size_t>(e)] = fwd ? ends[1] : ends[0];
    }

    // Per-crossing direction pattern: slot 0 flows in, slot 2 out, and the
    // overstrand enters at exactly one of slots 1/3.
    xs_.assign(static_cast<std::size_t>(nc), Crossing{});
    auto is_head_at = [&](EdgeId e, int c, int s) {
        return head_[static_cast<std::size_t>(e)] == EndRef{c, s};
    };
    auto is_tail_at = [&](EdgeId e, int c, int s) {
        return tail_[static_cast<std::size_t>(e)] == EndRef{c, s};
    };
    for (int c = 0; c < nc; ++c) {
        const auto& t = tuples_[static_cast<std::size_t>(c)];
        Crossing& x = xs_[static_cast<std::size_t>(c)];
        x.e = t;
        if (!is_head_at(t[0], c, 0))
            fail("orientation inconsistent",
                 "crossing " + std::to_string(c) + ": slot 0 must be an incoming edge");
        if (!is_tail_at(t[2], c, 2))
            fail("orientation inconsistent",
                 "crossing " + std::to_string(c) + ": slot 2 must be an outgoing edge");
        bool in1 = is_head_at(t[1], c, 1);
        bool in3 = is_head_at(t[3], c, 3);
        if (in1 == in3) {
            fail("orientation inconsistent",
                 "crossing " + std::to_string(c) + ": overstrand must have one in and one out");
            continue;
        }
        x.over_in = in3 ? 3 : 1;
        if (in3 && !is_tail_at(t[1], c, 1))
            fail("orientation inconsistent", "crossing " + std::to_string(c) + ": slot 1");
        if (in1 && !is_tail_at(t[3], c, 3))
            fail("orientation inconsistent", "crossing " + std::to_string(c) + ": slot 3");
        x.sign = (x.over_in == 3) ? +1 : -1;
    }
    if (!report_.ok()) return;

    // Connectivity of the underlying 4-valent map.
    UnionFind uf(static_cast<std::size_t>(nc));
    for (EdgeId e = 1; e <= n_edges_; ++e) uf.unite(tail_[static_cast<std::size_t>(e)].crossing,
                                                    head_[static_cast<std::size_t>(e)].crossing);
    if (uf.set_count() != 1)
        fail("disconnected", std::to_string(uf.set_count()) + " pieces");
}

EdgeId Diagram::strand_next(EdgeId e) const {
    EndRef h = head_[static_cast<std::size_t>(e)];
    int out = (h.slot + 2) % 4;
    return xs_[static_cast<std::size_t>(h.crossing)].e[static_cast<std::size_t>(out)];
}

ComponentInfo Diagram::components() const {
    if (!valid()) throw InvalidInput("components: invalid diagram: " + report_.summary());
    ComponentInfo info;
    info.label.assign(static_cast<std::size_t>(n_edges_) + 1, -1);
    for (EdgeId start = 1; start <= n_edges_; ++start) {
        if (info.label[static_cast<std::size_t>(start)] != -1) continue;
        int id = info.count++;
        EdgeId e = start;
        do {
            info.label[static_cast<std::size_t>(e)] = id;
            e = strand_next(e);
        } while (e != start);
    }
    return info;
}

FaceSet Diagram::faces() const {
    if (!valid()) throw InvalidInput("faces: invalid diagram: " + report_.summary());

    const int nc = crossing_count();
    // Directed-edge index: edge e forward -> 2(e-1), backward -> 2(e-1)+1.
    auto idx = [](DirEdge de) {
        return 2 * (de.edge - 1) + (de.forward ? 0 : 1);
    };
    // Arrival end of a directed edge.
    auto arrive = [&](DirEdge de) { return de.forward ? head(de.edge) : tail(de.edge); };

    FaceSet fs;
    fs.corner_face.assign(static_cast<std::size_t>(nc), {-1, -1, -1, -1});
    fs.side_face.assign(static_cast<std::size_t>(n_edges_) + 1, {-1, -1});
    std::vector<int> face_of(static_cast<std::size_t>(2 * n_edges_), -1);

    for (EdgeId e0 = 1; e0 <= n_edges_; ++e0) {
        for (bool fwd : {true, false}) {
            DirEdge start{e0, fwd};
            if (face_of[static_cast<std::size_t>(idx(start))] != -1) continue;
            int fid = fs.count();
            fs.faces.emplace_back();
            DirEdge cur = start;
            do {
                face_of[static_cast<std::size_t>(idx(cur))] = fid;
                fs.faces.back().push_back(cur);
                fs.side_face[static_cast<std::size_t>(cur.edge)][cur.forward ? 0 : 1] = fid;
                EndRef at = arrive(cur);
                fs.corner_face[static_cast<std::size_t>(at.crossing)]
                              [static_cast<std::size_t>(at.slot)] = fid;
                int s2 = (at.slot + 1) % 4;
                EdgeId f = xs_[static_cast<std::size_t>(at.crossing)].e[static_cast<std::size_t>(s2)];
                bool f_fwd = tail(f) == EndRef{at.crossing, s2};
                cur = DirEdge{f, f_fwd};
            } while (!(cur == start));
        }
    }

    int euler = nc - n_edges_ + fs.count();
    if (euler != 2)
        throw IntegrityError("faces: V - E + F = " + std::to_string(euler) +
                             ", map is not planar (sphere)");
    return fs;
}

Diagram Diagram::mirrored() const {
    if (!valid()) throw InvalidInput("mirrored: invalid diagram");
    std::vector<std::array<EdgeId, 4>> tuples;
    tuples.reserve(xs_.size());
    for (const auto& x : xs_) {
        // New understrand = old overstrand: rotate the tuple so the old
        // over-in slot becomes slot 0.
        int r = x.over_in;
        std::array<EdgeId, 4> t;
        for (int j = 0; j < 4; ++j)
            t[static_cast<std::size_t>(j)] = x.e[static_cast<std::size_t>((r + j) % 4)];
        tuples.push_back(t);
    }
    // Recompute stored-direction flags against the new scan order.
    std::vector<int> orient(static_cast<std::size_t>(n_edges_), 0);
    std::map<EdgeId, std::vector<EndRef>> occ;
    for (int c = 0; c < static_cast<int>(tuples.size()); ++c)
        for (int s = 0; s < 4; ++s)
            occ[tuples[static_cast<std::size_t>(c)][static_cast<std::size_t>(s)]].push_back({c, s});
    for (EdgeId e = 1; e <= n_edges_; ++e) {
        // Map new (crossing, slot) back to the old slot to test tail-ness.
        const auto& x = xs_[static_cast<std::size_t>(occ[e][0].crossing)];
        int old_slot = (x.over_in + occ[e][0].slot) % 4;
        bool first_is_tail = tail(e) == EndRef{occ[e][0].crossing, old_slot};
        orient[static_cast<std::size_t>(e - 1)] = first_is_tail ? 1 : -1;
    }
    return from_crossings(tuples, orient);
}

std::vector<int> Diagram::orientation_flags() const { return orientation_; }

namespace {

struct CanonState {
    const Diagram* d;
    std::vector<int> xlabel;
    int next_label = 0;
    std::vector<char> seen;  // by edge id
    int remaining = 0;
};

// Walk one whole component starting from the given directed edge, appending
// tokens (crossing label, arrival slot) and then recurse into the remaining
// components, minimizing over all of their starts.
std::string canon_walk(CanonState st, EdgeId start, bool start_fwd) {
    std::ostringstream os;
    EdgeId e = start;
    bool fwd = start_fwd;
    do {
        st.seen[static_cast<std::size_t>(e)] = 1;
        --st.remaining;
        EndRef at = fwd ? st.d->head(e) : st.d->tail(e);
        int& lab = st.xlabel[static_cast<std::size_t>(at.crossing)];
        if (lab == -1) lab = st.next_label++;
        os << lab << ":" << at.slot << ",";
        int opp = (at.slot + 2) % 4;
        EdgeId f = st.d->crossing(at.crossing).e[static_cast<std::size_t>(opp)];
        bool f_fwd = st.d->tail(f) == EndRef{at.crossing, opp};
        e = f;
        fwd = f_fwd;
    } while (!(e == start && fwd == start_fwd));

    if (st.remaining == 0) return os.str();
    os << "|";
    std::string best;
    for (EdgeId e2 = 1; e2 <= st.d->edge_count(); ++e2) {
        if (st.seen[static_cast<std::size_t>(e2)]) continue;
        for (bool f2 : {true, false}) {
            std::string cont = canon_walk(st, e2, f2);
            if (best.empty() || cont < best) best = cont;
        }
    }
    return os.str() + best;
}

} // namespace

std::string Diagram::canonical_code() const {
    CanonState st;
    st.d = this;
    st.xlabel.assign(static_cast<std::size_t>(crossing_count()), -1);
    st.seen.assign(static_cast<std::size_t>(n_edges_) + 1, 0);
    st.remaining = n_edges_;
    std::string best;
    for (EdgeId e0 = 1; e0 <= n_edges_; ++e0) {
        for (bool fwd0 : {true, false}) {
            std::string code = canon_walk(st, e0, fwd0);
            if (best.empty() || code < best) best = code;
        }
    }
    return best;
}

bool Diagram::isomorphic(const Diagram& a, const Diagram& b) {
    if (!a.valid() || !b.valid()) throw InvalidInput("isomorphic: invalid diagram");
    if (a.crossing_count() != b.crossing_count()) return false;
    return a.canonical_code() == b.canonical_code();
}

} // namespace knotforge
