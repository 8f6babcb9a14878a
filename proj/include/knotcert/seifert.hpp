#pragma once

#include "knotcert/laurent.hpp"
#include "knotcert/pd.hpp"
#include "knotcert/polymat.hpp"
#include "knotcert/ratpoly.hpp"

#include <algorithm>
#include <cstddef>
#include <map>
#include <string>
#include <vector>

namespace knotcert {

/// Combinatorial data of the surface produced by the oriented smoothing.
struct SurfaceData {
    long circle_count = 1;
    long crossing_count = 0;
    long genus = 0;
};

enum class SeifertSource { FromDiagram, FromBraid, UserSupplied };

/// Square integer matrix V of linking numbers lk(x_i, x_j^+) for a basis of
/// H_1 of a Seifert surface.  V - V^T is the intersection form of the
/// once-punctured surface and is always unimodular.
struct SeifertMatrix {
    std::vector<std::vector<Int>> v;
    SeifertSource source = SeifertSource::UserSupplied;

    long size() const { return (long)v.size(); }

    bool intersection_unimodular() const {
        std::size_t n = v.size();
        std::vector<std::vector<Rat>> m(n, std::vector<Rat>(n));
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) m[i][j] = Rat(v[i][j] - v[j][i]);
        return rat_det(std::move(m)) == 1;
    }
};

inline SeifertMatrix seifert_matrix_from_entries(std::vector<std::vector<Int>> entries,
                                                 SeifertSource src) {
    SeifertMatrix m;
    m.v = std::move(entries);
    m.source = src;
    for (const auto& row : m.v)
        if (row.size() != m.v.size()) throw input_error("Seifert matrix must be square");
    if (m.size() % 2 != 0) throw input_error("Seifert matrix must have even size");
    if (!m.intersection_unimodular())
        throw input_error("not a knot Seifert matrix: det(V - V^T) != 1");
    return m;
}

/// Alexander polynomial det(V - tV^T), symmetrized with value 1 at t = 1.
inline Laurent alexander_from_seifert(const SeifertMatrix& m) {
    std::size_t n = m.v.size();
    if (n == 0) return Laurent::one();
    PolyMatrix pm(n, std::vector<RatPoly>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            pm[i][j] = RatPoly(std::vector<Rat>{Rat(m.v[i][j]), -Rat(m.v[j][i])});
    RatPoly det = poly_det(std::move(pm));
    if (det.is_zero()) throw internal_error("det(V - tV^T) vanished identically");
    return alexander_normalize(det.to_laurent_scaled());
}

// ---------------------------------------------------------------------------
// Oriented smoothing: circles, regions of the circle arrangement, nesting.

namespace detail {

struct SmoothingData {
    int circles = 0;
    std::vector<int> circle_of_edge;           // edge label - 1 -> circle id
    std::vector<std::vector<long>> visits;     // circle -> crossing ids in cyclic order
    std::vector<std::map<long, int>> station;  // circle -> crossing id -> visit index
    std::vector<int> depth;                    // circle -> nesting depth
    std::vector<int> sense;                    // circle -> +1 ccw / -1 cw
    std::vector<char> nested;                  // crossing -> nested-adjacent band?
    std::vector<int> outer_circle;             // crossing -> parent-side circle or -1
    std::vector<int> u_circle, o_circle;       // crossing -> circle of under-in arc / other
};

inline std::vector<long> smooth_successor(const PDCode& d) {
    std::vector<long> succ(d.edge_count() + 1, 0);
    for (const auto& x : d.crossings) {
        if (x.sign > 0) {
            succ[x.arc[0]] = x.arc[1];
            succ[x.arc[3]] = x.arc[2];
        } else {
            succ[x.arc[0]] = x.arc[3];
            succ[x.arc[1]] = x.arc[2];
        }
    }
    return succ;
}

inline SmoothingData analyze_smoothing(const PDCode& d) {
    const long c = d.crossing_count();
    const long ne = d.edge_count();
    SmoothingData s;
    s.circle_of_edge.assign(ne, -1);
    auto succ = smooth_successor(d);

    // crossing at the head of each edge under the smoothing walk
    std::vector<long> head_x(ne + 1, -1);
    for (long ci = 0; ci < c; ++ci) {
        const auto& x = d.crossings[ci];
        head_x[x.arc[0]] = ci;
        head_x[x.sign > 0 ? x.arc[3] : x.arc[1]] = ci;
    }

    for (long e0 = 1; e0 <= ne; ++e0) {
        if (s.circle_of_edge[e0 - 1] >= 0) continue;
        int id = s.circles++;
        s.visits.emplace_back();
        s.station.emplace_back();
        long e = e0;
        do {
            s.circle_of_edge[e - 1] = id;
            long x = head_x[e];
            s.station[id][x] = (int)s.visits[id].size();
            s.visits[id].push_back(x);
            e = succ[e];
        } while (e != e0);
    }

    s.u_circle.assign(c, -1);
    s.o_circle.assign(c, -1);
    for (long ci = 0; ci < c; ++ci) {
        const auto& x = d.crossings[ci];
        s.u_circle[ci] = s.circle_of_edge[x.arc[0] - 1];
        s.o_circle[ci] = s.circle_of_edge[(x.sign > 0 ? x.arc[3] : x.arc[1]) - 1];
        if (s.u_circle[ci] == s.o_circle[ci])
            throw internal_error("crossing joins a Seifert circle to itself");
    }

    // Faces of the diagram as rotation-system orbits over edge ends
    // (end id = 4*crossing + slot), then regions of the circle arrangement by
    // merging faces across every smoothing channel.
    std::map<long, std::pair<long, long>> ends;
    for (long ci = 0; ci < c; ++ci)
        for (int sl = 0; sl < 4; ++sl) {
            long lbl = d.crossings[ci].arc[sl];
            auto it = ends.find(lbl);
            if (it == ends.end())
                ends[lbl] = {4 * ci + sl, -1};
            else
                it->second.second = 4 * ci + sl;
        }
    std::vector<long> mate(4 * c);
    for (auto& [lbl, p] : ends) {
        mate[p.first] = p.second;
        mate[p.second] = p.first;
    }
    std::vector<int> face_of_end(4 * c, -1);
    int faces = 0;
    for (long e0 = 0; e0 < 4 * c; ++e0) {
        if (face_of_end[e0] >= 0) continue;
        long e = e0;
        while (face_of_end[e] < 0) {
            face_of_end[e] = faces;
            long m = mate[e];
            e = (m / 4) * 4 + (m % 4 + 1) % 4;
        }
        ++faces;
    }
    if (faces != c + 2) throw internal_error("non-planar rotation system in smoothing analysis");

    auto face_at_corner = [&](long ci, int sl) {  // corner between slots sl, sl+1
        return face_of_end[4 * ci + (sl + 1) % 4];
    };
    DisjointSets rg(faces);
    for (long ci = 0; ci < c; ++ci) {
        if (d.crossings[ci].sign > 0)
            rg.unite(face_at_corner(ci, 1), face_at_corner(ci, 3));
        else
            rg.unite(face_at_corner(ci, 0), face_at_corner(ci, 2));
    }
    auto region = [&](int f) { return (int)rg.find(f); };

    // Left face of an oriented edge is the face orbit of its head end.
    std::vector<long> head_end(ne + 1, -1), tail_end(ne + 1, -1);
    for (long ci = 0; ci < c; ++ci) {
        const auto& x = d.crossings[ci];
        head_end[x.under_in()] = 4 * ci + 0;
        tail_end[x.under_out()] = 4 * ci + 2;
        head_end[x.over_in()] = 4 * ci + (x.sign > 0 ? 3 : 1);
        tail_end[x.over_out()] = 4 * ci + (x.sign > 0 ? 1 : 3);
    }
    std::vector<int> left_rg(s.circles, -1), right_rg(s.circles, -1);
    for (long e = 1; e <= ne; ++e) {
        int circ = s.circle_of_edge[e - 1];
        int lf = region(face_of_end[head_end[e]]);
        int rf = region(face_of_end[tail_end[e]]);
        if (left_rg[circ] < 0) {
            left_rg[circ] = lf;
            right_rg[circ] = rf;
        } else if (left_rg[circ] != lf || right_rg[circ] != rf) {
            throw internal_error("circle borders more than two regions");
        }
    }

    // Region-circle tree rooted at an arbitrary outer region (any choice is a
    // sphere isotopy of the diagram; region of face 0 keeps it deterministic).
    int root = region(0);
    std::vector<std::vector<int>> circles_at(faces);
    for (int circ = 0; circ < s.circles; ++circ) {
        circles_at[left_rg[circ]].push_back(circ);
        if (right_rg[circ] != left_rg[circ]) circles_at[right_rg[circ]].push_back(circ);
    }
    s.depth.assign(s.circles, -1);
    s.sense.assign(s.circles, 0);
    std::vector<int> inner_rg(s.circles, -1);
    std::vector<int> level(faces, -1);
    level[root] = 0;
    std::vector<int> stack{root};
    while (!stack.empty()) {
        int r = stack.back();
        stack.pop_back();
        for (int circ : circles_at[r]) {
            if (s.depth[circ] >= 0) continue;
            s.depth[circ] = level[r];
            int inner = left_rg[circ] == r ? right_rg[circ] : left_rg[circ];
            inner_rg[circ] = inner;
            s.sense[circ] = (left_rg[circ] == inner) ? 1 : -1;  // interior on the left <=> ccw
            if (level[inner] < 0) {
                level[inner] = level[r] + 1;
                stack.push_back(inner);
            }
        }
    }
    for (int circ = 0; circ < s.circles; ++circ)
        if (s.depth[circ] < 0) throw internal_error("disconnected circle arrangement");

    s.nested.assign(c, 0);
    s.outer_circle.assign(c, -1);
    for (long ci = 0; ci < c; ++ci) {
        int corridor = region(face_at_corner(ci, d.crossings[ci].sign > 0 ? 1 : 0));
        int p = s.u_circle[ci], q = s.o_circle[ci];
        if (inner_rg[p] == corridor) {
            s.nested[ci] = 1;
            s.outer_circle[ci] = p;
            if (s.depth[q] != s.depth[p] + 1) throw internal_error("nesting depth mismatch at band");
        } else if (inner_rg[q] == corridor) {
            s.nested[ci] = 1;
            s.outer_circle[ci] = q;
            if (s.depth[p] != s.depth[q] + 1) throw internal_error("nesting depth mismatch at band");
        } else {
            if (s.depth[p] != s.depth[q]) throw internal_error("sibling band depth mismatch");
        }
    }
    return s;
}

}  // namespace detail

/// Circles, crossings and genus of the oriented-smoothing surface.
inline SurfaceData seifert_surface(const PDCode& d) {
    SurfaceData out;
    out.crossing_count = d.crossing_count();
    if (out.crossing_count == 0) {
        out.circle_count = 1;
        return out;
    }
    auto s = detail::analyze_smoothing(d);
    out.circle_count = s.circles;
    long b1 = 1 + out.crossing_count - out.circle_count;
    if (b1 < 0 || b1 % 2 != 0)
        throw internal_error("smoothing produced an odd first Betti number for a knot");
    out.genus = b1 / 2;
    return out;
}

// ---------------------------------------------------------------------------
// Linking numbers of homology basis curves on the disk-band surface.
//
// Disks are stacked by nesting depth with boundaries on the diagram; a basis
// loop runs through its bands and along a thin collar chord inside each
// visited circle.  Every projected crossing between two loop curves is one
// of: chord over a band pass through the collar (the disk is always above),
// a transverse chord-chord crossing on a shared disk (resolved by the disk
// normal, i.e. the circle sense), or a pass-pass crossing inside a shared
// band (the half-twist; resolved by the band's local frame).  The two band
// frame constants below were pinned against the Fox-calculus oracle.

namespace detail {

struct Loop {
    // cyclic: pass[k] arrives at visit[k], which departs through pass[k+1]
    struct Pass {
        long band;
        int dir;  // +1 when traversed from the under-in circle to the other
    };
    struct Visit {
        int circle;
        long arr_band;
        long dep_band;
    };
    std::vector<Pass> passes;
    std::vector<Visit> visits;
    Rat u;  // collar offset; orders parallel strands
};

// Band frame constants: at a projected crossing of two passes through one
// band, the strand further along +key is on top iff over_rule * eps^over_eps
// is positive; the crossing contributes sign * eps^sign_eps * d_p * d_q.
struct BandFrame {
    int over_rule;
    int over_eps;
    int sign;
    int sign_eps;
};
inline BandFrame kNestedFrame{1, 0, -1, 1};
inline BandFrame kSiblingFrame{1, 0, -1, 1};

class LinkingEngine {
public:
    LinkingEngine(const PDCode& d, const SmoothingData& s) : d_(d), s_(s) {}

    // lk(a, b) for the routed loops; for a == b pass a parallel copy.
    Int link(const Loop& a, const Loop& b) const {
        Int total = 0;
        total += band_crossings(a, b);
        total += collar_crossings(a, b);
        return total;
    }

private:
    // key of a loop's station where band meets circle: +u when the loop
    // leaves the circle there, -u when it enters
    static Rat station_key(const Loop& l, bool leaves) { return leaves ? l.u : -l.u; }

    bool loop_leaves_circle(const Loop::Pass& p, long band, int circle) const {
        bool from_u = p.dir > 0;  // traversal starts on the under-in circle
        int start = from_u ? s_.u_circle[band] : s_.o_circle[band];
        return start == circle;
    }

    Int band_crossings(const Loop& a, const Loop& b) const {
        Int out = 0;
        for (const auto& pa : a.passes)
            for (const auto& pb : b.passes) {
                if (pa.band != pb.band) continue;
                long band = pa.band;
                int eps = d_.crossings[band].sign;
                Rat key_a = Rat(pa.dir) * a.u;
                Rat key_b = Rat(pb.dir) * b.u;
                if (key_a == key_b) throw internal_error("coincident band passes");
                int rel = key_a > key_b ? 1 : -1;
                const BandFrame& fr = s_.nested[band] ? kNestedFrame : kSiblingFrame;
                int over = fr.over_rule * (fr.over_eps ? eps : 1) * rel;
                if (over > 0) out += fr.sign * (fr.sign_eps ? eps : 1) * pa.dir * pb.dir;
            }
        return out;
    }

    struct StationPos {
        int index;
        Rat key;
    };

    // strictly inside the forward interval (A, B) in the cyclic station order
    static bool inside(const StationPos& A, const StationPos& B, const StationPos& P,
                       int stations) {
        auto unroll = [&](const StationPos& X) { return ((X.index - A.index) % stations + stations) % stations; };
        int db = unroll(B), dp = unroll(P);
        if (dp == 0) return P.key > A.key && (db != 0 || P.key < B.key);
        if (dp < db) return true;
        if (dp > db) return false;
        return P.key < B.key;
    }

    Int collar_crossings(const Loop& a, const Loop& b) const {
        Int out = 0;
        for (const auto& va : a.visits) {
            int C = va.circle;
            int stations = (int)s_.visits[C].size();
            StationPos A{s_.station[C].at(va.arr_band), -a.u};
            StationPos B{s_.station[C].at(va.dep_band), a.u};
            int nu = s_.sense[C];
            for (std::size_t k = 0; k < b.passes.size(); ++k) {
                const auto& pb = b.passes[k];
                long band = pb.band;
                if (s_.u_circle[band] != C && s_.o_circle[band] != C) continue;
                bool leaves = loop_leaves_circle(pb, band, C);
                StationPos P{s_.station[C].at(band), station_key(b, leaves)};
                if (!inside(A, B, P, stations)) continue;
                // chord over the band pass, when the band dives inside C
                if (s_.nested[band] && s_.outer_circle[band] == C) out += (leaves ? 1 : -1) * nu;
                // chord-chord tie with the stub of b's chord at this station
                if (b.u > a.u && nu == -1) out += (leaves ? -1 : 1) * nu;
            }
        }
        // a's stubs crossing b's chord tracks (the opposite tie)
        for (const auto& vb : b.visits) {
            int C = vb.circle;
            int stations = (int)s_.visits[C].size();
            StationPos A{s_.station[C].at(vb.arr_band), -b.u};
            StationPos B{s_.station[C].at(vb.dep_band), b.u};
            int nu = s_.sense[C];
            if (nu != -1 || !(a.u > b.u)) continue;
            for (const auto& pa : a.passes) {
                long band = pa.band;
                if (s_.u_circle[band] != C && s_.o_circle[band] != C) continue;
                bool leaves = loop_leaves_circle(pa, band, C);
                StationPos P{s_.station[C].at(band), station_key(a, leaves)};
                if (!inside(A, B, P, stations)) continue;
                out += -(leaves ? -1 : 1) * nu;
            }
        }
        return out;
    }

    const PDCode& d_;
    const SmoothingData& s_;
};

inline std::vector<Loop> fundamental_loops(const PDCode& d, const SmoothingData& s) {
    // deterministic spanning tree of the Seifert graph: BFS from circle 0,
    // lowest crossing id first
    const long c = d.crossing_count();
    std::vector<std::vector<long>> incident(s.circles);
    for (long ci = 0; ci < c; ++ci) {
        incident[s.u_circle[ci]].push_back(ci);
        incident[s.o_circle[ci]].push_back(ci);
    }
    std::vector<long> parent_band(s.circles, -1);
    std::vector<int> parent(s.circles, -1), order;
    std::vector<char> seen(s.circles, 0), in_tree(c, 0);
    seen[0] = 1;
    order.push_back(0);
    for (std::size_t h = 0; h < order.size(); ++h) {
        int v = order[h];
        for (long ci : incident[v]) {
            int w = s.u_circle[ci] == v ? s.o_circle[ci] : s.u_circle[ci];
            if (seen[w]) continue;
            seen[w] = 1;
            in_tree[ci] = 1;
            parent[w] = v;
            parent_band[w] = ci;
            order.push_back(w);
        }
    }
    for (int v = 0; v < s.circles; ++v)
        if (!seen[v]) throw internal_error("Seifert graph is disconnected");

    std::vector<int> depth(s.circles, 0);
    for (std::size_t h = 1; h < order.size(); ++h) depth[order[h]] = depth[parent[order[h]]] + 1;

    std::vector<Loop> loops;
    for (long e = 0; e < c; ++e) {
        if (in_tree[e]) continue;
        Loop l;
        l.u = Rat((long)loops.size() + 1);
        int from = s.u_circle[e], to = s.o_circle[e];
        // tree path to -> from
        std::vector<int> up_from{from}, up_to{to};
        int x = from, y = to;
        while (depth[x] > depth[y]) up_from.push_back(x = parent[x]);
        while (depth[y] > depth[x]) up_to.push_back(y = parent[y]);
        while (x != y) {
            up_from.push_back(x = parent[x]);
            up_to.push_back(y = parent[y]);
        }
        // circle sequence around the cycle: from --e--> to --tree--> from
        std::vector<int> cyc;
        std::vector<long> bands;  // bands[k] joins cyc[k] -> cyc[k+1 mod]
        cyc.push_back(from);
        bands.push_back(e);
        for (std::size_t k = 0; k + 1 < up_to.size(); ++k) {
            cyc.push_back(up_to[k]);
            bands.push_back(parent_band[up_to[k]]);
        }
        // up_to.back() == up_from.back() == meeting point
        for (std::size_t k = up_from.size() - 1; k > 0; --k) {
            cyc.push_back(up_from[k]);
            bands.push_back(parent_band[up_from[k - 1]]);
        }
        const std::size_t n = cyc.size();
        for (std::size_t k = 0; k < n; ++k) {
            long band = bands[k];
            int start = cyc[k];
            l.passes.push_back({band, s.u_circle[band] == start ? 1 : -1});
        }
        for (std::size_t k = 0; k < n; ++k) {
            int circle = cyc[(k + 1) % n];
            l.visits.push_back({circle, bands[k], bands[(k + 1) % n]});
        }
        loops.push_back(std::move(l));
    }
    return loops;
}

}  // namespace detail

/// Seifert matrix of the oriented-smoothing surface of a knot diagram.
inline SeifertMatrix seifert_matrix(const PDCode& d) {
    SeifertMatrix m;
    m.source = SeifertSource::FromDiagram;
    if (d.crossing_count() == 0) return m;  // unknot: 0 x 0

    auto s = detail::analyze_smoothing(d);
    auto loops = detail::fundamental_loops(d, s);
    long b1 = 1 + d.crossing_count() - s.circles;
    if ((long)loops.size() != b1) throw internal_error("homology rank mismatch");

    detail::LinkingEngine eng(d, s);
    const std::size_t n = loops.size();
    m.v.assign(n, std::vector<Int>(n, 0));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            if (i == j) {
                detail::Loop copy = loops[i];
                copy.u = loops[i].u + Rat(1, 2);
                Int a = eng.link(loops[i], copy);
                Int b = eng.link(copy, loops[i]);
                if (a != b) throw internal_error("framing count asymmetric");
                m.v[i][j] = a;
            } else {
                m.v[i][j] = eng.link(loops[i], loops[j]);
            }
        }
    }
    if (!m.intersection_unimodular())
        throw internal_error("constructed Seifert matrix has non-unimodular intersection form");
    return m;
}

/// Seifert matrix of the band surface of a braid-word closure (one disk per
/// strand, one band per letter).
inline SeifertMatrix seifert_matrix_from_braid(const BraidWord& b) {
    SeifertMatrix m = seifert_matrix(braid_to_pd(b));
    m.source = SeifertSource::FromBraid;
    return m;
}

}  // namespace knotcert
