#pragma once

#include "knotcert/braid.hpp"

#include <array>
#include <cstddef>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace knotcert {

/// One crossing of an oriented planar diagram.  arc[0..3] are edge labels in
/// counterclockwise order starting at the incoming under-strand, so
/// arc[0] = under-in, arc[2] = under-out, and the over-strand occupies
/// arc[1], arc[3].  sign is the usual crossing sign; with this slot
/// convention a crossing is positive exactly when the over-strand runs
/// arc[3] -> arc[1].
struct Crossing {
    std::array<long, 4> arc{};
    int sign = 0;

    long under_in() const { return arc[0]; }
    long under_out() const { return arc[2]; }
    long over_in() const { return sign > 0 ? arc[3] : arc[1]; }
    long over_out() const { return sign > 0 ? arc[1] : arc[3]; }
};

/// Planar-diagram code of an oriented knot.  Edges are labeled 1..2c
/// consecutively along the orientation (successor of x is x mod 2c + 1).
struct PDCode {
    std::vector<Crossing> crossings;

    long crossing_count() const { return static_cast<long>(crossings.size()); }
    long edge_count() const { return 2 * crossing_count(); }

    long next_edge(long x) const { return x % edge_count() + 1; }

    std::string str() const {
        std::ostringstream os;
        bool first = true;
        for (const auto& x : crossings) {
            if (!first) os << "  ";
            first = false;
            os << x.arc[0] << " " << x.arc[1] << " " << x.arc[2] << " " << x.arc[3];
        }
        return os.str();
    }
};

inline bool is_positive_diagram(const PDCode& d) {
    for (const auto& x : d.crossings)
        if (x.sign != 1) return false;
    return true;  // vacuously true for the 0-crossing unknot
}

namespace detail {

// Union-find over 0-based ids.
class DisjointSets {
public:
    explicit DisjointSets(std::size_t n) : parent_(n) {
        std::iota(parent_.begin(), parent_.end(), 0);
    }
    std::size_t find(std::size_t a) {
        while (parent_[a] != a) a = parent_[a] = parent_[parent_[a]];
        return a;
    }
    void unite(std::size_t a, std::size_t b) { parent_[find(a)] = find(b); }

private:
    std::vector<std::size_t> parent_;
};

// Number of components of the underlying (unoriented) curve: edges are joined
// through each crossing along the under pair {arc0, arc2} and the over pair
// {arc1, arc3}.  Needs only the raw tuples, no orientation data.
inline int pd_component_count(const std::vector<Crossing>& xs, long edges) {
    if (edges == 0) return 1;
    DisjointSets ds(static_cast<std::size_t>(edges));
    for (const auto& x : xs) {
        ds.unite(static_cast<std::size_t>(x.arc[0] - 1), static_cast<std::size_t>(x.arc[2] - 1));
        ds.unite(static_cast<std::size_t>(x.arc[1] - 1), static_cast<std::size_t>(x.arc[3] - 1));
    }
    int comps = 0;
    for (long e = 0; e < edges; ++e)
        if (ds.find(static_cast<std::size_t>(e)) == static_cast<std::size_t>(e)) ++comps;
    return comps;
}

}  // namespace detail

/// Validate tuple structure, infer crossing signs from the consecutive edge
/// numbering, and check planarity.  Throws input_error on any violation.
inline void validate_pd(PDCode& d) {
    const long c = d.crossing_count();
    if (c == 0) return;  // unknot presentation
    const long ne = d.edge_count();

    std::vector<int> count(static_cast<std::size_t>(ne), 0);
    for (const auto& x : d.crossings)
        for (long lbl : x.arc) {
            if (lbl < 1 || lbl > ne) {
                std::ostringstream os;
                os << "arc label " << lbl << " out of range 1.." << ne;
                throw input_error(os.str());
            }
            ++count[static_cast<std::size_t>(lbl - 1)];
        }
    for (long e = 1; e <= ne; ++e)
        if (count[static_cast<std::size_t>(e - 1)] != 2) {
            std::ostringstream os;
            os << "arc label " << e << " appears " << count[static_cast<std::size_t>(e - 1)]
               << " times; every arc must appear exactly twice";
            throw input_error(os.str());
        }

    int comps = detail::pd_component_count(d.crossings, ne);
    if (comps != 1) {
        std::ostringstream os;
        os << "diagram has " << comps << " components; knots only";
        throw input_error(os.str());
    }

    // Infer the over-strand direction at each crossing.  With consecutive
    // labels the over-out edge must be next(over-in); a 1-crossing kink is
    // ambiguous at this level and is settled by head/tail bookkeeping below.
    std::vector<int> head(static_cast<std::size_t>(ne), 0), tail(static_cast<std::size_t>(ne), 0);
    for (auto& x : d.crossings) {
        if (d.next_edge(x.arc[0]) != x.arc[2])
            throw input_error("under-strand arcs are not consecutive along the orientation");
        long b = x.arc[1], dd = x.arc[3];
        bool b_to_d = d.next_edge(b) == dd;
        bool d_to_b = d.next_edge(dd) == b;
        if (b_to_d && d_to_b) {
            // only possible when 2c == 2; the under-in slot already consumed
            // one head, the over-in must be the other edge's head
            b_to_d = (b != x.arc[0]);
            d_to_b = !b_to_d;
        }
        if (b_to_d == d_to_b)
            throw input_error("cannot orient over-strand: arc labels not consecutive along the orientation");
        x.sign = d_to_b ? 1 : -1;
    }
    for (const auto& x : d.crossings) {
        ++head[static_cast<std::size_t>(x.arc[0] - 1)];
        ++tail[static_cast<std::size_t>(x.arc[2] - 1)];
        ++head[static_cast<std::size_t>(x.over_in() - 1)];
        ++tail[static_cast<std::size_t>(x.over_out() - 1)];
    }
    for (long e = 1; e <= ne; ++e)
        if (head[static_cast<std::size_t>(e - 1)] != 1 || tail[static_cast<std::size_t>(e - 1)] != 1)
            throw input_error("inconsistent orientation: every arc needs one head and one tail");

    // Planarity via Euler's formula on the rotation system: faces are orbits
    // of end -> ccw-next end at the far side of the edge.
    std::map<long, std::vector<long>> ends;  // label -> end ids (4*ci + slot)
    for (long ci = 0; ci < c; ++ci)
        for (int s = 0; s < 4; ++s) ends[d.crossings[static_cast<std::size_t>(ci)].arc[static_cast<std::size_t>(s)]].push_back(4 * ci + s);
    std::vector<long> mate(static_cast<std::size_t>(4 * c));
    for (auto& [lbl, es] : ends) {
        if (es.size() != 2) throw internal_error("edge-end bookkeeping");
        mate[static_cast<std::size_t>(es[0])] = es[1];
        mate[static_cast<std::size_t>(es[1])] = es[0];
    }
    std::vector<bool> seen(static_cast<std::size_t>(4 * c), false);
    long faces = 0;
    for (long e0 = 0; e0 < 4 * c; ++e0) {
        if (seen[static_cast<std::size_t>(e0)]) continue;
        ++faces;
        long e = e0;
        while (!seen[static_cast<std::size_t>(e)]) {
            seen[static_cast<std::size_t>(e)] = true;
            long m = mate[static_cast<std::size_t>(e)];
            e = (m / 4) * 4 + (m % 4 + 1) % 4;
        }
    }
    if (faces != c + 2) {
        std::ostringstream os;
        os << "diagram is not planar (rotation system yields " << faces << " faces, expected "
           << c + 2 << ")";
        throw input_error(os.str());
    }
}

/// Parse a PD code given as a flat whitespace-separated list of 4k arc
/// labels (one quadruple per crossing; an empty list is the unknot).
inline PDCode parse_pd(const std::string& text) {
    std::istringstream is(text);
    std::vector<long> toks;
    std::string t;
    while (is >> t) {
        try {
            std::size_t used = 0;
            toks.push_back(std::stol(t, &used));
            if (used != t.size()) throw input_error("malformed arc label '" + t + "'");
        } catch (const input_error&) {
            throw;
        } catch (const std::exception&) {
            throw input_error("malformed arc label '" + t + "'");
        }
    }
    if (toks.size() % 4 != 0)
        throw input_error("PD text must contain a multiple of 4 arc labels");
    PDCode d;
    for (std::size_t i = 0; i < toks.size(); i += 4) {
        Crossing x;
        for (int s = 0; s < 4; ++s) x.arc[static_cast<std::size_t>(s)] = toks[i + static_cast<std::size_t>(s)];
        d.crossings.push_back(x);
    }
    validate_pd(d);
    return d;
}

/// PD code of the braid closure; one crossing per letter, positive letters
/// become positive crossings.
inline PDCode braid_to_pd(const BraidWord& b) {
    if (!b.closes_to_knot()) throw input_error("braid closure is not a knot");
    const long n = b.strands;
    const long c = static_cast<long>(b.letters.size());
    PDCode d;
    if (c == 0) return d;  // unknot

    // Segment (p, l): strand position p in 1..n between levels l and l+1,
    // levels mod c via the closure.  Merge segments not separated by a letter.
    auto seg_id = [&](long p, long l) { return (l % c) * n + (p - 1); };
    detail::DisjointSets ds(static_cast<std::size_t>(n * c));
    for (long l = 0; l < c; ++l) {
        int i = b.letters[static_cast<std::size_t>(l)].index;
        for (long p = 1; p <= n; ++p)
            if (p != i && p != i + 1) ds.unite(static_cast<std::size_t>(seg_id(p, l)), static_cast<std::size_t>(seg_id(p, l + 1)));
    }

    // Crossing tuples in segment-class ids, plus the knot successor map.
    struct RawX {
        long a, bb, cc, dd;
        int sign;
    };
    std::vector<RawX> raw;
    std::map<long, long> succ;  // knot-successor on segment classes
    auto rep = [&](long p, long l) { return static_cast<long>(ds.find(static_cast<std::size_t>(seg_id(p, l)))); };
    for (long l = 0; l < c; ++l) {
        const auto& letter = b.letters[static_cast<std::size_t>(l)];
        long i = letter.index;
        long inL = rep(i, l), inR = rep(i + 1, l);
        long outL = rep(i, l + 1), outR = rep(i + 1, l + 1);
        RawX x{};
        x.sign = letter.sign;
        if (letter.sign > 0) {
            // under-in = left-in, over runs right-in -> left-out
            x.a = inL;
            x.bb = outL;
            x.cc = outR;
            x.dd = inR;
            succ[inL] = outR;  // under
            succ[inR] = outL;  // over
        } else {
            x.a = inR;
            x.bb = inL;
            x.cc = outL;
            x.dd = outR;
            succ[inR] = outL;  // under
            succ[inL] = outR;  // over
        }
        raw.push_back(x);
    }

    // Relabel edges 1..2c along the knot, starting from strand 1 at level 0.
    std::map<long, long> label;
    long cur = rep(1, 0);
    for (long k = 1; k <= 2 * c; ++k) {
        if (label.count(cur)) throw internal_error("braid closure traversal revisited an edge");
        label[cur] = k;
        auto it = succ.find(cur);
        if (it == succ.end()) throw internal_error("braid closure traversal left the diagram");
        cur = it->second;
    }
    if (cur != rep(1, 0) || static_cast<long>(label.size()) != 2 * c)
        throw internal_error("braid closure traversal did not close up");

    for (const auto& x : raw) {
        Crossing out;
        out.arc = {label.at(x.a), label.at(x.bb), label.at(x.cc), label.at(x.dd)};
        out.sign = x.sign;
        d.crossings.push_back(out);
    }

    PDCode check = d;
    validate_pd(check);
    for (std::size_t k = 0; k < d.crossings.size(); ++k)
        if (check.crossings[k].sign != d.crossings[k].sign)
            throw internal_error("braid_to_pd sign inference mismatch");
    return d;
}

/// Mirror image: every crossing sign flips; at the tuple level the slots
/// rotate so the old over-in becomes the new under-in.
inline PDCode mirror(const PDCode& d) {
    PDCode m;
    for (const auto& x : d.crossings) {
        Crossing y;
        if (x.sign > 0) {
            y.arc = {x.arc[3], x.arc[0], x.arc[1], x.arc[2]};
            y.sign = -1;
        } else {
            y.arc = {x.arc[1], x.arc[2], x.arc[3], x.arc[0]};
            y.sign = 1;
        }
        m.crossings.push_back(y);
    }
    if (!m.crossings.empty()) {
        PDCode check = m;
        validate_pd(check);
        for (std::size_t k = 0; k < m.crossings.size(); ++k)
            if (check.crossings[k].sign != m.crossings[k].sign)
                throw internal_error("mirror sign inference mismatch");
    }
    return m;
}

}  // namespace knotcert
