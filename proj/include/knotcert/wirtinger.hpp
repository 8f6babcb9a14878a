#pragma once

#include "knotcert/laurent.hpp"
#include "knotcert/pd.hpp"
#include "knotcert/polymat.hpp"
#include "knotcert/ratpoly.hpp"

#include <algorithm>
#include <map>
#include <vector>

namespace knotcert {

/// Wirtinger presentation of the knot group: one generator per arc of the
/// diagram (maximal over-strand run), one relator per crossing.  Words are
/// stored as (generator, exponent) pairs with exponent +-1.
struct WirtingerPresentation {
    int generator_count = 0;
    std::vector<std::vector<std::pair<int, int>>> relators;

    /// Exponent sum of a relator after killing all generator distinctions;
    /// zero for every relator exactly when the abelianization is infinite
    /// cyclic on one generator.
    static int abelianized_exponent_sum(const std::vector<std::pair<int, int>>& w) {
        int s = 0;
        for (const auto& [g, e] : w) {
            (void)g;
            s += e;
        }
        return s;
    }
};

/// Arc labeling of a diagram: arcs are edges merged through over-passes.
/// Returns arc index per edge label (1-based edges -> 0-based arcs).
inline std::vector<int> pd_arcs(const PDCode& d) {
    const long ne = d.edge_count();
    detail::DisjointSets ds(static_cast<std::size_t>(ne));
    for (const auto& x : d.crossings)
        ds.unite(static_cast<std::size_t>(x.over_in() - 1), static_cast<std::size_t>(x.over_out() - 1));
    std::map<std::size_t, int> number;
    std::vector<int> arc(static_cast<std::size_t>(ne), -1);
    for (long e = 0; e < ne; ++e) {
        std::size_t r = ds.find(static_cast<std::size_t>(e));
        auto it = number.find(r);
        if (it == number.end()) it = number.emplace(r, static_cast<int>(number.size())).first;
        arc[static_cast<std::size_t>(e)] = it->second;
    }
    return arc;
}

/// Wirtinger presentation from a diagram with at least one crossing.  At a
/// crossing with sign e, under-in arc u, under-out arc v and over arc o the
/// relator is o^e u o^-e v^-1.
inline WirtingerPresentation wirtinger(const PDCode& d) {
    if (d.crossing_count() == 0)
        throw input_error("wirtinger presentation needs at least one crossing; handle the unknot separately");
    auto arc = pd_arcs(d);
    WirtingerPresentation w;
    w.generator_count = 1 + *std::max_element(arc.begin(), arc.end());
    if (w.generator_count != static_cast<int>(d.crossing_count()))
        throw internal_error("arc count does not match crossing count");
    for (const auto& x : d.crossings) {
        int u = arc[static_cast<std::size_t>(x.under_in() - 1)];
        int v = arc[static_cast<std::size_t>(x.under_out() - 1)];
        int o = arc[static_cast<std::size_t>(x.over_in() - 1)];
        int e = x.sign;
        std::vector<std::pair<int, int>> r{{o, e}, {u, 1}, {o, -e}, {v, -1}};
        w.relators.push_back(std::move(r));
    }
    return w;
}

/// Alexander matrix over Z[t,1/t] via the free differential calculus,
/// abelianizing every generator to t: a letter g^+1 at abelianized prefix
/// t^s contributes t^s to column g, a letter g^-1 contributes -t^(s-1).
inline std::vector<std::vector<Laurent>> alexander_matrix(const WirtingerPresentation& w) {
    std::vector<std::vector<Laurent>> m(
        w.relators.size(), std::vector<Laurent>(static_cast<std::size_t>(w.generator_count)));
    for (std::size_t r = 0; r < w.relators.size(); ++r) {
        long s = 0;
        for (const auto& [g, e] : w.relators[r]) {
            if (e == 1) {
                m[r][static_cast<std::size_t>(g)].add_term(Int(1), s);
                s += 1;
            } else {
                m[r][static_cast<std::size_t>(g)].add_term(Int(-1), s - 1);
                s -= 1;
            }
        }
    }
    return m;
}

/// Alexander polynomial via Fox calculus: strike one row and one column of
/// the Alexander matrix, take the determinant, symmetrize.  Serves as the
/// oracle against the Seifert-matrix route.
inline Laurent alexander_from_fox(const WirtingerPresentation& w) {
    const std::size_t n = static_cast<std::size_t>(w.generator_count);
    if (w.relators.size() != n) throw input_error("presentation is not deficiency-balanced");
    auto m = alexander_matrix(w);
    // Any single row and column can be struck; try a few in case a degenerate
    // choice hits an identically-zero minor.
    for (std::size_t drop = 0; drop < n; ++drop) {
        std::vector<std::vector<Laurent>> minor;
        for (std::size_t i = 0; i < n; ++i) {
            if (i == n - 1) continue;  // strike the last relator
            std::vector<Laurent> row;
            for (std::size_t j = 0; j < n; ++j)
                if (j != drop) row.push_back(m[i][j]);
            minor.push_back(std::move(row));
        }
        Laurent det = laurent_det_up_to_units(minor);
        if (!det.is_zero()) return alexander_normalize(det);
    }
    throw input_error("degenerate presentation: all Alexander minors vanish");
}

/// Invariant factors of the rational Alexander module straight from the full
/// Fox matrix: its Smith form over Q[t] is diag(f1,...,f_{n-1}, 0), the zero
/// being the free summand of the relative module.  Test oracle for the
/// Seifert-matrix route.
inline std::vector<RatPoly> fox_invariant_factors(const WirtingerPresentation& w) {
    auto m = alexander_matrix(w);
    PolyMatrix pm(m.size());
    for (std::size_t i = 0; i < m.size(); ++i) {
        long shift = 0;
        for (const auto& e : m[i])
            if (!e.is_zero()) shift = std::min(shift, e.min_exp());
        for (const auto& e : m[i]) pm[i].push_back(RatPoly::from_laurent(e.shifted(-shift), false));
    }
    auto diag = smith_diagonal(std::move(pm));
    std::vector<RatPoly> factors;
    int zeros = 0;
    for (const auto& p : diag) {
        if (p.is_zero()) {
            ++zeros;
        } else if (p.degree() > 0) {
            // strip stray t^k unit factors introduced by the row shifts
            RatPoly q = p;
            while (q.degree() > 0 && q.coeff(0) == 0)
                q = RatPoly::divexact(q, RatPoly::monomial(Rat(1), 1));
            if (q.degree() > 0) factors.push_back(q.monic());
        }
    }
    if (zeros != 1) throw internal_error("fox module: expected exactly one free summand");
    return factors;
}

}  // namespace knotcert
