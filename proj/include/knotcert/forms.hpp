#pragma once

#include "knotcert/laurent.hpp"
#include "knotcert/polymat.hpp"
#include "knotcert/ratpoly.hpp"
#include "knotcert/roots.hpp"
#include "knotcert/seifert.hpp"

#include <optional>
#include <string>
#include <vector>

namespace knotcert {

/// The symmetric form V + V^T.
inline std::vector<std::vector<Int>> symmetric_form(const SeifertMatrix& m) {
    const std::size_t n = m.v.size();
    std::vector<std::vector<Int>> s(n, std::vector<Int>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) s[i][j] = m.v[i][j] + m.v[j][i];
    return s;
}

/// Signature of the symmetric form V + V^T by exact congruence
/// diagonalization over Q.  Even for knots.
inline long signature(const SeifertMatrix& m) {
    const std::size_t n = m.v.size();
    auto sym = symmetric_form(m);
    std::vector<std::vector<Rat>> a(n, std::vector<Rat>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) a[i][j] = Rat(sym[i][j]);
    if (rat_det(a) == 0)
        throw internal_error("V + V^T is singular; impossible when det(V - V^T) = 1");

    long sig = 0;
    std::size_t k = 0;
    while (k < n) {
        if (a[k][k] == 0) {
            // bring a nonzero entry onto the diagonal: prefer a later row with
            // nonzero diagonal, else use a hyperbolic pair via row+col addition
            std::size_t piv = k;
            while (piv < n && a[piv][piv] == 0) ++piv;
            if (piv < n) {
                std::swap(a[k], a[piv]);
                for (std::size_t i = 0; i < n; ++i) std::swap(a[i][k], a[i][piv]);
            } else {
                std::size_t j = k + 1;
                while (j < n && a[k][j] == 0) ++j;
                if (j == n) throw internal_error("symmetric reduction stalled on singular block");
                for (std::size_t t = 0; t < n; ++t) a[k][t] += a[j][t];
                for (std::size_t t = 0; t < n; ++t) a[t][k] += a[t][j];
            }
            continue;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            if (a[i][k] == 0) continue;
            Rat f = a[i][k] / a[k][k];
            for (std::size_t t = 0; t < n; ++t) a[i][t] -= f * a[k][t];
            for (std::size_t t = 0; t < n; ++t) a[t][i] -= f * a[t][k];
        }
        sig += a[k][k] > 0 ? 1 : -1;
        ++k;
    }
    if (sig % 2 != 0) throw internal_error("odd signature for a knot form");
    return sig;
}

/// |sigma| >= d - 2, the signature-versus-degree criterion.  Both arguments
/// carry knot parity and must be even.
inline bool signature_bound_check(long sigma, long d) {
    if (sigma % 2 != 0) throw input_error("signature of a knot is even");
    if (d < 0 || d % 2 != 0) throw input_error("degree of a knot Alexander polynomial is even");
    return std::abs(sigma) >= d - 2;
}

/// Invariant factors of the rational Alexander module, from the Smith normal
/// form of the presentation matrix tV - V^T over Q[t].  Monic, each dividing
/// the next, units dropped.
struct ModuleInvariantFactors {
    std::vector<RatPoly> factors;

    bool operator==(const ModuleInvariantFactors& o) const { return factors == o.factors; }
};

inline ModuleInvariantFactors invariant_factors(const SeifertMatrix& m) {
    const std::size_t n = m.v.size();
    {
        std::vector<std::vector<Rat>> vq(n, std::vector<Rat>(n));
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) vq[i][j] = Rat(m.v[i][j]);
        if (n > 0 && rat_det(std::move(vq)) == 0)
            throw input_error("nonsingular Seifert matrix required for the rational Alexander module");
    }
    PolyMatrix pm(n, std::vector<RatPoly>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            pm[i][j] = RatPoly(std::vector<Rat>{-Rat(m.v[j][i]), Rat(m.v[i][j])});
    auto diag = smith_diagonal(std::move(pm));
    ModuleInvariantFactors out;
    for (const auto& p : diag) {
        if (p.is_zero())
            throw internal_error("singular presentation of a torsion module");
        if (p.degree() > 0) out.factors.push_back(p.monic());
    }
    return out;
}

/// Torsion modules over Q[t,1/t] are isomorphic exactly when their invariant
/// factor lists coincide.
inline bool modules_isomorphic(const ModuleInvariantFactors& a, const ModuleInvariantFactors& b) {
    return a == b;
}

/// A one-dimensional invariant isotropic subspace exists iff the Alexander
/// polynomial has a rational root.
inline bool one_dim_isotropic_exists(const Laurent& delta) {
    return !rational_roots(delta).roots.empty();
}

struct PremiseRecord {
    std::string name;
    bool passed = false;
    std::string value;
};

/// Q-anisotropy certificate for a positive knot: no rational roots of Delta
/// rules out invariant isotropic lines, and |sigma| >= d - 2 rules out
/// dimension two and higher.  Positivity itself is the caller's premise.
struct AnisotropyVerdict {
    bool certified = false;
    PremiseRecord no_rational_roots;
    PremiseRecord signature_bound;
};

inline AnisotropyVerdict anisotropy_certificate(const Laurent& delta, long sigma) {
    AnisotropyVerdict v;
    auto rr = rational_roots(delta);
    v.no_rational_roots.name = "no-rational-roots";
    v.no_rational_roots.passed = rr.roots.empty();
    {
        std::string s = "roots = {";
        for (std::size_t i = 0; i < rr.roots.size(); ++i)
            s += (i ? ", " : "") + rr.roots[i].value.get_str();
        v.no_rational_roots.value = s + "}";
    }
    long d = delta.span();
    v.signature_bound.name = "signature-bound";
    v.signature_bound.passed = signature_bound_check(sigma, d);
    v.signature_bound.value =
        "|" + std::to_string(sigma) + "| vs d - 2 = " + std::to_string(d - 2);
    v.certified = v.no_rational_roots.passed && v.signature_bound.passed;
    return v;
}

}  // namespace knotcert
