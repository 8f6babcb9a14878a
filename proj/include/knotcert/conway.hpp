#pragma once

#include "knotcert/laurent.hpp"
#include "knotcert/seifert.hpp"

#include <vector>

namespace knotcert {

/// Conway polynomial of a knot: integer coefficients of even powers of z,
/// constant term 1, determined by nabla(x - 1/x) = Delta(x^2).
struct ConwayPolynomial {
    std::vector<Int> coeff;  // coeff[k] multiplies z^k; odd entries vanish

    long degree() const {
        long d = (long)coeff.size() - 1;
        while (d > 0 && coeff[d] == 0) --d;
        return d;
    }

    bool operator==(const ConwayPolynomial& o) const {
        ConwayPolynomial a = *this, b = o;
        a.coeff.resize(std::max(a.coeff.size(), b.coeff.size()), Int(0));
        b.coeff.resize(a.coeff.size(), Int(0));
        return a.coeff == b.coeff;
    }

    bool all_nonnegative() const {
        for (const auto& c : coeff)
            if (c < 0) return false;
        return true;
    }

    std::string str() const {
        Laurent as_poly;
        for (std::size_t k = 0; k < coeff.size(); ++k) as_poly.add_term(coeff[k], (long)k);
        return as_poly.str("z");
    }

    /// Exact expansion of nabla(x - 1/x) as a Laurent polynomial in x.
    Laurent substituted() const {
        Laurent z = Laurent::from_pairs({{1, Int(1)}, {-1, Int(-1)}});
        Laurent acc, zk = Laurent::one();
        for (std::size_t k = 0; k < coeff.size(); ++k) {
            acc += Laurent::constant(coeff[k]) * zk;
            zk *= z;
        }
        return acc;
    }
};

/// Change of basis from the symmetrized Alexander polynomial: substitute
/// t = x^2 and re-express in powers of z = x - 1/x, top term first.  Any
/// residue (odd powers, leftover tail) indicates a broken symmetrization and
/// raises an internal error.
inline ConwayPolynomial conway_from_laurent(const Laurent& delta) {
    Laurent rem = delta.stretched(2);  // Delta(x^2)
    ConwayPolynomial out;
    Laurent z = Laurent::from_pairs({{1, Int(1)}, {-1, Int(-1)}});
    while (!rem.is_zero()) {
        long m = rem.max_exp();
        if (m < 0) throw internal_error("Conway substitution left a residue");
        if (m == 0) {
            if (rem != Laurent::constant(rem.coeff(0)))
                throw internal_error("Conway substitution left a residue");
            if ((long)out.coeff.size() < 1) out.coeff.resize(1, Int(0));
            out.coeff[0] = rem.coeff(0);
            break;
        }
        if (m % 2 != 0) throw internal_error("odd power in Conway substitution");
        Int c = rem.coeff(m);
        if ((long)out.coeff.size() < m + 1) out.coeff.resize(m + 1, Int(0));
        out.coeff[m] = c;
        Laurent zm = Laurent::one();
        for (long k = 0; k < m; ++k) zm *= z;
        rem -= Laurent::constant(c) * zm;
    }
    if (out.coeff.empty() || out.coeff[0] != 1)
        throw internal_error("Conway polynomial must have constant term 1");
    return out;
}

inline ConwayPolynomial conway_from_seifert(const SeifertMatrix& m) {
    return conway_from_laurent(alexander_from_seifert(m));
}

/// d(K): span of the Alexander polynomial once normalized to have no
/// negative exponents.
inline long degree_d(const Laurent& p) {
    if (p.is_zero()) throw input_error("degree of the zero polynomial");
    return p.span();
}

}  // namespace knotcert
