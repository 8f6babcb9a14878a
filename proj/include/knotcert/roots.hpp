#pragma once

#include "knotcert/braid.hpp"
#include "knotcert/laurent.hpp"
#include "knotcert/ratpoly.hpp"

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

namespace knotcert {

/// a = 1/(1-q) when that is an integer outside {0,1}, i.e. q = (a-1)/a.
inline std::optional<Int> root_form_witness(const Rat& q) {
    if (q == 1) return std::nullopt;
    Rat a = Rat(1) / (Rat(1) - q);
    if (a.get_den() != 1) return std::nullopt;
    Int ai(a.get_num());
    if (ai == 0 || ai == 1) return std::nullopt;
    return ai;
}

struct RationalRoot {
    Rat value;
    std::optional<Int> witness;  // the integer a with value = (a-1)/a
};

struct RationalRootReport {
    std::vector<RationalRoot> roots;  // ascending, each verified by evaluation
};

namespace detail {

inline std::vector<Int> positive_divisors(Int n) {
    if (n < 0) n = -n;
    std::vector<Int> out;
    for (Int d(1); d * d <= n; ++d) {
        if (n % d != 0) continue;
        out.push_back(d);
        if (d * d != n) out.push_back(n / d);
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace detail

/// All rational roots of p by the rational root theorem applied to the
/// no-negative-exponent representative, each candidate verified exactly.
inline RationalRootReport rational_roots(const Laurent& p) {
    if (p.is_zero()) throw input_error("rational_roots of the zero polynomial");
    RationalRootReport rep;
    Laurent q = p.no_negative_rep();
    if (q.span() == 0) return rep;  // nonzero constant
    // strip t^0-coefficient zero case is impossible after no_negative_rep,
    // but a zero constant term would mean a root at 0 with denominator-free
    // candidates breaking down; the representative always has coeff(0) != 0.
    Int c0 = q.coeff(0), lead = q.leading_coeff();
    for (const Int& num : detail::positive_divisors(c0)) {
        for (const Int& den : detail::positive_divisors(lead)) {
            for (int sgn : {1, -1}) {
                Rat cand(sgn > 0 ? num : Int(-num), den);
                cand.canonicalize();
                if (q.eval(cand) == 0) {
                    bool dup = false;
                    for (const auto& r : rep.roots) dup = dup || r.value == cand;
                    if (!dup) rep.roots.push_back({cand, root_form_witness(cand)});
                }
            }
        }
    }
    std::sort(rep.roots.begin(), rep.roots.end(),
              [](const RationalRoot& a, const RationalRoot& b) { return a.value < b.value; });
    return rep;
}

struct PrimePowerReport {
    bool is_prime_power = false;  // |lead| = p^k (k >= 1) or |lead| = 1
    bool is_one = false;          // |lead| = 1, the monic branch
    Int prime = 0;
    unsigned exponent = 0;
    Int leading = 0;
};

/// Is |leading coefficient| a prime power?  Leading coefficient 1 passes as
/// the monic branch and is reported separately.
inline PrimePowerReport leading_coeff_prime_power(const Laurent& p) {
    if (p.is_zero()) throw input_error("leading coefficient of the zero polynomial");
    PrimePowerReport rep;
    Int lead = abs(p.leading_coeff());
    rep.leading = p.leading_coeff();
    if (lead == 1) {
        rep.is_prime_power = true;
        rep.is_one = true;
        return rep;
    }
    Int rest = lead;
    for (Int d(2); d * d <= rest && d < 1000000; ++d) {
        if (rest % d != 0) continue;
        rep.prime = d;
        while (rest % d == 0) {
            rest /= d;
            ++rep.exponent;
        }
        break;
    }
    if (rep.exponent == 0) {
        // no small factor: the number itself must be a prime power
        mpz_class r = rest;
        if (mpz_probab_prime_p(r.get_mpz_t(), 40) > 0) {
            rep.prime = rest;
            rep.exponent = 1;
            rep.is_prime_power = true;
            return rep;
        }
        if (mpz_perfect_power_p(r.get_mpz_t())) {
            for (unsigned long k = 2; k <= mpz_sizeinbase(r.get_mpz_t(), 2); ++k) {
                mpz_class root;
                if (mpz_root(root.get_mpz_t(), r.get_mpz_t(), k) != 0 &&
                    mpz_probab_prime_p(root.get_mpz_t(), 40) > 0) {
                    rep.prime = root;
                    rep.exponent = (unsigned)k;
                    rep.is_prime_power = true;
                    return rep;
                }
            }
        }
        return rep;  // composite with at least two prime factors
    }
    if (rest == 1) {
        rep.is_prime_power = true;
        return rep;
    }
    return rep;  // a second prime divides
}

enum class Endpoint { NegInfinity, Finite, PosInfinity };

struct IntervalEnd {
    Endpoint kind = Endpoint::NegInfinity;
    Rat value;

    static IntervalEnd neg_inf() { return {Endpoint::NegInfinity, Rat(0)}; }
    static IntervalEnd pos_inf() { return {Endpoint::PosInfinity, Rat(0)}; }
    static IntervalEnd at(const Rat& v) { return {Endpoint::Finite, v}; }
};

namespace detail {

inline int sign_of(const Rat& x) { return x > 0 ? 1 : (x < 0 ? -1 : 0); }

inline int sign_at(const RatPoly& p, const IntervalEnd& e) {
    if (p.is_zero()) return 0;
    switch (e.kind) {
        case Endpoint::Finite:
            return sign_of(p.eval(e.value));
        case Endpoint::PosInfinity:
            return sign_of(p.leading());
        case Endpoint::NegInfinity:
            return (p.degree() % 2 == 0) ? sign_of(p.leading()) : -sign_of(p.leading());
    }
    return 0;
}

inline int sturm_variations(const std::vector<RatPoly>& chain, const IntervalEnd& e) {
    int var = 0, prev = 0;
    for (const auto& p : chain) {
        int s = sign_at(p, e);
        if (s == 0) continue;
        if (prev != 0 && s != prev) ++var;
        prev = s;
    }
    return var;
}

}  // namespace detail

/// Exact count of distinct real roots of p in the open interval (lo, hi),
/// via a Sturm chain on the square-free part.
inline long sturm_real_root_count(const Laurent& p, IntervalEnd lo, IntervalEnd hi) {
    if (p.is_zero()) throw input_error("sturm_real_root_count of the zero polynomial");
    // the no-negative-exponent representative has a nonzero constant term, so
    // it does not acquire a spurious root at 0
    RatPoly f = RatPoly::from_laurent(p).square_free_part();
    if (f.degree() <= 0) return 0;
    // open interval: endpoint roots are excluded, so peel them off
    for (const IntervalEnd* e : {&lo, &hi}) {
        if (e->kind != Endpoint::Finite) continue;
        RatPoly lin(std::vector<Rat>{-e->value, Rat(1)});
        while (f.degree() >= 1 && f.eval(e->value) == 0) f = RatPoly::divexact(f, lin);
    }
    if (f.degree() <= 0) return 0;

    std::vector<RatPoly> chain{f, f.derivative()};
    while (!chain.back().is_zero()) {
        const RatPoly& a = chain[chain.size() - 2];
        const RatPoly& b = chain.back();
        RatPoly r = RatPoly::divmod(a, b).second;
        chain.push_back(-r);
    }
    chain.pop_back();
    long count = detail::sturm_variations(chain, lo) - detail::sturm_variations(chain, hi);
    if (count < 0) throw internal_error("negative Sturm count");
    return count;
}

/// Divisibility of Laurent polynomials over Q: q = p * r for some Laurent
/// polynomial r with rational coefficients.
inline bool divides(const Laurent& p, const Laurent& q) {
    if (p.is_zero()) throw input_error("division by the zero polynomial");
    if (q.is_zero()) return true;
    RatPoly pp = RatPoly::from_laurent(p);
    RatPoly qq = RatPoly::from_laurent(q);
    return RatPoly::divides(pp, qq);
}

}  // namespace knotcert
