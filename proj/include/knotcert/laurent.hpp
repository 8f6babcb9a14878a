#pragma once

#include <gmpxx.h>

#include <cstdlib>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace knotcert {

using Int = mpz_class;
using Rat = mpq_class;

/// Integer-coefficient Laurent polynomial in one variable, kept in canonical
/// form: no zero coefficients are stored.
class Laurent {
public:
    Laurent() = default;

    static Laurent zero() { return Laurent{}; }

    static Laurent one() { return constant(1); }

    static Laurent constant(Int c) {
        Laurent p;
        if (c != 0) p.coeffs_[0] = std::move(c);
        return p;
    }

    /// c * t^e
    static Laurent term(Int c, long e) {
        Laurent p;
        if (c != 0) p.coeffs_[e] = std::move(c);
        return p;
    }

    static Laurent from_pairs(const std::vector<std::pair<long, Int>>& ps) {
        Laurent p;
        for (const auto& [e, c] : ps) p.add_term(c, e);
        return p;
    }

    bool is_zero() const { return coeffs_.empty(); }

    bool is_one() const {
        return coeffs_.size() == 1 && coeffs_.begin()->first == 0 &&
               coeffs_.begin()->second == 1;
    }

    long min_exp() const {
        if (is_zero()) throw std::logic_error("min_exp of zero polynomial");
        return coeffs_.begin()->first;
    }

    long max_exp() const {
        if (is_zero()) throw std::logic_error("max_exp of zero polynomial");
        return coeffs_.rbegin()->first;
    }

    /// Exponent span max - min; this is d(K) for a normalized Alexander polynomial.
    long span() const { return is_zero() ? 0 : max_exp() - min_exp(); }

    Int coeff(long e) const {
        auto it = coeffs_.find(e);
        return it == coeffs_.end() ? Int(0) : it->second;
    }

    Int leading_coeff() const { return is_zero() ? Int(0) : coeffs_.rbegin()->second; }

    const std::map<long, Int>& terms() const { return coeffs_; }

    void add_term(const Int& c, long e) {
        if (c == 0) return;
        auto it = coeffs_.find(e);
        if (it == coeffs_.end()) {
            coeffs_.emplace(e, c);
        } else {
            it->second += c;
            if (it->second == 0) coeffs_.erase(it);
        }
    }

    Laurent operator-() const {
        Laurent r(*this);
        for (auto& [e, c] : r.coeffs_) c = -c;
        return r;
    }

    Laurent& operator+=(const Laurent& o) {
        for (const auto& [e, c] : o.coeffs_) add_term(c, e);
        return *this;
    }

    Laurent& operator-=(const Laurent& o) {
        for (const auto& [e, c] : o.coeffs_) add_term(-c, e);
        return *this;
    }

    friend Laurent operator+(Laurent a, const Laurent& b) { return a += b; }
    friend Laurent operator-(Laurent a, const Laurent& b) { return a -= b; }

    friend Laurent operator*(const Laurent& a, const Laurent& b) {
        Laurent r;
        for (const auto& [ea, ca] : a.coeffs_)
            for (const auto& [eb, cb] : b.coeffs_) r.add_term(ca * cb, ea + eb);
        return r;
    }

    Laurent& operator*=(const Laurent& o) { return *this = *this * o; }

    /// Multiply by t^k.
    Laurent shifted(long k) const {
        Laurent r;
        for (const auto& [e, c] : coeffs_) r.coeffs_[e + k] = c;
        return r;
    }

    /// Substitute t -> t^-1.
    Laurent inverted() const {
        Laurent r;
        for (const auto& [e, c] : coeffs_) r.coeffs_[-e] = c;
        return r;
    }

    /// Substitute t -> t^k for k >= 1.
    Laurent stretched(long k) const {
        Laurent r;
        for (const auto& [e, c] : coeffs_) r.coeffs_[e * k] = c;
        return r;
    }

    Rat eval(const Rat& x) const {
        if (is_zero()) return Rat(0);
        if (x == 0) throw std::domain_error("evaluating Laurent polynomial at 0");
        // Horner on the ordinary-polynomial representative, then shift back.
        long lo = min_exp();
        Rat acc(0);
        long prev = max_exp();
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
            for (long k = prev; k > it->first; --k) acc *= x;
            acc += Rat(it->second);
            prev = it->first;
        }
        Rat xs(1);
        Rat xa = x;
        long n = std::labs(lo);
        for (long k = 0; k < n; ++k) xs *= xa;
        if (lo > 0) acc *= xs;
        if (lo < 0) acc /= xs;
        return acc;
    }

    Int eval_int(const Int& x) const {
        if (!is_zero() && min_exp() < 0) throw std::domain_error("negative exponents");
        Int acc(0);
        long prev = is_zero() ? 0 : max_exp();
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
            for (long k = prev; k > it->first; --k) acc *= x;
            acc += it->second;
            prev = it->first;
        }
        for (long k = prev; k > 0; --k) acc *= x;
        return acc;
    }

    bool operator==(const Laurent& o) const { return coeffs_ == o.coeffs_; }
    bool operator!=(const Laurent& o) const { return !(*this == o); }

    /// True iff coeff(e) == coeff(-e) for all e.
    bool is_symmetric() const {
        for (const auto& [e, c] : coeffs_)
            if (coeff(-e) != c) return false;
        return true;
    }

    /// The representative with no negative exponents and nonzero constant term.
    Laurent no_negative_rep() const {
        if (is_zero()) return *this;
        return shifted(-min_exp());
    }

    /// Canonical text form, descending exponents: "t^2 - t + 1 - t^-1 + t^-2".
    std::string str(const std::string& var = "t") const {
        if (is_zero()) return "0";
        std::ostringstream os;
        bool first = true;
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
            const long e = it->first;
            const Int& c = it->second;
            if (first) {
                if (c < 0) os << "-";
                first = false;
            } else {
                os << (c < 0 ? " - " : " + ");
            }
            Int a = abs(c);
            if (a != 1 || e == 0) os << a.get_str();
            if (e != 0) {
                if (a != 1) os << "*";
                os << var;
                if (e != 1) os << "^" << e;
            }
        }
        return os.str();
    }

private:
    std::map<long, Int> coeffs_;
};

/// Normalize an Alexander-polynomial candidate to the symmetric representative
/// taking value exactly 1 at t = 1.  The input must satisfy p(1) = +-1 and
/// have even exponent span; both hold for det(V - tV^T) of a genuine Seifert
/// matrix and for Fox-calculus outputs on knot presentations.
inline Laurent alexander_normalize(const Laurent& p) {
    if (p.is_zero()) throw std::domain_error("cannot normalize the zero polynomial");
    long lo = p.min_exp(), hi = p.max_exp();
    if ((lo + hi) % 2 != 0)
        throw std::domain_error("odd exponent span: not a knot Alexander polynomial");
    Laurent q = p.shifted(-(lo + hi) / 2);
    Rat at1 = q.eval(Rat(1));
    if (at1 == 1) {
    } else if (at1 == -1) {
        q = -q;
    } else {
        throw std::domain_error("polynomial does not take value +-1 at t=1");
    }
    if (!q.is_symmetric())
        throw std::domain_error("normalized polynomial is not symmetric");
    return q;
}

}  // namespace knotcert
