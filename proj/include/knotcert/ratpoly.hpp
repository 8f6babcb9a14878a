#pragma once

#include "knotcert/laurent.hpp"

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace knotcert {

/// Dense univariate polynomial over Q, coefficient of t^i at index i.
/// Workhorse for exact division, gcd, Sturm chains and Smith normal form.
class RatPoly {
public:
    RatPoly() = default;

    explicit RatPoly(std::vector<Rat> cs) : c_(std::move(cs)) { trim(); }

    static RatPoly zero() { return RatPoly{}; }

    static RatPoly constant(const Rat& r) {
        RatPoly p;
        if (r != 0) p.c_ = {r};
        return p;
    }

    static RatPoly monomial(const Rat& r, std::size_t deg) {
        RatPoly p;
        if (r != 0) {
            p.c_.assign(deg + 1, Rat(0));
            p.c_[deg] = r;
        }
        return p;
    }

    /// Ordinary polynomial from a Laurent polynomial.  By default the
    /// no-negative-exponent representative is taken (min exponent shifted to
    /// 0), which is right wherever only roots or divisibility up to units
    /// matter; with shift_ok = false the exponents are used as they are.
    static RatPoly from_laurent(const Laurent& p, bool shift_ok = true) {
        if (p.is_zero()) return {};
        Laurent q = p;
        if (shift_ok) {
            q = p.no_negative_rep();
        } else if (p.min_exp() < 0) {
            throw std::domain_error("Laurent polynomial has negative exponents");
        }
        RatPoly r;
        r.c_.assign(static_cast<std::size_t>(q.max_exp()) + 1, Rat(0));
        for (const auto& [e, c] : q.terms()) r.c_[static_cast<std::size_t>(e)] = Rat(c);
        return r;
    }

    Laurent to_laurent_scaled() const {
        // Clear denominators and content; used where only the unit class matters.
        Laurent r;
        if (is_zero()) return r;
        Int den(1);
        for (const auto& q : c_) den = ::lcm(den, Int(q.get_den()));
        Int g(0);
        std::vector<Int> zs(c_.size());
        for (std::size_t i = 0; i < c_.size(); ++i) {
            zs[i] = Int(c_[i].get_num() * (den / c_[i].get_den()));
            g = ::gcd(g, zs[i]);
        }
        for (std::size_t i = 0; i < c_.size(); ++i)
            if (zs[i] != 0) r.add_term(zs[i] / g, static_cast<long>(i));
        return r;
    }

    bool is_zero() const { return c_.empty(); }

    long degree() const { return is_zero() ? -1 : static_cast<long>(c_.size()) - 1; }

    const Rat& leading() const {
        if (is_zero()) throw std::logic_error("leading coefficient of zero");
        return c_.back();
    }

    Rat coeff(std::size_t i) const { return i < c_.size() ? c_[i] : Rat(0); }

    const std::vector<Rat>& coeffs() const { return c_; }

    bool operator==(const RatPoly& o) const { return c_ == o.c_; }
    bool operator!=(const RatPoly& o) const { return !(*this == o); }

    RatPoly operator-() const {
        RatPoly r(*this);
        for (auto& q : r.c_) q = -q;
        return r;
    }

    friend RatPoly operator+(const RatPoly& a, const RatPoly& b) {
        RatPoly r;
        r.c_.assign(std::max(a.c_.size(), b.c_.size()), Rat(0));
        for (std::size_t i = 0; i < r.c_.size(); ++i) r.c_[i] = a.coeff(i) + b.coeff(i);
        r.trim();
        return r;
    }

    friend RatPoly operator-(const RatPoly& a, const RatPoly& b) { return a + (-b); }

    friend RatPoly operator*(const RatPoly& a, const RatPoly& b) {
        if (a.is_zero() || b.is_zero()) return {};
        RatPoly r;
        r.c_.assign(a.c_.size() + b.c_.size() - 1, Rat(0));
        for (std::size_t i = 0; i < a.c_.size(); ++i)
            for (std::size_t j = 0; j < b.c_.size(); ++j) r.c_[i + j] += a.c_[i] * b.c_[j];
        r.trim();
        return r;
    }

    RatPoly& operator+=(const RatPoly& o) { return *this = *this + o; }
    RatPoly& operator-=(const RatPoly& o) { return *this = *this - o; }
    RatPoly& operator*=(const RatPoly& o) { return *this = *this * o; }

    RatPoly scaled(const Rat& s) const {
        if (s == 0) return {};
        RatPoly r(*this);
        for (auto& q : r.c_) q *= s;
        return r;
    }

    RatPoly monic() const {
        if (is_zero()) return {};
        return scaled(Rat(1) / leading());
    }

    /// Quotient and remainder of Euclidean division.
    static std::pair<RatPoly, RatPoly> divmod(const RatPoly& a, const RatPoly& b) {
        if (b.is_zero()) throw std::domain_error("polynomial division by zero");
        RatPoly rem = a, quo;
        quo.c_.assign(a.c_.size(), Rat(0));
        while (!rem.is_zero() && rem.degree() >= b.degree()) {
            long shift = rem.degree() - b.degree();
            Rat f = rem.leading() / b.leading();
            quo.c_[static_cast<std::size_t>(shift)] += f;
            // rem -= f * t^shift * b
            for (std::size_t i = 0; i < b.c_.size(); ++i)
                rem.c_[i + static_cast<std::size_t>(shift)] -= f * b.c_[i];
            rem.trim();
        }
        quo.trim();
        return {quo, rem};
    }

    /// Exact division; throws if the remainder is nonzero.
    static RatPoly divexact(const RatPoly& a, const RatPoly& b) {
        auto [q, r] = divmod(a, b);
        if (!r.is_zero()) throw std::logic_error("inexact polynomial division");
        return q;
    }

    static bool divides(const RatPoly& a, const RatPoly& b) {
        if (a.is_zero()) return b.is_zero();
        if (b.is_zero()) return true;
        return divmod(b, a).second.is_zero();
    }

    static RatPoly gcd(RatPoly a, RatPoly b) {
        while (!b.is_zero()) {
            RatPoly r = divmod(a, b).second;
            a = std::move(b);
            b = std::move(r);
        }
        return a.is_zero() ? a : a.monic();
    }

    RatPoly derivative() const {
        if (c_.size() <= 1) return {};
        RatPoly r;
        r.c_.assign(c_.size() - 1, Rat(0));
        for (std::size_t i = 1; i < c_.size(); ++i) r.c_[i - 1] = c_[i] * Rat(static_cast<long>(i));
        r.trim();
        return r;
    }

    RatPoly square_free_part() const {
        if (is_zero()) return {};
        if (degree() == 0) return constant(1);
        RatPoly g = gcd(*this, derivative());
        return divexact(*this, g).monic();
    }

    Rat eval(const Rat& x) const {
        Rat acc(0);
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
        return acc;
    }

    std::string str(const std::string& var = "t") const {
        if (is_zero()) return "0";
        std::ostringstream os;
        bool first = true;
        for (std::size_t k = c_.size(); k-- > 0;) {
            if (c_[k] == 0) continue;
            Rat a = abs(c_[k]);
            if (first) {
                if (c_[k] < 0) os << "-";
                first = false;
            } else {
                os << (c_[k] < 0 ? " - " : " + ");
            }
            if (a != 1 || k == 0) os << a.get_str();
            if (k != 0) {
                if (a != 1) os << "*";
                os << var;
                if (k != 1) os << "^" << k;
            }
        }
        return os.str();
    }

private:
    void trim() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }

    std::vector<Rat> c_;
};

}  // namespace knotcert
