#pragma once

// The cyclotomic field Q(zeta_N) on the power basis 1, zeta, ..., zeta^(phi(N)-1),
// reduced modulo the N-th cyclotomic polynomial. Representation is unique, so
// equality of elements is coefficientwise equality.

#include <cassert>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include "hopfkern/rational.hpp"

namespace hopfkern {

namespace poly {

// dense polynomials over Q, little-endian coefficients, no trailing zeros
using QPoly = std::vector<Rational>;

inline void trim(QPoly& p) {
    while (!p.empty() && p.back().is_zero()) p.pop_back();
}

inline QPoly mul(const QPoly& a, const QPoly& b) {
    if (a.empty() || b.empty()) return {};
    QPoly r(a.size() + b.size() - 1);
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i].is_zero()) continue;
        for (size_t j = 0; j < b.size(); ++j) {
            if (b[j].is_zero()) continue;
            r[i + j] += a[i] * b[j];
        }
    }
    trim(r);
    return r;
}

// exact division; throws if the remainder is nonzero
inline QPoly div_exact(QPoly a, const QPoly& b) {
    if (b.empty()) throw std::domain_error("poly: division by zero");
    QPoly q(a.size() >= b.size() ? a.size() - b.size() + 1 : 0);
    while (a.size() >= b.size()) {
        Rational c = a.back() / b.back();
        size_t shift = a.size() - b.size();
        q[shift] = c;
        for (size_t i = 0; i < b.size(); ++i) a[shift + i] -= c * b[i];
        trim(a);
        if (!a.empty() && a.size() >= b.size() && a.back().is_zero()) trim(a);
    }
    if (!a.empty()) throw std::domain_error("poly: division not exact");
    trim(q);
    return q;
}

inline QPoly rem(QPoly a, const QPoly& b) {
    while (a.size() >= b.size()) {
        Rational c = a.back() / b.back();
        size_t shift = a.size() - b.size();
        for (size_t i = 0; i < b.size(); ++i) a[shift + i] -= c * b[i];
        trim(a);
    }
    return a;
}

} // namespace poly

class CycloField {
public:
    explicit CycloField(unsigned order) : order_(order) {
        if (order == 0) throw std::invalid_argument("CycloField: order must be >= 1");
        modulus_ = cyclotomic_poly(order);
        degree_ = modulus_.size() - 1;
        build_power_table();
    }

    unsigned order() const { return order_; }
    size_t degree() const { return degree_; }

    // coefficients of Phi_N, little-endian, monic
    const poly::QPoly& modulus() const { return modulus_; }

    // zeta^k reduced mod Phi_N, any k >= 0
    const std::vector<Rational>& zeta_power(size_t k) const {
        if (k >= power_table_.size()) k %= order_;
        return power_table_[k];
    }

    static poly::QPoly cyclotomic_poly(unsigned n) {
        // divide x^n - 1 by Phi_d for proper divisors d of n
        poly::QPoly p(n + 1);
        p[0] = Rational(-1);
        p[n] = Rational(1);
        for (unsigned d = 1; d < n; ++d) {
            if (n % d != 0) continue;
            p = poly::div_exact(std::move(p), cyclotomic_poly(d));
        }
        return p;
    }

private:
    unsigned order_;
    size_t degree_;
    poly::QPoly modulus_;
    std::vector<std::vector<Rational>> power_table_; // zeta^k coords, k < max(order, 2*degree-1)

    void build_power_table() {
        size_t count = std::max<size_t>(order_, 2 * degree_ > 0 ? 2 * degree_ - 1 : 1);
        power_table_.resize(count);
        std::vector<Rational> cur(degree_);
        cur[0] = Rational(1);
        power_table_[0] = cur;
        for (size_t k = 1; k < count; ++k) {
            // multiply by x, reduce by modulus
            std::vector<Rational> next(degree_);
            Rational top = cur[degree_ - 1];
            for (size_t i = degree_ - 1; i > 0; --i) next[i] = cur[i - 1];
            next[0] = Rational();
            if (!top.is_zero()) {
                for (size_t i = 0; i < degree_; ++i) next[i] -= top * modulus_[i];
            }
            power_table_[k] = next;
            cur = std::move(next);
        }
    }
};

using FieldPtr = std::shared_ptr<const CycloField>;

// An element of Q(zeta_N). Holds a non-owning pointer to its field; fields are
// owned by the algebra objects and outlive all elements derived from them.
class FieldElem {
public:
    FieldElem() : field_(nullptr) {}

    FieldElem(const CycloField* field, std::vector<Rational> coeffs)
        : field_(field), c_(std::move(coeffs)) {
        assert(c_.size() == field_->degree());
    }

    static FieldElem zero(const CycloField* f) {
        return FieldElem(f, std::vector<Rational>(f->degree()));
    }

    static FieldElem one(const CycloField* f) { return from_rational(f, Rational(1)); }

    static FieldElem from_rational(const CycloField* f, Rational r) {
        std::vector<Rational> c(f->degree());
        c[0] = std::move(r);
        return FieldElem(f, std::move(c));
    }

    static FieldElem from_int(const CycloField* f, long long v) {
        return from_rational(f, Rational(v));
    }

    static FieldElem zeta_pow(const CycloField* f, size_t k) {
        return FieldElem(f, f->zeta_power(k % f->order()));
    }

    static FieldElem zeta(const CycloField* f) { return zeta_pow(f, 1); }

    const CycloField& field() const { return *field_; }
    const CycloField* field_ptr() const { return field_; }
    const std::vector<Rational>& coeffs() const { return c_; }

    bool is_zero() const {
        for (const auto& x : c_)
            if (!x.is_zero()) return false;
        return true;
    }

    bool is_one() const {
        if (c_.empty() || !c_[0].is_one()) return false;
        for (size_t i = 1; i < c_.size(); ++i)
            if (!c_[i].is_zero()) return false;
        return true;
    }

    bool is_rational() const {
        for (size_t i = 1; i < c_.size(); ++i)
            if (!c_[i].is_zero()) return false;
        return true;
    }

    // the rational part; throws unless the element is rational
    const Rational& rational_value() const {
        if (!is_rational()) throw std::domain_error("FieldElem: not rational");
        return c_[0];
    }

    friend FieldElem operator-(FieldElem a) {
        for (auto& x : a.c_) x = -x;
        return a;
    }

    friend FieldElem operator+(const FieldElem& a, const FieldElem& b) {
        a.check_same_field(b);
        FieldElem r = a;
        for (size_t i = 0; i < r.c_.size(); ++i) r.c_[i] += b.c_[i];
        return r;
    }

    friend FieldElem operator-(const FieldElem& a, const FieldElem& b) {
        a.check_same_field(b);
        FieldElem r = a;
        for (size_t i = 0; i < r.c_.size(); ++i) r.c_[i] -= b.c_[i];
        return r;
    }

    friend FieldElem operator*(const FieldElem& a, const FieldElem& b) {
        a.check_same_field(b);
        size_t d = a.c_.size();
        const CycloField* f = a.field_;
        // convolution, then fold exponents >= degree through the power table
        std::vector<Rational> conv(2 * d > 0 ? 2 * d - 1 : 1);
        for (size_t i = 0; i < d; ++i) {
            if (a.c_[i].is_zero()) continue;
            for (size_t j = 0; j < d; ++j) {
                if (b.c_[j].is_zero()) continue;
                conv[i + j] += a.c_[i] * b.c_[j];
            }
        }
        std::vector<Rational> out(d);
        for (size_t k = 0; k < d; ++k) out[k] = std::move(conv[k]);
        for (size_t k = d; k < conv.size(); ++k) {
            if (conv[k].is_zero()) continue;
            const auto& red = f->zeta_power(k);
            for (size_t i = 0; i < d; ++i) {
                if (!red[i].is_zero()) out[i] += conv[k] * red[i];
            }
        }
        return FieldElem(f, std::move(out));
    }

    FieldElem inverse() const {
        if (is_zero()) throw std::domain_error("FieldElem: inverse of zero");
        // extended Euclid against the modulus
        poly::QPoly a(c_.begin(), c_.end());
        poly::trim(a);
        poly::QPoly r0 = field_->modulus(), r1 = a;
        poly::QPoly s0 = {}, s1 = {Rational(1)};
        while (!r1.empty()) {
            // r0 = q*r1 + r2
            poly::QPoly q;
            poly::QPoly rem = r0;
            q.assign(rem.size() >= r1.size() ? rem.size() - r1.size() + 1 : 0, Rational());
            while (rem.size() >= r1.size() && !rem.empty()) {
                Rational c = rem.back() / r1.back();
                size_t shift = rem.size() - r1.size();
                q[shift] += c;
                for (size_t i = 0; i < r1.size(); ++i) rem[shift + i] -= c * r1[i];
                poly::trim(rem);
            }
            poly::QPoly s2 = s0;
            {
                poly::QPoly qs = poly::mul(q, s1);
                if (s2.size() < qs.size()) s2.resize(qs.size());
                for (size_t i = 0; i < qs.size(); ++i) s2[i] -= qs[i];
                poly::trim(s2);
            }
            r0 = std::move(r1);
            r1 = std::move(rem);
            s0 = std::move(s1);
            s1 = std::move(s2);
        }
        // r0 = gcd (a nonzero constant since the modulus is irreducible)
        if (r0.size() != 1)
            throw std::domain_error("FieldElem: modulus not coprime to element");
        std::vector<Rational> inv(field_->degree());
        for (size_t i = 0; i < s0.size() && i < inv.size(); ++i) inv[i] = s0[i] / r0[0];
        return FieldElem(field_, std::move(inv));
    }

    friend FieldElem operator/(const FieldElem& a, const FieldElem& b) {
        return a * b.inverse();
    }

    FieldElem& operator+=(const FieldElem& o) { *this = *this + o; return *this; }
    FieldElem& operator-=(const FieldElem& o) { *this = *this - o; return *this; }
    FieldElem& operator*=(const FieldElem& o) { *this = *this * o; return *this; }
    FieldElem& operator/=(const FieldElem& o) { *this = *this / o; return *this; }

    friend bool operator==(const FieldElem& a, const FieldElem& b) {
        return a.field_->order() == b.field_->order() && a.c_ == b.c_;
    }
    friend bool operator!=(const FieldElem& a, const FieldElem& b) { return !(a == b); }

    // the field automorphism zeta -> zeta^m, gcd(m, N) = 1
    FieldElem galois(unsigned m) const {
        const CycloField* f = field_;
        unsigned n = f->order();
        std::vector<Rational> out(f->degree());
        for (size_t k = 0; k < c_.size(); ++k) {
            if (c_[k].is_zero()) continue;
            const auto& img = f->zeta_power((k * static_cast<size_t>(m)) % n);
            for (size_t i = 0; i < out.size(); ++i) {
                if (!img[i].is_zero()) out[i] += c_[k] * img[i];
            }
        }
        return FieldElem(f, std::move(out));
    }

    // complex conjugation: zeta -> zeta^(N-1)
    FieldElem conj() const {
        unsigned n = field_->order();
        if (n <= 2) return *this;
        return galois(n - 1);
    }

    FieldElem pow(unsigned e) const {
        FieldElem r = one(field_);
        FieldElem base = *this;
        while (e != 0) {
            if (e & 1) r *= base;
            base *= base;
            e >>= 1;
        }
        return r;
    }

    std::vector<std::string> to_strings() const {
        std::vector<std::string> out;
        out.reserve(c_.size());
        for (const auto& x : c_) out.push_back(x.to_string());
        return out;
    }

    static FieldElem from_strings(const CycloField* f, const std::vector<std::string>& s) {
        if (s.size() != f->degree())
            throw std::invalid_argument("FieldElem: expected " + std::to_string(f->degree()) +
                                        " coefficients, got " + std::to_string(s.size()));
        std::vector<Rational> c;
        c.reserve(s.size());
        for (const auto& x : s) c.push_back(Rational::from_string(x));
        return FieldElem(f, std::move(c));
    }

    // compact human-readable form, e.g. "1/2 - z^2"
    std::string to_string() const {
        std::string out;
        for (size_t k = 0; k < c_.size(); ++k) {
            if (c_[k].is_zero()) continue;
            std::string term = c_[k].to_string();
            bool neg = term[0] == '-';
            if (neg) term = term.substr(1);
            if (k > 0) {
                if (term == "1") term.clear();
                else term += "*";
                term += k == 1 ? "z" : "z^" + std::to_string(k);
            }
            if (out.empty()) out = neg ? "-" + term : term;
            else out += (neg ? " - " : " + ") + term;
        }
        return out.empty() ? "0" : out;
    }

private:
    const CycloField* field_;
    std::vector<Rational> c_;

    void check_same_field(const FieldElem& o) const {
        if (field_->order() != o.field_->order())
            throw std::domain_error("FieldElem: mixed cyclotomic orders " +
                                    std::to_string(field_->order()) + " and " +
                                    std::to_string(o.field_->order()));
    }
};

inline std::string to_string(const FieldElem& v) { return v.to_string(); }

} // namespace hopfkern
