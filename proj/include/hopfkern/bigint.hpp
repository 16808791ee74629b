#pragma once

// Arbitrary-precision signed integers on 32-bit limbs.
// Small magnitudes (up to 128 bits) are stored inline; exact linear algebra
// over small structure constants almost never spills to the heap.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <cstring>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

namespace hopfkern {

namespace detail {

// Little-endian limb storage with a 4-limb inline buffer.
class LimbVec {
public:
    static constexpr uint32_t kInline = 4;

    LimbVec() = default;

    LimbVec(const LimbVec& o) { assign(o.data(), o.size_); }

    LimbVec(LimbVec&& o) noexcept {
        if (o.heap_) {
            heap_ = o.heap_;
            cap_ = o.cap_;
            o.heap_ = nullptr;
            o.cap_ = kInline;
        } else {
            std::memcpy(inline_, o.inline_, sizeof(inline_));
        }
        size_ = o.size_;
        o.size_ = 0;
    }

    LimbVec& operator=(const LimbVec& o) {
        if (this != &o) assign(o.data(), o.size_);
        return *this;
    }

    LimbVec& operator=(LimbVec&& o) noexcept {
        if (this == &o) return *this;
        delete[] heap_;
        heap_ = nullptr;
        cap_ = kInline;
        if (o.heap_) {
            heap_ = o.heap_;
            cap_ = o.cap_;
            o.heap_ = nullptr;
            o.cap_ = kInline;
        } else {
            std::memcpy(inline_, o.inline_, sizeof(inline_));
        }
        size_ = o.size_;
        o.size_ = 0;
        return *this;
    }

    ~LimbVec() { delete[] heap_; }

    uint32_t size() const { return size_; }
    bool empty() const { return size_ == 0; }

    uint32_t* data() { return heap_ ? heap_ : inline_; }
    const uint32_t* data() const { return heap_ ? heap_ : inline_; }

    uint32_t operator[](uint32_t i) const { return data()[i]; }
    uint32_t& operator[](uint32_t i) { return data()[i]; }

    void clear() { size_ = 0; }

    void reserve(uint32_t n) {
        if (n <= cap_) return;
        uint32_t newcap = std::max(n, cap_ * 2);
        uint32_t* h = new uint32_t[newcap];
        std::memcpy(h, data(), size_ * sizeof(uint32_t));
        delete[] heap_;
        heap_ = h;
        cap_ = newcap;
    }

    void resize(uint32_t n, uint32_t fill = 0) {
        reserve(n);
        uint32_t* d = data();
        for (uint32_t i = size_; i < n; ++i) d[i] = fill;
        size_ = n;
    }

    void push_back(uint32_t v) {
        reserve(size_ + 1);
        data()[size_++] = v;
    }

    void assign(const uint32_t* src, uint32_t n) {
        reserve(n);
        std::memmove(data(), src, n * sizeof(uint32_t));
        size_ = n;
    }

    // drop high zero limbs
    void trim() {
        uint32_t* d = data();
        while (size_ > 0 && d[size_ - 1] == 0) --size_;
    }

private:
    uint32_t inline_[kInline] = {0, 0, 0, 0};
    uint32_t* heap_ = nullptr;
    uint32_t size_ = 0;
    uint32_t cap_ = kInline;
};

} // namespace detail

class BigInt {
public:
    BigInt() = default;

    BigInt(long long v) {
        if (v == 0) return;
        sign_ = v < 0 ? -1 : 1;
        unsigned long long m = v < 0 ? 0ULL - static_cast<unsigned long long>(v)
                                     : static_cast<unsigned long long>(v);
        while (m != 0) {
            mag_.push_back(static_cast<uint32_t>(m & 0xffffffffULL));
            m >>= 32;
        }
    }

    BigInt(int v) : BigInt(static_cast<long long>(v)) {}
    BigInt(unsigned v) : BigInt(static_cast<long long>(v)) {}
    BigInt(long v) : BigInt(static_cast<long long>(v)) {}
    BigInt(size_t v) {
        if (v == 0) return;
        sign_ = 1;
        unsigned long long m = v;
        while (m != 0) {
            mag_.push_back(static_cast<uint32_t>(m & 0xffffffffULL));
            m >>= 32;
        }
    }

    static BigInt from_string(std::string_view s) {
        if (s.empty()) throw std::invalid_argument("BigInt: empty string");
        int sign = 1;
        size_t i = 0;
        if (s[0] == '-') { sign = -1; i = 1; }
        else if (s[0] == '+') { i = 1; }
        if (i == s.size()) throw std::invalid_argument("BigInt: no digits");
        BigInt r;
        for (; i < s.size(); ++i) {
            if (s[i] < '0' || s[i] > '9')
                throw std::invalid_argument("BigInt: bad digit in '" + std::string(s) + "'");
            r.mul_small_add(10, static_cast<uint32_t>(s[i] - '0'));
        }
        if (!r.mag_.empty()) r.sign_ = sign;
        return r;
    }

    bool is_zero() const { return sign_ == 0; }
    bool is_one() const { return sign_ == 1 && mag_.size() == 1 && mag_[0] == 1; }
    int sign() const { return sign_; }

    bool fits_slonglong() const {
        if (mag_.size() > 2) return false;
        unsigned long long m = abs_u64();
        if (sign_ >= 0) return m <= 0x7fffffffffffffffULL;
        return m <= 0x8000000000000000ULL;
    }

    long long to_slonglong() const {
        if (!fits_slonglong()) throw std::overflow_error("BigInt: out of long long range");
        unsigned long long m = abs_u64();
        return sign_ < 0 ? -static_cast<long long>(m - 1) - 1 : static_cast<long long>(m);
    }

    double to_double() const {
        double r = 0;
        for (uint32_t i = mag_.size(); i-- > 0;) r = r * 4294967296.0 + mag_[i];
        return sign_ < 0 ? -r : r;
    }

    friend BigInt operator-(BigInt a) {
        a.sign_ = -a.sign_;
        return a;
    }

    BigInt abs() const {
        BigInt r = *this;
        if (r.sign_ < 0) r.sign_ = 1;
        return r;
    }

    friend BigInt operator+(const BigInt& a, const BigInt& b) {
        if (a.sign_ == 0) return b;
        if (b.sign_ == 0) return a;
        BigInt r;
        if (a.sign_ == b.sign_) {
            r.sign_ = a.sign_;
            add_mag(a.mag_, b.mag_, r.mag_);
        } else {
            int c = cmp_mag(a.mag_, b.mag_);
            if (c == 0) return BigInt();
            if (c > 0) {
                r.sign_ = a.sign_;
                sub_mag(a.mag_, b.mag_, r.mag_);
            } else {
                r.sign_ = b.sign_;
                sub_mag(b.mag_, a.mag_, r.mag_);
            }
        }
        return r;
    }

    friend BigInt operator-(const BigInt& a, const BigInt& b) { return a + (-b); }

    friend BigInt operator*(const BigInt& a, const BigInt& b) {
        if (a.sign_ == 0 || b.sign_ == 0) return BigInt();
        BigInt r;
        r.sign_ = a.sign_ * b.sign_;
        // word-sized fast path
        if (a.mag_.size() <= 2 && b.mag_.size() <= 2) {
            unsigned __int128 p =
                static_cast<unsigned __int128>(a.abs_u64()) * b.abs_u64();
            while (p != 0) {
                r.mag_.push_back(static_cast<uint32_t>(p & 0xffffffffu));
                p >>= 32;
            }
            return r;
        }
        mul_mag(a.mag_, b.mag_, r.mag_);
        return r;
    }

    // Truncated division (quotient rounds toward zero), matching C semantics.
    static void divmod(const BigInt& a, const BigInt& b, BigInt& q, BigInt& r) {
        if (b.sign_ == 0) throw std::domain_error("BigInt: division by zero");
        if (a.sign_ == 0) { q = BigInt(); r = BigInt(); return; }
        if (a.mag_.size() <= 2 && b.mag_.size() <= 2) {
            unsigned long long ua = a.abs_u64(), ub = b.abs_u64();
            q = BigInt(static_cast<size_t>(ua / ub));
            r = BigInt(static_cast<size_t>(ua % ub));
            q.sign_ = q.mag_.empty() ? 0 : a.sign_ * b.sign_;
            r.sign_ = r.mag_.empty() ? 0 : a.sign_;
            return;
        }
        int c = cmp_mag(a.mag_, b.mag_);
        if (c < 0) { q = BigInt(); r = a; return; }
        q = BigInt();
        r = BigInt();
        divmod_mag(a.mag_, b.mag_, q.mag_, r.mag_);
        q.mag_.trim();
        r.mag_.trim();
        q.sign_ = q.mag_.empty() ? 0 : a.sign_ * b.sign_;
        r.sign_ = r.mag_.empty() ? 0 : a.sign_;
    }

    friend BigInt operator/(const BigInt& a, const BigInt& b) {
        BigInt q, r;
        divmod(a, b, q, r);
        return q;
    }

    friend BigInt operator%(const BigInt& a, const BigInt& b) {
        BigInt q, r;
        divmod(a, b, q, r);
        return r;
    }

    BigInt& operator+=(const BigInt& o) { *this = *this + o; return *this; }
    BigInt& operator-=(const BigInt& o) { *this = *this - o; return *this; }
    BigInt& operator*=(const BigInt& o) { *this = *this * o; return *this; }
    BigInt& operator/=(const BigInt& o) { *this = *this / o; return *this; }
    BigInt& operator%=(const BigInt& o) { *this = *this % o; return *this; }

    friend bool operator==(const BigInt& a, const BigInt& b) {
        if (a.sign_ != b.sign_) return false;
        return cmp_mag(a.mag_, b.mag_) == 0;
    }
    friend bool operator!=(const BigInt& a, const BigInt& b) { return !(a == b); }

    friend bool operator<(const BigInt& a, const BigInt& b) {
        if (a.sign_ != b.sign_) return a.sign_ < b.sign_;
        int c = cmp_mag(a.mag_, b.mag_);
        return a.sign_ >= 0 ? c < 0 : c > 0;
    }
    friend bool operator>(const BigInt& a, const BigInt& b) { return b < a; }
    friend bool operator<=(const BigInt& a, const BigInt& b) { return !(b < a); }
    friend bool operator>=(const BigInt& a, const BigInt& b) { return !(a < b); }

    static BigInt gcd(BigInt a, BigInt b) {
        // word-sized values stay out of the general divmod loop
        if (a.mag_.size() <= 2 && b.mag_.size() <= 2) {
            unsigned long long x = a.abs_u64(), y = b.abs_u64();
            while (y != 0) {
                unsigned long long t = x % y;
                x = y;
                y = t;
            }
            return BigInt(static_cast<size_t>(x));
        }
        a.sign_ = a.sign_ == 0 ? 0 : 1;
        b.sign_ = b.sign_ == 0 ? 0 : 1;
        while (!b.is_zero()) {
            if (a.mag_.size() <= 2 && b.mag_.size() <= 2) return gcd(a, b);
            BigInt q, r;
            divmod(a, b, q, r);
            a = std::move(b);
            b = std::move(r);
        }
        return a;
    }

    static BigInt pow(BigInt base, unsigned long long e) {
        BigInt r(1);
        while (e != 0) {
            if (e & 1) r *= base;
            base *= base;
            e >>= 1;
        }
        return r;
    }

    size_t bit_length() const {
        if (mag_.empty()) return 0;
        uint32_t top = mag_[mag_.size() - 1];
        size_t bits = static_cast<size_t>(mag_.size() - 1) * 32;
        while (top) { ++bits; top >>= 1; }
        return bits;
    }

    // Exact integer square root; throws if the value is not a perfect square.
    static BigInt isqrt_exact(const BigInt& v) {
        if (v.sign_ < 0) throw std::domain_error("BigInt: isqrt of negative");
        if (v.is_zero()) return BigInt();
        // Newton iteration seeded from above: 2^ceil(bits/2) >= sqrt(v)
        BigInt x = BigInt::pow(BigInt(2), (v.bit_length() + 1) / 2);
        for (;;) {
            BigInt next = (x + v / x) / BigInt(2);
            if (next >= x) break;
            x = std::move(next);
        }
        if (x * x != v) throw std::domain_error("BigInt: not a perfect square");
        return x;
    }

    std::string to_string() const {
        if (sign_ == 0) return "0";
        std::string out;
        BigInt t = *this;
        t.sign_ = 1;
        while (!t.is_zero()) {
            uint32_t rem = t.div_small(1000000000u);
            if (t.is_zero()) {
                out = std::to_string(rem) + out;
            } else {
                char buf[16];
                std::snprintf(buf, sizeof buf, "%09u", rem);
                out = buf + out;
            }
        }
        return sign_ < 0 ? "-" + out : out;
    }

    size_t limb_count() const { return mag_.size(); }
    uint32_t limb(size_t i) const { return mag_[static_cast<uint32_t>(i)]; }

private:
    int sign_ = 0;
    detail::LimbVec mag_;

    unsigned long long abs_u64() const {
        unsigned long long m = 0;
        if (mag_.size() >= 2) m = static_cast<unsigned long long>(mag_[1]) << 32;
        if (mag_.size() >= 1) m |= mag_[0];
        return m;
    }

    // *this = *this * f + add, magnitude only (assumes nonnegative)
    void mul_small_add(uint32_t f, uint32_t add) {
        uint64_t carry = add;
        for (uint32_t i = 0; i < mag_.size(); ++i) {
            uint64_t cur = static_cast<uint64_t>(mag_[i]) * f + carry;
            mag_[i] = static_cast<uint32_t>(cur);
            carry = cur >> 32;
        }
        while (carry) {
            mag_.push_back(static_cast<uint32_t>(carry));
            carry >>= 32;
        }
        if (!mag_.empty()) sign_ = 1;
        mag_.trim();
        if (mag_.empty()) sign_ = 0;
    }

    // divide magnitude by small divisor in place, return remainder
    uint32_t div_small(uint32_t d) {
        uint64_t rem = 0;
        for (uint32_t i = mag_.size(); i-- > 0;) {
            uint64_t cur = (rem << 32) | mag_[i];
            mag_[i] = static_cast<uint32_t>(cur / d);
            rem = cur % d;
        }
        mag_.trim();
        if (mag_.empty()) sign_ = 0;
        return static_cast<uint32_t>(rem);
    }

    static int cmp_mag(const detail::LimbVec& a, const detail::LimbVec& b) {
        if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
        for (uint32_t i = a.size(); i-- > 0;) {
            if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
        }
        return 0;
    }

    static void add_mag(const detail::LimbVec& a, const detail::LimbVec& b, detail::LimbVec& out) {
        const detail::LimbVec& hi = a.size() >= b.size() ? a : b;
        const detail::LimbVec& lo = a.size() >= b.size() ? b : a;
        out.resize(hi.size());
        uint64_t carry = 0;
        for (uint32_t i = 0; i < hi.size(); ++i) {
            uint64_t cur = carry + hi[i] + (i < lo.size() ? lo[i] : 0);
            out[i] = static_cast<uint32_t>(cur);
            carry = cur >> 32;
        }
        if (carry) out.push_back(static_cast<uint32_t>(carry));
    }

    // requires |a| >= |b|
    static void sub_mag(const detail::LimbVec& a, const detail::LimbVec& b, detail::LimbVec& out) {
        out.resize(a.size());
        int64_t borrow = 0;
        for (uint32_t i = 0; i < a.size(); ++i) {
            int64_t cur = static_cast<int64_t>(a[i]) - (i < b.size() ? b[i] : 0) - borrow;
            if (cur < 0) { cur += (1LL << 32); borrow = 1; }
            else borrow = 0;
            out[i] = static_cast<uint32_t>(cur);
        }
        out.trim();
    }

    static void mul_mag(const detail::LimbVec& a, const detail::LimbVec& b, detail::LimbVec& out) {
        out.resize(a.size() + b.size(), 0);
        for (uint32_t i = 0; i < a.size(); ++i) {
            uint64_t carry = 0;
            uint64_t ai = a[i];
            if (ai == 0) continue;
            for (uint32_t j = 0; j < b.size(); ++j) {
                uint64_t cur = out[i + j] + ai * b[j] + carry;
                out[i + j] = static_cast<uint32_t>(cur);
                carry = cur >> 32;
            }
            uint32_t k = i + b.size();
            while (carry) {
                uint64_t cur = out[k] + carry;
                out[k] = static_cast<uint32_t>(cur);
                carry = cur >> 32;
                ++k;
            }
        }
        out.trim();
    }

    // Knuth algorithm D; requires |a| >= |b| > 0.
    static void divmod_mag(const detail::LimbVec& a_in, const detail::LimbVec& b_in,
                           detail::LimbVec& q, detail::LimbVec& r) {
        if (b_in.size() == 1) {
            uint32_t d = b_in[0];
            q.resize(a_in.size());
            uint64_t rem = 0;
            for (uint32_t i = a_in.size(); i-- > 0;) {
                uint64_t cur = (rem << 32) | a_in[i];
                q[i] = static_cast<uint32_t>(cur / d);
                rem = cur % d;
            }
            q.trim();
            r.clear();
            if (rem) r.push_back(static_cast<uint32_t>(rem));
            return;
        }

        // normalize so the top limb of the divisor has its high bit set
        int shift = 0;
        {
            uint32_t top = b_in[b_in.size() - 1];
            while (!(top & 0x80000000u)) { top <<= 1; ++shift; }
        }
        detail::LimbVec u, v;
        shl_bits(a_in, shift, u);
        u.push_back(0); // guard limb
        shl_bits(b_in, shift, v);

        uint32_t n = v.size();
        uint32_t m = u.size() - n - 1;
        q.resize(m + 1, 0);
        uint64_t vtop = v[n - 1];
        uint64_t vsec = v[n - 2];

        for (uint32_t j = m + 1; j-- > 0;) {
            uint64_t num = (static_cast<uint64_t>(u[j + n]) << 32) | u[j + n - 1];
            uint64_t qhat = num / vtop;
            uint64_t rhat = num % vtop;
            if (qhat > 0xffffffffULL) { qhat = 0xffffffffULL; rhat = num - qhat * vtop; }
            while (rhat <= 0xffffffffULL &&
                   qhat * vsec > ((rhat << 32) | u[j + n - 2])) {
                --qhat;
                rhat += vtop;
            }
            // multiply-subtract
            int64_t borrow = 0;
            uint64_t carry = 0;
            for (uint32_t i = 0; i < n; ++i) {
                uint64_t p = qhat * v[i] + carry;
                carry = p >> 32;
                int64_t t = static_cast<int64_t>(u[i + j]) - static_cast<int64_t>(p & 0xffffffffULL) - borrow;
                if (t < 0) { t += (1LL << 32); borrow = 1; }
                else borrow = 0;
                u[i + j] = static_cast<uint32_t>(t);
            }
            int64_t t = static_cast<int64_t>(u[j + n]) - static_cast<int64_t>(carry) - borrow;
            if (t < 0) {
                // qhat was one too large; add back
                t += (1LL << 32);
                --qhat;
                uint64_t c2 = 0;
                for (uint32_t i = 0; i < n; ++i) {
                    uint64_t cur = static_cast<uint64_t>(u[i + j]) + v[i] + c2;
                    u[i + j] = static_cast<uint32_t>(cur);
                    c2 = cur >> 32;
                }
                t += static_cast<int64_t>(c2);
            }
            u[j + n] = static_cast<uint32_t>(t);
            q[j] = static_cast<uint32_t>(qhat);
        }

        u.resize(n);
        shr_bits(u, shift, r);
    }

    static void shl_bits(const detail::LimbVec& a, int s, detail::LimbVec& out) {
        out.resize(a.size());
        if (s == 0) {
            out.assign(a.data(), a.size());
            return;
        }
        uint32_t carry = 0;
        for (uint32_t i = 0; i < a.size(); ++i) {
            out[i] = (a[i] << s) | carry;
            carry = static_cast<uint32_t>(static_cast<uint64_t>(a[i]) >> (32 - s));
        }
        if (carry) out.push_back(carry);
    }

    static void shr_bits(const detail::LimbVec& a, int s, detail::LimbVec& out) {
        out.assign(a.data(), a.size());
        if (s != 0) {
            for (uint32_t i = 0; i < out.size(); ++i) {
                uint32_t hi = (i + 1 < out.size()) ? out[i + 1] : 0;
                out[i] = (out[i] >> s) | (hi << (32 - s));
            }
        }
        out.trim();
    }
};

inline std::string to_string(const BigInt& v) { return v.to_string(); }

} // namespace hopfkern
