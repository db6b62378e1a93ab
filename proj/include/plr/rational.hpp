#pragma once

#include <gmpxx.h>

#include <atomic>
#include <cmath>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "plr/error.hpp"

namespace plr {

// All arithmetic in the library is exact.  Rational is GMP's canonical
// rational (always lowest terms, denominator > 0); no floating point ever
// enters a decision path.
using Rational = mpq_class;
using Integer = mpz_class;

// Optional global cap on operand size.  Iterated products can grow without
// bound; past the cap we fail loudly instead of grinding or approximating.
inline std::atomic<std::size_t>& bit_budget() {
    static std::atomic<std::size_t> budget{1u << 22};
    return budget;
}

inline void set_bit_budget(std::size_t bits) { bit_budget().store(bits); }

inline void check_bits(const Rational& r) {
    std::size_t n = mpz_sizeinbase(r.get_num_mpz_t(), 2) + mpz_sizeinbase(r.get_den_mpz_t(), 2);
    if (n > bit_budget().load(std::memory_order_relaxed))
        fail(Errc::resource_exhausted, "rational exceeds bit budget (" + std::to_string(n) + " bits)");
}

inline Rational make_rational(long num, long den = 1) {
    if (den == 0) fail(Errc::parse_error, "zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

// Grammar: -?[0-9]+(/[1-9][0-9]*)?
inline Rational parse_rational(std::string_view s) {
    auto bad = [&]() -> Rational { fail(Errc::parse_error, "bad rational literal '" + std::string(s) + "'"); };
    if (s.empty()) return bad();
    std::size_t i = 0;
    if (s[i] == '-') ++i;
    std::size_t num_begin = i;
    while (i < s.size() && s[i] >= '0' && s[i] <= '9') ++i;
    if (i == num_begin) return bad();
    std::string num(s.substr(0, i));
    std::string den = "1";
    if (i < s.size()) {
        if (s[i] != '/') return bad();
        ++i;
        if (i >= s.size() || s[i] < '1' || s[i] > '9') return bad(); // no 1/0, no leading zero
        std::size_t den_begin = i;
        while (i < s.size() && s[i] >= '0' && s[i] <= '9') ++i;
        if (i != s.size()) return bad();
        den = std::string(s.substr(den_begin));
    }
    Rational r(num + "/" + den);
    r.canonicalize();
    return r;
}

inline std::string to_string(const Rational& r) {
    return r.get_str();
}

// r^n for n >= 0, exact.
inline Rational pow_ui(const Rational& r, unsigned long n) {
    Rational out;
    mpz_pow_ui(out.get_num_mpz_t(), r.get_num_mpz_t(), n);
    mpz_pow_ui(out.get_den_mpz_t(), r.get_den_mpz_t(), n);
    // num/den coprime => powers coprime; sign stays on the numerator
    return out;
}

inline int sign(const Rational& r) { return sgn(r); }

inline Rational abs_of(const Rational& r) { return r < 0 ? Rational(-r) : r; }

// Display-only double approximation, robust to huge numerators/denominators.
inline double approx_double(const Rational& r) {
    signed long ne = 0, de = 0;
    double nd = mpz_get_d_2exp(&ne, r.get_num_mpz_t());
    double dd = mpz_get_d_2exp(&de, r.get_den_mpz_t());
    if (dd == 0.0) return 0.0;
    return std::ldexp(nd / dd, static_cast<int>(ne - de));
}

// log(r) for r > 0 as a double, display-only.
inline double approx_log(const Rational& r) {
    signed long ne = 0, de = 0;
    double nd = mpz_get_d_2exp(&ne, r.get_num_mpz_t());
    double dd = mpz_get_d_2exp(&de, r.get_den_mpz_t());
    constexpr double ln2 = 0.6931471805599453;
    return std::log(nd) - std::log(dd) + ln2 * static_cast<double>(ne - de);
}

// Closed interval with exact rational endpoints.  lo <= hi; degenerate
// intervals are permitted only where an operation explicitly allows them.
struct Interval {
    Rational lo, hi;

    Interval() = default;
    Interval(Rational l, Rational h) : lo(std::move(l)), hi(std::move(h)) {
        if (lo > hi) fail(Errc::precondition, "interval endpoints out of order");
    }

    bool degenerate() const { return lo == hi; }
    Rational length() const { return hi - lo; }
    bool contains(const Rational& x) const { return lo <= x && x <= hi; }
    bool contains_strictly(const Rational& x) const { return lo < x && x < hi; }
    bool contains(const Interval& other) const { return lo <= other.lo && other.hi <= hi; }

    friend bool operator==(const Interval& a, const Interval& b) { return a.lo == b.lo && a.hi == b.hi; }
    friend bool operator<(const Interval& a, const Interval& b) {
        if (a.lo != b.lo) return a.lo < b.lo;
        return a.hi < b.hi;
    }
};

inline bool closed_intersects(const Interval& a, const Interval& b) {
    return a.lo <= b.hi && b.lo <= a.hi;
}

inline std::string to_string(const Interval& iv) {
    return "[" + to_string(iv.lo) + ", " + to_string(iv.hi) + "]";
}

} // namespace plr
