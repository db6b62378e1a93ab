#pragma once

#include <string>

#include "plr/error.hpp"
#include "plr/rational.hpp"

namespace plr {

// Exact representation of a sum of logarithms of positive rationals, stored
// multiplicatively: the value is log(mantissa).  Addition is mantissa
// multiplication, integer scaling is an integer power, and the sign of the
// represented real is the exact comparison of the mantissa with 1.  A decimal
// approximation exists for display only.
struct LogValue {
    Rational mantissa{1};

    LogValue() = default;
    explicit LogValue(Rational m) : mantissa(std::move(m)) {
        if (mantissa <= 0) fail(Errc::precondition, "LogValue mantissa must be positive");
    }

    static LogValue zero() { return LogValue(); }
    static LogValue log_of(const Rational& r) { return LogValue(r); }

    // sign of log(mantissa): -1, 0, +1
    int sign() const { return mantissa < 1 ? -1 : (mantissa == 1 ? 0 : 1); }

    bool is_zero() const { return mantissa == 1; }

    LogValue operator+(const LogValue& o) const {
        Rational m = mantissa * o.mantissa;
        check_bits(m);
        return LogValue(std::move(m));
    }
    LogValue operator-(const LogValue& o) const {
        Rational m = mantissa / o.mantissa;
        check_bits(m);
        return LogValue(std::move(m));
    }
    LogValue& operator+=(const LogValue& o) {
        mantissa *= o.mantissa;
        check_bits(mantissa);
        return *this;
    }

    // k * log(mantissa), k may be negative
    LogValue scaled(long k) const {
        unsigned long a = k < 0 ? static_cast<unsigned long>(-k) : static_cast<unsigned long>(k);
        Rational p = pow_ui(mantissa, a);
        check_bits(p);
        return LogValue(k < 0 ? Rational(1 / p) : p);
    }

    // |log(mantissa)|
    LogValue abs() const { return mantissa < 1 ? LogValue(Rational(1 / mantissa)) : *this; }

    double approx() const { return approx_log(mantissa); }

    friend bool operator==(const LogValue& a, const LogValue& b) { return a.mantissa == b.mantissa; }
    friend bool operator<(const LogValue& a, const LogValue& b) { return a.mantissa < b.mantissa; }
    friend bool operator<=(const LogValue& a, const LogValue& b) { return a.mantissa <= b.mantissa; }
};

inline std::string to_string(const LogValue& v) {
    return "log(" + to_string(v.mantissa) + ")";
}

} // namespace plr
