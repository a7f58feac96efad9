#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>

namespace moessner {

/// Arbitrary-precision natural number. Every quantity in the sieve, the
/// triangles, and the identity checks is a Nat; arithmetic is exact at any
/// magnitude. Subtraction is checked: going below zero throws.
class Nat {
public:
    Nat() = default;
    Nat(unsigned int v) : value_(v) {}
    Nat(unsigned long v) : value_(v) {}
    Nat(unsigned long long v) : value_(v) {}
    Nat(int v) : Nat(static_cast<long long>(v)) {}
    Nat(long v) : Nat(static_cast<long long>(v)) {}
    Nat(long long v) {
        if (v < 0) {
            throw std::invalid_argument("Nat: negative value " + std::to_string(v));
        }
        value_ = v;
    }

    /// Parses a plain decimal string (digits only, any length).
    static Nat from_decimal(std::string_view text);

    bool is_zero() const { return value_.is_zero(); }

    std::string str() const { return value_.str(); }

    Nat& operator+=(const Nat& rhs) {
        value_ += rhs.value_;
        return *this;
    }
    Nat& operator*=(const Nat& rhs) {
        value_ *= rhs.value_;
        return *this;
    }
    Nat& operator-=(const Nat& rhs) {
        if (value_ < rhs.value_) {
            throw std::underflow_error("Nat: subtraction underflow, " + str() + " - " +
                                       rhs.str());
        }
        value_ -= rhs.value_;
        return *this;
    }
    Nat& operator++() {
        ++value_;
        return *this;
    }

    friend Nat operator+(Nat lhs, const Nat& rhs) { return lhs += rhs; }
    friend Nat operator-(Nat lhs, const Nat& rhs) { return lhs -= rhs; }
    friend Nat operator*(Nat lhs, const Nat& rhs) { return lhs *= rhs; }

    friend bool operator==(const Nat& a, const Nat& b) { return a.value_ == b.value_; }
    friend bool operator!=(const Nat& a, const Nat& b) { return a.value_ != b.value_; }
    friend bool operator<(const Nat& a, const Nat& b) { return a.value_ < b.value_; }
    friend bool operator<=(const Nat& a, const Nat& b) { return a.value_ <= b.value_; }
    friend bool operator>(const Nat& a, const Nat& b) { return a.value_ > b.value_; }
    friend bool operator>=(const Nat& a, const Nat& b) { return a.value_ >= b.value_; }

    /// Exact base^exponent by square-and-multiply. pow(0, 0) is 1.
    friend Nat pow(const Nat& base, const Nat& exponent);

    friend std::ostream& operator<<(std::ostream& os, const Nat& n);

private:
    boost::multiprecision::cpp_int value_;
};

inline Nat Nat::from_decimal(std::string_view text) {
    if (text.empty()) {
        throw std::invalid_argument("Nat: empty decimal string");
    }
    for (char c : text) {
        if (c < '0' || c > '9') {
            throw std::invalid_argument("Nat: not a decimal natural: '" +
                                        std::string(text) + "'");
        }
    }
    Nat n;
    n.value_ = boost::multiprecision::cpp_int(std::string(text));
    return n;
}

inline Nat pow(const Nat& base, const Nat& exponent) {
    Nat result(1);
    boost::multiprecision::cpp_int b = base.value_;
    boost::multiprecision::cpp_int e = exponent.value_;
    while (e > 0) {
        if (boost::multiprecision::bit_test(e, 0)) {
            result.value_ *= b;
        }
        e >>= 1;
        if (e > 0) {
            b *= b;
        }
    }
    return result;
}

inline std::ostream& operator<<(std::ostream& os, const Nat& n) {
    return os << n.value_.str();
}

}  // namespace moessner
