#pragma once

// Exact integer and rational arithmetic shared by every module.

#include <cstdint>
#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace hamspec {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Exact binomial coefficient; zero outside 0 <= k <= n.
inline BigInt binom(std::int64_t n, std::int64_t k) {
    if (n < 0 || k < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    BigInt result = 1;
    for (std::int64_t i = 1; i <= k; ++i) {
        result *= n - k + i;
        result /= i;
    }
    return result;
}

inline BigInt ipow(const BigInt& base, std::uint64_t exponent) {
    BigInt result = 1;
    BigInt b = base;
    while (exponent != 0) {
        if (exponent & 1u) result *= b;
        exponent >>= 1;
        if (exponent != 0) b *= b;
    }
    return result;
}

inline std::uint64_t ipow_u64(std::uint64_t base, std::uint64_t exponent) {
    std::uint64_t result = 1;
    for (std::uint64_t i = 0; i < exponent; ++i) {
        if (base != 0 && result > UINT64_MAX / base) throw std::overflow_error("ipow_u64 overflow");
        result *= base;
    }
    return result;
}

inline BigInt abs(const BigInt& v) { return v < 0 ? BigInt(-v) : v; }
inline Rational abs(const Rational& v) { return v < 0 ? Rational(-v) : v; }

inline Rational make_rational(const BigInt& num, const BigInt& den) { return Rational(num, den); }

inline std::string to_string(const BigInt& v) { return v.str(); }

/// "n" for integers, "n/d" otherwise.
inline std::string to_string_rational(const Rational& v) {
    if (denominator(v) == 1) return numerator(v).str();
    return numerator(v).str() + "/" + denominator(v).str();
}

inline double to_double(const BigInt& v) { return v.convert_to<double>(); }
inline double to_double(const Rational& v) { return v.convert_to<double>(); }

inline bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t f = 2; f * f <= n; ++f)
        if (n % f == 0) return false;
    return true;
}

/// True when n = p^k for a prime p and k >= 1.
inline bool is_prime_power(std::uint64_t n) {
    if (n < 2) return false;
    std::uint64_t p = 2;
    while (n % p != 0) ++p;
    while (n % p == 0) n /= p;
    return n == 1;
}

}  // namespace hamspec
