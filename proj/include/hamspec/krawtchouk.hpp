#pragma once

/**
 * @file krawtchouk.hpp
 * @brief Exact q-ary Krawtchouk values and checkers for the bounds built on them.
 *
 * K_r(t) = sum_i C(t,i) C(d-t,r-i) (-1)^i (q-1)^(r-i) for 0 <= r, t <= d.
 * Everything here is exact; the inequality checkers measure both sides and
 * report a verdict instead of assuming the inequality.
 */

#include <cstdint>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <vector>

#include "hamspec/numeric.hpp"

namespace hamspec {

struct KrawtchoukParams {
    std::size_t d;
    std::uint64_t q;

    KrawtchoukParams(std::size_t d_, std::uint64_t q_) : d(d_), q(q_) {
        if (d < 1) throw std::invalid_argument("Krawtchouk dimension must be >= 1");
        if (q < 2) throw std::invalid_argument("Krawtchouk alphabet size must be >= 2");
    }
};

inline BigInt kraw(const KrawtchoukParams& k, std::size_t r, std::size_t t) {
    if (r > k.d || t > k.d) throw std::out_of_range("Krawtchouk index out of range");
    const auto d = static_cast<std::int64_t>(k.d);
    BigInt sum = 0;
    for (std::int64_t i = 0; i <= static_cast<std::int64_t>(r); ++i) {
        BigInt term = binom(static_cast<std::int64_t>(t), i) * binom(d - static_cast<std::int64_t>(t), static_cast<std::int64_t>(r) - i);
        if (term == 0) continue;
        term *= ipow(BigInt(k.q - 1), r - static_cast<std::size_t>(i));
        sum += (i % 2 == 0) ? term : BigInt(-term);
    }
    return sum;
}

/// (d+1) x (d+1) table of K_r(t), row r, column t.
class KrawtchoukTable {
public:
    explicit KrawtchoukTable(KrawtchoukParams params) : params_(params) {
        const std::size_t n = params_.d + 1;
        values_.reserve(n * n);
        for (std::size_t r = 0; r < n; ++r)
            for (std::size_t t = 0; t < n; ++t) values_.push_back(kraw(params_, r, t));
    }

    const KrawtchoukParams& params() const { return params_; }
    std::size_t d() const { return params_.d; }
    const BigInt& at(std::size_t r, std::size_t t) const {
        if (r > params_.d || t > params_.d) throw std::out_of_range("Krawtchouk index out of range");
        return values_[r * (params_.d + 1) + t];
    }

private:
    KrawtchoukParams params_;
    std::vector<BigInt> values_;
};

inline KrawtchoukTable build_table(const KrawtchoukParams& params) { return KrawtchoukTable(params); }

/// Tab-separated export: header "r\t0\t1...\td", then one row of exact K_r(t) per r.
inline void write_table_csv(std::ostream& out, const KrawtchoukTable& table) {
    out << "r";
    for (std::size_t t = 0; t <= table.d(); ++t) out << '\t' << t;
    out << '\n';
    for (std::size_t r = 0; r <= table.d(); ++r) {
        out << r;
        for (std::size_t t = 0; t <= table.d(); ++t) out << '\t' << table.at(r, t);
        out << '\n';
    }
}

struct SymmetryCheck {
    BigInt lhs;  // (q-1)^i C(d,i) K_r(i)
    BigInt rhs;  // (q-1)^r C(d,r) K_i(r)
    bool equal;
};

inline SymmetryCheck kraw_symmetry_check(const KrawtchoukParams& k, std::size_t r, std::size_t i) {
    const auto d = static_cast<std::int64_t>(k.d);
    BigInt lhs = ipow(BigInt(k.q - 1), i) * binom(d, static_cast<std::int64_t>(i)) * kraw(k, r, i);
    BigInt rhs = ipow(BigInt(k.q - 1), r) * binom(d, static_cast<std::int64_t>(r)) * kraw(k, i, r);
    const bool eq = lhs == rhs;
    return {std::move(lhs), std::move(rhs), eq};
}

/// Sum_t (q-1)^t C(d,t) K_r(t); equals q^d when r = 0 and 0 otherwise.
inline BigInt inversion_at_zero(const KrawtchoukParams& k, std::size_t r) {
    BigInt sum = 0;
    for (std::size_t t = 0; t <= k.d; ++t)
        sum += ipow(BigInt(k.q - 1), t) * binom(static_cast<std::int64_t>(k.d), static_cast<std::int64_t>(t)) * kraw(k, r, t);
    return sum;
}

/// (r+1) K_{r+1}(t) == (r + (q-1)(d-r) - q t) K_r(t) - (q-1)(d-r+1) K_{r-1}(t), for 1 <= r < d.
inline bool recurrence_check(const KrawtchoukParams& k, std::size_t r, std::size_t t) {
    if (r < 1 || r >= k.d || t > k.d) throw std::out_of_range("recurrence needs 1 <= r < d");
    const BigInt q = k.q, d = k.d, rr = r, tt = t;
    const BigInt lhs = (rr + 1) * kraw(k, r + 1, t);
    const BigInt rhs = (rr + (q - 1) * (d - rr) - q * tt) * kraw(k, r, t) - (q - 1) * (d - rr + 1) * kraw(k, r - 1, t);
    return lhs == rhs;
}

struct KlLemma1Check {
    bool holds;
    BigInt lhs;  // |K_k(i)|
    BigInt rhs;  // |K_{d/2}(i)|
};

/// Measures |K_k(i)| <= |K_{d/2}(i)|; requires d and i even.
inline KlLemma1Check kl_lemma1_check(const KrawtchoukParams& params, std::size_t k, std::size_t i) {
    if (params.d % 2 != 0) throw std::invalid_argument("lemma 1 check requires even d");
    if (i % 2 != 0) throw std::invalid_argument("lemma 1 check requires even i");
    if (k > params.d || i > params.d) throw std::out_of_range("index out of range");
    BigInt lhs = abs(kraw(params, k, i));
    BigInt rhs = abs(kraw(params, params.d / 2, i));
    const bool holds = lhs <= rhs;
    return {holds, std::move(lhs), std::move(rhs)};
}

struct KlLemma2Check {
    bool holds;
    Rational lhs;  // |K_i(k)|
    Rational rhs;  // C(d,d/2) C(d/2,i/2) / C(d,k)
};

/// Measures |K_i(k)| <= C(d,d/2) C(d/2,i/2) / C(d,k); requires d and i even.
inline KlLemma2Check kl_lemma2_check(const KrawtchoukParams& params, std::size_t i, std::size_t k) {
    if (params.d % 2 != 0) throw std::invalid_argument("lemma 2 check requires even d");
    if (i % 2 != 0) throw std::invalid_argument("lemma 2 check requires even i");
    if (k > params.d || i > params.d) throw std::out_of_range("index out of range");
    const auto d = static_cast<std::int64_t>(params.d);
    Rational lhs(abs(kraw(params, i, k)));
    Rational rhs = make_rational(binom(d, d / 2) * binom(d / 2, static_cast<std::int64_t>(i / 2)), binom(d, static_cast<std::int64_t>(k)));
    const bool holds = lhs <= rhs;
    return {holds, std::move(lhs), std::move(rhs)};
}

/// C(d,d/2) C(d/2,d/4), the constant shared by the threshold and both spectral bounds.
inline BigInt central_constant(std::size_t d) {
    if (d % 4 != 0) throw std::invalid_argument("central constant requires 4 | d");
    const auto dd = static_cast<std::int64_t>(d);
    return binom(dd, dd / 2) * binom(dd / 2, dd / 4);
}

/// Claimed bound on |K_r(t)| = q^d |S_r^(m)| at wt(m) = t > 0:
/// C(d,d/2)C(d/2,d/4) for even t, (q-1)^(r-1) C(d,r)/d times that for odd t and even r.
/// Empty when 4 does not divide d, t == 0, or t odd with r odd or zero (no claim there).
inline std::optional<Rational> sphere_spectrum_bound(const KrawtchoukParams& k, std::size_t r, std::size_t t) {
    if (r > k.d || t > k.d) throw std::out_of_range("index out of range");
    if (k.d % 4 != 0 || t == 0) return std::nullopt;
    const BigInt c = central_constant(k.d);
    if (t % 2 == 0) return Rational(c);
    if (r % 2 != 0 || r == 0) return std::nullopt;
    return make_rational(ipow(BigInt(k.q - 1), r - 1) * binom(static_cast<std::int64_t>(k.d), static_cast<std::int64_t>(r)) * c,
                         BigInt(k.d));
}

}  // namespace hamspec
