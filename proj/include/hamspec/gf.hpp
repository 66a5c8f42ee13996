#pragma once

/**
 * @file gf.hpp
 * @brief Arithmetic in F_q = F_p[x]/(f) for desk-scale q.
 *
 * A FieldSpec fixes the characteristic p, the extension degree l and a monic
 * irreducible modulus f of degree l. Elements are identified with their
 * canonical index sum_i c_i p^i, where c_0..c_{l-1} are the little-endian
 * coefficients of the reduced polynomial. Index 0 is zero and index 1 is one.
 *
 * All operations are backed by dense tables built once per FieldSpec, so a
 * FieldSpec is cheap to copy and is immutable after construction.
 */

#include <algorithm>
#include <cstdint>
#include <memory>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "hamspec/numeric.hpp"

namespace hamspec {

using Residue = std::uint32_t;

/// Largest field order for which dense tables are built.
inline constexpr std::uint32_t kMaxFieldOrder = 1024;

struct FieldOptions {
    /// Characteristic 2 lies outside the odd-p regime; opt in explicitly.
    bool allow_characteristic_two = false;
};

namespace detail {

using Poly = std::vector<Residue>;  // little-endian, no trailing-zero guarantee

inline void trim(Poly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

// Remainder of a modulo the monic polynomial m over F_p.
inline Poly poly_rem(Poly a, const Poly& m, Residue p) {
    trim(a);
    const std::size_t dm = m.size() - 1;
    while (a.size() > dm) {
        const Residue lead = a.back();
        const std::size_t shift = a.size() - 1 - dm;
        for (std::size_t i = 0; i <= dm; ++i) {
            const std::uint64_t sub = static_cast<std::uint64_t>(lead) * m[i] % p;
            a[shift + i] = static_cast<Residue>((a[shift + i] + p - sub) % p);
        }
        trim(a);
    }
    return a;
}

// Exhaustive factor test: f has no monic divisor of degree 1..deg/2.
inline bool is_irreducible(const Poly& f, Residue p) {
    const std::size_t deg = f.size() - 1;
    if (deg == 0) return false;
    for (std::size_t dg = 1; dg <= deg / 2; ++dg) {
        const std::uint64_t count = ipow_u64(p, dg);
        for (std::uint64_t code = 0; code < count; ++code) {
            Poly g(dg + 1);
            std::uint64_t c = code;
            for (std::size_t i = 0; i < dg; ++i) {
                g[i] = static_cast<Residue>(c % p);
                c /= p;
            }
            g[dg] = 1;
            if (poly_rem(f, g, p).empty()) return false;
        }
    }
    return true;
}

struct FieldData {
    Residue p = 0;
    std::uint32_t l = 0;
    std::uint32_t q = 0;
    Poly modulus;  // l + 1 coefficients, monic
    std::vector<std::uint16_t> add, mul;  // q*q
    std::vector<std::uint16_t> neg, inv;  // q (inv[0] unused)
    std::vector<Residue> trace;           // q
};

}  // namespace detail

class FieldElement;

/// The field F_{p^l} together with its element tables.
class FieldSpec {
public:
    /// Validates primality of p, monicity, degree and irreducibility of the modulus.
    FieldSpec(Residue p, std::uint32_t l, std::vector<Residue> modulus, FieldOptions options = {}) {
        if (!is_prime(p)) throw std::invalid_argument("field characteristic " + std::to_string(p) + " is not prime");
        if (p == 2 && !options.allow_characteristic_two)
            throw std::invalid_argument("characteristic 2 requires allow_characteristic_two");
        if (l == 0) throw std::invalid_argument("extension degree must be positive");
        if (modulus.size() != l + 1 || modulus.back() != 1)
            throw std::invalid_argument("modulus must be monic of degree l");
        for (Residue c : modulus)
            if (c >= p) throw std::invalid_argument("modulus coefficient out of range");
        const std::uint64_t q = ipow_u64(p, l);
        if (q > kMaxFieldOrder) throw std::invalid_argument("field order " + std::to_string(q) + " exceeds table limit");
        if (!detail::is_irreducible(modulus, p)) throw std::invalid_argument("modulus is reducible over F_p");

        auto data = std::make_shared<detail::FieldData>();
        data->p = p;
        data->l = l;
        data->q = static_cast<std::uint32_t>(q);
        data->modulus = std::move(modulus);
        build_tables(*data);
        data_ = std::move(data);
    }

    Residue p() const { return data_->p; }
    std::uint32_t l() const { return data_->l; }
    std::uint32_t q() const { return data_->q; }
    const std::vector<Residue>& modulus() const { return data_->modulus; }
    bool odd_characteristic() const { return data_->p != 2; }

    // Index-level arithmetic; callers guarantee indices are < q.
    std::uint32_t add(std::uint32_t a, std::uint32_t b) const { return data_->add[a * q() + b]; }
    std::uint32_t mul(std::uint32_t a, std::uint32_t b) const { return data_->mul[a * q() + b]; }
    std::uint32_t neg(std::uint32_t a) const { return data_->neg[a]; }
    std::uint32_t sub(std::uint32_t a, std::uint32_t b) const { return add(a, neg(b)); }
    std::uint32_t inv(std::uint32_t a) const {
        if (a == 0) throw std::domain_error("inverse of zero");
        return data_->inv[a];
    }
    Residue trace(std::uint32_t a) const { return data_->trace[a]; }

    std::vector<Residue> coeffs(std::uint32_t index) const {
        std::vector<Residue> c(l());
        for (auto& ci : c) {
            ci = index % p();
            index /= p();
        }
        return c;
    }

    std::uint32_t encode(std::span<const Residue> coeffs) const {
        if (coeffs.size() != l()) throw std::invalid_argument("coefficient count must equal l");
        std::uint32_t index = 0;
        for (std::size_t i = coeffs.size(); i-- > 0;) {
            if (coeffs[i] >= p()) throw std::invalid_argument("coefficient out of range [0, p)");
            index = index * p() + coeffs[i];
        }
        return index;
    }

    FieldElement element(std::uint32_t index) const;
    FieldElement zero() const;
    FieldElement one() const;

    friend bool operator==(const FieldSpec& a, const FieldSpec& b) {
        return a.data_ == b.data_ || (a.p() == b.p() && a.l() == b.l() && a.modulus() == b.modulus());
    }

    std::string describe() const {
        std::string s = "F_" + std::to_string(q()) + " = F_" + std::to_string(p()) + "[x]/(";
        bool first = true;
        for (std::size_t i = modulus().size(); i-- > 0;) {
            const Residue c = modulus()[i];
            if (c == 0) continue;
            if (!first) s += " + ";
            first = false;
            if (i == 0 || c != 1) s += std::to_string(c);
            if (i >= 1) s += "x";
            if (i >= 2) s += "^" + std::to_string(i);
        }
        return s + ")";
    }

private:
    static void build_tables(detail::FieldData& f) {
        const std::uint32_t q = f.q, p = f.p, l = f.l;
        auto digits = [&](std::uint32_t index) {
            detail::Poly c(l);
            for (auto& ci : c) {
                ci = index % p;
                index /= p;
            }
            return c;
        };
        auto encode = [&](const detail::Poly& c) {
            std::uint32_t index = 0;
            for (std::size_t i = l; i-- > 0;) index = index * p + (i < c.size() ? c[i] : 0);
            return index;
        };

        f.add.resize(static_cast<std::size_t>(q) * q);
        f.mul.resize(static_cast<std::size_t>(q) * q);
        f.neg.resize(q);
        f.inv.assign(q, 0);
        std::vector<detail::Poly> all(q);
        for (std::uint32_t a = 0; a < q; ++a) all[a] = digits(a);

        for (std::uint32_t a = 0; a < q; ++a) {
            detail::Poly n(l);
            for (std::uint32_t i = 0; i < l; ++i) n[i] = (p - all[a][i]) % p;
            f.neg[a] = static_cast<std::uint16_t>(encode(n));
            for (std::uint32_t b = 0; b < q; ++b) {
                detail::Poly s(l), prod(2 * l - 1, 0);
                for (std::uint32_t i = 0; i < l; ++i) s[i] = (all[a][i] + all[b][i]) % p;
                for (std::uint32_t i = 0; i < l; ++i)
                    for (std::uint32_t j = 0; j < l; ++j)
                        prod[i + j] = static_cast<Residue>((prod[i + j] + static_cast<std::uint64_t>(all[a][i]) * all[b][j]) % p);
                f.add[a * q + b] = static_cast<std::uint16_t>(encode(s));
                f.mul[a * q + b] = static_cast<std::uint16_t>(encode(detail::poly_rem(std::move(prod), f.modulus, p)));
            }
        }
        for (std::uint32_t a = 1; a < q; ++a)
            for (std::uint32_t b = 1; b < q; ++b)
                if (f.mul[a * q + b] == 1) {
                    f.inv[a] = static_cast<std::uint16_t>(b);
                    break;
                }

        // Tr(a) = a + a^p + ... + a^(p^(l-1)) lands in the prime subfield.
        f.trace.resize(q);
        for (std::uint32_t a = 0; a < q; ++a) {
            std::uint32_t frob = a, sum = 0;
            for (std::uint32_t k = 0; k < l; ++k) {
                sum = f.add[sum * q + frob];
                std::uint32_t next = 1;
                for (std::uint32_t e = 0; e < p; ++e) next = f.mul[next * q + frob];
                frob = next;
            }
            if (sum >= p) throw std::logic_error("trace left the prime subfield");
            f.trace[a] = sum;
        }
    }

    std::shared_ptr<const detail::FieldData> data_;
};

/// Builds F_{p^l} with the lexicographically smallest monic irreducible modulus,
/// scanning the lower coefficients in ascending canonical-index order.
inline FieldSpec field_make(Residue p, std::uint32_t l, FieldOptions options = {}) {
    if (!is_prime(p)) throw std::invalid_argument("field characteristic " + std::to_string(p) + " is not prime");
    if (l == 0) throw std::invalid_argument("extension degree must be positive");
    const std::uint64_t q = ipow_u64(p, l);
    if (q > kMaxFieldOrder) throw std::invalid_argument("field order " + std::to_string(q) + " exceeds table limit");
    for (std::uint64_t code = 0; code < q; ++code) {
        std::vector<Residue> f(l + 1);
        std::uint64_t c = code;
        for (std::uint32_t i = 0; i < l; ++i) {
            f[i] = static_cast<Residue>(c % p);
            c /= p;
        }
        f[l] = 1;
        if (detail::is_irreducible(f, p)) return FieldSpec(p, l, std::move(f), options);
    }
    throw std::logic_error("no irreducible polynomial found");
}

/// A reduced element of a FieldSpec. Equality is equality of coefficient sequences.
class FieldElement {
public:
    FieldElement(FieldSpec spec, std::uint32_t index) : spec_(std::move(spec)), index_(index) {
        if (index_ >= spec_.q()) throw std::out_of_range("element index out of range");
    }

    static FieldElement from_coeffs(const FieldSpec& spec, std::span<const Residue> coeffs) {
        return FieldElement(spec, spec.encode(coeffs));
    }

    const FieldSpec& spec() const { return spec_; }
    std::uint32_t index() const { return index_; }
    std::vector<Residue> coeffs() const { return spec_.coeffs(index_); }
    bool is_zero() const { return index_ == 0; }

    FieldElement operator+(const FieldElement& o) const { return {spec_, spec_.add(index_, checked(o))}; }
    FieldElement operator-(const FieldElement& o) const { return {spec_, spec_.sub(index_, checked(o))}; }
    FieldElement operator*(const FieldElement& o) const { return {spec_, spec_.mul(index_, checked(o))}; }
    FieldElement operator-() const { return {spec_, spec_.neg(index_)}; }
    FieldElement inv() const { return {spec_, spec_.inv(index_)}; }
    FieldElement operator/(const FieldElement& o) const { return *this * o.inv(); }

    FieldElement pow(std::uint64_t e) const {
        std::uint32_t result = 1, base = index_;
        while (e != 0) {
            if (e & 1u) result = spec_.mul(result, base);
            base = spec_.mul(base, base);
            e >>= 1;
        }
        return {spec_, result};
    }

    /// Galois trace Tr: F_q -> F_p as a residue in [0, p).
    Residue trace() const { return spec_.trace(index_); }

    friend bool operator==(const FieldElement& a, const FieldElement& b) {
        return a.index_ == b.index_ && a.spec_ == b.spec_;
    }

private:
    std::uint32_t checked(const FieldElement& o) const {
        if (!(spec_ == o.spec_)) throw std::invalid_argument("operands belong to different fields");
        return o.index_;
    }

    FieldSpec spec_;
    std::uint32_t index_;
};

inline FieldElement FieldSpec::element(std::uint32_t index) const { return FieldElement(*this, index); }
inline FieldElement FieldSpec::zero() const { return FieldElement(*this, 0); }
inline FieldElement FieldSpec::one() const { return FieldElement(*this, 1); }

inline FieldElement add(const FieldElement& a, const FieldElement& b) { return a + b; }
inline FieldElement mul(const FieldElement& a, const FieldElement& b) { return a * b; }
inline FieldElement neg(const FieldElement& a) { return -a; }
inline FieldElement inv(const FieldElement& a) { return a.inv(); }
inline Residue trace(const FieldElement& a) { return a.trace(); }

/// All q elements, ordered by canonical index.
inline std::vector<FieldElement> enumerate_field(const FieldSpec& spec) {
    std::vector<FieldElement> out;
    out.reserve(spec.q());
    for (std::uint32_t i = 0; i < spec.q(); ++i) out.emplace_back(spec, i);
    return out;
}

}  // namespace hamspec
