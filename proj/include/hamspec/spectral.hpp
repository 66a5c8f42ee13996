#pragma once

/**
 * @file spectral.hpp
 * @brief Fourier analysis on F_q^d.
 *
 * f^(m) = q^-d sum_x chi(-x.m) f(x), with the additive character
 * chi(z) = exp(2 pi i Tr(z) / p). For q prime this is exp(2 pi i z / q); for
 * l > 1 the trace lands in F_p, so the exponent is divided by p, not q.
 *
 * Points and frequencies share the canonical index sum_i enc(x_i) q^i, so a
 * function or spectrum is a dense array of q^d complex amplitudes.
 */

#include <cmath>
#include <complex>
#include <cstdint>
#include <cstdio>
#include <numbers>
#include <ostream>
#include <span>
#include <stdexcept>
#include <vector>

#include "hamspec/gf.hpp"
#include "hamspec/hamming.hpp"
#include "hamspec/krawtchouk.hpp"
#include "hamspec/rng.hpp"

namespace hamspec {

using Complex = std::complex<double>;

/// Dense spectrum arrays are refused beyond this many amplitudes.
inline constexpr std::uint64_t kMaxSpectralPoints = std::uint64_t{1} << 26;

class DomainTooLarge : public std::length_error {
public:
    using std::length_error::length_error;
};

/// Number of points of F_q^d, checked against the dense-array budget.
inline std::size_t spectral_domain_size(const FieldSpec& field, std::size_t d) {
    std::uint64_t n = 1;
    for (std::size_t i = 0; i < d; ++i) {
        n *= field.q();
        if (n > kMaxSpectralPoints) throw DomainTooLarge("q^d exceeds the dense spectrum budget of 2^26 amplitudes");
    }
    return static_cast<std::size_t>(n);
}

/// exp(2 pi i k / p) for k = 0..p-1.
inline std::vector<Complex> roots_of_unity(std::uint32_t p) {
    std::vector<Complex> roots(p);
    for (std::uint32_t k = 0; k < p; ++k) roots[k] = std::polar(1.0, 2.0 * std::numbers::pi * k / p);
    return roots;
}

inline Complex char_value(const FieldElement& z) {
    return std::polar(1.0, 2.0 * std::numbers::pi * z.trace() / z.spec().p());
}

/// Hamming weight of every canonical index of F_q^d.
inline std::vector<std::uint8_t> index_weights(const FieldSpec& field, std::size_t d) {
    const std::size_t n = spectral_domain_size(field, d);
    std::vector<std::uint8_t> w(n, 0);
    for (std::size_t idx = 1; idx < n; ++idx) {
        // w(idx) = w(idx / q) + [idx % q != 0]
        w[idx] = static_cast<std::uint8_t>(w[idx / field.q()] + (idx % field.q() != 0));
    }
    return w;
}

struct Spectrum {
    FieldSpec field;
    std::size_t d;
    std::vector<Complex> amplitudes;

    const Complex& at(std::uint64_t m) const { return amplitudes.at(m); }
    std::size_t size() const { return amplitudes.size(); }
};

namespace detail {

// kernel[m * q + x] = chi(sign * x * m)
inline std::vector<Complex> character_kernel(const FieldSpec& field, int sign) {
    const std::uint32_t q = field.q(), p = field.p();
    const auto roots = roots_of_unity(p);
    std::vector<Complex> k(static_cast<std::size_t>(q) * q);
    for (std::uint32_t m = 0; m < q; ++m)
        for (std::uint32_t x = 0; x < q; ++x) {
            const Residue tr = field.trace(field.mul(x, m));
            k[m * q + x] = roots[sign > 0 ? tr : (p - tr) % p];
        }
    return k;
}

// d passes of a length-q transform along each axis, in place.
inline void transform_axes(const FieldSpec& field, std::size_t d, std::vector<Complex>& data, int sign) {
    const std::size_t q = field.q();
    const auto kernel = character_kernel(field, sign);
    std::vector<Complex> in(q), out(q);
    std::size_t stride = 1;
    for (std::size_t axis = 0; axis < d; ++axis) {
        const std::size_t block = stride * q;
        for (std::size_t base = 0; base < data.size(); base += block) {
            for (std::size_t off = 0; off < stride; ++off) {
                for (std::size_t x = 0; x < q; ++x) in[x] = data[base + off + x * stride];
                for (std::size_t m = 0; m < q; ++m) {
                    Complex acc = 0;
                    const Complex* row = &kernel[m * q];
                    for (std::size_t x = 0; x < q; ++x) acc += row[x] * in[x];
                    out[m] = acc;
                }
                for (std::size_t m = 0; m < q; ++m) data[base + off + m * stride] = out[m];
            }
        }
        stride = block;
    }
}

inline void check_table_size(const FieldSpec& field, std::size_t d, std::size_t size) {
    if (size != spectral_domain_size(field, d)) throw std::invalid_argument("function table must have q^d entries");
}

}  // namespace detail

/// Direct double sum, O(q^2d d). Reference for every equivalence test.
inline Spectrum fourier_bruteforce(const FieldSpec& field, std::size_t d, std::span<const Complex> f) {
    detail::check_table_size(field, d, f.size());
    const std::size_t n = f.size();
    const std::uint32_t q = field.q(), p = field.p();
    const auto roots = roots_of_unity(p);
    std::vector<std::uint32_t> digits(n * d);
    for (std::size_t idx = 0; idx < n; ++idx) {
        std::size_t v = idx;
        for (std::size_t i = 0; i < d; ++i, v /= q) digits[idx * d + i] = static_cast<std::uint32_t>(v % q);
    }
    const double scale = 1.0 / static_cast<double>(n);
    Spectrum s{field, d, std::vector<Complex>(n)};
    for (std::size_t m = 0; m < n; ++m) {
        Complex acc = 0;
        const std::uint32_t* md = &digits[m * d];
        for (std::size_t x = 0; x < n; ++x) {
            if (f[x] == Complex{}) continue;
            const std::uint32_t* xd = &digits[x * d];
            std::uint32_t dot = 0;
            for (std::size_t i = 0; i < d; ++i) dot = field.add(dot, field.mul(xd[i], md[i]));
            acc += roots[(p - field.trace(dot)) % p] * f[x];
        }
        s.amplitudes[m] = acc * scale;
    }
    return s;
}

/// Tensor-factored transform, O(d q^(d+1)); matches fourier_bruteforce to ~1e-12.
inline Spectrum fourier_fast(const FieldSpec& field, std::size_t d, std::span<const Complex> f) {
    detail::check_table_size(field, d, f.size());
    Spectrum s{field, d, std::vector<Complex>(f.begin(), f.end())};
    detail::transform_axes(field, d, s.amplitudes, -1);
    const double scale = 1.0 / static_cast<double>(f.size());
    for (auto& a : s.amplitudes) a *= scale;
    return s;
}

/// f(x) = sum_m chi(x.m) f^(m).
inline std::vector<Complex> fourier_inverse(const Spectrum& s) {
    std::vector<Complex> f = s.amplitudes;
    detail::transform_axes(s.field, s.d, f, +1);
    return f;
}

/// Indicator function of a set of points.
inline std::vector<Complex> indicator(const FieldSpec& field, std::size_t d, const std::vector<FqVector>& points) {
    std::vector<Complex> f(spectral_domain_size(field, d));
    for (const auto& v : points) f[v.linear_index()] = 1.0;
    return f;
}

/// Indicator of the radius-r sphere about 0.
inline std::vector<Complex> sphere_indicator(const FieldSpec& field, std::size_t d, std::size_t r) {
    if (r > d) throw std::out_of_range("sphere radius exceeds dimension");
    const auto w = index_weights(field, d);
    std::vector<Complex> f(w.size());
    for (std::size_t i = 0; i < w.size(); ++i) f[i] = w[i] == r ? 1.0 : 0.0;
    return f;
}

/// CSV with columns m_index,weight,re,im.
inline void write_spectrum_csv(std::ostream& out, const Spectrum& s) {
    const auto w = index_weights(s.field, s.d);
    out << "m_index,weight,re,im\n";
    char buf[96];
    for (std::size_t m = 0; m < s.size(); ++m) {
        std::snprintf(buf, sizeof buf, "%zu,%u,%.17g,%.17g\n", m, unsigned{w[m]}, s.amplitudes[m].real(), s.amplitudes[m].imag());
        out << buf;
    }
}

/// q^d S_r^(m) for each weight class t of m; equal to K_r(t).
struct ExactSphereSpectrum {
    std::size_t d;
    std::uint64_t q;
    std::size_t r;
    std::vector<BigInt> by_weight;
};

inline ExactSphereSpectrum sphere_spectrum_exact(std::size_t d, std::uint64_t q, std::size_t r) {
    if (r > d) throw std::out_of_range("sphere radius exceeds dimension");
    const KrawtchoukParams params(d, q);
    ExactSphereSpectrum out{d, q, r, {}};
    for (std::size_t t = 0; t <= d; ++t) out.by_weight.push_back(kraw(params, r, t));
    return out;
}

enum class TransformMethod { BruteForce, Fast };

struct SphereSpectrumCheck {
    std::size_t r;
    double max_abs_error = 0;       // max_m |S_r^(m) - K_r(wt m) / q^d|
    double max_class_spread = 0;    // max over weight classes of max-min amplitude distance
    bool integers_exact = true;     // round(q^d S_r^(m)) == K_r(wt m) everywhere
};

/// Transforms the sphere indicator numerically and compares every amplitude
/// with the exact Krawtchouk value for its weight class.
inline SphereSpectrumCheck check_sphere_spectrum(const FieldSpec& field, std::size_t d, std::size_t r,
                                                 TransformMethod method = TransformMethod::BruteForce) {
    const auto f = sphere_indicator(field, d, r);
    const Spectrum s = method == TransformMethod::BruteForce ? fourier_bruteforce(field, d, f) : fourier_fast(field, d, f);
    const auto exact = sphere_spectrum_exact(d, field.q(), r);
    const auto w = index_weights(field, d);
    const double n = static_cast<double>(s.size());
    std::vector<Complex> first(d + 1);
    std::vector<bool> seen(d + 1, false);
    SphereSpectrumCheck out{r};
    for (std::size_t m = 0; m < s.size(); ++m) {
        const std::size_t t = w[m];
        const double expected = to_double(exact.by_weight[t]);
        out.max_abs_error = std::max(out.max_abs_error, std::abs(s.amplitudes[m] - Complex(expected / n)));
        const Complex scaled = s.amplitudes[m] * n;
        if (std::abs(scaled.imag()) > 0.25 || BigInt(static_cast<long long>(std::llround(scaled.real()))) != exact.by_weight[t])
            out.integers_exact = false;
        if (!seen[t]) {
            seen[t] = true;
            first[t] = s.amplitudes[m];
        }
        out.max_class_spread = std::max(out.max_class_spread, std::abs(s.amplitudes[m] - first[t]));
    }
    return out;
}

struct IdentityReport {
    std::size_t functions_tested = 0;
    double orthogonality_max_error = 0;   // |q^-d sum_x chi(x.m) - [m = 0]|
    double inversion_max_error = 0;       // |f - inverse(f^)|
    double plancherel_max_rel_error = 0;  // relative gap between both sides
    double parseval_split_max_rel_error = 0;  // indicators only
    double fast_vs_brute_max_error = 0;   // only when brute force was affordable
    bool brute_force_compared = false;

    bool passed(double tol) const {
        return orthogonality_max_error < tol && inversion_max_error < tol && plancherel_max_rel_error < tol &&
               parseval_split_max_rel_error < tol && fast_vs_brute_max_error < tol;
    }
};

/// Domains up to this size are also transformed by brute force inside verify_identities.
inline constexpr std::size_t kBruteForceCompareLimit = 2401;

/// Orthogonality, inversion and Plancherel on `functions` seeded random inputs.
/// Even-numbered inputs are random complex functions, odd-numbered ones random set indicators.
inline IdentityReport verify_identities(const FieldSpec& field, std::size_t d, std::size_t functions, std::uint64_t seed) {
    const std::size_t n = spectral_domain_size(field, d);
    const double inv_n = 1.0 / static_cast<double>(n);
    IdentityReport rep;
    rep.brute_force_compared = n <= kBruteForceCompareLimit;

    // q^-d sum_x chi(x.m) is the inverse transform of the constant 1, scaled.
    {
        Spectrum ones{field, d, std::vector<Complex>(n, 1.0)};
        const auto sums = fourier_inverse(ones);
        for (std::size_t m = 0; m < n; ++m)
            rep.orthogonality_max_error = std::max(rep.orthogonality_max_error, std::abs(sums[m] * inv_n - Complex(m == 0 ? 1.0 : 0.0)));
    }

    for (std::size_t k = 0; k < functions; ++k) {
        CounterRng rng(seed, k);
        std::vector<Complex> f(n);
        const bool is_indicator = k % 2 == 1;
        std::size_t set_size = 0;
        if (is_indicator) {
            for (auto idx : sample_indices(rng, n, 1 + rng.below(n))) {
                f[idx] = 1.0;
                ++set_size;
            }
        } else {
            for (auto& v : f) v = Complex(2 * rng.uniform() - 1, 2 * rng.uniform() - 1);
        }

        const Spectrum s = fourier_fast(field, d, f);
        const auto back = fourier_inverse(s);
        double energy_x = 0, energy_m = 0;
        for (std::size_t i = 0; i < n; ++i) {
            rep.inversion_max_error = std::max(rep.inversion_max_error, std::abs(back[i] - f[i]));
            energy_x += std::norm(f[i]);
            energy_m += std::norm(s.amplitudes[i]);
        }
        const double rhs = inv_n * energy_x;
        rep.plancherel_max_rel_error = std::max(rep.plancherel_max_rel_error, std::abs(energy_m - rhs) / std::max(rhs, 1e-300));

        if (is_indicator) {
            const double e = static_cast<double>(set_size);
            const double expected = inv_n * e - inv_n * inv_n * e * e;
            const double off_zero = energy_m - std::norm(s.amplitudes[0]);
            const double denom = std::max(std::abs(expected), inv_n * e);
            rep.parseval_split_max_rel_error = std::max(rep.parseval_split_max_rel_error, std::abs(off_zero - expected) / denom);
        }

        if (rep.brute_force_compared) {
            const Spectrum b = fourier_bruteforce(field, d, f);
            for (std::size_t i = 0; i < n; ++i)
                rep.fast_vs_brute_max_error = std::max(rep.fast_vs_brute_max_error, std::abs(b.amplitudes[i] - s.amplitudes[i]));
        }
        ++rep.functions_tested;
    }
    return rep;
}

}  // namespace hamspec
