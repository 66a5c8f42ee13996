#pragma once

/**
 * @file distances.hpp
 * @brief Distance-pair counts and their spectral decomposition.
 *
 * lambda_r counts ordered pairs (x, y) in E x E with |x - y| = r, diagonal
 * included, so lambda_0 = |E| and sum_r lambda_r = |E|^2. Spectrally,
 *
 *   lambda_r = q^-d |E|^2 (q-1)^r C(d,r) + I + II,
 *
 * where I and II sum q^2d |E^(m)|^2 S_r^(m) over nonzero m of even and odd
 * weight. Both are computed twice: numerically from the fast transform, and
 * exactly from the weight-class energies
 *
 *   q^2d sum_{wt m = t} |E^(m)|^2 = sum_s lambda_s K_t(s),
 *
 * which makes the float route checkable against an exact rational.
 */

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <unordered_set>
#include <vector>

#include <nlohmann/json.hpp>

#include "hamspec/hamming.hpp"
#include "hamspec/krawtchouk.hpp"
#include "hamspec/numeric.hpp"
#include "hamspec/spectral.hpp"

namespace hamspec {

/// A duplicate-free set of points of F_q^d.
class PointSet {
public:
    PointSet(FieldSpec field, std::size_t d, std::vector<FqVector> points)
        : field_(std::move(field)), d_(d), points_(std::move(points)) {
        if (d_ == 0) throw std::invalid_argument("dimension must be positive");
        std::unordered_set<std::uint64_t> seen;
        flat_.reserve(points_.size() * d_);
        for (const auto& v : points_) {
            if (!(v.field() == field_) || v.dim() != d_) throw std::invalid_argument("point field or dimension mismatch");
            if (!seen.insert(v.linear_index()).second) throw std::invalid_argument("duplicate point in set");
            for (auto c : v.indices()) flat_.push_back(static_cast<std::uint16_t>(c));
        }
    }

    static PointSet from_indices(const FieldSpec& field, std::size_t d, const std::vector<std::uint64_t>& indices) {
        std::vector<FqVector> pts;
        pts.reserve(indices.size());
        for (auto i : indices) pts.push_back(FqVector::from_linear(field, d, i));
        return {field, d, std::move(pts)};
    }

    static PointSet full_space(const FieldSpec& field, std::size_t d) {
        const std::uint64_t n = space_size(field.q(), d);
        std::vector<std::uint64_t> all(n);
        for (std::uint64_t i = 0; i < n; ++i) all[i] = i;
        return from_indices(field, d, all);
    }

    const FieldSpec& field() const { return field_; }
    std::size_t dim() const { return d_; }
    std::size_t size() const { return points_.size(); }
    bool empty() const { return points_.empty(); }
    const std::vector<FqVector>& points() const { return points_; }

    /// Ordered-pair distance distribution lambda_0..lambda_d by direct double loop.
    std::vector<std::uint64_t> distance_counts() const {
        std::vector<std::uint64_t> counts(d_ + 1, 0);
        const std::size_t n = points_.size();
        counts[0] = n;
        for (std::size_t a = 0; a < n; ++a) {
            const std::uint16_t* pa = &flat_[a * d_];
            for (std::size_t b = a + 1; b < n; ++b) {
                const std::uint16_t* pb = &flat_[b * d_];
                std::size_t dist = 0;
                for (std::size_t i = 0; i < d_; ++i) dist += pa[i] != pb[i];
                counts[dist] += 2;
            }
        }
        return counts;
    }

    /// Number of points at distance exactly r from v.
    std::size_t count_at_distance(const FqVector& v, std::size_t r) const {
        std::size_t hits = 0;
        for (std::size_t a = 0; a < points_.size(); ++a) {
            std::size_t dist = 0;
            for (std::size_t i = 0; i < d_; ++i) dist += flat_[a * d_ + i] != v.index_at(i);
            hits += dist == r;
        }
        return hits;
    }

private:
    FieldSpec field_;
    std::size_t d_;
    std::vector<FqVector> points_;
    std::vector<std::uint16_t> flat_;
};

inline std::vector<BigInt> distance_distribution(const PointSet& e) {
    const auto counts = e.distance_counts();
    return {counts.begin(), counts.end()};
}

inline BigInt lambda_direct(const PointSet& e, std::size_t r) {
    if (r > e.dim()) throw std::out_of_range("distance exceeds dimension");
    return e.distance_counts()[r];
}

/// q^2d sum_{wt m = t} |E^(m)|^2 for t = 0..d, from the fast transform.
inline std::vector<double> spectral_energy_by_weight(const PointSet& e) {
    const auto f = indicator(e.field(), e.dim(), e.points());
    const Spectrum s = fourier_fast(e.field(), e.dim(), f);
    const auto w = index_weights(e.field(), e.dim());
    const double n = static_cast<double>(s.size());
    std::vector<double> energy(e.dim() + 1, 0.0);
    for (std::size_t m = 0; m < s.size(); ++m) energy[w[m]] += std::norm(s.amplitudes[m]);
    for (auto& v : energy) v *= n * n;
    return energy;
}

/// The same energies exactly: sum_s lambda_s K_t(s).
inline std::vector<BigInt> exact_energy_by_weight(const KrawtchoukTable& k, const std::vector<BigInt>& lambdas) {
    std::vector<BigInt> energy(k.d() + 1, 0);
    for (std::size_t t = 0; t <= k.d(); ++t)
        for (std::size_t s = 0; s <= k.d(); ++s) energy[t] += lambdas[s] * k.at(t, s);
    return energy;
}

/// q^2d sum_m |E^(m)|^2 S_r^(m), evaluated with the fast transform.
inline double lambda_spectral(const PointSet& e, std::size_t r) {
    if (r > e.dim()) throw std::out_of_range("distance exceeds dimension");
    const auto energy = spectral_energy_by_weight(e);
    const auto exact = sphere_spectrum_exact(e.dim(), e.field().q(), r);
    const double n = static_cast<double>(space_size(e.field().q(), e.dim()));
    double sum = 0;
    for (std::size_t t = 0; t <= e.dim(); ++t) sum += to_double(exact.by_weight[t]) * energy[t];
    return sum / n;
}

struct LambdaReport {
    std::size_t r = 0;
    std::size_t set_size = 0;
    BigInt lambda_exact;
    Rational main_term;       // q^-d |E|^2 (q-1)^r C(d,r)
    Rational residual_exact;  // lambda_exact - main_term
    Rational I_exact;         // even-weight part, exact
    Rational II_exact;        // odd-weight part, exact
    std::optional<double> lambda_spectral;
    std::optional<double> I;
    std::optional<double> II;
    std::optional<Rational> bound_I;   // only when 4 | d and r even
    std::optional<Rational> bound_II;  // only when 4 | d and r even

    /// |I + II - residual| / max(1, |residual|), float route against exact.
    std::optional<double> decomposition_rel_error() const {
        if (!I || !II) return std::nullopt;
        const double res = to_double(residual_exact);
        return std::abs(*I + *II - res) / std::max(1.0, std::abs(res));
    }
    std::optional<bool> spectral_rounds_to_exact() const {
        if (!lambda_spectral) return std::nullopt;
        return std::abs(*lambda_spectral - to_double(lambda_exact)) < 0.5;
    }
    std::optional<bool> I_within_bound() const {
        if (!bound_I) return std::nullopt;
        return abs(I_exact) <= *bound_I;
    }
    std::optional<bool> II_within_bound() const {
        if (!bound_II) return std::nullopt;
        return abs(II_exact) <= *bound_II;
    }
};

/// C(d,d/2) C(d/2,d/4) |E|; claimed only for 4 | d and even r.
inline std::optional<Rational> bound_I_value(std::size_t d, std::size_t r, std::size_t set_size) {
    if (d % 4 != 0 || r % 2 != 0) return std::nullopt;
    return Rational(central_constant(d) * set_size);
}

/// q^(r-1) C(d,r)/d C(d,d/2) C(d/2,d/4) |E|.
inline std::optional<Rational> bound_II_value(std::size_t d, std::uint64_t q, std::size_t r, std::size_t set_size) {
    if (d % 4 != 0 || r % 2 != 0) return std::nullopt;
    const BigInt num = binom(static_cast<std::int64_t>(d), static_cast<std::int64_t>(r)) * central_constant(d) * set_size;
    if (r == 0) return make_rational(num, BigInt(d) * q);
    return make_rational(ipow(BigInt(q), r - 1) * num, BigInt(d));
}

inline Rational main_term_value(std::size_t d, std::uint64_t q, std::size_t r, std::size_t set_size) {
    const BigInt e = set_size;
    return make_rational(e * e * sphere_size(d, r, q), ipow(BigInt(q), d));
}

/// Reports for every r = 0..d, sharing one transform. When the domain exceeds
/// the spectral budget the float fields are left empty and only exact routes run.
inline std::vector<LambdaReport> decompose_all(const PointSet& e) {
    if (e.empty()) throw std::invalid_argument("decomposition needs a nonempty set");
    const std::size_t d = e.dim();
    const std::uint64_t q = e.field().q();
    const KrawtchoukTable k({d, q});
    const auto lambdas = distance_distribution(e);
    const auto exact_energy = exact_energy_by_weight(k, lambdas);
    const BigInt space = ipow(BigInt(q), d);

    std::optional<std::vector<double>> energy;
    try {
        energy = spectral_energy_by_weight(e);
    } catch (const DomainTooLarge&) {
        energy.reset();
    }

    std::vector<LambdaReport> out;
    for (std::size_t r = 0; r <= d; ++r) {
        LambdaReport rep;
        rep.r = r;
        rep.set_size = e.size();
        rep.lambda_exact = lambdas[r];
        rep.main_term = main_term_value(d, q, r, e.size());
        rep.residual_exact = Rational(rep.lambda_exact) - rep.main_term;
        BigInt even = 0, odd = 0;
        for (std::size_t t = 1; t <= d; ++t) (t % 2 == 0 ? even : odd) += k.at(r, t) * exact_energy[t];
        rep.I_exact = make_rational(even, space);
        rep.II_exact = make_rational(odd, space);
        if (energy) {
            const double n = to_double(space);
            double i_part = 0, ii_part = 0, total = 0;
            for (std::size_t t = 0; t <= d; ++t) {
                const double term = to_double(k.at(r, t)) * (*energy)[t] / n;
                total += term;
                if (t == 0) continue;
                (t % 2 == 0 ? i_part : ii_part) += term;
            }
            rep.lambda_spectral = total;
            rep.I = i_part;
            rep.II = ii_part;
        }
        rep.bound_I = bound_I_value(d, r, e.size());
        rep.bound_II = bound_II_value(d, q, r, e.size());
        out.push_back(std::move(rep));
    }
    return out;
}

inline LambdaReport decompose(const PointSet& e, std::size_t r) {
    if (r > e.dim()) throw std::out_of_range("distance exceeds dimension");
    return decompose_all(e)[r];
}

/// { r : lambda_r > 0 }.
inline std::vector<std::size_t> distance_set(const PointSet& e) {
    if (e.empty()) throw std::invalid_argument("distance set of an empty set");
    const auto counts = e.distance_counts();
    std::vector<std::size_t> out;
    for (std::size_t r = 0; r < counts.size(); ++r)
        if (counts[r] > 0) out.push_back(r);
    return out;
}

struct ThresholdReport {
    std::size_t d;
    std::uint64_t q;
    Rational threshold;  // q^(d-1)/d C(d,d/2) C(d/2,d/4)
    BigInt space_size;   // q^d
    bool vacuous;        // threshold >= q^d
    std::uint64_t least_nonvacuous_q;      // smallest prime power above C(d,d/2)C(d/2,d/4)/d
    std::uint64_t least_nonvacuous_odd_q;  // same, restricted to odd characteristic
};

inline ThresholdReport threshold(std::size_t d, std::uint64_t q) {
    if (d == 0 || d % 4 != 0) throw std::invalid_argument("threshold requires 4 | d");
    if (q < 2) throw std::invalid_argument("field order must be >= 2");
    const BigInt c = central_constant(d);
    ThresholdReport rep{d, q, make_rational(ipow(BigInt(q), d - 1) * c, BigInt(d)), ipow(BigInt(q), d), false, 0, 0};
    rep.vacuous = rep.threshold >= Rational(rep.space_size);
    const Rational ratio = make_rational(c, BigInt(d));
    for (std::uint64_t cand = 2; rep.least_nonvacuous_q == 0 || rep.least_nonvacuous_odd_q == 0; ++cand) {
        if (!is_prime_power(cand) || Rational(cand) <= ratio) continue;
        if (rep.least_nonvacuous_q == 0) rep.least_nonvacuous_q = cand;
        if (rep.least_nonvacuous_odd_q == 0 && cand % 2 == 1) rep.least_nonvacuous_odd_q = cand;
    }
    return rep;
}

enum class DistanceStatus { Present, Consistent, Counterexample, AbsentOutsideProofRange };

inline const char* to_string(DistanceStatus s) {
    switch (s) {
        case DistanceStatus::Present: return "present";
        case DistanceStatus::Consistent: return "consistent";
        case DistanceStatus::Counterexample: return "COUNTEREXAMPLE";
        case DistanceStatus::AbsentOutsideProofRange: return "absent (outside proof's stated range)";
    }
    return "?";
}

/// A missing distance only contradicts the theorem above the threshold and for 0 < r < d.
inline DistanceStatus classify_distance(bool present, bool above_threshold, bool outside_proof_range) {
    if (present) return DistanceStatus::Present;
    if (outside_proof_range) return DistanceStatus::AbsentOutsideProofRange;
    return above_threshold ? DistanceStatus::Counterexample : DistanceStatus::Consistent;
}

struct TheoremRow {
    std::size_t r;
    BigInt lambda;
    bool present;
    bool outside_proof_range;     // r == d
    Rational margin_bound_II;        // main_term - bound_II
    Rational margin_conservative; // main_term - (bound_I + bound_II)
    bool bound_I_holds;           // |I| <= bound_I, measured exactly
    bool bound_II_holds;          // |II| <= bound_II, measured exactly
    DistanceStatus status;
};

struct TheoremCheck {
    std::size_t set_size;
    ThresholdReport threshold;
    bool above_threshold;
    std::vector<TheoremRow> rows;

    std::size_t counterexamples() const {
        return static_cast<std::size_t>(std::count_if(rows.begin(), rows.end(), [](const auto& row) {
            return row.status == DistanceStatus::Counterexample;
        }));
    }
};

/// Evaluates every even 0 < r <= d; r = d is flagged as outside the proof's range.
/// Needs 4 | d and odd characteristic.
inline TheoremCheck theorem_check(const PointSet& e) {
    if (e.empty()) throw std::invalid_argument("theorem check needs a nonempty set");
    if (!e.field().odd_characteristic()) throw std::invalid_argument("theorem check requires odd characteristic");
    const std::size_t d = e.dim();
    const std::uint64_t q = e.field().q();
    TheoremCheck out{e.size(), threshold(d, q), false, {}};
    out.above_threshold = Rational(e.size()) > out.threshold.threshold;

    const KrawtchoukTable k({d, q});
    const auto lambdas = distance_distribution(e);
    const auto exact_energy = exact_energy_by_weight(k, lambdas);
    const BigInt space = ipow(BigInt(q), d);

    for (std::size_t r = 2; r <= d; r += 2) {
        TheoremRow row{r, lambdas[r], lambdas[r] > 0, r == d, {}, {}, true, true, DistanceStatus::Present};
        const Rational main = main_term_value(d, q, r, e.size());
        const Rational b1 = *bound_I_value(d, r, e.size());
        const Rational b2 = *bound_II_value(d, q, r, e.size());
        row.margin_bound_II = main - b2;
        row.margin_conservative = main - (b1 + b2);
        BigInt even = 0, odd = 0;
        for (std::size_t t = 1; t <= d; ++t) (t % 2 == 0 ? even : odd) += k.at(r, t) * exact_energy[t];
        row.bound_I_holds = abs(make_rational(even, space)) <= b1;
        row.bound_II_holds = abs(make_rational(odd, space)) <= b2;
        row.status = classify_distance(row.present, out.above_threshold, row.outside_proof_range);
        out.rows.push_back(std::move(row));
    }
    return out;
}

// JSON encodings. Exact rationals become {"num": "...", "den": "..."}.

inline nlohmann::json rational_json(const Rational& v) {
    return {{"num", numerator(v).str()}, {"den", denominator(v).str()}};
}

inline nlohmann::json to_json(const LambdaReport& rep) {
    auto opt_rational = [](const std::optional<Rational>& v) { return v ? rational_json(*v) : nlohmann::json(nullptr); };
    auto opt = [](const auto& v) { return v ? nlohmann::json(*v) : nlohmann::json(nullptr); };
    return {
        {"r", rep.r},
        {"set_size", rep.set_size},
        {"lambda_exact", rep.lambda_exact.str()},
        {"lambda_spectral", opt(rep.lambda_spectral)},
        {"main_term", rational_json(rep.main_term)},
        {"residual_exact", rational_json(rep.residual_exact)},
        {"I", opt(rep.I)},
        {"II", opt(rep.II)},
        {"I_exact", rational_json(rep.I_exact)},
        {"II_exact", rational_json(rep.II_exact)},
        {"bound_I", opt_rational(rep.bound_I)},
        {"bound_II", opt_rational(rep.bound_II)},
        {"I_within_bound", opt(rep.I_within_bound())},
        {"II_within_bound", opt(rep.II_within_bound())},
        {"spectral_rounds_to_exact", opt(rep.spectral_rounds_to_exact())},
        {"decomposition_rel_error", opt(rep.decomposition_rel_error())},
    };
}

inline nlohmann::json to_json(const ThresholdReport& rep) {
    return {
        {"d", rep.d},
        {"q", rep.q},
        {"threshold", rational_json(rep.threshold)},
        {"space_size", rep.space_size.str()},
        {"vacuous", rep.vacuous},
        {"least_nonvacuous_q", rep.least_nonvacuous_q},
        {"least_nonvacuous_odd_q", rep.least_nonvacuous_odd_q},
    };
}

inline nlohmann::json to_json(const TheoremCheck& chk) {
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& row : chk.rows)
        rows.push_back({
            {"r", row.r},
            {"lambda", row.lambda.str()},
            {"present", row.present},
            {"outside_proof_range", row.outside_proof_range},
            {"margin_bound_II", rational_json(row.margin_bound_II)},
            {"margin_conservative", rational_json(row.margin_conservative)},
            {"bound_I_holds", row.bound_I_holds},
            {"bound_II_holds", row.bound_II_holds},
            {"status", to_string(row.status)},
        });
    return {{"set_size", chk.set_size}, {"above_threshold", chk.above_threshold}, {"threshold", to_json(chk.threshold)}, {"rows", rows}};
}

}  // namespace hamspec
