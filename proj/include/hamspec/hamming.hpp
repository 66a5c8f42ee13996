#pragma once

// Vectors of F_q^d, Hamming weight and distance, spheres, and the set-file format.

#include <algorithm>
#include <charconv>
#include <cstdint>
#include <istream>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "hamspec/gf.hpp"
#include "hamspec/numeric.hpp"

namespace hamspec {

/// Number of points of F_q^d; throws if it does not fit in 64 bits.
inline std::uint64_t space_size(std::uint32_t q, std::size_t d) { return ipow_u64(q, d); }

/// A point of F_q^d stored as canonical element indices.
class FqVector {
public:
    FqVector(FieldSpec field, std::vector<std::uint32_t> coords) : field_(std::move(field)), coords_(std::move(coords)) {
        for (auto c : coords_)
            if (c >= field_.q()) throw std::out_of_range("coordinate index out of range");
    }

    static FqVector zero(const FieldSpec& field, std::size_t d) { return {field, std::vector<std::uint32_t>(d, 0)}; }

    static FqVector unit(const FieldSpec& field, std::size_t d, std::size_t axis) {
        std::vector<std::uint32_t> c(d, 0);
        c.at(axis) = 1;
        return {field, std::move(c)};
    }

    /// Inverse of linear_index(): coordinate 0 is the least significant base-q digit.
    static FqVector from_linear(const FieldSpec& field, std::size_t d, std::uint64_t index) {
        std::vector<std::uint32_t> c(d);
        for (auto& ci : c) {
            ci = static_cast<std::uint32_t>(index % field.q());
            index /= field.q();
        }
        return {field, std::move(c)};
    }

    const FieldSpec& field() const { return field_; }
    std::size_t dim() const { return coords_.size(); }
    std::uint32_t index_at(std::size_t i) const { return coords_[i]; }
    const std::vector<std::uint32_t>& indices() const { return coords_; }
    FieldElement operator[](std::size_t i) const { return {field_, coords_[i]}; }

    std::uint64_t linear_index() const {
        std::uint64_t index = 0;
        for (std::size_t i = coords_.size(); i-- > 0;) index = index * field_.q() + coords_[i];
        return index;
    }

    FqVector operator+(const FqVector& o) const { return combine(o, false); }
    FqVector operator-(const FqVector& o) const { return combine(o, true); }

    friend bool operator==(const FqVector& a, const FqVector& b) {
        return a.coords_ == b.coords_ && a.field_ == b.field_;
    }

private:
    FqVector combine(const FqVector& o, bool subtract) const {
        if (!(field_ == o.field_) || dim() != o.dim()) throw std::invalid_argument("vector field or dimension mismatch");
        std::vector<std::uint32_t> c(dim());
        for (std::size_t i = 0; i < dim(); ++i)
            c[i] = subtract ? field_.sub(coords_[i], o.coords_[i]) : field_.add(coords_[i], o.coords_[i]);
        return {field_, std::move(c)};
    }

    FieldSpec field_;
    std::vector<std::uint32_t> coords_;
};

inline std::size_t weight(const FqVector& v) {
    return static_cast<std::size_t>(std::count_if(v.indices().begin(), v.indices().end(), [](auto c) { return c != 0; }));
}

inline std::size_t distance(const FqVector& u, const FqVector& v) {
    if (!(u.field() == v.field()) || u.dim() != v.dim()) throw std::invalid_argument("vector field or dimension mismatch");
    std::size_t n = 0;
    for (std::size_t i = 0; i < u.dim(); ++i) n += u.index_at(i) != v.index_at(i);
    return n;
}

/// |S_r| = (q-1)^r C(d,r).
inline BigInt sphere_size(std::size_t d, std::size_t r, std::uint64_t q) {
    if (r > d) throw std::out_of_range("sphere radius exceeds dimension");
    return ipow(BigInt(q - 1), r) * binom(static_cast<std::int64_t>(d), static_cast<std::int64_t>(r));
}

/// Lazily yields the Hamming sphere of radius r around a center.
///
/// Supports are visited in ascending lexicographic order; within a support the
/// nonzero offsets run as a base-(q-1) counter whose first support position is
/// least significant. Each yielded vector is center + offset.
class SphereStream {
public:
    SphereStream(FqVector center, std::size_t r) : center_(std::move(center)), r_(r) {
        if (r_ > center_.dim()) throw std::out_of_range("sphere radius exceeds dimension");
        support_.resize(r_);
        for (std::size_t i = 0; i < r_; ++i) support_[i] = i;
        offsets_.assign(r_, 1);
    }

    std::optional<FqVector> next() {
        if (done_) return std::nullopt;
        std::vector<std::uint32_t> c = center_.indices();
        const auto& f = center_.field();
        for (std::size_t j = 0; j < r_; ++j) c[support_[j]] = f.add(c[support_[j]], offsets_[j]);
        advance();
        return FqVector(f, std::move(c));
    }

private:
    void advance() {
        const std::uint32_t q = center_.field().q();
        for (std::size_t j = 0; j < r_; ++j) {
            if (++offsets_[j] < q) return;
            offsets_[j] = 1;
        }
        // next support set in lexicographic order
        const std::size_t d = center_.dim();
        std::size_t j = r_;
        while (j > 0 && support_[j - 1] == d - r_ + (j - 1)) --j;
        if (j == 0) {
            done_ = true;
            return;
        }
        ++support_[j - 1];
        for (std::size_t k = j; k < r_; ++k) support_[k] = support_[k - 1] + 1;
    }

    FqVector center_;
    std::size_t r_;
    std::vector<std::size_t> support_;
    std::vector<std::uint32_t> offsets_;
    bool done_ = false;
};

inline SphereStream enumerate_sphere(const FqVector& center, std::size_t r) { return {center, r}; }

/// Raised on malformed set files; line is 1-based.
class SetFileError : public std::runtime_error {
public:
    SetFileError(std::size_t line, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
    std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

/// Parses one vector per line as d comma-separated canonical element encodings.
/// Blank lines and '#' comments are skipped; duplicates are rejected.
inline std::vector<FqVector> parse_set_file(std::istream& in, const FieldSpec& field, std::size_t d) {
    std::vector<FqVector> points;
    std::unordered_map<std::uint64_t, std::size_t> seen;
    std::string raw;
    std::size_t lineno = 0;
    auto trim = [](std::string_view s) {
        const auto b = s.find_first_not_of(" \t\r");
        if (b == std::string_view::npos) return std::string_view{};
        const auto e = s.find_last_not_of(" \t\r");
        return s.substr(b, e - b + 1);
    };
    while (std::getline(in, raw)) {
        ++lineno;
        const std::string_view line = trim(raw);
        if (line.empty() || line.front() == '#') continue;
        std::vector<std::uint32_t> coords;
        std::size_t pos = 0;
        while (true) {
            const auto comma = line.find(',', pos);
            const std::string_view tok = trim(line.substr(pos, comma == std::string_view::npos ? line.npos : comma - pos));
            std::uint64_t value = 0;
            const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
            if (tok.empty() || ec != std::errc{} || ptr != tok.data() + tok.size())
                throw SetFileError(lineno, "malformed coordinate '" + std::string(tok) + "'");
            if (value >= field.q())
                throw SetFileError(lineno, "coordinate " + std::to_string(value) + " out of range [0, " + std::to_string(field.q()) + ")");
            coords.push_back(static_cast<std::uint32_t>(value));
            if (comma == std::string_view::npos) break;
            pos = comma + 1;
        }
        if (coords.size() != d)
            throw SetFileError(lineno, "expected " + std::to_string(d) + " coordinates, found " + std::to_string(coords.size()));
        FqVector v(field, std::move(coords));
        const auto [it, inserted] = seen.emplace(v.linear_index(), lineno);
        if (!inserted) throw SetFileError(lineno, "duplicate vector (first seen on line " + std::to_string(it->second) + ")");
        points.push_back(std::move(v));
    }
    return points;
}

inline void write_set_file(std::ostream& out, const std::vector<FqVector>& points) {
    for (const auto& v : points) {
        for (std::size_t i = 0; i < v.dim(); ++i) out << (i ? "," : "") << v.index_at(i);
        out << '\n';
    }
}

inline std::string set_file_text(const std::vector<FqVector>& points) {
    std::ostringstream os;
    write_set_file(os, points);
    return os.str();
}

}  // namespace hamspec
