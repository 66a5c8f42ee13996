#include <gtest/gtest.h>

#include <set>
#include <sstream>

#include "hamspec/hamming.hpp"
#include "hamspec/rng.hpp"
#include "oracles.hpp"

using namespace hamspec;

namespace {
FqVector vec(const FieldSpec& f, std::vector<std::uint32_t> c) { return {f, std::move(c)}; }
}  // namespace

TEST(Weight, Examples) {
    const auto f = field_make(3, 1);
    EXPECT_EQ(weight(vec(f, {1, 0, 2, 0})), 2u);
    EXPECT_EQ(weight(FqVector::zero(f, 4)), 0u);
    EXPECT_EQ(weight(vec(f, {1, 1, 1, 1})), 4u);
}

TEST(Distance, Examples) {
    const auto f = field_make(3, 1);
    const auto u = vec(f, {1, 1, 1, 1});
    EXPECT_EQ(distance(u, u), 0u);
    EXPECT_EQ(distance(u, vec(f, {1, 2, 1, 0})), 2u);
    EXPECT_THROW(distance(u, vec(f, {1, 1, 1})), std::invalid_argument);
    EXPECT_THROW(distance(u, vec(field_make(5, 1), {1, 1, 1, 1})), std::invalid_argument);
}

TEST(Distance, IsAMetricOnRandomTriples) {
    const auto f = field_make(5, 1);
    CounterRng rng(7);
    const std::uint64_t n = space_size(5, 6);
    for (int trial = 0; trial < 500; ++trial) {
        const auto a = FqVector::from_linear(f, 6, rng.below(n));
        const auto b = FqVector::from_linear(f, 6, rng.below(n));
        const auto c = FqVector::from_linear(f, 6, rng.below(n));
        EXPECT_EQ(distance(a, b), distance(b, a));
        EXPECT_EQ(distance(a, b), weight(a - b));
        EXPECT_EQ(distance(a, b) == 0, a == b);
        EXPECT_LE(distance(a, c), distance(a, b) + distance(b, c));
    }
}

TEST(Binom, ExamplesAndPascalOracle) {
    EXPECT_EQ(binom(4, 2), 6);
    EXPECT_EQ(binom(4, 5), 0);
    EXPECT_EQ(binom(4, -1), 0);
    EXPECT_EQ(binom(8, 4), 70);
    const auto c = oracle::pascal(60);
    for (std::int64_t n = 0; n <= 60; ++n)
        for (std::int64_t k = 0; k <= n; ++k) ASSERT_EQ(binom(n, k), BigInt(c[n][k])) << n << "," << k;
    EXPECT_EQ(binom(100, 50).str(), "100891344545564193334812497256");
}

TEST(SphereSize, ExamplesMatchEnumeration) {
    EXPECT_EQ(sphere_size(4, 0, 3), 1);
    EXPECT_EQ(sphere_size(4, 2, 3), 24);
    EXPECT_EQ(sphere_size(4, 4, 3), 16);
    std::vector<std::uint64_t> by_weight(5, 0);
    for (const auto& v : oracle::all_vectors(3, 4)) ++by_weight[oracle::weight(v)];
    for (std::size_t r = 0; r <= 4; ++r) EXPECT_EQ(sphere_size(4, r, 3), BigInt(by_weight[r]));
    EXPECT_THROW(sphere_size(4, 5, 3), std::out_of_range);
}

TEST(SphereSize, PartitionIdentity) {
    for (std::size_t d = 1; d <= 8; ++d)
        for (std::uint64_t q : {2, 3, 4, 5, 7, 8, 9}) {
            BigInt total = 0;
            for (std::size_t r = 0; r <= d; ++r) total += sphere_size(d, r, q);
            EXPECT_EQ(total, ipow(BigInt(q), d)) << d << "," << q;
        }
}

TEST(EnumerateSphere, RadiusZeroIsCenter) {
    const auto f = field_make(5, 1);
    const auto c = vec(f, {1, 2, 3});
    auto s = enumerate_sphere(c, 0);
    EXPECT_EQ(s.next(), c);
    EXPECT_FALSE(s.next());
    EXPECT_THROW(enumerate_sphere(c, 4), std::out_of_range);
}

TEST(EnumerateSphere, MatchesBruteForceFilter) {
    for (auto [p, l] : std::vector<std::pair<Residue, std::uint32_t>>{{2, 1}, {3, 1}, {2, 2}, {5, 1}}) {
        const auto f = field_make(p, l, {.allow_characteristic_two = true});
        for (std::size_t d = 1; d <= 4; ++d) {
            const std::uint64_t n = space_size(f.q(), d);
            for (std::uint64_t centre_idx : {std::uint64_t{0}, n / 3, n - 1}) {
                const auto centre = FqVector::from_linear(f, d, centre_idx);
                for (std::size_t r = 0; r <= d; ++r) {
                    std::set<std::uint64_t> streamed, filtered;
                    auto s = enumerate_sphere(centre, r);
                    while (auto v = s.next()) EXPECT_TRUE(streamed.insert(v->linear_index()).second);
                    for (std::uint64_t i = 0; i < n; ++i)
                        if (distance(FqVector::from_linear(f, d, i), centre) == r) filtered.insert(i);
                    EXPECT_EQ(streamed, filtered);
                    EXPECT_EQ(BigInt(streamed.size()), sphere_size(d, r, f.q()));
                }
            }
        }
    }
}

TEST(EnumerateSphere, DeterministicOrder) {
    const auto f = field_make(3, 1);
    auto s = enumerate_sphere(FqVector::zero(f, 4), 2);
    // support {0,1} first, first support coordinate varying fastest
    EXPECT_EQ(s.next()->indices(), (std::vector<std::uint32_t>{1, 1, 0, 0}));
    EXPECT_EQ(s.next()->indices(), (std::vector<std::uint32_t>{2, 1, 0, 0}));
    EXPECT_EQ(s.next()->indices(), (std::vector<std::uint32_t>{1, 2, 0, 0}));
    EXPECT_EQ(s.next()->indices(), (std::vector<std::uint32_t>{2, 2, 0, 0}));
    EXPECT_EQ(s.next()->indices(), (std::vector<std::uint32_t>{1, 0, 1, 0}));
}

TEST(SetFile, ParsesCommentsAndBlankLines) {
    const auto f = field_make(3, 2);
    std::istringstream in("# two points\n\n0,0,0\n 8, 3 ,1\n# end\n");
    const auto pts = parse_set_file(in, f, 3);
    ASSERT_EQ(pts.size(), 2u);
    EXPECT_EQ(pts[1].indices(), (std::vector<std::uint32_t>{8, 3, 1}));
}

TEST(SetFile, ErrorsCarryLineNumbers) {
    const auto f = field_make(3, 1);
    auto line_of = [&](const std::string& text) {
        std::istringstream in(text);
        try {
            parse_set_file(in, f, 2);
        } catch (const SetFileError& e) {
            return e.line();
        }
        return std::size_t{0};
    };
    EXPECT_EQ(line_of("0,1\n# c\n0,1\n"), 3u);  // duplicate
    EXPECT_EQ(line_of("0,1\n0,3\n"), 2u);       // out of range
    EXPECT_EQ(line_of("0,x\n"), 1u);            // malformed
    EXPECT_EQ(line_of("0,1,2\n"), 1u);          // wrong length
    EXPECT_EQ(line_of("0,\n"), 1u);
}

TEST(SetFile, WriteThenParseIsIdentity) {
    const auto f = field_make(5, 1);
    CounterRng rng(99);
    for (int trial = 0; trial < 20; ++trial) {
        std::vector<FqVector> pts;
        for (auto idx : sample_indices(rng, space_size(5, 3), 1 + rng.below(40))) pts.push_back(FqVector::from_linear(f, 3, idx));
        std::istringstream in(set_file_text(pts));
        EXPECT_EQ(parse_set_file(in, f, 3), pts);
    }
}
