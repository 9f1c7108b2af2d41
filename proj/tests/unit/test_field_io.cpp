#include <gtest/gtest.h>

#include <set>

#include "plumbline/json_io.hpp"
#include "plumbline/linalg.hpp"
#include "plumbline/rng.hpp"

using namespace plumbline;
using Q = GaussianRational;

TEST(Rational, Parsing)
{
    EXPECT_EQ(parse_rational("3/4"), mpq_class(3, 4));
    EXPECT_EQ(parse_rational("-6/8"), mpq_class(-3, 4));
    EXPECT_EQ(parse_rational("7"), mpq_class(7));
    EXPECT_EQ(parse_rational("0.125"), mpq_class(1, 8));
    EXPECT_EQ(parse_rational("2.5e-1"), mpq_class(1, 4));
    EXPECT_EQ(parse_rational("1E2"), mpq_class(100));
    EXPECT_THROW(parse_rational("1/0"), DomainError);
    EXPECT_THROW(parse_rational("abc"), DomainError);
    EXPECT_THROW(parse_rational(""), DomainError);
    EXPECT_EQ(rational_to_string(mpq_class(3, 4)), "3/4");
    EXPECT_EQ(rational_to_string(mpq_class(-2)), "-2");
}

TEST(GaussianRational, Arithmetic)
{
    const Q i = Q::i();
    EXPECT_EQ(i * i, Q(-1));
    const Q z(mpq_class(1, 2), mpq_class(3));
    EXPECT_EQ(z * (Q(1) / z), Q(1));
    EXPECT_EQ(z.conj() * z, Q(z.norm()));
    EXPECT_THROW(Q(1) / Q(0), DomainError);
}

TEST(Rng, DeterministicAndLabelledSubstreams)
{
    Rng a(42), b(42);
    for (int k = 0; k < 100; ++k) EXPECT_EQ(a.next(), b.next());
    const Rng base(7);
    Rng s1 = base.substream("alpha"), s2 = base.substream("alpha"), s3 = base.substream("beta");
    EXPECT_EQ(s1.next(), s2.next());
    EXPECT_NE(s1.next(), s3.next());
    EXPECT_NE(base.substream("alpha", 0).next(), base.substream("alpha", 1).next());
}

TEST(Rng, UniformIntCoversRangeUniformly)
{
    Rng r(3);
    std::vector<int> hits(7, 0);
    for (int k = 0; k < 70000; ++k) {
        const auto x = r.uniform_int(-3, 3);
        ASSERT_GE(x, -3);
        ASSERT_LE(x, 3);
        ++hits[x + 3];
    }
    for (int h : hits) EXPECT_NEAR(h, 10000, 500);
    EXPECT_EQ(r.uniform_int(5, 5), 5);
}

TEST(Rng, DrawsRespectBounds)
{
    Rng r(1);
    for (int k = 0; k < 1000; ++k) {
        const mpq_class q = r.rational(9, 7);
        EXPECT_LE(abs(q.get_num()), 9);
        EXPECT_LE(q.get_den(), 7);
        EXPECT_FALSE(r.nonzero_gaussian().is_zero());
    }
}

TEST(Linalg, RankExactAndFloat)
{
    std::vector<std::vector<Q>> rows = {{Q(1), Q(2), Q(3)}, {Q(2), Q(4), Q(6)}, {Q(0), Q(1), Q(0)}};
    EXPECT_EQ(rank(rows), 2u);
    std::vector<std::vector<Complex>> f = {{1.0, 2.0}, {2.0, 4.0 + 1e-14}};
    EXPECT_EQ(rank(f), 1u);
    EXPECT_EQ(rank(std::vector<std::vector<Q>>{}), 0u);
    Matrix<Q> m(2, 2, Q(1));
    EXPECT_TRUE(all_2x2_minors_vanish(m));
    m(1, 1) = Q(2);
    EXPECT_FALSE(all_2x2_minors_vanish(m));
}

TEST(Linalg, PivotMinorsAgreeWithAllMinors)
{
    const auto brute = [](const Matrix<Q>& m) {
        for (std::size_t i = 0; i < m.rows(); ++i)
            for (std::size_t k = i + 1; k < m.rows(); ++k)
                for (std::size_t j = 0; j < m.cols(); ++j)
                    for (std::size_t l = j + 1; l < m.cols(); ++l)
                        if (!(m(i, j) * m(k, l) - m(i, l) * m(k, j)).is_zero()) return false;
        return true;
    };
    Rng r(11);
    int rank_one = 0;
    for (int trial = 0; trial < 400; ++trial) {
        const std::size_t rows = r.uniform_int(1, 4), cols = r.uniform_int(1, 5);
        Matrix<Q> m(rows, cols, Q(0));
        if (trial % 2 == 0) {
            std::vector<Q> x(rows), y(cols);
            for (auto& a : x) a = r.uniform_int(0, 2) == 0 ? Q(0) : r.nonzero_gaussian();
            for (auto& b : y) b = r.uniform_int(0, 2) == 0 ? Q(0) : r.nonzero_gaussian();
            for (std::size_t i = 0; i < rows; ++i)
                for (std::size_t j = 0; j < cols; ++j) m(i, j) = x[i] * y[j];
            if (trial % 4 == 0) m(r.uniform_int(0, rows - 1), r.uniform_int(0, cols - 1)) += Q(1);
        } else {
            for (std::size_t i = 0; i < rows; ++i)
                for (std::size_t j = 0; j < cols; ++j)
                    if (r.uniform_int(0, 3) == 0) m(i, j) = r.nonzero_gaussian();
        }
        const bool expected = brute(m);
        rank_one += expected;
        EXPECT_EQ(all_2x2_minors_vanish(m), expected);
    }
    EXPECT_GT(rank_one, 100);
    EXPECT_LT(rank_one, 400);
    // Entries far below double range still serve as pivots.
    Matrix<Q> tiny(2, 2, Q(0));
    mpq_class eps(1);
    mpz_class den;
    mpz_ui_pow_ui(den.get_mpz_t(), 10, 400);
    eps /= den;
    tiny(0, 0) = Q(eps);
    tiny(1, 1) = Q(eps);
    EXPECT_FALSE(all_2x2_minors_vanish(tiny));
}

TEST(JsonIo, JetRoundTrip)
{
    const JetRing<Q> ring({"a", "b"}, 3);
    const auto j = ring.variable("a") * Q(mpq_class(3, 4), mpq_class(-1)) + ring.constant(Q(2));
    const auto text = io::jet_to_json(j);
    EXPECT_EQ(io::jet_from_json<Q>(text), j);
    EXPECT_EQ(text["terms"][0]["re"], "2");
}

TEST(JsonIo, ScalarReaders)
{
    EXPECT_EQ(io::scalar_from_json<Q>(io::json::parse(R"(["1/2", 3])")), Q(mpq_class(1, 2), mpq_class(3)));
    EXPECT_EQ(io::scalar_from_json<Q>(io::json::parse("0.5")), Q(mpq_class(1, 2)));
    EXPECT_THROW(io::scalar_from_json<Q>(io::json::parse("[1, 2, 3]")), DomainError);
    const Complex c = io::scalar_from_json<Complex>(io::json::parse("[0.25, -1]"));
    EXPECT_EQ(c, Complex(0.25, -1));
}

TEST(JsonIo, AlkaneRoundTrip)
{
    for (const auto& a : enumerate_alkanes(7)) {
        const auto j = io::alkane_to_json(a);
        EXPECT_EQ(j["edges"][0][0].get<int>() >= 1, true);
        EXPECT_EQ(io::alkane_from_json(j), a);
    }
    EXPECT_THROW(io::alkane_from_json(io::json::parse(R"({"genus": 3, "edges": [[1, 2], [1, 3], [2, 3]]})")),
                 InvalidAlkane);
}

TEST(JsonIo, TreeRoundTrip)
{
    Rng rng(5);
    for (const auto& a : enumerate_alkanes(6)) {
        const auto c = random_tree_config<Q>(a, rng);
        const auto back = io::tree_from_json<Q>(io::tree_to_json(c));
        const JetRing<Q> ring(edge_variables(a), 1);
        EXPECT_EQ(tree_period_first_order(back, ring, ScaleMode::ExactUnits).entries,
                  tree_period_first_order(c, ring, ScaleMode::ExactUnits).entries);
    }
}
