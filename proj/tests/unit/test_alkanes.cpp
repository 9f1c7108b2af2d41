#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <set>

#include "oracles/oracles.hpp"
#include "plumbline/alkanes.hpp"
#include "plumbline/rng.hpp"

using namespace plumbline;

namespace {

oracle::EdgeList edge_list(const Alkane& a)
{
    oracle::EdgeList out;
    for (const auto& e : a.edges()) out.emplace_back(e.u, e.v);
    return out;
}

std::vector<int> random_permutation(int n, Rng& rng)
{
    std::vector<int> p(n);
    std::iota(p.begin(), p.end(), 0);
    for (int k = n - 1; k > 0; --k) std::swap(p[k], p[rng.uniform_int(0, k)]);
    return p;
}

const std::vector<std::size_t> kA000602 = {1, 1, 1, 2, 3, 5, 9, 18, 35, 75, 159, 355, 802, 1858, 4347, 10359};

} // namespace

TEST(Alkane, Validation)
{
    EXPECT_NO_THROW(Alkane(1, {}));
    EXPECT_THROW(Alkane(0, {}), InvalidAlkane);
    EXPECT_THROW(Alkane(3, {{0, 1}}), InvalidAlkane);
    EXPECT_THROW(Alkane(3, {{0, 1}, {1, 2}, {0, 2}}), InvalidAlkane);
    EXPECT_THROW(Alkane(4, {{0, 1}, {0, 1}, {2, 3}}), InvalidAlkane);
    EXPECT_THROW(Alkane(2, {{0, 2}}), InvalidAlkane);
    EXPECT_THROW(Alkane(6, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {0, 5}}), InvalidAlkane);
    EXPECT_NO_THROW(Alkane(5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}}));
}

TEST(Enumerate, SmallExamples)
{
    const auto g1 = enumerate_alkanes(1);
    ASSERT_EQ(g1.size(), 1u);
    EXPECT_TRUE(g1[0].edges().empty());

    const auto g4 = enumerate_alkanes(4);
    ASSERT_EQ(g4.size(), 2u);
    std::multiset<int> max_degrees;
    for (const auto& a : g4) {
        int d = 0;
        for (int v = 0; v < 4; ++v) d = std::max(d, a.degree(v));
        max_degrees.insert(d);
    }
    EXPECT_EQ(max_degrees, (std::multiset<int>{2, 3}));
    EXPECT_THROW(enumerate_alkanes(0), RangeError);
    EXPECT_THROW(enumerate_alkanes(17), RangeError);
    EXPECT_THROW(enumerate_alkanes(10, 8), RangeError);
}

TEST(Enumerate, CountsMatchOeisTable)
{
    for (int g = 1; g <= 14; ++g) EXPECT_EQ(enumerate_alkanes(g).size(), kA000602[g - 1]) << "g=" << g;
}

TEST(Enumerate, CountsMatchPruferOracle)
{
    for (int g = 1; g <= 8; ++g) EXPECT_EQ(enumerate_alkanes(g).size(), oracle::prufer_alkane_count(g)) << "g=" << g;
}

TEST(Enumerate, CountsMatchLeafGrowthOracle)
{
    const auto counts = oracle::leaf_growth_counts(12);
    for (int g = 1; g <= 12; ++g) EXPECT_EQ(enumerate_alkanes(g).size(), counts[g - 1]) << "g=" << g;
}

TEST(Enumerate, OutputIsSortedDistinctAndDeterministic)
{
    for (int g = 1; g <= 10; ++g) {
        const auto a = enumerate_alkanes(g);
        std::set<std::string> oracle_forms;
        for (std::size_t k = 0; k < a.size(); ++k) {
            if (k > 0) EXPECT_LT(canonical_code(a[k - 1]), canonical_code(a[k]));
            oracle_forms.insert(oracle::tree_form(g, edge_list(a[k])));
        }
        EXPECT_EQ(oracle_forms.size(), a.size());
        EXPECT_EQ(a, enumerate_alkanes(g));
    }
}

TEST(Enumerate, DistinctCodesAreNotIsomorphic)
{
    for (int g = 2; g <= 7; ++g) {
        const auto a = enumerate_alkanes(g);
        for (std::size_t i = 0; i < a.size(); ++i)
            for (std::size_t j = i + 1; j < a.size(); ++j)
                EXPECT_FALSE(oracle::isomorphic_by_permutation(g, edge_list(a[i]), edge_list(a[j])));
    }
}

TEST(Enumerate, ChainIsLabelledAlongThePath)
{
    for (int g = 1; g <= 9; ++g) {
        int chains = 0;
        for (const auto& a : enumerate_alkanes(g))
            if (is_chain(a)) {
                ++chains;
                for (int v = 0; v + 1 < g; ++v) EXPECT_TRUE(a.has_edge(v, v + 1));
            }
        EXPECT_EQ(chains, 1);
    }
}

TEST(CanonicalCode, Examples)
{
    EXPECT_EQ(canonical_code(Alkane(1, {})).code, "()");
    const Alkane p3(3, {{0, 1}, {1, 2}});
    const Alkane p3b(3, {{0, 2}, {2, 1}});
    EXPECT_EQ(canonical_code(p3), canonical_code(p3b));
    EXPECT_NE(canonical_code(chain_alkane(4)), canonical_code(star_alkane(4)));
}

TEST(CanonicalCode, InvariantUnderRelabeling)
{
    Rng rng(2024);
    for (int trial = 0; trial < 1000; ++trial) {
        const int g = static_cast<int>(rng.uniform_int(1, 12));
        const auto all = enumerate_alkanes(g);
        const Alkane& a = all[rng.uniform_int(0, static_cast<std::int64_t>(all.size()) - 1)];
        const Alkane b = a.relabeled(random_permutation(g, rng));
        ASSERT_EQ(canonical_code(a), canonical_code(b));
    }
}

TEST(CanonicalCode, BicentroidTrees)
{
    const Alkane p4(4, {{0, 1}, {1, 2}, {2, 3}});
    EXPECT_EQ(centroids(p4), (std::vector<int>{1, 2}));
    EXPECT_EQ(canonical_code(p4), canonical_code(p4.relabeled({3, 2, 1, 0})));
    EXPECT_EQ(centroids(star_alkane(5)), (std::vector<int>{0}));
}

TEST(Valency, Examples)
{
    const auto chain = valency_profile(chain_alkane(5));
    EXPECT_EQ(chain.gamma, (std::array<int, 4>{2, 3, 0, 0}));
    const auto star = valency_profile(star_alkane(5));
    EXPECT_EQ(star.gamma, (std::array<int, 4>{4, 0, 0, 1}));
    const auto methane = valency_profile(Alkane(1, {}));
    EXPECT_EQ(methane.isolated, 1);
    EXPECT_EQ(methane.gamma, (std::array<int, 4>{}));
}

TEST(Valency, HandshakeAndHydrogens)
{
    for (int g = 1; g <= 12; ++g)
        for (const auto& a : enumerate_alkanes(g)) {
            const auto p = valency_profile(a);
            int sum = 0;
            for (int j = 1; j <= 4; ++j) sum += j * p[j];
            EXPECT_EQ(sum, 2 * (g - 1));
            EXPECT_EQ(hydrogen_count(a), 2 * g + 2);
        }
    EXPECT_EQ(hydrogen_count(Alkane(1, {})), 4);
    EXPECT_EQ(hydrogen_count(chain_alkane(3)), 8);
}

TEST(IsChain, Examples)
{
    EXPECT_TRUE(is_chain(chain_alkane(5)));
    EXPECT_FALSE(is_chain(star_alkane(4)));
    EXPECT_TRUE(is_chain(Alkane(1, {})));
    EXPECT_TRUE(is_chain(Alkane(3, {{0, 2}, {2, 1}})));
}
