#include <gtest/gtest.h>

#include <random>

#include "covtype/errors.hpp"
#include "covtype/homology.hpp"
#include "support.hpp"

using namespace covtype;
using namespace covtype::testing;

namespace {

using Betti = std::vector<std::size_t>;

SimplicialComplex cone_over_square() {
    return build_complex({{"a", "b", "x"}, {"b", "c", "x"}, {"c", "d", "x"}, {"a", "d", "x"}});
}

Gf2Vector chain_of(const SimplicialComplex& k, int n, const std::vector<Simplex>& support) {
    Gf2Vector v(k.count(n));
    for (const auto& s : support) v.set(k.index_of(s));
    return v;
}

bool is_cycle(const ChainData& c, int n, const Gf2Vector& z) { return (c.boundary(n) * z).is_zero(); }

}  // namespace

TEST(ChainData, BoundaryShapes) {
    ChainData edge(build_complex({{"a", "b"}}));
    EXPECT_EQ(edge.boundary(1), Gf2Matrix::from_strings({"1", "1"}));
    ChainData tri(triangle());
    EXPECT_EQ(tri.boundary(2), Gf2Matrix::from_strings({"1", "1", "1"}));
    ChainData tb(tetra_boundary());
    ASSERT_EQ(tb.boundary(2).rows(), 6u);
    ASSERT_EQ(tb.boundary(2).cols(), 4u);
    for (std::size_t c = 0; c < 4; ++c) EXPECT_EQ(tb.boundary(2).column(c).popcount(), 3u);
    EXPECT_EQ(tb.boundary(3).rows(), 4u);
    EXPECT_EQ(tb.boundary(3).cols(), 0u);
    EXPECT_TRUE((tb.boundary(1) * tb.boundary(2)).is_zero());
}

TEST(ChainData, MatchesLabelOracle) {
    for (const auto& b : bundled_surfaces()) {
        auto k = load(b.file);
        ChainData c(k);
        for (int n = 1; n <= k.dim(); ++n) EXPECT_EQ(to_int(c.boundary(n)), oracle_boundary(k, n)) << b.file;
    }
}

TEST(BettiNumbers, Examples) {
    EXPECT_EQ(betti_numbers(tetra_boundary()), (Betti{1, 0, 1}));
    EXPECT_EQ(betti_numbers(load("torus_7.txt")), (Betti{1, 2, 1}));
    EXPECT_EQ(betti_numbers(load("rp2_6.txt")), (Betti{1, 1, 1}));
    EXPECT_EQ(betti_numbers(load("point.txt")), (Betti{1}));
    EXPECT_EQ(betti_numbers(hollow_triangle()), (Betti{1, 1}));
    EXPECT_EQ(betti_numbers(solid_tetra()), (Betti{1, 0, 0, 0}));
    EXPECT_EQ(betti_numbers(load("two_spheres_wedge.txt")), (Betti{1, 0, 2}));
    EXPECT_EQ(betti_numbers(build_complex({{"a"}, {"b"}, {"c", "d"}})), (Betti{3, 0}));
}

TEST(BettiNumbers, BundledSurfacesMatchOracle) {
    for (const auto& b : bundled_surfaces()) {
        auto k = load(b.file);
        EXPECT_EQ(betti_numbers(k), oracle_betti(k)) << b.file;
        EXPECT_EQ(betti_numbers(k), b.surface.betti()) << b.file;
    }
}

TEST(HomologyBasis, Examples) {
    auto tb = tetra_boundary();
    auto h2 = homology_basis(tb, 2);
    ASSERT_EQ(h2.size(), 1u);
    EXPECT_EQ(h2[0].popcount(), 4u);

    auto h1 = homology_basis(hollow_triangle(), 1);
    ASSERT_EQ(h1.size(), 1u);
    EXPECT_EQ(h1[0].popcount(), 3u);

    EXPECT_TRUE(homology_basis(cone_over_square(), 1).empty());
    EXPECT_TRUE(homology_basis(tb, 5).empty());
}

TEST(SurplusCycle, SideSphere) {
    auto k = load("solid_tetra_side_sphere.txt");
    EXPECT_EQ(betti_numbers(k), (Betti{1, 0, 1, 0}));
    auto s = surplus_cycle(k, k.simplices(2));
    ASSERT_TRUE(s);
    auto expected = chain_of(k, 2, {Simplex{"1", "2", "3"}, Simplex{"1", "2", "4"}, Simplex{"1", "3", "4"}, Simplex{"2", "3", "4"}});
    EXPECT_EQ(s->cycle, expected);
    EXPECT_EQ(s->sigma, (Simplex{"1", "2", "3"}));
    // independently: the cycle is d3 of the only tetrahedron
    ChainData c(k);
    EXPECT_EQ(c.boundary(3).column(0), expected);
}

TEST(SurplusCycle, AbsentCases) {
    auto tb = tetra_boundary();
    EXPECT_FALSE(surplus_cycle(tb, tb.simplices(2)));
    auto st = solid_tetra();
    std::vector<Simplex> three(st.simplices(2).begin(), st.simplices(2).begin() + 3);
    EXPECT_FALSE(surplus_cycle(st, three));
    EXPECT_THROW(surplus_cycle(st, {Simplex{"a", "b", "z"}}), PreconditionError);
}

TEST(H2EpiWitness, Examples) {
    auto tb = tetra_boundary();
    auto z = homology_basis(tb, 2).front();
    EXPECT_EQ(h2_epi_witness(tb, tb, z), z);

    auto k = load("solid_tetra_side_sphere.txt");
    auto l = remove_two_simplex(skeleton(k, 2), Simplex{"1", "2", "3"}).complex;
    auto zk = chain_of(k, 2, {Simplex{"1", "2", "3"}, Simplex{"1", "2", "5"}, Simplex{"1", "3", "5"}, Simplex{"2", "3", "5"}});
    auto c = h2_epi_witness(k, l, zk);
    ASSERT_TRUE(c);
    ChainData ck(k);
    EXPECT_TRUE(is_cycle(ck, 2, *c));
    EXPECT_FALSE(c->get(k.index_of(Simplex{"1", "2", "3"})));
    EXPECT_TRUE(solve(ck.boundary(3), *c + zk));
    EXPECT_EQ(*c, zk + ck.boundary(3).column(0));

    auto single = build_complex({{"a", "b", "c"}, {"a", "d"}, {"b", "d"}, {"c", "d"}});
    EXPECT_FALSE(h2_epi_witness(tb, single, z));

    auto not_cycle = Gf2Vector::unit(tb.count(2), 0);
    EXPECT_THROW(h2_epi_witness(tb, tb, not_cycle), PreconditionError);
    EXPECT_THROW(h2_epi_witness(tb, load("torus_7.txt"), z), PreconditionError);
}

TEST(Excision, SideSphereDropsOneClass) {
    auto k = load("solid_tetra_side_sphere.txt");
    auto l = skeleton(k, 2);
    EXPECT_EQ(betti_numbers(l), (Betti{1, 0, 2}));
    auto s = surplus_cycle(k, l.simplices(2));
    ASSERT_TRUE(s);
    auto t = remove_two_simplex(l, s->sigma).complex;
    EXPECT_EQ(betti_numbers(t), (Betti{1, 0, 1}));
    EXPECT_EQ(t.f_vector(), (FVector{5, 9, 6}));
}

TEST(ComplementRepresentatives, KeepsIndependentCandidates) {
    auto fixed = std::vector{Gf2Vector::from_string("1100")};
    auto cands = std::vector{Gf2Vector::from_string("1100"), Gf2Vector::from_string("0110"),
                             Gf2Vector::from_string("1010"), Gf2Vector::from_string("0001")};
    auto kept = complement_representatives(fixed, cands);
    ASSERT_EQ(kept.size(), 2u);
    EXPECT_EQ(kept[0].to_string(), "0110");
    EXPECT_EQ(kept[1].to_string(), "0001");
}

TEST(EmbedChain, PadsWithZeros) {
    auto tb = tetra_boundary();
    auto sub = build_complex({{"a", "b", "d"}, {"b", "c"}, {"a", "c"}, {"c", "d"}});
    auto c = embed_chain(sub, tb, 2, Gf2Vector::from_string("1"));
    EXPECT_EQ(c.support(), (std::vector<std::size_t>{tb.index_of(Simplex{"a", "b", "d"})}));
    EXPECT_THROW(embed_chain(sub, tb, 2, Gf2Vector::from_string("11")), PreconditionError);
}

// ---------------------------------------------------------------------------

class HomologyRandom : public ::testing::TestWithParam<int> {};

TEST_P(HomologyRandom, ProfileInvariants) {
    std::mt19937 rng(static_cast<unsigned>(GetParam()));
    for (int trial = 0; trial < 25; ++trial) {
        auto k = random_complex(rng, 8, 0.12, 0.25);
        if (trial % 3 == 0) k = cone_over_simplex(k, k.simplices(k.dim()).back(), "apex");
        ChainData c(k);
        for (int n = 1; n <= k.dim(); ++n) EXPECT_TRUE((c.boundary(n) * c.boundary(n + 1)).is_zero());

        auto profile = homology_profile(k);
        EXPECT_EQ(profile.betti, oracle_betti(k));
        long alt = 0;
        for (std::size_t n = 0; n < profile.betti.size(); ++n) {
            alt += (n % 2 ? -1L : 1L) * static_cast<long>(profile.betti[n]);
        }
        EXPECT_EQ(alt, euler_characteristic(k));

        for (int n = 0; n <= k.dim(); ++n) {
            const auto& reps = profile.cycle_reps[static_cast<std::size_t>(n)];
            ASSERT_EQ(reps.size(), profile.betti[static_cast<std::size_t>(n)]);
            for (const auto& z : reps) EXPECT_TRUE(is_cycle(c, n, z));
            // independent modulo boundaries
            auto bounds = image_basis(c.boundary(n + 1));
            auto all = bounds;
            all.insert(all.end(), reps.begin(), reps.end());
            if (!all.empty()) EXPECT_EQ(canonical_basis(all).size(), bounds.size() + reps.size());
        }
    }
}

TEST_P(HomologyRandom, ExcisionLowersOnlyB2) {
    std::mt19937 rng(static_cast<unsigned>(GetParam()) + 50);
    for (const auto& entry : surface_corpus(rng(), 1)) {
        auto k = entry.complex;
        auto l = skeleton(k, 2);
        while (true) {
            auto before = betti_numbers(l);
            auto s = surplus_cycle(k, l.simplices(2));
            if (!s) break;
            ChainData cl(l);
            auto restricted = Gf2Vector(l.count(2));
            for (auto i : s->cycle.support()) restricted.set(l.index_of(k.simplices(2)[i]));
            EXPECT_TRUE(is_cycle(cl, 2, restricted));
            l = remove_two_simplex(l, s->sigma).complex;
            auto after = betti_numbers(l);
            EXPECT_EQ(after[0], before[0]);
            EXPECT_EQ(after[1], before[1]);
            EXPECT_EQ(after[2] + 1, before[2]);
        }
        EXPECT_EQ(betti_numbers(l), entry.surface.betti()) << entry.name;
    }
}

INSTANTIATE_TEST_SUITE_P(Seeds, HomologyRandom, ::testing::Values(21, 22, 23));
