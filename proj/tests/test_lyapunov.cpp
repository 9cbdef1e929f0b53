#include <doctest.h>

#include <algorithm>

#include "conelab/catalog.hpp"
#include "conelab/lyapunov.hpp"
#include "test_helpers.hpp"

using namespace conelab;
namespace ct = conelab::testing;

namespace {

RatVec v2(long a, long b) { return {Rat(a), Rat(b)}; }

std::vector<RatVec> basis_as_vectors(const LyapunovBasis& b) {
    std::vector<RatVec> rows;
    for (const auto& m : b.mats) rows.push_back(flatten_row_major(m));
    return rows;
}

}  // namespace

TEST_CASE("complementary pairs of the plane orthant") {
    const auto pairs = complementary_pairs(orthant(2));
    REQUIRE(pairs.size() == 2);
    CHECK(pairs[0].x == v2(0, 1));
    CHECK(pairs[0].s == v2(1, 0));
    CHECK(pairs[1].x == v2(1, 0));
    CHECK(pairs[1].s == v2(0, 1));
}

TEST_CASE("orthants have n(n-1) complementary pairs") {
    for (int n = 2; n <= 5; ++n) {
        CHECK(complementary_pairs(orthant(n)).size() ==
              static_cast<std::size_t>(n * (n - 1)));
    }
}

TEST_CASE("the 3-ray invariant cone has six pairs") {
    const auto pairs = complementary_pairs(qpn(3, 2));
    CHECK(pairs.size() == 6);
    for (const auto& [x, s] : pairs) CHECK(dot(x, s) == Rat(0));
}

TEST_CASE("pair constraint rows are the flattened rank-one products") {
    // Golden check of the row-major flattening convention on the plane
    // orthant: pairs in lex order are (e1, e2) then (e2, e1).
    const RatMat c = pair_constraint_matrix(orthant(2));
    REQUIRE(c.rows() == 2);
    REQUIRE(c.cols() == 4);
    CHECK(c.row(0) == RatVec{Rat(0), Rat(1), Rat(0), Rat(0)});  // vec(e1 e2^T)
    CHECK(c.row(1) == RatVec{Rat(0), Rat(0), Rat(1), Rat(0)});  // vec(e2 e1^T)
}

TEST_CASE("rank of the orthant equals the dimension") {
    for (int n = 2; n <= 6; ++n) CHECK(lyapunov_rank(orthant(n)) == n);
}

TEST_CASE("the eight-ray invariant cone has rank one") {
    CHECK(lyapunov_rank(qpn(4, 3)) == 1);
    const auto basis = ll_basis(qpn(4, 3));
    REQUIRE(basis.mats.size() == 1);
    // the only transformations are the multiples of the identity
    const RatMat& m = basis.mats[0];
    for (int i = 0; i < 4; ++i) {
        CHECK(m.at(i, i) == m.at(0, 0));
        for (int j = 0; j < 4; ++j) {
            if (i != j) CHECK(m.at(i, j) == Rat(0));
        }
    }
}

TEST_CASE("rank is invariant under invertible images of the orthant") {
    SplitMix64 rng(6100);
    for (int t = 0; t < 6; ++t) {
        const int n = 3 + static_cast<int>(rng.next_below(2));  // 3..4
        CHECK(lyapunov_rank(random_simplicial(n, rng.next())) == n);
    }
}

TEST_CASE("diagonal transformations on the orthant") {
    const Cone k = orthant(3);
    const auto basis = ll_basis(k);
    REQUIRE(basis.mats.size() == 3);
    for (const auto& m : basis.mats) {
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) {
                if (i != j) CHECK(m.at(i, j) == Rat(0));
            }
        CHECK(is_lyapunov_like(k, m));
    }

    RatMat diag(3, 3);
    diag.at(0, 0) = Rat(1);
    diag.at(1, 1) = Rat(2);
    diag.at(2, 2) = Rat(3);
    CHECK(is_lyapunov_like(k, diag));
    CHECK_FALSE(is_lyapunov_like(k, RatMat::all_ones(3)));
    CHECK(is_lyapunov_like(k, RatMat::identity(3)));
}

TEST_CASE("the identity is always in the basis span, so the rank is >= 1") {
    for (const auto& k : {orthant(2), qpn(4, 2), qpn(5, 3), random_simplicial(3, 11)}) {
        CHECK(is_lyapunov_like(k, RatMat::identity(k.dim())));
        const auto basis = ll_basis(k);
        CHECK_FALSE(basis.mats.empty());
        CHECK(static_cast<int>(basis.mats.size()) == lyapunov_rank(k));
    }
}

TEST_CASE("membership in the basis span decides the bilinear property") {
    SplitMix64 rng(6101);
    for (const auto& k : {orthant(3), qpn(4, 3)}) {
        const int n = k.dim();
        const auto basis_rows = basis_as_vectors(ll_basis(k));
        const int beta = static_cast<int>(basis_rows.size());
        for (int t = 0; t < 20; ++t) {
            RatMat m(n, n);
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j) m.at(i, j) = Rat(rng.next_int(-3, 3));
            auto rows = basis_rows;
            rows.push_back(flatten_row_major(m));
            const bool in_span = rank_of(rows) == beta;
            CHECK(is_lyapunov_like(k, m) == in_span);
        }
    }
}

TEST_CASE("rank adds over block direct sums") {
    SplitMix64 rng(6102);
    for (int t = 0; t < 8; ++t) {
        const int n1 = 2 + static_cast<int>(rng.next_below(2));
        const int n2 = 2 + static_cast<int>(rng.next_below(2));
        const Cone k1 = random_simplicial(n1, rng.next());
        const Cone k2 = random_simplicial(n2, rng.next());
        CHECK(lyapunov_rank(direct_sum(k1, k2)) ==
              lyapunov_rank(k1) + lyapunov_rank(k2));
    }
}

TEST_CASE("conjugation carries the basis across isomorphic cones") {
    SplitMix64 rng(6103);
    for (int n : {3, 4}) {
        RatMat b(n, n);
        do {
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j) b.at(i, j) = Rat(rng.next_int(-3, 3));
        } while (determinant(b).is_zero());
        const auto binv = inverse(b);
        REQUIRE(binv.has_value());

        const Cone k = qpn(n, 2);
        std::vector<RatVec> image_gens;
        for (const auto& g : k.generators()) image_gens.push_back(b.apply(g));
        const Cone bk = Cone::from_generators(n, image_gens);

        CHECK(lyapunov_rank(bk) == lyapunov_rank(k));

        // span{B L B^-1} equals the basis span of the image cone
        const auto image_basis = basis_as_vectors(ll_basis(bk));
        auto rows = image_basis;
        for (const auto& l : ll_basis(k).mats) {
            rows.push_back(flatten_row_major(b * l * *binv));
        }
        CHECK(rank_of(rows) == static_cast<int>(image_basis.size()));
    }
}

TEST_CASE("boundary pairs built from facets satisfy the basis relations") {
    // Samples complementary pairs that are not extreme-ray pairs: x is a
    // random point of a facet, s a positive multiple of the facet normal.
    // Validates the extreme-pair reduction against the universally
    // quantified property.
    SplitMix64 rng(6104);
    for (const auto& k : {orthant(2), orthant(3), qpn(3, 2)}) {
        const auto basis = ll_basis(k);
        const auto& rows = k.inequalities();
        const auto& rays = k.extreme_rays();
        for (int t = 0; t < 200; ++t) {
            const auto& h = rows[rng.next_below(rows.size())];
            RatVec x(static_cast<std::size_t>(k.dim()));
            for (const auto& r : rays) {
                if (!dot(h, r).is_zero()) continue;
                x = add(x, scale(r, Rat(rng.next_int(0, 3))));
            }
            if (is_zero_vec(x)) continue;
            const RatVec s = scale(h, Rat(rng.next_int(1, 5)));
            REQUIRE(dot(x, s) == Rat(0));
            for (const auto& l : basis.mats) {
                CHECK(dot(s, l.apply(x)) == Rat(0));
            }
        }
    }
}

TEST_CASE("improper cones are rejected") {
    CHECK_THROWS_AS(complementary_pairs(qpn(3, 1)), NotProperError);
    CHECK_THROWS_AS(lyapunov_rank(Cone::from_generators(2, {v2(1, 0)})),
                    NotProperError);
    CHECK_THROWS_AS(ll_basis(Cone::from_generators(3, {})), NotProperError);
    CHECK_THROWS_AS(is_lyapunov_like(qpn(3, 1), RatMat::identity(3)), NotProperError);
}
