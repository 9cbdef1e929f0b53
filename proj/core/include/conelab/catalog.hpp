#pragma once

#include <cstdint>
#include <vector>

#include "conelab/cone.hpp"
#include "conelab/linalg.hpp"
#include "conelab/rat.hpp"

namespace conelab {

// Nonnegative orthant, with both representations set.
Cone orthant(int n);

// {u : the sum of the n-p+1 smallest entries of u is >= 0}, 1 <= p <= n.
// Built in inequality form as one subset-sum row per (n-p+1)-subset: the sum
// of the k smallest entries is the minimum over the k-subset sums, so the
// finitely many rows describe the set exactly. p = n gives the orthant.
Cone qpn(int n, int p);

// (a-b)I + bE with E the all-ones matrix.
RatMat ab_matrix(int n, const Rat& a, const Rat& b);

// Image of the orthant under (a-b)I + bE: the cone generated by its columns.
// Throws InvalidABError when a == b or a == (1-n)b (singular matrix).
Cone ab_cone(int n, const Rat& a, const Rat& b);

// Block-embedded direct sum in R^{n1+n2}: generators of k1 padded with
// trailing zeros plus generators of k2 padded with leading zeros. Both input
// representations are completed so the result carries generator and
// inequality forms.
Cone direct_sum(const Cone& k1, const Cone& k2);

// B(orthant) for a seeded random invertible integer matrix B with entries in
// [-3, 3]. Same seed, same cone, on every platform (SplitMix64 stream).
Cone random_simplicial(int n, std::uint64_t rng_seed);

enum class CatalogKind { Orthant, Qpn, ABCone, Orbit, DirectSum, RandomSimplicial };

struct CatalogSpec {
    CatalogKind kind = CatalogKind::Orthant;
    int n = 0;
    int p = 0;
    Rat a;
    Rat b;
    std::vector<RatVec> seeds;        // Orbit
    std::uint64_t rng_seed = 0;       // RandomSimplicial
    std::vector<Cone> summands;       // DirectSum
};

// Validates the parameters for the requested kind and builds the cone.
Cone build_catalog_cone(const CatalogSpec& spec);

}  // namespace conelab
