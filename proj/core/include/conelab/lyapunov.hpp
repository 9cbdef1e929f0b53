#pragma once

#include <vector>

#include "conelab/cone.hpp"
#include "conelab/linalg.hpp"

namespace conelab {

// A complementary pair: an extreme ray x of K and an extreme ray s of the
// dual with <x, s> = 0 exactly. Both primitive.
struct CompPair {
    RatVec x;
    RatVec s;
};

// Basis of the space of transformations L with s^T L x = 0 for every
// complementary pair; its length is the cone's bilinearity rank.
struct LyapunovBasis {
    int n = 0;
    std::vector<RatMat> mats;
};

// All pairs (x, s), x in ext(K), s in ext(K*), <x, s> = 0, ordered
// lexicographically by x then s. Throws NotProperError.
std::vector<CompPair> complementary_pairs(const Cone& k);

// Constraint matrix over the pairs: the row for (x, s) is the row-major
// flattening of s x^T, so <row, vec(L)> = s^T L x for row-major vec(L).
RatMat pair_constraint_matrix(const Cone& k);

// n^2 minus the rank of the pair constraint matrix.
int lyapunov_rank(const Cone& k);

// Nullspace of the constraint matrix, reshaped row-major to n x n matrices.
LyapunovBasis ll_basis(const Cone& k);

// Whether s^T L x = 0 for every complementary pair. Checking extreme pairs
// suffices for the defining property on all of K x K*: any complementary
// (x, s) decomposes over extreme rays with nonnegative coefficients, and
// <x, s> = 0 forces each cross term <x_i, s_j> to vanish termwise.
bool is_lyapunov_like(const Cone& k, const RatMat& l);

}  // namespace conelab
