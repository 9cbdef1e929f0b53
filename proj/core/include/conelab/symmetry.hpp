#pragma once

#include <vector>

#include "conelab/cone.hpp"
#include "conelab/linalg.hpp"
#include "conelab/rat.hpp"
#include "conelab/rng.hpp"

namespace conelab {

// A permutation of {0, ..., n-1}, acting on vectors by permuting coordinates.
class Perm {
 public:
    explicit Perm(std::vector<int> images);
    static Perm identity(int n);
    static Perm transposition(int n, int i, int j);
    static Perm cycle(int n);  // 0 -> 1 -> ... -> n-1 -> 0
    static Perm random(int n, SplitMix64& rng);

    int size() const { return static_cast<int>(img_.size()); }
    int operator()(int i) const { return img_[static_cast<std::size_t>(i)]; }
    Perm inverse() const;
    Perm after(const Perm& first) const;  // apply `first`, then this

    // y with y[images[i]] = x[i].
    RatVec apply(const RatVec& x) const;
    // Matrix P with P x == apply(x).
    RatMat matrix() const;

    friend bool operator==(const Perm& a, const Perm& b) { return a.img_ == b.img_; }

 private:
    std::vector<int> img_;
};

// Whether sigma(K) == K for every coordinate permutation sigma. Decided by
// testing only the two group generators (the swap of the first two
// coordinates and the full cycle) on the cone's extreme rays -- or on its
// generator list when the cone is not pointed -- against the inequality
// representation: sigma(K) is a subset of K for both generators forces
// equality for the whole finite group.
bool is_permutation_invariant(const Cone& k);

// Conic hull of the full permutation orbit of the seed vectors. The orbit is
// closed under the two group generators with a worklist; the n! permutations
// are never materialized.
Cone orbit_cone(const std::vector<RatVec>& seeds);

// Full coordinate-permutation orbit of one vector, deduplicated, sorted.
std::vector<RatVec> orbit_of(const RatVec& v);

enum class OnesAxis { PlusOne, MinusOne, Both, Neither };

// Which of the all-ones vector and its negative lie in K.
OnesAxis contains_ones_axis(const Cone& k);

const char* to_string(OnesAxis a);

}  // namespace conelab
