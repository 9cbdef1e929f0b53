#pragma once

#include <optional>
#include <vector>

#include "conelab/cone.hpp"
#include "conelab/rat.hpp"
#include "conelab/symmetry.hpp"

namespace conelab {

// Finest direct-sum decomposition of a pointed cone: the extreme rays are
// partitioned into groups with pairwise trivially intersecting spans, and no
// group splits further. Components are ordered by their lexicographically
// least ray.
struct Decomposition {
    std::vector<std::vector<RatVec>> component_rays;  // partition of ext(K)
    std::vector<Cone> components;
    std::vector<std::vector<RatVec>> span_bases;  // greedy ray basis per component
    std::vector<int> span_dims;                   // rank per component
    int total_dim = 0;                            // sum of span_dims == dim of K

    std::size_t size() const { return components.size(); }
};

// Computes the decomposition through the vector matroid on the extreme rays:
// pick a ray basis by greedy rank extension, express every non-basis ray over
// it, link the ray to the basis rays with nonzero coefficients, and read off
// the connected components of that graph (a matroid is connected exactly
// when the fundamental-circuit graph of any one basis is). Throws
// NotPointedError / ZeroConeError.
Decomposition decompose(const Cone& k);

bool is_irreducible(const Cone& k);

// Recognized shape of a cone whose rays are, after primitive scaling, the
// columns of (a-b)I + bE: each ray carries the value a in exactly one slot
// and b elsewhere, every coordinate serving as the a-slot once.
// `assignment` maps coordinate j to the index (in the canonical ray order)
// of the ray whose a-slot is j.
struct OrthantForm {
    Rat a;
    Rat b;
    Perm assignment;
};

// Pattern recognition on the extreme rays of a proper, permutation-invariant
// cone (both preconditions are checked). Returns nullopt whenever the cone
// does not have exactly n extreme rays in the two-value pattern. Reported
// (a, b) follow the primitive rays with the minority value as a; for n = 2,
// where there is no strict minority, the lexicographically greater ray fixes
// the reading.
std::optional<OrthantForm> recognize_orthant_form(const Cone& k);

}  // namespace conelab
