#pragma once

#include <memory>
#include <optional>
#include <vector>

#include "conelab/linalg.hpp"
#include "conelab/rat.hpp"

namespace conelab {

// Canonical list of extreme rays: primitive, pairwise distinct, sorted
// lexicographically.
using RayList = std::vector<RatVec>;

struct DDResult {
    std::vector<RatVec> rays;       // extreme modulo lineality, primitive, sorted
    std::vector<RatVec> lineality;  // canonical subspace basis (may be empty)
};

// Double description: minimal generators of {x : <h, x> >= 0 for all h}.
// Starts from the full space held as a lineality basis and inserts the
// inequalities in the given order, splitting the lineality on first
// violation. Rays are kept extreme throughout via the algebraic adjacency
// test: two rays are adjacent iff their common tight rows have rank
// n - d - 2, where d is the current lineality dimension.
DDResult double_description(int dim, const std::vector<RatVec>& inequalities);

// Flattened generator list of a DD result: rays plus a +/- pair per
// lineality basis vector.
std::vector<RatVec> dd_generators(const DDResult& dd);

// A closed convex polyhedral cone in R^n, held as a generator (V) and/or an
// inequality (H) representation. Missing representations are completed on
// demand by double description and cached; copies share the cache. The zero
// cone (no generators) and the full space (no inequalities) are legal values.
class Cone {
 public:
    static Cone from_generators(int dim, const std::vector<RatVec>& gens);
    static Cone from_inequalities(int dim, const std::vector<RatVec>& ineqs);
    // Both representations up front; cross-checks <h, g> >= 0 for all pairs.
    static Cone from_both(int dim, const std::vector<RatVec>& gens,
                          const std::vector<RatVec>& ineqs);

    int dim() const;

    // Canonical generator list (primitive, sorted, deduplicated). For a
    // non-pointed cone this includes a +/- pair per lineality direction.
    const std::vector<RatVec>& generators() const;
    // Canonical inequality list; empty for the full space.
    const std::vector<RatVec>& inequalities() const;
    bool has_generators() const;    // without forcing completion
    bool has_inequalities() const;  // without forcing completion

    // Extreme rays of a pointed cone: a generator is kept iff its tight
    // inequality rows have rank n-1. Throws NotPointedError otherwise.
    const RayList& extreme_rays() const;
    // Canonical basis of K cap -K (nullspace of the inequality rows).
    const std::vector<RatVec>& lineality_basis() const;

    // Dual cone {y : <y, x> >= 0 for all x in K}. Its inequality rows are
    // exactly this cone's generators (forced first); its generator list is
    // computed on demand.
    Cone dual() const;

    bool contains(const RatVec& x) const;
    bool is_pointed() const;  // inequality rows span R^n
    bool is_solid() const;    // generators span R^n
    bool is_proper() const;
    int dimension() const;    // rank of the generator list

 private:
    struct State;
    explicit Cone(std::shared_ptr<State> st) : st_(std::move(st)) {}
    std::shared_ptr<State> st_;
};

// Exact set equality via mutual generator containment.
bool same_set(const Cone& a, const Cone& b);

}  // namespace conelab
