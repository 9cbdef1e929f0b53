#include "conelab/decompose.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "conelab/errors.hpp"
#include "conelab/linalg.hpp"

namespace conelab {

namespace {

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(int n) : parent(static_cast<std::size_t>(n)) {
        std::iota(parent.begin(), parent.end(), 0);
    }
    int find(int x) {
        while (parent[static_cast<std::size_t>(x)] != x) {
            parent[static_cast<std::size_t>(x)] =
                parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
            x = parent[static_cast<std::size_t>(x)];
        }
        return x;
    }
    void unite(int a, int b) { parent[static_cast<std::size_t>(find(a))] = find(b); }
};

}  // namespace

Decomposition decompose(const Cone& k) {
    if (!k.is_pointed()) throw NotPointedError("decompose: cone is not pointed");
    const RayList& rays = k.extreme_rays();
    if (rays.empty()) throw ZeroConeError("decompose: zero cone");
    const int n = k.dim();
    const int m = static_cast<int>(rays.size());

    // Greedy ray basis by rank extension.
    std::vector<int> basis;
    std::vector<RatVec> basis_vecs;
    int cur_rank = 0;
    for (int i = 0; i < m; ++i) {
        basis_vecs.push_back(rays[static_cast<std::size_t>(i)]);
        const int r = rank_of(basis_vecs);
        if (r > cur_rank) {
            cur_rank = r;
            basis.push_back(i);
        } else {
            basis_vecs.pop_back();
        }
    }

    UnionFind uf(m);
    if (!basis.empty()) {
        const RatMat bmat = RatMat::from_cols(basis_vecs);
        for (int i = 0; i < m; ++i) {
            if (std::binary_search(basis.begin(), basis.end(), i)) continue;
            const auto alpha = solve(bmat, rays[static_cast<std::size_t>(i)]);
            // Every ray lies in the span of a maximal independent subset.
            if (!alpha) throw Error("decompose: basis does not span a ray");
            for (std::size_t bk = 0; bk < basis.size(); ++bk) {
                if (!(*alpha)[bk].is_zero()) uf.unite(i, basis[bk]);
            }
        }
    }

    std::map<int, std::vector<int>> groups;  // root -> ray indices (sorted)
    for (int i = 0; i < m; ++i) groups[uf.find(i)].push_back(i);

    // Rays are sorted, so ordering groups by smallest member index orders
    // components by lexicographically least ray.
    std::vector<std::vector<int>> ordered;
    for (auto& [root, idxs] : groups) ordered.push_back(std::move(idxs));
    std::sort(ordered.begin(), ordered.end(),
              [](const auto& a, const auto& b) { return a[0] < b[0]; });

    Decomposition d;
    for (const auto& idxs : ordered) {
        std::vector<RatVec> comp_rays;
        std::vector<RatVec> span;
        for (int i : idxs) {
            comp_rays.push_back(rays[static_cast<std::size_t>(i)]);
            if (std::binary_search(basis.begin(), basis.end(), i)) {
                span.push_back(rays[static_cast<std::size_t>(i)]);
            }
        }
        d.span_dims.push_back(static_cast<int>(span.size()));
        d.total_dim += static_cast<int>(span.size());
        d.components.push_back(Cone::from_generators(n, comp_rays));
        d.component_rays.push_back(std::move(comp_rays));
        d.span_bases.push_back(std::move(span));
    }
    if (d.total_dim != cur_rank) throw Error("decompose: rank certificate mismatch");
    return d;
}

bool is_irreducible(const Cone& k) { return decompose(k).size() == 1; }

namespace {

// Minority/majority split of a primitive ray: exactly two distinct values,
// the minority appearing once. Returns {a, b, slot} or nothing.
struct Pattern {
    Rat a;
    Rat b;
    int slot;
};

std::optional<Pattern> two_value_pattern(const RatVec& ray) {
    const int n = static_cast<int>(ray.size());
    std::map<Rat, std::vector<int>> positions;
    for (int i = 0; i < n; ++i) positions[ray[static_cast<std::size_t>(i)]].push_back(i);
    if (positions.size() != 2) return std::nullopt;
    const auto& first = *positions.begin();
    const auto& second = *std::next(positions.begin());
    const auto& minority =
        first.second.size() <= second.second.size() ? first : second;
    const auto& majority =
        first.second.size() <= second.second.size() ? second : first;
    if (minority.second.size() != 1) return std::nullopt;
    return Pattern{minority.first, majority.first, minority.second[0]};
}

}  // namespace

std::optional<OrthantForm> recognize_orthant_form(const Cone& k) {
    if (!k.is_proper()) {
        throw NotProperError("recognize_orthant_form: cone is not proper");
    }
    if (!is_permutation_invariant(k)) {
        throw NotPermutationInvariantError(
            "recognize_orthant_form: cone is not permutation invariant");
    }
    const int n = k.dim();
    const RayList& rays = k.extreme_rays();
    if (static_cast<int>(rays.size()) != n) return std::nullopt;

    if (n == 1) {
        return OrthantForm{rays[0][0], Rat(0), Perm::identity(1)};
    }

    if (n == 2) {
        // No strict minority in two slots; the lexicographically greater ray
        // fixes the reading of (a, b).
        const RatVec& lo = rays[0];
        const RatVec& hi = rays[1];
        if (Perm::transposition(2, 0, 1).apply(hi) != lo) return std::nullopt;
        if (hi[0] == hi[1]) return std::nullopt;
        std::vector<int> img{1, 0};  // hi (index 1) carries a at slot 0
        return OrthantForm{hi[0], hi[1], Perm(std::move(img))};
    }

    Rat a, b;
    std::vector<int> assignment(static_cast<std::size_t>(n), -1);
    for (int r = 0; r < n; ++r) {
        const auto pat = two_value_pattern(rays[static_cast<std::size_t>(r)]);
        if (!pat) return std::nullopt;
        if (r == 0) {
            a = pat->a;
            b = pat->b;
        } else if (pat->a != a || pat->b != b) {
            return std::nullopt;
        }
        if (assignment[static_cast<std::size_t>(pat->slot)] != -1) return std::nullopt;
        assignment[static_cast<std::size_t>(pat->slot)] = r;
    }
    if (a == Rat(1 - n) * b) return std::nullopt;  // singular; unreachable for proper K
    return OrthantForm{a, b, Perm(std::move(assignment))};
}

}  // namespace conelab
