#include "conelab/catalog.hpp"

#include "conelab/errors.hpp"
#include "conelab/rng.hpp"
#include "conelab/symmetry.hpp"

namespace conelab {

Cone orthant(int n) {
    std::vector<RatVec> units;
    units.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) units.push_back(unit_vec(n, i));
    return Cone::from_both(n, units, units);
}

Cone qpn(int n, int p) {
    if (n < 1 || p < 1 || p > n) throw Error("qpn: need 1 <= p <= n");
    if (n > 20) throw Error("qpn: n too large for subset enumeration");
    const int k = n - p + 1;  // subset size
    std::vector<RatVec> rows;
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
        if (__builtin_popcount(mask) != k) continue;
        RatVec row(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) {
            if (mask & (1u << i)) row[static_cast<std::size_t>(i)] = Rat(1);
        }
        rows.push_back(std::move(row));
    }
    return Cone::from_inequalities(n, rows);
}

RatMat ab_matrix(int n, const Rat& a, const Rat& b) {
    RatMat m(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m.at(i, j) = (i == j) ? a : b;
    return m;
}

Cone ab_cone(int n, const Rat& a, const Rat& b) {
    if (n < 1) throw Error("ab_cone: need n >= 1");
    if (a == b || a == Rat(1 - n) * b) {
        throw InvalidABError("ab_cone: (a-b)I + bE is singular for a=" + a.str() +
                             ", b=" + b.str());
    }
    const RatMat m = ab_matrix(n, a, b);
    std::vector<RatVec> cols;
    cols.reserve(static_cast<std::size_t>(n));
    for (int j = 0; j < n; ++j) cols.push_back(m.col(j));
    return Cone::from_generators(n, cols);
}

namespace {

RatVec pad(const RatVec& v, int before, int after) {
    RatVec out(static_cast<std::size_t>(before));
    out.insert(out.end(), v.begin(), v.end());
    out.resize(out.size() + static_cast<std::size_t>(after));
    return out;
}

}  // namespace

Cone direct_sum(const Cone& k1, const Cone& k2) {
    const int n1 = k1.dim();
    const int n2 = k2.dim();
    std::vector<RatVec> gens;
    for (const auto& g : k1.generators()) gens.push_back(pad(g, 0, n2));
    for (const auto& g : k2.generators()) gens.push_back(pad(g, n1, 0));
    std::vector<RatVec> ineqs;
    for (const auto& h : k1.inequalities()) ineqs.push_back(pad(h, 0, n2));
    for (const auto& h : k2.inequalities()) ineqs.push_back(pad(h, n1, 0));
    return Cone::from_both(n1 + n2, gens, ineqs);
}

Cone random_simplicial(int n, std::uint64_t rng_seed) {
    if (n < 1) throw Error("random_simplicial: need n >= 1");
    SplitMix64 rng(rng_seed);
    while (true) {
        RatMat b(n, n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                b.at(i, j) = Rat(rng.next_int(-3, 3));
            }
        if (determinant(b).is_zero()) continue;
        std::vector<RatVec> cols;
        for (int j = 0; j < n; ++j) cols.push_back(b.col(j));
        return Cone::from_generators(n, cols);
    }
}

Cone build_catalog_cone(const CatalogSpec& spec) {
    switch (spec.kind) {
        case CatalogKind::Orthant:
            if (spec.n < 1) throw Error("catalog: orthant needs n >= 1");
            return orthant(spec.n);
        case CatalogKind::Qpn:
            return qpn(spec.n, spec.p);
        case CatalogKind::ABCone:
            return ab_cone(spec.n, spec.a, spec.b);
        case CatalogKind::Orbit:
            return orbit_cone(spec.seeds);
        case CatalogKind::DirectSum:
            if (spec.summands.size() != 2) {
                throw Error("catalog: direct sum needs exactly two summands");
            }
            return direct_sum(spec.summands[0], spec.summands[1]);
        case CatalogKind::RandomSimplicial:
            return random_simplicial(spec.n, spec.rng_seed);
    }
    throw Error("catalog: unknown kind");
}

}  // namespace conelab
