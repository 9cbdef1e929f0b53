#include "conelab/lyapunov.hpp"

#include "conelab/errors.hpp"

namespace conelab {

std::vector<CompPair> complementary_pairs(const Cone& k) {
    if (!k.is_proper()) throw NotProperError("complementary_pairs: cone is not proper");
    const RayList& primal = k.extreme_rays();
    const RayList dual_rays = k.dual().extreme_rays();  // dual of proper is proper
    std::vector<CompPair> pairs;
    for (const auto& x : primal) {
        for (const auto& s : dual_rays) {
            if (dot(x, s).is_zero()) pairs.push_back({x, s});
        }
    }
    return pairs;
}

RatMat pair_constraint_matrix(const Cone& k) {
    const int n = k.dim();
    const auto pairs = complementary_pairs(k);
    RatMat c(static_cast<int>(pairs.size()), n * n);
    for (int r = 0; r < static_cast<int>(pairs.size()); ++r) {
        const auto& [x, s] = pairs[static_cast<std::size_t>(r)];
        for (int i = 0; i < n; ++i) {
            if (s[static_cast<std::size_t>(i)].is_zero()) continue;
            for (int j = 0; j < n; ++j) {
                c.at(r, i * n + j) = s[static_cast<std::size_t>(i)] * x[static_cast<std::size_t>(j)];
            }
        }
    }
    return c;
}

int lyapunov_rank(const Cone& k) {
    const int n = k.dim();
    return n * n - rank(pair_constraint_matrix(k));
}

LyapunovBasis ll_basis(const Cone& k) {
    const int n = k.dim();
    LyapunovBasis basis;
    basis.n = n;
    for (const auto& v : nullspace_basis(pair_constraint_matrix(k))) {
        basis.mats.push_back(reshape_square(v, n));
    }
    return basis;
}

bool is_lyapunov_like(const Cone& k, const RatMat& l) {
    if (l.rows() != k.dim() || l.cols() != k.dim()) {
        throw DimensionMismatchError("is_lyapunov_like: matrix shape != n x n");
    }
    for (const auto& [x, s] : complementary_pairs(k)) {
        if (!dot(s, l.apply(x)).is_zero()) return false;
    }
    return true;
}

}  // namespace conelab
