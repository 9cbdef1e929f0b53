#include "conelab/jordan.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "conelab/catalog.hpp"
#include "conelab/errors.hpp"
#include "conelab/linalg.hpp"
#include "conelab/parallel.hpp"
#include "conelab/rng.hpp"
#include "conelab/symmetry.hpp"

namespace conelab {

SymMat::SymMat(int m) : m_(m), e_(static_cast<std::size_t>(m) * m, 0.0) {
    if (m < 1) throw DimensionMismatchError("SymMat: size must be >= 1");
}

SymMat SymMat::identity(int m) {
    SymMat s(m);
    for (int i = 0; i < m; ++i) s.set(i, i, 1.0);
    return s;
}

SymMat SymMat::from_rows(const std::vector<std::vector<double>>& rows) {
    const int m = static_cast<int>(rows.size());
    SymMat s(m);
    for (int i = 0; i < m; ++i) {
        if (static_cast<int>(rows[static_cast<std::size_t>(i)].size()) != m) {
            throw DimensionMismatchError("SymMat::from_rows: not square");
        }
        for (int j = 0; j < m; ++j) {
            if (rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] !=
                rows[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)]) {
                throw Error("SymMat::from_rows: matrix is not symmetric");
            }
            s.e_[static_cast<std::size_t>(i) * m + j] =
                rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
        }
    }
    return s;
}

double SymMat::trace() const {
    double t = 0.0;
    for (int i = 0; i < m_; ++i) t += at(i, i);
    return t;
}

double SymMat::frob_norm() const {
    double s = 0.0;
    for (double v : e_) s += v * v;
    return std::sqrt(s);
}

namespace {

double off_diagonal_norm(const SymMat& a) {
    double s = 0.0;
    for (int i = 0; i < a.size(); ++i)
        for (int j = i + 1; j < a.size(); ++j) s += 2.0 * a.at(i, j) * a.at(i, j);
    return std::sqrt(s);
}

}  // namespace

EigResult eig_sym(const SymMat& x) {
    const int m = x.size();
    SymMat a = x;
    std::vector<std::vector<double>> v(static_cast<std::size_t>(m),
                                       std::vector<double>(static_cast<std::size_t>(m), 0.0));
    for (int i = 0; i < m; ++i) v[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = 1.0;

    const double threshold = 1e-12 * (1.0 + x.frob_norm());
    const int max_sweeps = 64;
    int sweep = 0;
    while (off_diagonal_norm(a) >= threshold) {
        if (++sweep > max_sweeps) {
            throw ConvergenceError("eig_sym: Jacobi sweeps exhausted");
        }
        for (int p = 0; p < m; ++p) {
            for (int q = p + 1; q < m; ++q) {
                const double apq = a.at(p, q);
                if (apq == 0.0) continue;
                const double theta = (a.at(q, q) - a.at(p, p)) / (2.0 * apq);
                const double t = (theta >= 0.0 ? 1.0 : -1.0) /
                                 (std::fabs(theta) + std::sqrt(theta * theta + 1.0));
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double s = t * c;
                const double app = a.at(p, p);
                const double aqq = a.at(q, q);
                a.set(p, p, app - t * apq);
                a.set(q, q, aqq + t * apq);
                a.set(p, q, 0.0);
                for (int r = 0; r < m; ++r) {
                    if (r != p && r != q) {
                        const double arp = a.at(r, p);
                        const double arq = a.at(r, q);
                        a.set(r, p, c * arp - s * arq);
                        a.set(r, q, s * arp + c * arq);
                    }
                    auto& vr = v[static_cast<std::size_t>(r)];
                    const double vrp = vr[static_cast<std::size_t>(p)];
                    const double vrq = vr[static_cast<std::size_t>(q)];
                    vr[static_cast<std::size_t>(p)] = c * vrp - s * vrq;
                    vr[static_cast<std::size_t>(q)] = s * vrp + c * vrq;
                }
            }
        }
    }

    std::vector<int> order(static_cast<std::size_t>(m));
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](int i, int j) { return a.at(i, i) > a.at(j, j); });
    EigResult out;
    out.values.reserve(static_cast<std::size_t>(m));
    out.vectors.assign(static_cast<std::size_t>(m),
                       std::vector<double>(static_cast<std::size_t>(m), 0.0));
    for (int k = 0; k < m; ++k) {
        const int c = order[static_cast<std::size_t>(k)];
        out.values.push_back(a.at(c, c));
        for (int r = 0; r < m; ++r) {
            out.vectors[static_cast<std::size_t>(k)][static_cast<std::size_t>(r)] =
                v[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)];
        }
    }
    return out;
}

std::vector<double> eigvals_sym(const SymMat& x) { return eig_sym(x).values; }

SymMat l_ab(const SymMat& x, double a, double b) {
    const int m = x.size();
    SymMat y(m);
    const double btr = b * x.trace();
    for (int i = 0; i < m; ++i)
        for (int j = i; j < m; ++j) {
            y.set(i, j, (a - b) * x.at(i, j) + (i == j ? btr : 0.0));
        }
    return y;
}

std::optional<std::pair<Rat, Rat>> l_ab_inverse_coeffs(const Rat& a, const Rat& b,
                                                       int m) {
    const Rat diff = a - b;
    const Rat tail = a + Rat(m - 1) * b;
    if (diff.is_zero() || tail.is_zero()) return std::nullopt;
    // Composing L_{(a,b)} with L_{(a',b')} is the identity iff
    // (a-b)(a'-b') = 1 and (a-b)b' + (a'-b')b + m b b' = 0.
    const Rat bp = -b / (diff * tail);
    const Rat ap = bp + diff.inverse();
    return std::make_pair(ap, bp);
}

namespace {

struct MembershipCheck {
    bool ok;
    double violation;  // worst scaled deficit, 0 when ok
};

MembershipCheck check_rows(const std::vector<double>& lambda,
                           const std::vector<std::vector<double>>& rows, double tol) {
    double max_abs = 0.0;
    for (double l : lambda) max_abs = std::max(max_abs, std::fabs(l));
    MembershipCheck out{true, 0.0};
    for (const auto& h : rows) {
        double val = 0.0;
        double h1 = 0.0;
        for (std::size_t i = 0; i < h.size(); ++i) {
            val += h[i] * lambda[i];
            h1 += std::fabs(h[i]);
        }
        const double scale = h1 * (1.0 + max_abs);
        if (val < -tol * scale) {
            out.ok = false;
            out.violation = std::max(out.violation, scale > 0.0 ? -val / scale : -val);
        }
    }
    return out;
}

std::vector<std::vector<double>> rows_as_double(const Cone& q) {
    std::vector<std::vector<double>> rows;
    for (const auto& h : q.inequalities()) {
        std::vector<double> r;
        r.reserve(h.size());
        for (const auto& e : h) r.push_back(e.to_double());
        rows.push_back(std::move(r));
    }
    return rows;
}

SymMat random_gram(int m, SplitMix64& rng) {
    std::vector<std::vector<double>> g(static_cast<std::size_t>(m),
                                       std::vector<double>(static_cast<std::size_t>(m)));
    for (auto& row : g)
        for (auto& e : row) e = rng.next_gaussian();
    SymMat x(m);
    for (int i = 0; i < m; ++i)
        for (int j = i; j < m; ++j) {
            double s = 0.0;
            for (int k = 0; k < m; ++k) {
                s += g[static_cast<std::size_t>(k)][static_cast<std::size_t>(i)] *
                     g[static_cast<std::size_t>(k)][static_cast<std::size_t>(j)];
            }
            x.set(i, j, s);
        }
    return x;
}

SymMat random_goe(int m, SplitMix64& rng) {
    SymMat y(m);
    for (int i = 0; i < m; ++i)
        for (int j = i; j < m; ++j) y.set(i, j, rng.next_gaussian());
    return y;
}

void check_ab(const Rat& a, const Rat& b, int m) {
    if (a == b || a == Rat(1 - m) * b) {
        throw InvalidABError("verify_spectral_isomorphism: singular (a, b) = (" + a.str() + ", " +
                             b.str() + ")");
    }
}

}  // namespace

bool spectral_membership(const SymMat& y, const Cone& q, double tol) {
    if (q.dim() != y.size()) {
        throw DimensionMismatchError(
            "spectral_membership: algebra rank != cone dimension");
    }
    if (!is_permutation_invariant(q)) {
        throw NotPermutationInvariantError(
            "spectral_membership: cone is not permutation invariant");
    }
    return check_rows(eigvals_sym(y), rows_as_double(q), tol).ok;
}

SpectralReport verify_spectral_isomorphism(int m, const Rat& a, const Rat& b, int samples,
                            std::uint64_t rng_seed, double tol) {
    check_ab(a, b, m);
    const Cone q = ab_cone(m, a, b);
    const auto rows = rows_as_double(q);
    const double ad = a.to_double();
    const double bd = b.to_double();
    const auto inv = l_ab_inverse_coeffs(a, b, m);
    const double ai = inv->first.to_double();
    const double bi = inv->second.to_double();

    SpectralReport rep;
    rep.samples = samples;
    rep.tolerance = tol;

    // Forward direction, parallel with one derived stream per sample.
    std::vector<char> fwd_ok(static_cast<std::size_t>(samples), 0);
    std::vector<double> fwd_viol(static_cast<std::size_t>(samples), 0.0);
    parallel_for(samples, [&](int i) {
        SplitMix64 rng = SplitMix64::stream(rng_seed, 2 * static_cast<std::uint64_t>(i) + 2);
        const SymMat x = random_gram(m, rng);
        const SymMat y = l_ab(x, ad, bd);
        const auto check = check_rows(eigvals_sym(y), rows, tol);
        fwd_ok[static_cast<std::size_t>(i)] = check.ok ? 1 : 0;
        fwd_viol[static_cast<std::size_t>(i)] = check.violation;
    });
    for (int i = 0; i < samples; ++i) {
        rep.forward_pass += fwd_ok[static_cast<std::size_t>(i)];
        rep.max_violation = std::max(rep.max_violation, fwd_viol[static_cast<std::size_t>(i)]);
    }

    // Backward direction: rejection sampling from the Gaussian orthogonal
    // ensemble, serial so the accepted set is seed-determined.
    SplitMix64 rng = SplitMix64::stream(rng_seed, 1);
    const int max_attempts = 100000;
    int attempts = 0;
    int accepted = 0;
    while (accepted < samples && attempts < max_attempts) {
        ++attempts;
        const SymMat y = random_goe(m, rng);
        const auto lambda = eigvals_sym(y);
        if (!check_rows(lambda, rows, 0.0).ok) continue;
        ++accepted;
        const SymMat x = l_ab(y, ai, bi);
        const auto ev = eigvals_sym(x);
        const double min_eig = ev.back();
        if (min_eig >= -tol) {
            ++rep.backward_pass;
        } else {
            rep.max_violation = std::max(rep.max_violation, -min_eig);
        }
    }
    if (accepted < samples) {
        // Documented fallback: members constructed as images of random PSD
        // matrices; the inverse map is still exercised on each.
        rep.used_fallback = true;
        for (int i = accepted; i < samples; ++i) {
            SplitMix64 srng =
                SplitMix64::stream(rng_seed, 2 * static_cast<std::uint64_t>(i) + 3);
            const SymMat x0 = random_gram(m, srng);
            const SymMat y = l_ab(x0, ad, bd);
            const SymMat x = l_ab(y, ai, bi);
            const auto ev = eigvals_sym(x);
            const double min_eig = ev.back();
            if (min_eig >= -tol) {
                ++rep.backward_pass;
            } else {
                rep.max_violation = std::max(rep.max_violation, -min_eig);
            }
        }
    }
    return rep;
}

SpectralReport verify_spectral_isomorphism_exact(int n, const Rat& a, const Rat& b, int samples,
                                  std::uint64_t rng_seed) {
    check_ab(a, b, n);
    const Cone q = ab_cone(n, a, b);
    const auto& rows = q.inequalities();
    const RatMat amat = ab_matrix(n, a, b);

    SpectralReport rep;
    rep.samples = samples;
    rep.tolerance = 0.0;

    auto sorted_desc = [](RatVec v) {
        std::sort(v.begin(), v.end(), [](const Rat& p, const Rat& r) { return r < p; });
        return v;
    };
    auto member = [&](const RatVec& lambda) {
        for (const auto& h : rows) {
            if (dot(h, lambda).sign() < 0) return false;
        }
        return true;
    };

    SplitMix64 rng(rng_seed);
    // Forward: exact nonnegative rational x, image under the map, sorted
    // spectrum must lie in the cone.
    for (int i = 0; i < samples; ++i) {
        RatVec x(static_cast<std::size_t>(n));
        for (auto& e : x) e = Rat(rng.next_int(0, 6), rng.next_int(1, 3));
        const RatVec y = amat.apply(x);
        if (member(sorted_desc(y))) {
            ++rep.forward_pass;
        } else {
            rep.max_violation = std::max(rep.max_violation, 1.0);
        }
    }
    // Backward: rejection-sample y with sorted spectrum in the cone; the
    // preimage must be exactly nonnegative.
    const int max_attempts = 100000;
    int attempts = 0;
    int accepted = 0;
    while (accepted < samples && attempts < max_attempts) {
        ++attempts;
        RatVec y(static_cast<std::size_t>(n));
        for (auto& e : y) e = Rat(rng.next_int(-6, 6), rng.next_int(1, 3));
        if (!member(sorted_desc(y))) continue;
        ++accepted;
        const auto x = solve(amat, y);
        bool nonneg = x.has_value();
        if (nonneg) {
            for (const auto& e : *x) nonneg = nonneg && e.sign() >= 0;
        }
        if (nonneg) {
            ++rep.backward_pass;
        } else {
            rep.max_violation = std::max(rep.max_violation, 1.0);
        }
    }
    if (accepted < samples) {
        rep.used_fallback = true;
        for (int i = accepted; i < samples; ++i) {
            RatVec x(static_cast<std::size_t>(n));
            for (auto& e : x) e = Rat(rng.next_int(0, 6), rng.next_int(1, 3));
            const RatVec y = amat.apply(x);
            const auto back = solve(amat, y);
            bool same = back.has_value();
            if (same) {
                for (std::size_t j = 0; j < x.size(); ++j) {
                    same = same && (*back)[j] == x[j];
                }
            }
            if (same) {
                ++rep.backward_pass;
            } else {
                rep.max_violation = std::max(rep.max_violation, 1.0);
            }
        }
    }
    return rep;
}

}  // namespace conelab
