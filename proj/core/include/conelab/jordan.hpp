#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "conelab/cone.hpp"
#include "conelab/rat.hpp"

namespace conelab {

// Dense real symmetric matrix. The only floating-point carrier in the
// library; cones stay exact and eigenvalue vectors are tested against exact
// inequality rows with an explicit signed tolerance.
class SymMat {
 public:
    explicit SymMat(int m);
    static SymMat identity(int m);
    // Rejects any asymmetry, however small.
    static SymMat from_rows(const std::vector<std::vector<double>>& rows);

    int size() const { return m_; }
    double at(int i, int j) const { return e_[static_cast<std::size_t>(i) * m_ + j]; }
    void set(int i, int j, double v) {
        e_[static_cast<std::size_t>(i) * m_ + j] = v;
        e_[static_cast<std::size_t>(j) * m_ + i] = v;
    }
    double trace() const;
    double frob_norm() const;

 private:
    int m_;
    std::vector<double> e_;
};

struct EigResult {
    std::vector<double> values;                // decreasing
    std::vector<std::vector<double>> vectors;  // vectors[k] pairs with values[k]
};

// Cyclic Jacobi rotations, iterated until the off-diagonal Frobenius norm
// drops below 1e-12 * (1 + ||X||_F). Throws ConvergenceError after a fixed
// sweep budget.
EigResult eig_sym(const SymMat& x);
std::vector<double> eigvals_sym(const SymMat& x);

// (a-b) X + b tr(X) I.
SymMat l_ab(const SymMat& x, double a, double b);

// Exact coefficients (a', b') with L_{(a',b')} inverting L_{(a,b)} on m x m
// symmetric matrices; nullopt when the map is singular.
std::optional<std::pair<Rat, Rat>> l_ab_inverse_coeffs(const Rat& a, const Rat& b,
                                                       int m);

// Whether the decreasing eigenvalue vector of y satisfies every inequality
// row of q up to the signed tolerance -tol * scale, with
// scale = ||h||_1 * (1 + ||lambda||_inf) per row. q must be permutation
// invariant (checked): only then is testing the sorted vector sound.
bool spectral_membership(const SymMat& y, const Cone& q, double tol = 1e-9);

struct SpectralReport {
    int samples = 0;
    double tolerance = 0.0;
    int forward_pass = 0;
    int backward_pass = 0;
    double max_violation = 0.0;
    bool used_fallback = false;
};

// Bidirectional sampling check that the matrices with eigenvalue vector in
// ab_cone(m, a, b) are exactly the images (a-b)X + b tr(X) I of positive
// semidefinite X. Forward: random PSD X = G^T G, test the image's spectrum
// against the cone. Backward: rejection-sample symmetric Y with spectrum in
// the cone, invert the map, test that the preimage is PSD up to tol. When
// rejection acceptance stays under 1% after 1e5 draws, remaining backward
// samples are constructed as images of random PSD matrices and the inverse
// map is tested on those instead, so both directions still run.
SpectralReport verify_spectral_isomorphism(int m, const Rat& a, const Rat& b, int samples,
                            std::uint64_t rng_seed, double tol);

// Same check on the algebra R^n with the componentwise product, where the
// eigenvalue map is plain decreasing sort and everything is rational: runs
// with tolerance 0 and serves as the exact oracle for the floating-point
// path.
SpectralReport verify_spectral_isomorphism_exact(int n, const Rat& a, const Rat& b, int samples,
                                  std::uint64_t rng_seed);

}  // namespace conelab
