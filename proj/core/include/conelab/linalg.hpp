#pragma once

#include <optional>
#include <vector>

#include "conelab/rat.hpp"

namespace conelab {

// Dense rational matrix, row-major. Dimensions are fixed at construction.
class RatMat {
 public:
    RatMat(int rows, int cols);
    static RatMat identity(int n);
    static RatMat all_ones(int n);
    static RatMat from_rows(const std::vector<RatVec>& rows);
    static RatMat from_cols(const std::vector<RatVec>& cols);

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    Rat& at(int i, int j) { return e_[static_cast<std::size_t>(i) * cols_ + j]; }
    const Rat& at(int i, int j) const {
        return e_[static_cast<std::size_t>(i) * cols_ + j];
    }

    RatVec row(int i) const;
    RatVec col(int j) const;
    RatMat transposed() const;
    RatVec apply(const RatVec& x) const;  // M x
    RatMat operator*(const RatMat& o) const;
    RatMat operator+(const RatMat& o) const;
    RatMat scaled(const Rat& c) const;

    friend bool operator==(const RatMat& a, const RatMat& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.e_ == b.e_;
    }

 private:
    int rows_, cols_;
    std::vector<Rat> e_;
};

struct RrefResult {
    RatMat mat;
    std::vector<int> pivot_cols;  // increasing
};

// Exact rank via fraction-free (Bareiss) elimination on a denominator-cleared
// integer copy; intermediate entries stay minors of the input, which bounds
// their growth.
int rank(const RatMat& m);
int rank_of(const std::vector<RatVec>& rows);  // 0 for an empty list

// Determinant of a square matrix, Bareiss with row pivoting.
Rat determinant(const RatMat& m);

// Reduced row echelon form over the rationals. Every entry is reduced to
// lowest terms after each step, so results are identical across runs.
RrefResult rref(const RatMat& m);

// Exactly cols - rank(m) independent vectors v with m v = 0, ordered by the
// free column they set to one.
std::vector<RatVec> nullspace_basis(const RatMat& m);

// One solution of m x = b, or nullopt when the system is inconsistent.
std::optional<RatVec> solve(const RatMat& m, const RatVec& b);

std::optional<RatMat> inverse(const RatMat& m);

// Canonical basis of span(vectors): primitive nonzero rows of the rref.
std::vector<RatVec> canonical_subspace_basis(const std::vector<RatVec>& vectors);

RatVec flatten_row_major(const RatMat& m);
RatMat reshape_square(const RatVec& v, int n);

}  // namespace conelab
