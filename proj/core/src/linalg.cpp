#include "conelab/linalg.hpp"

#include <cassert>
#include <utility>

namespace conelab {

RatMat::RatMat(int rows, int cols)
    : rows_(rows), cols_(cols), e_(static_cast<std::size_t>(rows) * cols) {
    if (rows < 0 || cols <= 0) throw DimensionMismatchError("RatMat: bad shape");
}

RatMat RatMat::identity(int n) {
    RatMat m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = Rat(1);
    return m;
}

RatMat RatMat::all_ones(int n) {
    RatMat m(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m.at(i, j) = Rat(1);
    return m;
}

RatMat RatMat::from_rows(const std::vector<RatVec>& rows) {
    if (rows.empty()) throw DimensionMismatchError("from_rows: no rows");
    RatMat m(static_cast<int>(rows.size()), static_cast<int>(rows[0].size()));
    for (int i = 0; i < m.rows(); ++i) {
        if (static_cast<int>(rows[i].size()) != m.cols()) {
            throw DimensionMismatchError("from_rows: ragged rows");
        }
        for (int j = 0; j < m.cols(); ++j) m.at(i, j) = rows[i][j];
    }
    return m;
}

RatMat RatMat::from_cols(const std::vector<RatVec>& cols) {
    return from_rows(cols).transposed();
}

RatVec RatMat::row(int i) const {
    RatVec r(static_cast<std::size_t>(cols_));
    for (int j = 0; j < cols_; ++j) r[j] = at(i, j);
    return r;
}

RatVec RatMat::col(int j) const {
    RatVec c(static_cast<std::size_t>(rows_));
    for (int i = 0; i < rows_; ++i) c[i] = at(i, j);
    return c;
}

RatMat RatMat::transposed() const {
    RatMat t(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
    return t;
}

RatVec RatMat::apply(const RatVec& x) const {
    if (static_cast<int>(x.size()) != cols_) {
        throw DimensionMismatchError("apply: vector length != cols");
    }
    RatVec y(static_cast<std::size_t>(rows_));
    for (int i = 0; i < rows_; ++i) {
        Rat acc;
        for (int j = 0; j < cols_; ++j) acc += at(i, j) * x[j];
        y[i] = acc;
    }
    return y;
}

RatMat RatMat::operator*(const RatMat& o) const {
    if (cols_ != o.rows_) throw DimensionMismatchError("matmul: shape mismatch");
    RatMat r(rows_, o.cols_);
    for (int i = 0; i < rows_; ++i)
        for (int k = 0; k < cols_; ++k) {
            if (at(i, k).is_zero()) continue;
            for (int j = 0; j < o.cols_; ++j) r.at(i, j) += at(i, k) * o.at(k, j);
        }
    return r;
}

RatMat RatMat::operator+(const RatMat& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) {
        throw DimensionMismatchError("matadd: shape mismatch");
    }
    RatMat r(rows_, cols_);
    for (std::size_t k = 0; k < e_.size(); ++k) r.e_[k] = e_[k] + o.e_[k];
    return r;
}

RatMat RatMat::scaled(const Rat& c) const {
    RatMat r(*this);
    for (auto& e : r.e_) e *= c;
    return r;
}

namespace {

// Denominator-cleared integer copy; row scaling preserves rank and only
// scales the determinant by the returned factor.
struct IntMatrix {
    int rows, cols;
    std::vector<Int> e;
    Rat det_scale;  // product of the row scalings applied

    Int& at(int i, int j) { return e[static_cast<std::size_t>(i) * cols + j]; }
};

IntMatrix clear_denominators(const RatMat& m) {
    IntMatrix a{m.rows(), m.cols(), {}, Rat(1)};
    a.e.resize(static_cast<std::size_t>(m.rows()) * m.cols());
    for (int i = 0; i < m.rows(); ++i) {
        Int l(1);
        for (int j = 0; j < m.cols(); ++j) {
            Int t;
            mpz_lcm(t.get_mpz_t(), l.get_mpz_t(), m.at(i, j).den().get_mpz_t());
            l = t;
        }
        a.det_scale *= Rat(l, Int(1));
        for (int j = 0; j < m.cols(); ++j) {
            const Rat& r = m.at(i, j);
            a.at(i, j) = r.num() * (l / r.den());
        }
    }
    return a;
}

// One-step Bareiss elimination. Every produced entry is (up to sign) a minor
// of the input, so the division by the previous pivot is exact.
int bareiss_rank(IntMatrix& a, int* swap_sign, Int* last_pivot) {
    Int prev(1);
    int r = 0;
    if (swap_sign) *swap_sign = 1;
    for (int c = 0; c < a.cols && r < a.rows; ++c) {
        int pr = -1;
        for (int i = r; i < a.rows; ++i) {
            if (sgn(a.at(i, c)) != 0) {
                pr = i;
                break;
            }
        }
        if (pr < 0) continue;
        if (pr != r) {
            for (int j = 0; j < a.cols; ++j) std::swap(a.at(pr, j), a.at(r, j));
            if (swap_sign) *swap_sign = -*swap_sign;
        }
        const Int pivot = a.at(r, c);
        for (int i = r + 1; i < a.rows; ++i) {
            for (int j = c + 1; j < a.cols; ++j) {
                Int t = pivot * a.at(i, j) - a.at(i, c) * a.at(r, j);
                mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
                a.at(i, j) = std::move(t);
            }
            a.at(i, c) = 0;
        }
        prev = pivot;
        ++r;
    }
    if (last_pivot) *last_pivot = prev;
    return r;
}

}  // namespace

int rank(const RatMat& m) {
    if (m.rows() == 0) return 0;
    IntMatrix a = clear_denominators(m);
    return bareiss_rank(a, nullptr, nullptr);
}

int rank_of(const std::vector<RatVec>& rows) {
    if (rows.empty()) return 0;
    return rank(RatMat::from_rows(rows));
}

Rat determinant(const RatMat& m) {
    if (m.rows() != m.cols()) throw DimensionMismatchError("determinant: not square");
    IntMatrix a = clear_denominators(m);
    int sign = 1;
    Int last(1);
    const int r = bareiss_rank(a, &sign, &last);
    if (r < m.rows()) return Rat(0);
    Rat d(last, Int(1));
    if (sign < 0) d = -d;
    return d / a.det_scale;
}

RrefResult rref(const RatMat& m) {
    RatMat a(m);
    std::vector<int> pivots;
    int r = 0;
    for (int c = 0; c < a.cols() && r < a.rows(); ++c) {
        int pr = -1;
        for (int i = r; i < a.rows(); ++i) {
            if (!a.at(i, c).is_zero()) {
                pr = i;
                break;
            }
        }
        if (pr < 0) continue;
        if (pr != r) {
            for (int j = 0; j < a.cols(); ++j) std::swap(a.at(pr, j), a.at(r, j));
        }
        const Rat inv = a.at(r, c).inverse();
        for (int j = c; j < a.cols(); ++j) a.at(r, j) *= inv;
        for (int i = 0; i < a.rows(); ++i) {
            if (i == r || a.at(i, c).is_zero()) continue;
            const Rat f = a.at(i, c);
            for (int j = c; j < a.cols(); ++j) a.at(i, j) -= f * a.at(r, j);
        }
        pivots.push_back(c);
        ++r;
    }
    return {std::move(a), std::move(pivots)};
}

std::vector<RatVec> nullspace_basis(const RatMat& m) {
    const RrefResult rr = rref(m);
    std::vector<bool> is_pivot(static_cast<std::size_t>(m.cols()), false);
    for (int c : rr.pivot_cols) is_pivot[static_cast<std::size_t>(c)] = true;
    std::vector<RatVec> basis;
    for (int f = 0; f < m.cols(); ++f) {
        if (is_pivot[static_cast<std::size_t>(f)]) continue;
        RatVec v(static_cast<std::size_t>(m.cols()));
        v[static_cast<std::size_t>(f)] = Rat(1);
        for (std::size_t k = 0; k < rr.pivot_cols.size(); ++k) {
            v[static_cast<std::size_t>(rr.pivot_cols[k])] =
                -rr.mat.at(static_cast<int>(k), f);
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

std::optional<RatVec> solve(const RatMat& m, const RatVec& b) {
    if (static_cast<int>(b.size()) != m.rows()) {
        throw DimensionMismatchError("solve: rhs length != rows");
    }
    RatMat aug(m.rows(), m.cols() + 1);
    for (int i = 0; i < m.rows(); ++i) {
        for (int j = 0; j < m.cols(); ++j) aug.at(i, j) = m.at(i, j);
        aug.at(i, m.cols()) = b[i];
    }
    const RrefResult rr = rref(aug);
    for (int c : rr.pivot_cols) {
        if (c == m.cols()) return std::nullopt;  // 0 = 1 row
    }
    RatVec x(static_cast<std::size_t>(m.cols()));
    for (std::size_t k = 0; k < rr.pivot_cols.size(); ++k) {
        x[static_cast<std::size_t>(rr.pivot_cols[k])] =
            rr.mat.at(static_cast<int>(k), m.cols());
    }
    return x;
}

std::optional<RatMat> inverse(const RatMat& m) {
    if (m.rows() != m.cols()) throw DimensionMismatchError("inverse: not square");
    const int n = m.rows();
    RatMat aug(n, 2 * n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) aug.at(i, j) = m.at(i, j);
        aug.at(i, n + i) = Rat(1);
    }
    const RrefResult rr = rref(aug);
    if (static_cast<int>(rr.pivot_cols.size()) != n || rr.pivot_cols[n - 1] != n - 1) {
        return std::nullopt;
    }
    RatMat inv(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) inv.at(i, j) = rr.mat.at(i, n + j);
    return inv;
}

std::vector<RatVec> canonical_subspace_basis(const std::vector<RatVec>& vectors) {
    if (vectors.empty()) return {};
    const RrefResult rr = rref(RatMat::from_rows(vectors));
    std::vector<RatVec> basis;
    for (int i = 0; i < static_cast<int>(rr.pivot_cols.size()); ++i) {
        basis.push_back(make_primitive(rr.mat.row(i)));
    }
    return basis;
}

RatVec flatten_row_major(const RatMat& m) {
    RatVec v;
    v.reserve(static_cast<std::size_t>(m.rows()) * m.cols());
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) v.push_back(m.at(i, j));
    return v;
}

RatMat reshape_square(const RatVec& v, int n) {
    if (static_cast<int>(v.size()) != n * n) {
        throw DimensionMismatchError("reshape_square: length != n*n");
    }
    RatMat m(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m.at(i, j) = v[static_cast<std::size_t>(i) * n + j];
    return m;
}

}  // namespace conelab
