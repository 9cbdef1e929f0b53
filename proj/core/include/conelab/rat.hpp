#pragma once

#include <gmpxx.h>

#include <compare>
#include <iosfwd>
#include <string>
#include <vector>

#include "conelab/errors.hpp"

namespace conelab {

using Int = mpz_class;

// Exact arbitrary-precision rational. Always canonical: lowest terms with a
// positive denominator. All arithmetic and comparisons are exact; there is no
// rounding anywhere in this type.
class Rat {
 public:
    Rat() : v_(0) {}
    Rat(int n) : v_(n) {}                // NOLINT(runtime/explicit)
    Rat(long n) : v_(n) {}               // NOLINT(runtime/explicit)
    Rat(long num, long den);
    Rat(const Int& num, const Int& den);
    explicit Rat(mpq_class q) : v_(std::move(q)) { v_.canonicalize(); }

    // Accepts "p" or "p/q" with optional leading '-'; rejects anything else.
    static Rat parse(const std::string& text);
    // Inverse of parse: "p/q", or just "p" when the denominator is 1.
    std::string str() const;

    Int num() const { return v_.get_num(); }
    Int den() const { return v_.get_den(); }
    int sign() const { return sgn(v_); }
    bool is_zero() const { return sign() == 0; }
    bool is_integer() const { return v_.get_den() == 1; }
    double to_double() const { return v_.get_d(); }
    const mpq_class& raw() const { return v_; }

    Rat& operator+=(const Rat& o) { v_ += o.v_; return *this; }
    Rat& operator-=(const Rat& o) { v_ -= o.v_; return *this; }
    Rat& operator*=(const Rat& o) { v_ *= o.v_; return *this; }
    Rat& operator/=(const Rat& o);

    friend Rat operator+(Rat a, const Rat& b) { a += b; return a; }
    friend Rat operator-(Rat a, const Rat& b) { a -= b; return a; }
    friend Rat operator*(Rat a, const Rat& b) { a *= b; return a; }
    friend Rat operator/(Rat a, const Rat& b) { a /= b; return a; }
    Rat operator-() const { return Rat(mpq_class(-v_)); }

    Rat abs() const { return sign() < 0 ? -*this : *this; }
    Rat inverse() const;

    friend bool operator==(const Rat& a, const Rat& b) { return cmp(a.v_, b.v_) == 0; }
    friend std::strong_ordering operator<=>(const Rat& a, const Rat& b) {
        const int c = cmp(a.v_, b.v_);
        return c < 0   ? std::strong_ordering::less
               : c > 0 ? std::strong_ordering::greater
                       : std::strong_ordering::equal;
    }

    friend std::ostream& operator<<(std::ostream& os, const Rat& r);

 private:
    mpq_class v_;
};

using RatVec = std::vector<Rat>;

Rat dot(const RatVec& a, const RatVec& b);
RatVec add(const RatVec& a, const RatVec& b);
RatVec sub(const RatVec& a, const RatVec& b);
RatVec scale(const RatVec& v, const Rat& c);
RatVec neg(const RatVec& v);
bool is_zero_vec(const RatVec& v);
RatVec unit_vec(int dim, int index);
RatVec ones_vec(int dim);

// Scales v by a positive rational so the entries become coprime integers.
// Direction-preserving: the result spans the same ray as v. Zero stays zero.
RatVec make_primitive(const RatVec& v);

// make_primitive plus a sign flip so the first nonzero entry is positive.
// Canonical representative of the *line* through v, for lineality directions
// and other orientation-free uses; never apply it to rays of a pointed cone.
RatVec canonical_line(const RatVec& v);

std::string vec_str(const RatVec& v);

}  // namespace conelab
