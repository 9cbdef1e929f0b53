#include "conelab/rat.hpp"

#include <numeric>
#include <ostream>
#include <sstream>

namespace conelab {

namespace {

bool valid_integer_literal(const std::string& s) {
    std::size_t i = 0;
    if (i < s.size() && s[i] == '-') ++i;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i) {
        if (s[i] < '0' || s[i] > '9') return false;
    }
    return true;
}

}  // namespace

Rat::Rat(long num, long den) : v_(num, den) {
    if (den == 0) throw Error("Rat: zero denominator");
    v_.canonicalize();
}

Rat::Rat(const Int& num, const Int& den) : v_(num, den) {
    if (sgn(den) == 0) throw Error("Rat: zero denominator");
    v_.canonicalize();
}

Rat& Rat::operator/=(const Rat& o) {
    if (o.is_zero()) throw Error("Rat: division by zero");
    v_ /= o.v_;
    return *this;
}

Rat Rat::inverse() const {
    if (is_zero()) throw Error("Rat: inverse of zero");
    return Rat(mpq_class(1) / v_);
}

Rat Rat::parse(const std::string& text) {
    const auto slash = text.find('/');
    const std::string num_part = text.substr(0, slash);
    if (!valid_integer_literal(num_part)) {
        throw ParseError("invalid rational literal: \"" + text + "\"");
    }
    mpq_class q{Int(num_part)};
    if (slash != std::string::npos) {
        const std::string den_part = text.substr(slash + 1);
        if (!valid_integer_literal(den_part) || den_part[0] == '-') {
            throw ParseError("invalid rational literal: \"" + text + "\"");
        }
        const Int den(den_part);
        if (sgn(den) == 0) throw ParseError("zero denominator in \"" + text + "\"");
        q /= mpq_class(den);
    }
    return Rat(q);
}

std::string Rat::str() const {
    if (is_integer()) return v_.get_num().get_str();
    return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

std::ostream& operator<<(std::ostream& os, const Rat& r) { return os << r.str(); }

Rat dot(const RatVec& a, const RatVec& b) {
    if (a.size() != b.size()) throw DimensionMismatchError("dot: length mismatch");
    Rat acc;
    for (std::size_t i = 0; i < a.size(); ++i) acc += a[i] * b[i];
    return acc;
}

RatVec add(const RatVec& a, const RatVec& b) {
    if (a.size() != b.size()) throw DimensionMismatchError("add: length mismatch");
    RatVec r(a);
    for (std::size_t i = 0; i < a.size(); ++i) r[i] += b[i];
    return r;
}

RatVec sub(const RatVec& a, const RatVec& b) {
    if (a.size() != b.size()) throw DimensionMismatchError("sub: length mismatch");
    RatVec r(a);
    for (std::size_t i = 0; i < a.size(); ++i) r[i] -= b[i];
    return r;
}

RatVec scale(const RatVec& v, const Rat& c) {
    RatVec r(v);
    for (auto& e : r) e *= c;
    return r;
}

RatVec neg(const RatVec& v) {
    RatVec r(v);
    for (auto& e : r) e = -e;
    return r;
}

bool is_zero_vec(const RatVec& v) {
    for (const auto& e : v) {
        if (!e.is_zero()) return false;
    }
    return true;
}

RatVec unit_vec(int dim, int index) {
    RatVec v(static_cast<std::size_t>(dim));
    v[static_cast<std::size_t>(index)] = Rat(1);
    return v;
}

RatVec ones_vec(int dim) { return RatVec(static_cast<std::size_t>(dim), Rat(1)); }

RatVec make_primitive(const RatVec& v) {
    if (is_zero_vec(v)) return v;
    Int den_lcm(1);
    for (const auto& e : v) {
        Int l;
        mpz_lcm(l.get_mpz_t(), den_lcm.get_mpz_t(), e.den().get_mpz_t());
        den_lcm = l;
    }
    std::vector<Int> ints;
    ints.reserve(v.size());
    Int content(0);
    for (const auto& e : v) {
        Int scaled = e.num() * (den_lcm / e.den());
        Int g;
        mpz_gcd(g.get_mpz_t(), content.get_mpz_t(), scaled.get_mpz_t());
        content = g;
        ints.push_back(std::move(scaled));
    }
    RatVec out;
    out.reserve(v.size());
    for (auto& e : ints) out.emplace_back(e / content, Int(1));
    return out;
}

RatVec canonical_line(const RatVec& v) {
    RatVec p = make_primitive(v);
    for (const auto& e : p) {
        if (e.is_zero()) continue;
        return e.sign() < 0 ? neg(p) : p;
    }
    return p;
}

std::string vec_str(const RatVec& v) {
    std::ostringstream os;
    os << "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) os << ", ";
        os << v[i];
    }
    os << ")";
    return os.str();
}

}  // namespace conelab
