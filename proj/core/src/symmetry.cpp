#include "conelab/symmetry.hpp"

#include <algorithm>
#include <set>

#include "conelab/errors.hpp"

namespace conelab {

Perm::Perm(std::vector<int> images) : img_(std::move(images)) {
    std::vector<bool> seen(img_.size(), false);
    for (int v : img_) {
        if (v < 0 || v >= static_cast<int>(img_.size()) || seen[static_cast<std::size_t>(v)]) {
            throw Error("Perm: images are not a bijection");
        }
        seen[static_cast<std::size_t>(v)] = true;
    }
}

Perm Perm::identity(int n) {
    std::vector<int> img(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) img[static_cast<std::size_t>(i)] = i;
    return Perm(std::move(img));
}

Perm Perm::transposition(int n, int i, int j) {
    Perm p = identity(n);
    std::swap(p.img_[static_cast<std::size_t>(i)], p.img_[static_cast<std::size_t>(j)]);
    return p;
}

Perm Perm::cycle(int n) {
    std::vector<int> img(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) img[static_cast<std::size_t>(i)] = (i + 1) % n;
    return Perm(std::move(img));
}

Perm Perm::random(int n, SplitMix64& rng) {
    std::vector<int> img(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) img[static_cast<std::size_t>(i)] = i;
    for (int i = n - 1; i > 0; --i) {  // Fisher-Yates
        const int j = static_cast<int>(rng.next_below(static_cast<std::uint64_t>(i + 1)));
        std::swap(img[static_cast<std::size_t>(i)], img[static_cast<std::size_t>(j)]);
    }
    return Perm(std::move(img));
}

Perm Perm::inverse() const {
    std::vector<int> inv(img_.size());
    for (int i = 0; i < size(); ++i) inv[static_cast<std::size_t>(img_[static_cast<std::size_t>(i)])] = i;
    return Perm(std::move(inv));
}

Perm Perm::after(const Perm& first) const {
    if (size() != first.size()) throw DimensionMismatchError("Perm::after: size mismatch");
    std::vector<int> img(img_.size());
    for (int i = 0; i < size(); ++i) {
        img[static_cast<std::size_t>(i)] = (*this)(first(i));
    }
    return Perm(std::move(img));
}

RatVec Perm::apply(const RatVec& x) const {
    if (static_cast<int>(x.size()) != size()) {
        throw DimensionMismatchError("Perm::apply: wrong vector length");
    }
    RatVec y(x.size());
    for (int i = 0; i < size(); ++i) {
        y[static_cast<std::size_t>((*this)(i))] = x[static_cast<std::size_t>(i)];
    }
    return y;
}

RatMat Perm::matrix() const {
    RatMat p(size(), size());
    for (int i = 0; i < size(); ++i) p.at((*this)(i), i) = Rat(1);
    return p;
}

bool is_permutation_invariant(const Cone& k) {
    const int n = k.dim();
    if (n == 1) return true;
    const std::vector<RatVec>& vecs =
        k.is_pointed() ? k.extreme_rays() : k.generators();
    const Perm tau = Perm::transposition(n, 0, 1);
    const Perm cyc = Perm::cycle(n);
    for (const Perm* sigma : {&tau, &cyc}) {
        for (const auto& v : vecs) {
            if (!k.contains(sigma->apply(v))) return false;
        }
    }
    return true;
}

std::vector<RatVec> orbit_of(const RatVec& v) {
    const int n = static_cast<int>(v.size());
    std::set<RatVec> seen;
    std::vector<RatVec> work{v};
    seen.insert(v);
    if (n >= 2) {
        const Perm tau = Perm::transposition(n, 0, 1);
        const Perm cyc = Perm::cycle(n);
        while (!work.empty()) {
            const RatVec cur = std::move(work.back());
            work.pop_back();
            for (const Perm* sigma : {&tau, &cyc}) {
                RatVec img = sigma->apply(cur);
                if (seen.insert(img).second) work.push_back(std::move(img));
            }
        }
    }
    return {seen.begin(), seen.end()};
}

Cone orbit_cone(const std::vector<RatVec>& seeds) {
    if (seeds.empty()) throw Error("orbit_cone: empty seed list");
    const int n = static_cast<int>(seeds[0].size());
    std::set<RatVec> all;
    for (const auto& s : seeds) {
        if (static_cast<int>(s.size()) != n) {
            throw DimensionMismatchError("orbit_cone: mixed seed dimensions");
        }
        if (is_zero_vec(s)) continue;
        for (auto& v : orbit_of(make_primitive(s))) all.insert(std::move(v));
    }
    return Cone::from_generators(n, {all.begin(), all.end()});
}

OnesAxis contains_ones_axis(const Cone& k) {
    const RatVec one = ones_vec(k.dim());
    const bool plus = k.contains(one);
    const bool minus = k.contains(neg(one));
    if (plus && minus) return OnesAxis::Both;
    if (plus) return OnesAxis::PlusOne;
    if (minus) return OnesAxis::MinusOne;
    return OnesAxis::Neither;
}

const char* to_string(OnesAxis a) {
    switch (a) {
        case OnesAxis::PlusOne: return "PlusOne";
        case OnesAxis::MinusOne: return "MinusOne";
        case OnesAxis::Both: return "Both";
        case OnesAxis::Neither: return "Neither";
    }
    return "Neither";
}

}  // namespace conelab
