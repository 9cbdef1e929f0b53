#include "conelab/cone.hpp"

#include <algorithm>
#include <mutex>

#include "conelab/errors.hpp"

namespace conelab {

namespace {

void check_dims(int dim, const std::vector<RatVec>& vecs, const char* what) {
    if (dim < 1) throw DimensionMismatchError("cone: ambient dimension must be >= 1");
    for (const auto& v : vecs) {
        if (static_cast<int>(v.size()) != dim) {
            throw DimensionMismatchError(std::string(what) + ": wrong vector length");
        }
    }
}

// Primitive, zero-free, sorted, deduplicated.
std::vector<RatVec> normalize_list(const std::vector<RatVec>& vecs) {
    std::vector<RatVec> out;
    out.reserve(vecs.size());
    for (const auto& v : vecs) {
        if (is_zero_vec(v)) continue;
        out.push_back(make_primitive(v));
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

struct DDRay {
    RatVec v;
    std::vector<char> tight;  // one flag per processed inequality row
};

}  // namespace

DDResult double_description(int dim, const std::vector<RatVec>& inequalities) {
    check_dims(dim, inequalities, "double_description");

    std::vector<RatVec> lin;
    lin.reserve(static_cast<std::size_t>(dim));
    for (int i = 0; i < dim; ++i) lin.push_back(unit_vec(dim, i));

    std::vector<DDRay> rays;
    std::vector<RatVec> processed;

    for (const RatVec& raw : inequalities) {
        const RatVec h = make_primitive(raw);

        // Split the lineality space if h is nonzero on it.
        int split = -1;
        for (std::size_t j = 0; j < lin.size(); ++j) {
            if (!dot(h, lin[j]).is_zero()) {
                split = static_cast<int>(j);
                break;
            }
        }
        if (split >= 0) {
            RatVec v0 = lin[static_cast<std::size_t>(split)];
            Rat d0 = dot(h, v0);
            if (d0.sign() < 0) {
                v0 = neg(v0);
                d0 = -d0;
            }
            std::vector<RatVec> new_lin;
            for (std::size_t j = 0; j < lin.size(); ++j) {
                if (static_cast<int>(j) == split) continue;
                const Rat c = dot(h, lin[j]) / d0;
                new_lin.push_back(make_primitive(sub(lin[j], scale(v0, c))));
            }
            for (auto& r : rays) {
                const Rat c = dot(h, r.v) / d0;
                r.v = make_primitive(sub(r.v, scale(v0, c)));
                r.tight.push_back(1);
            }
            DDRay nr;
            nr.v = make_primitive(v0);
            nr.tight.assign(processed.size(), 1);  // v0 was in the lineality
            nr.tight.push_back(0);
            rays.push_back(std::move(nr));
            lin = std::move(new_lin);
            processed.push_back(h);
            continue;
        }

        std::vector<Rat> vals(rays.size());
        bool any_neg = false;
        for (std::size_t i = 0; i < rays.size(); ++i) {
            vals[i] = dot(h, rays[i].v);
            any_neg = any_neg || vals[i].sign() < 0;
        }
        if (!any_neg) {  // redundant on the current cone
            for (std::size_t i = 0; i < rays.size(); ++i) {
                rays[i].tight.push_back(vals[i].is_zero() ? 1 : 0);
            }
            processed.push_back(h);
            continue;
        }

        const int lin_dim = static_cast<int>(lin.size());
        std::vector<DDRay> created;
        for (std::size_t p = 0; p < rays.size(); ++p) {
            if (vals[p].sign() <= 0) continue;
            for (std::size_t q = 0; q < rays.size(); ++q) {
                if (vals[q].sign() >= 0) continue;
                // Common tight rows among the already processed inequalities.
                std::vector<RatVec> tight_rows;
                std::vector<char> both(processed.size());
                for (std::size_t t = 0; t < processed.size(); ++t) {
                    if (rays[p].tight[t] && rays[q].tight[t]) {
                        both[t] = 1;
                        tight_rows.push_back(processed[t]);
                    }
                }
                if (rank_of(tight_rows) != dim - lin_dim - 2) continue;
                DDRay nr;
                nr.v = make_primitive(
                    sub(scale(rays[q].v, vals[p]), scale(rays[p].v, vals[q])));
                both.push_back(1);
                nr.tight = std::move(both);
                created.push_back(std::move(nr));
            }
        }
        std::vector<DDRay> survivors;
        for (std::size_t i = 0; i < rays.size(); ++i) {
            if (vals[i].sign() < 0) continue;
            rays[i].tight.push_back(vals[i].is_zero() ? 1 : 0);
            survivors.push_back(std::move(rays[i]));
        }
        for (auto& nr : created) survivors.push_back(std::move(nr));
        rays = std::move(survivors);
        processed.push_back(h);
    }

    DDResult out;
    out.rays.reserve(rays.size());
    for (auto& r : rays) out.rays.push_back(std::move(r.v));
    std::sort(out.rays.begin(), out.rays.end());
    out.lineality = canonical_subspace_basis(lin);
    return out;
}

std::vector<RatVec> dd_generators(const DDResult& dd) {
    std::vector<RatVec> gens = dd.rays;
    for (const auto& v : dd.lineality) {
        gens.push_back(v);
        gens.push_back(neg(v));
    }
    std::sort(gens.begin(), gens.end());
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
    return gens;
}

// Shared, fill-at-most-once cache. The mutex makes completion single-flight:
// concurrent readers see either an absent or a fully computed field. All
// ensure_* members assume the mutex is held.
struct Cone::State {
    int dim = 0;
    std::optional<std::vector<RatVec>> gens;
    std::optional<std::vector<RatVec>> ineqs;
    std::optional<RayList> rays;
    std::optional<std::vector<RatVec>> lineality;
    std::optional<int> dimension;
    mutable std::mutex mu;

    const std::vector<RatVec>& ensure_ineqs() {
        if (!ineqs) {
            // The dual's generators are this cone's facet normals.
            const DDResult dd = double_description(dim, *gens);
            ineqs = dd_generators(dd);
        }
        return *ineqs;
    }

    const std::vector<RatVec>& ensure_gens() {
        if (!gens) {
            const DDResult dd = double_description(dim, *ineqs);
            gens = dd_generators(dd);
            if (!lineality) lineality = dd.lineality;
        }
        return *gens;
    }

    const std::vector<RatVec>& ensure_lineality() {
        if (!lineality) {
            const auto& rows = ensure_ineqs();
            if (rows.empty()) {
                std::vector<RatVec> full;
                for (int i = 0; i < dim; ++i) full.push_back(unit_vec(dim, i));
                lineality = std::move(full);
            } else {
                std::vector<RatVec> basis;
                for (auto& v : nullspace_basis(RatMat::from_rows(rows))) {
                    basis.push_back(make_primitive(v));
                }
                lineality = canonical_subspace_basis(basis);
            }
        }
        return *lineality;
    }

    const RayList& ensure_rays() {
        if (!rays) {
            if (!ensure_lineality().empty()) {
                throw NotPointedError("extreme_rays: cone has a nontrivial lineality space");
            }
            const auto& g = ensure_gens();
            const auto& rows = ensure_ineqs();
            RayList kept;
            for (const auto& cand : g) {
                std::vector<RatVec> tight;
                for (const auto& h : rows) {
                    if (dot(h, cand).is_zero()) tight.push_back(h);
                }
                if (rank_of(tight) == dim - 1) kept.push_back(cand);
            }
            rays = std::move(kept);  // g is sorted, so this is canonical
        }
        return *rays;
    }

    int ensure_dimension() {
        if (!dimension) dimension = rank_of(ensure_gens());
        return *dimension;
    }
};

Cone Cone::from_generators(int dim, const std::vector<RatVec>& gens) {
    check_dims(dim, gens, "from_generators");
    auto st = std::make_shared<State>();
    st->dim = dim;
    st->gens = normalize_list(gens);
    return Cone(std::move(st));
}

Cone Cone::from_inequalities(int dim, const std::vector<RatVec>& ineqs) {
    check_dims(dim, ineqs, "from_inequalities");
    auto st = std::make_shared<State>();
    st->dim = dim;
    st->ineqs = normalize_list(ineqs);
    return Cone(std::move(st));
}

Cone Cone::from_both(int dim, const std::vector<RatVec>& gens,
                     const std::vector<RatVec>& ineqs) {
    check_dims(dim, gens, "from_both");
    check_dims(dim, ineqs, "from_both");
    auto st = std::make_shared<State>();
    st->dim = dim;
    st->gens = normalize_list(gens);
    st->ineqs = normalize_list(ineqs);
    for (const auto& h : *st->ineqs) {
        for (const auto& g : *st->gens) {
            if (dot(h, g).sign() < 0) {
                throw Error("from_both: generator violates an inequality");
            }
        }
    }
    return Cone(std::move(st));
}

int Cone::dim() const { return st_->dim; }

const std::vector<RatVec>& Cone::generators() const {
    std::lock_guard<std::mutex> lock(st_->mu);
    return st_->ensure_gens();
}

const std::vector<RatVec>& Cone::inequalities() const {
    std::lock_guard<std::mutex> lock(st_->mu);
    return st_->ensure_ineqs();
}

bool Cone::has_generators() const {
    std::lock_guard<std::mutex> lock(st_->mu);
    return st_->gens.has_value();
}

bool Cone::has_inequalities() const {
    std::lock_guard<std::mutex> lock(st_->mu);
    return st_->ineqs.has_value();
}

const RayList& Cone::extreme_rays() const {
    std::lock_guard<std::mutex> lock(st_->mu);
    return st_->ensure_rays();
}

const std::vector<RatVec>& Cone::lineality_basis() const {
    std::lock_guard<std::mutex> lock(st_->mu);
    return st_->ensure_lineality();
}

Cone Cone::dual() const {
    std::vector<RatVec> gens;
    std::optional<std::vector<RatVec>> ineqs;
    {
        std::lock_guard<std::mutex> lock(st_->mu);
        gens = st_->ensure_gens();
        if (st_->ineqs) ineqs = st_->ineqs;
    }
    if (ineqs) return from_both(st_->dim, *ineqs, gens);
    return from_inequalities(st_->dim, gens);
}

bool Cone::contains(const RatVec& x) const {
    if (static_cast<int>(x.size()) != st_->dim) {
        throw DimensionMismatchError("contains: wrong vector length");
    }
    std::lock_guard<std::mutex> lock(st_->mu);
    for (const auto& h : st_->ensure_ineqs()) {
        if (dot(h, x).sign() < 0) return false;
    }
    return true;
}

bool Cone::is_pointed() const {
    std::lock_guard<std::mutex> lock(st_->mu);
    return st_->ensure_lineality().empty();
}

bool Cone::is_solid() const {
    std::lock_guard<std::mutex> lock(st_->mu);
    return st_->ensure_dimension() == st_->dim;
}

bool Cone::is_proper() const { return is_pointed() && is_solid(); }

int Cone::dimension() const {
    std::lock_guard<std::mutex> lock(st_->mu);
    return st_->ensure_dimension();
}

bool same_set(const Cone& a, const Cone& b) {
    if (a.dim() != b.dim()) return false;
    for (const auto& g : a.generators()) {
        if (!b.contains(g)) return false;
    }
    for (const auto& g : b.generators()) {
        if (!a.contains(g)) return false;
    }
    return true;
}

}  // namespace conelab
