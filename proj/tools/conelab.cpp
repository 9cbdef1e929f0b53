// conelab: exact polyhedral cone toolkit, JSON in / JSON out.
//
// Subcommands: dual, extreme, rank, ll-basis, decompose, check-perm,
// catalog, spectral-verify, verify-theorems. Machine-readable JSON goes to
// stdout (deterministic byte-for-byte for equal inputs and flags); a short
// human summary goes to stderr. Exit codes: 0 success, 1 property violation
// in verify-theorems, 2 malformed input.

#include <CLI11.hpp>

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "conelab/catalog.hpp"
#include "conelab/cone.hpp"
#include "conelab/decompose.hpp"
#include "conelab/errors.hpp"
#include "conelab/jordan.hpp"
#include "conelab/json_io.hpp"
#include "conelab/lyapunov.hpp"
#include "conelab/rng.hpp"
#include "conelab/symmetry.hpp"

namespace {

using conelab::Cone;
using conelab::Rat;
using conelab::RatVec;
using nlohmann::json;

json read_json_input(const std::string& path) {
    std::string text;
    if (path == "-") {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        text = ss.str();
    } else {
        std::ifstream in(path);
        if (!in) throw conelab::ParseError("cannot open input file: " + path);
        std::ostringstream ss;
        ss << in.rdbuf();
        text = ss.str();
    }
    try {
        return json::parse(text);
    } catch (const json::exception& e) {
        throw conelab::ParseError(std::string("invalid JSON: ") + e.what());
    }
}

Cone load_cone(const std::string& path) {
    return conelab::document_to_cone(conelab::cone_document_from_json(read_json_input(path)));
}

void emit(const json& j) { std::cout << j.dump() << "\n"; }

json vectors_to_json(const std::vector<RatVec>& vs) {
    json a = json::array();
    for (const auto& v : vs) a.push_back(conelab::rat_vec_to_json(v));
    return a;
}

int cmd_dual(const std::string& input) {
    const Cone k = load_cone(input);
    const Cone d = k.dual();
    (void)d.generators();  // force both representations for a stable document
    (void)d.inequalities();
    emit(conelab::cone_document_to_json(conelab::cone_to_document(d)));
    std::cerr << "dual cone: " << d.generators().size() << " generators, "
              << d.inequalities().size() << " inequalities\n";
    return 0;
}

int cmd_extreme(const std::string& input) {
    const Cone k = load_cone(input);
    const auto& rays = k.extreme_rays();
    json out;
    out["dim"] = k.dim();
    out["rays"] = vectors_to_json(rays);
    emit(out);
    std::cerr << rays.size() << " extreme rays\n";
    return 0;
}

int cmd_rank(const std::string& input) {
    const Cone k = load_cone(input);
    const auto pairs = conelab::complementary_pairs(k);
    const int beta = conelab::lyapunov_rank(k);
    json out;
    out["beta"] = beta;
    out["n"] = k.dim();
    out["pairs"] = pairs.size();
    emit(out);
    std::cerr << "beta = " << beta << " (n = " << k.dim() << ", pairs = "
              << pairs.size() << ")\n";
    return 0;
}

int cmd_ll_basis(const std::string& input) {
    const Cone k = load_cone(input);
    const auto basis = conelab::ll_basis(k);
    json mats = json::array();
    for (const auto& m : basis.mats) mats.push_back(conelab::rat_mat_to_json(m));
    json out;
    out["basis"] = std::move(mats);
    out["beta"] = basis.mats.size();
    out["n"] = basis.n;
    emit(out);
    std::cerr << "basis of " << basis.mats.size() << " matrices\n";
    return 0;
}

int cmd_decompose(const std::string& input) {
    const Cone k = load_cone(input);
    const auto d = conelab::decompose(k);
    json comps = json::array();
    for (const auto& rays : d.component_rays) comps.push_back(vectors_to_json(rays));
    json out;
    out["components"] = std::move(comps);
    out["dim"] = k.dim();
    out["irreducible"] = d.size() == 1;
    out["orthant_form"] = nullptr;
    if (k.is_proper() && conelab::is_permutation_invariant(k)) {
        if (const auto f = conelab::recognize_orthant_form(k)) {
            json of;
            of["a"] = f->a.str();
            of["b"] = f->b.str();
            json assign = json::array();
            for (int i = 0; i < f->assignment.size(); ++i) assign.push_back(f->assignment(i));
            of["assignment"] = std::move(assign);
            out["orthant_form"] = std::move(of);
        }
    }
    emit(out);
    std::cerr << d.size() << " component(s); irreducible = "
              << (d.size() == 1 ? "yes" : "no") << "\n";
    return 0;
}

int cmd_check_perm(const std::string& input) {
    const Cone k = load_cone(input);
    json out;
    out["dim"] = k.dim();
    out["ones_axis"] = conelab::to_string(conelab::contains_ones_axis(k));
    out["permutation_invariant"] = conelab::is_permutation_invariant(k);
    emit(out);
    std::cerr << "permutation invariant: "
              << (out["permutation_invariant"].get<bool>() ? "yes" : "no")
              << "; ones axis: " << out["ones_axis"].get<std::string>() << "\n";
    return 0;
}

struct CatalogFlags {
    std::string kind;
    int n = 0;
    int p = 0;
    std::string a = "0";
    std::string b = "0";
    std::string seeds_file;
    std::uint64_t seed = 0;
    std::string input;
};

int cmd_catalog(const CatalogFlags& f) {
    conelab::CatalogSpec spec;
    json meta;
    meta["kind"] = f.kind;
    if (f.kind == "orthant") {
        spec.kind = conelab::CatalogKind::Orthant;
        spec.n = f.n;
        meta["n"] = f.n;
    } else if (f.kind == "qpn") {
        spec.kind = conelab::CatalogKind::Qpn;
        spec.n = f.n;
        spec.p = f.p;
        meta["n"] = f.n;
        meta["p"] = f.p;
    } else if (f.kind == "ab") {
        spec.kind = conelab::CatalogKind::ABCone;
        spec.n = f.n;
        spec.a = Rat::parse(f.a);
        spec.b = Rat::parse(f.b);
        meta["n"] = f.n;
        meta["a"] = spec.a.str();
        meta["b"] = spec.b.str();
    } else if (f.kind == "orbit") {
        spec.kind = conelab::CatalogKind::Orbit;
        if (f.seeds_file.empty()) {
            throw conelab::ParseError("catalog orbit: --seeds FILE is required");
        }
        const json seeds = read_json_input(f.seeds_file);
        if (!seeds.is_array() || seeds.empty()) {
            throw conelab::ParseError("catalog orbit: seeds must be a nonempty array");
        }
        const int dim = static_cast<int>(seeds[0].size());
        for (const auto& s : seeds) {
            spec.seeds.push_back(conelab::rat_vec_from_json(s, dim));
        }
        meta["seeds"] = vectors_to_json(spec.seeds);
    } else if (f.kind == "direct-sum") {
        spec.kind = conelab::CatalogKind::DirectSum;
        if (f.input.empty()) {
            throw conelab::ParseError(
                "catalog direct-sum: --input FILE with a two-document array is required");
        }
        const json docs = read_json_input(f.input);
        if (!docs.is_array() || docs.size() != 2) {
            throw conelab::ParseError(
                "catalog direct-sum: input must be an array of two cone documents");
        }
        for (const auto& d : docs) {
            spec.summands.push_back(
                conelab::document_to_cone(conelab::cone_document_from_json(d)));
        }
    } else if (f.kind == "random-simplicial") {
        spec.kind = conelab::CatalogKind::RandomSimplicial;
        spec.n = f.n;
        spec.rng_seed = f.seed;
        meta["n"] = f.n;
        meta["seed"] = f.seed;
    } else {
        throw conelab::ParseError("catalog: unknown kind \"" + f.kind + "\"");
    }
    const Cone k = conelab::build_catalog_cone(spec);
    conelab::ConeDocument doc = conelab::cone_to_document(k);
    doc.metadata = std::move(meta);
    emit(conelab::cone_document_to_json(doc));
    std::cerr << "built " << f.kind << " cone in dimension " << k.dim() << "\n";
    return 0;
}

json report_to_json(const conelab::SpectralReport& r) {
    json out;
    out["backward_pass"] = r.backward_pass;
    out["fallback"] = r.used_fallback;
    out["forward_pass"] = r.forward_pass;
    out["max_violation"] = r.max_violation;
    out["samples"] = r.samples;
    out["tolerance"] = r.tolerance;
    return out;
}

int cmd_spectral_verify(int m, const std::string& a, const std::string& b,
                        int samples, std::uint64_t seed, double tol) {
    const auto rep =
        conelab::verify_spectral_isomorphism(m, Rat::parse(a), Rat::parse(b), samples, seed, tol);
    emit(report_to_json(rep));
    std::cerr << "forward " << rep.forward_pass << "/" << rep.samples << ", backward "
              << rep.backward_pass << "/" << rep.samples << ", max violation "
              << rep.max_violation << (rep.used_fallback ? " (fallback)" : "") << "\n";
    return 0;
}

// ---------------------------------------------------------------------------
// verify-theorems: the classification properties checked over the catalog.

struct CheckRow {
    std::string check;
    int n;
    bool pass;
    json detail;
};

// proper invariant cones at dimension n: the subset-sum family plus seeded
// orbit cones.
std::vector<Cone> dichotomy_corpus(int n, int samples, std::uint64_t seed,
                                   int* skipped) {
    std::vector<Cone> cones;
    for (int p = 2; p <= n; ++p) cones.push_back(conelab::qpn(n, p));
    conelab::SplitMix64 rng(seed + static_cast<std::uint64_t>(n));
    for (int t = 0; t < samples; ++t) {
        RatVec s(static_cast<std::size_t>(n));
        for (auto& e : s) e = Rat(rng.next_int(-1, 3), rng.next_int(1, 2));
        if (conelab::is_zero_vec(s)) continue;
        const Cone k = conelab::orbit_cone({s});
        if (k.is_proper()) {
            cones.push_back(k);
        } else if (skipped) {
            ++*skipped;
        }
    }
    return cones;
}

CheckRow check_orthant_form_roundtrip(int n, int samples, std::uint64_t seed) {
    conelab::SplitMix64 rng(seed ^ (0x5bull + static_cast<std::uint64_t>(n)));
    int cases = 0;
    bool pass = true;
    while (cases < samples) {
        const Rat a(rng.next_int(-4, 4), rng.next_int(1, 2));
        const Rat b(rng.next_int(-4, 4), rng.next_int(1, 2));
        if (a == b || a == Rat(1 - n) * b) continue;
        ++cases;
        const Cone k = conelab::ab_cone(n, a, b);
        bool ok = k.is_proper() && conelab::is_permutation_invariant(k);
        if (ok) {
            const auto d = conelab::decompose(k);
            ok = d.size() == static_cast<std::size_t>(n);
            const auto f = conelab::recognize_orthant_form(k);
            ok = ok && f.has_value() &&
                 conelab::same_set(conelab::ab_cone(n, f->a, f->b), k);
        }
        pass = pass && ok;
    }
    return {"orthant_form_roundtrip", n, pass, json{{"cases", cases}}};
}

CheckRow check_rank_dichotomy(int n, int samples, std::uint64_t seed) {
    int skipped = 0;
    const auto cones = dichotomy_corpus(n, samples, seed, &skipped);
    bool pass = true;
    for (const auto& k : cones) {
        const int beta = conelab::lyapunov_rank(k);
        const bool irr = conelab::is_irreducible(k);
        const auto f = conelab::recognize_orthant_form(k);
        const bool low = irr && beta == 1;
        const bool high = f.has_value() && beta == n;
        pass = pass && (low != high) && (low || high);
    }
    return {"rank_dichotomy", n, pass,
            json{{"cones", cones.size()}, {"skipped_improper", skipped}}};
}

CheckRow check_many_rays_irreducible(int n, int samples, std::uint64_t seed) {
    const auto cones = dichotomy_corpus(n, samples, seed, nullptr);
    bool pass = true;
    int cases = 0;
    for (const auto& k : cones) {
        if (static_cast<int>(k.extreme_rays().size()) <= n) continue;
        ++cases;
        pass = pass && conelab::is_irreducible(k) && conelab::lyapunov_rank(k) == 1;
    }
    return {"many_rays_irreducible", n, pass, json{{"cases", cases}}};
}

CheckRow check_distinct_orbit_rays_irreducible(int n, int samples,
                                               std::uint64_t seed) {
    conelab::SplitMix64 rng(seed ^ (0xd15ull + static_cast<std::uint64_t>(n)));
    int cases = 0;
    bool pass = true;
    for (int t = 0; t < samples * 4 && cases < samples; ++t) {
        RatVec v1(static_cast<std::size_t>(n)), v2(static_cast<std::size_t>(n));
        for (auto& e : v1) e = Rat(rng.next_int(0, 3));
        for (auto& e : v2) e = Rat(rng.next_int(0, 3));
        if (conelab::is_zero_vec(v1) || conelab::is_zero_vec(v2)) continue;
        const Cone k = conelab::orbit_cone({v1, v2});
        if (!k.is_proper()) continue;
        const auto& rays = k.extreme_rays();
        const auto orb0 = conelab::orbit_of(rays[0]);
        bool two_orbits = false;
        for (const auto& r : rays) {
            if (std::find(orb0.begin(), orb0.end(), r) == orb0.end()) {
                two_orbits = true;
                break;
            }
        }
        if (!two_orbits) continue;
        ++cases;
        pass = pass && conelab::is_irreducible(k) && conelab::lyapunov_rank(k) == 1;
    }
    return {"distinct_orbit_rays_irreducible", n, pass, json{{"cases", cases}}};
}

CheckRow check_ones_axis(int n, int samples, std::uint64_t seed) {
    conelab::SplitMix64 rng(seed ^ (0x1ull + static_cast<std::uint64_t>(n)));
    int cases = 0;
    bool pass = true;
    for (int t = 0; t < samples * 2; ++t) {
        RatVec s(static_cast<std::size_t>(n));
        for (auto& e : s) e = Rat(rng.next_int(-2, 3), rng.next_int(1, 2));
        if (conelab::is_zero_vec(s)) continue;
        const Cone k = conelab::orbit_cone({s});
        if (!k.is_pointed() || k.generators().empty()) continue;
        ++cases;
        pass = pass && conelab::contains_ones_axis(k) != conelab::OnesAxis::Neither;
    }
    return {"ones_axis_membership", n, pass, json{{"cases", cases}}};
}

CheckRow check_rank_bounds(int n, int samples, std::uint64_t seed) {
    auto cones = dichotomy_corpus(n, samples, seed, nullptr);
    conelab::SplitMix64 rng(seed ^ (0xb0ull + static_cast<std::uint64_t>(n)));
    for (int t = 0; t < samples; ++t) {
        cones.push_back(conelab::random_simplicial(n, rng.next()));
    }
    bool pass = true;
    for (const auto& k : cones) {
        const int beta = conelab::lyapunov_rank(k);
        pass = pass && 1 <= beta && beta <= n && beta != n - 1;
    }
    return {"rank_bounds", n, pass, json{{"cones", cones.size()}}};
}

CheckRow check_spectral_isomorphism(int n, int samples, std::uint64_t seed) {
    const Rat a = n >= 3 ? Rat(-(n - 2)) : Rat(0);
    const Rat b(1);
    const int fsamples = samples * 20;
    const auto rep = conelab::verify_spectral_isomorphism(n, a, b, fsamples, seed, 1e-9);
    const auto oracle = conelab::verify_spectral_isomorphism_exact(n, a, b, fsamples, seed + 1);
    const bool pass = rep.forward_pass == fsamples && rep.backward_pass == fsamples &&
                      oracle.forward_pass == fsamples &&
                      oracle.backward_pass == fsamples;
    return {"spectral_isomorphism", n, pass,
            json{{"a", a.str()},
                 {"b", b.str()},
                 {"samples", fsamples},
                 {"max_violation", rep.max_violation},
                 {"exact_oracle_violation", oracle.max_violation}}};
}

int cmd_verify_theorems(const std::string& range, int samples, std::uint64_t seed) {
    const auto sep = range.find("..");
    if (sep == std::string::npos) {
        throw conelab::ParseError("--n-range expects LO..HI");
    }
    int lo = 0, hi = 0;
    try {
        lo = std::stoi(range.substr(0, sep));
        hi = std::stoi(range.substr(sep + 2));
    } catch (const std::exception&) {
        throw conelab::ParseError("--n-range expects LO..HI with integers");
    }
    if (lo < 2 || hi < lo || hi > 8) {
        throw conelab::ParseError("--n-range must satisfy 2 <= LO <= HI <= 8");
    }

    std::vector<CheckRow> rows;
    for (int n = lo; n <= hi; ++n) {
        rows.push_back(check_orthant_form_roundtrip(n, samples, seed));
        rows.push_back(check_rank_dichotomy(n, samples, seed));
        rows.push_back(check_many_rays_irreducible(n, samples, seed));
        rows.push_back(check_distinct_orbit_rays_irreducible(n, samples, seed));
        rows.push_back(check_ones_axis(n, samples, seed));
        rows.push_back(check_rank_bounds(n, samples, seed));
        if (n <= 5) rows.push_back(check_spectral_isomorphism(n, samples, seed));
    }

    json table = json::array();
    bool all_pass = true;
    for (const auto& r : rows) {
        json row;
        row["check"] = r.check;
        row["detail"] = r.detail;
        row["n"] = r.n;
        row["pass"] = r.pass;
        table.push_back(std::move(row));
        all_pass = all_pass && r.pass;
        std::cerr << (r.pass ? "[ok]   " : "[FAIL] ") << r.check << " n=" << r.n
                  << "\n";
    }
    emit(table);
    std::cerr << (all_pass ? "all checks passed\n" : "some checks FAILED\n");
    return all_pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact polyhedral cone toolkit"};
    app.require_subcommand(1);

    std::string input = "-";
    CatalogFlags cat;
    int m = 3;
    std::string a = "0", b = "1";
    int samples = 1000;
    std::uint64_t seed = 1;
    double tol = 1e-9;
    std::string n_range = "2..4";
    int vt_samples = 8;
    std::uint64_t vt_seed = 20260810;

    auto* dual = app.add_subcommand("dual", "dual cone of a cone document");
    dual->add_option("--input", input, "cone document file, or - for stdin");

    auto* extreme = app.add_subcommand("extreme", "canonical extreme ray list");
    extreme->add_option("--input", input, "cone document file, or - for stdin");

    auto* rank = app.add_subcommand("rank", "bilinearity rank of a proper cone");
    rank->add_option("--input", input, "cone document file, or - for stdin");

    auto* llb = app.add_subcommand("ll-basis", "basis of the bilinear-relation space");
    llb->add_option("--input", input, "cone document file, or - for stdin");

    auto* dec = app.add_subcommand("decompose", "finest direct-sum decomposition");
    dec->add_option("--input", input, "cone document file, or - for stdin");

    auto* chk = app.add_subcommand("check-perm", "permutation invariance report");
    chk->add_option("--input", input, "cone document file, or - for stdin");

    auto* cata = app.add_subcommand("catalog", "construct a named cone");
    cata->add_option("--kind", cat.kind,
                     "orthant|qpn|ab|orbit|direct-sum|random-simplicial")
        ->required();
    cata->add_option("--n", cat.n, "ambient dimension");
    cata->add_option("--p", cat.p, "subset-sum parameter");
    cata->add_option("--a", cat.a, "diagonal value (rational)");
    cata->add_option("--b", cat.b, "off-diagonal value (rational)");
    cata->add_option("--seeds", cat.seeds_file, "JSON file with seed vectors");
    cata->add_option("--seed", cat.seed, "PRNG seed");
    cata->add_option("--input", cat.input, "two-document array for direct-sum");

    auto* spec = app.add_subcommand("spectral-verify",
                                    "bidirectional spectral membership check");
    spec->add_option("--m", m, "matrix size / algebra rank")->required();
    spec->add_option("--a", a, "diagonal value (rational)")->required();
    spec->add_option("--b", b, "off-diagonal value (rational)")->required();
    spec->add_option("--samples", samples, "sample count per direction");
    spec->add_option("--seed", seed, "PRNG seed");
    spec->add_option("--tol", tol, "membership tolerance");

    auto* vt = app.add_subcommand("verify-theorems",
                                  "classification property suite over the catalog");
    vt->add_option("--n-range", n_range, "dimension range LO..HI");
    vt->add_option("--samples", vt_samples, "random cones per dimension");
    vt->add_option("--seed", vt_seed, "PRNG seed");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        app.exit(e);
        return 2;
    }

    try {
        if (dual->parsed()) return cmd_dual(input);
        if (extreme->parsed()) return cmd_extreme(input);
        if (rank->parsed()) return cmd_rank(input);
        if (llb->parsed()) return cmd_ll_basis(input);
        if (dec->parsed()) return cmd_decompose(input);
        if (chk->parsed()) return cmd_check_perm(input);
        if (cata->parsed()) return cmd_catalog(cat);
        if (spec->parsed()) return cmd_spectral_verify(m, a, b, samples, seed, tol);
        if (vt->parsed()) return cmd_verify_theorems(n_range, vt_samples, vt_seed);
    } catch (const conelab::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
