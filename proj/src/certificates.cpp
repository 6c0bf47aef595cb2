#include "gk/certificates.hpp"

#include <algorithm>
#include <bit>
#include <cstdio>
#include <ctime>
#include <random>
#include <vector>

#include "gk/digest.hpp"
#include "gk/errors.hpp"
#include "gk/factorize.hpp"
#include "gk/matrix_io.hpp"
#include "gk/version.hpp"

namespace gk {

namespace {

using ordered_json = nlohmann::ordered_json;

std::size_t vertex_cap(const BuildLimits& lim) {
    return lim.force ? SIZE_MAX : lim.max_vertices;
}

ordered_json cycle_witness_json(const GKGraph& g, const OddCycleWitness& w) {
    ordered_json out;
    out["length"] = w.vertices.size();
    out["vertices"] = w.vertices;
    ordered_json masks = ordered_json::array();
    for (uint32_t v : w.vertices) masks.push_back(std::to_string(g.vertex_mask(v)));
    out["masks"] = std::move(masks);
    return out;
}

// Deterministic partial Fisher-Yates; avoids std::uniform_int_distribution,
// whose output is implementation-defined.
std::vector<uint32_t> sample_vertices(std::size_t n, std::size_t k, std::mt19937_64& rng) {
    std::vector<uint32_t> idx(n);
    for (std::size_t i = 0; i < n; ++i) idx[i] = uint32_t(i);
    for (std::size_t i = 0; i < k; ++i) {
        std::size_t j = i + std::size_t(rng() % (n - i));
        std::swap(idx[i], idx[j]);
    }
    idx.resize(k);
    std::sort(idx.begin(), idx.end());
    return idx;
}

ordered_json girth_section(const GKGraph& g, unsigned ell, const GirthCheckConfig& cfg,
                           bool& exceeds) {
    ordered_json out;
    out["ell"] = ell;
    const std::size_t n = g.num_vertices();
    if (n <= cfg.exhaustive_threshold) {
        out["mode"] = "exhaustive";
        OddCycleWitness w;
        exceeds = odd_girth_exceeds(g, ell, &w);
        out["exceeds"] = exceeds;
        if (!exceeds) out["witness"] = cycle_witness_json(g, w);
        return out;
    }
    out["mode"] = "sampled";
    out["samples"] = cfg.samples;
    out["sample_size"] = cfg.sample_size;
    out["seed"] = std::to_string(cfg.seed);
    out["semantics"] = "refutation-only: a found odd cycle refutes; absence in sampled induced "
                       "subgraphs does not prove the full graph has none";
    std::mt19937_64 rng(cfg.seed);
    exceeds = true;
    const std::size_t k = std::min(cfg.sample_size, n);
    for (std::size_t si = 0; si < cfg.samples && exceeds; ++si) {
        std::vector<uint32_t> verts = sample_vertices(n, k, rng);
        ExplicitGraph sub(k);
        for (std::size_t a = 0; a < k; ++a)
            for (std::size_t b = a + 1; b < k; ++b)
                if (g.adjacent(verts[a], verts[b])) sub.add_edge(a, b);
        OddCycleWitness w;
        if (!odd_girth_exceeds(sub, ell, &w)) {
            exceeds = false;
            OddCycleWitness parent;
            for (uint32_t v : w.vertices) parent.vertices.push_back(verts[v]);
            out["witness"] = cycle_witness_json(g, parent);
            out["witness_sample"] = si;
        }
    }
    out["exceeds"] = exceeds;
    return out;
}

ordered_json graph_section(const GKGraph& g) {
    const GKParams& p = g.params();
    ordered_json out;
    out["d"] = p.d;
    out["s"] = p.s;
    out["m"] = p.m;
    out["n"] = std::to_string(g.num_vertices());
    out["degree"] = std::to_string(g.degree());
    out["edges"] = g.num_edges().get_str();
    out["vertex_encoding"] = "s-subsets of {0..d-1} as bitmasks, colex (= ascending mask) order";
    return out;
}

ordered_json representation_section(const ModPRepresentation& rep, const std::string& digest) {
    ordered_json out;
    out["d"] = rep.params.d;
    out["s"] = rep.params.s;
    out["m"] = rep.params.m;
    out["p"] = rep.p;
    out["n"] = std::to_string(rep.matrix.rows());
    out["R"] = rep.R.get_str();
    out["rank"] = rep.rank;
    out["symmetric"] = rep.symmetric;
    out["represents"] = rep.represents.ok;
    if (!rep.represents.ok) {
        const RepWitness& w = rep.represents.witness;
        out["witness"] = {{"kind", w.kind == RepWitness::Kind::ZeroDiagonal ? "zero-diagonal"
                                                                            : "nonadjacent-nonzero"},
                          {"i", w.i},
                          {"j", w.j}};
    }
    out["matrix_digest"] = digest;
    return out;
}

ordered_json run_section(const RunConfig& rc) {
    ordered_json out;
    out["command"] = rc.command;
    out["threads"] = rc.threads;
    out["force"] = rc.force;
    return out;
}

ordered_json cert_head(const char* claim) {
    ordered_json doc;
    doc["schema_version"] = 1;
    doc["claim"] = claim;
    doc["toolkit_version"] = GK_VERSION;
    doc["generated_at"] = iso8601_utc_now();
    return doc;
}

std::string first_diff(const nlohmann::json& a, const nlohmann::json& b, const std::string& path) {
    if (a.type() != b.type()) return path.empty() ? "/" : path;
    if (a.is_object()) {
        for (const auto& [key, val] : a.items()) {
            std::string sub = path + "/" + key;
            if (!b.contains(key)) return sub;
            std::string r = first_diff(val, b.at(key), sub);
            if (!r.empty()) return r;
        }
        for (const auto& [key, val] : b.items())
            if (!a.contains(key)) return path + "/" + key;
        return "";
    }
    if (a.is_array()) {
        if (a.size() != b.size()) return path.empty() ? "/" : path;
        for (std::size_t i = 0; i < a.size(); ++i) {
            std::string r = first_diff(a[i], b[i], path + "/" + std::to_string(i));
            if (!r.empty()) return r;
        }
        return "";
    }
    return a == b ? "" : (path.empty() ? "/" : path);
}

} // namespace

std::string iso8601_utc_now() {
    std::time_t now = std::time(nullptr);
    std::tm tm{};
    gmtime_r(&now, &tm);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

Certificate cycle_free_certificate(uint64_t ell, uint64_t d, uint64_t p,
                                   const GirthCheckConfig& girth, const BuildLimits& lim,
                                   const RunConfig& rc) {
    if (ell < 3 || ell % 2 == 0)
        throw BadParameter("cycles certificate: ell must be odd and >= 3");
    if (d == 0 || d % (2 * ell) != 0)
        throw BadParameter("cycles certificate: d must be divisible by 2*ell");
    GKParams params{unsigned(d), unsigned(d / 2), unsigned(d / (2 * ell))};
    validate(params);

    GKGraph g(params, vertex_cap(lim));
    ModPRepresentation rep = representing_matrix_mod_p(params, p, lim);
    const BigInt n(static_cast<unsigned long>(g.num_vertices()));

    ordered_json doc = cert_head("cycles");
    doc["parameters"] = {{"ell", ell}, {"d", d}, {"s", params.s}, {"m", params.m}, {"p", p}};
    doc["graph"] = graph_section(g);
    bool girth_ok = false;
    doc["odd_girth"] = girth_section(g, unsigned(ell), girth, girth_ok);
    doc["representation"] = representation_section(rep, matrix_sha256(rep.matrix));
    doc["comparisons"] = {{"rank_le_R", rep.rank_le_R},
                          {"R_lt_n", rep.R < n},
                          {"rank_lt_n", BigInt(static_cast<unsigned long>(rep.rank)) < n}};
    doc["degenerate"] = (params.m == 1); // s = d/2: adjacency degenerates to complementation
    doc["bound_nontrivial"] = rep.R < n;
    doc["verdict"] = girth_ok && rep.symmetric && rep.represents.ok && rep.rank_le_R;
    doc["run_config"] = run_section(rc);
    return Certificate{std::move(doc)};
}

Certificate triangle_free_od_certificate(uint64_t d, const GirthCheckConfig& girth,
                                         const BuildLimits& lim, const RunConfig& rc) {
    if (d == 0 || d % 6 != 0)
        throw BadParameter("triangle-free certificate: d must be divisible by 6");
    GKParams params{unsigned(d), unsigned(d / 2), unsigned(d / 6)};
    validate(params);

    GKGraph g(params, vertex_cap(lim));
    ModPRepresentation rep = representing_matrix_mod_p(params, 2, lim);
    const std::size_t nv = g.num_vertices();
    const BigInt n(static_cast<unsigned long>(nv));

    // congruence working state plus factor
    guard_allocation(nv, (3 * nv * nv) / 8 + 64, lim);
    Gf2Factorization fact = lempel_factorize(rep.matrix.bits());
    VectorAssignmentGf2 assignment{fact.r, fact.b}; // copy; fact keeps the original

    OrthRepWitness ow;
    const bool orth_ok = verify_orthogonal_representation(assignment, GKComplementView{&g}, &ow);
    NearlyOrthWitness nw;
    const bool nearly_ok = nearly_orthogonal_check(assignment.vectors, &nw);
    const bool cols_eq_rank = fact.r == rep.rank;

    ordered_json doc = cert_head("triangle-free-od");
    doc["parameters"] = {{"ell", 3}, {"d", d}, {"s", params.s}, {"m", params.m}, {"p", 2}};
    doc["graph"] = graph_section(g);
    bool girth_ok = false;
    doc["odd_girth"] = girth_section(g, 3, girth, girth_ok);
    doc["representation"] = representation_section(rep, matrix_sha256(rep.matrix));

    ordered_json fsec;
    fsec["columns"] = fact.r;
    fsec["columns_equal_rank"] = cols_eq_rank;
    fsec["product_verified"] = true; // lempel_factorize throws otherwise
    fsec["b_digest"] = matrix_sha256(PrimeFieldMatrix(fact.b));
    doc["factorization"] = std::move(fsec);

    ordered_json osec;
    osec["graph"] = "complement";
    osec["dimension"] = fact.r;
    osec["pairs_checked"] = BigInt(n * (n - 1) / 2).get_str();
    osec["verified"] = orth_ok;
    if (!orth_ok)
        osec["witness"] = {{"kind", ow.kind == OrthRepWitness::Kind::SelfOrthogonal
                                        ? "self-orthogonal"
                                        : "adjacent-non-orthogonal"},
                           {"i", ow.i},
                           {"j", ow.j}};
    doc["orthogonal_representation"] = std::move(osec);

    ordered_json nsec;
    nsec["size"] = std::to_string(nv);
    nsec["dimension"] = fact.r;
    nsec["size_exceeds_dimension"] = nv > fact.r;
    nsec["verified"] = nearly_ok;
    if (!nearly_ok) {
        if (nw.kind == NearlyOrthWitness::Kind::SelfOrthogonal)
            nsec["witness"] = {{"kind", "self-orthogonal"}, {"i", nw.i}};
        else
            nsec["witness"] = {{"kind", "non-orthogonal-triple"}, {"triple", nw.triple}};
    }
    doc["nearly_orthogonal"] = std::move(nsec);

    doc["comparisons"] = {{"rank_le_R", rep.rank_le_R},
                          {"R_lt_n", rep.R < n},
                          {"r_lt_n", BigInt(static_cast<unsigned long>(fact.r)) < n}};
    doc["degenerate"] = (params.m == 1);
    doc["bound_nontrivial"] = rep.R < n;
    doc["verdict"] = girth_ok && rep.symmetric && rep.represents.ok && rep.rank_le_R &&
                     cols_eq_rank && orth_ok && nearly_ok;
    doc["run_config"] = run_section(rc);
    return Certificate{std::move(doc)};
}

Certificate vchrom3_certificate(uint64_t d, uint64_t p, const BuildLimits& lim,
                                const RunConfig& rc) {
    if (d == 0 || d % 8 != 0)
        throw BadParameter("vchrom certificate: d must be divisible by 8");
    GKParams params{unsigned(d), unsigned(d / 2), unsigned(d / 8)};
    validate(params);

    GKGraph g(params, vertex_cap(lim));
    const std::size_t nv = g.num_vertices();
    const BigInt n(static_cast<unsigned long>(nv));

    // Sign vectors: +1 on A, -1 elsewhere. vchrom <= 3 needs, for every edge,
    // <w_A, w_B> = d - 2|A xor B| <= -d/2, i.e. 4|A xor B| >= 3d in integers.
    bool sign_ok = true;
    uint64_t min_diff = d + 1;
    BigInt pairs = 0;
    ordered_json sign_witness;
    for (std::size_t v = 0; v < nv && sign_ok; ++v) {
        g.for_neighbors(v, [&](uint32_t u) {
            if (!sign_ok || u <= v) return;
            uint64_t diff =
                uint64_t(std::popcount(g.vertex_mask(v) ^ g.vertex_mask(u)));
            min_diff = std::min(min_diff, diff);
            pairs += 1;
            if (4 * diff < 3 * d) {
                sign_ok = false;
                sign_witness = {{"i", v},
                                {"j", u},
                                {"symmetric_difference", diff},
                                {"masks",
                                 {std::to_string(g.vertex_mask(v)), std::to_string(g.vertex_mask(u))}}};
            }
        });
    }

    Sha256Stream sh;
    sh.update("signvectors " + std::to_string(nv) + " " + std::to_string(d) + "\n");
    for (std::size_t v = 0; v < nv; ++v) {
        std::string line;
        for (uint64_t c = 0; c < d; ++c) {
            if (c) line += ' ';
            line += ((g.vertex_mask(v) >> c) & 1) ? "+1" : "-1";
        }
        line += '\n';
        sh.update(line);
    }

    ModPRepresentation rep = representing_matrix_mod_p(params, p, lim);
    BigInt complement_lower = ceil_div(n, BigInt(static_cast<unsigned long>(rep.rank)));

    ordered_json doc = cert_head("vchrom3");
    doc["parameters"] = {{"d", d}, {"s", params.s}, {"m", params.m}, {"p", p}, {"kappa", 3}};
    doc["graph"] = graph_section(g);

    ordered_json ssec;
    ssec["count"] = std::to_string(nv);
    ssec["dim"] = d;
    ssec["adjacent_pairs_checked"] = pairs.get_str();
    ssec["min_symmetric_difference"] = std::to_string(min_diff);
    ssec["worst_inner_product"] =
        rational_to_string(make_rational(BigInt(static_cast<long>(d) - 2 * long(min_diff)),
                                         BigInt(static_cast<unsigned long>(d))));
    ssec["threshold"] = "-1/2"; // -1/(kappa-1) at kappa = 3
    ssec["verified"] = sign_ok;
    if (!sign_ok) ssec["witness"] = std::move(sign_witness);
    ssec["digest"] = sh.hex();
    doc["sign_vectors"] = std::move(ssec);

    doc["representation"] = representation_section(rep, matrix_sha256(rep.matrix));
    doc["complement_minrank"] = {{"n", n.get_str()},
                                 {"rank", rep.rank},
                                 {"lower_bound", complement_lower.get_str()}};
    doc["comparisons"] = {{"rank_le_R", rep.rank_le_R}, {"R_lt_n", rep.R < n}};
    doc["bound_nontrivial"] = rep.R < n;
    doc["verdict"] = sign_ok && rep.symmetric && rep.represents.ok && rep.rank_le_R;
    doc["run_config"] = run_section(rc);
    return Certificate{std::move(doc)};
}

VerifyResult verify_certificate(const nlohmann::ordered_json& stored, const BuildLimits& lim) {
    VerifyResult res;
    try {
        const std::string claim = stored.at("claim").get<std::string>();
        res.stored_verdict = stored.at("verdict").get<bool>();
        const auto& prm = stored.at("parameters");

        GirthCheckConfig girth;
        if (stored.contains("odd_girth")) {
            const auto& gs = stored.at("odd_girth");
            const std::string mode = gs.at("mode").get<std::string>();
            if (mode == "exhaustive") {
                girth.exhaustive_threshold = SIZE_MAX; // reproduce the stored mode
            } else if (mode == "sampled") {
                girth.exhaustive_threshold = 0;
                girth.samples = gs.at("samples").get<std::size_t>();
                girth.sample_size = gs.at("sample_size").get<std::size_t>();
                girth.seed = std::stoull(gs.at("seed").get<std::string>());
            } else {
                throw ParseError("verify: unknown girth mode " + mode);
            }
        }

        if (claim == "cycles") {
            res.regenerated = cycle_free_certificate(prm.at("ell").get<uint64_t>(),
                                                     prm.at("d").get<uint64_t>(),
                                                     prm.at("p").get<uint64_t>(), girth, lim);
        } else if (claim == "triangle-free-od") {
            res.regenerated = triangle_free_od_certificate(prm.at("d").get<uint64_t>(), girth, lim);
        } else if (claim == "vchrom3") {
            res.regenerated = vchrom3_certificate(prm.at("d").get<uint64_t>(),
                                                  prm.at("p").get<uint64_t>(), lim);
        } else {
            throw ParseError("verify: unknown claim id " + claim);
        }
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("certificate json: ") + e.what());
    }

    nlohmann::ordered_json a = stored, b = res.regenerated.doc;
    a.erase("generated_at");
    b.erase("generated_at");
    a.erase("run_config");
    b.erase("run_config");
    res.matches = a.dump() == b.dump();
    if (!res.matches) res.mismatch = first_diff(a, b, "");
    return res;
}

} // namespace gk
