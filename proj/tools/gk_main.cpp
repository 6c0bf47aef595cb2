#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "gk/arith.hpp"
#include "gk/certificates.hpp"
#include "gk/digest.hpp"
#include "gk/errors.hpp"
#include "gk/exact_matrix.hpp"
#include "gk/factorize.hpp"
#include "gk/formulas.hpp"
#include "gk/kneser.hpp"
#include "gk/matrix_io.hpp"
#include "gk/oracles.hpp"
#include "gk/parallel.hpp"
#include "gk/polyrep.hpp"
#include "gk/subspaces.hpp"
#include "gk/version.hpp"

namespace fs = std::filesystem;
using nlohmann::ordered_json;

namespace {

struct Global {
    std::string out = ".";
    unsigned threads = 1;
    bool force = false;
    gk::RunConfig rc; // command line recorded in every artifact
};

gk::BuildLimits limits(const Global& g) {
    gk::BuildLimits lim;
    lim.force = g.force;
    return lim;
}

std::size_t vertex_cap(const Global& g) { return g.force ? SIZE_MAX : gk::BuildLimits{}.max_vertices; }

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw gk::ParseError("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
    fs::path p(path);
    if (p.has_parent_path()) fs::create_directories(p.parent_path());
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    out << text;
    if (!out.flush()) throw gk::Error("write failed: " + path);
}

ordered_json parse_json(const std::string& text, const std::string& what) {
    try {
        return ordered_json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw gk::ParseError(what + ": " + e.what());
    }
}

// Print every witness object in the document with its path; used on exit 1.
void print_witnesses(const ordered_json& j, const std::string& path) {
    if (!j.is_object()) return;
    for (const auto& [key, val] : j.items()) {
        if (key == "witness") std::cerr << "witness at " << path << ": " << val.dump() << "\n";
        if (val.is_object()) print_witnesses(val, path + "/" + key);
    }
}

int emit_certificate(const gk::Certificate& cert, const Global& g, const std::string& name) {
    const std::string path = (fs::path(g.out) / name).string();
    write_file(path, cert.text());
    std::cout << "wrote " << path << "\n";
    std::cout << "verdict: " << (cert.verdict() ? "true" : "false") << "\n";
    if (cert.verdict()) return 0;
    print_witnesses(cert.doc, "");
    return 1;
}

// Accepts the `gk build` export ({d,s,m} or its --edges variant) as well as
// a plain {n, edges} listing.
gk::ExplicitGraph load_graph(const std::string& text, const std::string& path, const Global& g) {
    ordered_json j = parse_json(text, path);
    try {
        if (j.contains("d") && j.contains("s") && j.contains("m")) {
            gk::GKParams p{j.at("d").get<unsigned>(), j.at("s").get<unsigned>(),
                           j.at("m").get<unsigned>()};
            gk::validate(p);
            gk::GKGraph kg(p, vertex_cap(g));
            return gk::ExplicitGraph::from_gk(kg);
        }
        if (j.contains("edge_list")) {
            gk::ExplicitGraph eg(j.at("n").get<std::size_t>());
            for (const auto& e : j.at("edge_list"))
                eg.add_edge(e.at(0).get<std::size_t>(), e.at(1).get<std::size_t>());
            return eg;
        }
    } catch (const nlohmann::json::exception& e) {
        throw gk::ParseError(path + ": " + e.what());
    }
    return gk::explicit_graph_from_json(text);
}

gk::PrimeFieldMatrix rational_mod_p(const gk::RationalMatrix& m, uint64_t p) {
    gk::PrimeFieldMatrix out(m.rows(), m.cols(), p);
    const gk::BigInt pz(static_cast<unsigned long>(p));
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) {
            const gk::Rational& q = m.get(i, j);
            gk::BigInt den(q.get_den()), inv;
            if (mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), pz.get_mpz_t()) == 0)
                throw gk::BadParameter("rank: denominator not invertible mod " + std::to_string(p));
            gk::BigInt v = gk::BigInt(q.get_num()) * inv;
            mpz_fdiv_r(v.get_mpz_t(), v.get_mpz_t(), pz.get_mpz_t());
            out.set(i, j, v.get_ui());
        }
    }
    return out;
}

gk::PrimeFieldMatrix prime_rebase(const gk::PrimeFieldMatrix& m, uint64_t p) {
    if (m.modulus() == p) return m;
    gk::PrimeFieldMatrix out(m.rows(), m.cols(), p);
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) out.set(i, j, m.get(i, j) % p);
    return out;
}

int run_rank(const std::string& file, uint64_t field) {
    gk::AnyMatrix m = gk::read_matrix_file(file);
    std::size_t r = 0;
    if (field != 0) {
        if (const auto* pm = std::get_if<gk::PrimeFieldMatrix>(&m))
            r = prime_rebase(*pm, field).rank();
        else if (const auto* im = std::get_if<gk::IntMatrix>(&m))
            r = gk::reduce_mod_p(*im, field).rank();
        else
            r = rational_mod_p(std::get<gk::RationalMatrix>(m), field).rank();
    } else {
        if (const auto* pm = std::get_if<gk::PrimeFieldMatrix>(&m))
            r = pm->rank();
        else if (const auto* im = std::get_if<gk::IntMatrix>(&m))
            r = gk::rank_rational(*im);
        else
            r = gk::rank_rational(std::get<gk::RationalMatrix>(m));
    }
    std::cout << "rank " << r << "\n";
    return 0;
}

gk::CrossoverRule parse_rule(const std::string& text) {
    gk::CrossoverRule rule;
    if (text == "d8") {
        rule.kind = gk::CrossoverRule::Kind::DOver8;
        return rule;
    }
    if (text.rfind("ell:", 0) == 0) {
        rule.kind = gk::CrossoverRule::Kind::Ell;
        try {
            rule.ell = std::stoull(text.substr(4));
        } catch (const std::exception&) {
            throw gk::BadParameter("crossover: bad rule " + text);
        }
        if (rule.ell == 0) throw gk::BadParameter("crossover: ell must be positive");
        return rule;
    }
    throw gk::BadParameter("crossover: rule must be ell:<N> or d8");
}

int run_crossover(const std::string& rule_text, uint64_t max_d) {
    gk::CrossoverResult res = gk::crossover_search(parse_rule(rule_text), max_d);
    ordered_json out;
    out["rule"] = rule_text;
    out["max_d"] = max_d;
    out["found"] = res.found;
    if (res.found) out["minimal_d"] = res.minimal_d;
    auto reports = ordered_json::array();
    for (const auto& r : res.reports) {
        reports.push_back({{"d", r.d},
                           {"m", r.m},
                           {"n", r.n.get_str()},
                           {"R", r.R.get_str()},
                           {"R_lt_n", r.r_lt_n},
                           {"entropy_estimate", r.entropy_estimate},
                           {"delta", r.delta}});
    }
    out["reports"] = std::move(reports);
    std::cout << out.dump(2) << "\n";
    return 0;
}

void append_ledger(const std::string& path, const ordered_json& record) {
    ordered_json ledger = ordered_json::array();
    if (fs::exists(path)) {
        ledger = parse_json(read_file(path), path);
        if (!ledger.is_array()) throw gk::ParseError(path + ": results ledger must be an array");
    }
    ledger.push_back(record);
    write_file(path, ledger.dump(2) + "\n");
}

int run_oracle(const std::string& which, const std::string& graph_file, uint64_t p, unsigned k,
               const gk::OracleBudget& budget, const Global& g) {
    const std::string bytes = read_file(graph_file);
    gk::ExplicitGraph eg = load_graph(bytes, graph_file, g);

    ordered_json record;
    record["generated_at"] = gk::iso8601_utc_now();
    record["oracle"] = which;
    record["graph"] = graph_file;
    record["graph_digest"] = gk::sha256_hex(bytes);
    record["n"] = eg.num_vertices();
    if (which == "minrank") record["p"] = p;
    if (which == "chi-k") record["k"] = k;
    record["budget"] = {{"max_vertices", budget.max_vertices},
                        {"max_dimension", budget.max_dimension},
                        {"max_nodes", budget.max_nodes},
                        {"max_seconds", budget.max_seconds}};

    gk::OracleStats stats;
    int code = 0;
    try {
        unsigned value = 0;
        if (which == "minrank")
            value = gk::minrank_exact(eg, p, budget, &stats);
        else if (which == "od2")
            value = gk::od_exact_gf2(eg, budget, &stats);
        else
            value = gk::multichromatic_exact(eg, k, budget, &stats);
        record["outcome"] = "ok";
        record["value"] = value;
    } catch (const gk::BudgetExceeded& e) {
        record["outcome"] = "budget-exceeded";
        record["detail"] = e.what();
        code = 2;
    }
    record["stats"] = {{"nodes", stats.nodes}, {"seconds", stats.seconds}};

    append_ledger((fs::path(g.out) / "oracle-results.json").string(), record);
    std::cout << record.dump(2) << "\n";
    return code;
}

int run_subspace(const std::string& which, const std::string& input) {
    ordered_json j = parse_json(read_file(input), input);
    gk::Subspace u;
    std::vector<gk::Subspace> ws;
    std::size_t ell_prime = 0;
    try {
        u = gk::subspace_from_json(j.at("u").dump());
        for (const auto& w : j.at("w")) ws.push_back(gk::subspace_from_json(w.dump()));
        ell_prime = j.at("ell_prime").get<std::size_t>();
    } catch (const nlohmann::json::exception& e) {
        throw gk::ParseError(input + ": " + e.what());
    }
    gk::Subspace res = which == "avoid" ? gk::avoiding_subspace(u, ws, ell_prime)
                                        : gk::graded_subspace(u, ws, ell_prime);
    std::cout << gk::subspace_to_json(res);
    return 0;
}

int run_verify(const std::string& file, const Global& g) {
    ordered_json stored = parse_json(read_file(file), file);
    gk::VerifyResult res = gk::verify_certificate(stored, limits(g));
    std::cout << "claim: " << stored.value("claim", std::string("?")) << "\n";
    std::cout << "stored verdict: " << (res.stored_verdict ? "true" : "false") << "\n";
    std::cout << "regenerated verdict: " << (res.regenerated.verdict() ? "true" : "false") << "\n";
    std::cout << "match: " << (res.matches ? "yes" : "no") << "\n";
    if (!res.matches) {
        std::cerr << "first difference at " << res.mismatch << "\n";
        return 1;
    }
    if (!res.regenerated.verdict()) {
        print_witnesses(res.regenerated.doc, "");
        return 1;
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    Global g;
    {
        std::string cmd;
        for (int i = 0; i < argc; ++i) {
            if (i) cmd += ' ';
            cmd += argv[i];
        }
        g.rc.command = cmd;
    }

    CLI::App app{"certificate toolkit for generalized Kneser graph bounds"};
    app.set_version_flag("--version", GK_VERSION);
    app.require_subcommand(1);
    app.add_option("--out", g.out, "output directory for artifacts")->capture_default_str();
    app.add_option("--threads", g.threads, "worker thread count")
        ->envname("GK_THREADS")
        ->capture_default_str();
    app.add_flag("--force", g.force, "override the memory guard and vertex caps");

    // build
    uint64_t b_d = 0, b_s = 0, b_m = 0;
    bool b_edges = false;
    auto* build = app.add_subcommand("build", "export a generalized Kneser graph as JSON");
    build->add_option("--d", b_d, "ground set size")->required();
    build->add_option("--s", b_s, "subset size")->required();
    build->add_option("--m", b_m, "adjacency threshold: |A and B| < m")->required();
    build->add_flag("--edges", b_edges, "include the explicit edge list");

    // rank
    std::string r_file;
    uint64_t r_field = 0;
    auto* rank = app.add_subcommand("rank", "exact rank of a matrix file");
    rank->add_option("--field", r_field, "prime; reduce mod p first (rationals: entrywise a/b mod p)");
    rank->add_option("file", r_file, "matrix in plain-text format")->required();

    // cert
    auto* cert = app.add_subcommand("cert", "build a claim certificate");
    cert->require_subcommand(1);
    uint64_t c_ell = 3, c_d = 0, c_p = 2;
    gk::GirthCheckConfig girth;
    auto add_girth_flags = [&](CLI::App* c) {
        c->add_option("--girth-threshold", girth.exhaustive_threshold,
                      "largest n checked exhaustively; larger graphs are sampled")
            ->capture_default_str();
        c->add_option("--girth-samples", girth.samples, "sampled mode: number of induced subgraphs")
            ->capture_default_str();
        c->add_option("--girth-sample-size", girth.sample_size, "sampled mode: vertices per subgraph")
            ->capture_default_str();
        c->add_option("--girth-seed", girth.seed, "sampled mode: RNG seed")->capture_default_str();
    };

    auto* cyc = cert->add_subcommand("cycles", "odd-girth > ell pipeline at s = d/2, m = d/(2 ell)");
    cyc->add_option("--ell", c_ell, "odd cycle length bound")->capture_default_str();
    cyc->add_option("--d", c_d, "ground set size, divisible by 2 ell")->required();
    cyc->add_option("--p", c_p, "prime for the representing matrix")->capture_default_str();
    add_girth_flags(cyc);

    auto* tfree = cert->add_subcommand("triangle-free",
                                       "triangle-free orthogonality-dimension pipeline (ell = 3, p = 2)");
    tfree->add_option("--d", c_d, "ground set size, divisible by 6")->required();
    add_girth_flags(tfree);

    auto* vch = cert->add_subcommand("vchrom", "vector chromatic number <= 3 pipeline at m = d/8");
    vch->add_option("--d", c_d, "ground set size, divisible by 8")->required();
    vch->add_option("--p", c_p, "prime for the representing matrix")->capture_default_str();

    // crossover
    std::string x_rule = "ell:3";
    uint64_t x_maxd = 0;
    auto* cross = app.add_subcommand("crossover", "scan admissible d for the first R < n");
    cross->add_option("--rule", x_rule, "ell:<N> (m = d/(2N)) or d8 (m = d/8)")->capture_default_str();
    cross->add_option("--max-d", x_maxd, "largest d scanned")->required();

    // formulas
    auto* formulas = app.add_subcommand("formulas", "closed-form bound evaluators");
    formulas->require_subcommand(1);
    uint64_t f_k = 0, f_s = 0, f_d = 0;
    std::string f_c = "0";

    auto* fstahl = formulas->add_subcommand("stahl", "ceil(k/s)(d-2s) + 2k");
    fstahl->add_option("--k", f_k)->required();
    fstahl->add_option("--s", f_s)->required();
    fstahl->add_option("--d", f_d)->required();

    auto* fs2 = formulas->add_subcommand("s2", "ceil(k/2)(d-4) + 2k");
    fs2->add_option("--k", f_k)->required();
    fs2->add_option("--d", f_d)->required();

    auto* fgen = formulas->add_subcommand("general", "(k - ceil((k+1)/s) + 1)/(s-1) * d - c");
    fgen->add_option("--k", f_k)->required();
    fgen->add_option("--s", f_s)->required();
    fgen->add_option("--d", f_d)->required();
    fgen->add_option("--c", f_c, "additive constant, integer or a/b")->capture_default_str();

    auto* fbc = formulas->add_subcommand("bukhcox", "k d / s");
    fbc->add_option("--k", f_k)->required();
    fbc->add_option("--s", f_s)->required();
    fbc->add_option("--d", f_d)->required();

    // verify-cert
    std::string v_file;
    auto* verify = app.add_subcommand("verify-cert", "re-verify a stored certificate offline");
    verify->add_option("file", v_file, "certificate JSON")->required();

    // oracle
    auto* oracle = app.add_subcommand("oracle", "small-instance exact searches");
    oracle->require_subcommand(1);
    std::string o_graph;
    uint64_t o_p = 2;
    unsigned o_k = 1;
    gk::OracleBudget budget;
    auto add_oracle_flags = [&](CLI::App* c) {
        c->add_option("--graph", o_graph, "graph JSON: {n, edge_list} or {d, s, m}")->required();
        c->add_option("--budget", budget.max_nodes, "search node cap")->capture_default_str();
        c->add_option("--budget-seconds", budget.max_seconds, "wall clock cap")->capture_default_str();
    };

    auto* omr = oracle->add_subcommand("minrank", "exact minrank over F_p by full enumeration");
    add_oracle_flags(omr);
    omr->add_option("--p", o_p, "prime field")->capture_default_str();

    auto* ood = oracle->add_subcommand("od2", "exact orthogonality dimension over GF(2)");
    add_oracle_flags(ood);

    auto* ochi = oracle->add_subcommand("chi-k", "exact k-th multichromatic number");
    add_oracle_flags(ochi);
    ochi->add_option("--k", o_k, "colors per vertex")->capture_default_str();

    // subspace
    auto* sub = app.add_subcommand("subspace", "exact rational subspace lemmas");
    sub->require_subcommand(1);
    std::string s_input;
    auto* savoid = sub->add_subcommand("avoid", "subspace of U meeting every W trivially");
    savoid->add_option("--input", s_input, "JSON {u, w: [...], ell_prime}")->required();
    auto* sgrade = sub->add_subcommand("grade", "subspace of U meeting every W in forced dimension");
    sgrade->add_option("--input", s_input, "JSON {u, w: [...], ell_prime}")->required();

    // let --out/--threads/--force appear after any subcommand
    auto enable_fallthrough = [](auto&& self, CLI::App* a) -> void {
        for (CLI::App* s : a->get_subcommands([](const CLI::App*) { return true; })) {
            s->fallthrough();
            self(self, s);
        }
    };
    enable_fallthrough(enable_fallthrough, &app);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
        std::cout << app.help();
        return 0;
    } catch (const CLI::CallForAllHelp&) {
        std::cout << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::CallForVersion&) {
        std::cout << GK_VERSION << "\n";
        return 0;
    } catch (const CLI::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n(run with --help for usage)\n";
        return 2;
    }

    gk::set_threads(g.threads);
    g.rc.threads = g.threads;
    g.rc.force = g.force;

    try {
        if (*build) {
            gk::GKParams p{unsigned(b_d), unsigned(b_s), unsigned(b_m)};
            gk::validate(p);
            gk::GKGraph kg(p, vertex_cap(g));
            std::string name = "graph-d" + std::to_string(b_d) + "-s" + std::to_string(b_s) + "-m" +
                               std::to_string(b_m) + ".json";
            const std::string path = (fs::path(g.out) / name).string();
            write_file(path, gk::gk_graph_json(kg, b_edges));
            std::cout << "wrote " << path << " (n = " << kg.num_vertices() << ")\n";
            return 0;
        }
        if (*rank) return run_rank(r_file, r_field);
        if (*cyc)
            return emit_certificate(
                gk::cycle_free_certificate(c_ell, c_d, c_p, girth, limits(g), g.rc), g,
                "cert-cycles-ell" + std::to_string(c_ell) + "-d" + std::to_string(c_d) + "-p" +
                    std::to_string(c_p) + ".json");
        if (*tfree)
            return emit_certificate(gk::triangle_free_od_certificate(c_d, girth, limits(g), g.rc), g,
                                    "cert-triangle-free-od-d" + std::to_string(c_d) + ".json");
        if (*vch)
            return emit_certificate(gk::vchrom3_certificate(c_d, c_p, limits(g), g.rc), g,
                                    "cert-vchrom3-d" + std::to_string(c_d) + "-p" +
                                        std::to_string(c_p) + ".json");
        if (*cross) return run_crossover(x_rule, x_maxd);
        if (*fstahl) {
            std::cout << gk::stahl_rhs(f_k, f_s, f_d).get_str() << "\n";
            return 0;
        }
        if (*fs2) {
            std::cout << gk::thm_s2_value(f_k, f_d).get_str() << "\n";
            return 0;
        }
        if (*fgen) {
            gk::Rational c = gk::rational_from_string(f_c);
            std::cout << gk::rational_to_string(gk::thm_general_lower(f_k, f_s, f_d, c)) << "\n";
            return 0;
        }
        if (*fbc) {
            std::cout << gk::rational_to_string(gk::bukh_cox_lower(f_k, f_s, f_d)) << "\n";
            return 0;
        }
        if (*verify) return run_verify(v_file, g);
        if (*omr) return run_oracle("minrank", o_graph, o_p, o_k, budget, g);
        if (*ood) return run_oracle("od2", o_graph, o_p, o_k, budget, g);
        if (*ochi) return run_oracle("chi-k", o_graph, o_p, o_k, budget, g);
        if (*savoid) return run_subspace("avoid", s_input);
        if (*sgrade) return run_subspace("grade", s_input);
    } catch (const gk::BudgetExceeded& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const gk::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    std::cerr << "error: no command\n";
    return 2;
}
