#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <json.hpp>

#include "gk/certificates.hpp"
#include "gk/errors.hpp"
#include "gk/factorize.hpp"
#include "gk/formulas.hpp"
#include "gk/kneser.hpp"
#include "gk/oracles.hpp"
#include "gk/polyrep.hpp"
#include "gk/subspaces.hpp"
#include "gk/version.hpp"

namespace py = pybind11;

namespace {

py::object to_pyint(const gk::BigInt& v) {
    return py::reinterpret_steal<py::object>(PyLong_FromString(v.get_str().c_str(), nullptr, 10));
}

gk::ExplicitGraph make_graph(std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>>& edges) {
    gk::ExplicitGraph g(n);
    for (const auto& [u, v] : edges) g.add_edge(u, v);
    return g;
}

gk::Subspace subspace_arg(const std::string& json_text) { return gk::subspace_from_json(json_text); }

std::vector<gk::Subspace> subspaces_arg(const std::vector<std::string>& texts) {
    std::vector<gk::Subspace> out;
    out.reserve(texts.size());
    for (const auto& t : texts) out.push_back(gk::subspace_from_json(t));
    return out;
}

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "exact certificate toolkit for generalized Kneser graph bounds";
    m.attr("__version__") = GK_VERSION;

    py::register_exception<gk::BudgetExceeded>(m, "BudgetExceeded");

    m.def("graph_json", [](unsigned d, unsigned s, unsigned mm, bool with_edges) {
        gk::GKParams p{d, s, mm};
        gk::validate(p);
        gk::GKGraph g(p);
        return gk::gk_graph_json(g, with_edges);
    },
          py::arg("d"), py::arg("s"), py::arg("m"), py::arg("with_edges") = false,
          "generalized Kneser graph K(d,s,m) as a JSON string");

    m.def("odd_girth_exceeds", [](unsigned d, unsigned s, unsigned mm, unsigned ell) {
        gk::GKParams p{d, s, mm};
        gk::validate(p);
        gk::GKGraph g(p);
        return gk::odd_girth_exceeds(g, ell, nullptr);
    },
          py::arg("d"), py::arg("s"), py::arg("m"), py::arg("ell"),
          "true iff K(d,s,m) has no odd cycle of length <= ell (exhaustive)");

    m.def("representation", [](unsigned d, unsigned s, unsigned mm, uint64_t p) {
        gk::ModPRepresentation rep = gk::representing_matrix_mod_p({d, s, mm}, p);
        py::dict out;
        out["n"] = rep.matrix.rows();
        out["R"] = to_pyint(rep.R);
        out["rank"] = rep.rank;
        out["rank_le_R"] = rep.rank_le_R;
        out["symmetric"] = rep.symmetric;
        out["represents"] = rep.represents.ok;
        return out;
    },
          py::arg("d"), py::arg("s"), py::arg("m"), py::arg("p"),
          "representing matrix of K(d,s,m) mod p: rank, bound R, and checks");

    m.def("lempel_factorize", [](const std::vector<std::vector<int>>& rows) {
        const std::size_t n = rows.size();
        gk::Gf2Matrix mtx(n, n);
        for (std::size_t i = 0; i < n; ++i) {
            if (rows[i].size() != n) throw gk::BadParameter("lempel_factorize: square 0/1 matrix required");
            for (std::size_t j = 0; j < n; ++j) mtx.set(i, j, rows[i][j] & 1);
        }
        gk::Gf2Factorization f = gk::lempel_factorize(mtx);
        std::vector<std::vector<int>> b(n, std::vector<int>(f.r, 0));
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < f.r; ++j) b[i][j] = f.b.get(i, j) ? 1 : 0;
        py::dict out;
        out["r"] = f.r;
        out["b"] = b;
        return out;
    },
          py::arg("matrix"), "symmetric GF(2) congruence factorization M = B B^T with rank(M) columns");

    m.def("cycle_cert", [](uint64_t ell, uint64_t d, uint64_t p) {
        return gk::cycle_free_certificate(ell, d, p).text();
    },
          py::arg("ell"), py::arg("d"), py::arg("p") = 2);

    m.def("triangle_free_cert", [](uint64_t d) { return gk::triangle_free_od_certificate(d).text(); },
          py::arg("d"));

    m.def("vchrom_cert", [](uint64_t d, uint64_t p) { return gk::vchrom3_certificate(d, p).text(); },
          py::arg("d"), py::arg("p") = 2);

    m.def("verify_cert", [](const std::string& text) {
        nlohmann::ordered_json stored;
        try {
            stored = nlohmann::ordered_json::parse(text);
        } catch (const nlohmann::json::exception& e) {
            throw gk::ParseError(std::string("certificate json: ") + e.what());
        }
        gk::VerifyResult res = gk::verify_certificate(stored);
        py::dict out;
        out["matches"] = res.matches;
        out["stored_verdict"] = res.stored_verdict;
        out["regenerated_verdict"] = res.regenerated.verdict();
        out["mismatch"] = res.mismatch;
        return out;
    },
          py::arg("text"), "regenerate a stored certificate and byte-compare (timestamp excluded)");

    m.def("stahl_rhs",
          [](uint64_t k, uint64_t s, uint64_t d) { return to_pyint(gk::stahl_rhs(k, s, d)); },
          py::arg("k"), py::arg("s"), py::arg("d"));
    m.def("thm_s2_value", [](uint64_t k, uint64_t d) { return to_pyint(gk::thm_s2_value(k, d)); },
          py::arg("k"), py::arg("d"));
    m.def("thm_general_lower", [](uint64_t k, uint64_t s, uint64_t d, const std::string& c) {
        return gk::rational_to_string(gk::thm_general_lower(k, s, d, gk::rational_from_string(c)));
    },
          py::arg("k"), py::arg("s"), py::arg("d"), py::arg("c") = "0");
    m.def("bukh_cox_lower", [](uint64_t k, uint64_t s, uint64_t d) {
        return gk::rational_to_string(gk::bukh_cox_lower(k, s, d));
    },
          py::arg("k"), py::arg("s"), py::arg("d"));

    m.def("crossover", [](const std::string& rule_text, uint64_t max_d) {
        gk::CrossoverRule rule;
        if (rule_text == "d8") {
            rule.kind = gk::CrossoverRule::Kind::DOver8;
        } else if (rule_text.rfind("ell:", 0) == 0) {
            rule.kind = gk::CrossoverRule::Kind::Ell;
            rule.ell = std::stoull(rule_text.substr(4));
        } else {
            throw gk::BadParameter("crossover: rule must be ell:<N> or d8");
        }
        gk::CrossoverResult res = gk::crossover_search(rule, max_d);
        py::dict out;
        out["found"] = res.found;
        out["minimal_d"] = res.minimal_d;
        py::list reports;
        for (const auto& r : res.reports) {
            py::dict rep;
            rep["d"] = r.d;
            rep["m"] = r.m;
            rep["n"] = to_pyint(r.n);
            rep["R"] = to_pyint(r.R);
            rep["R_lt_n"] = r.r_lt_n;
            reports.append(rep);
        }
        out["reports"] = reports;
        return out;
    },
          py::arg("rule"), py::arg("max_d"));

    m.def("minrank_exact", [](std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>>& edges,
                              uint64_t p, uint64_t max_nodes) {
        gk::OracleBudget budget;
        budget.max_nodes = max_nodes;
        return gk::minrank_exact(make_graph(n, edges), p, budget);
    },
          py::arg("n"), py::arg("edges"), py::arg("p") = 2,
          py::arg("max_nodes") = gk::OracleBudget{}.max_nodes);

    m.def("od_exact_gf2", [](std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>>& edges,
                             uint64_t max_nodes) {
        gk::OracleBudget budget;
        budget.max_nodes = max_nodes;
        return gk::od_exact_gf2(make_graph(n, edges), budget);
    },
          py::arg("n"), py::arg("edges"), py::arg("max_nodes") = gk::OracleBudget{}.max_nodes);

    m.def("multichromatic_exact",
          [](std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>>& edges, unsigned k,
             uint64_t max_nodes) {
              gk::OracleBudget budget;
              budget.max_nodes = max_nodes;
              return gk::multichromatic_exact(make_graph(n, edges), k, budget);
          },
          py::arg("n"), py::arg("edges"), py::arg("k"),
          py::arg("max_nodes") = gk::OracleBudget{}.max_nodes);

    m.def("uncovered_vector", [](const std::string& u, const std::vector<std::string>& covers) {
        gk::RationalVector v = gk::uncovered_vector(subspace_arg(u), subspaces_arg(covers));
        std::vector<std::string> out;
        out.reserve(v.size());
        for (const auto& q : v) out.push_back(gk::rational_to_string(q));
        return out;
    },
          py::arg("u"), py::arg("covers"),
          "vector of U outside every cover; entries as canonical a/b strings");

    m.def("graded_subspace",
          [](const std::string& u, const std::vector<std::string>& ws, std::size_t ell_prime) {
              return gk::subspace_to_json(gk::graded_subspace(subspace_arg(u), subspaces_arg(ws), ell_prime));
          },
          py::arg("u"), py::arg("w"), py::arg("ell_prime"));

    m.def("avoiding_subspace",
          [](const std::string& u, const std::vector<std::string>& ws, std::size_t ell_prime) {
              return gk::subspace_to_json(gk::avoiding_subspace(subspace_arg(u), subspaces_arg(ws), ell_prime));
          },
          py::arg("u"), py::arg("w"), py::arg("ell_prime"));
}
