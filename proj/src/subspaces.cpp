#include "gk/subspaces.hpp"

#include <json.hpp>

#include "gk/arith.hpp"
#include "gk/errors.hpp"

namespace gk {

namespace {

RationalMatrix stack_rows(const RationalMatrix& a, const RationalMatrix& b) {
    RationalMatrix m(a.rows() + b.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) m.set(i, j, a.get(i, j));
    for (std::size_t i = 0; i < b.rows(); ++i)
        for (std::size_t j = 0; j < b.cols(); ++j) m.set(a.rows() + i, j, b.get(i, j));
    return m;
}

RationalMatrix drop_zero_rows(const RationalMatrix& e, std::size_t rank) {
    RationalMatrix m(rank, e.cols());
    for (std::size_t i = 0; i < rank; ++i)
        for (std::size_t j = 0; j < e.cols(); ++j) m.set(i, j, e.get(i, j));
    return m;
}

} // namespace

Subspace Subspace::from_vectors(std::size_t ambient, const std::vector<RationalVector>& gens) {
    RationalMatrix m(gens.size(), ambient);
    for (std::size_t i = 0; i < gens.size(); ++i) {
        if (gens[i].size() != ambient)
            throw DimensionMismatch("subspace generator has wrong length");
        for (std::size_t j = 0; j < ambient; ++j) m.set(i, j, gens[i][j]);
    }
    std::size_t rank = 0;
    RationalMatrix e = rref(m, &rank);
    Subspace s(ambient);
    s.basis_ = drop_zero_rows(e, rank);
    return s;
}

Subspace Subspace::full(std::size_t ambient) {
    Subspace s(ambient);
    RationalMatrix id(ambient, ambient);
    for (std::size_t i = 0; i < ambient; ++i) id.set(i, i, Rational(1));
    s.basis_ = id;
    return s;
}

bool Subspace::contains(const RationalVector& v) const {
    if (v.size() != ambient_) throw DimensionMismatch("vector length differs from ambient dimension");
    return membership(v, basis_);
}

bool Subspace::contains(const Subspace& other) const {
    if (other.ambient_ != ambient_) throw DimensionMismatch("ambient dimensions differ");
    for (std::size_t i = 0; i < other.dim(); ++i) {
        RationalVector row(ambient_);
        for (std::size_t j = 0; j < ambient_; ++j) row[j] = other.basis_.get(i, j);
        if (!membership(row, basis_)) return false;
    }
    return true;
}

Subspace Subspace::sum(const Subspace& o) const {
    if (o.ambient_ != ambient_) throw DimensionMismatch("ambient dimensions differ");
    RationalMatrix stacked = stack_rows(basis_, o.basis_);
    std::size_t rank = 0;
    RationalMatrix e = rref(stacked, &rank);
    Subspace s(ambient_);
    s.basis_ = drop_zero_rows(e, rank);
    return s;
}

Subspace Subspace::extend(const RationalVector& v) const {
    return sum(from_vectors(ambient_, {v}));
}

// Zassenhaus: row reduce [B_U | B_U ; B_W | 0]; rows whose left half vanishes
// carry a basis of U cap W in the right half.
Subspace Subspace::intersect(const Subspace& o) const {
    if (o.ambient_ != ambient_) throw DimensionMismatch("ambient dimensions differ");
    const std::size_t n = ambient_;
    RationalMatrix block(dim() + o.dim(), 2 * n);
    for (std::size_t i = 0; i < dim(); ++i)
        for (std::size_t j = 0; j < n; ++j) {
            block.set(i, j, basis_.get(i, j));
            block.set(i, n + j, basis_.get(i, j));
        }
    for (std::size_t i = 0; i < o.dim(); ++i)
        for (std::size_t j = 0; j < n; ++j) block.set(dim() + i, j, o.basis_.get(i, j));
    std::size_t rank = 0;
    RationalMatrix e = rref(block, &rank);
    std::vector<RationalVector> gens;
    for (std::size_t i = 0; i < rank; ++i) {
        bool left_zero = true;
        for (std::size_t j = 0; j < n && left_zero; ++j)
            if (e.get(i, j) != 0) left_zero = false;
        if (!left_zero) continue;
        RationalVector v(n);
        for (std::size_t j = 0; j < n; ++j) v[j] = e.get(i, n + j);
        gens.push_back(std::move(v));
    }
    return from_vectors(n, gens);
}

RationalVector uncovered_vector(const Subspace& u, const std::vector<Subspace>& covers,
                                std::size_t* scanned) {
    const std::size_t l = u.dim();
    if (l == 0) throw BadParameter("uncovered_vector: subspace is trivial");
    for (const Subspace& w : covers) {
        if (w.ambient() != u.ambient())
            throw DimensionMismatch("uncovered_vector: ambient dimensions differ");
        if (w.contains(u))
            throw CoveringCollection("uncovered_vector: a cover contains the whole subspace");
    }
    const std::size_t limit = covers.size() * (l - 1) + 1;
    for (std::size_t alpha = 0; alpha < limit; ++alpha) {
        RationalVector cand(u.ambient(), Rational(0));
        Rational power(1); // alpha^0, with 0^0 = 1
        for (std::size_t j = 0; j < l; ++j) {
            for (std::size_t c = 0; c < u.ambient(); ++c)
                cand[c] += power * u.basis().get(j, c);
            power *= Rational(static_cast<unsigned long>(alpha));
        }
        bool covered = false;
        for (const Subspace& w : covers)
            if (w.contains(cand)) { covered = true; break; }
        if (!covered) {
            if (scanned) *scanned = alpha + 1;
            return cand;
        }
    }
    throw CoveringCollection("uncovered_vector: scan bound exhausted");
}

Subspace graded_subspace(const Subspace& u, const std::vector<Subspace>& ws,
                         std::size_t ell_prime) {
    const std::size_t l = u.dim();
    if (ell_prime > l) throw BadParameter("graded_subspace: target dimension exceeds dim(U)");
    for (const Subspace& w : ws)
        if (!u.contains(w))
            throw PreconditionViolated("graded_subspace: a member of the collection is not inside U");
    Subspace cur(u.ambient());
    for (std::size_t step = 0; step < ell_prime; ++step) {
        std::vector<Subspace> covers;
        covers.push_back(cur);
        for (const Subspace& w : ws) {
            Subspace s = cur.sum(w);
            if (s.dim() < l) covers.push_back(std::move(s));
            // s == U means W must now gain intersection; any new vector works
        }
        cur = cur.extend(uncovered_vector(u, covers));
    }
    return cur;
}

Subspace avoiding_subspace(const Subspace& u, const std::vector<Subspace>& ws,
                           std::size_t ell_prime) {
    const std::size_t l = u.dim();
    if (ell_prime > l) throw BadParameter("avoiding_subspace: ell' exceeds dim(U)");
    std::vector<Subspace> cut;
    cut.reserve(ws.size());
    for (const Subspace& w : ws) {
        Subspace x = u.intersect(w);
        if (x.dim() > ell_prime)
            throw PreconditionViolated("avoiding_subspace: dim(U cap W) exceeds ell'");
        cut.push_back(std::move(x));
    }
    Subspace out = graded_subspace(u, cut, l - ell_prime);
    for (const Subspace& w : ws)
        if (out.intersect(w).dim() != 0)
            throw Error("avoiding_subspace: construction failed to avoid a subspace");
    return out;
}

std::string subspace_to_json(const Subspace& s) {
    nlohmann::ordered_json j;
    j["ambient"] = s.ambient();
    j["dim"] = s.dim();
    nlohmann::ordered_json rows = nlohmann::ordered_json::array();
    for (std::size_t i = 0; i < s.dim(); ++i) {
        nlohmann::ordered_json row = nlohmann::ordered_json::array();
        for (std::size_t c = 0; c < s.ambient(); ++c)
            row.push_back(rational_to_string(s.basis().get(i, c)));
        rows.push_back(std::move(row));
    }
    j["basis"] = std::move(rows);
    return j.dump(2) + "\n";
}

Subspace subspace_from_json(const std::string& text) {
    try {
        auto j = nlohmann::json::parse(text);
        std::size_t ambient = j.at("ambient").get<std::size_t>();
        std::vector<RationalVector> gens;
        for (const auto& row : j.at("basis")) {
            RationalVector v;
            v.reserve(row.size());
            for (const auto& ent : row) v.push_back(rational_from_string(ent.get<std::string>()));
            gens.push_back(std::move(v));
        }
        Subspace s = Subspace::from_vectors(ambient, gens);
        if (j.contains("dim") && j.at("dim").get<std::size_t>() != s.dim())
            throw ParseError("subspace json: stated dim differs from basis rank");
        return s;
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("subspace json: ") + e.what());
    }
}

} // namespace gk
