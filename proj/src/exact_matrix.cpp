#include "gk/exact_matrix.hpp"

#include "gk/errors.hpp"

namespace gk {

bool IntMatrix::is_symmetric() const {
    if (rows_ != cols_) return false;
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = i + 1; j < cols_; ++j)
            if (get(i, j) != get(j, i)) return false;
    return true;
}

RationalMatrix to_rational(const IntMatrix& m) {
    RationalMatrix r(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) r.set(i, j, Rational(m.get(i, j)));
    return r;
}

RationalMatrix rref(const RationalMatrix& m, std::size_t* rank_out) {
    const std::size_t rows = m.rows(), cols = m.cols();
    std::vector<Rational> a(rows * cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) a[i * cols + j] = m.get(i, j);

    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t piv = rows;
        for (std::size_t i = r; i < rows; ++i) {
            if (a[i * cols + c] != 0) { piv = i; break; }
        }
        if (piv == rows) continue;
        if (piv != r)
            for (std::size_t j = 0; j < cols; ++j) std::swap(a[piv * cols + j], a[r * cols + j]);
        const Rational lead = a[r * cols + c];
        for (std::size_t j = c; j < cols; ++j) {
            a[r * cols + j] /= lead;
            a[r * cols + j].canonicalize();
        }
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r) continue;
            const Rational f = a[i * cols + c];
            if (f == 0) continue;
            for (std::size_t j = c; j < cols; ++j) {
                a[i * cols + j] -= f * a[r * cols + j];
                a[i * cols + j].canonicalize();
            }
        }
        ++r;
    }
    if (rank_out) *rank_out = r;
    RationalMatrix out(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) out.set(i, j, a[i * cols + j]);
    return out;
}

std::size_t rank_rational(const RationalMatrix& m) {
    std::size_t r = 0;
    rref(m, &r);
    return r;
}

std::size_t rank_rational(const IntMatrix& m) {
    return rank_rational(to_rational(m));
}

RationalMatrix null_space(const RationalMatrix& m) {
    const std::size_t cols = m.cols();
    std::size_t r = 0;
    RationalMatrix e = rref(m, &r);

    std::vector<std::size_t> pivot_col;
    std::vector<bool> is_pivot(cols, false);
    for (std::size_t i = 0; i < r; ++i) {
        for (std::size_t j = 0; j < cols; ++j) {
            if (e.get(i, j) != 0) {
                pivot_col.push_back(j);
                is_pivot[j] = true;
                break;
            }
        }
    }
    RationalMatrix out(cols - r, cols);
    std::size_t k = 0;
    for (std::size_t freec = 0; freec < cols; ++freec) {
        if (is_pivot[freec]) continue;
        out.set(k, freec, Rational(1));
        for (std::size_t i = 0; i < r; ++i)
            out.set(k, pivot_col[i], -e.get(i, freec));
        ++k;
    }
    return out;
}

bool membership(const RationalVector& v, const RationalMatrix& basis) {
    if (v.size() != basis.cols()) throw DimensionMismatch("membership: length mismatch");
    // reduce v against the echelon form of the basis
    std::size_t r = 0;
    RationalMatrix e = rref(basis, &r);
    RationalVector w = v;
    for (std::size_t i = 0; i < r; ++i) {
        std::size_t lead = basis.cols();
        for (std::size_t j = 0; j < basis.cols(); ++j) {
            if (e.get(i, j) != 0) { lead = j; break; }
        }
        if (lead == basis.cols()) break;
        const Rational f = w[lead]; // pivot entry is 1
        if (f == 0) continue;
        for (std::size_t j = lead; j < basis.cols(); ++j) {
            w[j] -= f * e.get(i, j);
            w[j].canonicalize();
        }
    }
    for (const auto& x : w)
        if (x != 0) return false;
    return true;
}

PrimeFieldMatrix reduce_mod_p(const IntMatrix& m, uint64_t p) {
    if (!is_prime_u64(p)) throw BadParameter("reduce_mod_p: composite modulus");
    PrimeFieldMatrix out(m.rows(), m.cols(), p);
    BigInt t;
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) {
            t = m.get(i, j) % static_cast<unsigned long>(p);
            if (t < 0) t += static_cast<unsigned long>(p);
            out.set(i, j, t.get_ui());
        }
    }
    return out;
}

IntMatrix multiply(const IntMatrix& a, const IntMatrix& b) {
    if (a.cols() != b.rows()) throw DimensionMismatch("multiply: inner dims");
    IntMatrix out(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const BigInt& av = a.get(i, k);
            if (av == 0) continue;
            for (std::size_t j = 0; j < b.cols(); ++j) {
                const BigInt& bv = b.get(k, j);
                if (bv == 0) continue;
                out.set(i, j, out.get(i, j) + av * bv);
            }
        }
    }
    return out;
}

} // namespace gk
