#include "gk/matrix_io.hpp"

#include <fstream>
#include <sstream>

#include "gk/digest.hpp"
#include "gk/errors.hpp"

namespace gk {

namespace {

void append_header(std::string& out, std::size_t rows, std::size_t cols, const std::string& modulus) {
    out += std::to_string(rows);
    out += ' ';
    out += std::to_string(cols);
    out += ' ';
    out += modulus;
    out += '\n';
}

// Canonical prime-field text, emitted row by row through `sink(chunk)`.
template <class Sink>
void emit_prime_text(const PrimeFieldMatrix& m, Sink&& sink) {
    std::string line;
    append_header(line, m.rows(), m.cols(), std::to_string(m.modulus()));
    sink(line);
    for (std::size_t i = 0; i < m.rows(); ++i) {
        line.clear();
        for (std::size_t j = 0; j < m.cols(); ++j) {
            if (j) line += ' ';
            line += std::to_string(m.get(i, j));
        }
        line += '\n';
        sink(line);
    }
}

} // namespace

std::string write_text(const PrimeFieldMatrix& m) {
    std::string out;
    emit_prime_text(m, [&out](const std::string& chunk) { out += chunk; });
    return out;
}

std::string write_text(const IntMatrix& m) {
    std::string out;
    append_header(out, m.rows(), m.cols(), "Z");
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) {
            if (j) out += ' ';
            out += m.get(i, j).get_str();
        }
        out += '\n';
    }
    return out;
}

std::string write_text(const RationalMatrix& m) {
    std::string out;
    append_header(out, m.rows(), m.cols(), "Q");
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) {
            if (j) out += ' ';
            out += rational_to_string(m.get(i, j));
        }
        out += '\n';
    }
    return out;
}

std::string write_text(const AnyMatrix& m) {
    return std::visit([](const auto& x) { return write_text(x); }, m);
}

AnyMatrix read_matrix_text(std::istream& in) {
    std::size_t rows = 0, cols = 0;
    std::string modulus;
    if (!(in >> rows >> cols >> modulus)) throw ParseError("matrix header malformed");

    auto next_token = [&in]() {
        std::string tok;
        if (!(in >> tok)) throw ParseError("matrix body truncated");
        return tok;
    };

    if (modulus == "Z") {
        IntMatrix m(rows, cols);
        for (std::size_t i = 0; i < rows; ++i)
            for (std::size_t j = 0; j < cols; ++j) {
                try {
                    m.set(i, j, BigInt(next_token()));
                } catch (const std::invalid_argument&) {
                    throw ParseError("bad integer entry");
                }
            }
        return m;
    }
    if (modulus == "Q") {
        RationalMatrix m(rows, cols);
        for (std::size_t i = 0; i < rows; ++i)
            for (std::size_t j = 0; j < cols; ++j) m.set(i, j, rational_from_string(next_token()));
        return m;
    }

    uint64_t p = 0;
    try {
        std::size_t pos = 0;
        p = std::stoull(modulus, &pos);
        if (pos != modulus.size()) throw ParseError("bad modulus token: " + modulus);
    } catch (const std::exception&) {
        throw ParseError("bad modulus token: " + modulus);
    }
    PrimeFieldMatrix m(rows, cols, p); // validates primality
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) {
            const std::string tok = next_token();
            uint64_t v = 0;
            try {
                std::size_t pos = 0;
                v = std::stoull(tok, &pos);
                if (pos != tok.size()) throw ParseError("bad entry: " + tok);
            } catch (const std::exception&) {
                throw ParseError("bad entry: " + tok);
            }
            if (v >= p) throw ParseError("entry out of range for modulus");
            m.set(i, j, v);
        }
    return m;
}

AnyMatrix read_matrix_text(const std::string& text) {
    std::istringstream in(text);
    return read_matrix_text(in);
}

AnyMatrix read_matrix_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open " + path);
    return read_matrix_text(in);
}

void write_matrix_file(const std::string& path, const AnyMatrix& m) {
    std::ofstream out(path, std::ios::trunc);
    if (!out) throw Error("cannot write " + path);
    if (const auto* pm = std::get_if<PrimeFieldMatrix>(&m)) {
        emit_prime_text(*pm, [&out](const std::string& chunk) { out.write(chunk.data(), std::streamsize(chunk.size())); });
    } else {
        out << write_text(m);
    }
    if (!out) throw Error("write failed for " + path);
}

std::string matrix_sha256(const PrimeFieldMatrix& m) {
    Sha256Stream h;
    emit_prime_text(m, [&h](const std::string& chunk) { h.update(chunk); });
    return h.hex();
}

std::string matrix_sha256(const IntMatrix& m) { return sha256_hex(write_text(m)); }
std::string matrix_sha256(const RationalMatrix& m) { return sha256_hex(write_text(m)); }
std::string matrix_sha256(const AnyMatrix& m) {
    return std::visit([](const auto& x) { return matrix_sha256(x); }, m);
}

} // namespace gk
