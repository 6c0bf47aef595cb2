#pragma once

#include <iosfwd>
#include <string>
#include <variant>

#include "gk/exact_matrix.hpp"
#include "gk/prime_matrix.hpp"

namespace gk {

// Text format: header "rows cols modulus" where modulus is a prime, `Q`, or
// `Z`; then one line per row, entries space-separated (rationals as num/den).
// The writer output is canonical; write/read round-trips exactly.

using AnyMatrix = std::variant<PrimeFieldMatrix, IntMatrix, RationalMatrix>;

std::string write_text(const PrimeFieldMatrix& m);
std::string write_text(const IntMatrix& m);
std::string write_text(const RationalMatrix& m);
std::string write_text(const AnyMatrix& m);

AnyMatrix read_matrix_text(std::istream& in);
AnyMatrix read_matrix_text(const std::string& text);
AnyMatrix read_matrix_file(const std::string& path);

void write_matrix_file(const std::string& path, const AnyMatrix& m);

// SHA-256 of the canonical text serialization; the prime-field overload
// streams and never materializes the full text.
std::string matrix_sha256(const PrimeFieldMatrix& m);
std::string matrix_sha256(const IntMatrix& m);
std::string matrix_sha256(const RationalMatrix& m);
std::string matrix_sha256(const AnyMatrix& m);

} // namespace gk
