#pragma once

#include <stdexcept>
#include <string>

namespace gk {

// Base class for everything this library throws on purpose.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

class BadParameter : public Error {
public:
    using Error::Error;
};

class DimensionMismatch : public Error {
public:
    using Error::Error;
};

class ParseError : public Error {
public:
    using Error::Error;
};

// Refusal to allocate past the configured cap; callers may pass force=true.
class MemoryGuard : public Error {
public:
    using Error::Error;
};

// Symmetric-factorization inputs.
class AsymmetricInput : public Error {
public:
    using Error::Error;
};

class AllZeroDiagonal : public Error {
public:
    using Error::Error;
};

// Subspace lemmas.
class CoveringCollection : public Error {
public:
    using Error::Error;
};

class PreconditionViolated : public Error {
public:
    using Error::Error;
};

// Oracle searches: a third outcome distinct from any numeric answer.
class BudgetExceeded : public Error {
public:
    using Error::Error;
};

} // namespace gk
