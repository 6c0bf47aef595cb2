#pragma once

#include <cstdint>
#include <string>

#include <json.hpp>

#include "gk/polyrep.hpp"

namespace gk {

// Reproduction context recorded inside every emitted artifact.
struct RunConfig {
    std::string command; // full reproduction command line
    unsigned threads = 1;
    bool force = false;
};

// Odd-girth verification policy. Exhaustive below the vertex threshold;
// above it, exhaustive checks on seeded random induced subgraphs — a found
// odd cycle refutes, absence does not fully confirm, and the certificate
// records which mode ran.
struct GirthCheckConfig {
    std::size_t exhaustive_threshold = 5000;
    std::size_t samples = 200;
    std::size_t sample_size = 400;
    uint64_t seed = 0x676b636572740000ULL;
};

struct Certificate {
    nlohmann::ordered_json doc;
    bool verdict() const { return doc.at("verdict").get<bool>(); }
    std::string claim() const { return doc.at("claim").get<std::string>(); }
    std::string text() const { return doc.dump(2) + "\n"; }
};

// K(d, d/2, d/(2*ell)): odd girth exceeds ell, plus the mod-p representation
// with rank <= R. ell odd >= 3, d divisible by 2*ell.
Certificate cycle_free_certificate(uint64_t ell, uint64_t d, uint64_t p,
                                   const GirthCheckConfig& girth = {}, const BuildLimits& lim = {},
                                   const RunConfig& rc = {});

// d divisible by 6: triangle-free K(d, d/2, d/6) whose complement gets an
// orthogonal representation over GF(2) in dimension rank(M mod 2), via the
// congruence factorization; includes the nearly-orthogonal system check.
Certificate triangle_free_od_certificate(uint64_t d, const GirthCheckConfig& girth = {},
                                         const BuildLimits& lim = {}, const RunConfig& rc = {});

// d divisible by 8: K(d, d/2, d/8) sign vectors witness vector chromatic
// number <= 3 (per-edge exact integer inequality 4|A xor B| >= 3d), plus the
// mod-p rank and the complement minrank lower bound ceil(n/rank).
Certificate vchrom3_certificate(uint64_t d, uint64_t p, const BuildLimits& lim = {},
                                const RunConfig& rc = {});

struct VerifyResult {
    bool matches = false;       // regeneration equals stored, volatile fields aside
    bool stored_verdict = false;
    std::string mismatch;       // first differing path when !matches
    Certificate regenerated;
};

// Re-runs the pipeline named by the stored certificate (same parameters, same
// girth mode and seed) and compares everything except generated_at and
// run_config, byte for byte.
VerifyResult verify_certificate(const nlohmann::ordered_json& stored, const BuildLimits& lim = {});

std::string iso8601_utc_now();

} // namespace gk
