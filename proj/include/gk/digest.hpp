#pragma once

#include <cstddef>
#include <string>
#include <string_view>

namespace gk {

// Lowercase hex SHA-256; used for matrix/certificate digests.
std::string sha256_hex(std::string_view data);

// Incremental variant for artifacts too large to hold as one string.
class Sha256Stream {
public:
    Sha256Stream();
    ~Sha256Stream();
    Sha256Stream(const Sha256Stream&) = delete;
    Sha256Stream& operator=(const Sha256Stream&) = delete;

    void update(const void* data, std::size_t len);
    void update(std::string_view s) { update(s.data(), s.size()); }
    std::string hex(); // finalizes; no further updates

private:
    void* ctx_;
};

} // namespace gk
