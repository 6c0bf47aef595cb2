#include "gk/digest.hpp"

#include <array>
#include <cstdio>

#include <openssl/evp.h>

#include "gk/errors.hpp"

namespace gk {

namespace {

std::string to_hex(const unsigned char* md, unsigned int len) {
    std::string out;
    out.reserve(2 * len);
    char buf[3];
    for (unsigned int i = 0; i < len; ++i) {
        std::snprintf(buf, sizeof buf, "%02x", md[i]);
        out += buf;
    }
    return out;
}

} // namespace

std::string sha256_hex(std::string_view data) {
    std::array<unsigned char, EVP_MAX_MD_SIZE> md{};
    unsigned int len = 0;
    if (!EVP_Digest(data.data(), data.size(), md.data(), &len, EVP_sha256(), nullptr))
        throw Error("sha256 failed");
    return to_hex(md.data(), len);
}

Sha256Stream::Sha256Stream() : ctx_(EVP_MD_CTX_new()) {
    if (!ctx_ || !EVP_DigestInit_ex(static_cast<EVP_MD_CTX*>(ctx_), EVP_sha256(), nullptr))
        throw Error("sha256 init failed");
}

Sha256Stream::~Sha256Stream() { EVP_MD_CTX_free(static_cast<EVP_MD_CTX*>(ctx_)); }

void Sha256Stream::update(const void* data, std::size_t len) {
    if (!EVP_DigestUpdate(static_cast<EVP_MD_CTX*>(ctx_), data, len))
        throw Error("sha256 update failed");
}

std::string Sha256Stream::hex() {
    std::array<unsigned char, EVP_MAX_MD_SIZE> md{};
    unsigned int len = 0;
    if (!EVP_DigestFinal_ex(static_cast<EVP_MD_CTX*>(ctx_), md.data(), &len))
        throw Error("sha256 final failed");
    return to_hex(md.data(), len);
}

} // namespace gk
