#include "nell2rdf/util/hash.hpp"

#include <openssl/evp.h>

#include <array>
#include <stdexcept>

namespace nell2rdf {

std::string hex128(std::string_view data) {
    std::array<unsigned char, EVP_MAX_MD_SIZE> digest{};
    unsigned int len = 0;
    if (EVP_Digest(data.data(), data.size(), digest.data(), &len, EVP_sha256(), nullptr) != 1 ||
        len < 16) {
        throw std::runtime_error("SHA-256 digest failed");
    }
    static constexpr char hexdig[] = "0123456789abcdef";
    std::string out;
    out.resize(32);
    for (int i = 0; i < 16; ++i) {
        out[2 * i] = hexdig[digest[i] >> 4];
        out[2 * i + 1] = hexdig[digest[i] & 0xF];
    }
    return out;
}

}  // namespace nell2rdf
