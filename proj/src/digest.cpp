#include "warckit/digest.hpp"

#include <openssl/evp.h>

namespace warckit {

namespace {

const EVP_MD* evp_md(DigestAlgorithm alg) {
    switch (alg) {
        case DigestAlgorithm::md5: return EVP_md5();
        case DigestAlgorithm::sha1: return EVP_sha1();
        case DigestAlgorithm::sha256: return EVP_sha256();
    }
    return nullptr;
}

}  // namespace

Hasher::Hasher(DigestAlgorithm alg) : alg_(alg) {
    EVP_MD_CTX* ctx = EVP_MD_CTX_new();
    if (!ctx || EVP_DigestInit_ex(ctx, evp_md(alg), nullptr) != 1) {
        EVP_MD_CTX_free(ctx);
        throw Error("cannot initialize digest context");
    }
    ctx_ = ctx;
}

Hasher::~Hasher() {
    EVP_MD_CTX_free(static_cast<EVP_MD_CTX*>(ctx_));
}

void Hasher::update(const void* data, size_t len) {
    if (EVP_DigestUpdate(static_cast<EVP_MD_CTX*>(ctx_), data, len) != 1)
        throw Error("digest update failed");
}

Digest Hasher::finish() {
    Digest d;
    d.algorithm = alg_;
    unsigned int len = 0;
    if (EVP_DigestFinal_ex(static_cast<EVP_MD_CTX*>(ctx_), d.value.data(), &len) != 1 ||
        len != d.size())
        throw Error("digest finalization failed");
    return d;
}

void Hasher::reset() {
    if (EVP_DigestInit_ex(static_cast<EVP_MD_CTX*>(ctx_), evp_md(alg_), nullptr) != 1)
        throw Error("digest reset failed");
}

}  // namespace warckit
