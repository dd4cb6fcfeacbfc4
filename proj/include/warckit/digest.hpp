#pragma once

#include "warckit/model.hpp"

namespace warckit {

/// Incremental digest computation for the algorithms in DigestAlgorithm.
class Hasher {
public:
    explicit Hasher(DigestAlgorithm alg);
    ~Hasher();
    Hasher(const Hasher&) = delete;
    Hasher& operator=(const Hasher&) = delete;

    void update(const void* data, size_t len);
    void update(BytesView data) { update(data.data(), data.size()); }

    /// Finalizes and returns the digest; reset() is required before reuse.
    Digest finish();
    void reset();

    DigestAlgorithm algorithm() const { return alg_; }

    static Digest hash(DigestAlgorithm alg, BytesView data) {
        Hasher h(alg);
        h.update(data);
        return h.finish();
    }

private:
    DigestAlgorithm alg_;
    void* ctx_ = nullptr;  // EVP_MD_CTX
};

}  // namespace warckit
