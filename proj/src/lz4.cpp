#include "warckit/lz4.hpp"

#include <cstring>

namespace warckit::lz4 {

namespace {

constexpr size_t kMinMatch = 4;
constexpr size_t kMfLimit = 12;        // no match may start closer to the end
constexpr size_t kLastLiterals = 5;    // final bytes are always literals
constexpr size_t kMaxDistance = 65535;
constexpr unsigned kHashLog = 13;
constexpr unsigned kSkipTrigger = 6;

inline uint32_t read32(const uint8_t* p) {
    uint32_t v;
    std::memcpy(&v, p, 4);
    return v;  // little-endian hosts only; fine for this project's targets
}

inline uint16_t read16(const uint8_t* p) {
    uint16_t v;
    std::memcpy(&v, p, 2);
    return v;
}

inline uint32_t hash_pos(const uint8_t* p) {
    return (read32(p) * 2654435761u) >> (32 - kHashLog);
}

[[noreturn]] void corrupt(const char* what) {
    throw Error(std::string("lz4 block: ") + what);
}

}  // namespace

size_t block_max_size(unsigned bd_code) {
    switch (bd_code) {
        case 4: return 64u << 10;
        case 5: return 256u << 10;
        case 6: return 1u << 20;
        case 7: return 4u << 20;
    }
    return 0;
}

size_t compress_bound(size_t n) {
    return n + n / 255 + 16;
}

size_t compress_block(const uint8_t* src, size_t len, uint8_t* dst, size_t cap,
                      int acceleration) {
    if (acceleration < 1) acceleration = 1;
    uint8_t* op = dst;
    uint8_t* const oend = dst + cap;

    // Emits literals [anchor, lit_end) and, unless final, a match.
    auto emit = [&](const uint8_t* anchor, const uint8_t* lit_end, size_t offset,
                    size_t match_len) -> bool {
        size_t lit = static_cast<size_t>(lit_end - anchor);
        size_t need = 1 + lit + lit / 255 + 1 + (match_len ? 2 + (match_len - kMinMatch) / 255 + 1 : 0);
        if (static_cast<size_t>(oend - op) < need) return false;
        uint8_t* token = op++;
        if (lit >= 15) {
            *token = 15 << 4;
            size_t rest = lit - 15;
            while (rest >= 255) {
                *op++ = 255;
                rest -= 255;
            }
            *op++ = static_cast<uint8_t>(rest);
        } else {
            *token = static_cast<uint8_t>(lit << 4);
        }
        std::memcpy(op, anchor, lit);
        op += lit;
        if (match_len == 0) return true;  // final literal run
        op[0] = static_cast<uint8_t>(offset & 0xFF);
        op[1] = static_cast<uint8_t>(offset >> 8);
        op += 2;
        size_t m = match_len - kMinMatch;
        if (m >= 15) {
            *token |= 15;
            m -= 15;
            while (m >= 255) {
                *op++ = 255;
                m -= 255;
            }
            *op++ = static_cast<uint8_t>(m);
        } else {
            *token |= static_cast<uint8_t>(m);
        }
        return true;
    };

    if (len < kMfLimit + 1) {
        if (!emit(src, src + len, 0, 0)) return 0;
        return static_cast<size_t>(op - dst);
    }

    uint32_t table[1u << kHashLog];
    std::memset(table, 0xFF, sizeof(table));  // 0xFFFFFFFF = empty slot

    const uint8_t* ip = src;
    const uint8_t* anchor = src;
    const uint8_t* const mflimit = src + len - kMfLimit;
    const uint8_t* const matchlimit = src + len - kLastLiterals;

    unsigned search_count = static_cast<unsigned>(acceleration) << kSkipTrigger;
    while (ip < mflimit) {
        uint32_t h = hash_pos(ip);
        uint32_t cand = table[h];
        table[h] = static_cast<uint32_t>(ip - src);
        if (cand != 0xFFFFFFFFu && static_cast<size_t>(ip - src) - cand <= kMaxDistance &&
            read32(src + cand) == read32(ip)) {
            const uint8_t* match = src + cand;
            // extend backwards over equal bytes
            while (ip > anchor && match > src && ip[-1] == match[-1]) {
                --ip;
                --match;
            }
            size_t mlen = kMinMatch;
            size_t max_mlen = static_cast<size_t>(matchlimit - ip);
            while (mlen < max_mlen && ip[mlen] == match[mlen]) ++mlen;
            if (!emit(anchor, ip, static_cast<size_t>(ip - match), mlen)) return 0;
            ip += mlen;
            anchor = ip;
            if (ip < mflimit) {
                table[hash_pos(ip - 2)] = static_cast<uint32_t>(ip - 2 - src);
            }
            search_count = static_cast<unsigned>(acceleration) << kSkipTrigger;
        } else {
            ip += (search_count++ >> kSkipTrigger);
        }
    }
    if (!emit(anchor, src + len, 0, 0)) return 0;
    return static_cast<size_t>(op - dst);
}

size_t decompress_block(const uint8_t* src, size_t len, uint8_t* dst, size_t cap,
                        size_t hist_len) {
    const uint8_t* ip = src;
    const uint8_t* const iend = src + len;
    uint8_t* op = dst;
    uint8_t* const oend = dst + cap;
    if (len == 0) corrupt("empty block");

    for (;;) {
        if (ip >= iend) corrupt("truncated sequence");
        unsigned token = *ip++;
        size_t lit = token >> 4;
        if (lit == 15) {
            unsigned b;
            do {
                if (ip >= iend) corrupt("truncated literal length");
                b = *ip++;
                lit += b;
            } while (b == 255);
        }
        if (lit > static_cast<size_t>(iend - ip)) corrupt("literal run past input end");
        if (lit > static_cast<size_t>(oend - op)) corrupt("literal run past output capacity");
        std::memcpy(op, ip, lit);
        op += lit;
        ip += lit;
        if (ip == iend) break;  // last sequence carries literals only

        if (iend - ip < 2) corrupt("truncated match offset");
        size_t offset = read16(ip);
        ip += 2;
        if (offset == 0) corrupt("zero match offset");
        if (offset > static_cast<size_t>(op - dst) + hist_len) corrupt("match offset before window");

        size_t mlen = (token & 0x0F) + kMinMatch;
        if ((token & 0x0F) == 15) {
            unsigned b;
            do {
                if (ip >= iend) corrupt("truncated match length");
                b = *ip++;
                mlen += b;
            } while (b == 255);
        }
        if (mlen > static_cast<size_t>(oend - op)) corrupt("match past output capacity");

        const uint8_t* match = op - offset;
        if (offset >= mlen) {
            std::memcpy(op, match, mlen);
            op += mlen;
        } else {
            // overlapping copy replicates the pattern
            for (size_t i = 0; i < mlen; ++i) op[i] = match[i];
            op += mlen;
        }
    }
    return static_cast<size_t>(op - dst);
}

// --- xxHash32 --------------------------------------------------------------

namespace {

constexpr uint32_t P1 = 2654435761u;
constexpr uint32_t P2 = 2246822519u;
constexpr uint32_t P3 = 3266489917u;
constexpr uint32_t P4 = 668265263u;
constexpr uint32_t P5 = 374761393u;

inline uint32_t rotl(uint32_t v, int r) {
    return (v << r) | (v >> (32 - r));
}

inline uint32_t round32(uint32_t acc, uint32_t lane) {
    return rotl(acc + lane * P2, 13) * P1;
}

}  // namespace

void Xxh32::reset(uint32_t seed) {
    seed_ = seed;
    v_[0] = seed + P1 + P2;
    v_[1] = seed + P2;
    v_[2] = seed;
    v_[3] = seed - P1;
    total_ = 0;
    buf_len_ = 0;
}

void Xxh32::update(const void* data, size_t len) {
    const uint8_t* p = static_cast<const uint8_t*>(data);
    total_ += len;
    if (buf_len_ + len < 16) {
        std::memcpy(buf_ + buf_len_, p, len);
        buf_len_ += len;
        return;
    }
    if (buf_len_ > 0) {
        size_t fill = 16 - buf_len_;
        std::memcpy(buf_ + buf_len_, p, fill);
        v_[0] = round32(v_[0], read32(buf_));
        v_[1] = round32(v_[1], read32(buf_ + 4));
        v_[2] = round32(v_[2], read32(buf_ + 8));
        v_[3] = round32(v_[3], read32(buf_ + 12));
        p += fill;
        len -= fill;
        buf_len_ = 0;
    }
    while (len >= 16) {
        v_[0] = round32(v_[0], read32(p));
        v_[1] = round32(v_[1], read32(p + 4));
        v_[2] = round32(v_[2], read32(p + 8));
        v_[3] = round32(v_[3], read32(p + 12));
        p += 16;
        len -= 16;
    }
    if (len > 0) {
        std::memcpy(buf_, p, len);
        buf_len_ = len;
    }
}

uint32_t Xxh32::digest() const {
    uint32_t h;
    if (total_ >= 16) {
        h = rotl(v_[0], 1) + rotl(v_[1], 7) + rotl(v_[2], 12) + rotl(v_[3], 18);
    } else {
        h = seed_ + P5;
    }
    h += static_cast<uint32_t>(total_);
    const uint8_t* p = buf_;
    size_t rem = buf_len_;
    while (rem >= 4) {
        h = rotl(h + read32(p) * P3, 17) * P4;
        p += 4;
        rem -= 4;
    }
    while (rem > 0) {
        h = rotl(h + (*p) * P5, 11) * P1;
        ++p;
        --rem;
    }
    h ^= h >> 15;
    h *= P2;
    h ^= h >> 13;
    h *= P3;
    h ^= h >> 16;
    return h;
}

}  // namespace warckit::lz4
