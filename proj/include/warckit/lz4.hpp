#pragma once

#include <cstddef>
#include <cstdint>

#include "warckit/common.hpp"

// LZ4 block codec and xxHash32, implemented against the published LZ4 block
// and frame format specifications. The frame layer (member framing) lives in
// codec.cpp; this header exposes the primitives it is built from so they can
// be tested directly.
namespace warckit::lz4 {

inline constexpr uint32_t kFrameMagic = 0x184D2204;         // bytes 04 22 4D 18
inline constexpr uint32_t kSkippableMagicMin = 0x184D2A50;  // 0x184D2A50..5F
inline constexpr uint32_t kSkippableMagicMax = 0x184D2A5F;
inline constexpr uint32_t kStoredBlockFlag = 0x80000000u;
inline constexpr size_t kMaxHistory = 65536;  // match window across linked blocks

// FLG byte bits
inline constexpr uint8_t kFlagVersionMask = 0xC0;
inline constexpr uint8_t kFlagVersion1 = 0x40;
inline constexpr uint8_t kFlagBlockIndependence = 0x20;
inline constexpr uint8_t kFlagBlockChecksum = 0x10;
inline constexpr uint8_t kFlagContentSize = 0x08;
inline constexpr uint8_t kFlagContentChecksum = 0x04;
inline constexpr uint8_t kFlagReserved = 0x02;
inline constexpr uint8_t kFlagDictId = 0x01;

/// Block max size for a BD descriptor code (4 -> 64 KiB ... 7 -> 4 MiB), 0 if invalid.
size_t block_max_size(unsigned bd_code);

/// Worst-case compressed size of an n-byte block.
size_t compress_bound(size_t n);

/// Compresses one block. Returns the compressed size, or 0 when the output
/// would not fit in `cap` (callers then emit a stored block). `acceleration`
/// >= 1 trades ratio for speed.
size_t compress_block(const uint8_t* src, size_t len, uint8_t* dst, size_t cap,
                      int acceleration = 1);

/// Decompresses one block into `dst`. Matches may reference up to `hist_len`
/// bytes immediately preceding `dst` (linked-block history, contiguous in
/// memory). Returns the decompressed size; throws Error on malformed input.
size_t decompress_block(const uint8_t* src, size_t len, uint8_t* dst, size_t cap,
                        size_t hist_len = 0);

class Xxh32 {
public:
    explicit Xxh32(uint32_t seed = 0) { reset(seed); }

    void reset(uint32_t seed = 0);
    void update(const void* data, size_t len);
    uint32_t digest() const;

    static uint32_t hash(const void* data, size_t len, uint32_t seed = 0) {
        Xxh32 h(seed);
        h.update(data, len);
        return h.digest();
    }

private:
    uint32_t seed_ = 0;
    uint32_t v_[4]{};
    uint64_t total_ = 0;
    uint8_t buf_[16]{};
    size_t buf_len_ = 0;
};

}  // namespace warckit::lz4
