#pragma once

#include <memory>
#include <optional>

#include "warckit/io.hpp"

namespace warckit {

enum class CodecKind : uint8_t { none, gzip, lz4 };

BytesView codec_name(CodecKind kind);
std::optional<CodecKind> codec_from_name(BytesView name);

/// Identifies the framing from the first file bytes: gzip magic 1F 8B, LZ4
/// frame magic 04 22 4D 18, anything else (including short prefixes) is none.
CodecKind detect_codec(BytesView prefix);

/// Position and extent of one compressed member inside the underlying file.
struct MemberBoundary {
    uint64_t member_offset = 0;
    uint64_t member_compressed_length = 0;  // consumed so far; total once the member ends
    uint64_t uncompressed_length = 0;       // produced so far

    bool operator==(const MemberBoundary&) const = default;
};

/// Sequential decompressor over a stream of compressed members. Reads never
/// span a member boundary: a call that reaches the end of a member returns
/// what it has, and the next call starts the next member. Single-consumer.
class DecompressingStream {
public:
    virtual ~DecompressingStream() = default;

    /// Returns 0 only when the final member is exhausted.
    virtual size_t read(uint8_t* dst, size_t cap) = 0;

    virtual CodecKind kind() const = 0;
    virtual bool exhausted() const = 0;

    /// Boundary of the member currently being decoded (or the last one
    /// completed when positioned between members).
    virtual const MemberBoundary& boundary() const = 0;

    /// File offset of the member producing the next output byte; when
    /// positioned between members this is where the next member begins.
    virtual uint64_t current_member_offset() const = 0;

    /// True when the next output byte (if any) starts a new member.
    virtual bool at_member_start() const = 0;

    /// Advances past the rest of the current member (or the whole next one
    /// when between members) doing the minimum work the framing permits.
    /// Returns the boundary of the skipped member. Throws UnsupportedForCodec
    /// for unframed streams.
    virtual MemberBoundary skip_member() = 0;

    /// Discards up to n output bytes; returns how many were skipped.
    virtual uint64_t skip_output(uint64_t n) = 0;

    /// After an error: scans forward for the next member magic within
    /// `max_scan` compressed bytes and repositions there. Returns false when
    /// no member was found (stream is then exhausted) or the codec has no
    /// member framing.
    virtual bool resync_to_member(uint64_t max_scan) = 0;

    /// Total decompressed bytes delivered (including skip_output).
    virtual uint64_t output_position() const = 0;

    /// Members fully decoded so far.
    virtual uint64_t members_completed() const = 0;
};

/// Opens a decompressing stream; kind nullopt means autodetect from the first
/// bytes (decided once per file; later members must match).
std::unique_ptr<DecompressingStream> open_read(std::unique_ptr<SeekableSource> source,
                                               std::optional<CodecKind> kind = std::nullopt);

/// Opens a stream that begins decoding at `offset`, which must be a member
/// boundary previously reported (or any record boundary for CodecKind none).
/// Setup cost is independent of file size. Throws CorruptMember when the
/// member magic check at `offset` fails.
std::unique_ptr<DecompressingStream> seek_member(std::unique_ptr<SeekableSource> source,
                                                 uint64_t offset, CodecKind kind);

/// Writes self-contained compressed members (one gzip member / one LZ4 frame
/// per member, raw bytes for none). Members written consecutively are
/// independently seekable. Compression state is reused across members.
class MemberWriter {
public:
    /// level: gzip 0..9 (-1 = zlib default); for lz4 it selects the match
    /// search effort of the greedy compressor (higher level, more effort;
    /// -1 = default). Ignored for none.
    MemberWriter(ByteSink& sink, CodecKind kind, int level = -1);
    ~MemberWriter();
    MemberWriter(const MemberWriter&) = delete;
    MemberWriter& operator=(const MemberWriter&) = delete;

    void begin_member();
    void write(BytesView chunk);
    MemberBoundary end_member();

    MemberBoundary write_member(BytesView payload) {
        begin_member();
        write(payload);
        return end_member();
    }

    CodecKind kind() const { return kind_; }
    uint64_t members_written() const { return members_; }
    uint64_t position() const;

private:
    void emit_lz4_block(bool final_block);

    ByteSink& sink_;
    CodecKind kind_;
    int level_;
    bool in_member_ = false;
    uint64_t members_ = 0;
    MemberBoundary current_{};

    void* zstream_ = nullptr;  // z_stream, gzip only
    Bytes scratch_;            // compressed output staging
    Bytes block_buf_;          // lz4: pending uncompressed block
    class Lz4State;
    std::unique_ptr<Lz4State> lz4_;
};

/// One-call form of the member write path.
MemberBoundary write_member(ByteSink& sink, BytesView payload, CodecKind kind, int level = -1);

}  // namespace warckit
