#pragma once

#include <array>
#include <optional>
#include <vector>

#include "warckit/common.hpp"

namespace warckit {

struct HeaderField {
    Bytes name;
    Bytes value;

    bool operator==(const HeaderField&) const = default;
};

/// Ordered, case-insensitive multimap of header names to values. Lookup
/// returns the first matching entry; iteration preserves insertion order and
/// original casing.
class WarcHeaderMap {
public:
    void append(BytesView name, BytesView value) {
        fields_.push_back({Bytes(name), Bytes(value)});
    }

    /// Replaces the value of the first entry named `name` (keeping its casing
    /// and position), or appends a new entry.
    void set(BytesView name, BytesView value);

    std::optional<BytesView> get(BytesView name) const;
    std::vector<BytesView> get_all(BytesView name) const;
    bool contains(BytesView name) const { return get(name).has_value(); }

    size_t size() const { return fields_.size(); }
    bool empty() const { return fields_.empty(); }
    void clear() { fields_.clear(); }

    auto begin() const { return fields_.begin(); }
    auto end() const { return fields_.end(); }
    const HeaderField& operator[](size_t i) const { return fields_[i]; }

    /// Wire form: `Name: value CRLF` per entry. No terminating blank line.
    void serialize(Bytes& out) const;

    bool operator==(const WarcHeaderMap&) const = default;

private:
    std::vector<HeaderField> fields_;
};

enum class RecordType : uint8_t {
    warcinfo = 0,
    response,
    resource,
    request,
    metadata,
    revisit,
    conversion,
    continuation,
    unknown,
};

inline constexpr size_t kRecordTypeCount = 9;

RecordType record_type_from_name(BytesView name);
BytesView record_type_name(RecordType t);

/// Which RecordType value the WARC-Type header maps to; missing header or an
/// unrecognized value maps to `unknown`.
RecordType record_type_of(const WarcHeaderMap& headers);

class RecordTypeMask {
public:
    constexpr RecordTypeMask() = default;

    static constexpr RecordTypeMask all() { return RecordTypeMask((1u << kRecordTypeCount) - 1); }
    static constexpr RecordTypeMask none() { return RecordTypeMask(0); }
    static RecordTypeMask of(std::initializer_list<RecordType> types) {
        RecordTypeMask m;
        for (auto t : types) m.set(t);
        return m;
    }

    /// Parses a comma-separated list of type names ("response,request").
    /// Empty list or unknown names yield nullopt.
    static std::optional<RecordTypeMask> parse(BytesView list);

    void set(RecordType t) { bits_ |= bit(t); }
    bool matches(RecordType t) const { return (bits_ & bit(t)) != 0; }
    bool is_all() const { return bits_ == all().bits_; }
    bool is_empty() const { return bits_ == 0; }
    uint16_t bits() const { return bits_; }

    bool operator==(const RecordTypeMask&) const = default;

private:
    explicit constexpr RecordTypeMask(uint16_t bits) : bits_(bits) {}
    static uint16_t bit(RecordType t) { return static_cast<uint16_t>(1u << static_cast<uint8_t>(t)); }

    uint16_t bits_ = 0;
};

enum class DigestAlgorithm : uint8_t { md5, sha1, sha256 };

size_t digest_size(DigestAlgorithm alg);
BytesView digest_algorithm_name(DigestAlgorithm alg);

struct Digest {
    DigestAlgorithm algorithm = DigestAlgorithm::sha1;
    std::array<uint8_t, 32> value{};

    size_t size() const { return digest_size(algorithm); }

    /// Canonical text form: "<alg>:<uppercase unpadded base32>".
    Bytes to_string() const;

    /// Accepts "<alg>:<base32|hex>", algorithm token and encoding both
    /// case-insensitive. Throws UnknownDigestAlgorithm / MalformedDigest.
    static Digest parse(BytesView text);

    bool operator==(const Digest& o) const {
        return algorithm == o.algorithm &&
               std::equal(value.begin(), value.begin() + size(), o.value.begin());
    }
};

// RFC 4648 base32, uppercase, no padding on encode; decode is
// case-insensitive and tolerates trailing '='.
Bytes base32_encode(BytesView raw);
std::optional<Bytes> base32_decode(BytesView text);

/// On-disk extent and content geometry of one record.
struct RecordGeometry {
    uint64_t file_offset = 0;        // offset of the record's member (or raw record)
    uint64_t compressed_length = 0;  // bytes on disk; 0 while not yet finalized
    uint64_t content_length = 0;     // declared Content-Length
    uint64_t header_length = 0;      // header block incl. terminating blank line

    bool operator==(const RecordGeometry&) const = default;
};

}  // namespace warckit
