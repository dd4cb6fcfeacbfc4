#include "warckit/model.hpp"

namespace warckit {

void WarcHeaderMap::set(BytesView name, BytesView value) {
    for (auto& f : fields_) {
        if (iequals(f.name, name)) {
            f.value = Bytes(value);
            return;
        }
    }
    append(name, value);
}

std::optional<BytesView> WarcHeaderMap::get(BytesView name) const {
    for (const auto& f : fields_)
        if (iequals(f.name, name)) return BytesView(f.value);
    return std::nullopt;
}

std::vector<BytesView> WarcHeaderMap::get_all(BytesView name) const {
    std::vector<BytesView> out;
    for (const auto& f : fields_)
        if (iequals(f.name, name)) out.emplace_back(f.value);
    return out;
}

void WarcHeaderMap::serialize(Bytes& out) const {
    for (const auto& f : fields_) {
        out += f.name;
        out += ": ";
        out += f.value;
        out += "\r\n";
    }
}

namespace {

constexpr BytesView kTypeNames[kRecordTypeCount] = {
    "warcinfo", "response",   "resource",     "request", "metadata",
    "revisit",  "conversion", "continuation", "unknown",
};

}  // namespace

RecordType record_type_from_name(BytesView name) {
    for (size_t i = 0; i + 1 < kRecordTypeCount; ++i)
        if (iequals(name, kTypeNames[i])) return static_cast<RecordType>(i);
    return RecordType::unknown;
}

BytesView record_type_name(RecordType t) {
    return kTypeNames[static_cast<uint8_t>(t)];
}

RecordType record_type_of(const WarcHeaderMap& headers) {
    auto v = headers.get("WARC-Type");
    if (!v) return RecordType::unknown;
    return record_type_from_name(trim_ows(*v));
}

std::optional<RecordTypeMask> RecordTypeMask::parse(BytesView list) {
    RecordTypeMask m;
    size_t pos = 0;
    bool any = false;
    while (pos <= list.size()) {
        size_t comma = list.find(',', pos);
        BytesView item = trim_ows(list.substr(pos, comma == BytesView::npos ? BytesView::npos : comma - pos));
        if (!item.empty()) {
            if (iequals(item, "unknown")) {
                m.set(RecordType::unknown);
            } else {
                RecordType t = record_type_from_name(item);
                if (t == RecordType::unknown) return std::nullopt;  // not a known name
                m.set(t);
            }
            any = true;
        }
        if (comma == BytesView::npos) break;
        pos = comma + 1;
    }
    if (!any) return std::nullopt;
    return m;
}

size_t digest_size(DigestAlgorithm alg) {
    switch (alg) {
        case DigestAlgorithm::md5: return 16;
        case DigestAlgorithm::sha1: return 20;
        case DigestAlgorithm::sha256: return 32;
    }
    return 0;
}

BytesView digest_algorithm_name(DigestAlgorithm alg) {
    switch (alg) {
        case DigestAlgorithm::md5: return "md5";
        case DigestAlgorithm::sha1: return "sha1";
        case DigestAlgorithm::sha256: return "sha256";
    }
    return "";
}

namespace {

constexpr char kBase32Alphabet[] = "ABCDEFGHIJKLMNOPQRSTUVWXYZ234567";

int base32_value(char c) {
    if (c >= 'A' && c <= 'Z') return c - 'A';
    if (c >= 'a' && c <= 'z') return c - 'a';
    if (c >= '2' && c <= '7') return c - '2' + 26;
    return -1;
}

int hex_value(char c) {
    if (c >= '0' && c <= '9') return c - '0';
    if (c >= 'a' && c <= 'f') return c - 'a' + 10;
    if (c >= 'A' && c <= 'F') return c - 'A' + 10;
    return -1;
}

}  // namespace

Bytes base32_encode(BytesView raw) {
    Bytes out;
    out.reserve((raw.size() * 8 + 4) / 5);
    uint32_t acc = 0;
    int bits = 0;
    for (unsigned char c : raw) {
        acc = (acc << 8) | c;
        bits += 8;
        while (bits >= 5) {
            bits -= 5;
            out += kBase32Alphabet[(acc >> bits) & 0x1F];
        }
    }
    if (bits > 0) out += kBase32Alphabet[(acc << (5 - bits)) & 0x1F];
    return out;
}

std::optional<Bytes> base32_decode(BytesView text) {
    while (!text.empty() && text.back() == '=') text.remove_suffix(1);
    Bytes out;
    out.reserve(text.size() * 5 / 8);
    uint32_t acc = 0;
    int bits = 0;
    for (char c : text) {
        int v = base32_value(c);
        if (v < 0) return std::nullopt;
        acc = (acc << 5) | static_cast<uint32_t>(v);
        bits += 5;
        if (bits >= 8) {
            bits -= 8;
            out += static_cast<char>((acc >> bits) & 0xFF);
        }
    }
    // leftover bits must be zero padding
    if (bits > 0 && (acc & ((1u << bits) - 1)) != 0) return std::nullopt;
    return out;
}

Bytes Digest::to_string() const {
    Bytes out(digest_algorithm_name(algorithm));
    out += ':';
    out += base32_encode(BytesView(reinterpret_cast<const char*>(value.data()), size()));
    return out;
}

Digest Digest::parse(BytesView text) {
    size_t colon = text.find(':');
    if (colon == BytesView::npos)
        throw MalformedDigest("digest missing ':' separator: " + Bytes(text));
    BytesView alg_token = trim_ows(text.substr(0, colon));
    BytesView encoded = trim_ows(text.substr(colon + 1));

    Digest d;
    if (iequals(alg_token, "md5"))
        d.algorithm = DigestAlgorithm::md5;
    else if (iequals(alg_token, "sha1") || iequals(alg_token, "sha-1"))
        d.algorithm = DigestAlgorithm::sha1;
    else if (iequals(alg_token, "sha256") || iequals(alg_token, "sha-256"))
        d.algorithm = DigestAlgorithm::sha256;
    else
        throw UnknownDigestAlgorithm("unknown digest algorithm: " + Bytes(alg_token));

    size_t want = d.size();
    // hex path: exact double length and all hex digits
    if (encoded.size() == want * 2) {
        bool all_hex = true;
        for (char c : encoded)
            if (hex_value(c) < 0) {
                all_hex = false;
                break;
            }
        if (all_hex) {
            for (size_t i = 0; i < want; ++i)
                d.value[i] = static_cast<uint8_t>(hex_value(encoded[2 * i]) * 16 +
                                                  hex_value(encoded[2 * i + 1]));
            return d;
        }
    }
    auto raw = base32_decode(encoded);
    if (!raw || raw->size() != want)
        throw MalformedDigest("digest value does not decode to " + std::to_string(want) +
                              " bytes: " + Bytes(text));
    std::copy(raw->begin(), raw->end(), d.value.begin());
    return d;
}

}  // namespace warckit
