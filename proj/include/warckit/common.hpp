#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace warckit {

// WARC headers and payloads are byte strings; std::string is the byte container
// throughout, no text decoding is ever applied.
using Bytes = std::string;
using BytesView = std::string_view;

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class IoError : public Error {
public:
    using Error::Error;
};

/// Compressed member failed its framing or checksum integrity checks.
class CorruptMember : public Error {
public:
    CorruptMember(std::string msg, uint64_t member_offset)
        : Error(msg + " (member at offset " + std::to_string(member_offset) + ")"),
          member_offset_(member_offset) {}
    uint64_t member_offset() const { return member_offset_; }

private:
    uint64_t member_offset_;
};

class UnsupportedForCodec : public Error {
public:
    using Error::Error;
};

/// Record wire-format violation; carries the offset where parsing failed.
class MalformedRecord : public Error {
public:
    MalformedRecord(std::string msg, uint64_t offset)
        : Error(msg + " (at offset " + std::to_string(offset) + ")"), offset_(offset) {}
    uint64_t offset() const { return offset_; }

private:
    uint64_t offset_;
};

class UnknownDigestAlgorithm : public Error {
public:
    using Error::Error;
};

class MalformedDigest : public Error {
public:
    using Error::Error;
};

class MalformedHttp : public Error {
public:
    using Error::Error;
};

class LengthMismatch : public Error {
public:
    using Error::Error;
};

/// Payload access after the iterator moved past the record.
class StaleRecord : public Error {
public:
    using Error::Error;
};

inline char ascii_lower(char c) {
    return (c >= 'A' && c <= 'Z') ? static_cast<char>(c - 'A' + 'a') : c;
}

inline bool iequals(BytesView a, BytesView b) {
    if (a.size() != b.size()) return false;
    for (size_t i = 0; i < a.size(); ++i)
        if (ascii_lower(a[i]) != ascii_lower(b[i])) return false;
    return true;
}

inline bool istarts_with(BytesView s, BytesView prefix) {
    return s.size() >= prefix.size() && iequals(s.substr(0, prefix.size()), prefix);
}

inline BytesView trim_ows(BytesView s) {
    size_t b = 0, e = s.size();
    while (b < e && (s[b] == ' ' || s[b] == '\t')) ++b;
    while (e > b && (s[e - 1] == ' ' || s[e - 1] == '\t')) --e;
    return s.substr(b, e - b);
}

}  // namespace warckit
