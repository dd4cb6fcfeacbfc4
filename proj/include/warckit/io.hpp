#pragma once

#include <memory>

#include "warckit/common.hpp"

namespace warckit {

/// Pull-style byte stream. read() returns 0 only at end of stream.
class ByteSource {
public:
    virtual ~ByteSource() = default;
    virtual size_t read(uint8_t* dst, size_t cap) = 0;
};

class SeekableSource : public ByteSource {
public:
    virtual void seek(uint64_t offset) = 0;
    virtual uint64_t position() const = 0;
    virtual uint64_t size() const = 0;
};

class ByteSink {
public:
    virtual ~ByteSink() = default;
    virtual void write(const uint8_t* data, size_t len) = 0;
    virtual uint64_t position() const = 0;
    virtual void flush() {}

    void write(BytesView data) {
        write(reinterpret_cast<const uint8_t*>(data.data()), data.size());
    }
};

class FileSource final : public SeekableSource {
public:
    explicit FileSource(const std::string& path);
    ~FileSource() override;
    FileSource(const FileSource&) = delete;
    FileSource& operator=(const FileSource&) = delete;

    size_t read(uint8_t* dst, size_t cap) override;
    void seek(uint64_t offset) override;
    uint64_t position() const override { return pos_; }
    uint64_t size() const override { return size_; }

private:
    int fd_ = -1;
    uint64_t pos_ = 0;
    uint64_t size_ = 0;
};

/// Source over a caller-owned byte buffer; the buffer must outlive the source.
class MemorySource final : public SeekableSource {
public:
    explicit MemorySource(BytesView data) : data_(data) {}

    size_t read(uint8_t* dst, size_t cap) override;
    void seek(uint64_t offset) override;
    uint64_t position() const override { return pos_; }
    uint64_t size() const override { return data_.size(); }

private:
    BytesView data_;
    uint64_t pos_ = 0;
};

/// Source that owns its bytes.
class OwnedMemorySource final : public SeekableSource {
public:
    explicit OwnedMemorySource(Bytes data) : data_(std::move(data)) {}

    size_t read(uint8_t* dst, size_t cap) override;
    void seek(uint64_t offset) override;
    uint64_t position() const override { return pos_; }
    uint64_t size() const override { return data_.size(); }

private:
    Bytes data_;
    uint64_t pos_ = 0;
};

class FileSink final : public ByteSink {
public:
    explicit FileSink(const std::string& path);
    ~FileSink() override;
    FileSink(const FileSink&) = delete;
    FileSink& operator=(const FileSink&) = delete;

    void write(const uint8_t* data, size_t len) override;
    uint64_t position() const override { return pos_; }
    void flush() override;
    void close();

private:
    int fd_ = -1;
    uint64_t pos_ = 0;
    Bytes buf_;
};

class MemorySink final : public ByteSink {
public:
    explicit MemorySink(Bytes& out) : out_(out) {}

    void write(const uint8_t* data, size_t len) override {
        out_.append(reinterpret_cast<const char*>(data), len);
    }
    uint64_t position() const override { return out_.size(); }

private:
    Bytes& out_;
};

std::unique_ptr<SeekableSource> open_file_source(const std::string& path);
std::unique_ptr<FileSink> open_file_sink(const std::string& path);
Bytes read_entire_file(const std::string& path);

}  // namespace warckit
