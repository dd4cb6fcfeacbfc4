#include "warckit/io.hpp"

#include <fcntl.h>
#include <sys/stat.h>
#include <unistd.h>

#include <cerrno>
#include <cstring>

namespace warckit {

namespace {

[[noreturn]] void throw_errno(const std::string& what, const std::string& path) {
    throw IoError(what + " '" + path + "': " + std::strerror(errno));
}

}  // namespace

FileSource::FileSource(const std::string& path) {
    fd_ = ::open(path.c_str(), O_RDONLY);
    if (fd_ < 0) throw_errno("cannot open", path);
    struct stat st{};
    if (::fstat(fd_, &st) != 0) {
        ::close(fd_);
        throw_errno("cannot stat", path);
    }
    size_ = static_cast<uint64_t>(st.st_size);
}

FileSource::~FileSource() {
    if (fd_ >= 0) ::close(fd_);
}

size_t FileSource::read(uint8_t* dst, size_t cap) {
    size_t total = 0;
    while (total < cap) {
        ssize_t n = ::pread(fd_, dst + total, cap - total, static_cast<off_t>(pos_));
        if (n < 0) {
            if (errno == EINTR) continue;
            throw IoError(std::string("read failed: ") + std::strerror(errno));
        }
        if (n == 0) break;
        total += static_cast<size_t>(n);
        pos_ += static_cast<uint64_t>(n);
        break;  // one successful pread per call is enough
    }
    return total;
}

void FileSource::seek(uint64_t offset) {
    pos_ = offset;
}

size_t MemorySource::read(uint8_t* dst, size_t cap) {
    if (pos_ >= data_.size()) return 0;
    size_t n = std::min<uint64_t>(cap, data_.size() - pos_);
    std::memcpy(dst, data_.data() + pos_, n);
    pos_ += n;
    return n;
}

void MemorySource::seek(uint64_t offset) {
    pos_ = offset;
}

size_t OwnedMemorySource::read(uint8_t* dst, size_t cap) {
    if (pos_ >= data_.size()) return 0;
    size_t n = std::min<uint64_t>(cap, data_.size() - pos_);
    std::memcpy(dst, data_.data() + pos_, n);
    pos_ += n;
    return n;
}

void OwnedMemorySource::seek(uint64_t offset) {
    pos_ = offset;
}

FileSink::FileSink(const std::string& path) {
    fd_ = ::open(path.c_str(), O_WRONLY | O_CREAT | O_TRUNC, 0644);
    if (fd_ < 0) throw_errno("cannot create", path);
    buf_.reserve(1 << 16);
}

FileSink::~FileSink() {
    try {
        close();
    } catch (...) {
    }
}

void FileSink::write(const uint8_t* data, size_t len) {
    pos_ += len;
    buf_.append(reinterpret_cast<const char*>(data), len);
    if (buf_.size() >= (1 << 16)) flush();
}

void FileSink::flush() {
    size_t off = 0;
    while (off < buf_.size()) {
        ssize_t n = ::write(fd_, buf_.data() + off, buf_.size() - off);
        if (n < 0) {
            if (errno == EINTR) continue;
            throw IoError(std::string("write failed: ") + std::strerror(errno));
        }
        off += static_cast<size_t>(n);
    }
    buf_.clear();
}

void FileSink::close() {
    if (fd_ >= 0) {
        flush();
        ::close(fd_);
        fd_ = -1;
    }
}

std::unique_ptr<SeekableSource> open_file_source(const std::string& path) {
    return std::make_unique<FileSource>(path);
}

std::unique_ptr<FileSink> open_file_sink(const std::string& path) {
    return std::make_unique<FileSink>(path);
}

Bytes read_entire_file(const std::string& path) {
    FileSource src(path);
    Bytes out;
    out.resize(src.size());
    size_t off = 0;
    while (off < out.size()) {
        size_t n = src.read(reinterpret_cast<uint8_t*>(out.data()) + off, out.size() - off);
        if (n == 0) throw IoError("short read of '" + path + "'");
        off += n;
    }
    return out;
}

}  // namespace warckit
