#pragma once

#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>

#include "termforge/stream.hpp"
#include "termforge/term.hpp"

namespace termforge {

// Binary term record, shared by the expression store, the sorter's spill
// runs and the wire protocol chunks:
//
//   varint body_length, then
//   sign byte (0 nonnegative, 1 negative)
//   varint numerator byte count, magnitude bytes little-endian
//   varint denominator byte count, magnitude bytes little-endian
//   varint factor count
//   per factor: varint symbol id, varint zig-zag exponent
//
// Varints are LEB128 over uint64. Magnitudes carry no leading zero bytes, so
// encoding is canonical: equal terms encode to equal bytes.

void put_varint(std::string& out, std::uint64_t value);
void put_zigzag(std::string& out, std::int64_t value);

struct ByteCursor {
    const char* data = nullptr;
    std::size_t size = 0;
    std::size_t pos = 0;

    explicit ByteCursor(std::string_view bytes) : data(bytes.data()), size(bytes.size()) {}
    bool at_end() const { return pos >= size; }
};

// All decoders throw IoError on malformed input.
std::uint64_t get_varint(ByteCursor& in);
std::int64_t get_zigzag(ByteCursor& in);

std::size_t record_size(const Term& term);
void append_record(std::string& out, const Term& term);

// Decodes one record and validates canonical form (denominator > 0, factors
// strictly ascending, no zero exponents). nullopt at a clean end of input.
std::optional<Term> read_record(ByteCursor& in);

// Slices off one whole record, length prefix included, without decoding.
std::optional<std::string_view> next_raw_record(ByteCursor& in);

// FNV-1a, 64 bit.
struct Fnv64 {
    std::uint64_t state = 1469598103934665603ull;

    void update(const void* data, std::size_t size) {
        const auto* p = static_cast<const unsigned char*>(data);
        for (std::size_t i = 0; i < size; ++i) {
            state ^= p[i];
            state *= 1099511628211ull;
        }
    }
    void update(std::string_view bytes) { update(bytes.data(), bytes.size()); }
    std::uint64_t digest() const { return state; }
};

std::string to_hex(std::uint64_t value);

// Sequential reader over a record file. Constant memory in the file length.
class RecordFileReader {
public:
    explicit RecordFileReader(const std::filesystem::path& path);
    ~RecordFileReader();
    RecordFileReader(const RecordFileReader&) = delete;
    RecordFileReader& operator=(const RecordFileReader&) = delete;

    // Appends the next whole record, length prefix included. False at EOF.
    bool next_raw(std::string& out);
    std::optional<Term> next_term();

    std::uint64_t bytes_read() const { return bytes_read_; }
    const std::filesystem::path& path() const { return path_; }

private:
    bool fill(std::size_t need);

    std::filesystem::path path_;
    std::FILE* file_ = nullptr;
    std::string buffer_;
    std::string raw_;
    std::size_t buf_pos_ = 0;
    std::uint64_t bytes_read_ = 0;
    bool eof_ = false;
};

// Buffered append-only record file.
class RecordFileWriter {
public:
    explicit RecordFileWriter(const std::filesystem::path& path);
    ~RecordFileWriter();
    RecordFileWriter(const RecordFileWriter&) = delete;
    RecordFileWriter& operator=(const RecordFileWriter&) = delete;

    void append(const Term& term);
    void append_raw(std::string_view record);
    void finish();

    std::uint64_t records() const { return records_; }
    std::uint64_t bytes_written() const { return bytes_; }
    std::uint64_t checksum() const { return fnv_.digest(); }

private:
    void flush();

    std::filesystem::path path_;
    std::FILE* file_ = nullptr;
    std::string buffer_;
    std::uint64_t records_ = 0;
    std::uint64_t bytes_ = 0;
    Fnv64 fnv_;
    bool finished_ = false;
};

// Term stream over a record file; optionally unlinks the file on destruction.
class FileTermSource final : public TermSource {
public:
    FileTermSource(const std::filesystem::path& path, bool delete_when_done);
    ~FileTermSource() override;

    std::optional<Term> next() override;

private:
    RecordFileReader reader_;
    bool delete_when_done_;
};

} // namespace termforge
