#include "termforge/codec.hpp"

#include <cstring>
#include <iterator>

#include "termforge/errors.hpp"

namespace termforge {

namespace {

constexpr std::size_t kMaxRecordBytes = std::size_t{1} << 30;
constexpr std::size_t kFileBufferBytes = 1 << 16;

std::size_t varint_size(std::uint64_t value) {
    std::size_t n = 1;
    while (value >= 0x80) {
        value >>= 7;
        ++n;
    }
    return n;
}

std::uint64_t zigzag_encode(std::int64_t value) {
    return (static_cast<std::uint64_t>(value) << 1) ^ static_cast<std::uint64_t>(value >> 63);
}

std::int64_t zigzag_decode(std::uint64_t value) {
    return static_cast<std::int64_t>(value >> 1) ^ -static_cast<std::int64_t>(value & 1);
}

std::size_t magnitude_bytes(const BigInt& value) {
    if (value.is_zero()) {
        return 0;
    }
    return boost::multiprecision::msb(value) / 8 + 1;
}

void put_magnitude(std::string& out, const BigInt& value) {
    put_varint(out, magnitude_bytes(value));
    if (!value.is_zero()) {
        boost::multiprecision::export_bits(value, std::back_inserter(out), 8, false);
    }
}

BigInt get_magnitude(ByteCursor& in) {
    std::uint64_t len = get_varint(in);
    if (len > in.size - in.pos) {
        throw IoError("corrupt record: magnitude overruns input");
    }
    BigInt value = 0;
    if (len > 0) {
        const auto* first = reinterpret_cast<const unsigned char*>(in.data + in.pos);
        boost::multiprecision::import_bits(value, first, first + len, 8, false);
        in.pos += len;
        if (magnitude_bytes(value) != len) {
            throw IoError("corrupt record: magnitude has leading zero bytes");
        }
    }
    return value;
}

} // namespace

void put_varint(std::string& out, std::uint64_t value) {
    while (value >= 0x80) {
        out.push_back(static_cast<char>((value & 0x7f) | 0x80));
        value >>= 7;
    }
    out.push_back(static_cast<char>(value));
}

void put_zigzag(std::string& out, std::int64_t value) {
    put_varint(out, zigzag_encode(value));
}

std::uint64_t get_varint(ByteCursor& in) {
    std::uint64_t value = 0;
    int shift = 0;
    while (true) {
        if (in.at_end()) {
            throw IoError("corrupt record: truncated varint");
        }
        auto byte = static_cast<unsigned char>(in.data[in.pos++]);
        if (shift == 63 && byte > 1) {
            throw IoError("corrupt record: varint overflow");
        }
        value |= static_cast<std::uint64_t>(byte & 0x7f) << shift;
        if ((byte & 0x80) == 0) {
            return value;
        }
        shift += 7;
        if (shift > 63) {
            throw IoError("corrupt record: varint overflow");
        }
    }
}

std::int64_t get_zigzag(ByteCursor& in) {
    return zigzag_decode(get_varint(in));
}

std::size_t record_size(const Term& term) {
    std::size_t body = 1;
    std::size_t num = magnitude_bytes(numerator(term.coeff));
    std::size_t den = magnitude_bytes(denominator(term.coeff));
    body += varint_size(num) + num;
    body += varint_size(den) + den;
    body += varint_size(term.factors.size());
    for (const Factor& f : term.factors) {
        body += varint_size(f.symbol);
        body += varint_size(zigzag_encode(f.exponent));
    }
    return varint_size(body) + body;
}

void append_record(std::string& out, const Term& term) {
    std::string body;
    body.reserve(24 + term.factors.size() * 4);
    body.push_back(term.coeff < 0 ? '\1' : '\0');
    put_magnitude(body, abs(numerator(term.coeff)));
    put_magnitude(body, denominator(term.coeff));
    put_varint(body, term.factors.size());
    for (const Factor& f : term.factors) {
        put_varint(body, f.symbol);
        put_zigzag(body, f.exponent);
    }
    put_varint(out, body.size());
    out += body;
}

std::optional<Term> read_record(ByteCursor& in) {
    if (in.at_end()) {
        return std::nullopt;
    }
    std::uint64_t body_len = get_varint(in);
    if (body_len > kMaxRecordBytes || body_len > in.size - in.pos) {
        throw IoError("corrupt record: truncated body");
    }
    ByteCursor body(std::string_view(in.data + in.pos, body_len));
    in.pos += body_len;

    if (body.at_end()) {
        throw IoError("corrupt record: empty body");
    }
    char sign = body.data[body.pos++];
    if (sign != 0 && sign != 1) {
        throw IoError("corrupt record: bad sign byte");
    }
    BigInt num = get_magnitude(body);
    BigInt den = get_magnitude(body);
    if (den.is_zero()) {
        throw IoError("corrupt record: zero denominator");
    }
    if (sign == 1) {
        num = -num;
    }
    std::uint64_t nfactors = get_varint(body);
    Term term;
    term.coeff = Coefficient(std::move(num), std::move(den));
    term.factors.reserve(nfactors);
    std::int64_t prev_symbol = -1;
    for (std::uint64_t i = 0; i < nfactors; ++i) {
        std::uint64_t symbol = get_varint(body);
        std::int64_t exponent = get_zigzag(body);
        if (static_cast<std::int64_t>(symbol) <= prev_symbol) {
            throw IoError("corrupt record: factors not strictly ascending");
        }
        if (exponent == 0) {
            throw IoError("corrupt record: zero exponent stored");
        }
        prev_symbol = static_cast<std::int64_t>(symbol);
        term.factors.push_back({static_cast<SymbolId>(symbol), exponent});
    }
    if (!body.at_end()) {
        throw IoError("corrupt record: trailing bytes in body");
    }
    return term;
}

std::optional<std::string_view> next_raw_record(ByteCursor& in) {
    if (in.at_end()) {
        return std::nullopt;
    }
    std::size_t start = in.pos;
    std::uint64_t body_len = get_varint(in);
    if (body_len > kMaxRecordBytes || body_len > in.size - in.pos) {
        throw IoError("corrupt record: truncated body");
    }
    in.pos += body_len;
    return std::string_view(in.data + start, in.pos - start);
}

std::string to_hex(std::uint64_t value) {
    static const char* digits = "0123456789abcdef";
    std::string s(16, '0');
    for (int i = 15; i >= 0; --i) {
        s[i] = digits[value & 0xf];
        value >>= 4;
    }
    return s;
}

RecordFileReader::RecordFileReader(const std::filesystem::path& path) : path_(path) {
    file_ = std::fopen(path.c_str(), "rb");
    if (file_ == nullptr) {
        throw IoError("cannot open " + path.string());
    }
    buffer_.reserve(kFileBufferBytes);
}

RecordFileReader::~RecordFileReader() {
    if (file_ != nullptr) {
        std::fclose(file_);
    }
}

bool RecordFileReader::fill(std::size_t need) {
    if (buffer_.size() - buf_pos_ >= need) {
        return true;
    }
    buffer_.erase(0, buf_pos_);
    buf_pos_ = 0;
    while (buffer_.size() < need && !eof_) {
        char chunk[kFileBufferBytes];
        std::size_t got = std::fread(chunk, 1, sizeof(chunk), file_);
        if (got == 0) {
            if (std::ferror(file_) != 0) {
                throw IoError("read failure on " + path_.string());
            }
            eof_ = true;
            break;
        }
        buffer_.append(chunk, got);
    }
    return buffer_.size() - buf_pos_ >= need;
}

bool RecordFileReader::next_raw(std::string& out) {
    // Varint prefix first, one byte at a time.
    std::size_t prefix_len = 0;
    std::uint64_t body_len = 0;
    int shift = 0;
    while (true) {
        if (!fill(prefix_len + 1)) {
            if (prefix_len == 0) {
                return false;
            }
            throw IoError("truncated record in " + path_.string());
        }
        auto byte = static_cast<unsigned char>(buffer_[buf_pos_ + prefix_len]);
        ++prefix_len;
        body_len |= static_cast<std::uint64_t>(byte & 0x7f) << shift;
        if ((byte & 0x80) == 0) {
            break;
        }
        shift += 7;
        if (shift > 63) {
            throw IoError("corrupt record length in " + path_.string());
        }
    }
    if (body_len > kMaxRecordBytes) {
        throw IoError("corrupt record length in " + path_.string());
    }
    if (!fill(prefix_len + body_len)) {
        throw IoError("truncated record in " + path_.string());
    }
    out.append(buffer_, buf_pos_, prefix_len + body_len);
    buf_pos_ += prefix_len + static_cast<std::size_t>(body_len);
    bytes_read_ += prefix_len + body_len;
    return true;
}

std::optional<Term> RecordFileReader::next_term() {
    raw_.clear();
    if (!next_raw(raw_)) {
        return std::nullopt;
    }
    ByteCursor cursor{std::string_view(raw_)};
    std::optional<Term> term = read_record(cursor);
    if (!term || !cursor.at_end()) {
        throw IoError("corrupt record in " + path_.string());
    }
    return term;
}

RecordFileWriter::RecordFileWriter(const std::filesystem::path& path) : path_(path) {
    file_ = std::fopen(path.c_str(), "wb");
    if (file_ == nullptr) {
        throw IoError("cannot create " + path.string());
    }
    buffer_.reserve(kFileBufferBytes);
}

RecordFileWriter::~RecordFileWriter() {
    if (file_ != nullptr) {
        std::fclose(file_);
    }
}

void RecordFileWriter::flush() {
    if (!buffer_.empty()) {
        if (std::fwrite(buffer_.data(), 1, buffer_.size(), file_) != buffer_.size()) {
            throw IoError("write failure on " + path_.string());
        }
        buffer_.clear();
    }
}

void RecordFileWriter::append(const Term& term) {
    std::size_t before = buffer_.size();
    append_record(buffer_, term);
    fnv_.update(buffer_.data() + before, buffer_.size() - before);
    bytes_ += buffer_.size() - before;
    ++records_;
    if (buffer_.size() >= kFileBufferBytes) {
        flush();
    }
}

void RecordFileWriter::append_raw(std::string_view record) {
    buffer_ += record;
    fnv_.update(record);
    bytes_ += record.size();
    ++records_;
    if (buffer_.size() >= kFileBufferBytes) {
        flush();
    }
}

void RecordFileWriter::finish() {
    if (finished_) {
        return;
    }
    flush();
    if (std::fflush(file_) != 0 || std::fclose(file_) != 0) {
        file_ = nullptr;
        throw IoError("write failure on " + path_.string());
    }
    file_ = nullptr;
    finished_ = true;
}

FileTermSource::FileTermSource(const std::filesystem::path& path, bool delete_when_done)
    : reader_(path), delete_when_done_(delete_when_done) {}

FileTermSource::~FileTermSource() {
    if (delete_when_done_) {
        std::error_code ec;
        std::filesystem::remove(reader_.path(), ec);
    }
}

std::optional<Term> FileTermSource::next() {
    return reader_.next_term();
}

} // namespace termforge
