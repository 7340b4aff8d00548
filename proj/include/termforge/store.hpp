#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <memory>
#include <string>

#include "termforge/codec.hpp"
#include "termforge/stream.hpp"

namespace termforge {

struct ManifestEntry {
    std::string file;
    std::uint64_t terms = 0;
    std::uint64_t bytes = 0;
    std::uint64_t checksum = 0;
};

// Raw view over a stored expression, record by record, for code paths that
// move bytes without decoding (chunk dealing). Verifies size up front and the
// checksum once the stream is exhausted.
class RawExpressionSource {
public:
    virtual ~RawExpressionSource() = default;
    // Appends one record to `out`; false once the stream is done and verified.
    virtual bool next_raw(std::string& out) = 0;
};

// Named, disk-backed sorted term streams persisting across modules. One file
// per expression plus a JSON manifest, both replaced atomically.
class ExpressionStore {
public:
    explicit ExpressionStore(std::filesystem::path directory);

    // Streams `src` to disk, enforcing strictly ascending keys. Constant
    // memory in the stream length.
    ManifestEntry write_expression(const std::string& name, TermSource& src);

    std::unique_ptr<TermSource> read_expression(const std::string& name) const;
    std::unique_ptr<RawExpressionSource> read_raw(const std::string& name) const;

    bool contains(const std::string& name) const { return entries_.count(name) != 0; }
    const ManifestEntry& entry(const std::string& name) const;
    const std::map<std::string, ManifestEntry>& entries() const { return entries_; }
    const std::filesystem::path& directory() const { return dir_; }

private:
    void load_manifest();
    void save_manifest() const;

    std::filesystem::path dir_;
    std::map<std::string, ManifestEntry> entries_;
};

} // namespace termforge
