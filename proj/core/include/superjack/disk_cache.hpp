#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>

namespace superjack {

// Content-addressed JSON store for computed coefficient data. Every entry
// carries a checksum; corrupt, mismatched or unreadable files degrade to
// cache misses (with a warning on stderr), never to wrong answers.
class DiskCache {
public:
    explicit DiskCache(std::filesystem::path dir);

    // nullopt on miss or any validation failure
    std::optional<std::string> load(const std::string& key) const;
    // write-temp-then-rename, so concurrent writers leave one intact file
    void store(const std::string& key, const std::string& payload) const;

    const std::filesystem::path& dir() const { return dir_; }
    std::filesystem::path entry_path(const std::string& key) const;

    static std::uint64_t fnv1a(const std::string& data);

private:
    std::filesystem::path dir_;
};

}  // namespace superjack
