#include "superjack/disk_cache.hpp"

#include <cstdio>
#include <fstream>
#include <random>
#include <sstream>

#include <json.hpp>

namespace superjack {

namespace {

std::string hex64(std::uint64_t v) {
    char buf[17];
    std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(v));
    return buf;
}

}  // namespace

DiskCache::DiskCache(std::filesystem::path dir) : dir_(std::move(dir)) {
    std::error_code ec;
    std::filesystem::create_directories(dir_, ec);
    if (ec) std::fprintf(stderr, "warning: cannot create cache directory %s: %s\n", dir_.c_str(), ec.message().c_str());
}

std::uint64_t DiskCache::fnv1a(const std::string& data) {
    std::uint64_t h = 1469598103934665603ULL;
    for (unsigned char c : data) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    return h;
}

std::filesystem::path DiskCache::entry_path(const std::string& key) const {
    return dir_ / (hex64(fnv1a(key)) + ".json");
}

std::optional<std::string> DiskCache::load(const std::string& key) const {
    const std::filesystem::path path = entry_path(key);
    std::error_code ec;
    if (!std::filesystem::exists(path, ec) || ec) return std::nullopt;
    try {
        std::ifstream in(path);
        std::ostringstream buf;
        buf << in.rdbuf();
        const nlohmann::json j = nlohmann::json::parse(buf.str());
        if (j.at("key").get<std::string>() != key) return std::nullopt;
        const std::string payload = j.at("payload").get<std::string>();
        if (hex64(fnv1a(payload)) != j.at("checksum").get<std::string>()) {
            std::fprintf(stderr, "warning: cache entry %s has a bad checksum; recomputing\n", path.c_str());
            return std::nullopt;
        }
        return payload;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "warning: unreadable cache entry %s (%s); recomputing\n", path.c_str(), e.what());
        return std::nullopt;
    }
}

void DiskCache::store(const std::string& key, const std::string& payload) const {
    const nlohmann::json j = {{"key", key}, {"payload", payload}, {"checksum", hex64(fnv1a(payload))}};
    const std::filesystem::path path = entry_path(key);
    std::random_device rd;
    const std::filesystem::path tmp = path.string() + ".tmp" + std::to_string(rd());
    try {
        {
            std::ofstream out(tmp);
            out << j.dump();
            if (!out) throw std::runtime_error("short write");
        }
        std::filesystem::rename(tmp, path);
    } catch (const std::exception& e) {
        std::fprintf(stderr, "warning: cannot write cache entry %s: %s\n", path.c_str(), e.what());
        std::error_code ec;
        std::filesystem::remove(tmp, ec);
    }
}

}  // namespace superjack
