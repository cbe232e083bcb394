#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>

namespace cpsurgery {

// Directory from CPSURGERY_CACHE_DIR, else $XDG_CACHE_HOME/cpsurgery, else ~/.cache/cpsurgery.
std::filesystem::path default_cache_dir();

std::uint64_t fnv1a64(std::string_view data);
std::string hex64(std::uint64_t v);

// One file per key. Entries are written to a temporary file and renamed into
// place, so a reader sees either nothing or a complete entry.
class ResultCache {
public:
    explicit ResultCache(std::filesystem::path dir);
    static ResultCache from_environment();

    const std::filesystem::path& dir() const { return dir_; }
    std::filesystem::path entry_path(const std::string& key) const;

    // nullopt on a miss, on a key collision or on a checksum mismatch
    std::optional<std::string> load(const std::string& key) const;
    bool store(const std::string& key, const std::string& payload) const;

private:
    std::filesystem::path dir_;
};

std::string code_version();

}  // namespace cpsurgery
