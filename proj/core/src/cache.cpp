#include "cpsurgery/cache.hpp"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <random>
#include <sstream>
#include <system_error>

#include <unistd.h>

#ifndef CPSURGERY_VERSION
#define CPSURGERY_VERSION "dev"
#endif

namespace cpsurgery {

namespace fs = std::filesystem;

fs::path default_cache_dir()
{
    if (const char* d = std::getenv("CPSURGERY_CACHE_DIR"); d && *d)
        return fs::path(d);
    if (const char* x = std::getenv("XDG_CACHE_HOME"); x && *x)
        return fs::path(x) / "cpsurgery";
    if (const char* h = std::getenv("HOME"); h && *h)
        return fs::path(h) / ".cache" / "cpsurgery";
    return fs::temp_directory_path() / "cpsurgery-cache";
}

std::uint64_t fnv1a64(std::string_view data)
{
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : data) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return h;
}

std::string hex64(std::uint64_t v)
{
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(v));
    return buf;
}

ResultCache::ResultCache(fs::path dir) : dir_(std::move(dir)) {}

ResultCache ResultCache::from_environment()
{
    return ResultCache(default_cache_dir());
}

fs::path ResultCache::entry_path(const std::string& key) const
{
    return dir_ / (hex64(fnv1a64(key)) + ".entry");
}

// Layout: key line, checksum line, payload bytes.
std::optional<std::string> ResultCache::load(const std::string& key) const
{
    std::ifstream in(entry_path(key), std::ios::binary);
    if (!in)
        return std::nullopt;
    std::string stored_key, sum;
    if (!std::getline(in, stored_key) || !std::getline(in, sum))
        return std::nullopt;
    if (stored_key != key)
        return std::nullopt;
    std::ostringstream body;
    body << in.rdbuf();
    std::string payload = body.str();
    if (hex64(fnv1a64(payload)) != sum)
        return std::nullopt;
    return payload;
}

bool ResultCache::store(const std::string& key, const std::string& payload) const
{
    if (key.find('\n') != std::string::npos)
        return false;
    std::error_code ec;
    fs::create_directories(dir_, ec);
    if (ec)
        return false;
    const fs::path target = entry_path(key);
    std::random_device rd;
    const fs::path tmp = dir_ / (target.filename().string() + ".tmp." + std::to_string(::getpid()) + "."
                                 + hex64((std::uint64_t(rd()) << 32) | rd()));
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out)
            return false;
        out << key << '\n' << hex64(fnv1a64(payload)) << '\n' << payload;
        out.flush();
        if (!out) {
            fs::remove(tmp, ec);
            return false;
        }
    }
    fs::rename(tmp, target, ec);
    if (ec) {
        fs::remove(tmp, ec);
        return false;
    }
    return true;
}

std::string code_version()
{
    return CPSURGERY_VERSION;
}

}  // namespace cpsurgery
