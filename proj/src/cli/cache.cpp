#include "kch/cli/cli.hpp"

#include <atomic>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <unistd.h>

namespace kch::cli {

namespace fs = std::filesystem;

ResultCache ResultCache::from_env() {
    const char *dir = std::getenv("KCH_CACHE");
    return ResultCache(dir && *dir ? fs::path(dir) : fs::path(".kch-cache"));
}

std::string ResultCache::key(const json &request) {
    // FNV-1a over the canonical dump; json objects keep sorted keys.
    uint64_t h = 1469598103934665603ull;
    for (unsigned char c : request.dump()) {
        h ^= c;
        h *= 1099511628211ull;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

std::optional<json> ResultCache::get(const std::string &key) const {
    std::ifstream in(dir_ / (key + ".json"));
    if (!in)
        return std::nullopt;
    std::stringstream ss;
    ss << in.rdbuf();
    // Corrupt entries are treated as misses and later overwritten.
    json j = json::parse(ss.str(), nullptr, false);
    if (j.is_discarded())
        return std::nullopt;
    return j;
}

void ResultCache::put(const std::string &key, const json &value) const {
    static std::atomic<unsigned> seq{0};
    std::error_code ec;
    fs::create_directories(dir_, ec);
    if (ec)
        return;
    fs::path tmp = dir_ / (key + ".tmp." + std::to_string(::getpid()) + "." +
                           std::to_string(seq++));
    {
        std::ofstream out(tmp);
        if (!out)
            return;
        out << value.dump(2) << '\n';
        if (!out)
            return;
    }
    fs::rename(tmp, dir_ / (key + ".json"), ec);
    if (ec)
        fs::remove(tmp, ec);
}

} // namespace kch::cli
