#include "relnodes/cache.hpp"

#include <cstdlib>
#include <fstream>

namespace relnodes {

namespace fs = std::filesystem;

Cache::Cache(std::optional<fs::path> dir) : dir_(std::move(dir)) {}

Cache Cache::resolve(const std::string& cli_dir) {
    if (cli_dir == "none") return Cache(std::nullopt);
    if (!cli_dir.empty()) return Cache(fs::path(cli_dir));
    if (const char* env = std::getenv("RELNODES_CACHE_DIR")) {
        if (std::string(env) == "none") return Cache(std::nullopt);
        return Cache(fs::path(env));
    }
    if (const char* xdg = std::getenv("XDG_CACHE_HOME")) return Cache(fs::path(xdg) / "relnodes");
    if (const char* home = std::getenv("HOME")) return Cache(fs::path(home) / ".cache" / "relnodes");
    return Cache(std::nullopt);
}

Json Cache::get_or_compute(const std::string& kind, int delta,
                           const std::function<Json()>& compute) const {
    if (!dir_) return compute();
    fs::path file =
        *dir_ / ("v" + std::to_string(kFormatVersion)) / (kind + "-" + std::to_string(delta) + ".json");
    std::error_code ec;
    if (fs::exists(file, ec)) {
        std::ifstream in(file);
        Json j = Json::parse(in, nullptr, false);
        if (!j.is_discarded() && j.value("version", -1) == kFormatVersion) return j.at("payload");
    }
    Json payload = compute();
    fs::create_directories(file.parent_path(), ec);
    if (!ec) {
        Json wrapped;
        wrapped["version"] = kFormatVersion;
        wrapped["kind"] = kind;
        wrapped["delta"] = delta;
        wrapped["payload"] = payload;
        std::ofstream out(file);
        out << wrapped.dump(2) << "\n";
    }
    return payload;
}

}  // namespace relnodes
