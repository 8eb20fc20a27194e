#pragma once

#include "relnodes/json_io.hpp"

#include <filesystem>
#include <functional>
#include <optional>
#include <string>

namespace relnodes {

// On-disk cache of generated tables and node polynomials.  Deterministic
// canonical forms make cache hits byte-identical to recomputation; a format
// version bump invalidates everything at once.
class Cache {
public:
    static constexpr int kFormatVersion = 1;

    // Resolution order: explicit dir, RELNODES_CACHE_DIR, then
    // $XDG_CACHE_HOME/relnodes or ~/.cache/relnodes.  Empty optional
    // disables caching entirely.
    explicit Cache(std::optional<std::filesystem::path> dir);
    static Cache resolve(const std::string& cli_dir);

    // kind in {"templates", "ext-templates", "nodepoly"}.
    Json get_or_compute(const std::string& kind, int delta,
                        const std::function<Json()>& compute) const;

    const std::optional<std::filesystem::path>& directory() const { return dir_; }

private:
    std::optional<std::filesystem::path> dir_;
};

}  // namespace relnodes
