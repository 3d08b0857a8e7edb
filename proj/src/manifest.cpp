#include "sphavg/manifest.hpp"

#include <chrono>
#include <ctime>
#include <fstream>

namespace sphavg::io {

namespace fs = std::filesystem;

void write_text_atomic(const fs::path& path, const std::string& content) {
    fs::path tmp = path;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw error("cannot open " + tmp.string() + " for writing");
        out.write(content.data(), static_cast<std::streamsize>(content.size()));
        if (!out) throw error("short write to " + tmp.string());
    }
    fs::rename(tmp, path);
}

void write_manifest(const fs::path& dir, const RunManifest& manifest) {
    const auto now = std::chrono::system_clock::now();
    const std::time_t t = std::chrono::system_clock::to_time_t(now);
    char stamp[32];
    std::strftime(stamp, sizeof(stamp), "%FT%TZ", std::gmtime(&t));
    json j{{"tool", "sphavg"},
           {"version", kToolVersion},
           {"command", manifest.command},
           {"config", manifest.config},
           {"timestamp", stamp},
           {"outputs", manifest.outputs}};
    write_text_atomic(dir / "run_manifest.json", j.dump(2) + "\n");
}

}  // namespace sphavg::io
