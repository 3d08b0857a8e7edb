#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "sphavg/json_io.hpp"

namespace sphavg::io {

inline constexpr const char* kToolVersion = "0.1.0";

/// Writes via a temporary file plus rename, so failed runs leave no partial
/// output behind.
void write_text_atomic(const std::filesystem::path& path, const std::string& content);

struct RunManifest {
    std::string command;
    json config;
    std::vector<std::string> outputs;
};

/// Emits run_manifest.json next to the data files. The timestamp is the only
/// non-reproducible field; data files themselves are byte-identical across
/// reruns of the same config.
void write_manifest(const std::filesystem::path& dir, const RunManifest& manifest);

}  // namespace sphavg::io
