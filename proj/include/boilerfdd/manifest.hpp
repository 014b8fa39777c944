#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

namespace boilerfdd {

constexpr const char* kToolVersion = "0.1.0";

// Reproducibility record written next to every output; replaying the stored
// argv with the same tool version recreates the run byte for byte.
struct RunManifest {
    std::string command;
    std::vector<std::string> argv;
    std::string config_json = "{}";  // resolved configuration snapshot
    std::uint64_t seed = 0;
    std::string version = kToolVersion;
    std::vector<std::string> inputs;
    std::vector<std::string> outputs;
    std::string started_utc;
    double elapsed_seconds = 0.0;
};

void write_manifest(const RunManifest& manifest, const std::filesystem::path& out_dir);

}  // namespace boilerfdd
