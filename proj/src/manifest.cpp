#include "boilerfdd/manifest.hpp"

#include <fstream>

#include <json.hpp>

#include "boilerfdd/errors.hpp"

namespace boilerfdd {

void write_manifest(const RunManifest& manifest, const std::filesystem::path& out_dir) {
    std::filesystem::create_directories(out_dir);
    nlohmann::json j;
    j["command"] = manifest.command;
    j["argv"] = manifest.argv;
    j["config"] = nlohmann::json::parse(manifest.config_json, nullptr, false);
    if (j["config"].is_discarded()) j["config"] = manifest.config_json;
    j["seed"] = manifest.seed;
    j["version"] = manifest.version;
    j["inputs"] = manifest.inputs;
    j["outputs"] = manifest.outputs;
    j["started_utc"] = manifest.started_utc;
    j["elapsed_seconds"] = manifest.elapsed_seconds;

    std::ofstream out(out_dir / "run_manifest.json");
    if (!out) throw DataError("cannot write run manifest in " + out_dir.string());
    out << j.dump(2) << '\n';
}

}  // namespace boilerfdd
