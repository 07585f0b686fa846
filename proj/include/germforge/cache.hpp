// Content-addressed result cache: JSON records, one file per record.
#pragma once

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <unistd.h>

#include <json.hpp>

#include "ring.hpp"

namespace germforge {

inline const char* engine_version() { return "germforge-1.0.0"; }

// FNV-1a, printed as 16 hex digits.
inline std::string content_hash(const std::string& text)
{
    unsigned long long h = 1469598103934665603ull;
    for (unsigned char c : text) {
        h ^= c;
        h *= 1099511628211ull;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", h);
    return buf;
}

struct ResultRecord {
    std::string task_id;
    std::string input_hash;
    std::string operation;
    nlohmann::json parameters;  // l, k, ordering, seed, ...
    nlohmann::json outcome;     // integer, boolean, or polynomial text
    double wall_seconds = 0;
    long peak_memory_kb = 0;
    std::string engine = engine_version();
};

inline bool operator==(const ResultRecord& a, const ResultRecord& b)
{
    return a.task_id == b.task_id && a.input_hash == b.input_hash &&
           a.operation == b.operation && a.parameters == b.parameters &&
           a.outcome == b.outcome && a.wall_seconds == b.wall_seconds &&
           a.peak_memory_kb == b.peak_memory_kb && a.engine == b.engine;
}

// Key of a record: operation, canonical input text, ordering, engine
// version, and seed all participate, so changing any of them misses.
inline std::string cache_key(const std::string& operation, const std::string& canonical_input,
                             const std::string& ordering, long seed)
{
    return content_hash(operation + "\n" + canonical_input + "\n" + ordering + "\n" +
                        std::string(engine_version()) + "\n" + std::to_string(seed));
}

inline std::string cache_directory(const std::string& override_dir = "")
{
    if (!override_dir.empty()) return override_dir;
    if (const char* env = std::getenv("GERMFORGE_CACHE")) return env;
    return "results";
}

namespace detail {

inline nlohmann::json record_payload(const ResultRecord& r)
{
    return {{"task_id", r.task_id},     {"input_hash", r.input_hash},
            {"operation", r.operation}, {"parameters", r.parameters},
            {"outcome", r.outcome},     {"wall_seconds", r.wall_seconds},
            {"peak_memory_kb", r.peak_memory_kb}, {"engine", r.engine}};
}

}  // namespace detail

// Atomic store: write aside, then rename into place.  Records are never
// overwritten; a record that already exists is left as is.
inline void cache_store(const ResultRecord& r, const std::string& dir = "")
{
    namespace fs = std::filesystem;
    fs::path root = cache_directory(dir);
    fs::create_directories(root);
    fs::path final_path = root / (r.input_hash + ".json");
    if (fs::exists(final_path)) return;
    nlohmann::json payload = detail::record_payload(r);
    std::string body = payload.dump();
    payload["checksum"] = content_hash(body);
    fs::path tmp = root / (r.input_hash + ".json.tmp." + std::to_string(::getpid()));
    {
        std::ofstream out(tmp);
        out << payload.dump(2) << "\n";
    }
    std::error_code ec;
    fs::rename(tmp, final_path, ec);
    if (ec) fs::remove(tmp, ec);
}

// Lookup by key.  A record that fails its checksum is quarantined and
// treated as a miss.
inline std::optional<ResultRecord> cache_lookup(const std::string& input_hash,
                                                const std::string& dir = "")
{
    namespace fs = std::filesystem;
    fs::path path = fs::path(cache_directory(dir)) / (input_hash + ".json");
    std::ifstream in(path);
    if (!in) return std::nullopt;
    auto quarantine = [&path]() {
        std::error_code ec;
        fs::rename(path, fs::path(path.string() + ".quarantined"), ec);
    };
    nlohmann::json payload = nlohmann::json::parse(in, nullptr, false);
    if (payload.is_discarded() || !payload.contains("checksum")) {
        quarantine();
        return std::nullopt;
    }
    std::string checksum = payload["checksum"];
    payload.erase("checksum");
    if (content_hash(payload.dump()) != checksum) {
        quarantine();
        return std::nullopt;
    }
    ResultRecord r;
    try {
        r.task_id = payload.at("task_id");
        r.input_hash = payload.at("input_hash");
        r.operation = payload.at("operation");
        r.parameters = payload.at("parameters");
        r.outcome = payload.at("outcome");
        r.wall_seconds = payload.at("wall_seconds");
        r.peak_memory_kb = payload.at("peak_memory_kb");
        r.engine = payload.at("engine");
    } catch (const nlohmann::json::exception&) {
        quarantine();
        return std::nullopt;
    }
    return r;
}

}  // namespace germforge
