#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <variant>
#include <vector>

namespace unimod {

/// One output row: flat key -> value map. Doubles are written with 17
/// significant digits so files parse back bit-exactly.
using Field = std::variant<std::int64_t, double, std::string, bool>;
using Record = std::map<std::string, Field>;

enum class RecordFormat { jsonl, csv };

RecordFormat record_format_from_string(const std::string& name);

/// Every dataset file starts with its manifest: subcommand, the full
/// parameter set, seed and artifact version. Re-running the manifest
/// reproduces a numerically identical payload; duration_s is informational
/// and excluded from payload comparisons.
struct RunManifest {
    std::string subcommand;
    Record params;
    std::uint64_t seed = 0;
    std::string version;
    double duration_s = 0.0;
};

struct Dataset {
    RunManifest manifest;
    std::vector<Record> records;
};

void write_dataset(const std::string& path, const Dataset& data, RecordFormat format,
                   const std::vector<std::string>& csv_columns);

Dataset read_dataset(const std::string& path);

/// Payload lines (everything except the manifest), for determinism checks.
std::vector<std::string> payload_lines(const std::string& path);

} // namespace unimod
