#include "unimod/records.hpp"

#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace unimod {

using nlohmann::json;

namespace {

std::string format_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

json field_to_json(const Field& f) {
    return std::visit([](const auto& v) { return json(v); }, f);
}

Field field_from_json(const json& j) {
    if (j.is_boolean()) return j.get<bool>();
    if (j.is_number_integer()) return j.get<std::int64_t>();
    if (j.is_number_float()) return j.get<double>();
    return j.get<std::string>();
}

json record_to_json(const Record& r) {
    json j = json::object();
    for (const auto& [k, v] : r) j[k] = field_to_json(v);
    return j;
}

Record record_from_json(const json& j) {
    Record r;
    for (const auto& [k, v] : j.items()) r[k] = field_from_json(v);
    return r;
}

std::string field_to_csv(const Field& f) {
    if (const auto* d = std::get_if<double>(&f)) return format_double(*d);
    if (const auto* i = std::get_if<std::int64_t>(&f)) return std::to_string(*i);
    if (const auto* b = std::get_if<bool>(&f)) return *b ? "true" : "false";
    return std::get<std::string>(f);
}

Field field_from_csv(const std::string& cell) {
    if (cell == "true") return true;
    if (cell == "false") return false;
    try {
        std::size_t pos = 0;
        const std::int64_t i = std::stoll(cell, &pos);
        if (pos == cell.size() && cell.find_first_of(".eE") == std::string::npos) return i;
    } catch (...) {
    }
    try {
        std::size_t pos = 0;
        const double d = std::stod(cell, &pos);
        if (pos == cell.size()) return d;
    } catch (...) {
    }
    return cell;
}

json manifest_to_json(const RunManifest& m) {
    json j = json::object();
    j["record"] = "manifest";
    j["subcommand"] = m.subcommand;
    j["params"] = record_to_json(m.params);
    j["seed"] = m.seed;
    j["version"] = m.version;
    j["duration_s"] = m.duration_s;
    return j;
}

RunManifest manifest_from_json(const json& j) {
    RunManifest m;
    m.subcommand = j.at("subcommand").get<std::string>();
    m.params = record_from_json(j.at("params"));
    m.seed = j.at("seed").get<std::uint64_t>();
    m.version = j.at("version").get<std::string>();
    m.duration_s = j.value("duration_s", 0.0);
    return m;
}

} // namespace

RecordFormat record_format_from_string(const std::string& name) {
    if (name == "jsonl") return RecordFormat::jsonl;
    if (name == "csv") return RecordFormat::csv;
    throw std::invalid_argument("unknown format '" + name + "' (expected jsonl or csv)");
}

void write_dataset(const std::string& path, const Dataset& data, RecordFormat format,
                   const std::vector<std::string>& csv_columns) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open for writing: " + path);
    if (format == RecordFormat::jsonl) {
        out << manifest_to_json(data.manifest).dump() << "\n";
        for (const auto& r : data.records) out << record_to_json(r).dump() << "\n";
    } else {
        out << "# manifest " << manifest_to_json(data.manifest).dump() << "\n";
        for (std::size_t i = 0; i < csv_columns.size(); ++i)
            out << (i ? "," : "") << csv_columns[i];
        out << "\n";
        for (const auto& r : data.records) {
            for (std::size_t i = 0; i < csv_columns.size(); ++i) {
                if (i) out << ',';
                const auto it = r.find(csv_columns[i]);
                if (it != r.end()) out << field_to_csv(it->second);
            }
            out << "\n";
        }
    }
    if (!out) throw std::runtime_error("write failed: " + path);
}

Dataset read_dataset(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open: " + path);
    std::string line;
    if (!std::getline(in, line)) throw std::runtime_error("empty dataset file: " + path);

    Dataset data;
    if (line.rfind("# manifest ", 0) == 0) { // csv
        data.manifest = manifest_from_json(json::parse(line.substr(11)));
        std::string header;
        if (!std::getline(in, header)) return data;
        std::vector<std::string> columns;
        std::stringstream hs(header);
        std::string cell;
        while (std::getline(hs, cell, ',')) columns.push_back(cell);
        while (std::getline(in, line)) {
            if (line.empty()) continue;
            Record r;
            std::size_t start = 0, col = 0;
            while (col < columns.size()) {
                const std::size_t comma = line.find(',', start);
                const std::string value = line.substr(
                    start, comma == std::string::npos ? std::string::npos : comma - start);
                if (!value.empty()) r[columns[col]] = field_from_csv(value);
                ++col;
                if (comma == std::string::npos) break;
                start = comma + 1;
            }
            data.records.push_back(std::move(r));
        }
    } else {
        json first = json::parse(line);
        if (first.value("record", "") != "manifest")
            throw std::runtime_error("dataset file lacks a manifest line: " + path);
        data.manifest = manifest_from_json(first);
        while (std::getline(in, line)) {
            if (line.empty()) continue;
            data.records.push_back(record_from_json(json::parse(line)));
        }
    }
    return data;
}

std::vector<std::string> payload_lines(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open: " + path);
    std::vector<std::string> lines;
    std::string line;
    while (std::getline(in, line)) {
        if (line.rfind("# manifest ", 0) == 0) continue;
        if (!line.empty() && line.front() == '{' && line.find("\"record\":\"manifest\"") != std::string::npos)
            continue;
        lines.push_back(line);
    }
    return lines;
}

} // namespace unimod
