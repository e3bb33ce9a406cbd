#include "vincyc/cache.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <stdexcept>
#include <vector>

#include <json.hpp>

namespace vincyc {

namespace {

using nlohmann::json;

bool decimal_index(const std::string& s) {
    if (s.empty() || s[0] == '0') return false;
    return std::all_of(s.begin(), s.end(),
                       [](char c) { return c >= '0' && c <= '9'; });
}

bool decimal_value(const std::string& s) {
    if (s.empty()) return false;
    if (s.size() > 1 && s[0] == '0') return false;
    return std::all_of(s.begin(), s.end(),
                       [](char c) { return c >= '0' && c <= '9'; });
}

[[noreturn]] void bad_key(const std::string& where) {
    throw std::runtime_error("cache schema violation at " + where);
}

void load_table(const json& root, const std::string& name, SequenceTable& t) {
    if (!root.contains(name)) return;
    const json& entries = root.at(name);
    if (!entries.is_object()) bad_key("\"" + name + "\" (expected object)");

    const json* prov_obj = nullptr;
    if (root.contains("provenance")) {
        const json& p = root.at("provenance");
        if (!p.is_object()) bad_key("\"provenance\" (expected object)");
        if (p.contains(name)) {
            prov_obj = &p.at(name);
            if (!prov_obj->is_object())
                bad_key("\"provenance\"/\"" + name + "\" (expected object)");
        }
    }

    std::vector<std::pair<int, mpz_class>> rows;
    for (const auto& [key, val] : entries.items()) {
        std::string where = "\"" + name + "\"/\"" + key + "\"";
        if (!decimal_index(key)) bad_key(where + " (index)");
        if (!val.is_string() || !decimal_value(val.get<std::string>()))
            bad_key(where + " (value must be a decimal string)");
        rows.emplace_back(std::stoi(key), mpz_class(val.get<std::string>()));
    }
    std::sort(rows.begin(), rows.end(),
              [](const auto& x, const auto& y) { return x.first < y.first; });

    for (const auto& [n, value] : rows) {
        std::string key = std::to_string(n);
        std::string where = "\"provenance\"/\"" + name + "\"/\"" + key + "\"";
        if (!prov_obj || !prov_obj->contains(key)) bad_key(where + " (missing)");
        const json& pv = prov_obj->at(key);
        if (!pv.is_string()) bad_key(where);
        auto prov = provenance_parse(pv.get<std::string>());
        if (!prov) bad_key(where + " (unknown provenance)");
        try {
            t.set(n, value, *prov);
        } catch (const std::exception& e) {
            throw std::runtime_error("cache entry \"" + name + "\"/\"" + key +
                                     "\": " + e.what());
        }
    }
}

json table_json(const SequenceTable& t) {
    json j = json::object();
    for (const auto& [n, v] : t.values()) j[std::to_string(n)] = v.get_str();
    return j;
}

json table_prov_json(const SequenceTable& t) {
    json j = json::object();
    for (const auto& [n, p] : t.provenance())
        j[std::to_string(n)] = provenance_str(p);
    return j;
}

}  // namespace

CacheTables load_cache(const std::string& path) {
    CacheTables tables;
    std::ifstream in(path);
    if (!in) return tables;  // absent file reads as empty tables

    json root;
    try {
        root = json::parse(in);
    } catch (const json::parse_error& e) {
        throw std::runtime_error("cache file " + path +
                                 " is not valid JSON: " + e.what());
    }
    if (!root.is_object()) bad_key("top level (expected object)");
    for (const auto& [key, val] : root.items()) {
        (void)val;
        if (key != "c" && key != "a" && key != "s" && key != "provenance")
            bad_key("\"" + key + "\" (unknown top-level key)");
    }
    load_table(root, "c", tables.c);
    load_table(root, "a", tables.a);
    load_table(root, "s", tables.s);
    return tables;
}

void save_cache(const std::string& path, const CacheTables& tables) {
    json root;
    root["c"] = table_json(tables.c);
    root["a"] = table_json(tables.a);
    root["s"] = table_json(tables.s);
    root["provenance"] = {{"c", table_prov_json(tables.c)},
                          {"a", table_prov_json(tables.a)},
                          {"s", table_prov_json(tables.s)}};

    std::string tmp = path + ".tmp";
    {
        std::ofstream out(tmp, std::ios::trunc);
        if (!out)
            throw std::runtime_error("cannot write cache temp file " + tmp);
        out << root.dump(2) << "\n";
        if (!out) throw std::runtime_error("short write to " + tmp);
    }
    if (std::rename(tmp.c_str(), path.c_str()) != 0) {
        std::remove(tmp.c_str());
        throw std::runtime_error("cannot move " + tmp + " into place");
    }
}

void merge_table(SequenceTable& dst, const SequenceTable& src) {
    for (const auto& [n, v] : src.values())
        dst.set(n, v, src.provenance_at(n));
}

std::optional<ExportFormat> export_format_parse(const std::string& name) {
    if (name == "bfile") return ExportFormat::bfile;
    if (name == "csv") return ExportFormat::csv;
    if (name == "json") return ExportFormat::json;
    return std::nullopt;
}

std::string export_table(const SequenceTable& table, ExportFormat format) {
    std::string out;
    switch (format) {
        case ExportFormat::bfile:
            for (const auto& [n, v] : table.values())
                out += std::to_string(n) + " " + v.get_str() + "\n";
            return out;
        case ExportFormat::csv:
            if (table.values().empty()) return out;
            out = "n,value,provenance\n";
            for (const auto& [n, v] : table.values())
                out += std::to_string(n) + "," + v.get_str() + "," +
                       provenance_str(table.provenance_at(n)) + "\n";
            return out;
        case ExportFormat::json: {
            json j;
            j["name"] = table.name();
            j["values"] = table_json(table);
            j["provenance"] = table_prov_json(table);
            return j.dump(2) + "\n";
        }
    }
    throw std::invalid_argument("export_table: unsupported format");
}

void export_table_to_file(const SequenceTable& table, ExportFormat format,
                          const std::string& path) {
    std::ofstream out(path, std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << export_table(table, format);
    if (!out) throw std::runtime_error("short write to " + path);
}

}  // namespace vincyc
