#pragma once

#include <optional>
#include <string>

#include "vincyc/enumerate.hpp"

namespace vincyc {

/// The three sequences the cache file persists: member counts c, avoider
/// counts a and simple counts s.
struct CacheTables {
    SequenceTable c{"c"};
    SequenceTable a{"a"};
    SequenceTable s{"s"};
};

/// Reads a JSON cache of the shape
///   {"c": {"1": "1", ...}, "a": {...}, "s": {...},
///    "provenance": {"c": {"1": "enumerated", ...}, ...}}
/// with integer values as decimal strings. A missing file yields empty
/// tables; any schema violation throws std::runtime_error naming the
/// offending key.
CacheTables load_cache(const std::string& path);

/// Writes the documented schema atomically: a sibling temp file is renamed
/// over the target, so readers never see a torn file.
void save_cache(const std::string& path, const CacheTables& tables);

/// Copies every entry of src into dst. A conflicting value is a hard error
/// (SequenceTable::set throws); an equal value keeps the more trusted
/// provenance.
void merge_table(SequenceTable& dst, const SequenceTable& src);

enum class ExportFormat { bfile, csv, json };

std::optional<ExportFormat> export_format_parse(const std::string& name);

/// Renders a table: b-file lines "n value" sorted by n; CSV with header
/// n,value,provenance (header only appears when rows exist); JSON object
/// {"name", "values", "provenance"}.
std::string export_table(const SequenceTable& table, ExportFormat format);

void export_table_to_file(const SequenceTable& table, ExportFormat format,
                          const std::string& path);

}  // namespace vincyc
