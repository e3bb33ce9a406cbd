#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <stdexcept>

#include <json.hpp>

#include "vincyc/cache.hpp"

using namespace vincyc;

namespace {

std::filesystem::path temp_path(const char* name) {
    return std::filesystem::temp_directory_path() / name;
}

void write_file(const std::filesystem::path& p, const std::string& content) {
    std::ofstream out(p, std::ios::trunc);
    out << content;
}

std::string slurp(const std::filesystem::path& p) {
    std::ifstream in(p);
    return std::string(std::istreambuf_iterator<char>(in),
                       std::istreambuf_iterator<char>());
}

}  // namespace

TEST_CASE("cache round trip preserves values and provenance") {
    CacheTables t;
    t.c.set(1, 1, Provenance::enumerated);
    t.c.set(2, 1, Provenance::enumerated);
    t.c.set(3, 2, Provenance::recurrence);
    t.a.set(1, 1, Provenance::enumerated);
    t.s.set(2, 2, Provenance::paper_table);
    t.s.set(3, 0, Provenance::paper_table);

    auto path = temp_path("vincyc_cache_roundtrip.json");
    std::filesystem::remove(path);
    save_cache(path.string(), t);
    CHECK_FALSE(std::filesystem::exists(path.string() + ".tmp"));

    CacheTables back = load_cache(path.string());
    CHECK(back.c.values() == t.c.values());
    CHECK(back.a.values() == t.a.values());
    CHECK(back.s.values() == t.s.values());
    CHECK(back.c.provenance_at(3) == Provenance::recurrence);
    CHECK(back.s.provenance_at(2) == Provenance::paper_table);

    // Saving over an existing file replaces it in place.
    back.c.set(4, 4, Provenance::enumerated);
    save_cache(path.string(), back);
    CHECK(load_cache(path.string()).c.at(4) == 4);
    std::filesystem::remove(path);
}

TEST_CASE("a missing cache file reads as empty tables") {
    CacheTables t = load_cache("/tmp/vincyc-no-such-cache-file.json");
    CHECK(t.c.values().empty());
    CHECK(t.a.values().empty());
    CHECK(t.s.values().empty());
}

TEST_CASE("schema violations name the offending key") {
    auto path = temp_path("vincyc_cache_bad.json");
    auto expect_error = [&](const std::string& content, const std::string& needle) {
        write_file(path, content);
        try {
            load_cache(path.string());
            FAIL_CHECK("expected a schema error for: " << content);
        } catch (const std::runtime_error& e) {
            CHECK(std::string(e.what()).find(needle) != std::string::npos);
        }
    };

    expect_error("{ not json", "not valid JSON");
    expect_error("[]", "top level");
    expect_error(R"({"z": {}})", "\"z\"");
    expect_error(R"({"c": []})", "\"c\"");
    expect_error(R"({"c": {"01": "1"}, "provenance": {"c": {"01": "enumerated"}}})",
                 "\"c\"/\"01\"");
    expect_error(R"({"c": {"1": 5}, "provenance": {"c": {"1": "enumerated"}}})",
                 "decimal string");
    expect_error(R"({"c": {"1": "12x"}, "provenance": {"c": {"1": "enumerated"}}})",
                 "decimal string");
    expect_error(R"({"c": {"1": "1"}})", "missing");
    expect_error(R"({"c": {"1": "1"}, "provenance": {"c": {"1": "guesswork"}}})",
                 "unknown provenance");
    // Rows must stay contiguous from the table's base index.
    expect_error(
        R"({"c": {"1": "1", "3": "2"},
            "provenance": {"c": {"1": "enumerated", "3": "enumerated"}}})",
        "cache entry \"c\"/\"3\"");

    std::filesystem::remove(path);
}

TEST_CASE("merging tables") {
    SequenceTable dst("c"), src("c");
    dst.set(1, 1, Provenance::recurrence);
    src.set(1, 1, Provenance::enumerated);
    src.set(2, 1, Provenance::enumerated);
    merge_table(dst, src);
    CHECK(dst.at(2) == 1);
    CHECK(dst.provenance_at(1) == Provenance::enumerated);  // upgraded

    SequenceTable clash("c");
    clash.set(1, 7, Provenance::enumerated);
    CHECK_THROWS_AS(merge_table(dst, clash), std::runtime_error);
}

TEST_CASE("b-file export") {
    SequenceTable c("c");
    const long v[] = {1, 1, 2, 4, 10, 24, 66, 178};
    for (int n = 1; n <= 8; ++n) c.set(n, v[n - 1], Provenance::enumerated);
    CHECK(export_table(c, ExportFormat::bfile) ==
          "1 1\n2 1\n3 2\n4 4\n5 10\n6 24\n7 66\n8 178\n");
}

TEST_CASE("csv export") {
    SequenceTable s("s");
    CHECK(export_table(s, ExportFormat::csv) == "");  // headerless when empty
    s.set(2, 2, Provenance::paper_table);
    s.set(3, 0, Provenance::recurrence);
    CHECK(export_table(s, ExportFormat::csv) ==
          "n,value,provenance\n2,2,paper-table\n3,0,recurrence\n");
}

TEST_CASE("json export") {
    SequenceTable c("c");
    c.set(1, 1, Provenance::enumerated);
    c.set(2, 1, Provenance::enumerated);
    c.set(3, 2, Provenance::recurrence);
    nlohmann::json j = nlohmann::json::parse(export_table(c, ExportFormat::json));
    CHECK(j["name"] == "c");
    CHECK(j["values"]["3"] == "2");
    CHECK(j["provenance"]["1"] == "enumerated");
    CHECK(j["provenance"]["3"] == "recurrence");
}

TEST_CASE("format names") {
    CHECK(export_format_parse("bfile") == ExportFormat::bfile);
    CHECK(export_format_parse("csv") == ExportFormat::csv);
    CHECK(export_format_parse("json") == ExportFormat::json);
    CHECK_FALSE(export_format_parse("b-file").has_value());
    CHECK_FALSE(export_format_parse("").has_value());
}

TEST_CASE("export to file") {
    SequenceTable c("c");
    c.set(1, 1, Provenance::enumerated);
    auto path = temp_path("vincyc_export_test.txt");
    export_table_to_file(c, ExportFormat::bfile, path.string());
    CHECK(slurp(path) == "1 1\n");
    std::filesystem::remove(path);

    CHECK_THROWS_AS(
        export_table_to_file(c, ExportFormat::bfile, "/no-such-dir/x.txt"),
        std::runtime_error);
}
