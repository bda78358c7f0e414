#ifndef LEXIKIT_TOOLS_REPORT_HPP
#define LEXIKIT_TOOLS_REPORT_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "lexikit/analysis.hpp"

namespace lexikit::cli {

enum class Format { Json, Csv, Text };

Format parse_format(const std::string& text);

struct SpecEcho {
    uint32_t p = 0;
    uint32_t d = 0;
    std::string basis;
    std::string variant;
    uint32_t k = 0;
};

struct GriesmerInfo {
    uint64_t value = 0;
    int64_t gap = 0;  // n - value
};

struct WitnessInfo {
    uint64_t a = 0;
    std::string word;
    std::string combination;
};

struct LindimInfo {
    bool finite = false;
    uint32_t k = 0;
    std::optional<WitnessInfo> witness;
};

struct ProfileInfo {
    std::vector<uint32_t> ambient;
    std::map<std::string, uint32_t> counts;  // column digit strings, height = rows
};

struct PiInfo {
    uint64_t q = 0;
    uint32_t r = 0;
    uint64_t d_prime = 0;
    bool distributed = false;
};

struct FamilyInfo {
    std::string name;
    bool ok = false;
};

/// One deterministic report; maps serialize in sorted key order and the
/// timing field is the only run-dependent part.
struct Report {
    std::string command;
    SpecEcho spec;
    std::optional<std::vector<std::string>> words;
    std::optional<std::vector<std::string>> generators;
    std::optional<std::vector<uint32_t>> support;
    std::optional<CodeParams> params;
    std::optional<bool> linear;
    std::optional<LindimInfo> lindim;
    std::optional<GriesmerInfo> griesmer;
    std::optional<ProfileInfo> profile;
    std::optional<PiInfo> pi;
    std::optional<std::vector<uint64_t>> weights;
    std::optional<FamilyInfo> family;
    std::optional<double> timing_ms;

    std::string render(Format format) const;
};

struct TableRow {
    std::string basis;
    std::optional<uint32_t> xi;
    std::optional<uint32_t> eta;
    std::string verdict;  // "finite" | "at_least" | "error"
    std::optional<uint32_t> k;
    std::string error;  // error kind for failed rows
};

struct TableReport {
    std::string name;
    std::vector<TableRow> rows;
    std::optional<double> timing_ms;

    std::string render(Format format) const;
    bool any_failed() const;
};

std::string profile_column_key(const std::vector<uint8_t>& column);

}  // namespace lexikit::cli

#endif
