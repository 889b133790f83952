#ifndef CROSSCAP_HARNESS_HPP
#define CROSSCAP_HARNESS_HPP

#include "crosscap/adams_kindred.hpp"
#include "crosscap/bounds.hpp"
#include "crosscap/diagram.hpp"
#include "crosscap/jones.hpp"

#include "json.hpp"

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace crosscap {

inline constexpr int kReportSchemaVersion = 1;

struct CensusRecord {
    std::string name;
    std::string pd;
    std::optional<int> known_crosscap;
    std::optional<std::pair<int, int>> known_bounds;
    int row = 0;  // 1-based line number in the source file
};

struct CensusLoad {
    std::vector<CensusRecord> records;
    std::vector<std::string> errors;  // one entry per rejected row
};

// Header must be exactly `name,pd,known_crosscap,known_lower,known_upper`.
// Bad rows are collected in `errors`.  Throws MissingFile, BadHeader.
CensusLoad load_census(const std::filesystem::path& path);
CensusLoad parse_census(std::istream& in);

enum class Verdict { ExactAgree, Consistent, Fail, Skipped };

std::string to_string(Verdict v);

struct BatchConfig {
    SearchConfig search;
    int bracket_cap = kDefaultBracketCap;
    bool parallel = true;
};

struct CrosscapReport {
    std::string name;
    std::string pd;
    std::string error;  // non-empty when the record could not be analysed
    Hypotheses hypotheses;
    int T = 0;
    int span = 0;
    std::string jones;
    std::vector<BoundInterval> bounds;
    std::optional<AKResult> ak;
    std::string skipped;  // why the search did not run
    std::optional<int> known_crosscap;
    std::optional<std::pair<int, int>> known_bounds;
    Verdict verdict = Verdict::Skipped;
    std::vector<std::string> notes;  // failed consistency checks
};

CrosscapReport analyze(const CensusRecord& record, const BatchConfig& config = {});
CrosscapReport analyze(const std::string& name, const Diagram& d, const BatchConfig& config = {});

// Reports come back in input order regardless of scheduling.
std::vector<CrosscapReport> run_batch(const std::vector<CensusRecord>& records, const BatchConfig& config = {});

nlohmann::json to_json(const CrosscapReport& r);
void write_jsonl(std::ostream& out, const std::vector<CrosscapReport>& reports);
void write_summary(std::ostream& out, const std::vector<CrosscapReport>& reports);

struct Table1Row {
    std::string name;
    int expected_T = 0;
    int T = 0;
    int lower = 0;
    int upper = 0;
    int crosscap = 0;
    bool pass = false;
};

struct Table1 {
    std::vector<Table1Row> rows;
    bool pass = false;
};

// The 37 knots whose crosscap number is 3, with their T values.
const std::vector<std::pair<std::string, int>>& table1_expected();

// Throws MissingKnots listing absent names.
Table1 reproduce_table1(const std::vector<CensusRecord>& census, const BatchConfig& config = {});
void write_table1(std::ostream& out, const Table1& t);

}  // namespace crosscap

#endif  // CROSSCAP_HARNESS_HPP
