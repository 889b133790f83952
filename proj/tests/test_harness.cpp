#include "crosscap/error.hpp"
#include "crosscap/harness.hpp"
#include "oracles.hpp"

#include <gtest/gtest.h>

#include <sstream>

using namespace crosscap;

namespace {

const char* kSample =
    "name,pd,known_crosscap,known_lower,known_upper\n"
    "3_1,\"X(1,4,2,5) X(3,6,4,1) X(5,2,6,3)\",1,,\n"
    "4_1,\"X(8,5,1,6) X(4,1,5,2) X(2,8,3,7) X(6,4,7,3)\",2,2,2\n"
    "kink,\"X(1,2,2,1)\",,,\n"
    "hopf,\"X(1,3,2,4) X(3,1,4,2)\",,1,1\n";

CensusLoad parse(const std::string& text) {
    std::istringstream in(text);
    return parse_census(in);
}

}  // namespace

TEST(Census, Sample) {
    const auto load = parse(kSample);
    EXPECT_TRUE(load.errors.empty());
    ASSERT_EQ(load.records.size(), 4u);
    EXPECT_EQ(load.records[1].name, "4_1");
    EXPECT_EQ(load.records[1].known_crosscap, 2);
    EXPECT_EQ(load.records[1].known_bounds, std::make_pair(2, 2));
    EXPECT_FALSE(load.records[2].known_crosscap.has_value());
    EXPECT_EQ(load.records[3].known_bounds, std::make_pair(1, 1));
    EXPECT_EQ(load.records[3].row, 5);
}

TEST(Census, BadRowsAreCollected) {
    const auto load = parse(
        "name,pd,known_crosscap,known_lower,known_upper\n"
        "good,\"X(1,2,2,1)\",,,\n"
        "bad,\"X(1,2,3)\",,,\n"
        "short,\"X(1,2,2,1)\"\n"
        "good,\"X(1,2,2,1)\",,,\n"
        "num,\"X(1,2,2,1)\",two,,\n");
    EXPECT_EQ(load.records.size(), 1u);
    ASSERT_EQ(load.errors.size(), 4u);
    EXPECT_NE(load.errors[0].find("row 3"), std::string::npos) << load.errors[0];
}

TEST(Census, EmptyAndBadHeader) {
    EXPECT_TRUE(parse("name,pd,known_crosscap,known_lower,known_upper\n").records.empty());
    try {
        (void)parse("name,pd\n");
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::BadHeader);
    }
    try {
        (void)load_census("/nonexistent/census.csv");
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::MissingFile);
    }
}

TEST(Census, BundledFileLoadsCleanly) {
    const auto load = load_census(CROSSCAP_DATA_DIR "/census.csv");
    EXPECT_TRUE(load.errors.empty());
    EXPECT_GE(load.records.size(), 250u);
}

TEST(Analyze, FigureEightIsExact) {
    const auto r = analyze(oracle::census_row("4_1"));
    EXPECT_EQ(r.T, 2);
    EXPECT_EQ(r.span, 4);
    ASSERT_TRUE(r.ak.has_value());
    EXPECT_EQ(r.ak->crosscap, 2);
    EXPECT_EQ(r.verdict, Verdict::ExactAgree);
    EXPECT_EQ(to_string(r.verdict), "EXACT-AGREE");
}

TEST(Analyze, TorusKnotBoundsInapplicable) {
    const auto r = analyze(oracle::census_row("5_1"));
    EXPECT_TRUE(r.hypotheses.torus_2p);
    for (const auto& b : r.bounds)
        if (b.source == BoundSource::JonesLink || b.source == BoundSource::JonesKnot || b.source == BoundSource::Twist)
            EXPECT_FALSE(b.applicable);
    EXPECT_NE(r.verdict, Verdict::Fail);
}

TEST(Analyze, NonAlternatingIsSkipped) {
    const auto r = analyze(oracle::census_row("8_19"));
    EXPECT_FALSE(r.ak.has_value());
    EXPECT_FALSE(r.skipped.empty());
    EXPECT_EQ(r.verdict, Verdict::Skipped);
}

TEST(Analyze, BudgetExhaustionIsSkipped) {
    BatchConfig config;
    config.search.node_budget = 2;
    const auto r = analyze(oracle::census_row("12a_1285"), config);
    EXPECT_EQ(r.verdict, Verdict::Skipped);
    EXPECT_NE(r.skipped.find("SearchBudgetExceeded"), std::string::npos) << r.skipped;
}

TEST(Analyze, WrongKnownValueFails) {
    auto rec = oracle::census_row("4_1");
    rec.known_crosscap = 3;
    EXPECT_EQ(analyze(rec).verdict, Verdict::Fail);
}

TEST(Batch, CorpusHasNoFailures) {
    const auto reports = run_batch(oracle::census());
    for (const auto& r : reports) EXPECT_NE(r.verdict, Verdict::Fail) << r.name << ' ' << (r.notes.empty() ? r.error : r.notes[0]);
}

TEST(Batch, OutputIsDeterministic) {
    std::vector<CensusRecord> subset(oracle::census().begin(), oracle::census().begin() + 60);
    BatchConfig serial;
    serial.parallel = false;
    std::ostringstream a;
    std::ostringstream b;
    std::ostringstream c;
    write_jsonl(a, run_batch(subset));
    write_jsonl(b, run_batch(subset));
    write_jsonl(c, run_batch(subset, serial));
    EXPECT_EQ(a.str(), b.str());
    EXPECT_EQ(a.str(), c.str());
}

TEST(Batch, JsonCarriesSchemaVersion) {
    const auto j = to_json(analyze(oracle::census_row("3_1")));
    EXPECT_EQ(j.at("schema").get<int>(), kReportSchemaVersion);
    EXPECT_EQ(j.at("name").get<std::string>(), "3_1");
}

TEST(Table1, Reproduces) {
    const auto t = reproduce_table1(oracle::census());
    EXPECT_TRUE(t.pass);
    EXPECT_EQ(t.rows.size(), 37u);
    for (const auto& row : t.rows) {
        EXPECT_EQ(row.T, row.expected_T) << row.name;
        EXPECT_EQ(row.crosscap, 3) << row.name;
        EXPECT_LE(row.lower, 3) << row.name;
    }
}

TEST(Table1, MissingKnots) {
    std::vector<CensusRecord> partial(oracle::census().begin(), oracle::census().begin() + 5);
    try {
        (void)reproduce_table1(partial);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::MissingKnots);
        EXPECT_NE(std::string(e.what()).find("10_85"), std::string::npos);
    }
}
