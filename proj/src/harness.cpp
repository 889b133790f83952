#include "crosscap/harness.hpp"

#include "crosscap/error.hpp"
#include "crosscap/surfaces.hpp"

#include <boost/tokenizer.hpp>

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <istream>
#include <ostream>
#include <set>

namespace crosscap {

namespace {

constexpr const char* kHeader = "name,pd,known_crosscap,known_lower,known_upper";

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return {};
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

std::optional<int> parse_cell(const std::string& cell, const char* what) {
    const std::string t = trim(cell);
    if (t.empty()) return std::nullopt;
    std::size_t used = 0;
    int v = 0;
    try {
        v = std::stoi(t, &used);
    } catch (const std::exception&) {
        used = 0;
    }
    if (used != t.size()) throw Error(ErrorKind::MalformedCode, std::string(what) + " is not an integer: '" + t + "'");
    return v;
}

void settle_verdict(CrosscapReport& r) {
    r.notes.clear();
    if (!r.error.empty()) {
        r.verdict = Verdict::Fail;
        return;
    }
    bool exact = false;
    auto check = [&](int cc) {
        for (const auto& b : r.bounds) {
            if (!b.applicable) continue;
            if (!b.contains(cc))
                r.notes.push_back("crosscap " + std::to_string(cc) + " outside " + to_string(b.source) + " [" +
                                  std::to_string(b.lower) + "," + std::to_string(b.upper) + "]");
            if (b.lower == b.upper && b.lower == cc) exact = true;
        }
        if (r.known_crosscap) {
            if (*r.known_crosscap != cc)
                r.notes.push_back("crosscap " + std::to_string(cc) + " differs from known " + std::to_string(*r.known_crosscap));
            else
                exact = true;
        }
        if (r.known_bounds && (cc < r.known_bounds->first || cc > r.known_bounds->second))
            r.notes.push_back("crosscap " + std::to_string(cc) + " outside known bounds");
    };
    if (r.ak) check(r.ak->crosscap);
    // Our own intervals must meet the known range even without an exact value.
    for (const auto& b : r.bounds) {
        if (!b.applicable) continue;
        if (b.lower > b.upper) r.notes.push_back(to_string(b.source) + " interval is empty");
        if (r.known_crosscap && !b.contains(*r.known_crosscap))
            r.notes.push_back("known crosscap outside " + to_string(b.source));
        if (r.known_bounds && (b.upper < r.known_bounds->first || b.lower > r.known_bounds->second))
            r.notes.push_back(to_string(b.source) + " misses the known bounds");
    }
    std::sort(r.notes.begin(), r.notes.end());
    r.notes.erase(std::unique(r.notes.begin(), r.notes.end()), r.notes.end());
    if (!r.notes.empty())
        r.verdict = Verdict::Fail;
    else if (!r.ak)
        r.verdict = Verdict::Skipped;
    else
        r.verdict = exact ? Verdict::ExactAgree : Verdict::Consistent;
}

}  // namespace

CensusLoad parse_census(std::istream& in) {
    CensusLoad out;
    std::string line;
    if (!std::getline(in, line) || trim(line) != kHeader)
        throw Error(ErrorKind::BadHeader, "expected header '" + std::string(kHeader) + "'");
    int row = 1;
    std::set<std::string> names;
    using Tokenizer = boost::tokenizer<boost::escaped_list_separator<char>>;
    while (std::getline(in, line)) {
        ++row;
        if (trim(line).empty()) continue;
        try {
            std::vector<std::string> cells;
            for (const auto& cell : Tokenizer(line, boost::escaped_list_separator<char>('\\', ',', '"'))) cells.push_back(cell);
            if (cells.size() != 5) throw Error(ErrorKind::MalformedCode, "expected 5 columns, found " + std::to_string(cells.size()));
            CensusRecord r;
            r.row = row;
            r.name = trim(cells[0]);
            r.pd = trim(cells[1]);
            if (r.name.empty()) throw Error(ErrorKind::MalformedCode, "empty name");
            if (!names.insert(r.name).second) throw Error(ErrorKind::MalformedCode, "duplicate name " + r.name);
            r.known_crosscap = parse_cell(cells[2], "known_crosscap");
            const auto lo = parse_cell(cells[3], "known_lower");
            const auto hi = parse_cell(cells[4], "known_upper");
            if (lo.has_value() != hi.has_value()) throw Error(ErrorKind::MalformedCode, "known bounds need both ends");
            if (lo) r.known_bounds = std::make_pair(*lo, *hi);
            const Diagram d = parse_pd(r.pd);
            if (!is_connected(d)) throw Error(ErrorKind::Disconnected, "diagram is not connected");
            out.records.push_back(std::move(r));
        } catch (const std::exception& e) {
            out.errors.push_back("row " + std::to_string(row) + ": " + e.what());
        }
    }
    return out;
}

CensusLoad load_census(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorKind::MissingFile, "cannot open " + path.string());
    return parse_census(in);
}

std::string to_string(Verdict v) {
    switch (v) {
        case Verdict::ExactAgree: return "EXACT-AGREE";
        case Verdict::Consistent: return "CONSISTENT";
        case Verdict::Fail: return "FAIL";
        case Verdict::Skipped: return "SKIPPED";
    }
    return "UNKNOWN";
}

CrosscapReport analyze(const std::string& name, const Diagram& d, const BatchConfig& config) {
    CrosscapReport r;
    r.name = name;
    r.pd = d.serialize();
    r.hypotheses = Hypotheses::of(d);
    const auto& h = r.hypotheses;

    const JonesData j = jones(d, config.bracket_cap);
    r.T = j.T;
    r.span = j.span_t;
    r.jones = j.jones_t ? j.jones_t->to_string() : j.jones_A.to_string();

    int seifert_genus = 0;
    if (h.k == 1 && h.c > 0) {
        const auto seifert = seifert_states(d).front();
        seifert_genus = (1 - (state_circles(d, seifert) - h.c)) / 2;
    }
    r.bounds = applicable_bounds(h, r.T, r.span, seifert_genus);

    if (!h.connected) {
        r.skipped = "diagram is split";
    } else if (!h.alternating) {
        r.skipped = "diagram is not alternating";
    } else {
        try {
            r.ak = crosscap_alternating(d, config.search);
        } catch (const Error& e) {
            if (e.kind() != ErrorKind::SearchBudgetExceeded) throw;
            r.skipped = e.what();
        }
    }

    settle_verdict(r);
    return r;
}

CrosscapReport analyze(const CensusRecord& record, const BatchConfig& config) {
    CrosscapReport r;
    try {
        r = analyze(record.name, parse_pd(record.pd), config);
    } catch (const std::exception& e) {
        r = CrosscapReport{};
        r.name = record.name;
        r.error = e.what();
    }
    r.pd = record.pd;
    r.known_crosscap = record.known_crosscap;
    r.known_bounds = record.known_bounds;
    settle_verdict(r);
    return r;
}

std::vector<CrosscapReport> run_batch(const std::vector<CensusRecord>& records, const BatchConfig& config) {
    std::vector<CrosscapReport> out(records.size());
    const long long n = static_cast<long long>(records.size());
    // analyze() never throws, so no exception can escape a worker.
#pragma omp parallel for schedule(dynamic, 1) if (config.parallel)
    for (long long i = 0; i < n; ++i) out[static_cast<std::size_t>(i)] = analyze(records[static_cast<std::size_t>(i)], config);
    return out;
}

nlohmann::json to_json(const CrosscapReport& r) {
    using nlohmann::json;
    json j;
    j["schema"] = kReportSchemaVersion;
    j["name"] = r.name;
    j["pd"] = r.pd;
    if (!r.error.empty()) {
        j["error"] = r.error;
        j["verdict"] = to_string(r.verdict);
        return j;
    }
    const auto& h = r.hypotheses;
    j["k"] = h.k;
    j["c"] = h.c;
    j["t"] = h.t;
    j["is_alternating"] = h.alternating;
    j["is_prime"] = h.prime;
    j["is_twist_reduced"] = h.twist_reduced;
    j["is_adequate"] = h.adequate;
    j["torus_2p"] = h.torus_2p;
    j["T"] = r.T;
    j["span"] = r.span;
    j["jones"] = r.jones;
    json bounds = json::array();
    for (const auto& b : r.bounds) {
        json e{{"source", to_string(b.source)}, {"applicable", b.applicable}};
        if (b.applicable) {
            e["lower"] = b.lower;
            e["upper"] = b.upper;
        } else {
            e["reason"] = b.reason;
        }
        bounds.push_back(std::move(e));
    }
    j["bounds"] = std::move(bounds);
    if (r.ak) {
        const auto& a = *r.ak;
        json w = json::array();
        for (const auto& s : a.witness_states()) w.push_back(s.to_string());
        j["ak"] = json{{"max_chi", a.max_chi},
                       {"nonorientable_at_max", a.nonorientable_at_max},
                       {"orientable_at_max", a.orientable_at_max},
                       {"crosscap", a.crosscap},
                       {"genus", a.genus ? json(*a.genus) : json(nullptr)},
                       {"nodes", a.stats.nodes},
                       {"witnesses", std::move(w)}};
    } else {
        j["ak"] = nullptr;
        j["skipped"] = r.skipped;
    }
    j["known_crosscap"] = r.known_crosscap ? json(*r.known_crosscap) : json(nullptr);
    j["known_bounds"] = r.known_bounds ? json::array({r.known_bounds->first, r.known_bounds->second}) : json(nullptr);
    j["verdict"] = to_string(r.verdict);
    if (!r.notes.empty()) j["notes"] = r.notes;
    return j;
}

void write_jsonl(std::ostream& out, const std::vector<CrosscapReport>& reports) {
    for (const auto& r : reports) out << to_json(r).dump() << '\n';
}

void write_summary(std::ostream& out, const std::vector<CrosscapReport>& reports) {
    std::size_t counts[4] = {0, 0, 0, 0};
    out << std::left << std::setw(12) << "name" << std::setw(4) << "c" << std::setw(4) << "t" << std::setw(4) << "T"
        << std::setw(10) << "crosscap" << "verdict\n";
    for (const auto& r : reports) {
        ++counts[static_cast<int>(r.verdict)];
        out << std::setw(12) << r.name;
        if (!r.error.empty()) {
            out << "error: " << r.error << '\n';
            continue;
        }
        out << std::setw(4) << r.hypotheses.c << std::setw(4) << r.hypotheses.t << std::setw(4) << r.T << std::setw(10)
            << (r.ak ? std::to_string(r.ak->crosscap) : "-") << to_string(r.verdict) << '\n';
    }
    out << reports.size() << " records: " << counts[0] << " exact, " << counts[1] << " consistent, " << counts[2]
        << " failed, " << counts[3] << " skipped\n";
}

const std::vector<std::pair<std::string, int>>& table1_expected() {
    static const std::vector<std::pair<std::string, int>> rows = {
        {"10_85", 6},    {"10_93", 6},    {"10_100", 6},   {"11a_74", 5},   {"11a_97", 5},   {"11a_223", 5},
        {"11a_250", 5},  {"11a_259", 5},  {"11a_263", 4},  {"11a_279", 6},  {"11a_293", 6},  {"11a_313", 6},
        {"11a_323", 6},  {"11a_330", 6},  {"11a_338", 4},  {"11a_346", 6},  {"12a_0636", 5}, {"12a_0641", 4},
        {"12a_0753", 5}, {"12a_0827", 5}, {"12a_0845", 5}, {"12a_0970", 6}, {"12a_0984", 6}, {"12a_1017", 6},
        {"12a_1031", 5}, {"12a_1095", 6}, {"12a_1107", 6}, {"12a_1114", 6}, {"12a_1142", 5}, {"12a_1171", 6},
        {"12a_1179", 6}, {"12a_1205", 6}, {"12a_1220", 6}, {"12a_1240", 6}, {"12a_1243", 4}, {"12a_1247", 6},
        {"12a_1285", 4},
    };
    return rows;
}

Table1 reproduce_table1(const std::vector<CensusRecord>& census, const BatchConfig& config) {
    std::vector<CensusRecord> picked;
    std::string missing;
    for (const auto& [name, T] : table1_expected()) {
        auto it = std::find_if(census.begin(), census.end(), [&](const CensusRecord& r) { return r.name == name; });
        if (it == census.end()) {
            missing += (missing.empty() ? "" : ", ") + name;
        } else {
            picked.push_back(*it);
        }
    }
    if (!missing.empty()) throw Error(ErrorKind::MissingKnots, "census lacks " + missing);

    const auto reports = run_batch(picked, config);
    Table1 t;
    t.pass = true;
    for (std::size_t i = 0; i < reports.size(); ++i) {
        const auto& r = reports[i];
        Table1Row row;
        row.name = r.name;
        row.expected_T = table1_expected()[i].second;
        row.T = r.T;
        const auto knot = bounds_jones_knot(r.T, r.span);
        row.lower = knot.lower;
        row.upper = knot.upper;
        row.crosscap = r.ak ? r.ak->crosscap : 0;
        row.pass = r.error.empty() && row.T == row.expected_T && row.crosscap == 3;
        t.pass = t.pass && row.pass;
        t.rows.push_back(row);
    }
    return t;
}

void write_table1(std::ostream& out, const Table1& t) {
    out << std::left << std::setw(10) << "knot" << std::setw(4) << "T" << std::setw(6) << "want" << std::setw(7)
        << "lower" << std::setw(7) << "upper" << std::setw(10) << "crosscap" << "result\n";
    for (const auto& r : t.rows)
        out << std::setw(10) << r.name << std::setw(4) << r.T << std::setw(6) << r.expected_T << std::setw(7) << r.lower
            << std::setw(7) << r.upper << std::setw(10) << r.crosscap << (r.pass ? "PASS" : "FAIL") << '\n';
    out << (t.pass ? "PASS" : "FAIL") << ": " << std::count_if(t.rows.begin(), t.rows.end(), [](const Table1Row& r) { return r.pass; })
        << "/" << t.rows.size() << " rows\n";
}

}  // namespace crosscap
