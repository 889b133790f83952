#include "crosscap/bounds.hpp"
#include "crosscap/error.hpp"
#include "crosscap/generators.hpp"
#include "crosscap/harness.hpp"
#include "crosscap/jones.hpp"
#include "crosscap/surfaces.hpp"

#include "CLI11.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

using namespace crosscap;

namespace {

constexpr int kOk = 0;
constexpr int kFail = 1;
constexpr int kInputError = 2;

std::vector<int> parse_int_list(const std::string& text) {
    std::vector<int> out;
    std::stringstream ss(text);
    for (std::string item; std::getline(ss, item, ',');) {
        std::size_t used = 0;
        int v = 0;
        try {
            v = std::stoi(item, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used == 0 || used != item.size()) throw Error(ErrorKind::InvalidArgument, "not an integer list: '" + text + "'");
        out.push_back(v);
    }
    if (out.empty()) throw Error(ErrorKind::InvalidArgument, "empty integer list");
    return out;
}

void print_interval(std::ostream& out, const BoundInterval& b) {
    out << "  " << std::left << std::setw(16) << to_string(b.source);
    if (b.applicable)
        out << "[" << b.lower << ", " << b.upper << "]\n";
    else
        out << "n/a (" << b.reason << ")\n";
}

int cmd_compute(const std::string& pd, const BatchConfig& config, bool json) {
    const auto report = analyze(CensusRecord{"input", pd, std::nullopt, std::nullopt, 0}, config);
    if (!report.error.empty()) {
        std::cerr << "error: " << report.error << '\n';
        return kInputError;
    }
    if (json) {
        std::cout << to_json(report).dump(2) << '\n';
    } else {
        const auto& h = report.hypotheses;
        std::cout << "crossings " << h.c << ", components " << h.k << ", twist regions " << h.t << '\n'
                  << "alternating " << h.alternating << ", prime " << h.prime << ", twist-reduced " << h.twist_reduced
                  << ", adequate " << h.adequate << ", (2,p) torus " << h.torus_2p << '\n'
                  << "jones " << report.jones << "\nT " << report.T << ", span " << report.span << '\n';
        for (const auto& b : report.bounds) print_interval(std::cout, b);
        if (report.ak) {
            const auto& a = *report.ak;
            std::cout << "max chi " << a.max_chi << " (" << (a.nonorientable_at_max ? "non-orientable" : "orientable only")
                      << "), crosscap " << a.crosscap;
            if (a.genus) std::cout << ", genus " << *a.genus;
            std::cout << "\nwitnesses";
            for (const auto& w : a.witness_states()) std::cout << ' ' << w.to_string();
            std::cout << '\n';
        } else {
            std::cout << "search skipped: " << report.skipped << '\n';
        }
        for (const auto& n : report.notes) std::cout << "note: " << n << '\n';
        std::cout << "verdict " << to_string(report.verdict) << '\n';
    }
    return report.verdict == Verdict::Fail ? kFail : kOk;
}

int cmd_bounds(const std::string& pd, int cap, bool jones_only) {
    const Diagram d = parse_pd(pd);
    const auto h = Hypotheses::of(d);
    const auto j = jones(d, cap);
    std::cout << "T " << j.T << ", span " << j.span_t << '\n';
    std::vector<BoundInterval> bounds;
    if (jones_only) {
        bounds = jones_bounds(h, j.T, j.span_t);
    } else {
        int genus = 0;
        if (h.k == 1 && h.c > 0) genus = (1 - (state_circles(d, seifert_states(d).front()) - h.c)) / 2;
        bounds = applicable_bounds(h, j.T, j.span_t, genus);
    }
    for (const auto& b : bounds) print_interval(std::cout, b);
    return kOk;
}

int cmd_batch(const std::string& input, const std::string& output, const BatchConfig& config) {
    const auto census = load_census(input);
    for (const auto& e : census.errors) std::cerr << "skipped " << e << '\n';
    const auto reports = run_batch(census.records, config);
    std::ofstream out(output);
    if (!out) throw Error(ErrorKind::MissingFile, "cannot write " + output);
    write_jsonl(out, reports);
    write_summary(std::cout, reports);
    const bool failed = std::any_of(reports.begin(), reports.end(), [](const CrosscapReport& r) { return r.verdict == Verdict::Fail; });
    return failed ? kFail : kOk;
}

int cmd_table1(const std::string& input, const BatchConfig& config) {
    const auto census = load_census(input);
    const auto table = reproduce_table1(census.records, config);
    write_table1(std::cout, table);
    return table.pass ? kOk : kFail;
}

int cmd_generate(const std::string& family, const std::vector<std::string>& params) {
    auto need = [&](std::size_t n, const char* usage) {
        if (params.size() != n) throw Error(ErrorKind::InvalidArgument, std::string("usage: generate ") + usage);
    };
    Diagram d;
    if (family == "pretzel") {
        need(1, "pretzel p1,p2,...");
        d = pretzel(parse_int_list(params[0]));
    } else if (family == "inflate") {
        need(3, "inflate <pd> <crossing> <extra>");
        d = inflate_twist(parse_pd(params[0]), parse_int_list(params[1]).at(0), parse_int_list(params[2]).at(0));
    } else if (family == "trivalent") {
        need(2, "trivalent <graph-file> <twists>");
        std::ifstream in(params[0]);
        if (!in) throw Error(ErrorKind::MissingFile, "cannot open " + params[0]);
        std::stringstream text;
        text << in.rdbuf();
        const auto g = parse_ribbon_graph(text.str());
        auto twists = parse_int_list(params[1]);
        if (twists.size() == 1) twists.assign(static_cast<std::size_t>(g.edge_count()), twists.front());
        d = trivalent_graph_link(g, twists);
    } else {
        throw Error(ErrorKind::InvalidArgument, "unknown family '" + family + "' (pretzel, inflate, trivalent)");
    }
    std::cout << d.serialize() << '\n';
    return kOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Crosscap numbers of alternating links from PD codes"};
    app.require_subcommand(1);

    std::string pd;
    std::string input;
    std::string output;
    std::string family;
    std::vector<std::string> params;
    bool jones_only = false;
    bool json = false;
    bool serial = false;
    int cap = kDefaultBracketCap;

    auto* compute = app.add_subcommand("compute", "Invariants, bounds and crosscap number of one diagram");
    compute->add_option("--pd", pd, "PD code, e.g. \"X(1,5,2,4) X(3,1,4,6) X(5,3,6,2)\"")->required();
    compute->add_flag("--json", json, "Print the JSON report");
    compute->add_option("--cap", cap, "Largest crossing count for the bracket");

    auto* bounds = app.add_subcommand("bounds", "Crosscap bounds of one diagram");
    bounds->add_option("--pd", pd, "PD code")->required();
    bounds->add_flag("--jones-only", jones_only, "Only the Jones polynomial intervals");
    bounds->add_option("--cap", cap, "Largest crossing count for the bracket");

    auto* batch = app.add_subcommand("batch", "Analyse every census row and write JSONL");
    batch->add_option("--input", input, "Census CSV")->required();
    batch->add_option("--output", output, "JSONL report")->required();
    batch->add_flag("--serial", serial, "Process records one at a time");
    batch->add_option("--cap", cap, "Largest crossing count for the bracket");

    auto* table1 = app.add_subcommand("table1", "Reproduce the crosscap-3 table");
    table1->add_option("--input", input, "Census CSV")->required();

    auto* generate = app.add_subcommand("generate", "Print the PD code of a generated diagram");
    generate->add_option("family", family, "pretzel | inflate | trivalent")->required();
    generate->add_option("params", params, "Family parameters");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kOk : kInputError;
    }

    try {
        BatchConfig config;
        config.search = SearchConfig::from_environment();
        config.bracket_cap = cap;
        config.parallel = !serial;
        if (*compute) return cmd_compute(pd, config, json);
        if (*bounds) return cmd_bounds(pd, cap, jones_only);
        if (*batch) return cmd_batch(input, output, config);
        if (*table1) return cmd_table1(input, config);
        if (*generate) return cmd_generate(family, params);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kInputError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kInputError;
    }
    return kInputError;
}
