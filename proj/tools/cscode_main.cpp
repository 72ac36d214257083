// Command-line front end: build groups, run code searches, run verification
// suites, emit reports.
//
// Commands:
//   group-info  - order, center, conjugacy classes, subgroup count, squares
//   search      - enumerate admitting connection sets for a subgroup
//   verify      - run a named verification suite
//
// Exit status: group-info 0/2; search 0 with results, 1 with none, 2 on
// error (budget exhaustion flags partial results); verify 0 iff every
// assertion passed, 1 on failures, 2 on bad arguments.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "cscode/report.hpp"

using namespace cscode;

namespace {

struct ParseError {
    std::string message;
    size_t position;
};

GroupTable parse_factor(const std::string& token, size_t offset) {
    auto fail = [&](const std::string& msg, size_t extra = 0) -> GroupTable {
        throw ParseError{msg, offset + extra};
    };
    if (token.empty()) return fail("empty group factor");
    if (token.rfind("AGL1(", 0) == 0) {
        if (token.back() != ')') return fail("AGL1 factor missing ')'", token.size() - 1);
        std::string num = token.substr(5, token.size() - 6);
        int q = 0;
        try {
            q = std::stoi(num);
        } catch (...) {
            return fail("AGL1 order is not a number", 5);
        }
        for (int p = 2; p <= q; ++p) {
            if (!is_prime(p) || q % p) continue;
            int v = q, k = 0;
            while (v % p == 0) v /= p, ++k;
            if (v == 1) return make_agl1(p, k).table;
            break;
        }
        return fail("AGL1 order must be a prime power >= 3", 5);
    }
    if (token[0] == 'C') {
        int n = 0;
        try {
            n = std::stoi(token.substr(1));
        } catch (...) {
            return fail("cyclic order is not a number", 1);
        }
        if (n < 1 || n > 128) return fail("cyclic order out of range [1,128]", 1);
        return make_cyclic(n);
    }
    if (token[0] == 'D') {
        int m = 0;
        try {
            m = std::stoi(token.substr(1));
        } catch (...) {
            return fail("dihedral order is not a number", 1);
        }
        if (m < 2 || m % 2 != 0) return fail("dihedral order must be an even literal", 1);
        if (m > 64) return fail("dihedral order out of range", 1);
        return make_dihedral(m / 2);
    }
    return fail("unknown group factor (expected C<n>, D<2n> or AGL1(q))");
}

GroupTable parse_group_descriptor(const std::string& desc) {
    std::optional<GroupTable> acc;
    size_t pos = 0;
    while (pos <= desc.size()) {
        size_t split = desc.find('x', pos);
        // 'x' inside AGL1(...) cannot occur; factors never contain x
        std::string token = desc.substr(pos, split == std::string::npos ? std::string::npos : split - pos);
        GroupTable factor = parse_factor(token, pos);
        acc = acc ? make_direct_product(*acc, factor) : std::move(factor);
        if (split == std::string::npos) break;
        pos = split + 1;
    }
    if (!acc) throw ParseError{"empty group descriptor", 0};
    return std::move(*acc);
}

std::vector<SubgroupHandle> select_subgroups(const GroupTable& g, const std::string& selector) {
    if (selector == "all") return all_subgroups(g);
    ElemSet members;
    std::stringstream ss(selector);
    std::string item;
    while (std::getline(ss, item, ',')) {
        int v = std::stoi(item);
        if (v < 0 || v >= g.order()) throw std::invalid_argument("subgroup member out of range");
        members.set(v);
    }
    return {make_subgroup(g, members)};
}

struct OutputTarget {
    std::ofstream file;
    std::ostream* stream = &std::cout;
    void open(const std::string& path) {
        if (path.empty()) return;
        file.open(path);
        if (!file) throw std::runtime_error("cannot open output file: " + path);
        stream = &file;
    }
};

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Cayley sum graphs and subgroup perfect codes"};
    app.require_subcommand(1);

    std::string group_desc, subgroup_sel = "all", kind_sel = "pc", suite, format_sel = "text", out_path;
    bool connected_only = false;
    int jobs = 1, max_n = 8, max_order = 12;
    uint64_t budget = 0;
    std::vector<int> qs;

    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--format", format_sel, "Report format: text or jsonl")
            ->envname("CSCODE_FORMAT")
            ->check(CLI::IsMember({"text", "jsonl"}));
        cmd->add_option("--out", out_path, "Write the report to this file")->envname("CSCODE_OUT");
        cmd->add_option("--jobs", jobs, "Worker threads for the search kernels")
            ->envname("CSCODE_JOBS")
            ->check(CLI::Range(1, 64));
    };

    CLI::App* info = app.add_subcommand("group-info", "Describe a group");
    info->add_option("--group", group_desc, "Group descriptor, e.g. C6, C2xC4, D12, AGL1(5)")->required();
    add_common(info);

    CLI::App* search = app.add_subcommand("search", "Enumerate admitting connection sets");
    search->add_option("--group", group_desc)->required();
    search->add_option("--subgroup", subgroup_sel, "Member list 0,3 or \"all\"");
    search->add_option("--kind", kind_sel)->check(CLI::IsMember({"pc", "tpc", "both"}));
    search->add_flag("--connected-only", connected_only, "Keep connected graphs only");
    search->add_option("--budget", budget, "Cap on visited class subsets (0 = exhaustive)")
        ->envname("CSCODE_BUDGET");
    add_common(search);

    CLI::App* verify = app.add_subcommand("verify", "Run a verification suite");
    verify->add_option("--suite", suite, "oracle|dihedral|abelian|agl|bridge|obstruction")->required();
    verify->add_option("--max-n", max_n, "Dihedral suite: verify D2n for n up to this")->check(CLI::Range(1, 16));
    verify->add_option("--max-order", max_order, "Abelian suite order bound")->check(CLI::Range(1, 16));
    verify->add_option("--q", qs, "AGL suite: restrict to these field orders");
    add_common(verify);

    CLI11_PARSE(app, argc, argv);

    ReportFormat format = format_sel == "jsonl" ? ReportFormat::jsonl : ReportFormat::text;
    OutputTarget out;

    try {
        out.open(out_path);

        if (info->parsed()) {
            GroupTable g = parse_group_descriptor(group_desc);
            write_group_info(*out.stream, collect_group_info(g), format);
            return 0;
        }

        if (search->parsed()) {
            GroupTable g = parse_group_descriptor(group_desc);
            ConjugacyPartition cc = conjugacy_classes(g);
            std::vector<SubgroupHandle> subgroups = select_subgroups(g, subgroup_sel);
            std::vector<CodeKind> kinds;
            if (kind_sel == "pc" || kind_sel == "both") kinds.push_back(CodeKind::perfect);
            if (kind_sel == "tpc" || kind_sel == "both") kinds.push_back(CodeKind::total_perfect);

            uint64_t results = 0;
            bool partial = false;
            for (const SubgroupHandle& h : subgroups) {
                for (CodeKind kind : kinds) {
                    EnumerateOptions opts;
                    opts.connected_only = connected_only;
                    opts.budget = budget;
                    opts.jobs = jobs;
                    EnumerateResult res = enumerate_admitting(g, cc, h, kind, opts);
                    partial = partial || res.partial;
                    for (const auto& [x, cert] : res.entries) {
                        write_certificate(*out.stream, cert, format);
                        ++results;
                    }
                }
            }
            write_search_summary(*out.stream, results, partial, format);
            if (partial) return 2;
            return results > 0 ? 0 : 1;
        }

        // verify
        SuiteReport report;
        if (suite == "oracle") {
            std::vector<GroupTable> corpus = standard_corpus();
            report = run_oracle_suite(corpus);
            SuiteReport conn = run_connectivity_suite(corpus);
            report.checks += conn.checks;
            report.failures += conn.failures;
            report.notes.insert(report.notes.end(), conn.notes.begin(), conn.notes.end());
        } else if (suite == "bridge") {
            report = run_bridge_suite(standard_corpus());
        } else if (suite == "obstruction") {
            report = run_obstruction_suite(standard_corpus());
        } else if (suite == "dihedral") {
            report = run_dihedral_suite(max_n);
        } else if (suite == "abelian") {
            report = run_abelian_suite(max_order);
        } else if (suite == "agl") {
            std::vector<int> assert_qs, report_qs, lemma_qs;
            std::vector<int> wanted = qs.empty() ? std::vector<int>{3, 4, 5, 7, 8} : qs;
            for (int q : wanted) {
                if (q == 3 || q == 4 || q == 5)
                    assert_qs.push_back(q);
                else
                    report_qs.push_back(q);
                lemma_qs.push_back(q);
            }
            report = run_agl_suite(assert_qs, report_qs, lemma_qs);
        } else {
            std::cerr << "unknown suite: " << suite << "\n";
            return 2;
        }
        write_suite(*out.stream, report, format);
        return report.ok() ? 0 : 1;
    } catch (const ParseError& e) {
        std::cerr << "parse error at position " << e.position << ": " << e.message << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
