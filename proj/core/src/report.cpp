#include "cscode/report.hpp"

#include <ostream>

#include <json.hpp>

namespace cscode {

namespace {

using json = nlohmann::ordered_json;

void print_list(std::ostream& os, const std::vector<int>& v) {
    if (v.empty()) {
        os << '-';
        return;
    }
    for (size_t i = 0; i < v.size(); ++i) {
        if (i) os << ',';
        os << v[i];
    }
}

json key_json(const ClassificationKey& k) {
    return json{{"subgroup", k.subgroup}, {"classes", k.class_ids}};
}

}  // namespace

GroupInfo collect_group_info(const GroupTable& g) {
    GroupInfo info;
    info.label = g.label();
    info.order = g.order();
    info.center = center(g).members.to_vector();
    for (const ElemSet& cls : conjugacy_classes(g).classes) info.classes.push_back(cls.to_vector());
    info.subgroup_count = static_cast<int>(all_subgroups(g).size());
    info.squares = squares_of(g).to_vector();
    return info;
}

void write_group_info(std::ostream& os, const GroupInfo& info, ReportFormat format) {
    if (format == ReportFormat::jsonl) {
        json j{{"type", "group-info"},
               {"group", info.label},
               {"order", info.order},
               {"center", info.center},
               {"classes", info.classes},
               {"subgroups", info.subgroup_count},
               {"squares", info.squares}};
        os << j.dump() << "\n";
        return;
    }
    os << "group " << info.label << "\n";
    os << "  order      " << info.order << "\n";
    os << "  center     ";
    print_list(os, info.center);
    os << " (size " << info.center.size() << ")\n";
    os << "  classes    " << info.classes.size() << " sizes=";
    for (size_t i = 0; i < info.classes.size(); ++i) {
        if (i) os << ',';
        os << info.classes[i].size();
    }
    os << "\n";
    os << "  subgroups  " << info.subgroup_count << "\n";
    os << "  squares    ";
    print_list(os, info.squares);
    os << "\n";
}

void write_certificate(std::ostream& os, const CodeCertificate& cert, ReportFormat format) {
    if (format == ReportFormat::jsonl) {
        json j{{"type", "certificate"},
               {"kind", to_string(cert.kind)},
               {"group", cert.group},
               {"subgroup", cert.subgroup},
               {"classes", cert.class_ids},
               {"verdict", cert.verdict}};
        if (cert.verdict) {
            json w{{"transversal", cert.witness_transversal}};
            if (cert.kind == CodeKind::total_perfect)
                w["z"] = cert.witness_z;
            else
                w["z"] = nullptr;
            j["witness"] = w;
        } else {
            j["witness"] = nullptr;
        }
        json viols = json::array();
        for (Violation v : cert.violations) viols.push_back(to_string(v));
        j["violations"] = viols;
        os << j.dump() << "\n";
        return;
    }
    os << to_string(cert.kind) << ' ' << cert.group << " subgroup=";
    print_list(os, cert.subgroup);
    os << " classes=";
    print_list(os, cert.class_ids);
    os << " verdict=" << (cert.verdict ? "true" : "false");
    os << " witness=";
    print_list(os, cert.witness_transversal);
    os << " z=";
    if (cert.kind == CodeKind::total_perfect && cert.verdict)
        os << cert.witness_z;
    else
        os << '-';
    os << " violations=";
    if (cert.violations.empty()) {
        os << '-';
    } else {
        for (size_t i = 0; i < cert.violations.size(); ++i) {
            if (i) os << ',';
            os << to_string(cert.violations[i]);
        }
    }
    os << "\n";
}

void write_diff(std::ostream& os, const DiffReport& diff, ReportFormat format) {
    if (format == ReportFormat::jsonl) {
        json header{{"type", "diff"},
                    {"group", diff.group},
                    {"kind", to_string(diff.kind)},
                    {"matched", diff.matched.size()},
                    {"extra", diff.extra.size()},
                    {"missing", diff.missing.size()}};
        os << header.dump() << "\n";
        for (const auto& k : diff.matched)
            os << json{{"type", "diff-record"}, {"status", "matched"}, {"subgroup", k.subgroup},
                       {"classes", k.class_ids}}
                      .dump()
               << "\n";
        for (const auto& k : diff.extra)
            os << json{{"type", "diff-record"}, {"status", "extra"}, {"subgroup", k.subgroup},
                       {"classes", k.class_ids}}
                      .dump()
               << "\n";
        for (const auto& k : diff.missing)
            os << json{{"type", "diff-record"}, {"status", "missing"}, {"subgroup", k.subgroup},
                       {"classes", k.class_ids}}
                      .dump()
               << "\n";
        return;
    }
    os << "diff " << diff.group << " kind=" << to_string(diff.kind) << " matched=" << diff.matched.size()
       << " extra=" << diff.extra.size() << " missing=" << diff.missing.size() << "\n";
    auto rows = [&](const char* status, const std::vector<ClassificationKey>& keys) {
        for (const auto& k : keys) {
            os << "  " << status << " subgroup=";
            print_list(os, k.subgroup);
            os << " classes=";
            print_list(os, k.class_ids);
            os << "\n";
        }
    };
    rows("matched", diff.matched);
    rows("extra", diff.extra);
    rows("missing", diff.missing);
}

void write_suite(std::ostream& os, const SuiteReport& report, ReportFormat format) {
    if (format == ReportFormat::jsonl) {
        json j{{"type", "suite"},
               {"name", report.name},
               {"checks", report.checks},
               {"failures", report.failures},
               {"ok", report.ok()}};
        os << j.dump() << "\n";
        for (const std::string& note : report.notes)
            os << json{{"type", "note"}, {"text", note}}.dump() << "\n";
        return;
    }
    os << "suite " << report.name << " checks=" << report.checks << " failures=" << report.failures
       << " => " << (report.ok() ? "ok" : "FAILED") << "\n";
    for (const std::string& note : report.notes) os << "  " << note << "\n";
}

void write_search_summary(std::ostream& os, uint64_t results, bool partial, ReportFormat format) {
    if (format == ReportFormat::jsonl) {
        json j{{"type", "summary"}, {"results", results}, {"partial", partial}};
        os << j.dump() << "\n";
        return;
    }
    os << "summary results=" << results << " partial=" << (partial ? "true" : "false") << "\n";
}

}  // namespace cscode
