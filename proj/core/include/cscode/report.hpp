#pragma once

#include <iosfwd>

#include "cscode/suites.hpp"

namespace cscode {

enum class ReportFormat { text, jsonl };

struct GroupInfo {
    std::string label;
    int order = 0;
    std::vector<int> center;
    std::vector<std::vector<int>> classes;
    int subgroup_count = 0;
    std::vector<int> squares;
};
GroupInfo collect_group_info(const GroupTable& g);

void write_group_info(std::ostream& os, const GroupInfo& info, ReportFormat format);
void write_certificate(std::ostream& os, const CodeCertificate& cert, ReportFormat format);
void write_diff(std::ostream& os, const DiffReport& diff, ReportFormat format);
void write_suite(std::ostream& os, const SuiteReport& report, ReportFormat format);
// trailer line for searches: result count and the partial flag
void write_search_summary(std::ostream& os, uint64_t results, bool partial, ReportFormat format);

}  // namespace cscode
