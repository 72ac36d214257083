#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cscode/cs_graph.hpp"

namespace cscode {

enum class CodeKind { perfect, total_perfect };
const char* to_string(CodeKind k);

enum class Violation {
    core_centralizer,  // core(H) not contained in C_G(x) for some x in X
    index_equation,    // exact index equation fails (normal H)
    class_count,       // |X| > 1 but X is a single conjugacy class (normal H)
    z_nonsquare,       // common element of H and Y is a square of H
    z_central,         // H not contained in C_G(z)
};
const char* to_string(Violation v);

// Verdict plus machine-checkable witnesses: the transversal (X u {1} for
// perfect, Y for total), the common element z for total codes, and the failed
// necessary-condition tags for negative verdicts.
struct CodeCertificate {
    CodeKind kind = CodeKind::perfect;
    std::string group;
    std::vector<int> subgroup;
    std::vector<int> class_ids;
    bool verdict = false;
    std::vector<int> witness_transversal;  // empty unless verdict
    int witness_z = -1;                    // -1 for perfect kind or no verdict
    std::vector<Violation> violations;     // empty when verdict is true
};

// Definitional checkers on a built graph.
bool is_perfect_code(const CayleySumGraph& graph, const ElemSet& c);
bool is_total_perfect_code(const CayleySumGraph& graph, const ElemSet& c);

// Transversal criteria; each must agree with the definitional checker on
// forced-cardinality inputs (the oracle-equivalence suite quantifies this).
bool pc_criterion(const GroupTable& g, const SubgroupHandle& h, const NormalSubset& x);
bool tpc_criterion(const GroupTable& g, const SubgroupHandle& h, const NormalSubset& y);

// Evaluates the necessary conditions with exact integer arithmetic and
// returns the violated tags (empty list = all pass).
std::vector<Violation> necessary_conditions(const GroupTable& g, const ConjugacyPartition& cc,
                                            const SubgroupHandle& h, const NormalSubset& x,
                                            CodeKind kind);

struct EnumerateOptions {
    bool connected_only = false;
    bool include_failures = false;
    uint64_t budget = 0;   // 0: exhaustive, requires 2^#classes <= 2^20
    int jobs = 1;
    uint64_t seed = 0xC5C0DEull;  // sampling seed when the budget bites
};

struct EnumerateResult {
    std::vector<std::pair<NormalSubset, CodeCertificate>> entries;  // sorted by class-id tuple
    bool partial = false;
    uint64_t tested = 0;
};

// Tests every normal subset of the forced cardinality (|X| = |G:H| - 1 for
// perfect, |Y| = |G:H| for total) against the matching criterion.
EnumerateResult enumerate_admitting(const GroupTable& g, const ConjugacyPartition& cc,
                                    const SubgroupHandle& h, CodeKind kind,
                                    const EnumerateOptions& opts = {});

// Constructive both-direction check of the perfect/total bridge for a normal
// subgroup: every total witness strips to a perfect one through its central
// nonsquare z, and every perfect witness extends by every central nonsquare
// of H. Throws when h is not normal.
bool pc_tpc_bridge_check(const GroupTable& g, const ConjugacyPartition& cc, const SubgroupHandle& h);

// Conjugating the subgroup never changes either criterion verdict.
bool inner_transfer_check(const GroupTable& g, const ConjugacyPartition& cc,
                          const SubgroupHandle& h, const NormalSubset& x);

enum class CosetTransferStatus { ok, b_in_subgroup, b_not_involution, b_not_normalizing };
struct CosetTransferResult {
    CosetTransferStatus status = CosetTransferStatus::ok;
    bool holds = false;  // meaningful only when status == ok
};
// H and Hb receive identical definitional verdicts on CS(G, X), both kinds.
CosetTransferResult coset_transfer_check(const GroupTable& g, const SubgroupHandle& h,
                                         const NormalSubset& x, int b);

// Certificate assembly used by the enumerator and the CLI.
CodeCertificate make_certificate(const GroupTable& g, const ConjugacyPartition& cc,
                                 const SubgroupHandle& h, const NormalSubset& x, CodeKind kind);

}  // namespace cscode
