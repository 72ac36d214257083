#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "cscode/classify.hpp"

namespace cscode {

struct SuiteReport {
    std::string name;
    uint64_t checks = 0;
    uint64_t failures = 0;
    std::vector<std::string> notes;  // one line per failure or reported item
    bool ok() const { return failures == 0; }
};

// Verification corpus: C1..C16, the small abelian products, D2..D16 and
// AGL1(q) for q in {3,4,5,7}.
std::vector<GroupTable> standard_corpus();

// Definitional checker == criterion checker over every subgroup and every
// forced-cardinality class union.
SuiteReport run_oracle_suite(const std::vector<GroupTable>& corpus);

// BFS == algebraic connectivity over every class union of every corpus
// group (sampled at 10^5 once a group exceeds 10^6 unions).
SuiteReport run_connectivity_suite(const std::vector<GroupTable>& corpus);

// Both constructive directions of the perfect/total bridge for every normal
// subgroup in the corpus.
SuiteReport run_bridge_suite(const std::vector<GroupTable>& corpus);

// Core-vs-center obstruction: whenever core(H) is not central the connected
// admitting sets are empty for both kinds.
SuiteReport run_obstruction_suite(const std::vector<GroupTable>& corpus);

// Exact index equation: every verdict-true certificate over the corpus has
// an empty violation list.
SuiteReport run_index_equation_suite(const std::vector<GroupTable>& corpus);

// Empty classification diffs for every dihedral group up to order 2*max_n,
// both kinds.
SuiteReport run_dihedral_suite(int max_n);

// Constructive theorems against exhaustive transversal search for every
// abelian group of order <= max_order.
SuiteReport run_abelian_suite(int max_order);

// Classification diffs for the affine groups: emptiness asserted for qs in
// assert_qs, reported (soundness still asserted) for qs in report_qs; the
// partition and class-length lemmas are asserted for every q in lemma_qs.
SuiteReport run_agl_suite(const std::vector<int>& assert_qs, const std::vector<int>& report_qs,
                          const std::vector<int>& lemma_qs);

}  // namespace cscode
