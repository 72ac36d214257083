#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cscode/codes.hpp"

namespace cscode {

// ---------- abelian groups ----------

// X = T \ H for the canonical transversal T (minimum element index per
// coset); always passes pc_criterion. Throws for nonabelian input.
NormalSubset abelian_pc_construct(const GroupTable& g, const ConjugacyPartition& cc,
                                  const SubgroupHandle& h);

struct DecideResult {
    bool ok = false;
    std::optional<NormalSubset> witness;
};

// H is a perfect code of some regular CS graph iff H contains a nonsquare of
// G or H equals Phi(Q)K. The witness is square-free and validated.
DecideResult abelian_regular_pc_decide(const GroupTable& g, const ConjugacyPartition& cc,
                                       const SubgroupHandle& h);

// regular = false: verdict is |H| even, witness extends the perfect-code
// construction by a nonsquare of H.
// regular = true: verdict is "H contains a nonsquare of G" (the common
// element of H and a square-free Y must be a nonsquare of the whole group,
// so the Phi(Q)K alternative of the non-total statement cannot occur here);
// the witness is square-free and validated against tpc_criterion.
DecideResult abelian_tpc_decide(const GroupTable& g, const ConjugacyPartition& cc,
                                const SubgroupHandle& h, bool regular);

// One abelian group per isomorphism class, primary decomposition, every
// order up to and including max_order.
std::vector<GroupTable> abelian_groups_up_to(int max_order);

// ---------- dihedral groups ----------

enum class DihedralFamily {
    gamma0,        // one reflection class + even rotations, perfect
    gamma1,        // the other reflection class + even rotations, perfect
    gamma_4k2,     // reflection class + punctured inverse-closed transversal, perfect
    gamma0_prime,  // reflection class + odd rotations, total
    gamma1_prime,
    gamma_4k2_prime,
    knn,           // all reflections, total
};
const char* to_string(DihedralFamily f);

struct DihedralExpectation {
    int n = 0;
    DihedralFamily family = DihedralFamily::knn;
    CodeKind kind = CodeKind::perfect;
    std::vector<int> subgroup;
    std::vector<int> class_ids;
    ElemSet members;            // connection set
    int ell = 0;                // n = 2*ell families
    int k = 0;                  // n = 4k+2 families
    std::vector<int> z_part;    // rotation part of the connection set
};

// Generates every family instance for the dihedral table d (order 2n),
// validated against its criterion checker at construction. Degenerate n <= 2
// is covered by enumerating all cyclic order-n complements.
std::vector<DihedralExpectation> dihedral_expected(const GroupTable& d, const ConjugacyPartition& cc,
                                                   CodeKind kind);

struct ClassificationKey {
    std::vector<int> subgroup;
    std::vector<int> class_ids;
    auto operator<=>(const ClassificationKey&) const = default;
};

struct DiffReport {
    std::string group;
    CodeKind kind = CodeKind::perfect;
    std::vector<ClassificationKey> matched;
    std::vector<ClassificationKey> extra;    // found by search, not generated
    std::vector<ClassificationKey> missing;  // generated, not found
    bool empty_diff() const { return extra.empty() && missing.empty(); }
    bool sound() const { return missing.empty(); }
};

// Exhaustive search over connected CS graphs of the dihedral group (all
// class unions) x subgroups (nontrivial for perfect, all for total), diffed
// against the generated families restricted to connected instances.
DiffReport verify_dihedral_classification(const GroupTable& d, const ConjugacyPartition& cc,
                                          CodeKind kind);

// ---------- one-dimensional affine groups ----------

struct AglExpectation {
    int q = 0, s = 0, t = 0;
    int c = -1;                 // complement generator (element index)
    int a0 = -1;                // representative inside <c^s> \ {1}
    std::vector<int> reps;      // a_1..a_{s-1}
    std::vector<int> subgroup;  // <c^s>
    ElemSet x_members, y_members;
    std::vector<int> x_class_ids, y_class_ids;
    bool tpc_valid = false;     // a0 is a nonsquare of <c^s>
};

// Canonical construction for q-1 = st, t > 1 (minimum-index choices).
// pc_criterion is validated on X always; tpc_criterion on Y iff a0 is a
// nonsquare of <c^s>. Throws for t = 1.
AglExpectation agl_construct(const Agl1& agl, const ConjugacyPartition& cc, int s);

struct AglVerification {
    DiffReport pc;
    DiffReport tpc;
    std::vector<AglExpectation> canonical;  // one per admissible s
};

// Exhaustive enumeration of all CS graphs (class unions, no connectivity
// restriction) x proper nontrivial subgroups for perfect / proper subgroups
// for total, diffed against the construction family closed under complement
// conjugacy and the choice of transversal representatives.
AglVerification verify_agl_classification(const Agl1& agl, const ConjugacyPartition& cc);

// Every nonidentity conjugacy class is either K \ {1} or has size q and
// meets every conjugate of the complement in exactly one element.
bool lemma_length_check(const Agl1& agl, const ConjugacyPartition& cc);

// K and the conjugates of the complement cover G and the conjugates
// pairwise intersect in the identity.
bool frobenius_partition_check(const Agl1& agl);

}  // namespace cscode
