#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "cscode/bitset128.hpp"
#include "cscode/field.hpp"

namespace cscode {

// A finite group as an element-indexed multiplication table. The constructor
// validates the Latin-square property, locates the identity, derives the
// inverse lookup, and checks associativity exhaustively (gated to n <= 128;
// larger tables up to 4096 can be built but the set-level machinery below
// requires n <= 128).
//
// Element indexing is construction-defined:
//   make_cyclic(n):          i encodes the residue i
//   make_direct_product(A,B): (a, b) encodes a*|B| + b, row-major
//   make_dihedral(n):        0..n-1 encode a^i, n..2n-1 encode a^i b
//   make_agl1(p,k):          (m, t) encodes (field_index(m)-1)*q + field_index(t),
//                            lexicographic (m, t) over field element indices
class GroupTable {
public:
    GroupTable(int n, std::string label, std::vector<uint16_t> mul_rows);

    int order() const { return n_; }
    int identity() const { return identity_; }
    const std::string& label() const { return label_; }

    int mul(int a, int b) const { return mul_[static_cast<size_t>(a) * n_ + b]; }
    int inv(int a) const { return inv_[a]; }
    int conj(int x, int g) const { return mul(mul(inv(g), x), g); }  // g^{-1} x g

private:
    int n_;
    int identity_;
    std::string label_;
    std::vector<uint16_t> mul_;
    std::vector<uint16_t> inv_;
};

GroupTable make_cyclic(int n);
GroupTable make_direct_product(const GroupTable& a, const GroupTable& b);
// Dihedral group of order 2n with relations a^n = b^2 = 1, a^b = a^{-1}.
GroupTable make_dihedral(int n);

// AGL1(q): pairs (m, t), m in GF(q)*, t in GF(q), with
// (m1,t1)(m2,t2) = (m1 m2, t1 m2 + t2). Kernel {(1,t)} and the standard
// complement {(m,0)} are returned alongside the table.
struct Agl1 {
    GroupTable table;
    ElemSet kernel;
    ElemSet complement;
    FieldSpec field;
};
Agl1 make_agl1(int p, int k);

struct SubgroupHandle {
    const GroupTable* parent = nullptr;
    ElemSet members;

    int order() const { return members.count(); }
};

bool is_subgroup_set(const GroupTable& g, const ElemSet& s);
// Validates and wraps a member set. Throws when s is not a subgroup.
SubgroupHandle make_subgroup(const GroupTable& g, const ElemSet& members);
SubgroupHandle whole_group(const GroupTable& g);

// Subgroup generated by a seed set (closure under multiplication).
ElemSet closure(const GroupTable& g, const ElemSet& seed);

// Every subgroup exactly once, by breadth-first closure over cyclic
// subgroups and their joins, sorted by (order, member list).
std::vector<SubgroupHandle> all_subgroups(const GroupTable& g);

struct ConjugacyPartition {
    const GroupTable* parent = nullptr;
    std::vector<ElemSet> classes;  // sorted by minimum element
    std::vector<int> class_of;     // element index -> class id

    int class_count() const { return static_cast<int>(classes.size()); }
};
ConjugacyPartition conjugacy_classes(const GroupTable& g);

SubgroupHandle centralizer(const GroupTable& g, int x);
SubgroupHandle center(const GroupTable& g);
// Largest normal subgroup of g contained in h (intersection of conjugates).
SubgroupHandle core_of(const GroupTable& g, const SubgroupHandle& h);

// True iff |T| = |G|/|H| and the cosets tH are pairwise disjoint.
bool is_left_transversal(const GroupTable& g, const SubgroupHandle& h, const ElemSet& t);

// {h^2 : h in H}
ElemSet squares_in(const SubgroupHandle& h);
ElemSet squares_of(const GroupTable& g);

bool is_abelian(const GroupTable& g);
int element_order(const GroupTable& g, int x);

// Sylow 2-subgroup Q, Hall 2'-subgroup K and Phi(Q) = {x^2 : x in Q} of an
// abelian group. Throws for nonabelian input.
struct AbelianParts {
    SubgroupHandle sylow2;     // Q
    SubgroupHandle hall2p;     // K
    SubgroupHandle phi_sylow2; // Phi(Q)
};
AbelianParts abelian_decomposition(const GroupTable& g);

// Group-table text format: line 1 "n", line 2 label, then n rows of n
// space-separated element indices. Canonical fixture format.
void write_group_table(std::ostream& os, const GroupTable& g);
GroupTable read_group_table(std::istream& is);

}  // namespace cscode
