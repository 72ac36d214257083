#pragma once

#include <iosfwd>
#include <vector>

#include "cscode/group.hpp"

namespace cscode {

// A normal subset of a group, encoded as a union of conjugacy classes.
// The identity's class is a legal member; enumeration layers exclude it only
// where a criterion's hypothesis forces that.
struct NormalSubset {
    const GroupTable* parent = nullptr;
    std::vector<int> class_ids;  // sorted ascending
    ElemSet members;

    static NormalSubset from_classes(const ConjugacyPartition& cc, std::vector<int> ids);
    // Validates that m is conjugation-closed; throws otherwise.
    static NormalSubset from_members(const ConjugacyPartition& cc, const ElemSet& m);

    int size() const { return members.count(); }
};

// CS(G, X): vertices are group elements, g ~ h iff gh in X and g != h.
// Row g is stored as a bit set, so checkers AND/POPCOUNT rows directly.
struct CayleySumGraph {
    const GroupTable* group = nullptr;
    NormalSubset connection;
    std::vector<ElemSet> rows;

    int degree(int g) const { return rows[g].count(); }
};

CayleySumGraph build_cs_graph(const GroupTable& g, const NormalSubset& x);

// All degrees equal. (Square-free X always yields a regular graph; the
// converse is exercised in the property tests.)
bool is_regular(const CayleySumGraph& graph);

bool is_connected_bfs(const CayleySumGraph& graph);
// Connectivity via <X> = G and |G : <X^{-1}X>| <= 2.
bool is_connected_algebraic(const GroupTable& g, const NormalSubset& x);

// Edge list export: lines "g h" with g < h.
void write_edge_list(std::ostream& os, const CayleySumGraph& graph);

}  // namespace cscode
