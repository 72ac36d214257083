#include "cscode/cs_graph.hpp"

#include <algorithm>
#include <ostream>
#include <stdexcept>

namespace cscode {

NormalSubset NormalSubset::from_classes(const ConjugacyPartition& cc, std::vector<int> ids) {
    std::sort(ids.begin(), ids.end());
    ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
    NormalSubset x;
    x.parent = cc.parent;
    for (int id : ids) {
        if (id < 0 || id >= cc.class_count()) throw std::invalid_argument("conjugacy class id out of range");
        x.members |= cc.classes[id];
    }
    x.class_ids = std::move(ids);
    return x;
}

NormalSubset NormalSubset::from_members(const ConjugacyPartition& cc, const ElemSet& m) {
    std::vector<int> ids;
    for (int e = m.min(); e >= 0; e = m.next(e)) {
        int id = cc.class_of[e];
        if (!m.contains_all(cc.classes[id]))
            throw std::invalid_argument("member set is not conjugation-closed");
        if (ids.empty() || ids.back() != id) ids.push_back(id);
    }
    std::sort(ids.begin(), ids.end());
    ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
    NormalSubset x;
    x.parent = cc.parent;
    x.class_ids = std::move(ids);
    x.members = m;
    return x;
}

CayleySumGraph build_cs_graph(const GroupTable& g, const NormalSubset& x) {
    if (x.parent != &g) throw std::invalid_argument("connection set belongs to a different group");
    if (g.order() > 128) throw std::invalid_argument("build_cs_graph requires group order <= 128");
    CayleySumGraph graph;
    graph.group = &g;
    graph.connection = x;
    graph.rows.assign(g.order(), ElemSet{});
    for (int a = 0; a < g.order(); ++a)
        for (int b = 0; b < g.order(); ++b)
            if (a != b && x.members.test(g.mul(a, b))) graph.rows[a].set(b);
    return graph;
}

bool is_regular(const CayleySumGraph& graph) {
    int n = graph.group->order();
    int d = graph.degree(0);
    for (int v = 1; v < n; ++v)
        if (graph.degree(v) != d) return false;
    return true;
}

bool is_connected_bfs(const CayleySumGraph& graph) {
    int n = graph.group->order();
    ElemSet visited = ElemSet::single(0);
    std::vector<int> stack{0};
    int count = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        const ElemSet& row = graph.rows[v];
        for (int u = row.min(); u >= 0; u = row.next(u)) {
            if (!visited.test(u)) {
                visited.set(u);
                ++count;
                stack.push_back(u);
            }
        }
    }
    return count == n;
}

bool is_connected_algebraic(const GroupTable& g, const NormalSubset& x) {
    ElemSet gen = closure(g, x.members);
    if (gen.count() != g.order()) return false;
    ElemSet diffs;
    for (int a = x.members.min(); a >= 0; a = x.members.next(a))
        for (int b = x.members.min(); b >= 0; b = x.members.next(b)) diffs.set(g.mul(g.inv(a), b));
    ElemSet sub = closure(g, diffs);
    return g.order() <= 2 * sub.count();
}

void write_edge_list(std::ostream& os, const CayleySumGraph& graph) {
    int n = graph.group->order();
    for (int a = 0; a < n; ++a)
        for (int b = graph.rows[a].next(a); b >= 0; b = graph.rows[a].next(b)) os << a << ' ' << b << "\n";
}

}  // namespace cscode
