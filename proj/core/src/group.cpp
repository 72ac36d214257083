#include "cscode/group.hpp"

#include <algorithm>
#include <istream>
#include <map>
#include <ostream>
#include <set>
#include <sstream>
#include <stdexcept>

namespace cscode {

namespace {

constexpr int kSetCap = 128;   // cap for all ElemSet-based machinery
constexpr int kTableCap = 4096;

void require_small(const GroupTable& g, const char* what) {
    if (g.order() > kSetCap) {
        throw std::invalid_argument(std::string(what) + " requires group order <= 128");
    }
}

}  // namespace

GroupTable::GroupTable(int n, std::string label, std::vector<uint16_t> mul_rows)
    : n_(n), identity_(-1), label_(std::move(label)), mul_(std::move(mul_rows)) {
    if (n < 1 || n > kTableCap) throw std::invalid_argument("group order out of range");
    if (mul_.size() != static_cast<size_t>(n) * n) throw std::invalid_argument("multiplication table has wrong size");
    for (uint16_t v : mul_)
        if (v >= n) throw std::invalid_argument("multiplication table entry out of range");

    // Latin square: each row and column is a permutation
    std::vector<char> seen(n);
    for (int r = 0; r < n; ++r) {
        std::fill(seen.begin(), seen.end(), 0);
        for (int c = 0; c < n; ++c) {
            int v = mul(r, c);
            if (seen[v]) throw std::invalid_argument("multiplication table row is not a permutation");
            seen[v] = 1;
        }
    }
    for (int c = 0; c < n; ++c) {
        std::fill(seen.begin(), seen.end(), 0);
        for (int r = 0; r < n; ++r) {
            int v = mul(r, c);
            if (seen[v]) throw std::invalid_argument("multiplication table column is not a permutation");
            seen[v] = 1;
        }
    }

    for (int e = 0; e < n; ++e) {
        bool ok = true;
        for (int x = 0; x < n && ok; ++x) ok = mul(e, x) == x && mul(x, e) == x;
        if (ok) {
            identity_ = e;
            break;
        }
    }
    if (identity_ < 0) throw std::invalid_argument("multiplication table has no identity");

    inv_.assign(n, 0);
    for (int x = 0; x < n; ++x) {
        int found = -1;
        for (int y = 0; y < n; ++y) {
            if (mul(x, y) == identity_) {
                found = y;
                break;
            }
        }
        if (found < 0 || mul(found, x) != identity_) throw std::invalid_argument("element without two-sided inverse");
        inv_[x] = static_cast<uint16_t>(found);
    }

    // exhaustive associativity, gated to small tables
    if (n <= kSetCap) {
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b) {
                int ab = mul(a, b);
                for (int c = 0; c < n; ++c)
                    if (mul(ab, c) != mul(a, mul(b, c)))
                        throw std::invalid_argument("multiplication table is not associative");
            }
    }
}

GroupTable make_cyclic(int n) {
    if (n < 1 || n > kSetCap) throw std::invalid_argument("cyclic group order must be in [1,128]");
    std::vector<uint16_t> t(static_cast<size_t>(n) * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) t[static_cast<size_t>(i) * n + j] = static_cast<uint16_t>((i + j) % n);
    return GroupTable(n, "C" + std::to_string(n), std::move(t));
}

GroupTable make_direct_product(const GroupTable& a, const GroupTable& b) {
    long long n = static_cast<long long>(a.order()) * b.order();
    if (n > kSetCap) throw std::invalid_argument("direct product order exceeds 128");
    int na = a.order(), nb = b.order(), nn = static_cast<int>(n);
    std::vector<uint16_t> t(static_cast<size_t>(nn) * nn);
    for (int i = 0; i < nn; ++i) {
        int ia = i / nb, ib = i % nb;
        for (int j = 0; j < nn; ++j) {
            int ja = j / nb, jb = j % nb;
            t[static_cast<size_t>(i) * nn + j] = static_cast<uint16_t>(a.mul(ia, ja) * nb + b.mul(ib, jb));
        }
    }
    return GroupTable(nn, a.label() + "x" + b.label(), std::move(t));
}

GroupTable make_dihedral(int n) {
    if (n < 1 || n > 32) throw std::invalid_argument("dihedral parameter must be in [1,32]");
    int nn = 2 * n;
    std::vector<uint16_t> t(static_cast<size_t>(nn) * nn);
    auto at = [&](int i, int j) -> uint16_t& { return t[static_cast<size_t>(i) * nn + j]; };
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            at(i, j) = static_cast<uint16_t>((i + j) % n);                   // a^i a^j
            at(i, n + j) = static_cast<uint16_t>(n + (i + j) % n);           // a^i (a^j b)
            at(n + i, j) = static_cast<uint16_t>(n + ((i - j) % n + n) % n); // (a^i b) a^j
            at(n + i, n + j) = static_cast<uint16_t>(((i - j) % n + n) % n); // (a^i b)(a^j b)
        }
    return GroupTable(nn, "D" + std::to_string(nn), std::move(t));
}

Agl1 make_agl1(int p, int k) {
    FieldSpec field = field_make(p, k);
    int q = field.q;
    if (q < 3) throw std::invalid_argument("AGL1 requires q >= 3");
    long long n = static_cast<long long>(q) * (q - 1);
    if (n > kTableCap) throw std::invalid_argument("AGL1 order exceeds 4096");

    // index arithmetic tables for GF(q)
    std::vector<int> fmul(static_cast<size_t>(q) * q), fadd(static_cast<size_t>(q) * q);
    for (int i = 0; i < q; ++i) {
        FieldElement ei = field_element(field, i);
        for (int j = 0; j < q; ++j) {
            FieldElement ej = field_element(field, j);
            fmul[static_cast<size_t>(i) * q + j] = field_index(field_mul(ei, ej));
            fadd[static_cast<size_t>(i) * q + j] = field_index(field_add(ei, ej));
        }
    }

    int nn = static_cast<int>(n);
    std::vector<uint16_t> t(static_cast<size_t>(nn) * nn);
    auto enc = [&](int m, int tt) { return (m - 1) * q + tt; };
    for (int m1 = 1; m1 < q; ++m1)
        for (int t1 = 0; t1 < q; ++t1) {
            int i = enc(m1, t1);
            for (int m2 = 1; m2 < q; ++m2)
                for (int t2 = 0; t2 < q; ++t2) {
                    int m = fmul[static_cast<size_t>(m1) * q + m2];
                    int tv = fadd[static_cast<size_t>(fmul[static_cast<size_t>(t1) * q + m2]) * q + t2];
                    t[static_cast<size_t>(i) * nn + enc(m2, t2)] = static_cast<uint16_t>(enc(m, tv));
                }
        }
    Agl1 out{GroupTable(nn, "AGL1(" + std::to_string(q) + ")", std::move(t)), {}, {}, std::move(field)};
    for (int tt = 0; tt < q; ++tt) out.kernel.set(enc(1, tt));
    for (int m = 1; m < q; ++m) out.complement.set(enc(m, 0));
    return out;
}

bool is_subgroup_set(const GroupTable& g, const ElemSet& s) {
    if (g.order() > kSetCap) return false;
    if (!s.test(g.identity())) return false;
    for (int x = s.min(); x >= 0; x = s.next(x)) {
        if (!s.test(g.inv(x))) return false;
        for (int y = s.min(); y >= 0; y = s.next(y))
            if (!s.test(g.mul(x, y))) return false;
    }
    return true;
}

SubgroupHandle make_subgroup(const GroupTable& g, const ElemSet& members) {
    require_small(g, "make_subgroup");
    if (!is_subgroup_set(g, members)) throw std::invalid_argument("member set is not a subgroup");
    return SubgroupHandle{&g, members};
}

SubgroupHandle whole_group(const GroupTable& g) {
    require_small(g, "whole_group");
    return SubgroupHandle{&g, ElemSet::full(g.order())};
}

ElemSet closure(const GroupTable& g, const ElemSet& seed) {
    require_small(g, "closure");
    ElemSet s = ElemSet::single(g.identity());
    std::vector<int> elems{g.identity()};
    std::vector<int> work;
    for (int x = seed.min(); x >= 0; x = seed.next(x))
        if (!s.test(x)) {
            s.set(x);
            elems.push_back(x);
            work.push_back(x);
        }
    while (!work.empty()) {
        int x = work.back();
        work.pop_back();
        size_t count = elems.size();
        for (size_t i = 0; i < count; ++i) {
            int y = elems[i];
            for (int z : {g.mul(x, y), g.mul(y, x)}) {
                if (!s.test(z)) {
                    s.set(z);
                    elems.push_back(z);
                    work.push_back(z);
                }
            }
        }
    }
    return s;
}

std::vector<SubgroupHandle> all_subgroups(const GroupTable& g) {
    require_small(g, "all_subgroups");
    using Key = std::pair<uint64_t, uint64_t>;
    auto key = [](const ElemSet& s) { return Key{s.word(0), s.word(1)}; };

    std::set<Key> seen;
    std::vector<ElemSet> cyclic;
    std::vector<ElemSet> result;

    ElemSet trivial = ElemSet::single(g.identity());
    seen.insert(key(trivial));
    result.push_back(trivial);

    for (int x = 0; x < g.order(); ++x) {
        ElemSet c = closure(g, ElemSet::single(x));
        if (seen.insert(key(c)).second) {
            cyclic.push_back(c);
            result.push_back(c);
        }
    }
    std::vector<ElemSet> frontier = result;
    while (!frontier.empty()) {
        std::vector<ElemSet> next;
        for (const ElemSet& a : frontier) {
            for (const ElemSet& c : cyclic) {
                if (a.contains_all(c)) continue;
                ElemSet j = closure(g, a | c);
                if (seen.insert(key(j)).second) {
                    next.push_back(j);
                    result.push_back(j);
                }
            }
        }
        frontier = std::move(next);
    }
    std::vector<SubgroupHandle> out;
    out.reserve(result.size());
    for (const ElemSet& s : result) out.push_back(SubgroupHandle{&g, s});
    std::sort(out.begin(), out.end(), [](const SubgroupHandle& a, const SubgroupHandle& b) {
        int ca = a.members.count(), cb = b.members.count();
        if (ca != cb) return ca < cb;
        return a.members.to_vector() < b.members.to_vector();
    });
    return out;
}

ConjugacyPartition conjugacy_classes(const GroupTable& g) {
    require_small(g, "conjugacy_classes");
    ConjugacyPartition part;
    part.parent = &g;
    part.class_of.assign(g.order(), -1);
    for (int x = 0; x < g.order(); ++x) {
        if (part.class_of[x] >= 0) continue;
        int id = part.class_count();
        ElemSet cls;
        for (int y = 0; y < g.order(); ++y) {
            int c = g.conj(x, y);
            cls.set(c);
            part.class_of[c] = id;
        }
        part.classes.push_back(cls);
    }
    return part;
}

SubgroupHandle centralizer(const GroupTable& g, int x) {
    require_small(g, "centralizer");
    ElemSet s;
    for (int y = 0; y < g.order(); ++y)
        if (g.mul(x, y) == g.mul(y, x)) s.set(y);
    return SubgroupHandle{&g, s};
}

SubgroupHandle center(const GroupTable& g) {
    require_small(g, "center");
    ElemSet s;
    for (int x = 0; x < g.order(); ++x) {
        bool central = true;
        for (int y = 0; y < g.order() && central; ++y) central = g.mul(x, y) == g.mul(y, x);
        if (central) s.set(x);
    }
    return SubgroupHandle{&g, s};
}

SubgroupHandle core_of(const GroupTable& g, const SubgroupHandle& h) {
    if (h.parent != &g || !is_subgroup_set(g, h.members))
        throw std::invalid_argument("core_of requires a subgroup of the given group");
    ElemSet core = h.members;
    for (int x = 0; x < g.order(); ++x) {
        ElemSet conj;
        for (int m = h.members.min(); m >= 0; m = h.members.next(m)) conj.set(g.conj(m, x));
        core &= conj;
    }
    return SubgroupHandle{&g, core};
}

bool is_left_transversal(const GroupTable& g, const SubgroupHandle& h, const ElemSet& t) {
    int hs = h.members.count();
    if (hs == 0 || g.order() % hs != 0) return false;
    if (t.count() != g.order() / hs) return false;
    for (int a = t.min(); a >= 0; a = t.next(a))
        for (int b = t.next(a); b >= 0; b = t.next(b))
            if (h.members.test(g.mul(g.inv(a), b))) return false;
    return true;
}

ElemSet squares_in(const SubgroupHandle& h) {
    ElemSet s;
    const GroupTable& g = *h.parent;
    for (int x = h.members.min(); x >= 0; x = h.members.next(x)) s.set(g.mul(x, x));
    return s;
}

ElemSet squares_of(const GroupTable& g) {
    require_small(g, "squares_of");
    ElemSet s;
    for (int x = 0; x < g.order(); ++x) s.set(g.mul(x, x));
    return s;
}

bool is_abelian(const GroupTable& g) {
    for (int x = 0; x < g.order(); ++x)
        for (int y = x + 1; y < g.order(); ++y)
            if (g.mul(x, y) != g.mul(y, x)) return false;
    return true;
}

int element_order(const GroupTable& g, int x) {
    int ord = 1;
    int cur = x;
    while (cur != g.identity()) {
        cur = g.mul(cur, x);
        ++ord;
    }
    return ord;
}

AbelianParts abelian_decomposition(const GroupTable& g) {
    require_small(g, "abelian_decomposition");
    if (!is_abelian(g)) throw std::invalid_argument("abelian_decomposition requires an abelian group");
    ElemSet q, k;
    for (int x = 0; x < g.order(); ++x) {
        int ord = element_order(g, x);
        if ((ord & (ord - 1)) == 0) q.set(x);  // 2-power order
        if (ord % 2 == 1) k.set(x);            // odd order
    }
    ElemSet phi;
    for (int x = q.min(); x >= 0; x = q.next(x)) phi.set(g.mul(x, x));
    return AbelianParts{SubgroupHandle{&g, q}, SubgroupHandle{&g, k}, SubgroupHandle{&g, phi}};
}

void write_group_table(std::ostream& os, const GroupTable& g) {
    os << g.order() << "\n" << g.label() << "\n";
    for (int i = 0; i < g.order(); ++i) {
        for (int j = 0; j < g.order(); ++j) {
            if (j) os << ' ';
            os << g.mul(i, j);
        }
        os << "\n";
    }
}

GroupTable read_group_table(std::istream& is) {
    int n = 0;
    if (!(is >> n)) throw std::invalid_argument("group table: missing order");
    std::string label;
    std::getline(is, label);  // rest of the order line
    std::getline(is, label);
    std::vector<uint16_t> t;
    t.reserve(static_cast<size_t>(n) * n);
    for (long long i = 0; i < static_cast<long long>(n) * n; ++i) {
        int v;
        if (!(is >> v)) throw std::invalid_argument("group table: truncated rows");
        if (v < 0) throw std::invalid_argument("group table: negative entry");
        t.push_back(static_cast<uint16_t>(v));
    }
    return GroupTable(n, label, std::move(t));
}

}  // namespace cscode
