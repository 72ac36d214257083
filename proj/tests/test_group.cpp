#include <doctest.h>

#include <map>
#include <set>
#include <sstream>

#include "cscode/group.hpp"

using namespace cscode;

namespace {

std::map<int, int> order_profile(const GroupTable& g) {
    std::map<int, int> profile;
    for (int x = 0; x < g.order(); ++x) ++profile[element_order(g, x)];
    return profile;
}

// independent subgroup oracle: scan all subsets (n <= 16)
int subgroup_count_by_subset_scan(const GroupTable& g) {
    int n = g.order();
    REQUIRE(n <= 16);
    int count = 0;
    for (uint32_t mask = 1; mask < (uint32_t{1} << n); ++mask) {
        if (!(mask >> g.identity() & 1)) continue;
        ElemSet s;
        for (int i = 0; i < n; ++i)
            if (mask >> i & 1) s.set(i);
        if (is_subgroup_set(g, s)) ++count;
    }
    return count;
}

}  // namespace

TEST_CASE("cyclic group basics") {
    GroupTable c1 = make_cyclic(1);
    CHECK(c1.order() == 1);

    GroupTable c6 = make_cyclic(6);
    CHECK(element_order(c6, 2) == 3);

    GroupTable c4 = make_cyclic(4);
    CHECK(c4.inv(3) == 1);

    CHECK_THROWS(make_cyclic(0));
    CHECK_THROWS(make_cyclic(129));
}

TEST_CASE("direct products") {
    GroupTable klein = make_direct_product(make_cyclic(2), make_cyclic(2));
    int involutions = 0;
    for (int x = 0; x < 4; ++x)
        if (x != klein.identity() && element_order(klein, x) == 2) ++involutions;
    CHECK(involutions == 3);

    GroupTable c2xc3 = make_direct_product(make_cyclic(2), make_cyclic(3));
    CHECK(order_profile(c2xc3) == order_profile(make_cyclic(6)));

    GroupTable c1xg = make_direct_product(make_cyclic(1), make_cyclic(5));
    CHECK(order_profile(c1xg) == order_profile(make_cyclic(5)));

    CHECK_THROWS(make_direct_product(make_cyclic(16), make_cyclic(16)));
}

TEST_CASE("dihedral groups") {
    GroupTable d6 = make_dihedral(3);
    int involutions = 0;
    for (int x = 0; x < 6; ++x)
        if (x != d6.identity() && element_order(d6, x) == 2) ++involutions;
    CHECK(involutions == 3);

    GroupTable d12 = make_dihedral(6);
    CHECK(center(d12).members == ElemSet::of({0, 3}));

    GroupTable d8 = make_dihedral(4);
    // class of b: conjugate index 4 by everything
    ElemSet cls;
    for (int x = 0; x < 8; ++x) cls.set(d8.conj(4, x));
    CHECK(cls == ElemSet::of({4, 6}));
}

TEST_CASE("AGL1 construction") {
    Agl1 a3 = make_agl1(3, 1);
    CHECK(a3.table.order() == 6);
    CHECK(center(a3.table).members == ElemSet::single(a3.table.identity()));

    Agl1 a5 = make_agl1(5, 1);
    CHECK(a5.table.order() == 20);
    CHECK(a5.kernel.count() == 5);
    CHECK(a5.complement.count() == 4);
    CHECK(is_subgroup_set(a5.table, a5.kernel));
    CHECK(is_subgroup_set(a5.table, a5.complement));

    Agl1 a4 = make_agl1(2, 2);
    CHECK(a4.table.order() == 12);
    CHECK(center(a4.table).members == ElemSet::single(a4.table.identity()));
    // complement is cyclic of order 3
    bool has_order3 = false;
    for (int x = a4.complement.min(); x >= 0; x = a4.complement.next(x))
        has_order3 = has_order3 || element_order(a4.table, x) == 3;
    CHECK(has_order3);

    CHECK_THROWS(make_agl1(2, 1));  // q = 2 has a trivial complement
}

TEST_CASE("subgroup enumeration matches the subset-scan oracle") {
    for (const GroupTable& g :
         {make_cyclic(6), make_dihedral(6), make_direct_product(make_cyclic(2), make_cyclic(2)),
          make_dihedral(4), make_agl1(3, 1).table}) {
        CHECK(static_cast<int>(all_subgroups(g).size()) == subgroup_count_by_subset_scan(g));
    }

    CHECK(all_subgroups(make_cyclic(6)).size() == 4);
    CHECK(all_subgroups(make_dihedral(6)).size() == 16);
    CHECK(all_subgroups(make_direct_product(make_cyclic(2), make_cyclic(2))).size() == 5);
}

TEST_CASE("conjugacy classes") {
    GroupTable c5 = make_cyclic(5);
    CHECK(conjugacy_classes(c5).class_count() == 5);

    GroupTable d12 = make_dihedral(6);
    ConjugacyPartition cc = conjugacy_classes(d12);
    std::vector<ElemSet> expect = {
        ElemSet::of({0}),        ElemSet::of({3}),        ElemSet::of({1, 5}),
        ElemSet::of({2, 4}),     ElemSet::of({6, 8, 10}), ElemSet::of({7, 9, 11}),
    };
    REQUIRE(cc.class_count() == 6);
    for (int i = 0; i < 6; ++i) CHECK(cc.classes[i] == expect[i]);

    Agl1 a5 = make_agl1(5, 1);
    std::multiset<int> sizes;
    for (const ElemSet& cls : conjugacy_classes(a5.table).classes) sizes.insert(cls.count());
    CHECK(sizes == std::multiset<int>{1, 4, 5, 5, 5});
}

TEST_CASE("centralizer and center") {
    GroupTable d12 = make_dihedral(6);
    CHECK(centralizer(d12, d12.identity()).members == ElemSet::full(12));
    CHECK(centralizer(d12, 6).members == ElemSet::of({0, 3, 6, 9}));
    CHECK(centralizer(d12, 1).members == ElemSet::of({0, 1, 2, 3, 4, 5}));

    GroupTable c8 = make_cyclic(8);
    CHECK(center(c8).members == ElemSet::full(8));
}

TEST_CASE("core of a subgroup") {
    GroupTable d12 = make_dihedral(6);
    SubgroupHandle hb = make_subgroup(d12, ElemSet::of({0, 6}));
    CHECK(core_of(d12, hb).members == ElemSet::single(0));

    SubgroupHandle ha3 = make_subgroup(d12, ElemSet::of({0, 3}));
    CHECK(core_of(d12, ha3).members == ElemSet::of({0, 3}));

    SubgroupHandle rot = make_subgroup(d12, ElemSet::of({0, 1, 2, 3, 4, 5}));
    CHECK(core_of(d12, rot).members == rot.members);
}

TEST_CASE("core properties against the subgroup lattice") {
    for (const GroupTable& g : {make_dihedral(4), make_dihedral(6), make_agl1(3, 1).table}) {
        std::vector<SubgroupHandle> subs = all_subgroups(g);
        for (const SubgroupHandle& h : subs) {
            ElemSet core = core_of(g, h).members;
            CHECK(h.members.contains_all(core));
            // normal in G
            for (int a = 0; a < g.order(); ++a)
                for (int m = core.min(); m >= 0; m = core.next(m)) CHECK(core.test(g.conj(m, a)));
            // contains every normal subgroup inside H
            for (const SubgroupHandle& k : subs) {
                if (!h.members.contains_all(k.members)) continue;
                bool normal = true;
                for (int a = 0; a < g.order() && normal; ++a)
                    for (int m = k.members.min(); m >= 0 && normal; m = k.members.next(m))
                        normal = k.members.test(g.conj(m, a));
                if (normal) CHECK(core.contains_all(k.members));
            }
        }
    }
}

TEST_CASE("left transversals") {
    GroupTable c6 = make_cyclic(6);
    SubgroupHandle h = make_subgroup(c6, ElemSet::of({0, 3}));
    CHECK(is_left_transversal(c6, h, ElemSet::of({0, 1, 2})));
    CHECK_FALSE(is_left_transversal(c6, h, ElemSet::of({0, 1, 4})));

    GroupTable d4 = make_dihedral(2);
    CHECK(is_left_transversal(d4, whole_group(d4), ElemSet::single(0)));
}

TEST_CASE("squares") {
    GroupTable c5 = make_cyclic(5);
    CHECK(squares_in(whole_group(c5)) == ElemSet::full(5));  // odd order

    GroupTable c6 = make_cyclic(6);
    SubgroupHandle c2 = make_subgroup(c6, ElemSet::of({0, 3}));
    CHECK(squares_in(c2) == ElemSet::single(0));

    GroupTable c8 = make_cyclic(8);
    CHECK(squares_in(whole_group(c8)) == ElemSet::of({0, 2, 4, 6}));
}

TEST_CASE("class equation and centralizer-orbit identity") {
    for (const GroupTable& g :
         {make_dihedral(6), make_dihedral(8), make_agl1(5, 1).table, make_agl1(2, 2).table,
          make_cyclic(12)}) {
        ConjugacyPartition cc = conjugacy_classes(g);
        int total = 0;
        for (const ElemSet& cls : cc.classes) {
            total += cls.count();
            CHECK(g.order() % cls.count() == 0);
        }
        CHECK(total == g.order());
        for (int x = 0; x < g.order(); ++x)
            CHECK(cc.classes[cc.class_of[x]].count() * centralizer(g, x).order() == g.order());
    }
}

TEST_CASE("abelian decomposition") {
    GroupTable c12 = make_cyclic(12);
    AbelianParts parts = abelian_decomposition(c12);
    CHECK(parts.sylow2.order() == 4);
    CHECK(parts.hall2p.order() == 3);
    CHECK(parts.phi_sylow2.order() == 2);

    GroupTable c9 = make_cyclic(9);
    AbelianParts odd = abelian_decomposition(c9);
    CHECK(odd.sylow2.order() == 1);
    CHECK(odd.hall2p.order() == 9);
    CHECK(odd.phi_sylow2.order() == 1);

    GroupTable klein = make_direct_product(make_cyclic(2), make_cyclic(2));
    AbelianParts kp = abelian_decomposition(klein);
    CHECK(kp.sylow2.order() == 4);
    CHECK(kp.hall2p.order() == 1);
    CHECK(kp.phi_sylow2.order() == 1);

    CHECK_THROWS(abelian_decomposition(make_dihedral(3)));
}

TEST_CASE("squares factor through the decomposition") {
    // squares of an abelian group equal Phi(Q) * K, exhaustively
    for (const GroupTable& g : {make_cyclic(12), make_cyclic(8), make_cyclic(15),
                                make_direct_product(make_cyclic(2), make_cyclic(4)),
                                make_direct_product(make_cyclic(2), make_cyclic(6))}) {
        AbelianParts parts = abelian_decomposition(g);
        ElemSet product;
        for (int u = parts.phi_sylow2.members.min(); u >= 0; u = parts.phi_sylow2.members.next(u))
            for (int v = parts.hall2p.members.min(); v >= 0; v = parts.hall2p.members.next(v))
                product.set(g.mul(u, v));
        CHECK(product == squares_in(whole_group(g)));
    }
}

TEST_CASE("Frattini subgroup of an abelian 2-group is its square set") {
    // oracle: intersection of the maximal subgroups, via the full lattice
    std::vector<GroupTable> two_groups;
    two_groups.push_back(make_cyclic(2));
    two_groups.push_back(make_cyclic(4));
    two_groups.push_back(make_direct_product(make_cyclic(2), make_cyclic(2)));
    two_groups.push_back(make_cyclic(8));
    two_groups.push_back(make_direct_product(make_cyclic(2), make_cyclic(4)));
    two_groups.push_back(
        make_direct_product(make_direct_product(make_cyclic(2), make_cyclic(2)), make_cyclic(2)));
    two_groups.push_back(make_cyclic(16));
    two_groups.push_back(make_direct_product(make_cyclic(2), make_cyclic(8)));
    two_groups.push_back(make_direct_product(make_cyclic(4), make_cyclic(4)));
    two_groups.push_back(
        make_direct_product(make_direct_product(make_cyclic(2), make_cyclic(2)), make_cyclic(4)));
    two_groups.push_back(make_direct_product(
        make_direct_product(make_cyclic(2), make_cyclic(2)), make_direct_product(make_cyclic(2), make_cyclic(2))));
    two_groups.push_back(make_cyclic(32));
    two_groups.push_back(make_direct_product(make_cyclic(2), make_cyclic(16)));
    two_groups.push_back(make_direct_product(make_cyclic(4), make_cyclic(8)));
    two_groups.push_back(
        make_direct_product(make_direct_product(make_cyclic(2), make_cyclic(4)), make_cyclic(4)));
    two_groups.push_back(
        make_direct_product(make_direct_product(make_cyclic(2), make_cyclic(2)), make_cyclic(8)));

    for (const GroupTable& q : two_groups) {
        ElemSet sq = squares_in(whole_group(q));
        ElemSet frattini = ElemSet::full(q.order());
        bool has_maximal = false;
        for (const SubgroupHandle& m : all_subgroups(q)) {
            if (m.order() * 2 != q.order()) continue;  // maximal in a 2-group
            frattini &= m.members;
            has_maximal = true;
        }
        if (!has_maximal) frattini = ElemSet::single(q.identity());  // trivial group
        CHECK(frattini == sq);
    }
}

TEST_CASE("group table text round-trip") {
    for (const GroupTable& g : {make_dihedral(5), make_agl1(2, 2).table, make_cyclic(7)}) {
        std::stringstream ss;
        write_group_table(ss, g);
        GroupTable back = read_group_table(ss);
        CHECK(back.order() == g.order());
        CHECK(back.label() == g.label());
        bool equal = true;
        for (int i = 0; i < g.order() && equal; ++i)
            for (int j = 0; j < g.order() && equal; ++j) equal = g.mul(i, j) == back.mul(i, j);
        CHECK(equal);
    }
    std::stringstream bad("3\nX\n0 1 2\n1 2 0\n");
    CHECK_THROWS(read_group_table(bad));
}

TEST_CASE("table validation rejects broken inputs") {
    // non-associative Latin square (a loop that is not a group)
    std::vector<uint16_t> loop = {
        0, 1, 2, 3, 4,
        1, 0, 3, 4, 2,
        2, 4, 0, 1, 3,
        3, 2, 4, 0, 1,
        4, 3, 1, 2, 0,
    };
    CHECK_THROWS(GroupTable(5, "loop", loop));

    std::vector<uint16_t> not_latin = {0, 0, 0, 0};
    CHECK_THROWS(GroupTable(2, "bad", not_latin));
}
