#include "cscode/suites.hpp"

#include <algorithm>
#include <functional>
#include <random>
#include <set>
#include <sstream>

namespace cscode {

namespace {

// prime factor pairs for make_agl1
std::pair<int, int> prime_power(int q) {
    for (int p = 2; p <= q; ++p) {
        if (!is_prime(p) || q % p) continue;
        int k = 0, v = q;
        while (v % p == 0) {
            v /= p;
            ++k;
        }
        if (v == 1) return {p, k};
    }
    throw std::invalid_argument("q is not a prime power");
}

std::string describe(const GroupTable& g, const SubgroupHandle& h) {
    std::ostringstream os;
    os << g.label() << " H={";
    bool first = true;
    for (int m : h.members.to_vector()) {
        if (!first) os << ',';
        os << m;
        first = false;
    }
    os << '}';
    return os.str();
}

bool is_normal(const GroupTable& g, const SubgroupHandle& h) {
    for (int a = 0; a < g.order(); ++a)
        for (int m = h.members.min(); m >= 0; m = h.members.next(m))
            if (!h.members.test(g.conj(m, a))) return false;
    return true;
}

void for_each_class_union(const GroupTable& g, const ConjugacyPartition& cc,
                          const std::function<void(uint32_t, const NormalSubset&)>& fn,
                          uint64_t exhaustive_cap = uint64_t{1} << 20, uint64_t sample_cap = 100000,
                          uint64_t seed = 0xC5C0DEull) {
    int c = cc.class_count();
    if (c < 63 && (uint64_t{1} << c) <= exhaustive_cap) {
        for (uint32_t mask = 0; mask < (uint32_t{1} << c); ++mask) {
            std::vector<int> ids;
            for (uint32_t m = mask; m; m &= m - 1) ids.push_back(__builtin_ctz(m));
            fn(mask, NormalSubset::from_classes(cc, ids));
        }
        return;
    }
    std::mt19937_64 rng(seed);
    std::set<uint64_t> sample;
    while (sample.size() < sample_cap) sample.insert(rng() & ((uint64_t{1} << c) - 1));
    for (uint64_t mask : sample) {
        std::vector<int> ids;
        for (uint64_t m = mask; m; m &= m - 1) ids.push_back(__builtin_ctzll(m));
        fn(static_cast<uint32_t>(mask), NormalSubset::from_classes(cc, ids));
    }
}

}  // namespace

std::vector<GroupTable> standard_corpus() {
    std::vector<GroupTable> corpus;
    for (int n = 1; n <= 16; ++n) corpus.push_back(make_cyclic(n));
    corpus.push_back(make_direct_product(make_cyclic(2), make_cyclic(2)));
    corpus.push_back(make_direct_product(make_cyclic(2), make_cyclic(4)));
    corpus.push_back(make_direct_product(make_direct_product(make_cyclic(2), make_cyclic(2)), make_cyclic(2)));
    corpus.push_back(make_direct_product(make_cyclic(3), make_cyclic(3)));
    corpus.push_back(make_direct_product(make_cyclic(2), make_cyclic(6)));
    for (int n = 1; n <= 8; ++n) corpus.push_back(make_dihedral(n));
    for (int q : {3, 4, 5, 7}) {
        auto [p, k] = prime_power(q);
        corpus.push_back(make_agl1(p, k).table);
    }
    return corpus;
}

SuiteReport run_oracle_suite(const std::vector<GroupTable>& corpus) {
    SuiteReport report{.name = "oracle"};
    for (const GroupTable& g : corpus) {
        ConjugacyPartition cc = conjugacy_classes(g);
        std::vector<SubgroupHandle> subgroups = all_subgroups(g);
        for_each_class_union(g, cc, [&](uint32_t, const NormalSubset& x) {
            CayleySumGraph graph = build_cs_graph(g, x);
            int size = x.size();
            for (const SubgroupHandle& h : subgroups) {
                int index = g.order() / h.order();
                if (size == index - 1) {
                    ++report.checks;
                    if (is_perfect_code(graph, h.members) != pc_criterion(g, h, x)) {
                        ++report.failures;
                        report.notes.push_back("pc oracle mismatch: " + describe(g, h));
                    }
                }
                if (size == index) {
                    ++report.checks;
                    if (is_total_perfect_code(graph, h.members) != tpc_criterion(g, h, x)) {
                        ++report.failures;
                        report.notes.push_back("tpc oracle mismatch: " + describe(g, h));
                    }
                }
            }
        });
    }
    return report;
}

SuiteReport run_connectivity_suite(const std::vector<GroupTable>& corpus) {
    SuiteReport report{.name = "connectivity"};
    for (const GroupTable& g : corpus) {
        ConjugacyPartition cc = conjugacy_classes(g);
        for_each_class_union(
            g, cc,
            [&](uint32_t, const NormalSubset& x) {
                ++report.checks;
                if (is_connected_bfs(build_cs_graph(g, x)) != is_connected_algebraic(g, x)) {
                    ++report.failures;
                    report.notes.push_back("connectivity mismatch: " + g.label());
                }
            },
            uint64_t{1} << 20, 100000);
    }
    return report;
}

SuiteReport run_bridge_suite(const std::vector<GroupTable>& corpus) {
    SuiteReport report{.name = "bridge"};
    for (const GroupTable& g : corpus) {
        ConjugacyPartition cc = conjugacy_classes(g);
        for (const SubgroupHandle& h : all_subgroups(g)) {
            if (!is_normal(g, h)) continue;
            ++report.checks;
            if (!pc_tpc_bridge_check(g, cc, h)) {
                ++report.failures;
                report.notes.push_back("bridge failed: " + describe(g, h));
            }
        }
    }
    return report;
}

SuiteReport run_obstruction_suite(const std::vector<GroupTable>& corpus) {
    SuiteReport report{.name = "obstruction"};
    for (const GroupTable& g : corpus) {
        ConjugacyPartition cc = conjugacy_classes(g);
        ElemSet zg = center(g).members;
        for (const SubgroupHandle& h : all_subgroups(g)) {
            ElemSet core = core_of(g, h).members;
            if (zg.contains_all(core)) continue;
            for (CodeKind kind : {CodeKind::perfect, CodeKind::total_perfect}) {
                ++report.checks;
                EnumerateOptions opts;
                opts.connected_only = true;
                EnumerateResult res = enumerate_admitting(g, cc, h, kind, opts);
                if (!res.entries.empty()) {
                    ++report.failures;
                    report.notes.push_back("obstruction violated: " + describe(g, h));
                }
            }
        }
    }
    return report;
}

SuiteReport run_index_equation_suite(const std::vector<GroupTable>& corpus) {
    SuiteReport report{.name = "index-equation"};
    for (const GroupTable& g : corpus) {
        ConjugacyPartition cc = conjugacy_classes(g);
        std::vector<SubgroupHandle> subgroups = all_subgroups(g);
        for_each_class_union(g, cc, [&](uint32_t, const NormalSubset& x) {
            int size = x.size();
            for (const SubgroupHandle& h : subgroups) {
                int index = g.order() / h.order();
                for (CodeKind kind : {CodeKind::perfect, CodeKind::total_perfect}) {
                    int target = kind == CodeKind::perfect ? index - 1 : index;
                    if (size != target) continue;
                    bool verdict = kind == CodeKind::perfect ? pc_criterion(g, h, x)
                                                             : tpc_criterion(g, h, x);
                    if (!verdict) continue;
                    ++report.checks;
                    if (!necessary_conditions(g, cc, h, x, kind).empty()) {
                        ++report.failures;
                        report.notes.push_back("necessary condition violated on true certificate: " +
                                               describe(g, h));
                    }
                }
            }
        });
    }
    return report;
}

SuiteReport run_dihedral_suite(int max_n) {
    SuiteReport report{.name = "dihedral"};
    for (int n = 1; n <= max_n; ++n) {
        GroupTable d = make_dihedral(n);
        ConjugacyPartition cc = conjugacy_classes(d);
        for (CodeKind kind : {CodeKind::perfect, CodeKind::total_perfect}) {
            ++report.checks;
            DiffReport diff = verify_dihedral_classification(d, cc, kind);
            if (!diff.empty_diff()) {
                ++report.failures;
                std::ostringstream os;
                os << "dihedral diff nonempty: n=" << n << " kind=" << to_string(kind)
                   << " extra=" << diff.extra.size() << " missing=" << diff.missing.size();
                report.notes.push_back(os.str());
            }
        }
    }
    return report;
}

namespace {

// exhaustive oracle: is H a perfect code of some regular CS graph?  Searches
// every transversal shape (one representative per nonidentity coset) for a
// square-free X.
bool oracle_regular_pc_exists(const GroupTable& g, const SubgroupHandle& h) {
    ElemSet sq_g = squares_of(g);
    std::vector<std::vector<int>> cosets;
    ElemSet seen = h.members;
    for (int x = 0; x < g.order(); ++x) {
        if (seen.test(x)) continue;
        std::vector<int> coset;
        for (int m = h.members.min(); m >= 0; m = h.members.next(m)) {
            int y = g.mul(x, m);
            coset.push_back(y);
            seen.set(y);
        }
        cosets.push_back(std::move(coset));
    }
    // abelian group: enough that every coset has a nonsquare representative,
    // but run the product search anyway as the independent route
    auto rec = [&](auto&& self, size_t i) -> bool {
        if (i == cosets.size()) return true;
        for (int cand : cosets[i])
            if (!sq_g.test(cand) && self(self, i + 1)) return true;
        return false;
    };
    return rec(rec, 0);
}

// exhaustive oracle: is H a total perfect code of some regular CS graph?
// Builds every transversal with a nonsquare-of-H common element and tests
// the definitional checkers on the built graph.
bool oracle_regular_tpc_exists(const GroupTable& g, const ConjugacyPartition& cc,
                               const SubgroupHandle& h) {
    ElemSet nonsq_h = h.members - squares_in(h);
    std::vector<std::vector<int>> cosets;
    ElemSet seen = h.members;
    for (int x = 0; x < g.order(); ++x) {
        if (seen.test(x)) continue;
        std::vector<int> coset;
        for (int m = h.members.min(); m >= 0; m = h.members.next(m)) {
            int y = g.mul(x, m);
            coset.push_back(y);
            seen.set(y);
        }
        cosets.push_back(std::move(coset));
    }
    std::vector<int> chosen(cosets.size(), 0);
    for (int z = nonsq_h.min(); z >= 0; z = nonsq_h.next(z)) {
        auto rec = [&](auto&& self, size_t i, ElemSet y) -> bool {
            if (i == cosets.size()) {
                NormalSubset ns = NormalSubset::from_members(cc, y);
                CayleySumGraph graph = build_cs_graph(g, ns);
                return is_regular(graph) && is_total_perfect_code(graph, h.members);
            }
            for (int cand : cosets[i]) {
                ElemSet next = y;
                next.set(cand);
                if (self(self, i + 1, next)) return true;
            }
            return false;
        };
        if (rec(rec, 0, ElemSet::single(z))) return true;
    }
    return false;
}

}  // namespace

SuiteReport run_abelian_suite(int max_order) {
    SuiteReport report{.name = "abelian"};
    for (const GroupTable& g : abelian_groups_up_to(max_order)) {
        ConjugacyPartition cc = conjugacy_classes(g);
        for (const SubgroupHandle& h : all_subgroups(g)) {
            // constructive witness always exists and validates internally
            ++report.checks;
            NormalSubset x = abelian_pc_construct(g, cc, h);
            if (!pc_criterion(g, h, x)) {
                ++report.failures;
                report.notes.push_back("pc construct failed: " + describe(g, h));
            }

            ++report.checks;
            DecideResult reg_pc = abelian_regular_pc_decide(g, cc, h);
            if (reg_pc.ok != oracle_regular_pc_exists(g, h)) {
                ++report.failures;
                report.notes.push_back("regular pc decision disagrees with search: " + describe(g, h));
            }

            ++report.checks;
            DecideResult tpc = abelian_tpc_decide(g, cc, h, false);
            if (tpc.ok != (h.order() % 2 == 0)) {
                ++report.failures;
                report.notes.push_back("total decision differs from parity: " + describe(g, h));
            }

            ++report.checks;
            DecideResult reg_tpc = abelian_tpc_decide(g, cc, h, true);
            if (reg_tpc.ok != oracle_regular_tpc_exists(g, cc, h)) {
                ++report.failures;
                report.notes.push_back("regular total decision disagrees with search: " + describe(g, h));
            }
        }
    }
    return report;
}

SuiteReport run_agl_suite(const std::vector<int>& assert_qs, const std::vector<int>& report_qs,
                          const std::vector<int>& lemma_qs) {
    SuiteReport report{.name = "agl"};
    auto make = [](int q) {
        auto [p, k] = prime_power(q);
        return make_agl1(p, k);
    };

    for (int q : lemma_qs) {
        Agl1 agl = make(q);
        ConjugacyPartition cc = conjugacy_classes(agl.table);
        ++report.checks;
        if (!frobenius_partition_check(agl)) {
            ++report.failures;
            report.notes.push_back("Frobenius partition failed: q=" + std::to_string(q));
        }
        ++report.checks;
        if (!lemma_length_check(agl, cc)) {
            ++report.failures;
            report.notes.push_back("class-length check failed: q=" + std::to_string(q));
        }
    }

    auto run_q = [&](int q, bool assert_complete) {
        Agl1 agl = make(q);
        ConjugacyPartition cc = conjugacy_classes(agl.table);
        AglVerification ver = verify_agl_classification(agl, cc);
        for (const DiffReport* diff : {&ver.pc, &ver.tpc}) {
            ++report.checks;
            if (!diff->sound()) {
                ++report.failures;
                report.notes.push_back("constructed family not found by search: q=" + std::to_string(q) +
                                       " kind=" + to_string(diff->kind));
            }
            if (assert_complete) {
                ++report.checks;
                if (!diff->empty_diff()) {
                    ++report.failures;
                    report.notes.push_back("classification diff nonempty: q=" + std::to_string(q) +
                                           " kind=" + to_string(diff->kind));
                }
            } else {
                std::ostringstream os;
                os << "reported q=" << q << " kind=" << to_string(diff->kind)
                   << " matched=" << diff->matched.size() << " extra=" << diff->extra.size()
                   << " missing=" << diff->missing.size();
                report.notes.push_back(os.str());
            }
        }
    };
    for (int q : assert_qs) run_q(q, true);
    for (int q : report_qs) run_q(q, false);
    return report;
}

}  // namespace cscode
