#include "cscode/classify.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace cscode {

// ---------- abelian groups ----------

namespace {

void require_abelian(const GroupTable& g) {
    if (!is_abelian(g)) throw std::invalid_argument("operation requires an abelian group");
}

// minimum-index representative per left coset of H, scanning ascending
ElemSet canonical_transversal(const GroupTable& g, const SubgroupHandle& h) {
    ElemSet seen, t;
    for (int x = 0; x < g.order(); ++x) {
        if (seen.test(x)) continue;
        t.set(x);
        for (int m = h.members.min(); m >= 0; m = h.members.next(m)) seen.set(g.mul(x, m));
    }
    return t;
}

ElemSet product_set(const GroupTable& g, const ElemSet& a, const ElemSet& b) {
    ElemSet s;
    for (int x = a.min(); x >= 0; x = a.next(x))
        for (int y = b.min(); y >= 0; y = b.next(y)) s.set(g.mul(x, y));
    return s;
}

}  // namespace

NormalSubset abelian_pc_construct(const GroupTable& g, const ConjugacyPartition& cc,
                                  const SubgroupHandle& h) {
    require_abelian(g);
    ElemSet x = canonical_transversal(g, h) - h.members;
    NormalSubset ns = NormalSubset::from_members(cc, x);
    if (!pc_criterion(g, h, ns)) throw std::logic_error("canonical transversal construction failed");
    return ns;
}

DecideResult abelian_regular_pc_decide(const GroupTable& g, const ConjugacyPartition& cc,
                                       const SubgroupHandle& h) {
    require_abelian(g);
    ElemSet sq_g = squares_of(g);
    AbelianParts parts = abelian_decomposition(g);
    ElemSet phi_k = product_set(g, parts.phi_sylow2.members, parts.hall2p.members);

    ElemSet nonsq_in_h = h.members - sq_g;
    bool is_phi_k = h.members == phi_k;
    if (nonsq_in_h.empty() && !is_phi_k) return {false, std::nullopt};

    ElemSet x = canonical_transversal(g, h) - h.members;
    ElemSet square_part = x & sq_g;
    if (!square_part.empty()) {
        // shift the square members into the nonsquare coset region by a
        // nonsquare of H; cosets are preserved since the shift lies in H
        int a = nonsq_in_h.min();
        if (a < 0) throw std::logic_error("square members remain but H has no nonsquare");
        ElemSet shifted;
        for (int zz = square_part.min(); zz >= 0; zz = square_part.next(zz)) shifted.set(g.mul(a, zz));
        x = (x - square_part) | shifted;
    }
    NormalSubset witness = NormalSubset::from_members(cc, x);
    if (!pc_criterion(g, h, witness) || !is_regular(build_cs_graph(g, witness)))
        throw std::logic_error("square-free perfect-code witness failed validation");
    return {true, witness};
}

DecideResult abelian_tpc_decide(const GroupTable& g, const ConjugacyPartition& cc,
                                const SubgroupHandle& h, bool regular) {
    require_abelian(g);
    if (!regular) {
        if (h.members.count() % 2 != 0) return {false, std::nullopt};
        ElemSet nonsq_h = h.members - squares_in(h);
        int z = nonsq_h.min();
        ElemSet y = abelian_pc_construct(g, cc, h).members;
        y.set(z);
        NormalSubset witness = NormalSubset::from_members(cc, y);
        if (!tpc_criterion(g, h, witness)) throw std::logic_error("total witness failed validation");
        return {true, witness};
    }

    // Square-free Y forces its common element with H to be a nonsquare of
    // the whole group, so the decision is exactly "H meets the nonsquares".
    ElemSet sq_g = squares_of(g);
    ElemSet nonsq_in_h = h.members - sq_g;
    if (h.members.count() % 2 != 0 || nonsq_in_h.empty()) return {false, std::nullopt};

    ElemSet y = ElemSet::single(nonsq_in_h.min());
    ElemSet seen = h.members;
    for (int x = 0; x < g.order(); ++x) {
        if (seen.test(x)) continue;
        ElemSet coset;
        for (int m = h.members.min(); m >= 0; m = h.members.next(m)) coset.set(g.mul(x, m));
        seen |= coset;
        ElemSet candidates = coset - sq_g;
        int rep = candidates.min();
        if (rep < 0) throw std::logic_error("coset without nonsquare representative");
        y.set(rep);
    }
    NormalSubset witness = NormalSubset::from_members(cc, y);
    if (!tpc_criterion(g, h, witness) || !is_regular(build_cs_graph(g, witness)))
        throw std::logic_error("square-free total witness failed validation");
    return {true, witness};
}

std::vector<GroupTable> abelian_groups_up_to(int max_order) {
    std::vector<GroupTable> out;
    // partitions of e, each part lambda_i giving a cyclic factor of order p^lambda_i
    auto partitions = [](int e) {
        std::vector<std::vector<int>> parts;
        std::vector<int> cur;
        auto rec = [&](auto&& self, int rest, int maxpart) -> void {
            if (rest == 0) {
                parts.push_back(cur);
                return;
            }
            for (int p = std::min(rest, maxpart); p >= 1; --p) {
                cur.push_back(p);
                self(self, rest - p, p);
                cur.pop_back();
            }
        };
        rec(rec, e, e);
        return parts;
    };

    for (int order = 1; order <= max_order; ++order) {
        // primary decomposition per prime power
        std::vector<std::pair<int, int>> factors;  // (p, e)
        int rest = order;
        for (int p = 2; p * p <= rest; ++p) {
            if (rest % p) continue;
            int e = 0;
            while (rest % p == 0) {
                rest /= p;
                ++e;
            }
            factors.emplace_back(p, e);
        }
        if (rest > 1) factors.emplace_back(rest, 1);

        std::vector<std::vector<std::vector<int>>> choices;
        for (auto [p, e] : factors) choices.push_back(partitions(e));

        std::vector<size_t> pick(choices.size(), 0);
        for (;;) {
            std::optional<GroupTable> g;
            for (size_t f = 0; f < factors.size(); ++f) {
                int p = factors[f].first;
                for (int lambda : choices[f][pick[f]]) {
                    int po = 1;
                    for (int i = 0; i < lambda; ++i) po *= p;
                    GroupTable cyc = make_cyclic(po);
                    g = g ? make_direct_product(*g, cyc) : std::move(cyc);
                }
            }
            out.push_back(g ? std::move(*g) : make_cyclic(1));

            size_t f = 0;
            while (f < pick.size() && ++pick[f] == choices[f].size()) pick[f++] = 0;
            if (f == pick.size()) break;
            if (pick.empty()) break;
        }
    }
    return out;
}

// ---------- dihedral groups ----------

const char* to_string(DihedralFamily f) {
    switch (f) {
        case DihedralFamily::gamma0: return "Gamma0";
        case DihedralFamily::gamma1: return "Gamma1";
        case DihedralFamily::gamma_4k2: return "Gamma";
        case DihedralFamily::gamma0_prime: return "Gamma0'";
        case DihedralFamily::gamma1_prime: return "Gamma1'";
        case DihedralFamily::gamma_4k2_prime: return "Gamma'";
        case DihedralFamily::knn: return "Knn";
    }
    return "?";
}

namespace {

struct Presentation {
    ElemSet rotations;  // cyclic subgroup A of order n
    int generator = -1; // minimum-index element of order n in A
};

// All cyclic order-n subgroups whose complement consists of inverting
// involutions. Unique for n >= 3; the Klein case n = 2 has three.
std::vector<Presentation> dihedral_presentations(const GroupTable& g, int n) {
    std::vector<Presentation> out;
    for (const SubgroupHandle& s : all_subgroups(g)) {
        if (s.order() != n) continue;
        int gen = -1;
        for (int x = s.members.min(); x >= 0; x = s.members.next(x))
            if (element_order(g, x) == n) {
                gen = x;
                break;
            }
        if (gen < 0) continue;  // not cyclic
        bool ok = true;
        ElemSet outside = ElemSet::full(g.order()) - s.members;
        for (int r = outside.min(); r >= 0 && ok; r = outside.next(r)) {
            if (g.mul(r, r) != g.identity()) ok = false;
            for (int u = s.members.min(); u >= 0 && ok; u = s.members.next(u))
                ok = g.conj(u, r) == g.inv(u);
        }
        if (ok) out.push_back({s.members, gen});
    }
    return out;
}

ElemSet involutions_of(const GroupTable& g) {
    ElemSet s;
    for (int x = 0; x < g.order(); ++x)
        if (x != g.identity() && g.mul(x, x) == g.identity()) s.set(x);
    return s;
}

}  // namespace

std::vector<DihedralExpectation> dihedral_expected(const GroupTable& d, const ConjugacyPartition& cc,
                                                   CodeKind kind) {
    if (d.order() % 2 != 0 && d.order() != 2)
        throw std::invalid_argument("dihedral_expected requires a dihedral table");
    int n = d.order() / 2;
    std::vector<DihedralExpectation> out;
    std::set<std::pair<std::vector<int>, std::vector<int>>> seen;

    SubgroupHandle whole = whole_group(d);
    auto emit = [&](DihedralFamily family, const ElemSet& subgroup, const ElemSet& connection,
                    int ell, int k, const ElemSet& z_part) {
        NormalSubset ns = NormalSubset::from_members(cc, connection);
        SubgroupHandle h{&d, subgroup};
        bool ok = (kind == CodeKind::perfect) ? pc_criterion(d, h, ns) : tpc_criterion(d, h, ns);
        if (!ok) throw std::logic_error("generated dihedral expectation failed its criterion");
        auto key = std::make_pair(subgroup.to_vector(), ns.class_ids);
        if (!seen.insert(key).second) return;
        DihedralExpectation e;
        e.n = n;
        e.family = family;
        e.kind = kind;
        e.subgroup = key.first;
        e.class_ids = ns.class_ids;
        e.members = connection;
        e.ell = ell;
        e.k = k;
        e.z_part = z_part.to_vector();
        out.push_back(std::move(e));
    };

    for (const Presentation& pres : dihedral_presentations(d, n)) {
        const ElemSet& a_sub = pres.rotations;
        ElemSet reflections = ElemSet::full(d.order()) - a_sub;
        ElemSet a_squares;
        for (int u = a_sub.min(); u >= 0; u = a_sub.next(u)) a_squares.set(d.mul(u, u));
        ElemSet z_even = a_squares - ElemSet::single(d.identity());
        ElemSet z_odd = a_sub - a_squares;
        ElemSet invs = involutions_of(d);

        if (kind == CodeKind::total_perfect) {
            // complete bipartite family: every reflection subgroup admits
            for (int r = reflections.min(); r >= 0; r = reflections.next(r)) {
                ElemSet h = ElemSet::single(d.identity());
                h.set(r);
                emit(DihedralFamily::knn, h, reflections, 0, 0, ElemSet{});
            }
        }

        if (n % 2 == 0) {
            int r0 = reflections.min();
            ElemSet block0;
            for (int u = a_squares.min(); u >= 0; u = a_squares.next(u)) block0.set(d.mul(u, r0));
            ElemSet block1 = reflections - block0;
            const ElemSet blocks[2] = {block0, block1};

            for (int bi = 0; bi < 2; ++bi) {
                const ElemSet& block = blocks[bi];
                if (kind == CodeKind::perfect) {
                    ElemSet x = block | z_even;
                    ElemSet barred = a_squares | block;
                    ElemSet cands = invs - barred;
                    for (int i = cands.min(); i >= 0; i = cands.next(i)) {
                        ElemSet h = ElemSet::single(d.identity());
                        h.set(i);
                        emit(bi == 0 ? DihedralFamily::gamma0 : DihedralFamily::gamma1, h, x,
                             n / 2, 0, z_even);
                    }
                } else {
                    ElemSet y = block | z_odd;
                    ElemSet cands = invs & y;
                    for (int i = cands.min(); i >= 0; i = cands.next(i)) {
                        ElemSet h = ElemSet::single(d.identity());
                        h.set(i);
                        emit(bi == 0 ? DihedralFamily::gamma0_prime : DihedralFamily::gamma1_prime,
                             h, y, n / 2, 0, z_odd);
                    }
                }
            }
        }

        if (n >= 6 && n % 4 == 2) {
            int k = (n - 2) / 4;
            int half = n / 2;
            // powers of the presentation generator
            std::vector<int> pow(n);
            pow[0] = d.identity();
            for (int i = 1; i < n; ++i) pow[i] = d.mul(pow[i - 1], pres.generator);
            int an2 = pow[half];
            ElemSet h0 = ElemSet::single(d.identity());
            h0.set(an2);

            int r0 = reflections.min();
            ElemSet block0;
            for (int u = a_squares.min(); u >= 0; u = a_squares.next(u)) block0.set(d.mul(u, r0));
            ElemSet block1 = reflections - block0;
            const ElemSet blocks[2] = {block0, block1};

            // inverse-closed transversals of <a^{n/2}> in <a>: one choice per
            // coset pair {C_j, C_{half-j}}, the partner forced by inversion
            std::vector<int> pair_lead;
            for (int j = 1; 2 * j < half; ++j) pair_lead.push_back(j);
            for (uint32_t mask = 0; mask < (uint32_t{1} << pair_lead.size()); ++mask) {
                ElemSet rot;
                for (size_t pi = 0; pi < pair_lead.size(); ++pi) {
                    int j = pair_lead[pi];
                    int rep = (mask >> pi) & 1 ? pow[(j + half) % n] : pow[j];
                    rot.set(rep);
                    rot.set(d.inv(rep));
                }
                for (const ElemSet& block : blocks) {
                    if (kind == CodeKind::perfect) {
                        emit(DihedralFamily::gamma_4k2, h0, block | rot, 0, k, rot);
                    } else {
                        ElemSet y = block | rot;
                        y.set(an2);
                        emit(DihedralFamily::gamma_4k2_prime, h0, y, 0, k, rot);
                    }
                }
            }
        }
    }

    std::sort(out.begin(), out.end(), [](const DihedralExpectation& a, const DihedralExpectation& b) {
        return std::tie(a.subgroup, a.class_ids) < std::tie(b.subgroup, b.class_ids);
    });
    return out;
}

namespace {

DiffReport diff_keys(std::string group, CodeKind kind, std::set<ClassificationKey> expected,
                     std::set<ClassificationKey> found) {
    DiffReport report;
    report.group = std::move(group);
    report.kind = kind;
    for (const auto& k : found) {
        if (expected.count(k))
            report.matched.push_back(k);
        else
            report.extra.push_back(k);
    }
    for (const auto& k : expected)
        if (!found.count(k)) report.missing.push_back(k);
    return report;
}

}  // namespace

DiffReport verify_dihedral_classification(const GroupTable& d, const ConjugacyPartition& cc,
                                          CodeKind kind) {
    if (d.order() > 32) throw std::invalid_argument("dihedral verification capped at order 32");

    std::set<ClassificationKey> expected;
    for (const DihedralExpectation& e : dihedral_expected(d, cc, kind)) {
        NormalSubset ns = NormalSubset::from_classes(cc, e.class_ids);
        if (!is_connected_algebraic(d, ns)) continue;
        expected.insert({e.subgroup, e.class_ids});
    }

    std::vector<SubgroupHandle> subgroups = all_subgroups(d);
    std::set<ClassificationKey> found;
    int c = cc.class_count();
    for (uint32_t mask = 0; mask < (uint32_t{1} << c); ++mask) {
        std::vector<int> ids;
        for (uint32_t m = mask; m; m &= m - 1) ids.push_back(__builtin_ctz(m));
        NormalSubset x = NormalSubset::from_classes(cc, ids);
        if (!is_connected_algebraic(d, x)) continue;
        CayleySumGraph graph = build_cs_graph(d, x);
        for (const SubgroupHandle& h : subgroups) {
            if (kind == CodeKind::perfect) {
                if (h.order() <= 1) continue;  // nontrivial subgroups only
                if (is_perfect_code(graph, h.members)) found.insert({h.members.to_vector(), ids});
            } else {
                if (is_total_perfect_code(graph, h.members)) found.insert({h.members.to_vector(), ids});
            }
        }
    }
    return diff_keys(d.label(), kind, std::move(expected), std::move(found));
}

// ---------- one-dimensional affine groups ----------

namespace {

int agl_q(const Agl1& agl) { return agl.kernel.count(); }

// minimum-index generator of the cyclic complement
int complement_generator(const Agl1& agl) {
    const GroupTable& g = agl.table;
    int order = agl.complement.count();
    for (int x = agl.complement.min(); x >= 0; x = agl.complement.next(x))
        if (element_order(g, x) == order) return x;
    throw std::logic_error("complement has no generator");
}

}  // namespace

AglExpectation agl_construct(const Agl1& agl, const ConjugacyPartition& cc, int s) {
    const GroupTable& g = agl.table;
    int q = agl_q(agl);
    if (q < 3) throw std::invalid_argument("agl_construct requires q >= 3");
    if (s < 1 || (q - 1) % s != 0) throw std::invalid_argument("s must divide q - 1");
    int t = (q - 1) / s;
    if (t <= 1) throw std::invalid_argument("agl_construct requires t > 1");

    AglExpectation e;
    e.q = q;
    e.s = s;
    e.t = t;
    e.c = complement_generator(agl);

    // H = <c^s>
    int cs = g.identity();
    for (int i = 0; i < s; ++i) cs = g.mul(cs, e.c);
    ElemSet h = closure(g, ElemSet::single(cs));
    SubgroupHandle hh{&g, h};
    e.subgroup = h.to_vector();

    // a0: minimum-index nonsquare of H when one exists, else minimum nonidentity
    ElemSet h_nonid = h - ElemSet::single(g.identity());
    ElemSet nonsquares = h_nonid - squares_in(hh);
    e.a0 = nonsquares.empty() ? h_nonid.min() : nonsquares.min();
    e.tpc_valid = !nonsquares.empty();

    // minimum-index representative of each nontrivial coset of H in C
    ElemSet seen = h;
    for (int x = agl.complement.min(); x >= 0; x = agl.complement.next(x)) {
        if (seen.test(x)) continue;
        e.reps.push_back(x);
        for (int m = h.min(); m >= 0; m = h.next(m)) seen.set(g.mul(x, m));
    }
    if (static_cast<int>(e.reps.size()) != s - 1) throw std::logic_error("transversal size mismatch");

    ElemSet kernel_less = agl.kernel - ElemSet::single(g.identity());
    ElemSet x_members = kernel_less;
    for (int rep : e.reps) x_members |= cc.classes[cc.class_of[rep]];
    ElemSet y_members = cc.classes[cc.class_of[e.a0]];
    for (int rep : e.reps) y_members |= cc.classes[cc.class_of[rep]];

    NormalSubset xs = NormalSubset::from_members(cc, x_members);
    NormalSubset ys = NormalSubset::from_members(cc, y_members);
    e.x_members = xs.members;
    e.y_members = ys.members;
    e.x_class_ids = xs.class_ids;
    e.y_class_ids = ys.class_ids;

    if (!pc_criterion(g, hh, xs)) throw std::logic_error("AGL perfect-code construction failed");
    if (e.tpc_valid && !tpc_criterion(g, hh, ys))
        throw std::logic_error("AGL total-code construction failed");
    return e;
}

AglVerification verify_agl_classification(const Agl1& agl, const ConjugacyPartition& cc) {
    const GroupTable& g = agl.table;
    int q = agl_q(agl);
    if (q * (q - 1) > 128) throw std::invalid_argument("AGL verification capped at order 128");

    AglVerification ver;

    // expected family, closed under transversal representative choice and
    // under conjugation of the subgroup
    std::set<ClassificationKey> expected_pc, expected_tpc;
    int c0 = complement_generator(agl);
    ElemSet kernel_less = agl.kernel - ElemSet::single(g.identity());
    int kernel_class = cc.class_of[kernel_less.min()];

    for (int s = 1; s < q - 1; ++s) {
        if ((q - 1) % s != 0) continue;
        int t = (q - 1) / s;
        if (t <= 1) continue;
        ver.canonical.push_back(agl_construct(agl, cc, s));

        int cs = g.identity();
        for (int i = 0; i < s; ++i) cs = g.mul(cs, c0);
        ElemSet h = closure(g, ElemSet::single(cs));
        SubgroupHandle hh{&g, h};

        std::vector<ElemSet> conjugates;
        {
            std::set<std::pair<uint64_t, uint64_t>> seen;
            for (int a = 0; a < g.order(); ++a) {
                ElemSet conj;
                for (int m = h.min(); m >= 0; m = h.next(m)) conj.set(g.conj(m, a));
                if (seen.insert({conj.word(0), conj.word(1)}).second) conjugates.push_back(conj);
            }
        }

        // cosets of H in C, identity coset first
        std::vector<std::vector<int>> cosets;
        ElemSet seen = h;
        for (int x = agl.complement.min(); x >= 0; x = agl.complement.next(x)) {
            if (seen.test(x)) continue;
            std::vector<int> coset;
            for (int m = h.min(); m >= 0; m = h.next(m)) {
                int y = g.mul(x, m);
                coset.push_back(y);
                seen.set(y);
            }
            std::sort(coset.begin(), coset.end());
            cosets.push_back(std::move(coset));
        }

        ElemSet h_nonsquares = (h - ElemSet::single(g.identity())) - squares_in(hh);

        // product over coset representative choices
        std::vector<size_t> pick(cosets.size(), 0);
        for (;;) {
            std::vector<int> rep_ids;
            for (size_t i = 0; i < cosets.size(); ++i) rep_ids.push_back(cc.class_of[cosets[i][pick[i]]]);

            std::vector<int> ids = rep_ids;
            ids.push_back(kernel_class);
            std::sort(ids.begin(), ids.end());
            for (const ElemSet& conj : conjugates) expected_pc.insert({conj.to_vector(), ids});

            for (int a0 = h_nonsquares.min(); a0 >= 0; a0 = h_nonsquares.next(a0)) {
                std::vector<int> yids = rep_ids;
                yids.push_back(cc.class_of[a0]);
                std::sort(yids.begin(), yids.end());
                for (const ElemSet& conj : conjugates) expected_tpc.insert({conj.to_vector(), yids});
            }

            size_t i = 0;
            while (i < pick.size() && ++pick[i] == cosets[i].size()) pick[i++] = 0;
            if (i == pick.size()) break;
            if (pick.empty()) break;
        }
    }

    // exhaustive search, all graphs, proper subgroups (nontrivial for perfect)
    std::vector<SubgroupHandle> subgroups = all_subgroups(g);
    std::set<ClassificationKey> found_pc, found_tpc;
    int c = cc.class_count();
    for (uint32_t mask = 0; mask < (uint32_t{1} << c); ++mask) {
        std::vector<int> ids;
        for (uint32_t m = mask; m; m &= m - 1) ids.push_back(__builtin_ctz(m));
        NormalSubset x = NormalSubset::from_classes(cc, ids);
        CayleySumGraph graph = build_cs_graph(g, x);
        for (const SubgroupHandle& h : subgroups) {
            if (h.order() == g.order()) continue;  // proper subgroups only
            if (h.order() > 1 && is_perfect_code(graph, h.members))
                found_pc.insert({h.members.to_vector(), ids});
            if (is_total_perfect_code(graph, h.members))
                found_tpc.insert({h.members.to_vector(), ids});
        }
    }

    ver.pc = diff_keys(g.label(), CodeKind::perfect, std::move(expected_pc), std::move(found_pc));
    ver.tpc = diff_keys(g.label(), CodeKind::total_perfect, std::move(expected_tpc), std::move(found_tpc));
    return ver;
}

bool lemma_length_check(const Agl1& agl, const ConjugacyPartition& cc) {
    const GroupTable& g = agl.table;
    int q = agl_q(agl);
    ElemSet kernel_less = agl.kernel - ElemSet::single(g.identity());

    // all conjugates of the complement
    std::vector<ElemSet> conjugates;
    std::set<std::pair<uint64_t, uint64_t>> seen;
    for (int a = 0; a < g.order(); ++a) {
        ElemSet conj;
        for (int m = agl.complement.min(); m >= 0; m = agl.complement.next(m)) conj.set(g.conj(m, a));
        if (seen.insert({conj.word(0), conj.word(1)}).second) conjugates.push_back(conj);
    }

    for (const ElemSet& cls : cc.classes) {
        if (cls.test(g.identity())) continue;
        if (cls == kernel_less) continue;
        if (cls.count() != q) return false;
        for (const ElemSet& conj : conjugates)
            if ((cls & conj).count() != 1) return false;
    }
    return true;
}

bool frobenius_partition_check(const Agl1& agl) {
    const GroupTable& g = agl.table;
    std::vector<ElemSet> conjugates;
    std::set<std::pair<uint64_t, uint64_t>> seen;
    for (int a = 0; a < g.order(); ++a) {
        ElemSet conj;
        for (int m = agl.complement.min(); m >= 0; m = agl.complement.next(m)) conj.set(g.conj(m, a));
        if (seen.insert({conj.word(0), conj.word(1)}).second) conjugates.push_back(conj);
    }
    ElemSet cover = agl.kernel;
    for (const ElemSet& conj : conjugates) cover |= conj;
    if (cover != ElemSet::full(g.order())) return false;
    for (size_t i = 0; i < conjugates.size(); ++i)
        for (size_t j = i + 1; j < conjugates.size(); ++j)
            if ((conjugates[i] & conjugates[j]) != ElemSet::single(g.identity())) return false;
    return true;
}

}  // namespace cscode
