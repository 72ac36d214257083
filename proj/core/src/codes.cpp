#include "cscode/codes.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <stdexcept>
#include <thread>

namespace cscode {

const char* to_string(CodeKind k) {
    return k == CodeKind::perfect ? "pc" : "tpc";
}

const char* to_string(Violation v) {
    switch (v) {
        case Violation::core_centralizer: return "core-centralizer";
        case Violation::index_equation: return "index-equation";
        case Violation::class_count: return "class-count";
        case Violation::z_nonsquare: return "z-nonsquare";
        case Violation::z_central: return "z-central";
    }
    return "?";
}

bool is_perfect_code(const CayleySumGraph& graph, const ElemSet& c) {
    int n = graph.group->order();
    for (int v = 0; v < n; ++v) {
        int hits = (graph.rows[v] & c).count();
        if (c.test(v)) {
            if (hits != 0) return false;  // edge inside C
        } else {
            if (hits != 1) return false;
        }
    }
    return true;
}

bool is_total_perfect_code(const CayleySumGraph& graph, const ElemSet& c) {
    int n = graph.group->order();
    for (int v = 0; v < n; ++v)
        if ((graph.rows[v] & c).count() != 1) return false;
    return true;
}

bool pc_criterion(const GroupTable& g, const SubgroupHandle& h, const NormalSubset& x) {
    ElemSet t = x.members;
    t.set(g.identity());
    return is_left_transversal(g, h, t);
}

bool tpc_criterion(const GroupTable& g, const SubgroupHandle& h, const NormalSubset& y) {
    ElemSet common = h.members & y.members;
    if (common.count() != 1) return false;
    int z = common.min();
    if (squares_in(h).test(z)) return false;
    return is_left_transversal(g, h, y.members);
}

std::vector<Violation> necessary_conditions(const GroupTable& g, const ConjugacyPartition& cc,
                                            const SubgroupHandle& h, const NormalSubset& x,
                                            CodeKind kind) {
    std::vector<Violation> out;

    // (a) core(H) <= C_G(x) for every x in the connection set
    ElemSet core = core_of(g, h).members;
    bool core_ok = true;
    for (int e = x.members.min(); e >= 0 && core_ok; e = x.members.next(e))
        for (int a = core.min(); a >= 0 && core_ok; a = core.next(a))
            core_ok = g.mul(a, e) == g.mul(e, a);
    if (!core_ok) out.push_back(Violation::core_centralizer);

    bool normal = core.count() == h.members.count();

    // (b) exact index equation for normal H, denominators cleared:
    // perfect:  1 + sum|x_i^G| = |G:H|, total: sum|y_i^G| = |G:H|,
    // with every index |C_G(x_i):H| well defined.
    if (normal) {
        long long index = g.order() / h.members.count();
        long long sum = (kind == CodeKind::perfect) ? 1 : 0;
        bool well_defined = true;
        for (int id : x.class_ids) {
            sum += cc.classes[id].count();
            ElemSet cent = centralizer(g, cc.classes[id].min()).members;
            if (!cent.contains_all(h.members) || cent.count() % h.members.count() != 0)
                well_defined = false;
        }
        if (!well_defined || sum != index) out.push_back(Violation::index_equation);

        // (c) a normal-subgroup code with |X| > 1 spans at least two classes
        if (x.members.count() > 1 && x.class_ids.size() < 2) out.push_back(Violation::class_count);
    }

    // (d) total kind: the unique common element z is a nonsquare of H and
    // H <= C_G(z); both reported violated when no unique z exists.
    if (kind == CodeKind::total_perfect) {
        ElemSet common = h.members & x.members;
        if (common.count() == 1) {
            int z = common.min();
            if (squares_in(h).test(z)) out.push_back(Violation::z_nonsquare);
            bool central_in_h = true;
            for (int a = h.members.min(); a >= 0 && central_in_h; a = h.members.next(a))
                central_in_h = g.mul(a, z) == g.mul(z, a);
            if (!central_in_h) out.push_back(Violation::z_central);
        } else {
            out.push_back(Violation::z_nonsquare);
            out.push_back(Violation::z_central);
        }
    }
    return out;
}

CodeCertificate make_certificate(const GroupTable& g, const ConjugacyPartition& cc,
                                 const SubgroupHandle& h, const NormalSubset& x, CodeKind kind) {
    CodeCertificate cert;
    cert.kind = kind;
    cert.group = g.label();
    cert.subgroup = h.members.to_vector();
    cert.class_ids = x.class_ids;
    if (kind == CodeKind::perfect) {
        cert.verdict = pc_criterion(g, h, x);
        if (cert.verdict) {
            ElemSet t = x.members;
            t.set(g.identity());
            cert.witness_transversal = t.to_vector();
        }
    } else {
        cert.verdict = tpc_criterion(g, h, x);
        if (cert.verdict) {
            cert.witness_transversal = x.members.to_vector();
            cert.witness_z = (h.members & x.members).min();
        }
    }
    if (!cert.verdict) cert.violations = necessary_conditions(g, cc, h, x, kind);
    return cert;
}

namespace {

// mask -> total member count over the selected classes
int mask_size(uint32_t mask, const std::vector<int>& sizes) {
    int s = 0;
    while (mask) {
        s += sizes[__builtin_ctz(mask)];
        mask &= mask - 1;
    }
    return s;
}

NormalSubset subset_of_mask(const ConjugacyPartition& cc, uint32_t mask) {
    std::vector<int> ids;
    for (uint32_t m = mask; m; m &= m - 1) ids.push_back(__builtin_ctz(m));
    return NormalSubset::from_classes(cc, std::move(ids));
}

}  // namespace

EnumerateResult enumerate_admitting(const GroupTable& g, const ConjugacyPartition& cc,
                                    const SubgroupHandle& h, CodeKind kind,
                                    const EnumerateOptions& opts) {
    int c = cc.class_count();
    int index = g.order() / h.members.count();
    int target = (kind == CodeKind::perfect) ? index - 1 : index;

    std::vector<int> sizes(c);
    for (int i = 0; i < c; ++i) sizes[i] = cc.classes[i].count();

    EnumerateResult result;
    std::vector<uint64_t> masks;
    if (c <= 20) {
        masks.resize(uint64_t{1} << c);
        for (uint64_t m = 0; m < masks.size(); ++m) masks[m] = m;
    } else if (opts.budget > 0) {
        std::mt19937_64 rng(opts.seed);
        std::set<uint64_t> sample;
        while (sample.size() < opts.budget) sample.insert(rng() & ((uint64_t{1} << c) - 1));
        masks.assign(sample.begin(), sample.end());
        result.partial = true;
    } else {
        throw std::runtime_error("enumeration budget exceeded: more than 2^20 class subsets");
    }
    if (opts.budget > 0 && masks.size() > opts.budget) {
        masks.resize(opts.budget);
        result.partial = true;
    }

    auto run_range = [&](size_t lo, size_t hi,
                         std::vector<std::pair<NormalSubset, CodeCertificate>>& out, uint64_t& tested) {
        for (size_t i = lo; i < hi; ++i) {
            uint32_t mask = static_cast<uint32_t>(masks[i]);
            if (mask_size(mask, sizes) != target) continue;
            NormalSubset x = subset_of_mask(cc, mask);
            // cardinality of the intersection with H is forced by the kind
            int common = (h.members & x.members).count();
            if (kind == CodeKind::perfect ? common != 0 : common != 1) continue;
            ++tested;
            CodeCertificate cert = make_certificate(g, cc, h, x, kind);
            if (!cert.verdict && !opts.include_failures) continue;
            if (opts.connected_only && !is_connected_algebraic(g, x)) continue;
            out.emplace_back(std::move(x), std::move(cert));
        }
    };

    int jobs = std::max(1, opts.jobs);
    if (jobs == 1 || masks.size() < 1024) {
        run_range(0, masks.size(), result.entries, result.tested);
    } else {
        std::vector<std::vector<std::pair<NormalSubset, CodeCertificate>>> outs(jobs);
        std::vector<uint64_t> counts(jobs, 0);
        std::vector<std::thread> threads;
        size_t chunk = (masks.size() + jobs - 1) / jobs;
        for (int j = 0; j < jobs; ++j) {
            size_t lo = std::min(masks.size(), j * chunk);
            size_t hi = std::min(masks.size(), lo + chunk);
            threads.emplace_back([&, lo, hi, j] { run_range(lo, hi, outs[j], counts[j]); });
        }
        for (auto& t : threads) t.join();
        for (int j = 0; j < jobs; ++j) {
            result.tested += counts[j];
            for (auto& e : outs[j]) result.entries.push_back(std::move(e));
        }
    }
    std::sort(result.entries.begin(), result.entries.end(),
              [](const auto& a, const auto& b) { return a.first.class_ids < b.first.class_ids; });
    return result;
}

bool pc_tpc_bridge_check(const GroupTable& g, const ConjugacyPartition& cc, const SubgroupHandle& h) {
    ElemSet core = core_of(g, h).members;
    if (core.count() != h.members.count()) throw std::invalid_argument("bridge check requires a normal subgroup");

    ElemSet zg = center(g).members;
    ElemSet sq_h = squares_in(h);
    ElemSet central_nonsquares = (h.members & zg) - sq_h;

    // total -> perfect: strip the central nonsquare z from every admitting Y
    EnumerateResult totals = enumerate_admitting(g, cc, h, CodeKind::total_perfect);
    for (const auto& [y, cert] : totals.entries) {
        int z = cert.witness_z;
        if (!zg.test(z) || sq_h.test(z)) return false;
        std::vector<int> ids;
        for (int id : y.class_ids)
            if (id != cc.class_of[z]) ids.push_back(id);
        if (cc.classes[cc.class_of[z]].count() != 1) return false;  // z central => singleton class
        NormalSubset x = NormalSubset::from_classes(cc, std::move(ids));
        if (!pc_criterion(g, h, x)) return false;
    }

    // perfect -> total: extend every admitting X by every central nonsquare of H
    EnumerateResult perfects = enumerate_admitting(g, cc, h, CodeKind::perfect);
    for (const auto& [x, cert] : perfects.entries) {
        for (int z = central_nonsquares.min(); z >= 0; z = central_nonsquares.next(z)) {
            std::vector<int> ids = x.class_ids;
            ids.push_back(cc.class_of[z]);
            NormalSubset y = NormalSubset::from_classes(cc, std::move(ids));
            if (!tpc_criterion(g, h, y)) return false;
        }
    }
    return true;
}

bool inner_transfer_check(const GroupTable& g, const ConjugacyPartition& cc,
                          const SubgroupHandle& h, const NormalSubset& x) {
    bool base_pc = pc_criterion(g, h, x);
    bool base_tpc = tpc_criterion(g, h, x);
    (void)cc;
    for (int a = 0; a < g.order(); ++a) {
        ElemSet conj;
        for (int m = h.members.min(); m >= 0; m = h.members.next(m)) conj.set(g.conj(m, a));
        SubgroupHandle hg{&g, conj};
        if (pc_criterion(g, hg, x) != base_pc) return false;
        if (tpc_criterion(g, hg, x) != base_tpc) return false;
    }
    return true;
}

CosetTransferResult coset_transfer_check(const GroupTable& g, const SubgroupHandle& h,
                                         const NormalSubset& x, int b) {
    if (h.members.test(b)) return {CosetTransferStatus::b_in_subgroup, false};
    if (b == g.identity() || g.mul(b, b) != g.identity())
        return {CosetTransferStatus::b_not_involution, false};
    ElemSet conj;
    for (int m = h.members.min(); m >= 0; m = h.members.next(m)) conj.set(g.conj(m, b));
    if (conj != h.members) return {CosetTransferStatus::b_not_normalizing, false};

    CayleySumGraph graph = build_cs_graph(g, x);
    ElemSet coset;
    for (int m = h.members.min(); m >= 0; m = h.members.next(m)) coset.set(g.mul(m, b));
    bool holds = is_perfect_code(graph, h.members) == is_perfect_code(graph, coset) &&
                 is_total_perfect_code(graph, h.members) == is_total_perfect_code(graph, coset);
    return {CosetTransferStatus::ok, holds};
}

}  // namespace cscode
