#pragma once

#include "qwalk/branch.hpp"
#include "qwalk/transfer.hpp"
#include "qwalk/util.hpp"

#include <map>

namespace qwalk {

struct PpstMatch {
    VertexPair source;
    VertexPair target;
    TransferCertificate certificate;
};

struct PpstRefutation {
    VertexPair pair;
    std::string reason;
};

struct SweepResult {
    std::vector<PpstMatch> certified;
    std::vector<PpstRefutation> refuted;
    std::vector<std::string> warnings;
};

struct SweepOptions {
    int max_n = 20;
    int jobs = 1;
    CertifyOptions certify;
};

/// All-pairs PPST search: pair states are grouped by eigenvalue support,
/// non-periodic pairs are refuted outright, and the certification pipeline
/// runs inside each support class. Matches are deduplicated; by monogamy a
/// pair state has at most one transfer partner. The result is deterministic
/// regardless of the worker count.
inline SweepResult ppst_sweep(const Graph& g, const SpectralData& spec,
                              const SweepOptions& opt = {}) {
    const int n = g.vertex_count();
    if (n > opt.max_n)
        throw std::invalid_argument("ppst_sweep: graph larger than the all-pairs bound (" +
                                    std::to_string(opt.max_n) + ")");
    SweepResult out;

    struct Info {
        VertexPair pair;
        QuantumState state;
        std::vector<int> support;
        PeriodicityCheck period;
        std::vector<std::string> warnings;
    };
    std::vector<Info> infos;
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            infos.push_back({VertexPair{a, b}, QuantumState::pair(a, b, n), {}, {}, {}});

    parallel_for(infos.size(), opt.jobs, [&](size_t i) {
        Info& info = infos[i];
        SupportResult sup = eigenvalue_support(spec, info.state, opt.certify.support_tol);
        for (const auto& w : sup.warnings)
            info.warnings.push_back("pair (" + g.label(info.pair.a) + "," + g.label(info.pair.b) +
                                    "): " + w);
        info.support = sup.indices;
        info.period = is_periodic(spec, sup.indices);
    });
    for (const auto& info : infos)
        out.warnings.insert(out.warnings.end(), info.warnings.begin(), info.warnings.end());

    std::map<std::vector<int>, std::vector<size_t>> groups;
    for (size_t i = 0; i < infos.size(); ++i) groups[infos[i].support].push_back(i);

    std::vector<std::pair<size_t, size_t>> candidates;
    for (const auto& [support, members] : groups)
        for (size_t i = 0; i < members.size(); ++i) {
            if (!infos[members[i]].period.periodic()) continue;
            for (size_t j = i + 1; j < members.size(); ++j)
                if (infos[members[j]].period.periodic())
                    candidates.emplace_back(members[i], members[j]);
        }

    std::vector<TransferCertificate> certs(candidates.size());
    parallel_for(candidates.size(), opt.jobs, [&](size_t k) {
        certs[k] = certify_pst(g, spec, infos[candidates[k].first].state,
                               infos[candidates[k].second].state, opt.certify);
    });

    std::map<VertexPair, std::string> refute_reason;
    std::map<VertexPair, VertexPair> partner;
    for (const auto& info : infos)
        if (info.period.status == PeriodicityCheck::Status::NotPeriodic)
            refute_reason[info.pair] = "periodicity-violation: " + info.period.reason;

    for (size_t k = 0; k < candidates.size(); ++k) {
        const Info& src = infos[candidates[k].first];
        const Info& dst = infos[candidates[k].second];
        TransferCertificate& cert = certs[k];
        if (cert.verdict == Verdict::CertifiedYes) {
            if (partner.count(src.pair) || partner.count(dst.pair)) {
                out.warnings.push_back("monogamy violation candidate dropped: a pair matched twice");
                continue;
            }
            partner[src.pair] = dst.pair;
            partner[dst.pair] = src.pair;
            out.certified.push_back({src.pair, dst.pair, std::move(cert)});
        } else if (!refute_reason.count(src.pair)) {
            refute_reason[src.pair] = cert.criterion;
        }
    }

    for (const auto& info : infos) {
        if (partner.count(info.pair)) continue;
        std::string reason;
        if (auto it = refute_reason.find(info.pair); it != refute_reason.end()) reason = it->second;
        else if (groups[info.support].size() == 1) reason = "no partner with matching eigenvalue support";
        else reason = "no certified partner in its support class";
        out.refuted.push_back({info.pair, std::move(reason)});
    }
    return out;
}

struct ObstructionResult {
    Verdict verdict = Verdict::EvidenceOnly;  // CertifiedNo or EvidenceOnly (= inconclusive)
    std::string criterion;
    std::string detail;
};

/// Structural pair-PGST obstructions from graph symmetry: supplied
/// permutations are verified to be automorphisms and then tested against the
/// stabilizer and fixed-vertex arguments; family metadata adds the odd-order
/// Cayley and even-cycle antipodal rules.
inline ObstructionResult pgst_obstructions(const Graph& g, VertexPair source,
                                           std::optional<VertexPair> target,
                                           const std::vector<std::vector<int>>& automorphisms) {
    for (const auto& perm : automorphisms)
        if (!is_automorphism(g, perm))
            throw std::invalid_argument("pgst_obstructions: supplied permutation is not an automorphism");

    if (g.family.odd_abelian_cayley()) {
        return {Verdict::CertifiedNo, "odd-order-abelian-cayley",
                "Cayley graphs over abelian groups of odd order admit no pair-PGST"};
    }
    if (g.family.kind == FamilyInfo::Kind::Cycle && !g.family.params.empty()) {
        const long long n = g.family.params[0];
        if (n % 2 == 0) {
            auto antipodal = [n](VertexPair p) {
                long long diff = ((p.a - p.b) % n + n) % n;
                return diff == n / 2;
            };
            if (antipodal(source) || (target && antipodal(*target)))
                return {Verdict::CertifiedNo, "even-cycle-antipodal-pair",
                        "no pair-PGST involving an antipodal pair of an even cycle"};
        }
    }

    // action of a permutation on a pair state: +1 fixed pointwise, -1 swapped,
    // 0 moved elsewhere
    auto action = [](const std::vector<int>& perm, VertexPair p) {
        if (perm[p.a] == p.a && perm[p.b] == p.b) return 1;
        if (perm[p.a] == p.b && perm[p.b] == p.a) return -1;
        return 0;
    };

    for (size_t k = 0; k < automorphisms.size(); ++k) {
        const auto& perm = automorphisms[k];
        const int a1 = action(perm, source);
        if (target) {
            const int a2 = action(perm, *target);
            if ((a1 != 0 || a2 != 0) && a1 != a2) {
                return {Verdict::CertifiedNo, "automorphism-stabilizer-mismatch",
                        "automorphism #" + std::to_string(k) +
                            " acts differently on the two pair states"};
            }
        }
        std::vector<int> fixed;
        for (int v = 0; v < g.vertex_count(); ++v)
            if (perm[v] == v) fixed.push_back(v);
        if (fixed.size() == 1 && target) {
            const int v = fixed[0];
            if (source.contains(v) != target->contains(v)) {
                return {Verdict::CertifiedNo, "single-fixed-vertex-automorphism",
                        "automorphism #" + std::to_string(k) + " fixes only vertex " +
                            g.label(v) + ", which lies in one pair but not the other"};
            }
        }
        if (a1 == 1 && fixed.size() == 2) {
            return {Verdict::CertifiedNo, "isolated-fixed-pair-automorphism",
                    "automorphism #" + std::to_string(k) +
                        " fixes the source pair pointwise and nothing else, so no"
                        " independent pair can receive transfer"};
        }
    }
    return {Verdict::EvidenceOnly, "inconclusive", "no structural obstruction found"};
}

/// (m,L)-state transfer across pairwise isomorphic branches: the k-th branch
/// pair maps X1 to X_{k+1}; coefficients must sum to zero so that the state
/// decomposes into twin-pair states.
inline TransferCertificate mstate_transfer_check(const Graph& g, const SpectralData& spec,
                                                 const std::vector<BranchPair>& branches, int a,
                                                 int b, const std::vector<Complex>& coeffs,
                                                 const CertifyOptions& opt = {}) {
    if (branches.empty()) throw std::invalid_argument("mstate: need at least one branch pair");
    const size_t m = branches.size() + 1;
    if (coeffs.size() != m)
        throw std::invalid_argument("mstate: need one coefficient per branch copy (m = " +
                                    std::to_string(m) + ")");
    Complex sum(0, 0);
    for (const Complex& c : coeffs) sum += c;
    if (std::abs(sum) > 1e-12)
        throw std::invalid_argument(
            "mstate: coefficients must sum to zero; only zero-sum combinations decompose into "
            "twin-pair states carried by the branch structure");
    for (const auto& bp : branches) {
        if (bp.copy1 != branches[0].copy1)
            throw std::invalid_argument("mstate: all branch pairs must share copy1 (= X1)");
        if (!is_automorphism(g, bp.switching_permutation(g.vertex_count())))
            throw std::invalid_argument("mstate: a branch switching map is not an automorphism");
    }

    auto images = [&](int v) {
        std::vector<int> verts{v};
        for (const auto& bp : branches) {
            const int fv = bp.map(v);
            if (fv < 0) throw std::invalid_argument("mstate: vertex not in X1");
            verts.push_back(fv);
        }
        return verts;
    };
    QuantumState s1 = QuantumState::mstate(images(a), coeffs, g.vertex_count());
    QuantumState s2 = QuantumState::mstate(images(b), coeffs, g.vertex_count());
    return certify_pst(g, spec, s1, s2, opt);
}

}  // namespace qwalk
