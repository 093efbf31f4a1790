#pragma once

#include "qwalk/catalog.hpp"
#include "qwalk/predicates.hpp"
#include "qwalk/report.hpp"

#include <chrono>
#include <set>

namespace qwalk {
namespace cli {

/// Split "a,b,c" at top-level commas, leaving parenthesized labels intact so
/// product-graph labels like "(0,2)" parse as single tokens.
inline std::vector<std::string> split_top_level(const std::string& s, char sep = ',') {
    std::vector<std::string> out;
    std::string cur;
    int depth = 0;
    for (char ch : s) {
        if (ch == '(') ++depth;
        if (ch == ')') --depth;
        if (ch == sep && depth == 0) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur.push_back(ch);
        }
    }
    out.push_back(cur);
    return out;
}

inline int resolve_vertex(const Graph& g, const std::string& token) {
    const int v = g.vertex_by_label(token);
    if (v < 0)
        throw std::invalid_argument("unknown vertex '" + token + "' (use a label or internal id)");
    return v;
}

inline VertexPair parse_pair(const Graph& g, const std::string& spec) {
    auto parts = split_top_level(spec);
    if (parts.size() != 2) throw std::invalid_argument("pair must list two vertices: " + spec);
    const int a = resolve_vertex(g, parts[0]);
    const int b = resolve_vertex(g, parts[1]);
    if (a == b) throw std::invalid_argument("pair vertices must differ: " + spec);
    return {a, b};
}

inline std::vector<double> parse_times(const std::string& spec) {
    std::vector<double> out;
    for (const auto& tok : split_top_level(spec)) {
        if (tok == "pi/2") out.push_back(kPi / 2);
        else if (tok == "pi") out.push_back(kPi);
        else if (tok == "pi/sqrt(2)") out.push_back(kPi / std::sqrt(2.0));
        else out.push_back(std::stod(tok));
    }
    return out;
}

inline double env_tolerance(double fallback = 1e-9) {
    if (const char* env = std::getenv("QWALK_TOL")) {
        try {
            const double v = std::stod(env);
            if (v > 0) return v;
        } catch (const std::exception&) {
        }
    }
    return fallback;
}

inline CertifyOptions certify_options() {
    CertifyOptions opt;
    opt.support_tol = env_tolerance();
    return opt;
}

// ---------------------------------------------------------------------------

inline Json spectrum_results(const Graph& g, std::vector<std::string>& warnings) {
    SpectralData spec = analyze(g);
    Json rows = Json::array();
    std::set<long long> c_values;
    for (size_t j = 0; j < spec.eigenvalues.size(); ++j) {
        Json row;
        row["value"] = jnum(spec.eigenvalues[j]);
        row["multiplicity"] = spec.multiplicities[j];
        if (spec.classified) {
            row["class"] = algebraic_class_to_json(spec.classes[j]);
            if (spec.classes[j].tag == AlgebraicClass::Tag::Quadratic)
                c_values.insert(spec.classes[j].c);
        }
        rows.push_back(std::move(row));
    }
    if (c_values.size() > 1)
        warnings.push_back("quadratic eigenvalues carry differing c values; periodicity of a "
                           "state depends on its support staying inside one family");
    warnings.insert(warnings.end(), spec.diagnostics.begin(), spec.diagnostics.end());
    Json out;
    out["classified"] = spec.classified;
    out["eigenvalues"] = std::move(rows);
    return out;
}

inline Json support_results(const Graph& g, VertexPair p, std::vector<std::string>& warnings) {
    SpectralData spec = analyze(g);
    QuantumState psi = QuantumState::pair(p.a, p.b, g.vertex_count());
    SupportResult sup = eigenvalue_support(spec, psi, env_tolerance());
    warnings.insert(warnings.end(), sup.warnings.begin(), sup.warnings.end());

    Json out;
    out["pair"] = jpair(g, p);
    Json values = Json::array();
    for (int idx : sup.indices) {
        Json row;
        row["value"] = jnum(spec.eigenvalues[idx]);
        if (spec.classified) row["class"] = algebraic_class_to_json(spec.classes[idx]);
        values.push_back(std::move(row));
    }
    out["support"] = std::move(values);
    out["support_size"] = static_cast<int>(sup.indices.size());
    PeriodicityCheck period = is_periodic(spec, sup.indices);
    out["periodic"] = period.periodic();
    out["periodicity_reason"] = period.reason;
    return out;
}

inline Json sweep_to_json(const Graph& g, const SweepResult& sweep) {
    Json out;
    Json certified = Json::array();
    for (const auto& m : sweep.certified) {
        Json row;
        row["source"] = jpair(g, m.source);
        row["target"] = jpair(g, m.target);
        row["certificate"] = certificate_to_json(m.certificate);
        certified.push_back(std::move(row));
    }
    out["certified"] = std::move(certified);
    Json refuted = Json::array();
    for (const auto& r : sweep.refuted) {
        Json row;
        row["pair"] = jpair(g, r.pair);
        row["reason"] = r.reason;
        refuted.push_back(std::move(row));
    }
    out["refuted"] = std::move(refuted);
    return out;
}

inline Json ppst_results(const Graph& g, const std::vector<VertexPair>& pairs, bool sweep,
                         int jobs, std::vector<std::string>& warnings) {
    SpectralData spec = analyze(g);
    Json out;
    if (sweep) {
        SweepOptions opt;
        opt.jobs = jobs;
        opt.certify = certify_options();
        SweepResult result = ppst_sweep(g, spec, opt);
        warnings.insert(warnings.end(), result.warnings.begin(), result.warnings.end());
        out = sweep_to_json(g, result);
    } else {
        if (pairs.size() != 2)
            throw std::invalid_argument("ppst: supply --pairs a,b,c,d or use --sweep");
        QuantumState s1 = QuantumState::pair(pairs[0].a, pairs[0].b, g.vertex_count());
        QuantumState s2 = QuantumState::pair(pairs[1].a, pairs[1].b, g.vertex_count());
        TransferCertificate cert = certify_pst(g, spec, s1, s2, certify_options());
        warnings.insert(warnings.end(), cert.warnings.begin(), cert.warnings.end());
        out["source"] = jpair(g, pairs[0]);
        out["target"] = jpair(g, pairs[1]);
        out["certificate"] = certificate_to_json(cert);
    }
    return out;
}

inline Json pgst_results(const Graph& g, VertexPair source, std::optional<VertexPair> target,
                         double horizon, double threshold,
                         const std::vector<std::vector<int>>& automorphisms,
                         std::vector<std::string>& warnings) {
    Json out;
    out["source"] = jpair(g, source);
    if (target) out["target"] = jpair(g, *target);

    // family characterizations by parameter check
    Json family;
    if (g.family.kind == FamilyInfo::Kind::Cycle && !g.family.params.empty()) {
        const long long n = g.family.params[0];
        family["graph_admits_pair_pgst"] = cycle_pair_pgst_any(n);
        family["criterion"] = "cycle-pair-pgst-characterization (n = 2^k or 2^k p)";
        if (target) {
            PredicateResult pr = cycle_pair_pgst(n, source, *target);
            family["pair_verdict"] = pr.value == PredicateResult::Value::Yes      ? "yes"
                                     : pr.value == PredicateResult::Value::Flagged ? "flagged"
                                                                                   : "no-match";
            family["pair_note"] = pr.note;
        }
    } else if (g.family.kind == FamilyInfo::Kind::Path && !g.family.params.empty()) {
        const long long n = g.family.params[0];
        family["graph_admits_vertex_pgst"] = path_pgst_any(n);
        family["criterion"] = "path-pgst-characterization (n+1 = 2^k or 2^k p)";
        if (target) {
            PredicateResult pr = path_pair_pgst(n, source, *target);
            family["pair_verdict"] = pr.value == PredicateResult::Value::Yes      ? "yes"
                                     : pr.value == PredicateResult::Value::Flagged ? "flagged"
                                                                                   : "no-match";
            family["pair_note"] = pr.note;
        }
    }
    if (!family.is_null()) out["family_theorem"] = std::move(family);

    ObstructionResult obstruction = pgst_obstructions(g, source, target, automorphisms);
    Json obs;
    obs["verdict"] = verdict_name(obstruction.verdict);
    obs["criterion"] = obstruction.criterion;
    obs["detail"] = obstruction.detail;
    out["obstruction"] = std::move(obs);

    if (target) {
        SpectralData spec = decompose(g);
        PgstEvidence ev =
            pgst_evidence(spec, QuantumState::pair(source.a, source.b, g.vertex_count()),
                          QuantumState::pair(target->a, target->b, g.vertex_count()), horizon,
                          threshold);
        Json evidence;
        evidence["peak_fidelity"] = jnum(ev.peak);
        evidence["time"] = jnum(ev.time);
        evidence["reached_threshold"] = ev.reached;
        evidence["threshold"] = jnum(ev.threshold);
        evidence["horizon"] = jnum(ev.horizon);
        out["evidence"] = std::move(evidence);
        if (obstruction.verdict == Verdict::CertifiedNo && ev.reached)
            warnings.push_back("evidence peak crossed the threshold despite a structural "
                               "obstruction; check the inputs");
    }
    return out;
}

inline Json revival_results(const Graph& g, const QuantumState& s1, const QuantumState& s2,
                            double t, Json state_echo) {
    SpectralData spec = analyze(g);
    auto r = fractional_revival_check(spec, t, s1, s2, env_tolerance(1e-8));
    Json out;
    out["states"] = std::move(state_echo);
    out["time"] = jnum(t);
    out["revival"] = r.has_value();
    if (r) {
        out["alpha"] = jcomplex(r->alpha);
        out["beta"] = jcomplex(r->beta);
        out["residual"] = jnum(r->residual);
    }
    return out;
}

inline Json sedentary_results(const Graph& g, int vertex, double horizon) {
    SpectralData spec = analyze(g);
    SedentaryEstimate est = sedentary_bound(spec, vertex, horizon);
    Json out;
    out["vertex"] = g.label(vertex);
    out["horizon"] = jnum(est.horizon);
    out["inf_estimate"] = jnum(est.inf_estimate);
    out["time_of_min"] = jnum(est.time_of_min);
    out["note"] = "grid estimate; an upper bound on the true infimum over (0, horizon]";
    return out;
}

inline Json mstate_results(const Graph& g, const std::vector<BranchPair>& branches, int source,
                           int target, const std::vector<Complex>& coeffs,
                           std::vector<std::string>& warnings) {
    SpectralData spec = analyze(g);
    TransferCertificate cert =
        mstate_transfer_check(g, spec, branches, source, target, coeffs, certify_options());
    warnings.insert(warnings.end(), cert.warnings.begin(), cert.warnings.end());
    Json out;
    out["m"] = static_cast<int>(branches.size() + 1);
    out["source_anchor"] = g.label(source);
    out["target_anchor"] = g.label(target);
    Json cs = Json::array();
    for (const Complex& c : coeffs) cs.push_back(jcomplex(c));
    out["coefficients"] = std::move(cs);
    out["certificate"] = certificate_to_json(cert);
    return out;
}

inline Json branch_verify_results(const Graph& g, const BranchPair& bp,
                                  const std::vector<double>& times,
                                  std::vector<std::string>& warnings) {
    Json out;
    out["copy1"] = bp.copy1;
    out["copy2"] = bp.copy2;
    BranchVerification v = verify_branch_pair(g, bp);
    out["valid"] = v.ok;
    out["diagnostics"] = v.diagnostics;
    if (!v.ok) return out;

    EquitablePartition pi = branch_orbit_partition(g, bp);
    Json cells = Json::array();
    for (const auto& cell : pi.cells) {
        Json c = Json::array();
        for (int v2 : cell) c.push_back(g.label(v2));
        cells.push_back(std::move(c));
    }
    Json partition;
    partition["choice"] = "orbit partition of the switching automorphism, refined to equitability";
    partition["cells"] = std::move(cells);
    partition["quotient"] = graph_to_json(pi.quotient);
    out["partition"] = std::move(partition);

    if (!times.empty()) {
        BlockCheckResult r = block_decomposition_check(g, bp, times);
        Json block;
        Json ts = Json::array(), devs = Json::array();
        for (size_t i = 0; i < times.size(); ++i) {
            ts.push_back(jnum(times[i]));
            devs.push_back(jnum(r.per_time[i]));
        }
        block["times"] = std::move(ts);
        block["deviations"] = std::move(devs);
        block["max_deviation"] = jnum(r.max_deviation);
        out["block_check"] = std::move(block);
        if (r.max_deviation > 1e-9)
            warnings.push_back("block decomposition deviation exceeds 1e-9");
    }
    return out;
}

// --------------------------------------------------------------------------
// reproduce targets

inline Json reproduce_paths(int max_n, int jobs, std::vector<std::string>& warnings) {
    const int lo = 2;
    std::vector<Json> rows(std::max(0, max_n - lo + 1));
    std::vector<std::vector<std::string>> row_warnings(rows.size());
    parallel_for(rows.size(), jobs, [&](size_t i) {
        const int n = lo + static_cast<int>(i);
        Graph g = path_graph(n);
        SpectralData spec = analyze(g);
        SweepOptions opt;
        opt.certify = certify_options();
        SweepResult sweep = ppst_sweep(g, spec, opt);
        row_warnings[i] = sweep.warnings;
        Json row;
        row["n"] = n;
        row["ppst"] = !sweep.certified.empty();
        row["result"] = sweep_to_json(g, sweep);
        rows[i] = std::move(row);
    });
    for (const auto& w : row_warnings) warnings.insert(warnings.end(), w.begin(), w.end());
    Json out;
    out["family"] = "path";
    out["max_n"] = max_n;
    Json table = Json::array();
    std::vector<int> with_ppst;
    for (size_t i = 0; i < rows.size(); ++i) {
        if (rows[i]["ppst"].get<bool>()) with_ppst.push_back(lo + static_cast<int>(i));
        table.push_back(std::move(rows[i]));
    }
    out["ppst_orders"] = with_ppst;
    out["table"] = std::move(table);
    return out;
}

inline Json reproduce_cycles(int max_n, int jobs, std::vector<std::string>& warnings) {
    const int lo = 3;
    std::vector<Json> rows(std::max(0, max_n - lo + 1));
    std::vector<std::vector<std::string>> row_warnings(rows.size());
    parallel_for(rows.size(), jobs, [&](size_t i) {
        const int n = lo + static_cast<int>(i);
        Graph g = cycle_graph(n);
        SpectralData spec = analyze(g);
        SweepOptions opt;
        opt.certify = certify_options();
        SweepResult sweep = ppst_sweep(g, spec, opt);
        row_warnings[i] = sweep.warnings;
        Json row;
        row["n"] = n;
        row["ppst"] = !sweep.certified.empty();
        row["result"] = sweep_to_json(g, sweep);
        rows[i] = std::move(row);
    });
    for (const auto& w : row_warnings) warnings.insert(warnings.end(), w.begin(), w.end());
    Json out;
    out["family"] = "cycle";
    out["max_n"] = max_n;
    Json table = Json::array();
    std::vector<int> with_ppst;
    for (size_t i = 0; i < rows.size(); ++i) {
        if (rows[i]["ppst"].get<bool>()) with_ppst.push_back(lo + static_cast<int>(i));
        table.push_back(std::move(rows[i]));
    }
    out["ppst_orders"] = with_ppst;
    out["table"] = std::move(table);
    return out;
}

inline Json reproduce_ppst_pgst_demo(double horizon, std::vector<std::string>& warnings) {
    PpstPgstDemo demo = demo_ppst_pgst_graph();
    const Graph& g = demo.graph;
    SpectralData spec = analyze(g);

    Json out;
    out["graph"] = graph_to_json(g);

    TransferCertificate ppst = certify_pst(
        g, spec, QuantumState::pair(demo.ppst_source.a, demo.ppst_source.b, 12),
        QuantumState::pair(demo.ppst_target.a, demo.ppst_target.b, 12), certify_options());
    Json ppst_json;
    ppst_json["source"] = jpair(g, demo.ppst_source);
    ppst_json["target"] = jpair(g, demo.ppst_target);
    ppst_json["certificate"] = certificate_to_json(ppst);
    out["ppst"] = std::move(ppst_json);

    TransferCertificate no_ppst = certify_pst(
        g, spec, QuantumState::pair(demo.pgst_source.a, demo.pgst_source.b, 12),
        QuantumState::pair(demo.pgst_target.a, demo.pgst_target.b, 12), certify_options());
    PgstEvidence ev =
        pgst_evidence(spec, QuantumState::pair(demo.pgst_source.a, demo.pgst_source.b, 12),
                      QuantumState::pair(demo.pgst_target.a, demo.pgst_target.b, 12), horizon);
    Json pgst_json;
    pgst_json["source"] = jpair(g, demo.pgst_source);
    pgst_json["target"] = jpair(g, demo.pgst_target);
    pgst_json["ppst_certificate"] = certificate_to_json(no_ppst);
    pgst_json["evidence_peak"] = jnum(ev.peak);
    pgst_json["evidence_time"] = jnum(ev.time);
    pgst_json["horizon"] = jnum(ev.horizon);
    out["pair_pgst_evidence"] = std::move(pgst_json);

    BlockCheckResult block =
        block_decomposition_check(g, demo.ppst_branches, {0.3, 1.0, kPi / 2});
    out["block_max_deviation"] = jnum(block.max_deviation);
    if (ppst.verdict != Verdict::CertifiedYes)
        warnings.push_back("expected certified PPST in the demo graph");
    return out;
}

inline Json reproduce_edge_additions(bool cycles, std::vector<std::string>& warnings) {
    Json out;
    out["base"] = cycles ? "cycle10" : "path6";
    Json variants = Json::array();
    const int count = cycles ? 2 : 3;
    for (int variant = 1; variant <= count; ++variant) {
        BranchDemo demo = cycles ? cycle10_plus_edges(variant) : path6_plus_edges(variant);
        const Graph& g = demo.graph;
        SpectralData spec = analyze(g);
        BranchVerification v = verify_branch_pair(g, demo.branches);
        TransferCertificate cert = certify_pst(
            g, spec, QuantumState::pair(demo.source.a, demo.source.b, g.vertex_count()),
            QuantumState::pair(demo.target.a, demo.target.b, g.vertex_count()),
            certify_options());
        Json row;
        row["variant"] = variant;
        row["graph"] = graph_to_json(g);
        row["branches_valid"] = v.ok;
        row["source"] = jpair(g, demo.source);
        row["target"] = jpair(g, demo.target);
        row["certificate"] = certificate_to_json(cert);
        row["added_edges"] = g.edge_count() - (cycles ? 10 : 5);
        variants.push_back(std::move(row));
        if (cert.verdict != Verdict::CertifiedYes)
            warnings.push_back("edge-addition variant failed to certify");
    }
    out["variants"] = std::move(variants);
    return out;
}

inline Json reproduce_book(std::vector<std::string>& warnings) {
    Json out;
    Json rows = Json::array();
    for (int l : {3, 4, 5}) {
        Graph b = book_graph(l);
        SpectralData spec = analyze(b);
        std::vector<BranchPair> branches;
        for (int k = 2; k <= 3; ++k) {
            BranchPair bp;
            bp.copy1 = {2, 3};
            bp.copy2 = {2 * k, 2 * k + 1};
            branches.push_back(bp);
        }
        TransferCertificate cert = mstate_transfer_check(
            b, spec, branches, 2, 3, {Complex(1, 0), Complex(1, 0), Complex(-2, 0)},
            certify_options());
        Json row;
        row["pages"] = l;
        row["coefficients"] = "(1,1,-2)/sqrt(6)";
        row["certificate"] = certificate_to_json(cert);
        rows.push_back(std::move(row));
        if (cert.verdict != Verdict::CertifiedYes)
            warnings.push_back("book graph failed to certify at l = " + std::to_string(l));
    }
    out["book"] = std::move(rows);
    return out;
}

inline Json reproduce_results(const std::string& id, int max_n, double horizon, int jobs,
                              std::vector<std::string>& warnings) {
    if (id == "paths") return reproduce_paths(max_n, jobs, warnings);
    if (id == "cycles") return reproduce_cycles(max_n, jobs, warnings);
    if (id == "ppst-pgst-demo") return reproduce_ppst_pgst_demo(horizon, warnings);
    if (id == "path6-edges") return reproduce_edge_additions(false, warnings);
    if (id == "cycle10-edges") return reproduce_edge_additions(true, warnings);
    if (id == "book") return reproduce_book(warnings);
    throw std::invalid_argument(
        "unknown reproduce target '" + id +
        "' (try: paths, cycles, ppst-pgst-demo, path6-edges, cycle10-edges, book)");
}

}  // namespace cli
}  // namespace qwalk
