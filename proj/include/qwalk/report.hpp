#pragma once

#include "qwalk/io.hpp"
#include "qwalk/partition.hpp"
#include "qwalk/sweeps.hpp"

#include <cstdio>
#include <cstdlib>

namespace qwalk {

/// Round to 12 significant digits; report payloads are formatted through this
/// so reruns are byte-identical.
inline double round_sig12(double x) {
    if (!std::isfinite(x)) return x;
    if (x == 0.0) return 0.0;
    char buf[48];
    std::snprintf(buf, sizeof buf, "%.12g", x);
    return std::atof(buf);
}

inline Json jnum(double x) { return round_sig12(x); }

inline Json jcomplex(Complex z) {
    return Json::array({round_sig12(z.real()), round_sig12(z.imag())});
}

inline Json jpair(const Graph& g, VertexPair p) {
    return Json::array({g.label(p.a), g.label(p.b)});
}

inline Json algebraic_class_to_json(const AlgebraicClass& cls) {
    Json j;
    switch (cls.tag) {
        case AlgebraicClass::Tag::Integer:
            j["tag"] = "integer";
            j["value"] = cls.int_value.str();
            break;
        case AlgebraicClass::Tag::Quadratic:
            j["tag"] = "quadratic";
            j["c"] = cls.c;
            j["d"] = cls.d;
            j["delta"] = cls.delta;
            break;
        default:
            j["tag"] = "other";
            if (cls.min_poly_degree > 0) j["min_poly_degree"] = cls.min_poly_degree;
            break;
    }
    j["form"] = cls.describe();
    return j;
}

inline Json certificate_to_json(const TransferCertificate& cert) {
    Json j;
    j["verdict"] = verdict_name(cert.verdict);
    j["criterion"] = cert.criterion;
    if (cert.time) j["time"] = jnum(*cert.time);
    if (cert.symbolic_time) j["time_symbolic"] = cert.symbolic_time->str();
    if (cert.phase) j["phase"] = jcomplex(*cert.phase);
    j["peak_fidelity"] = jnum(cert.peak_fidelity);
    Json support = Json::array();
    for (double v : cert.support) support.push_back(jnum(v));
    j["support"] = std::move(support);
    if (!cert.warnings.empty()) j["warnings"] = cert.warnings;
    return j;
}

inline Json graph_summary(const Graph& g) {
    Json j;
    j["n"] = g.vertex_count();
    j["edge_count"] = g.edge_count();
    j["integer_weighted"] = g.integer_weighted();
    if (g.family.kind != FamilyInfo::Kind::None) {
        std::string fam = family_kind_name(g.family.kind);
        if (!g.family.params.empty()) fam += "(" + std::to_string(g.family.params[0]) + ")";
        j["family"] = fam;
    }
    if (!g.labels().empty()) j["labels"] = g.labels();  // index = internal 0-based id
    return j;
}

/// Assemble a full report. Timing lives in its own trailing field so that
/// payload comparisons can drop it; everything else is deterministic for
/// fixed inputs.
inline Json make_report(const std::string& command, const Graph* g, Json results,
                        const std::vector<std::string>& warnings, double timing_ms) {
    Json report;
    report["command"] = command;
    if (g) report["graph"] = graph_summary(*g);
    report["results"] = std::move(results);
    report["warnings"] = warnings;
    report["timing_ms"] = round_sig12(timing_ms);
    return report;
}

}  // namespace qwalk
