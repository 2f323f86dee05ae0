#include "ptlens/analysis.hpp"

#include <algorithm>

#include "ptlens/error.hpp"

namespace ptlens {

std::string_view outcome_name(AnalysisOutcome::Kind k) {
    switch (k) {
    case AnalysisOutcome::Kind::CertificateV: return "CertificateV";
    case AnalysisOutcome::Kind::CertificateW: return "CertificateW";
    case AnalysisOutcome::Kind::Contradiction: return "Contradiction";
    }
    return "?";
}

SwapVerdict swap_admissible(const LensSpace& L, TreeEdgeLabel label) {
    if (label == TreeEdgeLabel::Type1 || label == TreeEdgeLabel::Type2) {
        return SwapVerdict{true, "exchanging the ends of a " +
                                     std::string(tree_label_name(label)) +
                                     " edge is compatible with the covering involution"};
    }

    std::string kind = label == TreeEdgeLabel::Bridge ? "a bridge" : "a type-0 edge";
    bool q_is_minus_one = (L.q + 1) % L.p == 0;
    std::string reason =
        "exchanging the ends of " + kind + " makes the involution act on H1 by "
        "multiplication by q = " + std::to_string(L.q) +
        ", while the covering involution acts by -1";
    if (!q_is_minus_one) {
        reason += "; q != -1 (mod " + std::to_string(L.p) + "), so no such involution exists";
    } else {
        reason += "; that identifies L(" + std::to_string(L.p) + "," + std::to_string(L.q) +
                  ") with L(" + std::to_string(L.p) +
                  ",1), whose primitive tree has neither type-0 edges nor bridges";
    }
    return SwapVerdict{false, reason};
}

int resolve_white_vertex(const PrimitiveTree& t, const LabeledComplex& c, const VertexMap& f,
                         int white) {
    const TreeVertex* w = t.find_vertex(white);
    if (w == nullptr || w->color != VertexColor::White) {
        throw Error("ImpossibleInput", "vertex " + std::to_string(white) + " is not white");
    }
    auto fit = f.find(white);
    if (fit == f.end() || fit->second != white) {
        throw Error("ImpossibleInput",
                    "white vertex " + std::to_string(white) + " is not fixed by the map");
    }
    auto src = t.vertex_source.find(white);
    if (src == t.vertex_source.end() || src->second.kind != VertexSource::Kind::Triangle) {
        throw Error("ImpossibleInput",
                    "white vertex " + std::to_string(white) + " has no source triangle");
    }

    // Sanity: the triangle should exist in the complex the tree was built from.
    const auto& tri = src->second.triangle;
    if (std::find(c.triangles.begin(), c.triangles.end(), tri) == c.triangles.end()) {
        throw Error("ImpossibleInput", "source triangle of white vertex " +
                                           std::to_string(white) +
                                           " is absent from the complex");
    }

    int best = -1;
    for (int corner : tri) {
        auto it = f.find(corner);
        if (it != f.end() && it->second == corner) {
            if (best < 0 || corner < best) best = corner;
        }
    }
    if (best < 0) {
        throw Error("ImpossibleInput",
                    "no corner of the source triangle is fixed; the map cannot have order <= 2");
    }
    return best;
}

AnalysisOutcome analyze(const LensSpace& L, const PrimitiveTree& t, const LabeledComplex& c,
                        const VertexMap& f) {
    long long order = check_automorphism(t, f);
    if (order > 2) {
        throw Error("UnsupportedOrder",
                    "analysis requires an involution, got order " + std::to_string(order));
    }

    AnalysisOutcome out;
    out.locus = fixed_point(t, f);

    if (out.locus.kind == FixedLocus::Kind::Vertex) {
        const TreeVertex* v = t.find_vertex(out.locus.vertex);
        out.kind = AnalysisOutcome::Kind::CertificateV;
        if (v->color == VertexColor::White) {
            out.vertex = resolve_white_vertex(t, c, f, out.locus.vertex);
            out.reason = "fixed white vertex resolves to fixed corner " +
                         std::to_string(out.vertex) + " of its triangle";
        } else {
            out.vertex = out.locus.vertex;
            out.reason = "the involution fixes a primitive-disk vertex";
        }
        return out;
    }

    TreeEdgeLabel label = t.edge_label(out.locus.u, out.locus.v).value();
    out.edge = {out.locus.u, out.locus.v};
    switch (label) {
    case TreeEdgeLabel::Type0:
    case TreeEdgeLabel::Bridge: {
        out.kind = AnalysisOutcome::Kind::Contradiction;
        out.reason = swap_admissible(L, label).reason;
        break;
    }
    case TreeEdgeLabel::Type1:
        out.kind = AnalysisOutcome::Kind::CertificateW;
        out.dual_count = 1;
        out.reason = "the unique common dual-disk vertex of the swapped pair is fixed";
        break;
    case TreeEdgeLabel::Type2:
        out.kind = AnalysisOutcome::Kind::CertificateW;
        out.dual_count = 2;
        out.reason = "both common dual-disk vertices of the swapped pair are fixed";
        break;
    }
    return out;
}

} // namespace ptlens
