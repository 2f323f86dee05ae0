#include "ptlens/verify.hpp"

#include <algorithm>
#include <chrono>
#include <deque>
#include <map>
#include <numeric>
#include <set>

#include "ptlens/error.hpp"
#include "ptlens/io.hpp"

namespace ptlens::verify {
namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string cell_key(StructureCase sc, FixedLocus::Kind locus, const char* label) {
    std::string key = std::string(case_name(sc)) + "/" +
                      (locus == FixedLocus::Kind::Vertex ? "vertex" : "edge");
    if (label != nullptr) key += std::string("/") + label;
    return key;
}

} // namespace

void SuiteResult::fail(const std::string& note) {
    passed = false;
    ++failures;
    if (notes.size() < 8) notes.push_back(note);
}

void SuiteResult::expect(bool ok, const std::string& note) {
    ++checks;
    if (!ok) fail(note);
}

OracleVerdict classify_oracle(const LensSpace& L) {
    int p = L.p, q = L.q;
    // p = +-1 (mod q), taken literally as divisibility of p -+ 1 by q.
    bool congruent = ((p - 1) % q == 0) || ((p + 1) % q == 0);
    bool tree_shape = congruent && q != 2 && p != 2 * q + 1;
    bool two_dim = congruent && (q == 2 || p == 2 * q + 1);

    const std::pair<bool, StructureCase> conditions[] = {
        {tree_shape && p == 2 && q == 1, StructureCase::C1a},
        {tree_shape && q == 1 && p >= 4, StructureCase::C1b},
        {tree_shape && q != 1, StructureCase::C1c},
        {two_dim && p == 3, StructureCase::C2a},
        {two_dim && p == 5, StructureCase::C2b},
        {two_dim && p >= 7, StructureCase::C2c},
        {!congruent, StructureCase::C3},
    };
    OracleVerdict verdict;
    for (const auto& [holds, tag] : conditions) {
        if (holds) {
            verdict.tag = tag;
            ++verdict.fired;
        }
    }
    return verdict;
}

const std::vector<LensSpace>& case_representatives() {
    static const std::vector<LensSpace> reps = {
        normalize(2, 1),  normalize(4, 1), normalize(11, 4), normalize(3, 1),
        normalize(5, 2),  normalize(7, 2), normalize(13, 5),
    };
    return reps;
}

PrimitiveTree random_tree(RngStream& rng, int n) {
    PrimitiveTree t;
    for (int i = 0; i < n; ++i) t.add_vertex(i, VertexColor::Black, false);
    for (int i = 1; i < n; ++i) {
        int parent = static_cast<int>(rng.below(static_cast<std::uint64_t>(i)));
        TreeEdgeLabel label = rng.chance(0.5) ? TreeEdgeLabel::Type0 : TreeEdgeLabel::Type1;
        t.add_edge(parent, i, label);
    }
    t.source_case = StructureCase::C1c;
    t.canonicalize();
    return t;
}

namespace {

void merge_tree(PrimitiveTree& into, const PrimitiveTree& part, int offset) {
    for (const auto& v : part.vertices) into.add_vertex(v.id + offset, v.color, v.frontier);
    for (const auto& e : part.edges) into.add_edge(e.u + offset, e.v + offset, e.label);
}

} // namespace

TreeInvolution random_involution(RngStream& rng, int max_vertices) {
    TreeInvolution out;
    int variant = static_cast<int>(rng.below(4));
    TreeEdgeLabel link = rng.chance(0.5) ? TreeEdgeLabel::Type0 : TreeEdgeLabel::Type1;

    if (variant == 0) {
        // Identity on a plain random tree.
        int n = rng.range(1, std::max(1, max_vertices));
        out.tree = random_tree(rng, n);
        for (const auto& v : out.tree.vertices) out.map[v.id] = v.id;
        return out;
    }

    int spine_n = 0;
    if (variant == 2) spine_n = 1;
    if (variant == 3) spine_n = rng.range(1, std::max(1, max_vertices / 10));
    int half_n = rng.range(1, std::max(1, (max_vertices - spine_n) / 2));

    PrimitiveTree half = random_tree(rng, half_n);
    if (spine_n == 0) {
        // Two copies joined by one swapped edge.
        merge_tree(out.tree, half, 0);
        merge_tree(out.tree, half, half_n);
        out.tree.add_edge(0, half_n, link);
        for (int i = 0; i < half_n; ++i) {
            out.map[i] = i + half_n;
            out.map[i + half_n] = i;
        }
    } else {
        // Copies hanging off a pointwise-fixed spine.
        PrimitiveTree spine = random_tree(rng, spine_n);
        merge_tree(out.tree, spine, 0);
        merge_tree(out.tree, half, spine_n);
        merge_tree(out.tree, half, spine_n + half_n);
        int attach = static_cast<int>(rng.below(static_cast<std::uint64_t>(spine_n)));
        out.tree.add_edge(attach, spine_n, link);
        out.tree.add_edge(attach, spine_n + half_n, link);
        for (int i = 0; i < spine_n; ++i) out.map[i] = i;
        for (int i = 0; i < half_n; ++i) {
            out.map[spine_n + i] = spine_n + half_n + i;
            out.map[spine_n + half_n + i] = spine_n + i;
        }
    }
    out.tree.source_case = StructureCase::C1c;
    out.tree.canonicalize();
    return out;
}

// ---------------------------------------------------------------------------
// Decision-table instance builders. Every builder assembles a complex out of
// mirrored halves, so the involution is valid by construction, and the
// expected locus is pinned by making the mirrored parts the only moved ones.
// ---------------------------------------------------------------------------

namespace {

int new_vertex(LabeledComplex& c, int& next, bool frontier, bool primitive = true) {
    VertexAttrs v;
    v.id = next++;
    v.frontier = frontier;
    v.primitive = primitive;
    c.add_vertex(v);
    return v.id;
}

// Children below `v` per the tree-case rules, to the given depth. `incoming`
// is the label of the edge that reached v (Plain for none).
void grow_children(LabeledComplex& c, int& next, RngStream& rng, StructureCase sc, int v,
                   int depth, EdgeLabel incoming, int branching, int depth_limit) {
    if (depth >= depth_limit) return;
    auto spawn = [&](EdgeLabel label, int count) {
        for (int i = 0; i < count; ++i) {
            int w = new_vertex(c, next, depth + 1 >= depth_limit);
            c.add_edge(v, w, label);
            grow_children(c, next, rng, sc, w, depth + 1, label, branching, depth_limit);
        }
    };
    switch (sc) {
    case StructureCase::C1a:
        spawn(EdgeLabel::Type2, branching - (incoming != EdgeLabel::Plain ? 1 : 0));
        break;
    case StructureCase::C1b:
        spawn(EdgeLabel::Type1, branching - (incoming != EdgeLabel::Plain ? 1 : 0));
        break;
    default: { // mixed trees: C1c and the C3 components
        int want0 = branching - (incoming == EdgeLabel::Type0 ? 1 : 0);
        int want1 = branching - (incoming == EdgeLabel::Type1 ? 1 : 0);
        if (rng.chance(0.5)) {
            spawn(EdgeLabel::Type0, want0);
            spawn(EdgeLabel::Type1, want1);
        } else {
            spawn(EdgeLabel::Type1, want1);
            spawn(EdgeLabel::Type0, want0);
        }
        break;
    }
    }
}

void merge_complex(LabeledComplex& into, const LabeledComplex& part, int offset) {
    for (const auto& v : part.vertices) {
        VertexAttrs copy = v;
        copy.id += offset;
        into.add_vertex(copy);
    }
    for (const auto& e : part.edges) into.add_edge(e.u + offset, e.v + offset, e.label);
    for (const auto& t : part.triangles) {
        into.add_triangle(t[0] + offset, t[1] + offset, t[2] + offset);
    }
    for (const auto& b : part.bridges) {
        std::vector<int> path = b;
        for (int& x : path) x += offset;
        into.bridges.push_back(std::move(path));
    }
}

VertexMap mirror_map(int lo, int n) {
    VertexMap f;
    for (int i = lo; i < lo + n; ++i) {
        f[i] = i + n;
        f[i + n] = i;
    }
    return f;
}

void fix_range(VertexMap& f, int lo, int hi) {
    for (int i = lo; i < hi; ++i) f[i] = i;
}

LensSpace pick(RngStream& rng, const std::vector<LensSpace>& options) {
    return options[rng.below(options.size())];
}

const std::vector<LensSpace>& c1b_spaces() {
    static const std::vector<LensSpace> v = {normalize(4, 1), normalize(5, 1), normalize(6, 1),
                                             normalize(7, 1), normalize(9, 1)};
    return v;
}

const std::vector<LensSpace>& c1c_spaces() {
    static const std::vector<LensSpace> v = {normalize(8, 3), normalize(11, 3), normalize(11, 4),
                                             normalize(13, 4), normalize(14, 3),
                                             normalize(15, 4)};
    return v;
}

const std::vector<LensSpace>& c2c_spaces() {
    static const std::vector<LensSpace> v = {normalize(7, 2), normalize(9, 2), normalize(11, 2),
                                             normalize(7, 3), normalize(9, 4),
                                             normalize(11, 5)};
    return v;
}

const std::vector<LensSpace>& c3_spaces() {
    static const std::vector<LensSpace> v = {normalize(13, 5), normalize(12, 5),
                                             normalize(17, 5), normalize(18, 5),
                                             normalize(17, 7), normalize(19, 7)};
    return v;
}

LensSpace space_for(RngStream& rng, StructureCase sc) {
    switch (sc) {
    case StructureCase::C1a: return normalize(2, 1);
    case StructureCase::C1b: return pick(rng, c1b_spaces());
    case StructureCase::C1c: return pick(rng, c1c_spaces());
    case StructureCase::C2a: return normalize(3, 1);
    case StructureCase::C2b: return normalize(5, 2);
    case StructureCase::C2c: return pick(rng, c2c_spaces());
    case StructureCase::C3: return pick(rng, c3_spaces());
    }
    return normalize(2, 1);
}

EdgeLabel uniform_label(StructureCase sc) {
    return sc == StructureCase::C1a ? EdgeLabel::Type2 : EdgeLabel::Type1;
}

AnalysisOutcome::Kind expected_for_swap(EdgeLabel tau, int& dual_count) {
    switch (tau) {
    case EdgeLabel::Type0:
        dual_count = 0;
        return AnalysisOutcome::Kind::Contradiction;
    case EdgeLabel::Type1:
        dual_count = 1;
        return AnalysisOutcome::Kind::CertificateW;
    case EdgeLabel::Type2:
        dual_count = 2;
        return AnalysisOutcome::Kind::CertificateW;
    default:
        dual_count = 0;
        return AnalysisOutcome::Kind::Contradiction;
    }
}

// Two mirrored tree halves joined by one edge of label tau; the involution
// swaps the halves, so the joining edge is the locus.
CellInstance tree_swap_instance(RngStream& rng, StructureCase sc, EdgeLabel tau) {
    CellInstance inst;
    inst.L = space_for(rng, sc);
    int branching = rng.range(2, 3);
    int depth = rng.range(1, 3);

    LabeledComplex half;
    int next = 0;
    int root = new_vertex(half, next, depth == 0);
    grow_children(half, next, rng, sc, root, 0, tau, branching, depth);

    int n = next;
    inst.complex = half;
    merge_complex(inst.complex, half, n);
    inst.complex.add_edge(root, root + n, tau);
    inst.complex.canonicalize();

    inst.map = mirror_map(0, n);
    inst.expected = expected_for_swap(tau, inst.expected_dual_count);
    inst.cell = cell_key(sc, FixedLocus::Kind::Edge, edge_label_name(tau).data());
    return inst;
}

// Mirrored halves hanging off a pointwise-fixed center vertex.
CellInstance tree_fixed_instance(RngStream& rng, StructureCase sc) {
    CellInstance inst;
    inst.L = space_for(rng, sc);
    int branching = rng.range(2, 3);
    int depth = rng.range(1, 2);
    EdgeLabel tau = sc == StructureCase::C1c
                        ? (rng.chance(0.5) ? EdgeLabel::Type0 : EdgeLabel::Type1)
                        : uniform_label(sc);

    // Center plus its padding subtrees, all fixed by the involution.
    LabeledComplex spine;
    int next = 0;
    int center = new_vertex(spine, next, false);
    if (sc == StructureCase::C1c) {
        int want0 = branching - (tau == EdgeLabel::Type0 ? 2 : 0);
        int want1 = branching - (tau == EdgeLabel::Type1 ? 2 : 0);
        for (int i = 0; i < std::max(0, want0); ++i) {
            int w = new_vertex(spine, next, depth <= 0);
            spine.add_edge(center, w, EdgeLabel::Type0);
            grow_children(spine, next, rng, sc, w, 1, EdgeLabel::Type0, branching, depth + 1);
        }
        for (int i = 0; i < std::max(0, want1); ++i) {
            int w = new_vertex(spine, next, depth <= 0);
            spine.add_edge(center, w, EdgeLabel::Type1);
            grow_children(spine, next, rng, sc, w, 1, EdgeLabel::Type1, branching, depth + 1);
        }
    } else {
        for (int i = 0; i < branching - 2; ++i) {
            int w = new_vertex(spine, next, depth <= 0);
            spine.add_edge(center, w, tau);
            grow_children(spine, next, rng, sc, w, 1, tau, branching, depth + 1);
        }
    }
    int spine_n = next;

    LabeledComplex half;
    int half_next = 0;
    int root = new_vertex(half, half_next, depth == 0);
    grow_children(half, half_next, rng, sc, root, 0, tau, branching, depth);
    int n = half_next;

    inst.complex = spine;
    merge_complex(inst.complex, half, spine_n);
    merge_complex(inst.complex, half, spine_n + n);
    inst.complex.add_edge(center, spine_n, tau);
    inst.complex.add_edge(center, spine_n + n, tau);
    inst.complex.canonicalize();

    inst.map = mirror_map(spine_n, n);
    fix_range(inst.map, 0, spine_n);
    inst.expected = AnalysisOutcome::Kind::CertificateV;
    inst.cell = cell_key(sc, FixedLocus::Kind::Vertex, nullptr);
    return inst;
}

// A flower of `count` depth-one triangles around local root 0, all edges
// type-1 (C2a) or one random type-1 side each (C2c).
LabeledComplex triangle_flower(RngStream& rng, int count, bool c2c_labels) {
    LabeledComplex part;
    int next = 0;
    new_vertex(part, next, false);
    for (int i = 0; i < count; ++i) {
        int a = new_vertex(part, next, true);
        int b = new_vertex(part, next, true);
        if (c2c_labels) {
            int side = static_cast<int>(rng.below(3));
            part.add_edge(0, a, side == 0 ? EdgeLabel::Type1 : EdgeLabel::Type0);
            part.add_edge(0, b, side == 1 ? EdgeLabel::Type1 : EdgeLabel::Type0);
            part.add_edge(a, b, side == 2 ? EdgeLabel::Type1 : EdgeLabel::Type0);
        } else {
            part.add_edge(0, a, EdgeLabel::Type1);
            part.add_edge(0, b, EdgeLabel::Type1);
            part.add_edge(a, b, EdgeLabel::Type1);
        }
        part.add_triangle(0, a, b);
    }
    return part;
}

// Glues `part` into `into`, identifying part-vertex 0 with `glue`; remaining
// part ids shift by `offset - 1` positions starting at `offset`. Returns the
// number of vertices added.
int glue_flower(LabeledComplex& into, const LabeledComplex& part, int glue, int offset) {
    auto remap = [&](int id) { return id == 0 ? glue : offset + id - 1; };
    for (const auto& v : part.vertices) {
        if (v.id == 0) continue;
        VertexAttrs copy = v;
        copy.id = remap(v.id);
        into.add_vertex(copy);
    }
    for (const auto& e : part.edges) into.add_edge(remap(e.u), remap(e.v), e.label);
    for (const auto& t : part.triangles) {
        into.add_triangle(remap(t[0]), remap(t[1]), remap(t[2]));
    }
    return static_cast<int>(part.vertices.size()) - 1;
}

// C2a: central triangle {0, 1, 2}; vertices 0 and 1 carry mirrored flowers
// and are exchanged (white locus), or the involution fixes everything except
// two corners of one flower triangle (black locus).
CellInstance c2a_instance(RngStream& rng, bool white_locus) {
    CellInstance inst;
    inst.L = normalize(3, 1);
    int count = rng.range(1, 3);

    LabeledComplex c;
    int next = 0;
    new_vertex(c, next, false);
    new_vertex(c, next, false);
    new_vertex(c, next, false);
    c.add_edge(0, 1, EdgeLabel::Type1);
    c.add_edge(0, 2, EdgeLabel::Type1);
    c.add_edge(1, 2, EdgeLabel::Type1);
    c.add_triangle(0, 1, 2);

    LabeledComplex flower = triangle_flower(rng, count, false);
    int added_a = glue_flower(c, flower, 0, next);
    int base_b = next + added_a;
    glue_flower(c, flower, 1, base_b);
    int base_s = base_b + added_a;
    LabeledComplex flower_s = triangle_flower(rng, rng.range(1, 2), false);
    int added_s = glue_flower(c, flower_s, 2, base_s);
    c.canonicalize();

    fix_range(inst.map, 0, base_s + added_s);
    if (white_locus) {
        inst.map[0] = 1;
        inst.map[1] = 0;
        for (int i = 0; i < added_a; ++i) {
            inst.map[next + i] = base_b + i;
            inst.map[base_b + i] = next + i;
        }
        inst.cell = cell_key(StructureCase::C2a, FixedLocus::Kind::Vertex, "white");
    } else if (count >= 1) {
        // Swap the two free corners of the first flower triangle at vertex 0.
        inst.map[next] = next + 1;
        inst.map[next + 1] = next;
        inst.cell = cell_key(StructureCase::C2a, FixedLocus::Kind::Vertex, "black");
    }
    inst.complex = c;
    inst.expected = AnalysisOutcome::Kind::CertificateV;
    return inst;
}

// C2b: one strip of k triangles, reflected across its middle. Even k swaps
// the central type-0 edge; odd k fixes the central rim vertex.
CellInstance c2b_instance(RngStream& rng, bool swap_edge) {
    CellInstance inst;
    inst.L = normalize(5, 2);
    int m = rng.range(1, 4);
    int k = swap_edge ? 2 * m : 2 * m + 1;

    LabeledComplex c;
    int next = 0;
    for (int j = 0; j <= k + 1; ++j) {
        new_vertex(c, next, j == 0 || j == k + 1);
    }
    for (int j = 0; j <= k; ++j) c.add_edge(j, j + 1, EdgeLabel::Type0);
    for (int i = 0; i < k; ++i) {
        c.add_edge(i, i + 2, EdgeLabel::Type1);
        c.add_triangle(i, i + 1, i + 2);
    }
    c.canonicalize();

    for (int j = 0; j <= k + 1; ++j) inst.map[j] = k + 1 - j;
    inst.complex = c;
    if (swap_edge) {
        inst.expected = AnalysisOutcome::Kind::Contradiction;
        inst.cell = cell_key(StructureCase::C2b, FixedLocus::Kind::Edge, "type0");
    } else {
        inst.expected = AnalysisOutcome::Kind::CertificateV;
        inst.cell = cell_key(StructureCase::C2b, FixedLocus::Kind::Vertex, nullptr);
    }
    return inst;
}

// C2c: two mirrored flower halves joined by a naked type-1 edge (swap cell),
// or hanging off a fixed center with its own flower (vertex cell).
CellInstance c2c_instance(RngStream& rng, bool swap_edge) {
    CellInstance inst;
    inst.L = pick(rng, c2c_spaces());
    int count = rng.range(1, 3);

    LabeledComplex flower = triangle_flower(rng, count, true);
    LabeledComplex c;
    int next = 0;

    if (swap_edge) {
        int r1 = new_vertex(c, next, false);
        int r2 = new_vertex(c, next, false);
        c.add_edge(r1, r2, EdgeLabel::Type1); // naked: contained in no triangle
        int added = glue_flower(c, flower, r1, next);
        glue_flower(c, flower, r2, next + added);
        c.canonicalize();

        fix_range(inst.map, 0, next + 2 * added);
        inst.map[r1] = r2;
        inst.map[r2] = r1;
        for (int i = 0; i < added; ++i) {
            inst.map[next + i] = next + added + i;
            inst.map[next + added + i] = next + i;
        }
        inst.expected = AnalysisOutcome::Kind::CertificateW;
        inst.expected_dual_count = 1;
        inst.cell = cell_key(StructureCase::C2c, FixedLocus::Kind::Edge, "type1");
    } else {
        int center = new_vertex(c, next, false);
        int r1 = new_vertex(c, next, false);
        int r2 = new_vertex(c, next, false);
        c.add_edge(center, r1, EdgeLabel::Type1);
        c.add_edge(center, r2, EdgeLabel::Type1);
        LabeledComplex center_flower = triangle_flower(rng, 1, true);
        int added_c = glue_flower(c, center_flower, center, next);
        int base = next + added_c;
        int added = glue_flower(c, flower, r1, base);
        glue_flower(c, flower, r2, base + added);
        c.canonicalize();

        fix_range(inst.map, 0, base + 2 * added);
        inst.map[r1] = r2;
        inst.map[r2] = r1;
        for (int i = 0; i < added; ++i) {
            inst.map[base + i] = base + added + i;
            inst.map[base + added + i] = base + i;
        }
        inst.expected = AnalysisOutcome::Kind::CertificateV;
        inst.cell = cell_key(StructureCase::C2c, FixedLocus::Kind::Vertex, nullptr);
    }
    inst.complex = c;
    return inst;
}

// Bridge fan helper for the C3 builders; labels and flags as the generator
// emits them, ids allocated from `next`.
void append_fan(LabeledComplex& c, int& next, int d, int e, int len,
                std::vector<int>* path_out) {
    int apex = new_vertex(c, next, false, false);
    std::vector<int> rim(static_cast<std::size_t>(len) + 1);
    rim[0] = d;
    rim[static_cast<std::size_t>(len)] = e;
    for (int j = 1; j < len; ++j) rim[static_cast<std::size_t>(j)] = new_vertex(c, next, false, false);
    for (int j = 0; j <= len; ++j) c.add_edge(apex, rim[static_cast<std::size_t>(j)], EdgeLabel::BridgeInterior);
    for (int j = 0; j < len; ++j) {
        c.add_edge(rim[static_cast<std::size_t>(j)], rim[static_cast<std::size_t>(j + 1)],
                   EdgeLabel::BridgeInterior);
        c.add_triangle(apex, rim[static_cast<std::size_t>(j)], rim[static_cast<std::size_t>(j + 1)]);
    }
    std::vector<int> path;
    path.push_back(d);
    path.push_back(std::min(apex, rim[1]));
    path.push_back(std::max(apex, rim[1]));
    for (int j = 2; j <= len; ++j) path.push_back(rim[static_cast<std::size_t>(j)]);
    c.bridges.push_back(path);
    if (path_out != nullptr) *path_out = path;
}

// Mixed tree component rooted at a fresh vertex; returns the root id.
int append_component(LabeledComplex& c, int& next, RngStream& rng, int branching, int depth) {
    int root = new_vertex(c, next, depth == 0);
    grow_children(c, next, rng, StructureCase::C1c, root, 0, EdgeLabel::Plain, branching, depth);
    return root;
}

// C3, swapped bridge: two identical components joined by one fan between
// mirrored vertices.
CellInstance c3_bridge_instance(RngStream& rng) {
    CellInstance inst;
    inst.L = pick(rng, c3_spaces());
    int branching = rng.range(2, 3);
    int depth = rng.range(1, 2);
    int fan_len = rng.range(2, 3);

    LabeledComplex half;
    int half_next = 0;
    int root = new_vertex(half, half_next, depth == 0);
    grow_children(half, half_next, rng, StructureCase::C1c, root, 0, EdgeLabel::Plain,
                  branching, depth);
    int n = half_next;

    LabeledComplex c = half;
    merge_complex(c, half, n);
    int next = 2 * n;
    int d = static_cast<int>(rng.below(static_cast<std::uint64_t>(n)));
    append_fan(c, next, d, d + n, fan_len, nullptr);
    c.canonicalize();

    inst.map = mirror_map(0, n);
    inst.complex = c;
    inst.expected = AnalysisOutcome::Kind::Contradiction;
    inst.cell = cell_key(StructureCase::C3, FixedLocus::Kind::Edge, "bridge");
    return inst;
}

// C3, swapped tree edge inside one component: that component is a mirrored
// pair across the edge, and the bridges out of its two halves lead to two
// identical components that the involution exchanges.
CellInstance c3_edge_instance(RngStream& rng, EdgeLabel tau) {
    CellInstance inst;
    inst.L = pick(rng, c3_spaces());
    int branching = rng.range(2, 3);
    int depth = rng.range(1, 2);
    int fan_len = rng.range(2, 3);

    LabeledComplex half;
    int half_next = 0;
    int root = new_vertex(half, half_next, false);
    grow_children(half, half_next, rng, StructureCase::C1c, root, 0, tau, branching, depth);
    int n1 = half_next;

    LabeledComplex satellite;
    int sat_next = 0;
    int sat_root = new_vertex(satellite, sat_next, depth == 0);
    grow_children(satellite, sat_next, rng, StructureCase::C1c, sat_root, 0, EdgeLabel::Plain,
                  branching, depth);
    int n2 = sat_next;

    LabeledComplex c = half;
    merge_complex(c, half, n1);            // mirrored half: ids [n1, 2n1)
    c.add_edge(root, root + n1, tau);      // the swapped edge
    merge_complex(c, satellite, 2 * n1);   // satellite A: ids [2n1, 2n1+n2)
    merge_complex(c, satellite, 2 * n1 + n2); // satellite B

    int next = 2 * n1 + 2 * n2;
    int a = static_cast<int>(rng.below(static_cast<std::uint64_t>(n1)));
    int b = static_cast<int>(rng.below(static_cast<std::uint64_t>(n2)));
    append_fan(c, next, a, 2 * n1 + b, fan_len, nullptr);
    append_fan(c, next, a + n1, 2 * n1 + n2 + b, fan_len, nullptr);
    c.canonicalize();

    inst.map = mirror_map(0, n1);
    for (int i = 0; i < n2; ++i) {
        inst.map[2 * n1 + i] = 2 * n1 + n2 + i;
        inst.map[2 * n1 + n2 + i] = 2 * n1 + i;
    }
    inst.complex = c;
    inst.expected = expected_for_swap(tau, inst.expected_dual_count);
    inst.cell = cell_key(StructureCase::C3, FixedLocus::Kind::Edge, edge_label_name(tau).data());
    return inst;
}

// C3, fixed vertex: one fixed component, two exchanged satellites bridged
// from it.
CellInstance c3_fixed_instance(RngStream& rng) {
    CellInstance inst;
    inst.L = pick(rng, c3_spaces());
    int branching = rng.range(2, 3);
    int depth = rng.range(1, 2);
    int fan_len = rng.range(2, 3);

    LabeledComplex base;
    int next = 0;
    append_component(base, next, rng, branching, depth);
    int n1 = next;

    LabeledComplex satellite;
    int sat_next = 0;
    int sat_root = new_vertex(satellite, sat_next, depth == 0);
    grow_children(satellite, sat_next, rng, StructureCase::C1c, sat_root, 0, EdgeLabel::Plain,
                  branching, depth);
    int n2 = sat_next;

    merge_complex(base, satellite, n1);
    merge_complex(base, satellite, n1 + n2);
    next = n1 + 2 * n2;
    int a = static_cast<int>(rng.below(static_cast<std::uint64_t>(n1)));
    int b = static_cast<int>(rng.below(static_cast<std::uint64_t>(n2)));
    append_fan(base, next, a, n1 + b, fan_len, nullptr);
    append_fan(base, next, a, n1 + n2 + b, fan_len, nullptr);
    base.canonicalize();

    fix_range(inst.map, 0, n1);
    for (int i = 0; i < n2; ++i) {
        inst.map[n1 + i] = n1 + n2 + i;
        inst.map[n1 + n2 + i] = n1 + i;
    }
    inst.complex = base;
    inst.expected = AnalysisOutcome::Kind::CertificateV;
    inst.cell = cell_key(StructureCase::C3, FixedLocus::Kind::Vertex, nullptr);
    return inst;
}

// Identity involution on a generated complex; covers the fixed-vertex cell
// of every case with generator-shaped input.
CellInstance identity_instance(RngStream& rng, const LensSpace& L) {
    CellInstance inst;
    inst.L = L;
    GenConfig cfg;
    cfg.radius = rng.range(1, 2);
    cfg.branching = 2;
    cfg.bridge_length = 2;
    cfg.seed = rng.next();
    inst.complex = generate(L, cfg);
    for (const auto& v : inst.complex.vertices) {
        if (v.primitive) inst.map[v.id] = v.id;
    }
    inst.expected = AnalysisOutcome::Kind::CertificateV;
    inst.cell = cell_key(classify(L), FixedLocus::Kind::Vertex,
                         classify(L) == StructureCase::C2a ? "black" : nullptr);
    return inst;
}

// Extends a black-vertex map to the white vertices of a C2a tree: each white
// follows its source triangle.
void extend_to_whites(const PrimitiveTree& t, VertexMap& map) {
    std::map<std::array<int, 3>, int> white_of;
    for (const auto& [id, src] : t.vertex_source) {
        if (src.kind == VertexSource::Kind::Triangle) white_of[src.triangle] = id;
    }
    for (const auto& [tri, white] : white_of) {
        std::array<int, 3> image{map.at(tri[0]), map.at(tri[1]), map.at(tri[2])};
        std::sort(image.begin(), image.end());
        map[white] = white_of.at(image);
    }
}

} // namespace

std::vector<CellInstance> make_cell_instances(RngStream& rng, int per_cell) {
    std::vector<CellInstance> out;
    for (int i = 0; i < per_cell; ++i) {
        // Swapped-edge cells.
        out.push_back(tree_swap_instance(rng, StructureCase::C1a, EdgeLabel::Type2));
        out.push_back(tree_swap_instance(rng, StructureCase::C1b, EdgeLabel::Type1));
        out.push_back(tree_swap_instance(rng, StructureCase::C1c, EdgeLabel::Type0));
        out.push_back(tree_swap_instance(rng, StructureCase::C1c, EdgeLabel::Type1));
        out.push_back(c2b_instance(rng, true));
        out.push_back(c2c_instance(rng, true));
        out.push_back(c3_bridge_instance(rng));
        out.push_back(c3_edge_instance(rng, EdgeLabel::Type0));
        out.push_back(c3_edge_instance(rng, EdgeLabel::Type1));

        // Fixed-vertex cells.
        out.push_back(tree_fixed_instance(rng, StructureCase::C1a));
        out.push_back(tree_fixed_instance(rng, StructureCase::C1b));
        out.push_back(tree_fixed_instance(rng, StructureCase::C1c));
        out.push_back(c2a_instance(rng, true));
        out.push_back(c2a_instance(rng, false));
        out.push_back(c2b_instance(rng, false));
        out.push_back(c2c_instance(rng, false));
        out.push_back(c3_fixed_instance(rng));
        for (const auto& L : case_representatives()) {
            if (i % 4 == 0) out.push_back(identity_instance(rng, L));
        }
    }
    return out;
}

IntersectionPattern random_pattern(RngStream& rng, int max_components) {
    int total = rng.range(0, max_components);
    int arcs = rng.range(0, total);
    int loops = total - arcs;

    IntersectionPattern p;

    // Non-crossing pairing of positions 0..2m-1, built recursively.
    std::vector<int> mate(static_cast<std::size_t>(2 * arcs), -1);
    std::deque<std::pair<int, int>> ranges;
    if (arcs > 0) ranges.emplace_back(0, 2 * arcs - 1);
    while (!ranges.empty()) {
        auto [lo, hi] = ranges.front();
        ranges.pop_front();
        if (lo >= hi) continue;
        int span = (hi - lo + 1) / 2;
        int j = lo + 1 + 2 * static_cast<int>(rng.below(static_cast<std::uint64_t>(span)));
        mate[static_cast<std::size_t>(lo)] = j;
        mate[static_cast<std::size_t>(j)] = lo;
        if (lo + 1 <= j - 1) ranges.emplace_back(lo + 1, j - 1);
        if (j + 1 <= hi) ranges.emplace_back(j + 1, hi);
    }

    // Endpoint ids are a random relabeling of the positions.
    std::vector<int> ids(static_cast<std::size_t>(2 * arcs));
    std::iota(ids.begin(), ids.end(), 0);
    for (std::size_t i = ids.size(); i > 1; --i) {
        std::swap(ids[i - 1], ids[rng.below(i)]);
    }
    for (int pos = 0; pos < 2 * arcs; ++pos) {
        if (mate[static_cast<std::size_t>(pos)] > pos) {
            p.arcs.emplace_back(ids[static_cast<std::size_t>(pos)],
                                ids[static_cast<std::size_t>(mate[static_cast<std::size_t>(pos)])]);
        }
    }

    p.boundary.assign(ids.begin(), ids.end());
    std::size_t z_at = rng.below(p.boundary.size() + 1);
    p.boundary.insert(p.boundary.begin() + static_cast<std::ptrdiff_t>(z_at),
                      IntersectionPattern::MARKED);
    std::rotate(p.boundary.begin(),
                p.boundary.begin() + static_cast<std::ptrdiff_t>(rng.below(p.boundary.size())),
                p.boundary.end());

    for (int l = 0; l < loops; ++l) {
        Loop loop;
        loop.id = l;
        int choice = static_cast<int>(rng.below(3));
        if (choice == 1 && l > 0) {
            loop.parent = LoopParent{LoopParent::Kind::Loop, rng.range(0, l - 1)};
        } else if (choice == 2 && arcs > 0) {
            loop.parent = LoopParent{LoopParent::Kind::Arc, rng.range(0, arcs - 1)};
        } else {
            loop.parent = LoopParent{LoopParent::Kind::Root, -1};
        }
        p.loops.push_back(loop);
    }
    return p;
}

// ---------------------------------------------------------------------------
// Suites
// ---------------------------------------------------------------------------

SuiteResult verify_classification_grid(const VerifyOptions& options) {
    auto start = Clock::now();
    SuiteResult result{"classification-grid"};
    for (int p = 2; p <= options.pmax; ++p) {
        for (int q = 1; 2 * q <= p; ++q) {
            if (std::gcd(p, q) != 1) continue;
            LensSpace L{p, q};
            OracleVerdict oracle = classify_oracle(L);
            result.expect(oracle.fired == 1, "conditions are not a partition at (" +
                                                 std::to_string(p) + "," + std::to_string(q) +
                                                 "): " + std::to_string(oracle.fired));
            result.expect(classify(L) == oracle.tag,
                          "classify disagrees with the oracle at (" + std::to_string(p) + "," +
                              std::to_string(q) + ")");
        }
    }
    result.seconds = seconds_since(start);
    return result;
}

SuiteResult verify_normalization(const VerifyOptions& options) {
    auto start = Clock::now();
    SuiteResult result{"normalization-homeomorphism"};
    RngStream rng(options.seed, "normalization");

    for (int i = 0; i < options.random_pairs; ++i) {
        int p = rng.range(2, 400);
        long long q = rng.range(-1000000, 1000000);
        long long q0 = ((q % p) + p) % p;
        if (q0 == 0 || std::gcd(static_cast<long long>(p), q0) != 1) {
            --i;
            continue;
        }
        LensSpace L = normalize(p, q);
        result.expect(L.p == p && L.q >= 1 && 2 * L.q <= p &&
                          std::gcd(L.p, L.q) == 1,
                      "normalize broke an invariant");
        LensSpace again = normalize(L.p, L.q);
        result.expect(again == L, "normalize is not idempotent");
        result.expect(are_homeomorphic({p, q}, {L.p, L.q}),
                      "normalize left its own homeomorphism class");
    }

    // Equivalence relation on all coprime representatives with p <= grid_pmax.
    std::vector<std::pair<int, int>> pairs;
    for (int p = 2; p <= options.grid_pmax; ++p) {
        for (int q = 1; q < p; ++q) {
            if (std::gcd(p, q) == 1) pairs.emplace_back(p, q);
        }
    }
    for (const auto& a : pairs) {
        result.expect(are_homeomorphic(a, a), "relation is not reflexive");
    }
    std::map<std::pair<int, int>, LensSpace> normal;
    for (const auto& a : pairs) normal.emplace(a, normalize(a.first, a.second));
    for (const auto& a : pairs) {
        for (const auto& b : pairs) {
            bool r = are_homeomorphic(a, b);
            bool s = are_homeomorphic(b, a);
            if (r != s) result.fail("relation is not symmetric");
            bool via_normal = normal.at(a) == normal.at(b);
            if (r != via_normal) {
                result.fail("congruence test and normal forms disagree at (" +
                            std::to_string(a.first) + "," + std::to_string(a.second) + ") vs (" +
                            std::to_string(b.first) + "," + std::to_string(b.second) + ")");
            }
            ++result.checks;
        }
    }
    // Transitivity, literally, on a smaller slice.
    for (const auto& a : pairs) {
        if (a.first > 15) continue;
        for (const auto& b : pairs) {
            if (b.first != a.first) continue;
            for (const auto& c : pairs) {
                if (c.first != a.first) continue;
                ++result.checks;
                if (are_homeomorphic(a, b) && are_homeomorphic(b, c) &&
                    !are_homeomorphic(a, c)) {
                    result.fail("relation is not transitive");
                }
            }
        }
    }

    result.expect(are_homeomorphic({7, 5}, {7, 2}), "(7,5) and (7,2) should match");
    result.expect(are_homeomorphic({7, 2}, {7, 4}), "(7,2) and (7,4) should match");
    result.expect(!are_homeomorphic({5, 1}, {5, 2}), "(5,1) and (5,2) should differ");
    result.seconds = seconds_since(start);
    return result;
}

SuiteResult verify_generator(const VerifyOptions& options) {
    auto start = Clock::now();
    SuiteResult result{"generator-validity"};
    for (const auto& L : case_representatives()) {
        bool c3 = classify(L) == StructureCase::C3;
        for (int radius = 1; radius <= 4; ++radius) {
            for (int branching = 2; branching <= 4; ++branching) {
                for (int bridge_length : c3 ? std::vector<int>{2, 3} : std::vector<int>{2}) {
                    GenConfig cfg{radius, branching, bridge_length,
                                  options.seed + static_cast<std::uint64_t>(
                                                     radius * 100 + branching * 10 + bridge_length)};
                    LabeledComplex c = generate(L, cfg);
                    Report base = validate(c);
                    result.expect(base.ok(), "validate failed for (" + std::to_string(L.p) + "," +
                                                 std::to_string(L.q) + "): " +
                                                 (base.ok() ? "" : base.violations.front()));
                    Report structure = validate_structure(L, c, cfg);
                    result.expect(structure.ok(),
                                  "validate_structure failed for (" + std::to_string(L.p) + "," +
                                      std::to_string(L.q) + ") r=" + std::to_string(radius) +
                                      " b=" + std::to_string(branching) + ": " +
                                      (structure.ok() ? "" : structure.violations.front()));
                    LabeledComplex again = generate(L, cfg);
                    result.expect(io::to_json(c).dump() == io::to_json(again).dump(),
                                  "generate is not deterministic for (" + std::to_string(L.p) +
                                      "," + std::to_string(L.q) + ")");
                }
            }
        }
    }
    result.seconds = seconds_since(start);
    return result;
}

SuiteResult verify_primitive_trees(const VerifyOptions& options) {
    auto start = Clock::now();
    SuiteResult result{"primitive-trees"};
    for (const auto& L : case_representatives()) {
        StructureCase sc = classify(L);
        bool c3 = sc == StructureCase::C3;
        for (int radius = 1; radius <= 4; ++radius) {
            for (int branching = 2; branching <= 4; ++branching) {
                for (int bridge_length : c3 ? std::vector<int>{2, 3} : std::vector<int>{2}) {
                    GenConfig cfg{radius, branching, bridge_length,
                                  options.seed + static_cast<std::uint64_t>(
                                                     radius * 100 + branching * 10 + bridge_length)};
                    LabeledComplex c = generate(L, cfg);
                    PrimitiveTree t = build_primitive_tree(L, c);
                    Report report = validate_ptree(t);
                    result.expect(report.ok(), "validate_ptree failed for (" +
                                                   std::to_string(L.p) + "," +
                                                   std::to_string(L.q) + "): " +
                                                   (report.ok() ? "" : report.violations.front()));

                    if (sc == StructureCase::C2b || sc == StructureCase::C2c) {
                        std::set<int> complex_ids, tree_ids;
                        for (const auto& v : c.vertices) complex_ids.insert(v.id);
                        for (const auto& v : t.vertices) tree_ids.insert(v.id);
                        result.expect(complex_ids == tree_ids,
                                      "edge deletion must keep the vertex set");
                    }
                    if (sc == StructureCase::C2a) {
                        std::size_t whites = 0;
                        for (const auto& v : t.vertices) {
                            if (v.color == VertexColor::White) ++whites;
                        }
                        result.expect(whites == c.triangles.size(),
                                      "one white vertex per triangle");
                    }
                    if (c3) {
                        std::size_t bridge_edges = 0;
                        for (const auto& e : t.edges) {
                            if (e.label == TreeEdgeLabel::Bridge) {
                                ++bridge_edges;
                                bool matches = false;
                                for (const auto& path : c.bridges) {
                                    int d = path.front(), eid = path.back();
                                    if (std::minmax(d, eid) == std::minmax(e.u, e.v)) {
                                        matches = true;
                                    }
                                }
                                result.expect(matches, "bridge edge endpoints match a corridor");
                            }
                        }
                        result.expect(bridge_edges == c.bridges.size(),
                                      "one bridge edge per stored corridor");
                    }
                    result.expect(t.edges.size() + 1 == t.vertices.size(),
                                  "edge count must be vertex count minus one");
                }
            }
        }
    }
    result.seconds = seconds_since(start);
    return result;
}

SuiteResult verify_fixed_points(const VerifyOptions& options) {
    auto start = Clock::now();
    SuiteResult result{"tree-fixed-points"};
    RngStream rng(options.seed, "fixed-points");

    for (int trial = 0; trial < options.trees; ++trial) {
        TreeInvolution inv = random_involution(rng, options.tree_max_vertices);
        long long order = check_automorphism(inv.tree, inv.map);
        result.expect(order == 1 || order == 2, "constructed map must be an involution");

        auto all = brute_force_fixed(inv.tree, inv.map);
        result.expect(!all.empty(), "every tree involution has a fixed point");

        FixedLocus locus = fixed_point(inv.tree, inv.map);
        result.expect(std::find(all.begin(), all.end(), locus) != all.end(),
                      "fixed_point answer must appear in the exhaustive scan");

        // Locus kind is start-independent: the distance from v to f(v) has
        // constant parity, which a BFS depth labeling certifies in one pass.
        std::map<int, std::vector<int>> adjacency;
        for (const auto& e : inv.tree.edges) {
            adjacency[e.u].push_back(e.v);
            adjacency[e.v].push_back(e.u);
        }
        std::map<int, int> depth;
        int root = inv.tree.vertices.front().id;
        depth[root] = 0;
        std::deque<int> queue{root};
        while (!queue.empty()) {
            int v = queue.front();
            queue.pop_front();
            for (int w : adjacency[v]) {
                if (!depth.count(w)) {
                    depth[w] = depth[v] + 1;
                    queue.push_back(w);
                }
            }
        }
        int parity = -1;
        bool constant = true;
        for (const auto& v : inv.tree.vertices) {
            int par = (depth[v.id] + depth[inv.map.at(v.id)]) % 2;
            if (parity < 0) parity = par;
            constant = constant && par == parity;
        }
        result.expect(constant, "locus kind must not depend on the start vertex");
        result.expect((parity == 0) == (locus.kind == FixedLocus::Kind::Vertex),
                      "midpoint parity must match the locus kind");

        for (int probe = 0; probe < 3; ++probe) {
            int idx = static_cast<int>(rng.below(inv.tree.vertices.size()));
            FixedLocus sampled =
                fixed_point_from(inv.tree, inv.map, inv.tree.vertices[static_cast<std::size_t>(idx)].id);
            result.expect(sampled.kind == locus.kind, "sampled start changed the locus kind");
            result.expect(std::find(all.begin(), all.end(), sampled) != all.end(),
                          "sampled locus must appear in the exhaustive scan");
        }
    }
    result.seconds = seconds_since(start);
    return result;
}

SuiteResult verify_decision_table(const VerifyOptions& options) {
    auto start = Clock::now();
    SuiteResult result{"decision-table"};
    RngStream rng(options.seed, "decision-table");

    auto instances = make_cell_instances(rng, options.per_cell);
    std::map<std::string, std::set<int>> kinds_seen;
    std::map<std::string, int> instance_count;

    for (const auto& inst : instances) {
        Report structure = validate_structure(inst.L, inst.complex);
        result.expect(structure.ok(),
                      "cell " + inst.cell + ": instance complex is invalid: " +
                          (structure.ok() ? "" : structure.violations.front()));
        if (!structure.ok()) continue;

        PrimitiveTree t = build_primitive_tree(inst.L, inst.complex);
        VertexMap map = inst.map;
        if (classify(inst.L) == StructureCase::C2a) extend_to_whites(t, map);

        AnalysisOutcome outcome = analyze(inst.L, t, inst.complex, map);
        ++instance_count[inst.cell];
        kinds_seen[inst.cell].insert(static_cast<int>(outcome.kind));

        result.expect(outcome.kind == inst.expected,
                      "cell " + inst.cell + ": expected " +
                          std::string(outcome_name(inst.expected)) + ", got " +
                          std::string(outcome_name(outcome.kind)));
        if (inst.expected == AnalysisOutcome::Kind::CertificateW) {
            result.expect(outcome.dual_count == inst.expected_dual_count,
                          "cell " + inst.cell + ": dual count mismatch");
        }

        // Contradictions happen exactly on swapped type-0 edges and bridges.
        bool swapped_bad_edge = false;
        if (outcome.locus.kind == FixedLocus::Kind::Edge) {
            auto label = t.edge_label(outcome.locus.u, outcome.locus.v);
            swapped_bad_edge = label.has_value() && (*label == TreeEdgeLabel::Type0 ||
                                                     *label == TreeEdgeLabel::Bridge);
        }
        result.expect((outcome.kind == AnalysisOutcome::Kind::Contradiction) == swapped_bad_edge,
                      "cell " + inst.cell + ": contradiction iff swapped type-0/bridge");

        // Never a contradiction for q = 1 (that includes L(2,1)).
        if (inst.L.q == 1) {
            result.expect(outcome.kind != AnalysisOutcome::Kind::Contradiction,
                          "no contradiction may occur for L(p,1)");
        }
        if (outcome.kind == AnalysisOutcome::Kind::CertificateV) {
            result.expect(map.at(outcome.vertex) == outcome.vertex,
                          "certificate vertex must be fixed by the involution");
        }
    }

    for (const auto& [cell, count] : instance_count) {
        result.expect(count >= options.per_cell,
                      "cell " + cell + " has only " + std::to_string(count) + " instances");
        result.expect(kinds_seen[cell].size() == 1,
                      "cell " + cell + " produced more than one outcome kind");
    }
    result.expect(instance_count.size() == 17,
                  "expected 17 realizable cells, saw " + std::to_string(instance_count.size()));
    result.seconds = seconds_since(start);
    return result;
}

namespace {

// Independent check that removing `arc` is safe: the boundary side of the
// chord without the marked point must hold no other endpoint.
bool arc_removal_safe(const IntersectionPattern& p, std::pair<int, int> arc) {
    std::size_t n = p.boundary.size();
    std::size_t ia = n, ib = n;
    for (std::size_t i = 0; i < n; ++i) {
        if (p.boundary[i] == arc.first) ia = i;
        if (p.boundary[i] == arc.second) ib = i;
    }
    if (ia == n || ib == n) return false;

    auto side_entries = [&](std::size_t from, std::size_t to) {
        std::vector<int> entries;
        for (std::size_t i = (from + 1) % n; i != to; i = (i + 1) % n) {
            entries.push_back(p.boundary[i]);
        }
        return entries;
    };
    for (const auto& side : {side_entries(ia, ib), side_entries(ib, ia)}) {
        bool has_marked = false;
        for (int e : side) has_marked = has_marked || e == IntersectionPattern::MARKED;
        if (!has_marked && side.empty()) return true;
    }
    return false;
}

} // namespace

SuiteResult verify_surgery(const VerifyOptions& options) {
    auto start = Clock::now();
    SuiteResult result{"surgery-reduction"};
    RngStream rng(options.seed, "surgery");

    for (int trial = 0; trial < options.patterns; ++trial) {
        IntersectionPattern p = random_pattern(rng, options.pattern_max_components);
        Report valid = validate_pattern(p);
        result.expect(valid.ok(), "random pattern must be valid: " +
                                      (valid.ok() ? "" : valid.violations.front()));
        int initial = p.component_count();

        ReduceTrace trace = reduce_to_disjoint(p);
        result.expect(static_cast<int>(trace.steps.size()) == initial,
                      "trace length must equal the component count");
        result.expect(trace.initial_components == initial, "trace must record the start size");

        bool arcs_started = false;
        IntersectionPattern current = p;
        for (const auto& step : trace.steps) {
            if (step.kind == ReduceStep::Kind::Arc) {
                arcs_started = true;
                result.expect(current.loops.empty(), "arc step while loops remain");
                result.expect(arc_removal_safe(current, step.endpoints),
                              "removed arc region must be empty and avoid the marked point");
            } else {
                result.expect(!arcs_started, "loop step after an arc step");
                for (const auto& loop : current.loops) {
                    result.expect(!(loop.parent.kind == LoopParent::Kind::Loop &&
                                    loop.parent.id == step.id),
                                  "removed loop still has nested loops");
                }
            }
            IntersectionPattern next = reduce_step(current);
            result.expect(next.component_count() == current.component_count() - 1,
                          "each step removes exactly one component");
            Report ok = validate_pattern(next);
            result.expect(ok.ok(), "intermediate pattern must stay valid");
            int marked = 0;
            for (int e : next.boundary) marked += e == IntersectionPattern::MARKED ? 1 : 0;
            result.expect(marked == 1, "the marked point must survive every step");
            current = next;
        }
        result.expect(current.component_count() == 0, "reduction must end empty");
    }
    result.seconds = seconds_since(start);
    return result;
}

SuiteResult verify_corridors(const VerifyOptions& options) {
    auto start = Clock::now();
    SuiteResult result{"corridors-and-bridges"};
    LensSpace L = normalize(13, 5);
    for (int radius = 1; radius <= 3; ++radius) {
        for (int bridge_length : {2, 3}) {
            GenConfig cfg{radius, 3, bridge_length,
                          options.seed + static_cast<std::uint64_t>(radius * 10 + bridge_length)};
            LabeledComplex c = generate(L, cfg);
            ComplexIndex index(c);

            for (const auto& path : c.bridges) {
                int d = path.front(), e = path.back();
                Corridor cor = corridor(index, d, e);
                result.expect(corridor_vertex_path(c, cor) == path,
                              "corridor must reproduce the stored bridge path");
                result.expect(is_bridge(c, cor), "stored bridges must test as bridges");
                result.expect(static_cast<int>(cor.triangles.size()) == bridge_length,
                              "bridge corridor length must match the configuration");

                Corridor reversed = corridor(index, e, d);
                std::vector<int> forward = cor.triangles;
                std::reverse(forward.begin(), forward.end());
                result.expect(reversed.triangles == forward,
                              "corridor must be symmetric up to reversal");
            }

            for (std::size_t i = 0; i < c.bridges.size(); ++i) {
                for (std::size_t j = i + 1; j < c.bridges.size(); ++j) {
                    std::set<int> a(c.bridges[i].begin(), c.bridges[i].end());
                    std::vector<int> shared;
                    for (int v : c.bridges[j]) {
                        if (a.count(v)) shared.push_back(v);
                    }
                    result.expect(shared.size() <= 1, "bridges share at most one vertex");
                    if (shared.size() == 1) {
                        int v = shared.front();
                        bool end_i = v == c.bridges[i].front() || v == c.bridges[i].back();
                        bool end_j = v == c.bridges[j].front() || v == c.bridges[j].back();
                        result.expect(end_i && end_j,
                                      "a shared bridge vertex must be an endpoint of both");
                    }
                }
            }
        }
    }
    result.seconds = seconds_since(start);
    return result;
}

std::vector<SuiteResult> verify_all(const VerifyOptions& options) {
    return {
        verify_classification_grid(options), verify_normalization(options),
        verify_generator(options),           verify_primitive_trees(options),
        verify_fixed_points(options),        verify_decision_table(options),
        verify_surgery(options),             verify_corridors(options),
    };
}

} // namespace ptlens::verify
