#include "ptlens/automorphism.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>
#include <string>

#include "ptlens/error.hpp"

namespace ptlens {
namespace {

std::string vpair(int u, int v) {
    return "{" + std::to_string(u) + "," + std::to_string(v) + "}";
}

int image_of(const VertexMap& f, int v) {
    auto it = f.find(v);
    if (it == f.end()) {
        throw Error("NotBijective", "map is not total: no image for vertex " + std::to_string(v));
    }
    return it->second;
}

} // namespace

long long check_automorphism(const PrimitiveTree& t, const VertexMap& f) {
    std::map<int, VertexColor> colors;
    for (const auto& v : t.vertices) colors.emplace(v.id, v.color);

    std::set<int> image;
    for (const auto& v : t.vertices) {
        int w = image_of(f, v.id);
        auto target = colors.find(w);
        if (target == colors.end()) {
            throw Error("NotBijective", "image " + std::to_string(w) + " of vertex " +
                                            std::to_string(v.id) + " is not a vertex");
        }
        if (!image.insert(w).second) {
            throw Error("NotBijective", "vertex " + std::to_string(w) + " has two preimages");
        }
        if (target->second != v.color) {
            throw Error("LabelViolation", "vertex " + std::to_string(v.id) +
                                              " changes color under the map");
        }
    }

    std::map<std::pair<int, int>, TreeEdgeLabel> labels;
    for (const auto& e : t.edges) labels.emplace(std::pair(e.u, e.v), e.label);
    for (const auto& e : t.edges) {
        int fu = image_of(f, e.u);
        int fv = image_of(f, e.v);
        if (fu > fv) std::swap(fu, fv);
        auto it = labels.find({fu, fv});
        if (it == labels.end()) {
            throw Error("NotAdjacencyPreserving",
                        "edge " + vpair(e.u, e.v) + " maps to non-edge " + vpair(fu, fv));
        }
        if (it->second != e.label) {
            throw Error("LabelViolation", "edge " + vpair(e.u, e.v) + " of label " +
                                              std::string(tree_label_name(e.label)) +
                                              " maps onto a " +
                                              std::string(tree_label_name(it->second)) + " edge");
        }
    }

    // Order = lcm of the cycle lengths.
    long long order = 1;
    std::set<int> visited;
    for (const auto& v : t.vertices) {
        if (visited.count(v.id)) continue;
        long long len = 0;
        int cur = v.id;
        do {
            visited.insert(cur);
            cur = f.at(cur);
            ++len;
        } while (cur != v.id);
        long long g = std::gcd(order, len);
        if (order / g > (1ll << 62) / len) {
            throw Error("OrderOverflow", "automorphism order exceeds the 64-bit range");
        }
        order = order / g * len;
    }
    return order;
}

FixedLocus fixed_point_from(const PrimitiveTree& t, const VertexMap& f, int start) {
    int target = image_of(f, start);
    if (target == start) {
        return FixedLocus{FixedLocus::Kind::Vertex, start, -1, -1};
    }

    // BFS for the unique path start -> f(start).
    std::map<int, std::vector<int>> adjacency;
    for (const auto& e : t.edges) {
        adjacency[e.u].push_back(e.v);
        adjacency[e.v].push_back(e.u);
    }
    std::map<int, int> parent;
    parent[start] = start;
    std::deque<int> queue{start};
    while (!queue.empty() && !parent.count(target)) {
        int cur = queue.front();
        queue.pop_front();
        for (int next : adjacency[cur]) {
            if (!parent.count(next)) {
                parent[next] = cur;
                queue.push_back(next);
            }
        }
    }
    if (!parent.count(target)) {
        throw Error("NotATree", "no path from " + std::to_string(start) + " to its image");
    }

    std::vector<int> path;
    for (int cur = target; cur != start; cur = parent[cur]) path.push_back(cur);
    path.push_back(start);
    std::reverse(path.begin(), path.end());

    std::size_t len = path.size() - 1; // edges on the path
    if (len % 2 == 0) {
        return FixedLocus{FixedLocus::Kind::Vertex, path[len / 2], -1, -1};
    }
    int a = path[(len - 1) / 2];
    int b = path[(len + 1) / 2];
    return FixedLocus{FixedLocus::Kind::Edge, -1, std::min(a, b), std::max(a, b)};
}

FixedLocus fixed_point(const PrimitiveTree& t, const VertexMap& f) {
    long long order = check_automorphism(t, f);
    if (order > 2) {
        throw Error("UnsupportedOrder",
                    "fixed_point handles orders 1 and 2, got " + std::to_string(order));
    }
    if (t.vertices.empty()) {
        throw Error("NotATree", "empty tree has no fixed point");
    }
    int start = t.vertices.front().id;
    for (const auto& v : t.vertices) start = std::min(start, v.id);
    return fixed_point_from(t, f, start);
}

std::vector<FixedLocus> brute_force_fixed(const PrimitiveTree& t, const VertexMap& f) {
    std::vector<FixedLocus> out;
    for (const auto& v : t.vertices) {
        auto it = f.find(v.id);
        if (it != f.end() && it->second == v.id) {
            out.push_back(FixedLocus{FixedLocus::Kind::Vertex, v.id, -1, -1});
        }
    }
    for (const auto& e : t.edges) {
        auto iu = f.find(e.u);
        auto iv = f.find(e.v);
        if (iu != f.end() && iv != f.end() && iu->second == e.v && iv->second == e.u) {
            out.push_back(FixedLocus{FixedLocus::Kind::Edge, -1, e.u, e.v});
        }
    }
    return out;
}

} // namespace ptlens
