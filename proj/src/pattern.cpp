#include "ptlens/pattern.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <string>

#include "ptlens/error.hpp"

namespace ptlens {
namespace {

// Boundary positions in the linear order obtained by cutting the circle at
// the marked point. Key: endpoint id, value: position.
std::map<int, int> cut_positions(const IntersectionPattern& p) {
    std::map<int, int> pos;
    std::size_t n = p.boundary.size();
    std::size_t start = 0;
    for (std::size_t i = 0; i < n; ++i) {
        if (p.boundary[i] == IntersectionPattern::MARKED) start = i;
    }
    int counter = 0;
    for (std::size_t k = 1; k <= n; ++k) {
        int entry = p.boundary[(start + k) % n];
        if (entry != IntersectionPattern::MARKED) pos[entry] = counter++;
    }
    return pos;
}

// Chord intervals in cut order, indexed like p.arcs.
std::vector<std::pair<int, int>> chord_intervals(const IntersectionPattern& p,
                                                 const std::map<int, int>& pos) {
    std::vector<std::pair<int, int>> intervals;
    intervals.reserve(p.arcs.size());
    for (const auto& [a, b] : p.arcs) {
        int pa = pos.at(a), pb = pos.at(b);
        intervals.emplace_back(std::min(pa, pb), std::max(pa, pb));
    }
    return intervals;
}

} // namespace

Report validate_pattern(const IntersectionPattern& p) {
    Report report;

    int marked = 0;
    std::set<int> endpoints;
    for (int entry : p.boundary) {
        if (entry == IntersectionPattern::MARKED) {
            ++marked;
        } else if (entry < 0) {
            report.add("negative endpoint id " + std::to_string(entry));
        } else if (!endpoints.insert(entry).second) {
            report.add("duplicate boundary endpoint " + std::to_string(entry));
        }
    }
    if (marked != 1) {
        report.add("pattern must carry exactly one marked point, found " +
                   std::to_string(marked));
    }

    std::set<int> paired;
    for (const auto& [a, b] : p.arcs) {
        if (a == b) {
            report.add("arc pairs endpoint " + std::to_string(a) + " with itself");
            continue;
        }
        for (int e : {a, b}) {
            if (!endpoints.count(e)) {
                report.add("arc endpoint " + std::to_string(e) + " is not on the boundary");
            } else if (!paired.insert(e).second) {
                report.add("endpoint " + std::to_string(e) + " belongs to two arcs");
            }
        }
    }
    for (int e : endpoints) {
        if (!paired.count(e)) {
            report.add("endpoint " + std::to_string(e) + " belongs to no arc");
        }
    }
    if (!report.ok()) return report; // geometric checks need a sane base

    // Non-crossing: scan the cut order with a stack of open chords.
    auto pos = cut_positions(p);
    std::vector<int> arc_at(pos.size(), -1);
    for (std::size_t i = 0; i < p.arcs.size(); ++i) {
        arc_at[static_cast<std::size_t>(pos.at(p.arcs[i].first))] = static_cast<int>(i);
        arc_at[static_cast<std::size_t>(pos.at(p.arcs[i].second))] = static_cast<int>(i);
    }
    auto intervals = chord_intervals(p, pos);
    std::vector<int> stack;
    for (std::size_t position = 0; position < arc_at.size(); ++position) {
        int arc = arc_at[position];
        if (arc < 0) continue;
        if (static_cast<int>(position) == intervals[static_cast<std::size_t>(arc)].first) {
            stack.push_back(arc);
        } else {
            if (stack.empty() || stack.back() != arc) {
                report.add("arcs cross: chord " + std::to_string(arc) +
                           " closes out of nesting order");
                break;
            }
            stack.pop_back();
        }
    }

    // Loop forest: unique ids, parents existing, no parent cycles.
    std::map<int, const Loop*> by_id;
    for (const auto& loop : p.loops) {
        if (!by_id.emplace(loop.id, &loop).second) {
            report.add("duplicate loop id " + std::to_string(loop.id));
        }
    }
    for (const auto& loop : p.loops) {
        if (loop.parent.kind == LoopParent::Kind::Loop) {
            if (!by_id.count(loop.parent.id)) {
                report.add("loop " + std::to_string(loop.id) + " nests in missing loop " +
                           std::to_string(loop.parent.id));
            }
        } else if (loop.parent.kind == LoopParent::Kind::Arc) {
            if (loop.parent.id < 0 || loop.parent.id >= static_cast<int>(p.arcs.size())) {
                report.add("loop " + std::to_string(loop.id) + " sits in missing arc face " +
                           std::to_string(loop.parent.id));
            }
        }
    }
    for (const auto& loop : p.loops) {
        std::set<int> seen{loop.id};
        const Loop* cur = &loop;
        while (cur->parent.kind == LoopParent::Kind::Loop) {
            auto it = by_id.find(cur->parent.id);
            if (it == by_id.end()) break;
            if (!seen.insert(it->first).second) {
                report.add("loop nesting contains a cycle through loop " +
                           std::to_string(loop.id));
                break;
            }
            cur = it->second;
        }
    }
    return report;
}

std::optional<int> innermost_loop(const IntersectionPattern& p) {
    if (p.loops.empty()) return std::nullopt;
    std::set<int> parents;
    for (const auto& loop : p.loops) {
        if (loop.parent.kind == LoopParent::Kind::Loop) parents.insert(loop.parent.id);
    }
    std::optional<int> best;
    for (const auto& loop : p.loops) {
        if (parents.count(loop.id)) continue; // something nests inside
        if (!best || loop.id < *best) best = loop.id;
    }
    return best;
}

int outermost_arc_avoiding(const IntersectionPattern& p) {
    if (!p.loops.empty()) {
        throw Error("PreconditionLoops", "arc surgery requires a loop-free pattern");
    }
    if (p.arcs.empty()) {
        throw Error("EmptyPattern", "no arc to remove");
    }

    auto pos = cut_positions(p);
    auto intervals = chord_intervals(p, pos);

    // A chord is usable when the boundary run between its endpoints on the
    // side away from the marked point carries no other endpoint. Cutting at
    // the marked point makes that run exactly the interval interior (which
    // never holds the marked point), and since every position is some arc's
    // endpoint, emptiness means the two positions are adjacent.
    for (std::size_t i = 0; i < intervals.size(); ++i) {
        if (intervals[i].second - intervals[i].first == 1) return static_cast<int>(i);
    }
    throw Error("CrossingArcs", "no admissible outermost arc; the pattern is not non-crossing");
}

IntersectionPattern reduce_step(const IntersectionPattern& p) {
    IntersectionPattern next = p;
    if (auto loop = innermost_loop(p)) {
        next.loops.erase(std::remove_if(next.loops.begin(), next.loops.end(),
                                        [&](const Loop& l) { return l.id == *loop; }),
                         next.loops.end());
        return next;
    }
    if (p.arcs.empty()) {
        throw Error("EmptyPattern", "nothing left to remove");
    }
    int arc = outermost_arc_avoiding(p);
    auto [a, b] = p.arcs[static_cast<std::size_t>(arc)];
    next.arcs.erase(next.arcs.begin() + arc);
    next.boundary.erase(std::remove_if(next.boundary.begin(), next.boundary.end(),
                                       [&](int e) { return e == a || e == b; }),
                        next.boundary.end());
    return next;
}

ReduceTrace reduce_to_disjoint(const IntersectionPattern& p) {
    ReduceTrace trace;
    trace.initial_components = p.component_count();
    IntersectionPattern current = p;
    while (current.component_count() > 0) {
        ReduceStep step;
        if (auto loop = innermost_loop(current)) {
            step.kind = ReduceStep::Kind::Loop;
            step.id = *loop;
        } else {
            step.kind = ReduceStep::Kind::Arc;
            step.id = outermost_arc_avoiding(current);
            step.endpoints = current.arcs[static_cast<std::size_t>(step.id)];
        }
        trace.steps.push_back(step);
        current = reduce_step(current);
    }
    return trace;
}

} // namespace ptlens
