#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "ptlens/report.hpp"

namespace ptlens {

// Combinatorial model of the intersection of a disk with its image under the
// involution: a disk whose boundary circle carries 2m arc endpoints plus one
// marked point, m pairwise non-crossing chords, and a forest of nested loops
// in the interior. Each loop sits either in the face directly under a chord,
// inside another loop, or in the root face.
struct LoopParent {
    enum class Kind { Root, Loop, Arc };
    Kind kind = Kind::Root;
    int id = -1; // loop id or arc index

    friend bool operator==(const LoopParent&, const LoopParent&) = default;
};

struct Loop {
    int id = 0;
    LoopParent parent;

    friend bool operator==(const Loop&, const Loop&) = default;
};

struct IntersectionPattern {
    // Marker for the distinguished boundary point in `boundary`.
    static constexpr int MARKED = -1;

    // Cyclic order around the disk: arc-endpoint ids plus exactly one MARKED.
    std::vector<int> boundary;
    std::vector<std::pair<int, int>> arcs; // chords, identified by index
    std::vector<Loop> loops;

    int component_count() const {
        return static_cast<int>(arcs.size() + loops.size());
    }

    friend bool operator==(const IntersectionPattern&, const IntersectionPattern&) = default;
};

// All pattern invariants: exactly one marked point, endpoints distinct and
// perfectly paired by the chords, chords pairwise non-crossing in the cyclic
// order, loop parents existing and acyclic.
Report validate_pattern(const IntersectionPattern& p);

// A loop enclosing no other component (a leaf of the nesting forest), lowest
// id first; nullopt iff the pattern has no loops.
std::optional<int> innermost_loop(const IntersectionPattern& p);

// A chord cutting off a region with no other component and without the
// marked point. The region away from the marked point of any nesting-leaf
// chord qualifies, so a choice always exists. Lowest arc index first.
//
// Throws Error("PreconditionLoops") while loops remain and
// Error("EmptyPattern") if there is no arc.
int outermost_arc_avoiding(const IntersectionPattern& p);

// Removes the component selected by innermost_loop, or by
// outermost_arc_avoiding once no loops remain. Exactly one component fewer;
// the marked point survives. Throws Error("EmptyPattern") on an empty
// pattern.
IntersectionPattern reduce_step(const IntersectionPattern& p);

struct ReduceStep {
    enum class Kind { Loop, Arc };
    Kind kind = Kind::Loop;
    int id = -1;                          // loop id, or arc index at removal time
    std::pair<int, int> endpoints{-1, -1}; // arc steps only
};

struct ReduceTrace {
    int initial_components = 0;
    std::vector<ReduceStep> steps;
};

// Iterates reduce_step to the empty pattern. The trace has exactly
// initial_components steps, loop steps first.
ReduceTrace reduce_to_disjoint(const IntersectionPattern& p);

} // namespace ptlens
