#pragma once

#include <memory>
#include <optional>
#include <string>
#include <string_view>

#include "certidom/graph.hpp"

namespace certidom {

/// Named graph family, possibly stacked (corona of a family, diadem of a
/// corona). Text syntax: "path:5", "cycle:8", "complete:4", "star:6",
/// "kbip:2,3", "joink2:5", "joink2bar:5", "corona:path:3",
/// "simplediadem:corona:complete:2", "diadem:corona:complete:2".
struct FamilySpec {
    enum class Kind {
        Path,
        Cycle,
        Complete,
        Star,
        CompleteBipartite,
        JoinK2,
        JoinK2bar,
        CoronaOf,
        SimpleDiademOf,
        DiademOf,
    };

    Kind kind = Kind::Path;
    int a = 0;  // n, or m for kbip
    int b = 0;  // n for kbip
    std::shared_ptr<const FamilySpec> base;  // corona/diadem kinds

    static FamilySpec parse(std::string_view text);  // throws ParseError
    std::string to_string() const;
};

/// Deterministic construction:
///   Path/Cycle: vertices 0..n-1 along the path/cycle.
///   Complete(n): all pairs. Star(n) = K_{1,n}: center 0, leaves 1..n.
///   CompleteBipartite(m,n): parts 0..m-1 and m..m+n-1.
///   JoinK2 / JoinK2bar (order n >= 3): cover pair {0,1} (adjacent for
///     JoinK2), independent remainder 2..n-1 joined to both.
///   CoronaOf(H): base vertices keep H's ids, pendant of v at |H|+v.
///   SimpleDiademOf(corona): new vertex joined to the corona's first support.
///   DiademOf(corona): new vertex joined to the corona's first leaf and that
///     leaf's neighbor.
/// Throws std::invalid_argument on out-of-range parameters.
Graph build_family(const FamilySpec& spec);

/// Closed-form invariant values where the literature states them, with their
/// guards; fields are absent when no formula applies.
struct ExpectedInvariants {
    std::optional<int> gamma;
    std::optional<int> gamma_cer;
    std::optional<int> upper_gamma;
    std::optional<int> upper_gamma_cer;
};
ExpectedInvariants expected_invariants(const FamilySpec& spec);

}  // namespace certidom
