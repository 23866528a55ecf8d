#pragma once

#include <string>
#include <vector>

#include "symq/diagram.hpp"

namespace symq {

enum class MoveKind {
    r1_remove,  ///< args: crossing index
    r2_remove,  ///< args: crossing indices i < j bounding the bigon
    r3,         ///< args: node, slot of one dart of the triangular face
    r2_create,  ///< args: node, slot of dart e; node, slot of dart f; 1 if e passes over
};

/// A Reidemeister move addressed against the diagram it is applied to.
/// Applying the same move to the same diagram is deterministic, so a trace
/// can be replayed from the original diagram.
struct Move {
    MoveKind kind;
    std::vector<int> args;

    bool operator==(const Move&) const = default;
};

std::string describe(const Move& m);

/// Applies a move; throws InvalidArgument if its preconditions do not hold.
LinkDiagram apply_move(const LinkDiagram& l, const Move& m);

/// All moves of one kind available on a diagram, in a deterministic order.
std::vector<Move> r1_removals(const LinkDiagram& l);
std::vector<Move> r2_removals(const LinkDiagram& l);
std::vector<Move> r3_moves(const LinkDiagram& l);
std::vector<Move> r2_creations(const LinkDiagram& l);

enum class UnlinkVerdict { unlink, not_unlink, unknown };

std::string to_string(UnlinkVerdict v);

struct SimplificationResult {
    UnlinkVerdict verdict = UnlinkVerdict::unknown;
    /// Moves leading from the input to the final diagram found.
    std::vector<Move> trace;
    /// Number of moves applied or explored.
    long budget_used = 0;
    int components = 0;
    /// Fox 3-coloring count of the input; a certificate when ≠ 3^components.
    long long fox3_count = 0;
    long long fox3_unlink_count = 0;
    int final_crossings = 0;
};

/// Three-valued unlink test: greedy R1/R2 reductions, then a breadth-first
/// search over R3 moves and R2 creations (at most two crossings above the
/// current best) limited to `budget` explored moves. `not_unlink` is only
/// returned with a Fox 3-coloring certificate.
SimplificationResult is_unlink(const LinkDiagram& l, long budget);

enum class Admissibility { yes, no, unknown };

std::string to_string(Admissibility a);

struct AdmissibilityResult {
    SimplificationResult minus;
    SimplificationResult plus;
    Admissibility admissible = Admissibility::unknown;
};

AdmissibilityResult is_admissible(const ChDiagram& d, long budget);

/// Replays a trace; used to audit unlink verdicts.
LinkDiagram replay(const LinkDiagram& l, const std::vector<Move>& trace);

/// A relabeling-independent key for a link diagram.
std::string canonical_key(const LinkDiagram& l);

}  // namespace symq
