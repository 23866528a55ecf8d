#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "symq/algebra.hpp"
#include "symq/diagram.hpp"

namespace symq {

/// A variable occurrence, optionally passed through ρ. Only edge variables
/// may carry the ρ flag.
struct Term {
    int var = -1;
    bool rho = false;

    bool operator==(const Term&) const = default;
};

enum class RelationKind {
    equal,      ///< target = source
    operation,  ///< target = source ▷ param
    action,     ///< region target = region source · param
};

/// Where a relation came from, for reporting.
enum class RelationOrigin { over_strand, under_strand, vertex, region };

struct Relation {
    RelationKind kind = RelationKind::equal;
    Term target;
    Term source;
    Term param;
    RelationOrigin origin = RelationOrigin::over_strand;
    /// Node index for crossing/vertex relations, edge variable for region relations.
    int site = -1;

    bool operator==(const Relation&) const = default;
};

/// Which orientation of the over strand supplies the operand of the under relation.
enum class OverConvention {
    /// The over strand oriented so that its normal points along the under
    /// strand's direction of travel.
    normal_along_travel,
    /// The opposite orientation (the operand is passed through ρ).
    normal_against_travel,
};

struct ConstraintOptions {
    OverConvention over = OverConvention::normal_along_travel;
    /// Emit region variables and relations. Defaults to on exactly when the
    /// action has more than one element.
    std::optional<bool> regions;
};

/// Variables 0..edge_vars-1 are edge colors in X (labels ascending, then
/// circles); the following face_vars are region colors in Y.
struct ConstraintSystem {
    int edge_vars = 0;
    int face_vars = 0;
    std::vector<Relation> relations;

    int variable_count() const { return edge_vars + face_vars; }
    bool is_edge_var(int v) const { return v < edge_vars; }
};

/// Edge colors are relative to each edge's reference orientation.
struct Coloring {
    std::vector<Element> edge_colors;
    std::vector<Element> region_colors;

    bool operator==(const Coloring&) const = default;
    auto operator<=>(const Coloring&) const = default;
};

/// Emits the coloring relations of a ch-diagram:
///  - over strand:  out(b) = in(d)
///  - under strand: out(c) = in(a) ▷ in(d)   (ρ(in(d)) under the opposite convention)
///  - marked vertex: in(c) = in(a), in(b) = in(d) = ρ(in(a))
///  - region: y_left = y_right · x for every edge (only with regions enabled)
/// where in(h)/out(h) is the color of the edge at slot h oriented into/out of
/// the node, i.e. x or ρ(x) depending on the reference orientation.
ConstraintSystem build_constraints(const ChDiagram& d, const SymmetricQuandle& sq, const QuandleAction& action,
                                   const ConstraintOptions& options = {});

/// Checks every relation against a full assignment.
bool satisfies(const ConstraintSystem& cs, const SymmetricQuandle& sq, const QuandleAction& action,
               const Coloring& c);

/// Visits solutions in lexicographic order; the visitor returns false to stop.
void for_each_solution(const ConstraintSystem& cs, const SymmetricQuandle& sq, const QuandleAction& action,
                       const std::function<bool(const Coloring&)>& visit);

/// Every solution, lexicographic in (variable index, value). Backtracking with
/// propagation over the functional relations.
std::vector<Coloring> solve_all(const ConstraintSystem& cs, const SymmetricQuandle& sq, const QuandleAction& action);

std::uint64_t count_solutions(const ConstraintSystem& cs, const SymmetricQuandle& sq, const QuandleAction& action);

/// Default ceiling on |X|^edges · |Y|^faces for brute_force_all.
inline constexpr double default_brute_force_cap = 1.0e13;

/// Exhaustive enumeration of the product space in lexicographic order. A
/// relation is tested as soon as all of its variables are set, which prunes
/// but never skips a candidate that satisfies every relation. Throws
/// CapExceeded when the nominal space is larger than `cap`.
std::vector<Coloring> brute_force_all(const ConstraintSystem& cs, const SymmetricQuandle& sq,
                                      const QuandleAction& action, double cap = default_brute_force_cap);

std::uint64_t count_colorings(const ChDiagram& d, const SymmetricQuandle& sq, const QuandleAction& action,
                              const ConstraintOptions& options = {});

/// True iff every edge carries the same element a and ρ(a) = a.
bool is_monochromatic_fixed_point(const Coloring& c, const SymmetricQuandle& sq);

/// First solution that is not monochromatic at a fixed point, if any.
std::optional<Coloring> find_nontrivial_coloring(const ChDiagram& d, const SymmetricQuandle& sq,
                                                 const QuandleAction& action);

std::string to_string(RelationOrigin o);

}  // namespace symq
