#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "symq/algebra.hpp"
#include "symq/diagram.hpp"
#include "symq/invariant.hpp"

namespace symq {

enum class ObstructionMethod { coloring, cocycle };
enum class ObstructionVerdict { obstructed, not_obstructed };

std::string to_string(ObstructionMethod m);
std::string to_string(ObstructionVerdict v);

/// Outcome of testing a candidate relation F1 ≻ F0. A negative result never
/// certifies that the relation holds.
struct ObstructionReport {
    std::string upper;  ///< F1
    std::string lower;  ///< F0
    ObstructionMethod method = ObstructionMethod::coloring;
    ObstructionVerdict verdict = ObstructionVerdict::not_obstructed;

    // coloring method
    std::uint64_t upper_count = 0;
    std::uint64_t lower_count = 0;
    /// Every coloring of that side is monochromatic at a fixed point.
    bool upper_only_trivial = false;
    bool lower_only_trivial = false;

    // cocycle method
    std::optional<Coefficient> excess_value;
    std::size_t upper_multiplicity = 0;
    std::size_t lower_multiplicity = 0;

    std::string note;

    bool obstructed() const { return verdict == ObstructionVerdict::obstructed; }
};

/// Obstructed iff d1 has a coloring and d0 has none.
ObstructionReport coloring_obstruction(const ChDiagram& d1, const ChDiagram& d0, const SymmetricQuandle& sq,
                                       const QuandleAction& action);

/// Obstructed iff phi1 is not contained in phi0 as a multiset.
ObstructionReport cocycle_obstruction(const WeightMultiset& phi1, const WeightMultiset& phi0);

struct KinoshitaReport {
    std::vector<Element> fixed_points;
    bool fixed_point_free = false;
    std::string advisory;
};

/// Fixed points of ρ, with the consequence for projective-plane components
/// spelled out when there are none.
KinoshitaReport kinoshita_check(const SymmetricQuandle& sq);

}  // namespace symq
