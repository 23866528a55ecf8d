#include "symq/concordance.hpp"

#include "symq/coloring.hpp"

namespace symq {

std::string to_string(ObstructionMethod m) { return m == ObstructionMethod::coloring ? "coloring" : "cocycle"; }

std::string to_string(ObstructionVerdict v)
{
    return v == ObstructionVerdict::obstructed ? "obstructed" : "not_obstructed";
}

namespace {

struct CountSummary {
    std::uint64_t count = 0;
    bool only_trivial = true;
};

CountSummary summarize(const ChDiagram& d, const SymmetricQuandle& sq, const QuandleAction& action)
{
    CountSummary s;
    for_each_solution(build_constraints(d, sq, action), sq, action, [&](const Coloring& c) {
        ++s.count;
        if (!is_monochromatic_fixed_point(c, sq))
            s.only_trivial = false;
        return true;
    });
    if (s.count == 0)
        s.only_trivial = false;
    return s;
}

}  // namespace

ObstructionReport coloring_obstruction(const ChDiagram& d1, const ChDiagram& d0, const SymmetricQuandle& sq,
                                       const QuandleAction& action)
{
    ObstructionReport r;
    r.upper = d1.name();
    r.lower = d0.name();
    r.method = ObstructionMethod::coloring;
    const auto s1 = summarize(d1, sq, action);
    const auto s0 = summarize(d0, sq, action);
    r.upper_count = s1.count;
    r.lower_count = s0.count;
    r.upper_only_trivial = s1.only_trivial;
    r.lower_only_trivial = s0.only_trivial;
    if (s1.count > 0 && s0.count == 0) {
        r.verdict = ObstructionVerdict::obstructed;
        r.note = "upper is colorable and lower is not, so upper does not dominate lower";
    }
    else {
        r.verdict = ObstructionVerdict::not_obstructed;
        r.note = s1.count == 0 ? "upper has no colorings; the test is vacuous"
                               : "lower is colorable; no obstruction, and nothing is proved";
    }
    if (s1.only_trivial)
        r.note += "; upper colorings are all monochromatic at fixed points";
    return r;
}

ObstructionReport cocycle_obstruction(const WeightMultiset& phi1, const WeightMultiset& phi0)
{
    ObstructionReport r;
    r.method = ObstructionMethod::cocycle;
    r.excess_value = excess_value(phi1, phi0);
    if (r.excess_value) {
        r.verdict = ObstructionVerdict::obstructed;
        r.upper_multiplicity = phi1.multiplicity(*r.excess_value);
        r.lower_multiplicity = phi0.multiplicity(*r.excess_value);
        r.note = "weight " + std::to_string(*r.excess_value) + " occurs " + std::to_string(r.upper_multiplicity)
                 + " times upstairs but " + std::to_string(r.lower_multiplicity) + " times downstairs";
    }
    else {
        r.verdict = ObstructionVerdict::not_obstructed;
        r.note = "upper multiset is contained in lower; no obstruction, and nothing is proved";
    }
    return r;
}

KinoshitaReport kinoshita_check(const SymmetricQuandle& sq)
{
    KinoshitaReport r;
    r.fixed_points = fixed_points(sq.involution);
    r.fixed_point_free = r.fixed_points.empty();
    r.advisory = r.fixed_point_free
                     ? "involution has no fixed points: a surface-link with a projective-plane component admits no "
                       "coloring by this symmetric quandle"
                     : "involution has fixed points: no conclusion about projective-plane components";
    return r;
}

}  // namespace symq
