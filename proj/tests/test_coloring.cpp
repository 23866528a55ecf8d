#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "symq/catalog.hpp"
#include "symq/coloring.hpp"

using namespace symq;

namespace {

SymmetricQuandle dihedral(int n, bool antipodal)
{
    return make_symmetric_quandle(make_dihedral(n), antipodal ? make_antipodal(n) : GoodInvolution::identity(n));
}

std::uint64_t count(const ChDiagram& d, const SymmetricQuandle& sq, const ConstraintOptions& o = {})
{
    return count_colorings(d, sq, make_trivial_action(sq), o);
}

const char* trefoil = "X 1 5 2 4\nX 3 1 4 6\nX 5 3 6 2\n";

}  // namespace

TEST_CASE("circle")
{
    const auto d = parse_chd("circle\n");
    const auto sq = dihedral(4, true);
    const auto cs = build_constraints(d, sq, make_trivial_action(sq));
    CHECK(cs.relations.empty());
    CHECK(cs.variable_count() == 1);
    CHECK(count(d, sq) == 4);
    CHECK(brute_force_all(cs, sq, make_trivial_action(sq)) == solve_all(cs, sq, make_trivial_action(sq)));
}

TEST_CASE("trefoil under R3 follows the Fox rule")
{
    const auto d = parse_chd(trefoil);
    const auto sq = dihedral(3, false);
    const auto act = make_trivial_action(sq);
    const auto cs = build_constraints(d, sq, act);
    CHECK(count(d, sq) == 9);
    CHECK(count(d, sq) == oracle::fox_count(d, 3));
    const auto all = solve_all(cs, sq, act);
    CHECK(all == brute_force_all(cs, sq, act));
    CHECK(std::is_sorted(all.begin(), all.end()));
    // every operation relation is 2y - a for R3
    for (const auto& r : cs.relations)
        if (r.kind == RelationKind::operation)
            for (int a = 0; a < 3; ++a)
                for (int y = 0; y < 3; ++y)
                    CHECK(sq.op(a, y) == ((2 * y - a) % 3 + 3) % 3);
}

TEST_CASE("counts agree with the slot-level oracle")
{
    for (const auto& e : catalog::entries()) {
        const auto d = catalog::load(e.name);
        for (auto [n, anti] : {std::pair{3, false}, {4, false}, {4, true}, {5, false}, {6, true}, {8, true}}) {
            CAPTURE(e.name);
            CAPTURE(n);
            CAPTURE(anti);
            CHECK(count(d, dihedral(n, anti)) == oracle::dihedral_count(d, n, anti));
        }
    }
    // a vertex diagram small enough for a bare sweep
    const auto fig8 = parse_chd("V 1 1 2 2\n");
    CHECK(count(fig8, dihedral(4, true)) == oracle::dihedral_count(fig8, 4, true));
}

TEST_CASE("trivial quandle colors each surface component independently")
{
    for (const auto& e : catalog::entries()) {
        const auto d = catalog::load(e.name);
        if (d.has_vertices()) {
            const auto sq = make_symmetric_quandle(make_trivial_quandle(3), GoodInvolution::identity(3));
            std::uint64_t expected = 1;
            for (std::size_t i = 0; i < surface_components(d).size(); ++i)
                expected *= 3;
            CAPTURE(e.name);
            CHECK(count(d, sq) == expected);
        }
    }
}

TEST_CASE("solver matches the brute-force oracle on small quandles")
{
    std::vector<SymmetricQuandle> qs;
    for (int n = 3; n <= 4; ++n)
        for (const auto& rho : enumerate_good_involutions(make_dihedral(n)))
            qs.push_back(make_symmetric_quandle(make_dihedral(n), rho));
    qs.push_back(make_symmetric_quandle(make_trivial_quandle(2), GoodInvolution({1, 0})));
    for (const auto& e : catalog::entries()) {
        if (e.ch_index > 8)
            continue;  // the acceptance suite covers the rest
        const auto d = catalog::load(e.name);
        for (const auto& sq : qs) {
            const auto act = make_trivial_action(sq);
            const auto cs = build_constraints(d, sq, act);
            CAPTURE(e.name);
            CHECK(solve_all(cs, sq, act) == brute_force_all(cs, sq, act));
        }
    }
}

TEST_CASE("relabeling and orientation flips")
{
    std::mt19937 rng(7);
    for (const auto& name : {"trefoil", "2_1^{-1}", "8_1^{-1,-1}"}) {
        const auto d = catalog::load(name);
        for (auto [n, anti] : {std::pair{3, false}, {4, true}, {6, true}}) {
            const auto sq = dihedral(n, anti);
            const auto act = make_trivial_action(sq);
            const auto base = solve_all(build_constraints(d, sq, act), sq, act);

            std::vector<EdgeLabel> perm = d.labels();
            std::shuffle(perm.begin(), perm.end(), rng);
            std::vector<std::pair<EdgeLabel, EdgeLabel>> mapping;
            for (std::size_t i = 0; i < perm.size(); ++i)
                mapping.push_back({d.labels()[i], perm[i] + 100});
            CHECK(count(d.relabeled(mapping), sq) == base.size());

            for (int trial = 0; trial < 5; ++trial) {
                const EdgeLabel flip = d.labels()[rng() % d.labels().size()];
                const std::size_t idx = d.index_of(flip);
                const auto f = d.with_reversed_edge(flip);
                auto flipped = solve_all(build_constraints(f, sq, act), sq, act);
                // bijection: apply ρ to the flipped edge
                auto mapped = base;
                for (auto& c : mapped)
                    c.edge_colors[idx] = sq.rho(c.edge_colors[idx]);
                std::sort(mapped.begin(), mapped.end());
                CHECK(flipped == mapped);
            }
        }
    }
}

TEST_CASE("over convention is invisible for antipodal R4")
{
    ConstraintOptions against;
    against.over = OverConvention::normal_against_travel;
    for (const auto& e : catalog::entries()) {
        const auto d = catalog::load(e.name);
        CAPTURE(e.name);
        CHECK(count(d, dihedral(4, true)) == count(d, dihedral(4, true), against));
    }
    // the toggle does reach the relations
    const auto sq = dihedral(6, true);
    const auto t = parse_chd(trefoil);
    CHECK_FALSE(build_constraints(t, sq, make_trivial_action(sq)).relations ==
                build_constraints(t, sq, make_trivial_action(sq), against).relations);
}

TEST_CASE("monochromatic fixed points")
{
    const auto id3 = dihedral(3, false);
    const auto anti4 = dihedral(4, true);
    CHECK(is_monochromatic_fixed_point(Coloring{{0, 0, 0}, {}}, id3));
    CHECK_FALSE(is_monochromatic_fixed_point(Coloring{{0, 0, 0}, {}}, anti4));
    CHECK_FALSE(is_monochromatic_fixed_point(Coloring{{0, 1, 0}, {}}, id3));

    // unknotted projective planes: only monochromatic under R3, nothing under antipodal R4
    for (const auto& name : {"2_1^{-1}", "2_1^{-1}*"}) {
        const auto d = catalog::load(name);
        CHECK(count(d, anti4) == 0);
        CHECK(count(d, id3) == 3);
        CHECK_FALSE(find_nontrivial_coloring(d, id3, make_trivial_action(id3)).has_value());
    }
    const auto w = find_nontrivial_coloring(catalog::load("8_1^{-1,-1}"), anti4, make_trivial_action(anti4));
    REQUIRE(w.has_value());
    CHECK_FALSE(is_monochromatic_fixed_point(*w, anti4));
}

TEST_CASE("brute force refuses oversized spaces")
{
    const auto sq = dihedral(4, true);
    const auto act = make_trivial_action(sq);
    const auto cs = build_constraints(parse_chd(trefoil), sq, act);
    CHECK_THROWS_AS(brute_force_all(cs, sq, act, 100.0), CapExceeded);
    CHECK_NOTHROW(brute_force_all(cs, sq, act, 4096.0));
}

TEST_CASE("regular action multiplies by the region choices")
{
    const auto sq = dihedral(3, false);
    const auto reg = make_regular_action(sq);
    REQUIRE(verify_action(sq, reg).pass());
    for (const char* name : {"trefoil", "0_1"}) {
        const auto d = catalog::load(name);
        const auto cs = build_constraints(d, sq, reg);
        CHECK(cs.face_vars == faces(d).face_count);
        CHECK(count_solutions(cs, sq, reg) == 3 * count(d, sq));
        CHECK(solve_all(cs, sq, reg) == brute_force_all(cs, sq, reg));
    }
}
