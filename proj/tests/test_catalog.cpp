#include <doctest.h>

#include "symq/catalog.hpp"
#include "symq/coloring.hpp"
#include "symq/simplify.hpp"

using namespace symq;

TEST_CASE("every entry validates")
{
    for (const auto& e : catalog::entries()) {
        CAPTURE(e.name);
        const auto d = catalog::load(e.name);
        CHECK(ch_index(d) == e.ch_index);
        if (e.classical)
            CHECK_FALSE(d.has_vertices());
        // Euler's formula for the projection graph; a circle counts as a loop on one vertex
        const auto f = faces(d);
        const int v = static_cast<int>(d.nodes().size()) + d.circles();
        const int edges = static_cast<int>(d.edge_variable_count());
        const int c = f.graph_components;
        CHECK(v - edges + f.face_count == (f.outer_faces_unmerged ? 2 * c : c + 1));
        if (e.classical) {
            CHECK(count_components(LinkDiagram(d)) == static_cast<int>(e.signed_genera.size()));
            continue;
        }
        CHECK(euler_characteristic(d) == e.euler_characteristic);
        std::vector<int> genera;
        for (const auto& comp : surface_components(d))
            genera.push_back(comp.signed_genus());
        CHECK(genera == e.signed_genera);
        CHECK(is_admissible(d, e.admissibility_budget).admissible == Admissibility::yes);
    }
}

TEST_CASE("lookup")
{
    CHECK(catalog::load("0_1").circles() == 1);
    CHECK(ch_index(catalog::load("8_1^{-1,-1}")) == 8);
    CHECK(ch_index(catalog::load("10_1^{-1,-1}")) == 10);
    CHECK_THROWS_AS(catalog::entry("9_1"), InvalidArgument);
    CHECK(catalog::list().size() == catalog::entries().size());
}

TEST_CASE("coloring existence survives mirroring")
{
    std::vector<SymmetricQuandle> qs = {
        make_symmetric_quandle(make_dihedral(3), GoodInvolution::identity(3)),
        make_symmetric_quandle(make_dihedral(4), make_antipodal(4)),
        make_symmetric_quandle(make_dihedral(5), GoodInvolution::identity(5)),
        make_symmetric_quandle(make_dihedral(8), make_antipodal(8)),
    };
    for (const auto& e : catalog::entries()) {
        const auto d = catalog::load(e.name);
        for (const auto& sq : qs) {
            CAPTURE(e.name);
            CAPTURE(sq.size());
            const auto act = make_trivial_action(sq);
            CHECK((count_colorings(d, sq, act) > 0) == (count_colorings(d.mirrored(), sq, act) > 0));
        }
    }
    // the shipped mirror pair
    const auto p = catalog::load("2_1^{-1}"), q = catalog::load("2_1^{-1}*");
    for (const auto& sq : qs)
        CHECK(count_colorings(p, sq, make_trivial_action(sq)) == count_colorings(q, sq, make_trivial_action(sq)));
}

TEST_CASE("headline entries are not split")
{
    // a split union of two projective planes has at least 3 * 3 colorings by R3
    const auto sq = make_symmetric_quandle(make_dihedral(3), GoodInvolution::identity(3));
    for (const char* name : {"8_1^{-1,-1}", "10_1^{-1,-1}"})
        CHECK(count_colorings(catalog::load(name), sq, make_trivial_action(sq)) == 3);
}
