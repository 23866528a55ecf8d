#include <doctest.h>

#include <set>

#include "symq/diagram.hpp"

using namespace symq;

namespace {

const char* trefoil = "X 1 5 2 4\nX 3 1 4 6\nX 5 3 6 2\n";
const char* hopf = "X 4 1 3 2\nX 2 3 1 4\n";
// one marked vertex, strands closed into two loops
const char* figure_eight = "V 1 1 2 2\n";
// two circles meeting at a marked vertex and one crossing
const char* projective = "V 3 1 4 2\nX 2 4 1 3\n";

DiagramErrorCode error_code(const char* text)
{
    try {
        parse_chd(text);
    }
    catch (const DiagramError& e) {
        return e.code();
    }
    FAIL("expected a DiagramError");
    return DiagramErrorCode::unknown_statement;
}

}  // namespace

TEST_CASE("parse basics")
{
    const auto circle = parse_chd("circle\n");
    CHECK(circle.circles() == 1);
    CHECK(circle.nodes().empty());
    CHECK(circle.edge_variable_count() == 1);

    const auto t = parse_chd(std::string("# comment\nname trefoil\n") + trefoil);
    CHECK(t.name() == "trefoil");
    CHECK(t.crossing_count() == 3);
    CHECK(t.edge_count() == 6);
    CHECK_FALSE(t.has_vertices());
}

TEST_CASE("reference orientation runs from first to second occurrence")
{
    const auto t = parse_chd(trefoil);
    // edge 1 first appears at node 0 slot 0, then node 1 slot 1
    const auto& e = t.ends(t.index_of(1));
    CHECK(e.tail == HalfEdge{0, 0});
    CHECK(e.head == HalfEdge{1, 1});
    CHECK(t.is_head({1, 1}));
    CHECK(t.opposite_end({0, 0}) == HalfEdge{1, 1});

    const auto flipped = t.with_reversed_edge(1);
    CHECK(flipped.ends(flipped.index_of(1)).tail == HalfEdge{1, 1});
    CHECK(flipped.with_reversed_edge(1) == t);
}

TEST_CASE("parse errors carry distinct codes and line numbers")
{
    CHECK(error_code("Y 1 2 3 4\n") == DiagramErrorCode::unknown_statement);
    CHECK(error_code("X 1 2 3\n") == DiagramErrorCode::bad_slot_count);
    CHECK(error_code("X 1 2 1 x\n") == DiagramErrorCode::bad_label);
    CHECK(error_code("X 1 0 1 0\n") == DiagramErrorCode::bad_label);
    CHECK(error_code("X 1 5 2 4\nX 3 1 4 6\nX 5 3 6 7\n") == DiagramErrorCode::unpaired_edge);
    CHECK(error_code("X 1 1 1 2\nX 2 3 3 4\n") == DiagramErrorCode::overused_edge);
    CHECK(error_code("V 1 2 1 2\n") == DiagramErrorCode::non_planar);
    try {
        parse_chd("circle\n\nX 1 2 3\n");
        FAIL("expected an error");
    }
    catch (const DiagramError& e) {
        CHECK(e.line() == 3);
    }
    CHECK_THROWS_AS(LinkDiagram(parse_chd(projective)), DiagramError);
}

TEST_CASE("round trip through text")
{
    for (const char* text : {trefoil, hopf, figure_eight, projective, "circle\ncircle\n"}) {
        const auto d = parse_chd(text);
        CHECK(parse_chd(to_chd(d)) == d);
    }
}

TEST_CASE("smoothing and components")
{
    const auto t = parse_chd(trefoil);
    CHECK(count_components(LinkDiagram(t)) == 1);
    CHECK(count_components(LinkDiagram(parse_chd(hopf))) == 2);
    CHECK(count_components(LinkDiagram(parse_chd("circle\n"))) == 1);
    CHECK(smooth(t, Smoothing::minus).diagram() == t);
    CHECK(smooth(t, Smoothing::plus).diagram() == t);

    const auto two = parse_chd("circle\ncircle\n");
    CHECK(smooth(two, Smoothing::minus).diagram() == two);

    const auto f = parse_chd(figure_eight);
    CHECK(count_components(smooth(f, Smoothing::minus)) == 2);
    CHECK(count_components(smooth(f, Smoothing::plus)) == 1);
    CHECK(euler_characteristic(f) == 2);

    const auto p = parse_chd(projective);
    CHECK(count_components(smooth(p, Smoothing::minus)) == 1);
    CHECK(count_components(smooth(p, Smoothing::plus)) == 1);
    CHECK(euler_characteristic(p) == 1);
    CHECK(smooth(p, Smoothing::plus).crossing_count() == 1);
}

TEST_CASE("euler characteristic and ch-index")
{
    CHECK(euler_characteristic(parse_chd("circle\n")) == 2);
    CHECK(ch_index(parse_chd("circle\n")) == 0);
    CHECK(ch_index(parse_chd(trefoil)) == 3);
    CHECK(ch_index(parse_chd(projective)) == 2);
}

TEST_CASE("faces")
{
    CHECK(faces(parse_chd("circle\n")).face_count == 2);

    const auto t = parse_chd(trefoil);
    const auto ft = faces(t);
    CHECK(ft.face_count == 5);  // 3 - 6 + F = 2
    CHECK(ft.graph_components == 1);
    CHECK_FALSE(ft.outer_faces_unmerged);
    for (std::size_t e = 0; e < t.edge_count(); ++e)
        CHECK(ft.left[e] != ft.right[e]);

    const auto f = parse_chd(figure_eight);
    const auto ff = faces(f);
    CHECK(ff.face_count == 3);  // 1 - 2 + F = 2
    REQUIRE(ff.marker_faces.size() == 1);
    // the marker sectors (0,1) and (2,3) are the two lobes
    CHECK(ff.marker_faces[0][0] != ff.marker_faces[0][1]);

    // the left face of an edge is the face of its tail dart
    for (std::size_t e = 0; e < t.edge_count(); ++e) {
        const auto tail = t.ends(e).tail;
        CHECK(ft.left[e] == ft.dart_face[tail.node * 4 + tail.slot]);
    }
}

TEST_CASE("faces of a split diagram are flagged")
{
    const auto d = parse_chd(std::string(trefoil) + "circle\n");
    const auto fm = faces(d);
    CHECK(fm.graph_components == 2);
    CHECK(fm.outer_faces_unmerged);
    CHECK(fm.face_count == 7);
}

TEST_CASE("surface components")
{
    const auto sphere = surface_components(parse_chd("circle\n"));
    REQUIRE(sphere.size() == 1);
    CHECK(sphere[0].orientable);
    CHECK(sphere[0].signed_genus() == 0);

    const auto p = surface_components(parse_chd(projective));
    REQUIRE(p.size() == 1);
    CHECK_FALSE(p[0].orientable);
    CHECK(p[0].euler_characteristic == 1);
    CHECK(p[0].signed_genus() == -1);

    const auto f = surface_components(parse_chd(figure_eight));
    REQUIRE(f.size() == 1);
    CHECK(f[0].orientable);
    CHECK(f[0].euler_characteristic == 2);
}

TEST_CASE("relabeling and mirroring")
{
    const auto t = parse_chd(trefoil);
    const auto r = t.relabeled({{1, 60}, {2, 50}, {3, 40}, {4, 30}, {5, 20}, {6, 10}});
    CHECK(r.edge_count() == 6);
    CHECK(r.labels().front() == 10);
    CHECK(ch_index(r) == 3);
    CHECK_THROWS_AS(t.relabeled({{1, 2}, {2, 2}, {3, 3}, {4, 4}, {5, 5}, {6, 6}}), Error);

    const auto m = t.mirrored();
    CHECK(m.crossing_count() == 3);
    CHECK(m.mirrored().mirrored().mirrored().nodes() == t.nodes());
    CHECK_FALSE(m.nodes() == t.nodes());
}
