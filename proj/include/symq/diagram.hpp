#pragma once

#include <array>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "symq/errors.hpp"

namespace symq {

using EdgeLabel = int;

enum class NodeKind { crossing, vertex };

/// A 4-valent node. Slots are listed counterclockwise.
///
/// Crossing: slots 0,2 are the under strand and 1,3 the over strand.
/// Marked vertex: strands run 0–2 and 1–3; the marker occupies the regions
/// between slots (0,1) and between slots (2,3).
struct Node {
    NodeKind kind = NodeKind::crossing;
    std::array<EdgeLabel, 4> slots{};

    bool operator==(const Node&) const = default;
};

/// One end of an edge: slot `slot` of node `node`.
struct HalfEdge {
    int node = -1;
    int slot = -1;

    bool operator==(const HalfEdge&) const = default;
};

/// Reference orientation of an edge: it leaves `tail` and arrives at `head`.
struct EdgeEnds {
    HalfEdge tail;
    HalfEdge head;
};

enum class DiagramErrorCode {
    unknown_statement,
    bad_slot_count,
    bad_label,
    unpaired_edge,
    overused_edge,
    non_planar,
    has_vertices,
};

/// Parse or validation failure of a ch-diagram. `line` is 1-based, 0 when not
/// attributable to one line.
class DiagramError : public Error {
public:
    DiagramError(DiagramErrorCode code, const std::string& message, int line = 0)
        : Error(line > 0 ? "line " + std::to_string(line) + ": " + message : message), code_(code), line_(line)
    {
    }

    DiagramErrorCode code() const { return code_; }
    int line() const { return line_; }

private:
    DiagramErrorCode code_;
    int line_;
};

/// A marked singular link diagram encoded as a 4-valent rotation system.
///
/// Edges are identified by positive labels, each occurring in exactly two node
/// slots. Crossing-free components are counted separately in `circles`. Edge
/// variables are indexed densely: labels in ascending order first, then one
/// index per circle.
class ChDiagram {
public:
    ChDiagram() = default;

    /// Validates labels and planarity. Each edge is oriented from its first
    /// occurrence (in node order, then slot order) to its second.
    ChDiagram(std::vector<Node> nodes, int circles, std::string name = {});

    const std::vector<Node>& nodes() const { return nodes_; }
    int circles() const { return circles_; }
    const std::string& name() const { return name_; }

    std::size_t crossing_count() const;
    std::size_t vertex_count() const;
    bool has_vertices() const { return vertex_count() > 0; }

    /// Labelled edges only (excludes circles).
    std::size_t edge_count() const { return labels_.size(); }
    /// Labelled edges plus circles: the number of edge color variables.
    std::size_t edge_variable_count() const { return labels_.size() + static_cast<std::size_t>(circles_); }
    const std::vector<EdgeLabel>& labels() const { return labels_; }
    EdgeLabel label_of(std::size_t index) const { return labels_[index]; }
    std::size_t index_of(EdgeLabel label) const;
    const EdgeEnds& ends(std::size_t index) const { return ends_[index]; }

    /// Dense edge index at a half-edge.
    std::size_t edge_at(HalfEdge h) const { return slot_edge_[h.node * 4 + h.slot]; }
    bool is_head(HalfEdge h) const { return ends_[edge_at(h)].head == h; }
    HalfEdge opposite_end(HalfEdge h) const;

    /// Copy with one edge's reference orientation reversed.
    ChDiagram with_reversed_edge(EdgeLabel label) const;
    /// Copy with labels renamed through `mapping` (must be injective on labels()).
    ChDiagram relabeled(const std::vector<std::pair<EdgeLabel, EdgeLabel>>& mapping) const;
    /// Copy with every crossing's over and under strands exchanged.
    ChDiagram mirrored() const;

    bool operator==(const ChDiagram& other) const
    {
        return nodes_ == other.nodes_ && circles_ == other.circles_ && flipped_ == other.flipped_;
    }

private:
    void index_edges();
    void check_planarity() const;

    std::vector<Node> nodes_;
    int circles_ = 0;
    std::string name_;
    std::vector<EdgeLabel> labels_;
    std::vector<EdgeEnds> ends_;
    std::vector<std::size_t> slot_edge_;
    std::vector<EdgeLabel> flipped_;
};

/// A classical link diagram: a ch-diagram without marked vertices.
class LinkDiagram {
public:
    LinkDiagram() = default;
    /// Throws DiagramError(has_vertices) if `d` contains a marked vertex.
    explicit LinkDiagram(ChDiagram d);

    const ChDiagram& diagram() const { return d_; }
    std::size_t crossing_count() const { return d_.crossing_count(); }
    int circles() const { return d_.circles(); }

private:
    ChDiagram d_;
};

enum class Smoothing { minus, plus };

/// Parses the .chd text format (see docs/chd_format.md).
ChDiagram parse_chd(std::string_view text);
/// Reads and parses a .chd file.
ChDiagram load_chd_file(const std::string& path);
/// Canonical .chd text. parse_chd(to_chd(d)) reproduces d up to orientation flips.
std::string to_chd(const ChDiagram& d);

/// Resolves every marked vertex: minus joins slots 0–1 and 2–3, plus joins 1–2 and 3–0.
LinkDiagram smooth(const ChDiagram& d, Smoothing sign);

/// Number of closed strands, following 0–2 and 1–3 through crossings.
int count_components(const LinkDiagram& l);

/// μ(L⁻) + μ(L⁺) − #vertices.
int euler_characteristic(const ChDiagram& d);

/// #crossings + #marked vertices.
int ch_index(const ChDiagram& d);

struct FaceMap {
    int face_count = 0;
    /// Per edge variable (labels, then circles): the face to its left and right
    /// relative to the reference orientation. The left face is the one its normal points into.
    std::vector<int> left;
    std::vector<int> right;
    /// Per marked vertex in node order: faces in the sectors (0,1) and (2,3).
    std::vector<std::array<int, 2>> marker_faces;
    /// Face id of each dart; dart id is node*4+slot, the dart leaving through that slot.
    std::vector<int> dart_face;
    int graph_components = 0;
    /// Set when the diagram has more than one component, in which case each
    /// component contributes its own outer face.
    bool outer_faces_unmerged = false;
};

FaceMap faces(const ChDiagram& d);

/// Topology of one connected component of the represented surface.
struct SurfaceComponent {
    int euler_characteristic = 0;
    bool orientable = true;
    int vertices = 0;
    /// Genus signed as in Yoshikawa's notation: negative for non-orientable.
    int signed_genus() const
    {
        return orientable ? (2 - euler_characteristic) / 2 : -(2 - euler_characteristic);
    }
};

/// Surface components in order of their smallest edge variable.
std::vector<SurfaceComponent> surface_components(const ChDiagram& d);

}  // namespace symq
