#include "symq/diagram.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <map>
#include <sstream>

#include "union_find.hpp"

namespace symq {

namespace {

constexpr int next_cw(int slot) { return (slot + 3) % 4; }

std::string trim(std::string s)
{
    const auto first = s.find_first_not_of(" \t\r\n");
    if (first == std::string::npos)
        return {};
    const auto last = s.find_last_not_of(" \t\r\n");
    return s.substr(first, last - first + 1);
}

}  // namespace

ChDiagram::ChDiagram(std::vector<Node> nodes, int circles, std::string name)
    : nodes_(std::move(nodes)), circles_(circles), name_(std::move(name))
{
    if (circles_ < 0)
        throw DiagramError(DiagramErrorCode::bad_slot_count, "negative circle count");
    index_edges();
    check_planarity();
}

void ChDiagram::index_edges()
{
    std::map<EdgeLabel, std::vector<HalfEdge>> occurrences;
    for (int n = 0; n < static_cast<int>(nodes_.size()); ++n)
        for (int s = 0; s < 4; ++s) {
            const EdgeLabel label = nodes_[n].slots[s];
            if (label <= 0)
                throw DiagramError(DiagramErrorCode::bad_label,
                                   "edge label " + std::to_string(label) + " is not a positive integer");
            occurrences[label].push_back({n, s});
        }

    labels_.clear();
    ends_.clear();
    slot_edge_.assign(nodes_.size() * 4, 0);
    for (const auto& [label, where] : occurrences) {
        if (where.size() == 1)
            throw DiagramError(DiagramErrorCode::unpaired_edge,
                               "edge " + std::to_string(label) + " occurs only once");
        if (where.size() > 2)
            throw DiagramError(DiagramErrorCode::overused_edge,
                               "edge " + std::to_string(label) + " occurs " + std::to_string(where.size()) + " times");
        const std::size_t index = labels_.size();
        labels_.push_back(label);
        EdgeEnds e{where[0], where[1]};
        if (std::binary_search(flipped_.begin(), flipped_.end(), label))
            std::swap(e.tail, e.head);
        ends_.push_back(e);
        for (const auto& h : where)
            slot_edge_[h.node * 4 + h.slot] = index;
    }
}

void ChDiagram::check_planarity() const
{
    // Euler's formula per connected component of the 4-valent graph.
    const auto fm = faces(*this);
    detail::UnionFind nodes(nodes_.size());
    for (const auto& e : ends_)
        nodes.unite(static_cast<std::size_t>(e.tail.node), static_cast<std::size_t>(e.head.node));

    std::map<std::size_t, std::array<long, 3>> vef;
    for (std::size_t n = 0; n < nodes_.size(); ++n)
        vef[nodes.find(n)][0] += 1;
    for (const auto& e : ends_)
        vef[nodes.find(static_cast<std::size_t>(e.tail.node))][1] += 1;
    std::map<std::size_t, std::vector<int>> faces_of;
    for (std::size_t dart = 0; dart < fm.dart_face.size(); ++dart)
        faces_of[nodes.find(dart / 4)].push_back(fm.dart_face[dart]);
    for (auto& [root, fs] : faces_of) {
        std::sort(fs.begin(), fs.end());
        vef[root][2] = std::unique(fs.begin(), fs.end()) - fs.begin();
    }
    for (const auto& [root, c] : vef)
        if (c[0] - c[1] + c[2] != 2)
            throw DiagramError(DiagramErrorCode::non_planar,
                               "rotation system is not planar: component with V=" + std::to_string(c[0])
                                   + " E=" + std::to_string(c[1]) + " F=" + std::to_string(c[2])
                                   + " violates V-E+F=2");
}

std::size_t ChDiagram::crossing_count() const
{
    return static_cast<std::size_t>(
        std::count_if(nodes_.begin(), nodes_.end(), [](const Node& n) { return n.kind == NodeKind::crossing; }));
}

std::size_t ChDiagram::vertex_count() const { return nodes_.size() - crossing_count(); }

std::size_t ChDiagram::index_of(EdgeLabel label) const
{
    auto it = std::lower_bound(labels_.begin(), labels_.end(), label);
    if (it == labels_.end() || *it != label)
        throw InvalidArgument("no edge labelled " + std::to_string(label));
    return static_cast<std::size_t>(it - labels_.begin());
}

HalfEdge ChDiagram::opposite_end(HalfEdge h) const
{
    const auto& e = ends_[edge_at(h)];
    return e.tail == h ? e.head : e.tail;
}

ChDiagram ChDiagram::with_reversed_edge(EdgeLabel label) const
{
    index_of(label);
    ChDiagram copy = *this;
    auto it = std::lower_bound(copy.flipped_.begin(), copy.flipped_.end(), label);
    if (it != copy.flipped_.end() && *it == label)
        copy.flipped_.erase(it);
    else
        copy.flipped_.insert(it, label);
    copy.index_edges();
    return copy;
}

ChDiagram ChDiagram::relabeled(const std::vector<std::pair<EdgeLabel, EdgeLabel>>& mapping) const
{
    std::map<EdgeLabel, EdgeLabel> m(mapping.begin(), mapping.end());
    auto map_label = [&](EdgeLabel l) {
        auto it = m.find(l);
        if (it == m.end())
            throw InvalidArgument("relabeling does not cover edge " + std::to_string(l));
        return it->second;
    };
    std::vector<Node> nodes = nodes_;
    for (auto& n : nodes)
        for (auto& s : n.slots)
            s = map_label(s);
    ChDiagram copy(std::move(nodes), circles_, name_);
    if (copy.edge_count() != edge_count())
        throw InvalidArgument("relabeling is not injective");
    for (EdgeLabel l : flipped_)
        copy.flipped_.push_back(map_label(l));
    std::sort(copy.flipped_.begin(), copy.flipped_.end());
    copy.index_edges();
    return copy;
}

ChDiagram ChDiagram::mirrored() const
{
    std::vector<Node> nodes = nodes_;
    for (auto& n : nodes)
        if (n.kind == NodeKind::crossing)
            n.slots = {n.slots[1], n.slots[2], n.slots[3], n.slots[0]};
    return ChDiagram(std::move(nodes), circles_, name_.empty() ? name_ : name_ + " (mirror)");
}

LinkDiagram::LinkDiagram(ChDiagram d) : d_(std::move(d))
{
    if (d_.has_vertices())
        throw DiagramError(DiagramErrorCode::has_vertices, "a link diagram cannot contain marked vertices");
}

ChDiagram parse_chd(std::string_view text)
{
    std::vector<Node> nodes;
    std::vector<int> node_line;
    int circles = 0;
    std::string name;

    std::istringstream in{std::string(text)};
    std::string raw;
    int line_no = 0;
    while (std::getline(in, raw)) {
        ++line_no;
        if (auto hash = raw.find('#'); hash != std::string::npos)
            raw.erase(hash);
        std::string line = trim(raw);
        if (line.empty())
            continue;
        std::istringstream fields(line);
        std::string keyword;
        fields >> keyword;
        if (keyword == "name") {
            name = trim(line.substr(4));
            continue;
        }
        if (keyword == "circle") {
            std::string extra;
            if (fields >> extra)
                throw DiagramError(DiagramErrorCode::bad_slot_count, "'circle' takes no arguments", line_no);
            ++circles;
            continue;
        }
        if (keyword != "X" && keyword != "V")
            throw DiagramError(DiagramErrorCode::unknown_statement, "unknown statement '" + keyword + "'", line_no);

        std::vector<std::string> tokens;
        for (std::string tok; fields >> tok;)
            tokens.push_back(tok);
        if (tokens.size() != 4)
            throw DiagramError(DiagramErrorCode::bad_slot_count,
                               "'" + keyword + "' needs 4 edge labels, got " + std::to_string(tokens.size()), line_no);
        Node node;
        node.kind = keyword == "X" ? NodeKind::crossing : NodeKind::vertex;
        for (int s = 0; s < 4; ++s) {
            int value = 0;
            const auto& tok = tokens[s];
            auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
            if (ec != std::errc() || ptr != tok.data() + tok.size() || value <= 0)
                throw DiagramError(DiagramErrorCode::bad_label,
                                   "edge label '" + tok + "' is not a positive integer", line_no);
            node.slots[s] = value;
        }
        nodes.push_back(node);
        node_line.push_back(line_no);
    }

    // Report pairing problems against the offending line before building.
    std::map<EdgeLabel, std::vector<int>> seen;
    for (std::size_t n = 0; n < nodes.size(); ++n)
        for (EdgeLabel l : nodes[n].slots)
            seen[l].push_back(node_line[n]);
    for (const auto& [label, lines] : seen) {
        if (lines.size() == 1)
            throw DiagramError(DiagramErrorCode::unpaired_edge,
                               "edge " + std::to_string(label) + " occurs only once", lines[0]);
        if (lines.size() > 2)
            throw DiagramError(DiagramErrorCode::overused_edge,
                               "edge " + std::to_string(label) + " occurs " + std::to_string(lines.size()) + " times",
                               lines[2]);
    }
    return ChDiagram(std::move(nodes), circles, std::move(name));
}

ChDiagram load_chd_file(const std::string& path)
{
    std::ifstream file(path);
    if (!file)
        throw InvalidArgument("cannot open diagram file '" + path + "'");
    std::stringstream buf;
    buf << file.rdbuf();
    return parse_chd(buf.str());
}

std::string to_chd(const ChDiagram& d)
{
    std::ostringstream out;
    if (!d.name().empty())
        out << "name " << d.name() << '\n';
    for (int i = 0; i < d.circles(); ++i)
        out << "circle\n";
    for (const auto& n : d.nodes()) {
        out << (n.kind == NodeKind::crossing ? 'X' : 'V');
        for (EdgeLabel l : n.slots)
            out << ' ' << l;
        out << '\n';
    }
    return out.str();
}

LinkDiagram smooth(const ChDiagram& d, Smoothing sign)
{
    detail::UnionFind groups(d.edge_count());
    std::vector<bool> touches_crossing(d.edge_count(), false);
    for (int n = 0; n < static_cast<int>(d.nodes().size()); ++n) {
        const auto& node = d.nodes()[n];
        auto at = [&](int s) { return d.edge_at({n, s}); };
        if (node.kind == NodeKind::crossing) {
            for (int s = 0; s < 4; ++s)
                touches_crossing[at(s)] = true;
            continue;
        }
        if (sign == Smoothing::minus) {
            groups.unite(at(0), at(1));
            groups.unite(at(2), at(3));
        }
        else {
            groups.unite(at(1), at(2));
            groups.unite(at(3), at(0));
        }
    }

    std::vector<bool> group_touches(d.edge_count(), false);
    for (std::size_t e = 0; e < d.edge_count(); ++e)
        if (touches_crossing[e])
            group_touches[groups.find(e)] = true;
    int circles = d.circles();
    for (std::size_t e = 0; e < d.edge_count(); ++e)
        if (groups.find(e) == e && !group_touches[e])
            ++circles;

    std::vector<Node> nodes;
    for (int n = 0; n < static_cast<int>(d.nodes().size()); ++n) {
        const auto& node = d.nodes()[n];
        if (node.kind != NodeKind::crossing)
            continue;
        Node out = node;
        for (int s = 0; s < 4; ++s)
            out.slots[s] = d.label_of(groups.find(d.edge_at({n, s})));
        nodes.push_back(out);
    }
    return LinkDiagram(ChDiagram(std::move(nodes), circles));
}

int count_components(const LinkDiagram& l)
{
    const auto& d = l.diagram();
    detail::UnionFind strands(d.edge_count());
    for (int n = 0; n < static_cast<int>(d.nodes().size()); ++n) {
        strands.unite(d.edge_at({n, 0}), d.edge_at({n, 2}));
        strands.unite(d.edge_at({n, 1}), d.edge_at({n, 3}));
    }
    return static_cast<int>(strands.count_roots()) + d.circles();
}

int euler_characteristic(const ChDiagram& d)
{
    return count_components(smooth(d, Smoothing::minus)) + count_components(smooth(d, Smoothing::plus))
           - static_cast<int>(d.vertex_count());
}

int ch_index(const ChDiagram& d) { return static_cast<int>(d.nodes().size()); }

FaceMap faces(const ChDiagram& d)
{
    FaceMap fm;
    const std::size_t darts = d.nodes().size() * 4;
    fm.dart_face.assign(darts, -1);
    for (std::size_t start = 0; start < darts; ++start) {
        if (fm.dart_face[start] >= 0)
            continue;
        const int face = fm.face_count++;
        HalfEdge h{static_cast<int>(start / 4), static_cast<int>(start % 4)};
        while (fm.dart_face[h.node * 4 + h.slot] < 0) {
            fm.dart_face[h.node * 4 + h.slot] = face;
            const HalfEdge arrive = d.opposite_end(h);
            h = {arrive.node, next_cw(arrive.slot)};
        }
    }

    fm.left.resize(d.edge_variable_count());
    fm.right.resize(d.edge_variable_count());
    for (std::size_t e = 0; e < d.edge_count(); ++e) {
        const auto& ends = d.ends(e);
        fm.left[e] = fm.dart_face[ends.tail.node * 4 + ends.tail.slot];
        fm.right[e] = fm.dart_face[ends.head.node * 4 + ends.head.slot];
    }
    for (int c = 0; c < d.circles(); ++c) {
        const std::size_t e = d.edge_count() + static_cast<std::size_t>(c);
        fm.left[e] = fm.face_count++;
        fm.right[e] = fm.face_count++;
    }
    for (int n = 0; n < static_cast<int>(d.nodes().size()); ++n)
        if (d.nodes()[n].kind == NodeKind::vertex)
            fm.marker_faces.push_back({fm.dart_face[n * 4 + 0], fm.dart_face[n * 4 + 2]});

    detail::UnionFind comps(d.nodes().size());
    for (std::size_t e = 0; e < d.edge_count(); ++e)
        comps.unite(static_cast<std::size_t>(d.ends(e).tail.node), static_cast<std::size_t>(d.ends(e).head.node));
    fm.graph_components = static_cast<int>(comps.count_roots()) + d.circles();
    fm.outer_faces_unmerged = fm.graph_components > 1;
    return fm;
}

std::vector<SurfaceComponent> surface_components(const ChDiagram& d)
{
    const std::size_t edges = d.edge_count();
    detail::UnionFind surface(edges);
    detail::UnionFind lower(edges);
    detail::UnionFind upper(edges);
    detail::ParityUnionFind orientation(edges);
    std::vector<bool> non_orientable_root(edges, false);
    std::vector<bool> contradiction_at(edges, false);

    // in(h) relative to the reference orientation: 1 if the edge arrives at h.
    auto in_ref = [&](int n, int s) { return d.is_head({n, s}) ? 1 : 0; };

    for (int n = 0; n < static_cast<int>(d.nodes().size()); ++n) {
        auto at = [&](int s) { return d.edge_at({n, s}); };
        auto relate = [&](int s, int t, int want_equal_in) {
            // orientation bit o_e flips in(h); require in(s) xor in(t) == 1 - want_equal_in
            const int rel = (1 - want_equal_in) ^ in_ref(n, s) ^ in_ref(n, t);
            if (!orientation.relate(at(s), at(t), rel))
                contradiction_at[at(s)] = true;
        };
        if (d.nodes()[n].kind == NodeKind::crossing) {
            for (auto* uf : {&surface, &lower, &upper}) {
                uf->unite(at(0), at(2));
                uf->unite(at(1), at(3));
            }
            relate(0, 2, 0);
            relate(1, 3, 0);
        }
        else {
            surface.unite(at(0), at(1));
            surface.unite(at(0), at(2));
            surface.unite(at(0), at(3));
            lower.unite(at(0), at(1));
            lower.unite(at(2), at(3));
            upper.unite(at(1), at(2));
            upper.unite(at(3), at(0));
            // alternating in/out around a marked vertex
            relate(0, 2, 1);
            relate(1, 3, 1);
            relate(0, 1, 0);
        }
    }

    std::map<std::size_t, SurfaceComponent> by_root;
    for (std::size_t e = 0; e < edges; ++e) {
        const std::size_t root = surface.find(e);
        auto& comp = by_root[root];
        if (lower.find(e) == e)
            comp.euler_characteristic += 1;
        if (upper.find(e) == e)
            comp.euler_characteristic += 1;
        if (contradiction_at[e])
            comp.orientable = false;
    }
    for (int n = 0; n < static_cast<int>(d.nodes().size()); ++n)
        if (d.nodes()[n].kind == NodeKind::vertex) {
            auto& comp = by_root[surface.find(d.edge_at({n, 0}))];
            comp.euler_characteristic -= 1;
            comp.vertices += 1;
        }

    std::vector<SurfaceComponent> result;
    for (const auto& [root, comp] : by_root)
        result.push_back(comp);
    for (int c = 0; c < d.circles(); ++c)
        result.push_back(SurfaceComponent{2, true, 0});
    return result;
}

}  // namespace symq
