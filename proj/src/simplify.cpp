#include "symq/simplify.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <sstream>

#include "symq/coloring.hpp"
#include "union_find.hpp"

namespace symq {

namespace {

constexpr int next_cw(int slot) { return (slot + 3) % 4; }

bool is_over(int slot) { return slot % 2 == 1; }

/// Removes the given crossings, letting both strands pass straight through each.
LinkDiagram remove_crossings(const ChDiagram& d, const std::vector<int>& removed)
{
    detail::UnionFind groups(d.edge_count());
    std::vector<bool> gone(d.nodes().size(), false);
    for (int n : removed) {
        gone[n] = true;
        groups.unite(d.edge_at({n, 0}), d.edge_at({n, 2}));
        groups.unite(d.edge_at({n, 1}), d.edge_at({n, 3}));
    }
    std::vector<bool> still_used(d.edge_count(), false);
    std::vector<Node> nodes;
    for (int n = 0; n < static_cast<int>(d.nodes().size()); ++n) {
        if (gone[n])
            continue;
        Node node = d.nodes()[n];
        for (int s = 0; s < 4; ++s) {
            const std::size_t root = groups.find(d.edge_at({n, s}));
            still_used[root] = true;
            node.slots[s] = d.label_of(root);
        }
        nodes.push_back(node);
    }
    int circles = d.circles();
    for (std::size_t e = 0; e < d.edge_count(); ++e)
        if (groups.find(e) == e && !still_used[e])
            ++circles;
    return LinkDiagram(ChDiagram(std::move(nodes), circles));
}

/// Darts of the face to the left of the dart leaving (node, slot).
std::vector<HalfEdge> face_darts(const ChDiagram& d, HalfEdge start)
{
    std::vector<HalfEdge> darts;
    HalfEdge h = start;
    do {
        darts.push_back(h);
        const HalfEdge arrive = d.opposite_end(h);
        h = {arrive.node, next_cw(arrive.slot)};
        if (darts.size() > d.nodes().size() * 4)
            throw InvalidArgument("face tracing did not close");
    } while (!(h == start));
    return darts;
}

std::optional<std::pair<int, int>> valid_bigon(const ChDiagram& d, const std::vector<HalfEdge>& darts)
{
    if (darts.size() != 2 || darts[0].node == darts[1].node)
        return std::nullopt;
    // darts[0] leaves i through slot s and arrives at j; darts[1] leaves j and arrives at i.
    const HalfEdge e_i = darts[0];
    const HalfEdge e_j = d.opposite_end(e_i);
    const HalfEdge f_j = darts[1];
    const HalfEdge f_i = d.opposite_end(f_j);
    if (is_over(e_i.slot) != is_over(e_j.slot) || is_over(f_i.slot) != is_over(f_j.slot))
        return std::nullopt;
    return std::make_pair(std::min(e_i.node, e_j.node), std::max(e_i.node, e_j.node));
}

struct Triangle {
    std::array<int, 3> node;      // X1, X2, X3
    std::array<int, 3> out_slot;  // slot of line k at its first crossing
    std::array<int, 3> in_slot;   // slot of line k at its second crossing
};

// Line k runs along triangle side k from node[k] to node[(k+1)%3].
std::optional<Triangle> valid_triangle(const ChDiagram& d, const std::vector<HalfEdge>& darts)
{
    if (darts.size() != 3)
        return std::nullopt;
    Triangle t;
    for (int k = 0; k < 3; ++k) {
        t.node[k] = darts[k].node;
        t.out_slot[k] = darts[k].slot;
        t.in_slot[k] = d.opposite_end(darts[k]).slot;
    }
    if (t.node[0] == t.node[1] || t.node[1] == t.node[2] || t.node[0] == t.node[2])
        return std::nullopt;
    // Some line must pass over (or, equivalently for three strands, under) at both of its crossings.
    bool some_over_both = false;
    for (int k = 0; k < 3; ++k)
        if (is_over(t.out_slot[k]) && is_over(t.in_slot[k]))
            some_over_both = true;
    if (!some_over_both)
        return std::nullopt;
    return t;
}

std::vector<Node> nodes_of(const LinkDiagram& l) { return l.diagram().nodes(); }

EdgeLabel fresh_label(const ChDiagram& d) { return d.labels().empty() ? 1 : d.labels().back() + 1; }

}  // namespace

std::string describe(const Move& m)
{
    std::ostringstream out;
    switch (m.kind) {
    case MoveKind::r1_remove: out << "R1- crossing " << m.args.at(0); break;
    case MoveKind::r2_remove: out << "R2- crossings " << m.args.at(0) << "," << m.args.at(1); break;
    case MoveKind::r3: out << "R3 at dart (" << m.args.at(0) << "," << m.args.at(1) << ")"; break;
    case MoveKind::r2_create:
        out << "R2+ darts (" << m.args.at(0) << "," << m.args.at(1) << ") and (" << m.args.at(2) << ","
            << m.args.at(3) << ")" << (m.args.at(4) ? " first over" : " first under");
        break;
    }
    return out.str();
}

std::string to_string(UnlinkVerdict v)
{
    switch (v) {
    case UnlinkVerdict::unlink: return "unlink";
    case UnlinkVerdict::not_unlink: return "not_unlink";
    case UnlinkVerdict::unknown: return "unknown";
    }
    return "?";
}

std::string to_string(Admissibility a)
{
    switch (a) {
    case Admissibility::yes: return "yes";
    case Admissibility::no: return "no";
    case Admissibility::unknown: return "unknown";
    }
    return "?";
}

std::vector<Move> r1_removals(const LinkDiagram& l)
{
    std::vector<Move> moves;
    const auto& nodes = l.diagram().nodes();
    for (int n = 0; n < static_cast<int>(nodes.size()); ++n)
        for (int s = 0; s < 4; ++s)
            if (nodes[n].slots[s] == nodes[n].slots[(s + 1) % 4]) {
                moves.push_back({MoveKind::r1_remove, {n}});
                break;
            }
    return moves;
}

std::vector<Move> r2_removals(const LinkDiagram& l)
{
    const auto& d = l.diagram();
    const auto fm = faces(d);
    std::set<std::pair<int, int>> pairs;
    std::vector<bool> done(static_cast<std::size_t>(fm.face_count), false);
    for (int dart = 0; dart < static_cast<int>(fm.dart_face.size()); ++dart) {
        const int f = fm.dart_face[dart];
        if (done[f])
            continue;
        done[f] = true;
        if (auto p = valid_bigon(d, face_darts(d, {dart / 4, dart % 4})))
            pairs.insert(*p);
    }
    std::vector<Move> moves;
    for (const auto& [i, j] : pairs)
        moves.push_back({MoveKind::r2_remove, {i, j}});
    return moves;
}

std::vector<Move> r3_moves(const LinkDiagram& l)
{
    const auto& d = l.diagram();
    const auto fm = faces(d);
    std::vector<Move> moves;
    std::vector<bool> done(static_cast<std::size_t>(fm.face_count), false);
    for (int dart = 0; dart < static_cast<int>(fm.dart_face.size()); ++dart) {
        const int f = fm.dart_face[dart];
        if (done[f])
            continue;
        done[f] = true;
        if (valid_triangle(d, face_darts(d, {dart / 4, dart % 4})))
            moves.push_back({MoveKind::r3, {dart / 4, dart % 4}});
    }
    return moves;
}

std::vector<Move> r2_creations(const LinkDiagram& l)
{
    const auto& d = l.diagram();
    const auto fm = faces(d);
    std::vector<Move> moves;
    std::vector<bool> done(static_cast<std::size_t>(fm.face_count), false);
    for (int dart = 0; dart < static_cast<int>(fm.dart_face.size()); ++dart) {
        const int f = fm.dart_face[dart];
        if (done[f])
            continue;
        done[f] = true;
        const auto darts = face_darts(d, {dart / 4, dart % 4});
        for (std::size_t a = 0; a < darts.size(); ++a)
            for (std::size_t b = a + 1; b < darts.size(); ++b) {
                if (d.edge_at(darts[a]) == d.edge_at(darts[b]))
                    continue;
                for (int over : {1, 0})
                    moves.push_back({MoveKind::r2_create,
                                     {darts[a].node, darts[a].slot, darts[b].node, darts[b].slot, over}});
            }
    }
    return moves;
}

LinkDiagram apply_move(const LinkDiagram& l, const Move& m)
{
    const auto& d = l.diagram();
    const int node_count = static_cast<int>(d.nodes().size());
    auto check_node = [&](int n) {
        if (n < 0 || n >= node_count)
            throw InvalidArgument("move refers to missing crossing " + std::to_string(n));
    };
    auto check_slot = [&](int s) {
        if (s < 0 || s > 3)
            throw InvalidArgument("move refers to slot " + std::to_string(s));
    };

    switch (m.kind) {
    case MoveKind::r1_remove: {
        const int n = m.args.at(0);
        check_node(n);
        const auto& slots = d.nodes()[n].slots;
        bool kink = false;
        for (int s = 0; s < 4; ++s)
            kink = kink || slots[s] == slots[(s + 1) % 4];
        if (!kink)
            throw InvalidArgument("crossing " + std::to_string(n) + " is not a kink");
        return remove_crossings(d, {n});
    }
    case MoveKind::r2_remove: {
        const int i = m.args.at(0);
        const int j = m.args.at(1);
        check_node(i);
        check_node(j);
        for (int s = 0; s < 4; ++s) {
            auto darts = face_darts(d, {i, s});
            if (auto p = valid_bigon(d, darts); p && p->first == std::min(i, j) && p->second == std::max(i, j))
                return remove_crossings(d, {i, j});
        }
        throw InvalidArgument("no removable bigon between crossings " + std::to_string(i) + " and "
                              + std::to_string(j));
    }
    case MoveKind::r3: {
        const HalfEdge start{m.args.at(0), m.args.at(1)};
        check_node(start.node);
        check_slot(start.slot);
        const auto t = valid_triangle(d, face_darts(d, start));
        if (!t)
            throw InvalidArgument("dart does not bound a movable triangle");
        auto nodes = nodes_of(l);
        const auto& old = d.nodes();
        // Each line's two crossings trade places: the triangle-side slot takes the
        // external edge that the other crossing had on this line, and the external
        // slot takes the (reused) triangle-side label.
        for (int k = 0; k < 3; ++k) {
            const int first = t->node[k];
            const int second = t->node[(k + 1) % 3];
            const int s1 = t->out_slot[k];
            const int s2 = t->in_slot[k];
            const EdgeLabel side = old[first].slots[s1];
            const EdgeLabel ext_first = old[first].slots[(s1 + 2) % 4];
            const EdgeLabel ext_second = old[second].slots[(s2 + 2) % 4];
            nodes[first].slots[s1] = ext_second;
            nodes[first].slots[(s1 + 2) % 4] = side;
            nodes[second].slots[s2] = ext_first;
            nodes[second].slots[(s2 + 2) % 4] = side;
        }
        return LinkDiagram(ChDiagram(std::move(nodes), d.circles()));
    }
    case MoveKind::r2_create: {
        const HalfEdge de{m.args.at(0), m.args.at(1)};
        const HalfEdge df{m.args.at(2), m.args.at(3)};
        const bool e_over = m.args.at(4) != 0;
        check_node(de.node);
        check_node(df.node);
        check_slot(de.slot);
        check_slot(df.slot);
        const auto fm = faces(d);
        if (fm.dart_face[de.node * 4 + de.slot] != fm.dart_face[df.node * 4 + df.slot])
            throw InvalidArgument("R2 creation darts are not on a common face");
        if (d.edge_at(de) == d.edge_at(df))
            throw InvalidArgument("R2 creation needs two distinct edges");

        const HalfEdge e_head = d.opposite_end(de);
        const HalfEdge f_head = d.opposite_end(df);
        const EdgeLabel e = d.nodes()[de.node].slots[de.slot];
        const EdgeLabel f = d.nodes()[df.node].slots[df.slot];
        const EdgeLabel e_mid = fresh_label(d);
        const EdgeLabel e_end = e_mid + 1;
        const EdgeLabel f_mid = e_mid + 2;
        const EdgeLabel f_end = e_mid + 3;

        auto nodes = nodes_of(l);
        nodes[e_head.node].slots[e_head.slot] = e_end;
        nodes[f_head.node].slots[f_head.slot] = f_end;
        // The finger of e enters the face at c1, crosses f, and returns at c2.
        Node c1{NodeKind::crossing, {f_mid, e_mid, f_end, e}};
        Node c2{NodeKind::crossing, {f, e_mid, f_mid, e_end}};
        if (!e_over) {
            c1.slots = {e_mid, f_end, e, f_mid};
            c2.slots = {e_mid, f_mid, e_end, f};
        }
        nodes.push_back(c1);
        nodes.push_back(c2);
        return LinkDiagram(ChDiagram(std::move(nodes), d.circles()));
    }
    }
    throw InvalidArgument("unknown move");
}

LinkDiagram replay(const LinkDiagram& l, const std::vector<Move>& trace)
{
    LinkDiagram current = l;
    for (const auto& m : trace)
        current = apply_move(current, m);
    return current;
}

std::string canonical_key(const LinkDiagram& l)
{
    const auto& d = l.diagram();
    const int n = static_cast<int>(d.nodes().size());
    detail::UnionFind comps(static_cast<std::size_t>(n));
    for (std::size_t e = 0; e < d.edge_count(); ++e)
        comps.unite(static_cast<std::size_t>(d.ends(e).tail.node), static_cast<std::size_t>(d.ends(e).head.node));

    std::map<std::size_t, std::string> best;
    for (int start = 0; start < n; ++start)
        for (int offset = 0; offset < 4; ++offset) {
            std::vector<int> order;
            std::vector<int> id(static_cast<std::size_t>(n), -1);
            std::vector<int> rot(static_cast<std::size_t>(n), 0);
            std::map<std::size_t, int> edge_id;
            id[start] = 0;
            rot[start] = offset;
            order.push_back(start);
            std::string code;
            for (std::size_t k = 0; k < order.size(); ++k) {
                const int u = order[k];
                code += static_cast<char>('0' + rot[u] % 2);
                for (int i = 0; i < 4; ++i) {
                    const int s = (rot[u] + i) % 4;
                    const std::size_t e = d.edge_at({u, s});
                    auto [it, fresh] = edge_id.emplace(e, static_cast<int>(edge_id.size()));
                    code += ',' + std::to_string(it->second);
                    const HalfEdge there = d.opposite_end({u, s});
                    if (id[there.node] < 0) {
                        id[there.node] = static_cast<int>(order.size());
                        rot[there.node] = there.slot;
                        order.push_back(there.node);
                    }
                }
                code += ';';
            }
            auto& slot = best[comps.find(static_cast<std::size_t>(start))];
            if (slot.empty() || code < slot)
                slot = code;
        }
    std::vector<std::string> parts;
    for (auto& [root, code] : best)
        parts.push_back(code);
    std::sort(parts.begin(), parts.end());
    std::string key = "c" + std::to_string(d.circles()) + "|";
    for (const auto& p : parts)
        key += p + "|";
    return key;
}

namespace {

/// Applies R1 removals, then R2 removals, until neither applies or the budget runs out.
void reduce_greedily(LinkDiagram& current, std::vector<Move>& trace, long& used, long budget)
{
    while (used < budget && current.crossing_count() > 0) {
        auto moves = r1_removals(current);
        if (moves.empty())
            moves = r2_removals(current);
        if (moves.empty())
            return;
        current = apply_move(current, moves.front());
        trace.push_back(moves.front());
        ++used;
    }
}

long long power(long long base, int exp)
{
    long long r = 1;
    while (exp-- > 0)
        r *= base;
    return r;
}

}  // namespace

SimplificationResult is_unlink(const LinkDiagram& l, long budget)
{
    if (budget <= 0)
        throw InvalidArgument("simplification budget must be positive, got " + std::to_string(budget));

    SimplificationResult result;
    result.components = count_components(l);
    const auto r3 = make_symmetric_quandle(make_dihedral(3), GoodInvolution::identity(3));
    result.fox3_count = static_cast<long long>(count_colorings(l.diagram(), r3, make_trivial_action(r3)));
    result.fox3_unlink_count = power(3, result.components);

    LinkDiagram current = l;
    long used = 0;
    reduce_greedily(current, result.trace, used, budget);

    if (current.crossing_count() > 0 && result.fox3_count == result.fox3_unlink_count) {
        // Breadth-first search for a configuration that reduces below the current size.
        while (current.crossing_count() > 0 && used < budget) {
            const std::size_t base = current.crossing_count();
            std::set<std::string> seen{canonical_key(current)};
            std::deque<std::pair<LinkDiagram, std::vector<Move>>> queue;
            queue.emplace_back(current, std::vector<Move>{});
            bool progressed = false;
            while (!queue.empty() && used < budget && !progressed) {
                auto [state, path] = std::move(queue.front());
                queue.pop_front();
                auto moves = r3_moves(state);
                if (state.crossing_count() <= base) {
                    auto more = r2_creations(state);
                    moves.insert(moves.end(), more.begin(), more.end());
                }
                for (const auto& m : moves) {
                    if (used >= budget)
                        break;
                    ++used;
                    LinkDiagram next = apply_move(state, m);
                    if (!seen.insert(canonical_key(next)).second)
                        continue;
                    auto next_path = path;
                    next_path.push_back(m);

                    LinkDiagram reduced = next;
                    std::vector<Move> reductions;
                    long probe = 0;
                    reduce_greedily(reduced, reductions, probe, budget);
                    if (reduced.crossing_count() < base) {
                        current = reduced;
                        result.trace.insert(result.trace.end(), next_path.begin(), next_path.end());
                        result.trace.insert(result.trace.end(), reductions.begin(), reductions.end());
                        used += probe;
                        progressed = true;
                        break;
                    }
                    queue.emplace_back(std::move(next), std::move(next_path));
                }
            }
            if (!progressed)
                break;
            reduce_greedily(current, result.trace, used, budget);
        }
    }

    result.budget_used = used;
    result.final_crossings = static_cast<int>(current.crossing_count());
    if (current.crossing_count() == 0)
        result.verdict = UnlinkVerdict::unlink;
    else if (result.fox3_count != result.fox3_unlink_count)
        result.verdict = UnlinkVerdict::not_unlink;
    else
        result.verdict = UnlinkVerdict::unknown;
    return result;
}

AdmissibilityResult is_admissible(const ChDiagram& d, long budget)
{
    AdmissibilityResult r;
    r.minus = is_unlink(smooth(d, Smoothing::minus), budget);
    r.plus = is_unlink(smooth(d, Smoothing::plus), budget);
    if (r.minus.verdict == UnlinkVerdict::unlink && r.plus.verdict == UnlinkVerdict::unlink)
        r.admissible = Admissibility::yes;
    else if (r.minus.verdict == UnlinkVerdict::not_unlink || r.plus.verdict == UnlinkVerdict::not_unlink)
        r.admissible = Admissibility::no;
    else
        r.admissible = Admissibility::unknown;
    return r;
}

}  // namespace symq
