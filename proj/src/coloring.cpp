#include "symq/coloring.hpp"

#include <algorithm>
#include <cmath>

namespace symq {

std::string to_string(RelationOrigin o)
{
    switch (o) {
    case RelationOrigin::over_strand: return "over";
    case RelationOrigin::under_strand: return "under";
    case RelationOrigin::vertex: return "vertex";
    case RelationOrigin::region: return "region";
    }
    return "?";
}

ConstraintSystem build_constraints(const ChDiagram& d, const SymmetricQuandle& sq, const QuandleAction& action,
                                   const ConstraintOptions& options)
{
    if (action.quandle_size() != sq.size())
        throw InvalidArgument("action and quandle sizes differ");
    ConstraintSystem cs;
    cs.edge_vars = static_cast<int>(d.edge_variable_count());
    const bool regions = options.regions.value_or(action.size() > 1);

    auto in = [&](int n, int s) {
        const HalfEdge h{n, s};
        return Term{static_cast<int>(d.edge_at(h)), !d.is_head(h)};
    };
    auto out = [&](int n, int s) {
        const HalfEdge h{n, s};
        return Term{static_cast<int>(d.edge_at(h)), d.is_head(h)};
    };
    auto flip = [](Term t) {
        t.rho = !t.rho;
        return t;
    };

    for (int n = 0; n < static_cast<int>(d.nodes().size()); ++n) {
        if (d.nodes()[n].kind == NodeKind::crossing) {
            // Travelling d -> b along the over strand puts its normal along a -> c.
            const Term over = in(n, 3);
            cs.relations.push_back({RelationKind::equal, out(n, 1), over, {}, RelationOrigin::over_strand, n});
            const Term operand = options.over == OverConvention::normal_along_travel ? over : flip(over);
            cs.relations.push_back(
                {RelationKind::operation, out(n, 2), in(n, 0), operand, RelationOrigin::under_strand, n});
        }
        else {
            const Term base = in(n, 0);
            cs.relations.push_back({RelationKind::equal, in(n, 2), base, {}, RelationOrigin::vertex, n});
            cs.relations.push_back({RelationKind::equal, in(n, 1), flip(base), {}, RelationOrigin::vertex, n});
            cs.relations.push_back({RelationKind::equal, in(n, 3), flip(base), {}, RelationOrigin::vertex, n});
        }
    }

    if (regions) {
        const FaceMap fm = faces(d);
        cs.face_vars = fm.face_count;
        for (int e = 0; e < cs.edge_vars; ++e)
            cs.relations.push_back({RelationKind::action,
                                    {cs.edge_vars + fm.left[e], false},
                                    {cs.edge_vars + fm.right[e], false},
                                    {e, false},
                                    RelationOrigin::region,
                                    e});
    }
    (void)sq;
    return cs;
}

namespace {

class Evaluator {
public:
    Evaluator(const ConstraintSystem& cs, const SymmetricQuandle& sq, const QuandleAction& action)
        : cs_(cs), sq_(sq), action_(action)
    {
    }

    int domain(int var) const
    {
        return static_cast<int>(cs_.is_edge_var(var) ? sq_.size() : action_.size());
    }

    Element read(Term t, Element raw) const { return t.rho ? sq_.rho(raw) : raw; }
    // Inverse of read: the raw value whose reading is `v` (ρ is an involution).
    Element write(Term t, Element v) const { return t.rho ? sq_.rho(v) : v; }

    Element apply(const Relation& r, Element src, Element param) const
    {
        switch (r.kind) {
        case RelationKind::equal: return src;
        case RelationKind::operation: return sq_.op(src, param);
        case RelationKind::action: return action_.act(src, param);
        }
        return -1;
    }

    Element unapply(const Relation& r, Element target, Element param) const
    {
        switch (r.kind) {
        case RelationKind::equal: return target;
        case RelationKind::operation: return sq_.op_inv(target, param);
        case RelationKind::action: return action_.act_inv(target, param);
        }
        return -1;
    }

private:
    const ConstraintSystem& cs_;
    const SymmetricQuandle& sq_;
    const QuandleAction& action_;
};

bool holds(const Evaluator& ev, const Relation& r, const std::vector<Element>& values)
{
    const Element src = ev.read(r.source, values[r.source.var]);
    const Element param = r.kind == RelationKind::equal ? 0 : ev.read(r.param, values[r.param.var]);
    return ev.read(r.target, values[r.target.var]) == ev.apply(r, src, param);
}

Coloring to_coloring(const ConstraintSystem& cs, const std::vector<Element>& values)
{
    Coloring c;
    c.edge_colors.assign(values.begin(), values.begin() + cs.edge_vars);
    c.region_colors.assign(values.begin() + cs.edge_vars, values.end());
    return c;
}

/// Backtracking search with unit propagation over functional relations.
class Search {
public:
    Search(const ConstraintSystem& cs, const SymmetricQuandle& sq, const QuandleAction& action)
        : cs_(cs), ev_(cs, sq, action), values_(cs.variable_count(), -1), watches_(cs.variable_count())
    {
        for (int i = 0; i < static_cast<int>(cs.relations.size()); ++i) {
            const auto& r = cs.relations[i];
            watches_[r.target.var].push_back(i);
            if (r.source.var != r.target.var)
                watches_[r.source.var].push_back(i);
            if (r.kind != RelationKind::equal && r.param.var != r.target.var && r.param.var != r.source.var)
                watches_[r.param.var].push_back(i);
        }
    }

    // Visitor receives the full assignment; returns false to stop.
    template <typename Visit>
    void run(Visit&& visit)
    {
        stop_ = false;
        descend(0, visit);
    }

private:
    bool assign(int var, Element value)
    {
        values_[var] = value;
        trail_.push_back(var);
        queue_.push_back(var);
        return true;
    }

    bool propagate()
    {
        while (!queue_.empty()) {
            const int var = queue_.back();
            queue_.pop_back();
            for (int ri : watches_[var]) {
                const auto& r = cs_.relations[ri];
                const bool has_t = values_[r.target.var] >= 0;
                const bool has_s = values_[r.source.var] >= 0;
                const bool has_p = r.kind == RelationKind::equal || values_[r.param.var] >= 0;
                const Element param = r.kind == RelationKind::equal ? 0 : (has_p ? ev_.read(r.param, values_[r.param.var]) : -1);
                if (has_s && has_p) {
                    const Element want = ev_.apply(r, ev_.read(r.source, values_[r.source.var]), param);
                    if (has_t) {
                        if (ev_.read(r.target, values_[r.target.var]) != want)
                            return false;
                    }
                    else
                        assign(r.target.var, ev_.write(r.target, want));
                }
                else if (has_t && has_p) {
                    const Element src = ev_.unapply(r, ev_.read(r.target, values_[r.target.var]), param);
                    assign(r.source.var, ev_.write(r.source, src));
                }
            }
        }
        return true;
    }

    void undo_to(std::size_t mark)
    {
        while (trail_.size() > mark) {
            values_[trail_.back()] = -1;
            trail_.pop_back();
        }
        queue_.clear();
    }

    template <typename Visit>
    void descend(int from, Visit& visit)
    {
        int var = from;
        while (var < static_cast<int>(values_.size()) && values_[var] >= 0)
            ++var;
        if (var == static_cast<int>(values_.size())) {
            if (!visit(values_))
                stop_ = true;
            return;
        }
        const int dom = ev_.domain(var);
        for (Element v = 0; v < dom && !stop_; ++v) {
            const std::size_t mark = trail_.size();
            assign(var, v);
            if (propagate())
                descend(var + 1, visit);
            undo_to(mark);
        }
    }

    const ConstraintSystem& cs_;
    Evaluator ev_;
    std::vector<Element> values_;
    std::vector<std::vector<int>> watches_;
    std::vector<int> trail_;
    std::vector<int> queue_;
    bool stop_ = false;
};

}  // namespace

bool satisfies(const ConstraintSystem& cs, const SymmetricQuandle& sq, const QuandleAction& action,
               const Coloring& c)
{
    if (static_cast<int>(c.edge_colors.size()) != cs.edge_vars
        || static_cast<int>(c.region_colors.size()) != cs.face_vars)
        return false;
    std::vector<Element> values = c.edge_colors;
    values.insert(values.end(), c.region_colors.begin(), c.region_colors.end());
    Evaluator ev(cs, sq, action);
    for (int v = 0; v < cs.variable_count(); ++v)
        if (values[v] < 0 || values[v] >= ev.domain(v))
            return false;
    return std::all_of(cs.relations.begin(), cs.relations.end(),
                       [&](const Relation& r) { return holds(ev, r, values); });
}

void for_each_solution(const ConstraintSystem& cs, const SymmetricQuandle& sq, const QuandleAction& action,
                       const std::function<bool(const Coloring&)>& visit)
{
    Search search(cs, sq, action);
    search.run([&](const std::vector<Element>& values) { return visit(to_coloring(cs, values)); });
}

std::vector<Coloring> solve_all(const ConstraintSystem& cs, const SymmetricQuandle& sq, const QuandleAction& action)
{
    std::vector<Coloring> out;
    Search search(cs, sq, action);
    search.run([&](const std::vector<Element>& values) {
        out.push_back(to_coloring(cs, values));
        return true;
    });
    return out;
}

std::uint64_t count_solutions(const ConstraintSystem& cs, const SymmetricQuandle& sq, const QuandleAction& action)
{
    std::uint64_t count = 0;
    Search search(cs, sq, action);
    search.run([&](const std::vector<Element>&) {
        ++count;
        return true;
    });
    return count;
}

std::vector<Coloring> brute_force_all(const ConstraintSystem& cs, const SymmetricQuandle& sq,
                                      const QuandleAction& action, double cap)
{
    Evaluator ev(cs, sq, action);
    const int nvars = cs.variable_count();
    double space = 1.0;
    for (int v = 0; v < nvars; ++v)
        space *= ev.domain(v);
    if (space > cap)
        throw CapExceeded("brute force space " + std::to_string(space) + " exceeds cap " + std::to_string(cap));

    // Relations grouped by the last variable they mention.
    std::vector<std::vector<const Relation*>> closing(static_cast<std::size_t>(nvars));
    for (const auto& r : cs.relations) {
        int last = std::max(r.target.var, r.source.var);
        if (r.kind != RelationKind::equal)
            last = std::max(last, r.param.var);
        closing[last].push_back(&r);
    }

    std::vector<Coloring> out;
    std::vector<Element> values(static_cast<std::size_t>(nvars), 0);
    if (nvars == 0) {
        out.push_back(to_coloring(cs, values));
        return out;
    }
    // Iterative odometer over depth; depth k is the next variable to set.
    int depth = 0;
    values[0] = -1;
    while (depth >= 0) {
        if (++values[depth] >= ev.domain(depth)) {
            --depth;
            continue;
        }
        bool ok = true;
        for (const Relation* r : closing[depth])
            if (!holds(ev, *r, values)) {
                ok = false;
                break;
            }
        if (!ok)
            continue;
        if (depth + 1 == nvars) {
            out.push_back(to_coloring(cs, values));
            continue;
        }
        ++depth;
        values[depth] = -1;
    }
    return out;
}

std::uint64_t count_colorings(const ChDiagram& d, const SymmetricQuandle& sq, const QuandleAction& action,
                              const ConstraintOptions& options)
{
    return count_solutions(build_constraints(d, sq, action, options), sq, action);
}

bool is_monochromatic_fixed_point(const Coloring& c, const SymmetricQuandle& sq)
{
    if (c.edge_colors.empty())
        return false;
    const Element a = c.edge_colors.front();
    return sq.rho(a) == a
           && std::all_of(c.edge_colors.begin(), c.edge_colors.end(), [a](Element x) { return x == a; });
}

std::optional<Coloring> find_nontrivial_coloring(const ChDiagram& d, const SymmetricQuandle& sq,
                                                 const QuandleAction& action)
{
    std::optional<Coloring> found;
    for_each_solution(build_constraints(d, sq, action), sq, action, [&](const Coloring& c) {
        if (is_monochromatic_fixed_point(c, sq))
            return true;
        found = c;
        return false;
    });
    return found;
}

}  // namespace symq
