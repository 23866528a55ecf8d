// symq: command-line front end. JSON report on stdout, summary on stderr.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "symq/algebra.hpp"
#include "symq/catalog.hpp"
#include "symq/coloring.hpp"
#include "symq/concordance.hpp"
#include "symq/diagram.hpp"
#include "symq/invariant.hpp"
#include "symq/simplify.hpp"

using json = nlohmann::json;
using namespace symq;

namespace {

constexpr int exit_ok = 0;
constexpr int exit_negative = 1;
constexpr int exit_input = 2;

std::string read_file(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw InvalidArgument("cannot read '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

/// FNV-1a, 64 bit.
struct Digest {
    std::uint64_t h = 1469598103934665603ull;

    void add(std::string_view s)
    {
        for (unsigned char c : s) {
            h ^= c;
            h *= 1099511628211ull;
        }
        h ^= 0xff;  // field separator
        h *= 1099511628211ull;
    }

    std::string hex() const
    {
        std::ostringstream ss;
        ss << std::hex;
        ss.width(16);
        ss.fill('0');
        ss << h;
        return ss.str();
    }
};

struct Options {
    std::string diagram;
    std::string catalog_name;
    std::string quandle = "dihedral:3";
    std::string involution = "identity";
    std::string action = "trivial";
    std::string over = "along";
    bool count = false;
    bool list = false;
    bool first = false;
    bool brute_force = false;
    long budget = 2000;
    double cap = default_brute_force_cap;
    bool strict = false;
    bool json_only = false;
    std::string sign = "minus";
    std::string upper;
    std::string lower;
    std::string cocycle;
    std::string triples;
    std::string upper_triples;
    std::string lower_triples;
    std::string method = "coloring";
    std::string name;
};

class Session {
public:
    explicit Session(const Options& o) : o_(o) {}

    json report(const std::string& command, json result)
    {
        json r;
        r["command"] = command;
        r["inputs_digest"] = digest_.hex();
        r["result"] = std::move(result);
        r["warnings"] = warnings_;
        return r;
    }

    void note(const std::string& text) { digest_.add(text); }
    void warn(const std::string& text) { warnings_.push_back(text); }

    ChDiagram diagram_from(const std::string& file_or_name)
    {
        if (std::filesystem::exists(file_or_name) && std::filesystem::is_regular_file(file_or_name)) {
            const auto text = read_file(file_or_name);
            note(text);
            auto d = parse_chd(text);
            return d.name().empty() ? ChDiagram(d.nodes(), d.circles(), file_or_name) : d;
        }
        const auto& e = catalog::entry(file_or_name);
        const auto text = read_file(catalog::directory() + "/" + e.file);
        note(text);
        auto d = parse_chd(text);
        return d.name().empty() ? ChDiagram(d.nodes(), d.circles(), e.name) : d;
    }

    ChDiagram diagram()
    {
        if (!o_.diagram.empty() && !o_.catalog_name.empty())
            throw InvalidArgument("give either --diagram or --catalog, not both");
        if (!o_.catalog_name.empty()) {
            catalog::entry(o_.catalog_name);  // reject files named like entries
            return diagram_from(o_.catalog_name);
        }
        if (o_.diagram.empty())
            throw InvalidArgument("a diagram is required (--diagram FILE or --catalog NAME)");
        if (!std::filesystem::exists(o_.diagram))
            throw InvalidArgument("cannot read '" + o_.diagram + "'");
        return diagram_from(o_.diagram);
    }

    FiniteQuandle quandle()
    {
        note(o_.quandle);
        if (o_.quandle.rfind("file:", 0) == 0)
            note(read_file(o_.quandle.substr(5)));
        return parse_quandle_spec(o_.quandle);
    }

    SymmetricQuandle symmetric_quandle()
    {
        auto q = quandle();
        note(o_.involution);
        auto rho = parse_involution_spec(o_.involution, q.size());
        return make_symmetric_quandle(std::move(q), std::move(rho));
    }

    QuandleAction action(const SymmetricQuandle& sq)
    {
        note(o_.action);
        if (o_.action == "trivial")
            return make_trivial_action(sq);
        if (o_.action == "regular")
            return make_regular_action(sq);
        throw InvalidArgument("unknown action '" + o_.action + "' (expected trivial or regular)");
    }

    ConstraintOptions constraint_options()
    {
        note(o_.over);
        ConstraintOptions c;
        if (o_.over == "along")
            c.over = OverConvention::normal_along_travel;
        else if (o_.over == "against")
            c.over = OverConvention::normal_against_travel;
        else
            throw InvalidArgument("unknown over convention '" + o_.over + "' (expected along or against)");
        return c;
    }

private:
    const Options& o_;
    Digest digest_;
    std::vector<std::string> warnings_;
};

json violations_json(const VerificationReport& r)
{
    json out = json::array();
    for (const auto& f : r.failures)
        out.push_back({{"axiom", f.axiom}, {"witness", f.witness}});
    return out;
}

json coloring_json(const Coloring& c, const ChDiagram& d)
{
    json edges = json::object();
    for (std::size_t i = 0; i < c.edge_colors.size(); ++i) {
        const std::string key = i < d.edge_count() ? std::to_string(d.label_of(i))
                                                   : "circle" + std::to_string(i - d.edge_count());
        edges[key] = c.edge_colors[i];
    }
    json out = {{"edges", edges}};
    if (!c.region_colors.empty())
        out["regions"] = c.region_colors;
    return out;
}

json simplification_json(const SimplificationResult& s)
{
    json trace = json::array();
    for (const auto& m : s.trace)
        trace.push_back(describe(m));
    return {{"verdict", to_string(s.verdict)},
            {"components", s.components},
            {"budget_used", s.budget_used},
            {"final_crossings", s.final_crossings},
            {"fox3_count", s.fox3_count},
            {"fox3_unlink_count", s.fox3_unlink_count},
            {"trace", trace}};
}

json surface_json(const ChDiagram& d)
{
    json comps = json::array();
    for (const auto& c : surface_components(d))
        comps.push_back({{"euler_characteristic", c.euler_characteristic},
                         {"orientable", c.orientable},
                         {"signed_genus", c.signed_genus()},
                         {"vertices", c.vertices}});
    return comps;
}

struct Outcome {
    json result;
    bool negative = false;
    std::string summary;
};

Outcome cmd_verify_quandle(Session& s, const Options& o, bool with_involution, bool with_action)
{
    auto q = s.quandle();
    json r;
    r["size"] = q.size();
    const auto qr = verify_quandle(q);
    r["quandle"] = {{"pass", qr.pass()}, {"failed_axioms", qr.failed_axioms()}, {"violations", violations_json(qr)}};
    bool ok = qr.pass();
    std::string summary = "quandle of order " + std::to_string(q.size()) + ": " + (qr.pass() ? "ok" : "FAILS");
    if (with_involution) {
        s.note(o.involution);
        SymmetricQuandle sq{q, parse_involution_spec(o.involution, q.size())};
        const auto ir = verify_good_involution(sq);
        r["involution"] = {{"table", sq.involution.table()},
                           {"pass", ir.pass()},
                           {"failed_axioms", ir.failed_axioms()},
                           {"violations", violations_json(ir)},
                           {"fixed_points", fixed_points(sq.involution)}};
        ok = ok && ir.pass();
        summary += std::string(", involution: ") + (ir.pass() ? "good" : "NOT good");
        if (with_action && qr.pass() && ir.pass()) {
            const auto act = s.action(sq);
            const auto ar = verify_action(sq, act);
            r["action"] = {{"name", o.action},
                           {"size", act.size()},
                           {"pass", ar.pass()},
                           {"failed_axioms", ar.failed_axioms()},
                           {"violations", violations_json(ar)}};
            ok = ok && ar.pass();
            summary += std::string(", action: ") + (ar.pass() ? "ok" : "FAILS");
        }
    }
    r["pass"] = ok;
    return {r, !ok, summary};
}

Outcome cmd_involutions(Session& s)
{
    auto q = s.quandle();
    if (!verify_quandle(q).pass())
        throw InvalidArgument("not a quandle; run verify-quandle for details");
    json list = json::array();
    for (const auto& rho : enumerate_good_involutions(q))
        list.push_back({{"table", rho.table()}, {"fixed_points", fixed_points(rho)}});
    const auto n = list.size();
    return {{{"size", q.size()}, {"count", n}, {"involutions", list}}, false,
            std::to_string(n) + " good involution(s) of a quandle of order " + std::to_string(q.size())};
}

Outcome cmd_color(Session& s, const Options& o)
{
    const auto d = s.diagram();
    const auto sq = s.symmetric_quandle();
    const auto act = s.action(sq);
    const auto cs = build_constraints(d, sq, act, s.constraint_options());
    s.note(o.brute_force ? "brute" : "search");

    json r;
    r["diagram"] = d.name();
    r["edge_variables"] = cs.edge_vars;
    r["region_variables"] = cs.face_vars;
    r["relations"] = cs.relations.size();
    std::vector<Coloring> sols;
    std::uint64_t count = 0;
    if (o.brute_force) {
        sols = brute_force_all(cs, sq, act, o.cap);
        count = sols.size();
    }
    else if (o.list) {
        sols = solve_all(cs, sq, act);
        count = sols.size();
    }
    else if (o.first) {
        for_each_solution(cs, sq, act, [&](const Coloring& c) {
            sols.push_back(c);
            return false;
        });
    }
    else {
        count = count_solutions(cs, sq, act);
    }

    if (o.first) {
        r["first"] = sols.empty() ? json(nullptr) : coloring_json(sols.front(), d);
        r["colorable"] = !sols.empty();
        return {r, sols.empty(), sols.empty() ? "no coloring" : "found a coloring"};
    }
    r["count"] = count;
    if (o.list || o.brute_force) {
        json list = json::array();
        std::uint64_t nontrivial = 0;
        for (const auto& c : sols) {
            list.push_back(coloring_json(c, d));
            if (!is_monochromatic_fixed_point(c, sq))
                ++nontrivial;
        }
        r["colorings"] = list;
        r["non_trivial"] = nontrivial;
    }
    if (act.size() > 1 && d.crossing_count() + d.vertex_count() > 0) {
        FaceMap fm = faces(d);
        if (fm.outer_faces_unmerged)
            s.warn("diagram is disconnected; each component's outer face is a separate region variable");
    }
    return {r, count == 0, d.name() + ": " + std::to_string(count) + " coloring(s)"};
}

Outcome cmd_smooth(Session& s, const Options& o)
{
    const auto d = s.diagram();
    s.note(o.sign);
    Smoothing sign;
    if (o.sign == "minus")
        sign = Smoothing::minus;
    else if (o.sign == "plus")
        sign = Smoothing::plus;
    else
        throw InvalidArgument("--sign must be minus or plus");
    const auto l = smooth(d, sign);
    const int mu = count_components(l);
    return {{{"diagram", d.name()},
             {"sign", o.sign},
             {"components", mu},
             {"crossings", l.crossing_count()},
             {"chd", to_chd(l.diagram())}},
            false,
            "L" + std::string(sign == Smoothing::minus ? "-" : "+") + " has " + std::to_string(mu)
                + " component(s), " + std::to_string(l.crossing_count()) + " crossing(s)"};
}

Outcome cmd_admissible(Session& s, const Options& o)
{
    const auto d = s.diagram();
    s.note(std::to_string(o.budget));
    const auto a = is_admissible(d, o.budget);
    return {{{"diagram", d.name()},
             {"budget", o.budget},
             {"admissible", to_string(a.admissible)},
             {"minus", simplification_json(a.minus)},
             {"plus", simplification_json(a.plus)}},
            a.admissible != Admissibility::yes,
            d.name() + ": admissible = " + to_string(a.admissible)};
}

Outcome cmd_euler(Session& s)
{
    const auto d = s.diagram();
    const int chi = euler_characteristic(d);
    return {{{"diagram", d.name()},
             {"euler_characteristic", chi},
             {"ch_index", ch_index(d)},
             {"crossings", d.crossing_count()},
             {"vertices", d.vertex_count()},
             {"minus_components", count_components(smooth(d, Smoothing::minus))},
             {"plus_components", count_components(smooth(d, Smoothing::plus))},
             {"surface_components", surface_json(d)}},
            false,
            d.name() + ": chi = " + std::to_string(chi) + ", ch-index = " + std::to_string(ch_index(d))};
}

CocycleTable load_cocycle(Session& s, const std::string& path)
{
    if (path.empty())
        throw InvalidArgument("--cocycle FILE is required");
    const auto text = read_file(path);
    s.note(text);
    auto phi = parse_cocycle_csv(text);
    s.warn("cocycle condition not verified; weights are only invariants if the table is a cocycle");
    if (phi.missing_entries() > 0)
        s.warn(std::to_string(phi.missing_entries()) + " cocycle entries not given; treated as 0");
    return phi;
}

WeightMultiset load_multiset(Session& s, const CocycleTable& phi, const std::string& path, json& detail)
{
    if (path.empty())
        throw InvalidArgument("a triple-point file is required");
    const auto text = read_file(path);
    s.note(text);
    const auto per = parse_triples_csv(text);
    json weights = json::object();
    for (const auto& [id, triples] : per)
        weights[id] = weight_of_coloring(triples, phi);
    const auto ms = phi_multiset(per, phi);
    json hist = json::array();
    for (const auto& [v, m] : ms.histogram())
        hist.push_back({{"value", v}, {"multiplicity", m}});
    detail = {{"weights", weights}, {"multiset", ms.values()}, {"histogram", hist}};
    return ms;
}

Outcome cmd_weights(Session& s, const Options& o)
{
    const auto phi = load_cocycle(s, o.cocycle);
    json detail;
    const auto ms = load_multiset(s, phi, o.triples, detail);
    detail["modulus"] = phi.modulus();
    return {detail, false, std::to_string(ms.size()) + " weight(s) over modulus " + std::to_string(phi.modulus())};
}

json obstruction_json(const ObstructionReport& r)
{
    json j = {{"relation", r.upper + " > " + r.lower},
              {"upper", r.upper},
              {"lower", r.lower},
              {"method", to_string(r.method)},
              {"verdict", to_string(r.verdict)},
              {"note", r.note}};
    if (r.method == ObstructionMethod::coloring) {
        j["upper_count"] = r.upper_count;
        j["lower_count"] = r.lower_count;
        j["upper_only_trivial"] = r.upper_only_trivial;
        j["lower_only_trivial"] = r.lower_only_trivial;
    }
    else {
        j["excess_value"] = r.excess_value ? json(*r.excess_value) : json(nullptr);
        j["upper_multiplicity"] = r.upper_multiplicity;
        j["lower_multiplicity"] = r.lower_multiplicity;
    }
    return j;
}

Outcome cmd_obstruct(Session& s, const Options& o)
{
    s.note(o.method);
    ObstructionReport r;
    json extra;
    if (o.method == "coloring") {
        if (o.upper.empty() || o.lower.empty())
            throw InvalidArgument("--upper and --lower are required");
        const auto d1 = s.diagram_from(o.upper);
        const auto d0 = s.diagram_from(o.lower);
        const auto sq = s.symmetric_quandle();
        const auto act = s.action(sq);
        r = coloring_obstruction(d1, d0, sq, act);
        const auto k = kinoshita_check(sq);
        extra = {{"fixed_point_free", k.fixed_point_free}, {"fixed_points", k.fixed_points}, {"advisory", k.advisory}};
    }
    else if (o.method == "cocycle") {
        const auto phi = load_cocycle(s, o.cocycle);
        json up, down;
        const auto m1 = load_multiset(s, phi, o.upper_triples, up);
        const auto m0 = load_multiset(s, phi, o.lower_triples, down);
        r = cocycle_obstruction(m1, m0);
        r.upper = o.upper.empty() ? o.upper_triples : o.upper;
        r.lower = o.lower.empty() ? o.lower_triples : o.lower;
        extra = {{"upper_multiset", up["multiset"]}, {"lower_multiset", down["multiset"]}};
    }
    else
        throw InvalidArgument("--method must be coloring or cocycle");
    json j = obstruction_json(r);
    j["details"] = extra;
    return {j, r.obstructed(), r.upper + " > " + r.lower + ": " + to_string(r.verdict)};
}

Outcome cmd_catalog(Session& s, const Options& o)
{
    json list = json::array();
    for (const auto& e : catalog::entries()) {
        if (!o.name.empty() && e.name != o.name)
            continue;
        json j = {{"name", e.name},
                  {"file", e.file},
                  {"ch_index", e.ch_index},
                  {"euler_characteristic", e.euler_characteristic},
                  {"signed_genera", e.signed_genera},
                  {"classical", e.classical},
                  {"admissibility_budget", e.admissibility_budget},
                  {"provenance", e.provenance}};
        if (!o.name.empty())
            j["chd"] = to_chd(s.diagram_from(e.name));
        list.push_back(j);
    }
    if (!o.name.empty() && list.empty())
        catalog::entry(o.name);  // throws with the list of known names
    return {{{"directory", catalog::directory()}, {"entries", list}}, false,
            std::to_string(list.size()) + " catalog entr" + (list.size() == 1 ? "y" : "ies")};
}

void add_diagram_flags(CLI::App* c, Options& o)
{
    c->add_option("--diagram", o.diagram, "ch-diagram file (.chd)");
    c->add_option("--catalog", o.catalog_name, "catalog entry name");
}

void add_algebra_flags(CLI::App* c, Options& o, bool with_action = true)
{
    c->add_option("--quandle", o.quandle, "dihedral:<n> | trivial:<n> | file:<path>")->capture_default_str();
    c->add_option("--involution", o.involution, "identity | antipodal | table:<p0,p1,...>")->capture_default_str();
    if (with_action)
        c->add_option("--action", o.action, "region set: trivial | regular")->capture_default_str();
}

}  // namespace

int main(int argc, char** argv)
{
    Options o;
    CLI::App app{"symq: symmetric quandle colorings of ch-diagrams"};
    app.require_subcommand(1);
    app.fallthrough();
    app.add_flag("--strict", o.strict, "exit 1 on negative verdicts");
    app.add_flag("--json-only", o.json_only, "no summary on stderr");

    auto* vq = app.add_subcommand("verify-quandle", "check quandle, involution and action axioms");
    add_algebra_flags(vq, o);
    auto* inv = app.add_subcommand("involutions", "list the good involutions of a quandle");
    inv->add_option("--quandle", o.quandle, "dihedral:<n> | trivial:<n> | file:<path>")->capture_default_str();

    auto* color = app.add_subcommand("color", "count or list colorings");
    add_diagram_flags(color, o);
    add_algebra_flags(color, o);
    auto* mode = color->add_option_group("mode");
    mode->add_flag("--count", o.count, "count colorings (default)");
    mode->add_flag("--list", o.list, "list every coloring");
    mode->add_flag("--first", o.first, "first coloring only");
    mode->add_flag("--brute-force", o.brute_force, "exhaustive enumeration (checked against --cap)");
    mode->require_option(0, 1);
    color->add_option("--cap", o.cap, "largest search space for --brute-force")->capture_default_str();
    color->add_option("--over", o.over, "over-strand normal convention: along | against")->capture_default_str();

    auto* sm = app.add_subcommand("smooth", "resolve every marked vertex");
    add_diagram_flags(sm, o);
    sm->add_option("--sign", o.sign, "minus | plus")->capture_default_str();

    auto* adm = app.add_subcommand("admissible", "check that both smoothings are unlinks");
    add_diagram_flags(adm, o);
    adm->add_option("--budget", o.budget, "moves explored per smoothing")->capture_default_str()->check(
        CLI::PositiveNumber);

    auto* eu = app.add_subcommand("euler", "Euler characteristic and surface components");
    add_diagram_flags(eu, o);

    auto* w = app.add_subcommand("weights", "weight multiset from triple-point colors and a cocycle table");
    w->add_option("--cocycle", o.cocycle, "cocycle CSV")->required();
    w->add_option("--triples", o.triples, "triple-point CSV")->required();

    auto* ob = app.add_subcommand("obstruct", "test a candidate relation upper > lower");
    ob->add_option("--upper", o.upper, ".chd file or catalog name");
    ob->add_option("--lower", o.lower, ".chd file or catalog name");
    add_algebra_flags(ob, o);
    ob->add_option("--method", o.method, "coloring | cocycle")->capture_default_str();
    ob->add_option("--cocycle", o.cocycle, "cocycle CSV (cocycle method)");
    ob->add_option("--upper-triples", o.upper_triples, "triple-point CSV of the upper link");
    ob->add_option("--lower-triples", o.lower_triples, "triple-point CSV of the lower link");

    auto* cat = app.add_subcommand("catalog", "list catalog entries");
    cat->add_option("--name", o.name, "show one entry with its diagram");

    try {
        app.parse(argc, argv);
    }
    catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    }
    catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    }
    catch (const CLI::ParseError& e) {
        app.exit(e);
        return exit_input;
    }

    Session session(o);
    for (int i = 1; i < argc; ++i)
        session.note(argv[i]);

    try {
        Outcome out;
        std::string command;
        if (*vq) {
            command = "verify-quandle";
            out = cmd_verify_quandle(session, o, vq->count("--involution") > 0 || vq->count("--action") > 0,
                                     vq->count("--action") > 0);
        }
        else if (*inv) {
            command = "involutions";
            out = cmd_involutions(session);
        }
        else if (*color) {
            command = "color";
            out = cmd_color(session, o);
        }
        else if (*sm) {
            command = "smooth";
            out = cmd_smooth(session, o);
        }
        else if (*adm) {
            command = "admissible";
            out = cmd_admissible(session, o);
        }
        else if (*eu) {
            command = "euler";
            out = cmd_euler(session);
        }
        else if (*w) {
            command = "weights";
            out = cmd_weights(session, o);
        }
        else if (*ob) {
            command = "obstruct";
            out = cmd_obstruct(session, o);
        }
        else {
            command = "catalog";
            out = cmd_catalog(session, o);
        }
        std::cout << session.report(command, out.result).dump(2) << '\n';
        if (!o.json_only)
            std::cerr << out.summary << '\n';
        return o.strict && out.negative ? exit_negative : exit_ok;
    }
    catch (const std::exception& e) {
        std::cerr << "symq: error: " << e.what() << '\n';
        return exit_input;
    }
}
