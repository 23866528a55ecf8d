#include "symq/algebra.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <numeric>
#include <sstream>

namespace symq {

namespace {

void check_range(const Table& t, std::size_t bound, const char* what)
{
    for (std::size_t r = 0; r < t.rows(); ++r)
        for (std::size_t c = 0; c < t.cols(); ++c)
            if (t(r, c) < 0 || static_cast<std::size_t>(t(r, c)) >= bound)
                throw MalformedTable(std::string(what) + ": entry (" + std::to_string(r) + "," + std::to_string(c)
                                     + ") = " + std::to_string(t(r, c)) + " out of range [0," + std::to_string(bound)
                                     + ")");
}

int parse_int(std::string_view s, const char* what)
{
    int value = 0;
    auto first = s.data();
    auto last = s.data() + s.size();
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc() || ptr != last)
        throw InvalidArgument(std::string("invalid integer in ") + what + ": '" + std::string(s) + "'");
    return value;
}

}  // namespace

Table Table::from_rows(const std::vector<std::vector<Element>>& rows)
{
    const std::size_t cols = rows.empty() ? 0 : rows.front().size();
    Table t(rows.size(), cols);
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != cols)
            throw MalformedTable("row " + std::to_string(r) + " has " + std::to_string(rows[r].size())
                                 + " entries, expected " + std::to_string(cols));
        for (std::size_t c = 0; c < cols; ++c)
            t(r, c) = rows[r][c];
    }
    return t;
}

std::vector<std::string> VerificationReport::failed_axioms() const
{
    std::vector<std::string> names;
    for (const auto& f : failures)
        if (std::find(names.begin(), names.end(), f.axiom) == names.end())
            names.push_back(f.axiom);
    return names;
}

FiniteQuandle::FiniteQuandle(Table op, Table op_inv) : op_(std::move(op)), op_inv_(std::move(op_inv))
{
    const std::size_t n = op_.rows();
    if (n == 0)
        throw MalformedTable("quandle table is empty");
    if (op_.cols() != n)
        throw MalformedTable("quandle table is not square");
    if (op_inv_.rows() != n || op_inv_.cols() != n)
        throw MalformedTable("inverse table shape does not match operation table");
    check_range(op_, n, "operation table");
    check_range(op_inv_, n, "inverse table");
}

FiniteQuandle FiniteQuandle::from_operation(Table op)
{
    const std::size_t n = op.rows();
    if (n == 0 || op.cols() != n)
        throw MalformedTable("quandle table must be non-empty and square");
    check_range(op, n, "operation table");
    Table inv(n, n, -1);
    for (std::size_t b = 0; b < n; ++b)
        for (std::size_t c = n; c-- > 0;)
            inv(static_cast<std::size_t>(op(c, b)), b) = static_cast<Element>(c);
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            if (inv(a, b) < 0)
                inv(a, b) = 0;
    return FiniteQuandle(std::move(op), std::move(inv));
}

GoodInvolution::GoodInvolution(std::vector<Element> rho) : rho_(std::move(rho)) {}

GoodInvolution GoodInvolution::identity(std::size_t n)
{
    std::vector<Element> rho(n);
    std::iota(rho.begin(), rho.end(), 0);
    return GoodInvolution(std::move(rho));
}

QuandleAction::QuandleAction(Table act, Table act_inv) : act_(std::move(act)), act_inv_(std::move(act_inv))
{
    if (act_.rows() == 0 || act_.cols() == 0)
        throw MalformedTable("action table is empty");
    if (act_inv_.rows() != act_.rows() || act_inv_.cols() != act_.cols())
        throw MalformedTable("action inverse table shape does not match action table");
    check_range(act_, act_.rows(), "action table");
    check_range(act_inv_, act_.rows(), "action inverse table");
}

FiniteQuandle make_dihedral(int n)
{
    if (n <= 0)
        throw InvalidArgument("dihedral quandle order must be positive, got " + std::to_string(n));
    const auto size = static_cast<std::size_t>(n);
    Table op(size, size);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            op(a, b) = ((2 * b - a) % n + n) % n;
    Table inv = op;
    return FiniteQuandle(std::move(op), std::move(inv));
}

FiniteQuandle make_trivial_quandle(int n)
{
    if (n <= 0)
        throw InvalidArgument("trivial quandle order must be positive, got " + std::to_string(n));
    const auto size = static_cast<std::size_t>(n);
    Table op(size, size);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            op(a, b) = a;
    Table inv = op;
    return FiniteQuandle(std::move(op), std::move(inv));
}

VerificationReport verify_quandle(const FiniteQuandle& q)
{
    VerificationReport report;
    const auto n = static_cast<Element>(q.size());

    for (Element a = 0; a < n; ++a)
        if (q.op(a, a) != a)
            report.failures.push_back({"idempotency", {a}});

    for (Element b = 0; b < n; ++b) {
        std::vector<Element> seen(q.size(), -1);
        for (Element a = 0; a < n; ++a) {
            const Element image = q.op(a, b);
            if (seen[image] >= 0)
                report.failures.push_back({"right-invertibility", {seen[image], a, b}});
            else
                seen[image] = a;
        }
        for (Element a = 0; a < n; ++a)
            if (q.op(q.op_inv(a, b), b) != a || q.op_inv(q.op(a, b), b) != a)
                report.failures.push_back({"inverse-table", {a, b}});
    }

    for (Element a = 0; a < n; ++a)
        for (Element b = 0; b < n; ++b)
            for (Element c = 0; c < n; ++c)
                if (q.op(q.op(a, b), c) != q.op(q.op(a, c), q.op(b, c)))
                    report.failures.push_back({"self-distributivity", {a, b, c}});

    return report;
}

namespace {

bool is_permutation_of(const std::vector<Element>& rho, std::size_t n)
{
    if (rho.size() != n)
        return false;
    std::vector<bool> hit(n, false);
    for (Element x : rho) {
        if (x < 0 || static_cast<std::size_t>(x) >= n || hit[x])
            return false;
        hit[x] = true;
    }
    return true;
}

void collect_involution_failures(const FiniteQuandle& q, const std::vector<Element>& rho,
                                 std::vector<AxiomViolation>* out, bool stop_early)
{
    const auto n = static_cast<Element>(q.size());
    auto fail = [&](const char* axiom, std::vector<Element> witness) {
        out->push_back({axiom, std::move(witness)});
        return stop_early;
    };
    for (Element a = 0; a < n; ++a)
        if (rho[rho[a]] != a && fail("involution", {a}))
            return;
    for (Element a = 0; a < n; ++a)
        for (Element b = 0; b < n; ++b)
            if (rho[q.op(a, b)] != q.op(rho[a], b) && fail("equivariance", {a, b}))
                return;
    for (Element a = 0; a < n; ++a)
        for (Element b = 0; b < n; ++b)
            if (q.op(a, rho[b]) != q.op_inv(a, b) && fail("inversion-compatibility", {a, b}))
                return;
}

}  // namespace

VerificationReport verify_good_involution(const SymmetricQuandle& sq)
{
    if (!is_permutation_of(sq.involution.table(), sq.quandle.size()))
        throw InvalidInvolution("involution is not a permutation of 0.." + std::to_string(sq.quandle.size() - 1));
    VerificationReport report;
    collect_involution_failures(sq.quandle, sq.involution.table(), &report.failures, false);
    return report;
}

std::vector<GoodInvolution> enumerate_good_involutions(const FiniteQuandle& q)
{
    std::vector<Element> perm(q.size());
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<GoodInvolution> result;
    std::vector<AxiomViolation> scratch;
    do {
        scratch.clear();
        collect_involution_failures(q, perm, &scratch, true);
        if (scratch.empty())
            result.emplace_back(perm);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return result;
}

std::vector<Element> fixed_points(const GoodInvolution& rho)
{
    std::vector<Element> fixed;
    for (std::size_t a = 0; a < rho.size(); ++a)
        if (rho(static_cast<Element>(a)) == static_cast<Element>(a))
            fixed.push_back(static_cast<Element>(a));
    return fixed;
}

SymmetricQuandle make_symmetric_quandle(FiniteQuandle q, GoodInvolution rho)
{
    if (auto r = verify_quandle(q); !r.pass())
        throw InvalidArgument("not a quandle: " + r.failed_axioms().front() + " fails");
    SymmetricQuandle sq{std::move(q), std::move(rho)};
    if (auto r = verify_good_involution(sq); !r.pass())
        throw InvalidArgument("not a good involution: " + r.failed_axioms().front() + " fails");
    return sq;
}

GoodInvolution make_antipodal(std::size_t n)
{
    if (n == 0 || n % 2 != 0)
        throw InvalidArgument("antipodal involution needs an even order, got " + std::to_string(n));
    std::vector<Element> rho(n);
    for (std::size_t a = 0; a < n; ++a)
        rho[a] = static_cast<Element>((a + n / 2) % n);
    return GoodInvolution(std::move(rho));
}

QuandleAction make_trivial_action(const SymmetricQuandle& sq)
{
    Table act(1, sq.size(), 0);
    Table inv = act;
    return QuandleAction(std::move(act), std::move(inv));
}

QuandleAction make_regular_action(const SymmetricQuandle& sq)
{
    return QuandleAction(sq.quandle.op_table(), sq.quandle.op_inv_table());
}

VerificationReport verify_action(const SymmetricQuandle& sq, const QuandleAction& action)
{
    if (action.quandle_size() != sq.size())
        throw MalformedTable("action is over a set of size " + std::to_string(action.quandle_size())
                             + ", quandle has size " + std::to_string(sq.size()));
    VerificationReport report;
    const auto m = static_cast<Element>(action.size());
    const auto n = static_cast<Element>(sq.size());
    for (Element x = 0; x < n; ++x)
        for (Element y = 0; y < m; ++y)
            if (action.act_inv(action.act(y, x), x) != y || action.act(action.act_inv(y, x), x) != y)
                report.failures.push_back({"bijectivity", {y, x}});
    for (Element y = 0; y < m; ++y)
        for (Element a = 0; a < n; ++a)
            for (Element b = 0; b < n; ++b)
                if (action.act(action.act(y, a), b) != action.act(action.act(y, b), sq.op(a, b)))
                    report.failures.push_back({"compatibility", {y, a, b}});
    for (Element y = 0; y < m; ++y)
        for (Element a = 0; a < n; ++a)
            if (action.act(y, sq.rho(a)) != action.act_inv(y, a))
                report.failures.push_back({"involution-compatibility", {y, a}});
    return report;
}

FiniteQuandle parse_quandle_table(std::string_view text)
{
    std::vector<std::vector<Element>> rows;
    std::istringstream in{std::string(text)};
    std::string line;
    while (std::getline(in, line)) {
        if (auto hash = line.find('#'); hash != std::string::npos)
            line.erase(hash);
        std::istringstream fields(line);
        std::vector<Element> row;
        std::string tok;
        while (fields >> tok)
            row.push_back(parse_int(tok, "quandle table"));
        if (!row.empty())
            rows.push_back(std::move(row));
    }
    return FiniteQuandle::from_operation(Table::from_rows(rows));
}

FiniteQuandle parse_quandle_spec(std::string_view spec)
{
    auto colon = spec.find(':');
    if (colon == std::string_view::npos)
        throw InvalidArgument("quandle spec must be dihedral:<n>, trivial:<n> or file:<path>, got '"
                              + std::string(spec) + "'");
    auto kind = spec.substr(0, colon);
    auto arg = spec.substr(colon + 1);
    if (kind == "dihedral")
        return make_dihedral(parse_int(arg, "quandle spec"));
    if (kind == "trivial")
        return make_trivial_quandle(parse_int(arg, "quandle spec"));
    if (kind == "file") {
        std::ifstream file{std::string(arg)};
        if (!file)
            throw InvalidArgument("cannot open quandle table file '" + std::string(arg) + "'");
        std::stringstream buf;
        buf << file.rdbuf();
        return parse_quandle_table(buf.str());
    }
    throw InvalidArgument("unknown quandle kind '" + std::string(kind) + "'");
}

GoodInvolution parse_involution_spec(std::string_view spec, std::size_t n)
{
    if (spec == "identity")
        return GoodInvolution::identity(n);
    if (spec == "antipodal")
        return make_antipodal(n);
    if (spec.starts_with("table:")) {
        std::vector<Element> rho;
        auto rest = spec.substr(6);
        while (!rest.empty()) {
            auto comma = rest.find(',');
            rho.push_back(parse_int(rest.substr(0, comma), "involution table"));
            if (comma == std::string_view::npos)
                break;
            rest = rest.substr(comma + 1);
        }
        if (!is_permutation_of(rho, n))
            throw InvalidInvolution("involution table is not a permutation of 0.." + std::to_string(n - 1));
        return GoodInvolution(std::move(rho));
    }
    throw InvalidArgument("involution spec must be identity, antipodal or table:<perm>, got '" + std::string(spec)
                          + "'");
}

}  // namespace symq
