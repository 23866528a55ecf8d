#include <doctest.h>

#include <algorithm>
#include <numeric>

#include "symq/algebra.hpp"

using namespace symq;

namespace {

// Exhaustive axiom check written against the raw tables only.
bool is_quandle_oracle(const Table& op)
{
    const int n = static_cast<int>(op.rows());
    for (int a = 0; a < n; ++a)
        if (op(a, a) != a)
            return false;
    for (int b = 0; b < n; ++b) {
        std::vector<int> seen(n, 0);
        for (int a = 0; a < n; ++a)
            ++seen[op(a, b)];
        if (std::count(seen.begin(), seen.end(), 1) != n)
            return false;
    }
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c)
                if (op(op(a, b), c) != op(op(a, c), op(b, c)))
                    return false;
    return true;
}

}  // namespace

TEST_CASE("dihedral tables")
{
    const auto r5 = make_dihedral(5);
    CHECK(r5.size() == 5);
    for (int a = 0; a < 5; ++a)
        for (int b = 0; b < 5; ++b) {
            CHECK(r5.op(a, b) == ((2 * b - a) % 5 + 5) % 5);
            CHECK(r5.op_inv(a, b) == r5.op(a, b));
        }
    CHECK_THROWS_AS(make_dihedral(0), InvalidArgument);
    CHECK_THROWS_AS(make_dihedral(-3), InvalidArgument);
}

TEST_CASE("verify_quandle agrees with an exhaustive oracle")
{
    for (int n = 1; n <= 12; ++n) {
        const auto q = make_dihedral(n);
        CHECK(is_quandle_oracle(q.op_table()));
        CHECK(verify_quandle(q).pass());
    }
    CHECK(verify_quandle(make_trivial_quandle(3)).pass());
}

TEST_CASE("planted idempotency violation is reported with its witness")
{
    Table op = make_dihedral(4).op_table();
    op(0, 0) = 1;
    const auto report = verify_quandle(FiniteQuandle::from_operation(op));
    CHECK_FALSE(report.pass());
    const auto failed = report.failed_axioms();
    CHECK(std::find(failed.begin(), failed.end(), "idempotency") != failed.end());
    const auto it = std::find_if(report.failures.begin(), report.failures.end(),
                                 [](const AxiomViolation& v) { return v.axiom == "idempotency"; });
    REQUIRE(it != report.failures.end());
    CHECK(it->witness == std::vector<Element>{0});
}

TEST_CASE("malformed tables are errors, not failed axioms")
{
    CHECK_THROWS_AS(Table::from_rows({{0, 1}, {1}}), MalformedTable);
    CHECK_THROWS_AS(parse_quandle_table("0 2\n1 1\n"), MalformedTable);
    CHECK_THROWS_AS(parse_quandle_table("0 1 2\n1 1 1\n"), MalformedTable);
    CHECK_THROWS_AS(FiniteQuandle(Table(2, 2), Table(3, 3)), MalformedTable);
}

TEST_CASE("good involutions")
{
    const SymmetricQuandle r4_antipodal{make_dihedral(4), make_antipodal(4)};
    CHECK(verify_good_involution(r4_antipodal).pass());
    CHECK(r4_antipodal.rho(0) == 2);
    CHECK(r4_antipodal.rho(1) == 3);

    CHECK(verify_good_involution({make_dihedral(3), GoodInvolution::identity(3)}).pass());

    const SymmetricQuandle swap01{make_dihedral(4), GoodInvolution({1, 0, 2, 3})};
    const auto report = verify_good_involution(swap01);
    CHECK_FALSE(report.pass());
    // ρ(0 ▷ 2) = ρ(0) = 1 but ρ(0) ▷ 2 = 1 ▷ 2 = 3
    const auto failed = report.failed_axioms();
    CHECK(std::find(failed.begin(), failed.end(), "equivariance") != failed.end());

    CHECK_THROWS_AS(verify_good_involution({make_dihedral(4), GoodInvolution({0, 0, 2, 3})}), InvalidInvolution);
    CHECK_THROWS_AS(verify_good_involution({make_dihedral(4), GoodInvolution({0, 1, 2})}), InvalidInvolution);
}

TEST_CASE("enumerate_good_involutions matches a permutation sweep")
{
    for (int n = 1; n <= 6; ++n) {
        const auto q = make_dihedral(n);
        std::vector<Element> perm(n);
        std::iota(perm.begin(), perm.end(), 0);
        std::vector<GoodInvolution> expected;
        do {
            const SymmetricQuandle sq{q, GoodInvolution(perm)};
            bool ok = true;
            for (int a = 0; a < n && ok; ++a) {
                ok = sq.rho(sq.rho(a)) == a;
                for (int b = 0; b < n && ok; ++b)
                    ok = sq.rho(sq.op(a, b)) == sq.op(sq.rho(a), b) && sq.op(a, sq.rho(b)) == sq.op_inv(a, b);
            }
            if (ok)
                expected.push_back(GoodInvolution(perm));
        } while (std::next_permutation(perm.begin(), perm.end()));
        CHECK(enumerate_good_involutions(q) == expected);
    }
    const auto r4 = enumerate_good_involutions(make_dihedral(4));
    CHECK(std::find(r4.begin(), r4.end(), make_antipodal(4)) != r4.end());
    CHECK(std::find(r4.begin(), r4.end(), GoodInvolution::identity(4)) != r4.end());
    const auto r3 = enumerate_good_involutions(make_dihedral(3));
    CHECK(std::find(r3.begin(), r3.end(), GoodInvolution::identity(3)) != r3.end());
}

TEST_CASE("parity lemma on (R4, antipodal)")
{
    const auto rho = make_antipodal(4);
    for (Element a = 0; a < 4; ++a) {
        const int s = (a + rho(a)) % 4;
        CHECK((s == 0 || s == 2));
        CHECK(rho(a) % 2 == a % 2);
    }
}

TEST_CASE("fixed points")
{
    CHECK(fixed_points(make_antipodal(4)).empty());
    CHECK(fixed_points(GoodInvolution::identity(3)) == std::vector<Element>{0, 1, 2});
    CHECK(fixed_points(GoodInvolution({1, 0, 2, 3})) == std::vector<Element>{2, 3});
}

TEST_CASE("actions")
{
    const auto sq = make_symmetric_quandle(make_dihedral(4), make_antipodal(4));
    const auto trivial = make_trivial_action(sq);
    CHECK(trivial.size() == 1);
    for (Element x = 0; x < 4; ++x)
        CHECK(trivial.act(0, x) == 0);
    CHECK(verify_action(sq, trivial).pass());
    CHECK(verify_action(sq, make_regular_action(sq)).pass());

    // y · x = y + 1 ignores x; not an action compatible with ρ
    Table shift(4, 4), unshift(4, 4);
    for (int y = 0; y < 4; ++y)
        for (int x = 0; x < 4; ++x) {
            shift(y, x) = (y + 1) % 4;
            unshift(y, x) = (y + 3) % 4;
        }
    CHECK_FALSE(verify_action(sq, QuandleAction(shift, unshift)).pass());
}

TEST_CASE("quandle and involution strings")
{
    CHECK(parse_quandle_spec("dihedral:4").op_table() == make_dihedral(4).op_table());
    CHECK(parse_quandle_spec("trivial:2").op(1, 0) == 1);
    CHECK_THROWS_AS(parse_quandle_spec("cyclic:3"), InvalidArgument);
    CHECK_THROWS_AS(parse_quandle_spec("dihedral:x"), InvalidArgument);
    CHECK(parse_involution_spec("antipodal", 4) == make_antipodal(4));
    CHECK(parse_involution_spec("table:1,0,2,3", 4) == GoodInvolution({1, 0, 2, 3}));
    CHECK_THROWS_AS(parse_involution_spec("antipodal", 3), InvalidArgument);
    CHECK_THROWS_AS(parse_involution_spec("table:0,0,1", 3), InvalidInvolution);
    CHECK_THROWS_AS(make_symmetric_quandle(make_dihedral(4), GoodInvolution({1, 0, 2, 3})), InvalidArgument);
}
