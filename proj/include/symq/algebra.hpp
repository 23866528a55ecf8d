#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "symq/errors.hpp"

namespace symq {

/// Elements of every finite structure here are the integers 0..n-1.
using Element = int;

/// Dense row-major square (or rectangular) table of elements.
class Table {
public:
    Table() = default;
    Table(std::size_t rows, std::size_t cols, Element fill = 0)
        : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

    /// Builds from nested rows; throws MalformedTable on ragged input.
    static Table from_rows(const std::vector<std::vector<Element>>& rows);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Element operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
    Element& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }

    bool operator==(const Table&) const = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Element> data_;
};

/// A finite binary operation a ▷ b together with its right inverse a ▷⁻¹ b.
///
/// Construction only checks shape and entry ranges; the quandle axioms are
/// checked by verify_quandle so that invalid tables can still be inspected.
class FiniteQuandle {
public:
    FiniteQuandle() = default;
    FiniteQuandle(Table op, Table op_inv);

    /// Computes op_inv from op. Columns that are not bijective get a best-effort
    /// inverse (smallest preimage, else 0); verify_quandle reports them.
    static FiniteQuandle from_operation(Table op);

    std::size_t size() const { return op_.rows(); }
    Element op(Element a, Element b) const { return op_(a, b); }
    Element op_inv(Element a, Element b) const { return op_inv_(a, b); }
    const Table& op_table() const { return op_; }
    const Table& op_inv_table() const { return op_inv_; }

private:
    Table op_;
    Table op_inv_;
};

/// Involution table ρ. Permutation and axiom checks live in verify_good_involution.
class GoodInvolution {
public:
    GoodInvolution() = default;
    explicit GoodInvolution(std::vector<Element> rho);

    static GoodInvolution identity(std::size_t n);

    std::size_t size() const { return rho_.size(); }
    Element operator()(Element a) const { return rho_[static_cast<std::size_t>(a)]; }
    const std::vector<Element>& table() const { return rho_; }

    bool operator==(const GoodInvolution&) const = default;

private:
    std::vector<Element> rho_;
};

struct SymmetricQuandle {
    FiniteQuandle quandle;
    GoodInvolution involution;

    std::size_t size() const { return quandle.size(); }
    Element op(Element a, Element b) const { return quandle.op(a, b); }
    Element op_inv(Element a, Element b) const { return quandle.op_inv(a, b); }
    Element rho(Element a) const { return involution(a); }
};

/// Right action of X on a finite set Y (an (X,ρ)-set when the axioms hold).
class QuandleAction {
public:
    QuandleAction() = default;
    QuandleAction(Table act, Table act_inv);

    std::size_t size() const { return act_.rows(); }
    std::size_t quandle_size() const { return act_.cols(); }
    Element act(Element y, Element x) const { return act_(y, x); }
    Element act_inv(Element y, Element x) const { return act_inv_(y, x); }
    const Table& act_table() const { return act_; }
    const Table& act_inv_table() const { return act_inv_; }

private:
    Table act_;
    Table act_inv_;
};

struct AxiomViolation {
    std::string axiom;
    std::vector<Element> witness;
};

struct VerificationReport {
    std::vector<AxiomViolation> failures;

    bool pass() const { return failures.empty(); }
    /// Distinct axiom names that failed, in first-failure order.
    std::vector<std::string> failed_axioms() const;
};

/// Dihedral quandle R_n: a ▷ b = 2b − a mod n. Involutory, so op_inv = op.
FiniteQuandle make_dihedral(int n);

/// Trivial quandle on n elements: a ▷ b = a.
FiniteQuandle make_trivial_quandle(int n);

/// Checks idempotency, right-invertibility (including op_inv consistency) and
/// self-distributivity. Every violated instance is listed.
VerificationReport verify_quandle(const FiniteQuandle& q);

/// Checks ρ∘ρ = id, ρ(a▷b) = ρ(a)▷b and a▷ρ(b) = a▷⁻¹b.
/// Throws InvalidInvolution if ρ is not a permutation of the right size.
VerificationReport verify_good_involution(const SymmetricQuandle& sq);

/// All good involutions of q, lexicographic in their tables.
std::vector<GoodInvolution> enumerate_good_involutions(const FiniteQuandle& q);

std::vector<Element> fixed_points(const GoodInvolution& rho);

/// Validating constructor: throws InvalidArgument if either axiom set fails.
SymmetricQuandle make_symmetric_quandle(FiniteQuandle q, GoodInvolution rho);

/// x ↦ x + n/2 on R_n; n must be even.
GoodInvolution make_antipodal(std::size_t n);

/// Singleton Y: every element acts trivially.
QuandleAction make_trivial_action(const SymmetricQuandle& sq);

/// Y = X acting by the quandle operation itself.
QuandleAction make_regular_action(const SymmetricQuandle& sq);

/// Checks bijectivity in y, the compatibility law and ρ-compatibility.
VerificationReport verify_action(const SymmetricQuandle& sq, const QuandleAction& action);

/// `dihedral:<n>`, `trivial:<n>` or `file:<path>`.
FiniteQuandle parse_quandle_spec(std::string_view spec);

/// Table text: line k is row k of the operation, whitespace separated.
FiniteQuandle parse_quandle_table(std::string_view text);

/// `identity`, `antipodal` or `table:<comma separated permutation>`.
GoodInvolution parse_involution_spec(std::string_view spec, std::size_t n);

}  // namespace symq
