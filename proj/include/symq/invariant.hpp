#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "symq/algebra.hpp"

namespace symq {

/// Coefficients live in Z (modulus 0) or Z/m.
using Coefficient = std::int64_t;

Coefficient reduce(Coefficient value, Coefficient modulus);

/// Color of a triple point, read off a chosen (specified) region:
/// sign ε, region color y and the bottom/middle/top sheet colors.
struct TriplePointDatum {
    int sign = 1;
    Element y = 0;
    Element x1 = 0;
    Element x2 = 0;
    Element x3 = 0;
};

/// Values of a map φ : Y × X³ → A. Entries not present are 0. The cocycle
/// condition is not checked.
class CocycleTable {
public:
    CocycleTable() = default;
    CocycleTable(Coefficient modulus, std::size_t y_size, std::size_t x_size);

    Coefficient modulus() const { return modulus_; }
    std::size_t y_size() const { return y_size_; }
    std::size_t x_size() const { return x_size_; }

    void set(Element y, Element x1, Element x2, Element x3, Coefficient value);
    Coefficient at(Element y, Element x1, Element x2, Element x3) const;
    /// Entries of Y × X³ never given explicitly.
    std::size_t missing_entries() const;

    /// Entry-wise sum; moduli and sizes must agree.
    CocycleTable operator+(const CocycleTable& other) const;

private:
    std::size_t index(Element y, Element x1, Element x2, Element x3) const;

    Coefficient modulus_ = 0;
    std::size_t y_size_ = 1;
    std::size_t x_size_ = 1;
    std::vector<Coefficient> values_;
    std::vector<bool> given_;
};

/// Multiset in canonical (sorted) form.
class WeightMultiset {
public:
    WeightMultiset() = default;
    WeightMultiset(Coefficient modulus, std::vector<Coefficient> values);

    Coefficient modulus() const { return modulus_; }
    const std::vector<Coefficient>& values() const { return values_; }
    std::size_t size() const { return values_.size(); }
    std::size_t multiplicity(Coefficient v) const;
    /// value -> multiplicity
    std::map<Coefficient, std::size_t> histogram() const;

    bool operator==(const WeightMultiset&) const = default;

private:
    Coefficient modulus_ = 0;
    std::vector<Coefficient> values_;
};

/// ε · φ(y, x1, x2, x3), reduced when the modulus is positive.
Coefficient weight_of_triple(const TriplePointDatum& t, const CocycleTable& phi);

/// Sum of the triple-point weights of one coloring.
Coefficient weight_of_coloring(const std::vector<TriplePointDatum>& triples, const CocycleTable& phi);

using ColoringTriples = std::pair<std::string, std::vector<TriplePointDatum>>;

/// Weights of all colorings as a multiset. Duplicate coloring ids are rejected.
WeightMultiset phi_multiset(const std::vector<ColoringTriples>& per_coloring, const CocycleTable& phi);

/// Multiset inclusion; throws InvalidArgument on mismatched moduli.
bool multiset_subset(const WeightMultiset& a, const WeightMultiset& b);

/// A value whose multiplicity in `a` exceeds that in `b`, if any.
std::optional<Coefficient> excess_value(const WeightMultiset& a, const WeightMultiset& b);

/// Cocycle CSV: a `modulus,m` header, then `y,x1,x2,x3,value` rows.
/// Sizes default to one more than the largest index seen.
CocycleTable parse_cocycle_csv(std::string_view text, std::optional<std::size_t> y_size = std::nullopt,
                               std::optional<std::size_t> x_size = std::nullopt);

/// Triple-point CSV: `coloring_id,sign,y,x1,x2,x3` rows; a row holding only an
/// id declares a coloring with no triple points. Rows of one coloring must be
/// contiguous.
std::vector<ColoringTriples> parse_triples_csv(std::string_view text);

}  // namespace symq
