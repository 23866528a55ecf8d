#include "symq/invariant.hpp"

#include <algorithm>
#include <charconv>
#include <set>
#include <sstream>

namespace symq {

namespace {

std::vector<std::string> split_csv_line(const std::string& line)
{
    std::vector<std::string> fields;
    std::string field;
    std::istringstream in(line);
    while (std::getline(in, field, ','))
        fields.push_back(field);
    if (!line.empty() && line.back() == ',')
        fields.emplace_back();
    for (auto& f : fields) {
        const auto a = f.find_first_not_of(" \t\r");
        const auto b = f.find_last_not_of(" \t\r");
        f = a == std::string::npos ? std::string() : f.substr(a, b - a + 1);
    }
    return fields;
}

Coefficient to_int(const std::string& s, int line_no)
{
    Coefficient value = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (ec != std::errc() || ptr != s.data() + s.size())
        throw InvalidArgument("line " + std::to_string(line_no) + ": '" + s + "' is not an integer");
    return value;
}

/// Non-empty, comment-stripped lines with their 1-based numbers.
std::vector<std::pair<int, std::string>> data_lines(std::string_view text)
{
    std::vector<std::pair<int, std::string>> out;
    std::istringstream in{std::string(text)};
    std::string line;
    int no = 0;
    while (std::getline(in, line)) {
        ++no;
        if (auto hash = line.find('#'); hash != std::string::npos)
            line.erase(hash);
        if (line.find_first_not_of(" \t\r") == std::string::npos)
            continue;
        out.emplace_back(no, line);
    }
    return out;
}

}  // namespace

Coefficient reduce(Coefficient value, Coefficient modulus)
{
    if (modulus <= 0)
        return value;
    const Coefficient r = value % modulus;
    return r < 0 ? r + modulus : r;
}

CocycleTable::CocycleTable(Coefficient modulus, std::size_t y_size, std::size_t x_size)
    : modulus_(modulus), y_size_(y_size), x_size_(x_size),
      values_(y_size * x_size * x_size * x_size, 0), given_(values_.size(), false)
{
    if (modulus < 0)
        throw InvalidArgument("modulus must be non-negative");
    if (y_size == 0 || x_size == 0)
        throw InvalidArgument("cocycle table needs non-empty Y and X");
}

std::size_t CocycleTable::index(Element y, Element x1, Element x2, Element x3) const
{
    auto in_range = [](Element v, std::size_t n) { return v >= 0 && static_cast<std::size_t>(v) < n; };
    if (!in_range(y, y_size_) || !in_range(x1, x_size_) || !in_range(x2, x_size_) || !in_range(x3, x_size_))
        throw InvalidArgument("triple-point color (" + std::to_string(y) + "," + std::to_string(x1) + ","
                              + std::to_string(x2) + "," + std::to_string(x3) + ") is out of range");
    return ((static_cast<std::size_t>(y) * x_size_ + x1) * x_size_ + x2) * x_size_ + x3;
}

void CocycleTable::set(Element y, Element x1, Element x2, Element x3, Coefficient value)
{
    const auto i = index(y, x1, x2, x3);
    values_[i] = reduce(value, modulus_);
    given_[i] = true;
}

Coefficient CocycleTable::at(Element y, Element x1, Element x2, Element x3) const
{
    return values_[index(y, x1, x2, x3)];
}

std::size_t CocycleTable::missing_entries() const
{
    return static_cast<std::size_t>(std::count(given_.begin(), given_.end(), false));
}

CocycleTable CocycleTable::operator+(const CocycleTable& other) const
{
    if (modulus_ != other.modulus_ || y_size_ != other.y_size_ || x_size_ != other.x_size_)
        throw InvalidArgument("cannot add cocycle tables over different groups or sets");
    CocycleTable sum = *this;
    for (std::size_t i = 0; i < values_.size(); ++i) {
        sum.values_[i] = reduce(values_[i] + other.values_[i], modulus_);
        sum.given_[i] = given_[i] || other.given_[i];
    }
    return sum;
}

WeightMultiset::WeightMultiset(Coefficient modulus, std::vector<Coefficient> values)
    : modulus_(modulus), values_(std::move(values))
{
    for (auto& v : values_)
        v = reduce(v, modulus_);
    std::sort(values_.begin(), values_.end());
}

std::size_t WeightMultiset::multiplicity(Coefficient v) const
{
    auto [lo, hi] = std::equal_range(values_.begin(), values_.end(), reduce(v, modulus_));
    return static_cast<std::size_t>(hi - lo);
}

std::map<Coefficient, std::size_t> WeightMultiset::histogram() const
{
    std::map<Coefficient, std::size_t> h;
    for (auto v : values_)
        ++h[v];
    return h;
}

Coefficient weight_of_triple(const TriplePointDatum& t, const CocycleTable& phi)
{
    if (t.sign != 1 && t.sign != -1)
        throw InvalidArgument("triple-point sign must be +1 or -1, got " + std::to_string(t.sign));
    return reduce(t.sign * phi.at(t.y, t.x1, t.x2, t.x3), phi.modulus());
}

Coefficient weight_of_coloring(const std::vector<TriplePointDatum>& triples, const CocycleTable& phi)
{
    Coefficient sum = 0;
    for (const auto& t : triples)
        sum = reduce(sum + weight_of_triple(t, phi), phi.modulus());
    return sum;
}

WeightMultiset phi_multiset(const std::vector<ColoringTriples>& per_coloring, const CocycleTable& phi)
{
    std::set<std::string> ids;
    std::vector<Coefficient> weights;
    for (const auto& [id, triples] : per_coloring) {
        if (!ids.insert(id).second)
            throw InvalidArgument("duplicate coloring id '" + id + "'");
        weights.push_back(weight_of_coloring(triples, phi));
    }
    return WeightMultiset(phi.modulus(), std::move(weights));
}

std::optional<Coefficient> excess_value(const WeightMultiset& a, const WeightMultiset& b)
{
    if (a.modulus() != b.modulus())
        throw InvalidArgument("multisets have different coefficient groups (modulus " + std::to_string(a.modulus())
                              + " vs " + std::to_string(b.modulus()) + ")");
    const auto hb = b.histogram();
    for (const auto& [value, count] : a.histogram()) {
        auto it = hb.find(value);
        if (it == hb.end() || it->second < count)
            return value;
    }
    return std::nullopt;
}

bool multiset_subset(const WeightMultiset& a, const WeightMultiset& b) { return !excess_value(a, b).has_value(); }

CocycleTable parse_cocycle_csv(std::string_view text, std::optional<std::size_t> y_size,
                               std::optional<std::size_t> x_size)
{
    const auto lines = data_lines(text);
    if (lines.empty())
        throw InvalidArgument("cocycle file is empty");
    const auto header = split_csv_line(lines.front().second);
    if (header.size() != 2 || header[0] != "modulus")
        throw InvalidArgument("line " + std::to_string(lines.front().first)
                              + ": cocycle file must start with 'modulus,<m>'");
    const Coefficient modulus = to_int(header[1], lines.front().first);

    struct Row {
        Element y, x1, x2, x3;
        Coefficient value;
    };
    std::vector<Row> rows;
    std::size_t max_y = 0;
    std::size_t max_x = 0;
    for (std::size_t i = 1; i < lines.size(); ++i) {
        const auto& [no, line] = lines[i];
        const auto f = split_csv_line(line);
        if (f.size() != 5)
            throw InvalidArgument("line " + std::to_string(no) + ": expected y,x1,x2,x3,value");
        Row r{static_cast<Element>(to_int(f[0], no)), static_cast<Element>(to_int(f[1], no)),
              static_cast<Element>(to_int(f[2], no)), static_cast<Element>(to_int(f[3], no)), to_int(f[4], no)};
        if (r.y < 0 || r.x1 < 0 || r.x2 < 0 || r.x3 < 0)
            throw InvalidArgument("line " + std::to_string(no) + ": negative element index");
        max_y = std::max(max_y, static_cast<std::size_t>(r.y));
        max_x = std::max({max_x, static_cast<std::size_t>(r.x1), static_cast<std::size_t>(r.x2),
                          static_cast<std::size_t>(r.x3)});
        rows.push_back(r);
    }
    CocycleTable table(modulus, y_size.value_or(max_y + 1), x_size.value_or(max_x + 1));
    for (const auto& r : rows)
        table.set(r.y, r.x1, r.x2, r.x3, r.value);
    return table;
}

std::vector<ColoringTriples> parse_triples_csv(std::string_view text)
{
    std::vector<ColoringTriples> out;
    std::set<std::string> closed;
    for (const auto& [no, line] : data_lines(text)) {
        const auto f = split_csv_line(line);
        if (f.empty() || f[0].empty())
            throw InvalidArgument("line " + std::to_string(no) + ": missing coloring id");
        if (f[0] == "coloring_id")
            continue;  // header
        if (f.size() != 1 && f.size() != 6)
            throw InvalidArgument("line " + std::to_string(no) + ": expected coloring_id,sign,y,x1,x2,x3");
        if (out.empty() || out.back().first != f[0]) {
            if (closed.count(f[0]))
                throw InvalidArgument("line " + std::to_string(no) + ": duplicate coloring id '" + f[0] + "'");
            if (!out.empty())
                closed.insert(out.back().first);
            out.emplace_back(f[0], std::vector<TriplePointDatum>{});
        }
        if (f.size() == 6) {
            const auto sign = to_int(f[1], no);
            if (sign != 1 && sign != -1)
                throw InvalidArgument("line " + std::to_string(no) + ": sign must be 1 or -1");
            out.back().second.push_back({static_cast<int>(sign), static_cast<Element>(to_int(f[2], no)),
                                         static_cast<Element>(to_int(f[3], no)),
                                         static_cast<Element>(to_int(f[4], no)),
                                         static_cast<Element>(to_int(f[5], no))});
        }
    }
    return out;
}

}  // namespace symq
