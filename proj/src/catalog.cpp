#include "symq/catalog.hpp"

#include <cstdlib>

#ifndef SYMQ_DEFAULT_CATALOG_DIR
#define SYMQ_DEFAULT_CATALOG_DIR "catalog"
#endif

namespace symq::catalog {

const std::vector<Entry>& entries()
{
    static const std::vector<Entry> table = {
        {"0_1", "0_1.chd", 0, 2, {0}, false, 10, "trivial 2-knot: one crossing-free circle"},
        {"2_1^{-1}", "2_1_m1.chd", 2, 1, {-1}, false, 100,
         "unknotted projective plane: two circles through one vertex and one crossing"},
        {"2_1^{-1}*", "2_1_m1_mirror.chd", 2, 1, {-1}, false, 100,
         "mirror of 2_1^{-1}: the other normal Euler number"},
        {"8_1^{-1,-1}", "8_1_m1m1.chd", 8, 2, {-1, -1}, false, 5000,
         "two projective planes, reconstructed; see docs/transcriptions.md"},
        {"10_1^{-1,-1}", "10_1_m1m1.chd", 10, 2, {-1, -1}, false, 5000,
         "two projective planes, reconstructed; see docs/transcriptions.md"},
        {"trefoil", "trefoil.chd", 3, 0, {0}, true, 0, "classical left-handed trefoil"},
        {"hopf", "hopf.chd", 2, 0, {0, 0}, true, 0, "classical Hopf link"},
    };
    return table;
}

const Entry& entry(const std::string& name)
{
    for (const auto& e : entries())
        if (e.name == name)
            return e;
    std::string known;
    for (const auto& e : entries())
        known += (known.empty() ? "" : ", ") + e.name;
    throw InvalidArgument("unknown catalog entry '" + name + "' (known: " + known + ")");
}

std::string directory()
{
    if (const char* env = std::getenv("SYMQ_CATALOG_DIR"); env && *env)
        return env;
    return SYMQ_DEFAULT_CATALOG_DIR;
}

ChDiagram load(const std::string& name)
{
    return load_chd_file(directory() + "/" + entry(name).file);
}

std::vector<std::string> list()
{
    std::vector<std::string> names;
    for (const auto& e : entries())
        names.push_back(e.name);
    return names;
}

}  // namespace symq::catalog
