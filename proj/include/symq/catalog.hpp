#pragma once

#include <string>
#include <vector>

#include "symq/diagram.hpp"

namespace symq::catalog {

struct Entry {
    std::string name;  ///< Yoshikawa notation or a classical name
    std::string file;  ///< relative to the catalog directory
    int ch_index = 0;
    int euler_characteristic = 0;
    /// Signed genus of each surface component (classical links list 0 per component).
    std::vector<int> signed_genera;
    bool classical = false;
    /// Budget per smoothing under which is_admissible answers yes.
    long admissibility_budget = 2000;
    std::string provenance;
};

/// Every entry, in a fixed order.
const std::vector<Entry>& entries();

/// Throws InvalidArgument for an unknown name.
const Entry& entry(const std::string& name);

/// $SYMQ_CATALOG_DIR if set, else the directory the project was built from.
std::string directory();

/// Parses the entry's .chd file from directory().
ChDiagram load(const std::string& name);

std::vector<std::string> list();

}  // namespace symq::catalog
