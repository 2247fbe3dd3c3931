#pragma once

#include <string>
#include <vector>

namespace yso3 {

/// One verified identity: stable id, the suite that runs it, the clearing
/// polynomial used by the denominator-clearing path ("-" when the identity
/// has no prefactor), and the identity statement itself.
struct CatalogEntry {
    const char* id;
    const char* suite;
    const char* clearing;
    const char* statement;
};

const std::vector<CatalogEntry>& identity_catalog();

const CatalogEntry& catalog_entry(const std::string& id);

/// One line per identity: "id | clearing | statement".
std::string catalog_listing();

} // namespace yso3
