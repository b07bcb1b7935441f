#pragma once

#include <string>
#include <vector>

#include "pull/contract.hpp"
#include "pull/gadget.hpp"

namespace pull {

// Built-in gadget tiles and their contracts. The same definitions back the
// data files shipped under catalog/ and the board compiler's placements.
struct CatalogEntry {
    std::string id;  // e.g. "no_return.one"
    GadgetTemplate tmpl;
    PortContract contract;
};

std::vector<std::string> catalog_ids();
bool catalog_has(const std::string& id);
CatalogEntry catalog_entry(const std::string& id);

// Parametric generators used by the compiler.
GadgetTemplate make_clause_tile(int literals, Variant v);
PortContract make_clause_contract(int literals);
GadgetTemplate make_variable_tile(int pos_occurrences, int neg_occurrences, Variant v);
PortContract make_variable_contract(int pos_occurrences, int neg_occurrences);

// Writes <id>.gadget and (once per contract) <contract>.contract files.
void write_catalog(const std::string& dir);

}  // namespace pull
