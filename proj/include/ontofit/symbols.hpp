#pragma once

#include <cstdint>
#include <string>
#include <string_view>

namespace ontofit {

// Relation symbols are interned by (name, arity); the same name with two
// arities gives two distinct symbols.
using Symbol = std::uint32_t;

Symbol intern_symbol(std::string_view name, int arity);
const std::string& symbol_name(Symbol s);
int symbol_arity(Symbol s);

}  // namespace ontofit
