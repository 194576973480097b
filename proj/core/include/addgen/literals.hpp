#pragma once

#include <string>
#include <string_view>

#include "addgen/element_set.hpp"
#include "addgen/group.hpp"

namespace addgen {

// Text forms shared between the library and the CLI:
//   group    "2,8"         comma-separated moduli ("1" = trivial group)
//   element  "1:3"         colon-separated coordinates
//   set      "0:0;1:1"     semicolon-separated element literals
// Formatting is canonical: set members in ascending index order.

GroupType parse_group(std::string_view text);
std::string format_group(const GroupType& g);

Element parse_element(const GroupType& g, std::string_view text);
std::string format_element(const GroupType& g, const Element& e);
std::string format_element(const GroupType& g, int idx);

ElementSet parse_set(const GroupType& g, std::string_view text);
std::string format_set(const ElementSet& s);

}  // namespace addgen
