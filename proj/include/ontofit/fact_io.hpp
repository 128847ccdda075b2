#pragma once

#include <string>
#include <string_view>

#include "ontofit/instance.hpp"

namespace ontofit {

// One fact per line, `R(a,b).`; `#` comments; optional `@point a, b` header.
PointedInstance parse_pointed_instance(std::string_view text);
Instance parse_instance(std::string_view text);
PointedInstance read_pointed_instance(const std::string& path);
Instance read_instance(const std::string& path);

std::string format_instance(const Instance& instance);
std::string format_pointed_instance(const PointedInstance& p);

std::string read_text_file(const std::string& path);
bool is_identifier(std::string_view s);

}  // namespace ontofit
