#pragma once

#include <string>

#include "superjack/forms.hpp"

namespace superjack {

std::string to_json(const SymFunc& f);
SymFunc symfunc_from_json(const std::string& text);

std::string to_json(const MPoly& p);
MPoly mpoly_from_json(const std::string& text);

std::string to_json(const GramReport& rep);

std::string to_csv(const SymFunc& f);
std::string to_csv(const MPoly& p);
// header row of partition labels, then the matrix row-major
std::string to_csv(const GramReport& rep);

}  // namespace superjack
