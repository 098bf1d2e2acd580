#pragma once

#include <string>
#include <vector>

#include "legkh/bound.hpp"
#include "legkh/khovanov.hpp"
#include "legkh/laurent.hpp"
#include "legkh/tait.hpp"

namespace legkh {

// Reports as JSON documents carrying "schema": 1, keys in a fixed order, and
// as plain text for people. Only the JSON layout is meant to stay stable.

std::string to_json(const TaitGraph& graph);
std::string to_json(const BigradedTable& table);
std::string to_json(const BoundReport& report);
std::string to_json(const std::vector<TreeReport>& trees);
std::string to_json(const LaurentPoly& poly);

std::string to_text(const BigradedTable& table);
std::string to_text(const BoundReport& report);
std::string to_text(const std::vector<TreeReport>& trees);

}  // namespace legkh
