#pragma once

#include <optional>
#include <string>
#include <string_view>

namespace eulerclass {

enum class Relation { kEulerian, kCut, kEulerianCut };
enum class Restriction { kAll, kTotallyCyclic, kAcyclic };

std::string to_string(Relation r);
std::string to_string(Restriction r);
std::optional<Relation> parse_relation(std::string_view s);
std::optional<Restriction> parse_restriction(std::string_view s);

}  // namespace eulerclass
