// io.hpp
// JSON and text serialization of the domain types, plus exact parsing of
// golden-field values from the CLI forms "p", "p/q" and "p+q*tau/d".

#pragma once

#include "fibchain/cutproject.hpp"
#include "fibchain/golden.hpp"
#include "fibchain/ktheory.hpp"
#include "fibchain/partition.hpp"

#include <nlohmann/json.hpp>

#include <optional>
#include <string>

namespace fib {

using nlohmann::json;

json to_json(const GoldenRational& x);
json to_json(const CrossingEvent& ev);
json to_json(const LatticeLine& line);
json to_json(const Interval& iv);
json to_json(const Partition& w);

// Bratteli export: {"levels":[{n,kL,kS}...],"edges":[[1,1],[1,0]]}.
json bratteli_json(int levels);
// DOT graph of the same diagram.
std::string bratteli_dot(int levels);

// Exact parse of "p", "p/q", "p+q*tau", "q*tau/d", "p+q*tau/d". Decimal
// strings are rejected. Returns nullopt on any malformed input.
std::optional<GoldenRational> parse_golden(const std::string& text);

}  // namespace fib
