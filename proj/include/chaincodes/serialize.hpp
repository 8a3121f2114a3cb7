#pragma once

#include <string>

#include <json.hpp>

#include "chaincodes/ambient.hpp"
#include "chaincodes/enumerator.hpp"

namespace chaincodes {

inline constexpr int kSchemaVersion = 1;

std::string to_decimal(const BigInt& v);

nlohmann::json to_json(const Poly& p);
nlohmann::json to_json(const RPoly& p);
nlohmann::json to_json(const Params& p);
nlohmann::json to_json(const IdealDescriptor& d);
nlohmann::json to_json(const CodeDescriptor& c);

// Readable form grouped by powers of u, e.g. "(x + 1) + u^2*(x^2)".
std::string to_string(const RPoly& p);

// Hex string of the first dim bits, most significant first.
std::string to_hex(const Bits& v, int dim);

// factor,family,s,t,h with h as space-separated integers.
std::string csv_header();
std::string csv_row(std::uint64_t index, const IdealDescriptor& d);

}  // namespace chaincodes
