#pragma once

#include <string>
#include <vector>

#include "json.hpp"

#include "gz/types.hpp"

namespace gz {

using ordered_json = nlohmann::ordered_json;

ordered_json json_complex(cplx v);

// Current UTC time as 2026-01-02T03:04:05Z.
std::string iso_utc_now();

// The envelope every command emits: version, command line, config echo,
// payload, and (unless suppressed for byte-comparable output) a timestamp.
ordered_json make_envelope(const std::string& command, ordered_json config_echo,
                           ordered_json payload, bool with_timestamp);

// One CSV row; cells are joined with commas, no quoting (cells are numeric
// or bare identifiers by construction).
std::string csv_row(const std::vector<std::string>& cells);

// Shortest round-trip decimal form, identical to the JSON encoding of v.
std::string csv_number(double v);

}  // namespace gz
