#pragma once

#include <cstdint>
#include <string>

namespace crosscheck {

// Seconds since the Unix epoch, UTC. All timestamps in the pipeline are
// second-precision instants.
using Instant = std::int64_t;

// Parses an RFC 3339 timestamp ("2021-08-26T12:00:00Z" or with a numeric
// "+hh:mm" offset). Fractional seconds are accepted and truncated.
// Throws Error(ParseError) on malformed input.
Instant parse_rfc3339(const std::string& text);

// Formats an instant as "YYYY-MM-DDTHH:MM:SSZ".
std::string format_rfc3339(Instant t);

} // namespace crosscheck
