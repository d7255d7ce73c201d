#include "crosscheck/timeparse.hpp"

#include "crosscheck/error.hpp"

#include <doctest.h>

using namespace crosscheck;

TEST_CASE("parses Z timestamps") {
    CHECK(parse_rfc3339("1970-01-01T00:00:00Z") == 0);
    CHECK(parse_rfc3339("2021-08-26T12:00:00Z") == 1629979200);
    CHECK(parse_rfc3339("2021-08-26t12:00:00z") == 1629979200);
}

TEST_CASE("handles offsets and fractional seconds") {
    CHECK(parse_rfc3339("2021-08-26T14:00:00+02:00") == parse_rfc3339("2021-08-26T12:00:00Z"));
    CHECK(parse_rfc3339("2021-08-26T09:30:00-02:30") == parse_rfc3339("2021-08-26T12:00:00Z"));
    CHECK(parse_rfc3339("2021-08-26T12:00:00.999Z") == parse_rfc3339("2021-08-26T12:00:00Z"));
}

TEST_CASE("rejects malformed timestamps") {
    for (const char* bad : {"2021-08-26", "2021-13-01T00:00:00Z", "2021-02-30T00:00:00Z",
                            "2021-08-26T24:00:00Z", "2021-08-26T12:00:00", "garbage",
                            "2021-08-26T12:00:00Zjunk"}) {
        CHECK_THROWS_AS(parse_rfc3339(bad), Error);
    }
}

TEST_CASE("format round-trips") {
    for (const char* ts : {"1970-01-01T00:00:00Z", "2021-08-26T12:34:56Z", "2000-02-29T23:59:59Z",
                           "1969-12-31T23:59:59Z"}) {
        CHECK(format_rfc3339(parse_rfc3339(ts)) == ts);
    }
}
