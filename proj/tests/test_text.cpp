#include <doctest.h>

#include "gaelcheck/errors.hpp"
#include "gaelcheck/text.hpp"

using namespace gaelcheck;

TEST_CASE("decode rejects malformed utf-8") {
    CHECK_THROWS_AS(text::decode("\xc3"), FormatError);
    CHECK_THROWS_AS(text::decode("ab\xff"), FormatError);
    CHECK_FALSE(text::valid_utf8("\xe2\x82"));
    CHECK(text::valid_utf8("fáilte"));
}

TEST_CASE("combining acute composes") {
    CHECK(text::normalize("fa\xcc\x81ilte") == "fáilte");
    CHECK(text::normalize("CO\xcc\x81" "D") == "cód");
    CHECK(text::length("fa\xcc\x81ilte") == 7);
    CHECK(text::length(text::normalize("fa\xcc\x81ilte")) == 6);
}

TEST_CASE("case folding keeps fadas") {
    CHECK(text::normalize("ÉIRE") == "éire");
    CHECK(text::normalize("B’fhéidir") == "b'fhéidir");
    CHECK(text::is_upper(U'Á'));
    CHECK_FALSE(text::is_upper(U'á'));
}

TEST_CASE("letter classes") {
    CHECK(text::is_letter(U'ú'));
    CHECK_FALSE(text::is_letter(U'×'));
    CHECK_FALSE(text::is_letter(U'-'));
    CHECK(text::is_digit(U'7'));
}
