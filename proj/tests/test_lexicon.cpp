#include <doctest.h>

#include <sstream>

#include "gaelcheck/errors.hpp"
#include "gaelcheck/lexicon.hpp"
#include "support.hpp"

using namespace gaelcheck;
using testsupport::english;
using testsupport::irish;

TEST_CASE("load a single entry") {
    auto l = Lexicon::load(std::string_view("gaoth\tNoun\tnative\n"));
    REQUIRE(l.size() == 1);
    CHECK(l.entries()[0].pos == PartOfSpeech::Noun);
    CHECK(l.entries()[0].native);
}

TEST_CASE("loanword flag") {
    auto l = Lexicon::load(std::string_view("zú\tNoun\tloan\n"));
    REQUIRE(l.size() == 1);
    CHECK_FALSE(l.entries()[0].native);
}

TEST_CASE("empty or unusable input") {
    CHECK_THROWS_AS(Lexicon::load(std::string_view("")), ConfigError);
    CHECK_THROWS_AS(Lexicon::load(std::string_view("# only a comment\n")), ConfigError);
    CHECK_THROWS_AS(Lexicon::load(std::string_view("gao\xffth\n")), FormatError);
}

TEST_CASE("malformed lines become warnings") {
    auto l = Lexicon::load(std::string_view("gaoth\tNoun\nbad\tPronoun\nmoill\tNoun\tnative\textra\nlín\n"));
    CHECK(l.size() == 2);
    CHECK(l.warnings().size() == 2);
    CHECK(l.find("lín")->pos == PartOfSpeech::Unknown);
}

TEST_CASE("duplicates collapse and forms are normalized") {
    auto l = Lexicon::load(std::string_view("Gaoth\tNoun\ngaoth\tNoun\ngaoth\tVerb\nco\xcc\x81\x64\tNoun\n"));
    CHECK(l.size() == 3);
    CHECK(l.find_all("gaoth").size() == 2);
    CHECK(l.contains("cód"));
}

TEST_CASE("lookup") {
    CHECK(irish().lookup("gaoth").status == LookupResult::Status::Exact);
    auto m = irish().lookup("mhoill");
    CHECK(m.status == LookupResult::Status::ViaMutation);
    CHECK(m.mutation == MutationKind::Lenition);
    CHECK(m.root == "moill");
    CHECK(irish().lookup("gaothmhoill").status == LookupResult::Status::Absent);
    CHECK_FALSE(irish().lookup("gaothmhoill").entry.has_value());
    CHECK(irish().lookup("Gaoth").status == LookupResult::Status::Exact);
}

TEST_CASE("every loaded form looks up exactly") {
    for (auto& e : irish().entries()) CHECK_MESSAGE(irish().lookup(e.form).status == LookupResult::Status::Exact, e.form);
}

TEST_CASE("mutation hits reconstruct the token") {
    for (auto& e : irish().entries()) {
        for (auto w : {apply_lenition(e.form), apply_eclipsis(e.form)}) {
            auto r = irish().lookup(w);
            REQUIRE(r.found());
            if (r.status != LookupResult::Status::ViaMutation) continue;
            CHECK(irish().contains(r.root));
            if (r.mutation == MutationKind::Lenition) CHECK(apply_lenition(r.root) == w);
            if (r.mutation == MutationKind::Eclipsis) CHECK(apply_eclipsis(r.root) == w);
        }
    }
}

TEST_CASE("english_root_match") {
    CHECK(english_root_match(english(), "fan") == "fan");
    CHECK(english_root_match(english(), "tend") == "tend");
    CHECK_FALSE(english_root_match(english(), "xq").has_value());
    CHECK(english_root_match(english(), "fanaithe") == "fan");
}

TEST_CASE("english truncations and plurals") {
    auto t = english_truncation_matches(english(), "simul");
    CHECK(std::find(t.begin(), t.end(), "simulator") != t.end());
    CHECK(english_contains(english(), "triplets"));
    CHECK_FALSE(english_contains(english(), "microcontroller"));
}

TEST_CASE("extensions are proper and sorted") {
    auto ext = irish().extensions("cog");
    CHECK(std::find(ext.begin(), ext.end(), "cogain") != ext.end());
    CHECK(std::is_sorted(ext.begin(), ext.end()));
    CHECK(std::find(ext.begin(), ext.end(), "cog") == ext.end());
}
