#include <doctest.h>

#include <algorithm>
#include <cstdio>
#include <random>
#include <sstream>

#include <json.hpp>

#include "gaelcheck/errors.hpp"
#include "support.hpp"

using namespace gaelcheck;
using testsupport::config;
using testsupport::lex;
using testsupport::load_doc;

namespace {
std::vector<std::string> texts(const std::vector<Token>& ts) {
    std::vector<std::string> out;
    for (auto& t : ts) out.push_back(t.text);
    return out;
}

std::size_t lines(const std::string& s) { return std::count(s.begin(), s.end(), '\n'); }

// Long division on decimal digits, kept apart from the library's arithmetic.
std::string rate_oracle(unsigned long long count, unsigned long long tokens) {
    unsigned long long num = count * 1000;
    std::string out = std::to_string(num / tokens) + ".";
    unsigned long long rem = num % tokens;
    for (int i = 0; i < 2; ++i) {
        rem *= 10;
        out += static_cast<char>('0' + rem / tokens);
        rem %= tokens;
    }
    return out;
}
}  // namespace

TEST_CASE("tokenize") {
    CHECK(texts(tokenize("b'fhéidir go mbeidh")) == std::vector<std::string>{"b'fhéidir", "go", "mbeidh"});
    CHECK(texts(tokenize("sub-aonadanna")) == std::vector<std::string>{"sub-aonadanna"});
    CHECK(tokenize("").empty());
    CHECK(texts(tokenize("ar a dtugtar \"simulachtóir\"...")) ==
          std::vector<std::string>{"ar", "a", "dtugtar", "simulachtóir"});
    CHECK(texts(tokenize("micirialtóir (MCU), n-éan")) == std::vector<std::string>{"micirialtóir", "MCU", "n-éan"});
    CHECK(texts(tokenize("B’fhéidir -- 100.000 kNm")) == std::vector<std::string>{"B’fhéidir", "100", "000", "kNm"});
    auto t = tokenize("tá fadhb");
    REQUIRE(t.size() == 2);
    CHECK(t[1].offset == 4);
    CHECK(t[1].index == 1);
}

TEST_CASE("tokenize round trip is a fixed point") {
    for (auto& d : load_doc("mini.jsonl"))
        for (auto& s : d.sentences) {
            auto once = texts(tokenize(s.target));
            std::string joined;
            for (auto& w : once) joined += (joined.empty() ? "" : " ") + w;
            CHECK(texts(tokenize(joined)) == once);
        }
}

TEST_CASE("hallucination_rate") {
    CHECK(hallucination_rate(21, 24194) == "0.86");
    CHECK(hallucination_rate(52, 24194) == "2.14");
    CHECK(hallucination_rate(0, 1000) == "0.00");
    CHECK(hallucination_rate(1, 3) == "333.33");
    CHECK_THROWS_AS(hallucination_rate(1, 0), ContractViolation);
    std::mt19937_64 rng(5);
    for (int i = 0; i < 2000; ++i) {
        unsigned long long tokens = rng() % 100000 + 1, count = rng() % 5000;
        CHECK(hallucination_rate(count, tokens) == rate_oracle(count, tokens));
    }
}

TEST_CASE("GPT4 fixture document") {
    auto docs = load_doc("gpt4.jsonl");
    REQUIRE(docs.size() == 1);
    auto r = analyze_document(docs[0], lex(), config(), {24194});
    CHECK(r.records.size() == 21);
    CHECK(r.rate_per_1000 == "0.86");
    CHECK(r.verbs.total() == 6);
    CHECK(r.verbs.rules == 4);
    CHECK(r.nouns.total() == 15);
    CHECK(r.nouns.rules == 11);
    CHECK(r.verbs.total() + r.nouns.total() == r.records.size());
}

TEST_CASE("Mini fixture document") {
    auto docs = load_doc("mini.jsonl");
    REQUIRE(docs.size() == 1);
    auto r = analyze_document(docs[0], lex(), config(), {24194});
    CHECK(r.verbs.rules == 2);
    CHECK(r.nouns.rules >= 18);
    CHECK(hallucination_rate(52, r.token_count) == "2.14");
}

TEST_CASE("all-lexicon document") {
    DocumentPair d{"plain", {{"There is wind.", "Tá gaoth ann."}, {"and the code", "agus an cód"}}, "x"};
    auto r = analyze_document(d, lex(), config());
    CHECK(r.records.empty());
    CHECK(r.rate_per_1000 == "0.00");
    CHECK(r.token_count == 6);
}

TEST_CASE("named entities, numbers and source copies are not hallucinations") {
    DocumentPair d{"ne", {{"the Arm processor and MCU X174", "an próiseálaí Arm agus MCU X174"}}, "x"};
    CHECK(analyze_document(d, lex(), config()).records.empty());
}

TEST_CASE("misalignment") {
    DocumentPair d{"bad", {{"wind", "gaoth"}, {"", "gaoth"}}, "x"};
    try {
        analyze_document(d, lex(), config());
        FAIL("expected an alignment error");
    } catch (const AlignmentError& e) {
        CHECK(e.sentence() == 2);
    }
    std::istringstream src("a\nb\n"), tgt("a\n");
    CHECK_THROWS_AS(load_parallel(src, tgt, "d", "m"), AlignmentError);
}

TEST_CASE("sentence order does not change the counts") {
    auto doc = load_doc("mini.jsonl")[0];
    auto base = analyze_document(doc, lex(), config());
    std::mt19937 rng(9);
    for (int i = 0; i < 3; ++i) {
        auto shuffled = doc;
        std::shuffle(shuffled.sentences.begin(), shuffled.sentences.end(), rng);
        auto r = analyze_document(shuffled, lex(), config());
        CHECK(r.records.size() == base.records.size());
        CHECK(r.verbs.rules == base.verbs.rules);
        CHECK(r.nouns.no_rules == base.nouns.no_rules);
        CHECK(r.rate_per_1000 == base.rate_per_1000);
    }
}

TEST_CASE("jsonl loading") {
    std::istringstream in(R"({"id":1,"src":"wind","tgt":"gaoth","model":"A"}
{"id":2,"src":"code","tgt":"cód","model":"B"}

{"id":3,"src":"fans","tgt":"fanaithe","model":"A"}
)");
    auto docs = load_jsonl(in);
    REQUIRE(docs.size() == 2);
    CHECK(docs[0].sentences.size() == 2);
    std::istringstream bad("{\"src\": 1}\n");
    CHECK_THROWS_AS(load_jsonl(bad), FormatError);
}

TEST_CASE("emit_report") {
    DocumentPair d{"two", {{"Giant fans of wind energy", "Fanaithe ollmhóra"}, {"windmill", "gaothmhoill"}}, "Mini"};
    auto r = analyze_document(d, lex(), config());
    REQUIRE(r.records.size() == 2);
    std::ostringstream j;
    emit_report(r, ReportFormat::Jsonl, j);
    CHECK(lines(j.str()) == 3);
    CHECK(j.str().find("\"type\":\"summary\"") != std::string::npos);
    for (auto& line : {j.str().substr(0, j.str().find('\n'))}) {
        auto rec = nlohmann::json::parse(line);
        auto ev = rec["evidence"].get<std::vector<std::string>>();
        std::sort(ev.begin(), ev.end());
        CHECK(std::adjacent_find(ev.begin(), ev.end()) == ev.end());
    }

    Report empty;
    empty.model_tag = "none";
    empty.token_count = 10;
    empty.recount();
    std::ostringstream e;
    emit_report(empty, ReportFormat::Jsonl, e);
    CHECK(lines(e.str()) == 1);
    CHECK(e.str().find("\"hallucinations\":0") != std::string::npos);

    std::ostringstream c;
    emit_report(r, ReportFormat::Csv, c);
    CHECK(lines(c.str()) == 3);
    CHECK(c.str().rfind("model,sentence_id,position,surface", 0) == 0);

    std::ostringstream t;
    emit_report(analyze_document(load_doc("gpt4.jsonl")[0], lex(), config(), {24194}), ReportFormat::Text, t);
    CHECK(t.str().find("Rules") != std::string::npos);
    CHECK(t.str().find("No Rules") != std::string::npos);
    CHECK(t.str().find("GPT4          04     02        06     67") != std::string::npos);
    CHECK(t.str().find("GPT4          11     04        15     73") != std::string::npos);

    CHECK_THROWS_AS(parse_format("xml"), UsageError);
}
