#include <doctest.h>

#include "gaelcheck/errors.hpp"
#include "gaelcheck/generator.hpp"
#include "support.hpp"

using namespace gaelcheck;
using testsupport::config;
using testsupport::lex;

TEST_CASE("recipes reproduce attested coinages") {
    CHECK(make_compound("gaoth", "moill") == "gaothmhoill");
    CHECK(make_compound("comhair", "lín") == "comhairlín");
    CHECK(make_prefixed("fóta", "micreagraf") == "fótamhicreagraf");
    CHECK(validate_noun("fan" + std::string("aithe"), lex()).conformant);
}

TEST_CASE("respelling and harmony repair") {
    CHECK(repair_harmony("caset") == "caiset");
    CHECK(repair_harmony("gaoth") == "gaoth");
    CHECK(check_vowel_harmony(respell_english("alchemy")).passed);
    CHECK(check_alphabet(respell_english("evolution")).empty());
    for (auto& e : lex().english.entries()) {
        auto r = respell_english(e.form);
        if (r.empty() || !has_vowel(r)) continue;
        CHECK_MESSAGE(check_vowel_harmony(r).passed, e.form << " -> " << r);
        CHECK_MESSAGE(check_alphabet(r).empty(), e.form << " -> " << r);
    }
}

TEST_CASE("broken compounds break harmony only") {
    auto words = generate({Category::Compound, 20, 3, false}, lex(), config());
    REQUIRE(words.size() == 20);
    for (auto& w : words) {
        CHECK(w.rule_violated == "harmony");
        auto v = validate_noun(w.word, lex());
        CHECK(v.rules() == std::vector<std::string>{"harmony"});
    }
}

TEST_CASE("every pattern generates oov words with exact verdicts") {
    for (auto pattern : pattern_categories()) {
        for (bool good : {true, false}) {
            auto words = generate({pattern, 25, 11, good}, lex(), config());
            REQUIRE(words.size() == 25);
            for (auto& w : words) {
                CHECK_FALSE(lex().irish.lookup(w.word).found());
                CHECK(w.pattern == pattern);
                CHECK(w.conformant == good);
                CHECK(w.rule_violated.empty() == good);
                auto rec = classify_token({w.word, 1, 0, ""}, w.source, lex(), config());
                CHECK_MESSAGE(rec.verdict.conformant == good, w.word << " " << rec.verdict.summary());
                if (!good) CHECK(rec.verdict.rules() == std::vector<std::string>{w.rule_violated});
            }
        }
    }
}

TEST_CASE("seed determinism") {
    GenSpec spec{Category::CodeSwitching, 30, 42, true};
    auto a = generate(spec, lex(), config());
    auto b = generate(spec, lex(), config());
    REQUIRE(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); ++i) CHECK(a[i].word == b[i].word);
    spec.seed = 43;
    auto c = generate(spec, lex(), config());
    bool differs = false;
    for (std::size_t i = 0; i < a.size(); ++i) differs = differs || a[i].word != c[i].word;
    CHECK(differs);
}

TEST_CASE("bad specs") {
    CHECK_THROWS_AS(generate({Category::Compound, 0, 1, true}, lex(), config()), UsageError);
    CHECK_THROWS_AS(generate({Category::Unclassified, 1, 1, true}, lex(), config()), UsageError);
    CHECK_THROWS_AS(generate({Category::VerbUnclassified, 1, 1, true}, lex(), config()), UsageError);
}

TEST_CASE("missing material is reported") {
    auto bare = Lexicon::load(std::string_view("agus\tOther\tnative\n"));
    Lexicons l{bare, lex().english, MorphRules::builtin()};
    CHECK_THROWS_AS(generate({Category::Compound, 1, 1, true}, l, config()), GenerationError);
}
