#include <doctest.h>

#include <algorithm>
#include <map>

#include "gaelcheck/errors.hpp"
#include "support.hpp"

using namespace gaelcheck;
using testsupport::classify_gold;
using testsupport::config;
using testsupport::gold;
using testsupport::lex;

namespace {
HallucinationRecord run(const std::string& w, std::vector<std::string> src, const std::string& left = "") {
    return classify_token({w, 1, 0, left}, src, lex(), config());
}
}  // namespace

TEST_CASE("phonetic_similarity") {
    CHECK(phonetic_similarity("nacelle", "nascáil") >= 0.6);
    CHECK(phonetic_similarity("triplet", "tripléid") >= 0.6);
    CHECK(phonetic_similarity("wind", "wind") == doctest::Approx(1.0));
    for (auto [e, g] : {std::pair{"alchemy", "alcaimíocht"}, {"genomics", "géanómóireacht"}, {"fans", "fanaithe"}}) {
        double s = phonetic_similarity(e, g);
        CHECK(s >= 0.0);
        CHECK(s <= 1.0);
    }
}

TEST_CASE("classify_token examples") {
    auto f = run("fanaithe", {"fans"});
    CHECK(f.category == Category::CodeSwitching);
    CHECK(f.verdict.conformant);

    auto s = run("shraitheamar", {"sequenced"});
    CHECK(s.category == Category::VerbNounConjugation);
    CHECK(s.verdict.conformant);

    auto n = run("nascáil", {"nacelle"});
    CHECK(n.category == Category::LazyGaelicisation);
    CHECK(n.verdict.conformant);

    auto a = run("Seanríochtaí", {"Archaea"});
    CHECK(a.category == Category::GoodConfabulation);
    CHECK(a.verdict.conformant);

    auto e = run("evoláid", {"evolution"});
    CHECK(e.category == Category::CodeSwitching);
    CHECK_FALSE(e.verdict.conformant);
    CHECK(e.verdict.has("alphabet"));

    auto t = run("turasáin", {"turbines"});
    CHECK(t.category == Category::Suffix);
    CHECK(t.verdict.conformant);
}

TEST_CASE("lexicon words are refused") {
    CHECK_THROWS_AS(run("gaoth", {}), ContractViolation);
    CHECK_THROWS_AS(run("mhoill", {}), ContractViolation);
}

TEST_CASE("compound outranks lazy gaelicisation") {
    auto r = run("gaothmhoill", {"windmill", "mill"});
    CHECK(r.category == Category::Compound);
    CHECK(r.detail == "gaoth+mhoill");
}

TEST_CASE("noun context keeps radaim nominal") {
    CHECK(run("radaim", {"rads"}, "mhilliún").category == Category::Suffix);
    CHECK(is_verb(run("radaim", {"rads"}).category));
}

TEST_CASE("source link is set for lazy and code-switching records") {
    for (auto& g : gold()) {
        auto r = classify_gold(g);
        if (r.category == Category::LazyGaelicisation || r.category == Category::CodeSwitching) {
            REQUIRE(r.source_link.has_value());
            CHECK(r.source_link->similarity >= 0.0);
            CHECK(r.source_link->similarity <= 1.0);
        }
        CHECK(r.verdict.conformant == r.verdict.violations.empty());
    }
}

TEST_CASE("gold verdicts and categories") {
    for (auto& g : gold()) {
        auto r = classify_gold(g);
        CHECK_MESSAGE(r.verdict.conformant == g.conformant, g.word << ": " << r.verdict.summary());
        if (g.category != "*")
            CHECK_MESSAGE(std::string(to_string(r.category)) == g.category, g.word << " -> " << to_string(r.category));
    }
}

TEST_CASE("determinism") {
    for (auto& g : gold()) {
        auto a = classify_gold(g);
        auto b = classify_gold(g);
        CHECK(a.category == b.category);
        CHECK(a.verdict.violations == b.verdict.violations);
        CHECK(a.evidence == b.evidence);
    }
}

TEST_CASE("threshold never changes a verdict") {
    for (auto& g : gold()) {
        auto base = classify_gold(g);
        for (double t : {0.0, 0.3, 0.9, 1.0}) {
            auto cfg = config();
            cfg.similarity_threshold = t;
            CHECK(classify_gold(g, cfg).verdict.conformant == base.verdict.conformant);
        }
    }
}

TEST_CASE("totality on odd tokens") {
    for (auto w : {"xyz", "bhfr", "qqqqq", "a-b-c-d", "ÁÁÁ", "zzzaithe"}) {
        if (lex().irish.lookup(w).found()) continue;
        CHECK_NOTHROW(run(w, {"anything"}));
    }
}

// Sweeps the threshold over the gold items that carry a category and keeps the
// interval where every one is classified into its own table.
TEST_CASE("calibration sweep keeps the configured threshold inside the agreeing interval") {
    std::vector<testsupport::GoldItem> items;
    for (auto& g : gold())
        if (g.category != "*") items.push_back(g);
    double lo = -1, hi = -1, best_lo = -1, best_hi = -1;
    for (int k = 0; k <= 1000; ++k) {
        double t = k / 1000.0;
        auto cfg = config();
        cfg.similarity_threshold = t;
        bool ok = std::all_of(items.begin(), items.end(),
                              [&](auto& g) { return to_string(classify_gold(g, cfg).category) == g.category; });
        if (ok) {
            if (lo < 0) lo = t;
            hi = t;
            if (hi - lo > best_hi - best_lo) best_lo = lo, best_hi = hi;
        } else {
            lo = hi = -1;
        }
    }
    MESSAGE("agreeing interval [" << best_lo << ", " << best_hi << "]");
    REQUIRE(best_lo >= 0);
    CHECK(config().similarity_threshold >= best_lo);
    CHECK(config().similarity_threshold <= best_hi);
}

TEST_CASE("config parsing") {
    auto c = ClassifierConfig::parse("# c\nsimilarity_threshold = 0.7\nmin_english_root=4\n");
    CHECK(c.similarity_threshold == doctest::Approx(0.7));
    CHECK(c.min_english_root == 4);
    CHECK(c.order.front() == Category::Compound);
    auto o = ClassifierConfig::parse(
        "category_order = suffix, prefix, compound, code-switching, lazy-gaelicisation, good-confabulation\n");
    CHECK(o.order.front() == Category::Suffix);
    CHECK_THROWS_AS(ClassifierConfig::parse("similarity_threshold = 2"), ConfigError);
    CHECK_THROWS_AS(ClassifierConfig::parse("colour = blue"), ConfigError);
    CHECK_THROWS_AS(ClassifierConfig::parse("category_order = compound, compound"), ConfigError);
    CHECK_THROWS_AS(ClassifierConfig::parse("similarity_threshold"), ConfigError);
}

TEST_CASE("order override is honoured") {
    auto cfg = config();
    cfg.order = {Category::GoodConfabulation, Category::Compound, Category::CodeSwitching,
                 Category::LazyGaelicisation, Category::Prefix, Category::Suffix};
    auto r = classify_token({"gaothmhoill", 1, 0, ""}, {"windmill"}, lex(), cfg);
    CHECK(r.category == Category::GoodConfabulation);
}

TEST_CASE("category names round trip") {
    for (auto c : {Category::VerbNounConjugation, Category::VerbEnglishConjugated, Category::VerbUnclassified,
                   Category::Compound, Category::LazyGaelicisation, Category::GoodConfabulation,
                   Category::CodeSwitching, Category::Prefix, Category::Suffix, Category::Unclassified})
        CHECK(parse_category(to_string(c)) == c);
    CHECK_FALSE(parse_category("bogus").has_value());
}
