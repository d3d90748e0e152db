#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "gaelcheck/nounmorph.hpp"
#include "gaelcheck/phonetic.hpp"
#include "gaelcheck/verbmorph.hpp"

namespace gaelcheck {

enum class Category {
    VerbNounConjugation,
    VerbEnglishConjugated,
    VerbUnclassified,
    Compound,
    LazyGaelicisation,
    GoodConfabulation,
    CodeSwitching,
    Prefix,
    Suffix,
    Unclassified,
};

const char* to_string(Category c);
// "Compound", "CodeSwitching", "Verb/NounConjugation", ...
const char* display_name(Category c);
std::optional<Category> parse_category(std::string_view name);
bool is_verb(Category c);
// The eight generator patterns, verbs first.
const std::vector<Category>& pattern_categories();

struct ClassifierConfig {
    double similarity_threshold = 0.6;
    std::size_t min_english_root = 3;
    // Noun steps in decision order; each is one of the six noun categories.
    std::vector<Category> order = {Category::Compound, Category::CodeSwitching, Category::LazyGaelicisation,
                                   Category::Prefix,   Category::Suffix,        Category::GoodConfabulation};

    static ClassifierConfig parse(std::string_view text);
    static ClassifierConfig load_file(const std::string& path);
};

struct AnalyzedToken {
    std::string surface;
    std::size_t sentence_id = 0;
    std::size_t position = 0;
    std::string left_context;  // previous token in the sentence, if any
};

struct SourceLink {
    std::string english;
    double similarity = 0;
};

struct HallucinationRecord {
    std::string surface;
    std::size_t sentence_id = 0;
    std::size_t position = 0;
    Category category = Category::Unclassified;
    RuleVerdict verdict;
    std::vector<std::string> evidence;
    std::string detail;  // short form of the deciding analysis, e.g. "gaoth+mhoill"
    std::optional<SourceLink> source_link;
};

// Throws ContractViolation when the token (or a mutation reading of it) is in the lexicon.
HallucinationRecord classify_token(const AnalyzedToken& token, const std::vector<std::string>& source_words,
                                   const Lexicons& lex, const ClassifierConfig& config = {});

}  // namespace gaelcheck
