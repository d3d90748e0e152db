#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "gaelcheck/classifier.hpp"

namespace gaelcheck {

struct GenSpec {
    Category pattern = Category::Compound;
    std::size_t count = 1;
    std::uint64_t seed = 0;
    bool well_formed = true;
};

struct GeneratedWord {
    std::string word;
    Category pattern = Category::Compound;
    bool conformant = true;
    std::string rule_violated;         // empty for well-formed output
    std::vector<std::string> source;   // English context to classify against
    std::string recipe;                // parts the word was built from
};

// Throws UsageError for an unusable spec and GenerationError when the lexicon
// cannot supply the pattern or 1000 draws in a row are rejected.
std::vector<GeneratedWord> generate(const GenSpec& spec, const Lexicons& lex, const ClassifierConfig& config = {});

// Building blocks, exposed for tests.
std::string make_compound(std::string_view first, std::string_view second);
std::string make_prefixed(std::string_view prefix, std::string_view noun);
std::string respell_english(std::string_view english);
// Inserts i/e so every internal cluster has matching vowels on both sides.
std::string repair_harmony(std::string_view word);

}  // namespace gaelcheck
