#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "gaelcheck/rules.hpp"
#include "gaelcheck/verdict.hpp"

namespace gaelcheck {

enum class PluralStrategy { WeakSlenderized, WeakA, Strong };
const char* to_string(PluralStrategy s);

struct PluralAnalysis {
    std::string root;
    PluralStrategy strategy;
    std::string suffix;
    bool root_in_lexicon = false;
    bool root_well_formed = false;
    bool seam_harmony = true;
};

struct CompoundSplit {
    LexEntry first;
    LexEntry second;              // lexicon entry the second part resolves to
    std::string second_surface;   // as written in the word
    std::string second_suffix;    // inflection on the second part, if any
    bool second_lenited = false;
    bool lenition_expected = false;
    bool seam_harmony = true;
};

struct PrefixAnalysis {
    std::string prefix;           // as written
    std::string canonical;
    bool native = true;
    bool hyphenated = false;
    std::string remainder;        // as written, mutation included
    std::string remainder_root;
    bool lenition_expected = false;
    bool lenition_present = false;
    bool remainder_in_lexicon = false;
    bool remainder_well_formed = false;
};

struct SuffixAnalysis {
    LexEntry root;
    std::string stem;             // root as it appears in the word
    bool elided = false;          // root's final vowel dropped before the suffix
    bool slenderized = false;
    std::vector<const NounSuffix*> morphs;

    std::string chain() const;
    std::size_t chain_length() const;
};

struct CodeSwitchAnalysis {
    std::string fragment;         // English-spelled part of the word
    std::string english;          // word it matches
    bool exact = false;
    std::vector<const NounSuffix*> morphs;
    bool ending_corresponds = true;
};

// Shape checks shared by the analyses.
std::vector<std::string> illegal_geminates(std::string_view word);
bool well_formed(std::string_view root);
std::string slenderize(std::string_view root);
std::vector<std::string> deslenderize(std::string_view form);

std::vector<PluralAnalysis> analyze_plural(std::string_view word, const Lexicons& lex);
std::vector<CompoundSplit> split_compound(std::string_view word, const Lexicons& lex);
std::vector<PrefixAnalysis> check_prefix(std::string_view word, const Lexicons& lex);
std::vector<SuffixAnalysis> analyze_suffixes(std::string_view word, const Lexicons& lex);
std::vector<CodeSwitchAnalysis> analyze_code_switch(std::string_view word, const Lexicons& lex,
                                                    std::size_t min_root = 3);

// A form the lexicon knows directly, through a mutation, or as an inflection of a member.
std::optional<LexEntry> resolve_nominal(std::string_view form, const Lexicons& lex,
                                        std::string* suffix = nullptr);

RuleVerdict validate_noun(std::string_view word, const Lexicons& lex);

}  // namespace gaelcheck
