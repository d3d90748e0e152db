#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "gaelcheck/rules.hpp"
#include "gaelcheck/verdict.hpp"

namespace gaelcheck {

struct VerbAnalysis {
    std::string root;
    Conjugation conjugation;
    std::string suffix;
    VowelClass suffix_class;
    VerbSlot slot;
    MutationKind mutation_seen = MutationKind::None;

    std::string form() const { return root + suffix; }
};

// Every suffix strip, including class-mismatched ones.
std::vector<VerbAnalysis> verb_candidates(std::string_view word,
                                          const MorphRules& rules = MorphRules::builtin());

// Candidates whose suffix class agrees with the root's final vowel.
std::vector<VerbAnalysis> parse_verb(std::string_view word,
                                     const MorphRules& rules = MorphRules::builtin());

enum class VerbRootSource { IrishLexicon, IrishPrefixed, English, TruncatedIrish, Unknown };

struct VerbRoot {
    VerbRootSource source = VerbRootSource::Unknown;
    std::string base;             // lexicon or English word the root resolved to
    PartOfSpeech pos = PartOfSpeech::Unknown;
    std::string prefix;           // set for IrishPrefixed
    bool prefix_lenition_ok = true;
    bool exact_english = false;
    int base_syllables = 0;
    bool has_formative = false;
};

VerbRoot resolve_verb_root(std::string_view root, const Lexicons& lex);

// With no analyses, falls back to verb_candidates(word); if that is empty too the
// verdict carries a single "not-a-verb" violation.
RuleVerdict validate_verb(std::string_view word, const std::vector<VerbAnalysis>& analyses,
                          const Lexicons& lex);

}  // namespace gaelcheck
