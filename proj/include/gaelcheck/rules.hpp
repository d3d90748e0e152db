#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "gaelcheck/lexicon.hpp"
#include "gaelcheck/orthography.hpp"

namespace gaelcheck {

enum class Conjugation { First, Second };
enum class VerbSlot { Pres1Sg, PresAnalytic, Pres1Pl, PresAut, Past1Pl, PastAut, PastAnalytic };
enum class SuffixKind { Derivational, Plural, Genitive };

const char* to_string(Conjugation c);
const char* to_string(VerbSlot s);
const char* to_string(SuffixKind k);
bool is_past(VerbSlot s);

struct VerbSuffix {
    std::string form;
    Conjugation conjugation;
    VowelClass cls;
    VerbSlot slot;
};

struct PrefixRule {
    std::string form;
    std::string canonical;
    bool lenites = true;
    bool native = true;
    std::vector<std::string> glosses;
};

struct NounSuffix {
    std::string form;
    SuffixKind kind;
    VowelClass cls;
    bool noun_root_only = false;
    std::vector<std::string> english_endings;
};

class MorphRules {
public:
    static MorphRules load(std::string_view text, const std::string& name = "rules");
    static MorphRules load_file(const std::string& path);
    // Inventories shipped with the library (data/morphology.tsv).
    static const MorphRules& builtin();

    std::vector<VerbSuffix> verb_suffixes;
    std::vector<PrefixRule> prefixes;
    std::vector<NounSuffix> noun_suffixes;
    std::vector<std::string> formatives;

    bool is_suffix_form(std::string_view form) const;
};

// Everything the morphological validators consult.
struct Lexicons {
    const Lexicon& irish;
    const Lexicon& english;
    const MorphRules& rules = MorphRules::builtin();
};

namespace seed {
std::string_view irish_lexicon();
std::string_view english_lexicon();
std::string_view morphology();
std::string_view classifier_config();
}  // namespace seed

}  // namespace gaelcheck
