#pragma once

#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace gaelcheck {

enum class VowelClass { Broad, Slender };

enum class MutationKind { None, Lenition, Eclipsis, TPrefix, HPrefix };

struct HarmonyViolation {
    std::size_t begin;  // code-point index of the first cluster consonant
    std::size_t end;    // one past the last
    VowelClass left;
    VowelClass right;
};

struct HarmonyReport {
    bool passed = true;
    std::vector<HarmonyViolation> violations;
};

struct MutationReading {
    MutationKind kind;
    std::string root;
    bool operator==(const MutationReading&) const = default;
};

const char* to_string(VowelClass v);
const char* to_string(MutationKind m);

std::optional<VowelClass> classify_vowel(char32_t c);
bool is_vowel(char32_t c);

std::set<char32_t> check_alphabet(std::string_view word);

HarmonyReport check_vowel_harmony(std::string_view word);
HarmonyReport check_vowel_harmony(std::u32string_view folded);

// True when apply_lenition would change the word's initial.
bool lenitable(std::string_view root);
// Initial consonant followed by the lenition h.
bool is_lenited(std::string_view word);
std::string apply_lenition(std::string_view root);
std::string apply_eclipsis(std::string_view root);
std::string strip_lenition(std::string_view word);

std::vector<MutationReading> detect_and_strip_mutation(std::string_view word);

int syllable_count(std::string_view word);
VowelClass final_quality(std::string_view stem);
std::optional<VowelClass> first_quality(std::string_view s);

bool has_vowel(std::string_view s);

// Dental meeting dental (n+d, s+t, ...) blocks lenition across a seam.
bool dental_block(std::string_view left, std::string_view right_root);

}  // namespace gaelcheck
