#pragma once

#include <string>
#include <string_view>

namespace gaelcheck {

// Rough phoneme skeletons. Uppercase vowels are long; S is the slender s.
std::u32string irish_skeleton(std::string_view irish);
std::u32string english_skeleton(std::string_view english);

// Weighted edit distance: long/short vowel 0.25, vowel/vowel 0.5, voicing pair 0.5.
double skeleton_distance(std::u32string_view a, std::u32string_view b);

// 1 - distance / longer skeleton length, maximised over a reading that maps
// matching derivational endings (-ation/-íocht, -ator/-óir, ...) onto one symbol.
double phonetic_similarity(std::string_view english, std::string_view irish);

}  // namespace gaelcheck
