#include "gaelcheck/phonetic.hpp"

#include <algorithm>
#include <utility>
#include <vector>

#include "gaelcheck/text.hpp"

namespace gaelcheck {

namespace {

using U = std::u32string;
using UV = std::u32string_view;

constexpr UV kVowels = U"aeiouáéíóú";

bool vowel(char32_t c) { return kVowels.find(c) != UV::npos; }

char32_t vowel_group(UV g) {
    static constexpr UV fada = U"áéíóú";
    static constexpr UV longv = U"AEIOU";
    for (char32_t c : g)
        if (auto p = fada.find(c); p != UV::npos) return longv[p];
    if (g == U"ao") return U'I';
    if (g.size() >= 2 && (g[0] == U'e' || g[0] == U'i') && UV(U"aou").find(g[1]) != UV::npos) g.remove_prefix(1);
    if (g.size() >= 2 && g.back() == U'i') g.remove_suffix(1);
    return g.empty() ? 0 : g[0];
}

U prep(std::string_view s) { return text::fold(text::nfc(text::decode(s))); }

bool ends_with(UV s, UV suf) { return s.size() >= suf.size() && s.substr(s.size() - suf.size()) == suf; }

struct Ending {
    UV form;
    UV tag;
};

constexpr Ending kIrishEndings[] = {{U"óireacht", U"#N"}, {U"aíocht", U"#N"}, {U"íocht", U"#N"},
                                    {U"eacht", U"#N"},    {U"acht", U"#N"},   {U"achtóir", U"#A"},
                                    {U"eoir", U"#A"},     {U"óir", U"#A"}};
constexpr Ending kEnglishEndings[] = {{U"ation", U"#N"}, {U"ition", U"#N"}, {U"tion", U"#N"},
                                      {U"sion", U"#N"},  {U"ics", U"#N"},   {U"ity", U"#N"},
                                      {U"ator", U"#A"},  {U"er", U"#A"},    {U"or", U"#A"}};

template <std::size_t N>
std::pair<U, UV> strip_ending(const U& w, const Ending (&table)[N]) {
    for (auto& e : table)
        if (ends_with(w, e.form) && w.size() - e.form.size() >= 3) return {w.substr(0, w.size() - e.form.size()), e.tag};
    return {w, UV{}};
}

U irish_skel(UV w) {
    U out;
    std::size_t i = 0;
    while (i < w.size()) {
        char32_t c = w[i];
        char32_t n = i + 1 < w.size() ? w[i + 1] : 0;
        if (n == U'h') {
            switch (c) {
                case U'b': case U'm': out += U'v'; i += 2; continue;
                case U'c': out += U'x'; i += 2; continue;
                case U't': case U's': out += U'h'; i += 2; continue;
                case U'p': out += U'f'; i += 2; continue;
                case U'd': case U'g': case U'f': i += 2; continue;
                default: break;
            }
        }
        if (vowel(c)) {
            std::size_t j = i;
            while (j < w.size() && vowel(w[j])) ++j;
            if (char32_t g = vowel_group(w.substr(i, j - i))) out += g;
            i = j;
            continue;
        }
        if (c == U's') {
            bool slender = (i > 0 && UV(U"eiéí").find(w[i - 1]) != UV::npos) ||
                           (n && UV(U"eiéí").find(n) != UV::npos);
            out += slender ? U'S' : U's';
            ++i;
            continue;
        }
        if (c == U'c') {
            out += U'k';
            ++i;
            continue;
        }
        if (i > 0 && w[i - 1] == c) {
            ++i;
            continue;
        }
        if (text::is_letter(c)) out += c;
        ++i;
    }
    return out;
}

U english_skel(U w) {
    if (w.size() > 3 && w.back() == U's' && w[w.size() - 2] != U's' && w[w.size() - 2] != U'u') w.pop_back();
    if (w.size() > 3 && w.back() == U'e' && !vowel(w[w.size() - 2])) w.pop_back();
    U out;
    std::size_t i = 0;
    while (i < w.size()) {
        char32_t c = w[i];
        char32_t n = i + 1 < w.size() ? w[i + 1] : 0;
        UV two = i + 1 < w.size() ? UV(w).substr(i, 2) : UV{};
        if (two == U"ph") { out += U'f'; i += 2; continue; }
        if (two == U"ch" || two == U"ck") { out += U'k'; i += 2; continue; }
        if (two == U"th") { out += U't'; i += 2; continue; }
        if (two == U"sh") { out += U'S'; i += 2; continue; }
        if (two == U"qu") { out += U"kw"; i += 2; continue; }
        if (two == U"ee" || two == U"ea") { out += U'I'; i += 2; continue; }
        if (two == U"oo") { out += U'U'; i += 2; continue; }
        if (c == U'c') {
            out += (n && UV(U"eiy").find(n) != UV::npos) ? U's' : U'k';
            ++i;
            continue;
        }
        if (c == U'x') { out += U"ks"; ++i; continue; }
        if (c == U'y') { out += U'i'; ++i; continue; }
        if (i > 0 && w[i - 1] == c) { ++i; continue; }
        if (vowel(c)) {
            std::size_t j = i;
            while (j < w.size() && vowel(w[j])) ++j;
            out += c;
            i = j;
            continue;
        }
        if (text::is_letter(c)) out += c;
        ++i;
    }
    return out;
}

bool long_vowel(char32_t c) { return UV(U"AEIOU").find(c) != UV::npos; }
bool any_vowel(char32_t c) { return UV(U"aeiouAEIOU").find(c) != UV::npos; }
char32_t lower(char32_t c) { return (c >= U'A' && c <= U'Z') ? c + 32 : c; }

double sub_cost(char32_t a, char32_t b) {
    if (a == b) return 0;
    if (any_vowel(a) && any_vowel(b)) {
        if (lower(a) == lower(b) && (long_vowel(a) || long_vowel(b))) return 0.25;
        return 0.5;
    }
    static constexpr UV pairs[] = {U"td", U"kgx", U"pb", U"fv", U"sSz"};
    for (auto p : pairs)
        if (p.find(a) != UV::npos && p.find(b) != UV::npos) return 0.5;
    return 1;
}

double similarity(UV a, UV b) {
    if (a.empty() && b.empty()) return 1;
    return 1 - skeleton_distance(a, b) / static_cast<double>(std::max(a.size(), b.size()));
}

}  // namespace

std::u32string irish_skeleton(std::string_view irish) { return irish_skel(prep(irish)); }

std::u32string english_skeleton(std::string_view english) { return english_skel(prep(english)); }

double skeleton_distance(std::u32string_view a, std::u32string_view b) {
    std::vector<double> prev(b.size() + 1), cur(b.size() + 1);
    for (std::size_t j = 0; j <= b.size(); ++j) prev[j] = static_cast<double>(j);
    for (std::size_t i = 1; i <= a.size(); ++i) {
        cur[0] = static_cast<double>(i);
        for (std::size_t j = 1; j <= b.size(); ++j)
            cur[j] = std::min({prev[j] + 1, cur[j - 1] + 1, prev[j - 1] + sub_cost(a[i - 1], b[j - 1])});
        std::swap(prev, cur);
    }
    return prev[b.size()];
}

double phonetic_similarity(std::string_view english, std::string_view irish) {
    auto e = prep(english);
    auto g = prep(irish);
    double best = similarity(english_skel(e), irish_skel(g));
    auto [es, et] = strip_ending(e, kEnglishEndings);
    auto [gs, gt] = strip_ending(g, kIrishEndings);
    if (!et.empty() && et == gt) best = std::max(best, similarity(english_skel(es) + U(et), irish_skel(gs) + U(gt)));
    return std::clamp(best, 0.0, 1.0);
}

}  // namespace gaelcheck
