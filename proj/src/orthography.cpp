#include "gaelcheck/orthography.hpp"

#include "gaelcheck/errors.hpp"
#include "gaelcheck/text.hpp"

namespace gaelcheck {

namespace {

constexpr std::u32string_view kBroad = U"aáoóuú";
constexpr std::u32string_view kSlender = U"eéií";
constexpr std::u32string_view kForeign = U"jkqvwxyz";
constexpr std::u32string_view kLenitable = U"bcdfgmpt";

std::u32string prep(std::string_view w) { return text::fold(text::nfc(text::decode(w))); }

bool is_cluster_char(char32_t c) { return !is_vowel(c) && text::is_letter(c); }

bool vowel_or(char32_t c, std::u32string_view extra) {
    return is_vowel(c) || extra.find(c) != std::u32string_view::npos;
}

bool lenitable32(std::u32string_view w) {
    if (w.size() < 2) return w.size() == 1 && kLenitable.find(w[0]) != std::u32string_view::npos;
    if (kLenitable.find(w[0]) != std::u32string_view::npos) return w[1] != U'h';
    if (w[0] == U's') return vowel_or(w[1], U"lnr");
    return false;
}

bool lenited32(std::u32string_view w) {
    if (w.size() < 3 || w[1] != U'h') return false;
    if (kLenitable.find(w[0]) != std::u32string_view::npos) return true;
    return w[0] == U's' && vowel_or(w[2], U"lnr");
}

}  // namespace

const char* to_string(VowelClass v) { return v == VowelClass::Broad ? "broad" : "slender"; }

const char* to_string(MutationKind m) {
    switch (m) {
        case MutationKind::None: return "none";
        case MutationKind::Lenition: return "lenition";
        case MutationKind::Eclipsis: return "eclipsis";
        case MutationKind::TPrefix: return "t-prefix";
        case MutationKind::HPrefix: return "h-prefix";
    }
    return "none";
}

std::optional<VowelClass> classify_vowel(char32_t c) {
    c = text::fold(c);
    if (kBroad.find(c) != std::u32string_view::npos) return VowelClass::Broad;
    if (kSlender.find(c) != std::u32string_view::npos) return VowelClass::Slender;
    return std::nullopt;
}

bool is_vowel(char32_t c) { return classify_vowel(c).has_value(); }

std::set<char32_t> check_alphabet(std::string_view word) {
    std::set<char32_t> out;
    for (char32_t c : prep(word))
        if (kForeign.find(c) != std::u32string_view::npos) out.insert(c);
    return out;
}

HarmonyReport check_vowel_harmony(std::u32string_view w) {
    HarmonyReport r;
    bool any = false;
    for (char32_t c : w) any = any || is_vowel(c);
    if (!any) throw UnanalyzableToken("no vowel in '" + text::encode(w) + "'");
    std::size_t i = 0;
    while (i < w.size()) {
        if (!is_vowel(w[i])) {
            ++i;
            continue;
        }
        std::size_t j = i + 1;
        while (j < w.size() && is_cluster_char(w[j])) ++j;
        if (j > i + 1 && j < w.size() && is_vowel(w[j])) {
            auto left = *classify_vowel(w[i]);
            auto right = *classify_vowel(w[j]);
            if (left != right) r.violations.push_back({i + 1, j, left, right});
        }
        i = j;
    }
    r.passed = r.violations.empty();
    return r;
}

HarmonyReport check_vowel_harmony(std::string_view word) { return check_vowel_harmony(prep(word)); }

bool lenitable(std::string_view root) { return lenitable32(prep(root)); }

bool is_lenited(std::string_view word) { return lenited32(prep(word)); }

std::string apply_lenition(std::string_view root) {
    auto raw = text::nfc(text::decode(root));
    if (!lenitable32(text::fold(raw))) return text::encode(raw);
    bool all_caps = raw.size() > 1 && text::is_upper(raw[0]) && text::is_upper(raw[1]);
    raw.insert(raw.begin() + 1, all_caps ? U'H' : U'h');
    return text::encode(raw);
}

std::string apply_eclipsis(std::string_view root) {
    auto w = prep(root);
    if (w.empty()) return {};
    char32_t c = w[0];
    std::u32string pre;
    switch (c) {
        case U'b': pre = U"m"; break;
        case U'c': pre = U"g"; break;
        case U'd': pre = U"n"; break;
        case U'f': pre = U"bh"; break;
        case U'g': pre = U"n"; break;
        case U'p': pre = U"b"; break;
        case U't': pre = U"d"; break;
        default:
            if (is_vowel(c)) pre = U"n-";
    }
    return text::encode(pre + w);
}

std::string strip_lenition(std::string_view word) {
    auto w = prep(word);
    if (!lenited32(w)) return text::encode(w);
    w.erase(1, 1);
    return text::encode(w);
}

std::vector<MutationReading> detect_and_strip_mutation(std::string_view word) {
    auto w = prep(word);
    std::vector<MutationReading> out;
    out.push_back({MutationKind::None, text::encode(w)});
    auto add = [&](MutationKind k, std::u32string_view root) {
        if (root.empty()) return;
        out.push_back({k, text::encode(root)});
    };
    if (lenited32(w)) add(MutationKind::Lenition, std::u32string(1, w[0]) + w.substr(2));

    auto starts = [&](std::u32string_view p) { return w.size() > p.size() && w.substr(0, p.size()) == p; };
    static constexpr std::u32string_view eclipses[] = {U"bhf", U"mb", U"gc", U"nd", U"ng", U"bp", U"dt"};
    for (auto p : eclipses) {
        if (starts(p)) {
            add(MutationKind::Eclipsis, w.substr(p.size() - 1));
            break;
        }
    }
    if (starts(U"n-") && is_vowel(w[2])) add(MutationKind::Eclipsis, w.substr(2));
    if (starts(U"t-") && is_vowel(w[2])) add(MutationKind::TPrefix, w.substr(2));
    if (starts(U"ts") && w.size() > 2 && vowel_or(w[2], U"lnr")) add(MutationKind::TPrefix, w.substr(1));
    if (w.size() > 1 && w[0] == U'h' && is_vowel(w[1])) add(MutationKind::HPrefix, w.substr(1));
    return out;
}

int syllable_count(std::string_view word) {
    auto w = prep(word);
    int n = 0;
    bool in_group = false;
    for (char32_t c : w) {
        bool v = is_vowel(c);
        if (v && !in_group) ++n;
        in_group = v;
    }
    if (n == 0) throw UnanalyzableToken("no vowel in '" + std::string(word) + "'");
    return n;
}

VowelClass final_quality(std::string_view stem) {
    auto w = prep(stem);
    for (auto it = w.rbegin(); it != w.rend(); ++it)
        if (auto v = classify_vowel(*it)) return *v;
    throw UnanalyzableToken("no vowel in '" + std::string(stem) + "'");
}

std::optional<VowelClass> first_quality(std::string_view s) {
    for (char32_t c : prep(s))
        if (auto v = classify_vowel(c)) return v;
    return std::nullopt;
}

bool has_vowel(std::string_view s) { return first_quality(s).has_value(); }

bool dental_block(std::string_view left, std::string_view right_root) {
    auto l = prep(left);
    auto r = prep(right_root);
    if (l.empty() || r.empty()) return false;
    char32_t last = l.back();
    return std::u32string_view(U"dntls").find(last) != std::u32string_view::npos &&
           std::u32string_view(U"dts").find(r[0]) != std::u32string_view::npos;
}

}  // namespace gaelcheck
