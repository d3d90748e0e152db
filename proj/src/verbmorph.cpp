#include "gaelcheck/verbmorph.hpp"

#include <algorithm>

#include "gaelcheck/text.hpp"

namespace gaelcheck {

namespace {

bool ends_with(std::string_view s, std::string_view suf) {
    return s.size() >= suf.size() && s.substr(s.size() - suf.size()) == suf;
}

bool ends_in_consonant(std::string_view s) {
    auto w = text::decode(s);
    return !w.empty() && text::is_letter(w.back()) && !is_vowel(w.back());
}

std::string letters(const std::set<char32_t>& s) {
    std::string out = "{";
    for (auto c : s) {
        if (out.size() > 1) out += ",";
        out += text::encode(c);
    }
    return out + "}";
}

struct Base {
    const LexEntry* entry = nullptr;
    std::string form;
    bool formative = false;
};

Base irish_base(const std::string& r, const Lexicons& lex) {
    if (auto* e = lex.irish.find(r, PartOfSpeech::Noun)) return {e, r, false};
    if (auto* e = lex.irish.find(r)) {
        if (e->pos != PartOfSpeech::Other) return {e, r, false};
    }
    for (auto& f : lex.rules.formatives) {
        if (ends_with(r, f) && r.size() > f.size()) {
            auto rest = r.substr(0, r.size() - f.size());
            if (!has_vowel(rest)) continue;
            if (auto* e = lex.irish.find(rest)) return {e, rest, true};
        }
    }
    return {};
}

}  // namespace

std::vector<VerbAnalysis> verb_candidates(std::string_view word, const MorphRules& rules) {
    std::vector<VerbAnalysis> out;
    auto push = [&](VerbAnalysis a) {
        for (auto& b : out)
            if (b.root == a.root && b.suffix == a.suffix && b.slot == a.slot &&
                b.mutation_seen == a.mutation_seen)
                return;
        out.push_back(std::move(a));
    };
    for (auto& reading : detect_and_strip_mutation(word)) {
        const auto& s = reading.root;
        for (auto& vs : rules.verb_suffixes) {
            if (!ends_with(s, vs.form) || s.size() == vs.form.size()) continue;
            auto root = s.substr(0, s.size() - vs.form.size());
            if (!has_vowel(root) || text::length(root) < 2) continue;
            push({root, vs.conjugation, vs.form, vs.cls, vs.slot, reading.kind});
        }
        if (reading.kind == MutationKind::Lenition && has_vowel(s) && ends_in_consonant(s)) {
            int syl = syllable_count(s);
            if (syl <= 2)
                push({s, syl == 1 ? Conjugation::First : Conjugation::Second, "", final_quality(s),
                      VerbSlot::PastAnalytic, MutationKind::Lenition});
        }
    }
    return out;
}

std::vector<VerbAnalysis> parse_verb(std::string_view word, const MorphRules& rules) {
    auto all = verb_candidates(word, rules);
    std::erase_if(all, [](const VerbAnalysis& a) { return a.suffix_class != final_quality(a.root); });
    return all;
}

VerbRoot resolve_verb_root(std::string_view root_in, const Lexicons& lex) {
    VerbRoot out;
    auto r = text::normalize(root_in);
    auto finish = [&](std::string_view conj_root) {
        out.base_syllables = has_vowel(conj_root) ? syllable_count(conj_root) : 0;
        return out;
    };

    if (auto b = irish_base(r, lex); b.entry) {
        out.source = VerbRootSource::IrishLexicon;
        out.base = b.form;
        out.pos = b.entry->pos;
        out.has_formative = b.formative;
        return finish(r);
    }
    if (text::length(r) >= 3) {
        for (auto& ext : lex.irish.extensions(r)) {
            if (lex.irish.find(ext, PartOfSpeech::Verb)) {
                out.source = VerbRootSource::TruncatedIrish;
                out.base = ext;
                out.pos = PartOfSpeech::Verb;
                return finish(r);
            }
        }
    }
    for (auto& p : lex.rules.prefixes) {
        if (!p.native || !r.starts_with(p.form)) continue;
        std::string rem = r.substr(p.form.size());
        if (!rem.empty() && rem[0] == '-') rem.erase(0, 1);
        if (text::length(rem) < 2 || !has_vowel(rem)) continue;
        bool present = is_lenited(rem);
        std::string rem_root = present ? strip_lenition(rem) : rem;
        auto b = irish_base(rem_root, lex);
        if (!b.entry) continue;
        bool expected = p.lenites && lenitable(rem_root) && !dental_block(p.form, rem_root);
        out.source = VerbRootSource::IrishPrefixed;
        out.base = b.form;
        out.pos = b.entry->pos;
        out.prefix = p.form;
        out.has_formative = b.formative;
        out.prefix_lenition_ok = expected == present;
        return finish(rem_root);
    }
    if (lex.english.contains(r)) {
        out.source = VerbRootSource::English;
        out.base = r;
        out.exact_english = true;
        return finish(r);
    }
    if (auto ext = english_truncation_matches(lex.english, r); !ext.empty()) {
        out.source = VerbRootSource::English;
        out.base = ext.front();
        return finish(r);
    }
    return finish(r);
}

RuleVerdict validate_verb(std::string_view word, const std::vector<VerbAnalysis>& given,
                          const Lexicons& lex) {
    RuleVerdict verdict;
    auto analyses = given.empty() ? verb_candidates(word, lex.rules) : given;
    if (analyses.empty()) {
        verdict.add({"not-a-verb", "no verbal suffix matches " + text::normalize(word)});
        return verdict;
    }
    auto word_letters = check_alphabet(word);

    std::vector<Violation> all;
    for (auto& a : analyses) {
        std::vector<Violation> v;
        std::string tag = a.root + (a.suffix.empty() ? "" : "+-" + a.suffix);
        auto root = resolve_verb_root(a.root, lex);

        if (a.suffix_class != final_quality(a.root))
            v.push_back({"class-mismatch", std::string(to_string(a.suffix_class)) + " suffix -" + a.suffix +
                                               " on " + to_string(final_quality(a.root)) + " root " + a.root});

        auto foreign = word_letters;
        if (root.exact_english) foreign = check_alphabet(a.suffix);
        if (!foreign.empty()) v.push_back({"alphabet", "non-native letters " + letters(foreign)});

        if (is_past(a.slot) && lenitable(a.root) && a.mutation_seen != MutationKind::Lenition)
            v.push_back({"past-lenition", "past tense needs lenition of " + a.root});

        if (root.source != VerbRootSource::English) {
            std::string seg = a.root;
            if (root.source == VerbRootSource::IrishPrefixed) seg = seg.substr(root.prefix.size());
            seg += a.suffix;
            if (has_vowel(seg) && !check_vowel_harmony(seg).passed)
                v.push_back({"harmony", "broad/slender mismatch in " + seg});
        }

        switch (root.source) {
            case VerbRootSource::TruncatedIrish:
                v.push_back({"truncated-root", a.root + " is a truncation of " + root.base});
                break;
            case VerbRootSource::Unknown:
                v.push_back({"unknown-root", "root " + a.root + " matches no known word"});
                break;
            case VerbRootSource::IrishPrefixed:
                if (!root.prefix_lenition_ok)
                    v.push_back({"prefix-lenition", "prefix lenition missing (" + root.prefix + "- + " +
                                                        a.root.substr(root.prefix.size()) + ")"});
                break;
            default:
                break;
        }

        if (a.slot != VerbSlot::PastAnalytic && root.base_syllables > 0) {
            auto expected = (root.has_formative || root.base_syllables == 1) ? Conjugation::First
                                                                               : Conjugation::Second;
            if (a.conjugation != expected)
                v.push_back({"conjugation-class", std::string(to_string(a.conjugation)) +
                                                      " conjugation suffix on a root needing the " +
                                                      to_string(expected)});
        }

        if (v.empty()) {
            verdict.conformant = true;
            verdict.violations.clear();
            verdict.evidence.push_back("verb " + tag + " (" + to_string(a.slot) + ", " +
                                       to_string(a.conjugation) + " conjugation, " +
                                       to_string(a.suffix_class) + ")");
            if (a.mutation_seen != MutationKind::None)
                verdict.evidence.push_back(std::string("initial ") + to_string(a.mutation_seen));
            return verdict;
        }
        for (auto& x : v) all.push_back(std::move(x));
    }
    for (auto& x : all) verdict.add(std::move(x));
    return verdict;
}

}  // namespace gaelcheck
