#include "gaelcheck/nounmorph.hpp"

#include <algorithm>
#include <functional>

#include "gaelcheck/text.hpp"

namespace gaelcheck {

namespace {

using U = std::u32string;

U dec(std::string_view s) { return text::decode(text::normalize(s)); }
std::string enc(std::u32string_view s) { return text::encode(s); }

bool starts_with_vowel(std::string_view s) {
    auto w = text::decode(s);
    return !w.empty() && is_vowel(w.front());
}

bool ends_with_vowel(std::string_view s) {
    auto w = text::decode(s);
    return !w.empty() && is_vowel(w.back());
}

// Harmony across the join of left and right.
bool seam_ok(std::string_view left, std::string_view right) {
    if (!has_vowel(left) || !has_vowel(right)) return true;
    if (ends_with_vowel(left) && starts_with_vowel(right)) return true;
    return final_quality(left) == *first_quality(right);
}

bool nominal_pos(PartOfSpeech p) { return p == PartOfSpeech::Noun || p == PartOfSpeech::Unknown; }

const LexEntry* find_nominal(const Lexicon& lex, const std::string& form) {
    if (auto* e = lex.find(form, PartOfSpeech::Noun)) return e;
    return lex.find(form, PartOfSpeech::Unknown);
}

const LexEntry* find_content(const Lexicon& lex, const std::string& form) {
    if (auto* e = find_nominal(lex, form)) return e;
    for (auto* e : lex.find_all(form))
        if (e->pos != PartOfSpeech::Other) return e;
    return nullptr;
}

std::optional<LexEntry> resolve_plain(const std::string& form, const Lexicons& lex, std::string* suffix) {
    if (auto* e = find_content(lex.irish, form)) {
        if (suffix) suffix->clear();
        return *e;
    }
    for (auto& s : lex.rules.noun_suffixes) {
        if (s.kind == SuffixKind::Derivational) continue;
        if (form.size() <= s.form.size() || !form.ends_with(s.form)) continue;
        auto root = form.substr(0, form.size() - s.form.size());
        if (auto* e = find_nominal(lex.irish, root); e && text::length(root) >= 3) {
            if (suffix) *suffix = s.form;
            return *e;
        }
    }
    for (auto& root : deslenderize(form)) {
        if (auto* e = find_nominal(lex.irish, root)) {
            if (suffix) *suffix = "(slender)";
            return *e;
        }
    }
    return std::nullopt;
}

// All ways to read `rest` as a sequence of 1..max_morphs nominal suffixes.
void decompose(const std::string& rest, const MorphRules& rules, std::size_t max_morphs,
               std::vector<const NounSuffix*>& cur, std::vector<std::vector<const NounSuffix*>>& out) {
    if (rest.empty()) {
        if (!cur.empty()) out.push_back(cur);
        return;
    }
    if (cur.size() == max_morphs) return;
    for (auto& s : rules.noun_suffixes) {
        if (!rest.starts_with(s.form)) continue;
        if (s.kind == SuffixKind::Genitive && rest.size() != s.form.size()) continue;
        cur.push_back(&s);
        decompose(rest.substr(s.form.size()), rules, max_morphs, cur, out);
        cur.pop_back();
    }
}

std::vector<std::vector<const NounSuffix*>> decompositions(const std::string& rest, const MorphRules& rules,
                                                          std::size_t max_morphs) {
    std::vector<std::vector<const NounSuffix*>> out;
    std::vector<const NounSuffix*> cur;
    decompose(rest, rules, max_morphs, cur, out);
    return out;
}

std::string join(const std::vector<const NounSuffix*>& morphs) {
    std::string s;
    for (auto* m : morphs) s += m->form;
    return s;
}

std::string letters(const std::set<char32_t>& s) {
    std::string out = "{";
    for (auto c : s) {
        if (out.size() > 1) out += ",";
        out += text::encode(c);
    }
    return out + "}";
}

std::vector<std::string> attested_plurals(const LexEntry& root, const Lexicons& lex) {
    std::vector<std::string> out;
    for (auto& s : lex.rules.noun_suffixes) {
        if (s.kind != SuffixKind::Plural) continue;
        auto f = root.form + s.form;
        if (lex.irish.contains(f) && std::find(out.begin(), out.end(), f) == out.end()) out.push_back(f);
    }
    auto sl = slenderize(root.form);
    if (!sl.empty() && lex.irish.contains(sl)) out.push_back(sl);
    return out;
}

}  // namespace

const char* to_string(PluralStrategy s) {
    switch (s) {
        case PluralStrategy::WeakSlenderized: return "weak-slenderized";
        case PluralStrategy::WeakA: return "weak-a";
        case PluralStrategy::Strong: return "strong";
    }
    return "?";
}

std::string SuffixAnalysis::chain() const { return join(morphs); }

std::size_t SuffixAnalysis::chain_length() const { return text::length(chain()); }

std::vector<std::string> illegal_geminates(std::string_view word) {
    auto w = dec(word);
    std::vector<std::string> out;
    for (std::size_t i = 1; i < w.size(); ++i) {
        char32_t c = w[i];
        if (c != w[i - 1] || !text::is_letter(c) || is_vowel(c)) continue;
        if (c == U'l' || c == U'n' || c == U'r') continue;
        out.push_back(enc(U(2, c)));
    }
    return out;
}

bool well_formed(std::string_view root) {
    auto w = dec(root);
    if (w.size() < 2 || !has_vowel(root)) return false;
    for (char32_t c : w)
        if (!text::is_letter(c) && c != U'-' && c != U'\'') return false;
    return check_alphabet(root).empty() && illegal_geminates(root).empty() && check_vowel_harmony(w).passed;
}

std::string slenderize(std::string_view root) {
    auto w = dec(root);
    if (w.empty() || is_vowel(w.back()) || !text::is_letter(w.back())) return {};
    std::size_t end = w.size();
    while (end > 0 && !is_vowel(w[end - 1])) --end;
    if (end == 0) return {};
    std::size_t begin = end;
    while (begin > 0 && is_vowel(w[begin - 1])) --begin;
    U g = w.substr(begin, end - begin);
    if (classify_vowel(g.back()) != VowelClass::Broad) return {};
    U r;
    if (g == U"ea") r = U"i";
    else if (g == U"éa" || g == U"ia") r = U"éi";
    else if (g == U"io") r = U"i";
    else if (g == U"ío") r = U"í";
    else r = g + U"i";
    return enc(w.substr(0, begin) + r + w.substr(end));
}

std::vector<std::string> deslenderize(std::string_view form) {
    auto w = dec(form);
    std::vector<std::string> out;
    if (w.empty() || is_vowel(w.back()) || !text::is_letter(w.back())) return out;
    std::size_t end = w.size();
    while (end > 0 && !is_vowel(w[end - 1])) --end;
    if (end == 0) return out;
    std::size_t begin = end;
    while (begin > 0 && is_vowel(w[begin - 1])) --begin;
    U g = w.substr(begin, end - begin);
    std::vector<U> cands;
    if (g.size() >= 2 && g.back() == U'i') cands.push_back(g.substr(0, g.size() - 1));
    if (g == U"i") cands.insert(cands.end(), {U"ea", U"io"});
    if (g == U"éi") cands.insert(cands.end(), {U"éa", U"ia"});
    if (g == U"í") cands.push_back(U"ío");
    auto target = enc(w);
    for (auto& c : cands) {
        auto root = enc(w.substr(0, begin) + c + w.substr(end));
        if (slenderize(root) == target && std::find(out.begin(), out.end(), root) == out.end())
            out.push_back(root);
    }
    return out;
}

std::optional<LexEntry> resolve_nominal(std::string_view form, const Lexicons& lex, std::string* suffix) {
    for (auto& r : detect_and_strip_mutation(form))
        if (auto e = resolve_plain(r.root, lex, suffix)) return e;
    return std::nullopt;
}

std::vector<PluralAnalysis> analyze_plural(std::string_view word, const Lexicons& lex) {
    auto w = text::normalize(word);
    std::vector<PluralAnalysis> out;
    for (auto& s : lex.rules.noun_suffixes) {
        if (s.kind == SuffixKind::Derivational) continue;
        if (w.size() <= s.form.size() || !w.ends_with(s.form)) continue;
        auto root = w.substr(0, w.size() - s.form.size());
        if (!has_vowel(root)) continue;
        PluralAnalysis a;
        a.root = root;
        a.strategy = s.form == "a" ? PluralStrategy::WeakA : PluralStrategy::Strong;
        a.suffix = s.form;
        a.root_in_lexicon = lex.irish.contains(root);
        a.root_well_formed = well_formed(root);
        a.seam_harmony = seam_ok(root, s.form);
        out.push_back(std::move(a));
    }
    for (auto& root : deslenderize(w)) {
        PluralAnalysis a;
        a.root = root;
        a.strategy = PluralStrategy::WeakSlenderized;
        a.root_in_lexicon = lex.irish.contains(root);
        a.root_well_formed = well_formed(root);
        out.push_back(std::move(a));
    }
    return out;
}

std::vector<CompoundSplit> split_compound(std::string_view word, const Lexicons& lex) {
    auto w = dec(word);
    std::vector<CompoundSplit> out;
    if (w.size() < 6) return out;
    for (std::size_t i = 3; i + 3 <= w.size(); ++i) {
        auto first = enc(w.substr(0, i));
        const LexEntry* fe = find_nominal(lex.irish, first);
        if (!fe || !has_vowel(first)) continue;
        auto second = enc(w.substr(i));
        std::vector<std::pair<std::string, bool>> cands;
        if (is_lenited(second)) cands.push_back({strip_lenition(second), true});
        cands.push_back({second, false});
        for (auto& [root, lenited] : cands) {
            std::string suffix;
            auto se = resolve_plain(root, lex, &suffix);
            if (!se || !nominal_pos(se->pos)) continue;
            if (lex.rules.is_suffix_form(se->form) || text::length(se->form) < 3) continue;
            CompoundSplit c;
            c.first = *fe;
            c.second = *se;
            c.second_surface = second;
            c.second_suffix = suffix;
            c.second_lenited = lenited;
            c.lenition_expected = lenitable(root) && !dental_block(first, root);
            c.seam_harmony = seam_ok(first, second);
            out.push_back(std::move(c));
            break;
        }
    }
    return out;
}

std::vector<PrefixAnalysis> check_prefix(std::string_view word, const Lexicons& lex) {
    auto w = text::normalize(word);
    std::vector<PrefixAnalysis> out;
    for (auto& p : lex.rules.prefixes) {
        if (!w.starts_with(p.form) || w.size() == p.form.size()) continue;
        PrefixAnalysis a;
        a.prefix = p.form;
        a.canonical = p.canonical;
        a.native = p.native;
        std::string rest = w.substr(p.form.size());
        if (rest[0] == '-') {
            a.hyphenated = true;
            rest.erase(0, 1);
        }
        if (text::length(rest) < 3 || !has_vowel(rest)) continue;
        a.remainder = rest;
        a.lenition_present = is_lenited(rest);
        a.remainder_root = a.lenition_present ? strip_lenition(rest) : rest;
        a.lenition_expected = p.lenites && lenitable(a.remainder_root) && !dental_block(p.form, a.remainder_root);
        a.remainder_in_lexicon = resolve_plain(a.remainder_root, lex, nullptr).has_value() ||
                                 !analyze_suffixes(a.remainder_root, lex).empty();
        a.remainder_well_formed = well_formed(a.remainder_root);
        out.push_back(std::move(a));
    }
    return out;
}

std::vector<SuffixAnalysis> analyze_suffixes(std::string_view word, const Lexicons& lex) {
    auto w = dec(word);
    std::vector<SuffixAnalysis> out;
    auto add = [&](const LexEntry& e, const std::string& stem, bool elided, bool slender,
                   const std::vector<const NounSuffix*>& morphs) {
        if (text::length(e.form) < 3 || e.pos == PartOfSpeech::Other) return;
        for (auto& o : out)
            if (o.root.form == e.form && o.stem == stem && o.morphs == morphs) return;
        out.push_back({e, stem, elided, slender, morphs});
    };
    for (std::size_t i = 2; i < w.size(); ++i) {
        auto stem = enc(w.substr(0, i));
        auto decs = decompositions(enc(w.substr(i)), lex.rules, 3);
        if (decs.empty()) continue;
        const LexEntry* direct = find_content(lex.irish, stem);
        auto slender_roots = deslenderize(stem);
        for (auto& morphs : decs) {
            if (direct) add(*direct, stem, false, false, morphs);
            if (starts_with_vowel(morphs.front()->form)) {
                for (auto v : {"a", "e"}) {
                    if (auto* e = find_content(lex.irish, stem + v)) add(*e, stem, true, false, morphs);
                }
            }
            for (auto& r : slender_roots)
                if (auto* e = find_nominal(lex.irish, r)) add(*e, stem, false, true, morphs);
        }
    }
    return out;
}

std::vector<CodeSwitchAnalysis> analyze_code_switch(std::string_view word, const Lexicons& lex,
                                                    std::size_t min_root) {
    auto w = dec(word);
    std::vector<CodeSwitchAnalysis> out;
    for (std::size_t i = min_root; i < w.size(); ++i) {
        auto frag = enc(w.substr(0, i));
        if (!has_vowel(frag)) continue;
        auto decs = decompositions(enc(w.substr(i)), lex.rules, 2);
        if (decs.empty()) continue;
        if (lex.irish.lookup(frag).found()) continue;
        bool exact = lex.english.contains(frag);
        std::vector<std::string> truncs;
        if (!exact) truncs = english_truncation_matches(lex.english, frag, std::max<std::size_t>(min_root, 4));
        if (!exact && truncs.empty()) continue;
        for (auto& morphs : decs) {
            CodeSwitchAnalysis a;
            a.fragment = frag;
            a.exact = exact;
            a.morphs = morphs;
            if (exact) {
                a.english = frag;
            } else {
                a.ending_corresponds = false;
                a.english = truncs.front();
                for (auto& t : truncs) {
                    auto tail = t.substr(frag.size());
                    auto& ends = morphs.front()->english_endings;
                    if (std::find(ends.begin(), ends.end(), tail) != ends.end()) {
                        a.english = t;
                        a.ending_corresponds = true;
                        break;
                    }
                }
            }
            out.push_back(std::move(a));
        }
    }
    return out;
}

RuleVerdict validate_noun(std::string_view word, const Lexicons& lex) {
    RuleVerdict verdict;
    auto surface = text::normalize(word);
    if (!has_vowel(surface)) {
        verdict.add({"no-vowel", surface + " has no vowel"});
        return verdict;
    }
    auto shape_violations = [&](std::string_view part, std::vector<Violation>& v) {
        auto f = check_alphabet(part);
        if (!f.empty()) v.push_back({"alphabet", "non-native letters " + letters(f)});
        for (auto& g : illegal_geminates(part)) v.push_back({"geminate", "illegal double consonant " + g});
    };

    struct Reading {
        std::string evidence;
        std::vector<Violation> v;
    };
    std::vector<Reading> anchored;

    for (auto& m : detect_and_strip_mutation(surface)) {
        const auto& r = m.root;
        if (!has_vowel(r)) continue;
        auto harmony = check_vowel_harmony(r);
        std::string mut = m.kind == MutationKind::None ? "" : std::string(", initial ") + to_string(m.kind);

        for (auto& c : split_compound(r, lex)) {
            Reading rd{"compound " + c.first.form + "+" + c.second_surface + mut, {}};
            shape_violations(r, rd.v);
            if (c.lenition_expected && !c.second_lenited)
                rd.v.push_back({"compound-lenition", "second element " + c.second_surface + " needs lenition"});
            if (!c.lenition_expected && c.second_lenited)
                rd.v.push_back({"spurious-lenition", "second element " + c.second_surface + " cannot be lenited"});
            if (!harmony.passed) rd.v.push_back({"harmony", "broad/slender mismatch in " + r});
            anchored.push_back(std::move(rd));
        }

        for (auto& p : check_prefix(r, lex)) {
            if (!p.remainder_in_lexicon && !p.remainder_well_formed) continue;
            Reading rd{"prefix " + p.prefix + "-+" + p.remainder + mut, {}};
            shape_violations(r, rd.v);
            if (!p.native) {
                rd.v.push_back({"non-native-prefix", "prefix " + p.prefix + "- kept in its source form"});
            } else {
                if (p.lenition_expected && !p.lenition_present)
                    rd.v.push_back({"prefix-lenition", "prefix lenition missing (" + p.prefix + "- + " +
                                                           p.remainder + ")"});
                if (!p.lenition_expected && p.lenition_present)
                    rd.v.push_back({"spurious-lenition", p.remainder + " cannot be lenited after " + p.prefix + "-"});
            }
            if (!check_vowel_harmony(p.remainder).passed)
                rd.v.push_back({"harmony", "broad/slender mismatch in " + p.remainder});
            anchored.push_back(std::move(rd));
        }

        for (auto& s : analyze_suffixes(r, lex)) {
            Reading rd{"suffix " + s.root.form + "+-" + s.chain() + mut, {}};
            shape_violations(r, rd.v);
            if (!harmony.passed) rd.v.push_back({"harmony", "broad/slender mismatch in " + r});
            bool derivational = false;
            for (auto* mo : s.morphs) {
                derivational = derivational || mo->kind == SuffixKind::Derivational;
                if (mo->noun_root_only && !nominal_pos(s.root.pos))
                    rd.v.push_back({"suffix-root-pos", "-" + mo->form + " attaches to nouns, not " +
                                                           std::string(to_string(s.root.pos)) + " " + s.root.form});
            }
            if (derivational && (s.root.form.ends_with("adh")))
                rd.v.push_back({"verbal-noun-stem", "derivational suffix on verbal noun " + s.root.form});
            if (s.morphs.size() == 1 && s.morphs[0]->kind == SuffixKind::Plural && nominal_pos(s.root.pos)) {
                auto att = attested_plurals(s.root, lex);
                if (!att.empty() && std::find(att.begin(), att.end(), r) == att.end())
                    rd.v.push_back({"attested-plural", "plural of " + s.root.form + " is " + att.front()});
            }
            anchored.push_back(std::move(rd));
        }

        for (auto& c : analyze_code_switch(r, lex)) {
            auto chain = join(c.morphs);
            Reading rd{"code-switch " + c.fragment + "+-" + chain + " (" + c.english + ")" + mut, {}};
            shape_violations(c.exact ? std::string_view(chain) : std::string_view(r), rd.v);
            if (!seam_ok(c.fragment, chain) || !check_vowel_harmony(chain).passed)
                rd.v.push_back({"harmony", "broad/slender mismatch at " + c.fragment + "+" + chain});
            if (!c.ending_corresponds)
                rd.v.push_back({"truncated-english-root", c.fragment + " truncates " + c.english + " and -" +
                                                              c.morphs.front()->form + " does not render its ending"});
            anchored.push_back(std::move(rd));
        }
    }

    if (anchored.empty()) {
        std::vector<Violation> v;
        shape_violations(surface, v);
        auto h = check_vowel_harmony(surface);
        if (!h.passed) v.push_back({"harmony", "broad/slender mismatch in " + surface});
        for (auto& x : v) verdict.add(std::move(x));
        if (verdict.conformant) verdict.evidence.push_back("simplex " + surface + " (well-formed)");
        return verdict;
    }
    for (auto& rd : anchored) {
        if (rd.v.empty()) {
            verdict.evidence.push_back(rd.evidence);
            return verdict;
        }
    }
    for (auto& rd : anchored)
        for (auto& x : rd.v) verdict.add(x);
    return verdict;
}

}  // namespace gaelcheck
