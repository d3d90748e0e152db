#include "gaelcheck/generator.hpp"

#include <algorithm>
#include <functional>
#include <optional>
#include <random>

#include "gaelcheck/errors.hpp"
#include "gaelcheck/text.hpp"

namespace gaelcheck {

namespace {

constexpr int kMaxAttempts = 1000;

}  // namespace

std::string respell(std::string_view english, bool keep_foreign);

namespace {

struct Candidate {
    std::string word;
    std::string rule;
    std::vector<std::string> source;
    std::string recipe;
};

bool plain_letters(std::string_view w) {
    for (char32_t c : text::decode(w))
        if (!text::is_letter(c)) return false;
    return true;
}

bool ascii_word(std::string_view w) {
    return !w.empty() && std::all_of(w.begin(), w.end(), [](char c) { return c >= 'a' && c <= 'z'; });
}

class Gen {
public:
    Gen(const GenSpec& spec, const Lexicons& lex, const ClassifierConfig& config)
        : spec_(spec), lex_(lex), config_(config), rng_(spec.seed) {
        for (auto& e : lex.irish.entries()) {
            if (e.pos != PartOfSpeech::Noun || !e.native) continue;
            if (text::length(e.form) < 3 || !plain_letters(e.form) || !has_vowel(e.form)) continue;
            if (!check_alphabet(e.form).empty() || !well_formed(e.form)) continue;
            if (!check_vowel_harmony(e.form).passed) continue;
            nouns_.push_back(e.form);
        }
        for (auto& e : lex.english.entries()) {
            if (e.pos == PartOfSpeech::Other || !ascii_word(e.form) || e.form.size() < 3) continue;
            if (!has_vowel(e.form)) continue;
            english_.push_back(e.form);
        }
        for (auto& p : lex.rules.prefixes) (p.native ? native_prefixes_ : loan_prefixes_).push_back(&p);
        for (auto& s : lex.rules.noun_suffixes)
            if (s.kind != SuffixKind::Genitive) suffixes_.push_back(&s);
    }

    std::vector<GeneratedWord> run() {
        std::function<std::optional<Candidate>()> recipe;
        switch (spec_.pattern) {
            case Category::VerbNounConjugation: need(nouns_, "Irish nouns"); recipe = [this] { return noun_verb(); }; break;
            case Category::VerbEnglishConjugated: need(english_, "English content words"); recipe = [this] { return english_verb(); }; break;
            case Category::Compound: need(nouns_, "Irish nouns"); recipe = [this] { return compound(); }; break;
            case Category::LazyGaelicisation: need(english_, "English content words"); recipe = [this] { return lazy(); }; break;
            case Category::GoodConfabulation:
                need(nouns_, "Irish nouns");
                need(native_prefixes_, "native prefixes");
                recipe = [this] { return prefixed(false); };
                break;
            case Category::CodeSwitching: need(english_, "English content words"); need(suffixes_, "noun suffixes"); recipe = [this] { return code_switch(); }; break;
            case Category::Prefix:
                need(nouns_, "Irish nouns");
                need(spec_.well_formed ? native_prefixes_ : loan_prefixes_, spec_.well_formed ? "native prefixes" : "loan prefixes");
                recipe = [this] { return prefixed(true); };
                break;
            case Category::Suffix: need(nouns_, "Irish nouns"); need(suffixes_, "noun suffixes"); recipe = [this] { return suffix(); }; break;
            default: throw UsageError(std::string("no generator for pattern ") + to_string(spec_.pattern));
        }

        std::vector<GeneratedWord> out;
        while (out.size() < spec_.count) {
            int attempt = 0;
            for (; attempt < kMaxAttempts; ++attempt) {
                auto c = recipe();
                if (!c || !accept(*c)) continue;
                out.push_back({c->word, spec_.pattern, spec_.well_formed, c->rule, c->source, c->recipe});
                break;
            }
            if (attempt == kMaxAttempts)
                throw GenerationError(std::string("pattern ") + to_string(spec_.pattern) + (spec_.well_formed ? "" : " (broken)") +
                                      ": no acceptable word after " + std::to_string(kMaxAttempts) +
                                      " draws; the lexicon lacks suitable material");
        }
        return out;
    }

private:
    template <class T>
    void need(const std::vector<T>& pool, const char* what) {
        if (pool.empty()) throw GenerationError(std::string("generation needs ") + what + ", lexicon has none");
    }

    template <class T>
    const T& pick(const std::vector<T>& pool) {
        std::uniform_int_distribution<std::size_t> d(0, pool.size() - 1);
        return pool[d(rng_)];
    }

    bool coin() { return std::uniform_int_distribution<int>(0, 1)(rng_) == 1; }

    bool accept(const Candidate& c) {
        if (lex_.irish.lookup(c.word).found()) return false;
        auto verbs = parse_verb(c.word, lex_.rules);
        bool verb = is_verb(spec_.pattern);
        if (verb == verbs.empty()) return false;
        auto v = verb ? validate_verb(c.word, verbs, lex_) : validate_noun(c.word, lex_);
        if (spec_.well_formed) return v.conformant;
        return v.rules() == std::vector<std::string>{c.rule};
    }

    Conjugation expected_conjugation(std::string_view root) const {
        for (auto& f : lex_.rules.formatives)
            if (root.size() > f.size() && root.ends_with(f)) return Conjugation::First;
        return syllable_count(root) <= 1 ? Conjugation::First : Conjugation::Second;
    }

    std::vector<const VerbSuffix*> verb_suffixes(Conjugation conj, VowelClass cls, bool present_only) const {
        std::vector<const VerbSuffix*> out;
        for (auto& s : lex_.rules.verb_suffixes)
            if (s.conjugation == conj && s.cls == cls && (!present_only || !is_past(s.slot))) out.push_back(&s);
        return out;
    }

    std::optional<Candidate> noun_verb() {
        auto& n = pick(nouns_);
        auto r = resolve_verb_root(n, lex_);
        if (r.source != VerbRootSource::IrishLexicon || r.pos != PartOfSpeech::Noun) return std::nullopt;
        auto cands = verb_suffixes(expected_conjugation(n), final_quality(n), false);
        if (!spec_.well_formed)
            std::erase_if(cands, [](const VerbSuffix* s) { return !is_past(s->slot); });
        if (cands.empty()) return std::nullopt;
        auto* s = pick(cands);
        if (is_past(s->slot)) {
            if (!lenitable(n)) return std::nullopt;
            if (!spec_.well_formed) return Candidate{n + s->form, "past-lenition", {}, n + "+-" + s->form + " unlenited"};
            return Candidate{apply_lenition(n) + s->form, "", {}, "lenited " + n + "+-" + s->form};
        }
        return Candidate{n + s->form, "", {}, n + "+-" + s->form};
    }

    std::optional<Candidate> english_verb() {
        auto& e = pick(english_);
        if (text::length(e) > 9 || !check_alphabet(e).empty()) return std::nullopt;
        auto r = resolve_verb_root(e, lex_);
        if (r.source != VerbRootSource::English || !r.exact_english) return std::nullopt;
        auto conj = expected_conjugation(e);
        if (!spec_.well_formed) {
            if (conj != Conjugation::Second) return std::nullopt;
            conj = Conjugation::First;
        }
        auto cands = verb_suffixes(conj, final_quality(e), true);
        if (cands.empty()) return std::nullopt;
        auto* s = pick(cands);
        return Candidate{e + s->form, spec_.well_formed ? "" : "conjugation-class", {e}, e + "+-" + s->form};
    }

    std::optional<Candidate> compound() {
        auto& a = pick(nouns_);
        auto& b = pick(nouns_);
        if (a == b) return std::nullopt;
        auto right = first_quality(b);
        if (!right) return std::nullopt;
        bool match = final_quality(a) == *right;
        if (match != spec_.well_formed) return std::nullopt;
        auto w = make_compound(a, b);
        return Candidate{w, spec_.well_formed ? "" : "harmony", {}, a + "+" + w.substr(a.size())};
    }

    std::optional<Candidate> lazy() {
        auto& e = pick(english_);
        if (e.size() < 4) return std::nullopt;
        auto r = respell(e, !spec_.well_formed);
        if (!spec_.well_formed && check_alphabet(r).empty()) return std::nullopt;
        if (r == e || r.size() < 3 || !has_vowel(r)) return std::nullopt;
        if (!analyze_code_switch(r, lex_, config_.min_english_root).empty()) return std::nullopt;
        if (phonetic_similarity(e, r) < config_.similarity_threshold) return std::nullopt;
        return Candidate{r, spec_.well_formed ? "" : "alphabet", {e}, e + " respelled"};
    }

    std::optional<Candidate> prefixed(bool prefix_pattern) {
        bool loan = prefix_pattern && !spec_.well_formed;
        auto* p = pick(loan ? loan_prefixes_ : native_prefixes_);
        if (!loan && p->form != p->canonical) return std::nullopt;
        auto& n = pick(nouns_);
        std::string word, rule;
        if (loan) {
            word = (coin() ? p->form + "-" : p->form) + n;
            rule = "non-native-prefix";
        } else if (spec_.well_formed) {
            word = make_prefixed(p->form, n);
        } else {
            if (!lenitable(n) || dental_block(p->form, n)) return std::nullopt;
            word = p->form + n;
            rule = "prefix-lenition";
        }
        std::vector<std::string> source;
        auto& gloss = p->glosses.front();
        if (prefix_pattern) {
            std::vector<std::string> aligned;
            for (auto& e : english_)
                for (auto& g : p->glosses)
                    if (e.size() > g.size() && e.starts_with(g)) aligned.push_back(e);
            if (!aligned.empty()) source.push_back(pick(aligned));
        } else {
            auto coined = gloss + pick(english_);
            if (english_contains(lex_.english, coined)) return std::nullopt;
            source.push_back(coined);
        }
        return Candidate{word, rule, source, p->form + "-+" + n};
    }

    std::optional<Candidate> code_switch() {
        auto& e = pick(english_);
        if (lex_.irish.lookup(e).found() || !check_alphabet(e).empty()) return std::nullopt;
        auto* s = pick(suffixes_);
        if (spec_.well_formed) {
            if (s->cls != final_quality(e)) return std::nullopt;
            auto w = e + s->form;
            return Candidate{w, "", {e}, e + "+-" + s->form};
        }
        auto n = text::length(e);
        if (n < 6) return std::nullopt;
        auto cut = std::uniform_int_distribution<std::size_t>(4, n - 2)(rng_);
        auto frag = e.substr(0, cut);
        auto tail = e.substr(cut);
        if (english_contains(lex_.english, frag)) return std::nullopt;
        if (s->cls != final_quality(frag)) return std::nullopt;
        for (auto& end : s->english_endings)
            if (end == tail) return std::nullopt;
        return Candidate{frag + s->form, "truncated-english-root", {e}, frag + "(" + e + ")+-" + s->form};
    }

    std::optional<Candidate> suffix() {
        auto& n = pick(nouns_);
        auto* s = pick(suffixes_);
        if (s->cls != final_quality(n)) return std::nullopt;
        if (!spec_.well_formed) {
            if (s->kind != SuffixKind::Plural) return std::nullopt;
            bool attested = false;
            for (auto* o : suffixes_)
                if (o->kind == SuffixKind::Plural && o != s && lex_.irish.contains(n + o->form)) attested = true;
            if (!attested) return std::nullopt;
        }
        if (s->kind == SuffixKind::Derivational && n.ends_with("adh")) return std::nullopt;
        return Candidate{n + s->form, spec_.well_formed ? "" : "attested-plural", {}, n + "+-" + s->form};
    }

    const GenSpec& spec_;
    const Lexicons& lex_;
    const ClassifierConfig& config_;
    std::mt19937_64 rng_;
    std::vector<std::string> nouns_;
    std::vector<std::string> english_;
    std::vector<const PrefixRule*> native_prefixes_;
    std::vector<const PrefixRule*> loan_prefixes_;
    std::vector<const NounSuffix*> suffixes_;
};

bool vowel_at(const std::u32string& w, std::size_t i) { return i < w.size() && is_vowel(w[i]); }

}  // namespace

std::string make_compound(std::string_view first, std::string_view second) {
    std::string a = text::normalize(first), b = text::normalize(second);
    if (lenitable(b) && !dental_block(a, b)) return a + apply_lenition(b);
    return a + b;
}

std::string make_prefixed(std::string_view prefix, std::string_view noun) {
    return make_compound(prefix, noun);
}

std::string repair_harmony(std::string_view word) {
    auto w = text::fold(text::nfc(text::decode(word)));
    struct Group {
        std::size_t begin, end;
    };
    std::vector<Group> groups;
    for (std::size_t i = 0; i < w.size();) {
        if (!is_vowel(w[i])) {
            ++i;
            continue;
        }
        std::size_t j = i;
        while (vowel_at(w, j)) ++j;
        groups.push_back({i, j});
        i = j;
    }
    std::u32string out;
    std::size_t copied = 0;
    for (std::size_t g = 0; g + 1 < groups.size(); ++g) {
        auto left = *classify_vowel(w[groups[g].end - 1]);
        auto right = *classify_vowel(w[groups[g + 1].begin]);
        if (left == right) continue;
        if (left == VowelClass::Broad) {
            out.append(w, copied, groups[g].end - copied);
            out.push_back(U'i');
            copied = groups[g].end;
        } else {
            out.append(w, copied, groups[g + 1].begin - copied);
            out.push_back(w[groups[g + 1].begin] == U'u' || w[groups[g + 1].begin] == U'ú' ? U'i' : U'e');
            copied = groups[g + 1].begin;
        }
    }
    out.append(w, copied, std::u32string::npos);
    return text::encode(out);
}

std::string respell(std::string_view english, bool keep_foreign) {
    std::string e = text::normalize(english);
    auto vowel = [](char c) { return c == 'a' || c == 'e' || c == 'i' || c == 'o' || c == 'u' || c == 'y'; };
    if (e.size() > 3 && e.back() == 's' && e[e.size() - 2] != 's' && e[e.size() - 2] != 'u') e.pop_back();
    if (e.size() > 3 && e.back() == 'e' && !vowel(e[e.size() - 2])) e.pop_back();
    std::string out;
    for (std::size_t i = 0; i < e.size(); ++i) {
        char c = e[i];
        char n = i + 1 < e.size() ? e[i + 1] : '\0';
        auto two = e.substr(i, 2);
        if (two == "ph") { out += "f"; ++i; continue; }
        if (two == "th" || two == "ch" || two == "ck" || two == "sh" || two == "wh") {
            out += two == "wh" ? "bh" : two == "th" ? "t" : two == "sh" ? "s" : "c";
            ++i;
            continue;
        }
        if (two == "qu") { out += "cu"; ++i; continue; }
        if (!out.empty() && out.back() == c && !vowel(c)) continue;
        if (keep_foreign && std::string_view("jkqvwxyz").find(c) != std::string_view::npos) {
            out += c;
            keep_foreign = false;
            continue;
        }
        switch (c) {
            case 'c': out += (n == 'e' || n == 'i' || n == 'y') ? "s" : "c"; break;
            case 'k': out += "c"; break;
            case 'v': case 'w': out += "bh"; break;
            case 'x': out += "cs"; break;
            case 'z': case 'j': out += "s"; break;
            case 'q': out += "c"; break;
            case 'y': out += i + 1 == e.size() ? "í" : "i"; break;
            default: out += c;
        }
    }
    return repair_harmony(out);
}

std::string respell_english(std::string_view english) { return respell(english, false); }

std::vector<GeneratedWord> generate(const GenSpec& spec, const Lexicons& lex, const ClassifierConfig& config) {
    if (spec.count == 0) throw UsageError("count must be at least 1");
    auto& pats = pattern_categories();
    if (std::find(pats.begin(), pats.end(), spec.pattern) == pats.end())
        throw UsageError(std::string("cannot generate pattern ") + to_string(spec.pattern));
    return Gen(spec, lex, config).run();
}

}  // namespace gaelcheck
