#include "gaelcheck/classifier.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "gaelcheck/errors.hpp"
#include "gaelcheck/text.hpp"

namespace gaelcheck {

namespace {

constexpr std::pair<Category, const char*> kNames[] = {
    {Category::VerbNounConjugation, "noun-conjugation"},
    {Category::VerbEnglishConjugated, "english-conjugated"},
    {Category::VerbUnclassified, "verb-unclassified"},
    {Category::Compound, "compound"},
    {Category::LazyGaelicisation, "lazy-gaelicisation"},
    {Category::GoodConfabulation, "good-confabulation"},
    {Category::CodeSwitching, "code-switching"},
    {Category::Prefix, "prefix"},
    {Category::Suffix, "suffix"},
    {Category::Unclassified, "unclassified"},
};

std::string trim(std::string_view s) {
    auto b = s.find_first_not_of(" \t\r");
    if (b == std::string_view::npos) return {};
    auto e = s.find_last_not_of(" \t\r");
    return std::string(s.substr(b, e - b + 1));
}

std::optional<SourceLink> best_link(const std::vector<std::string>& readings, const std::vector<std::string>& words) {
    std::optional<SourceLink> best;
    for (auto& w : words) {
        for (auto& r : readings) {
            double s = phonetic_similarity(w, r);
            if (!best || s > best->similarity) best = SourceLink{w, s};
        }
    }
    return best;
}

std::string join_morphs(const std::vector<const NounSuffix*>& ms) {
    std::string out;
    for (auto* m : ms) out += m->form;
    return out;
}

bool noun_context(const std::string& left, const Lexicon& irish) {
    if (left.empty()) return false;
    auto r = irish.lookup(left);
    if (!r.found()) return false;
    return irish.find(r.root, PartOfSpeech::Noun) != nullptr;
}

}  // namespace

const char* display_name(Category c) {
    switch (c) {
        case Category::VerbNounConjugation: return "Verb/NounConjugation";
        case Category::VerbEnglishConjugated: return "Verb/EnglishConjugated";
        case Category::VerbUnclassified: return "Verb";
        case Category::Compound: return "Compound";
        case Category::LazyGaelicisation: return "LazyGaelicisation";
        case Category::GoodConfabulation: return "GoodConfabulation";
        case Category::CodeSwitching: return "CodeSwitching";
        case Category::Prefix: return "Prefix";
        case Category::Suffix: return "Suffix";
        case Category::Unclassified: return "Unclassified";
    }
    return "Unclassified";
}

const char* to_string(Category c) {
    for (auto& [cat, name] : kNames)
        if (cat == c) return name;
    return "unclassified";
}

std::optional<Category> parse_category(std::string_view name) {
    for (auto& [cat, n] : kNames)
        if (name == n) return cat;
    return std::nullopt;
}

bool is_verb(Category c) {
    return c == Category::VerbNounConjugation || c == Category::VerbEnglishConjugated ||
           c == Category::VerbUnclassified;
}

const std::vector<Category>& pattern_categories() {
    static const std::vector<Category> cats = {
        Category::VerbNounConjugation, Category::VerbEnglishConjugated, Category::Compound,
        Category::LazyGaelicisation,   Category::GoodConfabulation,     Category::CodeSwitching,
        Category::Prefix,              Category::Suffix};
    return cats;
}

ClassifierConfig ClassifierConfig::parse(std::string_view text) {
    ClassifierConfig c;
    std::istringstream in{std::string(text)};
    std::string line;
    std::size_t n = 0;
    while (std::getline(in, line)) {
        ++n;
        auto t = trim(line);
        if (t.empty() || t[0] == '#') continue;
        auto eq = t.find('=');
        if (eq == std::string::npos) throw ConfigError("config line " + std::to_string(n) + ": expected key = value");
        auto key = trim(std::string_view(t).substr(0, eq));
        auto value = trim(std::string_view(t).substr(eq + 1));
        try {
            if (key == "similarity_threshold") {
                c.similarity_threshold = std::stod(value);
                if (c.similarity_threshold < 0 || c.similarity_threshold > 1)
                    throw ConfigError("similarity_threshold must lie in [0,1]");
            } else if (key == "min_english_root") {
                c.min_english_root = std::stoul(value);
                if (c.min_english_root < 2) throw ConfigError("min_english_root must be at least 2");
            } else if (key == "category_order") {
                std::vector<Category> order;
                std::stringstream ss(value);
                std::string item;
                while (std::getline(ss, item, ',')) {
                    auto cat = parse_category(trim(item));
                    if (!cat || is_verb(*cat) || *cat == Category::Unclassified)
                        throw ConfigError("unknown noun category '" + trim(item) + "'");
                    if (std::find(order.begin(), order.end(), *cat) != order.end())
                        throw ConfigError("category '" + trim(item) + "' listed twice");
                    order.push_back(*cat);
                }
                if (order.size() != 6) throw ConfigError("category_order must list all six noun categories");
                c.order = order;
            } else {
                throw ConfigError("unknown config key '" + key + "'");
            }
        } catch (const std::logic_error&) {
            throw ConfigError("bad value for " + key + ": '" + value + "'");
        }
    }
    return c;
}

ClassifierConfig ClassifierConfig::load_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open config " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse(buf.str());
}

HallucinationRecord classify_token(const AnalyzedToken& token, const std::vector<std::string>& source_words,
                                   const Lexicons& lex, const ClassifierConfig& config) {
    if (token.surface.empty()) throw ContractViolation("empty token");
    auto hit = lex.irish.lookup(token.surface);
    if (hit.found()) throw ContractViolation("'" + token.surface + "' is in the lexicon (" + hit.root + ")");

    HallucinationRecord rec;
    rec.surface = token.surface;
    rec.sentence_id = token.sentence_id;
    rec.position = token.position;

    std::vector<std::string> content;
    for (auto& w : source_words) {
        auto f = text::normalize(w);
        if (f.empty()) continue;
        auto* e = lex.english.find(f);
        if (e && e->pos == PartOfSpeech::Other) continue;
        if (std::find(content.begin(), content.end(), f) == content.end()) content.push_back(f);
    }

    std::vector<std::string> readings;
    for (auto& m : detect_and_strip_mutation(token.surface))
        if (has_vowel(m.root)) readings.push_back(m.root);
    if (readings.empty()) {
        rec.verdict.add({"no-vowel", text::normalize(token.surface) + " has no vowel"});
        return rec;
    }
    auto link = best_link(readings, content);

    auto verbs = parse_verb(token.surface, lex.rules);
    if (verbs.empty()) {
        // person endings are never nominal, even on a mismatched root
        for (auto& a : verb_candidates(token.surface, lex.rules))
            if (a.slot == VerbSlot::Pres1Pl || a.slot == VerbSlot::Past1Pl) verbs.push_back(a);
    }
    if (!verbs.empty() && !noun_context(token.left_context, lex.irish)) {
        bool noun_root = false, english_root = false;
        for (auto& a : verbs) {
            auto r = resolve_verb_root(a.root, lex);
            if ((r.source == VerbRootSource::IrishLexicon || r.source == VerbRootSource::IrishPrefixed) &&
                r.pos == PartOfSpeech::Noun) {
                if (!noun_root) rec.detail = r.base + "+-" + a.suffix;
                noun_root = true;
                rec.evidence.push_back("verb root " + a.root + " from noun " + r.base);
            } else if (r.source == VerbRootSource::English) {
                if (!english_root && !noun_root) rec.detail = r.base + "+-" + a.suffix;
                english_root = true;
                rec.evidence.push_back("verb root " + a.root + " from English " + r.base);
            }
        }
        rec.category = noun_root      ? Category::VerbNounConjugation
                       : english_root ? Category::VerbEnglishConjugated
                                      : Category::VerbUnclassified;
        rec.verdict = validate_verb(token.surface, verbs, lex);
        rec.source_link = link;
        return rec;
    }

    rec.verdict = validate_noun(token.surface, lex);
    bool native_letters = check_alphabet(token.surface).empty();

    std::vector<CodeSwitchAnalysis> cs;
    for (auto& r : readings) {
        auto a = analyze_code_switch(r, lex, config.min_english_root);
        cs.insert(cs.end(), a.begin(), a.end());
    }

    auto step = [&](Category c) -> bool {
        switch (c) {
            case Category::Compound:
                for (auto& r : readings) {
                    auto splits = split_compound(r, lex);
                    if (!splits.empty()) {
                        rec.detail = splits[0].first.form + "+" + splits[0].second_surface;
                        rec.evidence.push_back("compound " + rec.detail);
                        return true;
                    }
                }
                return false;
            case Category::CodeSwitching:
                if (cs.empty()) return false;
                rec.detail = cs[0].fragment + "+-" + join_morphs(cs[0].morphs);
                rec.evidence.push_back("English root " + cs[0].fragment + " (" + cs[0].english + ") + Irish suffix");
                if (!link) link = SourceLink{cs[0].english, phonetic_similarity(cs[0].english, readings[0])};
                return true;
            case Category::LazyGaelicisation: {
                if (!native_letters || !link || link->similarity < config.similarity_threshold) return false;
                for (auto& r : readings) {
                    for (auto& p : check_prefix(r, lex))
                        if (p.remainder_in_lexicon) return false;
                    for (auto& s : analyze_suffixes(r, lex))
                        if (text::length(s.stem) >= s.chain_length()) return false;
                }
                rec.detail = link->english;
                rec.evidence.push_back("respelling of " + link->english);
                return true;
            }
            case Category::Prefix:
                for (auto& r : readings) {
                    for (auto& p : check_prefix(r, lex)) {
                        if (!p.remainder_in_lexicon && !p.remainder_well_formed) continue;
                        if (p.native) {
                            const PrefixRule* rule = nullptr;
                            for (auto& pr : lex.rules.prefixes)
                                if (pr.form == p.prefix) rule = &pr;
                            bool aligned = false, translated = false;
                            for (auto& w : content) {
                                for (auto& g : rule->glosses) {
                                    if (w.size() > g.size() && w.starts_with(g)) {
                                        aligned = true;
                                        translated = translated || english_contains(lex.english, w);
                                    }
                                }
                            }
                            if (aligned && !translated) continue;
                        }
                        rec.detail = p.prefix + "-+" + p.remainder;
                        rec.evidence.push_back("prefix " + p.prefix + "- + " + p.remainder);
                        return true;
                    }
                }
                return false;
            case Category::Suffix:
                for (auto& r : readings) {
                    auto s = analyze_suffixes(r, lex);
                    if (!s.empty()) {
                        rec.detail = s[0].root.form + "+-" + s[0].chain();
                        rec.evidence.push_back("lexicon root " + s[0].root.form + " + -" + s[0].chain());
                        return true;
                    }
                }
                return false;
            case Category::GoodConfabulation:
                if (!rec.verdict.conformant || !native_letters || !cs.empty()) return false;
                rec.evidence.push_back("native, rule-conformant coinage");
                return true;
            default:
                return false;
        }
    };

    rec.category = Category::Unclassified;
    for (auto c : config.order) {
        if (step(c)) {
            rec.category = c;
            break;
        }
    }
    rec.source_link = link;
    return rec;
}

}  // namespace gaelcheck
