#include "gaelcheck/rules.hpp"

#include <fstream>
#include <sstream>

#include "gaelcheck/errors.hpp"
#include "gaelcheck/text.hpp"

namespace gaelcheck {

const char* to_string(Conjugation c) { return c == Conjugation::First ? "first" : "second"; }

const char* to_string(VerbSlot s) {
    switch (s) {
        case VerbSlot::Pres1Sg: return "pres1sg";
        case VerbSlot::PresAnalytic: return "pres-analytic";
        case VerbSlot::Pres1Pl: return "pres1pl";
        case VerbSlot::PresAut: return "pres-aut";
        case VerbSlot::Past1Pl: return "past1pl";
        case VerbSlot::PastAut: return "past-aut";
        case VerbSlot::PastAnalytic: return "past-analytic";
    }
    return "?";
}

const char* to_string(SuffixKind k) {
    switch (k) {
        case SuffixKind::Derivational: return "derivational";
        case SuffixKind::Plural: return "plural";
        case SuffixKind::Genitive: return "genitive";
    }
    return "?";
}

bool is_past(VerbSlot s) {
    return s == VerbSlot::Past1Pl || s == VerbSlot::PastAut || s == VerbSlot::PastAnalytic;
}

namespace {

std::vector<std::string> split(std::string_view s, char sep) {
    std::vector<std::string> out;
    std::size_t start = 0;
    while (true) {
        auto p = s.find(sep, start);
        out.emplace_back(s.substr(start, p == std::string_view::npos ? std::string_view::npos : p - start));
        if (p == std::string_view::npos) break;
        start = p + 1;
    }
    return out;
}

VowelClass parse_class(const std::string& s, const std::string& where) {
    if (s == "broad") return VowelClass::Broad;
    if (s == "slender") return VowelClass::Slender;
    throw FormatError(where + ": expected broad or slender, got '" + s + "'");
}

VerbSlot parse_slot(const std::string& s, const std::string& where) {
    static const std::pair<const char*, VerbSlot> slots[] = {
        {"pres1sg", VerbSlot::Pres1Sg}, {"pres-analytic", VerbSlot::PresAnalytic},
        {"pres1pl", VerbSlot::Pres1Pl}, {"pres-aut", VerbSlot::PresAut},
        {"past1pl", VerbSlot::Past1Pl}, {"past-aut", VerbSlot::PastAut}};
    for (auto& [name, slot] : slots)
        if (s == name) return slot;
    throw FormatError(where + ": unknown verb slot '" + s + "'");
}

bool yes_no(const std::string& s, const std::string& where) {
    if (s == "yes") return true;
    if (s == "no") return false;
    throw FormatError(where + ": expected yes or no");
}

}  // namespace

MorphRules MorphRules::load(std::string_view text, const std::string& name) {
    if (!text::valid_utf8(text)) throw FormatError(name + ": not valid UTF-8");
    MorphRules r;
    std::istringstream in{std::string(text)};
    std::string line;
    std::size_t n = 0;
    while (std::getline(in, line)) {
        ++n;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() || line[0] == '#') continue;
        auto cols = split(line, '\t');
        std::string where = name + ":" + std::to_string(n);
        auto need = [&](std::size_t k) {
            if (cols.size() != k)
                throw FormatError(where + ": expected " + std::to_string(k) + " columns");
        };
        const auto& table = cols[0];
        if (table == "verb") {
            need(5);
            Conjugation conj;
            if (cols[2] == "first") conj = Conjugation::First;
            else if (cols[2] == "second") conj = Conjugation::Second;
            else throw FormatError(where + ": expected first or second");
            r.verb_suffixes.push_back({text::normalize(cols[1]), conj, parse_class(cols[3], where),
                                       parse_slot(cols[4], where)});
        } else if (table == "prefix") {
            need(6);
            PrefixRule p;
            p.form = text::normalize(cols[1]);
            p.canonical = text::normalize(cols[2]);
            p.lenites = yes_no(cols[3], where);
            if (cols[4] != "native" && cols[4] != "loan") throw FormatError(where + ": expected native or loan");
            p.native = cols[4] == "native";
            for (auto& g : split(cols[5], ','))
                if (!g.empty()) p.glosses.push_back(text::normalize(g));
            r.prefixes.push_back(std::move(p));
        } else if (table == "suffix") {
            need(6);
            NounSuffix s;
            s.form = text::normalize(cols[1]);
            if (cols[2] == "derivational") s.kind = SuffixKind::Derivational;
            else if (cols[2] == "plural") s.kind = SuffixKind::Plural;
            else if (cols[2] == "genitive") s.kind = SuffixKind::Genitive;
            else throw FormatError(where + ": unknown suffix kind '" + cols[2] + "'");
            s.cls = parse_class(cols[3], where);
            if (cols[4] != "any" && cols[4] != "noun") throw FormatError(where + ": expected any or noun");
            s.noun_root_only = cols[4] == "noun";
            if (cols[5] != "-")
                for (auto& e : split(cols[5], ','))
                    if (!e.empty()) s.english_endings.push_back(e);
            r.noun_suffixes.push_back(std::move(s));
        } else if (table == "formative") {
            need(2);
            r.formatives.push_back(text::normalize(cols[1]));
        } else {
            throw FormatError(where + ": unknown table '" + table + "'");
        }
    }
    if (r.verb_suffixes.empty() || r.noun_suffixes.empty())
        throw ConfigError(name + ": verb and suffix tables must not be empty");
    return r;
}

MorphRules MorphRules::load_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ConfigError("cannot open rules file " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return load(buf.str(), path);
}

const MorphRules& MorphRules::builtin() {
    static const MorphRules rules = load(seed::morphology(), "builtin morphology");
    return rules;
}

bool MorphRules::is_suffix_form(std::string_view form) const {
    for (auto& s : noun_suffixes)
        if (s.form == form) return true;
    return false;
}

}  // namespace gaelcheck
