#include "gaelcheck/lexicon.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "gaelcheck/errors.hpp"
#include "gaelcheck/text.hpp"

namespace gaelcheck {

const char* to_string(PartOfSpeech p) {
    switch (p) {
        case PartOfSpeech::Noun: return "Noun";
        case PartOfSpeech::Verb: return "Verb";
        case PartOfSpeech::Adjective: return "Adjective";
        case PartOfSpeech::Other: return "Other";
        case PartOfSpeech::Unknown: return "Unknown";
    }
    return "Unknown";
}

std::optional<PartOfSpeech> parse_pos(std::string_view s) {
    if (s == "Noun") return PartOfSpeech::Noun;
    if (s == "Verb") return PartOfSpeech::Verb;
    if (s == "Adjective") return PartOfSpeech::Adjective;
    if (s == "Other") return PartOfSpeech::Other;
    if (s == "Unknown") return PartOfSpeech::Unknown;
    return std::nullopt;
}

Lexicon Lexicon::load(std::istream& in, const LexiconOptions& opts) {
    std::ostringstream buf;
    buf << in.rdbuf();
    return load(std::string_view(buf.str()), opts);
}

Lexicon Lexicon::load(std::string_view text, const LexiconOptions& opts) {
    if (!text::valid_utf8(text)) throw FormatError(opts.name + ": not valid UTF-8");
    Lexicon lex;
    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos < text.size()) {
        auto nl = text.find('\n', pos);
        if (nl == std::string_view::npos) nl = text.size();
        std::string_view line = text.substr(pos, nl - pos);
        pos = nl + 1;
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
        if (line.empty() || line.front() == '#') continue;

        std::vector<std::string_view> cols;
        std::size_t c = 0;
        while (true) {
            auto tab = line.find('\t', c);
            cols.push_back(line.substr(c, tab == std::string_view::npos ? std::string_view::npos : tab - c));
            if (tab == std::string_view::npos) break;
            c = tab + 1;
        }
        auto bad = [&](const std::string& why) {
            lex.warnings_.push_back(opts.name + ":" + std::to_string(line_no) + ": " + why);
        };
        if (cols.size() > 3 || cols[0].empty()) {
            bad("malformed entry");
            continue;
        }
        LexEntry e;
        e.form = text::normalize(cols[0]);
        if (e.form.find(' ') != std::string::npos) {
            bad("space inside form");
            continue;
        }
        if (cols.size() >= 2 && !cols[1].empty()) {
            auto p = parse_pos(cols[1]);
            if (!p) {
                bad("unknown part of speech '" + std::string(cols[1]) + "'");
                continue;
            }
            e.pos = *p;
        }
        if (cols.size() == 3) {
            if (cols[2] == "native") e.native = true;
            else if (cols[2] == "loan") e.native = false;
            else {
                bad("expected native or loan");
                continue;
            }
        }
        lex.add(std::move(e));
    }
    if (lex.entries_.empty()) throw ConfigError(opts.name + ": lexicon is empty");
    lex.finish();
    return lex;
}

Lexicon Lexicon::load_file(const std::filesystem::path& path, const LexiconOptions& opts) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ConfigError("cannot open lexicon " + path.string());
    LexiconOptions o = opts;
    if (o.name == "lexicon") o.name = path.string();
    return load(in, o);
}

void Lexicon::add(LexEntry e) {
    auto& idx = index_[e.form];
    for (auto i : idx)
        if (entries_[i].pos == e.pos) return;
    idx.push_back(entries_.size());
    entries_.push_back(std::move(e));
}

void Lexicon::finish() {
    sorted_forms_.reserve(index_.size());
    for (auto& [form, _] : index_) sorted_forms_.push_back(form);
    std::sort(sorted_forms_.begin(), sorted_forms_.end());
}

bool Lexicon::contains(std::string_view form) const { return index_.count(std::string(form)) > 0; }

const LexEntry* Lexicon::find(std::string_view form) const {
    auto it = index_.find(std::string(form));
    if (it == index_.end()) return nullptr;
    return &entries_[it->second.front()];
}

const LexEntry* Lexicon::find(std::string_view form, PartOfSpeech pos) const {
    auto it = index_.find(std::string(form));
    if (it == index_.end()) return nullptr;
    for (auto i : it->second)
        if (entries_[i].pos == pos) return &entries_[i];
    return nullptr;
}

std::vector<const LexEntry*> Lexicon::find_all(std::string_view form) const {
    std::vector<const LexEntry*> out;
    auto it = index_.find(std::string(form));
    if (it != index_.end())
        for (auto i : it->second) out.push_back(&entries_[i]);
    return out;
}

LookupResult Lexicon::lookup(std::string_view token) const {
    LookupResult r;
    auto readings = detect_and_strip_mutation(token);
    for (auto& m : readings) {
        if (auto* e = find(m.root)) {
            r.status = m.kind == MutationKind::None ? LookupResult::Status::Exact
                                                    : LookupResult::Status::ViaMutation;
            r.mutation = m.kind;
            r.root = m.root;
            r.entry = *e;
            return r;
        }
    }
    return r;
}

std::vector<std::string> Lexicon::extensions(std::string_view prefix) const {
    std::vector<std::string> out;
    auto it = std::upper_bound(sorted_forms_.begin(), sorted_forms_.end(), prefix,
                               [](std::string_view a, const std::string& b) { return a < b; });
    for (; it != sorted_forms_.end() && it->compare(0, prefix.size(), prefix) == 0; ++it)
        if (it->size() > prefix.size()) out.push_back(*it);
    return out;
}

std::optional<std::string> english_root_match(const Lexicon& eng, std::string_view fragment,
                                              std::size_t min_len) {
    auto f = text::decode(text::normalize(fragment));
    if (f.size() < min_len) return std::nullopt;
    for (std::size_t n = f.size(); n >= min_len; --n) {
        auto cand = text::encode(f.substr(0, n));
        if (eng.contains(cand)) return cand;
    }
    return std::nullopt;
}

std::vector<std::string> english_truncation_matches(const Lexicon& eng, std::string_view fragment,
                                                    std::size_t min_len) {
    auto f = text::normalize(fragment);
    if (text::length(f) < min_len) return {};
    return eng.extensions(f);
}

bool english_contains(const Lexicon& eng, std::string_view word) {
    auto w = text::normalize(word);
    if (eng.contains(w)) return true;
    if (w.size() > 3 && w.back() == 's') {
        if (eng.contains(w.substr(0, w.size() - 1))) return true;
        if (w.size() > 4 && w[w.size() - 2] == 'e' && eng.contains(w.substr(0, w.size() - 2))) return true;
    }
    return false;
}

}  // namespace gaelcheck
