#include "gaelcheck/pipeline.hpp"

#include <algorithm>
#include <iomanip>
#include <istream>
#include <ostream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "gaelcheck/errors.hpp"
#include "gaelcheck/text.hpp"

namespace gaelcheck {

namespace {

using json = nlohmann::ordered_json;

bool word_char(char32_t c) {
    return text::is_letter(c) || text::is_digit(c) || (c >= 0x300 && c <= 0x36F);
}

bool joiner(char32_t c) { return c == U'\'' || c == U'’' || c == U'-'; }

std::size_t utf8_len(char32_t c) {
    if (c < 0x80) return 1;
    if (c < 0x800) return 2;
    if (c < 0x10000) return 3;
    return 4;
}

bool blank(const std::string& s) { return s.find_first_not_of(" \t\r\n") == std::string::npos; }

bool all_caps(std::string_view tok) {
    std::size_t letters = 0;
    for (char32_t c : text::decode(tok)) {
        if (!text::is_letter(c)) continue;
        if (!text::is_upper(c)) return false;
        ++letters;
    }
    return letters >= 2;
}

bool has_digit(std::string_view tok) {
    for (char32_t c : text::decode(tok))
        if (text::is_digit(c)) return true;
    return false;
}

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n\r") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

std::string fixed3(double d) {
    std::ostringstream o;
    o << std::fixed << std::setprecision(3) << d;
    return o.str();
}

json record_json(const HallucinationRecord& r, const std::string& model) {
    json j;
    j["type"] = "record";
    j["model"] = model;
    j["sentence_id"] = r.sentence_id;
    j["position"] = r.position;
    j["surface"] = r.surface;
    j["pos"] = is_verb(r.category) ? "verb" : "noun";
    j["category"] = to_string(r.category);
    j["conformant"] = r.verdict.conformant;
    j["violations"] = json::array();
    for (auto& v : r.verdict.violations) j["violations"].push_back({{"rule", v.rule}, {"detail", v.detail}});
    j["evidence"] = r.evidence;
    for (auto& e : r.verdict.evidence)
        if (std::find(r.evidence.begin(), r.evidence.end(), e) == r.evidence.end()) j["evidence"].push_back(e);
    if (r.source_link)
        j["source_link"] = {{"english", r.source_link->english},
                            {"similarity", std::stod(fixed3(r.source_link->similarity))}};
    else
        j["source_link"] = nullptr;
    return j;
}

json summary_json(const Report& r) {
    json j;
    j["type"] = "summary";
    j["model"] = r.model_tag;
    j["documents"] = r.doc_ids;
    j["tokens"] = r.token_count;
    j["hallucinations"] = r.records.size();
    j["rate_per_1000"] = r.rate_per_1000;
    j["verbs"] = {{"rules", r.verbs.rules}, {"no_rules", r.verbs.no_rules}};
    j["nouns"] = {{"rules", r.nouns.rules}, {"no_rules", r.nouns.no_rules}};
    return j;
}

std::string pad(std::string s, std::size_t w) {
    auto n = text::length(s);
    if (n < w) s.append(w - n, ' ');
    return s;
}

std::string two(std::size_t n) {
    std::ostringstream o;
    o << std::setw(2) << std::setfill('0') << n;
    return o.str();
}

std::string percent(const PosCounts& c) {
    if (c.total() == 0) return "-";
    return std::to_string((200 * c.rules + c.total()) / (2 * c.total()));
}

void emit_text(const std::vector<Report>& reports, std::ostream& out) {
    out << pad("Model", 14) << pad("Verb", 6) << pad("Noun", 6) << pad("Total", 7) << "Rate\n";
    std::size_t v = 0, n = 0;
    for (auto& r : reports) {
        out << pad(r.model_tag.empty() ? "-" : r.model_tag, 14) << pad(two(r.verbs.total()), 6)
            << pad(two(r.nouns.total()), 6) << pad(two(r.records.size()), 7) << r.rate_per_1000 << "\n";
        v += r.verbs.total();
        n += r.nouns.total();
    }
    if (reports.size() > 1) out << pad("Total", 14) << pad(two(v), 6) << pad(two(n), 6) << pad(two(v + n), 7) << "-\n";

    for (int which = 0; which < 2; ++which) {
        out << "\n" << (which == 0 ? "VERBS" : "NOUNS") << "\n";
        out << pad("Model", 14) << pad("Rules", 7) << pad("No Rules", 10) << pad("Total", 7) << "% Rules\n";
        for (auto& r : reports) {
            auto& c = which == 0 ? r.verbs : r.nouns;
            out << pad(r.model_tag.empty() ? "-" : r.model_tag, 14) << pad(two(c.rules), 7) << pad(two(c.no_rules), 10)
                << pad(two(c.total()), 7) << percent(c) << "\n";
        }
    }

    for (auto& r : reports) {
        if (r.records.empty()) continue;
        out << "\n" << (r.model_tag.empty() ? "-" : r.model_tag) << "\n";
        for (auto& rec : r.records) {
            out << "  " << pad(rec.surface, 22) << pad(to_string(rec.category), 22)
                << pad(rec.verdict.conformant ? "rules" : "no rules", 10);
            if (rec.source_link) out << rec.source_link->english << " " << fixed3(rec.source_link->similarity);
            if (!rec.verdict.conformant) {
                out << "  [";
                auto ids = rec.verdict.rules();
                for (std::size_t i = 0; i < ids.size(); ++i) out << (i ? "," : "") << ids[i];
                out << "]";
            }
            out << "\n";
        }
    }
}

}  // namespace

std::vector<Token> tokenize(std::string_view input) {
    auto cps = text::decode(input);
    std::vector<Token> out;
    std::size_t byte = 0, i = 0;
    std::vector<std::size_t> offsets(cps.size() + 1);
    for (std::size_t k = 0; k < cps.size(); ++k) {
        offsets[k] = byte;
        byte += utf8_len(cps[k]);
    }
    offsets[cps.size()] = byte;
    while (i < cps.size()) {
        if (!word_char(cps[i]) || (cps[i] >= 0x300 && cps[i] <= 0x36F)) {
            ++i;
            continue;
        }
        std::size_t j = i + 1;
        while (j < cps.size()) {
            if (word_char(cps[j])) {
                ++j;
            } else if (joiner(cps[j]) && j + 1 < cps.size() && word_char(cps[j + 1])) {
                j += 2;
            } else {
                break;
            }
        }
        Token t;
        t.offset = offsets[i];
        t.text = std::string(input.substr(offsets[i], offsets[j] - offsets[i]));
        t.index = out.size();
        out.push_back(std::move(t));
        i = j;
    }
    return out;
}

DocumentPair load_parallel(std::istream& src, std::istream& tgt, const std::string& doc_id,
                           const std::string& model_tag) {
    DocumentPair d{doc_id, {}, model_tag};
    std::string s, t;
    std::size_t line = 0;
    while (true) {
        bool a = static_cast<bool>(std::getline(src, s));
        bool b = static_cast<bool>(std::getline(tgt, t));
        if (!a && !b) break;
        ++line;
        if (a != b)
            throw AlignmentError("line counts differ: " + std::string(a ? "target" : "source") + " ends at line " +
                                     std::to_string(line),
                                 line);
        if (!s.empty() && s.back() == '\r') s.pop_back();
        if (!t.empty() && t.back() == '\r') t.pop_back();
        if (!text::valid_utf8(s) || !text::valid_utf8(t))
            throw FormatError("line " + std::to_string(line) + " is not valid UTF-8");
        d.sentences.push_back({s, t});
    }
    return d;
}

std::vector<DocumentPair> load_jsonl(std::istream& in, const std::string& default_model) {
    std::vector<DocumentPair> docs;
    std::string line;
    std::size_t n = 0;
    while (std::getline(in, line)) {
        ++n;
        if (blank(line)) continue;
        json j;
        try {
            j = json::parse(line);
        } catch (const json::exception& e) {
            throw FormatError("jsonl line " + std::to_string(n) + ": " + e.what());
        }
        if (!j.is_object() || !j.contains("src") || !j.contains("tgt") || !j["src"].is_string() ||
            !j["tgt"].is_string())
            throw FormatError("jsonl line " + std::to_string(n) + ": need string fields src and tgt");
        std::string doc = j.value("doc", std::string("doc"));
        std::string model = j.value("model", default_model);
        if (!default_model.empty()) model = default_model;
        auto it = std::find_if(docs.begin(), docs.end(),
                               [&](const DocumentPair& d) { return d.doc_id == doc && d.model_tag == model; });
        if (it == docs.end()) {
            docs.push_back({doc, {}, model});
            it = docs.end() - 1;
        }
        it->sentences.push_back({j["src"].get<std::string>(), j["tgt"].get<std::string>()});
    }
    return docs;
}

void Report::recount() {
    verbs = {};
    nouns = {};
    for (auto& r : records) {
        auto& c = is_verb(r.category) ? verbs : nouns;
        (r.verdict.conformant ? c.rules : c.no_rules)++;
    }
    rate_per_1000 = token_count ? hallucination_rate(records.size(), token_count) : "0.00";
}

std::string hallucination_rate(std::uint64_t count, std::uint64_t tokens) {
    if (tokens == 0) throw ContractViolation("hallucination rate needs a positive token count");
    std::uint64_t hundredths = count * 100000 / tokens;
    std::string frac = std::to_string(hundredths % 100);
    if (frac.size() < 2) frac.insert(0, "0");
    return std::to_string(hundredths / 100) + "." + frac;
}

Report analyze_document(const DocumentPair& pair, const Lexicons& lex, const ClassifierConfig& config,
                        const AnalyzeOptions& opts) {
    Report rep;
    rep.model_tag = pair.model_tag;
    rep.doc_ids.push_back(pair.doc_id);
    std::uint64_t tokens = 0;
    for (std::size_t i = 0; i < pair.sentences.size(); ++i) {
        auto& sp = pair.sentences[i];
        if (blank(sp.source) != blank(sp.target))
            throw AlignmentError("sentence " + std::to_string(i + 1) + " has only one side", i + 1);
        auto toks = tokenize(sp.target);
        tokens += toks.size();
        std::vector<std::string> source;
        std::set<std::string> seen;
        for (auto& t : tokenize(sp.source)) {
            source.push_back(t.text);
            seen.insert(text::normalize(t.text));
        }
        for (std::size_t k = 0; k < toks.size(); ++k) {
            auto& t = toks[k].text;
            if (has_digit(t) || all_caps(t)) continue;
            if (seen.count(text::normalize(t))) continue;
            if (lex.irish.lookup(t).found()) continue;
            AnalyzedToken at{t, i + 1, k, k ? toks[k - 1].text : std::string()};
            rep.records.push_back(classify_token(at, source, lex, config));
        }
    }
    rep.token_count = opts.token_count_override.value_or(tokens);
    rep.recount();
    return rep;
}

Report merge_reports(const std::vector<Report>& reports, const AnalyzeOptions& opts) {
    Report out;
    std::uint64_t tokens = 0;
    for (auto& r : reports) {
        if (out.model_tag.empty()) out.model_tag = r.model_tag;
        out.doc_ids.insert(out.doc_ids.end(), r.doc_ids.begin(), r.doc_ids.end());
        out.records.insert(out.records.end(), r.records.begin(), r.records.end());
        tokens += r.token_count;
    }
    out.token_count = opts.token_count_override.value_or(tokens);
    out.recount();
    return out;
}

ReportFormat parse_format(std::string_view name) {
    if (name == "jsonl") return ReportFormat::Jsonl;
    if (name == "csv") return ReportFormat::Csv;
    if (name == "text") return ReportFormat::Text;
    throw UsageError("unsupported format '" + std::string(name) + "' (jsonl, csv, text)");
}

void emit_report(const Report& report, ReportFormat format, std::ostream& out) {
    emit_reports({report}, format, out);
}

void emit_reports(const std::vector<Report>& reports, ReportFormat format, std::ostream& out) {
    switch (format) {
        case ReportFormat::Jsonl:
            for (auto& r : reports) {
                for (auto& rec : r.records) out << record_json(rec, r.model_tag).dump() << "\n";
                out << summary_json(r).dump() << "\n";
            }
            break;
        case ReportFormat::Csv:
            out << "model,sentence_id,position,surface,pos,category,conformant,rules,source_word,similarity\n";
            for (auto& r : reports) {
                for (auto& rec : r.records) {
                    std::string rules;
                    for (auto& id : rec.verdict.rules()) rules += (rules.empty() ? "" : ";") + id;
                    out << csv_field(r.model_tag) << "," << rec.sentence_id << "," << rec.position << ","
                        << csv_field(rec.surface) << "," << (is_verb(rec.category) ? "verb" : "noun") << ","
                        << to_string(rec.category) << "," << (rec.verdict.conformant ? "true" : "false") << ","
                        << csv_field(rules) << ","
                        << csv_field(rec.source_link ? rec.source_link->english : std::string()) << ","
                        << (rec.source_link ? fixed3(rec.source_link->similarity) : std::string()) << "\n";
                }
            }
            break;
        case ReportFormat::Text:
            emit_text(reports, out);
            break;
    }
}

}  // namespace gaelcheck
