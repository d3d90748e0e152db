#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <memory>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "gaelcheck/errors.hpp"
#include "gaelcheck/generator.hpp"
#include "gaelcheck/pipeline.hpp"
#include "gaelcheck/text.hpp"

using namespace gaelcheck;

namespace {

struct Paths {
    std::string irish, english, rules, config, format = "jsonl";
    std::optional<double> threshold;
};

struct Loaded {
    Lexicon irish;
    Lexicon english;
    MorphRules rules;
    ClassifierConfig config;
    Lexicons view() const { return {irish, english, rules}; }
};

std::unique_ptr<Loaded> load(const Paths& p) {
    auto lex = [](const std::string& path, std::string_view seed, const char* name) {
        auto l = path.empty() ? Lexicon::load(seed, {name}) : Lexicon::load_file(path, {name});
        for (auto& w : l.warnings()) std::cerr << "warning: " << w << "\n";
        return l;
    };
    auto irish = lex(p.irish, seed::irish_lexicon(), "irish lexicon");
    auto english = lex(p.english, seed::english_lexicon(), "english lexicon");
    auto rules = p.rules.empty() ? MorphRules::builtin() : MorphRules::load_file(p.rules);
    auto config = p.config.empty() ? ClassifierConfig::parse(seed::classifier_config())
                                   : ClassifierConfig::load_file(p.config);
    if (p.threshold) {
        if (*p.threshold < 0 || *p.threshold > 1) throw UsageError("--threshold must lie in [0,1]");
        config.similarity_threshold = *p.threshold;
    }
    return std::make_unique<Loaded>(Loaded{std::move(irish), std::move(english), std::move(rules), config});
}

std::ifstream open_in(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw UsageError("cannot open " + path);
    return in;
}

std::string check_line(const std::string& word, const std::vector<std::string>& src, const Loaded& d) {
    auto lex = d.view();
    auto hit = d.irish.lookup(word);
    if (hit.found()) {
        if (hit.status == LookupResult::Status::Exact) return "in lexicon";
        return std::string("in lexicon (") + to_string(hit.mutation) + " of " + hit.root + ")";
    }
    auto rec = classify_token({word, 0, 0, ""}, src, lex, d.config);
    std::string out = "OOV; ";
    out += display_name(rec.category);
    if (!rec.detail.empty()) out += "(" + rec.detail + ")";
    if (rec.source_link) {
        std::ostringstream s;
        s.precision(3);
        s << std::fixed << rec.source_link->similarity;
        out += "; similarity " + rec.source_link->english + " " + s.str();
    }
    return out + "; " + rec.verdict.summary();
}

int run(int argc, char** argv) {
    CLI::App app{"Detect and classify invented words in Irish machine translation output"};
    app.require_subcommand(1);
    Paths paths;
    app.add_option("--lex", paths.irish, "Irish lexicon (form<TAB>pos<TAB>native|loan)")->envname("GAELCHECK_LEXICON");
    app.add_option("--eng", paths.english, "English lexicon")->envname("GAELCHECK_ENGLISH_LEXICON");
    app.add_option("--rules", paths.rules, "morphology rule tables")->envname("GAELCHECK_RULES");
    app.add_option("--config", paths.config, "classifier config (key = value)")->envname("GAELCHECK_CONFIG");
    app.add_option("--format", paths.format, "jsonl, csv or text")->check(CLI::IsMember({"jsonl", "csv", "text"}));
    app.add_option("--threshold", paths.threshold, "similarity threshold override");

    auto* analyze = app.add_subcommand("analyze", "analyze a parallel document");
    std::string src, tgt, jsonl, model, doc_id = "doc";
    std::optional<std::uint64_t> override_count;
    analyze->add_option("--src", src, "English source, one sentence per line");
    analyze->add_option("--tgt", tgt, "Irish output, line-aligned with --src");
    analyze->add_option("--jsonl", jsonl, "JSONL corpus {id, src, tgt[, model][, doc]}");
    analyze->add_option("--model", model, "model tag");
    analyze->add_option("--doc-id", doc_id, "document id for --src/--tgt input");
    analyze->add_option("--token-count-override", override_count, "token total used for the rate");

    auto* check = app.add_subcommand("check", "check a single word");
    std::string word;
    std::vector<std::string> src_words;
    check->add_option("word", word, "word to check")->required();
    check->add_option("--src-word", src_words, "English source word(s)");

    auto* classify = app.add_subcommand("classify", "classify OOV tokens, one per line: token[<TAB>source sentence]");
    std::string tokens_path = "-";
    classify->add_option("input", tokens_path, "token file, - for stdin");

    auto* gen = app.add_subcommand("generate", "generate labeled confabulations");
    std::string pattern;
    std::size_t count = 10;
    std::uint64_t seed = 1;
    bool broken = false;
    gen->add_option("--pattern", pattern, "pattern name")->required();
    gen->add_option("--count", count, "number of words");
    gen->add_option("--seed", seed, "random seed");
    gen->add_flag("--broken", broken, "emit rule-violating words");

    auto* report = app.add_subcommand("report", "per-model summary tables over JSONL corpora");
    std::vector<std::string> corpora;
    std::vector<std::string> token_counts;
    report->add_option("corpus", corpora, "JSONL corpus files")->required();
    report->add_option("--token-count", token_counts, "MODEL=N token total override");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }
    if (report->parsed() && !app.get_option("--format")->count()) paths.format = "text";
    auto format = parse_format(paths.format);
    auto data = load(paths);
    auto lex = data->view();

    if (analyze->parsed()) {
        std::vector<DocumentPair> docs;
        if (!jsonl.empty()) {
            if (!src.empty() || !tgt.empty()) throw UsageError("use either --jsonl or --src/--tgt");
            auto in = open_in(jsonl);
            docs = load_jsonl(in, model);
        } else {
            if (src.empty()) throw UsageError("--src is required");
            if (tgt.empty()) throw UsageError("--tgt is required");
            auto s = open_in(src);
            auto t = open_in(tgt);
            docs.push_back(load_parallel(s, t, doc_id, model));
        }
        std::vector<Report> reps;
        for (auto& d : docs) reps.push_back(analyze_document(d, lex, data->config));
        Report all = merge_reports(reps, {override_count});
        if (!model.empty()) all.model_tag = model;
        emit_report(all, format, std::cout);
        std::cerr << all.records.size() << " hallucinations, " << all.rate_per_1000 << "/1000\n";
        return 0;
    }

    if (check->parsed()) {
        if (text::normalize(word).empty()) throw UsageError("empty word");
        std::cout << check_line(word, src_words, *data) << "\n";
        return 0;
    }

    if (classify->parsed()) {
        std::ifstream file;
        std::istream* in = &std::cin;
        if (tokens_path != "-") {
            file = open_in(tokens_path);
            in = &file;
        }
        Report rep;
        rep.model_tag = model;
        std::string line;
        std::size_t n = 0;
        while (std::getline(*in, line)) {
            ++n;
            if (!line.empty() && line.back() == '\r') line.pop_back();
            if (line.empty()) continue;
            auto tab = line.find('\t');
            std::string tok = line.substr(0, tab);
            std::vector<std::string> source;
            if (tab != std::string::npos)
                for (auto& t : tokenize(line.substr(tab + 1))) source.push_back(t.text);
            if (data->irish.lookup(tok).found()) {
                std::cerr << "line " << n << ": " << tok << " is in the lexicon, skipped\n";
                continue;
            }
            rep.records.push_back(classify_token({tok, n, 0, ""}, source, lex, data->config));
        }
        rep.token_count = n;
        rep.recount();
        emit_report(rep, format, std::cout);
        return 0;
    }

    if (gen->parsed()) {
        auto cat = parse_category(pattern);
        auto& valid = pattern_categories();
        if (!cat || std::find(valid.begin(), valid.end(), *cat) == valid.end()) {
            std::string names;
            for (auto c : valid) names += std::string(names.empty() ? "" : ", ") + to_string(c);
            throw UsageError("unknown pattern '" + pattern + "'; valid patterns: " + names);
        }
        auto words = generate({*cat, count, seed, !broken}, lex, data->config);
        if (format == ReportFormat::Csv) std::cout << "word,pattern,conformant,rule_violated\n";
        for (auto& w : words) {
            if (format == ReportFormat::Jsonl) {
                nlohmann::ordered_json j;
                j["word"] = w.word;
                j["pattern"] = to_string(w.pattern);
                j["conformant"] = w.conformant;
                j["rule_violated"] = w.rule_violated.empty() ? nlohmann::ordered_json(nullptr)
                                                             : nlohmann::ordered_json(w.rule_violated);
                j["source"] = w.source;
                j["recipe"] = w.recipe;
                std::cout << j.dump() << "\n";
            } else if (format == ReportFormat::Csv) {
                std::cout << w.word << "," << to_string(w.pattern) << "," << (w.conformant ? "true" : "false") << ","
                          << w.rule_violated << "\n";
            } else {
                std::cout << w.word << "\t" << w.recipe << (w.rule_violated.empty() ? "" : "\t" + w.rule_violated) << "\n";
            }
        }
        return 0;
    }

    if (report->parsed()) {
        std::map<std::string, std::uint64_t> overrides;
        for (auto& tc : token_counts) {
            auto eq = tc.find('=');
            if (eq == std::string::npos) throw UsageError("--token-count expects MODEL=N, got " + tc);
            try {
                overrides[tc.substr(0, eq)] = std::stoull(tc.substr(eq + 1));
            } catch (const std::exception&) {
                throw UsageError("--token-count expects MODEL=N, got " + tc);
            }
        }
        std::vector<std::string> order;
        std::map<std::string, std::vector<Report>> by_model;
        for (auto& path : corpora) {
            auto in = open_in(path);
            for (auto& d : load_jsonl(in)) {
                if (!by_model.count(d.model_tag)) order.push_back(d.model_tag);
                by_model[d.model_tag].push_back(analyze_document(d, lex, data->config));
            }
        }
        std::vector<Report> merged;
        for (auto& m : order) {
            AnalyzeOptions o;
            if (overrides.count(m)) o.token_count_override = overrides[m];
            merged.push_back(merge_reports(by_model[m], o));
        }
        emit_reports(merged, format, std::cout);
        for (auto& r : merged)
            std::cerr << (r.model_tag.empty() ? "-" : r.model_tag) << ": " << r.records.size() << " hallucinations, "
                      << r.rate_per_1000 << "/1000\n";
        return 0;
    }
    return 1;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 1;
    } catch (const AlignmentError& e) {
        std::cerr << "alignment error at sentence " << e.sentence() << ": " << e.what() << "\n";
        return 1;
    } catch (const FormatError& e) {
        std::cerr << "format error: " << e.what() << "\n";
        return 1;
    } catch (const ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 2;
    }
}
