#pragma once

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "gaelcheck/classifier.hpp"
#include "gaelcheck/pipeline.hpp"

namespace testsupport {

using namespace gaelcheck;

inline const Lexicon& irish() {
    static const Lexicon l = Lexicon::load(seed::irish_lexicon());
    return l;
}

inline const Lexicon& english() {
    static const Lexicon l = Lexicon::load(seed::english_lexicon());
    return l;
}

inline Lexicons lex() { return {irish(), english(), MorphRules::builtin()}; }

inline const ClassifierConfig& config() {
    static const ClassifierConfig c = ClassifierConfig::parse(seed::classifier_config());
    return c;
}

struct GoldItem {
    std::string model;
    std::string category;  // "*" when only the verdict is fixed
    bool conformant;
    std::string word;
    std::string source;
    std::string target;
};

inline std::vector<GoldItem> gold() {
    std::ifstream in(std::string(GAELCHECK_FIXTURES) + "/gold.tsv");
    std::vector<GoldItem> out;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        std::vector<std::string> f;
        std::stringstream ss(line);
        std::string cell;
        while (std::getline(ss, cell, '\t')) f.push_back(cell);
        if (f.size() != 6) continue;
        out.push_back({f[0], f[1], f[2] == "yes", f[3], f[4], f[5]});
    }
    return out;
}

// Locates the item in its sentence so the classifier sees the same context as the pipeline.
inline HallucinationRecord classify_gold(const GoldItem& g, const ClassifierConfig& cfg = config()) {
    auto toks = tokenize(g.target);
    std::vector<std::string> src;
    for (auto& t : tokenize(g.source)) src.push_back(t.text);
    for (std::size_t i = 0; i < toks.size(); ++i) {
        if (toks[i].text != g.word) continue;
        return classify_token({g.word, 1, i, i ? toks[i - 1].text : ""}, src, lex(), cfg);
    }
    throw std::runtime_error("gold word not in its sentence: " + g.word);
}

inline std::vector<DocumentPair> load_doc(const std::string& name) {
    std::ifstream in(std::string(GAELCHECK_FIXTURES) + "/" + name);
    return load_jsonl(in);
}

}  // namespace testsupport
