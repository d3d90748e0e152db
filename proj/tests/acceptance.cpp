#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <random>
#include <string>

#include "gaelcheck/generator.hpp"
#include "support.hpp"

using namespace gaelcheck;
using testsupport::config;
using testsupport::gold;
using testsupport::lex;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

int failures = 0;

void report(int n, const char* what, bool ok, const std::string& detail) {
    std::printf("%s %d %s: %s\n", ok ? "PASS" : "FAIL", n, what, detail.c_str());
    if (!ok) ++failures;
}

std::string fmt(const char* f, auto... args) {
    char buf[256];
    std::snprintf(buf, sizeof buf, f, args...);
    return buf;
}

void criterion_rates() {
    auto t0 = Clock::now();
    bool ok = hallucination_rate(21, 24194) == "0.86" && hallucination_rate(52, 24194) == "2.14" &&
              hallucination_rate(0, 1000) == "0.00";
    double s = seconds_since(t0);
    auto docs = testsupport::load_doc("gpt4.jsonl");
    auto r = analyze_document(docs.at(0), lex(), config(), {24194});
    ok = ok && r.records.size() == 21 && r.rate_per_1000 == "0.86";
    report(1, "hallucination rates", ok && s < 0.001,
           fmt("GPT4 %zu records -> %s/1000, rates in %.1fus", r.records.size(), r.rate_per_1000.c_str(), s * 1e6));
}

void criterion_verbs() {
    // the fixture lists the verb items first
    int total = 0, right = 0;
    for (auto& g : gold()) {
        if (g.category != "*" && !is_verb(*parse_category(g.category))) break;
        auto rec = testsupport::classify_gold(g);
        ++total;
        right += rec.verdict.conformant == g.conformant;
    }
    report(2, "verb verdicts", total == 10 && right == 10, fmt("%d/%d verbs", right, total));
}

void criterion_nouns() {
    auto t0 = Clock::now();
    int total = 0, right = 0;
    for (auto& g : gold()) {
        if (g.category != "*" && is_verb(*parse_category(g.category))) continue;
        auto rec = testsupport::classify_gold(g);
        if (is_verb(rec.category)) continue;
        ++total;
        bool ok = rec.verdict.conformant == g.conformant;
        if (g.category != "*") ok = ok && rec.category == parse_category(g.category);
        right += ok;
    }
    double s = seconds_since(t0);
    report(3, "noun verdicts and categories", right == total && total > 0 && s < 1.0,
           fmt("%d/%d nouns, %.3fs", right, total, s));
}

void criterion_recovery() {
    auto count = [](const char* file) {
        auto r = analyze_document(testsupport::load_doc(file).at(0), lex(), config());
        return r.nouns.rules;
    };
    std::size_t g = count("gpt4.jsonl"), m = count("mini.jsonl");
    report(4, "conformant noun recovery", g == 11 && m >= 18, fmt("GPT4 %zu, Mini %zu", g, m));
}

void criterion_lenition() {
    std::size_t checked = 0, bad = 0;
    for (auto& e : lex().irish.entries()) {
        const auto& w = e.form;
        if (w.empty()) continue;
        auto len = apply_lenition(w);
        ++checked;
        if (lenitable(w)) {
            if (strip_lenition(len) != w || !is_lenited(len)) ++bad;
        } else if (len != w) {
            ++bad;
        }
    }
    bool fixed = apply_lenition("moill") == "mhoill" && apply_lenition("sráid") == "shráid" &&
                 apply_lenition("lá") == "lá" && apply_lenition("sc") == "sc" && apply_lenition("ceol") == "cheol";
    report(5, "lenition round trip", bad == 0 && fixed, fmt("%zu entries, %zu failures", checked, bad));
}

void criterion_harmony() {
    std::size_t native = 0, pass = 0;
    for (auto& e : lex().irish.entries()) {
        if (!e.native) continue;
        ++native;
        pass += check_vowel_harmony(e.form).passed;
    }
    double share = native ? 100.0 * pass / native : 0;
    bool pair = check_vowel_harmony("gaothmhoill").passed && !check_vowel_harmony("gaoithchumachta").passed;
    report(6, "vowel harmony", share >= 95.0 && pair, fmt("%.1f%% of %zu native entries", share, native));
}

void criterion_generator() {
    auto t0 = Clock::now();
    std::string worst;
    bool ok = true;
    for (auto pattern : pattern_categories()) {
        auto good = generate({pattern, 200, 2024, true}, lex(), config());
        auto broken = generate({pattern, 200, 2025, false}, lex(), config());
        int hit = 0, conf = 0, viol = 0;
        for (auto& w : good) {
            auto rec = classify_token({w.word, 1, 0, ""}, w.source, lex(), config());
            hit += rec.category == pattern;
            conf += rec.verdict.conformant;
        }
        for (auto& w : broken) {
            auto rec = classify_token({w.word, 1, 0, ""}, w.source, lex(), config());
            viol += !rec.verdict.conformant;
        }
        bool p = hit >= 190 && conf == 200 && viol == 200;
        if (!p) {
            ok = false;
            worst += fmt(" %s(%d/%d/%d)", to_string(pattern), hit, conf, viol);
        }
    }
    double s = seconds_since(t0);
    report(7, "generator round trip", ok && s < 5.0, fmt("%.3fs%s", s, worst.c_str()));
}

void criterion_throughput() {
    std::vector<std::string> plain;
    for (auto& e : lex().irish.entries())
        if (e.native && e.form.find(' ') == std::string::npos) plain.push_back(e.form);
    std::vector<GeneratedWord> odd;
    for (auto pattern : pattern_categories()) {
        auto w = generate({pattern, 10, 7, true}, lex(), config());
        odd.insert(odd.end(), w.begin(), w.end());
    }
    std::mt19937_64 rng(1);
    DocumentPair doc{"synthetic", {}, "synthetic"};
    std::size_t tokens = 0;
    while (tokens < 25000) {
        std::string src, tgt;
        for (int i = 0; i < 20; ++i) {
            if (rng() % 25 == 0) {
                auto& g = odd[rng() % odd.size()];
                tgt += g.word + " ";
                for (auto& s : g.source) src += s + " ";
            } else {
                tgt += plain[rng() % plain.size()] + " ";
            }
            ++tokens;
        }
        doc.sentences.push_back({src.empty() ? "x" : src, tgt});
    }
    auto t0 = Clock::now();
    auto r = analyze_document(doc, lex(), config());
    double s = seconds_since(t0);
    report(8, "corpus throughput", s < 1.0 && r.token_count >= 25000,
           fmt("%zu tokens, %zu records, %.3fs", r.token_count, r.records.size(), s));
}

}  // namespace

int main() {
    std::vector<std::function<void()>> all{criterion_rates,     criterion_verbs,    criterion_nouns,
                                           criterion_recovery,  criterion_lenition, criterion_harmony,
                                           criterion_generator, criterion_throughput};
    int n = 0;
    for (auto& c : all) {
        ++n;
        try {
            c();
        } catch (const std::exception& e) {
            report(n, "exception", false, e.what());
        }
    }
    return failures ? 1 : 0;
}
