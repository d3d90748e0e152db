#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "gaelcheck/classifier.hpp"

namespace gaelcheck {

struct Token {
    std::string text;
    std::size_t offset = 0;  // byte offset in the input
    std::size_t index = 0;
};

std::vector<Token> tokenize(std::string_view text);

struct SentencePair {
    std::string source;
    std::string target;
};

struct DocumentPair {
    std::string doc_id;
    std::vector<SentencePair> sentences;
    std::string model_tag;
};

// Two line-aligned files. Throws AlignmentError when line counts differ.
DocumentPair load_parallel(std::istream& src, std::istream& tgt, const std::string& doc_id,
                           const std::string& model_tag);
// One {"id","src","tgt"[,"model"][,"doc"]} object per line; documents split on "doc".
std::vector<DocumentPair> load_jsonl(std::istream& in, const std::string& default_model = "");

struct PosCounts {
    std::size_t rules = 0;
    std::size_t no_rules = 0;
    std::size_t total() const { return rules + no_rules; }
};

struct Report {
    std::string model_tag;
    std::vector<std::string> doc_ids;
    std::uint64_t token_count = 0;
    std::vector<HallucinationRecord> records;
    PosCounts verbs;
    PosCounts nouns;
    std::string rate_per_1000;

    void recount();
};

struct AnalyzeOptions {
    std::optional<std::uint64_t> token_count_override;
};

Report analyze_document(const DocumentPair& pair, const Lexicons& lex, const ClassifierConfig& config = {},
                        const AnalyzeOptions& opts = {});
// Pools documents of one model; the override, if any, replaces the summed token count.
Report merge_reports(const std::vector<Report>& reports, const AnalyzeOptions& opts = {});

// truncate(1000 * count / tokens, 2 dp), integer arithmetic. Throws ContractViolation on tokens == 0.
std::string hallucination_rate(std::uint64_t count, std::uint64_t tokens);

enum class ReportFormat { Jsonl, Csv, Text };
ReportFormat parse_format(std::string_view name);  // throws UsageError
void emit_report(const Report& report, ReportFormat format, std::ostream& out);
void emit_reports(const std::vector<Report>& reports, ReportFormat format, std::ostream& out);

}  // namespace gaelcheck
