#pragma once

#include <filesystem>
#include <istream>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "gaelcheck/orthography.hpp"

namespace gaelcheck {

enum class PartOfSpeech { Noun, Verb, Adjective, Other, Unknown };

const char* to_string(PartOfSpeech p);
std::optional<PartOfSpeech> parse_pos(std::string_view s);

struct LexEntry {
    std::string form;
    PartOfSpeech pos = PartOfSpeech::Unknown;
    bool native = true;
    bool operator==(const LexEntry&) const = default;
};

struct LookupResult {
    enum class Status { Exact, ViaMutation, Absent };
    Status status = Status::Absent;
    MutationKind mutation = MutationKind::None;
    std::string root;
    std::optional<LexEntry> entry;

    bool found() const { return status != Status::Absent; }
};

struct LexiconOptions {
    std::string name = "lexicon";
};

class Lexicon {
public:
    static Lexicon load(std::istream& in, const LexiconOptions& opts = {});
    static Lexicon load(std::string_view text, const LexiconOptions& opts = {});
    static Lexicon load_file(const std::filesystem::path& path, const LexiconOptions& opts = {});

    const std::vector<LexEntry>& entries() const { return entries_; }
    const std::vector<std::string>& warnings() const { return warnings_; }
    std::size_t size() const { return entries_.size(); }

    // Normalized-form membership, any POS.
    bool contains(std::string_view form) const;
    const LexEntry* find(std::string_view form) const;
    const LexEntry* find(std::string_view form, PartOfSpeech pos) const;
    std::vector<const LexEntry*> find_all(std::string_view form) const;

    LookupResult lookup(std::string_view token) const;

    // Sorted distinct forms starting with prefix (prefix itself excluded).
    std::vector<std::string> extensions(std::string_view prefix) const;

private:
    void add(LexEntry e);
    void finish();

    std::vector<LexEntry> entries_;
    std::unordered_map<std::string, std::vector<std::size_t>> index_;
    std::vector<std::string> sorted_forms_;
    std::vector<std::string> warnings_;
};

std::optional<std::string> english_root_match(const Lexicon& eng, std::string_view fragment,
                                              std::size_t min_len = 3);

// English words of which fragment is a proper prefix.
std::vector<std::string> english_truncation_matches(const Lexicon& eng, std::string_view fragment,
                                                    std::size_t min_len = 4);

// Membership allowing a regular plural -s/-es on the query.
bool english_contains(const Lexicon& eng, std::string_view word);

}  // namespace gaelcheck
