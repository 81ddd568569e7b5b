#ifndef ATC_TEXTPREP_HPP
#define ATC_TEXTPREP_HPP

#include <filesystem>
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

namespace atc {

struct RawDocument {
    std::string id;
    std::string label; // empty when unlabeled
    std::string text;
};

// Sorted, deduplicated, normalized lowercase tokens of one document.
// This is the unit the miner treats as a transaction.
using KeywordSet = std::vector<std::string>;

class StopwordList {
public:
    StopwordList() = default;
    explicit StopwordList(const std::vector<std::string>& words);

    // Built-in English function-word list (articles, prepositions,
    // pronouns, auxiliaries, quantifiers, single letters).
    static const StopwordList& builtin();

    // One word per line, '#' lines ignored, case-insensitive.
    static StopwordList from_file(const std::filesystem::path& path);

    bool contains(const std::string& word) const { return words_.count(word) != 0; }
    std::size_t size() const { return words_.size(); }

private:
    std::unordered_set<std::string> words_;
};

// Splits on any non-alphabetic character and lowercases. Output tokens are
// non-empty, appearance-ordered, duplicates preserved. Digits and non-ASCII
// bytes act as separators.
std::vector<std::string> tokenize(std::string_view text);

// Strips one trailing 's' when the token ends in 's' and has length >= 3
// ("trees" -> "tree", "analysis" -> "analysi"); identity otherwise.
std::string normalize(std::string token);

// Tokenize, drop stopwords, normalize, then keep the normalized words whose
// in-document frequency reaches min_doc_freq. Returns a sorted distinct set.
KeywordSet extract_keywords(const RawDocument& doc, const StopwordList& stops, int min_doc_freq);

} // namespace atc

#endif
