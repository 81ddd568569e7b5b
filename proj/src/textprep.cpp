#include "atc/textprep.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <map>
#include <stdexcept>

#include "atc/errors.hpp"

namespace atc {

namespace {

bool is_ascii_alpha(unsigned char c) {
    return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z');
}

std::string lowercase(std::string s) {
    std::transform(s.begin(), s.end(), s.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    return s;
}

void trim(std::string& s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
        s.pop_back();
    std::size_t i = 0;
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i])))
        ++i;
    if (i > 0)
        s.erase(0, i);
}

} // namespace

StopwordList::StopwordList(const std::vector<std::string>& words) {
    for (const auto& w : words)
        words_.insert(lowercase(w));
}

StopwordList StopwordList::from_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in)
        throw IoError("cannot open stopword file: " + path.string());
    StopwordList list;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        trim(line);
        if (line.empty() || line[0] == '#')
            continue;
        if (line.find_first_of(" \t") != std::string::npos)
            throw ParseError("stopword file " + path.string() + ": whitespace inside entry at line " +
                             std::to_string(lineno));
        list.words_.insert(lowercase(line));
    }
    return list;
}

std::vector<std::string> tokenize(std::string_view text) {
    std::vector<std::string> tokens;
    std::string current;
    for (unsigned char c : text) {
        if (is_ascii_alpha(c)) {
            current.push_back(static_cast<char>(std::tolower(c)));
        } else if (!current.empty()) {
            tokens.push_back(std::move(current));
            current.clear();
        }
    }
    if (!current.empty())
        tokens.push_back(std::move(current));
    return tokens;
}

std::string normalize(std::string token) {
    if (token.size() >= 3 && token.back() == 's')
        token.pop_back();
    return token;
}

KeywordSet extract_keywords(const RawDocument& doc, const StopwordList& stops, int min_doc_freq) {
    if (min_doc_freq < 1)
        throw std::invalid_argument("min_doc_freq must be >= 1");

    // Stopwords are filtered both before and after normalization so that no
    // stopword can reach the output through a stripped plural.
    std::map<std::string, int> freq;
    for (auto& token : tokenize(doc.text)) {
        if (stops.contains(token))
            continue;
        std::string word = normalize(std::move(token));
        if (stops.contains(word))
            continue;
        ++freq[word];
    }

    KeywordSet keywords;
    for (const auto& [word, count] : freq)
        if (count >= min_doc_freq)
            keywords.push_back(word);
    return keywords; // std::map iteration keeps this sorted and distinct
}

} // namespace atc
