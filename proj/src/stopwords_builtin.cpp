#include "atc/textprep.hpp"

namespace atc {

namespace {

// English function words: articles and determiners, prepositions,
// conjunctions, pronouns, auxiliary and modal verbs, quantifiers, a handful
// of adverbial particles, and the single letters (math symbols, initials).
// Content words stay out, however common.
const char* const kBuiltinStopwords[] = {
    // single letters
    "a", "b", "c", "d", "e", "f", "g", "h", "i", "j", "k", "l", "m",
    "n", "o", "p", "q", "r", "s", "t", "u", "v", "w", "x", "y", "z",
    // articles and determiners
    "the", "an", "this", "that", "these", "those",
    "each", "every", "all", "any", "some", "few", "both",
    "either", "neither", "such", "same", "other", "another",
    "much", "many", "more", "most", "several",
    // prepositions
    "of", "in", "to", "for", "with", "on", "at", "by", "from", "as",
    "into", "onto", "upon", "about", "above", "below", "under", "over",
    "between", "among", "through", "during", "before", "after", "since",
    "until", "within", "without", "across", "behind", "beyond", "near",
    "toward", "towards", "against", "along", "around", "off", "out",
    "up", "down", "per", "via", "amid", "despite", "except", "given",
    // conjunctions and connectives
    "and", "or", "but", "nor", "so", "yet", "if", "then", "else",
    "because", "although", "though", "while", "whether", "unless",
    "when", "where", "why", "how",
    // pronouns
    "me", "my", "mine", "myself", "we", "us", "our", "ours", "ourselves",
    "you", "your", "yours", "yourself", "yourselves", "he", "him", "his",
    "himself", "she", "her", "hers", "herself", "it", "its", "itself",
    "they", "them", "their", "theirs", "themselves", "who", "whom",
    "whose", "which", "what",
    // auxiliaries and modals
    "am", "is", "are", "was", "were", "be", "been", "being",
    "have", "has", "had", "having", "do", "does", "did", "doing", "done",
    "will", "would", "shall", "should", "can", "could", "may", "might",
    "must", "ought",
    // negation and common particles
    "not", "no", "here", "there", "also", "only", "just", "very", "too",
    "quite", "rather", "etc",
};

} // namespace

const StopwordList& StopwordList::builtin() {
    static const StopwordList list{
        std::vector<std::string>(std::begin(kBuiltinStopwords), std::end(kBuiltinStopwords))};
    return list;
}

} // namespace atc
