#ifndef ATC_CLASSIFIER_HPP
#define ATC_CLASSIFIER_HPP

#include <cstddef>

#include "atc/model.hpp"
#include "atc/textprep.hpp"

namespace atc {

// Positive/negative matched-set tallies for one class.
//   pval  sets whose argmax class is this class
//   nval  the remaining sets
//   p     positive sets matched by the keywords
//   n     negative sets NOT matched by the keywords
struct ClassScore {
    ClassLabel label;
    std::size_t pval = 0;
    std::size_t nval = 0;
    std::size_t p = 0;
    std::size_t n = 0;
    double score = 0.0;
};

struct Prediction {
    ClassLabel label;
    std::vector<ClassScore> scores; // one per class, in table class order
};

// |set_items intersect keywords| / |set_items|. A set counts as matched when
// this reaches the model's match_threshold (inclusive).
double match_fraction(const ItemVec& set_items, const KeywordSet& keywords);

// 100*p/pval + 100*n/nval + prior, with the vacuous conventions: pval = 0
// contributes 0 and nval = 0 contributes 100.
double score_from_counts(std::size_t p, std::size_t pval, std::size_t n, std::size_t nval,
                         double prior);

ClassScore score_class(const ClassLabel& label, const ProbabilityTable& table,
                       const KeywordSet& keywords);

// Scores every class and picks the maximum; ties go to the earliest class.
Prediction classify(const KeywordSet& keywords, const ProbabilityTable& table);

// extract_keywords with the table's min_doc_freq, then classify.
Prediction classify_document(const RawDocument& doc, const ProbabilityTable& table,
                             const StopwordList& stops);

} // namespace atc

#endif
