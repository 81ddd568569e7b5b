#include "atc/classifier.hpp"

#include <algorithm>
#include <stdexcept>

#include "atc/errors.hpp"

namespace atc {

double match_fraction(const ItemVec& set_items, const KeywordSet& keywords) {
    if (set_items.empty())
        throw std::invalid_argument("match_fraction needs a non-empty set");
    std::size_t hits = 0;
    // both sides sorted
    auto kit = keywords.begin();
    for (const auto& item : set_items) {
        kit = std::lower_bound(kit, keywords.end(), item);
        if (kit == keywords.end())
            break;
        if (*kit == item)
            ++hits;
    }
    return static_cast<double>(hits) / static_cast<double>(set_items.size());
}

double score_from_counts(std::size_t p, std::size_t pval, std::size_t n, std::size_t nval,
                         double prior) {
    const double positive =
        pval == 0 ? 0.0 : 100.0 * static_cast<double>(p) / static_cast<double>(pval);
    const double negative =
        nval == 0 ? 100.0 : 100.0 * static_cast<double>(n) / static_cast<double>(nval);
    return positive + negative + prior;
}

ClassScore score_class(const ClassLabel& label, const ProbabilityTable& table,
                       const KeywordSet& keywords) {
    table.class_index(label); // throws on unknown label

    ClassScore score;
    score.label = label;
    for (const auto& f : table.features) {
        const bool positive = f.argmax_class == label;
        const bool matched = match_fraction(f.items, keywords) >= table.config.match_threshold;
        if (positive) {
            ++score.pval;
            if (matched)
                ++score.p;
        } else {
            ++score.nval;
            if (!matched)
                ++score.n;
        }
    }
    score.score = score_from_counts(score.p, score.pval, score.n, score.nval,
                                    table.priors.at(label));
    return score;
}

Prediction classify(const KeywordSet& keywords, const ProbabilityTable& table) {
    if (table.classes.empty())
        throw EmptyInputError("model has no classes");
    if (table.features.empty())
        throw EmptyInputError("model has no feature sets");

    Prediction prediction;
    prediction.scores.reserve(table.classes.size());
    for (const auto& label : table.classes)
        prediction.scores.push_back(score_class(label, table, keywords));

    const ClassScore* best = &prediction.scores.front();
    for (const auto& s : prediction.scores)
        if (s.score > best->score) // strict: ties keep the earliest class
            best = &s;
    prediction.label = best->label;
    return prediction;
}

Prediction classify_document(const RawDocument& doc, const ProbabilityTable& table,
                             const StopwordList& stops) {
    return classify(extract_keywords(doc, stops, table.config.min_doc_freq), table);
}

} // namespace atc
