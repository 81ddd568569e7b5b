// Shared test data: the classic 9-transaction example database, the
// five-class word-set table with occurrence counts, and a synthetic
// separable-corpus builder.
#ifndef ATC_TESTS_FIXTURES_HPP
#define ATC_TESTS_FIXTURES_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "atc/harness.hpp"
#include "atc/itemsets.hpp"
#include "atc/model.hpp"

namespace fixtures {

inline std::vector<atc::Transaction> fig1_transactions() {
    return {
        {"T100", {"I1", "I2", "I5"}},
        {"T200", {"I2", "I4"}},
        {"T300", {"I2", "I3"}},
        {"T400", {"I1", "I2", "I4"}},
        {"T500", {"I1", "I3"}},
        {"T600", {"I2", "I3"}},
        {"T700", {"I1", "I3"}},
        {"T800", {"I1", "I2", "I3", "I5"}},
        {"T900", {"I1", "I2", "I3"}},
    };
}

inline std::vector<atc::Itemset> fig1_l1() {
    return {{{"I1"}, 6}, {{"I2"}, 7}, {{"I3"}, 6}, {{"I4"}, 2}, {{"I5"}, 2}};
}

inline std::vector<atc::Itemset> fig1_l2() {
    return {{{"I1", "I2"}, 4}, {{"I1", "I3"}, 4}, {{"I1", "I5"}, 2},
            {{"I2", "I3"}, 4}, {{"I2", "I4"}, 2}, {{"I2", "I5"}, 2}};
}

inline std::vector<atc::Itemset> fig1_l3() {
    return {{{"I1", "I2", "I3"}, 2}, {{"I1", "I2", "I5"}, 2}};
}

struct WordSetRow {
    atc::ItemVec items; // sorted
    atc::ClassLabel cls;
    std::size_t count;
};

// The 69 mined word sets of the five-class training run, with their
// in-class occurrence counts. Class totals: PH 18, CH 25, ALG 5, EDE 9, AI 12.
inline std::vector<WordSetRow> word_set_rows() {
    auto set = [](std::vector<std::string> items) {
        std::sort(items.begin(), items.end());
        return items;
    };
    std::vector<WordSetRow> rows;
    // ALG
    rows.push_back({set({"present", "well", "formed", "parenthese", "looples"}), "ALG", 2});
    rows.push_back({set({"spanning", "tree"}), "ALG", 2});
    rows.push_back({set({"set", "length"}), "ALG", 2});
    rows.push_back({set({"huffman", "coding"}), "ALG", 2});
    rows.push_back({set({"generating", "gray", "code"}), "ALG", 3});
    // EDE
    rows.push_back({set({"educational", "significant", "study", "education", "level", "student",
                         "learning"}),
                    "EDE", 3});
    rows.push_back({set({"handicapped", "more", "different", "environment", "effect", "working",
                         "motivation"}),
                    "EDE", 2});
    rows.push_back({set({"difference", "study"}), "EDE", 3});
    rows.push_back({set({"test", "significant", "difference"}), "EDE", 2});
    rows.push_back({set({"educational", "significant", "study", "teacher"}), "EDE", 3});
    rows.push_back({set({"teacher", "significant", "study", "student"}), "EDE", 3});
    rows.push_back({set({"education", "level", "significant", "difference"}), "EDE", 3});
    rows.push_back({set({"school", "teacher", "education", "level", "significant"}), "EDE", 3});
    rows.push_back({set({"respect", "job", "level", "significant", "difference"}), "EDE", 2});
    // AI
    rows.push_back({set({"three", "coding", "ezw", "dimension", "performance", "lossy", "compared",
                         "progressive"}),
                    "AI", 2});
    rows.push_back({set({"gain", "dependencie"}), "AI", 2});
    rows.push_back({set({"network", "neural"}), "AI", 5});
    rows.push_back({set({"channel", "rate"}), "AI", 2});
    rows.push_back({set({"rate", "different"}), "AI", 3});
    rows.push_back({set({"allocation", "different"}), "AI", 2});
    rows.push_back({set({"proposed", "different"}), "AI", 2});
    rows.push_back({set({"compression", "progressive", "method"}), "AI", 3});
    rows.push_back({set({"wavelet", "imagery", "decoding", "pixel"}), "AI", 3});
    rows.push_back({set({"transform", "imagery", "decoding", "pixel"}), "AI", 2});
    rows.push_back({set({"communication", "video", "coder", "constant", "quality"}), "AI", 2});
    rows.push_back({set({"lossles", "image", "compression", "performance", "lossy",
                         "progressive"}),
                    "AI", 3});
    // PH
    rows.push_back({set({"even", "number", "spin", "state"}), "PH", 2});
    rows.push_back({set({"flow", "black", "hole", "thermal"}), "PH", 3});
    rows.push_back({set({"ground", "dot"}), "PH", 2});
    rows.push_back({set({"neutron", "star"}), "PH", 3});
    rows.push_back({set({"time", "alpha"}), "PH", 3});
    rows.push_back({set({"variation", "line"}), "PH", 2});
    rows.push_back({set({"analysi", "high"}), "PH", 2});
    rows.push_back({set({"main", "sequence"}), "PH", 2});
    rows.push_back({set({"quasar", "luminosity"}), "PH", 3});
    rows.push_back({set({"above", "luminosity"}), "PH", 2});
    rows.push_back({set({"consistent", "propertie"}), "PH", 2});
    rows.push_back({set({"binary", "mas"}), "PH", 2});
    rows.push_back({set({"microlensing", "caustic"}), "PH", 2});
    rows.push_back({set({"velocity", "seen"}), "PH", 2});
    rows.push_back({set({"cold", "dark"}), "PH", 2});
    rows.push_back({set({"obtained", "alpha", "line"}), "PH", 2});
    rows.push_back({set({"nuclear", "collapse", "simulation"}), "PH", 2});
    rows.push_back({set({"giant", "planet", "due"}), "PH", 2});
    // CH
    rows.push_back({set({"calculate", "raman", "response", "fifth", "order"}), "CH", 2});
    rows.push_back({set({"scalar", "included", "approximation", "dielectric", "function"}), "CH",
                    2});
    rows.push_back({set({"dirac", "fock"}), "CH", 2});
    rows.push_back({set({"hartree", "fock"}), "CH", 3});
    rows.push_back({set({"excited", "using"}), "CH", 3});
    rows.push_back({set({"site", "ion"}), "CH", 2});
    rows.push_back({set({"geometry", "simulation"}), "CH", 3});
    rows.push_back({set({"hyperpolarizability", "second"}), "CH", 4});
    rows.push_back({set({"carbon", "nanotube"}), "CH", 3});
    rows.push_back({set({"strong", "laser"}), "CH", 2});
    rows.push_back({set({"many", "body"}), "CH", 2});
    rows.push_back({set({"third", "fifth", "order"}), "CH", 3});
    rows.push_back({set({"third", "order", "calculated"}), "CH", 3});
    rows.push_back({set({"hydrogen", "model", "agreement"}), "CH", 2});
    rows.push_back({set({"quadrupole", "moment", "accurate"}), "CH", 2});
    rows.push_back({set({"triplet", "mode", "geometry"}), "CH", 2});
    rows.push_back({set({"polarization", "solvent", "charge"}), "CH", 2});
    rows.push_back({set({"local", "exchange", "current"}), "CH", 3});
    rows.push_back({set({"frequency", "classical", "water"}), "CH", 2});
    rows.push_back({set({"raman", "response", "third", "order"}), "CH", 3});
    rows.push_back({set({"raman", "response", "order", "effect"}), "CH", 3});
    rows.push_back({set({"electronic", "state", "interest", "transition"}), "CH", 2});
    rows.push_back({set({"kohn", "vignale", "within", "local"}), "CH", 3});
    rows.push_back({set({"describe", "exchange", "current", "vignale"}), "CH", 2});
    rows.push_back({set({"rev", "lett", "van", "improvement"}), "CH", 2});
    return rows;
}

inline std::map<atc::ClassLabel, std::vector<atc::Itemset>> word_set_mined() {
    std::map<atc::ClassLabel, std::vector<atc::Itemset>> mined;
    for (const auto& row : word_set_rows())
        mined[row.cls].push_back(atc::Itemset{row.items, row.count});
    return mined;
}

inline atc::ProbabilityTable word_set_table() {
    return atc::build_probability_table(word_set_mined(), atc::ModelConfig{});
}

// A corpus whose classes use disjoint vocabularies: every document carries its
// class's two core words plus two document-specific words, each written twice
// so the default min_doc_freq keeps them.
inline atc::Corpus make_separable_corpus(std::size_t n_classes, std::size_t docs_per_class) {
    static const char* const kClassNames[] = {"alpha", "beta", "gamma", "delta", "epsilon"};
    auto letters = [](std::size_t n) {
        std::string s;
        do {
            s.insert(s.begin(), static_cast<char>('a' + n % 26));
            n /= 26;
        } while (n > 0);
        return s;
    };

    atc::Corpus corpus;
    for (std::size_t c = 0; c < n_classes; ++c) {
        const std::string label = kClassNames[c];
        for (std::size_t d = 0; d < docs_per_class; ++d) {
            const std::string core_a = label + "corea";
            const std::string core_b = label + "coreb";
            const std::string own_a = label + "doc" + letters(d) + "x";
            const std::string own_b = label + "doc" + letters(d) + "y";
            atc::RawDocument doc;
            doc.id = label + "/" + letters(d);
            doc.label = label;
            for (const auto& w : {core_a, core_b, own_a, own_b})
                doc.text += w + " " + w + ". ";
            corpus.docs.push_back(std::move(doc));
        }
        corpus.classes.push_back(label);
    }
    std::sort(corpus.classes.begin(), corpus.classes.end());
    std::sort(corpus.docs.begin(), corpus.docs.end(),
              [](const atc::RawDocument& a, const atc::RawDocument& b) { return a.id < b.id; });
    return corpus;
}

} // namespace fixtures

#endif
