#ifndef ATC_MODEL_HPP
#define ATC_MODEL_HPP

#include <cstddef>
#include <filesystem>
#include <map>
#include <string>
#include <vector>

#include "atc/itemsets.hpp"
#include "atc/textprep.hpp"

namespace atc {

using ClassLabel = std::string;

struct ModelConfig {
    double min_support = 0.05;
    double min_confidence = 0.75;
    int min_doc_freq = 2;
    double match_threshold = 0.5;
};

// One mined word-set with its per-class occurrence counts and smoothed
// per-class probabilities. A set mined from class c counts 0 everywhere else.
struct FeatureSet {
    ItemVec items;
    ClassLabel origin_class;
    std::map<ClassLabel, std::size_t> counts_by_class;
    std::map<ClassLabel, double> prob_by_class;
    ClassLabel argmax_class;
};

struct ProbabilityTable {
    std::vector<ClassLabel> classes; // declared order; ties resolve to the earliest
    std::map<ClassLabel, double> priors;
    std::map<ClassLabel, std::size_t> sets_per_class;
    std::size_t total_sets = 0;
    std::vector<FeatureSet> features;
    ModelConfig config;

    std::size_t class_index(const ClassLabel& label) const; // throws on unknown label
};

// Per class: mine that class's keyword sets as transactions, keep the maximal
// frequent itemsets with their in-class counts, and discard singletons.
std::map<ClassLabel, std::vector<Itemset>> mine_class_features(
    const std::map<ClassLabel, std::vector<KeywordSet>>& docs_by_class, double min_support);

// prior[c] = sets_per_class[c] / total_sets.
std::map<ClassLabel, double> compute_priors(const std::map<ClassLabel, std::size_t>& sets_per_class,
                                            std::size_t total_sets);

// Smoothed estimate (count + 1) / (class_set_count + total_sets).
double set_probability(std::size_t count, std::size_t class_set_count, std::size_t total_sets);

ProbabilityTable build_probability_table(const std::map<ClassLabel, std::vector<Itemset>>& mined,
                                         const ModelConfig& config);

// JSON, format version 1. Load distinguishes version, parse and validation
// failures; a round trip reproduces the table bit-for-bit.
void save_model(const ProbabilityTable& table, const std::filesystem::path& path);
ProbabilityTable load_model(const std::filesystem::path& path);

// In-memory counterparts of save/load, shared by the file functions.
std::string serialize_model(const ProbabilityTable& table);
ProbabilityTable deserialize_model(const std::string& text);

} // namespace atc

#endif
