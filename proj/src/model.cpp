#include "atc/model.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <set>
#include <stdexcept>

#include <json.hpp>

#include "atc/errors.hpp"

namespace atc {

namespace {

constexpr int kModelFormatVersion = 1;

ClassLabel pick_argmax(const std::vector<ClassLabel>& classes,
                       const std::map<ClassLabel, double>& probs) {
    ClassLabel best;
    double best_prob = -1.0;
    for (const auto& c : classes) {
        const double prob = probs.at(c);
        if (prob > best_prob) { // strict: ties keep the earliest class
            best_prob = prob;
            best = c;
        }
    }
    return best;
}

void validate_table(const ProbabilityTable& table) {
    if (table.classes.empty())
        throw ValidationError("model has no classes");
    std::set<ClassLabel> seen;
    for (const auto& c : table.classes) {
        if (c.empty())
            throw ValidationError("model has an empty class label");
        if (!seen.insert(c).second)
            throw ValidationError("duplicate class label: " + c);
    }
    if (table.total_sets == 0)
        throw ValidationError("model has no feature sets");
    if (table.features.size() != table.total_sets)
        throw ValidationError("total_sets does not match the number of features");

    std::size_t sum_sets = 0;
    double sum_priors = 0.0;
    for (const auto& c : table.classes) {
        auto sit = table.sets_per_class.find(c);
        auto pit = table.priors.find(c);
        if (sit == table.sets_per_class.end() || pit == table.priors.end())
            throw ValidationError("missing per-class entry for class: " + c);
        sum_sets += sit->second;
        sum_priors += pit->second;
        const double expected =
            static_cast<double>(sit->second) / static_cast<double>(table.total_sets);
        if (std::abs(pit->second - expected) > 1e-9)
            throw ValidationError("prior for class " + c + " does not match its set fraction");
    }
    if (sum_sets != table.total_sets)
        throw ValidationError("sets_per_class does not sum to total_sets");
    if (std::abs(sum_priors - 1.0) > 1e-9)
        throw ValidationError("priors do not sum to 1");

    for (const auto& f : table.features) {
        if (f.items.empty())
            throw ValidationError("feature set with no items");
        if (!std::is_sorted(f.items.begin(), f.items.end()) ||
            std::adjacent_find(f.items.begin(), f.items.end()) != f.items.end())
            throw ValidationError("feature items not sorted and distinct: " + join_items(f.items));
        if (!seen.count(f.origin_class))
            throw ValidationError("feature with unknown origin class: " + f.origin_class);
        for (const auto& c : table.classes) {
            auto pit = f.prob_by_class.find(c);
            if (f.counts_by_class.find(c) == f.counts_by_class.end() ||
                pit == f.prob_by_class.end())
                throw ValidationError("feature missing per-class entry for class: " + c);
            if (!(pit->second > 0.0))
                throw ValidationError("feature probability must be positive");
        }
        if (f.argmax_class != pick_argmax(table.classes, f.prob_by_class))
            throw ValidationError("feature argmax_class is inconsistent with its probabilities");
    }
}

} // namespace

std::size_t ProbabilityTable::class_index(const ClassLabel& label) const {
    auto it = std::find(classes.begin(), classes.end(), label);
    if (it == classes.end())
        throw std::invalid_argument("unknown class label: " + label);
    return static_cast<std::size_t>(it - classes.begin());
}

std::map<ClassLabel, std::vector<Itemset>> mine_class_features(
    const std::map<ClassLabel, std::vector<KeywordSet>>& docs_by_class, double min_support) {
    std::map<ClassLabel, std::vector<Itemset>> mined;
    for (const auto& [label, docs] : docs_by_class) {
        if (docs.empty())
            throw EmptyInputError("class '" + label + "' has no documents");
        std::vector<Transaction> transactions;
        transactions.reserve(docs.size());
        for (std::size_t i = 0; i < docs.size(); ++i)
            transactions.push_back(Transaction{std::to_string(i), docs[i]});

        auto levels = find_frequent_itemsets(transactions, min_support);
        std::vector<Itemset> sets;
        for (auto& s : maximal_itemsets(levels))
            if (s.items.size() >= 2) // singletons carry no word association
                sets.push_back(std::move(s));
        mined.emplace(label, std::move(sets));
    }
    return mined;
}

std::map<ClassLabel, double> compute_priors(const std::map<ClassLabel, std::size_t>& sets_per_class,
                                            std::size_t total_sets) {
    if (total_sets == 0)
        throw EmptyInputError("cannot compute priors over zero sets");
    std::map<ClassLabel, double> priors;
    for (const auto& [label, count] : sets_per_class)
        priors[label] = static_cast<double>(count) / static_cast<double>(total_sets);
    return priors;
}

double set_probability(std::size_t count, std::size_t class_set_count, std::size_t total_sets) {
    if (total_sets < 1)
        throw std::invalid_argument("total_sets must be >= 1");
    return static_cast<double>(count + 1) / static_cast<double>(class_set_count + total_sets);
}

ProbabilityTable build_probability_table(const std::map<ClassLabel, std::vector<Itemset>>& mined,
                                         const ModelConfig& config) {
    ProbabilityTable table;
    table.config = config;
    for (const auto& [label, sets] : mined) {
        table.classes.push_back(label);
        table.sets_per_class[label] = sets.size();
        table.total_sets += sets.size();
    }
    if (table.total_sets == 0)
        throw EmptyInputError("no feature sets were mined in any class");
    table.priors = compute_priors(table.sets_per_class, table.total_sets);

    for (const auto& origin : table.classes) {
        std::vector<Itemset> sets = mined.at(origin);
        std::sort(sets.begin(), sets.end(),
                  [](const Itemset& a, const Itemset& b) { return a.items < b.items; });
        for (const auto& s : sets) {
            FeatureSet f;
            f.items = s.items;
            f.origin_class = origin;
            for (const auto& c : table.classes) {
                const std::size_t count = (c == origin) ? s.count : 0;
                f.counts_by_class[c] = count;
                f.prob_by_class[c] =
                    set_probability(count, table.sets_per_class.at(c), table.total_sets);
            }
            f.argmax_class = pick_argmax(table.classes, f.prob_by_class);
            table.features.push_back(std::move(f));
        }
    }
    return table;
}

std::string serialize_model(const ProbabilityTable& table) {
    nlohmann::ordered_json j;
    j["version"] = kModelFormatVersion;
    j["classes"] = table.classes;
    j["priors"] = table.priors;
    j["sets_per_class"] = table.sets_per_class;
    j["total_sets"] = table.total_sets;
    j["config"] = {{"min_support", table.config.min_support},
                   {"min_confidence", table.config.min_confidence},
                   {"min_doc_freq", table.config.min_doc_freq},
                   {"match_threshold", table.config.match_threshold}};
    auto& features = j["features"] = nlohmann::ordered_json::array();
    for (const auto& f : table.features) {
        features.push_back({{"items", f.items},
                            {"origin_class", f.origin_class},
                            {"counts_by_class", f.counts_by_class},
                            {"prob_by_class", f.prob_by_class},
                            {"argmax_class", f.argmax_class}});
    }
    return j.dump(2) + "\n";
}

ProbabilityTable deserialize_model(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("model is not valid JSON: ") + e.what());
    }

    try {
        if (!j.is_object() || !j.contains("version"))
            throw ParseError("model file has no version field");
        if (!j["version"].is_number_integer() ||
            j["version"].get<int>() != kModelFormatVersion)
            throw VersionError("unsupported model format version: " + j["version"].dump() +
                               " (expected " + std::to_string(kModelFormatVersion) + ")");

        ProbabilityTable table;
        table.classes = j.at("classes").get<std::vector<ClassLabel>>();
        table.priors = j.at("priors").get<std::map<ClassLabel, double>>();
        table.sets_per_class = j.at("sets_per_class").get<std::map<ClassLabel, std::size_t>>();
        table.total_sets = j.at("total_sets").get<std::size_t>();
        const auto& config = j.at("config");
        table.config.min_support = config.at("min_support").get<double>();
        table.config.min_confidence = config.at("min_confidence").get<double>();
        table.config.min_doc_freq = config.at("min_doc_freq").get<int>();
        table.config.match_threshold = config.at("match_threshold").get<double>();
        for (const auto& jf : j.at("features")) {
            FeatureSet f;
            f.items = jf.at("items").get<ItemVec>();
            f.origin_class = jf.at("origin_class").get<ClassLabel>();
            f.counts_by_class = jf.at("counts_by_class").get<std::map<ClassLabel, std::size_t>>();
            f.prob_by_class = jf.at("prob_by_class").get<std::map<ClassLabel, double>>();
            f.argmax_class = jf.at("argmax_class").get<ClassLabel>();
            table.features.push_back(std::move(f));
        }
        validate_table(table);
        return table;
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("model JSON has an unexpected shape: ") + e.what());
    }
}

void save_model(const ProbabilityTable& table, const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw IoError("cannot open model file for writing: " + path.string());
    out << serialize_model(table);
    if (!out)
        throw IoError("failed writing model file: " + path.string());
}

ProbabilityTable load_model(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw IoError("cannot open model file: " + path.string());
    std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    return deserialize_model(text);
}

} // namespace atc
