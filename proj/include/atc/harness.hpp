#ifndef ATC_HARNESS_HPP
#define ATC_HARNESS_HPP

#include <cstdint>
#include <filesystem>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "atc/classifier.hpp"
#include "atc/model.hpp"
#include "atc/textprep.hpp"

namespace atc {

struct Corpus {
    std::vector<RawDocument> docs;
    std::vector<ClassLabel> classes; // sorted distinct labels present
    std::size_t skipped_entries = 0; // non-file entries ignored while loading
};

// Directory of class-named subdirectories, one UTF-8 text file per document.
// label = subdirectory name, id = relative path, lexicographic order.
Corpus load_corpus(const std::filesystem::path& root);

// Stratified split: per class, round(train_fraction * class_size) documents,
// clamped to [1, class_size - 1], drawn by a permutation seeded from
// (seed, class label). Returns (train, test).
std::pair<Corpus, Corpus> split_corpus(const Corpus& corpus, double train_fraction,
                                       std::uint64_t seed);

struct EvalReport {
    struct ClassCounts {
        std::size_t tested = 0;
        std::size_t correct = 0;
    };
    std::map<ClassLabel, ClassCounts> per_class;
    std::size_t total_tested = 0;
    std::size_t total_correct = 0;
    double accuracy_percent = 0.0;
};

EvalReport evaluate(const ProbabilityTable& table, const Corpus& test, const StopwordList& stops);

struct SweepRow {
    double train_fraction = 0.0;
    double accuracy_percent = 0.0;
};

// For each fraction: split, train, evaluate. Rows come back in input order.
std::vector<SweepRow> sweep(const Corpus& corpus, const std::vector<double>& fractions,
                            std::uint64_t seed, const ModelConfig& config,
                            const StopwordList& stops);

// Extract keywords per document, group by label, mine, build the table.
ProbabilityTable train_model(const Corpus& corpus, const StopwordList& stops,
                             const ModelConfig& config);

std::string format_eval_text(const EvalReport& report);
std::string format_eval_csv(const EvalReport& report);
std::string format_sweep_text(const std::vector<SweepRow>& rows, std::uint64_t seed);
std::string format_sweep_csv(const std::vector<SweepRow>& rows);

} // namespace atc

#endif
