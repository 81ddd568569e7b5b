#include "atc/harness.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>

#include "atc/errors.hpp"
#include "atc/util.hpp"

namespace fs = std::filesystem;

namespace atc {

namespace {

std::string read_text_file(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw IoError("cannot read document: " + path.string());
    std::ostringstream buffer;
    buffer << in.rdbuf();
    if (in.bad())
        throw IoError("failed reading document: " + path.string());
    return buffer.str();
}

// Deterministic seed per (seed, class label); FNV-1a keeps it stable across
// platforms, unlike std::hash.
std::uint64_t class_seed(std::uint64_t seed, const ClassLabel& label) {
    std::uint64_t h = 14695981039346656037ULL ^ seed;
    for (unsigned char c : label) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    return h;
}

} // namespace

Corpus load_corpus(const fs::path& root) {
    if (!fs::exists(root) || !fs::is_directory(root))
        throw IoError("corpus root is not a directory: " + root.string());

    Corpus corpus;
    std::vector<fs::path> class_dirs;
    for (const auto& entry : fs::directory_iterator(root)) {
        if (entry.is_directory())
            class_dirs.push_back(entry.path());
        else
            ++corpus.skipped_entries;
    }
    std::sort(class_dirs.begin(), class_dirs.end());
    if (class_dirs.empty())
        throw EmptyInputError("corpus root has no class directories: " + root.string());

    for (const auto& dir : class_dirs) {
        const std::string label = dir.filename().string();
        std::vector<fs::path> files;
        for (const auto& entry : fs::directory_iterator(dir)) {
            if (entry.is_regular_file())
                files.push_back(entry.path());
            else
                ++corpus.skipped_entries;
        }
        std::sort(files.begin(), files.end());
        if (files.empty())
            throw EmptyInputError("class directory has no documents: " + dir.string());
        for (const auto& file : files) {
            RawDocument doc;
            doc.id = fs::relative(file, root).generic_string();
            doc.label = label;
            doc.text = read_text_file(file);
            corpus.docs.push_back(std::move(doc));
        }
        corpus.classes.push_back(label);
    }
    return corpus;
}

std::pair<Corpus, Corpus> split_corpus(const Corpus& corpus, double train_fraction,
                                       std::uint64_t seed) {
    if (!(train_fraction > 0.0) || !(train_fraction < 1.0))
        throw std::invalid_argument("train_fraction must be in (0, 1)");

    Corpus train, test;
    train.classes = corpus.classes;
    test.classes = corpus.classes;

    for (const auto& label : corpus.classes) {
        std::vector<std::size_t> indices;
        for (std::size_t i = 0; i < corpus.docs.size(); ++i)
            if (corpus.docs[i].label == label)
                indices.push_back(i);
        if (indices.size() < 2)
            throw EmptyInputError("class '" + label + "' has fewer than 2 documents; cannot split");

        // Fisher-Yates with explicit draws so the permutation is identical
        // on every platform.
        std::mt19937_64 rng(class_seed(seed, label));
        for (std::size_t i = indices.size() - 1; i > 0; --i) {
            const std::size_t j = static_cast<std::size_t>(rng() % (i + 1));
            std::swap(indices[i], indices[j]);
        }

        auto want = static_cast<std::size_t>(
            std::llround(train_fraction * static_cast<double>(indices.size())));
        want = std::clamp<std::size_t>(want, 1, indices.size() - 1);

        std::vector<std::size_t> train_idx(indices.begin(), indices.begin() + want);
        std::vector<std::size_t> test_idx(indices.begin() + want, indices.end());
        std::sort(train_idx.begin(), train_idx.end());
        std::sort(test_idx.begin(), test_idx.end());
        for (auto i : train_idx)
            train.docs.push_back(corpus.docs[i]);
        for (auto i : test_idx)
            test.docs.push_back(corpus.docs[i]);
    }
    return {std::move(train), std::move(test)};
}

ProbabilityTable train_model(const Corpus& corpus, const StopwordList& stops,
                             const ModelConfig& config) {
    std::map<ClassLabel, std::vector<KeywordSet>> docs_by_class;
    for (const auto& doc : corpus.docs) {
        if (doc.label.empty())
            throw ValidationError("training document without a label: " + doc.id);
        docs_by_class[doc.label].push_back(extract_keywords(doc, stops, config.min_doc_freq));
    }
    if (docs_by_class.empty())
        throw EmptyInputError("training corpus has no documents");
    auto mined = mine_class_features(docs_by_class, config.min_support);
    return build_probability_table(mined, config);
}

EvalReport evaluate(const ProbabilityTable& table, const Corpus& test, const StopwordList& stops) {
    if (test.docs.empty())
        throw EmptyInputError("test corpus has no documents");

    EvalReport report;
    for (const auto& label : test.classes)
        report.per_class[label];
    for (const auto& doc : test.docs) {
        auto prediction = classify_document(doc, table, stops);
        auto& counts = report.per_class[doc.label];
        ++counts.tested;
        ++report.total_tested;
        if (prediction.label == doc.label) {
            ++counts.correct;
            ++report.total_correct;
        }
    }
    report.accuracy_percent =
        100.0 * static_cast<double>(report.total_correct) / static_cast<double>(report.total_tested);
    return report;
}

std::vector<SweepRow> sweep(const Corpus& corpus, const std::vector<double>& fractions,
                            std::uint64_t seed, const ModelConfig& config,
                            const StopwordList& stops) {
    std::vector<SweepRow> rows;
    rows.reserve(fractions.size());
    for (double fraction : fractions) {
        auto [train, test] = split_corpus(corpus, fraction, seed);
        auto table = train_model(train, stops, config);
        auto report = evaluate(table, test, stops);
        rows.push_back(SweepRow{fraction, report.accuracy_percent});
    }
    return rows;
}

std::string format_eval_text(const EvalReport& report) {
    std::ostringstream out;
    out << "class\ttested\tcorrect\taccuracy%\n";
    for (const auto& [label, counts] : report.per_class) {
        const double accuracy =
            counts.tested == 0
                ? 0.0
                : 100.0 * static_cast<double>(counts.correct) / static_cast<double>(counts.tested);
        out << label << '\t' << counts.tested << '\t' << counts.correct << '\t' << g6(accuracy)
            << '\n';
    }
    out << "total\t" << report.total_tested << '\t' << report.total_correct << '\t'
        << g6(report.accuracy_percent) << '\n';
    return out.str();
}

std::string format_eval_csv(const EvalReport& report) {
    std::ostringstream out;
    out << "class,tested,correct\n";
    for (const auto& [label, counts] : report.per_class)
        out << label << ',' << counts.tested << ',' << counts.correct << '\n';
    out << "total," << report.total_tested << ',' << report.total_correct << '\n';
    return out.str();
}

std::string format_sweep_text(const std::vector<SweepRow>& rows, std::uint64_t seed) {
    std::ostringstream out;
    out << "train_fraction\taccuracy%\t(seed " << seed << ")\n";
    for (const auto& row : rows)
        out << g6(row.train_fraction) << '\t' << g6(row.accuracy_percent) << '\n';
    return out.str();
}

std::string format_sweep_csv(const std::vector<SweepRow>& rows) {
    std::ostringstream out;
    out << "train_fraction,accuracy_percent\n";
    for (const auto& row : rows)
        out << g6(row.train_fraction) << ',' << g6(row.accuracy_percent) << '\n';
    return out.str();
}

} // namespace atc
