// atc - associative text classification toolkit
//
// Subcommands: mine (frequent itemsets over a transaction file), train
// (build a model from a labeled corpus), classify (label a document),
// evaluate (accuracy report over a labeled corpus), sweep (accuracy vs
// training fraction).
//
// Exit codes: 0 success, 1 empty-input conditions, 2 I/O or format errors.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "atc/classifier.hpp"
#include "atc/errors.hpp"
#include "atc/harness.hpp"
#include "atc/itemsets.hpp"
#include "atc/model.hpp"
#include "atc/textprep.hpp"
#include "atc/util.hpp"

namespace {

atc::StopwordList resolve_stopwords(const std::string& path) {
    if (path.empty())
        return atc::StopwordList::builtin();
    return atc::StopwordList::from_file(path);
}

std::string read_stream(std::istream& in) {
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

struct CountTuple {
    std::size_t p = 0, pval = 0, n = 0, nval = 0;
};

// Format: LABEL=p/pval:n/nval entries joined by commas, one per model class.
std::map<std::string, CountTuple> parse_count_tuples(const std::string& text) {
    std::map<std::string, CountTuple> tuples;
    std::istringstream entries(text);
    std::string entry;
    while (std::getline(entries, entry, ',')) {
        CountTuple t;
        char label[128] = {0};
        unsigned long long p, pval, n, nval;
        if (std::sscanf(entry.c_str(), "%127[^=]=%llu/%llu:%llu/%llu", label, &p, &pval, &n,
                        &nval) != 5)
            throw atc::ParseError("bad count tuple (want LABEL=p/pval:n/nval): " + entry);
        t.p = p;
        t.pval = pval;
        t.n = n;
        t.nval = nval;
        if (!tuples.emplace(label, t).second)
            throw atc::ParseError("duplicate count tuple for class: " + std::string(label));
    }
    if (tuples.empty())
        throw atc::ParseError("empty --scores-from-counts value");
    return tuples;
}

void print_scores(const std::string& predicted, const std::vector<atc::ClassScore>& scores) {
    std::cout << predicted << '\n';
    for (const auto& s : scores)
        std::cout << s.label << '\t' << atc::g6(s.score) << '\t' << s.p << '/' << s.pval << '\t'
                  << s.n << '/' << s.nval << '\n';
}

int run_mine(const std::string& path, double min_support, std::optional<std::size_t> min_count,
             std::optional<double> rules_confidence, bool maximal_only) {
    auto transactions = atc::read_transaction_file(path);
    if (transactions.empty())
        throw atc::EmptyInputError("transaction file has no transactions: " + path);

    auto levels = min_count ? atc::find_frequent_itemsets_count(transactions, *min_count)
                            : atc::find_frequent_itemsets(transactions, min_support);

    if (rules_confidence) {
        for (const auto& rule : atc::generate_rules(levels, *rules_confidence))
            std::cout << atc::join_items(rule.antecedent) << " -> "
                      << atc::join_items(rule.consequent) << '\t' << atc::g6(rule.support) << '\t'
                      << atc::g6(rule.confidence) << '\n';
        return 0;
    }
    if (maximal_only) {
        for (const auto& s : atc::maximal_itemsets(levels))
            std::cout << atc::join_items(s.items) << '\t' << s.count << '\n';
        return 0;
    }
    for (std::size_t k = 1; k <= levels.depth(); ++k)
        for (const auto& s : levels.level(k))
            std::cout << atc::join_items(s.items) << '\t' << s.count << '\n';
    return 0;
}

int run_train(const std::string& corpus_root, const std::string& model_path,
              const atc::ModelConfig& config, const std::string& stopwords_path) {
    auto stops = resolve_stopwords(stopwords_path);
    auto corpus = atc::load_corpus(corpus_root);
    atc::ProbabilityTable table;
    try {
        table = atc::train_model(corpus, stops, config);
    } catch (const atc::EmptyInputError&) {
        std::cerr << "error: no feature sets were mined; try lowering --min-support\n";
        return 1;
    }
    atc::save_model(table, model_path);

    std::cout << "model: " << model_path << '\n';
    std::cout << "classes: " << table.classes.size() << '\n';
    std::cout << "total sets: " << table.total_sets << '\n';
    for (const auto& label : table.classes) {
        std::cout << label << "\tsets=" << table.sets_per_class.at(label) << "\tprior="
                  << atc::g6(table.priors.at(label)) << '\n';
        if (table.sets_per_class.at(label) == 0)
            std::cerr << "warning: class '" << label << "' produced no feature sets\n";
    }
    return 0;
}

int run_classify(const std::string& model_path, const std::string& input_path,
                 const std::string& stopwords_path, const std::string& counts_spec) {
    auto table = atc::load_model(model_path);

    if (!counts_spec.empty()) {
        auto tuples = parse_count_tuples(counts_spec);
        std::vector<atc::ClassScore> scores;
        for (const auto& label : table.classes) {
            auto it = tuples.find(label);
            if (it == tuples.end())
                throw atc::ParseError("missing count tuple for class: " + label);
            const auto& t = it->second;
            atc::ClassScore s;
            s.label = label;
            s.p = t.p;
            s.pval = t.pval;
            s.n = t.n;
            s.nval = t.nval;
            s.score = atc::score_from_counts(t.p, t.pval, t.n, t.nval, table.priors.at(label));
            scores.push_back(std::move(s));
        }
        const atc::ClassScore* best = &scores.front();
        for (const auto& s : scores)
            if (s.score > best->score)
                best = &s;
        print_scores(best->label, scores);
        return 0;
    }

    atc::RawDocument doc;
    if (input_path.empty() || input_path == "-") {
        doc.id = "stdin";
        doc.text = read_stream(std::cin);
    } else {
        std::ifstream in(input_path, std::ios::binary);
        if (!in)
            throw atc::IoError("cannot open input: " + input_path);
        doc.id = input_path;
        doc.text = read_stream(in);
    }
    auto stops = resolve_stopwords(stopwords_path);
    auto prediction = atc::classify_document(doc, table, stops);
    print_scores(prediction.label, prediction.scores);
    return 0;
}

void emit_csv(const std::string& csv, const std::string& csv_path) {
    if (csv_path.empty()) {
        std::cout << '\n' << csv;
        return;
    }
    std::ofstream out(csv_path, std::ios::binary);
    if (!out)
        throw atc::IoError("cannot open CSV output: " + csv_path);
    out << csv;
}

int run_evaluate(const std::string& model_path, const std::string& corpus_root,
                 const std::string& stopwords_path, const std::string& csv_path) {
    auto table = atc::load_model(model_path);
    auto stops = resolve_stopwords(stopwords_path);
    auto corpus = atc::load_corpus(corpus_root);
    auto report = atc::evaluate(table, corpus, stops);
    std::cout << atc::format_eval_text(report);
    if (corpus.skipped_entries > 0)
        std::cout << "skipped entries: " << corpus.skipped_entries << '\n';
    emit_csv(atc::format_eval_csv(report), csv_path);
    return 0;
}

int run_sweep(const std::string& corpus_root, const std::vector<double>& fractions,
              std::uint64_t seed, const atc::ModelConfig& config,
              const std::string& stopwords_path, const std::string& csv_path) {
    auto stops = resolve_stopwords(stopwords_path);
    auto corpus = atc::load_corpus(corpus_root);
    auto rows = atc::sweep(corpus, fractions, seed, config, stops);
    std::cout << atc::format_sweep_text(rows, seed);
    emit_csv(atc::format_sweep_csv(rows), csv_path);
    return 0;
}

int run_app(int argc, char** argv) {
    CLI::App app{"associative text classification toolkit"};
    app.require_subcommand(1);

    atc::ModelConfig config;
    std::string stopwords_path;
    std::uint64_t seed = 42;

    // mine
    auto* mine = app.add_subcommand("mine", "mine frequent itemsets from a transaction file");
    std::string mine_path;
    std::optional<std::size_t> mine_min_count;
    std::optional<double> mine_rules;
    bool mine_maximal = false;
    mine->add_option("transactions", mine_path, "transaction file, one transaction per line")
        ->required();
    mine->add_option("--min-support", config.min_support, "minimum support fraction")
        ->capture_default_str();
    mine->add_option("--min-count", mine_min_count,
                     "minimum support count (overrides --min-support)");
    auto* rules_opt =
        mine->add_option("--rules", mine_rules, "print strong rules at this minimum confidence");
    mine->add_flag("--maximal", mine_maximal, "print only maximal frequent itemsets")
        ->excludes(rules_opt);

    // train
    auto* train = app.add_subcommand("train", "train a model from a labeled corpus directory");
    std::string train_root, train_model_path;
    train->add_option("corpus", train_root, "corpus root with class-named subdirectories")
        ->required();
    train->add_option("--model", train_model_path, "output model file")->required();
    train->add_option("--min-support", config.min_support, "minimum support fraction")
        ->capture_default_str();
    train->add_option("--min-confidence", config.min_confidence, "minimum rule confidence")
        ->capture_default_str();
    train->add_option("--min-doc-freq", config.min_doc_freq, "in-document keyword frequency floor")
        ->capture_default_str();
    train->add_option("--match-threshold", config.match_threshold, "matched-set fraction")
        ->capture_default_str();
    train->add_option("--stopwords", stopwords_path, "stopword file (one word per line)")
        ->envname("ATC_STOPWORDS");

    // classify
    auto* classify = app.add_subcommand("classify", "classify a document against a model");
    std::string classify_model, classify_input, classify_counts;
    classify->add_option("--model", classify_model, "model file")->required();
    classify->add_option("input", classify_input, "document file (default: standard input)");
    classify->add_option("--stopwords", stopwords_path, "stopword file")->envname("ATC_STOPWORDS");
    classify->add_option("--scores-from-counts", classify_counts,
                         "debug: score from LABEL=p/pval:n/nval tuples instead of a document");

    // evaluate
    auto* evaluate = app.add_subcommand("evaluate", "evaluate a model over a labeled corpus");
    std::string eval_model, eval_root, eval_csv;
    evaluate->add_option("--model", eval_model, "model file")->required();
    evaluate->add_option("corpus", eval_root, "labeled test corpus root")->required();
    evaluate->add_option("--stopwords", stopwords_path, "stopword file")->envname("ATC_STOPWORDS");
    evaluate->add_option("--csv", eval_csv, "write the CSV report here instead of stdout");

    // sweep
    auto* sweep = app.add_subcommand("sweep", "accuracy across training fractions");
    std::string sweep_root, sweep_csv;
    std::vector<double> sweep_fractions{0.1, 0.2, 0.3, 0.4, 0.5};
    sweep->add_option("corpus", sweep_root, "labeled corpus root")->required();
    sweep->add_option("--fractions", sweep_fractions, "training fractions to test")
        ->delimiter(',')
        ->capture_default_str();
    sweep->add_option("--seed", seed, "split seed")->capture_default_str();
    sweep->add_option("--min-support", config.min_support, "minimum support fraction")
        ->capture_default_str();
    sweep->add_option("--min-confidence", config.min_confidence, "minimum rule confidence")
        ->capture_default_str();
    sweep->add_option("--min-doc-freq", config.min_doc_freq, "in-document keyword frequency floor")
        ->capture_default_str();
    sweep->add_option("--match-threshold", config.match_threshold, "matched-set fraction")
        ->capture_default_str();
    sweep->add_option("--stopwords", stopwords_path, "stopword file")->envname("ATC_STOPWORDS");
    sweep->add_option("--csv", sweep_csv, "write the CSV table here instead of stdout");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (mine->parsed())
            return run_mine(mine_path, config.min_support, mine_min_count, mine_rules,
                            mine_maximal);
        if (train->parsed())
            return run_train(train_root, train_model_path, config, stopwords_path);
        if (classify->parsed())
            return run_classify(classify_model, classify_input, stopwords_path, classify_counts);
        if (evaluate->parsed())
            return run_evaluate(eval_model, eval_root, stopwords_path, eval_csv);
        if (sweep->parsed())
            return run_sweep(sweep_root, sweep_fractions, seed, config, stopwords_path, sweep_csv);
    } catch (const atc::EmptyInputError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 2;
}

} // namespace

int main(int argc, char** argv) {
    try {
        return run_app(argc, argv);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
}
