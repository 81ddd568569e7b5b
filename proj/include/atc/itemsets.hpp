#ifndef ATC_ITEMSETS_HPP
#define ATC_ITEMSETS_HPP

#include <cstddef>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

namespace atc {

// Items are plain strings compared byte-wise; an itemset is sorted and distinct.
using ItemVec = std::vector<std::string>;

struct Transaction {
    std::string tid;
    ItemVec items;
};

struct Itemset {
    ItemVec items;
    std::size_t count = 0;

    bool operator==(const Itemset&) const = default;
};

// The frequent-itemset lattice: level(k) holds the frequent k-itemsets.
struct ItemsetLevels {
    std::vector<std::vector<Itemset>> levels; // levels[0] = L1, each sorted by items
    std::size_t total_transactions = 0;
    std::size_t min_support_count = 0;

    // 1-based; returns an empty list past the deepest level.
    const std::vector<Itemset>& level(std::size_t k) const;
    std::size_t depth() const { return levels.size(); }
    std::size_t total_itemsets() const;
    std::optional<std::size_t> count_of(const ItemVec& items) const;
};

struct AssociationRule {
    ItemVec antecedent;
    ItemVec consequent;
    double support = 0.0;    // P(A u B)
    double confidence = 0.0; // P(B | A)
};

// Number of transactions containing every item of `items` (empty set -> all).
std::size_t support_count(const ItemVec& items, const std::vector<Transaction>& transactions);

// Join step plus prune step: joins pairs of (k-1)-itemsets sharing their first
// k-2 items with l1[k-1] < l2[k-1], then drops any candidate that has an
// infrequent (k-1)-subset. Result is sorted and duplicate-free.
std::vector<ItemVec> generate_candidates(const std::vector<Itemset>& prev_level);

// True iff some (k-1)-subset of candidate is absent from prev_level.
bool has_infrequent_subset(const ItemVec& candidate, const std::vector<Itemset>& prev_level);

// Level-wise search until a level comes out empty. min_support is a fraction
// of the transaction count; the required count is its ceiling.
ItemsetLevels find_frequent_itemsets(const std::vector<Transaction>& transactions, double min_support);

// Same search with an explicit support count, for exact reproduction of
// count-specified runs.
ItemsetLevels find_frequent_itemsets_count(const std::vector<Transaction>& transactions,
                                           std::size_t min_support_count);

// Frequent itemsets that are not a proper subset of any other frequent itemset.
std::vector<Itemset> maximal_itemsets(const ItemsetLevels& levels);

// Every split A => (F - A) of every frequent itemset F with |F| >= 2 whose
// confidence count(F)/count(A) reaches min_confidence.
std::vector<AssociationRule> generate_rules(const ItemsetLevels& levels, double min_confidence);

// One transaction per line, items whitespace-separated, '#' lines ignored.
std::vector<Transaction> read_transaction_file(const std::filesystem::path& path);

std::string join_items(const ItemVec& items, const std::string& sep = " ");

} // namespace atc

#endif
