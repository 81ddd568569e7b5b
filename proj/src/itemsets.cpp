#include "atc/itemsets.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>
#include <unordered_set>

#include "atc/errors.hpp"

namespace atc {

namespace {

bool items_less(const Itemset& a, const Itemset& b) {
    return a.items < b.items;
}

// Saturating binomial coefficient, used only as a cost estimate.
double subset_cost(std::size_t n, std::size_t k) {
    if (k > n)
        return 0.0;
    double c = 1.0;
    for (std::size_t i = 0; i < k; ++i) {
        c = c * static_cast<double>(n - i) / static_cast<double>(i + 1);
        if (c > 1e18)
            return 1e18;
    }
    return c;
}

bool subset_missing(const ItemVec& candidate, const std::set<ItemVec>& prev) {
    ItemVec subset;
    subset.reserve(candidate.size() - 1);
    for (std::size_t drop = 0; drop < candidate.size(); ++drop) {
        subset.clear();
        for (std::size_t i = 0; i < candidate.size(); ++i)
            if (i != drop)
                subset.push_back(candidate[i]);
        if (prev.find(subset) == prev.end())
            return true;
    }
    return false;
}

// Counts each candidate's support with one scan of the transactions. Per
// transaction the cheaper of two equivalent routes is taken: enumerate the
// k-subsets of the transaction (restricted to items any candidate uses) and
// look them up, or test every candidate for containment.
std::vector<Itemset> count_candidates(const std::vector<ItemVec>& candidates,
                                      const std::vector<Transaction>& transactions,
                                      std::size_t min_support_count) {
    if (candidates.empty())
        return {};
    const std::size_t k = candidates.front().size();

    std::map<ItemVec, std::size_t> counts;
    std::unordered_set<std::string> candidate_items;
    for (const auto& c : candidates) {
        counts.emplace(c, 0);
        candidate_items.insert(c.begin(), c.end());
    }

    ItemVec filtered, chosen;
    chosen.resize(k);
    for (const auto& t : transactions) {
        if (t.items.size() < k)
            continue;
        filtered.clear();
        for (const auto& item : t.items)
            if (candidate_items.count(item))
                filtered.push_back(item);
        if (filtered.size() < k)
            continue;

        const double cost = subset_cost(filtered.size(), k);
        if (cost <= std::max<double>(1024.0, 8.0 * static_cast<double>(candidates.size()))) {
            // enumerate the k-subsets of the filtered transaction
            auto recurse = [&](auto&& self, std::size_t start, std::size_t depth) -> void {
                if (depth == k) {
                    auto it = counts.find(chosen);
                    if (it != counts.end())
                        ++it->second;
                    return;
                }
                for (std::size_t i = start; i + (k - depth) <= filtered.size(); ++i) {
                    chosen[depth] = filtered[i];
                    self(self, i + 1, depth + 1);
                }
            };
            recurse(recurse, 0, 0);
        } else {
            for (auto& [items, count] : counts)
                if (std::includes(filtered.begin(), filtered.end(), items.begin(), items.end()))
                    ++count;
        }
    }

    std::vector<Itemset> level;
    for (const auto& [items, count] : counts)
        if (count >= min_support_count)
            level.push_back(Itemset{items, count});
    return level; // map order keeps the level sorted by items
}

} // namespace

const std::vector<Itemset>& ItemsetLevels::level(std::size_t k) const {
    static const std::vector<Itemset> empty;
    if (k == 0 || k > levels.size())
        return empty;
    return levels[k - 1];
}

std::size_t ItemsetLevels::total_itemsets() const {
    std::size_t n = 0;
    for (const auto& l : levels)
        n += l.size();
    return n;
}

std::optional<std::size_t> ItemsetLevels::count_of(const ItemVec& items) const {
    if (items.empty() || items.size() > levels.size())
        return std::nullopt;
    const auto& level = levels[items.size() - 1];
    auto it = std::lower_bound(level.begin(), level.end(), Itemset{items, 0}, items_less);
    if (it != level.end() && it->items == items)
        return it->count;
    return std::nullopt;
}

std::size_t support_count(const ItemVec& items, const std::vector<Transaction>& transactions) {
    assert(std::is_sorted(items.begin(), items.end()));
    std::size_t count = 0;
    for (const auto& t : transactions)
        if (std::includes(t.items.begin(), t.items.end(), items.begin(), items.end()))
            ++count;
    return count;
}

std::vector<ItemVec> generate_candidates(const std::vector<Itemset>& prev_level) {
    if (prev_level.empty())
        return {};
    [[maybe_unused]] const std::size_t prev_size = prev_level.front().items.size();

    std::vector<ItemVec> sorted;
    sorted.reserve(prev_level.size());
    std::set<ItemVec> present;
    for (const auto& s : prev_level) {
        assert(s.items.size() == prev_size);
        if (present.insert(s.items).second)
            sorted.push_back(s.items);
    }
    std::sort(sorted.begin(), sorted.end());

    // Join: pairs agreeing on their first k-2 items; sorted order guarantees
    // l1's last item precedes l2's. Prune: drop candidates with an infrequent
    // (k-1)-subset.
    std::vector<ItemVec> candidates;
    for (std::size_t i = 0; i < sorted.size(); ++i) {
        for (std::size_t j = i + 1; j < sorted.size(); ++j) {
            if (!std::equal(sorted[i].begin(), sorted[i].end() - 1, sorted[j].begin(),
                            sorted[j].end() - 1))
                break; // prefix groups are contiguous in sorted order
            ItemVec candidate = sorted[i];
            candidate.push_back(sorted[j].back());
            if (!subset_missing(candidate, present))
                candidates.push_back(std::move(candidate));
        }
    }
    return candidates; // join order over sorted input keeps this sorted
}

bool has_infrequent_subset(const ItemVec& candidate, const std::vector<Itemset>& prev_level) {
    assert(candidate.size() >= 2);
    std::set<ItemVec> present;
    for (const auto& s : prev_level)
        present.insert(s.items);
    return subset_missing(candidate, present);
}

ItemsetLevels find_frequent_itemsets(const std::vector<Transaction>& transactions,
                                     double min_support) {
    if (transactions.empty())
        throw EmptyInputError("cannot mine an empty transaction list");
    if (!(min_support > 0.0) || min_support > 1.0)
        throw std::invalid_argument("min_support must be in (0, 1]");
    // The 1e-9 slack keeps exact fractions like 2/9 over 9 transactions from
    // rounding up one count.
    double raw = min_support * static_cast<double>(transactions.size());
    auto count = static_cast<std::size_t>(std::ceil(raw - 1e-9));
    return find_frequent_itemsets_count(transactions, std::max<std::size_t>(count, 1));
}

ItemsetLevels find_frequent_itemsets_count(const std::vector<Transaction>& transactions,
                                           std::size_t min_support_count) {
    if (transactions.empty())
        throw EmptyInputError("cannot mine an empty transaction list");
    if (min_support_count < 1)
        throw std::invalid_argument("min_support_count must be >= 1");

    ItemsetLevels out;
    out.total_transactions = transactions.size();
    out.min_support_count = min_support_count;

    std::map<std::string, std::size_t> item_counts;
    for (const auto& t : transactions) {
        assert(std::is_sorted(t.items.begin(), t.items.end()));
        for (const auto& item : t.items)
            ++item_counts[item];
    }
    std::vector<Itemset> level;
    for (const auto& [item, count] : item_counts)
        if (count >= min_support_count)
            level.push_back(Itemset{{item}, count});
    if (level.empty())
        return out;
    out.levels.push_back(std::move(level));

    while (true) {
        auto candidates = generate_candidates(out.levels.back());
        if (candidates.empty())
            break;
        auto next = count_candidates(candidates, transactions, min_support_count);
        if (next.empty())
            break;
        out.levels.push_back(std::move(next));
    }
    return out;
}

std::vector<Itemset> maximal_itemsets(const ItemsetLevels& levels) {
    std::vector<Itemset> out;
    for (std::size_t k = 1; k <= levels.depth(); ++k) {
        for (const auto& s : levels.level(k)) {
            bool contained = false;
            for (std::size_t k2 = k + 1; k2 <= levels.depth() && !contained; ++k2)
                for (const auto& super : levels.level(k2))
                    if (std::includes(super.items.begin(), super.items.end(), s.items.begin(),
                                      s.items.end())) {
                        contained = true;
                        break;
                    }
            if (!contained)
                out.push_back(s);
        }
    }
    return out;
}

std::vector<AssociationRule> generate_rules(const ItemsetLevels& levels, double min_confidence) {
    if (!(min_confidence > 0.0) || min_confidence > 1.0)
        throw std::invalid_argument("min_confidence must be in (0, 1]");

    std::map<ItemVec, std::size_t> counts;
    for (const auto& level : levels.levels)
        for (const auto& s : level)
            counts.emplace(s.items, s.count);

    const double total = static_cast<double>(levels.total_transactions);
    std::vector<AssociationRule> rules;
    for (std::size_t k = 2; k <= levels.depth(); ++k) {
        for (const auto& s : levels.level(k)) {
            const auto size = s.items.size();
            for (std::uint64_t mask = 1; mask + 1 < (std::uint64_t{1} << size); ++mask) {
                ItemVec antecedent, consequent;
                for (std::size_t i = 0; i < size; ++i)
                    ((mask >> i) & 1 ? antecedent : consequent).push_back(s.items[i]);
                auto it = counts.find(antecedent);
                if (it == counts.end())
                    throw ValidationError("itemset levels are not anti-monotone: missing subset " +
                                          join_items(antecedent));
                const double confidence =
                    static_cast<double>(s.count) / static_cast<double>(it->second);
                if (confidence >= min_confidence)
                    rules.push_back(AssociationRule{std::move(antecedent), std::move(consequent),
                                                    static_cast<double>(s.count) / total,
                                                    confidence});
            }
        }
    }
    std::sort(rules.begin(), rules.end(), [](const AssociationRule& a, const AssociationRule& b) {
        return std::tie(a.antecedent, a.consequent) < std::tie(b.antecedent, b.consequent);
    });
    return rules;
}

std::vector<Transaction> read_transaction_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in)
        throw IoError("cannot open transaction file: " + path.string());

    std::vector<Transaction> out;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#')
            continue;
        Transaction t;
        t.tid = std::to_string(lineno);
        std::istringstream words(line);
        std::string item;
        while (words >> item)
            t.items.push_back(item);
        std::sort(t.items.begin(), t.items.end());
        t.items.erase(std::unique(t.items.begin(), t.items.end()), t.items.end());
        out.push_back(std::move(t));
    }
    return out;
}

std::string join_items(const ItemVec& items, const std::string& sep) {
    std::string out;
    for (std::size_t i = 0; i < items.size(); ++i) {
        if (i > 0)
            out += sep;
        out += items[i];
    }
    return out;
}

} // namespace atc
