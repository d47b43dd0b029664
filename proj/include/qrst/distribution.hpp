#pragma once

#include <vector>

#include "qrst/rational_qt.hpp"

namespace qrst {

/// Finite exact distribution: outcomes paired with rational-function masses.
/// Entries are kept sorted by outcome for deterministic iteration; equal
/// outcomes are merged by addition.
template <class K>
class Distribution {
public:
    using Entry = std::pair<K, RationalQT>;

    void add(const K& outcome, const RationalQT& mass) {
        if (mass.is_zero()) return;
        auto it = std::lower_bound(entries_.begin(), entries_.end(), outcome,
                                   [](const Entry& e, const K& k) { return e.first < k; });
        if (it != entries_.end() && it->first == outcome)
            it->second += mass;
        else
            entries_.insert(it, Entry{outcome, mass});
    }

    const std::vector<Entry>& entries() const { return entries_; }
    bool empty() const { return entries_.empty(); }
    std::size_t size() const { return entries_.size(); }

    RationalQT total() const {
        RationalQT t = RationalQT::zero();
        for (const auto& [k, m] : entries_) t += m;
        return t;
    }

    const RationalQT* find(const K& outcome) const {
        auto it = std::lower_bound(entries_.begin(), entries_.end(), outcome,
                                   [](const Entry& e, const K& k) { return e.first < k; });
        if (it != entries_.end() && it->first == outcome) return &it->second;
        return nullptr;
    }

    RationalQT mass(const K& outcome) const {
        const RationalQT* p = find(outcome);
        return p ? *p : RationalQT::zero();
    }

private:
    std::vector<Entry> entries_;
};

} // namespace qrst
