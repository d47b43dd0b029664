#pragma once

#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "qrst/partition.hpp"

namespace qrst {

/// A standard Young tableau viewed as a saturated chain in Young's lattice:
/// chain[i] is the shape of the entries <= i, chain[0] the empty partition.
class StandardTableau {
public:
    StandardTableau() { chain_.push_back(Partition()); }
    explicit StandardTableau(std::vector<Partition> chain) : chain_(std::move(chain)) {
        if (chain_.empty() || !chain_.front().empty())
            fail(errc::parse_error, "tableau chain must start at the empty partition");
        for (std::size_t i = 1; i < chain_.size(); ++i)
            if (!chain_[i].covers(chain_[i - 1]))
                fail(errc::not_cover, "tableau chain steps must add exactly one cell");
    }

    int entries() const { return static_cast<int>(chain_.size()) - 1; }
    const Partition& shape() const { return chain_.back(); }
    const std::vector<Partition>& chain() const { return chain_; }
    const Partition& shape_at(int i) const { return chain_[i]; }

    /// Cell that entry i occupies.
    Cell cell_of(int i) const { return chain_[i].skew_cell(chain_[i - 1]); }

    StandardTableau conjugate() const {
        std::vector<Partition> c;
        c.reserve(chain_.size());
        for (const Partition& p : chain_) c.push_back(p.conjugate());
        return StandardTableau(std::move(c));
    }

    friend auto operator<=>(const StandardTableau&, const StandardTableau&) = default;

    /// Rows bottom-up, entries left to right.
    std::vector<std::vector<int>> rows() const {
        std::vector<std::vector<int>> rows(shape().rows());
        for (int i = 1; i <= entries(); ++i) {
            Cell c = cell_of(i);
            auto& row = rows[c.y - 1];
            if (static_cast<int>(row.size()) < c.x) row.resize(c.x, 0);
            row[c.x - 1] = i;
        }
        return rows;
    }

    /// "1,3,4;2,6;5" — rows bottom-up, comma-separated, semicolon between rows.
    std::string to_string() const {
        std::string s;
        auto rs = rows();
        for (std::size_t y = 0; y < rs.size(); ++y) {
            if (y) s += ';';
            for (std::size_t x = 0; x < rs[y].size(); ++x) {
                if (x) s += ',';
                s += std::to_string(rs[y][x]);
            }
        }
        return s;
    }

    static StandardTableau from_string(const std::string& s);

private:
    std::vector<Partition> chain_;
};

/// A partial standard Young tableau: distinct positive entries with rows and
/// columns increasing. The shape of the entries <= z is a partition for all z.
class PartialTableau {
public:
    PartialTableau() = default;
    explicit PartialTableau(std::map<Cell, int> filling) : filling_(std::move(filling)) { validate(); }

    const std::map<Cell, int>& filling() const { return filling_; }
    bool has_entry(int v) const {
        for (const auto& [c, e] : filling_)
            if (e == v) return true;
        return false;
    }
    int max_entry() const {
        int m = 0;
        for (const auto& [c, e] : filling_) m = std::max(m, e);
        return m;
    }

    /// Shape of the subtableau with entries <= z.
    Partition shape_at_most(int z) const {
        std::map<int, int> rowlen;
        for (const auto& [c, e] : filling_)
            if (e <= z) rowlen[c.y] = std::max(rowlen[c.y], c.x);
        std::vector<int> parts;
        for (int y = 1; !rowlen.empty() && y <= rowlen.rbegin()->first; ++y) parts.push_back(rowlen[y]);
        return Partition(std::move(parts));
    }
    Partition shape() const { return shape_at_most(max_entry()); }

    /// Sorted entry values with the shape chain after each.
    std::vector<int> sorted_entries() const {
        std::vector<int> es;
        for (const auto& [c, e] : filling_) es.push_back(e);
        std::sort(es.begin(), es.end());
        return es;
    }

    static PartialTableau from_chain(const std::vector<int>& entries, const std::vector<Partition>& chain) {
        std::map<Cell, int> f;
        for (std::size_t i = 1; i < chain.size(); ++i) f[chain[i].skew_cell(chain[i - 1])] = entries[i - 1];
        return PartialTableau(std::move(f));
    }

    friend auto operator<=>(const PartialTableau&, const PartialTableau&) = default;

    std::string to_string() const {
        std::map<int, std::vector<std::pair<int, int>>> byrow;
        for (const auto& [c, e] : filling_) byrow[c.y].push_back({c.x, e});
        std::string s;
        int maxy = byrow.empty() ? 0 : byrow.rbegin()->first;
        for (int y = 1; y <= maxy; ++y) {
            if (y > 1) s += ';';
            auto row = byrow[y];
            std::sort(row.begin(), row.end());
            for (std::size_t i = 0; i < row.size(); ++i) {
                if (i) s += ',';
                s += std::to_string(row[i].second);
            }
        }
        return s;
    }

    static PartialTableau from_string(const std::string& s) {
        std::map<Cell, int> f;
        std::stringstream rows(s);
        std::string row;
        int y = 0;
        while (std::getline(rows, row, ';')) {
            ++y;
            std::stringstream cells(row);
            std::string cell;
            int x = 0;
            while (std::getline(cells, cell, ',')) {
                if (cell.empty()) continue;
                ++x;
                try {
                    f[Cell{x, y}] = std::stoi(cell);
                } catch (const std::exception&) {
                    fail(errc::parse_error, "bad tableau literal: " + s);
                }
            }
        }
        return PartialTableau(std::move(f));
    }

private:
    // The defining invariant: the shape of the entries <= z is a partition for
    // every z. Placing cells in entry order and insisting each lands at the end
    // of its row, with the row below long enough, checks exactly that (and
    // implies increasing rows and columns).
    void validate() const {
        std::map<int, Cell> by_entry;
        for (const auto& [c, e] : filling_) {
            if (e <= 0) fail(errc::parse_error, "tableau entries must be positive");
            if (!by_entry.emplace(e, c).second) fail(errc::duplicate_entry, "repeated tableau entry");
        }
        std::map<int, int> rowlen;
        for (const auto& [e, c] : by_entry) {
            if (c.x != rowlen[c.y] + 1)
                fail(errc::parse_error, "partial tableau fills rows left to right");
            if (c.y > 1 && rowlen[c.y - 1] < c.x)
                fail(errc::parse_error, "partial tableau shapes must stay partitions");
            rowlen[c.y] = c.x;
        }
    }

    std::map<Cell, int> filling_;
};

inline StandardTableau StandardTableau::from_string(const std::string& s) {
    PartialTableau pt = PartialTableau::from_string(s);
    int n = pt.max_entry();
    std::vector<Partition> chain;
    chain.reserve(n + 1);
    for (int i = 0; i <= n; ++i) chain.push_back(pt.shape_at_most(i));
    return StandardTableau(std::move(chain));
}

inline PartialTableau to_partial(const StandardTableau& t) {
    std::vector<int> entries(t.entries());
    for (int i = 1; i <= t.entries(); ++i) entries[i - 1] = i;
    return PartialTableau::from_chain(entries, t.chain());
}

inline StandardTableau to_standard(const PartialTableau& pt) {
    auto entries = pt.sorted_entries();
    std::vector<Partition> chain;
    chain.push_back(Partition());
    for (std::size_t i = 0; i < entries.size(); ++i) chain.push_back(pt.shape_at_most(entries[i]));
    return StandardTableau(std::move(chain));
}

/// All standard Young tableaux of the given shape, enumerated as chains.
inline std::vector<StandardTableau> syt_enumerate(const Partition& shape, int size_bound = 12) {
    if (shape.size() > size_bound) fail(errc::size_bound_exceeded, "shape too large for enumeration");
    std::vector<StandardTableau> out;
    std::vector<Partition> chain{shape};
    auto rec = [&](auto&& self, const Partition& cur) -> void {
        if (cur.empty()) {
            std::vector<Partition> c(chain.rbegin(), chain.rend());
            out.push_back(StandardTableau(std::move(c)));
            return;
        }
        for (const Partition& mu : neighborhoods(cur).down) {
            chain.push_back(mu);
            self(self, mu);
            chain.pop_back();
        }
    };
    rec(rec, shape);
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace qrst
