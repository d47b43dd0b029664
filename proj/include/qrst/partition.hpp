#pragma once

#include <algorithm>
#include <compare>
#include <sstream>
#include <string>
#include <vector>

#include "qrst/bracket.hpp"

namespace qrst {

/// A cell of a Young diagram in Cartesian coordinates, French convention:
/// x = column, y = row, both 1-based, rows growing upward.
struct Cell {
    int x = 1;
    int y = 1;
    friend auto operator<=>(const Cell&, const Cell&) = default;
};

struct CellStats {
    int arm = 0;
    int leg = 0;
    int hook = 1;
};

/// Integer partition: weakly decreasing positive parts, trailing zeros never
/// stored. The empty partition is the empty list.
class Partition {
public:
    Partition() = default;
    Partition(std::initializer_list<int> parts) : parts_(parts) { validate(); }
    explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) { validate(); }

    const std::vector<int>& parts() const { return parts_; }
    bool empty() const { return parts_.empty(); }
    int rows() const { return static_cast<int>(parts_.size()); }
    int part(int y) const { return (y >= 1 && y <= rows()) ? parts_[y - 1] : 0; }
    int size() const {
        int n = 0;
        for (int p : parts_) n += p;
        return n;
    }
    bool contains_cell(Cell c) const { return c.x >= 1 && c.y >= 1 && c.x <= part(c.y); }

    friend auto operator<=>(const Partition&, const Partition&) = default;

    /// Number of cells in column x.
    int col_height(int x) const {
        int h = 0;
        for (int p : parts_) {
            if (p >= x)
                ++h;
            else
                break;
        }
        return h;
    }

    Partition conjugate() const {
        std::vector<int> cols;
        if (!parts_.empty()) {
            cols.resize(parts_[0]);
            for (int x = 1; x <= parts_[0]; ++x) cols[x - 1] = col_height(x);
        }
        return Partition(std::move(cols));
    }

    bool contains(const Partition& mu) const {
        if (mu.rows() > rows()) return false;
        for (int y = 1; y <= mu.rows(); ++y)
            if (mu.part(y) > part(y)) return false;
        return true;
    }

    friend Partition union_of(const Partition& a, const Partition& b) {
        std::vector<int> p(std::max(a.rows(), b.rows()));
        for (int y = 1; y <= static_cast<int>(p.size()); ++y) p[y - 1] = std::max(a.part(y), b.part(y));
        return Partition(std::move(p));
    }
    friend Partition intersection_of(const Partition& a, const Partition& b) {
        std::vector<int> p(std::min(a.rows(), b.rows()));
        for (int y = 1; y <= static_cast<int>(p.size()); ++y) p[y - 1] = std::min(a.part(y), b.part(y));
        while (!p.empty() && p.back() == 0) p.pop_back();
        return Partition(std::move(p));
    }

    Partition with_cell_added(int row) const {
        std::vector<int> p = parts_;
        if (row == rows() + 1)
            p.push_back(1);
        else
            p[row - 1] += 1;
        return Partition(std::move(p));
    }
    Partition with_cell_removed(int row) const {
        std::vector<int> p = parts_;
        p[row - 1] -= 1;
        while (!p.empty() && p.back() == 0) p.pop_back();
        return Partition(std::move(p));
    }

    /// True when this covers mu in Young's lattice (one added cell).
    bool covers(const Partition& mu) const {
        return contains(mu) && size() == mu.size() + 1;
    }

    /// The single cell of this/mu; requires a one-cell skew.
    Cell skew_cell(const Partition& mu) const {
        if (!covers(mu)) fail(errc::not_cover, "not a covering pair");
        for (int y = 1; y <= rows(); ++y)
            if (part(y) != mu.part(y)) return Cell{part(y), y};
        fail(errc::not_cover, "not a covering pair");
    }

    std::vector<Cell> cells() const {
        std::vector<Cell> cs;
        for (int y = 1; y <= rows(); ++y)
            for (int x = 1; x <= part(y); ++x) cs.push_back(Cell{x, y});
        return cs;
    }

    std::string to_string() const {
        std::string s;
        for (std::size_t i = 0; i < parts_.size(); ++i) {
            if (i) s += ',';
            s += std::to_string(parts_[i]);
        }
        return s;
    }

    static Partition from_string(const std::string& s) {
        std::vector<int> p;
        std::stringstream ss(s);
        std::string tok;
        while (std::getline(ss, tok, ',')) {
            if (tok.empty()) continue;
            try {
                p.push_back(std::stoi(tok));
            } catch (const std::exception&) {
                fail(errc::parse_error, "bad partition literal: " + s);
            }
        }
        return Partition(std::move(p));
    }

private:
    void validate() const {
        for (std::size_t i = 0; i < parts_.size(); ++i) {
            if (parts_[i] <= 0) fail(errc::parse_error, "partition parts must be positive");
            if (i > 0 && parts_[i] > parts_[i - 1])
                fail(errc::parse_error, "partition parts must be weakly decreasing");
        }
    }

    std::vector<int> parts_;
};

inline CellStats cell_stats(const Partition& lambda, Cell c) {
    if (!lambda.contains_cell(c)) fail(errc::cell_outside_diagram, "cell outside the diagram");
    CellStats s;
    s.arm = lambda.part(c.y) - c.x;
    s.leg = lambda.col_height(c.x) - c.y;
    s.hook = s.arm + s.leg + 1;
    return s;
}

/// n(lambda) = sum of legs, n'(lambda) = sum of arms; n'(lambda) = n(lambda').
struct NStats {
    long n = 0;
    long nprime = 0;
};

inline NStats n_stats(const Partition& lambda) {
    NStats r;
    for (Cell c : lambda.cells()) {
        CellStats s = cell_stats(lambda, c);
        r.n += s.leg;
        r.nprime += s.arm;
    }
    return r;
}

/// Boundary parameters of a nonempty partition: d distinct part sizes,
/// h_i = horizontal and v_i = vertical segment lengths of the southeast
/// boundary, indexed from the bottom-right.
struct Parameters {
    int d = 0;
    std::vector<int> h; // h[0] = h_1, ...
    std::vector<int> v;

    int h_at(int i) const { return h[i - 1]; }
    int v_at(int i) const { return v[i - 1]; }
    /// Partial sums h_{i,j} = h_i + ... + h_j, zero when i > j.
    int h_sum(int i, int j) const {
        int s = 0;
        for (int k = i; k <= j; ++k) s += h[k - 1];
        return s;
    }
    int v_sum(int i, int j) const {
        int s = 0;
        for (int k = i; k <= j; ++k) s += v[k - 1];
        return s;
    }

    Partition to_partition() const {
        std::vector<int> parts;
        for (int i = 1; i <= d; ++i) {
            int u = h_sum(i, d);
            for (int k = 0; k < v[i - 1]; ++k) parts.push_back(u);
        }
        return Partition(std::move(parts));
    }
};

inline Parameters parameters(const Partition& lambda) {
    if (lambda.empty()) fail(errc::empty_partition, "parameters of the empty partition are undefined");
    Parameters p;
    std::vector<int> distinct;
    std::vector<int> mult;
    for (int part : lambda.parts()) {
        if (!distinct.empty() && part == distinct.back())
            ++mult.back();
        else {
            distinct.push_back(part);
            mult.push_back(1);
        }
    }
    p.d = static_cast<int>(distinct.size());
    p.v = std::move(mult);
    p.h.resize(p.d);
    for (int i = 0; i < p.d; ++i) {
        int next = (i + 1 < p.d) ? distinct[i + 1] : 0;
        p.h[i] = distinct[i] - next;
    }
    return p;
}

/// The sets D(lambda), U(lambda), D*(lambda) with the boundary-parameter
/// ordering: up[s] adds a cell in row v_{1,s}+1, dstar[0] = lambda and
/// dstar[r] removes a cell from row v_{1,r}.
struct Neighborhoods {
    std::vector<Partition> down;
    std::vector<Partition> up;
    std::vector<Partition> dstar;
};

inline Neighborhoods neighborhoods(const Partition& lambda) {
    Neighborhoods nb;
    nb.dstar.push_back(lambda);
    if (lambda.empty()) {
        nb.up.push_back(Partition{1});
        return nb;
    }
    Parameters p = parameters(lambda);
    for (int s = 0; s <= p.d; ++s) nb.up.push_back(lambda.with_cell_added(p.v_sum(1, s) + 1));
    for (int r = 1; r <= p.d; ++r) {
        Partition mu = lambda.with_cell_removed(p.v_sum(1, r));
        nb.down.push_back(mu);
        nb.dstar.push_back(std::move(mu));
    }
    return nb;
}

/// Hook products: H = product of hook lengths, Hq = product of 1 - q^hook.
struct HookProducts {
    Int H = 1;
    RationalQT Hq = RationalQT::one();
};

inline HookProducts hook_products(const Partition& lambda) {
    HookProducts r;
    BracketProduct hq = BracketProduct::one();
    for (Cell c : lambda.cells()) {
        int h = cell_stats(lambda, c).hook;
        r.H *= h;
        hq.mul_bracket(h, 0);
    }
    r.Hq = hq.to_rational();
    return r;
}

/// Number of standard Young tableaux by the hook-length formula.
inline Int syt_count(const Partition& lambda) {
    Int f = int_factorial(static_cast<unsigned>(lambda.size()));
    return f / hook_products(lambda).H;
}

/// All partitions of n, in lexicographically decreasing order of parts.
inline std::vector<Partition> partitions_of(int n) {
    std::vector<Partition> out;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int rem, int maxpart) -> void {
        if (rem == 0) {
            out.push_back(Partition(cur));
            return;
        }
        for (int p = std::min(rem, maxpart); p >= 1; --p) {
            cur.push_back(p);
            self(self, rem - p, p);
            cur.pop_back();
        }
    };
    rec(rec, n, n);
    return out;
}

} // namespace qrst
