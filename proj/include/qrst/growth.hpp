#pragma once

#include <functional>
#include <sstream>

#include "qrst/distribution.hpp"
#include "qrst/kernel.hpp"
#include "qrst/prng.hpp"
#include "qrst/tableau.hpp"

namespace qrst {

class Permutation {
public:
    Permutation() = default;
    explicit Permutation(std::vector<int> one_line) : one_line_(std::move(one_line)) {
        std::vector<bool> seen(one_line_.size() + 1, false);
        for (int v : one_line_) {
            if (v < 1 || v > static_cast<int>(one_line_.size()) || seen[v])
                fail(errc::parse_error, "not a permutation in one-line notation");
            seen[v] = true;
        }
    }

    int n() const { return static_cast<int>(one_line_.size()); }
    int operator()(int j) const { return one_line_[j - 1]; }
    const std::vector<int>& one_line() const { return one_line_; }

    Permutation inverse() const {
        std::vector<int> inv(one_line_.size());
        for (int j = 1; j <= n(); ++j) inv[(*this)(j)-1] = j;
        return Permutation(std::move(inv));
    }

    static Permutation identity(int n) {
        std::vector<int> v(n);
        for (int i = 0; i < n; ++i) v[i] = i + 1;
        return Permutation(std::move(v));
    }

    friend auto operator<=>(const Permutation&, const Permutation&) = default;

    std::string to_string() const {
        std::string s;
        for (int i = 0; i < n(); ++i) {
            if (i) s += ',';
            s += std::to_string(one_line_[i]);
        }
        return s;
    }
    static Permutation from_string(const std::string& s) {
        std::vector<int> v;
        std::stringstream ss(s);
        std::string tok;
        while (std::getline(ss, tok, ',')) {
            if (tok.empty()) continue;
            try {
                v.push_back(std::stoi(tok));
            } catch (const std::exception&) {
                fail(errc::parse_error, "bad permutation literal: " + s);
            }
        }
        return Permutation(std::move(v));
    }

private:
    std::vector<int> one_line_;
};

/// Vertex labels of the (n+1)x(n+1) growth grid over the permutation matrix
/// of sigma (matrix-indexed: labels[i][j], 0 <= i,j <= n). square_prob[i][j]
/// is the local probability spent at square (i,j); forced squares carry 1.
struct GrowthDiagram {
    Permutation sigma;
    std::vector<std::vector<Partition>> labels;
    std::vector<std::vector<RationalQT>> square_prob;

    const Partition& corner() const { return labels.back().back(); }

    StandardTableau insertion_tableau() const { // right column, top to bottom
        std::vector<Partition> chain;
        for (int i = 0; i <= sigma.n(); ++i) chain.push_back(labels[i][sigma.n()]);
        return StandardTableau(std::move(chain));
    }
    StandardTableau recording_tableau() const { // bottom row, left to right
        std::vector<Partition> chain;
        for (int j = 0; j <= sigma.n(); ++j) chain.push_back(labels[sigma.n()][j]);
        return StandardTableau(std::move(chain));
    }

    RationalQT probability() const {
        RationalQT p = RationalQT::one();
        for (const auto& row : square_prob)
            for (const RationalQT& x : row) p *= x;
        return p;
    }

    /// Text grid in the layout used for growth diagrams: vertex labels with
    /// X marking the permutation matrix entries.
    std::string to_text() const {
        const int n = sigma.n();
        auto label = [](const Partition& p) {
            if (p.empty()) return std::string("0");
            bool small = p.part(1) <= 9;
            std::string s;
            for (int v : p.parts()) s += small ? std::to_string(v) : (s.empty() ? "" : ",") + std::to_string(v);
            return s;
        };
        std::vector<std::vector<std::string>> cells(2 * n + 1, std::vector<std::string>(2 * n + 1, ""));
        for (int i = 0; i <= n; ++i)
            for (int j = 0; j <= n; ++j) cells[2 * i][2 * j] = label(labels[i][j]);
        for (int j = 1; j <= n; ++j) cells[2 * sigma(j) - 1][2 * j - 1] = "X";
        std::vector<std::size_t> width(2 * n + 1, 1);
        for (std::size_t c = 0; c < width.size(); ++c)
            for (std::size_t r = 0; r < cells.size(); ++r) width[c] = std::max(width[c], cells[r][c].size());
        std::string out;
        for (std::size_t r = 0; r < cells.size(); ++r) {
            std::string line;
            for (std::size_t c = 0; c < cells[r].size(); ++c) {
                std::string v = cells[r][c];
                v.resize(width[c], ' ');
                line += v;
                line += (c + 1 < cells[r].size()) ? "  " : "";
            }
            while (!line.empty() && line.back() == ' ') line.pop_back();
            out += line;
            out += '\n';
        }
        return out;
    }
};

using TableauPair = std::pair<StandardTableau, StandardTableau>;
using PairDistribution = Distribution<TableauPair>;

enum class InsertionRules { row, col };

namespace detail {

inline const TransitionKernel& rules_kernel(const Partition& la, InsertionRules rules) {
    return rules == InsertionRules::row ? kernel(la) : kernel_col(la);
}

inline int up_index(const Partition& la, const Partition& nu) {
    Neighborhoods nb = neighborhoods(la);
    for (std::size_t s = 0; s < nb.up.size(); ++s)
        if (nb.up[s] == nu) return static_cast<int>(s);
    fail(errc::not_cover, "partition is not an up neighbor");
}

inline int dstar_index(const Partition& la, const Partition& mu) {
    Neighborhoods nb = neighborhoods(la);
    for (std::size_t r = 0; r < nb.dstar.size(); ++r)
        if (nb.dstar[r] == mu) return static_cast<int>(r);
    fail(errc::not_cover, "partition is not a down-star neighbor");
}

/// Walks all growths of sigma square by square (row-major). At each square
/// the southeast label is either forced (types I and II) or drawn from the
/// kernel of the southwest label (type III); visit() receives each complete
/// growth with its probability factors in square_prob.
inline void for_each_growth(const Permutation& sigma, InsertionRules rules,
                            const std::function<void(const GrowthDiagram&)>& visit) {
    const int n = sigma.n();
    GrowthDiagram g;
    g.sigma = sigma;
    g.labels.assign(n + 1, std::vector<Partition>(n + 1));
    g.square_prob.assign(n, std::vector<RationalQT>(n, RationalQT::one()));
    auto rec = [&](auto&& self, int idx) -> void {
        if (idx == n * n) {
            visit(g);
            return;
        }
        const int i = idx / n + 1, j = idx % n + 1;
        const Partition& mu = g.labels[i - 1][j - 1];
        const Partition& la = g.labels[i][j - 1];
        const Partition& rho = g.labels[i - 1][j];
        const bool a = sigma(j) == i;
        if (la != rho) {
            g.labels[i][j] = union_of(la, rho);
            g.square_prob[i - 1][j - 1] = RationalQT::one();
            self(self, idx + 1);
            return;
        }
        if (!a && mu == la) {
            g.labels[i][j] = mu;
            g.square_prob[i - 1][j - 1] = RationalQT::one();
            self(self, idx + 1);
            return;
        }
        // type III: mu in D*(la), branch over U(la)
        const TransitionKernel& k = rules_kernel(la, rules);
        const int r = a ? 0 : dstar_index(la, mu);
        Neighborhoods nb = neighborhoods(la);
        for (int s = 0; s <= k.d; ++s) {
            g.labels[i][j] = nb.up[s];
            g.square_prob[i - 1][j - 1] = k.p(r, s);
            self(self, idx + 1);
        }
        g.square_prob[i - 1][j - 1] = RationalQT::one();
    };
    rec(rec, 0);
}

} // namespace detail

/// All growths associated with sigma together with their probabilities.
inline std::vector<std::pair<GrowthDiagram, RationalQT>>
enumerate_growths(const Permutation& sigma, int bound = 6, InsertionRules rules = InsertionRules::row) {
    if (sigma.n() > bound) fail(errc::size_bound_exceeded, "exact growth enumeration bound exceeded");
    std::vector<std::pair<GrowthDiagram, RationalQT>> out;
    detail::for_each_growth(sigma, rules,
                            [&](const GrowthDiagram& g) { out.emplace_back(g, g.probability()); });
    return out;
}

/// Exact forward distribution over tableau pairs.
inline PairDistribution forward_exact(const Permutation& sigma, int bound = 6,
                                      InsertionRules rules = InsertionRules::row) {
    if (sigma.n() > bound) fail(errc::size_bound_exceeded, "exact growth enumeration bound exceeded");
    PairDistribution dist;
    detail::for_each_growth(sigma, rules, [&](const GrowthDiagram& g) {
        dist.add(TableauPair{g.insertion_tableau(), g.recording_tableau()}, g.probability());
    });
    return dist;
}

/// Exact backward distribution over permutations, filling the grid from the
/// southeast with the backward kernels.
inline Distribution<Permutation> backward_exact(const StandardTableau& P, const StandardTableau& Q,
                                                int bound = 6, InsertionRules rules = InsertionRules::row) {
    if (P.shape() != Q.shape()) fail(errc::shape_mismatch, "tableaux must have equal shapes");
    const int n = P.entries();
    if (n > bound) fail(errc::size_bound_exceeded, "exact growth enumeration bound exceeded");
    std::vector<std::vector<Partition>> labels(n + 1, std::vector<Partition>(n + 1));
    for (int i = 0; i <= n; ++i) labels[i][n] = P.shape_at(i);
    for (int j = 0; j <= n; ++j) labels[n][j] = Q.shape_at(j);
    Distribution<Permutation> dist;
    std::vector<int> ones(n + 1, 0); // ones[i] = column of the 1 in row i
    auto rec = [&](auto&& self, int idx, const RationalQT& prob) -> void {
        if (idx == n * n) {
            std::vector<int> one_line(n);
            for (int i = 1; i <= n; ++i) {
                if (ones[i] == 0) return; // not a permutation matrix; cannot happen
                one_line[ones[i] - 1] = i;
            }
            dist.add(Permutation(one_line), prob);
            return;
        }
        // reverse row-major: square (i,j) with i from n down, j from n down
        const int i = n - idx / n, j = n - idx % n;
        const Partition& la = labels[i][j - 1];
        const Partition& rho = labels[i - 1][j];
        const Partition& nu = labels[i][j];
        if (la != rho) {
            labels[i - 1][j - 1] = intersection_of(la, rho);
            self(self, idx + 1, prob);
            return;
        }
        if (la == nu) {
            labels[i - 1][j - 1] = nu;
            self(self, idx + 1, prob);
            return;
        }
        const TransitionKernel& k = detail::rules_kernel(la, rules);
        const int s = detail::up_index(la, nu);
        Neighborhoods nb = neighborhoods(la);
        for (int r = 0; r <= k.d; ++r) {
            labels[i - 1][j - 1] = nb.dstar[r];
            int saved = ones[i];
            if (r == 0) ones[i] = j;
            self(self, idx + 1, prob * k.p_bar(r, s));
            ones[i] = saved;
        }
    };
    rec(rec, 0, RationalQT::one());
    return dist;
}

/// Classical deterministic Robinson-Schensted insertion, used as the oracle
/// for the q = t = 0 degeneration.
enum class RSVariant { row, column };

inline TableauPair classical_rs(const Permutation& sigma, RSVariant variant = RSVariant::row) {
    const int n = sigma.n();
    std::vector<std::vector<int>> lines; // rows for row insertion, columns for column insertion
    std::vector<Partition> qchain{Partition()};
    for (int step = 1; step <= n; ++step) {
        int k = sigma(step);
        std::size_t idx = 0;
        while (true) {
            if (idx == lines.size()) {
                lines.push_back({k});
                break;
            }
            auto& line = lines[idx];
            auto it = std::upper_bound(line.begin(), line.end(), k);
            if (it == line.end()) {
                line.push_back(k);
                break;
            }
            std::swap(*it, k);
            ++idx;
        }
        std::vector<int> parts;
        for (const auto& line : lines) parts.push_back(static_cast<int>(line.size()));
        std::sort(parts.begin(), parts.end(), std::greater<int>());
        Partition shape{parts};
        if (variant == RSVariant::column) shape = shape.conjugate();
        qchain.push_back(shape);
    }
    // rebuild P from the final line configuration
    std::map<Cell, int> pfill;
    for (std::size_t l = 0; l < lines.size(); ++l)
        for (std::size_t x = 0; x < lines[l].size(); ++x) {
            Cell c = variant == RSVariant::row ? Cell{static_cast<int>(x) + 1, static_cast<int>(l) + 1}
                                               : Cell{static_cast<int>(l) + 1, static_cast<int>(x) + 1};
            pfill[c] = lines[l][x];
        }
    PartialTableau pt(pfill);
    StandardTableau P = to_standard(pt);
    StandardTableau Q = StandardTableau(qchain);
    return {P, Q};
}

/// The deterministic growth diagram induced by the row or column insertion
/// bijection at every type III square.
inline GrowthDiagram fgrowth(const Permutation& sigma, InsertionRules rules) {
    const int n = sigma.n();
    GrowthDiagram g;
    g.sigma = sigma;
    g.labels.assign(n + 1, std::vector<Partition>(n + 1));
    g.square_prob.assign(n, std::vector<RationalQT>(n, RationalQT::one()));
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) {
            const Partition& mu = g.labels[i - 1][j - 1];
            const Partition& la = g.labels[i][j - 1];
            const Partition& rho = g.labels[i - 1][j];
            const bool a = sigma(j) == i;
            if (la != rho) {
                g.labels[i][j] = union_of(la, rho);
                continue;
            }
            if (!a && mu == la) {
                g.labels[i][j] = mu;
                continue;
            }
            Neighborhoods nb = neighborhoods(la);
            const int d = static_cast<int>(nb.up.size()) - 1;
            const int r = a ? 0 : detail::dstar_index(la, mu);
            const int s = rules == InsertionRules::row ? r : (r == 0 ? d : r - 1);
            g.labels[i][j] = nb.up[s];
        }
    return g;
}

namespace detail {

/// Kernel entries evaluated at a fixed rational point, cached per partition.
class EvalKernelCache {
public:
    EvalKernelCache(Rat qv, Rat tv, InsertionRules rules) : qv_(std::move(qv)), tv_(std::move(tv)), rules_(rules) {
        bool unit_box = qv_ >= 0 && qv_ < 1 && tv_ >= 0 && tv_ < 1;
        bool beyond = qv_ > 1 && tv_ > 1;
        if (!unit_box && !beyond)
            fail(errc::invalid_parameter_range,
                 "q and t must both lie in [0,1) or both in (1,infinity) for sampling");
    }

    const std::vector<std::vector<Rat>>& forward(const Partition& la) { return get(la).fwd; }
    const std::vector<std::vector<Rat>>& backward(const Partition& la) { return get(la).bwd; }

private:
    struct Evaluated {
        std::vector<std::vector<Rat>> fwd, bwd;
    };
    const Evaluated& get(const Partition& la) {
        auto it = cache_.find(la);
        if (it != cache_.end()) return it->second;
        const TransitionKernel& k = rules_kernel(la, rules_);
        Evaluated e;
        e.fwd.assign(k.d + 1, std::vector<Rat>(k.d + 1));
        e.bwd.assign(k.d + 1, std::vector<Rat>(k.d + 1));
        for (int r = 0; r <= k.d; ++r)
            for (int s = 0; s <= k.d; ++s) {
                e.fwd[r][s] = k.p(r, s).eval(qv_, tv_);
                e.bwd[r][s] = k.p_bar(r, s).eval(qv_, tv_);
            }
        return cache_.emplace(la, std::move(e)).first->second;
    }

    Rat qv_, tv_;
    InsertionRules rules_;
    std::map<Partition, Evaluated> cache_;
};

} // namespace detail

/// One forward sample of the growth process at exact rational parameters.
inline GrowthDiagram sample_forward_growth(const Permutation& sigma, const Rat& qv, const Rat& tv,
                                           SplitMix64& gen, InsertionRules rules = InsertionRules::row) {
    detail::EvalKernelCache cache(qv, tv, rules);
    const int n = sigma.n();
    GrowthDiagram g;
    g.sigma = sigma;
    g.labels.assign(n + 1, std::vector<Partition>(n + 1));
    g.square_prob.assign(n, std::vector<RationalQT>(n, RationalQT::one()));
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) {
            const Partition& mu = g.labels[i - 1][j - 1];
            const Partition& la = g.labels[i][j - 1];
            const Partition& rho = g.labels[i - 1][j];
            const bool a = sigma(j) == i;
            if (la != rho) {
                g.labels[i][j] = union_of(la, rho);
                continue;
            }
            if (!a && mu == la) {
                g.labels[i][j] = mu;
                continue;
            }
            const int r = a ? 0 : detail::dstar_index(la, mu);
            const auto& probs = cache.forward(la);
            std::size_t s = gen.draw(probs[r]);
            g.labels[i][j] = neighborhoods(la).up[s];
        }
    return g;
}

inline TableauPair sample_forward(const Permutation& sigma, const Rat& qv, const Rat& tv, SplitMix64& gen,
                                  InsertionRules rules = InsertionRules::row) {
    GrowthDiagram g = sample_forward_growth(sigma, qv, tv, gen, rules);
    return {g.insertion_tableau(), g.recording_tableau()};
}

/// One backward sample from a tableau pair to a permutation.
inline Permutation sample_backward(const StandardTableau& P, const StandardTableau& Q, const Rat& qv,
                                   const Rat& tv, SplitMix64& gen, InsertionRules rules = InsertionRules::row) {
    if (P.shape() != Q.shape()) fail(errc::shape_mismatch, "tableaux must have equal shapes");
    detail::EvalKernelCache cache(qv, tv, rules);
    const int n = P.entries();
    std::vector<std::vector<Partition>> labels(n + 1, std::vector<Partition>(n + 1));
    for (int i = 0; i <= n; ++i) labels[i][n] = P.shape_at(i);
    for (int j = 0; j <= n; ++j) labels[n][j] = Q.shape_at(j);
    std::vector<int> one_line(n, 0);
    for (int i = n; i >= 1; --i)
        for (int j = n; j >= 1; --j) {
            const Partition& la = labels[i][j - 1];
            const Partition& rho = labels[i - 1][j];
            const Partition& nu = labels[i][j];
            if (la != rho) {
                labels[i - 1][j - 1] = intersection_of(la, rho);
                continue;
            }
            if (la == nu) {
                labels[i - 1][j - 1] = nu;
                continue;
            }
            const int s = detail::up_index(la, nu);
            const auto& probs = cache.backward(la);
            std::vector<Rat> column(probs.size());
            for (std::size_t r = 0; r < probs.size(); ++r) column[r] = probs[r][s];
            std::size_t r = gen.draw(column);
            labels[i - 1][j - 1] = neighborhoods(la).dstar[r];
            if (r == 0) one_line[j - 1] = i;
        }
    return Permutation(one_line);
}

/// Exact distribution of inserting k into a partial tableau: the chain of the
/// new tableau follows the original chain through forced and kernel-weighted
/// steps exactly as in a single growth column.
inline Distribution<PartialTableau> qrst_insert_exact(const PartialTableau& T, int k) {
    if (T.has_entry(k)) fail(errc::duplicate_entry, "value already present in the tableau");
    std::vector<int> entries = T.sorted_entries();
    const int m = static_cast<int>(entries.size());
    std::vector<Partition> old_chain{Partition()};
    for (int j = 0; j < m; ++j) old_chain.push_back(T.shape_at_most(entries[j]));
    int p = 0;
    while (p < m && entries[p] < k) ++p;
    std::vector<int> new_entries(entries.begin(), entries.begin() + p);
    new_entries.push_back(k);
    new_entries.insert(new_entries.end(), entries.begin() + p, entries.end());

    Distribution<PartialTableau> dist;
    std::vector<Partition> new_chain(m + 2);
    for (int j = 0; j <= p; ++j) new_chain[j] = old_chain[j];
    auto rec = [&](auto&& self, int j, const RationalQT& prob) -> void {
        if (j == m) {
            dist.add(PartialTableau::from_chain(new_entries, new_chain), prob);
            return;
        }
        const Partition& la = old_chain[j + 1];
        const Partition& cur = new_chain[j + 1];
        if (la != cur) {
            new_chain[j + 2] = union_of(la, cur);
            self(self, j + 1, prob);
            return;
        }
        const TransitionKernel& kr = kernel(la);
        const int r = detail::dstar_index(la, old_chain[j]);
        Neighborhoods nb = neighborhoods(la);
        for (int s = 0; s <= kr.d; ++s) {
            new_chain[j + 2] = nb.up[s];
            self(self, j + 1, prob * kr.p(r, s));
        }
    };
    const Partition& base = old_chain[p];
    const TransitionKernel& k0 = kernel(base);
    Neighborhoods nb0 = neighborhoods(base);
    for (int s = 0; s <= k0.d; ++s) {
        new_chain[p + 1] = nb0.up[s];
        rec(rec, p, k0.p(0, s));
    }
    return dist;
}

/// One sampled outcome of the insertion at exact rational parameters.
inline PartialTableau qrst_insert_sample(const PartialTableau& T, int k, const Rat& qv, const Rat& tv,
                                         SplitMix64& gen) {
    if (T.has_entry(k)) fail(errc::duplicate_entry, "value already present in the tableau");
    detail::EvalKernelCache cache(qv, tv, InsertionRules::row);
    std::vector<int> entries = T.sorted_entries();
    const int m = static_cast<int>(entries.size());
    std::vector<Partition> old_chain{Partition()};
    for (int j = 0; j < m; ++j) old_chain.push_back(T.shape_at_most(entries[j]));
    int p = 0;
    while (p < m && entries[p] < k) ++p;
    std::vector<int> new_entries(entries.begin(), entries.begin() + p);
    new_entries.push_back(k);
    new_entries.insert(new_entries.end(), entries.begin() + p, entries.end());

    std::vector<Partition> new_chain(m + 2);
    for (int j = 0; j <= p; ++j) new_chain[j] = old_chain[j];
    {
        const Partition& base = old_chain[p];
        std::size_t s = gen.draw(cache.forward(base)[0]);
        new_chain[p + 1] = neighborhoods(base).up[s];
    }
    for (int j = p; j < m; ++j) {
        const Partition& la = old_chain[j + 1];
        const Partition& cur = new_chain[j + 1];
        if (la != cur) {
            new_chain[j + 2] = union_of(la, cur);
            continue;
        }
        const int r = detail::dstar_index(la, old_chain[j]);
        std::size_t s = gen.draw(cache.forward(la)[r]);
        new_chain[j + 2] = neighborhoods(la).up[s];
    }
    return PartialTableau::from_chain(new_entries, new_chain);
}

} // namespace qrst
