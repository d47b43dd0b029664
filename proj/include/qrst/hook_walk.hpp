#pragma once

#include <mutex>

#include "qrst/distribution.hpp"
#include "qrst/kernel.hpp"
#include "qrst/prng.hpp"

namespace qrst {

/// Arm and leg of a cell in the first-quadrant complement of lambda: the
/// strictly-between lattice cells toward the diagram in the same row and
/// column. A complement cell is an outer corner exactly when its exterior
/// hook is 1.
struct ExteriorStats {
    std::vector<Cell> arm_cells; // (x-1,y), ..., (lambda_y+1, y), stored left to right
    std::vector<Cell> leg_cells; // (x, y-1), ..., (x, lambda'_x+1), stored bottom to top
    int arm = 0;
    int leg = 0;
    int hook = 1;
};

inline ExteriorStats exterior_stats(const Partition& lambda, Cell c) {
    if (lambda.contains_cell(c)) fail(errc::cell_inside_diagram, "cell lies inside the diagram");
    ExteriorStats s;
    for (int i = lambda.part(c.y) + 1; i < c.x; ++i) s.arm_cells.push_back(Cell{i, c.y});
    for (int j = lambda.col_height(c.x) + 1; j < c.y; ++j) s.leg_cells.push_back(Cell{c.x, j});
    s.arm = static_cast<int>(s.arm_cells.size());
    s.leg = static_cast<int>(s.leg_cells.size());
    s.hook = s.arm + s.leg + 1;
    return s;
}

inline bool is_outer_corner(const Partition& lambda, Cell c) {
    return !lambda.contains_cell(c) && exterior_stats(lambda, c).hook == 1;
}

/// One step of the exterior walk: geometric weights along the arm and leg.
///   P(c -> (x-i, y)) = q^{a-i} t^l (1-q) / (1 - q^a t^l)
///   P(c -> (x, y-j)) = t^{j-1} (1-t) / (1 - q^a t^l)
inline Distribution<Cell> qt_step_distribution(const Partition& lambda, Cell c) {
    ExteriorStats s = exterior_stats(lambda, c);
    if (s.hook == 1) fail(errc::already_absorbed, "cell is an outer corner; the walk has ended");
    Distribution<Cell> d;
    BracketProduct den = BracketProduct::bracket(s.arm, s.leg);
    for (int i = 1; i <= s.arm; ++i) {
        BracketProduct p = BracketProduct::monomial(Rat(1), s.arm - i, s.leg);
        p.mul_bracket(1, 0);
        d.add(Cell{c.x - i, c.y}, (p / den).to_rational());
    }
    for (int j = 1; j <= s.leg; ++j) {
        BracketProduct p = BracketProduct::monomial(Rat(1), 0, j - 1);
        p.mul_bracket(0, 1);
        d.add(Cell{c.x, c.y - j}, (p / den).to_rational());
    }
    return d;
}

namespace detail {

/// Absorption probabilities of the walk, one table per partition, memoized
/// over the down-left-closed set of reachable cells. Index s refers to the
/// boundary-parameter order of U(lambda). Values are kept factored: every
/// absorption probability is a product of a monomial and brackets, and the
/// recursion preserves that shape, which keeps the exact arithmetic small.
class HookWalkTable {
public:
    explicit HookWalkTable(Partition lambda)
        : lambda_(std::move(lambda)), ups_(neighborhoods(lambda_).up) {}

    const std::vector<Partition>& ups() const { return ups_; }

    const std::vector<BracketProduct>& at(Cell c) {
        auto it = table_.find(c);
        if (it != table_.end()) return it->second;
        std::vector<BracketProduct> q(ups_.size());
        ExteriorStats s = exterior_stats(lambda_, c);
        if (s.hook == 1) {
            for (std::size_t k = 0; k < ups_.size(); ++k)
                if (ups_[k].skew_cell(lambda_) == c) q[k] = BracketProduct::one();
        } else {
            // gather weighted child values per corner and sum them factored;
            // the step denominator 1 - q^a t^l is divided out at the end
            std::vector<std::vector<BracketProduct>> parts(ups_.size());
            for (int i = 1; i <= s.arm; ++i) {
                const std::vector<BracketProduct>& sub = at(Cell{c.x - i, c.y});
                BracketProduct w = BracketProduct::monomial(Rat(1), s.arm - i, s.leg);
                w.mul_bracket(1, 0);
                for (std::size_t k = 0; k < ups_.size(); ++k)
                    if (!sub[k].is_zero()) parts[k].push_back(w * sub[k]);
            }
            for (int j = 1; j <= s.leg; ++j) {
                const std::vector<BracketProduct>& sub = at(Cell{c.x, c.y - j});
                BracketProduct w = BracketProduct::monomial(Rat(1), 0, j - 1);
                w.mul_bracket(0, 1);
                for (std::size_t k = 0; k < ups_.size(); ++k)
                    if (!sub[k].is_zero()) parts[k].push_back(w * sub[k]);
            }
            for (std::size_t k = 0; k < ups_.size(); ++k) {
                auto total = factored_sum(parts[k]);
                if (!total)
                    fail(errc::parse_error, "internal: absorption value did not stay factored");
                q[k] = *total;
                q[k].div_bracket(s.arm, s.leg);
            }
        }
        return table_.emplace(c, std::move(q)).first->second;
    }

private:
    Partition lambda_;
    std::vector<Partition> ups_;
    std::map<Cell, std::vector<BracketProduct>> table_;
};

} // namespace detail

/// Exact absorption distribution over U(lambda) for a walk started at any
/// exterior cell. Tables are memoized per partition; the lock is held for the
/// whole table access because entries fill in lazily.
inline Distribution<Partition> absorption_exact(const Partition& lambda, Cell start) {
    static std::mutex mx;
    static std::map<Partition, detail::HookWalkTable> cache;
    std::scoped_lock lock(mx);
    detail::HookWalkTable& table =
        cache.emplace(lambda, detail::HookWalkTable(lambda)).first->second;
    const std::vector<BracketProduct>& q = table.at(start);
    Distribution<Partition> d;
    for (std::size_t k = 0; k < table.ups().size(); ++k)
        if (!q[k].is_zero()) d.add(table.ups()[k], q[k].to_rational());
    return d;
}

enum class WalkAxis { row, column };

/// Closed forms for starts aligned with an outer corner: offset u along the
/// row of the corner, or v along its column.
inline RationalQT axis_closed_form(const Partition& lambda, const Partition& nu, int offset, WalkAxis axis) {
    if (!nu.covers(lambda)) fail(errc::not_cover, "need an outer corner of lambda");
    if (offset < 1) fail(errc::parse_error, "offset must be at least 1");
    Cell corner = nu.skew_cell(lambda);
    if (axis == WalkAxis::row) {
        Cell c{corner.x + offset, corner.y};
        ExteriorStats in_la = exterior_stats(lambda, c);
        ExteriorStats in_nu = exterior_stats(nu, c);
        BracketProduct p = BracketProduct::monomial(Rat(1), 0, in_la.leg);
        p.mul_bracket(1, 0).div_bracket(in_nu.arm + 1, in_nu.leg);
        for (Cell cc : in_la.arm_cells) {
            if (cc == corner) continue;
            ExteriorStats a = exterior_stats(lambda, cc);
            ExteriorStats b = exterior_stats(nu, cc);
            p.mul_bracket(a.arm + 1, a.leg).div_bracket(b.arm + 1, b.leg);
        }
        return p.to_rational();
    }
    Cell c{corner.x, corner.y + offset};
    ExteriorStats in_nu = exterior_stats(nu, c);
    BracketProduct p = BracketProduct::one();
    p.mul_bracket(0, 1).div_bracket(in_nu.arm, in_nu.leg + 1);
    for (Cell cc : exterior_stats(lambda, c).leg_cells) {
        if (cc == corner) continue;
        ExteriorStats a = exterior_stats(lambda, cc);
        ExteriorStats b = exterior_stats(nu, cc);
        p.mul_bracket(a.arm, a.leg + 1).div_bracket(b.arm, b.leg + 1);
    }
    return p.to_rational();
}

/// One sampled walk at exact rational parameters; returns the absorbing
/// corner as a partition of U(lambda).
inline Partition walk_sample(const Partition& lambda, Cell start, const Rat& qv, const Rat& tv,
                             SplitMix64& gen) {
    bool unit_box = qv >= 0 && qv < 1 && tv >= 0 && tv < 1;
    bool beyond = qv > 1 && tv > 1;
    if (!unit_box && !beyond)
        fail(errc::invalid_parameter_range,
             "q and t must both lie in [0,1) or both in (1,infinity) for sampling");
    Cell c = start;
    if (lambda.contains_cell(c)) fail(errc::cell_inside_diagram, "cell lies inside the diagram");
    while (!is_outer_corner(lambda, c)) {
        Distribution<Cell> step = qt_step_distribution(lambda, c);
        std::vector<Rat> w;
        w.reserve(step.size());
        for (const auto& [cell, prob] : step.entries()) w.push_back(prob.eval(qv, tv));
        c = step.entries()[gen.draw(w)].first;
    }
    for (const Partition& nu : neighborhoods(lambda).up)
        if (nu.skew_cell(lambda) == c) return nu;
    fail(errc::not_cover, "walk ended off the boundary"); // unreachable
}

} // namespace qrst
