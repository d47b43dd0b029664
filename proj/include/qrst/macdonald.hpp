#pragma once

#include <functional>
#include <vector>

#include "qrst/partition.hpp"
#include "qrst/tableau.hpp"

namespace qrst {

/// b_{i,j} = (1 - q^i t^{j+1}) / (1 - q^{i+1} t^j), kept factored.
inline BracketProduct b_coeff_factored(int i, int j) {
    if ((i + 1 == 0 && j == 0) || (i == 0 && j + 1 == 0))
        fail(errc::degenerate_bracket, "b coefficient with a vanishing bracket");
    BracketProduct b = BracketProduct::one();
    b.mul_bracket(i, j + 1).div_bracket(i + 1, j);
    return b;
}

inline RationalQT b_coeff(int i, int j) { return b_coeff_factored(i, j).to_rational(); }

/// b_lambda(c) = b_{arm, leg} for a cell of lambda.
inline BracketProduct b_cell(const Partition& lambda, Cell c) {
    CellStats s = cell_stats(lambda, c);
    return b_coeff_factored(s.arm, s.leg);
}

/// Cells of mu lying in a row (R) or column (C) that contains a cell of
/// lambda/mu. Requires mu inside lambda.
struct RCSets {
    std::vector<Cell> R;
    std::vector<Cell> C;
};

inline RCSets rc_sets(const Partition& lambda, const Partition& mu) {
    if (!lambda.contains(mu)) fail(errc::not_contained, "inner shape not contained in outer shape");
    RCSets out;
    std::vector<bool> row_hit(lambda.rows() + 1, false);
    std::vector<bool> col_hit(lambda.empty() ? 1 : lambda.part(1) + 1, false);
    for (int y = 1; y <= lambda.rows(); ++y)
        for (int x = mu.part(y) + 1; x <= lambda.part(y); ++x) {
            row_hit[y] = true;
            col_hit[x] = true;
        }
    for (Cell c : mu.cells()) {
        if (row_hit[c.y]) out.R.push_back(c);
        if (col_hit[c.x]) out.C.push_back(c);
    }
    return out;
}

/// A horizontal strip lambda/mu (at most one cell of the skew per column).
struct SkewStrip {
    Partition outer;
    Partition inner;

    SkewStrip(Partition out, Partition in) : outer(std::move(out)), inner(std::move(in)) {
        if (!outer.contains(inner)) fail(errc::not_contained, "inner shape not contained in outer shape");
        for (int y = 1; y <= outer.rows(); ++y)
            if (inner.part(y) < outer.part(y + 1))
                fail(errc::not_horizontal_strip, "skew shape is not a horizontal strip");
    }
    int cell_count() const { return outer.size() - inner.size(); }
};

struct PsiPhi {
    RationalQT psi;
    RationalQT phi;
};

/// The branching coefficients of the tableau expansion:
///   psi = prod over R - C of b_mu(c)/b_lambda(c)
///   phi = prod over the strip of b_lambda(c) times prod over C of
///         b_lambda(c)/b_mu(c).
inline PsiPhi psi_phi_factored(const SkewStrip& s, BracketProduct* psi_f = nullptr,
                               BracketProduct* phi_f = nullptr) {
    RCSets rc = rc_sets(s.outer, s.inner);
    std::vector<bool> in_c_col(s.outer.empty() ? 1 : s.outer.part(1) + 1, false);
    for (Cell c : rc.C) in_c_col[c.x] = true;

    BracketProduct psi = BracketProduct::one();
    for (Cell c : rc.R) {
        bool also_in_c = false;
        for (Cell cc : rc.C)
            if (cc == c) {
                also_in_c = true;
                break;
            }
        if (also_in_c) continue;
        psi *= b_cell(s.inner, c);
        psi /= b_cell(s.outer, c);
    }
    BracketProduct phi = BracketProduct::one();
    for (int y = 1; y <= s.outer.rows(); ++y)
        for (int x = s.inner.part(y) + 1; x <= s.outer.part(y); ++x) phi *= b_cell(s.outer, Cell{x, y});
    for (Cell c : rc.C) {
        phi *= b_cell(s.outer, c);
        phi /= b_cell(s.inner, c);
    }
    if (psi_f) *psi_f = psi;
    if (phi_f) *phi_f = phi;
    return PsiPhi{psi.to_rational(), phi.to_rational()};
}

inline PsiPhi psi_phi(const SkewStrip& s) { return psi_phi_factored(s); }

/// psi_T and phi_T: products of the strip coefficients along a chain of
/// shapes. The chain must start at the empty partition.
inline PsiPhi tableau_weights(const std::vector<Partition>& chain) {
    BracketProduct psi = BracketProduct::one(), phi = BracketProduct::one();
    for (std::size_t i = 1; i < chain.size(); ++i) {
        BracketProduct ps, ph;
        psi_phi_factored(SkewStrip(chain[i], chain[i - 1]), &ps, &ph);
        psi *= ps;
        phi *= ph;
    }
    return PsiPhi{psi.to_rational(), phi.to_rational()};
}

inline PsiPhi tableau_weights(const StandardTableau& t) { return tableau_weights(t.chain()); }

/// Weights of the down and up neighborhoods:
///   omega_lambda(mu)  = prod_R b_mu/b_lambda * prod_C b_lambda/b_mu  (1 at mu = lambda)
///   omega_bar_lambda(nu) = prod_R b_lambda/b_nu * prod_C b_nu/b_lambda.
struct NeighborhoodWeights {
    std::vector<RationalQT> omega;     // indexed like dstar: omega[0] = 1
    std::vector<RationalQT> omega_bar; // indexed like up
};

inline NeighborhoodWeights weights(const Partition& lambda) {
    NeighborhoodWeights w;
    Neighborhoods nb = neighborhoods(lambda);
    w.omega.push_back(RationalQT::one());
    for (std::size_t r = 1; r < nb.dstar.size(); ++r) {
        const Partition& mu = nb.dstar[r];
        RCSets rc = rc_sets(lambda, mu);
        BracketProduct p = BracketProduct::one();
        for (Cell c : rc.R) p *= b_cell(mu, c) / b_cell(lambda, c);
        for (Cell c : rc.C) p *= b_cell(lambda, c) / b_cell(mu, c);
        w.omega.push_back(p.to_rational());
    }
    for (const Partition& nu : nb.up) {
        RCSets rc = rc_sets(nu, lambda);
        BracketProduct p = BracketProduct::one();
        for (Cell c : rc.R) p *= b_cell(lambda, c) / b_cell(nu, c);
        for (Cell c : rc.C) p *= b_cell(nu, c) / b_cell(lambda, c);
        w.omega_bar.push_back(p.to_rational());
    }
    return w;
}

/// Enumerates all chains empty = S_0 <= S_1 <= ... <= S_k = lambda with
/// horizontal-strip steps; these are the semistandard tableaux of shape
/// lambda with entries at most k.
inline void for_each_ssyt_chain(const Partition& lambda, int k,
                                const std::function<void(const std::vector<Partition>&)>& fn) {
    std::vector<Partition> chain(k + 1);
    chain[k] = lambda;
    auto rec = [&](auto&& self, int level) -> void {
        if (level == 0) {
            if (chain[0].empty()) fn(chain);
            return;
        }
        // enumerate mu <= chain[level] with chain[level]/mu a horizontal strip
        const Partition& outer = chain[level];
        std::vector<int> mu(outer.rows());
        auto build = [&](auto&& bself, int y) -> void {
            if (y > outer.rows()) {
                for (std::size_t i = 1; i < mu.size(); ++i)
                    if (mu[i] > mu[i - 1]) return;
                std::vector<int> parts;
                for (int p : mu)
                    if (p > 0) parts.push_back(p);
                chain[level - 1] = Partition(parts);
                self(self, level - 1);
                return;
            }
            int lo = outer.part(y + 1);            // horizontal strip: mu_y >= outer_{y+1}
            int hi = outer.part(y);                // containment
            for (int v = hi; v >= lo; --v) {
                mu[y - 1] = v;
                bself(bself, y + 1);
            }
        };
        build(build, 1);
    };
    rec(rec, k);
}

enum class MacdonaldKind { P, Q };

/// Finite-variable monomial expansion of the Macdonald polynomial, evaluated
/// exactly at rational x, q, t. The sum runs over semistandard tableaux with
/// entries bounded by the number of variables.
inline Rat macdonald_eval(const Partition& lambda, MacdonaldKind kind, const std::vector<Rat>& xs,
                          const Rat& qv, const Rat& tv, int size_bound = 12) {
    if (lambda.size() > size_bound) fail(errc::size_bound_exceeded, "shape too large for enumeration");
    const int k = static_cast<int>(xs.size());
    Rat total(0);
    for_each_ssyt_chain(lambda, k, [&](const std::vector<Partition>& chain) {
        BracketProduct weight = BracketProduct::one();
        Rat mono(1);
        for (int i = 1; i <= k; ++i) {
            BracketProduct ps, ph;
            psi_phi_factored(SkewStrip(chain[i], chain[i - 1]), &ps, &ph);
            weight *= (kind == MacdonaldKind::P) ? ps : ph;
            int cells = chain[i].size() - chain[i - 1].size();
            mono *= rat_pow(xs[i - 1], cells);
        }
        total += weight.eval(qv, tv) * mono;
    });
    return total;
}

} // namespace qrst
