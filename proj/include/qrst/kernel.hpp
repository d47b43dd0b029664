#pragma once

#include <mutex>
#include <vector>

#include "qrst/macdonald.hpp"

namespace qrst {

/// alpha_{nu/la} (bar = false) or its companion alpha-bar (bar = true) for a
/// covering pair la < nu, as a product over the row and column sets.
inline BracketProduct alpha_factored(const Partition& la, const Partition& nu, bool bar) {
    if (!nu.covers(la)) fail(errc::not_cover, "alpha requires a covering pair");
    RCSets rc = rc_sets(nu, la);
    BracketProduct p = BracketProduct::one();
    auto row_factor = [&](Cell c, const Partition& shape) {
        CellStats s = cell_stats(shape, c);
        return bar ? QTExp{s.arm + 1, s.leg} : QTExp{s.arm, s.leg + 1};
    };
    auto col_factor = [&](Cell c, const Partition& shape) {
        CellStats s = cell_stats(shape, c);
        return bar ? QTExp{s.arm, s.leg + 1} : QTExp{s.arm + 1, s.leg};
    };
    for (Cell c : rc.R) {
        QTExp num = row_factor(c, la), den = row_factor(c, nu);
        p.mul_bracket(num.q, num.t).div_bracket(den.q, den.t);
    }
    for (Cell c : rc.C) {
        QTExp num = col_factor(c, la), den = col_factor(c, nu);
        p.mul_bracket(num.q, num.t).div_bracket(den.q, den.t);
    }
    return p;
}

struct AlphaPair {
    RationalQT alpha;
    RationalQT alpha_bar;
};

inline AlphaPair alpha_pair(const Partition& la, const Partition& nu) {
    return AlphaPair{alpha_factored(la, nu, false).to_rational(), alpha_factored(la, nu, true).to_rational()};
}

/// The unique cell of lambda at the crossing of the row/column of nu/lambda
/// and the column/row of lambda/mu. When the two skew cells share a row or
/// column this is the cell lambda/mu itself.
inline Cell corner_cell(const Partition& la, const Partition& mu, const Partition& nu) {
    if (!la.covers(mu) || !nu.covers(la)) fail(errc::not_cover_chain, "need mu < la < nu");
    Cell add = nu.skew_cell(la);
    Cell rem = la.skew_cell(mu);
    if (add.x <= rem.x) return Cell{add.x, rem.y};
    return Cell{rem.x, add.y};
}

enum class Formulation { definition, explicit_params, lagrange };

/// The per-partition probabilistic bijection between D*(lambda) and
/// U(lambda): forward[r][s] is the probability of moving from the r-th
/// element of D*(lambda) to the s-th element of U(lambda); backward[r][s] the
/// reverse. Rows of forward and columns of backward each sum to 1.
struct TransitionKernel {
    Partition lambda;
    int d = 0; // entries form a (d+1) x (d+1) matrix
    std::vector<std::vector<RationalQT>> forward;
    std::vector<std::vector<RationalQT>> backward;

    const RationalQT& p(int r, int s) const { return forward[r][s]; }
    const RationalQT& p_bar(int r, int s) const { return backward[r][s]; }
};

namespace detail {

inline TransitionKernel empty_kernel() {
    TransitionKernel k;
    k.lambda = Partition();
    k.d = 0;
    k.forward = {{RationalQT::one()}};
    k.backward = {{RationalQT::one()}};
    return k;
}

/// Definition route: alpha/beta/gamma assembled from the row/column cell sets
/// and the leg/arm count statistics of the two skew cells.
inline TransitionKernel kernel_definition(const Partition& la) {
    if (la.empty()) return empty_kernel();
    Neighborhoods nb = neighborhoods(la);
    const int d = static_cast<int>(nb.up.size()) - 1;
    TransitionKernel k;
    k.lambda = la;
    k.d = d;
    k.forward.assign(d + 1, std::vector<RationalQT>(d + 1));
    k.backward.assign(d + 1, std::vector<RationalQT>(d + 1));
    for (int s = 0; s <= d; ++s) {
        const Partition& nu = nb.up[s];
        Cell add = nu.skew_cell(la);
        BracketProduct alpha = alpha_factored(la, nu, false);
        BracketProduct alpha_bar = alpha_factored(la, nu, true);
        for (int r = 0; r <= d; ++r) {
            if (r == 0) {
                k.forward[0][s] = (BracketProduct::monomial(Rat(1), 0, add.y - 1) * alpha).to_rational();
                k.backward[0][s] = (BracketProduct::monomial(Rat(1), 0, add.y - 1) * alpha_bar).to_rational();
                continue;
            }
            const Partition& mu = nb.dstar[r];
            Cell rem = la.skew_cell(mu);
            const int A = (rem.x - 1) - (add.x - 1); // n'(la/mu) - n'(nu/la)
            const int B = (add.y - 1) - (rem.y - 1); // n(nu/la) - n(la/mu)
            BracketProduct gamma = BracketProduct::one();
            gamma.mul_bracket(A, B).mul_bracket(A + 1, B - 1).div_bracket(1, 0).div_bracket(0, 1);
            BracketProduct beta = alpha_factored(mu, la, false).inverse();
            BracketProduct beta_bar = alpha_factored(mu, la, true).inverse();
            BracketProduct tpow = BracketProduct::monomial(Rat(1), 0, B - 1);
            k.forward[r][s] = (tpow * alpha * beta / gamma).to_rational();
            k.backward[r][s] = (tpow * alpha_bar * beta_bar / gamma).to_rational();
        }
    }
    return k;
}

/// Pieces of the parameter route. marks: 0 plain [i,j], +1 -> [i+1,j-1],
/// -1 -> [i-1,j+1].
inline void mul_marked(BracketProduct& p, int i, int j, int mark, bool inverse = false) {
    int e = inverse ? -1 : 1;
    p.mul_bracket(i + mark, j - mark, e);
}

inline BracketProduct alpha_params(const Parameters& pr, int s, int mark) {
    BracketProduct p = BracketProduct::one();
    for (int i = 1; i <= s; ++i) {
        mul_marked(p, pr.h_sum(i, s), pr.v_sum(i + 1, s), mark == 0 ? 0 : -1);
        mul_marked(p, pr.h_sum(i, s), pr.v_sum(i, s), mark == 0 ? 0 : -1, true);
    }
    for (int i = s + 1; i <= pr.d; ++i) {
        mul_marked(p, pr.h_sum(s + 1, i - 1), pr.v_sum(s + 1, i), mark == 0 ? 0 : +1);
        mul_marked(p, pr.h_sum(s + 1, i), pr.v_sum(s + 1, i), mark == 0 ? 0 : +1, true);
    }
    return p;
}

inline BracketProduct beta_params(const Parameters& pr, int r, bool bar) {
    // beta carries the +/- marks; beta-bar is the unmarked product
    BracketProduct p = BracketProduct::one();
    const int plus = bar ? 0 : +1;
    const int minus = bar ? 0 : -1;
    for (int i = 1; i <= r - 1; ++i) {
        mul_marked(p, pr.h_sum(i, r - 1), pr.v_sum(i, r), plus);
        mul_marked(p, pr.h_sum(i, r - 1), pr.v_sum(i + 1, r), plus, true);
    }
    mul_marked(p, 0, pr.v_at(r), plus);
    mul_marked(p, 0, 1, plus, true);
    mul_marked(p, pr.h_at(r), 0, minus);
    mul_marked(p, 1, 0, minus, true);
    for (int i = r + 1; i <= pr.d; ++i) {
        mul_marked(p, pr.h_sum(r, i), pr.v_sum(r + 1, i), minus);
        mul_marked(p, pr.h_sum(r, i - 1), pr.v_sum(r + 1, i), minus, true);
    }
    return p;
}

inline BracketProduct gamma_prime_params(const Parameters& pr, int r, int s) {
    BracketProduct p = BracketProduct::one();
    if (r <= s) {
        int i = pr.h_sum(r, s), j = pr.v_sum(r + 1, s);
        p.mul_bracket(i, j);
        mul_marked(p, i, j, -1);
    } else {
        int i = pr.h_sum(s + 1, r - 1), j = pr.v_sum(s + 1, r);
        p.mul_bracket(i, j);
        mul_marked(p, i, j, +1);
    }
    p.div_bracket(0, 1).div_bracket(1, 0);
    return p;
}

inline BracketProduct tau_params(const Parameters& pr, int r, int s, bool col) {
    if (!col) {
        if (r <= s) return BracketProduct::monomial(Rat(1), 0, pr.v_sum(r + 1, s));
        return BracketProduct::monomial(Rat(1), 1 + 2 * pr.h_sum(s + 1, r - 1), -1 + pr.v_sum(s + 1, r));
    }
    if (r <= s) return BracketProduct::monomial(Rat(1), -1 + pr.h_sum(r, s), 1 + 2 * pr.v_sum(r + 1, s));
    return BracketProduct::monomial(Rat(1), pr.h_sum(s + 1, r - 1), 0);
}

struct FactoredKernel {
    int d = 0;
    std::vector<std::vector<BracketProduct>> forward;
    std::vector<std::vector<BracketProduct>> backward;
};

/// Parameter route (the explicit closed forms), kept factored; col toggles
/// the variant obtained by substituting (q,t) -> (q^{-1}, t^{-1}).
inline FactoredKernel kernel_explicit_factored(const Partition& la, bool col) {
    FactoredKernel k;
    if (la.empty()) {
        k.forward = {{BracketProduct::one()}};
        k.backward = {{BracketProduct::one()}};
        return k;
    }
    Parameters pr = parameters(la);
    const int d = pr.d;
    k.d = d;
    k.forward.assign(d + 1, std::vector<BracketProduct>(d + 1));
    k.backward.assign(d + 1, std::vector<BracketProduct>(d + 1));
    for (int s = 0; s <= d; ++s) {
        BracketProduct alpha = alpha_params(pr, s, 0);
        BracketProduct alpha_bar = alpha_params(pr, s, 1);
        BracketProduct head = col ? BracketProduct::monomial(Rat(1), pr.h_sum(s + 1, d), 0)
                                  : BracketProduct::monomial(Rat(1), 0, pr.v_sum(1, s));
        k.forward[0][s] = head * alpha;
        k.backward[0][s] = head * alpha_bar;
        for (int r = 1; r <= d; ++r) {
            BracketProduct tau = tau_params(pr, r, s, col);
            BracketProduct gp = gamma_prime_params(pr, r, s);
            k.forward[r][s] = tau * alpha * beta_params(pr, r, false) / gp;
            k.backward[r][s] = tau * alpha_bar * beta_params(pr, r, true) / gp;
        }
    }
    return k;
}

inline TransitionKernel kernel_explicit(const Partition& la, bool col) {
    if (la.empty()) return empty_kernel();
    FactoredKernel f = kernel_explicit_factored(la, col);
    TransitionKernel k;
    k.lambda = la;
    k.d = f.d;
    k.forward.assign(f.d + 1, std::vector<RationalQT>(f.d + 1));
    k.backward.assign(f.d + 1, std::vector<RationalQT>(f.d + 1));
    for (int r = 0; r <= f.d; ++r)
        for (int s = 0; s <= f.d; ++s) {
            k.forward[r][s] = f.forward[r][s].to_rational();
            k.backward[r][s] = f.backward[r][s].to_rational();
        }
    return k;
}

/// Interpolation route: products of differences of the boundary monomials
/// a_i = q^{x_i} t^{y_i} and b_i = q^{x_{i-1}} t^{y_i}.
inline TransitionKernel kernel_lagrange(const Partition& la) {
    if (la.empty()) return empty_kernel();
    Parameters pr = parameters(la);
    const int d = pr.d;
    std::vector<QTExp> a(d + 1), b(d + 1);
    for (int i = 0; i <= d; ++i) a[i] = QTExp{pr.h_sum(1, i), pr.v_sum(1, i)};
    for (int i = 1; i <= d; ++i) b[i] = QTExp{pr.h_sum(1, i - 1), pr.v_sum(1, i)};

    TransitionKernel k;
    k.lambda = la;
    k.d = d;
    k.forward.assign(d + 1, std::vector<RationalQT>(d + 1));
    k.backward.assign(d + 1, std::vector<RationalQT>(d + 1));
    for (int s = 0; s <= d; ++s) {
        const QTExp as_fwd = a[s];
        const QTExp as_bwd{a[s].q - 1, a[s].t + 1};
        for (int pass = 0; pass < 2; ++pass) {
            const QTExp as = pass == 0 ? as_fwd : as_bwd;
            BracketProduct p0 = BracketProduct::one();
            for (int i = 1; i <= d; ++i) p0 *= monomial_difference(as, b[i]);
            for (int i = 0; i <= d; ++i)
                if (i != s) p0 /= monomial_difference(as, a[i]);
            (pass == 0 ? k.forward : k.backward)[0][s] = p0.to_rational();
            for (int r = 1; r <= d; ++r) {
                const QTExp br = pass == 0 ? QTExp{a[r - 1].q + 1, a[r].t - 1} : b[r];
                BracketProduct p = BracketProduct::one();
                for (int i = 0; i <= d; ++i) {
                    if (i == s) continue;
                    p *= monomial_difference(br, a[i]);
                    p /= monomial_difference(as, a[i]);
                }
                for (int i = 1; i <= d; ++i) {
                    if (i == r) continue;
                    p *= monomial_difference(as, b[i]);
                    p /= monomial_difference(br, b[i]);
                }
                (pass == 0 ? k.forward : k.backward)[r][s] = p.to_rational();
            }
        }
    }
    return k;
}

} // namespace detail

using detail::FactoredKernel;
using detail::kernel_explicit_factored;

inline TransitionKernel kernel_uncached(const Partition& la, Formulation f) {
    switch (f) {
    case Formulation::definition:
        return detail::kernel_definition(la);
    case Formulation::explicit_params:
        return detail::kernel_explicit(la, false);
    case Formulation::lagrange:
        return detail::kernel_lagrange(la);
    }
    fail(errc::parse_error, "unknown formulation");
}

/// Forward/backward kernel of a partition, memoized. The cache is guarded by
/// a mutex; identical inputs always yield equal values, so recomputation in
/// another thread is harmless.
inline const TransitionKernel& kernel(const Partition& la, Formulation f = Formulation::explicit_params) {
    static std::mutex mx;
    static std::map<std::pair<Partition, int>, TransitionKernel> cache;
    std::scoped_lock lock(mx);
    auto key = std::make_pair(la, static_cast<int>(f));
    auto it = cache.find(key);
    if (it == cache.end()) it = cache.emplace(key, kernel_uncached(la, f)).first;
    return it->second;
}

/// Column variant: entries are the row entries with (q,t) -> (q^{-1},t^{-1}),
/// built here from the factored closed form.
inline const TransitionKernel& kernel_col(const Partition& la) {
    static std::mutex mx;
    static std::map<Partition, TransitionKernel> cache;
    std::scoped_lock lock(mx);
    auto it = cache.find(la);
    if (it == cache.end()) it = cache.emplace(la, detail::kernel_explicit(la, true)).first;
    return it->second;
}

enum class Specialization {
    qWhittaker_row,
    qWhittaker_col,
    HL_row,
    HL_col,
    diagonal_qt,
    diagonal_limit_1,
};

namespace detail {

/// t = 0 forward closed forms. An index of 0 passed to the h-sums stands for
/// the infinite boundary segment, which kills the corresponding power of q.
inline TransitionKernel qwhittaker_row(const Partition& la) {
    if (la.empty()) return empty_kernel();
    Parameters pr = parameters(la);
    const int d = pr.d;
    TransitionKernel k;
    k.lambda = la;
    k.d = d;
    k.forward.assign(d + 1, std::vector<RationalQT>(d + 1, RationalQT::zero()));
    for (int r = 0; r <= d; ++r) {
        if (r == 0 || pr.v_at(r) > 1) {
            k.forward[r][r] = RationalQT::one();
            continue;
        }
        if (r == 1) {
            // infinite first horizontal segment: q(1-q^h0) -> q, 1-q^{1+h0} -> 1
            k.forward[1][0] = RationalQT::monomial(Rat(1), 1, 0);
            k.forward[1][1] = RationalQT::bracket(1, 0);
            continue;
        }
        const int h = pr.h_at(r - 1);
        RationalQT den = RationalQT::bracket(1 + h, 0);
        k.forward[r][r - 1] = RationalQT::monomial(Rat(1), 1, 0) * RationalQT::bracket(h, 0) / den;
        k.forward[r][r] = RationalQT::bracket(1, 0) / den;
    }
    // backward entries come from substituting the generic kernel
    const TransitionKernel& g = kernel(la, Formulation::explicit_params);
    k.backward.assign(d + 1, std::vector<RationalQT>(d + 1));
    for (int r = 0; r <= d; ++r)
        for (int s = 0; s <= d; ++s)
            k.backward[r][s] = g.backward[r][s].substitute(RationalQT::Subst::t_to_zero);
    return k;
}

inline TransitionKernel qwhittaker_col(const Partition& la) {
    if (la.empty()) return empty_kernel();
    Parameters pr = parameters(la);
    const int d = pr.d;
    auto one_minus_qh = [&](int s) {
        // 1 - q^{h_s}, with h_0 infinite
        return s == 0 ? RationalQT::one() : RationalQT::bracket(pr.h_at(s), 0);
    };
    TransitionKernel k;
    k.lambda = la;
    k.d = d;
    k.forward.assign(d + 1, std::vector<RationalQT>(d + 1, RationalQT::zero()));
    for (int s = 0; s <= d; ++s)
        k.forward[0][s] = RationalQT::monomial(Rat(1), pr.h_sum(s + 1, d), 0) * one_minus_qh(s);
    for (int r = 1; r <= d; ++r) {
        if (pr.v_at(r) > 1) {
            for (int s = 0; s < r; ++s)
                k.forward[r][s] = RationalQT::monomial(Rat(1), pr.h_sum(s + 1, r - 1), 0) * one_minus_qh(s);
            continue;
        }
        if (r == 1) {
            k.forward[1][0] = RationalQT::one();
            continue;
        }
        RationalQT den = RationalQT::bracket(1 + pr.h_at(r - 1), 0);
        for (int s = 0; s < r - 1; ++s)
            k.forward[r][s] = RationalQT::monomial(Rat(1), pr.h_sum(s + 1, r - 1), 0) *
                              RationalQT::bracket(1, 0) * one_minus_qh(s) / den;
        k.forward[r][r - 1] = RationalQT::bracket(pr.h_at(r - 1), 0) / den;
    }
    const TransitionKernel& g = kernel_col(la);
    k.backward.assign(d + 1, std::vector<RationalQT>(d + 1));
    for (int r = 0; r <= d; ++r)
        for (int s = 0; s <= d; ++s)
            k.backward[r][s] = g.backward[r][s].substitute(RationalQT::Subst::t_to_zero);
    return k;
}

/// Index/variable transport along conjugation: entry (r,s) of the row kernel
/// of lambda at swapped variables equals entry (d+1-r mod d+1, d-s) of the
/// column kernel of the conjugate.
inline TransitionKernel conjugate_transport(const Partition& la, const TransitionKernel& src) {
    const int d = src.d;
    TransitionKernel k;
    k.lambda = la;
    k.d = d;
    k.forward.assign(d + 1, std::vector<RationalQT>(d + 1));
    k.backward.assign(d + 1, std::vector<RationalQT>(d + 1));
    for (int r = 0; r <= d; ++r)
        for (int s = 0; s <= d; ++s) {
            int rr = (d + 1 - r) % (d + 1);
            int ss = d - s;
            k.forward[r][s] = src.forward[rr][ss].swap_qt();
            k.backward[r][s] = src.backward[rr][ss].swap_qt();
        }
    return k;
}

} // namespace detail

/// Specialized kernels in closed form (entries univariate in one variable, or
/// numeric for the diagonal limit at 1).
inline TransitionKernel kernel_specialized(const Partition& la, Specialization spec) {
    switch (spec) {
    case Specialization::qWhittaker_row:
        return detail::qwhittaker_row(la);
    case Specialization::qWhittaker_col:
        return detail::qwhittaker_col(la);
    case Specialization::HL_row:
        return detail::conjugate_transport(la, detail::qwhittaker_col(la.conjugate()));
    case Specialization::HL_col:
        return detail::conjugate_transport(la, detail::qwhittaker_row(la.conjugate()));
    case Specialization::diagonal_qt: {
        if (la.empty()) return detail::empty_kernel();
        Neighborhoods nb = neighborhoods(la);
        const int d = static_cast<int>(nb.up.size()) - 1;
        RationalQT Hla = hook_products(la).Hq;
        TransitionKernel k;
        k.lambda = la;
        k.d = d;
        k.forward.assign(d + 1, std::vector<RationalQT>(d + 1));
        for (int s = 0; s <= d; ++s) {
            const Partition& nu = nb.up[s];
            Cell add = nu.skew_cell(la);
            RationalQT Hnu = hook_products(nu).Hq;
            k.forward[0][s] =
                RationalQT::monomial(Rat(1), add.y - 1, 0) * RationalQT::bracket(1, 0) * Hla / Hnu;
            for (int r = 1; r <= d; ++r) {
                const Partition& mu = nb.dstar[r];
                Cell rem = la.skew_cell(mu);
                int hook = cell_stats(la, corner_cell(la, mu, nu)).hook;
                // signed crossing statistic; its absolute value is the hook,
                // and a negative sign contributes an extra monomial q^{-2S}
                int S = (rem.x - add.x) + (add.y - rem.y);
                int exp = (add.y - rem.y) - 1 - (S < 0 ? 2 * S : 0);
                RationalQT Hmu = hook_products(mu).Hq;
                k.forward[r][s] = RationalQT::monomial(Rat(1), exp, 0) * Hla * Hla *
                                  RationalQT::bracket(1, 0) * RationalQT::bracket(1, 0) /
                                  (Hmu * Hnu * RationalQT::bracket(hook, 0) * RationalQT::bracket(hook, 0));
            }
        }
        k.backward = k.forward; // forward and backward coincide at q = t
        return k;
    }
    case Specialization::diagonal_limit_1: {
        const TransitionKernel& g = kernel(la, Formulation::explicit_params);
        TransitionKernel k;
        k.lambda = la;
        k.d = g.d;
        k.forward.assign(g.d + 1, std::vector<RationalQT>(g.d + 1));
        for (int r = 0; r <= g.d; ++r)
            for (int s = 0; s <= g.d; ++s)
                k.forward[r][s] = RationalQT(g.forward[r][s].limit_q1_diagonal());
        k.backward = k.forward;
        return k;
    }
    }
    fail(errc::parse_error, "unknown specialization");
}

} // namespace qrst
