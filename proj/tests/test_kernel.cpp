#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qrst/kernel.hpp"
#include "qrst/prng.hpp"

using namespace qrst;

namespace {
RationalQT br(int i, int j) { return RationalQT::bracket(i, j); }
RationalQT mono(int a, int b) { return RationalQT::monomial(Rat(1), a, b); }
}

TEST_CASE("alpha pairs") {
    AlphaPair ap = alpha_pair(Partition{1}, Partition{2});
    CHECK(eq(ap.alpha, br(0, 1) / br(1, 1)));

    ap = alpha_pair(Partition{3, 2}, Partition{4, 2});
    CHECK(eq(ap.alpha, br(0, 1) * br(1, 2) / (br(1, 1) * br(3, 2))));

    CHECK_THROWS_AS(alpha_pair(Partition{2}, Partition{2, 1, 1}), Error);

    // conjugation symmetry: alpha_{nu/la}(t,q) = alpha_{nu'/la'}(q,t)
    for (int n = 0; n <= 6; ++n)
        for (const Partition& la : partitions_of(n))
            for (const Partition& nu : neighborhoods(la).up) {
                AlphaPair x = alpha_pair(la, nu);
                AlphaPair y = alpha_pair(la.conjugate(), nu.conjugate());
                CHECK(eq(x.alpha.swap_qt(), y.alpha));
                CHECK(eq(x.alpha_bar.swap_qt(), y.alpha_bar));
            }
}

TEST_CASE("kernel of the one-box partition matches the two-letter edge labels") {
    const TransitionKernel& k = kernel(Partition{1}, Formulation::explicit_params);
    REQUIRE(k.d == 1);
    CHECK(eq(k.p(0, 0), br(0, 1) / br(1, 1)));
    CHECK(eq(k.p(0, 1), mono(0, 1) * br(1, 0) / br(1, 1)));
    CHECK(eq(k.p(1, 0), mono(1, 0) * br(0, 1) / br(1, 1)));
    CHECK(eq(k.p(1, 1), br(1, 0) / br(1, 1)));
}

TEST_CASE("kernel of a rectangle") {
    const TransitionKernel& k = kernel(Partition{2, 2}, Formulation::explicit_params);
    REQUIRE(k.d == 1);
    CHECK(eq(k.p(0, 0), br(0, 2) / br(2, 2)));
    CHECK(eq(k.p(1, 0), mono(1, 1) * br(1, 1) / br(2, 2)));
    CHECK(eq(k.p_bar(1, 1), br(0, 2) / br(1, 3)));
    CHECK(eq(k.p_bar(0, 0), br(1, 1) / br(3, 1)));
}

TEST_CASE("kernel of the empty partition") {
    for (Formulation f : {Formulation::definition, Formulation::explicit_params, Formulation::lagrange}) {
        const TransitionKernel& k = kernel(Partition(), f);
        REQUIRE(k.d == 0);
        CHECK(eq(k.p(0, 0), RationalQT::one()));
        CHECK(eq(k.p_bar(0, 0), RationalQT::one()));
    }
}

TEST_CASE("the three formulations agree") {
    for (int n = 0; n <= 6; ++n)
        for (const Partition& la : partitions_of(n)) {
            const TransitionKernel& a = kernel(la, Formulation::definition);
            const TransitionKernel& b = kernel(la, Formulation::explicit_params);
            const TransitionKernel& c = kernel(la, Formulation::lagrange);
            for (int r = 0; r <= a.d; ++r)
                for (int s = 0; s <= a.d; ++s) {
                    CHECK(eq(a.p(r, s), b.p(r, s)));
                    CHECK(eq(b.p(r, s), c.p(r, s)));
                    CHECK(eq(a.p_bar(r, s), b.p_bar(r, s)));
                    CHECK(eq(b.p_bar(r, s), c.p_bar(r, s)));
                }
        }
}

TEST_CASE("rows and backward columns are stochastic") {
    for (int n = 0; n <= 6; ++n)
        for (const Partition& la : partitions_of(n)) {
            const TransitionKernel& k = kernel(la);
            for (int r = 0; r <= k.d; ++r) {
                RationalQT row = RationalQT::zero();
                for (int s = 0; s <= k.d; ++s) row += k.p(r, s);
                CHECK(eq(row, RationalQT::one()));
            }
            for (int s = 0; s <= k.d; ++s) {
                RationalQT col = RationalQT::zero();
                for (int r = 0; r <= k.d; ++r) col += k.p_bar(r, s);
                CHECK(eq(col, RationalQT::one()));
            }
        }
}

TEST_CASE("weight compatibility") {
    for (int n = 1; n <= 6; ++n)
        for (const Partition& la : partitions_of(n)) {
            const TransitionKernel& k = kernel(la);
            NeighborhoodWeights w = weights(la);
            for (int r = 0; r <= k.d; ++r)
                for (int s = 0; s <= k.d; ++s)
                    CHECK(eq(w.omega[r] * k.p(r, s), k.p_bar(r, s) * w.omega_bar[s]));
        }
}

TEST_CASE("q = t = 0 reduces to the row insertion bijection") {
    for (int n = 1; n <= 6; ++n)
        for (const Partition& la : partitions_of(n)) {
            const TransitionKernel& k = kernel(la);
            for (int r = 0; r <= k.d; ++r)
                for (int s = 0; s <= k.d; ++s) {
                    Rat v = k.p(r, s).eval(Rat(0), Rat(0));
                    CHECK(v == (r == s ? Rat(1) : Rat(0)));
                    Rat vb = k.p_bar(r, s).eval(Rat(0), Rat(0));
                    CHECK(vb == (r == s ? Rat(1) : Rat(0)));
                }
        }
}

TEST_CASE("column kernel") {
    SUBCASE("matches the substitution route") {
        for (int n = 1; n <= 5; ++n)
            for (const Partition& la : partitions_of(n)) {
                const TransitionKernel& row = kernel(la);
                const TransitionKernel& col = kernel_col(la);
                for (int r = 0; r <= row.d; ++r)
                    for (int s = 0; s <= row.d; ++s) {
                        CHECK(eq(col.p(r, s), row.p(r, s).substitute(RationalQT::Subst::invert_both)));
                        CHECK(eq(col.p_bar(r, s), row.p_bar(r, s).substitute(RationalQT::Subst::invert_both)));
                    }
            }
    }
    SUBCASE("q = t = 0 reduces to the column insertion bijection") {
        for (int n = 1; n <= 6; ++n)
            for (const Partition& la : partitions_of(n)) {
                const TransitionKernel& col = kernel_col(la);
                for (int r = 0; r <= col.d; ++r)
                    for (int s = 0; s <= col.d; ++s) {
                        int target = (r == 0) ? col.d : r - 1; // delta_{r-1,s}, wrapping -1 to d
                        CHECK(col.p(r, s).eval(Rat(0), Rat(0)) == (s == target ? Rat(1) : Rat(0)));
                    }
            }
    }
    SUBCASE("conjugation exchanges row and column kernels") {
        for (int n = 1; n <= 6; ++n)
            for (const Partition& la : partitions_of(n)) {
                const TransitionKernel& row = kernel(la);
                const TransitionKernel& colc = kernel_col(la.conjugate());
                int d = row.d;
                REQUIRE(colc.d == d);
                for (int r = 0; r <= d; ++r)
                    for (int s = 0; s <= d; ++s) {
                        int rr = (d + 1 - r) % (d + 1);
                        CHECK(eq(row.p(r, s).swap_qt(), colc.p(rr, d - s)));
                        CHECK(eq(row.p_bar(r, s).swap_qt(), colc.p_bar(rr, d - s)));
                    }
            }
    }
}

TEST_CASE("corner cells") {
    CHECK(corner_cell(Partition{2, 1}, Partition{1, 1}, Partition{3, 1}) == Cell{2, 1});
    CHECK(corner_cell(Partition{2, 1}, Partition{2}, Partition{2, 2}) == Cell{1, 2});
    CHECK_THROWS_AS(corner_cell(Partition{2, 1}, Partition{1}, Partition{2, 2}), Error);

    // hook identity: |n'(la/mu) - n'(nu/la) + n(nu/la) - n(la/mu)| = hook
    for (int n = 1; n <= 7; ++n)
        for (const Partition& la : partitions_of(n)) {
            Neighborhoods nb = neighborhoods(la);
            for (const Partition& mu : nb.down)
                for (const Partition& nu : nb.up) {
                    Cell add = nu.skew_cell(la), rem = la.skew_cell(mu);
                    long value = (rem.x - add.x) + (add.y - rem.y);
                    if (value < 0) value = -value;
                    CHECK(value == cell_stats(la, corner_cell(la, mu, nu)).hook);
                }
        }
}

TEST_CASE("positivity of kernel entries at probability parameters") {
    std::vector<std::pair<Rat, Rat>> pts = {{make_rat(1, 3), make_rat(1, 2)},
                                            {make_rat(3, 2), make_rat(5, 4)},
                                            {make_rat(1, 7), make_rat(6, 7)}};
    for (int n = 1; n <= 5; ++n)
        for (const Partition& la : partitions_of(n)) {
            const TransitionKernel& k = kernel(la);
            for (const auto& [qv, tv] : pts)
                for (int r = 0; r <= k.d; ++r)
                    for (int s = 0; s <= k.d; ++s) {
                        Rat v = k.p(r, s).eval(qv, tv);
                        CHECK(v >= 0);
                        CHECK(v <= 1);
                    }
        }
}

TEST_CASE("interpolation identity, executable form") {
    // For distinct positions a_0..a_d and a polynomial f of degree <= d,
    // sum_s f(a_s) prod_{i != s} (x - a_i)/(a_s - a_i) = f(x).
    SplitMix64 g(31337);
    for (int rep = 0; rep < 20; ++rep) {
        int d = 1 + static_cast<int>(g.next() % 4);
        std::vector<Rat> a;
        while (static_cast<int>(a.size()) <= d) {
            Rat cand = make_rat(static_cast<long>(g.next() % 19) - 9, 1 + static_cast<long>(g.next() % 5));
            bool dup = false;
            for (const Rat& x : a) dup |= (x == cand);
            if (!dup) a.push_back(cand);
        }
        std::vector<Rat> coeffs;
        for (int i = 0; i <= d; ++i)
            coeffs.push_back(make_rat(static_cast<long>(g.next() % 11) - 5, 1 + static_cast<long>(g.next() % 4)));
        auto f = [&](const Rat& x) {
            Rat v(0), p(1);
            for (const Rat& c : coeffs) {
                v += c * p;
                p *= x;
            }
            return v;
        };
        Rat x = make_rat(static_cast<long>(g.next() % 23) - 11, 1 + static_cast<long>(g.next() % 6));
        Rat interp(0);
        for (int s = 0; s <= d; ++s) {
            Rat term = f(a[s]);
            for (int i = 0; i <= d; ++i) {
                if (i == s) continue;
                term *= (x - a[i]) / (a[s] - a[i]);
            }
            interp += term;
        }
        CHECK(interp == f(x));
    }
}

TEST_CASE("specialized kernels agree with substituted generic kernels") {
    for (int n = 1; n <= 5; ++n)
        for (const Partition& la : partitions_of(n)) {
            const TransitionKernel& gen = kernel(la);
            const TransitionKernel& genc = kernel_col(la);
            TransitionKernel qr = kernel_specialized(la, Specialization::qWhittaker_row);
            TransitionKernel qc = kernel_specialized(la, Specialization::qWhittaker_col);
            TransitionKernel hr = kernel_specialized(la, Specialization::HL_row);
            TransitionKernel hc = kernel_specialized(la, Specialization::HL_col);
            TransitionKernel dq = kernel_specialized(la, Specialization::diagonal_qt);
            for (int r = 0; r <= gen.d; ++r)
                for (int s = 0; s <= gen.d; ++s) {
                    CHECK(eq(qr.p(r, s), gen.p(r, s).substitute(RationalQT::Subst::t_to_zero)));
                    CHECK(eq(qc.p(r, s), genc.p(r, s).substitute(RationalQT::Subst::t_to_zero)));
                    CHECK(eq(hr.p(r, s), gen.p(r, s).substitute(RationalQT::Subst::q_to_zero)));
                    CHECK(eq(hc.p(r, s), genc.p(r, s).substitute(RationalQT::Subst::q_to_zero)));
                    CHECK(eq(dq.p(r, s), gen.p(r, s).substitute(RationalQT::Subst::t_equals_q)));
                    CHECK(eq(dq.p_bar(r, s), gen.p_bar(r, s).substitute(RationalQT::Subst::t_equals_q)));
                }
        }
}

TEST_CASE("explicit q-Whittaker row case with a free cell in one row") {
    // v_r = 1: the bumped entry stays in its row with probability
    // q(1-q^{h_{r-1}})/(1-q^{1+h_{r-1}}) and moves up with the complement.
    Partition la{3, 1}; // parameters h = (2,1), v = (1,1)
    TransitionKernel k = kernel_specialized(la, Specialization::qWhittaker_row);
    CHECK(eq(k.p(2, 1), mono(1, 0) * br(2, 0) / br(3, 0)));
    CHECK(eq(k.p(2, 2), br(1, 0) / br(3, 0)));
    CHECK(eq(k.p(2, 0), RationalQT::zero()));
    CHECK(eq(k.p(1, 0), mono(1, 0)));
    CHECK(eq(k.p(1, 1), br(1, 0)));
}

TEST_CASE("diagonal q = t closed form") {
    // mu = la: q^{n(nu/la)} (1-q) H_la(q) / H_nu(q)
    for (int n = 1; n <= 5; ++n)
        for (const Partition& la : partitions_of(n)) {
            TransitionKernel dq = kernel_specialized(la, Specialization::diagonal_qt);
            Neighborhoods nb = neighborhoods(la);
            for (int s = 0; s <= dq.d; ++s) {
                Cell add = nb.up[s].skew_cell(la);
                RationalQT expect = mono(add.y - 1, 0) * br(1, 0) * hook_products(la).Hq /
                                    hook_products(nb.up[s]).Hq;
                CHECK(eq(dq.p(0, s), expect));
            }
        }
}

TEST_CASE("exact limits at q = t -> 1") {
    for (int n = 1; n <= 6; ++n)
        for (const Partition& la : partitions_of(n)) {
            TransitionKernel lim = kernel_specialized(la, Specialization::diagonal_limit_1);
            Neighborhoods nb = neighborhoods(la);
            Int Hla = hook_products(la).H;
            for (int s = 0; s <= lim.d; ++s) {
                const Partition& nu = nb.up[s];
                Int Hnu = hook_products(nu).H;
                CHECK(lim.p(0, s).eval(Rat(0), Rat(0)) == Rat(Hla) / Rat(Hnu));
                for (int r = 1; r <= lim.d; ++r) {
                    const Partition& mu = nb.dstar[r];
                    Int Hmu = hook_products(mu).H;
                    long hook = cell_stats(la, corner_cell(la, mu, nu)).hook;
                    Rat expect = Rat(Hla * Hla) / Rat(Hmu * Hnu) / Rat(hook * hook);
                    CHECK(lim.p(r, s).eval(Rat(0), Rat(0)) == expect);
                }
            }
        }
}

TEST_CASE("additive interpolation data reproduce the uniform limit") {
    // Evaluating the interpolation form with positions x_i + y_i instead of
    // q^{x_i} t^{y_i} gives exactly the q = t -> 1 limits of the kernel.
    for (int n = 1; n <= 6; ++n)
        for (const Partition& la : partitions_of(n)) {
            Parameters pr = parameters(la);
            const int d = pr.d;
            std::vector<Rat> a(d + 1), b(d + 1);
            for (int i = 0; i <= d; ++i) a[i] = Rat(pr.h_sum(1, i) + pr.v_sum(1, i));
            for (int i = 1; i <= d; ++i) b[i] = Rat(pr.h_sum(1, i - 1) + pr.v_sum(1, i));
            TransitionKernel lim = kernel_specialized(la, Specialization::diagonal_limit_1);
            for (int s = 0; s <= d; ++s) {
                Rat p0(1);
                for (int i = 1; i <= d; ++i) p0 *= a[s] - b[i];
                for (int i = 0; i <= d; ++i)
                    if (i != s) p0 /= a[s] - a[i];
                CHECK(p0 == lim.p(0, s).eval(Rat(0), Rat(0)));
                for (int r = 1; r <= d; ++r) {
                    Rat pr_val(1);
                    for (int i = 0; i <= d; ++i) {
                        if (i == s) continue;
                        pr_val *= (b[r] - a[i]) / (a[s] - a[i]);
                    }
                    for (int i = 1; i <= d; ++i) {
                        if (i == r) continue;
                        pr_val *= (a[s] - b[i]) / (b[r] - b[i]);
                    }
                    CHECK(pr_val == lim.p(r, s).eval(Rat(0), Rat(0)));
                }
            }
        }
}

TEST_CASE("hook-sum identities in the limit") {
    // For mu covered by la: sum_nu f_mu f_nu / hook^2 = (n+1)/n * f_la^2,
    // and the companion identity for fixed nu.
    for (int n = 1; n <= 6; ++n)
        for (const Partition& la : partitions_of(n)) {
            Neighborhoods nb = neighborhoods(la);
            Rat fla = Rat(syt_count(la));
            for (const Partition& mu : nb.down) {
                Rat sum(0);
                for (const Partition& nu : nb.up) {
                    long h = cell_stats(la, corner_cell(la, mu, nu)).hook;
                    sum += Rat(syt_count(mu) * syt_count(nu)) / Rat(h * h);
                }
                CHECK(sum == Rat(n + 1) / Rat(n) * fla * fla);
            }
            for (const Partition& nu : nb.up) {
                Rat sum = fla * Rat(syt_count(nu)) / Rat(n);
                for (const Partition& mu : nb.down) {
                    long h = cell_stats(la, corner_cell(la, mu, nu)).hook;
                    sum += Rat(syt_count(mu) * syt_count(nu)) / Rat(h * h);
                }
                CHECK(sum == Rat(n + 1) / Rat(n) * fla * fla);
            }
        }
}
