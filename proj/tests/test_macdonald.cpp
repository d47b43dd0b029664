#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qrst/macdonald.hpp"
#include "qrst/prng.hpp"

using namespace qrst;

namespace {
RationalQT br(int i, int j) { return RationalQT::bracket(i, j); }
}

TEST_CASE("b coefficients") {
    CHECK(eq(b_coeff(0, 0), br(0, 1) / br(1, 0)));
    CHECK(eq(b_coeff(2, 1), br(2, 2) / br(3, 1)));
    // on the diagonal q = t every b coefficient is 1
    for (int i = 0; i <= 3; ++i)
        for (int j = 0; j <= 3; ++j)
            CHECK(eq(b_coeff(i, j).substitute(RationalQT::Subst::t_equals_q), RationalQT::one()));
    CHECK_THROWS_AS(b_coeff(-1, 0), Error);
}

TEST_CASE("row and column sets of a skew shape") {
    Partition la{7, 5, 5, 2, 1}, mu{7, 5, 4, 2, 1};
    RCSets rc = rc_sets(la, mu);
    CHECK(rc.R == std::vector<Cell>{{1, 3}, {2, 3}, {3, 3}, {4, 3}});
    CHECK(rc.C == std::vector<Cell>{{5, 1}, {5, 2}});

    rc = rc_sets(la, la);
    CHECK(rc.R.empty());
    CHECK(rc.C.empty());

    rc = rc_sets(Partition{2}, Partition{1});
    CHECK(rc.R == std::vector<Cell>{{1, 1}});
    CHECK(rc.C.empty());

    CHECK_THROWS_AS(rc_sets(Partition{1}, Partition{2}), Error);
}

TEST_CASE("branching coefficients of a one-cell skew") {
    Partition la{7, 5, 5, 2, 1}, mu{7, 5, 4, 2, 1};
    PsiPhi pp = psi_phi(SkewStrip(la, mu));
    RationalQT psi_expected =
        b_coeff(0, 0) * b_coeff(2, 1) * b_coeff(3, 2) / (b_coeff(2, 0) * b_coeff(3, 1) * b_coeff(4, 2));
    RationalQT phi_expected = b_coeff(0, 1) * b_coeff(2, 2) / b_coeff(2, 1);
    CHECK(eq(pp.psi, psi_expected));
    CHECK(eq(pp.phi, phi_expected));

    // trivial skew
    pp = psi_phi(SkewStrip(la, la));
    CHECK(eq(pp.psi, RationalQT::one()));
    CHECK(eq(pp.phi, RationalQT::one()));

    // one-cell skews: phi = (1-t)/(1-q) * prod over C of b_lambda/b_mu
    for (int n = 1; n <= 6; ++n)
        for (const Partition& nu : partitions_of(n))
            for (const Partition& rho : neighborhoods(nu).down) {
                PsiPhi x = psi_phi(SkewStrip(nu, rho));
                RCSets rc = rc_sets(nu, rho);
                BracketProduct expect = BracketProduct::one();
                expect.mul_bracket(0, 1).div_bracket(1, 0);
                for (Cell c : rc.C) expect *= b_cell(nu, c) / b_cell(rho, c);
                CHECK(eq(x.phi, expect.to_rational()));
            }

    CHECK_THROWS_AS(SkewStrip(Partition{2, 2}, Partition{1}), Error);
}

TEST_CASE("tableau weights reproduce the two-letter ledger") {
    StandardTableau row = StandardTableau::from_string("1,2");
    StandardTableau col = StandardTableau::from_string("1;2");
    RationalQT row_pair = tableau_weights(row).psi * tableau_weights(row).phi;
    // psi_P phi_Q for the row pair: (1-t)^3 (1-q^2) / ((1-q)^3 (1-qt))
    RationalQT expect_row = br(0, 1) * br(0, 1) * br(0, 1) * br(2, 0) / (br(1, 0) * br(1, 0) * br(1, 0) * br(1, 1));
    CHECK(eq(row_pair, expect_row));
    // psi_P phi_Q for the column pair: (1-t)(1-t^2) / ((1-q)(1-qt))
    RationalQT col_pair = tableau_weights(col).psi * tableau_weights(col).phi;
    RationalQT expect_col = br(0, 1) * br(0, 2) / (br(1, 0) * br(1, 1));
    CHECK(eq(col_pair, expect_col));
}

TEST_CASE("tableau weights are 1 on the diagonal q = t") {
    for (const Partition& la : partitions_of(4))
        for (const StandardTableau& t : syt_enumerate(la)) {
            PsiPhi pp = tableau_weights(t);
            CHECK(eq(pp.psi.substitute(RationalQT::Subst::t_equals_q), RationalQT::one()));
            CHECK(eq(pp.phi.substitute(RationalQT::Subst::t_equals_q), RationalQT::one()));
        }
}

TEST_CASE("phi = (b_lambda / b_mu) psi for horizontal strips") {
    auto b_shape = [](const Partition& p) {
        BracketProduct b = BracketProduct::one();
        for (Cell c : p.cells()) b *= b_cell(p, c);
        return b.to_rational();
    };
    for (int n = 0; n <= 7; ++n)
        for (const Partition& la : partitions_of(n))
            for (int m = 0; m <= n; ++m)
                for (const Partition& mu : partitions_of(m)) {
                    if (!la.contains(mu)) continue;
                    bool strip = true;
                    for (int y = 1; y <= la.rows(); ++y)
                        if (mu.part(y) < la.part(y + 1)) strip = false;
                    if (!strip) continue;
                    PsiPhi pp = psi_phi(SkewStrip(la, mu));
                    CHECK(eq(pp.phi * b_shape(mu), pp.psi * b_shape(la)));
                }
}

TEST_CASE("inversion symmetry of the branching coefficients") {
    for (int n = 1; n <= 6; ++n)
        for (const Partition& la : partitions_of(n))
            for (int m = 0; m < n; ++m)
                for (const Partition& mu : partitions_of(m)) {
                    if (!la.contains(mu)) continue;
                    bool strip = true;
                    for (int y = 1; y <= la.rows(); ++y)
                        if (mu.part(y) < la.part(y + 1)) strip = false;
                    if (!strip) continue;
                    PsiPhi pp = psi_phi(SkewStrip(la, mu));
                    RationalQT psi_inv = pp.psi.substitute(RationalQT::Subst::invert_both);
                    CHECK(eq(psi_inv, pp.psi));
                    RationalQT phi_inv = pp.phi.substitute(RationalQT::Subst::invert_both);
                    int cells = n - m;
                    RationalQT expect = RationalQT::monomial(Rat(1), cells, -cells) * pp.phi;
                    CHECK(eq(phi_inv, expect));
                }
}

TEST_CASE("squarefree Cauchy accounting over standard tableaux") {
    for (int n = 1; n <= 5; ++n) {
        RationalQT sum = RationalQT::zero();
        for (const Partition& la : partitions_of(n)) {
            RationalQT psi_sum = RationalQT::zero(), phi_sum = RationalQT::zero();
            for (const StandardTableau& t : syt_enumerate(la)) {
                PsiPhi pp = tableau_weights(t);
                psi_sum += pp.psi;
                phi_sum += pp.phi;
            }
            sum += psi_sum * phi_sum;
        }
        BracketProduct expect(Rat(int_factorial(n)));
        expect.mul_bracket(0, 1, n).div_bracket(1, 0, n);
        CHECK(eq(sum, expect.to_rational()));
    }
}

TEST_CASE("cross identity for distinct partitions of the same size") {
    // psi_{nu/la} phi_{nu/rho} = psi_{rho/mu} phi_{la/mu} whenever the up and
    // down intersections are nonempty.
    for (int n = 1; n <= 6; ++n) {
        auto ps = partitions_of(n);
        for (const Partition& la : ps)
            for (const Partition& rho : ps) {
                if (la == rho) continue;
                Partition nu = union_of(la, rho), mu = intersection_of(la, rho);
                if (nu.size() != n + 1 || mu.size() != n - 1) continue;
                RationalQT lhs = psi_phi(SkewStrip(nu, la)).psi * psi_phi(SkewStrip(nu, rho)).phi;
                RationalQT rhs = psi_phi(SkewStrip(rho, mu)).psi * psi_phi(SkewStrip(la, mu)).phi;
                CHECK(eq(lhs, rhs));
            }
    }
}

TEST_CASE("neighborhood weights") {
    // rectangle: omega of the single down neighbor and omega_bar of the first
    // up neighbor have closed forms
    for (int h = 1; h <= 3; ++h)
        for (int v = 1; v <= 3; ++v) {
            std::vector<int> parts(v, h);
            Partition la(parts);
            NeighborhoodWeights w = weights(la);
            REQUIRE(w.omega.size() == 2);
            REQUIRE(w.omega_bar.size() == 2);
            CHECK(eq(w.omega[0], RationalQT::one()));
            CHECK(eq(w.omega[1], br(0, v) * br(h, 0) / (br(1, v - 1) * br(h - 1, 1))));
            CHECK(eq(w.omega_bar[0], br(0, v) * br(h + 1, v - 1) / (br(1, v - 1) * br(h, v))));
            CHECK(eq(w.omega_bar[1], br(h - 1, v + 1) * br(h, 0) / (br(h, v) * br(h - 1, 1))));
        }
    // the two weighted sums agree (the commutation identity in weight form)
    for (int n = 1; n <= 7; ++n)
        for (const Partition& la : partitions_of(n)) {
            NeighborhoodWeights w = weights(la);
            RationalQT lhs = RationalQT::zero(), rhs = RationalQT::zero();
            for (const RationalQT& x : w.omega) lhs += x;
            for (const RationalQT& x : w.omega_bar) rhs += x;
            CHECK(eq(lhs, rhs));
        }
}

TEST_CASE("monomial expansion evaluates exactly") {
    Rat qv = make_rat(1, 3), tv = make_rat(2, 5);
    SUBCASE("single box is x1 + ... + xk") {
        std::vector<Rat> xs = {make_rat(1, 2), make_rat(1, 5), make_rat(3, 4)};
        CHECK(macdonald_eval(Partition{1}, MacdonaldKind::P, xs, qv, tv) ==
              xs[0] + xs[1] + xs[2]);
    }
    SUBCASE("q = t gives Schur evaluations") {
        std::vector<Rat> xs = {make_rat(1, 2), make_rat(1, 3)};
        Rat s2 = xs[0] * xs[0] + xs[0] * xs[1] + xs[1] * xs[1];
        CHECK(macdonald_eval(Partition{2}, MacdonaldKind::P, xs, qv, qv) == s2);
        CHECK(macdonald_eval(Partition{2}, MacdonaldKind::Q, xs, qv, qv) == s2);
        // independent semistandard sum with weight 1 for small shapes
        for (int n = 1; n <= 4; ++n)
            for (const Partition& la : partitions_of(n)) {
                if (la.rows() > 3) continue;
                std::vector<Rat> ys = {make_rat(2, 3), make_rat(1, 4), make_rat(1, 7)};
                Rat schur(0);
                for_each_ssyt_chain(la, 3, [&](const std::vector<Partition>& chain) {
                    Rat mono(1);
                    for (int i = 1; i <= 3; ++i)
                        mono *= rat_pow(ys[i - 1], chain[i].size() - chain[i - 1].size());
                    schur += mono;
                });
                CHECK(macdonald_eval(la, MacdonaldKind::P, ys, make_rat(4, 7), make_rat(4, 7)) == schur);
            }
    }
    SUBCASE("symmetry in the variables") {
        SplitMix64 g(99);
        for (int k = 0; k < 20; ++k) {
            Rat x1 = make_rat(static_cast<long>(g.next() % 7), 1 + static_cast<long>(g.next() % 7));
            Rat x2 = make_rat(static_cast<long>(g.next() % 7), 1 + static_cast<long>(g.next() % 7));
            Rat a = macdonald_eval(Partition{2, 1}, MacdonaldKind::P, {x1, x2}, qv, tv);
            Rat b = macdonald_eval(Partition{2, 1}, MacdonaldKind::P, {x2, x1}, qv, tv);
            CHECK(a == b);
        }
    }
    SUBCASE("size bound") {
        std::vector<Rat> xs = {Rat(1)};
        CHECK_THROWS_AS(macdonald_eval(Partition{13}, MacdonaldKind::P, xs, qv, tv), Error);
    }
}
