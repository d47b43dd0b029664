#pragma once

#include <chrono>
#include <optional>

#include "qrst/growth.hpp"
#include "qrst/hook_walk.hpp"
#include "qrst/json_io.hpp"

namespace qrst::checks {

/// Result of one named identity check. A failing check always carries a
/// serialized witness of the offending instance.
struct CheckReport {
    std::string name;
    std::string range;
    bool pass = true;
    std::optional<std::string> witness;
    double seconds = 0;
};

namespace detail {

class Reporter {
public:
    Reporter(std::string name, std::string range) : start_(std::chrono::steady_clock::now()) {
        report_.name = std::move(name);
        report_.range = std::move(range);
    }
    /// Records the first counterexample; later ones are ignored.
    void require(bool ok, const std::function<std::string()>& witness) {
        if (ok || !report_.pass) return;
        report_.pass = false;
        report_.witness = witness();
    }
    bool still_passing() const { return report_.pass; }
    CheckReport finish() {
        report_.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
        return report_;
    }

private:
    CheckReport report_;
    std::chrono::steady_clock::time_point start_;
};

inline RationalQT cauchy_weight(int n) {
    BracketProduct w = BracketProduct::one();
    w.mul_bracket(0, 1, n).div_bracket(1, 0, n);
    return w.to_rational();
}

inline std::vector<Permutation> all_permutations(int n) {
    std::vector<int> v(n);
    for (int i = 0; i < n; ++i) v[i] = i + 1;
    std::vector<Permutation> out;
    do {
        out.push_back(Permutation(v));
    } while (std::next_permutation(v.begin(), v.end()));
    return out;
}

/// Principal specialization value of a Schur function: q^{n(lambda)} / H_lambda(q).
inline RationalQT principal_specialization(const Partition& la) {
    return RationalQT::monomial(Rat(1), static_cast<int>(n_stats(la).n), 0) / hook_products(la).Hq;
}

} // namespace detail

/// Up/down operator commutation: the diagonal entries differ by (1-t)/(1-q)
/// and all off-diagonal entries agree, on partitions up to the bound.
inline CheckReport check_commutator(int maxN = 7) {
    if (maxN > 8) fail(errc::size_bound_exceeded, "commutator check bounded at 8");
    detail::Reporter rep("commutator", "all pairs of partitions of equal size n <= " + std::to_string(maxN));
    RationalQT ratio = RationalQT::bracket(0, 1) / RationalQT::bracket(1, 0);
    for (int n = 0; n <= maxN && rep.still_passing(); ++n) {
        auto ps = partitions_of(n);
        // cache the up/down expansions of each partition of size n
        std::vector<std::vector<std::pair<Partition, RationalQT>>> up(ps.size()), down(ps.size());
        for (std::size_t i = 0; i < ps.size(); ++i) {
            for (const Partition& nu : neighborhoods(ps[i]).up)
                up[i].emplace_back(nu, psi_phi(SkewStrip(nu, ps[i])).psi);
            for (const Partition& mu : neighborhoods(ps[i]).down)
                down[i].emplace_back(mu, psi_phi(SkewStrip(ps[i], mu)).phi);
        }
        for (std::size_t i = 0; i < ps.size() && rep.still_passing(); ++i)
            for (std::size_t j = 0; j < ps.size(); ++j) {
                // <DU la, rho> = sum over common up-neighbors nu of psi_{nu/la} phi_{nu/rho}
                RationalQT du = RationalQT::zero(), ud = RationalQT::zero();
                for (const auto& [nu, psi] : up[i])
                    for (const Partition& nu2 : neighborhoods(ps[j]).up)
                        if (nu2 == nu) du += psi * psi_phi(SkewStrip(nu, ps[j])).phi;
                for (const auto& [mu, phi] : down[i])
                    for (const Partition& mu2 : neighborhoods(ps[j]).down)
                        if (mu2 == mu) ud += phi * psi_phi(SkewStrip(ps[j], mu)).psi;
                RationalQT expect = (i == j) ? ratio : RationalQT::zero();
                rep.require(eq(du - ud, expect), [&] {
                    return "lambda=" + ps[i].to_string() + " rho=" + ps[j].to_string() +
                           " DU-UD=" + rq_display(du - ud);
                });
                if (!rep.still_passing()) break;
            }
    }
    return rep.finish();
}

/// Squarefree Cauchy identity and its per-pair refinement through the exact
/// forward distributions; also cross-checks chained single-value insertion
/// against the growth route on three letters.
inline CheckReport check_cauchy_squarefree(int maxN = 4) {
    if (maxN > 4) fail(errc::size_bound_exceeded, "exact growth enumeration bounded at 4 here");
    detail::Reporter rep("cauchy_squarefree", "aggregate and refined forms for n <= " + std::to_string(maxN));
    for (int n = 1; n <= maxN && rep.still_passing(); ++n) {
        RationalQT aggregate = RationalQT::zero();
        for (const Partition& la : partitions_of(n)) {
            RationalQT psis = RationalQT::zero(), phis = RationalQT::zero();
            for (const StandardTableau& t : syt_enumerate(la)) {
                PsiPhi pp = tableau_weights(t);
                psis += pp.psi;
                phis += pp.phi;
            }
            aggregate += psis * phis;
        }
        rep.require(eq(aggregate, Rat(int_factorial(n)) * detail::cauchy_weight(n)),
                    [&] { return "aggregate identity fails at n=" + std::to_string(n); });

        auto perms = detail::all_permutations(n);
        std::vector<PairDistribution> dists;
        dists.reserve(perms.size());
        for (const Permutation& s : perms) dists.push_back(forward_exact(s));
        for (const Partition& la : partitions_of(n))
            for (const StandardTableau& P : syt_enumerate(la))
                for (const StandardTableau& Q : syt_enumerate(la)) {
                    RationalQT sum = RationalQT::zero();
                    for (const PairDistribution& d : dists) sum += d.mass({P, Q});
                    RationalQT lhs = detail::cauchy_weight(n) * sum;
                    RationalQT rhs = tableau_weights(P).psi * tableau_weights(Q).phi;
                    rep.require(eq(lhs, rhs), [&] {
                        return "refined identity fails at P=" + P.to_string() + " Q=" + Q.to_string();
                    });
                    if (n <= 3)
                        rep.require(eq(backward_exact(P, Q).total(), RationalQT::one()), [&] {
                            return "backward masses at P=" + P.to_string() + " Q=" + Q.to_string();
                        });
                    if (!rep.still_passing()) return rep.finish();
                }
    }
    // growth-by-growth accounting of one three-letter permutation
    if (rep.still_passing() && maxN >= 3) {
        RationalQT tot = RationalQT::zero();
        auto growths = enumerate_growths(Permutation::from_string("2,1,3"));
        for (const auto& [g, p] : growths) tot += p;
        rep.require(growths.size() == 4 && eq(tot, RationalQT::one()),
                    [&] { return "growth masses of the three-letter example"; });
    }
    // insertion route equals growth route for one three-letter word
    if (rep.still_passing() && maxN >= 3) {
        Distribution<PartialTableau> cur;
        cur.add(PartialTableau(), RationalQT::one());
        for (int letter : {2, 3, 1}) {
            Distribution<PartialTableau> next;
            for (const auto& [t, m] : cur.entries()) {
                Distribution<PartialTableau> step = qrst_insert_exact(t, letter);
                for (const auto& [t2, m2] : step.entries()) next.add(t2, m * m2);
            }
            cur = next;
        }
        Distribution<StandardTableau> via_insert;
        for (const auto& [t, m] : cur.entries()) via_insert.add(to_standard(t), m);
        PairDistribution d = forward_exact(Permutation::from_string("2,3,1"));
        Distribution<StandardTableau> via_growth;
        for (const auto& [pq, m] : d.entries()) via_growth.add(pq.first, m);
        for (const auto& [t, m] : via_insert.entries())
            rep.require(eq(m, via_growth.mass(t)),
                        [&] { return "insertion route differs at P=" + t.to_string(); });
    }
    return rep.finish();
}

/// Stochasticity of the forward/backward kernels, agreement of the three
/// formulations, weight compatibility, and the q = t = 0 degeneration.
inline CheckReport check_kernel_laws(int maxN = 8) {
    if (maxN > 8) fail(errc::size_bound_exceeded, "kernel check bounded at 8");
    detail::Reporter rep("kernel_laws", "all partitions with |lambda| <= " + std::to_string(maxN));
    std::vector<std::pair<Rat, Rat>> pts = {{make_rat(1, 3), make_rat(1, 2)}, {make_rat(3, 2), make_rat(5, 4)}};
    for (int n = 0; n <= maxN && rep.still_passing(); ++n)
        for (const Partition& la : partitions_of(n)) {
            const TransitionKernel& k = kernel(la, Formulation::explicit_params);
            const TransitionKernel& kd = kernel(la, Formulation::definition);
            const TransitionKernel& kl = kernel(la, Formulation::lagrange);
            NeighborhoodWeights w = weights(la);
            for (int r = 0; r <= k.d && rep.still_passing(); ++r) {
                RationalQT row = RationalQT::zero();
                for (int s = 0; s <= k.d; ++s) row += k.p(r, s);
                rep.require(eq(row, RationalQT::one()),
                            [&] { return "forward row " + std::to_string(r) + " of " + la.to_string(); });
            }
            for (int s = 0; s <= k.d && rep.still_passing(); ++s) {
                RationalQT col = RationalQT::zero();
                for (int r = 0; r <= k.d; ++r) col += k.p_bar(r, s);
                rep.require(eq(col, RationalQT::one()),
                            [&] { return "backward column " + std::to_string(s) + " of " + la.to_string(); });
            }
            for (int r = 0; r <= k.d && rep.still_passing(); ++r)
                for (int s = 0; s <= k.d; ++s) {
                    rep.require(eq(kd.p(r, s), k.p(r, s)) && eq(k.p(r, s), kl.p(r, s)) &&
                                    eq(kd.p_bar(r, s), k.p_bar(r, s)) && eq(k.p_bar(r, s), kl.p_bar(r, s)),
                                [&] {
                                    return "formulations differ at " + la.to_string() + " r=" +
                                           std::to_string(r) + " s=" + std::to_string(s);
                                });
                    rep.require(eq(w.omega[r] * k.p(r, s), k.p_bar(r, s) * w.omega_bar[s]), [&] {
                        return "compatibility fails at " + la.to_string() + " r=" + std::to_string(r) +
                               " s=" + std::to_string(s);
                    });
                    Rat at00 = k.p(r, s).eval(Rat(0), Rat(0));
                    rep.require(at00 == (r == s ? Rat(1) : Rat(0)),
                                [&] { return "q=t=0 entry not a delta at " + la.to_string(); });
                    for (const auto& [qv, tv] : pts) {
                        Rat v = k.p(r, s).eval(qv, tv);
                        rep.require(v >= 0 && v <= 1,
                                    [&] { return "entry outside [0,1] at " + la.to_string(); });
                    }
                    if (!rep.still_passing()) return rep.finish();
                }
        }
    return rep.finish();
}

/// Column variant, conjugation transport, the q-Whittaker / Hall-Littlewood /
/// diagonal closed forms against substitution, exact diagonal limits, the
/// monomial expansion at q = t, and the deterministic degenerations.
inline CheckReport check_specializations(int maxN = 7) {
    detail::Reporter rep("specializations", "all partitions with |lambda| <= " + std::to_string(maxN));
    for (int n = 0; n <= maxN && rep.still_passing(); ++n)
        for (const Partition& la : partitions_of(n)) {
            const TransitionKernel& gen = kernel(la);
            const TransitionKernel& col = kernel_col(la);
            const TransitionKernel& colc = kernel_col(la.conjugate());
            TransitionKernel qr = kernel_specialized(la, Specialization::qWhittaker_row);
            TransitionKernel qc = kernel_specialized(la, Specialization::qWhittaker_col);
            TransitionKernel hr = kernel_specialized(la, Specialization::HL_row);
            TransitionKernel hc = kernel_specialized(la, Specialization::HL_col);
            TransitionKernel dq = kernel_specialized(la, Specialization::diagonal_qt);
            TransitionKernel lim = kernel_specialized(la, Specialization::diagonal_limit_1);
            Neighborhoods nb = neighborhoods(la);
            const int d = gen.d;
            for (int r = 0; r <= d && rep.still_passing(); ++r)
                for (int s = 0; s <= d; ++s) {
                    auto wit = [&](const char* what) {
                        return std::string(what) + " at " + la.to_string() + " r=" + std::to_string(r) +
                               " s=" + std::to_string(s);
                    };
                    rep.require(eq(col.p(r, s), gen.p(r, s).substitute(RationalQT::Subst::invert_both)),
                                [&] { return wit("column kernel vs inverted substitution"); });
                    int rr = (d + 1 - r) % (d + 1);
                    rep.require(eq(gen.p(r, s).swap_qt(), colc.p(rr, d - s)),
                                [&] { return wit("conjugation transport"); });
                    rep.require(eq(qr.p(r, s), gen.p(r, s).substitute(RationalQT::Subst::t_to_zero)),
                                [&] { return wit("q-Whittaker row closed form"); });
                    rep.require(eq(qc.p(r, s), col.p(r, s).substitute(RationalQT::Subst::t_to_zero)),
                                [&] { return wit("q-Whittaker column closed form"); });
                    rep.require(eq(hr.p(r, s), gen.p(r, s).substitute(RationalQT::Subst::q_to_zero)),
                                [&] { return wit("Hall-Littlewood row closed form"); });
                    rep.require(eq(hc.p(r, s), col.p(r, s).substitute(RationalQT::Subst::q_to_zero)),
                                [&] { return wit("Hall-Littlewood column closed form"); });
                    rep.require(eq(dq.p(r, s), gen.p(r, s).substitute(RationalQT::Subst::t_equals_q)),
                                [&] { return wit("diagonal q=t closed form"); });
                    rep.require(lim.p(r, s).eval(Rat(0), Rat(0)) == gen.p(r, s).limit_q1_diagonal(),
                                [&] { return wit("diagonal limit at 1"); });
                    Rat colat0 = col.p(r, s).eval(Rat(0), Rat(0));
                    int target = (r == 0) ? d : r - 1;
                    rep.require(colat0 == (s == target ? Rat(1) : Rat(0)),
                                [&] { return wit("column kernel delta at q=t=0"); });
                    if (!rep.still_passing()) return rep.finish();
                }
            if (!la.empty() && rep.still_passing()) {
                // exact diagonal limits against hook-length ratios
                Int Hla = hook_products(la).H;
                for (int s = 0; s <= d; ++s) {
                    rep.require(lim.p(0, s).eval(Rat(0), Rat(0)) ==
                                    Rat(Hla) / Rat(hook_products(nb.up[s]).H),
                                [&] { return "hook ratio limit at " + la.to_string(); });
                    for (int r = 1; r <= d; ++r) {
                        long h = cell_stats(la, corner_cell(la, nb.dstar[r], nb.up[s])).hook;
                        Rat expect = Rat(Hla * Hla) / Rat(hook_products(nb.dstar[r]).H *
                                                          hook_products(nb.up[s]).H) /
                                     Rat(h * h);
                        rep.require(lim.p(r, s).eval(Rat(0), Rat(0)) == expect,
                                    [&] { return "squared hook limit at " + la.to_string(); });
                    }
                }
            }
        }
    // deterministic degenerations of the sampled correspondence
    if (rep.still_passing()) {
        for (const Permutation& s : detail::all_permutations(std::min(maxN, 4))) {
            SplitMix64 gen_row(1), gen_col(1);
            auto row = sample_forward(s, Rat(0), Rat(0), gen_row);
            auto rs = classical_rs(s, RSVariant::row);
            rep.require(row.first == rs.first && row.second == rs.second,
                        [&] { return "row degeneration differs at sigma=" + s.to_string(); });
            auto colv = sample_forward(s, Rat(0), Rat(0), gen_col, InsertionRules::col);
            auto cs = classical_rs(s, RSVariant::column);
            rep.require(colv.first == cs.first && colv.second == cs.second,
                        [&] { return "column degeneration differs at sigma=" + s.to_string(); });
            GrowthDiagram fr = fgrowth(s, InsertionRules::row);
            rep.require(fr.insertion_tableau() == rs.first && fr.recording_tableau() == rs.second,
                        [&] { return "deterministic growth differs at sigma=" + s.to_string(); });
        }
    }
    // monomial expansion collapses to Schur evaluations at q = t
    if (rep.still_passing()) {
        std::vector<Rat> xs = {make_rat(1, 2), make_rat(1, 3), make_rat(2, 7)};
        for (int n = 1; n <= std::min(maxN, 4); ++n)
            for (const Partition& la : partitions_of(n)) {
                if (la.rows() > 3) continue;
                Rat schur(0);
                for_each_ssyt_chain(la, 3, [&](const std::vector<Partition>& chain) {
                    Rat monoval(1);
                    for (int i = 1; i <= 3; ++i)
                        monoval *= rat_pow(xs[i - 1], chain[i].size() - chain[i - 1].size());
                    schur += monoval;
                });
                Rat p = macdonald_eval(la, MacdonaldKind::P, xs, make_rat(3, 5), make_rat(3, 5));
                Rat qq = macdonald_eval(la, MacdonaldKind::Q, xs, make_rat(3, 5), make_rat(3, 5));
                rep.require(p == schur && qq == schur,
                            [&] { return "Schur collapse fails at " + la.to_string(); });
            }
    }
    return rep.finish();
}

/// P(sigma -> P,Q) = P(sigma^{-1} -> Q,P) for every permutation of n letters.
inline CheckReport check_symmetry(int n = 4) {
    if (n > 5) fail(errc::size_bound_exceeded, "symmetry check bounded at 5");
    detail::Reporter rep("symmetry", "all sigma in S_" + std::to_string(n));
    auto perms = detail::all_permutations(n);
    std::map<Permutation, PairDistribution> dists;
    for (const Permutation& s : perms) dists.emplace(s, forward_exact(s));
    for (const Permutation& s : perms) {
        const PairDistribution& d = dists.at(s);
        const PairDistribution& dinv = dists.at(s.inverse());
        for (const auto& [pq, mass] : d.entries()) {
            rep.require(eq(mass, dinv.mass({pq.second, pq.first})), [&] {
                return "sigma=" + s.to_string() + " P=" + pq.first.to_string() +
                       " Q=" + pq.second.to_string();
            });
            if (!rep.still_passing()) return rep.finish();
        }
    }
    return rep.finish();
}

/// Identity-permutation insertion: the alpha-chain product formula, the
/// q-deformed measure per shape at q = t (summing to 1), and the classical
/// measure in the limit q = t -> 1.
inline CheckReport check_plancherel(int n = 5) {
    if (n > 5) fail(errc::size_bound_exceeded, "plancherel check bounded at 5");
    detail::Reporter rep("plancherel", "identity permutations up to n = " + std::to_string(n));
    for (int m = 1; m <= n && rep.still_passing(); ++m) {
        PairDistribution d = forward_exact(Permutation::identity(m));
        Distribution<Partition> shape_mass_qt;
        for (const auto& [pq, mass] : d.entries()) {
            rep.require(pq.first == pq.second, [&] { return "off-diagonal pair at n=" + std::to_string(m); });
            const StandardTableau& P = pq.first;
            RationalQT expect =
                RationalQT::monomial(Rat(1), 0, static_cast<int>(n_stats(P.shape()).n));
            for (int i = 1; i <= m; ++i) expect *= alpha_pair(P.shape_at(i - 1), P.shape_at(i)).alpha;
            rep.require(eq(mass, expect), [&] { return "alpha-product mass fails at P=" + P.to_string(); });
            shape_mass_qt.add(P.shape(), mass.substitute(RationalQT::Subst::t_equals_q));
            // classical limit per pair: 1/H_lambda
            rep.require(mass.limit_q1_diagonal() == Rat(1) / Rat(hook_products(P.shape()).H),
                        [&] { return "hook-length limit fails at P=" + P.to_string(); });
        }
        RationalQT total = RationalQT::zero();
        Rat classical_total(0);
        for (const auto& [la, mass] : shape_mass_qt.entries()) {
            RationalQT expect = RationalQT::monomial(Rat(syt_count(la)), 0, 0) *
                                RationalQT::monomial(Rat(1), static_cast<int>(n_stats(la).n), 0);
            BracketProduct pw = BracketProduct::one();
            pw.mul_bracket(1, 0, la.size());
            expect = expect * pw.to_rational() / hook_products(la).Hq;
            rep.require(eq(mass, expect.substitute(RationalQT::Subst::t_equals_q)),
                        [&] { return "q-deformed measure fails at shape " + la.to_string(); });
            total += mass;
            Rat f = Rat(syt_count(la));
            classical_total += f * f / Rat(int_factorial(m));
        }
        rep.require(eq(total, RationalQT::one()),
                    [&] { return "q-deformed measure does not sum to 1 at n=" + std::to_string(m); });
        rep.require(classical_total == 1,
                    [&] { return "classical measure does not sum to 1 at n=" + std::to_string(m); });
    }
    return rep.finish();
}

/// Hook walk: stochastic steps, equality with the r = 0 kernel row from far
/// starts, the two-axis product property, the axis closed forms, and the
/// uniform-limit hook ratios.
inline CheckReport check_hookwalk(int maxN = 8) {
    if (maxN > 8) fail(errc::size_bound_exceeded, "hook walk check bounded at 8");
    detail::Reporter rep("hookwalk", "all partitions with |lambda| <= " + std::to_string(maxN));
    for (int n = 0; n <= maxN && rep.still_passing(); ++n)
        for (const Partition& la : partitions_of(n)) {
            const TransitionKernel& k = kernel(la);
            Neighborhoods nb = neighborhoods(la);
            int x0 = (la.empty() ? 0 : la.part(1)) + 1, y0 = la.rows() + 1;
            for (int u = 0; u <= 2 && rep.still_passing(); ++u)
                for (int v = 0; v <= 2; ++v) {
                    if ((u || v) && n > maxN - 2) continue; // keep far starts to smaller shapes
                    Distribution<Partition> dist = absorption_exact(la, Cell{x0 + u, y0 + v});
                    for (int s = 0; s <= k.d; ++s)
                        rep.require(eq(dist.mass(nb.up[s]), k.p(0, s)), [&] {
                            return "absorption differs from kernel at " + la.to_string() + " start offset (" +
                                   std::to_string(u) + "," + std::to_string(v) + ")";
                        });
                }
            // step masses sum to one on exterior cells near the diagram
            for (int x = 1; x <= x0 + 1 && rep.still_passing(); ++x)
                for (int y = 1; y <= y0 + 1; ++y) {
                    Cell c{x, y};
                    if (la.contains_cell(c) || is_outer_corner(la, c)) continue;
                    rep.require(eq(qt_step_distribution(la, c).total(), RationalQT::one()),
                                [&] { return "step masses at " + la.to_string(); });
                }
            // product property and closed forms on each corner
            for (const Partition& nu : nb.up) {
                Cell corner = nu.skew_cell(la);
                for (int off = 1; off <= 2 && rep.still_passing(); ++off) {
                    RationalQT row = axis_closed_form(la, nu, off, WalkAxis::row);
                    RationalQT colf = axis_closed_form(la, nu, off, WalkAxis::column);
                    rep.require(eq(row, absorption_exact(la, Cell{corner.x + off, corner.y}).mass(nu)),
                                [&] { return "row closed form at " + la.to_string(); });
                    rep.require(eq(colf, absorption_exact(la, Cell{corner.x, corner.y + off}).mass(nu)),
                                [&] { return "column closed form at " + la.to_string(); });
                    RationalQT joint =
                        absorption_exact(la, Cell{corner.x + off, corner.y + off}).mass(nu);
                    rep.require(eq(joint, row * colf),
                                [&] { return "product property at " + la.to_string(); });
                }
                if (!rep.still_passing()) return rep.finish();
            }
            // uniform limit: hook ratios summing to one
            if (!rep.still_passing()) return rep.finish();
            Distribution<Partition> d0 = absorption_exact(la, Cell{x0, y0});
            Rat total(0);
            for (const auto& [nu, mass] : d0.entries()) {
                Rat limv = mass.limit_q1_diagonal();
                rep.require(limv == Rat(hook_products(la).H) / Rat(hook_products(nu).H),
                            [&] { return "uniform-limit hook ratio at " + la.to_string(); });
                total += limv;
            }
            rep.require(total == 1, [&] { return "hook ratios do not sum to 1 at " + la.to_string(); });
            // a sampled walk from a corner is that corner
            SplitMix64 g(17);
            if (!nb.up.empty())
                rep.require(walk_sample(la, nb.up[0].skew_cell(la), make_rat(1, 2), make_rat(1, 3), g) ==
                                nb.up[0],
                            [&] { return "corner sample at " + la.to_string(); });
        }
    return rep.finish();
}

/// Hook-sum identities in the q = t -> 1 limit and the principal
/// specialization identities derived from the q = t kernels.
inline CheckReport check_corollaries(int maxN = 8) {
    if (maxN > 8) fail(errc::size_bound_exceeded, "corollaries check bounded at 8");
    detail::Reporter rep("corollaries", "all partitions with |lambda| <= " + std::to_string(maxN));
    RationalQT one_minus_q = RationalQT::bracket(1, 0);
    RationalQT qmono = RationalQT::monomial(Rat(1), 1, 0);
    for (int n = 1; n <= maxN && rep.still_passing(); ++n)
        for (const Partition& la : partitions_of(n)) {
            Neighborhoods nb = neighborhoods(la);
            Rat fla = Rat(syt_count(la));
            // hook-sum identities
            for (const Partition& mu : nb.down) {
                Rat sum(0);
                for (const Partition& nu : nb.up) {
                    long h = cell_stats(la, corner_cell(la, mu, nu)).hook;
                    sum += Rat(syt_count(mu) * syt_count(nu)) / Rat(h * h);
                }
                rep.require(sum == Rat(n + 1) / Rat(n) * fla * fla,
                            [&] { return "down hook-sum at " + la.to_string() + "/" + mu.to_string(); });
            }
            for (const Partition& nu : nb.up) {
                Rat sum = fla * Rat(syt_count(nu)) / Rat(n);
                for (const Partition& mu : nb.down) {
                    long h = cell_stats(la, corner_cell(la, mu, nu)).hook;
                    sum += Rat(syt_count(mu) * syt_count(nu)) / Rat(h * h);
                }
                rep.require(sum == Rat(n + 1) / Rat(n) * fla * fla,
                            [&] { return "up hook-sum at " + la.to_string() + "/" + nu.to_string(); });
            }
            // principal specialization identities. Terms whose added cell lies
            // strictly below the removed cell carry an extra factor q^{2 hook}
            // from the sign normalization of the crossing bracket.
            auto ps_term = [&](const Partition& mu, const Partition& nu) {
                Cell add = nu.skew_cell(la), rem = la.skew_cell(mu);
                int S = (rem.x - add.x) + (add.y - rem.y); // |S| is the crossing hook
                long h = cell_stats(la, corner_cell(la, mu, nu)).hook;
                RationalQT term = detail::principal_specialization(mu) *
                                  detail::principal_specialization(nu) /
                                  (RationalQT::bracket(static_cast<int>(h), 0) *
                                   RationalQT::bracket(static_cast<int>(h), 0));
                if (S < 0) term = term * RationalQT::monomial(Rat(1), -2 * S, 0);
                return term;
            };
            RationalQT ps_la = detail::principal_specialization(la);
            RationalQT up_sum = RationalQT::zero();
            for (const Partition& nu : nb.up) up_sum += detail::principal_specialization(nu);
            rep.require(eq(up_sum, ps_la / one_minus_q),
                        [&] { return "specialized column-strip rule at " + la.to_string(); });
            RationalQT target = qmono * ps_la * ps_la / (one_minus_q * one_minus_q);
            for (const Partition& mu : nb.down) {
                RationalQT sum = RationalQT::zero();
                for (const Partition& nu : nb.up) sum += ps_term(mu, nu);
                rep.require(eq(sum, target),
                            [&] { return "specialized forward sum at " + la.to_string(); });
            }
            for (const Partition& nu : nb.up) {
                RationalQT sum =
                    qmono * ps_la * detail::principal_specialization(nu) / one_minus_q;
                for (const Partition& mu : nb.down) sum += ps_term(mu, nu);
                rep.require(eq(sum, target),
                            [&] { return "specialized backward sum at " + la.to_string(); });
            }
            if (!rep.still_passing()) return rep.finish();
        }
    return rep.finish();
}

struct CheckSpec {
    std::string name;
    std::function<CheckReport(int maxN, int n)> run;
    std::vector<std::string> covers; // operations exercised
};

inline const std::vector<CheckSpec>& registry() {
    static const std::vector<CheckSpec> specs = {
        {"commutator", [](int maxN, int) { return check_commutator(std::min(maxN, 8)); },
         {"psi_phi", "b_coeff", "rc_sets", "neighborhoods", "rq_arith", "rq_eq"}},
        {"cauchy_squarefree", [](int maxN, int) { return check_cauchy_squarefree(std::min(maxN, 4)); },
         {"tableau_weights", "syt_enumerate", "forward_exact", "backward_exact", "enumerate_growths",
          "qrst_insert", "rq_arith", "rq_eq"}},
        {"kernel_laws", [](int maxN, int) { return check_kernel_laws(std::min(maxN, 8)); },
         {"kernel", "weights", "rq_eval", "rq_eq", "rq_arith", "parameters", "neighborhoods",
          "alpha_pair", "bracket_to_rq"}},
        {"specializations", [](int maxN, int) { return check_specializations(std::min(maxN, 8)); },
         {"kernel_col", "kernel_specialized", "rq_substitute", "rq_limit_q1_diagonal", "conjugate",
          "corner_cell", "hook_products", "cell_stats", "sample", "classical_rs", "fgrowth",
          "macdonald_eval", "kernel"}},
        {"symmetry", [](int, int n) { return check_symmetry(n > 0 ? std::min(n, 5) : 4); },
         {"forward_exact", "rq_eq"}},
        {"plancherel", [](int, int n) { return check_plancherel(n > 0 ? std::min(n, 5) : 5); },
         {"forward_exact", "alpha_pair", "n_stats", "hook_products", "syt_enumerate",
          "rq_limit_q1_diagonal", "rq_substitute"}},
        {"hookwalk", [](int maxN, int) { return check_hookwalk(std::min(maxN, 8)); },
         {"absorption_exact", "qt_step_distribution", "exterior_stats", "axis_closed_forms",
          "walk_sample", "kernel", "rq_limit_q1_diagonal"}},
        {"corollaries", [](int maxN, int) { return check_corollaries(std::min(maxN, 8)); },
         {"corner_cell", "cell_stats", "hook_products", "n_stats", "syt_enumerate", "rq_arith",
          "rq_eq"}},
    };
    return specs;
}

inline json report_to_json(const CheckReport& r) {
    json j{{"name", r.name}, {"range", r.range}, {"status", r.pass ? "pass" : "fail"},
           {"seconds", r.seconds}};
    if (r.witness) j["witness"] = *r.witness;
    return j;
}

} // namespace qrst::checks
