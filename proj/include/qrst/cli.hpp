#pragma once

#include <CLI11.hpp>

#include <chrono>
#include <cstdlib>
#include <future>
#include <iostream>

#include "qrst/verify.hpp"
#include "qrst/version.hpp"

namespace qrst::cli {

namespace detail {

inline int env_default_bound(int fallback) {
    if (const char* v = std::getenv("QRST_MAX_SIZE")) {
        try {
            return std::max(1, std::stoi(v));
        } catch (const std::exception&) {
        }
    }
    return fallback;
}

struct Meta {
    std::string command;
    std::optional<std::uint64_t> seed;
    std::optional<std::string> q, t;
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();

    json to_json() const {
        json j{{"command", command},
               {"version", kVersion},
               {"schema_version", kJsonSchemaVersion},
               {"timing_ms",
                std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count()}};
        if (seed) {
            j["seed"] = *seed;
            j["generator"] = SplitMix64::name();
        }
        if (q) j["q"] = *q;
        if (t) j["t"] = *t;
        return j;
    }
};

inline json kernel_to_json(const TransitionKernel& k, const std::string& source) {
    json fwd = json::array(), bwd = json::array();
    for (int r = 0; r <= k.d; ++r) {
        json frow = json::array(), brow = json::array();
        for (int s = 0; s <= k.d; ++s) {
            frow.push_back(rq_to_json(k.p(r, s)));
            brow.push_back(rq_to_json(k.p_bar(r, s)));
        }
        fwd.push_back(frow);
        bwd.push_back(brow);
    }
    json labels = json::array();
    Neighborhoods nb = neighborhoods(k.lambda);
    json ups = json::array(), downs = json::array();
    for (const Partition& nu : nb.up) ups.push_back(nu.to_string());
    for (const Partition& mu : nb.dstar) downs.push_back(mu.to_string());
    return json{{"shape", k.lambda.to_string()}, {"d", k.d},      {"source", source},
                {"dstar", downs},                {"up", ups},     {"forward", fwd},
                {"backward", bwd}};
}

inline std::string pair_key(const TableauPair& pq) {
    return pq.first.to_string() + " | " + pq.second.to_string();
}

} // namespace detail

/// Routes one invocation. Returns the process exit code: 0 success, 1 check
/// failure, 2 usage error.
inline int dispatch(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact (q,t)-deformed Robinson-Schensted toolkit"};
    app.require_subcommand(1);

    detail::Meta meta;
    meta.command = "qrst";
    for (const std::string& a : args) meta.command += " " + a;

    std::string format = "json";
    app.add_option("--format", format, "output format")->check(CLI::IsMember({"json", "table"}));

    // ---- insert ----
    auto* insert = app.add_subcommand("insert", "probabilistic insertion of a permutation or one value");
    insert->fallthrough();
    std::string perm_str, tableau_str, q_str = "0", t_str = "0";
    int value = 0, count = 1000;
    std::uint64_t seed = 0;
    bool exact = false, do_sample = false;
    std::string rules_str = "row";
    insert->add_option("--perm", perm_str, "permutation in one-line notation, e.g. 5,2,6,1,3,4");
    insert->add_option("--tableau", tableau_str, "partial tableau rows bottom-up, e.g. 1,3,4;2,5,7");
    insert->add_option("--value", value, "value to insert into --tableau");
    insert->add_flag("--exact", exact, "compute the exact distribution");
    insert->add_flag("--sample", do_sample, "draw seeded samples");
    insert->add_option("--q", q_str, "q as an exact rational p/r");
    insert->add_option("--t", t_str, "t as an exact rational p/r");
    insert->add_option("--seed", seed, "sampler seed");
    insert->add_option("--count", count, "number of samples");
    insert->add_option("--rules", rules_str, "row or col local rules")
        ->check(CLI::IsMember({"row", "col"}));

    // ---- backward ----
    auto* backward = app.add_subcommand("backward", "backward distribution from a tableau pair");
    backward->fallthrough();
    std::string p_str, qtab_str;
    backward->add_option("--p", p_str, "insertion tableau, rows bottom-up")->required();
    backward->add_option("--qtab,--q-tableau", qtab_str, "recording tableau (defaults to --p)");
    backward->add_flag("--exact", exact, "compute the exact distribution");
    backward->add_flag("--sample", do_sample, "draw seeded samples");
    backward->add_option("--q", q_str, "q as an exact rational p/r");
    backward->add_option("--t", t_str, "t as an exact rational p/r");
    backward->add_option("--seed", seed, "sampler seed");
    backward->add_option("--count", count, "number of samples");

    // ---- probs ----
    auto* probs = app.add_subcommand("probs", "transition kernel of one partition");
    probs->fallthrough();
    std::string shape_str, formulation_str = "explicit", specialize_str;
    bool col_variant = false;
    probs->add_option("--shape", shape_str, "partition, e.g. 2,2 (empty string for the empty shape)");
    probs->add_option("--formulation", formulation_str, "definition, explicit, or lagrange")
        ->check(CLI::IsMember({"definition", "explicit", "lagrange"}));
    probs->add_flag("--col", col_variant, "column variant (q,t inverted)");
    probs->add_option("--specialize", specialize_str, "specialized kernel")
        ->check(CLI::IsMember({"qwhittaker-row", "qwhittaker-col", "hl-row", "hl-col", "diagonal-qt",
                               "diagonal-limit-1"}));

    // ---- hookwalk ----
    auto* hookwalk = app.add_subcommand("hookwalk", "exterior walk absorption");
    hookwalk->fallthrough();
    std::string start_str;
    hookwalk->add_option("--shape", shape_str, "partition")->required(false);
    hookwalk->add_option("--start", start_str, "start cell x,y (default just past the corner)");
    hookwalk->add_flag("--exact", exact, "exact absorption distribution");
    hookwalk->add_flag("--sample", do_sample, "draw seeded walks");
    hookwalk->add_option("--q", q_str, "q as an exact rational p/r");
    hookwalk->add_option("--t", t_str, "t as an exact rational p/r");
    hookwalk->add_option("--seed", seed, "sampler seed");
    hookwalk->add_option("--count", count, "number of walks");

    // ---- growths ----
    auto* growths = app.add_subcommand("growths", "growth diagrams of a permutation");
    growths->fallthrough();
    bool deterministic = false;
    growths->add_option("--perm", perm_str, "permutation in one-line notation")->required();
    growths->add_option("--rules", rules_str, "row or col local rules")
        ->check(CLI::IsMember({"row", "col"}));
    growths->add_flag("--deterministic", deterministic, "only the insertion-bijection growth");

    // ---- verify ----
    auto* verify = app.add_subcommand("verify", "run identity checks");
    verify->fallthrough();
    std::string check_name = "all";
    int max_size = detail::env_default_bound(8);
    int letters = 0;
    bool json_out = false;
    verify->add_option("check", check_name, "check name or 'all'");
    verify->add_option("--max-size", max_size, "partition size bound");
    verify->add_option("--n", letters, "permutation length bound (where applicable)");
    verify->add_flag("--json", json_out, "JSON report");

    try {
        std::vector<std::string> rev(args.rbegin(), args.rend());
        app.parse(rev);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            out << app.help();
            return 0;
        }
        err << e.what() << "\n";
        return 2;
    }

    auto parse_rules = [&] { return rules_str == "col" ? InsertionRules::col : InsertionRules::row; };

    try {
        if (insert->parsed()) {
            if (!exact && !do_sample) exact = true;
            json result;
            if (!tableau_str.empty() || value > 0) {
                if (!perm_str.empty())
                    fail(errc::parse_error, "--perm cannot be combined with --tableau/--value");
                if (value <= 0) fail(errc::parse_error, "--tableau requires a positive --value");
                PartialTableau T =
                    tableau_str.empty() ? PartialTableau() : PartialTableau::from_string(tableau_str);
                if (exact) {
                    Distribution<PartialTableau> d = qrst_insert_exact(T, value);
                    json entries = json::array();
                    for (const auto& [t2, m] : d.entries())
                        entries.push_back(json{{"tableau", t2.to_string()},
                                               {"mass", rq_to_json(m)},
                                               {"display", rq_display(m)}});
                    result["distribution"] = entries;
                } else {
                    meta.seed = seed;
                    meta.q = q_str;
                    meta.t = t_str;
                    SplitMix64 gen(seed);
                    std::map<std::string, int> tally;
                    for (int i = 0; i < count; ++i)
                        ++tally[qrst_insert_sample(T, value, rat_from_string(q_str), rat_from_string(t_str),
                                                   gen)
                                    .to_string()];
                    result["tallies"] = tally;
                    result["count"] = count;
                }
            } else {
                Permutation sigma = Permutation::from_string(perm_str);
                if (exact) {
                    PairDistribution d =
                        forward_exact(sigma, detail::env_default_bound(6), parse_rules());
                    json entries = json::array();
                    for (const auto& [pq, m] : d.entries())
                        entries.push_back(json{{"p", pq.first.to_string()},
                                               {"q", pq.second.to_string()},
                                               {"mass", rq_to_json(m)},
                                               {"display", rq_display(m)}});
                    result["distribution"] = entries;
                } else {
                    meta.seed = seed;
                    meta.q = q_str;
                    meta.t = t_str;
                    SplitMix64 gen(seed);
                    std::map<std::string, int> tally;
                    for (int i = 0; i < count; ++i)
                        ++tally[detail::pair_key(sample_forward(sigma, rat_from_string(q_str),
                                                                rat_from_string(t_str), gen,
                                                                parse_rules()))];
                    result["tallies"] = tally;
                    result["count"] = count;
                }
            }
            result["meta"] = meta.to_json();
            if (format == "table") {
                if (result.contains("distribution"))
                    for (const auto& e : result["distribution"])
                        out << (e.contains("tableau") ? e["tableau"].get<std::string>()
                                                      : e["p"].get<std::string>() + " | " +
                                                            e["q"].get<std::string>())
                            << "  :  " << e["display"].get<std::string>() << "\n";
                else
                    for (const auto& [k, v] : result["tallies"].items())
                        out << k << "  :  " << v.get<int>() << "\n";
            } else {
                out << result.dump(2) << "\n";
            }
            return 0;
        }

        if (backward->parsed()) {
            if (!exact && !do_sample) exact = true;
            StandardTableau P = StandardTableau::from_string(p_str);
            StandardTableau Q = qtab_str.empty() ? P : StandardTableau::from_string(qtab_str);
            json result;
            if (exact) {
                Distribution<Permutation> d = backward_exact(P, Q, detail::env_default_bound(6));
                json entries = json::array();
                for (const auto& [sigma, m] : d.entries())
                    entries.push_back(json{{"sigma", sigma.to_string()},
                                           {"mass", rq_to_json(m)},
                                           {"display", rq_display(m)}});
                result["distribution"] = entries;
            } else {
                meta.seed = seed;
                meta.q = q_str;
                meta.t = t_str;
                SplitMix64 gen(seed);
                std::map<std::string, int> tally;
                for (int i = 0; i < count; ++i)
                    ++tally[sample_backward(P, Q, rat_from_string(q_str), rat_from_string(t_str), gen)
                                .to_string()];
                result["tallies"] = tally;
                result["count"] = count;
            }
            result["meta"] = meta.to_json();
            if (format == "table") {
                if (result.contains("distribution"))
                    for (const auto& e : result["distribution"])
                        out << e["sigma"].get<std::string>() << "  :  " << e["display"].get<std::string>()
                            << "\n";
                else
                    for (const auto& [k, v] : result["tallies"].items())
                        out << k << "  :  " << v.get<int>() << "\n";
            } else {
                out << result.dump(2) << "\n";
            }
            return 0;
        }

        if (probs->parsed()) {
            Partition la = Partition::from_string(shape_str);
            TransitionKernel k;
            std::string source;
            if (!specialize_str.empty()) {
                Specialization sp = Specialization::qWhittaker_row;
                if (specialize_str == "qwhittaker-col") sp = Specialization::qWhittaker_col;
                if (specialize_str == "hl-row") sp = Specialization::HL_row;
                if (specialize_str == "hl-col") sp = Specialization::HL_col;
                if (specialize_str == "diagonal-qt") sp = Specialization::diagonal_qt;
                if (specialize_str == "diagonal-limit-1") sp = Specialization::diagonal_limit_1;
                k = kernel_specialized(la, sp);
                k.lambda = la;
                source = specialize_str;
            } else if (col_variant) {
                k = kernel_col(la);
                source = "column";
            } else {
                Formulation f = Formulation::explicit_params;
                if (formulation_str == "definition") f = Formulation::definition;
                if (formulation_str == "lagrange") f = Formulation::lagrange;
                k = kernel(la, f);
                source = formulation_str;
            }
            if (format == "table") {
                out << "forward kernel of shape [" << la.to_string() << "], source " << source << "\n";
                // factored bracket rendering when the closed form is available
                bool factored = specialize_str.empty() && formulation_str != "definition" &&
                                formulation_str != "lagrange";
                FactoredKernel fk;
                if (factored) fk = kernel_explicit_factored(la, col_variant);
                for (int r = 0; r <= k.d; ++r)
                    for (int s = 0; s <= k.d; ++s)
                        out << "p[" << r << "][" << s << "] = "
                            << (factored ? bracket_display(fk.forward[r][s]) : rq_display(k.p(r, s)))
                            << "\n";
            } else {
                json result = detail::kernel_to_json(k, source);
                result["meta"] = meta.to_json();
                out << result.dump(2) << "\n";
            }
            return 0;
        }

        if (hookwalk->parsed()) {
            if (!exact && !do_sample) exact = true;
            Partition la = Partition::from_string(shape_str);
            Cell start{(la.empty() ? 0 : la.part(1)) + 1, la.rows() + 1};
            if (!start_str.empty()) {
                auto comma = start_str.find(',');
                if (comma == std::string::npos) fail(errc::parse_error, "--start expects x,y");
                start = Cell{std::stoi(start_str.substr(0, comma)), std::stoi(start_str.substr(comma + 1))};
            }
            json result{{"shape", la.to_string()},
                        {"start", std::to_string(start.x) + "," + std::to_string(start.y)}};
            if (exact) {
                Distribution<Partition> d = absorption_exact(la, start);
                json entries = json::array();
                for (const auto& [nu, m] : d.entries())
                    entries.push_back(json{{"corner", nu.to_string()},
                                           {"mass", rq_to_json(m)},
                                           {"display", rq_display(m)}});
                result["distribution"] = entries;
            } else {
                meta.seed = seed;
                meta.q = q_str;
                meta.t = t_str;
                SplitMix64 gen(seed);
                std::map<std::string, int> tally;
                for (int i = 0; i < count; ++i)
                    ++tally[walk_sample(la, start, rat_from_string(q_str), rat_from_string(t_str), gen)
                                .to_string()];
                result["tallies"] = tally;
                result["count"] = count;
            }
            result["meta"] = meta.to_json();
            if (format == "table") {
                if (result.contains("distribution"))
                    for (const auto& e : result["distribution"])
                        out << e["corner"].get<std::string>() << "  :  " << e["display"].get<std::string>()
                            << "\n";
                else
                    for (const auto& [k, v] : result["tallies"].items())
                        out << k << "  :  " << v.get<int>() << "\n";
            } else {
                out << result.dump(2) << "\n";
            }
            return 0;
        }

        if (growths->parsed()) {
            Permutation sigma = Permutation::from_string(perm_str);
            json result;
            if (deterministic) {
                GrowthDiagram g = fgrowth(sigma, parse_rules());
                result["growth"] = json{{"text", g.to_text()},
                                        {"p", g.insertion_tableau().to_string()},
                                        {"q", g.recording_tableau().to_string()}};
                if (format == "table") {
                    out << g.to_text();
                    result.clear();
                }
            } else {
                auto all = enumerate_growths(sigma, detail::env_default_bound(6), parse_rules());
                json list = json::array();
                for (const auto& [g, p] : all) {
                    if (format == "table") {
                        out << g.to_text() << "probability: " << rq_display(p) << "\n\n";
                        continue;
                    }
                    list.push_back(json{{"text", g.to_text()},
                                        {"p", g.insertion_tableau().to_string()},
                                        {"q", g.recording_tableau().to_string()},
                                        {"probability", rq_to_json(p)},
                                        {"display", rq_display(p)}});
                }
                result["growths"] = list;
            }
            if (format != "table") {
                result["meta"] = meta.to_json();
                out << result.dump(2) << "\n";
            }
            return 0;
        }

        if (verify->parsed()) {
            // checks are independent; run them concurrently and merge the
            // reports back in registry order
            std::vector<const checks::CheckSpec*> selected;
            for (const auto& spec : checks::registry())
                if (check_name == "all" || check_name == spec.name) selected.push_back(&spec);
            if (selected.empty()) {
                err << "unknown check: " << check_name << "\n";
                return 2;
            }
            std::vector<std::future<checks::CheckReport>> futures;
            futures.reserve(selected.size());
            for (const checks::CheckSpec* spec : selected)
                futures.push_back(std::async(std::launch::async,
                                             [spec, max_size, letters] { return spec->run(max_size, letters); }));
            bool all_pass = true;
            json reports = json::array();
            for (auto& f : futures) {
                checks::CheckReport r = f.get();
                all_pass &= r.pass;
                if (json_out || format == "json")
                    reports.push_back(checks::report_to_json(r));
                else
                    out << (r.pass ? "pass" : "FAIL") << "  " << r.name << "  (" << r.range << ")"
                        << (r.witness ? "  witness: " + *r.witness : "") << "\n";
            }
            if (json_out || format == "json") {
                json result{{"reports", reports}, {"meta", meta.to_json()}};
                out << result.dump(2) << "\n";
            }
            return all_pass ? 0 : 1;
        }
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}

} // namespace qrst::cli
