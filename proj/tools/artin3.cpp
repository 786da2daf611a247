// artin3: Artin factors for the ternary Goldbach problem with prescribed
// primitive roots. Every subcommand prints one JSON envelope on stdout
// (or CSV where --csv applies); errors go to stderr with exit code 1 for
// domain errors and 2 for usage errors.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <iostream>
#include <string>
#include <thread>

#include <CLI11.hpp>

#include "artin/count.hpp"
#include "artin/envelope.hpp"
#include "artin/kernels.hpp"
#include "artin/splitting.hpp"

namespace {

using namespace artin;

int effective_threads(int requested) {
    if (requested > 0) return requested;
    unsigned hc = std::thread::hardware_concurrency();
    return hc > 0 ? static_cast<int>(hc) : 1;
}

Json estimate_json(const SingularSeriesEstimate& est, bool with_exact) {
    Json j = Json::object();
    j.set("value", Json::number(est.value));
    j.set("tail_estimate", Json::number(est.tail_estimate));
    if (with_exact) {
        Json t = Json::object();
        t.set("value", Json::number(est.transcendental_part.value));
        t.set("error_bound", Json::number(est.transcendental_part.error_bound));
        j.set("transcendental_part", std::move(t));
    }
    return j;
}

Json truncation_json(const Truncation& t) {
    Json j = Json::object();
    if (t.pmax) j.set("pmax", Json::integer(t.pmax));
    if (t.kmax) j.set("kmax", Json::integer(t.kmax));
    if (t.qmax) j.set("qmax", Json::integer(t.qmax));
    return j;
}

Json positivity_json(const PositivityResult& pos) {
    Json j = Json::object();
    j.set("positive", Json::boolean(pos.positive));
    if (pos.positive) {
        Json w = Json::array();
        for (int64_t x : pos.witness) w.push(Json::integer(x));
        j.set("witness", std::move(w));
        j.set("witness_modulus", Json::integer(pos.witness_modulus));
    } else {
        j.set("vanishing_modulus", Json::integer(pos.vanishing_modulus));
    }
    return j;
}

Json report_json(const RepresentationReport& rep) {
    Json j = Json::object();
    j.set("n", Json::integer(rep.n));
    j.set("raw_count", Json::integer(static_cast<int64_t>(rep.raw_count)));
    j.set("weighted_sum", Json::number(rep.weighted_sum));
    j.set("predicted", Json::number(rep.predicted.value));
    j.set("ratio", rep.ratio_defined ? Json::number(rep.ratio) : Json());
    return j;
}

SieveData prepare_sieve(int64_t limit, const TripleSpec* triple,
                        const std::string& cache) {
    std::vector<int64_t> bases;
    if (triple)
        for (const auto& s : triple->specs) bases.push_back(s.a);
    if (!cache.empty() && std::filesystem::exists(cache)) {
        try {
            SieveData data = load_sieve(cache);
            bool ok = data.limit >= limit;
            for (int64_t a : bases) ok = ok && data.roots_for(a) != nullptr;
            if (ok) return data;
        } catch (const domain_error& e) {
            std::cerr << "ignoring unusable cache: " << e.what() << "\n";
        }
    }
    SieveData data = sieve(limit);
    if (triple)
        for (const auto& s : triple->specs) mark_primitive_roots(data, s);
    if (!cache.empty()) save_sieve(data, cache);
    return data;
}

struct NRange {
    int64_t lo = 0, hi = 0, step = 0;
};

NRange parse_range(const std::string& s) {
    NRange r;
    char extra;
    if (std::sscanf(s.c_str(), "%ld:%ld:%ld%c", &r.lo, &r.hi, &r.step, &extra) != 3 ||
        r.step <= 0 || r.lo > r.hi)
        throw CLI::ValidationError("--n-range", "expected lo:hi:step with step > 0");
    return r;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Artin factors and prime-representation counts for the "
                 "ternary Goldbach problem with prescribed primitive roots"};
    app.require_subcommand(1);

    // spec
    int64_t sp_a = 0;
    auto* cmd_spec = app.add_subcommand("spec", "Base validation: discriminant and power index");
    cmd_spec->add_option("a", sp_a, "base")->required();

    // delta
    int64_t dl_a = 0, dl_x = 0, dl_q = 0;
    auto* cmd_delta = app.add_subcommand("delta", "Density of primes = x (mod q) with primitive root a");
    cmd_delta->add_option("a", dl_a, "base")->required();
    cmd_delta->add_option("x", dl_x, "residue")->required();
    cmd_delta->add_option("q", dl_q, "modulus")->required();

    // constant
    int64_t ct_a1 = 0, ct_a2 = 0, ct_a3 = 0, ct_n = 0, ct_pmax = 100000;
    int ct_threads = 0;
    auto* cmd_const = app.add_subcommand("constant", "Euler-product Artin factor C(n)");
    cmd_const->add_option("a1", ct_a1)->required();
    cmd_const->add_option("a2", ct_a2)->required();
    cmd_const->add_option("a3", ct_a3)->required();
    cmd_const->add_option("n", ct_n)->required();
    cmd_const->add_option("--pmax", ct_pmax, "Euler product cutoff");
    cmd_const->add_option("--threads", ct_threads, "worker threads (0 = auto)");

    // crosscheck
    int64_t cc_a1 = 0, cc_a2 = 0, cc_a3 = 0, cc_n = 0, cc_pmax = 100000,
            cc_kmax = 30, cc_qmax = 120;
    int cc_threads = 0;
    auto* cmd_cross = app.add_subcommand("crosscheck", "Euler product vs truncated Moebius sum");
    cmd_cross->add_option("a1", cc_a1)->required();
    cmd_cross->add_option("a2", cc_a2)->required();
    cmd_cross->add_option("a3", cc_a3)->required();
    cmd_cross->add_option("n", cc_n)->required();
    cmd_cross->add_option("--pmax", cc_pmax);
    cmd_cross->add_option("--kmax", cc_kmax);
    cmd_cross->add_option("--qmax", cc_qmax);
    cmd_cross->add_option("--threads", cc_threads);

    // table
    int64_t tb_a = 0;
    bool tb_csv = false;
    auto* cmd_table = app.add_subcommand("table", "Admissible residues mod lcm(6, |delta|)");
    cmd_table->add_option("a", tb_a)->required();
    cmd_table->add_flag("--csv", tb_csv, "CSV output");

    // positivity
    int64_t ps_a1 = 0, ps_a2 = 0, ps_a3 = 0, ps_n = 0;
    auto* cmd_pos = app.add_subcommand("positivity", "Is C(n) > 0, with witness");
    cmd_pos->add_option("a1", ps_a1)->required();
    cmd_pos->add_option("a2", ps_a2)->required();
    cmd_pos->add_option("a3", ps_a3)->required();
    cmd_pos->add_option("n", ps_n)->required();

    // verify
    int64_t vf_a1 = 0, vf_a2 = 0, vf_a3 = 0, vf_n = 0, vf_limit = 0,
            vf_pmax = 100000;
    int vf_threads = 0;
    bool vf_excl = false, vf_classical = false, vf_csv = false;
    std::string vf_cache, vf_range;
    auto* cmd_verify = app.add_subcommand("verify", "Count representations and compare with C(n) n^2");
    cmd_verify->add_option("a1", vf_a1)->required();
    cmd_verify->add_option("a2", vf_a2)->required();
    cmd_verify->add_option("a3", vf_a3)->required();
    cmd_verify->add_option("n", vf_n)->required();
    cmd_verify->add_option("--sieve-limit", vf_limit, "sieve limit (0 = max(2e6, n))");
    cmd_verify->add_option("--pmax", vf_pmax);
    cmd_verify->add_flag("--exclude-small", vf_excl,
                         "skip primes dividing 6 delta1 delta2 delta3");
    cmd_verify->add_flag("--classical-baseline", vf_classical,
                         "unrestricted primes vs the classical singular series");
    cmd_verify->add_option("--threads", vf_threads);
    cmd_verify->add_option("--cache", vf_cache, "sieve cache file (AGSV1)");
    cmd_verify->add_option("--n-range", vf_range, "batch mode lo:hi:step");
    cmd_verify->add_flag("--csv", vf_csv, "CSV output (batch mode)");

    // moree
    int64_t mr_a = 0, mr_q = 0, mr_b = 0, mr_kmax = 1000;
    auto* cmd_moree = app.add_subcommand("moree", "Truncated Moebius-sum density vs closed form");
    cmd_moree->add_option("a", mr_a)->required();
    cmd_moree->add_option("q", mr_q)->required();
    cmd_moree->add_option("b", mr_b)->required();
    cmd_moree->add_option("--kmax", mr_kmax);

    // nonfact-demo
    auto* cmd_nonfact = app.add_subcommand(
        "nonfact-demo", "No-Euler-factorization demonstration at a = (-15)^5");

    // rho
    int64_t rh_n = 0, rh_p = 0;
    auto* cmd_rho = app.add_subcommand("rho", "Classical local density rho_p(n)");
    cmd_rho->add_option("n", rh_n)->required();
    cmd_rho->add_option("p", rh_p)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (*cmd_spec) {
            ArtinSpec s = artin_spec(sp_a);
            Json in = Json::object();
            in.set("a", Json::integer(sp_a));
            Json res = Json::object();
            res.set("a", Json::integer(s.a));
            res.set("delta", Json::integer(s.delta));
            res.set("h", Json::integer(s.h));
            std::cout << envelope("spec", std::move(in), std::move(res),
                                  Json::object())
                      << "\n";
        } else if (*cmd_delta) {
            ArtinSpec s = artin_spec(dl_a);
            if (dl_q < 1) throw domain_error("delta: q must be positive");
            Rat ratio = delta_ratio(s, dl_x, dl_q);
            RealWithError A = artin_A(s, kDefaultArtinPmax);
            Json in = Json::object();
            in.set("a", Json::integer(dl_a));
            in.set("x", Json::integer(dl_x));
            in.set("q", Json::integer(dl_q));
            Json res = Json::object();
            res.set("ratio_to_artin_A", Json::string(rat_str(ratio)));
            res.set("delta", Json::number(to_double(ratio) * A.value));
            res.set("artin_A", Json::number(A.value));
            Json tr = Json::object();
            tr.set("pmax", Json::integer(kDefaultArtinPmax));
            std::cout << envelope("delta", std::move(in), std::move(res),
                                  std::move(tr))
                      << "\n";
        } else if (*cmd_const) {
            TripleSpec triple = make_triple(ct_a1, ct_a2, ct_a3);
            SingularSeriesEstimate est =
                euler_constant(triple, ct_n, ct_pmax, effective_threads(ct_threads));
            PositivityResult pos = positivity(triple, ct_n);
            Json in = Json::object();
            in.set("a1", Json::integer(ct_a1));
            in.set("a2", Json::integer(ct_a2));
            in.set("a3", Json::integer(ct_a3));
            in.set("n", Json::integer(ct_n));
            Json res = estimate_json(est, true);
            res.set("modulus_D", Json::integer(triple.modulus));
            res.set("sigma_D", Json::string(rat_str(sigma_d(triple, ct_n, triple.modulus))));
            res.set("positivity", positivity_json(pos));
            std::cout << envelope("constant", std::move(in), std::move(res),
                                  truncation_json(est.truncation))
                      << "\n";
        } else if (*cmd_cross) {
            TripleSpec triple = make_triple(cc_a1, cc_a2, cc_a3);
            SingularSeriesEstimate e =
                euler_constant(triple, cc_n, cc_pmax, effective_threads(cc_threads));
            SingularSeriesEstimate k = ksum_constant(triple, cc_n, cc_kmax, cc_qmax);
            Json in = Json::object();
            in.set("a1", Json::integer(cc_a1));
            in.set("a2", Json::integer(cc_a2));
            in.set("a3", Json::integer(cc_a3));
            in.set("n", Json::integer(cc_n));
            Json res = Json::object();
            res.set("euler", estimate_json(e, true));
            res.set("ksum", estimate_json(k, false));
            double gap = std::abs(e.value - k.value);
            res.set("absolute_gap", Json::number(gap));
            res.set("relative_gap",
                    e.value != 0.0 ? Json::number(gap / std::abs(e.value)) : Json());
            Json tr = Json::object();
            tr.set("pmax", Json::integer(cc_pmax));
            tr.set("kmax", Json::integer(cc_kmax));
            tr.set("qmax", Json::integer(cc_qmax));
            std::cout << envelope("crosscheck", std::move(in), std::move(res),
                                  std::move(tr))
                      << "\n";
        } else if (*cmd_table) {
            std::vector<int64_t> rows = congruence_table(tb_a);
            ArtinSpec s = artin_spec(tb_a);
            int64_t M = lcm64(6, std::abs(s.delta));
            if (tb_csv) {
                std::cout << "residue\n";
                for (int64_t r : rows) std::cout << r << "\n";
            } else {
                Json in = Json::object();
                in.set("a", Json::integer(tb_a));
                Json res = Json::object();
                res.set("modulus", Json::integer(M));
                Json arr = Json::array();
                for (int64_t r : rows) arr.push(Json::integer(r));
                res.set("residues", std::move(arr));
                std::cout << envelope("table", std::move(in), std::move(res),
                                      Json::object())
                          << "\n";
            }
        } else if (*cmd_pos) {
            TripleSpec triple = make_triple(ps_a1, ps_a2, ps_a3);
            PositivityResult pos = positivity(triple, ps_n);
            Json in = Json::object();
            in.set("a1", Json::integer(ps_a1));
            in.set("a2", Json::integer(ps_a2));
            in.set("a3", Json::integer(ps_a3));
            in.set("n", Json::integer(ps_n));
            std::cout << envelope("positivity", std::move(in),
                                  positivity_json(pos), Json::object())
                      << "\n";
        } else if (*cmd_verify) {
            int threads = effective_threads(vf_threads);
            Json in = Json::object();
            in.set("a1", Json::integer(vf_a1));
            in.set("a2", Json::integer(vf_a2));
            in.set("a3", Json::integer(vf_a3));
            in.set("n", Json::integer(vf_n));
            in.set("exclude_small", Json::boolean(vf_excl));
            in.set("classical_baseline", Json::boolean(vf_classical));
            std::vector<int64_t> ns;
            if (!vf_range.empty()) {
                NRange r = parse_range(vf_range);
                for (int64_t n = r.lo; n <= r.hi; n += r.step) ns.push_back(n);
                in.set("n_range", Json::string(vf_range));
            } else {
                ns.push_back(vf_n);
            }
            int64_t maxn = *std::max_element(ns.begin(), ns.end());
            int64_t limit = vf_limit > 0 ? vf_limit
                                         : std::max<int64_t>(2000000, maxn);
            in.set("sieve_limit", Json::integer(limit));
            Json tr = Json::object();
            tr.set("pmax", Json::integer(vf_pmax));

            if (vf_classical) {
                SieveData data = prepare_sieve(limit, nullptr, vf_cache);
                if (vf_csv) std::cout << "n,raw_count,weighted_sum,predicted,ratio\n";
                Json arr = Json::array();
                for (int64_t n : ns) {
                    ClassicalReport rep = classical_compare(n, data, vf_pmax, threads);
                    if (vf_csv) {
                        std::cout << rep.n << "," << rep.raw_count << ","
                                  << format_double(rep.weighted_sum) << ","
                                  << format_double(rep.predicted) << ","
                                  << format_double(rep.ratio) << "\n";
                    } else {
                        Json j = Json::object();
                        j.set("n", Json::integer(rep.n));
                        j.set("raw_count", Json::integer(static_cast<int64_t>(rep.raw_count)));
                        j.set("weighted_sum", Json::number(rep.weighted_sum));
                        j.set("predicted", Json::number(rep.predicted));
                        j.set("ratio", Json::number(rep.ratio));
                        arr.push(std::move(j));
                    }
                }
                if (!vf_csv)
                    std::cout << envelope("verify", std::move(in), std::move(arr),
                                          std::move(tr))
                              << "\n";
            } else {
                TripleSpec triple = make_triple(vf_a1, vf_a2, vf_a3);
                SieveData data = prepare_sieve(limit, &triple, vf_cache);
                if (vf_csv) std::cout << "n,raw_count,weighted_sum,predicted,ratio\n";
                Json arr = Json::array();
                for (int64_t n : ns) {
                    RepresentationReport rep =
                        compare(triple, n, data, vf_pmax, vf_excl, threads);
                    if (vf_csv) {
                        std::cout << rep.n << "," << rep.raw_count << ","
                                  << format_double(rep.weighted_sum) << ","
                                  << format_double(rep.predicted.value) << ","
                                  << (rep.ratio_defined ? format_double(rep.ratio)
                                                        : std::string("inf"))
                                  << "\n";
                    } else {
                        arr.push(report_json(rep));
                    }
                }
                if (!vf_csv)
                    std::cout << envelope("verify", std::move(in), std::move(arr),
                                          std::move(tr))
                              << "\n";
            }
        } else if (*cmd_moree) {
            ArtinSpec s = artin_spec(mr_a);
            if (mr_q < 1) throw domain_error("moree: q must be positive");
            MoreeGap g = moree_identity_check(s, mr_q, mr_b, mr_kmax);
            Json in = Json::object();
            in.set("a", Json::integer(mr_a));
            in.set("q", Json::integer(mr_q));
            in.set("b", Json::integer(mr_b));
            Json res = Json::object();
            res.set("partial", Json::number(g.partial));
            res.set("target", Json::number(g.target));
            res.set("gap", Json::number(g.gap));
            Json tr = Json::object();
            tr.set("kmax", Json::integer(mr_kmax));
            std::cout << envelope("moree", std::move(in), std::move(res),
                                  std::move(tr))
                      << "\n";
        } else if (*cmd_nonfact) {
            NonfactorizationReport rep = nonfactorization_witness();
            Json res = Json::object();
            auto arr_of = [](const std::vector<int64_t>& v) {
                Json a = Json::array();
                for (int64_t x : v) a.push(Json::integer(x));
                return a;
            };
            res.set("support_mod15", arr_of(rep.support_mod15));
            res.set("support_mod3", arr_of(rep.support_mod3));
            res.set("support_mod5", arr_of(rep.support_mod5));
            res.set("sigma15_zero_at_7", Json::boolean(rep.sigma15_zero_at_7));
            Json w3 = Json::array(), w5 = Json::array();
            for (int64_t x : rep.witness_mod3) w3.push(Json::integer(x));
            for (int64_t x : rep.witness_mod5) w5.push(Json::integer(x));
            res.set("witness_mod3", std::move(w3));
            res.set("witness_mod5", std::move(w5));
            res.set("witnesses_positive", Json::boolean(rep.witnesses_positive));
            res.set("all_ok", Json::boolean(rep.all_ok));
            std::cout << envelope("nonfact-demo", Json::object(), std::move(res),
                                  Json::object())
                      << "\n";
            if (!rep.all_ok) return 1;
        } else if (*cmd_rho) {
            Rat r = classical_rho(rh_n, rh_p);
            Json in = Json::object();
            in.set("n", Json::integer(rh_n));
            in.set("p", Json::integer(rh_p));
            Json res = Json::object();
            res.set("rho", Json::string(rat_str(r)));
            res.set("rho_value", Json::number(to_double(r)));
            std::cout << envelope("rho", std::move(in), std::move(res),
                                  Json::object())
                      << "\n";
        }
    } catch (const domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
