#include "xn77/casework.hpp"
#include "xn77/core_arith.hpp"
#include "xn77/fixtures.hpp"
#include "xn77/lucas.hpp"
#include "xn77/quadfield.hpp"
#include "xn77/search.hpp"
#include "xn77/solution.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <iostream>
#include <string>
#include <vector>

using json = nlohmann::ordered_json;
using namespace xn77;

namespace {

constexpr const char* kSchemaVersion = "1";

std::string csv_escape(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}

json solution_json(const Solution& s) {
    return json{{"x", s.x.get_str()},
                {"y", s.y.get_str()},
                {"alpha", s.alpha},
                {"beta", s.beta},
                {"n", s.n}};
}

void emit_json(const std::string& command, const json& params, const char* claim,
               const json& results) {
    json doc;
    doc["schema_version"] = kSchemaVersion;
    doc["command"] = command;
    doc["params"] = params;
    doc["completeness_claim"] = claim;
    doc["results"] = results;
    std::cout << doc.dump(2) << "\n";
}

void emit_solutions(const std::string& command, const json& params, const char* claim,
                    const std::vector<Solution>& sols, const std::string& format) {
    if (format == "json") {
        json results = json::array();
        for (const Solution& s : sols) results.push_back(solution_json(s));
        emit_json(command, params, claim, results);
    } else if (format == "csv") {
        std::cout << "x,y,alpha,beta,n\n";
        for (const Solution& s : sols)
            std::cout << s.x.get_str() << "," << s.y.get_str() << "," << s.alpha << "," << s.beta
                      << "," << s.n << "\n";
    } else {
        if (sols.empty()) {
            std::cout << "no solutions\n";
        } else {
            std::cout << "n\talpha\tbeta\tx\ty\n";
            for (const Solution& s : sols)
                std::cout << s.n << "\t" << s.alpha << "\t" << s.beta << "\t" << s.x.get_str()
                          << "\t" << s.y.get_str() << "\n";
        }
        std::cout << "completeness: " << claim << "\n";
    }
}

struct Options {
    std::string format = "table";
    unsigned threads = 1;
};

int run_search(const Options& opt, const SearchBounds& bounds) {
    bounds.validate();
    auto sols = brute_search(bounds, opt.threads);
    json params{{"alpha_max", bounds.alpha_max}, {"beta_max", bounds.beta_max},
                {"y_max", bounds.y_max},         {"n_min", bounds.n_min},
                {"n_max", bounds.n_max},         {"exceptional_only", bounds.exceptional_only},
                {"threads", opt.threads}};
    emit_solutions("search", params, "CompleteWithinBounds", sols, opt.format);
    return 0;
}

int run_verify(const Options& opt, const std::string& fixtures, const Solution& tuple,
               bool have_tuple) {
    std::vector<Solution> entries;
    json params;
    if (!fixtures.empty()) {
        const FixtureSet* f = fixture_by_name(fixtures);
        if (!f) {
            std::cerr << "unknown fixture set: " << fixtures << "\n";
            return 2;
        }
        entries = f->entries;
        params["fixtures"] = fixtures;
    } else if (have_tuple) {
        entries.push_back(tuple);
        params["tuple"] = solution_json(tuple);
    } else {
        std::cerr << "verify needs either --fixtures NAME or a full --x/--y/--alpha/--beta/--n "
                     "tuple\n";
        return 2;
    }

    bool all_ok = true;
    json results = json::array();
    std::vector<std::pair<Solution, bool>> rows;
    for (const Solution& s : entries) {
        bool ok = verify_solution(s);
        all_ok = all_ok && ok;
        rows.emplace_back(s, ok);
        json r = solution_json(s);
        r["ok"] = ok;
        results.push_back(r);
    }

    if (opt.format == "json") {
        emit_json("verify", params, "FixtureOnly", results);
    } else if (opt.format == "csv") {
        std::cout << "x,y,alpha,beta,n,ok\n";
        for (const auto& [s, ok] : rows)
            std::cout << s.x.get_str() << "," << s.y.get_str() << "," << s.alpha << "," << s.beta
                      << "," << s.n << "," << (ok ? "true" : "false") << "\n";
    } else {
        for (const auto& [s, ok] : rows)
            std::cout << (ok ? "pass  " : "FAIL  ") << to_string(s) << "\n";
        std::cout << (all_ok ? "all verified" : "verification failed") << " (" << rows.size()
                  << " tuple" << (rows.size() == 1 ? "" : "s") << ")\n";
    }
    return all_ok ? 0 : 1;
}

json lucas_params_json(const LucasParams& p) {
    return json{{"u", p.u.get_str()}, {"v", p.v.get_str()}, {"d", p.d}};
}

int run_lucas_terms(const Options& opt, const LucasParams& p, unsigned long count) {
    json params = lucas_params_json(p);
    params["count"] = count;
    std::vector<mpz_class> terms;
    for (unsigned long m = 0; m < count; ++m) terms.push_back(lucas_term(p, m));
    if (opt.format == "json") {
        json results = json::array();
        for (unsigned long m = 0; m < count; ++m)
            results.push_back(json{{"m", m}, {"value", terms[m].get_str()}});
        emit_json("lucas terms", params, "FixtureOnly", results);
    } else if (opt.format == "csv") {
        std::cout << "m,value\n";
        for (unsigned long m = 0; m < count; ++m)
            std::cout << m << "," << terms[m].get_str() << "\n";
    } else {
        for (unsigned long m = 0; m < count; ++m)
            std::cout << "L_" << m << " = " << terms[m].get_str() << "\n";
    }
    return 0;
}

int run_lucas_rank(const Options& opt, const LucasParams& p, const mpz_class& q,
                   unsigned long cap) {
    json params = lucas_params_json(p);
    params["q"] = q.get_str();
    params["cap"] = cap;
    auto rank = rank_of_apparition(p, q, cap);
    if (opt.format == "json") {
        json r{{"q", q.get_str()}, {"cap", cap}};
        r["rank"] = rank ? json(*rank) : json(nullptr);
        emit_json("lucas rank", params, "FixtureOnly", json::array({r}));
    } else if (opt.format == "csv") {
        std::cout << "q,cap,rank\n"
                  << q.get_str() << "," << cap << ","
                  << (rank ? std::to_string(*rank) : std::string("none")) << "\n";
    } else {
        if (rank)
            std::cout << "rank of apparition of " << q.get_str() << " = " << *rank << "\n";
        else
            std::cout << "no apparition of " << q.get_str() << " within " << cap << " terms\n";
    }
    return 0;
}

int run_lucas_primdiv(const Options& opt, const LucasParams& p, unsigned long n,
                      unsigned long trial_bound) {
    json params = lucas_params_json(p);
    params["n"] = n;
    params["trial_bound"] = trial_bound;
    auto verdict = has_primitive_divisor(p, n, trial_bound);
    const char* status = verdict.has_primitive ? "primitive"
                         : verdict.defective_match ? "defective"
                                                   : "unknown";
    if (opt.format == "json") {
        json r;
        r["n"] = n;
        r["has_primitive"] = verdict.has_primitive;
        r["witness"] = verdict.witness ? json(verdict.witness->get_str()) : json(nullptr);
        json factors = json::array();
        for (const auto& f : verdict.prime_factors) factors.push_back(f.get_str());
        r["prime_factors"] = factors;
        r["status"] = status;
        if (verdict.defective_match) {
            const DefectiveEntry& e = *verdict.defective_match;
            r["defective_match"] = json{{"d", e.d},       {"n", e.n}, {"u", e.u}, {"v", e.v},
                                        {"term", e.term}, {"y", e.y}, {"phi", e.phi}};
        } else {
            r["defective_match"] = nullptr;
        }
        emit_json("lucas primdiv", params, "FixtureOnly", json::array({r}));
    } else if (opt.format == "csv") {
        std::cout << "n,has_primitive,witness,status\n"
                  << n << "," << (verdict.has_primitive ? "true" : "false") << ","
                  << (verdict.witness ? verdict.witness->get_str() : std::string("none")) << ","
                  << status << "\n";
    } else {
        mpz_class Ln = lucas_term(p, n);
        std::cout << "L_" << n << " = " << Ln.get_str() << "\n";
        if (verdict.has_primitive) {
            std::cout << "primitive divisor: " << verdict.witness->get_str() << "\n";
        } else if (verdict.defective_match) {
            std::cout << "no primitive divisor; defective pair " << verdict.defective_match->phi
                      << " (y = " << verdict.defective_match->y << ")\n";
        } else {
            std::cout << "no primitive divisor; outside the embedded defective table "
                         "(status unknown)\n";
        }
    }
    return 0;
}

int run_n4(const Options& opt, unsigned long alpha, unsigned long beta) {
    auto sols = solve_n4(alpha, beta);
    json params{{"alpha", alpha}, {"beta", beta}};
    emit_solutions("n4", params, "CompletePerExponentPair", sols, opt.format);
    return 0;
}

int run_mordell(const Options& opt, unsigned long alpha1, unsigned long beta1,
                unsigned long y_bound, unsigned denom_cap) {
    auto pts = mordell_points(alpha1, beta1, y_bound, denom_cap);
    json params{{"alpha1", alpha1}, {"beta1", beta1}, {"y_bound", y_bound},
                {"denom_cap", denom_cap}};
    if (opt.format == "json") {
        json results = json::array();
        for (const CurvePoint& c : pts)
            results.push_back(json{{"y_num", c.y_num.get_str()},
                                   {"x_num", c.x_num.get_str()},
                                   {"denom", c.denom.get_str()}});
        emit_json("mordell", params, "CompleteWithinBounds", results);
    } else if (opt.format == "csv") {
        std::cout << "y_num,x_num,denom\n";
        for (const CurvePoint& c : pts)
            std::cout << c.y_num.get_str() << "," << c.x_num.get_str() << "," << c.denom.get_str()
                      << "\n";
    } else {
        if (pts.empty()) {
            std::cout << "no points\n";
        } else {
            std::cout << "Y = Y_num/denom^2, X = X_num/denom^3 on X^2 = Y^3 - 7^" << alpha1
                      << " * 11^" << beta1 << "\n";
            std::cout << "denom\tY_num\tX_num\n";
            for (const CurvePoint& c : pts)
                std::cout << c.denom.get_str() << "\t" << c.y_num.get_str() << "\t"
                          << c.x_num.get_str() << "\n";
        }
        std::cout << "completeness: CompleteWithinBounds\n";
    }
    return 0;
}

int run_case(const Options& opt, unsigned long n, Parity ap, Parity bp) {
    CaseReport rep = analyze_prime_case(n, ap, bp);
    json params{{"n", n}, {"alpha", to_string(ap)}, {"beta", to_string(bp)}};
    if (opt.format == "json") {
        json steps = json::array();
        for (const CaseStep& s : rep.steps)
            steps.push_back(json{{"kind", to_string(s.kind)},
                                 {"rule", s.rule},
                                 {"detail", s.detail},
                                 {"checked", s.checked}});
        json r{{"n", rep.n},
               {"alpha", to_string(rep.alpha_parity)},
               {"beta", to_string(rep.beta_parity)},
               {"d", rep.d},
               {"verdict", to_string(rep.verdict)},
               {"all_checked", rep.all_checked()},
               {"steps", steps}};
        emit_json("case", params, "FixtureOnly", json::array({r}));
    } else if (opt.format == "csv") {
        std::cout << "kind,checked,rule,detail\n";
        for (const CaseStep& s : rep.steps)
            std::cout << to_string(s.kind) << "," << (s.checked ? "true" : "false") << ","
                      << csv_escape(s.rule) << "," << csv_escape(s.detail) << "\n";
    } else {
        std::cout << "n = " << rep.n << ", alpha " << to_string(rep.alpha_parity) << ", beta "
                  << to_string(rep.beta_parity) << " -> d = " << rep.d << "\n\n";
        for (const CaseStep& s : rep.steps) {
            std::cout << "[" << (s.checked ? "ok" : "FAIL") << "] " << to_string(s.kind) << "\n"
                      << "      " << s.rule << "\n"
                      << "      -- " << s.detail << "\n";
        }
        std::cout << "\nverdict: " << to_string(rep.verdict) << "\n";
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"solver and proof companion for x^2 + 7^alpha 11^beta = y^n, gcd(x,y)=1, "
                 "n >= 3"};
    app.require_subcommand(1);

    Options opt;
    app.add_option("--format", opt.format, "output format")
        ->check(CLI::IsMember({"table", "json", "csv"}))
        ->capture_default_str();
    app.add_option("--threads", opt.threads, "worker threads for scans")
        ->check(CLI::Range(1u, 64u))
        ->capture_default_str();

    // search
    auto* search = app.add_subcommand("search", "bounded exhaustive scan");
    SearchBounds bounds;
    search->add_option("--alpha-max", bounds.alpha_max, "largest exponent of 7");
    search->add_option("--beta-max", bounds.beta_max, "largest exponent of 11");
    search->add_option("--y-max", bounds.y_max, "largest base y")->required();
    search->add_option("--n-min", bounds.n_min, "smallest exponent n")->capture_default_str();
    search->add_option("--n-max", bounds.n_max, "largest exponent n")->capture_default_str();
    search->add_flag("--exceptional-only", bounds.exceptional_only,
                     "keep only alpha odd, beta even, x odd tuples");

    // verify
    auto* verify = app.add_subcommand("verify", "recheck fixture tables or one tuple");
    std::string fixtures;
    std::string vx = "0", vy = "0";
    Solution tuple;
    verify->add_option("--fixtures", fixtures, "fixture set: theorem1, theorem2, corollary");
    auto* ox = verify->add_option("--x", vx, "x value");
    auto* oy = verify->add_option("--y", vy, "y value");
    auto* oa = verify->add_option("--alpha", tuple.alpha, "exponent of 7");
    auto* ob = verify->add_option("--beta", tuple.beta, "exponent of 11");
    auto* on = verify->add_option("--n", tuple.n, "exponent n");

    // lucas
    auto* lucas = app.add_subcommand("lucas", "Lucas sequence tools");
    lucas->require_subcommand(1);
    std::string lu = "1", lv = "1";
    int ld = 7;
    auto add_phi_options = [&](CLI::App* sub) {
        sub->add_option("--u", lu, "doubled trace of phi")->capture_default_str();
        sub->add_option("--v", lv, "doubled sqrt(-d) coordinate")->capture_default_str();
        sub->add_option("--d", ld, "ring selector: 1, 7, 11 or 77")->capture_default_str();
    };
    auto* terms = lucas->add_subcommand("terms", "print L_0 .. L_{count-1}");
    unsigned long count = 14;
    add_phi_options(terms);
    terms->add_option("--count", count, "how many terms")->capture_default_str();
    auto* rank = lucas->add_subcommand("rank", "rank of apparition of q");
    std::string rq = "11";
    unsigned long cap = 60;
    add_phi_options(rank);
    rank->add_option("--q", rq, "prime q")->capture_default_str();
    rank->add_option("--cap", cap, "scan cap")->capture_default_str();
    auto* primdiv = lucas->add_subcommand("primdiv", "primitive divisor verdict for L_n");
    unsigned long pd_n = 5;
    unsigned long trial_bound = 1000000;
    add_phi_options(primdiv);
    primdiv->add_option("--n", pd_n, "term index")->capture_default_str();
    primdiv->add_option("--trial-bound", trial_bound, "trial division bound")
        ->capture_default_str();

    // n4
    auto* n4 = app.add_subcommand("n4", "complete n = 4 solver for one exponent pair");
    unsigned long n4_alpha = 0, n4_beta = 0;
    n4->add_option("--alpha", n4_alpha, "exponent of 7")->required();
    n4->add_option("--beta", n4_beta, "exponent of 11")->required();

    // mordell
    auto* mordell = app.add_subcommand("mordell", "S-integral points on X^2 = Y^3 - 7^a1 11^b1");
    unsigned long m_alpha1 = 0, m_beta1 = 0, m_ybound = 100;
    unsigned m_cap = 0;
    mordell->add_option("--alpha1", m_alpha1, "exponent residue of 7 (0..5)")->required();
    mordell->add_option("--beta1", m_beta1, "exponent residue of 11 (0..5)")->required();
    mordell->add_option("--y-bound", m_ybound, "bound on Y numerator / denom^2")
        ->capture_default_str();
    mordell->add_option("--denom-cap", m_cap, "max combined power of 7 and 11 in denominators")
        ->capture_default_str();

    // case
    auto* kase = app.add_subcommand("case", "exclusion transcript for prime n >= 5");
    unsigned long c_n = 5;
    std::string c_alpha = "odd", c_beta = "even";
    kase->add_option("--n", c_n, "prime exponent n >= 5")->required();
    kase->add_option("--alpha", c_alpha, "parity of alpha")
        ->check(CLI::IsMember({"odd", "even"}))
        ->required();
    kase->add_option("--beta", c_beta, "parity of beta")
        ->check(CLI::IsMember({"odd", "even"}))
        ->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        app.exit(e);
        return 2;
    }

    try {
        if (*search) return run_search(opt, bounds);
        if (*verify) {
            bool have_tuple = *ox || *oy || *oa || *ob || *on;
            if (have_tuple && !(*ox && *oy && *oa && *ob && *on)) {
                std::cerr << "verify needs the full tuple: --x --y --alpha --beta --n\n";
                return 2;
            }
            if (have_tuple) {
                tuple.x = mpz_class(vx);
                tuple.y = mpz_class(vy);
            }
            return run_verify(opt, fixtures, tuple, have_tuple);
        }
        if (*lucas) {
            LucasParams p(mpz_class(lu), mpz_class(lv), ld);
            if (*terms) return run_lucas_terms(opt, p, count);
            if (*rank) return run_lucas_rank(opt, p, mpz_class(rq), cap);
            if (*primdiv) return run_lucas_primdiv(opt, p, pd_n, trial_bound);
        }
        if (*n4) return run_n4(opt, n4_alpha, n4_beta);
        if (*mordell) return run_mordell(opt, m_alpha1, m_beta1, m_ybound, m_cap);
        if (*kase)
            return run_case(opt, c_n, c_alpha == "odd" ? Parity::Odd : Parity::Even,
                            c_beta == "odd" ? Parity::Odd : Parity::Even);
    } catch (const FactorizationTooHard& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
