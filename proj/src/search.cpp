#include "xn77/search.hpp"

#include "xn77/casework.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <thread>

namespace xn77 {

void SearchBounds::validate() const {
    if (y_max < 1) throw std::invalid_argument("SearchBounds: y_max must be >= 1");
    if (n_min < 3) throw std::invalid_argument("SearchBounds: n_min must be >= 3");
    if (n_max < n_min) throw std::invalid_argument("SearchBounds: n_max must be >= n_min");
}

namespace {

bool exceptional_profile(const Solution& s) {
    return s.alpha % 2 == 1 && s.beta % 2 == 0 && mpz_odd_p(s.x.get_mpz_t());
}

}  // namespace

std::vector<Solution> brute_search(const SearchBounds& bounds, unsigned threads, unsigned long p,
                                   unsigned long q) {
    bounds.validate();
    if (threads < 1) throw std::invalid_argument("brute_search: threads must be >= 1");
    if (p < 2 || q < 2 || p == q)
        throw std::invalid_argument("brute_search: p, q must be distinct and >= 2");

    // power table N[a][b] = p^a q^b, strictly increasing in each index
    std::vector<std::vector<mpz_class>> N(bounds.alpha_max + 1,
                                          std::vector<mpz_class>(bounds.beta_max + 1));
    for (unsigned long a = 0; a <= bounds.alpha_max; ++a)
        for (unsigned long b = 0; b <= bounds.beta_max; ++b) {
            mpz_class pa, qb;
            mpz_ui_pow_ui(pa.get_mpz_t(), p, a);
            mpz_ui_pow_ui(qb.get_mpz_t(), q, b);
            N[a][b] = pa * qb;
        }

    auto scan_stripe = [&](unsigned stripe, std::vector<Solution>& out) {
        mpz_class yn, r, x, g;
        for (unsigned long y = 2 + stripe; y <= bounds.y_max; y += threads) {
            mpz_ui_pow_ui(yn.get_mpz_t(), y, bounds.n_min);
            for (unsigned long n = bounds.n_min; n <= bounds.n_max; ++n) {
                for (unsigned long a = 0; a <= bounds.alpha_max; ++a) {
                    if (N[a][0] >= yn) break;
                    for (unsigned long b = 0; b <= bounds.beta_max; ++b) {
                        if (N[a][b] >= yn) break;
                        r = yn - N[a][b];
                        if (!mpz_perfect_square_p(r.get_mpz_t())) continue;
                        mpz_sqrt(x.get_mpz_t(), r.get_mpz_t());
                        mpz_gcd_ui(g.get_mpz_t(), x.get_mpz_t(), y);
                        if (g != 1) continue;
                        Solution s{x, mpz_class(y), a, b, n};
                        if (bounds.exceptional_only && !exceptional_profile(s)) continue;
                        out.push_back(std::move(s));
                    }
                }
                yn *= y;  // y^(n+1) for the next exponent
            }
        }
    };

    std::vector<Solution> all;
    if (threads == 1) {
        scan_stripe(0, all);
    } else {
        std::vector<std::vector<Solution>> parts(threads);
        std::vector<std::thread> pool;
        for (unsigned t = 0; t < threads; ++t)
            pool.emplace_back([&, t] { scan_stripe(t, parts[t]); });
        for (auto& th : pool) th.join();
        for (auto& part : parts)
            for (auto& s : part) all.push_back(std::move(s));
    }
    sort_solutions(all);
    return all;
}

CrossCheckReport diff_solution_sets(std::vector<Solution> brute, std::vector<Solution> casework) {
    sort_solutions(brute);
    brute.erase(std::unique(brute.begin(), brute.end()), brute.end());
    sort_solutions(casework);
    casework.erase(std::unique(casework.begin(), casework.end()), casework.end());
    CrossCheckReport rep;
    std::set_difference(brute.begin(), brute.end(), casework.begin(), casework.end(),
                        std::back_inserter(rep.brute_only));
    std::set_difference(casework.begin(), casework.end(), brute.begin(), brute.end(),
                        std::back_inserter(rep.casework_only));
    return rep;
}

CrossCheckReport cross_check(const SearchBounds& bounds, unsigned threads) {
    bounds.validate();
    auto in_range = [&](unsigned long n) { return bounds.n_min <= n && n <= bounds.n_max; };

    std::vector<Solution> brute;
    for (const Solution& s : brute_search(bounds, threads)) {
        if (s.n != 3 && s.n != 4 && s.n != 6 && s.n != 9 && s.n != 12) continue;
        if (s.n > 3 && s.n != 4) {
            // keep a composite tuple only when its n = 3 preimage y^(n/3)
            // also fits the bound, otherwise the structured side cannot see it
            mpz_class pre;
            mpz_ui_pow_ui(pre.get_mpz_t(), mpz_get_ui(s.y.get_mpz_t()), s.n / 3);
            if (pre > bounds.y_max) continue;
        }
        brute.push_back(s);
    }

    std::vector<Solution> casework;
    std::vector<Solution> base3;
    if (in_range(3) || in_range(6) || in_range(9) || in_range(12))
        base3 = solve_n3(bounds.alpha_max, bounds.beta_max, bounds.y_max, threads);
    if (in_range(3))
        for (const Solution& s : base3) casework.push_back(s);
    if (in_range(4))
        for (unsigned long a = 0; a <= bounds.alpha_max; ++a)
            for (unsigned long b = 0; b <= bounds.beta_max; ++b)
                for (const Solution& s : solve_n4(a, b)) casework.push_back(s);
    for (unsigned long t : {6ul, 9ul, 12ul})
        if (in_range(t))
            for (const Solution& s : lift_to_composite(base3, t)) casework.push_back(s);

    std::erase_if(casework, [&](const Solution& s) {
        if (s.y > bounds.y_max) return true;
        if (bounds.exceptional_only && !exceptional_profile(s)) return true;
        return false;
    });

    return diff_solution_sets(std::move(brute), std::move(casework));
}

}  // namespace xn77
