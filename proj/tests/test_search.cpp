#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "xn77/fixtures.hpp"
#include "xn77/search.hpp"
#include "xn77/solution.hpp"

#include <algorithm>
#include <vector>

using namespace xn77;

namespace {

// published table restricted to a search box
std::vector<Solution> table_in_box(const SearchBounds& b) {
    std::vector<Solution> out;
    for (const Solution& s : corollary_fixture().entries) {
        if (s.alpha > b.alpha_max || s.beta > b.beta_max) continue;
        if (s.n < b.n_min || s.n > b.n_max) continue;
        if (s.y > b.y_max) continue;
        if (b.exceptional_only &&
            !(s.alpha % 2 == 1 && s.beta % 2 == 0 && mpz_odd_p(s.x.get_mpz_t())))
            continue;
        out.push_back(s);
    }
    sort_solutions(out);
    return out;
}

}  // namespace

TEST_CASE("bounds validation") {
    SearchBounds b;
    b.y_max = 0;
    CHECK_THROWS_AS(b.validate(), std::invalid_argument);
    b = SearchBounds{};
    b.n_min = 2;
    CHECK_THROWS_AS(b.validate(), std::invalid_argument);
    b = SearchBounds{};
    b.y_max = 10;
    b.n_min = 5;
    b.n_max = 4;
    CHECK_THROWS_AS(b.validate(), std::invalid_argument);
    CHECK_THROWS_AS(brute_search(SearchBounds{0, 0, 10, 3, 3, false}, 0), std::invalid_argument);
    CHECK_THROWS_AS(brute_search(SearchBounds{0, 0, 10, 3, 3, false}, 1, 7, 7),
                    std::invalid_argument);
}

TEST_CASE("tiny window, frozen by hand") {
    // alpha,beta <= 1, y <= 3, n = 4: 3^2 + 7 = 2^4 and 2^2 + 77 = 3^4
    SearchBounds b{1, 1, 3, 4, 4, false};
    auto got = brute_search(b);
    REQUIRE(got.size() == 2);
    CHECK(got[0] == Solution{3, 2, 1, 0, 4});
    CHECK(got[1] == Solution{2, 3, 1, 1, 4});
}

TEST_CASE("reproduces the published table on a midsize box") {
    SearchBounds b{2, 2, 100, 3, 5, false};
    auto got = brute_search(b, 2);
    auto want = table_in_box(b);
    CHECK(got == want);
    CHECK(want.size() == 14);  // 8 cubes, 4 fourth powers, 2 fifth powers
}

TEST_CASE("every reported tuple satisfies the equation coprimely") {
    SearchBounds b{3, 3, 50, 3, 6, false};
    for (const Solution& s : brute_search(b)) CHECK(verify_solution(s));
}

TEST_CASE("restricting the profile filters, never adds") {
    SearchBounds all{2, 2, 100, 3, 5, false};
    SearchBounds exc = all;
    exc.exceptional_only = true;
    auto got = brute_search(exc);
    CHECK(got == table_in_box(exc));
    // every kept tuple has x odd, alpha odd, beta even
    for (const Solution& s : got) {
        CHECK(s.alpha % 2 == 1);
        CHECK(s.beta % 2 == 0);
        CHECK(mpz_odd_p(s.x.get_mpz_t()));
    }
    auto rep = diff_solution_sets(got, brute_search(all));
    CHECK(rep.brute_only.empty());  // subset of the unrestricted scan
}

TEST_CASE("growing the box only grows the result") {
    SearchBounds small{1, 1, 60, 3, 4, false};
    SearchBounds big{3, 3, 200, 3, 6, false};
    auto rep = diff_solution_sets(brute_search(small), brute_search(big));
    CHECK(rep.brute_only.empty());
}

TEST_CASE("thread count does not change the answer") {
    SearchBounds b{2, 3, 150, 3, 6, false};
    auto one = brute_search(b, 1);
    auto four = brute_search(b, 4);
    CHECK(one == four);
    CHECK(std::is_sorted(one.begin(), one.end()));
}

TEST_CASE("diff_solution_sets pinpoints planted discrepancies") {
    auto left = corollary_fixture().entries;
    auto right = left;
    Solution removed = right.back();
    right.pop_back();
    Solution bogus{99, 98, 1, 1, 3};
    left.push_back(bogus);
    auto rep = diff_solution_sets(left, right);
    REQUIRE(rep.brute_only.size() == 2);  // bogus plus the entry missing on the right
    CHECK(std::count(rep.brute_only.begin(), rep.brute_only.end(), bogus) == 1);
    CHECK(std::count(rep.brute_only.begin(), rep.brute_only.end(), removed) == 1);
    CHECK(rep.casework_only.empty());
    CHECK(!rep.consistent());
    CHECK(diff_solution_sets(right, right).consistent());
}

TEST_CASE("scan and structured solvers agree on a small region") {
    SearchBounds b{2, 2, 100, 3, 4, false};
    auto rep = cross_check(b, 2);
    CHECK(rep.brute_only.empty());
    CHECK(rep.casework_only.empty());
}
