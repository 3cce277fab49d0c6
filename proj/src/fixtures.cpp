#include "xn77/fixtures.hpp"

#include <array>

namespace xn77 {

namespace {

Solution S(long x, long y, unsigned long alpha, unsigned long beta, unsigned long n) {
    return Solution{mpz_class(x), mpz_class(y), alpha, beta, n};
}

FixtureSet make_theorem1() {
    FixtureSet f;
    f.name = "theorem1";
    f.note = "previously known cases (power families at their smallest member)";
    f.entries = {
        // x^2 + 7^2k = y^n, base of each family
        S(524, 65, 2, 0, 3),
        S(24, 5, 2, 0, 4),
        // x^2 + 7 = y^n
        S(1, 2, 1, 0, 3),
        S(181, 32, 1, 0, 3),
        S(3, 2, 1, 0, 4),
        S(5, 2, 1, 0, 5),
        S(181, 8, 1, 0, 5),
        S(11, 2, 1, 0, 7),
        S(181, 2, 1, 0, 15),
        // x^2 + 11^beta = y^n
        S(2, 5, 0, 2, 3),
        S(4, 3, 0, 1, 3),
        S(58, 15, 0, 1, 3),
        S(9324, 443, 0, 3, 3),
    };
    sort_solutions(f.entries);
    return f;
}

FixtureSet make_theorem2() {
    FixtureSet f;
    f.name = "theorem2";
    f.note = "complete list for n = 3, 4, 6, 9, 12";
    f.entries = {
        S(57, 16, 1, 2, 3),
        S(797, 86, 1, 2, 3),
        S(4229, 284, 3, 4, 3),
        S(3093, 478, 7, 2, 3),
        S(4, 3, 0, 1, 3),
        S(58, 15, 0, 1, 3),
        S(2, 5, 0, 2, 3),
        S(9324, 443, 0, 3, 3),
        S(1, 2, 1, 0, 3),
        S(181, 32, 1, 0, 3),
        S(524, 65, 2, 0, 3),
        S(13, 8, 3, 0, 3),

        S(2, 3, 1, 1, 4),
        S(57, 8, 1, 2, 4),
        S(8343, 92, 5, 2, 4),
        S(3, 2, 1, 0, 4),
        S(24, 5, 2, 0, 4),

        S(57, 4, 1, 2, 6),
        S(13, 2, 3, 0, 9),
        S(57, 2, 1, 2, 12),
    };
    sort_solutions(f.entries);
    return f;
}

FixtureSet make_corollary() {
    FixtureSet f = make_theorem2();
    f.name = "corollary";
    f.note = "complete list including the odd exponents 5, 7, 15";
    f.entries.push_back(S(5, 2, 1, 0, 5));
    f.entries.push_back(S(181, 8, 1, 0, 5));
    f.entries.push_back(S(11, 2, 1, 0, 7));
    f.entries.push_back(S(181, 2, 1, 0, 15));
    sort_solutions(f.entries);
    return f;
}

}  // namespace

const FixtureSet& theorem1_fixture() {
    static const FixtureSet f = make_theorem1();
    return f;
}

const FixtureSet& theorem2_fixture() {
    static const FixtureSet f = make_theorem2();
    return f;
}

const FixtureSet& corollary_fixture() {
    static const FixtureSet f = make_corollary();
    return f;
}

const FixtureSet* fixture_by_name(std::string_view name) {
    if (name == "theorem1") return &theorem1_fixture();
    if (name == "theorem2") return &theorem2_fixture();
    if (name == "corollary") return &corollary_fixture();
    return nullptr;
}

std::vector<std::string> fixture_names() { return {"theorem1", "theorem2", "corollary"}; }

}  // namespace xn77
