#pragma once

#include "xn77/solution.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace xn77 {

struct FixtureSet {
    std::string name;
    std::string note;
    std::vector<Solution> entries;  // canonically sorted
};

// Previously known special cases: x^2 + 7^{2k} = y^n (base member of each
// power family), x^2 + 7 = y^n, x^2 + 11^beta = y^n.
const FixtureSet& theorem1_fixture();

// Full classification for n in {3, 4, 6, 9, 12}.
const FixtureSet& theorem2_fixture();

// Everything: the above plus the odd prime exponents 5, 7 and the lifted
// exponents 15.
const FixtureSet& corollary_fixture();

// nullptr when the name is unknown
const FixtureSet* fixture_by_name(std::string_view name);

std::vector<std::string> fixture_names();

}  // namespace xn77
