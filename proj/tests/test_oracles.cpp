#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "property_suites.hpp"

TEST_CASE("hwa closed form matches the fold over 1000 instances") {
    const auto res = proptest::fold_oracle_suite(1000, false);
    CHECK_MESSAGE(res.ok(), res.failures << " failed; " << res.first_failure);
}

TEST_CASE("hwg closed form matches the fold over 1000 instances") {
    const auto res = proptest::fold_oracle_suite(1000, true);
    CHECK_MESSAGE(res.ok(), res.failures << " failed; " << res.first_failure);
}
