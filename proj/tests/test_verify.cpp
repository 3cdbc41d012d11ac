#include <doctest.h>

#include "bistab/verify.hpp"

TEST_CASE("spectrum verification suite passes") {
    const auto checks = bistab::verify_spectrum();
    REQUIRE(checks.size() >= 4);
    for (const auto& check : checks) {
        INFO(check.name);
        CHECK(check.pass);
    }
}

TEST_CASE("quadrature verification suite passes at reduced sample counts") {
    bistab::VerifyOptions options;
    options.samples = 80'000;
    options.seed = 42;
    for (const auto& check : bistab::verify_quadrature(options)) {
        INFO(check.name, " ", check.details.dump());
        CHECK(check.pass);
    }
}

TEST_CASE("variation verification suite passes") {
    bistab::VerifyOptions options;
    options.n = 256;
    for (const auto& check : bistab::verify_variation(options)) {
        INFO(check.name, " ", check.details.dump());
        CHECK(check.pass);
    }
}
