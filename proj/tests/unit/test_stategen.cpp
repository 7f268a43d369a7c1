#include <doctest.h>

#include <cmath>
#include <numbers>

#include "qoptics/stategen.hpp"

using namespace qoptics;

TEST_CASE("coherent amplitudes follow the Poisson envelope") {
    const StateVector c = coherent_state(FockSpace(30), 2.0);
    // scipy oracle: P_4 = e^-4 4^4 / 4!
    CHECK(std::norm(c[4]) == doctest::Approx(0.19536681481316456).epsilon(1e-13));
    CHECK(c[0].real() == doctest::Approx(std::exp(-2.0)));
}

TEST_CASE("coherent state printed amplitudes") {
    const double ref[] = {0.8353, 0.5012, 0.2126, 0.0737, 0.0221, 0.0059};
    const StateVector c = coherent_state(FockSpace(10), 0.6);
    for (int n = 0; n < 6; ++n) {
        CHECK(std::abs(c[n] - ref[n]) <= 5e-5);
    }
}

TEST_CASE("coherent phase carries through") {
    const StateVector c = coherent_state(FockSpace(8), Complex(0.0, 1.0));
    CHECK(std::abs(c[1] / c[0] - Complex(0.0, 1.0)) < 1e-15);
    CHECK(coherent_state(FockSpace(5), 0.0)[0] == Complex(1.0));
}

TEST_CASE("thermal state") {
    const DensityMatrix t = thermal_state(FockSpace(10), 0.5);
    const double ref[] = {0.6667, 0.2222, 0.0741, 0.0247};
    for (int n = 0; n < 4; ++n) {
        CHECK(std::abs(t(n, n) - ref[n]) <= 5e-5);
    }
    CHECK(std::abs(t(0, 1)) == 0.0);
    const DensityMatrix vac = thermal_state(FockSpace(4), 0.0);
    CHECK(vac(0, 0) == Complex(1.0));
    CHECK_THROWS_AS(thermal_state(FockSpace(4), -0.1), DomainError);
}

TEST_CASE("squeezed vacuum against the factorial closed form") {
    const StateVector s = squeezed_vacuum(FockSpace(20), 0.3, std::numbers::pi / 4);
    // scipy oracle, direct factorials
    CHECK(std::abs(s[0] - 0.9780735718238421) < 1e-14);
    CHECK(std::abs(s[2] - Complex(-0.1424625836889311, -0.14246258368893108)) < 1e-14);
    CHECK(std::abs(s[4] - Complex(0.0, 0.05082831747301521)) < 1e-14);
    for (int n = 1; n < 20; n += 2) {
        CHECK(s[n] == Complex(0.0));
    }
    CHECK_THROWS_AS(squeezed_vacuum(FockSpace(4), -0.1, 0.0), DomainError);
    CHECK(squeezed_vacuum(FockSpace(4), 0.0, 1.0)[0] == Complex(1.0));
}

TEST_CASE("number-state-filtered coherent state") {
    const StateVector f = nsfcs(FockSpace(15), 0.8, 4);
    const double ref[] = {0.7275, 0.5820, 0.3292, 0.1521, 0.0};
    for (int n = 0; n < 5; ++n) {
        CHECK(std::abs(f[n] - ref[n]) <= 1e-4);
    }
    CHECK(f[4] == Complex(0.0));
    CHECK(std::abs(norm(f) - 1.0) < 1e-14);
    CHECK_THROWS_AS(nsfcs(FockSpace(4), 0.5, 4), IndexError);
}

TEST_CASE("atom state") {
    const StateVector a = atom_state(1.0 / std::sqrt(2.0), Complex(0.0, 1.0 / std::sqrt(2.0)));
    CHECK(a.space() == Space(QubitSpace{}));
    CHECK_THROWS_AS(atom_state(1.0, 1.0), PreconditionError);
}

TEST_CASE("truncation check") {
    const TruncationReport small = truncation_check(coherent_state(FockSpace(10), 2.0), 1e-3);
    CHECK(std::abs(1.0 - small.deficit - 0.9959) <= 5e-4);
    CHECK_FALSE(small.adequate);
    CHECK(small.requested_dim == 10);
    CHECK(truncation_check(coherent_state(FockSpace(15), 2.0), 1e-3).adequate);
    const TruncationReport th = truncation_check(thermal_state(FockSpace(5), 1.0), 1e-3);
    CHECK(th.deficit == doctest::Approx(std::pow(0.5, 5)));
}
