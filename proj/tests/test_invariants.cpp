#include "doctest.h"

#include <stdexcept>

#include "nodal/invariants.hpp"

using namespace nodal;

TEST_CASE("delta-genus relation") {
    CHECK(delta_genus_check({3, 6, 0, 3}));
    CHECK(delta_genus_check({3, 4, 1, 2}));
    for (long n = 1; n <= 10; ++n) CHECK(delta_genus_check({n, 0, (n - 1) * (n - 1), 1}));
    CHECK_FALSE(delta_genus_check({3, 0, 0, 3}));
    for (long n = 1; n <= 20; ++n) CHECK(delta_genus_check(twistor_input(n)));
}

TEST_CASE("moduli dimensions") {
    const auto d = moduli_dimensions({3, 6, 0, 3, false});
    CHECK(d.h1_minus_h0_W == 2);
    CHECK(d.h1_minus_h0_Z == 6);
    CHECK(d.dim_triples == 7);
    CHECK(d.h0 == 1);
    CHECK(d.h1_W() == 3);

    const auto s = moduli_dimensions({4, 12, 0, 4, true});
    CHECK(s.h1_minus_h0_W == 5);
    CHECK(s.dim_triples == 13);
    CHECK(s.h0 == 2);

    CHECK_THROWS_AS(moduli_dimensions({3, 0, 0, 3}), std::invalid_argument);
    CHECK_THROWS_AS(moduli_dimensions({2, 0, 1, 1}), std::invalid_argument);
    CHECK_THROWS_AS(moduli_dimensions({3, 7, -1, 3}), std::invalid_argument);
}

TEST_CASE("euler characteristic of the normal bundle") {
    CHECK(chi_normal_bundle({3, 6, 0, 3}) == 9);
    CHECK(chi_normal_bundle({4, 12, 0, 4}) == 12);
    for (long n = 1; n <= 10; ++n) {
        CHECK(chi_normal_bundle({n, 0, (n - 1) * (n - 1), 1}) == (n + 1) * (n + 1) - 1);
    }
    CHECK_THROWS_AS(chi_normal_bundle({3, 0, 0, 3}), std::invalid_argument);
}

TEST_CASE("twistor case and kernel codimension") {
    CHECK(twistor_delta(3) == 6);
    CHECK(twistor_delta(1) == 0);
    CHECK(twistor_delta(4) == 12);
    CHECK_THROWS(twistor_delta(0));
    CHECK(kernel_codimension(3) == 2);
    CHECK(kernel_codimension(4) == 4);
    CHECK_THROWS(kernel_codimension(2));
}

TEST_CASE("printed forms agree on every admissible tuple") {
    long tuples = 0;
    for (long n = 3; n <= 10; ++n)
        for (long delta = 0; delta <= n * n; ++delta)
            for (long r = 1; r <= 2 * n; ++r) {
                const long g = r + (n - 1) * (n - 1) - 1 - delta;
                if (g < 0) continue;
                for (bool sym : {false, true}) {
                    const InvariantInput i{n, delta, g, r, sym};
                    REQUIRE(delta_genus_check(i));
                    CHECK(w_dimension_forms(i).agree());
                    CHECK(z_dimension_forms(i).agree());
                    CHECK(triple_dimension_forms(i).agree());
                    CHECK(chi_forms(i).agree());
                    CHECK_NOTHROW(moduli_dimensions(i));
                    CHECK_NOTHROW(chi_normal_bundle(i));
                    ++tuples;
                }
            }
    CHECK(tuples > 1000);
}
