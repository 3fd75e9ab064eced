#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <cstring>
#include <vector>

#include "chrw/chrw.h"

TEST_CASE("status messages") {
    CHECK(std::strcmp(chrw_status_message(CHRW_OK), "ok") == 0);
    for (int s = 0; s <= 4; ++s)
        CHECK(chrw_status_message(static_cast<chrw_status>(s)) != nullptr);
}

TEST_CASE("bare splitting and Bessel entry points") {
    chrw_params p{1.0, 1.0, 0.0, 1.0};
    CHECK(chrw_bare_splitting(&p) == doctest::Approx(std::sqrt(2.0)));
    chrw_params bad{-1.0, 0.0, 0.0, 1.0};
    CHECK(std::isnan(chrw_bare_splitting(&bad)));
    CHECK(std::isnan(chrw_bare_splitting(nullptr)));

    double j = 0.0;
    CHECK(chrw_bessel_j(0, 0.0, &j) == CHRW_OK);
    CHECK(j == 1.0);
    CHECK(chrw_bessel_j(-1, 0.5, &j) == CHRW_OK);  // negative order via parity
    CHECK(chrw_bessel_j(0, 0.5, nullptr) == CHRW_ERR_INVALID_ARGUMENT);
    CHECK(chrw_bessel_j(0, NAN, &j) == CHRW_ERR_DOMAIN);
}

TEST_CASE("solve handle round trip") {
    chrw_params p{1.0, 0.4, 1.3, 1.2924};
    chrw_solution* s = nullptr;
    REQUIRE(chrw_solve(&p, 0.0, 0, &s) == CHRW_OK);
    REQUIRE(s != nullptr);

    double xi = 0.0, zeta = 0.0, at = 0.0, big = 0.0, res = 0.0;
    CHECK(chrw_solution_get(s, CHRW_FIELD_XI, &xi) == CHRW_OK);
    CHECK(chrw_solution_get(s, CHRW_FIELD_ZETA, &zeta) == CHRW_OK);
    CHECK(chrw_solution_get(s, CHRW_FIELD_A_TILDE, &at) == CHRW_OK);
    CHECK(chrw_solution_get(s, CHRW_FIELD_XI_BIG_TILDE, &big) == CHRW_OK);
    CHECK(chrw_solution_get(s, CHRW_FIELD_RESIDUAL_NORM, &res) == CHRW_OK);
    CHECK(std::abs(xi - 0.6279) < 1e-3);
    CHECK(std::abs(zeta - 0.1855) < 1e-3);
    CHECK(std::abs(at - 0.5273) < 2e-3);
    CHECK(std::abs(big - 1.0085) < 2e-3);
    CHECK(res < 1e-10);
    CHECK(chrw_solution_get(s, CHRW_FIELD_COUNT_, &xi) == CHRW_ERR_INVALID_ARGUMENT);

    double p0 = -1.0;
    CHECK(chrw_population(s, &p, 0.0, &p0) == CHRW_OK);
    CHECK(std::abs(p0) < 1e-12);

    std::vector<double> series(101);
    CHECK(chrw_population_series(s, &p, 0.0, 0.1, series.size(), series.data()) ==
          CHRW_OK);
    for (double v : series) {
        CHECK(v >= -1e-12);
        CHECK(v <= 1.0 + 1e-12);
    }
    CHECK(chrw_population_series(s, &p, 0.0, -0.1, 10, series.data()) ==
          CHRW_ERR_INVALID_ARGUMENT);
    chrw_solution_free(s);
    chrw_solution_free(nullptr);  // must be a no-op
}

TEST_CASE("invalid parameters are rejected") {
    chrw_solution* s = nullptr;
    chrw_params bad{1.0, 0.0, 1.0, -1.0};
    CHECK(chrw_solve(&bad, 0.0, 0, &s) == CHRW_ERR_INVALID_ARGUMENT);
    CHECK(s == nullptr);
    CHECK(chrw_solve(nullptr, 0.0, 0, &s) == CHRW_ERR_INVALID_ARGUMENT);
    chrw_params p{1.0, 0.0, 1.0, 1.0};
    CHECK(chrw_solve(&p, 0.0, 0, nullptr) == CHRW_ERR_INVALID_ARGUMENT);
}

TEST_CASE("frequencies and shifts") {
    chrw_params p{1.0, 4.0, 0.5, 0.5};
    double v = 0.0;
    CHECK(chrw_generalized_rabi(&p, &v) == CHRW_OK);
    CHECK(std::abs(v - 3.6238) < 1e-3);

    chrw_params f1{1.0, 1.0, std::sqrt(2.0), std::sqrt(2.0)};
    CHECK(chrw_rabi_2nd(&f1, &v) == CHRW_OK);
    CHECK(v == doctest::Approx(0.5).epsilon(1e-14));

    chrw_params nob{2.0, 0.0, 0.8, 1.0};
    CHECK(chrw_bs_shift_2nd(&nob, &v) == CHRW_OK);
    CHECK(v == doctest::Approx(0.8 * 0.8 / 32.0).epsilon(1e-14));
    CHECK(chrw_bs_reference_2nd(&nob, &v) == CHRW_OK);
    CHECK(v == doctest::Approx(0.8 * 0.8 / 32.0).epsilon(1e-14));

    chrw_params flux{4.869, 4.154, 4.100, 1.0};
    double split = chrw_bare_splitting(&flux);
    double dw = 0.0, wres = 0.0;
    CHECK(chrw_resonance_shift(&flux, 0.9 * split, 1.1 * split, &dw, &wres) == CHRW_OK);
    CHECK(std::abs(dw - 0.070) < 5e-3);
    CHECK(wres == doctest::Approx(split + dw).epsilon(1e-9));
    // interval without an interior minimum reports non-convergence
    CHECK(chrw_resonance_shift(&flux, 2.0 * split, 3.0 * split, &dw, &wres) ==
          CHRW_ERR_NO_CONVERGENCE);
}

TEST_CASE("baseline populations") {
    chrw_params p{1.0, 0.0, 0.7, 1.0};
    double v = -1.0;
    CHECK(chrw_rabi_rwa_population(&p, 2.0, &v) == CHRW_OK);
    CHECK(v == doctest::Approx(0.5 * (1.0 - std::cos(2.0))).epsilon(1e-12));
    CHECK(chrw_rabi_rwa_frequency(&p, &v) == CHRW_OK);
    CHECK(v == doctest::Approx(0.35).epsilon(1e-14));

    chrw_params rf{1.0, -1.5, 1.5, 1.5};
    CHECK(chrw_default_photon_n(&rf) == 1);
    int off = -1;
    CHECK(chrw_rwa_rf_population(&rf, 1, 0.0, &v, &off) == CHRW_OK);
    CHECK(v == 0.0);
    CHECK(off == 0);
    chrw_params det{1.0, 0.4, 1.3, 1.2924};
    CHECK(chrw_rwa_rf_population(&det, 0, 1.0, &v, &off) == CHRW_OK);
    CHECK(off == 1);
}

TEST_CASE("exact series and spectrum pipeline") {
    chrw_params p{1.0, 1.0, std::sqrt(2.0), std::sqrt(2.0)};
    const size_t n = 4096;
    std::vector<double> series(n);
    REQUIRE(chrw_exact_population_series(&p, 0.0, 0.05, n, 0.0, 0.0, series.data()) ==
            CHRW_OK);
    CHECK(series[0] == 0.0);

    chrw_spectrum* sp = nullptr;
    REQUIRE(chrw_spectrum_compute(series.data(), n, 0.0, 0.05, 8, &sp) == CHRW_OK);
    REQUIRE(sp != nullptr);
    CHECK(chrw_spectrum_size(sp) > 0);
    double nu = -1.0, mag = -1.0;
    CHECK(chrw_spectrum_bin(sp, 0, &nu, &mag) == CHRW_OK);
    CHECK(nu == 0.0);
    CHECK(chrw_spectrum_bin(sp, chrw_spectrum_size(sp), &nu, &mag) ==
          CHRW_ERR_INVALID_ARGUMENT);

    double freqs[8], weights[8];
    size_t found = 0;
    CHECK(chrw_spectrum_peaks(sp, 0.1, 8, freqs, weights, &found) == CHRW_OK);
    CHECK(found >= 2);
    // the strongest line is the generalized Rabi frequency
    double wr = 0.0;
    CHECK(chrw_generalized_rabi(&p, &wr) == CHRW_OK);
    CHECK(std::abs(freqs[0] - wr) < 0.01);

    chrw_comb_kind kind;
    int nn = -1;
    CHECK(chrw_comb_match(freqs[0], p.omega, wr, 0.02, &kind, &nn) == CHRW_OK);
    CHECK(kind == CHRW_COMB_RABI_PLUS);
    CHECK(nn == 0);
    chrw_spectrum_free(sp);
    chrw_spectrum_free(nullptr);

    CHECK(chrw_spectrum_compute(series.data(), 16, 0.0, 0.05, 8, &sp) ==
          CHRW_ERR_INVALID_ARGUMENT);
    CHECK(chrw_exact_population_series(&p, 0.0, -0.05, 10, 0.0, 0.0, series.data()) ==
          CHRW_ERR_INVALID_ARGUMENT);
}
