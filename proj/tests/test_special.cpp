#include "doctest.h"
#include "lcdunkl/special.hpp"
#include "oracles.hpp"

using namespace lcd;

TEST_CASE("normalized bessel closed forms") {
    for (double k : {-0.5, 0.0, 1.0, 2.5}) CHECK(bessel_j_norm(k, 0.0) == 1.0);
    CHECK(bessel_j_norm(-0.5, oracle::pi) == doctest::Approx(-1.0).epsilon(1e-15));
    CHECK(std::abs(bessel_j_norm(0.5, oracle::pi)) < 1e-15);
    CHECK(std::abs(bessel_j_norm(0.0, 2.404825557695773)) < 1e-9);
}

TEST_CASE("normalized bessel against boost") {
    for (double k : {-0.5, -0.2, 0.0, 0.3, 1.0, 2.5}) {
        BesselPairEval J(k);
        double worst = 0;
        for (double z = 1e-3; z < 1000; z *= 1.01) {
            const auto p = J(z);
            // relative to the envelope of j_k so zeros do not dominate
            const double env0 = std::pow(2.0, k) * std::tgamma(k + 1) * std::pow(z, -k) * std::min(1.0, std::sqrt(2 / (oracle::pi * z)));
            const double env1 = std::pow(2.0, k + 1) * std::tgamma(k + 2) * std::pow(z, -k - 1) * std::min(1.0, std::sqrt(2 / (oracle::pi * z)));
            worst = std::max(worst, std::abs(p.jk - oracle::jnorm(k, z)) / std::max(env0, std::abs(oracle::jnorm(k, z))));
            worst = std::max(worst, std::abs(p.jk1 - oracle::jnorm(k + 1, z)) / std::max(env1, std::abs(oracle::jnorm(k + 1, z))));
            CHECK(J(-z).jk == p.jk);
        }
        CHECK(worst < 1e-10);
    }
}

TEST_CASE("series and hankel agree on the stitching band") {
    for (double k : {0.0, 0.3, 1.0, 2.5}) {
        BesselPairEval J(k);
        for (double z = 12; z <= 18; z += 0.05) {
            const auto a = J.series(z), b = J.hankel(z);
            const double env = std::pow(2.0, k) * std::tgamma(k + 1) * std::pow(z, -k - 0.5);
            CHECK(std::abs(a.jk - b.jk) / env < 1e-9);
        }
    }
}

TEST_CASE("dunkl kernel") {
    for (double t : {-3.0, -0.2, 0.0, 1.0, 7.0})
        for (double x : {-2.0, 0.0, 0.5, 4.0}) {
            CHECK(std::abs(dunkl_kernel(-0.5, t, x) - std::polar(1.0, t * x)) < 1e-14);
            for (double k : {0.0, 1.0, 2.5}) {
                const cplx e = dunkl_kernel(k, t, x);
                CHECK(std::abs(e) <= 1 + 1e-14);
                CHECK(std::abs(std::conj(e) - dunkl_kernel(k, -t, x)) < 1e-15);
                CHECK(std::abs(e - dunkl_kernel(k, x, t)) < 1e-15);
                CHECK(std::abs(e - oracle::dunkl(k, t, x)) < 1e-11);
            }
        }
    CHECK(dunkl_kernel(1.0, 0.0, 3.0) == cplx(1, 0));
    const cplx v = dunkl_kernel(0.0, 1.0, 1.0);
    CHECK(v.real() == doctest::Approx(0.76519769).epsilon(1e-8));
    CHECK(v.imag() == doctest::Approx(0.44005059).epsilon(1e-8));
}

TEST_CASE("lcdt kernels") {
    KernelContext fourier(Multiplicity(-0.5), CanonicalMatrix(0, -1, 1, 0));
    KernelContext chirp(Multiplicity(0.0), CanonicalMatrix(1, 1, 0.5, 1.5));
    KernelContext dunkl(Multiplicity(1.0), CanonicalMatrix(0, -1, 1, 0));
    for (double l : {-4.0, 0.0, 0.7, 3.0})
        for (double x : {-2.5, 0.0, 1.0, 6.0}) {
            CHECK(std::abs(lcdt_kernel(fourier, l, x) - std::polar(1.0, l * x)) < 1e-14);
            CHECK(std::abs(lcdt_kernel_inv(fourier, x, l) - std::polar(1.0, -l * x)) < 1e-14);
            CHECK(lcdt_kernel(dunkl, l, x) == dunkl_kernel(1.0, l, x));
            for (auto* c : {&chirp, &dunkl}) {
                CHECK(std::abs(lcdt_kernel(*c, l, x)) <= 1 + 1e-14);
                CHECK(std::abs(lcdt_kernel_inv(*c, x, l) - std::conj(lcdt_kernel(*c, l, x))) < 1e-15);
            }
        }
    CHECK(std::abs(lcdt_kernel(chirp, 0.0, 2.0) - std::polar(1.0, 0.5 * 4.0)) < 1e-15);
    CHECK(std::abs(lcdt_kernel_inv(chirp, 0.0, 2.0) - std::polar(1.0, -0.5 * 1.5 * 4.0)) < 1e-15);
    // k = -1/2 matches the classical LCT phase structure
    KernelContext lct(Multiplicity(-0.5), CanonicalMatrix(1, 1, 0.5, 1.5));
    for (double l : {-1.0, 2.0})
        for (double x : {0.5, -3.0})
            CHECK(std::abs(lcdt_kernel(lct, l, x) - std::exp(cplx(0, 0.5 * (1.5 * l * l + x * x) - l * x))) < 1e-14);
}
