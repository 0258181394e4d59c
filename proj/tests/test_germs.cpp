#include <cmath>
#include <filesystem>
#include <random>

#include "doctest.h"
#include "monodromy/error.hpp"
#include "monodromy/germs/coeff_csv.hpp"
#include "monodromy/germs/series.hpp"

using namespace monodromy;
using namespace monodromy::germs;

namespace {

CoeffSeries geometric(cplx q, size_t m) {
    CoeffSeries s;
    cplx p = 1;
    for (size_t n = 0; n < m; ++n, p *= q) s.a.push_back(p);
    return s;
}

CoeffSeries exp_series(size_t m) {
    CoeffSeries s;
    double f = 1;
    for (size_t n = 0; n < m; ++n) {
        if (n) f /= double(n);
        s.a.push_back(f);
    }
    return s;
}

CoeffSeries random_series(std::mt19937_64& rng, size_t m) {
    std::normal_distribution<double> N;
    CoeffSeries s;
    for (size_t n = 0; n < m; ++n) s.a.push_back({N(rng), N(rng)});
    return s;
}

}  // namespace

TEST_CASE("binomial series") {
    auto b = binomial_series(0.5, 6);
    // (1/2)_n / n!
    double t = 1;
    for (int n = 0; n < 6; ++n) {
        if (n) t *= (0.5 + n - 1) / n;
        CHECK(std::abs(b.a[n] - t) < 1e-15);
    }
    auto s = binomial_series(1.0, 5, 2.0);
    for (int n = 0; n < 5; ++n) CHECK(std::abs(s.a[n] - std::pow(0.5, n)) < 1e-15);
}

TEST_CASE("hadamard of the square-root binomial") {
    auto b = binomial_series(0.5, 3);
    auto h = hadamard_coeffs(b, b);
    CHECK(std::abs(h.a[0] - 1.0) < 1e-15);
    CHECK(std::abs(h.a[1] - 0.25) < 1e-15);
    CHECK(std::abs(h.a[2] - 9.0 / 64) < 1e-15);
}

TEST_CASE("hadamard identity, geometric, commutative, associative") {
    std::mt19937_64 rng(3);
    auto f = random_series(rng, 40), g = random_series(rng, 40), k = random_series(rng, 40);
    auto ones = geometric(1.0, 40);
    auto fi = hadamard_coeffs(f, ones);
    for (size_t n = 0; n < 40; ++n) CHECK(fi.a[n] == f.a[n]);
    auto fg = hadamard_coeffs(f, g), gf = hadamard_coeffs(g, f);
    for (size_t n = 0; n < 40; ++n) CHECK(fg.a[n] == gf.a[n]);
    auto l = hadamard_coeffs(fg, k), r = hadamard_coeffs(f, hadamard_coeffs(g, k));
    for (size_t n = 0; n < 40; ++n) CHECK(std::abs(l.a[n] - r.a[n]) <= 1e-14 * std::abs(l.a[n]));
    auto ab = hadamard_coeffs(geometric(cplx(0.5, 0.2), 30), geometric(cplx(-0.3, 0.7), 30));
    auto q = geometric(cplx(0.5, 0.2) * cplx(-0.3, 0.7), 30);
    for (size_t n = 0; n < 30; ++n) CHECK(std::abs(ab.a[n] - q.a[n]) < 1e-15);
}

TEST_CASE("hadamard truncates to the shorter series") {
    auto h = hadamard_coeffs(geometric(1.0, 10), geometric(1.0, 4));
    CHECK(h.size() == 4);
}

TEST_CASE("germ evaluation") {
    auto e = germ_from_series(exp_series(50));
    auto v = germ_eval(e, 1.0);
    // oracle: partial sum at higher order
    double s = 0, t = 1;
    for (int n = 0; n < 120; ++n) {
        if (n) t /= n;
        s += t;
    }
    CHECK(std::abs(v.value - s) < 1e-12);
    CHECK(germ_eval(e, 0.0).value == 1.0);

    CoeffSeries geo = geometric(1.0, 200);
    geo.declared_radius = 1.0;
    CHECK(std::abs(germ_eval(germ_from_series(geo), 0.5).value - 2.0) < 1e-14);
    CHECK_THROWS_AS(germ_eval(germ_from_series(geo), 1.2), Error);
}

TEST_CASE("recentering") {
    CoeffSeries geo = geometric(1.0, 400);
    geo.declared_radius = 1.0;
    auto g = germ_from_series(geo);
    auto r = recenter(g, 0.5, 0.6);
    for (int n = 0; n < 20; ++n) CHECK(std::abs(r.coeffs[n] - std::pow(2.0, n + 1)) < 1e-9 * std::pow(2.0, n + 1));
    auto same = recenter(g, 0.0);
    for (int n = 0; n < 20; ++n) CHECK(same.coeffs[n] == g.coeffs[n]);

    auto e = germ_from_series(exp_series(60));
    auto e1 = recenter(e, 1.0);
    double f = std::exp(1.0);
    for (int n = 0; n < 20; ++n) {
        if (n) f /= n;
        CHECK(std::abs(e1.coeffs[n] - f) < 1e-13);
    }
}

TEST_CASE("recentering composes") {
    CoeffSeries s = binomial_series(cplx(0.3, 0.1), 600, 2.0);
    s.declared_radius = 2.0;
    auto g = germ_from_series(s);
    cplx c1(0.3, 0.2), c2(0.5, 0.45);
    auto twice = recenter(recenter(g, c1), c2);
    auto once = recenter(g, c2);
    for (int n = 0; n < 15; ++n) CHECK(std::abs(twice.coeffs[n] - once.coeffs[n]) < 1e-10 * (1 + std::abs(once.coeffs[n])));
    CHECK_THROWS_AS(recenter(g, 1.5), Error);
}

TEST_CASE("radius estimate") {
    CHECK(std::abs(radius_estimate(geometric(2.0, 200)) - 0.5) < 1e-2);
    double r = radius_estimate(binomial_series(0.5, 4096));
    CHECK(std::abs(r - 1.0) < 0.05);
    CoeffSeries poly;
    poly.a = {1.0, 2.0, 3.0, 0.0, 0.0};
    CHECK(std::isinf(radius_estimate(poly)));
}

TEST_CASE("germ from samples recovers exp") {
    auto g = germ_from_samples([](cplx u) { return std::exp(u); }, 0.0, 0.5, 64, unbounded);
    double f = 1;
    for (int n = 0; n < 12; ++n) {
        if (n) f /= n;
        CHECK(std::abs(g.coeffs[n] - f) < 1e-15 * std::pow(2.0, n + 1));
    }
}

TEST_CASE("coefficient csv round trip") {
    auto path = (std::filesystem::temp_directory_path() / "md_test_coeffs.csv").string();
    auto s = binomial_series(cplx(1.0 / 3, 0.25), 50);
    save_coeffs_csv(path, s);
    auto t = load_coeffs_csv(path);
    REQUIRE(t.size() == s.size());
    for (size_t n = 0; n < s.size(); ++n) CHECK(t.a[n] == s.a[n]);
    std::filesystem::remove(path);
    CHECK_THROWS_AS(load_coeffs_csv(path), Error);
}
