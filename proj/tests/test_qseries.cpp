#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "tmfops/qseries.hpp"

using namespace tmfops;

namespace {

// independent sigma_k oracle, naive divisor loop
mpz_class sigma(long k, long m)
{
    mpz_class s = 0;
    for (long d = 1; d <= m; ++d) {
        if (m % d != 0) continue;
        mpz_class dk;
        mpz_ui_pow_ui(dk.get_mpz_t(), d, k);
        s += dk;
    }
    return s;
}

std::vector<long> ints(const QSeries& s)
{
    std::vector<long> v;
    for (long i = 0; i < s.precision(); ++i) {
        REQUIRE(s.coeff(i).is_integer());
        v.push_back(s.coeff(i).numerator().get_si());
    }
    return v;
}

QSeries random_series(std::mt19937_64& rng, long prec)
{
    std::uniform_int_distribution<long> e(-9, 9);
    QSeries s(prec, {});
    for (long i = 0; i < prec; ++i) s.set_coeff(i, LocalizedScalar(e(rng), {}));
    return s;
}

} // namespace

TEST_CASE("tate a4 and a6 series")
{
    CHECK(ints(tate_a4(4)) == std::vector<long>{0, -5, -45, -140});
    CHECK(tate_a4(5).coeff(4).to_string() == "-365");
    CHECK(ints(tate_a4(8)) == std::vector<long>{0, -5, -45, -140, -365, -630, -1260, -1720});

    CHECK(ints(tate_a6(2)) == std::vector<long>{0, -1});
    CHECK(tate_a6(3).coeff(2).to_string() == "-23");
    CHECK(ints(tate_a6(8)) == std::vector<long>{0, -1, -23, -154, -647, -1876, -4802, -9948});

    // formula cross-check against the naive divisor-sum oracle
    auto a4 = tate_a4(60);
    auto a6 = tate_a6(60);
    for (long m = 1; m < 60; ++m) {
        CHECK(a4.coeff(m).numerator() == -5 * sigma(3, m));
        CHECK(12 * a6.coeff(m).numerator() == -(5 * sigma(3, m) + 7 * sigma(5, m)));
    }
}

TEST_CASE("weierstrass invariants of the tate curve")
{
    auto inv = weierstrass_invariants(tate_curve(8));

    CHECK(ints(inv.c4.truncate(4)) == std::vector<long>{1, 240, 2160, 6720});
    CHECK(ints(inv.c6.truncate(3)) == std::vector<long>{-1, 504, 16632});
    CHECK(ints(inv.delta.truncate(5)) == std::vector<long>{0, 1, -24, 252, -1472});

    // c4 = 1 + 240 sum sigma_3 q^m, c6 = -(1 - 504 sum sigma_5 q^m)
    for (long m = 1; m < 8; ++m) {
        CHECK(inv.c4.coeff(m).numerator() == 240 * sigma(3, m));
        CHECK(inv.c6.coeff(m).numerator() == 504 * sigma(5, m));
    }

    // b-series for a1=1, a2=a3=0: b2 = 1, b4 = 2a4, b6 = 4a6, b8 = a6 - a4^2
    auto a4 = tate_a4(8);
    auto a6 = tate_a6(8);
    CHECK(inv.b2 == QSeries::constant(LocalizedScalar::one({}), 8));
    CHECK(inv.b4 == a4 * LocalizedScalar(2, {}));
    CHECK(inv.b6 == a6 * LocalizedScalar(4, {}));
    CHECK(inv.b8 == a6 - a4 * a4);
}

TEST_CASE("eta product oracle")
{
    CHECK(ints(eta_product_delta(3)) == std::vector<long>{0, 1, -24});
    CHECK(eta_product_delta(5).coeff(4).to_string() == "-1472");
    CHECK(eta_product_delta(2).coeff(0).is_zero());

    auto inv = weierstrass_invariants(tate_curve(201));
    auto oracle = eta_product_delta(201);
    CHECK(inv.delta == oracle);
    // deep spot values of the discriminant coefficients
    CHECK(inv.delta.coeff(50).to_string() == "611981400");
    CHECK(inv.delta.coeff(100).to_string() == "37534859200");
    CHECK(inv.delta.coeff(200).to_string() == "-2154174528000");
}

TEST_CASE("j invariant as a laurent expansion")
{
    auto inv = weierstrass_invariants(tate_curve(7));
    CHECK(inv.j.lead_exp == -1);
    CHECK(ints(inv.j.series.truncate(5)) ==
          std::vector<long>{1, 744, 196884, 21493760, 864299970});

    // j * delta = c4^3 up to the window of j
    long n = inv.j.series.precision();
    QSeries prod = inv.j.series * inv.delta.shift_down(1);
    CHECK(prod == inv.c4.pow(3).truncate(n));
}

TEST_CASE("verify_tate_identities reports")
{
    CHECK(verify_tate_identities(2).passed());
    CHECK(verify_tate_identities(50).passed());
    auto rep = verify_tate_identities(200);
    CHECK(rep.passed());
    CHECK(rep.checks.size() == 3);
    for (const auto& c : rep.checks) CHECK(c.status == CheckStatus::PASS);
}

TEST_CASE("series arithmetic properties")
{
    std::mt19937_64 rng(0xDEADBEEF);
    for (int iter = 0; iter < 50; ++iter) {
        QSeries a = random_series(rng, 12), b = random_series(rng, 12), c = random_series(rng, 12);
        CHECK(a * b == b * a);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
    }

    // minimum precision propagation, no silent extension
    std::mt19937_64 rng2(7);
    QSeries s10 = random_series(rng2, 10), s6 = random_series(rng2, 6);
    CHECK((s10 * s6).precision() == 6);
    CHECK((s10 + s6).precision() == 6);

    // unit inverse round-trips
    QSeries u = random_series(rng2, 10);
    u.set_coeff(0, LocalizedScalar(1, {}));
    QSeries one = QSeries::constant(LocalizedScalar::one({}), 10);
    CHECK(u * u.inverse_unit() == one);
    QSeries two = u;
    two.set_coeff(0, LocalizedScalar(2, {}));
    CHECK_THROWS_AS(two.inverse_unit(), NotInvertible); // 2 not a unit of Z
}

TEST_CASE("exact division error paths")
{
    QSeries s(3, {});
    s.set_coeff(1, LocalizedScalar(7, {}));
    CHECK_THROWS_AS(s.divide_exact(2), DivisionNotExact);
    CHECK(s.divide_exact(7).coeff(1).to_string() == "1");

    QSeries half(2, InvertedSet::parse("2"));
    half.set_coeff(0, LocalizedScalar(mpz_class(1), mpz_class(2), InvertedSet::parse("2")));
    CHECK_THROWS_AS(half.divide_exact(3), DivisionNotExact); // non-integer coefficient

    CHECK_THROWS_AS(s.shift_down(2), DivisionNotExact);

    // all tate-curve series are integral over the plain integers
    auto inv = weierstrass_invariants(tate_curve(30));
    CHECK(inv.c4.is_integral());
    CHECK(inv.c6.is_integral());
    CHECK(inv.delta.is_integral());
    CHECK(inv.delta.context().empty());
}
