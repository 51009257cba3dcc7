#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "tmfops/wpsline.hpp"

using namespace tmfops;

namespace {

WPSConfig tmf_cfg()
{
    return {4, 6, "c4", "c6", InvertedSet::parse("2,3"), +1};
}

WPSConfig tmf2_cfg()
{
    return {2, 2, "lambda1", "lambda2", InvertedSet::parse("2"), +1};
}

std::vector<std::pair<long, long>> pairs(const std::vector<H0Monomial>& v)
{
    std::vector<std::pair<long, long>> out;
    for (auto m : v) out.emplace_back(m.a, m.b);
    return out;
}

std::vector<std::pair<long, long>> pairs(const std::vector<H1Monomial>& v)
{
    std::vector<std::pair<long, long>> out;
    for (auto m : v) out.emplace_back(m.i, m.j);
    return out;
}

} // namespace

TEST_CASE("monomial bases of the (4,6) line")
{
    auto cfg = tmf_cfg();
    CHECK(pairs(h0_basis(cfg, 12)) == std::vector<std::pair<long, long>>{{0, 2}, {3, 0}});
    CHECK(pairs(h0_basis(cfg, 0)) == std::vector<std::pair<long, long>>{{0, 0}});
    CHECK(h0_basis(cfg, 2).empty());
    CHECK(h0_basis(cfg, -4).empty());
    CHECK(pairs(h0_basis(cfg, 24)) ==
          std::vector<std::pair<long, long>>{{0, 4}, {3, 2}, {6, 0}});

    CHECK(pairs(h1_basis(cfg, -10)) == std::vector<std::pair<long, long>>{{1, 1}});
    CHECK(h1_basis(cfg, -4).empty());
    CHECK(h1_basis(cfg, -9).empty());
    CHECK(pairs(h1_basis(cfg, -22)) == std::vector<std::pair<long, long>>{{1, 3}, {4, 1}});

    CHECK(monomial_name(cfg, H0Monomial{3, 1}) == "c4^3*c6");
    CHECK(monomial_name(cfg, H0Monomial{0, 0}) == "1");
    CHECK(monomial_name(cfg, H1Monomial{1, 2}) == "1/(c4*c6^2)");
}

TEST_CASE("rank symmetry under the dualizing weight")
{
    for (auto cfg : {tmf_cfg(), tmf2_cfg()}) {
        for (long k = -120; k <= 120; ++k) {
            CAPTURE(cfg.w1);
            CAPTURE(k);
            CHECK(h0_basis(cfg, k).size() == h1_basis(cfg, -k - cfg.w1 - cfg.w2).size());
        }
    }
}

TEST_CASE("koszul matrix oracle agrees with the combinatorial bases")
{
    auto cfg = tmf_cfg();
    auto c = koszul_cohomology(cfg, -10);
    CHECK(c.h0 == FinAbGroup::zero());
    CHECK(c.h1 == FinAbGroup::free(1));

    c = koszul_cohomology(cfg, 0);
    CHECK(c.h0 == FinAbGroup::free(1));
    CHECK(c.h1 == FinAbGroup::zero());

    c = koszul_cohomology(cfg, 24);
    CHECK(c.h0 == FinAbGroup::free(3)); // enumeration of 4a+6b=24: (0,4),(3,2),(6,0)
    CHECK(c.h1 == FinAbGroup::zero());

    // spot checks across both configurations; full sweep lives in acceptance
    for (auto c2 : {tmf_cfg(), tmf2_cfg()})
        for (long w : {-37L, -22L, -11L, -4L, 0L, 7L, 12L, 36L})
            CHECK_NOTHROW(koszul_cohomology(c2, w));
}

TEST_CASE("serre pairing on monomials")
{
    auto cfg = tmf_cfg();
    LocalizedScalar one = LocalizedScalar::one(cfg.base);

    auto f = GradedElement::h0_monomial(cfg, {1, 1}, one);        // c4*c6, weight 10
    auto g = GradedElement::h1_monomial(cfg, {2, 2}, one);        // 1/(c4^2 c6^2), weight -20
    CHECK(serre_pairing(cfg, f, g).to_string() == "1");

    auto unit = GradedElement::h0_monomial(cfg, {0, 0}, one);     // 1
    auto res = GradedElement::h1_monomial(cfg, {1, 1}, one);      // 1/(c4*c6)
    CHECK(serre_pairing(cfg, unit, res).to_string() == "1");

    auto c4cubed = GradedElement::h0_monomial(cfg, {3, 0}, one);  // weight 12
    auto h = GradedElement::h1_monomial(cfg, {1, 3}, one);        // weight -22
    CHECK(serre_pairing(cfg, c4cubed, h).is_zero());

    CHECK_THROWS_AS(serre_pairing(cfg, f, res), WeightMismatch);
    CHECK_THROWS_AS(serre_pairing(cfg, unit, unit), WeightMismatch);

    WPSConfig flipped = cfg;
    flipped.pairing_sign = -1;
    CHECK(serre_pairing(flipped, unit, res).to_string() == "-1");
}

TEST_CASE("pairing matrices are permutation matrices")
{
    for (auto cfg : {tmf_cfg(), tmf2_cfg()}) {
        for (long k = 0; k <= 60; ++k) {
            auto m = pairing_matrix(cfg, k);
            REQUIRE(m.rows() == m.cols());
            for (long i = 0; i < m.rows(); ++i) {
                long row_ones = 0, col_ones = 0;
                for (long j = 0; j < m.cols(); ++j) {
                    CHECK((m.at(i, j) == 0 || m.at(i, j) == 1));
                    if (m.at(i, j) == 1) ++row_ones;
                    if (m.at(j, i) == 1) ++col_ones;
                }
                CHECK(row_ones == 1);
                CHECK(col_ones == 1);
            }
        }
    }
}

TEST_CASE("adams scalars")
{
    InvertedSet z6 = InvertedSet::parse("2,3");
    InvertedSet z30 = InvertedSet::parse("2,3,5");

    CHECK(adams_scalar(4, 5, z6).to_string() == "625");
    CHECK(adams_scalar(0, 7, z6).to_string() == "1");
    CHECK(adams_scalar(-10, 5, z30).to_string() == "1/9765625");
    CHECK_THROWS_AS(adams_scalar(-10, 5, z6), NotInvertible);

    // multiplicativity makes psi^n a ring map on the polynomial part
    for (long w1 : {0L, 4L, 6L, 10L, -10L})
        for (long w2 : {0L, 12L, -22L})
            CHECK(adams_scalar(w1 + w2, 5, z30) ==
                  adams_scalar(w1, 5, z30) * adams_scalar(w2, 5, z30));

    // realized weights of both configurations are even, so psi^{-1} = 1
    for (auto cfg : {tmf_cfg(), tmf2_cfg()})
        for (long k = -60; k <= 60; ++k) {
            if (!h0_basis(cfg, k).empty())
                CHECK(adams_scalar(k, -1, cfg.base).to_string() == "1");
            if (!h1_basis(cfg, k).empty())
                CHECK(adams_scalar(k, -1, cfg.base).to_string() == "1");
        }
}

TEST_CASE("graded element algebra")
{
    auto cfg = tmf_cfg();
    LocalizedScalar inv1728(mpz_class(1), mpz_class(1728), cfg.base);

    // delta = (c4^3 - c6^2)/1728 as an honest weight-12 vector
    auto delta = GradedElement::h0_monomial(cfg, {3, 0}, inv1728) -
                 GradedElement::h0_monomial(cfg, {0, 2}, inv1728);
    CHECK(delta.weight() == 12);
    CHECK(delta.cohomological_degree() == 0);

    auto delta2 = delta * delta;
    CHECK(delta2.weight() == 24);
    // (x - y)^2 / 1728^2 with x = c4^3, y = c6^2
    CHECK(delta2.coeff(H0Monomial{6, 0}) ==
          LocalizedScalar(mpz_class(1), mpz_class(1728) * 1728, cfg.base));
    CHECK(delta2.coeff(H0Monomial{3, 2}) ==
          LocalizedScalar(mpz_class(-2), mpz_class(1728) * 1728, cfg.base));

    // psi^n is scalar multiplication by n^weight
    auto psi5 = apply_adams(cfg, 5, delta);
    CHECK(psi5 == delta.scaled(adams_scalar(12, 5, cfg.base)));

    // cup products into the cokernel kill monomials with a nonnegative exponent
    LocalizedScalar one = LocalizedScalar::one(cfg.base);
    auto c4 = GradedElement::h0_monomial(cfg, {1, 0}, one);
    auto deep = GradedElement::h1_monomial(cfg, {2, 1}, one); // 1/(c4^2 c6)
    auto cup = c4 * deep;
    CHECK(cup.cohomological_degree() == 1);
    CHECK(cup.coeff(H1Monomial{1, 1}).to_string() == "1");
    auto killed = c4 * GradedElement::h1_monomial(cfg, {1, 1}, one);
    CHECK(killed.is_zero());

    CHECK(delta.to_string() == "-1/1728*c6^2 + 1/1728*c4^3");
    CHECK_THROWS_AS(delta + c4, WeightMismatch);
    CHECK_THROWS_AS(deep * deep, WeightMismatch);
}
