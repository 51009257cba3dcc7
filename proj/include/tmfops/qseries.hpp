#pragma once

// Truncated q-expansion arithmetic, the Tate-curve coefficient series and
// Weierstrass invariants, with an independent eta-product oracle for delta.

#include <string>
#include <vector>

#include "tmfops/exactmath.hpp"
#include "tmfops/report.hpp"

namespace tmfops {

// Power series in q truncated to coefficients of q^0 .. q^(prec-1).
// Arithmetic propagates the minimum precision of the operands; nothing is
// ever read past the stored window.
class QSeries {
public:
    QSeries(long prec, InvertedSet ctx);
    static QSeries constant(const LocalizedScalar& c, long prec);
    static QSeries monomial(long prec, long k, const LocalizedScalar& c);

    long precision() const { return static_cast<long>(coeffs_.size()); }
    const InvertedSet& context() const { return context_; }
    const LocalizedScalar& coeff(long k) const { return coeffs_.at(k); }
    void set_coeff(long k, LocalizedScalar c) { coeffs_.at(k) = std::move(c); }

    QSeries operator+(const QSeries& o) const;
    QSeries operator-(const QSeries& o) const;
    QSeries operator*(const QSeries& o) const;
    QSeries operator*(const LocalizedScalar& c) const;
    QSeries operator-() const;
    QSeries pow(long e) const; // e >= 0

    QSeries truncate(long prec) const;
    // Series divided by q^k; the dropped coefficients must vanish.
    QSeries shift_down(long k) const;

    // Divisor must divide every coefficient exactly over the integers;
    // throws DivisionNotExact otherwise (bug signal, not an input state).
    QSeries divide_exact(const mpz_class& d) const;

    // Multiplicative inverse; the constant term must be a unit of the
    // context (numerator and denominator both supported on the context).
    QSeries inverse_unit() const;

    // Index of the lowest nonzero coefficient, or -1 for the zero series.
    long valuation() const;

    bool is_integral() const; // every coefficient an integer
    bool operator==(const QSeries& o) const;
    std::string to_string(long max_terms = 8) const;

private:
    std::vector<LocalizedScalar> coeffs_;
    InvertedSet context_;
};

// Series with a possible pole at q = 0: coefficient k of `series`
// multiplies q^(lead_exp + k).
struct LaurentSeries {
    long lead_exp = 0;
    QSeries series;
};

struct WeierstrassData {
    QSeries a1, a2, a3, a4, a6; // equal precision
};

struct WeierstrassInvariants {
    QSeries b2, b4, b6, b8, c4, c6, delta;
    LaurentSeries j;
};

// a4(q) of the Tate curve: coefficient of q^m is -5*sigma_3(m), m >= 1.
QSeries tate_a4(long prec, const InvertedSet& ctx = {});

// a6(q) of the Tate curve: coefficient of q^m is -(5*sigma_3(m)+7*sigma_5(m))/12,
// an exact integer; throws NonIntegralCoefficient if integrality ever fails.
QSeries tate_a6(long prec, const InvertedSet& ctx = {});

// The Tate curve y^2 + xy = x^3 + a4(q) x + a6(q): a1 = 1, a2 = a3 = 0.
WeierstrassData tate_curve(long prec, const InvertedSet& ctx = {});

WeierstrassInvariants weierstrass_invariants(const WeierstrassData& w);

// Independent oracle for delta: q * prod_{n>=1} (1-q^n)^24.
QSeries eta_product_delta(long prec, const InvertedSet& ctx = {});

// Asserts (i) c4^3 - c6^2 = 1728*delta, (ii) delta equals the eta-product
// oracle, (iii) delta has q^1 coefficient 1. Failures are report entries.
OperationReport verify_tate_identities(long prec);

} // namespace tmfops
