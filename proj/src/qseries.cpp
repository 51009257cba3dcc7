#include "tmfops/qseries.hpp"

#include <algorithm>

namespace tmfops {

QSeries::QSeries(long prec, InvertedSet ctx) : context_(std::move(ctx))
{
    if (prec < 1) throw std::invalid_argument("QSeries: precision must be >= 1");
    coeffs_.assign(prec, LocalizedScalar::zero(context_));
}

QSeries QSeries::constant(const LocalizedScalar& c, long prec)
{
    QSeries s(prec, c.context());
    s.coeffs_[0] = c;
    return s;
}

QSeries QSeries::monomial(long prec, long k, const LocalizedScalar& c)
{
    QSeries s(prec, c.context());
    s.coeffs_.at(k) = c;
    return s;
}

QSeries QSeries::operator+(const QSeries& o) const
{
    long n = std::min(precision(), o.precision());
    QSeries r(n, context_.union_with(o.context_));
    for (long i = 0; i < n; ++i) r.coeffs_[i] = coeffs_[i] + o.coeffs_[i];
    return r;
}

QSeries QSeries::operator-(const QSeries& o) const
{
    long n = std::min(precision(), o.precision());
    QSeries r(n, context_.union_with(o.context_));
    for (long i = 0; i < n; ++i) r.coeffs_[i] = coeffs_[i] - o.coeffs_[i];
    return r;
}

QSeries QSeries::operator*(const QSeries& o) const
{
    long n = std::min(precision(), o.precision());
    QSeries r(n, context_.union_with(o.context_));
    for (long i = 0; i < n; ++i) {
        if (coeffs_[i].is_zero()) continue;
        for (long j = 0; i + j < n; ++j) {
            if (o.coeffs_[j].is_zero()) continue;
            r.coeffs_[i + j] += coeffs_[i] * o.coeffs_[j];
        }
    }
    return r;
}

QSeries QSeries::operator*(const LocalizedScalar& c) const
{
    QSeries r = *this;
    for (auto& x : r.coeffs_) x *= c;
    r.context_ = context_.union_with(c.context());
    return r;
}

QSeries QSeries::operator-() const
{
    QSeries r = *this;
    for (auto& x : r.coeffs_) x = -x;
    return r;
}

QSeries QSeries::pow(long e) const
{
    if (e < 0) throw std::invalid_argument("QSeries::pow: negative exponent");
    QSeries acc = constant(LocalizedScalar::one(context_), precision());
    QSeries base = *this;
    while (e > 0) {
        if (e & 1) acc = acc * base;
        base = base * base;
        e >>= 1;
    }
    return acc;
}

QSeries QSeries::truncate(long prec) const
{
    if (prec > precision()) throw std::invalid_argument("QSeries::truncate: cannot extend");
    QSeries r(prec, context_);
    for (long i = 0; i < prec; ++i) r.coeffs_[i] = coeffs_[i];
    return r;
}

QSeries QSeries::shift_down(long k) const
{
    if (k < 0 || k >= precision()) throw std::invalid_argument("QSeries::shift_down: bad shift");
    for (long i = 0; i < k; ++i)
        if (!coeffs_[i].is_zero())
            throw DivisionNotExact("shift_down would drop the nonzero q^" + std::to_string(i) +
                                   " coefficient");
    QSeries r(precision() - k, context_);
    for (long i = k; i < precision(); ++i) r.coeffs_[i - k] = coeffs_[i];
    return r;
}

QSeries QSeries::divide_exact(const mpz_class& d) const
{
    if (d == 0) throw DivisionNotExact("division by zero");
    QSeries r = *this;
    for (long i = 0; i < precision(); ++i) {
        const auto& c = coeffs_[i];
        if (!c.is_integer() || !mpz_divisible_p(c.numerator().get_mpz_t(), d.get_mpz_t()))
            throw DivisionNotExact(d.get_str() + " does not divide the q^" + std::to_string(i) +
                                   " coefficient " + c.to_string());
        mpz_class q;
        mpz_divexact(q.get_mpz_t(), c.numerator().get_mpz_t(), d.get_mpz_t());
        r.coeffs_[i] = LocalizedScalar(q, c.context());
    }
    return r;
}

QSeries QSeries::inverse_unit() const
{
    const LocalizedScalar& u = coeffs_[0];
    if (u.is_zero() || !context_.is_unit(u.numerator()) || !context_.is_unit(u.denominator()))
        throw NotInvertible("constant term " + u.to_string() + " is not a unit of " +
                            context_.to_string());
    QSeries r(precision(), context_);
    r.coeffs_[0] = u.inverse();
    for (long k = 1; k < precision(); ++k) {
        LocalizedScalar acc = LocalizedScalar::zero(context_);
        for (long i = 1; i <= k; ++i) acc += coeffs_[i] * r.coeffs_[k - i];
        r.coeffs_[k] = -(acc / u);
    }
    return r;
}

long QSeries::valuation() const
{
    for (long i = 0; i < precision(); ++i)
        if (!coeffs_[i].is_zero()) return i;
    return -1;
}

bool QSeries::is_integral() const
{
    return std::all_of(coeffs_.begin(), coeffs_.end(),
                       [](const LocalizedScalar& c) { return c.is_integer(); });
}

bool QSeries::operator==(const QSeries& o) const
{
    if (precision() != o.precision()) return false;
    for (long i = 0; i < precision(); ++i)
        if (coeffs_[i] != o.coeffs_[i]) return false;
    return true;
}

std::string QSeries::to_string(long max_terms) const
{
    std::string s;
    long shown = 0;
    for (long i = 0; i < precision() && shown < max_terms; ++i) {
        if (coeffs_[i].is_zero()) continue;
        if (!s.empty()) s += " + ";
        s += coeffs_[i].to_string();
        if (i > 0) s += "*q^" + std::to_string(i);
        ++shown;
    }
    if (s.empty()) s = "0";
    return s + " + O(q^" + std::to_string(precision()) + ")";
}

namespace {

// sigma_k(m) for m < prec by sieve
std::vector<mpz_class> divisor_power_sums(long k, long prec)
{
    std::vector<mpz_class> s(prec, 0);
    for (long d = 1; d < prec; ++d) {
        mpz_class dk;
        mpz_ui_pow_ui(dk.get_mpz_t(), d, k);
        for (long m = d; m < prec; m += d) s[m] += dk;
    }
    return s;
}

} // namespace

QSeries tate_a4(long prec, const InvertedSet& ctx)
{
    auto s3 = divisor_power_sums(3, prec);
    QSeries a4(prec, ctx);
    for (long m = 1; m < prec; ++m) a4.set_coeff(m, LocalizedScalar(mpz_class(-5 * s3[m]), ctx));
    return a4;
}

QSeries tate_a6(long prec, const InvertedSet& ctx)
{
    auto s3 = divisor_power_sums(3, prec);
    auto s5 = divisor_power_sums(5, prec);
    QSeries a6(prec, ctx);
    for (long m = 1; m < prec; ++m) {
        mpz_class v = 5 * s3[m] + 7 * s5[m]; // 12 | 5n^3 + 7n^5 termwise
        if (!mpz_divisible_ui_p(v.get_mpz_t(), 12))
            throw NonIntegralCoefficient("q^" + std::to_string(m) +
                                         " coefficient of a6 is not integral");
        mpz_divexact_ui(v.get_mpz_t(), v.get_mpz_t(), 12);
        a6.set_coeff(m, LocalizedScalar(mpz_class(-v), ctx));
    }
    return a6;
}

WeierstrassData tate_curve(long prec, const InvertedSet& ctx)
{
    QSeries one = QSeries::constant(LocalizedScalar::one(ctx), prec);
    QSeries zero(prec, ctx);
    return {one, zero, zero, tate_a4(prec, ctx), tate_a6(prec, ctx)};
}

WeierstrassInvariants weierstrass_invariants(const WeierstrassData& w)
{
    const auto& [a1, a2, a3, a4, a6] = w;
    long prec = a1.precision();
    if (a2.precision() != prec || a3.precision() != prec || a4.precision() != prec ||
        a6.precision() != prec)
        throw std::invalid_argument("weierstrass_invariants: precision mismatch");
    const InvertedSet& ctx = a1.context();

    QSeries b2 = a1 * a1 + a2 * LocalizedScalar(4, ctx);
    QSeries b4 = a4 * LocalizedScalar(2, ctx) + a1 * a3;
    QSeries b6 = a3 * a3 + a6 * LocalizedScalar(4, ctx);
    QSeries b8 = a1 * a1 * a6 + a2 * a6 * LocalizedScalar(4, ctx) - a1 * a3 * a4 + a2 * a3 * a3 -
                 a4 * a4;
    QSeries c4 = b2 * b2 - b4 * LocalizedScalar(24, ctx);
    QSeries c6 = -(b2 * b2 * b2) + b2 * b4 * LocalizedScalar(36, ctx) -
                 b6 * LocalizedScalar(216, ctx);
    QSeries delta = (c4.pow(3) - c6 * c6).divide_exact(1728);

    long v = delta.valuation();
    if (v < 0) throw NotInvertible("delta is the zero series, j undefined");
    QSeries unit = delta.shift_down(v);
    LaurentSeries j{-v, c4.pow(3).truncate(prec - v) * unit.inverse_unit()};

    return {std::move(b2), std::move(b4), std::move(b6),    std::move(b8),
            std::move(c4), std::move(c6), std::move(delta), std::move(j)};
}

QSeries eta_product_delta(long prec, const InvertedSet& ctx)
{
    // prod (1-q^n)^24 up to q^(prec-2), then shift up by the leading q
    std::vector<mpz_class> c(std::max(prec - 1, 1L), 0);
    c[0] = 1;
    long n1 = static_cast<long>(c.size());
    for (long n = 1; n < n1; ++n)
        for (int rep = 0; rep < 24; ++rep)
            for (long i = n1 - 1; i >= n; --i) c[i] -= c[i - n];
    QSeries r(prec, ctx);
    for (long i = 0; i + 1 < prec; ++i) r.set_coeff(i + 1, LocalizedScalar(c[i], ctx));
    return r;
}

OperationReport verify_tate_identities(long prec)
{
    if (prec < 2) throw std::invalid_argument("verify_tate_identities: precision must be >= 2");
    OperationReport rep;
    rep.suite = "tate";
    rep.window_lo = 0;
    rep.window_hi = prec - 1;

    auto inv = weierstrass_invariants(tate_curve(prec));
    auto mismatch = [](const QSeries& s) {
        long v = s.valuation();
        return v < 0 ? std::string("0")
                     : "q^" + std::to_string(v) + " coefficient " + s.coeff(v).to_string();
    };

    QSeries lhs = inv.c4.pow(3) - inv.c6 * inv.c6;
    QSeries rhs = inv.delta * LocalizedScalar(1728, inv.delta.context());
    rep.add(prec, "c4^3-c6^2=1728*delta", "0", mismatch(lhs - rhs));

    QSeries oracle = eta_product_delta(prec);
    rep.add(prec, "delta=eta_product", "0", mismatch(inv.delta - oracle));

    rep.add(prec, "delta_q1_coefficient", "1", inv.delta.coeff(1).to_string());
    return rep;
}

} // namespace tmfops
