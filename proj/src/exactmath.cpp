#include "tmfops/exactmath.hpp"

#include <algorithm>
#include <sstream>

namespace tmfops {

namespace {

bool is_prime(long p)
{
    if (p < 2) return false;
    for (long d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

} // namespace

InvertedSet::InvertedSet(std::vector<long> primes) : primes_(std::move(primes))
{
    for (long p : primes_)
        if (!is_prime(p))
            throw std::invalid_argument("InvertedSet: " + std::to_string(p) + " is not prime");
    std::sort(primes_.begin(), primes_.end());
    primes_.erase(std::unique(primes_.begin(), primes_.end()), primes_.end());
}

InvertedSet InvertedSet::parse(const std::string& csv)
{
    std::vector<long> ps;
    std::stringstream ss(csv);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        if (tok.empty()) continue;
        ps.push_back(std::stol(tok));
    }
    return InvertedSet(std::move(ps));
}

bool InvertedSet::contains(long p) const
{
    return std::binary_search(primes_.begin(), primes_.end(), p);
}

InvertedSet InvertedSet::union_with(const InvertedSet& other) const
{
    std::vector<long> ps = primes_;
    ps.insert(ps.end(), other.primes_.begin(), other.primes_.end());
    return InvertedSet(std::move(ps));
}

mpz_class InvertedSet::strip(const mpz_class& d) const
{
    mpz_class r = abs(d);
    if (r == 0) throw std::invalid_argument("InvertedSet::strip: zero");
    for (long p : primes_)
        while (mpz_divisible_ui_p(r.get_mpz_t(), p))
            mpz_divexact_ui(r.get_mpz_t(), r.get_mpz_t(), p);
    return sgn(d) < 0 ? mpz_class(-r) : r;
}

bool InvertedSet::is_unit(const mpz_class& z) const
{
    if (z == 0) return false;
    return abs(strip(z)) == 1;
}

std::string InvertedSet::to_string() const
{
    if (primes_.empty()) return "Z";
    mpz_class n = 1;
    for (long p : primes_) n *= p;
    return "Z[1/" + n.get_str() + "]";
}

LocalizedScalar::LocalizedScalar(mpz_class num, mpz_class den, InvertedSet ctx)
    : value_(std::move(num), std::move(den)), context_(std::move(ctx))
{
    if (value_.get_den() == 0) throw NotInvertible("LocalizedScalar: zero denominator");
    value_.canonicalize();
    check_denominator();
}

void LocalizedScalar::check_denominator() const
{
    const mpz_class den = value_.get_den();
    if (den != 1 && !context_.is_unit(den))
        throw NotInvertible("denominator " + den.get_str() + " is not a unit of " + context_.to_string());
}

LocalizedScalar LocalizedScalar::merged(mpq_class v, const LocalizedScalar& a, const LocalizedScalar& b)
{
    LocalizedScalar r;
    r.value_ = std::move(v);
    r.context_ = a.context_.union_with(b.context_);
    r.widened_ = a.widened_ || b.widened_ || a.context_ != b.context_;
    return r;
}

LocalizedScalar LocalizedScalar::operator-() const
{
    LocalizedScalar r = *this;
    r.value_ = -r.value_;
    return r;
}

LocalizedScalar LocalizedScalar::operator+(const LocalizedScalar& o) const
{
    return merged(value_ + o.value_, *this, o);
}

LocalizedScalar LocalizedScalar::operator-(const LocalizedScalar& o) const
{
    return merged(value_ - o.value_, *this, o);
}

LocalizedScalar LocalizedScalar::operator*(const LocalizedScalar& o) const
{
    return merged(value_ * o.value_, *this, o);
}

LocalizedScalar LocalizedScalar::operator/(const LocalizedScalar& o) const
{
    if (o.is_zero()) throw NotInvertible("division by zero");
    LocalizedScalar r = merged(value_ / o.value_, *this, o);
    r.check_denominator();
    return r;
}

LocalizedScalar LocalizedScalar::pow(long e) const
{
    LocalizedScalar base = e < 0 ? inverse() : *this;
    unsigned long n = static_cast<unsigned long>(e < 0 ? -e : e);
    mpz_class num, den;
    mpz_pow_ui(num.get_mpz_t(), base.value_.get_num().get_mpz_t(), n);
    mpz_pow_ui(den.get_mpz_t(), base.value_.get_den().get_mpz_t(), n);
    LocalizedScalar r = base;
    r.value_ = mpq_class(num, den); // already canonical: powers of coprime parts
    return r;
}

LocalizedScalar LocalizedScalar::inverse() const
{
    if (is_zero()) throw NotInvertible("inverse of zero");
    LocalizedScalar r = *this;
    r.value_ = 1 / value_;
    r.check_denominator();
    return r;
}

LocalizedScalar LocalizedScalar::int_pow(long n, long w, const InvertedSet& ctx)
{
    if (n == 0) throw NotInvertible("0 is not invertible");
    return LocalizedScalar(mpz_class(n), ctx).pow(w);
}

mpz_class LocalizedScalar::residue_mod(const mpz_class& d) const
{
    if (d < 2) throw std::invalid_argument("residue_mod: modulus must be >= 2");
    mpz_class den = value_.get_den();
    mpz_class den_inv;
    if (mpz_invert(den_inv.get_mpz_t(), den.get_mpz_t(), d.get_mpz_t()) == 0)
        throw NotInvertible("denominator " + den.get_str() + " not invertible mod " + d.get_str());
    mpz_class r = value_.get_num() * den_inv;
    mpz_mod(r.get_mpz_t(), r.get_mpz_t(), d.get_mpz_t());
    return r;
}

std::string LocalizedScalar::to_string() const
{
    if (is_integer()) return value_.get_num().get_str();
    return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

FinAbGroup::FinAbGroup(long free_rank, std::vector<mpz_class> torsion_orders)
    : free_rank_(free_rank)
{
    if (free_rank < 0) throw std::invalid_argument("FinAbGroup: negative free rank");
    for (auto& d : torsion_orders) {
        mpz_class a = abs(d);
        if (a == 0) throw std::invalid_argument("FinAbGroup: order 0 belongs to the free part");
        if (a > 1) torsion_.push_back(a);
    }
    // gcd/lcm sweeps until the divisibility chain d1 | d2 | ... holds
    bool changed = true;
    while (changed) {
        changed = false;
        std::sort(torsion_.begin(), torsion_.end());
        for (size_t i = 0; i + 1 < torsion_.size(); ++i) {
            if (torsion_[i + 1] % torsion_[i] != 0) {
                mpz_class g = gcd(torsion_[i], torsion_[i + 1]);
                mpz_class l = torsion_[i] / g * torsion_[i + 1];
                torsion_[i] = g;
                torsion_[i + 1] = l;
                changed = true;
            }
        }
        torsion_.erase(std::remove(torsion_.begin(), torsion_.end(), mpz_class(1)), torsion_.end());
    }
}

FinAbGroup FinAbGroup::direct_sum(const FinAbGroup& o) const
{
    std::vector<mpz_class> orders = torsion_;
    orders.insert(orders.end(), o.torsion_.begin(), o.torsion_.end());
    return {free_rank_ + o.free_rank_, std::move(orders)};
}

std::string FinAbGroup::to_string() const
{
    if (is_trivial()) return "0";
    std::string s;
    if (free_rank_ == 1) s = "Z";
    else if (free_rank_ > 1) s = "Z^" + std::to_string(free_rank_);
    for (const auto& d : torsion_) {
        if (!s.empty()) s += " + ";
        s += "Z/" + d.get_str();
    }
    return s;
}

IntMatrix IntMatrix::identity(long n)
{
    IntMatrix m(n, n);
    for (long i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::operator*(const IntMatrix& o) const
{
    if (cols_ != o.rows_) throw std::invalid_argument("IntMatrix: dimension mismatch");
    IntMatrix r(rows_, o.cols_);
    for (long i = 0; i < rows_; ++i)
        for (long k = 0; k < cols_; ++k) {
            const mpz_class& a = at(i, k);
            if (a == 0) continue;
            for (long j = 0; j < o.cols_; ++j)
                r.at(i, j) += a * o.at(k, j);
        }
    return r;
}

bool IntMatrix::is_diagonal() const
{
    for (long i = 0; i < rows_; ++i)
        for (long j = 0; j < cols_; ++j)
            if (i != j && at(i, j) != 0) return false;
    return true;
}

mpz_class IntMatrix::det() const
{
    if (rows_ != cols_) throw std::invalid_argument("det: matrix not square");
    long n = rows_;
    if (n == 0) return 1;
    IntMatrix a = *this;
    mpz_class prev = 1;
    int sign = 1;
    for (long k = 0; k < n - 1; ++k) {
        if (a.at(k, k) == 0) {
            long piv = -1;
            for (long i = k + 1; i < n; ++i)
                if (a.at(i, k) != 0) { piv = i; break; }
            if (piv < 0) return 0;
            for (long j = 0; j < n; ++j) std::swap(a.at(k, j), a.at(piv, j));
            sign = -sign;
        }
        for (long i = k + 1; i < n; ++i)
            for (long j = k + 1; j < n; ++j) {
                mpz_class num = a.at(i, j) * a.at(k, k) - a.at(i, k) * a.at(k, j);
                mpz_divexact(a.at(i, j).get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
            }
        prev = a.at(k, k);
    }
    return sign * a.at(n - 1, n - 1);
}

std::string IntMatrix::to_string() const
{
    std::string s = "[";
    for (long i = 0; i < rows_; ++i) {
        s += i ? "; " : "";
        for (long j = 0; j < cols_; ++j) s += (j ? "," : "") + at(i, j).get_str();
    }
    return s + "]";
}

namespace {

// Row/column operations on D mirrored into U (rows) and V (columns) so that
// U*M*V = D stays invariant.
struct SmithWorker {
    IntMatrix D, U, V;

    explicit SmithWorker(const IntMatrix& M)
        : D(M), U(IntMatrix::identity(M.rows())), V(IntMatrix::identity(M.cols()))
    {
    }

    void swap_rows(long i, long j)
    {
        if (i == j) return;
        for (long c = 0; c < D.cols(); ++c) std::swap(D.at(i, c), D.at(j, c));
        for (long c = 0; c < U.cols(); ++c) std::swap(U.at(i, c), U.at(j, c));
    }
    void swap_cols(long i, long j)
    {
        if (i == j) return;
        for (long r = 0; r < D.rows(); ++r) std::swap(D.at(r, i), D.at(r, j));
        for (long r = 0; r < V.rows(); ++r) std::swap(V.at(r, i), V.at(r, j));
    }
    void add_row(long dst, long src, const mpz_class& f) // row dst += f * row src
    {
        for (long c = 0; c < D.cols(); ++c) D.at(dst, c) += f * D.at(src, c);
        for (long c = 0; c < U.cols(); ++c) U.at(dst, c) += f * U.at(src, c);
    }
    void add_col(long dst, long src, const mpz_class& f)
    {
        for (long r = 0; r < D.rows(); ++r) D.at(r, dst) += f * D.at(r, src);
        for (long r = 0; r < V.rows(); ++r) V.at(r, dst) += f * V.at(r, src);
    }
    void negate_row(long i)
    {
        for (long c = 0; c < D.cols(); ++c) D.at(i, c) = -D.at(i, c);
        for (long c = 0; c < U.cols(); ++c) U.at(i, c) = -U.at(i, c);
    }

    bool find_pivot(long t, long& pi, long& pj) const
    {
        bool found = false;
        mpz_class best;
        for (long i = t; i < D.rows(); ++i)
            for (long j = t; j < D.cols(); ++j) {
                if (D.at(i, j) == 0) continue;
                mpz_class a = abs(D.at(i, j));
                if (!found || a < best) { found = true; best = a; pi = i; pj = j; }
            }
        return found;
    }

    bool row_col_clear(long t) const
    {
        for (long i = t + 1; i < D.rows(); ++i)
            if (D.at(i, t) != 0) return false;
        for (long j = t + 1; j < D.cols(); ++j)
            if (D.at(t, j) != 0) return false;
        return true;
    }

    void run()
    {
        long steps = std::min(D.rows(), D.cols());
        for (long t = 0; t < steps; ++t) {
            for (;;) {
                long pi = 0, pj = 0;
                if (!find_pivot(t, pi, pj)) { t = steps; break; } // submatrix is zero
                swap_rows(t, pi);
                swap_cols(t, pj);
                for (long i = t + 1; i < D.rows(); ++i)
                    if (D.at(i, t) != 0) add_row(i, t, -mpz_class(D.at(i, t) / D.at(t, t)));
                for (long j = t + 1; j < D.cols(); ++j)
                    if (D.at(t, j) != 0) add_col(j, t, -mpz_class(D.at(t, j) / D.at(t, t)));
                if (!row_col_clear(t)) continue; // remainders left, reduce again
                // lone pivot: enforce divisibility into the rest of the matrix
                long bi = -1;
                for (long i = t + 1; i < D.rows() && bi < 0; ++i)
                    for (long j = t + 1; j < D.cols(); ++j)
                        if (D.at(i, j) % D.at(t, t) != 0) { bi = i; break; }
                if (bi < 0) break;
                add_row(t, bi, 1);
            }
            if (t >= steps) break;
        }
        for (long t = 0; t < steps; ++t)
            if (D.at(t, t) < 0) negate_row(t);
    }
};

} // namespace

SmithResult smith_normal_form(const IntMatrix& M)
{
    SmithWorker w(M);
    w.run();
    return {std::move(w.U), std::move(w.D), std::move(w.V)};
}

FinAbGroup hom_to(const FinAbGroup& G, const InvertedSet&)
{
    return FinAbGroup::free(G.free_rank());
}

FinAbGroup ext1_to(const FinAbGroup& G, const InvertedSet& S)
{
    std::vector<mpz_class> orders;
    for (const auto& d : G.torsion_orders()) orders.push_back(S.strip(d));
    return {0, std::move(orders)};
}

FinAbGroup ses_assemble(const FinAbGroup& e, const FinAbGroup& h)
{
    return e.direct_sum(h);
}

} // namespace tmfops
