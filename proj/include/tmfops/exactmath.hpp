#pragma once

// Exact scalar arithmetic over localized integers Z[1/S] and finitely
// generated abelian groups in Smith canonical form, with Hom(-, Z[1/S])
// and Ext^1(-, Z[1/S]).

#include <gmpxx.h>

#include <string>
#include <vector>

#include "tmfops/errors.hpp"

namespace tmfops {

// A finite set of primes S; models the base ring Z[1/S].
class InvertedSet {
public:
    InvertedSet() = default;
    explicit InvertedSet(std::vector<long> primes);

    // Parses "2,3,5"; empty string gives the empty set.
    static InvertedSet parse(const std::string& csv);

    const std::vector<long>& primes() const { return primes_; }
    bool empty() const { return primes_.empty(); }
    bool contains(long p) const;
    InvertedSet union_with(const InvertedSet& other) const;

    // True iff z is a unit of Z[1/S], i.e. z = ±(product of primes in S).
    bool is_unit(const mpz_class& z) const;
    // Divides out every factor of a prime of S; d must be nonzero.
    mpz_class strip(const mpz_class& d) const;

    bool operator==(const InvertedSet&) const = default;
    std::string to_string() const; // "Z" or "Z[1/6]" style, product of the primes

private:
    std::vector<long> primes_;
};

// An exact rational whose denominator's prime support lies in the declared
// inverted set. Arithmetic across mismatched contexts takes the union of
// the contexts and marks the result as widened.
class LocalizedScalar {
public:
    LocalizedScalar() : value_(0) {}
    LocalizedScalar(long n, InvertedSet ctx) : value_(n), context_(std::move(ctx)) {}
    LocalizedScalar(mpz_class n, InvertedSet ctx) : value_(std::move(n)), context_(std::move(ctx)) {}
    // Throws NotInvertible if den has a prime factor outside ctx.
    LocalizedScalar(mpz_class num, mpz_class den, InvertedSet ctx);

    static LocalizedScalar zero(InvertedSet ctx) { return {0, std::move(ctx)}; }
    static LocalizedScalar one(InvertedSet ctx) { return {1, std::move(ctx)}; }
    // n^w in Z[1/S]; throws NotInvertible if w < 0 and n is not a unit there.
    static LocalizedScalar int_pow(long n, long w, const InvertedSet& ctx);

    const mpq_class& value() const { return value_; }
    const InvertedSet& context() const { return context_; }
    bool context_widened() const { return widened_; }

    mpz_class numerator() const { return value_.get_num(); }
    mpz_class denominator() const { return value_.get_den(); }
    bool is_zero() const { return sgn(value_) == 0; }
    bool is_integer() const { return value_.get_den() == 1; }

    LocalizedScalar operator-() const;
    LocalizedScalar operator+(const LocalizedScalar& o) const;
    LocalizedScalar operator-(const LocalizedScalar& o) const;
    LocalizedScalar operator*(const LocalizedScalar& o) const;
    // Throws NotInvertible on division by zero or if the result leaves Z[1/S].
    LocalizedScalar operator/(const LocalizedScalar& o) const;
    LocalizedScalar& operator+=(const LocalizedScalar& o) { return *this = *this + o; }
    LocalizedScalar& operator-=(const LocalizedScalar& o) { return *this = *this - o; }
    LocalizedScalar& operator*=(const LocalizedScalar& o) { return *this = *this * o; }

    LocalizedScalar pow(long e) const;
    LocalizedScalar inverse() const;

    // Value as a residue mod d >= 2; denominator must be prime to d.
    mpz_class residue_mod(const mpz_class& d) const;

    // Value equality; contexts are compared separately where they matter.
    bool operator==(const LocalizedScalar& o) const { return value_ == o.value_; }
    bool operator!=(const LocalizedScalar& o) const { return value_ != o.value_; }

    std::string to_string() const; // "p" or "p/q"

private:
    void check_denominator() const;
    static LocalizedScalar merged(mpq_class v, const LocalizedScalar& a, const LocalizedScalar& b);

    mpq_class value_;
    InvertedSet context_;
    bool widened_ = false;
};

// A finitely generated abelian group in Smith canonical form:
// Z^free_rank + Z/d1 + ... + Z/dr with d1 | d2 | ... | dr, each di >= 2.
class FinAbGroup {
public:
    FinAbGroup() = default;
    FinAbGroup(long free_rank, std::vector<mpz_class> torsion_orders);

    static FinAbGroup zero() { return {}; }
    static FinAbGroup free(long rank) { return {rank, {}}; }
    static FinAbGroup cyclic(const mpz_class& d) { return {0, {d}}; }

    long free_rank() const { return free_rank_; }
    const std::vector<mpz_class>& torsion_orders() const { return torsion_; }
    bool is_trivial() const { return free_rank_ == 0 && torsion_.empty(); }

    FinAbGroup free_part() const { return free(free_rank_); }
    FinAbGroup torsion_part() const { return {0, torsion_}; }
    FinAbGroup direct_sum(const FinAbGroup& o) const;

    bool operator==(const FinAbGroup&) const = default;
    std::string to_string() const; // "0", "Z", "Z^2 + Z/2 + Z/24", ...

private:
    long free_rank_ = 0;
    std::vector<mpz_class> torsion_;
};

// Dense integer matrix, row-major.
class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(long rows, long cols) : rows_(rows), cols_(cols), entries_(rows * cols, 0) {}
    static IntMatrix identity(long n);

    long rows() const { return rows_; }
    long cols() const { return cols_; }
    mpz_class& at(long i, long j) { return entries_[i * cols_ + j]; }
    const mpz_class& at(long i, long j) const { return entries_[i * cols_ + j]; }

    IntMatrix operator*(const IntMatrix& o) const;
    bool operator==(const IntMatrix&) const = default;

    bool is_diagonal() const;
    mpz_class det() const; // Bareiss fraction-free elimination; square only

    std::string to_string() const;

private:
    long rows_ = 0;
    long cols_ = 0;
    std::vector<mpz_class> entries_;
};

struct SmithResult {
    IntMatrix U; // rows x rows, unimodular
    IntMatrix D; // diagonal with divisibility chain, nonnegative
    IntMatrix V; // cols x cols, unimodular
};

// U * M * V = D with U, V unimodular and D diagonal satisfying
// D(0,0) | D(1,1) | ... with nonnegative entries.
SmithResult smith_normal_form(const IntMatrix& M);

// Hom_Z(G, Z[1/S]): the torsion of G dies, the free part survives.
FinAbGroup hom_to(const FinAbGroup& G, const InvertedSet& S);

// Ext^1_Z(G, Z[1/S]): each cyclic order is reduced by its S-part, the free
// part contributes nothing.
FinAbGroup ext1_to(const FinAbGroup& G, const InvertedSet& S);

// Realizes the SES 0 -> e -> ? -> h -> 0 as split (A a subring of Q).
FinAbGroup ses_assemble(const FinAbGroup& e, const FinAbGroup& h);

} // namespace tmfops
