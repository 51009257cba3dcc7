#pragma once

// Cohomology of the weighted projective line on two generators g1, g2 with
// graded structure sheaf.  H^0 and H^1 of each weight come twice: once as
// combinatorial monomial bases, once as kernel/cokernel of the literal
// Cech/Koszul matrix A[1/g1] x A[1/g2] -> A[1/g1g2]; the second path serves
// as the independent oracle for the first.  On top sit the Serre pairing
// into H^1(omega^(-w1-w2)) and the weight-graded Adams scalar action.

#include <map>
#include <string>
#include <vector>

#include "tmfops/exactmath.hpp"

namespace tmfops {

struct WPSConfig {
    long w1 = 4;
    long w2 = 6;
    std::string g1_name = "c4";
    std::string g2_name = "c6";
    InvertedSet base;
    int pairing_sign = +1; // flips the Serre trace normalization globally

    long dualizing_weight() const { return -w1 - w2; }
};

// g1^a * g2^b with a, b >= 0; weight w1*a + w2*b.
struct H0Monomial {
    long a = 0;
    long b = 0;
    auto operator<=>(const H0Monomial&) const = default;
};

// 1/(g1^i * g2^j) with i, j >= 1; weight -w1*i - w2*j.
struct H1Monomial {
    long i = 1;
    long j = 1;
    auto operator<=>(const H1Monomial&) const = default;
};

// All (a,b) with w1*a + w2*b = weight, lexicographic.
std::vector<H0Monomial> h0_basis(const WPSConfig& cfg, long weight);

// All (i,j) with -w1*i - w2*j = weight, i,j >= 1, lexicographic.
std::vector<H1Monomial> h1_basis(const WPSConfig& cfg, long weight);

std::string monomial_name(const WPSConfig& cfg, const H0Monomial& m);
std::string monomial_name(const WPSConfig& cfg, const H1Monomial& m);

// A homogeneous element of H^0(omega^w) or H^1(omega^w): a coefficient
// vector over the monomial basis.  Exponent pairs key the support; for
// degree 1 the pair (i,j) stands for 1/(g1^i g2^j).
class GradedElement {
public:
    static GradedElement h0_zero(const WPSConfig& cfg, long weight);
    static GradedElement h1_zero(const WPSConfig& cfg, long weight);
    static GradedElement h0_monomial(const WPSConfig& cfg, const H0Monomial& m,
                                     const LocalizedScalar& c);
    static GradedElement h1_monomial(const WPSConfig& cfg, const H1Monomial& m,
                                     const LocalizedScalar& c);

    int cohomological_degree() const { return degree_; }
    long weight() const { return weight_; }
    const std::map<std::pair<long, long>, LocalizedScalar>& coefficients() const
    {
        return coeffs_;
    }
    bool is_zero() const;

    LocalizedScalar coeff(const H0Monomial& m) const;
    LocalizedScalar coeff(const H1Monomial& m) const;
    void set_coeff(const H0Monomial& m, const LocalizedScalar& c);
    void set_coeff(const H1Monomial& m, const LocalizedScalar& c);

    GradedElement operator+(const GradedElement& o) const;
    GradedElement operator-(const GradedElement& o) const;
    GradedElement scaled(const LocalizedScalar& c) const;

    // Cup product. deg0 x deg0 multiplies polynomials; deg0 x deg1 lands in
    // the cokernel A[1/g1g2]/(A[1/g1]+A[1/g2]), killing any monomial whose
    // exponents are not both negative.
    GradedElement operator*(const GradedElement& o) const;

    bool operator==(const GradedElement& o) const;
    std::string to_string() const;

private:
    GradedElement(const WPSConfig& cfg, int degree, long weight);
    void check_key(const std::pair<long, long>& key) const;

    WPSConfig cfg_;
    int degree_ = 0;
    long weight_ = 0;
    std::map<std::pair<long, long>, LocalizedScalar> coeffs_;
};

struct KoszulCohomology {
    FinAbGroup h0;
    FinAbGroup h1;
};

// Ranks of the weight-graded piece computed from the explicit Cech matrix
// by Smith normal form; throws BasisMismatch if the result is not free or
// disagrees with the combinatorial bases.
KoszulCohomology koszul_cohomology(const WPSConfig& cfg, long weight);

// <g1^a g2^b, 1/(g1^i g2^j)> = pairing_sign iff (a,b) = (i-1, j-1), else 0;
// bilinear extension.  Throws WeightMismatch unless
// weight(f) + weight(g) = -w1 - w2.
LocalizedScalar serre_pairing(const WPSConfig& cfg, const GradedElement& f,
                              const GradedElement& g);

// Pairing matrix of the canonical bases of H^0(omega^k) x H^1(omega^(-k-w1-w2)).
IntMatrix pairing_matrix(const WPSConfig& cfg, long k);

// n^weight in Z[1/S]; the action of psi^n on any graded element of weight w
// is scalar multiplication by n^w.  Throws NotInvertible if the power
// leaves the base ring.
LocalizedScalar adams_scalar(long weight, long n, const InvertedSet& base);

// psi^n applied to a graded element: scalar multiplication by n^weight.
GradedElement apply_adams(const WPSConfig& cfg, long n, const GradedElement& x);

} // namespace tmfops
