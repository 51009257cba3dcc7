#include "tmfops/wpsline.hpp"

#include <algorithm>
#include <cstdlib>

namespace tmfops {

namespace {

// exponent pairs (x,y) with w1*x + w2*y = weight inside the given box
std::vector<std::pair<long, long>> weight_solutions(const WPSConfig& cfg, long weight, long xmin,
                                                    long xmax, long ymin, long ymax)
{
    std::vector<std::pair<long, long>> out;
    for (long x = xmin; x <= xmax; ++x) {
        long rem = weight - cfg.w1 * x;
        if (rem % cfg.w2 != 0) continue;
        long y = rem / cfg.w2;
        if (y >= ymin && y <= ymax) out.emplace_back(x, y);
    }
    return out;
}

std::string power_name(const std::string& g, long e)
{
    if (e == 1) return g;
    return g + "^" + std::to_string(e);
}

} // namespace

std::vector<H0Monomial> h0_basis(const WPSConfig& cfg, long weight)
{
    std::vector<H0Monomial> out;
    if (weight < 0) return out;
    long amax = weight / cfg.w1;
    for (auto [a, b] : weight_solutions(cfg, weight, 0, amax, 0, weight / cfg.w2))
        out.push_back({a, b});
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<H1Monomial> h1_basis(const WPSConfig& cfg, long weight)
{
    std::vector<H1Monomial> out;
    if (weight > -cfg.w1 - cfg.w2) return out;
    long pos = -weight;
    for (auto [i, j] : weight_solutions(cfg, pos, 1, pos / cfg.w1, 1, pos / cfg.w2))
        out.push_back({i, j});
    std::sort(out.begin(), out.end());
    return out;
}

std::string monomial_name(const WPSConfig& cfg, const H0Monomial& m)
{
    if (m.a == 0 && m.b == 0) return "1";
    std::string s;
    if (m.a > 0) s = power_name(cfg.g1_name, m.a);
    if (m.b > 0) s += (s.empty() ? "" : "*") + power_name(cfg.g2_name, m.b);
    return s;
}

std::string monomial_name(const WPSConfig& cfg, const H1Monomial& m)
{
    return "1/(" + power_name(cfg.g1_name, m.i) + "*" + power_name(cfg.g2_name, m.j) + ")";
}

GradedElement::GradedElement(const WPSConfig& cfg, int degree, long weight)
    : cfg_(cfg), degree_(degree), weight_(weight)
{
}

GradedElement GradedElement::h0_zero(const WPSConfig& cfg, long weight)
{
    return {cfg, 0, weight};
}

GradedElement GradedElement::h1_zero(const WPSConfig& cfg, long weight)
{
    return {cfg, 1, weight};
}

GradedElement GradedElement::h0_monomial(const WPSConfig& cfg, const H0Monomial& m,
                                         const LocalizedScalar& c)
{
    GradedElement e(cfg, 0, cfg.w1 * m.a + cfg.w2 * m.b);
    e.set_coeff(m, c);
    return e;
}

GradedElement GradedElement::h1_monomial(const WPSConfig& cfg, const H1Monomial& m,
                                         const LocalizedScalar& c)
{
    GradedElement e(cfg, 1, -cfg.w1 * m.i - cfg.w2 * m.j);
    e.set_coeff(m, c);
    return e;
}

void GradedElement::check_key(const std::pair<long, long>& key) const
{
    if (degree_ == 0) {
        if (key.first < 0 || key.second < 0)
            throw BasisMismatch("H0 monomial needs nonnegative exponents");
        if (cfg_.w1 * key.first + cfg_.w2 * key.second != weight_)
            throw WeightMismatch("monomial weight does not match element weight");
    } else {
        if (key.first < 1 || key.second < 1)
            throw BasisMismatch("H1 monomial needs exponents >= 1");
        if (-cfg_.w1 * key.first - cfg_.w2 * key.second != weight_)
            throw WeightMismatch("monomial weight does not match element weight");
    }
}

bool GradedElement::is_zero() const
{
    return std::all_of(coeffs_.begin(), coeffs_.end(),
                       [](const auto& kv) { return kv.second.is_zero(); });
}

LocalizedScalar GradedElement::coeff(const H0Monomial& m) const
{
    auto it = coeffs_.find({m.a, m.b});
    return it == coeffs_.end() ? LocalizedScalar::zero(cfg_.base) : it->second;
}

LocalizedScalar GradedElement::coeff(const H1Monomial& m) const
{
    auto it = coeffs_.find({m.i, m.j});
    return it == coeffs_.end() ? LocalizedScalar::zero(cfg_.base) : it->second;
}

void GradedElement::set_coeff(const H0Monomial& m, const LocalizedScalar& c)
{
    if (degree_ != 0) throw BasisMismatch("H0 monomial into a degree-1 element");
    check_key({m.a, m.b});
    coeffs_[{m.a, m.b}] = c;
}

void GradedElement::set_coeff(const H1Monomial& m, const LocalizedScalar& c)
{
    if (degree_ != 1) throw BasisMismatch("H1 monomial into a degree-0 element");
    check_key({m.i, m.j});
    coeffs_[{m.i, m.j}] = c;
}

GradedElement GradedElement::operator+(const GradedElement& o) const
{
    if (degree_ != o.degree_ || weight_ != o.weight_)
        throw WeightMismatch("sum of elements in different graded pieces");
    GradedElement r = *this;
    for (const auto& [k, v] : o.coeffs_) {
        auto it = r.coeffs_.find(k);
        if (it == r.coeffs_.end()) r.coeffs_[k] = v;
        else it->second += v;
    }
    return r;
}

GradedElement GradedElement::operator-(const GradedElement& o) const
{
    return *this + o.scaled(LocalizedScalar(-1, cfg_.base));
}

GradedElement GradedElement::scaled(const LocalizedScalar& c) const
{
    GradedElement r = *this;
    for (auto& [k, v] : r.coeffs_) v *= c;
    return r;
}

GradedElement GradedElement::operator*(const GradedElement& o) const
{
    if (degree_ == 1 && o.degree_ == 1)
        throw WeightMismatch("product of two degree-1 elements is not defined");
    if (degree_ == 1) return o * *this; // normalize to deg0 * deg?

    if (o.degree_ == 0) {
        GradedElement r(cfg_, 0, weight_ + o.weight_);
        for (const auto& [k1, v1] : coeffs_) {
            if (v1.is_zero()) continue;
            for (const auto& [k2, v2] : o.coeffs_) {
                if (v2.is_zero()) continue;
                std::pair<long, long> k{k1.first + k2.first, k1.second + k2.second};
                auto it = r.coeffs_.find(k);
                if (it == r.coeffs_.end()) r.coeffs_[k] = v1 * v2;
                else it->second += v1 * v2;
            }
        }
        return r;
    }

    // deg0 * deg1 in the cokernel: g1^a g2^b / (g1^i g2^j) survives only if
    // both resulting exponents stay negative
    GradedElement r(cfg_, 1, weight_ + o.weight_);
    for (const auto& [k1, v1] : coeffs_) {
        if (v1.is_zero()) continue;
        for (const auto& [k2, v2] : o.coeffs_) {
            if (v2.is_zero()) continue;
            long i = k2.first - k1.first, j = k2.second - k1.second;
            if (i < 1 || j < 1) continue;
            std::pair<long, long> k{i, j};
            auto it = r.coeffs_.find(k);
            if (it == r.coeffs_.end()) r.coeffs_[k] = v1 * v2;
            else it->second += v1 * v2;
        }
    }
    return r;
}

bool GradedElement::operator==(const GradedElement& o) const
{
    if (degree_ != o.degree_ || weight_ != o.weight_) return false;
    return (*this - o).is_zero();
}

std::string GradedElement::to_string() const
{
    std::string s;
    for (const auto& [k, v] : coeffs_) {
        if (v.is_zero()) continue;
        if (!s.empty()) s += " + ";
        std::string name = degree_ == 0 ? monomial_name(cfg_, H0Monomial{k.first, k.second})
                                        : monomial_name(cfg_, H1Monomial{k.first, k.second});
        s += v.to_string() == "1" ? name : v.to_string() + "*" + name;
    }
    return s.empty() ? "0" : s;
}

KoszulCohomology koszul_cohomology(const WPSConfig& cfg, long weight)
{
    long wmin = std::min(cfg.w1, cfg.w2);
    long bound = (std::abs(weight) + cfg.w1 + cfg.w2) / wmin + 2;

    // weight-w monomials of A[1/g1], A[1/g2] and A[1/g1g2]
    auto c1a = weight_solutions(cfg, weight, -bound, bound, 0, bound);
    auto c1b = weight_solutions(cfg, weight, 0, bound, -bound, bound);
    auto c2 = weight_solutions(cfg, weight, -bound, bound, -bound, bound);

    std::map<std::pair<long, long>, long> row;
    for (const auto& m : c2) row[m] = static_cast<long>(row.size());

    IntMatrix d(static_cast<long>(c2.size()), static_cast<long>(c1a.size() + c1b.size()));
    for (size_t c = 0; c < c1a.size(); ++c) d.at(row.at(c1a[c]), static_cast<long>(c)) = -1;
    for (size_t c = 0; c < c1b.size(); ++c)
        d.at(row.at(c1b[c]), static_cast<long>(c1a.size() + c)) = 1;

    auto [U, D, V] = smith_normal_form(d);
    long rank = 0;
    for (long t = 0; t < std::min(D.rows(), D.cols()); ++t) {
        if (D.at(t, t) == 0) continue;
        if (D.at(t, t) != 1)
            throw BasisMismatch("Koszul matrix has torsion elementary divisor " +
                                D.at(t, t).get_str() + " in weight " + std::to_string(weight));
        ++rank;
    }

    long h0_rank = d.cols() - rank;
    long h1_rank = d.rows() - rank;
    long h0_comb = static_cast<long>(h0_basis(cfg, weight).size());
    long h1_comb = static_cast<long>(h1_basis(cfg, weight).size());
    if (h0_rank != h0_comb || h1_rank != h1_comb)
        throw BasisMismatch("Koszul matrix ranks (" + std::to_string(h0_rank) + "," +
                            std::to_string(h1_rank) + ") disagree with combinatorial bases (" +
                            std::to_string(h0_comb) + "," + std::to_string(h1_comb) +
                            ") in weight " + std::to_string(weight));

    return {FinAbGroup::free(h0_rank), FinAbGroup::free(h1_rank)};
}

LocalizedScalar serre_pairing(const WPSConfig& cfg, const GradedElement& f, const GradedElement& g)
{
    if (f.cohomological_degree() != 0 || g.cohomological_degree() != 1)
        throw WeightMismatch("serre pairing takes (H0 element, H1 element)");
    if (f.weight() + g.weight() != cfg.dualizing_weight())
        throw WeightMismatch("weights " + std::to_string(f.weight()) + " and " +
                             std::to_string(g.weight()) + " are not complementary");

    GradedElement cup = f * g; // H1 of weight -w1-w2
    LocalizedScalar r = cup.coeff(H1Monomial{1, 1});
    return cfg.pairing_sign < 0 ? -r : r;
}

IntMatrix pairing_matrix(const WPSConfig& cfg, long k)
{
    auto rows = h0_basis(cfg, k);
    auto cols = h1_basis(cfg, -k - cfg.w1 - cfg.w2);
    IntMatrix m(static_cast<long>(rows.size()), static_cast<long>(cols.size()));
    LocalizedScalar one = LocalizedScalar::one(cfg.base);
    for (size_t i = 0; i < rows.size(); ++i)
        for (size_t j = 0; j < cols.size(); ++j) {
            auto v = serre_pairing(cfg, GradedElement::h0_monomial(cfg, rows[i], one),
                                   GradedElement::h1_monomial(cfg, cols[j], one));
            m.at(static_cast<long>(i), static_cast<long>(j)) = v.numerator();
        }
    return m;
}

LocalizedScalar adams_scalar(long weight, long n, const InvertedSet& base)
{
    return LocalizedScalar::int_pow(n, weight, base);
}

GradedElement apply_adams(const WPSConfig& cfg, long n, const GradedElement& x)
{
    return x.scaled(adams_scalar(x.weight(), n, cfg.base));
}

} // namespace tmfops
