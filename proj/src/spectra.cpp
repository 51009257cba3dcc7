#include "tmfops/spectra.hpp"

#include <fstream>

#include "json.hpp"

namespace tmfops {

SpectrumId parse_spectrum_id(const std::string& name)
{
    if (name == "tmf") return SpectrumId::TMF;
    if (name == "ku") return SpectrumId::KU;
    if (name == "ko") return SpectrumId::KO;
    if (name == "tmf2") return SpectrumId::TMF2;
    if (name == "tmf1") return SpectrumId::TMF1;
    throw UnsupportedModel("unknown model '" + name + "'");
}

std::string spectrum_name(SpectrumId id)
{
    switch (id) {
        case SpectrumId::TMF: return "tmf";
        case SpectrumId::KU: return "ku";
        case SpectrumId::KO: return "ko";
        case SpectrumId::TMF2: return "tmf2";
        case SpectrumId::TMF1: return "tmf1";
    }
    return "?";
}

bool TorsionLedgerEntry::hits(long k) const
{
    if (degree_period == 0) return k == degree_offset;
    return k >= degree_offset && (k - degree_offset) % degree_period == 0;
}

std::string TorsionLedgerEntry::label_at(long k) const
{
    if (degree_period == 0) return family;
    return family + " (l=" + std::to_string((k - degree_offset) / degree_period) + ")";
}

TorsionLedger TorsionLedger::builtins()
{
    TorsionLedger l;
    l.add({"alpha*Delta^{3(l+1)}", 3, 75, 72, {3}});
    l.add({"eta*Delta^{8(l+1)}", 2, 193, 192, {2}});
    l.add({"nu*Delta^{8(l+1)}", 2, 195, 192, {8}});
    return l;
}

TorsionLedger TorsionLedger::from_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open ledger file " + path);
    nlohmann::json j = nlohmann::json::parse(in);
    TorsionLedger l = builtins();
    for (const auto& e : j) {
        TorsionLedgerEntry entry;
        entry.family = e.at("family").get<std::string>();
        entry.prime = e.at("prime").get<long>();
        entry.degree_offset = e.at("degree_offset").get<long>();
        entry.degree_period = e.at("degree_period").get<long>();
        entry.orders = e.at("orders").get<std::vector<long>>();
        l.add(std::move(entry));
    }
    return l;
}

void TorsionLedger::add(TorsionLedgerEntry e)
{
    if (e.prime != 2 && e.prime != 3)
        throw std::invalid_argument("ledger entries live at the primes 2 and 3");
    if (e.degree_period < 0 || e.orders.empty())
        throw std::invalid_argument("malformed ledger entry " + e.family);
    entries_.push_back(std::move(e));
}

std::vector<TorsionLedgerEntry> TorsionLedger::lookup(long p, long k) const
{
    if (p != 2 && p != 3) throw std::invalid_argument("ledger primes are 2 and 3");
    std::vector<TorsionLedgerEntry> out;
    for (const auto& e : entries_)
        if (e.prime == p && e.hits(k)) out.push_back(e);
    return out;
}

std::vector<TorsionLedgerEntry> TorsionLedger::active_at(const InvertedSet& base, long k) const
{
    std::vector<TorsionLedgerEntry> out;
    for (const auto& e : entries_)
        if (!base.contains(e.prime) && e.hits(k)) out.push_back(e);
    return out;
}

std::vector<TorsionLedgerEntry> ledger_lookup(const TorsionLedger& ledger, long p, long k)
{
    return ledger.lookup(p, k);
}

LocalizedScalar DualityWitness::lambda(long n, const InvertedSet& ctx) const
{
    return LocalizedScalar::int_pow(n, lambda_exponent, ctx);
}

SpectrumModel::SpectrumModel(SpectrumId id, InvertedSet base, TorsionLedger ledger)
    : id_(id), base_(std::move(base)), ledger_(std::move(ledger))
{
    if (id_ == SpectrumId::TMF) {
        wps_ = WPSConfig{4, 6, "c4", "c6", base_, +1};
    } else if (id_ == SpectrumId::TMF2) {
        base_ = base_.union_with(InvertedSet({2}));
        wps_ = WPSConfig{2, 2, "lambda1", "lambda2", base_, +1};
    }
}

const WPSConfig& SpectrumModel::wps() const
{
    if (!wps_) throw UnsupportedModel(spectrum_name(id_) + " has no weighted projective model");
    return *wps_;
}

namespace {

std::string power_label(const std::string& g, long e)
{
    if (e == 0) return "1";
    if (e == 1) return g;
    return g + "^" + std::to_string(e);
}

HomotopyGroup sheaf_model_group(const WPSConfig& cfg, long k)
{
    HomotopyGroup out;
    long rank = 0;
    if (k % 2 == 0 && k >= 0) {
        for (const auto& m : h0_basis(cfg, k / 2)) {
            out.basis.push_back({monomial_name(cfg, m), k, false, 0, k / 2});
            ++rank;
        }
    } else if (k < 0 && ((-k) % 2 == 1)) {
        long w = (k + 1) / 2; // degree 2w - 1
        for (const auto& m : h1_basis(cfg, w)) {
            out.basis.push_back({monomial_name(cfg, m), k, false, 0, w});
            ++rank;
        }
    }
    out.group = FinAbGroup::free(rank);
    return out;
}

} // namespace

HomotopyGroup SpectrumModel::homotopy_group(long k) const
{
    switch (id_) {
        case SpectrumId::KU: {
            HomotopyGroup out;
            if (k % 2 == 0) {
                out.group = FinAbGroup::free(1);
                out.basis.push_back({power_label("u", k / 2), k, false, 0, k / 2});
            } else {
                out.group = FinAbGroup::zero();
            }
            return out;
        }
        case SpectrumId::KO: {
            HomotopyGroup out;
            out.group = FinAbGroup::zero();
            long r = ((k % 8) + 8) % 8;
            long q = (k - r) / 8; // power of the Bott class uR
            if (r == 0) {
                out.group = FinAbGroup::free(1);
                out.basis.push_back({power_label("uR", q), k, false, 0, k / 2});
            } else if (r == 4) {
                out.group = FinAbGroup::free(1);
                std::string label = q == 0 ? "v" : "v*" + power_label("uR", q);
                out.basis.push_back({label, k, false, 0, k / 2});
            } else if ((r == 1 || r == 2) && !base_.contains(2)) {
                // eta and eta^2 act as ledger-style torsion (Hurewicz image)
                out.group = FinAbGroup::cyclic(2);
                std::string gen = r == 1 ? "eta" : "eta^2";
                std::string label = q == 0 ? gen : gen + "*" + power_label("uR", q);
                out.basis.push_back({label, k, true, 2, 0});
            }
            return out;
        }
        case SpectrumId::TMF: {
            HomotopyGroup out = sheaf_model_group(*wps_, k);
            for (const auto& e : ledger_.active_at(base_, k)) {
                for (long d : e.orders) {
                    out.group = out.group.direct_sum(FinAbGroup::cyclic(d));
                    out.basis.push_back({e.label_at(k), k, true, d, 0});
                }
            }
            return out;
        }
        case SpectrumId::TMF2: return sheaf_model_group(*wps_, k);
        case SpectrumId::TMF1:
            throw UnsupportedModel("tmf1 carries only witness data, not a graded model");
    }
    throw UnsupportedModel("unreachable");
}

DualityWitness SpectrumModel::witness() const
{
    return tmfops::witness(id_);
}

const std::vector<std::pair<long, long>>& tmf1_witness_table()
{
    static const std::vector<std::pair<long, long>> table = {
        {2, 13}, {3, 9}, {4, 7}, {5, 5}, {6, 5}, {7, 3}, {8, 3}, {11, 1}, {14, 1}, {15, 1}, {23, -1},
    };
    return table;
}

DualityWitness witness(SpectrumId id, long level)
{
    switch (id) {
        case SpectrumId::KU: return {id, 0, 0, 0, "1", 0};
        case SpectrumId::KO: return {id, 0, 4, -4, "v*uR^-1", -2};
        case SpectrumId::TMF: return {id, 0, 21, -21, "1/(c4*c6)", -10};
        case SpectrumId::TMF2: return {id, 0, 9, -9, "1/(lambda1*lambda2)", -4};
        case SpectrumId::TMF1: {
            for (auto [m, lm] : tmf1_witness_table())
                if (m == level)
                    return {id, m, -lm, lm, "D_" + std::to_string(m), -(lm - 1) / 2};
            throw NoSelfDuality("Tmf_1(" + std::to_string(level) +
                                ") is not Anderson self-dual");
        }
    }
    throw UnsupportedModel("unreachable");
}

} // namespace tmfops
