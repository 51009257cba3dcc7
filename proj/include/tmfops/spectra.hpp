#pragma once

// Graded homotopy models: TMF (the 6-inverted monomial skeleton on the
// (4,6) line plus the named Hurewicz torsion families), KU, KO, TMF2 on
// the (2,2) line, and the Tmf_1(m) witness table.
//
// Degree conventions: an H^0 class of weight w sits in topological degree
// 2w, an H^1 class of weight w in degree 2w - 1.  psi^n multiplies a free
// class of degree k by n^ceil(k/2) = n^weight; ledger torsion is fixed.

#include <optional>
#include <string>
#include <vector>

#include "tmfops/exactmath.hpp"
#include "tmfops/wpsline.hpp"

namespace tmfops {

enum class SpectrumId { TMF, KU, KO, TMF2, TMF1 };

SpectrumId parse_spectrum_id(const std::string& name); // "tmf", "ku", "ko", "tmf2", "tmf1"
std::string spectrum_name(SpectrumId id);

// A named torsion family hitting degrees degree_offset + degree_period*l,
// l >= 0 (degree_period = 0 marks a single degree).
struct TorsionLedgerEntry {
    std::string family;
    long prime = 2;
    long degree_offset = 0;
    long degree_period = 0;
    std::vector<long> orders;

    bool hits(long k) const;
    std::string label_at(long k) const;
};

class TorsionLedger {
public:
    // alpha*Delta^{3(l+1)} at p=3 in degree 72(l+1)+3 with Z/3,
    // eta*Delta^{8(l+1)} at p=2 in degree 192(l+1)+1 with Z/2,
    // nu*Delta^{8(l+1)} at p=2 in degree 192(l+1)+3 with Z/8 (declared data).
    static TorsionLedger builtins();
    // Builtins plus the entries of a JSON file:
    // [{"family":..., "prime":..., "degree_offset":..., "degree_period":..., "orders":[...]}]
    static TorsionLedger from_file(const std::string& path);

    void add(TorsionLedgerEntry e);
    const std::vector<TorsionLedgerEntry>& entries() const { return entries_; }

    // Entries at prime p whose degree formula hits k; p must be 2 or 3.
    std::vector<TorsionLedgerEntry> lookup(long p, long k) const;
    // Entries at primes outside `base` hitting degree k.
    std::vector<TorsionLedgerEntry> active_at(const InvertedSet& base, long k) const;

private:
    std::vector<TorsionLedgerEntry> entries_;
};

std::vector<TorsionLedgerEntry> ledger_lookup(const TorsionLedger& ledger, long p, long k);

// One labeled basis class of a homotopy group.
struct BasisClass {
    std::string label;
    long degree = 0;
    bool torsion = false;
    mpz_class order = 0; // torsion classes only
    long weight = 0;     // free classes only: psi^n scales by n^weight
};

struct HomotopyGroup {
    FinAbGroup group;
    std::vector<BasisClass> basis;
};

// (model id, shift d, witness degree -d, witness element, lambda(n) = n^lambda_exponent)
struct DualityWitness {
    SpectrumId model = SpectrumId::KU;
    long level = 0; // m for TMF1
    long shift = 0; // d
    long witness_degree = 0;
    std::string element;
    long lambda_exponent = 0;

    LocalizedScalar lambda(long n, const InvertedSet& ctx) const;
};

class SpectrumModel {
public:
    SpectrumModel(SpectrumId id, InvertedSet base,
                  TorsionLedger ledger = TorsionLedger::builtins());

    SpectrumId id() const { return id_; }
    const InvertedSet& base() const { return base_; }
    const TorsionLedger& ledger() const { return ledger_; }
    const WPSConfig& wps() const; // TMF and TMF2 only

    // Canonical group with labeled basis; throws UnsupportedModel for TMF1.
    HomotopyGroup homotopy_group(long k) const;

    DualityWitness witness() const;

private:
    SpectrumId id_;
    InvertedSet base_;
    TorsionLedger ledger_;
    std::optional<WPSConfig> wps_;
};

// Witness data per model; `level` selects m for TMF1 and must be one of
// {2,3,4,5,6,7,8,11,14,15,23}, otherwise NoSelfDuality is thrown.
DualityWitness witness(SpectrumId id, long level = 0);

// The eleven (m, l_m) pairs of the Tmf_1(m) self-duality table.
const std::vector<std::pair<long, long>>& tmf1_witness_table();

} // namespace tmfops
