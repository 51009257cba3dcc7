#include "tmfops/cli.hpp"

#include <cstdlib>
#include <algorithm>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "tmfops/adams.hpp"
#include "tmfops/qseries.hpp"

namespace tmfops {

namespace {

using nlohmann::json;

struct CliConfig {
    std::string model = "tmf";
    long level = 2; // m for tmf1
    std::string invert;
    bool invert_given = false;
    long n = 5;
    long m = 2;
    std::string window = "-48..48";
    long precision = 200;
    std::string format = "table";
    std::string ledger_path;
    std::string suite = "all";
    std::string series_name = "delta";
    long w1 = 4, w2 = 6;
    long weight = 12;
};

std::pair<long, long> parse_window(const std::string& s)
{
    auto dots = s.find("..", 1); // search from 1 so a leading '-' survives
    if (dots == std::string::npos) throw CLI::ValidationError("--window", "expected lo..hi");
    long lo = std::stol(s.substr(0, dots));
    long hi = std::stol(s.substr(dots + 2));
    if (lo > hi) throw CLI::ValidationError("--window", "lo exceeds hi");
    return {lo, hi};
}

TorsionLedger load_ledger(const CliConfig& cfg)
{
    if (!cfg.ledger_path.empty()) return TorsionLedger::from_file(cfg.ledger_path);
    if (const char* env = std::getenv("TMF_ADAMS_LEDGER"))
        return TorsionLedger::from_file(env);
    return TorsionLedger::builtins();
}

InvertedSet primes_of(long n)
{
    std::vector<long> ps;
    long a = std::labs(n);
    for (long p = 2; p * p <= a; ++p)
        while (a % p == 0) {
            ps.push_back(p);
            a /= p;
        }
    if (a > 1) ps.push_back(a);
    return InvertedSet(ps);
}

InvertedSet model_base(const CliConfig& cfg, SpectrumId id)
{
    if (cfg.invert_given) return InvertedSet::parse(cfg.invert);
    InvertedSet b = primes_of(cfg.n);
    if (id == SpectrumId::TMF) b = b.union_with(InvertedSet::parse("2,3"));
    if (id == SpectrumId::TMF2) b = b.union_with(InvertedSet::parse("2"));
    return b;
}

std::string psi_column(const SpectrumModel& model, long n, const BasisClass& x)
{
    try {
        return psi(model, n, x).to_string();
    } catch (const NotInvertible&) {
        return "not defined over " + model.base().to_string();
    }
}

int emit_homotopy(const CliConfig& cfg, std::ostream& out)
{
    SpectrumId id = parse_spectrum_id(cfg.model);
    SpectrumModel model(id, model_base(cfg, id), load_ledger(cfg));
    auto [lo, hi] = parse_window(cfg.window);

    json rows = json::array();
    for (long k = lo; k <= hi; ++k) {
        auto g = model.homotopy_group(k);
        json classes = json::array();
        for (const auto& x : g.basis)
            classes.push_back({{"label", x.label}, {"psi", psi_column(model, cfg.n, x)}});
        rows.push_back(
            {{"degree", k}, {"group", g.group.to_string()}, {"classes", classes}});
    }

    if (cfg.format == "json") {
        json j{{"model", spectrum_name(id)},
               {"base", model.base().to_string()},
               {"n", cfg.n},
               {"window", {lo, hi}},
               {"rows", rows}};
        out << j.dump(2) << "\n";
    } else if (cfg.format == "csv") {
        out << "degree,group,basis,psi^" << cfg.n << "\n";
        for (const auto& r : rows)
            for (const auto& c : r["classes"])
                out << r["degree"].get<long>() << "," << r["group"].get<std::string>() << ","
                    << c["label"].get<std::string>() << "," << c["psi"].get<std::string>()
                    << "\n";
    } else {
        out << "pi_* " << spectrum_name(id) << " over " << model.base().to_string()
            << "   psi^" << cfg.n << "\n";
        for (const auto& r : rows) {
            if (r["group"].get<std::string>() == "0") continue;
            out << "k=" << r["degree"].get<long>() << "  " << r["group"].get<std::string>();
            for (const auto& c : r["classes"])
                out << "  [" << c["label"].get<std::string>() << " -> "
                    << c["psi"].get<std::string>() << "]";
            out << "\n";
        }
    }
    return 0;
}

int emit_qexp(const CliConfig& cfg, std::ostream& out)
{
    static const std::vector<std::string> known = {"a4", "a6",    "b2",        "b4",
                                                   "b6", "b8",    "c4",        "c6",
                                                   "delta", "eta-delta", "j"};
    const std::string& name = cfg.series_name;
    if (std::find(known.begin(), known.end(), name) == known.end())
        throw CLI::ValidationError("--name", "unknown series '" + name + "'");

    long prec = cfg.precision;
    QSeries s(prec, {});
    long shift = 0;
    if (name == "a4") s = tate_a4(prec);
    else if (name == "a6") s = tate_a6(prec);
    else if (name == "eta-delta") s = eta_product_delta(prec);
    else {
        auto inv = weierstrass_invariants(tate_curve(prec));
        if (name == "b2") s = inv.b2;
        else if (name == "b4") s = inv.b4;
        else if (name == "b6") s = inv.b6;
        else if (name == "b8") s = inv.b8;
        else if (name == "c4") s = inv.c4;
        else if (name == "c6") s = inv.c6;
        else if (name == "delta") s = inv.delta;
        else {
            s = inv.j.series;
            shift = inv.j.lead_exp;
        }
    }

    json coeffs = json::array();
    for (long i = 0; i < s.precision(); ++i) coeffs.push_back(s.coeff(i).to_string());
    json j{{"name", name}, {"precision", s.precision()}, {"coeffs", coeffs}};
    if (name == "j") j["leading_exponent"] = shift;

    if (cfg.format == "csv") {
        out << "k,coeff\n";
        for (long i = 0; i < s.precision(); ++i)
            out << i + shift << "," << s.coeff(i).to_string() << "\n";
    } else if (cfg.format == "table") {
        out << name << " = " << s.to_string(12) << "\n";
    } else {
        out << j.dump(2) << "\n";
    }
    return 0;
}

int emit_pairing(const CliConfig& cfg, std::ostream& out)
{
    WPSConfig wps{cfg.w1, cfg.w2, "g1", "g2",
                  cfg.invert_given ? InvertedSet::parse(cfg.invert) : InvertedSet::parse("2,3"),
                  +1};
    if (cfg.w1 == 4 && cfg.w2 == 6) {
        wps.g1_name = "c4";
        wps.g2_name = "c6";
    }
    if (cfg.w1 == 2 && cfg.w2 == 2) {
        wps.g1_name = "lambda1";
        wps.g2_name = "lambda2";
    }

    auto rows = h0_basis(wps, cfg.weight);
    auto cols = h1_basis(wps, -cfg.weight + wps.dualizing_weight());
    IntMatrix m = pairing_matrix(wps, cfg.weight);

    json jrows = json::array(), jcols = json::array(), jm = json::array();
    for (const auto& r : rows) jrows.push_back(monomial_name(wps, r));
    for (const auto& c : cols) jcols.push_back(monomial_name(wps, c));
    for (long i = 0; i < m.rows(); ++i) {
        json line = json::array();
        for (long j2 = 0; j2 < m.cols(); ++j2) line.push_back(m.at(i, j2).get_si());
        jm.push_back(line);
    }
    json j{{"w1", cfg.w1}, {"w2", cfg.w2},     {"weight", cfg.weight},
           {"rows", jrows}, {"cols", jcols},   {"matrix", jm}};

    if (cfg.format == "json") {
        out << j.dump(2) << "\n";
    } else if (cfg.format == "csv") {
        for (long i = 0; i < m.rows(); ++i) {
            for (long j2 = 0; j2 < m.cols(); ++j2)
                out << (j2 ? "," : "") << m.at(i, j2).get_str();
            out << "\n";
        }
    } else {
        out << "H0(w^" << cfg.weight << ") x H1(w^" << -cfg.weight + wps.dualizing_weight()
            << ") pairing\n";
        for (long i = 0; i < m.rows(); ++i) {
            out << monomial_name(wps, rows[i]) << " :";
            for (long j2 = 0; j2 < m.cols(); ++j2) out << " " << m.at(i, j2).get_str();
            out << "\n";
        }
    }
    return 0;
}

int emit_dualize(const CliConfig& cfg, std::ostream& out)
{
    SpectrumId id = parse_spectrum_id(cfg.model);
    if (id == SpectrumId::TMF1) {
        // only the witness datum exists for tmf1
        auto w = witness(id, cfg.level);
        json j{{"model", "tmf1"},
               {"level", w.level},
               {"shift", w.shift},
               {"witness_degree", w.witness_degree},
               {"lambda_exponent", w.lambda_exponent}};
        if (cfg.format == "json")
            out << j.dump(2) << "\n";
        else
            out << "tmf1(" << w.level << "): shift " << w.shift << ", witness degree "
                << w.witness_degree << ", lambda = n^" << w.lambda_exponent << "\n";
        return 0;
    }
    SpectrumModel model(id, model_base(cfg, id), load_ledger(cfg));
    auto [lo, hi] = parse_window(cfg.window);
    long d = model.witness().shift;

    json rows = json::array();
    bool all_match = true;
    for (long k = lo; k <= hi; ++k) {
        auto dual = anderson_dual_group(model, model.base(), k);
        auto shifted = model.homotopy_group(k - d).group;
        bool match = dual == shifted;
        all_match = all_match && match;
        rows.push_back({{"degree", k},
                        {"dual", dual.to_string()},
                        {"shifted", shifted.to_string()},
                        {"match", match}});
    }

    if (cfg.format == "json") {
        json j{{"model", spectrum_name(id)}, {"shift", d}, {"window", {lo, hi}}, {"rows", rows}};
        out << j.dump(2) << "\n";
    } else if (cfg.format == "csv") {
        out << "degree,dual,shifted,match\n";
        for (const auto& r : rows)
            out << r["degree"].get<long>() << "," << r["dual"].get<std::string>() << ","
                << r["shifted"].get<std::string>() << "," << (r["match"].get<bool>() ? 1 : 0)
                << "\n";
    } else {
        out << "pi_k I_A " << spectrum_name(id) << " vs pi_(k-" << d << ")\n";
        for (const auto& r : rows)
            out << "k=" << r["degree"].get<long>() << "  " << r["dual"].get<std::string>()
                << "  vs  " << r["shifted"].get<std::string>()
                << (r["match"].get<bool>() ? "" : "  MISMATCH") << "\n";
    }
    return all_match ? 0 : 1;
}

void print_report(const OperationReport& rep, const std::string& format, std::ostream& out)
{
    if (format == "json") out << rep.to_json() << "\n";
    else if (format == "csv") out << rep.to_csv();
    else out << rep.summary() << "\n";
}

std::vector<OperationReport> run_suite(const CliConfig& cfg)
{
    std::vector<OperationReport> reps;
    auto [lo, hi] = parse_window(cfg.window);
    auto base_for = [&](SpectrumId id) { return model_base(cfg, id); };

    auto run_composition = [&] {
        for (auto id : {SpectrumId::TMF, SpectrumId::KU, SpectrumId::KO, SpectrumId::TMF2}) {
            SpectrumModel model(id, base_for(id).union_with(primes_of(cfg.m * cfg.n)),
                                load_ledger(cfg));
            reps.push_back(verify_composition(model, cfg.m, cfg.n, lo, hi));
        }
    };
    auto run_self_duality = [&] {
        reps.push_back(verify_self_duality(SpectrumModel(SpectrumId::KU, {}), {}, lo, hi));
        reps.push_back(verify_self_duality(SpectrumModel(SpectrumId::KO, {}), {}, lo, hi));
        SpectrumModel tmf(SpectrumId::TMF, InvertedSet::parse("2,3"));
        reps.push_back(verify_self_duality(tmf, InvertedSet::parse("2,3"), lo, hi));
        SpectrumModel tmf2(SpectrumId::TMF2, {});
        reps.push_back(verify_self_duality(tmf2, InvertedSet::parse("2"), lo, hi));
    };
    auto run_conjecture = [&] {
        for (long n : {cfg.n, cfg.n == 5 ? 7L : cfg.n}) {
            for (auto id : {SpectrumId::KU, SpectrumId::KO, SpectrumId::TMF, SpectrumId::TMF2}) {
                SpectrumModel model(id, base_for(id).union_with(primes_of(n)),
                                    load_ledger(cfg));
                reps.push_back(verify_conjecture(model, n, lo, hi));
            }
            if (cfg.n != 5) break;
        }
        reps.push_back(verify_witness_table(cfg.n));
    };

    if (cfg.suite == "tate") {
        reps.push_back(verify_tate_identities(cfg.precision));
    } else if (cfg.suite == "theorem-b") {
        reps.push_back(verify_theorem_b(cfg.n, lo, hi,
                                        cfg.invert_given
                                            ? std::optional(InvertedSet::parse(cfg.invert))
                                            : std::nullopt));
    } else if (cfg.suite == "dual-operation") {
        reps.push_back(verify_dual_operation(cfg.n, lo, hi,
                                             cfg.invert_given
                                                 ? std::optional(InvertedSet::parse(cfg.invert))
                                                 : std::nullopt));
    } else if (cfg.suite == "composition") {
        run_composition();
    } else if (cfg.suite == "self-duality") {
        run_self_duality();
    } else if (cfg.suite == "serre-duality") {
        SpectrumModel tmf(SpectrumId::TMF, base_for(SpectrumId::TMF));
        reps.push_back(verify_serre_duality(tmf, cfg.n, std::max(std::labs(lo), std::labs(hi))));
    } else if (cfg.suite == "conjecture") {
        run_conjecture();
    } else if (cfg.suite == "koszul") {
        reps.push_back(verify_koszul_oracle(
            WPSConfig{4, 6, "c4", "c6", InvertedSet::parse("2,3"), +1}, 120));
        reps.push_back(verify_koszul_oracle(
            WPSConfig{2, 2, "lambda1", "lambda2", InvertedSet::parse("2"), +1}, 120));
    } else if (cfg.suite == "all") {
        reps.push_back(verify_tate_identities(cfg.precision));
        reps.push_back(verify_theorem_b(cfg.n, lo, hi));
        reps.push_back(verify_theorem_b(cfg.n, lo, 240, primes_of(cfg.n))); // ledger-inclusive
        reps.push_back(verify_dual_operation(cfg.n, lo, hi));
        run_composition();
        SpectrumModel tmf(SpectrumId::TMF, base_for(SpectrumId::TMF));
        reps.push_back(verify_serre_duality(tmf, cfg.n, 60));
        {
            CliConfig wide = cfg;
            wide.suite = "self-duality";
            auto [l2, h2] = parse_window("-60..60");
            reps.push_back(verify_self_duality(SpectrumModel(SpectrumId::KU, {}), {}, l2, h2));
            reps.push_back(verify_self_duality(SpectrumModel(SpectrumId::KO, {}), {}, l2, h2));
            SpectrumModel t6(SpectrumId::TMF, InvertedSet::parse("2,3"));
            reps.push_back(verify_self_duality(t6, InvertedSet::parse("2,3"), l2, h2));
            SpectrumModel t2(SpectrumId::TMF2, {});
            reps.push_back(verify_self_duality(t2, InvertedSet::parse("2"), l2, h2));
        }
        run_conjecture();
        reps.push_back(verify_koszul_oracle(
            WPSConfig{4, 6, "c4", "c6", InvertedSet::parse("2,3"), +1}, 120));
        reps.push_back(verify_koszul_oracle(
            WPSConfig{2, 2, "lambda1", "lambda2", InvertedSet::parse("2"), +1}, 120));
    } else {
        throw CLI::ValidationError("--suite", "unknown suite '" + cfg.suite + "'");
    }
    return reps;
}

int emit_verify(const CliConfig& cfg, std::ostream& out)
{
    auto reps = run_suite(cfg);
    bool ok = true;
    if (cfg.format == "json") {
        json arr = json::array();
        for (const auto& r : reps) arr.push_back(json::parse(r.to_json()));
        out << arr.dump(2) << "\n";
    }
    for (const auto& r : reps) {
        if (cfg.format != "json") print_report(r, cfg.format, out);
        ok = ok && r.passed();
    }
    return ok ? 0 : 1;
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"exact Adams operations on models of topological modular forms"};
    app.require_subcommand(1);
    CliConfig cfg;

    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--model", cfg.model, "tmf | ku | ko | tmf2 | tmf1");
        cmd->add_option("--level", cfg.level, "level m for tmf1");
        cmd->add_option("--invert", cfg.invert, "comma-separated primes to invert")
            ->each([&](const std::string&) { cfg.invert_given = true; });
        cmd->add_option("--n", cfg.n, "Adams operation index");
        cmd->add_option("--m", cfg.m, "second operation index (composition)");
        cmd->add_option("--window", cfg.window, "degree window lo..hi");
        cmd->add_option("--precision", cfg.precision, "q-expansion precision")
            ->check(CLI::PositiveNumber);
        cmd->add_option("--format", cfg.format, "json | csv | table")
            ->check(CLI::IsMember({"json", "csv", "table"}));
        cmd->add_option("--ledger", cfg.ledger_path, "torsion ledger JSON path");
    };

    CLI::App* homotopy = app.add_subcommand("homotopy", "homotopy groups with psi^n scalars");
    add_common(homotopy);
    CLI::App* qexp = app.add_subcommand("qexp", "named q-expansion");
    add_common(qexp);
    qexp->add_option("--name", cfg.series_name,
                     "a4 | a6 | b2 | b4 | b6 | b8 | c4 | c6 | delta | eta-delta | j");
    CLI::App* pairing = app.add_subcommand("pairing", "Serre pairing matrix at a weight");
    add_common(pairing);
    pairing->add_option("--w1", cfg.w1, "first generator weight")->check(CLI::PositiveNumber);
    pairing->add_option("--w2", cfg.w2, "second generator weight")->check(CLI::PositiveNumber);
    pairing->add_option("--weight", cfg.weight, "H0 weight k");
    CLI::App* dualize = app.add_subcommand("dualize", "Anderson-dual group table");
    add_common(dualize);
    CLI::App* verify = app.add_subcommand("verify", "run a verification suite");
    add_common(verify);
    verify->add_option("--suite", cfg.suite,
                       "tate | theorem-b | dual-operation | composition | self-duality | "
                       "serre-duality | conjecture | koszul | all");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) { // --help
            out << app.help();
            return 0;
        }
        err << e.what() << "\n" << app.help();
        return 2;
    }

    try {
        if (homotopy->parsed()) return emit_homotopy(cfg, out);
        if (qexp->parsed()) return emit_qexp(cfg, out);
        if (pairing->parsed()) return emit_pairing(cfg, out);
        if (dualize->parsed()) return emit_dualize(cfg, out);
        if (verify->parsed()) return emit_verify(cfg, out);
    } catch (const CLI::ValidationError& e) {
        err << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}

} // namespace tmfops
