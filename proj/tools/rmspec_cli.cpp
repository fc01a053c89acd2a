// Command-line front end: compute spectra/distributions, intersect codes,
// search for witness functions, check the spectrum-shape conjecture, and run
// the bundled verification suite.
//
// Exit codes: 0 success/PASS, 1 FAIL, 2 usage or parameter error.

#include <chrono>
#include <cstdint>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "rmspec/apset.hpp"
#include "rmspec/codes.hpp"
#include "rmspec/enumeration.hpp"
#include "rmspec/gf2.hpp"
#include "rmspec/spectra.hpp"

using namespace rmspec;

namespace {

struct CommonOpts {
    unsigned threads = 1;
    unsigned budget = 30;  // enumeration budget as an exponent: 2^budget codewords
    bool json = false;
    bool csv = false;
};

void add_common(CLI::App* cmd, CommonOpts& o) {
    cmd->add_option("--threads", o.threads, "Worker threads for enumeration (0 = all cores)");
    cmd->add_option("--budget", o.budget, "Enumeration budget exponent k (at most 2^k codewords)");
    cmd->add_flag("--json", o.json, "Emit JSON");
    cmd->add_flag("--csv", o.csv, "Emit CSV (distributions only)");
}

EnumOptions enum_opts(const CommonOpts& o) { return {o.budget, o.threads}; }

std::pair<int, int> parse_pair(const std::string& s, const char* what) {
    const auto comma = s.find(',');
    if (comma == std::string::npos)
        throw CLI::ValidationError(std::string(what) + " must be two comma-separated integers");
    return {std::stoi(s.substr(0, comma)), std::stoi(s.substr(comma + 1))};
}

LinearCode build_code(const std::string& family, int r, int m, int n, int d) {
    if (family == "rm") return rm_code(r, m);
    if (family == "bch") return bch_code(n, d);
    if (family == "ebch") return extended_bch_rm_aligned(n, d);
    throw CLI::ValidationError("unsupported family '" + family + "' for this subcommand");
}

int cmd_spectrum(const std::string& family, int r, int m, int c, int n, int d,
                 const std::string& method, const CommonOpts& o) {
    if (family == "rm-closed") {
        const APSet s = c == 3 ? closed_form_m_minus_3(m) : closed_form_m_minus_4(m);
        std::cout << (o.json ? s.to_json().dump(2) : s.to_string()) << "\n";
        return 0;
    }
    if (family == "rm" && (method == "derived" || method == "sandwich")) {
        const SpectrumResult res = derive_spectrum(r, m, {o.threads, o.budget});
        if (o.json) {
            std::cout << res.to_json().dump(2) << "\n";
        } else {
            std::cout << (res.status == SpectrumStatus::Proven ? "proven" : "partial") << " "
                      << res.spectrum().to_string() << "\n";
            if (res.status != SpectrumStatus::Proven)
                std::cout << "undecided: " << res.gap().to_string() << "\n";
        }
        return 0;
    }
    const APSet s = weight_spectrum(build_code(family, r, m, n, d), enum_opts(o));
    std::cout << (o.json ? s.to_json().dump(2) : s.to_string()) << "\n";
    return 0;
}

void print_distribution(const Distribution& dist, const CommonOpts& o) {
    if (o.json) {
        nlohmann::ordered_json j;
        j["n"] = dist.n;
        j["distribution"] = nlohmann::ordered_json::array();
        for (const auto& [w, cnt] : dist.entries)
            j["distribution"].push_back({{"weight", w}, {"count", cnt.get_str()}});
        std::cout << j.dump(2) << "\n";
    } else if (o.csv) {
        std::cout << dist.to_csv();
    } else {
        std::cout << dist.to_magma() << "\n";
    }
}

int cmd_distribution(const std::string& family, int r, int m, int n, int d, const CommonOpts& o) {
    print_distribution(weight_distribution(build_code(family, r, m, n, d), enum_opts(o)), o);
    return 0;
}

int cmd_intersect(const std::string& rm_pair, const std::string& ebch_pair, bool with_distribution,
                  const CommonOpts& o) {
    const auto [r, m] = parse_pair(rm_pair, "--rm");
    const auto [n, d] = parse_pair(ebch_pair, "--ebch");
    if ((std::uint64_t{1} << m) != static_cast<std::uint64_t>(n) + 1)
        throw CLI::ValidationError("--rm and --ebch lengths differ: 2^m must equal n+1");
    const LinearCode inter = intersect(rm_code(r, m), extended_bch_rm_aligned(n, d));
    if (!with_distribution && !o.json) {
        std::cout << "dimension " << inter.dimension() << "\n";
        std::cout << weight_spectrum(inter, enum_opts(o)).to_string() << "\n";
        return 0;
    }
    const Distribution dist = weight_distribution(inter, enum_opts(o));
    if (o.json) {
        nlohmann::ordered_json j;
        j["dimension"] = inter.dimension();
        j["n"] = dist.n;
        j["support"] = dist.support().to_json();
        j["distribution"] = nlohmann::ordered_json::array();
        for (const auto& [w, cnt] : dist.entries)
            j["distribution"].push_back({{"weight", w}, {"count", cnt.get_str()}});
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "dimension " << inter.dimension() << "\n";
        print_distribution(dist, o);
    }
    return 0;
}

int cmd_witness(int r, int m, std::uint64_t target, std::uint64_t seed, const CommonOpts& o) {
    SearchOptions sopts;
    sopts.seed = seed;
    sopts.max_evaluations = std::uint64_t{1} << std::min(o.budget, 62u);
    const auto f = witness_search(r, m, target, sopts);
    if (o.json) {
        nlohmann::ordered_json j;
        j["r"] = r;
        j["m"] = m;
        j["target"] = target;
        j["found"] = f.has_value();
        if (f) j["function"] = f->to_string();
        std::cout << j.dump(2) << "\n";
    } else if (f) {
        std::cout << f->to_string() << "\n";
    } else {
        std::cout << "not found\n";
    }
    return 0;
}

int cmd_conjecture(int c, int m, const std::string& b_set_file, const CommonOpts& o) {
    std::optional<APSet> b_set;
    if (!b_set_file.empty()) {
        std::ifstream in(b_set_file);
        if (!in) throw CLI::ValidationError("cannot read --b-set file " + b_set_file);
        nlohmann::json j;
        in >> j;
        if (j.is_array()) {
            b_set = APSet::from_values(j.get<std::vector<std::uint64_t>>());
        } else {
            b_set = APSet::from_json(j);
        }
    }
    const ConjectureReport rep = conjecture_check(c, m, b_set, {o.threads, o.budget});
    if (o.json) {
        std::cout << rep.to_json().dump(2) << "\n";
    } else {
        const char* verdict = rep.verdict == ConjectureVerdict::Conforms
                                  ? "conforms"
                                  : (rep.verdict == ConjectureVerdict::NotConforming
                                         ? "not-conforming"
                                         : "inconclusive");
        std::cout << verdict << ": " << rep.detail << "\n";
        if (!rep.gap.empty()) std::cout << "undecided weights: " << rep.gap.to_string() << "\n";
    }
    return rep.verdict == ConjectureVerdict::NotConforming ? 1 : 0;
}

// ---- verify ----------------------------------------------------------------

struct Check {
    std::string id;
    std::string summary;
    bool heavy = false;
    std::function<std::optional<std::string>()> run;  // nullopt = pass, else failure text
};

APSet ss_rm36() {
    return set_union(APSet::from_values({0, 16, 24, 28, 112, 128}), APSet::range(32, 104, 4));
}

APSet ss_rm38() {
    return set_union(APSet::from_values({0, 32, 48, 56, 456, 464, 480, 512}),
                     APSet::range(64, 448, 4));
}

std::vector<Check> verification_checks(const CommonOpts& o) {
    const EnumOptions eo = enum_opts(o);
    const DeriveOptions dopts{o.threads, o.budget};
    std::vector<Check> checks;

    checks.push_back({"rm-2-6", "exhaustive RM(2,6) spectrum", false, [eo]() -> std::optional<std::string> {
        const APSet expect = APSet::from_values({0, 16, 24, 28, 32, 36, 40, 48, 64});
        const APSet got = weight_spectrum(rm_code(2, 6), eo);
        if (got != expect) return "RM(2,6) spectrum was " + got.to_string();
        return std::nullopt;
    }});
    checks.push_back({"rm-2-7", "exhaustive RM(2,7) spectrum (2^29 codewords)", true,
                      [eo]() -> std::optional<std::string> {
        const APSet expect = APSet::from_values({0, 32, 48, 56, 64, 72, 80, 96, 128});
        const APSet got = weight_spectrum(rm_code(2, 7), eo);
        if (got != expect) return "RM(2,7) spectrum was " + got.to_string();
        return std::nullopt;
    }});
    checks.push_back({"sumsets", "sumset steps of the bundled spectra", false,
                      []() -> std::optional<std::string> {
        if (sumset_step(APSet::from_values({0, 16, 24, 28, 32, 36, 40, 48, 64})) != ss_rm36())
            return std::string("RM(2,6) sumset mismatch");
        if (sumset_step(paper_baseline("rm_3_8").spectrum) != ss_rm38())
            return std::string("RM(3,8) sumset mismatch");
        return std::nullopt;
    }});
    checks.push_back({"rm-3-7", "sandwich proof of RM(3,7)", false,
                      [eo]() -> std::optional<std::string> {
        const SpectrumResult res = sandwich(3, 7, weight_spectrum(rm_code(2, 6), eo));
        if (res.status != SpectrumStatus::Proven) return std::string("RM(3,7) not proven");
        if (res.spectrum() != ss_rm36()) return "spectrum was " + res.spectrum().to_string();
        return std::nullopt;
    }});
    checks.push_back({"bch-intersection", "RM(3,8) x ext-BCH(255,19): dimension 26 + table",
                      false, [eo]() -> std::optional<std::string> {
        const LinearCode inter = intersect(rm_code(3, 8), extended_bch_rm_aligned(255, 19));
        if (inter.dimension() != 26)
            return "dimension was " + std::to_string(inter.dimension());
        const Distribution dist = weight_distribution(inter, eo);
        mpz_class a128 = 0;
        for (const auto& [w, cnt] : dist.entries)
            if (w == 128) a128 = cnt;
        if (a128 != 13287280) return "A_128 was " + a128.get_str();
        const APSet support = set_union(APSet::from_values({0, 80, 176, 256}),
                                        APSet::range(88, 168, 4));
        if (dist.support() != support) return "support was " + dist.support().to_string();
        return std::nullopt;
    }});
    checks.push_back({"family-m3", "chained RM(m-3,m) closed form, m=6..20", false,
                      [dopts]() -> std::optional<std::string> {
        for (int m = 6; m <= 20; ++m) {
            const SpectrumResult res = derive_spectrum(m - 3, m, dopts);
            if (res.status != SpectrumStatus::Proven ||
                res.spectrum() != closed_form_m_minus_3(m))
                return "failed at m=" + std::to_string(m);
        }
        return std::nullopt;
    }});
    checks.push_back({"family-m4", "chained RM(m-4,m) closed form, m=8..20", false,
                      [dopts]() -> std::optional<std::string> {
        for (int m = 8; m <= 20; ++m) {
            const SpectrumResult res = derive_spectrum(m - 4, m, dopts);
            if (res.status != SpectrumStatus::Proven ||
                res.spectrum() != closed_form_m_minus_4(m))
                return "failed at m=" + std::to_string(m);
        }
        return std::nullopt;
    }});
    checks.push_back({"rm-4-9", "derived RM(4,9) spectrum", false,
                      [dopts]() -> std::optional<std::string> {
        const SpectrumResult res = derive_spectrum(4, 9, dopts);
        const APSet expect = set_union(APSet::from_values({60, 452}), ss_rm38());
        if (res.status != SpectrumStatus::Proven || res.spectrum() != expect)
            return std::string("RM(4,9) derivation mismatch");
        return std::nullopt;
    }});
    checks.push_back({"rm-5-10", "partial RM(5,10) derivation", true,
                      [dopts]() -> std::optional<std::string> {
        const SpectrumResult res = derive_spectrum(5, 10, dopts);
        if (res.status != SpectrumStatus::Partial) return std::string("expected a partial result");
        if (!res.spectrum().contains(62) || !res.spectrum().contains(962))
            return std::string("62/962 missing");
        if (!res.spectrum().contains_all(APSet::range(448, 576, 2)))
            return std::string("even weights in [448,576] missing");
        return std::nullopt;
    }});
    checks.push_back({"macwilliams", "transform of RM(1,m) matches RM(m-2,m), m=4..10", false,
                      []() -> std::optional<std::string> {
        for (int m = 4; m <= 10; ++m) {
            const std::uint64_t n = std::uint64_t{1} << m;
            Distribution first;
            first.n = n;
            first.entries = {{0, 1}, {n / 2, (mpz_class(1) << (m + 1)) - 2}, {n, 1}};
            const APSet expect =
                set_difference(APSet::range(0, n, 2), APSet::from_values({2, n - 2}));
            if (macwilliams_transform(first, m + 1).support() != expect)
                return "mismatch at m=" + std::to_string(m);
        }
        return std::nullopt;
    }});
    checks.push_back({"conjecture", "spectrum shape for c=1..4 plus the open c=5 case", false,
                      [dopts]() -> std::optional<std::string> {
        for (int c = 1; c <= 4; ++c) {
            for (int m = std::max(2 * c, c + 2); m <= 16; ++m) {
                if (c == 3 && m < 6) continue;
                if (c == 4 && m < 8) continue;
                if (conjecture_check(c, m, {}, dopts).verdict != ConjectureVerdict::Conforms)
                    return "shape fails at c=" + std::to_string(c) + ", m=" + std::to_string(m);
            }
        }
        if (conjecture_check(5, 10, {}, dopts).verdict != ConjectureVerdict::Inconclusive)
            return std::string("c=5, m=10 should be inconclusive");
        return std::nullopt;
    }});
    return checks;
}

int cmd_verify(const std::string& only, bool heavy, const CommonOpts& o) {
    const std::vector<Check> checks = verification_checks(o);
    if (!only.empty()) {
        bool known = false;
        for (const Check& c : checks) known = known || c.id == only;
        if (!known) throw CLI::ValidationError("unknown check id '" + only + "'");
    }
    bool failed = false;
    nlohmann::ordered_json report = nlohmann::ordered_json::array();
    for (const Check& c : checks) {
        if (!only.empty() && c.id != only) continue;
        const auto start = std::chrono::steady_clock::now();
        std::string outcome = "PASS", detail;
        if (c.heavy && !heavy && only.empty()) {
            outcome = "SKIPPED";
            detail = "enable with --heavy";
        } else {
            try {
                if (auto err = c.run()) {
                    outcome = "FAIL";
                    detail = *err;
                    failed = true;
                }
            } catch (const std::exception& e) {
                outcome = "FAIL";
                detail = e.what();
                failed = true;
            }
        }
        const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                            std::chrono::steady_clock::now() - start)
                            .count();
        if (o.json) {
            report.push_back({{"id", c.id},
                              {"summary", c.summary},
                              {"outcome", outcome},
                              {"detail", detail},
                              {"ms", ms}});
        } else {
            std::cout << "[" << outcome << "] " << c.id << " — " << c.summary;
            if (!detail.empty()) std::cout << " (" << detail << ")";
            std::cout << " [" << ms << " ms]\n";
        }
    }
    if (o.json) std::cout << report.dump(2) << "\n";
    return failed ? 1 : 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact weight spectra of Reed-Muller and BCH codes"};
    app.require_subcommand(1);

    std::string family = "rm", method = "derived";
    int r = 0, m = 0, c = 3, n = 0, d = 0;
    std::uint64_t target = 0, seed = 1;
    std::string rm_pair, ebch_pair, only, b_set_file;
    bool with_distribution = false, heavy = false;
    CommonOpts common;

    auto* sp = app.add_subcommand("spectrum", "Weight spectrum of a code");
    sp->add_option("--family", family, "rm, rm-closed, bch, or ebch")->default_val("rm");
    sp->add_option("--r", r, "Reed-Muller order");
    sp->add_option("--m", m, "Reed-Muller variable count");
    sp->add_option("--c", c, "Co-order for rm-closed: spectrum of RM(m-c,m), c in {3,4}");
    sp->add_option("--n", n, "BCH length (2^t - 1)");
    sp->add_option("--d", d, "BCH designed distance");
    sp->add_option("--method", method, "exhaustive, derived, or sandwich")->default_val("derived");
    add_common(sp, common);

    auto* di = app.add_subcommand("distribution", "Weight distribution of a code");
    di->add_option("--family", family, "rm, bch, or ebch")->default_val("rm");
    di->add_option("--r", r, "Reed-Muller order");
    di->add_option("--m", m, "Reed-Muller variable count");
    di->add_option("--n", n, "BCH length (2^t - 1)");
    di->add_option("--d", d, "BCH designed distance");
    add_common(di, common);

    auto* in = app.add_subcommand("intersect", "Intersect RM with an extended BCH code");
    in->add_option("--rm", rm_pair, "r,m of the Reed-Muller code")->required();
    in->add_option("--ebch", ebch_pair, "n,d of the extended BCH code")->required();
    in->add_flag("--distribution", with_distribution, "Also enumerate the weight distribution");
    add_common(in, common);

    auto* wi = app.add_subcommand("witness", "Search for a function attaining a target weight");
    wi->add_option("--r", r, "Degree bound")->required();
    wi->add_option("--m", m, "Variable count")->required();
    wi->add_option("--target", target, "Target weight")->required();
    wi->add_option("--seed", seed, "Random seed");
    add_common(wi, common);

    auto* ve = app.add_subcommand("verify", "Run the bundled verification suite");
    ve->add_option("--only", only, "Run a single check by id");
    ve->add_flag("--heavy", heavy, "Include the long-running checks");
    add_common(ve, common);

    auto* co = app.add_subcommand("conjecture", "Check the conjectured spectrum shape");
    co->add_option("--c", c, "Co-order: checks RM(m-c,m)")->required();
    co->add_option("--m", m, "Variable count")->required();
    co->add_option("--b-set", b_set_file, "JSON file with the expected middle band");
    add_common(co, common);

    try {
        app.parse(argc, argv);
        if (sp->parsed())
            return cmd_spectrum(family, r, m, c, n, d, method, common);
        if (di->parsed()) return cmd_distribution(family, r, m, n, d, common);
        if (in->parsed()) return cmd_intersect(rm_pair, ebch_pair, with_distribution, common);
        if (wi->parsed()) return cmd_witness(r, m, target, seed, common);
        if (ve->parsed()) return cmd_verify(only, heavy, common);
        if (co->parsed()) return cmd_conjecture(c, m, b_set_file, common);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return e.get_exit_code() == 0 ? 0 : 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
