#include "cli_app.hpp"

#include <cstdint>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "ktheta/dualpair.hpp"
#include "ktheta/fock.hpp"
#include "ktheta/ktype.hpp"
#include "ktheta/verifier.hpp"

namespace ktheta::cli {

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFail = 1;
constexpr int kExitPrecondition = 2;
constexpr int kExitCap = 3;
constexpr int kExitUsage = 64;

struct Options {
    int d_max = 8;
    long cap = 2'000'000;
    int jobs = 1; // 0 = auto
    bool json = false;

    OracleLimits limits() const {
        OracleLimits l;
        l.monomial_cap = cap;
        l.jobs = jobs == 0 ? static_cast<int>(std::thread::hardware_concurrency()) : jobs;
        if (l.jobs <= 0) l.jobs = 1;
        return l;
    }
};

std::uint64_t fnv1a64(const std::string& s) {
    std::uint64_t h = 1469598103934665603ULL;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    return h;
}

// Optional content-addressed spectrum store under KTYPE_CACHE_DIR.
SpectrumTable cached_spectrum(const FockRealization& r, int d, const OracleLimits& limits) {
    const char* dir = std::getenv("KTYPE_CACHE_DIR");
    if (dir == nullptr || *dir == '\0') return spectrum(r, d, limits);
    const std::string key = realization_key(r) + "|d=" + std::to_string(d);
    std::ostringstream name;
    name << std::hex << fnv1a64(key);
    const std::filesystem::path path = std::filesystem::path(dir) / (name.str() + ".jsonl");
    if (std::ifstream in(path); in) {
        std::string line;
        std::getline(in, line);
        if (!line.empty()) return spectrum_from_jsonl(line);
    }
    SpectrumTable t = spectrum(r, d, limits);
    std::error_code ec;
    std::filesystem::create_directories(dir, ec);
    if (std::ofstream outf(path); outf) outf << spectrum_to_jsonl(t) << '\n';
    return t;
}

void print_report(const VerificationReport& rep, const Options& opt, std::ostream& out) {
    if (opt.json) {
        out << report_to_json(rep) << '\n';
        return;
    }
    out << '[' << rep.status << "] " << rep.suite << ' ' << rep.scope;
    if (rep.member >= 0) out << " member " << rep.member;
    if (rep.d_max >= 0) out << " dmax " << rep.d_max;
    out << " checked " << rep.checked;
    if (rep.counterexample) out << " counterexample " << *rep.counterexample;
    if (rep.skip_reason) out << " (" << *rep.skip_reason << ')';
    out << '\n';
}

int cmd_parity(const std::string& type_text, const Options& opt, std::ostream& out) {
    const KTypeParam t = canonicalize(parse_ktype(type_text));
    const int p = parity(t).value();
    if (opt.json) {
        out << "{\"parity\":" << p << "}\n";
    } else {
        out << p << '\n';
    }
    return kExitOk;
}

int cmd_degree(const std::string& pair_text, int member, const std::string& type_text,
               const Options& opt, std::ostream& out) {
    const DualPairConfig cfg = parse_pair(pair_text);
    const KTypeParam t = parse_ktype(type_text);
    const long deg = degree_formula(cfg, member, t);
    if (opt.json) {
        out << "{\"degree\":" << deg << "}\n";
    } else {
        out << deg << '\n';
    }
    return kExitOk;
}

int cmd_companion(const std::string& group_text, const Options& opt, std::ostream& out) {
    const DualPairConfig cfg = select_companion(parse_group(group_text));
    if (opt.json) {
        out << "{\"companion\":\"" << to_string(cfg) << "\"}\n";
    } else {
        out << to_string(cfg) << '\n';
    }
    return kExitOk;
}

int cmd_spectrum(const std::string& pair_text, int member, int d, const Options& opt,
                 const std::string& golden_path, std::ostream& out, std::ostream& err) {
    const DualPairConfig cfg = parse_pair(pair_text);
    const FockRealization r = build_realization(cfg, member);
    if (!golden_path.empty()) {
        std::ostringstream computed;
        for (int k = 0; k <= d; ++k) {
            computed << spectrum_to_jsonl(cached_spectrum(r, k, opt.limits())) << '\n';
        }
        std::ifstream in(golden_path, std::ios::binary);
        if (!in) {
            err << "cannot open golden file " << golden_path << '\n';
            return kExitUsage;
        }
        std::stringstream expected;
        expected << in.rdbuf();
        if (expected.str() == computed.str()) {
            out << "golden match: " << golden_path << '\n';
            return kExitOk;
        }
        err << "golden mismatch: " << golden_path << "\nexpected:\n"
            << expected.str() << "computed:\n"
            << computed.str();
        return kExitVerifyFail;
    }
    const SpectrumTable t = cached_spectrum(r, d, opt.limits());
    if (opt.json) {
        out << spectrum_to_jsonl(t) << '\n';
    } else {
        for (const auto& [ktype, mult] : t.entries) {
            out << to_string(ktype) << ' ' << mult << '\n';
        }
    }
    return kExitOk;
}

int cmd_verify(const std::string& suite, const Options& opt, const std::string& ranks,
               const std::string& grid, const std::string& input, std::ostream& out,
               std::ostream& err) {
    bool any_fail = false;
    auto stream = [&](const VerificationReport& rep) {
        any_fail = any_fail || rep.failed();
        print_report(rep, opt, out);
    };

    if (suite == "uniform") {
        if (input.empty()) {
            err << "verify uniform requires --input <fixture.json>\n";
            return kExitUsage;
        }
        std::ifstream in(input);
        if (!in) {
            err << "cannot open fixture " << input << '\n';
            return kExitUsage;
        }
        nlohmann::json j;
        try {
            in >> j;
        } catch (const nlohmann::json::exception& e) {
            throw ParseError(std::string("bad fixture: ") + e.what());
        }
        const MaxCompactDesc k = parse_compact(j.at("compact").get<std::string>());
        std::vector<KTypeParam> types;
        for (const auto& s : j.at("types")) types.push_back(parse_ktype(s.get<std::string>()));
        stream(check_parity_uniform(k, types));
        return any_fail ? kExitVerifyFail : kExitOk;
    }

    if (suite == "companion") {
        const int max_rank = grid == "wide" ? 6 : 4;
        for (Family f : kAllFamilies) stream(check_companion_pipeline(f, max_rank));
        return any_fail ? kExitVerifyFail : kExitOk;
    }

    if (suite != "disjointness" && suite != "degree-table" && suite != "parity-degree") {
        err << "unknown suite \"" << suite
            << "\" (expected disjointness, degree-table, parity-degree, companion, uniform)\n";
        return kExitUsage;
    }

    auto preset = small_ranks_preset();
    if (ranks == "extended") {
        for (auto& c : conformance_extras()) preset.push_back(c);
    } else if (ranks != "small") {
        err << "unknown --ranks preset \"" << ranks << "\" (expected small or extended)\n";
        return kExitUsage;
    }

    for (const auto& pc : preset) {
        const DualPairConfig& cfg = pc.first;
        const int member = pc.second;
        const std::string scope = to_string(cfg);
        auto body = [&]() {
            if (suite == "disjointness") {
                return check_disjointness(cfg, member, opt.d_max, opt.limits());
            }
            if (suite == "degree-table") {
                return check_degree_table(cfg, member, opt.d_max, opt.limits());
            }
            return check_parity_degree(cfg, member, opt.d_max, opt.limits());
        };
        stream(run_suite_case(suite, scope, member, opt.d_max, body));
    }
    return any_fail ? kExitVerifyFail : kExitOk;
}

} // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"K-type parametrization, dual-pair degree formulas and the "
                 "polynomial-model oracle"};
    app.require_subcommand(1);
    app.fallthrough();
    Options opt;
    app.add_flag("--json", opt.json, "JSON output");
    app.add_option("--dmax", opt.d_max, "maximal degree for oracle scans")
        ->check(CLI::NonNegativeNumber);
    app.add_option("--cap", opt.cap, "monomial workload cap")->check(CLI::PositiveNumber);
    app.add_option("--jobs", opt.jobs, "parallel jobs (0 = auto)")
        ->check(CLI::NonNegativeNumber);

    std::string type_text, pair_text, group_text, golden_path, suite;
    std::string ranks = "small", grid = "default", input;
    int member = 0, degree_d = 0;

    auto* parity_cmd = app.add_subcommand("parity", "parity of a K-type");
    parity_cmd->add_option("type", type_text, "K-type, e.g. O3[1;-]")->required();

    auto* degree_cmd = app.add_subcommand("degree", "closed-form occurrence degree");
    degree_cmd->add_option("pair", pair_text, "dual pair, e.g. (Sp4R,O(4,2))")->required();
    degree_cmd->add_option("member", member, "member index 0/1")->required();
    degree_cmd->add_option("type", type_text, "K-type")->required();

    auto* companion_cmd = app.add_subcommand("companion", "minimal suitable companion");
    companion_cmd->add_option("group", group_text, "group, e.g. Sp4R")->required();

    auto* spectrum_cmd = app.add_subcommand("spectrum", "K-type multiset of one degree");
    spectrum_cmd->add_option("pair", pair_text)->required();
    spectrum_cmd->add_option("member", member)->required();
    spectrum_cmd->add_option("d", degree_d, "homogeneous degree")->required();
    spectrum_cmd->add_option("--golden", golden_path,
                             "compare degrees 0..d byte-exactly against a golden file");

    auto* verify_cmd = app.add_subcommand("verify", "run a verification suite");
    verify_cmd->add_option("suite", suite,
                           "disjointness | degree-table | parity-degree | companion | uniform")
        ->required();
    verify_cmd->add_option("--ranks", ranks, "config preset: small | extended");
    verify_cmd->add_option("--grid", grid, "companion rank grid: default | wide");
    verify_cmd->add_option("--input", input, "fixture file for the uniform suite");

    try {
        std::vector<std::string> args(argv + 1, argv + argc);
        std::reverse(args.begin(), args.end());
        app.parse(args);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            // --help and friends.
            out << app.help();
            return kExitOk;
        }
        err << e.what() << '\n';
        return kExitUsage;
    }

    try {
        if (parity_cmd->parsed()) return cmd_parity(type_text, opt, out);
        if (degree_cmd->parsed()) return cmd_degree(pair_text, member, type_text, opt, out);
        if (companion_cmd->parsed()) return cmd_companion(group_text, opt, out);
        if (spectrum_cmd->parsed()) {
            return cmd_spectrum(pair_text, member, degree_d, opt, golden_path, out, err);
        }
        if (verify_cmd->parsed()) {
            return cmd_verify(suite, opt, ranks, grid, input, out, err);
        }
        err << "no command\n";
        return kExitUsage;
    } catch (const SplitRequired& e) {
        err << "precondition: " << e.what() << '\n';
        return kExitPrecondition;
    } catch (const Condition3Violated& e) {
        err << "precondition: " << e.what() << '\n';
        return kExitPrecondition;
    } catch (const CapExceeded& e) {
        err << "cap: " << e.what() << '\n';
        return kExitCap;
    } catch (const ParseError& e) {
        err << "parse error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return kExitVerifyFail;
    }
}

} // namespace ktheta::cli
