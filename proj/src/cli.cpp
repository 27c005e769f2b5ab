#include "rigidcert/cli.hpp"

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "rigidcert/certify.hpp"
#include "rigidcert/construct.hpp"
#include "rigidcert/elimination.hpp"
#include "rigidcert/errors.hpp"
#include "rigidcert/jsonio.hpp"
#include "rigidcert/rigidity.hpp"
#include "rigidcert/veronese.hpp"

namespace rigidcert {

namespace {

constexpr int kExitOk = 0;
constexpr int kExitPropertyFails = 1;
constexpr int kExitHypothesis = 2;
constexpr int kExitRetries = 3;
constexpr int kExitIo = 4;
constexpr int kExitInconclusive = 5;
constexpr int kExitInternal = 6;

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(out_path, std::ios::binary);
    if (!f) throw ParseError("cannot open output file: " + out_path);
    f << text;
    if (!f) throw ParseError("cannot write output file: " + out_path);
}

std::string slurp(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    if (!f) throw ParseError("cannot open input file: " + path);
    std::ostringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

// Accepts either a bare framework document or an envelope with a "framework"
// key (the construct/report output shape).
Framework load_framework(const std::string& path) {
    const std::string text = slurp(path);
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("input JSON: ") + e.what());
    }
    if (j.is_object() && j.contains("framework"))
        return framework_from_json(j.at("framework").dump());
    return framework_from_json(text);
}

struct ConstructArgs {
    size_t d = 0;
    size_t m = 0, n = 0;
    std::uint64_t seed = 0;
    std::string out;
    bool core_only = false;
};

int cmd_construct(const ConstructArgs& a) {
    if (a.core_only) {
        if ((a.m != 0 && a.m != a.d + 1) || (a.n != 0 && a.n != a.d + 1))
            throw HypothesisError("construct --core builds K_{d+1,d+1}; omit -m/-n or pass d+1");
        const Framework core = build_core(a.d);
        OJson j;
        j["seed"] = a.seed;
        j["framework"] = json_of(core);
        j["certificate"] = json_of(certify_superstable(core));
        emit(dump_canonical(j), a.out);
        return kExitOk;
    }
    if (a.m == 0 || a.n == 0)
        throw HypothesisError("construct: -m and -n are required (or use --core)");
    RandomSource rng(a.seed);
    const Construction c = build_kmn(a.d, a.m, a.n, rng);
    emit(dump_canonical(json_of(c)), a.out);
    return kExitOk;
}

int cmd_certify(const std::string& kind, const std::string& input, const std::string& format) {
    const Framework f = load_framework(input);
    const bool as_json = format == "json";

    if (kind == "superstable") {
        const SuperStabilityCertificate cert = certify_superstable(f);
        if (as_json) {
            std::cout << dump_canonical(json_of(cert));
        } else {
            std::cout << "super stability: " << (cert.verdict ? "CERTIFIED" : "REFUTED") << "\n"
                      << "  affine span dim: " << cert.span_dim << " (need " << cert.dimension
                      << ")\n"
                      << "  stress matrix rank: " << cert.stress_matrix_rank << " (need "
                      << cert.vertex_count - cert.dimension - 1 << ")\n"
                      << "  stress matrix PSD: " << (cert.psd.is_psd ? "yes" : "no") << "\n"
                      << "  conic at infinity: " << (cert.conic.conic_exists ? "yes" : "no")
                      << " (direction rank " << cert.conic.direction_veronese_rank << "/"
                      << cert.conic.max_rank << ")\n";
        }
        return cert.verdict ? kExitOk : kExitPropertyFails;
    }
    if (kind == "infrigid") {
        const RankReport rep = is_infinitesimally_rigid(f);
        if (as_json) {
            std::cout << dump_canonical(json_of(rep));
        } else {
            std::cout << "infinitesimally rigid: " << (rep.rigid ? "yes" : "no") << "\n"
                      << "  rank: " << rep.rank << " (expected " << rep.expected << ")\n"
                      << "  full affine span: " << (rep.full_affine_span ? "yes" : "no") << "\n";
        }
        return rep.rigid ? kExitOk : kExitPropertyFails;
    }
    if (kind == "maxwell") {
        const MaxwellAudit a = maxwell_audit(f);
        if (as_json) {
            std::cout << dump_canonical(json_of(a));
        } else {
            std::cout << "index identities: " << (a.identity_holds ? "hold" : "VIOLATED") << "\n"
                      << "  m = " << a.m_edges << ", r = " << a.r << ", s = " << a.s
                      << ", f = " << a.f << ", trivial motions = " << a.trivial_motion_count
                      << "\n"
                      << "  rigid-count form m - r = s - f + C(d+1,2): "
                      << (a.rigid_count_holds ? "holds (infinitesimally rigid)" : "does not hold")
                      << "\n";
        }
        return a.identity_holds ? kExitOk : kExitPropertyFails;
    }
    if (kind == "bolker-roth") {
        const size_t br = bolker_roth_dim(f);
        const size_t direct = stress_basis(f).size();
        if (as_json) {
            OJson j;
            j["bolker_roth_dim"] = br;
            j["stress_dim"] = direct;
            j["match"] = br == direct;
            std::cout << dump_canonical(j);
        } else {
            std::cout << "stress dimension via Gale ranks: " << br << "\n"
                      << "stress dimension via cokernel:   " << direct << "\n"
                      << (br == direct ? "match" : "MISMATCH") << "\n";
        }
        return br == direct ? kExitOk : kExitPropertyFails;
    }
    if (kind == "hulls") {
        if (!f.partition) throw HypothesisError("hulls: framework has no bipartition");
        const HullIntersectionReport rep =
            hull_relation(part_points(f, Side::U), part_points(f, Side::V), f.config.dimension);
        if (as_json) {
            std::cout << dump_canonical(json_of(rep));
        } else {
            std::cout << "hull relation: " << hull_status_name(rep.status) << "\n";
            if (rep.status == HullStatus::RelativeInteriorIntersect)
                std::cout << "  min weight t* = " << rep.t_star.to_string() << "\n";
        }
        switch (rep.status) {
            case HullStatus::RelativeInteriorIntersect: return kExitOk;
            case HullStatus::DisjointStrictlySeparable: return kExitPropertyFails;
            case HullStatus::BoundaryInconclusive: return kExitInconclusive;
        }
    }
    throw ParseError("unknown certify kind: " + kind);
}

int cmd_report(size_t d, size_t m, size_t n, std::uint64_t seed, const std::string& out) {
    const GgrReport rep = ggr_report(d, m, n, seed);
    emit(dump_canonical(json_of(rep)), out);
    bool all_computed_hold = true;
    for (const auto& c : rep.claims)
        if (c.basis == ClaimBasis::Computed && !c.holds) all_computed_hold = false;
    return all_computed_hold ? kExitOk : kExitPropertyFails;
}

} // namespace

int run_cli(int argc, const char* const* argv) {
    CLI::App app{"exact certificates for globally rigid bipartite frameworks"};
    app.require_subcommand(1);

    ConstructArgs ca;
    auto* construct = app.add_subcommand(
        "construct", "build a certified K_{m,n} realization and write framework + audit JSON");
    construct->add_option("-d,--dimension", ca.d, "ambient dimension")->required();
    construct->add_option("-m", ca.m, "size of part U");
    construct->add_option("-n", ca.n, "size of part V");
    construct->add_option("--seed", ca.seed, "random seed (recorded in the output)");
    construct->add_option("-o,--out", ca.out, "output path (stdout if omitted)");
    construct->add_flag("--core", ca.core_only,
                        "emit the alternating moment-curve core K_{d+1,d+1} with its certificate");

    std::string cert_kind, cert_input, cert_format = "text";
    auto* certify = app.add_subcommand("certify", "check a property of a framework file");
    certify->add_option("--kind", cert_kind, "superstable|infrigid|maxwell|bolker-roth|hulls")
        ->required()
        ->check(CLI::IsMember({"superstable", "infrigid", "maxwell", "bolker-roth", "hulls"}));
    certify->add_option("input", cert_input, "framework JSON file")->required();
    certify->add_option("--format", cert_format, "text|json")
        ->check(CLI::IsMember({"text", "json"}));

    size_t rd = 0, rm = 0, rn = 0;
    std::uint64_t rseed = 0;
    std::string rout;
    auto* report = app.add_subcommand("report", "full construction report with a claims ledger");
    report->add_option("-d,--dimension", rd, "ambient dimension")->required();
    report->add_option("-m", rm, "size of part U")->required();
    report->add_option("-n", rn, "size of part V")->required();
    report->add_option("--seed", rseed, "random seed (recorded in the output)");
    report->add_option("-o,--out", rout, "output path (stdout if omitted)");

    auto* selftest = app.add_subcommand("selftest", "run the built-in invariant suite (d <= 3)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitIo;
    }

    try {
        if (*construct) return cmd_construct(ca);
        if (*certify) return cmd_certify(cert_kind, cert_input, cert_format);
        if (*report) return cmd_report(rd, rm, rn, rseed, rout);
        if (*selftest) return run_selftest(std::cout);
    } catch (const HypothesisError& e) {
        std::cerr << "error (hypothesis): " << e.what() << "\n";
        return kExitHypothesis;
    } catch (const ScaleExceededError& e) {
        std::cerr << "error (scale): " << e.what() << "\n";
        return kExitHypothesis;
    } catch (const RetryExhaustedError& e) {
        std::cerr << "error (retries): " << e.what() << "\n";
        return kExitRetries;
    } catch (const ParseError& e) {
        std::cerr << "error (parse/io): " << e.what() << "\n";
        return kExitIo;
    } catch (const InternalError& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitInternal;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitInternal;
    }
    return kExitOk;
}

} // namespace rigidcert
