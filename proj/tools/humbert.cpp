// humbert: exact construction and certification of non-simple principally
// polarized abelian varieties from period matrices.
//
// Every subcommand is a thin shell over one library operation; all output is
// JSON on stdout with exact rational entries. Exit codes: 0 success, 1 a
// failed certificate or validation (JSON report with a "kind" field), 2
// malformed input.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "humbert/json_io.hpp"
#include "humbert/sampling.hpp"

using namespace humbert;

namespace {

std::string read_source(const std::string& path) {
    if (path == "-") {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        return ss.str();
    }
    std::ifstream in(path);
    check(in.good(), "MalformedInput", "cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

json parse_json(const std::string& path) {
    try {
        return json::parse(read_source(path));
    } catch (const json::exception& e) {
        fail("MalformedInput", "invalid JSON in " + path + ": " + e.what());
    }
}

GaussMat load_gauss(const std::string& path) { return gauss_mat_from_json(parse_json(path)); }
IntMat load_int(const std::string& path) { return int_mat_from_json(parse_json(path)); }

void emit(const json& j) { std::cout << j.dump(2) << "\n"; }

struct CommonOpts {
    int float_digits = 0;
    int jobs = 1;
};

int run_or_report(const std::function<int()>& body) {
    try {
        return body();
    } catch (const error& e) {
        json out;
        out["kind"] = e.kind();
        out["error"] = e.what();
        emit(out);
        return e.kind() == "MalformedInput" ? 2 : 1;
    } catch (const std::exception& e) {
        json out;
        out["kind"] = "MalformedInput";
        out["error"] = e.what();
        emit(out);
        return 2;
    }
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact toolkit for non-simple principally polarized abelian varieties"};
    app.require_subcommand(1);

    CommonOpts common;
    app.add_option("--float-digits", common.float_digits,
                   "add decimal renderings next to exact complex entries")
        ->check(CLI::Range(0, 64));
    app.add_option("--jobs", common.jobs, "worker hint; reserved, currently single-threaded")
        ->check(CLI::PositiveNumber);

    std::string z_path, zm_path, zn_path, c_path, type_str;
    long g = 0, k = 0, height = 1, subgroup_index = -1;
    unsigned long long seed = 0;
    bool all_disc = false;

    auto* validate = app.add_subcommand("validate", "check Siegel membership and type");
    validate->add_option("--z", z_path, "complex matrix file, or - for stdin")->required();
    validate->add_option("--type", type_str, "divisor chain, e.g. 1,2,4")->required();

    auto* equations = app.add_subcommand("equations", "locus equations for (g, k, D)");
    equations->add_option("--g", g)->required();
    equations->add_option("--k", k)->required();
    equations->add_option("--type", type_str)->required();

    auto* construct = app.add_subcommand("construct", "build a member from Z_M, Z_N, D");
    construct->add_option("--zm", zm_path)->required();
    construct->add_option("--zn", zn_path)->required();
    construct->add_option("--type", type_str)->required();

    auto* certify = app.add_subcommand("certify", "verify a non-simplicity certificate");
    certify->add_option("--z", z_path)->required();
    certify->add_option("--c", c_path, "integer coordinate matrix file")->required();
    certify->add_option("--type", type_str)->required();

    auto* complement = app.add_subcommand("complement", "complementary period matrix");
    complement->add_option("--z", z_path)->required();
    complement->add_option("--type", type_str)->required();

    auto* restrict_cmd = app.add_subcommand("restrict", "restricted polarization type");
    restrict_cmd->add_option("--z", z_path)->required();
    restrict_cmd->add_option("--c", c_path)->required();

    auto* detect = app.add_subcommand("detect", "singular relations of a surface");
    detect->add_option("--z", z_path)->required();
    detect->add_option("--height", height)->required()->check(CLI::PositiveNumber);
    detect->add_flag("--all-discriminants", all_disc, "also return non-square discriminants");

    auto* quotient_cmd = app.add_subcommand("quotient", "principal quotient of a product");
    quotient_cmd->add_option("--zm", zm_path)->required();
    quotient_cmd->add_option("--zn", zn_path)->required();
    quotient_cmd->add_option("--type", type_str)->required();
    quotient_cmd->add_option("--subgroup-index", subgroup_index,
                             "use enumerate-allowed[i] instead of the standard subgroup");

    auto* enumerate = app.add_subcommand("enumerate-allowed", "all allowed isotropic subgroups");
    enumerate->add_option("--type", type_str)->required();

    auto* sample = app.add_subcommand("sample", "random certified member of the locus");
    sample->add_option("--g", g)->required();
    sample->add_option("--k", k)->required();
    sample->add_option("--type", type_str)->required();
    sample->add_option("--seed", seed)->required();
    sample->add_option("--height", height)->required()->check(CLI::PositiveNumber);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e); // prints the usage message
        return 2;    // malformed input
    }

    return run_or_report([&]() -> int {
        const int digits = common.float_digits;

        if (validate->parsed()) {
            PolarizationType D = PolarizationType::parse(type_str);
            SiegelMatrix Z(load_gauss(z_path));
            PolarizedTorus A(Z, D); // DimensionMismatch if the length is off
            json out;
            out["valid"] = true;
            out["g"] = A.dim();
            out["type"] = to_json(A.type());
            out["principal"] = A.is_principal();
            emit(out);
            return 0;
        }

        if (equations->parsed()) {
            emit(to_json(locus_equations(int(g), int(k), PolarizationType::parse(type_str))));
            return 0;
        }

        if (construct->parsed()) {
            PolarizationType D = PolarizationType::parse(type_str);
            ConstructResult r = construct_member(SiegelMatrix(load_gauss(zm_path)),
                                                 SiegelMatrix(load_gauss(zn_path)), D);
            PolarizedTorus A(r.Z_A, PolarizationType::ones(r.Z_A.dim()));
            json out;
            out["z_a"] = to_json(r.Z_A.mat(), digits);
            out["c_m"] = to_json(r.C_M);
            out["c_n"] = to_json(r.C_N);
            out["certificate"] = to_json(certify_nonsimple(A, r.C_M, D), digits);
            emit(out);
            return 0;
        }

        if (certify->parsed()) {
            PolarizationType D = PolarizationType::parse(type_str);
            SiegelMatrix Z(load_gauss(z_path));
            PolarizedTorus A(Z, PolarizationType::ones(Z.dim()));
            CertificateReport r = certify_nonsimple(A, load_int(c_path), D);
            emit(to_json(r, digits));
            return r.passed ? 0 : 1;
        }

        if (complement->parsed()) {
            PolarizationType D = PolarizationType::parse(type_str);
            SiegelMatrix zn = complementary_period(SiegelMatrix(load_gauss(z_path)), D);
            json out;
            out["z_n"] = to_json(zn.mat(), digits);
            emit(out);
            return 0;
        }

        if (restrict_cmd->parsed()) {
            SiegelMatrix Z(load_gauss(z_path));
            PolarizedTorus A(Z, PolarizationType::ones(Z.dim()));
            LatticeEmbedding e = embed(A, load_int(c_path));
            json out;
            out["type"] = to_json(restricted_type(e));
            emit(out);
            return 0;
        }

        if (detect->parsed()) {
            SiegelMatrix Z(load_gauss(z_path));
            emit(to_json(detect_singular_relations(Z, height, all_disc)));
            return 0;
        }

        if (quotient_cmd->parsed()) {
            PolarizationType D = PolarizationType::parse(type_str);
            SiegelMatrix zm(load_gauss(zm_path));
            SiegelMatrix zn(load_gauss(zn_path));
            QuotientResult r;
            if (subgroup_index < 0) {
                r = psi(zm, zn, D);
            } else {
                auto subgroups = enumerate_allowed(D);
                check(subgroup_index < long(subgroups.size()), "MalformedInput",
                      "subgroup index out of range, have " + std::to_string(subgroups.size()));
                int gdim = zm.dim() + zn.dim();
                PolarizedTorus M(zm, D), N(zn, complementary_type(D, gdim));
                r = quotient_ppav(product(M, N), subgroups[size_t(subgroup_index)]);
            }
            emit(to_json(r, digits));
            return 0;
        }

        if (enumerate->parsed()) {
            PolarizationType D = PolarizationType::parse(type_str);
            auto subgroups = enumerate_allowed(D);
            json list = json::array();
            for (const auto& s : subgroups) {
                json gens = json::array();
                for (const auto& gvec : s.canonical_generators()) {
                    json coords = json::array();
                    for (const auto& x : gvec) coords.push_back(x.get_si());
                    gens.push_back(std::move(coords));
                }
                list.push_back(std::move(gens));
            }
            json out;
            out["count"] = subgroups.size();
            out["subgroups"] = std::move(list);
            emit(out);
            return 0;
        }

        if (sample->parsed()) {
            PolarizationType D = PolarizationType::parse(type_str);
            check(D.length() == k, "MalformedInput", "--k must equal the type length");
            check(2 * k <= g, "MalformedInput", "need k <= g/2");
            SiegelSampler sampler(seed);
            SiegelMatrix zm = sampler.random_siegel(int(k), height);
            SiegelMatrix zn = sampler.random_siegel(int(g - k), height);
            ConstructResult r = construct_member(zm, zn, D);
            PolarizedTorus A(r.Z_A, PolarizationType::ones(int(g)));
            json out;
            out["z_m"] = to_json(zm.mat(), digits);
            out["z_n"] = to_json(zn.mat(), digits);
            out["z_a"] = to_json(r.Z_A.mat(), digits);
            out["c_m"] = to_json(r.C_M);
            out["c_n"] = to_json(r.C_N);
            out["certificate"] = to_json(certify_nonsimple(A, r.C_M, D), digits);
            emit(out);
            return 0;
        }

        fail("MalformedInput", "no subcommand");
    });
}
