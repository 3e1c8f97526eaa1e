// vfilt: isotypic V-filtration, weight and Hodge data of equivariant
// D-modules along semi-invariant functions, from b-function roots.
//
// Exit codes: 0 success, 1 usage or input error, 2 internal mathematical
// inconsistency (dual-route mismatch or failed self check).

#include "vfilt/filtration.hpp"
#include "vfilt/json_io.hpp"
#include "vfilt/oracle.hpp"
#include "vfilt/selfcheck.hpp"
#include "vfilt/spaces.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <optional>
#include <sstream>
#include <string>

namespace {

using namespace vfilt;
using nlohmann::json;

struct SpaceOptions {
    std::string space;
    std::string space_file;
    long n = 0;

    SpaceFamily resolve() const {
        if (!space_file.empty()) {
            if (!space.empty()) throw std::invalid_argument("pass --space or --space-file, not both");
            return SpaceFamily::from_affine(load_affine_family(space_file));
        }
        if (space.empty()) throw std::invalid_argument("a space is required: --space or --space-file");
        return SpaceFamily::builtin(space, n);
    }
};

void add_space_options(CLI::App* cmd, SpaceOptions& opts) {
    cmd->add_option("--space", opts.space, "built-in space family: det, symdet, pfaffian, e6");
    cmd->add_option("--n", opts.n, "matrix size for det/symdet/pfaffian");
    cmd->add_option("--space-file", opts.space_file, "JSON file with a user-defined family");
}

std::vector<long> parse_weight(const std::string& text) {
    std::vector<long> w;
    std::stringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) {
        try {
            size_t used = 0;
            w.push_back(std::stol(item, &used));
            if (used != item.size()) throw std::invalid_argument("");
        } catch (const std::logic_error&) {
            throw std::invalid_argument("bad weight entry '" + item + "' in '" + text + "'");
        }
    }
    if (w.empty()) throw std::invalid_argument("empty weight");
    return w;
}

std::string weight_string(const std::vector<long>& w) {
    std::ostringstream out;
    out << "(";
    for (size_t i = 0; i < w.size(); ++i) out << (i ? "," : "") << w[i];
    out << ")";
    return out.str();
}

json weight_json(const std::vector<long>& w) { return json(w); }

void emit(bool as_json, const json& doc, const std::string& text) {
    if (as_json)
        std::cout << doc.dump(2) << "\n";
    else
        std::cout << text << "\n";
}

int run(int argc, char** argv) {
    CLI::App app{"isotypic V-filtration, weight and Hodge structure calculator"};
    app.require_subcommand(1);
    app.set_version_flag("--version", "vfilt 0.1.0");
    bool as_json = false;

    SpaceOptions space;
    std::string weight_text, alpha_text = "0", mode_text = "weight", route_text = "degree";
    std::string pi_file;
    long k = 0, level = 0, degree_bound = 4;
    int threads = 1;
    std::uint64_t seed = 20250808;
    long cases = 500;

    auto* bfun_cmd = app.add_subcommand("bfun", "b-function of a weight");
    auto* pfun_cmd = app.add_subcommand("pfun", "p-function p_{lambda,alpha}");
    auto* nu_cmd = app.add_subcommand("nu", "multiplicity of s = -alpha in the transported b-function");
    auto* wl_cmd = app.add_subcommand("weight-level", "minimal l with m f^-alpha in W_{q+l}");
    auto* hl_cmd = app.add_subcommand("hodge-level", "minimal k with m f^-alpha in F_k");
    auto* vi_cmd = app.add_subcommand("v-ideal", "generator of (V^alpha iota_+ S)_lambda");
    auto* vf_cmd = app.add_subcommand("v-cap-f", "basis of (V^alpha cap F_{k+1})_lambda, degree <= k");
    auto* grv_cmd = app.add_subcommand("grv", "Jordan data of gr_V at a weight level");
    auto* ideal_cmd = app.add_subcommand("ideal", "Hodge / higher multiplier ideal weight set");
    auto* char_cmd = app.add_subcommand("character", "graded character of the weight filtration");
    auto* fdf_cmd = app.add_subcommand("fdf-matrices", "matrices of f and df on W_l gr_V^alpha");
    auto* fs_cmd = app.add_subcommand("fs-test", "Hodge membership test for a general pure source");
    auto* check_cmd = app.add_subcommand("check", "run the full invariant suite");

    for (auto* cmd : {bfun_cmd, pfun_cmd, nu_cmd, wl_cmd, hl_cmd, vi_cmd, vf_cmd, grv_cmd,
                      ideal_cmd, char_cmd, fdf_cmd, fs_cmd}) {
        add_space_options(cmd, space);
        cmd->add_flag("--json", as_json, "emit JSON instead of text");
    }
    for (auto* cmd : {bfun_cmd, pfun_cmd, nu_cmd, wl_cmd, hl_cmd, vi_cmd, vf_cmd, fdf_cmd, fs_cmd})
        cmd->add_option("--weight", weight_text, "weight, comma separated integers")->required();
    grv_cmd->add_option("--weight", weight_text, "single weight (else use --degree-bound)");
    for (auto* cmd : {pfun_cmd, nu_cmd, wl_cmd, hl_cmd, vi_cmd, vf_cmd, grv_cmd, ideal_cmd,
                      char_cmd, fdf_cmd, fs_cmd})
        cmd->add_option("--alpha", alpha_text, "rational alpha, e.g. 3/4")->required();
    vf_cmd->add_option("--k", k, "Hodge index k")->required();
    ideal_cmd->add_option("--k", k, "Hodge index k")->required();
    fs_cmd->add_option("--k", k, "Hodge index k")->required();
    grv_cmd->add_option("--level", level, "weight filtration level l")->required();
    char_cmd->add_option("--level", level, "weight filtration level l")->required();
    fdf_cmd->add_option("--level", level, "weight filtration level l")->required();
    grv_cmd->add_option("--degree-bound", degree_bound, "weight box radius");
    ideal_cmd->add_option("--degree-bound", degree_bound, "weight box radius")->required();
    char_cmd->add_option("--degree-bound", degree_bound, "weight box radius")->required();
    ideal_cmd->add_option("--route", route_text, "degree | inequality | both");
    ideal_cmd->add_option("--threads", threads, "fan enumeration out over worker threads");
    char_cmd->add_option("--mode", mode_text, "weight | grW | grWgrV")->required();
    fs_cmd->add_option("--pi-file", pi_file, "JSON file with the Pi_k sets")->required();
    check_cmd->add_option("--seed", seed, "random seed");
    check_cmd->add_option("--cases", cases, "cases per randomized check");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 1;  // every command-line problem is a usage error
    }

    if (check_cmd->parsed()) {
        auto results = run_selfcheck(seed, cases, &std::cout);
        if (!all_passed(results)) {
            std::cout << "self check FAILED\n";
            return 2;
        }
        std::cout << "all checks passed\n";
        return 0;
    }

    SpaceFamily fam = space.resolve();
    const Rational alpha = rational_from_string(alpha_text);

    auto weight = [&] {
        std::vector<long> w = parse_weight(weight_text);
        fam.require_module_weight(w);
        return w;
    };

    if (bfun_cmd->parsed()) {
        std::vector<long> w = weight();
        BFunction b = fam.b_of_weight(w);
        json lams = json::array();
        for (const auto& lam : b.lambdas()) lams.push_back(rational_to_string(lam));
        json doc{{"space", fam.name()},
                 {"weight", weight_json(w)},
                 {"lambda", std::move(lams)},
                 {"b", to_json(b.poly())},
                 {"rendered", b.poly().to_string()}};
        emit(as_json, doc, "b(s) = " + b.poly().to_string());
    } else if (pfun_cmd->parsed()) {
        RootPoly p = p_function(fam.b_of_weight(weight()), alpha).poly;
        json doc{{"alpha", to_json(alpha)}, {"p", to_json(p)}, {"degree", p.degree()},
                 {"rendered", p.to_string()}};
        emit(as_json, doc, "p_{lambda," + rational_to_string(alpha) + "}(s) = " + p.to_string());
    } else if (nu_cmd->parsed()) {
        long value = nu(fam.b_of_weight(weight()), alpha);
        emit(as_json, json{{"nu", value}}, "nu = " + std::to_string(value));
    } else if (wl_cmd->parsed()) {
        long value = weight_level(fam.b_of_weight(weight()), alpha);
        emit(as_json, json{{"weight_level", value}},
             "weight level = " + std::to_string(value) + "  (m f^-alpha lies in W_{q+" +
                 std::to_string(value) + "})");
    } else if (hl_cmd->parsed()) {
        long value = hodge_level(fam.b_of_weight(weight()), alpha);
        emit(as_json, json{{"hodge_level", value}}, "Hodge level = " + std::to_string(value));
    } else if (vi_cmd->parsed()) {
        RootPoly g = v_ideal_structure(fam.b_of_weight(weight()), alpha);
        emit(as_json, json{{"generator", to_json(g)}, {"rendered", g.to_string()}},
             "(V^alpha iota_+ S)_lambda = (" + g.to_string() + ")");
    } else if (vf_cmd->parsed()) {
        auto basis = v_cap_f_basis(fam.b_of_weight(weight()), alpha, k);
        json list = json::array();
        std::ostringstream text;
        text << basis.size() << " basis element(s)";
        for (const auto& p : basis) {
            list.push_back(to_json(p));
            text << "\n  " << p.to_string();
        }
        emit(as_json, json{{"k", k}, {"basis", list}}, text.str());
    } else if (grv_cmd->parsed()) {
        json entries = json::array();
        std::ostringstream text;
        auto push = [&](const std::vector<long>& w) {
            long nu_w = nu(fam.b_of_weight(w), alpha);
            long exponent = grv_exponent(nu_w, level);
            entries.push_back({{"weight", weight_json(w)}, {"nu", nu_w}, {"exponent", exponent}});
            text << weight_string(w) << "  nu = " << nu_w << "  exponent = " << exponent << "\n";
        };
        if (!weight_text.empty())
            push(weight());
        else
            for (const auto& w : fam.module_weights(degree_bound)) push(w);
        emit(as_json, json{{"alpha", to_json(alpha)}, {"level", level}, {"entries", entries}},
             text.str());
    } else if (ideal_cmd->parsed()) {
        IdealRoute route;
        if (route_text == "degree") route = IdealRoute::degree;
        else if (route_text == "inequality") route = IdealRoute::inequality;
        else if (route_text == "both") route = IdealRoute::both;
        else throw std::invalid_argument("unknown route '" + route_text + "'");
        WeightSet set = ideal_weight_set(fam, k, alpha, degree_bound, route, threads);
        std::ostringstream text;
        text << "constraints:";
        for (const auto& c : set.constraints) text << "\n  " << c;
        text << "\nprimary decomposition:";
        if (set.primary.empty()) text << " (no closed form for this space/alpha)";
        for (const auto& comp : set.primary)
            text << "\n  t = " << comp.t << ": exponent " << comp.exponent;
        text << "\n" << set.weights.size() << " member weight(s) in the box:";
        for (const auto& w : set.weights) text << "\n  " << weight_string(w);
        emit(as_json, to_json(set), text.str());
    } else if (char_cmd->parsed()) {
        CharacterMode mode;
        if (mode_text == "weight") mode = CharacterMode::weight;
        else if (mode_text == "grW") mode = CharacterMode::grW;
        else if (mode_text == "grWgrV") mode = CharacterMode::grWgrV;
        else throw std::invalid_argument("unknown mode '" + mode_text + "'");
        auto weights = graded_character(fam, alpha, level, degree_bound, mode);
        json list = json::array();
        std::ostringstream text;
        text << weights.size() << " weight(s), each to be read as lambda - alpha*sigma:";
        for (const auto& w : weights) {
            list.push_back(weight_json(w));
            text << "\n  " << weight_string(w);
        }
        emit(as_json,
             json{{"alpha", to_json(alpha)},
                  {"level", level},
                  {"mode", mode_text},
                  {"sigma", json(fam.sigma())},
                  {"twist", "-alpha*sigma"},
                  {"weights", list}},
             text.str());
    } else if (fdf_cmd->parsed()) {
        FdfMatrices m = fdf_matrices(fam.b_of_weight(weight()), alpha, level);
        json doc{{"rho", m.rho},
                 {"nu_level", m.nu_level},
                 {"mu_level", m.mu_level},
                 {"f", to_json(m.f)},
                 {"df", to_json(m.df)}};
        std::ostringstream text;
        text << "rho = " << m.rho << ", target exponent = " << m.nu_level << "\nf = "
             << to_json(m.f).dump() << "\ndf = " << to_json(m.df).dump();
        emit(as_json, doc, text.str());
    } else if (fs_cmd->parsed()) {
        BFunction b = fam.b_of_weight(weight());
        PiSets pi = load_pi_sets(pi_file);
        if (pi.r_lambda != r_lambda(b))
            throw std::invalid_argument("Pi-sets file has r_lambda = " + std::to_string(pi.r_lambda) +
                                        " but the weight gives " + std::to_string(r_lambda(b)));
        pi.validate(fam.degree());
        bool member = fs_hodge_test(b, alpha, pi, k);
        emit(as_json, json{{"k", k}, {"member", member}},
             member ? "nonzero: (F_k)_{lambda-alpha*sigma} != 0" : "zero");
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const vfilt::inconsistency_error& e) {
        std::cerr << "mathematical inconsistency: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 2;
    }
}
