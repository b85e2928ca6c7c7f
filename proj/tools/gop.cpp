// Command-line front end: exact analysis of differential systems and operators.
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "gop/gop.hpp"

namespace {

using namespace gop;

std::size_t max_terms() {
    if (const char* s = std::getenv("GOP_MAX_TERMS")) {
        long v = std::atol(s);
        if (v > 0) return static_cast<std::size_t>(v);
    }
    return 512;
}

Json load_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open " + path);
    Json j;
    in >> j;
    return j;
}

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        if (text.empty() || text.back() != '\n') std::cout << '\n';
    } else {
        std::ofstream out(out_path, std::ios::binary);
        if (!out) throw std::invalid_argument("cannot write " + out_path);
        out << text;
        if (text.empty() || text.back() != '\n') out << '\n';
    }
}

/// shared series-input options: JSON file, built-in family, or rational function
struct SeriesInput {
    std::string file, family, ratfunc;
    std::string a = "0", b = "0", c = "1";
    std::size_t terms = 32;

    void attach(CLI::App* cmd) {
        cmd->add_option("--series", file, "JSON file with a list of rational strings");
        cmd->add_option("--family", family, "built-in family: exp | log | hyper")
            ->check(CLI::IsMember({"exp", "log", "hyper"}));
        cmd->add_option("--ratfunc", ratfunc, "rational function of z, expanded at 0");
        cmd->add_option("--a", a, "hypergeometric parameter a");
        cmd->add_option("--b", b, "hypergeometric parameter b");
        cmd->add_option("--c", c, "hypergeometric parameter c");
        cmd->add_option("--terms", terms, "truncation length");
    }

    Series resolve() const {
        std::size_t K = std::min(terms, max_terms());
        if (!file.empty()) return series_from_json(load_json(file));
        if (family == "exp") return exp_series(K);
        if (family == "log") return neg_log1m_series(K);
        if (family == "hyper") {
            auto rat = [](const std::string& s) {
                Rat r(s);
                r.canonicalize();
                return r;
            };
            return hypergeometric_series(rat(a), rat(b), rat(c), K);
        }
        if (!ratfunc.empty()) return series_from_ratfunc(parse_ratfunc(ratfunc), K);
        throw std::invalid_argument("no series input given (--series/--family/--ratfunc)");
    }
};

int dispatch(int argc, char** argv) {
    CLI::App app{"exact analysis of G-operator data: denominator sequences, "
                 "singularities, transforms, approximants, series diagnostics"};
    app.require_subcommand(1);

    // galochkin
    auto* galochkin = app.add_subcommand("galochkin", "denominator sequence q_s of a system");
    std::string sys_path, format = "json", out_path;
    std::size_t S = 10;
    galochkin->add_option("--system", sys_path, "system JSON file")->required();
    galochkin->add_option("--S", S, "number of iterated matrices");
    galochkin->add_option("--format", format)->check(CLI::IsMember({"json", "csv"}));
    galochkin->add_option("--output", out_path, "output path (default stdout)");

    // fuchs
    auto* fuchs = app.add_subcommand("fuchs", "singularity classification of an operator");
    std::string fuchs_expr;
    fuchs->add_option("expr", fuchs_expr, "operator in z and D")->required();
    fuchs->add_option("--output", out_path);

    // flaplace
    auto* flap = app.add_subcommand("flaplace", "Fourier-Laplace transform z -> D, D -> -z");
    std::string flap_expr;
    flap->add_option("expr", flap_expr, "operator in z and D")->required();
    flap->add_option("--output", out_path);

    // pade
    auto* pade = app.add_subcommand("pade", "type-II simultaneous approximants");
    std::string pade_series, pade_system;
    std::size_t N = 1, M = 1, hmax = 0;
    pade->add_option("--series", pade_series, "JSON: array of series (arrays of rational strings)")
        ->required();
    pade->add_option("--N", N, "denominator degree bound");
    pade->add_option("--M", M, "contact excess");
    pade->add_option("--system", pade_system, "system JSON for the determinant witness");
    pade->add_option("--hmax", hmax, "highest witness matrix index");
    pade->add_option("--output", out_path);

    // profile
    auto* profile_cmd = app.add_subcommand("profile", "house/denominator growth of a series");
    SeriesInput profile_in;
    profile_in.attach(profile_cmd);
    std::string mode = "G";
    profile_cmd->add_option("--mode", mode)->check(CLI::IsMember({"E", "G"}));
    profile_cmd->add_option("--output", out_path);

    // guess
    auto* guess_cmd = app.add_subcommand("guess", "minimal annihilating operator of a series");
    SeriesInput guess_in;
    guess_in.attach(guess_cmd);
    std::size_t max_order = 2, verify = 2;
    long max_degree = 2;
    guess_cmd->add_option("--max-order", max_order);
    guess_cmd->add_option("--max-degree", max_degree);
    guess_cmd->add_option("--verify", verify, "held-out verification terms");
    guess_cmd->add_option("--output", out_path);

    // divide
    auto* divide_cmd = app.add_subcommand("divide", "divide a series by (z - xi)");
    SeriesInput divide_in;
    divide_in.attach(divide_cmd);
    std::string xi_str = "1";
    std::size_t K_out = 0;
    bool assert_zero = false;
    divide_cmd->add_option("--xi", xi_str, "root to divide out");
    divide_cmd->add_option("--K", K_out, "output truncation")->required();
    divide_cmd->add_flag("--assert-zero", assert_zero, "skip the truncated vanishing check");
    divide_cmd->add_option("--output", out_path);

    CLI11_PARSE(app, argc, argv);

    if (galochkin->parsed()) {
        Json j = load_json(sys_path);
        System sys{matrix_from_json(j)};
        GalochkinReport rep = galochkin_qs(iterate(sys, std::min(S, max_terms())));
        if (format == "csv") {
            emit(galochkin_to_csv(rep), out_path);
        } else {
            Json out = galochkin_to_json(rep);
            if (rep.S >= 8) out["growth"] = growth_to_json(classify_growth(rep));
            emit(out.dump(2), out_path);
        }
    } else if (fuchs->parsed()) {
        DiffOp L = diffop_from_weyl(parse_weyl(fuchs_expr));
        emit(fuchs_to_json(fuchs_summary(L)).dump(2), out_path);
    } else if (flap->parsed()) {
        emit(weyl_to_string(fourier_laplace(parse_weyl(flap_expr))), out_path);
    } else if (pade->parsed()) {
        Json j = load_json(pade_series);
        if (!j.is_array() || j.empty()) throw std::invalid_argument("pade: expected array of series");
        std::vector<Series> fs;
        if (j.front().is_array())
            for (const Json& s : j) fs.push_back(series_from_json(s));
        else
            fs.push_back(series_from_json(j));
        PadeSolution sol = solve_pade(fs, N, M);
        Json out = pade_to_json(sol);
        if (!pade_system.empty()) {
            System sys{matrix_from_json(load_json(pade_system))};
            out["witness"] = witness_to_json(build_witness(sys, sol.P, hmax));
        }
        emit(out.dump(2), out_path);
    } else if (profile_cmd->parsed()) {
        Series f = profile_in.resolve();
        ArithmeticProfile p = profile(f, mode == "E" ? SeriesMode::E : SeriesMode::G);
        emit(profile_to_csv(p), out_path);
    } else if (guess_cmd->parsed()) {
        Series f = guess_in.resolve();
        auto g = guess_min_operator(f, max_order, max_degree, verify);
        emit(g ? guess_to_json(*g).dump(2) : Json{{"operator", nullptr}}.dump(2), out_path);
    } else if (divide_cmd->parsed()) {
        Series f = divide_in.resolve();
        Rat xi(xi_str);
        xi.canonicalize();
        auto res = divide_out_zero(f, xi, std::min(K_out, max_terms()),
                                   assert_zero ? ZeroCheck::assert_zero : ZeroCheck::checked);
        Json out{{"quotient", series_to_json(res.quotient)},
                 {"residual", res.residual.get_str()},
                 {"mode", assert_zero ? "assert-zero" : "checked"}};
        emit(out.dump(2), out_path);
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return dispatch(argc, argv);
    } catch (const gop::ParseError& e) {
        std::cerr << "parse error: " << e.what() << '\n';
        return 2;
    } catch (const gop::Json::parse_error& e) {
        std::cerr << "parse error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
}
