// weylfcr: JSON front end for root systems, linear ideals, FCR decisions,
// dual pair decompositions and the verification suites.
//
// Exit codes: 0 success, 2 invalid input, 3 divergence between a claimed
// statement and the computation (or verify failures), 1 anything else.

#include "weylfcr/weylfcr.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <stdexcept>
#include <string>

using namespace weylfcr;

namespace {

struct ExitWith {
    int code;
    Json report;
};

void emit(const Json& j) { std::cout << j.dump(2) << '\n'; }

std::string read_input(const std::string& path) {
    if (path == "-") return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot read '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

LinearIdeal load_ideal(const std::string& path) { return ideal_from_json(parse_json_text(read_input(path))); }

RootSystemPtr build_system(const std::string& kind, int n) { return RootSystem::build(parse_kind(kind), n); }

void require_nonnegative(int v, const char* what) {
    if (v < 0) throw std::invalid_argument(std::string(what) + " must be nonnegative");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact root system, Weyl group and FCR computations"};
    app.require_subcommand(1);

    std::string kind = "A", word, ideal_path, suite = "all", csv_path;
    int n = 1, p = 0, q = 0, k = 1, bound = 3;
    std::optional<int> rank_opt, p_opt, k_opt;
    std::optional<std::string> type_opt;
    std::uint64_t seed = 0;
    bool show_matrix = false, csv = false, witnesses = false;

    auto* rootsys = app.add_subcommand("rootsys", "root system data");
    rootsys->require_subcommand(1);
    auto* rs_info = rootsys->add_subcommand("info", "roots, coroots, rho and fundamental weights");
    rs_info->add_option("--kind", kind, "GL, A, B, C or D")->required();
    rs_info->add_option("--n,--rank", n, "rank (n for GL(n))")->required();

    auto* weyl = app.add_subcommand("weyl", "Weyl group elements");
    weyl->require_subcommand(1);
    auto* w_inv = weyl->add_subcommand("inversions", "reduced word, length and inversion set of a word");
    w_inv->add_option("--kind", kind)->required();
    w_inv->add_option("--rank,--n", n)->required();
    w_inv->add_option("--word", word, "e.g. \"s1 s2\"; empty for the identity");
    w_inv->add_flag("--matrix", show_matrix, "include the matrix in epsilon coordinates");

    auto* ideal = app.add_subcommand("ideal", "linear ideals");
    ideal->require_subcommand(1);
    auto* i_dot = ideal->add_subcommand("dot", "dot action w.Omega");
    i_dot->add_option("--ideal", ideal_path, "ideal JSON file, or - for stdin")->required();
    i_dot->add_option("--word", word);
    auto* i_info = ideal->add_subcommand("info", "integral root data and dominance of an ideal");
    i_info->add_option("--ideal", ideal_path)->required();

    auto* fcr = app.add_subcommand("fcr", "FCR classification");
    fcr->require_subcommand(1);
    auto* f_decide = fcr->add_subcommand("decide", "classify U(g)/I_Omega");
    f_decide->add_option("--ideal", ideal_path)->required();
    auto* f_lambda = fcr->add_subcommand("lambda-set", "dominant weights mu with W.mu meeting V(Omega)");
    f_lambda->add_option("--ideal", ideal_path)->required();
    f_lambda->add_option("--bound", bound, "bound on the simple coroot pairings");

    auto* howe = app.add_subcommand("howe", "dual pair decompositions");
    howe->require_subcommand(1);
    auto* h_a = howe->add_subcommand("case-a", "(GL_k, gl_{p+q})");
    h_a->add_option("--p", p)->required();
    h_a->add_option("--q", q)->required();
    h_a->add_option("--k", k)->required();
    h_a->add_option("--bound", bound);
    h_a->add_flag("--csv", csv, "print the weight table as CSV instead of the report");
    h_a->add_flag("--witnesses", witnesses, "include the permutation witnesses");
    auto* h_b = howe->add_subcommand("case-b", "(O_k, sp_2n); give --p (k = 2p) or --k");
    h_b->add_option("--n", n)->required();
    auto* b_p = h_b->add_option("--p", p_opt);
    auto* b_k = h_b->add_option("--k", k_opt);
    b_p->excludes(b_k);
    h_b->add_option("--bound", bound);
    auto* h_c = howe->add_subcommand("case-c", "(Sp_2k, so_2n)");
    h_c->add_option("--n", n)->required();
    h_c->add_option("--k", k)->required();
    auto* h_kernel = howe->add_subcommand("kernel", "rank comparison and kernel component");
    std::string which = "A";
    h_kernel->add_option("--case", which)->required()->check(CLI::IsMember({"A", "B", "C"}));
    h_kernel->add_option("--n", n);
    h_kernel->add_option("--p", p);
    h_kernel->add_option("--q", q);
    h_kernel->add_option("--k", k)->required();
    h_kernel->add_option("--bound", bound);

    auto* verify = app.add_subcommand("verify", "run verification suites");
    verify->add_option("--suite", suite)->check(CLI::IsMember(suite_names()));
    verify->add_option("--rank", rank_opt);
    verify->add_option("--type", type_opt);
    verify->add_option("--seed", seed);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        emit(Json{{"error", e.what()}});
        return 2;
    }

    try {
        if (rs_info->parsed()) {
            emit(system_info_json(*build_system(kind, n)));
        } else if (w_inv->parsed()) {
            WeylGroup g(build_system(kind, n));
            auto w = g.compose_word(parse_word(word));
            Json j{{"system", system_json(g.rs())},
                   {"word", format_word(parse_word(word))},
                   {"reduced_word", g.word_string(w)},
                   {"length", g.length(w)},
                   {"inversions", roots_json(g.rs(), g.inversion_set(w))}};
            if (show_matrix) j["matrix"] = to_json(g.element(w).matrix());
            emit(j);
        } else if (i_dot->parsed()) {
            auto omega = load_ideal(ideal_path);
            WeylGroup g(omega.rs_ptr());
            auto w = g.compose_word(parse_word(word));
            LinearIdeal moved = dot_act(g, w, omega);
            if (!(moved.variety() == dot_act_variety(g, w, omega.variety())))
                throw ExitWith{3, Json{{"error", "generator and point computations of w.Omega disagree"},
                                       {"counterexample", Json{{"ideal", ideal_json(omega)}, {"w", g.word_string(w)}}}}};
            emit(Json{{"w", g.word_string(w)}, {"input", ideal_json(omega)}, {"result", ideal_json(moved)}});
        } else if (i_info->parsed()) {
            auto omega = load_ideal(ideal_path);
            const auto& rs = omega.rs();
            auto d = integral_root_data(omega);
            Json consts = Json::array();
            for (auto a : d.r_lambda)
                if (rs.is_positive(a)) consts.push_back(Json{{"root", to_json(rs.root(a))}, {"value", d.constants.at(a).str()}});
            emit(Json{{"ideal", ideal_json(omega)},
                      {"r_lambda_positive", consts},
                      {"b_lambda", roots_json(rs, d.b_lambda)},
                      {"strongly_dominant", is_strongly_dominant(omega)},
                      {"dominant", is_dominant(omega)},
                      {"lambda_class", lambda_class_name(lambda_plus_class(omega))}});
        } else if (f_decide->parsed()) {
            auto omega = load_ideal(ideal_path);
            WeylGroup g(omega.rs_ptr());
            emit(verdict_json(g, fcr_decide(g, omega)));
        } else if (f_lambda->parsed()) {
            require_nonnegative(bound, "bound");
            auto omega = load_ideal(ideal_path);
            WeylGroup g(omega.rs_ptr());
            auto b = static_cast<std::size_t>(bound);
            emit(lambda_set_json(omega, lambda_set(g, omega, b), b));
        } else if (h_a->parsed()) {
            require_nonnegative(bound, "bound");
            if (csv) {
                std::cout << case_A_csv(enumerate_case_A(p, q, k, bound));
                return 0;
            }
            auto rep = closure_case_A(p, q, k, bound);
            Json j = closure_json(rep);
            if (witnesses && k < p + q) {
                WeylGroup g(RootSystem::build(RootKind::GL, p + q));
                Json ws = Json::array();
                for (int i = 0; i <= p + q - k; ++i) ws.push_back(case_A_witness_json(g, witness_w_case_A(g, i, p + q, k)));
                j["witnesses"] = ws;
            }
            emit(j);
        } else if (h_b->parsed()) {
            require_nonnegative(bound, "bound");
            if (!p_opt && !k_opt) throw std::invalid_argument("case-b needs --p or --k");
            const int kk = p_opt ? 2 * *p_opt : *k_opt;
            if (kk < 1) throw std::invalid_argument("k must be positive");
            if (kk % 2 == 1) {
                if (kk >= 2 * n) {
                    emit(Json{{"case", "B"}, {"n", n}, {"k", kk}, {"full_space", true}});
                } else {
                    WeylGroup g(RootSystem::build(RootKind::C, n));
                    emit(odd_k_json(g, odd_k_case_B(g, n, kk, bound)));
                }
            } else {
                auto rep = closure_case_B(n, kk / 2, bound);
                Json j = closure_json(rep);
                annotate_case_B_literal(j, rep);
                if (kk / 2 < n) {
                    WeylGroup g(RootSystem::build(RootKind::C, n));
                    auto c = case_B_fcr(g, n, kk / 2);
                    if (!c.ok())
                        throw ExitWith{3, Json{{"error", "explicit FCR witness failed"}, {"counterexample", case_B_fcr_json(g, c)}}};
                    j["fcr"] = case_B_fcr_json(g, c);
                }
                emit(j);
            }
        } else if (h_c->parsed()) {
            emit(case_C_json(case_C_report(n, k)));
        } else if (h_kernel->parsed()) {
            require_nonnegative(bound, "bound");
            emit(kernel_json(kernel_report(which, n, k, p, q, bound)));
        } else if (verify->parsed()) {
            VerifyOptions o;
            o.seed = seed;
            o.rank = rank_opt;
            if (type_opt) o.kind = parse_kind(*type_opt);
            if (o.rank && *o.rank < 1) throw std::invalid_argument("rank must be positive");
            auto rep = run_suite(suite, o);
            emit(rep.to_json());
            return rep.failures() > 0 ? 3 : 0;
        }
    } catch (const ExitWith& e) {
        emit(e.report);
        return e.code;
    } catch (const DivergenceError& e) {
        emit(Json{{"error", e.what()}, {"counterexample", e.detail}});
        return 3;
    } catch (const std::invalid_argument& e) {
        emit(Json{{"error", e.what()}});
        return 2;
    } catch (const std::out_of_range& e) {
        emit(Json{{"error", e.what()}});
        return 1;
    } catch (const std::logic_error& e) {
        emit(Json{{"error", e.what()}, {"counterexample", nullptr}});
        return 3;
    } catch (const CapExceeded& e) {
        emit(Json{{"error", e.what()}});
        return 2;
    } catch (const std::exception& e) {
        emit(Json{{"error", e.what()}});
        return 1;
    }
    return 0;
}
