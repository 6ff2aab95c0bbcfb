#include "cli_app.hpp"

#include <CLI11.hpp>
#include <cstdio>
#include <fstream>
#include <json.hpp>
#include <optional>
#include <sstream>
#include <stdexcept>

#include "rotinv/invariant_states.hpp"
#include "rotinv/oracle.hpp"
#include "rotinv/separability.hpp"
#include "rotinv/version.hpp"
#include "rotinv/wigner.hpp"

namespace rotinv::cli {

namespace {

using nlohmann::json;

HalfInt parse_half_int(const std::string& s) {
    const auto fail = [&]() -> HalfInt {
        throw std::invalid_argument("'" + s + "' is not a half-integer (expected 2, -1, 3/2, -5/2, ...)");
    };
    try {
        const auto slash = s.find('/');
        std::size_t pos = 0;
        if (slash == std::string::npos) {
            const int whole = std::stoi(s, &pos);
            if (pos != s.size()) return fail();
            return HalfInt(whole);
        }
        const int num = std::stoi(s, &pos);
        if (pos != slash) return fail();
        const std::string den_str = s.substr(slash + 1);
        const int den = std::stoi(den_str, &pos);
        if (pos != den_str.size()) return fail();
        if (den == 1) return HalfInt(num);
        if (den == 2) return HalfInt::from_twice(num);
        return fail();
    } catch (const std::invalid_argument&) {
        return fail();
    } catch (const std::out_of_range&) {
        return fail();
    }
}

std::vector<double> parse_double_list(const std::string& s, std::size_t expected) {
    std::vector<double> values;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        std::size_t pos = 0;
        values.push_back(std::stod(item, &pos));
        if (pos != item.size())
            throw std::invalid_argument("'" + item + "' is not a number");
    }
    if (values.size() != expected)
        throw std::invalid_argument("expected " + std::to_string(expected) +
                                    " comma-separated numbers, got " + std::to_string(values.size()));
    return values;
}

std::string d17(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

json surd_json(const SqrtRational& v) {
    return json{{"exact", v.str()},
                {"sign", v.sign()},
                {"radicand", {{"num", v.radicand().get_num().get_str()},
                              {"den", v.radicand().get_den().get_str()}}},
                {"value", v.to_double()}};
}

json point_json(const Point2& p) { return json::array({p.beta1, p.beta2}); }

json matrix_json(const Eigen::MatrixXd& m) {
    json rows = json::array();
    for (Eigen::Index r = 0; r < m.rows(); ++r) {
        json row = json::array();
        for (Eigen::Index c = 0; c < m.cols(); ++c) row.push_back(m(r, c));
        rows.push_back(row);
    }
    return rows;
}

/// One invocation's structured output plus its CSV rendering.
struct Output {
    json record;
    std::string csv_header;
    std::vector<std::string> csv_rows;

    Output(const std::string& command, json inputs) {
        record = json{{"schema", "rotinv-output/1"},
                      {"tool", {{"name", tool_name}, {"version", tool_version}}},
                      {"command", command},
                      {"inputs", std::move(inputs)}};
    }
};

void emit(const Output& output, bool as_csv, const std::string& out_path,
          std::ostream& out, std::ostream& err) {
    std::string text;
    if (as_csv) {
        std::ostringstream os;
        os << "# schema=" << output.record["schema"].get<std::string>() << "\n"
           << "# tool=" << tool_name << "/" << tool_version << "\n"
           << "# command=" << output.record["command"].get<std::string>() << "\n"
           << "# inputs=" << output.record["inputs"].dump() << "\n";
        if (output.record.contains("seed"))
            os << "# seed=" << output.record["seed"].dump() << "\n";
        os << output.csv_header << "\n";
        for (const auto& row : output.csv_rows) os << row << "\n";
        text = os.str();
    } else {
        text = output.record.dump(2) + "\n";
    }
    out << text;
    if (!out_path.empty()) {
        std::ofstream file(out_path);
        if (!file) {
            err << "error: cannot open " << out_path << " for writing\n";
            return;
        }
        file << text;
    }
}

// --- wigner ---------------------------------------------------------------

int cmd_wigner(const std::string& kind, const std::vector<std::string>& args, bool strict,
               Output& output) {
    std::vector<HalfInt> h;
    h.reserve(6);
    for (const auto& a : args) h.push_back(parse_half_int(a));

    SqrtRational value;
    if (kind == "3j")
        value = wigner_3j(h[0], h[1], h[2], h[3], h[4], h[5]);
    else if (kind == "6j")
        value = wigner_6j(h[0], h[1], h[2], h[3], h[4], h[5]);
    else  // cg: j1 m1 j2 m2 J M
        value = clebsch_gordan(h[0], h[1], h[2], h[3], h[4], h[5]);

    output.record["results"] = surd_json(value);
    output.csv_header = "kind,args,exact,value";
    std::string joined;
    for (const auto& a : args) joined += (joined.empty() ? "" : " ") + a;
    output.csv_rows.push_back(kind + "," + joined + "," + value.str() + "," + d17(value.to_double()));

    return strict && value.is_zero() ? exit_strict_zero : exit_ok;
}

// --- lmatrix --------------------------------------------------------------

int cmd_lmatrix(const std::string& j1s, const std::string& j2s, const std::string& method,
                Output& output) {
    const SpinPair pair(parse_half_int(j1s), parse_half_int(j2s));
    const LMatrix by_trace = l_matrix(pair, LMethod::trace);
    const LMatrix by_six_j = l_matrix(pair, LMethod::six_j);
    const LMatrix by_rows = l_matrix(pair, LMethod::closed_rows);

    const double dev_trace = (by_trace.values - by_six_j.values).cwiseAbs().maxCoeff();
    double dev_rows = 0.0;
    for (int k = 0; k < pair.n1(); ++k)
        if (by_rows.row_valid[k])
            dev_rows = std::max(dev_rows,
                                (by_rows.values.row(k) - by_six_j.values.row(k)).cwiseAbs().maxCoeff());
    const Eigen::MatrixXd gram = by_six_j.values * by_six_j.values.transpose();
    const double ortho =
        (gram - Eigen::MatrixXd::Identity(pair.n1(), pair.n1())).cwiseAbs().maxCoeff();

    const Eigen::MatrixXd& chosen = method == "trace"         ? by_trace.values
                                    : method == "closed_rows" ? by_rows.values
                                                              : by_six_j.values;
    json j_list = json::array();
    for (int s = 0; s < pair.n1(); ++s) j_list.push_back(pair.j_at(s).str());

    const double tol = 1e-10;
    output.record["tolerances"] = {{"method_agreement", tol}};
    output.record["results"] = {
        {"j_values", j_list},
        {"matrix", matrix_json(chosen)},
        {"max_deviation_trace_vs_six_j", dev_trace},
        {"max_deviation_closed_rows_vs_six_j", dev_rows},
        {"orthogonality_residual", ortho},
        {"methods_agree", dev_trace <= tol && dev_rows <= tol},
    };

    output.csv_header = "K,J,L_trace,L_six_j,L_closed_rows";
    for (int k = 0; k < pair.n1(); ++k)
        for (int s = 0; s < pair.n1(); ++s)
            output.csv_rows.push_back(
                std::to_string(k) + "," + pair.j_at(s).str() + "," + d17(by_trace.values(k, s)) +
                "," + d17(by_six_j.values(k, s)) + "," +
                (by_rows.row_valid[k] ? d17(by_rows.values(k, s)) : ""));

    return dev_trace <= tol && dev_rows <= tol ? exit_ok : 1;
}

// --- geometry ---------------------------------------------------------------

int cmd_geometry(int n, std::size_t samples, std::optional<std::uint64_t> seed,
                 int curve_points, Output& output) {
    const Region2 triangle = state_triangle(n);
    const Region2 ppt = ppt_polygon(n);
    const Region2 separable = separable_region(n, {}, n % 2 == 0 ? curve_points : 101);

    json vertices = {{"A", point_json(vertex_a(n))},     {"B", point_json(vertex_b(n))},
                     {"C", point_json(vertex_c(n))},     {"A_prime", point_json(vertex_a_prime(n))},
                     {"D", point_json(vertex_d(n))},     {"E", point_json(vertex_e(n))}};
    if (n % 2 == 0) vertices["F"] = point_json(vertex_f(n));

    const auto region_json = [](const Region2& r) {
        json out;
        out["vertices"] = json::array();
        for (const auto& v : r.vertices) out["vertices"].push_back(point_json(v));
        if (!r.curve.empty()) {
            out["curve"] = json::array();
            for (const auto& cp : r.curve)
                out["curve"].push_back({{"mu", cp.mu}, {"point", point_json(cp.p)}});
        }
        return out;
    };

    json limits = {{"b_to_a_prime", distance(vertex_b(n), vertex_a_prime(n))},
                   {"c_to_d", distance(vertex_c(n), vertex_d(n))}};
    if (n % 2 == 0) limits["f_to_e"] = distance(vertex_f(n), vertex_e(n));

    output.record["results"] = {{"n", n},
                                {"vertices", vertices},
                                {"triangle", region_json(triangle)},
                                {"ppt_polygon", region_json(ppt)},
                                {"separable_region", region_json(separable)},
                                {"separable_equals_ppt", n % 2 == 1},
                                {"large_n_limits", limits}};

    output.csv_header = "kind,label,mu,beta1,beta2";
    const auto add_row = [&](const std::string& kind, const std::string& label, const std::string& mu,
                             const Point2& p) {
        output.csv_rows.push_back(kind + "," + label + "," + mu + "," + d17(p.beta1) + "," +
                                  d17(p.beta2));
    };
    for (const auto& [label, pt] : vertices.items())
        add_row("vertex", label, "", {pt[0].get<double>(), pt[1].get<double>()});
    for (std::size_t i = 0; i < triangle.vertices.size(); ++i)
        add_row("triangle", std::to_string(i), "", triangle.vertices[i]);
    for (std::size_t i = 0; i < ppt.vertices.size(); ++i)
        add_row("ppt", std::to_string(i), "", ppt.vertices[i]);
    for (std::size_t i = 0; i < separable.vertices.size(); ++i)
        add_row("separable", std::to_string(i), "", separable.vertices[i]);
    for (const auto& cp : separable.curve) add_row("curve", "", d17(cp.mu), cp.p);

    if (samples > 0) {
        output.record["seed"] = *seed;
        const SampleCloud cloud = wbeta_cloud(pair_3xn(n), samples, *seed);
        json pts = json::array();
        for (const Point2& p : cloud.points2()) {
            pts.push_back(point_json(p));
            add_row("cloud", "", "", p);
        }
        output.record["results"]["cloud"] = std::move(pts);
    }
    return exit_ok;
}

// --- epsilon ----------------------------------------------------------------

int cmd_epsilon(int n, int grid, Output& output) {
    if (grid < 3) throw std::invalid_argument("--grid must be at least 3");
    std::vector<double> lambdas(grid), eps(grid);
    for (int i = 0; i < grid; ++i) {
        lambdas[i] = static_cast<double>(i) / (grid - 1);
        eps[i] = epsilon0(n, lambdas[i]);
    }

    bool monotone = true, convex = true;
    double min_second_difference = 0.0;
    for (int i = 0; i + 1 < grid; ++i)
        if (eps[i + 1] < eps[i] - 1e-12) monotone = false;
    for (int i = 1; i + 1 < grid; ++i) {
        const double second = eps[i + 1] - 2.0 * eps[i] + eps[i - 1];
        min_second_difference = std::min(min_second_difference, second);
        if (second < -1e-9) convex = false;
    }

    bool kramers = true;
    if (n % 2 == 0) {
        for (int i = 0; i < grid && kramers; ++i) {
            const Eigen::VectorXd values = h_lambda(n, lambdas[i]).eigenvalues();
            for (int k = 0; k + 1 < values.size(); k += 2)
                if (std::abs(values[k + 1] - values[k]) > 1e-9) kramers = false;
        }
    }

    json table = json::array();
    output.csv_header = "lambda,epsilon0";
    for (int i = 0; i < grid; ++i) {
        table.push_back({lambdas[i], eps[i]});
        output.csv_rows.push_back(d17(lambdas[i]) + "," + d17(eps[i]));
    }

    output.record["results"] = {{"n", n},
                                {"table", std::move(table)},
                                {"epsilon0_at_1", eps[grid - 1]},
                                {"monotone_nondecreasing", monotone},
                                {"convex", convex},
                                {"min_second_difference", min_second_difference},
                                {"kramers_even_multiplicity", n % 2 == 0 ? json(kramers) : json()}};
    return exit_ok;
}

// --- classify ---------------------------------------------------------------

int cmd_classify(int n, const std::string& p_str, const std::string& beta_str, Output& output) {
    std::array<double, 3> p{};
    BetaVector beta = beta_vector_3xn(n, 0.0, 0.0);
    if (!p_str.empty()) {
        const auto v = parse_double_list(p_str, 3);
        p = {v[0], v[1], v[2]};
        beta = beta_from_probabilities(p, n);
    } else {
        const auto v = parse_double_list(beta_str, 2);
        beta = beta_vector_3xn(n, v[0], v[1]);
        p = probabilities_from_beta(beta);
    }

    const Verdict verdict = classify(beta);

    json ineq;
    try {
        ineq = {{"witness", witness_value(p, n)},
                {"ppt_1", ppt_inequalities(p, n).first},
                {"ppt_2", ppt_inequalities(p, n).second}};
    } catch (const std::invalid_argument&) {
        ineq = {{"witness", nullptr}, {"ppt_1", nullptr}, {"ppt_2", nullptr}};
    }

    output.record["results"] = {{"n", n},
                                {"p", {p[0], p[1], p[2]}},
                                {"beta", {beta[0], beta[1], beta[2]}},
                                {"inequalities", ineq},
                                {"verdict", to_string(verdict.cls)},
                                {"certificate", verdict.certificate}};

    output.csv_header = "n,p1,p2,p3,beta1,beta2,witness,ppt_1,ppt_2,verdict";
    const auto num_or_empty = [&](const char* key) {
        return ineq[key].is_null() ? std::string() : d17(ineq[key].get<double>());
    };
    output.csv_rows.push_back(std::to_string(n) + "," + d17(p[0]) + "," + d17(p[1]) + "," +
                              d17(p[2]) + "," + d17(beta[1]) + "," + d17(beta[2]) + "," +
                              num_or_empty("witness") + "," + num_or_empty("ppt_1") + "," +
                              num_or_empty("ppt_2") + "," + to_string(verdict.cls));

    switch (verdict.cls) {
        case StateClass::Separable: return exit_ok;
        case StateClass::NptEntangled: return exit_npt;
        case StateClass::PptEntangled: return exit_ppt;
        case StateClass::Unknown: return exit_unknown;
        case StateClass::NotAState: return exit_usage;
    }
    return exit_unknown;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Invariant two-spin states: exact coupling coefficients, state-space "
                 "geometry and separability classification"};
    app.require_subcommand(1);

    std::string format = "json";
    std::string out_path;
    app.add_option("--format", format, "Output format")
        ->check(CLI::IsMember({"json", "csv"}))
        ->capture_default_str();
    app.add_option("--out", out_path, "Also write the output to this file");

    // wigner
    auto* wigner = app.add_subcommand("wigner", "Exact 3-j / 6-j / Clebsch-Gordan coefficients");
    std::string kind;
    std::vector<std::string> wigner_args;
    bool strict = false;
    wigner->add_option("kind", kind, "Symbol kind")->required()->check(CLI::IsMember({"3j", "6j", "cg"}));
    wigner->add_option("values", wigner_args,
                       "Six half-integers: 3j/6j in symbol order, cg as j1 m1 j2 m2 J M")
        ->required()
        ->expected(6);
    wigner->add_flag("--strict", strict, "Exit 3 when the exact value is zero");

    // lmatrix
    auto* lmatrix = app.add_subcommand("lmatrix", "Orthogonal basis change beta = L alpha");
    std::string j1s, j2s, method = "six_j";
    lmatrix->add_option("j1", j1s, "First spin")->required();
    lmatrix->add_option("j2", j2s, "Second spin")->required();
    lmatrix->add_option("--method", method, "Which construction to print")
        ->check(CLI::IsMember({"trace", "six_j", "closed_rows"}))
        ->capture_default_str();

    // geometry
    auto* geometry = app.add_subcommand("geometry", "Vertices and regions of the 3xN state space");
    int geom_n = 0;
    std::size_t samples = 0;
    std::uint64_t seed_value = 0;
    int curve_points = 101;
    geometry->add_option("N", geom_n, "Dimension of the second spin (N = 2 j2 + 1)")->required();
    geometry->add_option("--samples", samples, "Also emit this many sampled product-state points");
    auto* seed_opt = geometry->add_option("--seed", seed_value, "RNG seed for --samples");
    geometry->add_option("--curve-points", curve_points, "Samples along the ellipse arc (even N)")
        ->capture_default_str();

    // epsilon
    auto* epsilon = app.add_subcommand("epsilon", "Largest eigenvalue of H(lambda) on a grid");
    int eps_n = 0;
    int grid = 101;
    epsilon->add_option("N", eps_n, "Dimension of the second spin")->required();
    epsilon->add_option("--grid", grid, "Number of lambda grid points")->capture_default_str();

    // classify
    auto* classify_cmd = app.add_subcommand("classify", "Separability verdict for an invariant state");
    int cls_n = 0;
    std::string p_str, beta_str;
    classify_cmd->add_option("--N", cls_n, "Dimension of the second spin")->required();
    auto* p_opt = classify_cmd->add_option("--p", p_str, "Probabilities p_{j2-1},p_{j2},p_{j2+1}");
    auto* beta_opt = classify_cmd->add_option("--beta", beta_str, "Coordinates beta1,beta2");
    p_opt->excludes(beta_opt);

    std::vector<const char*> argv;
    argv.reserve(args.size() + 1);
    argv.push_back(tool_name);
    for (const auto& a : args) argv.push_back(a.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return exit_ok;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return exit_usage;
    }

    try {
        if (*wigner) {
            Output output("wigner", {{"kind", kind}, {"values", wigner_args}, {"strict", strict}});
            const int code = cmd_wigner(kind, wigner_args, strict, output);
            emit(output, format == "csv", out_path, out, err);
            return code;
        }
        if (*lmatrix) {
            Output output("lmatrix", {{"j1", j1s}, {"j2", j2s}, {"method", method}});
            const int code = cmd_lmatrix(j1s, j2s, method, output);
            emit(output, format == "csv", out_path, out, err);
            return code;
        }
        if (*geometry) {
            if (samples > 0 && !*seed_opt) {
                err << "error: --samples requires an explicit --seed (no implicit random seed)\n";
                return exit_usage;
            }
            Output output("geometry", {{"n", geom_n},
                                       {"samples", samples},
                                       {"curve_points", curve_points}});
            const int code = cmd_geometry(geom_n, samples,
                                          *seed_opt ? std::optional<std::uint64_t>(seed_value)
                                                    : std::nullopt,
                                          curve_points, output);
            emit(output, format == "csv", out_path, out, err);
            return code;
        }
        if (*epsilon) {
            Output output("epsilon", {{"n", eps_n}, {"grid", grid}});
            const int code = cmd_epsilon(eps_n, grid, output);
            emit(output, format == "csv", out_path, out, err);
            return code;
        }
        if (*classify_cmd) {
            if (p_str.empty() == beta_str.empty()) {
                err << "error: classify needs exactly one of --p or --beta\n";
                return exit_usage;
            }
            Output output("classify", {{"n", cls_n}, {"p", p_str}, {"beta", beta_str}});
            const int code = cmd_classify(cls_n, p_str, beta_str, output);
            emit(output, format == "csv", out_path, out, err);
            return code;
        }
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return exit_usage;
    }
    return exit_usage;
}

}  // namespace rotinv::cli
