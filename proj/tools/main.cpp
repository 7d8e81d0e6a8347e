// Command-line surface: weight tables, fusion coefficient exports, moduli
// dimensions, the quantization examples, and the self-check suite.
//
// Exit codes: 0 success, 2 usage or invalid input, 3 mathematical-consistency
// failure, 4 resource cap exceeded.

#include "verlinde/quantize.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <complex>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

using nlohmann::json;
using namespace verlinde;

namespace {

struct RunConfig {
    std::string group = "A1";
    std::int64_t level = 0;
    std::string format = "text"; // text | json | csv
    std::string out_path;       // empty = stdout
    double tolerance = 1e-6;
    int threads = 1;
    bool corrupt_cache = false; // test hook

    // subcommand-specific
    std::int64_t sphere_n = 2;
    std::int64_t genus = 0;
    std::string weight_arg;
    std::vector<std::string> boundary_args;
};

std::string join(const Weight& w, char sep) {
    std::ostringstream os;
    for (std::size_t i = 0; i < w.labels.size(); ++i) {
        if (i) os << sep;
        os << w.labels[i];
    }
    return os.str();
}

Weight parse_weight(const std::string& text, int rank) {
    std::vector<std::int64_t> labels;
    std::stringstream ss(text);
    std::string part;
    while (std::getline(ss, part, ',')) {
        try {
            labels.push_back(std::stoll(part));
        } catch (const std::exception&) {
            throw std::invalid_argument("cannot parse weight component '" + part + "'");
        }
    }
    if (static_cast<int>(labels.size()) != rank)
        throw std::invalid_argument("weight '" + text + "' has " +
                                    std::to_string(labels.size()) + " labels, expected " +
                                    std::to_string(rank));
    return Weight(std::move(labels));
}

std::string fmt_double(double x) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12g", x);
    return buf;
}

void write_output(const RunConfig& cfg, const std::string& body) {
    if (cfg.out_path.empty()) {
        std::cout << body;
        return;
    }
    std::ofstream f(cfg.out_path, std::ios::binary);
    if (!f) throw std::invalid_argument("cannot open output file: " + cfg.out_path);
    f << body;
}

void validate(const RunConfig& cfg) {
    if (cfg.level < 0) throw std::invalid_argument("level must be >= 0");
    if (!(cfg.tolerance > 0.0 && cfg.tolerance <= 1e-3))
        throw std::invalid_argument("tolerance must lie in (0, 1e-3]");
    if (cfg.threads < 1) throw std::invalid_argument("threads must be >= 1");
    if (cfg.format != "text" && cfg.format != "json" && cfg.format != "csv")
        throw std::invalid_argument("format must be text, json, or csv");
}

// ---------------------------------------------------------------- weights --

int run_weights(const RunConfig& cfg) {
    RootDatum d = build_root_datum(cfg.group);
    auto weights = level_k_weights(d, cfg.level);

    std::ostringstream os;
    if (cfg.format == "json") {
        json j;
        j["command"] = "weights";
        j["group"] = d.type_label();
        j["level"] = cfg.level;
        j["datum"] = json::parse(root_datum_to_json(d));
        json rows = json::array();
        for (const auto& w : weights) {
            TorusPoint t = t_lambda(d, w, cfg.level);
            json row;
            row["labels"] = join(w, ',');
            row["level"] = weight_level(d, w);
            json phases = json::array();
            for (const auto& c : t.coords()) {
                json p;
                p["exact"] = c.str();
                p["value"] = c.to_double();
                phases.push_back(p);
            }
            row["phases"] = phases;
            rows.push_back(row);
        }
        j["weights"] = rows;
        os << j.dump(2) << "\n";
    } else if (cfg.format == "csv") {
        os << "labels,level";
        for (int i = 1; i <= d.rank(); ++i) os << ",phase_" << i;
        os << "\n";
        for (const auto& w : weights) {
            TorusPoint t = t_lambda(d, w, cfg.level);
            os << join(w, '-') << "," << weight_level(d, w);
            for (const auto& c : t.coords()) os << "," << c.str();
            os << "\n";
        }
    } else {
        os << d.type_label() << " level " << cfg.level << ": " << weights.size()
           << " weights\n";
        for (const auto& w : weights) {
            TorusPoint t = t_lambda(d, w, cfg.level);
            os << "(" << join(w, ',') << ")  level=" << weight_level(d, w) << "  phases:";
            for (const auto& c : t.coords()) os << " " << c.str();
            os << "\n";
        }
    }
    write_output(cfg, os.str());
    return 0;
}

// ----------------------------------------------------------------- fusion --

int run_fusion(const RunConfig& cfg) {
    RootDatum d = build_root_datum(cfg.group);
    FusionContext ctx(d, cfg.level, cfg.threads);
    if (cfg.corrupt_cache) ctx.corrupt_cache_for_testing();

    FusionTable table = fusion_table(ctx, cfg.tolerance);

    bool routes_agree = true;
    for (const auto& mu : ctx.weights())
        for (const auto& nu : ctx.weights()) {
            auto kw = fusion_coefficients_kac_walton(ctx, mu, nu);
            for (const auto& [lambda, n] : kw)
                if (table.coefficients.at({mu, nu, lambda}) != n) routes_agree = false;
        }

    std::ostringstream os;
    if (cfg.format == "json") {
        json j;
        j["command"] = "fusion";
        j["group"] = d.type_label();
        j["level"] = cfg.level;
        j["routes_agree"] = routes_agree;
        json entries = json::array();
        for (const auto& [key, n] : table.coefficients) {
            json e;
            e["mu"] = join(std::get<0>(key), ',');
            e["nu"] = join(std::get<1>(key), ',');
            e["lambda"] = join(std::get<2>(key), ',');
            e["N"] = n;
            entries.push_back(e);
        }
        j["entries"] = entries;
        os << j.dump(2) << "\n";
    } else if (cfg.format == "csv") {
        os << "mu,nu,lambda,N\n";
        for (const auto& [key, n] : table.coefficients)
            os << join(std::get<0>(key), '-') << "," << join(std::get<1>(key), '-') << ","
               << join(std::get<2>(key), '-') << "," << n << "\n";
        os << "# routes_agree=" << (routes_agree ? "true" : "false") << "\n";
    } else {
        os << d.type_label() << " level " << cfg.level << " fusion coefficients ("
           << table.coefficients.size() << " triples, routes_agree="
           << (routes_agree ? "true" : "false") << ")\n";
        for (const auto& [key, n] : table.coefficients)
            if (n != 0)
                os << "N[(" << join(std::get<0>(key), ',') << "),(" << join(std::get<1>(key), ',')
                   << "),(" << join(std::get<2>(key), ',') << ")] = " << n << "\n";
    }
    write_output(cfg, os.str());
    return routes_agree ? 0 : 3;
}

// --------------------------------------------------------------- verlinde --

int run_verlinde(const RunConfig& cfg) {
    RootDatum d = build_root_datum(cfg.group);
    FusionContext ctx(d, cfg.level, cfg.threads);

    VerlindeProblem problem;
    problem.genus = cfg.genus;
    for (const auto& b : cfg.boundary_args) {
        Weight w = parse_weight(b, d.rank());
        if (!in_level_alcove(d, w, cfg.level))
            throw std::invalid_argument("boundary weight (" + b + ") is not a level-" +
                                        std::to_string(cfg.level) + " weight");
        problem.boundary.push_back(std::move(w));
    }

    std::int64_t dim = verlinde_dimension(ctx, problem, cfg.tolerance);

    std::ostringstream os;
    if (cfg.format == "json") {
        json j;
        j["command"] = "verlinde";
        j["group"] = d.type_label();
        j["level"] = cfg.level;
        j["genus"] = cfg.genus;
        json boundary = json::array();
        for (const auto& w : problem.boundary) boundary.push_back(join(w, ','));
        j["boundary"] = boundary;
        j["dimension"] = dim;
        j["routes_agree"] = true;
        os << j.dump(2) << "\n";
    } else if (cfg.format == "csv") {
        os << "genus,boundary,dimension\n" << cfg.genus << ",";
        for (std::size_t i = 0; i < problem.boundary.size(); ++i)
            os << (i ? ";" : "") << join(problem.boundary[i], '-');
        os << "," << dim << "\n";
    } else {
        os << dim << "\n";
    }
    write_output(cfg, os.str());
    return 0;
}

// --------------------------------------------------------------- quantize --

void emit_quantize_record(const RunConfig& cfg, const std::string& example,
                          const std::string& group, const FusionElement& element,
                          double residual, bool routes_agree) {
    std::ostringstream os;
    if (cfg.format == "json") {
        json j;
        j["example"] = example;
        j["group"] = group;
        j["level"] = cfg.level;
        json coeffs = json::object();
        for (const auto& [w, c] : element.terms) coeffs[join(w, ',')] = c;
        j["coefficients"] = coeffs;
        j["residual"] = residual;
        j["routes_agree"] = routes_agree;
        os << j.dump(2) << "\n";
    } else if (cfg.format == "csv") {
        os << "weight,coefficient\n";
        for (const auto& [w, c] : element.terms) os << join(w, '-') << "," << c << "\n";
        os << "# example=" << example << " group=" << group << " level=" << cfg.level
           << " residual=" << fmt_double(residual)
           << " routes_agree=" << (routes_agree ? "true" : "false") << "\n";
    } else {
        os << example << " " << group << " level " << cfg.level << ":";
        for (const auto& [w, c] : element.terms) {
            os << " ";
            if (c != 1) os << c << "*";
            os << "tau(" << join(w, ',') << ")";
        }
        if (element.terms.empty()) os << " 0";
        os << "\n"
           << "residual=" << fmt_double(residual)
           << " routes_agree=" << (routes_agree ? "true" : "false") << "\n";
    }
    write_output(cfg, os.str());
}

int run_quantize_conj(const RunConfig& cfg) {
    RootDatum d = build_root_datum(cfg.group);
    Weight mu = parse_weight(cfg.weight_arg, d.rank());
    if (!in_level_alcove(d, mu, cfg.level))
        throw std::invalid_argument("weight (" + cfg.weight_arg + ") is not a level-" +
                                    std::to_string(cfg.level) + " weight");
    FusionContext ctx(d, cfg.level, cfg.threads);
    FusionElement q = quantize_conjugacy_class(ctx, mu, cfg.tolerance);

    // reconstruction error of the returned element against the value table
    double residual = 0.0;
    for (std::size_t l = 0; l < ctx.size(); ++l)
        residual = std::max(residual, std::abs(evaluate(ctx, q, ctx.weights()[l]) -
                                               ctx.chi(ctx.index_of(mu), l)));
    emit_quantize_record(cfg, "conjugacy-class", d.type_label(), q, residual, true);
    return 0;
}

int run_quantize_double(const RunConfig& cfg) {
    RootDatum d = build_root_datum(cfg.group);
    FusionContext ctx(d, cfg.level, cfg.threads);
    DoubleQuantization q = quantize_double(ctx, cfg.tolerance);
    emit_quantize_record(cfg, "fused-double", d.type_label(), q.fused, q.max_discrepancy, true);
    return 0;
}

int run_quantize_sphere(const RunConfig& cfg) {
    if (cfg.sphere_n < 2) throw std::invalid_argument("sphere requires n >= 2");
    RootDatum d = build_root_datum('A', static_cast<int>(cfg.sphere_n) - 1);
    FusionContext ctx(d, cfg.level, cfg.threads);
    SphereQuantization q = quantize_sphere(ctx, cfg.tolerance);
    emit_quantize_record(cfg, "sphere", "SU(" + std::to_string(cfg.sphere_n) + ")", q.element,
                         std::max(q.residual, q.cross_check_max_error), true);
    return 0;
}

// ------------------------------------------------------------------ check --

struct CheckLine {
    std::string name;
    double residual;
    double threshold;
    bool pass() const { return residual <= threshold; }
};

int run_check(const RunConfig& cfg) {
    RootDatum d = build_root_datum(cfg.group);
    FusionContext ctx(d, cfg.level, cfg.threads);
    if (cfg.corrupt_cache) ctx.corrupt_cache_for_testing();
    const double tol = cfg.tolerance;

    std::vector<CheckLine> lines;
    auto record = [&](const std::string& name, double residual, double threshold) {
        lines.push_back({name, residual, threshold});
    };
    auto guarded = [&](const std::string& name, double threshold, auto&& fn) {
        double residual;
        try {
            residual = fn();
        } catch (const std::exception&) {
            residual = threshold + 1.0; // any failure inside a check is a failure of the check
        }
        record(name, residual, threshold);
    };

    // exact lattice identities
    guarded("dual_coxeter_identity", 0.0, [&] {
        Rational prt = inner_product(d, d.rho(), d.theta());
        return std::abs(static_cast<double>(d.dual_coxeter()) - 1.0 - prt.to_double());
    });
    guarded("theta_squared_length", 0.0, [&] {
        return std::abs(inner_product(d, d.theta(), d.theta()).to_double() - 2.0);
    });
    guarded("gram_positive_definite", 0.0, [&] {
        // leading principal minors of the Gram matrix
        int violations = 0;
        for (int m = 1; m <= d.rank(); ++m) {
            std::vector<std::vector<double>> sub(m, std::vector<double>(m));
            for (int i = 0; i < m; ++i)
                for (int j = 0; j < m; ++j) sub[i][j] = d.gram()[i][j].to_double();
            double det = 1.0;
            for (int col = 0; col < m; ++col) {
                int piv = col;
                while (piv < m && std::abs(sub[piv][col]) < 1e-14) ++piv;
                if (piv == m) { det = 0.0; break; }
                std::swap(sub[col], sub[piv]);
                if (piv != col) det = -det;
                det *= sub[col][col];
                for (int row = col + 1; row < m; ++row) {
                    double f = sub[row][col] / sub[col][col];
                    for (int j = col; j < m; ++j) sub[row][j] -= f * sub[col][j];
                }
            }
            if (det <= 0.0) ++violations;
        }
        return static_cast<double>(violations);
    });
    guarded("torus_order_scaling", 0.0, [&] {
        int violations = 0;
        std::int64_t base = torus_order(d, 1);
        for (std::int64_t l = 1; l <= 6; ++l) {
            std::int64_t expect = base;
            for (int i = 0; i < d.rank(); ++i) expect *= l;
            if (torus_order(d, l) != expect) ++violations;
        }
        return static_cast<double>(violations);
    });
    guarded("evaluation_points_regular", 0.0, [&] {
        int violations = 0;
        for (std::size_t l = 0; l < ctx.size(); ++l)
            for (const auto& alpha : d.positive_roots())
                if (ctx.point(l).phase(alpha).is_integer()) ++violations;
        return static_cast<double>(violations);
    });
    guarded("weyl_element_signs", 0.0, [&] {
        int violations = 0;
        for (const auto& w : ctx.weyl()) {
            std::vector<std::vector<Rational>> m(d.rank(), std::vector<Rational>(d.rank()));
            for (int i = 0; i < d.rank(); ++i)
                for (int j = 0; j < d.rank(); ++j)
                    m[i][j] = Rational(w.matrix[static_cast<std::size_t>(i) * d.rank() + j]);
            // determinant by elimination
            Rational det(1);
            bool zero = false;
            for (int col = 0; col < d.rank() && !zero; ++col) {
                int piv = col;
                while (piv < d.rank() && m[piv][col].is_zero()) ++piv;
                if (piv == d.rank()) { zero = true; break; }
                if (piv != col) { std::swap(m[col], m[piv]); det = -det; }
                det *= m[col][col];
                for (int row = col + 1; row < d.rank(); ++row) {
                    if (m[row][col].is_zero()) continue;
                    Rational f = m[row][col] / m[col][col];
                    for (int j = col; j < d.rank(); ++j) m[row][j] -= f * m[col][j];
                }
            }
            if (zero || det != Rational(w.sign())) ++violations;
        }
        return static_cast<double>(violations);
    });
    guarded("weyl_denominator_antiinvariance", 1e-9, [&] {
        double worst = 0.0;
        for (std::size_t l = 0; l < ctx.size(); ++l)
            for (const auto& w : ctx.weyl()) {
                std::complex<double> lhs =
                    weyl_denominator(d, ctx.weyl(), weyl_pullback(w, ctx.point(l)));
                worst = std::max(worst,
                                 std::abs(lhs - static_cast<double>(w.sign()) * ctx.jval(l)));
            }
        return worst;
    });
    guarded("orthogonality", tol, [&] { return verify_orthogonality(ctx); });
    guarded("star_involution", 0.0, [&] {
        int violations = 0;
        for (const auto& mu : ctx.weights())
            if (ctx.star(ctx.star(mu)) != mu) ++violations;
        return static_cast<double>(violations);
    });
    guarded("star_conjugates_values", 1e-9, [&] {
        double worst = 0.0;
        for (const auto& mu : ctx.weights()) {
            std::size_t mi = ctx.index_of(mu);
            std::size_t si = ctx.index_of(ctx.star(mu));
            for (std::size_t l = 0; l < ctx.size(); ++l)
                worst = std::max(worst,
                                 std::abs(ctx.chi(si, l) - std::conj(ctx.chi(mi, l))));
        }
        return worst;
    });
    guarded("projection_fixes_basis", 0.0, [&] {
        int violations = 0;
        for (const auto& mu : ctx.weights()) {
            VirtualCharacter x;
            x.add(mu, 1);
            FusionElement expect;
            expect.level = ctx.level();
            expect.add(mu, 1);
            if (project_to_fusion(d, x, ctx.level()) != expect) ++violations;
        }
        return static_cast<double>(violations);
    });
    guarded("two_route_fusion", 0.0, [&] {
        std::int64_t worst = 0;
        for (const auto& mu : ctx.weights())
            for (const auto& nu : ctx.weights()) {
                auto a = fusion_coefficients(ctx, mu, nu, tol);
                auto b = fusion_coefficients_kac_walton(ctx, mu, nu);
                for (const auto& [lambda, n] : a)
                    worst = std::max(worst, std::abs(n - b.at(lambda)));
            }
        return static_cast<double>(worst);
    });
    guarded("fusion_s3_symmetry_and_unit", 0.0, [&] {
        FusionTable table = fusion_table(ctx, tol);
        std::int64_t worst = 0;
        const Weight zero(std::vector<std::int64_t>(d.rank(), 0));
        for (const auto& [key, n] : table.coefficients) {
            const auto& [a, b, c] = key;
            worst = std::max(worst, std::abs(n - table.coefficients.at({a, c, b})));
            worst = std::max(worst, std::abs(n - table.coefficients.at({b, a, c})));
            worst = std::max(worst, std::abs(n - table.coefficients.at({c, b, a})));
            if (a == zero) {
                std::int64_t expect = (b == ctx.star(c)) ? 1 : 0;
                worst = std::max(worst, std::abs(n - expect));
            }
        }
        return static_cast<double>(worst);
    });
    guarded("evaluation_is_ring_map", 1e-9, [&] {
        double worst = 0.0;
        for (const auto& mu : ctx.weights())
            for (const auto& nu : ctx.weights()) {
                FusionElement prod = fusion_product(ctx, mu, nu, tol);
                std::size_t mi = ctx.index_of(mu), ni = ctx.index_of(nu);
                for (std::size_t l = 0; l < ctx.size(); ++l)
                    worst = std::max(worst, std::abs(evaluate(ctx, prod, ctx.weights()[l]) -
                                                     ctx.chi(mi, l) * ctx.chi(ni, l)));
            }
        return worst;
    });
    guarded("double_diagonal", tol, [&] { return quantize_double(ctx, tol).max_discrepancy; });
    guarded("conjugacy_classes_are_basis", 0.0, [&] {
        int violations = 0;
        for (const auto& mu : ctx.weights()) {
            FusionElement expect;
            expect.level = ctx.level();
            expect.add(mu, 1);
            if (quantize_conjugacy_class(ctx, mu, tol) != expect) ++violations;
        }
        return static_cast<double>(violations);
    });
    if (d.series() == 'A') {
        guarded("fusion_ideal_generators_vanish", 1e-8,
                [&] { return fusion_ideal_check_A(ctx); });
        guarded("sphere_quantization", tol, [&] {
            SphereQuantization q = quantize_sphere(ctx, tol);
            return std::max(q.residual, q.cross_check_max_error);
        });
    }

    bool all_pass = true;
    for (const auto& l : lines) all_pass = all_pass && l.pass();

    std::ostringstream os;
    if (cfg.format == "json") {
        json j;
        j["command"] = "check";
        j["group"] = d.type_label();
        j["level"] = cfg.level;
        json checks = json::array();
        for (const auto& l : lines) {
            json c;
            c["name"] = l.name;
            c["residual"] = l.residual;
            c["threshold"] = l.threshold;
            c["pass"] = l.pass();
            checks.push_back(c);
        }
        j["checks"] = checks;
        j["all_pass"] = all_pass;
        os << j.dump(2) << "\n";
    } else {
        os << "check " << d.type_label() << " level " << cfg.level << "\n";
        for (const auto& l : lines)
            os << (l.pass() ? "PASS" : "FAIL") << " " << l.name
               << " residual=" << fmt_double(l.residual)
               << " threshold=" << fmt_double(l.threshold) << "\n";
        os << (all_pass ? "all checks passed" : "CHECK FAILURES PRESENT") << "\n";
    }
    write_output(cfg, os.str());
    return all_pass ? 0 : 3;
}

} // namespace

int main(int argc, char** argv) {
    RunConfig cfg;
    CLI::App app{"level-k fusion ring tables and quantization checks"};
    app.require_subcommand(1);

    auto add_common = [&](CLI::App* cmd, bool with_group = true) {
        if (with_group) cmd->add_option("--group", cfg.group, "simple type, e.g. A2");
        cmd->add_option("--level", cfg.level, "level k >= 0");
        cmd->add_option("--format", cfg.format, "text | json | csv");
        cmd->add_option("--out", cfg.out_path, "output file (default stdout)");
        cmd->add_option("--tolerance", cfg.tolerance, "integrality tolerance, in (0, 1e-3]");
        cmd->add_option("--threads", cfg.threads, "threads for the value-table warm-up");
    };

    CLI::App* weights_cmd = app.add_subcommand("weights", "list the level-k weights and phases");
    add_common(weights_cmd);

    CLI::App* fusion_cmd =
        app.add_subcommand("fusion", "export all fusion coefficients, both routes");
    add_common(fusion_cmd);
    fusion_cmd->add_flag("--corrupt-cache", cfg.corrupt_cache,
                         "test hook: corrupt one cached value");

    CLI::App* verlinde_cmd =
        app.add_subcommand("verlinde", "dimension for genus h with boundary weights");
    add_common(verlinde_cmd);
    verlinde_cmd->add_option("--genus", cfg.genus, "genus h >= 0");
    verlinde_cmd->add_option("--boundary", cfg.boundary_args,
                             "boundary weight as comma-joined labels (repeatable)");

    CLI::App* quantize_cmd = app.add_subcommand("quantize", "quantization examples");
    quantize_cmd->require_subcommand(1);
    CLI::App* conj_cmd = quantize_cmd->add_subcommand("conj", "pre-quantized conjugacy class");
    add_common(conj_cmd);
    conj_cmd->add_option("--weight", cfg.weight_arg, "class label as comma-joined labels")
        ->required();
    CLI::App* double_cmd = quantize_cmd->add_subcommand("double", "fused double");
    add_common(double_cmd);
    CLI::App* sphere_cmd = quantize_cmd->add_subcommand("sphere", "S^{2n} as an SU(n)-space");
    add_common(sphere_cmd, /*with_group=*/false);
    sphere_cmd->add_option("--n", cfg.sphere_n, "n >= 2 (group SU(n))");

    CLI::App* check_cmd = app.add_subcommand("check", "run the invariant suite");
    add_common(check_cmd);
    check_cmd->add_flag("--corrupt-cache", cfg.corrupt_cache,
                        "test hook: corrupt one cached value");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        validate(cfg);
        if (weights_cmd->parsed()) return run_weights(cfg);
        if (fusion_cmd->parsed()) return run_fusion(cfg);
        if (verlinde_cmd->parsed()) return run_verlinde(cfg);
        if (quantize_cmd->parsed()) {
            if (conj_cmd->parsed()) return run_quantize_conj(cfg);
            if (double_cmd->parsed()) return run_quantize_double(cfg);
            if (sphere_cmd->parsed()) return run_quantize_sphere(cfg);
        }
        if (check_cmd->parsed()) return run_check(cfg);
        std::cerr << "error: no subcommand\n";
        return 2;
    } catch (const CapExceeded& e) {
        std::cerr << "resource cap: " << e.what() << "\n";
        return 4;
    } catch (const ConsistencyError& e) {
        std::cerr << "consistency failure: " << e.what() << "\n";
        return 3;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 3;
    }
}
