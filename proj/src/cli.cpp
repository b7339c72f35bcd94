#include "jacobi_periods/cli.hpp"

#include <fstream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "jacobi_periods/arith.hpp"
#include "jacobi_periods/errors.hpp"
#include "jacobi_periods/fourier.hpp"
#include "jacobi_periods/group_ring.hpp"
#include "jacobi_periods/jacobi_group.hpp"
#include "jacobi_periods/numeric.hpp"
#include "jacobi_periods/serialize.hpp"

namespace jacobi::cli {

namespace {

using nlohmann::json;

struct RunConfig {
    std::string kind;
    std::int64_t n = 2, p = 2, np = 3, k = 2, D = -3, max = 100;
    int mu = 0;
    std::vector<std::int64_t> ps, ns, Ds;
    std::string qbound;
    std::string input;
    std::string output;
    std::string format = "json";
    std::optional<double> tol;
    std::optional<int> precision;
    bool literal = false;
};

Rational qbound_or(const RunConfig& rc, const char* fallback)
{
    Rational q = parse_rational(rc.qbound.empty() ? fallback : rc.qbound);
    if (q <= 0) throw UsageError("--qbound must be positive");
    return q;
}

json read_json_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in) throw UsageError("cannot read " + path);
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        throw UsageError(path + ": " + e.what());
    }
}

std::string status(bool ok) { return ok ? "pass" : "fail"; }

json suite(const std::string& name, const std::vector<json>& checks)
{
    bool ok = true;
    for (const auto& c : checks) ok = ok && c.at("status") == "pass";
    return {{"suite", name}, {"checks", checks}, {"status", status(ok)}};
}

// ---------------------------------------------------------------- text output

std::string expansion_text(const json& j)
{
    std::ostringstream s;
    s << "# " << j.at("kind").get<std::string>() << " weight " << j.at("weight").get<std::string>();
    if (j.contains("index")) s << " index " << j.at("index").get<std::string>();
    s << " scale " << j.at("scale") << " qbound " << j.at("qbound").get<std::string>() << '\n';
    for (const auto& t : j.at("terms")) {
        for (std::size_t i = 0; i + 2 < t.size(); ++i) s << t[i] << ' ';
        s << (t[t.size() - 2].is_string() ? t[t.size() - 2].get<std::string>() : t[t.size() - 2].dump());
        if (t.back() != 1) s << '/' << (t.back().is_string() ? t.back().get<std::string>() : t.back().dump());
        s << '\n';
    }
    return s.str();
}

std::string expansion_csv(const json& j)
{
    std::ostringstream s;
    s << (j.at("kind") == "jacobi" ? "n_scaled,r,numerator,denominator\n" : "n_scaled,numerator,denominator\n");
    for (const auto& t : j.at("terms")) {
        for (std::size_t i = 0; i < t.size(); ++i) {
            if (i) s << ',';
            s << (t[i].is_string() ? t[i].get<std::string>() : t[i].dump());
        }
        s << '\n';
    }
    return s.str();
}

void report_text(const json& j, std::ostream& s)
{
    if (j.contains("checks")) {
        for (const auto& c : j.at("checks")) report_text(c, s);
        s << j.at("suite").get<std::string>() << ": " << j.at("status").get<std::string>() << '\n';
        return;
    }
    s << j.at("check").get<std::string>();
    for (const auto& [key, v] : j.items())
        if (key != "check" && key != "status" && (v.is_number() || v.is_string() || v.is_boolean()))
            s << ' ' << key << '=' << (v.is_string() ? v.get<std::string>() : v.dump());
    s << ": " << j.at("status").get<std::string>() << '\n';
}

// ---------------------------------------------------------------- commands

json expand_cmd(const RunConfig& rc)
{
    Rational Q = qbound_or(rc, "10");
    if (rc.kind == "e21") return io::to_json(fourier::e21_expansion(Q));
    if (rc.kind == "theta0") return io::to_json(fourier::theta(0, Q));
    if (rc.kind == "theta1") return io::to_json(fourier::theta(1, Q));
    if (rc.kind == "e2") return io::to_json(fourier::e2_series(Q));
    if (rc.kind == "h32") return io::to_json(fourier::h32_series(Q));
    if (rc.mu != 0 && rc.mu != 1) throw UsageError("--mu must be 0 or 1");
    return io::to_json(fourier::h_mu_series(rc.mu, Q));
}

json hecke_cmd(const RunConfig& rc)
{
    Rational Q = qbound_or(rc, "10");
    bool have_input = !rc.input.empty();
    if (rc.kind == "v") {
        if (rc.n < 1) throw UsageError("--n must be positive");
        auto f = have_input ? io::jacobi_from_json(read_json_file(rc.input)) : fourier::e21_expansion(Q * rc.n);
        return io::to_json(fourier::apply_V(f, rc.n));
    }
    if (rc.p < 1) throw UsageError("--p must be positive");
    if (rc.kind == "tj") {
        auto f = have_input ? io::jacobi_from_json(read_json_file(rc.input))
                            : fourier::e21_expansion(fourier::required_input_qbound_T(rc.p, Q));
        return io::to_json(fourier::apply_T_jacobi(f, rc.p, have_input ? std::nullopt : std::optional<Rational>(Q)));
    }
    if (rc.kind == "thalf") {
        auto h = have_input ? io::qseries_from_json(read_json_file(rc.input)) : fourier::h32_series(Q * rc.p * rc.p);
        return io::to_json(fourier::apply_T_half(h, rc.p));
    }
    auto e = have_input ? io::qseries_from_json(read_json_file(rc.input)) : fourier::e2_series(Q * rc.p);
    return io::to_json(fourier::apply_T_weight2(
        e, rc.p, rc.literal ? fourier::Weight2Exponent::Literal : fourier::Weight2Exponent::Standard));
}

json lift_cmd(const RunConfig& rc)
{
    Rational Q = qbound_or(rc, "10");
    std::int64_t Qi = to_int64(floor(Q)) + (is_integer(Q) ? 0 : 1);
    if (rc.kind == "phi") {
        if (rc.D >= 0 || !arith::is_fundamental_discriminant(rc.D))
            throw UsageError("--D must be a negative fundamental discriminant");
        auto c = !rc.input.empty() ? io::qseries_from_json(read_json_file(rc.input))
                                   : fourier::h32_series((Qi - 1) * (Qi - 1) * -rc.D + 1);
        return io::to_json(fourier::phi_lift(
            c, rc.D, rc.literal ? fourier::PhiConstant::Literal : fourier::PhiConstant::Linear));
    }
    auto c = !rc.input.empty() ? io::qseries_from_json(read_json_file(rc.input)) : fourier::h32_series(Q * 4);
    return io::to_json(fourier::psi_lift(c));
}

json classnum_cmd(const RunConfig& rc)
{
    if (rc.max < 0) throw UsageError("--max must be nonnegative");
    return io::to_json(arith::ClassNumberTable(rc.max));
}

json eigen_suite(const RunConfig& rc)
{
    Rational Q = qbound_or(rc, "15");
    std::vector<std::int64_t> ps = rc.ps.empty() ? std::vector<std::int64_t>{2, 3, 5} : rc.ps;
    std::vector<json> checks;
    for (std::int64_t p : ps) {
        if (p < 2) throw UsageError("--p values must be at least 2");
        Rational qin = fourier::required_input_qbound_T(p, Q);
        arith::ClassNumberTable table(to_int64(floor(qin * 4)) + 8);
        auto e = fourier::e21_expansion(qin, &table);
        auto lhs = fourier::apply_T_jacobi(e, p, Q);
        bool ok = fourier::agree_below(lhs, e.truncated(Q) * Rational(p + 1), Q);
        checks.push_back({{"check", "jacobi_eigenvalue"}, {"p", p}, {"qbound", to_string(Q)}, {"status", status(ok)}});
    }
    // Weight 2 companion: constant term ratio exposes the exponent convention.
    auto w2 = rc.literal ? fourier::Weight2Exponent::Literal : fourier::Weight2Exponent::Standard;
    for (std::int64_t p : ps) {
        if (!arith::is_prime(p)) continue;
        auto e2 = fourier::e2_series(Q * p);
        auto t = fourier::apply_T_weight2(e2, p, w2);
        bool ok = fourier::agree_below(t, e2.truncated(t.qbound()) * Rational(p + 1), t.qbound());
        Rational ratio = t.coeff_scaled(0) / e2.coeff_scaled(0);
        checks.push_back({{"check", "weight2_eigenvalue"},
                          {"p", p},
                          {"exponent", rc.literal ? "literal" : "standard"},
                          {"constant_term_ratio", to_string(ratio)},
                          {"status", status(ok)}});
    }
    return suite("eigen", checks);
}

json diagram_suite(const RunConfig& rc)
{
    Rational Q = qbound_or(rc, "12");
    std::vector<std::int64_t> ps = rc.ps.empty() ? std::vector<std::int64_t>{2, 3} : rc.ps;
    std::vector<std::int64_t> Ds = rc.Ds.empty() ? std::vector<std::int64_t>{-3, -4} : rc.Ds;
    std::vector<json> checks;
    for (std::int64_t p : ps)
        for (std::int64_t D : Ds) {
            if (!arith::is_prime(p)) throw UsageError("--p values must be prime");
            if (D >= 0 || !arith::is_fundamental_discriminant(D))
                throw UsageError("--D values must be negative fundamental discriminants");
            auto r = fourier::diagram_check(
                p, D, Q, rc.literal ? fourier::PhiConstant::Literal : fourier::PhiConstant::Linear,
                rc.literal ? fourier::Weight2Exponent::Literal : fourier::Weight2Exponent::Standard);
            checks.push_back({{"check", "hecke_diagram"},
                              {"p", p},
                              {"D", D},
                              {"qbound", to_string(Q)},
                              {"phi_square", r.phi_square},
                              {"psi_square", r.psi_square},
                              {"status", status(r.holds())}});
        }
    return suite("diagram", checks);
}

json groupring_cmd(const RunConfig& rc)
{
    if (rc.n < 1) throw UsageError("--n must be positive");
    auto r = ring::check_theorem_congruence(rc.n);
    return {{"check", "theorem_congruence"},
            {"n", rc.n},
            {"residues", {{"S", r.residue_S}, {"I1", r.residue_I1}, {"I2", r.residue_I2}, {"T", r.residue_T}}},
            {"status", status(r.holds())}};
}

json product_cmd(const RunConfig& rc)
{
    if (rc.n < 1 || rc.np < 1) throw UsageError("--n and --np must be positive");
    auto r = ring::check_product_formula(rc.n, rc.np, rc.k);
    return {{"check", "product_formula"},
            {"n", rc.n},
            {"np", rc.np},
            {"k", rc.k},
            {"residue_orbits", r.residue},
            {"residue_l1", r.residue_l1},
            {"transfer_residue_orbits", r.transfer_residue},
            {"status", status(r.holds())}};
}

json relations_cmd(const RunConfig& rc)
{
    auto law = rc.literal ? group::GroupLaw::LiteralSubscriptFree : group::GroupLaw::Standard;
    json rels = json::array();
    bool ok = true;
    for (const auto& r : group::check_relations(law)) {
        rels.push_back({{"relation", r.name}, {"holds", r.holds}});
        ok = ok && r.holds;
    }
    return {{"check", "group_relations"},
            {"law", rc.literal ? "literal" : "standard"},
            {"relations", rels},
            {"status", status(ok)}};
}

numeric::NumericConfig numeric_config(const RunConfig& rc)
{
    auto cfg = numeric::NumericConfig::from_env();
    if (rc.precision) cfg.precision = *rc.precision;
    if (rc.tol) cfg.tol = *rc.tol;
    cfg.validate();
    return cfg;
}

json numeric_json(numeric::CheckReport r, const RunConfig& rc)
{
    if (rc.tol) r.tol = *rc.tol;
    return numeric::to_json(r);
}

json numeric_suite(const RunConfig& rc)
{
    auto cfg = numeric_config(rc);
    auto norm = rc.literal ? numeric::PeriodNormalization::Literal : numeric::PeriodNormalization::Standard;
    auto completion = rc.literal ? numeric::CompletionFactor::Literal : numeric::CompletionFactor::Standard;
    std::vector<json> checks;
    checks.push_back(numeric_json(numeric::check_transformation_law(cfg, norm), rc));
    checks.push_back(numeric_json(numeric::check_period_relations(cfg), rc));
    checks.push_back(numeric_json(numeric::check_tildeT_action(rc.p, cfg), rc));
    checks.push_back(numeric_json(numeric::check_phi_invariance(cfg, completion), rc));
    checks.push_back(numeric_json(numeric::check_beta(cfg), rc));
    checks.push_back(numeric_json(numeric::check_eichler_identity(cfg), rc));
    checks.push_back(numeric_json(numeric::check_T_jacobi_oracle(rc.p, cfg), rc));
    return suite("numeric", checks);
}

json theorem1_suite(const RunConfig& rc)
{
    auto cfg = numeric_config(rc);
    std::vector<std::int64_t> ns = rc.ns.empty() ? std::vector<std::int64_t>{2, 3} : rc.ns;
    std::vector<json> checks;
    for (std::int64_t n : ns) {
        if (n < 1) throw UsageError("--n values must be positive");
        checks.push_back(numeric_json(numeric::check_theorem1(n, cfg), rc));
    }
    return suite("theorem1", checks);
}

json verify_cmd(const RunConfig& rc)
{
    if (rc.kind == "thetadecomp") {
        Rational Q = qbound_or(rc, "20");
        return {{"check", "theta_decomposition"},
                {"qbound", to_string(Q)},
                {"status", status(fourier::theta_decomposition_check(Q))}};
    }
    if (rc.kind == "eigen") return eigen_suite(rc);
    if (rc.kind == "diagram") return diagram_suite(rc);
    if (rc.kind == "groupring") return groupring_cmd(rc);
    if (rc.kind == "product") return product_cmd(rc);
    if (rc.kind == "relations") return relations_cmd(rc);
    if (rc.kind == "numeric") return numeric_suite(rc);
    return theorem1_suite(rc);
}

bool passed(const json& j) { return !j.contains("status") || j.at("status") == "pass"; }

void emit(const std::string& text, const RunConfig& rc, std::ostream& out)
{
    if (rc.output.empty()) {
        out << text;
        return;
    }
    std::ofstream f(rc.output, std::ios::binary);
    if (!f) throw UsageError("cannot write " + rc.output);
    f << text;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err)
{
    RunConfig rc;
    CLI::App app{"Exact and numerical Hecke checks for index-1 Jacobi forms and their periods", "jacobi-periods"};
    app.require_subcommand(1);
    // Global flags are accepted after the subcommand as well.
    app.fallthrough();
    app.add_flag("--literal-paper", rc.literal,
                 "Use the literal variants: d^-4 weight-2 exponent, subscript-free group law, (1+i)/16 period "
                 "constant, completion factor 1, constant phi-lift term");
    app.add_option("--tol", rc.tol, "Override the numeric check tolerance")->check(CLI::PositiveNumber);
    app.add_option("--precision", rc.precision, "Working precision in decimal digits (at most 15 are used)")
        ->check(CLI::PositiveNumber);
    app.add_option("--output,-o", rc.output, "Write the result to this file");
    app.add_option("--format", rc.format, "Output format")->check(CLI::IsMember({"json", "csv", "text"}));

    auto* classnum = app.add_subcommand("classnum", "Hurwitz class number table H(0..max)");
    classnum->add_option("--max", rc.max, "Largest N")->required();

    auto* expand = app.add_subcommand("expand", "Fourier expansion of a built-in series");
    expand->add_option("kind", rc.kind)->required()->check(CLI::IsMember({"e21", "theta0", "theta1", "e2", "h32", "hmu"}));
    expand->add_option("--qbound", rc.qbound, "Exponent bound (rational)");
    expand->add_option("--mu", rc.mu, "0 or 1 for hmu");

    auto* hecke = app.add_subcommand("hecke", "Apply a Hecke-type operator");
    hecke->add_option("kind", rc.kind)->required()->check(CLI::IsMember({"v", "tj", "thalf", "t2"}));
    hecke->add_option("--n", rc.n, "Index for v");
    hecke->add_option("--p", rc.p, "Level for tj, prime for thalf and t2");
    hecke->add_option("--qbound", rc.qbound, "Output exponent bound");
    hecke->add_option("--input", rc.input, "JSON expansion to transform instead of the Eisenstein default");

    auto* lift = app.add_subcommand("lift", "Lift the weight 3/2 series");
    lift->add_option("kind", rc.kind)->required()->check(CLI::IsMember({"phi", "psi"}));
    lift->add_option("--D", rc.D, "Negative fundamental discriminant for phi");
    lift->add_option("--qbound", rc.qbound, "Output exponent bound");
    lift->add_option("--input", rc.input, "JSON q-series to lift instead of the class number series");

    auto* verify = app.add_subcommand("verify", "Run a verification suite");
    verify->add_option("kind", rc.kind)
        ->required()
        ->check(CLI::IsMember(
            {"thetadecomp", "eigen", "diagram", "groupring", "product", "relations", "numeric", "theorem1"}));
    verify->add_option("--qbound", rc.qbound, "Exponent bound for exact suites");
    verify->add_option("--n", rc.ns, "n for groupring, product and theorem1");
    verify->add_option("--np", rc.np, "Second level for product");
    verify->add_option("--k", rc.k, "Weight for product");
    verify->add_option("--p", rc.ps, "Primes for eigen, diagram and numeric");
    verify->add_option("--D", rc.Ds, "Discriminants for diagram");

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return kUsage;
    }

    if (verify->parsed()) {
        if (!rc.ns.empty()) rc.n = rc.ns.front();
        if (!rc.ps.empty()) rc.p = rc.ps.front();
        if ((rc.kind == "groupring" || rc.kind == "product") && rc.ns.size() > 1) {
            err << "--n takes a single value for " << rc.kind << '\n';
            return kUsage;
        }
    }
    const bool expansion = expand->parsed() || hecke->parsed() || lift->parsed();
    if (rc.format == "csv" && !(expansion || classnum->parsed())) {
        err << "csv output is only available for expansions and classnum\n";
        return kUsage;
    }

    try {
        json result;
        if (classnum->parsed())
            result = classnum_cmd(rc);
        else if (expand->parsed())
            result = expand_cmd(rc);
        else if (hecke->parsed())
            result = hecke_cmd(rc);
        else if (lift->parsed())
            result = lift_cmd(rc);
        else
            result = verify_cmd(rc);

        std::string text;
        if (rc.format == "json")
            text = result.dump(expansion || classnum->parsed() ? -1 : 2) + "\n";
        else if (classnum->parsed())
            text = rc.format == "csv" ? io::to_csv(arith::ClassNumberTable(rc.max)) : result.dump() + "\n";
        else if (expansion)
            text = rc.format == "csv" ? expansion_csv(result) : expansion_text(result);
        else {
            std::ostringstream s;
            report_text(result, s);
            text = s.str();
        }
        emit(text, rc, out);
        return passed(result) ? kPass : kCheckFailed;
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n' << app.help();
        return kUsage;
    } catch (const InvalidElementError& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const DomainError& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const PrecisionError& e) {
        err << "precision error: " << e.what() << '\n';
        return kAborted;
    } catch (const ResourceLimitError& e) {
        err << "resource limit: " << e.what() << '\n';
        return kAborted;
    }
}

}  // namespace jacobi::cli
