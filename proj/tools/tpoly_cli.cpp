#include "tpoly/catalogs.hpp"
#include "tpoly/kazarian.hpp"
#include "tpoly/model_io.hpp"
#include "tpoly/projective.hpp"
#include "tpoly/solver.hpp"

#include "CLI11.hpp"

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

using namespace tpoly;

namespace {

struct UsageError : Error {
    using Error::Error;
};

/* desk-scale parameter bounds; combinatorial growth past these */
struct Bounds {
    int porteous_n = 6, porteous_k = 4;
    int bilinear_n = 8;
    int gl2_n = 12;
    int an_k = 3, an_m = 8;
};

struct TargetArgs {
    std::string target;
    int n = -1, k = -1, s = -1, r = -1, i = -1, m = -1;
    std::string orbit;
    bool force = false;
};

void add_target_options(CLI::App* cmd, TargetArgs& ta, bool need_orbit)
{
    cmd->add_option("target", ta.target,
                    "catalog (porteous|lambda2|s2|gl2|an) or a JSON model file")
        ->required();
    cmd->add_option("--n", ta.n, "rank parameter n");
    cmd->add_option("--k", ta.k, "corank offset k (porteous, an)");
    cmd->add_option("--m", ta.m, "contact orbit index m (an; also sets the catalog depth)");
    if (need_orbit) {
        cmd->add_option("--s", ta.s, "porteous orbit Sigma_s");
        cmd->add_option("--r", ta.r, "bilinear orbit Sigma^r");
        cmd->add_option("--i", ta.i, "gl2 orbit eta_i");
        cmd->add_option("--orbit", ta.orbit, "orbit name (any model)");
    }
    cmd->add_flag("--force", ta.force, "ignore the desk-scale parameter bounds");
}

std::string read_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw UsageError("cannot read " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

bool is_model_file(const std::string& target)
{
    return target.find('.') != std::string::npos || target.find('/') != std::string::npos;
}

RepresentationModel resolve_model(const TargetArgs& ta)
{
    Bounds b;
    auto check = [&](bool ok, const std::string& what) {
        if (!ok && !ta.force)
            throw UsageError(what + " (use --force to override)");
    };
    if (ta.target == "porteous") {
        if (ta.n < 1)
            throw UsageError("porteous needs --n >= 1");
        int k = ta.k < 0 ? 0 : ta.k;
        check(ta.n <= b.porteous_n && k <= b.porteous_k,
              "porteous is bounded to n <= 6, k <= 4");
        return catalog_porteous(ta.n, k);
    }
    if (ta.target == "lambda2" || ta.target == "s2") {
        if (ta.n < 1)
            throw UsageError(ta.target + " needs --n >= 1");
        check(ta.n <= b.bilinear_n, ta.target + " is bounded to n <= 8");
        return catalog_bilinear(
            ta.target == "s2" ? BilinearKind::Symmetric : BilinearKind::Antisymmetric, ta.n);
    }
    if (ta.target == "gl2") {
        if (ta.n < 2)
            throw UsageError("gl2 needs --n >= 2");
        check(ta.n <= b.gl2_n, "gl2 is bounded to n <= 12");
        return catalog_gl2_sn(ta.n);
    }
    if (ta.target == "an") {
        int k = ta.k < 0 ? 0 : ta.k;
        int depth = ta.m < 1 ? 4 : ta.m;
        check(k <= b.an_k && depth <= b.an_m, "an is bounded to k <= 3, m <= 8");
        return catalog_contact_an(k, depth);
    }
    if (is_model_file(ta.target))
        return load_model(read_file(ta.target));
    throw UsageError("unknown catalog " + ta.target +
                     "; expected porteous|lambda2|s2|gl2|an or a model file");
}

std::string resolve_orbit(const RepresentationModel& model, const TargetArgs& ta)
{
    if (!ta.orbit.empty())
        return ta.orbit;
    if (ta.target == "porteous" && ta.s >= 0)
        return "Sigma" + std::to_string(ta.s);
    if ((ta.target == "lambda2" || ta.target == "s2") && ta.r >= 0)
        return "Sigma" + std::to_string(ta.r);
    if (ta.target == "gl2")
        return "eta" + std::to_string(ta.i < 0 ? 0 : ta.i);
    if (ta.target == "an" && ta.m >= 0)
        return "A" + std::to_string(ta.m);
    throw UsageError("no orbit selected; pass --s/--r/--i/--m or --orbit (model " +
                     model.name() + ")");
}

GradedPolynomial parse_poly_arg(const std::string& arg, const AlphabetPtr& alpha,
                                const std::string& what)
{
    std::string text = arg;
    if (!arg.empty() && arg[0] == '@')
        text = read_file(arg.substr(1));
    Json j;
    try {
        j = Json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw UsageError(what + " is not valid JSON: " + std::string(e.what()));
    }
    return polynomial_from_json(j, alpha, what);
}

Json tp_result_json(const TpResult& r)
{
    Json out;
    out["orbit"] = r.orbit;
    out["degree"] = r.degree;
    out["polynomial"] = polynomial_to_json(r.polynomial);
    Json diag;
    diag["equations"] = r.diagnostics.num_equations;
    diag["unknowns"] = r.diagnostics.num_unknowns;
    diag["kernel_dim"] = r.diagnostics.kernel_dim;
    diag["orbits_used"] = r.diagnostics.orbits_used;
    out["diagnostics"] = std::move(diag);
    if (!r.kernel.empty()) {
        Json kb = Json::array();
        for (const GradedPolynomial& v : r.kernel)
            kb.push_back(polynomial_to_json(v));
        out["kernel_basis"] = std::move(kb);
    }
    return out;
}

ScalarData resolve_scalars(const RepresentationModel& model, const std::string& preset,
                           const std::string& weights, long q)
{
    if (!preset.empty())
        return scalar_data(model.preset(preset));
    if (weights.empty()) {
        if (model.presets().empty())
            throw UsageError("model has no scalar presets; pass --weights and --q");
        return scalar_data(model.presets().front());
    }
    Json j;
    try {
        j = Json::parse(weights);
    } catch (const nlohmann::json::parse_error& e) {
        throw UsageError("--weights is not valid JSON: " + std::string(e.what()));
    }
    ScalarData sd;
    sd.q = q;
    // either the bare weights object or the full {"q":..,"weights":{..}} form
    const Json& w = j.contains("weights") ? j.at("weights") : j;
    if (j.contains("q"))
        sd.q = j.at("q").get<long>();
    for (auto it = w.begin(); it != w.end(); ++it)
        sd.weights[it.key()] = it.value().get<std::vector<long>>();
    return sd;
}

DegreeMultiset parse_degrees(const Json& j, const std::string& what)
{
    if (j.is_string() && j.get<std::string>() == "all")
        return DegreeMultiset::all_degrees();
    if (!j.is_array())
        throw UsageError(what + ": expected a degree array or \"all\"");
    return DegreeMultiset::of(j.get<std::vector<int>>());
}

std::vector<ColumnSpec> parse_columns(const std::string& arg)
{
    std::string text = arg;
    if (!arg.empty() && arg[0] == '@')
        text = read_file(arg.substr(1));
    Json j;
    try {
        j = Json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw UsageError("--columns is not valid JSON: " + std::string(e.what()));
    }
    const Json& jc = j.contains("columns") ? j.at("columns") : j;
    std::vector<ColumnSpec> cols;
    for (std::size_t i = 0; i < jc.size(); ++i) {
        ColumnSpec c;
        c.codim = jc[i].at("codim").get<int>();
        c.generator_degrees =
            parse_degrees(jc[i].at("degrees"), "columns[" + std::to_string(i) + "].degrees");
        if (jc[i].contains("multiplicity"))
            c.multiplicity = jc[i].at("multiplicity").get<int>();
        if (jc[i].contains("label"))
            c.label = jc[i].at("label").get<std::string>();
        cols.push_back(std::move(c));
    }
    return cols;
}

std::vector<ColumnSpec> builtin_columns(const std::string& name, int smax)
{
    if (name == "porteous-k0") {
        std::vector<ColumnSpec> cols;
        for (int s = 0; s <= smax; ++s)
            cols.push_back(
                {s * s, DegreeMultiset::copies(2, s), 1, "U(" + std::to_string(s) + ")^2"});
        return cols;
    }
    if (name == "singularities") {
        std::vector<ColumnSpec> cols;
        cols.push_back({0, DegreeMultiset::of({}), 1, "A0"});
        for (int i = 1; i <= smax; ++i)
            cols.push_back({i, DegreeMultiset::of({1}), 1, "A" + std::to_string(i)});
        return cols;
    }
    throw UsageError("unknown built-in table " + name +
                     "; expected porteous-k0 or singularities");
}

Json columns_json(const std::vector<ColumnSpec>& cols)
{
    Json arr = Json::array();
    for (const ColumnSpec& c : cols) {
        Json jc;
        jc["codim"] = c.codim;
        jc["degrees"] = c.generator_degrees.unbounded_all ? Json("all")
                                                          : Json(c.generator_degrees.degrees);
        jc["multiplicity"] = c.multiplicity;
        if (!c.label.empty())
            jc["label"] = c.label;
        arr.push_back(std::move(jc));
    }
    return arr;
}

void emit(const Json& j, const std::string& format, const std::string& text)
{
    if (format == "json")
        std::cout << j.dump(2) << "\n";
    else
        std::cout << text;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Thom polynomials of group-representation orbits via restriction equations"};
    app.require_subcommand(1);
    std::string format = "text";
    app.add_option("--format", format, "output format: text (default) or json")
        ->check(CLI::IsMember({"text", "json"}));

    auto* cat = app.add_subcommand("catalog", "list the built-in catalogs or show one as JSON");
    std::string cat_action = "list";
    TargetArgs cat_ta;
    cat->add_option("action", cat_action, "list or show")->check(CLI::IsMember({"list", "show"}));
    cat->add_option("name", cat_ta.target, "catalog name for show");
    cat->add_option("--n", cat_ta.n);
    cat->add_option("--k", cat_ta.k);
    cat->add_option("--m", cat_ta.m);
    cat->add_flag("--force", cat_ta.force);

    auto* tp = app.add_subcommand("tp", "solve the restriction equations for an orbit");
    TargetArgs tp_ta;
    add_target_options(tp, tp_ta, true);
    bool tp_quotient = false;
    tp->add_flag("--quotient", tp_quotient, "also rewrite the answer in quotient variables h_i");

    auto* verify = app.add_subcommand("verify", "check a candidate against all equations");
    TargetArgs v_ta;
    add_target_options(verify, v_ta, true);
    std::string v_candidate;
    verify->add_option("--candidate", v_candidate, "candidate polynomial (JSON terms or @file)")
        ->required();

    auto* restr = app.add_subcommand("restrict", "restrict a polynomial to an orbit");
    TargetArgs r_ta;
    add_target_options(restr, r_ta, true);
    std::string r_poly;
    restr->add_option("--poly", r_poly, "polynomial over the ambient alphabet (JSON or @file)")
        ->required();

    auto* ideal =
        app.add_subcommand("ideal-member", "test membership in the avoiding ideal of an orbit");
    TargetArgs i_ta;
    add_target_options(ideal, i_ta, true);
    std::string i_poly;
    ideal->add_option("--poly", i_poly, "polynomial over the ambient alphabet (JSON or @file)")
        ->required();

    auto* proj = app.add_subcommand("projective", "projective Thom polynomial");
    TargetArgs p_ta;
    add_target_options(proj, p_ta, true);
    std::string p_preset, p_weights;
    long p_q = 1;
    proj->add_option("--preset", p_preset, "named scalar preset of the model");
    proj->add_option("--weights", p_weights, "per-factor root weights as JSON");
    proj->add_option("--q", p_q, "scalar exponent q (with --weights)");

    auto* deg = app.add_subcommand("degree", "degree of the projectivized orbit closure");
    TargetArgs d_ta;
    add_target_options(deg, d_ta, true);
    std::string d_preset, d_weights;
    long d_q = 1;
    deg->add_option("--preset", d_preset, "named scalar preset of the model");
    deg->add_option("--weights", d_weights, "per-factor root weights as JSON");
    deg->add_option("--q", d_q, "scalar exponent q (with --weights)");

    auto* kaz = app.add_subcommand("kazarian", "E1 rank tables and consistency checks");
    std::string kaz_action;
    kaz->add_option("action", kaz_action, "ranks | check | predict | euler")
        ->required()
        ->check(CLI::IsMember({"ranks", "check", "predict", "euler"}));
    std::string kz_columns, kz_table, kz_ambient = "all";
    int kz_maxt = 8, kz_codim = -1, kz_n = -1, kz_smax = 3;
    kaz->add_option("--columns", kz_columns, "column spec JSON (or @file)");
    kaz->add_option("--table", kz_table, "built-in columns: porteous-k0 | singularities");
    kaz->add_option("--smax", kz_smax, "largest column of the built-in tables");
    kaz->add_option("--max-t", kz_maxt, "largest total complex degree");
    kaz->add_option("--ambient", kz_ambient, "ambient degrees: \"all\" or a JSON array");
    kaz->add_option("--codim", kz_codim, "target codimension for predict");
    kaz->add_option("--n", kz_n, "argument of the Euler partition identity");

    CLI11_PARSE(app, argc, argv);

    try {
        if (cat->parsed()) {
            if (cat_action == "list") {
                Json j = Json::array();
                j.push_back({{"name", "porteous"},
                             {"params", "--n, --k"},
                             {"orbits", "Sigma_s, s = 0..n"}});
                j.push_back({{"name", "lambda2"},
                             {"params", "--n"},
                             {"orbits", "Sigma_r by corank, step 2"}});
                j.push_back({{"name", "s2"}, {"params", "--n"}, {"orbits", "Sigma_r, r = 0..n"}});
                j.push_back({{"name", "gl2"},
                             {"params", "--n"},
                             {"orbits", "eta_0 and eta_i, i = 1..n/2 (partial model)"}});
                j.push_back({{"name", "an"}, {"params", "--k, --m"}, {"orbits", "A_m"}});
                std::ostringstream text;
                for (const auto& e : j)
                    text << e["name"].get<std::string>() << "  (" << e["params"].get<std::string>()
                         << ")  orbits: " << e["orbits"].get<std::string>() << "\n";
                emit(j, format, text.str());
                return 0;
            }
            RepresentationModel m = resolve_model(cat_ta);
            std::cout << model_to_json(m).dump(2) << "\n";
            return 0;
        }
        if (tp->parsed()) {
            RepresentationModel m = resolve_model(tp_ta);
            std::string orbit = resolve_orbit(m, tp_ta);
            TpResult r = solve_tp(m, orbit);
            Json j = tp_result_json(r);
            std::ostringstream text;
            text << "tp(" << orbit << ") = " << r.polynomial.str() << "\n";
            if (!r.unique())
                text << "non-unique: kernel dimension " << r.diagnostics.kernel_dim << "\n";
            if (tp_quotient) {
                QuotientForm f = quotient_reduce(r.polynomial);
                if (f.status == QuotientStatus::InSubring) {
                    j["quotient"] = polynomial_to_json(f.q);
                    j["rank_truncated"] = f.rank_truncated;
                    text << "tpq = " << f.q.str()
                         << (f.rank_truncated ? "  [rank-truncated]" : "") << "\n";
                } else {
                    j["quotient"] = nullptr;
                    text << "tpq: not in the quotient-variable subring\n";
                }
            }
            emit(j, format, text.str());
            return 0;
        }
        if (verify->parsed()) {
            RepresentationModel m = resolve_model(v_ta);
            std::string orbit = resolve_orbit(m, v_ta);
            GradedPolynomial cand = parse_poly_arg(v_candidate, m.ambient(), "--candidate");
            VerifyReport rep = verify_tp(m, orbit, cand);
            Json entries = Json::array();
            std::ostringstream text;
            for (const VerifyEntry& e : rep.entries) {
                const char* kind = e.kind == EquationKind::Principal     ? "principal"
                                   : e.kind == EquationKind::Homogeneous ? "homogeneous"
                                                                         : "closure";
                entries.push_back({{"orbit", e.orbit},
                                   {"kind", kind},
                                   {"passed", e.passed},
                                   {"residual", polynomial_to_json(e.residual)}});
                text << (e.passed ? "pass" : "FAIL") << "  " << kind << " @ " << e.orbit;
                if (!e.passed)
                    text << "  residual = " << e.residual.str();
                text << "\n";
            }
            Json j{{"orbit", orbit}, {"all_passed", rep.all_passed}, {"entries", entries}};
            emit(j, format, text.str());
            return rep.all_passed ? 0 : 1;
        }
        if (restr->parsed()) {
            RepresentationModel m = resolve_model(r_ta);
            std::string orbit = resolve_orbit(m, r_ta);
            GradedPolynomial p = parse_poly_arg(r_poly, m.ambient(), "--poly");
            GradedPolynomial image = restrict_to_orbit(m, orbit, p);
            emit(polynomial_to_json(image), format, image.str() + "\n");
            return 0;
        }
        if (ideal->parsed()) {
            RepresentationModel m = resolve_model(i_ta);
            std::string orbit = resolve_orbit(m, i_ta);
            GradedPolynomial p = parse_poly_arg(i_poly, m.ambient(), "--poly");
            IdealMembership r = avoiding_ideal_contains(m, orbit, p);
            Json j{{"orbit", orbit}, {"contains", r.contains}};
            std::ostringstream text;
            if (r.contains) {
                text << "member of the avoiding ideal of " << orbit << "\n";
            } else {
                j["witness"] = r.witness_orbit;
                j["residual"] = polynomial_to_json(r.residual);
                text << "not a member; restriction to " << r.witness_orbit << " is "
                     << r.residual.str() << "\n";
            }
            emit(j, format, text.str());
            return r.contains ? 0 : 1;
        }
        if (proj->parsed()) {
            RepresentationModel m = resolve_model(p_ta);
            std::string orbit = resolve_orbit(m, p_ta);
            ScalarData sd = resolve_scalars(m, p_preset, p_weights, p_q);
            GradedPolynomial ptp = projective_tp(m, orbit, sd);
            emit(polynomial_to_json(ptp), format, "tp(P " + orbit + ") = " + ptp.str() + "\n");
            return 0;
        }
        if (deg->parsed()) {
            RepresentationModel m = resolve_model(d_ta);
            std::string orbit = resolve_orbit(m, d_ta);
            ScalarData sd = resolve_scalars(m, d_preset, d_weights, d_q);
            Integer degree = projective_degree(m, orbit, sd);
            emit(Json{{"orbit", orbit}, {"degree", degree.get_str()}}, format,
                 degree.get_str() + "\n");
            return 0;
        }
        if (kaz->parsed()) {
            if (kaz_action == "euler") {
                if (kz_n < 0)
                    throw UsageError("kazarian euler needs --n");
                bool ok = euler_identity_check(kz_n);
                emit(Json{{"n", kz_n}, {"holds", ok}}, format,
                     std::string(ok ? "holds" : "FAILS") + "\n");
                return ok ? 0 : 1;
            }
            std::vector<ColumnSpec> cols;
            if (!kz_columns.empty())
                cols = parse_columns(kz_columns);
            else if (!kz_table.empty())
                cols = builtin_columns(kz_table, kz_smax);
            else
                throw UsageError("pass --columns or --table");
            DegreeMultiset ambient =
                kz_ambient == "all"
                    ? DegreeMultiset::all_degrees()
                    : DegreeMultiset::of(Json::parse(kz_ambient).get<std::vector<int>>());
            if (kaz_action == "ranks") {
                RankTable t = e1_ranks(cols, kz_maxt);
                Json rows = Json::array();
                for (int d = 0; d <= kz_maxt; ++d) {
                    Json row = Json::array();
                    for (std::size_t c = 0; c < cols.size(); ++c)
                        row.push_back(t.entry(d, c));
                    rows.push_back(std::move(row));
                }
                emit(Json{{"columns", columns_json(cols)}, {"entries", rows}}, format, t.text());
                return 0;
            }
            if (kaz_action == "check") {
                RankTable t = e1_ranks(cols, kz_maxt);
                std::vector<long long> res = diagonal_check(t, ambient, kz_maxt);
                bool all_zero = true;
                std::ostringstream text;
                for (int d = 0; d <= kz_maxt; ++d) {
                    all_zero = all_zero && res[std::size_t(d)] == 0;
                    text << "t=" << d << " residual " << res[std::size_t(d)] << "\n";
                }
                emit(Json{{"residuals", res}, {"consistent", all_zero}}, format, text.str());
                return all_zero ? 0 : 1;
            }
            if (kz_codim < 1)
                throw UsageError("kazarian predict needs --codim");
            long long count = predict_stratum_count(cols, ambient, kz_codim);
            emit(Json{{"codim", kz_codim}, {"strata", count}}, format,
                 std::to_string(count) + "\n");
            return 0;
        }
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
