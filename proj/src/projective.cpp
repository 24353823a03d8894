#include "tpoly/projective.hpp"

#include "tpoly/schur.hpp"
#include "tpoly/solver.hpp"

#include <algorithm>

namespace tpoly {

ScalarData scalar_data(const ScalarPreset& preset)
{
    ScalarData sd;
    sd.q = preset.q;
    sd.weights = preset.weights;
    return sd;
}

namespace {

Integer binomial(int m, int j)
{
    if (j < 0 || j > m)
        return 0;
    Integer b;
    mpz_bin_uiui(b.get_mpz_t(), (unsigned long)m, (unsigned long)j);
    return b;
}

void check_scalar_data(const RepresentationModel& model, const ScalarData& sd)
{
    if (sd.q == 0)
        throw Error("scalar exponent q must be nonzero");
    const Alphabet& amb = *model.ambient();
    for (const Factor& f : amb.factors()) {
        if (!f.rank)
            throw Error("factor " + f.tag + " has unbounded rank; projectivization needs finite ranks");
        auto it = sd.weights.find(f.tag);
        if (it == sd.weights.end())
            throw Error("scalar data has no weights for factor " + f.tag);
        if (int(it->second.size()) != *f.rank)
            throw Error("factor " + f.tag + " needs " + std::to_string(*f.rank) + " root weights");
    }
}

GradedPolynomial resolve_tp(const RepresentationModel& model, const std::string& orbit,
                            const std::optional<GradedPolynomial>& tp)
{
    if (tp)
        return *tp;
    return solve_tp(model, orbit).polynomial;
}

}  // namespace

GradedPolynomial xi_coefficient(const GradedPolynomial& p, int power)
{
    const AlphabetPtr& alpha = p.alphabet();
    std::size_t xi = alpha->require("xi");
    // rebuild the alphabet without the hyperplane class
    std::vector<Variable> vars;
    std::vector<int> remap(alpha->size(), -1);
    for (std::size_t i = 0; i < alpha->size(); ++i) {
        if (i == xi)
            continue;
        remap[i] = int(vars.size());
        vars.push_back(alpha->var(i));
    }
    // keep every factor that still owns a variable
    std::vector<Factor> factors;
    for (const Factor& f : alpha->factors()) {
        bool used = false;
        for (const Variable& v : vars)
            used = used || v.factor == f.tag;
        if (used)
            factors.push_back(f);
    }
    AlphabetPtr base = make_alphabet(std::move(vars), std::move(factors));
    GradedPolynomial out(base);
    for (const auto& [m, c] : p.terms()) {
        if (m.exponent(int(xi)) != power)
            continue;
        std::vector<Monomial::Entry> exps;
        for (const auto& [idx, e] : m.exps())
            if (idx != int(xi))
                exps.emplace_back(remap[std::size_t(idx)], e);
        out.add_term(Monomial::make(*base, exps), c);
    }
    return out;
}

GradedPolynomial projective_tp(const RepresentationModel& model, const std::string& orbit,
                               const ScalarData& sd, const std::optional<GradedPolynomial>& tp)
{
    check_scalar_data(model, sd);
    const OrbitDescriptor& target = model.orbit(orbit);
    const int d = target.codim;
    if (model.dimension() && long(d) > *model.dimension())
        throw Error("orbit " + orbit + " has codimension above dim V; no projectivization");
    GradedPolynomial affine = resolve_tp(model, orbit, tp);
    const AlphabetPtr& amb = model.ambient();
    if (!affine.is_homogeneous(d) || !same_alphabet(affine.alphabet(), amb))
        throw Error("affine Thom polynomial does not match the orbit");

    // ambient classes plus the hyperplane class
    if (amb->index_of("xi"))
        throw Error("ambient alphabet already uses the name xi");
    std::vector<Variable> vars = amb->variables();
    std::vector<Factor> factors = amb->factors();
    vars.push_back({"xi", 1, "proj", VarKind::Class});
    factors.push_back({"proj", 1});
    AlphabetPtr ext = make_alphabet(std::move(vars), std::move(factors));
    GradedPolynomial xi = GradedPolynomial::variable(ext, "xi");

    GradedPolynomial cur(ext);
    {
        // inject the affine tp
        std::vector<GradedPolynomial> inj;
        for (std::size_t i = 0; i < amb->size(); ++i)
            inj.push_back(GradedPolynomial::variable(ext, amb->var(i).name));
        cur = Substitution(amb, ext, std::move(inj)).apply(affine);
    }

    for (const Factor& f : amb->factors()) {
        const std::vector<long>& w = sd.weights.at(f.tag);
        if (w.empty())
            continue;
        std::vector<std::size_t> cls = ext->factor_vars(f.tag);
        const int m = int(cls.size());
        bool equal = std::all_of(w.begin(), w.end(), [&](long x) { return x == w[0]; });
        if (equal) {
            if (w[0] == 0)
                continue;
            // c_i -> sum_j binom(m-j, i-j) (w/q)^(i-j) c_j xi^(i-j)
            Rational t(w[0], sd.q);
            t.canonicalize();
            std::vector<GradedPolynomial> images;
            for (std::size_t v = 0; v < ext->size(); ++v)
                images.push_back(GradedPolynomial::variable(ext, v));
            for (int i = 1; i <= m; ++i) {
                GradedPolynomial img(ext);
                for (int j = 0; j <= i; ++j) {
                    Rational coeff = Rational(binomial(m - j, i - j)) * pow_rational(t, i - j);
                    if (coeff == 0)
                        continue;
                    GradedPolynomial cj =
                        j == 0 ? GradedPolynomial::constant(ext, 1)
                               : GradedPolynomial::variable(ext, cls[std::size_t(j - 1)]);
                    img += cj * xi.pow(i - j).scaled(coeff);
                }
                images[cls[std::size_t(i - 1)]] = std::move(img);
            }
            cur = Substitution(ext, ext, std::move(images)).apply(cur);
        } else {
            // unequal weights: shift each Chern root separately
            std::vector<Variable> rvars;
            std::vector<Factor> rfactors;
            for (std::size_t v = 0; v < ext->size(); ++v) {
                const Variable& var = ext->var(v);
                if (var.factor != f.tag)
                    rvars.push_back(var);
            }
            for (int r = 1; r <= m; ++r)
                rvars.push_back({f.tag + "_root" + std::to_string(r), 1, f.tag, VarKind::Root});
            for (const Factor& ff : ext->factors())
                rfactors.push_back(ff);
            AlphabetPtr withroots = make_alphabet(std::move(rvars), std::move(rfactors));
            std::vector<std::size_t> roots = withroots->factor_vars(f.tag);

            std::vector<GradedPolynomial> expand(ext->size(), GradedPolynomial::zero(withroots));
            for (std::size_t v = 0; v < ext->size(); ++v) {
                const Variable& var = ext->var(v);
                if (var.factor != f.tag)
                    expand[v] = GradedPolynomial::variable(withroots, var.name);
            }
            for (int i = 1; i <= m; ++i)
                expand[cls[std::size_t(i - 1)]] = elementary_symmetric(withroots, roots, i);
            cur = Substitution(ext, withroots, std::move(expand)).apply(cur);

            std::vector<GradedPolynomial> shift;
            GradedPolynomial xir = GradedPolynomial::variable(withroots, "xi");
            for (std::size_t v = 0; v < withroots->size(); ++v)
                shift.push_back(GradedPolynomial::variable(withroots, v));
            for (int r = 0; r < m; ++r) {
                Rational t(w[std::size_t(r)], sd.q);
                t.canonicalize();
                shift[roots[std::size_t(r)]] =
                    GradedPolynomial::variable(withroots, roots[std::size_t(r)]) + xir.scaled(t);
            }
            cur = Substitution(withroots, withroots, std::move(shift)).apply(cur);

            std::map<std::string, std::vector<std::string>> back;
            std::vector<std::string> class_names;
            for (std::size_t c : cls)
                class_names.push_back(ext->var(c).name);
            back[f.tag] = class_names;
            cur = roots_to_classes(cur, ext, back);
        }
    }
    if (!cur.is_homogeneous(d))
        throw Error("projective Thom polynomial lost homogeneity; scalar data is inconsistent");
    if (!cur.is_integral())
        throw Error("projective Thom polynomial is not integral; the scalar subgroup data (weights, q) does not match the representation");
    return cur;
}

Integer projective_degree(const RepresentationModel& model, const std::string& orbit,
                          const ScalarData& sd, const std::optional<GradedPolynomial>& tp)
{
    check_scalar_data(model, sd);
    const OrbitDescriptor& target = model.orbit(orbit);
    const int d = target.codim;
    if (model.dimension() && long(d) > *model.dimension())
        throw Error("orbit " + orbit + " has codimension above dim V; no projective degree");
    GradedPolynomial affine = resolve_tp(model, orbit, tp);
    const Alphabet& amb = *model.ambient();

    // numeric class values: c^f_i = e_i(weights of f)
    std::vector<Rational> value(amb.size(), Rational(0));
    for (const Factor& f : amb.factors()) {
        const std::vector<long>& w = sd.weights.at(f.tag);
        std::vector<std::size_t> cls = amb.factor_vars(f.tag);
        std::vector<Rational> e(cls.size() + 1, Rational(0));
        e[0] = 1;
        for (std::size_t r = 0; r < w.size(); ++r)
            for (std::size_t i = std::min(r + 1, cls.size()); i >= 1; --i)
                e[i] += e[i - 1] * w[r];
        for (std::size_t i = 0; i < cls.size(); ++i)
            value[cls[i]] = e[i + 1];
    }
    Rational total(0);
    for (const auto& [m, c] : affine.terms()) {
        Rational term = c;
        for (const auto& [idx, ex] : m.exps())
            term *= pow_rational(value[std::size_t(idx)], (unsigned long)ex);
        total += term;
    }
    total /= pow_rational(Rational(sd.q), (unsigned long)d);
    if (!is_integer(total) || total < 0)
        throw Error("projective degree " + total.get_str() +
                    " is not a nonnegative integer; the scalar data does not match");
    return total.get_num();
}

}  // namespace tpoly
