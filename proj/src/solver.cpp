#include "tpoly/solver.hpp"

#include "tpoly/schur.hpp"

#include <algorithm>
#include <map>

namespace tpoly {

TpResult solve_tp(const RepresentationModel& model, const std::string& orbit,
                  const SolveOptions& opts)
{
    const OrbitDescriptor& target = model.orbit(orbit);
    const int d = target.codim;
    if (opts.include_principal) {
        if (!target.euler)
            throw Error("orbit " + orbit + " has no Euler class; cannot form the principal equation");
        if (target.euler->is_zero() || !target.euler->is_homogeneous(d))
            throw Error("orbit " + orbit + " fails the Euler condition");
    }

    std::vector<EquationBlock> blocks;
    std::vector<std::string> used;
    for (const OrbitDescriptor& o : model.orbits()) {
        if (o.name == orbit) {
            if (opts.include_principal) {
                blocks.push_back({o.restriction, *o.euler, o.name});
                used.push_back(o.name);
            }
            continue;
        }
        if (o.codim <= d) {
            blocks.push_back({o.restriction, GradedPolynomial::zero(o.stabilizer), o.name});
            used.push_back(o.name);
        }
    }

    LinearSolution sol = linear_solve(model.ambient(), d, blocks);
    if (sol.status == SolveStatus::Inconsistent)
        throw Error("restriction equations for " + orbit + " are inconsistent (block " +
                    sol.witness + "); the model data is bad");
    if (sol.status == SolveStatus::Unique && opts.include_principal &&
        !sol.particular.is_integral())
        throw Error("unique solution for " + orbit +
                    " is not integral; the model's sign or degree conventions are off");

    TpResult out{orbit, d, std::move(sol.particular), {}, std::move(sol.kernel)};
    out.diagnostics.num_equations = sol.num_equations;
    out.diagnostics.num_unknowns = sol.num_unknowns;
    out.diagnostics.kernel_dim = sol.kernel_dim;
    out.diagnostics.orbits_used = std::move(used);
    return out;
}

VerifyReport verify_tp(const RepresentationModel& model, const std::string& orbit,
                       const GradedPolynomial& candidate)
{
    const OrbitDescriptor& target = model.orbit(orbit);
    const int d = target.codim;
    if (!candidate.is_homogeneous(d))
        throw Error("candidate is not homogeneous of degree " + std::to_string(d));
    if (!target.euler)
        throw Error("orbit " + orbit + " has no Euler class to verify against");

    VerifyReport report;
    auto add = [&](const std::string& name, EquationKind kind, GradedPolynomial residual) {
        VerifyEntry e{name, kind, residual.is_zero(), std::move(residual)};
        report.all_passed = report.all_passed && e.passed;
        report.entries.push_back(std::move(e));
    };
    for (const OrbitDescriptor& o : model.orbits()) {
        if (o.name == orbit) {
            add(o.name, EquationKind::Principal, *target.euler - o.restriction.apply(candidate));
        } else if (o.codim <= d) {
            add(o.name, EquationKind::Homogeneous, o.restriction.apply(candidate));
        } else if (model.has_closure() && !model.in_closure(orbit, o.name)) {
            add(o.name, EquationKind::Closure, o.restriction.apply(candidate));
        }
    }
    return report;
}

GradedPolynomial restrict_to_orbit(const RepresentationModel& model, const std::string& orbit,
                                   const GradedPolynomial& p)
{
    return model.orbit(orbit).restriction.apply(p);
}

IdealMembership avoiding_ideal_contains(const RepresentationModel& model,
                                        const std::string& orbit, const GradedPolynomial& p)
{
    if (!model.has_closure())
        throw Error("model " + model.name() + " carries no closure order");
    if (!p.is_zero() && !p.homogeneous_degree())
        throw Error("avoiding-ideal membership is tested degree by degree; p must be homogeneous");
    IdealMembership out;
    out.residual = GradedPolynomial::zero(model.ambient());
    for (const OrbitDescriptor* o : model.outside_closure(orbit)) {
        GradedPolynomial image = o->restriction.apply(p);
        if (!image.is_zero()) {
            out.contains = false;
            out.witness_orbit = o->name;
            out.residual = std::move(image);
            return out;
        }
    }
    return out;
}

namespace {

struct QuotientSetup {
    std::vector<std::size_t> den_vars;  // ambient indices, ascending degree
    std::vector<std::size_t> num_vars;
    int den_rank = 0;
    int num_rank = 0;
};

QuotientSetup quotient_setup(const AlphabetPtr& ambient)
{
    if (ambient->factors().size() != 2)
        throw Error("quotient variables need a two-factor (denominator, numerator) alphabet");
    QuotientSetup s;
    const std::string& da = ambient->factors()[0].tag;
    const std::string& nu = ambient->factors()[1].tag;
    s.den_vars = ambient->factor_vars(da);
    s.num_vars = ambient->factor_vars(nu);
    s.den_rank = int(s.den_vars.size());
    s.num_rank = int(s.num_vars.size());
    for (std::size_t i = 0; i < s.den_vars.size(); ++i)
        if (ambient->var(s.den_vars[i]).degree != int(i) + 1)
            throw Error("denominator factor must consist of class variables of degree 1..rank");
    for (std::size_t i = 0; i < s.num_vars.size(); ++i)
        if (ambient->var(s.num_vars[i]).degree != int(i) + 1)
            throw Error("numerator factor must consist of class variables of degree 1..rank");
    return s;
}

AlphabetPtr h_alphabet_for(int d)
{
    std::vector<Variable> vars;
    for (int i = 1; i <= d; ++i)
        vars.push_back({"h" + std::to_string(i), i, "quotient", VarKind::Class});
    return make_alphabet(std::move(vars), {{"quotient", d}});
}

/* number of denominator-variable factors in a monomial */
int a_count(const Monomial& m, const std::vector<bool>& is_den)
{
    int c = 0;
    for (const auto& [idx, e] : m.exps())
        if (is_den[std::size_t(idx)])
            c += e;
    return c;
}

GradedPolynomial a_slice(const GradedPolynomial& p, const std::vector<bool>& is_den, int g)
{
    GradedPolynomial out(p.alphabet());
    for (const auto& [m, c] : p.terms())
        if (a_count(m, is_den) == g)
            out.add_term(m, c);
    return out;
}

}  // namespace

GradedPolynomial quotient_expand(const GradedPolynomial& q, const AlphabetPtr& ambient)
{
    QuotientSetup setup = quotient_setup(ambient);
    int d = q.alphabet() ? int(q.alphabet()->size()) : 0;
    Series numer{GradedPolynomial::constant(ambient, 1)};
    for (std::size_t v : setup.num_vars)
        numer.push_back(GradedPolynomial::variable(ambient, v));
    Series denom{GradedPolynomial::constant(ambient, 1)};
    for (std::size_t v : setup.den_vars)
        denom.push_back(GradedPolynomial::variable(ambient, v));
    Series h = quotient_series(numer, denom, d);
    std::vector<GradedPolynomial> images(h.begin() + 1, h.end());
    Substitution sub(q.alphabet(), ambient, std::move(images));
    return sub.apply(q);
}

QuotientForm quotient_reduce(const GradedPolynomial& p)
{
    const AlphabetPtr& ambient = p.alphabet();
    QuotientSetup setup = quotient_setup(ambient);
    QuotientForm out;
    if (p.is_zero()) {
        out.h_alphabet = h_alphabet_for(0);
        out.q = GradedPolynomial::zero(out.h_alphabet);
        return out;
    }
    auto dopt = p.homogeneous_degree();
    if (!dopt)
        throw Error("quotient_reduce expects a homogeneous polynomial");
    const int d = *dopt;
    const int n = setup.den_rank, nk = setup.num_rank;
    out.rank_truncated = nk < d;
    out.h_alphabet = h_alphabet_for(d);

    // free coordinates (a_1..a_n, H_1..H_nk): b_i = sum_l a_l H_{i-l}
    std::vector<Variable> fvars;
    for (int i = 1; i <= n; ++i)
        fvars.push_back({"a" + std::to_string(i), i, "den", VarKind::Class});
    for (int i = 1; i <= nk; ++i)
        fvars.push_back({"H" + std::to_string(i), i, "num", VarKind::Class});
    AlphabetPtr F = make_alphabet(std::move(fvars), {{"den", n}, {"num", nk}});
    std::vector<bool> is_den(F->size(), false);
    for (int i = 0; i < n; ++i)
        is_den[std::size_t(i)] = true;
    auto a_var = [&](int l) { return GradedPolynomial::variable(F, std::size_t(l - 1)); };
    auto H_var = [&](int i) { return GradedPolynomial::variable(F, std::size_t(n + i - 1)); };

    std::vector<GradedPolynomial> images;
    for (int i = 1; i <= n; ++i)
        images.push_back(a_var(i));
    for (int i = 1; i <= nk; ++i) {
        GradedPolynomial img = H_var(i);
        for (int l = 1; l <= std::min(i - 1, n); ++l)
            img += a_var(l) * H_var(i - l);
        if (i <= n)
            img += a_var(i);
        images.push_back(std::move(img));
    }
    // ambient order may interleave the factors; place images accordingly
    std::vector<GradedPolynomial> ordered(ambient->size(), GradedPolynomial::zero(F));
    for (int i = 0; i < n; ++i)
        ordered[setup.den_vars[std::size_t(i)]] = images[std::size_t(i)];
    for (int i = 0; i < nk; ++i)
        ordered[setup.num_vars[std::size_t(i)]] = images[std::size_t(n + i)];
    Substitution rewrite(ambient, F, std::move(ordered));
    GradedPolynomial residual = rewrite.apply(p);

    // h_j over the free coordinates and their leading (minimal a-count) slices
    std::vector<GradedPolynomial> h(std::size_t(d) + 1, GradedPolynomial::zero(F));
    h[0] = GradedPolynomial::constant(F, 1);
    std::vector<int> stage_of(std::size_t(d) + 1, 0);
    for (int j = 1; j <= d; ++j) {
        if (j <= nk) {
            h[std::size_t(j)] = H_var(j);
        } else {
            GradedPolynomial hj(F);
            for (int l = 1; l <= std::min(n, j); ++l)
                hj -= a_var(l) * h[std::size_t(j - l)];
            h[std::size_t(j)] = std::move(hj);
        }
        int st = -1;
        for (const auto& [m, c] : h[std::size_t(j)].terms()) {
            int g = a_count(m, is_den);
            if (st < 0 || g < st)
                st = g;
        }
        stage_of[std::size_t(j)] = std::max(st, 0);
    }
    std::vector<GradedPolynomial> sigma(std::size_t(d) + 1, GradedPolynomial::zero(F));
    for (int j = 1; j <= d; ++j)
        sigma[std::size_t(j)] = a_slice(h[std::size_t(j)], is_den, stage_of[std::size_t(j)]);

    // candidate h-monomials grouped by the a-count at which they first appear
    std::map<int, std::vector<Partition>> by_stage;
    for (const Partition& lam : partitions_of(d)) {
        int st = 0;
        for (int part : lam.parts)
            st += stage_of[std::size_t(part)];
        by_stage[st].push_back(lam);
    }

    auto h_monomial = [&](const Partition& lam) {
        std::map<int, int> mult;
        for (int part : lam.parts)
            ++mult[part];
        std::vector<Monomial::Entry> exps;
        for (const auto& [part, e] : mult)
            exps.emplace_back(int(part - 1), e);
        return GradedPolynomial::monomial(out.h_alphabet, Monomial::make(*out.h_alphabet, exps),
                                          1);
    };
    auto expansion = [&](const Partition& lam) {
        GradedPolynomial e = GradedPolynomial::constant(F, 1);
        for (int part : lam.parts)
            e = e * h[std::size_t(part)];
        return e;
    };
    struct Pending {
        GradedPolynomial h_combo;
        GradedPolynomial expansion;
    };
    std::vector<Pending> pending;
    GradedPolynomial q(out.h_alphabet);

    for (int g = 0; g <= d; ++g) {
        if (g == 0) {
            // the a-free slice is a direct read-off: h_j = H_j there
            GradedPolynomial slice = a_slice(residual, is_den, 0);
            for (const auto& [m, c] : slice.terms()) {
                std::vector<int> parts;
                for (const auto& [idx, e] : m.exps())
                    for (int t = 0; t < e; ++t)
                        parts.push_back(idx - n + 1);
                std::sort(parts.rbegin(), parts.rend());
                Partition lam(parts);
                q += h_monomial(lam).scaled(c);
                residual -= expansion(lam).scaled(c);
            }
            continue;
        }
        // columns: fresh candidates at this stage plus still-undetermined combos
        std::vector<Pending> cols;
        auto it = by_stage.find(g);
        if (it != by_stage.end())
            for (const Partition& lam : it->second)
                cols.push_back({h_monomial(lam), expansion(lam)});
        for (Pending& pd : pending)
            cols.push_back(std::move(pd));
        pending.clear();

        GradedPolynomial rhs = a_slice(residual, is_den, g);
        if (cols.empty()) {
            if (!rhs.is_zero()) {
                out.status = QuotientStatus::NotInSubring;
                return out;
            }
            continue;
        }
        // exact RREF over the slice monomials
        std::map<Monomial, std::size_t, MonoLess> row_of;
        auto row_id = [&](const Monomial& m) {
            auto [itr, fresh] = row_of.emplace(m, row_of.size());
            return itr->second;
        };
        std::vector<std::vector<Rational>> rows;
        auto put = [&](std::size_t r, std::size_t c, const Rational& v) {
            while (rows.size() <= r)
                rows.emplace_back(cols.size() + 1, Rational(0));
            rows[r][c] += v;
        };
        for (std::size_t c = 0; c < cols.size(); ++c) {
            GradedPolynomial col_slice = a_slice(cols[c].expansion, is_den, g);
            for (const auto& [m, v] : col_slice.terms())
                put(row_id(m), c, v);
        }
        for (const auto& [m, v] : rhs.terms())
            put(row_id(m), cols.size(), v);
        for (auto& r : rows)
            r.resize(cols.size() + 1, Rational(0));
        std::vector<std::size_t> pivots = rref_exact(rows);
        std::vector<Rational> x(cols.size(), Rational(0));
        std::vector<bool> is_pivot(cols.size(), false);
        for (std::size_t r = 0; r < pivots.size(); ++r) {
            if (pivots[r] == cols.size()) {
                out.status = QuotientStatus::NotInSubring;
                return out;
            }
            is_pivot[pivots[r]] = true;
            x[pivots[r]] = rows[r][cols.size()];
        }
        for (std::size_t c = 0; c < cols.size(); ++c) {
            if (x[c] != 0) {
                q += cols[c].h_combo.scaled(x[c]);
                residual -= cols[c].expansion.scaled(x[c]);
            }
        }
        // kernel directions stay undetermined and ride along to later slices
        for (std::size_t f = 0; f < cols.size(); ++f) {
            if (is_pivot[f])
                continue;
            Pending combo{cols[f].h_combo, cols[f].expansion};
            for (std::size_t r = 0; r < pivots.size(); ++r) {
                const Rational& v = rows[r][f];
                if (v != 0) {
                    combo.h_combo -= cols[pivots[r]].h_combo.scaled(v);
                    combo.expansion -= cols[pivots[r]].expansion.scaled(v);
                }
            }
            pending.push_back(std::move(combo));
        }
    }
    if (!residual.is_zero()) {
        out.status = QuotientStatus::NotInSubring;
        return out;
    }
    // pending combos that survived every slice expand to zero, i.e. they are
    // genuine relations among the h-monomials
    out.unique = pending.empty();
    out.q = std::move(q);
    return out;
}

GradedPolynomial unfold_pullback(const GradedPolynomial& p, int n, int nk)
{
    const AlphabetPtr& ambient = p.alphabet();
    QuotientSetup setup = quotient_setup(ambient);
    if (n > setup.den_rank || nk > setup.num_rank)
        throw Error("unfold_pullback target ranks exceed the source ranks");
    if (n < 0 || nk < 0)
        throw Error("unfold_pullback needs nonnegative ranks");
    std::vector<Variable> tvars;
    const std::string da = ambient->factors()[0].tag;
    const std::string nu = ambient->factors()[1].tag;
    for (int i = 0; i < n; ++i)
        tvars.push_back(ambient->var(setup.den_vars[std::size_t(i)]));
    for (int i = 0; i < nk; ++i)
        tvars.push_back(ambient->var(setup.num_vars[std::size_t(i)]));
    AlphabetPtr target = make_alphabet(std::move(tvars), {{da, n}, {nu, nk}});
    std::vector<GradedPolynomial> images(ambient->size(), GradedPolynomial::zero(target));
    for (int i = 0; i < n; ++i)
        images[setup.den_vars[std::size_t(i)]] =
            GradedPolynomial::variable(target, ambient->var(setup.den_vars[std::size_t(i)]).name);
    for (int i = 0; i < nk; ++i)
        images[setup.num_vars[std::size_t(i)]] =
            GradedPolynomial::variable(target, ambient->var(setup.num_vars[std::size_t(i)]).name);
    Substitution sub(ambient, target, std::move(images));
    return sub.apply(p);
}

}  // namespace tpoly
