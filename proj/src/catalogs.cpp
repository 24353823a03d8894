#include "tpoly/catalogs.hpp"

#include "tpoly/schur.hpp"

#include <algorithm>

namespace tpoly {

namespace {

std::vector<std::string> indexed_names(const std::string& prefix, int count, int first = 1)
{
    std::vector<std::string> out;
    for (int i = 0; i < count; ++i)
        out.push_back(prefix + std::to_string(first + i));
    return out;
}

void append_class_block(std::vector<Variable>& vars, const std::string& prefix, int count,
                        const std::string& factor, int scale = 1)
{
    for (int i = 1; i <= count; ++i)
        vars.push_back({prefix + std::to_string(i), i * scale, factor, VarKind::Class});
}

/* degree-i part of the product of two total classes given by variable names */
GradedPolynomial product_part(const AlphabetPtr& alpha, const std::vector<std::string>& first,
                              const std::vector<std::string>& second, int i)
{
    GradedPolynomial out(alpha);
    for (int a = 0; a <= i; ++a) {
        int b = i - a;
        if (a > int(first.size()) || b > int(second.size()))
            continue;
        GradedPolynomial fa = a == 0 ? GradedPolynomial::constant(alpha, 1)
                                     : GradedPolynomial::variable(alpha, first[std::size_t(a - 1)]);
        GradedPolynomial fb = b == 0 ? GradedPolynomial::constant(alpha, 1)
                                     : GradedPolynomial::variable(alpha, second[std::size_t(b - 1)]);
        out += fa * fb;
    }
    return out;
}

}  // namespace

GradedPolynomial porteous_determinant(const Series& h, int s, int k)
{
    return schur(Partition::rectangle(s, s + k), h);
}

RepresentationModel catalog_porteous(int n, int k)
{
    if (n < 1 || k < 0)
        throw Error("catalog_porteous needs n >= 1, k >= 0");
    std::vector<Variable> avars;
    append_class_block(avars, "R", n, "source");
    append_class_block(avars, "L", n + k, "target");
    AlphabetPtr ambient = make_alphabet(std::move(avars), {{"source", n}, {"target", n + k}});

    std::vector<OrbitDescriptor> orbits;
    for (int s = 0; s <= n; ++s) {
        std::vector<Variable> svars;
        append_class_block(svars, "A", s, "ker");
        append_class_block(svars, "B", s + k, "coker");
        append_class_block(svars, "C", n - s, "common");
        AlphabetPtr stab = make_alphabet(
            std::move(svars), {{"ker", s}, {"coker", s + k}, {"common", n - s}});

        std::vector<std::string> an = indexed_names("A", s);
        std::vector<std::string> bn = indexed_names("B", s + k);
        std::vector<std::string> cn = indexed_names("C", n - s);
        std::vector<GradedPolynomial> images;
        for (int i = 1; i <= n; ++i)
            images.push_back(product_part(stab, an, cn, i));
        for (int i = 1; i <= n + k; ++i)
            images.push_back(product_part(stab, bn, cn, i));
        Substitution restriction(ambient, stab, std::move(images));

        // resultant of the two stabilizer Chern polynomials, as the rectangle
        // determinant in the quotient series of coker by ker
        Series hp = quotient_series(variable_series(stab, bn), variable_series(stab, an),
                                    std::max(0, 2 * s + k - 1));
        GradedPolynomial euler = porteous_determinant(hp, s, k);
        orbits.emplace_back("Sigma" + std::to_string(s), s * (s + k), stab,
                            std::move(restriction), std::move(euler));
    }
    std::vector<std::pair<std::string, std::string>> closure;
    for (int s = 0; s < n; ++s)
        closure.emplace_back("Sigma" + std::to_string(s), "Sigma" + std::to_string(s + 1));
    std::vector<ScalarPreset> presets;
    ScalarPreset target_scaling;
    target_scaling.name = "target-scaling";
    target_scaling.q = 1;
    target_scaling.weights["source"] = std::vector<long>(std::size_t(n), 0);
    target_scaling.weights["target"] = std::vector<long>(std::size_t(n + k), 1);
    presets.push_back(std::move(target_scaling));
    return RepresentationModel("porteous(" + std::to_string(n) + "," + std::to_string(k) + ")",
                               ambient, std::move(orbits), std::move(closure),
                               long(n) * (n + k), std::move(presets));
}

RepresentationModel catalog_bilinear(BilinearKind kind, int n)
{
    if (n < 1)
        throw Error("catalog_bilinear needs n >= 1");
    const bool sym = kind == BilinearKind::Symmetric;
    std::vector<Variable> avars;
    append_class_block(avars, "c", n, "gl");
    AlphabetPtr ambient = make_alphabet(std::move(avars), {{"gl", n}});

    std::vector<int> ranks;
    if (sym)
        for (int r = n; r >= 0; --r)
            ranks.push_back(r);
    else
        for (int r = n; r >= 0; r -= 2)
            ranks.push_back(r);

    std::vector<OrbitDescriptor> orbits;
    for (int r : ranks) {
        int psize = (n - r) / 2;
        std::vector<Variable> svars;
        append_class_block(svars, "c", r, "u");
        append_class_block(svars, "p", psize, "sp", 2);
        AlphabetPtr stab = make_alphabet(std::move(svars), {{"u", r}, {"sp", psize}});

        std::vector<GradedPolynomial> images;
        for (int i = 1; i <= n; ++i) {
            // c_i -> sum_l c_{i-2l} p_l with c_{>r} = 0, p_{>psize} = 0
            GradedPolynomial img(stab);
            for (int l = 0; 2 * l <= i; ++l) {
                int ci = i - 2 * l;
                if (ci > r || l > psize)
                    continue;
                GradedPolynomial cpart =
                    ci == 0 ? GradedPolynomial::constant(stab, 1)
                            : GradedPolynomial::variable(stab, "c" + std::to_string(ci));
                GradedPolynomial ppart =
                    l == 0 ? GradedPolynomial::constant(stab, 1)
                           : GradedPolynomial::variable(stab, "p" + std::to_string(l));
                img += cpart * ppart;
            }
            images.push_back(std::move(img));
        }
        Substitution restriction(ambient, stab, std::move(images));

        int codim = sym ? r * (r + 1) / 2 : r * (r - 1) / 2;
        Series cs = variable_series(stab, indexed_names("c", r));
        GradedPolynomial euler = schur(Partition::staircase(sym ? r : r - 1), cs);
        if (sym)
            euler = euler.scaled(pow_rational(Rational(2), (unsigned long)r));
        orbits.emplace_back("Sigma" + std::to_string(r), codim, stab, std::move(restriction),
                            std::move(euler));
    }
    // lower corank degenerates to higher corank
    std::sort(ranks.begin(), ranks.end());
    std::vector<std::pair<std::string, std::string>> closure;
    for (std::size_t i = 0; i + 1 < ranks.size(); ++i)
        closure.emplace_back("Sigma" + std::to_string(ranks[i]),
                             "Sigma" + std::to_string(ranks[i + 1]));
    std::vector<ScalarPreset> presets;
    ScalarPreset sq;
    sq.name = "scalar-squared";
    sq.q = 2;
    sq.weights["gl"] = std::vector<long>(std::size_t(n), 1);
    presets.push_back(std::move(sq));
    long dim = sym ? long(n) * (n + 1) / 2 : long(n) * (n - 1) / 2;
    return RepresentationModel(std::string(sym ? "s2(" : "lambda2(") + std::to_string(n) + ")",
                               ambient, std::move(orbits), std::move(closure), dim,
                               std::move(presets));
}

RepresentationModel catalog_gl2_sn(int n)
{
    if (n < 2)
        throw Error("catalog_gl2_sn needs n >= 2");
    AlphabetPtr ambient = class_alphabet("c", 2, "gl2");
    AlphabetPtr stab =
        make_alphabet({{"a", 1, "torus", VarKind::Class}}, {{"torus", 1}});
    GradedPolynomial a = GradedPolynomial::variable(stab, "a");

    std::vector<OrbitDescriptor> orbits;
    {
        Substitution restriction(ambient, stab, {a, GradedPolynomial::zero(stab)});
        Rational fact(1);
        for (int i = 2; i <= n; ++i)
            fact *= i;
        GradedPolynomial euler = a.pow(n - 1).scaled(fact);
        orbits.emplace_back("eta0", n - 1, stab, std::move(restriction), std::move(euler));
    }
    for (int i = 1; 2 * i <= n; ++i) {
        Substitution restriction(
            ambient, stab,
            {a.scaled(n - 2 * i), a.pow(2).scaled(Rational(-long(i) * (n - i)))});
        orbits.emplace_back("eta" + std::to_string(i), n - 2, stab, std::move(restriction),
                            std::nullopt);
    }
    std::vector<std::pair<std::string, std::string>> closure;
    for (int i = 1; 2 * i <= n; ++i)
        closure.emplace_back("eta" + std::to_string(i), "eta0");
    std::vector<ScalarPreset> presets;
    ScalarPreset diag;
    diag.name = "diagonal";
    diag.q = n;
    diag.weights["gl2"] = {1, 1};
    presets.push_back(std::move(diag));
    return RepresentationModel("gl2_sn(" + std::to_string(n) + ")", ambient, std::move(orbits),
                               std::move(closure), n + 1, std::move(presets),
                               /*partial=*/true);
}

AlphabetPtr contact_ambient_alphabet(int k)
{
    std::vector<Variable> vars;
    vars.push_back({"a", 1, "source", VarKind::Class});
    append_class_block(vars, "B", k + 1, "target");
    return make_alphabet(std::move(vars), {{"source", 1}, {"target", k + 1}});
}

GradedPolynomial closed_form_an(int m, int k)
{
    if (m < 0 || k < 0)
        throw Error("closed_form_an needs m, k >= 0");
    std::vector<Variable> rvars;
    rvars.push_back({"a", 1, "source", VarKind::Class});
    for (int j = 0; j <= k; ++j)
        rvars.push_back({"b" + std::to_string(j), 1, "target", VarKind::Root});
    AlphabetPtr roots = make_alphabet(std::move(rvars), {{"source", 1}, {"target", k + 1}});
    GradedPolynomial prod = GradedPolynomial::constant(roots, 1);
    GradedPolynomial a = GradedPolynomial::variable(roots, "a");
    for (int j = 0; j <= k; ++j) {
        GradedPolynomial bj = GradedPolynomial::variable(roots, "b" + std::to_string(j));
        for (int i = 1; i <= m; ++i)
            prod = prod * (bj - a.scaled(i));
    }
    AlphabetPtr ambient = contact_ambient_alphabet(k);
    return roots_to_classes(prod, ambient, {{"target", indexed_names("B", k + 1)}});
}

RepresentationModel catalog_contact_an(int k, int m_max)
{
    if (k < 0 || m_max < 1)
        throw Error("catalog_contact_an needs k >= 0, m_max >= 1");
    AlphabetPtr ambient = contact_ambient_alphabet(k);

    std::vector<OrbitDescriptor> orbits;
    for (int m = 0; m <= m_max; ++m) {
        std::vector<Variable> svars;
        svars.push_back({"a", 1, "source", VarKind::Class});
        append_class_block(svars, "b", k, "unf");
        AlphabetPtr stab = make_alphabet(std::move(svars), {{"source", 1}, {"unf", k}});
        GradedPolynomial sa = GradedPolynomial::variable(stab, "a");

        std::vector<std::string> bn = indexed_names("b", k);
        std::vector<GradedPolynomial> images;
        images.push_back(sa);
        for (int i = 1; i <= k + 1; ++i) {
            // degree-i part of (1 + (m+1)a)(1 + b_1 + ... + b_k)
            GradedPolynomial img(stab);
            if (i <= k)
                img += GradedPolynomial::variable(stab, bn[std::size_t(i - 1)]);
            GradedPolynomial lower =
                i == 1 ? GradedPolynomial::constant(stab, 1)
                       : (i - 1 <= k ? GradedPolynomial::variable(stab, bn[std::size_t(i - 2)])
                                     : GradedPolynomial::zero(stab));
            img += lower.scaled(m + 1) * sa;
            images.push_back(std::move(img));
        }
        Substitution restriction(ambient, stab, std::move(images));
        GradedPolynomial euler = restriction.apply(closed_form_an(m, k));
        orbits.emplace_back("A" + std::to_string(m), m * (k + 1), stab, std::move(restriction),
                            std::move(euler));
    }
    std::vector<std::pair<std::string, std::string>> closure;
    for (int m = 0; m < m_max; ++m)
        closure.emplace_back("A" + std::to_string(m), "A" + std::to_string(m + 1));
    std::vector<ScalarPreset> presets;
    ScalarPreset ts;
    ts.name = "target-scaling";
    ts.q = 1;
    ts.weights["source"] = {0};
    ts.weights["target"] = std::vector<long>(std::size_t(k + 1), 1);
    presets.push_back(std::move(ts));
    return RepresentationModel(
        "contact_an(" + std::to_string(k) + "," + std::to_string(m_max) + ")", ambient,
        std::move(orbits), std::move(closure), long(m_max + 1) * (k + 1), std::move(presets));
}

}  // namespace tpoly
