#include "tpoly/schur.hpp"

#include "tpoly/linalg.hpp"

#include <algorithm>
#include <functional>

namespace tpoly {

Series variable_series(const AlphabetPtr& alpha, const std::vector<std::string>& names)
{
    Series s;
    s.push_back(GradedPolynomial::constant(alpha, 1));
    for (std::size_t i = 0; i < names.size(); ++i) {
        GradedPolynomial v = GradedPolynomial::variable(alpha, names[i]);
        if (!v.is_homogeneous(int(i) + 1))
            throw Error("series variable " + names[i] + " has the wrong degree");
        s.push_back(std::move(v));
    }
    return s;
}

const GradedPolynomial& series_at(const Series& s, int i, const GradedPolynomial& zero)
{
    if (i < 0 || std::size_t(i) >= s.size())
        return zero;
    return s[std::size_t(i)];
}

GradedPolynomial series_sum(const Series& s)
{
    if (s.empty())
        throw Error("empty series");
    GradedPolynomial out = s[0];
    for (std::size_t i = 1; i < s.size(); ++i)
        out += s[i];
    return out;
}

GradedPolynomial schur(const Partition& lambda, const Series& classes)
{
    if (classes.empty())
        throw Error("schur needs at least the degree-0 class");
    const AlphabetPtr& alpha = classes[0].alphabet();
    const std::size_t n = lambda.length();
    if (n == 0)
        return GradedPolynomial::constant(alpha, 1);
    GradedPolynomial zero = GradedPolynomial::zero(alpha);
    std::vector<std::vector<GradedPolynomial>> m(n, std::vector<GradedPolynomial>(n, zero));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            m[i][j] = series_at(classes, lambda.parts[i] + int(j) - int(i), zero);
    return poly_det(m);
}

Series quotient_series(const Series& numer, const Series& denom, int max_degree)
{
    if (max_degree < 0)
        throw Error("quotient_series needs max_degree >= 0");
    if (numer.empty() || denom.empty())
        throw Error("quotient_series needs nonempty class families");
    const AlphabetPtr& alpha = numer[0].alphabet();
    GradedPolynomial one = GradedPolynomial::constant(alpha, 1);
    if (numer[0] != one || denom[0] != one)
        throw Error("class families must start with 1");
    GradedPolynomial zero = GradedPolynomial::zero(alpha);
    Series h;
    h.push_back(one);
    for (int i = 1; i <= max_degree; ++i) {
        GradedPolynomial hi = series_at(numer, i, zero);
        for (int j = 1; j <= i; ++j)
            hi -= series_at(denom, j, zero) * h[std::size_t(i - j)];
        h.push_back(std::move(hi));
    }
    return h;
}

GradedPolynomial elementary_symmetric(const AlphabetPtr& alpha,
                                      const std::vector<std::size_t>& vars, int i)
{
    if (i < 0 || std::size_t(i) > vars.size())
        return GradedPolynomial::zero(alpha);
    GradedPolynomial out(alpha);
    // enumerate i-subsets
    std::vector<std::size_t> idx(std::size_t(i), std::size_t(0));
    std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t from, std::size_t k) {
        if (k == std::size_t(i)) {
            std::vector<Monomial::Entry> exps;
            for (std::size_t t = 0; t < std::size_t(i); ++t)
                exps.emplace_back(int(vars[idx[t]]), 1);
            out.add_term(Monomial::make(*alpha, exps), 1);
            return;
        }
        for (std::size_t v = from; v + (std::size_t(i) - k) <= vars.size(); ++v) {
            idx[k] = v;
            rec(v + 1, k + 1);
        }
    };
    if (i == 0)
        return GradedPolynomial::constant(alpha, 1);
    rec(0, 0);
    return out;
}

namespace {

struct RootFactorInfo {
    std::string tag;
    std::vector<std::size_t> roots;          // source indices, ascending
    std::vector<std::size_t> class_targets;  // target indices of e_1..e_m
    std::vector<GradedPolynomial> elem;      // e_0..e_m over the source alphabet
};

Monomial transpose_in(const Alphabet& alpha, const Monomial& m, std::size_t a, std::size_t b)
{
    std::vector<Monomial::Entry> exps;
    for (const auto& [idx, e] : m.exps()) {
        std::size_t i = std::size_t(idx);
        if (i == a)
            exps.emplace_back(int(b), e);
        else if (i == b)
            exps.emplace_back(int(a), e);
        else
            exps.emplace_back(idx, e);
    }
    return Monomial::make(alpha, std::move(exps));
}

}  // namespace

GradedPolynomial roots_to_classes(const GradedPolynomial& p, const AlphabetPtr& target,
                                  const std::map<std::string, std::vector<std::string>>& class_names)
{
    const AlphabetPtr& source = p.alphabet();
    std::vector<RootFactorInfo> infos;
    std::vector<int> root_factor_of(source->size(), -1);
    for (const auto& [tag, names] : class_names) {
        RootFactorInfo info;
        info.tag = tag;
        info.roots = source->factor_vars(tag);
        if (info.roots.empty())
            throw Error("root factor " + tag + " has no variables");
        if (names.size() != info.roots.size())
            throw Error("factor " + tag + " needs one class name per root");
        int rd = source->var(info.roots[0]).degree;
        for (std::size_t r : info.roots) {
            if (source->var(r).degree != rd)
                throw Error("roots of factor " + tag + " must share a degree");
            root_factor_of[r] = int(infos.size());
        }
        for (std::size_t i = 0; i < names.size(); ++i) {
            std::size_t t = target->require(names[i]);
            if (target->var(t).degree != rd * int(i + 1))
                throw Error("class " + names[i] + " must have degree " +
                            std::to_string(rd * int(i + 1)));
            info.class_targets.push_back(t);
        }
        for (int i = 0; i <= int(info.roots.size()); ++i)
            info.elem.push_back(elementary_symmetric(source, info.roots, i));
        infos.push_back(std::move(info));
    }
    // symmetry check, reporting the offending transposition
    for (const RootFactorInfo& info : infos) {
        for (std::size_t k = 0; k + 1 < info.roots.size(); ++k) {
            std::size_t a = info.roots[k], b = info.roots[k + 1];
            for (const auto& [m, c] : p.terms()) {
                Monomial swapped = transpose_in(*source, m, a, b);
                if (p.coefficient(swapped) != c)
                    throw Error("polynomial is not symmetric in factor " + info.tag +
                                " under the transposition (" + source->var(a).name + " " +
                                source->var(b).name + ")");
            }
        }
    }
    // passthrough variables are matched by name
    std::vector<int> pass_target(source->size(), -1);
    for (std::size_t i = 0; i < source->size(); ++i) {
        if (root_factor_of[i] >= 0)
            continue;
        auto t = target->index_of(source->var(i).name);
        if (!t)
            throw Error("no target variable for " + source->var(i).name);
        if (target->var(*t).degree != source->var(i).degree)
            throw Error("degree mismatch for passthrough variable " + source->var(i).name);
        pass_target[i] = int(*t);
    }

    GradedPolynomial rest = p;
    GradedPolynomial out(target);
    while (!rest.is_zero()) {
        // leading term; symmetry makes its root exponents weakly decreasing
        const auto& [lead, coeff] = *rest.terms().rbegin();
        std::vector<Monomial::Entry> out_exps;
        GradedPolynomial back = GradedPolynomial::constant(source, coeff);
        for (const RootFactorInfo& info : infos) {
            std::vector<int> lam;
            for (std::size_t r : info.roots)
                lam.push_back(lead.exponent(int(r)));
            for (std::size_t i = 0; i + 1 < lam.size(); ++i)
                if (lam[i] < lam[i + 1])
                    throw Error("leading term is not sorted; input not symmetric in " + info.tag);
            lam.push_back(0);
            for (std::size_t i = 0; i + 1 < lam.size(); ++i) {
                int mult = lam[i] - lam[i + 1];
                if (mult > 0) {
                    out_exps.emplace_back(int(info.class_targets[i]), mult);
                    back = back * info.elem[i + 1].pow(mult);
                }
            }
        }
        std::vector<Monomial::Entry> pass_exps;
        for (const auto& [idx, e] : lead.exps())
            if (root_factor_of[std::size_t(idx)] < 0) {
                out_exps.emplace_back(pass_target[std::size_t(idx)], e);
                pass_exps.emplace_back(idx, e);
            }
        out.add_term(Monomial::make(*target, out_exps), coeff);
        back = back * GradedPolynomial::monomial(source, Monomial::make(*source, pass_exps), 1);
        rest -= back;
    }
    return out;
}

}  // namespace tpoly
