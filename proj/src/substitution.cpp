#include "tpoly/substitution.hpp"

#include <algorithm>

namespace tpoly {

Substitution::Substitution(AlphabetPtr source, AlphabetPtr target,
                           std::vector<GradedPolynomial> images)
    : source_(std::move(source)), target_(std::move(target)), images_(std::move(images))
{
    if (images_.size() != source_->size())
        throw Error("substitution needs one image per source variable");
    for (std::size_t i = 0; i < images_.size(); ++i) {
        const GradedPolynomial& img = images_[i];
        if (!same_alphabet(img.alphabet(), target_))
            throw Error("image of " + source_->var(i).name + " is over the wrong alphabet");
        if (!img.is_zero() && !img.is_homogeneous(source_->var(i).degree))
            throw Error("substitution does not preserve degree at " + source_->var(i).name);
    }
}

Substitution Substitution::identity(const AlphabetPtr& alpha)
{
    std::vector<GradedPolynomial> images;
    for (std::size_t i = 0; i < alpha->size(); ++i)
        images.push_back(GradedPolynomial::variable(alpha, i));
    return Substitution(alpha, alpha, std::move(images));
}

namespace {

using TermRef = std::pair<const Monomial*, const Rational*>;

struct ApplyCtx {
    const std::vector<GradedPolynomial>& images;
    const AlphabetPtr& target;
    // powers[v][e] = image(v)^e, built on demand
    std::vector<std::vector<GradedPolynomial>> powers;

    const GradedPolynomial& power(std::size_t v, int e)
    {
        auto& cache = powers[v];
        if (cache.empty())
            cache.push_back(GradedPolynomial::constant(target, 1));
        while (int(cache.size()) <= e)
            cache.push_back(cache.back() * images[v]);
        return cache[std::size_t(e)];
    }
};

/* Terms in [lo,hi) agree on all variables < at; recurse grouping by the
 * exponent of the first variable present, so shared suffix products are
 * computed once per group. */
GradedPolynomial apply_rec(ApplyCtx& ctx, std::vector<TermRef>& terms, std::size_t lo,
                           std::size_t hi, int at)
{
    GradedPolynomial out(ctx.target);
    // variable indices below `at` are exhausted; find the smallest variable
    // index >= at present among terms
    int next = -1;
    for (std::size_t i = lo; i < hi; ++i)
        for (const auto& [idx, e] : terms[i].first->exps())
            if (idx >= at) {
                if (next == -1 || idx < next)
                    next = idx;
                break;
            }
    if (next == -1) {
        // all remaining terms are constants relative to `at`
        Rational c(0);
        for (std::size_t i = lo; i < hi; ++i)
            c += *terms[i].second;
        return GradedPolynomial::constant(ctx.target, c);
    }
    std::stable_sort(terms.begin() + lo, terms.begin() + hi,
                     [next](const TermRef& a, const TermRef& b) {
                         return a.first->exponent(next) < b.first->exponent(next);
                     });
    std::size_t i = lo;
    while (i < hi) {
        int e = terms[i].first->exponent(next);
        std::size_t j = i;
        while (j < hi && terms[j].first->exponent(next) == e)
            ++j;
        GradedPolynomial sub = apply_rec(ctx, terms, i, j, next + 1);
        if (e == 0)
            out += sub;
        else
            out += ctx.power(std::size_t(next), e) * sub;
        i = j;
    }
    return out;
}

}  // namespace

GradedPolynomial Substitution::apply(const GradedPolynomial& p) const
{
    if (!same_alphabet(p.alphabet(), source_))
        throw Error("polynomial is not over the substitution source alphabet");
    if (p.is_zero())
        return GradedPolynomial::zero(target_);
    ApplyCtx ctx{images_, target_, std::vector<std::vector<GradedPolynomial>>(source_->size())};
    std::vector<TermRef> terms;
    terms.reserve(p.term_count());
    for (const auto& [m, c] : p.terms())
        terms.emplace_back(&m, &c);
    return apply_rec(ctx, terms, 0, terms.size(), 0);
}

bool Substitution::is_renaming() const
{
    if (source_->size() != target_->size())
        return false;
    std::vector<bool> hit(target_->size(), false);
    for (const GradedPolynomial& img : images_) {
        if (img.term_count() != 1)
            return false;
        const auto& [m, c] = *img.terms().begin();
        if (c != 1 || m.exps().size() != 1 || m.exps()[0].second != 1)
            return false;
        std::size_t t = std::size_t(m.exps()[0].first);
        if (hit[t])
            return false;
        hit[t] = true;
    }
    return true;
}

Substitution Substitution::inverse_renaming() const
{
    if (!is_renaming())
        throw Error("substitution is not a renaming");
    std::vector<GradedPolynomial> inv(target_->size(), GradedPolynomial::zero(source_));
    for (std::size_t i = 0; i < images_.size(); ++i) {
        std::size_t t = std::size_t(images_[i].terms().begin()->first.exps()[0].first);
        inv[t] = GradedPolynomial::variable(source_, i);
    }
    return Substitution(target_, source_, std::move(inv));
}

Substitution Substitution::composed_with(const Substitution& inner) const
{
    if (!same_alphabet(inner.target(), source_))
        throw Error("substitution composition mismatch");
    std::vector<GradedPolynomial> images;
    images.reserve(inner.source()->size());
    for (const GradedPolynomial& img : inner.images())
        images.push_back(apply(img));
    return Substitution(inner.source(), target_, std::move(images));
}

}  // namespace tpoly
