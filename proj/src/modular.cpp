#include "tpoly/modular.hpp"

#include <algorithm>

namespace tpoly {

ModField::ModField(std::uint32_t prime) : p_(prime)
{
    if (prime < 3 || (prime & 1) == 0)
        throw Error("modular prime must be odd");
    // Newton iteration for p^{-1} mod 2^32
    std::uint32_t inv = prime;
    for (int i = 0; i < 4; ++i)
        inv *= 2 - prime * inv;
    pinv_ = std::uint32_t(0) - inv;  // -p^{-1}
    r2_ = std::uint32_t((((__uint128_t)1 << 64) % p_));
    one_ = std::uint32_t((std::uint64_t(1) << 32) % p_);
}

std::uint32_t ModField::pow(std::uint32_t a, std::uint64_t e) const
{
    std::uint32_t r = one_;
    while (e) {
        if (e & 1)
            r = mul_raw(r, a);
        a = mul_raw(a, a);
        e >>= 1;
    }
    return r;
}

std::uint32_t ModField::inv(std::uint32_t a) const
{
    if (a == 0)
        throw Error("division by zero mod p");
    return pow(a, p_ - 2);
}

std::uint32_t ModField::reduce(const Integer& z) const
{
    std::uint32_t r = std::uint32_t(mpz_fdiv_ui(z.get_mpz_t(), p_));
    return to_m(r);
}

std::uint32_t ModField::reduce(const Rational& q) const
{
    std::uint32_t num = reduce(Integer(q.get_num()));
    std::uint32_t den = std::uint32_t(mpz_fdiv_ui(q.get_den().get_mpz_t(), p_));
    if (den == 0)
        throw Error("prime divides a denominator");
    return mul(num, inv(to_m(den)));
}

namespace {

std::uint64_t pow_mod_u64(std::uint64_t a, std::uint64_t e, std::uint64_t m)
{
    std::uint64_t r = 1;
    a %= m;
    while (e) {
        if (e & 1)
            r = std::uint64_t((__uint128_t)r * a % m);
        a = std::uint64_t((__uint128_t)a * a % m);
        e >>= 1;
    }
    return r;
}

}  // namespace

bool is_prime_u32(std::uint32_t n)
{
    if (n < 2)
        return false;
    for (std::uint32_t q : {2u, 3u, 5u, 7u, 11u, 13u})
        if (n % q == 0)
            return n == q;
    std::uint32_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    // deterministic for n < 2^32
    for (std::uint64_t a : {2ull, 7ull, 61ull}) {
        std::uint64_t x = pow_mod_u64(a, d, n);
        if (x == 1 || x == n - 1)
            continue;
        bool witness = true;
        for (int i = 1; i < s; ++i) {
            x = std::uint64_t((__uint128_t)x * x % n);
            if (x == n - 1) {
                witness = false;
                break;
            }
        }
        if (witness)
            return false;
    }
    return true;
}

std::uint32_t PrimeStream::next()
{
    while (cursor_ > 2) {
        std::uint32_t c = cursor_--;
        if (is_prime_u32(c))
            return c;
    }
    throw Error("prime stream exhausted");
}

namespace {

using TermRef = std::pair<const Monomial*, const Rational*>;

struct ModApplyCtx {
    const Substitution& sub;
    const ModField& F;
    std::vector<std::vector<ModPoly>> powers;
    std::vector<ModPoly> images;

    ModApplyCtx(const Substitution& s, const ModField& f)
        : sub(s), F(f), powers(s.source()->size())
    {
        images.reserve(s.source()->size());
        for (const GradedPolynomial& img : s.images())
            images.push_back(to_mod(img, f));
    }

    const ModPoly& power(std::size_t v, int e)
    {
        auto& cache = powers[v];
        if (cache.empty()) {
            ModPoly one;
            one.emplace(Monomial::one(), F.one_m());
            cache.push_back(std::move(one));
        }
        while (int(cache.size()) <= e) {
            const ModPoly& prev = cache.back();
            ModPoly next;
            for (const auto& [ma, ca] : prev)
                for (const auto& [mb, cb] : images[v]) {
                    Monomial m = ma.times(mb);
                    std::uint32_t c = F.mul(ca, cb);
                    auto [it, fresh] = next.emplace(std::move(m), c);
                    if (!fresh) {
                        it->second = F.add(it->second, c);
                        if (it->second == 0)
                            next.erase(it);
                    }
                }
            cache.push_back(std::move(next));
        }
        return cache[std::size_t(e)];
    }
};

void mod_add_scaled(ModPoly& acc, const ModPoly& a, std::uint32_t c, const ModField& F)
{
    for (const auto& [m, k] : a) {
        std::uint32_t v = F.mul(k, c);
        if (v == 0)
            continue;
        auto [it, fresh] = acc.emplace(m, v);
        if (!fresh) {
            it->second = F.add(it->second, v);
            if (it->second == 0)
                acc.erase(it);
        }
    }
}

ModPoly mod_apply_rec(ModApplyCtx& ctx, std::vector<std::pair<const Monomial*, std::uint32_t>>& terms,
                      std::size_t lo, std::size_t hi, int at)
{
    ModPoly out;
    int next = -1;
    for (std::size_t i = lo; i < hi; ++i)
        for (const auto& [idx, e] : terms[i].first->exps())
            if (idx >= at) {
                if (next == -1 || idx < next)
                    next = idx;
                break;
            }
    if (next == -1) {
        std::uint32_t c = 0;
        for (std::size_t i = lo; i < hi; ++i)
            c = ctx.F.add(c, terms[i].second);
        if (c != 0)
            out.emplace(Monomial::one(), c);
        return out;
    }
    std::stable_sort(terms.begin() + lo, terms.begin() + hi,
                     [next](const auto& a, const auto& b) {
                         return a.first->exponent(next) < b.first->exponent(next);
                     });
    std::size_t i = lo;
    while (i < hi) {
        int e = terms[i].first->exponent(next);
        std::size_t j = i;
        while (j < hi && terms[j].first->exponent(next) == e)
            ++j;
        ModPoly sub = mod_apply_rec(ctx, terms, i, j, next + 1);
        if (e == 0) {
            mod_add_scaled(out, sub, ctx.F.one_m(), ctx.F);
        } else {
            const ModPoly& pw = ctx.power(std::size_t(next), e);
            const ModPoly& small = pw.size() <= sub.size() ? pw : sub;
            const ModPoly& big = pw.size() <= sub.size() ? sub : pw;
            for (const auto& [ms, cs] : small) {
                for (const auto& [mb, cb] : big) {
                    Monomial m = ms.times(mb);
                    std::uint32_t c = ctx.F.mul(cs, cb);
                    if (c == 0)
                        continue;
                    auto [it, fresh] = out.emplace(std::move(m), c);
                    if (!fresh) {
                        it->second = ctx.F.add(it->second, c);
                        if (it->second == 0)
                            out.erase(it);
                    }
                }
            }
        }
        i = j;
    }
    return out;
}

}  // namespace

ModPoly to_mod(const GradedPolynomial& p, const ModField& F)
{
    ModPoly out;
    for (const auto& [m, c] : p.terms()) {
        std::uint32_t v = F.reduce(c);
        if (v != 0)
            out.emplace(m, v);
    }
    return out;
}

ModPoly apply_mod(const Substitution& s, const GradedPolynomial& p, const ModField& F)
{
    ModApplyCtx ctx(s, F);
    std::vector<std::pair<const Monomial*, std::uint32_t>> terms;
    terms.reserve(p.term_count());
    for (const auto& [m, c] : p.terms()) {
        std::uint32_t v = F.reduce(c);
        if (v != 0)
            terms.emplace_back(&m, v);
    }
    if (terms.empty())
        return {};
    return mod_apply_rec(ctx, terms, 0, terms.size(), 0);
}

namespace {

Integer l1_norm(const GradedPolynomial& p)
{
    Rational s(0);
    for (const auto& [m, c] : p.terms())
        s += abs(c);
    Integer z;
    mpz_cdiv_q(z.get_mpz_t(), s.get_num().get_mpz_t(), s.get_den().get_mpz_t());
    return z;
}

}  // namespace

bool substitution_equals(const Substitution& s, const GradedPolynomial& x,
                         const GradedPolynomial& rhs)
{
    bool integral = x.is_integral() && rhs.is_integral();
    for (const GradedPolynomial& img : s.images())
        integral = integral && img.is_integral();
    if (!integral)
        return s.apply(x) == rhs;

    // |coeff of s(x) - rhs| <= sum_t |c_t| prod_v L1(img_v)^{e_v} + L1(rhs)
    std::vector<Integer> norms;
    norms.reserve(s.images().size());
    for (const GradedPolynomial& img : s.images())
        norms.push_back(l1_norm(img));
    Integer bound = l1_norm(rhs);
    for (const auto& [m, c] : x.terms()) {
        Integer t = abs(c.get_num());
        for (const auto& [idx, e] : m.exps()) {
            Integer pw;
            mpz_pow_ui(pw.get_mpz_t(), norms[std::size_t(idx)].get_mpz_t(), (unsigned long)e);
            t *= pw;
        }
        bound += t;
    }
    bound = 2 * bound + 1;

    PrimeStream primes;
    Integer covered(1);
    while (covered < bound) {
        ModField F(primes.next());
        ModPoly img = apply_mod(s, x, F);
        ModPoly want = to_mod(rhs, F);
        if (img != want)
            return false;  // a nonzero residue is an exact disproof
        covered *= F.prime();
    }
    return true;
}

std::optional<Rational> rational_reconstruct(const Integer& residue, const Integer& modulus)
{
    // balanced Euclid: find n/d with |n|, d <= sqrt(M/2), n = r*d mod M
    Integer bound;
    mpz_sqrt(bound.get_mpz_t(), Integer(modulus / 2).get_mpz_t());
    Integer r0 = modulus, r1 = residue % modulus;
    if (r1 < 0)
        r1 += modulus;
    Integer t0 = 0, t1 = 1;
    while (r1 > bound) {
        Integer q = r0 / r1;
        Integer r2 = r0 - q * r1;
        Integer t2 = t0 - q * t1;
        r0 = r1;
        r1 = r2;
        t0 = t1;
        t1 = t2;
    }
    if (t1 == 0 || abs(t1) > bound)
        return std::nullopt;
    if (t1 < 0) {
        t1 = -t1;
        r1 = -r1;
    }
    Integer g;
    mpz_gcd(g.get_mpz_t(), r1.get_mpz_t(), t1.get_mpz_t());
    if (g != 1) {
        r1 /= g;
        t1 /= g;
    }
    Rational q(r1, t1);
    q.canonicalize();
    return q;
}

ModMatrix::ModMatrix(ModField F, std::size_t ncols)
    : F_(F), ncols_(ncols), pivrow_(ncols + 1, -1)
{
}

bool ModMatrix::add_row(std::vector<std::uint32_t>& dense)
{
    const std::size_t width = ncols_ + 1;
    std::size_t col = 0;
    while (col < width) {
        if (dense[col] == 0) {
            ++col;
            continue;
        }
        int pr = pivrow_[col];
        if (pr < 0)
            break;
        // dense -= dense[col] * row[pr]
        const auto& prow = rows_[std::size_t(pr)];
        std::uint32_t c = dense[col];
        std::size_t base = pivcol_[std::size_t(pr)];
        dense[col] = 0;
        for (std::size_t j = 1; j < prow.size(); ++j) {
            std::size_t cc = base + j;
            dense[cc] = F_.sub(dense[cc], F_.mul(c, prow[j]));
        }
        ++col;
    }
    if (col >= width)
        return true;  // reduced to zero
    if (col == ncols_)
        return false;  // 0 = nonzero
    // normalize and store suffix
    std::uint32_t inv = F_.inv(dense[col]);
    std::vector<std::uint32_t> suffix(width - col);
    for (std::size_t j = col; j < width; ++j)
        suffix[j - col] = F_.mul(dense[j], inv);
    pivrow_[col] = int(rows_.size());
    pivcol_.push_back(col);
    rows_.push_back(std::move(suffix));
    return true;
}

std::vector<std::size_t> ModMatrix::pivot_cols() const
{
    std::vector<std::size_t> out;
    for (std::size_t c = 0; c < ncols_; ++c)
        if (pivrow_[c] >= 0)
            out.push_back(c);
    return out;
}

std::vector<std::size_t> ModMatrix::free_cols() const
{
    std::vector<std::size_t> out;
    for (std::size_t c = 0; c < ncols_; ++c)
        if (pivrow_[c] < 0)
            out.push_back(c);
    return out;
}

std::vector<std::uint32_t> ModMatrix::back_substitute(std::size_t unit_col, bool use_rhs) const
{
    // solve for x on the pivot columns with x[unit_col] = 1 on a free column
    // (or none), every other free coordinate zero
    std::vector<std::uint32_t> x(ncols_ + 1, 0);
    if (unit_col < ncols_)
        x[unit_col] = F_.one_m();
    std::vector<std::size_t> order(rows_.size());
    for (std::size_t i = 0; i < order.size(); ++i)
        order[i] = i;
    std::sort(order.begin(), order.end(),
              [&](std::size_t a, std::size_t b) { return pivcol_[a] > pivcol_[b]; });
    for (std::size_t r : order) {
        const auto& row = rows_[r];
        const std::size_t base = pivcol_[r];
        std::uint32_t acc = use_rhs ? row[row.size() - 1] : 0;  // rhs sits last
        for (std::size_t j = 1; j + 1 < row.size(); ++j) {
            std::uint32_t v = x[base + j];
            if (v != 0 && row[j] != 0)
                acc = F_.sub(acc, F_.mul(row[j], v));
        }
        x[base] = acc;
    }
    std::vector<std::uint32_t> out;
    out.reserve(rows_.size());
    for (std::size_t c = 0; c < ncols_; ++c)
        if (pivrow_[c] >= 0)
            out.push_back(F_.from_m(x[c]));
    return out;
}

std::vector<std::uint32_t> ModMatrix::particular_values() const
{
    return back_substitute(ncols_, true);
}

std::vector<std::uint32_t> ModMatrix::kernel_values(std::size_t f) const
{
    return back_substitute(f, false);
}

}  // namespace tpoly
