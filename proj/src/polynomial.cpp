#include "tpoly/polynomial.hpp"

#include <algorithm>
#include <sstream>

namespace tpoly {

Monomial Monomial::make(const Alphabet& alpha, std::vector<Entry> exps)
{
    std::sort(exps.begin(), exps.end());
    std::vector<Entry> clean;
    int degree = 0;
    for (auto& [idx, e] : exps) {
        if (e == 0)
            continue;
        if (e < 0)
            throw Error("negative exponent");
        if (idx < 0 || std::size_t(idx) >= alpha.size())
            throw Error("variable index out of range");
        if (!clean.empty() && clean.back().first == idx)
            throw Error("duplicate variable in monomial");
        clean.emplace_back(idx, e);
        degree += alpha.var(idx).degree * e;
    }
    return Monomial(std::move(clean), degree);
}

Monomial Monomial::var(const Alphabet& alpha, std::size_t index, int exp)
{
    return make(alpha, {{int(index), exp}});
}

int Monomial::exponent(int var_index) const
{
    for (const auto& [idx, e] : exps_)
        if (idx == var_index)
            return e;
    return 0;
}

Monomial Monomial::times(const Monomial& o) const
{
    std::vector<Entry> out;
    out.reserve(exps_.size() + o.exps_.size());
    auto a = exps_.begin(), b = o.exps_.begin();
    while (a != exps_.end() && b != o.exps_.end()) {
        if (a->first < b->first)
            out.push_back(*a++);
        else if (a->first > b->first)
            out.push_back(*b++);
        else {
            out.emplace_back(a->first, a->second + b->second);
            ++a;
            ++b;
        }
    }
    out.insert(out.end(), a, exps_.end());
    out.insert(out.end(), b, o.exps_.end());
    return Monomial(std::move(out), degree_ + o.degree_);
}

int Monomial::compare(const Monomial& o) const
{
    if (degree_ != o.degree_)
        return degree_ < o.degree_ ? -1 : 1;
    auto a = exps_.begin(), b = o.exps_.begin();
    while (a != exps_.end() && b != o.exps_.end()) {
        if (a->first != b->first)
            // the one owning the earlier variable has positive exponent there
            return a->first < b->first ? 1 : -1;
        if (a->second != b->second)
            return a->second > b->second ? 1 : -1;
        ++a;
        ++b;
    }
    if (a != exps_.end())
        return 1;
    if (b != o.exps_.end())
        return -1;
    return 0;
}

GradedPolynomial::GradedPolynomial(AlphabetPtr alpha, TermMap terms)
    : alpha_(std::move(alpha)), terms_(std::move(terms))
{
    for (auto it = terms_.begin(); it != terms_.end();) {
        if (it->second == 0)
            it = terms_.erase(it);
        else
            ++it;
    }
}

GradedPolynomial GradedPolynomial::constant(AlphabetPtr alpha, const Rational& c)
{
    GradedPolynomial p(std::move(alpha));
    if (c != 0)
        p.terms_.emplace(Monomial::one(), c);
    return p;
}

GradedPolynomial GradedPolynomial::variable(AlphabetPtr alpha, std::size_t index, int exp)
{
    Monomial m = Monomial::var(*alpha, index, exp);
    return monomial(std::move(alpha), std::move(m), 1);
}

GradedPolynomial GradedPolynomial::variable(AlphabetPtr alpha, const std::string& name, int exp)
{
    std::size_t i = alpha->require(name);
    return variable(std::move(alpha), i, exp);
}

GradedPolynomial GradedPolynomial::monomial(AlphabetPtr alpha, Monomial m, const Rational& c)
{
    GradedPolynomial p(std::move(alpha));
    if (c != 0)
        p.terms_.emplace(std::move(m), c);
    return p;
}

Rational GradedPolynomial::coefficient(const Monomial& m) const
{
    auto it = terms_.find(m);
    return it == terms_.end() ? Rational(0) : it->second;
}

int GradedPolynomial::degree() const
{
    if (terms_.empty())
        return 0;
    return terms_.rbegin()->first.degree();
}

bool GradedPolynomial::is_homogeneous(int d) const
{
    for (const auto& [m, c] : terms_)
        if (m.degree() != d)
            return false;
    return true;
}

std::optional<int> GradedPolynomial::homogeneous_degree() const
{
    if (terms_.empty())
        return std::nullopt;
    int d = terms_.begin()->first.degree();
    return is_homogeneous(d) ? std::optional<int>(d) : std::nullopt;
}

bool GradedPolynomial::is_integral() const
{
    for (const auto& [m, c] : terms_)
        if (!is_integer(c))
            return false;
    return true;
}

GradedPolynomial GradedPolynomial::degree_part(int d) const
{
    GradedPolynomial out(alpha_);
    for (const auto& [m, c] : terms_)
        if (m.degree() == d)
            out.terms_.emplace(m, c);
    return out;
}

void GradedPolynomial::check_same(const GradedPolynomial& o) const
{
    if (!same_alphabet(alpha_, o.alpha_))
        throw Error("alphabet mismatch");
}

void GradedPolynomial::add_term(const Monomial& m, const Rational& c)
{
    if (c == 0)
        return;
    auto [it, fresh] = terms_.emplace(m, c);
    if (!fresh) {
        it->second += c;
        if (it->second == 0)
            terms_.erase(it);
    }
}

GradedPolynomial& GradedPolynomial::operator+=(const GradedPolynomial& o)
{
    check_same(o);
    for (const auto& [m, c] : o.terms_)
        add_term(m, c);
    return *this;
}

GradedPolynomial& GradedPolynomial::operator-=(const GradedPolynomial& o)
{
    check_same(o);
    for (const auto& [m, c] : o.terms_)
        add_term(m, -c);
    return *this;
}

void GradedPolynomial::add_scaled(const Rational& c, const GradedPolynomial& o)
{
    check_same(o);
    if (c == 0)
        return;
    for (const auto& [m, k] : o.terms_)
        add_term(m, c * k);
}

GradedPolynomial GradedPolynomial::operator+(const GradedPolynomial& o) const
{
    GradedPolynomial out(*this);
    out += o;
    return out;
}

GradedPolynomial GradedPolynomial::operator-(const GradedPolynomial& o) const
{
    GradedPolynomial out(*this);
    out -= o;
    return out;
}

GradedPolynomial GradedPolynomial::operator-() const
{
    GradedPolynomial out(alpha_);
    for (const auto& [m, c] : terms_)
        out.terms_.emplace(m, -c);
    return out;
}

GradedPolynomial GradedPolynomial::scaled(const Rational& c) const
{
    GradedPolynomial out(alpha_);
    if (c == 0)
        return out;
    for (const auto& [m, k] : terms_)
        out.terms_.emplace(m, c * k);
    return out;
}

GradedPolynomial GradedPolynomial::operator*(const GradedPolynomial& o) const
{
    check_same(o);
    GradedPolynomial out(alpha_);
    const GradedPolynomial& small = terms_.size() <= o.terms_.size() ? *this : o;
    const GradedPolynomial& big = terms_.size() <= o.terms_.size() ? o : *this;
    for (const auto& [ms, cs] : small.terms_)
        for (const auto& [mb, cb] : big.terms_)
            out.add_term(ms.times(mb), cs * cb);
    return out;
}

GradedPolynomial GradedPolynomial::pow(int e) const
{
    if (e < 0)
        throw Error("negative power");
    GradedPolynomial out = constant(alpha_, 1);
    for (int i = 0; i < e; ++i)
        out = out * *this;
    return out;
}

bool GradedPolynomial::operator==(const GradedPolynomial& o) const
{
    return same_alphabet(alpha_, o.alpha_) && terms_ == o.terms_;
}

std::string GradedPolynomial::str() const
{
    if (terms_.empty())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [m, c] = *it;
        Rational a = c;
        if (first) {
            if (a < 0) {
                os << "-";
                a = -a;
            }
        } else {
            os << (a < 0 ? " - " : " + ");
            if (a < 0)
                a = -a;
        }
        first = false;
        bool wrote_coeff = false;
        if (a != 1 || m.is_one()) {
            os << a.get_str();
            wrote_coeff = true;
        }
        bool lead = !wrote_coeff;
        for (const auto& [idx, e] : m.exps()) {
            if (!lead)
                os << "*";
            lead = false;
            os << alpha_->var(idx).name;
            if (e != 1)
                os << "^" << e;
        }
    }
    return os.str();
}

namespace {

void enumerate_rec(const Alphabet& alpha, std::size_t i, int remaining,
                   std::vector<Monomial::Entry>& cur, int degree_target,
                   std::vector<Monomial>& out)
{
    if (remaining == 0) {
        out.emplace_back(Monomial(cur, degree_target));
        return;
    }
    if (i == alpha.size())
        return;
    int dv = alpha.var(i).degree;
    // exponent 0 branch
    enumerate_rec(alpha, i + 1, remaining, cur, degree_target, out);
    for (int e = 1; e * dv <= remaining; ++e) {
        cur.emplace_back(int(i), e);
        enumerate_rec(alpha, i + 1, remaining - e * dv, cur, degree_target, out);
        cur.pop_back();
    }
}

}  // namespace

std::vector<Monomial> monomial_basis(const Alphabet& alpha, int d)
{
    if (d < 0)
        return {};
    std::vector<Monomial> out;
    std::vector<Monomial::Entry> cur;
    enumerate_rec(alpha, 0, d, cur, d, out);
    std::sort(out.begin(), out.end(),
              [](const Monomial& a, const Monomial& b) { return a.compare(b) < 0; });
    return out;
}

std::size_t monomial_basis_size(const Alphabet& alpha, int d)
{
    if (d < 0)
        return 0;
    std::vector<std::size_t> dp(std::size_t(d) + 1, 0);
    dp[0] = 1;
    for (std::size_t i = 0; i < alpha.size(); ++i) {
        int dv = alpha.var(i).degree;
        for (int t = dv; t <= d; ++t)
            dp[t] += dp[t - dv];
    }
    return dp[d];
}

}  // namespace tpoly
