#pragma once

#include "tpoly/alphabet.hpp"

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace tpoly {

/* Sparse exponent vector, entries (variable index, exponent>0) sorted by
 * index, with the weighted degree cached. */
class Monomial {
public:
    using Entry = std::pair<int, int>;

    Monomial() = default;
    Monomial(std::vector<Entry> exps, int degree) : exps_(std::move(exps)), degree_(degree) {}

    static Monomial one() { return Monomial(); }
    static Monomial make(const Alphabet& alpha, std::vector<Entry> exps);
    static Monomial var(const Alphabet& alpha, std::size_t index, int exp = 1);

    int degree() const { return degree_; }
    bool is_one() const { return exps_.empty(); }
    const std::vector<Entry>& exps() const { return exps_; }
    int exponent(int var_index) const;

    Monomial times(const Monomial& o) const;

    /* graded lex: weighted degree first, then higher exponent on the
     * earliest variable wins */
    int compare(const Monomial& o) const;
    bool operator==(const Monomial& o) const { return degree_ == o.degree_ && exps_ == o.exps_; }
    bool operator!=(const Monomial& o) const { return !(*this == o); }

private:
    std::vector<Entry> exps_;
    int degree_ = 0;
};

struct MonoLess {
    bool operator()(const Monomial& a, const Monomial& b) const { return a.compare(b) < 0; }
};

class GradedPolynomial {
public:
    using TermMap = std::map<Monomial, Rational, MonoLess>;

    explicit GradedPolynomial(AlphabetPtr alpha) : alpha_(std::move(alpha)) {}
    GradedPolynomial(AlphabetPtr alpha, TermMap terms);

    static GradedPolynomial zero(AlphabetPtr alpha) { return GradedPolynomial(std::move(alpha)); }
    static GradedPolynomial constant(AlphabetPtr alpha, const Rational& c);
    static GradedPolynomial variable(AlphabetPtr alpha, std::size_t index, int exp = 1);
    static GradedPolynomial variable(AlphabetPtr alpha, const std::string& name, int exp = 1);
    static GradedPolynomial monomial(AlphabetPtr alpha, Monomial m, const Rational& c);

    const AlphabetPtr& alphabet() const { return alpha_; }
    const TermMap& terms() const { return terms_; }
    std::size_t term_count() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }

    Rational coefficient(const Monomial& m) const;
    /* total weighted degree of the leading (graded-lex greatest) term */
    int degree() const;
    bool is_homogeneous(int d) const;
    /* common degree if homogeneous and nonzero */
    std::optional<int> homogeneous_degree() const;
    bool is_integral() const;

    GradedPolynomial degree_part(int d) const;

    GradedPolynomial operator+(const GradedPolynomial& o) const;
    GradedPolynomial operator-(const GradedPolynomial& o) const;
    GradedPolynomial operator*(const GradedPolynomial& o) const;
    GradedPolynomial operator-() const;
    GradedPolynomial scaled(const Rational& c) const;
    GradedPolynomial pow(int e) const;

    GradedPolynomial& operator+=(const GradedPolynomial& o);
    GradedPolynomial& operator-=(const GradedPolynomial& o);

    /* c * m * o added in place */
    void add_scaled(const Rational& c, const GradedPolynomial& o);
    void add_term(const Monomial& m, const Rational& c);

    bool operator==(const GradedPolynomial& o) const;
    bool operator!=(const GradedPolynomial& o) const { return !(*this == o); }

    /* leading term first (descending graded lex) */
    std::string str() const;

private:
    void check_same(const GradedPolynomial& o) const;

    AlphabetPtr alpha_;
    TermMap terms_;
};

/* all monomials of weighted degree d, in ascending graded-lex order */
std::vector<Monomial> monomial_basis(const Alphabet& alpha, int d);
std::size_t monomial_basis_size(const Alphabet& alpha, int d);

}  // namespace tpoly
