#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "tpoly/linalg.hpp"
#include "tpoly/polynomial.hpp"
#include "tpoly/substitution.hpp"
#include "tpoly/modular.hpp"

#include <cstdint>

using namespace tpoly;

namespace {

struct Rng {
    std::uint64_t s;
    explicit Rng(std::uint64_t seed) : s(seed) {}
    std::uint64_t next()
    {
        s ^= s << 13;
        s ^= s >> 7;
        s ^= s << 17;
        return s;
    }
    int range(int lo, int hi) { return lo + int(next() % std::uint64_t(hi - lo + 1)); }
};

GradedPolynomial random_homogeneous(const AlphabetPtr& alpha, int d, Rng& rng)
{
    GradedPolynomial p(alpha);
    auto basis = monomial_basis(*alpha, d);
    for (const Monomial& m : basis)
        if (rng.range(0, 2) == 0)
            p.add_term(m, rational(rng.range(-4, 4)));
    return p;
}

GradedPolynomial parse_var(const AlphabetPtr& a, const std::string& n)
{
    return GradedPolynomial::variable(a, n);
}

}  // namespace

TEST_CASE("monomial order is graded lex")
{
    auto a = class_alphabet("c", 3, "u");
    Monomial c1 = Monomial::var(*a, 0);
    Monomial c2 = Monomial::var(*a, 1);
    Monomial c1c1 = c1.times(c1);
    CHECK(c1.compare(c2) < 0);       // degree 1 < 2
    CHECK(c1c1.compare(c2) > 0);     // same degree, c1^2 is lex-greater
    CHECK(c1c1.compare(c1c1) == 0);
}

TEST_CASE("arith basics")
{
    auto ab = make_alphabet({{"a", 1, "f", VarKind::Class}}, {{"f", 1}});
    // one factor would force the c_i pattern; use two rank-1 factors
    auto two = make_alphabet({{"a", 1, "f", VarKind::Class}, {"b", 1, "g", VarKind::Class}},
                             {{"f", 1}, {"g", 1}});
    auto A = parse_var(two, "a");
    auto B = parse_var(two, "b");
    CHECK((A + B) * (A - B) == A * A - B * B);

    auto c = class_alphabet("c", 2, "u");
    auto c1 = parse_var(c, "c1");
    CHECK((c1.scaled(3) + c1.scaled(-3)).is_zero());
    CHECK(c1.scaled(3).term_count() == 1);

    auto c2 = parse_var(c, "c2");
    auto one = GradedPolynomial::constant(c, 1);
    auto prod = (one + c1 + c2) * (one + c1);
    CHECK(prod.degree_part(2) == c1 * c1 + c2);
    CHECK(prod.degree_part(2).is_homogeneous(2));
    CHECK_FALSE(prod.is_homogeneous(2));
    (void)ab;
}

TEST_CASE("substitute")
{
    auto c = class_alphabet("c", 2, "u");
    auto u = make_alphabet({{"u", 1, "f", VarKind::Class}}, {{"f", 1}});
    auto p = parse_var(c, "c1").pow(2).scaled(6) + parse_var(c, "c2").scaled(3);

    SUBCASE("c1->u, c2->0")
    {
        Substitution s(c, u, {parse_var(u, "u"), GradedPolynomial::zero(u)});
        CHECK(s.apply(p) == parse_var(u, "u").pow(2).scaled(6));
    }
    SUBCASE("c1->c1, c2->-2c1^2 kills the gl2 n=3 combination")
    {
        Substitution s(c, c, {parse_var(c, "c1"), parse_var(c, "c1").pow(2).scaled(-2)});
        CHECK(s.apply(p).is_zero());
    }
    SUBCASE("identity")
    {
        CHECK(Substitution::identity(c).apply(p) == p);
    }
    SUBCASE("degree violation rejected")
    {
        CHECK_THROWS_AS(Substitution(c, u, {parse_var(u, "u"), parse_var(u, "u")}), Error);
    }
}

TEST_CASE("poly_det small cases")
{
    auto h = class_alphabet("H", 3, "q");
    auto H1 = parse_var(h, "H1");
    auto H2 = parse_var(h, "H2");
    auto one = GradedPolynomial::constant(h, 1);
    CHECK(poly_det({{H1, H2}, {one, H1}}) == H1 * H1 - H2);
    CHECK(poly_det({{H1}}) == H1);

    auto c = class_alphabet("c", 3, "u");
    auto c1 = parse_var(c, "c1");
    auto c2 = parse_var(c, "c2");
    auto c3 = parse_var(c, "c3");
    CHECK(poly_det({{c2, c3}, {GradedPolynomial::constant(c, 1), c1}}) == c1 * c2 - c3);
}

TEST_CASE("poly_det matches permutation expansion on random matrices")
{
    auto a = class_alphabet("c", 2, "u");
    Rng rng(0x9d2c5680u);
    for (int trial = 0; trial < 6; ++trial) {
        int z = rng.range(2, 4);
        std::vector<std::vector<GradedPolynomial>> m(
            z, std::vector<GradedPolynomial>(z, GradedPolynomial::zero(a)));
        for (int i = 0; i < z; ++i)
            for (int j = 0; j < z; ++j) {
                GradedPolynomial e(a);
                for (const Monomial& mono : monomial_basis(*a, rng.range(0, 2)))
                    e.add_term(mono, rational(rng.range(-3, 3)));
                m[i][j] = e;
            }
        // brute-force permutation expansion
        std::vector<int> perm(z);
        for (int i = 0; i < z; ++i)
            perm[i] = i;
        GradedPolynomial want(a);
        do {
            int inv = 0;
            for (int i = 0; i < z; ++i)
                for (int j = i + 1; j < z; ++j)
                    if (perm[i] > perm[j])
                        ++inv;
            GradedPolynomial term = GradedPolynomial::constant(a, inv % 2 ? -1 : 1);
            for (int i = 0; i < z; ++i)
                term = term * m[i][perm[i]];
            want += term;
        } while (std::next_permutation(perm.begin(), perm.end()));
        CHECK(poly_det(m) == want);
    }
}

TEST_CASE("linear_solve recovers the gl2 n=3 polynomial")
{
    auto c = class_alphabet("c", 2, "u");
    auto u = make_alphabet({{"u", 1, "f", VarKind::Class}}, {{"f", 1}});
    Substitution principal(c, u, {parse_var(u, "u"), GradedPolynomial::zero(u)});
    Substitution homog(c, u, {parse_var(u, "u"), parse_var(u, "u").pow(2).scaled(-2)});
    std::vector<EquationBlock> blocks;
    blocks.push_back({principal, parse_var(u, "u").pow(2).scaled(6), "principal"});
    blocks.push_back({homog, GradedPolynomial::zero(u), "homog"});
    LinearSolution sol = linear_solve(c, 2, blocks);
    CHECK(sol.status == SolveStatus::Unique);
    CHECK(sol.kernel_dim == 0);
    CHECK(sol.particular == parse_var(c, "c1").pow(2).scaled(6) + parse_var(c, "c2").scaled(3));
}

TEST_CASE("linear_solve with no equations leaves the full kernel")
{
    auto c = class_alphabet("c", 2, "u");
    LinearSolution sol = linear_solve(c, 4, {});
    CHECK(sol.status == SolveStatus::NonUnique);
    CHECK(sol.particular.is_zero());
    CHECK(sol.kernel_dim == monomial_basis_size(*c, 4));
    CHECK(sol.kernel_dim == 3);  // c1^4, c1^2 c2, c2^2
}

TEST_CASE("linear_solve reports contradictions")
{
    auto x = make_alphabet({{"x", 1, "f", VarKind::Class}}, {{"f", 1}});
    auto u = make_alphabet({{"u", 1, "g", VarKind::Class}}, {{"g", 1}});
    Substitution id(x, u, {parse_var(u, "u")});
    std::vector<EquationBlock> blocks;
    blocks.push_back({id, GradedPolynomial::zero(u), "x=0"});
    blocks.push_back({id, parse_var(u, "u"), "x=u"});
    LinearSolution sol = linear_solve(x, 1, blocks);
    CHECK(sol.status == SolveStatus::Inconsistent);
}

TEST_CASE("product degree and homomorphism property")
{
    auto c = class_alphabet("c", 3, "u");
    auto t = class_alphabet("d", 2, "v");
    Rng rng(0x2545f491u);
    // a degree-preserving substitution c_i -> random homogeneous of degree i
    for (int trial = 0; trial < 5; ++trial) {
        std::vector<GradedPolynomial> images;
        for (int i = 1; i <= 3; ++i)
            images.push_back(random_homogeneous(t, i, rng));
        Substitution s(c, t, images);
        int di = rng.range(1, 3), dj = rng.range(1, 3);
        GradedPolynomial p = random_homogeneous(c, di, rng);
        GradedPolynomial q = random_homogeneous(c, dj, rng);
        GradedPolynomial pq = p * q;
        if (!pq.is_zero())
            CHECK(pq.is_homogeneous(di + dj));
        CHECK(s.apply(pq) == s.apply(p) * s.apply(q));
    }
}

TEST_CASE("rational reconstruction and modular fields")
{
    ModField F(2147483629u);  // largest prime below 2^31
    std::uint32_t a = F.to_m(1234567u), b = F.to_m(7654321u);
    CHECK(F.from_m(F.mul(a, b)) == std::uint64_t(1234567u) * 7654321u % 2147483629u);
    CHECK(F.from_m(F.mul(a, F.inv(a))) == 1);

    Integer M("2147483629");
    Rational q(22, 7);
    Integer r = (22 * Integer(M / 7 * 7 + 1)) % M;  // 22 * 7^{-1} mod M, via gmp
    mpz_invert(r.get_mpz_t(), Integer(7).get_mpz_t(), M.get_mpz_t());
    r = (r * 22) % M;
    auto back = rational_reconstruct(r, M);
    REQUIRE(back.has_value());
    CHECK(*back == q);
}

TEST_CASE("linear_solve takes the modular path above the exact threshold")
{
    // two rank-3 factors: 83 degree-8 monomials, well past the exact cutoff
    std::vector<Variable> vars;
    for (int i = 1; i <= 3; ++i)
        vars.push_back({"c" + std::to_string(i), i, "u", VarKind::Class});
    for (int i = 1; i <= 3; ++i)
        vars.push_back({"d" + std::to_string(i), i, "v", VarKind::Class});
    auto big = make_alphabet(std::move(vars), {{"u", 3}, {"v", 3}});
    auto t = class_alphabet("e", 4, "w");
    Rng rng(0x7a69cafeu);
    std::vector<GradedPolynomial> images;
    for (std::size_t i = 0; i < big->size(); ++i)
        images.push_back(random_homogeneous(t, big->var(i).degree, rng));
    Substitution s(big, t, images);
    const int d = 8;
    REQUIRE(monomial_basis_size(*big, d) > 64);
    GradedPolynomial secret = random_homogeneous(big, d, rng);
    std::vector<EquationBlock> blocks;
    blocks.push_back({s, s.apply(secret), "data"});
    LinearSolution sol = linear_solve(big, d, blocks);
    REQUIRE(sol.status != SolveStatus::Inconsistent);
    CHECK(s.apply(sol.particular) == s.apply(secret));
    for (std::size_t i = 0; i < std::min<std::size_t>(sol.kernel.size(), 5); ++i)
        CHECK(s.apply(sol.kernel[i]).is_zero());
    CHECK(sol.kernel_dim + 0 == sol.kernel.size());
    // the solution space is an affine space containing the secret
    bool secret_reachable = s.apply(secret - sol.particular).is_zero();
    CHECK(secret_reachable);
}

TEST_CASE("linear_solve solutions satisfy every equation when re-substituted")
{
    auto c = class_alphabet("c", 2, "u");
    auto t = class_alphabet("d", 2, "v");
    Rng rng(0x0fee1deadu);
    for (int trial = 0; trial < 5; ++trial) {
        std::vector<GradedPolynomial> images;
        for (int i = 1; i <= 2; ++i)
            images.push_back(random_homogeneous(t, i, rng));
        Substitution s(c, t, images);
        int d = rng.range(2, 4);
        GradedPolynomial secret = random_homogeneous(c, d, rng);
        std::vector<EquationBlock> blocks;
        blocks.push_back({s, s.apply(secret), "data"});
        LinearSolution sol = linear_solve(c, d, blocks);
        REQUIRE(sol.status != SolveStatus::Inconsistent);
        CHECK(s.apply(sol.particular) == s.apply(secret));
        for (const GradedPolynomial& v : sol.kernel)
            CHECK(s.apply(v).is_zero());
    }
}
