#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "tpoly/catalogs.hpp"
#include "tpoly/model_io.hpp"
#include "tpoly/schur.hpp"

using namespace tpoly;

namespace {

AlphabetPtr roots_alphabet(int count_a, int count_b)
{
    std::vector<Variable> vars;
    for (int i = 1; i <= count_a; ++i)
        vars.push_back({"a" + std::to_string(i), 1, "ker", VarKind::Root});
    for (int j = 1; j <= count_b; ++j)
        vars.push_back({"b" + std::to_string(j), 1, "coker", VarKind::Root});
    return make_alphabet(std::move(vars), {{"ker", count_a}, {"coker", count_b}});
}

std::vector<std::string> names(const std::string& prefix, int count)
{
    std::vector<std::string> out;
    for (int i = 1; i <= count; ++i)
        out.push_back(prefix + std::to_string(i));
    return out;
}

}  // namespace

TEST_CASE("porteous catalog shape")
{
    RepresentationModel m = catalog_porteous(2, 0);
    CHECK(m.orbits().size() == 3);
    CHECK(m.orbit("Sigma0").codim == 0);
    CHECK(m.orbit("Sigma1").codim == 1);
    CHECK(m.orbit("Sigma2").codim == 4);

    const OrbitDescriptor& s1 = m.orbit("Sigma1");
    auto B1 = GradedPolynomial::variable(s1.stabilizer, "B1");
    auto A1 = GradedPolynomial::variable(s1.stabilizer, "A1");
    CHECK(*s1.euler == B1 - A1);

    RepresentationModel r1 = catalog_porteous(1, 0);
    const OrbitDescriptor& z = r1.orbit("Sigma1");
    CHECK(z.codim == 1);
    CHECK(*z.euler == GradedPolynomial::variable(z.stabilizer, "B1") -
                          GradedPolynomial::variable(z.stabilizer, "A1"));

    CHECK(m.in_closure("Sigma0", "Sigma2"));
    CHECK_FALSE(m.in_closure("Sigma2", "Sigma0"));
    CHECK(m.dimension() == 4);
}

TEST_CASE("porteous euler equals the root product")
{
    for (int n = 1; n <= 3; ++n)
        for (int k = 0; k <= 2; ++k) {
            RepresentationModel m = catalog_porteous(n, k);
            for (int s = 1; s <= n; ++s) {
                const OrbitDescriptor& o = m.orbit("Sigma" + std::to_string(s));
                auto roots = roots_alphabet(s, s + k);
                GradedPolynomial prod = GradedPolynomial::constant(roots, 1);
                for (int i = 1; i <= s; ++i)
                    for (int j = 1; j <= s + k; ++j)
                        prod = prod *
                               (GradedPolynomial::variable(roots, "b" + std::to_string(j)) -
                                GradedPolynomial::variable(roots, "a" + std::to_string(i)));
                GradedPolynomial reduced = roots_to_classes(
                    prod, o.stabilizer,
                    {{"ker", names("A", s)}, {"coker", names("B", s + k)}});
                CHECK(reduced == *o.euler);
            }
        }
}

TEST_CASE("bilinear catalogs")
{
    RepresentationModel l4 = catalog_bilinear(BilinearKind::Antisymmetric, 4);
    CHECK(l4.orbits().size() == 3);
    CHECK(l4.orbit("Sigma4").codim == 6);
    CHECK(l4.orbit("Sigma2").codim == 1);
    CHECK(l4.orbit("Sigma0").codim == 0);
    const OrbitDescriptor& s2 = l4.orbit("Sigma2");
    CHECK(*s2.euler == GradedPolynomial::variable(s2.stabilizer, "c1"));

    RepresentationModel s2n2 = catalog_bilinear(BilinearKind::Symmetric, 2);
    const OrbitDescriptor& o1 = s2n2.orbit("Sigma1");
    CHECK(o1.codim == 1);
    CHECK(*o1.euler == GradedPolynomial::variable(o1.stabilizer, "c1").scaled(2));

    // odd antisymmetric rank ends at corank 1 with an open orbit
    RepresentationModel l5 = catalog_bilinear(BilinearKind::Antisymmetric, 5);
    CHECK(l5.orbit("Sigma1").codim == 0);
}

TEST_CASE("antisymmetric and symmetric root products give staircase Schur classes")
{
    for (int r = 1; r <= 5; ++r) {
        std::vector<Variable> vars;
        for (int i = 1; i <= r; ++i)
            vars.push_back({"x" + std::to_string(i), 1, "x", VarKind::Root});
        auto roots = make_alphabet(std::move(vars), {{"x", r}});
        auto classes = class_alphabet("c", r, "u");
        Series cl = variable_series(classes, names("c", r));

        GradedPolynomial anti = GradedPolynomial::constant(roots, 1);
        for (int i = 0; i < r; ++i)
            for (int j = i + 1; j < r; ++j)
                anti = anti * (GradedPolynomial::variable(roots, std::size_t(i)) +
                               GradedPolynomial::variable(roots, std::size_t(j)));
        CHECK(roots_to_classes(anti, classes, {{"x", names("c", r)}}) ==
              schur(Partition::staircase(r - 1), cl));

        if (r <= 4) {
            GradedPolynomial sym = GradedPolynomial::constant(roots, 1);
            for (int i = 0; i < r; ++i)
                for (int j = i; j < r; ++j)
                    sym = sym * (GradedPolynomial::variable(roots, std::size_t(i)) +
                                 GradedPolynomial::variable(roots, std::size_t(j)));
            CHECK(roots_to_classes(sym, classes, {{"x", names("c", r)}}) ==
                  schur(Partition::staircase(r), cl)
                      .scaled(pow_rational(Rational(2), (unsigned long)r)));
        }
    }
}

TEST_CASE("gl2 catalog")
{
    RepresentationModel g3 = catalog_gl2_sn(3);
    CHECK(g3.orbits().size() == 2);
    CHECK(g3.orbit("eta0").codim == 2);
    CHECK(g3.orbit("eta1").codim == 1);
    CHECK(g3.partial());
    const OrbitDescriptor& e0 = g3.orbit("eta0");
    auto a = GradedPolynomial::variable(e0.stabilizer, "a");
    CHECK(*e0.euler == a.pow(2).scaled(6));

    RepresentationModel g4 = catalog_gl2_sn(4);
    const OrbitDescriptor& e2 = g4.orbit("eta2");
    CHECK(e2.restriction.image(0).is_zero());
    CHECK(e2.restriction.image(1) ==
          GradedPolynomial::variable(e2.stabilizer, "a").pow(2).scaled(-4));

    RepresentationModel g2 = catalog_gl2_sn(2);
    CHECK(g2.orbit("eta0").codim == 1);
    CHECK(g2.orbit("eta1").codim == 0);
}

TEST_CASE("contact catalog")
{
    auto amb0 = contact_ambient_alphabet(0);
    auto B1 = GradedPolynomial::variable(amb0, "B1");
    auto a = GradedPolynomial::variable(amb0, "a");
    CHECK(closed_form_an(1, 0) == B1 - a);
    CHECK(closed_form_an(2, 0) == B1 * B1 - a * B1.scaled(3) + a.pow(2).scaled(2));

    RepresentationModel m = catalog_contact_an(0, 2);
    const OrbitDescriptor& a1 = m.orbit("A1");
    CHECK(a1.codim == 1);
    CHECK(*a1.euler == GradedPolynomial::variable(a1.stabilizer, "a"));
    const OrbitDescriptor& a2 = m.orbit("A2");
    CHECK(a2.codim == 2);
    CHECK(*a2.euler == GradedPolynomial::variable(a2.stabilizer, "a").pow(2).scaled(2));

    // k=1: euler(A_1) = restriction of (B1-a)(B2-... ) at A1
    RepresentationModel mk1 = catalog_contact_an(1, 2);
    const OrbitDescriptor& b1 = mk1.orbit("A1");
    CHECK(b1.codim == 2);
    CHECK(b1.euler->is_homogeneous(2));
}

TEST_CASE("euler condition holds on all built-in catalogs")
{
    std::vector<RepresentationModel> models;
    models.push_back(catalog_porteous(3, 1));
    models.push_back(catalog_bilinear(BilinearKind::Antisymmetric, 6));
    models.push_back(catalog_bilinear(BilinearKind::Symmetric, 5));
    models.push_back(catalog_gl2_sn(7));
    models.push_back(catalog_contact_an(2, 4));
    for (const RepresentationModel& m : models) {
        m.euler_condition_check();
        for (const OrbitDescriptor& o : m.orbits())
            if (o.euler) {
                CHECK_FALSE(o.euler->is_zero());
                CHECK(o.euler->is_homogeneous(o.codim));
            }
    }
}

TEST_CASE("serialize then load is the identity on built-ins")
{
    std::vector<RepresentationModel> models;
    models.push_back(catalog_porteous(2, 1));
    models.push_back(catalog_bilinear(BilinearKind::Antisymmetric, 4));
    models.push_back(catalog_bilinear(BilinearKind::Symmetric, 3));
    models.push_back(catalog_gl2_sn(4));
    models.push_back(catalog_contact_an(1, 3));
    for (const RepresentationModel& m : models) {
        std::string text = save_model(m);
        RepresentationModel back = load_model(text);
        CHECK(save_model(back) == text);
    }
}

TEST_CASE("load_model validation errors carry paths")
{
    Json good = model_to_json(catalog_gl2_sn(3));

    SUBCASE("euler degree mismatch")
    {
        Json bad = good;
        bad["orbits"][0]["codim"] = 5;  // euler has degree 2
        CHECK_THROWS_WITH_AS(model_from_json(bad), doctest::Contains("Euler class degree"),
                             Error);
    }
    SUBCASE("duplicate orbit name")
    {
        Json bad = good;
        bad["orbits"][1]["name"] = "eta0";
        // closure refers to eta1; rename in closure as well to hit the dup check
        bad["closure"] = Json::array();
        CHECK_THROWS_WITH_AS(model_from_json(bad), doctest::Contains("duplicate orbit"), Error);
    }
    SUBCASE("restriction violating degrees")
    {
        Json bad = good;
        // send degree-2 c2 to a degree-1 image
        bad["orbits"][0]["restriction"]["c2"] =
            Json::array({Json{{"coeff", Json{{"num", 1}, {"den", 1}}},
                              {"exps", Json{{"a", 1}}}}});
        CHECK_THROWS_WITH_AS(model_from_json(bad), doctest::Contains("orbits[0]"), Error);
    }
    SUBCASE("empty orbit list is a valid model")
    {
        Json bare;
        bare["name"] = "empty";
        bare["ambient"] = good["ambient"];
        bare["orbits"] = Json::array();
        RepresentationModel m = model_from_json(bare);
        CHECK(m.orbits().empty());
    }
    SUBCASE("hand-written document reproduces the built-in")
    {
        RepresentationModel loaded = load_model(save_model(catalog_gl2_sn(3)));
        CHECK(model_to_json(loaded) == model_to_json(catalog_gl2_sn(3)));
    }
}
