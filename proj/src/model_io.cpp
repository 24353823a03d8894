#include "tpoly/model_io.hpp"

namespace tpoly {

namespace {

[[noreturn]] void fail(const std::string& path, const std::string& what)
{
    throw Error(path + ": " + what);
}

Json integer_to_json(const Integer& z)
{
    if (z.fits_slong_p())
        return Json(z.get_si());
    return Json(z.get_str());
}

Integer integer_from_json(const Json& j, const std::string& path)
{
    if (j.is_number_integer())
        return Integer(static_cast<long>(j.get<long long>()));
    if (j.is_string())
        return Integer(j.get<std::string>());
    fail(path, "expected an integer or a decimal string");
}

const Json& member(const Json& j, const char* key, const std::string& path)
{
    if (!j.is_object() || !j.contains(key))
        fail(path, std::string("missing field '") + key + "'");
    return j.at(key);
}

}  // namespace

Json rational_to_json(const Rational& q)
{
    Json j;
    j["num"] = integer_to_json(Integer(q.get_num()));
    j["den"] = integer_to_json(Integer(q.get_den()));
    return j;
}

Rational rational_from_json(const Json& j, const std::string& path)
{
    Integer num = integer_from_json(member(j, "num", path), path + ".num");
    Integer den = integer_from_json(member(j, "den", path), path + ".den");
    if (den == 0)
        fail(path, "zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

Json alphabet_to_json(const Alphabet& a)
{
    Json vars = Json::array();
    for (const Variable& v : a.variables()) {
        Json jv;
        jv["name"] = v.name;
        jv["degree"] = v.degree;
        jv["factor"] = v.factor;
        if (v.kind == VarKind::Root)
            jv["kind"] = "root";
        vars.push_back(std::move(jv));
    }
    Json factors = Json::array();
    for (const Factor& f : a.factors()) {
        Json jf;
        jf["tag"] = f.tag;
        jf["rank"] = f.rank ? Json(*f.rank) : Json(nullptr);
        factors.push_back(std::move(jf));
    }
    Json out;
    out["variables"] = std::move(vars);
    out["factors"] = std::move(factors);
    return out;
}

AlphabetPtr alphabet_from_json(const Json& j, const std::string& path)
{
    std::vector<Variable> vars;
    const Json& jv = member(j, "variables", path);
    if (!jv.is_array())
        fail(path + ".variables", "expected an array");
    for (std::size_t i = 0; i < jv.size(); ++i) {
        const std::string p = path + ".variables[" + std::to_string(i) + "]";
        Variable v;
        v.name = member(jv[i], "name", p).get<std::string>();
        v.degree = member(jv[i], "degree", p).get<int>();
        v.factor = member(jv[i], "factor", p).get<std::string>();
        v.kind = VarKind::Class;
        if (jv[i].contains("kind")) {
            std::string kind = jv[i]["kind"].get<std::string>();
            if (kind == "root")
                v.kind = VarKind::Root;
            else if (kind != "class")
                fail(p + ".kind", "expected 'class' or 'root'");
        }
        vars.push_back(std::move(v));
    }
    std::vector<Factor> factors;
    const Json& jf = member(j, "factors", path);
    if (!jf.is_array())
        fail(path + ".factors", "expected an array");
    for (std::size_t i = 0; i < jf.size(); ++i) {
        const std::string p = path + ".factors[" + std::to_string(i) + "]";
        Factor f;
        f.tag = member(jf[i], "tag", p).get<std::string>();
        const Json& rank = member(jf[i], "rank", p);
        if (!rank.is_null())
            f.rank = rank.get<int>();
        factors.push_back(std::move(f));
    }
    try {
        return make_alphabet(std::move(vars), std::move(factors));
    } catch (const Error& e) {
        fail(path, e.what());
    }
}

Json polynomial_to_json(const GradedPolynomial& p)
{
    Json out = Json::array();
    const Alphabet& a = *p.alphabet();
    for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
        Json term;
        term["coeff"] = rational_to_json(it->second);
        Json exps = Json::object();
        for (const auto& [idx, e] : it->first.exps())
            exps[a.var(std::size_t(idx)).name] = e;
        term["exps"] = std::move(exps);
        out.push_back(std::move(term));
    }
    return out;
}

GradedPolynomial polynomial_from_json(const Json& j, const AlphabetPtr& alpha,
                                      const std::string& path)
{
    if (!j.is_array())
        fail(path, "expected an array of terms");
    GradedPolynomial p(alpha);
    for (std::size_t i = 0; i < j.size(); ++i) {
        const std::string tp = path + "[" + std::to_string(i) + "]";
        Rational c = rational_from_json(member(j[i], "coeff", tp), tp + ".coeff");
        const Json& exps = member(j[i], "exps", tp);
        if (!exps.is_object())
            fail(tp + ".exps", "expected an object");
        std::vector<Monomial::Entry> entries;
        for (auto it = exps.begin(); it != exps.end(); ++it) {
            auto idx = alpha->index_of(it.key());
            if (!idx)
                fail(tp + ".exps", "unknown variable " + it.key());
            entries.emplace_back(int(*idx), it.value().get<int>());
        }
        try {
            p.add_term(Monomial::make(*alpha, std::move(entries)), c);
        } catch (const Error& e) {
            fail(tp, e.what());
        }
    }
    return p;
}

Json model_to_json(const RepresentationModel& m)
{
    Json out;
    out["name"] = m.name();
    out["ambient"] = alphabet_to_json(*m.ambient());
    Json orbits = Json::array();
    for (const OrbitDescriptor& o : m.orbits()) {
        Json jo;
        jo["name"] = o.name;
        jo["codim"] = o.codim;
        jo["stabilizer"] = alphabet_to_json(*o.stabilizer);
        Json restr = Json::object();
        for (std::size_t i = 0; i < m.ambient()->size(); ++i)
            restr[m.ambient()->var(i).name] = polynomial_to_json(o.restriction.image(i));
        jo["restriction"] = std::move(restr);
        jo["euler"] = o.euler ? polynomial_to_json(*o.euler) : Json(nullptr);
        orbits.push_back(std::move(jo));
    }
    out["orbits"] = std::move(orbits);
    Json closure = Json::array();
    for (const auto& [lo, hi] : m.closure_pairs())
        closure.push_back(Json::array({lo, hi}));
    out["closure"] = std::move(closure);
    if (m.dimension())
        out["dimension"] = *m.dimension();
    if (!m.presets().empty()) {
        Json presets = Json::array();
        for (const ScalarPreset& p : m.presets()) {
            Json jp;
            jp["name"] = p.name;
            jp["q"] = p.q;
            Json w = Json::object();
            for (const auto& [tag, ws] : p.weights)
                w[tag] = ws;
            jp["weights"] = std::move(w);
            presets.push_back(std::move(jp));
        }
        out["presets"] = std::move(presets);
    }
    if (m.partial())
        out["partial"] = true;
    return out;
}

RepresentationModel model_from_json(const Json& j)
{
    std::string name = member(j, "name", "model").get<std::string>();
    AlphabetPtr ambient = alphabet_from_json(member(j, "ambient", "model"), "ambient");
    const Json& jorbits = member(j, "orbits", "model");
    if (!jorbits.is_array())
        fail("orbits", "expected an array");
    std::vector<OrbitDescriptor> orbits;
    for (std::size_t i = 0; i < jorbits.size(); ++i) {
        const std::string p = "orbits[" + std::to_string(i) + "]";
        const Json& jo = jorbits[i];
        std::string oname = member(jo, "name", p).get<std::string>();
        int codim = member(jo, "codim", p).get<int>();
        AlphabetPtr stab = alphabet_from_json(member(jo, "stabilizer", p), p + ".stabilizer");
        const Json& jr = member(jo, "restriction", p);
        std::vector<GradedPolynomial> images;
        for (std::size_t v = 0; v < ambient->size(); ++v) {
            const std::string& vn = ambient->var(v).name;
            if (!jr.contains(vn))
                fail(p + ".restriction", "missing image of " + vn);
            images.push_back(polynomial_from_json(jr.at(vn), stab, p + ".restriction." + vn));
        }
        std::optional<GradedPolynomial> euler;
        const Json& je = member(jo, "euler", p);
        if (!je.is_null())
            euler = polynomial_from_json(je, stab, p + ".euler");
        try {
            Substitution restriction(ambient, stab, std::move(images));
            orbits.emplace_back(oname, codim, stab, std::move(restriction), std::move(euler));
        } catch (const Error& e) {
            fail(p, e.what());
        }
    }
    std::vector<std::pair<std::string, std::string>> closure;
    if (j.contains("closure")) {
        const Json& jc = j.at("closure");
        if (!jc.is_array())
            fail("closure", "expected an array of pairs");
        for (std::size_t i = 0; i < jc.size(); ++i) {
            if (!jc[i].is_array() || jc[i].size() != 2)
                fail("closure[" + std::to_string(i) + "]", "expected [lower, upper]");
            closure.emplace_back(jc[i][0].get<std::string>(), jc[i][1].get<std::string>());
        }
    }
    std::optional<long> dimension;
    if (j.contains("dimension") && !j.at("dimension").is_null())
        dimension = j.at("dimension").get<long>();
    std::vector<ScalarPreset> presets;
    if (j.contains("presets")) {
        const Json& jp = j.at("presets");
        for (std::size_t i = 0; i < jp.size(); ++i) {
            const std::string p = "presets[" + std::to_string(i) + "]";
            ScalarPreset sp;
            sp.name = member(jp[i], "name", p).get<std::string>();
            sp.q = member(jp[i], "q", p).get<long>();
            const Json& w = member(jp[i], "weights", p);
            for (auto it = w.begin(); it != w.end(); ++it)
                sp.weights[it.key()] = it.value().get<std::vector<long>>();
            presets.push_back(std::move(sp));
        }
    }
    bool partial = j.contains("partial") && j.at("partial").get<bool>();
    try {
        return RepresentationModel(std::move(name), ambient, std::move(orbits),
                                   std::move(closure), dimension, std::move(presets), partial);
    } catch (const Error& e) {
        fail("model", e.what());
    }
}

RepresentationModel load_model(const std::string& text)
{
    Json j;
    try {
        j = Json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw Error(std::string("model file is not valid JSON: ") + e.what());
    }
    return model_from_json(j);
}

std::string save_model(const RepresentationModel& m)
{
    return model_to_json(m).dump(2) + "\n";
}

}  // namespace tpoly
