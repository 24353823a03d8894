#include "tpoly/alphabet.hpp"

#include <algorithm>
#include <map>

namespace tpoly {

Alphabet::Alphabet(std::vector<Variable> variables, std::vector<Factor> factors)
    : variables_(std::move(variables)), factors_(std::move(factors))
{
    for (std::size_t i = 0; i < variables_.size(); ++i) {
        const Variable& v = variables_[i];
        if (v.degree <= 0)
            throw Error("variable " + v.name + " must have positive degree");
        if (!by_name_.emplace(v.name, i).second)
            throw Error("duplicate variable name " + v.name);
        bool found = std::any_of(factors_.begin(), factors_.end(),
                                 [&](const Factor& f) { return f.tag == v.factor; });
        if (!found)
            throw Error("variable " + v.name + " references unknown factor " + v.factor);
    }
    // Class variables of a factor must be c_1..c_m with degree i*scale.
    for (const Factor& f : factors_) {
        std::vector<int> degs;
        bool all_class = true;
        for (const Variable& v : variables_)
            if (v.factor == f.tag) {
                degs.push_back(v.degree);
                all_class = all_class && v.kind == VarKind::Class;
            }
        if (!all_class || degs.empty())
            continue;
        int scale = degs.front();
        for (std::size_t i = 0; i < degs.size(); ++i)
            if (degs[i] != scale * int(i + 1))
                throw Error("factor " + f.tag + " class degrees must be i*scale");
        if (f.rank && *f.rank != int(degs.size()))
            throw Error("factor " + f.tag + " rank does not match its class variable count");
    }
}

std::optional<std::size_t> Alphabet::index_of(const std::string& name) const
{
    auto it = by_name_.find(name);
    if (it == by_name_.end())
        return std::nullopt;
    return it->second;
}

std::size_t Alphabet::require(const std::string& name) const
{
    auto i = index_of(name);
    if (!i)
        throw Error("no variable named " + name);
    return *i;
}

const Factor& Alphabet::factor(const std::string& tag) const
{
    for (const Factor& f : factors_)
        if (f.tag == tag)
            return f;
    throw Error("no factor tagged " + tag);
}

std::vector<std::size_t> Alphabet::factor_vars(const std::string& tag) const
{
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < variables_.size(); ++i)
        if (variables_[i].factor == tag)
            out.push_back(i);
    return out;
}

bool Alphabet::operator==(const Alphabet& o) const
{
    if (variables_.size() != o.variables_.size() || factors_.size() != o.factors_.size())
        return false;
    for (std::size_t i = 0; i < variables_.size(); ++i) {
        const Variable &a = variables_[i], &b = o.variables_[i];
        if (a.name != b.name || a.degree != b.degree || a.factor != b.factor || a.kind != b.kind)
            return false;
    }
    for (std::size_t i = 0; i < factors_.size(); ++i)
        if (factors_[i].tag != o.factors_[i].tag || factors_[i].rank != o.factors_[i].rank)
            return false;
    return true;
}

AlphabetPtr make_alphabet(std::vector<Variable> variables, std::vector<Factor> factors)
{
    return std::make_shared<const Alphabet>(std::move(variables), std::move(factors));
}

AlphabetPtr class_alphabet(const std::string& prefix, int m, const std::string& factor_tag,
                           int scale)
{
    std::vector<Variable> vars;
    for (int i = 1; i <= m; ++i)
        vars.push_back({prefix + std::to_string(i), i * scale, factor_tag, VarKind::Class});
    return make_alphabet(std::move(vars), {{factor_tag, m}});
}

}  // namespace tpoly
