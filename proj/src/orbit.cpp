#include "tpoly/orbit.hpp"

#include <algorithm>
#include <set>

namespace tpoly {

RepresentationModel::RepresentationModel(std::string name, AlphabetPtr ambient,
                                         std::vector<OrbitDescriptor> orbits,
                                         std::vector<std::pair<std::string, std::string>> closure,
                                         std::optional<long> dimension,
                                         std::vector<ScalarPreset> presets, bool partial)
    : name_(std::move(name)),
      ambient_(std::move(ambient)),
      orbits_(std::move(orbits)),
      closure_(std::move(closure)),
      dimension_(dimension),
      presets_(std::move(presets)),
      partial_(partial)
{
    std::set<std::string> names;
    int open_orbits = 0;
    for (const OrbitDescriptor& o : orbits_) {
        if (!names.insert(o.name).second)
            throw Error("duplicate orbit name " + o.name);
        if (o.codim < 0)
            throw Error("orbit " + o.name + " has negative codimension");
        if (o.codim == 0)
            ++open_orbits;
        if (!same_alphabet(o.restriction.source(), ambient_))
            throw Error("orbit " + o.name + " restriction is not defined on the ambient alphabet");
        if (!same_alphabet(o.restriction.target(), o.stabilizer))
            throw Error("orbit " + o.name + " restriction does not land in its stabilizer ring");
        if (o.euler) {
            if (!same_alphabet(o.euler->alphabet(), o.stabilizer))
                throw Error("orbit " + o.name + " Euler class is over the wrong alphabet");
        }
    }
    if (open_orbits > 1)
        throw Error("more than one codimension-0 orbit");
    for (const auto& [lo, hi] : closure_) {
        const OrbitDescriptor& l = orbit(lo);
        const OrbitDescriptor& h = orbit(hi);
        if (l.codim >= h.codim)
            throw Error("closure pair (" + lo + ", " + hi + ") does not respect codimension");
    }
    euler_condition_check();
}

const OrbitDescriptor& RepresentationModel::orbit(const std::string& name) const
{
    for (const OrbitDescriptor& o : orbits_)
        if (o.name == name)
            return o;
    throw Error("model " + name_ + " has no orbit named " + name);
}

bool RepresentationModel::has_orbit(const std::string& name) const
{
    return std::any_of(orbits_.begin(), orbits_.end(),
                       [&](const OrbitDescriptor& o) { return o.name == name; });
}

const ScalarPreset& RepresentationModel::preset(const std::string& name) const
{
    for (const ScalarPreset& p : presets_)
        if (p.name == name)
            return p;
    throw Error("model " + name_ + " has no scalar preset named " + name);
}

bool RepresentationModel::in_closure(const std::string& lower, const std::string& upper) const
{
    if (lower == upper)
        return true;
    // breadth-first walk over closure pairs
    std::vector<std::string> frontier{lower};
    std::set<std::string> seen{lower};
    while (!frontier.empty()) {
        std::vector<std::string> next;
        for (const std::string& cur : frontier)
            for (const auto& [lo, hi] : closure_)
                if (lo == cur && seen.insert(hi).second) {
                    if (hi == upper)
                        return true;
                    next.push_back(hi);
                }
        frontier = std::move(next);
    }
    return false;
}

std::vector<const OrbitDescriptor*> RepresentationModel::outside_closure(
    const std::string& name) const
{
    orbit(name);  // existence check
    std::vector<const OrbitDescriptor*> out;
    for (const OrbitDescriptor& o : orbits_)
        if (!in_closure(name, o.name))
            out.push_back(&o);
    return out;
}

void RepresentationModel::euler_condition_check() const
{
    for (const OrbitDescriptor& o : orbits_) {
        if (!o.euler)
            continue;
        if (o.euler->is_zero())
            throw Error("orbit " + o.name + " has a zero Euler class");
        if (!o.euler->is_homogeneous(o.codim))
            throw Error("orbit " + o.name + " Euler class degree differs from its codimension");
    }
}

}  // namespace tpoly
