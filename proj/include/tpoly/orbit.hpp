#pragma once

#include "tpoly/substitution.hpp"

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace tpoly {

/* a one-parameter scalar subgroup: root weights per factor and the exponent
 * q with which it scales the representation */
struct ScalarPreset {
    std::string name;
    long q = 1;
    std::map<std::string, std::vector<long>> weights;
};

struct OrbitDescriptor {
    std::string name;
    int codim = 0;
    AlphabetPtr stabilizer;
    Substitution restriction;  // ambient -> stabilizer
    std::optional<GradedPolynomial> euler;

    OrbitDescriptor(std::string name_, int codim_, AlphabetPtr stab, Substitution restr,
                    std::optional<GradedPolynomial> e)
        : name(std::move(name_)),
          codim(codim_),
          stabilizer(std::move(stab)),
          restriction(std::move(restr)),
          euler(std::move(e))
    {
    }
};

class RepresentationModel {
public:
    RepresentationModel(std::string name, AlphabetPtr ambient, std::vector<OrbitDescriptor> orbits,
                        std::vector<std::pair<std::string, std::string>> closure = {},
                        std::optional<long> dimension = std::nullopt,
                        std::vector<ScalarPreset> presets = {}, bool partial = false);

    const std::string& name() const { return name_; }
    const AlphabetPtr& ambient() const { return ambient_; }
    const std::vector<OrbitDescriptor>& orbits() const { return orbits_; }
    const std::vector<std::pair<std::string, std::string>>& closure_pairs() const
    {
        return closure_;
    }
    std::optional<long> dimension() const { return dimension_; }
    const std::vector<ScalarPreset>& presets() const { return presets_; }
    bool partial() const { return partial_; }

    const OrbitDescriptor& orbit(const std::string& name) const;
    bool has_orbit(const std::string& name) const;
    const ScalarPreset& preset(const std::string& name) const;

    bool has_closure() const { return !closure_.empty() || orbits_.size() <= 1; }
    /* whether `upper` lies in the closure of `lower` (reflexive, transitive) */
    bool in_closure(const std::string& lower, const std::string& upper) const;
    std::vector<const OrbitDescriptor*> outside_closure(const std::string& name) const;

    /* every stated Euler class is nonzero and homogeneous of the codimension */
    void euler_condition_check() const;

private:
    std::string name_;
    AlphabetPtr ambient_;
    std::vector<OrbitDescriptor> orbits_;
    std::vector<std::pair<std::string, std::string>> closure_;
    std::optional<long> dimension_;
    std::vector<ScalarPreset> presets_;
    bool partial_ = false;
};

}  // namespace tpoly
