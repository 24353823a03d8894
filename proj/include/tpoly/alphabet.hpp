#pragma once

#include "tpoly/rational.hpp"

#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

namespace tpoly {

enum class VarKind { Class, Root };

struct Variable {
    std::string name;
    int degree = 1;  // complex degree
    std::string factor;
    VarKind kind = VarKind::Class;
};

struct Factor {
    std::string tag;
    std::optional<int> rank;  // nullopt = unbounded
};

/* An ordered generator list for a graded polynomial ring, grouped into
 * group factors.  Class variables of a rank-m factor are indexed 1..m with
 * degree i * scale (Chern classes scale 1, Pontryagin classes scale 2). */
class Alphabet {
public:
    Alphabet(std::vector<Variable> variables, std::vector<Factor> factors);

    std::size_t size() const { return variables_.size(); }
    const Variable& var(std::size_t i) const { return variables_[i]; }
    const std::vector<Variable>& variables() const { return variables_; }
    const std::vector<Factor>& factors() const { return factors_; }

    std::optional<std::size_t> index_of(const std::string& name) const;
    std::size_t require(const std::string& name) const;
    const Factor& factor(const std::string& tag) const;
    std::vector<std::size_t> factor_vars(const std::string& tag) const;

    bool operator==(const Alphabet& o) const;
    bool operator!=(const Alphabet& o) const { return !(*this == o); }

private:
    std::vector<Variable> variables_;
    std::vector<Factor> factors_;
    std::unordered_map<std::string, std::size_t> by_name_;
};

using AlphabetPtr = std::shared_ptr<const Alphabet>;

AlphabetPtr make_alphabet(std::vector<Variable> variables, std::vector<Factor> factors);

/* One factor of rank m with class variables prefix1..prefixm, degree i*scale. */
AlphabetPtr class_alphabet(const std::string& prefix, int m, const std::string& factor_tag,
                           int scale = 1);

inline bool same_alphabet(const AlphabetPtr& a, const AlphabetPtr& b)
{
    return a == b || (a && b && *a == *b);
}

}  // namespace tpoly
