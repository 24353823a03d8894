#pragma once

#include "tpoly/rational.hpp"

#include <string>
#include <vector>

namespace tpoly {

struct Partition {
    std::vector<int> parts;  // weakly decreasing, positive

    Partition() = default;
    explicit Partition(std::vector<int> p);
    /* staircase (k, k-1, ..., 1) */
    static Partition staircase(int k);
    /* rectangle with `rows` rows of width `width` */
    static Partition rectangle(int rows, int width);

    int weight() const;
    Partition conjugate() const;
    std::size_t length() const { return parts.size(); }
    int part(std::size_t i) const { return i < parts.size() ? parts[i] : 0; }
    bool contains(const Partition& mu) const;
    bool operator==(const Partition& o) const { return parts == o.parts; }
    std::string str() const;
};

/* Degrees of a polynomial generator set, e.g. {1,1,2,2} for BU(2)^2.
 * `unbounded_all` means one generator of every positive degree. */
struct DegreeMultiset {
    std::vector<int> degrees;
    bool unbounded_all = false;

    static DegreeMultiset of(std::vector<int> degs);
    static DegreeMultiset all_degrees();
    /* `count` copies of each degree 1..up_to */
    static DegreeMultiset copies(int count, int up_to);
};

/* number of monomials of weighted degree n; 1 for n = 0, 0 for n < 0 */
long long partition_count(int n, const DegreeMultiset& degs);

/* all partitions of n with parts at most max_part (max_part<=0 means n) */
std::vector<Partition> partitions_of(int n, int max_part = 0);

}  // namespace tpoly
