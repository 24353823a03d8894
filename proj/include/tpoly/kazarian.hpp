#pragma once

#include "tpoly/partitions.hpp"

#include <string>
#include <vector>

namespace tpoly {

/* one E_1 column: a stratum (or several sharing the data) of the given
 * codimension whose stabilizer classifying space has polynomial generators
 * of the given degrees, after any agreed U(infinity) normalization */
struct ColumnSpec {
    int codim = 0;
    DegreeMultiset generator_degrees;
    int multiplicity = 1;
    std::string label;
};

/* E_1 slice in total complex degree t: entry(t, col) counts monomials of
 * degree t - codim in the column's generators, times the multiplicity */
class RankTable {
public:
    RankTable(std::vector<ColumnSpec> columns, int max_t);

    const std::vector<ColumnSpec>& columns() const { return columns_; }
    int max_t() const { return max_t_; }
    long long entry(int t, std::size_t col) const;
    /* the same column read in the fiber degree of the stabilizer, i.e. the
     * row coordinate used by the printed tables */
    long long fiber_entry(int fiber, std::size_t col) const;

    std::string text() const;

private:
    std::vector<ColumnSpec> columns_;
    int max_t_ = 0;
};

RankTable e1_ranks(std::vector<ColumnSpec> columns, int max_t);

/* residual(t) = pi(t, ambient) - sum of column entries at t; all zero means
 * the skew diagonals of the page sum to the ambient ranks */
std::vector<long long> diagonal_check(const RankTable& table, const DegreeMultiset& ambient,
                                      int max_t);

/* number of codim-D strata predicted by the first failing diagonal, assuming
 * each contributes corner rank 1 */
long long predict_stratum_count(const std::vector<ColumnSpec>& known,
                                const DegreeMultiset& ambient, int target_codim);

/* pi(n,[1,1,..]) = sum_s pi(n - s^2, two copies of 1..s), n >= 1 */
bool euler_identity_check(int n);

}  // namespace tpoly
