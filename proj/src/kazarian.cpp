#include "tpoly/kazarian.hpp"

#include <algorithm>
#include <iomanip>
#include <sstream>

namespace tpoly {

RankTable::RankTable(std::vector<ColumnSpec> columns, int max_t)
    : columns_(std::move(columns)), max_t_(max_t)
{
    if (max_t_ < 0)
        throw Error("rank table needs max_t >= 0");
    for (const ColumnSpec& c : columns_) {
        if (c.codim < 0)
            throw Error("column codimension must be nonnegative");
        if (c.multiplicity < 1)
            throw Error("column multiplicity must be positive");
    }
}

long long RankTable::entry(int t, std::size_t col) const
{
    const ColumnSpec& c = columns_.at(col);
    return c.multiplicity * partition_count(t - c.codim, c.generator_degrees);
}

long long RankTable::fiber_entry(int fiber, std::size_t col) const
{
    const ColumnSpec& c = columns_.at(col);
    return c.multiplicity * partition_count(fiber, c.generator_degrees);
}

std::string RankTable::text() const
{
    std::ostringstream os;
    os << "t\\col";
    for (const ColumnSpec& c : columns_)
        os << std::setw(8) << (c.label.empty() ? "q=" + std::to_string(c.codim) : c.label);
    os << "\n";
    for (int t = 0; t <= max_t_; ++t) {
        os << std::setw(5) << t;
        for (std::size_t col = 0; col < columns_.size(); ++col)
            os << std::setw(8) << entry(t, col);
        os << "\n";
    }
    return os.str();
}

RankTable e1_ranks(std::vector<ColumnSpec> columns, int max_t)
{
    return RankTable(std::move(columns), max_t);
}

std::vector<long long> diagonal_check(const RankTable& table, const DegreeMultiset& ambient,
                                      int max_t)
{
    std::vector<long long> residuals;
    for (int t = 0; t <= max_t; ++t) {
        long long r = partition_count(t, ambient);
        for (std::size_t col = 0; col < table.columns().size(); ++col)
            r -= table.entry(t, col);
        residuals.push_back(r);
    }
    return residuals;
}

long long predict_stratum_count(const std::vector<ColumnSpec>& known,
                                const DegreeMultiset& ambient, int target_codim)
{
    if (target_codim < 1)
        throw Error("prediction needs a positive target codimension");
    for (const ColumnSpec& c : known)
        if (c.codim >= target_codim)
            throw Error("known columns must all have codimension below the target");
    RankTable table(known, target_codim);
    std::vector<long long> residuals = diagonal_check(table, ambient, target_codim);
    for (int t = 0; t < target_codim; ++t)
        if (residuals[std::size_t(t)] != 0)
            throw Error("diagonals already fail below the target codimension (t=" +
                        std::to_string(t) + ")");
    long long r = residuals[std::size_t(target_codim)];
    if (r < 0)
        throw Error("negative residual at the target codimension; the column data is inconsistent");
    return r;
}

bool euler_identity_check(int n)
{
    if (n < 0)
        throw Error("euler_identity_check needs n >= 0");
    if (n == 0)
        return true;  // the identity is stated for n >= 1
    long long lhs = partition_count(n, DegreeMultiset::all_degrees());
    long long rhs = 0;
    for (int s = 1; s * s <= n; ++s)
        rhs += partition_count(n - s * s, DegreeMultiset::copies(2, s));
    return lhs == rhs;
}

}  // namespace tpoly
