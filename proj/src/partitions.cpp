#include "tpoly/partitions.hpp"

#include <algorithm>
#include <sstream>

namespace tpoly {

Partition::Partition(std::vector<int> p) : parts(std::move(p))
{
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (parts[i] <= 0)
            throw Error("partition parts must be positive");
        if (i > 0 && parts[i] > parts[i - 1])
            throw Error("partition parts must be weakly decreasing");
    }
}

Partition Partition::staircase(int k)
{
    std::vector<int> p;
    for (int i = k; i >= 1; --i)
        p.push_back(i);
    return Partition(std::move(p));
}

Partition Partition::rectangle(int rows, int width)
{
    if (rows < 0 || (rows > 0 && width <= 0))
        throw Error("bad rectangle");
    return Partition(std::vector<int>(std::size_t(rows), width));
}

int Partition::weight() const
{
    int w = 0;
    for (int p : parts)
        w += p;
    return w;
}

Partition Partition::conjugate() const
{
    std::vector<int> out;
    for (int i = 1; !parts.empty() && i <= parts[0]; ++i) {
        int cnt = 0;
        for (int p : parts)
            if (p >= i)
                ++cnt;
        out.push_back(cnt);
    }
    return Partition(std::move(out));
}

bool Partition::contains(const Partition& mu) const
{
    for (std::size_t i = 0; i < mu.parts.size(); ++i)
        if (mu.parts[i] > part(i))
            return false;
    return true;
}

std::string Partition::str() const
{
    std::ostringstream os;
    os << "(";
    for (std::size_t i = 0; i < parts.size(); ++i)
        os << (i ? "," : "") << parts[i];
    os << ")";
    return os.str();
}

DegreeMultiset DegreeMultiset::of(std::vector<int> degs)
{
    for (int d : degs)
        if (d < 1)
            throw Error("generator degrees must be >= 1");
    DegreeMultiset m;
    m.degrees = std::move(degs);
    return m;
}

DegreeMultiset DegreeMultiset::all_degrees()
{
    DegreeMultiset m;
    m.unbounded_all = true;
    return m;
}

DegreeMultiset DegreeMultiset::copies(int count, int up_to)
{
    std::vector<int> degs;
    for (int d = 1; d <= up_to; ++d)
        for (int c = 0; c < count; ++c)
            degs.push_back(d);
    return of(std::move(degs));
}

long long partition_count(int n, const DegreeMultiset& degs)
{
    if (n < 0)
        return 0;
    std::vector<long long> dp(std::size_t(n) + 1, 0);
    dp[0] = 1;
    if (degs.unbounded_all) {
        // degrees above n cannot contribute
        for (int d = 1; d <= n; ++d)
            for (int t = d; t <= n; ++t)
                dp[t] += dp[t - d];
    } else {
        for (int d : degs.degrees) {
            if (d > n)
                continue;
            for (int t = d; t <= n; ++t)
                dp[t] += dp[t - d];
        }
    }
    return dp[std::size_t(n)];
}

namespace {

void gen_partitions(int n, int max_part, std::vector<int>& cur, std::vector<Partition>& out)
{
    if (n == 0) {
        out.push_back(Partition(cur));
        return;
    }
    for (int p = std::min(n, max_part); p >= 1; --p) {
        cur.push_back(p);
        gen_partitions(n - p, p, cur, out);
        cur.pop_back();
    }
}

}  // namespace

std::vector<Partition> partitions_of(int n, int max_part)
{
    if (n < 0)
        return {};
    if (max_part <= 0)
        max_part = n;
    std::vector<Partition> out;
    std::vector<int> cur;
    if (n == 0) {
        out.push_back(Partition());
        return out;
    }
    gen_partitions(n, max_part, cur, out);
    return out;
}

}  // namespace tpoly
