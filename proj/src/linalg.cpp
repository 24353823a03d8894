#include "tpoly/linalg.hpp"

#include <algorithm>
#include <functional>
#include <memory>
#include <optional>
#include <tuple>

namespace tpoly {

GradedPolynomial poly_det(const std::vector<std::vector<GradedPolynomial>>& m)
{
    const std::size_t z = m.size();
    for (const auto& row : m)
        if (row.size() != z)
            throw Error("poly_det needs a square matrix");
    if (z == 0)
        throw Error("poly_det of an empty matrix");
    if (z > 14)
        throw Error("poly_det limited to 14x14");
    const AlphabetPtr& alpha = m[0][0].alphabet();
    for (const auto& row : m)
        for (const auto& e : row)
            if (!same_alphabet(e.alphabet(), alpha))
                throw Error("poly_det entries must share an alphabet");

    // minors[S] over rows 0..popcount(S)-1 and column set S
    std::vector<GradedPolynomial> minors(std::size_t(1) << z, GradedPolynomial::zero(alpha));
    minors[0] = GradedPolynomial::constant(alpha, 1);
    std::vector<std::uint32_t> by_pop[15];
    for (std::uint32_t S = 1; S < (1u << z); ++S)
        by_pop[__builtin_popcount(S)].push_back(S);
    for (std::size_t r = 1; r <= z; ++r) {
        for (std::uint32_t S : by_pop[r]) {
            GradedPolynomial acc(alpha);
            int sign = (r % 2 == 1) ? 1 : -1;  // expansion along row r-1
            for (std::size_t j = 0, seen = 0; j < z; ++j) {
                if (!(S & (1u << j)))
                    continue;
                ++seen;
                const GradedPolynomial& e = m[r - 1][j];
                if (!e.is_zero()) {
                    int s = (seen % 2 == 1) ? sign : -sign;
                    GradedPolynomial prod = e * minors[S & ~(1u << j)];
                    if (s < 0)
                        acc -= prod;
                    else
                        acc += prod;
                }
            }
            minors[S] = std::move(acc);
        }
    }
    return minors[(std::size_t(1) << z) - 1];
}

std::vector<std::size_t> rref_exact(std::vector<std::vector<Rational>>& rows)
{
    std::vector<std::size_t> pivots;
    if (rows.empty())
        return pivots;
    const std::size_t w = rows[0].size();
    std::size_t r = 0;
    for (std::size_t c = 0; c < w && r < rows.size(); ++c) {
        std::size_t sel = r;
        while (sel < rows.size() && rows[sel][c] == 0)
            ++sel;
        if (sel == rows.size())
            continue;
        std::swap(rows[r], rows[sel]);
        Rational inv = 1 / rows[r][c];
        for (std::size_t j = c; j < w; ++j)
            rows[r][j] *= inv;
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (i == r || rows[i][c] == 0)
                continue;
            Rational f = rows[i][c];
            for (std::size_t j = c; j < w; ++j)
                rows[i][j] -= f * rows[r][j];
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

namespace {

constexpr std::size_t kExactLimit = 64;        // unknowns handled by plain rational RREF
constexpr std::size_t kKernelCap = 8192;       // largest kernel basis we materialize
constexpr int kMaxPrimes = 8;

GradedPolynomial from_coeffs(const AlphabetPtr& alpha, const std::vector<Monomial>& basis,
                             const std::vector<Rational>& coeffs)
{
    GradedPolynomial p(alpha);
    for (std::size_t i = 0; i < basis.size(); ++i)
        if (coeffs[i] != 0)
            p.add_term(basis[i], coeffs[i]);
    return p;
}

/* scale to a primitive integer vector (kernel vectors only care about the line) */
GradedPolynomial primitive_integer(const GradedPolynomial& p)
{
    if (p.is_zero())
        return p;
    Integer lcm = 1, gcd = 0;
    for (const auto& [m, c] : p.terms())
        mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), c.get_den().get_mpz_t());
    for (const auto& [m, c] : p.terms()) {
        Integer n = c.get_num() * (lcm / c.get_den());
        mpz_gcd(gcd.get_mpz_t(), gcd.get_mpz_t(), n.get_mpz_t());
    }
    Rational scale(lcm, gcd == 0 ? Integer(1) : gcd);
    scale.canonicalize();
    GradedPolynomial out = p.scaled(scale);
    // fix the sign by the leading coefficient
    if (!out.is_zero() && out.terms().rbegin()->second < 0)
        out = -out;
    return out;
}

struct RowIndex {
    std::map<Monomial, std::uint32_t, MonoLess> ids;

    std::uint32_t get(const Monomial& m)
    {
        auto [it, fresh] = ids.emplace(m, std::uint32_t(ids.size()));
        return it->second;
    }
};

/* ---- exact stacked path ---- */

LinearSolution solve_exact(const AlphabetPtr& alpha, const std::vector<Monomial>& basis,
                           const std::vector<const EquationBlock*>& blocks,
                           std::size_t num_equations)
{
    const std::size_t U = basis.size();
    std::vector<std::vector<Rational>> rows;
    std::vector<std::string> row_label;
    for (const EquationBlock* b : blocks) {
        RowIndex ri;
        std::vector<std::vector<Rational>> local;
        auto row_of = [&](const Monomial& m) -> std::vector<Rational>& {
            std::uint32_t id = ri.get(m);
            if (id >= local.size())
                local.emplace_back(U + 1, Rational(0));
            return local[id];
        };
        for (std::size_t j = 0; j < U; ++j) {
            GradedPolynomial img =
                b->map.apply(GradedPolynomial::monomial(alpha, basis[j], 1));
            for (const auto& [m, c] : img.terms())
                row_of(m)[j] = c;
        }
        for (const auto& [m, c] : b->rhs.terms())
            row_of(m)[U] = c;
        for (auto& r : local) {
            rows.push_back(std::move(r));
            row_label.push_back(b->label);
        }
    }

    LinearSolution out;
    out.num_unknowns = U;
    out.num_equations = num_equations;
    std::vector<std::size_t> pivots = rref_exact(rows);
    std::vector<bool> is_pivot(U, false);
    std::vector<Rational> x(U, Rational(0));
    for (std::size_t r = 0; r < pivots.size(); ++r) {
        if (pivots[r] == U) {
            out.status = SolveStatus::Inconsistent;
            out.particular = GradedPolynomial::zero(alpha);
            // identify a block whose equation pivoted on the rhs
            out.witness = blocks.empty() ? "" : blocks.front()->label;
            return out;
        }
        is_pivot[pivots[r]] = true;
        x[pivots[r]] = rows[r][U];
    }
    out.particular = from_coeffs(alpha, basis, x);
    for (std::size_t f = 0; f < U; ++f) {
        if (is_pivot[f])
            continue;
        std::vector<Rational> v(U, Rational(0));
        v[f] = 1;
        for (std::size_t r = 0; r < pivots.size(); ++r)
            v[pivots[r]] = -rows[r][f];
        out.kernel.push_back(primitive_integer(from_coeffs(alpha, basis, v)));
    }
    out.kernel_dim = out.kernel.size();
    out.status = out.kernel_dim == 0 ? SolveStatus::Unique : SolveStatus::NonUnique;
    return out;
}

/* ---- modular stacked path ---- */

/* assemble the block's columns mod p via DFS over the degree budget so
 * partial image products are shared across the basis */
void assemble_columns_mod(const EquationBlock& b, const AlphabetPtr& alpha, int degree,
                          const ModField& F,
                          const std::function<void(const Monomial&, const ModPoly&)>& sink)
{
    std::vector<ModPoly> images;
    for (const GradedPolynomial& img : b.map.images())
        images.push_back(to_mod(img, F));
    const std::size_t nv = alpha->size();
    std::vector<Monomial::Entry> exps;

    std::function<void(std::size_t, int, const ModPoly&)> rec =
        [&](std::size_t i, int remaining, const ModPoly& partial) {
            if (remaining == 0) {
                sink(Monomial::make(*alpha, exps), partial);
                return;
            }
            if (i == nv)
                return;
            rec(i + 1, remaining, partial);
            int dv = alpha->var(i).degree;
            ModPoly cur = partial;
            for (int e = 1; e * dv <= remaining; ++e) {
                // cur *= images[i]
                ModPoly next;
                for (const auto& [ma, ca] : cur)
                    for (const auto& [mb, cb] : images[i]) {
                        std::uint32_t c = F.mul(ca, cb);
                        if (c == 0)
                            continue;
                        Monomial m = ma.times(mb);
                        auto [it, fresh] = next.emplace(std::move(m), c);
                        if (!fresh) {
                            it->second = F.add(it->second, c);
                            if (it->second == 0)
                                next.erase(it);
                        }
                    }
                cur = std::move(next);
                exps.emplace_back(int(i), e);
                rec(i + 1, remaining - e * dv, cur);
                exps.pop_back();
            }
        };
    ModPoly one;
    one.emplace(Monomial::one(), F.one_m());
    rec(0, degree, one);
}

struct PrimeState {
    std::uint32_t prime;
    ModField field;
    ModMatrix mat;
    bool rhs_bad = false;

    PrimeState(std::uint32_t p, std::size_t U) : prime(p), field(p), mat(ModField(p), U) {}
};

void feed_block(PrimeState& st, const EquationBlock& b, const AlphabetPtr& alpha, int degree,
                const std::map<Monomial, std::uint32_t, MonoLess>& col_of)
{
    if (st.mat.saturated())
        return;
    const std::size_t U = col_of.size();
    const ModField& F = st.field;
    RowIndex ri;
    std::vector<std::vector<std::pair<std::uint32_t, std::uint32_t>>> sparse;
    auto row_of = [&](const Monomial& m) -> std::vector<std::pair<std::uint32_t, std::uint32_t>>& {
        std::uint32_t id = ri.get(m);
        if (id >= sparse.size())
            sparse.emplace_back();
        return sparse[id];
    };
    assemble_columns_mod(b, alpha, degree, F, [&](const Monomial& col_mono, const ModPoly& col) {
        std::uint32_t j = col_of.at(col_mono);
        for (const auto& [m, v] : col)
            row_of(m).emplace_back(j, v);
    });
    for (const auto& [m, c] : b.rhs.terms()) {
        std::uint32_t v = F.reduce(c);
        if (v != 0)
            row_of(m).emplace_back(std::uint32_t(U), v);
    }
    std::vector<std::uint32_t> dense(U + 1);
    for (const auto& row : sparse) {
        if (st.mat.saturated())
            break;
        std::fill(dense.begin(), dense.end(), 0);
        for (const auto& [j, v] : row)
            dense[j] = F.add(dense[j], v);
        if (!st.mat.add_row(dense))
            st.rhs_bad = true;
    }
}

std::optional<Rational> crt_reconstruct(const std::vector<const PrimeState*>& states,
                                        const std::vector<std::vector<std::uint32_t>>& vals,
                                        std::size_t r)
{
    Integer value(0), modulus(1);
    for (std::size_t i = 0; i < states.size(); ++i) {
        Integer p(states[i]->prime);
        Integer residue((unsigned long)vals[i][r]);
        if (modulus == 1) {
            value = residue;
            modulus = p;
            continue;
        }
        Integer minv;
        mpz_invert(minv.get_mpz_t(), modulus.get_mpz_t(), p.get_mpz_t());
        Integer delta = ((residue - value % p) % p + p) % p;
        value += modulus * ((delta * minv) % p);
        modulus *= p;
    }
    return rational_reconstruct(value, modulus);
}

constexpr std::size_t kEarlyKernelCap = 8;

LinearSolution solve_modular(const AlphabetPtr& alpha, int degree,
                             const std::vector<Monomial>& basis,
                             const std::vector<const EquationBlock*>& blocks,
                             std::size_t num_equations)
{
    const std::size_t U = basis.size();
    std::map<Monomial, std::uint32_t, MonoLess> col_of;
    for (std::size_t j = 0; j < U; ++j)
        col_of.emplace(basis[j], std::uint32_t(j));

    PrimeStream primes;
    std::vector<std::unique_ptr<PrimeState>> states;
    states.push_back(std::make_unique<PrimeState>(primes.next(), U));
    std::size_t fed = 0;
    int primes_used = 1;

    auto feed_next = [&]() {
        for (auto& st : states)
            feed_block(*st, *blocks[fed], alpha, degree, col_of);
        ++fed;
    };

    while (true) {
        bool progress_possible = fed < blocks.size() && !states.front()->mat.saturated();
        if (progress_possible)
            feed_next();
        // reference state: prefer one whose rows never pivoted in the rhs
        const PrimeState* lead_state = nullptr;
        for (const auto& st : states)
            if (!st->rhs_bad) {
                lead_state = st.get();
                break;
            }
        if (!lead_state)
            lead_state = states.front().get();
        const ModMatrix& lead = lead_state->mat;
        bool all_fed = fed == blocks.size() || lead.saturated();
        bool small_kernel = U - lead.rank() <= kEarlyKernelCap;
        if (!all_fed && !small_kernel)
            continue;

        // inconsistency: several independent primes voting the same way
        int bad_votes = 0;
        for (const auto& st : states)
            bad_votes += st->rhs_bad ? 1 : 0;
        if (bad_votes >= 3 || (all_fed && bad_votes == int(states.size()) && bad_votes >= 1 &&
                               primes_used >= 3)) {
            LinearSolution out;
            out.num_unknowns = U;
            out.num_equations = num_equations;
            out.status = SolveStatus::Inconsistent;
            out.particular = GradedPolynomial::zero(alpha);
            out.witness = blocks.empty() ? "" : blocks.front()->label;
            return out;
        }
        if (lead_state->rhs_bad && primes_used < kMaxPrimes) {
            // gather more evidence before declaring the system inconsistent
            states.push_back(std::make_unique<PrimeState>(primes.next(), U));
            ++primes_used;
            for (std::size_t i = 0; i < fed; ++i)
                feed_block(*states.back(), *blocks[i], alpha, degree, col_of);
            continue;
        }

        // keep the states whose pivot structure matches the highest rank seen
        std::vector<const PrimeState*> consistent;
        std::vector<std::size_t> pivots = lead.pivot_cols();
        for (const auto& st : states)
            if (!st->rhs_bad && st->mat.rank() == lead.rank() &&
                st->mat.pivot_cols() == pivots)
                consistent.push_back(st.get());
        if (consistent.empty())
            consistent.push_back(lead_state);

        std::vector<std::size_t> freecols = lead.free_cols();
        if (freecols.size() > kKernelCap)
            throw Error("kernel dimension exceeds materialization cap");

        // gather residues: particular values plus one kernel vector per free col
        bool reconstructed = true;
        std::vector<std::vector<std::uint32_t>> pvals;
        for (const PrimeState* st : consistent)
            pvals.push_back(st->mat.particular_values());
        std::vector<Rational> x(U, Rational(0));
        for (std::size_t r = 0; r < pivots.size() && reconstructed; ++r) {
            auto q = crt_reconstruct(consistent, pvals, r);
            if (!q)
                reconstructed = false;
            else
                x[pivots[r]] = *q;
        }
        std::vector<std::vector<Rational>> kern;
        for (std::size_t fi = 0; fi < freecols.size() && reconstructed; ++fi) {
            std::vector<std::vector<std::uint32_t>> kvals;
            for (const PrimeState* st : consistent)
                kvals.push_back(st->mat.kernel_values(freecols[fi]));
            std::vector<Rational> v(U, Rational(0));
            v[freecols[fi]] = 1;
            for (std::size_t r = 0; r < pivots.size() && reconstructed; ++r) {
                auto q = crt_reconstruct(consistent, kvals, r);
                if (!q)
                    reconstructed = false;
                else
                    v[pivots[r]] = *q;
            }
            if (reconstructed)
                kern.push_back(std::move(v));
        }

        bool verified = reconstructed;
        LinearSolution out;
        if (reconstructed) {
            out.num_unknowns = U;
            out.num_equations = num_equations;
            out.particular = from_coeffs(alpha, basis, x);
            for (auto& v : kern)
                out.kernel.push_back(primitive_integer(from_coeffs(alpha, basis, v)));
            out.kernel_dim = out.kernel.size();
            // exact certification against every block, including unfed ones
            for (const EquationBlock* b : blocks) {
                if (!substitution_equals(b->map, out.particular, b->rhs)) {
                    verified = false;
                    break;
                }
                GradedPolynomial zero = GradedPolynomial::zero(b->map.target());
                for (const GradedPolynomial& v : out.kernel)
                    if (!substitution_equals(b->map, v, zero)) {
                        verified = false;
                        break;
                    }
                if (!verified)
                    break;
            }
        }
        if (verified) {
            // dim ker over Q <= U - rank_p and the exhibited exact vectors
            // close the gap, so the kernel dimension is certified
            out.status = out.kernel_dim == 0 ? SolveStatus::Unique : SolveStatus::NonUnique;
            return out;
        }
        if (fed < blocks.size() && !lead.saturated())
            continue;  // unfed blocks may legitimately cut the kernel further
        if (primes_used >= kMaxPrimes)
            throw Error("modular linear solve failed to certify a result");
        states.push_back(std::make_unique<PrimeState>(primes.next(), U));
        ++primes_used;
        for (std::size_t i = 0; i < fed; ++i)
            feed_block(*states.back(), *blocks[i], alpha, degree, col_of);
    }
}

/* renaming blocks pin the solution immediately */
LinearSolution solve_with_renaming(const AlphabetPtr& alpha, int degree,
                                   const std::vector<const EquationBlock*>& blocks,
                                   std::size_t renaming_index, std::size_t num_equations)
{
    const EquationBlock* ren = blocks[renaming_index];
    LinearSolution out;
    out.num_unknowns = monomial_basis_size(*alpha, degree);
    out.num_equations = num_equations;
    out.particular = ren->map.inverse_renaming().apply(ren->rhs);
    out.status = SolveStatus::Unique;
    for (std::size_t i = 0; i < blocks.size(); ++i) {
        if (i == renaming_index)
            continue;
        if (!substitution_equals(blocks[i]->map, out.particular, blocks[i]->rhs)) {
            out.status = SolveStatus::Inconsistent;
            out.witness = blocks[i]->label;
            out.particular = GradedPolynomial::zero(alpha);
            return out;
        }
    }
    return out;
}

}  // namespace

LinearSolution linear_solve(const AlphabetPtr& alpha, int degree,
                            const std::vector<EquationBlock>& blocks)
{
    for (const EquationBlock& b : blocks) {
        if (!same_alphabet(b.map.source(), alpha))
            throw Error("equation block source alphabet mismatch");
        if (!same_alphabet(b.rhs.alphabet(), b.map.target()))
            throw Error("equation rhs alphabet mismatch");
        if (!b.rhs.is_zero() && !b.rhs.is_homogeneous(degree))
            throw Error("equation rhs must be homogeneous of the unknown's degree");
    }
    std::vector<Monomial> basis = monomial_basis(*alpha, degree);
    const std::size_t U = basis.size();
    std::size_t num_equations = 0;
    for (const EquationBlock& b : blocks)
        num_equations += monomial_basis_size(*b.map.target(), degree);

    if (blocks.empty() || U == 0) {
        LinearSolution out;
        out.num_unknowns = U;
        out.num_equations = num_equations;
        out.particular = GradedPolynomial::zero(alpha);
        for (const EquationBlock& b : blocks)
            if (!b.rhs.is_zero()) {
                out.status = SolveStatus::Inconsistent;
                out.witness = b.label;
                return out;
            }
        for (const Monomial& m : basis)
            out.kernel.push_back(GradedPolynomial::monomial(alpha, m, 1));
        out.kernel_dim = out.kernel.size();
        out.status = out.kernel_dim == 0 ? SolveStatus::Unique : SolveStatus::NonUnique;
        return out;
    }

    // order: principal-style blocks first, then wide blocks; a renaming block
    // short-circuits the elimination entirely
    std::vector<const EquationBlock*> ordered;
    ordered.reserve(blocks.size());
    for (const EquationBlock& b : blocks)
        ordered.push_back(&b);
    std::vector<std::size_t> rows_estimate(blocks.size());
    for (std::size_t i = 0; i < blocks.size(); ++i)
        rows_estimate[i] = monomial_basis_size(*blocks[i].map.target(), degree);
    std::stable_sort(ordered.begin(), ordered.end(), [&](const EquationBlock* a,
                                                         const EquationBlock* b) {
        auto key = [&](const EquationBlock* e) {
            std::size_t idx = std::size_t(e - blocks.data());
            return std::make_tuple(!e->rhs.is_zero() ? 0 : 1,
                                   std::size_t(-1) - rows_estimate[idx]);
        };
        return key(a) < key(b);
    });
    for (std::size_t i = 0; i < ordered.size(); ++i)
        if (ordered[i]->map.is_renaming())
            return solve_with_renaming(alpha, degree, ordered, i, num_equations);

    if (U <= kExactLimit)
        return solve_exact(alpha, basis, ordered, num_equations);
    return solve_modular(alpha, degree, basis, ordered, num_equations);
}

}  // namespace tpoly
