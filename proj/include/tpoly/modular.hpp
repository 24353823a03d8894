#pragma once

#include "tpoly/substitution.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

namespace tpoly {

/* Montgomery arithmetic over a prime just below 2^31.  Used to run Gaussian
 * elimination and identity checks fast; every result derived from it is
 * reconstructed to exact rationals and re-verified, or certified by a
 * deterministic coefficient bound. */
class ModField {
public:
    explicit ModField(std::uint32_t prime);

    std::uint32_t prime() const { return p_; }

    std::uint32_t to_m(std::uint32_t x) const { return mul_raw(x, r2_); }
    std::uint32_t from_m(std::uint32_t a) const { return mul_raw(a, 1); }
    std::uint32_t one_m() const { return one_; }

    std::uint32_t add(std::uint32_t a, std::uint32_t b) const
    {
        std::uint32_t s = a + b;
        return s >= p_ ? s - p_ : s;
    }
    std::uint32_t sub(std::uint32_t a, std::uint32_t b) const { return a >= b ? a - b : a + p_ - b; }
    std::uint32_t neg(std::uint32_t a) const { return a == 0 ? 0 : p_ - a; }
    std::uint32_t mul(std::uint32_t a, std::uint32_t b) const { return mul_raw(a, b); }
    std::uint32_t inv(std::uint32_t a) const;  // montgomery domain
    std::uint32_t pow(std::uint32_t a, std::uint64_t e) const;

    std::uint32_t reduce(const Integer& z) const;
    /* num * den^{-1}; throws if the prime divides den */
    std::uint32_t reduce(const Rational& q) const;

private:
    std::uint32_t mul_raw(std::uint32_t a, std::uint32_t b) const
    {
        std::uint64_t t = std::uint64_t(a) * b;
        std::uint32_t m = std::uint32_t(t) * pinv_;
        std::uint64_t u = (t + std::uint64_t(m) * p_) >> 32;
        return u >= p_ ? std::uint32_t(u - p_) : std::uint32_t(u);
    }

    std::uint32_t p_ = 0;
    std::uint32_t pinv_ = 0;  // -p^{-1} mod 2^32
    std::uint32_t r2_ = 0;    // 2^64 mod p
    std::uint32_t one_ = 0;   // 2^32 mod p
};

bool is_prime_u32(std::uint32_t n);

/* deterministic descending stream of 31-bit primes */
class PrimeStream {
public:
    PrimeStream() = default;
    std::uint32_t next();

private:
    std::uint32_t cursor_ = 0x7fffffffu;
};

/* image of p under s with coefficients in F; terms sorted by monomial */
using ModPoly = std::map<Monomial, std::uint32_t, MonoLess>;

ModPoly apply_mod(const Substitution& s, const GradedPolynomial& p, const ModField& F);
ModPoly to_mod(const GradedPolynomial& p, const ModField& F);

/* Exact check s(x) == rhs.  Integral inputs use modular evaluation with a
 * deterministic CRT bound; anything else falls back to exact arithmetic. */
bool substitution_equals(const Substitution& s, const GradedPolynomial& x,
                         const GradedPolynomial& rhs);

std::optional<Rational> rational_reconstruct(const Integer& residue, const Integer& modulus);

/* Row-echelon accumulator mod p.  Rows are stored as suffixes starting at
 * their pivot column; an extra rhs column rides at index ncols. */
class ModMatrix {
public:
    ModMatrix(ModField F, std::size_t ncols);

    /* reduces the dense row (length ncols+1) in place; keeps it if nonzero.
     * Returns false if the row pivots in the rhs column (inconsistency). */
    bool add_row(std::vector<std::uint32_t>& dense);

    std::size_t rank() const { return rows_.size(); }
    bool saturated() const { return rank() == ncols_; }
    std::size_t ncols() const { return ncols_; }

    std::vector<std::size_t> pivot_cols() const;
    std::vector<std::size_t> free_cols() const;

    /* standard-domain values of the particular solution at the pivot
     * columns (free coordinates zero), in pivot_cols order */
    std::vector<std::uint32_t> particular_values() const;
    /* values at the pivot columns of the kernel vector carrying 1 at the
     * free column f and 0 at the other free columns */
    std::vector<std::uint32_t> kernel_values(std::size_t f) const;

private:
    std::vector<std::uint32_t> back_substitute(std::size_t unit_col, bool use_rhs) const;

    ModField F_;
    std::size_t ncols_;
    std::vector<std::vector<std::uint32_t>> rows_;  // suffix from pivot col (montgomery form)
    std::vector<std::size_t> pivcol_;
    std::vector<int> pivrow_;  // per column, -1 if free
};

}  // namespace tpoly
