#pragma once

#include <cstdint>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "rmspec/gf2.hpp"

namespace rmspec {

/// Boolean function in algebraic normal form: an XOR of monomials over
/// variables x_1..x_m.  A monomial is the bitmask of its variables
/// (bit j-1 set means x_j appears); mask 0 is the constant 1.
class BooleanFunction {
public:
    explicit BooleanFunction(int m) : m_(m) {}
    BooleanFunction(int m, std::initializer_list<std::uint32_t> monomials);

    /// Parses "x1*x2*x3 + x4*x5" style text; "0" is the zero function,
    /// a bare "1" the constant.
    static BooleanFunction parse(int m, std::string_view text);

    int variables() const { return m_; }
    int degree() const;
    const std::set<std::uint32_t>& monomials() const { return monomials_; }

    /// XOR-toggles a monomial (GF(2) coefficient arithmetic).
    void toggle_monomial(std::uint32_t mask);

    BooleanFunction& operator^=(const BooleanFunction& o);
    friend BooleanFunction operator^(BooleanFunction a, const BooleanFunction& b) { return a ^= b; }
    /// ANF product, with GF(2) cancellation of repeated monomials.
    friend BooleanFunction operator*(const BooleanFunction& a, const BooleanFunction& b);

    /// Truth table of length 2^m.  Point i assigns x_j = bit j-1 of i.
    BitVector evaluate() const;
    std::uint64_t weight() const { return evaluate().weight(); }

    std::string to_string() const;
    bool operator==(const BooleanFunction&) const = default;

private:
    int m_;
    std::set<std::uint32_t> monomials_;
};

/// RM(r,m): evaluations of all Boolean functions of degree <= r.
/// Generator rows are the monomial truth tables; dimension sum_{i<=r} C(m,i).
LinearCode rm_code(int r, int m);

/// GF(2^t) with a primitive polynomial (bit mask, bit i = coefficient of x^i).
/// The generator alpha = x must have full multiplicative order; the
/// constructor verifies this and throws otherwise.
class ExtField {
public:
    ExtField(int t, std::uint32_t primitive_poly);
    /// Uses the bundled default polynomial for t (Conway polynomials, the
    /// common computer-algebra defaults; required to reproduce published
    /// BCH intersection tables).
    static ExtField with_default_poly(int t);
    static std::uint32_t default_poly(int t);

    int degree() const { return t_; }
    std::uint32_t order() const { return n_; }  // 2^t - 1
    std::uint32_t primitive_poly() const { return poly_; }

    std::uint32_t alpha_pow(std::uint64_t e) const { return exp_[e % n_]; }
    std::uint32_t mul(std::uint32_t a, std::uint32_t b) const;
    std::uint32_t log(std::uint32_t a) const;

private:
    int t_;
    std::uint32_t n_;
    std::uint32_t poly_;
    std::vector<std::uint32_t> exp_;
    std::vector<std::uint32_t> log_;
};

/// Partition of {0..n-1} into 2-cyclotomic cosets, each sorted, ordered by
/// smallest element.  Throws on even n.
std::vector<std::vector<int>> cyclotomic_cosets(int n);

/// Minimal polynomial of alpha^e over GF(2), as a coefficient bit mask.
std::uint64_t minimal_polynomial(const ExtField& field, int e);

/// Narrow-sense BCH code of length n = 2^t - 1 and designed distance d:
/// g(x) = lcm of the minimal polynomials of alpha^1..alpha^{d-1}.
/// Coordinate j carries the coefficient of x^j.
LinearCode bch_code(int n, int d);

/// Generator polynomial of bch_code(n, d), low-degree coefficient first.
std::vector<std::uint8_t> bch_generator_poly(int n, int d);

/// Extension of bch_code(n,d) on the Reed-Muller coordinate set of
/// rm_code(r,t): cyclic coordinate i sits at the evaluation point whose
/// integer value is i, and the overall-parity coordinate at the final point
/// n = 2^t - 1.  This identity placement is the one under which the
/// published RM/BCH intersection dimensions and tables reproduce.
LinearCode extended_bch_rm_aligned(int n, int d);

}  // namespace rmspec
