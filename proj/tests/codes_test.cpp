#include <doctest.h>

#include <bit>
#include <cstdint>
#include <stdexcept>

#include "rmspec/codes.hpp"

using namespace rmspec;

namespace {

std::uint64_t binom(std::uint64_t n, std::uint64_t k) {
    if (k > n) return 0;
    std::uint64_t r = 1;
    for (std::uint64_t i = 0; i < k; ++i) r = r * (n - i) / (i + 1);
    return r;
}

std::uint64_t rm_dimension(int r, int m) {
    std::uint64_t d = 0;
    for (int i = 0; i <= r; ++i) d += binom(m, i);
    return d;
}

// Horner evaluation of a GF(2)[x] polynomial (bit i = coeff of x^i) at a
// field element.
std::uint32_t eval_poly(const ExtField& f, std::uint64_t poly, std::uint32_t x) {
    std::uint32_t acc = 0;
    for (int i = 63; i >= 0; --i) {
        acc = f.mul(acc, x);
        if ((poly >> i) & 1) acc ^= 1;
    }
    return acc;
}

}  // namespace

TEST_CASE("anf parsing and printing") {
    const BooleanFunction f = BooleanFunction::parse(4, "x1*x2 + x3 + 1");
    CHECK(f.monomials() == std::set<std::uint32_t>{0b0011, 0b0100, 0});
    CHECK(f.degree() == 2);
    CHECK(BooleanFunction::parse(4, f.to_string()) == f);
    CHECK(BooleanFunction::parse(3, "0") == BooleanFunction(3));
    CHECK(BooleanFunction::parse(3, "1").monomials() == std::set<std::uint32_t>{0});
    CHECK(BooleanFunction(3).degree() == -1);  // zero function
}

TEST_CASE("evaluation follows the binary point ordering") {
    // x_j is bit j-1 of the point index.
    CHECK(BooleanFunction::parse(2, "x1").evaluate().to_string() == "0101");
    CHECK(BooleanFunction::parse(2, "x2").evaluate().to_string() == "0011");
    CHECK(BooleanFunction::parse(2, "x1*x2").evaluate().to_string() == "0001");
    CHECK(BooleanFunction::parse(2, "1").evaluate().to_string() == "1111");
    CHECK(BooleanFunction::parse(2, "x1 + x2").evaluate().to_string() == "0110");
}

TEST_CASE("anf arithmetic cancels over GF(2)") {
    const BooleanFunction a = BooleanFunction::parse(4, "x1 + x2");
    const BooleanFunction b = BooleanFunction::parse(4, "x2 + x3");
    CHECK((a ^ b) == BooleanFunction::parse(4, "x1 + x3"));
    // (x1+x2)(x2+x3) = x1x2 + x1x3 + x2 + x2x3  (x2*x2 = x2)
    CHECK(a * b == BooleanFunction::parse(4, "x1*x2 + x1*x3 + x2 + x2*x3"));
    const BooleanFunction one = BooleanFunction::parse(4, "1");
    CHECK(a * one == a);
    CHECK((a ^ a) == BooleanFunction(4));
}

TEST_CASE("monomial weights are 2^(m-deg)") {
    for (int m = 1; m <= 10; ++m) {
        for (int deg = 0; deg <= m; ++deg) {
            BooleanFunction f(m);
            f.toggle_monomial((std::uint32_t{1} << deg) - 1);
            CHECK(f.weight() == (std::uint64_t{1} << (m - deg)));
        }
    }
}

TEST_CASE("rm codes have the binomial-sum dimension") {
    for (int m = 1; m <= 10; ++m) {
        for (int r = 0; r <= m; ++r) {
            const LinearCode c = rm_code(r, m);
            CHECK(c.length() == (std::uint64_t{1} << m));
            CHECK(c.dimension() == rm_dimension(r, m));
        }
    }
}

TEST_CASE("rm(0,m) is repetition, rm(m,m) is everything") {
    const LinearCode rep = rm_code(0, 3);
    CHECK(rep.dimension() == 1);
    CHECK(rep.contains(BitVector::from_string("11111111")));
    CHECK(rm_code(3, 3) == LinearCode::full(8));
}

TEST_CASE("rm duality: dual of rm(r,m) is rm(m-r-1,m)") {
    for (int m = 2; m <= 10; ++m) {
        for (int r = 0; r < m; ++r) {
            CHECK(rm_code(r, m).dual() == rm_code(m - r - 1, m));
        }
    }
}

TEST_CASE("rm nesting") {
    for (int m = 2; m <= 8; ++m)
        for (int r = 1; r <= m; ++r)
            for (std::uint64_t i = 0; i < rm_code(r - 1, m).dimension(); ++i)
                CHECK(rm_code(r, m).contains(rm_code(r - 1, m).generators().row(i)));
}

TEST_CASE("field construction validates primitivity") {
    for (int t = 1; t <= 10; ++t) {
        const ExtField f = ExtField::with_default_poly(t);
        CHECK(f.degree() == t);
        CHECK(f.order() == (std::uint32_t{1} << t) - 1);
        CHECK(f.alpha_pow(0) == 1);
        CHECK(f.alpha_pow(f.order()) == 1);
        if (t >= 2) CHECK(f.alpha_pow(1) == 2);  // alpha = x
    }
    // x^4 + x^3 + x^2 + x + 1 divides x^5 - 1: order 5, not primitive in GF(16)
    CHECK_THROWS(ExtField(4, 0b11111));
}

TEST_CASE("field arithmetic") {
    const ExtField f = ExtField::with_default_poly(4);  // x^4 + x + 1
    CHECK(f.mul(0, 7) == 0);
    CHECK(f.mul(1, 7) == 7);
    CHECK(f.mul(2, 0b1000) == 0b0011);  // x * x^3 = x^4 = x + 1
    for (std::uint32_t a = 1; a < 16; ++a) {
        CHECK(f.alpha_pow(f.log(a)) == a);
        for (std::uint32_t b = 1; b < 16; ++b) {
            CHECK(f.mul(a, b) == f.alpha_pow((std::uint64_t)f.log(a) + f.log(b)));
        }
    }
}

TEST_CASE("cyclotomic cosets partition {0..n-1}") {
    const auto cosets = cyclotomic_cosets(15);
    CHECK(cosets.size() == 5);
    CHECK(cosets[0] == std::vector<int>{0});
    CHECK(cosets[1] == std::vector<int>{1, 2, 4, 8});
    CHECK(cosets[2] == std::vector<int>{3, 6, 9, 12});
    std::size_t total = 0;
    for (const auto& c : cosets) total += c.size();
    CHECK(total == 15);
    CHECK_THROWS_AS(cyclotomic_cosets(8), std::invalid_argument);
}

TEST_CASE("minimal polynomials") {
    const ExtField f = ExtField::with_default_poly(4);
    CHECK(minimal_polynomial(f, 0) == 0b11);       // x + 1
    CHECK(minimal_polynomial(f, 1) == 0b10011);    // the field polynomial itself
    CHECK(minimal_polynomial(f, 5) == 0b111);      // alpha^5 has order 3: x^2+x+1
    // each minimal polynomial annihilates its defining element and has the
    // degree of the element's coset
    for (int e = 0; e < 15; ++e) {
        const std::uint64_t mp = minimal_polynomial(f, e);
        CHECK(eval_poly(f, mp, f.alpha_pow(e)) == 0);
    }
}

TEST_CASE("bch generator polynomial for the classic (15,5) code") {
    // g(x) = m_1(x) m_3(x) = (x^4+x+1)(x^4+x^3+x^2+x+1) = x^8+x^7+x^6+x^4+1
    const auto g = bch_generator_poly(15, 5);
    const std::vector<std::uint8_t> expected{1, 0, 0, 0, 1, 0, 1, 1, 1};
    CHECK(g == expected);
    CHECK(bch_code(15, 5).dimension() == 7);
}

TEST_CASE("bch codewords vanish at the designed roots") {
    const ExtField f = ExtField::with_default_poly(4);
    const LinearCode c = bch_code(15, 7);
    CHECK(c.dimension() == 5);
    for (std::uint64_t r = 0; r < c.dimension(); ++r) {
        std::uint64_t word = 0;
        for (int j = 0; j < 15; ++j)
            if (c.generators().row(r).get(j)) word |= std::uint64_t{1} << j;
        for (int e = 1; e <= 6; ++e) CHECK(eval_poly(f, word, f.alpha_pow(e)) == 0);
    }
}

TEST_CASE("bch dimensions for the two production lengths") {
    CHECK(bch_code(255, 19).dimension() == 187);
    CHECK(bch_code(1023, 157).dimension() == 403);
}

TEST_CASE("extended bch lives on the rm coordinate frame") {
    const LinearCode e = extended_bch_rm_aligned(15, 5);
    CHECK(e.length() == 16);
    CHECK(e.dimension() == 7);
    // every codeword has even weight (the appended coordinate is the parity)
    CHECK(e == bch_code(15, 5).extend());
    for (std::uint64_t r = 0; r < e.dimension(); ++r)
        CHECK(e.generators().row(r).weight() % 2 == 0);
}
