#include "rmspec/codes.hpp"

#include <algorithm>
#include <bit>
#include <sstream>
#include <stdexcept>

namespace rmspec {

BooleanFunction::BooleanFunction(int m, std::initializer_list<std::uint32_t> monomials)
    : m_(m) {
    for (std::uint32_t mask : monomials) toggle_monomial(mask);
}

void BooleanFunction::toggle_monomial(std::uint32_t mask) {
    if (m_ < 32 && (mask >> m_) != 0)
        throw std::invalid_argument("BooleanFunction: monomial uses variable beyond x_m");
    auto it = monomials_.find(mask);
    if (it != monomials_.end())
        monomials_.erase(it);
    else
        monomials_.insert(mask);
}

int BooleanFunction::degree() const {
    if (monomials_.empty()) return -1;
    int d = 0;
    for (std::uint32_t mask : monomials_) d = std::max(d, std::popcount(mask));
    return d;
}

BooleanFunction& BooleanFunction::operator^=(const BooleanFunction& o) {
    if (m_ != o.m_) throw std::invalid_argument("BooleanFunction xor: variable count mismatch");
    for (std::uint32_t mask : o.monomials_) toggle_monomial(mask);
    return *this;
}

BooleanFunction operator*(const BooleanFunction& a, const BooleanFunction& b) {
    if (a.m_ != b.m_) throw std::invalid_argument("BooleanFunction product: variable count mismatch");
    BooleanFunction out(a.m_);
    for (std::uint32_t ma : a.monomials_)
        for (std::uint32_t mb : b.monomials_) out.toggle_monomial(ma | mb);
    return out;
}

BitVector BooleanFunction::evaluate() const {
    const std::uint64_t n = std::uint64_t{1} << m_;
    BitVector tt(n);
    for (std::uint32_t mask : monomials_) {
        // XOR in the indicator of {p : p covers mask}.
        for (std::uint64_t p = mask; p < n; p = ((p | mask) + 1) | mask) {
            tt.flip(p);
            if (p == n - 1) break;  // guard wrap for mask covering the top point
        }
    }
    return tt;
}

BooleanFunction BooleanFunction::parse(int m, std::string_view text) {
    BooleanFunction f(m);
    std::string term;
    std::istringstream is{std::string(text)};
    while (std::getline(is, term, '+')) {
        // strip whitespace
        std::string t;
        for (char c : term)
            if (!std::isspace(static_cast<unsigned char>(c))) t += c;
        if (t.empty()) continue;
        if (t == "0") continue;
        if (t == "1") {
            f.toggle_monomial(0);
            continue;
        }
        std::uint32_t mask = 0;
        std::istringstream ts(t);
        std::string var;
        while (std::getline(ts, var, '*')) {
            if (var.size() < 2 || var[0] != 'x')
                throw std::invalid_argument("BooleanFunction::parse: bad term '" + t + "'");
            const int idx = std::stoi(var.substr(1));
            if (idx < 1 || idx > m)
                throw std::invalid_argument("BooleanFunction::parse: variable x" +
                                            std::to_string(idx) + " out of range");
            mask |= std::uint32_t{1} << (idx - 1);
        }
        f.toggle_monomial(mask);
    }
    return f;
}

std::string BooleanFunction::to_string() const {
    if (monomials_.empty()) return "0";
    // Order terms by degree, then by mask, for a stable readable form.
    std::vector<std::uint32_t> masks(monomials_.begin(), monomials_.end());
    std::sort(masks.begin(), masks.end(), [](std::uint32_t a, std::uint32_t b) {
        const int da = std::popcount(a), db = std::popcount(b);
        return da != db ? da < db : a < b;
    });
    std::string out;
    for (std::uint32_t mask : masks) {
        if (!out.empty()) out += " + ";
        if (mask == 0) {
            out += "1";
            continue;
        }
        bool first = true;
        for (int j = 0; j < m_; ++j) {
            if ((mask >> j) & 1) {
                if (!first) out += "*";
                first = false;
                out += "x" + std::to_string(j + 1);
            }
        }
    }
    return out;
}

LinearCode rm_code(int r, int m) {
    if (m < 0 || m > 26) throw std::invalid_argument("rm_code: m out of range");
    if (r < 0 || r > m) throw std::invalid_argument("rm_code: require 0 <= r <= m");
    const std::uint64_t n = std::uint64_t{1} << m;
    BitMatrix gens(n);
    for (std::uint32_t mask = 0; mask < n; ++mask) {
        if (std::popcount(mask) > r) continue;
        BooleanFunction mono(m, {mask});
        gens.append_row(mono.evaluate());
    }
    return LinearCode(n, gens);
}

ExtField::ExtField(int t, std::uint32_t primitive_poly)
    : t_(t), n_((std::uint32_t{1} << t) - 1), poly_(primitive_poly) {
    if (t < 1 || t > 20) throw std::invalid_argument("ExtField: degree out of range");
    if ((poly_ >> t) != 1) throw std::invalid_argument("ExtField: polynomial degree != t");
    exp_.assign(n_, 0);
    log_.assign(n_ + 1, 0);
    std::uint32_t x = 1;
    for (std::uint32_t i = 0; i < n_; ++i) {
        if (x == 1 && i > 0)
            throw std::invalid_argument("ExtField: polynomial is not primitive");
        exp_[i] = x;
        log_[x] = i;
        x <<= 1;
        if (x >> t) x ^= poly_;
    }
    if (x != 1) throw std::invalid_argument("ExtField: polynomial is not primitive");
}

std::uint32_t ExtField::default_poly(int t) {
    // Conway polynomials up to degree 10 (the range needed for BCH lengths
    // 7..1023); degrees 8 and 10 are load-bearing: published RM/BCH
    // intersection results depend on the CAS-default field representation.
    switch (t) {
        case 1: return 0b11;
        case 2: return 0b111;
        case 3: return 0b1011;
        case 4: return 0b10011;
        case 5: return 0b100101;
        case 6: return 0b1011011;
        case 7: return 0b10000011;
        case 8: return 0b100011101;
        case 9: return 0b1000010001;
        case 10: return 0b10001101111;
        default:
            throw std::invalid_argument("ExtField: no bundled polynomial for degree " +
                                        std::to_string(t));
    }
}

ExtField ExtField::with_default_poly(int t) { return ExtField(t, default_poly(t)); }

std::uint32_t ExtField::mul(std::uint32_t a, std::uint32_t b) const {
    if (a == 0 || b == 0) return 0;
    return exp_[(std::uint64_t{log_[a]} + log_[b]) % n_];
}

std::uint32_t ExtField::log(std::uint32_t a) const {
    if (a == 0 || a > n_) throw std::domain_error("ExtField::log of zero or out-of-range element");
    return log_[a];
}

std::vector<std::vector<int>> cyclotomic_cosets(int n) {
    if (n <= 0 || n % 2 == 0) throw std::invalid_argument("cyclotomic_cosets: n must be odd");
    std::vector<bool> seen(n, false);
    std::vector<std::vector<int>> cosets;
    for (int i = 0; i < n; ++i) {
        if (seen[i]) continue;
        std::vector<int> coset;
        std::int64_t x = i;
        do {
            coset.push_back(static_cast<int>(x));
            seen[x] = true;
            x = (2 * x) % n;
        } while (x != i);
        std::sort(coset.begin(), coset.end());
        cosets.push_back(std::move(coset));
    }
    return cosets;
}

std::uint64_t minimal_polynomial(const ExtField& field, int e) {
    const int n = static_cast<int>(field.order());
    if (e < 0 || e >= n + 1) throw std::invalid_argument("minimal_polynomial: exponent out of range");
    if (e == 0) return 0b11;  // x + 1

    std::vector<int> coset;
    int x = e % n;
    do {
        coset.push_back(x);
        x = (2 * x) % n;
    } while (x != e % n);

    // Product of (x + alpha^j) over the coset; coefficients live in GF(2^t)
    // during the expansion and must land in {0,1}.
    std::vector<std::uint32_t> poly{1};
    for (int j : coset) {
        const std::uint32_t root = field.alpha_pow(j);
        std::vector<std::uint32_t> next(poly.size() + 1, 0);
        for (std::size_t k = 0; k < poly.size(); ++k) {
            next[k] ^= field.mul(poly[k], root);
            next[k + 1] ^= poly[k];
        }
        poly = std::move(next);
    }
    std::uint64_t bits = 0;
    for (std::size_t k = 0; k < poly.size(); ++k) {
        if (poly[k] > 1) throw std::logic_error("minimal_polynomial: non-binary coefficient");
        bits |= std::uint64_t{poly[k]} << k;
    }
    return bits;
}

namespace {

std::vector<std::uint8_t> poly_mul_gf2(const std::vector<std::uint8_t>& a,
                                       const std::vector<std::uint8_t>& b) {
    std::vector<std::uint8_t> out(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (!a[i]) continue;
        for (std::size_t j = 0; j < b.size(); ++j) out[i + j] ^= b[j];
    }
    return out;
}

int field_degree_for_length(int n) {
    for (int t = 2; t <= 20; ++t) {
        if ((1 << t) - 1 == n) return t;
    }
    throw std::invalid_argument("BCH length must be 2^t - 1, got " + std::to_string(n));
}

}  // namespace

std::vector<std::uint8_t> bch_generator_poly(int n, int d) {
    const int t = field_degree_for_length(n);
    if (d < 2 || d > n) throw std::invalid_argument("bch_code: require 2 <= d <= n");
    const ExtField field = ExtField::with_default_poly(t);

    std::vector<std::uint8_t> g{1};
    std::vector<bool> used(n, false);
    for (int j = 1; j < d; ++j) {
        if (used[j]) continue;
        int x = j;
        do {
            used[x] = true;
            x = (2 * x) % n;
        } while (x != j);
        const std::uint64_t mp = minimal_polynomial(field, j);
        const int deg = 63 - std::countl_zero(mp);
        std::vector<std::uint8_t> factor(deg + 1);
        for (int k = 0; k <= deg; ++k) factor[k] = (mp >> k) & 1;
        g = poly_mul_gf2(g, factor);
    }
    return g;
}

LinearCode bch_code(int n, int d) {
    const std::vector<std::uint8_t> g = bch_generator_poly(n, d);
    const int deg = static_cast<int>(g.size()) - 1;
    const int k = n - deg;
    if (k <= 0) throw std::invalid_argument("bch_code: designed distance leaves an empty code");
    BitMatrix gens(n);
    for (int i = 0; i < k; ++i) {
        BitVector row(n);
        for (int j = 0; j <= deg; ++j)
            if (g[j]) row.set(i + j, true);
        gens.append_row(std::move(row));
    }
    return LinearCode(n, gens);
}

LinearCode extended_bch_rm_aligned(int n, int d) {
    // With the identity placement, extending on the last coordinate already
    // puts cyclic coordinate i at point i and the parity at point n.
    return bch_code(n, d).extend();
}

}  // namespace rmspec
