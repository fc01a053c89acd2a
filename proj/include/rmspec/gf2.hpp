#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json_fwd.hpp>

namespace rmspec {

/// Packed bit vector over GF(2).  Coordinate i lives at word i/64, bit i%64;
/// trailing bits of the last word are kept zero.
class BitVector {
public:
    BitVector() = default;
    explicit BitVector(std::uint64_t n) : len_(n), words_((n + 63) / 64, 0) {}
    static BitVector from_string(std::string_view bits);

    std::uint64_t size() const { return len_; }
    bool get(std::uint64_t i) const { return (words_[i >> 6] >> (i & 63)) & 1; }
    void set(std::uint64_t i, bool v) {
        const std::uint64_t mask = std::uint64_t{1} << (i & 63);
        if (v)
            words_[i >> 6] |= mask;
        else
            words_[i >> 6] &= ~mask;
    }
    void flip(std::uint64_t i) { words_[i >> 6] ^= std::uint64_t{1} << (i & 63); }

    BitVector& operator^=(const BitVector& o);
    friend BitVector operator^(BitVector a, const BitVector& b) { return a ^= b; }

    std::uint64_t weight() const;
    bool any() const;
    bool is_zero() const { return !any(); }

    std::span<const std::uint64_t> words() const { return words_; }
    std::span<std::uint64_t> words() { return words_; }

    std::string to_string() const;
    bool operator==(const BitVector&) const = default;

private:
    std::uint64_t len_ = 0;
    std::vector<std::uint64_t> words_;
};

/// Row-major matrix over GF(2); all rows have equal length.
class BitMatrix {
public:
    BitMatrix() = default;
    explicit BitMatrix(std::uint64_t cols) : cols_(cols) {}
    BitMatrix(std::uint64_t cols, std::vector<BitVector> rows);

    void append_row(BitVector row);
    std::uint64_t rows() const { return rows_.size(); }
    std::uint64_t cols() const { return cols_; }
    const BitVector& row(std::uint64_t i) const { return rows_[i]; }
    BitVector& row(std::uint64_t i) { return rows_[i]; }
    const std::vector<BitVector>& row_vectors() const { return rows_; }

    /// One row per line of '0'/'1' characters.
    static BitMatrix from_text(std::string_view text);
    std::string to_text() const;
    /// JSON array of rows, each a hex string of the packed little-endian words.
    nlohmann::json to_json() const;
    static BitMatrix from_json(const nlohmann::json& j);

    bool operator==(const BitMatrix&) const = default;

private:
    std::uint64_t cols_ = 0;
    std::vector<BitVector> rows_;
};

struct RowReduction {
    BitMatrix rref;
    std::uint64_t rank = 0;
    std::vector<std::uint64_t> pivot_columns;
};

/// Reduced row-echelon form over GF(2); row space is preserved.
RowReduction row_reduce(const BitMatrix& m);

/// Basis of {x : M x^T = 0}, one row per basis vector.
BitMatrix kernel(const BitMatrix& m);

/// Binary linear code held as a reduced row-echelon basis of its generators.
class LinearCode {
public:
    LinearCode(std::uint64_t n, const BitMatrix& generators);
    static LinearCode zero(std::uint64_t n) { return LinearCode(n, BitMatrix(n)); }
    static LinearCode full(std::uint64_t n);

    std::uint64_t length() const { return n_; }
    std::uint64_t dimension() const { return basis_.rows(); }
    const BitMatrix& generators() const { return basis_; }

    bool contains(const BitVector& v) const;

    LinearCode dual() const;
    /// Appends an overall-parity coordinate as the last position.
    LinearCode extend() const;

    bool operator==(const LinearCode&) const = default;

private:
    std::uint64_t n_;
    BitMatrix basis_;
    std::vector<std::uint64_t> pivots_;
};

/// c1 ∩ c2, via the kernel of the stacked parity checks.
/// Throws std::invalid_argument on a length mismatch.
LinearCode intersect(const LinearCode& c1, const LinearCode& c2);

}  // namespace rmspec
