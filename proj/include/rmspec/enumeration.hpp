#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "rmspec/apset.hpp"
#include "rmspec/gf2.hpp"

namespace rmspec {

struct EnumOptions {
    /// Largest dimension accepted for exhaustive enumeration (2^k codewords).
    unsigned max_dimension = 30;
    /// 0 = use hardware concurrency.
    unsigned threads = 1;
};

/// Weight distribution: (weight, count) pairs with exact unbounded counts,
/// weights strictly increasing, zero counts omitted.
struct Distribution {
    std::uint64_t n = 0;
    std::vector<std::pair<std::uint64_t, mpz_class>> entries;

    mpz_class total() const;
    APSet support() const;
    std::string to_csv() const;
    /// Magma-style "[ <w, A_w>, ... ]" pair list.
    std::string to_magma() const;
};

/// Exact counts over all 2^k codewords by Gray-code enumeration.
/// Throws std::runtime_error naming the dimension when over budget.
Distribution weight_distribution(const LinearCode& c, const EnumOptions& opts = {});

/// Support of the distribution.
APSet weight_spectrum(const LinearCode& c, const EnumOptions& opts = {});

/// Krawtchouk value K_k(i) = sum_j (-1)^j C(i,j) C(n-i,k-j).
mpz_class krawtchouk(std::uint64_t n, std::uint64_t k, std::uint64_t i);

/// MacWilliams transform: A'_k = 2^{-dim} sum_i A_i K_k(i), the distribution
/// of the dual of a dimension-`dim` code with distribution d.  Throws
/// std::invalid_argument if the input is inconsistent (non-integer or
/// negative output, or total != 2^dim).
Distribution macwilliams_transform(const Distribution& d, unsigned dim);

}  // namespace rmspec
