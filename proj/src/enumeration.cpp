#include "rmspec/enumeration.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace rmspec {

mpz_class Distribution::total() const {
    mpz_class t = 0;
    for (const auto& [w, c] : entries) t += c;
    return t;
}

APSet Distribution::support() const {
    std::vector<std::uint64_t> ws;
    ws.reserve(entries.size());
    for (const auto& [w, c] : entries) ws.push_back(w);
    return APSet::from_values(std::move(ws));
}

std::string Distribution::to_csv() const {
    std::ostringstream os;
    os << "weight,count\n";
    for (const auto& [w, c] : entries) os << w << "," << c.get_str() << "\n";
    return os.str();
}

std::string Distribution::to_magma() const {
    std::ostringstream os;
    os << "[ ";
    bool first = true;
    for (const auto& [w, c] : entries) {
        if (!first) os << ", ";
        first = false;
        os << "<" << w << ", " << c.get_str() << ">";
    }
    os << " ]";
    return os.str();
}

namespace {

// Gray-code walk over one block of 2^span codewords: at step i the basis row
// `base + countr_zero(i)` is flipped into the running word state, and only
// that row's nonzero word footprint is re-popcounted.
void enumerate_block(const std::vector<std::vector<std::uint64_t>>& row_words,
                     const std::vector<std::vector<std::uint32_t>>& footprint,
                     std::vector<std::uint64_t> state, unsigned span,
                     std::vector<std::uint64_t>& counts) {
    std::uint64_t weight = 0;
    for (std::uint64_t w : state) weight += std::popcount(w);
    counts[weight]++;
    const std::uint64_t steps = std::uint64_t{1} << span;
    for (std::uint64_t i = 1; i < steps; ++i) {
        const unsigned r = std::countr_zero(i);
        const auto& rw = row_words[r];
        for (std::uint32_t wi : footprint[r]) {
            weight -= std::popcount(state[wi]);
            state[wi] ^= rw[wi];
            weight += std::popcount(state[wi]);
        }
        counts[weight]++;
    }
}

}  // namespace

Distribution weight_distribution(const LinearCode& c, const EnumOptions& opts) {
    const unsigned k = static_cast<unsigned>(c.dimension());
    if (k > opts.max_dimension) {
        throw std::runtime_error("weight_distribution: dimension " + std::to_string(k) +
                                 " exceeds enumeration budget 2^" +
                                 std::to_string(opts.max_dimension));
    }
    const std::uint64_t n = c.length();
    const std::size_t nwords = (n + 63) / 64;

    std::vector<std::vector<std::uint64_t>> row_words(k);
    std::vector<std::vector<std::uint32_t>> footprint(k);
    for (unsigned r = 0; r < k; ++r) {
        const auto words = c.generators().row(r).words();
        row_words[r].assign(words.begin(), words.end());
        for (std::uint32_t wi = 0; wi < nwords; ++wi)
            if (row_words[r][wi]) footprint[r].push_back(wi);
    }

    unsigned threads = opts.threads ? opts.threads : std::thread::hardware_concurrency();
    if (threads == 0) threads = 1;
    // Fix the top `split` basis rows; each fixed pattern is an independent block.
    unsigned split = 0;
    while ((1u << split) < threads && split + 10 < k) ++split;
    if (split >= k) split = 0;
    const unsigned span = k - split;
    const std::uint64_t nblocks = std::uint64_t{1} << split;

    std::vector<std::vector<std::uint64_t>> block_counts(nblocks,
                                                         std::vector<std::uint64_t>(n + 1, 0));
    std::atomic<std::uint64_t> next{0};
    auto worker = [&]() {
        for (;;) {
            const std::uint64_t b = next.fetch_add(1);
            if (b >= nblocks) return;
            std::vector<std::uint64_t> state(nwords, 0);
            for (unsigned j = 0; j < split; ++j) {
                if ((b >> j) & 1) {
                    const auto& rw = row_words[span + j];
                    for (std::size_t wi = 0; wi < nwords; ++wi) state[wi] ^= rw[wi];
                }
            }
            enumerate_block(row_words, footprint, std::move(state), span, block_counts[b]);
        }
    };
    if (threads == 1 || nblocks == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }

    std::vector<std::uint64_t> counts(n + 1, 0);
    for (const auto& bc : block_counts)
        for (std::uint64_t w = 0; w <= n; ++w) counts[w] += bc[w];

    Distribution d;
    d.n = n;
    for (std::uint64_t w = 0; w <= n; ++w) {
        if (counts[w]) d.entries.emplace_back(w, mpz_class(static_cast<unsigned long>(counts[w])));
    }
    return d;
}

APSet weight_spectrum(const LinearCode& c, const EnumOptions& opts) {
    return weight_distribution(c, opts).support();
}

mpz_class krawtchouk(std::uint64_t n, std::uint64_t k, std::uint64_t i) {
    if (k > n || i > n) throw std::invalid_argument("krawtchouk: require k, i <= n");
    mpz_class sum = 0;
    mpz_class a, b;
    const std::uint64_t jmax = std::min(i, k);
    for (std::uint64_t j = 0; j <= jmax; ++j) {
        mpz_bin_uiui(a.get_mpz_t(), i, j);
        mpz_bin_uiui(b.get_mpz_t(), n - i, k - j);
        if (j % 2 == 0)
            sum += a * b;
        else
            sum -= a * b;
    }
    return sum;
}

Distribution macwilliams_transform(const Distribution& d, unsigned dim) {
    mpz_class size = 1;
    size <<= dim;
    if (d.total() != size)
        throw std::invalid_argument("macwilliams_transform: counts do not sum to 2^dim");

    Distribution out;
    out.n = d.n;
    for (std::uint64_t k = 0; k <= d.n; ++k) {
        mpz_class acc = 0;
        for (const auto& [i, ai] : d.entries) acc += ai * krawtchouk(d.n, k, i);
        if (acc < 0 || acc % size != 0)
            throw std::invalid_argument("macwilliams_transform: inconsistent input distribution");
        acc /= size;
        if (acc != 0) out.entries.emplace_back(k, acc);
    }
    return out;
}

}  // namespace rmspec
