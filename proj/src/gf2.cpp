#include "rmspec/gf2.hpp"

#include <bit>
#include <sstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

namespace rmspec {

BitVector BitVector::from_string(std::string_view bits) {
    BitVector v(bits.size());
    for (std::size_t i = 0; i < bits.size(); ++i) {
        if (bits[i] == '1')
            v.set(i, true);
        else if (bits[i] != '0')
            throw std::invalid_argument("BitVector::from_string: expected '0' or '1'");
    }
    return v;
}

BitVector& BitVector::operator^=(const BitVector& o) {
    if (len_ != o.len_) throw std::invalid_argument("BitVector xor: length mismatch");
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] ^= o.words_[i];
    return *this;
}

std::uint64_t BitVector::weight() const {
    std::uint64_t w = 0;
    for (std::uint64_t x : words_) w += std::popcount(x);
    return w;
}

bool BitVector::any() const {
    for (std::uint64_t x : words_)
        if (x) return true;
    return false;
}

std::string BitVector::to_string() const {
    std::string s(len_, '0');
    for (std::uint64_t i = 0; i < len_; ++i)
        if (get(i)) s[i] = '1';
    return s;
}

BitMatrix::BitMatrix(std::uint64_t cols, std::vector<BitVector> rows) : cols_(cols) {
    for (auto& r : rows) append_row(std::move(r));
}

void BitMatrix::append_row(BitVector row) {
    if (row.size() != cols_) throw std::invalid_argument("BitMatrix: row length mismatch");
    rows_.push_back(std::move(row));
}

BitMatrix BitMatrix::from_text(std::string_view text) {
    std::vector<BitVector> rows;
    std::uint64_t cols = 0;
    std::istringstream is{std::string(text)};
    std::string line;
    while (std::getline(is, line)) {
        if (line.empty()) continue;
        rows.push_back(BitVector::from_string(line));
        cols = rows.back().size();
    }
    BitMatrix m(cols);
    for (auto& r : rows) m.append_row(std::move(r));
    return m;
}

std::string BitMatrix::to_text() const {
    std::string out;
    for (const BitVector& r : rows_) {
        out += r.to_string();
        out += '\n';
    }
    return out;
}

nlohmann::json BitMatrix::to_json() const {
    nlohmann::ordered_json j;
    j["cols"] = cols_;
    j["rows"] = nlohmann::ordered_json::array();
    for (const BitVector& r : rows_) {
        std::string hex;
        for (std::uint64_t w : r.words()) {
            char buf[17];
            std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(w));
            hex += buf;
        }
        j["rows"].push_back(hex);
    }
    return j;
}

BitMatrix BitMatrix::from_json(const nlohmann::json& j) {
    const std::uint64_t cols = j.at("cols");
    BitMatrix m(cols);
    for (const auto& jr : j.at("rows")) {
        const std::string hex = jr;
        BitVector v(cols);
        auto words = v.words();
        for (std::size_t w = 0; w < words.size() && 16 * w < hex.size(); ++w) {
            words[w] = std::stoull(hex.substr(16 * w, 16), nullptr, 16);
        }
        m.append_row(std::move(v));
    }
    return m;
}

RowReduction row_reduce(const BitMatrix& m) {
    RowReduction out;
    out.rref = m;
    const std::uint64_t nrows = m.rows();
    const std::uint64_t ncols = m.cols();
    std::uint64_t rank = 0;
    for (std::uint64_t col = 0; col < ncols && rank < nrows; ++col) {
        std::uint64_t pivot = rank;
        while (pivot < nrows && !out.rref.row(pivot).get(col)) ++pivot;
        if (pivot == nrows) continue;
        if (pivot != rank) std::swap(out.rref.row(pivot), out.rref.row(rank));
        for (std::uint64_t r = 0; r < nrows; ++r) {
            if (r != rank && out.rref.row(r).get(col)) out.rref.row(r) ^= out.rref.row(rank);
        }
        out.pivot_columns.push_back(col);
        ++rank;
    }
    out.rank = rank;
    return out;
}

BitMatrix kernel(const BitMatrix& m) {
    const RowReduction rr = row_reduce(m);
    const std::uint64_t ncols = m.cols();
    std::vector<bool> is_pivot(ncols, false);
    for (std::uint64_t c : rr.pivot_columns) is_pivot[c] = true;

    BitMatrix basis(ncols);
    for (std::uint64_t f = 0; f < ncols; ++f) {
        if (is_pivot[f]) continue;
        BitVector v(ncols);
        v.set(f, true);
        for (std::uint64_t r = 0; r < rr.rank; ++r) {
            if (rr.rref.row(r).get(f)) v.set(rr.pivot_columns[r], true);
        }
        basis.append_row(std::move(v));
    }
    return basis;
}

LinearCode::LinearCode(std::uint64_t n, const BitMatrix& generators) : n_(n), basis_(n) {
    if (generators.cols() != n) throw std::invalid_argument("LinearCode: generator width mismatch");
    RowReduction rr = row_reduce(generators);
    for (std::uint64_t r = 0; r < rr.rank; ++r) basis_.append_row(std::move(rr.rref.row(r)));
    pivots_ = std::move(rr.pivot_columns);
}

LinearCode LinearCode::full(std::uint64_t n) {
    BitMatrix id(n);
    for (std::uint64_t i = 0; i < n; ++i) {
        BitVector v(n);
        v.set(i, true);
        id.append_row(std::move(v));
    }
    return LinearCode(n, id);
}

bool LinearCode::contains(const BitVector& v) const {
    if (v.size() != n_) throw std::invalid_argument("LinearCode::contains: length mismatch");
    BitVector rem = v;
    for (std::uint64_t r = 0; r < basis_.rows(); ++r) {
        if (rem.get(pivots_[r])) rem ^= basis_.row(r);
    }
    return rem.is_zero();
}

LinearCode LinearCode::dual() const { return LinearCode(n_, kernel(basis_)); }

LinearCode LinearCode::extend() const {
    BitMatrix ext(n_ + 1);
    for (std::uint64_t r = 0; r < basis_.rows(); ++r) {
        const BitVector& g = basis_.row(r);
        BitVector v(n_ + 1);
        for (std::uint64_t i = 0; i < n_; ++i) v.set(i, g.get(i));
        v.set(n_, g.weight() % 2 == 1);
        ext.append_row(std::move(v));
    }
    return LinearCode(n_ + 1, ext);
}

LinearCode intersect(const LinearCode& c1, const LinearCode& c2) {
    if (c1.length() != c2.length())
        throw std::invalid_argument("intersect: codes have different lengths");
    const BitMatrix h1 = kernel(c1.generators());
    const BitMatrix h2 = kernel(c2.generators());
    BitMatrix stacked(c1.length());
    for (const BitVector& r : h1.row_vectors()) stacked.append_row(r);
    for (const BitVector& r : h2.row_vectors()) stacked.append_row(r);
    return LinearCode(c1.length(), kernel(stacked));
}

}  // namespace rmspec
