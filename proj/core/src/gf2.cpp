#include "foldcusp/gf2.hpp"

#include <algorithm>
#include <stdexcept>

namespace foldcusp {

bool Gf2Vec::is_zero() const {
    return std::all_of(bits_.begin(), bits_.end(), [](uint8_t b) { return b == 0; });
}

Gf2Vec& Gf2Vec::operator^=(const Gf2Vec& o) {
    if (size() != o.size()) throw std::invalid_argument("Gf2Vec size mismatch");
    for (std::size_t i = 0; i < bits_.size(); ++i) bits_[i] ^= o.bits_[i];
    return *this;
}

int Gf2Vec::dot(const Gf2Vec& o) const {
    if (size() != o.size()) throw std::invalid_argument("Gf2Vec size mismatch");
    int acc = 0;
    for (std::size_t i = 0; i < bits_.size(); ++i) acc ^= (bits_[i] & o.bits_[i]);
    return acc;
}

std::string Gf2Vec::str() const {
    std::string s;
    s.reserve(size());
    for (uint8_t b : bits_) s.push_back(b ? '1' : '0');
    return s;
}

void Gf2Mat::add_row(const Gf2Vec& v) {
    if (!rows_.empty() && v.size() != cols_)
        throw std::invalid_argument("Gf2Mat row size mismatch");
    if (rows_.empty()) cols_ = v.size();
    rows_.push_back(v);
}

std::size_t Gf2Mat::rank() const {
    std::vector<Gf2Vec> rows = rows_;
    return gf2_echelon(rows).size();
}

Gf2Vec Gf2Mat::mul(const Gf2Vec& v) const {
    Gf2Vec out(rows());
    for (std::size_t r = 0; r < rows(); ++r) out.set(r, rows_[r].dot(v));
    return out;
}

std::optional<Gf2Mat> Gf2Mat::inverse() const {
    const std::size_t n = rows();
    if (n != cols_) return std::nullopt;
    // Gauss-Jordan on [A | I].
    std::vector<Gf2Vec> a = rows_;
    Gf2Mat inv(n, n);
    for (std::size_t i = 0; i < n; ++i) inv.set(i, i, 1);
    std::size_t row = 0;
    std::vector<std::size_t> pivot_rows;
    for (std::size_t col = 0; col < n && row < n; ++col) {
        std::size_t sel = row;
        while (sel < n && a[sel].get(col) == 0) ++sel;
        if (sel == n) return std::nullopt;
        std::swap(a[sel], a[row]);
        std::swap(inv.row(sel), inv.row(row));
        for (std::size_t r = 0; r < n; ++r) {
            if (r != row && a[r].get(col)) {
                a[r] ^= a[row];
                inv.row(r) ^= inv.row(row);
            }
        }
        ++row;
    }
    if (row != n) return std::nullopt;
    return inv;
}

bool Gf2Mat::symmetric() const {
    if (rows() != cols_) return false;
    for (std::size_t r = 0; r < rows(); ++r)
        for (std::size_t c = r + 1; c < cols_; ++c)
            if (get(r, c) != get(c, r)) return false;
    return true;
}

std::vector<std::size_t> gf2_echelon(std::vector<Gf2Vec>& rows) {
    std::vector<std::size_t> pivots;
    if (rows.empty()) return pivots;
    const std::size_t ncols = rows[0].size();
    std::size_t r = 0;
    for (std::size_t col = 0; col < ncols && r < rows.size(); ++col) {
        std::size_t sel = r;
        while (sel < rows.size() && rows[sel].get(col) == 0) ++sel;
        if (sel == rows.size()) continue;
        std::swap(rows[sel], rows[r]);
        for (std::size_t k = 0; k < rows.size(); ++k)
            if (k != r && rows[k].get(col)) rows[k] ^= rows[r];
        pivots.push_back(col);
        ++r;
    }
    rows.resize(r);
    return pivots;
}

void gf2_reduce(Gf2Vec& v, const std::vector<Gf2Vec>& rows,
                const std::vector<std::size_t>& pivots) {
    for (std::size_t i = 0; i < rows.size(); ++i)
        if (v.get(pivots[i])) v ^= rows[i];
}

std::optional<Gf2Vec> gf2_solve_combination(const std::vector<Gf2Vec>& rows,
                                            const Gf2Vec& target) {
    if (rows.empty()) {
        if (target.is_zero()) return Gf2Vec(0);
        return std::nullopt;
    }
    const std::size_t n = rows.size();
    const std::size_t w = rows[0].size();
    // Augment each row with an identity tag tracking the combination.
    std::vector<Gf2Vec> aug(n, Gf2Vec(w + n));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t c = 0; c < w; ++c) aug[i].set(c, rows[i].get(c));
        aug[i].set(w + i, 1);
    }
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t col = 0; col < w && r < n; ++col) {
        std::size_t sel = r;
        while (sel < n && aug[sel].get(col) == 0) ++sel;
        if (sel == n) continue;
        std::swap(aug[sel], aug[r]);
        for (std::size_t k = 0; k < n; ++k)
            if (k != r && aug[k].get(col)) aug[k] ^= aug[r];
        pivots.push_back(col);
        ++r;
    }
    Gf2Vec t(w + n);
    for (std::size_t c = 0; c < w; ++c) t.set(c, target.get(c));
    for (std::size_t i = 0; i < pivots.size(); ++i)
        if (t.get(pivots[i])) t ^= aug[i];
    for (std::size_t c = 0; c < w; ++c)
        if (t.get(c)) return std::nullopt;
    Gf2Vec x(n);
    for (std::size_t i = 0; i < n; ++i) x.set(i, t.get(w + i));
    return x;
}

}  // namespace foldcusp
