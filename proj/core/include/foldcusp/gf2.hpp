#ifndef FOLDCUSP_GF2_HPP
#define FOLDCUSP_GF2_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace foldcusp {

/// Dense GF(2) vector. Sizes in this library stay small (a few thousand
/// coordinates at most), so one byte per bit keeps the code simple.
class Gf2Vec {
public:
    Gf2Vec() = default;
    explicit Gf2Vec(std::size_t n) : bits_(n, 0) {}

    std::size_t size() const { return bits_.size(); }
    int get(std::size_t i) const { return bits_[i]; }
    void set(std::size_t i, int v) { bits_[i] = static_cast<uint8_t>(v & 1); }
    void flip(std::size_t i) { bits_[i] ^= 1; }

    bool is_zero() const;
    Gf2Vec& operator^=(const Gf2Vec& o);
    friend Gf2Vec operator^(Gf2Vec a, const Gf2Vec& b) { return a ^= b; }
    bool operator==(const Gf2Vec& o) const { return bits_ == o.bits_; }

    /// GF(2) inner product.
    int dot(const Gf2Vec& o) const;

    std::string str() const;

private:
    std::vector<uint8_t> bits_;
};

/// Dense GF(2) matrix as a list of row vectors.
class Gf2Mat {
public:
    Gf2Mat() = default;
    Gf2Mat(std::size_t rows, std::size_t cols)
        : rows_(rows, Gf2Vec(cols)), cols_(cols) {}

    std::size_t rows() const { return rows_.size(); }
    std::size_t cols() const { return cols_; }
    int get(std::size_t r, std::size_t c) const { return rows_[r].get(c); }
    void set(std::size_t r, std::size_t c, int v) { rows_[r].set(c, v); }
    Gf2Vec& row(std::size_t r) { return rows_[r]; }
    const Gf2Vec& row(std::size_t r) const { return rows_[r]; }
    void add_row(const Gf2Vec& v);
    bool operator==(const Gf2Mat& o) const { return rows_ == o.rows_; }

    std::size_t rank() const;

    /// Matrix-vector product over GF(2).
    Gf2Vec mul(const Gf2Vec& v) const;

    /// Inverse of a square nonsingular matrix; nullopt when singular.
    std::optional<Gf2Mat> inverse() const;

    /// Symmetric check.
    bool symmetric() const;

private:
    std::vector<Gf2Vec> rows_;
    std::size_t cols_ = 0;
};

/// Row echelon form computed in place. Returns the pivot column of each
/// surviving nonzero row, in order.
std::vector<std::size_t> gf2_echelon(std::vector<Gf2Vec>& rows);

/// Reduce `v` against echelon rows with the given pivots.
void gf2_reduce(Gf2Vec& v, const std::vector<Gf2Vec>& rows,
                const std::vector<std::size_t>& pivots);

/// Solve A^T-free system: find x with sum_i x_i * rows[i] = target.
/// Returns nullopt when the target is outside the row span.
std::optional<Gf2Vec> gf2_solve_combination(const std::vector<Gf2Vec>& rows,
                                            const Gf2Vec& target);

}  // namespace foldcusp

#endif
