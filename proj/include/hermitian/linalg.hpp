#pragma once

// Dense matrices over a GaloisField and exact Gaussian elimination.

#include "hermitian/field.hpp"

#include <cstddef>
#include <span>
#include <vector>

namespace hcodes {

class Matrix {
  public:
    Matrix() = default;
    Matrix(FieldPtr field, std::size_t rows, std::size_t cols);

    const FieldPtr &field() const { return field_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Elem &at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    Elem at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
    std::span<Elem> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
    std::span<const Elem> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }

    void append_row(std::span<const Elem> values);
    std::vector<Elem> column(std::size_t c) const;
    Matrix select_columns(std::span<const std::size_t> columns) const;
    Matrix transpose() const;

    // Reduced row echelon form with zero rows removed.
    Matrix rref() const;
    std::size_t rank() const;
    // Basis of { v : M v = 0 }, one vector per free column, in column order.
    std::vector<std::vector<Elem>> kernel() const;

    bool operator==(const Matrix &o) const
    {
        return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
    }

  private:
    // In-place elimination; returns pivot column per pivot row.
    std::vector<std::size_t> eliminate();

    FieldPtr field_;
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Elem> data_;
};

// Enumerates the projective points of span(basis): every nonzero combination
// with leading coefficient 1, in a deterministic order.  The callback returns
// false to stop early.  Returns false when stopped.
template <typename Fn>
bool for_each_projective_combination(const GaloisField &field, const std::vector<std::vector<Elem>> &basis,
                                     Fn &&fn)
{
    const std::size_t m = basis.size();
    if (m == 0)
        return true;
    const std::size_t len = basis.front().size();
    std::vector<Elem> coeffs(m);
    std::vector<Elem> vec(len);
    for (std::size_t lead = 0; lead < m; ++lead) {
        // coefficient lead is 1, those before are 0, those after range freely
        const std::size_t free = m - lead - 1;
        std::vector<std::uint32_t> counter(free, 0);
        while (true) {
            std::fill(coeffs.begin(), coeffs.end(), field.zero());
            coeffs[lead] = field.one();
            for (std::size_t i = 0; i < free; ++i)
                coeffs[lead + 1 + i] = field.from_index(counter[i]);
            std::fill(vec.begin(), vec.end(), field.zero());
            for (std::size_t b = lead; b < m; ++b) {
                if (coeffs[b].is_zero())
                    continue;
                for (std::size_t i = 0; i < len; ++i)
                    vec[i] = field.add(vec[i], field.mul(coeffs[b], basis[b][i]));
            }
            if (!fn(vec))
                return false;
            std::size_t pos = 0;
            while (pos < free && ++counter[pos] == field.size())
                counter[pos++] = 0;
            if (pos == free)
                break;
        }
    }
    return true;
}

// Number of projective points of an m-dimensional space over GF(Q), saturating.
std::uint64_t projective_count(std::uint64_t field_size, std::size_t dim);

} // namespace hcodes
