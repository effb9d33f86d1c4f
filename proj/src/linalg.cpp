#include "hermitian/linalg.hpp"

#include <limits>
#include <utility>

namespace hcodes {

Matrix::Matrix(FieldPtr field, std::size_t rows, std::size_t cols)
    : field_(std::move(field)), rows_(rows), cols_(cols), data_(rows * cols, Elem{})
{
}

void Matrix::append_row(std::span<const Elem> values)
{
    if (values.size() != cols_)
        throw std::invalid_argument("row length does not match column count");
    data_.insert(data_.end(), values.begin(), values.end());
    ++rows_;
}

std::vector<Elem> Matrix::column(std::size_t c) const
{
    std::vector<Elem> out(rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        out[r] = at(r, c);
    return out;
}

Matrix Matrix::select_columns(std::span<const std::size_t> columns) const
{
    Matrix out(field_, rows_, columns.size());
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t j = 0; j < columns.size(); ++j)
            out.at(r, j) = at(r, columns[j]);
    return out;
}

Matrix Matrix::transpose() const
{
    Matrix out(field_, cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c)
            out.at(c, r) = at(r, c);
    return out;
}

std::vector<std::size_t> Matrix::eliminate()
{
    const auto &f = *field_;
    std::vector<std::size_t> pivots;
    std::size_t prow = 0;
    for (std::size_t c = 0; c < cols_ && prow < rows_; ++c) {
        std::size_t sel = prow;
        while (sel < rows_ && at(sel, c).is_zero())
            ++sel;
        if (sel == rows_)
            continue;
        if (sel != prow)
            for (std::size_t j = 0; j < cols_; ++j)
                std::swap(at(sel, j), at(prow, j));
        const Elem scale = f.inv(at(prow, c));
        for (std::size_t j = c; j < cols_; ++j)
            at(prow, j) = f.mul(at(prow, j), scale);
        for (std::size_t r = 0; r < rows_; ++r) {
            if (r == prow || at(r, c).is_zero())
                continue;
            const Elem factor = at(r, c);
            for (std::size_t j = c; j < cols_; ++j)
                at(r, j) = f.sub(at(r, j), f.mul(factor, at(prow, j)));
        }
        pivots.push_back(c);
        ++prow;
    }
    return pivots;
}

Matrix Matrix::rref() const
{
    Matrix work = *this;
    const auto pivots = work.eliminate();
    work.rows_ = pivots.size();
    work.data_.resize(work.rows_ * cols_);
    return work;
}

std::size_t Matrix::rank() const
{
    Matrix work = *this;
    return work.eliminate().size();
}

std::vector<std::vector<Elem>> Matrix::kernel() const
{
    const auto &f = *field_;
    Matrix work = *this;
    const auto pivots = work.eliminate();
    std::vector<bool> is_pivot(cols_, false);
    for (auto c : pivots)
        is_pivot[c] = true;
    std::vector<std::vector<Elem>> basis;
    for (std::size_t free = 0; free < cols_; ++free) {
        if (is_pivot[free])
            continue;
        std::vector<Elem> v(cols_, f.zero());
        v[free] = f.one();
        for (std::size_t r = 0; r < pivots.size(); ++r)
            v[pivots[r]] = f.neg(work.at(r, free));
        basis.push_back(std::move(v));
    }
    return basis;
}

std::uint64_t projective_count(std::uint64_t field_size, std::size_t dim)
{
    // 1 + Q + ... + Q^(dim-1)
    std::uint64_t total = 0, term = 1;
    constexpr auto cap = std::numeric_limits<std::uint64_t>::max() / 2;
    for (std::size_t i = 0; i < dim; ++i) {
        total += term;
        if (total > cap || term > cap / field_size)
            return cap;
        term *= field_size;
    }
    return total;
}

} // namespace hcodes
