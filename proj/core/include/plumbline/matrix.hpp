#pragma once

#include <cstddef>
#include <vector>

#include "plumbline/errors.hpp"

namespace plumbline {

/// Dense row-major matrix over any value type.
template <class T>
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols, const T& fill) : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool square() const { return rows_ == cols_; }

    T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    T& at(std::size_t i, std::size_t j)
    {
        check(i, j);
        return (*this)(i, j);
    }
    const T& at(std::size_t i, std::size_t j) const
    {
        check(i, j);
        return (*this)(i, j);
    }

    Matrix transposed() const
    {
        Matrix out;
        out.rows_ = cols_;
        out.cols_ = rows_;
        out.data_.reserve(data_.size());
        for (std::size_t j = 0; j < cols_; ++j)
            for (std::size_t i = 0; i < rows_; ++i) out.data_.push_back((*this)(i, j));
        return out;
    }

    const std::vector<T>& data() const { return data_; }
    std::vector<T>& data() { return data_; }

    friend bool operator==(const Matrix&, const Matrix&) = default;

private:
    void check(std::size_t i, std::size_t j) const
    {
        if (i >= rows_ || j >= cols_) throw RangeError("matrix index out of range");
    }

    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<T> data_;
};

} // namespace plumbline
