#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "rational.hpp"

namespace scrollift {

// Dense rational matrix with exact arithmetic.
class ExactMatrix {
public:
    ExactMatrix(int rows, int cols)
        : rows_(rows), cols_(cols),
          data_(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols), Rat(0)) {
        if (rows < 0 || cols < 0) throw std::invalid_argument("negative matrix dimension");
    }

    static ExactMatrix identity(int n) {
        ExactMatrix m(n, n);
        for (int i = 0; i < n; ++i) m.at(i, i) = 1;
        return m;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    Rat& at(int i, int j) { return data_[index(i, j)]; }
    const Rat& at(int i, int j) const { return data_[index(i, j)]; }

    void swap_rows(int i, int j) {
        for (int c = 0; c < cols_; ++c) std::swap(at(i, c), at(j, c));
    }

private:
    std::size_t index(int i, int j) const {
        if (i < 0 || i >= rows_ || j < 0 || j >= cols_) throw std::out_of_range("matrix index");
        return static_cast<std::size_t>(i) * static_cast<std::size_t>(cols_) +
               static_cast<std::size_t>(j);
    }

    int rows_;
    int cols_;
    std::vector<Rat> data_;
};

struct EchelonForm {
    ExactMatrix mat;             // reduced row echelon form
    std::vector<int> pivot_cols; // one entry per nonzero row, strictly increasing
};

// Reduced row echelon form. The forward pass clears each row to a primitive
// integer vector and then runs Bareiss-style fraction-free elimination, which
// keeps intermediate entries small; back substitution restores rational RREF
// with pivot entries equal to 1. Pivot choice is "first nonzero row", so the
// result is deterministic.
inline EchelonForm rref(ExactMatrix m) {
    const int rows = m.rows(), cols = m.cols();

    for (int i = 0; i < rows; ++i) {
        Int scale = 1;
        for (int j = 0; j < cols; ++j) scale = lcm(scale, rat_den(m.at(i, j)));
        if (scale != 1) {
            const Rat f(scale);
            for (int j = 0; j < cols; ++j) m.at(i, j) *= f;
        }
        Int content = 0;
        for (int j = 0; j < cols; ++j) content = gcd(content, rat_num(m.at(i, j)));
        if (content > 1) {
            const Rat f(Int(1), content);
            for (int j = 0; j < cols; ++j) m.at(i, j) *= f;
        }
    }

    std::vector<int> pivot_cols;
    Rat prev_pivot = 1;
    int r = 0;
    for (int c = 0; c < cols && r < rows; ++c) {
        int pr = -1;
        for (int i = r; i < rows; ++i) {
            if (m.at(i, c) != 0) {
                pr = i;
                break;
            }
        }
        if (pr < 0) continue;
        if (pr != r) m.swap_rows(pr, r);
        const Rat pivot = m.at(r, c);
        for (int i = r + 1; i < rows; ++i) {
            const Rat factor = m.at(i, c);
            for (int j = c; j < cols; ++j) {
                m.at(i, j) = (pivot * m.at(i, j) - factor * m.at(r, j)) / prev_pivot;
            }
        }
        prev_pivot = pivot;
        pivot_cols.push_back(c);
        ++r;
    }

    for (int i = static_cast<int>(pivot_cols.size()) - 1; i >= 0; --i) {
        const int pc = pivot_cols[static_cast<std::size_t>(i)];
        const Rat pivot = m.at(i, pc);
        for (int j = pc; j < cols; ++j) m.at(i, j) /= pivot;
        for (int k = 0; k < i; ++k) {
            const Rat factor = m.at(k, pc);
            if (factor == 0) continue;
            for (int j = pc; j < cols; ++j) m.at(k, j) -= factor * m.at(i, j);
        }
    }

    return EchelonForm{std::move(m), std::move(pivot_cols)};
}

inline int rank(const ExactMatrix& m) {
    return static_cast<int>(rref(m).pivot_cols.size());
}

// Canonical basis of the right kernel: the basis vectors, written as the rows
// of a matrix, are themselves in reduced row echelon form, so each vector's
// first nonzero coordinate is 1 and those leading positions strictly increase.
inline std::vector<std::vector<Rat>> kernel_basis(const ExactMatrix& m) {
    const int cols = m.cols();
    const EchelonForm e = rref(m);

    std::vector<bool> is_pivot(static_cast<std::size_t>(cols), false);
    for (int pc : e.pivot_cols) is_pivot[static_cast<std::size_t>(pc)] = true;

    std::vector<std::vector<Rat>> raw;
    for (int f = 0; f < cols; ++f) {
        if (is_pivot[static_cast<std::size_t>(f)]) continue;
        std::vector<Rat> v(static_cast<std::size_t>(cols), Rat(0));
        v[static_cast<std::size_t>(f)] = 1;
        for (std::size_t i = 0; i < e.pivot_cols.size(); ++i) {
            v[static_cast<std::size_t>(e.pivot_cols[i])] = -e.mat.at(static_cast<int>(i), f);
        }
        raw.push_back(std::move(v));
    }
    if (raw.empty()) return raw;

    ExactMatrix stack(static_cast<int>(raw.size()), cols);
    for (int i = 0; i < stack.rows(); ++i) {
        for (int j = 0; j < cols; ++j) stack.at(i, j) = raw[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
    }
    const EchelonForm canon = rref(std::move(stack));
    std::vector<std::vector<Rat>> out;
    out.reserve(canon.pivot_cols.size());
    for (std::size_t i = 0; i < canon.pivot_cols.size(); ++i) {
        std::vector<Rat> v(static_cast<std::size_t>(cols));
        for (int j = 0; j < cols; ++j) v[static_cast<std::size_t>(j)] = canon.mat.at(static_cast<int>(i), j);
        out.push_back(std::move(v));
    }
    return out;
}

// Solves m x = rhs; returns std::nullopt when inconsistent. Free coordinates
// are set to zero.
inline std::optional<std::vector<Rat>> solve(const ExactMatrix& m, const std::vector<Rat>& rhs) {
    if (rhs.size() != static_cast<std::size_t>(m.rows())) {
        throw std::invalid_argument("rhs length does not match row count");
    }
    ExactMatrix aug(m.rows(), m.cols() + 1);
    for (int i = 0; i < m.rows(); ++i) {
        for (int j = 0; j < m.cols(); ++j) aug.at(i, j) = m.at(i, j);
        aug.at(i, m.cols()) = rhs[static_cast<std::size_t>(i)];
    }
    const EchelonForm e = rref(std::move(aug));
    for (int pc : e.pivot_cols) {
        if (pc == m.cols()) return std::nullopt;
    }
    std::vector<Rat> x(static_cast<std::size_t>(m.cols()), Rat(0));
    for (std::size_t i = 0; i < e.pivot_cols.size(); ++i) {
        x[static_cast<std::size_t>(e.pivot_cols[i])] = e.mat.at(static_cast<int>(i), m.cols());
    }
    return x;
}

inline Rat determinant(ExactMatrix m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("determinant of a non-square matrix");
    const int n = m.rows();
    Rat det = 1;
    for (int c = 0; c < n; ++c) {
        int pr = -1;
        for (int i = c; i < n; ++i) {
            if (m.at(i, c) != 0) {
                pr = i;
                break;
            }
        }
        if (pr < 0) return Rat(0);
        if (pr != c) {
            m.swap_rows(pr, c);
            det = -det;
        }
        const Rat pivot = m.at(c, c);
        det *= pivot;
        for (int i = c + 1; i < n; ++i) {
            const Rat factor = m.at(i, c) / pivot;
            if (factor == 0) continue;
            for (int j = c; j < n; ++j) m.at(i, j) -= factor * m.at(c, j);
        }
    }
    return det;
}

inline ExactMatrix inverse(const ExactMatrix& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("inverse of a non-square matrix");
    const int n = m.rows();
    ExactMatrix aug(n, 2 * n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) aug.at(i, j) = m.at(i, j);
        aug.at(i, n + i) = 1;
    }
    const EchelonForm e = rref(std::move(aug));
    if (static_cast<int>(e.pivot_cols.size()) != n || e.pivot_cols.back() != n - 1) {
        throw std::logic_error("matrix is singular");
    }
    ExactMatrix inv(n, n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) inv.at(i, j) = e.mat.at(i, n + j);
    }
    return inv;
}

// Reduces v in place against an echelon basis (rows of e.mat): subtracts the
// matching multiple of each pivot row. Afterwards v has zeros in every pivot
// column, so v == 0 exactly when the input lay in the row span.
inline void reduce_against(std::vector<Rat>& v, const EchelonForm& e) {
    for (std::size_t i = 0; i < e.pivot_cols.size(); ++i) {
        const int pc = e.pivot_cols[i];
        const Rat factor = v[static_cast<std::size_t>(pc)];
        if (factor == 0) continue;
        for (int j = 0; j < e.mat.cols(); ++j) {
            v[static_cast<std::size_t>(j)] -= factor * e.mat.at(static_cast<int>(i), j);
        }
    }
}

} // namespace scrollift
