#pragma once

#include "trip/rational.hpp"

#include <initializer_list>
#include <string>
#include <vector>

namespace trip {

struct NonUnimodular : std::domain_error {
    NonUnimodular() : std::domain_error("matrix is not unimodular") {}
};

// Square matrix of big integers, row-major.
class IntMatrix {
public:
    IntMatrix() = default;
    explicit IntMatrix(size_t n) : n_(n), a_(n * n) {}
    IntMatrix(std::initializer_list<std::initializer_list<long>> rows);

    static IntMatrix identity(size_t n);
    // Upper-triangular ones: column j is the vertex (1,..,1,0,..,0) with j+1 ones.
    static IntMatrix ones_upper(size_t n);

    size_t dim() const { return n_; }
    Integer& operator()(size_t i, size_t j) { return a_[i * n_ + j]; }
    const Integer& operator()(size_t i, size_t j) const { return a_[i * n_ + j]; }

    IntMatrix operator*(const IntMatrix& o) const;
    bool operator==(const IntMatrix& o) const { return n_ == o.n_ && a_ == o.a_; }
    bool operator!=(const IntMatrix& o) const { return !(*this == o); }

    IntMatrix transpose() const;
    Integer det() const;
    // Exact inverse; throws NonUnimodular unless det = +-1.
    IntMatrix inverse() const;
    IntMatrix pow(long e) const;
    IntMatrix operator-() const;

    std::vector<Integer> row(size_t i) const;
    std::vector<Integer> column(size_t j) const;
    bool nonnegative() const;

    std::string str() const;  // [[a,b],[c,d]]

    // Lexicographic order, for use as a map key.
    bool operator<(const IntMatrix& o) const;

private:
    size_t n_ = 0;
    std::vector<Integer> a_;
};

// Matrix acting on a column vector of any ring with +, * and construction from Integer.
template <class T>
std::vector<T> mat_vec(const IntMatrix& m, const std::vector<T>& v) {
    std::vector<T> out;
    out.reserve(m.dim());
    for (size_t i = 0; i < m.dim(); ++i) {
        T acc = v[0] * Rational(0);
        bool started = false;
        for (size_t j = 0; j < m.dim(); ++j) {
            const Integer& e = m(i, j);
            if (e == 0) continue;
            if (!started) {
                acc = (e == 1) ? v[j] : v[j] * Rational(e);
                started = true;
            } else if (e == 1) {
                acc = acc + v[j];
            } else if (e == -1) {
                acc = acc - v[j];
            } else {
                acc = acc + v[j] * Rational(e);
            }
        }
        out.push_back(std::move(acc));
    }
    return out;
}

// Row vector times matrix.
template <class T>
std::vector<T> vec_mat(const std::vector<T>& v, const IntMatrix& m) {
    return mat_vec(m.transpose(), v);
}

}  // namespace trip
