#include "trip/int_matrix.hpp"

#include <algorithm>
#include <sstream>

namespace trip {

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> rows)
    : n_(rows.size()), a_(rows.size() * rows.size()) {
    size_t i = 0;
    for (const auto& r : rows) {
        if (r.size() != n_) throw std::invalid_argument("IntMatrix: not square");
        size_t j = 0;
        for (long v : r) a_[i * n_ + j++] = v;
        ++i;
    }
}

IntMatrix IntMatrix::identity(size_t n) {
    IntMatrix m(n);
    for (size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::ones_upper(size_t n) {
    IntMatrix m(n);
    for (size_t i = 0; i < n; ++i)
        for (size_t j = i; j < n; ++j) m(i, j) = 1;
    return m;
}

IntMatrix IntMatrix::operator*(const IntMatrix& o) const {
    if (n_ != o.n_) throw std::invalid_argument("IntMatrix: dimension mismatch");
    IntMatrix r(n_);
    for (size_t i = 0; i < n_; ++i)
        for (size_t k = 0; k < n_; ++k) {
            const Integer& x = (*this)(i, k);
            if (x == 0) continue;
            for (size_t j = 0; j < n_; ++j)
                if (o(k, j) != 0) r(i, j) += x * o(k, j);
        }
    return r;
}

IntMatrix IntMatrix::transpose() const {
    IntMatrix r(n_);
    for (size_t i = 0; i < n_; ++i)
        for (size_t j = 0; j < n_; ++j) r(j, i) = (*this)(i, j);
    return r;
}

IntMatrix IntMatrix::operator-() const {
    IntMatrix r = *this;
    for (auto& x : r.a_) x = -x;
    return r;
}

// Fraction-free Bareiss elimination.
Integer IntMatrix::det() const {
    if (n_ == 0) return 1;
    std::vector<Integer> m = a_;
    auto at = [&](size_t i, size_t j) -> Integer& { return m[i * n_ + j]; };
    Integer prev = 1;
    int sign = 1;
    for (size_t k = 0; k + 1 < n_; ++k) {
        if (at(k, k) == 0) {
            size_t p = k + 1;
            while (p < n_ && at(p, k) == 0) ++p;
            if (p == n_) return 0;
            for (size_t j = 0; j < n_; ++j) std::swap(at(k, j), at(p, j));
            sign = -sign;
        }
        for (size_t i = k + 1; i < n_; ++i) {
            for (size_t j = k + 1; j < n_; ++j) {
                Integer t = at(i, j) * at(k, k) - at(i, k) * at(k, j);
                mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
                at(i, j) = t;
            }
        }
        prev = at(k, k);
    }
    return sign * at(n_ - 1, n_ - 1);
}

IntMatrix IntMatrix::inverse() const {
    Integer d = det();
    if (d != 1 && d != -1) throw NonUnimodular();
    // Gauss-Jordan over Q; entries of the result are integers since det = +-1.
    std::vector<Rational> m(n_ * 2 * n_);
    const size_t w = 2 * n_;
    for (size_t i = 0; i < n_; ++i) {
        for (size_t j = 0; j < n_; ++j) m[i * w + j] = (*this)(i, j);
        m[i * w + n_ + i] = 1;
    }
    for (size_t c = 0; c < n_; ++c) {
        size_t p = c;
        while (m[p * w + c] == 0) ++p;
        if (p != c)
            for (size_t j = 0; j < w; ++j) std::swap(m[p * w + j], m[c * w + j]);
        Rational piv = m[c * w + c];
        for (size_t j = 0; j < w; ++j) m[c * w + j] /= piv;
        for (size_t i = 0; i < n_; ++i) {
            if (i == c || m[i * w + c] == 0) continue;
            Rational f = m[i * w + c];
            for (size_t j = 0; j < w; ++j) m[i * w + j] -= f * m[c * w + j];
        }
    }
    IntMatrix r(n_);
    for (size_t i = 0; i < n_; ++i)
        for (size_t j = 0; j < n_; ++j) r(i, j) = m[i * w + n_ + j].get_num();
    return r;
}

IntMatrix IntMatrix::pow(long e) const {
    IntMatrix base = e < 0 ? inverse() : *this;
    unsigned long k = e < 0 ? static_cast<unsigned long>(-e) : static_cast<unsigned long>(e);
    IntMatrix r = identity(n_);
    while (k) {
        if (k & 1) r = r * base;
        k >>= 1;
        if (k) base = base * base;
    }
    return r;
}

std::vector<Integer> IntMatrix::row(size_t i) const {
    return {a_.begin() + i * n_, a_.begin() + (i + 1) * n_};
}

std::vector<Integer> IntMatrix::column(size_t j) const {
    std::vector<Integer> c(n_);
    for (size_t i = 0; i < n_; ++i) c[i] = (*this)(i, j);
    return c;
}

bool IntMatrix::nonnegative() const {
    return std::all_of(a_.begin(), a_.end(), [](const Integer& x) { return x >= 0; });
}

std::string IntMatrix::str() const {
    std::ostringstream os;
    os << '[';
    for (size_t i = 0; i < n_; ++i) {
        os << (i ? ",[" : "[");
        for (size_t j = 0; j < n_; ++j) os << (j ? "," : "") << (*this)(i, j).get_str();
        os << ']';
    }
    os << ']';
    return os.str();
}

bool IntMatrix::operator<(const IntMatrix& o) const {
    if (n_ != o.n_) return n_ < o.n_;
    return std::lexicographical_compare(a_.begin(), a_.end(), o.a_.begin(), o.a_.end());
}

}  // namespace trip
