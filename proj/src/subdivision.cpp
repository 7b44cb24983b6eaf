#include "trip/subdivision.hpp"

namespace trip {

std::string to_string(Termination t) {
    switch (t) {
        case Termination::None: return "None";
        case Termination::BoundaryHit: return "BoundaryHit";
        case Termination::InfiniteOnesTail: return "InfiniteOnesTail";
        case Termination::Truncated: return "Truncated";
    }
    return "?";
}

SplitPair::SplitPair(IntMatrix a, IntMatrix b)
    : f0(std::move(a)), f1(std::move(b)), f0inv(f0.inverse()), f1inv(f1.inverse()) {}

Vec to_simplex_coords(const Vec& p) {
    Vec c(p.size());
    for (size_t i = 0; i + 1 < p.size(); ++i) c[i] = p[i] - p[i + 1];
    c.back() = p.back();
    return c;
}

Vec from_simplex_coords(const Vec& c) {
    Vec p(c.size());
    p.back() = c.back();
    for (size_t i = c.size() - 1; i-- > 0;) p[i] = p[i + 1] + c[i];
    return p;
}

bool all_nonnegative(const Vec& c) {
    for (const auto& v : c)
        if (v.sign() < 0) return false;
    return true;
}

bool all_positive(const Vec& c) {
    for (const auto& v : c)
        if (v.sign() <= 0) return false;
    return true;
}

bool in_half_open_domain(const Vec& p) {
    if (p.size() < 2 || compare(p[0], FieldElement(1)) != 0) return false;
    Vec c = to_simplex_coords(p);
    return all_nonnegative(c) && c.back().sign() > 0;
}

Vec normalize(const Vec& p) {
    if (p[0].is_zero()) throw ZeroLeadingCoordinate();
    FieldElement inv = p[0].inverse();
    Vec r;
    r.reserve(p.size());
    r.push_back(FieldElement(1));
    for (size_t i = 1; i < p.size(); ++i) r.push_back(p[i] * inv);
    return r;
}

int descend_bit(Vec& c, const SplitPair& m) {
    Vec c1 = mat_vec(m.f1inv, c);
    if (all_nonnegative(c1)) {
        c = std::move(c1);
        return 1;
    }
    Vec c0 = mat_vec(m.f0inv, c);
    if (!all_nonnegative(c0)) throw std::logic_error("children do not cover the parent");
    c = std::move(c0);
    return 0;
}

long descend_digit(Vec& c, const SplitPair& m, long cap) {
    long k = 0;
    while (descend_bit(c, m) == 1) {
        if (++k > cap) return -1;
    }
    return k;
}

IntMatrix map_form(const IntMatrix& w) {
    IntMatrix b = IntMatrix::ones_upper(w.dim());
    return (b * w.inverse() * b.inverse()).transpose();
}

IntMatrix subdivision_form(const IntMatrix& map) {
    IntMatrix b = IntMatrix::ones_upper(map.dim());
    return (b.inverse() * map.transpose() * b).inverse();
}

}  // namespace trip
