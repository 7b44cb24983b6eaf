#include "trip/simplex_nd.hpp"

#include <algorithm>

namespace trip {

SimplexMapSpec build_nd(size_t d, const PermTriple& t) {
    if (d < 3) throw DimensionTooSmall();
    if (static_cast<size_t>(t.degree()) != d) throw DimensionMismatch();
    return {d, build_trip_map(t)};
}

SimplexMapSpec build_nd(size_t d, std::string_view triple_text) {
    if (d < 3) throw DimensionTooSmall();
    return build_nd(d, PermTriple::parse(triple_text, static_cast<int>(d)));
}

ProjectivePoint lift(const SimplexPoint& x) {
    Vec p{FieldElement(1)};
    p.insert(p.end(), x.begin(), x.end());
    return {promote(p)};
}

SimplexPoint project(const ProjectivePoint& p) {
    Vec q = normalize(p.coords);
    return SimplexPoint(q.begin() + 1, q.end());
}

bool in_simplex(const SimplexPoint& x) { return all_nonnegative(to_simplex_coords(lift(x).coords)); }

SimplexPoint simplex_apply(const SimplexMapSpec& s, long k, const SimplexPoint& x) {
    if (x.size() + 1 != s.d) throw DimensionMismatch();
    return project({vec_mat(lift(x).coords, triangle_function_matrix(s.map, k))});
}

long simplex_index(const SimplexMapSpec& s, const SimplexPoint& x, long ones_cap) {
    if (x.size() + 1 != s.d) throw DimensionMismatch();
    return subtriangle_index(lift(x), s.map, ones_cap);
}

TripSequence simplex_sequence(const SimplexPoint& x, const SimplexMapSpec& s, size_t terms, long ones_cap) {
    if (x.size() + 1 != s.d) throw DimensionMismatch();
    return trip_sequence(lift(x), s.map, terms, ones_cap);
}

bool same_algorithm(const SimplexMapSpec& a, const SimplexMapSpec& b) {
    if (a.d != b.d) throw DimensionMismatch();
    return a.m0() == b.m0() && a.m1() == b.m1();
}

Integer unique_count_bound(size_t d) {
    if (d < 3) throw DimensionTooSmall();
    Integer f = 1;
    for (size_t i = 2; i <= d; ++i) f *= static_cast<unsigned long>(i);
    Integer g = 1;
    for (size_t i = 2; i + 2 <= d; ++i) g *= static_cast<unsigned long>(i);
    return f * f * f / g;
}

std::vector<LemmaStabilizer> lemma_stabilizers(size_t d) {
    if (d < 3) throw DimensionTooSmall();
    const int n = static_cast<int>(d);
    const IntMatrix A0 = base_A0(d), A1 = base_A1(d);
    std::vector<LemmaStabilizer> out;
    for (const Permutation& s : all_permutations(n)) {
        if (s(1) != 1 || s(n) != n) continue;
        std::vector<int> bar(static_cast<size_t>(n));
        for (int i = 1; i <= n - 2; ++i) bar[static_cast<size_t>(i - 1)] = s(i + 1) - 1;
        bar[static_cast<size_t>(n - 2)] = n - 1;
        bar[static_cast<size_t>(n - 1)] = n;
        LemmaStabilizer l{s, Permutation(bar).inverse(), s.inverse()};
        l.fixes_a0 = perm_to_matrix(l.sigma) * A0 * perm_to_matrix(l.tau0) == A0;
        l.fixes_a1 = perm_to_matrix(l.sigma) * A1 * perm_to_matrix(l.tau1) == A1;
        out.push_back(std::move(l));
    }
    return out;
}

DuplicateReport duplicate_class_count(size_t d, Exec exec) {
    if (d < 3) throw DimensionTooSmall();
    if (d > 8) throw std::invalid_argument("duplicate sweep supports d <= 8");
    const auto perms = all_permutations(static_cast<int>(d));
    const IntMatrix A0 = base_A0(d), A1 = base_A1(d);
    // sigma A tau has 0/1 entries: (sigma A tau)[i][j] = A[sigma(i)][tau^-1(j)], packed into d*d bits.
    auto pack = [&](const IntMatrix& a, const Permutation& s, const Permutation& tinv) {
        unsigned long long m = 0;
        for (size_t i = 0; i < d; ++i)
            for (size_t j = 0; j < d; ++j)
                if (a(static_cast<size_t>(s(static_cast<int>(i) + 1) - 1), static_cast<size_t>(tinv(static_cast<int>(j) + 1) - 1)) != 0)
                    m |= 1ull << (i * d + j);
        return m;
    };
    std::vector<Permutation> inv;
    for (const auto& p : perms) inv.push_back(p.inverse());
    const long np = static_cast<long>(perms.size());
    std::vector<std::pair<unsigned long long, unsigned long long>> keys(static_cast<size_t>(np * np * np));
    auto fill = [&](long s) {
        std::vector<unsigned long long> m1(static_cast<size_t>(np));
        for (long t = 0; t < np; ++t) m1[static_cast<size_t>(t)] = pack(A1, perms[s], inv[t]);
        for (long t0 = 0; t0 < np; ++t0) {
            unsigned long long m0 = pack(A0, perms[s], inv[t0]);
            for (long t1 = 0; t1 < np; ++t1) keys[static_cast<size_t>((s * np + t0) * np + t1)] = {m0, m1[static_cast<size_t>(t1)]};
        }
    };
    for_each_index(np, exec, 1, fill);
    std::sort(keys.begin(), keys.end());
    DuplicateReport rep{d, keys.size(), 0, 0};
    for (size_t i = 0; i < keys.size();) {
        size_t j = i;
        while (j < keys.size() && keys[j] == keys[i]) ++j;
        ++rep.classes;
        rep.largest_class = std::max(rep.largest_class, j - i);
        i = j;
    }
    return rep;
}

}  // namespace trip
