#pragma once

#include "trip/int_matrix.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace trip {

// Bijection on {1..d}, stored as its image list.
class Permutation {
public:
    Permutation() = default;
    explicit Permutation(std::vector<int> images);
    static Permutation identity(int d);
    // Cycle notation: "e", "(12)", "(1 3 2)", "(12)(34)". Degree must be given since cycles omit fixed points.
    static Permutation from_cycles(std::string_view text, int degree);
    // One-line notation "1,3,2".
    static Permutation from_one_line(std::string_view text);
    // Either notation; one-line is recognised by commas outside parentheses or brackets.
    static Permutation parse(std::string_view text, int degree);

    int degree() const { return static_cast<int>(img_.size()); }
    int operator()(int i) const { return img_[i - 1]; }
    const std::vector<int>& images() const { return img_; }

    Permutation inverse() const;
    // Left-to-right composition: (a*b)(i) = b(a(i)). With this order perm_to_matrix is a homomorphism.
    Permutation operator*(const Permutation& o) const;
    bool operator==(const Permutation& o) const { return img_ == o.img_; }
    bool operator!=(const Permutation& o) const { return img_ != o.img_; }
    bool operator<(const Permutation& o) const { return img_ < o.img_; }
    bool is_identity() const;

    std::string cycles() const;    // "(1 3 2)" or "e"
    std::string one_line() const;  // "1,3,2"

private:
    std::vector<int> img_;
};

// P[i][j] = 1 iff j = p(i). Column j of V*P is column p^-1(j) of V, so (v1 v2 v3) P(1 3 2) = (v2 v3 v1).
IntMatrix perm_to_matrix(const Permutation& p);

// All permutations of degree d in lexicographic order of one-line notation.
std::vector<Permutation> all_permutations(int d);

}  // namespace trip
