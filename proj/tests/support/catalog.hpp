#pragma once

// Small groups and automorphisms used across the test suites.

#include <string>
#include <vector>

#include "qembed/group.hpp"

namespace qembed::testcat {

inline GroupPtr cyclic(int n) {
    std::vector<std::vector<int>> table(n, std::vector<int>(n));
    std::vector<std::string> labels(n);
    for (int a = 0; a < n; ++a) {
        labels[a] = std::to_string(a);
        for (int b = 0; b < n; ++b) table[a][b] = (a + b) % n;
    }
    return FiniteGroup::from_cayley(table, 0, labels);
}

inline GroupPtr symmetric(int n) {
    Perm swap01 = perm_identity(n);
    std::swap(swap01[0], swap01[1]);
    Perm cycle(n);
    for (int i = 0; i < n; ++i) cycle[i] = (i + 1) % n;
    return FiniteGroup::from_permutations(n, {swap01, cycle});
}

inline GroupPtr alternating4() {
    // (0 1 2) and (0 1)(2 3)
    return FiniteGroup::from_permutations(4, {{1, 2, 0, 3}, {1, 0, 3, 2}});
}

/// Dihedral group of order 2n acting on the n-gon vertices.
inline GroupPtr dihedral_group(int n) {
    Perm rot(n), refl(n);
    for (int i = 0; i < n; ++i) {
        rot[i] = (i + 1) % n;
        refl[i] = (n - i) % n;
    }
    return FiniteGroup::from_permutations(n, {rot, refl});
}

/// Quaternion group {1,-1,i,-i,j,-j,k,-k}; index = 2*axis + (sign<0),
/// axis 0..3 for 1,i,j,k.
inline GroupPtr quaternion8() {
    // (sign, axis) products via the Hamilton relations
    auto mul_unit = [](int a, int b, int& sign) {
        // returns axis of product, sign multiplied in
        static const int axis[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
        static const int sgn[4][4] = {{1, 1, 1, 1}, {1, -1, 1, -1}, {1, -1, -1, 1}, {1, 1, -1, -1}};
        sign *= sgn[a][b];
        return axis[a][b];
    };
    std::vector<std::vector<int>> table(8, std::vector<int>(8));
    std::vector<std::string> labels = {"1", "-1", "i", "-i", "j", "-j", "k", "-k"};
    for (int x = 0; x < 8; ++x)
        for (int y = 0; y < 8; ++y) {
            int ax = x / 2, sx = x % 2 ? -1 : 1;
            int ay = y / 2, sy = y % 2 ? -1 : 1;
            int s = sx * sy;
            int az = mul_unit(ax, ay, s);
            table[x][y] = 2 * az + (s < 0 ? 1 : 0);
        }
    return FiniteGroup::from_cayley(table, 0, labels);
}

/// Z2 x Z2 with index bit layout (b0, b1) and xor multiplication.
inline GroupPtr klein4() {
    std::vector<std::vector<int>> table(4, std::vector<int>(4));
    std::vector<std::string> labels = {"(0,0)", "(1,0)", "(0,1)", "(1,1)"};
    for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b) table[a][b] = a ^ b;
    return FiniteGroup::from_cayley(table, 0, labels);
}

inline GroupAutomorphism negation(const GroupPtr& zn) {
    GroupAutomorphism sigma{zn, std::vector<int>(zn->order())};
    for (int a = 0; a < zn->order(); ++a) sigma.image[a] = (zn->order() - a) % zn->order();
    sigma.validate();
    return sigma;
}

inline GroupAutomorphism mult_by(const GroupPtr& zn, int k) {
    GroupAutomorphism sigma{zn, std::vector<int>(zn->order())};
    for (int a = 0; a < zn->order(); ++a) sigma.image[a] = (k * a) % zn->order();
    sigma.validate();
    return sigma;
}

/// Coordinate swap on klein4().
inline GroupAutomorphism klein_swap(const GroupPtr& v4) {
    GroupAutomorphism sigma{v4, {0, 2, 1, 3}};
    sigma.validate();
    return sigma;
}

/// Element index by one-line permutation (for groups built from permutations).
inline int perm_index(const GroupPtr& g, const Perm& p) {
    std::string want = perm_label(p);
    for (int i = 0; i < g->order(); ++i)
        if (g->label(i) == want) return i;
    return -1;
}

} // namespace qembed::testcat
