#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "qembed/error.hpp"

namespace qembed {

/// One-line notation: p[i] is the image of point i.
using Perm = std::vector<int>;

Perm perm_identity(int degree);
/// Apply p first, then q.
Perm perm_compose(const Perm& p, const Perm& q);
Perm perm_inverse(const Perm& p);
std::string perm_label(const Perm& p);

class FiniteGroup;
using GroupPtr = std::shared_ptr<const FiniteGroup>;

/// Finite group on dense element indices 0..order-1 with a full
/// multiplication table. Immutable once built.
class FiniteGroup {
public:
    static constexpr int kDefaultOrderCap = 10080;

    int order() const { return order_; }
    int identity() const { return identity_; }
    int mul(int a, int b) const { return mul_[static_cast<size_t>(a) * order_ + b]; }
    int inv(int a) const { return inv_[a]; }
    /// h^{-1} g h
    int conj(int g, int h) const { return mul(mul(inv(h), g), h); }

    bool has_labels() const { return !labels_.empty(); }
    const std::string& label(int a) const { return labels_[a]; }
    const std::vector<std::string>& labels() const { return labels_; }

    const std::vector<int>& mul_table() const { return mul_; }

    /// Validates the table: identity, two-sided inverses, associativity
    /// (exhaustive up to order 256, Light's test with a greedy generating
    /// set above that). Errors name the violating indices.
    static GroupPtr from_cayley(const std::vector<std::vector<int>>& table,
                                std::optional<int> identity_hint = std::nullopt,
                                std::vector<std::string> labels = {});

    /// Closure of the generators under composition, breadth-first from the
    /// identity with generators taken in the given order. Element labels are
    /// the permutations in one-line notation.
    static GroupPtr from_permutations(int degree, const std::vector<Perm>& generators,
                                      int order_cap = kDefaultOrderCap);

    /// For a set of permutations already closed under composition (e.g. an
    /// automorphism group found by search). Element order is the given order.
    static GroupPtr from_closed_permutations(const std::vector<Perm>& elements);

private:
    FiniteGroup() = default;

    // trusted path: table known associative by construction
    static GroupPtr from_trusted_table(int order, std::vector<int> mul,
                                       std::vector<std::string> labels);

    int order_ = 0;
    int identity_ = 0;
    std::vector<int> mul_;
    std::vector<int> inv_;
    std::vector<std::string> labels_;

    friend GroupPtr semidirect_z(const GroupPtr&, const struct GroupAutomorphism&, int);
    friend GroupPtr bergman_extension(const GroupPtr&);
};

struct GroupAutomorphism {
    GroupPtr group;
    std::vector<int> image;

    int apply(int g) const { return image[g]; }
    /// Checks bijectivity and the homomorphism law on all pairs.
    void validate() const;
};

struct Subgroup {
    GroupPtr group;
    std::vector<int> members; // sorted

    bool contains(int g) const;
    int order() const { return static_cast<int>(members.size()); }
    /// Checks identity membership and closure under mul and inv.
    void validate() const;
};

/// Right cosets Hg. Representatives are the least element index per coset,
/// listed in increasing order.
struct CosetSpace {
    GroupPtr group;
    Subgroup subgroup;
    std::vector<int> reps;
    std::vector<int> coset_of; // element index -> coset index

    int count() const { return static_cast<int>(reps.size()); }
};

GroupPtr group_from_cayley(const std::vector<std::vector<int>>& table,
                           std::optional<int> identity_hint = std::nullopt);
GroupPtr group_from_permutations(int degree, const std::vector<Perm>& generators,
                                 int order_cap = FiniteGroup::kDefaultOrderCap);

/// Ad(q): g -> q^{-1} g q
GroupAutomorphism automorphism_from_conjugation(const GroupPtr& g, int q);
GroupAutomorphism identity_automorphism(const GroupPtr& g);
GroupAutomorphism compose_automorphisms(const GroupAutomorphism& first,
                                        const GroupAutomorphism& then);

Subgroup fix_subgroup(const GroupAutomorphism& sigma);
Subgroup trivial_subgroup(const GroupPtr& g);
Subgroup full_subgroup(const GroupPtr& g);
/// Closure of the given elements inside g.
Subgroup subgroup_generated(const GroupPtr& g, const std::vector<int>& gens);

/// Least q with Ad(q) = sigma, or nullopt if sigma is not inner.
std::optional<int> inner_witness(const GroupAutomorphism& sigma);

/// Least m >= 1 with sigma^m = id.
int automorphism_order(const GroupAutomorphism& sigma);

/// G x| Z_m with (g,s)*(h,t) = (sigma^t(g) h, s+t mod m). Element (g,t) has
/// index t*|G| + g. Requires m to be a multiple of ord(sigma).
GroupPtr semidirect_z(const GroupPtr& g, const GroupAutomorphism& sigma, int m);

inline int semidirect_index(const FiniteGroup& base, int g, int t) { return t * base.order() + g; }
inline std::pair<int, int> semidirect_coords(const FiniteGroup& base, int idx) {
    return {idx % base.order(), idx / base.order()};
}

/// (G x G) x| {+1,-1} with the switching action. Element (g,h,a) has index
/// a_idx*|G|^2 + g*|G| + h, where a_idx is 0 for a=+1 and 1 for a=-1.
GroupPtr bergman_extension(const GroupPtr& g);

inline int bergman_index(const FiniteGroup& base, int g, int h, int a) {
    int n = base.order();
    return (a == 1 ? 0 : 1) * n * n + g * n + h;
}
struct BergmanCoords {
    int g, h, a;
};
inline BergmanCoords bergman_coords(const FiniteGroup& base, int idx) {
    int n = base.order();
    int a_idx = idx / (n * n);
    int rest = idx % (n * n);
    return {rest / n, rest % n, a_idx == 0 ? 1 : -1};
}

CosetSpace right_cosets(const GroupPtr& g, const Subgroup& h);

} // namespace qembed
