#pragma once

#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qembed/group.hpp"

namespace qembed {

class FiniteQuandle;
using QuandlePtr = std::shared_ptr<const FiniteQuandle>;

/// Axiom violations are data, not errors.
struct AxiomReport {
    struct IdemViolation {
        int x;
    };
    struct BijViolation {
        int y, x1, x2; // op[x1][y] == op[x2][y]
    };
    struct DistribViolation {
        int x, y, z;
    };
    std::vector<IdemViolation> idempotence;
    std::vector<BijViolation> bijectivity;
    std::vector<DistribViolation> distributivity;

    bool valid() const {
        return idempotence.empty() && bijectivity.empty() && distributivity.empty();
    }
};

AxiomReport check_quandle_axioms(const std::vector<std::vector<int>>& op);

class FiniteQuandle {
public:
    int order() const { return order_; }
    int op(int x, int y) const { return op_[static_cast<size_t>(x) * order_ + y]; }
    /// Right translation S_y.
    Perm column(int y) const;

    bool has_labels() const { return !labels_.empty(); }
    const std::string& label(int x) const { return labels_[x]; }
    const std::vector<std::string>& labels() const { return labels_; }

    /// Validates all three axioms; throws BadInput with the first violation.
    static QuandlePtr from_table(const std::vector<std::vector<int>>& op,
                                 std::vector<std::string> labels = {});

    bool same_table(const FiniteQuandle& other) const {
        return order_ == other.order_ && op_ == other.op_;
    }

private:
    FiniteQuandle() = default;
    int order_ = 0;
    std::vector<int> op_;
    std::vector<std::string> labels_;
};

struct QuandleMap {
    QuandlePtr source;
    QuandlePtr target;
    std::vector<int> image;

    int apply(int x) const { return image[x]; }
};

struct QuandleTriplet {
    GroupPtr group;
    Subgroup subgroup;
    GroupAutomorphism aut;

    /// Checks subgroup/automorphism validity and H <= Fix(sigma).
    void validate() const;
};

QuandlePtr conj_quandle(const GroupPtr& g);
QuandlePtr core_quandle(const GroupPtr& g);
QuandlePtr alexander_quandle(const GroupPtr& g, const GroupAutomorphism& sigma);
/// Core(Z_n): a*b = 2b-a mod n.
QuandlePtr dihedral_quandle(int n);

/// Quandle on the right cosets H\G with Hg * Hh = H sigma(g h^{-1}) h.
/// Representative independence is re-verified.
std::pair<QuandlePtr, CosetSpace> triplet_quandle(const QuandleTriplet& t);

struct QuandleAutGroup {
    GroupPtr group;              // labels are the permutations
    std::vector<Perm> perms;     // perms[i] is element i acting on the quandle
};

/// Aut(X,*) by backtracking search, elements in lexicographic order of their
/// image tables. Refuses above the order cap.
QuandleAutGroup automorphism_group(const FiniteQuandle& x, int order_cap = 16);

/// Group generated by the right translations S_y.
GroupPtr inner_group(const FiniteQuandle& x);

struct HomogeneityReport {
    bool homogeneous;
    std::vector<int> orbit_of;          // element -> orbit id
    std::vector<std::vector<int>> orbits;
};

HomogeneityReport is_homogeneous(const FiniteQuandle& x, int order_cap = 16);

struct HomomorphismCheck {
    bool ok;
    std::optional<std::pair<int, int>> counterexample; // least (x,y) violating f(x*y)=f(x)*f(y)
};

HomomorphismCheck is_homomorphism(const QuandleMap& f);

struct EmbeddingCheck {
    bool ok;
    std::optional<std::pair<int, int>> hom_counterexample;
    std::optional<std::pair<int, int>> collision; // least pair with equal images
};

EmbeddingCheck is_embedding(const QuandleMap& f);

/// Joyce decomposition at basepoint x0: G = Aut(X), H = Stab(x0),
/// sigma = conjugation by S_{x0} inside Aut(X). The returned map is the
/// isomorphism triplet_quandle(T) -> X, Hg -> x0 . g, re-verified.
std::pair<QuandleTriplet, QuandleMap> joyce_triplet(const QuandlePtr& x, int x0,
                                                    int order_cap = 16);

/// Backtracking isomorphism search (same cap as automorphism_group).
std::optional<Perm> quandle_isomorphism(const FiniteQuandle& x, const FiniteQuandle& y,
                                        int order_cap = 16);

} // namespace qembed
