#include "qembed/group.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <queue>
#include <sstream>

namespace qembed {

const char* err_name(Err e) {
    switch (e) {
        case Err::NotAssociative: return "NotAssociative";
        case Err::NoIdentity: return "NoIdentity";
        case Err::NoInverse: return "NoInverse";
        case Err::NotABijection: return "NotABijection";
        case Err::ClosureTooLarge: return "ClosureTooLarge";
        case Err::BadModulus: return "BadModulus";
        case Err::NotASubgroup: return "NotASubgroup";
        case Err::TripletInvalid: return "TripletInvalid";
        case Err::TooLarge: return "TooLarge";
        case Err::NotHomogeneous: return "NotHomogeneous";
        case Err::StabilizerNotFixed: return "StabilizerNotFixed";
        case Err::NotInner: return "NotInner";
        case Err::WitnessMismatch: return "WitnessMismatch";
        case Err::DimensionMismatch: return "DimensionMismatch";
        case Err::NotUnit: return "NotUnit";
        case Err::NotGrade1: return "NotGrade1";
        case Err::NotOrthogonal: return "NotOrthogonal";
        case Err::NotLiftable: return "NotLiftable";
        case Err::CapExceeded: return "CapExceeded";
        case Err::ThetaPi: return "ThetaPi";
        case Err::OddElement: return "OddElement";
        case Err::BadInput: return "BadInput";
        case Err::InternalFault: return "InternalFault";
    }
    return "UnknownError";
}

Perm perm_identity(int degree) {
    Perm p(degree);
    std::iota(p.begin(), p.end(), 0);
    return p;
}

Perm perm_compose(const Perm& p, const Perm& q) {
    Perm r(p.size());
    for (size_t i = 0; i < p.size(); ++i) r[i] = q[p[i]];
    return r;
}

Perm perm_inverse(const Perm& p) {
    Perm r(p.size());
    for (size_t i = 0; i < p.size(); ++i) r[p[i]] = static_cast<int>(i);
    return r;
}

std::string perm_label(const Perm& p) {
    std::ostringstream os;
    os << '[';
    for (size_t i = 0; i < p.size(); ++i) {
        if (i) os << ' ';
        os << p[i];
    }
    os << ']';
    return os.str();
}

namespace {

void check_perm(int degree, const Perm& p) {
    if (static_cast<int>(p.size()) != degree)
        fail(Err::NotABijection, "permutation has length " + std::to_string(p.size()) +
                                     ", expected " + std::to_string(degree));
    std::vector<bool> seen(degree, false);
    for (int v : p) {
        if (v < 0 || v >= degree || seen[v])
            fail(Err::NotABijection, "not a bijection on {0.." + std::to_string(degree - 1) +
                                         "}: " + perm_label(p));
        seen[v] = true;
    }
}

// Greedy generating set via closure from the identity; used by Light's test.
std::vector<int> greedy_generators(int n, const std::vector<int>& mul, int identity) {
    std::vector<int> gens;
    std::vector<bool> reached(n, false);
    reached[identity] = true;
    int reached_count = 1;
    auto close_with = [&](int g) {
        std::queue<int> work;
        if (!reached[g]) {
            reached[g] = true;
            ++reached_count;
        }
        for (int x = 0; x < n; ++x)
            if (reached[x]) work.push(x);
        while (!work.empty()) {
            int x = work.front();
            work.pop();
            for (int s : gens) {
                int y = mul[static_cast<size_t>(x) * n + s];
                if (!reached[y]) {
                    reached[y] = true;
                    ++reached_count;
                    work.push(y);
                }
            }
        }
    };
    for (int g = 0; g < n && reached_count < n; ++g) {
        if (reached[g]) continue;
        gens.push_back(g);
        close_with(g);
    }
    return gens;
}

void check_associativity(int n, const std::vector<int>& mul, int identity) {
    auto at = [&](int a, int b) { return mul[static_cast<size_t>(a) * n + b]; };
    if (n <= 256) {
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b) {
                int ab = at(a, b);
                for (int c = 0; c < n; ++c)
                    if (at(ab, c) != at(a, at(b, c)))
                        fail(Err::NotAssociative,
                             "(a*b)*c != a*(b*c) at a=" + std::to_string(a) +
                                 " b=" + std::to_string(b) + " c=" + std::to_string(c));
            }
        return;
    }
    // Light's associativity test: checking all (a, s, c) with s in a
    // generating set suffices.
    for (int s : greedy_generators(n, mul, identity)) {
        for (int a = 0; a < n; ++a) {
            int as = at(a, s);
            for (int c = 0; c < n; ++c)
                if (at(as, c) != at(a, at(s, c)))
                    fail(Err::NotAssociative,
                         "(a*b)*c != a*(b*c) at a=" + std::to_string(a) + " b=" + std::to_string(s) +
                             " c=" + std::to_string(c));
        }
    }
}

} // namespace

GroupPtr FiniteGroup::from_cayley(const std::vector<std::vector<int>>& table,
                                  std::optional<int> identity_hint,
                                  std::vector<std::string> labels) {
    int n = static_cast<int>(table.size());
    if (n == 0) fail(Err::BadInput, "empty multiplication table");
    std::vector<int> mul(static_cast<size_t>(n) * n);
    for (int a = 0; a < n; ++a) {
        if (static_cast<int>(table[a].size()) != n)
            fail(Err::BadInput, "table is not square at row " + std::to_string(a));
        for (int b = 0; b < n; ++b) {
            int v = table[a][b];
            if (v < 0 || v >= n)
                fail(Err::BadInput, "entry out of range at (" + std::to_string(a) + "," +
                                        std::to_string(b) + ")");
            mul[static_cast<size_t>(a) * n + b] = v;
        }
    }

    auto is_identity = [&](int e) {
        for (int x = 0; x < n; ++x)
            if (mul[static_cast<size_t>(e) * n + x] != x || mul[static_cast<size_t>(x) * n + e] != x)
                return false;
        return true;
    };
    int identity = -1;
    if (identity_hint) {
        if (*identity_hint < 0 || *identity_hint >= n || !is_identity(*identity_hint))
            fail(Err::NoIdentity, "hinted element " + std::to_string(identity_hint.value_or(-1)) +
                                      " is not a two-sided identity");
        identity = *identity_hint;
    } else {
        for (int e = 0; e < n; ++e)
            if (is_identity(e)) {
                identity = e;
                break;
            }
        if (identity < 0) fail(Err::NoIdentity, "no two-sided identity element");
    }

    std::vector<int> inv(n, -1);
    for (int a = 0; a < n; ++a) {
        for (int b = 0; b < n; ++b)
            if (mul[static_cast<size_t>(a) * n + b] == identity &&
                mul[static_cast<size_t>(b) * n + a] == identity) {
                inv[a] = b;
                break;
            }
        if (inv[a] < 0) fail(Err::NoInverse, "element " + std::to_string(a) + " has no two-sided inverse");
    }

    check_associativity(n, mul, identity);

    auto g = std::shared_ptr<FiniteGroup>(new FiniteGroup());
    g->order_ = n;
    g->identity_ = identity;
    g->mul_ = std::move(mul);
    g->inv_ = std::move(inv);
    g->labels_ = std::move(labels);
    return g;
}

GroupPtr FiniteGroup::from_trusted_table(int order, std::vector<int> mul,
                                         std::vector<std::string> labels) {
    auto g = std::shared_ptr<FiniteGroup>(new FiniteGroup());
    g->order_ = order;
    g->mul_ = std::move(mul);
    g->labels_ = std::move(labels);
    g->inv_.assign(order, -1);
    int identity = -1;
    for (int e = 0; e < order && identity < 0; ++e) {
        bool ok = true;
        for (int x = 0; x < order && ok; ++x)
            ok = g->mul(e, x) == x && g->mul(x, e) == x;
        if (ok) identity = e;
    }
    require_internal(identity >= 0, "derived table lost its identity");
    g->identity_ = identity;
    for (int a = 0; a < order; ++a) {
        for (int b = 0; b < order; ++b)
            if (g->mul(a, b) == identity && g->mul(b, a) == identity) {
                g->inv_[a] = b;
                break;
            }
        require_internal(g->inv_[a] >= 0, "derived table lost an inverse");
    }
    return g;
}

GroupPtr FiniteGroup::from_permutations(int degree, const std::vector<Perm>& generators,
                                        int order_cap) {
    if (degree <= 0) fail(Err::BadInput, "degree must be positive");
    for (const Perm& p : generators) check_perm(degree, p);

    std::vector<Perm> elements;
    std::map<Perm, int> index_of;
    elements.push_back(perm_identity(degree));
    index_of[elements[0]] = 0;
    for (size_t next = 0; next < elements.size(); ++next) {
        Perm cur = elements[next]; // copy: elements may reallocate
        for (const Perm& gen : generators) {
            Perm prod = perm_compose(cur, gen);
            if (index_of.emplace(prod, static_cast<int>(elements.size())).second) {
                elements.push_back(std::move(prod));
                if (static_cast<int>(elements.size()) > order_cap)
                    fail(Err::ClosureTooLarge,
                         "closure exceeds cap " + std::to_string(order_cap));
            }
        }
    }

    int n = static_cast<int>(elements.size());
    std::vector<int> mul(static_cast<size_t>(n) * n);
    std::vector<std::string> labels(n);
    for (int a = 0; a < n; ++a) {
        labels[a] = perm_label(elements[a]);
        for (int b = 0; b < n; ++b) {
            auto it = index_of.find(perm_compose(elements[a], elements[b]));
            require_internal(it != index_of.end(), "permutation closure not closed");
            mul[static_cast<size_t>(a) * n + b] = it->second;
        }
    }
    return from_trusted_table(n, std::move(mul), std::move(labels));
}

GroupPtr FiniteGroup::from_closed_permutations(const std::vector<Perm>& elements) {
    if (elements.empty()) fail(Err::BadInput, "no permutations given");
    int degree = static_cast<int>(elements[0].size());
    std::map<Perm, int> index_of;
    for (size_t i = 0; i < elements.size(); ++i) {
        check_perm(degree, elements[i]);
        if (!index_of.emplace(elements[i], static_cast<int>(i)).second)
            fail(Err::BadInput, "duplicate permutation " + perm_label(elements[i]));
    }
    int n = static_cast<int>(elements.size());
    std::vector<int> mul(static_cast<size_t>(n) * n);
    std::vector<std::string> labels(n);
    for (int a = 0; a < n; ++a) {
        labels[a] = perm_label(elements[a]);
        for (int b = 0; b < n; ++b) {
            auto it = index_of.find(perm_compose(elements[a], elements[b]));
            if (it == index_of.end())
                fail(Err::BadInput, "set of permutations is not closed under composition");
            mul[static_cast<size_t>(a) * n + b] = it->second;
        }
    }
    return from_trusted_table(n, std::move(mul), std::move(labels));
}

GroupPtr group_from_cayley(const std::vector<std::vector<int>>& table,
                           std::optional<int> identity_hint) {
    return FiniteGroup::from_cayley(table, identity_hint);
}

GroupPtr group_from_permutations(int degree, const std::vector<Perm>& generators, int order_cap) {
    return FiniteGroup::from_permutations(degree, generators, order_cap);
}

void GroupAutomorphism::validate() const {
    int n = group->order();
    if (static_cast<int>(image.size()) != n)
        fail(Err::NotABijection, "image table has wrong length");
    std::vector<bool> seen(n, false);
    for (int v : image) {
        if (v < 0 || v >= n || seen[v]) fail(Err::NotABijection, "automorphism image is not a bijection");
        seen[v] = true;
    }
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            if (image[group->mul(a, b)] != group->mul(image[a], image[b]))
                fail(Err::BadInput, "image is not a homomorphism at a=" + std::to_string(a) +
                                        " b=" + std::to_string(b));
}

bool Subgroup::contains(int g) const {
    return std::binary_search(members.begin(), members.end(), g);
}

void Subgroup::validate() const {
    if (members.empty() || !std::is_sorted(members.begin(), members.end()))
        fail(Err::NotASubgroup, "member list must be sorted and non-empty");
    for (int m : members)
        if (m < 0 || m >= group->order()) fail(Err::NotASubgroup, "member index out of range");
    if (!contains(group->identity())) fail(Err::NotASubgroup, "identity is missing");
    for (int a : members) {
        if (!contains(group->inv(a)))
            fail(Err::NotASubgroup, "not closed under inverse at " + std::to_string(a));
        for (int b : members)
            if (!contains(group->mul(a, b)))
                fail(Err::NotASubgroup,
                     "not closed under product at " + std::to_string(a) + "," + std::to_string(b));
    }
}

GroupAutomorphism automorphism_from_conjugation(const GroupPtr& g, int q) {
    if (q < 0 || q >= g->order()) fail(Err::BadInput, "element index out of range");
    GroupAutomorphism sigma{g, std::vector<int>(g->order())};
    for (int x = 0; x < g->order(); ++x) sigma.image[x] = g->conj(x, q);
    return sigma;
}

GroupAutomorphism identity_automorphism(const GroupPtr& g) {
    GroupAutomorphism sigma{g, std::vector<int>(g->order())};
    std::iota(sigma.image.begin(), sigma.image.end(), 0);
    return sigma;
}

GroupAutomorphism compose_automorphisms(const GroupAutomorphism& first,
                                        const GroupAutomorphism& then) {
    require_internal(first.group == then.group, "automorphisms live on different groups");
    GroupAutomorphism out{first.group, std::vector<int>(first.image.size())};
    for (size_t i = 0; i < first.image.size(); ++i) out.image[i] = then.image[first.image[i]];
    return out;
}

Subgroup fix_subgroup(const GroupAutomorphism& sigma) {
    Subgroup h{sigma.group, {}};
    for (int x = 0; x < sigma.group->order(); ++x)
        if (sigma.image[x] == x) h.members.push_back(x);
    h.validate();
    return h;
}

Subgroup trivial_subgroup(const GroupPtr& g) { return Subgroup{g, {g->identity()}}; }

Subgroup full_subgroup(const GroupPtr& g) {
    Subgroup h{g, std::vector<int>(g->order())};
    std::iota(h.members.begin(), h.members.end(), 0);
    return h;
}

Subgroup subgroup_generated(const GroupPtr& g, const std::vector<int>& gens) {
    std::vector<bool> in(g->order(), false);
    std::vector<int> elems{g->identity()};
    in[g->identity()] = true;
    for (int x : gens) {
        if (x < 0 || x >= g->order()) fail(Err::BadInput, "generator index out of range");
        if (!in[x]) {
            in[x] = true;
            elems.push_back(x);
        }
    }
    for (size_t i = 0; i < elems.size(); ++i) {
        int a = elems[i];
        int ia = g->inv(a);
        if (!in[ia]) {
            in[ia] = true;
            elems.push_back(ia);
        }
        for (size_t j = 0; j < elems.size(); ++j) {
            int p = g->mul(a, elems[j]);
            if (!in[p]) {
                in[p] = true;
                elems.push_back(p);
            }
        }
    }
    Subgroup h{g, std::move(elems)};
    std::sort(h.members.begin(), h.members.end());
    h.validate();
    return h;
}

std::optional<int> inner_witness(const GroupAutomorphism& sigma) {
    const FiniteGroup& g = *sigma.group;
    for (int q = 0; q < g.order(); ++q) {
        bool match = true;
        for (int x = 0; x < g.order() && match; ++x) match = g.conj(x, q) == sigma.image[x];
        if (match) return q;
    }
    return std::nullopt;
}

int automorphism_order(const GroupAutomorphism& sigma) {
    const int n = sigma.group->order();
    std::vector<int> power = sigma.image;
    auto is_id = [&](const std::vector<int>& p) {
        for (int i = 0; i < n; ++i)
            if (p[i] != i) return false;
        return true;
    };
    int m = 1;
    while (!is_id(power)) {
        std::vector<int> next(n);
        for (int i = 0; i < n; ++i) next[i] = sigma.image[power[i]];
        power = std::move(next);
        ++m;
        require_internal(m <= 1 + n, "automorphism order exceeds group order bound");
    }
    return m;
}

GroupPtr semidirect_z(const GroupPtr& g, const GroupAutomorphism& sigma, int m) {
    if (m <= 0) fail(Err::BadModulus, "modulus must be positive");
    int ord = automorphism_order(sigma);
    if (m % ord != 0)
        fail(Err::BadModulus, "modulus " + std::to_string(m) + " is not a multiple of ord(sigma) = " +
                                  std::to_string(ord));
    const int n = g->order();
    if (static_cast<long long>(n) * m > FiniteGroup::kDefaultOrderCap)
        fail(Err::TooLarge, "semidirect product of order " + std::to_string(static_cast<long long>(n) * m) +
                                " exceeds the cap " + std::to_string(FiniteGroup::kDefaultOrderCap));
    // sigma^t for t in 0..m-1
    std::vector<std::vector<int>> powers(m);
    powers[0] = identity_automorphism(g).image;
    for (int t = 1; t < m; ++t) {
        powers[t].resize(n);
        for (int i = 0; i < n; ++i) powers[t][i] = sigma.image[powers[t - 1][i]];
    }

    int total = n * m;
    std::vector<int> mul(static_cast<size_t>(total) * total);
    std::vector<std::string> labels(total);
    auto base_label = [&](int x) {
        return g->has_labels() ? g->label(x) : std::to_string(x);
    };
    for (int s = 0; s < m; ++s)
        for (int a = 0; a < n; ++a) {
            int idx = semidirect_index(*g, a, s);
            labels[idx] = "(" + base_label(a) + "," + std::to_string(s) + ")";
            for (int t = 0; t < m; ++t)
                for (int b = 0; b < n; ++b) {
                    int jdx = semidirect_index(*g, b, t);
                    int prod = semidirect_index(*g, g->mul(powers[t][a], b), (s + t) % m);
                    mul[static_cast<size_t>(idx) * total + jdx] = prod;
                }
        }
    return FiniteGroup::from_trusted_table(total, std::move(mul), std::move(labels));
}

GroupPtr bergman_extension(const GroupPtr& g) {
    const int n = g->order();
    if (2LL * n * n > FiniteGroup::kDefaultOrderCap)
        fail(Err::TooLarge, "extension of order " + std::to_string(2LL * n * n) +
                                " exceeds the cap " + std::to_string(FiniteGroup::kDefaultOrderCap));
    const int total = 2 * n * n;
    std::vector<int> mul(static_cast<size_t>(total) * total);
    std::vector<std::string> labels(total);
    auto base_label = [&](int x) {
        return g->has_labels() ? g->label(x) : std::to_string(x);
    };
    for (int a_idx = 0; a_idx < 2; ++a_idx) {
        int a = a_idx == 0 ? 1 : -1;
        for (int g1 = 0; g1 < n; ++g1)
            for (int h1 = 0; h1 < n; ++h1) {
                int idx = bergman_index(*g, g1, h1, a);
                labels[idx] =
                    "(" + base_label(g1) + "," + base_label(h1) + "," + (a == 1 ? "+1" : "-1") + ")";
                for (int b_idx = 0; b_idx < 2; ++b_idx) {
                    int b = b_idx == 0 ? 1 : -1;
                    for (int g2 = 0; g2 < n; ++g2)
                        for (int h2 = 0; h2 < n; ++h2) {
                            int jdx = bergman_index(*g, g2, h2, b);
                            int prod = b == 1
                                           ? bergman_index(*g, g->mul(g1, g2), g->mul(h1, h2), a * b)
                                           : bergman_index(*g, g->mul(h1, g2), g->mul(g1, h2), a * b);
                            mul[static_cast<size_t>(idx) * total + jdx] = prod;
                        }
                }
            }
    }
    return FiniteGroup::from_trusted_table(total, std::move(mul), std::move(labels));
}

CosetSpace right_cosets(const GroupPtr& g, const Subgroup& h) {
    if (h.group != g) fail(Err::NotASubgroup, "subgroup belongs to a different group");
    h.validate();
    CosetSpace cs{g, h, {}, std::vector<int>(g->order(), -1)};
    for (int x = 0; x < g->order(); ++x) {
        if (cs.coset_of[x] >= 0) continue;
        int c = static_cast<int>(cs.reps.size());
        cs.reps.push_back(x); // least element: x is unassigned and indices are scanned in order
        for (int m : h.members) cs.coset_of[g->mul(m, x)] = c;
        require_internal(cs.coset_of[x] == c, "coset assignment failed");
    }
    require_internal(static_cast<int>(cs.reps.size()) * h.order() == g->order(),
                     "cosets do not partition the group");
    return cs;
}

} // namespace qembed
