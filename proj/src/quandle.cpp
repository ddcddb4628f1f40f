#include "qembed/quandle.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>

namespace qembed {

AxiomReport check_quandle_axioms(const std::vector<std::vector<int>>& op) {
    int n = static_cast<int>(op.size());
    for (int x = 0; x < n; ++x) {
        if (static_cast<int>(op[x].size()) != n) fail(Err::BadInput, "operation table is not square");
        for (int y = 0; y < n; ++y)
            if (op[x][y] < 0 || op[x][y] >= n) fail(Err::BadInput, "table entry out of range");
    }
    AxiomReport report;
    for (int x = 0; x < n; ++x)
        if (op[x][x] != x) report.idempotence.push_back({x});
    for (int y = 0; y < n; ++y) {
        std::vector<int> preimage(n, -1);
        for (int x = 0; x < n; ++x) {
            int v = op[x][y];
            if (preimage[v] >= 0)
                report.bijectivity.push_back({y, preimage[v], x});
            else
                preimage[v] = x;
        }
    }
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
            int xy = op[x][y];
            for (int z = 0; z < n; ++z)
                if (op[xy][z] != op[op[x][z]][op[y][z]]) report.distributivity.push_back({x, y, z});
        }
    return report;
}

Perm FiniteQuandle::column(int y) const {
    Perm p(order_);
    for (int x = 0; x < order_; ++x) p[x] = op(x, y);
    return p;
}

QuandlePtr FiniteQuandle::from_table(const std::vector<std::vector<int>>& op,
                                     std::vector<std::string> labels) {
    AxiomReport report = check_quandle_axioms(op);
    if (!report.valid()) {
        std::string msg = "quandle axioms violated:";
        if (!report.idempotence.empty())
            msg += " x*x!=x at x=" + std::to_string(report.idempotence[0].x);
        if (!report.bijectivity.empty())
            msg += " S_y not bijective at y=" + std::to_string(report.bijectivity[0].y);
        if (!report.distributivity.empty())
            msg += " self-distributivity fails at (" + std::to_string(report.distributivity[0].x) +
                   "," + std::to_string(report.distributivity[0].y) + "," +
                   std::to_string(report.distributivity[0].z) + ")";
        fail(Err::BadInput, msg);
    }
    auto q = std::shared_ptr<FiniteQuandle>(new FiniteQuandle());
    int n = static_cast<int>(op.size());
    q->order_ = n;
    q->op_.resize(static_cast<size_t>(n) * n);
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) q->op_[static_cast<size_t>(x) * n + y] = op[x][y];
    q->labels_ = std::move(labels);
    return q;
}

void QuandleTriplet::validate() const {
    if (subgroup.group != group || aut.group != group)
        fail(Err::TripletInvalid, "subgroup/automorphism belong to a different group");
    subgroup.validate();
    aut.validate();
    for (int h : subgroup.members)
        if (aut.image[h] != h)
            fail(Err::TripletInvalid,
                 "H is not contained in Fix(sigma): element " + std::to_string(h) + " moves");
}

namespace {

std::vector<std::vector<int>> square_table(int n) {
    return std::vector<std::vector<int>>(n, std::vector<int>(n));
}

std::vector<std::string> labels_of(const FiniteGroup& g) {
    if (g.has_labels()) return g.labels();
    std::vector<std::string> out(g.order());
    for (int i = 0; i < g.order(); ++i) out[i] = std::to_string(i);
    return out;
}

} // namespace

QuandlePtr conj_quandle(const GroupPtr& g) {
    auto table = square_table(g->order());
    for (int x = 0; x < g->order(); ++x)
        for (int y = 0; y < g->order(); ++y) table[x][y] = g->conj(x, y);
    return FiniteQuandle::from_table(table, labels_of(*g));
}

QuandlePtr core_quandle(const GroupPtr& g) {
    auto table = square_table(g->order());
    for (int x = 0; x < g->order(); ++x)
        for (int y = 0; y < g->order(); ++y) table[x][y] = g->mul(g->mul(y, g->inv(x)), y);
    return FiniteQuandle::from_table(table, labels_of(*g));
}

QuandlePtr alexander_quandle(const GroupPtr& g, const GroupAutomorphism& sigma) {
    sigma.validate();
    auto table = square_table(g->order());
    for (int x = 0; x < g->order(); ++x)
        for (int y = 0; y < g->order(); ++y)
            table[x][y] = g->mul(sigma.image[g->mul(x, g->inv(y))], y);
    return FiniteQuandle::from_table(table, labels_of(*g));
}

QuandlePtr dihedral_quandle(int n) {
    if (n <= 0) fail(Err::BadInput, "order must be positive");
    auto table = square_table(n);
    std::vector<std::string> labels(n);
    for (int a = 0; a < n; ++a) {
        labels[a] = std::to_string(a);
        for (int b = 0; b < n; ++b) table[a][b] = ((2 * b - a) % n + n) % n;
    }
    return FiniteQuandle::from_table(table, std::move(labels));
}

std::pair<QuandlePtr, CosetSpace> triplet_quandle(const QuandleTriplet& t) {
    t.validate();
    const FiniteGroup& g = *t.group;
    CosetSpace cs = right_cosets(t.group, t.subgroup);
    int m = cs.count();
    auto table = square_table(m);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) {
            int gi = cs.reps[i], gj = cs.reps[j];
            table[i][j] = cs.coset_of[g.mul(t.aut.image[g.mul(gi, g.inv(gj))], gj)];
        }
    // representative independence: the coset of sigma(a b^{-1}) b must not
    // depend on the representatives a of Hg and b of Hh
    for (int a = 0; a < g.order(); ++a)
        for (int b = 0; b < g.order(); ++b) {
            int got = cs.coset_of[g.mul(t.aut.image[g.mul(a, g.inv(b))], b)];
            require_internal(got == table[cs.coset_of[a]][cs.coset_of[b]],
                             "triplet operation depends on coset representatives");
        }
    std::vector<std::string> labels(m);
    for (int i = 0; i < m; ++i)
        labels[i] = "H" + (g.has_labels() ? g.label(cs.reps[i]) : std::to_string(cs.reps[i]));
    return {FiniteQuandle::from_table(table, std::move(labels)), std::move(cs)};
}

namespace {

// Backtracking over bijections f with f(x.op(a,b)) = y.op(f(a), f(b)).
// Images 0..k are assigned in order and candidates are tried ascending, so
// the results come out lexicographically sorted.
void search_maps(const FiniteQuandle& x, const FiniteQuandle& y,
                 const std::function<bool(const Perm&)>& emit) {
    int n = x.order();
    Perm image(n, -1);
    std::vector<bool> used(n, false);

    // Prune on every pair touching the newest assignment k. When op(a,b) is
    // not assigned yet, its forced image must still be free.
    auto consistent = [&](int k) {
        for (int i = 0; i <= k; ++i) {
            for (auto [a, b] : {std::pair{i, k}, std::pair{k, i}}) {
                int ab = x.op(a, b);
                int fab = y.op(image[a], image[b]);
                if (image[ab] >= 0) {
                    if (image[ab] != fab) return false;
                } else if (used[fab]) {
                    return false;
                }
            }
        }
        return true;
    };

    std::function<bool(int)> rec = [&](int k) -> bool {
        if (k == n) return emit(image);
        for (int v = 0; v < n; ++v) {
            if (used[v]) continue;
            image[k] = v;
            used[v] = true;
            if (consistent(k) && rec(k + 1)) return true;
            image[k] = -1;
            used[v] = false;
        }
        return false;
    };
    rec(0);
}

} // namespace

QuandleAutGroup automorphism_group(const FiniteQuandle& x, int order_cap) {
    if (x.order() > order_cap)
        fail(Err::TooLarge, "quandle order " + std::to_string(x.order()) + " exceeds Aut cap " +
                                std::to_string(order_cap));
    QuandleAutGroup out;
    constexpr size_t kGroupCap = 20160; // |S_8|: beyond this the Cayley table is unreasonable
    search_maps(x, x, [&](const Perm& f) {
        out.perms.push_back(f);
        if (out.perms.size() > kGroupCap)
            fail(Err::TooLarge, "automorphism group larger than " + std::to_string(kGroupCap));
        return false; // keep enumerating
    });
    out.group = FiniteGroup::from_closed_permutations(out.perms);
    return out;
}

GroupPtr inner_group(const FiniteQuandle& x) {
    std::vector<Perm> gens;
    gens.reserve(x.order());
    for (int y = 0; y < x.order(); ++y) gens.push_back(x.column(y));
    return FiniteGroup::from_permutations(x.order(), gens);
}

HomogeneityReport is_homogeneous(const FiniteQuandle& x, int order_cap) {
    QuandleAutGroup aut = automorphism_group(x, order_cap);
    HomogeneityReport rep;
    rep.orbit_of.assign(x.order(), -1);
    for (int s = 0; s < x.order(); ++s) {
        if (rep.orbit_of[s] >= 0) continue;
        int id = static_cast<int>(rep.orbits.size());
        std::vector<int> orbit;
        std::vector<int> stack{s};
        rep.orbit_of[s] = id;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            orbit.push_back(v);
            for (const Perm& p : aut.perms) {
                if (rep.orbit_of[p[v]] < 0) {
                    rep.orbit_of[p[v]] = id;
                    stack.push_back(p[v]);
                }
            }
        }
        std::sort(orbit.begin(), orbit.end());
        rep.orbits.push_back(std::move(orbit));
    }
    rep.homogeneous = rep.orbits.size() == 1;
    return rep;
}

HomomorphismCheck is_homomorphism(const QuandleMap& f) {
    const FiniteQuandle& x = *f.source;
    const FiniteQuandle& y = *f.target;
    if (static_cast<int>(f.image.size()) != x.order())
        fail(Err::BadInput, "map image has wrong length");
    for (int v : f.image)
        if (v < 0 || v >= y.order()) fail(Err::BadInput, "map image out of range");
    for (int a = 0; a < x.order(); ++a)
        for (int b = 0; b < x.order(); ++b)
            if (f.image[x.op(a, b)] != y.op(f.image[a], f.image[b]))
                return {false, std::pair{a, b}};
    return {true, std::nullopt};
}

EmbeddingCheck is_embedding(const QuandleMap& f) {
    EmbeddingCheck out{true, std::nullopt, std::nullopt};
    HomomorphismCheck hom = is_homomorphism(f);
    if (!hom.ok) {
        out.ok = false;
        out.hom_counterexample = hom.counterexample;
    }
    for (int i = 0; i < f.source->order() && !out.collision; ++i)
        for (int j = i + 1; j < f.source->order(); ++j)
            if (f.image[i] == f.image[j]) {
                out.ok = false;
                out.collision = std::pair{i, j};
                break;
            }
    return out;
}

std::pair<QuandleTriplet, QuandleMap> joyce_triplet(const QuandlePtr& x, int x0, int order_cap) {
    if (x0 < 0 || x0 >= x->order()) fail(Err::BadInput, "basepoint out of range");
    QuandleAutGroup aut = automorphism_group(*x, order_cap);
    {
        HomogeneityReport rep = is_homogeneous(*x, order_cap);
        if (!rep.homogeneous)
            fail(Err::NotHomogeneous,
                 "Aut acts with " + std::to_string(rep.orbits.size()) + " orbits");
    }

    Subgroup stab{aut.group, {}};
    for (size_t i = 0; i < aut.perms.size(); ++i)
        if (aut.perms[i][x0] == x0) stab.members.push_back(static_cast<int>(i));

    Perm s0 = x->column(x0);
    int s0_index = -1;
    for (size_t i = 0; i < aut.perms.size(); ++i)
        if (aut.perms[i] == s0) {
            s0_index = static_cast<int>(i);
            break;
        }
    require_internal(s0_index >= 0, "right translation S_x0 missing from Aut(X)");

    GroupAutomorphism sigma = automorphism_from_conjugation(aut.group, s0_index);
    for (int h : stab.members)
        if (sigma.image[h] != h)
            fail(Err::StabilizerNotFixed, "stabilizer element " + std::to_string(h) +
                                              " is moved by conjugation with S_x0");

    QuandleTriplet t{aut.group, std::move(stab), std::move(sigma)};
    auto [q, cs] = triplet_quandle(t);

    QuandleMap iso{q, x, std::vector<int>(q->order())};
    for (int c = 0; c < cs.count(); ++c) iso.image[c] = aut.perms[cs.reps[c]][x0];

    EmbeddingCheck check = is_embedding(iso);
    require_internal(check.ok && q->order() == x->order(),
                     "Joyce map is not a bijective homomorphism");
    return {std::move(t), std::move(iso)};
}

std::optional<Perm> quandle_isomorphism(const FiniteQuandle& x, const FiniteQuandle& y,
                                        int order_cap) {
    if (x.order() != y.order()) return std::nullopt;
    if (x.order() > order_cap)
        fail(Err::TooLarge, "quandle order exceeds isomorphism search cap");
    std::optional<Perm> found;
    search_maps(x, y, [&](const Perm& f) {
        found = f;
        return true; // stop at the first (lexicographically least) one
    });
    return found;
}

} // namespace qembed
