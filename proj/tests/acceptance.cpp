// Acceptance suite: one line per criterion, nonzero exit on any failure.

#include <cmath>
#include <cstdio>
#include <functional>
#include <set>
#include <string>
#include <vector>

#include "qembed/embed.hpp"
#include "qembed/geom.hpp"
#include "qembed/json_io.hpp"
#include "support/catalog.hpp"

using namespace qembed;
using namespace qembed::testcat;

namespace {

int g_failures = 0;

std::string sci(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2e", v);
    return buf;
}

void criterion(int number, const std::string& name, const std::function<bool(std::string&)>& body) {
    std::string detail;
    bool ok = false;
    try {
        ok = body(detail);
    } catch (const std::exception& e) {
        detail = e.what();
    }
    std::printf("%s  %2d  %s%s%s\n", ok ? "PASS" : "FAIL", number, name.c_str(),
                detail.empty() ? "" : " -- ", detail.c_str());
    if (!ok) ++g_failures;
}

std::vector<std::vector<int>> table_of(const FiniteQuandle& q) {
    std::vector<std::vector<int>> t(q.order(), std::vector<int>(q.order()));
    for (int x = 0; x < q.order(); ++x)
        for (int y = 0; y < q.order(); ++y) t[x][y] = q.op(x, y);
    return t;
}

struct NamedGroup {
    std::string name;
    GroupPtr group;
};

std::vector<NamedGroup> catalog() {
    std::vector<NamedGroup> out;
    for (int n = 2; n <= 12; ++n) out.push_back({"Z" + std::to_string(n), cyclic(n)});
    out.push_back({"D4", dihedral_group(4)});
    out.push_back({"Q8", quaternion8()});
    out.push_back({"S3", symmetric(3)});
    out.push_back({"S4", symmetric(4)});
    out.push_back({"A4", alternating4()});
    return out;
}

// automorphisms paired with each catalog group for the axiom and criterion runs
std::vector<GroupAutomorphism> automorphisms_for(const NamedGroup& g) {
    std::vector<GroupAutomorphism> out;
    out.push_back(identity_automorphism(g.group));
    if (g.name[0] == 'Z') {
        out.push_back(negation(g.group));
        int n = g.group->order();
        for (int k : {2, 3, 5})
            if (k < n && std::gcd(k, n) == 1 && k != n - 1) out.push_back(mult_by(g.group, k));
    } else {
        // two inner automorphisms with distinct fixed subgroups
        out.push_back(automorphism_from_conjugation(g.group, 1));
        out.push_back(automorphism_from_conjugation(g.group, g.group->order() / 2));
    }
    return out;
}

// proper subgroups of Fix(sigma): the trivial one plus each 1-generated one
std::vector<Subgroup> proper_subgroups_of_fix(const GroupPtr& g, const Subgroup& fix) {
    std::vector<Subgroup> out;
    std::set<std::vector<int>> seen;
    Subgroup triv = trivial_subgroup(g);
    if (triv.members != fix.members && seen.insert(triv.members).second) out.push_back(triv);
    for (int m : fix.members) {
        Subgroup h = subgroup_generated(g, {m});
        if (h.members != fix.members && seen.insert(h.members).second) out.push_back(h);
    }
    return out;
}

double quandle_conjugation_residual(const CliffordElement& image_xy, const CliffordElement& ix,
                                    const CliffordElement& iy) {
    return image_xy.max_abs_diff(
        clifford_mul(clifford_mul(clifford_reverse(iy), ix), iy));
}

bool line_ok(const GeomReport& rep, const std::string& name) {
    for (const CheckLine& c : rep.checks)
        if (c.name.rfind(name, 0) == 0) return c.pass;
    return false;
}

} // namespace

int main() {
    const Tolerance tol{1e-9, 0xC0FFEE, 200};

    criterion(1, "axiom suite over the catalog (conj, core, alex, triplet, dihedral)", [&](std::string& d) {
        int tables = 0;
        for (const NamedGroup& g : catalog()) {
            if (!check_quandle_axioms(table_of(*conj_quandle(g.group))).valid()) return false;
            if (!check_quandle_axioms(table_of(*core_quandle(g.group))).valid()) return false;
            tables += 2;
            for (const GroupAutomorphism& sigma : automorphisms_for(g)) {
                if (!check_quandle_axioms(table_of(*alexander_quandle(g.group, sigma))).valid())
                    return false;
                auto [tq, cs] = triplet_quandle({g.group, fix_subgroup(sigma), sigma});
                if (!check_quandle_axioms(table_of(*tq)).valid()) return false;
                tables += 2;
            }
        }
        for (int n = 2; n <= 12; ++n) {
            if (!check_quandle_axioms(table_of(*dihedral_quandle(n))).valid()) return false;
            ++tables;
        }
        d = std::to_string(tables) + " tables, zero violations";
        return true;
    });

    criterion(2, "Fix(sigma) = H criterion equivalence with collision certificates", [&](std::string& d) {
        int positives = 0, negatives = 0;
        for (const NamedGroup& g : catalog()) {
            for (const GroupAutomorphism& sigma : automorphisms_for(g)) {
                Subgroup fix = fix_subgroup(sigma);
                std::vector<std::pair<Subgroup, bool>> cases;
                cases.emplace_back(fix, true);
                for (Subgroup& h : proper_subgroups_of_fix(g.group, fix))
                    cases.emplace_back(std::move(h), false);
                for (auto& [h, expect_embedding] : cases) {
                    EmbeddingReport rep = embeddability_report({g.group, h, sigma});
                    bool fix_is_h = fix.members == h.members;
                    if (fix_is_h != expect_embedding) return false;
                    if ((rep.verdict == Verdict::Embedding) != expect_embedding) return false;
                    if (!expect_embedding) {
                        // the certificate must be a concrete collision of
                        // distinct cosets
                        if (!rep.collision.has_value()) return false;
                        auto [c1, c2] = *rep.collision;
                        if (c1 == c2 || rep.map.image[c1] != rep.map.image[c2]) return false;
                    }
                    (expect_embedding ? positives : negatives)++;
                }
            }
        }
        d = std::to_string(positives) + " embeddings / " + std::to_string(negatives) +
            " certified collisions";
        return positives + negatives >= 40 && positives > 0 && negatives > 0;
    });

    criterion(3, "semidirect route: images (sigma(g^-1)g, 1), injectivity per the criterion", [&](std::string& d) {
        auto z5 = cyclic(5);
        auto z7 = cyclic(7);
        auto v4 = klein4();
        Subgroup diag{v4, {0, 3}};
        struct Case {
            QuandleTriplet t;
            bool expect;
        };
        std::vector<Case> cases = {
            {{z5, trivial_subgroup(z5), mult_by(z5, 2)}, true},
            {{z7, trivial_subgroup(z7), mult_by(z7, 3)}, true},
            {{v4, diag, klein_swap(v4)}, true},
            {{v4, trivial_subgroup(v4), klein_swap(v4)}, false},
        };
        int checked = 0;
        for (const Case& c : cases) {
            if (inner_witness(c.t.aut).has_value()) return false; // non-inner cases only
            EmbeddingReport rep = embed_semidirect(c.t);
            const FiniteGroup& g = *c.t.group;
            for (int i = 0; i < rep.cosets.count(); ++i) {
                int a = rep.cosets.reps[i];
                int expected = semidirect_index(g, g.mul(c.t.aut.image[g.inv(a)], a), 1);
                if (rep.map.image[i] != expected) return false;
                ++checked;
            }
            if ((rep.verdict == Verdict::Embedding) != c.expect) return false;
        }
        d = std::to_string(checked) + " images match the first-coordinate law";
        return true;
    });

    criterion(4, "fixed-point-free recovery: Alex(Z5, x2) and Alex(Z7, x3) embed", [&](std::string& d) {
        auto z5 = cyclic(5);
        auto z7 = cyclic(7);
        for (auto& t : {QuandleTriplet{z5, trivial_subgroup(z5), mult_by(z5, 2)},
                        QuandleTriplet{z7, trivial_subgroup(z7), mult_by(z7, 3)}}) {
            if (fix_subgroup(t.aut).order() != 1) return false;
            if (embeddability_report(t).verdict != Verdict::Embedding) return false;
        }
        d = "both generalized Alexander quandles embed";
        return true;
    });

    criterion(5, "Bergman coincidence on Z2, Z3, Z4, S3", [&](std::string& d) {
        for (const GroupPtr& g : {cyclic(2), cyclic(3), cyclic(4), symmetric(3)}) {
            BergmanReport rep = bergman_embed(g);
            int q = bergman_index(*g, g->identity(), g->identity(), -1);
            if (rep.embedding.witness_q != q) return false;
            if (!rep.fix_equals_diagonal || !rep.core_iso_ok || !rep.coincides_with_fb)
                return false;
            if (rep.embedding.verdict != Verdict::Embedding) return false;
        }
        d = "f_B matches the triplet embedding pointwise";
        return true;
    });

    criterion(6, "factor map composes the inner and semidirect embeddings", [&](std::string& d) {
        auto s3 = symmetric(3);
        int t01 = perm_index(s3, {1, 0, 2});
        auto d4 = dihedral_group(4);
        int rot = 1; // breadth-first: the rotation generator
        std::vector<QuandleTriplet> cases = {
            {s3, subgroup_generated(s3, {t01}), automorphism_from_conjugation(s3, t01)},
            {d4, fix_subgroup(automorphism_from_conjugation(d4, rot)),
             automorphism_from_conjugation(d4, rot)},
        };
        for (const QuandleTriplet& t : cases) {
            int q = *inner_witness(t.aut);
            FactorMap phi = factor_map(t.group, t.aut, q);
            if (!is_embedding(phi.map).ok) return false;
            EmbeddingReport inner = embed_inner(t, q);
            EmbeddingReport semi = embed_semidirect(t);
            if (inner.verdict != Verdict::Embedding) return false;
            for (int c = 0; c < inner.cosets.count(); ++c)
                if (phi.map.image[inner.map.image[c]] != semi.map.image[c]) return false;
        }
        d = "Phi o iota_inner = iota_semidirect pointwise";
        return true;
    });

    criterion(7, "Joyce round trip on R3, R5 and the transposition orbit of S3", [&](std::string& d) {
        std::vector<QuandlePtr> inputs = {dihedral_quandle(3), dihedral_quandle(5)};
        {
            auto s3 = symmetric(3);
            int t[3] = {perm_index(s3, {1, 0, 2}), perm_index(s3, {2, 1, 0}),
                        perm_index(s3, {0, 2, 1})};
            std::vector<std::vector<int>> orbit(3, std::vector<int>(3));
            for (int i = 0; i < 3; ++i)
                for (int j = 0; j < 3; ++j) {
                    int c = s3->conj(t[i], t[j]);
                    orbit[i][j] = static_cast<int>(std::find(t, t + 3, c) - t);
                }
            inputs.push_back(FiniteQuandle::from_table(orbit));
        }
        for (const QuandlePtr& x : inputs) {
            auto [trip, iso] = joyce_triplet(x, 0);
            auto [q, cs] = triplet_quandle(trip);
            if (!quandle_isomorphism(*q, *x).has_value()) return false;
        }
        d = "triplet quandles isomorphic to their sources";
        return true;
    });

    criterion(8, "geometric homomorphism residuals, injectivity, eigenspace round trips", [&](std::string& d) {
        double worst = 0;
        for (int n : {1, 2, 3, 4}) {
            GeomReport rep = check_sphere(n, tol);
            if (!rep.pass()) return false;
            for (const CheckLine& c : rep.checks)
                if (c.name.rfind("embedding", 0) == 0) worst = std::max(worst, c.max_residual);
        }
        for (double theta : {0.7, 2.3}) {
            if (!check_rotation(theta, tol).pass()) return false;
        }
        for (auto [n, k] : {std::pair{3, 1}, std::pair{4, 2}, std::pair{5, 2}}) {
            GeomReport rep = check_grassmann(n, k, false, tol);
            if (!rep.pass()) return false;
            if (!line_ok(rep, "eigenspace round trip")) return false;
        }
        // Spin cases, then Pin cases
        for (auto [n, k] : {std::pair{3, 1}, std::pair{4, 2}, std::pair{5, 1}, std::pair{5, 3},
                            std::pair{3, 2}, std::pair{4, 1}, std::pair{5, 2}}) {
            GeomReport rep = check_grassmann(n, k, true, tol);
            if (!rep.pass()) return false;
        }
        d = "max embedding residual " + sci(worst);
        return true;
    });

    criterion(9, "Spin/Pin structure: lift round trip, sign law, sphere agreement, quaternions", [&](std::string& d) {
        // projection(lift(g)) round trip, 100 samples per dimension
        for (int n = 2; n <= 6; ++n) {
            double worst = 0;
            for (int i = 0; i < 100; ++i) {
                SampleRng rng = SampleRng::for_sample(tol.seed + n, i);
                Matrix g = random_rotation(rng, n);
                if (n % 2 == 0 && i % 2 == 1) g.row(0) *= -1.0;
                VersorElement u = lift_orthogonal(g);
                worst = std::max(worst, (projection(u) - g).cwiseAbs().maxCoeff());
                VersorElement neg{-u.element, u.factor_count};
                worst = std::max(worst, (projection(neg) - g).cwiseAbs().maxCoeff());
            }
            if (worst > 1e-10) return false;
        }
        // orientation sign law in the Spin cases
        for (auto [n, k] : {std::pair{3, 1}, std::pair{4, 2}, std::pair{5, 1}, std::pair{5, 3}}) {
            double worst = 0;
            for (int i = 0; i < 50; ++i) {
                SampleRng rng = SampleRng::for_sample(tol.seed + 31 * n + k, i);
                SubspaceFrame v = random_frame(rng, n, k, true);
                VersorElement a = oriented_grassmann_embed(v);
                VersorElement b = oriented_grassmann_embed(reverse_orientation(v));
                worst = std::max(worst, a.element.max_abs_diff(-b.element));
            }
            if (worst > 1e-8) return false;
        }
        // spherical embedding at n = 2 equals the oriented Grassmannian at (3,1)
        {
            double worst = 0;
            for (int i = 0; i < 100; ++i) {
                SampleRng rng = SampleRng::for_sample(tol.seed + 400, i);
                Vector x = random_unit_vector(rng, 3);
                auto sph = std::get<VersorElement>(spherical_embed(x));
                VersorElement gr = oriented_grassmann_embed(make_frame(x.transpose(), true));
                worst = std::max(worst, sph.element.max_abs_diff(gr.element));
            }
            if (worst > 1e-8) return false;
        }
        // quaternion bridge multiplicativity
        {
            double worst = 0;
            for (int i = 0; i < 100; ++i) {
                SampleRng rng = SampleRng::for_sample(tol.seed + 500, i);
                CliffordElement a = CliffordElement::scalar(3, 1.0);
                CliffordElement b = CliffordElement::scalar(3, 1.0);
                for (int f = 0; f < 2; ++f) {
                    a = clifford_mul(CliffordElement::vector(random_unit_vector(rng, 3)), a);
                    b = clifford_mul(CliffordElement::vector(random_unit_vector(rng, 3)), b);
                }
                Quaternion lhs = spin3_quaternion_bridge(clifford_mul(a, b));
                Quaternion rhs = spin3_quaternion_bridge(a) * spin3_quaternion_bridge(b);
                worst = std::max(worst, lhs.dist(rhs));
            }
            if (worst > 1e-10) return false;
            d = "bridge residual " + sci(worst);
        }
        return true;
    });

    criterion(10, "theta = pi dichotomy: rejection plus the Spin path", [&](std::string& d) {
        Vector axis(3);
        axis << 0, 0, 1;
        bool rejected = false;
        try {
            theta_embed(axis, 3.14159265358979);
        } catch (const Error& e) {
            rejected = e.code() == Err::ThetaPi;
        }
        if (!rejected) return false;
        GeomReport rep = check_sphere(2, tol);
        if (!rep.pass()) return false;
        d = "ThetaPi raised; S^2 spin path passes";
        return true;
    });

    if (g_failures == 0) {
        std::printf("acceptance: all criteria passed\n");
        return 0;
    }
    std::printf("acceptance: %d criterion(s) failed\n", g_failures);
    return 1;
}
