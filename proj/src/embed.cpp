#include "qembed/embed.hpp"

#include <algorithm>

namespace qembed {

namespace {

// Shared verification tail: homomorphism, collision scan, criterion
// equivalence. The homomorphism identity and the equivalence are theorems;
// a failure is an internal fault, never a property of the input.
void finish_report(EmbeddingReport& rep) {
    HomomorphismCheck hom = is_homomorphism(rep.map);
    require_internal(hom.ok, "coset map is not a quandle homomorphism");

    for (int i = 0; i < rep.source_quandle->order() && !rep.collision; ++i)
        for (int j = i + 1; j < rep.source_quandle->order(); ++j)
            if (rep.map.image[i] == rep.map.image[j]) {
                rep.collision = std::pair{i, j};
                break;
            }

    Subgroup fix = fix_subgroup(rep.triplet.aut);
    rep.fix_equals_h = fix.members == rep.triplet.subgroup.members;
    bool injective = !rep.collision.has_value();
    require_internal(injective == rep.fix_equals_h,
                     "injectivity does not match the Fix(sigma) = H criterion");
    rep.verdict = injective ? Verdict::Embedding : Verdict::HomomorphismOnly;
}

} // namespace

EmbeddingReport embed_inner(const QuandleTriplet& t, std::optional<int> q) {
    t.validate();
    const FiniteGroup& g = *t.group;

    int witness;
    if (q) {
        if (*q < 0 || *q >= g.order()) fail(Err::BadInput, "witness index out of range");
        for (int x = 0; x < g.order(); ++x)
            if (g.conj(x, *q) != t.aut.image[x])
                fail(Err::WitnessMismatch,
                     "Ad(q) differs from sigma at element " + std::to_string(x));
        witness = *q;
    } else {
        std::optional<int> w = inner_witness(t.aut);
        if (!w) fail(Err::NotInner, "sigma is not an inner automorphism");
        witness = *w;
    }

    EmbeddingReport rep;
    rep.triplet = t;
    rep.target_group = t.group;
    rep.witness_q = witness;
    std::tie(rep.source_quandle, rep.cosets) = triplet_quandle(t);

    QuandlePtr target = conj_quandle(t.group);
    rep.map = QuandleMap{rep.source_quandle, target, std::vector<int>(rep.cosets.count())};
    for (int c = 0; c < rep.cosets.count(); ++c)
        rep.map.image[c] = g.conj(witness, rep.cosets.reps[c]);

    // well-definedness across representatives
    for (int a = 0; a < g.order(); ++a)
        require_internal(g.conj(witness, a) == rep.map.image[rep.cosets.coset_of[a]],
                         "inner map depends on the coset representative");

    finish_report(rep);
    return rep;
}

EmbeddingReport embed_semidirect(const QuandleTriplet& t, int lcm_factor) {
    t.validate();
    if (lcm_factor <= 0) fail(Err::BadModulus, "lcm factor must be positive");
    const FiniteGroup& g = *t.group;
    const int m = automorphism_order(t.aut) * lcm_factor;

    EmbeddingReport rep;
    rep.triplet = t;
    rep.modulus = m;
    rep.target_group = semidirect_z(t.group, t.aut, m);
    std::tie(rep.source_quandle, rep.cosets) = triplet_quandle(t);

    const FiniteGroup& tg = *rep.target_group;
    const int t1 = 1 % m;
    const int e1 = semidirect_index(g, g.identity(), t1);
    auto iota = [&](int a) {
        int a1 = semidirect_index(g, a, t1);
        return tg.mul(tg.mul(tg.inv(a1), e1), a1);
    };

    QuandlePtr target = conj_quandle(rep.target_group);
    rep.map = QuandleMap{rep.source_quandle, target, std::vector<int>(rep.cosets.count())};
    for (int c = 0; c < rep.cosets.count(); ++c) rep.map.image[c] = iota(rep.cosets.reps[c]);

    for (int a = 0; a < g.order(); ++a) {
        require_internal(iota(a) == rep.map.image[rep.cosets.coset_of[a]],
                         "semidirect map depends on the coset representative");
        // first-coordinate law: (g,1)^{-1}(e,1)(g,1) = (sigma(g^{-1}) g, 1)
        require_internal(iota(a) == semidirect_index(g, g.mul(t.aut.image[g.inv(a)], a), t1),
                         "semidirect image violates the first-coordinate law");
    }

    finish_report(rep);

    // When sigma is inner both routes exist; cross-check through the factor map.
    if (lcm_factor == 1) {
        if (std::optional<int> w = inner_witness(t.aut)) {
            FactorMap phi = factor_map(t.group, t.aut, *w);
            EmbeddingReport inner = embed_inner(t, *w);
            if (rep.fix_equals_h)
                for (int c = 0; c < rep.cosets.count(); ++c)
                    require_internal(phi.map.image[inner.map.image[c]] == rep.map.image[c],
                                     "factor map does not factor the semidirect embedding");
        }
    }
    return rep;
}

FactorMap factor_map(const GroupPtr& g, const GroupAutomorphism& sigma, int q) {
    sigma.validate();
    if (q < 0 || q >= g->order()) fail(Err::BadInput, "witness index out of range");
    for (int x = 0; x < g->order(); ++x)
        if (g->conj(x, q) != sigma.image[x])
            fail(Err::WitnessMismatch, "Ad(q) differs from sigma at element " + std::to_string(x));

    const int m = automorphism_order(sigma);
    FactorMap out;
    out.modulus = m;
    out.target_group = semidirect_z(g, sigma, m);
    const int t1 = 1 % m;

    QuandlePtr source = conj_quandle(g);
    QuandlePtr target = conj_quandle(out.target_group);
    out.map = QuandleMap{source, target, std::vector<int>(g->order())};
    for (int x = 0; x < g->order(); ++x)
        out.map.image[x] = semidirect_index(*g, g->mul(g->inv(q), x), t1);

    EmbeddingCheck check = is_embedding(out.map);
    require_internal(check.ok, "factor map is not an injective quandle homomorphism");
    return out;
}

BergmanReport bergman_embed(const GroupPtr& g) {
    BergmanReport rep;
    rep.extension = bergman_extension(g);
    const FiniteGroup& ext = *rep.extension;
    const int n = g->order();

    GroupAutomorphism sw{rep.extension, std::vector<int>(ext.order())};
    for (int idx = 0; idx < ext.order(); ++idx) {
        BergmanCoords c = bergman_coords(*g, idx);
        sw.image[idx] = bergman_index(*g, c.h, c.g, c.a);
    }
    sw.validate();

    rep.diagonal = Subgroup{rep.extension, {}};
    for (int idx = 0; idx < ext.order(); ++idx) {
        BergmanCoords c = bergman_coords(*g, idx);
        if (c.g == c.h) rep.diagonal.members.push_back(idx);
    }
    std::sort(rep.diagonal.members.begin(), rep.diagonal.members.end());

    Subgroup fix = fix_subgroup(sw);
    rep.fix_equals_diagonal = fix.members == rep.diagonal.members;
    require_internal(rep.fix_equals_diagonal, "Fix of the switching automorphism is not the diagonal");

    const int q = bergman_index(*g, g->identity(), g->identity(), -1);
    QuandleTriplet t{rep.extension, rep.diagonal, sw};
    rep.embedding = embed_inner(t, q);

    // g -> Delta(g,e,1) is a quandle isomorphism Core(G) -> Q(G~, Delta, switch)
    QuandlePtr core = core_quandle(g);
    QuandleMap beta{core, rep.embedding.source_quandle, std::vector<int>(n)};
    for (int x = 0; x < n; ++x)
        beta.image[x] = rep.embedding.cosets.coset_of[bergman_index(*g, x, g->identity(), 1)];
    EmbeddingCheck beta_check = is_embedding(beta);
    rep.core_iso_ok = beta_check.ok && core->order() == rep.embedding.source_quandle->order();

    // iota(Delta (g,e,1)) = (g, g^{-1}, -1) = f_B(g)
    rep.fb_image.resize(n);
    rep.coincides_with_fb = true;
    for (int x = 0; x < n; ++x) {
        rep.fb_image[x] = bergman_index(*g, x, g->inv(x), -1);
        if (rep.embedding.map.image[beta.image[x]] != rep.fb_image[x]) rep.coincides_with_fb = false;
    }
    return rep;
}

EmbeddingReport embeddability_report(const QuandleTriplet& t) {
    t.validate();
    if (inner_witness(t.aut)) return embed_inner(t);
    return embed_semidirect(t);
}

} // namespace qembed
