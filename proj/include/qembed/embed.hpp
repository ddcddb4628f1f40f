#pragma once

#include <optional>
#include <utility>

#include "qembed/quandle.hpp"

namespace qembed {

enum class Verdict { Embedding, HomomorphismOnly };

inline const char* verdict_name(Verdict v) {
    return v == Verdict::Embedding ? "Embedding" : "HomomorphismOnly";
}

/// Result of mapping a triplet quandle into the conjugation quandle of a
/// target group. The map is always a homomorphism; it is injective exactly
/// when Fix(sigma) = H, and both facts are re-verified exhaustively.
struct EmbeddingReport {
    QuandleTriplet triplet;
    GroupPtr target_group;
    QuandlePtr source_quandle; // quandle on H\G
    CosetSpace cosets;
    QuandleMap map; // source_quandle -> conj_quandle(target_group)
    bool fix_equals_h = false;
    Verdict verdict = Verdict::HomomorphismOnly;
    std::optional<std::pair<int, int>> collision; // least colliding coset pair
    std::optional<int> witness_q;
    std::optional<int> modulus; // semidirect target only
};

/// Hg -> g^{-1} q g into Conj(G). sigma must be inner; a given q must
/// realize it.
EmbeddingReport embed_inner(const QuandleTriplet& t, std::optional<int> q = std::nullopt);

/// Hg -> (g,1)^{-1} (e,1) (g,1) into Conj(G x| Z_m), m = ord(sigma) *
/// lcm_factor. Works for non-inner sigma. When sigma happens to be inner the
/// inner route is cross-checked through the factor map.
EmbeddingReport embed_semidirect(const QuandleTriplet& t, int lcm_factor = 1);

struct FactorMap {
    QuandleMap map; // Conj(G) -> Conj(G x| Z_m)
    GroupPtr target_group;
    int modulus;
};

/// g -> (q^{-1} g, 1), an injective quandle homomorphism
/// Conj(G) -> Conj(G x| Z_m) for m = ord(sigma).
FactorMap factor_map(const GroupPtr& g, const GroupAutomorphism& sigma, int q);

struct BergmanReport {
    EmbeddingReport embedding;     // on (G~, Delta, switch) with q = (e,e,-1)
    GroupPtr extension;            // G~ = (G x G) x| {+-1}
    Subgroup diagonal;             // Delta = {(g,g,a)}
    bool fix_equals_diagonal = false;
    bool core_iso_ok = false;      // g -> Delta(g,e,1) is an isomorphism Core(G) -> Q(...)
    bool coincides_with_fb = false;
    std::vector<int> fb_image;     // f_B(g) = (g, g^{-1}, -1) as indices in G~
};

/// Builds the switching triplet for Core(G), embeds with witness (e,e,-1)
/// and checks pointwise agreement with f_B(g) = (g, g^{-1}, -1).
BergmanReport bergman_embed(const GroupPtr& g);

/// Dispatcher: inner route when an inner witness exists, semidirect otherwise.
EmbeddingReport embeddability_report(const QuandleTriplet& t);

} // namespace qembed
