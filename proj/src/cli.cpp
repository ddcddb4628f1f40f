#include "qembed/cli.hpp"

#include <fstream>
#include <iostream>

#include "qembed/json_io.hpp"

namespace qembed {

namespace {

void emit(const json& j, const CommandRequest& req, std::ostream& out) {
    std::string payload = req.format == "text" ? render_text(j) : j.dump(2) + "\n";
    if (req.out.empty()) {
        out << payload;
        return;
    }
    std::ofstream f(req.out);
    if (!f) fail(Err::BadInput, "cannot write " + req.out);
    f << payload;
}

GroupPtr need_group(const CommandRequest& req) {
    if (req.group_path.empty()) fail(Err::BadInput, "--group is required");
    return group_from_json(load_json_file(req.group_path));
}

GroupAutomorphism need_aut(const CommandRequest& req, const GroupPtr& g) {
    if (req.aut_path.empty()) fail(Err::BadInput, "--aut is required");
    return automorphism_from_json(load_json_file(req.aut_path), g);
}

int cmd_make(const CommandRequest& req, std::ostream& out) {
    if (req.kind == "dihedral") {
        if (req.dihedral_n < 1) fail(Err::BadInput, "dihedral needs a positive order argument");
        emit(quandle_to_json(*dihedral_quandle(req.dihedral_n)), req, out);
        return kOk;
    }
    if (req.kind == "conj" || req.kind == "core") {
        GroupPtr g = need_group(req);
        QuandlePtr q = req.kind == "conj" ? conj_quandle(g) : core_quandle(g);
        emit(quandle_to_json(*q), req, out);
        return kOk;
    }
    if (req.kind == "alex") {
        GroupPtr g = need_group(req);
        emit(quandle_to_json(*alexander_quandle(g, need_aut(req, g))), req, out);
        return kOk;
    }
    if (req.kind == "triplet") {
        GroupPtr g = need_group(req);
        if (req.subgroup_path.empty()) fail(Err::BadInput, "--subgroup is required");
        QuandleTriplet t{g, subgroup_from_json(load_json_file(req.subgroup_path), g),
                         need_aut(req, g)};
        t.validate();
        auto [q, cs] = triplet_quandle(t);
        emit(quandle_to_json(*q), req, out);
        return kOk;
    }
    if (req.kind == "bergman-ext") {
        emit(group_to_json(bergman_extension(need_group(req))), req, out);
        return kOk;
    }
    if (req.kind == "semidirect-z") {
        GroupPtr g = need_group(req);
        GroupAutomorphism sigma = need_aut(req, g);
        int m = automorphism_order(sigma) * req.modulus_factor;
        emit(group_to_json(semidirect_z(g, sigma, m)), req, out);
        return kOk;
    }
    fail(Err::BadInput, "unknown make kind \"" + req.kind + "\"");
}

int cmd_verify(const CommandRequest& req, std::ostream& out, std::ostream& err) {
    if (req.quandle_path.empty()) fail(Err::BadInput, "a quandle file is required");
    json j = load_json_file(req.quandle_path);
    auto table = j.at("table").get<std::vector<std::vector<int>>>();
    AxiomReport rep = check_quandle_axioms(table);
    emit(axiom_report_to_json(rep), req, out);
    if (!rep.valid()) {
        err << "not a quandle\n";
        return kInvalid;
    }
    return kOk;
}

int cmd_embed(const CommandRequest& req, std::ostream& out, std::ostream& err) {
    if (req.triplet_path.empty()) fail(Err::BadInput, "a triplet file is required");
    QuandleTriplet t = triplet_from_json(load_json_file(req.triplet_path));
    EmbeddingReport rep;
    if (req.mode == "inner")
        rep = embed_inner(t, req.witness);
    else if (req.mode == "semidirect")
        rep = embed_semidirect(t, req.modulus_factor);
    else if (req.mode == "auto")
        rep = embeddability_report(t);
    else
        fail(Err::BadInput, "unknown mode \"" + req.mode + "\"");
    emit(report_to_json(rep), req, out);
    if (rep.verdict != Verdict::Embedding) {
        err << "not an embedding: cosets " << rep.collision->first << " and "
            << rep.collision->second << " collide\n";
        return kNegative;
    }
    return kOk;
}

int cmd_joyce(const CommandRequest& req, std::ostream& out) {
    if (req.quandle_path.empty()) fail(Err::BadInput, "a quandle file is required");
    QuandlePtr x = quandle_from_json(load_json_file(req.quandle_path));
    auto [t, iso] = joyce_triplet(x, req.basepoint);
    json j;
    j["triplet"] = triplet_to_json(t);
    j["isomorphism"] = map_to_json(iso);
    emit(j, req, out);
    return kOk;
}

int cmd_bergman(const CommandRequest& req, std::ostream& out, std::ostream& err) {
    BergmanReport rep = bergman_embed(need_group(req));
    emit(bergman_to_json(rep), req, out);
    bool all = rep.fix_equals_diagonal && rep.core_iso_ok && rep.coincides_with_fb &&
               rep.embedding.verdict == Verdict::Embedding;
    if (!all) {
        err << "bergman coincidence failed\n";
        return kInternal; // the coincidence is a theorem; disagreement is a fault
    }
    return kOk;
}

int cmd_geom(const CommandRequest& req, std::ostream& out, std::ostream& err) {
    Tolerance tol{req.tol, req.seed, req.samples};
    GeomReport rep;
    if (req.kind == "sphere")
        rep = check_sphere(req.n, tol);
    else if (req.kind == "rotation")
        rep = check_rotation(req.theta, tol);
    else if (req.kind == "grassmann")
        rep = check_grassmann(req.n, req.k, false, tol);
    else if (req.kind == "oriented-grassmann")
        rep = check_grassmann(req.n, req.k, true, tol);
    else
        fail(Err::BadInput, "unknown geom family \"" + req.kind + "\"");
    emit(geom_report_to_json(rep), req, out);
    if (!rep.pass()) {
        err << "residuals exceed tolerance\n";
        return kNegative;
    }
    return kOk;
}

} // namespace

int run_command(const CommandRequest& req, std::ostream& out, std::ostream& err) {
    try {
        if (req.subcommand == "make") return cmd_make(req, out);
        if (req.subcommand == "verify") return cmd_verify(req, out, err);
        if (req.subcommand == "embed") return cmd_embed(req, out, err);
        if (req.subcommand == "joyce") return cmd_joyce(req, out);
        if (req.subcommand == "bergman") return cmd_bergman(req, out, err);
        if (req.subcommand == "geom") return cmd_geom(req, out, err);
        err << "unknown subcommand \"" << req.subcommand << "\"\n";
        return kInvalid;
    } catch (const Error& e) {
        err << e.what() << "\n";
        return e.code() == Err::InternalFault ? kInternal : kInvalid;
    } catch (const std::exception& e) {
        err << e.what() << "\n";
        return kInvalid;
    }
}

} // namespace qembed
