#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "trilie/deformation.hpp"
#include "trilie/json_io.hpp"
#include "trilie/nr_bracket.hpp"

namespace trilie::cli {

/// Parsed command-line request. Paths stay empty when a flag was not given;
/// the degree bound must stay within the configured maximum.
struct Job {
    std::string command;
    std::string algebra;  // --algebra FILE
    std::string source;   // --source FILE
    std::string target;   // --target FILE
    std::string map;      // --map FILE
    std::string rep;      // --rep FILE
    std::string basis;    // --basis FILE
    std::string alpha;    // --alpha FILE
    bool adjoint = false;
    bool stability = false;
    int degree = 1;
    int max_degree = 2;
    int degree_cap = kDefaultMaxDegree;
    std::string format = "json";  // json | text
};

namespace detail {

inline Json error_json(const std::string& kind, const std::string& message) {
    Json j;
    j["error"] = Json{{"kind", kind}, {"message", message}};
    return j;
}

inline void emit(const Job& job, std::ostream& out, const Json& j, const std::string& text) {
    if (job.format == "text")
        out << text << "\n";
    else
        out << j.dump(2) << "\n";
}

inline std::string vec_text(const Vec& v) {
    std::string s = "[";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += ", ";
        s += v[i].str();
    }
    return s + "]";
}

struct MorphismInputs {
    ThreeLieAlgebra source;
    ThreeLieAlgebra target;
    LinearMap map;
};

inline MorphismInputs load_morphism_inputs(const Job& job) {
    if (job.source.empty() || job.target.empty() || job.map.empty())
        throw SchemaError("command requires --source, --target and --map", job.command);
    ThreeLieAlgebra a = parse_algebra(json_from_file(job.source), job.source);
    ThreeLieAlgebra b = parse_algebra(json_from_file(job.target), job.target);
    LinearMap f = parse_linear_map(json_from_file(job.map), job.map);
    if (f.source_dim != a.dim() || f.target_dim != b.dim())
        throw DimensionMismatch("map shape does not match the algebra pair");
    return {std::move(a), std::move(b), std::move(f)};
}

inline int require_morphism(const Job& job, std::ostream& out, const MorphismInputs& in) {
    MorphismReport rep = check_morphism(in.map, in.source, in.target);
    if (rep.is_morphism) return 0;
    for (const auto& d : rep.defects) {
        if (is_zero(d.value)) continue;
        Json j;
        j["error"] = Json{{"kind", "NotAMorphism"},
                          {"message", "map does not preserve the bracket"},
                          {"witness", Json{{"triple", Json::array({d.i + 1, d.j + 1, d.k + 1})},
                                           {"defect", vec_to_json(d.value)}}}};
        emit(job, out, j,
             "error: map is not a morphism, defect at (" + std::to_string(d.i + 1) + "," + std::to_string(d.j + 1) +
                 "," + std::to_string(d.k + 1) + ") = " + vec_text(d.value));
        return 2;
    }
    return 2;
}

inline long long count_nonzero(const Cochain& c) {
    long long n = 0;
    for (const auto& x : c.table())
        if (x != 0) ++n;
    return n;
}

inline int run_check_algebra(const Job& job, std::ostream& out) {
    if (job.algebra.empty()) throw SchemaError("check-algebra requires an algebra file", job.command);
    BracketTensor t = parse_bracket_tensor(json_from_file(job.algebra), job.algebra);
    FiReport r = check_fundamental_identity(t);
    Json j;
    j["command"] = "check-algebra";
    j["dim"] = t.dim();
    if (r.ok) {
        j["identity"] = "OK";
        j["tuples"] = r.tuples_checked;
        emit(job, out, j, "fundamental identity: OK (" + std::to_string(r.tuples_checked) + " tuples)");
        return 0;
    }
    j["identity"] = "FAIL";
    j["tuples"] = r.tuples_checked;
    j["witness"] = Json{{"tuple", Json::array({r.tuple[0], r.tuple[1], r.tuple[2], r.tuple[3], r.tuple[4]})},
                        {"residual", vec_to_json(r.residual)}};
    emit(job, out, j,
         "fundamental identity: FAIL at (" + std::to_string(r.tuple[0]) + "," + std::to_string(r.tuple[1]) + "," +
             std::to_string(r.tuple[2]) + "," + std::to_string(r.tuple[3]) + "," + std::to_string(r.tuple[4]) +
             "), residual " + vec_text(r.residual));
    return 2;
}

inline int run_check_morphism(const Job& job, std::ostream& out) {
    MorphismInputs in = load_morphism_inputs(job);
    MorphismReport rep = check_morphism(in.map, in.source, in.target);
    Json j;
    j["command"] = "check-morphism";
    j["is_morphism"] = rep.is_morphism;
    Json defects = Json::array();
    for (const auto& d : rep.defects) {
        if (is_zero(d.value)) continue;
        defects.push_back(Json{{"triple", Json::array({d.i + 1, d.j + 1, d.k + 1})}, {"defect", vec_to_json(d.value)}});
    }
    j["defects"] = std::move(defects);
    if (rep.is_morphism) {
        emit(job, out, j, "morphism check: OK");
        return 0;
    }
    emit(job, out, j, "morphism check: FAIL (" + std::to_string(j["defects"].size()) + " nonzero defects)");
    return 2;
}

inline int run_mc_residual(const Job& job, std::ostream& out) {
    Json j;
    j["command"] = "mc-residual";
    if (!job.algebra.empty()) {
        BracketTensor t = parse_bracket_tensor(json_from_file(job.algebra), job.algebra);
        Cochain r = structure_mc_residual(t);
        j["kind"] = "structure";
        j["nonzero_entries"] = count_nonzero(r);
        j["maurer_cartan"] = r.is_zero();
        emit(job, out, j,
             std::string("structure Maurer-Cartan residual: ") + (r.is_zero() ? "0" : "nonzero") + " (" +
                 std::to_string(count_nonzero(r)) + " nonzero entries)");
        return 0;
    }
    MorphismInputs in = load_morphism_inputs(job);
    Cochain r = morphism_mc_residual(in.map, in.source, in.target);
    j["kind"] = "morphism";
    j["nonzero_entries"] = count_nonzero(r);
    j["maurer_cartan"] = r.is_zero();
    emit(job, out, j,
         std::string("morphism Maurer-Cartan residual: ") + (r.is_zero() ? "0" : "nonzero") + " (" +
             std::to_string(count_nonzero(r)) + " nonzero entries)");
    return 0;
}

inline int run_cohomology_morphism(const Job& job, std::ostream& out) {
    MorphismInputs in = load_morphism_inputs(job);
    if (int rc = require_morphism(job, out, in)) return rc;
    MorphismComplex mc(in.source, in.target, in.map);
    Json reports = Json::array();
    std::string text;
    for (int n = 0; n <= job.max_degree; ++n) {
        CohomologyReport r = cohomology_report(mc, n, job.degree_cap);
        reports.push_back(report_to_json(r));
        text += "degree " + std::to_string(n) + ": dimC=" + std::to_string(r.dim_cochain) +
                " dimZ=" + std::to_string(r.dim_cocycle) + " dimB=" + std::to_string(r.dim_coboundary) +
                " dimH=" + std::to_string(r.dim_cohomology) + (n < job.max_degree ? "\n" : "");
    }
    Json j;
    j["command"] = "cohomology-morphism";
    j["reports"] = std::move(reports);
    emit(job, out, j, text);
    return 0;
}

inline int run_cohomology_rep(const Job& job, std::ostream& out) {
    if (job.algebra.empty()) throw SchemaError("cohomology-rep requires --algebra", job.command);
    ThreeLieAlgebra a = parse_algebra(json_from_file(job.algebra), job.algebra);
    Representation rho = job.adjoint ? adjoint_rep(a)
                                     : (job.rep.empty() ? throw SchemaError("cohomology-rep requires --rep or --adjoint",
                                                                            job.command)
                                                        : parse_representation(json_from_file(job.rep), a, job.rep));
    RepresentationComplex rc(a, std::move(rho));
    Json reports = Json::array();
    std::string text;
    for (int n = 1; n <= job.max_degree; ++n) {
        CohomologyReport r = cohomology_report(rc, n, job.degree_cap);
        reports.push_back(report_to_json(r));
        text += "degree " + std::to_string(n) + ": dimC=" + std::to_string(r.dim_cochain) +
                " dimZ=" + std::to_string(r.dim_cocycle) + " dimB=" + std::to_string(r.dim_coboundary) +
                " dimH=" + std::to_string(r.dim_cohomology) + (n < job.max_degree ? "\n" : "");
    }
    Json j;
    j["command"] = "cohomology-rep";
    j["reports"] = std::move(reports);
    emit(job, out, j, text);
    return 0;
}

inline int run_rigidity(const Job& job, std::ostream& out) {
    MorphismInputs in = load_morphism_inputs(job);
    if (int rc = require_morphism(job, out, in)) return rc;
    MorphismComplex mc(in.source, in.target, in.map);
    RigidityReport r = rigidity_verdict(mc, job.degree_cap);
    Json j;
    j["dimH1"] = r.h1.dim_cohomology;
    j["verdict"] = r.rigid ? "rigid" : "criterion inconclusive";
    emit(job, out, j,
         "dim H^1 = " + std::to_string(r.h1.dim_cohomology) + "; verdict: " +
             (r.rigid ? "rigid" : "criterion inconclusive"));
    return 0;
}

inline int run_stability(const Job& job, std::ostream& out) {
    MorphismInputs in = load_morphism_inputs(job);
    if (int rc = require_morphism(job, out, in)) return rc;
    MorphismComplex mc(in.source, in.target, in.map);
    StabilityReport r = stability_verdict(mc, job.degree_cap);
    Json j;
    j["dimH2"] = r.h2.dim_cohomology;
    j["dimZ1"] = r.h1.dim_cocycle;
    j["verdict"] = r.stable ? "stable" : "criterion inconclusive";
    emit(job, out, j,
         "dim H^2 = " + std::to_string(r.h2.dim_cohomology) + "; dim Z^1 = " + std::to_string(r.h1.dim_cocycle) +
             "; verdict: " + (r.stable ? "stable" : "criterion inconclusive"));
    return 0;
}

inline int run_subalgebra(const Job& job, std::ostream& out) {
    if (job.algebra.empty() || job.basis.empty())
        throw SchemaError("subalgebra requires --algebra and --basis", job.command);
    ThreeLieAlgebra a = parse_algebra(json_from_file(job.algebra), job.algebra);
    Subspace h = parse_subspace(json_from_file(job.basis), job.basis);
    if (h.ambient_dim() != a.dim()) throw DimensionMismatch("subspace ambient dimension does not match the algebra");
    ClosureReport cl = subspace_closure_check(a, h);
    Json j;
    j["command"] = "subalgebra";
    j["closed"] = cl.closed;
    if (!cl.closed) {
        j["witness"] = Json{{"triple", Json::array({cl.witness[0], cl.witness[1], cl.witness[2]})},
                            {"residual", vec_to_json(cl.residual)}};
        emit(job, out, j,
             "subalgebra check: FAIL, bracket of basis triple (" + std::to_string(cl.witness[0]) + "," +
                 std::to_string(cl.witness[1]) + "," + std::to_string(cl.witness[2]) + ") escapes, residual " +
                 vec_text(cl.residual) + " mod H");
        return 2;
    }
    std::string text = "subalgebra check: OK";
    if (job.stability) {
        StabilityReport r = subalgebra_stability_verdict(a, h, job.degree_cap);
        j["dimH2"] = r.h2.dim_cohomology;
        j["dimZ1"] = r.h1.dim_cocycle;
        j["verdict"] = r.stable ? "stable" : "criterion inconclusive";
        text += "; dim H^2 = " + std::to_string(r.h2.dim_cohomology) +
                "; dim Z^1 = " + std::to_string(r.h1.dim_cocycle) +
                "; verdict: " + (r.stable ? "stable" : "criterion inconclusive");
    }
    emit(job, out, j, text);
    return 0;
}

inline int run_graph_iso(const Job& job, std::ostream& out) {
    MorphismInputs in = load_morphism_inputs(job);
    if (int rc = require_morphism(job, out, in)) return rc;
    GraphCorrespondence gc = graph_correspondence(in.map, in.source, in.target, job.degree, job.degree_cap);
    Json j;
    j["command"] = "graph-iso";
    j["degree"] = job.degree;
    j["dimH_morphism"] = gc.morphism_side.dim_cohomology;
    j["dimH_subalgebra"] = gc.subalgebra_side.dim_cohomology;
    j["xi_bijective"] = gc.xi_bijective;
    j["intertwines"] = gc.intertwines;
    j["match"] = (gc.morphism_side.dim_cohomology == gc.subalgebra_side.dim_cohomology);
    emit(job, out, j,
         "graph correspondence at degree " + std::to_string(job.degree) + ": dim H(f) = " +
             std::to_string(gc.morphism_side.dim_cohomology) + ", dim H(G_f) = " +
             std::to_string(gc.subalgebra_side.dim_cohomology) + (gc.intertwines ? ", intertwines" : ", MISMATCH"));
    return 0;
}

inline int run_jet(const Job& job, std::ostream& out) {
    if (job.alpha.empty()) throw SchemaError("jet requires --alpha", job.command);
    Json j;
    j["command"] = "jet";
    JetReport rep;
    if (!job.map.empty()) {
        MorphismInputs in = load_morphism_inputs(job);
        LinearMap alpha = parse_linear_map(json_from_file(job.alpha), job.alpha);
        Jet1Map jet(in.map, std::move(alpha));
        rep = jet_morphism_residual(jet, in.source, in.target);
        j["kind"] = "morphism";
    } else {
        if (job.algebra.empty() || job.basis.empty())
            throw SchemaError("jet requires either --source/--target/--map or --algebra/--basis", job.command);
        ThreeLieAlgebra a = parse_algebra(json_from_file(job.algebra), job.algebra);
        Subspace h = parse_subspace(json_from_file(job.basis), job.basis);
        LinearMap alpha = parse_linear_map(json_from_file(job.alpha), job.alpha);
        Jet1Subspace jet(h, alpha.mat);
        rep = jet_subalgebra_check(jet, a);
        j["kind"] = "subalgebra";
    }
    j["flat"] = rep.flat;
    if (rep.flat) {
        emit(job, out, j, "first-order deformation: OK (velocity is a 1-cocycle)");
        return 0;
    }
    for (const auto& e : rep.entries) {
        if (is_zero(e.value)) continue;
        j["witness"] = Json{{"triple", Json::array({e.i + 1, e.j + 1, e.k + 1})}, {"residual", vec_to_json(e.value)}};
        emit(job, out, j,
             "first-order deformation: FAIL at (" + std::to_string(e.i + 1) + "," + std::to_string(e.j + 1) + "," +
                 std::to_string(e.k + 1) + "), residual " + vec_text(e.value));
        return 2;
    }
    return 2;
}

}  // namespace detail

/// Dispatches a parsed job. Exit code 0 on success, 2 on validation failure
/// (a machine-readable witness goes to the report stream), 1 on I/O, schema
/// or usage errors.
inline int run(const Job& job, std::ostream& out) {
    using namespace detail;
    try {
        if (job.max_degree > job.degree_cap || job.degree > job.degree_cap)
            throw DegreeOverflowGuard("requested degree exceeds the configured maximum of " +
                                          std::to_string(job.degree_cap),
                                      std::max(job.max_degree, job.degree), job.degree_cap);
        if (job.command == "check-algebra") return run_check_algebra(job, out);
        if (job.command == "check-morphism") return run_check_morphism(job, out);
        if (job.command == "mc-residual") return run_mc_residual(job, out);
        if (job.command == "cohomology-morphism") return run_cohomology_morphism(job, out);
        if (job.command == "cohomology-rep") return run_cohomology_rep(job, out);
        if (job.command == "rigidity") return run_rigidity(job, out);
        if (job.command == "stability") return run_stability(job, out);
        if (job.command == "subalgebra") return run_subalgebra(job, out);
        if (job.command == "graph-iso") return run_graph_iso(job, out);
        if (job.command == "jet") return run_jet(job, out);
        throw SchemaError("unknown command: " + job.command, job.command);
    } catch (const FundamentalIdentityViolation& e) {
        Json j = error_json("FundamentalIdentityViolation", e.what());
        j["error"]["witness"] =
            Json{{"tuple", Json::array({e.tuple[0], e.tuple[1], e.tuple[2], e.tuple[3], e.tuple[4]})},
                 {"residual", vec_to_json(e.residual)}};
        emit(job, out, j, std::string("error: ") + e.what());
        return 2;
    } catch (const RepresentationAxiomViolation& e) {
        Json j = error_json("RepresentationAxiomViolation", e.what());
        j["error"]["witness"] = Json{{"axiom", e.axiom},
                                     {"tuple", Json::array({e.tuple[0], e.tuple[1], e.tuple[2], e.tuple[3]})}};
        emit(job, out, j, std::string("error: ") + e.what());
        return 2;
    } catch (const NotASubalgebra& e) {
        Json j = error_json("NotASubalgebra", e.what());
        j["error"]["witness"] = Json{{"triple", Json::array({e.witness[0], e.witness[1], e.witness[2]})},
                                     {"residual", vec_to_json(e.residual)}};
        emit(job, out, j, std::string("error: ") + e.what());
        return 2;
    } catch (const NotFirstOrderDeformation& e) {
        Json j = error_json("NotFirstOrderDeformation", e.what());
        j["error"]["witness"] = Json{{"triple", Json::array({e.triple[0], e.triple[1], e.triple[2]})}};
        emit(job, out, j, std::string("error: ") + e.what());
        return 2;
    } catch (const BaseNotMorphism& e) {
        emit(job, out, error_json("BaseNotMorphism", e.what()), std::string("error: ") + e.what());
        return 2;
    } catch (const NotAMorphism& e) {
        emit(job, out, error_json("NotAMorphism", e.what()), std::string("error: ") + e.what());
        return 2;
    } catch (const DegreeOverflowGuard& e) {
        emit(job, out, error_json("DegreeOverflowGuard", e.what()), std::string("error: ") + e.what());
        return 1;
    } catch (const SchemaError& e) {
        Json j = error_json("SchemaError", e.what());
        j["error"]["location"] = e.location;
        emit(job, out, j, std::string("error: ") + e.what());
        return 1;
    } catch (const IndexOutOfRange& e) {
        emit(job, out, error_json("IndexOutOfRange", e.what()), std::string("error: ") + e.what());
        return 1;
    } catch (const DimensionMismatch& e) {
        emit(job, out, error_json("DimensionMismatch", e.what()), std::string("error: ") + e.what());
        return 1;
    } catch (const TrilieError& e) {
        emit(job, out, error_json("Error", e.what()), std::string("error: ") + e.what());
        return 1;
    }
}

}  // namespace trilie::cli
