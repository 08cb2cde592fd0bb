#include "qre/ansatz.hpp"
#include "qre/braid.hpp"
#include "qre/error.hpp"
#include "qre/json_io.hpp"

#include "CLI11.hpp"

#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

using namespace qre;

namespace {

std::optional<Rat> eval_point() {
    const char* env = std::getenv("QRE_Q_EVAL");
    if (!env || !*env) return std::nullopt;
    const Rat q0 = rat_from_string(env);
    if (q0.is_zero()) throw Error("QRE_Q_EVAL must be a nonzero rational");
    return q0;
}

// Prints one line per residual; cross-checks numerically when QRE_Q_EVAL is
// set. Returns 0 when every identity holds, 1 otherwise.
int report(const std::vector<std::pair<std::string, Mat>>& items) {
    const std::optional<Rat> q0 = eval_point();
    bool all_ok = true;
    for (const auto& [name, diff] : items) {
        const Residual res = Residual::from_difference(diff);
        std::cout << name << ": " << (res.ok ? "ok" : "FAIL");
        if (res.witness) {
            std::cout << " at (" << res.witness->row << "," << res.witness->col
                      << ") = " << res.witness->value.to_string();
        }
        if (q0) {
            const bool numeric_zero = eval_mat(diff, *q0).is_zero();
            if (numeric_zero != res.ok) {
                throw Error("numeric evaluation disagrees with the symbolic verdict");
            }
            std::cout << " [numeric q=" << rat_to_string(*q0) << ": agree]";
        }
        std::cout << "\n";
        all_ok = all_ok && res.ok;
    }
    return all_ok ? 0 : 1;
}

void write_output(const std::string& path, const Json& j) {
    if (path == "-") {
        std::cout << dump_canonical(j);
    } else {
        save_json_file(path, j);
    }
}

// Accepts a family JSON or a bare Mat JSON (single rep labeled "f").
RMatrixFamily family_from_input(const std::string& path) {
    const Json j = load_json_file(path);
    if (j.is_object() && j.contains("reps")) return family_from_json(j);
    return RMatrixFamily::single("f", mat_from_json(j));
}

std::vector<std::pair<std::string, Mat>> data_residual_mats(const REData& data) {
    validate(data);
    std::vector<std::pair<std::string, Mat>> items;
    for (const auto& [id, k] : data.triples) {
        items.push_back({"re(" + id + ")", re_residual(data.family.r(id, id), k)});
    }
    for (const auto& [i, ki] : data.triples) {
        for (const auto& [j, kj] : data.triples) {
            if (i == j) continue;
            items.push_back({"compat(" + i + "," + j + ")", compat_residual(data, i, j)});
        }
    }
    return items;
}

std::vector<std::pair<std::string, Mat>> braid_items(const std::string& r_path,
                                                     const std::string& k_path, long strands,
                                                     const std::vector<std::string>& tau_paths) {
    const Mat r = mat_from_json(load_json_file(r_path));
    const REMatrix k = re_matrix_from_json(load_json_file(k_path));
    CylinderRep rep = build_cylinder_rep(r, k, strands);
    for (const auto& path : tau_paths) {
        add_boundary_op(rep, mat_from_json(load_json_file(path)));
    }
    std::vector<std::pair<std::string, Mat>> items;
    for (auto& nm : braid_relation_mats(rep)) items.push_back({nm.name, std::move(nm.diff)});
    return items;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact R-matrix and reflection-equation toolkit"};
    app.require_subcommand(1);

    // r-matrix
    std::string algebra = "gl";
    long rank = 2;
    std::string rmat_out = "-";
    auto* rmat = app.add_subcommand("r-matrix", "write a fundamental R-matrix");
    rmat->add_option("--algebra", algebra)->check(CLI::IsMember({"gl"}));
    rmat->add_option("--rank", rank, "rank n of gl(n)")->required();
    rmat->add_option("--out", rmat_out, "output path or -");

    // verify
    auto* verify = app.add_subcommand("verify", "check identities exactly");
    verify->require_subcommand(1);
    std::string v_r, v_k, v_family, v_data;
    std::vector<std::string> v_reps;
    long v_strands = 2;
    std::vector<std::string> v_taus;

    auto* v_ybe = verify->add_subcommand("ybe", "Yang-Baxter equation");
    v_ybe->add_option("--R", v_r, "R-matrix JSON");
    v_ybe->add_option("--family", v_family, "family JSON");
    v_ybe->add_option("--reps", v_reps, "three rep ids")->expected(3);

    auto* v_re = verify->add_subcommand("re", "reflection equation");
    v_re->add_option("--R", v_r)->required();
    v_re->add_option("--K", v_k, "RE matrix JSON")->required();

    auto* v_compat = verify->add_subcommand("compat", "pairwise compatibility");
    v_compat->add_option("--data", v_data, "RE data JSON")->required();
    v_compat->add_option("--reps", v_reps, "two rep ids")->expected(2)->required();

    auto* v_data_cmd = verify->add_subcommand("data", "full RE data check");
    v_data_cmd->add_option("--data", v_data)->required();

    auto* v_appendix = verify->add_subcommand("appendix", "three-leg fusion identities");
    v_appendix->add_option("--data", v_data)->required();
    v_appendix->add_option("--reps", v_reps, "three rep ids")->expected(3)->required();

    auto* v_braid = verify->add_subcommand("braid", "cylinder braid-group relations");
    v_braid->add_option("--R", v_r)->required();
    v_braid->add_option("--K", v_k)->required();
    v_braid->add_option("--strands", v_strands)->required();
    v_braid->add_option("--tau", v_taus, "extra boundary operator JSON (repeatable)");

    // fuse
    std::string f_family, f_ki, f_kj, f_out = "-";
    auto* fuse_cmd = app.add_subcommand("fuse", "fuse two RE matrices");
    fuse_cmd->add_option("--family", f_family, "family JSON or bare R-matrix JSON")->required();
    fuse_cmd->add_option("--ki", f_ki)->required();
    fuse_cmd->add_option("--kj", f_kj)->required();
    fuse_cmd->add_option("--out", f_out);

    // project
    std::string p_k, p_r, p_sector, p_out = "-";
    auto* project = app.add_subcommand("project", "restrict a fused solution to a Hecke sector");
    project->add_option("--K", p_k)->required();
    project->add_option("--R", p_r, "base R-matrix JSON")->required();
    project->add_option("--sector", p_sector)
        ->check(CLI::IsMember({"symmetric", "antisymmetric"}))
        ->required();
    project->add_option("--out", p_out);

    // q-solution
    std::string q_r, q_family, q_rep = "f", q_out = "-";
    auto* qsol = app.add_subcommand("q-solution", "RE matrix with operator coefficients");
    qsol->add_option("--R", q_r);
    qsol->add_option("--family", q_family);
    qsol->add_option("--rep", q_rep);
    qsol->add_option("--out", q_out);

    // solve
    std::string s_r, s_ansatz, s_out;
    auto* solve = app.add_subcommand("solve", "enumerate RE solutions of a given shape");
    solve->add_option("--R", s_r)->required();
    solve->add_option("--ansatz", s_ansatz)
        ->check(CLI::IsMember({"diagonal", "antidiagonal", "upper_triangular"}))
        ->required();
    solve->add_option("--out", s_out);

    // braid (same checks as verify braid)
    std::string b_r, b_k;
    long b_strands = 2;
    std::vector<std::string> b_taus;
    auto* braid_cmd = app.add_subcommand("braid", "cylinder braid-group relations");
    braid_cmd->add_option("--R", b_r)->required();
    braid_cmd->add_option("--K", b_k)->required();
    braid_cmd->add_option("--strands", b_strands)->required();
    braid_cmd->add_option("--tau", b_taus, "extra boundary operator JSON (repeatable)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (rmat->parsed()) {
            if (rank < 2) throw Error("gl rank must be at least 2");
            write_output(rmat_out, mat_to_json(gl_r_matrix(rank)));
            return 0;
        }
        if (v_ybe->parsed()) {
            RMatrixFamily fam;
            if (!v_family.empty()) {
                fam = family_from_input(v_family);
            } else if (!v_r.empty()) {
                fam = RMatrixFamily::single("f", mat_from_json(load_json_file(v_r)));
            } else {
                throw Error("verify ybe needs --R or --family");
            }
            std::vector<std::string> reps = v_reps;
            if (reps.empty()) {
                if (fam.reps().size() != 1) throw Error("--reps required for multi-rep families");
                reps.assign(3, fam.reps()[0].id);
            }
            const std::string name = "ybe(" + reps[0] + "," + reps[1] + "," + reps[2] + ")";
            return report({{name, ybe_residual(fam, reps[0], reps[1], reps[2])}});
        }
        if (v_re->parsed()) {
            const Mat r = mat_from_json(load_json_file(v_r));
            const REMatrix k = re_matrix_from_json(load_json_file(v_k));
            return report({{"re(" + k.rep + ")", re_residual(r, k)}});
        }
        if (v_compat->parsed()) {
            const REData data = re_data_from_json(load_json_file(v_data));
            const std::string name = "compat(" + v_reps[0] + "," + v_reps[1] + ")";
            return report({{name, compat_residual(data, v_reps[0], v_reps[1])}});
        }
        if (v_data_cmd->parsed()) {
            const REData data = re_data_from_json(load_json_file(v_data));
            return report(data_residual_mats(data));
        }
        if (v_appendix->parsed()) {
            const REData data = re_data_from_json(load_json_file(v_data));
            const auto [one, three] = appendix_residuals(data, v_reps[0], v_reps[1], v_reps[2]);
            const std::string tag = "(" + v_reps[0] + "," + v_reps[1] + "," + v_reps[2] + ")";
            return report({{"fusion-identity-1" + tag, one}, {"fusion-identity-3" + tag, three}});
        }
        if (v_braid->parsed()) {
            return report(braid_items(v_r, v_k, v_strands, v_taus));
        }
        if (braid_cmd->parsed()) {
            return report(braid_items(b_r, b_k, b_strands, b_taus));
        }
        if (fuse_cmd->parsed()) {
            const RMatrixFamily fam = family_from_input(f_family);
            const REMatrix ki = re_matrix_from_json(load_json_file(f_ki));
            const REMatrix kj = re_matrix_from_json(load_json_file(f_kj));
            if (ki.coeff_dim != kj.coeff_dim) {
                throw Error("coefficient dimension mismatch between --ki and --kj");
            }
            if (ki.rep == kj.rep && !(ki == kj)) {
                throw Error("two different RE matrices share the rep id " + ki.rep);
            }
            REData data;
            data.family = fam;
            data.triples[ki.rep] = ki;
            data.triples[kj.rep] = kj;
            validate(data);
            if (const int rc = report(data_residual_mats(data)); rc != 0) return rc;
            const REData fused = fuse(data, ki.rep, kj.rep);
            if (const int rc = report(data_residual_mats(fused)); rc != 0) return rc;
            write_output(f_out, re_data_to_json(fused));
            return 0;
        }
        if (project->parsed()) {
            const Mat r = mat_from_json(load_json_file(p_r));
            REMatrix k = re_matrix_from_json(load_json_file(p_k));
            const BraidOp s = braid_operator(r);
            const long d = r.row_legs()[0];
            if (k.k.row_legs()[0] != d * d) {
                throw Error("--K must live on the two-fold tensor rep of --R");
            }
            const HeckeProjectors proj = hecke_projectors(s);
            const Mat p = (p_sector == "symmetric" ? proj.plus : proj.minus)
                              .reshaped({d * d}, {d * d});
            const std::string m = fused_id("f", "f");
            const RMatrixFamily ext = extend_family(RMatrixFamily::single("f", r), "f", "f");
            k.rep = m;
            const std::string sub = p_sector == "symmetric" ? "sym" : "anti";
            const Restriction res = restrict_to_submodule(ext, k, p, sub);
            if (const int rc = report({{"re(" + sub + ")",
                                        re_residual(res.family.r(sub, sub), res.k0)}});
                rc != 0) {
                return rc;
            }
            RMatrixFamily out_fam;
            out_fam.add_rep({sub, res.family.rep(sub).dim});
            out_fam.set_r(sub, sub, res.family.r(sub, sub));
            REData out;
            out.family = std::move(out_fam);
            out.triples[sub] = res.k0;
            write_output(p_out, re_data_to_json(out));
            return 0;
        }
        if (qsol->parsed()) {
            RMatrixFamily fam;
            std::string rep = q_rep;
            if (!q_family.empty()) {
                fam = family_from_input(q_family);
            } else if (!q_r.empty()) {
                fam = RMatrixFamily::single("f", mat_from_json(load_json_file(q_r)));
                rep = "f";
            } else {
                throw Error("q-solution needs --R or --family");
            }
            const REMatrix k = q_solution(fam, rep);
            if (const int rc = report({{"re(" + rep + ")", re_residual(fam.r(rep, rep), k)}});
                rc != 0) {
                return rc;
            }
            write_output(q_out, re_matrix_to_json(k));
            return 0;
        }
        if (solve->parsed()) {
            const Mat r = mat_from_json(load_json_file(s_r));
            AnsatzKind kind = AnsatzKind::diagonal;
            if (s_ansatz == "antidiagonal") kind = AnsatzKind::antidiagonal;
            if (s_ansatz == "upper_triangular") kind = AnsatzKind::upper_triangular;
            const auto sols = solve_ansatz(r, kind);
            std::vector<std::pair<std::string, Mat>> checks;
            Json out = Json::array();
            for (std::size_t i = 0; i < sols.size(); ++i) {
                std::cout << "family " << (i + 1) << ": " << sols[i].family << "\n";
                checks.push_back({"re(representative " + std::to_string(i + 1) + ")",
                                  re_residual(r, sols[i].k)});
                Json item;
                item["family"] = sols[i].family;
                item["k"] = re_matrix_to_json(sols[i].k);
                out.push_back(std::move(item));
            }
            const int rc = report(checks);
            if (!s_out.empty()) write_output(s_out, out);
            return rc;
        }
        throw Error("no command");
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
