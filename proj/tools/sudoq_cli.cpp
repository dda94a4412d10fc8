// sudoq_cli.cpp - single-binary command-line surface over the sudoq library:
// construct grids / cubes / hypercubes, validate and classify them, solve
// partial grids by constraint propagation, run the seeded statistical
// audits, and export design-theoretic metrics.
//
// Exit codes: 0 success (for `validate`: valid; for `solve`: unique), 1
// failed check, 2 solver stalled, 3 unsolvable, 4 provably non-unique,
// 64 malformed input, 65 numeric/domain failure.
//
// Part of sudoq. License: MIT.

#include <cmath>
#include <cstdlib>
#include <iostream>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "sudoq/sudoq.hpp"

namespace {

using sudoq::ordered_json;

std::string read_input(const std::string& path) {
    if (path == "-") {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        return ss.str();
    }
    return sudoq::read_text_file(path);
}

void emit(const std::string& out_path, const std::string& text) {
    if (out_path.empty() || out_path == "-") {
        std::cout << text;
        return;
    }
    sudoq::write_text_file(out_path, text);
}

void emit_json(const std::string& out_path, const ordered_json& j) {
    emit(out_path, sudoq::dump_canonical(j));
}

ordered_json validation_json(const sudoq::ValidationReport& vr) {
    ordered_json j;
    j["valid"] = vr.valid;
    j["complete"] = vr.complete;
    j["worst_row_residual"] = vr.worst_row_residual;
    j["worst_col_residual"] = vr.worst_col_residual;
    j["worst_block_residual"] = vr.worst_block_residual;
    j["worst_residual"] = vr.worst_residual();
    j["violations"] = ordered_json::array();
    for (const auto& g : vr.violations) j["violations"].push_back(sudoq::to_string(g));
    return j;
}

ordered_json validation_json(const sudoq::HyperValidationReport& vr) {
    ordered_json j;
    j["valid"] = vr.valid;
    j["complete"] = vr.complete;
    j["worst_block_residual"] = vr.worst_block_residual;
    j["worst_axis_residuals"] = vr.worst_axis_residuals;
    j["worst_residual"] = vr.worst_residual();
    j["violations"] = ordered_json::array();
    for (const auto& g : vr.violations) j["violations"].push_back(sudoq::to_string(g));
    return j;
}

ordered_json cardinality_json(const sudoq::CardinalityReport& cr) {
    ordered_json j;
    j["cardinality"] = cr.cardinality;
    j["cells"] = cr.cluster_of_cell.size();
    j["cluster_of_cell"] = cr.cluster_of_cell;
    return j;
}

ordered_json angles_json(const std::vector<std::pair<double, int>>& angles) {
    ordered_json arr = ordered_json::array();
    for (const auto& [value, mult] : angles) {
        ordered_json e;
        e["value"] = value;
        e["multiplicity"] = mult;
        arr.push_back(std::move(e));
    }
    return arr;
}

sudoq::UnitaryFamily make_family(const std::string& kind, int n, std::uint64_t seed) {
    if (kind == "hw") return sudoq::hw_eigenbasis_family(n);
    if (kind == "identity") return sudoq::identity_family(n);
    if (kind == "haar") return sudoq::haar_family(n, seed);
    throw sudoq::numeric_error("unknown basis family kind: " + kind);
}

sudoq::DesignFamily parse_design(const std::string& name) {
    if (name == "sudoq") return sudoq::DesignFamily::SudoQ;
    if (name == "mub") return sudoq::DesignFamily::MUB;
    if (name == "sic") return sudoq::DesignFamily::SIC;
    throw sudoq::numeric_error("unknown design family: " + name);
}

std::vector<sudoq::Vec> load_vectors(const std::string& path) {
    const ordered_json j = sudoq::parse_json_text(read_input(path));
    if (sudoq::json_is_hypercube(j)) return sudoq::cell_vectors(sudoq::hypercube_from_json(j));
    return sudoq::cell_vectors(sudoq::grid_from_json(j));
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"quantum Sudoku designs: construct, validate, solve, and analyze"};
    app.require_subcommand(1);
    app.fallthrough();

    double tol_flag = -1.0;
    std::uint64_t seed = 1;
    app.add_option("--tol", tol_flag,
                   "override equality/orthonormality/solver tolerances (env fallback: SUDOQ_TOL)");
    app.add_option("--seed", seed, "seed for every randomized subcommand")->capture_default_str();

    const double half_pi = std::numbers::pi / 2.0;

    // construct --------------------------------------------------------------
    auto* construct = app.add_subcommand("construct", "generate a grid or hypercube as JSON");
    construct->require_subcommand(1);
    construct->fallthrough();
    std::string construct_out = "-";

    int cyc_n = 2;
    auto* c_cyclic = construct->add_subcommand("cyclic", "classical cyclic grid");
    c_cyclic->add_option("--n", cyc_n, "block size N")->capture_default_str();

    int fam_n = 2;
    std::string fam_bases = "haar";
    auto* c_families = construct->add_subcommand("families", "grid from two unitary families");
    c_families->add_option("--n", fam_n, "block size N")->capture_default_str();
    c_families->add_option("--bases", fam_bases, "hw | haar | identity")->capture_default_str();

    int hw_n = 3;
    auto* c_hw = construct->add_subcommand("hw", "shift-clock eigenbasis grid");
    c_hw->add_option("--n", hw_n, "block size N")->capture_default_str();

    sudoq::C16Params c16{half_pi, half_pi, std::numbers::pi, 0.0, 0.0};
    auto* c_c16 = construct->add_subcommand("param4x4-c16",
                                            "full-cardinality parametrized 4x4 solution");
    c_c16->add_option("--alpha", c16.alpha)->capture_default_str();
    c_c16->add_option("--gamma", c16.gamma)->capture_default_str();
    c_c16->add_option("--phi", c16.phi)->capture_default_str();
    c_c16->add_option("--varphi", c16.varphi)->capture_default_str();
    c_c16->add_option("--eta", c16.eta)->capture_default_str();

    sudoq::C8Params c8{1, half_pi, half_pi, 0.0, 0.0};
    auto* c_c8 = construct->add_subcommand("param4x4-c8",
                                           "half-cardinality parametrized 4x4 solution");
    c_c8->add_option("--family", c8.family, "family index 1..4")->capture_default_str();
    c_c8->add_option("--alpha", c8.alpha)->capture_default_str();
    c_c8->add_option("--beta", c8.beta)->capture_default_str();
    c_c8->add_option("--phi", c8.phi)->capture_default_str();
    c_c8->add_option("--varphi", c8.varphi)->capture_default_str();

    int cube_n = 2;
    std::string cube_variant = "standard";
    std::string cube_bases = "hw";
    auto* c_cube = construct->add_subcommand("cube", "three-dimensional design (D = 3)");
    c_cube->add_option("--n", cube_n, "side parameter N")->capture_default_str();
    c_cube->add_option("--variant", cube_variant, "standard | even-modified")
        ->capture_default_str();
    c_cube->add_option("--bases", cube_bases, "hw | haar | identity")->capture_default_str();

    int hyper_n = 2;
    int hyper_d = 2;
    std::string hyper_bases = "hw";
    auto* c_hyper = construct->add_subcommand("hypercube", "D-dimensional design");
    c_hyper->add_option("--n", hyper_n, "side parameter N")->capture_default_str();
    c_hyper->add_option("--dims", hyper_d, "number of axes D")->capture_default_str();
    c_hyper->add_option("--bases", hyper_bases, "hw | haar | identity")->capture_default_str();

    construct->add_option("--out", construct_out, "output path ('-' = stdout)")
        ->capture_default_str();

    // validate / cardinality / classify / solve / entropy ---------------------
    std::string validate_in;
    auto* v_cmd = app.add_subcommand("validate", "check orthonormality constraints; exit 0 iff valid");
    v_cmd->add_option("input", validate_in, "grid or hypercube JSON ('-' = stdin)")->required();

    std::string card_in;
    auto* card_cmd = app.add_subcommand("cardinality", "count cells distinct up to phase");
    card_cmd->add_option("input", card_in, "grid or hypercube JSON ('-' = stdin)")->required();

    std::string classify_in;
    auto* classify_cmd = app.add_subcommand("classify",
                                            "classical / apparently / genuinely quantum");
    classify_cmd->add_option("input", classify_in, "grid JSON ('-' = stdin)")->required();

    std::string solve_in;
    auto* solve_cmd = app.add_subcommand(
        "solve", "propagate forced cells; exit 0 unique, 2 stalled, 3 unsolvable, 4 non-unique");
    solve_cmd->add_option("input", solve_in, "grid JSON ('-' = stdin)")->required();

    std::string entropy_in;
    int sweep_points = 0;
    std::string entropy_out = "-";
    auto* entropy_cmd = app.add_subcommand("entropy", "Shannon entropy of cell amplitudes");
    entropy_cmd->add_option("input", entropy_in, "grid JSON ('-' = stdin)");
    entropy_cmd->add_option("--sweep", sweep_points,
                            "emit a CSV sweep over the two-angle family instead (points per axis)");
    entropy_cmd->add_option("--out", entropy_out, "output path ('-' = stdout)")
        ->capture_default_str();

    // audit -------------------------------------------------------------------
    auto* audit = app.add_subcommand("audit", "seeded statistical audits; exit 0 iff the audit passes");
    audit->require_subcommand(1);
    audit->fallthrough();
    int t2_draws = 100;
    auto* a_t2 = audit->add_subcommand("theorem2", "four clues determine the full solution");
    a_t2->add_option("--draws", t2_draws)->capture_default_str();

    int p5_patterns = 10, p5_restarts = 200;
    auto* a_p5 = audit->add_subcommand(
        "prop5", "classically unique patterns admit no distinct quantum completion");
    a_p5->add_option("--patterns", p5_patterns)->capture_default_str();
    a_p5->add_option("--restarts", p5_restarts)->capture_default_str();

    int t1_draws = 1000;
    auto* a_t1 = audit->add_subcommand("theorem1-sample",
                                       "observed 4x4 cardinalities lie in {4, 6, 8, 16}");
    a_t1->add_option("--draws", t1_draws)->capture_default_str();

    // analyze -----------------------------------------------------------------
    auto* analyze = app.add_subcommand("analyze", "design-theoretic metrics");
    analyze->require_subcommand(1);
    analyze->fallthrough();
    std::string analyze_out = "-";

    std::string welch_in;
    int welch_tmax = 6;
    auto* an_welch = analyze->add_subcommand("welch", "Welch averages and saturations");
    an_welch->add_option("input", welch_in, "grid or hypercube JSON ('-' = stdin)")->required();
    an_welch->add_option("--tmax", welch_tmax)->capture_default_str();

    std::string angles_in;
    double angle_gap = 1e-6;
    auto* an_angles = analyze->add_subcommand("angles", "clustered squared-overlap multiset");
    an_angles->add_option("input", angles_in, "grid or hypercube JSON ('-' = stdin)")->required();
    an_angles->add_option("--gap", angle_gap, "cluster width")->capture_default_str();

    std::vector<int> compare_ns{2, 3, 5};
    auto* an_compare = analyze->add_subcommand(
        "local-compare", "S_2 of grid designs vs local reference designs at d = N^2");
    an_compare->add_option("--n", compare_ns, "prime block sizes")
        ->delimiter(',')
        ->capture_default_str();

    std::vector<std::string> curve_designs{"sudoq", "mub", "sic"};
    std::vector<int> curve_ds{4, 9};
    int curve_tmax = 6;
    auto* an_curves = analyze->add_subcommand("curves", "W_t / S_t curves as CSV");
    an_curves->add_option("--designs", curve_designs, "sudoq,mub,sic")
        ->delimiter(',')
        ->capture_default_str();
    an_curves->add_option("--d", curve_ds, "dimensions")->delimiter(',')->capture_default_str();
    an_curves->add_option("--tmax", curve_tmax)->capture_default_str();

    int table_tmax = 3;
    auto* an_table = analyze->add_subcommand(
        "table1", "audit tabulated closed forms against direct summation");
    an_table->add_option("--tmax", table_tmax)->capture_default_str();

    analyze->add_option("--out", analyze_out, "output path ('-' = stdout)")
        ->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    }

    sudoq::Tolerances tols;
    if (tol_flag > 0.0) {
        tols = sudoq::Tolerances{tol_flag, tol_flag, tol_flag};
    } else if (const char* env = std::getenv("SUDOQ_TOL")) {
        try {
            const double t = std::stod(env);
            if (t > 0.0) tols = sudoq::Tolerances{t, t, t};
        } catch (const std::exception&) {
            std::cerr << "warning: ignoring malformed SUDOQ_TOL\n";
        }
    }

    try {
        tols.check();
        if (*construct) {
            if (*c_cyclic) {
                emit_json(construct_out, sudoq::to_json(sudoq::classical_cyclic_grid(cyc_n)));
            } else if (*c_families) {
                const auto us = make_family(fam_bases, fam_n, seed);
                const auto vs = make_family(fam_bases, fam_n, ~seed);
                emit_json(construct_out,
                          sudoq::to_json(sudoq::grid_from_unitary_families(us, vs, tols.orth_tol)));
            } else if (*c_hw) {
                emit_json(construct_out, sudoq::to_json(sudoq::hw_sudoq(hw_n)));
            } else if (*c_c16) {
                emit_json(construct_out, sudoq::to_json(sudoq::solution_c16(c16)));
            } else if (*c_c8) {
                emit_json(construct_out, sudoq::to_json(sudoq::solution_c8(c8)));
            } else if (*c_cube) {
                sudoq::CubeVariant variant = sudoq::CubeVariant::Standard;
                if (cube_variant == "even-modified") {
                    variant = sudoq::CubeVariant::EvenModified;
                } else if (cube_variant != "standard") {
                    throw sudoq::numeric_error("unknown cube variant: " + cube_variant);
                }
                const auto us = make_family(cube_bases, cube_n, seed);
                const auto vs = make_family(cube_bases, cube_n, seed + 0x9e3779b97f4a7c15ULL);
                const auto ws = make_family(cube_bases, cube_n, ~seed);
                emit_json(construct_out, sudoq::to_json(sudoq::cube_from_families(
                                             us, vs, ws, variant, tols.orth_tol)));
            } else if (*c_hyper) {
                std::vector<sudoq::UnitaryFamily> fams;
                for (int t = 0; t < hyper_d; ++t) {
                    fams.push_back(make_family(hyper_bases, hyper_n,
                                               seed + 0x9e3779b97f4a7c15ULL *
                                                          static_cast<std::uint64_t>(t + 1)));
                }
                emit_json(construct_out, sudoq::to_json(sudoq::hypercube_from_families(
                                             hyper_d, fams, tols.orth_tol)));
            }
            return 0;
        }
        if (*v_cmd) {
            const ordered_json j = sudoq::parse_json_text(read_input(validate_in));
            bool valid = false;
            if (sudoq::json_is_hypercube(j)) {
                const auto vr = sudoq::validate(sudoq::hypercube_from_json(j), tols.orth_tol);
                valid = vr.valid;
                emit_json("-", validation_json(vr));
            } else {
                const auto vr = sudoq::validate(sudoq::grid_from_json(j), tols.orth_tol);
                valid = vr.valid;
                emit_json("-", validation_json(vr));
            }
            return valid ? 0 : 1;
        }
        if (*card_cmd) {
            const ordered_json j = sudoq::parse_json_text(read_input(card_in));
            const sudoq::CardinalityReport cr =
                sudoq::json_is_hypercube(j)
                    ? sudoq::cardinality(sudoq::hypercube_from_json(j), tols.eq_tol)
                    : sudoq::cardinality(sudoq::grid_from_json(j), tols.eq_tol);
            emit_json("-", cardinality_json(cr));
            return 0;
        }
        if (*classify_cmd) {
            const auto g = sudoq::grid_from_json(sudoq::parse_json_text(read_input(classify_in)));
            ordered_json j;
            j["class"] = sudoq::to_string(sudoq::classify(g, tols));
            j["dim"] = g.dim();
            const auto cr = sudoq::cardinality(g, tols.eq_tol);
            j["cardinality"] = cr.cardinality;
            if (g.n() == 2) {
                j["anomaly"] = sudoq::classify_cardinality_4x4(g, tols).anomaly;
            } else {
                j["anomaly"] = nullptr;
            }
            emit_json("-", j);
            return 0;
        }
        if (*solve_cmd) {
            const auto g = sudoq::grid_from_json(sudoq::parse_json_text(read_input(solve_in)));
            const sudoq::SolveOutcome out = sudoq::solve_unique(g, tols);
            ordered_json j;
            j["status"] = sudoq::to_string(out.status);
            j["message"] = out.message;
            j["trace"] = ordered_json::array();
            int order = 0;
            for (const auto& step : out.trace) {
                ordered_json e;
                e["order"] = order++;
                e["row"] = step.row;
                e["col"] = step.col;
                j["trace"].push_back(std::move(e));
            }
            j["propagated"] = out.propagated ? sudoq::to_json(*out.propagated) : ordered_json();
            j["solution"] = out.solution ? sudoq::to_json(*out.solution) : ordered_json();
            j["witness"] = out.witness ? sudoq::to_json(*out.witness) : ordered_json();
            emit_json("-", j);
            switch (out.status) {
                case sudoq::SolveStatus::Unique: return 0;
                case sudoq::SolveStatus::Stalled: return 2;
                case sudoq::SolveStatus::Unsolvable: return 3;
                case sudoq::SolveStatus::NotUnique: return 4;
            }
            return 0;
        }
        if (*entropy_cmd) {
            if (sweep_points > 0) {
                if (sweep_points < 2) throw sudoq::numeric_error("entropy: --sweep needs >= 2 points");
                std::string csv = "p,q,S_closed,S_direct_total\n";
                for (int ip = 0; ip < sweep_points; ++ip) {
                    for (int iq = 0; iq < sweep_points; ++iq) {
                        const double p = static_cast<double>(ip) / (sweep_points - 1);
                        const double q = static_cast<double>(iq) / (sweep_points - 1);
                        const sudoq::C16Params params{2.0 * std::acos(std::sqrt(p)),
                                                      2.0 * std::acos(std::sqrt(q)), 0.0, 0.0,
                                                      0.0};
                        const auto report = sudoq::entropy(sudoq::solution_c16(params), params);
                        csv += sudoq::format_curve_number(p) + "," +
                               sudoq::format_curve_number(q) + "," +
                               sudoq::format_curve_number(report.closed_form) + "," +
                               sudoq::format_curve_number(report.total) + "\n";
                    }
                }
                emit(entropy_out, csv);
                return 0;
            }
            if (entropy_in.empty()) {
                throw sudoq::numeric_error("entropy: provide a grid or use --sweep");
            }
            const auto g = sudoq::grid_from_json(sudoq::parse_json_text(read_input(entropy_in)));
            const sudoq::EntropyReport report = sudoq::entropy(g);
            ordered_json j;
            j["per_cell"] = ordered_json::array();
            for (int r = 0; r < g.dim(); ++r) {
                ordered_json row = ordered_json::array();
                for (int c = 0; c < g.dim(); ++c) {
                    row.push_back(report.per_cell[static_cast<std::size_t>(r * g.dim() + c)]);
                }
                j["per_cell"].push_back(std::move(row));
            }
            j["total"] = report.total;
            j["closed_form"] =
                std::isnan(report.closed_form) ? ordered_json() : ordered_json(report.closed_form);
            emit_json(entropy_out, j);
            return 0;
        }
        if (*audit) {
            if (*a_t2) {
                const auto res = sudoq::audit_four_clue_uniqueness(t2_draws, seed, tols);
                ordered_json j;
                j["draws"] = res.draws;
                j["unique"] = res.unique;
                j["min_overlap"] = res.min_overlap;
                j["pass"] = res.pass;
                emit_json("-", j);
                return res.pass ? 0 : 1;
            }
            if (*a_p5) {
                const auto res = sudoq::audit_classical_unique_no_alternative(
                    p5_patterns, p5_restarts, seed, tols);
                ordered_json j;
                j["patterns"] = ordered_json::array();
                for (const auto& pat : res.patterns) {
                    ordered_json e;
                    e["clues"] = pat.clues;
                    e["witness_found"] = pat.witness_found;
                    j["patterns"].push_back(std::move(e));
                }
                j["two_rows_witness_found"] = res.two_rows_witness_found;
                j["pass"] = res.pass;
                emit_json("-", j);
                return res.pass ? 0 : 1;
            }
            if (*a_t1) {
                const auto res = sudoq::audit_family_cardinalities(t1_draws, seed, tols);
                ordered_json j;
                j["draws"] = res.draws;
                j["counts"] = ordered_json::object();
                for (const auto& [card, count] : res.counts) {
                    j["counts"][std::to_string(card)] = count;
                }
                j["anomalies"] = res.anomalies;
                j["pass"] = res.pass;
                emit_json("-", j);
                return res.pass ? 0 : 1;
            }
        }
        if (*analyze) {
            if (*an_welch) {
                const auto metrics =
                    sudoq::design_metrics(load_vectors(welch_in), welch_tmax, tols.eq_tol);
                ordered_json j;
                j["d"] = metrics.d;
                j["count"] = metrics.count;
                j["w"] = metrics.w;
                j["s"] = metrics.s;
                j["t_design_max"] = metrics.t_design_max;
                j["angles"] = angles_json(metrics.angle_multiset);
                emit_json(analyze_out, j);
                return 0;
            }
            if (*an_angles) {
                emit_json(analyze_out, angles_json(sudoq::angle_set(load_vectors(angles_in),
                                                                    angle_gap)));
                return 0;
            }
            if (*an_compare) {
                ordered_json arr = ordered_json::array();
                for (int n : compare_ns) {
                    const auto row = sudoq::local_design_comparison(n);
                    ordered_json e;
                    e["n"] = row.n;
                    e["d"] = row.d;
                    e["s2_grid"] = row.s2_grid;
                    e["s2_local_mub"] = row.s2_local_mub;
                    e["s2_basis"] = row.s2_basis;
                    e["grid_leads"] = row.grid_leads;
                    arr.push_back(std::move(e));
                }
                emit_json(analyze_out, arr);
                return 0;
            }
            if (*an_curves) {
                std::vector<sudoq::DesignFamily> families;
                for (const auto& name : curve_designs) families.push_back(parse_design(name));
                emit(analyze_out,
                     sudoq::curves_csv(sudoq::welch_curves(families, curve_ds, curve_tmax)));
                return 0;
            }
            if (*an_table) {
                std::string csv = "design,d,t,tabulated,direct,match\n";
                for (const auto& row : sudoq::audit_tabulated_wt(table_tmax, tols.eq_tol)) {
                    csv += std::string(sudoq::to_string(row.family)) + "," +
                           std::to_string(row.d) + "," + std::to_string(row.t) + "," +
                           sudoq::format_curve_number(row.tabulated) + ",";
                    csv += row.has_direct ? sudoq::format_curve_number(row.direct) : "";
                    csv += ",";
                    csv += row.has_direct ? (row.match ? "yes" : "NO") : "n/a";
                    csv += "\n";
                }
                emit(analyze_out, csv);
                return 0;
            }
        }
        std::cerr << "error: no subcommand\n";
        return 1;
    } catch (const sudoq::format_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 64;
    } catch (const sudoq::numeric_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 65;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 70;
    }
    return 0;
}
