// Command-line front end: every pipeline stage behind a subcommand, JSON on
// stdout, exact scalar strings only.
//
// Exit codes: 0 success, 1 domain error, 2 usage or malformed input.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

#include "gl2/json_io.hpp"
#include "gl2/scalar_parse.hpp"
#include "gl2/selftest.hpp"

namespace {

using gl2::Json;

Json load_json_arg(const std::string& inline_text, const std::string& path) {
    std::string text = inline_text;
    if (!path.empty()) {
        std::ifstream in(path);
        if (!in) throw std::invalid_argument("cannot open '" + path + "'");
        text.assign(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
    }
    try {
        return Json::parse(text);
    } catch (const Json::parse_error& e) {
        throw std::invalid_argument(std::string("malformed JSON: ") + e.what());
    }
}

gl2::Gl2Matrix phi_from_arg(const std::string& text) {
    const Json j = load_json_arg(text, "");
    if (!j.is_array() || j.size() != 4)
        throw std::invalid_argument("--phi wants a JSON array of 4 scalar strings, row-major");
    std::array<gl2::GaussRational, 4> e;
    for (size_t i = 0; i < 4; ++i) e[i] = gl2::parse_gauss(j[i].get<std::string>());
    return gl2::Gl2Matrix(e[0], e[1], e[2], e[3]);
}

void emit(const Json& j, bool pretty) {
    if (pretty)
        std::cout << j.dump(2) << "\n";
    else
        std::cout << j.dump() << "\n";
}

int dispatch(int argc, char** argv) {
    CLI::App app{"Exact-arithmetic toolkit for GL(2)-structures: representation matrices, the "
                 "canonical complex structure on binary forms, connection normalization and "
                 "integrability analysis"};
    app.require_subcommand(1);
    app.fallthrough();
    bool pretty = false;
    app.add_flag("--pretty", pretty, "human-readable output");

    // rep
    auto* rep_cmd = app.add_subcommand("rep", "representation matrix of a 2x2 matrix on degree-k forms");
    int rep_k = 3;
    std::string rep_kind = "algebra", rep_phi = "[\"1\",\"0\",\"0\",\"1\"]";
    rep_cmd->add_option("--k", rep_k, "degree")->required();
    rep_cmd->add_option("--kind", rep_kind, "algebra | group")->check(CLI::IsMember({"algebra", "group"}));
    rep_cmd->add_option("--phi", rep_phi, "2x2 entries, row-major JSON array of scalar strings");

    // xi
    auto* xi_cmd = app.add_subcommand("xi", "(1,0)-form rows dual to the weight pairs");
    int xi_k = 3;
    xi_cmd->add_option("--k", xi_k, "degree")->required();

    // jk
    auto* jk_cmd = app.add_subcommand("jk", "canonical complex-structure matrix on degree-k forms");
    int jk_k = 3;
    jk_cmd->add_option("--k", jk_k, "degree")->required();

    // perp
    auto* perp_cmd = app.add_subcommand("perp", "test the four trace conditions on a matrix");
    int perp_k = 3;
    std::string perp_matrix, perp_file;
    perp_cmd->add_option("--k", perp_k, "degree")->required();
    perp_cmd->add_option("--matrix", perp_matrix, "inline JSON matrix (array of arrays of scalars)");
    perp_cmd->add_option("--matrix-file", perp_file, "path to a JSON matrix");

    // normalize
    auto* norm_cmd = app.add_subcommand("normalize", "solve the canonical-connection correction for a torsion");
    std::string norm_torsion, norm_file;
    norm_cmd->add_option("--torsion", norm_torsion, "inline torsion JSON");
    norm_cmd->add_option("--torsion-file", norm_file, "path to a torsion JSON file");

    // det
    auto* det_cmd = app.add_subcommand("det", "block determinants of the normalization system");
    std::string det_range = "3..9";
    det_cmd->add_option("--k-range", det_range, "single k or lo..hi");

    // bryant
    auto* bryant_cmd = app.add_subcommand("bryant", "build and verify the degree-3 torsion family");
    std::string bryant_tau;
    bryant_cmd->add_option("--tau", bryant_tau,
                           "JSON array of 8 scalar strings (omit for the symbolic check)");

    // analyze
    auto* an_cmd = app.add_subcommand("analyze", "full analysis of a coframe-presented structure");
    std::string an_file, an_points, an_builtin;
    an_cmd->add_option("coframe", an_file, "coframe JSON file");
    an_cmd->add_option("--builtin", an_builtin, "flat3|flat5|shear3 instead of a file");
    an_cmd->add_option("--points", an_points, "sample points 'a,b,..;c,d,..' (rationals)");

    // selftest
    app.add_subcommand("selftest", "run the full verification suite");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    if (rep_cmd->parsed()) {
        const gl2::Gl2Matrix phi = phi_from_arg(rep_phi);
        const auto m = rep_kind == "algebra" ? gl2::algebra_rep(rep_k, phi) : gl2::group_rep(rep_k, phi);
        emit(Json{{"k", rep_k}, {"kind", rep_kind}, {"matrix", gl2::matrix_to_json(m)}}, pretty);
        return 0;
    }
    if (xi_cmd->parsed()) {
        const gl2::XiBasis xb = gl2::xi_basis(xi_k);
        if (pretty) {
            for (int j = xb.pair_count() - 1; j >= 0; --j)
                std::cout << "xi^{" << xi_k << "," << j << "} = "
                          << gl2::xi_row_pretty(xb.rows[static_cast<size_t>(j)]) << "\n";
            return 0;
        }
        Json rows = Json::array();
        for (const auto& row : xb.rows) {
            Json r = Json::array();
            for (const auto& c : row) r.push_back(c.str());
            rows.push_back(std::move(r));
        }
        emit(Json{{"k", xi_k}, {"rows", rows}}, pretty);
        return 0;
    }
    if (jk_cmd->parsed()) {
        const auto j = gl2::jk_matrix(jk_k);
        Json rows = Json::array();
        for (size_t r = 0; r < j.m.rows(); ++r) {
            Json row = Json::array();
            for (size_t c = 0; c < j.m.cols(); ++c) row.push_back(j.m.at(r, c).str());
            rows.push_back(std::move(row));
        }
        emit(Json{{"k", jk_k}, {"weight_zero_annihilated", j.weight_zero_annihilated}, {"matrix", rows}},
             pretty);
        return 0;
    }
    if (perp_cmd->parsed()) {
        const auto m = gl2::matrix_from_json(load_json_arg(perp_matrix, perp_file));
        const gl2::PerpConditions perp(perp_k);
        Json vals = Json::array();
        for (int f = 0; f < 4; ++f) vals.push_back(perp.eval(f, m).str());
        emit(Json{{"k", perp_k}, {"perp", perp.all_zero(m)}, {"functionals", vals}}, pretty);
        return 0;
    }
    if (norm_cmd->parsed()) {
        const auto t = gl2::torsion_from_json(load_json_arg(norm_torsion, norm_file));
        const auto op = gl2::NormalizationOperator::for_degree(t.degree());
        const auto psi = op->solve(t);
        const auto corrected = gl2::apply_correction(t, psi);
        const gl2::PerpConditions perp(t.degree());
        bool ok = true;
        for (int j = 0; j <= t.degree(); ++j) ok = ok && perp.all_zero(corrected.contraction(j));
        emit(Json{{"degree", t.degree()},
                  {"psi", gl2::correction_to_json(psi)["psi"]},
                  {"corrected", gl2::torsion_to_json(corrected)},
                  {"residual_perp", ok}},
             pretty);
        return 0;
    }
    if (det_cmd->parsed()) {
        int lo = 0, hi = 0;
        const auto dots = det_range.find("..");
        if (dots == std::string::npos) {
            lo = hi = std::stoi(det_range);
        } else {
            lo = std::stoi(det_range.substr(0, dots));
            hi = std::stoi(det_range.substr(dots + 2));
        }
        if (lo < 1 || hi < lo) throw std::invalid_argument("--k-range wants lo..hi with 1 <= lo <= hi");
        Json table = Json::array();
        for (int k = lo; k <= hi; ++k) table.push_back(gl2::block_report_to_json(gl2::block_determinant(k)));
        emit(Json{{"table", table}}, pretty);
        return 0;
    }
    if (bryant_cmd->parsed()) {
        Json out;
        if (bryant_tau.empty()) {
            std::array<gl2::MultiPoly, 8> tau;
            for (int i = 0; i < 8; ++i) tau[static_cast<size_t>(i)] = gl2::MultiPoly::variable("t" + std::to_string(i));
            const auto t = gl2::bryant_torsion<gl2::MultiPoly>(tau);
            const gl2::PerpConditions perp(3);
            bool ok = true;
            for (int j = 0; j <= 3; ++j) ok = ok && perp.all_zero(t.contraction(j));
            const bool psi_zero = gl2::NormalizationOperator::for_degree(3)->solve(t).is_zero();
            Json comps = Json::array();
            for (const auto& [key, v] : t.components()) {
                const auto [r, a, b] = key;
                comps.push_back(Json{{"i", r}, {"j", a}, {"k", b}, {"value", v.str()}});
            }
            out = Json{{"symbolic", true},
                       {"components", comps},
                       {"perp_all_contractions", ok},
                       {"psi_zero", psi_zero}};
        } else {
            const Json tj = load_json_arg(bryant_tau, "");
            if (!tj.is_array() || tj.size() != 8)
                throw std::invalid_argument("--tau wants a JSON array of 8 scalar strings");
            std::array<gl2::GaussRational, 8> tau;
            for (size_t i = 0; i < 8; ++i) tau[i] = gl2::parse_gauss(tj[i].get<std::string>());
            const auto t = gl2::bryant_torsion<gl2::GaussRational>(tau);
            const gl2::PerpConditions perp(3);
            bool ok = true;
            for (int j = 0; j <= 3; ++j) ok = ok && perp.all_zero(t.contraction(j));
            const bool psi_zero = gl2::NormalizationOperator::for_degree(3)->solve(t).is_zero();
            out = Json{{"symbolic", false},
                       {"torsion", gl2::torsion_to_json(t)},
                       {"perp_all_contractions", ok},
                       {"psi_zero", psi_zero}};
        }
        emit(out, pretty);
        return 0;
    }
    if (an_cmd->parsed()) {
        std::optional<gl2::Gl2Structure> s;
        if (!an_builtin.empty()) {
            if (an_builtin == "flat3")
                s = gl2::flat_structure(3);
            else if (an_builtin == "flat5")
                s = gl2::flat_structure(5);
            else if (an_builtin == "shear3")
                s = gl2::shear_structure(3);
            else
                throw std::invalid_argument("--builtin wants flat3, flat5 or shear3");
        } else {
            if (an_file.empty()) throw std::invalid_argument("analyze wants a coframe file or --builtin");
            const auto cf = gl2::coframe_from_json(load_json_arg("", an_file));
            s = gl2::Gl2Structure(cf.size() - 1, cf);
        }
        const auto points = gl2::parse_points(an_points);
        const auto rep = gl2::integrability_report(*s, points);
        emit(gl2::analysis_report_to_json(rep), pretty);
        return 0;
    }
    // selftest
    return gl2::selftest::run_and_print() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return dispatch(argc, argv);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
