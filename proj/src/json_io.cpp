#include "gl2/json_io.hpp"

#include <sstream>

#include "gl2/scalar_parse.hpp"

namespace gl2 {

namespace {

[[noreturn]] void bad(const std::string& what) { throw std::invalid_argument("json: " + what); }

std::string ratfunc_str(const RatFunc& f) { return f.str(); }

}  // namespace

Json matrix_to_json(const Matrix<GaussRational>& m) {
    Json rows = Json::array();
    for (size_t r = 0; r < m.rows(); ++r) {
        Json row = Json::array();
        for (size_t c = 0; c < m.cols(); ++c) row.push_back(m.at(r, c).str());
        rows.push_back(std::move(row));
    }
    return rows;
}

Matrix<GaussRational> matrix_from_json(const Json& j) {
    if (!j.is_array() || j.empty()) bad("matrix must be a nonempty array of rows");
    const size_t rows = j.size();
    if (!j[0].is_array() || j[0].empty()) bad("matrix rows must be nonempty arrays");
    const size_t cols = j[0].size();
    Matrix<GaussRational> m(rows, cols);
    for (size_t r = 0; r < rows; ++r) {
        if (!j[r].is_array() || j[r].size() != cols) bad("ragged matrix rows");
        for (size_t c = 0; c < cols; ++c) {
            if (!j[r][c].is_string()) bad("matrix entries must be scalar strings");
            m.at(r, c) = parse_gauss(j[r][c].get<std::string>());
        }
    }
    return m;
}

Json binary_form_to_json(const BinaryForm& f) {
    Json coeffs = Json::array();
    for (const auto& c : f.coeffs()) coeffs.push_back(c.str());
    return Json{{"degree", f.degree()}, {"coeffs", coeffs}};
}

BinaryForm binary_form_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("degree") || !j.contains("coeffs"))
        bad("binary form needs degree and coeffs");
    const int k = j["degree"].get<int>();
    const Json& arr = j["coeffs"];
    if (!arr.is_array() || static_cast<int>(arr.size()) != k + 1)
        bad("binary form needs degree+1 coefficients");
    std::vector<GaussRational> coeffs;
    for (const auto& e : arr) {
        if (!e.is_string()) bad("binary form coefficients must be strings");
        coeffs.push_back(parse_gauss(e.get<std::string>()));
    }
    return BinaryForm(k, std::move(coeffs));
}

Json torsion_to_json(const TorsionTensor<GaussRational>& t) {
    Json comps = Json::array();
    for (const auto& [key, v] : t.components()) {
        const auto [r, a, b] = key;
        comps.push_back(Json{{"i", r}, {"j", a}, {"k", b}, {"value", v.str()}});
    }
    return Json{{"degree", t.degree()}, {"components", comps}};
}

TorsionTensor<GaussRational> torsion_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("degree")) bad("torsion needs a degree");
    TorsionTensor<GaussRational> t(j["degree"].get<int>());
    if (!j.contains("components")) return t;
    if (!j["components"].is_array()) bad("torsion components must be an array");
    for (const auto& e : j["components"]) {
        if (!e.is_object() || !e.contains("i") || !e.contains("j") || !e.contains("k") ||
            !e.contains("value"))
            bad("torsion component needs i, j, k, value");
        t.add(e["i"].get<int>(), e["j"].get<int>(), e["k"].get<int>(),
              parse_gauss(e["value"].get<std::string>()));
    }
    return t;
}

namespace {
const char* kSlotNames[2][2] = {{"1_1", "2_1"}, {"1_2", "2_2"}};  // [row][col] -> "a_b"
}

Json correction_to_json(const ConnectionCorrection<GaussRational>& psi) {
    Json slots = Json::object();
    for (int r = 0; r < 2; ++r)
        for (int c = 0; c < 2; ++c) {
            Json arr = Json::array();
            for (const auto& v : psi.slot[static_cast<size_t>(r)][static_cast<size_t>(c)])
                arr.push_back(v.str());
            slots[kSlotNames[r][c]] = std::move(arr);
        }
    return Json{{"degree", psi.k}, {"psi", slots}};
}

ConnectionCorrection<GaussRational> correction_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("degree") || !j.contains("psi"))
        bad("correction needs degree and psi");
    ConnectionCorrection<GaussRational> psi(j["degree"].get<int>());
    for (int r = 0; r < 2; ++r)
        for (int c = 0; c < 2; ++c) {
            const Json& arr = j["psi"][kSlotNames[r][c]];
            if (!arr.is_array() || static_cast<int>(arr.size()) != psi.k + 1)
                bad("correction slot arrays need degree+1 entries");
            for (int m = 0; m <= psi.k; ++m)
                psi.slot[static_cast<size_t>(r)][static_cast<size_t>(c)][static_cast<size_t>(m)] =
                    parse_gauss(arr[static_cast<size_t>(m)].get<std::string>());
        }
    return psi;
}

Json coframe_to_json(const Coframe& cf) {
    Json vars = Json::array();
    for (const auto& v : cf.patch().vars()) vars.push_back(v);
    Json forms = Json::array();
    for (int i = 0; i < cf.size(); ++i) {
        Json terms = Json::array();
        for (const auto& [mask, coeff] : cf.form(i).components()) {
            int d = 0;
            for (int b = 0; b < 32; ++b)
                if (mask & (DForm::Mask{1} << b)) d = b;
            terms.push_back(Json{{"coeff", ratfunc_str(coeff)}, {"d", d}});
        }
        forms.push_back(std::move(terms));
    }
    return Json{{"vars", vars}, {"forms", forms}};
}

Coframe coframe_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("vars") || !j.contains("forms"))
        bad("coframe needs vars and forms");
    std::vector<std::string> vars;
    for (const auto& v : j["vars"]) {
        if (!v.is_string()) bad("coframe vars must be strings");
        vars.push_back(v.get<std::string>());
    }
    Patch patch(vars);
    std::optional<std::set<std::string>> allowed{std::set<std::string>(vars.begin(), vars.end())};
    std::vector<DForm> forms;
    if (!j["forms"].is_array()) bad("coframe forms must be an array");
    for (const auto& fj : j["forms"]) {
        DForm f(patch, 1);
        if (!fj.is_array()) bad("each coframe form must be an array of terms");
        for (const auto& term : fj) {
            if (!term.is_object() || !term.contains("coeff") || !term.contains("d"))
                bad("coframe terms need coeff and d");
            const int d = term["d"].get<int>();
            if (d < 0 || d >= patch.dim()) bad("coframe term differential index out of range");
            const RatFunc coeff = parse_scalar(term["coeff"].get<std::string>(), allowed);
            f += coeff * DForm::dp(patch, d);
        }
        forms.push_back(std::move(f));
    }
    return Coframe(patch, std::move(forms));
}

namespace {

Json one_block(const ComplexBlocks& blocks, ComplexBlocks::BlockKind kind, bool torsion) {
    Json out = Json::array();
    const int n = blocks.k + 1;
    for (int a = 0; a < (torsion ? blocks.pairs : 1); ++a)
        for (int b = 0; b < n; ++b)
            for (int c = b + 1; c < n; ++c) {
                if (blocks.classify(b, c) != kind) continue;
                const RatFunc& v =
                    torsion ? blocks.torsion[static_cast<size_t>(a)].at(static_cast<size_t>(b),
                                                                        static_cast<size_t>(c))
                            : blocks.curvature.at(static_cast<size_t>(b), static_cast<size_t>(c));
                if (v.is_zero()) continue;
                Json e{{"j", b}, {"l", c}, {"value", v.str()}};
                if (torsion) e["i"] = a;
                out.push_back(std::move(e));
            }
    return out;
}

Json torsion_blocks_to_json(const ComplexBlocks& blocks) {
    return Json{
        {"t_20", one_block(blocks, ComplexBlocks::BlockKind::kHolHol, true)},
        {"t_11", one_block(blocks, ComplexBlocks::BlockKind::kMixed, true)},
        {"t_02", one_block(blocks, ComplexBlocks::BlockKind::kAntiAnti, true)},
    };
}

Json curvature_blocks_to_json(const ComplexBlocks& blocks) {
    return Json{
        {"c_20", one_block(blocks, ComplexBlocks::BlockKind::kHolHol, false)},
        {"c_11", one_block(blocks, ComplexBlocks::BlockKind::kMixed, false)},
        {"c_02", one_block(blocks, ComplexBlocks::BlockKind::kAntiAnti, false)},
    };
}

}  // namespace

Json analysis_report_to_json(const AnalysisReport& rep) {
    Json connection = Json::object();
    for (int r = 0; r < 2; ++r)
        for (int c = 0; c < 2; ++c) {
            Json terms = Json::array();
            for (const auto& [mask, coeff] :
                 rep.connection.connection.phi[static_cast<size_t>(r)][static_cast<size_t>(c)]
                     .components()) {
                int d = 0;
                for (int b = 0; b < 32; ++b)
                    if (mask & (DForm::Mask{1} << b)) d = b;
                terms.push_back(Json{{"coeff", coeff.str()}, {"d", d}});
            }
            connection[kSlotNames[r][c]] = std::move(terms);
        }

    Json torsion = Json::array();
    for (const auto& [key, v] : rep.connection.torsion.components()) {
        const auto [r, a, b] = key;
        torsion.push_back(Json{{"i", r}, {"j", a}, {"k", b}, {"value", v.str()}});
    }

    Json curv = Json::object();
    for (int r = 0; r < 2; ++r)
        for (int c = 0; c < 2; ++c) {
            Json terms = Json::array();
            for (const auto& [mask, coeff] : rep.omega[static_cast<size_t>(r)][static_cast<size_t>(c)].components()) {
                Json idx = Json::array();
                for (int b = 0; b < 32; ++b)
                    if (mask & (DForm::Mask{1} << b)) idx.push_back(b);
                terms.push_back(Json{{"coeff", coeff.str()}, {"d", idx}});
            }
            curv[kSlotNames[r][c]] = std::move(terms);
        }

    Json verdicts = Json::array();
    for (const auto& v : rep.verdicts) {
        Json pt = Json::array();
        for (const auto& x : v.point) pt.push_back(x.str());
        Json e{{"point", pt}};
        if (!v.evaluated) {
            e["error"] = v.error;
        } else {
            e["t02_zero"] = v.t02_zero;
            e["c02_zero"] = v.c02_zero;
            e["t11_zero"] = v.t11_zero;
            e["integrable"] = v.integrable;
            e["implication_ok"] = v.implication_ok;
        }
        verdicts.push_back(std::move(e));
    }

    return Json{
        {"degree", rep.k},
        {"connection", connection},
        {"torsion", torsion},
        {"structure_equation_residual_zero", rep.connection.residual_zero},
        {"torsion_normalized_identically", rep.connection.perp_identically},
        {"curvature", curv},
        {"complex_blocks", torsion_blocks_to_json(rep.blocks)},
        {"curvature_blocks", curvature_blocks_to_json(rep.blocks)},
        {"t02_identically_zero", rep.t02_identically_zero},
        {"c02_identically_zero", rep.c02_identically_zero},
        {"integrable_identically", rep.integrable_identically},
        {"input_real", rep.input_real},
        {"reality_ok", rep.reality_ok},
        {"verdicts", verdicts},
    };
}

Json block_report_to_json(const BlockReport& rep) {
    Json blocks = Json::array();
    for (const auto& b : rep.blocks) {
        blocks.push_back(Json{{"size", b.equations.size()}, {"det", b.det.str()}});
    }
    return Json{{"k", rep.k},
                {"common_det", rep.common_det.str()},
                {"closed_form", block_determinant_closed_form(rep.k).str()},
                {"shape_ok", rep.shape_ok},
                {"full_det", rep.full_det.str()},
                {"blocks", blocks}};
}

std::vector<PatchPoint> parse_points(const std::string& text) {
    std::vector<PatchPoint> out;
    std::stringstream ss(text);
    std::string tuple;
    while (std::getline(ss, tuple, ';')) {
        if (tuple.empty()) continue;
        PatchPoint p;
        std::stringstream ts(tuple);
        std::string item;
        while (std::getline(ts, item, ',')) {
            std::string trimmed;
            for (char ch : item)
                if (!std::isspace(static_cast<unsigned char>(ch))) trimmed += ch;
            if (trimmed.empty()) bad("empty coordinate in point list");
            p.push_back(Rational::parse(trimmed));
        }
        out.push_back(std::move(p));
    }
    return out;
}

}  // namespace gl2
