#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <fstream>
#include <cstdio>
#include <string>

#include "gl2/json_io.hpp"
#include "gl2/selftest.hpp"

using namespace gl2;

namespace {

struct CliResult {
    int exit_code;
    std::string out;
};

// Runs the CLI binary (built next to the test) and captures stdout.
CliResult run_cli(const std::string& args) {
    const std::string cmd = "./gl2 " + args + " 2>/dev/null";
    std::array<char, 4096> buf;
    std::string out;
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    size_t n;
    while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), n);
    const int status = pclose(pipe);
    return {WEXITSTATUS(status), out};
}

}  // namespace

TEST_CASE("matrix json round trip") {
    Matrix<GaussRational> m(2, 3);
    m.at(0, 0) = GaussRational(Rational(1, 2));
    m.at(1, 2) = GaussRational(Rational(0), Rational(-3, 4));
    CHECK(matrix_from_json(matrix_to_json(m)) == m);
    CHECK_THROWS_AS(matrix_from_json(Json::array()), std::invalid_argument);
    CHECK_THROWS_AS(matrix_from_json(Json::parse(R"([["1"],["1","2"]])")), std::invalid_argument);
}

TEST_CASE("binary form json round trip") {
    BinaryForm f(2);
    f.coeff(0) = GaussRational(1);
    f.coeff(2) = GaussRational(Rational(-1, 3), Rational(2));
    const BinaryForm g = binary_form_from_json(binary_form_to_json(f));
    CHECK(f == g);
}

TEST_CASE("torsion and correction json round trips") {
    TorsionTensor<GaussRational> t(3);
    t.add(0, 2, 3, GaussRational(2520));
    t.add(1, 0, 2, GaussRational(Rational(-7, 3)));
    const auto t2 = torsion_from_json(torsion_to_json(t));
    CHECK(t == t2);

    ConnectionCorrection<GaussRational> psi(3);
    psi.slot[0][1][2] = GaussRational(Rational(5, 7));
    psi.slot[1][0][0] = GaussRational(Rational(0), Rational(1));
    const auto psi2 = correction_from_json(correction_to_json(psi));
    for (int r = 0; r < 2; ++r)
        for (int c = 0; c < 2; ++c)
            for (int m = 0; m <= 3; ++m)
                CHECK(psi.slot[static_cast<size_t>(r)][static_cast<size_t>(c)][static_cast<size_t>(m)] ==
                      psi2.slot[static_cast<size_t>(r)][static_cast<size_t>(c)][static_cast<size_t>(m)]);
}

TEST_CASE("coframe json round trip") {
    const Json j = Json::parse(R"({
        "vars": ["p0", "p1", "p2", "p3"],
        "forms": [
            [{"coeff": "1", "d": 0}, {"coeff": "p1", "d": 2}],
            [{"coeff": "1", "d": 1}],
            [{"coeff": "1", "d": 2}],
            [{"coeff": "1", "d": 3}]
        ]})");
    const Coframe cf = coframe_from_json(j);
    CHECK(cf.size() == 4);
    const Coframe cf2 = coframe_from_json(coframe_to_json(cf));
    for (int i = 0; i < 4; ++i) CHECK(cf.form(i) == cf2.form(i));

    Json bad = j;
    bad["forms"][0][0]["coeff"] = "q9";
    CHECK_THROWS_AS(coframe_from_json(bad), std::invalid_argument);
}

TEST_CASE("point list parsing") {
    const auto pts = parse_points("0,0,0,0; 1/2, -3, 4, 5");
    REQUIRE(pts.size() == 2);
    CHECK(pts[1][0] == Rational(1, 2));
    CHECK(pts[1][1] == Rational(-3));
    CHECK(parse_points("").empty());
}

TEST_CASE("cli subcommands: exit codes and json emission") {
    CHECK(run_cli("xi --k 3").exit_code == 0);
    CHECK(run_cli("nonsense").exit_code != 0);
    CHECK(run_cli("perp --k 3 --matrix 'not json'").exit_code == 2);
    // Domain error: singular matrix for the group representation.
    CHECK(run_cli("rep --k 2 --kind group --phi '[\"1\",\"1\",\"1\",\"1\"]'").exit_code == 1);

    // Emitted matrices parse back through the matrix reader.
    const CliResult rep = run_cli("rep --k 3 --kind algebra --phi '[\"0\",\"0\",\"1\",\"0\"]'");
    REQUIRE(rep.exit_code == 0);
    const Json j = Json::parse(rep.out);
    const auto m = matrix_from_json(j["matrix"]);
    CHECK(m.at(1, 0) == GaussRational(3));

    // Perp on an emitted algebra matrix: a representation image is never
    // trace-orthogonal to the algebra.
    const CliResult perp =
        run_cli("perp --k 3 --matrix '" + j["matrix"].dump() + "'");
    REQUIRE(perp.exit_code == 0);
    CHECK(Json::parse(perp.out)["perp"] == false);

    // Normalize accepts the torsion JSON that bryant emits.
    const CliResult bry = run_cli("bryant --tau '[\"1\",\"0\",\"0\",\"0\",\"0\",\"0\",\"0\",\"0\"]'");
    REQUIRE(bry.exit_code == 0);
    const Json bj = Json::parse(bry.out);
    CHECK(bj["perp_all_contractions"] == true);
    CHECK(bj["psi_zero"] == true);
    const CliResult norm = run_cli("normalize --torsion '" + bj["torsion"].dump() + "'");
    REQUIRE(norm.exit_code == 0);
    CHECK(Json::parse(norm.out)["residual_perp"] == true);

    // Flat analysis through the builtin path.
    const CliResult an = run_cli("analyze --builtin flat3 --points '0,0,0,0'");
    REQUIRE(an.exit_code == 0);
    const Json aj = Json::parse(an.out);
    CHECK(aj["integrable_identically"] == true);
    CHECK(aj["verdicts"][0]["integrable"] == true);
    CHECK(aj["complex_blocks"]["t_02"].empty());
    CHECK(aj["curvature_blocks"]["c_02"].empty());
}

TEST_CASE("cli analyze reads a coframe file") {
    const Gl2Structure s = flat_structure(3);
    const Json j = coframe_to_json(s.coframe);
    const std::string path = "cli_io_flat3.json";
    {
        std::ofstream out(path);
        out << j.dump();
    }
    const CliResult an = run_cli("analyze " + path + " --points '0,0,0,0'");
    std::remove(path.c_str());
    REQUIRE(an.exit_code == 0);
    CHECK(Json::parse(an.out)["verdicts"][0]["integrable"] == true);
}
