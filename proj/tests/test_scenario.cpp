#include <catch2/catch_amalgamated.hpp>

#include <sstream>

#include "ramval/driver.hpp"

using namespace ramval;

TEST_CASE("scenario file reproduces the ramified builtin") {
    std::istringstream in(R"(
# theta^2 + theta = 1/t over F_2((t))
[scenario]
name = file-e-p2
kind = artin_schreier

[ground]
p = 2
generators = 1
residue = prime
ambient_q = 2

[truncation]
trunc_exponent = 24
max_terms = 96

[extension]
rhs = [[-1, [1]]]

[oracle]
samples = 300
seed = 9
trace_z_values = 0, 1
)");
    Scenario sc = parse_scenario(in);
    CHECK(sc.name == "file-e-p2");
    CHECK(sc.oracle.samples == 300);
    CHECK(sc.oracle.seed == 9);
    REQUIRE(sc.trace_z_values.size() == 2);
    Report rep = run_scenario(sc);
    CHECK(rep.e == 2);
    CHECK(rep.d == 1);
    REQUIRE(rep.ram.has_value());
    CHECK(rep.ram->gamma == Rat(1, 2));
    CHECK(rep.diff->different.generator_value == Rat(1));
}

TEST_CASE("scenario file with u-coefficients and an F_q coefficient vector") {
    std::istringstream in(R"(
[scenario]
name = file-finsep
kind = artin_schreier
[ground]
p = 2
generators = 1
residue = fq_rational 2
ambient_q = 2
[truncation]
trunc_exponent = 24
max_terms = 96
[extension]
rhs = [[-2, [1], 1]]
[oracle]
samples = 150
seed = 4
)");
    Report rep = run_scenario(parse_scenario(in));
    CHECK(rep.f == 2);
    CHECK_FALSE(rep.residue_separable);
    CHECK(rep.ram->gamma == Rat(1));
}

TEST_CASE("defect scenario from prefix exponents") {
    // eight ladder steps suffice for a short profile
    std::ostringstream text;
    text << "[scenario]\nname = file-defect\nkind = artin_schreier\n";
    text << "[ground]\np = 2\ngenerators = 1\ndivisible_coprime_to_p = true\n";
    text << "residue = fq 4\nambient_q = 4\n";
    text << "[truncation]\nmax_terms = 200\n";
    auto q = detail::defect_exponents_p2(9);
    text << "trunc_exponent = " << (q[8] * Rat(2)).str() << "\n";
    text << "[extension]\nrhs = [";
    for (int i = 0; i < 8; ++i) text << (i ? "," : "") << "[" << (q[i] * Rat(2)).str() << ",[1]]";
    text << "]\nrhs_tail_negative = true\n";
    text << "[approximants]\nprefix_exponents = ";
    for (int i = 0; i < 7; ++i) text << (i ? "," : "") << q[i].str();
    text << "\nsup = -1/2\n";
    text << "[oracle]\nsamples = 150\nseed = 11\n";
    std::istringstream in(text.str());
    Report rep = run_scenario(parse_scenario(in));
    CHECK(rep.d == 2);
    REQUIRE(rep.ram.has_value());
    CHECK_FALSE(rep.ram->ideal.principal);
    CHECK(rep.ram->gamma == Rat(1, 2));
    REQUIRE(rep.profile_values.has_value());
    CHECK(rep.profile_values->size() == 7);
}

TEST_CASE("kummer scenario file") {
    std::istringstream in(R"(
[scenario]
name = file-kummer
kind = kummer_formula
[kummer_formula]
p = 3
vp = 1
case = unit_gen
e_or_f = e
v_eta_minus_1 = 1/6
vK_generators = 1/2
)");
    Report rep = run_scenario(parse_scenario(in));
    CHECK(rep.kummer_case == "2b");
    CHECK(rep.ram->gamma == Rat(1, 3));
}

TEST_CASE("malformed files produce parse errors with line information") {
    {
        std::istringstream in("[scenario]\nname = x\nkind = nonsense\n");
        CHECK_THROWS_AS(parse_scenario(in), ParseError);
    }
    {
        std::istringstream in("key_without_section = 1\n");
        try {
            parse_scenario(in);
            FAIL("expected a parse error");
        } catch (const ParseError& e) {
            CHECK(e.line_no == 1);
            CHECK(std::string(e.what()).find("line 1") != std::string::npos);
        }
    }
    {
        std::istringstream in("[scenario]\nname = x\nkind = artin_schreier\n[ground]\np = 2\n"
                              "generators = 1\nresidue = prime\n[extension]\nrhs = [[oops]]\n");
        CHECK_THROWS_AS(parse_scenario(in), ParseError);
    }
}

TEST_CASE("reports round-trip through the structured format") {
    for (const auto& name : builtin_names()) {
        Scenario sc = builtin_scenario(name);
        sc.oracle.samples = 200; // keep the suite quick
        Report rep = run_scenario(sc);
        std::string text = emit_structured(rep);
        Report back = parse_structured(text);
        CHECK(back == rep);
        CHECK(emit_structured(back) == text);
    }
}

TEST_CASE("identical seed and scenario give byte-identical structured output") {
    Scenario sc = builtin_scenario("as-defectless-e-p3");
    sc.oracle.samples = 250;
    std::string a = emit_structured(run_scenario(sc));
    std::string b = emit_structured(run_scenario(sc));
    CHECK(a == b);
    sc.oracle.seed = 43; // a different seed may legitimately change oracle logs
    std::string c = emit_structured(run_scenario(sc));
    CHECK(c != a); // the seed is recorded in the report
}

TEST_CASE("shipped scenario files load and run") {
    for (const char* f : {"ramified-p2.scn", "inseparable-inertia-p2.scn",
                          "defect-ladder-p2.scn", "kummer-unit-p3.scn"}) {
        Scenario sc = load_scenario(std::string(RAMVAL_SCENARIO_DIR) + "/" + f);
        sc.oracle.samples = 150;
        CHECK_NOTHROW(run_scenario(sc));
    }
}

TEST_CASE("builtin list is complete") {
    auto names = builtin_names();
    CHECK(names.size() == 10);
    for (const auto& n : names) CHECK_NOTHROW(builtin_scenario(n));
    CHECK_THROWS_AS(builtin_scenario("no-such"), InvalidInput);
}
