#include <doctest.h>

#include <fstream>
#include <sstream>

#include "hopflab/errors.hpp"
#include "hopflab/models.hpp"

using namespace hopflab;

namespace {

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    REQUIRE_MESSAGE(in, path);
    std::stringstream s;
    s << in.rdbuf();
    return s.str();
}

ParseError parse_failure(const std::string& text) {
    try {
        parse_algebra(text);
    } catch (const ParseError& e) {
        return e;
    }
    FAIL("no ParseError for: " << text);
    return ParseError("", 0, 0);
}

}  // namespace

TEST_CASE("parse a small algebra") {
    const AlgebraDocument d = parse_algebra(R"(
# comment line
algebra demo {
  params: q;
  gens: a [star = b], b [star = a], g [grouplike];
  rel: b*a - q*a*b;   # oriented by DegLex
  coproduct: g -> g (x) g;
  counit: g -> 1;
  antipode: g -> g;
}
)");
    REQUIRE(d.pres);
    CHECK(d.pres->name() == "demo");
    CHECK(d.pres->params() == std::vector<std::string>{"q"});
    CHECK(d.pres->size() == 3);
    CHECK(d.pres->star_of(d.pres->index_of("a")) == d.pres->index_of("b"));
    CHECK(d.pres->generators()[2].grouplike);
    REQUIRE(d.pres->rules().size() == 1);
    CHECK(d.pres->word_str(d.pres->rules()[0].lhs) == "b*a");
    REQUIRE(d.hopf);
    CHECK_FALSE(d.hopf->complete());
}

TEST_CASE("expression grammar") {
    const auto P = build_model("kminkowski2d").pres;
    CHECK(parse_element(P, "(x0 + x1)^2") == parse_element(P, "x0*x0 + x0*x1 + x1*x0 + x1*x1"));
    CHECK(parse_element(P, "x0/2") == parse_element(P, "1/2*x0"));
    CHECK(parse_element(P, "kappa^-1*x1") == parse_element(P, "1/kappa*x1"));
    CHECK(parse_element(P, "-(i*x0)") == parse_element(P, "-i*x0"));
    CHECK(parse_tensor(P, "x0 (x) x1").rank() == 2);
    CHECK(parse_scalar("(1 + i)/kappa", {"kappa"}) ==
          (Scalar(1) + Scalar::imaginary_unit()) / Scalar::param("kappa"));
    CHECK_THROWS_AS(parse_element(P, "x0 (x) x1"), ParseError);
    CHECK_THROWS_AS(parse_element(P, "x0 / x1"), ParseError);
    CHECK_THROWS_AS(parse_element(P, "x0^-1"), ParseError);
    CHECK_THROWS_AS(parse_element(P, "x0 + x0 (x) 1"), ParseError);
    CHECK_THROWS_AS(parse_scalar("x0"), ParseError);
    CHECK_THROWS_AS(parse_scalar("1/0"), ParseError);
}

TEST_CASE("parse errors carry positions") {
    {
        const ParseError e = parse_failure("algebra a {\n  gens: x, x;\n}\n");
        CHECK(e.line() == 2);
        CHECK(e.column() == 12);
        CHECK(std::string(e.what()).find("duplicate generator 'x'") != std::string::npos);
    }
    {
        const ParseError e = parse_failure("algebra a {\n  gens: x;\n  rel: x*y;\n}\n");
        CHECK(e.line() == 3);
        CHECK(e.column() == 10);
        CHECK(std::string(e.what()).find("undeclared symbol 'y'") != std::string::npos);
    }
    {
        const ParseError e = parse_failure("algebra a {\n  gens: x\n}\n");
        CHECK(e.line() == 3);
        CHECK(e.column() == 1);
        CHECK(e.expected() == std::vector<std::string>{",", "[", ";"});
    }
    {
        const ParseError e = parse_failure("algebra a {\n  gens: x;\n  rel: x - x;\n}\n");
        CHECK(std::string(e.what()).find("identically zero") != std::string::npos);
    }
    CHECK_THROWS_AS(parse_algebra("algebra a { gens: i; }"), ParseError);
    CHECK_THROWS_AS(parse_algebra("algebra a { gens: x [star = y]; }"), ParseError);
    CHECK_THROWS_AS(parse_algebra("algebra a { params: k; }"), ParseError);
    CHECK_THROWS_AS(parse_algebra("algebra a { gens: x; counit: x -> x; }"), ParseError);
    CHECK_THROWS_AS(parse_algebra("algebra a { gens: x; coproduct: x -> x; }"), ParseError);
    CHECK_THROWS_AS(parse_algebra("algebra a { gens: x; counit: x -> 0; counit: x -> 1; }"), ParseError);
    CHECK_THROWS_AS(parse_algebra("algebra a { gens: x $ ; }"), ParseError);
    CHECK_THROWS_AS(parse_algebra("algebra a { gens: g [grouplike]; coproduct: g -> g (x) 1 + 1 (x) g; }"),
                    ParseError);
}

TEST_CASE("print and parse round trip") {
    for (const auto& info : list_models()) {
        INFO(info.name);
        const auto m = build_model(info.name);
        const std::string text = print_algebra(m.document());
        const AlgebraDocument again = parse_algebra(text);
        CHECK(print_algebra(again) == text);
        CHECK(again.pres->rules().size() == m.pres->rules().size());
        for (std::size_t k = 0; k < m.pres->rules().size(); ++k)
            CHECK(again.pres->relation(k) == m.pres->relation(k));
    }
}

TEST_CASE("golden model files match the catalog") {
    for (const auto& info : list_models()) {
        INFO(info.name);
        const std::string golden = slurp(std::string(HOPFLAB_SOURCE_DIR) + "/models/" + info.name + ".alg");
        CHECK(golden == print_algebra(build_model(info.name).document()));
        CHECK(print_algebra(parse_algebra(model_source(info.name))) == golden);
    }
}
