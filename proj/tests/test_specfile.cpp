#include <cstdio>
#include <fstream>
#include <stdexcept>

#include <doctest.h>

#include "innerfn/specfile.hpp"

using namespace innerfn;

namespace {

int error_line(const std::string& text) {
    try {
        parse_spec(text);
    } catch (const SpecParseError& e) {
        return e.line;
    }
    return -1;
}

} // namespace

TEST_CASE("builtin examples round-trip through the text format") {
    for (const std::string& name : builtin_example_names()) {
        CAPTURE(name);
        InnerFunctionSpec spec = builtin_example(name);
        std::string text = write_spec(spec);
        InnerFunctionSpec back = parse_spec(text);
        CHECK(write_spec(back) == text);
        REQUIRE(back.blaschke.size() == spec.blaschke.size());
        REQUIRE(back.singular.size() == spec.singular.size());
        for (size_t i = 0; i < spec.blaschke.size(); ++i) {
            REQUIRE(back.blaschke[i].count() == spec.blaschke[i].count());
            for (int n = 0; n < spec.blaschke[i].count(); ++n) {
                CHECK(back.blaschke[i].zeros()[n].deficit == spec.blaschke[i].zeros()[n].deficit);
                CHECK(back.blaschke[i].zeros()[n].point == spec.blaschke[i].zeros()[n].point);
            }
        }
    }
    CHECK(builtin_example_names().size() == 5);
    CHECK_THROWS_AS(builtin_example("nope"), std::invalid_argument);
}

TEST_CASE("explicit lists round-trip with full precision") {
    InnerFunctionSpec spec({ZeroFamily::explicit_list({{0.3, 0.4}, {-0.1, 0.7}}, 1.5)},
                           {AtomFamily::explicit_list({{2.0, 0.5}, {-2.5, 0.25}})});
    std::string text = write_spec(spec);
    InnerFunctionSpec back = parse_spec(text);
    CHECK(write_spec(back) == text);
    REQUIRE(back.blaschke[0].count() == 2);
    for (int n = 0; n < 2; ++n)
        CHECK(back.blaschke[0].zeros()[n].point == spec.blaschke[0].zeros()[n].point);
    REQUIRE(back.singular[0].count() == 2);
    CHECK(back.singular[0].atoms()[1].theta == -2.5);
    CHECK(back.singular[0].atoms()[1].gamma == 0.25);
}

TEST_CASE("parse accepts comments, blank lines and a trailing separator") {
    auto spec = parse_spec("# product of two parts\n"
                           "\n"
                           "[blaschke]   # first part\n"
                           "zeros = 0.5+0i; -0.25+0.1i;\n"
                           "\n"
                           "[singular]\n"
                           "atoms = 0:1; 1.5707963267948966:0.5\n");
    CHECK(spec.blaschke.size() == 1);
    CHECK(spec.blaschke[0].count() == 2);
    CHECK(spec.singular.size() == 1);
    CHECK(spec.singular[0].atoms()[1].gamma == 0.5);
}

TEST_CASE("parse errors carry the offending line") {
    CHECK(error_line("[foo]\n") == 1);
    CHECK(error_line("alpha = 2\n") == 1);
    CHECK(error_line("") == 1); // no parts at all
    CHECK(error_line("[blaschke]\nfamily = geometric\nalpha = 2\nalpha = 3\n") == 4);
    CHECK(error_line("[blaschke]\nfamily = geometric\nalpha = x2\ncount = 5\n") == 3);
    CHECK(error_line("[blaschke]\nfamily = geometric\nalpha = 2\ncount = 5\nbogus = 1\n") == 5);
    CHECK(error_line("[blaschke]\nfamily = geometric\nalpha = 2\ncount = 5\ngamma = 2\n") == 5);
    CHECK(error_line("[blaschke]\nfamily = power\ncount = 5\n") == 1);
    CHECK(error_line("[blaschke]\nfamily = warped\ncount = 5\n") == 2);
    CHECK(error_line("[blaschke]\nzeros = 0.5+0j\n") == 2);
    CHECK(error_line("[blaschke]\nzeros = 0.5+0i; 2+0i\n") == 1); // outside the disc
    CHECK(error_line("[blaschke]\nfamily = geometric\nalpha = 1\ncount = 5\n") == 1);
    CHECK(error_line("[singular]\nfamily = dyadic_square\ncount = 30\n") == 1);
    CHECK(error_line("[singular]\natoms = 0:1; 1.0\n") == 2);
    CHECK(error_line("[singular]\ncount = 3\n") == 1); // no family, no atoms
    CHECK(error_line("[blaschke]\nfamily =\n") == 2);
    CHECK(error_line("[blaschke]\nfamily geometric\n") == 2);
}

TEST_CASE("parse error messages name the line") {
    try {
        parse_spec("[blaschke]\nfamily = geometric\nalpha = x\ncount = 2\n");
        FAIL("expected a parse error");
    } catch (const SpecParseError& e) {
        CHECK(std::string(e.what()).find("line 3:") == 0);
    }
}

TEST_CASE("complex literals") {
    CHECK(parse_complex_literal("0.5") == Complex{0.5, 0.0});
    CHECK(parse_complex_literal("-0.25+0.1i") == Complex{-0.25, 0.1});
    CHECK(parse_complex_literal("1e-3-2e-4i") == Complex{1e-3, -2e-4});
    CHECK_THROWS_AS(parse_complex_literal("1+i"), std::invalid_argument);
    CHECK_THROWS_AS(parse_complex_literal("abc"), std::invalid_argument);
}

TEST_CASE("spec files load from disk") {
    const char* path = "/tmp/innerfn_test_spec.txt";
    {
        std::ofstream out(path);
        out << write_spec(builtin_example("doubleexp"));
    }
    InnerFunctionSpec spec = load_spec_file(path);
    CHECK(spec.blaschke[0].count() == 6);
    std::remove(path);
    CHECK_THROWS_AS(load_spec_file("/tmp/innerfn_no_such_file.txt"), SpecParseError);
}

TEST_CASE("reports are ordered with round-trip doubles") {
    Report r;
    r.add("first", 1);
    r.add("second", 0.1);
    r.add("third", std::string("note"));
    CHECK(r.text() == "first = 1\nsecond = 0.10000000000000001\nthird = note\n");
    CHECK(format_double(0.5) == "0.5");
    double third = 1.0 / 3.0;
    CHECK(std::stod(format_double(third)) == third);
}
