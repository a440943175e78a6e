#include <catch_amalgamated.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>

#include "oracle.hpp"
#include "solrad/catalog.hpp"

using namespace solrad;

namespace {

ErrorCode code_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::IoError;
}

std::string temp_file(const std::string& name, const std::string& text) {
  auto path = std::filesystem::temp_directory_path() / ("solrad_test_" + name);
  std::ofstream(path) << text;
  return path.string();
}

}  // namespace

TEST_CASE("catalog examples", "[catalog]") {
  PermGroup s5 = build("sym:5");
  CHECK(s5.order() == 120);
  CHECK(s5.degree() == 5);
  PermGroup psl = build("psl2:7");
  CHECK(psl.order() == 168);
  CHECK(psl.degree() == 8);
  CHECK(oracle::closure(psl.generators(), 8).size() == 168);
  PermGroup d = build("direct:sym:3,alt:5");
  CHECK(d.order() == 360);
  CHECK(d.degree() == 8);
}

TEST_CASE("every corpus group has its closed-form order", "[catalog][oracle]") {
  for (const auto& spec : default_corpus()) {
    INFO(spec);
    PermGroup g = build(spec);
    if (g.order() <= 5000) CHECK(oracle::closure(g.generators(), g.degree()).size() == g.order());
    // Construction is deterministic.
    CHECK(build(spec).generators() == g.generators());
    // The text form parses back to the same spec.
    CHECK(to_string(parse_group_spec(spec)) == spec);
  }
  CHECK(default_corpus().size() == 34);
}

TEST_CASE("spec parsing", "[catalog]") {
  CHECK(parse_group_spec("direct:(direct:sym:2,sym:3),alt:4").factors[0]->kind == GroupKind::direct);
  CHECK(build("direct:(direct:cyclic:2,cyclic:3),cyclic:5").order() == 30);
  CHECK(build("wreath_small:cyclic:2,cyclic:3").order() == 24);
  CHECK(build("sl23").order() == 24);
  CHECK(build("gl23").order() == 48);
  CHECK(build("alt:3").order() == 3);
  CHECK(build("sym:1").order() == 1);
  CHECK(code_of([] { build("sym:9"); }) == ErrorCode::ParameterOutOfRange);
  CHECK(code_of([] { build("psl2:17"); }) == ErrorCode::ParameterOutOfRange);
  CHECK(code_of([] { build("foo:3"); }) == ErrorCode::ParameterOutOfRange);
  CHECK(code_of([] { build("sym:x"); }) == ErrorCode::ParameterOutOfRange);
  CHECK(code_of([] { build("direct:sym:8,sym:5"); }) == ErrorCode::ParameterOutOfRange);
  CHECK(code_of([] { build("wreath_small:sym:5,sym:3"); }) == ErrorCode::ParameterOutOfRange);
}

TEST_CASE("group files", "[catalog]") {
  PermGroup s4 = load_group_file(temp_file("s4.grp", "degree 4\n(1 2)\n(1 2 3 4)\n"));
  CHECK(s4.order() == 24);
  PermGroup a5 = load_group_file(temp_file("a5.grp", "# alternating\ndegree 5\n\n(1 2 3)\n(3 4 5)\n"));
  CHECK(a5.order() == 60);
  CHECK(build("file:" + temp_file("a5b.grp", "degree 5\n(1 2 3)\n(3 4 5)")).order() == 60);
  CHECK(code_of([] { load_group_file(temp_file("empty.grp", "degree 3\n")); }) == ErrorCode::EmptyGeneratorList);
  CHECK(code_of([] { load_group_file("/nonexistent/solrad.grp"); }) == ErrorCode::IoError);
  try {
    load_group_file(temp_file("bad.grp", "degree 3\n(1 2)\n(1 4)\n"));
    FAIL("expected MalformedFile");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::MalformedFile);
    CHECK(std::string(e.what()).find("line 3") != std::string::npos);
  }
  CHECK(code_of([] { load_group_file(temp_file("nohdr.grp", "(1 2)\n")); }) == ErrorCode::MalformedFile);
}

TEST_CASE("group files round-trip in canonical form", "[catalog]") {
  for (const char* spec : {"psl2:11", "gl23", "direct:sym:4,sym:3"}) {
    PermGroup g = build(spec);
    std::string text = format_group_file(g);
    PermGroup h = parse_group_text(text);
    CHECK(same_group(g, h));
    CHECK(format_group_file(h) == text);
  }
  CHECK(format_group_file(parse_group_text("degree 5\n(5 4)(3 1 2)\n")) == "degree 5\n(1 2 3)(4 5)\n");
}
