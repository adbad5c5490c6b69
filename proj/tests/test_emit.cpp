#include <doctest.h>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "eisenspec/emit.hpp"

using namespace eisenspec::emit;
namespace fs = std::filesystem;

namespace {

Table sample() {
    Table t;
    t.columns = {"tau", "re_lambda", "label"};
    t.add_row({-1.0, 0.25, std::string("a")});
    t.add_row({0.0, 0.1, std::string("b,c")});
    t.add_row({1.0, 1e-300, std::string("d")});
    return t;
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace

TEST_CASE("CSV") {
    const auto csv = to_csv(sample());
    CHECK(csv == "tau,re_lambda,label\n-1,0.25,a\n0,0.1,\"b,c\"\n1,1e-300,d\n");
    CHECK(csv.find('\r') == std::string::npos);
    CHECK(format_number(0.1 + 0.2) == "0.30000000000000004");
}

TEST_CASE("JSON keeps column order and values") {
    const auto j = nlohmann::json::parse(to_json(sample()));
    REQUIRE(j.size() == 3);
    CHECK(j[1]["re_lambda"].get<double>() == 0.1);
    CHECK(j[1]["label"] == "b,c");
    CHECK(to_json(sample()).find("\"tau\"") < to_json(sample()).find("\"re_lambda\""));
}

TEST_CASE("SVG") {
    Table t;
    t.columns = {"x", "y"};
    for (int k = 0; k < 5; ++k) t.add_row({double(k), double(k * k)});
    const auto svg = to_svg(t);
    CHECK(svg.find("viewBox=\"0 0 800 600\"") != std::string::npos);
    CHECK(svg.find("<polyline") != std::string::npos);
    CHECK(svg.find("<line") != std::string::npos);
    CHECK_THROWS(to_svg(sample(), 0, 2));
}

TEST_CASE("writing files") {
    const auto dir = fs::temp_directory_path() / "eisenspec_emit_test";
    fs::create_directories(dir);
    const auto a = dir / "a.csv", b = dir / "b.csv";
    write(sample(), Format::Csv, a.string());
    write(sample(), Format::Csv, b.string());
    CHECK(slurp(a) == slurp(b));
    const auto text = slurp(a);
    CHECK(std::count(text.begin(), text.end(), '\n') == 4);

    const auto empty_path = dir / "empty.csv";
    fs::remove(empty_path);
    Table empty;
    empty.columns = {"x"};
    CHECK_THROWS(write(empty, Format::Csv, empty_path.string()));
    CHECK_FALSE(fs::exists(empty_path));
    CHECK_THROWS(write(sample(), Format::Csv, (dir / "no" / "such" / "dir.csv").string()));
    CHECK_THROWS(parse_format("xml"));
    CHECK_THROWS(sample().add_row({1.0}));
    fs::remove_all(dir);
}
