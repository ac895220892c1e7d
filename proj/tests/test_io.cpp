#include <cstdio>
#include <fstream>
#include <sstream>

#include "cantor/io.hpp"
#include "support.hpp"

using namespace cantor;

TEST_CASE("vector text") {
    CHECK(io::parse_vector_text("3:101") == V("101"));
    CHECK(io::parse_vector_text("1101") == V("1101"));
    CHECK(io::format_vector_text(V("1101")) == "4:1101");
    CHECK_ERRC(io::parse_vector_text("4:101"), errc::length_mismatch);
    CHECK_ERRC(io::parse_vector_text("3:1a1"), errc::parse_error);
    CHECK_ERRC(io::parse_vector_text(":101"), errc::parse_error);
}

TEST_CASE("vector JSON") {
    const auto j = io::vector_to_json(V("1101"));
    CHECK(j.dump() == R"({"base":4,"bits":"1101"})");
    CHECK(io::vector_from_json(j) == V("1101"));
    CHECK(io::vector_from_json(nlohmann::json::parse(R"({"base":4,"digits":[0,1,3]})")) == V("1101"));
    CHECK_ERRC(io::vector_from_json(nlohmann::json::parse(R"({"base":5,"bits":"1101"})")), errc::length_mismatch);
    CHECK_ERRC(io::vector_from_json(nlohmann::json::parse(R"({"bits":"1101"})")), errc::parse_error);
    CHECK_ERRC(io::vector_from_json(nlohmann::json::parse(R"({"base":"x","bits":"1101"})")), errc::parse_error);
    for (const auto& v : enumerate_vectors(6)) {
        CHECK(io::vector_from_json(nlohmann::json::parse(io::vector_to_json(v).dump())) == v);
        CHECK(io::parse_vector_text(io::format_vector_text(v)) == v);
    }
}

TEST_CASE("loading vectors from text, JSON and files") {
    CHECK(io::load_vector("3:101") == V("101"));
    CHECK(io::load_vector(R"({"base":3,"bits":"101"})") == V("101"));
    const std::string path = "io_test_vector.json";
    {
        std::ofstream f(path);
        f << R"({"base":4,"bits":"1101"})" << '\n';
    }
    CHECK(io::load_vector(path) == V("1101"));
    std::remove(path.c_str());
    CHECK_ERRC(io::load_vector("no_such_file.json"), errc::parse_error);
}

TEST_CASE("dataset CSV round trip") {
    std::istringstream in("x,y\n1/4,1/3\n\n0.5 , 2/3\n");
    const auto pts = io::read_dataset_csv(in);
    REQUIRE(pts.size() == 2);
    CHECK(pts[1].x == R("1/2"));
    std::ostringstream out;
    io::write_dataset_csv(out, pts);
    CHECK(out.str() == "x,y\n1/4,1/3\n1/2,2/3\n");
    std::istringstream back(out.str());
    const auto again = io::read_dataset_csv(back);
    CHECK(again[0].y == pts[0].y);
    std::istringstream bad("1/4;1/3\n");
    CHECK_ERRC(io::read_dataset_csv(bad), errc::parse_error);
    std::istringstream junk("1/4,abc\n");
    CHECK_ERRC(io::read_dataset_csv(junk), errc::parse_error);
}

TEST_CASE("value formatting and lists") {
    CHECK(io::format_value(R("2/3"), -1) == "2/3");
    CHECK(io::format_value(R("2/3"), 3) == "0.666");
    const auto list = io::parse_rational_list("1/9, 2/9,,1/2");
    CHECK(list == std::vector<Rational>{R("1/9"), R("2/9"), R("1/2")});
}
