#include <gtest/gtest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>

#include "qpot/json_io.hpp"

using namespace qpot;

namespace {

std::string temp_path(const std::string& name) {
    return (std::filesystem::temp_directory_path() / ("qpot_json_io_" + name)).string();
}

} // namespace

TEST(ScalarJson, Format) {
    EXPECT_EQ(to_json(Scalar::rational(-3, 4)), json("-3/4"));
    EXPECT_EQ(to_json(Scalar(7)), json("7"));
    const json c = to_json(Scalar(mpq_class(1, 2), mpq_class(-5)));
    EXPECT_EQ(c.dump(), R"({"re":"1/2","im":"-5"})");
}

TEST(ScalarJson, Parse) {
    EXPECT_EQ(scalar_from_json(json(3)), Scalar(3));
    EXPECT_EQ(scalar_from_json(json("2/6")), Scalar::rational(1, 3));
    EXPECT_EQ(scalar_from_json(json{{"re", 1}, {"im", "2"}}), Scalar(mpq_class(1), mpq_class(2)));
    EXPECT_EQ(scalar_from_json(json{{"re", "0"}}), Scalar(0));
    EXPECT_THROW(scalar_from_json(json(1.5)), InputError);
    EXPECT_THROW(scalar_from_json(json{{"im", 1}}), InputError);
    EXPECT_THROW(scalar_from_json(json("abc")), InputError);
}

TEST(FramedRepJson, RoundTrip) {
    const FramedRep rho = random_rep(3, 2, 11, 4);
    const json j = to_json(rho);
    EXPECT_EQ(framed_rep_from_json(j), rho);
    EXPECT_EQ(to_json(framed_rep_from_json(json::parse(j.dump()))).dump(), j.dump());
}

TEST(FramedRepJson, Rejects) {
    json j = to_json(random_rep(2, 1, 3, 2));
    json missing = j;
    missing.erase("V");
    EXPECT_THROW(framed_rep_from_json(missing), InputError);
    json bad_shape = j;
    bad_shape["A"].erase(0);
    EXPECT_THROW(framed_rep_from_json(bad_shape), InputError);
    json negative = j;
    negative["n"] = -2;
    EXPECT_THROW(framed_rep_from_json(negative), InputError);
    EXPECT_THROW(framed_rep_from_json(json::array()), InputError);
}

TEST(PolystableJson, RoundTripAndValidation) {
    const PolystableData d{{{Scalar(0), Scalar(0), Scalar(0)}, {Scalar::rational(1, 2), Scalar(mpq_class(0), mpq_class(1)), Scalar(3)}},
                           {2, 1}};
    const PolystableData back = polystable_from_json(json::parse(to_json(d).dump()));
    EXPECT_EQ(back.points, d.points);
    EXPECT_EQ(back.mults, d.mults);

    EXPECT_THROW(polystable_from_json(json{{"points", json::array()}}), InputError);
    EXPECT_THROW(polystable_from_json(json::parse(R"({"points":[["0","0","0"]],"mults":[0]})")), InputError);
    EXPECT_THROW(polystable_from_json(json::parse(R"({"points":[["0","0"]],"mults":[1]})")), InputError);
    EXPECT_THROW(polystable_from_json(json::parse(R"({"points":[[0,0,0],[0,0,0]],"mults":[1,1]})")), InputError);
}

TEST(QuiverJson, Shape) {
    const json q = to_json(framed_3loop(2));
    EXPECT_EQ(q["vertices"], 2);
    EXPECT_EQ(q["edges"].size(), 5u);
}

TEST(Files, ReadWrite) {
    const std::string path = temp_path("roundtrip.json");
    const json doc{{"schema_version", kSchemaVersion}, {"value", "1/3"}};
    write_json_file(path, doc);
    EXPECT_EQ(read_json_file(path), doc);
    std::remove(path.c_str());
}

TEST(Files, MissingAndMalformed) {
    EXPECT_THROW(read_json_file(temp_path("does_not_exist.json")), InputError);
    const std::string path = temp_path("malformed.json");
    {
        std::ofstream out(path);
        out << "{\"n\": 2,";
    }
    EXPECT_THROW(read_json_file(path), InputError);
    std::remove(path.c_str());
}
