#include "doctest.h"
#include "qrep/io.hpp"

using namespace qrep;

TEST_CASE("presentation files round trip") {
    auto g5 = FieldSpec::gf(5);
    Presentation v = generate(Descriptor::plain(DType::TII, 1), g5);
    CHECK(read_repfile(write_repfile(v)) == v);

    // zero-dimension blocks serialize as [] and come back intact
    Presentation iii0 = generate(Descriptor::plain(DType::TIII, 0), g5);
    std::string text = write_repfile(iii0);
    CHECK(text.find("\"alpha\": []") != std::string::npos);
    CHECK(read_repfile(text) == iii0);

    auto q = FieldSpec::rationals();
    Presentation w = Presentation::zero(q, {1, 1, 1, 1});
    w.A.at(0, 0) = Scalar::of_rational(Rational(BigInt(-3), BigInt(7)));
    w.D.at(0, 0) = Scalar::of_int(q, 2);
    CHECK(read_repfile(write_repfile(w)) == w);
}

TEST_CASE("entries reduce modulo p on read") {
    std::string doc = R"({"field":{"kind":"gf","p":5},"dims":[1,0,1,0],
                          "alpha":[[7]],"beta":[],"gamma":[],"delta":[]})";
    Presentation v = read_repfile(doc);
    CHECK(v.A.at(0, 0) == Scalar::of_int(FieldSpec::gf(5), 2));
}

TEST_CASE("malformed documents are rejected") {
    CHECK_THROWS(read_repfile("{}"));
    CHECK_THROWS(read_repfile(R"({"field":{"kind":"gf","p":4},"dims":[0,0,0,0],
                                  "alpha":[],"beta":[],"gamma":[],"delta":[]})"));
    CHECK_THROWS(read_repfile(R"({"field":{"kind":"gf","p":5},"dims":[1,1,1,1],
                                  "alpha":[[1],[2]],"beta":[[0]],"gamma":[[0]],"delta":[[0]]})"));
    CHECK_THROWS(read_repfile(R"({"field":{"kind":"gf","p":5},"dims":[1,1,1,-1],
                                  "alpha":[[1]],"beta":[[0]],"gamma":[],"delta":[]})"));
}

TEST_CASE("field and polynomial parsing") {
    CHECK(parse_field("gf:7") == FieldSpec::gf(7));
    CHECK(parse_field("q") == FieldSpec::rationals());
    CHECK_THROWS(parse_field("gf:6"));
    CHECK_THROWS(parse_field("banana"));

    auto g2 = FieldSpec::gf(2);
    CHECK(parse_poly("1,1,1", g2) == Poly::from_ints(g2, {1, 1, 1}));
    CHECK_THROWS(parse_poly("", g2));

    CHECK(parse_dtype("III*") == DType::TIIIs);
    CHECK(parse_dtype("0") == DType::T0);
    CHECK_THROWS(parse_dtype("V"));
    CHECK(parse_variant("swap12") == Variant::s12);
    CHECK(parse_variant("e") == Variant::e);
}

TEST_CASE("decomposition reports are deterministic") {
    auto g2 = FieldSpec::gf(2);
    Presentation v = direct_sum(generate(Descriptor::plain(DType::TI, 1), g2),
                                generate(Descriptor::plain(DType::TIVs, 0), g2));
    Decomposition d = decompose(v);
    std::string a = decomposition_json(d);
    std::string b = decomposition_json(decompose(v));
    CHECK(a == b);
    CHECK(a.find("\"type\": \"I\"") != std::string::npos);
    CHECK(a.find("\"type\": \"IV*\"") != std::string::npos);
}
