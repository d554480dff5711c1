#include <catch2/catch_amalgamated.hpp>

#include <string>

#include "test_support.hpp"
#include "txray/json_io.hpp"

using namespace txray;

namespace {

auto parse_error = Catch::Matchers::Predicate<Error>(
    [](const Error& e) { return e.code() == ErrorCode::ParseError; });

std::vector<Document> canonical_documents() {
  std::vector<Document> docs;
  docs.push_back(make_document(m2_polytope(), "scenario m2 polytope"));
  docs.push_back(
      make_document(gelfand_cetlin({rat(5), rat(1), rat(0)}), "scenario gc"));
  HirzebruchResult m3 = tolman_m3();
  docs.push_back(make_document(m3.xray, "scenario hn n=2"));
  docs.push_back(make_document(m3.verdict, "check"));
  docs.push_back(make_document(hn_sweep(-1, 2), "scenario sweep"));
  // Non-integer rationals (5/2, 7/2) must survive the wire format.
  docs.push_back(
      make_document(hirzebruch(HnParams::defaults(-1)).chamber, "hn n=-1"));
  return docs;
}

}  // namespace

TEST_CASE("rational wire format") {
  CHECK(to_string(rat(1, 2)) == "1/2");
  CHECK(to_string(rat(-6, 4)) == "-3/2");
  CHECK(to_string(rat(7)) == "7");
  CHECK(parse_rational("1/2") == rat(1, 2));
  CHECK(parse_rational("-3/2") == rat(-3, 2));
  CHECK(parse_rational("0") == rat(0));
  for (const char* bad : {"2/4", "1/0", "1/-2", "01", "", "1.5", "+3", "a/b",
                          "3/", "/2", "-0"}) {
    CHECK_THROWS_MATCHES(parse_rational(bad), Error, parse_error);
  }
}

TEST_CASE("every document kind survives encode/decode bit-exactly") {
  for (const Document& doc : canonical_documents()) {
    std::string text = encode(doc);
    Document back = decode(text);
    REQUIRE(back == doc);
    REQUIRE(encode(back) == text);
  }
}

TEST_CASE("decoded X-ray documents pass validation") {
  Document doc = make_document(tolman_m3().xray, "scenario hn n=2");
  Document back = decode(encode(doc));
  const XRay& x = std::get<XRay>(back.payload);
  CHECK(validate_xray(x, /*check_weyl=*/true).ok);
}

TEST_CASE("strict decoding rejects malformed documents") {
  Document doc = make_document(tolman_m3().xray, "scenario hn n=2");
  Json j = Json::parse(encode(doc));

  SECTION("non-primitive stored direction") {
    j["payload"]["fixed_points"][0]["weights"][0]["direction"] =
        Json::array({2, 4});
    CHECK_THROWS_MATCHES(decode(j.dump()), Error, parse_error);
  }
  SECTION("direction not matching the endpoints") {
    j["payload"]["edges"][0]["direction"] = Json::array({1, 0});
    CHECK_THROWS_MATCHES(decode(j.dump()), Error, parse_error);
  }
  SECTION("unknown top-level field") {
    j["surprise"] = 1;
    CHECK_THROWS_MATCHES(decode(j.dump()), Error, parse_error);
  }
  SECTION("unknown nested field, error names the path") {
    j["payload"]["edges"][3]["color"] = "red";
    try {
      decode(j.dump());
      FAIL("expected ParseError");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::ParseError);
      CHECK(e.data().at("path").find("edges[3]") != std::string::npos);
    }
  }
  SECTION("rational not in lowest terms") {
    j["payload"]["fixed_points"][0]["position"][0] = "2/4";
    CHECK_THROWS_MATCHES(decode(j.dump()), Error, parse_error);
  }
  SECTION("edge index out of range") {
    j["payload"]["edges"][0]["endpoints"] = Json::array({0, 99});
    CHECK_THROWS_MATCHES(decode(j.dump()), Error, parse_error);
  }
  SECTION("not JSON at all") {
    CHECK_THROWS_MATCHES(decode("...garbage..."), Error, parse_error);
  }
}

TEST_CASE("polytope documents must list exactly the extreme points") {
  Document doc = make_document(m2_polytope(), "scenario m2 polytope");
  Json j = Json::parse(encode(doc));
  j["payload"]["vertices"].push_back(Json::array({"1", "1", "0"}));
  CHECK_THROWS_MATCHES(decode(j.dump()), Error, parse_error);
}

TEST_CASE("verdict consistency is enforced") {
  Verdict v;
  v.obstruction_found = true;  // but no certificates
  Document doc = make_document(v, "synthetic");
  CHECK_THROWS_MATCHES(decode(encode(doc)), Error, parse_error);
}
