#include "doctest.h"
#include "ssav/errors.hpp"
#include "ssav/serialize.hpp"

using namespace ssav;

TEST_CASE("json round trip") {
  for (std::int64_t p : {2, 3, 5}) {
    for (int n : {1, 2, 3}) {
      for (int g = 1; g <= 4; ++g) {
        for (const auto& rec : enumerate(p, n, g)) {
          const auto j = to_json(rec);
          const auto back = record_from_json(nlohmann::json::parse(j.dump()));
          CHECK(back.field == rec.field);
          CHECK(back.g == rec.g);
          CHECK(back.case_tag == rec.case_tag);
          CHECK(back.param == rec.param);
          CHECK(back.sign_variant == rec.sign_variant);
          CHECK(back.weil_poly == rec.weil_poly);
          CHECK(back.e == rec.e);
          CHECK(back.char_poly == rec.char_poly);
        }
      }
    }
  }
}

TEST_CASE("json layout") {
  const auto recs = enumerate(3, 1, 1);
  REQUIRE(recs.size() == 3);
  const auto j = to_json(recs[0]);
  CHECK(j.at("p") == 3);
  CHECK(j.at("n") == 1);
  CHECK(j.at("q") == "3");
  CHECK(j.at("g") == 1);
  CHECK(j.at("e") == 1);
  CHECK(j.at("char_coeffs") == nlohmann::json::array({"3", "-3", "1"}));
  CHECK_THROWS_AS(record_from_json(nlohmann::json::object()), BadArguments);
  CHECK_THROWS_AS(record_from_json(nlohmann::json::parse("[1,2]")), BadArguments);
}

TEST_CASE("csv and text") {
  CHECK(csv_header() == "p,n,q,g,case,param,variant,e,weil_coeffs,char_coeffs");
  const auto recs = enumerate(3, 1, 2);
  bool saw_real = false;
  for (const auto& rec : recs) {
    const auto row = to_csv_row(rec);
    CHECK(std::count(row.begin(), row.end(), ',') == 9);
    if (rec.case_tag == CaseTag::RealOdd) {
      saw_real = true;
      CHECK(to_text_line(rec).find("RealOdd") != std::string::npos);
      CHECK(to_text_line(rec).find("e=2") != std::string::npos);
      CHECK(row.find("9;0;-6;0;1") != std::string::npos);
    }
  }
  CHECK(saw_real);
  for (const auto& rec : enumerate(2, 2, 1)) CHECK(to_text_line(rec).find("m=") != std::string::npos);
}
