#include "ssav/serialize.hpp"

#include <sstream>
#include <vector>

#include "ssav/errors.hpp"

namespace ssav {

namespace {

std::string join(const std::vector<std::string>& parts, char sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i > 0) out += sep;
    out += parts[i];
  }
  return out;
}

CaseTag case_from_string(const std::string& s) {
  for (CaseTag t : {CaseTag::Normal, CaseTag::ExcOddP, CaseTag::ExcTwoPlus, CaseTag::ExcTwoMinus, CaseTag::RealOdd,
                    CaseTag::EvenCyclotomic, CaseTag::EvenReal}) {
    if (to_string(t) == s) return t;
  }
  throw BadArguments("unknown case tag '" + s + "'");
}

SignVariant variant_from_string(const std::string& s) {
  for (SignVariant v : {SignVariant::A, SignVariant::B, SignVariant::None}) {
    if (to_string(v) == s) return v;
  }
  throw BadArguments("unknown sign variant '" + s + "'");
}

bool is_odd_exponent(const IsogenyClassRecord& rec) { return rec.field.n() % 2 == 1; }

}  // namespace

nlohmann::json to_json(const IsogenyClassRecord& rec) {
  nlohmann::json j;
  j["p"] = rec.field.p();
  j["n"] = rec.field.n();
  j["q"] = to_decimal(rec.field.q());
  j["sign"] = std::string(to_string(rec.field.sign()));
  j["g"] = rec.g;
  j["case"] = std::string(to_string(rec.case_tag));
  j["param"] = rec.param;
  j["variant"] = std::string(to_string(rec.sign_variant));
  j["weil_coeffs"] = rec.weil_poly.to_decimal_strings();
  j["e"] = rec.e;
  j["char_coeffs"] = rec.char_poly.to_decimal_strings();
  return j;
}

IsogenyClassRecord record_from_json(const nlohmann::json& j) {
  try {
    const Sign sign = j.at("sign").get<std::string>() == "-" ? Sign::Minus : Sign::Plus;
    const FieldParameters fp(j.at("p").get<std::int64_t>(), j.at("n").get<int>(), sign);
    if (to_decimal(fp.q()) != j.at("q").get<std::string>()) throw BadArguments("q does not equal p^n");
    const auto weil = j.at("weil_coeffs").get<std::vector<std::string>>();
    const auto chr = j.at("char_coeffs").get<std::vector<std::string>>();
    return IsogenyClassRecord{fp,
                              j.at("g").get<int>(),
                              case_from_string(j.at("case").get<std::string>()),
                              j.at("param").get<std::int64_t>(),
                              variant_from_string(j.at("variant").get<std::string>()),
                              IntegerPolynomial::from_decimal_strings(weil),
                              j.at("e").get<int>(),
                              IntegerPolynomial::from_decimal_strings(chr)};
  } catch (const nlohmann::json::exception& ex) {
    throw BadArguments(std::string("malformed record: ") + ex.what());
  }
}

std::string csv_header() { return "p,n,q,g,case,param,variant,e,weil_coeffs,char_coeffs"; }

std::string to_csv_row(const IsogenyClassRecord& rec) {
  std::ostringstream os;
  os << rec.field.p() << ',' << rec.field.n() << ',' << to_decimal(rec.field.q()) << ',' << rec.g << ','
     << to_string(rec.case_tag) << ',' << rec.param << ',' << to_string(rec.sign_variant) << ',' << rec.e << ','
     << join(rec.weil_poly.to_decimal_strings(), ';') << ',' << join(rec.char_poly.to_decimal_strings(), ';');
  return os.str();
}

std::string to_text_line(const IsogenyClassRecord& rec) {
  std::ostringstream os;
  os << "g=" << rec.g << ' ' << to_string(rec.case_tag) << ' ' << (is_odd_exponent(rec) ? "t=" : "m=") << rec.param;
  if (is_odd_exponent(rec)) os << " sign=" << to_string(rec.field.sign());
  if (rec.sign_variant != SignVariant::None) os << " variant=" << to_string(rec.sign_variant);
  os << " e=" << rec.e << ' ';
  if (rec.e == 1) {
    os << rec.weil_poly.to_string();
  } else {
    os << '(' << rec.weil_poly.to_string() << ")^" << rec.e;
  }
  return os.str();
}

}  // namespace ssav
