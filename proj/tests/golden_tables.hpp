#pragma once

// The published summary of characteristic polynomials for dimensions 1 to 7,
// transcribed verbatim (LaTeX) and instantiated at a concrete field.

#include <algorithm>
#include <cstdint>
#include <string>
#include <vector>

#include "latex_poly.hpp"
#include "ssav/numthy.hpp"
#include "ssav/polyarith.hpp"

namespace golden {

using ssav::BigInt;
using ssav::IntegerPolynomial;

struct Row {
  int g;
  const char* label;
  const char* condition;  // congruence condition on p, empty when unconditional
  const char* poly;       // characteristic polynomial; \pm rows give two
};

// q = p^n with n odd. A row whose radicals are irrational at q does not apply
// (the rows for dimensions 5 and 6 state their prime only through sqrt(pq)).
inline const std::vector<Row>& odd_rows() {
  static const std::vector<Row> rows = {
      {1, "a", "p=2", "X^2 \\pm\\sqrt{2q}X+q"},
      {1, "b", "p=3", "X^2\\pm \\sqrt{3q}X+q"},
      {1, "c", "", "X^2+q"},
      {2, "a", "p\\neq 3", "X^4-qX^2+q^2"},
      {2, "b", "", "X^4 + qX^2+q^2"},
      {2, "c", "p=2", "X^4\\pm \\sqrt{pq}X^3+qX^2\\pm q \\sqrt{pq}X+q^2"},
      {2, "d", "p=5", "X^4\\pm \\sqrt{pq}X^3+3qX^2\\pm q \\sqrt{pq}X+q^2"},
      {2, "e", "", "(X^2-q)^2"},
      {2, "f", "p \\neq 2", "X^4+q^2"},
      {3, "a", "p=3", "X^6 \\pm q\\sqrt{pq}X^3+q^3"},
      {3, "b", "p=7", "X^6\\pm\\sqrt{pq}X^5+3qX^4\\pm q\\sqrt{pq}X^3+3q^2X^2\\pm q^2\\sqrt{pq}X+q^3"},
      {4, "a", "", "X^8+q^4"},
      {4, "b", "", "X^8- qX^6+q^2X^4- q^3X^2+q^4"},
      {4, "c", "p \\neq 5", "X^8+ qX^6+q^2X^4+q^3X^2+q^4"},
      {4, "d", "p \\neq 2", "X^8-q^2X^4+q^4"},
      {4, "e", "p=3",
       "X^8\\pm \\sqrt{3q}X^7+2qX^6\\pm q \\sqrt{3q}X^5+q^2X^4\\pm q^2 \\sqrt{3q}X^3+2q^3X^2\\pm q^3\\sqrt{3q}X+q^4"},
      {4, "f", "p=5",
       "X^8\\pm \\sqrt{5q}X^7+2qX^6\\pm q \\sqrt{5q}X^5+3q^2X^4\\pm q^2 \\sqrt{5q}X^3+2q^3X^2\\pm q^3\\sqrt{5q}X+q^4"},
      {4, "g", "p=2", "X^8\\pm \\sqrt{2q}X^7+qX^6-q^2X^4+q^3X^2 \\pm q^3\\sqrt{2q}X+q^4"},
      {5, "a", "",
       "X^{10} \\mp \\sqrt{11q}X^9 +5qX^8  \\mp q\\sqrt{11q}X^7 -q^2 X^6 \\pm q^2\\sqrt{11q}X^5 -q^3X^4 \\mp "
       "q^3\\sqrt{11q}X^3 + 5q^4X^2 \\mp q^4\\sqrt{11q}X +q^5"},
      {6, "a", "", "X^{12} + qX^{10}+q^2X^8 + q^3X^6+q^4X^4 + q^5X^2+q^6"},
      {6, "b", "p \\neq 7", "X^{12} - qX^{10}+q^2X^8 - q^3X^6+q^4X^4 - q^5X^2+q^6"},
      {6, "c", "", "X^{12}+q^3X^6+q^6"},
      {6, "d", "p \\neq 3", "X^{12}-q^3X^6+q^6"},
      {6, "e", "",
       "X^{12} \\pm \\sqrt{13q}X^{11} + 7qX^{10} \\pm  3q\\sqrt{13q}X^9 + 15q^2X^8 \\pm 5q^2 \\sqrt{13q}X^7+19q^3X^6 "
       "\\pm 5q^3 \\sqrt{13q}X^5 + 15q^4X^4\\pm 3q^4\\sqrt{13q}X^3 + 7q^5X^2 \\pm  q^5 \\sqrt{13q}X + q^6"},
      {6, "f", "",
       "X^{12} \\pm \\sqrt{3q}X^{11} + 2qX^{10} \\pm q\\sqrt{3q}X^9 + q^2X^8 -q^3 X^6 + q^4X^4 \\pm q^4\\sqrt{3q}X^3 + "
       "2q^5X^2 \\pm q^5\\sqrt{3q}X + q^6"},
      {6, "g", "",
       "X^{12} \\pm \\sqrt{7q}X^{11} +4qX^{10} \\pm q\\sqrt{7q}X^9 - q^2X^8 \\mp 2q^2\\sqrt{7q}X^7 - 7q^3X^6 \\mp  "
       "2q^3\\sqrt{7q}X^5 -q^4 X^4  \\pm q^4\\sqrt{7q}X^3 +4q^5X^2 \\pm q^5 \\sqrt{7q}X + q^6"},
      {6, "h", "",
       "X^{12} \\mp \\sqrt{2q}X^{11} + qX^{10} -q^2 X^8 \\pm q^2\\sqrt{2q}X^7 - q^3X^6 \\pm q^3\\sqrt{2q}X^5 - q^4X^4 + "
       "q^5X^2 \\mp q^5\\sqrt{2q}X + q^6"},
      {6, "i", "", "X^{12} \\pm q\\sqrt{2q}X^9 +q^3 X^6 \\pm q^4\\sqrt{2q}X^3 + q^6"},
  };
  return rows;
}

// q = p^n with n even.
inline const std::vector<Row>& even_rows() {
  static const std::vector<Row> rows = {
      {1, "a", "p \\not\\equiv 1 \\mod  3", "X^2+X\\sqrt{q}+q"},
      {1, "b", "p\\not\\equiv  1 \\mod 4", "X^2+q"},
      {1, "c", "p \\not\\equiv  1 \\mod 6", "X^2-X\\sqrt{q}+q"},
      {1, "d", "", "(X\\pm \\sqrt{q})^2"},
      {2, "a", "p \\equiv 1 \\mod  3", "(X^2+X\\sqrt{q}+q)^2"},
      {2, "b", "p \\equiv  1 \\mod 4", "(X^2+q)^2"},
      {2, "c", "p \\equiv  1 \\mod 6", "(X^2-X\\sqrt{q}+q)^2"},
      {2, "d", "p \\not\\equiv 1 \\mod 5", "X^4+\\sqrt{q}X^3+qX^2+q^{3/2}X+q^2"},
      {2, "e", "p \\not\\equiv 1 \\mod  8", "X^4+q^2"},
      {2, "f", "p \\not\\equiv 1 \\mod   10", "X^4-\\sqrt{q}X^3+qX^2-q^{3/2}X+q^2"},
      {2, "g", "p \\not\\equiv 1 \\mod 12", "X^4-qX^2+q^2"},
      {3, "a", "p \\not\\equiv 1,~2,~4 \\mod  7", "X^6+\\sqrt{q}X^5+qX^4+q^{3/2}X^3+q^2X^2+q^{5/2}X+q^3"},
      {3, "b", "p \\not\\equiv 1~,~4,~7 \\mod  9", "X^6+q^{3/2}X^3+q^3"},
      {3, "c", "p \\not\\equiv 1,~9,~11 \\mod 14", "X^6-\\sqrt{q}X^5+qX^4-q^{3/2}X^3+q^2X^2-q^{5/2}X+q^3"},
      {3, "d", "p \\not\\equiv 1,7,13 \\mod  18", "X^6-q^{3/2}X^3+q^3"},
      {4, "a", "p \\equiv 1 \\mod 5", "(X^4+\\sqrt{q}X^3+qX^2+q^{3/2}X+q^2)^2"},
      {4, "b", "p \\equiv 1 \\mod  8", "(X^4+q^2)^2"},
      {4, "c", "p \\equiv 1 \\mod   10", "(X^4-\\sqrt{q}X^3+qX^2-q^{3/2}X+q^2)^2"},
      {4, "d", "p \\equiv 1 \\mod 12", "(X^4-qX^2+q^2)^2"},
      {4, "e", "p \\not\\equiv 1 \\mod 15", "X^8-\\sqrt{q}X^7+q^{3/2}X^5-q^2X^4+q^{5/2}X^3-q^{7/2}X+q^4"},
      {4, "f", "p \\not\\equiv 1 \\mod 16", "X^8+q^4"},
      {4, "g", "p \\not\\equiv 1 \\mod 20", "X^8-qX^6+q^2X^4-q^3X^2+q^4"},
      {4, "h", "p \\not\\equiv 1 \\mod 24", "X^8-q^2X^4+q^4"},
      {4, "i", "p \\not\\equiv 1 \\mod 30", "X^8+\\sqrt{q}X^7-q^{3/2}X^5-q^2X^4-q^{5/2}X^3+q^{7/2}X+q^4"},
      {5, "a", "p \\not\\equiv 1,3,4,5,9 \\mod 11",
       "X^{10}+\\sqrt{q}X^9+qX^8+q^{3/2}X^7+q^2X^6+q^{5/2}X^5+q^3X^4+q^{7/2}X^3+q^4X^2+q^{9/2}X+q^5"},
      {5, "b", "p \\not\\equiv 1,3,5,9,15 \\mod 22",
       "X^{10}-\\sqrt{q}X^9+qX^8-q^{3/2}X^7+q^2X^6-q^{5/2}X^5+q^3X^4-q^{7/2}X^3+q^4X^2-q^{9/2}X+q^5"},
      {6, "a", "p \\equiv 1~,~2,~4 \\mod  7", "(X^6+\\sqrt{q}X^5+qX^4+q^{3/2}X^3+q^2X^2+q^{5/2}X+q^3)^2"},
      {6, "b", "p \\equiv 1~,~4,~7 \\mod  9", "(X^6+q^{3/2}X^3+q^3)^2"},
      {6, "c", "p \\equiv 1~,~9,~11 \\mod 14", "(X^6-\\sqrt{q}X^5+qX^4-q^{3/2}X^3+q^2X^2-q^{5/2}X+q^3)^2"},
      {6, "d", "p \\equiv 1,7,13 \\mod 18", "(X^6-q^{3/2}X^3+q^3)^2"},
      {6, "e", "p \\not\\equiv 1,3,9 \\mod 13",
       "X^{12}+\\sqrt{q}X^{11}+qX^{10}+q^{3/2}X^9+q^2X^8+q^{5/2}X^7+q^3X^6+q^{7/2}X^5+q^4X^4+q^{9/2}X^3+q^5X^2+q^{11/"
       "2}X+q^6"},
      {6, "f", "p \\not\\equiv 1,4,16 \\mod 21",
       "X^{12}-\\sqrt{q}X^{11}+q^{3/2}X^9-q^2X^8+q^3X^6-q^4X^4+q^{9/2}X^3-q^{11/2}X+q^6"},
      {6, "g", "p \\not\\equiv 1, 3, 9 \\mod 26",
       "X^{12}-\\sqrt{q}X^{11}+qX^{10}-q^{3/2}X^9+q^2X^8-q^{5/2}X^7+q^3X^6-q^{7/2}X^5+q^4X^4-q^{9/2}X^3+q^5X^2-q^{11/"
       "2}X+q^6"},
      {6, "h", "p \\not\\equiv 1,9, 25 \\mod 28", "X^{12}-qX^{10}+q^2X^8-q^3X^6+q^4X^4-q^5X^2+q^6"},
      {6, "i", "p \\not\\equiv 1, 13, 25 \\mod 36", "X^{12}-q^3X^6+q^6"},
      {6, "j", "p \\not\\equiv 1, 25, 37 \\mod 42",
       "X^{12}+\\sqrt{q}X^{11}-q^{3/2}X^9-q^2X^8+q^3X^6-q^4X^4-q^{9/2}X^3+q^{11/2}X+q^6"},
  };
  return rows;
}

/// A known correction to the even-exponent table: at this prime, the class
/// listed under (from_g, from_label) is really the square listed under
/// (to_g, to_label), whose stated congruence excludes the prime.
struct Erratum {
  std::int64_t p;
  int from_g;
  const char* from_label;
  int to_g;
  const char* to_label;
  const char* reason;
};

inline const std::vector<Erratum>& even_errata() {
  // Phi_14 at p = 2: ord_7(2) = 3 and 14 = 2 * 7 give local order 3 * (2 - 1),
  // odd, so e = 2 and the class has dimension 6, not 3.
  static const std::vector<Erratum> errata = {
      {2, 3, "c", 6, "c", "p=2 divides 14; local order ord_7(2)*(2-1) = 3 is odd, so e = 2"},
  };
  return errata;
}

struct Instantiated {
  std::vector<IntegerPolynomial> polys;  // characteristic polynomials, canonical order
  std::vector<std::string> notes;        // errata applied
};

inline Instantiated instantiate(bool odd_exponent, std::int64_t p, int n, int g) {
  const BigInt q = ssav::ipow(ssav::big(p), static_cast<unsigned long>(n));
  Instantiated out;
  auto add_row = [&](const Row& row) {
    for (auto& poly : latex::evaluate(row.poly, p, q)) out.polys.push_back(poly);
  };
  const auto& rows = odd_exponent ? odd_rows() : even_rows();
  for (const Row& row : rows) {
    if (row.g != g) continue;
    bool moved_away = false;
    if (!odd_exponent) {
      for (const auto& err : even_errata()) {
        if (err.p == p && err.from_g == g && std::string(err.from_label) == row.label) moved_away = true;
      }
    }
    if (moved_away) {
      out.notes.push_back("erratum: dim " + std::to_string(g) + " row (" + row.label + ") does not apply at p=" +
                          std::to_string(p));
      continue;
    }
    if (latex::condition_holds(row.condition, p)) add_row(row);
  }
  if (!odd_exponent) {
    for (const auto& err : even_errata()) {
      if (err.p != p || err.to_g != g) continue;
      for (const Row& row : rows) {
        if (row.g == g && std::string(row.label) == err.to_label) {
          out.notes.push_back("erratum: dim " + std::to_string(g) + " row (" + row.label + ") applies at p=" +
                              std::to_string(p) + " (" + err.reason + ")");
          add_row(row);
        }
      }
    }
  }
  std::sort(out.polys.begin(), out.polys.end(), ssav::CanonicalLess{});
  return out;
}

}  // namespace golden
