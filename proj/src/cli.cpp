#include "ssav/cli.hpp"

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "ssav/census.hpp"
#include "ssav/errors.hpp"
#include "ssav/htclassify.hpp"
#include "ssav/numthy.hpp"
#include "ssav/oracle.hpp"
#include "ssav/psipoly.hpp"
#include "ssav/serialize.hpp"

namespace ssav {

namespace {

struct FieldArgs {
  std::int64_t p = 0;
  int n = 0;
  int g = 0;
};

void add_field_options(CLI::App* cmd, FieldArgs& args, bool with_g) {
  cmd->add_option("--p", args.p, "characteristic (prime)")->required();
  cmd->add_option("--n", args.n, "exponent, q = p^n")->required();
  if (with_g) cmd->add_option("--g", args.g, "dimension")->required();
}

void print_records(std::ostream& out, const std::vector<IsogenyClassRecord>& records, const std::string& format) {
  if (format == "json") {
    for (const auto& rec : records) out << to_json(rec).dump() << '\n';
  } else if (format == "csv") {
    out << csv_header() << '\n';
    for (const auto& rec : records) out << to_csv_row(rec) << '\n';
  } else {
    for (const auto& rec : records) out << to_text_line(rec) << '\n';
  }
}

std::string failed_checks(const RecordCheck& c) {
  std::string s;
  auto add = [&s](bool ok, const char* name) {
    if (ok) return;
    if (!s.empty()) s += ',';
    s += name;
  };
  add(c.structured, "structure");
  add(c.supersingular, "supersingular");
  add(c.modulus, "modulus");
  add(c.dimension, "dimension");
  if (!c.error.empty()) s += (s.empty() ? "" : ",") + c.error;
  return s;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Simple supersingular abelian varieties over finite fields"};
  app.name("ssav");
  app.require_subcommand(1);

  FieldArgs field;
  std::string format = "text";
  auto* enumerate_cmd = app.add_subcommand("enumerate", "list isogeny classes of dimension g over F_q");
  add_field_options(enumerate_cmd, field, true);
  enumerate_cmd->add_option("--format", format, "text, json or csv")
      ->check(CLI::IsMember({"text", "json", "csv"}));

  auto* count_cmd = app.add_subcommand("count", "number of isogeny classes of dimension g over F_q");
  add_field_options(count_cmd, field, true);

  int g_only = 0;
  auto* exists_cmd = app.add_subcommand("exists", "existence verdict for dimension g over all finite fields");
  exists_cmd->add_option("--g", g_only, "dimension")->required();

  int max_g = 0;
  auto* gaps_cmd = app.add_subcommand("gaps", "dimensions without simple supersingular abelian varieties");
  gaps_cmd->add_option("--max", max_g, "largest dimension")->required();

  std::int64_t psi_p = 0;
  std::int64_t psi_t = 0;
  std::string two;
  auto* psi_cmd = app.add_subcommand("psi", "half-cyclotomic polynomial Psi_{p,t} or Psi_{+-2,t}");
  auto* psi_p_opt = psi_cmd->add_option("--p", psi_p, "odd prime");
  auto* two_opt = psi_cmd->add_option("--two", two, "+ for Psi_{2,t}, - for Psi_{-2,t}")->check(CLI::IsMember({"+", "-"}));
  psi_p_opt->excludes(two_opt);
  psi_cmd->add_option("--t", psi_t, "odd t")->required();

  std::int64_t cyclo_m = 0;
  auto* cyclo_cmd = app.add_subcommand("cyclotomic", "cyclotomic polynomial Phi_m");
  cyclo_cmd->add_option("--m", cyclo_m, "index")->required();

  std::int64_t phi_k = 0;
  auto* phi_cmd = app.add_subcommand("inverse-phi", "all m with phi(m) = k");
  phi_cmd->add_option("--k", phi_k, "totient value")->required();

  int table_max = 0;
  auto* table_cmd = app.add_subcommand("table", "summary of dimensions 1..max-g over F_q");
  add_field_options(table_cmd, field, false);
  table_cmd->add_option("--max-g", table_max, "largest dimension")->required();

  double tol = 1e-6;
  auto* verify_cmd = app.add_subcommand("verify", "run every oracle check on the enumeration");
  add_field_options(verify_cmd, field, true);
  verify_cmd->add_option("--tol", tol, "relative root-modulus tolerance");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      app.exit(e, out, err);
      return 0;
    }
    err << "usage error: " << e.what() << '\n';
    return 2;
  }

  try {
    if (*enumerate_cmd) {
      print_records(out, enumerate(field.p, field.n, field.g), format);
    } else if (*count_cmd) {
      out << count(field.p, field.n, field.g) << '\n';
    } else if (*exists_cmd) {
      out << to_string(exists_dimension(g_only)) << '\n';
    } else if (*gaps_cmd) {
      for (int g : gap_dimensions(max_g)) out << g << '\n';
    } else if (*psi_cmd) {
      if (psi_p_opt->count() == 0 && two_opt->count() == 0) {
        err << "usage error: psi needs --p or --two\n";
        return 2;
      }
      const auto poly = two_opt->count() > 0 ? psi_two(psi_t, two == "+" ? TwoSign::Plus : TwoSign::Minus)
                                             : psi(psi_p, psi_t);
      out << poly.to_string() << '\n';
    } else if (*cyclo_cmd) {
      out << cyclotomic(cyclo_m).to_string() << '\n';
    } else if (*phi_cmd) {
      const auto ms = inverse_phi(phi_k);
      for (std::size_t i = 0; i < ms.size(); ++i) out << (i ? " " : "") << ms[i];
      out << '\n';
    } else if (*table_cmd) {
      for (int g = 1; g <= table_max; ++g) {
        const auto records = enumerate(field.p, field.n, g);
        out << "Dimension " << g << ": " << records.size() << '\n';
        for (const auto& rec : records) out << "  " << to_text_line(rec) << '\n';
      }
    } else if (*verify_cmd) {
      const auto records = enumerate(field.p, field.n, field.g);
      const auto checks = verify_records(records, tol);
      std::size_t passed = 0;
      for (std::size_t i = 0; i < records.size(); ++i) {
        if (checks[i].ok()) {
          ++passed;
          out << "OK   " << to_text_line(records[i]) << '\n';
        } else {
          out << "FAIL " << to_text_line(records[i]) << " [" << failed_checks(checks[i]) << "]\n";
        }
      }
      out << "verified " << passed << '/' << records.size() << '\n';
      return passed == records.size() ? 0 : 1;
    }
  } catch (const Error& e) {
    err << e.name() << ": " << e.what() << '\n';
    return 1;
  }
  return 0;
}

}  // namespace ssav
