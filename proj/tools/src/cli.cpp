#include "zoll_cli/cli.hpp"

#include <algorithm>
#include <fstream>
#include <ostream>

#include "CLI11.hpp"
#include "zoll/errors.hpp"
#include "zoll/expression.hpp"
#include "zoll/odot_basis.hpp"
#include "zoll/rt0.hpp"
#include "zoll_cli/report_io.hpp"
#include "zoll_cli/verify.hpp"

namespace zoll::cli {

namespace {

RT0Element read_element(const std::string& text) { return RT0Element::from_polynomial(parse_polynomial(text)); }

void emit_result(std::ostream& out, bool json, const RT0Element& x) {
  const std::string s = to_string(x.polynomial());
  if (json)
    out << nlohmann::json{{"result", s}}.dump() << "\n";
  else
    out << s << "\n";
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact computations in R[t0], the odot basis, E^s[M,b] and A M~0"};
  app.name("zoll");
  app.require_subcommand(1);
  bool json = false;
  app.add_flag("--json", json, "Machine-readable output");

  std::string x_text, y_text;
  bool components = false;
  auto* eval = app.add_subcommand("eval", "Normalize an R[t0] expression");
  eval->add_option("x", x_text, "Expression")->required();
  eval->add_flag("--components", components, "Print the components f_n of the element");
  eval->add_flag("--json", json, "Machine-readable output");

  auto* dot = app.add_subcommand("dot", "The commutative product x . y");
  dot->add_option("x", x_text)->required();
  dot->add_option("y", y_text)->required();
  dot->add_flag("--json", json, "Machine-readable output");

  auto* odot_cmd = app.add_subcommand("odot", "The product x (*) y");
  odot_cmd->add_option("x", x_text)->required();
  odot_cmd->add_option("y", y_text)->required();
  odot_cmd->add_flag("--json", json, "Machine-readable output");

  auto* iota_cmd = app.add_subcommand("iota", "The involution iota(x)");
  iota_cmd->add_option("x", x_text)->required();
  iota_cmd->add_flag("--json", json, "Machine-readable output");

  std::string which = "structure";
  auto* basis = app.add_subcommand("basis", "Expand x in an odot-word basis");
  basis->add_option("x", x_text)->required();
  basis->add_option("--which", which, "structure or iota-basis")
      ->check(CLI::IsMember({"structure", "iota-basis"}))
      ->capture_default_str();
  basis->add_flag("--json", json, "Machine-readable output");

  std::string suite;
  VerifyOptions vo;
  std::optional<std::string> report_path;
  auto* verify = app.add_subcommand("verify", "Run a verification suite");
  verify->add_option("suite", suite, "One of: ring, iota, odot, identity, dim, structure, super, vowa, "
                                     "important, operad-axioms, all")
      ->required();
  verify->add_option("--max-degree", vo.max_degree, "Degree bound");
  verify->add_option("--max-n", vo.max_n, "Level / power bound");
  verify->add_option("--max-arity", vo.max_arity, "Operad arity bound");
  verify->add_option("--dim", vo.dim, "Dimension of the built-in super spaces (1-4)");
  verify->add_option("--base", vo.base, "Base operad: trivial, rank2 or a config file");
  verify->add_option("--space", vo.space, "Super space config file");
  verify->add_option("--seed", vo.seed, "Seed for randomized checks")->capture_default_str();
  verify->add_option("--report", report_path, "Also write the JSON report to this file");
  verify->add_flag("--json", json, "Machine-readable output");

  auto* schema = app.add_subcommand("schema", "Print the JSON Schema of verify reports");

  std::string file;
  auto* validate = app.add_subcommand("validate", "Check a JSON report file against the schema");
  validate->add_option("file", file)->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*eval) {
      const RT0Element x = read_element(x_text);
      if (components) {
        const auto parts = x.components();
        if (json) {
          nlohmann::json arr = nlohmann::json::array();
          for (const auto& [n, p] : parts) arr.push_back({{"n", n}, {"polynomial", to_string(p)}});
          out << nlohmann::json{{"result", to_string(x.polynomial())}, {"components", arr}}.dump() << "\n";
        } else {
          if (parts.empty()) out << "0\n";
          for (const auto& [n, p] : parts) out << "n=" << n << ": " << to_string(p) << "\n";
        }
      } else {
        emit_result(out, json, x);
      }
    } else if (*dot) {
      emit_result(out, json, dot_mul(read_element(x_text), read_element(y_text)));
    } else if (*odot_cmd) {
      emit_result(out, json, odot(read_element(x_text), read_element(y_text)));
    } else if (*iota_cmd) {
      emit_result(out, json, iota(read_element(x_text)));
    } else if (*basis) {
      const OdotBasisKind kind = which == "structure" ? OdotBasisKind::structure : OdotBasisKind::iota;
      const RT0Element x = read_element(x_text);
      const OdotExpansion e = odot_basis_expand(x, kind);
      if (evaluate(e, kind) != x) throw InternalError("basis expansion does not re-evaluate to the input");
      if (json) {
        nlohmann::json terms = nlohmann::json::array();
        for (const auto& [c, w] : e)
          terms.push_back({{"coefficient", to_string(c)}, {"word", to_string(w, kind)}, {"exponents", w.exponents}});
        out << nlohmann::json{{"basis", which}, {"terms", terms}, {"text", to_string(e, kind)}}.dump() << "\n";
      } else {
        out << to_string(e, kind) << "\n";
      }
    } else if (*verify) {
      const VerdictReport report = run_suite(suite, vo);
      const nlohmann::json j = to_json(report);
      if (report_path) {
        std::ofstream f(*report_path);
        if (!f) throw UsageError("cannot write report to " + *report_path);
        f << j.dump(2) << "\n";
      }
      if (json)
        out << j.dump(2) << "\n";
      else
        out << format_text(report);
      return report.ok() ? 0 : 1;
    } else if (*schema) {
      out << report_schema().dump(2) << "\n";
    } else if (*validate) {
      std::ifstream f(file);
      if (!f) throw UsageError("cannot open " + file);
      nlohmann::json j;
      try {
        j = nlohmann::json::parse(f);
      } catch (const nlohmann::json::parse_error& e) {
        err << "error: " << file << ": " << e.what() << "\n";
        return 2;
      }
      const auto errs = validate_json(j, report_schema());
      for (const auto& e : errs) err << file << ": " << e << "\n";
      if (!errs.empty()) return 1;
      out << file << ": valid\n";
    }
  } catch (const InternalError& e) {
    err << "internal error: " << e.what() << "\n";
    return 1;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const MembershipError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const ConfigError& e) {
    err << "config error: " << e.what() << "\n";
    return 2;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}

}  // namespace zoll::cli
