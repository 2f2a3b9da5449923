// minorbit: construct, promote, invert and verify tableaux in the minimal
// promotion orbit of a rectangle.
//
// Exit codes: 0 ok, 1 verification failure, 2 usage, 3 experimental path
// not enabled, 4 malformed tableau, 5 tableau not in O_n.

#include <cstdio>
#include <iostream>
#include <limits>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "minorbit/errors.hpp"
#include "minorbit/io.hpp"
#include "minorbit/orbits.hpp"
#include "minorbit/verify.hpp"

using namespace minorbit;

namespace {

enum Exit { kOk = 0, kFailed = 1, kUsage = 2, kExperimental = 3, kParse = 4, kDomain = 5 };

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  int n = 0;
  int m = 0;
  std::string w;
  std::string diagonal;
  std::string choice_file;
  std::string via = "slides";
  bool experimental = false;
  std::string format = "json";
  std::string report_format = "text";
  std::string tableau_file;
  long long steps = 1;
  std::string suite;
  bool all_choices = false;
  bool all_diagonals = false;
  std::uint64_t seed = 1;
  bool allow_large = false;
};

Rectangle rectangle(const Options& o) {
  if (o.n < 1 || o.m < 1) throw UsageError("--n and --m must be positive");
  return Rectangle(o.n, o.m, Orientation::n_rows);
}

Permutation permutation(const Options& o) {
  Permutation w;
  try {
    w = parse_permutation(o.w);
  } catch (const ParseError& e) {
    throw UsageError(std::string("--w: ") + e.what());
  }
  if (w.size() != o.n) throw UsageError("--w must be a permutation of 1.." + std::to_string(o.n));
  return w;
}

Partition partition_flag(const std::string& text, const char* flag) {
  try {
    return parse_partition(text);
  } catch (const ParseError& e) {
    throw UsageError(std::string(flag) + ": " + e.what());
  }
}

EnumerationLimits limits(const Options& o) {
  EnumerationLimits l;
  if (o.allow_large) {
    l.max_cells = 32;
    l.max_tableaux = std::numeric_limits<std::uint64_t>::max();
  }
  return l;
}

void print_tableau(const PartialTableau& t, const std::string& format) {
  if (format == "grid") std::cout << tableau_to_grid(t);
  else std::cout << tableau_to_json(t) << "\n";
}

PartialTableau load_tableau(const std::string& path) {
  PartialTableau t = read_tableau_file(path);
  try {
    rectangle_of(t);
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  }
  if (!is_standard_normalized(t)) throw ParseError("tableau is not standard with entries 1..mn");
  return t;
}

int cmd_construct(const Options& o) {
  const Rectangle rect = rectangle(o);
  const Permutation w = permutation(o);
  if (o.via == "insertion") {
    if (rect.experimental() && !o.experimental)
      throw ExperimentalRequired("m < n is experimental; pass --experimental to use the insertion route");
    std::optional<Partition> plus;
    if (!o.diagonal.empty()) plus = partition_flag(o.diagonal, "--diagonal");
    const Construction built = construct_tw_via_insertion(w, rect, plus);
    print_tableau(built.tableau, o.format);
    if (built.experimental)
      std::cerr << "experimental: promotion order " << built.promotion_order
                << (rect.n() % built.promotion_order == 0 ? " (divides n)" : " (does not divide n)") << "\n";
    return kOk;
  }
  if (rect.experimental())
    throw ExperimentalRequired("m < n: use --via insertion --experimental");
  std::optional<Diagonal> diag;
  if (!o.diagonal.empty()) {
    diag = Diagonal::from_lambda_plus(partition_flag(o.diagonal, "--diagonal"), rect);
    if (!diag) throw UsageError("--diagonal " + o.diagonal + " is not a diagonal of " + to_string(rect));
  }
  std::optional<ChoiceTableau> choice;
  if (!o.choice_file.empty()) choice = read_tableau_file(o.choice_file);
  print_tableau(construct_tw(w, rect, diag, choice), o.format);
  return kOk;
}

int cmd_promote(const Options& o) {
  print_tableau(promotion_power(load_tableau(o.tableau_file), o.steps), o.format);
  return kOk;
}

int cmd_invert(const Options& o) {
  const PartialTableau t = load_tableau(o.tableau_file);
  std::optional<Diagonal> diag;
  if (!o.diagonal.empty()) {
    const Rectangle rect = rectangle_of(t);
    diag = Diagonal::from_lambda_plus(partition_flag(o.diagonal, "--diagonal"), rect);
    if (!diag) throw UsageError("--diagonal " + o.diagonal + " is not a diagonal of " + to_string(rect));
  }
  std::cout << to_string(invert(t, diag)) << "\n";
  return kOk;
}

int cmd_verify(const Options& o) {
  const auto suite = parse_suite(o.suite);
  if (!suite) throw UsageError("unknown suite '" + o.suite + "'");
  SuiteOptions opts;
  opts.all_choices = o.all_choices;
  opts.all_diagonals = o.all_diagonals;
  opts.seed = o.seed;
  opts.limits = limits(o);
  const Report report = run_suite(rectangle(o), *suite, opts);
  std::cout << (o.report_format == "json" ? report_to_json(report) + "\n" : to_text(report));
  return report.passed() ? kOk : kFailed;
}

int cmd_csp(const Options& o) {
  const Rectangle rect = rectangle(o);
  const OrbitTable table = orbit_table(rect, limits(o));
  bool ok = true;
  std::cout << "r\t|O_r|\tF(zeta^r)\n";
  for (const auto& row : csp_table(rect, table)) {
    std::cout << row.r << "\t" << row.orbit_count << "\t" << row.f_value;
    if (!row.matches()) {
      std::cout << "\tMISMATCH";
      ok = false;
    }
    std::cout << "\n";
  }
  return ok ? kOk : kFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Minimal promotion orbits of rectangular standard tableaux"};
  app.require_subcommand(1);
  Options o;

  auto add_dims = [&](CLI::App* sub) {
    sub->add_option("--n", o.n, "number of rows")->required();
    sub->add_option("--m", o.m, "number of columns")->required();
  };
  auto* construct = app.add_subcommand("construct", "print T_w");
  add_dims(construct);
  construct->add_option("--w", o.w, "permutation in one-line notation")->required();
  construct->add_option("--diagonal", o.diagonal, "lambda_plus of the diagonal, e.g. 5431");
  construct->add_option("--choice-tableau", o.choice_file, "tableau file of the choice tableau on lambda_minus")
      ->check(CLI::ExistingFile);
  construct->add_option("--via", o.via, "construction route")->check(CLI::IsMember({"slides", "insertion"}));
  construct->add_flag("--experimental", o.experimental, "allow m < n through the insertion route");

  auto* promote = app.add_subcommand("promote", "apply promotion K times");
  promote->add_option("--tableau", o.tableau_file, "tableau file")->required();
  promote->add_option("--steps", o.steps, "number of promotions, negative for inverse");

  auto* inv = app.add_subcommand("invert", "recover w from a tableau of O_n");
  inv->add_option("--tableau", o.tableau_file, "tableau file")->required();
  inv->add_option("--diagonal", o.diagonal, "lambda_plus of the diagonal to read");

  auto* verify = app.add_subcommand("verify", "run a verification suite");
  add_dims(verify);
  verify->add_option("--suite", o.suite, "bijection, independence, csp, haiman, propositions or all")->required();
  verify->add_flag("--all-choices", o.all_choices, "sweep every choice tableau");
  verify->add_flag("--all-diagonals", o.all_diagonals, "sweep every diagonal");
  verify->add_option("--seed", o.seed, "random seed");
  verify->add_flag("--allow-large", o.allow_large, "lift the enumeration caps");

  auto* csp = app.add_subcommand("csp", "compare |O_r| with F(zeta^r)");
  add_dims(csp);
  csp->add_flag("--allow-large", o.allow_large, "lift the enumeration caps");

  for (auto* sub : {construct, promote})
    sub->add_option("--format", o.format, "json or grid")->check(CLI::IsMember({"json", "grid"}));
  verify->add_option("--format", o.report_format, "text or json")->check(CLI::IsMember({"text", "json"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*construct) return cmd_construct(o);
    if (*promote) return cmd_promote(o);
    if (*inv) return cmd_invert(o);
    if (*verify) return cmd_verify(o);
    if (*csp) return cmd_csp(o);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const CapExceeded& e) {
    std::cerr << "error: " << e.what() << " (use --allow-large)\n";
    return kUsage;
  } catch (const ExperimentalRequired& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExperimental;
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kParse;
  } catch (const NotInMinimalOrbit& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kDomain;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kDomain;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kFailed;
  }
  return kUsage;
}
