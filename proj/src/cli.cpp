#include "sumsys/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "sumsys/arith.hpp"
#include "sumsys/counting.hpp"
#include "sumsys/io.hpp"
#include "sumsys/jof.hpp"
#include "sumsys/systems.hpp"

namespace sumsys::cli {

namespace {

using nlohmann::json;

enum class Format { kJson, kPlain };

struct Options {
  Format format = Format::kJson;

  // count
  std::optional<std::int64_t> count_n;
  std::optional<int> count_m;
  bool all_m = false;
  bool unordered = false;
  bool brute_force = false;
  std::string count_tuple;

  // enumerate
  std::string enum_tuple;
  std::optional<std::size_t> limit;

  // build
  std::string jof;
  bool centred = false;
  bool sum_and_distance = false;

  // verify
  std::string file;

  // table
  std::int64_t max_n = 32;
  int max_m = 4;

  // divisor-fn
  std::string kind;
  int j = 0;
  int r = 0;
  std::int64_t fn_n = 1;

  // check
  std::int64_t check_n = 2;
  int check_m = 2;
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

void emit(std::ostream& out, const json& doc) { out << doc.dump() << '\n'; }

int run_count(const Options& o, std::ostream& out) {
  if (!o.count_tuple.empty()) {
    if (o.count_n || o.count_m || o.all_m || o.unordered || o.brute_force) {
      throw UsageError("--tuple cannot be combined with --n, --m, --all-m, --unordered or --brute-force");
    }
    const TargetTuple tuple = parse_tuple(o.count_tuple);
    const Integer count = count_for_tuple(tuple);
    if (o.format == Format::kPlain) {
      out << count << '\n';
    } else {
      emit(out, {{"tuple", tuple.parts()}, {"N", tuple.product()}, {"count", integer_to_json(count)},
                 {"method", to_string(CountMethod::kClosedForm)}});
    }
    return kSuccess;
  }
  if (!o.count_n) throw UsageError("count needs --n N or --tuple n1,n2,...");
  if (o.count_m.has_value() == o.all_m) throw UsageError("count --n needs exactly one of --m M or --all-m");
  const std::int64_t target = *o.count_n;
  if (target < 1) throw DomainError("N must be a positive integer");

  auto one = [&](int m) {
    const CountResult c = o.brute_force ? brute_force_count(target, m) : count_m_part(target, m);
    json row = {{"m", m}, {"count", integer_to_json(c.value)}, {"method", to_string(c.method)}};
    if (o.unordered) {
      const Integer scale = factorial(m);
      if (c.value % scale != 0) throw ConsistencyError("m! does not divide the ordered count");
      row["unordered"] = integer_to_json(c.value / scale);
    }
    return row;
  };

  if (o.all_m) {
    json rows = json::array();
    for (int m = 1; m <= big_omega(target); ++m) rows.push_back(one(m));
    if (o.format == Format::kPlain) {
      for (const auto& row : rows) {
        out << row["m"] << ' ' << row["count"];
        if (o.unordered) out << ' ' << row["unordered"];
        out << '\n';
      }
    } else {
      emit(out, {{"N", target}, {"counts", rows}});
    }
    return kSuccess;
  }

  if (*o.count_m < (o.brute_force ? 1 : 0)) throw DomainError("m out of range");
  json row = one(*o.count_m);
  if (o.format == Format::kPlain) {
    out << row["count"];
    if (o.unordered) out << ' ' << row["unordered"];
    out << '\n';
  } else {
    row["N"] = target;
    emit(out, row);
  }
  return kSuccess;
}

int run_enumerate(const Options& o, std::ostream& out) {
  const TargetTuple tuple = parse_tuple(o.enum_tuple);
  std::vector<std::string> jofs;
  bool truncated = false;
  std::size_t seen = 0;
  for_each_jof(tuple, [&](const Jof& jof) {
    if (o.limit && jofs.size() == *o.limit) {
      truncated = true;
      return false;
    }
    if (++seen > kDefaultEnumerationCap) {
      throw ResourceError("joint ordered factorisation count exceeds cap of " +
                          std::to_string(kDefaultEnumerationCap));
    }
    jofs.push_back(to_string(jof));
    return true;
  });
  if (o.format == Format::kPlain) {
    for (const auto& j : jofs) out << j << '\n';
  } else {
    emit(out, {{"tuple", tuple.parts()},
               {"N", tuple.product()},
               {"count", integer_to_json(count_for_tuple(tuple))},
               {"truncated", truncated},
               {"jofs", jofs}});
  }
  return kSuccess;
}

void print_plain_components(std::ostream& out, std::span<const Component> comps) {
  for (const auto& comp : comps) {
    for (std::size_t i = 0; i < comp.size(); ++i) out << (i ? " " : "") << comp[i];
    out << '\n';
  }
}

int run_build(const Options& o, std::ostream& out) {
  if (o.centred && o.sum_and_distance) {
    throw UsageError("--centred and --sum-and-distance are mutually exclusive");
  }
  const Jof jof = parse_jof(o.jof);
  json doc;
  if (o.sum_and_distance) {
    const SumAndDistanceSystem b = to_sum_and_distance(build_centred(jof));
    doc = to_json(b);
    if (o.format == Format::kPlain) print_plain_components(out, b.doubled_components);
  } else if (o.centred) {
    const CentredSumSystem c = build_centred(jof);
    doc = to_json(c);
    if (o.format == Format::kPlain) print_plain_components(out, c.doubled_components());
  } else {
    const SumSystem s = build_sum_system(jof);
    doc = to_json(s);
    if (o.format == Format::kPlain) print_plain_components(out, s.components());
  }
  if (o.format == Format::kJson) emit(out, doc);
  return kSuccess;
}

int run_verify(const Options& o, std::ostream& out) {
  std::stringstream buffer;
  if (o.file == "-") {
    buffer << std::cin.rdbuf();
  } else {
    std::ifstream in(o.file);
    if (!in) throw UsageError("cannot open " + o.file);
    buffer << in.rdbuf();
  }
  json doc;
  try {
    doc = json::parse(buffer.str());
  } catch (const json::parse_error& e) {
    throw UsageError(std::string("invalid JSON: ") + e.what());
  }

  std::string kind = "unknown";
  Verdict verdict;
  try {
    const AnySystem system = system_from_json(doc);
    kind = std::visit(
        [](const auto& s) -> std::string {
          using T = std::decay_t<decltype(s)>;
          if constexpr (std::is_same_v<T, SumSystem>) return "sum";
          if constexpr (std::is_same_v<T, CentredSumSystem>) return "centred";
          return "sum-and-distance";
        },
        system);
    verdict = verify(system);
  } catch (const DomainError& e) {
    verdict = Verdict::fail(e.what());
  }
  if (o.format == Format::kPlain) {
    out << (verdict.ok ? "verified" : "failed: " + verdict.diagnostic) << '\n';
  } else {
    json report = {{"verified", verdict.ok}, {"kind", kind}};
    if (!verdict.ok) report["diagnostic"] = verdict.diagnostic;
    emit(out, report);
  }
  return verdict.ok ? kSuccess : kVerificationFailed;
}

int run_table(const Options& o, std::ostream& out) {
  if (o.max_n < 1 || o.max_m < 1) throw DomainError("--max-n and --max-m must be positive");
  out << "N,m,count\n";
  for (std::int64_t n = 1; n <= o.max_n; ++n) {
    for (int m = 1; m <= o.max_m; ++m) out << n << ',' << m << ',' << count_m_part(n, m).value << '\n';
  }
  return kSuccess;
}

int run_divisor_fn(const Options& o, std::ostream& out) {
  Integer value;
  if (o.kind == "d") {
    value = classical_divisor(o.j, o.fn_n);
  } else if (o.kind == "c") {
    value = nontrivial_divisor(o.j, o.fn_n);
  } else if (o.kind == "assoc") {
    value = associated_divisor(o.j, o.r, o.fn_n);
  } else {
    value = squarefree_ordered_count(o.j, o.fn_n);
  }
  if (o.format == Format::kPlain) {
    out << value << '\n';
  } else {
    json doc = {{"kind", o.kind}, {"j", o.j}, {"n", o.fn_n}, {"value", integer_to_json(value)}};
    if (o.kind == "assoc") doc["r"] = o.r;
    emit(out, doc);
  }
  return kSuccess;
}

int run_check(const Options& o, std::ostream& out) {
  const DivisorSumReport r = divisor_sum_check(o.check_n, o.check_m);
  struct Row {
    const char* name;
    const Integer& lhs;
    const Integer& rhs;
  };
  const Row rows[] = {
      {"ordered-recurrence", r.ordered, r.ordered_recurrence},
      {"ordered-mobius", r.ordered, r.ordered_mobius},
      {"unordered-recurrence", r.unordered, r.unordered_recurrence},
      {"unordered-mobius", r.unordered, r.unordered_mobius},
  };
  if (o.format == Format::kPlain) {
    for (const auto& row : rows) {
      out << row.name << ' ' << row.lhs << ' ' << row.rhs << ' ' << (row.lhs - row.rhs) << '\n';
    }
  } else {
    json relations = json::array();
    for (const auto& row : rows) {
      relations.push_back({{"relation", row.name},
                           {"lhs", integer_to_json(row.lhs)},
                           {"rhs", integer_to_json(row.rhs)},
                           {"residual", integer_to_json(row.lhs - row.rhs)}});
    }
    emit(out, {{"N", r.target}, {"m", r.parts}, {"relations", relations}, {"all_zero", r.all_zero()}});
  }
  return r.all_zero() ? kSuccess : kVerificationFailed;
}

}  // namespace

int run(std::span<const std::string> args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Construct, enumerate, verify and count sum systems", "sumsys"};
  app.require_subcommand(1);
  std::map<std::string, Format> formats{{"json", Format::kJson}, {"plain", Format::kPlain}};
  app.add_option("--format", o.format, "Output format (table always writes CSV)")
      ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));

  auto* count = app.add_subcommand("count", "Count m-part sum systems for N, or JOFs of a tuple");
  count->add_option("--n", o.count_n, "Target N");
  count->add_option("--m", o.count_m, "Number of parts");
  count->add_flag("--all-m", o.all_m, "Every m from 1 to Omega(N)");
  count->add_flag("--unordered", o.unordered, "Also report M_m(N) = N_m(N) / m!");
  count->add_flag("--brute-force", o.brute_force, "Count by enumerating JOFs");
  count->add_option("--tuple", o.count_tuple, "Cardinality tuple n1,n2,...");

  auto* enumerate = app.add_subcommand("enumerate", "List JOFs of a tuple in lexicographic order");
  enumerate->add_option("--tuple", o.enum_tuple, "Cardinality tuple n1,n2,...")->required();
  enumerate->add_option("--limit", o.limit, "Print at most K JOFs");

  auto* build = app.add_subcommand("build", "Build the system generated by a JOF");
  build->add_option("--jof", o.jof, "JOF as part:factor,part:factor,...")->required();
  build->add_flag("--centred", o.centred, "Centred system (doubled values)");
  build->add_flag("--sum-and-distance", o.sum_and_distance, "Sum-and-distance system (doubled values)");

  auto* verify_cmd = app.add_subcommand("verify", "Verify a system JSON file ('-' for stdin)");
  verify_cmd->add_option("--file", o.file, "Path to system JSON")->required();

  auto* table = app.add_subcommand("table", "CSV grid of N_m(N)");
  table->add_option("--max-n", o.max_n, "Largest N")->required();
  table->add_option("--max-m", o.max_m, "Largest m")->required();

  auto* divisor_fn = app.add_subcommand("divisor-fn", "Evaluate a divisor function");
  divisor_fn->add_option("--kind", o.kind, "d | c | assoc | sqfree")
      ->required()
      ->check(CLI::IsMember({"d", "c", "assoc", "sqfree"}));
  divisor_fn->add_option("--j", o.j, "Lower index (factor count)")->required();
  divisor_fn->add_option("--r", o.r, "Upper index for assoc");
  divisor_fn->add_option("--n", o.fn_n, "Argument")->required();

  auto* check = app.add_subcommand("check", "Divisor-sum relation residuals");
  check->add_option("--n", o.check_n, "Target N >= 2")->required();
  check->add_option("--m", o.check_m, "Number of parts >= 1")->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kSuccess;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kSuccess;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  }

  try {
    if (*count) return run_count(o, out);
    if (*enumerate) return run_enumerate(o, out);
    if (*build) return run_build(o, out);
    if (*verify_cmd) return run_verify(o, out);
    if (*table) return run_table(o, out);
    if (*divisor_fn) return run_divisor_fn(o, out);
    if (*check) return run_check(o, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const OverflowError& e) {
    err << "overflow: " << e.what() << '\n';
    return kResourceError;
  } catch (const ResourceError& e) {
    err << "resource limit: " << e.what() << '\n';
    return kResourceError;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kResourceError;
  }
  return kUsageError;
}

}  // namespace sumsys::cli
