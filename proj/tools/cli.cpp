#include "cli.hpp"

#include "bifree/bnc.hpp"
#include "bifree/error.hpp"
#include "bifree/io.hpp"
#include "bifree/oracle.hpp"
#include "bifree/transforms.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <functional>
#include <future>
#include <optional>
#include <ostream>

namespace bifree::cli {

namespace {

using nlohmann::json;

struct Options {
  // nc
  std::string nc_what;
  std::string nc_arg;
  bool diagram = false;
  bool count_only = false;
  // transform
  std::string transform_kind;
  std::string input;
  std::string method = "cumulant";
  bool normalize = false;
  // verify
  std::string suite;
  int tables = 0;
  std::uint64_t seed = 1;
  bool parallel = false;
  std::string right_order = "b1b2";
  // shared
  int order = 0;
  std::string format = "text";
};

json coefficients(const Series2& s) {
  json out = json::array();
  for (int total = 0; total <= s.order(); ++total) {
    for (int n = total; n >= 0; --n) {
      if (s(n, total - n) != 0) out.push_back({{"n", n}, {"m", total - n}, {"value", format_rational(s(n, total - n))}});
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// nc

int cmd_nc(const Options& o, std::ostream& out) {
  auto print_all = [&](const auto& items) {
    if (o.count_only) {
      out << items.size() << '\n';
      return kPass;
    }
    for (const auto& p : items) {
      out << to_string(p) << '\n';
      if (o.diagram) out << render_diagram(p) << '\n';
    }
    return kPass;
  };
  auto size_arg = [&] {
    try {
      return std::stoi(o.nc_arg);
    } catch (const std::exception&) {
      throw Error(ErrorCode::ParseError, "expected a size, got '" + o.nc_arg + "'");
    }
  };

  if (o.nc_what == "enumerate") return print_all(enumerate_nc(size_arg()));
  if (o.nc_what == "enumerate-prime") return print_all(enumerate_nc_prime(size_arg()));
  if (o.nc_what == "bnc") return print_all(enumerate_bnc(BNCShape::parse(o.nc_arg)));
  // kreweras
  const NCPartition pi(parse_partition(o.nc_arg));
  const NCPartition k = kreweras(pi);
  out << to_string(k) << '\n';
  if (o.diagram) out << render_diagram(pi) << '\n' << render_diagram(k);
  return kPass;
}

// ---------------------------------------------------------------------------
// transform

int cmd_transform(const Options& o, std::ostream& out, std::ostream& err) {
  PairDistribution d = load_pair(o.input);
  const Method method = o.method == "analytic" ? Method::Analytic : Method::Cumulant;
  const bool needs_left = o.transform_kind == "s";
  const bool needs_right = o.transform_kind != "r";

  if (o.normalize) {
    const Rational lambda = needs_left && d.kappa(1, 0) != 0 ? Rational(1 / d.kappa(1, 0)) : Rational(1);
    const Rational mu = needs_right && d.kappa(0, 1) != 0 ? Rational(1 / d.kappa(0, 1)) : Rational(1);
    d = rescale_pair(d, lambda, mu);
  }
  if ((needs_left && d.kappa(1, 0) != 1) || (needs_right && d.kappa(0, 1) != 1)) {
    err << "error: the " << o.transform_kind << "-transform needs "
        << (needs_left ? "kappa_{1,0} = kappa_{0,1} = 1" : "kappa_{0,1} = 1")
        << ". The transform is unchanged by rescaling a -> lambda a, b -> mu b "
           "(kappa_{n,m} -> lambda^n mu^m kappa_{n,m}); rerun with --normalize to rescale the input.\n";
    return kUsage;
  }

  Series2 s(0);
  if (o.transform_kind == "t") {
    s = partial_T(d, method);
  } else if (o.transform_kind == "s") {
    s = partial_S(d, method);
  } else {
    // Partial R-transform: the (l,r)-cumulant series without its constant term.
    s = series_C(d) - Series2::constant(d.trunc(), 1);
  }
  if (o.order > 0) {
    if (o.order > s.order()) {
      err << "error: order " << o.order << " needs a table truncated at " << d.trunc() + (o.order - s.order())
          << " or more\n";
      return kUsage;
    }
    s = s.truncated(o.order);
  }
  if (o.format == "json") {
    out << json{{"transform", o.transform_kind}, {"order", s.order()}, {"series", to_string(s)},
                {"coefficients", coefficients(s)}}
               .dump(2)
        << '\n';
  } else {
    out << to_string(s) << '\n';
  }
  return kPass;
}

// ---------------------------------------------------------------------------
// verify

struct IdentityInput {
  MultFn f;
  MultFn g;
  PairDistribution d;
};

struct TableResult {
  bool ok = true;
  json detail;
  std::string text;
};

// Runs job(i) for every table, concurrently when asked; results stay in table order.
std::vector<TableResult> run_tables(int count, bool parallel, const std::function<TableResult(int)>& job) {
  std::vector<TableResult> results;
  if (!parallel) {
    for (int i = 0; i < count; ++i) results.push_back(job(i));
    return results;
  }
  std::vector<std::future<TableResult>> futures;
  for (int i = 0; i < count; ++i) futures.push_back(std::async(std::launch::async, job, i));
  for (auto& f : futures) results.push_back(f.get());
  return results;
}

int cmd_verify(const Options& o, std::ostream& out) {
  RationalSampler rng(o.seed);
  std::function<TableResult(int)> job;
  int order = o.order;
  int tables = o.tables;
  // Inputs live here: the jobs below run after the branches that fill them.
  std::vector<BiFreeFamily> fams;
  std::vector<IdentityInput> inputs;
  std::optional<CheckReport> first;

  // Tables are drawn up front from one seeded stream so that --parallel cannot change them.
  if (o.suite == "t-mult" || o.suite == "s-mult") {
    const bool t = o.suite == "t-mult";
    if (order <= 0) order = t ? 6 : 4;
    if (tables <= 0) tables = 20;
    const RightOrder ro = o.right_order == "b2b1" ? RightOrder::B2B1 : RightOrder::B1B2;
    for (int i = 0; i < tables; ++i) {
      fams.push_back(random_family(rng, order + (t ? 1 : 2), t ? Normalization::RightMean : Normalization::BothMeans));
    }
    // Plans are shared; build them before fanning out.
    first = t ? check_T_multiplicativity(fams[0], order) : check_S_multiplicativity(fams[0], order, ro);
    job = [&, t, ro](int i) {
      const CheckReport r = i == 0 ? *first
                                   : (t ? check_T_multiplicativity(fams[i], order)
                                        : check_S_multiplicativity(fams[i], order, ro));
      json detail = to_json(r);
      if (!r.ok()) detail["table"] = to_json(fams[i].first), detail["table2"] = to_json(fams[i].second);
      return TableResult{r.ok(), detail, to_text(r)};
    };
  } else if (o.suite == "lemmas") {
    if (tables <= 0) tables = 10;
    const int t_bound = order > 0 ? order : 8;
    const int s_bound = order > 0 ? order : 10;
    for (int i = 0; i < tables; ++i) fams.push_back(random_family(rng, std::max(t_bound, s_bound), Normalization::BothMeans));
    order = std::max(t_bound, s_bound);
    job = [&, t_bound, s_bound](int i) {
      TableResult res;
      res.detail = json::array();
      for (LemmaId id : all_lemmas()) {
        const bool t_side = id == LemmaId::T1 || id == LemmaId::T2 || id == LemmaId::T3;
        const CheckReport r = check_lemma(id, fams[i], t_side ? t_bound : s_bound);
        res.ok = res.ok && r.ok();
        res.detail.push_back(to_json(r));
        res.text += to_text(r);
      }
      return res;
    };
  } else {  // identities
    if (order <= 0) order = 8;
    if (tables <= 0) tables = 50;
    for (int i = 0; i < tables; ++i) {
      MultFn f = random_multfn(rng, order, true);
      MultFn g = random_multfn(rng, order, true);
      inputs.push_back({std::move(f), std::move(g), random_pair(rng, order, Normalization::None)});
    }
    job = [&](int i) {
      TableResult res;
      res.detail = json::array();
      for (const IdentityCheck& c : {check_composition_identity(inputs[i].f, inputs[i].g),
                                     check_inverse_product_identity(inputs[i].f, inputs[i].g),
                                     check_bimoment_identity(inputs[i].d)}) {
        res.ok = res.ok && c.result.equal;
        CheckReport wrapper{c.name, c.result.order, {c}, std::nullopt};
        res.detail.push_back(to_json(wrapper));
        res.text += to_text(wrapper);
      }
      return res;
    };
  }

  const auto results = run_tables(tables, o.parallel, job);
  int passed = 0;
  for (const auto& r : results) passed += r.ok ? 1 : 0;
  const bool ok = passed == tables;

  if (o.format == "json") {
    json reports = json::array();
    for (const auto& r : results) reports.push_back(r.detail);
    out << json{{"suite", o.suite}, {"order", order}, {"seed", o.seed}, {"tables", tables},
                {"status", ok ? "ok" : "mismatch"}, {"reports", reports}}
               .dump(2)
        << '\n';
  } else {
    out << o.suite << " order " << order << " seed " << o.seed << " tables " << tables << '\n';
    for (std::size_t i = 0; i < results.size(); ++i) {
      out << "table " << i + 1 << ": " << (results[i].ok ? "PASS" : "FAIL") << '\n';
      if (!results[i].ok) out << results[i].text;
    }
    out << (ok ? "PASS" : "FAIL") << " " << passed << "/" << tables << '\n';
  }
  return ok ? kPass : kMismatch;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Exact bi-free partition combinatorics and transform checks", "bifree"};
  app.require_subcommand(1);

  auto* nc = app.add_subcommand("nc", "Non-crossing and bi-non-crossing partitions");
  nc->add_option("what", o.nc_what, "enumerate | enumerate-prime | kreweras | bnc")
      ->required()
      ->check(CLI::IsMember({"enumerate", "enumerate-prime", "kreweras", "bnc"}));
  nc->add_option("arg", o.nc_arg, "size n, a partition such as \"{1,6|2,3,4|5|7}\", or a shape such as LLR")
      ->required();
  nc->add_flag("--diagram", o.diagram, "Draw each partition");
  nc->add_flag("--count", o.count_only, "Print only the number of partitions");

  auto* tr = app.add_subcommand("transform", "Partial transforms of a pair distribution");
  tr->add_option("kind", o.transform_kind, "s | t | r")->required()->check(CLI::IsMember({"s", "t", "r"}));
  tr->add_option("file", o.input, "Pair distribution JSON")->required();
  tr->add_option("--order", o.order, "Truncate the output at this total degree")->check(CLI::PositiveNumber);
  tr->add_option("--method", o.method, "analytic | cumulant")->check(CLI::IsMember({"analytic", "cumulant"}));
  tr->add_flag("--normalize", o.normalize, "Rescale the faces to unit mean first");
  tr->add_option("--format", o.format)->check(CLI::IsMember({"text", "json"}));

  auto* ve = app.add_subcommand("verify", "Coefficientwise checks on seeded random tables");
  ve->add_option("suite", o.suite, "t-mult | s-mult | lemmas | identities")
      ->required()
      ->check(CLI::IsMember({"t-mult", "s-mult", "lemmas", "identities"}));
  ve->add_option("--order", o.order, "Total order (node bound for lemmas)")->check(CLI::PositiveNumber);
  ve->add_option("--seed", o.seed);
  ve->add_option("--tables", o.tables, "Number of random inputs")->check(CLI::PositiveNumber);
  ve->add_flag("--parallel", o.parallel, "Check tables concurrently");
  ve->add_option("--right-order", o.right_order, "b1b2 | b2b1")->check(CLI::IsMember({"b1b2", "b2b1"}));
  ve->add_option("--format", o.format)->check(CLI::IsMember({"text", "json"}));

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kPass;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }

  try {
    if (nc->parsed()) return cmd_nc(o, out);
    if (tr->parsed()) return cmd_transform(o, out, err);
    return cmd_verify(o, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
}

}  // namespace bifree::cli
