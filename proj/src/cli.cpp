#include "stardisc/cli.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "stardisc/bounds.hpp"
#include "stardisc/cud.hpp"
#include "stardisc/errors.hpp"
#include "stardisc/expsum.hpp"
#include "stardisc/generators.hpp"
#include "stardisc/point_set.hpp"
#include "stardisc/qmc.hpp"
#include "stardisc/util.hpp"
#include "stardisc/weights.hpp"

namespace stardisc::cli {

namespace {

using ll = long long;
using u64 = std::uint64_t;

void write_text(const std::string& path, const std::string& content,
                std::ostream& out) {
  if (path.empty()) {
    out << content;
    return;
  }
  std::ofstream f(path);
  if (!f) throw FormatError("cannot open '" + path + "' for writing");
  f << content;
  f.flush();
  if (!f) throw FormatError("write to '" + path + "' failed");
}

std::string join_corner(const std::vector<double>& corner) {
  std::string s;
  for (std::size_t i = 0; i < corner.size(); ++i) {
    if (i) s += ",";
    s += format_g17(corner[i]);
  }
  return s;
}

std::string join_ints(const std::vector<int>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(v[i]);
  }
  return s;
}

ll integral_n(double nd, const char* kind) {
  const ll n = std::llround(nd);
  if (!(std::abs(nd - static_cast<double>(n)) <= 1e-9))
    throw UsageError(std::string(kind) + " requires an integer N");
  return n;
}

const char* side_name(BoxSide side) {
  return side == BoxSide::Open ? "open" : "closed";
}

PsetFamily pset_family_of(Family f) {
  switch (f) {
    case Family::KorobovP: return PsetFamily::P;
    case Family::KorobovQ: return PsetFamily::Q;
    case Family::HuaWangR: return PsetFamily::R;
    default:
      throw UsageError("exponential sums exist for korobov-P, korobov-Q and "
                       "huawang-R only");
  }
}

template <typename T>
std::vector<T> sorted(std::vector<T> v) {
  std::sort(v.begin(), v.end());
  return v;
}

// --- per-subcommand option bags -------------------------------------------

struct GenOpts {
  std::string family, out_path;
  ll p = 0, n = 0, base = 2;
  int s = 1;
  u64 seed = 0;
  bool has_p = false, has_n = false, has_seed = false;
};

struct DiscOpts {
  std::string file;
  bool lower = false;
  u64 budget = kDefaultBudget;
  int restarts = 64, workers = 0;
  u64 seed = 0;
  bool has_seed = false;
};

struct WdiscOpts {
  std::string file, weights;
  u64 budget = kDefaultBudget;
};

struct BoundOpts {
  std::string kind, weights;
  double n = 0.0, c_const = 0.0;
  int s = 1;
  ll q = 0;
  bool has_weights = false, has_q = false, has_c = false;
};

struct ExpsumOpts {
  std::string family, h;
  ll p = 0;
  int s = 2;
  double tol = 1e-6;
  bool verify = false, has_family = false, has_h = false, has_s = false;
};

struct CudOpts {
  std::string stream, dims, ns, method = "exact", out_path;
  bool growing = false;
  double c = 0.0;
  u64 budget = kDefaultBudget;
  int restarts = 64, workers = 0;
  u64 seed = 0;
  bool has_seed = false, has_c = false, has_dims = false, has_ns = false;
};

struct IntegrateOpts {
  std::string file, function;
  u64 budget = kDefaultBudget;
};

struct StudyOpts {
  std::string kind, out_path, dims, ns, ps;
  int s = 2, seeds = 20;
  u64 seed0 = 1;
  u64 budget = kDefaultBudget;
  int workers = 0;
};

// --- handlers ---------------------------------------------------------------

int handle_gen(const GenOpts& o, std::ostream& out) {
  const Family fam = parse_family(o.family);
  GeneratorSpec spec;
  spec.family = fam;
  spec.base = o.base;
  spec.seed = o.seed;
  spec.has_seed = o.has_seed;
  spec.n = o.n;
  spec.p = o.p;

  const bool is_pset = fam == Family::KorobovP || fam == Family::KorobovQ ||
                       fam == Family::HuaWangR;
  if (is_pset && !o.has_p)
    throw UsageError("family " + o.family + " requires --p");
  if (!is_pset && !o.has_n)
    throw UsageError("family " + o.family + " requires --n");

  const PointSet ps = generate(spec, o.s);
  std::ostringstream text;
  write_pointset(text, ps);
  write_text(o.out_path, text.str(), out);
  return 0;
}

int handle_disc(const DiscOpts& o, std::ostream& out) {
  const PointSet ps = read_pointset_file(o.file);
  DiscrepancyResult r;
  if (o.lower) {
    if (!o.has_seed)
      throw UsageError("--lower needs an explicit --seed for reproducibility");
    r = star_discrepancy_lower(ps, o.restarts, o.seed);
  } else {
    r = star_discrepancy_exact(ps, o.budget, o.workers);
  }
  out << "value=" << format_g17(r.value) << " method=" << method_name(r.method)
      << " side=" << side_name(r.witness.side)
      << " corner=" << join_corner(r.witness.corner) << "\n";
  return 0;
}

int handle_wdisc(const WdiscOpts& o, std::ostream& out) {
  const PointSet ps = read_pointset_file(o.file);
  const ProductWeights w = parse_weights(o.weights);
  const WeightedResult r = weighted_star_discrepancy(ps, w, o.budget);
  out << "value=" << format_g17(r.value) << " u=" << join_ints(r.argmax)
      << " method=" << method_name(r.method) << "\n";
  return 0;
}

int handle_bound(const BoundOpts& o, std::ostream& out) {
  if (o.kind == "hnww" || o.kind == "thm2" || o.kind == "asymptotic-upper") {
    const double v = rate(parse_rate_kind(o.kind), o.n, o.s);
    out << "kind=" << o.kind << " N=" << format_g17(o.n) << " s=" << o.s
        << " value=" << format_g17(v) << " constants=unspecified\n";
  } else if (o.kind == "hoeffding") {
    const ll n = integral_n(o.n, "hoeffding");
    const HoeffdingResult hb = hoeffding_bound(n, o.s);
    out << "kind=hoeffding N=" << n << " s=" << o.s
        << " epsilon=" << format_g17(hb.epsilon)
        << " value=" << format_g17(hb.value) << " constants=explicit\n";
  } else if (o.kind == "hps") {
    if (!o.has_weights) throw UsageError("hps requires --weights");
    const ll n = integral_n(o.n, "hps");
    const double v = hps_weighted_rate(n, o.s, parse_weights(o.weights));
    out << "kind=hps N=" << n << " s=" << o.s << " weights=" << o.weights
        << " value=" << format_g17(v) << " constants=unspecified\n";
  } else if (o.kind == "wang") {
    if (!o.has_weights) throw UsageError("wang requires --weights");
    if (!o.has_q) throw UsageError("wang requires --q (prime power)");
    if (!o.has_c)
      throw UsageError("wang requires --C; no canonical constant exists");
    const ll n = integral_n(o.n, "wang");
    const double v = wang_bound(n, o.s, o.q, parse_weights(o.weights), o.c_const);
    out << "kind=wang N=" << n << " s=" << o.s << " weights=" << o.weights
        << " q=" << o.q << " C=" << format_g17(o.c_const)
        << " value=" << format_g17(v) << " constants=user-supplied\n";
  } else {
    throw UsageError("unknown bound kind '" + o.kind + "'");
  }
  return 0;
}

int handle_expsum(const ExpsumOpts& o, std::ostream& out) {
  if (o.verify) {
    if (!o.has_s) throw UsageError("--verify requires --s");
    const WeilReport rep = verify_weil(o.p, o.s, o.tol);
    out << "family=korobov-P checked=" << rep.checked_p
        << " max_ratio=" << format_g17(rep.max_ratio_p) << "\n";
    out << "family=korobov-Q checked=" << rep.checked_q
        << " max_ratio=" << format_g17(rep.max_ratio_q) << "\n";
    out << "family=huawang-R checked=" << rep.checked_r
        << " max_ratio=" << format_g17(rep.max_ratio_r) << "\n";
    out << "p=" << rep.p << " s=" << rep.s << " tol=" << format_g17(rep.tol)
        << " violations=" << rep.violations << " pass=" << (rep.pass ? 1 : 0)
        << "\n";
    return rep.pass ? 0 : 5;
  }
  if (!o.has_family || !o.has_h)
    throw UsageError("single-sum mode requires --family and --h");
  const PsetFamily fam = pset_family_of(parse_family(o.family));
  const ExpSumReport rep = exp_sum(fam, o.p, parse_ll_list(o.h));
  out << "family=" << o.family << " p=" << rep.p << " h=" << o.h
      << " magnitude=" << format_g17(rep.magnitude)
      << " bound=" << format_g17(rep.bound)
      << " applies=" << (rep.bound_applies ? 1 : 0)
      << " tight=" << (rep.tight ? 1 : 0) << "\n";
  return 0;
}

int handle_cud(const CudOpts& o, std::ostream& out) {
  const StreamSpec spec = StreamSpec::parse(o.stream);
  ProfileOptions opts;
  if (o.method == "exact") {
    opts.method = Method::Exact;
  } else if (o.method == "lower") {
    if (!o.has_seed)
      throw UsageError("--method lower needs an explicit --seed");
    opts.method = Method::LowerBound;
  } else {
    throw UsageError("--method must be exact or lower");
  }
  opts.budget = o.budget;
  opts.restarts = o.restarts;
  opts.seed = o.seed;
  opts.workers = o.workers;

  std::ostringstream csv;
  if (o.growing) {
    if (!o.has_c) throw UsageError("--growing requires --c");
    if (!o.has_ns) throw UsageError("--growing requires --Ns");
    csv << "N,s,dstar,envelope,method\n";
    for (const GrowingDimRow& row :
         growing_dim_profile(spec, o.c, parse_ll_list(o.ns), opts)) {
      csv << row.n << "," << row.s << ","
          << (row.ok ? format_g17(row.dstar) : "nan") << ","
          << format_g17(row.envelope) << ","
          << (row.ok ? method_name(row.method) : "budget-exceeded") << "\n";
    }
  } else {
    if (!o.has_dims || !o.has_ns)
      throw UsageError("profile mode requires --dims and --Ns");
    csv << "s,N,dstar,method\n";
    for (const ProfileRow& row :
         cud_profile(spec, parse_int_list(o.dims), parse_ll_list(o.ns), opts)) {
      csv << row.s << "," << row.n << ","
          << (row.ok ? format_g17(row.dstar) : "nan") << ","
          << (row.ok ? method_name(row.method) : "budget-exceeded") << "\n";
    }
  }
  write_text(o.out_path, csv.str(), out);
  return 0;
}

int handle_integrate(const IntegrateOpts& o, std::ostream& out) {
  const PointSet ps = read_pointset_file(o.file);
  const TestFunction f = test_function(parse_test_function(o.function));
  const KhReport rep = kh_check(ps, f, o.budget);
  out << "function=" << o.function << " value=" << format_g17(rep.estimate)
      << " exact=" << format_g17(rep.exact_integral)
      << " abs_error=" << format_g17(rep.abs_error)
      << " variation=" << format_g17(rep.variation)
      << " dstar=" << format_g17(rep.dstar)
      << " bound=" << format_g17(rep.bound) << " holds=" << (rep.holds ? 1 : 0)
      << "\n";
  return 0;
}

int handle_study(const StudyOpts& o, std::ostream& err) {
  StudyParams prm;
  if (!o.dims.empty()) prm.dims = parse_int_list(o.dims);
  if (!o.ns.empty()) prm.ns = parse_ll_list(o.ns);
  if (!o.ps.empty()) prm.ps = parse_ll_list(o.ps);
  prm.s = o.s;
  prm.seeds = o.seeds;
  prm.seed0 = o.seed0;
  prm.budget = o.budget;
  prm.workers = o.workers;
  return study(parse_study_kind(o.kind), prm, o.out_path, err);
}

}  // namespace

StudyKind parse_study_kind(const std::string& name) {
  if (name == "random-scaling") return StudyKind::RandomScaling;
  if (name == "pset-decay") return StudyKind::PsetDecay;
  if (name == "cud-vdc") return StudyKind::CudVdc;
  throw UsageError("unknown study kind '" + name + "'");
}

const char* study_kind_name(StudyKind kind) {
  switch (kind) {
    case StudyKind::RandomScaling: return "random-scaling";
    case StudyKind::PsetDecay: return "pset-decay";
    case StudyKind::CudVdc: return "cud-vdc";
  }
  return "?";
}

int study(StudyKind kind, const StudyParams& params, const std::string& out_path,
          std::ostream& err) {
  try {
    std::ostringstream csv;
    switch (kind) {
      case StudyKind::RandomScaling: {
        if (params.seeds < 1) throw UsageError("need at least one seed");
        csv << "s,N,seed,dstar,ref,ratio\n";
        for (int s : sorted(params.dims)) {
          for (ll n : sorted(params.ns)) {
            for (int k = 0; k < params.seeds; ++k) {
              const u64 seed = params.seed0 + static_cast<u64>(k);
              const PointSet ps = generate_random(n, s, seed);
              const double d =
                  star_discrepancy_exact(ps, params.budget, params.workers).value;
              const double ref =
                  std::sqrt(static_cast<double>(s) / static_cast<double>(n));
              csv << s << "," << n << "," << seed << "," << format_g17(d) << ","
                  << format_g17(ref) << "," << format_g17(d / ref) << "\n";
            }
          }
        }
        break;
      }
      case StudyKind::PsetDecay: {
        csv << "family,p,s,dstar,ref,ratio\n";
        for (ll p : sorted(params.ps)) {
          const PointSet ps = generate_pset(PsetFamily::P, p, params.s);
          const double d =
              star_discrepancy_exact(ps, params.budget, params.workers).value;
          const double ref =
              static_cast<double>(params.s) / std::sqrt(static_cast<double>(p));
          csv << "korobov-P," << p << "," << params.s << "," << format_g17(d)
              << "," << format_g17(ref) << "," << format_g17(d / ref) << "\n";
        }
        break;
      }
      case StudyKind::CudVdc: {
        csv << "s,N,dstar,ref,ratio\n";
        StreamSpec spec;
        spec.kind = StreamSpec::Kind::Vdc;
        spec.base = 2;
        for (ll n : sorted(params.ns)) {
          auto stream = spec.make();
          const PointSet ps = blocks(*stream, params.s, n);
          const double d =
              star_discrepancy_exact(ps, params.budget, params.workers).value;
          csv << params.s << "," << n << "," << format_g17(d) << ","
              << format_g17(0.25) << "," << format_g17(d / 0.25) << "\n";
        }
        break;
      }
    }
    std::ofstream f(out_path);
    if (!f) throw FormatError("cannot open '" + out_path + "' for writing");
    f << csv.str();
    f.flush();
    if (!f) throw FormatError("write to '" + out_path + "' failed");
    return 0;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const FormatError& e) {
    err << "error: " << e.what() << "\n";
    return 3;
  } catch (const BudgetExceeded& e) {
    err << "error: " << e.what() << "\n";
    return 4;
  }
}

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"star-discrepancy toolkit: point sets, discrepancy, bounds, "
               "exponential sums, stream uniformity"};
  app.require_subcommand(1);
  // long-form help only: the default -h short flag would collide with the
  // expsum coefficient option --h
  app.set_help_flag("--help", "print help and exit");

  GenOpts gen;
  auto* gen_cmd = app.add_subcommand("gen", "generate a point set");
  gen_cmd->add_option("--family", gen.family,
                      "korobov-P|korobov-Q|huawang-R|vdc|halton|random|centered")
      ->required();
  auto* gen_p = gen_cmd->add_option("--p", gen.p, "prime for the p-set families");
  gen_cmd->add_option("--s", gen.s, "dimension (default 1)");
  auto* gen_n = gen_cmd->add_option("--n", gen.n, "point count");
  gen_cmd->add_option("--base", gen.base, "vdc base (default 2)");
  auto* gen_seed = gen_cmd->add_option("--seed", gen.seed, "random-family seed");
  gen_cmd->add_option("-o,--out", gen.out_path, "output path (default stdout)");

  DiscOpts disc;
  auto* disc_cmd = app.add_subcommand("disc", "star-discrepancy of a point-set file");
  disc_cmd->add_option("file", disc.file, "point-set file")->required();
  auto* disc_exact = disc_cmd->add_flag("--exact", "exact enumeration (default)");
  disc_cmd->add_flag("--lower", disc.lower, "randomized lower-bound search");
  disc_cmd->add_option("--budget", disc.budget, "box-point operation cap");
  disc_cmd->add_option("--restarts", disc.restarts, "lower-bound restarts");
  auto* disc_seed = disc_cmd->add_option("--seed", disc.seed, "lower-bound seed");
  disc_cmd->add_option("--workers", disc.workers, "exact-engine threads (0 = auto)");

  WdiscOpts wdisc;
  auto* wdisc_cmd = app.add_subcommand("wdisc", "weighted star-discrepancy");
  wdisc_cmd->add_option("file", wdisc.file, "point-set file")->required();
  wdisc_cmd->add_option("--weights", wdisc.weights, "list | geo:r | poly:a")
      ->required();
  wdisc_cmd->add_option("--budget", wdisc.budget, "box-point operation cap");

  BoundOpts bound;
  auto* bound_cmd = app.add_subcommand("bound", "evaluate a theoretical bound");
  bound_cmd->add_option("--kind", bound.kind,
                        "hnww|thm2|asymptotic-upper|hoeffding|hps|wang")
      ->required();
  bound_cmd->add_option("--N", bound.n, "point count")->required();
  bound_cmd->add_option("--s", bound.s, "dimension")->required();
  auto* bound_w = bound_cmd->add_option("--weights", bound.weights, "hps/wang weights");
  auto* bound_q = bound_cmd->add_option("--q", bound.q, "wang prime power");
  auto* bound_c = bound_cmd->add_option("--C", bound.c_const, "wang constant");

  ExpsumOpts expsum;
  auto* expsum_cmd = app.add_subcommand("expsum", "exponential sums and bound checks");
  expsum_cmd->add_option("--p", expsum.p, "prime modulus")->required();
  auto* expsum_family =
      expsum_cmd->add_option("--family", expsum.family, "korobov-P|korobov-Q|huawang-R");
  auto* expsum_h = expsum_cmd->add_option("--h", expsum.h, "coefficients h1,...,hs");
  expsum_cmd->add_flag("--verify", expsum.verify, "exhaustive bound verification");
  auto* expsum_s = expsum_cmd->add_option("--s", expsum.s, "dimension for --verify");
  expsum_cmd->add_option("--tol", expsum.tol, "bound tolerance (default 1e-6)");

  CudOpts cud;
  auto* cud_cmd = app.add_subcommand("cud", "block-discrepancy profile of a stream");
  cud_cmd->add_option("--stream", cud.stream, "lcg:a,c,m,x0 | vdc:base | random:seed")
      ->required();
  auto* cud_dims = cud_cmd->add_option("--dims", cud.dims, "block dimensions, comma-separated");
  auto* cud_ns = cud_cmd->add_option("--Ns", cud.ns, "block counts, comma-separated");
  cud_cmd->add_option("--method", cud.method, "exact|lower (default exact)");
  cud_cmd->add_flag("--growing", cud.growing, "grow dimension like c*ln N");
  auto* cud_c = cud_cmd->add_option("--c", cud.c, "growth constant");
  cud_cmd->add_option("--budget", cud.budget, "box-point operation cap");
  cud_cmd->add_option("--restarts", cud.restarts, "lower-bound restarts");
  auto* cud_seed = cud_cmd->add_option("--seed", cud.seed, "lower-bound seed");
  cud_cmd->add_option("--workers", cud.workers, "exact-engine threads");
  cud_cmd->add_option("-o,--out", cud.out_path, "CSV path (default stdout)");

  IntegrateOpts integ;
  auto* integ_cmd = app.add_subcommand("integrate", "QMC average and error bound");
  integ_cmd->add_option("file", integ.file, "point-set file")->required();
  integ_cmd->add_option("--function", integ.function, "prod|sum-sq|linear-1d")
      ->required();
  integ_cmd->add_option("--budget", integ.budget, "box-point operation cap");

  StudyOpts study_o;
  auto* study_cmd = app.add_subcommand("study", "reproducible CSV study");
  study_cmd->add_option("--kind", study_o.kind, "random-scaling|pset-decay|cud-vdc")
      ->required();
  study_cmd->add_option("-o,--out", study_o.out_path, "CSV output path")->required();
  study_cmd->add_option("--dims", study_o.dims, "dimensions (random-scaling)");
  study_cmd->add_option("--Ns", study_o.ns, "sizes (random-scaling, cud-vdc)");
  study_cmd->add_option("--ps", study_o.ps, "primes (pset-decay)");
  study_cmd->add_option("--s", study_o.s, "dimension (pset-decay, cud-vdc)");
  study_cmd->add_option("--seeds", study_o.seeds, "seed count (random-scaling)");
  study_cmd->add_option("--seed0", study_o.seed0, "first seed");
  study_cmd->add_option("--budget", study_o.budget, "box-point operation cap");
  study_cmd->add_option("--workers", study_o.workers, "exact-engine threads");

  for (CLI::App* sub : app.get_subcommands(nullptr))
    sub->set_help_flag("--help", "print help and exit");

  std::vector<const char*> argv;
  argv.reserve(args.size() + 1);
  argv.push_back("stardisc");
  for (const auto& a : args) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }

  try {
    gen.has_p = gen_p->count() > 0;
    gen.has_n = gen_n->count() > 0;
    gen.has_seed = gen_seed->count() > 0;
    disc.has_seed = disc_seed->count() > 0;
    bound.has_weights = bound_w->count() > 0;
    bound.has_q = bound_q->count() > 0;
    bound.has_c = bound_c->count() > 0;
    expsum.has_family = expsum_family->count() > 0;
    expsum.has_h = expsum_h->count() > 0;
    expsum.has_s = expsum_s->count() > 0;
    cud.has_seed = cud_seed->count() > 0;
    cud.has_c = cud_c->count() > 0;
    cud.has_dims = cud_dims->count() > 0;
    cud.has_ns = cud_ns->count() > 0;
    if (disc_exact->count() > 0 && disc.lower)
      throw UsageError("--exact and --lower are mutually exclusive");

    if (gen_cmd->parsed()) return handle_gen(gen, out);
    if (disc_cmd->parsed()) return handle_disc(disc, out);
    if (wdisc_cmd->parsed()) return handle_wdisc(wdisc, out);
    if (bound_cmd->parsed()) return handle_bound(bound, out);
    if (expsum_cmd->parsed()) return handle_expsum(expsum, out);
    if (cud_cmd->parsed()) return handle_cud(cud, out);
    if (integ_cmd->parsed()) return handle_integrate(integ, out);
    if (study_cmd->parsed()) return handle_study(study_o, err);
    err << "error: no subcommand\n";
    return 2;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const FormatError& e) {
    err << "error: " << e.what() << "\n";
    return 3;
  } catch (const BudgetExceeded& e) {
    err << "error: " << e.what() << "\n";
    return 4;
  }
}

}  // namespace stardisc::cli
