#include "cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <functional>
#include <iterator>
#include <new>
#include <ostream>

#include "coha/error.hpp"
#include "coha/kac.hpp"
#include "coha/lehn.hpp"
#include "coha/quiver.hpp"
#include "coha/shuffle.hpp"
#include "coha/shuffle_verify.hpp"
#include "coha/wkalg.hpp"

namespace coha::cli {

namespace {

struct Globals {
  bool json = false;
  int threads = 1;
};

nlohmann::json read_json_arg(const std::string& arg, const char* what) {
  std::string text = arg;
  if (!arg.empty() && arg[0] == '@') {
    std::ifstream in(arg.substr(1));
    if (!in) throw InvalidArgument(std::string("cannot read ") + what + " from " + arg.substr(1));
    text.assign(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
  }
  try {
    return nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw InvalidArgument(std::string("malformed JSON for ") + what + ": " + e.what());
  }
}

std::string params_text(const std::map<std::string, long>& params) {
  std::string s;
  for (const auto& [k, v] : params) {
    if (!s.empty()) s += ' ';
    s += k + "=" + std::to_string(v);
  }
  return s;
}

int emit_report(const Report& rep, const Globals& g, std::ostream& out) {
  if (g.json) {
    out << rep.to_json().dump(2) << '\n';
  } else {
    for (const auto& c : rep.checks) {
      out << (c.pass ? "PASS " : "FAIL ") << c.relation;
      if (!c.params.empty()) out << ' ' << params_text(c.params);
      if (!c.note.empty()) out << "  (" << c.note << ')';
      out << '\n';
    }
    out << rep.checks.size() << " checks, " << rep.failures() << " failed\n";
  }
  return rep.all_pass() ? kPass : kCheckFailed;
}

nlohmann::json rational_json(const Rational& q) {
  if (q.get_den() == 1 && q.get_num().fits_slong_p()) return q.get_num().get_si();
  return rational_to_string(q);
}

void emit_shuffle(const ShuffleElem& e, const Globals& g, std::ostream& out) {
  if (g.json) {
    out << e.to_json().dump(2) << '\n';
    return;
  }
  out << "K=" << e.K << " dim=" << nlohmann::json(e.dim).dump() << '\n' << e.poly << '\n';
}

Rational parse_rational(const std::string& s) {
  try {
    return rational_from_string(s);
  } catch (const std::exception&) {
    throw InvalidArgument("not a rational number: '" + s + "'");
  }
}

std::vector<std::uint32_t> to_primes(const std::vector<int>& qs) {
  std::vector<std::uint32_t> out;
  for (int q : qs) {
    if (q < 2) throw InvalidArgument("field sizes must be primes >= 2");
    for (int f = 2; f * f <= q; ++f)
      if (q % f == 0) throw InvalidArgument("field size " + std::to_string(q) + " is not prime");
    out.push_back(static_cast<std::uint32_t>(q));
  }
  return out;
}

Quiver load_quiver(const std::string& name) {
  if (name == "jordan" || name.rfind("cyclic:", 0) == 0) return Quiver::builtin(name);
  return Quiver::from_json(read_json_arg("@" + name, "quiver"));
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact checks for the shuffle algebra of the cyclic quiver and its matrix W-algebra models", "coha"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals g;
  app.add_flag("--json", g.json, "Emit canonical JSON instead of text");
  app.add_option("--threads", g.threads, "Upper bound on worker threads")->default_val(1)->check(CLI::PositiveNumber);

  std::function<int()> action;

  // ---------------------------------------------------------------- verify
  auto* verify = app.add_subcommand("verify", "Check a family of identities at bounded degree");
  verify->require_subcommand(1);

  struct VerifyOpts {
    int k = 2, rmax = 2, smax = 2, kappa_rmax = 2, mrange = 3, arange = 3, nmax = 4, n = 3, total = 5, points = 32,
        kmax = 6;
    std::uint64_t seed = 20240601;
  };
  auto vo = std::make_shared<VerifyOpts>();

  auto add_k = [&](CLI::App* sc, int def) { sc->add_option("--k", vo->k, "Cyclic quiver has K+1 vertices")->default_val(def); };
  auto add_rs = [&](CLI::App* sc) {
    sc->add_option("--rmax", vo->rmax, "Largest first spectral index")->default_val(2);
    sc->add_option("--smax", vo->smax, "Largest second spectral index")->default_val(2);
  };

  {
    auto* sc = verify->add_subcommand("yangian-shuffle", "Yangian relations among x_{i,1}^s in the shuffle algebra");
    add_k(sc, 2);
    add_rs(sc);
    sc->callback([&] { action = [&] { return emit_report(verify_yangian_shuffle(vo->k, vo->rmax, vo->smax), g, out); }; });
  }
  {
    auto* sc = verify->add_subcommand("yangian-deformed", "Deformed presentation with the K-generators");
    add_k(sc, 2);
    add_rs(sc);
    sc->add_option("--kappa-rmax", vo->kappa_rmax, "Largest index of the K-generator relation")->default_val(2);
    sc->callback([&] {
      action = [&] { return emit_report(verify_yangian_deformed(vo->k, vo->rmax, vo->smax, vo->kappa_rmax), g, out); };
    });
  }
  {
    auto* sc = verify->add_subcommand("wk-closure", "Brackets of spanning elements stay in the integral form");
    add_k(sc, 3);
    sc->add_option("--mrange", vo->mrange, "z-degrees in [-m, m]")->default_val(3);
    sc->add_option("--arange", vo->arange, "D-degrees in [0, a]")->default_val(3);
    sc->callback([&] { action = [&] { return emit_report(verify_wk_closure(vo->k, vo->mrange, vo->arange), g, out); }; });
  }
  {
    auto* sc = verify->add_subcommand("classical-limit", "hbar -> 0 structure constants of [t, t] and [t, T(X)]");
    add_k(sc, 3);
    sc->add_option("--mrange", vo->mrange, "z-degrees in [-m, m]")->default_val(2);
    sc->add_option("--arange", vo->arange, "D-degrees in [0, a]")->default_val(2);
    sc->callback([&] {
      action = [&] { return emit_report(verify_classical_limit(vo->k, vo->mrange, vo->arange), g, out); };
    });
  }
  {
    auto* sc = verify->add_subcommand("theorem1", "Images of the imaginary and real generators in the classical algebra");
    add_k(sc, 2);
    sc->add_option("--nmax", vo->nmax, "Largest multiple of delta")->default_val(4);
    sc->callback([&] { action = [&] { return emit_report(verify_theorem1(vo->k, vo->nmax), g, out); }; });
  }
  {
    auto* sc = verify->add_subcommand("g-map", "Positive-degree relations under G in the algebra on K+1 matrices");
    add_k(sc, 2);
    add_rs(sc);
    sc->callback([&] { action = [&] { return emit_report(verify_S_relations(vo->k, vo->rmax, vo->smax), g, out); }; });
  }
  {
    auto* sc = verify->add_subcommand("loop-map", "Loop-model relations on n x n matrices");
    sc->add_option("--n", vo->n, "Matrix size")->default_val(3);
    add_rs(sc);
    sc->callback([&] { action = [&] { return emit_report(verify_loop_relations(vo->n, vo->rmax, vo->smax), g, out); }; });
  }
  {
    auto* sc = verify->add_subcommand("lehn-cross", "Operator recursion and structure constants against the W model");
    add_k(sc, 2);
    sc->add_option("--nmax", vo->nmax, "Largest multiple of delta")->default_val(4);
    sc->callback([&] {
      action = [&] {
        Report rep = verify_lehn_recursion(vo->k, vo->nmax);
        rep.append(cross_check_wkalg(vo->k, vo->nmax));
        return emit_report(rep, g, out);
      };
    });
  }
  {
    auto* sc = verify->add_subcommand("ln-commute", "[L_m, L_n] = 0 by exact evaluation at random points");
    add_k(sc, 2);
    sc->add_option("--total", vo->total, "Largest m + n")->default_val(5);
    sc->add_option("--points", vo->points, "Evaluation points per pair")->default_val(32)->check(CLI::PositiveNumber);
    sc->add_option("--seed", vo->seed, "Seed of the point generator")->default_val(20240601);
    sc->callback([&] {
      action = [&] {
        LnCommuteOptions o;
        o.random_points = vo->points;
        o.seed = vo->seed;
        return emit_report(verify_ln_commute(vo->k, vo->total, o), g, out);
      };
    });
  }
  {
    auto* sc = verify->add_subcommand("yzk-identity", "(t1+t2) Y - Z against t1 t2 (t1+t2)^K");
    add_k(sc, 2);
    sc->callback([&] { action = [&] { return emit_report(verify_yzk_identity(vo->k), g, out); }; });
  }
  {
    auto* sc = verify->add_subcommand("cartan", "Closed form of the inverse finite Cartan matrix");
    sc->add_option("--kmax", vo->kmax, "Check K = 1..kmax")->default_val(6);
    sc->callback([&] { action = [&] { return emit_report(verify_cartan(vo->kmax), g, out); }; });
  }

  // ---------------------------------------------------------------- compute
  auto* compute = app.add_subcommand("compute", "Compute a single element");
  compute->require_subcommand(1);

  struct ComputeOpts {
    int k = 2, i = 0, r = 0, n = 1, max_vars = 6;
    std::string a, b;
    bool commutator = false;
  };
  auto co = std::make_shared<ComputeOpts>();

  {
    auto* sc = compute->add_subcommand("shuffle-product", "Twisted shuffle product of two elements");
    sc->add_option("--a", co->a, "Left factor as JSON text or @file")->required();
    sc->add_option("--b", co->b, "Right factor as JSON text or @file")->required();
    sc->add_flag("--commutator", co->commutator, "Return a*b - b*a");
    sc->callback([&] {
      action = [&] {
        ShuffleElem a = ShuffleElem::from_json(read_json_arg(co->a, "--a"));
        ShuffleElem b = ShuffleElem::from_json(read_json_arg(co->b, "--b"));
        emit_shuffle(co->commutator ? shuffle_commutator(a, b) : shuffle_mul(a, b), g, out);
        return kPass;
      };
    });
  }
  {
    auto* sc = compute->add_subcommand("ln", "The element L_n");
    sc->add_option("--k", co->k, "Cyclic quiver has K+1 vertices")->default_val(2);
    sc->add_option("--n", co->n, "Index n >= 1")->default_val(1);
    sc->add_option("--max-vars", co->max_vars, "Refuse when n(K+1) exceeds this")->default_val(6);
    sc->callback([&] {
      action = [&] {
        const int vars = co->n * (co->k + 1);
        if (vars > co->max_vars)
          throw BudgetExceeded("L_n needs " + std::to_string(vars) + " variables, above --max-vars " +
                                   std::to_string(co->max_vars) + "; use 'verify ln-commute' for evaluation checks",
                               vars);
        emit_shuffle(L_element(co->k, co->n), g, out);
        return kPass;
      };
    });
  }
  {
    auto* sc = compute->add_subcommand("alpha", "Real generator x_{i,1}^r at vertex i");
    sc->add_option("--k", co->k, "Cyclic quiver has K+1 vertices")->default_val(2);
    sc->add_option("--i", co->i, "Vertex")->default_val(0);
    sc->add_option("--r", co->r, "Power")->default_val(0)->check(CLI::NonNegativeNumber);
    sc->callback([&] {
      action = [&] {
        emit_shuffle(alpha(co->k, co->i, static_cast<unsigned>(co->r)), g, out);
        return kPass;
      };
    });
  }
  {
    auto* sc = compute->add_subcommand("gamma", "Imaginary element of dimension delta");
    sc->add_option("--k", co->k, "Cyclic quiver has K+1 vertices")->default_val(2);
    sc->add_option("--r", co->r, "Power of the symmetric sum")->default_val(0)->check(CLI::NonNegativeNumber);
    sc->callback([&] {
      action = [&] {
        emit_shuffle(gamma_delta(co->k, static_cast<unsigned>(co->r)), g, out);
        return kPass;
      };
    });
  }
  {
    auto* sc = compute->add_subcommand("welem-bracket", "Commutator of two matrix differential operators");
    sc->add_option("--k", co->k, "Matrix size")->default_val(2);
    sc->add_option("--a", co->a, "Left element as JSON text or @file")->required();
    sc->add_option("--b", co->b, "Right element as JSON text or @file")->required();
    sc->callback([&] {
      action = [&] {
        WElem a = WElem::from_json(co->k, read_json_arg(co->a, "--a"));
        WElem b = WElem::from_json(co->k, read_json_arg(co->b, "--b"));
        WElem br = w_bracket(a, b);
        if (g.json)
          out << br.to_json().dump(2) << '\n';
        else
          out << br.to_string() << '\n';
        return kPass;
      };
    });
  }

  // ---------------------------------------------------------------- kac
  struct KacOpts {
    std::string quiver;
    std::vector<int> dim;
    std::vector<int> qs{2, 3, 5};
    bool fit = false;
    std::uint64_t budget = 0;
  };
  auto ko = std::make_shared<KacOpts>();
  {
    auto* sc = app.add_subcommand("kac", "Count absolutely indecomposable representations over F_q");
    sc->add_option("--quiver", ko->quiver, "cyclic:K, jordan, or a quiver JSON file")->required();
    sc->add_option("--dim", ko->dim, "Dimension vector d0,d1,...")->required()->delimiter(',');
    sc->add_option("--q", ko->qs, "Field sizes (primes)")->delimiter(',')->default_str("2,3,5");
    sc->add_flag("--fit", ko->fit, "Interpolate the counts to a polynomial in q");
    sc->add_option("--budget", ko->budget, "Work cap (default from COHA_KAC_BUDGET, else 10^7)");
    sc->callback([&] {
      action = [&] {
        const Quiver Q = load_quiver(ko->quiver);
        check_dim(Q, ko->dim);
        const auto qs = to_primes(ko->qs);
        const std::uint64_t budget = ko->budget ? ko->budget : kac_budget_from_env();
        nlohmann::json j;
        j["counts"] = nlohmann::json::object();
        int code = kPass;
        std::string problem;
        if (ko->fit) {
          KacFit fit = kac_fit(Q, ko->dim, qs, budget);
          for (std::size_t k = 0; k < qs.size(); ++k) j["counts"][std::to_string(qs[k])] = fit.counts[k];
          j["poly"] = nlohmann::json::array();
          for (const auto& c : fit.coeffs) j["poly"].push_back(rational_json(c));
          j["consistent"] = fit.consistent;
          if (!fit.consistent) {
            code = kCheckFailed;
            problem = fit.problem;
          }
        } else {
          for (auto q : qs) j["counts"][std::to_string(q)] = count_abs_indec(Q, ko->dim, q, budget);
        }
        if (g.json) {
          out << j.dump(2) << '\n';
        } else {
          for (auto q : qs) out << "q=" << q << ": " << j["counts"][std::to_string(q)].get<long>() << '\n';
          if (ko->fit) {
            out << "poly (constant term first): " << j["poly"].dump() << '\n';
            if (!problem.empty()) out << "FAIL " << problem << '\n';
          }
        }
        return code;
      };
    });
  }

  // ---------------------------------------------------------------- roots
  struct RootsOpts {
    std::vector<std::string> zeta;
    std::string mu = "inf";
    int bound = 10;
    int k = 0;
  };
  auto ro = std::make_shared<RootsOpts>();
  {
    auto* sc = app.add_subcommand("roots", "Solve the slope equation, or list real roots of the cyclic quiver");
    sc->add_option("--zeta", ro->zeta, "zeta_0,...,zeta_K as rationals")->delimiter(',');
    sc->add_option("--mu", ro->mu, "Rational slope or 'inf'")->default_val("inf");
    sc->add_option("--bound", ro->bound, "Largest total dimension")->default_val(10);
    sc->add_option("--k", ro->k, "List real roots of the cyclic quiver with K+1 vertices instead");
    sc->callback([&] {
      action = [&] {
        nlohmann::json j = nlohmann::json::array();
        if (ro->zeta.empty()) {
          if (ro->k < 1) throw InvalidArgument("roots needs --zeta or --k");
          for (const auto& r : real_roots_cyclic(ro->k, ro->bound))
            j.push_back({{"d", r.d}, {"n", r.n}, {"start", r.start}, {"length", r.length}});
        } else {
          SlopeData s;
          for (const auto& z : ro->zeta) s.zeta.push_back(parse_rational(z));
          if (ro->mu != "inf") s.mu = parse_rational(ro->mu);
          const int K = static_cast<int>(s.zeta.size()) - 1;
          if (K < 1) throw InvalidArgument("--zeta needs at least two entries");
          for (const auto& [n, i, jj] : slope_solutions(K, s, ro->bound))
            j.push_back({{"n", n}, {"i", i}, {"j", jj}, {"d", nij_vector(K, n, i, jj)}});
        }
        if (g.json) {
          out << j.dump(2) << '\n';
        } else {
          for (const auto& e : j) {
            for (const auto& [key, v] : e.items())
              if (key != "d") out << key << '=' << v.dump() << ' ';
            out << "d=" << e["d"].dump() << '\n';
          }
          out << j.size() << " roots\n";
        }
        return kPass;
      };
    });
  }

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::Success& e) {
    app.exit(e, out, err);
    return kPass;
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kUsageError;
  }

  try {
    return action ? action() : kUsageError;
  } catch (const BudgetExceeded& e) {
    err << "budget exceeded: " << e.what() << " (estimate " << e.estimate() << ")\n";
  } catch (const std::bad_alloc&) {
    err << "out of memory\n";
  } catch (const InternalError& e) {
    err << "internal error: " << e.what() << '\n';
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
  } catch (const nlohmann::json::exception& e) {
    err << "malformed JSON input: " << e.what() << '\n';
  }
  return kUsageError;
}

}  // namespace coha::cli
