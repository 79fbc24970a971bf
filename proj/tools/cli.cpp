#include "cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <functional>
#include <optional>
#include <random>
#include <sstream>

#include "douady/adhm.hpp"
#include "douady/error.hpp"
#include "douady/goettsche.hpp"
#include "douady/heisenberg.hpp"
#include "douady/partitions.hpp"
#include "douady/stratification.hpp"
#include "douady/triple_io.hpp"
#include "surface_config.hpp"

namespace douady::cli {

namespace {

struct Options {
  std::string surface;
  std::optional<int> n;
  int order = 6;
  std::string output;
  std::string format = "tsv";
  std::optional<int> h;
  std::optional<long> e;
  std::string triple;
  int states = 20;
  unsigned long long seed = 20240601;
};

// Usage errors detected after CLI11 parsing.
struct UsageError {
  std::string message;
};

class Table {
 public:
  explicit Table(std::vector<std::string> header) { row(std::move(header)); }
  void row(std::vector<std::string> cells) {
    for (std::size_t k = 0; k < cells.size(); ++k) os_ << (k ? "\t" : "") << cells[k];
    os_ << '\n';
  }
  std::string str() const { return os_.str(); }

 private:
  std::ostringstream os_;
};

SurfaceModel require_surface(const Options& o) {
  if (o.surface.empty()) throw UsageError{"--surface is required for this subcommand"};
  try {
    return resolve_surface(o.surface);
  } catch (const Error& e) {
    throw UsageError{"--surface: " + std::string(e.what())};
  }
}

int require_n(const Options& o) {
  if (!o.n) throw UsageError{"--n is required for this subcommand"};
  if (*o.n < 0) throw UsageError{"--n must be non-negative"};
  return *o.n;
}

std::string yes_no(bool b) { return b ? "true" : "false"; }

std::string join_counts(const std::vector<std::int64_t>& v) {
  std::string s;
  for (std::size_t k = 0; k < v.size(); ++k) s += (k ? "," : "") + std::to_string(v[k]);
  return s;
}

// ------------------------------------------------------------- subcommands

std::string cmd_goettsche(const Options& o) {
  const auto s = require_surface(o);
  const auto series = poincare_hilbert_product(s, o.order);
  Table t({"n", "poincare"});
  for (int n = 0; n <= o.order; ++n) t.row({std::to_string(n), series.coeff(n).str()});
  return t.str();
}

std::string cmd_sym(const Options& o) {
  const auto s = require_surface(o);
  Table t({"m", "poincare"});
  const auto table = poincare_sym_table(s, o.order);
  for (int m = 0; m <= o.order; ++m) t.row({std::to_string(m), table[static_cast<std::size_t>(m)].str()});
  return t.str();
}

std::string cmd_punctual(const Options& o) {
  Table t({"n", "poincare", "top_betti", "vanishes_above"});
  const int lo = o.n ? require_n(o) : 1;
  const int hi = o.n ? require_n(o) : o.order;
  for (int n = std::max(lo, 1); n <= hi; ++n) {
    const auto top = punctual_top_betti(n);
    t.row({std::to_string(n), poincare_punctual(n).str(), top.top_coefficient.get_str(),
           yes_no(top.vanishes_above)});
  }
  return t.str();
}

std::string cmd_euler(const Options& o) {
  long e = 0;
  if (o.e) {
    e = *o.e;
  } else {
    e = require_surface(o).euler();
  }
  Table t({"n", "euler"});
  for (int n = 0; n <= o.order; ++n) t.row({std::to_string(n), euler_hilbert(e, n).get_str()});
  return t.str();
}

std::string cmd_hodge(const Options& o) {
  const auto s = require_surface(o);
  if (!s.has_hodge()) throw UsageError{"--surface: " + s.name() + " carries no Hodge numbers"};
  Table t({"n", "hodge"});
  for (int n = 0; n <= o.order; ++n) t.row({std::to_string(n), hodge_hilbert(s, n).str()});
  return t.str();
}

std::string cmd_fock(const Options& o) {
  const auto s = require_surface(o);
  if (o.n) {
    const int n = require_n(o);
    Table t({"monomial", "level", "degree"});
    for (const auto& m : enumerate_level(s, n)) {
      t.row({m.str(), std::to_string(m.level()), std::to_string(m.degree(s))});
    }
    return t.str();
  }
  const auto ch = graded_character(s, o.order);
  Table t({"n", "character", "dim"});
  for (int n = 0; n <= o.order; ++n) {
    t.row({std::to_string(n), ch.coeff(n).str(), ch.coeff(n).sum_of_coefficients().get_str()});
  }
  return t.str();
}

struct RelationTally {
  long checks = 0;
  long failures = 0;
  std::vector<std::string> failed;
};

// The three supercommutation relations on random states, all mode pairs up
// to max_mode and one random class pair per mode pair.
std::array<RelationTally, 3> check_relations(const SurfaceModel& s, int max_mode, int states,
                                             unsigned long long seed) {
  std::array<RelationTally, 3> tally;
  std::mt19937_64 rng(seed);
  const std::size_t nc = s.classes().size();
  const std::size_t nk = s.compact_classes().size();
  std::uniform_int_distribution<std::size_t> pick_c(0, nc ? nc - 1 : 0);
  std::uniform_int_distribution<std::size_t> pick_k(0, nk ? nk - 1 : 0);
  for (int i = 0; i < states; ++i) {
    const FockState st = random_state(s, 6, 3, rng);
    for (int k = 1; k <= max_mode; ++k) {
      for (int l = 1; l <= max_mode; ++l) {
        const std::array<std::pair<HeisenbergOp, HeisenbergOp>, 3> pairs{{
            {HeisenbergOp::create(k, pick_c(rng)), HeisenbergOp::create(l, pick_c(rng))},
            {HeisenbergOp::annihilate(k, pick_k(rng)), HeisenbergOp::annihilate(l, pick_k(rng))},
            {HeisenbergOp::annihilate(l, pick_k(rng)), HeisenbergOp::create(k, pick_c(rng))},
        }};
        for (std::size_t r = 0; r < 3; ++r) {
          if ((r != 1 && nc == 0) || (r != 0 && nk == 0)) continue;
          const auto& [op1, op2] = pairs[r];
          ++tally[r].checks;
          const auto lhs = commutator(op1, op2, st, s);
          const auto rhs = expected_commutator(op1, op2, st, s);
          if (!(lhs == rhs)) {
            ++tally[r].failures;
            tally[r].failed.push_back("[" + op1.str() + "," + op2.str() + "] on " + st.str() + ": got " +
                                      lhs.str() + ", expected " + rhs.str());
          }
        }
      }
    }
  }
  return tally;
}

int cmd_commutators(const Options& o, std::string& table, std::ostream& err) {
  const auto s = require_surface(o);
  const int max_mode = std::min(o.order, 5);
  const auto tally = check_relations(s, max_mode, o.states, o.seed);
  const char* names[] = {"[P,P]=0", "[R,R]=0", "[R,P]=delta*(-1)^(k-1)*k*<a,b>"};
  Table t({"relation", "checks", "failures"});
  bool ok = true;
  for (std::size_t r = 0; r < 3; ++r) {
    t.row({names[r], std::to_string(tally[r].checks), std::to_string(tally[r].failures)});
    for (const auto& f : tally[r].failed) err << "FAILED " << names[r] << ": " << f << '\n';
    ok &= tally[r].failures == 0;
  }
  table = t.str();
  return ok ? kExitOk : kExitIdentityFailure;
}

std::string cmd_strata(const Options& o) {
  const int n = require_n(o);
  if (o.h) {
    if (*o.h < 0) throw UsageError{"--h must be non-negative"};
    Table t({"partition"});
    for (const auto& a : support_strata(n, *o.h)) t.row({a.str()});
    return t.str();
  }
  Table t({"partition", "stalks", "local_check"});
  for (const auto& nu : enumerate(n)) {
    t.row({nu.str(), join_counts(stalk_table(nu).rows), yes_no(local_fiber_check(nu))});
  }
  return t.str();
}

std::string cmd_adhm(const Options& o) {
  if (!o.triple.empty()) {
    MatrixTriple tr;
    try {
      tr = read_triple_file(o.triple);
      tr.validate();
    } catch (const Error& e) {
      throw UsageError{"--triple: " + std::string(e.what())};
    }
    Table t({"property", "value"});
    const bool commuting = is_commuting(tr);
    t.row({"n", std::to_string(tr.size())});
    t.row({"commuting", yes_no(commuting)});
    if (!commuting) return t.str();
    t.row({"stable", yes_no(is_stable(tr))});
    for (unsigned total = 1; total <= tr.size(); ++total) {
      for (unsigned k = total + 1; k-- > 0;) {
        t.row({"trace A^" + std::to_string(k) + " B^" + std::to_string(total - k),
               invariant(tr, k, total - k).str()});
      }
    }
    try {
      const auto cycle = barlet_support(tr);
      t.row({"support", to_string(cycle)});
      t.row({"in_bidisk", yes_no(in_bidisk(tr))});
    } catch (const Error& e) {
      if (e.code() != ErrorCode::SpectrumNotSplit) throw;
      t.row({"support", "not split over Q(i)"});
    }
    return t.str();
  }
  const int n = require_n(o);
  Table t({"partition", "commuting", "stable", "support", "in_bidisk", "staircase"});
  for (const auto& mu : enumerate(n)) {
    const auto tr = from_monomial_ideal(mu);
    t.row({mu.str(), yes_no(is_commuting(tr)), yes_no(is_stable(tr)), to_string(barlet_support(tr)),
           yes_no(in_bidisk(tr)), support_staircase(tr).str()});
  }
  return t.str();
}

std::string cmd_ktheory(const Options& o) {
  const auto s = require_surface(o);
  const auto series = poincare_hilbert_product(s, o.order);
  Table t({"n", "dim_k", "total_betti"});
  for (int n = 0; n <= o.order; ++n) {
    t.row({std::to_string(n), dim_equivariant_k(s, n).get_str(),
           series.coeff(n).sum_of_coefficients().get_str()});
  }
  return t.str();
}

// ------------------------------------------------------------- selfcheck

std::vector<Check> run_selfcheck(const std::vector<SurfaceModel>& surfaces, int order) {
  std::vector<Check> checks;
  auto record = [&](std::string identity, std::string scope, const std::function<std::string()>& body) {
    Check c{std::move(identity), std::move(scope), true, {}};
    c.detail = body();
    c.pass = c.detail.empty();
    checks.push_back(std::move(c));
  };
  auto sides = [](const std::string& what, const std::string& lhs, const std::string& rhs) {
    return what + ": lhs=" + lhs + " rhs=" + rhs;
  };
  const std::string upto = "n<=" + std::to_string(order);

  for (const auto& s : surfaces) {
    const std::string scope = s.name() + " " + upto;
    const auto product = poincare_hilbert_product(s, order);
    record("goettsche_product_vs_decomposition", scope, [&]() -> std::string {
      for (int n = 0; n <= order; ++n) {
        const auto rhs = decomposition_poincare(s, n);
        if (!(product.coeff(n) == rhs)) return sides("n=" + std::to_string(n), product.coeff(n).str(), rhs.str());
      }
      return {};
    });
    record("sym_enumeration_vs_product", scope, [&]() -> std::string {
      for (int m = 0; m <= order; ++m) {
        const auto a = poincare_sym(s, m);
        const auto b = poincare_sym_product(s, m);
        if (!(a == b)) return sides("m=" + std::to_string(m), a.str(), b.str());
      }
      return {};
    });
    record("fock_character_vs_product", scope, [&]() -> std::string {
      const auto ch = graded_character(s, order);
      for (int n = 0; n <= order; ++n) {
        if (!(ch.coeff(n) == product.coeff(n))) {
          return sides("n=" + std::to_string(n), ch.coeff(n).str(), product.coeff(n).str());
        }
      }
      return {};
    });
    record("supercommutation_relations", s.name() + " modes<=5", [&]() -> std::string {
      const auto tally = check_relations(s, 5, 10, 7);
      for (const auto& r : tally) {
        if (!r.failed.empty()) return r.failed.front();
      }
      return {};
    });
    record("euler_vs_orbifold", scope, [&]() -> std::string {
      for (int n = 0; n <= order; ++n) {
        const auto a = euler_hilbert(s.euler(), n);
        const auto b = orbifold_euler(s.euler(), n);
        const auto c = substitute(product.coeff(n), {{Var::t, Rational(-1)}}).coefficient({0, 0, 0});
        if (a != b || Rational(a) != c) {
          return sides("n=" + std::to_string(n), a.get_str() + "," + b.get_str(), c.get_str());
        }
      }
      return {};
    });
    record("ktheory_vs_total_betti", scope, [&]() -> std::string {
      for (int n = 0; n <= order; ++n) {
        const auto a = dim_equivariant_k(s, n);
        const auto b = product.coeff(n).sum_of_coefficients();
        if (Rational(a) != b) return sides("n=" + std::to_string(n), a.get_str(), b.get_str());
      }
      return {};
    });
    if (s.has_hodge()) {
      record("hodge_collapse_vs_poincare", scope, [&]() -> std::string {
        const auto hp = hodge_hilbert_product(s, order);
        for (int n = 0; n <= order; ++n) {
          const auto h = hodge_hilbert(s, n);
          const auto collapsed = substitute(h, {{Var::x, Var::t}, {Var::y, Var::t}});
          const auto p = decomposition_poincare(s, n);
          if (!(collapsed == p)) return sides("n=" + std::to_string(n), collapsed.str(), p.str());
          if (!(hp.coeff(n) == h)) return sides("product n=" + std::to_string(n), hp.coeff(n).str(), h.str());
        }
        return {};
      });
    }
    record("leray_degeneration", scope, [&]() -> std::string {
      for (int n = 0; n <= order; ++n) {
        if (!global_degeneration_check(s, n)) {
          return sides("n=" + std::to_string(n), decomposition_poincare(s, n).str(),
                       leray_regrouped_poincare(s, n).str());
        }
      }
      return {};
    });
  }

  record("local_fiber_check", upto, [&]() -> std::string {
    for (int n = 1; n <= order; ++n) {
      for (const auto& nu : enumerate(n)) {
        if (!local_fiber_check(nu)) return "nu=" + nu.str();
      }
    }
    return {};
  });
  record("stalk_disjoint_union", upto, [&]() -> std::string {
    for (int n = 1; n <= order; ++n) {
      for (const auto& nu : enumerate(n)) {
        for (int h = 0; h < n; ++h) {
          std::size_t by_a = 0;
          for (const auto& a : enumerate(n)) {
            if (a.length() == n - h) by_a += fiber_S_a(a, nu).size();
          }
          const auto by_h = fiber_S_h(h, nu).size();
          if (by_a != by_h) {
            return sides("nu=" + nu.str() + " h=" + std::to_string(h), std::to_string(by_h), std::to_string(by_a));
          }
        }
      }
    }
    return {};
  });
  record("punctual_top_betti", upto, [&]() -> std::string {
    for (int n = 1; n <= order; ++n) {
      const auto top = punctual_top_betti(n);
      if (top.top_coefficient != 1 || !top.vanishes_above) return "n=" + std::to_string(n) + ": " + poincare_punctual(n).str();
    }
    return {};
  });
  record("euler_vs_orbifold_range", "e in -10..30 " + upto, [&]() -> std::string {
    for (long e = -10; e <= 30; ++e) {
      for (int n = 0; n <= order; ++n) {
        const auto a = euler_hilbert(e, n);
        const auto b = orbifold_euler(e, n);
        if (a != b) return sides("e=" + std::to_string(e) + " n=" + std::to_string(n), a.get_str(), b.get_str());
      }
    }
    return {};
  });
  const int adhm_max = std::min(order, 6);
  record("adhm_monomial_ideals", "n<=" + std::to_string(adhm_max), [&]() -> std::string {
    for (int n = 1; n <= adhm_max; ++n) {
      for (const auto& mu : enumerate(n)) {
        const auto tr = from_monomial_ideal(mu);
        const auto cycle = barlet_support(tr);
        const bool at_origin = cycle.size() == 1 && cycle[0].x.is_zero() && cycle[0].y.is_zero() &&
                               cycle[0].multiplicity == n;
        if (!is_commuting(tr) || !is_stable(tr) || !at_origin || !in_bidisk(tr) ||
            !(support_staircase(tr) == mu)) {
          return "mu=" + mu.str();
        }
      }
    }
    return {};
  });
  return checks;
}

int cmd_selfcheck(const Options& o, std::string& table, std::ostream& err) {
  std::vector<SurfaceModel> surfaces;
  if (o.surface.empty()) {
    surfaces = presets::all();
  } else {
    surfaces.push_back(require_surface(o));
  }
  return report_checks(run_selfcheck(surfaces, o.order), table, err);
}

}  // namespace

int report_checks(const std::vector<Check>& checks, std::string& table, std::ostream& err) {
  Table t({"identity", "scope", "status"});
  bool ok = true;
  for (const auto& c : checks) {
    t.row({c.identity, c.scope, c.pass ? "pass" : "FAIL"});
    if (!c.pass) err << "FAILED " << c.identity << " [" << c.scope << "] " << c.detail << '\n';
    ok &= c.pass;
  }
  table = t.str();
  return ok ? kExitOk : kExitIdentityFailure;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact invariants of Hilbert schemes of points on surfaces", "douady"};
  app.require_subcommand(1);
  Options o;

  struct Sub {
    const char* name;
    const char* help;
  };
  const Sub subs[] = {
      {"goettsche", "Poincare polynomials of X^[n] from the product formula"},
      {"sym", "Poincare polynomials of symmetric products X^(m)"},
      {"punctual", "Poincare polynomials of punctual Hilbert schemes"},
      {"euler", "Euler numbers of X^[n]"},
      {"hodge", "Hodge polynomials of X^[n]"},
      {"fock", "Graded Fock-space character, or the level-n basis with --n"},
      {"commutators", "Check the Heisenberg/Clifford relations on random states"},
      {"strata", "Support strata (--h) or stalk tables of the Douady-Barlet map"},
      {"adhm", "Monomial-ideal triples (--n) or analysis of a triple file (--triple)"},
      {"ktheory", "Equivariant K-theory dimensions against total Betti numbers"},
      {"selfcheck", "Run every cross-identity up to --order"},
  };
  for (const auto& sub : subs) {
    CLI::App* c = app.add_subcommand(sub.name, sub.help);
    c->set_help_flag("--help", "Print this help message and exit");
    c->add_option("--surface", o.surface, "Preset name (delta, c2, p2, p1xp1, k3, abelian) or config file");
    c->add_option("--n", o.n, "Level / number of points");
    c->add_option("--order", o.order, "Truncation order")->check(CLI::NonNegativeNumber);
    c->add_option("--output", o.output, "Write the table to this path instead of stdout");
    c->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"tsv"}));
    const std::string name = sub.name;
    if (name == "strata") c->add_option("--h", o.h, "Cohomological index h of R^{2h}");
    if (name == "euler") c->add_option("--e", o.e, "Euler number of the surface (overrides --surface)");
    if (name == "adhm") c->add_option("--triple", o.triple, "Triple file");
    if (name == "commutators") {
      c->add_option("--states", o.states, "Random states to test")->check(CLI::PositiveNumber);
      c->add_option("--seed", o.seed, "Random seed");
    }
  }

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  const std::string command = app.get_subcommands().front()->get_name();
  std::string table;
  int code = kExitOk;
  try {
    if (command == "goettsche") table = cmd_goettsche(o);
    else if (command == "sym") table = cmd_sym(o);
    else if (command == "punctual") table = cmd_punctual(o);
    else if (command == "euler") table = cmd_euler(o);
    else if (command == "hodge") table = cmd_hodge(o);
    else if (command == "fock") table = cmd_fock(o);
    else if (command == "commutators") code = cmd_commutators(o, table, err);
    else if (command == "strata") table = cmd_strata(o);
    else if (command == "adhm") table = cmd_adhm(o);
    else if (command == "ktheory") table = cmd_ktheory(o);
    else if (command == "selfcheck") code = cmd_selfcheck(o, table, err);
  } catch (const UsageError& e) {
    err << "error: " << e.message << '\n';
    return kExitUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  if (o.output.empty()) {
    out << table;
  } else {
    std::ofstream file(o.output);
    if (!file) {
      err << "error: --output: cannot write '" << o.output << "'\n";
      return kExitUsage;
    }
    file << table;
  }
  return code;
}

}  // namespace douady::cli
