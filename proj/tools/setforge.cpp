// Command-line front end: families and partitions go in and out as JSON,
// closures, censuses, minimality checks and the interval algebra are run
// by the library. Exit codes: 0 success, 1 domain/input failure, 2 usage.

#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>
#include <omp.h>

#include "setforge/closure_kernel.hpp"
#include "setforge/family.hpp"
#include "setforge/intervals.hpp"
#include "setforge/json_io.hpp"
#include "setforge/minimal.hpp"
#include "setforge/partition.hpp"
#include "setforge/separability.hpp"
#include "setforge/steps.hpp"

namespace {

using nlohmann::json;
using nlohmann::ordered_json;
using namespace setforge;

std::string read_text(const std::string& path) {
  std::ostringstream buf;
  if (path == "-") {
    buf << std::cin.rdbuf();
  } else {
    std::ifstream in(path);
    if (!in) throw input_error("cannot read file '" + path + "'");
    buf << in.rdbuf();
  }
  return buf.str();
}

json parse_json(const std::string& path) {
  try {
    return json::parse(read_text(path));
  } catch (const json::parse_error& e) {
    throw input_error(std::string("invalid JSON in '") + path + "': " + e.what());
  }
}

Family load_family(const std::string& path) { return family_from_json(parse_json(path)); }

std::string set_text(const ElementSet& s) {
  std::string out = "{";
  bool first = true;
  for (int e : s.elements()) {
    if (!first) out += ",";
    out += std::to_string(e);
    first = false;
  }
  return out + "}";
}

void print_family_human(const Family& f, const std::string& label) {
  std::cout << "universe: " << f.universe().size() << "\n"
            << label << " (" << f.size() << "):\n";
  for (std::size_t i = 0; i < f.size(); ++i)
    std::cout << "  " << set_text(f.member(i)) << "\n";
}

void print_blocks_human(const Partition& p, const std::string& label) {
  std::cout << "universe: " << p.universe().size() << "\n"
            << label << " (" << p.size() << "):\n";
  for (set_mask b : p.blocks())
    std::cout << "  " << set_text(ElementSet(p.universe(), b)) << "\n";
}

json big_to_json(const big_int& x) {
  static const big_int max_plain = (big_int(1) << 63) - 1;
  if (x <= max_plain) return json(x.convert_to<std::int64_t>());
  return json(x.str());
}

ordered_json trace_to_json(const StepTrace& t) {
  ordered_json entries = ordered_json::array();
  for (const auto& e : t.entries)
    entries.push_back(ordered_json{{"step", e.step}, {"size", e.family_size}});
  ordered_json out;
  out["entries"] = std::move(entries);
  out["fixpoint_index"] = t.fixpoint_index;
  return out;
}

void print_interval_set(const IntervalSet& s, bool as_json) {
  if (as_json) {
    std::cout << interval_set_to_json(s).dump() << "\n";
    return;
  }
  std::cout << "points:";
  if (s.points().empty()) std::cout << " (none)";
  for (const rational& p : s.points()) std::cout << " " << rational_to_string(p);
  std::cout << "\nintervals:";
  if (s.intervals().empty()) std::cout << " (none)";
  for (const Interval& iv : s.intervals())
    std::cout << " (" << ext_real_to_string(iv.lo) << ", " << ext_real_to_string(iv.hi) << ")";
  std::cout << "\n";
}

Family partition_family_of_size(int n) {
  // {{1}, {2}, ..., {n}} as the reference n-block generator
  std::vector<set_mask> blocks;
  for (int i = 0; i < n; ++i) blocks.push_back(set_mask{1} << i);
  return Family::normalized(Universe(n), std::move(blocks));
}

struct CliConfig {
  bool as_json = false;
  bool deep = false;
  std::size_t max_sets = default_max_sets;
  int workers = 0;
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"setforge: closure calculus for finite set families"};
  app.require_subcommand(1);
  app.fallthrough();

  CliConfig cfg;
  if (const char* env = std::getenv("SETFORGE_MAX_SETS")) {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (end && *end == '\0' && v > 0) cfg.max_sets = static_cast<std::size_t>(v);
  }
  app.add_flag("--json", cfg.as_json, "machine-readable JSON output");
  app.add_flag("--deep", cfg.deep, "extend step checks to larger ladders (n up to 14)");
  app.add_option("--max-sets", cfg.max_sets,
                 "cap on materialized family size (env SETFORGE_MAX_SETS)")
      ->check(CLI::PositiveNumber);
  app.add_option("--workers", cfg.workers, "OpenMP thread count (0 = library default)")
      ->check(CLI::NonNegativeNumber);

  std::function<int()> run;

  // close <family.json> [--fixpoint | --steps n]
  auto* close_cmd = app.add_subcommand("close", "close a family under union/intersection/complement");
  {
    static std::string path;
    static int steps = -1;
    static bool fixpoint = false;
    close_cmd->add_option("family", path, "family JSON file, or - for stdin")->required();
    auto* s = close_cmd->add_option("--steps", steps, "apply exactly this many closure steps");
    close_cmd->add_flag("--fixpoint", fixpoint, "iterate to the generated algebra (default)")
        ->excludes(s);
    close_cmd->callback([&] {
      run = [&] {
        const Family f = load_family(path);
        if (steps >= 0) {
          const Family out = close_n(f, steps, cfg.max_sets);
          if (cfg.as_json) std::cout << family_to_json(out).dump() << "\n";
          else print_family_human(out, "sets");
          return 0;
        }
        const FixpointResult r = close_fixpoint(f, cfg.max_sets);
        if (cfg.as_json) {
          ordered_json out;
          out["family"] = family_to_json(r.family);
          out["trace"] = trace_to_json(r.trace);
          std::cout << out.dump() << "\n";
        } else {
          print_family_human(r.family, "sets");
          for (const auto& e : r.trace.entries)
            std::cout << "step " << e.step << ": " << e.family_size << " sets\n";
          std::cout << "fixpoint at step " << r.trace.fixpoint_index << "\n";
        }
        return 0;
      };
    });
  }

  // steps formula|empirical|bset|check
  auto* steps_cmd = app.add_subcommand("steps", "step counts for closing partitions");
  steps_cmd->require_subcommand(1);
  {
    static long long n_blocks = 0;
    auto* formula = steps_cmd->add_subcommand("formula", "closed-form steps for an n-block partition");
    formula->add_option("n", n_blocks, "number of blocks")->required();
    formula->callback([&] {
      run = [&] {
        const int s = steps_formula(n_blocks);
        if (cfg.as_json)
          std::cout << ordered_json{{"n", n_blocks}, {"steps", s}}.dump() << "\n";
        else
          std::cout << s << "\n";
        return 0;
      };
    });

    static std::string emp_path;
    auto* empirical = steps_cmd->add_subcommand("empirical", "iterate a family to its fixpoint");
    empirical->add_option("family", emp_path, "family JSON file, or - for stdin")->required();
    empirical->callback([&] {
      run = [&] {
        const FixpointResult r = close_fixpoint(load_family(emp_path), cfg.max_sets);
        if (cfg.as_json)
          std::cout << ordered_json{{"steps", r.trace.fixpoint_index},
                                    {"trace", trace_to_json(r.trace)}}
                           .dump()
                    << "\n";
        else
          std::cout << r.trace.fixpoint_index << "\n";
        return 0;
      };
    });

    static std::string bset_path;
    static int bset_m = 0;
    auto* bset = steps_cmd->add_subcommand("bset", "union arities available at stage m");
    bset->add_option("family", bset_path, "family JSON file, or - for stdin")->required();
    bset->add_option("--m", bset_m, "closure stage")->required();
    bset->callback([&] {
      run = [&] {
        const BSet b = b_set(load_family(bset_path), bset_m, cfg.max_sets);
        if (cfg.as_json) {
          std::cout << ordered_json{{"m", b.m}, {"members", b.members}}.dump() << "\n";
        } else {
          std::cout << "B_" << b.m << " = {";
          for (std::size_t i = 0; i < b.members.size(); ++i)
            std::cout << (i ? "," : "") << b.members[i];
          std::cout << "}\n";
        }
        return 0;
      };
    });

    auto* check = steps_cmd->add_subcommand(
        "check", "formula vs. empirical steps for partition ladders (--deep: n up to 14)");
    check->callback([&] {
      run = [&] {
        const int top = cfg.deep ? 14 : 10;
        ordered_json results = ordered_json::array();
        bool all_ok = true;
        for (int n = 1; n <= top; ++n) {
          const Family p = partition_family_of_size(n);
          const int measured = close_fixpoint(p, cfg.max_sets).trace.fixpoint_index;
          const int predicted = steps_formula(n);
          const bool ok = measured == predicted;
          all_ok = all_ok && ok;
          if (cfg.as_json)
            results.push_back(ordered_json{
                {"n", n}, {"formula", predicted}, {"empirical", measured}, {"ok", ok}});
          else
            std::cout << "n=" << n << " formula=" << predicted << " empirical=" << measured
                      << (ok ? " ok" : " MISMATCH") << "\n";
        }
        if (cfg.as_json)
          std::cout << ordered_json{{"results", std::move(results)}, {"all_ok", all_ok}}.dump()
                    << "\n";
        else
          std::cout << (all_ok ? "all ok" : "MISMATCH") << "\n";
        return all_ok ? 0 : 1;
      };
    });
  }

  // atoms <family.json>
  auto* atoms_cmd = app.add_subcommand("atoms", "membership-signature atoms of a family");
  {
    static std::string path;
    atoms_cmd->add_option("family", path, "family JSON file, or - for stdin")->required();
    atoms_cmd->callback([&] {
      run = [&] {
        const Partition p = atoms(load_family(path));
        if (cfg.as_json) std::cout << partition_to_json(p).dump() << "\n";
        else print_blocks_human(p, "atoms");
        return 0;
      };
    });
  }

  // classes <family.json>
  auto* classes_cmd = app.add_subcommand("classes", "unseparability classes of a family");
  {
    static std::string path;
    classes_cmd->add_option("family", path, "family JSON file, or - for stdin")->required();
    classes_cmd->callback([&] {
      run = [&] {
        const SeparabilityClasses c = equivalence_classes(load_family(path));
        if (cfg.as_json) std::cout << partition_to_json(c.blocks).dump() << "\n";
        else print_blocks_human(c.blocks, "classes");
        return 0;
      };
    });
  }

  // is-algebra <family.json>
  auto* isalg_cmd = app.add_subcommand("is-algebra", "closure under complement and pairwise union/intersection");
  {
    static std::string path;
    isalg_cmd->add_option("family", path, "family JSON file, or - for stdin")->required();
    isalg_cmd->callback([&] {
      run = [&] {
        const bool alg = is_algebra(load_family(path));
        if (cfg.as_json) std::cout << ordered_json{{"is_algebra", alg}}.dump() << "\n";
        else std::cout << (alg ? "true" : "false") << "\n";
        return 0;
      };
    });
  }

  // from-partition <partition.json>
  auto* fromp_cmd = app.add_subcommand("from-partition", "algebra generated by a partition");
  {
    static std::string path;
    fromp_cmd->add_option("partition", path, "partition JSON file, or - for stdin")->required();
    fromp_cmd->callback([&] {
      run = [&] {
        const Family alg = algebra_from_partition(partition_from_json(parse_json(path)), cfg.max_sets);
        if (cfg.as_json) std::cout << family_to_json(alg).dump() << "\n";
        else print_family_human(alg, "sets");
        return 0;
      };
    });
  }

  // to-partition <algebra.json>
  auto* top_cmd = app.add_subcommand("to-partition", "unseparability partition of an algebra");
  {
    static std::string path;
    top_cmd->add_option("algebra", path, "algebra JSON file, or - for stdin")->required();
    top_cmd->callback([&] {
      run = [&] {
        const Partition p = partition_from_algebra(load_family(path));
        if (cfg.as_json) std::cout << partition_to_json(p).dump() << "\n";
        else print_blocks_human(p, "blocks");
        return 0;
      };
    });
  }

  // count-algebras <n> [--exhaustive]
  auto* census_cmd = app.add_subcommand("count-algebras", "distinct algebras over {1..n}");
  {
    static int n = 0;
    static bool exhaustive = false;
    census_cmd->add_option("n", n, "universe size")->required();
    census_cmd->add_flag("--exhaustive", exhaustive,
                         "recount by closing every non-empty family (n up to 4)");
    census_cmd->callback([&] {
      run = [&] {
        const AlgebraCensus c = algebra_census(n, exhaustive);
        if (cfg.as_json) {
          ordered_json out;
          out["n"] = c.n;
          out["partition_count"] = big_to_json(c.partition_count);
          out["exhaustive_count"] = c.exhaustive_count ? big_to_json(*c.exhaustive_count) : json();
          out["agree"] = c.agree;
          std::cout << out.dump() << "\n";
        } else {
          std::cout << "partition count: " << c.partition_count.str() << "\n";
          if (c.exhaustive_count)
            std::cout << "exhaustive count: " << c.exhaustive_count->str() << "\n"
                      << (c.agree ? "counts agree" : "COUNTS DISAGREE") << "\n";
        }
        return c.agree ? 0 : 1;
      };
    });
  }

  // minimal check|generate|enum
  auto* minimal_cmd = app.add_subcommand("minimal", "n-minimal constructibility");
  minimal_cmd->require_subcommand(1);
  {
    static std::string check_path;
    static int check_n = 1;
    static bool fat = false;
    auto* check = minimal_cmd->add_subcommand("check", "is the family n-minimal?");
    check->add_option("family", check_path, "family JSON file, or - for stdin")->required();
    check->add_option("--n", check_n, "step count")->required();
    check->add_flag("--fat", fat, "require C_{n-1}(U) itself to be out of reach");
    check->callback([&] {
      run = [&] {
        const Family f = load_family(check_path);
        const MinimalityReport r = fat ? is_n_minimal_fat(f, check_n, cfg.max_sets)
                                       : is_n_minimal_constructible(f, check_n, cfg.max_sets);
        if (cfg.as_json) {
          ordered_json out;
          out["n"] = r.n;
          out["kind"] = r.kind == MinimalityKind::fat ? "fat" : "standard";
          out["is_minimal"] = r.is_minimal;
          if (r.witness) {
            ordered_json w;
            w["removed"] = r.witness->removed.elements();
            w["closure_size"] = r.witness->closure.size();
            out["witness"] = std::move(w);
          } else {
            out["witness"] = json();
          }
          std::cout << out.dump() << "\n";
        } else if (r.is_minimal) {
          std::cout << "minimal (n=" << r.n << ")\n";
        } else {
          std::cout << "not minimal: dropping " << set_text(r.witness->removed) << " still reaches "
                    << (r.kind == MinimalityKind::fat ? "stage n-1 of the family" : "the family")
                    << " within " << r.n << " steps\n";
        }
        return 0;
      };
    });

    static std::string gen_path;
    static bool all_n = false;
    auto* gen = minimal_cmd->add_subcommand("generate", "minimal generator for an algebra");
    gen->add_option("algebra", gen_path, "algebra JSON file, or - for stdin")->required();
    gen->add_flag("--all-n", all_n, "generator that stays minimal for every n");
    gen->callback([&] {
      run = [&] {
        const Family a = load_family(gen_path);
        const Family g = all_n ? generator_all_n(a) : generator_1mc(a);
        if (cfg.as_json) std::cout << family_to_json(g).dump() << "\n";
        else print_family_human(g, "generator");
        return 0;
      };
    });

    static int enum_u = 0;
    static int enum_n = 1;
    static std::size_t enum_max = ~std::size_t{0};
    auto* en = minimal_cmd->add_subcommand("enum", "stream every n-minimal family (universe up to 4)");
    en->add_option("--universe", enum_u, "universe size")->required();
    en->add_option("--n", enum_n, "step count")->required();
    en->add_option("--max-size", enum_max, "largest family size to consider");
    en->callback([&] {
      run = [&] {
        MinimalFamilyStream stream(enum_u, enum_n, enum_max, cfg.max_sets);
        while (auto f = stream.next())
          std::cout << family_to_json(*f).dump() << "\n";
        return 0;
      };
    });
  }

  // intervals <op> ...
  auto* iv_cmd = app.add_subcommand("intervals", "exact interval algebra over the rationals");
  iv_cmd->require_subcommand(1);
  {
    static std::string a_path, b_path, value_text;

    auto add_unary = [&](const char* name, const char* help, auto action) {
      auto* sub = iv_cmd->add_subcommand(name, help);
      sub->add_option("a", a_path, "interval-set JSON file, or - for stdin")->required();
      sub->callback([&, action] {
        run = [&, action] {
          return action(interval_set_from_json(parse_json(a_path)));
        };
      });
      return sub;
    };

    add_unary("normalize", "canonical form of a point/interval collection", [&](const IntervalSet& a) {
      print_interval_set(a, cfg.as_json);
      return 0;
    });
    add_unary("complement", "complement within the reals", [&](const IntervalSet& a) {
      print_interval_set(a.complement(), cfg.as_json);
      return 0;
    });
    add_unary("bound", "upper bound on construction steps", [&](const IntervalSet& a) {
      if (cfg.as_json) std::cout << ordered_json{{"bound", a.construction_bound()}}.dump() << "\n";
      else std::cout << a.construction_bound() << "\n";
      return 0;
    });
    add_unary("bounded", "reachable from bounded generators alone?", [&](const IntervalSet& a) {
      if (cfg.as_json) std::cout << ordered_json{{"bounded_ok", a.bounded_variant_ok()}}.dump() << "\n";
      else std::cout << (a.bounded_variant_ok() ? "true" : "false") << "\n";
      return 0;
    });

    auto add_binary = [&](const char* name, const char* help, auto combine) {
      auto* sub = iv_cmd->add_subcommand(name, help);
      sub->add_option("a", a_path, "interval-set JSON file, or - for stdin")->required();
      sub->add_option("b", b_path, "interval-set JSON file")->required();
      sub->callback([&, combine] {
        run = [&, combine] {
          const IntervalSet a = interval_set_from_json(parse_json(a_path));
          const IntervalSet b = interval_set_from_json(parse_json(b_path));
          print_interval_set(combine(a, b), cfg.as_json);
          return 0;
        };
      });
    };

    add_binary("union", "union of two interval sets",
               [](const IntervalSet& a, const IntervalSet& b) { return a.unite(b); });
    add_binary("intersect", "intersection of two interval sets",
               [](const IntervalSet& a, const IntervalSet& b) { return a.intersect(b); });

    auto* contains = iv_cmd->add_subcommand("contains", "membership of a rational");
    contains->add_option("a", a_path, "interval-set JSON file, or - for stdin")->required();
    contains->add_option("x", value_text, "rational: p/q, integer, or decimal")->required();
    contains->callback([&] {
      run = [&] {
        const IntervalSet a = interval_set_from_json(parse_json(a_path));
        const bool in = a.contains(rational_from_string(value_text));
        if (cfg.as_json) std::cout << ordered_json{{"contains", in}}.dump() << "\n";
        else std::cout << (in ? "true" : "false") << "\n";
        return 0;
      };
    });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_name() == "CallForHelp" || e.get_name() == "CallForAllHelp" ||
        e.get_name() == "CallForVersion")
      return app.exit(e);
    app.exit(e);
    return 2;
  }

  if (cfg.workers > 0) omp_set_num_threads(cfg.workers);

  try {
    return run ? run() : 0;
  } catch (const input_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const budget_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
