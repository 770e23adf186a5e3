#include "fibchain/cli.hpp"

#include "fibchain/cutproject.hpp"
#include "fibchain/golden.hpp"
#include "fibchain/io.hpp"
#include "fibchain/ktheory.hpp"
#include "fibchain/partition.hpp"
#include "fibchain/svg.hpp"
#include "fibchain/word.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

namespace fib {

namespace {

constexpr const char* kSchema = "fibchain.v1";

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct DomainError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

GoldenRational parse_value(const std::string& text, const std::string& flag) {
  auto v = parse_golden(text);
  if (!v)
    throw UsageError(flag + ": expected an exact value 'p', 'p/q' or 'p+q*tau/d' (decimals are "
                            "rejected), got '" + text + "'");
  return *v;
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw DomainError("cannot open output file: " + path);
  f << content;
}

void emit(std::ostream& out, const json& j, bool pretty) {
  out << j.dump(pretty ? 2 : -1) << "\n";
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Fibonacci chains, the Kronecker-foliation partition tower, and the "
               "ordered K0 group, in exact golden-ratio arithmetic"};
  app.require_subcommand(1);
  bool pretty = false;
  unsigned long long seed = 0;
  app.add_flag("--pretty", pretty, "indented, human-oriented output");
  app.add_option("--seed", seed, "seed for randomized test-data generation");

  // generate
  auto* c_gen = app.add_subcommand("generate", "n-fold deflation of L");
  int gen_steps = 0;
  c_gen->add_option("--steps", gen_steps, "number of deflations")->required();

  // cut
  auto* c_cut = app.add_subcommand("cut", "grid-crossing chain of y = x/tau + b");
  std::string cut_b;
  std::size_t cut_count = 0;
  std::string cut_policy;
  bool cut_events = false;
  c_cut->add_option("--b", cut_b, "y-intercept (exact)")->required();
  c_cut->add_option("--count", cut_count, "number of letters")->required();
  c_cut->add_option("--policy", cut_policy, "upper|lower, for singular intercepts");
  c_cut->add_flag("--events", cut_events, "include the crossing-event stream");

  // strip
  auto* c_strip = app.add_subcommand("strip", "window/staircase projection chain");
  std::string strip_c;
  std::size_t strip_count = 0;
  c_strip->add_option("--c", strip_c, "window bottom (exact)")->required();
  c_strip->add_option("--count", strip_count, "number of letters")->required();

  // index
  auto* c_index = app.add_subcommand("index", "index prefix of an intercept");
  std::string index_b;
  int index_depth = 0;
  c_index->add_option("--b", index_b, "y-intercept in (0,1) (exact)")->required();
  c_index->add_option("--depth", index_depth, "prefix depth")->required();

  // partition
  auto* c_part = app.add_subcommand("partition", "the interval tower W_n");
  int part_level = 0;
  std::string part_svg;
  c_part->add_option("--level", part_level, "tower level")->required();
  c_part->add_option("--svg", part_svg, "write a tower diagram to this file");

  // orbit
  auto* c_orbit = app.add_subcommand("orbit", "irrational-rotation orbit");
  std::size_t orbit_count = 0;
  std::string orbit_start = "2-1*tau";  // 1/tau^2
  std::string orbit_step = "1-1*tau";   // -1/tau
  c_orbit->add_option("--count", orbit_count, "number of points")->required();
  c_orbit->add_option("--start", orbit_start, "start point (default 1/tau^2)");
  c_orbit->add_option("--step", orbit_step, "step (default -1/tau)");

  // bratteli
  auto* c_brat = app.add_subcommand("bratteli", "dimension data of the diagram");
  int brat_levels = 0;
  std::string brat_dot, brat_svg;
  c_brat->add_option("--levels", brat_levels, "number of levels")->required();
  c_brat->add_option("--dot", brat_dot, "write a DOT graph to this file");
  c_brat->add_option("--svg", brat_svg, "write a diagram to this file");

  // cone
  auto* c_cone = app.add_subcommand("cone", "K0 positive-cone membership of a + b*tau");
  std::string cone_a, cone_b;
  int cone_level = -1;
  c_cone->add_option("--a", cone_a, "integer part")->required();
  c_cone->add_option("--b", cone_b, "tau coefficient")->required();
  c_cone->add_option("--level", cone_level, "finite level n (default: the limit cone)");

  // equiv
  auto* c_eq = app.add_subcommand("equiv", "leaf or tail equivalence");
  std::string eq_b1, eq_b2, eq_z1, eq_z2;
  c_eq->add_option("--b1", eq_b1, "first intercept (exact)");
  c_eq->add_option("--b2", eq_b2, "second intercept (exact)");
  c_eq->add_option("--z1", eq_z1, "first index prefix, e.g. 00010");
  c_eq->add_option("--z2", eq_z2, "second index prefix");

  // lines
  auto* c_lines = app.add_subcommand("lines", "window lattice lines by parallel distance");
  std::size_t lines_limit = 0;
  c_lines->add_option("--limit", lines_limit, "number of lines")->required();

  // render
  auto* c_render = app.add_subcommand("render", "metric tiling of a word");
  std::string render_word, render_svg;
  c_render->add_option("--word", render_word, "word over LS")->required();
  c_render->add_option("--svg", render_svg, "write the tiling strip to this file");

  std::vector<std::string> argv(args.rbegin(), args.rend());
  try {
    app.parse(argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return 1;
  }

  try {
    json j{{"schema", kSchema}};
    if (*c_gen) {
      if (gen_steps < 0) throw UsageError("--steps: must be non-negative");
      j["word"] = fixed_word(gen_steps);
      emit(out, j, pretty);
    } else if (*c_cut) {
      GoldenRational b = parse_value(cut_b, "--b");
      if (cut_count < 1) throw UsageError("--count: must be positive");
      SingularPolicy policy = SingularPolicy::Lower;
      if (cut_policy.empty()) {
        if (is_singular(b))
          throw DomainError("singular intercept: the line passes a lattice point and admits two "
                            "chains ('SL' with --policy upper, 'LS' with --policy lower)");
      } else if (cut_policy == "upper") {
        policy = SingularPolicy::Upper;
      } else if (cut_policy == "lower") {
        policy = SingularPolicy::Lower;
      } else {
        throw UsageError("--policy: expected 'upper' or 'lower'");
      }
      CutChain chain = cut_chain(b, cut_count, policy);
      j["word"] = chain.word;
      if (cut_events) {
        json evs = json::array();
        for (const CrossingEvent& ev : chain.events) evs.push_back(to_json(ev));
        j["events"] = std::move(evs);
      }
      emit(out, j, pretty);
    } else if (*c_strip) {
      GoldenRational c = parse_value(strip_c, "--c");
      if (strip_count < 1) throw UsageError("--count: must be positive");
      StripChain chain = strip_chain(c, strip_count);
      j["word"] = chain.word;
      json pts = json::array();
      for (const auto& [r, s] : chain.points)
        pts.push_back(json::array({r.convert_to<long long>(), s.convert_to<long long>()}));
      j["points"] = std::move(pts);
      emit(out, j, pretty);
    } else if (*c_index) {
      GoldenRational b = parse_value(index_b, "--b");
      InterceptIndexResult r = index_from_intercept(b, index_depth);
      if (r.singular)
        throw DomainError("singular intercept: equals a tower boundary first created at level " +
                          std::to_string(r.singular_level));
      j["prefix"] = r.prefix.str();
      emit(out, j, pretty);
    } else if (*c_part) {
      Partition w = build_partition(part_level);
      json pj = to_json(w);
      pj["schema"] = kSchema;
      if (!part_svg.empty()) write_file(part_svg, svg_tower(part_level));
      emit(out, pj, pretty);
    } else if (*c_orbit) {
      auto orbit = rotation_orbit(parse_value(orbit_start, "--start"), orbit_count,
                                  parse_value(orbit_step, "--step"));
      json pts = json::array();
      for (const GoldenRational& x : orbit) pts.push_back(to_json(x));
      j["orbit"] = std::move(pts);
      emit(out, j, pretty);
    } else if (*c_brat) {
      if (brat_levels < 0) throw UsageError("--levels: must be non-negative");
      json bj = bratteli_json(brat_levels);
      bj["schema"] = kSchema;
      if (!brat_dot.empty()) write_file(brat_dot, bratteli_dot(brat_levels));
      if (!brat_svg.empty()) write_file(brat_svg, svg_bratteli(brat_levels));
      emit(out, bj, pretty);
    } else if (*c_cone) {
      auto pa = parse_golden(cone_a), pb = parse_golden(cone_b);
      if (!pa || !pb || pa->q() != 0 || pa->den() != 1 || pb->q() != 0 || pb->den() != 1)
        throw UsageError("--a/--b: expected integers");
      K0Element e{pa->p(), pb->p()};
      int s = GoldenInt{e.a, e.b}.sign();
      j["sign"] = s > 0 ? "+" : s < 0 ? "-" : "0";
      if (cone_level >= 0) {
        j["member"] = cone_member_finite(cone_level, e);
        j["level"] = cone_level;
      } else {
        j["member"] = cone_member_limit(e);
      }
      emit(out, j, pretty);
    } else if (*c_eq) {
      const bool by_b = !eq_b1.empty() || !eq_b2.empty();
      const bool by_z = !eq_z1.empty() || !eq_z2.empty();
      if (by_b == by_z || (by_b && (eq_b1.empty() || eq_b2.empty())) ||
          (by_z && (eq_z1.empty() || eq_z2.empty())))
        throw UsageError("equiv: give either --b1 and --b2, or --z1 and --z2");
      if (by_b) {
        j["leaf_equivalent"] =
            leaf_equivalent(parse_value(eq_b1, "--b1"), parse_value(eq_b2, "--b2"));
      } else {
        IndexPrefix z1, z2;
        try {
          z1 = IndexPrefix::parse(eq_z1);
          z2 = IndexPrefix::parse(eq_z2);
        } catch (const InvalidWord& e) {
          throw UsageError(std::string("equiv: ") + e.what());
        }
        TailVerdict v = tail_equiv(z1, z2);
        j["verdict"] = v.kind == TailVerdict::EquivalentFrom   ? "equivalent_from"
                       : v.kind == TailVerdict::DistinctThrough ? "distinct_through"
                                                                : "inconclusive";
        j["index"] = v.index;
      }
      emit(out, j, pretty);
    } else if (*c_lines) {
      json arr = json::array();
      for (const LatticeLine& line : enumerate_window_lines(lines_limit))
        arr.push_back(to_json(line));
      j["lines"] = std::move(arr);
      emit(out, j, pretty);
    } else if (*c_render) {
      for (char ch : render_word)
        if (ch != 'L' && ch != 'S') throw DomainError("render: word letters must be L or S");
      auto tiles = render_tiling(render_word);
      json arr = json::array();
      for (const Tile& t : tiles)
        arr.push_back(json{{"start", t.start}, {"length", t.length}, {"kind", std::string(1, t.kind)}});
      j["tiles"] = std::move(arr);
      if (!render_svg.empty()) write_file(render_svg, svg_tiling(tiles));
      emit(out, j, pretty);
    }
    return 0;
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return 1;
  } catch (const CapExceeded& e) {
    err << "cap exceeded: " << e.what() << "\n";
    return 3;
  } catch (const std::invalid_argument& e) {
    err << "domain error: " << e.what() << "\n";
    return 2;
  } catch (const std::domain_error& e) {
    err << "domain error: " << e.what() << "\n";
    return 2;
  } catch (const std::out_of_range& e) {
    err << "domain error: " << e.what() << "\n";
    return 2;
  } catch (const DomainError& e) {
    err << "domain error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace fib
