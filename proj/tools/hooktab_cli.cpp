// Command line front end: exact samplers for bounded tableaux and boxed
// plane partitions, the tabloid <-> (tableau, hook tabloid) maps with
// optional trace export, brute-force identity/fiber verification, counting,
// generating functions, and ASCII rendering.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "hooktab/bijection.hpp"
#include "hooktab/io.hpp"
#include "hooktab/qcount.hpp"
#include "hooktab/render.hpp"
#include "hooktab/sampler.hpp"

namespace {

using namespace hooktab;

Partition parse_shape_arg(const std::string& s) {
  std::vector<int> parts;
  std::stringstream in(s);
  std::string tok;
  while (std::getline(in, tok, ',')) {
    if (tok.empty()) continue;
    parts.push_back(std::stoi(tok));
  }
  return Partition(std::move(parts));
}

BoxDims parse_box_arg(const std::string& s) {
  std::vector<int> dims;
  std::stringstream in(s);
  std::string tok;
  while (std::getline(in, tok, ',')) dims.push_back(std::stoi(tok));
  if (dims.size() != 3) fail(errc::invalid_input, "--box expects a,b,c");
  return BoxDims{dims[0], dims[1], dims[2]};
}

std::uint64_t resolve_seed(bool seed_given, std::uint64_t flag_seed) {
  if (seed_given) return flag_seed;
  if (const char* env = std::getenv("HOOKTAB_SEED")) return std::strtoull(env, nullptr, 10);
  return 0;
}

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(errc::invalid_input, "cannot open " + path);
  json j;
  in >> j;
  return j;
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) fail(errc::invalid_input, "cannot open " + path + " for writing");
  out << text;
}

struct SampleArgs {
  std::string shape_str;
  std::string box_str;
  long long bound = 0;
  long long count = 1;
  std::uint64_t seed = 0;
  bool seed_given = false;
  bool report_moves = false;
  std::string format = "json";
};

int run_sample_ssyt(const SampleArgs& a) {
  Partition shape = parse_shape_arg(a.shape_str);
  std::uint64_t master = resolve_seed(a.seed_given, a.seed);
  for (long long i = 0; i < a.count; ++i) {
    Rng rng(Rng::mix(master, static_cast<std::uint64_t>(i)));
    auto rep = sample_ssyt(shape, a.bound, rng);
    if (a.format == "text") {
      std::cout << to_text(rep.value.filling());
      if (a.report_moves) std::cout << "moves " << rep.moves << "\n";
      std::cout << "\n";
    } else {
      std::cout << to_json(rep, a.report_moves).dump() << "\n";
    }
  }
  return 0;
}

int run_sample_pp(const SampleArgs& a) {
  BoxDims box = parse_box_arg(a.box_str);
  std::uint64_t master = resolve_seed(a.seed_given, a.seed);
  for (long long i = 0; i < a.count; ++i) {
    Rng rng(Rng::mix(master, static_cast<std::uint64_t>(i)));
    auto rep = sample_pp(box, rng);
    if (a.format == "text") {
      std::cout << to_text(rep.value.filling());
      if (a.report_moves) std::cout << "moves " << rep.moves << "\n";
      std::cout << "\n";
    } else {
      std::cout << to_json(rep, a.report_moves).dump() << "\n";
    }
  }
  return 0;
}

int run_map(const std::string& input, long long bound, const std::string& trace_file,
            const std::string& format) {
  Filling f = filling_from_json(read_json_file(input));
  ContentTabloid c(std::move(f), bound);
  HcOptions opt;
  opt.capture_trace = !trace_file.empty();
  HcForwardResult r = hc_forward(c, opt);
  if (!trace_file.empty()) write_text_file(trace_file, to_json(r.trace).dump(2) + "\n");
  if (format == "text") {
    std::cout << "tableau:\n" << to_text(r.tableau.filling());
    std::cout << "hook:\n" << to_text(r.hook.filling());
  } else {
    json out{{"tableau", to_json(r.tableau.filling())}, {"hook", to_json(r.hook.filling())}};
    std::cout << out.dump() << "\n";
  }
  return 0;
}

int run_unmap(const std::string& tableau_file, const std::string& hook_file, long long bound,
              const std::string& trace_file, const std::string& format) {
  SemistandardTableau t(filling_from_json(read_json_file(tableau_file)), bound);
  HookTabloid h(filling_from_json(read_json_file(hook_file)));
  HcOptions opt;
  opt.capture_trace = !trace_file.empty();
  HcInverseResult r = hc_inverse(t, h, opt);
  if (!trace_file.empty()) write_text_file(trace_file, to_json(r.trace).dump(2) + "\n");
  if (format == "text") {
    std::cout << "content:\n" << to_text(r.content.filling());
  } else {
    json out{{"content", to_json(r.content.filling())}};
    std::cout << out.dump() << "\n";
  }
  return 0;
}

int run_verify_identity(const std::string& shape_str, long long bound, const std::string& which) {
  Partition shape = parse_shape_arg(shape_str);
  IdentityKind kind;
  if (which == "1.1") kind = IdentityKind::product;
  else if (which == "1.2") kind = IdentityKind::hook_side;
  else if (which == "1.3") kind = IdentityKind::content_side;
  else fail(errc::invalid_input, "--which must be 1.1, 1.2 or 1.3");
  IdentityReport rep = verify_identity(kind, shape, bound);
  if (rep.pass) {
    std::cout << "PASS identity " << which << " shape " << to_string(shape) << " bound " << bound
              << "\n";
    return 0;
  }
  std::cout << "FAIL identity " << which << " shape " << to_string(shape) << " bound " << bound
            << "\n  lhs = " << rep.lhs.to_string() << "\n  rhs = " << rep.rhs.to_string() << "\n";
  return 1;
}

int run_verify_fibers(const std::string& shape_str, long long bound) {
  Partition shape = parse_shape_arg(shape_str);
  FiberReport rep = verify_fibers(shape, bound);
  if (rep.pass) {
    std::cout << "PASS fibers shape " << to_string(shape) << " bound " << bound << ": "
              << rep.tableau_count << " tableaux, each hit " << rep.fiber_size << " times\n";
    return 0;
  }
  std::cout << "FAIL fibers shape " << to_string(shape) << " bound " << bound << ": hits in ["
            << rep.min_hits << ", " << rep.max_hits << "], expected " << rep.fiber_size
            << (rep.outputs_match_enumeration ? "" : ", output set mismatch") << "\n";
  return 1;
}

int run_verify_roundtrip(const std::string& shape_str, long long bound, bool exhaustive,
                         long long samples, bool seed_given, std::uint64_t seed) {
  Partition shape = parse_shape_arg(shape_str);
  long long checked = 0, failed = 0;
  auto roundtrip = [&](const ContentTabloid& c) {
    HcForwardResult fwd = hc_forward(c);
    HcInverseResult inv = hc_inverse(fwd.tableau, fwd.hook);
    ++checked;
    if (!(inv.content == c)) ++failed;
  };
  if (exhaustive) {
    for_each_content(shape, bound, [&](const Filling& f) { roundtrip(ContentTabloid(f, bound)); });
  } else {
    std::uint64_t master = resolve_seed(seed_given, seed);
    for (long long i = 0; i < samples; ++i) {
      Rng rng(Rng::mix(master, static_cast<std::uint64_t>(i)));
      roundtrip(random_content_tabloid(shape, bound, rng));
    }
  }
  if (failed == 0) {
    std::cout << "PASS roundtrip shape " << to_string(shape) << " bound " << bound << ": "
              << checked << " tabloids\n";
    return 0;
  }
  std::cout << "FAIL roundtrip shape " << to_string(shape) << " bound " << bound << ": " << failed
            << " of " << checked << " tabloids did not return\n";
  return 1;
}

int run_count(const std::string& cls, const std::string& shape_str, long long bound,
              const std::string& box_str) {
  if (cls == "pp") {
    std::cout << count_plane_partitions(parse_box_arg(box_str)) << "\n";
    return 0;
  }
  Partition shape = parse_shape_arg(shape_str);
  if (cls == "ssyt") std::cout << count_ssyt(shape, bound) << "\n";
  else if (cls == "content") std::cout << count_content(shape, bound) << "\n";
  else if (cls == "hook") std::cout << count_hook(shape) << "\n";
  else fail(errc::invalid_input, "--class must be ssyt, content, hook or pp");
  return 0;
}

int run_gf(const std::string& shape_str, long long bound) {
  std::cout << hook_content_gf(parse_shape_arg(shape_str), bound).to_string() << "\n";
  return 0;
}

int run_render(const std::string& input, const std::string& style) {
  Filling f = filling_from_json(read_json_file(input));
  if (style == "grid") std::cout << render_grid(f);
  else if (style == "pp3d") std::cout << render_pp3d(f);
  else fail(errc::invalid_input, "--style must be grid or pp3d");
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"hook-content bijection toolkit: exact tableau and plane partition sampling"};
  app.require_subcommand(1);

  SampleArgs sample_args;
  auto* sample = app.add_subcommand("sample", "draw exactly uniform random objects");
  sample->require_subcommand(1);
  auto* s_ssyt = sample->add_subcommand("ssyt", "bounded semistandard tableaux");
  s_ssyt->add_option("--shape", sample_args.shape_str, "partition, e.g. 4,3,3,2")->required();
  s_ssyt->add_option("--bound", sample_args.bound, "entry bound b >= rows")->required();
  s_ssyt->add_option("--count", sample_args.count, "number of samples");
  auto* s1 = s_ssyt->add_option("--seed", sample_args.seed, "master seed");
  s_ssyt->add_flag("--report-moves", sample_args.report_moves, "include move counts");
  s_ssyt->add_option("--format", sample_args.format)->check(CLI::IsMember({"json", "text"}));
  auto* s_pp = sample->add_subcommand("pp", "plane partitions in a box");
  s_pp->add_option("--box", sample_args.box_str, "dimensions a,b,c")->required();
  s_pp->add_option("--count", sample_args.count, "number of samples");
  auto* s2 = s_pp->add_option("--seed", sample_args.seed, "master seed");
  s_pp->add_flag("--report-moves", sample_args.report_moves, "include move counts");
  s_pp->add_option("--format", sample_args.format)->check(CLI::IsMember({"json", "text"}));

  std::string map_input, map_trace, map_format = "json";
  long long map_bound = 0;
  auto* map_cmd = app.add_subcommand("map", "content tabloid -> (tableau, hook tabloid)");
  map_cmd->add_option("--input", map_input, "content tabloid JSON file")->required();
  map_cmd->add_option("--bound", map_bound, "entry bound b")->required();
  map_cmd->add_option("--trace", map_trace, "write per-loop trace JSON here");
  map_cmd->add_option("--format", map_format)->check(CLI::IsMember({"json", "text"}));

  std::string unmap_tableau, unmap_hook, unmap_trace, unmap_format = "json";
  long long unmap_bound = 0;
  auto* unmap_cmd = app.add_subcommand("unmap", "(tableau, hook tabloid) -> content tabloid");
  unmap_cmd->add_option("--tableau", unmap_tableau, "tableau JSON file")->required();
  unmap_cmd->add_option("--hook", unmap_hook, "hook tabloid JSON file")->required();
  unmap_cmd->add_option("--bound", unmap_bound, "entry bound b")->required();
  unmap_cmd->add_option("--trace", unmap_trace, "write per-loop trace JSON here");
  unmap_cmd->add_option("--format", unmap_format)->check(CLI::IsMember({"json", "text"}));

  std::string v_shape, v_which = "1.1";
  long long v_bound = 0;
  bool v_exhaustive = false;
  long long v_samples = 100;
  std::uint64_t v_seed = 0;
  auto* verify = app.add_subcommand("verify", "brute-force checks");
  verify->require_subcommand(1);
  auto* v_id = verify->add_subcommand("identity", "tableau gf against the product formulas");
  v_id->add_option("--shape", v_shape)->required();
  v_id->add_option("--bound", v_bound)->required();
  v_id->add_option("--which", v_which, "1.1, 1.2 or 1.3")->required();
  auto* v_fib = verify->add_subcommand("fibers", "every tableau hit equally often");
  v_fib->add_option("--shape", v_shape)->required();
  v_fib->add_option("--bound", v_bound)->required();
  auto* v_rt = verify->add_subcommand("roundtrip", "unmap inverts map");
  v_rt->add_option("--shape", v_shape)->required();
  v_rt->add_option("--bound", v_bound)->required();
  v_rt->add_flag("--exhaustive", v_exhaustive, "all content tabloids");
  v_rt->add_option("--samples", v_samples, "random tabloids when not exhaustive");
  auto* s3 = v_rt->add_option("--seed", v_seed, "master seed");

  std::string c_class, c_shape, c_box;
  long long c_bound = 0;
  auto* count_cmd = app.add_subcommand("count", "count fillings of a class");
  count_cmd->add_option("--class", c_class, "ssyt, content, hook or pp")->required();
  count_cmd->add_option("--shape", c_shape);
  count_cmd->add_option("--bound", c_bound);
  count_cmd->add_option("--box", c_box, "a,b,c for class pp");

  std::string g_shape;
  long long g_bound = 0;
  auto* gf_cmd = app.add_subcommand("gf", "print the bounded-tableau norm generating function");
  gf_cmd->add_option("--shape", g_shape)->required();
  gf_cmd->add_option("--bound", g_bound)->required();

  std::string r_input, r_style = "grid";
  auto* render_cmd = app.add_subcommand("render", "ASCII rendering of a filling");
  render_cmd->add_option("--input", r_input, "filling JSON file")->required();
  render_cmd->add_option("--style", r_style, "grid or pp3d")->check(CLI::IsMember({"grid", "pp3d"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << "\n";
    return 2;
  }

  try {
    if (s_ssyt->parsed()) {
      sample_args.seed_given = s1->count() > 0;
      return run_sample_ssyt(sample_args);
    }
    if (s_pp->parsed()) {
      sample_args.seed_given = s2->count() > 0;
      return run_sample_pp(sample_args);
    }
    if (map_cmd->parsed()) return run_map(map_input, map_bound, map_trace, map_format);
    if (unmap_cmd->parsed())
      return run_unmap(unmap_tableau, unmap_hook, unmap_bound, unmap_trace, unmap_format);
    if (v_id->parsed()) return run_verify_identity(v_shape, v_bound, v_which);
    if (v_fib->parsed()) return run_verify_fibers(v_shape, v_bound);
    if (v_rt->parsed())
      return run_verify_roundtrip(v_shape, v_bound, v_exhaustive, v_samples, s3->count() > 0,
                                  v_seed);
    if (count_cmd->parsed()) return run_count(c_class, c_shape, c_bound, c_box);
    if (gf_cmd->parsed()) return run_gf(g_shape, g_bound);
    if (render_cmd->parsed()) return run_render(r_input, r_style);
  } catch (const hooktab::error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
