#include <fstream>
#include <functional>
#include <iostream>
#include <iterator>
#include <map>
#include <string>

#include "CLI11.hpp"
#include "json_io.hpp"
#include "valuix/checks.hpp"
#include "valuix/intersection.hpp"
#include "valuix/multiplier.hpp"

namespace {

using namespace valuix;
using io::json;

constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;

struct Options {
  std::string input = "-";
  std::string output = "-";
  std::uint64_t seed = 1;
  std::int64_t max_degree = kDefaultMaxDegree;
  std::string suite;
  bool all = false;
  bool input_given = false;
};

json read_input(const std::string& path) {
  std::string text;
  if (path == "-") {
    text.assign(std::istreambuf_iterator<char>(std::cin), {});
  } else {
    std::ifstream in(path);
    if (!in) throw Error("cannot open input file " + path);
    text.assign(std::istreambuf_iterator<char>(in), {});
  }
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(std::string("malformed JSON: ") + e.what());
  }
}

void write_output(const std::string& path, const json& doc) {
  std::string text = doc.dump() + "\n";
  if (path == "-") {
    std::cout << text << std::flush;
    return;
  }
  std::ofstream out(path);
  if (!out) throw Error("cannot open output file " + path);
  out << text;
}

Rat scale_of(const json& in) { return in.contains("c") ? io::rat(in.at("c")) : Rat(1); }

FormalPshToric scaled_transform(const json& in) {
  Rat c = scale_of(in);
  if (c < 0) throw Error("\"c\" must be nonnegative");
  if (c == 0) return FormalPshToric::zero(io::germ(in).dim());
  return transform(io::germ(in)).scaled(c);
}

RatVec weights_of(const json& in, std::size_t n) {
  if (!in.contains("w")) throw Error("missing field \"w\"");
  RatVec w = io::rat_vec(in.at("w"));
  if (w.size() != n) throw Error("weight vector has the wrong length");
  return w;
}

std::vector<FormalPshToric> transforms(const std::vector<MonomialIdeal>& ideals) {
  std::vector<FormalPshToric> gs;
  for (const auto& a : ideals) gs.push_back(FormalPshToric::log_of(a));
  return gs;
}

json cmd_lct(const json& in, const Options&) { return io::encode(lct(transform(io::germ(in)))); }

json cmd_multiplier(const json& in, const Options&) { return io::encode(l2_ideal(scaled_transform(in))); }

json cmd_linf(const json& in, const Options&) { return io::encode(linf_ideal(scaled_transform(in))); }

json cmd_envelope(const json& in, const Options&) {
  if (!in.contains("values")) throw Error("missing field \"values\"");
  PLFunction h(io::fan(in), io::rat_vec(in.at("values")));
  json out = io::encode(nef_envelope(h).region());
  out["is_nef"] = is_nef(h);
  return out;
}

json cmd_mixed_mult(const json& in, const Options&) {
  std::vector<NewtonRegion> regions;
  for (const auto& a : io::ideal_list(in)) regions.push_back(region_of(a));
  return io::encode(mixed_multiplicity(regions));
}

json cmd_intersection(const json& in, const Options&) {
  return io::encode(intersection(transforms(io::ideal_list(in))));
}

json cmd_monge_ampere(const json& in, const Options&) {
  return io::encode(monge_ampere(transforms(io::ideal_list(in))));
}

json cmd_lelong(const json& in, const Options&) {
  PshGerm u = io::germ(in);
  if (!in.contains("phi")) return io::encode(lelong_number(u));
  return io::encode(generalized_lelong(u, io::germ(in.at("phi"))));
}

json cmd_relative_type(const json& in, const Options&) {
  PshGerm u = io::germ(in);
  return io::encode(relative_type(u, weights_of(in, u.dim())));
}

json cmd_transform_eval(const json& in, const Options&) {
  PshGerm u = io::germ(in);
  FormalPshToric g = transform(u);
  RatVec w = in.contains("w") ? weights_of(in, u.dim()) : RatVec(u.dim(), Rat(1));
  if (!all_nonnegative(w)) throw Error("weights must be nonnegative");
  return json{{"value", io::encode(g(w))}, {"region", io::encode(g.region())}};
}

json cmd_homotopy(const json& in, const Options& opt) {
  if (!in.is_object() || !in.contains("valuation") || !in.contains("polynomial")) {
    throw Error("expected {\"valuation\", \"polynomial\"[, \"s\"]}");
  }
  auto nu = io::valuation(in.at("valuation"), opt.max_degree);
  Polynomial f = io::polynomial(in.at("polynomial"));
  if (f.dim() != nu.dim()) throw Error("polynomial and valuation dimensions differ");
  if (f.is_zero()) throw Error("the polynomial must be nonzero");
  json out{{"value", io::encode(eval_poly(nu, f))},
           {"retraction", io::encode(eval_poly(monomial_retraction(nu), f))},
           {"threshold", io::encode(homotopy_threshold(nu, f))}};
  if (in.contains("s")) {
    Rat s = io::rat(in.at("s"));
    if (s < 0) throw Error("\"s\" must be nonnegative");
    out["s"] = io::encode(s);
    out["h"] = io::encode(homotopy_eval(nu, f, s));
  }
  return out;
}

json cmd_retract(const json& in, const Options& opt) {
  if (!in.is_object() || !in.contains("valuation") || !in.contains("fan")) {
    throw Error("expected {\"valuation\", \"fan\"}");
  }
  auto nu = io::valuation(in.at("valuation"), opt.max_degree);
  Fan f = io::fan(in.at("fan"));
  if (f.dim() != nu.dim()) throw Error("fan and valuation dimensions differ");
  Retraction r = retract(nu, f);
  return json{{"cone", f.cones()[r.cone]},
              {"chart_weights", io::encode(r.chart_weights)},
              {"weights", io::encode(r.valuation.weights)}};
}

json cmd_dual_complex(const json& in, const Options&) { return io::encode(dual_complex(io::fan(in))); }

int cmd_check(const Options& opt) {
  CheckOptions knobs;
  knobs.max_degree = opt.max_degree;
  if (opt.input_given) {
    json in = read_input(opt.input);
    if (!in.is_object()) throw Error("check knobs must be an object");
    for (const auto& [key, value] : in.items()) {
      if (key != "count" && key != "n") throw Error("unknown check knob \"" + key + "\"");
      if (!value.is_number_integer() || value.get<std::int64_t>() < 0) throw Error("knob " + key + " must be a nonnegative integer");
    }
    if (in.contains("count")) knobs.count = in.at("count").get<std::size_t>();
    if (in.contains("n")) knobs.dim = in.at("n").get<std::size_t>();
    if (knobs.dim == 1) throw Error("check dimension must be at least 2");
  }
  if (opt.all == !opt.suite.empty()) throw Error("give exactly one of a suite name or --all");

  json out;
  bool ok = true;
  if (opt.all) {
    json suites = json::array();
    for (const auto& name : check_suites()) {
      CheckReport r = run_check(name, opt.seed, knobs);
      ok = ok && r.ok();
      suites.push_back(io::encode(r));
    }
    out = json{{"seed", opt.seed}, {"ok", ok}, {"suites", suites}};
  } else {
    CheckReport r = run_check(opt.suite, opt.seed, knobs);
    ok = r.ok();
    out = io::encode(r);
  }
  write_output(opt.output, out);
  return ok ? 0 : kExitFailure;
}

}  // namespace

int main(int argc, char** argv) {
  using Command = std::function<json(const json&, const Options&)>;
  const std::vector<std::pair<std::string, std::pair<std::string, Command>>> commands = {
      {"lct", {"log canonical threshold of an ideal or germ", cmd_lct}},
      {"multiplier", {"generators of the L2 multiplier ideal of c times the input", cmd_multiplier}},
      {"linf", {"generators of the L-infinity ideal of c times the input", cmd_linf}},
      {"envelope", {"nef envelope of a PL function on a fan", cmd_envelope}},
      {"mixed-mult", {"mixed multiplicity of n primary ideals", cmd_mixed_mult}},
      {"intersection", {"intersection number of the divisors of n primary ideals", cmd_intersection}},
      {"monge-ampere", {"atomic Monge-Ampere measure of n-1 primary ideals", cmd_monge_ampere}},
      {"lelong", {"Lelong number, or generalized Lelong number against \"phi\"", cmd_lelong}},
      {"relative-type", {"relative type of a germ with respect to the weight \"w\"", cmd_relative_type}},
      {"transform-eval", {"valuative transform of a germ and its value at \"w\"", cmd_transform_eval}},
      {"homotopy", {"homotopy values between a valuation and its monomial retraction", cmd_homotopy}},
      {"retract", {"retraction of a valuation onto a toric model", cmd_retract}},
      {"dual-complex", {"dual complex of a fan", cmd_dual_complex}},
  };

  Options opt;
  CLI::App app{"Exact valuative computations for monomial singularities", "valuix"};
  app.require_subcommand(1);
  app.fallthrough();
  auto* input = app.add_option("--input", opt.input, "input JSON file, - for stdin");
  app.add_option("--output", opt.output, "output file, - for stdout");
  app.add_option("--seed", opt.seed, "seed for check suites");
  app.add_option("--max-degree", opt.max_degree, "degree cap when rewriting in shifted coordinates")
      ->check(CLI::PositiveNumber);

  std::map<CLI::App*, Command> handlers;
  for (const auto& [name, entry] : commands) handlers[app.add_subcommand(name, entry.first)] = entry.second;
  auto* check = app.add_subcommand("check", "run a property suite");
  check->add_option("suite", opt.suite, "suite name");
  check->add_flag("--all", opt.all, "run every suite");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }
  opt.input_given = input->count() > 0;

  try {
    if (check->parsed()) return cmd_check(opt);
    for (const auto& [sub, handler] : handlers) {
      if (sub->parsed()) {
        write_output(opt.output, handler(read_input(opt.input), opt));
        return 0;
      }
    }
  } catch (const json::exception& e) {
    std::cerr << "valuix: invalid input: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "valuix: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
