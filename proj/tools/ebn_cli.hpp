#pragma once

// Command-line front end. Kept in a header so the tests can drive it with
// in-memory streams.

#include <CLI11.hpp>

#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "ebn/ebn.hpp"

namespace ebn::cli {

enum Exit : int {
  ok = 0,
  static_error = 1,   // syntax or type error
  runtime_error = 2,  // division by zero
  usage = 64,
};

struct Config {
  std::string command;
  std::string file;
  std::string inline_text;
  std::string prims = "smart";
  std::string output = "sexpr";
  std::string demo_name;
  std::int64_t demo_arg = 0;
  bool naive = false;
};

inline std::string read_input(const Config& cfg) {
  if (!cfg.inline_text.empty()) return cfg.inline_text;
  std::ifstream in(cfg.file, std::ios::binary);
  if (!in) throw CLI::FileError::Missing(cfg.file);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline std::string render(const Term& t, const Config& cfg) {
  return cfg.output == "pretty" ? pretty_term(t) : print_term(t);
}

inline std::string render(const Type& ty, const Config& cfg) {
  return cfg.output == "pretty" ? pretty_type(ty) : print_type(ty);
}

inline const std::vector<Rational>& probe_inputs() {
  static const std::vector<Rational> probes{Rational(-2), Rational(-1), Rational(-1, 2), Rational(0),
                                            Rational(1, 3), Rational(1),  Rational(2),     Rational(7)};
  return probes;
}

/// What `power n` computes by repeated multiplication. For negative n the
/// generated code divides -1 (not 1) by x^-n, and maps x = 0 to 0.
inline Rational expected_power(Rational x, std::int64_t n) {
  if (n < 0 && x.is_zero()) return Rational(0);
  Rational acc(1);
  for (std::int64_t i = 0; i < (n < 0 ? -n : n); ++i) acc = acc * x;
  return n < 0 ? Rational(-1) / acc : acc;
}

inline int demo_power(const Config& cfg, std::ostream& out) {
  Signature sig = rational_signature();
  PrimEnv prims = cfg.naive ? naive_prim_env() : smart_prim_env();
  Term gen = examples::power(cfg.demo_arg);
  Term nf = norm(gen, sig, prims);
  out << "generated: " << pretty_term(gen) << "\n";
  out << "normal:    " << pretty_term(nf) << "\n";
  out << "sexpr:     " << print_term(nf) << "\n";
  for (const Rational& x : probe_inputs()) {
    out << "  x = " << x << ": ";
    try {
      auto a = interp::apply(gen, interp::Value::rat(x));
      auto b = interp::apply(nf, interp::Value::rat(x));
      Rational want = expected_power(x, cfg.demo_arg);
      out << a.str() << (a == interp::Value::rat(want) ? " as expected" : " UNEXPECTED, wanted " + want.str())
          << (a == b ? ", normal form agrees" : ", normal form DISAGREES: " + b.str()) << "\n";
    } catch (const RuntimeDivisionByZero&) {
      out << "division by zero\n";
    }
  }
  return ok;
}

inline int demo_chars(const Config& cfg, std::ostream& out) {
  chars::CharsTerm t = chars::parse_chars(read_input(cfg));
  chars::CharsTerm by_list = chars::norm_chars(t, chars::Domain::list);
  chars::CharsTerm by_fun = chars::norm_chars(t, chars::Domain::function);
  out << "term:   " << chars::print_chars_sexpr(t) << "\n";
  out << "normal: " << chars::print_chars_sexpr(by_list) << "\n";
  if (!(by_list == by_fun)) out << "warning: function domain disagrees: " << chars::print_chars_sexpr(by_fun) << "\n";
  out << "string: ";
  chars::print_chars(by_list, out);
  out << "\n";
  return ok;
}

inline int execute(const Config& cfg, std::ostream& out) {
  if (cfg.command == "demo") {
    return cfg.demo_name == "power" ? demo_power(cfg, out) : demo_chars(cfg, out);
  }
  Signature sig = rational_signature();
  Term t = parse_term(read_input(cfg));
  Type ty = infer(sig, t);
  if (cfg.command == "check") {
    out << render(ty, cfg) << "\n";
  } else if (cfg.command == "norm") {
    PrimEnv prims = cfg.prims == "naive" ? naive_prim_env() : smart_prim_env();
    out << render(norm(t, sig, prims), cfg) << "\n";
  } else {
    out << interp::run(t).str() << "\n";
  }
  return ok;
}

/// Runs the CLI on `args` (excluding the program name).
inline int main(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  Config cfg;
  CLI::App app{"Normalization-by-evaluation toolkit for an embedded lambda calculus", "ebn"};
  app.require_subcommand(1);

  auto add_input = [&](CLI::App* sub) {
    auto* f = sub->add_option("--file", cfg.file, "Read the input from PATH");
    auto* i = sub->add_option("--inline", cfg.inline_text, "Input given directly on the command line");
    f->excludes(i);
    i->excludes(f);
    return std::pair{f, i};
  };

  for (const char* name : {"norm", "check", "run"}) {
    std::string desc = std::string(name) == "norm"    ? "Print the normal form of a closed term"
                       : std::string(name) == "check" ? "Print the inferred type of a closed term"
                                                      : "Interpret a closed term and print its value";
    CLI::App* sub = app.add_subcommand(name, desc);
    auto [f, i] = add_input(sub);
    f->check(CLI::ExistingFile);
    sub->add_option("--prims", cfg.prims, "Primitive implementations")->check(CLI::IsMember({"smart", "naive"}));
    sub->add_option("--output", cfg.output, "Output format")->check(CLI::IsMember({"pretty", "sexpr"}));
    sub->callback([&cfg, sub] { cfg.command = sub->get_name(); });
  }

  CLI::App* demo = app.add_subcommand("demo", "Run a built-in scenario");
  demo->require_subcommand(1);
  CLI::App* chars_demo = demo->add_subcommand("chars", "Normalize a Chars term and print its string");
  {
    auto [f, i] = add_input(chars_demo);
    f->check(CLI::ExistingFile);
    chars_demo->callback([&cfg] {
      cfg.command = "demo";
      cfg.demo_name = "chars";
    });
  }
  CLI::App* power_demo = demo->add_subcommand("power", "Generate, normalize and spot-check power N");
  power_demo->add_option("N", cfg.demo_arg, "Exponent")->required()->allow_extra_args(false);
  power_demo->add_flag("--naive", cfg.naive, "Use the non-simplifying primitives");
  power_demo->callback([&cfg] {
    cfg.command = "demo";
    cfg.demo_name = "power";
  });

  try {
    // CLI11 consumes the vector from the back.
    std::vector<std::string> argv_rev(args.rbegin(), args.rend());
    app.parse(argv_rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return ok;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return ok;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return usage;
  }

  if (cfg.command != "demo" || cfg.demo_name == "chars") {
    if (cfg.file.empty() && cfg.inline_text.empty()) {
      err << "usage error: exactly one of --file or --inline is required\n";
      return usage;
    }
  }

  try {
    return execute(cfg, out);
  } catch (const SyntaxError& e) {
    err << e.what() << "\n";
    return static_error;
  } catch (const TypeError& e) {
    err << "type error: " << e.what() << "\n";
    return static_error;
  } catch (const NotCanonical& e) {
    err << e.what() << "\n";
    return static_error;
  } catch (const RuntimeDivisionByZero& e) {
    err << e.what() << "\n";
    return runtime_error;
  } catch (const DivisionByZero& e) {
    err << e.what() << "\n";
    return runtime_error;
  } catch (const CLI::FileError& e) {
    err << "usage error: " << e.what() << "\n";
    return usage;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return runtime_error;
  }
}

}  // namespace ebn::cli
