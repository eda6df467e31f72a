// Command-line front end; talks to the library only through b2_capi.h.
#include <CLI11.hpp>

#include <cstdio>
#include <functional>
#include <iostream>
#include <memory>
#include <string>

#include "b2/b2_capi.h"

namespace {

constexpr int kExitUsage = 64;
constexpr int kExitInternal = 70;

struct Config {
  int precision = 30;
  unsigned jmax = 6;
  unsigned nmax = 6;
  std::size_t depth = 64;
  std::string format;  // empty: command default
};

int exit_code(b2_status s) {
  switch (s) {
    case B2_OK: return 0;
    case B2_ERR_DOMAIN:
    case B2_ERR_NO_ROOT_BY_CASE:
    case B2_ERR_UNSUPPORTED: return 2;
    case B2_ERR_NOT_FOUND: return 3;
    case B2_ERR_PARSE: return kExitUsage;
    default: return kExitInternal;
  }
}

struct Fail {
  b2_status status;
};

void check(b2_status s) {
  if (s != B2_OK) throw Fail{s};
}

using BasePtr = std::unique_ptr<b2_base, decltype(&b2_base_free)>;
using SeqPtr = std::unique_ptr<b2_seq, decltype(&b2_seq_free)>;
using TextPtr = std::unique_ptr<b2_text, decltype(&b2_text_free)>;

BasePtr base(const std::string& spec) {
  b2_base* q = nullptr;
  check(b2_base_parse(spec.c_str(), &q));
  return BasePtr(q, b2_base_free);
}

SeqPtr seq(const std::string& text) {
  b2_seq* s = nullptr;
  check(b2_seq_parse(text.c_str(), &s));
  return SeqPtr(s, b2_seq_free);
}

void print(b2_status s, b2_text** slot) {
  check(s);
  b2_text* t = *slot;
  TextPtr owned(t, b2_text_free);
  std::string out = b2_text_get(t);
  std::cout << out;
  if (out.empty() || out.back() != '\n') std::cout << '\n';
}

b2_format fmt_of(const Config& c, b2_format dflt) {
  if (c.format == "json") return B2_FORMAT_JSON;
  if (c.format == "csv") return B2_FORMAT_CSV;
  if (c.format == "plain") return B2_FORMAT_PLAIN;
  return dflt;
}

std::string quoted(const std::string& s) {
  std::string o = "\"";
  for (char ch : s) {
    if (ch == '"' || ch == '\\') o += '\\';
    o += ch;
  }
  return o + "\"";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact computations with binary expansions in non-integer bases q in (1, 2]"};
  app.require_subcommand(1);
  Config cfg;
  std::function<void()> action;

  auto common = [&](CLI::App* sub) {
    sub->add_option("--precision", cfg.precision, "decimal digits in numeric output")->check(CLI::Range(8, 100000));
    sub->add_option("--format", cfg.format, "json, csv or plain")->check(CLI::IsMember({"json", "csv", "plain"}));
  };

  std::string spec, c_text, d_text, lo_text, hi_text, gen = "0", x_text, delta_text;
  std::size_t digits = 16, cap = 3, words = 64;
  unsigned n = 1, count_n = 4, min_j = 0, prop62 = 0;

  auto* alpha = app.add_subcommand("alpha", "quasi-greedy expansion of 1");
  alpha->add_option("base", spec, "base spec")->required();
  alpha->add_option("--digits", digits, "number of digits")->check(CLI::Range(1, 1000000));
  common(alpha);
  alpha->callback([&] {
    action = [&] {
      auto q = base(spec);
      b2_text* t = nullptr;
      check(b2_alpha_digits(q.get(), digits, &t));
      TextPtr owned(t, b2_text_free);
      if (fmt_of(cfg, B2_FORMAT_PLAIN) == B2_FORMAT_JSON) std::cout << "{\"alpha\":" << quoted(b2_text_get(t)) << "}\n";
      else std::cout << b2_text_get(t) << '\n';
    };
  });

  auto* classify = app.add_subcommand("classify", "position of q relative to U, its closure and V");
  classify->add_option("base", spec, "base spec")->required();
  common(classify);
  classify->callback([&] {
    action = [&] {
      auto q = base(spec);
      b2_text* t = nullptr;
      print(b2_classify(q.get(), cfg.precision, &t), &t);
    };
  });

  auto* omega = app.add_subcommand("omega", "the word omega_n of a component");
  omega->add_option("--gen", gen, "generator word")->required();
  omega->add_option("--n", n, "index")->required();
  common(omega);
  omega->callback([&] {
    action = [&] {
      b2_text* t = nullptr;
      check(b2_omega(gen.c_str(), n, &t));
      TextPtr owned(t, b2_text_free);
      if (fmt_of(cfg, B2_FORMAT_PLAIN) == B2_FORMAT_JSON) std::cout << "{\"omega\":" << quoted(b2_text_get(t)) << "}\n";
      else std::cout << b2_text_get(t) << '\n';
    };
  });

  auto* ladder = app.add_subcommand("ladder", "bases q_1..q_N of a component");
  ladder->add_option("--gen", gen, "generator word")->required();
  ladder->add_option("--N", count_n, "number of entries")->required()->check(CLI::Range(1, 16));
  common(ladder);
  ladder->callback([&] {
    action = [&] {
      b2_text* t = nullptr;
      print(b2_ladder(gen.c_str(), count_n, cfg.precision, fmt_of(cfg, B2_FORMAT_JSON), &t), &t);
    };
  });

  auto* solve = app.add_subcommand("solve", "roots of f_{c,d} in [lo, hi]");
  solve->add_option("--c", c_text, "sequence c")->required();
  solve->add_option("--d", d_text, "sequence d")->required();
  solve->add_option("--lo", lo_text, "lower end (rational or base spec)")->required();
  solve->add_option("--hi", hi_text, "upper end (rational or base spec)")->required();
  common(solve);
  solve->callback([&] {
    action = [&] {
      auto c = seq(c_text), d = seq(d_text);
      auto lo = base(lo_text), hi = base(hi_text);
      b2_text* t = nullptr;
      print(b2_solve(c.get(), d.get(), lo.get(), hi.get(), cfg.precision, &t), &t);
    };
  });

  auto* enumb2 = app.add_subcommand("enum-b2", "bases with a two-expansion point in (q_n, q_{n+1}]");
  enumb2->add_option("--n", n, "interval index")->required()->check(CLI::Range(0, 8));
  enumb2->add_option("--jmax", cfg.jmax, "bound on the j entries")->check(CLI::Range(1, 64));
  common(enumb2);
  enumb2->callback([&] {
    action = [&] {
      b2_text* t = nullptr;
      std::cerr << "# complete only for representation vectors with all j <= " << cfg.jmax << '\n';
      print(b2_enum_b2(n, cfg.jmax, cfg.precision, fmt_of(cfg, B2_FORMAT_CSV), &t), &t);
    };
  });

  auto* derived = app.add_subcommand("derived", "smallest base found with derived order >= J");
  derived->add_option("--min", min_j, "derived order")->required();
  derived->add_option("--jmax", cfg.jmax, "bound on the j entries")->check(CLI::Range(1, 64));
  derived->add_option("--nmax", cfg.nmax, "largest interval index")->check(CLI::Range(1, 10));
  common(derived);
  derived->callback([&] {
    action = [&] {
      b2_text* t = nullptr;
      print(b2_min_derived(min_j, cfg.jmax, cfg.nmax, cfg.precision, &t), &t);
    };
  });

  auto* entropy = app.add_subcommand("entropy", "entropy of U'_q and dimension of U_q");
  entropy->add_option("base", spec, "base spec")->required();
  entropy->add_option("--words", words, "largest word length for the finite bounds")->check(CLI::Range(1, 4096));
  common(entropy);
  entropy->callback([&] {
    action = [&] {
      auto q = base(spec);
      b2_text* t = nullptr;
      print(b2_entropy(q.get(), words, cfg.precision, &t), &t);
    };
  });

  auto* dimb = app.add_subcommand("dim-bound", "upper bound on the local dimension of B2 near q");
  dimb->add_option("base", spec, "base spec")->required();
  dimb->add_option("--delta", delta_text, "radius as p/q")->required();
  common(dimb);
  dimb->callback([&] {
    action = [&] {
      auto q = base(spec);
      b2_text* t = nullptr;
      print(b2_dim_bound(q.get(), delta_text.c_str(), cfg.precision, &t), &t);
    };
  });

  auto* count = app.add_subcommand("count", "number of expansions of x");
  count->add_option("--x", x_text, "rational p/q or seq:SEQ")->required();
  count->add_option("--base", spec, "base spec")->required();
  count->add_option("--cap", cap, "stop counting above this")->check(CLI::Range(1, 1000000));
  count->add_option("--depth", cfg.depth, "exploration depth")->check(CLI::Range(1, 100000));
  common(count);
  count->callback([&] {
    action = [&] {
      auto q = base(spec);
      b2_text* t = nullptr;
      print(b2_count(x_text.c_str(), q.get(), cap, cfg.depth, &t), &t);
    };
  });

  auto* witness = app.add_subcommand("witness", "explicit two-expansion witnesses");
  witness->add_option("--gen", gen, "generator word")->required();
  witness->add_option("--prop62", prop62, "interval index n >= 2 for the sign-change pair");
  common(witness);
  witness->callback([&] {
    action = [&] {
      b2_text* t = nullptr;
      print(b2_witness(gen.c_str(), prop62, cfg.precision, &t), &t);
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    std::cerr << app.help();
    return kExitUsage;
  }
  try {
    action();
  } catch (const Fail& f) {
    std::cerr << "error: " << b2_last_error() << '\n';
    if (f.status == B2_ERR_PARSE) std::cerr << app.help();
    return exit_code(f.status);
  }
  return 0;
}
