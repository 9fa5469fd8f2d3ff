#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "arbor/dual.hpp"
#include "arbor/errors.hpp"
#include "arbor/hopf.hpp"
#include "arbor/nary.hpp"
#include "arbor/suites.hpp"

namespace {

using namespace arbor;

Flavor flavor_of_operad(const std::string& operad) {
  if (operad == "com") return Flavor::Unordered;
  if (operad == "ass") return Flavor::Planar;
  if (operad == "k") return Flavor::K;
  throw domain_error("unknown operad '" + operad + "' (expected com, ass or k)");
}

std::vector<Rational> parse_q_list(const std::string& text, int n) {
  std::vector<Rational> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(parse_rational(item));
  if ((int)out.size() != n)
    throw parse_error("expected " + std::to_string(n) + " comma-separated values, got " +
                      std::to_string(out.size()));
  return out;
}

struct Options {
  std::string operad = "com";
  int colors = 2;
  bool symbolic = false;
  std::string q1_text, q2_text;

  Flavor flavor() const { return flavor_of_operad(operad); }
  Params params() const {
    if (!q1_text.empty() || !q2_text.empty()) {
      if (symbolic) throw domain_error("--symbolic conflicts with --q1/--q2");
      if (q1_text.empty() || q2_text.empty())
        throw domain_error("--q1 and --q2 must be given together");
      return Params::make_concrete(parse_q_list(q1_text, colors), parse_q_list(q2_text, colors));
    }
    return Params::make_symbolic(colors);
  }
};

void add_param_flags(CLI::App* cmd, Options& opt) {
  cmd->add_option("--operad", opt.operad, "Tree operad: com, ass or k")
      ->check(CLI::IsMember({"com", "ass", "k"}));
  cmd->add_option("--colors", opt.colors, "Number of edge colors n")->check(CLI::Range(1, 9));
  cmd->add_flag("--symbolic", opt.symbolic, "Polynomial coefficients in q1_j, q2_j (default)");
  cmd->add_option("--q1", opt.q1_text, "Concrete q1 row, comma separated");
  cmd->add_option("--q2", opt.q2_text, "Concrete q2 row, comma separated");
}

// A linear combination `c1 t1 + c2 t2 + ...`; a bare forest means
// coefficient 1. '+' never occurs inside tree texts. An optional leading
// whitespace-separated token of sign/digit/slash characters is the
// coefficient; everything after it (spaces included) is one forest.
KLin parse_lincomb(const std::string& text, Flavor flavor, int n, const Params* params) {
  KLin out;
  std::string term;
  std::stringstream ss(text);
  bool any = false;
  while (std::getline(ss, term, '+')) {
    any = true;
    size_t b = term.find_first_not_of(" \t");
    size_t e = term.find_last_not_of(" \t");
    if (b == std::string::npos) throw parse_error("empty term in '" + text + "'");
    term = term.substr(b, e - b + 1);
    Rational c = 1;
    std::string forest = term;
    auto is_coeff = [](const std::string& s) {
      return s.find_first_not_of("0123456789/-") == std::string::npos;
    };
    size_t sp = term.find_first_of(" \t");
    if (sp == std::string::npos) {
      if (term != "1" && is_coeff(term)) {
        c = parse_rational(term);
        forest = "1";
      }
    } else if (is_coeff(term.substr(0, sp))) {
      c = parse_rational(term.substr(0, sp));
      forest = term.substr(term.find_first_not_of(" \t", sp));
    }
    Coeff cc = params && params->symbolic ? Coeff(MPoly(2 * params->n, c)) : Coeff(c);
    if (flavor == Flavor::Nary)
      out.add(nary_key(nary_parse(forest, n)), cc);
    else
      out.add(key_of(forest, flavor, n), cc);
  }
  if (!any) throw parse_error("empty expression");
  return out;
}

Key parse_tree_arg(const std::string& text, Flavor flavor, int n) {
  RigidTree t = parse_forest(text, flavor, n);
  if (t.size() == 0 || !t.single_tree()) throw domain_error("expected a single tree: " + text);
  return canonical_key(t);
}

std::vector<int> parse_pset(const std::string& text, int n) {
  std::vector<int> out;
  if (text.empty()) {
    for (int j = 1; j <= n; ++j) out.push_back(j);
    return out;
  }
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    int v = std::stoi(item);
    if (v < 1 || v > n) throw domain_error("pset color out of range: " + item);
    out.push_back(v);
  }
  return out;
}

std::pair<int, int> parse_kl(const std::string& text, int n) {
  if (text.empty()) return {n, 1};
  auto comma = text.find(',');
  if (comma == std::string::npos) throw parse_error("--kl expects k,l");
  int k = std::stoi(text.substr(0, comma));
  int l = std::stoi(text.substr(comma + 1));
  return {k, l};
}

int run(int argc, char** argv) {
  CLI::App app{"Deformed Hopf algebras of colored rooted trees"};
  app.require_subcommand(1);
  Options opt;

  std::string input, input2, method = "series", dop = "star", suite, pset_text, kl_text;
  int size = 0, max_degree = 4;
  bool count_only = false;

  auto* c_coprod = app.add_subcommand("coproduct", "Deformed subforest coproduct");
  add_param_flags(c_coprod, opt);
  c_coprod->add_option("expr", input, "Forest or linear combination")->required();

  auto* c_anti = app.add_subcommand("antipode", "Hopf antipode");
  add_param_flags(c_anti, opt);
  c_anti->add_option("--method", method, "series or partitions")
      ->check(CLI::IsMember({"series", "partitions"}));
  c_anti->add_option("expr", input, "Forest or linear combination")->required();

  auto* c_counit = app.add_subcommand("counit", "Counit");
  add_param_flags(c_counit, opt);
  c_counit->add_option("expr", input, "Forest or linear combination")->required();

  auto* c_conv = app.add_subcommand("convolve-check", "Check S*id = u eps = id*S");
  add_param_flags(c_conv, opt);
  c_conv->add_option("expr", input, "Forest or linear combination")->required();

  auto* c_dstar = app.add_subcommand("dual-star", "Dual product D_s * D_t");
  add_param_flags(c_dstar, opt);
  c_dstar->add_option("s", input, "First tree (pruned leg)")->required();
  c_dstar->add_option("t", input2, "Second tree (root leg)")->required();

  auto* c_brk = app.add_subcommand("bracket", "Dual commutator [D_s, D_t]");
  add_param_flags(c_brk, opt);
  c_brk->add_option("s", input, "First tree")->required();
  c_brk->add_option("t", input2, "Second tree")->required();

  auto* c_prelie = app.add_subcommand("prelie", "Pre-Lie product from single-edge cuts");
  add_param_flags(c_prelie, opt);
  c_prelie->add_option("--pset", pset_text, "Colors of the sub-pre-Lie structure, e.g. 1,2");
  c_prelie->add_option("s", input, "First tree")->required();
  c_prelie->add_option("t", input2, "Second tree")->required();

  auto* c_graft = app.add_subcommand("graft-star", "Grafting product sum_v s -> t");
  add_param_flags(c_graft, opt);
  c_graft->add_option("--pset", pset_text, "Colors used for the new edge");
  c_graft->add_option("s", input, "First tree")->required();
  c_graft->add_option("t", input2, "Second tree")->required();

  auto* c_embed = app.add_subcommand("embed-prelie", "Embedding into free pre-Lie labeled trees");
  add_param_flags(c_embed, opt);
  c_embed->add_option("t", input, "Tree")->required();

  auto* c_dend = app.add_subcommand("dendriform", "Dendriform products on n-ary trees");
  add_param_flags(c_dend, opt);
  c_dend->add_option("--op", dop, "star, left or right")
      ->check(CLI::IsMember({"star", "left", "right"}));
  c_dend->add_option("--kl", kl_text, "Slot pair k,l (default n,1)");
  c_dend->add_option("s", input, "First n-ary tree")->required();
  c_dend->add_option("t", input2, "Second n-ary tree")->required();

  auto* c_lr = app.add_subcommand("lr-coproduct", "Coproduct on the n-ary tree algebra");
  add_param_flags(c_lr, opt);
  c_lr->add_option("--kl", kl_text, "Slot pair k,l (default n,1)");
  c_lr->add_option("expr", input, "n-ary tree or linear combination")->required();

  auto* c_prune = app.add_subcommand("prune", "Pruning operator P on binary trees");
  add_param_flags(c_prune, opt);
  c_prune->add_option("t", input, "Binary tree")->required();

  auto* c_enum = app.add_subcommand("enumerate", "List basis trees of a given size");
  add_param_flags(c_enum, opt);
  c_enum->add_option("--size", size, "Vertex count")->required()->check(CLI::Range(0, 20));
  c_enum->add_flag("--count-only", count_only, "Print the count instead of the keys");

  auto* c_check = app.add_subcommand("check", "Run a property-check suite");
  add_param_flags(c_check, opt);
  c_check->add_option("--suite", suite, "Suite name")->required();
  c_check->add_option("--max-degree", max_degree, "Degree bound")->check(CLI::Range(1, 20));
  c_check->add_option("--kl", kl_text, "Slot pair k,l for dendriform suites");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (app.got_subcommand(c_coprod)) {
      HopfContext ctx(opt.flavor(), opt.colors, opt.params());
      KLin x = parse_lincomb(input, ctx.flavor, opt.colors, &ctx.params);
      TLin d = ctx.flavor == Flavor::K ? k_coproduct(x, ctx) : coproduct(x, ctx);
      std::cout << to_string(d) << "\n";
    } else if (app.got_subcommand(c_anti)) {
      HopfContext ctx(opt.flavor(), opt.colors, opt.params());
      KLin x = parse_lincomb(input, ctx.flavor, opt.colors, &ctx.params);
      KLin s = method == "series" ? antipode_series(x, ctx) : antipode_partitions(x, ctx);
      std::cout << to_string(s) << "\n";
    } else if (app.got_subcommand(c_counit)) {
      HopfContext ctx(opt.flavor(), opt.colors, opt.params());
      std::cout << counit(parse_lincomb(input, ctx.flavor, opt.colors, &ctx.params), ctx).str()
                << "\n";
    } else if (app.got_subcommand(c_conv)) {
      HopfContext ctx(opt.flavor(), opt.colors, opt.params());
      KLin x = parse_lincomb(input, ctx.flavor, opt.colors, &ctx.params);
      Coeff one = ctx.params.one();
      KeyMap s_map = [&](const Key& k) { return antipode_series(single(k, one), ctx); };
      KeyMap id_map = [&](const Key& k) { return single(k, one); };
      KLin ue = single(ctx.unit(), counit(x, ctx));
      KLin left = convolve(s_map, id_map, x, ctx);
      KLin right = convolve(id_map, s_map, x, ctx);
      if (left == ue && right == ue) {
        std::cout << "ok\n";
      } else {
        std::cout << "mismatch: S*id = " << to_string(left) << "; id*S = " << to_string(right)
                  << "; u eps = " << to_string(ue) << "\n";
        return 1;
      }
    } else if (app.got_subcommand(c_dstar)) {
      HopfContext ctx(opt.flavor(), opt.colors, opt.params());
      Key s = parse_tree_arg(input, ctx.flavor, opt.colors);
      Key t = parse_tree_arg(input2, ctx.flavor, opt.colors);
      std::cout << to_string(dual_star(s, t, ctx)) << "\n";
    } else if (app.got_subcommand(c_brk)) {
      HopfContext ctx(opt.flavor(), opt.colors, opt.params());
      Key s = parse_tree_arg(input, ctx.flavor, opt.colors);
      Key t = parse_tree_arg(input2, ctx.flavor, opt.colors);
      std::cout << to_string(lie_bracket(s, t, ctx)) << "\n";
    } else if (app.got_subcommand(c_prelie)) {
      Key s = parse_tree_arg(input, Flavor::Unordered, opt.colors);
      Key t = parse_tree_arg(input2, Flavor::Unordered, opt.colors);
      std::cout << to_string(prelie_star(s, t, parse_pset(pset_text, opt.colors), opt.colors))
                << "\n";
    } else if (app.got_subcommand(c_graft)) {
      Key s = parse_tree_arg(input, Flavor::Unordered, opt.colors);
      Key t = parse_tree_arg(input2, Flavor::Unordered, opt.colors);
      std::cout << to_string(grafting_star(s, t, parse_pset(pset_text, opt.colors), opt.colors))
                << "\n";
    } else if (app.got_subcommand(c_embed)) {
      Key t = parse_tree_arg(input, Flavor::Unordered, opt.colors);
      std::cout << to_string(embed_free_prelie(t, opt.colors)) << "\n";
    } else if (app.got_subcommand(c_dend)) {
      auto [k, l] = parse_kl(kl_text, opt.colors);
      DendCtx ctx(opt.colors, k, l);
      KLin a = parse_lincomb(input, Flavor::Nary, opt.colors, nullptr);
      KLin b = parse_lincomb(input2, Flavor::Nary, opt.colors, nullptr);
      KLin r = dop == "star" ? dstar_lin(a, b, ctx)
                             : dop == "left" ? dleft_lin(a, b, ctx) : dright_lin(a, b, ctx);
      std::cout << to_string(r) << "\n";
    } else if (app.got_subcommand(c_lr)) {
      auto [k, l] = parse_kl(kl_text, opt.colors);
      DendCtx ctx(opt.colors, k, l);
      std::cout << to_string(
                       lr_coproduct(parse_lincomb(input, Flavor::Nary, opt.colors, nullptr), ctx))
                << "\n";
    } else if (app.got_subcommand(c_prune)) {
      if (opt.colors != 2) throw domain_error("prune is defined for --colors 2");
      DendCtx ctx(2, 2, 1);
      std::cout << to_string(pruning_P(nary_key(nary_parse(input, 2)), ctx)) << "\n";
    } else if (app.got_subcommand(c_enum)) {
      std::vector<Key> keys = enumerate_trees(opt.flavor(), opt.colors, size);
      if (count_only) {
        std::cout << keys.size() << "\n";
      } else {
        for (const auto& k : keys) std::cout << k.text << "\n";
      }
    } else if (app.got_subcommand(c_check)) {
      SuiteOptions so;
      so.flavor = opt.flavor();
      so.n = opt.colors;
      so.symbolic = opt.q1_text.empty() && opt.q2_text.empty();
      if (!so.symbolic) {
        if (opt.symbolic) throw domain_error("--symbolic conflicts with --q1/--q2");
        so.q1 = parse_q_list(opt.q1_text, opt.colors);
        so.q2 = parse_q_list(opt.q2_text, opt.colors);
      }
      so.max_degree = max_degree;
      if (!kl_text.empty()) {
        auto [k, l] = parse_kl(kl_text, opt.colors);
        so.kl_k = k;
        so.kl_l = l;
      }
      SuiteResult res = run_suite(suite, so);
      for (const auto& note : res.notes) std::cout << note << "\n";
      std::cout << res.verdict_line() << "\n";
      if (!res.pass) return 1;
    }
  } catch (const parse_error& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const cap_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const ring_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}

} // namespace

int main(int argc, char** argv) { return run(argc, argv); }
