#include "cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <cstdlib>
#include <json.hpp>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "weylkl/json.hpp"
#include "weylkl/kgroup.hpp"
#include "weylkl/kl.hpp"
#include "weylkl/schubert.hpp"
#include "weylkl/weyl.hpp"

namespace weylkl::cli {

namespace {

using nlohmann::json;

bool is_prime(uint64_t p) {
  if (p < 2) return false;
  for (uint64_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

Regime parse_characteristic(const std::string& text) {
  if (text == "0") return Regime::char_0;
  if (text == "p") return Regime::char_p;  // "some positive characteristic"
  uint64_t p = 0;
  try {
    size_t pos = 0;
    p = std::stoull(text, &pos);
    if (pos != text.size()) p = 0;
  } catch (const std::exception&) {
    p = 0;
  }
  if (!is_prime(p))
    throw std::invalid_argument("characteristic must be 0, a prime, or the letter p; got '" +
                                text + "'");
  return Regime::char_p;
}

BuildOptions build_options(uint64_t flag_value) {
  BuildOptions opt;
  if (const char* env = std::getenv("WEYLKL_MAX_ORDER")) {
    try {
      opt.max_order = std::stoull(env);
    } catch (const std::exception&) {
      throw std::invalid_argument("WEYLKL_MAX_ORDER is not a number");
    }
  }
  if (flag_value != 0) opt.max_order = flag_value;
  return opt;
}

std::string bracket_word(const WeylGroup& g, Element w) { return "[" + g.word_str(w) + "]"; }

std::string yesno(bool b) { return b ? "yes" : "no"; }

void cmd_group(const std::string& type_str, const std::string& format, BuildOptions opt,
               std::ostream& out) {
  auto g = WeylGroup::build(CartanType::parse(type_str), opt);
  Element w0 = g->longest_element();
  if (format == "json") {
    json j = {{"type", g->type().str()},
              {"rank", g->rank()},
              {"order", g->size()},
              {"positive_roots", g->positive_roots().size()},
              {"longest_length", g->length(w0)},
              {"longest_word", g->word(w0)}};
    out << j.dump() << "\n";
  } else if (format == "markdown") {
    out << "| field | value |\n| --- | --- |\n"
        << "| type | " << g->type().str() << " |\n"
        << "| order | " << g->size() << " |\n"
        << "| generators | " << g->rank() << " |\n"
        << "| positive roots | " << g->positive_roots().size() << " |\n"
        << "| longest element length | " << g->length(w0) << " |\n"
        << "| longest element | " << g->word_str(w0) << " |\n";
  } else {
    out << "type: " << g->type().str() << "\n"
        << "order: " << g->size() << "\n"
        << "generators: " << g->rank() << "\n"
        << "positive roots: " << g->positive_roots().size() << "\n"
        << "longest element length: " << g->length(w0) << "\n"
        << "longest element: " << g->word_str(w0) << "\n";
  }
}

void cmd_kl(const std::string& type_str, const std::string& v_str, const std::string& w_str,
            const std::string& format, BuildOptions opt, std::ostream& out) {
  auto g = WeylGroup::build(CartanType::parse(type_str), opt);
  KLContext ctx(g);
  Element v = g->parse_element(v_str);
  Element w = g->parse_element(w_str);
  Polynomial p = ctx.kl(v, w);
  if (format == "json") {
    out << to_json(p).dump() << "\n";
  } else if (format == "markdown") {
    out << "| v | w | P(v, w) |\n| --- | --- | --- |\n"
        << "| " << g->word_str(v) << " | " << g->word_str(w) << " | " << p.str() << " |\n";
  } else {
    out << p.str() << "\n";
  }
}

void cmd_decompose(const std::string& type_str, const std::string& w_str,
                   const std::string& char_str, const std::string& object,
                   const std::string& format, BuildOptions opt, std::ostream& out) {
  auto g = WeylGroup::build(CartanType::parse(type_str), opt);
  KLContext ctx(g);
  Element w = g->parse_element(w_str);
  Regime regime = parse_characteristic(char_str);

  KGClass cls(Basis::L, regime, g.get());
  if (object == "simple") {
    cls = regime == Regime::char_p ? simple_in_dualverma_charp(ctx, w)
                                   : simple_in_dualverma_char0(ctx, w);
  } else if (object == "dualverma") {
    cls = regime == Regime::char_p ? dualverma_in_simple_charp(ctx, w)
                                   : dualverma_in_simple_char0(ctx, w);
  } else if (object == "localcoh") {
    if (regime == Regime::char_0) {
      cls = localcoh_divisor_class_char0(ctx, w);
    } else {
      // In positive characteristic H^c with support X(w) is the simple
      // module L(w) itself; its class needs no decomposition.
      cls.add(w, 1);
    }
  } else {
    throw std::invalid_argument("unknown object '" + object + "'");
  }

  if (format == "json") {
    out << to_json(cls).dump() << "\n";
  } else if (format == "markdown") {
    out << "| coefficient | class |\n| --- | --- |\n";
    for (const auto& [y, c] : cls.terms())
      out << "| " << c << " | [" << static_cast<char>(cls.basis()) << "(" << g->word_str(y)
          << ")] |\n";
  } else {
    out << cls.str() << "\n";
  }
}

void cmd_smoothness(const std::string& type_str, const std::string& w_str,
                    const std::string& format, BuildOptions opt, std::ostream& out) {
  auto g = WeylGroup::build(CartanType::parse(type_str), opt);
  KLContext ctx(g);
  Element w = g->parse_element(w_str);
  SchubertDatum d = schubert_datum(ctx, w);
  const bool type_a = g->type().family == Family::A;
  bool pattern_smooth = false;
  std::string perm_str;
  std::vector<int> perm;
  if (type_a) {
    pattern_smooth = pattern_avoidance_smooth_typeA(w);
    perm = one_line_permutation(w);
    for (size_t k = 0; k < perm.size(); ++k) perm_str += (k ? " " : "") + std::to_string(perm[k]);
  }

  std::string maximals;
  for (size_t k = 0; k < d.singular_locus_maximals.size(); ++k) {
    if (k) maximals += ", ";
    maximals += bracket_word(*g, d.singular_locus_maximals[k]);
  }

  if (format == "json") {
    json j = {{"element", g->word(w)},
              {"dim", d.dim},
              {"codim", d.codim},
              {"rationally_smooth", d.rationally_smooth}};
    json sing = json::array();
    for (Element v : d.singular_locus_maximals) sing.push_back(g->word(v));
    j["singular_locus_maximals"] = sing;
    if (type_a) {
      j["one_line"] = perm;
      j["smooth_pattern_typeA"] = pattern_smooth;
    }
    out << j.dump() << "\n";
  } else if (format == "markdown") {
    out << "| field | value |\n| --- | --- |\n"
        << "| element | " << g->word_str(w) << " |\n";
    if (type_a) out << "| permutation | " << perm_str << " |\n";
    out << "| dimension | " << d.dim << " |\n"
        << "| codimension | " << d.codim << " |\n"
        << "| rationally smooth | " << yesno(d.rationally_smooth) << " |\n"
        << "| singular locus maximals | " << (maximals.empty() ? "none" : maximals) << " |\n";
    if (type_a) out << "| smooth (type A pattern criterion) | " << yesno(pattern_smooth) << " |\n";
  } else {
    out << "element: " << g->word_str(w) << "\n";
    if (type_a) out << "permutation: " << perm_str << "\n";
    out << "dimension: " << d.dim << "\n"
        << "codimension: " << d.codim << "\n";
    if (d.rationally_smooth) {
      out << "rationally smooth\n";
    } else {
      out << "rationally singular; singular locus maximals: " << maximals << "\n";
    }
    if (type_a) {
      out << "smooth (type A pattern criterion): " << yesno(pattern_smooth) << "\n";
    }
  }
}

void cmd_gc(const std::string& type_str, const std::string& w_str, const std::string& format,
            BuildOptions opt, std::ostream& out) {
  auto g = WeylGroup::build(CartanType::parse(type_str), opt);
  KLContext ctx(g);
  Element w = g->parse_element(w_str);
  auto degrees = gc_complex_terms(ctx, w);

  if (format == "json") {
    json j;
    j["element"] = g->word(w);
    json degs = json::array();
    for (const auto& bucket : degrees) {
      json b = json::array();
      for (Element y : bucket) b.push_back(g->word(y));
      degs.push_back(b);
    }
    j["degrees"] = degs;
    out << j.dump() << "\n";
  } else if (format == "markdown") {
    out << "| degree | terms |\n| --- | --- |\n";
    for (size_t i = 0; i < degrees.size(); ++i) {
      out << "| " << i << " | ";
      for (size_t k = 0; k < degrees[i].size(); ++k) {
        if (k) out << ", ";
        out << "[M(" << g->word_str(degrees[i][k]) << ")]";
      }
      out << " |\n";
    }
  } else {
    for (size_t i = 0; i < degrees.size(); ++i) {
      out << "degree " << i << ": ";
      for (size_t k = 0; k < degrees[i].size(); ++k) {
        if (k) out << ", ";
        out << bracket_word(*g, degrees[i][k]);
      }
      out << "\n";
    }
  }
}

std::vector<int> parse_generator_set(const WeylGroup& g, const std::string& text) {
  std::string buf(text);
  for (char& ch : buf)
    if (ch == ',') ch = ' ';
  std::istringstream in(buf);
  std::vector<int> gens;
  std::string tok;
  while (in >> tok) {
    int s = 0;
    try {
      size_t pos = 0;
      s = std::stoi(tok, &pos);
      if (pos != tok.size()) s = 0;
    } catch (const std::exception&) {
      s = 0;
    }
    if (s < 1 || s > g.rank())
      throw std::invalid_argument("bad generator '" + tok + "' in parabolic subset");
    gens.push_back(s);
  }
  return gens;
}

void cmd_coset(const std::string& type_str, const std::string& w_str, const std::string& j_str,
               const std::string& format, BuildOptions opt, std::ostream& out) {
  auto g = WeylGroup::build(CartanType::parse(type_str), opt);
  Element w = g->parse_element(w_str);
  auto j = ParabolicSubset::of(parse_generator_set(*g, j_str));
  Element rep = g->min_coset_rep(w, j);
  if (format == "json") {
    json out_j = {{"element", g->word(w)},
                  {"subset", j.generators},
                  {"min_coset_rep", g->word(rep)}};
    out << out_j.dump() << "\n";
  } else if (format == "markdown") {
    std::string subset;
    for (size_t k = 0; k < j.generators.size(); ++k)
      subset += (k ? " " : "") + std::to_string(j.generators[k]);
    out << "| w | J | minimal representative |\n| --- | --- | --- |\n"
        << "| " << g->word_str(w) << " | {" << subset << "} | " << g->word_str(rep) << " |\n";
  } else {
    out << g->word_str(rep) << "\n";
  }
}

void cmd_verma(const std::string& type_str, const std::string& x_str, const std::string& y_str,
               const std::string& format, BuildOptions opt, std::ostream& out) {
  auto g = WeylGroup::build(CartanType::parse(type_str), opt);
  KLContext ctx(g);
  Element x = g->parse_element(x_str);
  Element y = g->parse_element(y_str);
  bool ok = verma_identity_check(ctx, x, y);
  if (format == "json") {
    out << (ok ? "true" : "false") << "\n";
  } else if (format == "markdown") {
    out << "| x | y | identity holds |\n| --- | --- | --- |\n"
        << "| " << g->word_str(x) << " | " << g->word_str(y) << " | " << yesno(ok) << " |\n";
  } else {
    out << (ok ? "true" : "false") << "\n";
  }
}

int run_demo(const std::string& name, std::ostream& out) {
  if (name != "paper")
    throw std::invalid_argument("unknown demo '" + name + "' (available: paper)");

  auto g = WeylGroup::build(CartanType::parse("A3"));
  KLContext ctx(g);
  Element w = g->parse_element("1 2 3 2 1");
  Element s13 = g->parse_element("1 3");
  const Polynomial one_plus_q = Polynomial::from_coeffs({1, 1});

  bool all = true;
  auto report = [&](const std::string& label, bool ok, const std::string& detail) {
    out << "check " << label << ": " << (ok ? "PASS" : "FAIL");
    if (!detail.empty()) out << "  (" << detail << ")";
    out << "\n";
    all = all && ok;
  };

  out << "SL4 flag variety (type A3), w = " << g->word_str(w)
      << ": the singular codimension-one Schubert divisor X(w).\n\n";

  // KL polynomials of w: 1+q below s1 s3, trivial elsewhere.
  size_t n_special = 0, n_plain = 0;
  bool ok_table = true;
  for (const auto& [v, p] : ctx.kl_row(w)) {
    if (ctx.bruhat().leq(v, s13)) {
      ok_table = ok_table && p == one_plus_q;
      ++n_special;
    } else {
      ok_table = ok_table && p.is_one();
      ++n_plain;
    }
  }
  out << "P(v, w) = 1 + q for the " << n_special << " elements v <= " << g->word_str(s13)
      << ", and 1 for the other " << n_plain << " elements v <= w.\n";
  report("kl-table", ok_table && n_special == 4,
         std::to_string(n_special + n_plain) + " elements below w");

  // The class of H^1 with support X(w) in characteristic zero.
  KGClass h1 = localcoh_divisor_class_char0(ctx, w);
  out << "\ncharacteristic 0: [H^1_X(w)(O_X)] = " << h1.str() << "\n";
  KGClass expected(Basis::L, Regime::char_0, g.get());
  expected.add(w, 1);
  expected.add(s13, 1);
  report("local-cohomology-class", h1 == expected,
         "two composition factors, so H^1_X(w)(O_X) is not simple");

  // Dual Verma decomposition in characteristic p is multiplicity free.
  bool ok_mf = true;
  for (uint32_t id = 0; id < g->size(); ++id) {
    Element y = g->element(id);
    KGClass m = dualverma_in_simple_charp(ctx, y);
    for (const auto& [z, c] : m.terms()) ok_mf = ok_mf && c == 1;
    ok_mf = ok_mf && m.term_count() == ctx.bruhat().closure(y).count();
  }
  out << "\ncharacteristic p: [M(y)] = sum of [L(z)], z <= y, each multiplicity 1.\n";
  report("dual-verma-multiplicity-free", ok_mf, "all 24 elements of A3");

  // Verma's identity over every comparable pair.
  bool ok_verma = true;
  size_t pairs = 0;
  for (uint32_t yid = 0; yid < g->size(); ++yid) {
    Element y = g->element(yid);
    for (uint32_t xid : ctx.bruhat().closure_ids(y)) {
      ok_verma = ok_verma && verma_identity_check(ctx, g->element(xid), y);
      ++pairs;
    }
  }
  report("verma-identity", ok_verma, std::to_string(pairs) + " comparable pairs in A3");

  // Singular locus and the pattern-avoidance cross-check.
  auto sing = singular_locus_maximals(ctx, w);
  out << "\nsingular locus maximals of X(w): ";
  for (size_t k = 0; k < sing.size(); ++k) out << (k ? ", " : "") << bracket_word(*g, sing[k]);
  out << "\n";
  report("singular-locus", sing == std::vector<Element>{s13}, "the singular locus is X(1 3)");

  bool ok_patterns = true;
  for (uint32_t id = 0; id < g->size(); ++id) {
    Element y = g->element(id);
    ok_patterns = ok_patterns && pattern_avoidance_smooth_typeA(y) == rationally_smooth(ctx, y);
  }
  report("smoothness-oracle", ok_patterns,
         "pattern avoidance agrees with the KL criterion on all 24 elements");

  out << (all ? "\nall checks passed\n" : "\nsome checks FAILED\n");
  return all ? 0 : 1;
}

}  // namespace

int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Weyl groups, Bruhat order, Kazhdan-Lusztig polynomials, and\n"
               "Grothendieck-group decompositions of dual Verma and local\n"
               "cohomology classes on flag varieties."};
  app.name("weylkl");
  app.fallthrough();  // accept global flags after the subcommand too

  std::string format = "text";
  app.add_option("--format", format, "output format")
      ->check(CLI::IsMember({"text", "json", "markdown"}));
  uint64_t max_order = 0;
  app.add_option("--max-order", max_order,
                 "enumeration cap override (default 10000000; env WEYLKL_MAX_ORDER)");
  std::string demo_flag;
  app.add_option("--demo", demo_flag, "run a named demo and report pass/fail (paper)");

  auto* sc_group = app.add_subcommand("group", "order, longest length and root data");
  std::string g_type;
  sc_group->add_option("type", g_type, "Cartan type, e.g. A3")->required();

  auto* sc_kl = app.add_subcommand("kl", "Kazhdan-Lusztig polynomial P(v, w)");
  std::string kl_type, kl_v, kl_w;
  sc_kl->add_option("type", kl_type)->required();
  sc_kl->add_option("v", kl_v, "word for v, e.g. \"1 3\"")->required();
  sc_kl->add_option("w", kl_w, "word for w")->required();

  auto* sc_dec = app.add_subcommand("decompose", "Grothendieck-group decomposition");
  std::string dec_type, dec_w, dec_char = "0", dec_object = "simple";
  sc_dec->add_option("type", dec_type)->required();
  sc_dec->add_option("w", dec_w, "word for w")->required();
  sc_dec->add_option("--char", dec_char, "characteristic: 0 or a prime (default 0)");
  sc_dec->add_option("--object", dec_object, "simple | dualverma | localcoh")
      ->check(CLI::IsMember({"simple", "dualverma", "localcoh"}));

  auto* sc_sm = app.add_subcommand("smoothness", "Schubert variety smoothness data");
  std::string sm_type, sm_w;
  sc_sm->add_option("type", sm_type)->required();
  sc_sm->add_option("w", sm_w, "word for w")->required();

  auto* sc_gc = app.add_subcommand("gc", "Grothendieck-Cousin complex terms");
  std::string gc_type, gc_w;
  sc_gc->add_option("type", gc_type)->required();
  sc_gc->add_option("w", gc_w, "word for w")->required();

  auto* sc_verma = app.add_subcommand("verma", "check Verma's identity for a pair x <= y");
  std::string vm_type, vm_x, vm_y;
  sc_verma->add_option("type", vm_type)->required();
  sc_verma->add_option("x", vm_x, "word for x")->required();
  sc_verma->add_option("y", vm_y, "word for y")->required();

  auto* sc_coset = app.add_subcommand("coset", "minimal length representative of w W_J");
  std::string cs_type, cs_w, cs_j;
  sc_coset->add_option("type", cs_type)->required();
  sc_coset->add_option("w", cs_w, "word for w")->required();
  sc_coset->add_option("subset", cs_j, "generator indices of J, e.g. \"2 3\"")->required();

  auto* sc_demo = app.add_subcommand("demo", "run a named demo (paper)");
  std::string demo_name = "paper";
  sc_demo->add_option("name", demo_name, "demo name (default: paper)");

  app.require_subcommand(0, 1);

  try {
    std::reverse(args.begin(), args.end());
    app.parse(args);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }

  try {
    std::ostringstream buf;
    int rc = 0;
    BuildOptions opt = build_options(max_order);
    if (!demo_flag.empty()) {
      if (!app.get_subcommands().empty())
        throw std::invalid_argument("--demo cannot be combined with a subcommand");
      rc = run_demo(demo_flag, buf);
    } else if (sc_group->parsed()) {
      cmd_group(g_type, format, opt, buf);
    } else if (sc_kl->parsed()) {
      cmd_kl(kl_type, kl_v, kl_w, format, opt, buf);
    } else if (sc_dec->parsed()) {
      cmd_decompose(dec_type, dec_w, dec_char, dec_object, format, opt, buf);
    } else if (sc_sm->parsed()) {
      cmd_smoothness(sm_type, sm_w, format, opt, buf);
    } else if (sc_gc->parsed()) {
      cmd_gc(gc_type, gc_w, format, opt, buf);
    } else if (sc_verma->parsed()) {
      cmd_verma(vm_type, vm_x, vm_y, format, opt, buf);
    } else if (sc_coset->parsed()) {
      cmd_coset(cs_type, cs_w, cs_j, format, opt, buf);
    } else if (sc_demo->parsed()) {
      rc = run_demo(demo_name, buf);
    } else {
      err << "error: no subcommand given (see --help)\n";
      return 1;
    }
    out << buf.str();
    return rc;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace weylkl::cli
