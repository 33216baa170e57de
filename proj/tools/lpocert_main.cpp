// lpocert: LPO termination checking, classification and measurement for
// small term rewriting systems.
//
// Exit codes: 0 success / oriented, 1 not orientable, 2 parse error,
// 3 synthesis limit, 4 nontermination, 5 budget exhausted.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "lpocert/certificate.hpp"
#include "lpocert/classify.hpp"
#include "lpocert/errors.hpp"
#include "lpocert/hierarchy.hpp"
#include "lpocert/lpo.hpp"
#include "lpocert/lpo_approx.hpp"
#include "lpocert/ordinal.hpp"
#include "lpocert/rewrite.hpp"
#include "lpocert/term_enum.hpp"
#include "lpocert/trs_parse.hpp"

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw lpo::ParseError("cannot open " + path, 1, 1);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::string base_name(const std::string& path) {
  std::size_t slash = path.find_last_of('/');
  std::string name = slash == std::string::npos ? path : path.substr(slash + 1);
  if (name.size() > 4 && name.ends_with(".trs"))
    name.resize(name.size() - 4);
  return name;
}

lpo::TRSFile load_trs(const std::string& path) {
  return lpo::parse_trs(read_file(path), base_name(path));
}

// "0<s<A" -> ascending chain.
std::vector<std::string> parse_chain(const std::string& text) {
  std::vector<std::string> chain;
  std::string cur;
  for (char c : text) {
    if (c == '<') {
      if (cur.empty()) throw lpo::ParseError("empty name in precedence", 1, 1);
      chain.push_back(cur);
      cur.clear();
    } else if (c != ' ') {
      cur += c;
    }
  }
  if (cur.empty()) throw lpo::ParseError("empty name in precedence", 1, 1);
  chain.push_back(cur);
  return chain;
}

lpo::OrientationResult orient_trs(const lpo::TRSFile& trs,
                                  const std::string& prec) {
  if (prec.empty())
    return lpo::synthesize_precedence(trs.rules, trs.sig.symbols());
  std::vector<std::string> chain = parse_chain(prec);
  lpo::Signature sig = lpo::Signature::chain(trs.sig.symbols(), chain);
  return lpo::orient(trs.rules, sig);
}

int cmd_check(const std::string& file, const std::string& prec) {
  lpo::TRSFile trs = load_trs(file);
  lpo::OrientationResult res = orient_trs(trs, prec);
  for (std::size_t i = 0; i < trs.rules.size(); ++i)
    std::cout << "rule " << (i + 1) << ": " << trs.rules[i].str() << "  ["
              << (res.per_rule[i] ? "oriented" : "not oriented") << "]\n";
  if (res.orientable) {
    std::cout << "orientable with precedence:";
    if (!res.chain.empty())
      for (std::size_t i = 0; i < res.chain.size(); ++i)
        std::cout << (i ? " < " : " ") << res.chain[i];
    else
      for (const auto& [lo, hi] : res.sig.pairs())
        std::cout << " " << lo << "<" << hi;
    std::cout << "\n";
    return 0;
  }
  if (prec.empty()) {
    // Longest rule prefix some total order handles; the next rule is the
    // one synthesis cannot accommodate.
    std::vector<lpo::Rule> prefix;
    std::size_t blocking = 0;
    for (std::size_t i = 0; i < trs.rules.size(); ++i) {
      prefix.push_back(trs.rules[i]);
      if (!lpo::synthesize_precedence(prefix, trs.sig.symbols()).orientable) {
        blocking = i + 1;
        break;
      }
    }
    std::cout << "no precedence orients rule " << blocking << "\n";
  } else {
    std::cout << "precedence does not orient the system\n";
  }
  return 1;
}

int cmd_classify(const std::string& file, const std::string& prec, bool json,
                 const lpo::CertificateOptions& opts) {
  lpo::TRSFile trs = load_trs(file);
  lpo::OrientationResult res = orient_trs(trs, prec);
  lpo::Certificate cert = lpo::build_certificate(trs, res, opts);
  if (json)
    std::cout << lpo::certificate_json(cert).dump(2) << "\n";
  else
    std::cout << lpo::certificate_text(cert);
  return cert.orientable ? 0 : 1;
}

int cmd_measure(const std::string& file, const std::string& prec,
                unsigned max_size, std::uint64_t step_cap,
                std::uint64_t budget, bool depth_bounded) {
  lpo::TRSFile trs = load_trs(file);
  bool has_constant = false;
  for (const lpo::Symbol& s : trs.sig.symbols())
    if (s.arity == 0) has_constant = true;
  if (!has_constant) {
    std::cerr << "warning: no constants, no ground terms to measure\n";
    return 0;
  }

  lpo::OrientationResult res = orient_trs(trs, prec);
  std::vector<lpo::CurvePoint> curve = lpo::dh_complexity(
      trs.rules, trs.sig, max_size, step_cap, depth_bounded);

  unsigned p_r = 0;
  std::unique_ptr<lpo::ApproxWorkspace> ws;
  if (res.orientable) {
    ws = std::make_unique<lpo::ApproxWorkspace>(res.sig, budget);
    p_r = ws->static_pR(trs.rules);
  }
  std::cout << "n\tdh\twitness\theight@p=" << p_r << "\n";
  for (const lpo::CurvePoint& pt : curve) {
    std::cout << pt.n << "\t" << pt.dh << "\t" << pt.witness.str() << "\t";
    if (ws)
      std::cout << ws->wp_height(pt.witness, p_r);
    else
      std::cout << "-";
    std::cout << "\n";
  }
  return 0;
}

int cmd_hierarchy(const std::vector<std::string>& fast,
                  const std::vector<std::string>& slow,
                  const std::vector<std::string>& pred,
                  const std::vector<std::string>& height,
                  const std::string& sig_file, const std::string& prec,
                  std::uint64_t budget) {
  if (!fast.empty()) {
    lpo::OrdinalCNF alpha = lpo::OrdinalCNF::parse(fast[0]);
    lpo::BigNat n(fast[1]);
    std::cout << lpo::fast_F(alpha, n).str() << "\n";
    return 0;
  }
  if (!slow.empty()) {
    lpo::OrdinalCNF alpha = lpo::OrdinalCNF::parse(slow[0]);
    lpo::BigNat n(slow[1]);
    std::cout << lpo::slow_G(alpha, n).str() << "\n";
    return 0;
  }
  if (sig_file.empty())
    throw lpo::ParseError("--pred/--height need --sig FILE", 1, 1);
  lpo::TRSFile trs = load_trs(sig_file);
  // The approximations depend on the precedence: take the supplied chain,
  // or the synthesized one that orients the file's rules.
  lpo::Signature sig = trs.sig;
  if (!prec.empty()) {
    sig = lpo::Signature::chain(trs.sig.symbols(), parse_chain(prec));
  } else {
    lpo::OrientationResult res =
        lpo::synthesize_precedence(trs.rules, trs.sig.symbols());
    if (!res.orientable) {
      std::cout << "no precedence orients the system; pass --prec\n";
      return 1;
    }
    sig = res.sig;
  }
  const std::vector<std::string>& req = pred.empty() ? height : pred;
  lpo::Term t = lpo::parse_term(req[0], sig);
  unsigned p = static_cast<unsigned>(std::stoul(req[1]));
  lpo::ApproxWorkspace ws(sig, budget);
  if (!pred.empty()) {
    for (const lpo::Term& u : ws.predecessors(t, p))
      std::cout << u.str() << "\n";
  } else {
    std::cout << ws.wp_height(t, p) << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"LPO termination certificates for term rewriting systems"};
  app.require_subcommand(1);

  std::string file, prec, sig_file;
  bool json = false, depth_bounded = false;
  lpo::CertificateOptions opts;
  unsigned max_size = 3;
  std::vector<std::string> fast, slow, pred, height;

  CLI::App* check = app.add_subcommand("check", "orient rules under a lexicographic path order");
  check->add_option("file", file, "TRS file")->required();
  check->add_option("--prec", prec, "ascending precedence chain, e.g. \"0<s<A\"");

  CLI::App* classify = app.add_subcommand("classify", "emit a termination certificate");
  classify->add_option("file", file, "TRS file")->required();
  classify->add_option("--prec", prec, "ascending precedence chain");
  classify->add_flag("--json", json, "canonical JSON output");
  classify->add_option("--containment-bound", opts.containment_bound,
                       "ground size bound for the containment check");
  classify->add_option("--step-cap", opts.step_cap, "derivation exploration cap");
  classify->add_option("--budget", opts.budget, "predecessor-set element budget");

  CLI::App* measure = app.add_subcommand("measure", "tabulate derivation heights");
  measure->add_option("file", file, "TRS file")->required();
  measure->add_option("--prec", prec, "ascending precedence chain");
  measure->add_option("--max-size", max_size, "table horizon");
  measure->add_option("--step-cap", opts.step_cap, "derivation exploration cap");
  measure->add_option("--budget", opts.budget, "predecessor-set element budget");
  measure->add_flag("--depth-bounded", depth_bounded,
                    "bound term depth instead of size");

  CLI::App* hier = app.add_subcommand("hierarchy", "hierarchy values and predecessor sets");
  hier->add_option("--fast", fast, "F_alpha(n): ordinal text and n")->expected(2);
  hier->add_option("--slow", slow, "G_n(alpha): ordinal text and n")->expected(2);
  hier->add_option("--pred", pred, "predecessor set: term and p")->expected(2);
  hier->add_option("--height", height, "well-founded-part height: term and p")->expected(2);
  hier->add_option("--sig", sig_file, "TRS file supplying the signature");
  hier->add_option("--prec", prec, "ascending precedence chain");
  hier->add_option("--budget", opts.budget, "predecessor-set element budget");

  try {
    app.parse(argc, argv);
    if (check->parsed()) return cmd_check(file, prec);
    if (classify->parsed()) return cmd_classify(file, prec, json, opts);
    if (measure->parsed())
      return cmd_measure(file, prec, max_size, opts.step_cap, opts.budget,
                         depth_bounded);
    if (hier->parsed()) {
      if (fast.empty() && slow.empty() && pred.empty() && height.empty())
        throw lpo::ParseError(
            "hierarchy needs one of --fast/--slow/--pred/--height", 1, 1);
      return cmd_hierarchy(fast, slow, pred, height, sig_file, prec,
                           opts.budget);
    }
    return 2;
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const lpo::TooManySymbols& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const lpo::NonTerminating& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 4;
  } catch (const lpo::BudgetExceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 5;
  } catch (const lpo::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
