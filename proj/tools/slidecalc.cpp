// Command-line front end: expansions, products, enumerations and stability
// computations with deterministic text or JSON output.

#include <fstream>
#include <iostream>
#include <functional>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "slide/io.hpp"
#include "slide/stability.hpp"
#include "slide/tableaux.hpp"
#include "slide/verify.hpp"

namespace {

using namespace slide;

struct Options {
  std::string format = "text";
  std::string output;
  unsigned threads = 0;
};

int emit(const Options& opt, const std::string& text, const Json& json) {
  std::string payload = opt.format == "json" ? json.dump(2) + "\n" : text;
  if (opt.output.empty()) {
    std::cout << payload;
  } else {
    std::ofstream out(opt.output);
    if (!out) {
      std::cerr << "error: cannot open output file " << opt.output << "\n";
      return 1;
    }
    out << payload;
  }
  return 0;
}

StrongComposition parse_partition(const std::string& text) {
  StrongComposition lambda = StrongComposition::parse(text);
  if (!lambda.is_partition())
    throw std::invalid_argument("not a partition (weakly decreasing): " + text);
  return lambda;
}

std::string render_dream_list(const std::vector<PipeDream>& dreams) {
  std::ostringstream os;
  os << dreams.size() << "\n";
  for (const auto& P : dreams) {
    std::string art = render_ascii(P);
    os << (art.empty() ? "(empty)" : art) << "\n\n";
  }
  return os.str();
}

Json dream_list_json(const std::vector<PipeDream>& dreams) {
  Json arr = Json::array();
  for (const auto& P : dreams) arr.push_back(pipe_dream_to_json(P));
  Json out;
  out["count"] = dreams.size();
  out["items"] = std::move(arr);
  return out;
}

std::string render_tableau_list(const std::vector<Tableau>& list) {
  std::ostringstream os;
  os << list.size() << "\n";
  for (const auto& T : list) os << T.str() << "\n\n";
  return os.str();
}

Json tableau_list_json(const std::vector<Tableau>& list) {
  Json arr = Json::array();
  for (const auto& T : list) arr.push_back(tableau_to_json(T));
  Json out;
  out["count"] = list.size();
  out["items"] = std::move(arr);
  return out;
}

Json profile_json(const std::vector<long long>& profile) {
  Json out;
  out["profile"] = profile;
  return out;
}

std::string profile_text(const std::vector<long long>& profile) {
  std::ostringstream os;
  for (size_t m = 0; m < profile.size(); ++m) os << "m=" << m << "  " << profile[m] << "\n";
  return os.str();
}

int run_verify(const Options& opt, const std::string& suite) {
  auto checks = run_verify_suite(suite);
  std::ostringstream os;
  Json arr = Json::array();
  int failed = 0;
  for (const auto& c : checks) {
    os << (c.pass ? "[PASS] " : "[FAIL] ") << c.id;
    if (!c.pass && !c.detail.empty()) os << "  (" << c.detail << ")";
    os << "\n";
    Json j;
    j["id"] = c.id;
    j["pass"] = c.pass;
    if (!c.pass) j["detail"] = c.detail;
    arr.push_back(std::move(j));
    if (!c.pass) ++failed;
  }
  os << checks.size() - failed << "/" << checks.size() << " checks passed\n";
  Json out;
  out["suite"] = suite;
  out["checks"] = std::move(arr);
  out["failed"] = failed;
  int rc = emit(opt, os.str(), out);
  return rc != 0 ? rc : (failed == 0 ? 0 : 1);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact Schubert calculus in the slide polynomial bases"};
  app.require_subcommand(1);
  Options opt;
  app.add_option("--format", opt.format, "Output format")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();
  app.add_option("--output", opt.output, "Write output to a file");
  app.add_option("--threads", opt.threads, "Cap worker threads (0 = all cores)");

  // expand
  auto* expand = app.add_subcommand("expand", "Expand a polynomial in a chosen basis");
  expand->require_subcommand(1);
  std::string x_perm, x_basis = "fslide";
  auto* ex_schub = expand->add_subcommand("schubert", "Schubert polynomial of a permutation");
  ex_schub->add_option("w", x_perm, "Permutation")->required();
  ex_schub->add_option("--basis", x_basis, "Target basis")
      ->check(CLI::IsMember({"monomials", "mslide", "fslide"}));
  std::string x_shape, x_via = "qyt";
  int x_n = 0;
  auto* ex_schur = expand->add_subcommand("schur", "Schur polynomial of a partition");
  ex_schur->add_option("lambda", x_shape, "Partition")->required();
  ex_schur->add_option("--n", x_n, "Number of variables")->required();
  ex_schur->add_option("--via", x_via, "Construction route")
      ->check(CLI::IsMember({"ssyt", "syt", "qyt"}));
  std::string x_kind, x_comp;
  auto* ex_slide = expand->add_subcommand("slide", "Monomial expansion of a slide polynomial");
  ex_slide->add_option("kind", x_kind, "m (monomial) or f (fundamental)")
      ->required()
      ->check(CLI::IsMember({"m", "f"}));
  ex_slide->add_option("a", x_comp, "Weak composition")->required();

  // product
  auto* product = app.add_subcommand("product", "Multiply in a chosen basis");
  std::string p_kind, p_x, p_y;
  bool p_to_schubert = false;
  product->add_option("kind", p_kind, "Basis of the factors")
      ->required()
      ->check(CLI::IsMember({"mslide", "fslide", "schubert", "qsym-m", "qsym-f"}));
  product->add_option("x", p_x, "Left factor")->required();
  product->add_option("y", p_y, "Right factor")->required();
  product->add_flag("--to-schubert", p_to_schubert,
                    "Peel a Schubert product back into the Schubert basis");

  // enumerate
  auto* enumerate = app.add_subcommand("enumerate", "List combinatorial objects");
  std::string e_kind, e_index;
  int e_n = 0;
  enumerate->add_option("kind", e_kind, "Object family")
      ->required()
      ->check(CLI::IsMember({"pd", "qpd", "ssyt", "syt", "qyt", "reduced-words"}));
  enumerate->add_option("index", e_index, "Permutation or partition")->required();
  enumerate->add_option("--n", e_n, "Entry bound for tableau families");

  // stanley
  auto* stanley = app.add_subcommand("stanley", "Stanley symmetric function of a permutation");
  std::string st_perm, st_via = "words";
  stanley->add_option("w", st_perm, "Permutation")->required();
  stanley->add_option("--via", st_via, "Construction route")
      ->check(CLI::IsMember({"words", "limit"}));

  // stability
  auto* stability = app.add_subcommand("stability", "Stabilization statistics and profiles");
  stability->require_subcommand(1);
  std::string sb_w, sb_u, sb_v, sb_kind = "perm";
  int sb_max = 0;
  auto* sb_eta = stability->add_subcommand("eta", "Eta statistic of a permutation");
  sb_eta->add_option("w", sb_w, "Permutation")->required();
  auto* sb_zeta = stability->add_subcommand("zeta", "Zeta statistic of a pair");
  sb_zeta->add_option("u", sb_u, "Left argument")->required();
  sb_zeta->add_option("v", sb_v, "Right argument")->required();
  sb_zeta->add_option("--kind", sb_kind, "Argument kind")
      ->check(CLI::IsMember({"perm", "strong", "weak"}));
  auto* sb_pq = stability->add_subcommand("profile-qpd", "|QPD(1^m x w)| profile");
  sb_pq->add_option("w", sb_w, "Permutation")->required();
  sb_pq->add_option("--max", sb_max, "Largest m")->required();
  auto* sb_pp = stability->add_subcommand("profile-product", "|SS(0^m x a, 0^m x b)| profile");
  sb_pp->add_option("u", sb_u, "Weak composition a")->required();
  sb_pp->add_option("v", sb_v, "Weak composition b")->required();
  sb_pp->add_option("--max", sb_max, "Largest m")->required();

  // verify
  auto* verify = app.add_subcommand("verify", "Run a verification suite");
  std::string v_suite = "all";
  verify->add_option("suite", v_suite, "Suite name")
      ->check(CLI::IsMember(verify_suite_names()));

  // let global options appear after subcommand names
  std::function<void(CLI::App*)> enable_fallthrough = [&](CLI::App* cmd) {
    cmd->fallthrough(true);
    for (CLI::App* sub : cmd->get_subcommands({})) enable_fallthrough(sub);
  };
  for (CLI::App* sub : app.get_subcommands({})) enable_fallthrough(sub);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  set_max_threads(opt.threads);

  try {
    if (ex_schub->parsed()) {
      Permutation w = Permutation::parse(x_perm);
      if (x_basis == "monomials")
        return emit(opt, format_polynomial(schubert_polynomial(w)),
                    polynomial_to_json(schubert_polynomial(w)));
      if (x_basis == "fslide") {
        SlideExpansion e = schubert_to_fundamental_slide(w);
        return emit(opt, format_expansion(e), expansion_to_json(e));
      }
      SlideExpansion e = to_monomial_slide_basis(schubert_polynomial(w));
      return emit(opt, format_expansion(e), expansion_to_json(e));
    }
    if (ex_schur->parsed()) {
      StrongComposition lambda = parse_partition(x_shape);
      if (x_via == "ssyt")
        return emit(opt, format_polynomial(schur_via_ssyt(lambda, x_n)),
                    polynomial_to_json(schur_via_ssyt(lambda, x_n)));
      if (x_via == "syt")
        return emit(opt, format_polynomial(schur_via_syt(lambda, x_n)),
                    polynomial_to_json(schur_via_syt(lambda, x_n)));
      auto [poly, exp] = schur_via_qyt(lambda, x_n);
      Json j;
      j["polynomial"] = polynomial_to_json(poly);
      j["expansion"] = expansion_to_json(exp);
      return emit(opt, format_expansion(exp) + "=\n" + format_polynomial(poly), j);
    }
    if (ex_slide->parsed()) {
      WeakComposition a = WeakComposition::parse(x_comp);
      Polynomial f = x_kind == "m" ? expand_monomial_slide(a) : expand_fundamental_slide(a);
      return emit(opt, format_polynomial(f), polynomial_to_json(f));
    }
    if (product->parsed()) {
      if (p_kind == "mslide" || p_kind == "fslide") {
        WeakComposition a = WeakComposition::parse(p_x), b = WeakComposition::parse(p_y);
        SlideExpansion e = p_kind == "mslide" ? quasi_slide_product(a, b) : slide_product(a, b);
        return emit(opt, format_expansion(e), expansion_to_json(e));
      }
      if (p_kind == "qsym-m" || p_kind == "qsym-f") {
        StrongComposition alpha = StrongComposition::parse(p_x);
        StrongComposition beta = StrongComposition::parse(p_y);
        QsymExpansion e = p_kind == "qsym-m" ? monomial_qsym_product(alpha, beta)
                                             : fundamental_qsym_product(alpha, beta);
        return emit(opt, format_expansion(e), expansion_to_json(e));
      }
      Permutation u = Permutation::parse(p_x), v = Permutation::parse(p_y);
      SlideExpansion e = schubert_product_slide(u, v);
      if (!p_to_schubert) return emit(opt, format_expansion(e), expansion_to_json(e));
      SchubertExpansion s = slide_expansion_to_schubert(e, true);
      return emit(opt, format_expansion(s), expansion_to_json(s));
    }
    if (enumerate->parsed()) {
      if (e_kind == "pd" || e_kind == "qpd") {
        Permutation w = Permutation::parse(e_index);
        auto dreams = e_kind == "pd" ? enumerate_pipe_dreams(w) : enumerate_qpd(w);
        return emit(opt, render_dream_list(dreams), dream_list_json(dreams));
      }
      if (e_kind == "reduced-words") {
        Permutation w = Permutation::parse(e_index);
        auto words = reduced_words(w);
        std::ostringstream os;
        os << words.size() << "\n";
        Json arr = Json::array();
        for (const auto& sigma : words) {
          for (size_t i = 0; i < sigma.indices().size(); ++i)
            os << (i ? "," : "") << sigma.indices()[i];
          os << "\n";
          arr.push_back(sigma.indices());
        }
        Json j;
        j["count"] = words.size();
        j["items"] = std::move(arr);
        return emit(opt, os.str(), j);
      }
      StrongComposition lambda = parse_partition(e_index);
      if (e_kind == "syt")
        return emit(opt, render_tableau_list(enumerate_syt(lambda)),
                    tableau_list_json(enumerate_syt(lambda)));
      if (e_n <= 0) throw std::invalid_argument("--n is required for ssyt/qyt");
      auto list = e_kind == "ssyt" ? enumerate_ssyt(lambda, e_n) : enumerate_qyt(lambda, e_n);
      return emit(opt, render_tableau_list(list), tableau_list_json(list));
    }
    if (stanley->parsed()) {
      Permutation w = Permutation::parse(st_perm);
      QsymExpansion e = st_via == "words" ? stanley_via_reduced_words(w)
                                          : stanley_via_stable_slide(w);
      return emit(opt, format_expansion(e), expansion_to_json(e));
    }
    if (sb_eta->parsed()) {
      int value = eta(Permutation::parse(sb_w));
      Json j;
      j["eta"] = value;
      return emit(opt, std::to_string(value) + "\n", j);
    }
    if (sb_zeta->parsed()) {
      long long value;
      if (sb_kind == "perm")
        value = zeta_perm(Permutation::parse(sb_u), Permutation::parse(sb_v));
      else if (sb_kind == "strong")
        value = zeta_strong(StrongComposition::parse(sb_u), StrongComposition::parse(sb_v));
      else
        value = zeta_weak(WeakComposition::parse(sb_u), WeakComposition::parse(sb_v));
      Json j;
      j["zeta"] = value;
      return emit(opt, std::to_string(value) + "\n", j);
    }
    if (sb_pq->parsed()) {
      auto profile = qpd_count_profile(Permutation::parse(sb_w), sb_max);
      return emit(opt, profile_text(profile), profile_json(profile));
    }
    if (sb_pp->parsed()) {
      auto profile = slide_product_stabilization_profile(
          WeakComposition::parse(sb_u), WeakComposition::parse(sb_v), sb_max);
      return emit(opt, profile_text(profile), profile_json(profile));
    }
    if (verify->parsed()) return run_verify(opt, v_suite);
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  std::cerr << "error: no subcommand\n";
  return 2;
}
