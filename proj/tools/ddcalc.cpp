// ddcalc: exact calculator for divided-difference operator calculus,
// Schubert / forest / slide polynomial families, and their expansions.

#include <cstdlib>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "ddcalc/errors.hpp"
#include "ddcalc/families.hpp"
#include "ddcalc/pipedream.hpp"
#include "ddcalc/suites.hpp"

namespace {

using namespace ddcalc;

Word parse_word(const std::string& text) {
  Word w;
  std::string body = text;
  if (body.rfind("c=", 0) == 0) body = body.substr(2);
  if (body.empty()) return w;
  std::istringstream in(body);
  std::string item;
  while (std::getline(in, item, ',')) {
    std::size_t used = 0;
    int v = std::stoi(item, &used);
    if (used != item.size()) throw ParseError("bad integer '" + item + "'", 0);
    w.push_back(v);
  }
  return w;
}

int staircase_bound() {
  if (const char* env = std::getenv("DDCALC_MAX_STAIRCASE")) {
    return std::stoi(env);
  }
  return kDefaultStaircaseBound;
}

void print_poly(const Polynomial& f, bool json) {
  if (json) {
    std::cout << slide_expand(f, Multiplicity::inf()).to_json() << "\n";
  } else {
    std::cout << f.str() << "\n";
  }
}

struct Flags {
  std::string m_text = "1";
  bool json = false;
  std::uint64_t seed = 1;
  int trials = 100;
  int vars = 4;
  int deg = 4;
  bool list = false;
  bool count = false;
  bool require_positive = false;
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact divided-difference polynomial calculator"};
  app.require_subcommand(1);
  Flags fl;

  std::string perm_text, code_text, word_text, poly_text, a_text, b_text;
  std::string basis = "slide";
  std::string suite = "all";

  auto add_common = [&](CLI::App* cmd, bool with_m) {
    cmd->add_flag("--json", fl.json, "JSON output");
    if (with_m) cmd->add_option("--m", fl.m_text, "multiplicity (positive integer or 'inf')");
  };

  CLI::App* c_schubert = app.add_subcommand("schubert", "Schubert polynomial of a permutation");
  c_schubert->add_option("perm", perm_text, "one-line notation, e.g. 14253")->required();
  add_common(c_schubert, false);

  CLI::App* c_forest = app.add_subcommand("forest", "m-forest polynomial of a code vector");
  c_forest->add_option("code", code_text, "code vector, e.g. c=0,2,0,1")->required();
  add_common(c_forest, true);

  CLI::App* c_slide = app.add_subcommand("slide", "m-slide polynomial of a word");
  c_slide->add_option("word", word_text, "word, e.g. 1,4,3")->required();
  add_common(c_slide, true);

  CLI::App* c_pd = app.add_subcommand("pipedreams", "reduced pipe dreams of a permutation");
  c_pd->add_option("perm", perm_text)->required();
  c_pd->add_flag("--list", fl.list, "render each dream");
  c_pd->add_flag("--count", fl.count, "print only the number of dreams");
  add_common(c_pd, false);

  CLI::App* c_expand = app.add_subcommand("expand", "expand a polynomial in a slide basis");
  c_expand->add_option("poly", poly_text, "polynomial, e.g. \"x1*x2^2 - 3\"")->required();
  c_expand->add_option("--basis", basis, "slide | mslide:M | monomial");
  c_expand->add_flag("--require-positive", fl.require_positive,
                     "exit 1 when any coefficient is negative");
  add_common(c_expand, false);

  CLI::App* c_kostka = app.add_subcommand("kostka", "signed slide expansion of a monomial word");
  c_kostka->add_option("word", word_text, "weakly increasing word, e.g. 2,4,4")->required();
  add_common(c_kostka, false);

  CLI::App* c_prod = app.add_subcommand("product-slide", "slide expansion of a slide product");
  c_prod->add_option("a", a_text)->required();
  c_prod->add_option("b", b_text)->required();
  add_common(c_prod, false);

  CLI::App* c_verify = app.add_subcommand("verify", "run a verification suite");
  c_verify->add_option("suite", suite,
                       "relations | creation | duality | expansion | kostka | pipedreams | all");
  c_verify->add_option("--seed", fl.seed);
  c_verify->add_option("--trials", fl.trials);
  c_verify->add_option("--vars", fl.vars);
  c_verify->add_option("--deg", fl.deg);
  bool m_set = false;
  c_verify->add_option("--m", fl.m_text)->each([&](const std::string&) { m_set = true; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*c_schubert) {
      print_poly(schubert(Permutation::parse(perm_text)), fl.json);
    } else if (*c_forest) {
      Multiplicity m = Multiplicity::parse(fl.m_text);
      if (m.is_inf()) throw ParseError("forest requires a finite --m", 0);
      IndexedForest f = IndexedForest::from_code(parse_word(code_text), m.value());
      print_poly(forest_polynomial(f, m.value()), fl.json);
    } else if (*c_slide) {
      print_poly(slide(parse_word(word_text), Multiplicity::parse(fl.m_text)), fl.json);
    } else if (*c_pd) {
      Permutation w = Permutation::parse(perm_text);
      std::vector<PipeDream> dreams = pipe_dreams(w, staircase_bound());
      if (fl.count) {
        std::cout << dreams.size() << "\n";
      } else if (fl.list) {
        for (std::size_t i = 0; i < dreams.size(); ++i) {
          if (i) std::cout << "\n";
          std::cout << dreams[i].render();
        }
      } else {
        print_poly(pipe_dream_polynomial(w, staircase_bound()), fl.json);
      }
    } else if (*c_expand) {
      Multiplicity m(1);
      if (basis == "slide") {
        m = Multiplicity(1);
      } else if (basis == "monomial") {
        m = Multiplicity::inf();
      } else if (basis.rfind("mslide:", 0) == 0) {
        m = Multiplicity::parse(basis.substr(7));
      } else {
        throw ParseError("unknown basis '" + basis + "'", 0);
      }
      Expansion e = slide_expand(Polynomial::parse(poly_text), m);
      std::cout << e.to_json() << "\n";
      if (fl.require_positive) {
        for (const auto& [idx, c] : e.coeffs) {
          if (c < 0) return 1;
        }
      }
    } else if (*c_kostka) {
      Word a = parse_word(word_text);
      Expansion e = monomial_to_slide(a);
      if (fl.json) {
        std::cout << e.to_json() << "\n";
      } else {
        for (const auto& [idx, c] : e.coeffs) {
          std::cout << (c < 0 ? "-" : "+") << " ";
          for (std::size_t i = 0; i < idx.size(); ++i) {
            std::cout << (i ? "," : "") << idx[i];
          }
          std::cout << "\n";
        }
      }
    } else if (*c_prod) {
      std::cout << slide_product_expand(parse_word(a_text), parse_word(b_text)).to_json() << "\n";
    } else if (*c_verify) {
      SuiteOptions opts;
      opts.seed = fl.seed;
      opts.trials = fl.trials;
      opts.vars = fl.vars;
      opts.deg = fl.deg;
      opts.max_staircase = staircase_bound();
      if (m_set) opts.m = Multiplicity::parse(fl.m_text);
      Report report;
      if (suite == "relations") report = suite_relations(opts);
      else if (suite == "creation") report = suite_creation(opts);
      else if (suite == "duality") report = suite_duality(opts);
      else if (suite == "expansion") report = suite_expansion(opts);
      else if (suite == "kostka") report = suite_kostka(opts);
      else if (suite == "pipedreams") report = suite_pipedreams(opts);
      else if (suite == "all") report = suite_all(opts);
      else throw ParseError("unknown suite '" + suite + "'", 0);
      std::cout << report.str();
      return report.all_pass() ? 0 : 1;
    }
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const ArityMismatch& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const BoundExceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const NotTerminal& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::runtime_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
