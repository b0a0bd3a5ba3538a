#include "ddcalc/verify.hpp"

#include <algorithm>
#include <sstream>

#include "ddcalc/families.hpp"
#include "ddcalc/forest.hpp"
#include "ddcalc/permutation.hpp"
#include "ddcalc/words.hpp"

namespace ddcalc {

bool Report::all_pass() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.pass; });
}

void Report::add(std::string name, bool pass, std::string detail) {
  checks.push_back(CheckResult{std::move(name), pass, std::move(detail)});
}

void Report::merge(const Report& other) {
  checks.insert(checks.end(), other.checks.begin(), other.checks.end());
}

std::string Report::str() const {
  std::ostringstream out;
  if (!title.empty()) out << "== " << title << " ==\n";
  for (const CheckResult& c : checks) {
    out << (c.pass ? "PASS" : "FAIL") << "  " << c.name;
    if (!c.pass && !c.detail.empty()) out << "  [" << c.detail << "]";
    out << "\n";
  }
  return out.str();
}

namespace {

Polynomial apply_word(const ops::OpFamily& x, const Word& word, Polynomial f) {
  // X_w f = X_{i_1}(X_{i_2}(...X_{i_k}(f))) for (i_1,...,i_k) in fac(w).
  for (auto it = word.rbegin(); it != word.rend(); ++it) f = x(*it, f);
  return f;
}

}  // namespace

Report verify_creation(const DdPairInstance& inst, const std::vector<Polynomial>& samples) {
  Report report;
  report.title = "creation identity: " + inst.name;
  int failures = 0;
  std::string first_failure;
  for (const Polynomial& f : samples) {
    int bound = f.support_bound() + inst.index_margin;
    Polynomial sum;
    for (int i = 1; i <= bound; ++i) sum += inst.creator(i, inst.dd(i, f));
    if (!(sum == f)) {
      ++failures;
      if (first_failure.empty()) {
        first_failure = "f = " + f.str() + ", sum = " + sum.str();
      }
    }
  }
  std::ostringstream name;
  name << inst.name << ": sum Y_i X_i = id on " << samples.size() << " samples";
  report.add(name.str(), failures == 0,
             failures ? std::to_string(failures) + " failures; first: " + first_failure : "");
  return report;
}

Report verify_duality(const DdPairInstance& inst) {
  Report report;
  report.title = "duality: " + inst.name;

  int rec_fail = 0, ct_fail = 0, code_fail = 0;
  std::string rec_detail, ct_detail, code_detail;

  for (const auto& w : inst.elements) {
    Polynomial sw = inst.poly(w);
    std::vector<int> lastw = inst.last(w);
    int bound = sw.support_bound() + inst.index_margin;
    for (int i : lastw) bound = std::max(bound, i);
    for (int i = 1; i <= bound; ++i) {
      Polynomial lhs = inst.dd(i, sw);
      bool in_last = std::find(lastw.begin(), lastw.end(), i) != lastw.end();
      Polynomial rhs = in_last ? inst.poly(inst.divide(w, i)) : Polynomial();
      if (!(lhs == rhs)) {
        ++rec_fail;
        if (rec_detail.empty()) {
          rec_detail = "w = " + inst.show(w) + ", i = " + std::to_string(i);
        }
      }
    }

    // Code-map laws: |code(w)| = ell(w), max supp code(w) = max last(w).
    std::vector<int> c = inst.code(w);
    int csum = 0, cmax = 0;
    for (std::size_t i = 0; i < c.size(); ++i) {
      csum += c[i];
      if (c[i] != 0) cmax = static_cast<int>(i) + 1;
    }
    int ell = 0;
    for (const Word& word : inst.factorizations(w)) {
      ell = static_cast<int>(word.size());
      break;
    }
    int lmax = lastw.empty() ? 0 : *std::max_element(lastw.begin(), lastw.end());
    if (csum != ell || cmax != lmax) {
      ++code_fail;
      if (code_detail.empty()) code_detail = "w = " + inst.show(w);
    }
  }

  // ct-orthogonality over all pairs, X_v applied along one factorization.
  for (const auto& v : inst.elements) {
    Word vword;
    auto facs = inst.factorizations(v);
    if (!facs.empty()) vword = facs.front();
    for (const auto& w : inst.elements) {
      Int expected = (v == w) ? 1 : 0;
      Int got = apply_word(inst.dd, vword, inst.poly(w)).constant_term();
      if (got != expected) {
        ++ct_fail;
        if (ct_detail.empty()) {
          ct_detail = "v = " + inst.show(v) + ", w = " + inst.show(w);
        }
      }
    }
  }

  std::size_t n = inst.elements.size();
  report.add(inst.name + ": recurrence X_i S_w over " + std::to_string(n) + " elements",
             rec_fail == 0, rec_detail);
  report.add(inst.name + ": ct-orthogonality over " + std::to_string(n * n) + " pairs",
             ct_fail == 0, ct_detail);
  report.add(inst.name + ": code-map laws", code_fail == 0, code_detail);
  return report;
}

DdPairInstance schubert_instance(int n) {
  DdPairInstance inst;
  inst.name = "schubert/S" + std::to_string(n);
  inst.dd = ops::partial_family();
  inst.creator = ops::schubert_creator_family();
  for (const Permutation& w : symmetric_group(n)) inst.elements.push_back(w.one_line());
  inst.last = [](const DdPairInstance::Element& e) {
    return Permutation::from_one_line(e).descents();
  };
  inst.divide = [n](const DdPairInstance::Element& e, int i) {
    auto v = Permutation::from_one_line(e).apply_s(i).one_line();
    v.resize(static_cast<std::size_t>(n));
    for (std::size_t j = 0; j < v.size(); ++j) {
      if (v[j] == 0) v[j] = static_cast<int>(j) + 1;
    }
    return v;
  };
  inst.factorizations = [](const DdPairInstance::Element& e) {
    return reduced_words(Permutation::from_one_line(e));
  };
  inst.code = [](const DdPairInstance::Element& e) {
    return Permutation::from_one_line(e).lehmer_code();
  };
  inst.poly = [](const DdPairInstance::Element& e) {
    return schubert(Permutation::from_one_line(e));
  };
  inst.show = [](const DdPairInstance::Element& e) {
    return Permutation::from_one_line(e).str();
  };
  return inst;
}

DdPairInstance forest_instance(int m, int max_size, int max_index) {
  DdPairInstance inst;
  inst.name = "forest/m=" + std::to_string(m) + "/size<=" + std::to_string(max_size);
  inst.dd = ops::qs_dd_family(m);
  inst.creator = ops::forest_creator_family(m);
  inst.index_margin = m;
  for (int s = 0; s <= max_size; ++s) {
    for (const IndexedForest& f : forests_of_size(s, m, max_index)) {
      inst.elements.push_back(f.code());
    }
  }
  inst.last = [m](const DdPairInstance::Element& e) {
    return IndexedForest::from_code(e, m).qdes();
  };
  inst.divide = [m](const DdPairInstance::Element& e, int i) {
    return IndexedForest::from_code(e, m).trim(i).code();
  };
  inst.factorizations = [m](const DdPairInstance::Element& e) {
    return trimming_sequences(IndexedForest::from_code(e, m));
  };
  inst.code = [](const DdPairInstance::Element& e) { return e; };
  inst.poly = [m](const DdPairInstance::Element& e) {
    return forest_polynomial(IndexedForest::from_code(e, m), m);
  };
  inst.show = [m](const DdPairInstance::Element& e) {
    return IndexedForest::from_code(e, m).str();
  };
  return inst;
}

DdPairInstance slide_instance(Multiplicity m, int max_len, int max_entry) {
  DdPairInstance inst;
  inst.name = "slide/m=" + m.str();
  inst.dd = ops::slide_extractor_family(m);
  inst.creator = ops::slide_creator_family(m);
  inst.elements.reserve(64);
  for (const Word& a : winc_words(max_len, max_entry)) inst.elements.push_back(a);
  inst.last = [](const DdPairInstance::Element& e) {
    return e.empty() ? std::vector<int>{} : std::vector<int>{e.back()};
  };
  inst.divide = [](const DdPairInstance::Element& e, int) {
    DdPairInstance::Element r = e;
    r.pop_back();
    return r;
  };
  inst.factorizations = [](const DdPairInstance::Element& e) {
    return std::vector<Word>{e};
  };
  inst.code = [](const DdPairInstance::Element& e) {
    // c_i counts entries equal to i.
    std::vector<int> c;
    for (int v : e) {
      if (static_cast<int>(c.size()) < v) c.resize(static_cast<std::size_t>(v), 0);
      ++c[static_cast<std::size_t>(v - 1)];
    }
    return c;
  };
  inst.poly = [m](const DdPairInstance::Element& e) { return slide(e, m); };
  inst.show = [](const DdPairInstance::Element& e) {
    std::string s = "(";
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (i) s += ",";
      s += std::to_string(e[i]);
    }
    return s + ")";
  };
  return inst;
}

}  // namespace ddcalc
