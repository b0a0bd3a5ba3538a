#include "ddcalc/suites.hpp"

#include <algorithm>
#include <string>
#include <vector>

#include "ddcalc/families.hpp"
#include "ddcalc/operators.hpp"
#include "ddcalc/random.hpp"
#include "ddcalc/words.hpp"

namespace ddcalc {

namespace {

using ops::bs_map;
using ops::partial;
using ops::qs_dd;
using ops::slide_extractor;

constexpr Multiplicity kInf = Multiplicity::inf();

struct Tally {
  int failures = 0;
  std::string detail;

  void expect(bool ok, const std::string& what) {
    if (ok) return;
    ++failures;
    if (detail.empty()) detail = what;
  }
  void report(Report& r, const std::string& name) const {
    r.add(name, failures == 0,
          failures ? std::to_string(failures) + " failures; first: " + detail : "");
  }
};

Polynomial random_hom(PolyGen& gen, const SuiteOptions& o) {
  std::uniform_int_distribution<int> d(1, o.deg);
  return gen.homogeneous(o.vars, d(gen.engine()));
}

}  // namespace

Report suite_relations(const SuiteOptions& o) {
  Report r;
  r.title = "relations (seed=" + std::to_string(o.seed) + ", trials=" +
            std::to_string(o.trials) + ", vars=" + std::to_string(o.vars) +
            ", deg=" + std::to_string(o.deg) + ")";
  PolyGen gen(o.seed);
  Tally nilsq, farcomm, braid, thompson, winc, routes, lemma, telescope, leibniz;

  for (int t = 0; t < o.trials; ++t) {
    Polynomial f = random_hom(gen, o);
    std::string tag = "trial " + std::to_string(t) + ", f = " + f.str();

    for (int i = 1; i <= o.vars; ++i) {
      nilsq.expect(partial(i, partial(i, f)).is_zero(), tag);
      farcomm.expect(partial(i, partial(i + 2, f)) == partial(i + 2, partial(i, f)), tag);
      braid.expect(partial(i, partial(i + 1, partial(i, f))) ==
                       partial(i + 1, partial(i, partial(i + 1, f))),
                   tag);
      routes.expect(qs_dd(i, 1, f) == bs_map(i, Multiplicity(1), partial(i, f)) &&
                        qs_dd(i, 1, f) == bs_map(i + 1, Multiplicity(1), partial(i, f)),
                    tag);
    }

    for (int m = 1; m <= 3; ++m) {
      for (int j = 1; j <= 3; ++j) {
        for (int i = j + 1; i <= j + 3; ++i) {
          thompson.expect(qs_dd(i, m, qs_dd(j, m, f)) == qs_dd(j, m, qs_dd(i + m, m, f)),
                          tag + ", m=" + std::to_string(m) + ", i=" + std::to_string(i) +
                              ", j=" + std::to_string(j));
        }
      }
    }

    for (int j = 1; j <= 3; ++j) {
      for (int i = j + 1; i <= j + 3; ++i) {
        winc.expect(slide_extractor(i, Multiplicity(1),
                                    slide_extractor(j, Multiplicity(1), f))
                        .is_zero(),
                    tag);
      }
    }

    // Sum x_i R_i d_i f = f - R_1 f.
    Polynomial lhs;
    for (int i = 1; i <= f.support_bound(); ++i) {
      lhs += Polynomial::var(i) * bs_map(i, Multiplicity(1), partial(i, f));
    }
    lemma.expect(lhs == f - bs_map(1, Multiplicity(1), f), tag);

    // Sum_{r>=1} (R_{r+1}^inf - R_r^inf) f = f on P+.
    Polynomial fp = f - Polynomial(f.constant_term());
    Polynomial tsum;
    for (int i = 1; i <= fp.support_bound() + 1; ++i) {
      tsum += bs_map(i + 1, kInf, fp) - bs_map(i, kInf, fp);
    }
    telescope.expect(tsum == fp, tag);

    // Leibniz: D_i(fg) = D_i(f) R_{i+1}^inf R_i(g) + R_{i+1}^inf(f) D_i(g).
    Polynomial g = random_hom(gen, o);
    for (int i = 1; i <= o.vars; ++i) {
      Polynomial want =
          slide_extractor(i, Multiplicity(1), f) *
              bs_map(i + 1, kInf, bs_map(i, Multiplicity(1), g)) +
          bs_map(i + 1, kInf, f) * slide_extractor(i, Multiplicity(1), g);
      leibniz.expect(slide_extractor(i, Multiplicity(1), f * g) == want,
                     tag + ", g = " + g.str());
    }
  }

  nilsq.report(r, "nil-Coxeter: d_i d_i = 0");
  farcomm.report(r, "nil-Coxeter: far commutation");
  braid.report(r, "nil-Coxeter: braid relation");
  thompson.report(r, "m-Thompson: T_i T_j = T_j T_{i+m}, i > j, m in {1,2,3}");
  winc.report(r, "winc: D_i D_j = 0, i > j");
  routes.report(r, "three-route agreement for T_i");
  lemma.report(r, "sum x_i R_i d_i = id - R_1");
  telescope.report(r, "telescope: sum (R_{r+1}^inf - R_r^inf) = id on P+");
  leibniz.report(r, "Leibniz rule for D_i");

  // Slide polynomials are closed under R_j up to basis membership.
  Tally closure;
  for (const Word& a : winc_words(4, 4, 1)) {
    for (int j = 1; j <= 5; ++j) {
      Polynomial h = bs_map(j, Multiplicity(1), slide(a, Multiplicity(1)));
      if (h.is_zero()) continue;
      Expansion e = slide_expand(h, Multiplicity(1));
      bool single = e.coeffs.size() == 1 && e.coeffs.begin()->second == 1;
      closure.expect(single, "a = slide word, j = " + std::to_string(j));
    }
  }
  closure.report(r, "R_j of a slide polynomial is a slide polynomial or 0");
  return r;
}

Report suite_creation(const SuiteOptions& o) {
  Report r;
  r.title = "creation (seed=" + std::to_string(o.seed) + ", trials=" +
            std::to_string(o.trials) + ")";
  PolyGen gen(o.seed);
  std::vector<Polynomial> samples;
  std::uniform_int_distribution<int> d(1, o.deg);
  for (int t = 0; t < o.trials; ++t) {
    samples.push_back(gen.positive_part(o.vars, d(gen.engine())));
  }

  auto pair = [&](std::string name, ops::OpFamily x, ops::OpFamily y, int margin) {
    DdPairInstance inst;
    inst.name = std::move(name);
    inst.dd = std::move(x);
    inst.creator = std::move(y);
    inst.index_margin = margin;
    r.merge(verify_creation(inst, samples));
  };

  pair("(d, ZxR)", ops::partial_family(), ops::schubert_creator_family(), 1);
  pair("(T, Zx)", ops::qs_dd_family(1), ops::forest_creator_family(1), 1);
  for (int m : {2, 3}) {
    pair("(T^" + std::to_string(m) + ", Z^(" + std::to_string(m) + ")x)",
         ops::qs_dd_family(m), ops::forest_creator_family(m), m);
  }
  pair("(d, B)", ops::partial_family(), ops::slide_creator_family(Multiplicity(1)), 1);
  pair("(T, B)", ops::qs_dd_family(1), ops::slide_creator_family(Multiplicity(1)), 1);
  pair("(D, B)", ops::slide_extractor_family(Multiplicity(1)),
       ops::slide_creator_family(Multiplicity(1)), 1);
  for (int m : {2, 3}) {
    pair("(T^" + std::to_string(m) + ", B^" + std::to_string(m) + ")",
         ops::qs_dd_family(m), ops::slide_creator_family(Multiplicity(m)), m);
    pair("(D^" + std::to_string(m) + ", B^" + std::to_string(m) + ")",
         ops::slide_extractor_family(Multiplicity(m)),
         ops::slide_creator_family(Multiplicity(m)), m);
  }

  // Deliberately corrupted creator (Z dropped from ZxR) must be caught.
  DdPairInstance bad;
  bad.name = "(d, xR) corrupted";
  bad.dd = ops::partial_family();
  bad.creator = [](int i, const Polynomial& f) {
    return Polynomial::var(i) * bs_map(i, Multiplicity(1), f);
  };
  Polynomial x2 = Polynomial::var(2);
  Report bad_report = verify_creation(bad, {x2});
  Polynomial bad_sum;
  for (int i = 1; i <= 2; ++i) bad_sum += bad.creator(i, partial(i, x2));
  bool detected = !bad_report.all_pass() && bad_sum == x2 - Polynomial::var(1);
  r.add("corrupted creator (Z removed) detected on f = x2", detected,
        detected ? "" : "sum = " + bad_sum.str());
  return r;
}

Report suite_duality(const SuiteOptions& o) {
  Report r;
  r.title = "duality (exhaustive small sets)";
  bool restricted = o.m.has_value();
  if (!restricted) r.merge(verify_duality(schubert_instance(4)));
  std::vector<int> ms;
  if (restricted && !o.m->is_inf()) {
    ms.push_back(o.m->value());
  } else if (!restricted) {
    ms = {1, 2};
  }
  for (int m : ms) {
    r.merge(verify_duality(forest_instance(m, 3, 4)));
    r.merge(verify_duality(slide_instance(Multiplicity(m), 3, 3)));
  }
  return r;
}

Report suite_expansion(const SuiteOptions& o) {
  Report r;
  r.title = "expansion (seed=" + std::to_string(o.seed) + ", trials=" +
            std::to_string(o.trials) + ")";
  PolyGen gen(o.seed);
  Tally roundtrip, filtration;
  const Multiplicity kMs[] = {Multiplicity(1), Multiplicity(2), kInf};
  for (int t = 0; t < o.trials; ++t) {
    Polynomial f = random_hom(gen, o);
    for (Multiplicity m : kMs) {
      Expansion e = slide_expand(f, m);
      std::string tag = "m=" + m.str() + ", f = " + f.str();
      roundtrip.expect(e.evaluate() == f, tag);
      int bound = f.support_bound();
      for (const auto& [idx, c] : e.coeffs) {
        for (int i : idx) filtration.expect(i <= bound, tag);
      }
    }
  }
  roundtrip.report(r, "evaluate(slide_expand(f, m)) = f, m in {1,2,inf}");
  filtration.report(r, "expansion indices within support_bound(f)");

  Tally positive;
  std::vector<Word> words = winc_words(3, 3);
  for (const Word& a : words) {
    for (const Word& b : words) {
      Expansion e = slide_product_expand(a, b);
      for (const auto& [idx, c] : e.coeffs) {
        positive.expect(c > 0, "negative coefficient in a product expansion");
      }
    }
  }
  positive.report(r, "slide products are slide-positive (entries <= 3, length <= 3)");
  return r;
}

Report suite_kostka(const SuiteOptions&) {
  Report r;
  r.title = "kostka";
  Tally agree, signed_free;
  for (const Word& a : winc_words(4, 5)) {
    Polynomial mono(1);
    for (int i : a) mono *= Polynomial::var(i);
    Expansion direct = monomial_to_slide(a);
    Expansion oracle = slide_expand(mono, Multiplicity(1));
    std::string tag = "a has length " + std::to_string(a.size());
    agree.expect(direct.coeffs == oracle.coeffs && direct.evaluate() == mono, tag);
    for (const auto& [idx, c] : direct.coeffs) {
      signed_free.expect(c == 1 || c == -1, tag);
    }
  }
  agree.report(r, "monomial_to_slide agrees with the extraction oracle (entries <= 5, length <= 4)");
  signed_free.report(r, "monomial expansions are signed multiplicity-free");
  return r;
}

Report suite_pipedreams(const SuiteOptions& o) {
  Report r;
  r.title = "pipedreams (seed=" + std::to_string(o.seed) + ")";
  Tally tracer, agree4;
  for (const Permutation& w : symmetric_group(4)) {
    std::vector<PipeDream> dreams = pipe_dreams(w, o.max_staircase);
    for (const PipeDream& pd : dreams) {
      TraceResult tr = trace_pipes(pd.n, pd.crosses);
      tracer.expect(tr.reduced && tr.w == w, "w = " + w.str());
    }
    agree4.expect(pipe_dream_polynomial(w, o.max_staircase) == schubert(w), "w = " + w.str());
  }
  tracer.report(r, "every enumerated dream is reduced and traces to w (S4)");
  agree4.report(r, "pipe dream polynomial = Schubert polynomial, all of S4");

  Tally agree5;
  std::vector<Permutation> s5 = symmetric_group(5);
  std::mt19937_64 rng(o.seed);
  std::uniform_int_distribution<std::size_t> pick(0, s5.size() - 1);
  for (int t = 0; t < 25; ++t) {
    const Permutation& w = s5[pick(rng)];
    agree5.expect(pipe_dream_polynomial(w, o.max_staircase) == schubert(w), "w = " + w.str());
  }
  agree5.report(r, "pipe dream polynomial = Schubert polynomial, 25 random w in S5");
  return r;
}

Report suite_all(const SuiteOptions& o) {
  Report r;
  r.title = "all";
  r.merge(suite_relations(o));
  r.merge(suite_creation(o));
  r.merge(suite_duality(o));
  r.merge(suite_expansion(o));
  r.merge(suite_kostka(o));
  r.merge(suite_pipedreams(o));
  return r;
}

}  // namespace ddcalc
