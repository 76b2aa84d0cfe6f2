#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "cindkit/irs.h"

#include <map>
#include <memory>
#include <random>
#include <string>

using namespace cindkit;

namespace {

Rational pow2r(long long e) {  // 2^e for e <= 0
  Rational r(1);
  for (long long i = 0; i < -e; ++i) r *= Rational(1, 2);
  return r;
}

AtomicIRS half_half() {
  return AtomicIRS({IrsAtom{Rational(1, 2), SubgroupDescriptor::trivial()},
                    IrsAtom{Rational(1, 2), SubgroupDescriptor::whole()}});
}

}  // namespace

TEST_CASE("certified values") {
  CertifiedValue half = CertifiedValue::exact(Rational(1, 2));
  CHECK(half.str() == "1/2");
  CHECK(CertifiedValue::zero().kind == CertifiedValue::Kind::ExactZero);
  CHECK(CertifiedValue::exact(Rational(0)).kind == CertifiedValue::Kind::ExactZero);
  CHECK(CertifiedValue::zero().definitely_equal(CertifiedValue::exact(Rational(0))));
  CertifiedValue iv = CertifiedValue::interval(Rational(1, 3), Rational(1, 2));
  CHECK(iv.str() == "[1/3, 1/2]");
  CHECK(CertifiedValue::interval(Rational(1, 4), Rational(1, 4)).kind ==
        CertifiedValue::Kind::Exact);
  CHECK(half.definitely_equal(half));
  CHECK(half.definitely_distinct(CertifiedValue::exact(Rational(1, 3))));
  CHECK(!half.definitely_distinct(iv));
  CHECK(!iv.definitely_equal(half));
  CHECK(iv.definitely_distinct(CertifiedValue::exact(Rational(1, 8))));
  CHECK_THROWS_AS(CertifiedValue::interval(Rational(1, 2), Rational(1, 3)),
                  std::invalid_argument);
}

TEST_CASE("atomic measures and basic evaluation") {
  CHECK_THROWS_AS(AtomicIRS({IrsAtom{Rational(1, 2), SubgroupDescriptor::whole()}}),
                  std::invalid_argument);
  CHECK_THROWS_AS(AtomicIRS({IrsAtom{Rational(-1, 2), SubgroupDescriptor::whole()},
                             IrsAtom{Rational(3, 2), SubgroupDescriptor::whole()}}),
                  std::invalid_argument);

  AtomicIRS theta = half_half();
  CHECK(theta.str() == "1/2@trivial + 1/2@whole");
  CHECK(eval_basic(theta, {Element(3LL)}) == Rational(1, 2));
  CHECK(eval_basic(theta, {Element(0LL)}) == 1);
  CHECK(eval_basic(theta, {}) == 1);
  CHECK(kernel_contains(theta, Element(0LL)));
  CHECK(!kernel_contains(theta, Element(3LL)));

  auto rel = std::make_shared<SymmetrizedSet>(
      SymmetrizedSet::symmetrize({Word::parse("a b a b^2")}));
  AtomicIRS wordy = AtomicIRS::dirac(SubgroupDescriptor::closure_of_words(rel));
  CHECK_THROWS_AS(eval_basic(wordy, {Element(Word::parse("a"))}), std::runtime_error);
}

TEST_CASE("products over classified tails") {
  FactorTail all_one;
  all_one.kind = FactorTail::Kind::AllOne;
  all_one.exceptional = {{0, Rational(1, 2)}, {1, Rational(1, 3)}};
  CHECK(product_over_tail(all_one).definitely_equal(CertifiedValue::exact(Rational(1, 6))));

  FactorTail constant;
  constant.kind = FactorTail::Kind::ConstantBelowOne;
  constant.param = Rational(3, 4);
  CHECK(product_over_tail(constant).kind == CertifiedValue::Kind::ExactZero);
  constant.param = Rational(1);
  CHECK_THROWS_AS(product_over_tail(constant), std::logic_error);

  FactorTail summable;
  summable.kind = FactorTail::Kind::SummableDeficit;
  summable.param = Rational(1, 2);
  CertifiedValue v = product_over_tail(summable);
  CHECK(v.kind == CertifiedValue::Kind::Interval);
  CHECK(v.lo == Rational(1, 2));
  CHECK(v.hi == Rational(1));

  summable.exceptional = {{0, Rational(1, 2)}};
  v = product_over_tail(summable);
  CHECK(v.lo == Rational(1, 4));
  CHECK(v.hi == Rational(1, 2));

  summable.param = Rational(2);  // bound too weak to say anything below
  v = product_over_tail(summable);
  CHECK(v.lo == Rational(0));
  CHECK(v.hi == Rational(1, 2));

  FactorTail dead;
  dead.kind = FactorTail::Kind::AllOne;
  dead.exceptional = {{3, Rational(0)}};
  CHECK(product_over_tail(dead).kind == CertifiedValue::Kind::ExactZero);
}

TEST_CASE("free product lambda mixtures") {
  auto inst = parse_instance("freeprod:Z2,Z");
  Element c = inst->parse_element("[g0,h0]");

  Theta t12 = parse_theta("lambda:1/2", *inst);
  CHECK(theta_eval(*inst, t12, {c}) == Rational(1, 2));
  CHECK(theta_coinduce(*inst, t12, {c}).definitely_equal(CertifiedValue::exact(Rational(1, 16))));
  CHECK(theta_coinduce(*inst, parse_theta("lambda:1/3", *inst), {c}).str() == "1/81");
  CHECK(theta_coinduce(*inst, parse_theta("lambda:1/2;weakmix", *inst), {c}).str() ==
        "1/8503056");

  CHECK(theta_coinduce(*inst, t12, {inst->identity()})
            .definitely_equal(CertifiedValue::exact(Rational(1))));
  CHECK(theta_coinduce(*inst, t12, {inst->parse_element("g1")}).kind ==
        CertifiedValue::Kind::ExactZero);

  CHECK_THROWS_AS(parse_theta("lambda:0/1", *inst), std::invalid_argument);
  auto w = parse_instance("wreath:Z2,Z");
  CHECK_THROWS_AS(parse_theta("lambda:1/2", *w), std::runtime_error);
}

TEST_CASE("truncated chains on the wreath") {
  auto inst = parse_instance("wreath:Z2,Z");
  auto& w = dynamic_cast<const Wreath&>(*inst);
  Element lamp = w.delta_at(0, 1);

  Theta k6 = parse_theta("chain:2^-k-1;K=6", *inst);
  Rational expect(1);
  for (int j = 0; j < 6; ++j) expect *= Rational(1) - pow2r(-(j + 1));
  CHECK(expect == Rational(615195, 2097152));
  CHECK(theta_coinduce(*inst, k6, {lamp}).definitely_equal(CertifiedValue::exact(expect)));

  Theta ka = parse_theta("chain:2^-k-1;K=6;a=1/8", *inst);
  Rational expa(1, 8);
  for (int j = 1; j < 6; ++j) expa *= Rational(1) - pow2r(-(j + 1));
  CHECK(theta_coinduce(*inst, ka, {lamp}).definitely_equal(CertifiedValue::exact(expa)));

  // longer chains only shrink the value
  auto v7 = theta_coinduce(*inst, parse_theta("chain:2^-k-1;K=7", *inst), {lamp});
  CHECK(v7.hi < expect);

  // the base lamp can sit anywhere
  Theta shifted = parse_theta("chain:2^-k-1;K=4;pos=3", *inst);
  auto a = theta_coinduce(*inst, shifted, {w.delta_at(3, 1)});
  auto b = theta_coinduce(*inst, parse_theta("chain:2^-k-1;K=4", *inst), {lamp});
  CHECK(a.definitely_equal(b));

  // a larger condition set can only lower the value
  auto v1 = theta_coinduce(*inst, k6, {lamp});
  auto v2 = theta_coinduce(*inst, k6, {lamp, w.delta_at(1, 1)});
  CHECK(v2.hi <= v1.hi);

  CHECK_THROWS_AS(parse_theta("chain:2^-k-1;a=1/8", *inst), std::invalid_argument);
  CHECK_THROWS_AS(parse_theta("chain:3^-k", *inst), std::invalid_argument);
  auto ints = parse_instance("intchain:2");
  CHECK_THROWS_AS(parse_theta("chain:2^-k-1;K=6", *ints), std::runtime_error);
}

TEST_CASE("classified tails agree with direct factor sampling") {
  auto inst = parse_instance("wreath:Z2,Z");
  auto& w = dynamic_cast<const Wreath&>(*inst);
  Element lamp = w.delta_at(0, 1);
  AtomicIRS atoms = chain_theta(*inst, lamp, 5);

  FactorTail tail = classify_factors(*inst, atoms, {lamp});
  CHECK(tail.kind == FactorTail::Kind::AllOne);
  std::map<long long, Rational> exc(tail.exceptional.begin(), tail.exceptional.end());
  for (long long i = 0; i < 30; ++i) {
    Rational direct = eval_basic(atoms, {inst->conj(inst->transversal(i), lamp)});
    Rational listed = exc.count(i) ? exc[i] : Rational(1);
    CHECK(direct == listed);
  }
}

TEST_CASE("ideal chains") {
  auto inst = parse_instance("wreath:Z2,Z");
  auto& w = dynamic_cast<const Wreath&>(*inst);
  Element lamp = w.delta_at(0, 1);

  Theta ideal = parse_theta("chain:2^-k-1", *inst);
  CHECK(theta_eval(*inst, ideal, {lamp}) == Rational(1, 2));
  CHECK(theta_eval(*inst, ideal, {w.delta_at(9, 1)}) == Rational(1) - pow2r(-19));
  CHECK(theta_eval(*inst, ideal, {}) == Rational(1));

  CertifiedValue v = theta_coinduce(*inst, ideal, {lamp});
  CHECK(v.kind == CertifiedValue::Kind::Interval);
  CHECK(v.lo > 0);
  CHECK(v.hi <= Rational(1, 2));
  CHECK(v.lo <= v.hi);

  CertifiedValue vw = theta_coinduce(*inst, parse_theta("chain:2^-k-1;window=80", *inst), {lamp});
  CHECK(vw.lo >= v.lo);
  CHECK(vw.hi <= v.hi);
  CHECK(vw.hi - vw.lo < v.hi - v.lo);

  WreathElem sh;
  sh.shift = 1;
  CHECK(theta_coinduce(*inst, ideal, {Element(sh)}).kind == CertifiedValue::Kind::ExactZero);
}

TEST_CASE("co-induction is discontinuous along theta_n") {
  auto inst = parse_instance("wreath:Z2,Z");
  Element lamp = dynamic_cast<const Wreath&>(*inst).delta_at(0, 1);
  for (int n = 1; n <= 10; ++n) {
    Theta tn = parse_theta("mix:2^-n@trivial+rest@whole;n=" + std::to_string(n), *inst);
    CHECK(theta_eval(*inst, tn, {lamp}) == Rational(1) - pow2r(-n));  // converges to 1
    CHECK(theta_coinduce(*inst, tn, {lamp}).kind == CertifiedValue::Kind::ExactZero);
  }
  Theta dg = parse_theta("dirac:whole", *inst);
  CHECK(theta_coinduce(*inst, dg, {lamp}).definitely_equal(CertifiedValue::exact(Rational(1))));
}

TEST_CASE("dirac measures and the core condition") {
  auto inst = parse_instance("wreath:Z2,Z");
  auto& w = dynamic_cast<const Wreath&>(*inst);
  Element lamp = w.delta_at(0, 1);

  Theta dt = parse_theta("dirac:trivial", *inst);
  CHECK(theta_coinduce(*inst, dt, {lamp}).kind == CertifiedValue::Kind::ExactZero);
  CHECK(theta_coinduce(*inst, dt, {}).definitely_equal(CertifiedValue::exact(Rational(1))));

  WreathElem sh;
  sh.shift = 2;
  Theta dw = parse_theta("dirac:whole", *inst);
  CHECK(theta_coinduce(*inst, dw, {Element(sh)}).kind == CertifiedValue::Kind::ExactZero);

  // constant factors on the sign-flip ambient instance
  auto inf = parse_instance("intchain:inf");
  CHECK(theta_coinduce(*inf, parse_theta("mix:1/4@trivial+rest@whole", *inf), {Element(5LL)})
            .kind == CertifiedValue::Kind::ExactZero);
  CHECK(theta_coinduce(*inf, parse_theta("dirac:whole", *inf), {Element(5LL)})
            .definitely_equal(CertifiedValue::exact(Rational(1))));
}

TEST_CASE("values do not depend on the transversal enumeration") {
  auto wstd = parse_instance("wreath:Z2,Z");
  auto walt = parse_instance("wreath:Z2,Z;order=alt");
  auto& ws = dynamic_cast<const Wreath&>(*wstd);
  auto& wa = dynamic_cast<const Wreath&>(*walt);
  std::mt19937 rng(23);
  std::uniform_int_distribution<long long> pos(-5, 5);
  for (int it = 0; it < 25; ++it) {
    std::vector<Element> fs, fa;
    int m = 1 + (it % 3);
    for (int i = 0; i < m; ++i) {
      long long p = pos(rng);
      fs.push_back(ws.delta_at(p, 1));
      fa.push_back(wa.delta_at(p, 1));
    }
    for (long long K : {4LL, 6LL}) {
      std::string spec = "chain:2^-k-1;K=" + std::to_string(K);
      auto a = theta_coinduce(*wstd, parse_theta(spec, *wstd), fs);
      auto b = theta_coinduce(*walt, parse_theta(spec, *walt), fa);
      CHECK(a.definitely_equal(b));
    }
  }

  auto fstd = parse_instance("freeprod:Z2,Z");
  auto falt = parse_instance("freeprod:Z2,Z;order=alt");
  std::mt19937 rng2(29);
  for (int it = 0; it < 25; ++it) {
    Element g = fstd->random_gamma(rng2);
    auto a = theta_coinduce(*fstd, parse_theta("lambda:1/3", *fstd), {g});
    auto b = theta_coinduce(*falt, parse_theta("lambda:1/3", *falt), {g});
    CHECK(a.definitely_equal(b));
  }
}

TEST_CASE("nonatomicity verdicts") {
  auto inst = parse_instance("wreath:Z2,Z");
  auto& w = dynamic_cast<const Wreath&>(*inst);
  Element lamp = w.delta_at(0, 1);

  auto v1 = nonatomicity_verdict(*inst, parse_theta("chain:2^-k-1", *inst), std::nullopt);
  CHECK(v1.kind == NonatomicityVerdict::Kind::NonAtomic);
  CHECK(v1.witness == element_str(lamp));

  auto v2 = nonatomicity_verdict(*inst, parse_theta("chain:2^-k-1;K=5", *inst), lamp);
  CHECK(v2.kind == NonatomicityVerdict::Kind::NonAtomic);

  auto v3 = nonatomicity_verdict(*inst, parse_theta("mix:1/4@trivial+rest@whole", *inst), lamp);
  CHECK(v3.kind == NonatomicityVerdict::Kind::Inconclusive);

  auto v4 = nonatomicity_verdict(*inst, parse_theta("dirac:whole", *inst), std::nullopt);
  CHECK(v4.kind == NonatomicityVerdict::Kind::DiracAtom);
  CHECK(v4.atom == "whole");
  auto v5 = nonatomicity_verdict(*inst, parse_theta("dirac:trivial", *inst), std::nullopt);
  CHECK(v5.kind == NonatomicityVerdict::Kind::DiracAtom);

  auto inf = parse_instance("intchain:inf");
  auto v6 =
      nonatomicity_verdict(*inf, parse_theta("mix:1/4@trivial+rest@whole", *inf), std::nullopt);
  CHECK(v6.kind == NonatomicityVerdict::Kind::DiracAtom);
  CHECK(v6.atom == "trivial");

  auto v7 = nonatomicity_verdict(*inst, parse_theta("chain:2^-k-1;K=5", *inst), std::nullopt);
  CHECK(v7.kind == NonatomicityVerdict::Kind::Inconclusive);
  CHECK(!v7.reason.empty());

  WreathElem sh;
  sh.shift = 1;
  auto v8 = nonatomicity_verdict(*inst, parse_theta("chain:2^-k-1;K=5", *inst), Element(sh));
  CHECK(v8.kind == NonatomicityVerdict::Kind::Inconclusive);
  auto v9 = nonatomicity_verdict(*inst, parse_theta("chain:2^-k-1", *inst), inst->identity());
  CHECK(v9.kind == NonatomicityVerdict::Kind::Inconclusive);

  auto finite = parse_instance("intchain:4");
  CHECK_THROWS_AS(nonatomicity_verdict(*finite, parse_theta("dirac:whole", *finite), std::nullopt),
                  std::invalid_argument);
}

TEST_CASE("pushforward along a hom witness") {
  AtomicIRS theta = half_half();
  HomWitness ident{"id", [](const Element& x) { return x; }};
  CHECK(pushforward_value(ident, theta, {Element(5LL)}) ==
        eval_basic(theta, {Element(5LL)}));
  HomWitness collapse{"collapse", [](const Element&) { return Element(0LL); }};
  CHECK(pushforward_value(collapse, theta, {Element(5LL)}) == 1);
}

TEST_CASE("parameter families stay pairwise distinct") {
  auto fp = parse_instance("freeprod:Z2,Z");
  auto r = distinguish_family(*fp, {Rational(1, 2), Rational(1, 3), Rational(1, 4)}, false, 16);
  CHECK(r.pairwise_distinct);
  REQUIRE(r.rows.size() == 3);
  CHECK(r.rows[0].value.str() == "1/16");
  CHECK(r.rows[1].value.str() == "1/81");
  CHECK(r.rows[2].value.str() == "1/256");
  auto rw = distinguish_family(*fp, {Rational(1, 2)}, true, 16);
  CHECK(rw.rows[0].value.str() == "1/8503056");

  auto w = parse_instance("wreath:Z2,Z");
  auto rc = distinguish_family(*w, {Rational(1, 4), Rational(1, 3)}, false, 6);
  CHECK(rc.pairwise_distinct);
  Rational tailp(1);
  for (int j = 1; j < 6; ++j) tailp *= Rational(1) - pow2r(-(j + 1));
  CHECK(rc.rows[0].value.definitely_equal(CertifiedValue::exact(Rational(1, 4) * tailp)));
  CHECK(rc.rows[1].value.definitely_equal(CertifiedValue::exact(Rational(1, 3) * tailp)));

  CHECK_THROWS_AS(distinguish_family(*parse_instance("intchain:2"), {Rational(1, 2)}, false, 8),
                  std::runtime_error);
}
