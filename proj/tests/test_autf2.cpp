#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "cindkit/autf2.h"

#include <random>
#include <set>

using namespace cindkit;

TEST_CASE("generator images") {
  CHECK(aut_phi().image_a() == Word::parse("a b"));
  CHECK(aut_phi().image_b() == Word::parse("b"));
  CHECK(aut_psi().image_a() == Word::parse("a"));
  CHECK(aut_psi().image_b() == Word::parse("b a"));
  CHECK(aut_chi().image_b() == Word::parse("b^-1"));
  CHECK(aut_xi().image_a() == Word::parse("a^-1"));
  CHECK(aut_tau().image_a() == Word::parse("b"));
  CHECK(aut_tau().image_b() == Word::parse("a"));
}

TEST_CASE("compose applies the right factor first") {
  Endo f = compose(aut_phi(), aut_tau());
  CHECK(f.apply(Word::parse("a")) == Word::parse("b"));
  CHECK(f.apply(Word::parse("b")) == Word::parse("a b"));
  CHECK(f.provenance_str() == "phi tau");
}

TEST_CASE("apply is a homomorphism") {
  std::mt19937 rng(21);
  std::vector<Endo> ops = enumerate_frplus(3);
  ops.push_back(compose(aut_xi(), aut_phi()));
  ops.push_back(compose(aut_tau(), compose(aut_chi(), aut_psi())));
  std::uniform_int_distribution<int> pick(0, static_cast<int>(ops.size()) - 1);
  std::uniform_int_distribution<int> code(0, 3);
  for (int it = 0; it < 500; ++it) {
    std::vector<Letter> xs(it % 9), ys(it % 7);
    for (Letter& c : xs) c = static_cast<Letter>(code(rng));
    for (Letter& c : ys) c = static_cast<Letter>(code(rng));
    Word x = Word::from_letters(xs), y = Word::from_letters(ys);
    const Endo& f = ops[pick(rng)];
    CHECK(f.apply(x * y) == f.apply(x) * f.apply(y));
    CHECK(f.apply(x.inverse()) == f.apply(x).inverse());
  }
}

TEST_CASE("positive monoid enumeration counts") {
  CHECK(enumerate_frplus(0).size() == 1);
  CHECK(enumerate_frplus(1).size() == 3);
  CHECK(enumerate_frplus(2).size() == 7);
  CHECK(enumerate_frplus(3).size() == 15);
  CHECK(enumerate_frplus(4).size() == 31);
  CHECK(enumerate_frplus(2)[0] == Endo());

  // extensionally distinct
  std::set<std::pair<std::string, std::string>> images;
  for (const Endo& f : enumerate_frplus(5))
    images.insert({f.image_a().str(), f.image_b().str()});
  CHECK(images.size() == enumerate_frplus(5).size());
}

TEST_CASE("growth additivity on the positive monoid") {
  // For rho in Fr+ the generator images end/start without cancellation, so
  // lengths add over positive words.
  for (const Endo& f : enumerate_frplus(8)) {
    CHECK(f.apply(Word::parse("a b")).length() == growth(f));
    CHECK(f.apply(Word::parse("b a")).length() == growth(f));
    CHECK(f.apply(Word::parse("a^2 b^3")).length() ==
          2 * f.image_a().length() + 3 * f.image_b().length());
  }
}

TEST_CASE("transversal truncation counts") {
  CHECK(transversal_R(0).size() == 8);
  CHECK(transversal_R(1).size() == 40);
  CHECK(transversal_R(2).size() == 104);
  CHECK(transversal_R(3).size() == 232);
  CHECK(transversal_R(0)[0] == Endo());

  // pairwise distinct as maps
  std::set<std::pair<std::string, std::string>> images;
  for (const Endo& f : transversal_R(2)) images.insert({f.image_a().str(), f.image_b().str()});
  CHECK(images.size() == 104);
}

TEST_CASE("classification by provenance") {
  CHECK(classify(Endo()).cls == FrClass::Identity);
  CHECK(classify(aut_phi()).cls == FrClass::APhi0);
  CHECK(classify(compose(aut_phi(), aut_phi())).cls == FrClass::APhi0);
  CHECK(classify(aut_psi()).cls == FrClass::APsi0);
  CHECK(classify(compose(aut_phi(), aut_psi())).cls == FrClass::A1);
  CHECK(classify(compose(aut_psi(), aut_phi())).cls == FrClass::A1);
  CHECK(classify(compose(aut_phi(), aut_psi())).leftmost_phi);
  CHECK(classify(compose(aut_psi(), aut_phi())).leftmost_psi);
}

TEST_CASE("inverses from provenance") {
  std::vector<Endo> reps = transversal_R(2);
  for (const Endo& f : reps) {
    Endo g = f.inverse();
    CHECK(compose(f, g) == Endo());
    CHECK(compose(g, f) == Endo());
  }
}

TEST_CASE("inner word recovery") {
  auto conj_by = [](const Word& u) {
    return Endo(conjugate(u.inverse(), Word::parse("a")), conjugate(u.inverse(), Word::parse("b")));
  };
  for (const char* text : {"a", "b^-1", "a b", "b a^-2 b", "a b a^-1", "a^3 b^2 a^-1 b"}) {
    Word u = Word::parse(text);
    auto got = inner_word(conj_by(u));
    REQUIRE(got.has_value());
    CHECK(*got == u);
  }
  CHECK(inner_word(conj_by(Word(2))) == Word(2));  // identity is conjugation by 1
  CHECK(!inner_word(aut_phi()).has_value());
  CHECK(!inner_word(aut_xi()).has_value());
  CHECK(!inner_word(compose(aut_tau(), aut_psi())).has_value());
}

TEST_CASE("provenance parsing") {
  CHECK(parse_provenance("phi^2") == compose(aut_phi(), aut_phi()));
  CHECK(parse_provenance("xi phi psi") == compose(aut_xi(), compose(aut_phi(), aut_psi())));
  CHECK(parse_provenance("1") == Endo());
  CHECK(parse_provenance("") == Endo());
  CHECK_THROWS_AS(parse_provenance("rho"), std::invalid_argument);
  CHECK_THROWS_AS(parse_provenance("phi^0"), std::invalid_argument);
  Endo f = parse_provenance("tau chi psi^2");
  CHECK(parse_provenance(f.provenance_str()) == f);
}
